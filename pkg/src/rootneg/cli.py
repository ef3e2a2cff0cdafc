"""JSON command line front end for the library.

Every subcommand prints exactly one JSON document to stdout.  Exit codes
carry plumbing only: 0 means the computation ran (verdicts, including
negative ones, live in the JSON), 2 means bad input, 3 means a library
invariant failed.  Output is deterministic: fixed key order, no floats,
byte-identical across reruns of the same invocation.

Serialization conventions: rationals are "p/q" strings (integers print as
"p"); derived constants (group orders, lattice indices, bounds, divisor
chains) are decimal strings; roots, words, and integer matrices are JSON
integer arrays; Weyl group elements appear as 1-based reduced words.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction as Q
from typing import Callable, Optional, Sequence

from .lattice import smith_normal_form
from .negativity import (
    NegativityQuery,
    certify_exponent,
    check_class_negativity,
    check_negativity,
    rank_one_bound,
    verify_fundamental_lemma,
)
from .params import (
    SubspaceBasis,
    c_lambda,
    edge,
    equivalence_class,
    gallery_class,
    reduced_word,
)
from .rootsys import (
    WEYL_ORDER_LIMIT,
    CapacityError,
    Parameter,
    RootSystem,
    build_root_system,
    dual,
    weyl_order,
)
from .subsystems import _class_divisors, full_rank_subsystems, n_of_subsystem
from .verification import run_all

JsonDoc = dict


def _q_str(x) -> str:
    return str(Q(x))


def _q_list(xs) -> list[str]:
    return [_q_str(x) for x in xs]


def _q_rows(rows) -> list[list[str]]:
    return [_q_list(row) for row in rows]


def _parse_q_list(text: str, what: str) -> tuple[Q, ...]:
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    try:
        return tuple(Q(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse {what} {text!r} as a list of rationals")


def _parse_q_matrix(text: str, what: str) -> tuple[tuple[Q, ...], ...]:
    text = text.strip()
    if not text:
        return ()
    rows = tuple(_parse_q_list(part, what) for part in text.split(";"))
    if len({len(r) for r in rows}) > 1:
        raise ValueError(f"ragged rows in {what} {text!r}")
    return rows


def _parse_int_matrix(text: str, what: str) -> list[list[int]]:
    rows = _parse_q_matrix(text, what)
    if not rows:
        raise ValueError(f"{what} must have at least one row")
    out = []
    for row in rows:
        if any(x.denominator != 1 for x in row):
            raise ValueError(f"{what} must have integer entries")
        out.append([int(x) for x in row])
    return out


def _parameter(rs: RootSystem, args: argparse.Namespace) -> Parameter:
    re = _parse_q_list(args.re, "--re")
    if len(re) != rs.rank:
        raise ValueError(f"--re needs {rs.rank} coordinates for type {rs.spec}")
    if args.im is None:
        im = tuple(Q(0) for _ in range(rs.rank))
    else:
        im = _parse_q_list(args.im, "--im")
        if len(im) != rs.rank:
            raise ValueError(f"--im needs {rs.rank} coordinates for type {rs.spec}")
    return Parameter(re, im)


def _subspace(rs: RootSystem, text: Optional[str]) -> Optional[SubspaceBasis]:
    if text is None:
        return None
    rows = _parse_q_matrix(text, "--subspace")
    for row in rows:
        if len(row) != rs.rank:
            raise ValueError(f"--subspace vectors need {rs.rank} coordinates")
    return SubspaceBasis(rs.rank, rows)


def _denominator(args: argparse.Namespace) -> int:
    n = args.denominator
    if n < 1:
        raise ValueError("--denominator must be a positive integer")
    return n


def _guard_enumeration(rs: RootSystem) -> None:
    order = weyl_order(rs.spec)
    if order > WEYL_ORDER_LIMIT:
        raise CapacityError(
            f"Weyl group of {rs.spec} has order {order}, "
            f"above the enumeration limit {WEYL_ORDER_LIMIT}"
        )


def _word(rs: RootSystem, w) -> list[int]:
    return list(reduced_word(rs, w))


# ---------------------------------------------------------------------------
# Commands.  Each returns (document, exit_code).

def _cmd_build(args) -> tuple[JsonDoc, int]:
    rs = build_root_system(args.type)
    doc = {
        "type": str(rs.spec),
        "rank": rs.rank,
        "components": [f"{fam}{rank}" for fam, rank in rs.spec.components],
        "cartan": [list(row) for row in rs.cartan],
        "gram": _q_rows(rs.gram),
        "simple_roots": [list(b) for b in rs.simple_roots],
        "positive_root_count": len(rs.positive_roots),
        "positive_roots": [list(b) for b in rs.positive_roots],
        "weyl_order": str(weyl_order(rs.spec)),
        "dual_type": str(dual(rs).spec),
    }
    return doc, 0


def _load_nsigma_cache(cache_dir: str) -> dict:
    path = os.path.join(cache_dir, "nsigma.json")
    if os.path.exists(path):
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    return {}


def _store_nsigma_cache(cache_dir: str, cache: dict) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, "nsigma.json")
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(cache, handle, indent=2, sort_keys=True)
        handle.write("\n")


def _nsigma_entry(rs: RootSystem, method: str) -> dict:
    classes = full_rank_subsystems(rs, method)
    values = [n_of_subsystem(rs, s.roots) for s in classes]
    total = math.lcm(*values) if values else 1
    return {
        "n_sigma": str(total),
        "subsystems": [
            {"label": s.label, "n": str(n)} for s, n in zip(classes, values)
        ],
    }


def _cmd_nsigma(args) -> tuple[JsonDoc, int]:
    rs = build_root_system(args.type)
    key = str(rs.spec)
    entry = None
    cache = {}
    if args.cache_dir:
        cache = _load_nsigma_cache(args.cache_dir)
        entry = cache.get(key)
    if entry is None:
        entry = _nsigma_entry(rs, args.method)
        if args.cache_dir:
            cache[key] = entry
            _store_nsigma_cache(args.cache_dir, cache)
    doc = {"type": key, "n_sigma": entry["n_sigma"], "subsystems": entry["subsystems"]}
    return doc, 0


def _cmd_subsystems(args) -> tuple[JsonDoc, int]:
    rs = build_root_system(args.type)
    classes = full_rank_subsystems(rs, args.method)
    out = []
    for s in classes:
        roots = sorted(s.roots)
        out.append(
            {
                "label": s.label,
                "n": str(n_of_subsystem(rs, s.roots)),
                "divisors": [str(d) for d in _class_divisors(rs, s.roots)],
                "size": len(roots),
                "roots": [list(b) for b in roots],
            }
        )
    doc = {
        "type": str(rs.spec),
        "method": args.method,
        "count": len(out),
        "subsystems": out,
    }
    return doc, 0


def _cmd_class(args) -> tuple[JsonDoc, int]:
    rs = build_root_system(args.type)
    _guard_enumeration(rs)
    lam = _parameter(rs, args)
    n = _denominator(args)
    cls = equivalence_class(rs, lam, n)
    gallery = gallery_class(rs, lam)
    cone = c_lambda(rs, lam)
    e = edge(rs, lam, n)
    doc = {
        "type": str(rs.spec),
        "re": _q_list(lam.re),
        "im": _q_list(lam.im),
        "denominator": n,
        "members": [
            {"word": _word(rs, w), "re": _q_list(mu.re), "im": _q_list(mu.im)}
            for w, mu in cls.members
        ],
        "gallery_size": len(gallery),
        "chamber_count": len(cone),
        "edge_dim": e.dim,
        "edge_basis": _q_rows(e.vectors),
    }
    return doc, 0


def _cmd_gallery(args) -> tuple[JsonDoc, int]:
    rs = build_root_system(args.type)
    _guard_enumeration(rs)
    lam = _parameter(rs, args)
    gallery = gallery_class(rs, lam)
    doc = {
        "type": str(rs.spec),
        "re": _q_list(lam.re),
        "im": _q_list(lam.im),
        "size": len(gallery),
        "chambers": [_word(rs, w) for w in gallery.chambers],
    }
    return doc, 0


def _cmd_edge(args) -> tuple[JsonDoc, int]:
    rs = build_root_system(args.type)
    lam = _parameter(rs, args)
    n = _denominator(args)
    e = edge(rs, lam, n)
    doc = {
        "type": str(rs.spec),
        "re": _q_list(lam.re),
        "im": _q_list(lam.im),
        "denominator": n,
        "dim": e.dim,
        "basis": _q_rows(e.vectors),
    }
    return doc, 0


def _cmd_negativity(args) -> tuple[JsonDoc, int]:
    rs = build_root_system(args.type)
    _guard_enumeration(rs)
    lam = _parameter(rs, args)
    n = _denominator(args)
    basis = _subspace(rs, args.subspace)
    verdict = check_negativity(rs, NegativityQuery(lam, args.mode, basis, n))
    class_ok = check_class_negativity(rs, lam, args.mode, basis, n).ok
    doc = {
        "type": str(rs.spec),
        "re": _q_list(lam.re),
        "im": _q_list(lam.im),
        "mode": args.mode,
        "denominator": n,
        "feasible": verdict.feasible,
        "witness": _q_list(verdict.witness_omega)
        if verdict.witness_omega is not None
        else None,
        "span_basis": [list(b) for b in verdict.span_basis],
        "tight_generators": list(verdict.tight_generators),
        "class_ok": class_ok,
    }
    return doc, 0


def _cmd_fundamental(args) -> tuple[JsonDoc, int]:
    rs = build_root_system(args.type)
    _guard_enumeration(rs)
    lam = _parameter(rs, args)
    n = _denominator(args)
    basis = _subspace(rs, args.subspace)
    report = verify_fundamental_lemma(rs, lam, args.mode, basis, n)
    containing = (
        _word(rs, report.containing_member[0])
        if report.containing_member is not None
        else None
    )
    doc = {
        "type": str(rs.spec),
        "re": _q_list(lam.re),
        "im": _q_list(lam.im),
        "mode": args.mode,
        "denominator": n,
        "vacuous": report.vacuous,
        "edge_dim": report.edge_basis.dim,
        "edge_basis": _q_rows(report.edge_basis.vectors),
        "containing_member_word": containing,
        "re_on_edge_zero": report.re_lambda_on_edge_zero,
        "im_on_edge_zero": report.im_lambda_on_edge_zero,
        "edge_trivial": report.edge_trivial,
        "parabolic_type": report.parabolic.label,
        "n_lattice": str(report.n_lattice),
        "integrality_ok": report.integrality_ok,
    }
    return doc, 0


def _cmd_exponent(args) -> tuple[JsonDoc, int]:
    spherical = _parse_q_matrix(args.spherical, "--spherical")
    mu = _parse_q_list(args.mu, "--mu")
    rho_q = _parse_q_list(args.rhoq, "--rhoq")
    nu = _parse_q_list(args.nu, "--nu")
    if args.n < 1:
        raise ValueError("--n must be a positive integer")
    rank_z = len(mu)
    edge_dims = rank_z - len(spherical)
    cert = certify_exponent(rank_z, spherical, edge_dims, mu, rho_q, nu, args.n)
    doc = {
        "rank_z": rank_z,
        "spherical_count": len(spherical),
        "edge_dims": edge_dims,
        "n": args.n,
        "solvable": cert.solvable,
        "coefficients": _q_list(cert.coefficients)
        if cert.coefficients is not None
        else None,
        "nu": _q_list(cert.nu),
        "lattice_ok": cert.lattice_ok,
        "ds1_ok": cert.ds1_ok,
        "ds2_ok": cert.ds2_ok,
    }
    return doc, 0


def _cmd_rank_one_bound(args) -> tuple[JsonDoc, int]:
    return {"bound": str(rank_one_bound(args.type))}, 0


def _cmd_snf(args) -> tuple[JsonDoc, int]:
    matrix = _parse_int_matrix(args.matrix, "--matrix")
    res = smith_normal_form(matrix)
    doc = {
        "divisors": [str(d) for d in res.divisors],
        "u": [list(row) for row in res.u],
        "d": [list(row) for row in res.d],
        "v": [list(row) for row in res.v],
    }
    return doc, 0


def _cmd_verify(args) -> tuple[JsonDoc, int]:
    results = run_all()
    doc = {
        "ok": all(r.ok for r in results),
        "properties": [
            {
                "name": r.name,
                "ok": r.ok,
                "checked": r.checked,
                "failures": list(r.failures),
            }
            for r in results
        ],
    }
    return doc, 0 if doc["ok"] else 3


_COMMANDS: dict[str, Callable[[argparse.Namespace], tuple[JsonDoc, int]]] = {
    "build": _cmd_build,
    "nsigma": _cmd_nsigma,
    "subsystems": _cmd_subsystems,
    "class": _cmd_class,
    "gallery": _cmd_gallery,
    "edge": _cmd_edge,
    "negativity": _cmd_negativity,
    "fundamental": _cmd_fundamental,
    "exponent": _cmd_exponent,
    "rank-one-bound": _cmd_rank_one_bound,
    "snf": _cmd_snf,
    "verify": _cmd_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--pretty", action="store_true", help="indent the JSON output"
    )

    parser = argparse.ArgumentParser(
        prog="rootneg",
        description="Exact root-system computations with JSON output.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    def add_type(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument(
            "--type",
            required=required,
            help='type string such as "A2", "BC1", or "B3xA1"',
        )

    def add_parameter(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--re", required=True, help="real coordinates, e.g. \"1/2,1/2\""
        )
        p.add_argument(
            "--im", default=None, help="imaginary coordinates (default all 0)"
        )

    def add_denominator(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--denominator",
            type=int,
            default=1,
            help="integrality denominator N (default 1)",
        )

    p = command("build", "summarize a root system")
    add_type(p)

    p = command("nsigma", "least common multiple of full-rank subsystem constants")
    add_type(p)
    p.add_argument(
        "--method",
        choices=("bds", "brute_force"),
        default="bds",
        help="enumeration method (default bds)",
    )
    p.add_argument(
        "--cache-dir", default=None, help="directory for the constants cache"
    )

    p = command("subsystems", "enumerate full-rank subsystems up to conjugacy")
    add_type(p)
    p.add_argument(
        "--method",
        choices=("bds", "brute_force"),
        default="bds",
        help="enumeration method (default bds)",
    )

    p = command("class", "move-equivalence class of a parameter")
    add_type(p)
    add_parameter(p)
    add_denominator(p)

    p = command("gallery", "gallery class of the fundamental chamber")
    add_type(p)
    add_parameter(p)

    p = command("edge", "common kernel of the integral coroots")
    add_type(p)
    add_parameter(p)
    add_denominator(p)

    p = command("negativity", "negativity verdict for one parameter and its class")
    add_type(p)
    add_parameter(p)
    p.add_argument(
        "--mode", required=True, choices=("strict", "weak", "integral")
    )
    p.add_argument(
        "--subspace",
        default=None,
        help='test subspace basis rows, e.g. "1,0;0,1" (weak/integral only)',
    )
    add_denominator(p)

    p = command("fundamental", "edge and lattice consequences of class negativity")
    add_type(p)
    add_parameter(p)
    p.add_argument(
        "--mode", required=True, choices=("strict", "weak", "integral")
    )
    p.add_argument(
        "--subspace",
        default=None,
        help='test subspace basis rows (weak/integral only)',
    )
    add_denominator(p)

    p = command("exponent", "certificate for a leading-exponent expansion")
    p.add_argument(
        "--spherical",
        required=True,
        help='independent vectors as matrix rows, e.g. "1,0;0,1" (may be empty)',
    )
    p.add_argument("--mu", required=True, help="exponent vector")
    p.add_argument("--rhoq", required=True, help="shift vector")
    p.add_argument("--nu", required=True, help="twist vector (echoed)")
    p.add_argument(
        "--n", type=int, default=1, help="integrality denominator N (default 1)"
    )

    p = command("rank-one-bound", "denominator bound for rank-one factors")
    add_type(p, required=False)

    p = command("snf", "Smith normal form of an integer matrix")
    p.add_argument(
        "--matrix", required=True, help='integer matrix literal "a,b;c,d"'
    )

    command("verify", "run the full property suite")

    return parser


#: flags whose values may start with "-" (negative coordinates); they are
#: joined to "--flag=value" form so the parser never mistakes them for options
_VALUE_FLAGS = frozenset(
    ("--re", "--im", "--mu", "--rhoq", "--nu", "--subspace", "--spherical", "--matrix")
)


def _join_value_flags(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(_join_value_flags(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        doc, code = _COMMANDS[args.command](args)
    except (ValueError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    if args.pretty:
        text = json.dumps(doc, indent=2)
    else:
        text = json.dumps(doc, separators=(",", ":"))
    sys.stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
