"""Negativity certificates for parameters, by exact cone feasibility.

The three predicates ask for a correction vector omega in the real span of
the integral root set such that Re(lam) - omega is nonpositive (weak,
integral) or strictly negative (strict) on the dominant chamber, with
equality allowed only along a designated subspace a_lambda of the chamber
side.  On the simplicial chamber the conditions reduce to finitely many
exact rational inequalities at the fundamental coweights, decided by the
rational simplex.

a_lambda is always an explicit input; passing None selects the documented
default (the whole chamber side), under which the strict clauses of the weak
and integral modes are vacuous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Literal, Mapping, Optional, Union

from . import linalg
from .lattice import hermite_row_basis, lattice_index
from .linalg import Vec
from .params import (
    ChamberSet,
    ParameterClass,
    SubspaceBasis,
    act_coweight,
    equivalence_class,
    full_space,
    gallery_class,
    integral_roots,
)
from .rootsys import (
    Parameter,
    Root,
    RootSystem,
    RootSystemSpec,
    WeylElement,
    act,
    build_root_system,
    pairing,
    root_coords_of,
)
from .simplex import feasible_mixed
from .subsystems import (
    Subsystem,
    parabolic_closure,
    reflection_closure,
    n_of_subsystem,
)

Mode = Literal["weak", "integral", "strict"]

SubspaceAssignment = Union[None, SubspaceBasis, Mapping[Parameter, SubspaceBasis]]


@dataclass(frozen=True)
class NegativityQuery:
    lam: Parameter
    mode: Mode
    a_lambda: Optional[SubspaceBasis] = None
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.mode not in ("weak", "integral", "strict"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "strict" and self.a_lambda is not None:
            raise ValueError("strict mode takes no subspace")
        if self.denominator < 1:
            raise ValueError("denominator must be a positive integer")


@dataclass(frozen=True)
class NegativityVerdict:
    """Outcome of one feasibility check.

    witness_omega holds rational coefficients over span_basis (a maximal
    independent subset of the positive integral roots, in root order);
    tight_generators are the indices i where Re(lam) - omega vanishes at the
    i-th fundamental coweight.
    """

    feasible: bool
    witness_omega: Optional[Vec]
    tight_generators: tuple[int, ...]
    span_basis: tuple[Root, ...]


@dataclass(frozen=True)
class MemberVerdict:
    w: WeylElement
    mu: Parameter
    verdict: NegativityVerdict


@dataclass(frozen=True)
class ClassNegativityReport:
    ok: bool
    members: tuple[MemberVerdict, ...]


@dataclass(frozen=True)
class FundamentalLemmaReport:
    """Edge and lattice data attached to a parameter's negativity class.

    vacuous is set when the class fails the requested negativity mode; the
    remaining fields are still computed.  n_lattice is the index of the root
    lattice of the parabolic closure inside the weight lattice of the
    integral root set (the dual lattice of its coroots within their span).
    """

    vacuous: bool
    edge_basis: SubspaceBasis
    containing_member: Optional[tuple[WeylElement, SubspaceBasis]]
    re_lambda_on_edge_zero: bool
    parabolic: Subsystem
    n_lattice: int
    integrality_ok: bool
    im_lambda_on_edge_zero: Optional[bool]
    edge_trivial: Optional[bool]


def span_basis_of_integral_roots(
    rs: RootSystem, sigma: tuple[Root, ...]
) -> tuple[Root, ...]:
    """First maximal independent subset of the positive integral roots."""
    basis: list[Root] = []
    for beta in sigma:
        if sum(beta) <= 0:
            continue
        if linalg.rank(basis + [beta]) > len(basis):
            basis.append(beta)
    return tuple(basis)


def check_negativity(rs: RootSystem, q: NegativityQuery) -> NegativityVerdict:
    """Decide one negativity predicate and return an exact witness.

    Strict mode: exists omega in the span of the integral roots with
    (Re lam - omega) < 0 at every fundamental coweight.  Weak/integral
    modes: <= 0 at every fundamental coweight, strictly at those outside
    a_lambda; the tight generators of a feasible witness then automatically
    span a face inside a_lambda.  Integral mode first requires the imaginary
    part of lam to vanish on a_lambda.
    """
    if q.lam.rank != rs.rank:
        raise ValueError("parameter rank does not match root system rank")
    sigma = integral_roots(rs, q.lam, q.denominator)
    basis = span_basis_of_integral_roots(rs, sigma)
    a_lambda = q.a_lambda if q.a_lambda is not None else (
        None if q.mode == "strict" else full_space(rs)
    )
    if a_lambda is not None and a_lambda.ambient_dim != rs.rank:
        raise ValueError("subspace ambient dimension does not match the system")

    re_c, im_c = root_coords_of(rs, q.lam)
    if q.mode == "integral":
        assert a_lambda is not None
        for v in a_lambda.vectors:
            if linalg.dot(im_c, v) != 0:
                return NegativityVerdict(False, None, (), basis)

    rows = []
    for i in range(rs.rank):
        coeffs = [-Q(beta[i]) for beta in basis]
        if q.mode == "strict":
            rel = "<"
        else:
            assert a_lambda is not None
            coweight = tuple(
                Q(1) if j == i else Q(0) for j in range(rs.rank)
            )
            rel = "<=" if a_lambda.contains(coweight) else "<"
        rows.append((coeffs, rel, -re_c[i]))
    ok, y = feasible_mixed(rows, len(basis))
    if not ok:
        return NegativityVerdict(False, None, (), basis)
    assert y is not None
    tight = []
    for i in range(rs.rank):
        value = re_c[i] - sum(y[k] * basis[k][i] for k in range(len(basis)))
        if value == 0:
            tight.append(i)
        elif value > 0:
            raise AssertionError("witness violates a generator inequality")
    return NegativityVerdict(True, y, tuple(tight), basis)


def _subspace_for(
    rs: RootSystem, subspaces: SubspaceAssignment, mu: Parameter
) -> SubspaceBasis:
    if subspaces is None:
        return full_space(rs)
    if isinstance(subspaces, SubspaceBasis):
        return subspaces
    if mu not in subspaces:
        raise ValueError(f"no subspace assigned to class member {mu}")
    return subspaces[mu]


def check_class_negativity(
    rs: RootSystem,
    lam: Parameter,
    mode: Mode,
    subspaces: SubspaceAssignment = None,
    denominator: int = 1,
) -> ClassNegativityReport:
    """Run check_negativity over every member of the equivalence class.

    subspaces assigns a_mu to each member: None means the documented default
    (the full chamber side) for every member, a single SubspaceBasis is used
    uniformly, and a mapping must cover every member parameter.  Strict mode
    takes no subspaces.
    """
    if mode == "strict" and subspaces is not None:
        raise ValueError("strict mode takes no subspace assignment")
    cls = equivalence_class(rs, lam, denominator)
    members = []
    ok = True
    for w, mu in cls.members:
        a_mu = None if mode == "strict" else _subspace_for(rs, subspaces, mu)
        verdict = check_negativity(
            rs, NegativityQuery(mu, mode, a_mu, denominator)
        )
        ok = ok and verdict.feasible
        members.append(MemberVerdict(w, mu, verdict))
    return ClassNegativityReport(ok, tuple(members))


def weight_lattice_basis(
    rs: RootSystem, sigma: tuple[Root, ...]
) -> tuple[tuple[Root, ...], tuple[Vec, ...]]:
    """Basis of the dual lattice of the integral coroots, inside their span.

    Returns (span basis S of the integral roots, weight basis) where each
    weight vector is written in coordinates over S.  The defining condition
    is integral pairing against every integral coroot.
    """
    s_basis = span_basis_of_integral_roots(rs, sigma)
    if not s_basis:
        return (), ()
    coroot_rows = [
        rs.coroot_coweight_coords(b) for b in sigma if sum(b) > 0
    ]
    coroot_basis = hermite_row_basis(coroot_rows)
    g = [
        [linalg.dot(linalg.vec(s), linalg.vec(m)) for m in coroot_basis]
        for s in s_basis
    ]
    g_inv = linalg.inverse(linalg.mat(g))
    return s_basis, tuple(g_inv)


def fundamental_lattice_index(rs: RootSystem, lam: Parameter, denominator: int = 1) -> int:
    """Index of the parabolic-closure root lattice in the weight lattice."""
    sigma = integral_roots(rs, lam, denominator)
    s_basis, weight_basis = weight_lattice_basis(rs, sigma)
    if not s_basis:
        return 1
    closure = parabolic_closure(rs, [b for b in sigma if sum(b) > 0])
    cols = list(zip(*[linalg.vec(s) for s in s_basis]))
    root_gens = []
    for gamma in closure.roots:
        if sum(gamma) <= 0:
            continue
        sol = linalg.solve(cols, linalg.vec(gamma))
        if sol is None:
            raise AssertionError("parabolic closure left the span of its roots")
        root_gens.append(sol)
    return lattice_index(root_gens, weight_basis)


def verify_fundamental_lemma(
    rs: RootSystem,
    lam: Parameter,
    mode: Mode,
    subspaces: SubspaceAssignment = None,
    denominator: int = 1,
) -> FundamentalLemmaReport:
    """Edge/lattice consequences of class negativity, checked on one input.

    Verifies, for the given parameter: some gallery member w has the edge
    inside w^{-1}(a_{w lam}); the real part of lam vanishes on the edge; the
    lattice index bound makes every real coroot pairing a multiple of
    1/n_lattice.  Integral mode additionally tests the imaginary part on the
    edge; strict mode tests that the edge is trivial and the integral
    coroots have full rank.  If class negativity fails for the requested
    mode the report is marked vacuous (and the checks are still reported).
    """
    class_report = check_class_negativity(rs, lam, mode, subspaces, denominator)
    vacuous = not class_report.ok

    sigma = integral_roots(rs, lam, denominator)
    sigma_pos = [b for b in sigma if sum(b) > 0]
    edge_rows = [linalg.vec(b) for b in sigma_pos]
    edge_basis = SubspaceBasis(rs.rank, linalg.nullspace(edge_rows, ncols=rs.rank))

    gallery = gallery_class(rs, lam)
    containing: Optional[tuple[WeylElement, SubspaceBasis]] = None
    for u in gallery.chambers:
        w = u.inverse()
        mu = act(rs, w, lam)
        a_mu = (
            full_space(rs)
            if mode == "strict"
            else _subspace_for(rs, subspaces, mu)
        )
        if all(a_mu.contains(act_coweight(rs, w, v)) for v in edge_basis.vectors):
            containing = (w, a_mu)
            break

    re_c, im_c = root_coords_of(rs, lam)
    re_zero = all(linalg.dot(re_c, v) == 0 for v in edge_basis.vectors)

    closure = parabolic_closure(rs, sigma_pos)
    n_lattice = fundamental_lattice_index(rs, lam, denominator)
    integrality_ok = all(
        (n_lattice * pairing(rs, lam, beta)[0]).denominator == 1
        for beta in rs.positive_roots
    )

    im_zero: Optional[bool] = None
    if mode == "integral":
        im_zero = all(linalg.dot(im_c, v) == 0 for v in edge_basis.vectors)

    edge_trivial: Optional[bool] = None
    if mode == "strict":
        coroot_rank = linalg.rank([rs.coroot_coweight_coords(b) for b in sigma_pos])
        edge_trivial = edge_basis.dim == 0 and coroot_rank == rs.rank

    return FundamentalLemmaReport(
        vacuous=vacuous,
        edge_basis=edge_basis,
        containing_member=containing,
        re_lambda_on_edge_zero=re_zero,
        parabolic=closure,
        n_lattice=n_lattice,
        integrality_ok=integrality_ok,
        im_lambda_on_edge_zero=im_zero,
        edge_trivial=edge_trivial,
    )


def integral_class_constant(rs: RootSystem, lam: Parameter, denominator: int = 1) -> int:
    """The subsystem constant of the reflection closure of the integral roots.

    Requires the integral root set to have full rank (as it does whenever the
    strict predicate holds for the class).
    """
    sigma = integral_roots(rs, lam, denominator)
    closed = reflection_closure(rs, sigma) if sigma else frozenset()
    return n_of_subsystem(rs, closed)


# ---------------------------------------------------------------------------
# Exponent certificates over an opaque coordinate space

@dataclass(frozen=True)
class ExponentCertificate:
    """Decomposition mu = rho_q + sum(c_alpha alpha) + i nu, with flags.

    solvable: the real difference lies in the span of the spherical roots
    (coefficients are then unique by independence).  lattice_ok: every
    coefficient is a positive multiple of 1/denominator.  ds1_ok: strict
    negativity of the difference on the compression cone away from its edge,
    equivalent to all coefficients positive.  ds2_ok: the difference
    vanishes on the edge of the compression cone.
    """

    solvable: bool
    coefficients: Optional[Vec]
    nu: Vec
    lattice_ok: bool
    ds1_ok: bool
    ds2_ok: bool


def certify_exponent(
    rank_z: int,
    spherical: tuple[Vec, ...],
    edge_dims: int,
    mu: Vec,
    rho_q: Vec,
    nu: Vec,
    denominator: int = 1,
) -> ExponentCertificate:
    """Certify an exponent decomposition over the compression cone.

    spherical lists linearly independent functionals (the cone is then
    simplicial); edge_dims must equal rank_z minus their number and is
    validated as an input-consistency check.  The real part of the exponent
    is mu with the imaginary direction nu carried through unchanged.
    """
    if rank_z < 1:
        raise ValueError("rank_z must be positive")
    if denominator < 1:
        raise ValueError("denominator must be a positive integer")
    s_rows = [linalg.vec(v) for v in spherical]
    for v in s_rows:
        if len(v) != rank_z:
            raise ValueError("spherical root length does not match rank_z")
    mu_v, rho_v, nu_v = linalg.vec(mu), linalg.vec(rho_q), linalg.vec(nu)
    for v in (mu_v, rho_v, nu_v):
        if len(v) != rank_z:
            raise ValueError("vector length does not match rank_z")
    if linalg.rank(s_rows) != len(s_rows):
        raise ValueError("spherical roots are linearly dependent")
    if edge_dims != rank_z - len(s_rows):
        raise ValueError(
            f"edge_dims must be rank_z - |S| = {rank_z - len(s_rows)}, got {edge_dims}"
        )
    target = linalg.sub(mu_v, rho_v)
    coeffs = (
        linalg.solve(list(zip(*s_rows)), target) if s_rows else
        (None if any(x != 0 for x in target) else ())
    )
    solvable = coeffs is not None
    edge_basis = linalg.nullspace(s_rows, ncols=rank_z)
    ds2_ok = all(linalg.dot(target, v) == 0 for v in edge_basis)
    ds1_ok = solvable and all(c > 0 for c in coeffs)
    lattice_ok = solvable and all(
        c > 0 and (denominator * c).denominator == 1 for c in coeffs
    )
    return ExponentCertificate(solvable, coeffs, nu_v, lattice_ok, ds1_ok, ds2_ok)


def rank_one_bound(m_type: Union[RootSystemSpec, str, None] = None) -> int:
    """Denominator bound 18 d^2, d the product of Cartan determinants.

    The empty type (no roots at all) gives d = 1, so the bound 18.
    """
    if m_type is None or (isinstance(m_type, str) and not m_type.strip()):
        return 18
    rs = build_root_system(m_type) if not isinstance(m_type, RootSystem) else m_type
    d = linalg.det(linalg.mat(rs.cartan))
    if d.denominator != 1 or d <= 0:
        raise AssertionError("Cartan determinant must be a positive integer")
    return 18 * int(d) ** 2
