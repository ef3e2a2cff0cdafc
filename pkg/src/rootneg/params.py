"""Integrality data of a parameter: integral roots, move classes,
chamber galleries, and the edge subspace.

Throughout, "the pairing is in (1/N)Z" means: the imaginary part vanishes and
N times the real part is an integer.  This is the only reading under which
the integral root set spans a real subspace, which later negativity checks
rely on.  An alternative reading that ignores the imaginary part when testing
move admissibility is available behind the real_part_only flag of
equivalence_class; it is off by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Mapping, Optional, Union

from . import linalg
from .linalg import Vec
from .rootsys import (
    Parameter,
    Root,
    RootSystem,
    WeylElement,
    act,
    identity_weyl,
    pairing,
    root_coords_of,
    simple_reflection,
    weyl_group,
    weyl_length,
)
from .subsystems import Subsystem, subsystem_label


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of the chamber side, spanned by rows in coweight coordinates."""

    ambient_dim: int
    vectors: tuple[Vec, ...]

    def __post_init__(self) -> None:
        vecs = tuple(linalg.vec(v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        for v in vecs:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector length does not match ambient dimension")
        if linalg.rank(vecs) != len(vecs):
            raise ValueError("subspace basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, x: Vec) -> bool:
        return linalg.in_span(linalg.span_basis(self.vectors), linalg.vec(x))


def full_space(rs: RootSystem) -> SubspaceBasis:
    return SubspaceBasis(rs.rank, tuple(linalg.identity(rs.rank)))


@dataclass(frozen=True)
class ChamberSet:
    """A set of closed chambers w(C), ordered by (length, images)."""

    chambers: tuple[WeylElement, ...]

    def __contains__(self, w: WeylElement) -> bool:
        return w in set(self.chambers)

    def __len__(self) -> int:
        return len(self.chambers)


@dataclass(frozen=True)
class ParameterClass:
    """All parameters reachable from base by admissible reflection moves.

    members are (w, mu) pairs with mu = w(base), each w a first witness in
    breadth-first order; base itself appears with w = identity.
    """

    members: tuple[tuple[WeylElement, Parameter], ...]
    base: Parameter
    denominator: int

    @property
    def parameters(self) -> tuple[Parameter, ...]:
        return tuple(mu for _, mu in self.members)


def value_in_fraction_of_z(re: Q, im: Q, denominator: int = 1) -> bool:
    """Whether re + i*im lies in (1/denominator)Z."""
    if denominator < 1:
        raise ValueError("denominator must be a positive integer")
    return im == 0 and (denominator * re).denominator == 1


def integral_roots(rs: RootSystem, lam: Parameter, denominator: int = 1) -> tuple[Root, ...]:
    """Roots whose coroot pairing with lam lies in (1/denominator)Z, sorted."""
    out = []
    for beta in rs.roots:
        re, im = pairing(rs, lam, beta)
        if value_in_fraction_of_z(re, im, denominator):
            out.append(beta)
    return tuple(sorted(out))


def integral_subsystem(rs: RootSystem, lam: Parameter, denominator: int = 1) -> Subsystem:
    roots = integral_roots(rs, lam, denominator)
    return Subsystem(roots, subsystem_label(rs, roots))


def equivalence_class(
    rs: RootSystem,
    lam: Parameter,
    denominator: int = 1,
    real_part_only: bool = False,
) -> ParameterClass:
    """Breadth-first closure of lam under admissible simple-reflection moves.

    A move at the i-th simple root is admissible for mu when mu's pairing
    with that coroot is NOT in (1/denominator)Z; the reflected parameter is
    then equivalent to mu.  With real_part_only=True the admissibility test
    ignores the imaginary part of the pairing (documented alternative; the
    default full test treats any nonzero imaginary part as non-integral).
    """
    gens = [simple_reflection(rs, i) for i in range(rs.rank)]
    ident = identity_weyl(rs)
    members: dict[Parameter, WeylElement] = {lam: ident}
    frontier = [lam]
    while frontier:
        frontier.sort(key=_parameter_sort_key)
        nxt = []
        for mu in frontier:
            w_mu = members[mu]
            for i in range(rs.rank):
                re, im = pairing(rs, mu, rs.simple_roots[i])
                if real_part_only:
                    blocked = (denominator * re).denominator == 1
                else:
                    blocked = value_in_fraction_of_z(re, im, denominator)
                if blocked:
                    continue
                nu = act(rs, gens[i], mu)
                if nu not in members:
                    members[nu] = gens[i].compose(w_mu)
                    nxt.append(nu)
        frontier = nxt
    ordered = tuple(
        (members[mu], mu) for mu in sorted(members, key=_parameter_sort_key)
    )
    return ParameterClass(ordered, lam, denominator)


def _parameter_sort_key(p: Parameter) -> tuple:
    return (p.re, p.im)


def gallery_class(rs: RootSystem, lam: Parameter) -> ChamberSet:
    """Chambers reachable from C crossing only walls of non-integral roots.

    Stepping from u(C) to u s_i(C) crosses the wall of u(alpha_i); the step
    is allowed iff that (indivisible) root is outside the integral root set.
    """
    sigma = frozenset(integral_roots(rs, lam, 1))
    gens = [simple_reflection(rs, i) for i in range(rs.rank)]
    ident = identity_weyl(rs)
    seen = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for u in frontier:
            for i, s in enumerate(gens):
                wall_root = u.apply_root(rs.simple_roots[i])
                if wall_root in sigma:
                    continue
                v = u.compose(s)
                if v.images not in seen:
                    seen[v.images] = v
                    nxt.append(v)
        frontier = nxt
    return ChamberSet(_sorted_chambers(rs, seen.values()))


def c_lambda(rs: RootSystem, lam: Parameter) -> ChamberSet:
    """Chambers w(C) inside {X : alpha(X) >= 0 for all positive integral alpha}.

    Decided exactly by evaluating each positive integral root at the interior
    point w(sum of fundamental coweights); that point meets no root wall, so
    the sign test is unambiguous.
    """
    sigma_pos = [b for b in integral_roots(rs, lam, 1) if sum(b) > 0]
    out = []
    for w in weyl_group(rs):
        point = act_coweight(rs, w, tuple([Q(1)] * rs.rank))
        ok = True
        for alpha in sigma_pos:
            val = linalg.dot(linalg.vec(alpha), point)
            if val == 0:
                raise AssertionError("interior point landed on a root wall")
            if val < 0:
                ok = False
                break
        if ok:
            out.append(w)
    return ChamberSet(_sorted_chambers(rs, out))


def _sorted_chambers(rs: RootSystem, ws) -> tuple[WeylElement, ...]:
    return tuple(sorted(ws, key=lambda w: (weyl_length(rs, w), w.images)))


def act_coweight(rs: RootSystem, w: WeylElement, x: Vec) -> Vec:
    """Image of a chamber-side vector (coweight coordinates) under w.

    Coordinate j of w(X) is the value of the j-th simple root on w(X), which
    equals the value of w^{-1}(alpha_j) on X.
    """
    w_inv = w.inverse()
    xv = linalg.vec(x)
    return tuple(
        linalg.dot(linalg.vec(w_inv.apply_root(rs.simple_roots[j])), xv)
        for j in range(rs.rank)
    )


def edge(rs: RootSystem, lam: Parameter, denominator: int = 1) -> SubspaceBasis:
    """Common kernel of the integral roots, as a canonical subspace basis."""
    sigma_pos = [b for b in integral_roots(rs, lam, denominator) if sum(b) > 0]
    rows = [linalg.vec(b) for b in sigma_pos]
    basis = linalg.nullspace(rows, ncols=rs.rank)
    return SubspaceBasis(rs.rank, basis)


def evaluate_on_coweight(rs: RootSystem, lam: Parameter, x: Vec) -> tuple[Q, Q]:
    """Value of lam at a chamber-side point, as (real, imaginary) parts."""
    re_c, im_c = root_coords_of(rs, lam)
    xv = linalg.vec(x)
    return linalg.dot(re_c, xv), linalg.dot(im_c, xv)


def reduced_word(rs: RootSystem, w: WeylElement) -> tuple[int, ...]:
    """A reduced word for w (1-based simple reflection indices)."""
    word: list[int] = []
    cur = w
    while not cur.is_identity():
        i = next(
            i for i in range(rs.rank) if sum(cur.apply_root(rs.simple_roots[i])) < 0
        )
        word.append(i + 1)
        cur = cur.compose(simple_reflection(rs, i))
    return tuple(reversed(word))
