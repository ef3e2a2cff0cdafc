"""Finite root systems, reduced and non-reduced, in exact arithmetic.

Roots live in the lattice spanned by the simple roots and are stored as
integer coordinate tuples in that basis.  Parameters are linear
functionals with complex rational values on simple coroots, stored as a pair
of rational vectors (values on the fundamental coweight basis).  Weyl group
elements are stored by their images of the simple roots, so every action is
integer linear algebra.

Scaling convention: in every reduced irreducible component the short roots
have squared length 2; in a non-reduced component the shortest roots have
squared length 1 (so their doubles have squared length 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterable, Union

from . import linalg
from .linalg import Mat, Vec

Root = tuple[int, ...]

#: Hard ceiling on Weyl group enumeration (E6 is under it, E7 and E8 are not).
WEYL_ORDER_LIMIT = 10**6

_FAMILIES = ("A", "B", "BC", "C", "D", "E", "F", "G")


class CapacityError(Exception):
    """Raised when a request exceeds a documented enumeration bound."""


@dataclass(frozen=True, order=True)
class RootSystemSpec:
    """A product of irreducible types, e.g. ``A2``, ``G2``, ``B3xA1``.

    Component order is canonicalized (family letter, then rank), so two specs
    naming the same product compare equal.
    """

    components: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("spec needs at least one component")
        for family, rank in self.components:
            _check_component(family, rank)
        ordered = tuple(sorted(self.components))
        object.__setattr__(self, "components", ordered)

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        parts = text.strip().split("x")
        comps = []
        for part in parts:
            part = part.strip()
            head = "".join(ch for ch in part if ch.isalpha())
            tail = part[len(head):]
            if not head or not tail or not tail.isdigit():
                raise ValueError(f"cannot parse component {part!r}")
            comps.append((head.upper(), int(tail)))
        return cls(tuple(comps))

    def __str__(self) -> str:
        return "x".join(f"{fam}{rank}" for fam, rank in self.components)

    @property
    def rank(self) -> int:
        return sum(rank for _, rank in self.components)


def _check_component(family: str, rank: int) -> None:
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r} (expected one of {_FAMILIES})")
    low_high = {
        "A": (1, None), "B": (1, None), "C": (1, None), "BC": (1, None),
        "D": (2, None), "E": (6, 8), "F": (4, 4), "G": (2, 2),
    }[family]
    low, high = low_high
    if rank < low or (high is not None and rank > high):
        raise ValueError(f"rank {rank} out of range for family {family}")


def _chain_gram(diag: list[int], off: dict[tuple[int, int], int]) -> list[list[Q]]:
    n = len(diag)
    g = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = Q(diag[i])
    for (i, j), v in off.items():
        g[i][j] = Q(v)
        g[j][i] = Q(v)
    return g


def _component_gram(family: str, n: int) -> list[list[Q]]:
    """Gram matrix of the simple roots of one irreducible component."""
    if family == "A":
        return _chain_gram([2] * n, {(i, i + 1): -1 for i in range(n - 1)})
    if family == "B":
        if n == 1:
            return _chain_gram([2], {})
        return _chain_gram([4] * (n - 1) + [2], {(i, i + 1): -2 for i in range(n - 1)})
    if family == "C":
        if n == 1:
            return _chain_gram([2], {})
        off = {(i, i + 1): -1 for i in range(n - 2)}
        off[(n - 2, n - 1)] = -2
        return _chain_gram([2] * (n - 1) + [4], off)
    if family == "BC":
        return _chain_gram([2] * (n - 1) + [1], {(i, i + 1): -1 for i in range(n - 1)})
    if family == "D":
        if n == 2:
            return _chain_gram([2, 2], {})
        off = {(i, i + 1): -1 for i in range(n - 2)}
        off[(n - 3, n - 1)] = -1
        return _chain_gram([2] * n, off)
    if family == "E":
        off = {(0, 2): -1, (1, 3): -1}
        off.update({(i, i + 1): -1 for i in range(2, n - 1)})
        return _chain_gram([2] * n, off)
    if family == "F":
        return _chain_gram([4, 4, 2, 2], {(0, 1): -2, (1, 2): -2, (2, 3): -1})
    if family == "G":
        return _chain_gram([6, 2], {(0, 1): -3})
    raise ValueError(f"unknown family {family!r}")


def _cartan_from_gram(gram: list[list[Q]]) -> list[list[int]]:
    n = len(gram)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            val = 2 * gram[i][j] / gram[i][i]
            if val.denominator != 1:
                raise ValueError("gram matrix is not crystallographic")
            a[i][j] = int(val)
    return a


def _positive_roots_from_cartan(cartan: list[list[int]]) -> list[Root]:
    """All positive roots of a reduced system, grown height by height.

    A candidate beta + alpha_i is a root exactly when the alpha_i-string
    through beta extends past beta, i.e. when (number of steps down) minus
    <beta, alpha_i-coroot> is positive.
    """
    n = len(cartan)
    found: set[Root] = set()
    level: list[Root] = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        found.add(e)
        level.append(e)
    while level:
        nxt: list[Root] = []
        for beta in level:
            for i in range(n):
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        q += 1
                    else:
                        break
                pair = sum(cartan[i][j] * beta[j] for j in range(n))
                if q - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in found:
                        found.add(cand)
                        nxt.append(cand)
        level = nxt
    return sorted(found, key=lambda r: (sum(r), r))


class RootSystem:
    """An immutable root system built from a :class:`RootSystemSpec`.

    Use :func:`build_root_system`; instances are cached per spec.
    """

    def __init__(self, spec: RootSystemSpec):
        self.spec = spec
        self.rank = spec.rank
        grams: list[list[list[Q]]] = []
        positives: list[Root] = []
        offset = 0
        blocks: list[tuple[str, int, int]] = []
        for family, crank in spec.components:
            g = _component_gram(family, crank)
            base_cartan = _cartan_from_gram(g)
            comp_pos = _positive_roots_from_cartan(base_cartan)
            if family == "BC":
                doubled = []
                for beta in comp_pos:
                    length = linalg.dot(
                        linalg.mat_vec(linalg.mat(g), linalg.vec(beta)), linalg.vec(beta)
                    )
                    if length == 1:
                        doubled.append(tuple(2 * b for b in beta))
                comp_pos = comp_pos + doubled
            for beta in comp_pos:
                positives.append(
                    tuple([0] * offset + list(beta) + [0] * (self.rank - offset - crank))
                )
            grams.append(g)
            blocks.append((family, crank, offset))
            offset += crank
        self.blocks = tuple(blocks)
        self.gram: Mat = _block_diag(grams, self.rank)
        self.cartan: tuple[tuple[int, ...], ...] = tuple(
            tuple(row) for row in _cartan_from_gram([list(r) for r in self.gram])
        )
        self.cartan_inv: Mat = linalg.inverse(linalg.mat(self.cartan))
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)
        )
        self.positive_roots: tuple[Root, ...] = tuple(
            sorted(positives, key=lambda r: (sum(r), r))
        )
        self.roots: tuple[Root, ...] = tuple(
            sorted(
                list(self.positive_roots)
                + [tuple(-b for b in r) for r in self.positive_roots]
            )
        )
        self._root_set = frozenset(self.roots)
        self._len_sq = {r: self._length_sq_raw(r) for r in self.roots}
        self._coweight = {r: self._coroot_coweight_raw(r) for r in self.roots}

    def __repr__(self) -> str:
        return f"RootSystem({self.spec})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    @property
    def fundamental_coweights(self) -> Mat:
        """Row i: the i-th fundamental coweight over the simple coroot basis."""
        return self.cartan_inv

    @property
    def fundamental_weights(self) -> Mat:
        """Row i: the i-th fundamental weight over the simple root basis."""
        return linalg.transpose(self.cartan_inv)

    def contains(self, beta: Root) -> bool:
        return tuple(beta) in self._root_set

    def is_positive(self, beta: Root) -> bool:
        return tuple(beta) in self._root_set and sum(beta) > 0

    def is_indivisible(self, beta: Root) -> bool:
        if tuple(beta) not in self._root_set:
            raise ValueError(f"{beta} is not a root")
        half = tuple(b // 2 for b in beta)
        return not (all(b % 2 == 0 for b in beta) and half in self._root_set)

    def double_of(self, beta: Root) -> Union[Root, None]:
        dbl = tuple(2 * b for b in beta)
        return dbl if dbl in self._root_set else None

    def half_of(self, beta: Root) -> Union[Root, None]:
        if any(b % 2 for b in beta):
            return None
        half = tuple(b // 2 for b in beta)
        return half if half in self._root_set else None

    def height(self, beta: Root) -> int:
        return sum(beta)

    def _length_sq_raw(self, beta: Root) -> Q:
        v = linalg.vec(beta)
        return linalg.dot(linalg.mat_vec(self.gram, v), v)

    def length_sq(self, beta: Root) -> Q:
        return self._len_sq[tuple(beta)]

    def _coroot_coweight_raw(self, beta: Root) -> tuple[int, ...]:
        # alpha_i(beta-coroot) = 2 (alpha_i, beta) / (beta, beta); always integral.
        v = linalg.vec(beta)
        gb = linalg.mat_vec(self.gram, v)
        ls = linalg.dot(gb, v)
        out = []
        for x in gb:
            val = 2 * x / ls
            if val.denominator != 1:
                raise ValueError("non-integral coroot pairing")
            out.append(int(val))
        return tuple(out)

    def coroot_coweight_coords(self, beta: Root) -> tuple[int, ...]:
        """The coroot of beta as values of the simple roots on it."""
        return self._coweight[tuple(beta)]

    def root_pairing(self, gamma: Root, beta: Root) -> int:
        """gamma evaluated on the coroot of beta (a Cartan integer)."""
        cw = self._coweight[tuple(beta)]
        return sum(g * c for g, c in zip(gamma, cw))

    def reflect(self, alpha: Root, beta: Root) -> Root:
        """Image of beta under the reflection in the wall of alpha."""
        k = self.root_pairing(beta, alpha)
        return tuple(b - k * a for b, a in zip(beta, alpha))


_build_cache: dict[str, RootSystem] = {}


def build_root_system(spec: Union[RootSystemSpec, str]) -> RootSystem:
    if isinstance(spec, str):
        spec = RootSystemSpec.parse(spec)
    key = str(spec)
    if key not in _build_cache:
        _build_cache[key] = RootSystem(spec)
    return _build_cache[key]


def _block_diag(blocks: list[list[list[Q]]], n: int) -> Mat:
    g = [[Q(0)] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        m = len(b)
        for i in range(m):
            for j in range(m):
                g[offset + i][offset + j] = b[i][j]
        offset += m
    return tuple(tuple(row) for row in g)


_DUAL_FAMILY = {"A": "A", "B": "C", "C": "B", "BC": "BC", "D": "D",
                "E": "E", "F": "F", "G": "G"}


def dual(rs: RootSystem) -> RootSystem:
    """The root system whose roots are the coroots of this one."""
    comps = tuple((_DUAL_FAMILY[fam], rank) for fam, rank in rs.spec.components)
    return build_root_system(RootSystemSpec(comps))


# ---------------------------------------------------------------------------
# Parameters (complex rational functionals on the span of the coroots)

@dataclass(frozen=True)
class Parameter:
    """Values on the simple coroots: entry i is re[i] + im[i] * sqrt(-1)."""

    re: tuple[Q, ...]
    im: tuple[Q, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", tuple(Q(x) for x in self.re))
        object.__setattr__(self, "im", tuple(Q(x) for x in self.im))
        if len(self.re) != len(self.im):
            raise ValueError("re and im must have equal length")

    @classmethod
    def of(cls, re: Iterable, im: Iterable = ()) -> "Parameter":
        re_t = tuple(Q(x) for x in re)
        im_t = tuple(Q(x) for x in im) if im else (Q(0),) * len(re_t)
        return cls(re_t, im_t)

    @property
    def rank(self) -> int:
        return len(self.re)

    def is_real(self) -> bool:
        return all(x == 0 for x in self.im)

    def scale(self, c) -> "Parameter":
        c = Q(c)
        return Parameter(tuple(c * x for x in self.re), tuple(c * x for x in self.im))


def pairing(rs: RootSystem, lam: Parameter, beta: Root) -> tuple[Q, Q]:
    """lam evaluated on the coroot of beta, as (real, imaginary) parts.

    The coroot of beta is the combination sum_j b_j (a_j, a_j)/(beta, beta)
    of simple coroots, so the value is that combination of lam's entries.
    """
    if lam.rank != rs.rank:
        raise ValueError("parameter rank does not match root system rank")
    v = linalg.vec(beta)
    ls = rs.length_sq(tuple(beta))
    re = Q(0)
    im = Q(0)
    for j, b in enumerate(v):
        if b == 0:
            continue
        c = b * rs.gram[j][j] / ls
        re += c * lam.re[j]
        im += c * lam.im[j]
    return re, im


def root_coords_of(rs: RootSystem, lam: Parameter) -> tuple[Vec, Vec]:
    """Coordinates of lam over the simple roots (real and imaginary parts)."""
    return (
        linalg.mat_vec(rs.cartan_inv, linalg.vec(lam.re)),
        linalg.mat_vec(rs.cartan_inv, linalg.vec(lam.im)),
    )


def parameter_from_root_coords(rs: RootSystem, re_c: Vec, im_c: Vec) -> Parameter:
    a = linalg.mat(rs.cartan)
    return Parameter(linalg.mat_vec(a, linalg.vec(re_c)), linalg.mat_vec(a, linalg.vec(im_c)))


def rho(rs: RootSystem) -> Parameter:
    """Half the sum of the positive roots, as a Parameter."""
    total = [Q(0)] * rs.rank
    for beta in rs.positive_roots:
        for j, b in enumerate(beta):
            total[j] += Q(b, 2)
    return parameter_from_root_coords(rs, tuple(total), linalg.zeros(rs.rank))


# ---------------------------------------------------------------------------
# Weyl group

@dataclass(frozen=True, order=True)
class WeylElement:
    """A Weyl group element, stored by its images of the simple roots."""

    images: tuple[Root, ...]

    @property
    def rank(self) -> int:
        return len(self.images)

    def apply_root(self, beta: Root) -> Root:
        out = [0] * len(self.images[0])
        for j, b in enumerate(beta):
            if b:
                img = self.images[j]
                for k in range(len(out)):
                    out[k] += b * img[k]
        return tuple(out)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self applied after other."""
        return WeylElement(tuple(self.apply_root(img) for img in other.images))

    def inverse(self) -> "WeylElement":
        cols = linalg.mat(list(zip(*self.images)))
        inv = linalg.inverse(cols)
        images = []
        for j in range(len(self.images)):
            col = tuple(int(inv[k][j]) for k in range(len(self.images)))
            images.append(col)
        return WeylElement(tuple(images))

    def is_identity(self) -> bool:
        n = len(self.images)
        return all(
            self.images[i] == tuple(1 if j == i else 0 for j in range(n))
            for i in range(n)
        )


def identity_weyl(rs: RootSystem) -> WeylElement:
    return WeylElement(rs.simple_roots)


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 0 <= i < rs.rank:
        raise ValueError(f"simple root index {i} out of range")
    images = []
    for j in range(rs.rank):
        img = list(rs.simple_roots[j])
        img[i] -= rs.cartan[i][j]
        images.append(tuple(img))
    return WeylElement(tuple(images))


def weyl_length(rs: RootSystem, w: WeylElement) -> int:
    """Number of indivisible positive roots sent to negative roots."""
    count = 0
    for beta in rs.positive_roots:
        if rs.is_indivisible(beta) and sum(w.apply_root(beta)) < 0:
            count += 1
    return count


@lru_cache(maxsize=None)
def _component_order(family: str, rank: int) -> int:
    if family == "A":
        return math.factorial(rank + 1)
    if family in ("B", "C", "BC"):
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if family == "F":
        return 1152
    if family == "G":
        return 12
    raise ValueError(f"unknown family {family!r}")


def weyl_order(spec: RootSystemSpec) -> int:
    order = 1
    for family, rank in spec.components:
        order *= _component_order(family, rank)
    return order


def weyl_group(rs: RootSystem) -> tuple[WeylElement, ...]:
    """All Weyl group elements, sorted by (length, images).

    Refuses to enumerate groups larger than WEYL_ORDER_LIMIT elements.
    """
    order = weyl_order(rs.spec)
    if order > WEYL_ORDER_LIMIT:
        raise CapacityError(
            f"Weyl group of {rs.spec} has order {order}, "
            f"above the enumeration limit {WEYL_ORDER_LIMIT}"
        )
    gens = [simple_reflection(rs, i) for i in range(rs.rank)]
    ident = identity_weyl(rs)
    seen = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                prod = w.compose(s)
                if prod.images not in seen:
                    seen[prod.images] = prod
                    nxt.append(prod)
        frontier = nxt
    if len(seen) != order:
        raise AssertionError(
            f"enumerated {len(seen)} elements of W({rs.spec}), expected {order}"
        )
    return tuple(sorted(seen.values(), key=lambda w: (weyl_length(rs, w), w.images)))


def act(rs: RootSystem, w: WeylElement, x: Union[Root, Parameter]):
    """Apply a Weyl element to a root or to a Parameter."""
    if isinstance(x, Parameter):
        re_c, im_c = root_coords_of(rs, x)
        new_re = _apply_to_coords(w, re_c)
        new_im = _apply_to_coords(w, im_c)
        return parameter_from_root_coords(rs, new_re, new_im)
    return w.apply_root(tuple(x))


def _apply_to_coords(w: WeylElement, coords: Vec) -> Vec:
    out = [Q(0)] * len(coords)
    for j, c in enumerate(coords):
        if c != 0:
            for k, v in enumerate(w.images[j]):
                out[k] += c * v
    return tuple(out)
