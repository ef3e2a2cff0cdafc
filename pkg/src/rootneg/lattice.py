"""Integer lattice computations: Smith and Hermite normal forms, quotients.

A lattice is stored by a basis matrix whose rows span it inside an ambient
integer (or rational) coordinate space.  Quotient invariants are the
elementary divisors d_1 | d_2 | ... of the inclusion of one lattice into
another of the same rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

from . import linalg

IntMat = list[list[int]]


@dataclass(frozen=True)
class SNFResult:
    """U @ A @ V == D with U, V unimodular and D in Smith normal form."""

    u: tuple[tuple[int, ...], ...]
    d: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]

    @property
    def divisors(self) -> tuple[int, ...]:
        """Nonzero diagonal entries of D (the divisor chain)."""
        out = []
        for i in range(min(len(self.d), len(self.d[0]) if self.d else 0)):
            if self.d[i][i] != 0:
                out.append(self.d[i][i])
        return tuple(out)


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^n (rows of `basis` are the basis vectors)."""

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def _ident(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(a: Sequence[Sequence[int]]) -> SNFResult:
    """Smith normal form over the integers, with the transform matrices.

    Returns (U, D, V) with U*A*V = D, U and V unimodular, and the nonzero
    diagonal of D a chain d_1 | d_2 | ... of positive integers followed by
    zeros.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [[int(x) for x in row] for row in a]
    for row in d:
        if len(row) != n:
            raise ValueError("ragged matrix")
    u = _ident(m)
    v = _ident(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row[dst] += c * row[src]
        d[dst] = [x + c * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in d:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # Find a nonzero pivot in the remaining block.
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] != 0:
                    if pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        # Clear row and column t; restart whenever a remainder shrinks the pivot.
        while True:
            if d[t][t] < 0:
                negate_row(t)
            dirty = False
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    q, r = divmod(d[i][t], d[t][t])
                    add_row(t, i, -q)
                    if r:
                        swap_rows(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    q, r = divmod(d[t][j], d[t][t])
                    add_col(t, j, -q)
                    if r:
                        swap_cols(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            break
        t += 1
    # Enforce the divisibility chain d_i | d_{i+1}.
    t = min(m, n)
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            a_i, a_j = d[i][i], d[i + 1][i + 1]
            if a_j % a_i if a_i else a_j:
                # Fold entry i+1 into row i and redo the 2x2 block.
                add_col(i + 1, i, 1)
                while True:
                    if d[i][i] < 0:
                        negate_row(i)
                    if d[i + 1][i] != 0:
                        q, r = divmod(d[i + 1][i], d[i][i])
                        add_row(i, i + 1, -q)
                        if r:
                            swap_rows(i, i + 1)
                            continue
                    if d[i][i + 1] != 0:
                        q, r = divmod(d[i][i + 1], d[i][i])
                        add_col(i, i + 1, -q)
                        if r:
                            swap_cols(i, i + 1)
                            continue
                    break
                if d[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                changed = True
    return SNFResult(
        tuple(tuple(row) for row in u),
        tuple(tuple(row) for row in d),
        tuple(tuple(row) for row in v),
    )


def hermite_row_basis(rows: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Canonical row basis (row-style Hermite normal form) of an integer span.

    Zero rows are dropped; pivots are positive and entries above each pivot
    are reduced to the range [0, pivot).
    """
    work = [list(map(int, r)) for r in rows]
    if not work:
        return ()
    n = len(work[0])
    basis: list[list[int]] = []
    r = 0
    col = 0
    while col < n and r < len(work):
        # Euclid on column `col` across rows r..end.
        while True:
            nz = [i for i in range(r, len(work)) if work[i][col] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(work[i][col]))
            work[r], work[i_min] = work[i_min], work[r]
            if work[r][col] < 0:
                work[r] = [-x for x in work[r]]
            done = True
            for i in range(r + 1, len(work)):
                if work[i][col] != 0:
                    q = work[i][col] // work[r][col]
                    work[i] = [x - q * y for x, y in zip(work[i], work[r])]
                    if work[i][col] != 0:
                        done = False
            if done:
                break
        if work[r][col] != 0:
            r += 1
        col += 1
    work = [row for row in work[:r] if any(row)]
    # Reduce entries above pivots.
    for i in reversed(range(len(work))):
        p = next(j for j in range(n) if work[i][j] != 0)
        for k in range(i):
            q = work[k][p] // work[i][p]
            if q:
                work[k] = [x - q * y for x, y in zip(work[k], work[i])]
    return tuple(tuple(row) for row in work)


def lattice_from_generators(
    gens: Iterable[Sequence[int]], ambient_dim: int
) -> Lattice:
    basis = hermite_row_basis(gens)
    return Lattice(ambient_dim, basis)


def _clear_denominators(rows: list[list[Q]]) -> tuple[list[list[int]], int]:
    denom = 1
    for row in rows:
        for x in row:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    return [[int(x * denom) for x in row] for row in rows], denom


def quotient_divisors(
    sub: Iterable[Sequence], sup: Iterable[Sequence]
) -> tuple[int, ...]:
    """Elementary divisors of (lattice spanned by `sup`) / (by `sub`).

    Both arguments are generator lists (not necessarily bases).  Rational
    entries are allowed; both spans are scaled by one common denominator,
    which leaves the quotient unchanged.  The sub-span must lie inside the
    sup-span and have the same rank.
    """
    sub_rows = [[Q(x) for x in row] for row in sub]
    sup_rows = [[Q(x) for x in row] for row in sup]
    if not sup_rows:
        raise ValueError("empty generating set for the ambient lattice")
    all_int, _ = _clear_denominators(sub_rows + sup_rows)
    sub_int = all_int[: len(sub_rows)]
    sup_int = all_int[len(sub_rows):]
    sup_basis = hermite_row_basis(sup_int)
    sub_basis = hermite_row_basis(sub_int)
    if len(sub_basis) != len(sup_basis):
        raise ValueError(
            f"rank mismatch: sub has rank {len(sub_basis)}, sup {len(sup_basis)}"
        )
    r = len(sup_basis)
    # Express each sub basis vector over the sup basis; must be integral.
    coeff: list[list[int]] = []
    sup_mat = [list(map(Q, row)) for row in sup_basis]
    for vec_ in sub_basis:
        sol = linalg.solve(list(zip(*sup_mat)), [Q(x) for x in vec_])
        if sol is None:
            raise ValueError("sub-lattice is not contained in the span")
        row = []
        for x in sol:
            if x.denominator != 1:
                raise ValueError("sub-lattice is not contained in the lattice")
            row.append(int(x))
        coeff.append(row)
    snf = smith_normal_form(coeff) if r else SNFResult((), (), ())
    divisors = snf.divisors if r else ()
    if len(divisors) != r:
        raise ValueError("sub-lattice has lower rank than the lattice")
    return divisors


def lattice_index(sub: Iterable[Sequence], sup: Iterable[Sequence]) -> int:
    """Index of the sub-span in the sup-span (product of the divisors)."""
    out = 1
    for d in quotient_divisors(sub, sup):
        out *= d
    return out
