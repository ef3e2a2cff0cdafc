"""Two-phase simplex over exact rationals.

Solves max c.x subject to A x <= b, x >= 0 with every number a Fraction.
Bland's rule is used for both entering and leaving choices, so the method
terminates without any cycling safeguards beyond it.  Problem sizes here are
tiny (tens of rows); clarity wins over sparse cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Literal, Optional, Sequence

Status = Literal["optimal", "infeasible", "unbounded"]


@dataclass(frozen=True)
class LPSolution:
    status: Status
    x: Optional[tuple[Q, ...]]
    objective: Optional[Q]


def maximize(
    c: Sequence, a_ub: Sequence[Sequence], b_ub: Sequence
) -> LPSolution:
    """Maximize c.x over {x >= 0 : a_ub x <= b_ub}."""
    m = len(a_ub)
    n = len(c)
    for row in a_ub:
        if len(row) != n:
            raise ValueError("constraint row length does not match objective")
    if len(b_ub) != m:
        raise ValueError("right-hand side length does not match constraints")

    # Tableau columns: n structural, m slacks, artificials appended as needed.
    rows: list[list[Q]] = []
    rhs: list[Q] = []
    basis: list[int] = []
    art_cols: list[int] = []
    total = n + m
    for i in range(m):
        coeffs = [Q(x) for x in a_ub[i]] + [Q(0)] * m
        coeffs[n + i] = Q(1)
        b_i = Q(b_ub[i])
        if b_i < 0:
            coeffs = [-x for x in coeffs]
            b_i = -b_i
            art = total
            total += 1
            for r in rows:
                r.append(Q(0))
            coeffs.append(Q(1))
            art_cols.append(art)
            basis.append(art)
        else:
            coeffs += [Q(0)] * len(art_cols)
            basis.append(n + i)
        rows.append(coeffs)
        rhs.append(b_i)
    for r in rows:
        r.extend([Q(0)] * (total - len(r)))

    banned: set[int] = set()

    def run(cost: list[Q]) -> Status:
        while True:
            dual = [cost[basis[i]] for i in range(m)]
            entering = None
            for j in range(total):
                if j in banned:
                    continue
                reduced = cost[j] - sum(dual[i] * rows[i][j] for i in range(m))
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            leaving = None
            best: Optional[Q] = None
            for i in range(m):
                if rows[i][entering] > 0:
                    ratio = rhs[i] / rows[i][entering]
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leaving]
                    ):
                        best = ratio
                        leaving = i
            if leaving is None:
                return "unbounded"
            _pivot(rows, rhs, basis, leaving, entering)

    if art_cols:
        cost1 = [Q(0)] * total
        for a in art_cols:
            cost1[a] = Q(-1)
        status = run(cost1)
        if status != "optimal":
            raise AssertionError("phase 1 cannot be unbounded")
        if sum(rhs[i] for i in range(m) if basis[i] in art_cols) > 0:
            return LPSolution("infeasible", None, None)
        # Pivot leftover zero-valued artificials out of the basis.
        for i in range(m):
            if basis[i] in art_cols:
                entering = next(
                    (j for j in range(n + m) if rows[i][j] != 0), None
                )
                if entering is not None:
                    _pivot(rows, rhs, basis, i, entering)
        banned.update(art_cols)

    cost2 = [Q(x) for x in c] + [Q(0)] * (total - n)
    status = run(cost2)
    if status == "unbounded":
        return LPSolution("unbounded", None, None)
    x = [Q(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = rhs[i]
    value = sum(Q(ci) * xi for ci, xi in zip(c, x))
    return LPSolution("optimal", tuple(x), value)


def _pivot(rows: list[list[Q]], rhs: list[Q], basis: list[int], r: int, col: int) -> None:
    inv = Q(1) / rows[r][col]
    rows[r] = [x * inv for x in rows[r]]
    rhs[r] *= inv
    for i in range(len(rows)):
        if i != r and rows[i][col] != 0:
            f = rows[i][col]
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            rhs[i] -= f * rhs[r]
    basis[r] = col


def feasible_mixed(
    rows: Sequence[tuple[Sequence, str, object]], nvars: int
) -> tuple[bool, Optional[tuple[Q, ...]]]:
    """Feasibility of a mixed strict/weak rational system in free variables.

    Each row is (coefficients, relation, bound) meaning coeffs.y REL bound
    with REL one of "<" or "<=".  Strictness is handled by maximizing a slack
    t capped at 1: the system is feasible over the reals iff the optimum
    exists and is positive (every strict row then holds with margin t).
    Returns (feasible, y) with y a rational witness.
    """
    # Variables: y split into positive/negative parts, then t.
    ncols = 2 * nvars + 1
    a_ub: list[list[Q]] = []
    b_ub: list[Q] = []
    for coeffs, rel, bound in rows:
        if rel not in ("<", "<="):
            raise ValueError(f"unknown relation {rel!r}")
        row = []
        for x in coeffs:
            row.append(Q(x))
        if len(row) != nvars:
            raise ValueError("row length does not match variable count")
        full = row + [-x for x in row] + [Q(1) if rel == "<" else Q(0)]
        a_ub.append(full)
        b_ub.append(Q(bound))
    a_ub.append([Q(0)] * (2 * nvars) + [Q(1)])
    b_ub.append(Q(1))
    objective = [Q(0)] * (2 * nvars) + [Q(1)]
    sol = maximize(objective, a_ub, b_ub)
    if sol.status == "infeasible":
        return False, None
    if sol.status != "optimal":
        raise AssertionError("slack maximization cannot be unbounded")
    if sol.objective is None or sol.objective <= 0:
        return False, None
    assert sol.x is not None
    y = tuple(sol.x[k] - sol.x[nvars + k] for k in range(nvars))
    return True, y
