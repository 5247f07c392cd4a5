"""Exact rational linear programming.

Dense two-phase simplex over fractions with Bland's anti-cycling rule.
Every Optimal result is certified post hoc: primal feasibility, dual
feasibility, and equality of the two objective values are re-checked
exactly before the result is returned.

Dual sign convention. For sense "min": y_i >= 0 on ">=" rows,
y_i <= 0 on "<=" rows, free on "==" rows, and sum_i y_i a_ij <= c_j for
every non-negative variable (== for free variables). For sense "max"
all of these flip. In both cases y.b equals the optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

Row = tuple[tuple[Fraction, ...], str, Fraction]

_RELS = ("<=", ">=", "==")


@dataclass(frozen=True)
class LPProblem:
    sense: str  # "min" | "max"
    c: tuple[Fraction, ...]
    rows: tuple[Row, ...]
    nonneg: tuple[bool, ...]

    @staticmethod
    def make(sense, c, rows, nonneg=None) -> "LPProblem":
        c = tuple(Fraction(x) for x in c)
        if nonneg is None:
            nonneg = tuple(True for _ in c)
        else:
            nonneg = tuple(bool(b) for b in nonneg)
        norm_rows = []
        for coeffs, rel, rhs in rows:
            coeffs = tuple(Fraction(x) for x in coeffs)
            if len(coeffs) != len(c):
                raise ValueError("row/objective dimension mismatch")
            if rel not in _RELS:
                raise ValueError(f"unknown relation {rel!r}")
            norm_rows.append((coeffs, rel, Fraction(rhs)))
        if sense not in ("min", "max"):
            raise ValueError(f"unknown sense {sense!r}")
        return LPProblem(sense, c, tuple(norm_rows), nonneg)


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    objective: Fraction | None = None
    primal: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None


def _pivot(tableau: list[list[Fraction]], basis: list[int], r: int, col: int) -> None:
    prow = tableau[r]
    piv = prow[col]
    if piv != 1:
        inv = ONE / piv
        tableau[r] = prow = [v * inv for v in prow]
    for i, row in enumerate(tableau):
        if i == r:
            continue
        f = row[col]
        if f:
            tableau[i] = [a - f * b for a, b in zip(row, prow)]
    basis[r] = col


def _run_simplex(
    tableau: list[list[Fraction]],
    basis: list[int],
    ncols: int,
    allowed: int,
) -> bool:
    """Minimize the last tableau row (reduced costs) with Bland's rule.

    Columns with index >= allowed may not enter the basis.  Returns
    False if an unbounded ray is detected.
    """
    m = len(tableau) - 1
    while True:
        obj = tableau[-1]
        col = -1
        for j in range(allowed):
            if obj[j] < 0:
                col = j
                break
        if col < 0:
            return True
        r = -1
        best = None
        for i in range(m):
            a = tableau[i][col]
            if a > 0:
                ratio = tableau[i][ncols] / a
                if best is None or ratio < best:
                    best = ratio
                    r = i
                elif ratio == best and basis[i] < basis[r]:
                    r = i
        if r < 0:
            return False
        _pivot(tableau, basis, r, col)


def solve(p: LPProblem) -> LPResult:
    """Exact two-phase simplex; Optimal results are certified."""
    n = len(p.c)
    minimize = p.sense == "min"
    # Split free variables; record the standardized column layout.
    col_of_var: list[tuple[int, int]] = []  # (pos column, neg column or -1)
    std_cols = 0
    for j in range(n):
        if p.nonneg[j]:
            col_of_var.append((std_cols, -1))
            std_cols += 1
        else:
            col_of_var.append((std_cols, std_cols + 1))
            std_cols += 2
    slack_of_row: list[int] = []
    for _, rel, _ in p.rows:
        if rel == "==":
            slack_of_row.append(-1)
        else:
            slack_of_row.append(std_cols)
            std_cols += 1

    m = len(p.rows)
    flips: list[int] = []
    amat: list[list[Fraction]] = []
    bvec: list[Fraction] = []
    for i, (coeffs, rel, rhs) in enumerate(p.rows):
        row = [ZERO] * std_cols
        for j in range(n):
            pos, neg = col_of_var[j]
            row[pos] = coeffs[j]
            if neg >= 0:
                row[neg] = -coeffs[j]
        if slack_of_row[i] >= 0:
            row[slack_of_row[i]] = ONE if rel == "<=" else -ONE
        flip = 1 if rhs >= 0 else -1
        if flip < 0:
            row = [-v for v in row]
            rhs = -rhs
        flips.append(flip)
        amat.append(row)
        bvec.append(rhs)

    cost = [ZERO] * std_cols
    for j in range(n):
        cj = p.c[j] if minimize else -p.c[j]
        pos, neg = col_of_var[j]
        cost[pos] += cj
        if neg >= 0:
            cost[neg] -= cj

    # Phase I: artificial basis (reuse a +1 slack when possible).
    basis: list[int] = []
    art_cols: list[int] = []
    total = std_cols
    for i in range(m):
        s = slack_of_row[i]
        if s >= 0 and amat[i][s] == ONE:
            basis.append(s)
        else:
            basis.append(total)
            art_cols.append(total)
            total += 1
    tableau = []
    for i in range(m):
        row = amat[i] + [ZERO] * (total - std_cols) + [bvec[i]]
        if basis[i] >= std_cols:
            row[basis[i]] = ONE
        tableau.append(row)

    ncols = total
    survivors = list(range(m))
    if art_cols:
        art_set = set(art_cols)
        phase1 = [ZERO] * (ncols + 1)
        for a in art_cols:
            phase1[a] = ONE
        tableau.append(phase1)
        for i in range(m):
            if basis[i] in art_set:
                tableau[-1] = [
                    x - y for x, y in zip(tableau[-1], tableau[i])
                ]
        _run_simplex(tableau, basis, ncols, ncols)
        if -tableau[-1][ncols] > 0:
            return LPResult(status="infeasible")
        tableau.pop()
        # Drive leftover artificials out of the basis.
        drop_rows = set()
        for i in range(m):
            if basis[i] in art_set:
                piv_col = -1
                for j in range(std_cols):
                    if tableau[i][j]:
                        piv_col = j
                        break
                if piv_col >= 0:
                    _pivot(tableau, basis, i, piv_col)
                else:
                    drop_rows.add(i)
        if drop_rows:
            tableau = [r for i, r in enumerate(tableau) if i not in drop_rows]
            basis = [b for i, b in enumerate(basis) if i not in drop_rows]
            survivors = [s for i, s in enumerate(survivors) if i not in drop_rows]
            m = len(basis)

    # Phase II.
    obj = cost + [ZERO] * (ncols - std_cols) + [ZERO]
    tableau.append(obj)
    for i in range(m):
        f = tableau[-1][basis[i]]
        if f:
            tableau[-1] = [x - f * y for x, y in zip(tableau[-1], tableau[i])]
    if not _run_simplex(tableau, basis, ncols, std_cols):
        return LPResult(status="unbounded")

    xstd = [ZERO] * std_cols
    for i in range(m):
        if basis[i] < std_cols:
            xstd[basis[i]] = tableau[i][ncols]
    primal = []
    for j in range(n):
        pos, neg = col_of_var[j]
        primal.append(xstd[pos] - (xstd[neg] if neg >= 0 else ZERO))

    dual = _recover_dual(p, amat, cost, basis, flips, survivors, minimize)
    value = sum((cj * xj for cj, xj in zip(p.c, primal)), ZERO)
    result = LPResult(
        status="optimal",
        objective=value,
        primal=tuple(primal),
        dual=tuple(dual),
    )
    certify(p, result)
    return result


def _recover_dual(p, amat, cost, basis, flips, survivors, minimize):
    """Solve B^T y = c_B over the surviving rows, then undo row flips.

    Rows dropped as redundant in phase I keep dual value 0.
    """
    m = len(basis)
    mat = [
        [amat[s][basis[j]] for s in survivors] + [cost[basis[j]]]
        for j in range(m)
    ]
    y = _gauss_solve(mat, m)
    full = [ZERO] * len(p.rows)
    for i, s in enumerate(survivors):
        full[s] = y[i]
    out = []
    for i in range(len(p.rows)):
        v = full[i] * flips[i]
        out.append(v if minimize else -v)
    return out


def _gauss_solve(mat: list[list[Fraction]], n: int) -> list[Fraction]:
    """Solve an n x n rational system given as [A | b] rows (mutates mat)."""
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col]), None)
        if piv is None:
            # Singular: the basis matrix should never be singular; a zero
            # column can only arise with a zero dual component.
            continue
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = ONE / mat[col][col]
        mat[col] = [v * inv for v in mat[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
    return [mat[i][n] if mat[i][i] else ZERO for i in range(n)]


def certify(p: LPProblem, res: LPResult) -> None:
    """Exact post-hoc optimality check; raises AssertionError on failure."""
    assert res.status == "optimal"
    x = res.primal
    y = res.dual
    assert x is not None and y is not None
    minimize = p.sense == "min"
    for j, ok in enumerate(p.nonneg):
        if ok:
            assert x[j] >= 0, "primal negativity"
    for (coeffs, rel, rhs), yi in zip(p.rows, y):
        lhs = sum((a * b for a, b in zip(coeffs, x)), ZERO)
        if rel == "<=":
            assert lhs <= rhs, "primal infeasible (<=)"
            assert (yi <= 0) if minimize else (yi >= 0), "dual sign (<=)"
        elif rel == ">=":
            assert lhs >= rhs, "primal infeasible (>=)"
            assert (yi >= 0) if minimize else (yi <= 0), "dual sign (>=)"
        else:
            assert lhs == rhs, "primal infeasible (==)"
    for j in range(len(p.c)):
        red = p.c[j] - sum((y[i] * p.rows[i][0][j] for i in range(len(p.rows))), ZERO)
        if p.nonneg[j]:
            assert (red >= 0) if minimize else (red <= 0), "dual infeasible"
        else:
            assert red == 0, "dual infeasible (free var)"
    dual_obj = sum((yi * row[2] for yi, row in zip(y, p.rows)), ZERO)
    assert dual_obj == res.objective, "strong duality failed"


def solve_max_slack(
    amat: list[list[Fraction]],
    bvec: list[Fraction],
    cvec: list[Fraction],
) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Fast path: max c.x s.t. Ax <= b, x >= 0 with b >= 0.

    Starts from the slack basis (no phase I).  Returns
    (value, x, y) with y the exact dual (y >= 0, y.A >= c, y.b = value).
    Raises ValueError on an unbounded problem.
    """
    m = len(amat)
    n = len(cvec)
    ncols = n + m
    tableau = []
    for i in range(m):
        row = list(amat[i]) + [ZERO] * m + [bvec[i]]
        row[n + i] = ONE
        tableau.append(row)
    basis = list(range(n, n + m))
    tableau.append([-c for c in cvec] + [ZERO] * m + [ZERO])
    if not _run_simplex(tableau, basis, ncols, ncols):
        raise ValueError("unbounded")
    x = [ZERO] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tableau[i][ncols]
    obj = tableau[-1]
    y = [obj[n + i] for i in range(m)]
    value = sum((c * v for c, v in zip(cvec, x)), ZERO)
    # Exact certificates: feasibility both sides plus strong duality.
    for i in range(m):
        assert sum((a * v for a, v in zip(amat[i], x)), ZERO) <= bvec[i]
        assert y[i] >= 0
    for j in range(n):
        assert sum((y[i] * amat[i][j] for i in range(m)), ZERO) >= cvec[j]
    assert sum((yi * bi for yi, bi in zip(y, bvec)), ZERO) == value
    return value, x, y
