"""l1-minimal chain fillings by linear programming.

Small instances run an exact rational simplex method (Bland's rule), so the
optimum is a certified Fraction.  Larger instances fall back to scipy's HiGHS
solver and then reconstruct an exact rational solution on the float support,
re-verifying the boundary constraint before anything is returned.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import Infeasible


def solve_exact(columns: list[dict[int, Fraction]], target: dict[int, Fraction],
                n_rows: int) -> list[Fraction]:
    """min sum |x_j| s.t. sum_j x_j * col_j = target, exact rationals.

    Each signed variable is split into a positive and a negative part and the
    standard two-phase simplex method (Bland's rule, hence terminating) runs
    on a dense Fraction tableau.
    """
    ncols = 2 * len(columns)
    rhs = [target.get(i, Fraction(0)) for i in range(n_rows)]
    rows: list[list[Fraction]] = []
    for i in range(n_rows):
        row = [Fraction(0)] * ncols
        for j, col in enumerate(columns):
            v = col.get(i)
            if v:
                row[2 * j] = v
                row[2 * j + 1] = -v
        rows.append(row)
    # make rhs nonnegative, add artificials
    for i in range(n_rows):
        if rhs[i] < 0:
            rhs[i] = -rhs[i]
            rows[i] = [-v for v in rows[i]]
    total = ncols + n_rows
    tableau = [rows[i] + [Fraction(1) if k == i else Fraction(0)
                          for k in range(n_rows)] + [rhs[i]]
               for i in range(n_rows)]
    basis = [ncols + i for i in range(n_rows)]

    def pivot(tab, basis, costs, allowed):
        while True:
            # reduced costs under current basis
            red = list(costs)
            offset = Fraction(0)
            for i, bi in enumerate(basis):
                cb = costs[bi]
                if cb:
                    offset += cb * tab[i][-1]
                    for j in range(allowed):
                        red[j] -= cb * tab[i][j]
            enter = next((j for j in range(allowed) if red[j] < 0), None)
            if enter is None:
                return offset
            best = None
            for i in range(n_rows):
                a = tab[i][enter]
                if a > 0:
                    ratio = tab[i][-1] / a
                    if best is None or ratio < best[0] or \
                            (ratio == best[0] and basis[i] < basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                raise Infeasible("unbounded filling LP (should not happen)")
            _, row = best
            piv = tab[row][enter]
            tab[row] = [v / piv for v in tab[row]]
            for i in range(n_rows):
                if i != row and tab[i][enter]:
                    f = tab[i][enter]
                    tab[i] = [v - f * w for v, w in zip(tab[i], tab[row])]
            basis[row] = enter

    phase1_cost = [Fraction(0)] * ncols + [Fraction(1)] * n_rows
    if pivot(tableau, basis, phase1_cost, total) != 0:
        raise Infeasible("no filling within the window")
    # artificials may no longer enter the basis
    phase2_cost = [Fraction(1)] * ncols + [Fraction(0)] * n_rows
    pivot(tableau, basis, phase2_cost, ncols)
    x = [Fraction(0)] * ncols
    for i, bi in enumerate(basis):
        if bi < ncols:
            x[bi] = tableau[i][-1]
    return [x[2 * j] - x[2 * j + 1] for j in range(len(columns))]


def solve_float_then_verify(columns: list[dict[int, Fraction]],
                            target: dict[int, Fraction],
                            n_rows: int) -> list[Fraction]:
    """HiGHS float solve, then exact reconstruction on the float support."""
    import numpy as np
    from scipy.optimize import linprog
    from scipy.sparse import lil_matrix

    ncols = 2 * len(columns)
    A = lil_matrix((n_rows, ncols))
    for j, col in enumerate(columns):
        for i, v in col.items():
            A[i, 2 * j] = float(v)
            A[i, 2 * j + 1] = -float(v)
    b = np.array([float(target.get(i, 0)) for i in range(n_rows)])
    res = linprog(np.ones(ncols), A_eq=A.tocsr(), b_eq=b,
                  bounds=(0, None), method="highs")
    if not res.success:
        raise Infeasible(f"float LP failed: {res.message}")
    signed = res.x[0::2] - res.x[1::2]
    support = [j for j in range(len(columns)) if abs(signed[j]) > 1e-9]
    coeffs = _exact_on_support(columns, target, n_rows, support)
    if coeffs is None:
        raise Infeasible("exact reconstruction on the float support failed; "
                         "shrink the window or lower the exact-mode cap")
    out = [Fraction(0)] * len(columns)
    for j, c in zip(support, coeffs):
        out[j] = c
    return out


def _exact_on_support(columns, target, n_rows, support):
    """Solve the restricted system exactly by Gaussian elimination; returns
    None when inconsistent."""
    mat = [[columns[j].get(i, Fraction(0)) for j in support] +
           [target.get(i, Fraction(0))] for i in range(n_rows)]
    ncols = len(support)
    pivots = []
    row = 0
    for col in range(ncols):
        sel = next((r for r in range(row, n_rows) if mat[r][col]), None)
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        piv = mat[row][col]
        mat[row] = [v / piv for v in mat[row]]
        for r in range(n_rows):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    for r in range(row, n_rows):
        if mat[r][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = mat[r][ncols]
    # verify (free columns were set to zero)
    for i in range(n_rows):
        total = sum((columns[support[j]].get(i, Fraction(0)) * x[j]
                     for j in range(ncols)), Fraction(0))
        if total != target.get(i, Fraction(0)):
            return None
    return x
