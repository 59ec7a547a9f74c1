"""Exact linear algebra over the rationals.

The production rank path clears denominators row by row and runs
fraction-free (Bareiss) elimination over the integers through the kernel
backend; ranks are therefore exact and never touch rationals mid-stream.
Echelon forms, nullspaces and solves use plain rational elimination with
deterministic first-nonzero pivoting, so every basis and report downstream
is byte-stable. Matrices are dense lists of row lists; the complexes met
here live in fewer than a few hundred dimensions per degree.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import kernels

ZERO = Fraction(0)
ONE = Fraction(1)


def clear_row_denominators(rows: list[list[Fraction]]) -> list[list[int]]:
    """Scale each row to integers; row scaling preserves rank and nullspace."""
    out = []
    for row in rows:
        lcm = 1
        for x in row:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        out.append([int(x * lcm) for x in row])
    return out


def rank(rows: list[list[Fraction]], ncols: int | None = None) -> int:
    """Exact rank via integer Bareiss elimination (the production path)."""
    if not rows:
        return 0
    n = len(rows[0]) if ncols is None else ncols
    if n == 0:
        return 0
    return kernels.bareiss_rank(clear_row_denominators(rows), n)


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (fresh copy) and its pivot columns."""
    m = len(rows)
    work = [list(row) for row in rows]
    if m == 0:
        return work, []
    n = len(work[0])
    pivots = []
    r = 0
    for c in range(n):
        p = -1
        for i in range(r, m):
            if work[i][c]:
                p = i
                break
        if p < 0:
            continue
        work[p], work[r] = work[r], work[p]
        piv = work[r][c]
        if piv != 1:
            work[r] = [x / piv for x in work[r]]
        for i in range(m):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return work, pivots


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column, ascending."""
    if ncols == 0:
        return []
    if not rows:
        return [[ONE if j == i else ZERO for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        basis.append(v)
    return basis


def solve(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Solve A x = rhs exactly; None when inconsistent.

    Free variables, if any, are set to zero; when A has full column rank
    the solution is unique.
    """
    if not rows:
        return [] if all(b == 0 for b in rhs) else None
    n = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(aug)
    if n in pivots:
        return None  # pivot in the rhs column: inconsistent
    x = [ZERO] * n
    for r, c in enumerate(pivots):
        x[c] = reduced[r][n]
    return x


def mat_vec(rows: list[list[Fraction]], v: list[Fraction]) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), ZERO) for row in rows]


def mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    if not a or not b:
        return []
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), ZERO) for col in bt] for row in a]


class ColumnReducer:
    """Incremental column-space tracker with deterministic pivoting.

    Feeding columns one at a time mirrors echelonizing [first | second | ...]
    left to right: a column is accepted exactly when it enlarges the span of
    everything accepted before it.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._reduced: list[tuple[int, list[Fraction]]] = []  # (pivot row, column)

    @property
    def rank(self) -> int:
        return len(self._reduced)

    def residual(self, col: list[Fraction]) -> list[Fraction]:
        v = list(col)
        for p, basis_col in self._reduced:
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, basis_col)]
        return v

    def add(self, col: list[Fraction]) -> bool:
        """Reduce col against the span; keep it (True) if independent."""
        v = self.residual(col)
        for p in range(self.dim):
            if v[p]:
                piv = v[p]
                if piv != 1:
                    v = [a / piv for a in v]
                self._reduced.append((p, v))
                return True
        return False
