"""Cohomology of finite-type free DGAs by exact linear algebra.

Everything is per-degree: the degree-k component of a free graded algebra
is finite dimensional even when the algebra is not (polynomial generators
contribute boundedly many exponents per degree). A DegreeSlice fixes the
sorted monomial basis in degrees k-1, k, k+1 and the matrices of the
differential; Betti numbers come from exact ranks, and representative
cocycles from echelon pivoting, so repeated runs give identical bases.

Ranks go through the fraction-free integer path in nilsplit.linalg. The
test suite checks every Betti number here against an independent naive
dense elimination oracle.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import DegreeCapError, StructuralError
from .exterior import Element, FreeDGA

ZERO = Fraction(0)
ONE = Fraction(1)


class DegreeSlice:
    """Degree-k basis and differential matrices of a free DGA.

    `d_out` is the matrix of d: C^k -> C^{k+1} (rows indexed by the
    degree-(k+1) basis, columns by the degree-k basis); `d_in` is the
    matrix of d: C^{k-1} -> C^k. Bases are sorted monomial key lists.
    """

    def __init__(self, dga: FreeDGA, degree: int):
        if degree < 0:
            raise StructuralError("degree must be nonnegative")
        self.dga = dga
        self.degree = degree
        alg = dga.algebra
        self.basis = alg.monomials_of_degree(degree)
        self.basis_below = alg.monomials_of_degree(degree - 1) if degree else []
        self.basis_above = alg.monomials_of_degree(degree + 1)
        self.d_out = self._matrix(self.basis, self.basis_above)
        self.d_in = self._matrix(self.basis_below, self.basis)

    def _matrix(self, src_basis, dst_basis):
        index = {key: r for r, key in enumerate(dst_basis)}
        rows = [[ZERO] * len(src_basis) for _ in dst_basis]
        for c, key in enumerate(src_basis):
            image = self.dga.d(Element(self.dga.algebra, {key: ONE}))
            for mon, coeff in image.terms.items():
                rows[index[mon]][c] = coeff
        return rows

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, u: Element) -> list[Fraction]:
        """Coordinate vector of a homogeneous degree-k element."""
        if u.algebra is not self.dga.algebra:
            raise StructuralError("element lives over a different algebra")
        index = {key: r for r, key in enumerate(self.basis)}
        v = [ZERO] * self.dim
        for mon, coeff in u.terms.items():
            r = index.get(mon)
            if r is None:
                raise StructuralError(
                    f"monomial {self.dga.algebra.monomial_str(mon)} is not of degree {self.degree}"
                )
            v[r] = coeff
        return v

    def element(self, coords) -> Element:
        terms = {key: c for key, c in zip(self.basis, coords) if c}
        return Element(self.dga.algebra, terms)


class CohomologyBasis:
    """Chosen representatives of H^k and reduction mod coboundaries."""

    def __init__(self, slice_: DegreeSlice, boundary_cols, representatives_coords):
        self.slice = slice_
        self.degree = slice_.degree
        self._rep_coords = representatives_coords
        self.representatives = [slice_.element(v) for v in representatives_coords]
        self.betti = len(representatives_coords)
        # Rows of [independent coboundaries | representatives]; solving
        # against this matrix projects a cocycle onto its class coordinates.
        self._n_boundary = len(boundary_cols)
        cols = boundary_cols + representatives_coords
        self._solve_rows = [list(row) for row in zip(*cols)] if cols else []

    def reduce(self, u: Element) -> list[Fraction]:
        """Coordinates of a degree-k cocycle in the chosen basis of H^k."""
        du = self.slice.dga.d(u)
        if not du.is_zero():
            raise StructuralError("reduce() expects a cocycle; d(u) != 0")
        v = self.slice.coordinates(u)
        if not self._solve_rows:
            return []
        x = linalg.solve(self._solve_rows, v)
        if x is None:
            raise StructuralError("cocycle does not lie in the computed span")
        return x[self._n_boundary :]

    def class_element(self, coords) -> Element:
        out = self.slice.dga.algebra.zero()
        for c, rep in zip(coords, self.representatives):
            if c:
                out = out + rep.scale(c)
        return out


class Cohomology:
    """Per-degree cohomology analyzer with cached slices and bases.

    Slices for distinct degrees are independent; max_degree, when given,
    bounds how far the analyzer will look (polynomial-type algebras are
    infinite, so callers working with them must cap).
    """

    def __init__(self, dga: FreeDGA, max_degree: int | None = None):
        self.dga = dga
        self.max_degree = max_degree
        self._slices: dict[int, DegreeSlice] = {}
        self._bases: dict[int, CohomologyBasis] = {}

    def slice(self, k: int) -> DegreeSlice:
        if self.max_degree is not None and k > self.max_degree:
            raise DegreeCapError(
                f"degree {k} beyond configured cap {self.max_degree}"
            )
        if k not in self._slices:
            self._slices[k] = DegreeSlice(self.dga, k)
        return self._slices[k]

    def betti(self, k: int) -> int:
        """dim ker d_k - rank d_{k-1}, by exact fraction-free ranks."""
        if k < 0:
            return 0
        s = self.slice(k)
        rank_out = linalg.rank(s.d_out, s.dim)
        rank_in = linalg.rank(s.d_in, len(s.basis_below))
        return s.dim - rank_out - rank_in

    def betti_vector(self, cap: int) -> list[int]:
        return [self.betti(k) for k in range(cap + 1)]

    def basis(self, k: int) -> CohomologyBasis:
        """Representative cocycles for H^k, deterministic via echelon order."""
        if k not in self._bases:
            s = self.slice(k)
            cocycles = linalg.nullspace(s.d_out, s.dim)
            boundary_cols = []
            reducer = linalg.ColumnReducer(s.dim)
            if s.basis_below:
                for col in zip(*s.d_in):
                    col = list(col)
                    if reducer.add(col):
                        boundary_cols.append(col)
            reps = [z for z in cocycles if reducer.add(z)]
            self._bases[k] = CohomologyBasis(s, boundary_cols, reps)
        return self._bases[k]

    def cup(self, p: int, coords_p, q: int, coords_q) -> list[Fraction]:
        """Product of classes, reduced at degree p+q against its basis."""
        if self.max_degree is not None and p + q > self.max_degree:
            raise DegreeCapError(
                f"cup lands in degree {p + q}, beyond cap {self.max_degree}"
            )
        u = self.basis(p).class_element(coords_p)
        v = self.basis(q).class_element(coords_q)
        return self.basis(p + q).reduce(u * v)

    def euler_characteristic(self, cap: int) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti_vector(cap)))


def poincare_check(cohomology: Cohomology, n: int) -> bool:
    """b_k == b_{n-k} for 0 <= k <= n; duality of unimodular CE models."""
    bettis = cohomology.betti_vector(n)
    return all(bettis[k] == bettis[n - k] for k in range(n + 1))
