"""Symplectic structures on Chevalley-Eilenberg models.

A candidate symplectic form is a degree-2 element omega = sum a_ij x_i x_j
(i < j). It is symplectic when (1) d omega = 0 and (2) the antisymmetric
coefficient matrix A = (a_ij) is nonsingular; (2) says omega(X,-) = 0
forces X = 0, and the functional omega(X,-) itself is the contraction

    iota_X omega = sum a_ij (alpha_i x_j - alpha_j x_i),  alpha_k = x_k(X).

The upper-triangle coefficients are the stored data; the full matrix and
everything derived from it (rank, kernel witnesses, Pfaffian) follow.

The search for a symplectic form runs over the space Z^2 of closed
2-forms. Nondegeneracy is a Zariski-open condition, so random rational
points hit it whenever it is nonempty; every hit is re-certified exactly.
Definitive negatives use the Pfaffian of the generic closed form: it is a
homogeneous polynomial of total degree dim/2 in the Z^2-coordinates, and
vanishing on the full principal lattice of that total degree (all
nonnegative integer points with coordinate sum <= dim/2) forces the
polynomial to vanish identically, turning a failed search into a proof.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg
from .cohomology import Cohomology
from .errors import StructuralError
from .exterior import Element
from .lie_algebras import CEModel

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class SymplecticForm:
    """A degree-2 element of a CE model with its skew coefficient matrix."""

    model: CEModel
    coeffs: tuple[tuple[int, int, Fraction], ...]  # (i, j, a_ij), 1-based, i < j

    @staticmethod
    def from_coeffs(model: CEModel, coeffs) -> SymplecticForm:
        n = model.n
        seen = set()
        normalized = []
        for i, j, c in coeffs:
            if not (1 <= i < j <= n):
                raise StructuralError(f"coefficient indices ({i},{j}) out of range")
            if (i, j) in seen:
                raise StructuralError(f"duplicate coefficient for ({i},{j})")
            seen.add((i, j))
            c = Fraction(c)
            if c:
                normalized.append((i, j, c))
        return SymplecticForm(model, tuple(sorted(normalized)))

    @staticmethod
    def from_element(model: CEModel, omega: Element) -> SymplecticForm:
        if omega.algebra is not model.algebra:
            raise StructuralError("omega lives over a different algebra")
        if not omega.is_zero() and omega.degree() != 2:
            raise StructuralError("omega must be homogeneous of degree 2")
        coeffs = []
        for key, c in omega.terms.items():
            # degree-2 monomials of a CE model are exactly x_i x_j, i < j
            i, j = key[0] + 1, key[2] + 1
            coeffs.append((i, j, c))
        return SymplecticForm.from_coeffs(model, coeffs)

    @property
    def omega(self) -> Element:
        terms = {(i - 1, 1, j - 1, 1): c for i, j, c in self.coeffs}
        return self.model.algebra.element(terms)

    def matrix(self) -> list[list[Fraction]]:
        n = self.model.n
        A = [[ZERO] * n for _ in range(n)]
        for i, j, c in self.coeffs:
            A[i - 1][j - 1] = c
            A[j - 1][i - 1] = -c
        return A

    def __str__(self):
        return str(self.omega)


def contraction(sf: SymplecticForm, alpha) -> Element:
    """iota_X omega for the vector X with x_k(X) = alpha_k.

    Literal expansion of sum a_ij (alpha_i x_j - alpha_j x_i); as a
    coordinate vector this is the product of A^T with alpha.
    """
    n = sf.model.n
    alpha = [Fraction(a) for a in alpha]
    if len(alpha) != n:
        raise StructuralError(f"alpha must have length {n}")
    coords = [ZERO] * n
    for i, j, c in sf.coeffs:
        coords[j - 1] += c * alpha[i - 1]
        coords[i - 1] -= c * alpha[j - 1]
    terms = {(k, 1): c for k, c in enumerate(coords) if c}
    return Element(sf.model.algebra, terms)


@dataclass(frozen=True)
class SymplecticCertificate:
    """Result of checking the two symplectic conditions; never an error."""

    closed: bool
    d_omega: Element
    even_dimensional: bool
    rank: int
    nondegenerate: bool
    kernel_witness: tuple[Fraction, ...] | None

    @property
    def symplectic(self) -> bool:
        return self.closed and self.even_dimensional and self.nondegenerate


def is_symplectic(model: CEModel, omega: Element) -> SymplecticCertificate:
    """Certify closedness and nondegeneracy of a degree-2 element."""
    sf = SymplecticForm.from_element(model, omega)
    d_omega = model.d(omega)
    A = sf.matrix()
    n = model.n
    rank = linalg.rank(A, n)
    witness = None
    if rank < n:
        kernel = linalg.nullspace(A, n)
        witness = tuple(kernel[0]) if kernel else None
    return SymplecticCertificate(
        closed=d_omega.is_zero(),
        d_omega=d_omega,
        even_dimensional=n % 2 == 0,
        rank=rank,
        nondegenerate=rank == n,
        kernel_witness=witness,
    )


def pfaffian(A: list[list[Fraction]]) -> Fraction:
    """Pfaffian of an even-dimensional antisymmetric matrix.

    Recursive expansion along the first row: for active indices
    (r0, r1, ...), Pf = sum_j (-1)^j A[r0][rj] Pf(rest). Exact and cheap at
    the sizes met here (dim <= 8).
    """
    n = len(A)
    if n % 2:
        raise StructuralError("Pfaffian needs even dimension")

    def rec(active: tuple[int, ...]) -> Fraction:
        if not active:
            return ONE
        r0 = active[0]
        total = ZERO
        sign = -1
        for pos in range(1, len(active)):
            sign = -sign  # (-1)^pos for pos = 1, 2, ...: +, -, +, ...
            a = A[r0][active[pos]]
            if a:
                rest = active[1:pos] + active[pos + 1 :]
                sub = rec(rest)
                if sub:
                    total += a * sub if sign > 0 else -a * sub
        return total

    return rec(tuple(range(n)))


@dataclass(frozen=True)
class SymplecticSearchResult:
    """Outcome of find_symplectic.

    status is one of:
      "found"             a certified form is attached;
      "definitively-none" no symplectic form exists on this model;
      "search-exhausted"  no witness found and the decision lattice was
                          over budget, so the negative is not certified.
    """

    status: str
    form: SymplecticForm | None
    certificate: SymplecticCertificate | None
    trials: int
    closed_dim: int
    reason: str
    seed: int | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def closed_two_form_basis(model: CEModel) -> list[SymplecticForm]:
    """Basis of Z^2, the closed 2-forms; all of degree 2 lies in Lambda^2 V."""
    slice2 = Cohomology(model.dga).slice(2)
    vectors = linalg.nullspace(slice2.d_out, slice2.dim)
    forms = []
    for v in vectors:
        omega = slice2.element(v)
        forms.append(SymplecticForm.from_element(model, omega))
    return forms


def _combine(basis_matrices, weights, n):
    A = [[ZERO] * n for _ in range(n)]
    for w, B in zip(weights, basis_matrices):
        if w:
            for r in range(n):
                row_a, row_b = A[r], B[r]
                for c in range(n):
                    if row_b[c]:
                        row_a[c] += w * row_b[c]
    return A


def _lattice_points(m: int, total: int):
    """Nonnegative integer m-tuples with coordinate sum <= total."""
    point = [0] * m

    def rec(i: int, left: int):
        if i == m:
            yield tuple(point)
            return
        for v in range(left + 1):
            point[i] = v
            yield from rec(i + 1, left - v)
        point[i] = 0

    yield from rec(0, total)


def find_symplectic(
    model: CEModel,
    seed: int = 0,
    max_trials: int = 64,
    lattice_budget: int = 200_000,
) -> SymplecticSearchResult:
    """Search Z^2 for a nondegenerate element; decide when none exists.

    Random phase: coefficients from the pool {-2,-1,1,2}, widening every 16
    trials; every candidate with nonzero Pfaffian is re-certified exactly.
    Decision phase: evaluate the Pfaffian of the generic closed form on the
    principal lattice of its total degree. A nonzero value is a witness; an
    all-zero sweep proves the Pfaffian is identically zero, hence that no
    closed 2-form is nondegenerate. The lattice has C(m + n/2, n/2) points
    (m = dim Z^2); beyond lattice_budget the status degrades to
    "search-exhausted" rather than a certified negative.
    """
    n = model.n
    if n % 2:
        return SymplecticSearchResult(
            status="definitively-none",
            form=None,
            certificate=None,
            trials=0,
            closed_dim=-1,
            reason=f"odd dimension {n}",
            seed=seed,
        )
    basis = closed_two_form_basis(model)
    m = len(basis)
    if m == 0:
        return SymplecticSearchResult(
            status="definitively-none",
            form=None,
            certificate=None,
            trials=0,
            closed_dim=0,
            reason="no nonzero closed 2-forms",
            seed=seed,
        )
    basis_matrices = [f.matrix() for f in basis]

    def certified(weights, trials):
        coeffs: dict[tuple[int, int], Fraction] = {}
        for w, f in zip(weights, basis):
            if w:
                for i, j, c in f.coeffs:
                    coeffs[(i, j)] = coeffs.get((i, j), ZERO) + w * c
        form = SymplecticForm.from_coeffs(
            model, [(i, j, c) for (i, j), c in coeffs.items()]
        )
        cert = is_symplectic(model, form.omega)
        if not cert.symplectic:
            raise StructuralError("search produced an uncertifiable candidate")
        return SymplecticSearchResult(
            status="found",
            form=form,
            certificate=cert,
            trials=trials,
            closed_dim=m,
            reason="nondegenerate closed 2-form found and re-certified",
            seed=seed,
        )

    rng = random.Random(seed)
    trials = 0
    for trials in range(1, max_trials + 1):
        bound = 2 << (trials - 1) // 16  # 2, then 4, 8, ... every 16 trials
        pool = [Fraction(v) for v in range(-bound, bound + 1) if v]
        weights = [rng.choice(pool) for _ in range(m)]
        A = _combine(basis_matrices, weights, n)
        if pfaffian(A):
            return certified(weights, trials)

    half = n // 2
    if comb(m + half, half) > lattice_budget:
        return SymplecticSearchResult(
            status="search-exhausted",
            form=None,
            certificate=None,
            trials=trials,
            closed_dim=m,
            reason=(
                f"no witness in {trials} random trials; decision lattice of "
                f"{comb(m + half, half)} points exceeds budget {lattice_budget}"
            ),
            seed=seed,
        )
    for point in _lattice_points(m, half):
        weights = [Fraction(v) for v in point]
        A = _combine(basis_matrices, weights, n)
        if pfaffian(A):
            return certified(weights, trials)
    return SymplecticSearchResult(
        status="definitively-none",
        form=None,
        certificate=None,
        trials=trials,
        closed_dim=m,
        reason=(
            "Pfaffian of the generic closed 2-form vanishes on the full "
            f"degree-{half} principal lattice, hence identically"
        ),
        seed=seed,
    )


@dataclass(frozen=True)
class LefschetzEntry:
    k: int
    source_degree: int
    target_degree: int
    source_betti: int
    target_betti: int
    rank: int
    isomorphism: bool


def hard_lefschetz(
    model: CEModel,
    sf: SymplecticForm,
    cohomology: Cohomology | None = None,
) -> list[LefschetzEntry]:
    """Rank of cup with [omega]^k : H^{n-k} -> H^{n+k} for 0 <= k <= n.

    n is half the dimension. Exact ranks; an entry is an isomorphism when
    the two Betti numbers agree and the cup matrix has full rank.
    """
    if sf.model.algebra is not model.algebra:
        raise StructuralError("form and model live over different generator sets")
    coh = cohomology if cohomology is not None else Cohomology(model.dga)
    half = model.n // 2
    if model.n % 2:
        raise StructuralError("hard Lefschetz needs an even-dimensional model")
    entries = []
    for k in range(half + 1):
        p, q = half - k, half + k
        omega_k = sf.omega.power(k)
        basis_p = coh.basis(p)
        basis_q = coh.basis(q)
        cols = [basis_q.reduce(omega_k * rep) for rep in basis_p.representatives]
        rows = [list(r) for r in zip(*cols)] if cols else []
        rk = linalg.rank(rows, len(cols)) if rows else 0
        entries.append(
            LefschetzEntry(
                k=k,
                source_degree=p,
                target_degree=q,
                source_betti=basis_p.betti,
                target_betti=basis_q.betti,
                rank=rk,
                isomorphism=basis_p.betti == basis_q.betti == rk,
            )
        )
    return entries
