"""Symplectic certificates, contraction, the search, hard Lefschetz."""

import random
from fractions import Fraction

import pytest
from oracles import rank_naive

from nilsplit.cohomology import Cohomology
from nilsplit.errors import StructuralError
from nilsplit.lie_algebras import LieAlgebraSpec, ce_model
from nilsplit.symplectic import (
    SymplecticForm,
    _lattice_points,
    contraction,
    find_symplectic,
    hard_lefschetz,
    is_symplectic,
    pfaffian,
)

F = Fraction


@pytest.fixture(scope="module")
def t2():
    return ce_model(LieAlgebraSpec(dim=2, brackets=()))


@pytest.fixture(scope="module")
def t4():
    return ce_model(LieAlgebraSpec(dim=4, brackets=()))


@pytest.fixture(scope="module")
def kt():
    return ce_model(LieAlgebraSpec(dim=4, brackets=((1, 2, 3, F(1)),)))


def test_contraction_zero_vector(kt, symplectic_forms):
    sf = symplectic_forms["kodaira-thurston"]
    assert contraction(sf, [0, 0, 0, 0]).is_zero()


def test_contraction_t2(t2):
    sf = SymplecticForm.from_coeffs(t2, [(1, 2, 1)])
    assert contraction(sf, [1, 0]) == t2.algebra.gen("x2")


def test_contraction_kt(kt):
    sf = SymplecticForm.from_coeffs(kt, [(1, 4, 1), (2, 3, 1)])
    assert contraction(sf, [0, 0, 1, 0]) == -kt.algebra.gen("x2")


def test_contraction_is_transpose_matrix_action(kt):
    rng = random.Random(5)
    sf = SymplecticForm.from_coeffs(kt, [(1, 4, 1), (2, 3, 2), (1, 2, -3)])
    A = sf.matrix()
    for _ in range(25):
        alpha = [F(rng.randint(-4, 4)) for _ in range(4)]
        got = contraction(sf, alpha)
        coords = [
            sum(A[i][k] * alpha[i] for i in range(4)) for k in range(4)
        ]
        want = kt.algebra.element({(k, 1): c for k, c in enumerate(coords) if c})
        assert got == want


def test_is_symplectic_torus_standard(t4):
    omega = t4.algebra.element({(0, 1, 1, 1): F(1), (2, 1, 3, 1): F(1)})
    cert = is_symplectic(t4, omega)
    assert cert.symplectic and cert.closed and cert.rank == 4


def test_is_symplectic_kt_good_form(kt):
    omega = kt.algebra.element({(0, 1, 3, 1): F(1), (1, 1, 2, 1): F(1)})
    cert = is_symplectic(kt, omega)
    assert cert.symplectic
    assert cert.d_omega.is_zero()


def test_is_symplectic_kt_non_closed_form(kt):
    # d(x3 x4) = (d x3) x4 = -x1 x2 x4
    omega = kt.algebra.element({(0, 1, 1, 1): F(1), (2, 1, 3, 1): F(1)})
    cert = is_symplectic(kt, omega)
    assert not cert.closed
    x = kt.algebra
    assert cert.d_omega == -(x.gen("x1") * x.gen("x2") * x.gen("x4"))
    assert not cert.symplectic


def test_is_symplectic_reports_kernel_witness(t4):
    omega = t4.algebra.element({(0, 1, 1, 1): F(1)})  # x1 x2: rank 2
    cert = is_symplectic(t4, omega)
    assert cert.closed and not cert.nondegenerate and cert.rank == 2
    w = list(cert.kernel_witness)
    assert any(w) and w[0] == 0 and w[1] == 0  # kernel misses x1, x2 directions


def test_certificate_invariant_under_scaling(symplectic_forms):
    sf = symplectic_forms["kodaira-thurston"]
    for scale in (F(2), F(-1, 3), F(7, 5)):
        cert = is_symplectic(sf.model, sf.omega.scale(scale))
        assert cert.symplectic


def test_pfaffian_small_cases():
    assert pfaffian([[F(0), F(3)], [F(-3), F(0)]]) == 3
    A = [
        [F(0), F(1), F(0), F(0)],
        [F(-1), F(0), F(0), F(0)],
        [F(0), F(0), F(0), F(2)],
        [F(0), F(0), F(-2), F(0)],
    ]
    assert pfaffian(A) == 2


def test_pfaffian_squares_to_determinant():
    rng = random.Random(17)
    for n in (2, 4, 6):
        for _ in range(20):
            A = [[F(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    c = F(rng.randint(-3, 3))
                    A[i][j] = c
                    A[j][i] = -c
            pf = pfaffian(A)
            # det via rank-revealing product of pivots: use naive elimination
            det = _det_naive([row[:] for row in A])
            assert pf * pf == det


def _det_naive(rows):
    n = len(rows)
    det = F(1)
    for c in range(n):
        p = None
        for r in range(c, n):
            if rows[r][c]:
                p = r
                break
        if p is None:
            return F(0)
        if p != c:
            rows[p], rows[c] = rows[c], rows[p]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c]:
                f = rows[r][c] / rows[c][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return det


def test_find_symplectic_torus_certified(t4):
    res = find_symplectic(t4, seed=3)
    assert res.found and res.certificate.symplectic
    assert res.closed_dim == 6  # all 2-forms on the torus are closed


def test_find_symplectic_kt(kt):
    res = find_symplectic(kt, seed=3)
    assert res.found and res.certificate.symplectic
    assert res.closed_dim == 5  # x3 x4 is the one non-closed direction


def test_find_symplectic_succeeds_on_every_symplectic_catalog_entry(catalog_models):
    from nilsplit import catalog

    for name in catalog.symplectic_names():
        res = find_symplectic(catalog_models[name], seed=1)
        assert res.found, name
        assert res.certificate.symplectic, name


def test_find_symplectic_deterministic_given_seed(kt):
    a = find_symplectic(kt, seed=12)
    b = find_symplectic(kt, seed=12)
    assert a.form.coeffs == b.form.coeffs and a.trials == b.trials


def test_find_symplectic_odd_dimension_definitive():
    h3 = ce_model(LieAlgebraSpec(dim=3, brackets=((1, 2, 3, F(1)),)))
    res = find_symplectic(h3, seed=0)
    assert res.status == "definitively-none"
    assert "odd" in res.reason


def test_find_symplectic_h5r_definitive(catalog_models):
    res = find_symplectic(catalog_models["heisenberg5-plus-r"], seed=0)
    assert res.status == "definitively-none"
    assert res.trials == 64  # the random phase really was exhausted first
    assert res.closed_dim == 10


def test_find_symplectic_lattice_budget_degrades_gracefully(catalog_models):
    res = find_symplectic(catalog_models["heisenberg5-plus-r"], seed=0, lattice_budget=5)
    assert res.status == "search-exhausted"


def test_lattice_points_count():
    pts = list(_lattice_points(3, 2))
    assert len(pts) == 10  # C(3+2, 2)
    assert len(set(pts)) == 10
    assert all(sum(p) <= 2 for p in pts)


def test_lattice_decision_lemma_on_random_cubics():
    """A nonzero homogeneous cubic is nonzero somewhere on the lattice."""
    rng = random.Random(23)
    m, deg = 3, 3
    from itertools import combinations_with_replacement

    monomials = list(combinations_with_replacement(range(m), deg))
    for _ in range(50):
        coeffs = {mon: F(rng.randint(-3, 3)) for mon in monomials}
        if all(c == 0 for c in coeffs.values()):
            continue
        values = []
        for point in _lattice_points(m, deg):
            total = F(0)
            for mon, c in coeffs.items():
                term = c
                for var in mon:
                    term *= point[var]
                total += term
            values.append(total)
        assert any(values)


def test_top_power_nonzero_for_certified_forms(catalog_models, symplectic_forms):
    for name, sf in symplectic_forms.items():
        model = catalog_models[name]
        half = model.n // 2
        top = sf.omega.power(half)
        assert not top.is_zero(), name
        # and the class survives in H^top: reduce against the top basis
        coh = Cohomology(model.dga)
        coords = coh.basis(model.n).reduce(top)
        assert any(c != 0 for c in coords), name


def test_contraction_vanishes_only_at_zero(catalog_models, symplectic_forms):
    rng = random.Random(31)
    for name, sf in symplectic_forms.items():
        n = catalog_models[name].n
        for _ in range(20):
            alpha = [F(rng.randint(-3, 3)) for _ in range(n)]
            if all(a == 0 for a in alpha):
                continue
            assert not contraction(sf, alpha).is_zero(), name


def test_hard_lefschetz_torus(catalog_models, symplectic_forms):
    entries = hard_lefschetz(catalog_models["torus4"], symplectic_forms["torus4"])
    assert all(e.isomorphism for e in entries)


def test_hard_lefschetz_kt_fails_exactly_at_k1(catalog_models, symplectic_forms):
    entries = hard_lefschetz(
        catalog_models["kodaira-thurston"], symplectic_forms["kodaira-thurston"]
    )
    by_k = {e.k: e for e in entries}
    assert by_k[0].isomorphism
    assert by_k[2].isomorphism
    assert not by_k[1].isomorphism
    assert by_k[1].rank == 2 and by_k[1].source_betti == 3


def test_hard_lefschetz_endpoints_always_iso(catalog_models, symplectic_forms):
    for name, sf in symplectic_forms.items():
        entries = hard_lefschetz(catalog_models[name], sf)
        assert entries[0].isomorphism, name
        assert entries[-1].isomorphism, name


def test_hard_lefschetz_rank_against_naive_oracle(symplectic_forms):
    """Rebuild the k=1 cup matrix by hand and rank it with the oracle."""
    sf = symplectic_forms["kodaira-thurston"]
    coh = Cohomology(sf.model.dga)
    b1, b3 = coh.basis(1), coh.basis(3)
    cols = [b3.reduce(sf.omega * rep) for rep in b1.representatives]
    rows = [list(r) for r in zip(*cols)]
    assert rank_naive(rows) == 2


def test_from_element_rejects_wrong_degree(kt):
    with pytest.raises(StructuralError):
        SymplecticForm.from_element(kt, kt.algebra.gen("x1"))
