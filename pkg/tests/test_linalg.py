import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxspec.coxeter import coxeter_datum
from coxspec.linalg import (
    LinalgError,
    cross_product_k,
    det,
    eigh_symmetric,
    perron_frobenius,
)

PHI = (1 + np.sqrt(5)) / 2


def cubic_roots(b, c, d):
    """Real roots of t^3 + b t^2 + c t + d via the trigonometric formula.

    Independent oracle for 3x3 symmetric eigenvalues (all roots real).
    """
    p = c - b**2 / 3
    q = 2 * b**3 / 27 - b * c / 3 + d
    m = 2 * np.sqrt(-p / 3)
    theta = np.arccos(np.clip(3 * q / (p * m), -1, 1)) / 3
    return sorted(
        (m * np.cos(theta - 2 * np.pi * k / 3) - b / 3 for k in range(3)), reverse=True
    )


class TestEigh:
    def test_identity(self):
        vals, vecs = eigh_symmetric(np.eye(3))
        assert np.allclose(vals, [1, 1, 1])
        assert np.allclose(vecs @ vecs.T, np.eye(3))

    def test_swap_matrix(self):
        vals, _ = eigh_symmetric([[0, 1], [1, 0]])
        assert np.allclose(vals, [1, -1])

    @pytest.mark.parametrize("name", ["A3", "B3", "H3"])
    def test_gram_matrix_vs_cubic_oracle(self, name):
        m = coxeter_datum(name).gram()
        # coefficients of det(tI - M)
        b = -np.trace(m)
        c = 0.5 * (np.trace(m) ** 2 - np.trace(m @ m))
        d = -np.linalg.det(m)
        expected = cubic_roots(b, c, d)
        vals, _ = eigh_symmetric(m)
        assert np.abs(vals - expected).max() <= 1e-10

    @pytest.mark.parametrize("n", [2, 5, 20, 80, 150])
    def test_reconstruction(self, n):
        rng = np.random.default_rng(n)
        a = rng.normal(size=(n, n))
        a = a + a.T
        vals, vecs = eigh_symmetric(a)
        scale = np.abs(a).max()
        assert np.abs(a - vecs @ np.diag(vals) @ vecs.T).max() <= 1e-9 * scale
        assert np.abs(vecs.T @ vecs - np.eye(n)).max() <= 1e-10
        assert np.all(np.diff(vals) <= 0)

    def test_deterministic_signs(self):
        rng = np.random.default_rng(0)
        a = rng.normal(size=(6, 6))
        a = a + a.T
        d1 = eigh_symmetric(a)
        d2 = eigh_symmetric(a.copy())
        assert np.array_equal(d1.eigenvectors, d2.eigenvectors)
        for r in range(6):
            col = d1.eigenvectors[:, r]
            assert col[np.abs(col).argmax()] > 0

    def test_rejects_nonsquare(self):
        with pytest.raises(LinalgError):
            eigh_symmetric(np.ones((2, 3)))

    def test_rejects_asymmetric(self):
        with pytest.raises(LinalgError):
            eigh_symmetric([[0, 1], [0, 0]])


class TestPerronFrobenius:
    def test_all_ones(self):
        lam, v = perron_frobenius(np.ones((3, 3)))
        assert abs(lam - 3) <= 1e-12
        assert np.abs(v - 1 / np.sqrt(3)).max() <= 1e-10

    @pytest.mark.parametrize(
        "name,expected",
        [("A3", 2 + np.sqrt(2)), ("B3", 4 + 2 * np.sqrt(3))],
    )
    def test_gram_inverse_closed_forms(self, name, expected):
        from coxspec.coxmaps import gram_inverse

        lam, v = perron_frobenius(gram_inverse(coxeter_datum(name)))
        assert abs(lam - expected) <= 1e-10
        assert np.all(v > 0)
        assert abs(np.linalg.norm(v) - 1) <= 1e-12

    def test_dominates_spectrum(self):
        rng = np.random.default_rng(3)
        a = rng.random((5, 5)) + 0.1
        s = (a + a.T) / 2
        lam, _ = perron_frobenius(s)
        vals, _ = eigh_symmetric(s)
        assert lam >= np.abs(vals).max() - 1e-10

    def test_rejects_nonpositive(self):
        with pytest.raises(LinalgError):
            perron_frobenius([[1, 0], [1, 1]])


class TestCrossProduct:
    def test_standard_basis(self):
        e = np.eye(3)
        assert np.allclose(cross_product_k(e[0], e[1]), e[2])

    def test_parallel_inputs(self):
        v = np.array([1.0, 2.0, 3.0])
        assert np.abs(cross_product_k(v, 2 * v)).max() <= 1e-14

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=30, deadline=None)
    def test_antisymmetry(self, seed):
        rng = np.random.default_rng(seed)
        v, w = rng.normal(size=(2, 3))
        assert np.abs(cross_product_k(v, w) + cross_product_k(w, v)).max() <= 1e-14

    def test_determinant_semantics(self):
        rng = np.random.default_rng(5)
        vs = rng.normal(size=(3, 4))
        w = cross_product_k(*vs)
        for v in vs:
            assert abs(w @ v) <= 1e-12
        u = rng.normal(size=4)
        assert abs(w @ u - np.linalg.det(np.column_stack([*vs, u]))) <= 1e-12

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(LinalgError):
            cross_product_k(np.ones(3), np.ones(4))


class TestDet:
    def test_identity(self):
        assert det(np.eye(4)) == pytest.approx(1.0)

    def test_diagonal(self):
        assert det(np.diag([2.0, 3.0, 4.0])) == pytest.approx(24.0)

    def test_h3_root_volume(self, h3):
        v = det(h3.roots.T)
        assert v**2 == pytest.approx((2 - PHI) / 4, abs=1e-12)
