"""Real and complex Hermite polynomials: closed form vs creation-operator
route, orthonormality conventions, basis transforms, and the monomial
expansion round trip.
"""

import math

import numpy as np
import pytest

from complexou import (
    PolyZZbar,
    SpectralCoeffs,
    build_basis_transform,
    complex_hermite,
    complex_hermite_via_creation,
    creation_z,
    creation_zbar,
    gauss_hermite_rule,
    hermite_product_poly,
    monomial_to_hermite,
    project_monomials,
    real_hermite,
    synthesize,
)

SQRT2 = math.sqrt(2.0)


def basis_indices(max_total):
    return [(m, total - m) for total in range(max_total + 1) for m in range(total + 1)]


class TestRealHermite:
    def test_small_degrees(self):
        assert real_hermite(0).coeffs == pytest.approx([1.0])
        assert real_hermite(1).coeffs == pytest.approx([0.0, 1.0])
        # (x^2 - 1)/sqrt(2)
        assert real_hermite(2).coeffs == pytest.approx([-1 / SQRT2, 0.0, 1 / SQRT2])

    def test_leading_coefficient(self):
        for n in range(13):
            lead = real_hermite(n).coeffs[-1]
            assert lead == pytest.approx(1.0 / math.sqrt(math.factorial(n)), rel=1e-13)

    def test_against_reference_basis(self):
        # numpy's probabilist Hermite basis He_n; ours is He_n / sqrt(n!)
        for n in range(11):
            ref = np.polynomial.hermite_e.herme2poly([0.0] * n + [1.0])
            ref = ref / math.sqrt(math.factorial(n))
            np.testing.assert_allclose(real_hermite(n).coeffs, ref, atol=1e-12)

    def test_orthonormal_under_gaussian_weight(self):
        rule = gauss_hermite_rule(12)
        vals = np.array([real_hermite(n).eval(rule.nodes) for n in range(9)])
        gram = (vals * rule.weights) @ vals.T
        np.testing.assert_allclose(gram, np.eye(9), atol=1e-12)

    def test_degree_out_of_range(self):
        with pytest.raises(ValueError):
            real_hermite(-1)
        with pytest.raises(ValueError):
            real_hermite(65)


class TestComplexHermiteClosedForm:
    def test_examples(self):
        assert complex_hermite(0, 0) == PolyZZbar.constant(1.0)
        assert (complex_hermite(1, 0) - PolyZZbar({(1, 0): 1 / SQRT2})).max_abs_coeff() <= 1e-15
        j11 = complex_hermite(1, 1)
        assert (j11 - PolyZZbar({(1, 1): 0.5, (0, 0): -1.0})).max_abs_coeff() <= 1e-15

    def test_exact_bidegree(self):
        for m, n in basis_indices(8):
            top = complex_hermite(m, n).coeff(m, n)
            assert abs(top) > 0.0
            assert complex_hermite(m, n).degree == m + n

    def test_conjugation_swaps_indices(self):
        for m, n in basis_indices(8):
            assert complex_hermite(m, n).conjugate() == complex_hermite(n, m)

    def test_unit_norm_under_quadrature(self):
        rule = gauss_hermite_rule(12)
        pts, wts = rule.tensor_points()
        for m, n in ((0, 0), (3, 1), (2, 2), (5, 0)):
            vals = complex_hermite(m, n).eval(pts)
            norm_sq = np.sum(wts * np.abs(vals) ** 2)
            assert norm_sq == pytest.approx(1.0, abs=1e-12)

    def test_degree_out_of_range(self):
        with pytest.raises(ValueError):
            complex_hermite(40, 25)
        with pytest.raises(ValueError):
            complex_hermite(-1, 0)


class TestCreationRoute:
    def test_single_applications(self):
        one = PolyZZbar.constant(1.0)
        assert creation_z(one) == PolyZZbar({(1, 0): 0.5})
        assert creation_zbar(one) == PolyZZbar({(0, 1): 0.5})

    def test_examples(self):
        assert (
            complex_hermite_via_creation(1, 0) - PolyZZbar({(1, 0): 1 / SQRT2})
        ).max_abs_coeff() <= 1e-15
        assert (
            complex_hermite_via_creation(0, 1) - PolyZZbar({(0, 1): 1 / SQRT2})
        ).max_abs_coeff() <= 1e-15
        assert (
            complex_hermite_via_creation(2, 0) - PolyZZbar({(2, 0): 1 / (2 * SQRT2)})
        ).max_abs_coeff() <= 1e-15

    def test_agrees_with_closed_form(self):
        for m, n in basis_indices(12):
            explicit = complex_hermite(m, n)
            built = complex_hermite_via_creation(m, n)
            resid = (explicit - built).max_abs_coeff()
            assert resid <= 1e-10 * max(1.0, explicit.max_abs_coeff())

    def test_degree_out_of_range(self):
        with pytest.raises(ValueError):
            complex_hermite_via_creation(20, 13)


class TestBasisTransform:
    def test_level_zero_is_identity(self):
        tr = build_basis_transform(0)
        np.testing.assert_allclose(tr.forward, [[1.0]])
        np.testing.assert_allclose(tr.inverse, [[1.0]])

    def test_level_one_row(self):
        # J[1,0] = (x + i*y)/sqrt(2); column k multiplies H_k(x)H_{1-k}(y),
        # so k=0 holds the y coefficient and k=1 the x coefficient
        tr = build_basis_transform(1)
        np.testing.assert_allclose(tr.forward[1], [1j / SQRT2, 1 / SQRT2], atol=1e-15)

    def test_level_two_product_is_identity(self):
        tr = build_basis_transform(2)
        np.testing.assert_allclose(tr.forward @ tr.inverse, np.eye(3), atol=1e-12)

    def test_mutual_inverse_and_unitarity(self):
        for level in range(17):
            tr = build_basis_transform(level)
            eye = np.eye(level + 1)
            assert np.max(np.abs(tr.forward @ tr.inverse - eye)) <= 1e-10
            assert np.max(np.abs(tr.forward @ tr.forward.conj().T - eye)) <= 1e-10
            assert np.max(np.abs(tr.inverse @ tr.inverse.conj().T - eye)) <= 1e-10

    def test_reproduces_basis_polynomials(self):
        # forward rows applied to H_k(x)H_{l-k}(y), expanded in (z, zbar),
        # must rebuild J[m, l-m]; inverse rows go the other way.
        for level in range(9):
            products = [hermite_product_poly(k, level - k) for k in range(level + 1)]
            tr = build_basis_transform(level)
            for m in range(level + 1):
                rebuilt = PolyZZbar.zero()
                for k in range(level + 1):
                    rebuilt = rebuilt + products[k] * complex(tr.forward[m, k])
                assert (rebuilt - complex_hermite(m, level - m)).max_abs_coeff() <= 1e-9
            for k in range(level + 1):
                rebuilt = PolyZZbar.zero()
                for m in range(level + 1):
                    rebuilt = rebuilt + complex_hermite(m, level - m) * complex(
                        tr.inverse[k, m]
                    )
                assert (rebuilt - products[k]).max_abs_coeff() <= 1e-9

    def test_degree_out_of_range(self):
        with pytest.raises(ValueError):
            build_basis_transform(17)


class TestMonomialExpansion:
    def test_examples(self):
        z = monomial_to_hermite(1, 0)
        assert set(z.terms) == {(1, 0)}
        assert z.coeff(1, 0) == pytest.approx(SQRT2)

        zzbar = monomial_to_hermite(1, 1)
        assert zzbar.coeff(1, 1) == pytest.approx(2.0)
        assert zzbar.coeff(0, 0) == pytest.approx(2.0)

        assert monomial_to_hermite(0, 0) == SpectralCoeffs({(0, 0): 1.0})

    def test_support_is_diagonal_shift(self):
        exp = monomial_to_hermite(5, 3)
        assert set(exp.terms) == {(5 - k, 3 - k) for k in range(4)}

    def test_roundtrip_on_monomials(self):
        # expansion coefficients are large at degree 10 (~1e6) and cancel on
        # the way back, so the float floor of this round trip is ~1e-10
        for a, b in basis_indices(10):
            back = synthesize(monomial_to_hermite(a, b))
            assert (back - PolyZZbar.monomial(a, b)).max_abs_coeff() <= 1e-9

    def test_project_is_linear_inverse_of_synthesize(self):
        rng = np.random.default_rng(37)
        coeffs = SpectralCoeffs(
            {
                (m, n): complex(rng.standard_normal(), rng.standard_normal())
                for m, n in basis_indices(8)
            }
        )
        back = project_monomials(synthesize(coeffs))
        worst = max(
            abs(back.coeff(m, n) - coeffs.coeff(m, n)) for m, n in basis_indices(8)
        )
        assert worst <= 1e-9

    def test_degree_out_of_range(self):
        with pytest.raises(ValueError):
            monomial_to_hermite(33, 32)


def test_spectral_coeffs_json_roundtrip():
    coeffs = SpectralCoeffs({(1, 0): 1.0 + 2.0j, (0, 2): -0.5})
    text = coeffs.to_json(theta=0.25)
    back, theta = SpectralCoeffs.from_json(text)
    assert back == coeffs
    assert theta == 0.25
    back, theta = SpectralCoeffs.from_json(coeffs.to_json())
    assert back == coeffs and theta is None


def test_spectral_coeffs_sorted_by_total_degree():
    coeffs = SpectralCoeffs({(2, 0): 1.0, (0, 1): 1.0, (1, 0): 1.0})
    assert [key for key, _ in coeffs.items_sorted()] == [(0, 1), (1, 0), (2, 0)]
