import numpy as np
import pytest

from quditgeom import jacobi_eigvalsh, real_roots


@pytest.mark.parametrize("n", range(2, 10))
def test_jacobi_matches_numpy_on_random_hermitian(n):
    rng = np.random.default_rng(40 + n)
    for _ in range(25):
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = (a + a.conj().T) / 2
        np.testing.assert_allclose(
            jacobi_eigvalsh(h), np.linalg.eigvalsh(h), atol=1e-12 * max(1, np.abs(h).max())
        )


def test_jacobi_real_symmetric_and_diagonal():
    h = np.diag([3.0, -1.0, 2.0])
    np.testing.assert_allclose(jacobi_eigvalsh(h), [-1.0, 2.0, 3.0], atol=0)
    h = np.array([[2.0, 1.0], [1.0, 2.0]])
    np.testing.assert_allclose(jacobi_eigvalsh(h), [1.0, 3.0], atol=1e-14)


def test_jacobi_rejects_non_square():
    with pytest.raises(ValueError):
        jacobi_eigvalsh(np.zeros((2, 3)))


def test_jacobi_is_deterministic():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    h = (a + a.conj().T) / 2
    first = jacobi_eigvalsh(h)
    second = jacobi_eigvalsh(h)
    assert np.array_equal(first, second)


def _poly_from_roots(roots, leading=1.0):
    coeffs = np.array([leading])
    for r in roots:
        coeffs = np.convolve(coeffs, [-r, 1.0][::-1])
    return coeffs[::-1]  # ascending


@pytest.mark.parametrize("degree", [1, 2, 3, 4])
def test_real_roots_recovers_well_separated_roots(degree):
    rng = np.random.default_rng(degree)
    for _ in range(100):
        truth = np.sort(rng.uniform(-3, 3, degree))
        while degree > 1 and np.min(np.diff(truth)) < 0.1:
            truth = np.sort(rng.uniform(-3, 3, degree))
        coeffs = _poly_from_roots(truth, leading=rng.uniform(0.5, 2.0))
        found = real_roots(coeffs)
        assert found.size == degree
        np.testing.assert_allclose(found, truth, atol=1e-8)


def test_real_roots_with_complex_pair():
    # (x - 1)(x^2 + 1): single real root
    coeffs = np.array([-1.0, 1.0, -1.0, 1.0])
    found = real_roots(coeffs)
    assert found.size == 1
    assert found[0] == pytest.approx(1.0, abs=1e-12)


def test_real_roots_quartic_with_two_complex_pairs():
    # (x^2 + 1)(x^2 + 4): no real roots
    coeffs = np.array([4.0, 0.0, 5.0, 0.0, 1.0])
    assert real_roots(coeffs).size == 0


def test_real_roots_degenerate_leading_coefficient():
    # a quartic whose leading term vanishes numerically reduces to a cubic
    cubic = _poly_from_roots([-2.0, 0.5, 1.5])
    coeffs = np.append(cubic, 1e-18)
    np.testing.assert_allclose(real_roots(coeffs), [-2.0, 0.5, 1.5], atol=1e-8)


def test_real_roots_biquadratic():
    # x^4 - 5x^2 + 4 = (x^2-1)(x^2-4)
    coeffs = np.array([4.0, 0.0, -5.0, 0.0, 1.0])
    np.testing.assert_allclose(real_roots(coeffs), [-2.0, -1.0, 1.0, 2.0], atol=1e-10)


def test_real_roots_rejects_bad_input():
    with pytest.raises(ValueError):
        real_roots([])
    with pytest.raises(ValueError):
        real_roots([0.0, 0.0])
    with pytest.raises(ValueError):
        real_roots([1.0] * 6)
