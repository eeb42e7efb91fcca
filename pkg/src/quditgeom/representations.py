"""The three diagonal-state representations and the maps between them.

A diagonal density matrix of dimension n can be described in three
equivalent coordinate systems:

* p-space: the eigenvalue (probability) vector itself, a point of the
  (n-1)-simplex ``sum_j p_j = 1``, ``0 <= p_j <= 1``;
* lambda-space: the n - 1 coefficients of the diagonal generators in the
  Bloch expansion ``rho = I/n + (1/2) sum_l lambda_{k_l} F_l`` (index
  convention ``k_l = n^2 - n + l``, see :mod:`quditgeom.basis`);
* t-space: the trace-power invariants ``t_l = Tr(rho^l)`` for l = 2..n,
  which are unitarily invariant and blind to coordinate permutations.

p and lambda are related by an invertible affine map (exposed through
:func:`transformation_matrices` in the augmented-vector form
``p = M (lambda_1, ..., lambda_{n-1}, 1)``); the map to t-space is
polynomial and not invertible.

All map functions broadcast over leading axes: an input of shape
``(..., n)`` produces an output of shape ``(..., n-1)`` and vice versa.
Everything here is a pure function of its arguments and safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .basis import bloch_bound, simplex_frame
from .config import DEFAULT
from .errors import DimensionError, PositivityError

__all__ = [
    "DegeneracyPattern",
    "SimplexPoint",
    "PositivityResult",
    "diagonal_coefficients",
    "transformation_matrices",
    "check_probability_vector",
    "p_to_lambda",
    "lambda_to_p",
    "invariants",
    "t_vertices",
    "polar_to_p",
    "positivity_check",
    "orbit_classification",
]


class SimplexPoint(NamedTuple):
    """A p-space point together with a flag telling whether it is physical."""

    p: np.ndarray
    physical: bool


class PositivityResult(NamedTuple):
    """Outcome of the characteristic-polynomial positivity test."""

    positive: bool
    coefficients: np.ndarray


@dataclass(frozen=True)
class DegeneracyPattern:
    """Eigenvalue multiplicities and the dimension of the unitary orbit.

    For multiplicities (m_1, ..., m_l) the stabilizer of the diagonal
    matrix is U(m_1) x ... x U(m_l) and the orbit is the flag manifold
    U(n) / (U(m_1) x ... x U(m_l)) of dimension n^2 - sum m_i^2.
    """

    multiplicities: tuple
    orbit_dimension: int


def diagonal_coefficients(n: int) -> np.ndarray:
    """Matrix A with ``A[l-1, s] = (F_l)_ss`` (rows are generator diagonals)."""
    return math.sqrt(2.0) * simplex_frame(n).axes


def transformation_matrices(n: int):
    """The affine map between p-space and lambda-space.

    Returns ``(M, M_inv)`` with ``p = M @ (lambda_1, ..., lambda_{n-1}, 1)``
    and ``(lambda_1, ..., lambda_{n-1}, 1) = M_inv @ p``.
    """
    a = diagonal_coefficients(n)
    m = np.empty((n, n))
    m[:, :-1] = a.T / 2.0
    m[:, -1] = 1.0 / n
    m_inv = np.vstack([a, np.ones(n)])
    return m, m_inv


def check_probability_vector(p, tol: float | None = None, *, name: str = "p") -> np.ndarray:
    """Validate simplex membership of ``p`` (broadcasts over leading axes).

    Raises :class:`PositivityError` naming the first offending component,
    or :class:`ValueError` when the normalization is off.
    """
    tol = DEFAULT.simplex if tol is None else tol
    p = np.asarray(p, dtype=float)
    if p.shape[-1] < 2:
        raise DimensionError(f"{name} must have at least 2 components")
    if not np.all(np.isfinite(p)):
        raise ValueError(f"{name} contains non-finite entries")
    bad = (p < -tol) | (p > 1.0 + tol)
    if bad.any():
        idx = tuple(np.argwhere(bad)[0])
        raise PositivityError(
            f"{name}[{idx[-1] + 1}] = {p[idx]!r} lies outside [0, 1]",
            component=int(idx[-1]) + 1,
            value=float(p[idx]),
        )
    sums = p.sum(axis=-1)
    if np.max(np.abs(sums - 1.0)) > tol:
        worst = np.unravel_index(np.argmax(np.abs(sums - 1.0)), np.shape(sums) or (1,))
        raise ValueError(f"{name} does not sum to 1 (defect {np.abs(sums - 1.0).max():.3e} at {worst})")
    return p


def p_to_lambda(p, *, validate: bool = True) -> np.ndarray:
    """Map probability vectors to diagonal Bloch coefficients.

    ``lambda_{k_l} = sum_s (F_l)_ss p_s``, the expectation values of the
    diagonal generators.  Inverse of :func:`lambda_to_p`.
    """
    p = np.asarray(p, dtype=float)
    if validate:
        check_probability_vector(p)
    return p @ diagonal_coefficients(p.shape[-1]).T


def lambda_to_p(lam, *, validate: bool = True) -> np.ndarray:
    """Map diagonal Bloch coefficients to probability vectors.

    ``p_s = 1/n + (1/2) sum_l (F_l)_ss lambda_{k_l}``.  With ``validate``
    on, coefficients whose image leaves the simplex raise a
    :class:`PositivityError` naming the offending component.
    """
    lam = np.asarray(lam, dtype=float)
    n = lam.shape[-1] + 1
    p = 1.0 / n + 0.5 * (lam @ diagonal_coefficients(n))
    if validate:
        check_probability_vector(p, name="mapped p")
    return p


def invariants(p, *, validate: bool = True) -> np.ndarray:
    """Trace-power invariants ``t_l = sum_j p_j^l`` for l = 2..n."""
    p = np.asarray(p, dtype=float)
    if validate:
        check_probability_vector(p)
    n = p.shape[-1]
    return np.stack([(p**ell).sum(axis=-1) for ell in range(2, n + 1)], axis=-1)


def t_vertices(n: int) -> np.ndarray:
    """The n vertices of the physical region in t-space.

    Row k-1 (k = 1..n) is ``(1/k, 1/k^2, ..., 1/k^(n-1))``, the invariant
    vector of the state mixing k pure states with equal weight.  k = 1 is
    the pure state, k = n the most mixed state.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise DimensionError(f"dimension must be an integer >= 2, got {n!r}")
    k = np.arange(1, n + 1, dtype=float)[:, None]
    ell = np.arange(1, n, dtype=float)[None, :]
    return 1.0 / k**ell


def _direction_cosines(n: int, angles, convention: str) -> np.ndarray:
    angles = np.atleast_1d(np.asarray(angles, dtype=float))
    if n == 2:
        if angles.size != 0:
            raise ValueError("n = 2 takes no angles")
        return np.array([1.0])
    if angles.shape != (n - 2,):
        raise ValueError(f"expected {n - 2} angles for n = {n}, got {angles.shape}")
    if n == 3:
        alpha = angles[0]
        return np.array([math.cos(alpha), math.sin(alpha)])
    if convention == "main" and n == 4:
        # angle order (phi, theta): cos(theta) multiplies the last axis
        phi, theta = angles
        return np.array(
            [
                math.cos(phi) * math.sin(theta),
                math.sin(phi) * math.sin(theta),
                math.cos(theta),
            ]
        )
    if convention not in ("main", "appendix"):
        raise ValueError(f"unknown angle convention {convention!r}")
    # hyperspherical ordering: cos(theta_1) multiplies the first axis
    c = np.empty(n - 1)
    running = 1.0
    for i in range(n - 2):
        c[i] = running * math.cos(angles[i])
        running *= math.sin(angles[i])
    c[n - 2] = running
    return c


def polar_to_p(n: int, r: float, angles=(), *, convention: str = "main",
               tol: float | None = None) -> SimplexPoint:
    """Polar parametrization of the simplex around its centroid.

    ``p = p_e + (r / sqrt(2)) * sum_l c_l(angles) e_l`` with unit direction
    cosines ``c_l``.  The radius ``r`` uses the Bloch-vector scale, so
    physical states satisfy ``0 <= r <= bloch_bound(n)``.

    ``convention`` selects the angle ordering for n = 4: ``"main"`` takes
    ``(phi, theta)`` with ``cos(theta)`` on the last axis, ``"appendix"``
    the hyperspherical ordering with ``cos(theta_1)`` on the first axis.
    For other n the two conventions coincide (hyperspherical).

    Out-of-simplex results are returned with ``physical=False`` rather
    than raising, so curves may be continued beyond the physical region.
    """
    frame = simplex_frame(n)
    if not np.isfinite(r) or r < 0:
        raise ValueError(f"radius must be finite and >= 0, got {r!r}")
    tol = DEFAULT.simplex if tol is None else tol
    c = _direction_cosines(n, angles, convention)
    p = frame.center + (r / math.sqrt(2.0)) * (c @ frame.axes)
    physical = bool(p.min() >= -tol)
    return SimplexPoint(p=p, physical=physical)


def positivity_check(matrix, *, hermitian_tol: float | None = None,
                     coefficient_tol: float | None = None) -> PositivityResult:
    """Positivity of a Hermitian matrix via its characteristic polynomial.

    Writes ``det(x I - H) = x^n - a_1 x^{n-1} + a_2 x^{n-2} - ...`` and
    computes the coefficients a_1..a_n from the power sums Tr(H^i) through
    Newton's identities.  Since all eigenvalues are real, they are all
    nonnegative exactly when every a_k >= 0 (Descartes' rule leaves no
    room for a negative root when the alternating signs are intact).

    Returns the verdict together with (a_1, ..., a_n); for unit-trace
    input a_1 = 1.
    """
    hermitian_tol = DEFAULT.hermitian if hermitian_tol is None else hermitian_tol
    coefficient_tol = DEFAULT.positivity if coefficient_tol is None else coefficient_tol
    h = np.asarray(matrix)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    defect = float(np.max(np.abs(h - h.conj().T))) if h.size else 0.0
    if defect > hermitian_tol:
        raise ValueError(
            f"matrix is not Hermitian within {hermitian_tol:g} (max asymmetry {defect:.3e})"
        )
    n = h.shape[0]
    h = h.astype(complex)
    power_sums = []
    power = h
    for _ in range(n):
        power_sums.append(float(np.trace(power).real))
        power = power @ h
    elementary = [1.0]
    for k in range(1, n + 1):
        acc = 0.0
        for i in range(1, k + 1):
            acc += (-1.0) ** (i - 1) * elementary[k - i] * power_sums[i - 1]
        elementary.append(acc / k)
    coefficients = np.array(elementary[1:])
    positive = bool(np.all(coefficients >= -coefficient_tol))
    return PositivityResult(positive=positive, coefficients=coefficients)


def orbit_classification(p, tol: float | None = None) -> DegeneracyPattern:
    """Group the eigenvalues of a diagonal state into degeneracy clusters.

    Eigenvalues closer than ``tol`` times the largest eigenvalue belong to
    one cluster (default ``tol`` is the centralized degeneracy tolerance).
    Multiplicities are reported in descending-eigenvalue order.
    """
    p = check_probability_vector(p)
    if p.ndim != 1:
        raise ValueError("orbit classification takes a single probability vector")
    if tol is None:
        tol = DEFAULT.degeneracy
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    n = p.shape[0]
    values = np.sort(p)[::-1]
    threshold = tol * values[0]
    multiplicities = [1]
    for gap in np.diff(values):
        if -gap > threshold:
            multiplicities.append(1)
        else:
            multiplicities[-1] += 1
    dim = int(n * n - sum(m * m for m in multiplicities))
    return DegeneracyPattern(multiplicities=tuple(multiplicities), orbit_dimension=dim)


def bloch_norm_ok(lam, tol: float | None = None) -> bool:
    """Whether the diagonal Bloch vector respects the pure-state norm bound."""
    tol = DEFAULT.simplex if tol is None else tol
    lam = np.asarray(lam, dtype=float)
    return bool(np.linalg.norm(lam, axis=-1).max() <= bloch_bound(lam.shape[-1] + 1) + tol)
