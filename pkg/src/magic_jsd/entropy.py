"""Unified (alpha, beta) entropies and the scalar helpers built on them.

For a density matrix rho::

    S(rho)        = [(Tr rho^a)^b - 1] / ((1 - a) b)
    D(rho||sigma) = [1 - (Tr rho^a sigma^(1-a))^b] / ((1 - a) b)

``b = 1`` gives the Tsallis family and ``a -> 1`` the von Neumann limit.
The scalar functions below accept numpy arrays and broadcast.
"""

from __future__ import annotations

import numpy as np

from .core import (
    DensityMatrix,
    ParamPair,
    _check_dims,
    _support_mask,
    as_density,
    support_projector,
)
from .errors import DegenerateKernel, InvalidState

PROB_CLAMP = 1e-12
PROB_SUM_TOL = 1e-10
KERNEL_FLOOR = 1e-300


def prob_vector(p) -> np.ndarray:
    """Validate a probability vector, clamping eigensolver noise to zero."""
    p = np.asarray(p, dtype=float).reshape(-1)
    if p.size == 0 or not np.all(np.isfinite(p)):
        raise InvalidState("probability vector must be finite and non-empty")
    if np.any(p < -PROB_CLAMP):
        raise InvalidState(f"negative probability {p.min():.3g}")
    p = np.where(p < 0, 0.0, p)
    if abs(p.sum() - 1.0) > PROB_SUM_TOL:
        raise InvalidState(f"probabilities sum to {float(p.sum())!r}")
    return p


def _power_sum(p: np.ndarray, a: float) -> float:
    nz = p[p > 0]
    return float(np.sum(nz**a))


def tr_alpha_power(rho: DensityMatrix, alpha: float) -> float:
    """Tr(rho^alpha) over the support of rho."""
    vals = as_density(rho).spectrum.eigenvalues
    return float(np.sum(vals[_support_mask(vals)] ** alpha))


def quantum_entropy(rho: DensityMatrix, p: ParamPair) -> float:
    return float(g_func(tr_alpha_power(rho, p.alpha), p))


def support_mismatch(rho: DensityMatrix, sigma: DensityMatrix, tol: float = 1e-8) -> bool:
    """True when supp(rho) is not contained in supp(sigma)."""
    pr = support_projector(as_density(rho))
    ps = support_projector(as_density(sigma))
    leak = pr - ps @ pr
    return bool(np.abs(leak).max() > tol)


def relative_entropy_kernel(rho: DensityMatrix, sigma: DensityMatrix, alpha: float) -> float:
    """Tr(rho^alpha sigma^(1-alpha)), both powers taken on the support.

    Evaluated in the two eigenbases as
    ``sum_ij a_i^alpha b_j^(1-alpha) |<u_i|v_j>|^2``; the products of
    matrix powers are never formed, which keeps large negative powers of
    small eigenvalues from leaking rounding error into an imaginary part.
    """
    _check_dims(rho, sigma)
    rho, sigma = as_density(rho), as_density(sigma)
    sr, ss = rho.spectrum, sigma.spectrum
    mr, ms = _support_mask(sr.eigenvalues), _support_mask(ss.eigenvalues)
    a = sr.eigenvalues[mr] ** alpha
    b = ss.eigenvalues[ms] ** (1.0 - alpha)
    ov = np.abs(sr.eigenvectors[:, mr].conj().T @ ss.eigenvectors[:, ms]) ** 2
    return float(a @ ov @ b)


def quantum_relative_entropy(rho, sigma, p: ParamPair, with_flag: bool = False):
    """D_{a,b}(rho || sigma).

    With ``alpha > 1`` and supp(rho) outside supp(sigma) the support
    convention silently drops mass; pass ``with_flag=True`` to also get
    that condition back as a boolean.
    """
    q = relative_entropy_kernel(rho, sigma, p.alpha)
    if q <= KERNEL_FLOOR:
        raise DegenerateKernel(f"Tr(rho^a sigma^(1-a)) = {q:.3g}")
    value = (1.0 - q**p.beta) / p.denom
    if with_flag:
        return value, support_mismatch(rho, sigma)
    return value


def unified_entropy(probs, pp: ParamPair) -> float:
    """Classical unified (alpha, beta) entropy of a probability vector."""
    return float(g_func(_power_sum(prob_vector(probs), pp.alpha), pp))


def tsallis_entropy(lam, alpha: float):
    """Binary Tsallis entropy H_alpha of (lam, 1 - lam)."""
    return (f_func(lam, alpha) - 1.0) / (1.0 - alpha)


def g_func(x, p: ParamPair):
    return (np.power(x, p.beta) - 1.0) / p.denom


def f_func(lam, alpha: float):
    lam = np.asarray(lam, dtype=float)
    return _zpow(lam, alpha) + _zpow(1.0 - lam, alpha)


def _zpow(x, a):
    # 0**a with a > 0 is 0; keep it that way without warnings for arrays.
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        return np.where(x > 0, np.power(np.where(x > 0, x, 1.0), a), 0.0)


def w_func(x, alpha: float):
    """cos^(2 alpha) x + sin^(2 alpha) x."""
    c2 = np.cos(x) ** 2
    s2 = np.sin(x) ** 2
    return _zpow(c2, alpha) + _zpow(s2, alpha)


def binary_shannon_base2(lam):
    lam = np.asarray(lam, dtype=float)
    out = np.zeros_like(lam)
    for q in (lam, 1.0 - lam):
        pos = q > 0
        out[pos] -= q[pos] * np.log2(q[pos])
    return out if out.ndim else float(out)

