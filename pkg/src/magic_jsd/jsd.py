"""Quantum (alpha, beta) Jensen-Shannon divergences.

Two versions are provided, one built from the entropy and one from the
relative entropy::

    J (rho, sigma) = S(mid) - S(rho)/2 - S(sigma)/2
    J'(rho, sigma) = [D(rho || mid) + D(sigma || mid)] / 2,   mid = (rho + sigma)/2

For pure inputs the equal mixture has the two eigenvalues
``(1 +- |<psi|phi>|)/2`` and both divergences reduce to scalar formulas
in that pair; see :func:`jsd_J_pure` and :func:`jsd_Jprime_pure`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DensityMatrix, ParamPair, PureState, _check_dims, as_density
from .entropy import _zpow, g_func, quantum_entropy, quantum_relative_entropy

DEGENERATE_TOL = 1e-12
PHASE_ZERO_TOL = 1e-14


def pair_lambdas(c):
    """Eigenvalues ``((1 + c)/2, (1 - c)/2)`` of the mixture of two pure
    states with overlap modulus ``c``.

    Overlaps within ``DEGENERATE_TOL`` of 1 are treated as exactly 1, so
    stabilizer states give an exactly zero second eigenvalue.
    """
    c = np.clip(np.asarray(c, dtype=float), 0.0, 1.0)
    c = np.where(c >= 1.0 - DEGENERATE_TOL, 1.0, c)
    return 0.5 * (1.0 + c), 0.5 * (1.0 - c)


@dataclass(frozen=True)
class PairSpectrum:
    lambda1: float
    lambda2: float
    xi1: PureState
    xi2: PureState | None
    overlap_abs: float
    phase_theta: float

    @property
    def degenerate(self) -> bool:
        return self.xi2 is None

    def reconstruct(self) -> np.ndarray:
        m = self.lambda1 * np.outer(self.xi1.amps, self.xi1.amps.conj())
        if self.xi2 is not None:
            m = m + self.lambda2 * np.outer(self.xi2.amps, self.xi2.amps.conj())
        return m


def pair_spectrum(psi: PureState, phi: PureState) -> PairSpectrum:
    """Closed-form eigen-data of ``(|psi><psi| + |phi><phi|)/2``.

    When the states coincide up to phase the second eigenvector is
    undefined; ``xi2`` is then ``None`` and ``lambda2 == 0``.
    """
    _check_dims(psi, phi)
    s = np.vdot(phi.amps, psi.amps)
    s_abs = min(1.0, abs(s))
    theta = float(np.angle(s)) if s_abs > PHASE_ZERO_TOL else 0.0
    if theta == -np.pi:
        theta = np.pi
    l1, l2 = (float(x) for x in pair_lambdas(s_abs))
    rot = np.exp(1j * theta) * phi.amps
    xi1 = PureState(psi.amps + rot, normalize=True)
    xi2 = None if l2 == 0.0 else PureState(psi.amps - rot, normalize=True)
    return PairSpectrum(l1, l2, xi1, xi2, s_abs, theta)


def _mid(rho: DensityMatrix, sigma: DensityMatrix) -> DensityMatrix:
    m = 0.5 * (rho.matrix + sigma.matrix)
    return DensityMatrix(0.5 * (m + m.conj().T))


def jsd_J(rho, sigma, p: ParamPair) -> float:
    _check_dims(rho, sigma)
    rho, sigma = as_density(rho), as_density(sigma)
    mid = _mid(rho, sigma)
    return quantum_entropy(mid, p) - 0.5 * quantum_entropy(rho, p) - 0.5 * quantum_entropy(sigma, p)


def jsd_Jprime(rho, sigma, p: ParamPair) -> float:
    _check_dims(rho, sigma)
    rho, sigma = as_density(rho), as_density(sigma)
    mid = _mid(rho, sigma)
    return 0.5 * (quantum_relative_entropy(rho, mid, p) + quantum_relative_entropy(sigma, mid, p))


def jsd_J_from_overlap(c, p: ParamPair):
    """J of two pure states as a function of their overlap modulus."""
    l1, l2 = pair_lambdas(c)
    return g_func(_zpow(l1, p.alpha) + _zpow(l2, p.alpha), p)


def jsd_Jprime_from_overlap(c, p: ParamPair):
    l1, l2 = pair_lambdas(c)
    a = 2.0 - p.alpha
    return (1.0 - np.power(_zpow(l1, a) + _zpow(l2, a), p.beta)) / p.denom


def jsd_J_pure(psi: PureState, phi: PureState, p: ParamPair) -> float:
    _check_dims(psi, phi)
    return float(jsd_J_from_overlap(abs(np.vdot(psi.amps, phi.amps)), p))


def jsd_Jprime_pure(psi: PureState, phi: PureState, p: ParamPair) -> float:
    _check_dims(psi, phi)
    return float(jsd_Jprime_from_overlap(abs(np.vdot(psi.amps, phi.amps)), p))
