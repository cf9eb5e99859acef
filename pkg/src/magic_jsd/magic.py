"""Magic monotones M and m built from the two Jensen-Shannon divergences.

For a pure state both reduce to a function of the largest stabilizer
overlap ``c = max_{phi in S} |<phi|psi>|``::

    M(psi) = g(f((1 + c)/2, alpha))
    m(psi) = [1 - f((1 + c)/2, 2 - alpha)^beta] / ((1 - alpha) beta) = M(psi) at (2 - alpha, beta)

Mixed states only get a sampled convex-roof upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import bisect

from .core import DensityMatrix, ParamPair, PureState, SeedLike, as_density, make_rng, random_isometry
from .entropy import binary_shannon_base2
from .errors import DimMismatch, DomainError
from .jsd import jsd_J_from_overlap, jsd_Jprime_from_overlap
from .stabilizer import (
    StabilizerSet,
    max_overlap,
    qubit_robustness,
    stabilizer_decomposition,
    stabilizer_set_for_dim,
)


@dataclass(frozen=True)
class MagicResult:
    value: float
    c_psi: float
    argmax_label: str
    params: ParamPair
    witnesses: tuple[str, ...] = ()


def magic_from_overlap(c, p: ParamPair):
    """M as a function of the optimal overlap modulus (vectorized)."""
    # + 0.0 turns the -0.0 from a negative denominator into 0.0
    return jsd_J_from_overlap(c, p) + 0.0


def magic_m_from_overlap(c, p: ParamPair):
    return jsd_Jprime_from_overlap(c, p) + 0.0


def c_psi(psi: PureState, S: StabilizerSet | None = None):
    """Largest overlap with S, its first witness label and all tied labels."""
    S = stabilizer_set_for_dim(psi.dim) if S is None else S
    ov = max_overlap(psi, S)
    return ov.value, ov.label, ov.witnesses


def magic_M_pure(psi: PureState, p: ParamPair, S: StabilizerSet | None = None) -> MagicResult:
    c, label, wit = c_psi(psi, S)
    return MagicResult(float(magic_from_overlap(c, p)), c, label, p, wit)


def magic_m_pure(psi: PureState, p: ParamPair, S: StabilizerSet | None = None) -> MagicResult:
    c, label, wit = c_psi(psi, S)
    return MagicResult(float(magic_m_from_overlap(c, p)), c, label, p, wit)


def magic_M_bruteforce(psi: PureState, p: ParamPair, S: StabilizerSet | None = None) -> float:
    """min over S of J(psi, phi), without using the monotonicity argument."""
    S = stabilizer_set_for_dim(psi.dim) if S is None else S
    if psi.dim != S.dim:
        raise DimMismatch(f"state dim {psi.dim} vs stabilizer set dim {S.dim}")
    ov = np.abs(S.matrix.conj() @ psi.amps)
    return float(np.min(jsd_J_from_overlap(ov, p)))


def qubit_state(theta: float, phi: float) -> PureState:
    return PureState([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def qubit_qmax(theta, phi):
    """Largest of the six closed-form overlaps of the Bloch state (theta, phi)
    with the qubit stabilizer states. Broadcasts over arrays."""
    theta, phi = np.broadcast_arrays(np.asarray(theta, dtype=float), np.asarray(phi, dtype=float))
    sx = np.sin(theta) * np.cos(phi)
    sy = np.sin(theta) * np.sin(phi)
    cands = [
        np.abs(np.cos(theta / 2)),
        np.abs(np.sin(theta / 2)),
        np.sqrt(np.clip((1 + sx) / 2, 0, None)),
        np.sqrt(np.clip((1 - sx) / 2, 0, None)),
        np.sqrt(np.clip((1 + sy) / 2, 0, None)),
        np.sqrt(np.clip((1 - sy) / 2, 0, None)),
    ]
    out = np.minimum(np.max(np.stack(cands), axis=0), 1.0)
    return out if out.ndim else float(out)


QMAX_MIN = float(np.sqrt((3 + np.sqrt(3)) / 6))


def qubit_magic_upper_bound(p: ParamPair) -> float:
    """Largest M over pure qubit states, reached at the T-type states."""
    return float(magic_from_overlap(QMAX_MIN, p))


def _pure_decomposition(rho: DensityMatrix):
    spec = rho.spectrum
    keep = spec.eigenvalues > 1e-12 * max(spec.eigenvalues[0], 1e-300)
    vals = spec.eigenvalues[keep]
    vecs = spec.eigenvectors[:, keep]
    return vals / vals.sum(), vecs


def _average_magic(weights, vectors, p: ParamPair, S: StabilizerSet) -> float:
    # vectors: columns are (unnormalized is fine) pure states with weights summing to 1
    ov = np.abs(S.matrix.conj() @ vectors)
    c = ov.max(axis=0)
    return float(np.dot(weights, magic_from_overlap(np.minimum(c, 1.0), p)))


def magic_mixed_upper_bound(
    rho,
    p: ParamPair,
    S: StabilizerSet | None = None,
    trials: int = 100,
    seed: SeedLike = None,
    K: int | None = None,
    use_lp: bool = True,
    extra=(),
) -> float:
    """Upper bound on the convex-roof magic of ``rho``.

    Candidates, in order: the eigen-decomposition, a decomposition over S
    found by linear programming (when ``use_lp``), then ``trials`` random
    decompositions ``sqrt(lambda) V U`` with ``U`` an ``r x K`` isometry.
    The running minimum is returned. ``extra`` takes further candidate
    decompositions as ``(weights, states)`` pairs; they are scored first.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if isinstance(rho, PureState):
        return magic_M_pure(rho, p, S).value
    rho = as_density(rho)
    S = stabilizer_set_for_dim(rho.dim) if S is None else S
    if rho.dim != S.dim:
        raise DimMismatch(f"state dim {rho.dim} vs stabilizer set dim {S.dim}")
    lam, vecs = _pure_decomposition(rho)
    r = lam.size
    best = _average_magic(lam, vecs / np.linalg.norm(vecs, axis=0), p, S)
    for weights, states in extra:
        cols = np.column_stack([s.amps for s in states])
        best = min(best, _average_magic(np.asarray(weights, dtype=float), cols, p, S))
    if r == 1 or best == 0.0:
        return best
    if use_lp and stabilizer_decomposition(rho, S) is not None:
        return 0.0
    K = r if K is None else K
    if K < r:
        raise ValueError("K must be at least the rank")
    rng = make_rng(seed)
    # Columns of A = V sqrt(Lambda) span every decomposition via A U^dagger.
    a = vecs * np.sqrt(lam)
    for _ in range(trials - 1):
        u = random_isometry(K, r, rng)
        cols = a @ u.conj().T
        w = np.sum(np.abs(cols) ** 2, axis=0)
        ok = w > 1e-15
        best = min(best, _average_magic(w[ok] / w[ok].sum(), cols[:, ok] / np.sqrt(w[ok]), p, S))
    return best


@dataclass(frozen=True)
class Prop3Constants:
    lambda0: float
    t0: float


def _prop3_residual(lam: float) -> float:
    return lam - (1.0 - lam) * 16.0 ** (2.0 * lam - 1.0)


@lru_cache(maxsize=None)
def prop3_constants() -> Prop3Constants:
    """Non-trivial root of ``lambda = (1 - lambda) 16^(2 lambda - 1)``.

    ``lambda = 1/2`` is always a root; the residual is -1/4 at 3/4 and
    +1 at 1, so the other root is bracketed on [3/4, 1].
    """
    lam = bisect(_prop3_residual, 0.75, 1.0, xtol=1e-16, rtol=4 * np.finfo(float).eps, maxiter=200)
    t0 = (2 * lam - 1) ** 2 + binary_shannon_base2(lam)
    return Prop3Constants(float(lam), float(t0))


@dataclass(frozen=True)
class Prop3Check:
    lhs: float
    rhs: float
    ok: bool


def prop3_bound_check(psi: PureState, p: ParamPair, robustness: float | None = None) -> Prop3Check:
    """Compare ``M(psi) + 1/(1 + R(psi))`` with ``t0``."""
    if psi.dim != 2:
        raise DimMismatch("the robustness bound is implemented for qubits")
    if not p.beta > 1:
        raise DomainError("the robustness bound needs beta > 1")
    r = qubit_robustness(psi) if robustness is None else robustness
    lhs = magic_M_pure(psi, p).value + 1.0 / (1.0 + r)
    t0 = prop3_constants().t0
    return Prop3Check(lhs, t0, bool(lhs <= t0 + 1e-9))

