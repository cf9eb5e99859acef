"""Small dense complex linear algebra for density matrices and pure states.

Everything here works on dimensions up to about 9, so clarity wins over
speed. The Hermitian eigensolver is a cyclic complex Jacobi iteration with
a fixed sweep order, which keeps results reproducible across runs.

Random ensembles use ``numpy.random.Philox`` (a counter-based generator);
pass either an integer seed or an existing ``numpy.random.Generator``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Union

import numpy as np

from .errors import BadRank, DimMismatch, DomainError, InvalidState, NonHermitian

TOL_HERM = 1e-12
TOL_TRACE = 1e-12
TOL_PSD = 1e-10
TOL_NORM = 1e-12
SUPPORT_CUTOFF = 1e-12

_JACOBI_EPS = 1e-15
_JACOBI_MAX_SWEEPS = 64

SeedLike = Union[int, np.random.Generator, None]


def make_rng(seed: SeedLike = None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(seed))


@dataclass(frozen=True)
class ParamPair:
    """The (alpha, beta) parameters of the unified entropy family.

    ``alpha > 0``, ``alpha != 1`` and ``beta != 0``; anything else raises
    :class:`DomainError`.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        a, b = float(self.alpha), float(self.beta)
        if not (np.isfinite(a) and np.isfinite(b)):
            raise DomainError(f"alpha and beta must be finite, got ({a}, {b})")
        if a <= 0 or a == 1:
            raise DomainError(f"alpha must be > 0 and != 1, got {a}")
        if b == 0:
            raise DomainError("beta must be nonzero")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def denom(self) -> float:
        return (1.0 - self.alpha) * self.beta

    @property
    def in_monotone_range_M(self) -> bool:
        return 1 < self.alpha < 2 and self.beta <= 1

    @property
    def in_monotone_range_m(self) -> bool:
        return 0 < self.alpha < 1 and self.beta <= 1

    @property
    def in_lipschitz_range(self) -> bool:
        return self.alpha > 1 and self.beta >= 1

    def dual(self) -> "ParamPair":
        """(2 - alpha, beta), the partner under the J / J' duality."""
        return ParamPair(2.0 - self.alpha, self.beta)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class PureState:
    """Unit-norm complex vector."""

    __slots__ = ("amps",)

    def __init__(self, amps, normalize: bool = False):
        v = np.array(amps, dtype=complex).reshape(-1)
        if v.size == 0 or not np.all(np.isfinite(v)):
            raise InvalidState("state amplitudes must be finite and non-empty")
        nrm = np.linalg.norm(v)
        if normalize:
            if nrm == 0:
                raise InvalidState("cannot normalize the zero vector")
            v = v / nrm
        elif abs(nrm - 1.0) > TOL_NORM:
            raise InvalidState(f"state norm is {float(nrm)!r}, expected 1")
        self.amps = _readonly(v)

    @property
    def dim(self) -> int:
        return self.amps.size

    def projector(self) -> "DensityMatrix":
        v = self.amps
        return DensityMatrix(np.outer(v, v.conj()), _spectrum=_projector_spectrum(v))

    def __repr__(self):
        return f"PureState(dim={self.dim})"


def _projector_spectrum(v: np.ndarray) -> Spectrum:
    # Orthonormal completion of v; the first column is v itself.
    d = v.size
    q, _ = np.linalg.qr(np.column_stack([v, np.eye(d, dtype=complex)]))
    q = q[:, :d]
    q[:, 0] = v
    vals = np.zeros(d)
    vals[0] = 1.0
    return Spectrum(_readonly(vals), _readonly(q))


class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix.

    Validated once at construction. The eigendecomposition is computed
    lazily and cached, since almost every entropy needs it.
    """

    def __init__(self, matrix, _spectrum: Spectrum | None = None):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise InvalidState(f"density matrix must be square, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidState("density matrix entries must be finite")
        herm_err = np.abs(m - m.conj().T).max()
        if herm_err > TOL_HERM:
            raise NonHermitian(f"max |A - A^dagger| = {herm_err:.3g}")
        tr = np.trace(m).real
        if abs(tr - 1.0) > TOL_TRACE:
            raise InvalidState(f"trace is {float(tr)!r}, expected 1")
        self.matrix = _readonly(m)
        if _spectrum is not None:
            self.__dict__["spectrum"] = _spectrum
        if self.spectrum.eigenvalues[-1] < -TOL_PSD:
            raise InvalidState(
                f"matrix is not PSD (min eigenvalue {self.spectrum.eigenvalues[-1]:.3g})"
            )

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def spectrum(self) -> Spectrum:
        return eig_hermitian(self.matrix)

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(_support_mask(self.spectrum.eigenvalues)))

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim) / dim)

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim})"


def as_density(state) -> DensityMatrix:
    if isinstance(state, DensityMatrix):
        return state
    if isinstance(state, PureState):
        return state.projector()
    return DensityMatrix(state)


def _matrix_of(x) -> np.ndarray:
    if isinstance(x, DensityMatrix):
        return x.matrix
    if isinstance(x, PureState):
        return x.amps
    return np.asarray(x)


def eig_hermitian(m) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    Eigenvalues come back in descending order with the matching columns
    of an orthonormal eigenvector matrix.
    """
    a = np.array(_matrix_of(m), dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonHermitian(f"expected a square matrix, got shape {a.shape}")
    herm_err = np.abs(a - a.conj().T).max() if a.size else 0.0
    if herm_err > TOL_HERM:
        raise NonHermitian(f"max |A - A^dagger| = {herm_err:.3g}")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)

    for _ in range(_JACOBI_MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= _JACOBI_EPS * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                # Phase e^{-i phi} on column q makes the pivot real; then a
                # real rotation annihilates it.
                ph = apq / r
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                phc = ph.conjugate()

                colp, colq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * colp - s * phc * colq
                a[:, q] = s * colp + c * phc * colq
                rowp, rowq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rowp - s * ph * rowq
                a[q, :] = s * rowp + c * ph * rowq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * phc * vq
                v[:, q] = s * vp + c * phc * vq

    vals = np.diag(a).real.copy()
    order = np.argsort(-vals, kind="stable")
    return Spectrum(_readonly(vals[order]), _readonly(v[:, order]))


def _support_mask(vals: np.ndarray) -> np.ndarray:
    top = vals.max() if vals.size else 0.0
    if top <= 0:
        return np.zeros(vals.shape, dtype=bool)
    return vals > SUPPORT_CUTOFF * top


def matrix_power_on_support(m, p: float) -> np.ndarray:
    """``m**p`` evaluated on the support of ``m``.

    Eigenvalues at or below ``SUPPORT_CUTOFF`` (relative to the largest)
    stay exactly zero for every exponent, negative ones included.
    """
    spec = m.spectrum if isinstance(m, DensityMatrix) else eig_hermitian(m)
    vals, vecs = spec.eigenvalues, spec.eigenvectors
    mask = _support_mask(vals)
    powered = np.zeros_like(vals)
    powered[mask] = vals[mask] ** p
    return (vecs * powered) @ vecs.conj().T


def support_projector(m) -> np.ndarray:
    spec = m.spectrum if isinstance(m, DensityMatrix) else eig_hermitian(m)
    vecs = spec.eigenvectors[:, _support_mask(spec.eigenvalues)]
    return vecs @ vecs.conj().T


def _check_dims(a, b):
    da, db = _matrix_of(a).shape[0], _matrix_of(b).shape[0]
    if da != db:
        raise DimMismatch(f"dimension mismatch: {da} vs {db}")


def trace_distance(a, b) -> float:
    """Half the trace norm of ``a - b``."""
    _check_dims(a, b)
    diff = as_density(a).matrix - as_density(b).matrix
    vals = eig_hermitian(diff).eigenvalues
    return 0.5 * float(np.abs(vals).sum())


def overlap(psi: PureState, phi: PureState) -> float:
    """|<psi|phi>|, clipped into [0, 1]."""
    _check_dims(psi, phi)
    return min(1.0, abs(np.vdot(psi.amps, phi.amps)))


def tensor(*ops):
    """Kronecker product of states (pure or mixed) or plain matrices."""
    if all(isinstance(o, PureState) for o in ops):
        return PureState(reduce(np.kron, [o.amps for o in ops]), normalize=True)
    if all(isinstance(o, DensityMatrix) for o in ops):
        return DensityMatrix(reduce(np.kron, [o.matrix for o in ops]))
    if any(isinstance(o, (PureState, DensityMatrix)) for o in ops):
        raise TypeError("tensor operands must all be the same kind")
    return reduce(np.kron, [np.asarray(o) for o in ops])


def partial_trace(rho: DensityMatrix, dims: tuple[int, ...], keep) -> DensityMatrix:
    """Trace out every subsystem not listed in ``keep``."""
    keep = sorted([keep] if isinstance(keep, int) else keep)
    n = len(dims)
    if int(np.prod(dims)) != rho.dim:
        raise DimMismatch(f"subsystem dims {dims} do not multiply to {rho.dim}")
    t = rho.matrix.reshape(tuple(dims) * 2)
    traced = [i for i in range(n) if i not in keep]
    for k, ax in enumerate(traced):
        cur = n - k
        t = np.trace(t, axis1=ax - k, axis2=ax - k + cur)
    d_keep = int(np.prod([dims[i] for i in keep]))
    return DensityMatrix(t.reshape(d_keep, d_keep))


def random_pure_state(dim: int, seed: SeedLike = None) -> PureState:
    """Haar-random pure state (normalized complex Gaussian vector)."""
    if dim < 1:
        raise InvalidState("dim must be positive")
    rng = make_rng(seed)
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return PureState(v, normalize=True)


def random_density_matrix(dim: int, rank: int | None = None, seed: SeedLike = None) -> DensityMatrix:
    """Reduced state of a Haar-random pure state on ``dim x rank``.

    ``rank == dim`` samples the Hilbert-Schmidt measure.
    """
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        raise BadRank(f"rank must lie in [1, {dim}], got {rank}")
    rng = make_rng(seed)
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    m = g @ g.conj().T
    m = 0.5 * (m + m.conj().T) / np.trace(m).real
    if rank == 1:
        return PureState(g[:, 0], normalize=True).projector()
    return DensityMatrix(m)


def random_unitary(dim: int, seed: SeedLike = None) -> np.ndarray:
    """Haar-random unitary via QR with the diagonal phase fix."""
    rng = make_rng(seed)
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_isometry(rows: int, cols: int, seed: SeedLike = None) -> np.ndarray:
    """``rows x cols`` matrix with orthonormal columns (rows >= cols)."""
    return random_unitary(rows, seed)[:, :cols]


def conjugate(u: np.ndarray, state):
    """``U rho U^dagger`` (or ``U|psi>``), preserving the state kind."""
    u = np.asarray(u)
    if isinstance(state, PureState):
        return PureState(u @ state.amps, normalize=True)
    m = u @ as_density(state).matrix @ u.conj().T
    return DensityMatrix(0.5 * (m + m.conj().T))


def mix(states, probs) -> DensityMatrix:
    probs = np.asarray(probs, dtype=float)
    m = sum(p * as_density(s).matrix for p, s in zip(probs, states))
    return DensityMatrix(0.5 * (m + m.conj().T))


def is_unitary(u: np.ndarray, tol: float = 1e-12) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return np.abs(u.conj().T @ u - np.eye(u.shape[0])).max() <= tol


def basis_state(dim: int, index: int) -> PureState:
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return PureState(v)
