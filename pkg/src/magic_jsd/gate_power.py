"""Magic-generating power of a unitary.

The power of U is the largest magic U can create from a stabilizer input.
By convexity the inputs can be restricted to pure stabilizer states, and
the result depends only on the min-max overlap::

    C_U = min_{phi in S} max_{psi in S} |<psi|U|phi>|

which is fed through the same formula as the pure-state monotone.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ParamPair, PureState, conjugate, is_unitary
from .entropy import g_func, w_func
from .errors import DimMismatch, DomainError, NonUnitary
from .magic import magic_from_overlap, magic_M_pure
from .stabilizer import WITNESS_TOL, StabilizerSet, stabilizer_set_for_dim

PI = np.pi


@dataclass(frozen=True)
class GatePowerResult:
    value: float
    C_U: float
    worst_input_label: str
    best_output_label: str
    params: ParamPair


def overlap_table(U: np.ndarray, S: StabilizerSet) -> np.ndarray:
    """``table[i, j] = |<s_i| U |s_j>|``."""
    m = S.matrix
    return np.abs(m.conj() @ U @ m.T)


def gate_power(U, p: ParamPair, S: StabilizerSet | None = None) -> GatePowerResult:
    U = np.asarray(U, dtype=complex)
    if not is_unitary(U):
        raise NonUnitary("gate is not unitary within 1e-12")
    S = stabilizer_set_for_dim(U.shape[0]) if S is None else S
    if U.shape[0] != S.dim:
        raise DimMismatch(f"gate dim {U.shape[0]} vs stabilizer set dim {S.dim}")
    table = np.minimum(overlap_table(U, S), 1.0)
    best_out = table.max(axis=0)
    c_u = best_out.min()
    j = int(np.flatnonzero(best_out <= c_u + WITNESS_TOL)[0])
    i = int(np.flatnonzero(table[:, j] >= best_out[j] - WITNESS_TOL)[0])
    value = float(magic_from_overlap(c_u, p))
    return GatePowerResult(value, float(c_u), S.labels[j], S.labels[i], p)


def t_gate(power: float = 1.0) -> np.ndarray:
    """``diag(1, exp(i pi power / 4))``; power 1 is T, 1/4 is T^(1/4)."""
    return np.diag([1.0, np.exp(1j * PI * power / 4)])


def phase_gate(delta: float) -> np.ndarray:
    return np.diag([1.0, np.exp(1j * delta)])


def N_func(x, p: ParamPair):
    return g_func(w_func(x, p.alpha), p)


def K_func(x, p: ParamPair):
    return N_func(x + PI / 32, p) - N_func(x, p) - N_func(PI / 32, p)


PSI0 = PureState(np.array([1.0, np.exp(1j * PI / 8)]) / np.sqrt(2))
U0 = t_gate(0.25)


@dataclass(frozen=True)
class BoostRecord:
    delta: float
    power: float
    boosted: bool
    alpha: float
    beta: float


def boost_demo(p: ParamPair, check: bool = True) -> BoostRecord:
    """Magic gain of ``U0 = T^(1/4)`` on ``psi0`` against the power of U0.

    Everything goes through the state and gate pipelines; with ``check`` the
    two numbers are compared against ``N(3 pi/64) - N(pi/32)`` and
    ``N(pi/64)``.
    """
    if not (1 < p.alpha < 2 and p.beta < 1):
        raise DomainError("boost_demo needs 1 < alpha < 2 and beta < 1, beta != 0")
    out = conjugate(U0, PSI0)
    delta = magic_M_pure(out, p).value - magic_M_pure(PSI0, p).value
    power = gate_power(U0, p).value
    if check:
        d_ref = float(N_func(3 * PI / 64, p) - N_func(PI / 32, p))
        p_ref = float(N_func(PI / 64, p))
        if abs(delta - d_ref) > 1e-10 or abs(power - p_ref) > 1e-10:
            raise ArithmeticError(
                f"pipeline/closed-form mismatch at {p}: {delta} vs {d_ref}, {power} vs {p_ref}"
            )
    return BoostRecord(delta, power, bool(delta > power), p.alpha, p.beta)
