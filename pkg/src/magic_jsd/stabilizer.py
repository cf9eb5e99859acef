"""Stabilizer-formalism objects for one qubit, one qutrit and two qubits.

Heisenberg-Weyl operators follow ``T_u = tau^(-u1 u2) Z^u1 X^u2`` with
``tau = exp((d+1) pi i / d)``. Pure stabilizer sets are enumerated
explicitly; for two qubits they are found by running over every abelian
pair of signed Pauli strings and keeping the joint +1 eigenvectors.

Logarithms for the min-relative entropy are base 2 (``LOG_BASE``).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import linprog

from .core import DensityMatrix, PureState, as_density
from .errors import DimMismatch, Unsupported

LOG_BASE = 2.0
DEDUP_TOL = 1e-8
WITNESS_TOL = 1e-12

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
PHASE_S = np.diag([1, 1j]).astype(complex)


@dataclass(frozen=True)
class WeylOperator:
    d: int
    u: tuple[int, int]
    matrix: np.ndarray


def shift_boost(d: int) -> tuple[np.ndarray, np.ndarray]:
    """The shift ``X|j> = |j+1>`` and boost ``Z|j> = w^j |j>``."""
    x = np.roll(np.eye(d, dtype=complex), 1, axis=0)
    z = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    return x, z


def weyl_operator(d: int, u1: int, u2: int) -> WeylOperator:
    if d < 2:
        raise Unsupported("d must be at least 2")
    u1, u2 = u1 % d, u2 % d
    x, z = shift_boost(d)
    tau = np.exp(1j * np.pi * (d + 1) / d)
    m = tau ** (-u1 * u2) * np.linalg.matrix_power(z, u1) @ np.linalg.matrix_power(x, u2)
    return WeylOperator(d, (u1, u2), m)


def canonical_phase(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate the global phase so the first non-negligible entry is real positive."""
    flat = v.reshape(-1)
    idx = np.flatnonzero(np.abs(flat) > tol)
    if idx.size == 0:
        return v
    ph = flat[idx[0]] / abs(flat[idx[0]])
    return v / ph


@dataclass(frozen=True)
class StabilizerSet:
    d: int
    n: int
    states: tuple[PureState, ...]
    labels: tuple[str, ...]

    @property
    def dim(self) -> int:
        return self.d**self.n

    @property
    def matrix(self) -> np.ndarray:
        """States stacked as rows."""
        return _stack(self)

    def __len__(self):
        return len(self.states)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def to_json(self) -> dict:
        """JSON form with entries ordered lexicographically by label."""
        from .jsonio import state_to_json

        order = sorted(range(len(self)), key=lambda i: self.labels[i])
        return {
            "d": self.d,
            "n": self.n,
            "states": [state_to_json(self.states[i]) for i in order],
            "labels": [self.labels[i] for i in order],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


_stack_cache: dict[int, np.ndarray] = {}


def _stack(s: StabilizerSet) -> np.ndarray:
    key = id(s)
    m = _stack_cache.get(key)
    if m is None:
        m = np.array([st.amps for st in s.states])
        m.setflags(write=False)
        _stack_cache[key] = m
    return m


def _qubit_set():
    r = 1 / np.sqrt(2)
    vecs = [
        ("|0>", [1, 0]),
        ("|1>", [0, 1]),
        ("|+>", [r, r]),
        ("|->", [r, -r]),
        ("|+i>", [r, 1j * r]),
        ("|-i>", [r, -1j * r]),
    ]
    return [lab for lab, _ in vecs], [PureState(v) for _, v in vecs]


def _qutrit_set():
    w = np.exp(2j * np.pi / 3)
    labels, states = [], []
    for m in range(3):
        v = np.zeros(3, dtype=complex)
        v[m] = 1
        labels.append(f"|{m}>")
        states.append(PureState(v))
    for j, k in itertools.product(range(3), repeat=2):
        labels.append(f"psi_{j}{k}")
        states.append(PureState(np.array([1, w**j, w**k]) / np.sqrt(3)))
    return labels, states


def _pauli_string(name: str) -> np.ndarray:
    return np.kron(PAULI[name[0]], PAULI[name[1]])


def _signed(sign: int, name: str) -> str:
    return ("+" if sign > 0 else "-") + name


def _two_qubit_set():
    names = ["".join(p) for p in itertools.product("IXYZ", repeat=2)][1:]
    mats = {nm: _pauli_string(nm) for nm in names}
    found: dict[str, PureState] = {}
    projectors: list[np.ndarray] = []
    for a, b in itertools.combinations(names, 2):
        pa, pb = mats[a], mats[b]
        prod = pa @ pb
        if np.abs(prod - pb @ pa).max() > 1e-12:
            continue
        # Name and sign of the third group element a*b.
        c = next(nm for nm in names if abs(np.trace(mats[nm] @ prod)) > 2)
        c_phase = np.trace(mats[c] @ prod).real / 4
        for sa, sb in itertools.product((1, -1), repeat=2):
            proj = (np.eye(4) + sa * pa) @ (np.eye(4) + sb * pb) / 4
            if any(np.abs(proj - q).max() <= DEDUP_TOL for q in projectors):
                continue
            sc = int(round(sa * sb * c_phase))
            label = ",".join(sorted([_signed(sa, a), _signed(sb, b), _signed(sc, c)], key=lambda t: t[1:]))
            col = int(np.argmax(np.linalg.norm(proj, axis=0)))
            vec = canonical_phase(proj[:, col] / np.linalg.norm(proj[:, col]))
            projectors.append(proj)
            found[label] = PureState(vec)
    labels = sorted(found)
    return labels, [found[lab] for lab in labels]


@lru_cache(maxsize=None)
def pure_stabilizer_set(d: int, n: int = 1) -> StabilizerSet:
    """All pure stabilizer states for (d, n) in {(2,1), (3,1), (2,2)}."""
    builders = {(2, 1): _qubit_set, (3, 1): _qutrit_set, (2, 2): _two_qubit_set}
    if (d, n) not in builders:
        raise Unsupported(f"no stabilizer enumeration for d={d}, n={n}")
    labels, states = builders[(d, n)]()
    return StabilizerSet(d, n, tuple(states), tuple(labels))


def stabilizer_set_for_dim(dim: int) -> StabilizerSet:
    table = {2: (2, 1), 3: (3, 1), 4: (2, 2)}
    if dim not in table:
        raise Unsupported(f"no stabilizer set for Hilbert-space dimension {dim}")
    return pure_stabilizer_set(*table[dim])


def t_type_state(j: int, k: int) -> PureState:
    if j not in (0, 1) or k not in range(4):
        raise ValueError("need j in {0,1} and k in {0,1,2,3}")
    th0 = np.arccos(1 / np.sqrt(3))
    th = th0 if j == 0 else np.pi - th0
    ph = (2 * k + 1) * np.pi / 4
    return PureState([np.cos(th / 2), np.exp(1j * ph) * np.sin(th / 2)])


def qutrit_T_state() -> PureState:
    z = np.exp(2j * np.pi / 9)
    return PureState(np.array([z, 1, np.conj(z)]) / np.sqrt(3))


def _phase_key(u: np.ndarray) -> tuple:
    v = canonical_phase(u, tol=1e-9)
    return tuple(np.round(v.reshape(-1), 9).tolist())


@lru_cache(maxsize=None)
def _clifford_tuple():
    group = [np.eye(2, dtype=complex)]
    seen = {_phase_key(group[0])}
    frontier = list(group)
    while frontier:
        nxt = []
        for u in frontier:
            for g in (HADAMARD, PHASE_S):
                w = canonical_phase(g @ u, tol=1e-9)
                key = _phase_key(w)
                if key not in seen:
                    seen.add(key)
                    group.append(w)
                    nxt.append(w)
        frontier = nxt
    for u in group:
        u.setflags(write=False)
    return tuple(group)


def qubit_clifford_group() -> list[np.ndarray]:
    """The 24 single-qubit Clifford unitaries modulo global phase."""
    return list(_clifford_tuple())


@dataclass(frozen=True)
class BlochVector:
    r: tuple[float, float, float]

    @property
    def l1(self) -> float:
        return float(sum(abs(x) for x in self.r))

    def as_array(self) -> np.ndarray:
        return np.array(self.r)


def bloch_vector(state) -> BlochVector:
    rho = as_density(state)
    if rho.dim != 2:
        raise DimMismatch("Bloch vectors are defined for qubits only")
    m = rho.matrix
    r = tuple(float(np.trace(m @ PAULI[k]).real) for k in "XYZ")
    return BlochVector(r)


def qubit_is_stabilizer(rho) -> bool:
    """Inside the octahedron |r_x| + |r_y| + |r_z| <= 1."""
    return bloch_vector(rho).l1 <= 1 + 1e-10


_OCTAHEDRON = np.array(
    [[0, 0, 1], [0, 0, -1], [1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0]], dtype=float
)


def qubit_robustness_lp(rho) -> float:
    """Robustness of magic from a linear program over the six octahedron
    vertices: minimize s with rho = (1+s) tau - s sigma, tau and sigma in
    the stabilizer polytope."""
    r = bloch_vector(rho).as_array()
    # variables: x (weights of (1+s) tau), y (weights of s sigma)
    a_eq = np.zeros((4, 12))
    a_eq[0, :6], a_eq[0, 6:] = 1, -1
    a_eq[1:, :6], a_eq[1:, 6:] = _OCTAHEDRON.T, -_OCTAHEDRON.T
    b_eq = np.concatenate([[1.0], r])
    cost = np.concatenate([np.zeros(6), np.ones(6)])
    res = linprog(cost, A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if not res.success:
        raise RuntimeError(f"robustness LP failed: {res.message}")
    return float(res.fun)


def qubit_robustness(rho, certify: bool = True) -> float:
    """Robustness of magic of a qubit state.

    Closed form ``max(0, (||r||_1 - 1)/2)``; with ``certify`` the value is
    checked against :func:`qubit_robustness_lp`.
    """
    value = max(0.0, (bloch_vector(rho).l1 - 1.0) / 2.0)
    if certify:
        lp = qubit_robustness_lp(rho)
        if abs(lp - value) > 1e-7:
            raise RuntimeError(f"robustness certification failed: {value} vs LP {lp}")
    return value


@dataclass(frozen=True)
class StabilizerOverlap:
    value: float
    index: int
    label: str
    witnesses: tuple[str, ...]


def max_overlap(psi: PureState, S: StabilizerSet) -> StabilizerOverlap:
    """max over S of |<phi|psi>|; ties within 1e-12 go to the lowest index."""
    if psi.dim != S.dim:
        raise DimMismatch(f"state dim {psi.dim} vs stabilizer set dim {S.dim}")
    ov = np.minimum(np.abs(S.matrix.conj() @ psi.amps), 1.0)
    best = ov.max()
    tied = np.flatnonzero(ov >= best - WITNESS_TOL)
    i = int(tied[0])
    return StabilizerOverlap(float(best), i, S.labels[i], tuple(S.labels[t] for t in tied))


@dataclass(frozen=True)
class StabilizerFidelity:
    fidelity: float
    d_min: float
    label: str


def stabilizer_fidelity(psi: PureState, S: StabilizerSet) -> StabilizerFidelity:
    """Largest squared overlap with a pure stabilizer state, and the
    min-relative entropy of magic ``-log2 F`` it determines."""
    ov = max_overlap(psi, S)
    f = ov.value**2
    d_min = -np.log(f) / np.log(LOG_BASE)
    return StabilizerFidelity(f, max(0.0, float(d_min)), ov.label)


def stabilizer_decomposition(rho, S: StabilizerSet, tol: float = 1e-9):
    """Weights p >= 0 with rho = sum_i p_i |s_i><s_i| over S, or None.

    Solved as an LP feasibility problem on the real and imaginary parts of
    the matrix entries.
    """
    rho = as_density(rho)
    if rho.dim != S.dim:
        raise DimMismatch(f"state dim {rho.dim} vs stabilizer set dim {S.dim}")
    vecs = S.matrix
    projs = np.einsum("ki,kj->kij", vecs, vecs.conj()).reshape(len(S), -1)
    a_eq = np.vstack([projs.real.T, projs.imag.T])
    b_eq = np.concatenate([rho.matrix.real.reshape(-1), rho.matrix.imag.reshape(-1)])
    res = linprog(np.zeros(len(S)), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if not res.success:
        return None
    p = res.x
    recon = np.einsum("k,ki,kj->ij", p, vecs, vecs.conj())
    if np.abs(recon - rho.matrix).max() > tol:
        return None
    return p


def is_clifford_covariant(u: np.ndarray, d: int = 2) -> bool:
    """True if ``u T_v u^dagger`` is proportional to some ``T_v'`` for every v."""
    ops = [weyl_operator(d, a, b).matrix for a in range(d) for b in range(d)]
    for t in ops:
        conj = u @ t @ u.conj().T
        if not any(abs(abs(np.trace(o.conj().T @ conj)) - d) < 1e-9 for o in ops):
            return False
    return True


def permutes_stabilizer_set(u: np.ndarray, S: StabilizerSet) -> bool:
    """True if ``u`` maps the projector multiset of S onto itself."""
    projs = [np.outer(v, v.conj()) for v in S.matrix]
    image = [u @ p @ u.conj().T for p in projs]
    used = set()
    for q in image:
        hit = next((i for i, p in enumerate(projs) if i not in used and np.abs(p - q).max() < 1e-9), None)
        if hit is None:
            return False
        used.add(hit)
    return True


def as_stabilizer_density(state) -> DensityMatrix:
    return as_density(state)
