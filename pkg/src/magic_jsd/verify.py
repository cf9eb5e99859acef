"""Randomized and grid property checks, grouped into named suites.

Every case returns ``Case(name, passed, detail)``. Draws come from a
Philox stream keyed by ``(seed, case number)`` so each case is
reproducible on its own.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from . import stabilizer as stab
from .core import (
    DensityMatrix,
    ParamPair,
    conjugate,
    mix,
    partial_trace,
    random_density_matrix,
    random_pure_state,
    random_unitary,
    tensor,
    trace_distance,
)
from .entropy import (
    f_func,
    g_func,
    quantum_entropy,
    quantum_relative_entropy,
    tsallis_entropy,
    unified_entropy,
    w_func,
)
from .gate_power import K_func, N_func, boost_demo, gate_power, phase_gate, t_gate
from .jsd import jsd_J, jsd_J_pure, jsd_Jprime, jsd_Jprime_pure
from .magic import (
    QMAX_MIN,
    magic_M_bruteforce,
    magic_M_pure,
    magic_m_pure,
    magic_mixed_upper_bound,
    prop3_bound_check,
    qubit_magic_upper_bound,
    qubit_state,
)
from .scans import EXAMPLE1_PHI, EXAMPLE1_THETA, scan_example1

DEFAULT_SEED = 20240917
DEFAULT_SAMPLES = 1000
SUITES = ("entropy", "jsd", "magic", "gatepower", "stabilizer")


@dataclass
class Case:
    name: str
    passed: bool
    detail: str


def _rng(seed: int, key: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, key])))


def _worst(name: str, slack, tol: float, what: str = "worst violation") -> Case:
    """Pass when every entry of ``slack`` (a violation amount) is <= tol."""
    slack = np.asarray(slack, dtype=float)
    worst = float(slack.max()) if slack.size else 0.0
    return Case(name, bool(worst <= tol), f"{what} {worst:.3g} (tol {tol:g}, n={slack.size})")


def _scaled(err: float, *values: float) -> float:
    """Error relative to max(1, |value|): absolute for O(1) quantities."""
    return err / max(1.0, *(abs(v) for v in values))


def _alpha_beta(rng, alphas, betas) -> ParamPair:
    return ParamPair(float(rng.uniform(*alphas)), float(rng.uniform(*betas)))


def _von_neumann(rho: DensityMatrix) -> float:
    # independent oracle: numpy's LAPACK eigensolver, natural log
    v = np.linalg.eigvalsh(rho.matrix)
    v = v[v > 1e-15]
    return float(-np.sum(v * np.log(v)))


def _depolarize(rho: DensityMatrix, q: float) -> DensityMatrix:
    m = (1 - q) * rho.matrix + q * np.eye(rho.dim) / rho.dim
    return DensityMatrix(m)


QUADRANTS = ((0.5, 0.6), (0.5, -1.5), (1.6, 2.0), (1.6, -0.7))


# ---------------------------------------------------------------- entropy


def suite_entropy(seed: int, n: int) -> list[Case]:
    out = []

    r = _rng(seed, 1)
    gaps = []
    for _ in range(n):
        rho = random_density_matrix(2, seed=r)
        vn = _von_neumann(rho)
        lo = quantum_entropy(rho, ParamPair(1 + 1e-5, 1.0))
        hi = quantum_entropy(rho, ParamPair(1 - 1e-5, 1.0))
        gaps.append(max(lo - vn, vn - hi, 0.0))
    out.append(_worst("alpha -> 1 brackets von Neumann entropy", gaps, 1e-3))

    r = _rng(seed, 2)
    errs = []
    for k in range(n):
        p = ParamPair(*QUADRANTS[k % 4])
        a, b = random_density_matrix(2, seed=r), random_density_matrix(2, seed=r)
        sa, sb = quantum_entropy(a, p), quantum_entropy(b, p)
        errs.append(abs(quantum_entropy(tensor(a, b), p) - (sa + sb + p.denom * sa * sb)))
    out.append(_worst("entropy of a product state factorizes", errs, 1e-9))

    r = _rng(seed, 3)
    errs = []
    for k in range(n):
        p = ParamPair(*QUADRANTS[k % 4])
        rho, sig = random_density_matrix(3, seed=r), random_density_matrix(3, seed=r)
        u = random_unitary(3, r)
        errs.append(abs(quantum_entropy(conjugate(u, rho), p) - quantum_entropy(rho, p)))
        d = quantum_relative_entropy(rho, sig, p)
        errs.append(_scaled(abs(quantum_relative_entropy(conjugate(u, rho), conjugate(u, sig), p) - d), d))
    out.append(_worst("entropy and relative entropy are unitarily invariant", errs, 1e-9, "worst scaled error"))

    r = _rng(seed, 4)
    viol = []
    for _ in range(n):
        p = _alpha_beta(r, (1.05, 4.0), (1.0, 4.0))
        rho, sig = random_density_matrix(2, seed=r), random_density_matrix(2, seed=r)
        lhs = abs(quantum_entropy(rho, p) - quantum_entropy(sig, p))
        viol.append(lhs - p.alpha / (p.alpha - 1) * trace_distance(rho, sig))
    out.append(_worst("entropy is Lipschitz for alpha > 1, beta >= 1", viol, 1e-9))

    r = _rng(seed, 5)
    neg, self_d = [], []
    for k in range(n):
        a = (0.3, 0.7, 1.5, 2.5)[k % 4]
        b = (-2.0, -0.5, 0.5, 2.0)[(k // 4) % 4]
        p = ParamPair(a, b)
        rho, sig = random_density_matrix(2, seed=r), random_density_matrix(2, seed=r)
        neg.append(-quantum_relative_entropy(rho, sig, p))
        self_d.append(abs(quantum_relative_entropy(rho, rho, p)))
    out.append(_worst("relative entropy is nonnegative", neg, 1e-10))
    out.append(_worst("relative entropy vanishes on equal states", self_d, 1e-10))

    r = _rng(seed, 6)
    errs = []
    for k in range(n):
        p = ParamPair(*QUADRANTS[k % 4])
        r1, s1, r2, s2 = (random_density_matrix(2, seed=r) for _ in range(4))
        d1, d2 = quantum_relative_entropy(r1, s1, p), quantum_relative_entropy(r2, s2, p)
        d12 = quantum_relative_entropy(tensor(r1, r2), tensor(s1, s2), p)
        errs.append(_scaled(abs(d12 - (d1 + d2 + (p.alpha - 1) * p.beta * d1 * d2)), d12))
    out.append(_worst("relative entropy of products combines additively", errs, 1e-9, "worst scaled error"))

    r = _rng(seed, 7)
    viol = []
    for _ in range(n):
        p = _alpha_beta(r, (0.05, 0.95), (-3.0, 1.0))
        rho, sig = random_density_matrix(4, seed=r), random_density_matrix(4, seed=r)
        before = quantum_relative_entropy(rho, sig, p)
        keep = int(r.integers(2))
        after = quantum_relative_entropy(partial_trace(rho, (2, 2), keep), partial_trace(sig, (2, 2), keep), p)
        viol.append(after - before)
        a, b = random_density_matrix(2, seed=r), random_density_matrix(2, seed=r)
        q = float(r.uniform())
        viol.append(quantum_relative_entropy(_depolarize(a, q), _depolarize(b, q), p) - quantum_relative_entropy(a, b, p))
    out.append(_worst("relative entropy contracts under partial trace and depolarizing", viol, 1e-9))

    r = _rng(seed, 8)
    viol = []
    for _ in range(n):
        p = _alpha_beta(r, (0.05, 0.95), (-3.0, 1.0))
        w = r.dirichlet(np.ones(3))
        rs = [random_density_matrix(2, seed=r) for _ in range(3)]
        ss = [random_density_matrix(2, seed=r) for _ in range(3)]
        lhs = quantum_relative_entropy(mix(rs, w), mix(ss, w), p)
        rhs = sum(wi * quantum_relative_entropy(a, b, p) for wi, a, b in zip(w, rs, ss))
        viol.append(lhs - rhs)
    out.append(_worst("relative entropy is jointly convex", viol, 1e-9))

    xs = np.linspace(0.05, 5.0, 400)
    bad = 0
    for a in (0.2, 0.5, 0.9, 1.1, 1.5, 3.0):
        for b in (-3.0, -0.5, 0.5, 1.0, 2.0):
            d = np.diff(g_func(xs, ParamPair(a, b)))
            bad += int(np.any(d <= 0) if a < 1 else np.any(d >= 0))
    out.append(Case("g is increasing for alpha < 1 and decreasing for alpha > 1", bad == 0, f"{bad} bad (alpha, beta) rows"))

    viol = []
    for a in (1.1, 1.5, 3.0):
        for b in (-3.0, -0.5, 0.3, 0.9):
            gx = g_func(xs, ParamPair(a, b))
            viol.append(-(gx[2:] - 2 * gx[1:-1] + gx[:-2]).min())
    out.append(_worst("g is convex for alpha > 1, beta < 1", viol, 1e-10))

    lam = np.linspace(0.5, 1.0, 401)[1:-1]
    bad = 0
    for a in (0.1, 0.5, 0.9, 1.1, 2.0, 5.0):
        d = np.diff(f_func(lam, a))
        bad += int(np.any(d >= 0) if a < 1 else np.any(d <= 0))
    out.append(Case("f is monotone on (1/2, 1) in the direction set by alpha", bad == 0, f"{bad} bad alpha rows"))

    lam = np.linspace(0.0, 1.0, 41)[1:-1]
    a_hi = np.linspace(1.01, 6.0, 200)
    d = np.diff(np.array([tsallis_entropy(lam, a) for a in a_hi]), axis=0)
    out.append(_worst("Tsallis entropy decreases in alpha on (1, inf)", d, 0.0, "largest increase"))
    a_lo = np.linspace(0.01, 0.99, 200)
    d = np.diff(np.array([tsallis_entropy(lam, a) for a in a_lo]), axis=0)
    out.append(_worst("Tsallis entropy increases in alpha on (0, 1)", -d, 0.0, "largest decrease"))

    bs = np.linspace(1.01, 8.0, 200)
    bad = 0
    for a in (0.2, 0.5, 0.9, 1.2, 1.5, 3.0):
        for lmb in np.linspace(0.05, 0.95, 19):
            h = np.array([unified_entropy([lmb, 1 - lmb], ParamPair(a, b)) for b in bs])
            dh = np.diff(h)
            bad += int(np.any(dh >= 0) if a > 1 else np.any(dh <= 0))
    out.append(Case("binary unified entropy is monotone in beta on (1, inf)", bad == 0, f"{bad} bad (alpha, lambda) rows"))

    x = np.linspace(0.0, np.pi / 4, 801)[1:-1]
    bad = 0
    curv = []
    xc = np.linspace(0.0, np.pi / 16, 401)
    h = xc[1] - xc[0]
    for a in (1.001, 1.01, 1.25, 1.5, 1.75, 1.99):
        bad += int(np.any(np.diff(w_func(x, a)) >= 0))
        wv = w_func(np.concatenate([xc, [xc[-1] + h]]), a)
        curv.append((wv[2:] - 2 * wv[1:-1] + wv[:-2]).max())
    out.append(Case("w decreases on (0, pi/4) for alpha in (1, 2)", bad == 0, f"{bad} bad alpha rows"))
    out.append(_worst("w is concave on (0, pi/16] for alpha in (1, 2)", curv, 1e-10, "largest second difference"))
    return out


# ---------------------------------------------------------------- jsd


def suite_jsd(seed: int, n: int) -> list[Case]:
    out = []

    r = _rng(seed, 11)
    errs = []
    for k in range(n):
        d = 2 + k % 3
        a = float(r.uniform(0.02, 1.98))
        if abs(a - 1) < 1e-3:
            a += 0.01
        p = ParamPair(a, float(r.choice([-1, 1]) * r.uniform(0.1, 5.0)))
        psi, phi = random_pure_state(d, r), random_pure_state(d, r)
        errs.append(abs(jsd_J_pure(psi, phi, p) - jsd_Jprime_pure(psi, phi, p.dual())))
    out.append(_worst("J at alpha equals J' at 2 - alpha on pure pairs", errs, 1e-10))

    r = _rng(seed, 12)
    errs = []
    for k in range(n):
        d = 2 + k % 3
        p = ParamPair(*QUADRANTS[k % 4])
        psi, phi = random_pure_state(d, r), random_pure_state(d, r)
        errs.append(abs(jsd_J_pure(psi, phi, p) - jsd_J(psi, phi, p)))
        errs.append(abs(jsd_Jprime_pure(psi, phi, p) - jsd_Jprime(psi, phi, p)))
    out.append(_worst("pure-pair closed forms match the matrix definitions", errs, 1e-10))

    r = _rng(seed, 13)
    neg, upper = [], []
    for k in range(n):
        if k % 2:
            p = _alpha_beta(r, (0.05, 0.95), (-3.0, 0.95))
        else:
            p = _alpha_beta(r, (1.05, 4.0), (1.0, 4.0))
        rho, sig = random_density_matrix(2, seed=r), random_density_matrix(2, seed=r)
        j = jsd_J(rho, sig, p)
        neg.append(-j)
        if p.alpha > 1:
            upper.append(j - (2 ** (1 - p.alpha * p.beta) - 1) / p.denom)
    out.append(_worst("J is nonnegative in its proven ranges", neg, 1e-10))
    out.append(_worst("J obeys its upper bound for alpha > 1, beta >= 1", upper, 1e-10))

    r = _rng(seed, 14)
    errs = []
    for k in range(n):
        p = ParamPair(*QUADRANTS[k % 4])
        rho, sig, tau = (random_density_matrix(2, seed=r) for _ in range(3))
        lhs = jsd_J(tensor(rho, tau), tensor(sig, tau), p)
        errs.append(abs(lhs - (1 + p.denom * quantum_entropy(tau, p)) * jsd_J(rho, sig, p)))
        pure_tau = random_pure_state(2, r).projector()
        errs.append(abs(jsd_J(tensor(rho, pure_tau), tensor(sig, pure_tau), p) - jsd_J(rho, sig, p)))
        errs.append(abs(jsd_Jprime(tensor(rho, tau), tensor(sig, tau), p) - jsd_Jprime(rho, sig, p)))
    out.append(_worst("tensoring with a common state rescales J and leaves J' fixed", errs, 1e-9))

    r = _rng(seed, 15)
    errs = []
    for k in range(n):
        p = ParamPair(*QUADRANTS[k % 4])
        rho, sig = random_density_matrix(3, seed=r), random_density_matrix(3, seed=r)
        u = random_unitary(3, r)
        ur, us = conjugate(u, rho), conjugate(u, sig)
        errs += [
            abs(jsd_J(ur, us, p) - jsd_J(rho, sig, p)),
            abs(jsd_Jprime(ur, us, p) - jsd_Jprime(rho, sig, p)),
            abs(jsd_J(rho, sig, p) - jsd_J(sig, rho, p)),
            abs(jsd_Jprime(rho, sig, p) - jsd_Jprime(sig, rho, p)),
        ]
    out.append(_worst("J and J' are unitarily invariant and symmetric", errs, 1e-10))

    r = _rng(seed, 16)
    viol = []
    for _ in range(n):
        p = _alpha_beta(r, (1.05, 4.0), (1.0, 4.0))
        r1, r2, sig = (random_density_matrix(2, seed=r) for _ in range(3))
        lhs = abs(jsd_J(r1, sig, p) - jsd_J(r2, sig, p))
        viol.append(lhs - p.alpha / (p.alpha - 1) * trace_distance(r1, r2))
    out.append(_worst("J is Lipschitz in each slot for alpha > 1, beta >= 1", viol, 1e-9))

    r = _rng(seed, 17)
    neg, small = [], []
    for k in range(n):
        a = (0.3, 0.7, 1.5, 2.5)[k % 4]
        b = (-2.0, -0.5, 0.5, 2.0)[(k // 4) % 4]
        p = ParamPair(a, b)
        rho, sig = random_density_matrix(2, seed=r), random_density_matrix(2, seed=r)
        jp = jsd_Jprime(rho, sig, p)
        neg.append(-jp)
        if trace_distance(rho, sig) >= 1e-3:
            small.append(1e-6 - jp)
    out.append(_worst("J' is nonnegative", neg, 1e-10))
    out.append(_worst("J' >= 1e-6 whenever the states differ by >= 1e-3", small, 0.0))

    r = _rng(seed, 18)
    viol = []
    for _ in range(n):
        p = _alpha_beta(r, (0.05, 0.95), (-3.0, 1.0))
        rho, sig = random_density_matrix(4, seed=r), random_density_matrix(4, seed=r)
        keep = int(r.integers(2))
        after = jsd_Jprime(partial_trace(rho, (2, 2), keep), partial_trace(sig, (2, 2), keep), p)
        viol.append(after - jsd_Jprime(rho, sig, p))
        a, b = random_density_matrix(2, seed=r), random_density_matrix(2, seed=r)
        q = float(r.uniform())
        viol.append(jsd_Jprime(_depolarize(a, q), _depolarize(b, q), p) - jsd_Jprime(a, b, p))
    out.append(_worst("J' contracts under partial trace and depolarizing", viol, 1e-9))

    r = _rng(seed, 19)
    viol = []
    for _ in range(n):
        p = _alpha_beta(r, (0.05, 0.95), (-3.0, 1.0))
        w = r.dirichlet(np.ones(3))
        rs = [random_density_matrix(2, seed=r) for _ in range(3)]
        ss = [random_density_matrix(2, seed=r) for _ in range(3)]
        lhs = jsd_Jprime(mix(rs, w), mix(ss, w), p)
        viol.append(lhs - sum(wi * jsd_Jprime(a, b, p) for wi, a, b in zip(w, rs, ss)))
    out.append(_worst("J' is jointly convex", viol, 1e-9))

    r = _rng(seed, 20)
    viol = []
    cliff = stab.qubit_clifford_group()
    for _ in range(n):
        p = _alpha_beta(r, (1.05, 1.95), (-3.0, 1.0))
        psi, phi = random_pure_state(2, r), random_pure_state(2, r)
        v = cliff[int(r.integers(len(cliff)))]
        viol.append(jsd_J_pure(conjugate(v, psi), conjugate(v, phi), p) - jsd_J_pure(psi, phi, p))
    out.append(_worst("Clifford maps do not increase J on pure pairs", viol, 1e-10))

    # Sign of J where no sign is claimed: recorded only.
    r = _rng(seed, 21)
    counts = {}
    for name, ab in (("alpha<1,beta>=1", ((0.05, 0.95), (1.0, 4.0))), ("alpha>1,beta<1", ((1.05, 4.0), (-3.0, 0.95)))):
        k_neg = 0
        for _ in range(n):
            p = _alpha_beta(r, *ab)
            if jsd_J(random_density_matrix(2, seed=r), random_density_matrix(2, seed=r), p) < 0:
                k_neg += 1
        counts[name] = k_neg
    out.append(Case("sign of J outside the proven ranges (recorded)", True, json.dumps({"negative": counts, "n": n})))
    return out


# ---------------------------------------------------------------- magic


def suite_magic(seed: int, n: int) -> list[Case]:
    out = []
    params = [ParamPair(*ab) for ab in QUADRANTS]

    worst = 0.0
    for dn in ((2, 1), (3, 1), (2, 2)):
        S = stab.pure_stabilizer_set(*dn)
        for st in S.states:
            for p in params:
                worst = max(worst, abs(magic_M_pure(st, p, S).value))
    out.append(_worst("M vanishes on every enumerated stabilizer state", [worst], 1e-12))
    low = min(
        magic_M_pure(s, p).value for s in (stab.t_type_state(0, 0), stab.qutrit_T_state()) for p in params
    )
    out.append(Case("M is positive on the T-type and qutrit T states", low >= 1e-6, f"smallest {low:.3g}"))

    r = _rng(seed, 31)
    errs = []
    cliff = stab.qubit_clifford_group()
    for k in range(max(1, n // 10)):
        psi = random_pure_state(2, r)
        p = params[k % 4]
        base = magic_M_pure(psi, p).value
        errs += [abs(magic_M_pure(conjugate(v, psi), p).value - base) for v in cliff]
    out.append(_worst("M is invariant under the 24 Clifford gates", errs, 1e-10))

    r = _rng(seed, 32)
    viol = []
    for k in range(max(1, n // 10)):
        p = params[k % 4]
        m = int(r.integers(2, 5))
        w = r.dirichlet(np.ones(m))
        states = [random_pure_state(2, r) for _ in range(m)]
        rho = mix(states, w)
        bound = magic_mixed_upper_bound(rho, p, trials=20, seed=r, extra=[(w, states)])
        viol.append(bound - sum(wi * magic_M_pure(s, p).value for wi, s in zip(w, states)))
    out.append(_worst("mixed-state bound never exceeds a given decomposition", viol, 1e-9))

    r = _rng(seed, 33)
    errs = []
    S2, S4 = stab.pure_stabilizer_set(2, 1), stab.pure_stabilizer_set(2, 2)
    for _ in range(max(1, n // 10)):
        p = _alpha_beta(r, (1.05, 1.95), (-3.0, 1.0))
        psi = random_pure_state(2, r)
        sigma = S2.states[int(r.integers(6))]
        errs.append(abs(magic_M_pure(tensor(psi, sigma), p, S4).value - magic_M_pure(psi, p, S2).value))
    out.append(_worst("appending a stabilizer qubit leaves M unchanged", errs, 1e-10))

    r = _rng(seed, 34)
    viol = []
    for _ in range(n):
        p = _alpha_beta(r, (1.05, 4.0), (1.0, 4.0))
        a, b = random_pure_state(2, r), random_pure_state(2, r)
        lhs = abs(magic_M_pure(a, p).value - magic_M_pure(b, p).value)
        viol.append(lhs - p.alpha / (p.alpha - 1) * trace_distance(a, b))
    out.append(_worst("M is Lipschitz for alpha > 1, beta >= 1", viol, 1e-9))

    r = _rng(seed, 35)
    errs = []
    for k in range(n):
        a = float(r.uniform(0.02, 1.98))
        if abs(a - 1) < 1e-3:
            a += 0.01
        p = ParamPair(a, float(r.choice([-1, 1]) * r.uniform(0.1, 5.0)))
        psi = random_pure_state(2 + k % 2, r)
        errs.append(abs(magic_m_pure(psi, p).value - magic_M_pure(psi, p.dual()).value))
    out.append(_worst("m at alpha equals M at 2 - alpha", errs, 1e-12))

    viol, dist = [], []
    t_dirs = [stab.bloch_vector(stab.t_type_state(j, k)).as_array() for j in range(2) for k in range(4)]
    cell = max(np.pi / (EXAMPLE1_THETA.steps - 1), 2 * np.pi / EXAMPLE1_PHI.steps)
    for ab in ((0.5, 2.0), (1.5, 0.5), (0.3, -1.0)):
        p = ParamPair(*ab)
        rows = np.array(scan_example1(p))
        viol.append(rows[:, 3].max() - qubit_magic_upper_bound(p))
        th, ph = rows[rows[:, 3].argmax(), :2]
        v = np.array([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)])
        dist.append(min(np.arccos(np.clip(v @ t, -1, 1)) for t in t_dirs) - cell)
    out.append(_worst("qubit M stays below its T-type value on the Bloch grid", viol, 1e-9))
    out.append(_worst("Bloch-grid maximum of M sits next to a T-type direction", dist, 0.0, "excess distance"))

    r = _rng(seed, 36)
    errs = []
    for k in range(n):
        p = ParamPair(*QUADRANTS[k % 4])
        psi = random_pure_state(2 + k % 2, r)
        errs.append(abs(magic_M_pure(psi, p).value - magic_M_bruteforce(psi, p)))
    out.append(_worst("overlap formula equals brute-force minimum over the stabilizer set", errs, 1e-10))

    r = _rng(seed, 37)
    viol = []
    states = [random_pure_state(2, r) for _ in range(n)]
    rob = [stab.qubit_robustness(s, certify=False) for s in states]
    for a in (1.5, 3.0):
        for b in (1.5, 2.0, 5.0):
            p = ParamPair(a, b)
            for s, rv in zip(states, rob):
                c = prop3_bound_check(s, p, robustness=rv)
                viol.append(c.lhs - c.rhs)
    out.append(_worst("M + 1/(1+R) <= t0 for alpha > 1, beta > 1", viol, 1e-9))

    qmin = min(stab.max_overlap(qubit_state(*ang), S2).value for ang in _qmax_probe())
    out.append(
        Case("smallest qubit q_max is sqrt((3+sqrt3)/6)", abs(qmin - QMAX_MIN) <= 1e-12, f"{qmin!r} vs {QMAX_MIN!r}")
    )
    return out


def _qmax_probe():
    th0 = np.arccos(1 / np.sqrt(3))
    for th in (th0, np.pi - th0):
        for k in range(4):
            yield th, (2 * k + 1) * np.pi / 4


# ---------------------------------------------------------------- gate power


def suite_gatepower(seed: int, n: int) -> list[Case]:
    out = []
    params = [ParamPair(*ab) for ab in QUADRANTS]
    cliff = stab.qubit_clifford_group()

    vals = [gate_power(u, p).value for u in cliff for p in params]
    out.append(_worst("gate power vanishes on the 24 Clifford gates", np.abs(vals), 1e-12))
    low = min(gate_power(t_gate(e), p).value for e in (1.0, 0.5, 0.25) for p in params)
    out.append(Case("gate power is positive on T, T^(1/2), T^(1/4)", low > 1e-8, f"smallest {low:.3g}"))

    r = _rng(seed, 41)
    errs = []
    for k in range(max(1, n // 10)):
        p = params[k % 4]
        u = random_unitary(2, r)
        v1, v2 = cliff[int(r.integers(24))], cliff[int(r.integers(24))]
        errs.append(abs(gate_power(v1 @ u @ v2, p).value - gate_power(u, p).value))
    out.append(_worst("gate power is unchanged by Clifford pre- and post-multiplication", errs, 1e-10))

    viol = []
    gates = [t_gate(1.0), t_gate(0.5), t_gate(0.25), stab.HADAMARD]
    S4 = stab.pure_stabilizer_set(2, 2)
    for p in (ParamPair(1.5, 0.5), ParamPair(1.2, -2.0), ParamPair(1.8, 1.0)):
        for u1 in gates:
            for u2 in gates:
                viol.append(gate_power(u1, p).value - gate_power(np.kron(u1, u2), p, S4).value)
    out.append(_worst("gate power does not drop when a second gate is tensored on", viol, 1e-10))

    alphas = np.linspace(1.02, 1.98, 50)
    betas = np.linspace(-4.94, 0.94, 50)
    kmin = min(float(K_func(np.pi / 64, ParamPair(a, b))) for a in alphas for b in betas)
    out.append(Case("K(pi/64) > 0 on the (alpha, beta) grid", kmin > 0, f"smallest {kmin:.3g}"))

    x = np.linspace(0.0, np.pi / 16, 401)
    curv = []
    for a in (1.01, 1.3, 1.6, 1.99):
        for b in (-4.0, -0.5, 0.5, 0.99):
            nv = N_func(x, ParamPair(a, b))
            curv.append(-(nv[2:] - 2 * nv[1:-1] + nv[:-2]).min())
    out.append(_worst("N is convex on (0, pi/16)", curv, 1e-10))

    errs = []
    for delta in np.linspace(0.0, np.pi / 4, 41)[1:]:
        for p in params:
            errs.append(abs(gate_power(phase_gate(delta), p).value - float(N_func(delta / 4, p))))
    out.append(_worst("phase-gate power matches N(delta/4)", errs, 1e-10))

    recs = [boost_demo(ParamPair(a, b)) for a, b in ((1.5, 0.5), (1.9, -2.0), (1.01, 0.5))]
    out.append(Case("T^(1/4) boosts magic beyond its own power", all(x.boosted for x in recs), str([round(x.delta - x.power, 6) for x in recs])))
    return out


# ---------------------------------------------------------------- stabilizer


def suite_stabilizer(seed: int, n: int) -> list[Case]:
    out = []
    for (d, m), want, name in (((2, 1), 6, "qubit"), ((3, 1), 12, "qutrit"), ((2, 2), 60, "two-qubit")):
        got = len(stab.pure_stabilizer_set(d, m))
        out.append(Case(f"{name} count = {want}", got == want, f"found {got}"))

    cliff = stab.qubit_clifford_group()
    out.append(Case("Clifford group has 24 elements", len(cliff) == 24, f"found {len(cliff)}"))
    ok = all(stab.is_clifford_covariant(v) for v in cliff)
    out.append(Case("Cliffords map Weyl operators to Weyl operators", ok, ""))
    S2 = stab.pure_stabilizer_set(2, 1)
    ok = all(stab.permutes_stabilizer_set(v, S2) for v in cliff)
    out.append(Case("every Clifford permutes the qubit stabilizer states", ok, ""))

    for (d, allowed) in ((2, (0.0, 0.5)), (3, (0.0, 1 / 3))):
        M = stab.pure_stabilizer_set(d, 1).matrix
        g = np.abs(M.conj() @ M.T) ** 2
        off = g[~np.eye(len(g), dtype=bool)]
        dev = np.min(np.abs(off[:, None] - np.array(allowed)[None, :]), axis=1)
        out.append(_worst(f"d={d} stabilizer overlaps lie in {{0, 1/{d}}}", dev, 1e-10))

    paulis = []
    for a in "IXYZ":
        for b in "IXYZ":
            paulis.append(np.kron(stab.PAULI[a], stab.PAULI[b]))
    counts = []
    for s in stab.pure_stabilizer_set(2, 2).states:
        v = s.amps
        counts.append(sum(1 for P in paulis if abs(abs(np.vdot(v, P @ v)) - 1) < 1e-10))
    out.append(Case("each two-qubit state is fixed by four Pauli strings", set(counts) == {4}, f"counts {sorted(set(counts))}"))

    r = _rng(seed, 51)
    v19, v17 = [], []
    for _ in range(n):
        psi = random_pure_state(2, r)
        rob = stab.qubit_robustness(psi, certify=False)
        fid = stab.stabilizer_fidelity(psi, S2)
        v19.append(1 / (1 + rob) - fid.fidelity)
        v17.append(fid.d_min - np.log2(1 + rob))
    out.append(_worst("1/(1+R) <= stabilizer fidelity", v19, 1e-10))
    out.append(_worst("D_min <= log2(1+R)", v17, 1e-10))

    r = _rng(seed, 52)
    errs = []
    for _ in range(max(1, n // 50)):
        rho = random_density_matrix(2, seed=r)
        errs.append(abs(stab.qubit_robustness_lp(rho) - stab.qubit_robustness(rho, certify=False)))
    out.append(_worst("robustness LP agrees with the octahedron formula", errs, 1e-8))
    return out


SUITE_FUNCS = {
    "entropy": suite_entropy,
    "jsd": suite_jsd,
    "magic": suite_magic,
    "gatepower": suite_gatepower,
    "stabilizer": suite_stabilizer,
}


def run_suite(name: str, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> dict:
    """Run one suite (or ``"all"``) and return the JSON-ready report."""
    if name != "all" and name not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    names = SUITES if name == "all" else (name,)
    cases: list[Case] = []
    for nm in names:
        for c in SUITE_FUNCS[nm](seed, samples):
            c.name = f"{nm}: {c.name}"
            cases.append(c)
    n_pass = sum(c.passed for c in cases)
    return {
        "suite": name,
        "passed": n_pass,
        "failed": len(cases) - n_pass,
        "cases": [asdict(c) for c in cases],
    }


def format_report(report: dict) -> str:
    lines = []
    for c in report["cases"]:
        lines.append(f"{c['name']}: {'pass' if c['passed'] else 'FAIL'}  [{c['detail']}]")
    lines.append(f"{report['passed']} passed, {report['failed']} failed")
    return "\n".join(lines) + "\n"
