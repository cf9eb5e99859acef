"""Acceptance criteria 1-10, each at its stated tolerance and time budget.

Every test records one pass/fail line, printed in the terminal summary.
"""

import time

import numpy as np
from conftest import ACCEPTANCE_LINES

from magic_jsd import (
    K_func,
    N_func,
    ParamPair,
    c_psi,
    gate_power,
    jsd_J_pure,
    jsd_Jprime_pure,
    magic_M_pure,
    prop3_bound_check,
    prop3_constants,
    pure_stabilizer_set,
    qubit_clifford_group,
    qubit_robustness,
    qutrit_T_state,
    random_pure_state,
    t_gate,
)
from magic_jsd.magic import magic_M_bruteforce, qubit_state
from magic_jsd.scans import EXAMPLE1_PHI, EXAMPLE1_THETA, scan_example1, scan_example2, scan_example3
from magic_jsd.stabilizer import permutes_stabilizer_set
from magic_jsd.verify import run_suite

PI = np.pi
SEED = 20240917


def record(num, checks, elapsed, budget):
    """checks: list of (label, ok, detail)."""
    checks = checks + [("runtime", elapsed < budget, f"{elapsed:.3g}s < {budget:g}s")]
    ok = all(c[1] for c in checks)
    detail = "; ".join(f"{lab} {'ok' if good else 'FAIL'} ({d})" for lab, good, d in checks)
    ACCEPTANCE_LINES.append((num, ok, detail))
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def rng(key):
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([SEED, key])))


def test_criterion_01_qutrit_overlap():
    t = qutrit_T_state()
    S = pure_stabilizer_set(3, 1)
    c_psi(t, S)  # warm caches
    t0 = time.perf_counter()
    value, _, wit = c_psi(t, S)
    elapsed = time.perf_counter() - t0
    ref = (1 + np.cos(2 * PI / 9)) / 3
    checks = [
        ("value", abs(value - ref) <= 1e-12, f"{value:.15g} vs {ref:.15g}"),
        ("witnesses", set(wit) == {"psi_00", "psi_02", "psi_22"}, ",".join(wit)),
    ]
    assert record(1, checks, elapsed, 1e-3)


def test_criterion_02_qutrit_formulas():
    t0 = time.perf_counter()
    rows = np.array(scan_example2())
    a, b, M, m = rows.T
    cz = np.cos(2 * PI / 9)
    l1, l2 = 2 / 3 + cz / 6, 1 / 3 - cz / 6
    M_ref = ((l1**a + l2**a) ** b - 1) / ((1 - a) * b)
    m_ref = (1 - (l1 ** (2 - a) + l2 ** (2 - a)) ** b) / ((1 - a) * b)
    tq = qutrit_T_state()
    dual = np.array([magic_M_pure(tq, ParamPair(2 - x, y)).value for x, y in zip(a, b)])
    elapsed = time.perf_counter() - t0
    e_M = np.abs(M - M_ref).max()
    e_m = np.abs(m - m_ref).max()
    e_d = np.abs(m - dual).max()
    checks = [
        ("grid", rows.shape[0] == 1600, f"{rows.shape[0]} points"),
        ("M vs formula", e_M <= 1e-10, f"max err {e_M:.3g}"),
        ("m vs formula", e_m <= 1e-10, f"max err {e_m:.3g}"),
        ("m = M(2-alpha)", e_d <= 1e-12, f"max err {e_d:.3g}"),
    ]
    assert record(2, checks, elapsed, 5.0)


def test_criterion_03_duality():
    r = rng(3)
    t0 = time.perf_counter()
    params = []
    while len(params) < 20:
        a = r.uniform(0.02, 1.98)
        if abs(a - 1) > 0.02:
            params.append(ParamPair(a, r.choice([-1, 1]) * r.uniform(0.1, 5)))
    worst = 0.0
    for d in (2, 3, 4):
        for _ in range(1000):
            psi, phi = random_pure_state(d, r), random_pure_state(d, r)
            for p in params:
                worst = max(worst, abs(jsd_J_pure(psi, phi, p) - jsd_Jprime_pure(psi, phi, p.dual())))
    elapsed = time.perf_counter() - t0
    assert record(3, [("J = J'(2-alpha)", worst <= 1e-10, f"max err {worst:.3g} over 60000")], elapsed, 30.0)


def test_criterion_04_closed_form_vs_bruteforce():
    r = rng(4)
    params = [ParamPair(0.5, 2), ParamPair(0.3, -1.5), ParamPair(1.5, 0.5), ParamPair(1.8, -3)]
    t0 = time.perf_counter()
    worst = 0.0
    for d in (2, 3):
        S = pure_stabilizer_set(d, 1)
        for _ in range(1000):
            psi = random_pure_state(d, r)
            for p in params:
                worst = max(worst, abs(magic_M_pure(psi, p, S).value - magic_M_bruteforce(psi, p, S)))
    elapsed = time.perf_counter() - t0
    assert record(4, [("closed form = min over S", worst <= 1e-10, f"max err {worst:.3g}")], elapsed, 30.0)


def test_criterion_05_bloch_grid():
    p = ParamPair(0.5, 2)
    t0 = time.perf_counter()
    rows = np.array(scan_example1(p))
    th, ph, _, M = rows.T
    k = int(np.argmax(M))
    stab_dirs = [(0, 0), (PI, 0), (PI / 2, 0), (PI / 2, PI), (PI / 2, PI / 2), (PI / 2, 3 * PI / 2)]
    stab_vals = [magic_M_pure(qubit_state(t, f), p).value for t, f in stab_dirs]
    elapsed = time.perf_counter() - t0

    dth = EXAMPLE1_THETA.stop / (EXAMPLE1_THETA.steps - 1)
    dph = EXAMPLE1_PHI.stop / EXAMPLE1_PHI.steps
    th0 = np.arccos(1 / np.sqrt(3))
    near = False
    for tt in (th0, PI - th0):
        for j in range(4):
            fT = (2 * j + 1) * PI / 4
            dphi = abs((ph[k] - fT + PI) % (2 * PI) - PI)
            near |= abs(th[k] - tt) <= dth and dphi <= dph
    checks = [
        ("grid", rows.shape[0] == 40000, f"{rows.shape[0]} points"),
        ("max M", abs(M[k] - 0.459665) <= 1e-3, f"{M[k]:.9g} vs 0.459665"),
        ("argmax near T-type", near, f"theta {th[k]:.5g}, phi {ph[k]:.5g}"),
        ("stabilizer directions", max(stab_vals) <= 1e-10, f"max {max(stab_vals):.3g}"),
    ]
    assert record(5, checks, elapsed, 10.0)


def test_criterion_06_boost_grid():
    t0 = time.perf_counter()
    rows = scan_example3()
    err = 0.0
    k0 = 0.0
    for a, b, delta, power, _ in rows:
        p = ParamPair(a, b)
        err = max(err, abs((delta - power) - K_func(PI / 64, p)))
        k0 = max(k0, abs(K_func(0.0, p)))
    elapsed = time.perf_counter() - t0
    checks = [
        ("grid", len(rows) == 2500, f"{len(rows)} points"),
        ("boosted everywhere", all(r[4] for r in rows), f"{sum(r[4] for r in rows)}/{len(rows)}"),
        ("delta - power = K(pi/64)", err <= 1e-10, f"max err {err:.3g}"),
        ("K(0) = 0", k0 <= 1e-12, f"max {k0:.3g}"),
    ]
    assert record(6, checks, elapsed, 10.0)


def test_criterion_07_gate_power_anchors():
    params = [ParamPair(0.5, 2), ParamPair(1.5, 0.5), ParamPair(1.9, -2), ParamPair(3, 1)]
    t0 = time.perf_counter()
    cliff = max(abs(gate_power(u, p).value) for u in qubit_clifford_group() for p in params)
    q = [gate_power(t_gate(0.25), p) for p in params]
    e_q = max(abs(r.C_U - np.cos(PI / 32)) for r in q)
    e_N = max(abs(r.value - N_func(PI / 64, p)) for r, p in zip(q, params))
    e_T = abs(gate_power(t_gate(1.0), params[0]).C_U - np.cos(PI / 8))
    elapsed = time.perf_counter() - t0
    checks = [
        ("24 Cliffords", cliff <= 1e-12, f"max {cliff:.3g}"),
        ("T^(1/4) C_U", e_q <= 1e-12, f"err {e_q:.3g}"),
        ("T^(1/4) value", e_N <= 1e-12, f"err {e_N:.3g}"),
        ("T C_U", e_T <= 1e-12, f"err {e_T:.3g}"),
    ]
    assert record(7, checks, elapsed, 1.0)


def test_criterion_08_robustness_bound():
    r = rng(8)
    t0 = time.perf_counter()
    c = prop3_constants()
    resid = abs(c.lambda0 - (1 - c.lambda0) * 16 ** (2 * c.lambda0 - 1))
    worst = {}
    for _ in range(1000):
        psi = random_pure_state(2, r)
        R = qubit_robustness(psi)
        for a in (0.5, 1.5, 3.0):
            for b in (1.5, 2.0, 5.0):
                chk = prop3_bound_check(psi, ParamPair(a, b), robustness=R)
                worst[(a, b)] = max(worst.get((a, b), -np.inf), chk.lhs - chk.rhs)
    elapsed = time.perf_counter() - t0
    checks = [("lambda0 residual", resid <= 1e-12, f"{resid:.3g}, t0 = {c.t0:.12g}")]
    for (a, b), v in sorted(worst.items()):
        checks.append((f"({a:g},{b:g})", v <= 1e-9, f"max lhs - t0 = {v:.3g}"))
    assert record(8, checks, elapsed, 10.0)


def test_criterion_09_stabilizer_structure():
    t0 = time.perf_counter()
    n2, n3, n4 = (len(pure_stabilizer_set(d, n)) for d, n in [(2, 1), (3, 1), (2, 2)])
    G = qubit_clifford_group()
    S = pure_stabilizer_set(2, 1)
    perm = all(permutes_stabilizer_set(u, S) for u in G)
    elapsed = time.perf_counter() - t0
    formula = 2**2 * (2 + 1) * (4 + 1)
    checks = [
        ("|PS_2| = 6", n2 == 6, str(n2)),
        ("|PS_3| = 12", n3 == 12, str(n3)),
        ("two-qubit = 60", n4 == 60 == formula, str(n4)),
        ("Cliffords permute PS_2", perm and len(G) == 24, f"{len(G)} Cliffords"),
    ]
    assert record(9, checks, elapsed, 30.0)


def test_criterion_10_verify_all():
    t0 = time.perf_counter()
    rep = run_suite("all")
    elapsed = time.perf_counter() - t0
    bad = [c["name"] for c in rep["cases"] if not c["passed"]]
    checks = [("verify all", rep["failed"] == 0, f"{rep['passed']} passed, {rep['failed']} failed {bad}")]
    assert record(10, checks, elapsed, 180.0)
