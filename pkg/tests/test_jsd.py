import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magic_jsd import (
    DimMismatch,
    ParamPair,
    PureState,
    jsd_J,
    jsd_J_pure,
    jsd_Jprime,
    jsd_Jprime_pure,
    pair_spectrum,
    random_density_matrix,
    random_pure_state,
    unified_entropy,
)
from magic_jsd.jsd import pair_lambdas

R2 = 1 / np.sqrt(2)


def test_pair_spectrum_examples(ket):
    s = pair_spectrum(ket["0"], ket["0"])
    assert (s.lambda1, s.lambda2) == (1.0, 0.0)
    assert s.degenerate
    s = pair_spectrum(ket["0"], ket["1"])
    assert abs(s.lambda1 - 0.5) < 1e-15 and abs(s.lambda2 - 0.5) < 1e-15
    s = pair_spectrum(ket["0"], ket["+"])
    assert abs(s.lambda1 - (1 + R2) / 2) < 1e-15
    assert abs(s.lambda2 - (1 - R2) / 2) < 1e-15


def test_pair_spectrum_reconstructs(rng):
    for d in [2, 3, 5]:
        psi = random_pure_state(d, rng)
        phi = random_pure_state(d, rng)
        s = pair_spectrum(psi, phi)
        mid = 0.5 * (np.outer(psi.amps, psi.amps.conj()) + np.outer(phi.amps, phi.amps.conj()))
        assert np.abs(s.reconstruct() - mid).max() < 1e-14
        assert abs(np.vdot(s.xi1.amps, s.xi2.amps)) < 1e-14


def test_pair_lambdas_snap():
    l1, l2 = pair_lambdas(1 - 1e-13)
    assert l1 == 1.0 and l2 == 0.0


def test_jsd_J_examples(ket):
    rho = random_density_matrix(3, seed=2)
    assert abs(jsd_J(rho, rho, ParamPair(0.5, 2))) < 1e-14
    assert abs(jsd_J(ket["0"], ket["1"], ParamPair(2, 1)) - 0.5) < 1e-15
    assert abs(jsd_J(ket["0"], ket["+"], ParamPair(2, 1)) - 0.25) < 1e-15


def test_jsd_Jprime_examples(ket):
    rho = random_density_matrix(3, seed=3)
    assert abs(jsd_Jprime(rho, rho, ParamPair(1.5, 0.5))) < 1e-13
    assert abs(jsd_Jprime(ket["0"], ket["1"], ParamPair(0.5, 1)) - (2 - np.sqrt(2))) < 1e-14
    # two-eigenvalue closed form, mpmath oracle
    assert abs(jsd_Jprime(ket["0"], ket["+"], ParamPair(1.5, 1)) - 0.61312592975275306) < 1e-13


def test_jsd_pure_examples(ket):
    assert jsd_J_pure(ket["+"], ket["+"], ParamPair(0.5, 2)) == 0
    assert abs(jsd_J_pure(ket["0"], ket["1"], ParamPair(2, 2)) - 0.375) < 1e-15
    lam = ((1 + R2) / 2, (1 - R2) / 2)
    v = jsd_J_pure(ket["0"], ket["+"], ParamPair(0.5, 2))
    assert abs(v - unified_entropy(lam, ParamPair(0.5, 2))) < 1e-14
    assert abs(v - 0.70710678118654752) < 1e-14
    assert jsd_Jprime_pure(ket["-"], ket["-"], ParamPair(1.3, 2)) == 0
    for a, b in [(0.5, 1), (1.5, -2), (0.2, 3)]:
        ref = (1 - (2 * 0.5 ** (2 - a)) ** b) / ((1 - a) * b)
        assert abs(jsd_Jprime_pure(ket["0"], ket["1"], ParamPair(a, b)) - ref) < 1e-14
    p = ParamPair(1.5, 0.5)
    assert abs(jsd_Jprime_pure(ket["0"], ket["+"], p) - jsd_Jprime(ket["0"], ket["+"], p)) < 1e-10


def test_pure_closed_forms_match_matrix_path(rng):
    for d in [2, 3, 4]:
        for _ in range(5):
            psi = random_pure_state(d, rng)
            phi = random_pure_state(d, rng)
            for a, b in [(0.5, 2), (1.5, 0.5), (2.5, -1), (0.2, -3)]:
                p = ParamPair(a, b)
                assert abs(jsd_J_pure(psi, phi, p) - jsd_J(psi, phi, p)) < 1e-10
                assert abs(jsd_Jprime_pure(psi, phi, p) - jsd_Jprime(psi, phi, p)) < 1e-10


def test_dim_mismatch():
    with pytest.raises(DimMismatch):
        jsd_J(PureState([1, 0]), PureState([1, 0, 0]), ParamPair(0.5, 1))
    with pytest.raises(DimMismatch):
        jsd_J_pure(PureState([1, 0]), PureState([1, 0, 0]), ParamPair(0.5, 1))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 4), st.floats(0.05, 1.95).filter(lambda a: abs(a - 1) > 1e-3),
       st.floats(-5, 5).filter(lambda b: abs(b) > 1e-3), st.integers(0, 2**32 - 1))
def test_duality_hypothesis(d, a, b, seed):
    rng = np.random.Generator(np.random.Philox(seed))
    psi, phi = random_pure_state(d, rng), random_pure_state(d, rng)
    lhs = jsd_J_pure(psi, phi, ParamPair(a, b))
    rhs = jsd_Jprime_pure(psi, phi, ParamPair(2 - a, b))
    assert abs(lhs - rhs) < 1e-10 * max(1, abs(lhs))


@settings(max_examples=60, deadline=None)
@given(st.floats(0.05, 3).filter(lambda a: abs(a - 1) > 1e-3), st.floats(-3, 3).filter(lambda b: abs(b) > 1e-3),
       st.integers(0, 2**32 - 1))
def test_symmetry_and_sign_hypothesis(a, b, seed):
    rng = np.random.Generator(np.random.Philox(seed))
    rho, sig = random_density_matrix(3, seed=rng), random_density_matrix(3, seed=rng)
    p = ParamPair(a, b)
    j1, j2 = jsd_J(rho, sig, p), jsd_J(sig, rho, p)
    assert abs(j1 - j2) < 1e-12 * max(1, abs(j1))
    if (a < 1 and b <= 1) or (a > 1 and b >= 1):
        assert j1 >= -1e-12
