"""Quantum (alpha, beta) Jensen-Shannon divergences and the magic
monotones built on them."""

from .core import (
    DensityMatrix,
    ParamPair,
    PureState,
    Spectrum,
    basis_state,
    eig_hermitian,
    make_rng,
    matrix_power_on_support,
    overlap,
    partial_trace,
    random_density_matrix,
    random_pure_state,
    random_unitary,
    tensor,
    trace_distance,
)
from .entropy import (
    binary_shannon_base2,
    f_func,
    g_func,
    quantum_entropy,
    quantum_relative_entropy,
    tr_alpha_power,
    tsallis_entropy,
    unified_entropy,
    w_func,
)
from .errors import (
    BadRank,
    DegenerateKernel,
    DimMismatch,
    DomainError,
    InvalidState,
    MagicJSDError,
    NonHermitian,
    NonUnitary,
    Unsupported,
    ValidationError,
)
from .gate_power import K_func, N_func, boost_demo, gate_power, t_gate
from .jsd import PairSpectrum, jsd_J, jsd_J_pure, jsd_Jprime, jsd_Jprime_pure, pair_spectrum
from .magic import (
    MagicResult,
    c_psi,
    magic_M_pure,
    magic_m_pure,
    magic_mixed_upper_bound,
    prop3_bound_check,
    prop3_constants,
    qubit_qmax,
)
from .stabilizer import (
    StabilizerSet,
    bloch_vector,
    pure_stabilizer_set,
    qubit_clifford_group,
    qubit_is_stabilizer,
    qubit_robustness,
    qutrit_T_state,
    stabilizer_fidelity,
    t_type_state,
    weyl_operator,
)

__version__ = "0.1.0"
