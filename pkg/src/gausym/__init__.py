"""Numerical toolkit for N-mode Gaussian states with geometrically uniform
symmetry: phase-space state algebra, Gaussian unitaries and channels,
square-root-measurement detection, and closed-form PPM/PSK error
probabilities, cross-validated by a truncated number-basis brute force.
"""

__version__ = "0.1.0"

from .fock import (
    TruncationError,
    fock_displacement,
    fock_rotation,
    fock_squeeze,
    kron_state,
    ladder_operators,
    oracle_overlap,
)
from .gus import (
    Constellation,
    SizeLimitError,
    SymmetryDescriptor,
    build_psk,
    channel_closure_check,
    closure_phase_grid,
    mode_cycle_map,
    ppm_phase_matrix,
    ppm_projectors,
    ppm_symmetry_operator,
    rotate_params,
    verify_gus,
)
from .linalg import (
    dft_matrix,
    hermitian_eigendecomposition,
    matrix_function_hermitian,
    skew_block_diagonalize,
    takagi_factorization,
)
from .overlaps import (
    SingleModeParams,
    gamma_vacuum_overlap,
    multimode_gram_entry,
    overlap_decay_factor,
    symbol_photon_number,
    yuen_inner_product,
)
from .ppm import (
    EmptyFeasibleRangeError,
    PpmConfig,
    feasibility_threshold,
    gamma_from_photon_budget,
    pe_sweep,
    ppm_constellation,
    ppm_error_probability,
    sweep_to_csv,
)
from .srm import (
    DetectionReport,
    InvalidGramError,
    gram_from_constellation,
    gram_from_json,
    gram_to_json,
    is_circulant,
    measurement_vectors,
    srm_circulant,
    srm_generic,
)
from .states import (
    GaussianChannel,
    GaussianState,
    SymplecticMap,
    amplification_channel,
    apply_channel,
    apply_symplectic,
    characteristic_function,
    classical_noise_channel,
    lossy_channel,
    mean_photon_number,
    product_state,
    symplectic_eigenvalues,
    symplectic_form,
    thermal_noise_channel,
    thermal_state,
    vacuum_state,
    williamson,
)
from .unitaries import (
    compose,
    displacement_map,
    displacement_vector,
    generate_mixed_state,
    generate_pure_state,
    rotation_map,
    squeeze_map,
    switch_displacement_squeeze,
    switch_rotation_displacement,
    switch_rotation_squeeze,
)
