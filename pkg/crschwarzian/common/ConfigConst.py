#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

"""
Configuration and other constants for use when looking up
configuration values, model specification keys, check names
or when default values may be needed.

"""

#####
# General Names and Defaults
#

NOT_SET = 'Not Set'

PRODUCT_NAME   = 'CrSchwarzian'
ENGINE_VERSION = '1.0.0'

DEFAULT_CONFIG_FILE_NAME = './config/CrSchwarzianConfig.props'
PARENT_PATH              = '../'

#####
# Exit codes
#

EXIT_OK            = 0
EXIT_CHECK_FAILURE = 1
EXIT_CONFIG_ERROR  = 2
EXIT_DOMAIN_ERROR  = 3

#####
# Configuration sections and keys
#

ENGINE       = 'Engine'
VERIFICATION = 'Verification'
LOGGING      = 'Logging'

JET_ORDER_KEY      = 'jetOrder'
FD_STEP_FIRST_KEY  = 'fdStepFirst'
FD_STEP_SECOND_KEY = 'fdStepSecond'
SAMPLE_RADIUS_KEY  = 'sampleRadius'

SAMPLES_KEY          = 'samples'
SEED_KEY             = 'seed'
WORKERS_KEY          = 'workers'
JL_MIN_ABS_G_KEY     = 'jlMinAbsG'
TOLERANCE_KEY_PREFIX = 'tol.'

LOG_LEVEL_KEY          = 'logLevel'
LOG_RESOURCE_USAGE_KEY = 'logResourceUsage'

#####
# Engine defaults
#

MIN_JET_ORDER = 0
MAX_JET_ORDER = 4

DEFAULT_JET_ORDER      = 4
DEFAULT_FD_STEP_FIRST  = 1.0e-5
DEFAULT_FD_STEP_SECOND = 1.0e-4
DEFAULT_SAMPLE_RADIUS  = 0.5

# absolute threshold below which log / division arguments count as zero
SINGULAR_THRESHOLD = 1.0e-14

# imaginary part above which a conformal factor is rejected as non-real
REAL_FIELD_THRESHOLD = 1.0e-12

#####
# Verification defaults
#

DEFAULT_SAMPLES      = 20
DEFAULT_SEED         = 42
DEFAULT_WORKERS      = 1
DEFAULT_JL_MIN_ABS_G = 0.1
DEFAULT_LOG_LEVEL    = 'INFO'

RANK_LEMMA_SCALAR_TOL = 1.0e-10
HARMONIC_TOL          = 1.0e-10
MOBIUS_WARN_TOL       = 1.0e-6

#####
# Model specification keys (JSON)
#

MODEL_KIND_KEY = 'kind'
MODEL_N_KEY    = 'n'
MODEL_PHI_KEY  = 'phi'
MODEL_BIG_PHI_KEY = 'Phi'
MODEL_BASE_KEY = 'base'
MODEL_JL_KEY   = 'jl'

HEISENBERG_MODEL = 'heisenberg'
RIGID_MODEL      = 'rigid'
CONFORMAL_MODEL  = 'conformal'

JL_KAPPA_KEY  = 'kappa'
JL_MU_KEY     = 'mu'
JL_LAMBDA_KEY = 'lambda'
JL_C_KEY      = 'C'

#####
# Suite configuration and report keys (JSON)
#

SUITE_MODEL_KEY     = 'model'
SUITE_NAME_KEY      = 'suite'
SUITE_SAMPLES_KEY   = 'samples'
SUITE_SEED_KEY      = 'seed'
SUITE_TOLERANCE_KEY = 'tolerances'
SUITE_OUTPUT_KEY    = 'out'

REPORT_VERSION_KEY = 'version'
REPORT_CHECKS_KEY  = 'checks'
REPORT_WALL_MS_KEY = 'wall_ms'

CHECK_NAME_KEY         = 'name'
CHECK_MAX_RESIDUAL_KEY = 'max_residual'
CHECK_TOLERANCE_KEY    = 'tolerance'
CHECK_PASS_KEY         = 'pass'
CHECK_WORST_POINT_KEY  = 'worst_point'
CHECK_ASSERTED_KEY     = 'asserted'

#####
# Check names
#

JET_FD_CHECK               = 'jet-fd'
JET_FD_SECOND_CHECK        = 'jet-fd-second'
DUALITY_CHECK              = 'duality'
STRUCTURE_EQUATION_CHECK   = 'structure-equation'
BRACKET_CONNECTION_CHECK   = 'bracket-connection'
COMMUTATION_CHECK          = 'commutation'
CONFORMAL_INVOLUTION_CHECK = 'conformal-involution'
SUBLAPLACIAN_LAW_CHECK     = 'sublaplacian-law'
SCHWARZIAN_SYMMETRY_CHECK  = 'schwarzian-symmetry'
ADDITIVITY_CHECK           = 'additivity'
TORSION_LINK_CHECK         = 'torsion-link'
MOBIUS_JL_CHECK            = 'mobius-jl'
PLURIHARMONIC_CHECK        = 'pluriharmonic'
CURVATURE_SYMMETRY_CHECK   = 'curvature-symmetry'
CURVATURE_CLOSURE_CHECK    = 'curvature-closure'
CHERN_MOSER_CHECK          = 'chern-moser'
SCALAR_FORMULA_CHECK       = 'scalar-formula'
CONSTANT_CURVATURE_CHECK   = 'constant-curvature'
PSEUDO_EINSTEIN_CHECK      = 'pseudo-einstein'
TRANSFORMATION_LAWS_CHECK  = 'transformation-laws'
BOCHNER_CHECK              = 'bochner'
GRAHAM_LEE_TRACE_CHECK     = 'graham-lee-trace'
HAMILTONIAN_CHECK          = 'hamiltonian'
TORSION_RANK_CHECK         = 'torsion-rank'
WITNESS_CHECK              = 'witness'
RANK_LEMMA_CHECK           = 'rank-lemma'
CLASSICAL_SCHWARZIAN_CHECK = 'classical-schwarzian'
EXAMPLE2_CHECK             = 'example2'

#####
# Default tolerances, by check name
#

DEFAULT_TOLERANCES = {
	JET_FD_CHECK:               1.0e-5,
	JET_FD_SECOND_CHECK:        1.0e-3,
	DUALITY_CHECK:              1.0e-10,
	STRUCTURE_EQUATION_CHECK:   1.0e-8,
	BRACKET_CONNECTION_CHECK:   1.0e-8,
	COMMUTATION_CHECK:          1.0e-7,
	CONFORMAL_INVOLUTION_CHECK: 1.0e-9,
	SUBLAPLACIAN_LAW_CHECK:     1.0e-8,
	SCHWARZIAN_SYMMETRY_CHECK:  1.0e-10,
	ADDITIVITY_CHECK:           1.0e-8,
	TORSION_LINK_CHECK:         1.0e-9,
	MOBIUS_JL_CHECK:            1.0e-9,
	PLURIHARMONIC_CHECK:        1.0e-8,
	CURVATURE_SYMMETRY_CHECK:   1.0e-8,
	CURVATURE_CLOSURE_CHECK:    1.0e-7,
	CHERN_MOSER_CHECK:          1.0e-7,
	SCALAR_FORMULA_CHECK:       1.0e-6,
	CONSTANT_CURVATURE_CHECK:   1.0e-6,
	PSEUDO_EINSTEIN_CHECK:      1.0e-8,
	TRANSFORMATION_LAWS_CHECK:  1.0e-7,
	BOCHNER_CHECK:              1.0e-6,
	GRAHAM_LEE_TRACE_CHECK:     1.0e-6,
	HAMILTONIAN_CHECK:          1.0e-8,
	TORSION_RANK_CHECK:         1.0e-9,
	WITNESS_CHECK:              1.0e-12,
	RANK_LEMMA_CHECK:           1.0e-10,
	CLASSICAL_SCHWARZIAN_CHECK: 1.0e-10,
	EXAMPLE2_CHECK:             1.0e-9
}

#####
# Suite names
#

ALL_SUITE          = 'all'
SUBSTRATE_SUITE    = 'substrate'
FRAME_SUITE        = 'frame'
COMMUTATION_SUITE  = 'commutation'
SCHWARZIAN_SUITE   = 'schwarzian'
CURVATURE_SUITE    = 'curvature'
JERISON_LEE_SUITE  = 'jerison-lee'
BOCHNER_SUITE      = 'bochner'
CLASSICAL_SUITE    = 'classical'
