"""Global settings and tolerances governing the matrix computations."""

# spectral substrate
JACOBI_SWEEP_TOL = 1e-13  # off-diagonal Frobenius threshold relative to ||A||_F
JACOBI_MAX_SWEEPS = 60  # cyclic Jacobi sweeps before giving up
HERMITIAN_TOL = 1e-10  # allowed ||A - A^*||_F relative to (1 + ||A||_F)
PSD_TOL = 1e-10  # eigenvalues above -PSD_TOL * (1 + ||P||_F) are clamped to zero
RANK_TOL = 1e-10  # eigenvalues at or below RANK_TOL * max eigenvalue count as zero
ROUNDOFF_TOL = 1e-13  # eigenvalues below this fraction of the largest are solver noise

# transforms, criteria and predicates
POLAR_TOL = 1e-9  # epsilon_polar, scaled by (1 + ||T||_F)
CRITERION_TOL = 1e-9  # relative tolerance when comparing weight moduli
STRUCTURE_TOL = 1e-10  # commutator tolerance, scaled by (1 + ||T||_F^2)
CONJUGATION_TOL = 1e-10  # tolerance for unitary / symmetric / projection tests

# numerical complex symmetry certifier
CERTIFY_SEED = 0x5EED
CERTIFY_RESTARTS = 16
CERTIFY_MAX_ITERS = 500
CERTIFY_STEP = 0.1  # initial step of the plain gradient direction
CERTIFY_BACKTRACK = 0.5  # step shrink factor; only decreasing steps are accepted
CERTIFY_MAX_BACKTRACKS = 40
CERTIFY_STALL_TOL = 1e-10  # relative decrease below which an iteration counts as stalled
CERTIFY_STALL_COUNT = 8  # consecutive stalled iterations that end a restart
CERTIFY_PLATEAU_WINDOW = 20  # iterations compared by the plateau stop
CERTIFY_PLATEAU_TOL = 1e-3  # relative decrease over the window that ends a restart above the NotCS bound
CERTIFY_UNITARY_TOL = 1e-9  # ||V^*V - I||_F above which V is re-orthonormalized
CERTIFY_TARGET_RATIO = 1e-3  # restarts stop below this fraction of the CS bound
CERTIFY_METHOD = 'gauss-newton'  # descent direction, gauss-newton or gradient
CERTIFY_WORKERS = 1  # threads running restarts; 1 runs them in order
TAU_YES = 1e-7  # CS when best residual <= TAU_YES * (1 + ||T||_F)
TAU_NO = 1e-3  # NotCS when best residual >= TAU_NO * (1 + ||T||_F)

# reporting
SIG_DIGITS = 6  # significant digits for printed matrices
