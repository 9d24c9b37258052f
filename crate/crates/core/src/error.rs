use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A 2x2 matrix failed the transfer-matrix membership checks
    /// (conjugate-symmetric entries, unit determinant).
    #[error("not a valid transfer matrix: {0}")]
    InvalidTransfer(String),

    /// A 2x2 matrix failed the coin membership checks (unitarity, equal
    /// diagonal entries).
    #[error("not a valid coin: {0}")]
    InvalidCoin(String),

    /// Coin with vanishing diagonal entry (perfect reflection); excluded
    /// from the coin group.
    #[error("degenerate coin: |diagonal entry| <= tolerance (perfect reflection)")]
    DegenerateCoin,

    /// State dimension does not match the coin sequence.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The boundary-constrained stationary system was singular. Cannot
    /// occur for coins that pass validation.
    #[error("singular stationary system")]
    SingularSystem,

    /// The dense eigensolver did not converge.
    #[error("eigensolver failed to converge")]
    EigensolverFailure,

    /// Path with non-matching consecutive arcs.
    #[error("path arcs are not consecutive at step {0}")]
    NonConsecutivePath(usize),

    /// Requested enumeration length exceeds the configured cap.
    #[error("enumeration length {requested} exceeds cap {cap}")]
    EnumerationCapExceeded { requested: usize, cap: usize },

    /// The path series needs more layers than the hard cap; the spectral
    /// radius is too close to 1 (near-degenerate coins).
    #[error("series requires {required} layers, exceeding cap {cap}")]
    SlowConvergence { required: usize, cap: usize },

    /// Degenerate (grazing) turning point: |V'| below tolerance at a root
    /// of V - lambda.
    #[error("tangent turning point at x = {0}")]
    TangentTurningPoint(f64),

    /// Adaptive step size underflowed; the problem is too stiff for the
    /// requested tolerance.
    #[error("ODE step size underflow near x = {0}")]
    StepUnderflow(f64),

    /// The truncation radius is too small for the requested matching
    /// accuracy.
    #[error("truncation radius too small: potential tail {tail:.3e} exceeds threshold {threshold:.3e}")]
    TruncationTooSmall { tail: f64, threshold: f64 },

    /// The solution pair used to expand a basis is (numerically) linearly
    /// dependent.
    #[error("dependent solution pair (Wronskian {0:.3e} below tolerance)")]
    DependentPair(f64),

    /// Adaptive quadrature failed to reach the requested accuracy.
    #[error("quadrature failed to converge (estimated error {0:.3e})")]
    QuadratureFailure(f64),

    /// Penetration factor evaluated on the branch cut (arg z = +-pi).
    #[error("penetration factor argument on the branch cut")]
    BranchCut,

    /// Empty coin sequence where at least one coin is required.
    #[error("empty coin sequence")]
    EmptySequence,

    /// Potential outside the supported class for the requested operation.
    #[error("unsupported potential: {0}")]
    InvalidPotential(String),
}
