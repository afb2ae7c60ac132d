use thiserror::Error;

/// Errors raised by the algebra, geometry and elimination routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has degree 0 in `{var}`")]
    ZeroDegree { var: String },
    #[error("polynomial is not linear in `{var}` (degree {degree})")]
    NotLinear { var: String, degree: u32 },
    #[error("polynomial is not quadratic (total degree {degree})")]
    NotQuadratic { degree: u32 },
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,
    #[error("function does not depend on `{var}`")]
    MissingDependence { var: String },
    #[error("degenerate geometric input: {0}")]
    DegenerateInput(String),
    #[error("lines are not pairwise skew")]
    NotSkew,
    #[error("t3 = -1: the plane passes through [0:0:1:1]")]
    T3IsMinusOne,
    #[error("transversal conditions have a {dimension}-dimensional solution space")]
    DegenerateConditions { dimension: usize },
    #[error("dual line of the fourth sheaf lies in the second ruling")]
    RulingL2,
    #[error("alpha = {alpha} is excluded (the fourth axial line would meet l2 or l3)")]
    AlphaExcluded { alpha: String },
    #[error("sphere centres are coplanar")]
    CoplanarCenters,
    #[error("line pencil centres coincide")]
    CoincidentCenters,
    #[error("gave up after {attempts} resampling attempts")]
    ExhaustedRetries { attempts: usize },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
