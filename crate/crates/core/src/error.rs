use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ill-formed specialization: {0}")]
    IllFormedSpec(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("square ({i},{j}) is not in the diagram")]
    OutOfDiagram { i: usize, j: usize },
    #[error("partition does not fit in the {n}x{m} box")]
    NotInBox { n: usize, m: usize },
    #[error("last part is zero, cannot subtract 1 from every part")]
    NotStrictlyPositive,
    #[error("partition has {len} parts but only {n} variables")]
    LengthExceeded { len: usize, n: usize },
    #[error("singular linear system")]
    SingularSystem,
    #[error("evaluation point has a zero coordinate")]
    ZeroCoordinate,
    #[error("not W-invariant in the starred variables: {0}")]
    NotInAlgebra(String),
    #[error("not symmetric in x")]
    NotSymmetric,
    #[error("expansion needs degree above the bound {0}")]
    DegreeExceeded(usize),
    #[error("integrand has a constant term in the q-integration variable")]
    ConstantTermInMeasure,
    #[error("last part must be zero")]
    MuNNonzero,
    #[error("missing evaluation for partition {0}")]
    MissingEvaluation(String),
    #[error("eigenvalues coincide at these parameters")]
    DegenerateEigenvalue,
    #[error("parameters are not self-dual")]
    NotSelfDual,
    #[error("need more than {deg_bound} probes, got {probes}")]
    InsufficientProbes { deg_bound: usize, probes: usize },
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
