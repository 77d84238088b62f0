use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("vertex {vertex} would reach degree {degree} (maximum is 3)")]
    DegreeExceeded { vertex: usize, degree: usize },
    #[error("graph has no 2-degeneracy ordering")]
    NotTwoDegenerate,
    #[error("graph parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("negative Betti number {value} at b_({i},{j}): cubic strand inconsistent with n={n}, g={g}")]
    Inconsistent {
        i: usize,
        j: usize,
        value: i128,
        n: usize,
        g: usize,
    },
    #[error("cubic strand unknown: graph of genus {genus} is not a tree of cycles and no cubic strand was supplied")]
    CubicStrandUnknown { genus: usize },
    #[error("graph does not satisfy the standing assumptions: {0}")]
    InvalidGraph(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} too small: need p > {min}")]
    PrimeTooSmall { p: u64, min: u64 },
    #[error("prime {0} exceeds the supported 62-bit range")]
    PrimeTooLarge(u64),
    #[error("genericity check failed after {attempts} attempt(s): {reason}")]
    RetriesExhausted { attempts: u32, reason: String },
    #[error("graph cannot be realized: {0}")]
    InvalidGraph(String),
    #[error("malformed arrangement: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("genericity error: {0}")]
    Genericity(String),
    #[error("degree {degree} outside model range 0..={max_deg}")]
    DegreeOutOfRange { degree: usize, max_deg: usize },
    #[error("regularity violation: b_({i},{j}) = {value}")]
    Regularity { i: usize, j: usize, value: u64 },
    #[error("oracle size limit: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
