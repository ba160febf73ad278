use core::fmt;

/// Errors shared by graph construction, family generators, and the
/// exact solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered pair appears twice in an edge list.
    DuplicateEdge { u: usize, v: usize },
    /// An endpoint lies outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// A family generator was given parameters outside its domain.
    BadParameter(&'static str),
    /// The operation requires a connected graph.
    NotConnected,
    /// `branch_tree` was given a branch that is not a tree.
    NotATree,
    /// The graph exceeds the solver's size cap.
    TooLarge { n: usize, cap: usize },
    /// A line graph of an edgeless graph was requested.
    EmptyEdgeSet,
    /// Landmark set is empty, repeats a vertex, or is out of range.
    BadLandmarks,
    /// The search budget ran out. `lower` is certified (every smaller
    /// size failed exhaustively); `upper` is the best witness size
    /// found, if any.
    BudgetExceeded {
        lower: usize,
        upper: Option<usize>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u},{v}}}"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            Error::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            Error::NotConnected => write!(f, "graph is not connected"),
            Error::NotATree => write!(f, "graph is not a tree"),
            Error::TooLarge { n, cap } => write!(f, "graph order {n} exceeds cap {cap}"),
            Error::EmptyEdgeSet => write!(f, "graph has no edges"),
            Error::BadLandmarks => write!(f, "invalid landmark set"),
            Error::BudgetExceeded { lower, upper } => match upper {
                Some(u) => write!(f, "search budget exceeded; value in {lower}..={u}"),
                None => write!(f, "search budget exceeded; value >= {lower}"),
            },
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
