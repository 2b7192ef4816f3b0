use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the supported evaluation box.
    #[error("{what} = {value} is outside the supported domain ({expected})")]
    Domain {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("continued fraction did not converge for nu = {nu}, x = {x}")]
    ContinuedFraction { nu: f64, x: f64 },

    #[error("root refinement did not converge near x = {near} after {iterations} iterations")]
    NoConvergence { near: f64, iterations: usize },

    #[error("zero sequences share no judgeable interval")]
    EmptyOverlap,

    #[error("both specs describe the same function; the Wronskian vanishes identically")]
    IdenticalSpecs,

    /// A hypothesis of a conditional statement does not hold, so its
    /// conclusion was not checked.
    #[error("premise not satisfied: {0}")]
    PremiseFailed(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            what,
            value,
            expected,
        }
    }
}
