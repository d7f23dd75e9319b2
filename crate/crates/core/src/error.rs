use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature did not converge after {levels} levels (last difference {last_difference:e})")]
    NonConvergence { levels: usize, last_difference: f64 },

    #[error("factor 1 - ({re} + {im}i)u crosses the branch cut on (0, 1)")]
    BranchCut { re: f64, im: f64 },

    #[error("series needed more than {shells} shells")]
    SlowConvergence { shells: usize },

    #[error("integral diverges: {0}")]
    DivergentIntegral(String),

    #[error("modulus {k} outside [0, 1) for {context}")]
    ModulusOutOfRange { k: f64, context: &'static str },

    #[error("no closed form for {0}")]
    UnsupportedCombination(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parameters outside the validity region of `{id}`: {reason}")]
    OutOfDomain { id: String, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
