use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("neighbor shell {0} is not supported (only shells 1 and 2)")]
    UnsupportedShell(usize),

    #[error("dipole coupling is singular at zero separation")]
    ZeroSeparation,

    #[error("flat band: J1 + 4 J2 = 0, effective mass is infinite")]
    FlatBand,

    #[error("lattice of {sites} sites exceeds the dense diagonalization budget of {max}")]
    OracleBudget { sites: usize, max: usize },

    #[error("exciton and photon are degenerate and uncoupled (delta = 0, f = 0)")]
    DegenerateUncoupled,

    #[error("probe frequency {omega:e} rad/s sits on an undamped polariton pole")]
    PoleOnAxis { omega: f64 },

    #[error("no peaks found in spectrum")]
    NoPeaks,

    #[error("oracle mismatch: {what} residual {residual:e} exceeds tolerance {tolerance:e}")]
    OracleMismatch {
        what: String,
        residual: f64,
        tolerance: f64,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("config parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name: name.into(),
            reason: reason.into(),
        }
    }

    /// Process exit code for the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter { .. }
            | Error::Config(_)
            | Error::Parse(_)
            | Error::UnsupportedShell(_) => 2,
            Error::OracleMismatch { .. } => 4,
            Error::Io(_) => 1,
            _ => 3,
        }
    }
}
