use thiserror::Error;

use crate::module::Uniserial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not an admissible sequence: {0}")]
    Kupisch(String),

    #[error("{0} is not a module over this algebra")]
    InvalidModule(Uniserial),

    #[error("{0} is projective and has no Auslander-Reiten translate")]
    ProjectiveHasNoTau(Uniserial),

    #[error("{0} is injective and has no inverse Auslander-Reiten translate")]
    InjectiveHasNoTauInverse(Uniserial),

    #[error("maps are not composable: target {0} differs from source {1}")]
    NotComposable(Uniserial, Uniserial),

    #[error("module sum is not basic: {0} occurs more than once")]
    NotBasic(Uniserial),

    #[error("module is not a generator-cogenerator: missing {0}")]
    NotGeneratorCogenerator(Uniserial),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resolution cap must be positive")]
    ZeroCap,

    #[error("resolution did not terminate within {0} steps")]
    CapExceeded(usize),

    #[error("invalid structure-constant data: {0}")]
    Structure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
