use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("orbit word is empty")]
    EmptyWord,

    #[error("invalid letter {0:?} in orbit word (expected 'x' or 'y')")]
    InvalidLetter(char),

    #[error("word {word} is a proper power of {root}")]
    NonPrimitive { word: String, root: String },

    #[error("malformed template {0:?} (expected \"m,n\" or \"~m,n\")")]
    InvalidTemplate(String),

    #[error("malformed braid: {0}")]
    InvalidBraid(String),

    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("braid has {strands} strands, over the budget of {budget}")]
    StrandBudgetExceeded { strands: usize, budget: usize },

    #[error("braid has {crossings} crossings, over the budget of {budget}")]
    CrossingBudgetExceeded { crossings: usize, budget: usize },

    #[error("braid mixes positive and negative generators")]
    MixedSigns,

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}
