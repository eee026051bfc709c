use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least {min}, got {n}")]
    StrandCount { n: usize, min: usize },

    #[error("band letter a({p},{q}) is invalid for {n} strands")]
    BandLetterOutOfRange { p: usize, q: usize, n: usize },

    #[error("Artin letter s{index} is invalid for {n} strands")]
    ArtinLetterOutOfRange { index: usize, n: usize },

    #[error("words live on different strand counts ({left} vs {right})")]
    StrandMismatch { left: usize, right: usize },

    #[error("delta({p},{q}) needs p <= q")]
    DeltaBounds { p: usize, q: usize },

    #[error("word does not right-divide the braid")]
    NotDivisible,

    #[error("the trivial braid has no last letter")]
    TrivialBraid,

    #[error("dangerous-braid indices must be weakly decreasing and within 1..={max}")]
    BadDangerousIndices { max: usize },

    #[error("handle reduction exceeded the length ceiling of {limit} letters")]
    ReductionOverflow { limit: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
