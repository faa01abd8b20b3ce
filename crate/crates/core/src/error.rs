use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("no Shirshov factorization for words of length < 2")]
    NoShirshovFactorization,
    #[error("alphabet mismatch: letter of rank {0} is not in the alphabet")]
    AlphabetMismatch(u32),
    #[error("no leading word: polynomial is zero")]
    NoLeadingWord,
    #[error("no coproduct image for generator of rank {0}")]
    MissingDeltaImage(u32),
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("generator of degree 0 is not allowed")]
    DegreeZeroGenerator,
    #[error("beyond truncation: degree {degree} exceeds the certified bound {bound}")]
    BeyondTruncation { degree: u32, bound: u32 },
    #[error("subalgebra hypotheses not established: {0}")]
    HypothesesNotEstablished(String),
    #[error("tower requires finite Γ: {0}")]
    InfiniteGamma(String),
    #[error("derivation escapes the previous stage at step {step}: {detail}")]
    DerivationEscapes { step: usize, detail: String },
    #[error("`{0}` is not an irreducible Lyndon word")]
    NotIrreducibleLyndon(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
