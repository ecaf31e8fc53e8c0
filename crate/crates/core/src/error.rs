use thiserror::Error;

/// Errors surfaced by the library. Shape violations that can only arise from
/// malformed input data are reported here; violations of internal call
/// contracts (e.g. multiplying incompatible matrices) panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error(
        "matrix does not define a morphism: relation {relation} of the source is not respected"
    )]
    IllDefinedMorphism { relation: usize },

    #[error("first arrow is not a monomorphism")]
    NotMono,

    #[error("last arrow is not an epimorphism")]
    NotEpi,

    #[error("sequence is not exact at middle object {0} (1-based)")]
    NotExactAt(usize),

    #[error("sequence ends do not match: {0}")]
    EndMismatch(String),

    #[error("sequence lengths do not match: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    #[error("internal consistency check failed (this is a bug): {0}")]
    InternalConsistency(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
