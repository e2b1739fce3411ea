use alloc::string::String;

/// Errors raised by the library. Each variant names the contract that was
/// violated; the CLI maps them onto exit codes.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid braid token `{token}`: {reason}")]
    BraidParse { token: String, reason: &'static str },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("word does not end in a destabilizable letter")]
    NotDestabilizable,

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    #[error("quantum dimension {{N}} vanishes at this q; use the tangle scalar")]
    VanishingQuantumDimension,

    #[error("closure has {components} components, a knot is required")]
    NotAKnot { components: usize },

    #[error("argument lies on the branch cut [1, ∞)")]
    BranchCut,

    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),

    #[error("|u| = {modulus} is outside the supported region |u| <= {limit}")]
    OutsideSupportedRegion { modulus: f64, limit: f64 },

    #[error("branch tracking failed: {0}")]
    BranchTracking(&'static str),

    #[error("singular linear system: {0}")]
    Singular(&'static str),

    #[error("value at a pole: {0}")]
    Pole(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
