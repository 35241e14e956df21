use thiserror::Error;

/// Errors produced by poset construction and the dynamical operators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("element index {index} out of range for a poset on {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("self-loop on element {0}")]
    SelfLoop(usize),

    #[error("relation contains a cycle")]
    CycleDetected,

    #[error("subset is not an order ideal")]
    NotAnIdeal,

    #[error("subset is not autonomous")]
    NotAutonomous,

    #[error("poset is not graded")]
    NotGraded,

    #[error("label {label} outside 1..={q}")]
    LabelOutOfRange { label: i64, q: usize },

    #[error("labels are not strictly increasing along cover {lower} < {upper}")]
    NotIncreasing { lower: usize, upper: usize },

    #[error("wrong number of labels: got {got}, poset has {expected} elements")]
    LabelCountMismatch { got: usize, expected: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("tableau is not symmetric at coordinates ({x},{y})")]
    NotSymmetric { x: usize, y: usize },

    #[error("content vector has {ones} set bits but the packed tableau uses {expected} labels")]
    ContentMismatch { ones: usize, expected: usize },

    #[error("content vector of length {len} does not match height {q}")]
    ContentLengthMismatch { len: usize, q: usize },

    #[error("rotation period inconsistent: l={l}, d={d}, q={q} with l*d not divisible by q")]
    NonIntegralRotation { l: usize, d: usize, q: usize },

    #[error("poset admits no order-reversing involution")]
    NoAntiInvolution,

    #[error("anti-automorphism does not act on this poset")]
    AutomorphismMismatch,

    #[error("evacuation produced a non-increasing labeling; this is an internal invariant violation")]
    EvacuationInconsistent,

    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: u64 },

    #[error("orbit iteration cap of {0} exceeded")]
    OrbitCapExceeded(u64),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("unknown poset spec '{0}'")]
    UnknownSpec(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
