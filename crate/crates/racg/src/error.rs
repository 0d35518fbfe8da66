use thiserror::Error;

/// Errors shared across the crate. Construction errors carry generator
/// names; algorithmic errors carry enough context to report partial
/// progress (the ball cap in particular must never truncate silently).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a presentation needs at least one generator")]
    NoGenerators,

    #[error("too many generators: {0} (limit {max})", max = crate::presentation::MAX_GENERATORS)]
    TooManyGenerators(usize),

    #[error("generator names must be nonempty")]
    EmptyGeneratorName,

    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("generator {0:?} paired with itself; commutation is between distinct generators")]
    SelfCommutation(String),

    #[error("subset {{{0}}} is not spherical (not a clique of the commutation graph)")]
    NotSpherical(String),

    #[error("step letter {letter:?} already lies in the current target set {{{set}}}")]
    StepLetterInTarget { letter: String, set: String },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("radius {radius} too small: this computation needs radius > {needed}")]
    RadiusTooSmall { radius: usize, needed: usize },

    #[error(
        "ball cap of {cap} elements exceeded while filling sphere {abandoned_radius} \
         ({elements} elements enumerated through radius {completed_radius})"
    )]
    BallCapExceeded {
        cap: usize,
        completed_radius: usize,
        abandoned_radius: usize,
        elements: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
