use thiserror::Error;

/// Errors reported by spline construction, evaluation and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Fewer than three knots: the interior derivative system is empty and
    /// the interpolant is not defined by this construction.
    #[error("at least 3 knots are required, got {n}")]
    TooFewKnots { n: usize },

    /// Knots must be strictly increasing; `index` is the first offender
    /// (0-based position of the knot that is not greater than its
    /// predecessor).
    #[error("knots must be strictly increasing: knots[{index}] = {value} does not exceed knots[{}] = {previous}", index - 1)]
    NonIncreasingKnots {
        index: usize,
        value: f64,
        previous: f64,
    },

    /// A knot, value or derivative is NaN or infinite.
    #[error("non-finite {what} at index {index}")]
    NonFinite { what: &'static str, index: usize },

    /// Value count does not match knot count.
    #[error("got {values} values for {knots} knots")]
    LengthMismatch { knots: usize, values: usize },

    /// Evaluation point outside the interpolation interval.
    #[error("x = {x} is outside the spline domain [{min}, {max}]")]
    OutOfDomain { x: f64, min: f64, max: f64 },

    /// Piece index outside `1..=pieces` (pieces are numbered from 1).
    #[error("piece index {index} out of range 1..={pieces}")]
    PieceIndexOutOfRange { index: usize, pieces: usize },

    /// The pair-difference bound is only claimed on interior pieces
    /// `2..=n-2`; requesting it on the first or last piece is an error.
    #[error("no bound is claimed on piece {piece}; claimed range is 2..={last_claimed}")]
    BoundNotClaimed { piece: usize, last_claimed: usize },

    /// The decay window requires a mesh width below one.
    #[error("max spacing must be < 1 for the decay window, got {max_spacing}")]
    MaxSpacingNotBelowOne { max_spacing: f64 },

    /// The decay window requires a positive exponent.
    #[error("decay exponent must be positive, got {p}")]
    NonPositiveExponent { p: f64 },

    /// Obstruction analysis needs an odd number of knots.
    #[error("obstruction analysis requires an odd number of knots, got {n}")]
    EvenKnotCount { n: usize },

    /// Obstruction analysis needs at least 5 knots so the interior cap sums
    /// are well-formed; the randomized search asks for at least 7.
    #[error("obstruction analysis requires at least {min} knots, got {n}")]
    TooFewKnotsForObstruction { n: usize, min: usize },

    /// Obstruction analysis is stated for nondecreasing data.
    #[error("obstruction analysis requires nondecreasing values: values[{index}] decreases")]
    DecreasingData { index: usize },

    /// The endpoint-derivative sweep requires the hypotheses to hold first.
    #[error("obstruction hypotheses not met: {reason}")]
    HypothesesNotMet { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
