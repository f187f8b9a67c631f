//! Exact monotonicity decisions and the endpoint-derivative obstruction.
//!
//! A cubic Hermite piece is monotone exactly when its derivative (a
//! quadratic) keeps one sign on the piece, which endpoint checks plus one
//! interior vertex evaluation decide. On top of that decision this module
//! certifies an obstruction result: for qualifying nondecreasing data with
//! a midpoint overshoot on an interior piece far enough from both ends, no
//! choice of endpoint derivatives produces a monotone spline — the sweep
//! verifies that every candidate pair either breaks monotonicity of an end
//! piece or keeps at least a third of the original overshoot.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::DECAY_COEFFICIENT;
use crate::error::{Error, Result};
use crate::partition::{Partition, Slopes, SplineInput};
use crate::spline::{CubicSpline, HermitePiece};
use crate::tridiagonal::TridiagonalSystem;

/// Derivative values within `1e-12 * scale` of zero count as zero, so
/// roundoff at piece endpoints cannot flip a verdict.
pub const MONOTONICITY_TOLERANCE: f64 = 1e-12;

/// Monotonicity direction of interest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    NonDecreasing,
    NonIncreasing,
}

fn piece_scale(deriv_left: f64, deriv_right: f64, slope: f64) -> f64 {
    deriv_left
        .abs()
        .max(deriv_right.abs())
        .max(slope.abs())
        .max(1.0)
}

/// Sign-compatibility necessary condition for a monotone cubic Hermite
/// piece: neither endpoint derivative may oppose the secant slope, and a
/// flat piece (`slope = 0`) is monotone only when both derivatives vanish.
/// Values within the tolerance of zero count as zero.
pub fn fritsch_carlson_necessary(deriv_left: f64, deriv_right: f64, slope: f64) -> bool {
    let tol = MONOTONICITY_TOLERANCE * piece_scale(deriv_left, deriv_right, slope);
    let zero = |v: f64| v.abs() <= tol;
    if zero(slope) {
        zero(deriv_left) && zero(deriv_right)
    } else if slope > 0.0 {
        deriv_left >= -tol && deriv_right >= -tol
    } else {
        deriv_left <= tol && deriv_right <= tol
    }
}

/// Range of the piece derivative over the piece: both endpoint values
/// (exact by construction) plus the quadratic's vertex when it lies inside.
fn derivative_range(piece: &HermitePiece) -> (f64, f64) {
    let mut lo = piece.deriv_left().min(piece.deriv_right());
    let mut hi = piece.deriv_left().max(piece.deriv_right());
    let [_, _, c3, c4] = *piece.coefficients();
    let h = piece.width();
    // P'(t) = c2 + 2 c3 t + c4 (3 t^2 - 2 h t); vertex of the quadratic.
    if c4 != 0.0 {
        let vertex = (c4 * h - c3) / (3.0 * c4);
        if vertex > 0.0 && vertex < h {
            let v = piece.derivative_at(piece.left_knot() + vertex);
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    (lo, hi)
}

/// Exact monotonicity decision for one piece.
pub fn piece_is_monotone(piece: &HermitePiece, direction: Direction) -> bool {
    let tol =
        MONOTONICITY_TOLERANCE * piece_scale(piece.deriv_left(), piece.deriv_right(), piece.slope());
    let (lo, hi) = derivative_range(piece);
    // Nonincreasing is the mirrored check on the negated derivative range.
    match direction {
        Direction::NonDecreasing => lo >= -tol,
        Direction::NonIncreasing => hi <= tol,
    }
}

/// Whole-spline verdict with the first offending piece (1-based).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotoneVerdict {
    pub monotone: bool,
    pub first_offending_piece: Option<usize>,
}

pub fn spline_is_monotone(spline: &CubicSpline, direction: Direction) -> MonotoneVerdict {
    for (i, piece) in spline.pieces().iter().enumerate() {
        if !piece_is_monotone(piece, direction) {
            return MonotoneVerdict {
                monotone: false,
                first_offending_piece: Some(i + 1),
            };
        }
    }
    MonotoneVerdict {
        monotone: true,
        first_offending_piece: None,
    }
}

/// Constants of the obstruction analysis for a chosen interior piece.
///
/// When both end pieces of a spline on nondecreasing data are monotone,
/// the endpoint derivatives are confined to `[0, cap]` boxes; combined
/// with the inverse decay this keeps the midpoint overshoot of the chosen
/// piece above a third of its original value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionConstants {
    /// Chosen interior piece (1-based).
    pub piece: usize,
    /// Midpoint abscissa of that piece.
    pub midpoint: f64,
    /// Midpoint value minus the right-hand data value of the piece.
    pub overshoot: f64,
    /// Cap on the first interior derivative when both end pieces are
    /// monotone (interior part, before adding the secant term).
    pub interior_cap_left: f64,
    pub interior_cap_right: f64,
    /// Cap on the admissible left endpoint derivative.
    pub endpoint_cap_left: f64,
    /// Cap on the admissible right endpoint derivative.
    pub endpoint_cap_right: f64,
    /// `overshoot / (8 * endpoint_cap_left * lambda_1)`; `None` when the
    /// cap is not positive.
    pub radius_left: Option<f64>,
    /// `overshoot / (8 * mu_{n-2} * endpoint_cap_right)`.
    pub radius_right: Option<f64>,
}

/// Computes the obstruction constants. The interior caps come from one
/// tridiagonal solve against the boundary-free right-hand side, which is
/// exactly the first/last inverse row applied to that vector.
pub fn obstruction_constants(input: &SplineInput, piece: usize) -> Result<ObstructionConstants> {
    let n = input.len();
    if n < 5 {
        return Err(Error::TooFewKnotsForObstruction { n, min: 5 });
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenKnotCount { n });
    }
    if let Some(w) = input
        .values()
        .windows(2)
        .position(|w| w[1] < w[0])
    {
        return Err(Error::DecreasingData { index: w + 1 });
    }
    if piece == 0 || piece > n - 1 {
        return Err(Error::PieceIndexOutOfRange {
            index: piece,
            pieces: n - 1,
        });
    }

    let slopes = Slopes::compute(input);
    let system = TridiagonalSystem::assemble(input, &slopes);
    let dim = system.dimension();
    let free = system.boundary_free_rhs(&slopes);
    let caps = system.solve_with(&free);
    let interior_cap_left = caps[0];
    let interior_cap_right = caps[dim - 1];
    let m = slopes.slopes();
    let endpoint_cap_left = interior_cap_left + 4.0 * m[0];
    let endpoint_cap_right = interior_cap_right + 4.0 * m[n - 2];

    let spline = CubicSpline::build(input);
    let hermite = spline.piece(piece)?;
    let overshoot = hermite.midpoint_value() - input.values()[piece];
    let midpoint = 0.5 * (hermite.left_knot() + hermite.right_knot());

    let lambda_first = system.lambda()[0];
    let mu_last = system.mu()[dim - 1];
    let radius_left = (endpoint_cap_left > 0.0)
        .then(|| overshoot / (8.0 * endpoint_cap_left * lambda_first));
    let radius_right =
        (endpoint_cap_right > 0.0).then(|| overshoot / (8.0 * mu_last * endpoint_cap_right));

    Ok(ObstructionConstants {
        piece,
        midpoint,
        overshoot,
        interior_cap_left,
        interior_cap_right,
        endpoint_cap_left,
        endpoint_cap_right,
        radius_left,
        radius_right,
    })
}

/// Per-condition breakdown of the obstruction hypotheses.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionHypotheses {
    pub knot_count: usize,
    pub piece: usize,
    pub odd_knot_count: bool,
    pub data_nondecreasing: bool,
    pub first_piece_monotone: bool,
    pub last_piece_monotone: bool,
    pub caps_positive: bool,
    pub overshoot_positive: bool,
    /// Admissible half-open window `[lo, hi)` for the chosen piece,
    /// derived from the decay radii; `None` when undefined.
    pub window: Option<(f64, f64)>,
    pub piece_in_window: bool,
    /// The window's lower edge admits piece 1; flagged because the
    /// pair-difference bound is only claimed from piece 2 on.
    pub piece_at_window_floor: bool,
    pub all_met: bool,
    pub constants: Option<ObstructionConstants>,
}

/// Evaluates every hypothesis of the obstruction analysis; failures are
/// reported, not thrown.
pub fn obstruction_hypotheses(input: &SplineInput, piece: usize) -> Result<ObstructionHypotheses> {
    let n = input.len();
    if n < 5 {
        return Err(Error::TooFewKnotsForObstruction { n, min: 5 });
    }
    if piece == 0 || piece > n - 1 {
        return Err(Error::PieceIndexOutOfRange {
            index: piece,
            pieces: n - 1,
        });
    }

    let odd_knot_count = n % 2 == 1;
    let data_nondecreasing = input.values_nondecreasing();

    let spline = CubicSpline::build(input);
    let first_piece_monotone =
        piece_is_monotone(&spline.pieces()[0], Direction::NonDecreasing);
    let last_piece_monotone =
        piece_is_monotone(&spline.pieces()[n - 2], Direction::NonDecreasing);

    let constants = if odd_knot_count && data_nondecreasing {
        Some(obstruction_constants(input, piece)?)
    } else {
        None
    };

    let (caps_positive, overshoot_positive, window) = match &constants {
        Some(c) => {
            let caps = c.endpoint_cap_left > 0.0 && c.endpoint_cap_right > 0.0;
            let over = c.overshoot > 0.0;
            let window = match (c.radius_left, c.radius_right) {
                (Some(r1), Some(rn)) if r1 > 0.0 && rn > 0.0 => {
                    let lo = 1.0f64.max(1.0 - r1.log2());
                    let hi = ((n - 2) as f64).min((n - 3) as f64 + rn.log2());
                    Some((lo, hi))
                }
                _ => None,
            };
            (caps, over, window)
        }
        None => (false, false, None),
    };

    let piece_in_window =
        window.is_some_and(|(lo, hi)| (piece as f64) >= lo && (piece as f64) < hi);
    let piece_at_window_floor = piece_in_window && piece == 1;
    let all_met = odd_knot_count
        && data_nondecreasing
        && first_piece_monotone
        && last_piece_monotone
        && caps_positive
        && overshoot_positive
        && piece_in_window;

    Ok(ObstructionHypotheses {
        knot_count: n,
        piece,
        odd_knot_count,
        data_nondecreasing,
        first_piece_monotone,
        last_piece_monotone,
        caps_positive,
        overshoot_positive,
        window,
        piece_in_window,
        piece_at_window_floor,
        all_met,
        constants,
    })
}

/// Aggregate result of the endpoint-derivative sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub resolution: usize,
    pub interior_pairs: usize,
    pub exterior_pairs: usize,
    pub pairs_total: usize,
    /// Pairs whose whole spline is monotone; the obstruction says zero.
    pub monotone_pairs: usize,
    /// Pairs whose first and last pieces are both monotone.
    pub end_monotone_pairs: usize,
    /// Smallest midpoint overshoot among end-monotone pairs.
    pub min_end_monotone_overshoot: Option<f64>,
    /// Overshoot threshold `overshoot/3 - 1e-9 (1 + |overshoot|)`.
    pub overshoot_floor: f64,
    /// End-monotone pairs outside the `[0, cap]` boxes (must be zero).
    pub cap_violations: usize,
    /// End-monotone pairs whose overshoot fell below the floor.
    pub disjunction_failures: usize,
}

/// Full obstruction report: hypotheses plus sweep evidence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub hypotheses: ObstructionHypotheses,
    pub sweep: SweepSummary,
    pub verified: bool,
}

const CAP_SLACK: f64 = 1e-9;

/// Sweeps candidate endpoint-derivative pairs over the admissible box
/// `[0, cap_left] x [0, cap_right]` (a `resolution^2` grid with the
/// original derivatives inserted on each axis) plus `4 * resolution`
/// probes outside the box (negative values and values above the caps).
/// Every pair must yield a non-monotone spline, and every end-monotone
/// pair must keep the midpoint overshoot above a third of the original.
pub fn obstruction_sweep(
    input: &SplineInput,
    piece: usize,
    resolution: usize,
) -> Result<ObstructionReport> {
    let hypotheses = obstruction_hypotheses(input, piece)?;
    if !hypotheses.all_met {
        return Err(Error::HypothesesNotMet {
            reason: describe_failures(&hypotheses),
        });
    }
    let constants = hypotheses.constants.clone().expect("all_met implies constants");
    let resolution = resolution.max(2);
    let n = input.len();
    let cap_left = constants.endpoint_cap_left;
    let cap_right = constants.endpoint_cap_right;
    let overshoot = constants.overshoot;
    let overshoot_floor = overshoot / 3.0 - 1e-9 * (1.0 + overshoot.abs());
    let right_value = input.values()[piece];

    let mut axis_left: Vec<f64> = (0..resolution)
        .map(|k| cap_left * k as f64 / (resolution - 1) as f64)
        .collect();
    let mut axis_right: Vec<f64> = (0..resolution)
        .map(|k| cap_right * k as f64 / (resolution - 1) as f64)
        .collect();
    insert_sorted(&mut axis_left, input.left_derivative().clamp(0.0, cap_left));
    insert_sorted(
        &mut axis_right,
        input.right_derivative().clamp(0.0, cap_right),
    );

    let mut pairs: Vec<(f64, f64)> =
        Vec::with_capacity(axis_left.len() * axis_right.len() + 4 * resolution);
    for &dl in &axis_left {
        for &dr in &axis_right {
            pairs.push((dl, dr));
        }
    }
    let interior_pairs = pairs.len();
    for k in 0..resolution {
        let t = (k + 1) as f64 / resolution as f64;
        pairs.push((-t * (cap_left + 1.0), input.right_derivative()));
        pairs.push((cap_left + t * (cap_left + 1.0), input.right_derivative()));
        pairs.push((input.left_derivative(), -t * (cap_right + 1.0)));
        pairs.push((input.left_derivative(), cap_right + t * (cap_right + 1.0)));
    }
    let exterior_pairs = pairs.len() - interior_pairs;

    let mut monotone_pairs = 0;
    let mut end_monotone_pairs = 0;
    let mut min_end_monotone_overshoot: Option<f64> = None;
    let mut cap_violations = 0;
    let mut disjunction_failures = 0;

    for &(dl, dr) in &pairs {
        let candidate = input.with_endpoint_derivatives(dl, dr)?;
        let spline = CubicSpline::build(&candidate);
        let first_ok = piece_is_monotone(&spline.pieces()[0], Direction::NonDecreasing);
        let last_ok = piece_is_monotone(&spline.pieces()[n - 2], Direction::NonDecreasing);
        if first_ok && last_ok {
            end_monotone_pairs += 1;
            let over = spline.piece(piece)?.midpoint_value() - right_value;
            min_end_monotone_overshoot = Some(match min_end_monotone_overshoot {
                Some(v) => v.min(over),
                None => over,
            });
            let in_box = (-CAP_SLACK..=cap_left + CAP_SLACK).contains(&dl)
                && (-CAP_SLACK..=cap_right + CAP_SLACK).contains(&dr);
            if !in_box {
                cap_violations += 1;
            }
            if over < overshoot_floor {
                disjunction_failures += 1;
            }
        }
        if spline_is_monotone(&spline, Direction::NonDecreasing).monotone {
            monotone_pairs += 1;
        }
    }

    let sweep = SweepSummary {
        resolution,
        interior_pairs,
        exterior_pairs,
        pairs_total: pairs.len(),
        monotone_pairs,
        end_monotone_pairs,
        min_end_monotone_overshoot,
        overshoot_floor,
        cap_violations,
        disjunction_failures,
    };
    let verified =
        monotone_pairs == 0 && disjunction_failures == 0 && cap_violations == 0;
    Ok(ObstructionReport {
        hypotheses,
        sweep,
        verified,
    })
}

fn insert_sorted(axis: &mut Vec<f64>, value: f64) {
    if !axis.contains(&value) {
        axis.push(value);
        axis.sort_by(f64::total_cmp);
    }
}

fn describe_failures(h: &ObstructionHypotheses) -> String {
    let mut reasons = Vec::new();
    if !h.odd_knot_count {
        reasons.push("knot count is even".to_string());
    }
    if !h.data_nondecreasing {
        reasons.push("data is not nondecreasing".to_string());
    }
    if !h.first_piece_monotone {
        reasons.push("first piece is not monotone".to_string());
    }
    if !h.last_piece_monotone {
        reasons.push("last piece is not monotone".to_string());
    }
    if !h.caps_positive {
        reasons.push("an endpoint cap is not positive".to_string());
    }
    if !h.overshoot_positive {
        reasons.push("midpoint overshoot is not positive".to_string());
    }
    if !h.piece_in_window {
        match h.window {
            Some((lo, hi)) => reasons.push(format!(
                "piece {} outside the admissible window [{lo:.6}, {hi:.6})",
                h.piece
            )),
            None => reasons.push("admissible window is undefined".to_string()),
        }
    }
    reasons.join("; ")
}

/// Result of the randomized hunt for a qualifying instance.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum SearchOutcome {
    Found {
        input: SplineInput,
        piece: usize,
        hypotheses: ObstructionHypotheses,
        attempts_used: usize,
    },
    Exhausted {
        attempts: usize,
    },
}

/// Randomized search for nondecreasing data on which the obstruction
/// hypotheses hold: spacings are drawn log-uniformly across decades and
/// the values form flat runs around one steep jump, with gentle increases
/// at both ends and endpoint derivatives clamped to zero. Exhausting the
/// attempt budget is an explicit outcome, not an error.
pub fn search_obstruction(n: usize, seed: u64, attempts: usize) -> Result<SearchOutcome> {
    if n < 7 {
        return Err(Error::TooFewKnotsForObstruction { n, min: 7 });
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenKnotCount { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pow10 = |r: &mut ChaCha8Rng, lo: f64, hi: f64| 10.0f64.powf(r.random_range(lo..hi));
    for attempt in 0..attempts {
        let mut knots = Vec::with_capacity(n);
        knots.push(0.0);
        for _ in 0..n - 1 {
            let h = pow10(&mut rng, -1.5, 1.0);
            knots.push(knots.last().unwrap() + h);
        }
        let jump_piece = rng.random_range(1..n - 2);
        let mut increments = vec![0.0; n - 1];
        increments[jump_piece] = pow10(&mut rng, -0.5, 1.0);
        increments[0] = pow10(&mut rng, -3.0, -0.5);
        increments[n - 2] = pow10(&mut rng, -3.0, -0.5);
        for (j, inc) in increments.iter_mut().enumerate().take(n - 2).skip(1) {
            if j != jump_piece && rng.random::<f64>() < 0.3 {
                *inc = pow10(&mut rng, -4.0, -1.5);
            }
        }
        let mut values = Vec::with_capacity(n);
        values.push(0.0);
        for inc in &increments {
            values.push(values.last().unwrap() + inc);
        }
        let partition = Partition::new(knots)?;
        let input = SplineInput::new(partition, values, 0.0, 0.0)?;
        for piece in 1..=n - 3 {
            let hypotheses = obstruction_hypotheses(&input, piece)?;
            if hypotheses.all_met {
                return Ok(SearchOutcome::Found {
                    input,
                    piece,
                    hypotheses,
                    attempts_used: attempt + 1,
                });
            }
        }
    }
    Ok(SearchOutcome::Exhausted { attempts })
}

/// Numeric form of the window arithmetic: a piece index admitted by the
/// window's lower edge forces the decay bound at that offset below
/// `overshoot / (12 * lambda_1 * cap_left)`.
pub fn window_floor_implication(
    constants: &ObstructionConstants,
    lambda_first: f64,
    piece: usize,
) -> Option<(f64, f64)> {
    let r1 = constants.radius_left?;
    if r1 <= 0.0 || (piece as f64) < 1.0 - r1.log2() {
        return None;
    }
    let decay = DECAY_COEFFICIENT * (-(piece as f64 - 1.0)).exp2();
    let limit = constants.overshoot / (12.0 * lambda_first * constants.endpoint_cap_left);
    Some((decay, limit))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_condition_cases() {
        assert!(fritsch_carlson_necessary(1.0, 1.0, 1.0));
        assert!(!fritsch_carlson_necessary(-1.0, 1.0, 1.0));
        assert!(fritsch_carlson_necessary(0.0, 0.0, 0.0));
        // Flat piece with a nonzero derivative cannot be monotone.
        assert!(!fritsch_carlson_necessary(0.5, 0.0, 0.0));
        // A zero endpoint derivative does not oppose a rising secant.
        assert!(fritsch_carlson_necessary(0.0, 0.0, 1.0));
        assert!(fritsch_carlson_necessary(0.0, 2.0, 1.0));
        // Mirror case for decreasing data.
        assert!(fritsch_carlson_necessary(-1.0, 0.0, -2.0));
        assert!(!fritsch_carlson_necessary(1.0, -1.0, -1.0));
    }

    #[test]
    fn smoothstep_piece_is_monotone() {
        let piece = HermitePiece::new(0.0, 1.0, 0.0, 1.0, 0.0, 0.0);
        assert!(piece_is_monotone(&piece, Direction::NonDecreasing));
        assert!(!piece_is_monotone(&piece, Direction::NonIncreasing));
    }

    #[test]
    fn steep_end_derivatives_break_monotonicity() {
        // Equal end derivatives four times the secant overshoot in between.
        let piece = HermitePiece::new(0.0, 1.0, 0.0, 1.0, 4.0, 4.0);
        assert!(!piece_is_monotone(&piece, Direction::NonDecreasing));
    }

    #[test]
    fn linear_piece_is_monotone() {
        let piece = HermitePiece::new(0.0, 2.0, 1.0, 5.0, 2.0, 2.0);
        assert!(piece_is_monotone(&piece, Direction::NonDecreasing));
    }

    #[test]
    fn decreasing_mirror() {
        let piece = HermitePiece::new(0.0, 1.0, 1.0, 0.0, 0.0, 0.0);
        assert!(piece_is_monotone(&piece, Direction::NonIncreasing));
        assert!(!piece_is_monotone(&piece, Direction::NonDecreasing));
    }

    #[test]
    fn spline_verdict_reports_first_offender() {
        let input = SplineInput::from_data(
            (0..7).map(|i| i as f64).collect(),
            vec![0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0],
            0.0,
            0.0,
        )
        .unwrap();
        let spline = CubicSpline::build(&input);
        let verdict = spline_is_monotone(&spline, Direction::NonDecreasing);
        assert!(!verdict.monotone);
        assert!(verdict.first_offending_piece.is_some());

        let linear = SplineInput::from_data(
            (0..5).map(|i| i as f64).collect(),
            (0..5).map(|i| 2.0 * i as f64).collect(),
            2.0,
            2.0,
        )
        .unwrap();
        let verdict = spline_is_monotone(&CubicSpline::build(&linear), Direction::NonDecreasing);
        assert!(verdict.monotone);
        assert_eq!(verdict.first_offending_piece, None);
    }

    #[test]
    fn constants_reject_structural_misuse() {
        let even = SplineInput::from_data(
            (0..6).map(|i| i as f64).collect(),
            vec![0.0; 6],
            0.0,
            0.0,
        )
        .unwrap();
        assert!(matches!(
            obstruction_constants(&even, 2),
            Err(Error::EvenKnotCount { n: 6 })
        ));

        let small = SplineInput::from_data(vec![0.0, 1.0, 2.0], vec![0.0; 3], 0.0, 0.0).unwrap();
        assert!(matches!(
            obstruction_constants(&small, 1),
            Err(Error::TooFewKnotsForObstruction { .. })
        ));

        let decreasing = SplineInput::from_data(
            (0..5).map(|i| i as f64).collect(),
            vec![0.0, 1.0, 0.5, 2.0, 3.0],
            0.0,
            0.0,
        )
        .unwrap();
        assert!(matches!(
            obstruction_constants(&decreasing, 2),
            Err(Error::DecreasingData { index: 2 })
        ));
    }

    #[test]
    fn monotone_spline_has_no_positive_overshoot() {
        // Strictly increasing smooth data: the spline stays monotone and
        // every interior piece undershoots its right value at the midpoint.
        let knots: Vec<f64> = (0..7).map(|i| i as f64).collect();
        let values = knots.clone();
        let input = SplineInput::from_data(knots, values, 1.0, 1.0).unwrap();
        for piece in 1..=4 {
            let h = obstruction_hypotheses(&input, piece).unwrap();
            assert!(!h.overshoot_positive, "piece {piece}");
            assert!(!h.all_met);
        }
    }

    #[test]
    fn search_rejects_even_or_tiny_sizes() {
        assert!(matches!(
            search_obstruction(8, 1, 10),
            Err(Error::EvenKnotCount { n: 8 })
        ));
        assert!(matches!(
            search_obstruction(5, 1, 10),
            Err(Error::TooFewKnotsForObstruction { .. })
        ));
    }

    #[test]
    fn linear_data_is_never_accepted_by_the_search_filter() {
        let input = SplineInput::from_data(
            (0..7).map(|i| i as f64).collect(),
            (0..7).map(|i| i as f64).collect(),
            0.0,
            0.0,
        )
        .unwrap();
        for piece in 1..=4 {
            assert!(!obstruction_hypotheses(&input, piece).unwrap().all_met);
        }
    }
}
