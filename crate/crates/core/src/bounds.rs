//! Certified bounds on the boundary sensitivity of the spline.
//!
//! The interior-derivative matrix has a geometrically decaying inverse:
//! entries alternate in sign and satisfy
//! `|inv[i][j]| <= (2/3) * 2^{-|i-j|}` (a Kershaw-type bound). This module
//! certifies that decay numerically, propagates it into a per-piece bound
//! on the distance between two splines that interpolate the same data with
//! different endpoint derivatives, and runs the grid-refinement study that
//! measures how boundary perturbations fade away from the ends.

use crate::error::{Error, Result};
use crate::partition::SplineInput;
use crate::spline::CubicSpline;
use crate::tridiagonal::TridiagonalSystem;

/// Magnitude coefficient of the inverse-decay bound.
pub const DECAY_COEFFICIENT: f64 = 2.0 / 3.0;

/// First and last columns of the inverse of the interior-derivative matrix.
///
/// These are the only inverse entries the perturbation identity needs:
/// changing the endpoint derivatives only changes the first and last
/// right-hand side entries.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseColumns {
    first: Vec<f64>,
    last: Vec<f64>,
}

impl InverseColumns {
    /// Column `inv * e_1` (entries `inv[i][1]`, 1-based `i`).
    pub fn first(&self) -> &[f64] {
        &self.first
    }

    /// Column `inv * e_{n-2}`.
    pub fn last(&self) -> &[f64] {
        &self.last
    }

    pub fn dimension(&self) -> usize {
        self.first.len()
    }
}

/// Computes the first and last inverse columns with two tridiagonal solves
/// against unit right-hand sides.
pub fn inverse_columns(system: &TridiagonalSystem) -> InverseColumns {
    let dim = system.dimension();
    let mut e = vec![0.0; dim];
    e[0] = 1.0;
    let first = system.solve_with(&e);
    e[0] = 0.0;
    e[dim - 1] = 1.0;
    let last = system.solve_with(&e);
    InverseColumns { first, last }
}

/// Outcome of checking sign alternation and geometric decay of every
/// inverse entry.
#[derive(Debug, Clone, PartialEq)]
pub struct KershawReport {
    pub dimension: usize,
    pub entries_checked: usize,
    pub sign_violations: usize,
    pub magnitude_violations: usize,
    /// Smallest relative slack `(bound - value) / bound` over all entries;
    /// negative values mean the magnitude bound was exceeded.
    pub tightest_margin: f64,
    pub tightest_entry: (usize, usize),
    pub passed: bool,
}

/// Relative slack allowed before a magnitude excess counts as a violation.
const KERSHAW_TOLERANCE: f64 = 1e-12;

/// Certifies `0 < (-1)^{i-j} inv[i][j] <= (2/3) * 2^{-|i-j|}` for every
/// entry of the inverse, computed column by column (one tridiagonal solve
/// per column).
pub fn certify_kershaw(system: &TridiagonalSystem) -> KershawReport {
    let dim = system.dimension();
    let mut rhs = vec![0.0; dim];
    let mut sign_violations = 0;
    let mut magnitude_violations = 0;
    let mut tightest_margin = f64::INFINITY;
    let mut tightest_entry = (1, 1);
    for j in 0..dim {
        rhs[j] = 1.0;
        let column = system.solve_with(&rhs);
        rhs[j] = 0.0;
        for (i, &entry) in column.iter().enumerate() {
            let offset = i.abs_diff(j);
            let signed = if offset % 2 == 0 { entry } else { -entry };
            let bound = DECAY_COEFFICIENT * (-(offset as f64)).exp2();
            if signed <= 0.0 {
                sign_violations += 1;
            }
            if signed > bound * (1.0 + KERSHAW_TOLERANCE) {
                magnitude_violations += 1;
            }
            let margin = (bound - signed) / bound;
            if margin < tightest_margin {
                tightest_margin = margin;
                tightest_entry = (i + 1, j + 1);
            }
        }
    }
    KershawReport {
        dimension: dim,
        entries_checked: dim * dim,
        sign_violations,
        magnitude_violations,
        tightest_margin,
        tightest_entry,
        passed: sign_violations == 0 && magnitude_violations == 0,
    }
}

/// Analytic differences `d_i - d~_i` (original minus perturbed interior
/// derivatives, `i = 2..=n-1`) caused by changing the endpoint derivatives
/// by `delta_left` and `delta_right`.
///
/// Only the first and last right-hand side entries change, by
/// `lambda_1 * delta_left` and `mu_{n-2} * delta_right`, so the difference
/// is a combination of the first and last inverse columns.
pub fn derivative_perturbation(
    system: &TridiagonalSystem,
    delta_left: f64,
    delta_right: f64,
) -> Vec<f64> {
    let columns = inverse_columns(system);
    let dim = system.dimension();
    let lambda_first = system.lambda()[0];
    let mu_last = system.mu()[dim - 1];
    (0..dim)
        .map(|k| {
            columns.first()[k] * lambda_first * delta_left
                + columns.last()[k] * mu_last * delta_right
        })
        .collect()
}

/// Per-piece bound on `|P_i(x) - P~_i(x)|` for two splines differing only
/// in the endpoint derivatives, claimed on the interior pieces `2..=n-2`:
///
/// `8 h_i (2^{-i} lambda_1 |delta_left| + mu_{n-2} 2^{i-n} |delta_right|)`
#[derive(Debug, Clone, PartialEq)]
pub struct PairDifferenceBound {
    knot_count: usize,
    bounds: Vec<f64>,
}

impl PairDifferenceBound {
    /// First piece the bound is claimed for.
    pub const FIRST_CLAIMED: usize = 2;

    /// Bounds for pieces `2..=n-2` in order; empty when `n = 3`.
    pub fn bounds(&self) -> &[f64] {
        &self.bounds
    }

    /// Last claimed piece, `n - 2`.
    pub fn last_claimed(&self) -> usize {
        self.knot_count - 2
    }

    /// Bound for the 1-based piece `i`; the first and last pieces carry no
    /// claim and are rejected.
    pub fn piece_bound(&self, piece: usize) -> Result<f64> {
        if piece < Self::FIRST_CLAIMED || piece > self.last_claimed() {
            return Err(Error::BoundNotClaimed {
                piece,
                last_claimed: self.last_claimed(),
            });
        }
        Ok(self.bounds[piece - Self::FIRST_CLAIMED])
    }
}

/// Evaluates the pair-difference bound for endpoint-derivative changes
/// `delta_left`, `delta_right` on the interior pieces of `input`'s grid.
pub fn pair_difference_bound(
    input: &SplineInput,
    delta_left: f64,
    delta_right: f64,
) -> PairDifferenceBound {
    let n = input.len();
    let spacings = input.partition().spacings();
    let lambda_first = spacings[1] / (spacings[0] + spacings[1]);
    let mu_last = spacings[n - 3] / (spacings[n - 3] + spacings[n - 2]);
    let bounds = (2..=n.saturating_sub(2))
        .map(|i| {
            let h = spacings[i - 1];
            8.0 * h
                * ((-(i as f64)).exp2() * lambda_first * delta_left.abs()
                    + mu_last * (i as f64 - n as f64).exp2() * delta_right.abs())
        })
        .collect();
    PairDifferenceBound {
        knot_count: n,
        bounds,
    }
}

/// One interior piece of a pair-bound certification.
#[derive(Debug, Clone, PartialEq)]
pub struct PairBoundRow {
    pub piece: usize,
    pub bound: f64,
    pub measured: f64,
}

/// Dense-sampling certification of the pair-difference bound.
#[derive(Debug, Clone, PartialEq)]
pub struct PairBoundReport {
    pub rows: Vec<PairBoundRow>,
    /// Largest `measured - bound` over the claimed pieces (negative when
    /// every piece respects its bound).
    pub worst_excess: f64,
    pub passed: bool,
}

/// Builds both splines, samples `|P - P~|` on every claimed piece with
/// `samples_per_piece` equispaced points, and compares against the bound.
pub fn certify_pair_bound(
    input: &SplineInput,
    delta_left: f64,
    delta_right: f64,
    samples_per_piece: usize,
) -> Result<PairBoundReport> {
    let samples = samples_per_piece.max(2);
    let bound = pair_difference_bound(input, delta_left, delta_right);
    let perturbed = input.with_endpoint_derivatives(
        input.left_derivative() + delta_left,
        input.right_derivative() + delta_right,
    )?;
    let original = CubicSpline::build(input);
    let changed = CubicSpline::build(&perturbed);

    let mut rows = Vec::with_capacity(bound.bounds().len());
    let mut worst_excess = f64::NEG_INFINITY;
    for piece in PairDifferenceBound::FIRST_CLAIMED..=bound.last_claimed() {
        let a = original.piece(piece)?;
        let b = changed.piece(piece)?;
        let (x0, x1) = (a.left_knot(), a.right_knot());
        let mut measured = 0.0f64;
        for k in 0..samples {
            let x = x0 + (x1 - x0) * k as f64 / (samples - 1) as f64;
            measured = measured.max((a.value_at(x) - b.value_at(x)).abs());
        }
        let bound_value = bound.piece_bound(piece)?;
        worst_excess = worst_excess.max(measured - bound_value);
        rows.push(PairBoundRow {
            piece,
            bound: bound_value,
            measured,
        });
    }
    let passed = rows.iter().all(|r| r.measured <= r.bound);
    if rows.is_empty() {
        worst_excess = 0.0;
    }
    Ok(PairBoundReport {
        rows,
        worst_excess,
        passed,
    })
}

/// Window of piece indices far enough from both ends that a boundary
/// perturbation has decayed below `max_spacing^p`:
/// `{ i : -p log2(max_spacing) < i < n + p log2(max_spacing) }`.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexWindow {
    p: f64,
    max_spacing: f64,
    range: Option<(usize, usize)>,
}

impl IndexWindow {
    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn max_spacing(&self) -> f64 {
        self.max_spacing
    }

    /// Inclusive index range, or `None` when the window is empty.
    pub fn range(&self) -> Option<(usize, usize)> {
        self.range
    }

    pub fn is_empty(&self) -> bool {
        self.range.is_none()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.range.is_some_and(|(lo, hi)| lo <= i && i <= hi)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        let (lo, hi) = self.range.unwrap_or((1, 0));
        lo..=hi
    }
}

/// Computes the decay window for `n` knots. The strict inequalities keep
/// boundary indices that land exactly on the cutoff out of the window.
/// An empty window is a legal result.
pub fn interior_window(n: usize, max_spacing: f64, p: f64) -> Result<IndexWindow> {
    if max_spacing.is_nan() || max_spacing <= 0.0 || max_spacing >= 1.0 {
        return Err(Error::MaxSpacingNotBelowOne { max_spacing });
    }
    if p.is_nan() || p <= 0.0 {
        return Err(Error::NonPositiveExponent { p });
    }
    let cut = -p * max_spacing.log2();
    let lower = cut;
    let upper = n as f64 - cut;
    let min = lower.floor() as i64 + 1;
    let max = upper.ceil() as i64 - 1;
    let range = if min <= max {
        // lower > 0 and upper < n, so the window sits inside 1..=n-1.
        Some((min as usize, max as usize))
    } else {
        None
    };
    Ok(IndexWindow {
        p,
        max_spacing,
        range,
    })
}

/// One refinement level of the convergence study.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub level: usize,
    pub knot_count: usize,
    pub max_spacing: f64,
    /// Decay window at this level, `None` when empty (level is skipped).
    pub window: Option<(usize, usize)>,
    /// Max sampled `|P~ - f|` over window pieces; `None` when skipped.
    pub max_error: Option<f64>,
    /// `log2(e_prev / e_this)` against the previous non-skipped level.
    pub observed_order: Option<f64>,
}

/// Configuration of the grid-refinement study.
#[derive(Debug, Clone)]
pub struct ConvergenceConfig {
    pub interval: (f64, f64),
    /// Interval count on the coarsest level; level `k` uses
    /// `base_intervals * 2^k` uniform intervals.
    pub base_intervals: usize,
    /// Number of levels (`level = 0..levels`).
    pub levels: usize,
    /// Decay exponent `p` of the window.
    pub p: f64,
    /// Added to the exact derivative at the left endpoint.
    pub left_perturbation: f64,
    /// Added to the exact derivative at the right endpoint.
    pub right_perturbation: f64,
    pub samples_per_piece: usize,
}

/// Runs the interior convergence study: on each dyadic level, builds the
/// spline clamped with perturbed endpoint derivatives, measures the max
/// error against `f` over the pieces in the decay window, and reports
/// observed orders between consecutive levels.
pub fn convergence_study<F, G>(f: F, f_prime: G, config: &ConvergenceConfig) -> Result<Vec<ConvergenceRow>>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    let (a, b) = config.interval;
    let samples = config.samples_per_piece.max(2);
    let mut rows = Vec::with_capacity(config.levels);
    let mut previous: Option<f64> = None;
    for level in 0..config.levels {
        let intervals = config.base_intervals << level;
        let n = intervals + 1;
        let knots: Vec<f64> = (0..n)
            .map(|i| a + (b - a) * i as f64 / intervals as f64)
            .collect();
        let values: Vec<f64> = knots.iter().map(|&x| f(x)).collect();
        let max_spacing = (b - a) / intervals as f64;
        let input = SplineInput::from_data(
            knots.clone(),
            values,
            f_prime(a) + config.left_perturbation,
            f_prime(b) + config.right_perturbation,
        )?;
        let window = interior_window(n, max_spacing, config.p)?;
        let Some((lo, hi)) = window.range() else {
            rows.push(ConvergenceRow {
                level,
                knot_count: n,
                max_spacing,
                window: None,
                max_error: None,
                observed_order: None,
            });
            previous = None;
            continue;
        };
        let spline = CubicSpline::build(&input);
        let mut max_error = 0.0f64;
        for piece in lo..=hi {
            let p = &spline.pieces()[piece - 1];
            let (x0, x1) = (p.left_knot(), p.right_knot());
            for k in 0..samples {
                let x = x0 + (x1 - x0) * k as f64 / (samples - 1) as f64;
                max_error = max_error.max((p.value_at(x) - f(x)).abs());
            }
        }
        let observed_order = match previous {
            Some(prev) if prev > 0.0 && max_error > 0.0 => Some((prev / max_error).log2()),
            _ => None,
        };
        previous = Some(max_error);
        rows.push(ConvergenceRow {
            level,
            knot_count: n,
            max_spacing,
            window: Some((lo, hi)),
            max_error: Some(max_error),
            observed_order,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{Slopes, SplineInput};

    fn system(knots: Vec<f64>, values: Vec<f64>) -> TridiagonalSystem {
        let input = SplineInput::from_data(knots, values, 0.0, 0.0).unwrap();
        let slopes = Slopes::compute(&input);
        TridiagonalSystem::assemble(&input, &slopes)
    }

    #[test]
    fn one_by_one_inverse() {
        let sys = system(vec![0.0, 1.0, 2.0], vec![0.0, 0.0, 0.0]);
        let cols = inverse_columns(&sys);
        // Sits under the decay bound 2/3 at offset 0.
        assert_eq!(cols.first(), &[0.5]);
        assert_eq!(cols.last(), &[0.5]);
    }

    #[test]
    fn two_by_two_uniform_inverse_closed_form() {
        // Uniform 4-knot grid: matrix [[2, 1/2], [1/2, 2]], inverse
        // (1/(15/4)) [[2, -1/2], [-1/2, 2]] = [[8/15, -2/15], [-2/15, 8/15]].
        let sys = system(vec![0.0, 1.0, 2.0, 3.0], vec![0.0; 4]);
        let cols = inverse_columns(&sys);
        assert!((cols.first()[0] - 8.0 / 15.0).abs() <= 1e-15);
        assert!((cols.first()[1] + 2.0 / 15.0).abs() <= 1e-15);
        assert!((cols.last()[0] + 2.0 / 15.0).abs() <= 1e-15);
        assert!((cols.last()[1] - 8.0 / 15.0).abs() <= 1e-15);
    }

    #[test]
    fn kershaw_certifies_small_systems() {
        let sys = system(vec![0.0, 1.0, 2.0], vec![0.0; 3]);
        let report = certify_kershaw(&sys);
        assert!(report.passed);
        assert_eq!(report.entries_checked, 1);

        let sys = system(vec![0.0, 1.0, 2.0, 3.0], vec![0.0; 4]);
        let report = certify_kershaw(&sys);
        assert!(report.passed, "{report:?}");
        // Diagonal 8/15 vs 2/3 and off-diagonal 2/15 vs 1/3.
        assert!(report.tightest_margin > 0.0);
    }

    #[test]
    fn perturbation_zero_deltas_vanish() {
        let sys = system(vec![0.0, 0.5, 1.7, 2.0, 3.0], vec![1.0, 2.0, 2.5, 4.0, 4.5]);
        for d in derivative_perturbation(&sys, 0.0, 0.0) {
            assert_eq!(d, 0.0);
        }
    }

    #[test]
    fn perturbation_one_by_one_direct() {
        let sys = system(vec![0.0, 1.0, 2.0], vec![0.0; 3]);
        let diff = derivative_perturbation(&sys, 1.0, 0.0);
        assert!((diff[0] - 0.25).abs() <= 1e-15);
    }

    #[test]
    fn pair_bound_direct_substitution() {
        // Nine uniform knots, spacing 1: bound on piece 4 for a unit left
        // change is 8 * 2^{-4} * (1/2) = 0.25.
        let knots: Vec<f64> = (0..9).map(|i| i as f64).collect();
        let input = SplineInput::from_data(knots, vec![0.0; 9], 0.0, 0.0).unwrap();
        let bound = pair_difference_bound(&input, 1.0, 0.0);
        assert!((bound.piece_bound(4).unwrap() - 0.25).abs() <= 1e-15);
    }

    #[test]
    fn pair_bound_rejects_unclaimed_pieces() {
        let knots: Vec<f64> = (0..9).map(|i| i as f64).collect();
        let input = SplineInput::from_data(knots, vec![0.0; 9], 0.0, 0.0).unwrap();
        let bound = pair_difference_bound(&input, 1.0, 0.0);
        assert!(matches!(
            bound.piece_bound(1),
            Err(Error::BoundNotClaimed { piece: 1, .. })
        ));
        assert!(matches!(
            bound.piece_bound(8),
            Err(Error::BoundNotClaimed { piece: 8, .. })
        ));
    }

    #[test]
    fn pair_bound_zero_iff_zero_deltas() {
        let knots: Vec<f64> = (0..9).map(|i| i as f64).collect();
        let input = SplineInput::from_data(knots, vec![0.0; 9], 0.0, 0.0).unwrap();
        for b in pair_difference_bound(&input, 0.0, 0.0).bounds() {
            assert_eq!(*b, 0.0);
        }
        for b in pair_difference_bound(&input, 1e-9, 0.0).bounds() {
            assert!(*b > 0.0);
        }
    }

    #[test]
    fn identical_splines_certify_trivially() {
        let knots: Vec<f64> = (0..9).map(|i| i as f64).collect();
        let values: Vec<f64> = knots.iter().map(|x| x.sin()).collect();
        let input = SplineInput::from_data(knots, values, 1.0, -0.5).unwrap();
        let report = certify_pair_bound(&input, 0.0, 0.0, 100).unwrap();
        assert!(report.passed);
        for row in &report.rows {
            assert_eq!(row.measured, 0.0);
            assert_eq!(row.bound, 0.0);
        }
    }

    #[test]
    fn window_examples() {
        let w = interior_window(100, 0.0625, 2.0).unwrap();
        assert_eq!(w.range(), Some((9, 91)));
        let w = interior_window(5, 0.5, 10.0).unwrap();
        assert!(w.is_empty());
        let w = interior_window(33, 1.0 / 32.0, 1.0).unwrap();
        assert_eq!(w.range(), Some((6, 27)));
        assert!(w.contains(6) && w.contains(27) && !w.contains(5) && !w.contains(28));
    }

    #[test]
    fn window_rejects_bad_parameters() {
        assert!(matches!(
            interior_window(10, 1.0, 1.0),
            Err(Error::MaxSpacingNotBelowOne { .. })
        ));
        assert!(matches!(
            interior_window(10, 0.5, 0.0),
            Err(Error::NonPositiveExponent { .. })
        ));
    }
}
