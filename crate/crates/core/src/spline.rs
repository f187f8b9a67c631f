//! Piecewise cubic Hermite representation and evaluation.

use crate::error::{Error, Result};
use crate::partition::{Slopes, SplineInput};
use crate::tridiagonal::TridiagonalSystem;

/// One cubic piece on `[x_i, x_{i+1}]` in local Newton form:
///
/// `P(x) = c1 + c2 (x - x_i) + c3 (x - x_i)^2 + c4 (x - x_i)^2 (x - x_{i+1})`
///
/// with `c1 = f_i`, `c2 = d_i`, `c3 = (m_i - d_i)/h_i`,
/// `c4 = (d_{i+1} + d_i - 2 m_i)/h_i^2`, where `d` are the endpoint
/// derivatives of the piece and `m_i` its secant slope.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitePiece {
    left_knot: f64,
    right_knot: f64,
    coefficients: [f64; 4],
    deriv_left: f64,
    deriv_right: f64,
    slope: f64,
}

impl HermitePiece {
    /// Builds a piece from endpoint data.
    pub fn new(
        left_knot: f64,
        right_knot: f64,
        value_left: f64,
        value_right: f64,
        deriv_left: f64,
        deriv_right: f64,
    ) -> Self {
        let h = right_knot - left_knot;
        let slope = (value_right - value_left) / h;
        let c3 = (slope - deriv_left) / h;
        let c4 = (deriv_right + deriv_left - 2.0 * slope) / (h * h);
        Self {
            left_knot,
            right_knot,
            coefficients: [value_left, deriv_left, c3, c4],
            deriv_left,
            deriv_right,
            slope,
        }
    }

    pub fn left_knot(&self) -> f64 {
        self.left_knot
    }

    pub fn right_knot(&self) -> f64 {
        self.right_knot
    }

    pub fn width(&self) -> f64 {
        self.right_knot - self.left_knot
    }

    pub fn coefficients(&self) -> &[f64; 4] {
        &self.coefficients
    }

    pub fn deriv_left(&self) -> f64 {
        self.deriv_left
    }

    pub fn deriv_right(&self) -> f64 {
        self.deriv_right
    }

    pub fn value_left(&self) -> f64 {
        self.coefficients[0]
    }

    pub fn value_right(&self) -> f64 {
        // Exact by the coefficient identities up to roundoff.
        self.coefficients[0] + self.slope * self.width()
    }

    /// Secant slope of the piece.
    pub fn slope(&self) -> f64 {
        self.slope
    }

    /// Value at `x` (no domain check; callers clamp to the piece).
    pub fn value_at(&self, x: f64) -> f64 {
        let [c1, c2, c3, c4] = self.coefficients;
        let t = x - self.left_knot;
        let s = x - self.right_knot;
        c1 + t * (c2 + t * (c3 + c4 * s))
    }

    /// First derivative at `x`.
    pub fn derivative_at(&self, x: f64) -> f64 {
        let [_, c2, c3, c4] = self.coefficients;
        let t = x - self.left_knot;
        let s = x - self.right_knot;
        c2 + 2.0 * c3 * t + c4 * (2.0 * t * s + t * t)
    }

    /// Second derivative at `x`.
    pub fn second_derivative_at(&self, x: f64) -> f64 {
        let [_, _, c3, c4] = self.coefficients;
        let t = x - self.left_knot;
        let h = self.width();
        2.0 * c3 + c4 * (6.0 * t - 2.0 * h)
    }

    /// Closed-form value at the piece midpoint:
    /// `(f_i + f_{i+1})/2 + (h_i/8)(d_i - d_{i+1})`.
    pub fn midpoint_value(&self) -> f64 {
        0.5 * (self.value_left() + self.value_right())
            + 0.125 * self.width() * (self.deriv_left - self.deriv_right)
    }
}

/// A twice continuously differentiable piecewise cubic interpolant with
/// prescribed endpoint derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicSpline {
    knots: Vec<f64>,
    values: Vec<f64>,
    derivatives: Vec<f64>,
    pieces: Vec<HermitePiece>,
}

impl CubicSpline {
    /// Builds the spline: assembles and solves the interior-derivative
    /// system, then forms one Hermite piece per interval.
    pub fn build(input: &SplineInput) -> Self {
        let slopes = Slopes::compute(input);
        let system = TridiagonalSystem::assemble(input, &slopes);
        let interior = system.solve();

        let n = input.len();
        let mut derivatives = Vec::with_capacity(n);
        derivatives.push(input.left_derivative());
        derivatives.extend_from_slice(&interior);
        derivatives.push(input.right_derivative());

        let knots = input.partition().knots().to_vec();
        let values = input.values().to_vec();
        let pieces = (0..n - 1)
            .map(|i| {
                HermitePiece::new(
                    knots[i],
                    knots[i + 1],
                    values[i],
                    values[i + 1],
                    derivatives[i],
                    derivatives[i + 1],
                )
            })
            .collect();

        Self {
            knots,
            values,
            derivatives,
            pieces,
        }
    }

    /// Reassembles a spline from stored knots, values and a full
    /// derivative vector (for example one read back from serialized
    /// output). No system is solved; the pieces are formed directly, so a
    /// vector produced by [`CubicSpline::build`] reproduces that spline
    /// bit for bit.
    pub fn from_parts(knots: Vec<f64>, values: Vec<f64>, derivatives: Vec<f64>) -> Result<Self> {
        let partition = crate::partition::Partition::new(knots)?;
        let n = partition.len();
        if values.len() != n {
            return Err(Error::LengthMismatch {
                knots: n,
                values: values.len(),
            });
        }
        if derivatives.len() != n {
            return Err(Error::LengthMismatch {
                knots: n,
                values: derivatives.len(),
            });
        }
        for (index, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    what: "value",
                    index,
                });
            }
        }
        for (index, &d) in derivatives.iter().enumerate() {
            if !d.is_finite() {
                return Err(Error::NonFinite {
                    what: "derivative",
                    index,
                });
            }
        }
        let knots = partition.knots().to_vec();
        let pieces = (0..n - 1)
            .map(|i| {
                HermitePiece::new(
                    knots[i],
                    knots[i + 1],
                    values[i],
                    values[i + 1],
                    derivatives[i],
                    derivatives[i + 1],
                )
            })
            .collect();
        Ok(Self {
            knots,
            values,
            derivatives,
            pieces,
        })
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Full derivative vector `d_1..d_n` (prescribed ends, solved interior).
    pub fn derivatives(&self) -> &[f64] {
        &self.derivatives
    }

    pub fn pieces(&self) -> &[HermitePiece] {
        &self.pieces
    }

    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    /// Piece with 1-based index `i` covering `[x_i, x_{i+1}]`.
    pub fn piece(&self, index: usize) -> Result<&HermitePiece> {
        if index == 0 || index > self.pieces.len() {
            return Err(Error::PieceIndexOutOfRange {
                index,
                pieces: self.pieces.len(),
            });
        }
        Ok(&self.pieces[index - 1])
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.knots[0], *self.knots.last().unwrap())
    }

    /// Index (0-based) of the piece evaluating `x`. Interior knots belong
    /// to the piece that ends there; the last knot is right-closed.
    fn piece_index(&self, x: f64) -> Result<usize> {
        let (min, max) = self.domain();
        if !(x >= min && x <= max) {
            return Err(Error::OutOfDomain { x, min, max });
        }
        let below = self.knots.partition_point(|&k| k < x);
        Ok(below.max(1) - 1)
    }

    pub fn evaluate(&self, x: f64) -> Result<f64> {
        Ok(self.pieces[self.piece_index(x)?].value_at(x))
    }

    pub fn evaluate_derivative(&self, x: f64) -> Result<f64> {
        Ok(self.pieces[self.piece_index(x)?].derivative_at(x))
    }

    pub fn evaluate_second_derivative(&self, x: f64) -> Result<f64> {
        Ok(self.pieces[self.piece_index(x)?].second_derivative_at(x))
    }

    /// Closed-form midpoint value of the 1-based piece `i`.
    pub fn midpoint_value(&self, index: usize) -> Result<f64> {
        Ok(self.piece(index)?.midpoint_value())
    }
}
