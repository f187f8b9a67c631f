use crate::error::{Error, Result};

/// A strictly increasing set of knots together with derived mesh data.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    knots: Vec<f64>,
    spacings: Vec<f64>,
    max_spacing: f64,
    mesh_ratio: f64,
}

impl Partition {
    /// Builds a partition from at least three strictly increasing knots.
    pub fn new(knots: Vec<f64>) -> Result<Self> {
        let n = knots.len();
        if n < 3 {
            return Err(Error::TooFewKnots { n });
        }
        for (index, &k) in knots.iter().enumerate() {
            if !k.is_finite() {
                return Err(Error::NonFinite { what: "knot", index });
            }
        }
        for index in 1..n {
            if knots[index] <= knots[index - 1] {
                return Err(Error::NonIncreasingKnots {
                    index,
                    value: knots[index],
                    previous: knots[index - 1],
                });
            }
        }
        let spacings: Vec<f64> = knots.windows(2).map(|w| w[1] - w[0]).collect();
        let max_spacing = spacings.iter().cloned().fold(f64::MIN, f64::max);
        let mesh_ratio = spacings
            .iter()
            .map(|&h| max_spacing / h)
            .fold(f64::MIN, f64::max);
        Ok(Self {
            knots,
            spacings,
            max_spacing,
            mesh_ratio,
        })
    }

    /// Uniform partition of `[a, b]` with `intervals` equal spacings.
    pub fn uniform(a: f64, b: f64, intervals: usize) -> Result<Self> {
        let n = intervals + 1;
        let knots = (0..n)
            .map(|i| a + (b - a) * i as f64 / intervals as f64)
            .collect();
        Self::new(knots)
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    /// Interval widths `h_i = x_{i+1} - x_i`, one per piece.
    pub fn spacings(&self) -> &[f64] {
        &self.spacings
    }

    /// Largest interval width.
    pub fn max_spacing(&self) -> f64 {
        self.max_spacing
    }

    /// `max_i (max_spacing / h_i)`; equals 1 exactly on uniform grids.
    pub fn mesh_ratio(&self) -> f64 {
        self.mesh_ratio
    }
}

/// Interpolation data: a partition, one value per knot, and prescribed
/// first derivatives at both interval endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct SplineInput {
    partition: Partition,
    values: Vec<f64>,
    left_derivative: f64,
    right_derivative: f64,
}

impl SplineInput {
    pub fn new(
        partition: Partition,
        values: Vec<f64>,
        left_derivative: f64,
        right_derivative: f64,
    ) -> Result<Self> {
        if values.len() != partition.len() {
            return Err(Error::LengthMismatch {
                knots: partition.len(),
                values: values.len(),
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
        if !left_derivative.is_finite() {
            return Err(Error::NonFinite {
                what: "left derivative",
                index: 0,
            });
        }
        if !right_derivative.is_finite() {
            return Err(Error::NonFinite {
                what: "right derivative",
                index: partition.len() - 1,
            });
        }
        Ok(Self {
            partition,
            values,
            left_derivative,
            right_derivative,
        })
    }

    /// Convenience constructor from raw knots and values.
    pub fn from_data(
        knots: Vec<f64>,
        values: Vec<f64>,
        left_derivative: f64,
        right_derivative: f64,
    ) -> Result<Self> {
        Self::new(Partition::new(knots)?, values, left_derivative, right_derivative)
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn left_derivative(&self) -> f64 {
        self.left_derivative
    }

    pub fn right_derivative(&self) -> f64 {
        self.right_derivative
    }

    /// Replaces the endpoint derivatives, keeping knots and values.
    pub fn with_endpoint_derivatives(&self, left: f64, right: f64) -> Result<Self> {
        Self::new(self.partition.clone(), self.values.clone(), left, right)
    }

    /// True when the values are nondecreasing.
    pub fn values_nondecreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[1] >= w[0])
    }
}

/// Per-piece value differences and secant slopes.
#[derive(Debug, Clone, PartialEq)]
pub struct Slopes {
    deltas: Vec<f64>,
    slopes: Vec<f64>,
}

impl Slopes {
    /// Computes `delta_i = f_{i+1} - f_i` and `m_i = delta_i / h_i`.
    pub fn compute(input: &SplineInput) -> Self {
        let values = input.values();
        let spacings = input.partition().spacings();
        let deltas: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
        let slopes: Vec<f64> = deltas
            .iter()
            .zip(spacings)
            .map(|(d, h)| d / h)
            .collect();
        Self { deltas, slopes }
    }

    pub fn deltas(&self) -> &[f64] {
        &self.deltas
    }

    pub fn slopes(&self) -> &[f64] {
        &self.slopes
    }
}
