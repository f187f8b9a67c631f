//! Twice continuously differentiable cubic spline interpolation with
//! prescribed endpoint derivatives, plus certified bounds on how far a
//! change of those endpoint derivatives can propagate into the interior.
//!
//! The crate has three layers:
//!
//! * [`spline`] — construction and evaluation of the interpolant via the
//!   strictly diagonally dominant tridiagonal system for the interior
//!   derivatives;
//! * [`bounds`] — numerical certification of the geometric decay of the
//!   system's inverse, the per-piece distance bound between two splines
//!   differing only at the boundary, and the grid-refinement study of the
//!   interior convergence order;
//! * [`monotonicity`] — exact monotonicity decisions for Hermite pieces
//!   and the endpoint-derivative sweep showing that qualifying
//!   non-monotone splines cannot be repaired from the boundary.
//!
//! All values are immutable after construction and all operations are pure
//! functions of their inputs, so everything here is safe to call from any
//! number of threads.
//!
//! ```
//! use clampline::{CubicSpline, SplineInput};
//!
//! let input = SplineInput::from_data(
//!     vec![0.0, 1.0, 2.0, 3.0],
//!     vec![0.0, 0.8, 0.9, 0.1],
//!     1.0,
//!     -1.2,
//! )?;
//! let spline = CubicSpline::build(&input);
//! assert_eq!(spline.evaluate(1.0)?, 0.8);
//! assert_eq!(spline.evaluate_derivative(3.0)?, -1.2);
//! # Ok::<(), clampline::Error>(())
//! ```

pub mod bounds;
pub mod error;
pub mod monotonicity;
pub mod partition;
pub mod spline;
pub mod tridiagonal;

pub use error::{Error, Result};
pub use partition::{Partition, Slopes, SplineInput};
pub use spline::{CubicSpline, HermitePiece};
pub use tridiagonal::TridiagonalSystem;
