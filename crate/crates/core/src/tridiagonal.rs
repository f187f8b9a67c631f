//! The interior-derivative system.
//!
//! Second-derivative continuity at the interior knots, together with the
//! prescribed endpoint derivatives, determines the interior first
//! derivatives through a tridiagonal linear system with diagonal 2 and
//! off-diagonal weights `lambda_i = h_{i+1}/(h_i + h_{i+1})` and
//! `mu_i = h_i/(h_i + h_{i+1})`. The matrix is strictly diagonally
//! dominant, so forward elimination needs no pivoting.

use crate::partition::{Slopes, SplineInput};

/// Tridiagonal system `A d = b` for the interior derivatives `d_2..d_{n-1}`.
///
/// Row `k` of `A` (1-based, `k = 1..=n-2`) is
/// `[lambda_k, 2, mu_k]`; the first and last right-hand side entries carry
/// the endpoint-derivative corrections. For `n = 3` the single row carries
/// both corrections.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSystem {
    lambda: Vec<f64>,
    mu: Vec<f64>,
    rhs: Vec<f64>,
}

impl TridiagonalSystem {
    /// Assembles the system from interpolation data and its slopes.
    pub fn assemble(input: &SplineInput, slopes: &Slopes) -> Self {
        let h = input.partition().spacings();
        let m = slopes.slopes();
        let n = input.len();
        let dim = n - 2;

        let mut lambda = Vec::with_capacity(dim);
        let mut mu = Vec::with_capacity(dim);
        for i in 0..dim {
            let denom = h[i] + h[i + 1];
            lambda.push(h[i + 1] / denom);
            mu.push(h[i] / denom);
        }

        let mut rhs: Vec<f64> = (0..dim)
            .map(|i| 3.0 * (lambda[i] * m[i] + mu[i] * m[i + 1]))
            .collect();
        rhs[0] -= lambda[0] * input.left_derivative();
        rhs[dim - 1] -= mu[dim - 1] * input.right_derivative();

        Self { lambda, mu, rhs }
    }

    /// Number of unknowns, `n - 2`.
    pub fn dimension(&self) -> usize {
        self.rhs.len()
    }

    /// Sub-/super-diagonal weights `lambda_1..lambda_{n-2}`.
    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    /// Sub-/super-diagonal weights `mu_1..mu_{n-2}`.
    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    /// Right-hand side `b_1..b_{n-2}` including the endpoint corrections.
    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    /// Right-hand side without the endpoint-derivative corrections.
    pub fn boundary_free_rhs(&self, slopes: &Slopes) -> Vec<f64> {
        let m = slopes.slopes();
        (0..self.dimension())
            .map(|i| 3.0 * (self.lambda[i] * m[i] + self.mu[i] * m[i + 1]))
            .collect()
    }

    /// Solves `A d = b` for the stored right-hand side.
    pub fn solve(&self) -> Vec<f64> {
        self.solve_with(&self.rhs)
    }

    /// Solves `A d = rhs` by forward elimination and back substitution.
    ///
    /// Strict diagonal dominance (`lambda_i + mu_i = 1 < 2`) guarantees a
    /// stable pivot-free factorization.
    pub fn solve_with(&self, rhs: &[f64]) -> Vec<f64> {
        let dim = self.dimension();
        assert_eq!(rhs.len(), dim);
        let mut diag = vec![2.0; dim];
        let mut r = rhs.to_vec();
        for k in 1..dim {
            let w = self.lambda[k] / diag[k - 1];
            diag[k] -= w * self.mu[k - 1];
            r[k] -= w * r[k - 1];
        }
        let mut x = vec![0.0; dim];
        x[dim - 1] = r[dim - 1] / diag[dim - 1];
        for k in (0..dim - 1).rev() {
            x[k] = (r[k] - self.mu[k] * x[k + 1]) / diag[k];
        }
        x
    }

    /// Max-norm of `A x - rhs`.
    pub fn residual_max_norm(&self, x: &[f64], rhs: &[f64]) -> f64 {
        let dim = self.dimension();
        let mut worst = 0.0f64;
        for k in 0..dim {
            let mut ax = 2.0 * x[k];
            if k > 0 {
                ax += self.lambda[k] * x[k - 1];
            }
            if k < dim - 1 {
                ax += self.mu[k] * x[k + 1];
            }
            worst = worst.max((ax - rhs[k]).abs());
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::SplineInput;

    fn input(knots: Vec<f64>, values: Vec<f64>, dl: f64, dr: f64) -> SplineInput {
        SplineInput::from_data(knots, values, dl, dr).unwrap()
    }

    #[test]
    fn uniform_grid_has_symmetric_weights() {
        let inp = input(vec![0.0, 1.0, 2.0, 3.0, 4.0], vec![0.0; 5], 0.0, 0.0);
        let sys = TridiagonalSystem::assemble(&inp, &Slopes::compute(&inp));
        for i in 0..sys.dimension() {
            assert_eq!(sys.lambda()[i], 0.5);
            assert_eq!(sys.mu()[i], 0.5);
        }
    }

    #[test]
    fn weights_sum_to_one() {
        let inp = input(vec![0.0, 0.1, 0.5, 2.5, 2.6], vec![0.0; 5], 0.0, 0.0);
        let sys = TridiagonalSystem::assemble(&inp, &Slopes::compute(&inp));
        for i in 0..sys.dimension() {
            let (l, u) = (sys.lambda()[i], sys.mu()[i]);
            assert!((l + u - 1.0).abs() <= 1e-14);
            assert!(0.0 < l && l < 1.0);
            assert!(0.0 < u && u < 1.0);
        }
    }

    #[test]
    fn quadratic_data_rhs() {
        // f = x^2 on 0..4, left derivative 0, right derivative 8.
        let inp = input(
            vec![0.0, 1.0, 2.0, 3.0, 4.0],
            vec![0.0, 1.0, 4.0, 9.0, 16.0],
            0.0,
            8.0,
        );
        let slopes = Slopes::compute(&inp);
        assert_eq!(slopes.slopes(), &[1.0, 3.0, 5.0, 7.0]);
        let sys = TridiagonalSystem::assemble(&inp, &slopes);
        assert_eq!(sys.rhs(), &[6.0, 12.0, 14.0]);
    }

    #[test]
    fn three_knots_carry_both_corrections() {
        let inp = input(vec![0.0, 1.0, 2.0], vec![0.0, 1.0, 2.0], 1.0, 1.0);
        let sys = TridiagonalSystem::assemble(&inp, &Slopes::compute(&inp));
        assert_eq!(sys.dimension(), 1);
        assert_eq!(sys.rhs(), &[2.0]);
        // 1x1 system: 2 d_2 = b_1.
        assert_eq!(sys.solve(), vec![1.0]);
    }

    #[test]
    fn solve_residual_is_tiny() {
        let inp = input(
            vec![0.0, 0.3, 0.7, 1.9, 2.0, 5.0],
            vec![1.0, -2.0, 0.5, 3.0, 3.1, -4.0],
            2.0,
            -1.0,
        );
        let sys = TridiagonalSystem::assemble(&inp, &Slopes::compute(&inp));
        let x = sys.solve();
        let scale = sys.rhs().iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
        assert!(sys.residual_max_norm(&x, sys.rhs()) <= 1e-12 * scale);
    }
}
