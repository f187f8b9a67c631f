//! Shared test oracles, all independent of the library's solve path.

#![allow(dead_code)]

use clampline::{HermitePiece, SplineInput, TridiagonalSystem};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Dense Gaussian elimination with partial pivoting.
pub fn dense_solve(matrix: &[Vec<f64>], rhs: &[f64]) -> Vec<f64> {
    let n = rhs.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut b = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        assert!(a[col][col] != 0.0, "singular oracle matrix");
        let pivot_row = a[col].clone();
        for row in col + 1..n {
            let factor = a[row][col] / pivot_row[col];
            if factor == 0.0 {
                continue;
            }
            for (target, &p) in a[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *target -= factor * p;
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut sum = b[row];
        for k in row + 1..n {
            sum -= a[row][k] * x[k];
        }
        x[row] = sum / a[row][row];
    }
    x
}

/// Dense form of the interior-derivative matrix.
pub fn dense_matrix(system: &TridiagonalSystem) -> Vec<Vec<f64>> {
    let dim = system.dimension();
    let mut a = vec![vec![0.0; dim]; dim];
    for r in 0..dim {
        a[r][r] = 2.0;
        if r > 0 {
            a[r][r - 1] = system.lambda()[r];
        }
        if r < dim - 1 {
            a[r][r + 1] = system.mu()[r];
        }
    }
    a
}

/// Full dense inverse, column by column through the dense solver.
pub fn dense_inverse(system: &TridiagonalSystem) -> Vec<Vec<f64>> {
    let dim = system.dimension();
    let a = dense_matrix(system);
    let mut inv = vec![vec![0.0; dim]; dim];
    for j in 0..dim {
        let mut e = vec![0.0; dim];
        e[j] = 1.0;
        let col = dense_solve(&a, &e);
        for i in 0..dim {
            inv[i][j] = col[i];
        }
    }
    inv
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Knots with log-uniform spacings spanning `decades` decades.
pub fn random_knots(rng: &mut ChaCha8Rng, n: usize, decades: f64) -> Vec<f64> {
    let mut knots = Vec::with_capacity(n);
    knots.push(rng.random_range(-1.0..1.0));
    for _ in 0..n - 1 {
        let h = 10.0f64.powf(rng.random_range(0.0..decades));
        knots.push(knots.last().unwrap() + h);
    }
    knots
}

pub fn random_values(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-scale..scale)).collect()
}

pub fn random_input(rng: &mut ChaCha8Rng, n: usize, decades: f64) -> SplineInput {
    let knots = random_knots(rng, n, decades);
    let values = random_values(rng, n, 10.0);
    let dl = rng.random_range(-10.0..10.0);
    let dr = rng.random_range(-10.0..10.0);
    SplineInput::from_data(knots, values, dl, dr).unwrap()
}

/// Minimum of the piece derivative over `samples` equispaced points.
pub fn sampled_derivative_min(piece: &HermitePiece, samples: usize) -> f64 {
    let (x0, x1) = (piece.left_knot(), piece.right_knot());
    let mut min = f64::INFINITY;
    for k in 0..samples {
        let x = x0 + (x1 - x0) * k as f64 / (samples - 1) as f64;
        min = min.min(piece.derivative_at(x));
    }
    min
}

/// Maximum of the piece derivative over `samples` equispaced points.
pub fn sampled_derivative_max(piece: &HermitePiece, samples: usize) -> f64 {
    let (x0, x1) = (piece.left_knot(), piece.right_knot());
    let mut max = f64::NEG_INFINITY;
    for k in 0..samples {
        let x = x0 + (x1 - x0) * k as f64 / (samples - 1) as f64;
        max = max.max(piece.derivative_at(x));
    }
    max
}

/// Exact extremum of the piece derivative over the piece (endpoints plus
/// interior vertex of the quadratic), used to exclude borderline cases
/// when comparing decision procedures.
pub fn exact_derivative_min(piece: &HermitePiece) -> f64 {
    let mut min = piece.deriv_left().min(piece.deriv_right());
    let [_, _, c3, c4] = *piece.coefficients();
    let h = piece.width();
    if c4 != 0.0 {
        let vertex = (c4 * h - c3) / (3.0 * c4);
        if vertex > 0.0 && vertex < h {
            min = min.min(piece.derivative_at(piece.left_knot() + vertex));
        }
    }
    min
}

pub fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0f64, |a, &b| a.max(b.abs()))
}
