//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use alloc::vec::Vec;

const MAX_SWEEPS: usize = 100;

/// Frobenius norm of the strictly off-diagonal part.
pub(crate) fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// Diagonalizes the row-major symmetric matrix `a` in place and returns its
/// eigenvalues (unsorted). Iteration stops once the off-diagonal Frobenius
/// norm is below `1e-12 * n`.
pub(crate) fn symmetric_eigenvalues(a: &mut [f64], n: usize) -> Vec<f64> {
    debug_assert_eq!(a.len(), n * n);
    let threshold = 1e-12 * n as f64;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(a, n) < threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let mut a = [2.0, 1.0, 1.0, 2.0];
        let mut ev = symmetric_eigenvalues(&mut a, 2);
        ev.sort_by(|x, y| x.total_cmp(y));
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
        assert!(off_diagonal_norm(&a, 2) < 1e-12);
    }

    #[test]
    fn residual_below_tolerance() {
        let n = 6;
        let mut a = alloc::vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = 1.0 / (1.0 + (i + j) as f64);
            }
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let ev = symmetric_eigenvalues(&mut a, n);
        assert!(off_diagonal_norm(&a, n) < 1e-12 * n as f64);
        assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-12);
    }
}
