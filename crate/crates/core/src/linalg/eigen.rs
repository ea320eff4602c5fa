use crate::error::{Error, Result};

use super::Spectrum;

/// Stop once every off-diagonal magnitude is at most this.
pub const EIGEN_TOL: f64 = 1e-12;
/// Full cyclic sweeps allowed before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a dense symmetric matrix (row-major, `n × n`) by cyclic
/// Jacobi rotations.
///
/// Each rotation annihilates one off-diagonal pair `(p, q)`. Sweeps run over
/// all pairs in row order until the largest off-diagonal magnitude is at most
/// `tol`; eigenvalues are then accurate to `O(tol)` absolutely.
///
/// The rotation arithmetic is odd in `a[p][q]`, so conjugating the input by
/// a ±1 diagonal matrix yields bit-identical eigenvalues.
pub fn symmetric_eigenvalues(data: &[f64], n: usize, tol: f64) -> Result<Spectrum> {
    if data.len() != n * n {
        return Err(Error::NotSquare);
    }
    for i in 0..n {
        for j in i + 1..n {
            if data[i * n + j] != data[j * n + i] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    let mut a = data.to_vec();
    let mut residual = max_off_diagonal(&a, n);
    let mut sweeps = 0;
    while residual > tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        residual = max_off_diagonal(&a, n);
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    // -0.0 sorts below 0.0 under total_cmp; normalize for stable output.
    for x in &mut eigenvalues {
        if *x == 0.0 {
            *x = 0.0;
        }
    }
    Ok(Spectrum {
        eigenvalues,
        residual,
    })
}

fn max_off_diagonal(a: &[f64], n: usize) -> f64 {
    let mut m = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            m = m.max(a[i * n + j].abs());
        }
    }
    m
}

fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
        // Sign bit, not `< 0.0`: θ = −0 must flip t when a[p][q] < 0.
        if theta.is_sign_negative() {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}
