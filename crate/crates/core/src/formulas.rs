//! Closed-form spectra for signed cycles, paths, complete and complete
//! bipartite graphs, and the simple/double eigenvalue sets of signed cycles.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Eigenvalues of a signed `C_n`, each tagged with its generating index `j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CycleSpectrum {
    pub n: usize,
    pub balanced: bool,
    /// `(j, value)` sorted by value, descending.
    pub values: Vec<(usize, f64)>,
}

impl CycleSpectrum {
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.values.iter().map(|&(_, x)| x).collect()
    }
}

fn check_cycle_order(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidOrder {
            n,
            reason: "a cycle needs at least 3 vertices",
        });
    }
    Ok(())
}

fn sort_desc(values: &mut [f64]) {
    values.sort_by(|a, b| b.total_cmp(a));
}

/// Balanced: `2cos(2πj/n)`; unbalanced: `2cos((2j+1)π/n)`, `j = 0..n`.
pub fn cycle_spectrum(n: usize, balanced: bool) -> Result<CycleSpectrum> {
    check_cycle_order(n)?;
    let nf = n as f64;
    let mut values: Vec<(usize, f64)> = (0..n)
        .map(|j| {
            let angle = if balanced {
                2.0 * PI * j as f64 / nf
            } else {
                (2 * j + 1) as f64 * PI / nf
            };
            (j, 2.0 * angle.cos())
        })
        .collect();
    values.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    Ok(CycleSpectrum {
        n,
        balanced,
        values,
    })
}

/// `2cos(jπ/(n+1))`, `j = 1..=n`; the same for every signing of `P_n`.
pub fn path_spectrum(n: usize) -> Result<Vec<f64>> {
    if n < 1 {
        return Err(Error::InvalidOrder {
            n,
            reason: "a path needs at least 1 vertex",
        });
    }
    let mut values: Vec<f64> = (1..=n)
        .map(|j| 2.0 * (j as f64 * PI / (n + 1) as f64).cos())
        .collect();
    sort_desc(&mut values);
    Ok(values)
}

/// Balanced `K_n`: `{n−1, (−1)^(n−1)}`.
pub fn complete_spectrum(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidOrder {
            n,
            reason: "complete graph spectrum needs n >= 2",
        });
    }
    let mut values = vec![-1.0; n];
    values[0] = (n - 1) as f64;
    Ok(values)
}

/// Balanced `K_{n1,n2}`: `{±√(n1·n2), 0^(n−2)}`.
pub fn complete_bipartite_spectrum(n1: usize, n2: usize) -> Result<Vec<f64>> {
    if n1 < 1 || n2 < 1 {
        return Err(Error::InvalidOrder {
            n: n1.min(n2),
            reason: "both parts need at least 1 vertex",
        });
    }
    let r = ((n1 * n2) as f64).sqrt();
    let mut values = vec![0.0; n1 + n2];
    values[0] = r;
    values[n1 + n2 - 1] = -r;
    Ok(values)
}

/// Eigenvalues of multiplicity one: `2` for balanced cycles, `−2` for
/// balanced even and unbalanced odd cycles. Descending.
pub fn cycle_simple_eigenvalues(n: usize, balanced: bool) -> Result<Vec<f64>> {
    check_cycle_order(n)?;
    let even = n.is_multiple_of(2);
    Ok(match (balanced, even) {
        (true, true) => vec![2.0, -2.0],
        (true, false) => vec![2.0],
        (false, true) => vec![],
        (false, false) => vec![-2.0],
    })
}

/// Eigenvalues of multiplicity two. Balanced: `2cos(2πj/n)` for
/// `j = 1..=⌈n/2⌉−1`; unbalanced: `2cos((2j+1)π/n)` for `j = 0..=⌈(n−1)/2⌉−1`.
/// Descending.
pub fn cycle_double_eigenvalues(n: usize, balanced: bool) -> Result<Vec<f64>> {
    check_cycle_order(n)?;
    let nf = n as f64;
    let values = if balanced {
        let last = n.div_ceil(2) - 1;
        (1..=last)
            .map(|j| 2.0 * (2.0 * PI * j as f64 / nf).cos())
            .collect()
    } else {
        let count = (n - 1).div_ceil(2);
        (0..count)
            .map(|j| 2.0 * ((2 * j + 1) as f64 * PI / nf).cos())
            .collect()
    };
    // Both index ranges already produce strictly decreasing values.
    Ok(values)
}
