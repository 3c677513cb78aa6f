//! Numeric eigenvalues via cyclic Jacobi rotations, plus a floating-point
//! cross-check of spectral symmetry. The exact coefficient test in `poly` is
//! authoritative; this module is for reports and sanity checks.

use crate::graph::SignedGraph;

pub const DEFAULT_PAIRING_TOLERANCE: f64 = 1e-6;

/// Eigenvalues of a signed adjacency matrix, sorted descending.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub pairing_tolerance: f64,
}

/// Eigenvalues of the symmetric ±1/0 adjacency matrix. The cyclic Jacobi
/// iteration drives the off-diagonal norm below 1e−12·n.
pub fn eigenvalues(g: &SignedGraph) -> Spectrum {
    let n = g.n();
    let mut a: Vec<Vec<f64>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(f64::from).collect())
        .collect();
    let target = 1e-12 * n.max(1) as f64;
    for _sweep in 0..200 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p][q] * a[p][q];
            }
        }
        if (2.0 * off).sqrt() < target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                // rotation angle zeroing a[p][q]
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let api = a[p][i];
                    let aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Spectrum {
        values,
        pairing_tolerance: DEFAULT_PAIRING_TOLERANCE,
    }
}

/// Sorted-pairing test: values[i] + values[n−1−i] ≈ 0 for all i.
pub fn numeric_symmetry_check(s: &Spectrum) -> bool {
    let n = s.values.len();
    (0..n).all(|i| (s.values[i] + s.values[n - 1 - i]).abs() <= s.pairing_tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(values: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(values.len(), expected.len());
        for (a, b) in values.iter().zip(expected) {
            assert!((a - b).abs() < tol, "{values:?} vs {expected:?}");
        }
    }

    #[test]
    fn c4_spectrum() {
        let g = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let s = eigenvalues(&g);
        assert_close(&s.values, &[2.0, 0.0, 0.0, -2.0], 1e-9);
        assert!(numeric_symmetry_check(&s));
    }

    #[test]
    fn triangle_spectrum() {
        let g = SignedGraph::all_positive(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let s = eigenvalues(&g);
        assert_close(&s.values, &[2.0, -1.0, -1.0], 1e-9);
        assert!(!numeric_symmetry_check(&s));
    }

    #[test]
    fn pairing_test_on_fixed_lists() {
        let sym = Spectrum {
            values: vec![2.0, 0.0, 0.0, -2.0],
            pairing_tolerance: DEFAULT_PAIRING_TOLERANCE,
        };
        assert!(numeric_symmetry_check(&sym));
        let asym = Spectrum {
            values: vec![1.0, 1.0, -2.0],
            pairing_tolerance: DEFAULT_PAIRING_TOLERANCE,
        };
        assert!(!numeric_symmetry_check(&asym));
    }

    #[test]
    fn trace_and_energy_identities() {
        let g = SignedGraph::new(
            5,
            &[(0, 1, -1), (1, 2, 1), (2, 3, -1), (3, 4, 1), (0, 4, 1), (0, 2, 1)],
        )
        .unwrap();
        let s = eigenvalues(&g);
        let trace: f64 = s.values.iter().sum();
        let energy: f64 = s.values.iter().map(|x| x * x).sum();
        assert!(trace.abs() < 1e-9);
        assert!((energy - 2.0 * g.m() as f64).abs() < 1e-9 * g.n() as f64);
    }
}
