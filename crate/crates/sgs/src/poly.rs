//! Exact integer polynomials: characteristic polynomial, matching polynomial,
//! the Sachs-coefficient oracle, and the odd-part.

use crate::cycles::{enumerate_two_regular, spanning_tree, TwoRegularCatalog};
use crate::error::{Result, SgsError};
use crate::graph::SignedGraph;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Cap on the brute-force Sachs oracle.
pub const SACHS_CAP: usize = 10;

/// Univariate polynomial with exact integer coefficients, lowest degree first.
/// Canonical form: no trailing zero; the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPolynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    /// x^k
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// p(−x)
    pub fn substitute_neg_x(&self) -> IntPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Decimal coefficient strings, lowest degree first (the JSON wire form).
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Human form like `x^3 - 3x + 2`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = vec![];
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs().to_string();
            let body = match k {
                0 => abs,
                _ => {
                    let var = if k == 1 { "x".into() } else { format!("x^{k}") };
                    if abs == "1" {
                        var
                    } else {
                        format!("{abs}{var}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

fn bigint_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Characteristic polynomial of one connected piece via the Faddeev–LeVerrier
/// recurrence; every division by k is exact.
fn char_poly_matrix(a: &[Vec<BigInt>]) -> IntPolynomial {
    let n = a.len();
    // coefficients of x^n + c1 x^{n-1} + ... + cn
    let mut cs = vec![BigInt::zero(); n + 1];
    cs[0] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for k in 1..=n {
        let am = bigint_matmul(a, &m);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let ck = -trace / BigInt::from(k as i64);
        m = am;
        for i in 0..n {
            m[i][i] += &ck;
        }
        cs[k] = ck;
    }
    // lowest degree first: coefficient of x^{n-k} is cs[k]
    IntPolynomial::from_coeffs((0..=n).rev().map(|k| cs[k].clone()).collect())
}

/// Exact characteristic polynomial det(xI − A(Γ)). The polynomial of a
/// disconnected graph is the product over its components.
pub fn char_poly(g: &SignedGraph) -> IntPolynomial {
    let mut out = IntPolynomial::one();
    for comp in g.components() {
        let sub = g.induced(&comp);
        let a: Vec<Vec<BigInt>> = sub
            .adjacency_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(BigInt::from).collect())
            .collect();
        out = out.mul(&char_poly_matrix(&a));
    }
    out
}

/// Matching polynomial M(G, x) = Σ (−1)^i m_i(G) x^{n−2i}; independent of the
/// signature.
pub fn matching_poly(g: &SignedGraph) -> IntPolynomial {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.key()).collect();
    matching_poly_rec(g.n(), &edges)
}

/// Matching polynomial of a graph fragment given by an active vertex count and
/// an edge list. M(G) = M(G − e) − x^0·M(G − u − v) on the first edge.
pub fn matching_poly_rec(n_active: usize, edges: &[(usize, usize)]) -> IntPolynomial {
    if edges.is_empty() {
        return IntPolynomial::monomial(n_active);
    }
    let (u, v) = edges[0];
    let without_edge = matching_poly_rec(n_active, &edges[1..]);
    let reduced: Vec<(usize, usize)> = edges[1..]
        .iter()
        .copied()
        .filter(|&(a, b)| a != u && a != v && b != u && b != v)
        .collect();
    let without_ends = matching_poly_rec(n_active - 2, &reduced);
    without_edge.sub(&without_ends)
}

/// All cycles of the underlying graph, each reported once, as
/// (vertex bitmask, vertex count, edge list).
fn all_cycles(g: &SignedGraph) -> Vec<(u64, usize, Vec<(usize, usize)>)> {
    let n = g.n();
    let mut cycles = vec![];
    let mut path: Vec<usize> = vec![];
    for s in 0..n {
        path.clear();
        path.push(s);
        let mut on_path = vec![false; n];
        on_path[s] = true;
        dfs_cycles(g, s, s, &mut path, &mut on_path, &mut cycles);
    }
    cycles
}

fn dfs_cycles(
    g: &SignedGraph,
    start: usize,
    cur: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<(u64, usize, Vec<(usize, usize)>)>,
) {
    for w in g.neighbors(cur) {
        if w == start && path.len() >= 3 {
            // canonical direction: second vertex smaller than last
            if path[1] < *path.last().unwrap() {
                let mut mask = 0u64;
                let mut edges = vec![];
                for i in 0..path.len() {
                    mask |= 1 << path[i];
                    let a = path[i];
                    let b = path[(i + 1) % path.len()];
                    edges.push(if a < b { (a, b) } else { (b, a) });
                }
                out.push((mask, path.len(), edges));
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            dfs_cycles(g, start, w, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Sachs oracle: a_i = Σ over basic figures B on i vertices of
/// (−1)^{p(B)} 2^{|C(B)|} σ(B). Brute-force backtracking over vertex-disjoint
/// unions of single edges and cycles; independent of `char_poly`.
pub fn sachs_coefficient(g: &SignedGraph, i: usize) -> Result<BigInt> {
    if g.n() > SACHS_CAP {
        return Err(SgsError::CapExceeded {
            what: "Sachs basic-figure enumeration (vertex count)",
            cap: SACHS_CAP,
            actual: g.n(),
        });
    }
    if i == 0 {
        return Ok(BigInt::one());
    }
    // figures: (vertex mask, vertex count, is_cycle, sign)
    let mut figures: Vec<(u64, usize, bool, i8)> = g
        .edges()
        .iter()
        .map(|e| ((1u64 << e.u) | (1u64 << e.v), 2, false, 1))
        .collect();
    for (mask, len, edges) in all_cycles(g) {
        let sign = g.sign_product(edges.iter().copied());
        figures.push((mask, len, true, sign));
    }
    let mut total = BigInt::zero();
    backtrack_figures(&figures, 0, 0u64, 0, 0, 1, i, &mut total);
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn backtrack_figures(
    figures: &[(u64, usize, bool, i8)],
    from: usize,
    used: u64,
    vertices: usize,
    cycles: u32,
    sign: i8,
    target: usize,
    total: &mut BigInt,
) {
    if vertices == target {
        let term = BigInt::from(sign as i64) * (BigInt::one() << cycles);
        // p(B) = number of components = edges-as-figures + cycles; track via
        // parity: each figure contributes one component.
        *total += term;
        return;
    }
    for (idx, &(mask, count, is_cycle, fsign)) in figures.iter().enumerate().skip(from) {
        if used & mask != 0 || vertices + count > target {
            continue;
        }
        backtrack_figures(
            figures,
            idx + 1,
            used | mask,
            vertices + count,
            cycles + u32::from(is_cycle),
            -sign * fsign,
            target,
            total,
        );
    }
}

/// The odd-part of φ(Γ, x): Σ over odd 2-regular subgraphs C of
/// σ(C)(−2)^{p(C)} M(G − V(C), x). Zero iff the spectrum is symmetric.
pub fn odd_part(g: &SignedGraph) -> Result<IntPolynomial> {
    let t = spanning_tree(g)?;
    let catalog = enumerate_two_regular(g, &t)?;
    Ok(odd_part_from_catalog(g, &catalog))
}

pub(crate) fn odd_part_from_catalog(g: &SignedGraph, catalog: &TwoRegularCatalog) -> IntPolynomial {
    let mut sum = IntPolynomial::zero();
    for &idx in catalog.c1_pos.iter().chain(catalog.c1_neg.iter()) {
        let member = &catalog.all[idx];
        let complement = complement_matching_poly(g, member.edge_mask);
        let factor = BigInt::from(member.sign as i64) * BigInt::from(-2i64).pow(member.p as u32);
        sum = sum.add(&complement.scale(&factor));
    }
    sum
}

/// M(G − V(C), x) for the member with the given edge mask.
pub(crate) fn complement_matching_poly(g: &SignedGraph, member_mask: u128) -> IntPolynomial {
    let mut removed = vec![false; g.n()];
    for (i, e) in g.edges().iter().enumerate() {
        if member_mask >> i & 1 == 1 {
            removed[e.u] = true;
            removed[e.v] = true;
        }
    }
    let remaining: Vec<usize> = (0..g.n()).filter(|&v| !removed[v]).collect();
    let sub = g.induced(&remaining);
    matching_poly(&sub)
}

/// Exact spectral-symmetry test: every odd-index coefficient a_{2j+1} of
/// det(xI − A) vanishes.
pub fn is_spectrally_symmetric(g: &SignedGraph) -> bool {
    let phi = char_poly(g);
    let n = g.n();
    // a_i is the coefficient of x^{n−i}
    (1..=n)
        .step_by(2)
        .all(|i| phi.coeff(n - i).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn triangle(signs: [i8; 3]) -> SignedGraph {
        SignedGraph::new(3, &[(0, 1, signs[0]), (0, 2, signs[1]), (1, 2, signs[2])]).unwrap()
    }

    #[test]
    fn char_poly_single_edge() {
        let g = SignedGraph::new(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(char_poly(&g), poly(&[-1, 0, 1])); // x² − 1
    }

    #[test]
    fn char_poly_triangles() {
        assert_eq!(char_poly(&triangle([1, 1, 1])), poly(&[-2, -3, 0, 1]));
        assert_eq!(char_poly(&triangle([-1, 1, 1])), poly(&[2, -3, 0, 1]));
    }

    #[test]
    fn char_poly_negation_relation() {
        // φ(−Γ)(x) = (−1)ⁿ φ(Γ)(−x)
        let g = triangle([-1, 1, 1]);
        let lhs = char_poly(&g.negate());
        let rhs = char_poly(&g).substitute_neg_x().scale(&BigInt::from(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn char_poly_disconnected_is_product() {
        let g = SignedGraph::new(4, &[(0, 1, 1), (2, 3, -1)]).unwrap();
        let e1 = SignedGraph::new(2, &[(0, 1, 1)]).unwrap();
        let e2 = SignedGraph::new(2, &[(0, 1, -1)]).unwrap();
        assert_eq!(char_poly(&g), char_poly(&e1).mul(&char_poly(&e2)));
    }

    #[test]
    fn matching_poly_examples() {
        let p3 = SignedGraph::all_positive(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(matching_poly(&p3), poly(&[0, -2, 0, 1])); // x³ − 2x
        assert_eq!(matching_poly(&triangle([1, -1, 1])), poly(&[0, -3, 0, 1]));
        let k1 = SignedGraph::all_positive(1, &[]).unwrap();
        assert_eq!(matching_poly(&k1), poly(&[0, 1])); // x
        let empty = SignedGraph::all_positive(0, &[]).unwrap();
        assert_eq!(matching_poly(&empty), IntPolynomial::one());
    }

    #[test]
    fn sachs_small_cases() {
        let g = triangle([1, 1, 1]);
        assert_eq!(sachs_coefficient(&g, 0).unwrap(), BigInt::from(1));
        assert_eq!(sachs_coefficient(&g, 2).unwrap(), BigInt::from(-3));
        assert_eq!(sachs_coefficient(&g, 3).unwrap(), BigInt::from(-2));
        let neg = triangle([-1, 1, 1]);
        assert_eq!(sachs_coefficient(&neg, 3).unwrap(), BigInt::from(2));
    }

    #[test]
    fn sachs_matches_char_poly_on_k4() {
        let g = SignedGraph::new(
            4,
            &[(0, 1, -1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, -1), (2, 3, 1)],
        )
        .unwrap();
        let phi = char_poly(&g);
        for i in 0..=4 {
            assert_eq!(sachs_coefficient(&g, i).unwrap(), phi.coeff(4 - i), "a_{i}");
        }
    }

    #[test]
    fn sachs_cap() {
        let edges: Vec<(usize, usize)> = (0..10).map(|i| (i, i + 1)).collect();
        let g = SignedGraph::all_positive(11, &edges).unwrap();
        assert!(matches!(
            sachs_coefficient(&g, 2),
            Err(SgsError::CapExceeded { .. })
        ));
    }

    #[test]
    fn odd_part_examples() {
        let c4 = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(odd_part(&c4).unwrap().is_zero());
        assert_eq!(odd_part(&triangle([1, 1, 1])).unwrap(), poly(&[-2]));
    }

    #[test]
    fn spectral_symmetry_examples() {
        let c4 = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(is_spectrally_symmetric(&c4));
        assert!(!is_spectrally_symmetric(&triangle([1, 1, 1])));
    }

    #[test]
    fn decomposition_identity_on_small_graph() {
        // φ(Γ) = M(G) + Σ σ(C)(−2)^{p} M(G−V(C)) on an unbalanced θ-graph
        let g =
            SignedGraph::new(4, &[(0, 1, 1), (0, 2, 1), (1, 2, -1), (0, 3, 1), (1, 3, 1)]).unwrap();
        let t = spanning_tree(&g).unwrap();
        let cat = enumerate_two_regular(&g, &t).unwrap();
        let mut rhs = matching_poly(&g);
        for member in &cat.all {
            let factor =
                BigInt::from(member.sign as i64) * BigInt::from(-2i64).pow(member.p as u32);
            rhs = rhs.add(&complement_matching_poly(&g, member.edge_mask).scale(&factor));
        }
        assert_eq!(char_poly(&g), rhs);
    }

    #[test]
    fn display_and_serde_forms() {
        let p = poly(&[2, -3, 0, 1]);
        assert_eq!(p.display(), "x^3 - 3x + 2");
        assert_eq!(p.to_decimal_strings(), vec!["2", "-3", "0", "1"]);
        assert_eq!(IntPolynomial::zero().display(), "0");
    }
}
