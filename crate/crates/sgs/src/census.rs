//! Switching-class enumeration over a fixed underlying graph, and the census
//! that classifies every class.

use crate::cycles::{fundamental_cycles, spanning_tree};
use crate::error::{Result, SgsError};
use crate::graph::SignedGraph;
use crate::poly;
use crate::symmetry::{classify_in_context, GraphContext, SymmetryVerdict, AUTOMORPHISM_CAP};
use serde::{Deserialize, Serialize};

/// Cap on the cyclomatic number for a census run (2^k classes).
pub const CENSUS_K_CAP: usize = 16;

/// One switching class: the representative keeps every tree edge positive, so
/// the cotree bitmask doubles as the class fingerprint.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusClass {
    /// Bit i set iff cotree edge i is negative in the representative.
    pub cotree_negatives: u32,
    /// Number of negative fundamental cycles (equals the popcount above).
    pub t: u32,
    pub verdict: SymmetryVerdict,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusSummary {
    pub classes: usize,
    pub spectrally_symmetric: usize,
    pub sign_symmetric: usize,
    pub symmetric_not_sign_symmetric: usize,
    pub undecided: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusReport {
    pub underlying: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub classes: Vec<CensusClass>,
    pub summary: CensusSummary,
}

/// One representative per switching class of the underlying graph of `g`:
/// for each subset of cotree edges (canonical tree), the signature with
/// exactly those edges negative, in bitmask order.
pub fn enumerate_signatures(g: &SignedGraph) -> Result<Vec<SignedGraph>> {
    let tree = spanning_tree(g)?;
    let k = tree.k();
    if k > CENSUS_K_CAP {
        return Err(SgsError::CapExceeded {
            what: "census enumeration (cyclomatic number)",
            cap: CENSUS_K_CAP,
            actual: k,
        });
    }
    let cotree_index: Vec<usize> = tree
        .cotree_edges
        .iter()
        .map(|&(a, b)| g.edge_index(a, b).unwrap())
        .collect();
    let mut out = Vec::with_capacity(1 << k);
    for bits in 0u32..(1u32 << k) {
        let edges: Vec<(usize, usize, i8)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let neg = cotree_index
                    .iter()
                    .position(|&ci| ci == i)
                    .is_some_and(|pos| bits >> pos & 1 == 1);
                (e.u, e.v, if neg { -1 } else { 1 })
            })
            .collect();
        out.push(SignedGraph::new(g.n(), &edges)?);
    }
    Ok(out)
}

/// Classifies every switching class of the underlying graph of `g`.
pub fn census(g: &SignedGraph) -> Result<CensusReport> {
    census_with_caps(g, CENSUS_K_CAP, AUTOMORPHISM_CAP)
}

pub fn census_with_caps(g: &SignedGraph, max_k: usize, aut_cap: usize) -> Result<CensusReport> {
    let tree = spanning_tree(g)?;
    let k = tree.k();
    if k > max_k.min(CENSUS_K_CAP) {
        return Err(SgsError::CapExceeded {
            what: "census enumeration (cyclomatic number)",
            cap: max_k.min(CENSUS_K_CAP),
            actual: k,
        });
    }
    let representatives = enumerate_signatures(g)?;
    let ctx = if g.n() <= aut_cap {
        Some(GraphContext::new(g, aut_cap)?)
    } else {
        None
    };
    let mut classes = Vec::with_capacity(representatives.len());
    for (bits, rep) in representatives.iter().enumerate() {
        let bits = bits as u32;
        let spectrally_symmetric = poly::is_spectrally_symmetric(rep);
        let verdict = match &ctx {
            Some(ctx) => classify_in_context(rep, ctx, spectrally_symmetric)?,
            None => SymmetryVerdict {
                spectrally_symmetric,
                sign_symmetric: None,
                odd_exchangeable: None,
                witness: None,
                automorphism_count: None,
            },
        };
        // with all tree edges positive, fundamental cycle i is negative iff
        // cotree edge i is
        let t = bits.count_ones();
        classes.push(CensusClass {
            cotree_negatives: bits,
            t,
            verdict,
        });
    }
    // binomial strata: C(k, t) classes carry t negative fundamental cycles
    for t in 0..=k {
        let count = classes.iter().filter(|c| c.t as usize == t).count();
        let expected = binomial(k, t);
        if count != expected {
            return Err(SgsError::Falsification(format!(
                "stratum t = {t} holds {count} classes, expected C({k},{t}) = {expected}"
            )));
        }
    }
    let fund = fundamental_cycles(g, &tree);
    debug_assert_eq!(fund.len(), k);
    let summary = CensusSummary {
        classes: classes.len(),
        spectrally_symmetric: classes
            .iter()
            .filter(|c| c.verdict.spectrally_symmetric)
            .count(),
        sign_symmetric: classes
            .iter()
            .filter(|c| c.verdict.sign_symmetric == Some(true))
            .count(),
        symmetric_not_sign_symmetric: classes
            .iter()
            .filter(|c| c.verdict.spectrally_symmetric && c.verdict.sign_symmetric == Some(false))
            .count(),
        undecided: classes
            .iter()
            .filter(|c| c.verdict.sign_symmetric.is_none())
            .count(),
    };
    Ok(CensusReport {
        underlying: g.serialize(),
        n: g.n(),
        m: g.m(),
        k,
        classes,
        summary,
    })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1usize;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{base_bicyclic, BaseBicyclicSpec};

    #[test]
    fn tree_has_one_class() {
        let p4 = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let report = census(&p4).unwrap();
        assert_eq!(report.k, 0);
        assert_eq!(report.classes.len(), 1);
        assert!(report.classes[0].verdict.spectrally_symmetric);
    }

    #[test]
    fn c5_has_two_asymmetric_classes() {
        let c5 = SignedGraph::all_positive(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let report = census(&c5).unwrap();
        assert_eq!(report.classes.len(), 2);
        assert_eq!(report.summary.spectrally_symmetric, 0);
        assert_eq!(report.summary.sign_symmetric, 0);
    }

    #[test]
    fn c6_has_two_fully_symmetric_classes() {
        let c6 = SignedGraph::all_positive(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
            .unwrap();
        let report = census(&c6).unwrap();
        assert_eq!(report.classes.len(), 2);
        assert_eq!(report.summary.spectrally_symmetric, 2);
        assert_eq!(report.summary.sign_symmetric, 2);
    }

    #[test]
    fn infinity_33_census_has_one_symmetric_class() {
        let inf = base_bicyclic(&BaseBicyclicSpec::Infinity {
            lengths: [3, 3],
            neg_marks: [false, false],
        })
        .unwrap();
        let report = census(&inf).unwrap();
        assert_eq!(report.classes.len(), 4);
        // the two single-negative-triangle classes are switching inequivalent
        // but isomorphic; both are symmetric, the t = 0 and t = 2 classes fail
        assert_eq!(report.summary.spectrally_symmetric, 2);
        assert_eq!(report.summary.sign_symmetric, 2);
        let winners: Vec<u32> = report
            .classes
            .iter()
            .filter(|c| c.verdict.spectrally_symmetric)
            .map(|c| c.t)
            .collect();
        assert_eq!(winners, vec![1, 1]);
    }

    #[test]
    fn k4_census_counts() {
        let k4 = SignedGraph::all_positive(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let report = census(&k4).unwrap();
        assert_eq!(report.k, 3);
        assert_eq!(report.classes.len(), 8);
        let strata: Vec<usize> = (0..=3)
            .map(|t| report.classes.iter().filter(|c| c.t as usize == t).count())
            .collect();
        assert_eq!(strata, vec![1, 3, 3, 1]);
    }

    #[test]
    fn representatives_have_positive_trees_and_distinct_fingerprints() {
        let inf = base_bicyclic(&BaseBicyclicSpec::Infinity {
            lengths: [3, 3],
            neg_marks: [false, false],
        })
        .unwrap();
        let tree = spanning_tree(&inf).unwrap();
        let sigs = enumerate_signatures(&inf).unwrap();
        assert_eq!(sigs.len(), 4);
        let mut vectors = std::collections::HashSet::new();
        for s in &sigs {
            for &(a, b) in &tree.tree_edges {
                assert_eq!(s.sign_of(a, b), Some(1));
            }
            assert!(vectors.insert(crate::cycles::cycle_sign_vector(s, &tree)));
        }
    }

    #[test]
    fn census_rejects_disconnected_and_large_k() {
        let disc = SignedGraph::all_positive(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(census(&disc).is_err());
        let k4 = SignedGraph::all_positive(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(matches!(
            census_with_caps(&k4, 2, AUTOMORPHISM_CAP),
            Err(SgsError::CapExceeded { .. })
        ));
    }

    #[test]
    fn census_beyond_automorphism_cap_is_undecided_not_failed() {
        // C₁₄: k = 1, n above the default automorphism cap
        let edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
        let c14 = SignedGraph::all_positive(14, &edges).unwrap();
        let report = census(&c14).unwrap();
        assert_eq!(report.classes.len(), 2);
        assert_eq!(report.summary.undecided, 2);
        assert!(report.classes.iter().all(|c| c.verdict.spectrally_symmetric));
    }
}
