//! Automorphism enumeration, weak automorphisms (odd-exchangeability), and the
//! sign-symmetry decision through the switching-class fingerprint.

use crate::cycles::{
    cycle_sign_vector, enumerate_two_regular, fundamental_cycles, spanning_tree, FundamentalCycle,
    SpanningTree, TwoRegularCatalog,
};
use crate::error::{Result, SgsError};
use crate::graph::{SignedGraph, VertexPermutation};
use crate::poly;
use serde::{Deserialize, Serialize};

/// Cap on the automorphism backtracking search.
pub const AUTOMORPHISM_CAP: usize = 12;

/// The combined verdict of the three independent symmetry tests. `None`
/// fields mean "undecided" because a resource cap was exceeded.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymmetryVerdict {
    pub spectrally_symmetric: bool,
    pub sign_symmetric: Option<bool>,
    pub odd_exchangeable: Option<bool>,
    /// A weak automorphism, present iff odd_exchangeable.
    pub witness: Option<VertexPermutation>,
    pub automorphism_count: Option<u64>,
}

/// All sign-oblivious isomorphisms from the underlying graph of `a` onto the
/// underlying graph of `b`, in lexicographic order of image arrays.
pub fn isomorphisms(a: &SignedGraph, b: &SignedGraph) -> Result<Vec<VertexPermutation>> {
    isomorphisms_with_cap(a, b, AUTOMORPHISM_CAP)
}

pub fn isomorphisms_with_cap(
    a: &SignedGraph,
    b: &SignedGraph,
    cap: usize,
) -> Result<Vec<VertexPermutation>> {
    if a.n() > cap {
        return Err(SgsError::CapExceeded {
            what: "isomorphism backtracking (vertex count)",
            cap,
            actual: a.n(),
        });
    }
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(vec![]);
    }
    let n = a.n();
    let deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    {
        let mut sa = deg_a.clone();
        let mut sb = deg_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(vec![]);
        }
    }
    let adj_a: Vec<Vec<bool>> = adjacency_bool(a);
    let adj_b: Vec<Vec<bool>> = adjacency_bool(b);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = vec![];
    extend_mapping(
        0, n, &deg_a, &deg_b, &adj_a, &adj_b, &mut image, &mut used, &mut out,
    );
    Ok(out)
}

fn adjacency_bool(g: &SignedGraph) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; g.n()]; g.n()];
    for e in g.edges() {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    adj
}

#[allow(clippy::too_many_arguments)]
fn extend_mapping(
    i: usize,
    n: usize,
    deg_a: &[usize],
    deg_b: &[usize],
    adj_a: &[Vec<bool>],
    adj_b: &[Vec<bool>],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<VertexPermutation>,
) {
    if i == n {
        out.push(VertexPermutation::new(image.clone()).unwrap());
        return;
    }
    for w in 0..n {
        if used[w] || deg_a[i] != deg_b[w] {
            continue;
        }
        if (0..i).any(|j| adj_a[i][j] != adj_b[w][image[j]]) {
            continue;
        }
        image[i] = w;
        used[w] = true;
        extend_mapping(i + 1, n, deg_a, deg_b, adj_a, adj_b, image, used, out);
        used[w] = false;
        image[i] = usize::MAX;
    }
}

/// All automorphisms of the underlying graph, identity included.
pub fn automorphisms(g: &SignedGraph) -> Result<Vec<VertexPermutation>> {
    isomorphisms(g, g)
}

fn is_underlying_automorphism(g: &SignedGraph, p: &VertexPermutation) -> bool {
    p.len() == g.n() && g.edges().iter().all(|e| g.has_edge(p.apply(e.u), p.apply(e.v)))
}

/// Image of an edge-index bitmask under a vertex permutation.
fn map_edge_mask(g: &SignedGraph, p: &VertexPermutation, mask: u128) -> u128 {
    let mut out = 0u128;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let e = &g.edges()[i];
        let j = g
            .edge_index(p.apply(e.u), p.apply(e.v))
            .expect("automorphism image edge");
        out |= 1u128 << j;
    }
    out
}

fn mask_sign(g: &SignedGraph, mask: u128) -> i8 {
    let mut s = 1i8;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        s *= g.edges()[i].sign;
    }
    s
}

/// Definition-level test: does `p` map every positive odd 2-regular subgraph
/// onto a negative one, bijectively?
pub fn is_weak_automorphism(g: &SignedGraph, p: &VertexPermutation) -> Result<bool> {
    if !is_underlying_automorphism(g, p) {
        return Err(SgsError::NotAnAutomorphism);
    }
    let t = spanning_tree(g)?;
    let catalog = enumerate_two_regular(g, &t)?;
    Ok(weak_check_catalog(g, p, &catalog))
}

fn weak_check_catalog(g: &SignedGraph, p: &VertexPermutation, catalog: &TwoRegularCatalog) -> bool {
    if catalog.c1_pos.len() != catalog.c1_neg.len() {
        return false;
    }
    catalog.c1_pos.iter().all(|&idx| {
        let image = map_edge_mask(g, p, catalog.all[idx].edge_mask);
        mask_sign(g, image) < 0
    })
}

/// Fundamental-cycle criterion: checks only the k spanning cycles of the
/// canonical tree T. Every odd fundamental cycle must map (as a cycle of the
/// image tree T' = p(T)) to one of opposite sign, every even one to the same
/// sign; signs of image cycles are read from `g` directly.
pub fn spanning_cycle_criterion(g: &SignedGraph, p: &VertexPermutation) -> Result<bool> {
    if !is_underlying_automorphism(g, p) {
        return Err(SgsError::NotAnAutomorphism);
    }
    let t = spanning_tree(g)?;
    let fund = fundamental_cycles(g, &t);
    Ok(fund.iter().all(|c| {
        let image = map_edge_mask(g, p, c.edge_mask);
        let image_sign = mask_sign(g, image);
        if c.odd {
            image_sign == -c.sign
        } else {
            image_sign == c.sign
        }
    }))
}

/// Decides sign-symmetry (Γ switching isomorphic to −Γ) by comparing the
/// switching-class fingerprint of Γ^φ against that of −Γ for every
/// automorphism φ; returns the lexicographically first witness.
pub fn is_sign_symmetric(g: &SignedGraph) -> Result<Option<VertexPermutation>> {
    is_sign_symmetric_with_cap(g, AUTOMORPHISM_CAP)
}

pub fn is_sign_symmetric_with_cap(
    g: &SignedGraph,
    cap: usize,
) -> Result<Option<VertexPermutation>> {
    if !g.is_connected() {
        return Err(SgsError::NotConnected);
    }
    let t = spanning_tree(g)?;
    let target = cycle_sign_vector(&g.negate(), &t);
    for p in isomorphisms_with_cap(g, g, cap)? {
        let mapped = g.apply_permutation(&p)?;
        if cycle_sign_vector(&mapped, &t) == target {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Precomputed signature-independent structure of a connected underlying
/// graph: tree, fundamental cycles, catalog, automorphisms, and the edge
/// action of every automorphism. Census runs share one context across all
/// 2^k signatures.
pub struct GraphContext {
    pub tree: SpanningTree,
    pub fund: Vec<FundamentalCycle>,
    pub catalog: TwoRegularCatalog,
    pub automorphisms: Vec<VertexPermutation>,
    /// Per automorphism, per catalog member: index of the image member.
    member_image: Vec<Vec<usize>>,
    /// Per automorphism, per fundamental cycle: preimage edge mask (edges of
    /// the cycle pulled back through the automorphism).
    fund_preimage: Vec<Vec<u128>>,
    /// Bit i set iff fundamental cycle i has odd length.
    odd_length_fund: u32,
}

impl GraphContext {
    pub fn new(g: &SignedGraph, aut_cap: usize) -> Result<GraphContext> {
        if !g.is_connected() {
            return Err(SgsError::NotConnected);
        }
        let tree = spanning_tree(g)?;
        let fund = fundamental_cycles(g, &tree);
        let catalog = enumerate_two_regular(g, &tree)?;
        let automorphisms = isomorphisms_with_cap(g, g, aut_cap)?;
        let mut member_image = Vec::with_capacity(automorphisms.len());
        let mut fund_preimage = Vec::with_capacity(automorphisms.len());
        for p in &automorphisms {
            let images = catalog
                .all
                .iter()
                .map(|m| catalog.by_mask[&map_edge_mask(g, p, m.edge_mask)])
                .collect();
            member_image.push(images);
            let inv = p.inverse();
            fund_preimage.push(
                fund.iter()
                    .map(|c| map_edge_mask(g, &inv, c.edge_mask))
                    .collect(),
            );
        }
        let mut odd_length_fund = 0u32;
        for (i, c) in fund.iter().enumerate() {
            if c.odd {
                odd_length_fund |= 1 << i;
            }
        }
        Ok(GraphContext {
            tree,
            fund,
            catalog,
            automorphisms,
            member_image,
            fund_preimage,
            odd_length_fund,
        })
    }

    /// Bitmask of negative edges of a signature on the same underlying graph.
    pub fn neg_edge_mask(&self, g: &SignedGraph) -> u128 {
        let mut mask = 0u128;
        for (i, e) in g.edges().iter().enumerate() {
            if e.sign < 0 {
                mask |= 1u128 << i;
            }
        }
        mask
    }

    /// Fingerprint of the signature given by a negative-edge mask.
    pub fn sign_vector(&self, neg_edges: u128) -> u32 {
        let mut v = 0u32;
        for (i, c) in self.fund.iter().enumerate() {
            if (c.edge_mask & neg_edges).count_ones() % 2 == 1 {
                v |= 1 << i;
            }
        }
        v
    }

    /// Member sign under the signature whose negative fundamental cycles are
    /// `neg_fund`: the product of the constituent fundamental-cycle signs.
    fn member_sign_negative(&self, member: usize, neg_fund: u32) -> bool {
        (self.catalog.all[member].coordinates & neg_fund).count_ones() % 2 == 1
    }

    /// First automorphism (lex order) that is a weak automorphism for the
    /// signature with the given negative-edge mask.
    pub fn find_weak_automorphism(&self, neg_edges: u128) -> Option<usize> {
        let neg_fund = self.sign_vector(neg_edges);
        let odd_pos = self
            .catalog
            .all
            .iter()
            .enumerate()
            .filter(|(i, m)| m.odd && !self.member_sign_negative(*i, neg_fund))
            .count();
        let odd_neg = self.catalog.c1_pos.len() + self.catalog.c1_neg.len() - odd_pos;
        if odd_pos != odd_neg {
            return None;
        }
        'aut: for (a, images) in self.member_image.iter().enumerate() {
            for (i, m) in self.catalog.all.iter().enumerate() {
                if !m.odd || self.member_sign_negative(i, neg_fund) {
                    continue;
                }
                if !self.member_sign_negative(images[i], neg_fund) {
                    continue 'aut;
                }
            }
            return Some(a);
        }
        None
    }

    /// First automorphism φ with fingerprint(Γ^φ) = fingerprint(−Γ).
    pub fn find_sign_symmetry_witness(&self, neg_edges: u128) -> Option<usize> {
        let base = self.sign_vector(neg_edges);
        let target = base ^ self.odd_length_fund; // negation flips odd-length cycles
        for (a, preimages) in self.fund_preimage.iter().enumerate() {
            let mut v = 0u32;
            for (i, pre) in preimages.iter().enumerate() {
                if (pre & neg_edges).count_ones() % 2 == 1 {
                    v |= 1 << i;
                }
            }
            if v == target {
                return Some(a);
            }
        }
        None
    }
}

/// Runs the exact coefficient test, the odd-exchangeability search, and the
/// switching-isomorphism search independently, and checks that the three
/// verdicts satisfy the expected implications before returning.
pub fn classify(g: &SignedGraph) -> Result<SymmetryVerdict> {
    classify_with_cap(g, AUTOMORPHISM_CAP)
}

pub fn classify_with_cap(g: &SignedGraph, aut_cap: usize) -> Result<SymmetryVerdict> {
    if !g.is_connected() {
        return Err(SgsError::NotConnected);
    }
    let spectrally_symmetric = poly::is_spectrally_symmetric(g);
    if g.n() > aut_cap {
        return Ok(SymmetryVerdict {
            spectrally_symmetric,
            sign_symmetric: None,
            odd_exchangeable: None,
            witness: None,
            automorphism_count: None,
        });
    }
    let ctx = GraphContext::new(g, aut_cap)?;
    classify_in_context(g, &ctx, spectrally_symmetric)
}

pub(crate) fn classify_in_context(
    g: &SignedGraph,
    ctx: &GraphContext,
    spectrally_symmetric: bool,
) -> Result<SymmetryVerdict> {
    let neg_edges = ctx.neg_edge_mask(g);
    let weak = ctx.find_weak_automorphism(neg_edges);
    let sign_witness = ctx.find_sign_symmetry_witness(neg_edges);
    let odd_exchangeable = weak.is_some();
    let sign_symmetric = sign_witness.is_some();
    if odd_exchangeable != sign_symmetric {
        return Err(SgsError::Falsification(format!(
            "odd-exchangeable ({odd_exchangeable}) and sign-symmetric ({sign_symmetric}) disagree on {:?}",
            g.serialize()
        )));
    }
    if odd_exchangeable && !spectrally_symmetric {
        return Err(SgsError::Falsification(format!(
            "odd-exchangeable graph with asymmetric spectrum: {:?}",
            g.serialize()
        )));
    }
    Ok(SymmetryVerdict {
        spectrally_symmetric,
        sign_symmetric: Some(sign_symmetric),
        odd_exchangeable: Some(odd_exchangeable),
        witness: weak.map(|a| ctx.automorphisms[a].clone()),
        automorphism_count: Some(ctx.automorphisms.len() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn infinity_33_neg() -> SignedGraph {
        // ∞(u;3⁻,3): u=0, triangle {0,1,2} with σ(0,1) = −1, triangle {0,3,4}
        SignedGraph::new(
            5,
            &[(0, 1, -1), (1, 2, 1), (0, 2, 1), (0, 3, 1), (3, 4, 1), (0, 4, 1)],
        )
        .unwrap()
    }

    #[test]
    fn automorphism_counts() {
        let triangle = SignedGraph::all_positive(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(automorphisms(&triangle).unwrap().len(), 6);
        let p3 = SignedGraph::all_positive(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(automorphisms(&p3).unwrap().len(), 2);
        let c5 =
            SignedGraph::all_positive(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(automorphisms(&c5).unwrap().len(), 10);
    }

    #[test]
    fn automorphism_list_contains_identity_first() {
        let g = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let auts = automorphisms(&g).unwrap();
        assert_eq!(auts[0], VertexPermutation::identity(4));
        let mut sorted = auts.clone();
        sorted.sort();
        assert_eq!(auts, sorted);
    }

    #[test]
    fn weak_automorphism_on_infinity() {
        let g = infinity_33_neg();
        // swap the two triangles: 1↔4, 2↔3 (the center 0 fixed)
        let swap = VertexPermutation::new(vec![0, 4, 3, 2, 1]).unwrap();
        assert!(is_weak_automorphism(&g, &swap).unwrap());
        let id = VertexPermutation::identity(5);
        assert!(!is_weak_automorphism(&g, &id).unwrap());
    }

    #[test]
    fn weak_automorphism_vacuous_on_bipartite() {
        let g = SignedGraph::new(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
        for p in automorphisms(&g).unwrap() {
            assert!(is_weak_automorphism(&g, &p).unwrap());
        }
    }

    #[test]
    fn weak_automorphism_rejects_non_automorphism() {
        let g = infinity_33_neg();
        let bad = VertexPermutation::new(vec![1, 0, 2, 3, 4]).unwrap();
        assert!(matches!(
            is_weak_automorphism(&g, &bad),
            Err(SgsError::NotAnAutomorphism)
        ));
    }

    #[test]
    fn criterion_agrees_with_definition() {
        let g = infinity_33_neg();
        for p in automorphisms(&g).unwrap() {
            assert_eq!(
                spanning_cycle_criterion(&g, &p).unwrap(),
                is_weak_automorphism(&g, &p).unwrap()
            );
        }
    }

    #[test]
    fn criterion_theta_and_all_positive_infinity() {
        // θ(0,1;1,2,2) with one negative triangle: swapping the two inner
        // paths is a weak automorphism
        let theta =
            SignedGraph::new(4, &[(0, 1, 1), (0, 2, 1), (1, 2, -1), (0, 3, 1), (1, 3, 1)]).unwrap();
        let swap = VertexPermutation::new(vec![0, 1, 3, 2]).unwrap();
        assert!(spanning_cycle_criterion(&theta, &swap).unwrap());

        let inf = SignedGraph::all_positive(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
            .unwrap();
        let tri_swap = VertexPermutation::new(vec![0, 4, 3, 2, 1]).unwrap();
        assert!(!spanning_cycle_criterion(&inf, &tri_swap).unwrap());
    }

    #[test]
    fn sign_symmetry_examples() {
        // bipartite underlying graph: always sign-symmetric
        let c4 = SignedGraph::new(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
        assert!(is_sign_symmetric(&c4).unwrap().is_some());

        let triangle = SignedGraph::all_positive(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(is_sign_symmetric(&triangle).unwrap().is_none());

        assert!(is_sign_symmetric(&infinity_33_neg()).unwrap().is_some());
    }

    #[test]
    fn classify_examples() {
        let v = classify(&infinity_33_neg()).unwrap();
        assert!(v.spectrally_symmetric);
        assert_eq!(v.sign_symmetric, Some(true));
        assert_eq!(v.odd_exchangeable, Some(true));
        assert!(v.witness.is_some());

        let triangle = SignedGraph::all_positive(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let v = classify(&triangle).unwrap();
        assert!(!v.spectrally_symmetric);
        assert_eq!(v.sign_symmetric, Some(false));
        assert_eq!(v.odd_exchangeable, Some(false));
        assert!(v.witness.is_none());

        let c6 = SignedGraph::new(
            6,
            &[(0, 1, -1), (1, 2, 1), (2, 3, -1), (3, 4, 1), (4, 5, 1), (0, 5, 1)],
        )
        .unwrap();
        let v = classify(&c6).unwrap();
        assert!(v.spectrally_symmetric);
        assert_eq!(v.sign_symmetric, Some(true));
        assert_eq!(v.odd_exchangeable, Some(true));
    }

    #[test]
    fn classify_beyond_cap_is_undecided() {
        let edges: Vec<(usize, usize)> = (0..13).map(|i| (i, (i + 1) % 14)).collect();
        let g = SignedGraph::all_positive(14, &edges).unwrap();
        let v = classify(&g).unwrap();
        assert!(v.sign_symmetric.is_none());
        assert!(v.odd_exchangeable.is_none());
    }

    #[test]
    fn weak_images_preserve_positive_even_members() {
        // Lemma consequence: a weak automorphism fixes the positive even class
        let g = infinity_33_neg();
        let ctx = GraphContext::new(&g, AUTOMORPHISM_CAP).unwrap();
        let neg = ctx.neg_edge_mask(&g);
        let a = ctx.find_weak_automorphism(neg).unwrap();
        let neg_fund = ctx.sign_vector(neg);
        for &i in &ctx.catalog.c0_pos {
            if !ctx.member_sign_negative(i, neg_fund) {
                let img = ctx.member_image[a][i];
                assert!(!ctx.catalog.all[img].odd);
                assert!(!ctx.member_sign_negative(img, neg_fund));
            }
        }
    }
}
