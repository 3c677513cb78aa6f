//! Exhaustive corpora of small underlying graphs, deduplicated up to
//! isomorphism by orbit expansion: every labeled graph is represented, each
//! isomorphism class by its smallest edge-set bitmask.

use crate::error::{Result, SgsError};
use crate::graph::SignedGraph;
use std::collections::HashSet;

/// Cap for the general corpus (all connected graphs).
pub const GENERAL_CORPUS_CAP: usize = 6;
/// Cap for the unicyclic corpus.
pub const UNICYCLIC_CORPUS_CAP: usize = 7;
/// Cap for the corpus that includes disconnected graphs.
pub const ALL_GRAPHS_CAP: usize = 5;

/// Vertex pairs `{u, v}`, `u < v`, in lexicographic order; bit i of an
/// edge-set bitmask refers to pair i.
fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = vec![];
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn mask_to_graph(n: usize, pairs: &[(usize, usize)], mask: u32) -> SignedGraph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    SignedGraph::all_positive(n, &edges).unwrap()
}

fn relabel_mask(pairs: &[(usize, usize)], pair_index: &[Vec<usize>], mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = pairs[i];
        out |= 1 << pair_index[perm[u]][perm[v]];
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut current, &mut out);
    out
}

fn heap_permute(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, current, out);
        if k % 2 == 0 {
            current.swap(i, k - 1);
        } else {
            current.swap(0, k - 1);
        }
    }
}

fn connected_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![vec![]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// One representative per isomorphism class among the edge-set bitmasks
/// accepted by `keep`, in ascending bitmask order.
fn representatives<F: Fn(u32) -> bool>(n: usize, keep: F) -> Vec<SignedGraph> {
    let pairs = vertex_pairs(n);
    let mut pair_index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = i;
        pair_index[v][u] = i;
    }
    let perms = permutations(n);
    let mut covered: HashSet<u32> = HashSet::new();
    let mut reps = vec![];
    for mask in 0..(1u32 << pairs.len()) {
        if covered.contains(&mask) || !keep(mask) {
            continue;
        }
        for p in &perms {
            covered.insert(relabel_mask(&pairs, &pair_index, mask, p));
        }
        reps.push(mask_to_graph(n, &pairs, mask));
    }
    reps
}

/// All connected graphs on `n` vertices up to isomorphism, all-positive.
pub fn connected_graphs(n: usize) -> Result<Vec<SignedGraph>> {
    if n > GENERAL_CORPUS_CAP {
        return Err(SgsError::CapExceeded {
            what: "connected-graph corpus (vertex count)",
            cap: GENERAL_CORPUS_CAP,
            actual: n,
        });
    }
    let pairs = vertex_pairs(n);
    Ok(representatives(n, |mask| connected_mask(n, &pairs, mask)))
}

/// All connected unicyclic graphs (m = n) on `n` vertices up to isomorphism.
pub fn connected_unicyclic(n: usize) -> Result<Vec<SignedGraph>> {
    if n > UNICYCLIC_CORPUS_CAP {
        return Err(SgsError::CapExceeded {
            what: "unicyclic corpus (vertex count)",
            cap: UNICYCLIC_CORPUS_CAP,
            actual: n,
        });
    }
    let pairs = vertex_pairs(n);
    Ok(representatives(n, |mask| {
        mask.count_ones() as usize == n && connected_mask(n, &pairs, mask)
    }))
}

/// All graphs on `n` vertices up to isomorphism, disconnected ones included.
pub fn all_graphs(n: usize) -> Result<Vec<SignedGraph>> {
    if n > ALL_GRAPHS_CAP {
        return Err(SgsError::CapExceeded {
            what: "unrestricted corpus (vertex count)",
            cap: ALL_GRAPHS_CAP,
            actual: n,
        });
    }
    Ok(representatives(n, |_| true))
}

/// Every signature of the underlying graph of `g`, in ascending order of the
/// negative-edge bitmask. 2^m graphs.
pub fn all_signatures(g: &SignedGraph) -> Vec<SignedGraph> {
    let m = g.m();
    assert!(m < 32, "signature enumeration limited to m < 32");
    let mut out = Vec::with_capacity(1 << m);
    for neg in 0u32..(1u32 << m) {
        let edges: Vec<(usize, usize, i8)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| (e.u, e.v, if neg >> i & 1 == 1 { -1 } else { 1 }))
            .collect();
        out.push(SignedGraph::new(g.n(), &edges).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts_match_the_classical_sequence() {
        // 1, 1, 2, 6, 21, 112 connected graphs on 1..=6 vertices
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).unwrap().len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn unicyclic_counts() {
        // 1, 2, 5, 13, 33 connected unicyclic graphs on 3..=7 vertices
        let expected = [1usize, 2, 5, 13, 33];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 3;
            let graphs = connected_unicyclic(n).unwrap();
            assert_eq!(graphs.len(), want, "n = {n}");
            assert!(graphs.iter().all(|g| g.m() == n && g.is_connected()));
        }
    }

    #[test]
    fn all_graph_counts() {
        // 1, 2, 4, 11, 34 graphs on 1..=5 vertices
        let expected = [1usize, 2, 4, 11, 34];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(all_graphs(i + 1).unwrap().len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn corpus_caps() {
        assert!(connected_graphs(7).is_err());
        assert!(connected_unicyclic(8).is_err());
        assert!(all_graphs(6).is_err());
    }

    #[test]
    fn signature_enumeration() {
        let g = SignedGraph::all_positive(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let sigs = all_signatures(&g);
        assert_eq!(sigs.len(), 8);
        assert_eq!(sigs[0], g);
        let negs: usize = sigs
            .iter()
            .map(|s| s.edges().iter().filter(|e| e.sign < 0).count())
            .sum();
        assert_eq!(negs, 12); // 8 signatures × 3 edges / 2
    }
}
