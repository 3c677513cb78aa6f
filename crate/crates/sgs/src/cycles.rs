//! Deterministic spanning trees, fundamental cycles, and enumeration of all
//! 2-regular subgraphs through the GF(2) cycle space.
//!
//! Edge sets are bitmasks over the graph's sorted edge list (`u128`, so the
//! desk-scale limit is 128 edges). Symmetric difference is XOR, and over ±1
//! signs the sign of a symmetric difference is the product of the signs, since
//! shared edges cancel in pairs.

use crate::error::{Result, SgsError};
use crate::graph::SignedGraph;
use std::collections::HashMap;
use std::collections::VecDeque;

/// Cap on the cyclomatic number for the 2^k cycle-space enumeration.
pub const ENUMERATION_CAP: usize = 20;

/// BFS spanning tree rooted at vertex 0, neighbors visited in ascending order.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    pub parent: Vec<Option<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
    /// The k = m − n + 1 cotree edges in lexicographic order.
    pub cotree_edges: Vec<(usize, usize)>,
}

impl SpanningTree {
    pub fn k(&self) -> usize {
        self.cotree_edges.len()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.tree_edges.binary_search(&key).is_ok()
    }
}

/// One fundamental cycle C(T, e): the cotree edge plus the tree path between
/// its endpoints.
#[derive(Debug, Clone)]
pub struct FundamentalCycle {
    pub cotree_edge: (usize, usize),
    /// Bitmask over the graph's edge indices.
    pub edge_mask: u128,
    pub length: usize,
    pub sign: i8,
    /// true iff the cycle length is odd.
    pub odd: bool,
}

/// A member of the 2-regular subgraph catalog.
#[derive(Debug, Clone)]
pub struct TwoRegularSubgraph {
    /// GF(2) coordinates over the cotree edges (bit i = fundamental cycle i).
    pub coordinates: u32,
    pub edge_mask: u128,
    pub vertex_count: usize,
    /// Component cycles as vertex lists, each starting at its smallest vertex,
    /// ordered by smallest contained vertex.
    pub component_cycles: Vec<Vec<usize>>,
    /// Number of component cycles.
    pub p: usize,
    pub sign: i8,
    /// true iff vertex_count is odd.
    pub odd: bool,
}

/// All 2-regular subgraphs of a connected signed graph, partitioned by
/// (parity, sign).
#[derive(Debug, Clone)]
pub struct TwoRegularCatalog {
    pub all: Vec<TwoRegularSubgraph>,
    pub c0_pos: Vec<usize>,
    pub c0_neg: Vec<usize>,
    pub c1_pos: Vec<usize>,
    pub c1_neg: Vec<usize>,
    /// Lookup from edge mask to index in `all`.
    pub by_mask: HashMap<u128, usize>,
}

impl TwoRegularCatalog {
    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }
}

/// Deterministic BFS spanning tree from vertex 0.
pub fn spanning_tree(g: &SignedGraph) -> Result<SpanningTree> {
    if !g.is_connected() || g.n() == 0 {
        if g.n() == 0 {
            return Ok(SpanningTree {
                parent: vec![],
                tree_edges: vec![],
                cotree_edges: vec![],
            });
        }
        return Err(SgsError::NotConnected);
    }
    let n = g.n();
    let mut parent = vec![None; n];
    let mut visited = vec![false; n];
    let mut tree_edges = Vec::with_capacity(n - 1);
    let mut queue = VecDeque::new();
    visited[0] = true;
    queue.push_back(0);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if !visited[w] {
                visited[w] = true;
                parent[w] = Some(v);
                let key = if v < w { (v, w) } else { (w, v) };
                tree_edges.push(key);
                queue.push_back(w);
            }
        }
    }
    tree_edges.sort_unstable();
    let cotree_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| e.key())
        .filter(|key| tree_edges.binary_search(key).is_err())
        .collect();
    Ok(SpanningTree {
        parent,
        tree_edges,
        cotree_edges,
    })
}

/// Edges of the tree path from `v` up to the root, as a set of sorted pairs.
fn path_to_root(t: &SpanningTree, mut v: usize) -> Vec<(usize, usize)> {
    let mut path = vec![];
    while let Some(p) = t.parent[v] {
        path.push(if p < v { (p, v) } else { (v, p) });
        v = p;
    }
    path
}

/// The edge set of C(T, e) for a cotree edge e = {a, b}: the symmetric
/// difference of the two root paths plus e itself.
pub fn fundamental_cycle_edges(t: &SpanningTree, a: usize, b: usize) -> Vec<(usize, usize)> {
    let pa = path_to_root(t, a);
    let pb = path_to_root(t, b);
    let mut edges: Vec<(usize, usize)> = vec![if a < b { (a, b) } else { (b, a) }];
    for e in pa.iter().chain(pb.iter()) {
        if pa.contains(e) != pb.contains(e) {
            edges.push(*e);
        }
    }
    edges.sort_unstable();
    edges
}

/// One fundamental cycle per cotree edge, in cotree order.
pub fn fundamental_cycles(g: &SignedGraph, t: &SpanningTree) -> Vec<FundamentalCycle> {
    t.cotree_edges
        .iter()
        .map(|&(a, b)| {
            let edges = fundamental_cycle_edges(t, a, b);
            let mut mask = 0u128;
            let mut sign = 1i8;
            for &(u, v) in &edges {
                mask |= 1u128 << g.edge_index(u, v).expect("cycle edge in graph");
                sign *= g.sign_of(u, v).unwrap();
            }
            let length = edges.len();
            FundamentalCycle {
                cotree_edge: (a, b),
                edge_mask: mask,
                length,
                sign,
                odd: length % 2 == 1,
            }
        })
        .collect()
}

/// GF(2) switching-class fingerprint: bit i set iff fundamental cycle i is
/// negative. Two signatures on the same underlying graph are switching
/// equivalent iff their vectors with respect to the same tree agree.
pub fn cycle_sign_vector(g: &SignedGraph, t: &SpanningTree) -> u32 {
    let mut vector = 0u32;
    for (i, c) in fundamental_cycles(g, t).iter().enumerate() {
        if c.sign < 0 {
            vector |= 1 << i;
        }
    }
    vector
}

/// Decomposes the edge set of a 2-regular subgraph into its component cycles,
/// each listed from its smallest vertex, ordered by smallest vertex.
fn decompose_cycles(g: &SignedGraph, mask: u128) -> Vec<Vec<usize>> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj.entry(e.u).or_default().push(e.v);
            adj.entry(e.v).or_default().push(e.u);
        }
    }
    let mut starts: Vec<usize> = adj.keys().copied().collect();
    starts.sort_unstable();
    let mut seen: std::collections::HashSet<usize> = Default::default();
    let mut cycles = vec![];
    for &s in &starts {
        if seen.contains(&s) {
            continue;
        }
        let mut cycle = vec![s];
        seen.insert(s);
        // walk toward the smaller unvisited neighbor first for determinism
        let mut prev = s;
        let mut cur = *adj[&s].iter().min().unwrap();
        while cur != s {
            seen.insert(cur);
            cycle.push(cur);
            let nbrs = &adj[&cur];
            let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    cycles
}

/// Enumerates all nonempty GF(2) combinations of the fundamental cycles and
/// keeps the ones whose edge set is 2-regular (every touched vertex has
/// degree exactly 2).
pub fn enumerate_two_regular(g: &SignedGraph, t: &SpanningTree) -> Result<TwoRegularCatalog> {
    let k = t.k();
    if k > ENUMERATION_CAP {
        return Err(SgsError::CapExceeded {
            what: "cycle-space enumeration (cyclomatic number)",
            cap: ENUMERATION_CAP,
            actual: k,
        });
    }
    let fund = fundamental_cycles(g, t);
    let endpoints: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let mut all = vec![];
    let mut by_mask = HashMap::new();
    let mut degree = vec![0u8; g.n()];
    for coords in 1u32..(1u32 << k) {
        let mut mask = 0u128;
        let mut sign = 1i8;
        for (i, c) in fund.iter().enumerate() {
            if coords >> i & 1 == 1 {
                mask ^= c.edge_mask;
                sign *= c.sign;
            }
        }
        degree.iter_mut().for_each(|d| *d = 0);
        let mut edge_count = 0usize;
        let mut two_regular = true;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = endpoints[i];
            degree[u] += 1;
            degree[v] += 1;
            if degree[u] > 2 || degree[v] > 2 {
                two_regular = false;
                break;
            }
            edge_count += 1;
        }
        if !two_regular {
            continue;
        }
        // a union of cycles has |V| = |E|
        let component_cycles = decompose_cycles(g, mask);
        let vertex_count = edge_count;
        let member = TwoRegularSubgraph {
            coordinates: coords,
            edge_mask: mask,
            vertex_count,
            p: component_cycles.len(),
            component_cycles,
            sign,
            odd: vertex_count % 2 == 1,
        };
        by_mask.insert(mask, all.len());
        all.push(member);
    }
    let mut c0_pos = vec![];
    let mut c0_neg = vec![];
    let mut c1_pos = vec![];
    let mut c1_neg = vec![];
    for (i, m) in all.iter().enumerate() {
        match (m.odd, m.sign > 0) {
            (false, true) => c0_pos.push(i),
            (false, false) => c0_neg.push(i),
            (true, true) => c1_pos.push(i),
            (true, false) => c1_neg.push(i),
        }
    }
    Ok(TwoRegularCatalog {
        all,
        c0_pos,
        c0_neg,
        c1_pos,
        c1_neg,
        by_mask,
    })
}
