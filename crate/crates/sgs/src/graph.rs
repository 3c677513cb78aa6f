//! Signed graphs: a simple undirected graph together with a ±1 signature,
//! switching, negation and the permutation action.

use crate::error::{Result, SgsError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// An undirected signed edge, stored with `u < v` and `sign ∈ {+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: i8,
}

impl Edge {
    pub fn key(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

/// A simple undirected graph on vertices `0..n` with a ±1 sign on every edge.
///
/// Edges are kept sorted by `(u, v)`, which makes equality, hashing and the
/// text serialization canonical. Values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

/// A vertex subset used for switching.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SwitchSet {
    pub members: BTreeSet<usize>,
}

impl SwitchSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        SwitchSet {
            members: members.into_iter().collect(),
        }
    }
}

/// A bijection on `{0..n}`, given by its image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexPermutation {
    image: Vec<usize>,
}

impl VertexPermutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(SgsError::NotAPermutation { got: image.len(), n });
            }
            seen[x] = true;
        }
        Ok(VertexPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        VertexPermutation { image: inv }
    }

    /// `self` after `other`: (self ∘ other)(v) = self(other(v)).
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        VertexPermutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    /// Cycle notation, fixed points omitted unless the permutation is trivial.
    pub fn cycle_notation(&self) -> String {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut v = start;
            loop {
                seen[v] = true;
                let _ = write!(out, "{v}");
                v = self.image[v];
                if v == start {
                    break;
                }
                out.push(' ');
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

impl SignedGraph {
    /// Builds a signed graph, validating simplicity and sign values.
    pub fn new(n: usize, edge_list: &[(usize, usize, i8)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b, sign) in edge_list {
            if a == b {
                return Err(SgsError::Loop(a));
            }
            if a >= n {
                return Err(SgsError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(SgsError::VertexOutOfRange { vertex: b, n });
            }
            if sign != 1 && sign != -1 {
                return Err(SgsError::InvalidSign(sign.to_string()));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            edges.push(Edge { u, v, sign });
        }
        edges.sort_by_key(Edge::key);
        for w in edges.windows(2) {
            if w[0].key() == w[1].key() {
                return Err(SgsError::DuplicateEdge {
                    u: w[0].u,
                    v: w[0].v,
                });
            }
        }
        Ok(SignedGraph { n, edges })
    }

    /// All-positive signature on the given underlying edges.
    pub fn all_positive(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let signed: Vec<_> = edge_list.iter().map(|&(u, v)| (u, v, 1)).collect();
        SignedGraph::new(n, &signed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn sign_of(&self, a: usize, b: usize) -> Option<i8> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by_key(&(u, v), Edge::key)
            .ok()
            .map(|i| self.edges[i].sign)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.sign_of(a, b).is_some()
    }

    /// Index of edge `{a, b}` in the sorted edge list.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search_by_key(&(u, v), Edge::key).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.u == v {
                    Some(e.v)
                } else if e.v == v {
                    Some(e.u)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Adjacency matrix with entries σ(uv) on edges, 0 elsewhere.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i8>> {
        let mut a = vec![vec![0i8; self.n]; self.n];
        for e in &self.edges {
            a[e.u][e.v] = e.sign;
            a[e.v][e.u] = e.sign;
        }
        a
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut comp = vec![];
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comp
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = vec![];
        for s in 0..self.n {
            if !seen[s] {
                let comp = self.component_of(s);
                for &v in &comp {
                    seen[v] = true;
                }
                out.push(comp);
            }
        }
        out
    }

    /// The induced signed subgraph on `keep` (sorted, deduplicated), with
    /// vertices relabeled to `0..keep.len()` in order.
    pub fn induced(&self, keep: &[usize]) -> SignedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| Edge {
                u: index[e.u],
                v: index[e.v],
                sign: e.sign,
            })
            .collect();
        SignedGraph {
            n: keep.len(),
            edges,
        }
    }

    /// Sign of a cycle or any edge set, as the product of its edge signs.
    pub fn sign_product<I: IntoIterator<Item = (usize, usize)>>(&self, edges: I) -> i8 {
        let mut s = 1i8;
        for (u, v) in edges {
            s *= self.sign_of(u, v).expect("edge not in graph");
        }
        s
    }

    /// Flips every edge with exactly one endpoint in `u`.
    pub fn switch(&self, u: &SwitchSet) -> Result<SignedGraph> {
        for &v in &u.members {
            if v >= self.n {
                return Err(SgsError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let cut = u.members.contains(&e.u) != u.members.contains(&e.v);
                Edge {
                    sign: if cut { -e.sign } else { e.sign },
                    ..*e
                }
            })
            .collect();
        Ok(SignedGraph { n: self.n, edges })
    }

    /// Multiplies every edge sign by −1.
    pub fn negate(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                sign: -e.sign,
                ..*e
            })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// Relabels vertices: edge `{u, v}` with sign `s` maps to `{p(u), p(v)}` with sign `s`.
    pub fn apply_permutation(&self, p: &VertexPermutation) -> Result<SignedGraph> {
        if p.len() != self.n {
            return Err(SgsError::NotAPermutation {
                got: p.len(),
                n: self.n,
            });
        }
        let mapped: Vec<_> = self
            .edges
            .iter()
            .map(|e| (p.apply(e.u), p.apply(e.v), e.sign))
            .collect();
        SignedGraph::new(self.n, &mapped)
    }

    /// Parses the `n m` / `u v s` edge-list text format.
    pub fn parse(text: &str) -> Result<SignedGraph> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| SgsError::Parse {
            line: 1,
            reason: "empty input".into(),
        })?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, line: usize| -> Result<usize> {
            tok.ok_or_else(|| SgsError::Parse {
                line,
                reason: "expected `n m`".into(),
            })?
            .parse()
            .map_err(|_| SgsError::Parse {
                line,
                reason: "expected a nonnegative integer".into(),
            })
        };
        let n = parse_num(it.next(), 1)?;
        let m = parse_num(it.next(), 1)?;
        if it.next().is_some() {
            return Err(SgsError::Parse {
                line: 1,
                reason: "trailing tokens after `n m`".into(),
            });
        }
        let mut edge_list = Vec::with_capacity(m);
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(SgsError::Parse {
                    line: lineno,
                    reason: format!("expected `u v s`, got `{line}`"),
                });
            }
            let u: usize = toks[0].parse().map_err(|_| SgsError::Parse {
                line: lineno,
                reason: format!("bad vertex `{}`", toks[0]),
            })?;
            let v: usize = toks[1].parse().map_err(|_| SgsError::Parse {
                line: lineno,
                reason: format!("bad vertex `{}`", toks[1]),
            })?;
            let sign = match toks[2] {
                "+" => 1,
                "-" => -1,
                other => return Err(SgsError::InvalidSign(other.to_string())),
            };
            edge_list.push((u, v, sign));
        }
        if edge_list.len() != m {
            return Err(SgsError::Parse {
                line: 1,
                reason: format!("header promises {m} edges, found {}", edge_list.len()),
            });
        }
        SignedGraph::new(n, &edge_list)
    }

    /// Canonical text form: `n m`, then one `u v s` line per edge in sorted order.
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            let s = if e.sign > 0 { '+' } else { '-' };
            let _ = writeln!(out, "{} {} {}", e.u, e.v, s);
        }
        out
    }
}
