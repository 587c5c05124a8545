//! Realizing graphic sequences as small labeled graphs, exact independence
//! numbers, and exhaustive enumeration of labeled realizations.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sequence::DegreeSequence;

/// Largest vertex count accepted by [`independence_number`] by default.
pub const DEFAULT_ALPHA_BOUND: usize = 24;

/// Largest sequence length accepted by [`enumerate_realizations`].
pub const MAX_REALIZATION_LEN: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("{0} is not graphic")]
    NotGraphic(DegreeSequence),
    #[error("{what}: {n} vertices exceeds the limit of {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("invalid edge ({u},{v}) for {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("malformed edge list: {0}")]
    Parse(String),
}

/// Simple undirected graph on vertices `0..n`. Edges are stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { n, edges: BTreeSet::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, RealizationError> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        if n >= 3 {
            for u in 0..n {
                let v = (u + 1) % n;
                g.edges.insert((u.min(v), u.max(v)));
            }
        }
        g
    }

    /// Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, RealizationError> {
        if u == v || u >= self.n || v >= self.n {
            return Err(RealizationError::InvalidEdge { u, v, n: self.n });
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Per-vertex degrees in label order.
    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// `"n m"` header followed by one `"u v"` line per edge, ascending.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self, RealizationError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| RealizationError::Parse("missing header".into()))?;
        let [n, m] = parse_pair(header)?;
        let mut g = SimpleGraph::new(n);
        for line in lines {
            let [u, v] = parse_pair(line)?;
            if !g.add_edge(u, v)? {
                return Err(RealizationError::Parse(format!("duplicate edge {u} {v}")));
            }
        }
        if g.edge_count() != m {
            return Err(RealizationError::Parse(format!(
                "header announces {m} edges, found {}",
                g.edge_count()
            )));
        }
        Ok(g)
    }

    fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }
}

fn parse_pair(line: &str) -> Result<[usize; 2], RealizationError> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(RealizationError::Parse(format!("expected two integers, got {line:?}")));
    }
    let mut out = [0usize; 2];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .parse()
            .map_err(|_| RealizationError::Parse(format!("not a vertex index: {part:?}")))?;
    }
    Ok(out)
}

pub fn degree_sequence(g: &SimpleGraph) -> DegreeSequence {
    DegreeSequence::from_degrees(g.degrees())
}

/// Havel–Hakimi construction. Vertex `k` receives degree `π_k`; ties among
/// residual degrees are broken by lowest label.
pub fn hh_realize(seq: &DegreeSequence) -> Result<SimpleGraph, RealizationError> {
    let not_graphic = || RealizationError::NotGraphic(seq.clone());
    let mut g = SimpleGraph::new(seq.len());
    let mut residual: Vec<(u32, usize)> = seq.as_slice().iter().copied().zip(0..).collect();
    while !residual.is_empty() {
        residual.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (head, u) = residual.remove(0);
        let k = head as usize;
        if k > residual.len() {
            return Err(not_graphic());
        }
        for (d, v) in &mut residual[..k] {
            if *d == 0 {
                return Err(not_graphic());
            }
            *d -= 1;
            g.add_edge(u, *v)?;
        }
    }
    Ok(g)
}

/// Exact independence number with the default size bound.
pub fn independence_number(g: &SimpleGraph) -> Result<usize, RealizationError> {
    independence_number_bounded(g, DEFAULT_ALPHA_BOUND)
}

/// Exact independence number by branching on a maximum-degree vertex.
pub fn independence_number_bounded(g: &SimpleGraph, bound: usize) -> Result<usize, RealizationError> {
    let limit = bound.min(64);
    if g.vertex_count() > limit {
        return Err(RealizationError::TooLarge {
            what: "independence number",
            n: g.vertex_count(),
            limit,
        });
    }
    let adj = g.adjacency_masks();
    let all = if g.n == 64 { u64::MAX } else { (1u64 << g.n) - 1 };
    let mut best = 0;
    mis_branch(&adj, all, 0, &mut best);
    Ok(best)
}

fn mis_branch(adj: &[u64], mut cand: u64, mut size: usize, best: &mut usize) {
    // vertices with no neighbour among the candidates always belong to some maximum set
    loop {
        let mut isolated = 0u64;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & cand == 0 {
                isolated |= 1 << v;
            }
        }
        if isolated == 0 {
            break;
        }
        size += isolated.count_ones() as usize;
        cand &= !isolated;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        *best = size;
        return;
    }

    let mut pick = 0usize;
    let mut pick_deg = 0u32;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (adj[v] & cand).count_ones();
        if deg > pick_deg {
            pick = v;
            pick_deg = deg;
        }
    }
    mis_branch(adj, cand & !(1 << pick) & !adj[pick], size + 1, best);
    mis_branch(adj, cand & !(1 << pick), size, best);
}

/// Every labeled graph on `0..n` in which vertex `k` has degree `π_k`.
pub fn enumerate_realizations(seq: &DegreeSequence) -> Result<Vec<SimpleGraph>, RealizationError> {
    let mut out = Vec::new();
    for_each_realization(seq, |g| out.push(g.clone()))?;
    Ok(out)
}

/// Streaming form of [`enumerate_realizations`]; graphs arrive in lexicographic edge order.
pub fn for_each_realization<F: FnMut(&SimpleGraph)>(
    seq: &DegreeSequence,
    mut visit: F,
) -> Result<(), RealizationError> {
    let n = seq.len();
    if n > MAX_REALIZATION_LEN {
        return Err(RealizationError::TooLarge {
            what: "realization enumeration",
            n,
            limit: MAX_REALIZATION_LEN,
        });
    }
    let mut residual: Vec<u32> = seq.as_slice().to_vec();
    let mut g = SimpleGraph::new(n);
    attach(0, 1, &mut residual, &mut g, &mut visit);
    Ok(())
}

/// Chooses the neighbours `v > u` of vertex `u`, starting at `from`, then moves on.
fn attach<F: FnMut(&SimpleGraph)>(
    u: usize,
    from: usize,
    residual: &mut [u32],
    g: &mut SimpleGraph,
    visit: &mut F,
) {
    let n = residual.len();
    if u == n {
        visit(g);
        return;
    }
    if residual[u] == 0 {
        attach(u + 1, u + 2, residual, g, visit);
        return;
    }
    let available = (from..n).filter(|&v| residual[v] > 0).count();
    if available < residual[u] as usize {
        return;
    }
    for v in from..n {
        if residual[v] == 0 {
            continue;
        }
        residual[u] -= 1;
        residual[v] -= 1;
        g.edges.insert((u, v));
        attach(u, v + 1, residual, g, visit);
        g.edges.remove(&(u, v));
        residual[u] += 1;
        residual[v] += 1;
    }
}
