//! Temporal and static graphs over the vertex set `1..=n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Vertex identifier, 1-based.
pub type Vertex = u32;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Normalizes the endpoint order. Self-loops are rejected.
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            core::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            core::cmp::Ordering::Equal => Err(Error::InvalidGraph("self-loop", a, b)),
        }
    }

    #[inline]
    pub fn touches(&self, w: Vertex) -> bool {
        self.u == w || self.v == w
    }
}

fn normalize_edge_set(n: Vertex, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Vec<Edge>> {
    let mut out = Vec::new();
    for (a, b) in edges {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidGraph("vertex out of range", a, b));
        }
        out.push(Edge::new(a, b)?);
    }
    out.sort_unstable();
    for w in out.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidGraph("duplicate edge", w[0].u, w[0].v));
        }
    }
    Ok(out)
}

/// A vertex set `1..=n` with one edge set (layer) per time step `1..=tau`.
///
/// Layers are kept sorted, so two graphs with the same edge sets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemporalGraph {
    n: Vertex,
    layers: Vec<Vec<Edge>>,
}

impl TemporalGraph {
    /// Builds a graph from raw layers; `layers.len()` is the lifetime.
    pub fn new<L, I>(n: Vertex, layers: L) -> Result<Self>
    where
        L: IntoIterator<Item = I>,
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive", 0, 0));
        }
        let layers = layers
            .into_iter()
            .map(|l| normalize_edge_set(n, l))
            .collect::<Result<Vec<_>>>()?;
        if layers.is_empty() {
            return Err(Error::InvalidGraph("lifetime must be positive", n, 0));
        }
        Ok(TemporalGraph { n, layers })
    }

    /// `tau` empty layers.
    pub fn empty(n: Vertex, tau: u32) -> Result<Self> {
        Self::new(n, (0..tau).map(|_| Vec::<(Vertex, Vertex)>::new()))
    }

    /// `tau` copies of the same edge set.
    pub fn repeated(g: &StaticGraph, tau: u32) -> Result<Self> {
        Self::new(g.n, (0..tau).map(|_| g.edges.iter().map(|e| (e.u, e.v))))
    }

    pub(crate) fn from_sorted_layers(n: Vertex, layers: Vec<Vec<Edge>>) -> Self {
        debug_assert!(layers.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        TemporalGraph { n, layers }
    }

    #[inline]
    pub fn n(&self) -> Vertex {
        self.n
    }

    #[inline]
    pub fn tau(&self) -> u32 {
        self.layers.len() as u32
    }

    /// Edge set at time step `t` (1-based).
    #[inline]
    pub fn layer(&self, t: u32) -> &[Edge] {
        &self.layers[(t - 1) as usize]
    }

    pub fn layers(&self) -> &[Vec<Edge>] {
        &self.layers
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    /// All time-edges `(t, e)` in (time, edge) order.
    pub fn time_edges(&self) -> impl Iterator<Item = (u32, Edge)> + '_ {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().map(move |&e| (i as u32 + 1, e)))
    }

    pub fn num_time_edges(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn is_edgeless(&self) -> bool {
        self.layers.iter().all(Vec::is_empty)
    }

    /// Layer `t` as a bitmask per vertex pair, only for `n <= 64`.
    pub(crate) fn layer_masks(&self) -> Vec<Vec<(u64, u64)>> {
        debug_assert!(self.n <= 64);
        self.layers
            .iter()
            .map(|l| l.iter().map(|e| (1u64 << (e.u - 1), 1u64 << (e.v - 1))).collect())
            .collect()
    }
}

/// `true` iff every edge has an endpoint in the mask (bit `v-1` for vertex `v`).
#[inline]
pub(crate) fn mask_covers(edges: &[(u64, u64)], mask: u64) -> bool {
    edges.iter().all(|&(a, b)| mask & (a | b) != 0)
}

/// Reorders the layers: layer `i` of the result is layer `pi[i-1]` of `g`.
///
/// `pi` holds 1-based time steps and must be a permutation of `1..=tau`.
pub fn permute_layers(g: &TemporalGraph, pi: &[u32]) -> Result<TemporalGraph> {
    let tau = g.tau() as usize;
    if pi.len() != tau {
        return Err(Error::InvalidPermutation);
    }
    let mut seen = vec![false; tau];
    for &p in pi {
        if p == 0 || p as usize > tau || seen[p as usize - 1] {
            return Err(Error::InvalidPermutation);
        }
        seen[p as usize - 1] = true;
    }
    let layers = pi.iter().map(|&p| g.layer(p).to_vec()).collect();
    Ok(TemporalGraph::from_sorted_layers(g.n, layers))
}

/// A simple undirected graph on `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StaticGraph {
    pub n: Vertex,
    pub edges: Vec<Edge>,
}

impl StaticGraph {
    pub fn new(n: Vertex, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        Ok(StaticGraph { n, edges: normalize_edge_set(n, edges)? })
    }

    pub fn complete(n: Vertex) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| Edge { u, v })).collect();
        StaticGraph { n, edges }
    }

    pub fn cycle(n: Vertex) -> Self {
        assert!(n >= 3);
        let mut edges: Vec<Edge> =
            (1..=n).map(|i| Edge::new(i, i % n + 1).expect("distinct")).collect();
        edges.sort_unstable();
        StaticGraph { n, edges }
    }

    /// Reads the single layer of a lifetime-1 temporal graph.
    pub fn from_single_layer(g: &TemporalGraph) -> Result<Self> {
        if g.tau() != 1 {
            return Err(Error::Precondition("static graph files must have tau = 1"));
        }
        Ok(StaticGraph { n: g.n(), edges: g.layer(1).to_vec() })
    }

    pub fn to_temporal(&self) -> TemporalGraph {
        TemporalGraph::from_sorted_layers(self.n, vec![self.edges.clone()])
    }
}
