//! Undirected multigraphs with stable edge identity, plus the directed and
//! bipartite variants used by the compressors.

mod bipartite;
mod digraph;

pub use bipartite::{BipartiteGraph, Matching, Side};
pub use digraph::{ArcKind, DiGraph, Direction};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Vertex label. Merges during contraction keep the smaller id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u64);

/// Edge label, assigned at construction and never reused. Contraction re-homes
/// an edge's endpoints but keeps its id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Total or partial weight assignment on edges.
pub type EdgeWeights = BTreeMap<EdgeId, u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Option<u64>,
}

impl Edge {
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// Undirected multigraph. Parallel edges are allowed, self-loops are not;
/// contraction drops edges that would become self-loops.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedMultigraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, Edge>,
}

impl WeightedMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(ids: impl IntoIterator<Item = u64>) -> Self {
        let mut g = Self::new();
        for id in ids {
            g.add_vertex(VertexId(id));
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    pub fn add_edge(&mut self, id: EdgeId, u: VertexId, v: VertexId, weight: Option<u64>) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(id));
        }
        if !self.vertices.contains(&u) {
            return Err(Error::UnknownVertex(u));
        }
        if !self.vertices.contains(&v) {
            return Err(Error::UnknownVertex(v));
        }
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        self.edges.insert(id, Edge { u, v, weight });
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &Edge)> + '_ {
        self.edges.iter().map(|(id, e)| (*id, e))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(&id)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn max_edge_id(&self) -> Option<EdgeId> {
        self.edges.keys().next_back().copied()
    }

    /// Weights currently stored on the edges, for every edge that has one.
    pub fn stored_weights(&self) -> EdgeWeights {
        self.edges
            .iter()
            .filter_map(|(id, e)| e.weight.map(|w| (*id, w)))
            .collect()
    }

    /// Copy of the graph without the listed edges. Vertices are kept.
    pub fn without_edges(&self, drop: &BTreeSet<EdgeId>) -> Self {
        Self {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .filter(|(id, _)| !drop.contains(id))
                .map(|(id, e)| (*id, *e))
                .collect(),
        }
    }

    /// Copy of the graph keeping only the listed edges (and all vertices).
    pub fn restrict_edges(&self, keep: &BTreeSet<EdgeId>) -> Self {
        Self {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .filter(|(id, _)| keep.contains(id))
                .map(|(id, e)| (*id, *e))
                .collect(),
        }
    }

    /// Contract edge `e`: its endpoints merge into the smaller of the two ids,
    /// `e` disappears, edges that become self-loops are removed, parallel
    /// edges survive with their ids and re-homed endpoints.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Self> {
        let edge = self.edges.get(&e).copied().ok_or(Error::UnknownEdge(e))?;
        let (keep, gone) = if edge.u < edge.v {
            (edge.u, edge.v)
        } else {
            (edge.v, edge.u)
        };
        let mut vertices = self.vertices.clone();
        vertices.remove(&gone);
        let mut edges = BTreeMap::new();
        for (&id, other) in &self.edges {
            if id == e {
                continue;
            }
            let mut u = other.u;
            let mut v = other.v;
            if u == gone {
                u = keep;
            }
            if v == gone {
                v = keep;
            }
            if u == v {
                continue; // became a self-loop
            }
            edges.insert(id, Edge { u, v, weight: other.weight });
        }
        Ok(Self { vertices, edges })
    }

    pub fn is_connected(&self) -> bool {
        let mut it = self.vertices.iter();
        let Some(&start) = it.next() else { return true };
        let mut dsu = UnionFind::over(&self.vertices);
        for e in self.edges.values() {
            dsu.union(e.u, e.v);
        }
        self.vertices.iter().all(|&v| dsu.find(v) == dsu.find(start))
    }

    /// Minimum-weight spanning forest by Kruskal's rule; ties broken by
    /// ascending edge id. Every edge must carry a weight in `weights`.
    pub fn kruskal_msf(&self, weights: &EdgeWeights) -> Result<BTreeSet<EdgeId>> {
        self.kruskal_by(|id, _| {
            weights
                .get(&id)
                .map(|&w| (w, 0u8, id))
                .ok_or(Error::MissingWeight(id))
        })
    }

    /// Kruskal over an arbitrary total order on edges; the key decides the
    /// scan order, ascending.
    pub(crate) fn kruskal_by<K, F>(&self, key: F) -> Result<BTreeSet<EdgeId>>
    where
        K: Ord,
        F: Fn(EdgeId, &Edge) -> Result<K>,
    {
        let mut order: Vec<(K, EdgeId)> = Vec::with_capacity(self.edges.len());
        for (&id, e) in &self.edges {
            order.push((key(id, e)?, id));
        }
        order.sort();
        let mut dsu = UnionFind::over(&self.vertices);
        let mut forest = BTreeSet::new();
        for (_, id) in order {
            let e = &self.edges[&id];
            if dsu.union(e.u, e.v) {
                forest.insert(id);
            }
        }
        Ok(forest)
    }
}

/// Union-find keyed by vertex id, path compression only.
pub(crate) struct UnionFind {
    parent: BTreeMap<VertexId, VertexId>,
}

impl UnionFind {
    pub(crate) fn over(vertices: &BTreeSet<VertexId>) -> Self {
        Self {
            parent: vertices.iter().map(|&v| (v, v)).collect(),
        }
    }

    pub(crate) fn find(&mut self, v: VertexId) -> VertexId {
        let p = self.parent[&v];
        if p == v {
            return v;
        }
        let root = self.find(p);
        self.parent.insert(v, root);
        root
    }

    /// Returns true when the two classes were distinct and got merged.
    pub(crate) fn union(&mut self, a: VertexId, b: VertexId) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (keep, move_) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent.insert(move_, keep);
        true
    }
}
