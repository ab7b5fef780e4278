//! Bipartite graphs, maximum matching and augmenting-path machinery.

use std::collections::{BTreeMap, BTreeSet};

use super::digraph::{ArcKind, DiGraph};
use super::{EdgeId, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Unweighted bipartite multigraph. Edges are stored with their left endpoint
/// first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: BTreeSet<VertexId>,
    right: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

impl BipartiteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_sides(
        left: impl IntoIterator<Item = u64>,
        right: impl IntoIterator<Item = u64>,
    ) -> Self {
        let mut g = Self::new();
        for l in left {
            g.add_left(VertexId(l));
        }
        for r in right {
            g.add_right(VertexId(r));
        }
        g
    }

    pub fn add_left(&mut self, v: VertexId) {
        self.left.insert(v);
    }

    pub fn add_right(&mut self, v: VertexId) {
        self.right.insert(v);
    }

    pub fn add_edge(&mut self, id: EdgeId, a: VertexId, b: VertexId) -> Result<()> {
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        let (l, r) = match (self.side_of(a), self.side_of(b)) {
            (Some(Side::Left), Some(Side::Right)) => (a, b),
            (Some(Side::Right), Some(Side::Left)) => (b, a),
            (None, _) => return Err(Error::UnknownVertex(a)),
            (_, None) => return Err(Error::UnknownVertex(b)),
            _ => return Err(Error::SameSide(a, b)),
        };
        self.edges.insert(id, (l, r));
        Ok(())
    }

    pub fn side_of(&self, v: VertexId) -> Option<Side> {
        if self.left.contains(&v) {
            Some(Side::Left)
        } else if self.right.contains(&v) {
            Some(Side::Right)
        } else {
            None
        }
    }

    pub fn left(&self) -> &BTreeSet<VertexId> {
        &self.left
    }

    pub fn right(&self) -> &BTreeSet<VertexId> {
        &self.right
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.left.iter().chain(self.right.iter()).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Edge endpoints as stored: `(left, right)`.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(id, (l, r))| (*id, *l, *r))
    }

    pub fn edge(&self, id: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(&id).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        match (self.left.iter().next_back(), self.right.iter().next_back()) {
            (Some(&l), Some(&r)) => Some(l.max(r)),
            (Some(&l), None) => Some(l),
            (None, Some(&r)) => Some(r),
            (None, None) => None,
        }
    }

    pub fn max_edge_id(&self) -> Option<EdgeId> {
        self.edges.keys().next_back().copied()
    }

    /// Copy without the given vertices and their incident edges.
    pub fn remove_vertices(&self, drop: &BTreeSet<VertexId>) -> Self {
        Self {
            left: self.left.difference(drop).copied().collect(),
            right: self.right.difference(drop).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(_, (l, r))| !drop.contains(l) && !drop.contains(r))
                .map(|(id, ends)| (*id, *ends))
                .collect(),
        }
    }

    /// Copy without the given edges.
    pub fn remove_edges(&self, drop: &BTreeSet<EdgeId>) -> Self {
        Self {
            left: self.left.clone(),
            right: self.right.clone(),
            edges: self
                .edges
                .iter()
                .filter(|(id, _)| !drop.contains(id))
                .map(|(id, ends)| (*id, *ends))
                .collect(),
        }
    }

    fn left_adjacency(&self) -> BTreeMap<VertexId, Vec<(VertexId, EdgeId)>> {
        let mut adj: BTreeMap<VertexId, Vec<(VertexId, EdgeId)>> =
            self.left.iter().map(|&l| (l, Vec::new())).collect();
        for (&id, &(l, r)) in &self.edges {
            adj.get_mut(&l).unwrap().push((r, id));
        }
        for list in adj.values_mut() {
            list.sort();
        }
        adj
    }

    /// Maximum-cardinality matching by repeated augmenting-path search.
    /// Deterministic: left vertices and adjacency are scanned in ascending
    /// id order.
    pub fn max_matching(&self) -> Matching {
        let adj = self.left_adjacency();
        // right vertex -> (left partner, edge)
        let mut partner: BTreeMap<VertexId, (VertexId, EdgeId)> = BTreeMap::new();
        for &l in &self.left {
            let mut visited = BTreeSet::new();
            augment(l, &adj, &mut partner, &mut visited);
        }
        Matching {
            edges: partner.values().map(|&(_, e)| e).collect(),
        }
    }

    /// Checks that `edges` is a matching of this graph and wraps it.
    pub fn matching(&self, edges: BTreeSet<EdgeId>) -> Result<Matching> {
        let mut used = BTreeSet::new();
        for &id in &edges {
            let Some(&(l, r)) = self.edges.get(&id) else {
                return Err(Error::NotAMatching(format!("{id} is not an edge")));
            };
            if !used.insert(l) || !used.insert(r) {
                return Err(Error::NotAMatching(format!("{id} shares a vertex")));
            }
        }
        Ok(Matching { edges })
    }

    /// Maximum set of vertex-disjoint augmenting paths for `m`, returned as
    /// vertex sequences starting on the left side. Its size always equals
    /// `max_matching().len() - m.len()`.
    pub fn augmenting_path_packing(&self, m: &Matching) -> Result<Vec<Vec<VertexId>>> {
        let m = self.matching(m.edges.clone())?; // re-validate against self
        let best = self.max_matching();
        // The symmetric difference decomposes into alternating paths and
        // cycles; the paths with a surplus best-edge are exactly a maximum
        // packing of m-augmenting paths.
        let diff: BTreeSet<EdgeId> = m
            .edges
            .symmetric_difference(&best.edges)
            .copied()
            .collect();
        let mut incidence: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
        for &id in &diff {
            let (l, r) = self.edges[&id];
            incidence.entry(l).or_default().push(id);
            incidence.entry(r).or_default().push(id);
        }
        let mut seen_edges = BTreeSet::new();
        let mut paths = Vec::new();
        // Walk each path component from one of its degree-1 endpoints;
        // endpoints are scanned in ascending id order.
        for (&start, ids) in &incidence {
            if ids.len() != 1 || seen_edges.contains(&ids[0]) {
                continue;
            }
            let mut path = vec![start];
            let mut here = start;
            let mut next_edge = Some(ids[0]);
            while let Some(eid) = next_edge {
                seen_edges.insert(eid);
                let (l, r) = self.edges[&eid];
                let there = if l == here { r } else { l };
                path.push(there);
                here = there;
                next_edge = incidence[&here]
                    .iter()
                    .copied()
                    .find(|e| !seen_edges.contains(e));
            }
            if self.is_augmenting(&path, &m) {
                if self.side_of(path[0]) == Some(Side::Right) {
                    path.reverse();
                }
                paths.push(path);
            }
        }
        paths.sort();
        Ok(paths)
    }

    /// True when the vertex sequence is an m-augmenting path: free endpoints
    /// and edges alternating out of and in the matching.
    fn is_augmenting(&self, path: &[VertexId], m: &Matching) -> bool {
        if path.len() < 2 || path.len() % 2 != 0 {
            return false;
        }
        let covered = m.covered_vertices(self);
        if covered.contains(&path[0]) || covered.contains(path.last().unwrap()) {
            return false;
        }
        path.windows(2).enumerate().all(|(i, w)| {
            let want_matched = i % 2 == 1;
            self.edges.iter().any(|(id, &(l, r))| {
                (l == w[0] && r == w[1] || l == w[1] && r == w[0])
                    && m.edges.contains(id) == want_matched
            })
        })
    }

    /// Direct the graph against a matching: matched edges run right-to-left,
    /// all others left-to-right. Parallel edges collapse into single arcs.
    pub fn orient(&self, m: &Matching) -> Result<DiGraph> {
        let m = self.matching(m.edges.clone())?;
        let mut d = DiGraph::new();
        for v in self.vertices() {
            d.add_vertex(v);
        }
        for (&id, &(l, r)) in &self.edges {
            if m.edges.contains(&id) {
                d.add_arc(r, l, ArcKind::Plain)?;
            } else {
                d.add_arc(l, r, ArcKind::Plain)?;
            }
        }
        Ok(d)
    }
}

fn augment(
    l: VertexId,
    adj: &BTreeMap<VertexId, Vec<(VertexId, EdgeId)>>,
    partner: &mut BTreeMap<VertexId, (VertexId, EdgeId)>,
    visited: &mut BTreeSet<VertexId>,
) -> bool {
    for &(r, id) in &adj[&l] {
        if visited.contains(&r) {
            continue;
        }
        visited.insert(r);
        let free = match partner.get(&r) {
            None => true,
            Some(&(l2, _)) => augment(l2, adj, partner, visited),
        };
        if free {
            partner.insert(r, (l, id));
            return true;
        }
    }
    false
}

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    edges: BTreeSet<EdgeId>,
}

impl Matching {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn covered_vertices(&self, g: &BipartiteGraph) -> BTreeSet<VertexId> {
        let mut out = BTreeSet::new();
        for &id in &self.edges {
            if let Some((l, r)) = g.edge(id) {
                out.insert(l);
                out.insert(r);
            }
        }
        out
    }
}
