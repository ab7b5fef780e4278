//! Simple digraphs, vertex cuts via unit-capacity flow, and the torso
//! operation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::VertexId;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    Plain,
    /// Stands in for a directed path whose interior was dropped by `torso`.
    Shortcut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Directed graph with at most one arc per ordered vertex pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiGraph {
    vertices: BTreeSet<VertexId>,
    arcs: BTreeMap<(VertexId, VertexId), ArcKind>,
}

impl DiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    /// Inserts the arc unless one is already present; an existing arc keeps
    /// its kind.
    pub fn add_arc(&mut self, u: VertexId, v: VertexId, kind: ArcKind) -> Result<()> {
        if !self.vertices.contains(&u) {
            return Err(Error::UnknownVertex(u));
        }
        if !self.vertices.contains(&v) {
            return Err(Error::UnknownVertex(v));
        }
        self.arcs.entry((u, v)).or_insert(kind);
        Ok(())
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId, ArcKind)> + '_ {
        self.arcs.iter().map(|(&(u, v), &k)| (u, v, k))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.contains_key(&(u, v))
    }

    pub fn arc_kind(&self, u: VertexId, v: VertexId) -> Option<ArcKind> {
        self.arcs.get(&(u, v)).copied()
    }

    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.arcs
            .range((v, VertexId(0))..=(v, VertexId(u64::MAX)))
            .map(|(&(_, w), _)| w)
    }

    pub fn in_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.arcs
            .keys()
            .filter(move |&&(_, w)| w == v)
            .map(|&(u, _)| u)
    }

    pub fn remove_vertices(&self, drop: &BTreeSet<VertexId>) -> Self {
        Self {
            vertices: self.vertices.difference(drop).copied().collect(),
            arcs: self
                .arcs
                .iter()
                .filter(|(&(u, v), _)| !drop.contains(&u) && !drop.contains(&v))
                .map(|(&k, &v)| (k, v))
                .collect(),
        }
    }

    /// True when a directed path from `u` to `v` exists (the empty path
    /// counts when `u == v`).
    pub fn has_path(&self, u: VertexId, v: VertexId) -> bool {
        if u == v {
            return self.vertices.contains(&u);
        }
        let mut seen = BTreeSet::from([u]);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in self.out_neighbors(x) {
                if y == v {
                    return true;
                }
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Vertices `u` with a directed `v -> u` path (or `u -> v` for
    /// `Backward`) whose internal vertices avoid `blocked`; endpoints are
    /// exempt. `v` itself is never part of the result.
    pub fn reach_avoiding(
        &self,
        v: VertexId,
        blocked: &BTreeSet<VertexId>,
        direction: Direction,
    ) -> BTreeSet<VertexId> {
        if !self.vertices.contains(&v) {
            return BTreeSet::new();
        }
        let mut seen = BTreeSet::from([v]);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            // only the start vertex and non-blocked vertices may be interior
            if x != v && blocked.contains(&x) {
                continue;
            }
            let step: Vec<VertexId> = match direction {
                Direction::Forward => self.out_neighbors(x).collect(),
                Direction::Backward => self.in_neighbors(x).collect(),
            };
            for y in step {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.remove(&v);
        seen
    }

    /// Minimum-cardinality vertex set whose removal leaves no directed path
    /// from `s` to `t`; the cut may intersect `s` and `t`. Among minimum cuts
    /// the one closest to `s` (residual reachability) is returned.
    pub fn min_vertex_cut(&self, s: &BTreeSet<VertexId>, t: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
        self.min_vertex_cut_restricted(s, t, None)
            .expect("unrestricted vertex cut always exists")
            .0
    }

    /// As `min_vertex_cut`, but only vertices in `cuttable` may enter the
    /// cut. Returns `None` when no such cut exists.
    pub fn min_vertex_cut_restricted(
        &self,
        s: &BTreeSet<VertexId>,
        t: &BTreeSet<VertexId>,
        cuttable: Option<&BTreeSet<VertexId>>,
    ) -> Option<(BTreeSet<VertexId>, usize)> {
        let verts: Vec<VertexId> = self.vertices.iter().copied().collect();
        let index: BTreeMap<VertexId, usize> = verts
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let n = verts.len();
        let inf = (n + 1) as i64;
        // nodes: 2i = v_in, 2i+1 = v_out, then source and sink
        let source = 2 * n;
        let sink = 2 * n + 1;
        let mut net = FlowNetwork::new(2 * n + 2);
        for (i, v) in verts.iter().enumerate() {
            let cap = match cuttable {
                Some(allowed) if !allowed.contains(v) => inf,
                _ => 1,
            };
            net.add_edge(2 * i, 2 * i + 1, cap);
        }
        for (&(u, v), _) in &self.arcs {
            net.add_edge(2 * index[&u] + 1, 2 * index[&v], inf);
        }
        for v in s {
            if let Some(&i) = index.get(v) {
                net.add_edge(source, 2 * i, inf);
            }
        }
        for v in t {
            if let Some(&i) = index.get(v) {
                net.add_edge(2 * i + 1, sink, inf);
            }
        }
        let flow = net.max_flow(source, sink, inf);
        if flow >= inf {
            return None; // every cut uses an uncuttable vertex
        }
        let reach = net.residual_reachable(source);
        let cut: BTreeSet<VertexId> = verts
            .iter()
            .enumerate()
            .filter(|(i, _)| reach[2 * i] && !reach[2 * i + 1])
            .map(|(_, &v)| v)
            .collect();
        debug_assert_eq!(cut.len() as i64, flow);
        Some((cut, flow as usize))
    }

    /// Restriction to `z` plus a shortcut arc for every ordered pair of
    /// `z`-vertices joined by a directed path with no interior `z`-vertex.
    /// An arc already present absorbs its would-be shortcut.
    pub fn torso(&self, z: &BTreeSet<VertexId>) -> DiGraph {
        let z: BTreeSet<VertexId> = z.intersection(&self.vertices).copied().collect();
        let mut out = DiGraph {
            vertices: z.clone(),
            arcs: BTreeMap::new(),
        };
        for &u in &z {
            for v in self.reach_avoiding(u, &z, Direction::Forward) {
                if !z.contains(&v) {
                    continue;
                }
                let kind = self.arc_kind(u, v).unwrap_or(ArcKind::Shortcut);
                out.arcs.insert((u, v), kind);
            }
        }
        out
    }
}

/// Dense max-flow network, BFS augmentation. Deterministic: edges are
/// explored in insertion order.
struct FlowNetwork {
    // per node: list of (to, edge index)
    adj: Vec<Vec<(usize, usize)>>,
    // flat edge store: (capacity remaining); reverse edge is index ^ 1
    cap: Vec<i64>,
    to: Vec<usize>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            adj: vec![Vec::new(); nodes],
            cap: Vec::new(),
            to: Vec::new(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) {
        let idx = self.cap.len();
        self.adj[from].push((to, idx));
        self.cap.push(cap);
        self.to.push(to);
        self.adj[to].push((from, idx + 1));
        self.cap.push(0);
        self.to.push(from);
    }

    fn max_flow(&mut self, source: usize, sink: usize, stop_at: i64) -> i64 {
        let mut total = 0;
        while total < stop_at {
            // BFS for a shortest augmenting path
            let mut prev_edge = vec![usize::MAX; self.adj.len()];
            let mut seen = vec![false; self.adj.len()];
            seen[source] = true;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                for &(y, idx) in &self.adj[x] {
                    if !seen[y] && self.cap[idx] > 0 {
                        seen[y] = true;
                        prev_edge[y] = idx;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[sink] {
                break;
            }
            let mut bottleneck = i64::MAX;
            let mut x = sink;
            while x != source {
                let idx = prev_edge[x];
                bottleneck = bottleneck.min(self.cap[idx]);
                x = self.to[idx ^ 1];
            }
            let mut x = sink;
            while x != source {
                let idx = prev_edge[x];
                self.cap[idx] -= bottleneck;
                self.cap[idx ^ 1] += bottleneck;
                x = self.to[idx ^ 1];
            }
            total += bottleneck;
        }
        total
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &(y, idx) in &self.adj[x] {
                if !seen[y] && self.cap[idx] > 0 {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digraph(n: u64, arcs: &[(u64, u64)]) -> DiGraph {
        let mut d = DiGraph::new();
        for v in 0..n {
            d.add_vertex(VertexId(v));
        }
        for &(u, v) in arcs {
            d.add_arc(VertexId(u), VertexId(v), ArcKind::Plain).unwrap();
        }
        d
    }

    #[test]
    fn cut_of_two_disjoint_paths() {
        // s=0, t=5, paths 0-1-5 and 0-2-5; all 1-subsets fail, so 2 is
        // minimal (checked by hand over the 15 subsets of size <= 2).
        let d = digraph(6, &[(0, 1), (1, 5), (0, 2), (2, 5)]);
        let s = BTreeSet::from([VertexId(0)]);
        let t = BTreeSet::from([VertexId(5)]);
        let cut = d.min_vertex_cut(&s, &t);
        assert_eq!(cut.len(), 2);
        let rest = d.remove_vertices(&cut);
        for &a in rest.vertices() {
            if s.contains(&a) {
                for &b in rest.vertices() {
                    if t.contains(&b) {
                        assert!(!rest.has_path(a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn shared_terminal_forces_itself_into_the_cut() {
        let d = digraph(3, &[(0, 1), (1, 2)]);
        let s = BTreeSet::from([VertexId(0), VertexId(1)]);
        let t = BTreeSet::from([VertexId(1), VertexId(2)]);
        let cut = d.min_vertex_cut(&s, &t);
        assert!(cut.contains(&VertexId(1)));
    }

    #[test]
    fn no_path_means_empty_cut() {
        let d = digraph(4, &[(0, 1), (2, 3)]);
        let cut = d.min_vertex_cut(
            &BTreeSet::from([VertexId(0)]),
            &BTreeSet::from([VertexId(2)]),
        );
        assert!(cut.is_empty());
    }

    #[test]
    fn restricted_cut_can_fail() {
        let d = digraph(2, &[(0, 1)]);
        let s = BTreeSet::from([VertexId(0)]);
        let t = BTreeSet::from([VertexId(1)]);
        let nothing = BTreeSet::new();
        assert!(d.min_vertex_cut_restricted(&s, &t, Some(&nothing)).is_none());
        let only_zero = BTreeSet::from([VertexId(0)]);
        let (cut, size) = d.min_vertex_cut_restricted(&s, &t, Some(&only_zero)).unwrap();
        assert_eq!((cut, size), (BTreeSet::from([VertexId(0)]), 1));
    }

    #[test]
    fn reach_avoiding_endpoint_exemption() {
        // chain 0 -> 1 -> 2 with 1 blocked: 1 is reachable as an endpoint,
        // 2 is not since 1 would be interior.
        let d = digraph(3, &[(0, 1), (1, 2)]);
        let blocked = BTreeSet::from([VertexId(1)]);
        let fwd = d.reach_avoiding(VertexId(0), &blocked, Direction::Forward);
        assert_eq!(fwd, BTreeSet::from([VertexId(1)]));

        let none = BTreeSet::new();
        let all = d.reach_avoiding(VertexId(0), &none, Direction::Forward);
        assert_eq!(all, BTreeSet::from([VertexId(1), VertexId(2)]));

        let back = d.reach_avoiding(VertexId(2), &blocked, Direction::Backward);
        assert_eq!(back, BTreeSet::from([VertexId(1)]));
    }

    #[test]
    fn reach_of_isolated_vertex_is_empty() {
        let d = digraph(1, &[]);
        assert!(d
            .reach_avoiding(VertexId(0), &BTreeSet::new(), Direction::Forward)
            .is_empty());
    }

    #[test]
    fn torso_inserts_shortcut() {
        let d = digraph(3, &[(0, 1), (1, 2)]);
        let z = BTreeSet::from([VertexId(0), VertexId(2)]);
        let t = d.torso(&z);
        assert_eq!(t.arc_count(), 1);
        assert_eq!(t.arc_kind(VertexId(0), VertexId(2)), Some(ArcKind::Shortcut));
    }

    #[test]
    fn torso_of_everything_is_identity() {
        let d = digraph(4, &[(0, 1), (1, 2), (2, 0), (1, 3)]);
        let z = d.vertices().clone();
        assert_eq!(d.torso(&z), d);
    }

    #[test]
    fn existing_arc_absorbs_shortcut() {
        let d = digraph(3, &[(0, 1), (1, 2), (0, 2)]);
        let z = BTreeSet::from([VertexId(0), VertexId(2)]);
        let t = d.torso(&z);
        assert_eq!(t.arc_count(), 1);
        assert_eq!(t.arc_kind(VertexId(0), VertexId(2)), Some(ArcKind::Plain));
    }
}
