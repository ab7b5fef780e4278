//! Spanning-tree compression for graphs where the weights of an edge set `F`
//! are not known yet, plus the shortest-path variant.
//!
//! `compress` folds everything the unknown weights cannot influence into an
//! additive offset `k`; for every later weight assignment on `F`, solving the
//! small graph and adding `k` gives the minimum spanning tree weight of the
//! original.

use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeWeights, VertexId, WeightedMultigraph};

/// A connected graph whose edges split into weighted certain edges and the
/// unweighted uncertain set `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncertainMstInstance {
    graph: WeightedMultigraph,
    uncertain: BTreeSet<EdgeId>,
    certain_weights: EdgeWeights,
}

impl UncertainMstInstance {
    /// Validates: connected graph, `F` within the edge set, weights stored
    /// exactly on the certain edges.
    pub fn new(graph: WeightedMultigraph, uncertain: BTreeSet<EdgeId>) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut certain_weights = EdgeWeights::new();
        for (id, e) in graph.edges() {
            match (uncertain.contains(&id), e.weight) {
                (true, Some(_)) => {
                    return Err(Error::InvalidInstance(format!("uncertain edge {id} has a weight")))
                }
                (false, None) => return Err(Error::MissingWeight(id)),
                (false, Some(w)) => {
                    certain_weights.insert(id, w);
                }
                (true, None) => {}
            }
        }
        if let Some(&id) = uncertain.iter().find(|id| graph.edge(**id).is_none()) {
            return Err(Error::UnknownEdge(id));
        }
        Ok(Self { graph, uncertain, certain_weights })
    }

    pub fn graph(&self) -> &WeightedMultigraph {
        &self.graph
    }

    pub fn uncertain(&self) -> &BTreeSet<EdgeId> {
        &self.uncertain
    }

    pub fn certain_weights(&self) -> &EdgeWeights {
        &self.certain_weights
    }

    /// Run the compression pipeline.
    pub fn compress(&self) -> Result<MstBundle> {
        let f = &self.uncertain;
        // minimum spanning forest of the certain part
        let certain_only = self.graph.without_edges(f);
        let msf = certain_only.kruskal_msf(&self.certain_weights)?;

        // keep only forest + uncertain edges
        let mut keep = msf.clone();
        keep.extend(f.iter().copied());
        let g1 = self.graph.restrict_edges(&keep);

        // spanning tree under the zero extension of the weights to F;
        // at equal weight, uncertain edges go first so that none of them can
        // be strangled into a self-loop by the contractions below (and so
        // that re-compressing a bundle is a no-op)
        let tree = g1.kruskal_by(|id, _| {
            if f.contains(&id) {
                Ok((0u64, 0u8, id))
            } else {
                self.certain_weights
                    .get(&id)
                    .map(|&w| (w, 1u8, id))
                    .ok_or(Error::MissingWeight(id))
            }
        })?;

        // contract the certain tree edges, in ascending id order
        let contracted: Vec<EdgeId> = tree.difference(f).copied().collect();
        let mut compressed = g1;
        let mut offset: u64 = 0;
        for &e in &contracted {
            offset = offset
                .checked_add(self.certain_weights[&e])
                .ok_or(Error::Overflow)?;
            compressed = compressed.contract_edge(e)?;
        }

        let surviving_certain: EdgeWeights = compressed
            .edge_ids()
            .filter(|id| !f.contains(id))
            .map(|id| (id, self.certain_weights[&id]))
            .collect();
        debug_assert!(surviving_certain.len() <= f.len());
        debug_assert!(f.iter().all(|id| compressed.edge(*id).is_some()));
        debug_assert!(compressed.is_connected());

        Ok(MstBundle {
            graph: compressed,
            uncertain: f.clone(),
            certain_weights: surviving_certain,
            offset,
            trace: MstTrace { msf, zero_weight_tree: tree, contracted },
        })
    }
}

/// Intermediates of the pipeline, kept for inspection and verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MstTrace {
    /// Minimum spanning forest of the certain part.
    pub msf: BTreeSet<EdgeId>,
    /// Spanning tree under the zero extension to the uncertain edges.
    pub zero_weight_tree: BTreeSet<EdgeId>,
    /// Certain tree edges contracted, in order; their weights sum to `k`.
    pub contracted: Vec<EdgeId>,
}

/// Compressed instance: a small connected graph carrying all uncertain edges
/// (same ids, possibly re-homed endpoints), at most `|F|` certain edges, and
/// the offset `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MstBundle {
    graph: WeightedMultigraph,
    uncertain: BTreeSet<EdgeId>,
    certain_weights: EdgeWeights,
    offset: u64,
    trace: MstTrace,
}

impl MstBundle {
    pub fn graph(&self) -> &WeightedMultigraph {
        &self.graph
    }

    pub fn uncertain(&self) -> &BTreeSet<EdgeId> {
        &self.uncertain
    }

    pub fn certain_weights(&self) -> &EdgeWeights {
        &self.certain_weights
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    pub fn trace(&self) -> &MstTrace {
        &self.trace
    }

    /// Assemble a bundle from parts (as read back from disk). The trace is
    /// not persisted in full fidelity, so this re-checks the structural
    /// invariants instead.
    pub fn from_parts(
        graph: WeightedMultigraph,
        uncertain: BTreeSet<EdgeId>,
        certain_weights: EdgeWeights,
        offset: u64,
    ) -> Result<Self> {
        if let Some(&id) = uncertain.iter().find(|id| graph.edge(**id).is_none()) {
            return Err(Error::UnknownEdge(id));
        }
        if certain_weights.len() > uncertain.len() {
            return Err(Error::InvalidInstance(
                "more certain edges than uncertain ones in a bundle".into(),
            ));
        }
        Ok(Self {
            graph,
            uncertain,
            certain_weights,
            offset,
            trace: MstTrace {
                msf: BTreeSet::new(),
                zero_weight_tree: BTreeSet::new(),
                contracted: Vec::new(),
            },
        })
    }

    /// Reconstruct the instance form of this bundle (trace dropped), e.g. to
    /// compress again.
    pub fn as_instance(&self) -> Result<UncertainMstInstance> {
        let mut g = WeightedMultigraph::new();
        for v in self.graph.vertices() {
            g.add_vertex(v);
        }
        for (id, e) in self.graph.edges() {
            g.add_edge(id, e.u, e.v, self.certain_weights.get(&id).copied())?;
        }
        UncertainMstInstance::new(g, self.uncertain.clone())
    }

    /// Minimum spanning tree weight of the original instance once the
    /// uncertain weights are known.
    pub fn solve(&self, uncertain_weights: &EdgeWeights) -> Result<u64> {
        let mut w = self.certain_weights.clone();
        for &id in &self.uncertain {
            let &wf = uncertain_weights.get(&id).ok_or(Error::MissingWeight(id))?;
            w.insert(id, wf);
        }
        let tree = self.graph.kruskal_msf(&w)?;
        let mut total = self.offset;
        for id in tree {
            total = total.checked_add(w[&id]).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }
}

/// Shortest-path analogue: a graph on `{s, t}` plus the endpoints of the
/// uncertain edges, where each certain edge stands for a shortest route
/// through the certain part and is labeled with its interior vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPathBundle {
    graph: WeightedMultigraph,
    uncertain: BTreeSet<EdgeId>,
    labels: BTreeMap<EdgeId, Vec<VertexId>>,
    s: VertexId,
    t: VertexId,
    offset: u64,
}

impl ShortestPathBundle {
    pub fn graph(&self) -> &WeightedMultigraph {
        &self.graph
    }

    pub fn uncertain(&self) -> &BTreeSet<EdgeId> {
        &self.uncertain
    }

    pub fn labels(&self) -> &BTreeMap<EdgeId, Vec<VertexId>> {
        &self.labels
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.s, self.t)
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    pub fn from_parts(
        graph: WeightedMultigraph,
        uncertain: BTreeSet<EdgeId>,
        labels: BTreeMap<EdgeId, Vec<VertexId>>,
        s: VertexId,
        t: VertexId,
    ) -> Result<Self> {
        if !graph.contains_vertex(s) {
            return Err(Error::UnknownVertex(s));
        }
        if !graph.contains_vertex(t) {
            return Err(Error::UnknownVertex(t));
        }
        Ok(Self { graph, uncertain, labels, s, t, offset: 0 })
    }

    /// Shortest s,t-distance once the uncertain weights are known; `None`
    /// when unreachable.
    pub fn solve(&self, uncertain_weights: &EdgeWeights) -> Result<Option<u64>> {
        let mut w = self.graph.stored_weights();
        for &id in &self.uncertain {
            let &wf = uncertain_weights.get(&id).ok_or(Error::MissingWeight(id))?;
            w.insert(id, wf);
        }
        Ok(dijkstra(&self.graph, &w, self.s).0.get(&self.t).copied())
    }
}

/// Compress a shortest-path instance: keep `s`, `t` and the endpoints of the
/// uncertain edges; connect each pair by an edge weighted with their distance
/// through the certain part, labeled by the interior vertices of one such
/// shortest route. Uncertain edges carry over unchanged.
pub fn compress_shortest_path(
    g: &WeightedMultigraph,
    uncertain: &BTreeSet<EdgeId>,
    s: VertexId,
    t: VertexId,
) -> Result<ShortestPathBundle> {
    if !g.contains_vertex(s) {
        return Err(Error::UnknownVertex(s));
    }
    if !g.contains_vertex(t) {
        return Err(Error::UnknownVertex(t));
    }
    let mut certain_weights = EdgeWeights::new();
    for (id, e) in g.edges() {
        if uncertain.contains(&id) {
            continue;
        }
        certain_weights.insert(id, e.weight.ok_or(Error::MissingWeight(id))?);
    }

    let mut hub: BTreeSet<VertexId> = BTreeSet::from([s, t]);
    for &id in uncertain {
        let e = g.edge(id).ok_or(Error::UnknownEdge(id))?;
        hub.insert(e.u);
        hub.insert(e.v);
    }

    let certain_part = g.without_edges(uncertain);
    let mut out = WeightedMultigraph::new();
    for &v in &hub {
        out.add_vertex(v);
    }
    let mut labels = BTreeMap::new();
    let mut next_id = g.max_edge_id().map_or(0, |EdgeId(i)| i + 1);
    let hub_vec: Vec<VertexId> = hub.iter().copied().collect();
    for (i, &u) in hub_vec.iter().enumerate() {
        let (dist, parent) = dijkstra(&certain_part, &certain_weights, u);
        for &v in &hub_vec[i + 1..] {
            let Some(&d) = dist.get(&v) else { continue };
            let id = EdgeId(next_id);
            next_id += 1;
            out.add_edge(id, u, v, Some(d))?;
            // interior vertices of one shortest u,v-route
            let mut interior = Vec::new();
            let mut here = v;
            while let Some(&p) = parent.get(&here) {
                if p != u {
                    interior.push(p);
                }
                here = p;
            }
            interior.reverse();
            labels.insert(id, interior);
        }
    }
    for &id in uncertain {
        let e = g.edge(id).unwrap();
        out.add_edge(id, e.u, e.v, None)?;
    }
    debug_assert!(out.vertex_count() <= 2 + 2 * uncertain.len());
    ShortestPathBundle::from_parts(out, uncertain.clone(), labels, s, t)
}

/// Dijkstra over non-negative weights; returns distances and a deterministic
/// parent map (smallest predecessor id among equally short routes).
fn dijkstra(
    g: &WeightedMultigraph,
    w: &EdgeWeights,
    from: VertexId,
) -> (BTreeMap<VertexId, u64>, BTreeMap<VertexId, VertexId>) {
    let mut adj: BTreeMap<VertexId, Vec<(VertexId, u64)>> = BTreeMap::new();
    for (id, e) in g.edges() {
        let Some(&we) = w.get(&id) else { continue };
        adj.entry(e.u).or_default().push((e.v, we));
        adj.entry(e.v).or_default().push((e.u, we));
    }
    let mut dist = BTreeMap::from([(from, 0u64)]);
    let mut heap = BinaryHeap::from([std::cmp::Reverse((0u64, from))]);
    while let Some(std::cmp::Reverse((d, v))) = heap.pop() {
        if dist.get(&v) != Some(&d) {
            continue;
        }
        for &(u, we) in adj.get(&v).into_iter().flatten() {
            let nd = d.saturating_add(we);
            if dist.get(&u).is_none_or(|&old| nd < old) {
                dist.insert(u, nd);
                heap.push(std::cmp::Reverse((nd, u)));
            }
        }
    }
    // parents chosen after the fact: smallest (predecessor, weight) pair
    // realizing the distance
    let mut parent = BTreeMap::new();
    for (&v, &d) in &dist {
        if v == from {
            continue;
        }
        let best = adj[&v]
            .iter()
            .filter(|&&(u, we)| dist.get(&u).and_then(|&du| du.checked_add(we)) == Some(d))
            .map(|&(u, _)| u)
            .min()
            .expect("reached vertex has a predecessor");
        parent.insert(v, best);
    }
    (dist, parent)
}
