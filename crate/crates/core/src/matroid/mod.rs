//! Matroids under four concrete representations plus minors over an
//! independence oracle.

mod greedy;
mod linear;

pub use greedy::{fundamental_circuit, greedy_min_basis, max_to_min_transform};
pub use linear::{LinearRepresentation, DEFAULT_PRIME};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId, UnionFind, VertexId, WeightedMultigraph};

/// Ground-set element label, stable under minors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub u64);

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// Partial or total weight assignment on elements.
pub type WeightMap = BTreeMap<ElementId, u64>;

/// A matroid given by its ground set and one of the supported
/// representations. All values are immutable; minors either rewrite the
/// representation or wrap the original oracle.
#[derive(Debug, Clone)]
pub struct Matroid {
    ground: BTreeSet<ElementId>,
    repr: Repr,
}

#[derive(Debug, Clone)]
enum Repr {
    /// Every set of at most `rank` elements is independent.
    Uniform { rank: usize },
    /// Elements are the edges of a multigraph; independent = acyclic.
    /// `loops` collects elements whose edge degenerated during contraction;
    /// each is dependent on its own.
    Graphic {
        graph: WeightedMultigraph,
        loops: BTreeSet<ElementId>,
    },
    Linear(LinearRepresentation),
    /// Elements are the right-side vertices; a set is independent when it
    /// can be completely matched into the left side.
    Transversal { graph: BipartiteGraph },
    /// Frontend over a base oracle: queries go to `base` on `I ∪ contracted`
    /// after checking the set avoids `deleted`. Chained minors flatten, so
    /// each query costs one base call.
    Minor {
        base: Arc<Matroid>,
        deleted: BTreeSet<ElementId>,
        contracted: BTreeSet<ElementId>,
    },
}

impl Matroid {
    pub fn uniform(rank: usize, n: u64) -> Self {
        Self {
            ground: (0..n).map(ElementId).collect(),
            repr: Repr::Uniform { rank },
        }
    }

    pub fn uniform_on(rank: usize, elements: impl IntoIterator<Item = ElementId>) -> Self {
        Self {
            ground: elements.into_iter().collect(),
            repr: Repr::Uniform { rank },
        }
    }

    /// Cycle matroid of a multigraph; elements carry the edge ids.
    pub fn graphic(graph: &WeightedMultigraph) -> Self {
        Self {
            ground: graph.edge_ids().map(|EdgeId(i)| ElementId(i)).collect(),
            repr: Repr::Graphic {
                graph: graph.clone(),
                loops: BTreeSet::new(),
            },
        }
    }

    pub fn linear(repr: LinearRepresentation) -> Self {
        Self {
            ground: repr.columns().iter().copied().collect(),
            repr: Repr::Linear(repr),
        }
    }

    /// Transversal matroid on the right side of a bipartite graph; elements
    /// carry the right vertex ids.
    pub fn transversal(graph: &BipartiteGraph) -> Self {
        Self {
            ground: graph.right().iter().map(|&VertexId(i)| ElementId(i)).collect(),
            repr: Repr::Transversal { graph: graph.clone() },
        }
    }

    /// The same matroid seen purely through its independence oracle. Minors
    /// taken from this view stay oracle frontends instead of rewriting the
    /// representation.
    pub fn oracle_view(&self) -> Self {
        Self {
            ground: self.ground.clone(),
            repr: Repr::Minor {
                base: Arc::new(self.clone()),
                deleted: BTreeSet::new(),
                contracted: BTreeSet::new(),
            },
        }
    }

    pub fn is_oracle_backed(&self) -> bool {
        matches!(self.repr, Repr::Minor { .. })
    }

    /// For oracle-backed matroids: the base matroid and the accumulated
    /// deleted/contracted element sets.
    pub fn minor_parts(&self) -> Option<(&Matroid, &BTreeSet<ElementId>, &BTreeSet<ElementId>)> {
        match &self.repr {
            Repr::Minor { base, deleted, contracted } => Some((base, deleted, contracted)),
            _ => None,
        }
    }

    pub fn linear_parts(&self) -> Option<&LinearRepresentation> {
        match &self.repr {
            Repr::Linear(r) => Some(r),
            _ => None,
        }
    }

    pub fn graphic_parts(&self) -> Option<(&WeightedMultigraph, &BTreeSet<ElementId>)> {
        match &self.repr {
            Repr::Graphic { graph, loops } => Some((graph, loops)),
            _ => None,
        }
    }

    pub fn uniform_rank(&self) -> Option<usize> {
        match &self.repr {
            Repr::Uniform { rank } => Some(*rank),
            _ => None,
        }
    }

    pub fn transversal_parts(&self) -> Option<&BipartiteGraph> {
        match &self.repr {
            Repr::Transversal { graph } => Some(graph),
            _ => None,
        }
    }

    pub fn ground(&self) -> &BTreeSet<ElementId> {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.ground.contains(&e)
    }

    /// Independence query. Errors on elements outside the ground set.
    pub fn is_independent(&self, set: &BTreeSet<ElementId>) -> Result<bool> {
        if let Some(&e) = set.iter().find(|e| !self.ground.contains(e)) {
            return Err(Error::UnknownElement(e));
        }
        Ok(match &self.repr {
            Repr::Uniform { rank } => set.len() <= *rank,
            Repr::Graphic { graph, loops } => {
                if set.iter().any(|e| loops.contains(e)) {
                    false
                } else {
                    let mut dsu = UnionFind::over(graph.vertex_set());
                    set.iter().all(|&ElementId(i)| {
                        let e = graph.edge(EdgeId(i)).expect("ground element has an edge");
                        dsu.union(e.u, e.v)
                    })
                }
            }
            Repr::Linear(repr) => {
                let elems: Vec<ElementId> = set.iter().copied().collect();
                repr.is_independent(&elems)?
            }
            Repr::Transversal { graph } => {
                let queried: BTreeSet<VertexId> =
                    set.iter().map(|&ElementId(i)| VertexId(i)).collect();
                let drop: BTreeSet<VertexId> = graph
                    .right()
                    .iter()
                    .filter(|v| !queried.contains(v))
                    .copied()
                    .collect();
                graph.remove_vertices(&drop).max_matching().len() == set.len()
            }
            Repr::Minor { base, deleted, contracted } => {
                debug_assert!(set.is_disjoint(deleted));
                let mut query = set.clone();
                query.extend(contracted.iter().copied());
                base.is_independent(&query)?
            }
        })
    }

    /// Size of every basis.
    pub fn rank(&self) -> Result<usize> {
        let mut current = BTreeSet::new();
        for &e in &self.ground {
            current.insert(e);
            if !self.is_independent(&current)? {
                current.remove(&e);
            }
        }
        Ok(current.len())
    }

    /// Independent and maximal.
    pub fn is_basis(&self, set: &BTreeSet<ElementId>) -> Result<bool> {
        if !self.is_independent(set)? {
            return Ok(false);
        }
        for &e in &self.ground {
            if set.contains(&e) {
                continue;
            }
            let mut bigger = set.clone();
            bigger.insert(e);
            if self.is_independent(&bigger)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matroid with the elements of `f` deleted. Concrete representations
    /// are rewritten in place; oracle frontends accumulate.
    pub fn delete(&self, f: &BTreeSet<ElementId>) -> Result<Self> {
        if let Some(&e) = f.iter().find(|e| !self.ground.contains(e)) {
            return Err(Error::UnknownElement(e));
        }
        let ground: BTreeSet<ElementId> = self.ground.difference(f).copied().collect();
        let repr = match &self.repr {
            Repr::Uniform { rank } => Repr::Uniform { rank: *rank },
            Repr::Graphic { graph, loops } => {
                let drop: BTreeSet<EdgeId> = f.iter().map(|&ElementId(i)| EdgeId(i)).collect();
                Repr::Graphic {
                    graph: graph.without_edges(&drop),
                    loops: loops.difference(f).copied().collect(),
                }
            }
            Repr::Linear(repr) => {
                let elems: Vec<ElementId> = f.iter().copied().collect();
                Repr::Linear(repr.delete(&elems)?)
            }
            Repr::Transversal { graph } => {
                let drop: BTreeSet<VertexId> = f.iter().map(|&ElementId(i)| VertexId(i)).collect();
                Repr::Transversal { graph: graph.remove_vertices(&drop) }
            }
            Repr::Minor { base, deleted, contracted } => Repr::Minor {
                base: base.clone(),
                deleted: deleted.union(f).copied().collect(),
                contracted: contracted.clone(),
            },
        };
        Ok(Self { ground, repr })
    }

    /// Restriction to `keep`, i.e. deletion of everything else.
    pub fn restrict(&self, keep: &BTreeSet<ElementId>) -> Result<Self> {
        let drop: BTreeSet<ElementId> = self.ground.difference(keep).copied().collect();
        self.delete(&drop)
    }

    /// Matroid with the independent set `i` contracted: `J` is independent
    /// in the result exactly when `J ∪ i` is independent here.
    pub fn contract(&self, i: &BTreeSet<ElementId>) -> Result<Self> {
        if !self.is_independent(i)? {
            return Err(Error::DependentContraction);
        }
        let ground: BTreeSet<ElementId> = self.ground.difference(i).copied().collect();
        let repr = match &self.repr {
            Repr::Uniform { rank } => Repr::Uniform { rank: rank - i.len() },
            Repr::Graphic { graph, loops } => {
                let mut g = graph.clone();
                let mut loops = loops.clone();
                for &ElementId(idx) in i {
                    let before: BTreeSet<EdgeId> = g.edge_ids().collect();
                    g = g.contract_edge(EdgeId(idx))?;
                    let after: BTreeSet<EdgeId> = g.edge_ids().collect();
                    // edges that degenerated into self-loops stay in the
                    // ground set as dependent singletons
                    for gone in before.difference(&after) {
                        if *gone != EdgeId(idx) {
                            loops.insert(ElementId(gone.0));
                        }
                    }
                }
                Repr::Graphic { graph: g, loops }
            }
            Repr::Linear(repr) => {
                let elems: Vec<ElementId> = i.iter().copied().collect();
                Repr::Linear(repr.contract(&elems)?)
            }
            // transversal matroids are not closed under contraction, so the
            // result is an oracle frontend
            Repr::Transversal { .. } => Repr::Minor {
                base: Arc::new(self.clone()),
                deleted: BTreeSet::new(),
                contracted: i.clone(),
            },
            Repr::Minor { base, deleted, contracted } => Repr::Minor {
                base: base.clone(),
                deleted: deleted.clone(),
                contracted: contracted.union(i).copied().collect(),
            },
        };
        Ok(Self { ground, repr })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[u64]) -> BTreeSet<ElementId> {
        ids.iter().copied().map(ElementId).collect()
    }

    fn triangle_graph() -> WeightedMultigraph {
        let mut g = WeightedMultigraph::with_vertices(0..3);
        g.add_edge(EdgeId(1), VertexId(0), VertexId(1), None).unwrap();
        g.add_edge(EdgeId(2), VertexId(1), VertexId(2), None).unwrap();
        g.add_edge(EdgeId(3), VertexId(2), VertexId(0), None).unwrap();
        g
    }

    #[test]
    fn uniform_independence() {
        let m = Matroid::uniform(2, 4);
        assert!(m.is_independent(&set(&[0, 1])).unwrap());
        assert!(!m.is_independent(&set(&[0, 1, 2])).unwrap());
        assert_eq!(
            m.is_independent(&set(&[9])),
            Err(Error::UnknownElement(ElementId(9)))
        );
    }

    #[test]
    fn graphic_triangle_cycle_is_dependent() {
        let m = Matroid::graphic(&triangle_graph());
        assert!(m.is_independent(&set(&[1, 2])).unwrap());
        assert!(!m.is_independent(&set(&[1, 2, 3])).unwrap());
        assert_eq!(m.rank().unwrap(), 2);
    }

    #[test]
    fn uniform_minors() {
        let m = Matroid::uniform(2, 4);
        let d = m.delete(&set(&[3])).unwrap();
        assert_eq!(d.size(), 3);
        assert_eq!(d.rank().unwrap(), 2); // still U(2,3)
        let c = m.contract(&set(&[0])).unwrap();
        assert_eq!(c.size(), 3);
        assert_eq!(c.rank().unwrap(), 1); // U(1,3)
        assert_eq!(m.delete(&BTreeSet::new()).unwrap().size(), 4);
        assert_eq!(m.contract(&BTreeSet::new()).unwrap().rank().unwrap(), 2);
    }

    #[test]
    fn linear_identity_delete() {
        let m = Matroid::linear(LinearRepresentation::identity(7, 3));
        let d = m.delete(&set(&[2])).unwrap();
        assert_eq!(d.size(), 2);
        assert!(d.is_independent(&set(&[0, 1])).unwrap());
        assert_eq!(d.rank().unwrap(), 2);
    }

    #[test]
    fn graphic_contract_keeps_parallel_pair_rank_one() {
        let m = Matroid::graphic(&triangle_graph());
        let c = m.contract(&set(&[1])).unwrap();
        assert_eq!(c.size(), 2);
        assert_eq!(c.rank().unwrap(), 1);
        assert!(c.is_independent(&set(&[2])).unwrap());
        assert!(!c.is_independent(&set(&[2, 3])).unwrap());
    }

    #[test]
    fn graphic_contract_records_loops() {
        // two parallel edges; contracting one turns the other into a loop,
        // which must stay in the ground set as a dependent element
        let mut g = WeightedMultigraph::with_vertices(0..2);
        g.add_edge(EdgeId(0), VertexId(0), VertexId(1), None).unwrap();
        g.add_edge(EdgeId(1), VertexId(0), VertexId(1), None).unwrap();
        let m = Matroid::graphic(&g);
        let c = m.contract(&set(&[0])).unwrap();
        assert_eq!(c.size(), 1);
        assert!(c.contains(ElementId(1)));
        assert!(!c.is_independent(&set(&[1])).unwrap());
        assert_eq!(c.rank().unwrap(), 0);
    }

    #[test]
    fn contract_requires_independent_set() {
        let m = Matroid::uniform(1, 3);
        assert_eq!(m.contract(&set(&[0, 1])), Err(Error::DependentContraction));
    }

    #[test]
    fn transversal_independence_via_matching() {
        // left {10}, right {0,1}: both rights compete for the single left
        let mut g = BipartiteGraph::with_sides([10], [0, 1]);
        g.add_edge(EdgeId(0), VertexId(10), VertexId(0)).unwrap();
        g.add_edge(EdgeId(1), VertexId(10), VertexId(1)).unwrap();
        let m = Matroid::transversal(&g);
        assert!(m.is_independent(&set(&[0])).unwrap());
        assert!(m.is_independent(&set(&[1])).unwrap());
        assert!(!m.is_independent(&set(&[0, 1])).unwrap());
    }

    #[test]
    fn transversal_contract_becomes_oracle_frontend() {
        let mut g = BipartiteGraph::with_sides([10, 11], [0, 1, 2]);
        g.add_edge(EdgeId(0), VertexId(10), VertexId(0)).unwrap();
        g.add_edge(EdgeId(1), VertexId(11), VertexId(1)).unwrap();
        g.add_edge(EdgeId(2), VertexId(10), VertexId(2)).unwrap();
        let m = Matroid::transversal(&g);
        let c = m.contract(&set(&[0])).unwrap();
        assert!(c.is_oracle_backed());
        // {2} needs left vertex 10 which element 0 already uses
        assert!(!c.is_independent(&set(&[2])).unwrap());
        assert!(c.is_independent(&set(&[1])).unwrap());
    }

    #[test]
    fn minor_chain_flattens() {
        let m = Matroid::uniform(3, 6).oracle_view();
        let c = m.contract(&set(&[0])).unwrap();
        let d = c.delete(&set(&[1])).unwrap();
        let c2 = d.contract(&set(&[2])).unwrap();
        let (base, deleted, contracted) = c2.minor_parts().unwrap();
        assert!(!base.is_oracle_backed());
        assert_eq!(deleted, &set(&[1]));
        assert_eq!(contracted, &set(&[0, 2]));
        // rank fell by the two contractions
        assert_eq!(c2.rank().unwrap(), 1);
    }

    #[test]
    fn minor_commutation_on_disjoint_sets() {
        let m = Matroid::graphic(&triangle_graph());
        let a = m.contract(&set(&[1])).unwrap().delete(&set(&[2])).unwrap();
        let b = m.delete(&set(&[2])).unwrap().contract(&set(&[1])).unwrap();
        assert_eq!(a.ground(), b.ground());
        for mask in 0u32..2 {
            let q: BTreeSet<ElementId> = if mask == 0 { set(&[]) } else { set(&[3]) };
            assert_eq!(a.is_independent(&q).unwrap(), b.is_independent(&q).unwrap());
        }
    }
}
