//! Greedy basis computation, fundamental circuits, and the max/min weight
//! transform.

use std::collections::BTreeSet;

use super::{ElementId, Matroid, WeightMap};
use crate::error::{Error, Result};

/// Minimum-weight basis by the greedy rule: scan elements by ascending
/// `(weight, id)` and keep whatever preserves independence. The weight map
/// must cover the whole ground set.
pub fn greedy_min_basis(m: &Matroid, w: &WeightMap) -> Result<(BTreeSet<ElementId>, u64)> {
    let mut order: Vec<(u64, ElementId)> = Vec::with_capacity(m.size());
    for &e in m.ground() {
        let &we = w.get(&e).ok_or(Error::MissingElementWeight(e))?;
        order.push((we, e));
    }
    order.sort();
    let mut basis = BTreeSet::new();
    let mut total: u64 = 0;
    for (we, e) in order {
        basis.insert(e);
        if m.is_independent(&basis)? {
            total = total.checked_add(we).ok_or(Error::Overflow)?;
        } else {
            basis.remove(&e);
        }
    }
    Ok((basis, total))
}

/// The unique circuit inside `basis + e`; it always contains `e`, and is
/// found by dropping exactly the elements whose removal leaves the set
/// independent.
pub fn fundamental_circuit(
    m: &Matroid,
    basis: &BTreeSet<ElementId>,
    e: ElementId,
) -> Result<BTreeSet<ElementId>> {
    if !m.contains(e) {
        return Err(Error::UnknownElement(e));
    }
    if basis.contains(&e) {
        return Err(Error::ElementInBasis(e));
    }
    if !m.is_basis(basis)? {
        return Err(Error::NotABasis);
    }
    let mut extended = basis.clone();
    extended.insert(e);
    let mut circuit = BTreeSet::new();
    for &x in &extended {
        let mut without = extended.clone();
        without.remove(&x);
        if m.is_independent(&without)? {
            circuit.insert(x);
        }
    }
    debug_assert!(circuit.contains(&e));
    Ok(circuit)
}

/// Flip a maximization weighting into a minimization one: `w'(e) = c - w(e)`
/// with `c` the maximum weight. Maximum-weight bases under `w` are exactly
/// the minimum-weight bases under `w'`.
pub fn max_to_min_transform(w: &WeightMap) -> (WeightMap, u64) {
    let c = w.values().copied().max().unwrap_or(0);
    (w.iter().map(|(&e, &v)| (e, c - v)).collect(), c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeId, VertexId, WeightedMultigraph};

    fn set(ids: &[u64]) -> BTreeSet<ElementId> {
        ids.iter().copied().map(ElementId).collect()
    }

    fn weights(pairs: &[(u64, u64)]) -> WeightMap {
        pairs.iter().map(|&(e, w)| (ElementId(e), w)).collect()
    }

    fn triangle_matroid() -> Matroid {
        let mut g = WeightedMultigraph::with_vertices(0..3);
        g.add_edge(EdgeId(1), VertexId(0), VertexId(1), None).unwrap();
        g.add_edge(EdgeId(2), VertexId(1), VertexId(2), None).unwrap();
        g.add_edge(EdgeId(3), VertexId(2), VertexId(0), None).unwrap();
        Matroid::graphic(&g)
    }

    #[test]
    fn greedy_on_graphic_triangle() {
        // bases {1,2},{1,3},{2,3} weigh 6, 1, 5 under (e1=1,e2=5,e3=0)
        let m = triangle_matroid();
        let w = weights(&[(1, 1), (2, 5), (3, 0)]);
        let (basis, total) = greedy_min_basis(&m, &w).unwrap();
        assert_eq!(basis, set(&[1, 3]));
        assert_eq!(total, 1);
    }

    #[test]
    fn greedy_on_uniform() {
        // U(2,3): bases weigh 3, 4, 5; minimum picks {0,1}
        let m = Matroid::uniform(2, 3);
        let w = weights(&[(0, 1), (1, 2), (2, 3)]);
        let (basis, total) = greedy_min_basis(&m, &w).unwrap();
        assert_eq!(basis, set(&[0, 1]));
        assert_eq!(total, 3);
    }

    #[test]
    fn greedy_on_rank_zero() {
        let m = Matroid::uniform(0, 3);
        let w = weights(&[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(greedy_min_basis(&m, &w).unwrap(), (BTreeSet::new(), 0));
    }

    #[test]
    fn greedy_rejects_partial_weights() {
        let m = Matroid::uniform(1, 2);
        let w = weights(&[(0, 1)]);
        assert_eq!(
            greedy_min_basis(&m, &w),
            Err(Error::MissingElementWeight(ElementId(1)))
        );
    }

    #[test]
    fn circuit_in_uniform() {
        let m = Matroid::uniform(2, 4);
        let c = fundamental_circuit(&m, &set(&[0, 1]), ElementId(2)).unwrap();
        assert_eq!(c, set(&[0, 1, 2]));
    }

    #[test]
    fn circuit_in_graphic_triangle() {
        let m = triangle_matroid();
        let c = fundamental_circuit(&m, &set(&[1, 2]), ElementId(3)).unwrap();
        assert_eq!(c, set(&[1, 2, 3]));
    }

    #[test]
    fn circuit_of_chord() {
        // path 0-1-2-3 (edges 0,1,2) plus chord 1-2... use chord between
        // vertices 0 and 2: cycle is {edge0, edge1, chord}
        let mut g = WeightedMultigraph::with_vertices(0..4);
        g.add_edge(EdgeId(0), VertexId(0), VertexId(1), None).unwrap();
        g.add_edge(EdgeId(1), VertexId(1), VertexId(2), None).unwrap();
        g.add_edge(EdgeId(2), VertexId(2), VertexId(3), None).unwrap();
        g.add_edge(EdgeId(3), VertexId(0), VertexId(2), None).unwrap();
        let m = Matroid::graphic(&g);
        let c = fundamental_circuit(&m, &set(&[0, 1, 2]), ElementId(3)).unwrap();
        assert_eq!(c, set(&[0, 1, 3]));
    }

    #[test]
    fn circuit_preconditions() {
        let m = Matroid::uniform(2, 4);
        assert_eq!(
            fundamental_circuit(&m, &set(&[0, 1]), ElementId(0)),
            Err(Error::ElementInBasis(ElementId(0)))
        );
        assert_eq!(
            fundamental_circuit(&m, &set(&[0]), ElementId(1)),
            Err(Error::NotABasis)
        );
    }

    #[test]
    fn transform_arithmetic() {
        let w = weights(&[(0, 0), (1, 2), (2, 5)]);
        let (w2, c) = max_to_min_transform(&w);
        assert_eq!(c, 5);
        assert_eq!(w2, weights(&[(0, 5), (1, 3), (2, 0)]));

        let flat = weights(&[(0, 4), (1, 4)]);
        let (w3, c3) = max_to_min_transform(&flat);
        assert_eq!(c3, 4);
        assert!(w3.values().all(|&v| v == 0));
    }

    #[test]
    fn transform_swaps_optima() {
        // U(2,3) with w=(1,2,3): max basis {1,2} (weight 5) must be the
        // min basis under the transform
        let m = Matroid::uniform(2, 3);
        let w = weights(&[(0, 1), (1, 2), (2, 3)]);
        let (w2, _) = max_to_min_transform(&w);
        let (basis, _) = greedy_min_basis(&m, &w2).unwrap();
        assert_eq!(basis, set(&[1, 2]));
    }
}
