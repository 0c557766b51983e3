//! Homogeneous sets, the Gallai partition into maximal modules, the quotient
//! (skeleton), clique blowups, and the clique skeleton.
//!
//! Module detection works by pair closures: the smallest module containing a
//! given pair of vertices is computed by repeatedly absorbing splitters.
//! This is O(n^3)-flavored rather than linear-time; at desk scale the
//! simplicity is worth far more than asymptotics, and every result is cheap
//! to re-validate against the definition.

use crate::coloring;
use crate::graph::{Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("complement is not connected")]
    NotCoConnected,
    #[error("blowup multiplicity for vertex {0} must be at least 1")]
    ZeroMultiplicity(usize),
}

/// The partition of a connected, co-connected graph into its maximal
/// modules, plus the prime quotient. Blocks are ordered by least member;
/// quotient vertex `i` stands for `blocks[i]`, and `representatives[i]` is
/// that block's least vertex.
#[derive(Debug, Clone)]
pub struct ModulePartition {
    pub blocks: Vec<VertexSet>,
    pub quotient: Graph,
    pub representatives: Vec<usize>,
}

/// A blowup prescription: substitute a clique of size `multiplicity[v]` for
/// each vertex `v` of `base`.
#[derive(Debug, Clone)]
pub struct BlowupSpec {
    pub base: Graph,
    pub multiplicity: Vec<usize>,
}

/// True iff `set` is a module of `g`: every outside vertex is complete or
/// anticomplete to it.
pub fn is_module(g: &Graph, set: &VertexSet) -> bool {
    if set.validate_for(g).is_err() {
        return false;
    }
    for v in 0..g.n() {
        if set.contains(v) {
            continue;
        }
        let adjacent = set.iter().filter(|&u| g.has_edge(u, v)).count();
        if adjacent != 0 && adjacent != set.len() {
            return false;
        }
    }
    true
}

/// True iff `g` has no homogeneous set (no module `M` with `1 < |M| < n`).
pub fn is_prime(g: &Graph) -> bool {
    find_homogeneous_set(g).is_none()
}

/// Finds a homogeneous set if one exists. Deterministic: over all vertex
/// pairs, the closure (smallest module containing the pair) is computed, and
/// the lexicographically least nontrivial closure is returned.
pub fn find_homogeneous_set(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    let mut best: Option<VertexSet> = None;
    for u in 0..n {
        for v in (u + 1)..n {
            if let Some(m) = pair_closure(g, u, v) {
                if best.as_ref().is_none_or(|b| m < *b) {
                    best = Some(m);
                }
            }
        }
    }
    best
}

/// The smallest module containing `{u, v}`, or `None` when it is all of `V`.
/// Grows the candidate by absorbing any outside vertex with both a neighbor
/// and a non-neighbor inside.
fn pair_closure(g: &Graph, u: usize, v: usize) -> Option<VertexSet> {
    let n = g.n();
    let mut members = vec![false; n];
    members[u] = true;
    members[v] = true;
    let mut size = 2;
    let mut changed = true;
    while changed {
        changed = false;
        for w in 0..n {
            if members[w] {
                continue;
            }
            let mut adjacent = 0;
            let mut inside = 0;
            for (x, &is_member) in members.iter().enumerate() {
                if is_member {
                    inside += 1;
                    if g.has_edge(w, x) {
                        adjacent += 1;
                    }
                }
            }
            if adjacent != 0 && adjacent != inside {
                members[w] = true;
                size += 1;
                changed = true;
            }
        }
    }
    if size == n {
        None
    } else {
        Some((0..n).filter(|&w| members[w]).collect())
    }
}

/// The unique partition of a connected, co-connected graph into maximal
/// modules, plus the prime quotient obtained by contracting each block.
///
/// Two vertices share a block exactly when their pair closure is proper;
/// with both connectivity hypotheses this relation is an equivalence and its
/// classes are the maximal modules.
pub fn maximal_modules(g: &Graph) -> Result<ModulePartition, ModularError> {
    if !g.is_connected() {
        return Err(ModularError::NotConnected);
    }
    if g.n() >= 2 && !g.is_coconnected() {
        return Err(ModularError::NotCoConnected);
    }
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if find(&mut parent, u) != find(&mut parent, v) && pair_closure(g, u, v).is_some() {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        let r = find(&mut parent, v);
        by_root.entry(r).or_default().push(v);
    }
    let blocks: Vec<VertexSet> = by_root.into_values().map(VertexSet::new).collect();
    let representatives: Vec<usize> = blocks
        .iter()
        .map(|b| b.iter().next().expect("blocks are nonempty"))
        .collect();
    let mut quotient = Graph::empty(blocks.len());
    for i in 0..representatives.len() {
        for j in (i + 1)..representatives.len() {
            if g.has_edge(representatives[i], representatives[j]) {
                quotient.set_edge(i, j);
            }
        }
    }
    Ok(ModulePartition {
        blocks,
        quotient,
        representatives,
    })
}

/// Substitutes a clique of size `multiplicity[v]` for each base vertex `v`.
/// Base vertex `v` occupies the output ids `offset(v)..offset(v) +
/// multiplicity[v]` where `offset` is the prefix sum; cliques of adjacent
/// base vertices are complete to each other, others anticomplete.
pub fn blowup(spec: &BlowupSpec) -> Result<Graph, ModularError> {
    let base = &spec.base;
    assert_eq!(
        spec.multiplicity.len(),
        base.n(),
        "one multiplicity per base vertex"
    );
    if let Some(v) = (0..base.n()).find(|&v| spec.multiplicity[v] == 0) {
        return Err(ModularError::ZeroMultiplicity(v));
    }
    let mut offset = vec![0usize; base.n() + 1];
    for v in 0..base.n() {
        offset[v + 1] = offset[v] + spec.multiplicity[v];
    }
    let mut g = Graph::empty(offset[base.n()]);
    for v in 0..base.n() {
        for a in offset[v]..offset[v + 1] {
            for b in (a + 1)..offset[v + 1] {
                g.set_edge(a, b);
            }
        }
    }
    for (u, v) in base.edges() {
        for a in offset[u]..offset[u + 1] {
            for b in offset[v]..offset[v + 1] {
                g.set_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// The clique skeleton: each maximal module `S` is replaced by a clique of
/// size chi(G[S]). The result is a blowup of the prime quotient and has the
/// same chromatic number as `g`.
pub fn clique_skeleton(g: &Graph) -> Result<Graph, ModularError> {
    let partition = maximal_modules(g)?;
    let multiplicity: Vec<usize> = partition
        .blocks
        .iter()
        .map(|block| {
            let sub = g.induced(block).expect("block vertices are in range").graph;
            coloring::chromatic_number(&sub).k
        })
        .collect();
    blowup(&BlowupSpec {
        base: partition.quotient,
        multiplicity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_is_prime() {
        assert!(find_homogeneous_set(&Graph::path(4)).is_none());
        assert!(is_prime(&Graph::path(4)));
    }

    #[test]
    fn c4_has_opposite_pair_module() {
        let h = find_homogeneous_set(&Graph::cycle(4)).unwrap();
        assert_eq!(h, VertexSet::new(vec![0, 2]));
        assert!(is_module(&Graph::cycle(4), &h));
    }

    #[test]
    fn bull_is_prime() {
        let bull = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
        assert!(find_homogeneous_set(&bull).is_none());
    }

    #[test]
    fn gem_is_not_prime() {
        // P4 plus a universal vertex: the path is a homogeneous set.
        let gem =
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        let h = find_homogeneous_set(&gem).unwrap();
        assert!(is_module(&gem, &h));
    }

    #[test]
    fn c5_partition_is_trivial() {
        let p = maximal_modules(&Graph::cycle(5)).unwrap();
        assert_eq!(p.blocks.len(), 5);
        assert!(p.blocks.iter().all(|b| b.len() == 1));
        assert_eq!(p.quotient, Graph::cycle(5));
    }

    #[test]
    fn pendant_twin_block() {
        // P4 a-b-c-d plus d' adjacent only to c: blocks {a},{b},{c},{d,d'}.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let p = maximal_modules(&g).unwrap();
        let blocks: Vec<Vec<usize>> = p.blocks.iter().map(|b| b.iter().collect()).collect();
        assert_eq!(blocks, vec![vec![0], vec![1], vec![2], vec![3, 4]]);
        assert_eq!(p.quotient, Graph::path(4));
    }

    #[test]
    fn gallai_preconditions_enforced() {
        assert_eq!(
            maximal_modules(&Graph::complete(3)).unwrap_err(),
            ModularError::NotCoConnected
        );
        assert_eq!(
            maximal_modules(&Graph::empty(3)).unwrap_err(),
            ModularError::NotConnected
        );
    }

    #[test]
    fn blowup_of_k2_is_a_clique() {
        let g = blowup(&BlowupSpec {
            base: Graph::complete(2),
            multiplicity: vec![2, 1],
        })
        .unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn all_ones_blowup_is_identity() {
        let base = Graph::from_edges(5, [(0, 2), (2, 4), (1, 3)]).unwrap();
        let g = blowup(&BlowupSpec {
            base: base.clone(),
            multiplicity: vec![1; 5],
        })
        .unwrap();
        assert_eq!(g, base);
    }

    #[test]
    fn p4_blowup_clique_number() {
        let g = blowup(&BlowupSpec {
            base: Graph::path(4),
            multiplicity: vec![1, 2, 2, 1],
        })
        .unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(coloring::clique_number(&g).omega, 4);
    }

    #[test]
    fn zero_multiplicity_rejected() {
        let err = blowup(&BlowupSpec {
            base: Graph::path(3),
            multiplicity: vec![1, 0, 1],
        })
        .unwrap_err();
        assert_eq!(err, ModularError::ZeroMultiplicity(1));
    }

    #[test]
    fn skeleton_of_prime_graph_is_itself() {
        let c5 = Graph::cycle(5);
        assert_eq!(clique_skeleton(&c5).unwrap(), c5);
    }

    #[test]
    fn skeleton_collapses_stable_module() {
        // C5 with vertex 0 split into a stable pair {0, 5}: chi of the module
        // is 1, so the skeleton is C5 again.
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 1), (5, 4)]).unwrap();
        let skel = clique_skeleton(&g).unwrap();
        assert!(crate::canon::are_isomorphic(&skel, &Graph::cycle(5)));
        assert_eq!(
            coloring::chromatic_number(&skel).k,
            coloring::chromatic_number(&g).k
        );
    }

    #[test]
    fn skeleton_keeps_clique_module() {
        // C5 with vertex 0 blown into an edge {0, 5}: the module needs 2
        // colors, so the skeleton is the same 6-vertex graph.
        let g = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 1),
                (5, 4),
                (5, 0),
            ],
        )
        .unwrap();
        let skel = clique_skeleton(&g).unwrap();
        assert!(crate::canon::are_isomorphic(&skel, &g));
        assert_eq!(coloring::chromatic_number(&skel).k, 3);
        assert_eq!(coloring::chromatic_number(&g).k, 3);
    }
}
