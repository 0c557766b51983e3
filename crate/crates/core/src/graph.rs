//! Simple undirected graphs with set-valued adjacency, plus the primitives
//! everything else consumes: complement, induced subgraphs, connectivity and
//! complete/anticomplete tests between vertex sets.
//!
//! Graphs are immutable values: every operation returns a new graph, so
//! enumeration and certificate checking never have to worry about aliasing.

use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Hard cap on the vertex count. Vertex ids must fit in 16 bits; the
/// exhaustive algorithms in this workspace operate on far smaller graphs.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets must be disjoint but share vertex {0}")]
    OverlappingSets(usize),
    #[error("{n} vertices exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooManyVertices { n: usize },
}

/// An immutable simple graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset row per vertex; rows are kept symmetric
/// and irreflexive by construction, so every reachable value is a valid
/// simple graph. Equality and hashing are *labeled*: two graphs compare equal
/// iff they have the same vertex count and identical edge sets. Isomorphism
/// lives in [`crate::canon`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(
            n <= MAX_VERTICES,
            "{n} vertices exceeds the supported maximum"
        );
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// The path 0-1-…-(n-1).
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// The cycle 0-1-…-(n-1)-0. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.set_edge(0, n - 1);
        g
    }

    /// Builds a graph from an edge list, validating ranges and rejecting
    /// self-loops. Duplicate edges are harmless.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// The adjacency row of `v` as a single word; callers must have
    /// `n <= 64`.
    pub(crate) fn row_word(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64 && v < self.n);
        self.bits[v * self.words]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The complement: same vertices, `u ~ v` iff `u != v` and they were
    /// nonadjacent.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// The subgraph induced by `set`, with vertices relabeled `0..|set|`
    /// preserving ascending id order. The returned map sends new ids back to
    /// ids in `self`, so witnesses found in the subgraph can be lifted.
    pub fn induced(&self, set: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        set.validate_for(self)?;
        let map: Vec<usize> = set.iter().collect();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(InducedSubgraph {
            graph: g,
            vertex_map: map,
        })
    }

    /// The graph with vertex `v` deleted and the remaining vertices
    /// relabeled downward.
    pub fn without_vertex(&self, v: usize) -> Graph {
        debug_assert!(v < self.n);
        let mut g = Graph::empty(self.n - 1);
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let nu = if u > v { u - 1 } else { u };
            for w in self.neighbors(u) {
                if w > u && w != v {
                    let nw = if w > v { w - 1 } else { w };
                    g.set_edge(nu, nw);
                }
            }
        }
        g
    }

    /// Extends the graph by one vertex (id `n`) adjacent to `neighbors`.
    pub fn with_added_vertex(&self, neighbors: &[usize]) -> Graph {
        let n = self.n + 1;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for &u in neighbors {
            assert!(u < self.n, "new vertex may only attach to existing ones");
            g.set_edge(u, self.n);
        }
        g
    }

    /// Connectivity; the graphs on 0 and 1 vertices count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Connectivity of the complement.
    pub fn is_coconnected(&self) -> bool {
        self.complement().is_connected()
    }

    /// Connected components as vertex sets, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comps.push(VertexSet::new(comp));
        }
        comps
    }

    /// True iff every `a`-`b` pair is an edge. The sets must be disjoint;
    /// empty sets are complete to anything.
    pub fn is_complete_to(&self, a: &VertexSet, b: &VertexSet) -> Result<bool, GraphError> {
        self.check_disjoint(a, b)?;
        for u in a.iter() {
            for v in b.iter() {
                if !self.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff no `a`-`b` pair is an edge. The sets must be disjoint.
    pub fn is_anticomplete_to(&self, a: &VertexSet, b: &VertexSet) -> Result<bool, GraphError> {
        self.check_disjoint(a, b)?;
        for u in a.iter() {
            for v in b.iter() {
                if self.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_disjoint(&self, a: &VertexSet, b: &VertexSet) -> Result<(), GraphError> {
        a.validate_for(self)?;
        b.validate_for(self)?;
        for v in a.iter() {
            if b.contains(v) {
                return Err(GraphError::OverlappingSets(v));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// An induced subgraph together with the map from its vertex ids back to the
/// parent graph's ids (`vertex_map[new] = old`).
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
}

/// A set of vertex ids, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    /// All vertices of a graph on `n` vertices.
    pub fn full(n: usize) -> VertexSet {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// The vertices of `0..n` not in this set.
    pub fn complement_in(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn validate_for(&self, g: &Graph) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= g.n() => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            }),
            _ => Ok(()),
        }
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> VertexSet {
        VertexSet::new(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        VertexSet::new(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_c5_is_a_5_cycle() {
        let c5 = Graph::cycle(5);
        let co = c5.complement();
        assert_eq!(co.edge_count(), 5);
        // C5 is self-complementary: the complement is the cycle 0-2-4-1-3-0.
        for v in 0..5 {
            assert_eq!(co.degree(v), 2);
        }
        assert!(co.is_connected());
    }

    #[test]
    fn complement_of_p5_is_the_house() {
        let house = Graph::path(5).complement();
        assert_eq!(house.edge_count(), 6);
        let mut degs: Vec<usize> = (0..5).map(|v| house.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn complement_of_k3_is_edgeless() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
    }

    #[test]
    fn induced_four_vertices_of_c5_is_p4() {
        let c5 = Graph::cycle(5);
        let sub = c5.induced(&VertexSet::new(vec![0, 1, 2, 3])).unwrap().graph;
        assert_eq!(sub, Graph::path(4));
    }

    #[test]
    fn induced_full_set_is_identity() {
        let g = Graph::from_edges(6, [(0, 3), (1, 4), (2, 5), (0, 5)]).unwrap();
        let sub = g.induced(&VertexSet::full(6)).unwrap();
        assert_eq!(sub.graph, g);
        assert_eq!(sub.vertex_map, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn induced_triangle_of_bull() {
        let bull = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
        let sub = bull.induced(&VertexSet::new(vec![0, 1, 2])).unwrap().graph;
        assert_eq!(sub, Graph::complete(3));
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Graph::path(3);
        let err = g.induced(&VertexSet::new(vec![1, 7])).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { vertex: 7, n: 3 });
    }

    #[test]
    fn connectivity_conventions() {
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
        let c5 = Graph::cycle(5);
        assert!(c5.is_connected() && c5.is_coconnected());
        let k3 = Graph::complete(3);
        assert!(k3.is_connected() && !k3.is_coconnected());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert!(two_k2.is_coconnected()); // complement of 2K2 is C4
    }

    #[test]
    fn complete_and_anticomplete_checks() {
        let k4 = Graph::complete(4);
        assert!(k4
            .is_complete_to(&VertexSet::new(vec![0]), &VertexSet::new(vec![1, 2, 3]))
            .unwrap());
        let e3 = Graph::empty(3);
        assert!(e3
            .is_anticomplete_to(&VertexSet::new(vec![0]), &VertexSet::new(vec![1, 2]))
            .unwrap());
        let p4 = Graph::path(4);
        let a = VertexSet::new(vec![0]);
        let b = VertexSet::new(vec![2, 3]);
        assert!(!p4.is_complete_to(&a, &b).unwrap());
        assert!(p4.is_anticomplete_to(&a, &b).unwrap());
    }

    #[test]
    fn overlapping_sets_rejected() {
        let g = Graph::path(4);
        let err = g
            .is_complete_to(&VertexSet::new(vec![0, 1]), &VertexSet::new(vec![1, 2]))
            .unwrap_err();
        assert_eq!(err, GraphError::OverlappingSets(1));
    }

    #[test]
    fn without_vertex_relabels() {
        let c5 = Graph::cycle(5);
        let g = c5.without_vertex(2);
        assert_eq!(g.n(), 4);
        // Remaining path 1-0-4-3 under the new labels 1-0-3-2.
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 3) && g.has_edge(2, 3));
    }

    #[test]
    fn components_ordered_by_least_vertex() {
        let g = Graph::from_edges(5, [(3, 1), (0, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], VertexSet::new(vec![0, 4]));
        assert_eq!(comps[1], VertexSet::new(vec![1, 3]));
        assert_eq!(comps[2], VertexSet::new(vec![2]));
    }

    #[test]
    fn edge_count_is_half_degree_sum() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (3, 4), (4, 5), (1, 2)]).unwrap();
        let degsum: usize = (0..6).map(|v| g.degree(v)).sum();
        assert_eq!(g.edge_count() * 2, degsum);
    }
}
