//! Canonical labeling for small graphs, used to deduplicate enumeration
//! output and to decide isomorphism.
//!
//! The scheme is iterative color refinement plus individualization with
//! backtracking. Each leaf of the search tree is a discrete ordered
//! partition, i.e. a labeling; the canonical form is the lexicographically
//! least adjacency bit string over all leaves. Automorphisms discovered when
//! two leaves produce the same bit string prune the search through vertex
//! orbits, which keeps highly symmetric graphs (cliques, empty graphs)
//! tractable. Intended scale is the enumeration budget, n <= 16 or so.

use crate::graph::Graph;
use std::collections::HashMap;

/// The canonical signature of a graph: vertex count followed by the packed
/// upper triangle of the canonically relabeled adjacency matrix. Two graphs
/// are isomorphic iff their keys are equal.
pub type CanonicalKey = Vec<u64>;

/// Canonical form: the key plus the relabeling that realizes it
/// (`relabeling[old] = new`).
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    pub relabeling: Vec<usize>,
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n == 0 {
        return CanonicalForm {
            key: vec![0],
            relabeling: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        best: None,
        leaves: HashMap::new(),
        orbit: (0..n).collect(),
    };
    let colors = refine(g, initial_colors(g));
    search.descend(colors);
    let (key, relabeling) = search.best.expect("search visits at least one leaf");
    CanonicalForm { key, relabeling }
}

/// The canonical key alone.
pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_form(g).key
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    let form = canonical_form(g);
    relabel(g, &form.relabeling)
}

/// Applies a relabeling (`relabeling[old] = new`).
pub fn relabel(g: &Graph, relabeling: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (relabeling[u], relabeling[v]))
        .collect();
    Graph::from_edges(g.n(), edges).expect("relabeling is a bijection")
}

/// Isomorphism via canonical keys.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b)
}

/// All automorphisms of `g`, as permutations `sigma[old] = new`. Plain
/// backtracking constrained by the refined color classes; meant for small
/// graphs (the blowup machinery calls it on bases with n <= 10).
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return vec![Vec::new()];
    }
    let colors = refine(g, initial_colors(g));
    let mut found = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        colors: &[u32],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
        found: &mut Vec<Vec<usize>>,
    ) {
        if v == g.n() {
            found.push(image.clone());
            return;
        }
        for cand in 0..g.n() {
            if used[cand] || colors[cand] != colors[v] {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], cand)) {
                continue;
            }
            image[v] = cand;
            used[cand] = true;
            rec(g, colors, image, used, v + 1, found);
            used[cand] = false;
            image[v] = usize::MAX;
        }
    }
    rec(g, &colors, &mut image, &mut used, 0, &mut found);
    found
}

fn initial_colors(g: &Graph) -> Vec<u32> {
    // Seed with degrees; refinement sharpens from there.
    let mut degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut sorted = degs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    for d in &mut degs {
        *d = sorted.binary_search(d).unwrap();
    }
    degs.into_iter().map(|d| d as u32).collect()
}

/// One-dimensional color refinement. Signatures start with the current
/// color, so new color ranks respect the old order and the partition only
/// ever gets finer; iteration stops when the class count stabilizes.
fn refine(g: &Graph, colors: Vec<u32>) -> Vec<u32> {
    // The enumeration hot path lives at n <= 16, where a fixed-size
    // signature avoids all per-vertex heap traffic.
    if g.n() <= 16 {
        refine_flat::<18>(g, colors)
    } else {
        refine_general(g, colors)
    }
}

/// Stack-allocated signature: current color, degree, then the sorted
/// neighbor colors padded with sentinels. Lexicographic order on the array
/// induces a valid class ordering because equal signatures coincide exactly
/// with equal (color, neighbor multiset) pairs.
fn refine_flat<const CAP: usize>(g: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.n();
    debug_assert!(n + 2 <= CAP);
    let mut sigs: Vec<([u32; CAP], u32)> = Vec::with_capacity(n);
    loop {
        let classes = count_classes(&colors);
        sigs.clear();
        for v in 0..n {
            let mut sig = [u32::MAX; CAP];
            sig[0] = colors[v];
            let mut len = 2;
            for u in g.neighbors(v) {
                sig[len] = colors[u];
                len += 1;
            }
            sig[1] = len as u32 - 2;
            sig[2..len].sort_unstable();
            sigs.push((sig, v as u32));
        }
        sigs.sort_unstable();
        let mut next = 0u32;
        let mut prev: Option<[u32; CAP]> = None;
        for &(sig, v) in sigs.iter() {
            if prev.is_some_and(|p| p != sig) {
                next += 1;
            }
            colors[v as usize] = next;
            prev = Some(sig);
        }
        if count_classes(&colors) == classes {
            return colors;
        }
    }
}

fn refine_general(g: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.n();
    loop {
        let classes = count_classes(&colors);
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut order: Vec<(u32, Vec<u32>)> = sigs.clone();
        order.sort();
        order.dedup();
        for (v, sig) in sigs.drain(..).enumerate() {
            colors[v] = order.binary_search(&sig).unwrap() as u32;
        }
        if count_classes(&colors) == classes {
            return colors;
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(CanonicalKey, Vec<usize>)>,
    /// First labeling seen per leaf key; equal keys yield automorphisms.
    leaves: HashMap<CanonicalKey, Vec<usize>>,
    /// Union-find over vertices; same root means provably same orbit.
    orbit: Vec<usize>,
}

impl<'a> Search<'a> {
    fn descend(&mut self, colors: Vec<u32>) {
        let n = self.g.n();
        // Branch cell: the lowest color class with more than one member.
        let mut cell: Option<(u32, Vec<usize>)> = None;
        for c in 0..n as u32 {
            let members: Vec<usize> = (0..n).filter(|&v| colors[v] == c).collect();
            if members.len() > 1 {
                cell = Some((c, members));
                break;
            }
            if members.is_empty() {
                break;
            }
        }
        let Some((_, members)) = cell else {
            self.leaf(&colors);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.find(u) == self.find(v)) {
                continue;
            }
            tried.push(v);
            // Individualize v: place it just before the rest of its class.
            let mut child: Vec<u32> = colors.iter().map(|&c| c * 2 + 1).collect();
            child[v] -= 1;
            self.descend(refine(self.g, child));
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let n = self.g.n();
        let mut labeling = vec![0usize; n];
        for v in 0..n {
            labeling[v] = colors[v] as usize;
        }
        let key = key_under(self.g, &labeling);
        match self.leaves.get(&key) {
            Some(prev) => {
                // prev and labeling reach the same key, so
                // sigma = prev^-1 ∘ labeling is an automorphism.
                let mut inv_prev = vec![0usize; n];
                for v in 0..n {
                    inv_prev[prev[v]] = v;
                }
                for v in 0..n {
                    self.union(v, inv_prev[labeling[v]]);
                }
            }
            None => {
                self.leaves.insert(key.clone(), labeling.clone());
            }
        }
        if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
            self.best = Some((key, labeling));
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.orbit[v] != v {
            self.orbit[v] = self.orbit[self.orbit[v]];
            v = self.orbit[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.orbit[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn key_under(g: &Graph, labeling: &[usize]) -> CanonicalKey {
    let n = g.n();
    let nbits = n * (n - 1) / 2;
    let mut key = vec![0u64; 1 + nbits.div_ceil(64)];
    key[0] = n as u64;
    for (u, v) in g.edges() {
        let (a, b) = {
            let (x, y) = (labeling[u], labeling[v]);
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        };
        let idx = b * (b - 1) / 2 + a;
        key[1 + idx / 64] |= 1 << (idx % 64);
    }
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphic_relabelings_share_a_key() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let perm = vec![3, 5, 0, 4, 1, 2];
        let h = relabel(&g, &perm);
        assert_eq!(canonical_key(&g), canonical_key(&h));
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn non_isomorphic_graphs_differ() {
        // Same degree sequence (all 2s): C6 vs two triangles.
        let c6 = Graph::cycle(6);
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn canonical_graph_is_a_fixed_point() {
        let g = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3)]).unwrap();
        let c = canonical_graph(&g);
        assert_eq!(canonical_graph(&c), c);
        assert!(are_isomorphic(&g, &c));
    }

    #[test]
    fn symmetric_graphs_are_cheap() {
        // Worst cases for naive backtracking; orbit pruning must keep these fast.
        for n in [8, 10, 12] {
            let _ = canonical_key(&Graph::empty(n));
            let _ = canonical_key(&Graph::complete(n));
            let _ = canonical_key(&Graph::complete(n).complement());
        }
    }

    #[test]
    fn automorphism_counts_of_known_graphs() {
        assert_eq!(automorphisms(&Graph::path(4)).len(), 2);
        assert_eq!(automorphisms(&Graph::cycle(5)).len(), 10);
        assert_eq!(automorphisms(&Graph::complete(4)).len(), 24);
        let bull = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
        assert_eq!(automorphisms(&bull).len(), 2);
    }

    #[test]
    fn automorphisms_preserve_adjacency() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        for sigma in automorphisms(&g) {
            for u in 0..6 {
                for v in (u + 1)..6 {
                    assert_eq!(g.has_edge(u, v), g.has_edge(sigma[u], sigma[v]));
                }
            }
        }
    }

    #[test]
    fn empty_and_single_vertex() {
        assert_eq!(canonical_key(&Graph::empty(0)), vec![0]);
        assert_eq!(canonical_key(&Graph::empty(1)), vec![1]);
    }

    #[test]
    fn keys_are_invariant_under_random_relabelings() {
        // Deterministic xorshift so the sweep is reproducible.
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..500 {
            let n = 1 + (next() % 12) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if next() % 100 < 20 + (round % 60) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, (next() % (i as u64 + 1)) as usize);
            }
            let h = relabel(&g, &perm);
            assert_eq!(canonical_key(&g), canonical_key(&h), "round {round}");
            assert_eq!(canonical_graph(&g), canonical_graph(&h), "round {round}");
        }
    }
}
