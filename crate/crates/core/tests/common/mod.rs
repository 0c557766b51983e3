//! Shared brute-force oracles for the integration suites. Everything here
//! recomputes results from definitions, independently of the library's
//! search strategies: isomorphism by permutation enumeration, chromatic
//! numbers by plain backtracking in vertex order, induced patterns by
//! all-subsets scans.
#![allow(dead_code)]

use bullhorn_core::graph::{Graph, VertexSet};

/// Brute-force isomorphism by permutation backtracking.
pub fn isomorphic_brute(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(a: &Graph, b: &Graph, image: &mut Vec<usize>, used: &mut Vec<bool>, v: usize) -> bool {
        if v == a.n() {
            return true;
        }
        for cand in 0..a.n() {
            if used[cand] || a.degree(v) != b.degree(cand) {
                continue;
            }
            if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(image[u], cand)) {
                continue;
            }
            image[v] = cand;
            used[cand] = true;
            if rec(a, b, image, used, v + 1) {
                return true;
            }
            used[cand] = false;
            image[v] = usize::MAX;
        }
        false
    }
    rec(a, b, &mut image, &mut used, 0)
}

/// All k-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// All-subsets induced-pattern oracle: does any |P|-subset of g induce a
/// graph isomorphic to the reference?
pub fn naive_has_induced(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    if k > g.n() {
        return false;
    }
    subsets(g.n(), k).into_iter().any(|s| {
        let sub = g.induced(&VertexSet::new(s)).unwrap().graph;
        isomorphic_brute(&sub, pattern)
    })
}

/// Definitional module check.
pub fn naive_is_module(g: &Graph, members: &[usize]) -> bool {
    for v in 0..g.n() {
        if members.contains(&v) {
            continue;
        }
        let deg_in = members.iter().filter(|&&u| g.has_edge(u, v)).count();
        if deg_in != 0 && deg_in != members.len() {
            return false;
        }
    }
    true
}

/// All-subsets homogeneous-set oracle.
pub fn naive_has_homogeneous_set(g: &Graph) -> bool {
    let n = g.n();
    (2..n).any(|k| subsets(n, k).into_iter().any(|s| naive_is_module(g, &s)))
}

/// Exact chromatic number by plain backtracking in vertex order; no clique
/// bounds, no saturation order.
pub fn naive_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    fn colorable(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        let cap = k.min(colors[..v].iter().copied().max().map_or(0, |m| m + 1) + 1);
        for c in 0..cap {
            if g.neighbors(v).any(|u| u < v && colors[u] == c) {
                continue;
            }
            colors[v] = c;
            if colorable(g, k, colors, v + 1) {
                return true;
            }
        }
        false
    }
    (1..=n)
        .find(|&k| colorable(g, k, &mut vec![usize::MAX; n], 0))
        .expect("n colors always suffice")
}

/// Criticality straight from the definition: chi(g) = k and every proper
/// induced subgraph is (k-1)-colorable, checked over all vertex subsets.
pub fn naive_is_k_critical(g: &Graph, k: usize) -> bool {
    if naive_chromatic(g) != k {
        return false;
    }
    let n = g.n();
    for size in 0..n {
        for s in subsets(n, size) {
            let sub = g.induced(&VertexSet::new(s)).unwrap().graph;
            if naive_chromatic(&sub) > k - 1 {
                return false;
            }
        }
    }
    true
}

/// All labeled graphs on n vertices, as upper-triangle bitmask order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let bits = n * n.saturating_sub(1) / 2;
    (0u64..(1 << bits)).map(move |mask| {
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> idx & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn petersen() -> Graph {
    Graph::from_edges(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )
    .unwrap()
}

/// Wheel W5: C5 plus a universal vertex.
pub fn wheel5() -> Graph {
    let mut edges: Vec<(usize, usize)> = Graph::cycle(5).edges().collect();
    edges.extend((0..5).map(|v| (v, 5)));
    Graph::from_edges(6, edges).unwrap()
}
