//! Exhaustive generation of small graphs up to isomorphism by one-vertex
//! augmentation with canonical-form deduplication.
//!
//! Level n+1 is built from level n by attaching a new vertex with every
//! possible neighborhood and keeping one representative per canonical form.
//! Hereditary filters prune at every step: a graph containing a forbidden
//! pattern cannot reappear pattern-free later, and only the new vertex can
//! complete a fresh forbidden copy, so the incremental check pins it.
//!
//! In connected-only mode the new vertex must attach somewhere. That loses
//! nothing: every connected graph on n+1 vertices has a non-cutvertex, so it
//! arises from a connected n-vertex parent in the same hereditary class.

use crate::canon;
use crate::graph::Graph;
use crate::patterns::{self, PatternKind};
use std::collections::HashSet;

/// Generates all graphs (up to isomorphism) with `1..=n_max` vertices that
/// avoid every pattern in `filter`, optionally restricted to connected
/// graphs. `result[n]` holds the size-`n` graphs as canonical
/// representatives in a deterministic order; `result[0]` is empty.
pub fn generate(n_max: usize, connected_only: bool, filter: &[PatternKind]) -> Vec<Vec<Graph>> {
    assert!(n_max <= 16, "exhaustive generation is limited to 16 vertices");
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(); n_max + 1];
    if n_max == 0 {
        return levels;
    }
    let k1 = Graph::empty(1);
    if patterns::is_free(&k1, filter) {
        levels[1].push(k1);
    }
    for n in 1..n_max {
        let mut seen: HashSet<canon::CanonicalKey> = HashSet::new();
        let mut next: Vec<(canon::CanonicalKey, Graph)> = Vec::new();
        for parent in &levels[n] {
            for mask in 0..(1u64 << n) {
                if connected_only && mask == 0 {
                    continue;
                }
                let neighbors: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let child = parent.with_added_vertex(&neighbors);
                if filter
                    .iter()
                    .any(|&p| patterns::find_induced_containing(&child, p, n).is_some())
                {
                    continue;
                }
                let form = canon::canonical_form(&child);
                if seen.insert(form.key.clone()) {
                    next.push((form.key, canon::relabel(&child, &form.relabeling)));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        levels[n + 1] = next.into_iter().map(|(_, g)| g).collect();
    }
    levels
}

/// All graphs up to isomorphism, no filter.
pub fn all_graphs(n_max: usize) -> Vec<Vec<Graph>> {
    generate(n_max, false, &[])
}

/// All connected graphs up to isomorphism, no filter.
pub fn connected_graphs(n_max: usize) -> Vec<Vec<Graph>> {
    generate(n_max, true, &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_known_values() {
        let levels = all_graphs(7);
        let counts: Vec<usize> = (1..=7).map(|n| levels[n].len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn connected_counts_match_known_values() {
        let levels = connected_graphs(7);
        let counts: Vec<usize> = (1..=7).map(|n| levels[n].len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        for level in &levels {
            assert!(level.iter().all(Graph::is_connected));
        }
    }

    #[test]
    fn class_counts_for_p5_bull() {
        let levels = generate(7, true, &[PatternKind::P5, PatternKind::Bull]);
        let counts: Vec<usize> = (1..=7).map(|n| levels[n].len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 19, 79, 341]);
    }

    #[test]
    fn class_counts_for_bull_house() {
        let levels = generate(7, true, &[PatternKind::Bull, PatternKind::House]);
        let counts: Vec<usize> = (1..=7).map(|n| levels[n].len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 19, 79, 341]);
    }

    #[test]
    fn members_really_avoid_the_filter() {
        let filter = [PatternKind::Triangle];
        let levels = generate(6, false, &filter);
        for level in &levels {
            for g in level {
                assert!(patterns::is_free(g, &filter));
            }
        }
        // Triangle-free counts per n: 1, 2, 3, 7, 14, 38.
        let counts: Vec<usize> = (1..=6).map(|n| levels[n].len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 7, 14, 38]);
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let levels = all_graphs(5);
        for level in &levels {
            let mut keys: Vec<_> = level.iter().map(canon::canonical_key).collect();
            for (g, key) in level.iter().zip(&keys) {
                assert_eq!(&canon::canonical_form(g).key, key);
            }
            keys.sort();
            keys.dedup();
            assert_eq!(keys.len(), level.len());
        }
    }
}
