//! k-criticality checking, exhaustive enumeration of k-critical graphs in a
//! hereditary class, and k-critical blowups of prime bases.
//!
//! Criticality is tested through vertex deletions: chi(G) = k and
//! chi(G - v) = k - 1 for every v. That matches the definition over all
//! proper induced subgraphs because every proper induced subgraph sits
//! inside some G - v, and deleting a vertex lowers chi by at most one.

use crate::canon;
use crate::coloring;
use crate::generate;
use crate::graph::Graph;
use crate::modular;
use crate::patterns::PatternKind;
use serde::Serialize;
use std::collections::BTreeMap;
use std::collections::HashSet;
use thiserror::Error;

/// Default cap on enumeration size; raise explicitly when you mean it.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalError {
    #[error("n_max = {requested} exceeds the enumeration budget of {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
    #[error("base graph is not prime")]
    NonPrimeBase,
    #[error("graph is not connected")]
    NotConnected,
    #[error("complement is not connected")]
    NotCoConnected,
    #[error("graph is not {k}-critical for k = chi = {k}")]
    NotCritical { k: usize },
}

/// The evidence produced by [`is_k_critical`]. `per_vertex_chi[v]` is
/// chi(G - v); it is only populated when chi(G) = k, since otherwise the
/// verdict is already settled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub k: usize,
    pub is_critical: bool,
    pub failing_vertex: Option<usize>,
    pub per_vertex_chi: Vec<usize>,
}

/// Checks whether `g` is k-critical: chi(g) = k and every vertex deletion
/// drops the chromatic number. When not critical because some deletion keeps
/// chi at k, `failing_vertex` names the least such vertex.
pub fn is_k_critical(g: &Graph, k: usize) -> CriticalityReport {
    assert!(k >= 1, "criticality is defined for k >= 1");
    if coloring::chromatic_number(g).k != k {
        return CriticalityReport {
            k,
            is_critical: false,
            failing_vertex: None,
            per_vertex_chi: Vec::new(),
        };
    }
    let per_vertex_chi: Vec<usize> = (0..g.n())
        .map(|v| coloring::chromatic_number(&g.without_vertex(v)).k)
        .collect();
    let failing_vertex = per_vertex_chi.iter().position(|&c| c != k - 1);
    CriticalityReport {
        k,
        is_critical: failing_vertex.is_none(),
        failing_vertex,
        per_vertex_chi,
    }
}

/// Early-exit criticality check for hot enumeration loops; agrees with
/// [`is_k_critical`].
fn is_critical_quick(g: &Graph, k: usize) -> bool {
    if g.n() < k || coloring::chromatic_number(g).k != k {
        return false;
    }
    (0..g.n()).all(|v| coloring::chromatic_number(&g.without_vertex(v)).k == k - 1)
}

/// The outcome of an exhaustive search for k-critical graphs inside a
/// hereditary class. `found` holds canonical representatives, duplicate-free
/// up to isomorphism, ordered by size then canonical key; `counts_by_n`
/// counts them per vertex count.
#[derive(Debug, Clone)]
pub struct EnumerationRun {
    pub class_filter: Vec<PatternKind>,
    pub k: usize,
    pub n_max: usize,
    pub found: Vec<Graph>,
    pub counts_by_n: BTreeMap<usize, usize>,
}

/// Enumerates all connected graphs on at most `n_max` vertices avoiding the
/// filter patterns, and returns the k-critical ones. Generation is by
/// one-vertex augmentation with canonical-form deduplication, pruning by the
/// hereditary filter at every step; criticality is only tested on the
/// completed graphs.
pub fn enumerate_critical(
    filter: &[PatternKind],
    k: usize,
    n_max: usize,
) -> Result<EnumerationRun, CriticalError> {
    enumerate_critical_with_budget(filter, k, n_max, DEFAULT_ENUMERATION_BUDGET)
}

/// [`enumerate_critical`] with an explicit budget cap.
pub fn enumerate_critical_with_budget(
    filter: &[PatternKind],
    k: usize,
    n_max: usize,
    budget: usize,
) -> Result<EnumerationRun, CriticalError> {
    assert!(k >= 1, "criticality is defined for k >= 1");
    if n_max > budget {
        return Err(CriticalError::BudgetExceeded {
            requested: n_max,
            budget,
        });
    }
    let levels = generate::generate(n_max, true, filter);
    let mut found = Vec::new();
    let mut counts_by_n = BTreeMap::new();
    for (n, level) in levels.iter().enumerate() {
        for g in level {
            if is_critical_quick(g, k) {
                counts_by_n
                    .entry(n)
                    .and_modify(|c| *c += 1)
                    .or_insert(1usize);
                found.push(g.clone());
            }
        }
    }
    // Levels come out canonically sorted already; keep (n, key) order.
    Ok(EnumerationRun {
        class_filter: filter.to_vec(),
        k,
        n_max,
        found,
        counts_by_n,
    })
}

/// All k-critical blowups of a prime base with multiplicities in
/// `1..=mult_cap`, up to isomorphism. Multiplicity vectors are deduplicated
/// under the base's automorphism group first, and the resulting graphs by
/// canonical form.
pub fn critical_blowups(
    base: &Graph,
    k: usize,
    mult_cap: usize,
) -> Result<Vec<Graph>, CriticalError> {
    assert!(mult_cap >= 1, "multiplicity cap must be at least 1");
    assert!(k >= 1, "criticality is defined for k >= 1");
    if !modular::is_prime(base) {
        return Err(CriticalError::NonPrimeBase);
    }
    let n = base.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let auts = canon::automorphisms(base);
    let inverse_auts: Vec<Vec<usize>> = auts
        .iter()
        .map(|sigma| {
            let mut inv = vec![0usize; n];
            for (v, &img) in sigma.iter().enumerate() {
                inv[img] = v;
            }
            inv
        })
        .collect();
    let cliques = clique_masks(base);

    let mut out: Vec<(canon::CanonicalKey, Graph)> = Vec::new();
    let mut seen: HashSet<canon::CanonicalKey> = HashSet::new();
    let mut mult = vec![1usize; n];
    loop {
        if is_orbit_minimal(&mult, &inverse_auts) {
            // omega of the blowup: the heaviest base clique under mult.
            let omega = cliques
                .iter()
                .map(|mask| {
                    (0..n)
                        .filter(|&v| mask >> v & 1 == 1)
                        .map(|v| mult[v])
                        .sum::<usize>()
                })
                .max()
                .unwrap_or(0);
            let total: usize = mult.iter().sum();
            if omega <= k && total >= k {
                let g = modular::blowup(&modular::BlowupSpec {
                    base: base.clone(),
                    multiplicity: mult.clone(),
                })
                .expect("multiplicities are positive");
                if is_critical_quick(&g, k) {
                    let form = canon::canonical_form(&g);
                    if seen.insert(form.key.clone()) {
                        out.push((form.key, canon::relabel(&g, &form.relabeling)));
                    }
                }
            }
        }
        // Odometer over {1..=mult_cap}^n.
        let mut pos = 0;
        while pos < n && mult[pos] == mult_cap {
            mult[pos] = 1;
            pos += 1;
        }
        if pos == n {
            break;
        }
        mult[pos] += 1;
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Lexicographic minimality of the multiplicity vector over the base's
/// automorphism orbit. Permuting by sigma sends the weight of v to
/// sigma(v), so the permuted vector reads `mult[inv[i]]` at position `i`.
fn is_orbit_minimal(mult: &[usize], inverse_auts: &[Vec<usize>]) -> bool {
    inverse_auts.iter().all(|inv| {
        for i in 0..mult.len() {
            match mult[i].cmp(&mult[inv[i]]) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    })
}

/// All cliques of `base` as bitmasks (n <= 63).
fn clique_masks(base: &Graph) -> Vec<u64> {
    let n = base.n();
    assert!(n <= 24, "blowup bases are expected to be small");
    let mut out = Vec::new();
    'subsets: for mask in 1u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !base.has_edge(u, v) {
                    continue 'subsets;
                }
            }
        }
        out.push(mask);
    }
    out
}

/// Tests the clique-skeleton invariant on a k-critical graph: the skeleton
/// obtained by replacing each maximal module with a clique of its chromatic
/// number must itself be k-critical. The preconditions (connected,
/// co-connected, k-critical at k = chi) are enforced and reported.
pub fn check_clique_skeleton_criticality(g: &Graph) -> Result<bool, CriticalError> {
    if !g.is_connected() {
        return Err(CriticalError::NotConnected);
    }
    if !g.is_coconnected() {
        return Err(CriticalError::NotCoConnected);
    }
    let k = coloring::chromatic_number(g).k;
    if k == 0 || !is_critical_quick(g, k) {
        return Err(CriticalError::NotCritical { k });
    }
    let skeleton = modular::clique_skeleton(g).expect("preconditions were checked");
    Ok(is_critical_quick(&skeleton, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w5() -> Graph {
        let mut edges: Vec<(usize, usize)> = Graph::cycle(5).edges().collect();
        edges.extend((0..5).map(|v| (v, 5)));
        Graph::from_edges(6, edges).unwrap()
    }

    #[test]
    fn complete_graphs_are_critical() {
        let r = is_k_critical(&Graph::complete(4), 4);
        assert!(r.is_critical);
        assert_eq!(r.per_vertex_chi, vec![3, 3, 3, 3]);
    }

    #[test]
    fn odd_cycles_are_3_critical() {
        assert!(is_k_critical(&Graph::cycle(5), 3).is_critical);
        assert!(is_k_critical(&Graph::cycle(7), 3).is_critical);
        assert!(!is_k_critical(&Graph::cycle(6), 3).is_critical);
    }

    #[test]
    fn wheel_is_4_critical() {
        assert!(is_k_critical(&w5(), 4).is_critical);
    }

    #[test]
    fn failing_vertex_reported() {
        // C5 plus a pendant vertex: chi = 3 but deleting the pendant keeps 3.
        let mut edges: Vec<(usize, usize)> = Graph::cycle(5).edges().collect();
        edges.push((0, 5));
        let g = Graph::from_edges(6, edges).unwrap();
        let r = is_k_critical(&g, 3);
        assert!(!r.is_critical);
        assert_eq!(r.failing_vertex, Some(5));
        assert_eq!(r.per_vertex_chi, vec![2, 2, 2, 2, 2, 3]);
    }

    #[test]
    fn two_critical_enumeration() {
        let run = enumerate_critical(&[PatternKind::P5, PatternKind::Bull], 2, 6).unwrap();
        assert_eq!(run.found.len(), 1);
        assert_eq!(run.found[0], canon::canonical_graph(&Graph::complete(2)));
    }

    #[test]
    fn three_critical_members_are_k3_and_c5() {
        let run = enumerate_critical(&[PatternKind::P5, PatternKind::Bull], 3, 7).unwrap();
        assert_eq!(run.found.len(), 2);
        assert!(run
            .found
            .iter()
            .any(|g| canon::are_isomorphic(g, &Graph::complete(3))));
        assert!(run
            .found
            .iter()
            .any(|g| canon::are_isomorphic(g, &Graph::cycle(5))));
        assert_eq!(run.counts_by_n.get(&3), Some(&1));
        assert_eq!(run.counts_by_n.get(&5), Some(&1));
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_critical(&[PatternKind::P5], 3, 11).unwrap_err();
        assert_eq!(
            err,
            CriticalError::BudgetExceeded {
                requested: 11,
                budget: 10
            }
        );
    }

    #[test]
    fn blowups_of_k2_give_k3() {
        let out = critical_blowups(&Graph::complete(2), 3, 3).unwrap();
        assert_eq!(out.len(), 1);
        assert!(canon::are_isomorphic(&out[0], &Graph::complete(3)));
    }

    #[test]
    fn p4_has_no_3_critical_blowup() {
        let out = critical_blowups(&Graph::path(4), 3, 3).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn c5_is_its_own_3_critical_blowup() {
        let out = critical_blowups(&Graph::cycle(5), 3, 2).unwrap();
        assert_eq!(out.len(), 1);
        assert!(canon::are_isomorphic(&out[0], &Graph::cycle(5)));
    }

    #[test]
    fn blowup_duplicates_across_orbits_are_merged() {
        // Multiplicity vectors (1,3) and (2,2) of K2 are in different
        // automorphism orbits but both blow up to K4.
        let out = critical_blowups(&Graph::complete(2), 4, 3).unwrap();
        assert_eq!(out.len(), 1);
        assert!(canon::are_isomorphic(&out[0], &Graph::complete(4)));
    }

    #[test]
    fn non_prime_base_rejected() {
        assert_eq!(
            critical_blowups(&Graph::complete(3), 3, 2).unwrap_err(),
            CriticalError::NonPrimeBase
        );
    }

    #[test]
    fn skeleton_criticality_on_prime_graph() {
        assert_eq!(
            check_clique_skeleton_criticality(&Graph::cycle(5)),
            Ok(true)
        );
    }

    #[test]
    fn skeleton_criticality_preconditions() {
        // K4 is a join, hence not co-connected.
        assert_eq!(
            check_clique_skeleton_criticality(&Graph::complete(4)),
            Err(CriticalError::NotCoConnected)
        );
        // C6 is co-connected but not critical (chi = 2 = K2 only).
        assert_eq!(
            check_clique_skeleton_criticality(&Graph::cycle(6)),
            Err(CriticalError::NotCritical { k: 2 })
        );
    }
}
