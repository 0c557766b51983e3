//! Perfect divisibility, 2-divisibility, and minimal non-perfect-divisibility
//! checks, exhaustive at desk scale.
//!
//! Two variants of the dividing condition are implemented because they
//! genuinely differ:
//!
//! * `Standard`: V(H) splits into A, B with H[A] perfect and
//!   omega(H[B]) < omega(H). Perfect graphs divide trivially (B empty).
//! * `TwoDivisible`: both parts must have clique number below omega(H).
//!   C5 already fails this: both parts would have to be stable, which would
//!   2-color an odd cycle.
//!
//! Perfection is decided through the strong perfect graph characterization:
//! a graph is perfect iff neither it nor its complement contains an odd hole.

use crate::graph::{Graph, VertexSet};
use crate::patterns;
use serde::Serialize;
use thiserror::Error;

/// Default cap for the exhaustive sweeps over all induced subgraphs.
pub const DEFAULT_DESK_BUDGET: usize = 9;

/// Hard cap for single-partition searches; beyond this the subset tables do
/// not fit in reasonable memory.
const PARTITION_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisibilityError {
    #[error("graph has no edge; divisibility partitions are defined for graphs with an edge")]
    EdgelessInput,
    #[error("graph on {n} vertices exceeds the sweep budget of {budget}")]
    BudgetExceeded { n: usize, budget: usize },
}

/// Which dividing condition to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisibilityVariant {
    /// One part induces a perfect graph, the other has smaller clique number.
    Standard,
    /// Both parts have clique number strictly below the whole graph's.
    TwoDivisible,
}

impl std::str::FromStr for DivisibilityVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(DivisibilityVariant::Standard),
            "two-divisible" | "2div" => Ok(DivisibilityVariant::TwoDivisible),
            other => Err(format!(
                "unknown variant '{other}' (expected standard or two-divisible)"
            )),
        }
    }
}

/// A partition witnessing divisibility of a graph under a variant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityWitness {
    pub variant: DivisibilityVariant,
    pub part_a: VertexSet,
    pub part_b: VertexSet,
}

impl DivisibilityWitness {
    /// Re-validates the definitional conditions against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.part_a.iter().any(|v| self.part_b.contains(v)) {
            return false;
        }
        if self.part_a.len() + self.part_b.len() != n {
            return false;
        }
        let omega = crate::coloring::clique_number(g).omega;
        let omega_of = |set: &VertexSet| {
            g.induced(set)
                .map(|s| crate::coloring::clique_number(&s.graph).omega)
                .unwrap_or(usize::MAX)
        };
        match self.variant {
            DivisibilityVariant::Standard => {
                let a = match g.induced(&self.part_a) {
                    Ok(s) => s.graph,
                    Err(_) => return false,
                };
                is_perfect(&a) && omega_of(&self.part_b) < omega
            }
            DivisibilityVariant::TwoDivisible => {
                omega_of(&self.part_a) < omega && omega_of(&self.part_b) < omega
            }
        }
    }
}

/// Verdict of a perfect-divisibility sweep. `failing_subgraph` names the
/// least induced subgraph (by subset order) with an edge but no witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectDivisibility {
    pub holds: bool,
    pub failing_subgraph: Option<VertexSet>,
}

/// Verdict of a minimal-non-perfect-divisibility check (standard variant).
/// When `g` fails only because some proper induced subgraph is itself not
/// perfectly divisible, that subgraph is reported.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MnpdReport {
    pub is_mnpd: bool,
    pub failing_subgraph: Option<VertexSet>,
}

/// Perfection via the strong perfect graph characterization: no odd hole in
/// the graph or its complement.
pub fn is_perfect(g: &Graph) -> bool {
    patterns::find_hole(g, 5, true).is_none()
        && patterns::find_hole(&g.complement(), 5, true).is_none()
}

/// Searches for a witness partition of the whole vertex set under `variant`,
/// trying part B in ascending subset order. Exhaustive over bipartitions.
pub fn divisible_partition(
    g: &Graph,
    variant: DivisibilityVariant,
) -> Result<Option<DivisibilityWitness>, DivisibilityError> {
    let n = g.n();
    if g.edge_count() == 0 {
        return Err(DivisibilityError::EdgelessInput);
    }
    if n > PARTITION_LIMIT {
        return Err(DivisibilityError::BudgetExceeded {
            n,
            budget: PARTITION_LIMIT,
        });
    }
    let omega = omega_table(g);
    let full: u32 = ones(n);
    let omega_full = omega[full as usize];
    for b in 0..=full {
        let a = full & !b;
        let ok = match variant {
            DivisibilityVariant::Standard => {
                omega[b as usize] < omega_full && {
                    let set = mask_to_set(a);
                    is_perfect(&g.induced(&set).expect("mask within range").graph)
                }
            }
            DivisibilityVariant::TwoDivisible => {
                omega[b as usize] < omega_full && omega[a as usize] < omega_full
            }
        };
        if ok {
            return Ok(Some(DivisibilityWitness {
                variant,
                part_a: mask_to_set(a),
                part_b: mask_to_set(b),
            }));
        }
    }
    Ok(None)
}

/// True iff every induced subgraph with an edge admits a witness partition
/// under `variant`. Exhaustive over subgraphs and bipartitions; capped at
/// the default desk budget.
pub fn is_perfectly_divisible(
    g: &Graph,
    variant: DivisibilityVariant,
) -> Result<PerfectDivisibility, DivisibilityError> {
    is_perfectly_divisible_with_budget(g, variant, DEFAULT_DESK_BUDGET)
}

/// [`is_perfectly_divisible`] with an explicit budget.
pub fn is_perfectly_divisible_with_budget(
    g: &Graph,
    variant: DivisibilityVariant,
    budget: usize,
) -> Result<PerfectDivisibility, DivisibilityError> {
    let n = g.n();
    if n > budget {
        return Err(DivisibilityError::BudgetExceeded { n, budget });
    }
    let tables = SubsetTables::build(g);
    for h in 0..(1u32 << n) {
        if tables.edgeful(h) && !tables.has_witness(h, variant) {
            return Ok(PerfectDivisibility {
                holds: false,
                failing_subgraph: Some(mask_to_set(h)),
            });
        }
    }
    Ok(PerfectDivisibility {
        holds: true,
        failing_subgraph: None,
    })
}

/// Minimal non-perfect divisibility under the standard variant: `g` itself
/// is not perfectly divisible but every proper induced subgraph is.
pub fn is_mnpd(g: &Graph) -> Result<MnpdReport, DivisibilityError> {
    is_mnpd_with_budget(g, DEFAULT_DESK_BUDGET)
}

/// [`is_mnpd`] with an explicit budget.
pub fn is_mnpd_with_budget(g: &Graph, budget: usize) -> Result<MnpdReport, DivisibilityError> {
    let n = g.n();
    if n > budget {
        return Err(DivisibilityError::BudgetExceeded { n, budget });
    }
    let tables = SubsetTables::build(g);
    let full = ones(n);
    // Any proper induced subgraph that is edgeful and witness-free makes a
    // smaller non-perfectly-divisible graph, so g is not minimal.
    for h in 0..full {
        if tables.edgeful(h) && !tables.has_witness(h, DivisibilityVariant::Standard) {
            return Ok(MnpdReport {
                is_mnpd: false,
                failing_subgraph: Some(mask_to_set(h)),
            });
        }
    }
    let own_failure =
        tables.edgeful(full) && !tables.has_witness(full, DivisibilityVariant::Standard);
    Ok(MnpdReport {
        is_mnpd: own_failure,
        failing_subgraph: None,
    })
}

fn ones(n: usize) -> u32 {
    assert!(n <= 32);
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Per-subset tables over a fixed host graph: clique number, edge presence,
/// and perfection, indexed by vertex-subset bitmask.
struct SubsetTables {
    omega: Vec<u8>,
    edge: Vec<bool>,
    perfect: Vec<bool>,
}

impl SubsetTables {
    fn build(g: &Graph) -> SubsetTables {
        let n = g.n();
        let omega = omega_table(g);
        let size = 1usize << n;
        let nb: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).fold(0u32, |acc, u| acc | (1 << u)))
            .collect();
        let mut edge = vec![false; size];
        let mut perfect = vec![false; size];
        for s in 0..size {
            if s == 0 {
                perfect[0] = true;
                continue;
            }
            let v = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            edge[s] = edge[rest] || (rest as u32 & nb[v]) != 0;
            perfect[s] = if edge[s] {
                let sub = g
                    .induced(&mask_to_set(s as u32))
                    .expect("mask within range")
                    .graph;
                is_perfect(&sub)
            } else {
                true
            };
        }
        SubsetTables {
            omega,
            edge,
            perfect,
        }
    }

    fn edgeful(&self, h: u32) -> bool {
        self.edge[h as usize]
    }

    /// Whether `h` splits as A ∪ B satisfying the variant. B runs over
    /// submasks of `h` in ascending order.
    fn has_witness(&self, h: u32, variant: DivisibilityVariant) -> bool {
        let omega_h = self.omega[h as usize];
        let mut b: u32 = 0;
        loop {
            let a = h & !b;
            let ok = match variant {
                DivisibilityVariant::Standard => {
                    self.omega[b as usize] < omega_h && self.perfect[a as usize]
                }
                DivisibilityVariant::TwoDivisible => {
                    self.omega[b as usize] < omega_h && self.omega[a as usize] < omega_h
                }
            };
            if ok {
                return true;
            }
            b = b.wrapping_sub(h) & h;
            if b == 0 {
                return false;
            }
        }
    }
}

/// Clique number for every vertex subset by the standard include/exclude
/// recurrence on the least member.
fn omega_table(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(n <= PARTITION_LIMIT);
    let nb: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |acc, u| acc | (1 << u)))
        .collect();
    let size = 1usize << n;
    let mut omega = vec![0u8; size];
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        omega[s] = omega[rest].max(1 + omega[rest & nb[v] as usize]);
    }
    omega
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_divides_under_both_variants() {
        let k2 = Graph::complete(2);
        for variant in [
            DivisibilityVariant::Standard,
            DivisibilityVariant::TwoDivisible,
        ] {
            let w = divisible_partition(&k2, variant).unwrap().unwrap();
            assert!(w.is_valid_for(&k2));
        }
    }

    #[test]
    fn c5_divides_standard_but_not_two_divisible() {
        let c5 = Graph::cycle(5);
        let w = divisible_partition(&c5, DivisibilityVariant::Standard)
            .unwrap()
            .unwrap();
        assert!(w.is_valid_for(&c5));
        assert!(divisible_partition(&c5, DivisibilityVariant::TwoDivisible)
            .unwrap()
            .is_none());
    }

    #[test]
    fn edgeless_input_is_a_domain_error() {
        let err = divisible_partition(&Graph::empty(3), DivisibilityVariant::Standard).unwrap_err();
        assert_eq!(err, DivisibilityError::EdgelessInput);
    }

    #[test]
    fn bipartite_graphs_are_perfectly_divisible() {
        for g in [Graph::path(4), Graph::cycle(6), Graph::complete(2)] {
            let r = is_perfectly_divisible(&g, DivisibilityVariant::Standard).unwrap();
            assert!(r.holds);
        }
    }

    #[test]
    fn c5_perfectly_divisible_standard_only() {
        let c5 = Graph::cycle(5);
        let std = is_perfectly_divisible(&c5, DivisibilityVariant::Standard).unwrap();
        assert!(std.holds);
        let two = is_perfectly_divisible(&c5, DivisibilityVariant::TwoDivisible).unwrap();
        assert!(!two.holds);
        // The least failing subgraph is C5 itself: every proper induced
        // subgraph with an edge splits into two smaller-clique parts.
        assert_eq!(two.failing_subgraph, Some(VertexSet::full(5)));
    }

    #[test]
    fn budget_is_enforced() {
        let big = Graph::path(10);
        let err = is_perfectly_divisible(&big, DivisibilityVariant::Standard).unwrap_err();
        assert_eq!(err, DivisibilityError::BudgetExceeded { n: 10, budget: 9 });
    }

    #[test]
    fn perfect_graphs_are_not_mnpd() {
        for g in [Graph::complete(4), Graph::path(5), Graph::cycle(6)] {
            let r = is_mnpd(&g).unwrap();
            assert!(!r.is_mnpd);
        }
    }

    #[test]
    fn c5_is_not_mnpd() {
        assert!(!is_mnpd(&Graph::cycle(5)).unwrap().is_mnpd);
    }

    #[test]
    fn perfection_oracle_basics() {
        assert!(is_perfect(&Graph::path(5)));
        assert!(is_perfect(&Graph::complete(6)));
        assert!(!is_perfect(&Graph::cycle(5)));
        assert!(!is_perfect(&Graph::cycle(7).complement()));
        assert!(is_perfect(&Graph::cycle(6)));
    }
}
