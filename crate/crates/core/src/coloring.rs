//! Exact coloring and clique machinery: k-colorability and chromatic number
//! by DSATUR-ordered branch and bound, maximum clique by branch and bound,
//! and a structure-guided coloring for connected (P5, bull)-free inputs that
//! mirrors the modular decomposition instead of searching blindly.

use crate::graph::{Graph, VertexSet};
use crate::modular::{self, BlowupSpec};
use crate::patterns::{self, Embedding, PatternKind};
use serde::Serialize;
use thiserror::Error;

/// A proper coloring. `assignment[v]` is the color of `v`; colors are
/// normalized to `0..k` with every class nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    /// Properness plus normalization: adjacent vertices differ, colors are
    /// exactly `0..k`, and every class is inhabited.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.assignment.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            if c >= self.k {
                return false;
            }
            seen[c] = true;
            for u in g.neighbors(v) {
                if self.assignment[u] == c {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// A maximum clique with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub omega: usize,
    pub witness: VertexSet,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("input is outside the class: induced {} on {:?}", witness.pattern.name(), witness.vertices)]
    OutsideClass { witness: Embedding },
}

/// Searches for a proper coloring with at most `k` colors; exact. The
/// returned coloring may use fewer than `k` colors (its own `k` reports the
/// count actually used).
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring {
            assignment: Vec::new(),
            k: 0,
        });
    }
    if k == 0 {
        return None;
    }
    let greedy = dsatur_greedy(g);
    if greedy.k <= k {
        return Some(greedy);
    }
    if clique_number(g).omega > k {
        return None;
    }
    assert!(
        n <= 128,
        "exact coloring search supports at most 128 vertices"
    );
    let mut assignment = vec![usize::MAX; n];
    if search_coloring(g, k, &mut assignment, 0, n) {
        Some(normalize(assignment))
    } else {
        None
    }
}

/// Greedy DSATUR with as many colors as it takes; gives the upper bound and
/// doubles as the first descent of the exact search.
fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut assignment = vec![usize::MAX; n];
    let mut scratch = vec![false; n + 1];
    for _ in 0..n {
        let v = dsatur_pick(g, &assignment).expect("an uncolored vertex remains");
        for s in scratch.iter_mut() {
            *s = false;
        }
        for u in g.neighbors(v) {
            if assignment[u] != usize::MAX {
                scratch[assignment[u]] = true;
            }
        }
        assignment[v] = (0..).find(|&c| !scratch[c]).unwrap();
    }
    normalize(assignment)
}

/// DSATUR vertex choice: maximum saturation (distinct neighbor colors), ties
/// by degree, then least id.
fn dsatur_pick(g: &Graph, assignment: &[usize]) -> Option<usize> {
    let mut best: Option<(usize, usize, usize)> = None;
    let mut seen = vec![false; g.n() + 1];
    for v in 0..g.n() {
        if assignment[v] != usize::MAX {
            continue;
        }
        for s in seen.iter_mut() {
            *s = false;
        }
        let mut sat = 0;
        for u in g.neighbors(v) {
            let c = assignment[u];
            if c != usize::MAX && !seen[c] {
                seen[c] = true;
                sat += 1;
            }
        }
        let cand = (sat, g.degree(v), v);
        let better = match &best {
            None => true,
            Some(b) => cand.0 > b.0 || (cand.0 == b.0 && cand.1 > b.1),
        };
        if better {
            best = Some(cand);
        }
    }
    best.map(|(_, _, v)| v)
}

/// DSATUR branch and bound. Only the first unused color may open a new
/// class, which breaks color symmetry.
fn search_coloring(
    g: &Graph,
    k: usize,
    assignment: &mut Vec<usize>,
    used: usize,
    remaining: usize,
) -> bool {
    if remaining == 0 {
        return true;
    }
    let Some(v) = dsatur_pick(g, assignment) else {
        return true;
    };
    let mut forbidden = [0u64; 2];
    for u in g.neighbors(v) {
        let c = assignment[u];
        if c != usize::MAX {
            forbidden[c / 64] |= 1 << (c % 64);
        }
    }
    for c in 0..k.min(used + 1) {
        if forbidden[c / 64] >> (c % 64) & 1 == 1 {
            continue;
        }
        assignment[v] = c;
        if search_coloring(g, k, assignment, used.max(c + 1), remaining - 1) {
            return true;
        }
        assignment[v] = usize::MAX;
    }
    false
}

fn normalize(assignment: Vec<usize>) -> Coloring {
    // Colors are opened in increasing order, so they are contiguous from 0.
    let k = assignment.iter().copied().max().map_or(0, |m| m + 1);
    Coloring { assignment, k }
}

/// The chromatic number with a witness coloring: branch and bound between
/// the clique lower bound and a greedy DSATUR upper bound.
pub fn chromatic_number(g: &Graph) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring {
            assignment: Vec::new(),
            k: 0,
        };
    }
    let lower = clique_number(g).omega;
    let greedy = dsatur_greedy(g);
    debug_assert!(lower <= greedy.k);
    if greedy.k == lower {
        return greedy;
    }
    for k in lower..greedy.k {
        if let Some(c) = k_colorable(g, k) {
            return c;
        }
    }
    greedy
}

/// Maximum clique by branch and bound with the size bound
/// `|current| + |candidates| <= |best|`. Deterministic: candidates are tried
/// in ascending order and only strict improvements replace the incumbent.
pub fn clique_number(g: &Graph) -> CliqueResult {
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    if n > 0 {
        let mut current = Vec::new();
        let cands: Vec<usize> = (0..n).collect();
        expand_clique(g, &mut current, cands, &mut best);
    }
    CliqueResult {
        omega: best.len(),
        witness: VertexSet::new(best),
    }
}

fn expand_clique(
    g: &Graph,
    current: &mut Vec<usize>,
    mut cands: Vec<usize>,
    best: &mut Vec<usize>,
) {
    if cands.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    while !cands.is_empty() {
        if current.len() + cands.len() <= best.len() {
            return;
        }
        let v = cands.remove(0);
        current.push(v);
        let next: Vec<usize> = cands
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
        expand_clique(g, current, next, best);
        current.pop();
    }
}

/// The independence number with a witness stable set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let r = clique_number(&g.complement());
    (r.omega, r.witness)
}

/// Two-colors the graph by BFS if possible: `(part0, part1)` with both parts
/// stable. Vertices of even BFS depth (and isolated vertices) land in part0.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut side = vec![None::<bool>; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for u in g.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!sv);
                        queue.push_back(u);
                    }
                    Some(su) if su == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let part0 = (0..n).filter(|&v| side[v] == Some(false)).collect();
    let part1 = (0..n).filter(|&v| side[v] == Some(true)).collect();
    Some((part0, part1))
}

/// Colors a (P5, bull)-free graph by walking its structure instead of
/// searching: split across components and join factors, recursively color
/// each maximal module, collapse modules to cliques (the clique skeleton),
/// and color that blowup of a prime quotient, which in this class is
/// bipartite or 3K1-free, so the residual exact searches stay small. Inputs
/// outside the class are rejected with a forbidden-subgraph witness.
pub fn chi_via_structure(g: &Graph) -> Result<Coloring, ColoringError> {
    if let Some(witness) = patterns::check_free(g, &[PatternKind::P5, PatternKind::Bull]) {
        return Err(ColoringError::OutsideClass { witness });
    }
    Ok(chi_structure_rec(g))
}

fn chi_structure_rec(g: &Graph) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring {
            assignment: Vec::new(),
            k: 0,
        };
    }

    // Components color independently and share the palette.
    let comps = g.components();
    if comps.len() > 1 {
        let mut assignment = vec![0usize; n];
        let mut k = 0;
        for comp in comps {
            let sub = g.induced(&comp).expect("component vertices are in range");
            let c = chi_structure_rec(&sub.graph);
            for (i, &old) in sub.vertex_map.iter().enumerate() {
                assignment[old] = c.assignment[i];
            }
            k = k.max(c.k);
        }
        return Coloring { assignment, k };
    }

    // Join factors (co-components) need pairwise disjoint palettes.
    let cocomps = g.complement().components();
    if cocomps.len() > 1 {
        let mut assignment = vec![0usize; n];
        let mut offset = 0;
        for part in cocomps {
            let sub = g
                .induced(&part)
                .expect("co-component vertices are in range");
            let c = chi_structure_rec(&sub.graph);
            for (i, &old) in sub.vertex_map.iter().enumerate() {
                assignment[old] = offset + c.assignment[i];
            }
            offset += c.k;
        }
        return Coloring {
            assignment,
            k: offset,
        };
    }

    let partition = modular::maximal_modules(g).expect("g is connected and co-connected");

    if partition.blocks.iter().all(|b| b.len() == 1) {
        // Prime: in this class, bipartite or 3K1-free.
        if let Some((a, b)) = bipartition(g) {
            let mut assignment = vec![0usize; n];
            for v in b.iter() {
                assignment[v] = 1;
            }
            let k = if b.is_empty() {
                usize::from(!a.is_empty())
            } else {
                2
            };
            return Coloring { assignment, k };
        }
        debug_assert!(
            patterns::find_induced(g, PatternKind::ThreeK1).is_none(),
            "a prime non-bipartite graph in this class must be 3K1-free"
        );
        return chromatic_number(g);
    }

    // Recursively color the maximal modules, substitute a clique of the
    // module's chromatic number for each, and color that clique skeleton.
    let mut block_colorings = Vec::with_capacity(partition.blocks.len());
    let mut multiplicity = Vec::with_capacity(partition.blocks.len());
    for block in &partition.blocks {
        let sub = g.induced(block).expect("block vertices are in range");
        let c = chi_structure_rec(&sub.graph);
        multiplicity.push(c.k);
        block_colorings.push((sub.vertex_map, c));
    }
    let skeleton = modular::blowup(&BlowupSpec {
        base: partition.quotient.clone(),
        multiplicity: multiplicity.clone(),
    })
    .expect("module chromatic numbers are positive");
    let skeleton_coloring = chromatic_number(&skeleton);

    // Clique p occupies skeleton ids offset_p .. offset_p + multiplicity_p;
    // its colors become the palette for module p.
    let mut assignment = vec![0usize; n];
    let mut offset = 0;
    for (p, (map, c)) in block_colorings.iter().enumerate() {
        let palette: Vec<usize> = (0..multiplicity[p])
            .map(|i| skeleton_coloring.assignment[offset + i])
            .collect();
        for (i, &old) in map.iter().enumerate() {
            assignment[old] = palette[c.assignment[i]];
        }
        offset += multiplicity[p];
    }
    Coloring {
        assignment,
        k: skeleton_coloring.k,
    }
}
