//! Induced-subgraph detection for the small forbidden structures the rest of
//! the toolkit reasons about, returning explicit vertex witnesses.
//!
//! Fixed patterns are matched by plain backtracking over degree-compatible
//! assignments; every pattern has at most 6 vertices, so exhaustive search is
//! cheap and dependency-free. Holes (chordless cycles) get their own search.

use crate::graph::Graph;
use serde::Serialize;

/// The pattern catalog.
///
/// Reference layouts (vertex ids of the pattern graph):
/// * `Pk`: the path `0-1-...-(k-1)`; `C4`: the cycle `0-1-2-3-0`.
/// * `Bull`: triangle `{0,1,2}` with pendants `3-0` and `4-1`.
/// * `House`: the complement of `P5`.
/// * `Chair`: star center `1` with leaves `0,2,3` and the extra edge `3-4`.
/// * `Gem`: path `0-1-2-3` plus the universal vertex `4`.
/// * `Domino`: hexagon `0-1-2-3-4-5-0` plus the chord `2-5`, forming two
///   4-cycles that share an edge.
/// * `Hole { min_len }`: any chordless cycle with at least `min_len >= 4`
///   vertices; `OddHole` additionally requires odd length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    P2,
    P3,
    P4,
    P5,
    C4,
    Triangle,
    #[serde(rename = "3k1")]
    ThreeK1,
    Bull,
    House,
    Chair,
    Gem,
    Domino,
    Hole {
        min_len: usize,
    },
    OddHole {
        min_len: usize,
    },
}

impl PatternKind {
    /// All fixed (finite reference graph) kinds.
    pub const FIXED: [PatternKind; 12] = [
        PatternKind::P2,
        PatternKind::P3,
        PatternKind::P4,
        PatternKind::P5,
        PatternKind::C4,
        PatternKind::Triangle,
        PatternKind::ThreeK1,
        PatternKind::Bull,
        PatternKind::House,
        PatternKind::Chair,
        PatternKind::Gem,
        PatternKind::Domino,
    ];

    /// The reference graph of a fixed pattern; `None` for hole kinds.
    pub fn reference(&self) -> Option<Graph> {
        let g = match self {
            PatternKind::P2 => Graph::path(2),
            PatternKind::P3 => Graph::path(3),
            PatternKind::P4 => Graph::path(4),
            PatternKind::P5 => Graph::path(5),
            PatternKind::C4 => Graph::cycle(4),
            PatternKind::Triangle => Graph::complete(3),
            PatternKind::ThreeK1 => Graph::empty(3),
            PatternKind::Bull => {
                Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap()
            }
            PatternKind::House => Graph::path(5).complement(),
            PatternKind::Chair => Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap(),
            PatternKind::Gem => {
                Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
                    .unwrap()
            }
            PatternKind::Domino => {
                Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (2, 5)])
                    .unwrap()
            }
            PatternKind::Hole { .. } | PatternKind::OddHole { .. } => return None,
        };
        Some(g)
    }

    pub fn name(&self) -> String {
        match self {
            PatternKind::P2 => "p2".into(),
            PatternKind::P3 => "p3".into(),
            PatternKind::P4 => "p4".into(),
            PatternKind::P5 => "p5".into(),
            PatternKind::C4 => "c4".into(),
            PatternKind::Triangle => "triangle".into(),
            PatternKind::ThreeK1 => "3k1".into(),
            PatternKind::Bull => "bull".into(),
            PatternKind::House => "house".into(),
            PatternKind::Chair => "chair".into(),
            PatternKind::Gem => "gem".into(),
            PatternKind::Domino => "domino".into(),
            PatternKind::Hole { min_len } => format!("hole({min_len})"),
            PatternKind::OddHole { min_len } => format!("odd-hole({min_len})"),
        }
    }
}

impl std::str::FromStr for PatternKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "p2" => Ok(PatternKind::P2),
            "p3" => Ok(PatternKind::P3),
            "p4" => Ok(PatternKind::P4),
            "p5" => Ok(PatternKind::P5),
            "c4" => Ok(PatternKind::C4),
            "triangle" | "k3" => Ok(PatternKind::Triangle),
            "3k1" => Ok(PatternKind::ThreeK1),
            "bull" => Ok(PatternKind::Bull),
            "house" => Ok(PatternKind::House),
            "chair" => Ok(PatternKind::Chair),
            "gem" => Ok(PatternKind::Gem),
            "domino" => Ok(PatternKind::Domino),
            "hole" => Ok(PatternKind::Hole { min_len: 5 }),
            "odd-hole" | "oddhole" => Ok(PatternKind::OddHole { min_len: 5 }),
            other => Err(format!("unknown pattern '{other}'")),
        }
    }
}

/// A witness: `vertices[i]` is the host vertex playing pattern vertex `i`.
/// For hole kinds the vertices are listed in cycle order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub pattern: PatternKind,
    pub vertices: Vec<usize>,
}

/// Finds an induced copy of `pattern` in `g`, returning the
/// lexicographically least witness tuple, or `None`. Hole kinds are routed
/// to [`find_hole`].
pub fn find_induced(g: &Graph, pattern: PatternKind) -> Option<Embedding> {
    match pattern {
        PatternKind::Hole { min_len } => find_hole(g, min_len, false),
        PatternKind::OddHole { min_len } => find_hole(g, min_len, true),
        fixed => {
            let p = fixed.reference().expect("fixed pattern");
            embed(g, &p, None).map(|vertices| Embedding {
                pattern: fixed,
                vertices,
            })
        }
    }
}

/// Finds an induced copy of `pattern` whose image contains `required`.
/// Used to re-check hereditary filters incrementally after adding a vertex.
pub fn find_induced_containing(
    g: &Graph,
    pattern: PatternKind,
    required: usize,
) -> Option<Embedding> {
    match pattern {
        PatternKind::Hole { min_len } => find_hole_through(g, required, min_len, false),
        PatternKind::OddHole { min_len } => find_hole_through(g, required, min_len, true),
        fixed => {
            let p = fixed.reference().expect("fixed pattern");
            embed(g, &p, Some(required)).map(|vertices| Embedding {
                pattern: fixed,
                vertices,
            })
        }
    }
}

/// True iff no member of `family` embeds in `g`.
pub fn is_free(g: &Graph, family: &[PatternKind]) -> bool {
    check_free(g, family).is_none()
}

/// `None` when `g` is free of every pattern in `family`; otherwise the first
/// witness found, scanning the family in order.
pub fn check_free(g: &Graph, family: &[PatternKind]) -> Option<Embedding> {
    family.iter().find_map(|&p| find_induced(g, p))
}

/// Checks that an embedding really is an induced copy of its pattern: the
/// map `i -> vertices[i]` must be injective and carry pattern adjacency to
/// host adjacency exactly. Hole embeddings are checked as chordless cycles
/// of admissible length.
pub fn validate_embedding(g: &Graph, emb: &Embedding) -> bool {
    let vs = &emb.vertices;
    if vs.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut sorted = vs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vs.len() {
        return false;
    }
    match emb.pattern {
        PatternKind::Hole { min_len } | PatternKind::OddHole { min_len } => {
            let len = vs.len();
            if len < min_len.max(4) {
                return false;
            }
            if matches!(emb.pattern, PatternKind::OddHole { .. }) && len.is_multiple_of(2) {
                return false;
            }
            for i in 0..len {
                for j in (i + 1)..len {
                    let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                    if g.has_edge(vs[i], vs[j]) != consecutive {
                        return false;
                    }
                }
            }
            true
        }
        fixed => {
            let p = fixed.reference().expect("fixed pattern");
            if vs.len() != p.n() {
                return false;
            }
            for i in 0..vs.len() {
                for j in (i + 1)..vs.len() {
                    if g.has_edge(vs[i], vs[j]) != p.has_edge(i, j) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Backtracking matcher. Pattern vertices are assigned in id order, with
/// host candidates tried ascending, so the first hit is the least witness
/// tuple. `required`, when set, pins one pattern position to that host
/// vertex (each position is tried in turn).
fn embed(g: &Graph, p: &Graph, required: Option<usize>) -> Option<Vec<usize>> {
    let k = p.n();
    if k > g.n() {
        return None;
    }
    if required.is_some_and(|v| v >= g.n()) {
        return None;
    }
    if g.n() <= 64 {
        return embed_bitset(g, p, required);
    }
    let pdeg: Vec<usize> = (0..k).map(|i| p.degree(i)).collect();
    let mut assign = vec![usize::MAX; k];
    let mut used = vec![false; g.n()];
    match required {
        None => extend(g, p, &pdeg, &mut assign, &mut used, 0, None),
        Some(v) => (0..k).find_map(|pos| {
            (g.degree(v) >= pdeg[pos])
                .then(|| extend(g, p, &pdeg, &mut assign, &mut used, 0, Some((pos, v))))
                .flatten()
        }),
    }
}

/// Forward-checking matcher over adjacency words for hosts with n <= 64:
/// the candidate set for a pattern position is one mask intersection per
/// already-assigned position. Semantics (including the lexicographically
/// least witness) match the generic matcher exactly.
fn embed_bitset(g: &Graph, p: &Graph, required: Option<usize>) -> Option<Vec<usize>> {
    let n = g.n();
    let k = p.n();
    let search = BitsetSearch {
        g,
        p,
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        // Hosts with enough degree, per pattern position.
        deg_ok: (0..k)
            .map(|i| {
                let need = p.degree(i);
                (0..n)
                    .filter(|&v| g.degree(v) >= need)
                    .fold(0u64, |m, v| m | 1 << v)
            })
            .collect(),
    };
    let mut assign = vec![usize::MAX; k];
    match required {
        None => search.rec(&mut assign, 0, 0, None).then_some(assign),
        Some(v) => (0..k)
            .find(|&pos| {
                search.deg_ok[pos] >> v & 1 == 1 && search.rec(&mut assign, 0, 0, Some((pos, v)))
            })
            .map(|_| assign),
    }
}

struct BitsetSearch<'a> {
    g: &'a Graph,
    p: &'a Graph,
    deg_ok: Vec<u64>,
    full: u64,
}

impl BitsetSearch<'_> {
    fn rec(
        &self,
        assign: &mut Vec<usize>,
        used: u64,
        i: usize,
        pinned: Option<(usize, usize)>,
    ) -> bool {
        if i == self.p.n() {
            return true;
        }
        let mut cand = self.deg_ok[i] & !used;
        if let Some((pos, v)) = pinned {
            if pos == i {
                cand &= 1 << v;
            } else if pos > i {
                // The pinned vertex must stay available for its position.
                cand &= !(1u64 << v);
            }
        }
        for (j, &host) in assign.iter().enumerate().take(i) {
            let row = self.g.row_word(host);
            cand &= if self.p.has_edge(i, j) {
                row
            } else {
                !row & self.full
            };
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            assign[i] = v;
            if self.rec(assign, used | 1 << v, i + 1, pinned) {
                return true;
            }
        }
        false
    }
}

fn extend(
    g: &Graph,
    p: &Graph,
    pdeg: &[usize],
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    i: usize,
    pinned: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    if i == p.n() {
        return Some(assign.clone());
    }
    let try_candidate =
        |cand: usize, assign: &mut Vec<usize>, used: &mut Vec<bool>| -> Option<Vec<usize>> {
            if used[cand] || g.degree(cand) < pdeg[i] {
                return None;
            }
            if (0..i).any(|j| p.has_edge(i, j) != g.has_edge(cand, assign[j])) {
                return None;
            }
            assign[i] = cand;
            used[cand] = true;
            let r = extend(g, p, pdeg, assign, used, i + 1, pinned);
            used[cand] = false;
            assign[i] = usize::MAX;
            r
        };
    match pinned {
        Some((pos, v)) if pos == i => try_candidate(v, assign, used),
        Some((_, v)) => (0..g.n())
            .filter(|&c| c != v)
            .find_map(|c| try_candidate(c, assign, used)),
        None => (0..g.n()).find_map(|c| try_candidate(c, assign, used)),
    }
}

/// Searches for a chordless cycle of length at least `min_len` (odd length
/// if `odd_only`), returned in cycle order, or `None`. Exhaustive and
/// deterministic; intended for small graphs (roughly `n <= 20`).
pub fn find_hole(g: &Graph, min_len: usize, odd_only: bool) -> Option<Embedding> {
    assert!(min_len >= 4, "holes have at least 4 vertices");
    for start in 0..g.n() {
        if let Some(cycle) = hole_from(g, start, min_len, odd_only) {
            return Some(make_hole_embedding(cycle, min_len, odd_only));
        }
    }
    None
}

fn find_hole_through(
    g: &Graph,
    required: usize,
    min_len: usize,
    odd_only: bool,
) -> Option<Embedding> {
    assert!(min_len >= 4, "holes have at least 4 vertices");
    // The required vertex need not be the cycle minimum, so search every
    // start but keep only cycles through it.
    for start in 0..g.n().min(required + 1) {
        if let Some(cycle) = hole_from_filtered(g, start, min_len, odd_only, Some(required)) {
            return Some(make_hole_embedding(cycle, min_len, odd_only));
        }
    }
    None
}

fn make_hole_embedding(cycle: Vec<usize>, min_len: usize, odd_only: bool) -> Embedding {
    let pattern = if odd_only {
        PatternKind::OddHole { min_len }
    } else {
        PatternKind::Hole { min_len }
    };
    Embedding {
        pattern,
        vertices: cycle,
    }
}

fn hole_from(g: &Graph, start: usize, min_len: usize, odd_only: bool) -> Option<Vec<usize>> {
    hole_from_filtered(g, start, min_len, odd_only, None)
}

/// DFS over chordless paths rooted at `start`, with `start` as the least
/// vertex of the cycle. An extension vertex may only be adjacent to the path
/// tail; adjacency to the root closes a candidate cycle (and forbids further
/// growth, since the root edge would become a chord).
fn hole_from_filtered(
    g: &Graph,
    start: usize,
    min_len: usize,
    odd_only: bool,
    must_contain: Option<usize>,
) -> Option<Vec<usize>> {
    fn dfs(
        g: &Graph,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        min_len: usize,
        odd_only: bool,
        must_contain: Option<usize>,
    ) -> bool {
        let start = path[0];
        let tail = *path.last().unwrap();
        let next: Vec<usize> = g
            .neighbors(tail)
            .filter(|&w| w > start && !on_path[w])
            .collect();
        for w in next {
            // Chordlessness: w may touch only the tail among interior vertices.
            if path[1..path.len() - 1].iter().any(|&x| g.has_edge(w, x)) {
                continue;
            }
            if g.has_edge(w, start) {
                let len = path.len() + 1;
                if len >= min_len.max(4)
                    && (!odd_only || len % 2 == 1)
                    && must_contain.is_none_or(|r| path.contains(&r) || w == r)
                {
                    path.push(w);
                    return true;
                }
                // Closing edge present: w cannot extend a longer chordless
                // cycle through this path.
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if dfs(g, path, on_path, min_len, odd_only, must_contain) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }

    let mut on_path = vec![false; g.n()];
    for second in g.neighbors(start).filter(|&v| v > start) {
        let mut path = vec![start, second];
        on_path[start] = true;
        on_path[second] = true;
        if dfs(g, &mut path, &mut on_path, min_len, odd_only, must_contain) {
            return Some(path);
        }
        on_path[second] = false;
        on_path[start] = false;
    }
    None
}
