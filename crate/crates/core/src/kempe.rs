//! Alternating-path recoloring on multigraphs.
//!
//! In a proper coloring every vertex has at most one edge of each color, so
//! the `(alpha, beta)`-path leaving a vertex that sees only one of the two
//! colors is unique. Swapping the two colors along such a maximal path keeps
//! the coloring proper. [`reduce_bipartite`] uses this to push every color
//! above `Delta` down, each step strictly lowering the sum.

use std::collections::BTreeSet;

use crate::coloring::{ensure_proper, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, Topology};
use crate::strength::bipartition;

/// A maximal path whose edge colors alternate `first, second, first, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    pub start: usize,
    pub end: usize,
    /// Edge indices in walking order.
    pub edges: Vec<usize>,
    /// Color of the first edge, then the other color of the pair.
    pub first: Color,
    pub second: Color,
}

impl AlternatingPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.edges.len().is_multiple_of(2)
    }
}

/// Per-vertex `(color, edge)` lists.
struct ColorIndex {
    at: Vec<Vec<(Color, usize)>>,
}

impl ColorIndex {
    fn new(g: &Multigraph, colors: &[Color]) -> Self {
        let mut at = vec![Vec::new(); g.nv()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            at[u].push((colors[e], e));
            at[v].push((colors[e], e));
        }
        ColorIndex { at }
    }

    fn edge_of(&self, x: usize, c: Color) -> Option<usize> {
        self.at[x].iter().find(|&&(col, _)| col == c).map(|&(_, e)| e)
    }

    fn has(&self, x: usize, c: Color) -> bool {
        self.edge_of(x, c).is_some()
    }

    fn set(&mut self, g: &Multigraph, e: usize, c: Color) {
        let (u, v) = g.edges()[e];
        for x in [u, v] {
            for entry in self.at[x].iter_mut().filter(|entry| entry.1 == e) {
                entry.0 = c;
            }
        }
    }
}

fn walk(g: &Multigraph, idx: &ColorIndex, start: usize, alpha: Color, beta: Color) -> AlternatingPath {
    let (first, second) = if idx.has(start, alpha) {
        (alpha, beta)
    } else {
        (beta, alpha)
    };
    let mut edges = Vec::new();
    let mut x = start;
    let mut want = first;
    while let Some(e) = idx.edge_of(x, want) {
        edges.push(e);
        x = g.other_end(e, x);
        want = if want == first { second } else { first };
    }
    AlternatingPath { start, end: x, edges, first, second }
}

/// The maximal path from `start` alternating between `alpha` and `beta`.
/// `start` must not see both colors; if it sees neither the path is empty.
pub fn alternating_path(
    g: &Multigraph,
    f: &EdgeColoring,
    start: usize,
    alpha: Color,
    beta: Color,
) -> Result<AlternatingPath> {
    ensure_proper(g, f)?;
    if start >= g.nv() {
        return Err(Error::Precondition(format!("vertex {start} is not in the graph")));
    }
    if alpha == beta {
        return Err(Error::Precondition("alpha and beta must differ".into()));
    }
    let idx = ColorIndex::new(g, f.colors());
    if idx.has(start, alpha) && idx.has(start, beta) {
        return Err(Error::Precondition(format!(
            "vertex {start} sees both colors {alpha} and {beta}, no path starts there"
        )));
    }
    Ok(walk(g, &idx, start, alpha, beta))
}

/// Swaps the two colors along `p`. The path must be a maximal alternating
/// path of `f`, otherwise the swap would clash at an endpoint.
pub fn swap_path(g: &Multigraph, f: &EdgeColoring, p: &AlternatingPath) -> Result<EdgeColoring> {
    ensure_proper(g, f)?;
    let idx = ColorIndex::new(g, f.colors());
    let reject = |why: String| Err(Error::Precondition(format!("not a maximal alternating path: {why}")));

    if p.start >= g.nv() || p.end >= g.nv() {
        return reject("endpoint outside the graph".into());
    }
    let mut x = p.start;
    for (i, &e) in p.edges.iter().enumerate() {
        let want = if i % 2 == 0 { p.first } else { p.second };
        if e >= f.len() || f.color(e) != want {
            return reject(format!("edge {e} at step {i} is not colored {want}"));
        }
        let (u, v) = g.edges()[e];
        if u != x && v != x {
            return reject(format!("edge {e} does not continue from vertex {x}"));
        }
        x = g.other_end(e, x);
    }
    if x != p.end {
        return reject(format!("walk ends at {x}, path claims {}", p.end));
    }
    if p.is_empty() {
        if idx.has(p.start, p.first) || idx.has(p.start, p.second) {
            return reject(format!("vertex {} sees one of the colors", p.start));
        }
        return Ok(f.clone());
    }
    if idx.has(p.start, p.second) {
        return reject(format!("it extends backwards from {}", p.start));
    }
    let next = if p.len().is_multiple_of(2) { p.first } else { p.second };
    if idx.has(p.end, next) {
        return reject(format!("it extends forwards from {}", p.end));
    }

    let mut colors = f.colors().to_vec();
    for &e in &p.edges {
        colors[e] = if colors[e] == p.first { p.second } else { p.first };
    }
    Ok(EdgeColoring::from_raw(colors))
}

/// One elementary recoloring of [`reduce_bipartite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub edge: usize,
    pub from: Color,
    pub to: Color,
    /// Length of the swapped alternating path, 0 for a direct recolor.
    pub path_len: usize,
    pub sum_before: u64,
    pub sum_after: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub coloring: EdgeColoring,
    pub steps: Vec<ReductionStep>,
}

/// Recolors a proper coloring of a bipartite multigraph until it uses only
/// colors `1..=Delta`, never raising the sum.
pub fn reduce_bipartite(g: &Multigraph, f: &EdgeColoring) -> Result<Reduction> {
    reduce_bipartite_observed(g, f, |_, _| {})
}

/// [`reduce_bipartite`] calling `observe` with every step and the coloring
/// right after it.
///
/// Always treats the highest color, lowest edge index first. Let `e = ab`
/// carry color `gamma > Delta`. If some color `<= Delta` is missing at both
/// ends, `e` takes the smallest one. Otherwise the smallest `alpha` seen at
/// `a` but not `b` and `beta` seen at `b` but not `a` exist (each end has at
/// most `Delta - 1` other edges); the `(alpha, beta)`-path from `a` cannot
/// reach `b` in a bipartite graph, so swapping it frees `alpha` at both ends
/// and `e` takes `alpha`. The sum drops by `gamma - alpha` or, for an odd
/// path, by `gamma - beta`.
pub fn reduce_bipartite_observed(
    g: &Multigraph,
    f: &EdgeColoring,
    mut observe: impl FnMut(&ReductionStep, &EdgeColoring),
) -> Result<Reduction> {
    bipartition(g)?;
    ensure_proper(g, f)?;
    let delta = g.max_degree() as Color;
    let mut colors = f.colors().to_vec();
    let mut idx = ColorIndex::new(g, &colors);
    let mut sum = f.sum();
    let mut steps = Vec::new();

    loop {
        let gamma = colors.iter().copied().max().unwrap_or(0);
        if gamma <= delta {
            break;
        }
        let e = colors.iter().position(|&c| c == gamma).unwrap();
        let (a, b) = g.edges()[e];
        let seen = |x: usize| -> BTreeSet<Color> {
            idx.at[x]
                .iter()
                .filter(|&&(c, other)| other != e && c <= delta)
                .map(|&(c, _)| c)
                .collect()
        };
        let (at_a, at_b) = (seen(a), seen(b));
        let sum_before = sum;

        let mut path_len = 0;
        let to = match (1..=delta).find(|c| !at_a.contains(c) && !at_b.contains(c)) {
            Some(free) => free,
            None => {
                let alpha = *at_a.difference(&at_b).next().expect("alpha exists by counting");
                let beta = *at_b.difference(&at_a).next().expect("beta exists by counting");
                let path = walk(g, &idx, a, alpha, beta);
                assert_eq!(path.first, alpha);
                assert_ne!(path.end, b, "alternating path closed an odd cycle");
                for &pe in &path.edges {
                    let c = if colors[pe] == alpha { beta } else { alpha };
                    colors[pe] = c;
                    idx.set(g, pe, c);
                }
                path_len = path.len();
                if path_len % 2 == 1 {
                    sum = sum + u64::from(beta) - u64::from(alpha);
                }
                alpha
            }
        };
        colors[e] = to;
        idx.set(g, e, to);
        sum = sum - u64::from(gamma) + u64::from(to);
        let step = ReductionStep {
            edge: e,
            from: gamma,
            to,
            path_len,
            sum_before,
            sum_after: sum,
        };
        assert!(step.sum_after < step.sum_before, "recoloring must lower the sum");
        let current = EdgeColoring::from_raw(colors.clone());
        debug_assert_eq!(current.sum(), sum);
        observe(&step, &current);
        steps.push(step);
    }
    Ok(Reduction {
        coloring: EdgeColoring::from_raw(colors),
        steps,
    })
}

/// Checks the four set identities that hold around an edge `ab` that a
/// proper `r`-coloring of the rest of the graph cannot be extended to:
///
/// 1. `|C_a ∪ C_b| = r`
/// 2. `|C_a ∩ C_b| = d(a) + d(b) - r - 2`
/// 3. `|C_a \ C_b| = r - d(b) + 1`
/// 4. `|C_b \ C_a| = r - d(a) + 1`
///
/// where `C_x` are the colors around `x` and degrees count `ab` itself.
/// `partial[e]` must be `None` and every other entry a color in `1..=r`.
pub fn uncolored_edge_identities(
    g: &Multigraph,
    e: usize,
    partial: &[Option<Color>],
    r: usize,
) -> Result<bool> {
    if partial.len() != g.edges().len() || e >= partial.len() {
        return Err(Error::ColoringMismatch(format!(
            "{} colors for {} edges, uncolored edge {e}",
            partial.len(),
            g.edges().len()
        )));
    }
    if partial[e].is_some() {
        return Err(Error::Precondition(format!("edge {e} is supposed to be uncolored")));
    }
    let (a, b) = g.edges()[e];
    let mut around: Vec<BTreeSet<Color>> = vec![BTreeSet::new(); g.nv()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if i == e {
            continue;
        }
        let c = partial[i].ok_or_else(|| {
            Error::Precondition(format!("edge {i} is uncolored, only edge {e} may be"))
        })?;
        if c == 0 || c as usize > r {
            return Err(Error::Precondition(format!("edge {i} has color {c} outside 1..={r}")));
        }
        for x in [u, v] {
            if !around[x].insert(c) {
                return Err(Error::NotProper(format!("vertex {x} sees color {c} twice")));
            }
        }
    }
    let (ca, cb) = (&around[a], &around[b]);
    if (1..=r as Color).any(|c| !ca.contains(&c) && !cb.contains(&c)) {
        return Err(Error::Precondition(format!(
            "edge {e} can still be colored within 1..={r}"
        )));
    }
    let deg = g.degrees();
    let (da, db) = (deg[a] as i64, deg[b] as i64);
    let r = r as i64;
    let union = ca.union(cb).count() as i64;
    let inter = ca.intersection(cb).count() as i64;
    let a_only = ca.difference(cb).count() as i64;
    let b_only = cb.difference(ca).count() as i64;
    Ok(union == r && inter == da + db - r - 2 && a_only == r - db + 1 && b_only == r - da + 1)
}
