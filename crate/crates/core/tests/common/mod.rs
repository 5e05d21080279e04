//! Helpers shared by the integration tests.
#![allow(dead_code)]

use multisum_core::{Color, EdgeColoring, Multigraph, Topology};
use rand::seq::SliceRandom;
use rand::Rng;

/// Colors the edges in random order, each with a uniformly random color of
/// `1..=palette` free at both ends. `None` if some edge finds no free color.
pub fn random_proper_coloring(
    rng: &mut impl Rng,
    g: &Multigraph,
    palette: usize,
    skip: Option<usize>,
) -> Option<Vec<Option<Color>>> {
    let mut order: Vec<usize> = (0..g.edges().len()).filter(|&e| Some(e) != skip).collect();
    order.shuffle(rng);
    let mut seen = vec![vec![false; palette + 1]; g.nv()];
    let mut colors = vec![None; g.edges().len()];
    for e in order {
        let (u, v) = g.edges()[e];
        let free: Vec<usize> = (1..=palette).filter(|&c| !seen[u][c] && !seen[v][c]).collect();
        if free.is_empty() {
            return None;
        }
        let c = free[rng.random_range(0..free.len())];
        seen[u][c] = true;
        seen[v][c] = true;
        colors[e] = Some(c as Color);
    }
    Some(colors)
}

/// A random proper coloring of every edge; the palette `2 * delta - 1` is
/// always enough for the greedy.
pub fn random_full_coloring(rng: &mut impl Rng, g: &Multigraph, extra: usize) -> EdgeColoring {
    let palette = (2 * g.max_degree()).saturating_sub(1).max(1) + extra;
    let colors = random_proper_coloring(rng, g, palette, None).expect("palette 2*delta-1 suffices");
    EdgeColoring::new(colors.into_iter().map(Option::unwrap).collect()).unwrap()
}

/// A random loopless multigraph, not necessarily bipartite.
pub fn random_multigraph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Multigraph {
    let nv = rng.random_range(2..=max_vertices);
    let ne = rng.random_range(1..=max_edges);
    let edges = (0..ne)
        .map(|_| {
            let u = rng.random_range(0..nv);
            let mut v = rng.random_range(0..nv - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    Multigraph::new(nv, edges).unwrap()
}

/// Largest number of pairwise non-adjacent bundles among the positive
/// entries of a path's multiplicity vector, by trying every subset.
pub fn path_matching_number(counts: &[usize]) -> usize {
    let n = counts.len();
    (0u32..1 << n)
        .filter(|set| {
            (0..n).all(|j| set & (1 << j) == 0 || counts[j] > 0)
                && (0..n.saturating_sub(1)).all(|j| set & (0b11 << j) != 0b11 << j)
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Random nonincreasing profile with `total` edges.
pub fn random_profile(rng: &mut impl Rng, total: usize) -> Vec<usize> {
    let mut left = total;
    let mut parts = Vec::new();
    while left > 0 {
        let x = rng.random_range(1..=left);
        parts.push(x);
        left -= x;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// A profile dominating `b`: a few unit moves from a class to a class that
/// is at least as large, which can only raise prefix sums.
pub fn dominating_profile(rng: &mut impl Rng, b: &[usize], moves: usize) -> Vec<usize> {
    let mut a = b.to_vec();
    for _ in 0..moves {
        if a.len() < 2 {
            break;
        }
        let j = rng.random_range(1..a.len());
        let i = rng.random_range(0..j);
        a[i] += 1;
        a[j] -= 1;
        a.sort_unstable_by(|x, y| y.cmp(x));
        while a.last() == Some(&0) {
            a.pop();
        }
    }
    a
}
