//! Minimum sum edge coloring of multipaths.
//!
//! Color `c` is given to one edge of every odd-positioned bundle (counting
//! bundles from 1, left to right) in each connected component of what is
//! still uncolored. That set is a maximum matching of the residual, and the
//! greedy sequence of such matchings has minimum sum.

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{bundle_offsets, EdgeId, Multipath};
use crate::probe::WorkCounter;

/// A set of pairwise non-adjacent edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    pub fn new(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Bundle of each edge, in sorted order.
    pub fn bundles(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.major()).collect()
    }
}

/// Hands out the lowest uncolored copy of each bundle and records colors in
/// flat edge order.
pub(crate) struct Painter {
    offsets: Vec<usize>,
    next_copy: Vec<usize>,
    colors: Vec<Color>,
}

impl Painter {
    pub(crate) fn new(mult: &[usize]) -> Self {
        Painter {
            offsets: bundle_offsets(mult),
            next_copy: vec![0; mult.len()],
            colors: vec![0; mult.iter().sum()],
        }
    }

    #[inline]
    pub(crate) fn paint(&mut self, bundle: usize, color: Color) -> usize {
        let copy = self.next_copy[bundle];
        self.next_copy[bundle] += 1;
        self.colors[self.offsets[bundle] + copy] = color;
        copy
    }

    pub(crate) fn finish(self) -> EdgeColoring {
        EdgeColoring::from_raw(self.colors)
    }
}

/// Greedy odd-position coloring of a linear run of bundles. `counts[j]` is
/// the remaining multiplicity of position `j`, `bundle_of(j)` its bundle in
/// the painter. Returns the largest color used, or `start_color - 1`.
pub(crate) fn color_linear(
    counts: &mut [usize],
    bundle_of: impl Fn(usize) -> usize,
    start_color: Color,
    painter: &mut Painter,
    work: &mut WorkCounter,
) -> Color {
    let mut components = runs(counts, 0, counts.len());
    work.add(counts.len());
    let mut color = start_color;
    while !components.is_empty() {
        let mut next = Vec::with_capacity(components.len());
        for (start, end) in components {
            for pos in (start..end).step_by(2) {
                counts[pos] -= 1;
                painter.paint(bundle_of(pos), color);
            }
            work.add(end - start);
            next.extend(runs(counts, start, end));
        }
        components = next;
        color += 1;
    }
    color - 1
}

/// Maximal ranges of positive entries within `counts[start..end]`.
fn runs(counts: &[usize], start: usize, end: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut open = None;
    for (j, &c) in counts.iter().enumerate().take(end).skip(start) {
        match (c > 0, open) {
            (true, None) => open = Some(j),
            (false, Some(s)) => {
                out.push((s, j));
                open = None;
            }
            _ => {}
        }
    }
    if let Some(s) = open {
        out.push((s, end));
    }
    out
}

/// Copy 0 of every odd-positioned bundle (1st, 3rd, ...), a maximum matching
/// of the path.
pub fn odd_position_matching(h: &Multipath) -> Matching {
    Matching::new(
        (0..h.len())
            .step_by(2)
            .map(|bundle| EdgeId::Bundle { bundle, copy: 0 })
            .collect(),
    )
}

/// Per-component odd-position matchings of a disjoint union of multipaths.
pub fn odd_position_matchings(paths: &[Multipath]) -> Vec<Matching> {
    paths.iter().map(odd_position_matching).collect()
}

/// Colors `h` with classes `start_color, start_color + 1, ...`, each class
/// being the odd-position matching of what is left. With `start_color = 1`
/// the result has minimum sum.
pub fn multipath_color(h: &Multipath, start_color: Color) -> EdgeColoring {
    multipath_color_probed(h, start_color, &mut WorkCounter::default())
}

pub fn multipath_color_probed(
    h: &Multipath,
    start_color: Color,
    work: &mut WorkCounter,
) -> EdgeColoring {
    assert!(start_color >= 1, "colors start at 1");
    let mut counts = h.mult().to_vec();
    let mut painter = Painter::new(h.mult());
    color_linear(&mut counts, |j| j, start_color, &mut painter, work);
    painter.finish()
}

/// Colors every component independently; components never interact, so
/// each one is colored exactly as it would be alone.
pub fn multipath_color_all(paths: &[Multipath], start_color: Color) -> Vec<EdgeColoring> {
    paths.iter().map(|h| multipath_color(h, start_color)).collect()
}

/// True iff the edge set is a matching of `h` (no two edges on one bundle
/// or on consecutive bundles).
pub fn is_matching_of(h: &Multipath, m: &Matching) -> bool {
    let mut bundles = m.bundles();
    bundles.sort_unstable();
    m.edges()
        .iter()
        .all(|e| e.major() < h.len() && e.copy() < h.mult()[e.major()])
        && bundles.windows(2).all(|w| w[1] > w[0] + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{coloring_stats, is_proper};

    fn mp(m: &[usize]) -> Multipath {
        Multipath::new(m.to_vec()).unwrap()
    }

    #[test]
    fn odd_positions() {
        assert_eq!(odd_position_matching(&mp(&[1, 1, 1, 1])).bundles(), vec![0, 2]);
        let m = odd_position_matching(&mp(&[2, 1]));
        assert_eq!(m.edges(), &[EdgeId::Bundle { bundle: 0, copy: 0 }]);
        let ms = odd_position_matchings(&[mp(&[1]), mp(&[1, 1])]);
        assert_eq!(ms.iter().map(Matching::len).sum::<usize>(), 2);
    }

    #[test]
    fn color_examples() {
        let f = multipath_color(&mp(&[1, 1, 1, 1]), 1);
        let s = coloring_stats(&f);
        assert_eq!((s.sum, s.profile), (6, vec![2, 2]));

        let f = multipath_color(&mp(&[2, 1]), 1);
        assert_eq!(f.colors(), &[1, 2, 3]);
        assert_eq!(f.sum(), 6);

        let f = multipath_color(&mp(&[3]), 1);
        assert_eq!(f.colors(), &[1, 2, 3]);
    }

    #[test]
    fn start_color_offsets_classes() {
        let h = mp(&[1, 2, 1]);
        let base = multipath_color(&h, 1);
        let shifted = multipath_color(&h, 5);
        for (a, b) in base.colors().iter().zip(shifted.colors()) {
            assert_eq!(a + 4, *b);
        }
        assert!(is_proper(&h, &shifted).unwrap());
    }

    #[test]
    fn components_split_mid_run() {
        // after color 2 the outer bundles are gone and only the middle one is left
        let h = mp(&[2, 1, 2]);
        let f = multipath_color(&h, 1);
        assert!(is_proper(&h, &f).unwrap());
        assert_eq!(f.colors(), &[1, 2, 3, 1, 2]);
    }

    #[test]
    fn work_is_linear() {
        let h = mp(&vec![3; 1000]);
        let mut work = WorkCounter::default();
        multipath_color_probed(&h, 1, &mut work);
        assert!(work.ops <= 4 * 3000, "{}", work.ops);
    }
}
