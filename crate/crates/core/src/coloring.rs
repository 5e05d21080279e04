use crate::error::{Error, Result};
use crate::graph::Topology;

/// Colors are positive integers.
pub type Color = u32;

/// A total assignment of colors to the edges of an instance, indexed by the
/// instance's flat edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

/// Sum, class-size profile and number of non-empty classes of a coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringStats {
    pub sum: u64,
    /// `profile[i]` is the size of the class of color `i + 1`, up to the
    /// largest color used.
    pub profile: Vec<usize>,
    pub colors_used: usize,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if let Some(e) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ColoringMismatch(format!(
                "edge {e} has no color (colors start at 1)"
            )));
        }
        Ok(EdgeColoring { colors })
    }

    pub(crate) fn from_raw(colors: Vec<Color>) -> Self {
        debug_assert!(colors.iter().all(|&c| c > 0), "uncolored edge left behind");
        EdgeColoring { colors }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> Color {
        self.colors[e]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    pub fn sum(&self) -> u64 {
        self.colors.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.max_color() as usize];
        for &c in &self.colors {
            profile[c as usize - 1] += 1;
        }
        profile
    }

    pub fn colors_used(&self) -> usize {
        self.profile().iter().filter(|&&s| s > 0).count()
    }

    /// Flat indices of the edges with color `c`.
    pub fn class(&self, c: Color) -> Vec<usize> {
        (0..self.colors.len()).filter(|&e| self.colors[e] == c).collect()
    }

    /// Colors on edges incident to each vertex, sorted.
    pub fn vertex_colors<G: Topology + ?Sized>(&self, g: &G) -> Vec<Vec<Color>> {
        let mut at = vec![Vec::new(); g.vertex_count()];
        for (e, (u, v)) in g.endpoints().into_iter().enumerate() {
            at[u].push(self.colors[e]);
            at[v].push(self.colors[e]);
        }
        for cs in &mut at {
            cs.sort_unstable();
        }
        at
    }

    pub fn stats(&self) -> ColoringStats {
        coloring_stats(self)
    }
}

pub fn coloring_stats(f: &EdgeColoring) -> ColoringStats {
    let profile = f.profile();
    ColoringStats {
        sum: f.sum(),
        colors_used: profile.iter().filter(|&&s| s > 0).count(),
        profile,
    }
}

/// Checks that `f` covers exactly the edges of `g`.
pub fn check_total<G: Topology + ?Sized>(g: &G, f: &EdgeColoring) -> Result<()> {
    if f.len() != g.edge_count() {
        return Err(Error::ColoringMismatch(format!(
            "coloring has {} entries, instance has {} edges",
            f.len(),
            g.edge_count()
        )));
    }
    Ok(())
}

/// True iff no two edges sharing an endpoint have the same color.
pub fn is_proper<G: Topology + ?Sized>(g: &G, f: &EdgeColoring) -> Result<bool> {
    check_total(g, f)?;
    Ok(first_conflict(g, f.colors()).is_none())
}

/// A vertex and a color that appears twice around it, if any.
pub(crate) fn first_conflict<G: Topology + ?Sized>(
    g: &G,
    colors: &[Color],
) -> Option<(usize, Color)> {
    let mut incident: Vec<(usize, Color)> = Vec::with_capacity(2 * colors.len());
    for (e, (u, v)) in g.endpoints().into_iter().enumerate() {
        incident.push((u, colors[e]));
        incident.push((v, colors[e]));
    }
    incident.sort_unstable();
    incident.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
}

/// Like [`is_proper`] but reports the offending vertex and color.
pub fn ensure_proper<G: Topology + ?Sized>(g: &G, f: &EdgeColoring) -> Result<()> {
    check_total(g, f)?;
    match first_conflict(g, f.colors()) {
        None => Ok(()),
        Some((v, c)) => Err(Error::NotProper(format!(
            "vertex {v} has two incident edges of color {c}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Multicycle, Multigraph};

    fn tri() -> Multicycle {
        Multicycle::new(3, vec![1, 1, 1]).unwrap()
    }

    #[test]
    fn proper_triangle() {
        let f = EdgeColoring::new(vec![1, 2, 3]).unwrap();
        assert!(is_proper(&tri(), &f).unwrap());
        let bad = EdgeColoring::new(vec![1, 2, 1]).unwrap();
        assert!(!is_proper(&tri(), &bad).unwrap());
    }

    #[test]
    fn parallel_edges_are_adjacent() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let f = EdgeColoring::new(vec![1, 1]).unwrap();
        assert!(!is_proper(&g, &f).unwrap());
        assert!(ensure_proper(&g, &f).is_err());
    }

    #[test]
    fn partial_colorings_rejected() {
        assert!(EdgeColoring::new(vec![1, 0, 2]).is_err());
        let short = EdgeColoring::new(vec![1, 2]).unwrap();
        assert!(is_proper(&tri(), &short).is_err());
    }

    #[test]
    fn stats() {
        let s = coloring_stats(&EdgeColoring::new(vec![1, 2, 3]).unwrap());
        assert_eq!((s.sum, s.profile.clone(), s.colors_used), (6, vec![1, 1, 1], 3));

        // C5 with classes 2, 2, 1
        let s = coloring_stats(&EdgeColoring::new(vec![1, 2, 1, 2, 3]).unwrap());
        assert_eq!(s.sum, 9);
        assert_eq!(s.profile, vec![2, 2, 1]);

        let s = coloring_stats(&EdgeColoring::new(vec![1, 2, 1, 2]).unwrap());
        assert_eq!((s.sum, s.profile), (6, vec![2, 2]));
    }

    #[test]
    fn gaps_in_profile() {
        let s = coloring_stats(&EdgeColoring::new(vec![1, 3]).unwrap());
        assert_eq!(s.profile, vec![1, 0, 1]);
        assert_eq!(s.colors_used, 2);
    }

    #[test]
    fn vertex_color_sets() {
        let f = EdgeColoring::new(vec![1, 2, 3]).unwrap();
        assert_eq!(f.vertex_colors(&tri()), vec![vec![1, 3], vec![1, 2], vec![2, 3]]);
    }
}
