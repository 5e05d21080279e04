//! Minimum sum edge coloring of multicycles.
//!
//! The general driver peels off the class of the largest color first: with
//! `s'` the current strength, it removes a smallest matching whose removal
//! lowers the strength by exactly one, colors it `s'`, and repeats on the
//! residual. It stops when the residual is an "easy" instance (every class
//! can have size `k`, colored by a cyclic sweep) or when a bundle runs out,
//! at which point the remaining multipaths are colored greedily with the
//! colors still free. Each round costs `O(n)` and there are at most `s'`
//! rounds, so the driver runs in `O(Delta n)`.
//!
//! Even cycles have a faster `O(m)` route: the first `2p` colors
//! (`p` = smallest multiplicity) alternate around a `p`-uniform cycle and
//! the leftover multipaths take the remaining colors.

use std::fmt;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{split_runs, EdgeId, Multicycle};
use crate::path::{color_linear, Matching, Painter};
use crate::probe::WorkCounter;
use crate::strength::{ceil_div, cycle_index};

/// Which rule picks the next matching, decided by comparing the load bound
/// `ceil(m / k)` with `Delta` and by `r = m mod k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// `ceil(m/k) >= Delta` and `k | m`: sweep, every class has size `k`.
    Easy,
    /// `ceil(m/k) > Delta`, `k` does not divide `m`: any matching of size `r`.
    A,
    /// `Delta > ceil(m/k)`: smallest matching hitting every `Delta`-vertex.
    B,
    /// `Delta = ceil(m/k)`, `k` does not divide `m`: as `B`, grown to at
    /// least `r` edges.
    C,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::Easy => "easy",
            CaseTag::A => "A",
            CaseTag::B => "B",
            CaseTag::C => "C",
        };
        f.write_str(s)
    }
}

/// A maximal run of consecutive vertices of maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub start: usize,
    pub len: usize,
    /// Every vertex of the cycle has maximum degree.
    pub full_circle: bool,
}

impl Block {
    pub fn is_odd(&self) -> bool {
        self.len % 2 == 1
    }

    /// Bundles a smallest matching covering the block uses: the block's
    /// first bundle and every second one after it, `ceil(len / 2)` in all.
    /// For odd blocks the last one leaves the block.
    fn cover(&self, n: usize) -> impl Iterator<Item = usize> {
        let start = self.start;
        (0..self.len.div_ceil(2)).map(move |i| (start + 2 * i) % n)
    }
}

/// A matching chosen for removal together with the quantities that decided
/// its case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub matching: Matching,
    pub case: CaseTag,
    pub delta: usize,
    pub load_bound: usize,
    pub remainder: usize,
}

fn degrees_of(mult: &[usize]) -> Vec<usize> {
    let n = mult.len();
    (0..n).map(|v| mult[(v + n - 1) % n] + mult[v]).collect()
}

fn blocks_of(deg: &[usize], delta: usize) -> Vec<Block> {
    let n = deg.len();
    let Some(gap) = deg.iter().position(|&d| d != delta) else {
        return vec![Block { start: 0, len: n, full_circle: true }];
    };
    let mut blocks = Vec::new();
    let mut open: Option<usize> = None;
    for step in 1..=n {
        let v = (gap + step) % n;
        if deg[v] == delta {
            open.get_or_insert(v);
        } else if let Some(start) = open.take() {
            let len = (v + n - start) % n;
            blocks.push(Block { start, len, full_circle: false });
        }
    }
    blocks.sort_unstable_by_key(|b| b.start);
    blocks
}

/// Maximal runs of maximum-degree vertices, ordered by first vertex.
pub fn blocks(g: &Multicycle) -> Vec<Block> {
    let deg = degrees_of(g.mult());
    let delta = deg.iter().copied().max().unwrap_or(0);
    blocks_of(&deg, delta)
}

fn classify(delta: usize, load: usize, remainder: usize) -> CaseTag {
    if load >= delta && remainder == 0 {
        CaseTag::Easy
    } else if load > delta {
        CaseTag::A
    } else if delta > load {
        CaseTag::B
    } else {
        CaseTag::C
    }
}

/// Picks a smallest matching `M` with `s'(G \ M) = s'(G) - 1`. Rejects the
/// easy case, where no matching is removed.
pub fn select_matching(g: &Multicycle) -> Result<Selection> {
    let (bundles, sel) = select_bundles(g.mult(), &mut WorkCounter::default())?;
    let matching = Matching::new(
        bundles
            .into_iter()
            .map(|bundle| EdgeId::Bundle { bundle, copy: 0 })
            .collect(),
    );
    Ok(Selection { matching, ..sel })
}

/// Core of [`select_matching`] on raw multiplicities (all positive). The
/// returned selection carries an empty matching; the bundles come first.
fn select_bundles(mult: &[usize], work: &mut WorkCounter) -> Result<(Vec<usize>, Selection)> {
    let n = mult.len();
    let k = n / 2;
    let m: usize = mult.iter().sum();
    let deg = degrees_of(mult);
    work.add(n);
    let delta = deg.iter().copied().max().unwrap_or(0);
    let load = ceil_div(m, k);
    let remainder = m % k;
    let case = classify(delta, load, remainder);
    let sel = |case| Selection {
        matching: Matching::default(),
        case,
        delta,
        load_bound: load,
        remainder,
    };

    let bundles = match case {
        CaseTag::Easy => {
            return Err(Error::Precondition(format!(
                "easy case (m = {m}, k = {k}, Delta = {delta}): sweep instead of removing a matching"
            )))
        }
        // r < k, so bundles 0, 2, ..., 2r - 2 never touch bundle n - 1
        CaseTag::A => (0..remainder).map(|i| 2 * i).collect(),
        CaseTag::B | CaseTag::C => {
            let blocks = blocks_of(&deg, delta);
            work.add(n);
            let mut chosen = Vec::new();
            for b in &blocks {
                // an all-Delta cycle is either easy (n even) or has
                // ceil(m/k) > Delta (n odd), never B or C
                assert!(
                    !b.full_circle,
                    "full-circle block in case {case:?}, n = {n}, mult = {mult:?}"
                );
                chosen.extend(b.cover(n));
            }
            if case == CaseTag::C && chosen.len() < remainder {
                chosen = grow_matching(n, &chosen, remainder);
                work.add(n);
            }
            chosen.sort_unstable();
            chosen
        }
    };
    Ok((bundles, sel(case)))
}

/// Grows a matching of the `n`-cycle to `target` edges while keeping every
/// covered vertex covered. Scans clockwise from vertex 0 and pairs each
/// uncovered vertex with the previous one by re-tiling the covered stretch
/// between them, one augmenting path at a time. A single pass reaches
/// `floor(n / 2)` edges.
fn grow_matching(n: usize, start: &[usize], target: usize) -> Vec<usize> {
    let mut in_m = vec![false; n];
    let mut covered = vec![false; n];
    for &b in start {
        in_m[b] = true;
        covered[b] = true;
        covered[(b + 1) % n] = true;
    }
    let mut size = start.len();
    let mut pending: Option<usize> = None;
    for v in 0..n {
        if size >= target {
            break;
        }
        if covered[v] {
            continue;
        }
        match pending.take() {
            None => pending = Some(v),
            Some(p) => {
                // p and v are free; p+1..v-1 are matched in consecutive pairs
                for b in (p + 1..v).step_by(2) {
                    debug_assert!(in_m[b]);
                    in_m[b] = false;
                }
                for b in (p..v).step_by(2) {
                    in_m[b] = true;
                }
                covered[p] = true;
                covered[v] = true;
                size += 1;
            }
        }
    }
    assert!(size >= target, "cycle of {n} vertices cannot hold {target} matching edges");
    (0..n).filter(|&b| in_m[b]).collect()
}

/// Colors `g` with `c = m / k` colors by handing out `1, 2, ..., c, 1, ...`
/// clockwise, bundle by bundle. Needs `k | m` and `c >= Delta`.
pub fn sweep_color(g: &Multicycle, c: usize) -> Result<EdgeColoring> {
    let k = g.matching_number();
    let m = g.edge_count();
    let delta = g.max_degree();
    if !m.is_multiple_of(k) || c != m / k || c < delta {
        return Err(Error::Precondition(format!(
            "sweep needs k | m and c = m/k >= Delta (m = {m}, k = {k}, c = {c}, Delta = {delta})"
        )));
    }
    let mut painter = Painter::new(g.mult());
    sweep(g.mult(), c, &mut painter, &mut WorkCounter::default());
    Ok(painter.finish())
}

/// Two edges of one color always sit `c` apart in the sweep order, while the
/// edges around a vertex are `deg <= Delta <= c` consecutive positions.
fn sweep(residual: &[usize], c: usize, painter: &mut Painter, work: &mut WorkCounter) {
    let mut t = 0usize;
    for (bundle, &cnt) in residual.iter().enumerate() {
        for _ in 0..cnt {
            painter.paint(bundle, (t % c) as Color + 1);
            t += 1;
        }
    }
    work.add(residual.len() + t);
}

/// Minimum sum coloring of any multicycle using exactly `s'(g)` colors.
pub fn multicycle_color(g: &Multicycle) -> EdgeColoring {
    multicycle_color_probed(g, &mut WorkCounter::default())
}

pub fn multicycle_color_probed(g: &Multicycle, work: &mut WorkCounter) -> EdgeColoring {
    let mut residual = g.mult().to_vec();
    let n = residual.len();
    let k = n / 2;
    let mut m = g.edge_count();
    let mut painter = Painter::new(g.mult());
    let mut color = cycle_index(g.mult(), g.max_degree(), m) as Color;
    work.add(n);

    loop {
        if residual.contains(&0) {
            let pieces = split_runs(&residual).expect("residual has an empty bundle");
            for piece in pieces {
                let mut counts = piece.path.mult().to_vec();
                let used = color_linear(&mut counts, |j| piece.bundles[j], 1, &mut painter, work);
                debug_assert!(used <= color, "path phase needed {used} > {color} colors");
            }
            break;
        }
        let delta = degrees_of(&residual).into_iter().max().unwrap_or(0);
        work.add(n);
        if ceil_div(m, k) >= delta && m.is_multiple_of(k) {
            debug_assert_eq!((m / k) as Color, color);
            sweep(&residual, m / k, &mut painter, work);
            break;
        }
        let (bundles, _) = select_bundles(&residual, work).expect("not the easy case");
        m -= bundles.len();
        for b in bundles {
            residual[b] -= 1;
            painter.paint(b, color);
        }
        color -= 1;
    }
    painter.finish()
}

/// `O(m)` minimum sum coloring of an even multicycle.
pub fn even_multicycle_color(g: &Multicycle) -> Result<EdgeColoring> {
    even_multicycle_color_probed(g, &mut WorkCounter::default())
}

pub fn even_multicycle_color_probed(
    g: &Multicycle,
    work: &mut WorkCounter,
) -> Result<EdgeColoring> {
    if !g.is_even() {
        return Err(Error::Precondition(format!(
            "the uniform-cycle algorithm needs an even cycle, n = {}",
            g.n()
        )));
    }
    let p = *g.mult().iter().min().expect("n >= 3");
    let mut painter = Painter::new(g.mult());
    for bundle in 0..g.n() {
        let parity = (bundle % 2) as Color;
        for j in 0..p as Color {
            painter.paint(bundle, 2 * j + 1 + parity);
        }
    }
    work.add(p * g.n());

    let residual: Vec<usize> = g.mult().iter().map(|&m| m - p).collect();
    let pieces = split_runs(&residual).expect("the minimum bundle is now empty");
    work.add(g.n());
    for piece in pieces {
        let mut counts = piece.path.mult().to_vec();
        color_linear(
            &mut counts,
            |j| piece.bundles[j],
            2 * p as Color + 1,
            &mut painter,
            work,
        );
    }
    Ok(painter.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{coloring_stats, is_proper};
    use crate::strength::edge_strength_multicycle;

    fn cyc(mult: &[usize]) -> Multicycle {
        Multicycle::from_mult(mult.to_vec()).unwrap()
    }

    fn check(g: &Multicycle, f: &EdgeColoring, sum: u64) {
        assert!(is_proper(g, f).unwrap(), "{:?} -> {:?}", g.mult(), f.colors());
        assert_eq!(f.sum(), sum, "{:?} -> {:?}", g.mult(), f.colors());
        assert_eq!(f.colors_used(), edge_strength_multicycle(g).edge_strength);
    }

    #[test]
    fn sweep_examples() {
        let g = cyc(&[2; 5]);
        let f = sweep_color(&g, 5).unwrap();
        assert_eq!(coloring_stats(&f).profile, vec![2; 5]);
        check(&g, &f, 30);

        let g = cyc(&[1, 1, 1]);
        check(&g, &sweep_color(&g, 3).unwrap(), 6);

        assert!(sweep_color(&cyc(&[1; 5]), 3).is_err());
        // k | m but m/k < Delta
        assert!(sweep_color(&cyc(&[3, 3, 1, 1]), 4).is_err());
    }

    #[test]
    fn block_examples() {
        assert_eq!(
            blocks(&cyc(&[2, 1, 2, 1, 1])),
            vec![Block { start: 0, len: 4, full_circle: false }]
        );
        assert_eq!(
            blocks(&cyc(&[1; 4])),
            vec![Block { start: 0, len: 4, full_circle: true }]
        );
        assert_eq!(
            blocks(&cyc(&[4, 1, 1, 1, 1])),
            vec![Block { start: 0, len: 2, full_circle: false }]
        );
    }

    #[test]
    fn blocks_wrap_and_sort() {
        // degrees (3, 2, 2, 3, 3, 2, 3): runs {v6, v0} and {v3, v4}
        let deg = [3, 2, 2, 3, 3, 2, 3];
        let b = blocks_of(&deg, 3);
        assert_eq!(
            b,
            vec![
                Block { start: 3, len: 2, full_circle: false },
                Block { start: 6, len: 2, full_circle: false },
            ]
        );
    }

    #[test]
    fn select_examples() {
        let s = select_matching(&cyc(&[2, 2, 2, 2, 1])).unwrap();
        assert_eq!((s.case, s.matching.len()), (CaseTag::A, 1));

        let s = select_matching(&cyc(&[4, 1, 1, 1, 1])).unwrap();
        assert_eq!(s.case, CaseTag::B);
        assert_eq!(s.matching.bundles(), vec![0]);

        let s = select_matching(&cyc(&[1, 1, 1, 1, 1, 1, 2])).unwrap();
        assert_eq!((s.case, s.remainder), (CaseTag::C, 2));
        assert_eq!(s.matching.bundles(), vec![1, 6]);

        assert!(select_matching(&cyc(&[1, 1, 1])).is_err());
    }

    #[test]
    fn case_tags() {
        assert_eq!(classify(4, 4, 0), CaseTag::Easy);
        assert_eq!(classify(3, 5, 0), CaseTag::Easy);
        assert_eq!(classify(4, 5, 1), CaseTag::A);
        assert_eq!(classify(5, 4, 0), CaseTag::B);
        assert_eq!(classify(5, 4, 1), CaseTag::B);
        assert_eq!(classify(4, 4, 1), CaseTag::C);
    }

    #[test]
    fn grow_keeps_coverage() {
        // vertices 1..=2 covered by bundle 1; grow to 3 on a 7-cycle
        let grown = grow_matching(7, &[1], 3);
        assert_eq!(grown.len(), 3);
        let mut cover = [0; 7];
        for &b in &grown {
            cover[b] += 1;
            cover[(b + 1) % 7] += 1;
        }
        assert!(cover.iter().all(|&c| c <= 1));
        assert_eq!((cover[1], cover[2]), (1, 1));
        // odd stretch forces a re-tile: free 0, covered 1-2, free 3
        assert_eq!(grow_matching(5, &[1], 2), vec![0, 2]);
    }

    #[test]
    fn general_examples() {
        let g = cyc(&[1; 5]);
        let f = multicycle_color(&g);
        check(&g, &f, 9);
        assert_eq!(coloring_stats(&f).profile, vec![2, 2, 1]);

        check(&cyc(&[2, 1, 1]), &multicycle_color(&cyc(&[2, 1, 1])), 10);
        let g = cyc(&[2, 1, 1, 1]);
        let f = multicycle_color(&g);
        check(&g, &f, 9);
        assert_eq!(coloring_stats(&f).profile, vec![2, 2, 1]);
    }

    #[test]
    fn even_examples() {
        let g = cyc(&[1; 4]);
        check(&g, &even_multicycle_color(&g).unwrap(), 6);

        let g = cyc(&[2, 2, 1, 1]);
        let f = even_multicycle_color(&g).unwrap();
        assert_eq!(f.colors(), &[1, 3, 2, 4, 1, 2]);
        check(&g, &f, 13);

        let g = cyc(&[2, 1, 1, 1, 1, 1]);
        check(&g, &even_multicycle_color(&g).unwrap(), 12);

        assert!(even_multicycle_color(&cyc(&[1; 5])).is_err());
    }

    #[test]
    fn uniform_even_cycle_has_no_path_phase() {
        let g = cyc(&[3; 6]);
        let f = even_multicycle_color(&g).unwrap();
        check(&g, &f, 3 * (1 + 2 + 3 + 4 + 5 + 6));
    }
}
