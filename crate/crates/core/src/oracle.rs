//! Exhaustive minimum-cost edge coloring for small multigraphs.
//!
//! The oracle knows nothing about multicycles or strength formulas; it
//! searches proper colorings edge by edge and is the reference the solvers
//! are tested against.
//!
//! * Color-dependent models ([`CostModel::Sum`], [`CostModel::ColorCosts`])
//!   use depth-first branch and bound over actual colors. The bound adds,
//!   for each group of still-uncolored parallel edges, the cheapest colors
//!   free at both ends. Parallel copies are forced into increasing colors,
//!   which loses nothing because they are interchangeable.
//! * Separable models only see the multiset of class sizes, so the search
//!   enumerates partitions of the edges into matchings with classes
//!   labelled by first appearance, and evaluates each complete partition.
//!
//! Among optimal colorings the one with the fewest colors is reported.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Color, EdgeColoring};
use crate::costs::{Cost, CostModel};
use crate::error::{Error, Result};
use crate::graph::{Instance, Multicycle, Multigraph, Multipath, Topology};

/// Desk-scale limits for the exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_edges: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_edges: 12 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub cost: Cost,
    /// An optimal coloring using as few colors as any optimal coloring.
    pub coloring: EdgeColoring,
    pub colors_used: usize,
    /// Search nodes visited.
    pub nodes: u64,
}

/// Largest color the bitmask search can represent.
const COLOR_LIMIT: usize = 63;

/// Minimum cost of a proper coloring of `g` with colors in
/// `1..=max_colors` (default: one color per edge, always enough).
pub fn oracle_min_cost(
    g: &Multigraph,
    model: &CostModel,
    max_colors: Option<usize>,
    config: &OracleConfig,
) -> Result<OracleResult> {
    let m = g.edges().len();
    if m > config.max_edges {
        return Err(Error::TooLarge { edges: m, bound: config.max_edges });
    }
    if let CostModel::Entropy { edges } = model {
        if *edges != m {
            return Err(Error::InvalidCostModel(format!(
                "entropy model built for {edges} edges, graph has {m}"
            )));
        }
    }
    let mut max_colors = max_colors.unwrap_or(m.max(1));
    if let CostModel::ColorCosts(costs) = model {
        max_colors = max_colors.min(costs.len());
    }
    if max_colors > COLOR_LIMIT {
        return Err(Error::Precondition(format!(
            "the oracle handles at most {COLOR_LIMIT} colors, asked for {max_colors}"
        )));
    }
    if m == 0 {
        return Ok(OracleResult {
            cost: model.zero(),
            coloring: EdgeColoring::from_raw(Vec::new()),
            colors_used: 0,
            nodes: 1,
        });
    }
    let edges = compact(g);
    let found = if model.is_separable() {
        PartitionSearch::run(&edges, model, max_colors)?
    } else {
        LinearSearch::run(&edges, model, max_colors)?
    };
    let (cost, colors, nodes) = found.ok_or(Error::Infeasible { max_colors })?;
    let coloring = EdgeColoring::from_raw(colors);
    Ok(OracleResult {
        cost,
        colors_used: coloring.colors_used(),
        coloring,
        nodes,
    })
}

/// Fewest colors over all minimum-sum colorings.
pub fn oracle_strength(g: &Multigraph, config: &OracleConfig) -> Result<usize> {
    Ok(oracle_min_cost(g, &CostModel::Sum, None, config)?.colors_used)
}

/// Edge list with vertices renumbered densely.
fn compact(g: &Multigraph) -> Vec<(usize, usize)> {
    let mut id = vec![usize::MAX; g.nv()];
    let mut next = 0;
    let mut lookup = |x: usize| {
        if id[x] == usize::MAX {
            id[x] = next;
            next += 1;
        }
        id[x]
    };
    g.edges().iter().map(|&(u, v)| (lookup(u), lookup(v))).collect()
}

fn vertex_count(edges: &[(usize, usize)]) -> usize {
    edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0)
}

fn same_ends(a: (usize, usize), b: (usize, usize)) -> bool {
    a == b || a == (b.1, b.0)
}

type Found = Option<(Cost, Vec<Color>, u64)>;

struct LinearSearch<'a> {
    edges: &'a [(usize, usize)],
    /// `price[c]` for color `c`, index 0 unused.
    price: Vec<i64>,
    max_colors: usize,
    prev_parallel: Vec<Option<usize>>,
    masks: Vec<u64>,
    colors: Vec<Color>,
    class_size: Vec<usize>,
    used: usize,
    best: Option<(i64, usize, Vec<Color>)>,
    nodes: u64,
}

impl<'a> LinearSearch<'a> {
    fn run(edges: &'a [(usize, usize)], model: &CostModel, max_colors: usize) -> Result<Found> {
        let mut price = vec![0i64; max_colors + 1];
        for (c, p) in price.iter_mut().enumerate().skip(1) {
            *p = match model.class_cost(c, 1)? {
                Cost::Exact(x) => x,
                Cost::Real(_) => unreachable!("linear models have integer costs"),
            };
        }
        let prev_parallel = (0..edges.len())
            .map(|e| (0..e).rev().find(|&p| same_ends(edges[p], edges[e])))
            .collect();
        let mut s = LinearSearch {
            edges,
            price,
            max_colors,
            prev_parallel,
            masks: vec![0; vertex_count(edges)],
            colors: vec![0; edges.len()],
            class_size: vec![0; max_colors + 1],
            used: 0,
            best: None,
            nodes: 0,
        };
        s.dfs(0, 0);
        Ok(s.best.map(|(cost, _, colors)| (Cost::Exact(cost), colors, s.nodes)))
    }

    /// Cheapest completion ignoring interactions between different pairs of
    /// endpoints, or `None` if some group has too few free colors.
    fn bound(&self, pos: usize) -> Option<i64> {
        let mut groups: Vec<((usize, usize), usize)> = Vec::new();
        for &(u, v) in &self.edges[pos..] {
            match groups.iter_mut().find(|(k, _)| same_ends(*k, (u, v))) {
                Some(entry) => entry.1 += 1,
                None => groups.push(((u, v), 1)),
            }
        }
        let mut total = 0;
        for ((u, v), need) in groups {
            let blocked = self.masks[u] | self.masks[v];
            let mut got = 0;
            for c in 1..=self.max_colors {
                if got == need {
                    break;
                }
                if blocked & (1 << c) == 0 {
                    total += self.price[c];
                    got += 1;
                }
            }
            if got < need {
                return None;
            }
        }
        Some(total)
    }

    fn dfs(&mut self, pos: usize, cost: i64) {
        self.nodes += 1;
        if pos == self.edges.len() {
            let better = match &self.best {
                None => true,
                Some((bc, bu, _)) => (cost, self.used) < (*bc, *bu),
            };
            if better {
                self.best = Some((cost, self.used, self.colors.clone()));
            }
            return;
        }
        let Some(rest) = self.bound(pos) else { return };
        if let Some((bc, bu, _)) = &self.best {
            match (cost + rest).cmp(bc) {
                Ordering::Greater => return,
                Ordering::Equal if self.used >= *bu => return,
                _ => {}
            }
        }
        let (u, v) = self.edges[pos];
        let blocked = self.masks[u] | self.masks[v];
        let lowest = self.prev_parallel[pos].map_or(1, |p| self.colors[p] as usize + 1);
        for c in lowest..=self.max_colors {
            if blocked & (1 << c) != 0 {
                continue;
            }
            let bit = 1u64 << c;
            self.masks[u] |= bit;
            self.masks[v] |= bit;
            self.colors[pos] = c as Color;
            self.class_size[c] += 1;
            if self.class_size[c] == 1 {
                self.used += 1;
            }
            self.dfs(pos + 1, cost + self.price[c]);
            self.class_size[c] -= 1;
            if self.class_size[c] == 0 {
                self.used -= 1;
            }
            self.masks[u] &= !bit;
            self.masks[v] &= !bit;
        }
        self.colors[pos] = 0;
    }
}

struct PartitionSearch<'a> {
    edges: &'a [(usize, usize)],
    model: &'a CostModel,
    max_classes: usize,
    /// Vertex set of each open class.
    class_vertices: Vec<u64>,
    class_size: Vec<usize>,
    labels: Vec<usize>,
    best: Option<(Cost, usize, Vec<usize>)>,
    nodes: u64,
    error: Option<Error>,
}

impl<'a> PartitionSearch<'a> {
    fn run(edges: &'a [(usize, usize)], model: &'a CostModel, max_colors: usize) -> Result<Found> {
        if vertex_count(edges) > 64 {
            return Err(Error::Precondition("partition search handles at most 64 vertices".into()));
        }
        let mut s = PartitionSearch {
            edges,
            model,
            max_classes: max_colors,
            class_vertices: Vec::new(),
            class_size: Vec::new(),
            labels: vec![0; edges.len()],
            best: None,
            nodes: 0,
            error: None,
        };
        s.dfs(0);
        if let Some(e) = s.error {
            return Err(e);
        }
        let nodes = s.nodes;
        Ok(s.best.map(|(cost, classes, labels)| {
            // largest class gets color 1
            let mut sizes = vec![0usize; classes];
            for &l in &labels {
                sizes[l] += 1;
            }
            let mut order: Vec<usize> = (0..classes).collect();
            order.sort_by_key(|&l| (std::cmp::Reverse(sizes[l]), l));
            let mut color_of = vec![0 as Color; classes];
            for (rank, &l) in order.iter().enumerate() {
                color_of[l] = rank as Color + 1;
            }
            (cost, labels.iter().map(|&l| color_of[l]).collect(), nodes)
        }))
    }

    fn leaf(&mut self) {
        let mut sizes = self.class_size.clone();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let cost = match self.model.profile_cost(&sizes) {
            Ok(c) => c,
            Err(e) => {
                self.error.get_or_insert(e);
                return;
            }
        };
        let classes = sizes.len();
        let better = match &self.best {
            None => true,
            Some((bc, bn, _)) => match cost.compare(*bc) {
                Ordering::Less => true,
                Ordering::Equal => classes < *bn,
                Ordering::Greater => false,
            },
        };
        if better {
            self.best = Some((cost, classes, self.labels.clone()));
        }
    }

    fn dfs(&mut self, pos: usize) {
        self.nodes += 1;
        if self.error.is_some() {
            return;
        }
        if pos == self.edges.len() {
            self.leaf();
            return;
        }
        let (u, v) = self.edges[pos];
        let ends = (1u64 << u) | (1u64 << v);
        for l in 0..self.class_vertices.len() {
            if self.class_vertices[l] & ends != 0 {
                continue;
            }
            self.class_vertices[l] |= ends;
            self.class_size[l] += 1;
            self.labels[pos] = l;
            self.dfs(pos + 1);
            self.class_vertices[l] &= !ends;
            self.class_size[l] -= 1;
        }
        if self.class_vertices.len() < self.max_classes {
            self.class_vertices.push(ends);
            self.class_size.push(1);
            self.labels[pos] = self.class_vertices.len() - 1;
            self.dfs(pos + 1);
            self.class_vertices.pop();
            self.class_size.pop();
        }
    }
}

/// Instance families for exhaustive and randomized sweeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Every multiplicity vector in `1..=max_mult` for each `n`, in
    /// lexicographic order, optionally capped in edge count and reduced to
    /// one representative per rotation/reflection class.
    Multicycles {
        n_min: usize,
        n_max: usize,
        max_mult: usize,
        max_edges: Option<usize>,
        dedup: bool,
    },
    /// Every multiplicity vector in `1..=max_mult` for each length.
    Multipaths {
        len_min: usize,
        len_max: usize,
        max_mult: usize,
    },
    /// Seeded random bipartite multigraphs with `2..=max_vertices` vertices
    /// and `1..=max_edges` edges.
    Bipartite {
        seed: u64,
        count: usize,
        max_vertices: usize,
        max_edges: usize,
    },
}

pub fn enumerate_instances(family: &Family) -> Result<Vec<Instance>> {
    match *family {
        Family::Multicycles { n_min, n_max, max_mult, max_edges, dedup } => {
            if n_min < 3 || n_min > n_max || max_mult == 0 {
                return Err(Error::Precondition(format!(
                    "empty multicycle family: n in {n_min}..={n_max}, multiplicities up to {max_mult}"
                )));
            }
            let mut out = Vec::new();
            for n in n_min..=n_max {
                for mult in vectors(n, max_mult) {
                    if max_edges.is_some_and(|cap| mult.iter().sum::<usize>() > cap) {
                        continue;
                    }
                    if dedup && canonical_cycle(&mult) != mult {
                        continue;
                    }
                    out.push(Instance::Multicycle(Multicycle::new(n, mult)?));
                }
            }
            Ok(out)
        }
        Family::Multipaths { len_min, len_max, max_mult } => {
            if len_min == 0 || len_min > len_max || max_mult == 0 {
                return Err(Error::Precondition(format!(
                    "empty multipath family: length in {len_min}..={len_max}, multiplicities up to {max_mult}"
                )));
            }
            let mut out = Vec::new();
            for len in len_min..=len_max {
                for mult in vectors(len, max_mult) {
                    out.push(Instance::Multipath(Multipath::new(mult)?));
                }
            }
            Ok(out)
        }
        Family::Bipartite { seed, count, max_vertices, max_edges } => {
            if count == 0 || max_vertices < 2 || max_edges == 0 {
                return Err(Error::Precondition(format!(
                    "empty bipartite family: {count} graphs, {max_vertices} vertices, {max_edges} edges"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let nv = rng.random_range(2..=max_vertices);
                    let ne = rng.random_range(1..=max_edges);
                    random_bipartite(&mut rng, nv, ne).map(Instance::Multigraph)
                })
                .collect()
        }
    }
}

/// A random bipartite multigraph on `nv >= 2` vertices with `ne` edges.
/// Vertex 0 and vertex 1 sit on opposite sides.
pub fn random_bipartite(rng: &mut impl Rng, nv: usize, ne: usize) -> Result<Multigraph> {
    let mut side = vec![false; nv];
    side[1] = true;
    for s in side.iter_mut().skip(2) {
        *s = rng.random_bool(0.5);
    }
    let left: Vec<usize> = (0..nv).filter(|&x| !side[x]).collect();
    let right: Vec<usize> = (0..nv).filter(|&x| side[x]).collect();
    let edges = (0..ne)
        .map(|_| {
            let u = left[rng.random_range(0..left.len())];
            let v = right[rng.random_range(0..right.len())];
            if rng.random_bool(0.5) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    Multigraph::new(nv, edges)
}

/// All vectors of length `len` over `1..=cap`, lexicographic.
fn vectors(len: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![1; len];
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < cap {
                cur[i] += 1;
                for x in &mut cur[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// Lexicographically smallest rotation or reflection of a cyclic sequence.
pub fn canonical_cycle(mult: &[usize]) -> Vec<usize> {
    let n = mult.len();
    let mut best = mult.to_vec();
    let reversed: Vec<usize> = mult.iter().rev().copied().collect();
    for seq in [mult, &reversed[..]] {
        for shift in 0..n {
            let cand: Vec<usize> = (0..n).map(|i| seq[(i + shift) % n]).collect();
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

/// Convenience for tests and tools: the oracle on any instance kind.
pub fn oracle_for<G: Topology + ?Sized>(
    g: &G,
    model: &CostModel,
    max_colors: Option<usize>,
    config: &OracleConfig,
) -> Result<OracleResult> {
    oracle_min_cost(&g.to_multigraph(), model, max_colors, config)
}
