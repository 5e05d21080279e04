//! Objectives that depend only on color class sizes,
//! `C(f) = sum_i c(i, |E_i|)` with `c(i, 0) = 0`.
//!
//! Every model here is monotone under prefix dominance of nonincreasing
//! class-size profiles of equal total: if `a` dominates `b` then
//! `C(a) <= C(b)`. For nondecreasing color costs this is Abel summation;
//! for a concave cost of the class size alone it is Karamata's inequality.
//! A coloring whose sorted profile dominates every other proper coloring's
//! profile is therefore optimal for all of them at once.

use std::cmp::Ordering;
use std::fmt;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Topology;
use crate::oracle::{oracle_min_cost, OracleConfig};

/// Absolute tolerance for real-valued costs.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum CostModel {
    /// `c(i, k) = i * k`.
    Sum,
    /// `c(i, k) = costs[i - 1] * k`, costs sorted ascending.
    ColorCosts(Vec<i64>),
    /// `c(i, k) = table[k]`, `table[0] = 0`, increments nonincreasing.
    ConcaveSeparable(Vec<f64>),
    /// `c(i, k) = -(k / m) ln(k / m)`.
    Entropy { edges: usize },
}

impl CostModel {
    /// Color costs, sorted ascending. Renaming colors in cost order does not
    /// change the problem.
    pub fn color_costs(mut costs: Vec<i64>) -> Result<Self> {
        if costs.is_empty() {
            return Err(Error::InvalidCostModel("no color costs given".into()));
        }
        costs.sort_unstable();
        Ok(CostModel::ColorCosts(costs))
    }

    /// Costs `1, 2, 4, 8, ...` for `len` colors.
    pub fn doubling(len: usize) -> Self {
        CostModel::ColorCosts((0..len).map(|i| 1i64 << i.min(62)).collect())
    }

    pub fn concave(table: Vec<f64>) -> Result<Self> {
        if table.first() != Some(&0.0) {
            return Err(Error::InvalidCostModel("a concave table must start with c(0) = 0".into()));
        }
        if table.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidCostModel("table entries must be finite".into()));
        }
        for k in 1..table.len().saturating_sub(1) {
            let (d0, d1) = (table[k] - table[k - 1], table[k + 1] - table[k]);
            if d1 > d0 + TOLERANCE {
                return Err(Error::InvalidCostModel(format!(
                    "table is not concave at k = {k}: increments {d0} then {d1}"
                )));
            }
        }
        Ok(CostModel::ConcaveSeparable(table))
    }

    pub fn entropy(edges: usize) -> Result<Self> {
        if edges == 0 {
            return Err(Error::InvalidCostModel("entropy needs at least one edge".into()));
        }
        Ok(CostModel::Entropy { edges })
    }

    /// True when the cost of a class ignores its color.
    pub fn is_separable(&self) -> bool {
        matches!(self, CostModel::ConcaveSeparable(_) | CostModel::Entropy { .. })
    }

    /// Cost of a class of `size` edges colored `color` (1-based).
    pub fn class_cost(&self, color: usize, size: usize) -> Result<Cost> {
        if size == 0 {
            return Ok(self.zero());
        }
        match self {
            CostModel::Sum => Ok(Cost::Exact(color as i64 * size as i64)),
            CostModel::ColorCosts(costs) => costs
                .get(color - 1)
                .map(|&c| Cost::Exact(c * size as i64))
                .ok_or_else(|| {
                    Error::InvalidCostModel(format!(
                        "color {color} used but only {} costs given",
                        costs.len()
                    ))
                }),
            CostModel::ConcaveSeparable(table) => table.get(size).map(|&c| Cost::Real(c)).ok_or_else(|| {
                Error::InvalidCostModel(format!(
                    "class of size {size} beyond the table (max {})",
                    table.len() - 1
                ))
            }),
            CostModel::Entropy { edges } => {
                if size > *edges {
                    return Err(Error::InvalidCostModel(format!(
                        "class of size {size} exceeds the {edges} edges"
                    )));
                }
                let q = size as f64 / *edges as f64;
                Ok(Cost::Real(-q * q.ln()))
            }
        }
    }

    pub fn zero(&self) -> Cost {
        match self {
            CostModel::Sum | CostModel::ColorCosts(_) => Cost::Exact(0),
            _ => Cost::Real(0.0),
        }
    }

    /// Cost of a class-size profile, `profile[i]` being the size of color
    /// `i + 1`.
    pub fn profile_cost(&self, profile: &[usize]) -> Result<Cost> {
        let mut total = self.zero();
        for (i, &size) in profile.iter().enumerate() {
            total = total + self.class_cost(i + 1, size)?;
        }
        Ok(total)
    }

    /// Short name used on the command line and in reports.
    pub fn name(&self) -> String {
        match self {
            CostModel::Sum => "sum".into(),
            CostModel::ColorCosts(c) => format!(
                "occp:{}",
                c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
            CostModel::ConcaveSeparable(t) => format!(
                "concave:{}",
                t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
            CostModel::Entropy { .. } => "entropy".into(),
        }
    }
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A cost value: exact for integer models, real otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cost {
    Exact(i64),
    Real(f64),
}

impl Cost {
    pub fn as_f64(self) -> f64 {
        match self {
            Cost::Exact(x) => x as f64,
            Cost::Real(x) => x,
        }
    }

    /// Exact comparison for integer costs; real costs within [`TOLERANCE`]
    /// compare equal.
    pub fn compare(self, other: Cost) -> Ordering {
        match (self, other) {
            (Cost::Exact(a), Cost::Exact(b)) => a.cmp(&b),
            (a, b) => {
                let (x, y) = (a.as_f64(), b.as_f64());
                if (x - y).abs() <= TOLERANCE {
                    Ordering::Equal
                } else if x < y {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn approx_eq(self, other: Cost) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl std::ops::Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        match (self, rhs) {
            (Cost::Exact(a), Cost::Exact(b)) => Cost::Exact(a + b),
            (a, b) => Cost::Real(a.as_f64() + b.as_f64()),
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Exact(x) => write!(f, "{x}"),
            Cost::Real(x) => write!(f, "{x:.9}"),
        }
    }
}

/// Cost of a coloring under `model`.
pub fn evaluate(model: &CostModel, f: &EdgeColoring) -> Result<Cost> {
    if let CostModel::Entropy { edges } = model {
        if *edges != f.len() {
            return Err(Error::InvalidCostModel(format!(
                "entropy model built for {edges} edges, coloring has {}",
                f.len()
            )));
        }
    }
    model.profile_cost(&f.profile())
}

fn ensure_nonincreasing(name: &str, s: &[usize]) -> Result<()> {
    if s.windows(2).any(|w| w[1] > w[0]) {
        return Err(Error::Precondition(format!("sequence {name} = {s:?} is not nonincreasing")));
    }
    Ok(())
}

/// True iff every prefix sum of `a` is at least the matching prefix sum of
/// `b`, the shorter sequence padded with zeros.
pub fn prefix_dominates(a: &[usize], b: &[usize]) -> Result<bool> {
    ensure_nonincreasing("a", a)?;
    ensure_nonincreasing("b", b)?;
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `sum_i c(i, a_i) <= sum_i c(i, b_i)` for a dominating pair of
/// profiles of the same total.
pub fn check_property(model: &CostModel, a: &[usize], b: &[usize]) -> Result<bool> {
    if !prefix_dominates(a, b)? {
        return Err(Error::Precondition(format!("{a:?} does not dominate {b:?}")));
    }
    let (ta, tb) = (a.iter().sum::<usize>(), b.iter().sum::<usize>());
    if ta != tb {
        return Err(Error::Precondition(format!(
            "profiles count different edge totals ({ta} vs {tb})"
        )));
    }
    let ca = model.profile_cost(a)?;
    let cb = model.profile_cost(b)?;
    Ok(ca.compare(cb) != Ordering::Greater)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelVerdict {
    pub model: CostModel,
    pub achieved: Cost,
    pub optimum: Cost,
    pub optimal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RobustReport {
    pub verdicts: Vec<ModelVerdict>,
}

impl RobustReport {
    pub fn all_optimal(&self) -> bool {
        self.verdicts.iter().all(|v| v.optimal)
    }
}

/// Compares `f` against the oracle optimum of `g` under every model.
pub fn verify_robust<G: Topology + ?Sized>(
    g: &G,
    f: &EdgeColoring,
    models: &[CostModel],
    config: &OracleConfig,
) -> Result<RobustReport> {
    crate::coloring::ensure_proper(g, f)?;
    let mg = g.to_multigraph();
    if mg.edges().len() > config.max_edges {
        return Err(Error::TooLarge {
            edges: mg.edges().len(),
            bound: config.max_edges,
        });
    }
    let mut verdicts = Vec::with_capacity(models.len());
    for model in models {
        let achieved = evaluate(model, f)?;
        let best = oracle_min_cost(&mg, model, None, config)?;
        verdicts.push(ModelVerdict {
            model: model.clone(),
            achieved,
            optimum: best.cost,
            optimal: achieved.compare(best.cost) != Ordering::Greater,
        });
    }
    Ok(RobustReport { verdicts })
}
