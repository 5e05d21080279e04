//! Instance types: multicycles, multipaths, residual cycles and generic
//! loopless multigraphs.
//!
//! Cycle and path instances are stored implicitly as bundle multiplicities.
//! Their edges are numbered in a canonical flat order, bundle by bundle and
//! copy by copy, and every [`EdgeColoring`](crate::EdgeColoring) is indexed
//! by that flat position.

use std::fmt;

use crate::error::{Error, Result};

/// Identity of one edge of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeId {
    /// Copy `copy` of the parallel bundle `bundle`, `copy < m_bundle`.
    Bundle { bundle: usize, copy: usize },
    /// Position in a [`Multigraph`] edge list.
    Index(usize),
}

impl EdgeId {
    /// The bundle or edge-list index, whichever applies.
    pub fn major(&self) -> usize {
        match *self {
            EdgeId::Bundle { bundle, .. } => bundle,
            EdgeId::Index(i) => i,
        }
    }

    pub fn copy(&self) -> usize {
        match *self {
            EdgeId::Bundle { copy, .. } => copy,
            EdgeId::Index(_) => 0,
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeId::Bundle { bundle, copy } => write!(f, "[{bundle}]_{copy}"),
            EdgeId::Index(i) => write!(f, "#{i}"),
        }
    }
}

/// Common view of an instance as a vertex set plus a flat edge list.
pub trait Topology {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    /// Endpoints of every edge in flat order.
    fn endpoints(&self) -> Vec<(usize, usize)>;
    /// Identity of every edge in flat order.
    fn edge_ids(&self) -> Vec<EdgeId>;

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for (u, v) in self.endpoints() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    fn to_multigraph(&self) -> Multigraph {
        Multigraph {
            nv: self.vertex_count(),
            edges: self.endpoints(),
        }
    }
}

/// Starting flat index of every bundle.
pub(crate) fn bundle_offsets(mult: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(mult.len());
    let mut acc = 0;
    for &m in mult {
        offsets.push(acc);
        acc += m;
    }
    offsets
}

fn bundle_edge_ids(mult: &[usize]) -> Vec<EdgeId> {
    mult.iter()
        .enumerate()
        .flat_map(|(bundle, &m)| (0..m).map(move |copy| EdgeId::Bundle { bundle, copy }))
        .collect()
}

/// A cycle on `n >= 3` vertices whose bundle `i` holds `mult[i] >= 1`
/// parallel edges between vertex `i` and vertex `(i + 1) mod n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multicycle {
    mult: Vec<usize>,
}

impl Multicycle {
    pub fn new(n: usize, mult: Vec<usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::MalformedInstance(format!(
                "a multicycle needs at least 3 vertices, got {n}"
            )));
        }
        if mult.len() != n {
            return Err(Error::MalformedInstance(format!(
                "expected {n} multiplicities, got {}",
                mult.len()
            )));
        }
        if let Some(i) = mult.iter().position(|&m| m == 0) {
            return Err(Error::MalformedInstance(format!(
                "bundle {i} has multiplicity 0"
            )));
        }
        Ok(Multicycle { mult })
    }

    pub fn from_mult(mult: Vec<usize>) -> Result<Self> {
        Self::new(mult.len(), mult)
    }

    pub fn n(&self) -> usize {
        self.mult.len()
    }

    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    pub fn edge_count(&self) -> usize {
        self.mult.iter().sum()
    }

    /// Size of a maximum matching, `floor(n / 2)`.
    pub fn matching_number(&self) -> usize {
        self.n() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        let n = self.n();
        self.mult[(v + n - 1) % n] + self.mult[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_even(&self) -> bool {
        self.n().is_multiple_of(2)
    }
}

impl Topology for Multicycle {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn edge_count(&self) -> usize {
        Multicycle::edge_count(self)
    }

    fn endpoints(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        self.mult
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n((i, (i + 1) % n), m))
            .collect()
    }

    fn edge_ids(&self) -> Vec<EdgeId> {
        bundle_edge_ids(&self.mult)
    }
}

/// A multicycle that may have lost whole bundles. Once any multiplicity is
/// zero it is a disjoint union of multipaths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleResidual {
    mult: Vec<usize>,
}

impl CycleResidual {
    pub fn new(mult: Vec<usize>) -> Result<Self> {
        if mult.len() < 3 {
            return Err(Error::MalformedInstance(format!(
                "a cycle residual needs at least 3 vertices, got {}",
                mult.len()
            )));
        }
        Ok(CycleResidual { mult })
    }

    pub fn n(&self) -> usize {
        self.mult.len()
    }

    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    pub fn edge_count(&self) -> usize {
        self.mult.iter().sum()
    }

    pub fn is_cycle(&self) -> bool {
        self.mult.iter().all(|&m| m > 0)
    }

    /// Back to a proper multicycle, when no bundle is empty.
    pub fn to_multicycle(&self) -> Result<Multicycle> {
        Multicycle::from_mult(self.mult.clone())
    }
}

impl From<&Multicycle> for CycleResidual {
    fn from(g: &Multicycle) -> Self {
        CycleResidual {
            mult: g.mult.clone(),
        }
    }
}

/// A path with `len` bundles; bundle `j` (0-based) joins vertex `j` and
/// vertex `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multipath {
    mult: Vec<usize>,
}

impl Multipath {
    pub fn new(mult: Vec<usize>) -> Result<Self> {
        if mult.is_empty() {
            return Err(Error::MalformedInstance(
                "a multipath needs at least one bundle".into(),
            ));
        }
        if let Some(i) = mult.iter().position(|&m| m == 0) {
            return Err(Error::MalformedInstance(format!(
                "bundle {i} has multiplicity 0"
            )));
        }
        Ok(Multipath { mult })
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    pub fn edge_count(&self) -> usize {
        self.mult.iter().sum()
    }

    pub fn max_degree(&self) -> usize {
        let l = self.len();
        (0..=l)
            .map(|v| {
                let left = if v > 0 { self.mult[v - 1] } else { 0 };
                let right = if v < l { self.mult[v] } else { 0 };
                left + right
            })
            .max()
            .unwrap_or(0)
    }
}

impl Topology for Multipath {
    fn vertex_count(&self) -> usize {
        self.len() + 1
    }

    fn edge_count(&self) -> usize {
        Multipath::edge_count(self)
    }

    fn endpoints(&self) -> Vec<(usize, usize)> {
        self.mult
            .iter()
            .enumerate()
            .flat_map(|(j, &m)| std::iter::repeat_n((j, j + 1), m))
            .collect()
    }

    fn edge_ids(&self) -> Vec<EdgeId> {
        bundle_edge_ids(&self.mult)
    }
}

/// One component of a split residual, with the original bundle index of
/// each of its bundles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPiece {
    pub path: Multipath,
    pub bundles: Vec<usize>,
}

/// Decomposes a residual with at least one empty bundle into its maximal
/// runs of non-empty bundles, walking clockwise from the lowest-index empty
/// bundle.
pub fn split_residual(r: &CycleResidual) -> Result<Vec<PathPiece>> {
    split_runs(&r.mult).ok_or_else(|| {
        Error::Precondition("residual has no empty bundle, it is still a multicycle".into())
    })
}

pub(crate) fn split_runs(mult: &[usize]) -> Option<Vec<PathPiece>> {
    let n = mult.len();
    let first_zero = mult.iter().position(|&m| m == 0)?;
    let mut pieces = Vec::new();
    let mut bundles: Vec<usize> = Vec::new();
    for step in 1..=n {
        let b = (first_zero + step) % n;
        if mult[b] == 0 {
            if !bundles.is_empty() {
                pieces.push(make_piece(mult, std::mem::take(&mut bundles)));
            }
        } else {
            bundles.push(b);
        }
    }
    debug_assert!(bundles.is_empty());
    Some(pieces)
}

fn make_piece(mult: &[usize], bundles: Vec<usize>) -> PathPiece {
    PathPiece {
        path: Multipath {
            mult: bundles.iter().map(|&b| mult[b]).collect(),
        },
        bundles,
    }
}

/// A finite loopless multigraph given by an edge list. Edge identity is the
/// list index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    nv: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(nv: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= nv || v >= nv {
                return Err(Error::MalformedInstance(format!(
                    "edge {i} ({u}, {v}) references a vertex outside 0..{nv}"
                )));
            }
            if u == v {
                return Err(Error::MalformedInstance(format!("edge {i} is a loop at {u}")));
            }
        }
        Ok(Multigraph { nv, edges })
    }

    pub fn nv(&self) -> usize {
        self.nv
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges incident to each vertex, in edge-index order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.nv];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        inc
    }

    pub fn other_end(&self, e: usize, x: usize) -> usize {
        let (u, v) = self.edges[e];
        if u == x {
            v
        } else {
            u
        }
    }
}

impl Topology for Multigraph {
    fn vertex_count(&self) -> usize {
        self.nv
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn endpoints(&self) -> Vec<(usize, usize)> {
        self.edges.clone()
    }

    fn edge_ids(&self) -> Vec<EdgeId> {
        (0..self.edges.len()).map(EdgeId::Index).collect()
    }
}

/// Any of the instance kinds accepted by the tools.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Instance {
    Multicycle(Multicycle),
    Multipath(Multipath),
    Multigraph(Multigraph),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Multicycle(_) => "multicycle",
            Instance::Multipath(_) => "multipath",
            Instance::Multigraph(_) => "multigraph",
        }
    }
}

impl Topology for Instance {
    fn vertex_count(&self) -> usize {
        match self {
            Instance::Multicycle(g) => g.vertex_count(),
            Instance::Multipath(g) => g.vertex_count(),
            Instance::Multigraph(g) => g.vertex_count(),
        }
    }

    fn edge_count(&self) -> usize {
        match self {
            Instance::Multicycle(g) => Topology::edge_count(g),
            Instance::Multipath(g) => Topology::edge_count(g),
            Instance::Multigraph(g) => Topology::edge_count(g),
        }
    }

    fn endpoints(&self) -> Vec<(usize, usize)> {
        match self {
            Instance::Multicycle(g) => g.endpoints(),
            Instance::Multipath(g) => g.endpoints(),
            Instance::Multigraph(g) => g.endpoints(),
        }
    }

    fn edge_ids(&self) -> Vec<EdgeId> {
        match self {
            Instance::Multicycle(g) => g.edge_ids(),
            Instance::Multipath(g) => g.edge_ids(),
            Instance::Multigraph(g) => g.edge_ids(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Multicycle::new(3, vec![1, 1, 1]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.matching_number(), 1);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn five_cycle_degrees() {
        let g = Multicycle::new(5, vec![3, 1, 2, 1, 1]).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.matching_number(), 2);
        assert_eq!(g.max_degree(), 4);
        // independent scan over the explicit edge list
        assert_eq!(g.degrees(), vec![4, 4, 3, 3, 2]);
        assert_eq!(Topology::max_degree(&g), 4);
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Multicycle::new(2, vec![1, 1]).is_err());
        assert!(Multicycle::new(3, vec![1, 1]).is_err());
        assert!(Multicycle::new(3, vec![1, 0, 1]).is_err());
    }

    #[test]
    fn split_two_components() {
        let r = CycleResidual::new(vec![1, 0, 2, 0]).unwrap();
        let pieces = split_residual(&r).unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].path.mult(), &[2]);
        assert_eq!(pieces[0].bundles, vec![2]);
        assert_eq!(pieces[1].path.mult(), &[1]);
        assert_eq!(pieces[1].bundles, vec![0]);
    }

    #[test]
    fn split_wraps_around_vertex_zero() {
        // bundles 2, 3, 4 and 0 stay connected through vertex 0
        let r = CycleResidual::new(vec![1, 0, 1, 1, 1]).unwrap();
        let pieces = split_residual(&r).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].path.mult(), &[1, 1, 1, 1]);
        assert_eq!(pieces[0].bundles, vec![2, 3, 4, 0]);
    }

    #[test]
    fn split_rejects_full_cycle() {
        let r = CycleResidual::new(vec![1, 1, 1]).unwrap();
        assert!(split_residual(&r).is_err());
        let empty = CycleResidual::new(vec![0, 0, 0]).unwrap();
        assert!(split_residual(&empty).unwrap().is_empty());
    }

    #[test]
    fn multigraph_validation() {
        assert!(Multigraph::new(2, vec![(0, 0)]).is_err());
        assert!(Multigraph::new(2, vec![(0, 2)]).is_err());
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn multipath_degrees() {
        let h = Multipath::new(vec![2, 1, 3]).unwrap();
        assert_eq!(h.max_degree(), 4);
        assert_eq!(Topology::max_degree(&h), 4);
    }
}
