//! Closed-form chromatic index and edge strength.
//!
//! Every edge strength `s'` is bounded below by the maximum degree and by
//! `ceil(m / tau)` (`tau` = maximum matching size), since each color class
//! is a matching. For multicycles and bipartite multigraphs the minimum sum
//! is always reachable with `chi'` colors, so `s' = chi'`:
//!
//! * bipartite: `s' = chi' = Delta`;
//! * even multicycle: `s' = chi' = Delta`;
//! * odd multicycle on `2k + 1` vertices: `s' = chi' = max(Delta, ceil(m / k))`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Multicycle, Multigraph, Multipath, Topology};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrengthReport {
    pub delta: usize,
    /// `ceil(m / tau)`, zero for edgeless graphs.
    pub load_bound: usize,
    pub chromatic_index: usize,
    pub edge_strength: usize,
}

pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    if b == 0 {
        0
    } else {
        a.div_ceil(b)
    }
}

/// Chromatic index from bundle multiplicities, all assumed positive.
pub(crate) fn cycle_index(mult: &[usize], delta: usize, m: usize) -> usize {
    let n = mult.len();
    if n.is_multiple_of(2) {
        delta
    } else {
        delta.max(ceil_div(m, n / 2))
    }
}

pub fn chromatic_index_multicycle(g: &Multicycle) -> usize {
    cycle_index(g.mult(), g.max_degree(), g.edge_count())
}

pub fn edge_strength_multicycle(g: &Multicycle) -> StrengthReport {
    let chi = chromatic_index_multicycle(g);
    StrengthReport {
        delta: g.max_degree(),
        load_bound: ceil_div(g.edge_count(), g.matching_number()),
        chromatic_index: chi,
        edge_strength: chi,
    }
}

pub fn edge_strength_multipath(h: &Multipath) -> StrengthReport {
    let delta = h.max_degree();
    // a path on l + 1 vertices
    let tau = h.len().div_ceil(2);
    StrengthReport {
        delta,
        load_bound: ceil_div(h.edge_count(), tau),
        chromatic_index: delta,
        edge_strength: delta,
    }
}

/// Two-colors the vertices, or returns the vertices of an odd cycle in
/// traversal order.
pub fn bipartition(g: &Multigraph) -> Result<Vec<bool>> {
    let inc = g.incidence();
    let nv = g.nv();
    let mut side: Vec<Option<bool>> = vec![None; nv];
    let mut parent = vec![usize::MAX; nv];
    let mut depth = vec![0usize; nv];
    let mut queue = VecDeque::new();
    for root in 0..nv {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for &e in &inc[x] {
                let y = g.other_end(e, x);
                match side[y] {
                    None => {
                        side[y] = Some(!side[x].unwrap());
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                    Some(s) if s == side[x].unwrap() => {
                        return Err(Error::NotBipartite {
                            witness: odd_cycle(&parent, &depth, x, y),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(side.into_iter().map(|s| s.unwrap_or(false)).collect())
}

/// Closes the BFS-tree paths from `u` and `v` at their lowest common
/// ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    // up_a runs u..lca, up_b runs v..lca
    up_b.pop();
    up_a.reverse();
    up_a.extend(up_b);
    up_a
}

pub fn is_bipartite(g: &Multigraph) -> (bool, Option<Vec<usize>>) {
    match bipartition(g) {
        Ok(_) => (true, None),
        Err(Error::NotBipartite { witness }) => (false, Some(witness)),
        Err(e) => unreachable!("bipartition only fails with a witness: {e}"),
    }
}

/// Edge strength of a bipartite multigraph, its maximum degree. Holds for
/// disconnected graphs as well, the strength of a disjoint union being the
/// maximum over its components.
pub fn edge_strength_bipartite(g: &Multigraph) -> Result<usize> {
    bipartition(g)?;
    Ok(g.max_degree())
}

pub fn strength_report_bipartite(g: &Multigraph) -> Result<StrengthReport> {
    let sides = bipartition(g)?;
    let delta = g.max_degree();
    let tau = bipartite_matching_size(g, &sides);
    Ok(StrengthReport {
        delta,
        load_bound: ceil_div(g.edges().len(), tau),
        chromatic_index: delta,
        edge_strength: delta,
    })
}

/// Maximum matching size by augmenting paths from the `false` side.
fn bipartite_matching_size(g: &Multigraph, sides: &[bool]) -> usize {
    let nv = g.nv();
    let mut adj = vec![Vec::new(); nv];
    for &(u, v) in g.edges() {
        let (l, r) = if sides[u] { (v, u) } else { (u, v) };
        adj[l].push(r);
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    let mut mate = vec![usize::MAX; nv];
    let mut size = 0;
    for l in (0..nv).filter(|&x| !sides[x]) {
        let mut seen = vec![false; nv];
        if augment(l, &adj, &mut mate, &mut seen) {
            size += 1;
        }
    }
    size
}

fn augment(l: usize, adj: &[Vec<usize>], mate: &mut [usize], seen: &mut [bool]) -> bool {
    for &r in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if mate[r] == usize::MAX || augment(mate[r], adj, mate, seen) {
            mate[r] = l;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(mult: &[usize]) -> Multicycle {
        Multicycle::from_mult(mult.to_vec()).unwrap()
    }

    #[test]
    fn chromatic_index_examples() {
        assert_eq!(chromatic_index_multicycle(&cyc(&[1; 6])), 2);
        assert_eq!(chromatic_index_multicycle(&cyc(&[1, 1, 1])), 3);
        assert_eq!(chromatic_index_multicycle(&cyc(&[3, 1, 2, 1, 1])), 4);
    }

    #[test]
    fn strength_examples() {
        assert_eq!(edge_strength_multicycle(&cyc(&[1; 5])).edge_strength, 3);
        let r = edge_strength_multicycle(&cyc(&[2, 1, 1]));
        assert_eq!((r.delta, r.load_bound, r.edge_strength), (3, 4, 4));
        let r = edge_strength_multicycle(&cyc(&[2, 1, 1, 1]));
        assert_eq!((r.delta, r.edge_strength), (3, 3));
    }

    #[test]
    fn bipartite_examples() {
        let path = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_strength_bipartite(&path).unwrap(), 2);

        let c4 = cyc(&[2, 1, 1, 1]).to_multigraph();
        assert_eq!(edge_strength_bipartite(&c4).unwrap(), 3);

        let tri = Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(
            edge_strength_bipartite(&tri),
            Err(Error::NotBipartite { witness: vec![0, 1, 2] })
        );
    }

    #[test]
    fn bipartite_check() {
        assert!(is_bipartite(&cyc(&[1; 6]).to_multigraph()).0);
        let (ok, witness) = is_bipartite(&cyc(&[1; 5]).to_multigraph());
        assert!(!ok);
        let w = witness.unwrap();
        assert_eq!(w.len() % 2, 1);
        let two = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(is_bipartite(&two).0);
    }

    #[test]
    fn witness_is_a_closed_walk() {
        // odd cycle hanging off a tree
        let g = Multigraph::new(
            7,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2)],
        )
        .unwrap();
        let (ok, w) = is_bipartite(&g);
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.len() % 2, 1);
        let has_edge = |a: usize, b: usize| {
            g.edges().iter().any(|&(u, v)| (u, v) == (a, b) || (v, u) == (a, b))
        };
        for i in 0..w.len() {
            assert!(has_edge(w[i], w[(i + 1) % w.len()]), "{w:?}");
        }
    }

    #[test]
    fn edgeless_is_zero() {
        let g = Multigraph::new(3, vec![]).unwrap();
        assert_eq!(edge_strength_bipartite(&g).unwrap(), 0);
        let r = strength_report_bipartite(&g).unwrap();
        assert_eq!((r.load_bound, r.chromatic_index), (0, 0));
    }

    #[test]
    fn disconnected_is_max_over_components() {
        // star of degree 3 plus a 4-cycle with a doubled edge
        let g = Multigraph::new(
            8,
            vec![(0, 1), (0, 2), (0, 3), (4, 5), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        assert_eq!(edge_strength_bipartite(&g).unwrap(), 3);
    }

    #[test]
    fn load_bound_uses_matching_number() {
        let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = strength_report_bipartite(&star).unwrap();
        assert_eq!(r.load_bound, 3);
        let p = Multipath::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(edge_strength_multipath(&p).load_bound, 2);
    }
}
