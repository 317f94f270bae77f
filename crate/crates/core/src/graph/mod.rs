//! Simple undirected loopless graphs on dense vertex indices.
//!
//! Vertex sets are 128-bit masks, so every graph here has at most
//! [`MAX_ORDER`] vertices. All exact algorithms in this crate are
//! exponential anyway and run far below that bound.

mod canon;
mod generate;
mod graph6;
mod treewidth;

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

pub use canon::{canonical_form, canonical_form_coloured, canonical_labeling, CanonicalForm};
pub use generate::{all_graphs, all_graphs_upto, connected_graphs_upto, trees_upto};
pub use graph6::{decode_graph6, encode_graph6, parse_graph6_lines};
pub use treewidth::{
    brute_force_treewidth, decomposition_weight, exact_treewidth, exact_treewidth_with_bound,
    find_noncut_low_degree_vertex, optimal_elimination_order, TreeDecomposition, TREEWIDTH_MAX_ORDER,
};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 128;

pub type Edge = (usize, usize);

/// A set of vertices of a graph of order at most [`MAX_ORDER`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple graph on the vertices `0..order()`.
///
/// The adjacency relation is symmetric and irreflexive by construction:
/// the only way to add an edge is [`Graph::add_edge`], which rejects loops
/// and writes both directions.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. Panics above [`MAX_ORDER`].
    pub fn new(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph {
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn try_new(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                bound: MAX_ORDER,
            });
        }
        Ok(Graph::new(n))
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph> {
        let mut g = Graph::try_new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            }),
            None => Ok(()),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn add_vertex(&mut self) -> usize {
        assert!(self.order() < MAX_ORDER);
        self.adj.push(VertexSet::EMPTY);
        self.adj.len() - 1
    }

    /// Neighbourhood of a set: vertices outside `s` adjacent to some vertex of `s`.
    pub fn set_neighbours(&self, s: VertexSet) -> VertexSet {
        let mut n = VertexSet::EMPTY;
        for v in s {
            n |= self.adj[v];
        }
        n - s
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = (next & within) - seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components of `g[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, within);
            out.push(c);
            rest = rest - c;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.reach(v, within) == within,
        }
    }

    /// `k`-connectivity: more than `k` vertices and no separator of size below `k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.order();
        if n <= k {
            return false;
        }
        let all = self.vertices();
        crate::util::subsets_up_to(n, k.saturating_sub(1))
            .all(|x| self.is_connected_within(all - x))
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let rest = self.vertices() - VertexSet::singleton(v);
        let before = self.components().len();
        self.components_within(rest).len() > before
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.is_connected() && self.size() + 1 == self.order()
    }

    /// Induced subgraph on `s`, with the old index of each new vertex.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            let mut row = VertexSet::EMPTY;
            for w in self.adj[v] & s {
                row.insert(pos[w]);
            }
            g.adj[i] = row;
        }
        (g, map)
    }

    pub fn remove_vertices(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        self.induced(self.vertices() - s)
    }

    /// Apply a bijection: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.order());
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }

    /// `self` followed by a shifted copy of `other`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let mut g = self.clone();
        for v in 0..other.order() {
            let row = other.adj[v].iter().map(|w| w + n).collect();
            g.adj.push(row);
        }
        assert!(g.order() <= MAX_ORDER);
        g
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: (0..self.order())
                .map(|v| all - self.adj[v] - VertexSet::singleton(v))
                .collect(),
        }
    }

    /// Adds every missing edge inside `s`.
    pub fn with_clique(&self, s: VertexSet) -> Graph {
        let mut g = self.clone();
        for v in s {
            g.adj[v] |= s - VertexSet::singleton(v);
        }
        g
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (s - VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    /// Contracts the edge `uv`. The merged vertex keeps the smaller index,
    /// the larger index is removed and higher indices shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(self.identify(u, v))
    }

    /// Identifies two distinct vertices, dropping the loop and merging parallel edges.
    pub(crate) fn identify(&self, u: usize, v: usize) -> Graph {
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let shift = |w: usize| if w > gone { w - 1 } else { w };
        let mut g = Graph::new(self.order() - 1);
        for (a, b) in self.edges() {
            let a = if a == gone { keep } else { a };
            let b = if b == gone { keep } else { b };
            if a != b {
                let (a, b) = (shift(a), shift(b));
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
        g
    }

    /// The torso on `x`: `g[x]` plus a clique on `N(C)` for every component `C` of `g - x`.
    /// Vertices of `x` are renumbered in increasing order.
    pub fn torso(&self, x: VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        let mut h = self.clone();
        for c in self.components_within(self.vertices() - x) {
            h = h.with_clique(self.set_neighbours(c));
        }
        Ok(h.induced(x).0)
    }

    /// Glues `g2` onto `g1` by identifying `s2[i]` with `s1[i]`, then deletes `drop`.
    ///
    /// The result lists the vertices of `g1` first (same indices), followed by the
    /// vertices of `g2` outside `s2` in increasing order. `drop` is given in the
    /// indexing of `g1` and must consist of edges inside `s1`.
    pub fn clique_sum(
        g1: &Graph,
        g2: &Graph,
        s1: &[usize],
        s2: &[usize],
        drop: &[Edge],
    ) -> Result<Graph> {
        if s1.len() != s2.len() {
            return Err(Error::InvalidCliqueSum(format!(
                "separator sizes differ ({} vs {})",
                s1.len(),
                s2.len()
            )));
        }
        let set1: VertexSet = s1.iter().copied().collect();
        let set2: VertexSet = s2.iter().copied().collect();
        g1.check_set(set1)?;
        g2.check_set(set2)?;
        if set1.len() != s1.len() || set2.len() != s2.len() {
            return Err(Error::InvalidCliqueSum("repeated separator vertex".into()));
        }
        if !g1.is_clique(set1) || !g2.is_clique(set2) {
            return Err(Error::InvalidCliqueSum(
                "identified sets must induce cliques".into(),
            ));
        }
        let n1 = g1.order();
        let mut image = vec![usize::MAX; g2.order()];
        for (&a, &b) in s1.iter().zip(s2) {
            image[b] = a;
        }
        let mut next = n1;
        for v in 0..g2.order() {
            if image[v] == usize::MAX {
                image[v] = next;
                next += 1;
            }
        }
        let mut g = g1.clone();
        while g.order() < next {
            g.add_vertex();
        }
        for (a, b) in g2.edges() {
            g.add_edge(image[a], image[b])?;
        }
        for &(a, b) in drop {
            if !set1.contains(a) || !set1.contains(b) {
                return Err(Error::InvalidCliqueSum(format!(
                    "dropped edge {{{a}, {b}}} is not inside the identified clique"
                )));
            }
            g.remove_edge(a, b)?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.order(), self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

/// Named graphs used throughout the test suites and the CLI.
pub mod named {
    use super::Graph;

    pub fn empty(n: usize) -> Graph {
        Graph::new(n)
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n).complement()
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i, i+5`.
    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
        }
        g
    }

    /// The Wagner graph: an 8-cycle plus its four long diagonals.
    pub fn wagner() -> Graph {
        let mut g = cycle(8);
        for i in 0..4 {
            g.add_edge(i, i + 4).unwrap();
        }
        g
    }

    pub fn disjoint_copies(g: &Graph, k: usize) -> Graph {
        (0..k).fold(Graph::new(0), |acc, _| acc.disjoint_union(g))
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn contract_small_cases() {
        assert_eq!(complete(2).contract_edge(0, 1).unwrap(), complete(1));
        let c3 = cycle(4).contract_edge(1, 2).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(c3.size(), 3);
        assert_eq!(path(3).contract_edge(0, 1).unwrap(), complete(2));
        assert!(matches!(
            path(3).contract_edge(0, 2),
            Err(Error::NotAnEdge(0, 2))
        ));
    }

    #[test]
    fn contract_merges_parallel_edges() {
        // Contracting a triangle edge leaves a single edge, not a double edge.
        let g = cycle(3).contract_edge(0, 2).unwrap();
        assert_eq!(g, complete(2));
    }

    #[test]
    fn torso_examples() {
        let p3 = path(3);
        let t = p3.torso([0, 2].into_iter().collect()).unwrap();
        assert_eq!(t, complete(2));
        assert_eq!(p3.torso(p3.vertices()).unwrap(), p3);
        let claw = star(3);
        assert_eq!(claw.torso([1, 2, 3].into_iter().collect()).unwrap(), complete(3));
        assert!(p3.torso(VertexSet::singleton(5)).is_err());
    }

    #[test]
    fn clique_sum_examples() {
        let k3 = complete(3);
        let diamond = Graph::clique_sum(&k3, &k3, &[0, 1], &[0, 1], &[]).unwrap();
        assert_eq!(diamond.order(), 4);
        assert_eq!(diamond.size(), 5);
        let c4 = Graph::clique_sum(&k3, &k3, &[0, 1], &[0, 1], &[(0, 1)]).unwrap();
        assert_eq!(c4.size(), 4);
        assert!(c4.neighbours(0).len() == 2 && c4.is_connected());
        let two_k2 = Graph::clique_sum(&complete(2), &complete(2), &[], &[], &[]).unwrap();
        assert_eq!(two_k2.order(), 4);
        assert_eq!(two_k2.components().len(), 2);
    }

    #[test]
    fn clique_sum_errors() {
        let p3 = path(3);
        let k3 = complete(3);
        assert!(Graph::clique_sum(&p3, &k3, &[0, 2], &[0, 1], &[]).is_err());
        assert!(Graph::clique_sum(&k3, &k3, &[0], &[0, 1], &[]).is_err());
        assert!(Graph::clique_sum(&k3, &k3, &[0, 1], &[0, 1], &[(0, 2)]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(complete(5).is_k_connected(4));
        assert!(!complete(5).is_k_connected(5));
        assert!(cycle(5).is_k_connected(2));
        assert!(!path(4).is_k_connected(2));
        assert!(path(3).is_cut_vertex(1));
        assert!(!path(3).is_cut_vertex(0));
        assert!(wagner().is_k_connected(3));
        assert_eq!(wagner().size(), 12);
        assert_eq!(petersen().max_degree(), 3);
    }
}
