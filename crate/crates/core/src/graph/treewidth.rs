use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Default order bound for [`exact_treewidth`].
pub const TREEWIDTH_MAX_ORDER: usize = 20;

/// A tree decomposition `(T, β)` of `subject`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    #[serde(serialize_with = "ser_graph")]
    pub tree: Graph,
    pub bags: Vec<Vec<usize>>,
    #[serde(skip)]
    pub subject: Graph,
}

fn ser_graph<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&super::encode_graph6(g))
}

impl TreeDecomposition {
    pub fn bag_set(&self, t: usize) -> VertexSet {
        self.bags[t].iter().copied().collect()
    }

    /// Largest bag size minus one (zero for a decomposition with only empty bags).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Largest intersection of adjacent bags.
    pub fn adhesion(&self) -> usize {
        self.tree
            .edges()
            .iter()
            .map(|&(s, t)| (self.bag_set(s) & self.bag_set(t)).len())
            .max()
            .unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        decomposition_weight(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        if self.bags.len() != self.tree.order() {
            return bad("one bag per tree node required".into());
        }
        if !self.tree.is_tree() {
            return bad("the decomposition tree is not a tree".into());
        }
        for b in &self.bags {
            if let Some(&v) = b.iter().find(|&&v| v >= self.subject.order()) {
                return bad(format!("bag mentions vertex {v} outside the graph"));
            }
        }
        for (u, v) in self.subject.edges() {
            if !(0..self.bags.len()).any(|t| self.bag_set(t).contains(u) && self.bag_set(t).contains(v)) {
                return bad(format!("edge {{{u}, {v}}} is not covered"));
            }
        }
        for v in 0..self.subject.order() {
            let nodes: VertexSet = (0..self.bags.len())
                .filter(|&t| self.bag_set(t).contains(v))
                .collect();
            if nodes.is_empty() {
                return bad(format!("vertex {v} is in no bag"));
            }
            if !self.tree.is_connected_within(nodes) {
                return bad(format!("bags containing vertex {v} are not connected"));
            }
        }
        Ok(())
    }

    /// Builds the decomposition induced by an elimination ordering.
    pub fn from_elimination_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
        let n = g.order();
        if n == 0 {
            return TreeDecomposition {
                tree: Graph::new(1),
                bags: vec![Vec::new()],
                subject: g.clone(),
            };
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = g.clone();
        let mut bags = Vec::with_capacity(n);
        let mut parent = vec![None; n];
        for (i, &v) in order.iter().enumerate() {
            let later: VertexSet = h.neighbours(v).iter().filter(|&w| pos[w] > i).collect();
            h = h.with_clique(later);
            let mut bag = later;
            bag.insert(v);
            bags.push(bag.to_vec());
            parent[i] = later.iter().map(|w| pos[w]).min();
        }
        let mut tree = Graph::new(n);
        let mut last_root: Option<usize> = None;
        for i in 0..n {
            match parent[i] {
                Some(p) => tree.add_edge(i, p).unwrap(),
                None => {
                    if let Some(r) = last_root {
                        tree.add_edge(i, r).unwrap();
                    }
                    last_root = Some(i);
                }
            }
        }
        TreeDecomposition {
            tree,
            bags,
            subject: g.clone(),
        }
    }
}

/// `Σ_t |β(t)|²`.
pub fn decomposition_weight(d: &TreeDecomposition) -> usize {
    d.bags.iter().map(|b| b.len() * b.len()).sum()
}

/// Width of the elimination ordering `order` on `g`.
fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    let mut h = g.clone();
    let mut alive = g.vertices();
    let mut w = 0;
    for &v in order {
        alive.remove(v);
        let nb = h.neighbours(v) & alive;
        w = w.max(nb.len());
        h = h.with_clique(nb);
    }
    w
}

/// Exact treewidth by trying every elimination ordering. Test oracle only.
pub fn brute_force_treewidth(g: &Graph) -> usize {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = n.saturating_sub(1);
    fn rec(g: &Graph, perm: &mut Vec<usize>, k: usize, best: &mut usize) {
        if k == perm.len() {
            *best = (*best).min(elimination_width(g, perm));
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(g, perm, k + 1, best);
            perm.swap(k, i);
        }
    }
    rec(g, &mut perm, 0, &mut best);
    best
}

/// Optimal elimination ordering for a connected graph via subset DP.
fn optimal_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let full = 1usize << n;
    // tw[S] = best width achievable when the vertices of S are eliminated first.
    let mut tw = vec![0u8; full];
    let mut choice = vec![0u8; full];
    let q = |s: usize, v: usize| -> usize {
        let within = VertexSet(s as u128) | VertexSet::singleton(v);
        g.set_neighbours(g.reach(v, within)).len()
    };
    for s in 1..full {
        let mut best = u8::MAX;
        let mut arg = 0;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cand = tw[prev].max(q(prev, v) as u8);
            if cand < best {
                best = cand;
                arg = v;
            }
        }
        tw[s] = best;
        choice[s] = arg as u8;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full - 1;
    while s != 0 {
        let v = choice[s] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    order
}

pub fn exact_treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    exact_treewidth_with_bound(g, TREEWIDTH_MAX_ORDER)
}

/// Exact treewidth and an optimal decomposition; components larger than
/// `bound` vertices are rejected.
pub fn exact_treewidth_with_bound(g: &Graph, bound: usize) -> Result<(usize, TreeDecomposition)> {
    let order = optimal_elimination_order(g, bound)?;
    let d = TreeDecomposition::from_elimination_order(g, &order);
    Ok((d.width(), d))
}

/// An elimination ordering of minimum width, computed per component.
pub fn optimal_elimination_order(g: &Graph, bound: usize) -> Result<Vec<usize>> {
    let mut order = Vec::with_capacity(g.order());
    for c in g.components() {
        if c.len() > bound {
            return Err(Error::OrderTooLarge {
                order: c.len(),
                bound,
            });
        }
        let (sub, map) = g.induced(c);
        order.extend(optimal_order(&sub).into_iter().map(|v| map[v]));
    }
    Ok(order)
}

/// A vertex of degree at most `k` whose removal keeps `g` connected.
pub fn find_noncut_low_degree_vertex(g: &Graph, k: usize) -> Result<usize> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Precondition("graph must be connected and non-empty".into()));
    }
    (0..g.order())
        .find(|&v| g.degree(v) <= k && !g.is_cut_vertex(v))
        .ok_or(Error::NoLowDegreeVertex { k })
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::super::{all_graphs_upto, connected_graphs_upto};
    use super::*;

    #[test]
    fn known_widths() {
        assert_eq!(exact_treewidth(&complete(5)).unwrap().0, 4);
        assert_eq!(exact_treewidth(&cycle(5)).unwrap().0, 2);
        assert_eq!(exact_treewidth(&star(4)).unwrap().0, 1);
        assert_eq!(exact_treewidth(&path(6)).unwrap().0, 1);
        assert_eq!(exact_treewidth(&petersen()).unwrap().0, 4);
        assert_eq!(exact_treewidth(&Graph::new(0)).unwrap().0, 0);
        assert_eq!(exact_treewidth(&Graph::new(3)).unwrap().0, 0);
    }

    #[test]
    fn weight_examples() {
        let d = TreeDecomposition {
            tree: complete(2),
            bags: vec![vec![0, 1], vec![1, 2]],
            subject: path(3),
        };
        d.validate().unwrap();
        assert_eq!(d.weight(), 8);
        assert_eq!(d.adhesion(), 1);
        let single = TreeDecomposition {
            tree: complete(1),
            bags: vec![vec![0, 1, 2, 3, 4]],
            subject: complete(5),
        };
        assert_eq!(decomposition_weight(&single), 25);
    }

    #[test]
    fn invalid_decompositions_rejected() {
        let d = TreeDecomposition {
            tree: complete(2),
            bags: vec![vec![0, 1], vec![2]],
            subject: path(3),
        };
        assert!(d.validate().is_err());
        let d = TreeDecomposition {
            tree: path(3),
            bags: vec![vec![0, 1], vec![1, 2], vec![0]],
            subject: path(3),
        };
        assert!(d.validate().is_err());
    }

    #[test]
    fn dp_matches_brute_force_and_witness_is_valid() {
        for g in all_graphs_upto(7) {
            let (w, d) = exact_treewidth(&g).unwrap();
            d.validate().unwrap();
            assert_eq!(d.width(), w);
            assert_eq!(w, brute_force_treewidth(&g), "{g:?}");
        }
    }

    #[test]
    fn low_degree_noncut_vertex_exists() {
        for g in connected_graphs_upto(7) {
            if g.order() == 0 {
                continue;
            }
            let k = exact_treewidth(&g).unwrap().0;
            let v = find_noncut_low_degree_vertex(&g, k).unwrap();
            assert!(g.degree(v) <= k);
            assert!(!g.is_cut_vertex(v));
        }
        assert_eq!(find_noncut_low_degree_vertex(&path(4), 1).unwrap(), 0);
        assert!(find_noncut_low_degree_vertex(&complete(4), 2).is_err());
    }
}
