//! Membership in the closure of a hereditary class under clique-sums of
//! bounded order, and the minimal graphs outside such a closure.

use std::collections::HashMap;

use crate::graph::{all_graphs_upto, canonical_form, CanonicalForm, Graph, VertexSet};
use crate::util::subsets_up_to;

/// The closure of a subgraph-closed base class under `≤ s`-clique-sums.
///
/// A graph outside the base lies in the closure iff some set `S` with
/// `|S| ≤ s` disconnects it and every piece `G[C ∪ S]` plus a clique on `S`
/// (for `C` a component of `G - S`) lies in the closure.
pub struct CliqueSumClosure<F: Fn(&Graph) -> bool> {
    base: F,
    s: usize,
    memo: HashMap<CanonicalForm, bool>,
}

impl<F: Fn(&Graph) -> bool> CliqueSumClosure<F> {
    pub fn new(base: F, s: usize) -> Self {
        CliqueSumClosure {
            base,
            s,
            memo: HashMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.s
    }

    pub fn contains(&mut self, g: &Graph) -> bool {
        if (self.base)(g) {
            return true;
        }
        let key = canonical_form(g);
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let all = g.vertices();
        let mut answer = false;
        for sep in subsets_up_to(g.order(), self.s) {
            let comps = g.components_within(all - sep);
            if comps.len() < 2 {
                continue;
            }
            let pieces: Vec<Graph> = comps
                .iter()
                .map(|&c| g.with_clique(sep).induced(c | sep).0)
                .collect();
            if pieces.iter().all(|p| self.contains(p)) {
                answer = true;
                break;
            }
        }
        self.memo.insert(key, answer);
        answer
    }
}

/// One-shot membership test; see [`CliqueSumClosure`].
pub fn in_clique_sum_closure(g: &Graph, base: impl Fn(&Graph) -> bool, s: usize) -> bool {
    CliqueSumClosure::new(base, s).contains(g)
}

/// Graphs with at most `max_n` vertices outside the closure all of whose
/// proper subgraphs lie in it.
pub fn minimal_excluded_subgraphs<F: Fn(&Graph) -> bool>(
    closure: &mut CliqueSumClosure<F>,
    max_n: usize,
) -> Vec<Graph> {
    all_graphs_upto(max_n)
        .into_iter()
        .filter(|g| {
            !closure.contains(g)
                && g.edges().into_iter().all(|(u, v)| {
                    let mut h = g.clone();
                    h.remove_edge(u, v).unwrap();
                    closure.contains(&h)
                })
                && (0..g.order())
                    .all(|v| closure.contains(&g.remove_vertices(VertexSet::singleton(v)).0))
        })
        .collect()
}

/// Graphs with at most `max_n` vertices outside the closure all of whose
/// proper minors lie in it.
pub fn minimal_excluded_minors<F: Fn(&Graph) -> bool>(
    closure: &mut CliqueSumClosure<F>,
    max_n: usize,
) -> Vec<Graph> {
    all_graphs_upto(max_n)
        .into_iter()
        .filter(|g| {
            !closure.contains(g)
                && g.edges().into_iter().all(|(u, v)| {
                    let mut h = g.clone();
                    h.remove_edge(u, v).unwrap();
                    closure.contains(&h) && closure.contains(&g.contract_edge(u, v).unwrap())
                })
                && (0..g.order())
                    .all(|v| closure.contains(&g.remove_vertices(VertexSet::singleton(v)).0))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn forests_are_one_sums_of_edges() {
        let base = |g: &Graph| g.order() <= 2;
        let mut c = CliqueSumClosure::new(base, 1);
        assert!(c.contains(&path(6)));
        assert!(c.contains(&star(5)));
        assert!(!c.contains(&cycle(3)));
        let excluded = minimal_excluded_subgraphs(&mut c, 5);
        assert_eq!(excluded.len(), 3);
        assert!(excluded.iter().all(|g| g.order() == g.size()));
    }

    #[test]
    fn two_sums_of_triangles() {
        let base = |g: &Graph| g.order() <= 3;
        let mut c = CliqueSumClosure::new(base, 2);
        assert!(c.contains(&cycle(6)));
        assert!(!c.contains(&complete(4)));
        let excluded = minimal_excluded_minors(&mut c, 6);
        assert_eq!(excluded.len(), 1);
        assert_eq!(canonical_form(&excluded[0]), canonical_form(&complete(4)));
    }
}
