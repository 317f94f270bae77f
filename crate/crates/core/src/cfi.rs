//! Even and odd CFI graphs over a connected base graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_ORDER};
use crate::hom::count_homs_big;

/// A CFI vertex: a base vertex and a set of its incident base edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gadget {
    pub base_vertex: usize,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfiPair {
    #[serde(serialize_with = "crate::serde_graph6")]
    pub base: Graph,
    #[serde(serialize_with = "crate::serde_graph6")]
    pub even: Graph,
    #[serde(serialize_with = "crate::serde_graph6")]
    pub odd: Graph,
    pub twist: usize,
    /// Gadget of each vertex of `even`.
    pub even_index: Vec<Gadget>,
    /// Gadget of each vertex of `odd`.
    pub odd_index: Vec<Gadget>,
}

/// `Σ_v 2^(deg(v) - 1)`, the order of either CFI graph.
pub fn cfi_order(base: &Graph) -> u128 {
    base.vertices()
        .iter()
        .map(|v| 1u128 << (base.degree(v).max(1) - 1))
        .sum()
}

fn cfi_graph(base: &Graph, twist: Option<usize>) -> (Graph, Vec<Gadget>) {
    let incident: Vec<Vec<Edge>> = (0..base.order())
        .map(|v| {
            base.neighbours(v)
                .iter()
                .map(|w| (v.min(w), v.max(w)))
                .collect()
        })
        .collect();
    let mut index = Vec::new();
    for (v, inc) in incident.iter().enumerate() {
        let want_odd = twist == Some(v);
        for mask in 0u64..1 << inc.len() {
            if (mask.count_ones() % 2 == 1) == want_odd {
                let edges = (0..inc.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| inc[k])
                    .collect();
                index.push(Gadget {
                    base_vertex: v,
                    edges,
                });
            }
        }
    }
    let mut g = Graph::new(index.len());
    for i in 0..index.len() {
        for j in i + 1..index.len() {
            let (a, b) = (&index[i], &index[j]);
            let (u, w) = (a.base_vertex, b.base_vertex);
            if base.has_edge(u, w) {
                let e = (u.min(w), u.max(w));
                if a.edges.contains(&e) == b.edges.contains(&e) {
                    g.add_edge(i, j).expect("distinct vertices");
                }
            }
        }
    }
    (g, index)
}

/// The CFI pair with the twist at vertex 0.
pub fn build_cfi_pair(base: &Graph) -> Result<CfiPair> {
    build_cfi_pair_twisted(base, 0)
}

/// The CFI pair with odd-size subsets at `twist` in the odd graph.
pub fn build_cfi_pair_twisted(base: &Graph, twist: usize) -> Result<CfiPair> {
    base.check_vertex(twist)?;
    if !base.is_connected() {
        return Err(Error::Precondition("CFI base graph must be connected".into()));
    }
    if let Some(v) = base.vertices().iter().find(|&v| base.degree(v) == 0) {
        return Err(Error::Precondition(format!("CFI base vertex {v} has degree 0")));
    }
    let order = cfi_order(base);
    if order > MAX_ORDER as u128 {
        return Err(Error::OrderTooLarge {
            order: order.min(usize::MAX as u128) as usize,
            bound: MAX_ORDER,
        });
    }
    let (even, even_index) = cfi_graph(base, None);
    let (odd, odd_index) = cfi_graph(base, Some(twist));
    Ok(CfiPair {
        base: base.clone(),
        even,
        odd,
        twist,
        even_index,
        odd_index,
    })
}

/// Whether `f` has different homomorphism counts into the two CFI graphs.
pub fn cfi_distinguishes(f: &Graph, pair: &CfiPair) -> bool {
    count_homs_big(f, &pair.even) != count_homs_big(f, &pair.odd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::{canonical_form, connected_graphs_upto};

    #[test]
    fn triangle_pair() {
        let p = build_cfi_pair(&cycle(3)).unwrap();
        assert_eq!(canonical_form(&p.even), canonical_form(&disjoint_copies(&cycle(3), 2)));
        assert_eq!(canonical_form(&p.odd), canonical_form(&cycle(6)));
        assert!(cfi_distinguishes(&cycle(3), &p));
        assert!(!cfi_distinguishes(&path(4), &p));
        assert!(!cfi_distinguishes(&complete(1), &p));
        assert!(!cfi_distinguishes(&cycle(6), &p));
    }

    #[test]
    fn edge_pair() {
        let p = build_cfi_pair(&complete(2)).unwrap();
        assert_eq!(p.even, complete(2));
        assert_eq!(p.odd, Graph::new(2));
        assert_eq!(p.odd_index[0].edges, vec![(0, 1)]);
        assert!(p.even_index[0].edges.is_empty());
    }

    #[test]
    fn orders() {
        for base in [complete(4), cycle(5), petersen(), star(3)] {
            let p = build_cfi_pair(&base).unwrap();
            assert_eq!(p.even.order() as u128, cfi_order(&base));
            assert_eq!(p.odd.order(), p.even.order());
        }
        assert_eq!(build_cfi_pair(&complete(4)).unwrap().even.order(), 16);
        assert!(build_cfi_pair(&Graph::new(2)).is_err());
        assert!(build_cfi_pair(&complete(1)).is_err());
        assert!(matches!(build_cfi_pair(&complete(9)), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn twist_location_and_non_isomorphism() {
        for base in connected_graphs_upto(6) {
            if base.order() < 2 {
                continue;
            }
            let p = build_cfi_pair(&base).unwrap();
            if !base.is_forest() {
                assert_ne!(canonical_form(&p.even), canonical_form(&p.odd), "{base}");
            }
            for t in 1..base.order() {
                let q = build_cfi_pair_twisted(&base, t).unwrap();
                assert_eq!(canonical_form(&q.odd), canonical_form(&p.odd));
            }
        }
    }
}
