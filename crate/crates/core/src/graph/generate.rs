//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are obtained from those on `n - 1` by adding one
//! vertex with every possible neighbourhood, then deduplicated by canonical
//! form. Each class is represented by its canonically labelled member.

use std::collections::HashSet;
use std::sync::{Arc, Mutex};

use super::{canonical_form, decode_graph6, Graph, VertexSet};

static LEVELS: Mutex<Vec<Arc<Vec<Graph>>>> = Mutex::new(Vec::new());

fn level(n: usize) -> Arc<Vec<Graph>> {
    {
        let cache = LEVELS.lock().unwrap();
        if let Some(l) = cache.get(n) {
            return l.clone();
        }
    }
    let built = if n == 0 {
        vec![Graph::new(0)]
    } else {
        let prev = level(n - 1);
        let mut seen = HashSet::new();
        let mut forms = Vec::new();
        for h in prev.iter() {
            for s in 0..1u128 << (n - 1) {
                let mut g = h.clone();
                let v = g.add_vertex();
                for w in VertexSet(s) {
                    g.add_edge(v, w).unwrap();
                }
                let form = canonical_form(&g);
                if seen.insert(form.clone()) {
                    forms.push((g.size(), form));
                }
            }
        }
        forms.sort();
        forms
            .into_iter()
            .map(|(_, f)| decode_graph6(f.as_str()).expect("canonical forms are valid graph6"))
            .collect()
    };
    // Building level n built every lower level first, so the cache has length >= n.
    let mut cache = LEVELS.lock().unwrap();
    if cache.len() == n {
        cache.push(Arc::new(built));
    }
    cache[n].clone()
}

/// All graphs on exactly `n` vertices up to isomorphism, ordered by edge count
/// and then canonical form.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    level(n).as_ref().clone()
}

/// All graphs with `1..=max_n` vertices, ordered by vertex count first.
pub fn all_graphs_upto(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

pub fn connected_graphs_upto(max_n: usize) -> Vec<Graph> {
    all_graphs_upto(max_n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

pub fn trees_upto(max_n: usize) -> Vec<Graph> {
    all_graphs_upto(max_n)
        .into_iter()
        .filter(|g| g.is_tree())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequences() {
        // Graphs, connected graphs and trees on n vertices (OEIS A000088, A001349, A000055).
        let graphs = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 1, 2, 6, 21, 112, 853];
        let trees = [1, 1, 1, 1, 2, 3, 6, 11];
        for n in 0..=7 {
            let all = all_graphs(n);
            assert_eq!(all.len(), graphs[n], "n = {n}");
            assert_eq!(all.iter().filter(|g| g.is_connected()).count(), connected[n]);
            if n > 0 {
                assert_eq!(all.iter().filter(|g| g.is_tree()).count(), trees[n]);
            }
        }
    }

    #[test]
    fn order_is_by_edge_count() {
        let g = all_graphs(4);
        assert!(g.windows(2).all(|w| w[0].size() <= w[1].size()));
        assert_eq!(g[0].size(), 0);
        assert_eq!(g.last().unwrap().size(), 6);
    }
}
