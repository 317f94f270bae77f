use std::collections::HashMap;

use homind::graph::{decode_graph6, encode_graph6, exact_treewidth, Graph, VertexSet};
use homind::suite::{round_trip_corpus, DEFAULT_SEED};
use proptest::prelude::*;

#[test]
fn thousand_graph_corpus() {
    let corpus = round_trip_corpus(DEFAULT_SEED);
    assert_eq!(corpus.len(), 1000);
    assert!(corpus.iter().any(|g| g.order() > 62), "long length field not exercised");
    for g in &corpus {
        let s = encode_graph6(g);
        let back = decode_graph6(&s).unwrap();
        assert_eq!(&back, g);
        assert_eq!(encode_graph6(&back), s);
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Rebuilds `g` from the torsos of an optimal tree decomposition by iterated
/// clique-sums along the decomposition tree.
fn rebuild_from_torsos(g: &Graph) -> Graph {
    let (_, d) = exact_treewidth(g).unwrap();
    let torso = |t: usize| -> (Graph, Vec<usize>) {
        let bag = d.bag_set(t);
        (g.torso(bag).unwrap(), bag.to_vec())
    };
    let (mut current, mut label) = torso(0);
    let mut seen = VertexSet::singleton(0);
    let mut stack = vec![0];
    while let Some(p) = stack.pop() {
        for t in d.tree.neighbours(p).iter() {
            if seen.contains(t) {
                continue;
            }
            seen.insert(t);
            stack.push(t);
            let (piece, piece_label) = torso(t);
            let shared = (d.bag_set(p) & d.bag_set(t)).to_vec();
            let pos: HashMap<usize, usize> = label.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let s1: Vec<usize> = shared.iter().map(|v| pos[v]).collect();
            let s2: Vec<usize> = shared
                .iter()
                .map(|v| piece_label.iter().position(|w| w == v).unwrap())
                .collect();
            let clique1: VertexSet = s1.iter().copied().collect();
            let clique2: VertexSet = s2.iter().copied().collect();
            let left = current.with_clique(clique1);
            let right = piece.with_clique(clique2);
            let mut drop = Vec::new();
            for (i, &a) in s1.iter().enumerate() {
                for &b in &s1[i + 1..] {
                    if !g.has_edge(label[a], label[b]) {
                        drop.push((a.min(b), a.max(b)));
                    }
                }
            }
            current = Graph::clique_sum(&left, &right, &s1, &s2, &drop).unwrap();
            let mut rest: Vec<usize> = piece_label
                .iter()
                .copied()
                .filter(|v| !shared.contains(v))
                .collect();
            rest.sort_unstable();
            label.extend(rest);
        }
    }
    let mut out = Graph::new(g.order());
    for (a, b) in current.edges() {
        out.add_edge(label[a], label[b]).unwrap();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn torsos_rebuild_the_graph(g in graph_strategy(8)) {
        prop_assume!(g.is_connected());
        prop_assert_eq!(rebuild_from_torsos(&g), g);
    }
}
