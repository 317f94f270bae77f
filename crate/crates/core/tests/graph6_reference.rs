//! graph6 against records written by an independent encoder (networkx).

use homind::graph::{decode_graph6, encode_graph6, Graph};

fn records() -> Vec<(String, Graph)> {
    let text = include_str!("data/graph6_reference.txt");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let mut parts = line.split(' ');
            let code = parts.next().unwrap().to_string();
            let n: usize = parts.next().unwrap().parse().unwrap();
            let mut g = Graph::new(n);
            if let Some(edges) = parts.next() {
                for e in edges.split(',').filter(|e| !e.is_empty()) {
                    let (u, v) = e.split_once('-').unwrap();
                    g.add_edge(u.parse().unwrap(), v.parse().unwrap()).unwrap();
                }
            }
            (code, g)
        })
        .collect()
}

#[test]
fn decodes_reference_records() {
    let recs = records();
    assert_eq!(recs.len(), 100);
    for (code, g) in &recs {
        assert_eq!(&decode_graph6(code).unwrap(), g, "{code}");
    }
}

#[test]
fn encodes_reference_records() {
    for (code, g) in records() {
        assert_eq!(encode_graph6(&g), code);
    }
}
