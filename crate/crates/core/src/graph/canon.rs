//! Canonical labelling by individualization and refinement.
//!
//! The search explores the full refinement tree, pruned only by automorphisms
//! discovered along the way, so the result is exact for every supported order.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{encode_graph6, Graph, VertexSet};

/// A string that identifies a graph (optionally vertex-coloured) up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<VertexSet> = cells
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        let mut out: Cells = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in cells {
            if cell.len() == 1 {
                out.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|&m| (g.neighbours(v) & m).len() as u8)
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    out.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            changed |= keyed.first().map(|k| &k.0) != keyed.last().map(|k| &k.0);
        }
        cells = out;
        if !changed {
            return cells;
        }
    }
}

fn individualize(cells: &Cells, cell: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, c) in cells.iter().enumerate() {
        if i == cell {
            out.push(vec![v]);
            out.push(c.iter().copied().filter(|&w| w != v).collect());
        } else {
            out.push(c.clone());
        }
    }
    out
}

struct Leaf {
    key: Vec<u128>,
    lab: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.order();
        let mut lab = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            lab[c[0]] = i;
        }
        let key: Vec<u128> = cells
            .iter()
            .map(|c| {
                self.g
                    .neighbours(c[0])
                    .iter()
                    .fold(0u128, |acc, w| acc | 1u128 << lab[w])
            })
            .collect();
        let Some(first) = &self.first else {
            self.first = Some(Leaf { key, lab });
            return;
        };
        for other in [Some(first), self.best.as_ref()].into_iter().flatten() {
            if other.key == key {
                // Relabelling by `lab` and by `other.lab` give the same graph.
                let mut inv = vec![0; n];
                for (v, &l) in other.lab.iter().enumerate() {
                    inv[l] = v;
                }
                let gamma: Vec<usize> = lab.iter().map(|&l| inv[l]).collect();
                self.autos.push(gamma);
                return;
            }
        }
        let first_key = &first.key;
        let best_key = self.best.as_ref().map_or(first_key, |b| &b.key);
        if key > *best_key {
            self.best = Some(Leaf { key, lab });
        }
    }

    fn explore(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[t].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let child = refine(self.g, individualize(&cells, t, v));
            prefix.push(v);
            self.explore(child, prefix);
            prefix.pop();
        }
    }

    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let r = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == r)
    }
}

fn initial_cells(n: usize, colours: &[u32]) -> Cells {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colours[v], v));
    let mut cells: Cells = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(c) if colours[c[0]] == colours[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    cells
}

/// A canonical labelling: `lab[v]` is the new index of vertex `v`.
/// Relabelled graphs of isomorphic (colour-preserving) inputs are equal.
pub fn canonical_labeling(g: &Graph, colours: &[u32]) -> Vec<usize> {
    let n = g.order();
    assert_eq!(colours.len(), n);
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let start = refine(g, initial_cells(n, colours));
    search.explore(start, &mut Vec::new());
    let leaf = search.best.or(search.first).expect("search reaches a leaf");
    leaf.lab
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g, &vec![0; g.order()]);
    CanonicalForm(encode_graph6(&g.relabel(&lab)))
}

/// Canonical form of a vertex-coloured graph; isomorphisms must preserve colours.
pub fn canonical_form_coloured(g: &Graph, colours: &[u32]) -> CanonicalForm {
    let lab = canonical_labeling(g, colours);
    let mut sorted = colours.to_vec();
    sorted.sort_unstable();
    let mut s = encode_graph6(&g.relabel(&lab));
    s.push('|');
    let mut i = 0;
    while i < sorted.len() {
        let j = sorted[i..].iter().take_while(|&&c| c == sorted[i]).count();
        s.push_str(&format!("{}x{}", sorted[i], j));
        i += j;
        if i < sorted.len() {
            s.push(',');
        }
    }
    CanonicalForm(s)
}
