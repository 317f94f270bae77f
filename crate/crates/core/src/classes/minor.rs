//! Minor, topological-minor and subgraph containment by exhaustive search.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

use crate::graph::{canonical_form, CanonicalForm, Graph, VertexSet};

/// An injective edge-preserving map `m → h` (a subgraph embedding), if any.
pub fn find_subgraph_embedding(m: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = m.order();
    if n > h.order() || m.size() > h.size() {
        return None;
    }
    // Place high-degree vertices first, then keep the placed part connected where possible.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        let frontier = m.set_neighbours(placed);
        let pool = if frontier.is_empty() {
            m.vertices() - placed
        } else {
            frontier
        };
        let v = pool
            .iter()
            .max_by_key(|&v| ((m.neighbours(v) & placed).len(), m.degree(v), usize::MAX - v))
            .unwrap();
        order.push(v);
        placed.insert(v);
    }
    let mut map = vec![usize::MAX; n];
    fn rec(
        m: &Graph,
        h: &Graph,
        order: &[usize],
        i: usize,
        map: &mut [usize],
        used: VertexSet,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let mut cand = h.vertices() - used;
        for w in m.neighbours(v) {
            if map[w] != usize::MAX {
                cand &= h.neighbours(map[w]);
            }
        }
        for x in cand {
            if h.degree(x) < m.degree(v) {
                continue;
            }
            map[v] = x;
            let mut u = used;
            u.insert(x);
            if rec(m, h, order, i + 1, map, u) {
                return true;
            }
        }
        map[v] = usize::MAX;
        false
    }
    rec(m, h, &order, 0, &mut map, VertexSet::EMPTY).then_some(map)
}

pub fn is_subgraph(m: &Graph, h: &Graph) -> bool {
    find_subgraph_embedding(m, h).is_some()
}

static MINOR_CACHE: Mutex<Option<HashMap<(CanonicalForm, CanonicalForm), bool>>> = Mutex::new(None);

/// Whether `m` is a minor of `g`.
///
/// Every minor is a subgraph of some contraction of `g`, so the search walks
/// the contractions of `g` (deduplicated up to isomorphism) and tests for a
/// subgraph embedding of `m` at each one.
pub fn has_minor(g: &Graph, m: &Graph) -> bool {
    if m.order() == 0 {
        return true;
    }
    if g.order() < m.order() || g.size() < m.size() {
        return false;
    }
    let key = (canonical_form(g), canonical_form(m));
    if let Some(&hit) = MINOR_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .get(&key)
    {
        return hit;
    }
    let answer = minor_search(g, m);
    MINOR_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(key, answer);
    answer
}

fn minor_search(g: &Graph, m: &Graph) -> bool {
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut stack = vec![g.clone()];
    seen.insert(canonical_form(g));
    while let Some(h) = stack.pop() {
        if is_subgraph(m, &h) {
            return true;
        }
        if h.order() == m.order() {
            continue;
        }
        for (u, v) in h.edges() {
            let c = h.contract_edge(u, v).expect("edge of h");
            if c.size() < m.size() {
                continue;
            }
            if seen.insert(canonical_form(&c)) {
                stack.push(c);
            }
        }
    }
    false
}

/// A topological model of `m` in `g`: branch vertices and one path per edge of `m`
/// (listed in the order of `m.edges()`), internally disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologicalEmbedding {
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl TopologicalEmbedding {
    /// Structural check of the model against `m` and `g`.
    pub fn verify(&self, m: &Graph, g: &Graph) -> Result<(), String> {
        if self.branch.len() != m.order() {
            return Err("one branch vertex per pattern vertex required".into());
        }
        let branch: VertexSet = self.branch.iter().copied().collect();
        if branch.len() != m.order() {
            return Err("branch vertices are not distinct".into());
        }
        let edges = m.edges();
        if self.paths.len() != edges.len() {
            return Err("one path per pattern edge required".into());
        }
        let mut interior = VertexSet::EMPTY;
        for (&(a, b), p) in edges.iter().zip(&self.paths) {
            if p.first() != Some(&self.branch[a]) || p.last() != Some(&self.branch[b]) {
                return Err(format!("path for {{{a}, {b}}} has wrong endpoints"));
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return Err(format!("path for {{{a}, {b}}} uses a non-edge"));
            }
            let inner: VertexSet = p[1..p.len() - 1].iter().copied().collect();
            if inner.len() + 2 != p.len() || !(inner & (interior | branch)).is_empty() {
                return Err(format!("path for {{{a}, {b}}} is not internally disjoint"));
            }
            interior |= inner;
        }
        Ok(())
    }
}

pub fn find_topological_minor(g: &Graph, m: &Graph) -> Option<TopologicalEmbedding> {
    let n = m.order();
    if n > g.order() || m.size() > g.size() {
        return None;
    }
    let edges = m.edges();
    let mut branch = vec![usize::MAX; n];
    let mut paths = Vec::new();
    fn place(
        g: &Graph,
        m: &Graph,
        edges: &[(usize, usize)],
        v: usize,
        branch: &mut Vec<usize>,
        used: VertexSet,
        paths: &mut Vec<Vec<usize>>,
    ) -> bool {
        if v == m.order() {
            return route(g, edges, 0, branch, used, VertexSet::EMPTY, paths);
        }
        for x in g.vertices() - used {
            if g.degree(x) < m.degree(v) {
                continue;
            }
            branch[v] = x;
            let mut u = used;
            u.insert(x);
            if place(g, m, edges, v + 1, branch, u, paths) {
                return true;
            }
        }
        false
    }
    fn route(
        g: &Graph,
        edges: &[(usize, usize)],
        i: usize,
        branch: &[usize],
        branch_set: VertexSet,
        interior: VertexSet,
        paths: &mut Vec<Vec<usize>>,
    ) -> bool {
        if i == edges.len() {
            return true;
        }
        let (a, b) = edges[i];
        let (s, t) = (branch[a], branch[b]);
        let free = g.vertices() - branch_set - interior;
        let mut path = vec![s];
        fn extend(
            g: &Graph,
            edges: &[(usize, usize)],
            i: usize,
            branch: &[usize],
            branch_set: VertexSet,
            interior: VertexSet,
            free: VertexSet,
            t: usize,
            path: &mut Vec<usize>,
            paths: &mut Vec<Vec<usize>>,
        ) -> bool {
            let last = *path.last().unwrap();
            if g.has_edge(last, t) {
                path.push(t);
                let inner: VertexSet = path[1..path.len() - 1].iter().copied().collect();
                paths.push(path.clone());
                if route(g, edges, i + 1, branch, branch_set, interior | inner, paths) {
                    return true;
                }
                paths.pop();
                path.pop();
            }
            let on_path: VertexSet = path.iter().copied().collect();
            for x in g.neighbours(last) & (free - on_path) {
                // Only continue through vertices from which t is still reachable.
                let reach = g.reach(x, (free - on_path) | VertexSet::singleton(t));
                if !reach.contains(t) {
                    continue;
                }
                path.push(x);
                if extend(g, edges, i, branch, branch_set, interior, free, t, path, paths) {
                    return true;
                }
                path.pop();
            }
            false
        }
        extend(
            g, edges, i, branch, branch_set, interior, free, t, &mut path, paths,
        )
    }
    let found = {
        let mut b = std::mem::take(&mut branch);
        let ok = place(g, m, &edges, 0, &mut b, VertexSet::EMPTY, &mut paths);
        branch = b;
        ok
    };
    found.then_some(TopologicalEmbedding { branch, paths })
}

pub fn has_topological_minor(g: &Graph, m: &Graph) -> bool {
    find_topological_minor(g, m).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn minor_examples() {
        assert!(has_minor(&complete(4), &complete(3)));
        assert!(!has_minor(&complete(4), &complete(5)));
        assert!(has_minor(&petersen(), &complete(5)));
        assert!(has_minor(&petersen(), &complete_bipartite(3, 3)));
        assert!(!has_minor(&cycle(6), &complete(4)));
        assert!(has_minor(&wagner(), &complete_bipartite(3, 3)));
        assert!(!has_minor(&wagner(), &complete(5)));
        assert!(has_minor(&cycle(7), &cycle(4)));
        assert!(has_minor(&disjoint_copies(&cycle(3), 2), &disjoint_copies(&complete(2), 2)));
        assert!(!has_minor(&cycle(6), &disjoint_copies(&cycle(3), 2)));
    }

    #[test]
    fn topological_examples() {
        assert!(has_topological_minor(&complete(5), &complete(5)));
        let km = find_topological_minor(&complete_bipartite(3, 3), &complete(4)).unwrap();
        km.verify(&complete(4), &complete_bipartite(3, 3)).unwrap();
        // Petersen has K5 as a minor but not as a topological minor (it is cubic).
        assert!(!has_topological_minor(&petersen(), &complete(5)));
        assert!(has_topological_minor(&cycle(6), &cycle(3)));
        assert!(!has_topological_minor(&path(5), &star(3)));
    }

    #[test]
    fn subgraph_examples() {
        assert!(is_subgraph(&cycle(4), &complete(4)));
        assert!(!is_subgraph(&complete(3), &cycle(4)));
        assert!(is_subgraph(&Graph::new(3), &complete(3)));
        assert!(!is_subgraph(&Graph::new(4), &complete(3)));
    }
}
