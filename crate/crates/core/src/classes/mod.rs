//! Graph-class predicates, deletion and elimination distance, and the
//! explicit witness graphs for the genus and Hadwiger-type separations.

mod closure;
mod minor;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

pub use closure::{
    in_clique_sum_closure, minimal_excluded_minors, minimal_excluded_subgraphs, CliqueSumClosure,
};
pub use minor::{
    find_subgraph_embedding, find_topological_minor, has_minor, has_topological_minor,
    is_subgraph, TopologicalEmbedding,
};

use crate::error::{Error, Result};
use crate::graph::named::{complete, complete_bipartite};
use crate::graph::{canonical_form, exact_treewidth, CanonicalForm, Graph, VertexSet, MAX_ORDER};
use crate::util::subsets_up_to;

/// A named graph class, addressable as `name` or `name:param`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ClassPredicate {
    /// No K₅ and no K₃,₃ minor.
    Planar,
    /// Excludes every disjoint union of exactly `k` copies of K₅ / K₃,₃ as a minor.
    PK(usize),
    MaxDegree(usize),
    /// Closure of maximum-degree-3 graphs under gluing triangles onto edges.
    D3Star,
    TreewidthAtMost(usize),
    Edgeless,
    Forests,
    /// No K₄ minor and no K₂,ₕ minor.
    K2hFree(usize),
    /// Only the graph without vertices.
    Null,
}

impl fmt::Display for ClassPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassPredicate::Planar => write!(f, "planar"),
            ClassPredicate::PK(k) => write!(f, "p_k:{k}"),
            ClassPredicate::MaxDegree(d) => write!(f, "maxdeg:{d}"),
            ClassPredicate::D3Star => write!(f, "d3star"),
            ClassPredicate::TreewidthAtMost(k) => write!(f, "tw_le:{k}"),
            ClassPredicate::Edgeless => write!(f, "edgeless"),
            ClassPredicate::Forests => write!(f, "forests"),
            ClassPredicate::K2hFree(h) => write!(f, "k2h_free:{h}"),
            ClassPredicate::Null => write!(f, "null"),
        }
    }
}

impl FromStr for ClassPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClassPredicate> {
        let unknown = || Error::UnknownPredicate(s.to_string());
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p.parse::<usize>().map_err(|_| unknown())?)),
            None => (s, None),
        };
        let p = match (name, param) {
            ("planar", None) => ClassPredicate::Planar,
            ("p_k", Some(k)) if k >= 1 => ClassPredicate::PK(k),
            ("maxdeg", Some(d)) => ClassPredicate::MaxDegree(d),
            ("d3star", None) => ClassPredicate::D3Star,
            ("tw_le", Some(k)) => ClassPredicate::TreewidthAtMost(k),
            ("edgeless", None) => ClassPredicate::Edgeless,
            ("forests", None) => ClassPredicate::Forests,
            ("k2h_free", Some(h)) => ClassPredicate::K2hFree(h),
            ("null", None) => ClassPredicate::Null,
            _ => return Err(unknown()),
        };
        Ok(p)
    }
}

impl TryFrom<String> for ClassPredicate {
    type Error = Error;
    fn try_from(s: String) -> Result<ClassPredicate> {
        s.parse()
    }
}

impl From<ClassPredicate> for String {
    fn from(p: ClassPredicate) -> String {
        p.to_string()
    }
}

impl ClassPredicate {
    pub fn contains(&self, g: &Graph) -> Result<bool> {
        class_member(g, *self)
    }
}

pub fn is_planar(g: &Graph) -> bool {
    let (n, m) = (g.order(), g.size());
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    // Components are tested separately to keep the minor searches small.
    let comps = g.components();
    if comps.len() > 1 {
        return comps.into_iter().all(|c| is_planar(&g.induced(c).0));
    }
    !has_minor(g, &complete(5)) && !has_minor(g, &complete_bipartite(3, 3))
}

/// All `k`-Kuratowski graphs: `a` copies of K₅ and `k - a` copies of K₃,₃.
pub fn kuratowski_graphs(k: usize) -> Vec<Graph> {
    (0..=k)
        .map(|a| {
            let mut g = Graph::new(0);
            for _ in 0..a {
                g = g.disjoint_union(&complete(5));
            }
            for _ in a..k {
                g = g.disjoint_union(&complete_bipartite(3, 3));
            }
            g
        })
        .collect()
}

fn in_p_k(g: &Graph, k: usize) -> bool {
    if g.order() < 5 * k {
        return true;
    }
    kuratowski_graphs(k).iter().all(|m| !has_minor(g, m))
}

/// Membership in the closure of maximum-degree-3 graphs under gluing triangles
/// onto edges. Such graphs are exactly those with a vertex set `R` whose torso
/// has maximum degree at most 3, such that every component `C` of `G - R`
/// attaches to at most two vertices and `G[C ∪ N(C)]` plus an edge on `N(C)`
/// has treewidth at most 2.
pub fn in_d3_star(g: &Graph) -> bool {
    let n = g.order();
    if n > 20 {
        return false;
    }
    if g.max_degree() <= 3 {
        return true;
    }
    let all = g.vertices();
    (0..1u128 << n).any(|r| {
        let r = VertexSet(r);
        let comps = g.components_within(all - r);
        let attach_ok = comps.iter().all(|&c| {
            let nb = g.set_neighbours(c);
            nb.len() <= 2 && {
                let piece = g.with_clique(nb).induced(c | nb).0;
                exact_treewidth(&piece).map(|(w, _)| w <= 2).unwrap_or(false)
            }
        });
        attach_ok && g.torso(r).map(|t| t.max_degree() <= 3).unwrap_or(false)
    })
}

pub fn class_member(g: &Graph, p: ClassPredicate) -> Result<bool> {
    Ok(match p {
        ClassPredicate::Planar => is_planar(g),
        ClassPredicate::PK(k) => in_p_k(g, k),
        ClassPredicate::MaxDegree(d) => g.max_degree() <= d,
        ClassPredicate::D3Star => {
            if g.order() > 20 {
                return Err(Error::BudgetExceeded(format!(
                    "d3star membership on {} vertices",
                    g.order()
                )));
            }
            in_d3_star(g)
        }
        ClassPredicate::TreewidthAtMost(k) => exact_treewidth(g)?.0 <= k,
        ClassPredicate::Edgeless => g.size() == 0,
        ClassPredicate::Forests => g.is_forest(),
        ClassPredicate::K2hFree(h) => {
            !has_minor(g, &complete(4)) && !has_minor(g, &complete_bipartite(2, h))
        }
        ClassPredicate::Null => g.order() == 0,
    })
}

/// Fewest vertex deletions that land in `p`.
pub fn deletion_distance(g: &Graph, p: ClassPredicate) -> Result<usize> {
    for x in subsets_up_to(g.order(), g.order()) {
        if class_member(&g.remove_vertices(x).0, p)? {
            return Ok(x.len());
        }
    }
    Err(Error::Precondition(format!(
        "no vertex deletion reaches the class {p}"
    )))
}

static ED_CACHE: Mutex<Option<HashMap<(CanonicalForm, ClassPredicate), usize>>> = Mutex::new(None);

/// Elimination distance: 0 inside the class, the maximum over components for
/// disconnected graphs, and one more than the best single deletion otherwise.
pub fn elimination_distance(g: &Graph, p: ClassPredicate) -> Result<usize> {
    if class_member(g, p)? {
        return Ok(0);
    }
    if g.order() == 0 {
        return Err(Error::Precondition(format!(
            "the null graph is not in {p}, elimination distance undefined"
        )));
    }
    let key = (canonical_form(g), p);
    if let Some(&d) = ED_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .get(&key)
    {
        return Ok(d);
    }
    let comps = g.components();
    let d = if comps.len() > 1 {
        let mut best = 0;
        for c in comps {
            best = best.max(elimination_distance(&g.induced(c).0, p)?);
        }
        best
    } else {
        let mut best = usize::MAX;
        for v in 0..g.order() {
            let h = g.remove_vertices(VertexSet::singleton(v)).0;
            best = best.min(1 + elimination_distance(&h, p)?);
        }
        best
    };
    ED_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(key, d);
    Ok(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Genus,
    Hadwiger,
}

impl FromStr for WitnessKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<WitnessKind> {
        match s {
            "genus" => Ok(WitnessKind::Genus),
            "hadwiger" => Ok(WitnessKind::Hadwiger),
            _ => Err(Error::UnknownPredicate(s.to_string())),
        }
    }
}

/// The separating graphs for bounded genus (`k + 1` copies of K₅ joined
/// through a fresh vertex) and bounded Hadwiger-type parameters (`2k + 1`
/// copies of K₅ plus `k + 1` universal vertices).
pub fn build_witness(kind: WitnessKind, k: usize) -> Result<Graph> {
    let order = match kind {
        WitnessKind::Genus => 5 * (k + 1) + 1,
        WitnessKind::Hadwiger => 5 * (2 * k + 1) + k + 1,
    };
    if order > MAX_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "witness would have {order} vertices (bound {MAX_ORDER})"
        )));
    }
    let k5 = complete(5);
    match kind {
        WitnessKind::Genus => {
            let mut g = Graph::new(0);
            for _ in 0..=k {
                g = g.disjoint_union(&k5);
            }
            let x = g.add_vertex();
            for i in 0..=k {
                g.add_edge(5 * i, x)?;
            }
            Ok(g)
        }
        WitnessKind::Hadwiger => {
            let mut g = Graph::new(0);
            for _ in 0..2 * k + 1 {
                g = g.disjoint_union(&k5);
            }
            for _ in 0..=k {
                let u = g.add_vertex();
                for w in 0..u {
                    g.add_edge(u, w)?;
                }
            }
            if !g.is_k_connected(k + 1) {
                return Err(Error::BrokenReduction(
                    "Hadwiger witness is not (k+1)-connected".into(),
                ));
            }
            Ok(g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn predicate_names_round_trip() {
        for name in [
            "planar", "p_k:2", "maxdeg:3", "d3star", "tw_le:2", "edgeless", "forests",
            "k2h_free:3", "null",
        ] {
            let p: ClassPredicate = name.parse().unwrap();
            assert_eq!(p.to_string(), name);
        }
        assert!("genus".parse::<ClassPredicate>().is_err());
        assert!("maxdeg".parse::<ClassPredicate>().is_err());
        assert!("p_k:0".parse::<ClassPredicate>().is_err());
    }

    #[test]
    fn planarity() {
        assert!(!is_planar(&complete(5)));
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(!is_planar(&petersen()));
        assert!(is_planar(&cycle(9)));
        assert!(!is_planar(&wagner()));
    }

    #[test]
    fn p_k_membership() {
        let p2 = ClassPredicate::PK(2);
        assert!(class_member(&complete(5), p2).unwrap());
        let two = disjoint_copies(&complete(5), 2);
        assert!(!class_member(&two, p2).unwrap());
        assert!(!class_member(&complete(5), ClassPredicate::PK(1)).unwrap());
    }

    #[test]
    fn d3_star_membership() {
        assert!(in_d3_star(&complete(4)));
        assert!(!in_d3_star(&complete(5)));
        // A triangle glued onto every edge of K4 stays in the class.
        let mut g = complete(4);
        for (u, v) in complete(4).edges() {
            let x = g.add_vertex();
            g.add_edge(u, x).unwrap();
            g.add_edge(v, x).unwrap();
        }
        assert!(g.max_degree() > 3);
        assert!(in_d3_star(&g));
        assert!(!in_d3_star(&star(4).disjoint_union(&complete(5))));
    }

    #[test]
    fn distances() {
        let planar = ClassPredicate::Planar;
        assert_eq!(deletion_distance(&complete(5), planar).unwrap(), 1);
        assert_eq!(deletion_distance(&complete(3), ClassPredicate::Edgeless).unwrap(), 2);
        assert_eq!(deletion_distance(&complete(4), planar).unwrap(), 0);
        assert_eq!(deletion_distance(&cycle(5), ClassPredicate::Forests).unwrap(), 1);
        for n in 1..=5 {
            assert_eq!(elimination_distance(&complete(n), ClassPredicate::Null).unwrap(), n);
        }
        assert_eq!(elimination_distance(&path(4), ClassPredicate::Null).unwrap(), 3);
        assert_eq!(elimination_distance(&path(7), ClassPredicate::Null).unwrap(), 3);
        assert_eq!(elimination_distance(&cycle(5), ClassPredicate::Forests).unwrap(), 1);
        assert_eq!(elimination_distance(&path(4), ClassPredicate::Forests).unwrap(), 0);
    }

    #[test]
    fn witnesses() {
        let g0 = build_witness(WitnessKind::Genus, 0).unwrap();
        assert_eq!((g0.order(), g0.size()), (6, 11));
        let h0 = build_witness(WitnessKind::Hadwiger, 0).unwrap();
        assert_eq!(canonical_form(&h0), canonical_form(&complete(6)));
        for k in 0..=3 {
            let h = build_witness(WitnessKind::Hadwiger, k).unwrap();
            assert_eq!(h.order(), 5 * (2 * k + 1) + k + 1);
        }
        let g1 = build_witness(WitnessKind::Genus, 1).unwrap();
        assert!(!class_member(&g1, ClassPredicate::PK(2)).unwrap());
    }
}
