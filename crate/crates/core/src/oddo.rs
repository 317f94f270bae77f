//! Parity classification of homomorphisms and (weak) oddomorphisms.
//!
//! A vertex `a` of `F` is odd (even) with respect to `φ: F → G` when `a` has an
//! odd (even) number of neighbours in the fibre of every neighbour of `φ(a)`.
//! If `φ(a)` has no neighbours the condition is vacuous; such vertices are
//! classified as odd, which makes the identity map on any graph (including
//! graphs with isolated vertices) an oddomorphism.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::F2Matrix;
use crate::graph::{Edge, Graph, VertexSet};
use crate::hom::{enumerate_surjective_homs, Homomorphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
    Undefined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub vertex_parity: Vec<Parity>,
    pub fibre_odd_count: Vec<usize>,
}

impl ParityReport {
    pub fn is_oddomorphism(&self) -> bool {
        !self.vertex_parity.contains(&Parity::Undefined)
            && self.fibre_odd_count.iter().all(|c| c % 2 == 1)
    }

    pub fn odd_vertices(&self) -> VertexSet {
        self.vertex_parity
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == Parity::Odd)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_odd(&self, v: usize) -> bool {
        self.vertex_parity[v] == Parity::Odd
    }
}

pub fn classify_parity(phi: &Homomorphism) -> ParityReport {
    let (f, g) = (&phi.source, &phi.target);
    let fibres: Vec<VertexSet> = (0..g.order()).map(|x| phi.fibre(x)).collect();
    let vertex_parity: Vec<Parity> = (0..f.order())
        .map(|a| {
            let mut seen: Option<bool> = None;
            for x in g.neighbours(phi.map[a]) {
                let odd = (f.neighbours(a) & fibres[x]).len() % 2 == 1;
                match seen {
                    None => seen = Some(odd),
                    Some(s) if s != odd => return Parity::Undefined,
                    Some(_) => {}
                }
            }
            match seen {
                Some(false) => Parity::Even,
                _ => Parity::Odd,
            }
        })
        .collect();
    let mut fibre_odd_count = vec![0; g.order()];
    for (a, p) in vertex_parity.iter().enumerate() {
        if *p == Parity::Odd {
            fibre_odd_count[phi.map[a]] += 1;
        }
    }
    ParityReport {
        vertex_parity,
        fibre_odd_count,
    }
}

/// The subgraph `F'` of a weak oddomorphism, in the vertex numbering of `F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakSubgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl WeakSubgraph {
    /// `F'` as a graph on `0..vertices.len()` (in the order of `vertices`).
    pub fn realize(&self, f_order: usize) -> Result<Graph> {
        let mut pos = vec![usize::MAX; f_order];
        for (i, &v) in self.vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = Graph::try_new(self.vertices.len())?;
        for &(u, v) in &self.edges {
            if pos[u] == usize::MAX || pos[v] == usize::MAX {
                return Err(Error::InvalidHomomorphism(format!(
                    "weak subgraph edge {{{u}, {v}}} leaves its vertex set"
                )));
            }
            h.add_edge(pos[u], pos[v])?;
        }
        Ok(h)
    }

    /// The restriction of `phi` to this subgraph.
    pub fn restrict(&self, phi: &Homomorphism) -> Result<Homomorphism> {
        for &(u, v) in &self.edges {
            if !phi.source.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        let h = self.realize(phi.source.order())?;
        let map = self.vertices.iter().map(|&v| phi.map[v]).collect();
        Homomorphism::new(h, phi.target.clone(), map)
    }
}

/// A homomorphism together with the parity data proving it is a (weak) oddomorphism.
///
/// For a weak certificate the report describes the restriction to `weak_subgraph`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddoCertificate {
    #[serde(flatten)]
    pub hom: Homomorphism,
    pub report: ParityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weak_subgraph: Option<WeakSubgraph>,
}

impl OddoCertificate {
    pub fn is_plain(&self) -> bool {
        self.weak_subgraph.is_none()
    }

    /// Re-checks the certificate from scratch.
    pub fn verify(&self) -> Result<()> {
        let phi = Homomorphism::new(
            self.hom.source.clone(),
            self.hom.target.clone(),
            self.hom.map.clone(),
        )?;
        let certified = match &self.weak_subgraph {
            None => phi,
            Some(w) => w.restrict(&phi)?,
        };
        let report = classify_parity(&certified);
        if report != self.report {
            return Err(Error::BrokenReduction("stored parity report is stale".into()));
        }
        if !report.is_oddomorphism() {
            return Err(Error::BrokenReduction("map is not an oddomorphism".into()));
        }
        Ok(())
    }

    pub fn source(&self) -> &Graph {
        &self.hom.source
    }

    pub fn target(&self) -> &Graph {
        &self.hom.target
    }
}

/// Checks the oddomorphism conditions; the certificate carries the parity report either way.
pub fn verify_oddomorphism(phi: &Homomorphism) -> (bool, OddoCertificate) {
    let report = classify_parity(phi);
    let ok = report.is_oddomorphism();
    (
        ok,
        OddoCertificate {
            hom: phi.clone(),
            report,
            weak_subgraph: None,
        },
    )
}

/// Plain certificate for `phi`, if it is an oddomorphism.
pub fn certify(phi: &Homomorphism) -> Option<OddoCertificate> {
    let (ok, cert) = verify_oddomorphism(phi);
    ok.then_some(cert)
}

/// Decides whether some subgraph of the source restricts `phi` to an oddomorphism.
///
/// Vertices over isolated target vertices are odd by convention, so one of
/// them is kept per such fibre. The remaining conditions are linear over GF(2)
/// in one variable per source edge (is it kept) and one per source vertex (is
/// it odd): for each vertex `a` and each neighbour `x` of `φ(a)`, the kept
/// edges from `a` into the fibre of `x` sum to the parity of `a`, and each
/// fibre has odd parity sum. Vertices left without kept edges are even and
/// may stay in `F'`.
pub fn verify_weak_oddomorphism(phi: &Homomorphism) -> Option<OddoCertificate> {
    if let Some(cert) = certify(phi) {
        return Some(OddoCertificate {
            weak_subgraph: Some(WeakSubgraph {
                vertices: (0..phi.source.order()).collect(),
                edges: phi.source.edges(),
            }),
            ..cert
        });
    }
    let (f, g) = (&phi.source, &phi.target);
    if !phi.is_surjective() {
        return None;
    }
    let edges = f.edges();
    let ne = edges.len();
    let nf = f.order();
    let mut edge_index = vec![vec![usize::MAX; nf]; nf];
    for (k, &(u, v)) in edges.iter().enumerate() {
        edge_index[u][v] = k;
        edge_index[v][u] = k;
    }
    let fibres: Vec<VertexSet> = (0..g.order()).map(|x| phi.fibre(x)).collect();
    let mut rows: Vec<(Vec<usize>, bool)> = Vec::new();
    for a in 0..nf {
        for x in g.neighbours(phi.map[a]) {
            let mut vars: Vec<usize> = (f.neighbours(a) & fibres[x])
                .iter()
                .map(|b| edge_index[a][b])
                .collect();
            vars.push(ne + a);
            rows.push((vars, false));
        }
    }
    for x in 0..g.order() {
        if g.degree(x) > 0 {
            rows.push((fibres[x].iter().map(|a| ne + a).collect(), true));
        }
    }
    let mut m = F2Matrix::zeros(rows.len(), ne + nf);
    let mut rhs = Vec::with_capacity(rows.len());
    for (i, (vars, b)) in rows.iter().enumerate() {
        for &j in vars {
            m.flip(i, j);
        }
        rhs.push(*b);
    }
    let sol = m.solve(&rhs)?;
    let kept_edges: Vec<Edge> = (0..ne).filter(|&k| sol[k]).map(|k| edges[k]).collect();
    let vertices: Vec<usize> = (0..nf)
        .filter(|&a| {
            let x = phi.map[a];
            g.degree(x) > 0 || fibres[x].first() == Some(a)
        })
        .collect();
    let weak = WeakSubgraph {
        vertices,
        edges: kept_edges,
    };
    let restricted = weak.restrict(phi).ok()?;
    let report = classify_parity(&restricted);
    debug_assert!(report.is_oddomorphism());
    report.is_oddomorphism().then(|| OddoCertificate {
        hom: phi.clone(),
        report,
        weak_subgraph: Some(weak),
    })
}

/// Brute-force weak check over all edge subsets and vertex subsets. Test oracle only.
pub fn weak_oddomorphism_brute(phi: &Homomorphism) -> bool {
    let f = &phi.source;
    let edges = f.edges();
    for emask in 0u64..1 << edges.len() {
        let kept: Vec<Edge> = (0..edges.len())
            .filter(|&k| emask >> k & 1 == 1)
            .map(|k| edges[k])
            .collect();
        let touched: VertexSet = kept.iter().flat_map(|&(u, v)| [u, v]).collect();
        let optional = f.vertices() - touched;
        let opt: Vec<usize> = optional.to_vec();
        for vmask in 0u64..1 << opt.len() {
            let mut verts = touched;
            for (i, &v) in opt.iter().enumerate() {
                if vmask >> i & 1 == 1 {
                    verts.insert(v);
                }
            }
            let w = WeakSubgraph {
                vertices: verts.to_vec(),
                edges: kept.clone(),
            };
            let r = w.restrict(phi).expect("subgraph of the source");
            if classify_parity(&r).is_oddomorphism() {
                return true;
            }
        }
    }
    false
}

/// First (weak) oddomorphism `f → g` in lexicographic order of the map.
pub fn search_oddomorphism(
    f: &Graph,
    g: &Graph,
    weak: bool,
    budget: u128,
) -> Result<Option<OddoCertificate>> {
    for map in enumerate_surjective_homs(f, g, budget)? {
        let phi = Homomorphism {
            source: f.clone(),
            target: g.clone(),
            map,
        };
        let found = if weak {
            verify_weak_oddomorphism(&phi)
        } else {
            certify(&phi)
        };
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Every plain oddomorphism `f → g`, in lexicographic order of the map.
pub fn all_oddomorphisms(f: &Graph, g: &Graph, budget: u128) -> Result<Vec<OddoCertificate>> {
    let mut out = Vec::new();
    for map in enumerate_surjective_homs(f, g, budget)? {
        let phi = Homomorphism {
            source: f.clone(),
            target: g.clone(),
            map,
        };
        if let Some(c) = certify(&phi) {
            out.push(c);
        }
    }
    Ok(out)
}

/// A subgraph of the target: vertex set plus edges inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetSubgraph {
    pub vertices: VertexSet,
    pub edges: Vec<Edge>,
}

impl TargetSubgraph {
    pub fn induced(g: &Graph, vertices: VertexSet) -> TargetSubgraph {
        let edges = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| vertices.contains(u) && vertices.contains(v))
            .collect();
        TargetSubgraph { vertices, edges }
    }

    pub fn whole(g: &Graph) -> TargetSubgraph {
        TargetSubgraph::induced(g, g.vertices())
    }
}

/// Restriction to the preimage of a target subgraph `G'`: the source keeps the
/// vertices mapped into `V(G')` and the edges mapped onto `E(G')`; both sides are
/// renumbered in increasing order of their original indices.
///
/// The result is plain whenever that restriction is an oddomorphism; this can
/// fail only when `G'` has vertices that were not isolated in `G`, in which
/// case a weak certificate is returned.
pub fn restrict_oddomorphism(cert: &OddoCertificate, sub: &TargetSubgraph) -> Result<OddoCertificate> {
    let phi = &cert.hom;
    let (f, g) = (&phi.source, &phi.target);
    g.check_set(sub.vertices)?;
    let gmap = sub.vertices.to_vec();
    let mut gpos = vec![usize::MAX; g.order()];
    for (i, &x) in gmap.iter().enumerate() {
        gpos[x] = i;
    }
    let mut g2 = Graph::new(gmap.len());
    for &(x, y) in &sub.edges {
        if !g.has_edge(x, y) {
            return Err(Error::NotAnEdge(x, y));
        }
        if gpos[x] == usize::MAX || gpos[y] == usize::MAX {
            return Err(Error::VertexOutOfRange {
                vertex: if gpos[x] == usize::MAX { x } else { y },
                order: g.order(),
            });
        }
        g2.add_edge(gpos[x], gpos[y])?;
    }
    let fverts: VertexSet = (0..f.order())
        .filter(|&a| sub.vertices.contains(phi.map[a]))
        .collect();
    let fmap = fverts.to_vec();
    let mut fpos = vec![usize::MAX; f.order()];
    for (i, &a) in fmap.iter().enumerate() {
        fpos[a] = i;
    }
    let mut f2 = Graph::new(fmap.len());
    for (a, b) in f.edges() {
        if fverts.contains(a) && fverts.contains(b) && g2.has_edge(gpos[phi.map[a]], gpos[phi.map[b]]) {
            f2.add_edge(fpos[a], fpos[b])?;
        }
    }
    let map = fmap.iter().map(|&a| gpos[phi.map[a]]).collect();
    let restricted = Homomorphism::new(f2, g2, map)?;
    if cert.is_plain() {
        if let Some(c) = certify(&restricted) {
            return Ok(c);
        }
    }
    verify_weak_oddomorphism(&restricted).ok_or_else(|| {
        Error::BrokenReduction("restriction is not even a weak oddomorphism".into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_graphs_upto;
    use crate::graph::named::*;
    use crate::hom::{enumerate_homs, DEFAULT_HOM_BUDGET};

    fn hom(f: Graph, g: Graph, map: Vec<usize>) -> Homomorphism {
        Homomorphism::new(f, g, map).unwrap()
    }

    #[test]
    fn identity_is_oddomorphism() {
        for g in [petersen(), complete(1), path(5), Graph::new(3), star(3)] {
            let id = Homomorphism::identity(&g);
            let r = classify_parity(&id);
            assert!(r.vertex_parity.iter().all(|&p| p == Parity::Odd));
            assert!(r.fibre_odd_count.iter().all(|&c| c == 1));
            assert!(verify_oddomorphism(&id).0);
        }
    }

    #[test]
    fn c4_onto_k2_is_even() {
        let phi = hom(cycle(4), complete(2), vec![0, 1, 0, 1]);
        let r = classify_parity(&phi);
        assert!(r.vertex_parity.iter().all(|&p| p == Parity::Even));
        assert_eq!(r.fibre_odd_count, vec![0, 0]);
        assert!(!verify_oddomorphism(&phi).0);
    }

    #[test]
    fn hexagon_double_cover() {
        let phi = hom(cycle(6), cycle(3), vec![0, 1, 2, 0, 1, 2]);
        let r = classify_parity(&phi);
        assert!(r.vertex_parity.iter().all(|&p| p == Parity::Odd));
        assert_eq!(r.fibre_odd_count, vec![2, 2, 2]);
        assert!(!verify_oddomorphism(&phi).0);
        assert!(verify_weak_oddomorphism(&phi).is_none());
        assert!(!weak_oddomorphism_brute(&phi));
        assert!(search_oddomorphism(&cycle(6), &cycle(3), true, DEFAULT_HOM_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn plain_is_weak_with_full_subgraph() {
        let id = Homomorphism::identity(&cycle(5));
        let c = verify_weak_oddomorphism(&id).unwrap();
        let w = c.weak_subgraph.as_ref().unwrap();
        assert_eq!(w.vertices.len(), 5);
        assert_eq!(w.edges.len(), 5);
        c.verify().unwrap();
    }

    #[test]
    fn isolated_fibre_keeps_one_vertex() {
        let phi = hom(Graph::new(2), Graph::new(1), vec![0, 0]);
        assert!(!verify_oddomorphism(&phi).0);
        let c = verify_weak_oddomorphism(&phi).unwrap();
        assert_eq!(c.weak_subgraph.as_ref().unwrap().vertices, vec![0]);
        c.verify().unwrap();
        let with_even = hom(cycle(3).disjoint_union(&complete(1)), cycle(3), vec![0, 1, 2, 0]);
        assert!(verify_oddomorphism(&with_even).0);
    }

    #[test]
    fn weak_check_matches_brute_force() {
        let sources = all_graphs_upto(5);
        let targets: Vec<Graph> = all_graphs_upto(3);
        for f in &sources {
            if f.size() > 7 {
                continue;
            }
            for g in &targets {
                for map in enumerate_homs(f, g, DEFAULT_HOM_BUDGET).unwrap() {
                    let phi = hom(f.clone(), g.clone(), map);
                    let fast = verify_weak_oddomorphism(&phi);
                    if let Some(c) = &fast {
                        c.verify().unwrap();
                    }
                    assert_eq!(fast.is_some(), weak_oddomorphism_brute(&phi), "{phi:?}");
                }
            }
        }
    }

    #[test]
    fn search_examples() {
        let k5 = complete(5);
        let c = search_oddomorphism(&k5, &k5, false, DEFAULT_HOM_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(c.hom.map, vec![0, 1, 2, 3, 4]);
        c.verify().unwrap();
    }

    #[test]
    fn restriction() {
        let p = petersen();
        let id = certify(&Homomorphism::identity(&p)).unwrap();
        let same = restrict_oddomorphism(&id, &TargetSubgraph::whole(&p)).unwrap();
        assert_eq!(same, id);
        let x: VertexSet = [0, 1, 2, 5, 7].into_iter().collect();
        let r = restrict_oddomorphism(&id, &TargetSubgraph::induced(&p, x)).unwrap();
        assert!(r.is_plain());
        assert_eq!(r.hom.map, vec![0, 1, 2, 3, 4]);
        assert_eq!(r.hom.source, p.induced(x).0);
        r.verify().unwrap();
    }
}
