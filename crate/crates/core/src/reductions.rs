//! Constructive reductions of oddomorphisms: isolated-vertex and twin removal,
//! the cut-vertex and separator reductions, iterated clique-sum reduction and
//! topological models for trees.
//!
//! Every reduction re-verifies its output certificate from scratch before
//! returning it.

use std::collections::HashMap;

use serde::Serialize;

use crate::classes::{has_minor, TopologicalEmbedding};
use crate::error::{Error, Result};
use crate::gf2::F2Matrix;
use crate::graph::{Edge, Graph, VertexSet};
use crate::hom::Homomorphism;
use crate::oddo::{certify, restrict_oddomorphism, OddoCertificate, TargetSubgraph};
use crate::util::subsets_up_to;

fn require_plain(cert: &OddoCertificate) -> Result<()> {
    if !cert.is_plain() || !cert.report.is_oddomorphism() {
        return Err(Error::Precondition("a plain oddomorphism certificate is required".into()));
    }
    Ok(())
}

/// `phi` restricted to `F[keep]` (source renumbered in increasing order), same target.
fn restrict_source(phi: &Homomorphism, keep: VertexSet) -> (Homomorphism, Vec<usize>) {
    let (f, kept) = phi.source.induced(keep);
    let map = kept.iter().map(|&a| phi.map[a]).collect();
    (
        Homomorphism {
            source: f,
            target: phi.target.clone(),
            map,
        },
        kept,
    )
}

fn certify_or_broken(phi: &Homomorphism, what: &str) -> Result<OddoCertificate> {
    certify(phi).ok_or_else(|| Error::BrokenReduction(format!("{what} is not an oddomorphism")))
}

/// Drops an isolated source vertex whose image is not isolated (such a vertex is even).
pub fn remove_isolated(cert: &OddoCertificate, v: usize) -> Result<OddoCertificate> {
    require_plain(cert)?;
    let phi = &cert.hom;
    phi.source.check_vertex(v)?;
    if phi.source.degree(v) != 0 {
        return Err(Error::Precondition(format!("vertex {v} is not isolated")));
    }
    if phi.target.degree(phi.map[v]) == 0 {
        return Err(Error::Precondition(format!(
            "vertex {v} maps to an isolated vertex and counts as odd"
        )));
    }
    let (psi, _) = restrict_source(phi, phi.source.vertices() - VertexSet::singleton(v));
    certify_or_broken(&psi, "restriction to F - v")
}

/// Drops two twins `v ≠ w` with the same image and the same neighbourhood.
pub fn remove_twins(cert: &OddoCertificate, v: usize, w: usize) -> Result<OddoCertificate> {
    require_plain(cert)?;
    let phi = &cert.hom;
    phi.source.check_vertex(v)?;
    phi.source.check_vertex(w)?;
    if v == w || phi.map[v] != phi.map[w] || phi.source.neighbours(v) != phi.source.neighbours(w) {
        return Err(Error::Precondition(format!(
            "{v} and {w} are not distinct twins in one fibre"
        )));
    }
    let drop: VertexSet = [v, w].into_iter().collect();
    let (psi, _) = restrict_source(phi, phi.source.vertices() - drop);
    certify_or_broken(&psi, "restriction to F - {v, w}")
}

/// Result of reducing at a cut vertex `s`.
#[derive(Clone, Debug, Serialize)]
pub struct CutVertexReduction {
    /// Index of the chosen component among the components of `F - s` (ordered by least vertex).
    pub component_index: usize,
    pub component: Vec<usize>,
    /// Original indices of the vertices of the reduced source, in increasing order.
    pub kept: Vec<usize>,
    /// Certificate on `F[C_i ∪ {s}]`, renumbered along `kept`.
    pub cert: OddoCertificate,
    /// A φ-odd vertex outside `C_i ∪ {s}` in the fibre of `s`, named when `s`
    /// is odd for the reduced map but even for the original one.
    pub odd_partner: Option<usize>,
}

pub fn cut_vertex_reduce(cert: &OddoCertificate, s: usize) -> Result<CutVertexReduction> {
    require_plain(cert)?;
    let phi = &cert.hom;
    let (f, g) = (&phi.source, &phi.target);
    f.check_vertex(s)?;
    let comps = f.components_within(f.vertices() - VertexSet::singleton(s));
    if comps.len() < 2 {
        return Err(Error::Precondition(format!("F - {s} is connected")));
    }
    let rest = g.vertices() - VertexSet::singleton(phi.map[s]);
    if rest.is_empty() || !g.is_connected_within(rest) {
        return Err(Error::Precondition(format!(
            "G - {} is empty or disconnected",
            phi.map[s]
        )));
    }
    let odd = cert.report.odd_vertices();
    let i = comps
        .iter()
        .position(|&c| {
            rest.iter()
                .all(|x| (c & odd & phi.fibre(x)).len() % 2 == 1)
        })
        .ok_or_else(|| Error::BrokenReduction("no component carries every odd fibre".into()))?;
    let ci = comps[i];
    let (psi, kept) = restrict_source(phi, ci | VertexSet::singleton(s));
    let reduced = certify_or_broken(&psi, "restriction to C_i + s")?;
    for (local, &a) in kept.iter().enumerate() {
        if a != s && reduced.report.is_odd(local) != cert.report.is_odd(a) {
            return Err(Error::BrokenReduction(format!("parity of {a} changed")));
        }
    }
    let s_local = kept.iter().position(|&a| a == s).expect("s is kept");
    let odd_partner = if reduced.report.is_odd(s_local) && !cert.report.is_odd(s) {
        let outside = phi.fibre(phi.map[s]) & (odd - ci - VertexSet::singleton(s));
        Some(outside.first().ok_or_else(|| {
            Error::BrokenReduction("no odd partner for the cut vertex".into())
        })?)
    } else {
        None
    };
    Ok(CutVertexReduction {
        component_index: i,
        component: ci.to_vec(),
        kept,
        cert: reduced,
        odd_partner,
    })
}

/// Audit data of one separator reduction.
#[derive(Clone, Debug, Serialize)]
pub struct SeparatorInstance {
    pub separator: Vec<usize>,
    /// Components of `F - S`, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
    /// Components of `G - φ(S)`, ordered by least vertex.
    pub target_components: Vec<Vec<usize>>,
    /// Row `j`, column `i`: parity of the odd vertices of `C_i` in any fibre over `D_j`.
    pub parity_matrix: F2Matrix,
    /// The chosen proper index set `I`.
    pub chosen: Vec<usize>,
    /// Blocks of `S` with a common image, ordered by that image.
    pub partition: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparatorReduction {
    pub instance: SeparatorInstance,
    /// Certificate for the reduced minor `F'`.
    pub cert: OddoCertificate,
    /// For each vertex of `F'`, the vertices of `F` it stands for.
    pub origin: Vec<Vec<usize>>,
}

impl SeparatorReduction {
    /// `F[C ∪ S]` plus a clique on `S`, of which `F'` is a minor.
    pub fn host(&self, f: &Graph) -> Graph {
        let sep: VertexSet = self.instance.separator.iter().copied().collect();
        let c: VertexSet = self
            .instance
            .chosen
            .iter()
            .flat_map(|&i| self.instance.components[i].iter().copied())
            .collect();
        f.with_clique(sep).induced(c | sep).0
    }
}

/// Builds the parity matrix for `S`, checking it is constant over each target component.
fn parity_matrix(
    cert: &OddoCertificate,
    comps: &[VertexSet],
    dcomps: &[VertexSet],
) -> Result<F2Matrix> {
    let phi = &cert.hom;
    let odd = cert.report.odd_vertices();
    let mut p = F2Matrix::zeros(dcomps.len(), comps.len());
    for (j, d) in dcomps.iter().enumerate() {
        for (i, c) in comps.iter().enumerate() {
            let mut vals = d.iter().map(|x| (*c & odd & phi.fibre(x)).len() % 2 == 1);
            let first = vals.next().unwrap_or(false);
            if vals.any(|b| b != first) {
                return Err(Error::IllDefinedParityMatrix {
                    component: i,
                    target_component: j,
                });
            }
            p.set(j, i, first);
        }
    }
    Ok(p)
}

/// Nonzero null vectors of `p` as bitmasks, in lexicographic order of `(z_0, z_1, ...)`.
fn nonzero_null_vectors(p: &F2Matrix) -> Result<Vec<u64>> {
    if p.cols() > 64 {
        return Err(Error::BudgetExceeded(format!("{} components are too many", p.cols())));
    }
    let basis: Vec<u64> = p
        .nullspace()
        .iter()
        .map(|z| z.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| 1u64 << i).sum())
        .collect();
    if basis.len() > 20 {
        return Err(Error::BudgetExceeded(format!(
            "nullspace of dimension {} is too large to scan",
            basis.len()
        )));
    }
    let mut out: Vec<u64> = (1u64..1 << basis.len())
        .map(|mask| {
            basis
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(0, |acc, (_, &b)| acc ^ b)
        })
        .collect();
    // Lexicographic on (z_0, z_1, ...): reverse the low n bits and sort numerically.
    let n = p.cols();
    out.sort_unstable_by_key(|z| z.reverse_bits() >> (64 - n));
    Ok(out)
}

/// The separator reduction for `S ⊆ V(F)` with more components in `F - S`
/// than in `G - φ(S)`.
///
/// Candidate index sets `I` are complements of nonzero null vectors of the
/// parity matrix, tried in lexicographic order of the null vector; the first
/// one whose reduced map verifies is returned.
pub fn separator_reduce(cert: &OddoCertificate, sep: VertexSet) -> Result<SeparatorReduction> {
    require_plain(cert)?;
    let phi = &cert.hom;
    let (f, g) = (&phi.source, &phi.target);
    f.check_set(sep)?;
    let image: VertexSet = sep.iter().map(|a| phi.map[a]).collect();
    let comps = f.components_within(f.vertices() - sep);
    let dcomps = g.components_within(g.vertices() - image);
    let (n, m) = (comps.len(), dcomps.len());
    if n <= m {
        return Err(Error::Precondition(format!(
            "F - S has {n} components but G - φ(S) has {m}"
        )));
    }
    let p = parity_matrix(cert, &comps, &dcomps)?;
    let all_ones = vec![true; n];
    if p.mul_vec(&all_ones).iter().any(|&b| !b) {
        return Err(Error::BrokenReduction("parity matrix does not sum to one".into()));
    }
    let partition: Vec<VertexSet> = image.iter().map(|y| sep & phi.fibre(y)).collect();
    for z in nonzero_null_vectors(&p)? {
        let chosen: Vec<usize> = (0..n).filter(|&i| z >> i & 1 == 0).collect();
        let c: VertexSet = chosen.iter().fold(VertexSet::EMPTY, |acc, &i| acc | comps[i]);
        let (fp, origin, map) = separator_minor(f, phi, cert.report.odd_vertices(), c, &partition)?;
        let phi_p = Homomorphism::new(fp, g.clone(), map)?;
        let Some(reduced) = certify(&phi_p) else {
            continue;
        };
        let indicator: Vec<bool> = (0..n).map(|i| z >> i & 1 == 0).collect();
        debug_assert!(p.mul_vec(&indicator).iter().all(|&b| b));
        let odd = cert.report.odd_vertices();
        for x in g.vertices() - image {
            if (c & odd & phi.fibre(x)).len() % 2 == 0 {
                return Err(Error::BrokenReduction(format!(
                    "chosen components hold an even number of odd vertices over {x}"
                )));
            }
        }
        return Ok(SeparatorReduction {
            instance: SeparatorInstance {
                separator: sep.to_vec(),
                components: comps.iter().map(|c| c.to_vec()).collect(),
                target_components: dcomps.iter().map(|d| d.to_vec()).collect(),
                parity_matrix: p,
                chosen,
                partition: partition.iter().map(|t| t.to_vec()).collect(),
            },
            cert: reduced,
            origin: origin.iter().map(|o| o.to_vec()).collect(),
        });
    }
    Err(Error::BrokenReduction("no index set yields an oddomorphism".into()))
}

/// The graph on `C ⊎ 𝔖`: edges of `F[C]`, plus `vT` whenever the number of
/// `F`-edges from `v` to `T` is odd. Two parts `T, T'` over adjacent targets
/// `y = φ(T)`, `x = φ(T')` are joined iff `1 + #odd(C ∩ φ⁻¹(y)) + |E_F(C ∩ φ⁻¹(x), T)|`
/// is odd, which forces every part to the parity `1 + #odd(C ∩ φ⁻¹(y))`.
/// The value is the same when computed from `T'`. Taking `|E_F(T, T')|` mod 2
/// instead fails when components outside `C` carry edges between two fibres
/// over `φ(S)` (e.g. `P4 → K2` with `S` the two ends).
fn separator_minor(
    f: &Graph,
    phi: &Homomorphism,
    odd: VertexSet,
    c: VertexSet,
    partition: &[VertexSet],
) -> Result<(Graph, Vec<VertexSet>, Vec<usize>)> {
    let mut origin: Vec<VertexSet> = c.iter().map(VertexSet::singleton).collect();
    let k = origin.len();
    origin.extend(partition.iter().copied());
    let mut fp = Graph::try_new(origin.len())?;
    let edges_between = |a: VertexSet, b: VertexSet| -> usize {
        a.iter().map(|v| (f.neighbours(v) & b).len()).sum()
    };
    let image = |o: VertexSet| phi.map[o.first().expect("nonempty part")];
    for i in 0..origin.len() {
        for j in i + 1..origin.len() {
            let join = if j < k || i < k {
                edges_between(origin[i], origin[j]) % 2 == 1
            } else {
                let (y, x) = (image(origin[i]), image(origin[j]));
                phi.target.has_edge(x, y)
                    && (1 + (c & odd & phi.fibre(y)).len() + edges_between(c & phi.fibre(x), origin[i])) % 2 == 1
            };
            if join {
                fp.add_edge(i, j)?;
            }
        }
    }
    let map = origin.iter().map(|&o| image(o)).collect();
    Ok((fp, origin, map))
}

/// Checks that `F'` is a minor of `F[C ∪ S]` plus a clique on `S`.
pub fn check_separator_minor(f: &Graph, red: &SeparatorReduction) -> bool {
    has_minor(&red.host(f), &red.cert.hom.source)
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionRound {
    pub separator: Vec<usize>,
    pub order_before: usize,
    pub order_after: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CliqueSumReduction {
    pub rounds: Vec<ReductionRound>,
    pub cert: OddoCertificate,
    /// Whether the final source lies in the family.
    pub in_family: bool,
}

/// Repeatedly reduces along separators of size at most `s` (by size, then
/// lexicographically) until the source has none; single cut vertices use the
/// cut-vertex reduction.
pub fn reduce_clique_sum(
    cert: &OddoCertificate,
    in_family: impl Fn(&Graph) -> bool,
    s: usize,
) -> Result<CliqueSumReduction> {
    require_plain(cert)?;
    let g = cert.target();
    if !g.is_k_connected(s + 1) {
        return Err(Error::Precondition(format!("target is not {}-connected", s + 1)));
    }
    let mut current = cert.clone();
    let mut rounds = Vec::new();
    'rounds: loop {
        let f = current.source().clone();
        for sep in subsets_up_to(f.order(), s) {
            let comps = f.components_within(f.vertices() - sep);
            if comps.len() < 2 {
                continue;
            }
            let next = if sep.len() == 1 {
                cut_vertex_reduce(&current, sep.first().unwrap())?.cert
            } else {
                separator_reduce(&current, sep)?.cert
            };
            let after = next.source().order();
            if after >= f.order() {
                return Err(Error::BrokenReduction("reduction did not shrink the source".into()));
            }
            rounds.push(ReductionRound {
                separator: sep.to_vec(),
                order_before: f.order(),
                order_after: after,
            });
            current = next;
            continue 'rounds;
        }
        break;
    }
    let in_family = in_family(current.source());
    Ok(CliqueSumReduction {
        rounds,
        cert: current,
        in_family,
    })
}

/// A topological model of the target in the source of a tree oddomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologicalModel {
    #[serde(serialize_with = "crate::serde_graph6")]
    pub pattern: Graph,
    #[serde(serialize_with = "crate::serde_graph6")]
    pub host: Graph,
    pub rho: Vec<usize>,
    /// One path per pattern edge, in the order of `pattern.edges()`, from `rho(u)` to `rho(v)` for `u < v`.
    pub paths: Vec<Vec<usize>>,
}

impl TopologicalModel {
    /// Checks the model structurally and against the certificate it came from.
    pub fn verify(&self, cert: &OddoCertificate) -> Result<()> {
        let embedding = TopologicalEmbedding {
            branch: self.rho.clone(),
            paths: self.paths.clone(),
        };
        embedding
            .verify(&self.pattern, &self.host)
            .map_err(Error::BrokenReduction)?;
        for (v, &r) in self.rho.iter().enumerate() {
            if cert.hom.map[r] != v {
                return Err(Error::BrokenReduction(format!("branch vertex of {v} lies over another vertex")));
            }
            if !cert.report.is_odd(r) {
                return Err(Error::BrokenReduction(format!("branch vertex of {v} is not odd")));
            }
        }
        Ok(())
    }
}

type PathMap = HashMap<Edge, Vec<usize>>;

fn tree_path(f: &Graph, from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; f.order()];
    let mut queue = std::collections::VecDeque::from([from]);
    parent[from] = from;
    while let Some(x) = queue.pop_front() {
        for y in f.neighbours(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

fn tree_model_rec(cert: &OddoCertificate) -> Result<(Vec<usize>, PathMap)> {
    let phi = &cert.hom;
    let (f, g) = (&phi.source, &phi.target);
    if g.order() == 1 {
        if f.order() != 1 {
            return Err(Error::BrokenReduction("tree onto K1 has more than one vertex".into()));
        }
        return Ok((vec![0], PathMap::new()));
    }
    let v = (0..g.order())
        .find(|&x| g.degree(x) == 1)
        .ok_or_else(|| Error::BrokenReduction("target tree has no leaf".into()))?;
    let w = g.neighbours(v).first().unwrap();
    let fibre = phi.fibre(v);
    if let Some(a) = fibre.iter().find(|&a| f.degree(a) >= 2) {
        let red = cut_vertex_reduce(cert, a)?;
        let (rho_i, paths_i) = tree_model_rec(&red.cert)?;
        let mut rho: Vec<usize> = rho_i.iter().map(|&r| red.kept[r]).collect();
        let mut paths: PathMap = paths_i
            .into_iter()
            .map(|(e, p)| (e, p.into_iter().map(|r| red.kept[r]).collect()))
            .collect();
        if let Some(a_star) = red.odd_partner {
            if rho[v] == a {
                rho[v] = a_star;
                let ext = tree_path(f, a, a_star);
                for ((x, y), p) in paths.iter_mut() {
                    if *y == v {
                        p.extend_from_slice(&ext[1..]);
                    } else if *x == v {
                        let mut q: Vec<usize> = ext.iter().rev().copied().collect();
                        q.extend_from_slice(&p[1..]);
                        *p = q;
                    }
                }
            }
        }
        return Ok((rho, paths));
    }
    let sub = TargetSubgraph::induced(g, g.vertices() - VertexSet::singleton(v));
    let restricted = restrict_oddomorphism(cert, &sub)?;
    if !restricted.is_plain() {
        return Err(Error::BrokenReduction("leaf removal lost the oddomorphism".into()));
    }
    let kept_f = (f.vertices() - fibre).to_vec();
    let kept_g = sub.vertices.to_vec();
    let (rho_r, paths_r) = tree_model_rec(&restricted)?;
    let mut rho = vec![usize::MAX; g.order()];
    for (x, &r) in rho_r.iter().enumerate() {
        rho[kept_g[x]] = kept_f[r];
    }
    let mut paths: PathMap = paths_r
        .into_iter()
        .map(|((x, y), p)| ((kept_g[x], kept_g[y]), p.into_iter().map(|r| kept_f[r]).collect()))
        .collect();
    let b = rho[w];
    let a = (f.neighbours(b) & fibre)
        .first()
        .ok_or_else(|| Error::BrokenReduction("branch vertex has no neighbour over the leaf".into()))?;
    rho[v] = a;
    let path = if w < v { vec![b, a] } else { vec![a, b] };
    paths.insert((w.min(v), w.max(v)), path);
    Ok((rho, paths))
}

/// Extracts a topological model of `G` in a tree `F` from a plain oddomorphism `F → G`,
/// following the leaf / cut-vertex induction.
pub fn tree_topological_model(cert: &OddoCertificate) -> Result<TopologicalModel> {
    require_plain(cert)?;
    if !cert.source().is_tree() {
        return Err(Error::Precondition("source is not a tree".into()));
    }
    let (rho, mut paths) = tree_model_rec(cert)?;
    let g = cert.target();
    let model = TopologicalModel {
        pattern: g.clone(),
        host: cert.source().clone(),
        rho,
        paths: g
            .edges()
            .into_iter()
            .map(|e| paths.remove(&e).unwrap_or_default())
            .collect(),
    };
    model.verify(cert)?;
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn cert_of(f: Graph, g: Graph, map: Vec<usize>) -> OddoCertificate {
        certify(&Homomorphism::new(f, g, map).unwrap()).expect("oddomorphism")
    }

    #[test]
    fn isolated_and_twins() {
        // K2 + K1 onto K2, the extra vertex over 0: it is even.
        let c = cert_of(complete(2).disjoint_union(&complete(1)), complete(2), vec![0, 1, 0]);
        let r = remove_isolated(&c, 2).unwrap();
        assert_eq!(r.hom.map, vec![0, 1]);
        assert!(remove_isolated(&c, 0).is_err());
        // K_{1,3} onto K2: leaves 1,2 are twins.
        let star3 = cert_of(star(3), complete(2), vec![0, 1, 1, 1]);
        let r = remove_twins(&star3, 1, 2).unwrap();
        assert_eq!(r.source().order(), 2);
        assert!(remove_twins(&star3, 0, 1).is_err());
    }

    #[test]
    fn cut_vertex_on_star() {
        let c = cert_of(star(3), complete(2), vec![0, 1, 1, 1]);
        let r = cut_vertex_reduce(&c, 0).unwrap();
        assert_eq!(r.component_index, 0);
        assert_eq!(r.kept, vec![0, 1]);
        assert_eq!(r.odd_partner, None);
        assert!(cut_vertex_reduce(&c, 1).is_err());
    }

    #[test]
    fn separator_precondition() {
        let c = certify(&Homomorphism::identity(&cycle(4))).unwrap();
        let sep: VertexSet = [0, 2].into_iter().collect();
        assert!(matches!(separator_reduce(&c, sep), Err(Error::Precondition(_))));
    }

    /// Three triangles sharing vertex 0.
    fn windmill() -> Graph {
        Graph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)])
            .unwrap()
    }

    #[test]
    fn separator_on_windmill() {
        let w = windmill();
        let c = cert_of(w.clone(), cycle(3), vec![0, 1, 2, 1, 2, 1, 2]);
        let red = separator_reduce(&c, VertexSet::singleton(0)).unwrap();
        assert_eq!(red.instance.components.len(), 3);
        assert_eq!(red.instance.chosen, vec![0]);
        assert_eq!(red.cert.source().order(), 3);
        assert!(check_separator_minor(&w, &red));
        red.cert.verify().unwrap();
    }

    #[test]
    fn clique_sum_reduction_of_windmill() {
        let c = cert_of(windmill(), cycle(3), vec![0, 1, 2, 1, 2, 1, 2]);
        let r = reduce_clique_sum(&c, |g| g.is_connected() && g.order() <= 3, 1).unwrap();
        assert_eq!(r.rounds.len(), 1);
        assert_eq!(r.cert.source().order(), 3);
        assert!(r.in_family);
        let id = certify(&Homomorphism::identity(&cycle(3))).unwrap();
        let r = reduce_clique_sum(&id, |_| true, 1).unwrap();
        assert!(r.rounds.is_empty());
    }

    #[test]
    fn tree_models() {
        for t in [path(5), star(3)] {
            let c = certify(&Homomorphism::identity(&t)).unwrap();
            let m = tree_topological_model(&c).unwrap();
            assert_eq!(m.rho, (0..t.order()).collect::<Vec<_>>());
            assert!(m.paths.iter().all(|p| p.len() == 2));
        }
    }
}
