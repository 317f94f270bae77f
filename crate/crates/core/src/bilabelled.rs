//! Bilabelled graphs, their homomorphism matrices, series-parallel terms and
//! contractors.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_form_coloured, CanonicalForm, Graph};
use crate::hom::{count_homs_big, enumerate_homs};

/// Largest edge bound accepted by [`enumerate_series_parallel`].
pub const SP_MAX_EDGES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilabelledGraph {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
}

impl BilabelledGraph {
    pub fn new(graph: Graph, u: usize, v: usize) -> Result<BilabelledGraph> {
        graph.check_vertex(u)?;
        graph.check_vertex(v)?;
        Ok(BilabelledGraph { graph, u, v })
    }

    /// The single edge `A`.
    pub fn atom() -> BilabelledGraph {
        BilabelledGraph {
            graph: Graph::from_edges(2, &[(0, 1)]).unwrap(),
            u: 0,
            v: 1,
        }
    }

    /// One vertex carrying both labels.
    pub fn identity() -> BilabelledGraph {
        BilabelledGraph {
            graph: Graph::new(1),
            u: 0,
            v: 0,
        }
    }

    /// Two non-adjacent labelled vertices.
    pub fn all_ones() -> BilabelledGraph {
        BilabelledGraph {
            graph: Graph::new(2),
            u: 0,
            v: 1,
        }
    }

    /// Disjoint union of `self` and `other` with `other`'s vertices in `glue`
    /// identified with the paired vertices of `self`. Returns the merged graph
    /// and the position of every vertex of the union.
    fn glue(&self, other: &BilabelledGraph, glue: &[(usize, usize)]) -> Result<(Graph, Vec<usize>)> {
        let n1 = self.graph.order();
        let total = n1 + other.graph.order();
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b) in glue {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, n1 + b));
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            parent[hi] = lo;
        }
        let mut pos = vec![usize::MAX; total];
        let mut next = 0;
        for x in 0..total {
            let r = find(&mut parent, x);
            if pos[r] == usize::MAX {
                pos[r] = next;
                next += 1;
            }
            pos[x] = pos[r];
        }
        let mut g = Graph::try_new(next)?;
        let edges = self
            .graph
            .edges()
            .into_iter()
            .chain(other.graph.edges().into_iter().map(|(a, b)| (n1 + a, n1 + b)));
        for (a, b) in edges {
            if pos[a] == pos[b] {
                return Err(Error::LoopCreated);
            }
            g.add_edge(pos[a], pos[b])?;
        }
        Ok((g, pos))
    }

    /// Parallel composition: labels identified pairwise, duplicate edges merged.
    pub fn parallel(&self, other: &BilabelledGraph) -> Result<BilabelledGraph> {
        let (graph, pos) = self.glue(other, &[(self.u, other.u), (self.v, other.v)])?;
        Ok(BilabelledGraph {
            graph,
            u: pos[self.u],
            v: pos[self.v],
        })
    }

    /// Series composition: the second label of `self` is identified with the first of `other`.
    pub fn series(&self, other: &BilabelledGraph) -> BilabelledGraph {
        let n1 = self.graph.order();
        let (graph, pos) = self
            .glue(other, &[(self.v, other.u)])
            .expect("series composition cannot create loops");
        BilabelledGraph {
            graph,
            u: pos[self.u],
            v: pos[n1 + other.v],
        }
    }

    /// The underlying unlabelled graph.
    pub fn soe_graph(&self) -> Graph {
        self.graph.clone()
    }

    /// Canonical form of the graph with `u` and `v` distinguished (in that order).
    pub fn canonical_form(&self) -> CanonicalForm {
        let mut colours = vec![0; self.graph.order()];
        if self.u == self.v {
            colours[self.u] = 3;
        } else {
            colours[self.u] = 1;
            colours[self.v] = 2;
        }
        canonical_form_coloured(&self.graph, &colours)
    }

    pub fn hom_matrix(&self, g: &Graph, budget: u128) -> Result<HomMatrix> {
        let n = g.order();
        let mut entries = vec![vec![BigUint::zero(); n]; n];
        let mut counts = vec![vec![0u128; n]; n];
        for map in enumerate_homs(&self.graph, g, budget)? {
            counts[map[self.u]][map[self.v]] += 1;
        }
        for x in 0..n {
            for y in 0..n {
                entries[x][y] = BigUint::from(counts[x][y]);
            }
        }
        Ok(HomMatrix { entries })
    }
}

/// `entries[x][y]`: homomorphisms sending the first label to `x` and the second to `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomMatrix {
    pub entries: Vec<Vec<BigUint>>,
}

impl HomMatrix {
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn identity(n: usize) -> HomMatrix {
        HomMatrix {
            entries: (0..n)
                .map(|x| (0..n).map(|y| BigUint::from((x == y) as u8)).collect())
                .collect(),
        }
    }

    pub fn adjacency(g: &Graph) -> HomMatrix {
        let n = g.order();
        HomMatrix {
            entries: (0..n)
                .map(|x| (0..n).map(|y| BigUint::from(g.has_edge(x, y) as u8)).collect())
                .collect(),
        }
    }

    pub fn hadamard(&self, other: &HomMatrix) -> HomMatrix {
        HomMatrix {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a * b).collect())
                .collect(),
        }
    }

    pub fn product(&self, other: &HomMatrix) -> HomMatrix {
        let n = self.order();
        HomMatrix {
            entries: (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| (0..n).map(|k| &self.entries[x][k] * &other.entries[k][y]).sum())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn sum_of_entries(&self) -> BigUint {
        self.entries.iter().flatten().sum()
    }
}

/// Series-parallel expression over the atom `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpExpr {
    Atom,
    Series(Box<SpExpr>, Box<SpExpr>),
    Parallel(Box<SpExpr>, Box<SpExpr>),
}

impl SpExpr {
    pub fn realize(&self) -> Result<BilabelledGraph> {
        Ok(match self {
            SpExpr::Atom => BilabelledGraph::atom(),
            SpExpr::Series(a, b) => a.realize()?.series(&b.realize()?),
            SpExpr::Parallel(a, b) => a.realize()?.parallel(&b.realize()?)?,
        })
    }
}

impl fmt::Display for SpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpExpr::Atom => write!(f, "A"),
            SpExpr::Series(a, b) => write!(f, "({a}*{b})"),
            SpExpr::Parallel(a, b) => write!(f, "({a}&{b})"),
        }
    }
}

impl FromStr for SpExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpExpr> {
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let bad = |at: usize| Error::Precondition(format!("malformed series-parallel expression at {at}"));
        fn parse(b: &[u8], i: usize, bad: &dyn Fn(usize) -> Error) -> Result<(SpExpr, usize)> {
            match b.get(i) {
                Some(b'A') => Ok((SpExpr::Atom, i + 1)),
                Some(b'(') => {
                    let (l, j) = parse(b, i + 1, bad)?;
                    let op = *b.get(j).ok_or_else(|| bad(j))?;
                    let (r, k) = parse(b, j + 1, bad)?;
                    if b.get(k) != Some(&b')') {
                        return Err(bad(k));
                    }
                    let e = match op {
                        b'*' => SpExpr::Series(Box::new(l), Box::new(r)),
                        b'&' => SpExpr::Parallel(Box::new(l), Box::new(r)),
                        _ => return Err(bad(j)),
                    };
                    Ok((e, k + 1))
                }
                _ => Err(bad(i)),
            }
        }
        let (e, end) = parse(&bytes, 0, &bad)?;
        if end != bytes.len() {
            return Err(bad(end));
        }
        Ok(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpTerm {
    pub expr: SpExpr,
    pub realization: BilabelledGraph,
}

impl SpTerm {
    pub fn atom() -> SpTerm {
        SpTerm {
            expr: SpExpr::Atom,
            realization: BilabelledGraph::atom(),
        }
    }

    pub fn from_expr(expr: SpExpr) -> Result<SpTerm> {
        let realization = expr.realize()?;
        Ok(SpTerm { expr, realization })
    }

    pub fn edges(&self) -> usize {
        self.realization.graph.size()
    }
}

/// All series-parallel terms with at most `max_edges` edges, one per labelled
/// isomorphism class, ordered by edge count and then canonical form. Each class
/// is represented by the first expression found for it, building upwards from
/// smaller terms.
pub fn enumerate_series_parallel(max_edges: usize) -> Result<Vec<SpTerm>> {
    if max_edges > SP_MAX_EDGES {
        return Err(Error::BudgetExceeded(format!(
            "series-parallel enumeration is capped at {SP_MAX_EDGES} edges"
        )));
    }
    if max_edges == 0 {
        return Ok(Vec::new());
    }
    // Operands of a composition are subgraphs of the result, and a parallel
    // composition merges at most the edge between the labels, so combining
    // terms with edge counts summing to at most `max_edges + 1` is exhaustive.
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut terms: Vec<(CanonicalForm, SpTerm)> = Vec::new();
    let atom = SpTerm::atom();
    seen.insert(atom.realization.canonical_form());
    terms.push((atom.realization.canonical_form(), atom));
    let mut done = 0;
    while done < terms.len() {
        let frontier = terms.len();
        let mut fresh: Vec<(CanonicalForm, SpTerm)> = Vec::new();
        for i in 0..frontier {
            for j in 0..frontier {
                if i < done && j < done {
                    continue;
                }
                let (a, b) = (&terms[i].1, &terms[j].1);
                if a.edges() + b.edges() > max_edges + 1 {
                    continue;
                }
                let mut candidates = Vec::with_capacity(2);
                if a.edges() + b.edges() <= max_edges {
                    candidates.push(SpTerm {
                        expr: SpExpr::Series(Box::new(a.expr.clone()), Box::new(b.expr.clone())),
                        realization: a.realization.series(&b.realization),
                    });
                }
                if i <= j {
                    let realization = a.realization.parallel(&b.realization)?;
                    if realization.graph.size() <= max_edges {
                        candidates.push(SpTerm {
                            expr: SpExpr::Parallel(Box::new(a.expr.clone()), Box::new(b.expr.clone())),
                            realization,
                        });
                    }
                }
                for t in candidates {
                    let form = t.realization.canonical_form();
                    if seen.insert(form.clone()) {
                        fresh.push((form, t));
                    }
                }
            }
        }
        done = frontier;
        terms.extend(fresh);
    }
    terms.sort_by(|(fa, a), (fb, b)| a.edges().cmp(&b.edges()).then_with(|| fa.cmp(fb)));
    Ok(terms.into_iter().map(|(_, t)| t).collect())
}

/// A finitely supported rational combination of series-parallel terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractorCombination {
    pub terms: Vec<(SpTerm, BigRational)>,
}

#[derive(Serialize, Deserialize)]
struct ContractorEntry {
    expr: String,
    numerator: String,
    denominator: String,
}

impl Serialize for ContractorCombination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms
            .iter()
            .map(|(t, c)| ContractorEntry {
                expr: t.expr.to_string(),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ContractorCombination {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let entries = Vec::<ContractorEntry>::deserialize(d)?;
        let mut terms = Vec::with_capacity(entries.len());
        for e in entries {
            let expr: SpExpr = e.expr.parse().map_err(D::Error::custom)?;
            let term = SpTerm::from_expr(expr).map_err(D::Error::custom)?;
            let num: BigInt = e.numerator.parse().map_err(D::Error::custom)?;
            let den: BigInt = e.denominator.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((term, BigRational::new(num, den)));
        }
        Ok(ContractorCombination { terms })
    }
}

impl ContractorCombination {
    /// `Σ α_S S_G` as a rational matrix.
    pub fn evaluate(&self, g: &Graph, budget: u128) -> Result<Vec<Vec<BigRational>>> {
        let n = g.order();
        let mut out = vec![vec![BigRational::zero(); n]; n];
        for (t, c) in &self.terms {
            let m = t.realization.hom_matrix(g, budget)?;
            for x in 0..n {
                for y in 0..n {
                    out[x][y] += c * BigRational::from_integer(BigInt::from(m.entries[x][y].clone()));
                }
            }
        }
        Ok(out)
    }

    /// Whether the combination evaluates to the identity matrix on `g`.
    pub fn is_contractor_for(&self, g: &Graph, budget: u128) -> Result<bool> {
        let m = self.evaluate(g, budget)?;
        Ok(m.iter().enumerate().all(|(x, row)| {
            row.iter()
                .enumerate()
                .all(|(y, v)| *v == BigRational::from_integer(BigInt::from((x == y) as u8)))
        }))
    }
}

/// Some solution of `a·x = b` over the rationals, free variables set to zero.
///
/// Elimination is fraction-free: rows stay integral and are divided by the
/// gcd of their entries after every update.
pub fn solve_rational_system(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| r.iter().cloned().chain(std::iter::once(rhs.clone())).collect())
        .collect();
    let normalize = |row: &mut Vec<BigInt>| {
        let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if !g.is_zero() && !g.is_one() {
            for x in row.iter_mut() {
                *x = &*x / &g;
            }
        }
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let (piv, f) = (m[r][c].clone(), m[i][c].clone());
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x * &piv - &f * y;
                }
                normalize(&mut m[i]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = BigRational::new(m[i][cols].clone(), m[i][c].clone());
    }
    Some(x)
}

/// Rational coefficients over the series-parallel terms with at most
/// `max_edges` edges whose homomorphism matrices sum to the identity on both
/// `g` and `h`.
pub fn solve_contractor(g: &Graph, h: &Graph, max_edges: usize, budget: u128) -> Result<ContractorCombination> {
    let basis = enumerate_series_parallel(max_edges)?;
    let mut a: Vec<Vec<BigInt>> = Vec::new();
    let mut b: Vec<BigInt> = Vec::new();
    for target in [g, h] {
        let mats: Vec<HomMatrix> = basis
            .iter()
            .map(|t| t.realization.hom_matrix(target, budget))
            .collect::<Result<_>>()?;
        let n = target.order();
        for x in 0..n {
            for y in 0..n {
                a.push(mats.iter().map(|m| BigInt::from(m.entries[x][y].clone())).collect());
                b.push(BigInt::from((x == y) as u8));
            }
        }
    }
    let no = || Error::NoContractorFound { max_edges };
    if basis.is_empty() {
        return Err(no());
    }
    let x = solve_rational_system(&a, &b).ok_or_else(no)?;
    let combo = ContractorCombination {
        terms: basis
            .into_iter()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    };
    if !combo.is_contractor_for(g, budget)? || !combo.is_contractor_for(h, budget)? {
        return Err(Error::InvalidContractor("re-substitution failed".into()));
    }
    Ok(combo)
}

/// `hom(F/e, G)` computed as `Σ α_S hom(soe(F⁻ ⊙ S), G)`, where `F⁻` is `f`
/// without `e`, labelled at the endpoints of `e`.
pub fn simulate_contraction(
    f: &Graph,
    e: (usize, usize),
    g: &Graph,
    alpha: &ContractorCombination,
    budget: u128,
) -> Result<BigInt> {
    let (u, v) = e;
    let mut minus = f.clone();
    minus.remove_edge(u, v)?;
    if !alpha.is_contractor_for(g, budget)? {
        return Err(Error::InvalidContractor("combination is not the identity on the target".into()));
    }
    let f_minus = BilabelledGraph::new(minus, u, v)?;
    let mut total = BigRational::zero();
    for (t, c) in &alpha.terms {
        let glued = f_minus.parallel(&t.realization)?;
        let count = count_homs_big(&glued.soe_graph(), g);
        total += c * BigRational::from_integer(BigInt::from(count));
    }
    if !total.is_integer() || total.is_negative() {
        return Err(Error::InvalidContractor(format!("simulated count {total} is not a count")));
    }
    Ok(total.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::exact_treewidth;
    use crate::hom::{count_homs, DEFAULT_HOM_BUDGET};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const B: u128 = DEFAULT_HOM_BUDGET;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn basic_matrices() {
        let g = petersen();
        let a = BilabelledGraph::atom();
        assert_eq!(a.hom_matrix(&g, B).unwrap(), HomMatrix::adjacency(&g));
        assert_eq!(BilabelledGraph::identity().hom_matrix(&g, B).unwrap(), HomMatrix::identity(10));
        let j = BilabelledGraph::all_ones().hom_matrix(&g, B).unwrap();
        assert!(j.entries.iter().flatten().all(|x| x.is_one()));
        assert_eq!(a.hom_matrix(&g, B).unwrap().sum_of_entries(), BigUint::from(30u8));
    }

    #[test]
    fn compositions() {
        let a = BilabelledGraph::atom();
        let j = BilabelledGraph::all_ones();
        let i = BilabelledGraph::identity();
        assert_eq!(a.parallel(&j).unwrap(), a);
        assert_eq!(a.parallel(&a).unwrap(), a);
        assert!(matches!(a.parallel(&i), Err(Error::LoopCreated)));
        let p3 = a.series(&a);
        assert_eq!(p3.graph.size(), 2);
        assert_eq!(p3.canonical_form(), BilabelledGraph::new(path(3), 0, 2).unwrap().canonical_form());
        assert_eq!(a.series(&i).canonical_form(), a.canonical_form());
        // Identifying the labels of P3's ends through I closes nothing: P3 ⊙ I is K2.
        let folded = BilabelledGraph::new(path(3), 0, 2).unwrap().parallel(&i).unwrap();
        assert_eq!(folded.graph, complete(2));
        assert_eq!(folded.u, folded.v);
    }

    #[test]
    fn functoriality() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let terms = enumerate_series_parallel(4).unwrap();
        for _ in 0..30 {
            let n = rng.gen_range(1..=5);
            let g = random_graph(&mut rng, n);
            for s in terms.iter().take(8) {
                for t in terms.iter().take(8) {
                    let (ms, mt) = (
                        s.realization.hom_matrix(&g, B).unwrap(),
                        t.realization.hom_matrix(&g, B).unwrap(),
                    );
                    let par = s.realization.parallel(&t.realization).unwrap();
                    assert_eq!(par.hom_matrix(&g, B).unwrap(), ms.hadamard(&mt));
                    let ser = s.realization.series(&t.realization);
                    assert_eq!(ser.hom_matrix(&g, B).unwrap(), ms.product(&mt));
                    assert_eq!(
                        ser.hom_matrix(&g, B).unwrap().sum_of_entries(),
                        count_homs_big(&ser.soe_graph(), &g)
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration() {
        let one = enumerate_series_parallel(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].expr.to_string(), "A");
        let two = enumerate_series_parallel(2).unwrap();
        let names: Vec<String> = two.iter().map(|t| t.expr.to_string()).collect();
        assert_eq!(names, vec!["A", "(A*A)"]);
        let mut last = 0;
        for m in 1..=6 {
            let terms = enumerate_series_parallel(m).unwrap();
            assert!(terms.len() >= last);
            last = terms.len();
            for t in &terms {
                let r = &t.realization;
                assert_ne!(r.u, r.v);
                assert!(r.graph.size() <= m);
                // Adding the label edge keeps treewidth at most 2.
                let mut closed = r.graph.clone();
                if !closed.has_edge(r.u, r.v) {
                    closed.add_edge(r.u, r.v).unwrap();
                }
                assert!(exact_treewidth(&closed).unwrap().0 <= 2);
                assert_eq!(SpTerm::from_expr(t.expr.clone()).unwrap().realization, *r);
            }
        }
        assert!(enumerate_series_parallel(9).is_err());
    }

    #[test]
    fn expression_syntax() {
        let e: SpExpr = "((A*A)&A)".parse().unwrap();
        assert_eq!(e.to_string(), "((A*A)&A)");
        assert_eq!(e.realize().unwrap().graph.size(), 3);
        assert!("(A*A".parse::<SpExpr>().is_err());
        assert!("B".parse::<SpExpr>().is_err());
    }

    #[test]
    fn rational_solver() {
        let a = vec![vec![BigInt::from(2), BigInt::from(4)], vec![BigInt::from(1), BigInt::from(3)]];
        let b = vec![BigInt::from(1), BigInt::from(1)];
        let x = solve_rational_system(&a, &b).unwrap();
        assert_eq!(x[0], BigRational::new((-1).into(), 2.into()));
        assert_eq!(x[1], BigRational::new(1.into(), 2.into()));
        let inconsistent = vec![vec![BigInt::from(1)], vec![BigInt::from(2)]];
        assert!(solve_rational_system(&inconsistent, &b).is_none());
    }

    #[test]
    fn contractor_examples() {
        let k2 = complete(2);
        let c = solve_contractor(&k2, &k2, 2, B).unwrap();
        assert_eq!(c.terms.len(), 1);
        assert_eq!(c.terms[0].0.expr.to_string(), "(A*A)");
        assert!(c.terms[0].1.is_one());
        assert!(matches!(
            solve_contractor(&complete(1), &complete(1), 4, B),
            Err(Error::NoContractorFound { max_edges: 4 })
        ));
        assert_eq!(simulate_contraction(&cycle(3), (0, 1), &k2, &c, B).unwrap(), BigInt::from(2));
        assert_eq!(simulate_contraction(&path(3), (0, 1), &k2, &c, B).unwrap(), BigInt::from(2));
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"[{"expr":"(A*A)","numerator":"1","denominator":"1"}]"#);
        let back: ContractorCombination = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn contraction_agreement_on_k2() {
        let k2 = complete(2);
        let c = solve_contractor(&k2, &k2, 2, B).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(2..=5);
            let f = random_graph(&mut rng, n);
            let edges = f.edges();
            if edges.is_empty() {
                continue;
            }
            let (u, v) = edges[rng.gen_range(0..edges.len())];
            let expect = count_homs(&f.contract_edge(u, v).unwrap(), &k2).unwrap();
            let got = simulate_contraction(&f, (u, v), &k2, &c, B).unwrap();
            assert_eq!(got, BigInt::from(expect));
            done += 1;
        }
    }
}
