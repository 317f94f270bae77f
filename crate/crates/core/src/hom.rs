//! Homomorphism counting and enumeration.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{optimal_elimination_order, Graph, VertexSet, TREEWIDTH_MAX_ORDER};

/// Patterns with at most this many vertices are counted by plain backtracking.
pub const BRUTE_FORCE_MAX_PATTERN: usize = 6;

/// Default cap on `|V(G)|^|V(F)|` for enumeration.
pub const DEFAULT_HOM_BUDGET: u128 = 1 << 40;

/// An edge-preserving map `source → target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Homomorphism {
    #[serde(serialize_with = "crate::serde_graph6")]
    pub source: Graph,
    #[serde(serialize_with = "crate::serde_graph6")]
    pub target: Graph,
    pub map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: Graph, target: Graph, map: Vec<usize>) -> Result<Homomorphism> {
        if map.len() != source.order() {
            return Err(Error::InvalidHomomorphism(format!(
                "map has {} entries for {} source vertices",
                map.len(),
                source.order()
            )));
        }
        if let Some(&x) = map.iter().find(|&&x| x >= target.order()) {
            return Err(Error::InvalidHomomorphism(format!(
                "image {x} is not a target vertex"
            )));
        }
        if let Some((u, v)) = source
            .edges()
            .into_iter()
            .find(|&(u, v)| !target.has_edge(map[u], map[v]))
        {
            return Err(Error::InvalidHomomorphism(format!(
                "edge {{{u}, {v}}} maps to non-edge {{{}, {}}}",
                map[u], map[v]
            )));
        }
        Ok(Homomorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(g: &Graph) -> Homomorphism {
        Homomorphism {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    pub fn fibre(&self, x: usize) -> VertexSet {
        self.map
            .iter()
            .enumerate()
            .filter(|&(_, &y)| y == x)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.target.vertices()
    }
}

fn check_budget(f: &Graph, g: &Graph, budget: u128) -> Result<()> {
    let mut total: u128 = 1;
    for _ in 0..f.order() {
        total = total.saturating_mul(g.order() as u128);
        if total > budget {
            return Err(Error::BudgetExceeded(format!(
                "{}^{} candidate maps exceed the budget {budget}",
                g.order(),
                f.order()
            )));
        }
    }
    Ok(())
}

/// Lazily enumerates homomorphisms `f → g` in lexicographic order of the map.
pub struct HomIter<'a> {
    f: &'a Graph,
    g: &'a Graph,
    surjective: bool,
    map: Vec<usize>,
    cands: Vec<VertexSet>,
    depth: usize,
    done: bool,
}

impl<'a> HomIter<'a> {
    fn new(f: &'a Graph, g: &'a Graph, surjective: bool) -> HomIter<'a> {
        let n = f.order();
        let mut it = HomIter {
            f,
            g,
            surjective,
            map: vec![0; n],
            cands: vec![VertexSet::EMPTY; n],
            depth: 0,
            done: false,
        };
        if n == 0 {
            // The empty map is the unique homomorphism; surjective only onto the null graph.
            it.done = surjective && g.order() > 0;
        } else {
            it.cands[0] = it.candidates(0);
        }
        it
    }

    fn candidates(&self, v: usize) -> VertexSet {
        let mut c = self.g.vertices();
        for w in self.f.neighbours(v).iter().take_while(|&w| w < v) {
            c &= self.g.neighbours(self.map[w]);
        }
        if self.surjective {
            let covered: VertexSet = self.map[..v].iter().copied().collect();
            let missing = self.g.vertices() - covered;
            let remaining = self.f.order() - v;
            if missing.len() > remaining {
                return VertexSet::EMPTY;
            }
            if missing.len() == remaining {
                c &= missing;
            }
        }
        c
    }
}

impl Iterator for HomIter<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let n = self.f.order();
        if n == 0 {
            self.done = true;
            return Some(Vec::new());
        }
        loop {
            let d = self.depth;
            match self.cands[d].first() {
                None => {
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                }
                Some(x) => {
                    self.cands[d].remove(x);
                    self.map[d] = x;
                    if d + 1 == n {
                        return Some(self.map.clone());
                    }
                    self.depth += 1;
                    self.cands[d + 1] = self.candidates(d + 1);
                }
            }
        }
    }
}

/// All homomorphisms `f → g`, lexicographically by image vector.
pub fn enumerate_homs<'a>(f: &'a Graph, g: &'a Graph, budget: u128) -> Result<HomIter<'a>> {
    check_budget(f, g, budget)?;
    Ok(HomIter::new(f, g, false))
}

/// All vertex-surjective homomorphisms `f → g`, lexicographically by image vector.
pub fn enumerate_surjective_homs<'a>(
    f: &'a Graph,
    g: &'a Graph,
    budget: u128,
) -> Result<HomIter<'a>> {
    check_budget(f, g, budget)?;
    Ok(HomIter::new(f, g, true))
}

/// Exact-arithmetic accumulator used by the counting routines.
pub trait Count: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_usize(x: usize) -> Self;
    fn add(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn is_zero(&self) -> bool;
}

impl Count for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_usize(x: usize) -> Self {
        x as u128
    }
    fn add(&self, other: &Self) -> Result<Self> {
        self.checked_add(*other).ok_or(Error::CountOverflow)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(*other).ok_or(Error::CountOverflow)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Count for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_usize(x: usize) -> Self {
        BigUint::from(x)
    }
    fn add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Counts by backtracking, summing candidate-set sizes at the last vertex.
pub fn count_homs_brute<C: Count>(f: &Graph, g: &Graph) -> Result<C> {
    let n = f.order();
    if n == 0 {
        return Ok(C::one());
    }
    fn rec<C: Count>(f: &Graph, g: &Graph, map: &mut [usize], v: usize) -> Result<C> {
        let mut c = g.vertices();
        for w in f.neighbours(v).iter().take_while(|&w| w < v) {
            c &= g.neighbours(map[w]);
        }
        if v + 1 == f.order() {
            return Ok(C::from_usize(c.len()));
        }
        let mut total = C::zero();
        for x in c {
            map[v] = x;
            total = total.add(&rec(f, g, map, v + 1)?)?;
        }
        Ok(total)
    }
    rec(f, g, &mut vec![0; n], 0)
}

/// Greedy min-degree elimination ordering, used when a component is too
/// large for the exact treewidth routine.
fn greedy_order(f: &Graph) -> Vec<usize> {
    let mut h = f.clone();
    let mut alive = f.vertices();
    let mut order = Vec::with_capacity(f.order());
    while let Some(v) = alive
        .iter()
        .min_by_key(|&v| ((h.neighbours(v) & alive).len(), v))
    {
        alive.remove(v);
        h = h.with_clique(h.neighbours(v) & alive);
        order.push(v);
    }
    order
}

/// Counts by variable elimination along a tree decomposition of `f`.
pub fn count_homs_dp<C: Count>(f: &Graph, g: &Graph) -> Result<C> {
    let order = optimal_elimination_order(f, TREEWIDTH_MAX_ORDER).unwrap_or_else(|_| greedy_order(f));
    count_along_order(f, g, &order)
}

fn count_along_order<C: Count>(f: &Graph, g: &Graph, order: &[usize]) -> Result<C> {
    let n = f.order();
    let ng = g.order();
    if n == 0 {
        return Ok(C::one());
    }
    if ng == 0 {
        return Ok(C::zero());
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Separator of each eliminated vertex: its later neighbours in the filled graph.
    let mut h = f.clone();
    let mut seps: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (i, &v) in order.iter().enumerate() {
        let later: VertexSet = h.neighbours(v).iter().filter(|&w| pos[w] > i).collect();
        h = h.with_clique(later);
        seps.push(later.to_vec());
    }
    // Messages still waiting to be absorbed, keyed by the earliest separator vertex.
    let mut pending: Vec<Vec<(Vec<usize>, Vec<C>)>> = vec![Vec::new(); n];
    let mut result = C::one();
    for (i, &v) in order.iter().enumerate() {
        let sep = &seps[i];
        let k = sep.len();
        let size = ng.pow(k as u32);
        let direct: Vec<usize> = sep.iter().copied().filter(|&w| f.has_edge(v, w)).collect();
        let incoming = std::mem::take(&mut pending[i]);
        let mut table = vec![C::zero(); size];
        let mut sigma = vec![0usize; k];
        let mut value_of = vec![0usize; n];
        for (idx, slot) in table.iter_mut().enumerate() {
            let mut rem = idx;
            for s in sigma.iter_mut().rev() {
                *s = rem % ng;
                rem /= ng;
            }
            for (j, &w) in sep.iter().enumerate() {
                value_of[w] = sigma[j];
            }
            let mut allowed = g.vertices();
            for &w in &direct {
                allowed &= g.neighbours(value_of[w]);
            }
            let mut acc = C::zero();
            for x in allowed {
                value_of[v] = x;
                let mut term = C::one();
                for (vars, msg) in &incoming {
                    let mut at = 0;
                    for &w in vars {
                        at = at * ng + value_of[w];
                    }
                    if msg[at].is_zero() {
                        term = C::zero();
                        break;
                    }
                    term = term.mul(&msg[at])?;
                }
                if !term.is_zero() {
                    acc = acc.add(&term)?;
                }
            }
            *slot = acc;
        }
        match sep.iter().map(|&w| pos[w]).min() {
            Some(p) => pending[p].push((sep.clone(), table)),
            None => result = result.mul(&table[0])?,
        }
    }
    Ok(result)
}

/// Exact count with a 128-bit accumulator; [`Error::CountOverflow`] if it does not fit.
pub fn count_homs(f: &Graph, g: &Graph) -> Result<u128> {
    if f.order() <= BRUTE_FORCE_MAX_PATTERN {
        count_homs_brute(f, g)
    } else {
        count_homs_dp(f, g)
    }
}

/// Exact count with arbitrary precision.
pub fn count_homs_big(f: &Graph, g: &Graph) -> BigUint {
    let r = if f.order() <= BRUTE_FORCE_MAX_PATTERN {
        count_homs_brute(f, g)
    } else {
        count_homs_dp(f, g)
    };
    r.expect("big-integer counting cannot overflow")
}
