//! Named verification suites and the JSON report format shared with the CLI.
//!
//! Every suite states the bounds it ran under. Sweeps over certificates are
//! cached per bound so suites that reuse them (monotonicity, distances) do not
//! recompute them.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bilabelled::{simulate_contraction, solve_contractor};
use crate::cfi::{build_cfi_pair, cfi_distinguishes};
use crate::classes::{
    deletion_distance, elimination_distance, has_minor, is_planar, minimal_excluded_minors,
    minimal_excluded_subgraphs, ClassPredicate, CliqueSumClosure, TopologicalEmbedding,
};
use crate::error::{Error, Result};
use crate::gf2::F2Matrix;
use crate::graph::named::{complete, cycle, disjoint_copies, path, star, wagner};
use crate::graph::{
    all_graphs_upto, canonical_form, connected_graphs_upto, decode_graph6, encode_graph6,
    exact_treewidth, trees_upto, CanonicalForm, Graph, VertexSet,
};
use crate::hom::{
    count_homs, count_homs_brute, count_homs_dp, enumerate_surjective_homs, Homomorphism,
    DEFAULT_HOM_BUDGET,
};
use crate::oddo::{all_oddomorphisms, classify_parity, search_oddomorphism, OddoCertificate};
use crate::reductions::{cut_vertex_reduce, separator_reduce, tree_topological_model};
use crate::util::{subsets_up_to, with_threads};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Seed for every randomized generator unless overridden.
pub const DEFAULT_SEED: u64 = 2718;

/// Suite ids with the acceptance criterion each one checks.
pub const SUITES: [(&str, u8); 10] = [
    ("v8-k5", 1),
    ("cfi-oracle", 2),
    ("separator", 3),
    ("cut-vertex", 4),
    ("monotonicity", 5),
    ("contractor", 6),
    ("tree-model", 7),
    ("distance-monotonicity", 8),
    ("excluded-structures", 9),
    ("ground-truth", 10),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Overrides the source/pattern vertex bound of the sweep-based suites.
    pub max_n: Option<usize>,
    pub seed: u64,
    /// Worker threads (0 = all cores).
    pub threads: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: None,
            seed: DEFAULT_SEED,
            threads: 0,
        }
    }
}

/// Outcome of one suite. `violations` counts failed assertions; at most
/// [`MAX_EXAMPLES`] of them are described in `examples`.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub criterion: u8,
    pub passed: bool,
    pub bound: String,
    pub checked: usize,
    pub violations: usize,
    pub examples: Vec<String>,
    pub details: Value,
}

pub const MAX_EXAMPLES: usize = 20;

#[derive(Default)]
struct Tally {
    checked: usize,
    violations: usize,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.violations += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(what);
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.violations += other.violations;
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(e);
            }
        }
    }

    fn finish(self, suite: &str, criterion: u8, bound: String, details: Value) -> SuiteOutcome {
        SuiteOutcome {
            suite: suite.to_string(),
            criterion,
            passed: self.violations == 0,
            bound,
            checked: self.checked,
            violations: self.violations,
            examples: self.examples,
            details,
        }
    }
}

/// A schema-versioned record of one command run.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub schema_version: u32,
    pub command: String,
    pub parameters: Value,
    pub seed: u64,
    pub wall_time_ms: u128,
    pub passed: bool,
    /// The enumeration bounds every claim in the payload is relative to.
    pub bounds: Vec<String>,
    pub payload: Value,
}

impl ExperimentReport {
    pub fn new(command: &str, parameters: Value, seed: u64, started: Instant) -> ExperimentReport {
        ExperimentReport {
            schema_version: REPORT_SCHEMA_VERSION,
            command: command.to_string(),
            parameters,
            seed,
            wall_time_ms: started.elapsed().as_millis(),
            passed: true,
            bounds: Vec::new(),
            payload: Value::Null,
        }
    }
}

pub fn criterion_of(name: &str) -> Result<u8> {
    SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, c)| c)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Runs one named suite.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let criterion = criterion_of(name)?;
    with_threads(cfg.threads, || match criterion {
        1 => v8_k5(),
        2 => cfi_oracle(cfg),
        3 => separator_suite(cfg),
        4 => cut_vertex_suite(cfg),
        5 => monotonicity_suite(cfg),
        6 => contractor_suite(cfg),
        7 => tree_model_suite(cfg),
        8 => distance_suite(cfg),
        9 => excluded_structures_suite(cfg),
        _ => ground_truth_suite(cfg),
    })
}

/// Runs every suite in criterion order; `"all"` in the CLI.
pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    SUITES.iter().map(|(n, _)| run_suite(n, cfg)).collect()
}

fn g6(g: &Graph) -> String {
    encode_graph6(g)
}

fn describe(cert: &OddoCertificate) -> String {
    format!("{} -> {} via {:?}", g6(cert.source()), g6(cert.target()), cert.hom.map)
}

// ---------------------------------------------------------------------------
// Criterion 1

/// All minors of `g` with at least one vertex, one per isomorphism class,
/// ordered by order, size and canonical form.
pub fn all_minors(g: &Graph) -> Vec<Graph> {
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    let mut stack = vec![g.clone()];
    seen.insert(canonical_form(g));
    while let Some(h) = stack.pop() {
        let mut next = Vec::new();
        for (u, v) in h.edges() {
            let mut d = h.clone();
            d.remove_edge(u, v).unwrap();
            next.push(d);
            next.push(h.contract_edge(u, v).unwrap());
        }
        if h.order() > 1 {
            for v in 0..h.order() {
                next.push(h.remove_vertices(VertexSet::singleton(v)).0);
            }
        }
        for m in next {
            if seen.insert(canonical_form(&m)) {
                stack.push(m);
            }
        }
        out.push(h);
    }
    out.sort_by_cached_key(|m| (m.order(), m.size(), canonical_form(m)));
    out
}

fn v8_k5() -> Result<SuiteOutcome> {
    let k5 = complete(5);
    let minors = all_minors(&wagner());
    let per_minor: Vec<Result<(Tally, usize, usize)>> = minors
        .par_iter()
        .map(|m| {
            let mut t = Tally::default();
            let (mut candidates, mut certs) = (0, 0);
            for map in enumerate_surjective_homs(m, &k5, DEFAULT_HOM_BUDGET)? {
                candidates += 1;
                let phi = Homomorphism {
                    source: m.clone(),
                    target: k5.clone(),
                    map,
                };
                let report = classify_parity(&phi);
                for a in report.odd_vertices() {
                    t.check(m.degree(a) >= 4, || {
                        format!("odd vertex {a} of degree {} in {}", m.degree(a), g6(m))
                    });
                }
                if report.is_oddomorphism() {
                    certs += 1;
                    t.fail(format!("oddomorphism {} -> K5 via {:?}", g6(m), phi.map));
                }
            }
            Ok((t, candidates, certs))
        })
        .collect();
    let mut tally = Tally::default();
    let (mut candidates, mut certs) = (0, 0);
    for r in per_minor {
        let (t, c, k) = r?;
        tally.merge(t);
        candidates += c;
        certs += k;
    }
    tally.checked += minors.len();
    Ok(tally.finish(
        "v8-k5",
        1,
        "every minor of V8 (all homomorphisms onto K5)".into(),
        json!({
            "minors": minors.len(),
            "candidate_homomorphisms": candidates,
            "certificates": certs,
        }),
    ))
}

// ---------------------------------------------------------------------------
// Criterion 2

struct CfiSweep {
    tally: Tally,
    per_base: Vec<Value>,
    /// (source, base) for every weak certificate found.
    pairs: Vec<(Graph, Graph)>,
}

static CFI_CACHE: Mutex<Option<HashMap<usize, Arc<CfiSweep>>>> = Mutex::new(None);

fn cfi_sweep(max_n: usize) -> Result<Arc<CfiSweep>> {
    if let Some(hit) = CFI_CACHE.lock().unwrap().get_or_insert_with(HashMap::new).get(&max_n) {
        return Ok(hit.clone());
    }
    let patterns = connected_graphs_upto(max_n);
    let mut tally = Tally::default();
    let mut per_base = Vec::new();
    let mut pairs = Vec::new();
    for (name, base) in [("C3", cycle(3)), ("K4", complete(4))] {
        let pair = build_cfi_pair(&base)?;
        let rows: Vec<Result<(bool, bool, Option<OddoCertificate>)>> = patterns
            .par_iter()
            .map(|f| {
                let counted = cfi_distinguishes(f, &pair);
                let cert = search_oddomorphism(f, &base, true, DEFAULT_HOM_BUDGET)?;
                if let Some(c) = &cert {
                    c.verify()?;
                }
                Ok((counted, cert.is_some(), cert))
            })
            .collect();
        let mut distinguishing = 0;
        for (f, row) in patterns.iter().zip(rows) {
            let (counted, searched, cert) = row?;
            distinguishing += counted as usize;
            tally.check(counted == searched, || {
                format!("{name}: pattern {} counts differ = {counted}, weak oddomorphism = {searched}", g6(f))
            });
            if cert.is_some() {
                pairs.push((f.clone(), base.clone()));
            }
        }
        per_base.push(json!({
            "base": name,
            "even": g6(&pair.even),
            "odd": g6(&pair.odd),
            "patterns": patterns.len(),
            "distinguishing": distinguishing,
        }));
    }
    let sweep = Arc::new(CfiSweep {
        tally,
        per_base,
        pairs,
    });
    CFI_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(max_n, sweep.clone());
    Ok(sweep)
}

fn cfi_oracle(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let n = cfg.max_n.unwrap_or(6);
    let sweep = cfi_sweep(n)?;
    let tally = Tally {
        checked: sweep.tally.checked,
        violations: sweep.tally.violations,
        examples: sweep.tally.examples.clone(),
    };
    Ok(tally.finish(
        "cfi-oracle",
        2,
        format!("connected patterns with at most {n} vertices; bases C3, K4"),
        json!({ "bases": sweep.per_base }),
    ))
}

// ---------------------------------------------------------------------------
// Plain-certificate sweep shared by criteria 3, 4, 5 and 8

pub const SWEEP_SOURCE_N: usize = 7;
pub const SWEEP_TARGET_N: usize = 4;

static CERT_CACHE: Mutex<Option<HashMap<(usize, usize), Arc<Vec<OddoCertificate>>>>> = Mutex::new(None);

/// Every plain oddomorphism `F → G` (as a map, not up to symmetry) with
/// `1 ≤ |V(F)| ≤ max_f` and `1 ≤ |V(G)| ≤ max_g`, graphs taken up to isomorphism.
pub fn plain_certificates(max_f: usize, max_g: usize) -> Result<Arc<Vec<OddoCertificate>>> {
    let key = (max_f, max_g);
    if let Some(hit) = CERT_CACHE.lock().unwrap().get_or_insert_with(HashMap::new).get(&key) {
        return Ok(hit.clone());
    }
    let sources = all_graphs_upto(max_f);
    let targets = all_graphs_upto(max_g);
    let per_source: Vec<Result<Vec<OddoCertificate>>> = sources
        .par_iter()
        .map(|f| {
            let mut out = Vec::new();
            for g in &targets {
                if g.order() > f.order() || g.size() > f.size() {
                    continue;
                }
                out.extend(all_oddomorphisms(f, g, DEFAULT_HOM_BUDGET)?);
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_source {
        all.extend(r?);
    }
    let all = Arc::new(all);
    CERT_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(key, all.clone());
    Ok(all)
}

fn sweep_bounds(cfg: &SuiteConfig) -> (usize, usize) {
    (cfg.max_n.unwrap_or(SWEEP_SOURCE_N), SWEEP_TARGET_N)
}

fn fresh_check(cert: &OddoCertificate) -> bool {
    let r = classify_parity(&cert.hom);
    r.is_oddomorphism() && r == cert.report
}

// ---------------------------------------------------------------------------
// Criterion 3

struct ReductionSweep {
    tally: Tally,
    instances: usize,
    /// (source, target) of every certificate the reductions produced.
    pairs: Vec<(Graph, Graph)>,
}

static SEP_CACHE: Mutex<Option<HashMap<(usize, usize), Arc<ReductionSweep>>>> = Mutex::new(None);
static CUT_CACHE: Mutex<Option<HashMap<(usize, usize), Arc<ReductionSweep>>>> = Mutex::new(None);

fn cached_sweep(
    cache: &Mutex<Option<HashMap<(usize, usize), Arc<ReductionSweep>>>>,
    key: (usize, usize),
    build: impl FnOnce() -> Result<ReductionSweep>,
) -> Result<Arc<ReductionSweep>> {
    if let Some(hit) = cache.lock().unwrap().get_or_insert_with(HashMap::new).get(&key) {
        return Ok(hit.clone());
    }
    let sweep = Arc::new(build()?);
    cache
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(key, sweep.clone());
    Ok(sweep)
}

/// Independent recomputation of the parity matrix of `S`.
fn recompute_parity_matrix(cert: &OddoCertificate, comps: &[VertexSet], dcomps: &[VertexSet]) -> F2Matrix {
    let report = classify_parity(&cert.hom);
    let mut p = F2Matrix::zeros(dcomps.len(), comps.len());
    for (j, d) in dcomps.iter().enumerate() {
        let x = d.first().unwrap();
        let fibre = cert.hom.fibre(x);
        for (i, c) in comps.iter().enumerate() {
            let odd = (*c & fibre).iter().filter(|&a| report.is_odd(a)).count();
            p.set(j, i, odd % 2 == 1);
        }
    }
    p
}

fn separator_instance_checks(cert: &OddoCertificate, sep: VertexSet, t: &mut Tally) -> Option<(Graph, Graph)> {
    let (f, g) = (cert.source(), cert.target());
    let image: VertexSet = sep.iter().map(|a| cert.hom.map[a]).collect();
    let comps = f.components_within(f.vertices() - sep);
    let dcomps = g.components_within(g.vertices() - image);
    if comps.len() <= dcomps.len() {
        return None;
    }
    let ctx = || format!("{} S={:?}", describe(cert), sep.to_vec());
    let red = match separator_reduce(cert, sep) {
        Ok(r) => r,
        Err(e) => {
            t.fail(format!("{}: {e}", ctx()));
            return None;
        }
    };
    let p = recompute_parity_matrix(cert, &comps, &dcomps);
    let ones = vec![true; comps.len()];
    t.check(p.mul_vec(&ones).iter().all(|&b| b), || format!("{}: P·1 ≠ 1", ctx()));
    t.check(p == red.instance.parity_matrix, || format!("{}: parity matrix differs", ctx()));
    let chosen: VertexSet = red.instance.chosen.iter().copied().collect();
    let indicator: Vec<bool> = (0..comps.len()).map(|i| chosen.contains(i)).collect();
    t.check(
        chosen.len() < comps.len() && p.mul_vec(&indicator).iter().all(|&b| b),
        || format!("{}: chosen I does not sum to 1", ctx()),
    );
    let report = classify_parity(&cert.hom);
    let c: VertexSet = chosen.iter().fold(VertexSet::EMPTY, |acc, i| acc | comps[i]);
    t.check(
        (g.vertices() - image).iter().all(|x| {
            (c & cert.hom.fibre(x)).iter().filter(|&a| report.is_odd(a)).count() % 2 == 1
        }),
        || format!("{}: C misses an odd fibre", ctx()),
    );
    t.check(fresh_check(&red.cert), || format!("{}: reduced map is not an oddomorphism", ctx()));
    let host = f.with_clique(sep).induced(c | sep).0;
    t.check(has_minor(&host, red.cert.source()), || {
        format!("{}: {} is not a minor of {}", ctx(), g6(red.cert.source()), g6(&host))
    });
    t.check(red.cert.source().order() < f.order(), || format!("{}: order did not drop", ctx()));
    Some((red.cert.source().clone(), g.clone()))
}

fn separator_sweep(key: (usize, usize)) -> Result<Arc<ReductionSweep>> {
    cached_sweep(&SEP_CACHE, key, || {
        let certs = plain_certificates(key.0, key.1)?;
        let parts: Vec<(Tally, usize, Vec<(Graph, Graph)>)> = certs
            .par_iter()
            .map(|cert| {
                let mut t = Tally::default();
                let (mut n, mut pairs) = (0, Vec::new());
                for sep in subsets_up_to(cert.source().order(), 2) {
                    if let Some(p) = separator_instance_checks(cert, sep, &mut t) {
                        n += 1;
                        pairs.push(p);
                    }
                }
                (t, n, pairs)
            })
            .collect();
        let mut sweep = ReductionSweep {
            tally: Tally::default(),
            instances: 0,
            pairs: Vec::new(),
        };
        for (t, n, p) in parts {
            sweep.tally.merge(t);
            sweep.instances += n;
            sweep.pairs.extend(p);
        }
        Ok(sweep)
    })
}

fn separator_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let key = sweep_bounds(cfg);
    let certs = plain_certificates(key.0, key.1)?.len();
    let sweep = separator_sweep(key)?;
    let tally = Tally {
        checked: sweep.tally.checked,
        violations: sweep.tally.violations,
        examples: sweep.tally.examples.clone(),
    };
    Ok(tally.finish(
        "separator",
        3,
        format!("|V(F)| <= {}, |V(G)| <= {}, |S| <= 2", key.0, key.1),
        json!({ "certificates": certs, "instances": sweep.instances }),
    ))
}

// ---------------------------------------------------------------------------
// Criterion 4

fn cut_instance_checks(cert: &OddoCertificate, s: usize, t: &mut Tally) -> Option<(Graph, Graph)> {
    let (f, g) = (cert.source(), cert.target());
    let phi = &cert.hom;
    if f.components_within(f.vertices() - VertexSet::singleton(s)).len() < 2 {
        return None;
    }
    let rest = g.vertices() - VertexSet::singleton(phi.map[s]);
    if rest.is_empty() || !g.is_connected_within(rest) {
        return None;
    }
    let ctx = || format!("{} s={s}", describe(cert));
    let red = match cut_vertex_reduce(cert, s) {
        Ok(r) => r,
        Err(e) => {
            t.fail(format!("{}: {e}", ctx()));
            return None;
        }
    };
    let before = classify_parity(phi);
    let after = classify_parity(&red.cert.hom);
    t.check(after.is_oddomorphism(), || format!("{}: reduced map is not an oddomorphism", ctx()));
    t.check(
        red.kept.iter().enumerate().all(|(l, &a)| red.cert.hom.map[l] == phi.map[a]),
        || format!("{}: (1) reduced map disagrees", ctx()),
    );
    let ci: VertexSet = red.component.iter().copied().collect();
    t.check(
        red.kept
            .iter()
            .enumerate()
            .filter(|(_, &a)| ci.contains(a))
            .all(|(l, &a)| after.is_odd(l) == before.is_odd(a)),
        || format!("{}: (2) parity changed inside C_i", ctx()),
    );
    let s_local = red.kept.iter().position(|&a| a == s).unwrap();
    let flag_due = after.is_odd(s_local) && !before.is_odd(s);
    t.check(flag_due == red.odd_partner.is_some(), || format!("{}: (3) flag mismatch", ctx()));
    if let Some(star) = red.odd_partner {
        t.check(
            star != s && !ci.contains(star) && before.is_odd(star) && phi.map[star] == phi.map[s],
            || format!("{}: (3) bad odd partner {star}", ctx()),
        );
    }
    t.check(red.cert.source().order() < f.order(), || format!("{}: order did not drop", ctx()));
    Some((red.cert.source().clone(), g.clone()))
}

fn cut_sweep(key: (usize, usize)) -> Result<Arc<ReductionSweep>> {
    cached_sweep(&CUT_CACHE, key, || {
        let certs = plain_certificates(key.0, key.1)?;
        let parts: Vec<(Tally, usize, Vec<(Graph, Graph)>)> = certs
            .par_iter()
            .map(|cert| {
                let mut t = Tally::default();
                let (mut n, mut pairs) = (0, Vec::new());
                for s in 0..cert.source().order() {
                    if let Some(p) = cut_instance_checks(cert, s, &mut t) {
                        n += 1;
                        pairs.push(p);
                    }
                }
                (t, n, pairs)
            })
            .collect();
        let mut sweep = ReductionSweep {
            tally: Tally::default(),
            instances: 0,
            pairs: Vec::new(),
        };
        for (t, n, p) in parts {
            sweep.tally.merge(t);
            sweep.instances += n;
            sweep.pairs.extend(p);
        }
        Ok(sweep)
    })
}

fn cut_vertex_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let key = sweep_bounds(cfg);
    let certs = plain_certificates(key.0, key.1)?.len();
    let sweep = cut_sweep(key)?;
    let tally = Tally {
        checked: sweep.tally.checked,
        violations: sweep.tally.violations,
        examples: sweep.tally.examples.clone(),
    };
    Ok(tally.finish(
        "cut-vertex",
        4,
        format!("|V(F)| <= {}, |V(G)| <= {}", key.0, key.1),
        json!({ "certificates": certs, "instances": sweep.instances }),
    ))
}

// ---------------------------------------------------------------------------
// Criteria 5 and 8

/// Source/target pairs of every certificate found by the sweeps of criteria
/// 1-4, one per pair of isomorphism classes. Criterion 1 finds none.
fn certificate_pairs(cfg: &SuiteConfig) -> Result<Vec<(Graph, Graph)>> {
    let key = sweep_bounds(cfg);
    let mut seen: HashSet<(CanonicalForm, CanonicalForm)> = HashSet::new();
    let mut out = Vec::new();
    let mut add = |f: &Graph, g: &Graph| {
        if seen.insert((canonical_form(f), canonical_form(g))) {
            out.push((f.clone(), g.clone()));
        }
    };
    for c in plain_certificates(key.0, key.1)?.iter() {
        add(c.source(), c.target());
    }
    for (f, g) in &cfi_sweep(cfg.max_n.unwrap_or(6))?.pairs {
        add(f, g);
    }
    for (f, g) in separator_sweep(key)?.pairs.iter().chain(&cut_sweep(key)?.pairs) {
        add(f, g);
    }
    Ok(out)
}

fn monotonicity_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let pairs = certificate_pairs(cfg)?;
    let parts: Vec<Result<Tally>> = pairs
        .par_iter()
        .map(|(f, g)| {
            let mut t = Tally::default();
            let ctx = || format!("{} -> {}", g6(f), g6(g));
            t.check(!is_planar(f) || is_planar(g), || format!("{}: planarity lost", ctx()));
            let (tf, tg) = (exact_treewidth(f)?.0, exact_treewidth(g)?.0);
            t.check(tf >= tg, || format!("{}: tw {tf} < {tg}", ctx()));
            t.check(f.max_degree() >= g.max_degree(), || format!("{}: max degree drops", ctx()));
            Ok(t)
        })
        .collect();
    let mut tally = Tally::default();
    for p in parts {
        tally.merge(p?);
    }
    let (a, b) = sweep_bounds(cfg);
    Ok(tally.finish(
        "monotonicity",
        5,
        format!("certificates of the sweeps with |V(F)| <= {a}, |V(G)| <= {b}, CFI patterns <= {}", cfg.max_n.unwrap_or(6)),
        json!({ "pairs": pairs.len() }),
    ))
}

fn distance_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let pairs = certificate_pairs(cfg)?;
    let preds = [ClassPredicate::Edgeless, ClassPredicate::Forests, ClassPredicate::Planar];
    let parts: Vec<Result<Tally>> = pairs
        .par_iter()
        .map(|(f, g)| {
            let mut t = Tally::default();
            for p in preds {
                let ctx = || format!("{} -> {} [{p}]", g6(f), g6(g));
                let (df, dg) = (deletion_distance(f, p)?, deletion_distance(g, p)?);
                t.check(df >= dg, || format!("{}: dd {df} < {dg}", ctx()));
                let (ef, eg) = (elimination_distance(f, p)?, elimination_distance(g, p)?);
                t.check(ef >= eg, || format!("{}: ed {ef} < {eg}", ctx()));
            }
            Ok(t)
        })
        .collect();
    let mut tally = Tally::default();
    for p in parts {
        tally.merge(p?);
    }
    let (a, b) = sweep_bounds(cfg);
    Ok(tally.finish(
        "distance-monotonicity",
        8,
        format!("certificates of the sweeps with |V(F)| <= {a}, |V(G)| <= {b}; edgeless, forests, planar"),
        json!({ "pairs": pairs.len() }),
    ))
}

// ---------------------------------------------------------------------------
// Criterion 6

fn random_graph_with_edge(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    loop {
        let n = rng.gen_range(lo..=hi);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if g.size() > 0 {
            return g;
        }
    }
}

pub const CONTRACTOR_MAX_EDGES: usize = 6;

/// Series-parallel terms cannot tell false twins apart, nor see isolated vertices.
fn has_isolated_or_false_twins(g: &Graph) -> bool {
    (0..g.order()).any(|v| {
        g.degree(v) == 0 || (v + 1..g.order()).any(|w| g.neighbours(v) == g.neighbours(w))
    })
}

fn contractor_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tally = Tally::default();
    let mut solved = Vec::new();
    let mut infeasible = Vec::new();
    for _ in 0..25 {
        let g = random_graph_with_edge(&mut rng, 2, 4);
        let h = random_graph_with_edge(&mut rng, 2, 4);
        let instances: Vec<(Graph, (usize, usize))> = (0..10)
            .map(|_| {
                let f = random_graph_with_edge(&mut rng, 2, 5);
                let edges = f.edges();
                let e = edges[rng.gen_range(0..edges.len())];
                (f, e)
            })
            .collect();
        match solve_contractor(&g, &h, CONTRACTOR_MAX_EDGES, DEFAULT_HOM_BUDGET) {
            Ok(alpha) => {
                for (f, (u, v)) in &instances {
                    let contracted = f.contract_edge(*u, *v)?;
                    for target in [&g, &h] {
                        let want = BigInt::from(count_homs(&contracted, target)?);
                        match simulate_contraction(f, (*u, *v), target, &alpha, DEFAULT_HOM_BUDGET) {
                            Ok(got) => tally.check(got == want, || {
                                format!("F={} e={u}{v} G={}: simulated {got}, expected {want}", g6(f), g6(target))
                            }),
                            Err(e) => tally.fail(format!("F={} e={u}{v} G={}: {e}", g6(f), g6(target))),
                        }
                    }
                }
                solved.push(json!({ "g": g6(&g), "h": g6(&h), "terms": alpha.terms.len(), "contractor": alpha }));
            }
            Err(Error::NoContractorFound { .. }) => {
                let degenerate = has_isolated_or_false_twins(&g) || has_isolated_or_false_twins(&h);
                infeasible.push(json!({ "g": g6(&g), "h": g6(&h), "degenerate": degenerate }));
            }
            Err(e) => tally.fail(format!("G={} H={}: {e}", g6(&g), g6(&h))),
        }
    }
    Ok(tally.finish(
        "contractor",
        6,
        format!("25 target pairs with 2..=4 vertices, series-parallel terms with <= {CONTRACTOR_MAX_EDGES} edges, patterns with <= 5 vertices"),
        json!({ "solved": solved, "infeasible": infeasible }),
    ))
}

// ---------------------------------------------------------------------------
// Criterion 7

fn tree_model_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let n = cfg.max_n.unwrap_or(7);
    let trees = trees_upto(n);
    let mut tally = Tally::default();
    let mut models = 0;
    for (name, target) in [("P5", path(5)), ("K1,3", star(3))] {
        for f in &trees {
            for cert in all_oddomorphisms(f, &target, DEFAULT_HOM_BUDGET)? {
                models += 1;
                let ctx = describe(&cert);
                match tree_topological_model(&cert) {
                    Ok(m) => {
                        let report = classify_parity(&cert.hom);
                        let injective = m.rho.iter().collect::<HashSet<_>>().len() == m.rho.len();
                        tally.check(injective, || format!("{ctx} [{name}]: rho not injective"));
                        tally.check(
                            m.rho.iter().enumerate().all(|(v, &r)| cert.hom.map[r] == v),
                            || format!("{ctx} [{name}]: phi(rho(v)) != v"),
                        );
                        tally.check(
                            m.rho.iter().all(|&r| report.is_odd(r)),
                            || format!("{ctx} [{name}]: rho(v) not odd"),
                        );
                        let emb = TopologicalEmbedding {
                            branch: m.rho.clone(),
                            paths: m.paths.clone(),
                        };
                        let structural = emb.verify(&target, f);
                        tally.check(structural.is_ok(), || format!("{ctx} [{name}]: {structural:?}"));
                    }
                    Err(e) => tally.fail(format!("{ctx} [{name}]: {e}")),
                }
            }
        }
    }
    Ok(tally.finish(
        "tree-model",
        7,
        format!("trees with at most {n} vertices onto P5 and K1,3"),
        json!({ "trees": trees.len(), "oddomorphisms": models }),
    ))
}

// ---------------------------------------------------------------------------
// Criterion 9

pub const EXCLUDED_BASE_N: usize = 4;

fn excluded_structures_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let n = cfg.max_n.unwrap_or(7);
    let base = |g: &Graph| g.order() <= EXCLUDED_BASE_N;
    let mut tally = Tally::default();
    let mut one_sum = CliqueSumClosure::new(base, 1);
    let subgraphs = minimal_excluded_subgraphs(&mut one_sum, n);
    for g in &subgraphs {
        tally.check(g.is_k_connected(2), || format!("minimal excluded subgraph {} is not 2-connected", g6(g)));
    }
    let mut two_sum = CliqueSumClosure::new(base, 2);
    let minors = minimal_excluded_minors(&mut two_sum, n);
    for g in &minors {
        tally.check(g.is_k_connected(3), || format!("minimal excluded minor {} is not 3-connected", g6(g)));
    }
    Ok(tally.finish(
        "excluded-structures",
        9,
        format!("base: graphs on <= {EXCLUDED_BASE_N} vertices; candidates with <= {n} vertices"),
        json!({
            "excluded_subgraphs_1sum": subgraphs.iter().map(g6).collect::<Vec<_>>(),
            "excluded_minors_2sum": minors.iter().map(g6).collect::<Vec<_>>(),
        }),
    ))
}

// ---------------------------------------------------------------------------
// Criterion 10

/// The round-trip corpus: every graph with at most 6 vertices, then random
/// graphs of order up to 128 until there are 1000.
pub fn round_trip_corpus(seed: u64) -> Vec<Graph> {
    let mut out = all_graphs_upto(6);
    out.insert(0, Graph::new(0));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < 1000 {
        let n = rng.gen_range(0..=128);
        let p: f64 = rng.gen_range(0.0..1.0);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        out.push(g);
    }
    out
}

fn ground_truth_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut tally = Tally::default();
    let corpus = round_trip_corpus(cfg.seed);
    for g in &corpus {
        let s = encode_graph6(g);
        match decode_graph6(&s) {
            Ok(back) => {
                tally.check(back == *g, || format!("decode(encode) differs for {s}"));
                tally.check(encode_graph6(&back) == s, || format!("encode(decode) differs for {s}"));
            }
            Err(e) => tally.fail(format!("{s}: {e}")),
        }
    }
    let small = all_graphs_upto(5);
    let mut pairs = 0;
    for f in &small {
        for g in &small {
            pairs += 1;
            let brute: u128 = count_homs_brute(f, g)?;
            let dp: u128 = count_homs_dp(f, g)?;
            tally.check(brute == dp, || format!("hom({}, {}): brute {brute}, dp {dp}", g6(f), g6(g)));
        }
    }
    let c3 = cycle(3);
    let c4_k3 = count_homs(&cycle(4), &c3)?;
    let c3_2c3 = count_homs(&c3, &disjoint_copies(&c3, 2))?;
    let c3_c6 = count_homs(&c3, &cycle(6))?;
    tally.check(c4_k3 == 18, || format!("hom(C4, K3) = {c4_k3}"));
    tally.check(c3_2c3 == 12, || format!("hom(C3, 2C3) = {c3_2c3}"));
    tally.check(c3_c6 == 0, || format!("hom(C3, C6) = {c3_c6}"));
    Ok(tally.finish(
        "ground-truth",
        10,
        "1000-graph graph6 corpus; all pattern/target pairs with at most 5 vertices".into(),
        json!({
            "corpus": corpus.len(),
            "hom_pairs": pairs,
            "hom_c4_k3": c4_k3,
            "hom_c3_2c3": c3_2c3,
            "hom_c3_c6": c3_c6,
        }),
    ))
}
