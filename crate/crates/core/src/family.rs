//! Finite pattern families and the search for a distinguishing pattern.

use std::collections::HashSet;
use std::path::PathBuf;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{is_planar, ClassPredicate};
use crate::corpus::load_graphs;
use crate::error::{Error, Result};
use crate::graph::{all_graphs_upto, canonical_form, CanonicalForm, Graph};
use crate::hom::count_homs_big;
use crate::util::with_threads;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    AllGraphs,
    AllConnected,
    Trees,
    Planar,
    UserCorpus,
    PredicateFiltered,
}

/// A finite family of patterns: all graphs of a kind with at most `max_n`
/// vertices (and at most `max_m` edges), optionally filtered by a predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub max_n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicate: Option<ClassPredicate>,
    /// graph6 file or corpus directory, for `user-corpus`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corpus: Option<PathBuf>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, max_n: usize) -> FamilySpec {
        FamilySpec {
            kind,
            max_n,
            max_m: None,
            predicate: None,
            corpus: None,
        }
    }

    pub fn with_predicate(mut self, p: ClassPredicate) -> FamilySpec {
        self.predicate = Some(p);
        self
    }

    /// Membership ignoring the size bounds.
    fn kind_contains(&self, g: &Graph) -> Result<bool> {
        Ok(match self.kind {
            FamilyKind::AllGraphs | FamilyKind::UserCorpus => true,
            FamilyKind::AllConnected => g.is_connected(),
            FamilyKind::Trees => g.is_tree(),
            FamilyKind::Planar => is_planar(g),
            FamilyKind::PredicateFiltered => {
                if self.predicate.is_none() {
                    return Err(Error::Precondition(
                        "predicate-filtered family needs a predicate".into(),
                    ));
                }
                true
            }
        })
    }

    /// Whether `g` is in the family (within its bounds).
    pub fn contains(&self, g: &Graph) -> Result<bool> {
        if g.order() > self.max_n || self.max_m.is_some_and(|m| g.size() > m) {
            return Ok(false);
        }
        if !self.kind_contains(g)? {
            return Ok(false);
        }
        if let Some(p) = self.predicate {
            if !p.contains(g)? {
                return Ok(false);
            }
        }
        if self.kind == FamilyKind::UserCorpus {
            let form = canonical_form(g);
            return Ok(self.enumerate()?.iter().any(|h| canonical_form(h) == form));
        }
        Ok(true)
    }

    /// The members, one per isomorphism class, ordered by order, size and canonical form.
    pub fn enumerate(&self) -> Result<Vec<Graph>> {
        let pool: Vec<Graph> = match self.kind {
            FamilyKind::UserCorpus => {
                let path = self.corpus.as_ref().ok_or_else(|| {
                    Error::Precondition("user-corpus family needs a corpus path".into())
                })?;
                let mut seen: HashSet<CanonicalForm> = HashSet::new();
                let mut keyed: Vec<(usize, usize, CanonicalForm, Graph)> = Vec::new();
                for g in load_graphs(path)? {
                    let form = canonical_form(&g);
                    if seen.insert(form.clone()) {
                        keyed.push((g.order(), g.size(), form, g));
                    }
                }
                keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
                keyed.into_iter().map(|k| k.3).collect()
            }
            _ => all_graphs_upto(self.max_n),
        };
        let mut out = Vec::new();
        for g in pool {
            if g.order() > self.max_n || self.max_m.is_some_and(|m| g.size() > m) {
                continue;
            }
            if !self.kind_contains(&g)? {
                continue;
            }
            if let Some(p) = self.predicate {
                if !p.contains(&g)? {
                    continue;
                }
            }
            out.push(g);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distinguisher {
    #[serde(serialize_with = "crate::serde_graph6")]
    pub pattern: Graph,
    pub count_g: BigUint,
    pub count_h: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinguisherReport {
    /// First pattern in enumeration order with different counts.
    pub witness: Option<Distinguisher>,
    /// Patterns examined (all of them when there is no witness).
    pub checked: usize,
    /// The family's vertex bound: "indistinguishable" means up to this order only.
    pub verified_up_to_n: usize,
}

/// Searches the family for a pattern with different homomorphism counts into
/// `g` and `h`. At most `max_patterns` patterns are examined; the search is
/// parallel but always returns the first witness in enumeration order.
pub fn find_distinguisher(
    g: &Graph,
    h: &Graph,
    family: &FamilySpec,
    max_patterns: Option<usize>,
    threads: usize,
) -> Result<DistinguisherReport> {
    let patterns = family.enumerate()?;
    let limit = max_patterns.unwrap_or(usize::MAX);
    let considered = &patterns[..patterns.len().min(limit)];
    let hit = with_threads(threads, || {
        considered
            .par_iter()
            .position_first(|f| count_homs_big(f, g) != count_homs_big(f, h))
    });
    match hit {
        Some(i) => {
            let f = &considered[i];
            Ok(DistinguisherReport {
                witness: Some(Distinguisher {
                    pattern: f.clone(),
                    count_g: count_homs_big(f, g),
                    count_h: count_homs_big(f, h),
                }),
                checked: i + 1,
                verified_up_to_n: family.max_n,
            })
        }
        None if considered.len() < patterns.len() => Err(Error::BudgetExceeded(format!(
            "checked {} of {} patterns without finding a distinguisher",
            considered.len(),
            patterns.len()
        ))),
        None => Ok(DistinguisherReport {
            witness: None,
            checked: patterns.len(),
            verified_up_to_n: family.max_n,
        }),
    }
}
