//! On-disk graph corpora: `graphs/NNNNN.g6` files plus an `index.json`.

use std::collections::{BTreeSet, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, decode_graph6, parse_graph6_lines, CanonicalForm, Graph};

pub const CORPUS_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: usize,
    /// graph6 of the canonically labelled representative.
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    /// Every `file:line` the graph was read from.
    pub sources: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusIndex {
    pub schema_version: u32,
    pub graphs: Vec<CorpusEntry>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub dir: PathBuf,
    pub index: CorpusIndex,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.index.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.graphs.is_empty()
    }

    pub fn graphs(&self) -> Result<Vec<Graph>> {
        self.index
            .graphs
            .iter()
            .map(|e| decode_graph6(&e.graph6))
            .collect()
    }

    pub fn load(dir: &Path) -> Result<Corpus> {
        let text = fs::read_to_string(dir.join("index.json"))?;
        Ok(Corpus {
            dir: dir.to_path_buf(),
            index: serde_json::from_str(&text)?,
        })
    }
}

/// Reads one graph6 file, reporting parse errors as `file:line`.
pub fn read_graph6_file(path: &Path) -> Result<Vec<(usize, Graph)>> {
    let text = fs::read_to_string(path)?;
    parse_graph6_lines(&text).map_err(|(line, e)| Error::Corpus {
        path: path.display().to_string(),
        line,
        source: Box::new(e),
    })
}

/// Adds the graphs in `paths` to the corpus at `dir` (created if missing),
/// deduplicating by canonical form. Entries are ordered by order, size and
/// canonical form; the directory is rewritten to match the index.
pub fn ingest_corpus(paths: &[PathBuf], dir: &Path) -> Result<Corpus> {
    let mut merged: HashMap<CanonicalForm, (Graph, BTreeSet<String>)> = HashMap::new();
    if dir.join("index.json").exists() {
        for e in Corpus::load(dir)?.index.graphs {
            let g = decode_graph6(&e.graph6)?;
            merged.insert(canonical_form(&g), (g, e.sources.into_iter().collect()));
        }
    }
    for path in paths {
        for (line, g) in read_graph6_file(path)? {
            let form = canonical_form(&g);
            let src = format!("{}:{line}", path.display());
            merged
                .entry(form)
                .or_insert_with(|| (g, BTreeSet::new()))
                .1
                .insert(src);
        }
    }
    let mut entries: Vec<(CanonicalForm, BTreeSet<String>)> =
        merged.into_iter().map(|(f, (_, s))| (f, s)).collect();
    entries.sort_by(|(a, _), (b, _)| {
        let (ga, gb) = (decode_graph6(a.as_str()), decode_graph6(b.as_str()));
        let key = |g: &Result<Graph>| g.as_ref().map(|g| (g.order(), g.size())).unwrap_or((0, 0));
        key(&ga).cmp(&key(&gb)).then_with(|| a.cmp(b))
    });
    let graphs_dir = dir.join("graphs");
    fs::create_dir_all(&graphs_dir)?;
    for old in fs::read_dir(&graphs_dir)? {
        let old = old?.path();
        if old.extension().is_some_and(|e| e == "g6") {
            fs::remove_file(old)?;
        }
    }
    let mut graphs = Vec::with_capacity(entries.len());
    for (id, (form, sources)) in entries.into_iter().enumerate() {
        let g = decode_graph6(form.as_str())?;
        fs::write(graphs_dir.join(format!("{id:05}.g6")), format!("{}\n", form.as_str()))?;
        graphs.push(CorpusEntry {
            id,
            graph6: form.0,
            order: g.order(),
            size: g.size(),
            sources: sources.into_iter().collect(),
        });
    }
    let index = CorpusIndex {
        schema_version: CORPUS_SCHEMA_VERSION,
        graphs,
    };
    fs::write(dir.join("index.json"), serde_json::to_string_pretty(&index)? + "\n")?;
    Ok(Corpus {
        dir: dir.to_path_buf(),
        index,
    })
}

/// Graphs from a corpus directory or a plain graph6 file.
pub fn load_graphs(path: &Path) -> Result<Vec<Graph>> {
    if path.is_dir() {
        Corpus::load(path)?.graphs()
    } else {
        Ok(read_graph6_file(path)?.into_iter().map(|(_, g)| g).collect())
    }
}
