use std::fs;

use homind::corpus::{ingest_corpus, load_graphs, Corpus};
use homind::Error;

#[test]
fn ingest_is_idempotent_and_deduplicates() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    // K2 twice (second copy relabelled identically), P3 in two labellings, K3.
    fs::write(&input, "A_\nA_\nBW\nBo\nBw\n").unwrap();
    let out = dir.path().join("corpus");
    let first = ingest_corpus(&[input.clone()], &out).unwrap();
    assert_eq!(first.len(), 3);
    let snapshot = fs::read_to_string(out.join("index.json")).unwrap();
    let second = ingest_corpus(&[input.clone()], &out).unwrap();
    assert_eq!(second.index, first.index);
    assert_eq!(fs::read_to_string(out.join("index.json")).unwrap(), snapshot);
    let files = fs::read_dir(out.join("graphs")).unwrap().count();
    assert_eq!(files, 3);
    let p3 = &first.index.graphs[1];
    assert_eq!(p3.order, 3);
    assert_eq!(p3.size, 2);
    assert_eq!(p3.sources.len(), 2);
    assert!(p3.sources[0].ends_with("in.g6:3"));
    assert_eq!(Corpus::load(&out).unwrap().index, first.index);
    assert_eq!(load_graphs(&out).unwrap().len(), 3);
}

#[test]
fn ingest_merges_into_existing_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.g6"), dir.path().join("b.g6"));
    fs::write(&a, "A_\n").unwrap();
    fs::write(&b, "Bw\nA_\n").unwrap();
    let out = dir.path().join("c");
    ingest_corpus(&[a], &out).unwrap();
    let merged = ingest_corpus(&[b], &out).unwrap();
    assert_eq!(merged.len(), 2);
    assert_eq!(merged.index.graphs[0].sources.len(), 2);
}

#[test]
fn malformed_line_names_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.g6");
    fs::write(&input, "A_\nBw\nB!\n").unwrap();
    let err = ingest_corpus(&[input], &dir.path().join("c")).unwrap_err();
    match &err {
        Error::Corpus { path, line, .. } => {
            assert!(path.ends_with("bad.g6"));
            assert_eq!(*line, 3);
        }
        other => panic!("unexpected error {other}"),
    }
    assert!(err.to_string().contains("bad.g6:3"));
}
