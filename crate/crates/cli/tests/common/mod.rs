#![allow(dead_code)]

use std::path::PathBuf;

use freediv::{Polynomial, Ring};
use freediv_cli::DivisorInput;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every corpus input, sorted by label.
pub fn corpus() -> Vec<DivisorInput> {
    let mut v: Vec<DivisorInput> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .map(|p| DivisorInput::from_path(&p).unwrap())
        .collect();
    v.sort_by(|a, b| a.label.cmp(&b.label));
    v
}

pub fn member(label: &str) -> DivisorInput {
    corpus().into_iter().find(|d| d.label == label).expect("corpus member")
}

pub fn parsed(d: &DivisorInput) -> (Ring, Polynomial) {
    let r = d.ring().unwrap();
    let f = d.polynomial(&r).unwrap();
    (r, f)
}
