//! Golden-value fixtures shared by the core and CLI test suites.
//!
//! Entries are written `c` or `c h^k` without the space, e.g. `-21/2h^2`.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use jordan_core::exact::{parse_rational, BiPoly, PolyMatrix};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn parse_entry(s: &str) -> BiPoly {
    let (c, k) = match s.split_once("h^") {
        Some((c, k)) => (c, k.parse::<u32>().expect("h degree")),
        None => (s, 0),
    };
    BiPoly::monomial(parse_rational(c).expect("coefficient"), 0, k)
}

/// Sections of `j7half.txt`, keyed `"verma X"`, `"diagonal Y"` and so on.
pub fn golden_matrices() -> BTreeMap<String, PolyMatrix> {
    let mut out = BTreeMap::new();
    let mut current: Option<(String, Vec<Vec<BiPoly>>)> = None;
    let flush = |cur: Option<(String, Vec<Vec<BiPoly>>)>, out: &mut BTreeMap<String, PolyMatrix>| {
        if let Some((name, rows)) = cur {
            out.insert(name, PolyMatrix::from_rows(rows).expect("rectangular"));
        }
    };
    for line in read("j7half.txt").lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            flush(current.take(), &mut out);
            current = Some((name.to_string(), Vec::new()));
        } else {
            let (_, rows) = current.as_mut().expect("row before section header");
            rows.push(line.split_whitespace().map(parse_entry).collect());
        }
    }
    flush(current, &mut out);
    out
}

/// `λ -> [C_1, C_2, ...]` for λ = 0..7.
pub fn golden_singular_vectors() -> Vec<(u32, Vec<BiPoly>)> {
    read("singular_vectors.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (lam, rest) = l.split_once(':').expect("lambda:");
            (lam.trim().parse().unwrap(), rest.split_whitespace().map(parse_entry).collect())
        })
        .collect()
}

/// First differing entry, as `"(i,j): got .. want .."`.
pub fn locate_mismatch(got: &PolyMatrix, want: &PolyMatrix) -> Option<String> {
    if got.rows() != want.rows() || got.cols() != want.cols() {
        return Some(format!("shape {}x{} vs {}x{}", got.rows(), got.cols(), want.rows(), want.cols()));
    }
    for i in 0..got.rows() {
        for j in 0..got.cols() {
            if got.get(i, j) != want.get(i, j) {
                return Some(format!("({i},{j}): got {} want {}", got.get(i, j), want.get(i, j)));
            }
        }
    }
    None
}
