use itertools::Itertools;

use crate::error::{HntError, Result};
use crate::exec::{self, Execution};
use crate::hamming::{Code, GraphParams, Symbol, Vertex};

/// Number of entries in which `a` and `b` differ.
pub fn hamming_distance(a: &Vertex, b: &Vertex) -> Result<usize> {
    a.params().ensure_same(b.params())?;
    Ok(a.symbols()
        .iter()
        .zip(b.symbols())
        .filter(|(x, y)| x != y)
        .count())
}

/// Hamming distance between two radix indices of the same graph.
pub(crate) fn index_distance(params: GraphParams, mut a: u64, mut b: u64) -> usize {
    let q = params.q() as u64;
    let mut d = 0;
    for _ in 0..params.m() {
        if a % q != b % q {
            d += 1;
        }
        a /= q;
        b /= q;
    }
    d
}

/// Minimum pairwise distance of a code with at least two words.
pub fn min_distance(code: &Code) -> Result<usize> {
    min_distance_with(code, Execution::default())
}

pub fn min_distance_with(code: &Code, exec: Execution) -> Result<usize> {
    if code.len() < 2 {
        return Err(HntError::UndefinedForSingleton);
    }
    let params = code.params();
    let words = code.indices();
    let positions: Vec<usize> = (0..words.len() - 1).collect();
    let per_word = exec::map(exec, &positions, |&i| {
        words[i + 1..]
            .iter()
            .map(|&u| index_distance(params, words[i], u))
            .min()
            .unwrap()
    });
    Ok(per_word.into_iter().min().unwrap())
}

/// Distance from `v` to the nearest codeword.
pub fn dist_to_code(v: &Vertex, code: &Code) -> Result<usize> {
    v.params().ensure_same(code.params())?;
    let idx = v.index();
    Ok(code
        .indices()
        .iter()
        .map(|&w| index_distance(code.params(), idx, w))
        .min()
        .unwrap())
}

/// All vertices at distance exactly `r` from `v`, in index order.
///
/// Returns an empty set when `r > m`.
pub fn sphere(v: &Vertex, r: usize) -> Vec<Vertex> {
    let params = v.params();
    let (m, q) = (params.m(), params.q() as Symbol);
    if r > m {
        return Vec::new();
    }
    let mut out = Vec::new();
    for positions in (0..m).combinations(r) {
        // each chosen position takes one of the q-1 other symbols
        let choices = positions
            .iter()
            .map(|&i| (0..q).filter(move |&s| s != v.get(i)))
            .multi_cartesian_product();
        if r == 0 {
            out.push(v.clone());
            continue;
        }
        for symbols in choices {
            let mut w = v.symbols().to_vec();
            for (&i, s) in positions.iter().zip(symbols) {
                w[i] = s;
            }
            out.push(Vertex::from_symbols_unchecked(params, w));
        }
    }
    out.sort();
    out
}
