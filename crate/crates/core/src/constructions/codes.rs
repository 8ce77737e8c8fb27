use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{HntError, Result};
use crate::hamming::{Code, GraphParams, Symbol, Vertex};

// Largest code any builder will materialise.
const MAX_WORDS: u64 = 1 << 26;

/// The repetition code: the `q` constant vertices.
pub fn rep(m: usize, q: usize) -> Result<Code> {
    let params = GraphParams::new(m, q)?;
    let words = (0..q as Symbol).map(|a| Vertex::constant(params, a).unwrap());
    Code::new(params, words)
}

/// Vertices whose entries are pairwise distinct; needs `m < q`.
pub fn inj(m: usize, q: usize) -> Result<Code> {
    if m >= q {
        return Err(HntError::param(format!(
            "Inj(m,q) needs m < q, got m={m}, q={q}"
        )));
    }
    let params = GraphParams::new(m, q)?;
    let size = ((q - m + 1)..=q).try_fold(1u64, |acc, f| acc.checked_mul(f as u64));
    check_size(size)?;
    let words = (0..q as Symbol)
        .permutations(m)
        .map(|s| params.encode(&s))
        .collect();
    Ok(Code::collect_indices(params, words).unwrap())
}

/// Binary vertices of weight `(m-1)/2` or `(m+1)/2`; needs odd `m >= 3`.
pub fn w_code(m: usize) -> Result<Code> {
    if m < 3 || m % 2 == 0 {
        return Err(HntError::param(format!("W needs odd m >= 3, got m={m}")));
    }
    let params = GraphParams::new(m, 2)?;
    let lo = (m - 1) / 2;
    let words = (lo..=lo + 1)
        .flat_map(|w| (0..m).combinations(w))
        .map(|ones| ones.iter().map(|&i| 1u64 << i).sum())
        .collect();
    Ok(Code::collect_indices(params, words).unwrap())
}

/// Vertices of `H(pq,q)` in which every symbol occurs exactly `p` times.
pub fn all_code(p: usize, q: usize) -> Result<Code> {
    if p == 0 {
        return Err(HntError::param("All(pq,q) needs p >= 1"));
    }
    let m = p
        .checked_mul(q)
        .ok_or_else(|| HntError::param("p*q overflows"))?;
    let params = GraphParams::new(m, q)?;
    // multinomial (pq)! / (p!)^q, built as a product of binomials
    let mut size = Some(1u64);
    for s in 0..q {
        size = size.and_then(|acc| acc.checked_mul(binomial((q - s) * p, p)?));
    }
    check_size(size)?;
    let mut words = Vec::new();
    let mut counts = vec![p; q];
    let mut current = vec![0 as Symbol; m];
    fill_multiset(&mut counts, &mut current, 0, params, &mut words);
    Ok(Code::collect_indices(params, words).unwrap())
}

fn fill_multiset(
    counts: &mut [usize],
    current: &mut [Symbol],
    pos: usize,
    params: GraphParams,
    out: &mut Vec<u64>,
) {
    if pos == current.len() {
        out.push(params.encode(current));
        return;
    }
    for s in 0..counts.len() {
        if counts[s] > 0 {
            counts[s] -= 1;
            current[pos] = s as Symbol;
            fill_multiset(counts, current, pos + 1, params, out);
            counts[s] += 1;
        }
    }
}

/// `{(a_1, ..., a_l) : a_i in C}` in `H(ml, q)`, block `i` occupying
/// entries `i*m .. (i+1)*m`.
pub fn prod_code(code: &Code, l: usize) -> Result<Code> {
    let params = GraphParams::new(code.params().m() * check_l(l)?, code.params().q())?;
    check_size((code.len() as u64).checked_pow(l as u32))?;
    let shift = code.params().vertex_count();
    let mut words = vec![0u64];
    // block i contributes w * shift^i
    for i in 0..l {
        let scale = shift.pow(i as u32);
        words = words
            .iter()
            .flat_map(|&acc| code.indices().iter().map(move |&w| acc + w * scale))
            .collect();
    }
    Ok(Code::collect_indices(params, words).unwrap())
}

/// `{(a, ..., a) : a in C}` in `H(ml, q)`.
pub fn rep_l_code(code: &Code, l: usize) -> Result<Code> {
    let params = GraphParams::new(code.params().m() * check_l(l)?, code.params().q())?;
    let shift = code.params().vertex_count();
    let words = code
        .indices()
        .iter()
        .map(|&w| (0..l).map(|i| w * shift.pow(i as u32)).sum())
        .collect();
    Ok(Code::collect_indices(params, words).unwrap())
}

/// The single vertex `(a, ..., a)`.
pub fn singleton(m: usize, q: usize, a: Symbol) -> Result<Code> {
    let params = GraphParams::new(m, q)?;
    Code::new(params, [Vertex::constant(params, a)?])
}

fn check_l(l: usize) -> Result<usize> {
    if l == 0 {
        Err(HntError::param("l must be at least 1"))
    } else {
        Ok(l)
    }
}

fn check_size(size: Option<u64>) -> Result<()> {
    match size {
        Some(n) if n <= MAX_WORDS => Ok(()),
        _ => Err(HntError::Budget {
            what: "code construction",
            budget: MAX_WORDS,
            needed: size.unwrap_or(u64::MAX),
        }),
    }
}

fn binomial(n: usize, k: usize) -> Option<u64> {
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u64)? / (i as u64 + 1);
    }
    Some(acc)
}

/// A named member of one of the code families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum CodeFamily {
    Rep { m: usize, q: usize },
    Inj { m: usize, q: usize },
    W { m: usize },
    All { p: usize, q: usize },
    Prod { inner: Box<CodeFamily>, l: usize },
    RepL { inner: Box<CodeFamily>, l: usize },
    Singleton { m: usize, q: usize, a: Symbol },
}

impl CodeFamily {
    pub fn build(&self) -> Result<Code> {
        match self {
            CodeFamily::Rep { m, q } => rep(*m, *q),
            CodeFamily::Inj { m, q } => inj(*m, *q),
            CodeFamily::W { m } => w_code(*m),
            CodeFamily::All { p, q } => all_code(*p, *q),
            CodeFamily::Prod { inner, l } => prod_code(&inner.build()?, *l),
            CodeFamily::RepL { inner, l } => rep_l_code(&inner.build()?, *l),
            CodeFamily::Singleton { m, q, a } => singleton(*m, *q, *a),
        }
    }
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeFamily::Rep { m, q } => write!(f, "Rep({m},{q})"),
            CodeFamily::Inj { m, q } => write!(f, "Inj({m},{q})"),
            CodeFamily::W { m } => write!(f, "W([{m}/2],2)"),
            CodeFamily::All { p, q } => write!(f, "All({},{q})", p * q),
            CodeFamily::Prod { inner, l } => write!(f, "Prod({inner},{l})"),
            CodeFamily::RepL { inner, l } => write!(f, "Rep_{l}({inner})"),
            CodeFamily::Singleton { m, a, .. } => {
                write!(f, "{{({})}}", vec![a.to_string(); *m].join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamming::{covering_radius, min_distance, num_profile, NumProfile};

    #[test]
    fn sizes() {
        assert_eq!(rep(3, 5).unwrap().len(), 5);
        assert_eq!(inj(2, 3).unwrap().len(), 6);
        assert_eq!(inj(3, 4).unwrap().len(), 24);
        assert_eq!(w_code(3).unwrap().len(), 6);
        assert_eq!(w_code(5).unwrap().len(), 20);
        assert_eq!(all_code(1, 3).unwrap().len(), 6);
        assert_eq!(all_code(2, 2).unwrap().len(), 6);
        assert_eq!(all_code(2, 3).unwrap().len(), 90);
        assert_eq!(prod_code(&rep(2, 5).unwrap(), 2).unwrap().len(), 25);
        assert_eq!(rep_l_code(&rep(2, 3).unwrap(), 2).unwrap().len(), 3);
    }

    #[test]
    fn parameter_errors() {
        assert!(inj(3, 3).is_err());
        assert!(w_code(4).is_err());
        assert!(w_code(1).is_err());
        assert!(all_code(0, 3).is_err());
        assert!(prod_code(&rep(2, 2).unwrap(), 0).is_err());
    }

    #[test]
    fn distances() {
        assert_eq!(min_distance(&rep(3, 5).unwrap()).unwrap(), 3);
        assert_eq!(min_distance(&inj(3, 4).unwrap()).unwrap(), 1);
        assert_eq!(min_distance(&w_code(5).unwrap()).unwrap(), 1);
        assert_eq!(
            min_distance(&prod_code(&rep(2, 5).unwrap(), 2).unwrap()).unwrap(),
            2
        );
        assert_eq!(
            min_distance(&rep_l_code(&rep(2, 5).unwrap(), 3).unwrap()).unwrap(),
            6
        );
        assert_eq!(covering_radius(&inj(2, 3).unwrap(), 1000).unwrap(), 1);
    }

    #[test]
    fn one_fold_constructions_are_identity() {
        let c = inj(2, 4).unwrap();
        assert_eq!(prod_code(&c, 1).unwrap(), c);
        assert_eq!(rep_l_code(&c, 1).unwrap(), c);
    }

    #[test]
    fn prod_layout() {
        let c = prod_code(&rep(2, 3).unwrap(), 2).unwrap();
        let v = Vertex::new(c.params(), vec![1, 1, 2, 2]).unwrap();
        assert!(c.contains(&v));
        let w = Vertex::new(c.params(), vec![1, 2, 1, 2]).unwrap();
        assert!(!c.contains(&w));
    }

    #[test]
    fn families_satisfy_num_conditions() {
        let p = GraphParams::new(5, 2).unwrap();
        let want = NumProfile::from_pairs(p, &[(3, 1), (2, 1)]).unwrap();
        assert!(w_code(5).unwrap().words().all(|v| num_profile(&v) == want));
        let all = all_code(2, 3).unwrap();
        let want = NumProfile::from_pairs(all.params(), &[(2, 3)]).unwrap();
        assert!(all.words().all(|v| num_profile(&v) == want));
        let inj = inj(3, 5).unwrap();
        let want = NumProfile::from_pairs(inj.params(), &[(1, 3)]).unwrap();
        assert!(inj.words().all(|v| num_profile(&v) == want));
    }

    #[test]
    fn family_display_and_build() {
        let f = CodeFamily::Prod {
            inner: Box::new(CodeFamily::Rep { m: 2, q: 5 }),
            l: 2,
        };
        assert_eq!(f.to_string(), "Prod(Rep(2,5),2)");
        assert_eq!(f.build().unwrap().len(), 25);
        assert_eq!(CodeFamily::All { p: 1, q: 3 }.to_string(), "All(3,3)");
    }
}
