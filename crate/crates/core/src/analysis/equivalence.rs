use std::collections::HashMap;

use crate::constructions::full_aut_group;
use crate::error::{HntError, Result};
use crate::groups::{stabilises, AutElem, EnumeratedGroup, Perm};
use crate::hamming::{index_distance, Code, GraphParams, Symbol};
use crate::Budgets;

/// Finds `x` in `Aut(H(m,q))` with `C^x = C'`, or proves none exists.
///
/// Backtracks over (source entry, target entry, alphabet bijection),
/// constraining each symbol by how it is spread over the classes of words
/// that agree on the entries mapped so far. When the node budget runs out
/// the search falls back to filtering all of `Aut(H(m,q))` if that fits the
/// element budget, and otherwise reports `Inconclusive`.
pub fn is_equivalent(a: &Code, b: &Code, budgets: &Budgets) -> Result<Option<AutElem>> {
    a.params().ensure_same(b.params())?;
    if a.len() != b.len() || distance_profile(a) != distance_profile(b) {
        return Ok(None);
    }
    let mut search = Search::new(a, b, budgets.search_nodes, true);
    match search.run() {
        Ok(()) => Ok(search.found.pop()),
        Err(nodes) => {
            let g = full_group_if_affordable(a.params(), budgets, nodes)?;
            Ok(g.elements().iter().find(|x| maps_onto(x, a, b)).cloned())
        }
    }
}

/// `Aut(C)`, the setwise stabiliser of `C` in `Aut(H(m,q))`.
pub fn code_automorphisms(code: &Code, budgets: &Budgets) -> Result<EnumeratedGroup> {
    let mut search = Search::new(code, code, budgets.search_nodes, false);
    search.element_budget = budgets.elements;
    match search.run() {
        Ok(()) => {
            let mut els = std::mem::take(&mut search.found);
            els.sort();
            Ok(EnumeratedGroup::from_sorted_subgroup(code.params(), els))
        }
        Err(nodes) => {
            let g = full_group_if_affordable(code.params(), budgets, nodes)?;
            Ok(g.filter(|x| stabilises(x, code)))
        }
    }
}

fn full_group_if_affordable(
    params: GraphParams,
    budgets: &Budgets,
    nodes: u64,
) -> Result<EnumeratedGroup> {
    let (m, q) = (params.m() as u32, params.q() as u64);
    let order = (1..=q)
        .product::<u64>()
        .checked_pow(m)
        .and_then(|b| b.checked_mul((1..=m as u64).product()));
    match order {
        Some(n) if n <= budgets.elements => {
            full_aut_group(params.m(), params.q())?.enumerate(budgets.elements)
        }
        _ => Err(HntError::Inconclusive(nodes)),
    }
}

fn maps_onto(x: &AutElem, a: &Code, b: &Code) -> bool {
    a.indices()
        .iter()
        .all(|&w| b.contains_index(x.apply_index(w)))
}

/// Sorted multiset of pairwise distances; an equivalence invariant.
fn distance_profile(code: &Code) -> Vec<usize> {
    let w = code.indices();
    if w.len() > 2000 {
        return Vec::new();
    }
    let mut counts = vec![0usize; code.params().m() + 1];
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            counts[index_distance(code.params(), w[i], w[j])] += 1;
        }
    }
    counts
}

struct Search {
    params: GraphParams,
    a: Vec<Vec<Symbol>>,
    b: Vec<Vec<Symbol>>,
    // per word: encoding of the mapped prefix
    key_a: Vec<u64>,
    key_b: Vec<u64>,
    sigma: Vec<usize>,
    h: Vec<Vec<u32>>,
    used: Vec<bool>,
    nodes: u64,
    node_budget: u64,
    element_budget: u64,
    first_only: bool,
    found: Vec<AutElem>,
}

impl Search {
    fn new(a: &Code, b: &Code, node_budget: u64, first_only: bool) -> Self {
        let params = a.params();
        let decode = |c: &Code| {
            c.indices()
                .iter()
                .map(|&w| params.decode(w))
                .collect::<Vec<_>>()
        };
        Search {
            params,
            a: decode(a),
            b: decode(b),
            key_a: vec![0; a.len()],
            key_b: vec![0; b.len()],
            sigma: Vec::new(),
            h: Vec::new(),
            used: vec![false; params.m()],
            nodes: 0,
            node_budget,
            element_budget: u64::MAX,
            first_only,
            found: Vec::new(),
        }
    }

    /// `Err(nodes)` when the node budget ran out.
    fn run(&mut self) -> Result<(), u64> {
        self.step(0)
    }

    fn done(&self) -> bool {
        self.first_only && !self.found.is_empty()
    }

    fn step(&mut self, t: usize) -> Result<(), u64> {
        let (m, q) = (self.params.m(), self.params.q());
        if t == m {
            let base = self
                .h
                .iter()
                .map(|h| Perm::from_images(h.clone()).unwrap())
                .collect();
            let top = Perm::from_images(self.sigma.iter().map(|&c| c as u32).collect::<Vec<_>>())
                .unwrap();
            self.found
                .push(AutElem::new(self.params, base, top).unwrap());
            if self.found.len() as u64 > self.element_budget {
                return Err(self.nodes);
            }
            return Ok(());
        }
        let sig_a = symbol_signatures(&self.a, &self.key_a, t, q);
        let weight = self.params.weight(t);
        for c in 0..m {
            if self.used[c] || self.done() {
                continue;
            }
            let sig_b = symbol_signatures(&self.b, &self.key_b, c, q);
            let Some(groups) = match_groups(&sig_a, &sig_b) else {
                continue;
            };
            self.used[c] = true;
            self.sigma.push(c);
            let mut h = vec![0u32; q];
            let res = self.assign_groups(t, c, weight, &groups, 0, &mut h);
            self.sigma.pop();
            self.used[c] = false;
            res?;
        }
        Ok(())
    }

    /// Enumerates bijections that map each source group onto its target group.
    fn assign_groups(
        &mut self,
        t: usize,
        c: usize,
        weight: u64,
        groups: &[(Vec<usize>, Vec<usize>)],
        g: usize,
        h: &mut Vec<u32>,
    ) -> Result<(), u64> {
        if self.done() {
            return Ok(());
        }
        if g == groups.len() {
            self.nodes += 1;
            if self.nodes > self.node_budget {
                return Err(self.nodes);
            }
            let (old_a, old_b) = (self.key_a.clone(), self.key_b.clone());
            for (k, w) in self.key_a.iter_mut().zip(&self.a) {
                *k += h[w[t] as usize] as u64 * weight;
            }
            for (k, w) in self.key_b.iter_mut().zip(&self.b) {
                *k += w[c] as u64 * weight;
            }
            self.h.push(h.clone());
            let res = self.step(t + 1);
            self.h.pop();
            self.key_a = old_a;
            self.key_b = old_b;
            return res;
        }
        let (src, dst) = &groups[g];
        for perm in permutations(dst.len()) {
            for (i, &s) in src.iter().enumerate() {
                h[s] = dst[perm[i]] as u32;
            }
            self.assign_groups(t, c, weight, groups, g + 1, h)?;
            if self.done() {
                break;
            }
        }
        Ok(())
    }
}

/// For each symbol, the sorted (prefix key, count) pairs of words carrying
/// it in `col`.
fn symbol_signatures(words: &[Vec<Symbol>], keys: &[u64], col: usize, q: usize) -> Vec<Signature> {
    let mut per: Vec<HashMap<u64, usize>> = vec![HashMap::new(); q];
    for (w, &k) in words.iter().zip(keys) {
        *per[w[col] as usize].entry(k).or_insert(0) += 1;
    }
    per.into_iter()
        .map(|m| {
            let mut v: Vec<(u64, usize)> = m.into_iter().collect();
            v.sort_unstable();
            v
        })
        .collect()
}

type Signature = Vec<(u64, usize)>;

/// Symbols grouped by signature on both sides; `None` unless the groups
/// pair up with equal sizes.
fn match_groups(sa: &[Signature], sb: &[Signature]) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
    let mut groups: HashMap<&Signature, (Vec<usize>, Vec<usize>)> = HashMap::new();
    for (s, sig) in sa.iter().enumerate() {
        groups.entry(sig).or_default().0.push(s);
    }
    for (s, sig) in sb.iter().enumerate() {
        groups.get_mut(sig)?.1.push(s);
    }
    let mut out: Vec<(Vec<usize>, Vec<usize>)> = groups.into_values().collect();
    if out.iter().any(|(x, y)| x.len() != y.len()) {
        return None;
    }
    out.sort();
    Some(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}
