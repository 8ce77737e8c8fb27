use std::collections::{BTreeSet, HashMap, HashSet};
use std::hash::Hash;

use crate::error::{HntError, Result};
use crate::exec::{self, Execution};
use crate::groups::{AutElem, EnumeratedGroup, Perm, PermGroup};
use crate::hamming::{Code, GraphParams, Symbol, Vertex};

/// A subgroup of `Aut(H(m,q))` given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupGens {
    params: GraphParams,
    gens: Vec<AutElem>,
}

/// What an orbit computation starts from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Seed {
    Vertex(Vertex),
    /// An entry of `M`, acted on through `mu`.
    Entry(usize),
    /// An ordered pair of symbols, acted on through `phi_entry` of the
    /// stabiliser of `entry`.
    SymbolPair {
        entry: usize,
        pair: (Symbol, Symbol),
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orbit {
    Vertices(Code),
    Entries(BTreeSet<usize>),
    SymbolPairs(BTreeSet<(Symbol, Symbol)>),
}

impl GroupGens {
    /// An empty generator list yields the trivial group.
    pub fn new(params: GraphParams, gens: Vec<AutElem>) -> Result<Self> {
        for g in &gens {
            params.ensure_same(g.params())?;
        }
        let mut gens = dedup_keep_order(gens);
        if gens.is_empty() {
            gens.push(AutElem::identity(params));
        }
        Ok(GroupGens { params, gens })
    }

    pub fn trivial(params: GraphParams) -> Self {
        GroupGens {
            params,
            gens: vec![AutElem::identity(params)],
        }
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn gens(&self) -> &[AutElem] {
        &self.gens
    }

    /// Generators with the identity filtered out.
    pub(crate) fn nontrivial_gens(&self) -> impl Iterator<Item = &AutElem> {
        self.gens.iter().filter(|g| !g.is_identity())
    }

    /// Every generator lies in `Diag_m(S_q) ⋊ S_m`.
    pub fn is_diagonal(&self) -> bool {
        self.gens.iter().all(AutElem::is_diagonal)
    }

    /// The generators' images under `mu`.
    pub fn entry_perms(&self) -> Vec<Perm> {
        self.gens.iter().map(AutElem::top_perm).collect()
    }

    pub fn orbit(&self, seed: &Seed) -> Result<Orbit> {
        Ok(match seed {
            Seed::Vertex(v) => Orbit::Vertices(self.vertex_orbit(v)?),
            Seed::Entry(i) => Orbit::Entries(self.entry_orbit(*i)?),
            Seed::SymbolPair { entry, pair } => {
                Orbit::SymbolPairs(self.symbol_pair_orbit(*entry, *pair)?)
            }
        })
    }

    pub fn vertex_orbit(&self, v: &Vertex) -> Result<Code> {
        self.vertex_orbit_with(v, Execution::default())
    }

    /// Breadth-first orbit on vertices; frontiers are expanded in parallel
    /// when `exec` allows.
    pub fn vertex_orbit_with(&self, v: &Vertex, exec: Execution) -> Result<Code> {
        self.params.ensure_same(v.params())?;
        let gens: Vec<&AutElem> = self.nontrivial_gens().collect();
        let start = v.index();
        let mut seen: HashSet<u64> = HashSet::from([start]);
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let images = exec::flat_map(exec, &frontier, |&x| {
                gens.iter().map(|g| g.apply_index(x)).collect()
            });
            frontier = images.into_iter().filter(|y| seen.insert(*y)).collect();
        }
        Ok(Code::collect_indices(self.params, seen.into_iter().collect()).unwrap())
    }

    pub fn entry_orbit(&self, i: usize) -> Result<BTreeSet<usize>> {
        self.check_entry(i)?;
        let perms = self.entry_perms();
        Ok(orbit_bfs(i, |&j| perms.iter().map(move |p| p.apply(j))))
    }

    /// Orbit of an ordered symbol pair under the alphabet action of the
    /// stabiliser of `entry`.
    pub fn symbol_pair_orbit(
        &self,
        entry: usize,
        (a, b): (Symbol, Symbol),
    ) -> Result<BTreeSet<(Symbol, Symbol)>> {
        let q = self.params.q() as Symbol;
        if a >= q || b >= q {
            return Err(HntError::param(format!(
                "symbol pair ({a},{b}) out of range"
            )));
        }
        let hs = self.alphabet_gens(entry)?;
        Ok(orbit_bfs((a, b), |&(x, y)| {
            hs.iter()
                .map(move |h| (h.apply(x as usize) as Symbol, h.apply(y as usize) as Symbol))
        }))
    }

    /// True iff `set` is a single orbit of the vertex action.
    pub fn is_transitive_on(&self, set: &Code) -> Result<bool> {
        self.is_transitive_on_with(set, Execution::default())
    }

    pub fn is_transitive_on_with(&self, set: &Code, exec: Execution) -> Result<bool> {
        self.params.ensure_same(set.params())?;
        Ok(self.vertex_orbit_with(&set.first(), exec)? == *set)
    }

    pub fn is_transitive_on_entries(&self) -> bool {
        self.entry_orbit(0).unwrap().len() == self.params.m()
    }

    /// Generators of the stabiliser `X_i` of entry `i`, by Schreier's lemma
    /// on the entry action.
    pub fn point_stabilizer(&self, i: usize) -> Result<GroupGens> {
        self.check_entry(i)?;
        Ok(self.schreier_stabilizer(i, |g, &j| g.entry_image(j)))
    }

    /// Generators of the setwise stabiliser `X_J` of the entry set `J`.
    pub fn set_stabilizer(&self, entries: &[usize]) -> Result<GroupGens> {
        let mask = entry_mask(self.params.m(), entries)?;
        Ok(self.schreier_stabilizer(mask, |g, &s| {
            let mut out = 0u64;
            let mut rest = s;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out |= 1 << g.entry_image(j);
            }
            out
        }))
    }

    /// Schreier generators `u_p g u_{p^g}^-1` of the stabiliser of `point`
    /// in the action `act`.
    fn schreier_stabilizer<P, F>(&self, point: P, act: F) -> GroupGens
    where
        P: Clone + Eq + Hash,
        F: Fn(&AutElem, &P) -> P,
    {
        let id = AutElem::identity(self.params);
        let mut transversal: HashMap<P, AutElem> = HashMap::from([(point.clone(), id)]);
        let mut order = vec![point];
        let mut k = 0;
        while k < order.len() {
            let p = order[k].clone();
            for g in &self.gens {
                let r = act(g, &p);
                if !transversal.contains_key(&r) {
                    let u = transversal[&p].then(g);
                    transversal.insert(r.clone(), u);
                    order.push(r);
                }
            }
            k += 1;
        }
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for p in &order {
            for g in &self.gens {
                let r = act(g, p);
                let s = transversal[p].then(g).then(&transversal[&r].inverse());
                if !s.is_identity() && seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
        GroupGens::new(self.params, out).unwrap()
    }

    /// Generators of `X_i^Q`, the alphabet action of the entry stabiliser.
    pub fn alphabet_gens(&self, i: usize) -> Result<Vec<Perm>> {
        let stab = self.point_stabilizer(i)?;
        let mut out: Vec<Perm> = stab.gens.iter().map(|g| g.base_perm(i)).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `X_i^Q`, enumerated.
    pub fn alphabet_group(&self, i: usize, element_budget: u64) -> Result<PermGroup> {
        PermGroup::generate(self.params.q(), self.alphabet_gens(i)?, element_budget)
    }

    pub fn enumerate(&self, element_budget: u64) -> Result<EnumeratedGroup> {
        EnumeratedGroup::enumerate(self, element_budget)
    }

    fn check_entry(&self, i: usize) -> Result<()> {
        if i < self.params.m() {
            Ok(())
        } else {
            Err(HntError::param(format!(
                "entry {i} out of range for m={}",
                self.params.m()
            )))
        }
    }
}

/// Orbit of a single vertex, entry or symbol pair.
pub fn orbit(x: &GroupGens, seed: &Seed) -> Result<Orbit> {
    x.orbit(seed)
}

/// True iff `set` is a single orbit of the vertex action.
pub fn is_transitive_on(x: &GroupGens, set: &Code) -> Result<bool> {
    x.is_transitive_on(set)
}

pub fn point_stabilizer(x: &GroupGens, i: usize) -> Result<GroupGens> {
    x.point_stabilizer(i)
}

pub(crate) fn orbit_bfs<P, I, F>(seed: P, step: F) -> BTreeSet<P>
where
    P: Clone + Ord,
    I: Iterator<Item = P>,
    F: Fn(&P) -> I,
{
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut stack = vec![seed];
    while let Some(p) = stack.pop() {
        for r in step(&p) {
            if seen.insert(r.clone()) {
                stack.push(r);
            }
        }
    }
    seen
}

pub(crate) fn entry_mask(m: usize, entries: &[usize]) -> Result<u64> {
    if entries.is_empty() {
        return Err(HntError::param("entry set must be nonempty"));
    }
    let mut mask = 0u64;
    for &j in entries {
        if j >= m {
            return Err(HntError::param(format!("entry {j} out of range for m={m}")));
        }
        mask |= 1 << j;
    }
    Ok(mask)
}

fn dedup_keep_order(gens: Vec<AutElem>) -> Vec<AutElem> {
    let mut seen = HashSet::new();
    gens.into_iter()
        .filter(|g| seen.insert(g.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_top(p: GraphParams) -> GroupGens {
        GroupGens::new(
            p,
            vec![
                AutElem::from_top(p, Perm::transposition(3, 0, 1).unwrap()).unwrap(),
                AutElem::from_top(p, Perm::rotation(3)).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn trivial_group_orbits_are_points() {
        let p = GraphParams::new(3, 4).unwrap();
        let x = GroupGens::trivial(p);
        let v = Vertex::new(p, vec![1, 2, 3]).unwrap();
        assert_eq!(x.vertex_orbit(&v).unwrap().len(), 1);
        assert_eq!(x.entry_orbit(1).unwrap(), BTreeSet::from([1]));
        assert!(GroupGens::new(p, vec![]).unwrap().gens()[0].is_identity());
    }

    #[test]
    fn pure_top_s3_stabiliser_has_order_two() {
        let p = GraphParams::new(3, 4).unwrap();
        let x = s3_top(p);
        let stab = x.point_stabilizer(0).unwrap();
        let e = stab.enumerate(100).unwrap();
        assert_eq!(e.order(), 2);
        assert!(e.elements().iter().all(|g| g.fixes_entry(0)));
    }

    #[test]
    fn set_stabiliser_of_pair() {
        let p = GraphParams::new(3, 4).unwrap();
        let x = s3_top(p);
        let stab = x.set_stabilizer(&[0, 1]).unwrap();
        let e = stab.enumerate(100).unwrap();
        assert_eq!(e.order(), 2);
        assert!(e.elements().iter().all(|g| g.entry_image(2) == 2));
    }

    #[test]
    fn symbol_pairs_of_top_group_are_fixed() {
        let p = GraphParams::new(3, 4).unwrap();
        let x = s3_top(p);
        let o = x.symbol_pair_orbit(0, (1, 2)).unwrap();
        assert_eq!(o, BTreeSet::from([(1, 2)]));
    }
}
