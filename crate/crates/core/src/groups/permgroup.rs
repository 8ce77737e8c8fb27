use std::collections::{BTreeSet, HashSet};

use crate::error::{HntError, Result};
use crate::groups::gens::orbit_bfs;
use crate::groups::Perm;

/// A fully listed permutation group of degree `n`, elements sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn generate(degree: usize, gens: Vec<Perm>, element_budget: u64) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(HntError::param(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let elements = perm_closure(degree, &gens, element_budget)?;
        Ok(PermGroup {
            degree,
            gens,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn is_2_transitive(&self) -> bool {
        is_2_transitive(&self.gens, self.degree).unwrap_or(false)
    }

    /// The smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> PermGroup {
        let mut gens: Vec<Perm> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        loop {
            let members: HashSet<Perm> = perm_closure(self.degree, &gens, u64::MAX)
                .unwrap()
                .into_iter()
                .collect();
            let fresh = gens
                .iter()
                .flat_map(|n| self.gens.iter().map(move |g| n.conjugate_by(g)))
                .find(|c| !members.contains(c));
            match fresh {
                Some(c) => gens.push(c),
                None => {
                    let mut elements: Vec<Perm> = members.into_iter().collect();
                    elements.sort();
                    return PermGroup {
                        degree: self.degree,
                        gens,
                        elements,
                    };
                }
            }
        }
    }

    /// One representative per conjugacy class.
    pub fn class_representatives(&self) -> Vec<Perm> {
        let mut covered: HashSet<Perm> = HashSet::new();
        let mut reps = Vec::new();
        for x in &self.elements {
            if covered.contains(x) {
                continue;
            }
            reps.push(x.clone());
            let class = orbit_bfs(x.clone(), |y| {
                let y = y.clone();
                self.gens.iter().map(move |g| y.conjugate_by(g))
            });
            covered.extend(class);
        }
        reps
    }

    /// Minimal normal subgroups: the inclusion-minimal normal closures of
    /// single nontrivial elements.
    pub fn minimal_normal_subgroups(&self) -> Vec<PermGroup> {
        let closures: Vec<PermGroup> = self
            .class_representatives()
            .into_iter()
            .filter(|c| !c.is_identity())
            .map(|c| self.normal_closure(&[c]))
            .collect();
        let mut out: Vec<PermGroup> = Vec::new();
        for n in &closures {
            let minimal = closures
                .iter()
                .all(|o| o.order() >= n.order() || !o.elements.iter().all(|e| n.contains(e)));
            if minimal && !out.iter().any(|o| o.elements == n.elements) {
                out.push(n.clone());
            }
        }
        out
    }

    /// No proper nontrivial normal subgroup.
    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        self.class_representatives()
            .into_iter()
            .filter(|c| !c.is_identity())
            .all(|c| self.normal_closure(&[c]).order() == self.order())
    }

    /// A unique minimal normal subgroup, and that subgroup nonabelian simple.
    pub fn is_almost_simple(&self) -> bool {
        match self.minimal_normal_subgroups().as_slice() {
            [n] => !n.is_abelian() && n.is_simple(),
            _ => false,
        }
    }
}

/// 2-transitivity: the ordered pairs of distinct points form one orbit.
pub fn is_2_transitive(gens: &[Perm], n: usize) -> Result<bool> {
    if n < 2 {
        return Err(HntError::param("2-transitivity needs degree at least 2"));
    }
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(HntError::param(format!(
            "generator {g} has degree {}, expected {n}",
            g.degree()
        )));
    }
    let orbit: BTreeSet<(usize, usize)> = orbit_bfs((0, 1), |&(a, b)| {
        gens.iter().map(move |g| (g.apply(a), g.apply(b)))
    });
    Ok(orbit.len() == n * (n - 1))
}

pub fn is_almost_simple(g: &PermGroup) -> bool {
    g.is_almost_simple()
}

fn perm_closure(degree: usize, gens: &[Perm], element_budget: u64) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() as u64 >= element_budget {
                    return Err(HntError::Budget {
                        what: "permutation group enumeration",
                        budget: element_budget,
                        needed: seen.len() as u64 + 1,
                    });
                }
                seen.insert(y.clone());
                stack.push(y);
            }
        }
    }
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}
