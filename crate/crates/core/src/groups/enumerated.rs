use std::collections::HashSet;

use crate::error::{HntError, Result};
use crate::exec::{self, Execution};
use crate::groups::{AutElem, GroupGens};
use crate::hamming::{Code, GraphParams, Vertex};

/// A fully listed subgroup of `Aut(H(m,q))`, elements sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedGroup {
    gens: GroupGens,
    elements: Vec<AutElem>,
}

impl EnumeratedGroup {
    pub fn enumerate(gens: &GroupGens, element_budget: u64) -> Result<Self> {
        Self::enumerate_with(gens, element_budget, Execution::default())
    }

    /// Closure by breadth-first right multiplication with the generators.
    pub fn enumerate_with(gens: &GroupGens, element_budget: u64, exec: Execution) -> Result<Self> {
        let elements = closure(gens.params(), gens.gens(), element_budget, exec)?;
        Ok(EnumeratedGroup {
            gens: gens.clone(),
            elements,
        })
    }

    /// The subgroup of elements satisfying `keep`, which must be closed
    /// under products. Generators are picked greedily from the elements.
    pub fn filter<F>(&self, keep: F) -> EnumeratedGroup
    where
        F: Fn(&AutElem) -> bool + Sync + Send,
    {
        let kept: Vec<AutElem> = exec::map(Execution::default(), &self.elements, |g| {
            keep(g).then(|| g.clone())
        })
        .into_iter()
        .flatten()
        .collect();
        Self::from_sorted_subgroup(self.params(), kept)
    }

    /// Wraps a sorted, product-closed element list.
    pub(crate) fn from_sorted_subgroup(params: GraphParams, elements: Vec<AutElem>) -> Self {
        let gens = reduced_gens(params, &elements);
        EnumeratedGroup {
            gens: GroupGens::new(params, gens).unwrap(),
            elements,
        }
    }

    pub fn params(&self) -> GraphParams {
        self.gens.params()
    }

    pub fn gens(&self) -> &GroupGens {
        &self.gens
    }

    pub fn elements(&self) -> &[AutElem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &AutElem) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// `K = X ∩ B`, the elements acting trivially on entries.
    pub fn kernel_on_entries(&self) -> EnumeratedGroup {
        self.filter(AutElem::is_base)
    }

    /// `{x : C^x = C}`.
    pub fn setwise_stabilizer(&self, code: &Code) -> Result<EnumeratedGroup> {
        self.params().ensure_same(code.params())?;
        Ok(self.filter(|x| stabilises(x, code)))
    }

    /// `{v^x : x in X}` by direct filtering, used as an oracle for the BFS
    /// orbit.
    pub fn orbit_by_filter(&self, v: &Vertex) -> Result<Code> {
        self.params().ensure_same(v.params())?;
        let idx = v.index();
        let images = exec::map(Execution::default(), &self.elements, |x| x.apply_index(idx));
        Ok(Code::collect_indices(self.params(), images).unwrap())
    }

    /// Whether every element is diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.elements.iter().all(AutElem::is_diagonal)
    }
}

pub fn enumerate_group(x: &GroupGens, element_budget: u64) -> Result<EnumeratedGroup> {
    EnumeratedGroup::enumerate(x, element_budget)
}

pub fn kernel_on_entries(x: &EnumeratedGroup) -> EnumeratedGroup {
    x.kernel_on_entries()
}

pub fn setwise_stabilizer(g: &EnumeratedGroup, code: &Code) -> Result<EnumeratedGroup> {
    g.setwise_stabilizer(code)
}

pub(crate) fn stabilises(x: &AutElem, code: &Code) -> bool {
    code.indices()
        .iter()
        .all(|&w| code.contains_index(x.apply_index(w)))
}

pub(crate) fn closure(
    params: GraphParams,
    gens: &[AutElem],
    element_budget: u64,
    exec: Execution,
) -> Result<Vec<AutElem>> {
    let gens: Vec<&AutElem> = gens.iter().filter(|g| !g.is_identity()).collect();
    let id = AutElem::identity(params);
    let mut seen: HashSet<AutElem> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let products = exec::flat_map(exec, &frontier, |x| {
            gens.iter().map(|g| x.then(g)).collect()
        });
        frontier.clear();
        for y in products {
            if !seen.contains(&y) {
                if seen.len() as u64 >= element_budget {
                    return Err(HntError::Budget {
                        what: "group enumeration",
                        budget: element_budget,
                        needed: seen.len() as u64 + 1,
                    });
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<AutElem> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Greedy generating set: walk the elements in order and keep any that is
/// not yet in the group generated so far.
fn reduced_gens(params: GraphParams, elements: &[AutElem]) -> Vec<AutElem> {
    let mut gens = Vec::new();
    let mut current: HashSet<AutElem> = HashSet::from([AutElem::identity(params)]);
    for x in elements {
        if current.contains(x) {
            continue;
        }
        gens.push(x.clone());
        if current.len() * 2 >= elements.len() {
            // a proper overgroup of an index-2 subgroup is everything
            break;
        }
        let grown = closure(params, &gens, u64::MAX, Execution::Sequential).unwrap();
        current = grown.into_iter().collect();
        if current.len() == elements.len() {
            break;
        }
    }
    gens
}
