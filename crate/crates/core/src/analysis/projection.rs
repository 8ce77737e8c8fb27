use crate::error::{HntError, Result};
use crate::groups::{AutElem, EnumeratedGroup, GroupGens, Perm};
use crate::hamming::{Code, GraphParams, Symbol, Vertex};

/// Sorted, deduplicated entry set; nonempty and in range.
pub(crate) fn normalise_entries(m: usize, entries: &[usize]) -> Result<Vec<usize>> {
    if entries.is_empty() {
        return Err(HntError::param("entry set must be nonempty"));
    }
    let mut j = entries.to_vec();
    j.sort_unstable();
    j.dedup();
    if let Some(&bad) = j.iter().find(|&&e| e >= m) {
        return Err(HntError::param(format!(
            "entry {bad} out of range for m={m}"
        )));
    }
    Ok(j)
}

/// `pi_J(v)`: the entries of `v` in `J`, in increasing entry order.
pub fn project_vertex(v: &Vertex, entries: &[usize]) -> Result<Vertex> {
    let j = normalise_entries(v.params().m(), entries)?;
    let params = GraphParams::new(j.len(), v.params().q())?;
    let symbols: Vec<Symbol> = j.iter().map(|&e| v.get(e)).collect();
    Ok(Vertex::from_symbols_unchecked(params, symbols))
}

/// `pi_J(C)`, duplicates collapsed.
pub fn project_code(code: &Code, entries: &[usize]) -> Result<Code> {
    let src = code.params();
    let j = normalise_entries(src.m(), entries)?;
    let params = GraphParams::new(j.len(), src.q())?;
    let q = src.q() as u64;
    let words = code
        .indices()
        .iter()
        .map(|&w| {
            j.iter()
                .rev()
                .fold(0u64, |acc, &e| acc * q + (w / src.weight(e)) % q)
        })
        .collect();
    Ok(Code::collect_indices(params, words).unwrap())
}

/// `chi_J(x)`, defined for `x` stabilising `J` setwise.
pub fn chi(x: &AutElem, entries: &[usize]) -> Result<AutElem> {
    let j = normalise_entries(x.params().m(), entries)?;
    chi_sorted(x, &j)
}

fn chi_sorted(x: &AutElem, j: &[usize]) -> Result<AutElem> {
    let mut top = Vec::with_capacity(j.len());
    for &e in j {
        match j.binary_search(&x.entry_image(e)) {
            Ok(pos) => top.push(pos as u32),
            Err(_) => return Err(HntError::NotInSetStabilizer(j.to_vec())),
        }
    }
    let params = GraphParams::new(j.len(), x.params().q())?;
    let base = j.iter().map(|&e| x.base_perm(e)).collect();
    AutElem::new(params, base, Perm::from_images(top)?)
}

/// `chi_J(X)` as the full deduplicated image of the setwise stabiliser.
pub fn chi_group(x: &EnumeratedGroup, entries: &[usize]) -> Result<GroupGens> {
    let j = normalise_entries(x.params().m(), entries)?;
    let mut images: Vec<AutElem> = x
        .elements()
        .iter()
        .filter_map(|g| chi_sorted(g, &j).ok())
        .collect();
    images.sort();
    images.dedup();
    GroupGens::new(GraphParams::new(j.len(), x.params().q())?, images)
}

/// Generators of `chi_J(X)` from Schreier generators of `X_J`; no
/// enumeration of `X` needed.
pub fn chi_gens(x: &GroupGens, entries: &[usize]) -> Result<GroupGens> {
    let j = normalise_entries(x.params().m(), entries)?;
    let stab = x.set_stabilizer(&j)?;
    let gens = stab
        .gens()
        .iter()
        .map(|g| chi_sorted(g, &j))
        .collect::<Result<Vec<_>>>()?;
    GroupGens::new(GraphParams::new(j.len(), x.params().q())?, gens)
}
