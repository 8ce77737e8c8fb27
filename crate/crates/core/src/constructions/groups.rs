use crate::error::{HntError, Result};
use crate::groups::{AutElem, GroupGens, Perm};
use crate::hamming::GraphParams;

/// `(0 1)` and the `n`-cycle, with duplicates and identities dropped.
pub fn symmetric_gens(n: usize) -> Vec<Perm> {
    if n < 2 {
        return Vec::new();
    }
    let mut gens = vec![Perm::transposition(n, 0, 1).unwrap(), Perm::rotation(n)];
    gens.dedup();
    gens
}

/// `Diag_m(S_q) ⋊ S_m`, of order `q! m!`.
pub fn diag_full_group(m: usize, q: usize) -> Result<GroupGens> {
    let params = GraphParams::new(m, q)?;
    let mut gens: Vec<AutElem> = symmetric_gens(q)
        .iter()
        .map(|h| AutElem::diagonal(params, h, Perm::identity(m)).unwrap())
        .collect();
    gens.extend(
        symmetric_gens(m)
            .into_iter()
            .map(|s| AutElem::from_top(params, s).unwrap()),
    );
    GroupGens::new(params, gens)
}

/// `Diag_m(T) ⋊ U` for given generators of `T <= S_q` and `U <= S_m`.
pub fn diag_group(params: GraphParams, alphabet: &[Perm], entries: &[Perm]) -> Result<GroupGens> {
    let mut gens = Vec::new();
    for h in alphabet {
        gens.push(AutElem::diagonal(params, h, Perm::identity(params.m()))?);
    }
    for s in entries {
        gens.push(AutElem::from_top(params, s.clone())?);
    }
    GroupGens::new(params, gens)
}

/// The full automorphism group `S_q wr S_m`.
pub fn full_aut_group(m: usize, q: usize) -> Result<GroupGens> {
    let params = GraphParams::new(m, q)?;
    let mut gens = Vec::new();
    for h in symmetric_gens(q) {
        let mut base = vec![Perm::identity(q); m];
        base[0] = h;
        gens.push(AutElem::from_base(params, base)?);
    }
    gens.extend(
        symmetric_gens(m)
            .into_iter()
            .map(|s| AutElem::from_top(params, s).unwrap()),
    );
    GroupGens::new(params, gens)
}

/// Assembles an element of `Aut(H(kl,q))` from one element of `Aut(H(k,q))`
/// per block and a permutation of the blocks. Entry `j` of block `i` is sent
/// to entry `sigma_i(j)` of block `tau(i)`.
pub fn block_element(params: GraphParams, parts: &[AutElem], tau: &Perm) -> Result<AutElem> {
    let l = parts.len();
    if l == 0 || tau.degree() != l {
        return Err(HntError::param(
            "need one part per block and a block permutation of matching degree",
        ));
    }
    let k = parts[0].params().m();
    if params.m() != k * l {
        return Err(HntError::param(format!(
            "{l} blocks of {k} entries do not fill m={}",
            params.m()
        )));
    }
    let mut base = Vec::with_capacity(params.m());
    let mut top = vec![0u32; params.m()];
    for (i, part) in parts.iter().enumerate() {
        if part.params() != GraphParams::new(k, params.q())? {
            return Err(HntError::ParamMismatch(
                part.params().to_string(),
                format!("H({k},{})", params.q()),
            ));
        }
        for j in 0..k {
            base.push(part.base_perm(j));
            top[i * k + j] = (tau.apply(i) * k + part.entry_image(j)) as u32;
        }
    }
    AutElem::new(params, base, Perm::from_images(top)?)
}

/// Block permutations of `l` blocks of size `k` that keep the order inside
/// each block: generators of `S_l` acting on blocks.
fn block_permuters(params: GraphParams, k: usize, l: usize) -> Vec<AutElem> {
    let id = AutElem::identity(GraphParams::new(k, params.q()).unwrap());
    symmetric_gens(l)
        .iter()
        .map(|tau| block_element(params, &vec![id.clone(); l], tau).unwrap())
        .collect()
}

/// `x` placed in block `i`, identity elsewhere.
fn planted(params: GraphParams, x: &AutElem, i: usize, l: usize) -> AutElem {
    let mut parts = vec![AutElem::identity(x.params()); l];
    parts[i] = x.clone();
    block_element(params, &parts, &Perm::identity(l)).unwrap()
}

/// `(Diag_k(S_q))^l ⋊ (S_k wr S_l)` in `H(kl,q)`, preserving the contiguous
/// blocks `{ik, ..., ik+k-1}`.
pub fn block_diagonal_group(k: usize, l: usize, q: usize) -> Result<GroupGens> {
    if l == 0 {
        return Err(HntError::param("l must be at least 1"));
    }
    let params = GraphParams::new(k * l, q)?;
    let inner = diag_full_group(k, q)?;
    let mut gens = Vec::new();
    for i in 0..l {
        for x in inner.gens() {
            gens.push(planted(params, x, i, l));
        }
    }
    gens.extend(block_permuters(params, k, l));
    GroupGens::new(params, gens)
}

/// The group `(Diag_2(S_q))^l ⋊ (S_2 wr S_l)` acting on `H(2l,q)`.
pub fn k2_group(l: usize, q: usize) -> Result<GroupGens> {
    block_diagonal_group(2, l, q)
}

/// `<(X ∩ B)^l, Diag_l(X), S_l>` in `H(kl,q)` for `X <= Aut(H(k,q))`.
///
/// Kernel generators are taken from `kernel` when given, otherwise `X` is
/// enumerated within `element_budget` and its kernel on entries extracted.
pub fn section4_group(
    x: &GroupGens,
    kernel: Option<&[AutElem]>,
    l: usize,
    element_budget: u64,
) -> Result<GroupGens> {
    if l == 0 {
        return Err(HntError::param("l must be at least 1"));
    }
    let (k, q) = (x.params().m(), x.params().q());
    let kernel_gens: Vec<AutElem> = match kernel {
        Some(gens) => {
            if let Some(g) = gens
                .iter()
                .find(|g| !g.is_base() || g.params() != x.params())
            {
                return Err(HntError::param(format!(
                    "{g} is not a base element of H({k},{q})"
                )));
            }
            gens.to_vec()
        }
        None => x
            .enumerate(element_budget)?
            .kernel_on_entries()
            .gens()
            .gens()
            .to_vec(),
    };
    let params = GraphParams::new(k * l, q)?;
    let mut gens = Vec::new();
    for g in kernel_gens.iter().filter(|g| !g.is_identity()) {
        for i in 0..l {
            gens.push(planted(params, g, i, l));
        }
    }
    for g in x.gens() {
        gens.push(block_element(
            params,
            &vec![g.clone(); l],
            &Perm::identity(l),
        )?);
    }
    gens.extend(block_permuters(params, k, l));
    GroupGens::new(params, gens)
}
