use std::fmt;

use crate::error::{HntError, Result};
use crate::groups::Perm;
use crate::hamming::{GraphParams, Symbol, Vertex};

/// An automorphism `x = (h_0, ..., h_{m-1}) sigma` of `H(m,q)`.
///
/// Acts on the right: the base permutations act entrywise first, then the
/// entries are moved by `sigma`, so entry `j` of `v` lands in entry
/// `sigma(j)` of `v^x` with value `h_j(v_j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutElem {
    params: GraphParams,
    // m blocks of q images, block j is h_j
    base: Box<[u32]>,
    top: Box<[u32]>,
}

impl AutElem {
    pub fn new(params: GraphParams, base: Vec<Perm>, top: Perm) -> Result<Self> {
        let (m, q) = (params.m(), params.q());
        if base.len() != m {
            return Err(HntError::param(format!(
                "expected {m} base permutations, got {}",
                base.len()
            )));
        }
        if let Some(h) = base.iter().find(|h| h.degree() != q) {
            return Err(HntError::param(format!(
                "base permutation {h} has degree {}, expected {q}",
                h.degree()
            )));
        }
        if top.degree() != m {
            return Err(HntError::param(format!(
                "top permutation has degree {}, expected {m}",
                top.degree()
            )));
        }
        let flat: Vec<u32> = base
            .iter()
            .flat_map(|h| h.images().iter().copied())
            .collect();
        Ok(AutElem {
            params,
            base: flat.into_boxed_slice(),
            top: top.images().into(),
        })
    }

    pub fn identity(params: GraphParams) -> Self {
        let (m, q) = (params.m(), params.q() as u32);
        AutElem {
            params,
            base: (0..m).flat_map(|_| 0..q).collect(),
            top: (0..m as u32).collect(),
        }
    }

    /// A pure entry permutation (trivial base part).
    pub fn from_top(params: GraphParams, top: Perm) -> Result<Self> {
        Self::new(params, vec![Perm::identity(params.q()); params.m()], top)
    }

    /// A pure base element (trivial top part).
    pub fn from_base(params: GraphParams, base: Vec<Perm>) -> Result<Self> {
        Self::new(params, base, Perm::identity(params.m()))
    }

    /// The diagonal element `(h, ..., h) sigma`.
    pub fn diagonal(params: GraphParams, h: &Perm, top: Perm) -> Result<Self> {
        Self::new(params, vec![h.clone(); params.m()], top)
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    /// Images of `h_j`.
    pub fn base_images(&self, j: usize) -> &[u32] {
        let q = self.params.q();
        &self.base[j * q..(j + 1) * q]
    }

    pub fn base_perm(&self, j: usize) -> Perm {
        Perm::from_images_unchecked(self.base_images(j).to_vec())
    }

    pub fn top_images(&self) -> &[u32] {
        &self.top
    }

    pub fn top_perm(&self) -> Perm {
        Perm::from_images_unchecked(self.top.to_vec())
    }

    pub fn is_identity(&self) -> bool {
        *self == AutElem::identity(self.params)
    }

    /// Trivial top part, i.e. a member of the base group `B`.
    pub fn is_base(&self) -> bool {
        self.top.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// All base permutations equal, i.e. a member of `Diag_m(S_q) ⋊ S_m`.
    pub fn is_diagonal(&self) -> bool {
        let q = self.params.q();
        self.base.chunks_exact(q).all(|h| h == &self.base[..q])
    }

    pub fn fixes_entry(&self, i: usize) -> bool {
        self.top[i] as usize == i
    }

    /// Image of an entry under the top part.
    pub fn entry_image(&self, i: usize) -> usize {
        self.top[i] as usize
    }

    pub fn apply(&self, v: &Vertex) -> Result<Vertex> {
        self.params.ensure_same(v.params())?;
        let mut out = vec![0; self.params.m()];
        self.apply_symbols(v.symbols(), &mut out);
        Ok(Vertex::from_symbols_unchecked(self.params, out))
    }

    pub(crate) fn apply_symbols(&self, v: &[Symbol], out: &mut [Symbol]) {
        let q = self.params.q();
        for (j, &s) in v.iter().enumerate() {
            out[self.top[j] as usize] = self.base[j * q + s as usize];
        }
    }

    /// Image of the vertex with radix index `index`.
    pub fn apply_index(&self, mut index: u64) -> u64 {
        let q = self.params.q() as u64;
        let mut out = 0u64;
        for j in 0..self.params.m() {
            let s = index % q;
            index /= q;
            let img = self.base[j * q as usize + s as usize] as u64;
            out += img * q.pow(self.top[j]);
        }
        out
    }

    /// The product "self, then other", so that
    /// `v^(x.then(y)) = (v^x)^y`.
    pub fn compose(&self, other: &AutElem) -> Result<AutElem> {
        self.params.ensure_same(other.params)?;
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &AutElem) -> AutElem {
        debug_assert_eq!(self.params, other.params);
        let (m, q) = (self.params.m(), self.params.q());
        let mut base = Vec::with_capacity(m * q);
        let mut top = Vec::with_capacity(m);
        for j in 0..m {
            let k = self.top[j] as usize;
            top.push(other.top[k]);
            let hy = &other.base[k * q..(k + 1) * q];
            base.extend(
                self.base[j * q..(j + 1) * q]
                    .iter()
                    .map(|&a| hy[a as usize]),
            );
        }
        AutElem {
            params: self.params,
            base: base.into_boxed_slice(),
            top: top.into_boxed_slice(),
        }
    }

    pub fn inverse(&self) -> AutElem {
        let (m, q) = (self.params.m(), self.params.q());
        let mut base = vec![0u32; m * q];
        let mut top = vec![0u32; m];
        for j in 0..m {
            let k = self.top[j] as usize;
            top[k] = j as u32;
            // inverse base at entry sigma(j) undoes h_j
            for (a, &b) in self.base[j * q..(j + 1) * q].iter().enumerate() {
                base[k * q + b as usize] = a as u32;
            }
        }
        AutElem {
            params: self.params,
            base: base.into_boxed_slice(),
            top: top.into_boxed_slice(),
        }
    }
}

/// `v^x`.
pub fn apply_aut(x: &AutElem, v: &Vertex) -> Result<Vertex> {
    x.apply(v)
}

/// `x` then `y`.
pub fn compose_aut(x: &AutElem, y: &AutElem) -> Result<AutElem> {
    x.compose(y)
}

pub fn inverse_aut(x: &AutElem) -> AutElem {
    x.inverse()
}

/// The entry-action homomorphism `(h_1..h_m) sigma -> sigma`.
pub fn mu(x: &AutElem) -> Perm {
    x.top_perm()
}

/// The alphabet action of an entry stabiliser: `(h_1..h_m) sigma -> h_i`,
/// defined only when `x` fixes entry `i`.
pub fn phi(x: &AutElem, i: usize) -> Result<Perm> {
    if i >= x.params.m() || !x.fixes_entry(i) {
        return Err(HntError::NotInStabilizer(i));
    }
    Ok(x.base_perm(i))
}

impl fmt::Display for AutElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.params.m())
            .map(|j| self.base_perm(j).to_string())
            .collect();
        write!(f, "[{}]{}", parts.join(","), self.top_perm())
    }
}

impl fmt::Debug for AutElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
