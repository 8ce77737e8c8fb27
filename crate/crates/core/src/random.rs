//! Uniform random draws for property tests and benches.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::groups::{AutElem, Perm};
use crate::hamming::{GraphParams, Symbol, Vertex};

pub fn random_perm<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Perm {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Perm::from_images(images).expect("a shuffle is a permutation")
}

/// Uniform element of `S_q wr S_m`.
pub fn random_aut<R: Rng + ?Sized>(params: GraphParams, rng: &mut R) -> AutElem {
    let base = (0..params.m())
        .map(|_| random_perm(params.q(), rng))
        .collect();
    AutElem::new(params, base, random_perm(params.m(), rng)).expect("degrees match")
}

/// Uniform element of `Diag_m(S_q) ⋊ S_m`.
pub fn random_diagonal<R: Rng + ?Sized>(params: GraphParams, rng: &mut R) -> AutElem {
    let h = random_perm(params.q(), rng);
    AutElem::diagonal(params, &h, random_perm(params.m(), rng)).expect("degrees match")
}

pub fn random_vertex<R: Rng + ?Sized>(params: GraphParams, rng: &mut R) -> Vertex {
    let symbols: Vec<Symbol> = (0..params.m())
        .map(|_| rng.gen_range(0..params.q() as Symbol))
        .collect();
    Vertex::new(params, symbols).expect("symbols in range")
}

/// Uniform element of the stabiliser of the entry set `entries`.
pub fn random_set_stabilizer_elem<R: Rng + ?Sized>(
    params: GraphParams,
    entries: &[usize],
    rng: &mut R,
) -> AutElem {
    let m = params.m();
    let inside: Vec<usize> = (0..m).filter(|j| entries.contains(j)).collect();
    let outside: Vec<usize> = (0..m).filter(|j| !entries.contains(j)).collect();
    let mut top = vec![0u32; m];
    for part in [&inside, &outside] {
        let mut shuffled = part.clone();
        shuffled.shuffle(rng);
        for (&from, &to) in part.iter().zip(&shuffled) {
            top[from] = to as u32;
        }
    }
    let base = (0..m).map(|_| random_perm(params.q(), rng)).collect();
    AutElem::new(params, base, Perm::from_images(top).expect("a permutation"))
        .expect("degrees match")
}
