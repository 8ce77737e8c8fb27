//! Permutations stored as image arrays.

use std::fmt;
use std::str::FromStr;

use crate::error::{HntError, Result};

/// A permutation of `0..n` with `images[i] = i^p`.
///
/// Products are read left to right: `a.then(&b)` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: impl Into<Vec<u32>>) -> Result<Self> {
        let images = images.into();
        if !is_bijection(&images) {
            return Err(HntError::param(format!("{images:?} is not a permutation")));
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(is_bijection(&images));
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::cycle(n, &[a, b])
    }

    /// The cycle `(c_0 c_1 ... c_k)`.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for (k, &p) in points.iter().enumerate() {
            if p >= n {
                return Err(HntError::param(format!("cycle point {p} >= degree {n}")));
            }
            images[p] = points[(k + 1) % points.len()] as u32;
        }
        Self::from_images(images)
    }

    /// The `n`-cycle `i -> i+1 mod n`.
    pub fn rotation(n: usize) -> Self {
        Perm {
            images: (0..n as u32).map(|i| (i + 1) % n as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `i^p`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// The product "self, then other".
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        other.inverse().then(self).then(other)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut order = 1usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Disjoint cycles of length at least two.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    /// Space-separated image notation: `"0 2 1"` maps 1 to 2 and 2 to 1.
    pub fn to_image_string(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(u32::to_string).collect();
        parts.join(" ")
    }
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&j| {
        let j = j as usize;
        j < seen.len() && !std::mem::replace(&mut seen[j], true)
    })
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl FromStr for Perm {
    type Err = HntError;

    /// Parses image notation.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| HntError::param(format!("bad image {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(images)
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
