use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{HntError, Result};
use crate::groups::{GroupGens, Perm};

/// A partition of the entry set `{0, ..., m-1}`, stored canonically: each
/// block sorted and blocks ordered by their least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EntryPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl EntryPartition {
    pub fn new(m: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; m];
        for b in &blocks {
            if b.is_empty() {
                return Err(HntError::param("partition blocks must be nonempty"));
            }
            for &j in b {
                if j >= m || std::mem::replace(&mut seen[j], true) {
                    return Err(HntError::param(format!(
                        "entry {j} is out of range or in two blocks"
                    )));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(HntError::param("blocks do not cover every entry"));
        }
        Ok(Self::canonical(m, blocks))
    }

    fn canonical(m: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        EntryPartition { m, blocks }
    }

    /// From a block label per entry.
    pub(crate) fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; labels.len()];
        for (j, &l) in labels.iter().enumerate() {
            if slot[l] == usize::MAX {
                slot[l] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[l]].push(j);
        }
        Self::canonical(labels.len(), blocks)
    }

    /// Consecutive blocks `{0..k-1}, {k..2k-1}, ...`.
    pub fn contiguous(m: usize, k: usize) -> Result<Self> {
        check_divides(m, k)?;
        Ok(Self::from_labels(
            &(0..m).map(|j| j / k).collect::<Vec<_>>(),
        ))
    }

    /// Position classes `{r, r+k, r+2k, ...}` for `r < k`.
    pub fn strided(m: usize, k: usize) -> Result<Self> {
        check_divides(m, k)?;
        Ok(Self::from_labels(
            &(0..m).map(|j| j % k).collect::<Vec<_>>(),
        ))
    }

    /// The partition into singletons.
    pub fn discrete(m: usize) -> Self {
        Self::from_labels(&(0..m).collect::<Vec<_>>())
    }

    /// The one-block partition.
    pub fn whole(m: usize) -> Self {
        Self::from_labels(&vec![0; m])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1 || self.blocks.len() == self.m
    }

    pub fn block_of(&self, j: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&j))
            .map(Vec::as_slice)
    }

    /// Every permutation maps blocks onto blocks.
    pub fn is_invariant_under(&self, perms: &[Perm]) -> bool {
        let set: BTreeSet<&Vec<usize>> = self.blocks.iter().collect();
        perms.iter().all(|p| {
            self.blocks.iter().all(|b| {
                let mut img: Vec<usize> = b.iter().map(|&j| p.apply(j)).collect();
                img.sort_unstable();
                set.contains(&img)
            })
        })
    }

    /// `self` refines `other`.
    pub fn refines(&self, other: &EntryPartition) -> bool {
        self.blocks
            .iter()
            .all(|b| other.blocks.iter().any(|o| b.iter().all(|j| o.contains(j))))
    }

    /// The finest common coarsening.
    pub fn join(&self, other: &EntryPartition) -> EntryPartition {
        let mut uf = UnionFind::new(self.m);
        for b in self.blocks.iter().chain(&other.blocks) {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.partition()
    }
}

impl fmt::Display for EntryPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(usize::to_string).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for EntryPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_divides(m: usize, k: usize) -> Result<()> {
    if k == 0 || m % k != 0 {
        return Err(HntError::param(format!(
            "block size {k} does not divide m={m}"
        )));
    }
    Ok(())
}

/// All block systems of the entry action of `x`, trivial ones included,
/// sorted from finest to coarsest.
pub fn invariant_partitions(x: &GroupGens) -> Result<Vec<EntryPartition>> {
    if !x.is_transitive_on_entries() {
        return Err(HntError::IntransitiveOnEntries);
    }
    let m = x.params().m();
    let perms = x.entry_perms();
    let mut systems: BTreeSet<EntryPartition> = BTreeSet::new();
    systems.insert(EntryPartition::discrete(m));
    for i in 1..m {
        systems.insert(minimal_block_system(m, &perms, i));
    }
    // every block system is a join of minimal ones
    loop {
        let list: Vec<EntryPartition> = systems.iter().cloned().collect();
        let mut grew = false;
        for (a, pa) in list.iter().enumerate() {
            for pb in &list[a + 1..] {
                grew |= systems.insert(pa.join(pb));
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<EntryPartition> = systems.into_iter().collect();
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// The finest block system in which `0` and `i` share a block.
fn minimal_block_system(m: usize, perms: &[Perm], i: usize) -> EntryPartition {
    let mut uf = UnionFind::new(m);
    uf.union(0, i);
    let mut queue = vec![(0, i)];
    while let Some((a, b)) = queue.pop() {
        for p in perms {
            let (c, d) = (uf.find(p.apply(a)), uf.find(p.apply(b)));
            if c != d {
                uf.union(c, d);
                queue.push((c, d));
            }
        }
    }
    uf.partition()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn partition(&mut self) -> EntryPartition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|j| self.find(j)).collect();
        EntryPartition::from_labels(&labels)
    }
}
