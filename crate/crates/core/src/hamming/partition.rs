use crate::error::Result;
use crate::exec::{self, Execution};
use crate::hamming::{Code, GraphParams, Vertex};

/// The cells `C_0, ..., C_rho` of vertices at each distance from a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePartition {
    params: GraphParams,
    cells: Vec<Vec<u64>>,
}

impl DistancePartition {
    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn covering_radius(&self) -> usize {
        self.cells.len() - 1
    }

    /// Sorted indices of `C_r`; empty when `r > rho`.
    pub fn cell(&self, r: usize) -> &[u64] {
        self.cells.get(r).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `C_r` as a code, or `None` when `r > rho`.
    pub fn cell_code(&self, r: usize) -> Option<Code> {
        self.cells
            .get(r)
            .map(|c| Code::from_sorted_unchecked(self.params, c.clone()))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Index of the cell holding `v`.
    pub fn level_of(&self, v: &Vertex) -> Option<usize> {
        let idx = v.index();
        self.cells
            .iter()
            .position(|c| c.binary_search(&idx).is_ok())
    }
}

/// Largest distance from any vertex to the code.
pub fn covering_radius(code: &Code, vertex_budget: u64) -> Result<usize> {
    Ok(distance_partition(code, vertex_budget)?.covering_radius())
}

pub fn distance_partition(code: &Code, vertex_budget: u64) -> Result<DistancePartition> {
    distance_partition_with(code, vertex_budget, Execution::default())
}

/// Multi-source breadth-first search from the code, one level at a time.
/// Each frontier is expanded in parallel when `exec` allows; the visited
/// labels are only written between levels.
pub fn distance_partition_with(
    code: &Code,
    vertex_budget: u64,
    exec: Execution,
) -> Result<DistancePartition> {
    let params = code.params();
    params.ensure_vertex_budget(vertex_budget)?;
    let (m, q) = (params.m(), params.q() as u64);
    let weights: Vec<u64> = (0..m).map(|i| params.weight(i)).collect();

    const UNSEEN: u8 = u8::MAX;
    let mut label = vec![UNSEEN; params.vertex_count() as usize];
    for &w in code.indices() {
        label[w as usize] = 0;
    }
    let mut cells = vec![code.indices().to_vec()];
    loop {
        let frontier = cells.last().unwrap();
        let label_ref = &label;
        let mut next = exec::flat_map(exec, frontier, |&x| {
            let mut out = Vec::new();
            for &w in &weights {
                let digit = (x / w) % q;
                let base = x - digit * w;
                for s in 0..q {
                    let y = base + s * w;
                    if s != digit && label_ref[y as usize] == UNSEEN {
                        out.push(y);
                    }
                }
            }
            out
        });
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        next.dedup();
        let level = cells.len() as u8;
        for &y in &next {
            label[y as usize] = level;
        }
        cells.push(next);
    }
    Ok(DistancePartition { params, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamming::{dist_to_code, Vertex};

    #[test]
    fn singleton_gives_binomial_spheres() {
        let p = GraphParams::new(4, 2).unwrap();
        let c = Code::new(p, [Vertex::constant(p, 0).unwrap()]).unwrap();
        let dp = distance_partition(&c, 1000).unwrap();
        assert_eq!(dp.sizes(), vec![1, 4, 6, 4, 1]);
        assert_eq!(dp.covering_radius(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        let p = GraphParams::new(10, 5).unwrap();
        let c = Code::new(p, [Vertex::constant(p, 0).unwrap()]).unwrap();
        let err = distance_partition(&c, 1_000_000).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn cells_agree_with_dist_to_code() {
        let p = GraphParams::new(3, 4).unwrap();
        let c = Code::from_indices(p, vec![0, 21, 37]).unwrap();
        let dp = distance_partition(&c, 1000).unwrap();
        for idx in 0..p.vertex_count() {
            let v = Vertex::from_index(p, idx).unwrap();
            assert_eq!(dp.level_of(&v), Some(dist_to_code(&v, &c).unwrap()));
        }
        let seq = distance_partition_with(&c, 1000, Execution::Sequential).unwrap();
        assert_eq!(seq, dp);
    }
}
