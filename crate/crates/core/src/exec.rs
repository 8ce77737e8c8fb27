//! Sequential/parallel execution switch.
//!
//! Hot loops (distance partitions, orbit frontiers, closure enumeration,
//! classification sweeps) go through the helpers here. With the `parallel`
//! feature they run on rayon's global pool; without it, or when
//! [`Execution::Sequential`] is requested, they run on the calling thread.
//! Both paths produce identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How the data-parallel loops in an operation are executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Whether parallel execution is actually available for this value.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

// Below this many items the rayon split overhead dominates.
#[cfg(feature = "parallel")]
const MIN_PAR_LEN: usize = 64;

pub(crate) fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() >= MIN_PAR_LEN {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

pub(crate) fn flat_map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() >= MIN_PAR_LEN {
        return items.par_iter().flat_map_iter(f).collect();
    }
    let _ = exec;
    items.iter().flat_map(f).collect()
}

pub(crate) fn filter_map_range<R, F>(exec: Execution, range: std::ops::Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && range.end.saturating_sub(range.start) >= MIN_PAR_LEN as u64 {
        return range.into_par_iter().filter_map(f).collect();
    }
    let _ = exec;
    range.filter_map(f).collect()
}
