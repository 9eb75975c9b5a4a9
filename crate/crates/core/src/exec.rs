//! Execution strategy for the data-parallel scans.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How index ranges are scanned.
///
/// `Parallel` uses the rayon pool when the `parallel` feature is enabled and
/// degrades to a sequential scan otherwise. Results come back in index order
/// either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Exec {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// `(0..len).filter_map(f)` in index order.
    pub fn filter_map<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..len)
                .into_par_iter()
                .with_min_len(256)
                .filter_map(f)
                .collect(),
            _ => (0..len).filter_map(f).collect(),
        }
    }

    /// `items.iter().map(f)` in order.
    pub fn map<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }
}
