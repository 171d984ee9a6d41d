//! Sequential or data-parallel evaluation of independent work items.
//!
//! With the `parallel` feature disabled, [`Execution::Parallel`] runs
//! sequentially. Results never depend on the mode: every reduction here
//! breaks ties by the lowest item index.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run work in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// `f(i)` for every `i` in `0..len`, in index order.
    pub fn map<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// The item minimizing `key`, lowest index on ties.
    pub fn min_by_key<T, K, F>(self, len: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        K: Ord + Send,
        F: Fn(usize) -> (K, T) + Sync + Send,
    {
        let pick = |a: (K, usize, T), b: (K, usize, T)| {
            if (&b.0, b.1) < (&a.0, a.1) {
                b
            } else {
                a
            }
        };
        let best = match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len)
                .into_par_iter()
                .map(|i| {
                    let (k, t) = f(i);
                    (k, i, t)
                })
                .reduce_with(pick),
            _ => (0..len)
                .map(|i| {
                    let (k, t) = f(i);
                    (k, i, t)
                })
                .reduce(pick),
        };
        best.map(|(_, i, t)| (i, t))
    }

    /// `true` iff `pred` holds for every index.
    pub fn all<F>(self, len: usize, pred: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().all(pred),
            _ => (0..len).all(pred),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let key = |i: usize| (((i * 37) % 11) as u32, i * 2);
        for mode in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(mode.map(5, |i| i * i), vec![0, 1, 4, 9, 16]);
            // 0, 37 % 11 = 4, ... value 0 first attained at i = 0 and i = 11
            assert_eq!(mode.min_by_key(20, key), Some((0, 0)));
            assert_eq!(mode.min_by_key(20, |i| key(i + 1)), Some((10, 22)));
            assert!(mode.all(10, |i| i < 10));
            assert_eq!(mode.min_by_key(0, key), None);
        }
    }
}
