//! State-complexity profiles from past and future subcode dimensions.
//!
//! `p_i` is the dimension of the codewords vanishing on coordinates
//! `i+1..n`, `f_i` of those vanishing on `1..i`. Both are column-rank
//! complements: `f_i = k - rank(G[.., 0..i])` and `p_i = k - rank(G[.., i..n])`.
//! All prefix ranks come from one elimination (pivots are taken in column
//! order, so the rank of the first `i` columns is the number of pivots
//! below `i`), and all suffix ranks from a second elimination on the
//! column-reversed generator.

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateProfile {
    pub n: usize,
    pub k: usize,
    /// Past subcode dimensions `p_0..p_n`.
    pub past: Vec<usize>,
    /// Future subcode dimensions `f_0..f_n`.
    pub future: Vec<usize>,
    pub delta: Vec<usize>,
    pub state: Vec<usize>,
    pub s_max: usize,
    pub delta_min: usize,
    pub argmax: Vec<usize>,
}

impl StateProfile {
    pub fn of(code: &LinearCode) -> StateProfile {
        let k = code.dimension();
        let n = code.length();
        let prefix = prefix_ranks(code, false);
        let suffix = prefix_ranks(code, true);
        let future: Vec<usize> = (0..=n).map(|i| k - prefix[i]).collect();
        let past: Vec<usize> = (0..=n).map(|i| k - suffix[n - i]).collect();
        StateProfile::from_dims(k, past, future)
    }

    fn from_dims(k: usize, past: Vec<usize>, future: Vec<usize>) -> StateProfile {
        let n = past.len() - 1;
        let delta: Vec<usize> = past.iter().zip(&future).map(|(p, f)| p + f).collect();
        let state: Vec<usize> = delta.iter().map(|d| k - d).collect();
        let delta_min = *delta.iter().min().expect("n + 1 entries");
        let s_max = k - delta_min;
        let argmax = (0..=n).filter(|&i| state[i] == s_max).collect();
        StateProfile {
            n,
            k,
            past,
            future,
            delta,
            state,
            s_max,
            delta_min,
            argmax,
        }
    }

    /// Same profile computed through independent rank computations per
    /// index. Slower; used to cross-check [`StateProfile::of`].
    pub fn by_column_ranks(code: &LinearCode) -> StateProfile {
        let n = code.length();
        let k = code.dimension();
        let past = (0..=n)
            .map(|i| past_dim(code, i).expect("in range"))
            .collect();
        let future = (0..=n)
            .map(|i| future_dim(code, i).expect("in range"))
            .collect();
        StateProfile::from_dims(k, past, future)
    }

    /// Indices `i` in `1..=n` where both `p` and `f` change between `i-1`
    /// and `i`. Empty for formally self-orthogonal codes.
    pub fn fso_step_violations(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.past[i - 1] != self.past[i] && self.future[i - 1] != self.future[i])
            .collect()
    }

    /// Pairs `i <= j` with `(p_j - p_i) + (f_i - f_j) > j - i`.
    pub fn span_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.n {
            for j in i..=self.n {
                if (self.past[j] - self.past[i]) + (self.future[i] - self.future[j]) > j - i {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// `rank(G[.., 0..i])` for i in 0..=n, or of the last i columns when
/// `reversed`.
fn prefix_ranks(code: &LinearCode, reversed: bool) -> Vec<usize> {
    let g = code.generator();
    let n = g.cols();
    let mut m = if reversed {
        let order: Vec<usize> = (0..n).rev().collect();
        g.select_columns(&order).expect("valid columns")
    } else {
        g.clone()
    };
    let pivots = m.reduce_in_place();
    let mut ranks = vec![0usize; n + 1];
    let mut count = 0;
    let mut next = pivots.iter().peekable();
    for (i, slot) in ranks.iter_mut().enumerate().skip(1) {
        while next.peek().is_some_and(|&&c| c < i) {
            next.next();
            count += 1;
        }
        *slot = count;
    }
    ranks
}

/// Dimension of the `i`-th past subcode.
pub fn past_dim(code: &LinearCode, i: usize) -> Result<usize> {
    let n = code.length();
    if i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: n + 1,
        });
    }
    let cols: Vec<usize> = (i..n).collect();
    Ok(code.dimension() - code.generator().rank_of_columns(&cols)?)
}

/// Dimension of the `i`-th future subcode.
pub fn future_dim(code: &LinearCode, i: usize) -> Result<usize> {
    let n = code.length();
    if i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: n + 1,
        });
    }
    let cols: Vec<usize> = (0..i).collect();
    Ok(code.dimension() - code.generator().rank_of_columns(&cols)?)
}
