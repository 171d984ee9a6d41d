//! The function `R(N) = min { l(a) + l(b) : a + b = N, a, b >= -1 }` over a
//! gonality sequence, where `l` is [`GonalitySequence::ell_tilde`], together
//! with its jump set and closed forms.
//!
//! The brute-force minimization is the ground truth. Every closed form is
//! compared against it when an [`RTable`] is built.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gonality::{GonalitySequence, Origin};

fn check_domain(gs: &GonalitySequence, n: i64) -> Result<()> {
    let max = 2 * gs.genus() as i64 - 2;
    if n < -1 || n > max {
        Err(Error::OutOfDomain { arg: n, max })
    } else {
        Ok(())
    }
}

#[inline]
fn split_value(gs: &GonalitySequence, n: i64, a: i64) -> i64 {
    gs.ell_tilde_unchecked(a) + gs.ell_tilde_unchecked(n - a)
}

/// `R(N)` by minimizing over every split `a + (N - a)` with
/// `a in [-1, N + 1]`. Returns the value and the first minimizing split.
pub fn r_bruteforce(gs: &GonalitySequence, n: i64) -> Result<(i64, (i64, i64))> {
    check_domain(gs, n)?;
    let (value, a) = (-1..=n + 1)
        .map(|a| (split_value(gs, n, a), a))
        .min()
        .expect("non-empty range");
    Ok((value, (a, n - a)))
}

/// A minimizing split whose first part is a gap not exceeding `N/2`.
pub fn gap_witness(gs: &GonalitySequence, n: i64) -> Result<Option<(i64, i64)>> {
    let (value, _) = r_bruteforce(gs, n)?;
    Ok((-1..=n.div_euclid(2))
        .filter(|&a| gs.is_gap(a) && split_value(gs, n, a) == value)
        .map(|a| (a, n - a))
        .next())
}

/// `R(N)` minimizing only over `a = floor(N/2)` and gaps `a <= N/2` whose
/// successor belongs to the sequence.
pub fn r_restricted(gs: &GonalitySequence, n: i64) -> Result<i64> {
    check_domain(gs, n)?;
    let half = n.div_euclid(2);
    let candidates =
        std::iter::once(half).chain((-1..=half).filter(|&a| gs.is_gap(a) && gs.contains(a + 1)));
    Ok(candidates
        .map(|a| split_value(gs, n, a))
        .min()
        .expect("floor(N/2) is a candidate"))
}

/// Largest deviation `gamma_i - (2i - 2)` over `i = 1..g`.
pub fn max_hyperelliptic_deviation(gs: &GonalitySequence) -> i64 {
    gs.gammas()
        .iter()
        .enumerate()
        .map(|(i, &gamma)| gamma - 2 * i as i64)
        .max()
        .unwrap_or(0)
}

/// `R(2g - 2) = min { 2 l(g - 1), g - max_i (gamma_i - (2i - 2)) }`.
pub fn r_top_closed_form(gs: &GonalitySequence) -> i64 {
    let g = gs.genus() as i64;
    (2 * gs.ell_tilde_unchecked(g - 1)).min(g - max_hyperelliptic_deviation(gs))
}

/// The same expression with `2 R(g - 1)` in place of `2 l(g - 1)`. It
/// undershoots `R(2g - 2)` for some curves (plane degree 8 gives 10 against
/// 12) and is kept for diagnostics only.
pub fn r_top_alternative_form(gs: &GonalitySequence) -> Result<i64> {
    let g = gs.genus() as i64;
    let (half, _) = r_bruteforce(gs, g - 1)?;
    Ok((2 * half).min(g - max_hyperelliptic_deviation(gs)))
}

/// `floor((N + 1)/2) + 1`, the value of `R` on hyperelliptic curves and an
/// upper bound in general.
pub fn hyperelliptic_r(n: i64) -> i64 {
    (n + 1).div_euclid(2) + 1
}

/// Jumps of a plane curve of degree `r + 1`: the integers `alpha r + beta`
/// with `-1 <= alpha <= r - 1`, `0 <= beta <= r - 1`, and
/// `2 beta + 2 <= alpha` or `beta = r - 1`, other than `2g - 1`, that lie
/// in `[-1, 2g - 2]`. Sorted.
pub fn plane_jumps(r: u32) -> Result<Vec<i64>> {
    if r < 2 {
        return Err(Error::DegreeTooSmall(r));
    }
    let r = r as i64;
    let g = r * (r - 1) / 2;
    let mut out: Vec<i64> = (-1..r)
        .flat_map(|alpha| (0..r).map(move |beta| (alpha, beta)))
        .filter(|&(alpha, beta)| 2 * beta + 2 <= alpha || beta == r - 1)
        .map(|(alpha, beta)| alpha * r + beta)
        .filter(|&u| u != 2 * g - 1 && (-1..=2 * g - 2).contains(&u))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `floor(r^2 / 4)`: `r^2/4` for even `r`, `(r^2 - 1)/4` for odd `r`.
pub fn plane_jump_count(r: u32) -> i64 {
    (r as i64 * r as i64) / 4
}

/// `R(N)` on a plane curve by counting jumps not exceeding `N`.
pub fn r_plane_jump_count(r: u32, n: i64) -> Result<i64> {
    let g = r as i64 * (r as i64 - 1) / 2;
    if n < -1 || n > 2 * g - 2 {
        return Err(Error::OutOfDomain {
            arg: n,
            max: 2 * g - 2,
        });
    }
    Ok(plane_jumps(r)?.iter().filter(|&&u| u <= n).count() as i64)
}

/// Plane-curve reduction of the restricted minimization: with
/// `floor(N/2) = alpha r + beta` and `alpha >= 1`, the only competitors are
/// the balanced split and `l(alpha r - 1) + l(N - alpha r + 1)`. `None`
/// when `alpha = 0` or `N < 0`.
pub fn r_plane_balanced_form(gs: &GonalitySequence, r: u32, n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = r as i64;
    let half = n / 2;
    let alpha = half / r;
    if alpha < 1 {
        return None;
    }
    let shifted = gs.ell_tilde_unchecked(alpha * r - 1) + gs.ell_tilde_unchecked(n - alpha * r + 1);
    if gs.contains(half) {
        Some(shifted)
    } else {
        let balanced = gs.ell_tilde_unchecked(half) + gs.ell_tilde_unchecked(n - half);
        Some(balanced.min(shifted))
    }
}

/// Row-counting formula for plane curves with `N = alpha r + beta`,
/// `0 <= alpha <= r - 2`, `-1 <= beta <= r - 2`, in the case
/// `beta <= floor(alpha/2) - 1`: `alpha(alpha+2)/4 + beta + 1` for even
/// `alpha`, `(alpha+1)^2/4 + beta + 1` for odd `alpha`. This constant
/// disagrees with jump counting (which gives `beta + 2` more than the rows
/// before `alpha`); it is evaluated for diagnostics only. `None` outside
/// its case.
pub fn r_plane_row_formula(r: u32, n: i64) -> Option<i64> {
    let r = r as i64;
    // beta ranges over [-1, r - 2], so shift by one before dividing
    let alpha = (n + 1).div_euclid(r);
    let beta = n - alpha * r;
    if !(0..=r - 2).contains(&alpha) || beta > alpha / 2 - 1 {
        return None;
    }
    Some(if alpha % 2 == 0 {
        alpha * (alpha + 2) / 4 + beta + 1
    } else {
        (alpha + 1) * (alpha + 1) / 4 + beta + 1
    })
}

/// `R` over its whole domain `[-1, 2g - 2]` with witnesses and jumps.
#[derive(Clone, Debug, Serialize)]
pub struct RTable {
    pub genus: u32,
    /// `values[N + 1] = R(N)`.
    pub values: Vec<i64>,
    /// Minimizing split for each `N`, first part a gap `<= N/2`.
    pub witnesses: Vec<(i64, i64)>,
    /// `-1` together with every `N` where `R(N) > R(N - 1)`.
    pub jumps: Vec<i64>,
}

impl RTable {
    /// Builds the table by brute force and checks the restricted
    /// minimization, the `R(2g - 2)` closed form and, for plane curves, the
    /// jump description and balanced-split form against it.
    pub fn new(gs: &GonalitySequence) -> Result<RTable> {
        let g = gs.genus() as i64;
        let mut values = Vec::with_capacity(2 * g as usize);
        let mut witnesses = Vec::with_capacity(2 * g as usize);
        for n in -1..=2 * g - 2 {
            let (v, _) = r_bruteforce(gs, n)?;
            let w = gap_witness(gs, n)?
                .ok_or_else(|| Error::ClosedFormMismatch(format!("no gap witness for R({n})")))?;
            let restricted = r_restricted(gs, n)?;
            if restricted != v {
                return Err(Error::ClosedFormMismatch(format!(
                    "restricted R({n}) = {restricted}, brute force {v}"
                )));
            }
            values.push(v);
            witnesses.push(w);
        }
        let jumps: Vec<i64> = std::iter::once(-1)
            .chain((0..=2 * g - 2).filter(|&n| values[(n + 1) as usize] > values[n as usize]))
            .collect();
        let top = *values.last().expect("domain is non-empty");
        if r_top_closed_form(gs) != top {
            return Err(Error::ClosedFormMismatch(format!(
                "R(2g-2) closed form {} vs brute force {top}",
                r_top_closed_form(gs)
            )));
        }
        if let Origin::Plane(r) = gs.origin() {
            let expected = plane_jumps(r)?;
            if expected != jumps {
                return Err(Error::ClosedFormMismatch(format!(
                    "plane jumps {expected:?} vs brute force {jumps:?}"
                )));
            }
            for n in 0..=2 * g - 2 {
                if let Some(v) = r_plane_balanced_form(gs, r, n) {
                    if v != values[(n + 1) as usize] {
                        return Err(Error::ClosedFormMismatch(format!(
                            "balanced-split R({n}) = {v}, brute force {}",
                            values[(n + 1) as usize]
                        )));
                    }
                }
            }
        }
        Ok(RTable {
            genus: gs.genus(),
            values,
            witnesses,
            jumps,
        })
    }

    pub fn get(&self, n: i64) -> Result<i64> {
        let max = 2 * self.genus as i64 - 2;
        if n < -1 || n > max {
            return Err(Error::OutOfDomain { arg: n, max });
        }
        Ok(self.values[(n + 1) as usize])
    }

    pub fn top(&self) -> i64 {
        *self.values.last().expect("non-empty")
    }

    pub fn domain(&self) -> std::ops::RangeInclusive<i64> {
        -1..=2 * self.genus as i64 - 2
    }
}
