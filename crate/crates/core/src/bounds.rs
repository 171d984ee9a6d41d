//! Lower and upper bounds on the state complexity of AG codes.
//!
//! Bounds are plain functions of parameters so they can be evaluated for
//! curves whose codes are never built. [`bound_report`] gathers all of
//! them and, for a concrete code, compares against the exact profile and
//! a permutation search.

use std::fmt::Write as _;

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gonality::GonalitySequence;
use crate::hermitian::AgParams;
use crate::profile::StateProfile;
use crate::rfunction::r_bruteforce;
use crate::search::{absolute_complexity_search, SearchConfig};

/// `min(k, n - k)`, an upper bound on `s(C)` for every coordinate order.
pub fn wolf_bound(n: usize, k: usize) -> i64 {
    k.min(n - k) as i64
}

/// For AG codes with `m < floor(n/2)` or `m > ceil(n/2) + 2g - 2` the state
/// complexity equals the Wolf bound.
pub fn equality_region(n: usize, m: i64, g: u32) -> bool {
    let n = n as i64;
    m < n / 2 || m > (n + 1) / 2 + 2 * g as i64 - 2
}

/// `ceil(n/2) - g - 1`; informational outside the middle region.
pub fn clifford_bound(n: usize, g: u32) -> i64 {
    (n as i64 + 1) / 2 - g as i64 - 1
}

/// `min(k, n - k) - (g - abundance)`.
pub fn goppa_like_bound(n: usize, k: usize, g: u32, abundance: usize) -> i64 {
    wolf_bound(n, k) - (g as i64 - abundance as i64)
}

fn check_half_rate(n: usize, k: usize, g: u32) -> Result<()> {
    if 2 * k > n {
        return Err(Error::HypothesisViolated(format!(
            "need 2k <= n, got k = {k}, n = {n}"
        )));
    }
    if n as i64 <= 2 * g as i64 {
        return Err(Error::HypothesisViolated(format!(
            "need n > 2g, got n = {n}, g = {g}"
        )));
    }
    Ok(())
}

/// Outcome of the `R`-function bound `s[C] >= w - R(2m - n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RBound {
    /// `2m - n`.
    pub argument: i64,
    /// `w - R(2m - n)`, or `w` itself when `2m - n < -1`.
    pub value: i64,
    /// The weaker `w - R(2g - 2)`.
    pub chained: i64,
    /// `2m - n < -1`: the minimum distance forces `s(C) = k` for every
    /// order and `R` is not evaluated.
    pub equality_regime: bool,
}

pub fn r_function_bound(gs: &GonalitySequence, n: usize, m: i64, k: usize) -> Result<RBound> {
    let g = gs.genus();
    check_half_rate(n, k, g)?;
    let w = wolf_bound(n, k);
    let argument = 2 * m - n as i64;
    let top = 2 * g as i64 - 2;
    if argument > top {
        return Err(Error::HypothesisViolated(format!(
            "2m - n = {argument} exceeds 2g - 2 = {top}"
        )));
    }
    let chained = w - r_bruteforce(gs, top)?.0;
    if argument < -1 {
        return Ok(RBound {
            argument,
            value: w,
            chained,
            equality_regime: true,
        });
    }
    let value = w - r_bruteforce(gs, argument)?.0;
    Ok(RBound {
        argument,
        value,
        chained,
        equality_regime: false,
    })
}

/// `s[C] >= w - g + gamma_2 - 2`.
pub fn gonality_bound(n: usize, k: usize, g: u32, gamma2: i64) -> Result<i64> {
    check_half_rate(n, k, g)?;
    Ok(wolf_bound(n, k) - g as i64 + gamma2 - 2)
}

/// For formally self-orthogonal codes with `2d <= n + 1`:
/// `s[C] >= k - floor((n - 2d + 2)/2)`.
pub fn fso_delta_bound(n: usize, k: usize, d: usize) -> Result<i64> {
    if 2 * d > n + 1 {
        return Err(Error::HypothesisViolated(format!(
            "need 2d <= n + 1, got d = {d}, n = {n}"
        )));
    }
    Ok(k as i64 - ((n as i64 - 2 * d as i64 + 2) / 2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Applicability {
    pub bound: &'static str,
    pub applicable: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub m: i64,
    pub g: u32,
    pub gamma2: i64,
    pub wolf: i64,
    pub equality_region: bool,
    pub clifford: i64,
    pub goppa_like: i64,
    pub r_bound: Option<RBound>,
    pub gonality_bound: Option<i64>,
    pub fso_bound: Option<i64>,
    pub min_distance: Option<usize>,
    pub exact_s: Option<usize>,
    pub searched_s: Option<usize>,
    pub applicability: Vec<Applicability>,
}

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub exact_profile: bool,
    pub search: Option<SearchConfig>,
    /// Cap on codewords enumerated for the minimum distance.
    pub distance_cap: u128,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            exact_profile: true,
            search: None,
            distance_cap: 1 << 16,
        }
    }
}

pub fn bound_report(
    params: &AgParams,
    code: Option<&LinearCode>,
    opts: &ReportOptions,
) -> Result<BoundReport> {
    let (n, k, m, g) = (params.n, params.k, params.m, params.genus);
    let gamma2 = params.gs.gonality();
    let w = wolf_bound(n, k);
    let eq = equality_region(n, m, g);
    let mut app = Vec::new();
    let half_rate = check_half_rate(n, k, g);
    let half_reason = match &half_rate {
        Ok(()) => "2k <= n and n > 2g".to_string(),
        Err(e) => e.to_string(),
    };

    app.push(Applicability {
        bound: "clifford",
        applicable: !eq,
        reason: if eq {
            "outside the middle degree region; informational".into()
        } else {
            "middle degree region".into()
        },
    });
    app.push(Applicability {
        bound: "goppa_like",
        applicable: half_rate.is_ok(),
        reason: half_reason.clone(),
    });

    let r_bound = match r_function_bound(&params.gs, n, m, k) {
        Ok(b) => {
            app.push(Applicability {
                bound: "r_bound",
                applicable: true,
                reason: if b.equality_regime {
                    "2m - n < -1: equality regime, bound is w".into()
                } else {
                    half_reason.clone()
                },
            });
            Some(b)
        }
        Err(e) => {
            app.push(Applicability {
                bound: "r_bound",
                applicable: false,
                reason: e.to_string(),
            });
            None
        }
    };
    let gonality = match gonality_bound(n, k, g, gamma2) {
        Ok(v) => {
            app.push(Applicability {
                bound: "gonality",
                applicable: true,
                reason: half_reason,
            });
            Some(v)
        }
        Err(e) => {
            app.push(Applicability {
                bound: "gonality",
                applicable: false,
                reason: e.to_string(),
            });
            None
        }
    };

    let mut report = BoundReport {
        n,
        k,
        m,
        g,
        gamma2,
        wolf: w,
        equality_region: eq,
        clifford: clifford_bound(n, g),
        goppa_like: goppa_like_bound(n, k, g, params.abundance),
        r_bound,
        gonality_bound: gonality,
        fso_bound: None,
        min_distance: None,
        exact_s: None,
        searched_s: None,
        applicability: app,
    };

    match code {
        Some(code) => {
            if code.length() != n || code.dimension() != k {
                return Err(Error::ShapeMismatch(format!(
                    "code is [{}, {}], parameters say [{n}, {k}]",
                    code.length(),
                    code.dimension()
                )));
            }
            if opts.exact_profile {
                report.exact_s = Some(StateProfile::of(code).s_max);
            }
            if let Some(cfg) = &opts.search {
                report.searched_s = Some(absolute_complexity_search(code, cfg)?.best_s);
            }
            report.min_distance = code.min_distance(opts.distance_cap).ok();
            let so = code.is_self_orthogonal();
            let fso = match (so, report.min_distance) {
                (false, _) => Err("not self-orthogonal".to_string()),
                (true, None) => Err("minimum distance not enumerated".to_string()),
                (true, Some(d)) => fso_delta_bound(n, k, d).map_err(|e| e.to_string()),
            };
            match fso {
                Ok(v) => {
                    report.fso_bound = Some(v);
                    report.applicability.push(Applicability {
                        bound: "fso",
                        applicable: true,
                        reason: "self-orthogonal with 2d <= n + 1".into(),
                    });
                }
                Err(reason) => report.applicability.push(Applicability {
                    bound: "fso",
                    applicable: false,
                    reason,
                }),
            }
        }
        None => report.applicability.push(Applicability {
            bound: "fso",
            applicable: false,
            reason: "no concrete code".into(),
        }),
    }
    report.check()?;
    Ok(report)
}

/// Reports for many parameter sets, possibly in parallel. Output order
/// follows input order.
pub fn bound_reports(
    items: &[AgParams],
    opts: &ReportOptions,
    exec: Execution,
) -> Vec<Result<BoundReport>> {
    exec.map(items.len(), |i| bound_report(&items[i], None, opts))
}

impl BoundReport {
    fn applicable(&self, bound: &str) -> bool {
        self.applicability
            .iter()
            .any(|a| a.bound == bound && a.applicable)
    }

    /// Applicable lower bounds on the absolute state complexity.
    pub fn absolute_lower_bounds(&self) -> Vec<(&'static str, i64)> {
        let mut out = Vec::new();
        if self.applicable("goppa_like") {
            out.push(("goppa_like", self.goppa_like));
        }
        if let Some(b) = &self.r_bound {
            out.push(("r_bound", b.value));
            out.push(("r_bound_chained", b.chained));
        }
        if let Some(v) = self.gonality_bound {
            out.push(("gonality", v));
        }
        if let Some(v) = self.fso_bound {
            out.push(("fso", v));
        }
        out
    }

    /// Every applicable lower bound is at most the Wolf bound and, when
    /// known, at most the exact and searched state complexities.
    pub fn check(&self) -> Result<()> {
        let mut lower = self.absolute_lower_bounds();
        let clifford_applies = self.applicable("clifford");
        for &(name, v) in &lower {
            if v > self.wolf {
                return Err(Error::BoundViolated(format!(
                    "{name} = {v} exceeds w = {}",
                    self.wolf
                )));
            }
        }
        if let Some(s) = self.searched_s {
            for &(name, v) in &lower {
                if v > s as i64 {
                    return Err(Error::BoundViolated(format!(
                        "{name} = {v} exceeds searched s = {s}"
                    )));
                }
            }
        }
        if clifford_applies {
            lower.push(("clifford", self.clifford));
        }
        if let Some(s) = self.exact_s {
            let s = s as i64;
            if s > self.wolf {
                return Err(Error::BoundViolated(format!(
                    "exact s = {s} exceeds w = {}",
                    self.wolf
                )));
            }
            for &(name, v) in &lower {
                if v > s {
                    return Err(Error::BoundViolated(format!(
                        "{name} = {v} exceeds exact s = {s}"
                    )));
                }
            }
            if self.equality_region && s != self.wolf {
                return Err(Error::BoundViolated(format!(
                    "equality region but exact s = {s} != w = {}",
                    self.wolf
                )));
            }
        }
        // goppa_like <= gonality <= r_bound <= w
        if let (Some(b), Some(gb)) = (&self.r_bound, self.gonality_bound) {
            if !(self.goppa_like <= gb && gb <= b.chained && b.chained <= b.value) {
                return Err(Error::BoundViolated(format!(
                    "ordering goppa_like {} <= gonality {gb} <= chained {} <= r_bound {} fails",
                    self.goppa_like, b.chained, b.value
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned two-column text.
    pub fn to_text(&self) -> String {
        let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        let optu = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        let mut rows: Vec<(String, String)> = vec![
            ("n".into(), self.n.to_string()),
            ("k".into(), self.k.to_string()),
            ("m".into(), self.m.to_string()),
            ("g".into(), self.g.to_string()),
            ("gamma2".into(), self.gamma2.to_string()),
            ("wolf".into(), self.wolf.to_string()),
            ("equality_region".into(), self.equality_region.to_string()),
            ("clifford".into(), self.clifford.to_string()),
            ("goppa_like".into(), self.goppa_like.to_string()),
            ("r_bound".into(), opt(self.r_bound.map(|b| b.value))),
            (
                "r_bound_argument".into(),
                opt(self.r_bound.map(|b| b.argument)),
            ),
            (
                "r_bound_chained".into(),
                opt(self.r_bound.map(|b| b.chained)),
            ),
            ("gonality_bound".into(), opt(self.gonality_bound)),
            ("fso_bound".into(), opt(self.fso_bound)),
            ("min_distance".into(), optu(self.min_distance)),
            ("exact_s".into(), optu(self.exact_s)),
            ("searched_s".into(), optu(self.searched_s)),
        ];
        for a in &self.applicability {
            rows.push((
                format!("applies.{}", a.bound),
                format!("{} ({})", if a.applicable { "yes" } else { "no" }, a.reason),
            ));
        }
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{ag_params_abstract, hermitian_code};

    #[test]
    fn simple_bounds() {
        assert_eq!(wolf_bound(8, 3), 3);
        assert_eq!(wolf_bound(27, 12), 12);
        assert_eq!(wolf_bound(7, 4), 3);
        assert!(equality_region(8, 3, 1));
        assert!(!equality_region(27, 14, 3));
        assert!(!equality_region(27, 13, 3));
        assert!(!equality_region(27, 18, 3));
        assert!(equality_region(27, 19, 3));
        assert_eq!(clifford_bound(27, 3), 10);
        assert_eq!(clifford_bound(8, 1), 2);
        assert_eq!(clifford_bound(64, 6), 25);
        assert_eq!(goppa_like_bound(27, 12, 3, 0), 9);
        assert_eq!(goppa_like_bound(10, 4, 0, 0), wolf_bound(10, 4));
        assert_eq!(goppa_like_bound(64, 28, 6, 0), 22);
        assert_eq!(fso_delta_bound(8, 3, 4).unwrap(), 2);
        assert_eq!(fso_delta_bound(9, 4, 5).unwrap(), 4);
        assert!(fso_delta_bound(8, 3, 5).is_err());
    }

    #[test]
    fn r_function_bounds() {
        let p3 = GonalitySequence::plane(3).unwrap();
        let b = r_function_bound(&p3, 27, 14, 12).unwrap();
        assert_eq!((b.argument, b.value), (1, 11));
        let b = r_function_bound(&p3, 27, 13, 11).unwrap();
        assert_eq!((b.argument, b.value), (-1, 10));
        let b = r_function_bound(&p3, 27, 10, 8).unwrap();
        assert!(b.equality_regime);
        assert_eq!(b.value, 8);
        let p4 = GonalitySequence::plane(4).unwrap();
        let b = r_function_bound(&p4, 64, 32, 27).unwrap();
        assert_eq!((b.argument, b.value), (0, 26));
        assert_eq!(gonality_bound(27, 12, 3, 3).unwrap(), 10);
        assert_eq!(gonality_bound(64, 27, 6, 4).unwrap(), 23);
        assert!(matches!(
            gonality_bound(27, 14, 3, 3),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            r_function_bound(&p3, 6, 2, 2),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn hermitian_reports() {
        let c = hermitian_code(3, 14).unwrap();
        let r = bound_report(&c.params, Some(&c.code), &ReportOptions::default()).unwrap();
        assert_eq!(r.wolf, 12);
        assert_eq!(r.r_bound.unwrap().value, 11);
        assert_eq!(r.gonality_bound, Some(10));
        assert_eq!(r.goppa_like, 9);
        assert_eq!(r.clifford, 10);
        assert!(r.exact_s.is_some());

        let c = hermitian_code(2, 3).unwrap();
        let r = bound_report(&c.params, Some(&c.code), &ReportOptions::default()).unwrap();
        assert!(r.equality_region);
        assert_eq!(r.exact_s, Some(3));
        assert_eq!(r.wolf, 3);
    }

    #[test]
    fn abstract_report() {
        let gs = GonalitySequence::plane(7).unwrap();
        let params = ag_params_abstract(100, 60, &gs, None).unwrap();
        assert_eq!(params.k, 40);
        let r = bound_report(&params, None, &ReportOptions::default()).unwrap();
        assert_eq!(r.r_bound.unwrap().value, 35);
        assert!(r.exact_s.is_none());
        let batch = bound_reports(
            &[params.clone(), params],
            &ReportOptions::default(),
            Execution::Parallel,
        );
        assert_eq!(batch.len(), 2);
        assert_eq!(batch[0].as_ref().unwrap(), &r);
    }

    #[test]
    fn text_is_aligned() {
        let c = hermitian_code(2, 3).unwrap();
        let r = bound_report(&c.params, Some(&c.code), &ReportOptions::default()).unwrap();
        let text = r.to_text();
        assert!(text
            .lines()
            .any(|l| l.starts_with("wolf ") && l.ends_with(" 3")));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["wolf"], 3);
    }
}
