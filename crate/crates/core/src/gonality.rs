//! Gonality sequences of curves with a rational point.
//!
//! A sequence of genus `g` is stored as its first `g` terms
//! `gamma_1 = 0 < ... < gamma_g = 2g - 2`; every later term is
//! `gamma_i = g + i - 1`. Arguments live in `{-1} ∪ N_0` and are plain `i64`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Nonsingular plane curve of degree `r + 1`.
    Plane(u32),
    Hyperelliptic,
    Explicit,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Plane(r) => write!(f, "plane({r})"),
            Origin::Hyperelliptic => f.write_str("hyperelliptic"),
            Origin::Explicit => f.write_str("explicit"),
        }
    }
}

impl FromStr for Origin {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "hyperelliptic" => Ok(Origin::Hyperelliptic),
            "explicit" => Ok(Origin::Explicit),
            other => other
                .strip_prefix("plane(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|r| r.trim().parse().ok())
                .map(Origin::Plane)
                .ok_or_else(|| format!("unknown origin '{other}'")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GonalitySequence {
    genus: u32,
    gammas: Vec<i64>,
    gaps: Vec<i64>,
    origin: Origin,
}

impl GonalitySequence {
    /// Plane curve of degree `r + 1`: the numerical semigroup generated by
    /// `r` and `r + 1`, genus `r(r-1)/2`.
    pub fn plane(r: u32) -> Result<GonalitySequence> {
        if r < 2 {
            return Err(Error::DegreeTooSmall(r));
        }
        let g = (r * (r - 1) / 2) as usize;
        let r = r as i64;
        let gammas: Vec<i64> = (0..).filter(|&a: &i64| a % r <= a / r).take(g).collect();
        let mut gs = GonalitySequence::validated(gammas)?;
        gs.origin = Origin::Plane(r as u32);
        Ok(gs)
    }

    /// Hyperelliptic curve of genus `g`: `gamma_i = 2i - 2`.
    pub fn hyperelliptic(g: u32) -> Result<GonalitySequence> {
        if g < 2 {
            return Err(Error::GenusTooSmall { min: 2, got: g });
        }
        let gammas = (0..g as i64).map(|i| 2 * i).collect();
        let mut gs = GonalitySequence::validated(gammas)?;
        gs.origin = Origin::Hyperelliptic;
        Ok(gs)
    }

    /// Checks every structural property of a gonality sequence.
    pub fn explicit(g: u32, gammas: &[i64]) -> Result<GonalitySequence> {
        if gammas.len() != g as usize {
            return Err(Error::LengthMismatch {
                expected: g as usize,
                got: gammas.len(),
            });
        }
        GonalitySequence::validated(gammas.to_vec())
    }

    fn validated(gammas: Vec<i64>) -> Result<GonalitySequence> {
        let g = gammas.len();
        if g == 0 {
            return Err(Error::GenusTooSmall { min: 1, got: 0 });
        }
        if gammas[0] != 0 {
            return Err(Error::FirstNotZero(gammas[0]));
        }
        if let Some(i) = (1..g).find(|&i| gammas[i] <= gammas[i - 1]) {
            return Err(Error::NotIncreasing(i + 1));
        }
        let gi = g as i64;
        // 2i - 2 <= gamma_i <= g + i - 2; at i = g both ends equal 2g - 2
        for i in 2..=g {
            let (lower, upper) = (2 * i as i64 - 2, gi + i as i64 - 2);
            let value = gammas[i - 1];
            if value < lower || value > upper {
                return Err(Error::BoundsViolated {
                    index: i,
                    value,
                    lower,
                    upper,
                });
            }
        }
        let member = |a: i64| gammas.binary_search(&a).is_ok();
        for a in 0..=2 * gi - 1 {
            let mirror = 2 * gi - 1 - a;
            if member(a) == member(mirror) {
                let state = if member(a) { "in" } else { "outside" };
                return Err(Error::SymmetryViolated { a, mirror, state });
            }
        }
        let gaps = (-1..=2 * gi - 1).filter(|&a| !member(a)).collect();
        Ok(GonalitySequence {
            genus: g as u32,
            gammas,
            gaps,
            origin: Origin::Explicit,
        })
    }

    /// Re-validates and attaches an origin tag; plane and hyperelliptic
    /// tags must match the sequence they name.
    pub fn with_origin(g: u32, gammas: &[i64], origin: Origin) -> Result<GonalitySequence> {
        let gs = GonalitySequence::explicit(g, gammas)?;
        let expected = match origin {
            Origin::Plane(r) => Some(GonalitySequence::plane(r)?),
            Origin::Hyperelliptic => Some(GonalitySequence::hyperelliptic(g)?),
            Origin::Explicit => None,
        };
        if let Some(e) = expected {
            if e.gammas != gs.gammas {
                return Err(Error::HypothesisViolated(format!(
                    "sequence does not match origin {origin}"
                )));
            }
        }
        Ok(GonalitySequence { origin, ..gs })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn gammas(&self) -> &[i64] {
        &self.gammas
    }

    /// The `g + 1` elements of `{-1, 0, ..., 2g - 1}` outside the sequence.
    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    /// `gamma_i` for any `i >= 1`, using the affine tail past `g`.
    pub fn gamma(&self, i: usize) -> i64 {
        assert!(i >= 1, "gonality numbers are indexed from 1");
        if i <= self.gammas.len() {
            self.gammas[i - 1]
        } else {
            self.genus as i64 + i as i64 - 1
        }
    }

    /// The gonality `gamma_2` (for genus 1 it comes from the tail: 2).
    pub fn gonality(&self) -> i64 {
        self.gamma(2)
    }

    pub fn contains(&self, a: i64) -> bool {
        if a < 0 {
            return false;
        }
        if a >= 2 * self.genus as i64 {
            return true;
        }
        self.gammas.binary_search(&a).is_ok()
    }

    pub fn is_gap(&self, a: i64) -> bool {
        a >= -1 && !self.contains(a)
    }

    /// Number of gonality numbers not exceeding `a`.
    pub fn ell_tilde(&self, a: i64) -> Result<i64> {
        if a < -1 {
            return Err(Error::BelowDomain(a));
        }
        Ok(self.ell_tilde_unchecked(a))
    }

    #[inline]
    pub(crate) fn ell_tilde_unchecked(&self, a: i64) -> i64 {
        let g = self.genus as i64;
        if a >= 2 * g - 1 {
            return g + (a - (2 * g - 1));
        }
        self.gammas.partition_point(|&x| x <= a) as i64
    }

    /// `gamma_i = 2i - 2` for some `2 <= i <= g - 1`.
    pub fn is_hyperelliptic(&self) -> bool {
        let g = self.genus as usize;
        (2..g).any(|i| self.gammas[i - 1] == 2 * i as i64 - 2)
    }

    pub fn to_record(&self) -> GonalityRecord {
        GonalityRecord {
            genus: self.genus,
            origin: self.origin.to_string(),
            gammas: self.gammas.clone(),
        }
    }

    pub fn from_record(rec: &GonalityRecord) -> Result<GonalitySequence> {
        let origin = rec
            .origin
            .parse()
            .map_err(|reason| Error::Parse { line: 0, reason })?;
        GonalitySequence::with_origin(rec.genus, &rec.gammas, origin)
    }

    /// Reads either the JSON record or the text form
    /// (`genus <g>`, optional `origin <tag>`, `gammas <list>` lines).
    pub fn parse(text: &str) -> Result<GonalitySequence> {
        let trimmed = text.trim_start();
        let rec = if trimmed.starts_with('{') {
            serde_json::from_str::<GonalityRecord>(trimmed).map_err(|e| Error::Parse {
                line: e.line(),
                reason: e.to_string(),
            })?
        } else {
            GonalityRecord::parse_text(text)?
        };
        GonalitySequence::from_record(&rec)
    }
}

/// Serialized form of a gonality sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonalityRecord {
    pub genus: u32,
    #[serde(default = "explicit_tag")]
    pub origin: String,
    pub gammas: Vec<i64>,
}

fn explicit_tag() -> String {
    "explicit".into()
}

impl GonalityRecord {
    fn parse_text(text: &str) -> Result<GonalityRecord> {
        let mut genus = None;
        let mut origin = explicit_tag();
        let mut gammas = None;
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| Error::Parse {
                line: no + 1,
                reason,
            };
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match key {
                "genus" => {
                    genus = Some(
                        rest.trim()
                            .parse()
                            .map_err(|_| err(format!("bad genus '{rest}'")))?,
                    )
                }
                "origin" => origin = rest.trim().to_string(),
                "gammas" => {
                    let vals: std::result::Result<Vec<i64>, _> = rest
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty())
                        .map(str::parse)
                        .collect();
                    gammas = Some(vals.map_err(|_| err(format!("bad gamma list '{rest}'")))?);
                }
                other => return Err(err(format!("unknown key '{other}'"))),
            }
        }
        let genus = genus.ok_or(Error::Parse {
            line: 0,
            reason: "missing genus".into(),
        })?;
        let gammas = gammas.ok_or(Error::Parse {
            line: 0,
            reason: "missing gammas".into(),
        })?;
        Ok(GonalityRecord {
            genus,
            origin,
            gammas,
        })
    }

    pub fn to_text(&self) -> String {
        let list: Vec<String> = self.gammas.iter().map(i64::to_string).collect();
        format!(
            "genus {}\norigin {}\ngammas {}\n",
            self.genus,
            self.origin,
            list.join(" ")
        )
    }
}
