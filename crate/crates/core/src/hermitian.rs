//! One-point codes on the Hermitian curve `y^q + y = x^(q+1)` over
//! GF(q^2), and abstract AG code parameters for other curves.
//!
//! The Weierstrass semigroup at the point at infinity is generated by `q`
//! (pole order of `x`) and `q + 1` (pole order of `y`), so the monomials
//! `x^a y^b` with `b < q` and `aq + b(q+1) <= m` form a basis of `L(mQ)`.

use std::sync::Arc;

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::gonality::GonalitySequence;
use crate::matrix::Matrix;

pub const SUPPORTED_Q: [u32; 4] = [2, 3, 4, 5];

/// Parameters shared by every AG code the bounds module reasons about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgParams {
    pub n: usize,
    /// Degree of the divisor `G`.
    pub m: i64,
    pub genus: u32,
    pub gs: GonalitySequence,
    pub k: usize,
    /// `l(G - D)`.
    pub abundance: usize,
}

impl AgParams {
    pub fn half_rate(&self) -> bool {
        2 * self.k <= self.n
    }

    /// `n - m`, the designed minimum distance.
    pub fn goppa_distance(&self) -> i64 {
        self.n as i64 - self.m
    }
}

/// Parameters of a non-abundant AG code of length `n > 2g` and degree
/// `m < n` on a curve with gonality sequence `gs`. For `2g - 2 < m` the
/// dimension is `m + 1 - g`; below that Riemann-Roch is not exact and
/// `k` must be supplied.
pub fn ag_params_abstract(
    n: usize,
    m: i64,
    gs: &GonalitySequence,
    k: Option<usize>,
) -> Result<AgParams> {
    let g = gs.genus() as i64;
    if n as i64 <= 2 * g {
        return Err(Error::HypothesisViolated(format!(
            "need n > 2g, got n = {n}, g = {g}"
        )));
    }
    if m < 0 || m >= n as i64 {
        return Err(Error::HypothesisViolated(format!(
            "need 0 <= m < n, got m = {m}, n = {n}"
        )));
    }
    let k = if m > 2 * g - 2 {
        let exact = (m + 1 - g) as usize;
        if let Some(given) = k {
            if given != exact {
                return Err(Error::HypothesisViolated(format!(
                    "k = {given} contradicts m + 1 - g = {exact}"
                )));
            }
        }
        exact
    } else {
        let k = k.ok_or_else(|| {
            Error::HypothesisViolated(format!(
                "m = {m} <= 2g - 2 = {}: dimension must be supplied",
                2 * g - 2
            ))
        })?;
        // Riemann-Roch and Clifford: m + 1 - g <= k <= m/2 + 1
        if (k as i64) < m + 1 - g || k as i64 > m / 2 + 1 {
            return Err(Error::HypothesisViolated(format!(
                "k = {k} impossible for m = {m}, g = {g}"
            )));
        }
        k
    };
    Ok(AgParams {
        n,
        m,
        genus: g as u32,
        gs: gs.clone(),
        k,
        abundance: 0,
    })
}

/// The Hermitian curve over GF(q^2) with its affine rational points.
#[derive(Clone, Debug)]
pub struct HermitianCurve {
    pub q: u32,
    pub field: Arc<Field>,
    /// `(x, y)` element indices in lexicographic order.
    pub points: Vec<(u32, u32)>,
}

impl HermitianCurve {
    pub fn new(q: u32) -> Result<HermitianCurve> {
        if !SUPPORTED_Q.contains(&q) {
            return Err(Error::UnsupportedQ(q));
        }
        let (p, e) = if q == 4 { (2, 2) } else { (q, 1) };
        let field = Field::shared(p, 2 * e)?;
        let points = hermitian_points(&field, q);
        Ok(HermitianCurve { q, field, points })
    }

    pub fn length(&self) -> usize {
        self.points.len()
    }

    pub fn genus(&self) -> u32 {
        self.q * (self.q - 1) / 2
    }

    /// Weierstrass semigroup at infinity, which is also the gonality
    /// sequence source: a plane curve of degree `q + 1`.
    pub fn gonality_sequence(&self) -> GonalitySequence {
        GonalitySequence::plane(self.q).expect("q >= 2")
    }
}

/// All `(x, y)` over GF(q^2) with `y^q + y = x^(q+1)`, ordered by
/// `(index of x, index of y)`.
pub fn hermitian_points(field: &Field, q: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for x in field.elements() {
        let rhs = field.pow(x, q as u64 + 1);
        for y in field.elements() {
            if field.add(field.pow(y, q as u64), y) == rhs {
                out.push((x, y));
            }
        }
    }
    out
}

/// Exponents `(a, b)` of the basis `x^a y^b` of `L(mQ)`, ordered by pole
/// order `aq + b(q+1)`.
pub fn monomial_basis(q: u32, m: i64) -> Vec<(u32, u32)> {
    let q64 = q as i64;
    let mut out: Vec<(u32, u32)> = Vec::new();
    for b in 0..q64 {
        let mut a = 0;
        while a * q64 + b * (q64 + 1) <= m {
            out.push((a as u32, b as u32));
            a += 1;
        }
    }
    out.sort_by_key(|&(a, b)| a as i64 * q64 + b as i64 * (q64 + 1));
    out
}

/// `l(mQ)`: lattice points `a >= 0`, `0 <= b < q`, `aq + b(q+1) <= m`.
pub fn riemann_roch_dim_one_point(q: u32, m: i64) -> usize {
    if m < 0 {
        return 0;
    }
    let q = q as i64;
    (0..q)
        .map(|b| {
            let rest = m - b * (q + 1);
            if rest < 0 {
                0
            } else {
                (rest / q + 1) as usize
            }
        })
        .sum()
}

/// A constructed Hermitian code with its parameters.
#[derive(Clone, Debug)]
pub struct HermitianCode {
    pub curve: HermitianCurve,
    pub code: LinearCode,
    pub params: AgParams,
}

impl HermitianCode {
    pub fn q(&self) -> u32 {
        self.curve.q
    }
}

/// Evaluation code of `L(mQ)` at the `q^3` affine points.
pub fn hermitian_code(q: u32, m: i64) -> Result<HermitianCode> {
    let curve = HermitianCurve::new(q)?;
    let n = curve.length();
    if m >= n as i64 {
        return Err(Error::AbundantRegime { m, n });
    }
    if m < 0 {
        return Err(Error::HypothesisViolated(format!(
            "degree must be non-negative, got {m}"
        )));
    }
    let f = &curve.field;
    let rows: Vec<Vec<u32>> = monomial_basis(q, m)
        .into_iter()
        .map(|(a, b)| {
            curve
                .points
                .iter()
                .map(|&(x, y)| f.mul(f.pow(x, a as u64), f.pow(y, b as u64)))
                .collect()
        })
        .collect();
    let k = rows.len();
    let generator = Matrix::from_rows(Arc::clone(f), &rows)?;
    let code = LinearCode::new(&generator)?;
    // m < n makes the evaluation map injective
    debug_assert_eq!(code.dimension(), k);
    if code.dimension() != k {
        return Err(Error::HypothesisViolated(format!(
            "evaluation map has rank {} < l(mQ) = {k}",
            code.dimension()
        )));
    }
    let params = AgParams {
        n,
        m,
        genus: curve.genus(),
        gs: curve.gonality_sequence(),
        k,
        abundance: 0,
    };
    Ok(HermitianCode {
        curve,
        code,
        params,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HermitianSummary {
    pub q: u32,
    pub m: i64,
    pub n: usize,
    pub k: usize,
    pub genus: u32,
    pub goppa_distance: i64,
    pub self_orthogonal: bool,
}

impl HermitianCode {
    pub fn summary(&self) -> HermitianSummary {
        HermitianSummary {
            q: self.q(),
            m: self.params.m,
            n: self.params.n,
            k: self.params.k,
            genus: self.params.genus,
            goppa_distance: self.params.goppa_distance(),
            self_orthogonal: self.code.is_self_orthogonal(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_ENUMERATION_CAP;

    #[test]
    fn point_counts() {
        for (q, n) in [(2, 8), (3, 27), (4, 64), (5, 125)] {
            let c = HermitianCurve::new(q).unwrap();
            assert_eq!(c.length(), n);
            assert_eq!(c.field.order(), q * q);
            // q points over each x
            for x in c.field.elements() {
                assert_eq!(c.points.iter().filter(|p| p.0 == x).count(), q as usize);
            }
        }
        assert_eq!(HermitianCurve::new(7).unwrap_err(), Error::UnsupportedQ(7));
    }

    #[test]
    fn riemann_roch_counts() {
        assert_eq!(riemann_roch_dim_one_point(2, 3), 3);
        assert_eq!(riemann_roch_dim_one_point(3, 14), 12);
        for q in 2..=5 {
            let g = (q * (q - 1) / 2) as i64;
            assert_eq!(riemann_roch_dim_one_point(q, 2 * g - 1), g as usize);
            assert_eq!(riemann_roch_dim_one_point(q, -1), 0);
        }
        assert_eq!(monomial_basis(2, 3), vec![(0, 0), (1, 0), (0, 1)]);
    }

    #[test]
    fn small_codes() {
        let c = hermitian_code(2, 3).unwrap();
        assert_eq!((c.params.n, c.params.k), (8, 3));
        assert!(c.code.min_distance(DEFAULT_ENUMERATION_CAP).unwrap() >= 5);
        assert!(c.code.is_self_orthogonal());
        let c = hermitian_code(3, 14).unwrap();
        assert_eq!((c.params.n, c.params.k, c.params.genus), (27, 12, 3));
        let c = hermitian_code(2, 0).unwrap();
        assert_eq!(c.params.k, 1);
        assert_eq!(c.code.min_distance(DEFAULT_ENUMERATION_CAP).unwrap(), 8);
        assert_eq!(
            hermitian_code(2, 9).unwrap_err(),
            Error::AbundantRegime { m: 9, n: 8 }
        );
        assert_eq!(
            hermitian_code(2, 8).unwrap_err(),
            Error::AbundantRegime { m: 8, n: 8 }
        );
    }

    #[test]
    fn abstract_parameters() {
        let plane3 = GonalitySequence::plane(3).unwrap();
        assert_eq!(ag_params_abstract(27, 14, &plane3, None).unwrap().k, 12);
        let plane2 = GonalitySequence::plane(2).unwrap();
        assert_eq!(ag_params_abstract(8, 3, &plane2, None).unwrap().k, 3);
        // m = 2g - 2 needs k from the caller
        assert!(matches!(
            ag_params_abstract(27, 4, &plane3, None),
            Err(Error::HypothesisViolated(_))
        ));
        assert_eq!(ag_params_abstract(27, 4, &plane3, Some(3)).unwrap().k, 3);
        assert!(matches!(
            ag_params_abstract(6, 3, &plane3, None),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
