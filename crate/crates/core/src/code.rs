//! Linear codes given by a generator matrix.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Default cap on the number of codewords `min_distance` will enumerate.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 22;

/// An `[n, k]` linear code. The generator is kept in reduced row-echelon
/// form, so two generators of the same row space give equal codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
}

impl LinearCode {
    /// Builds the row space of `generator`, dropping dependent rows.
    pub fn new(generator: &Matrix) -> Result<LinearCode> {
        if generator.rows() == 0 || generator.cols() == 0 || generator.is_zero() {
            return Err(Error::ZeroMatrix);
        }
        let ech = generator.rref();
        let rows: Vec<Vec<u32>> = (0..ech.rank).map(|r| ech.reduced.row(r).to_vec()).collect();
        let generator = Matrix::from_rows(Arc::clone(generator.field()), &rows)?;
        Ok(LinearCode { generator })
    }

    pub fn from_rows(field: Arc<Field>, rows: &[Vec<u32>]) -> Result<LinearCode> {
        LinearCode::new(&Matrix::from_rows(field, rows)?)
    }

    pub fn field(&self) -> &Arc<Field> {
        self.generator.field()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// The dual code. Fails for `k = n`, whose dual is the zero code.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.dimension() == self.length() {
            return Err(Error::FullSpaceDual);
        }
        LinearCode::new(&self.generator.kernel_basis())
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<LinearCode> {
        check_permutation(perm, self.length())?;
        LinearCode::new(&self.generator.select_columns(perm)?)
    }

    /// Number of codewords, or `None` when it overflows `u128`.
    pub fn size(&self) -> Option<u128> {
        (self.field().order() as u128).checked_pow(self.dimension() as u32)
    }

    /// Calls `visit` once for every codeword, the zero word first.
    ///
    /// Walks all F_p-combinations of the vectors `x^t * g_j` with a base-p
    /// odometer so each step costs one vector addition (amortized).
    pub fn for_each_codeword(&self, cap: u128, mut visit: impl FnMut(&[u32])) -> Result<()> {
        let size = self.size().unwrap_or(u128::MAX);
        if size > cap {
            return Err(Error::EnumerationTooLarge { size, cap });
        }
        let f = self.field();
        let p = f.characteristic();
        let n = self.length();
        let basis_scalars: Vec<u32> = (0..f.degree())
            .map(|t| f.pow(p_power_generator(f), t as u64))
            .collect();
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for r in 0..self.dimension() {
            for &s in &basis_scalars {
                gens.push(self.generator.row(r).iter().map(|&x| f.mul(s, x)).collect());
            }
        }
        let mut digits = vec![0u32; gens.len()];
        let mut word = vec![0u32; n];
        visit(&word);
        loop {
            let mut j = 0;
            loop {
                if j == gens.len() {
                    return Ok(());
                }
                for (w, &g) in word.iter_mut().zip(&gens[j]) {
                    *w = f.add(*w, g);
                }
                digits[j] += 1;
                if digits[j] < p {
                    break;
                }
                // p additions of gens[j] returned it to zero; carry
                digits[j] = 0;
                j += 1;
            }
            visit(&word);
        }
    }

    /// Number of codewords of each Hamming weight `0..=n`.
    pub fn weight_distribution(&self, cap: u128) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.length() + 1];
        self.for_each_codeword(cap, |w| {
            dist[w.iter().filter(|&&x| x != 0).count()] += 1;
        })?;
        Ok(dist)
    }

    /// Exact minimum distance by enumerating all `q^k` codewords.
    pub fn min_distance(&self, cap: u128) -> Result<usize> {
        let dist = self.weight_distribution(cap)?;
        Ok(dist
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
            .expect("a nonzero code has a nonzero codeword"))
    }

    /// `C ⊆ C^⊥`, i.e. `G G^T = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        let g = &self.generator;
        g.mat_mul(&g.transpose())
            .map(|m| m.is_zero())
            .unwrap_or(false)
    }

    /// `C ⊆ x * C^⊥`: every pair of generator rows is orthogonal under the
    /// inner product weighted by `x`.
    pub fn is_formally_self_orthogonal(&self, weights: &[u32]) -> Result<bool> {
        let n = self.length();
        if weights.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "{} weights for length {n}",
                weights.len()
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeightEntry(i));
        }
        let f = self.field();
        if let Some(&bad) = weights.iter().find(|&&w| !f.contains(w)) {
            return Err(Error::ElementOutOfRange {
                index: bad,
                q: f.order(),
            });
        }
        let k = self.dimension();
        for a in 0..k {
            let ra = self.generator.row(a);
            for b in a..k {
                let rb = self.generator.row(b);
                let s = (0..n).fold(0, |acc, i| {
                    f.add(acc, f.mul(weights[i], f.mul(ra[i], rb[i])))
                });
                if s != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Exhaustive search for a formal self-orthogonality witness with
    /// `x_0 = 1` (scaling `x` preserves the property). Offered for n <= 10
    /// and at most `cap` candidates.
    pub fn find_fso_witness(&self, cap: u128) -> Result<Option<Vec<u32>>> {
        let n = self.length();
        if n > MAX_WITNESS_LENGTH {
            return Err(Error::ExhaustiveTooLarge {
                n,
                max: MAX_WITNESS_LENGTH,
            });
        }
        let f = self.field();
        let units = f.order() - 1;
        let size = (units as u128).pow(n as u32 - 1);
        if size > cap {
            return Err(Error::EnumerationTooLarge { size, cap });
        }
        let mut x = vec![1u32; n];
        loop {
            if self.is_formally_self_orthogonal(&x)? {
                return Ok(Some(x));
            }
            let mut j = 1;
            loop {
                if j == n {
                    return Ok(None);
                }
                if x[j] < f.order() - 1 {
                    x[j] += 1;
                    break;
                }
                x[j] = 1;
                j += 1;
            }
        }
    }
}

/// Longest code for which `find_fso_witness` runs.
pub const MAX_WITNESS_LENGTH: usize = 10;

/// Index of `x` (the class of the indeterminate) when m > 1, else 1. Its
/// powers `1, x, ..., x^{m-1}` form an F_p-basis of the field.
fn p_power_generator(f: &Field) -> u32 {
    if f.degree() > 1 {
        f.characteristic()
    } else {
        1
    }
}

pub fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::NotAPermutation(n));
        }
        seen[p] = true;
    }
    Ok(())
}
