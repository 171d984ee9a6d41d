//! Dense matrices over a [`Field`] and exact Gaussian elimination.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: Arc<Field>, rows: usize, cols: usize, data: Vec<u32>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::ElementOutOfRange {
                index: bad,
                q: field.order(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: Arc<Field>, rows: &[Vec<u32>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let data = rows.concat();
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Arc<Field>, size: usize) -> Matrix {
        let mut m = Matrix::zeros(field, size, size);
        for i in 0..size {
            m.data[i * size + i] = 1;
        }
        m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(self.field.contains(v));
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c));
            }
        }
        Matrix {
            field: Arc::clone(&self.field),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        if !self.field.same_as(&other.field) {
            return Err(Error::MixedFields);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(Arc::clone(f), self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(t, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Columns in the given order, as a new matrix.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Matrix> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                bound: self.cols,
            });
        }
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Ok(Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: cols.len(),
            data,
        })
    }

    /// Reduced row-echelon form. The pivot in each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = m.reduce_in_place();
        let rank = pivots.len();
        Echelon {
            reduced: m,
            rank,
            pivots,
        }
    }

    /// Row-reduces `self` and returns the pivot columns.
    pub(crate) fn reduce_in_place(&mut self) -> Vec<usize> {
        let f = Arc::clone(&self.field);
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]).expect("pivot is nonzero");
            if inv != 1 {
                for j in c..cols {
                    let idx = r * cols + j;
                    self.data[idx] = f.mul(self.data[idx], inv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let nf = f.neg(factor);
                for j in c..cols {
                    let pv = self.data[r * cols + j];
                    if pv != 0 {
                        let idx = i * cols + j;
                        self.data[idx] = f.add(self.data[idx], f.mul(nf, pv));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rank of the submatrix on the selected columns.
    pub fn rank_of_columns(&self, cols: &[usize]) -> Result<usize> {
        Ok(self.select_columns(cols)?.rank())
    }

    /// Basis of the right kernel `{v : M v^T = 0}`, one vector per row.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.field;
        let ech = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut out = Matrix::zeros(Arc::clone(f), free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            out.set(row, fc, 1);
            for (pr, &pc) in ech.pivots.iter().enumerate() {
                let v = ech.reduced.get(pr, fc);
                out.set(row, pc, f.neg(v));
            }
        }
        out
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field)
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, m: u32) -> Arc<Field> {
        Field::shared(p, m).unwrap()
    }

    fn hamming(f: &Arc<Field>) -> Matrix {
        Matrix::from_rows(
            Arc::clone(f),
            &[
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = gf(3, 1);
        let e = Matrix::identity(Arc::clone(&f), 4).rref();
        assert_eq!(e.rank, 4);
        assert_eq!(e.pivots, vec![0, 1, 2, 3]);
        let z = Matrix::zeros(f, 3, 5).rref();
        assert_eq!(z.rank, 0);
        assert!(z.pivots.is_empty());
    }

    #[test]
    fn dependent_binary_rows() {
        let f = gf(2, 1);
        let m = Matrix::from_rows(f, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        let e = m.rref();
        assert_eq!(e.rank, 2);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.reduced.row(2), &[0, 0, 0]);
    }

    #[test]
    fn column_ranks() {
        let f = gf(2, 1);
        let m = Matrix::from_rows(f, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(m.rank_of_columns(&[]).unwrap(), 0);
        assert_eq!(m.rank_of_columns(&[0, 1]).unwrap(), 2);
        assert_eq!(m.rank_of_columns(&[0, 1, 2]).unwrap(), m.rank());
        assert_eq!(m.rank_of_columns(&[0]).unwrap(), 1);
        assert!(matches!(
            m.rank_of_columns(&[3]),
            Err(Error::IndexOutOfRange { index: 3, bound: 3 })
        ));
    }

    #[test]
    fn kernels() {
        let f = gf(2, 1);
        assert_eq!(Matrix::identity(Arc::clone(&f), 3).kernel_basis().rows(), 0);
        assert_eq!(Matrix::zeros(Arc::clone(&f), 1, 5).kernel_basis().rows(), 5);
        let h = hamming(&f);
        let k = h.kernel_basis();
        assert_eq!(k.rows(), 3);
        assert!(h.mat_mul(&k.transpose()).unwrap().is_zero());
    }

    #[test]
    fn products_and_transpose() {
        let f = gf(3, 1);
        let a = Matrix::from_rows(Arc::clone(&f), &[vec![1, 2]]).unwrap();
        let b = Matrix::from_rows(Arc::clone(&f), &[vec![2, 2]]).unwrap();
        // 1*2 + 2*2 = 6 = 0 mod 3
        assert_eq!(a.mat_mul(&b.transpose()).unwrap().get(0, 0), 0);
        let c = Matrix::from_rows(Arc::clone(&f), &[vec![1, 1]]).unwrap();
        // 1*1 + 2*1 = 3 = 0; [1 2].[1 2] = 1 + 4 = 5 = 2
        assert_eq!(a.mat_mul(&a.transpose()).unwrap().get(0, 0), 2);
        assert_eq!(a.mat_mul(&c.transpose()).unwrap().get(0, 0), 0);
        let i = Matrix::identity(Arc::clone(&f), 2);
        assert_eq!(a.mat_mul(&i).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
        assert!(matches!(a.mat_mul(&a), Err(Error::ShapeMismatch(_))));
    }
}
