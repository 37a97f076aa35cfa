//! Dense matrices over ℚ with exact Gaussian elimination.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Q};

/// Row-major matrix. A linear map `k^n -> k^m` is an `m × n` matrix acting
/// on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn new(rows: usize, cols: usize, data: Vec<Q>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds from rows; `cols` is needed when there are no rows.
    pub fn from_rows(cols: usize, rows: &[Vec<Q>]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Small-integer convenience constructor.
    pub fn from_ints(cols: usize, rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rational::int(x)).collect())
            .collect();
        Self::from_rows(cols, &rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let rows: Vec<Vec<Q>> = (0..self.rows)
            .map(|r| [self.row(r), other.row(r)].concat())
            .collect();
        Self::from_rows(self.cols + other.cols, &rows)
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Self {
        let rows: Vec<Vec<Q>> = (0..self.rows)
            .map(|r| self.row(r)[range.clone()].to_vec())
            .collect();
        Self::from_rows(range.len(), &rows).expect("column slice")
    }

    pub fn apply(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(rational::render).collect())
            .collect();
        write!(f, "QMatrix{}x{}{:?}", self.rows, self.cols, rows)
    }
}

/// Reduced row echelon form (zero rows dropped) and rank.
pub fn rref(m: &QMatrix) -> (QMatrix, usize) {
    let (r, pivots) = rref_with_pivots(m);
    let rank = pivots.len();
    (r, rank)
}

/// RREF rows (zero rows dropped) together with the pivot columns.
pub fn rref_with_pivots(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut rows = m.to_rows();
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..m.cols {
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let inv = rows[top][c].recip();
        for x in rows[top].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    (
        QMatrix::from_rows(m.cols, &rows).expect("same width"),
        pivots,
    )
}

/// Basis (as rows, in RREF) of the null space `{v : m v = 0}`.
pub fn kernel_basis(m: &QMatrix) -> QMatrix {
    let (r, pivots) = rref_with_pivots(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Vec<Q>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); m.cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect();
    let k = QMatrix::from_rows(m.cols, &basis).expect("same width");
    rref(&k).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn rref_examples() {
        let (r, rank) = rref(&QMatrix::from_ints(2, &[&[2, 4], &[1, 2]]));
        assert_eq!(rank, 1);
        assert_eq!(r, QMatrix::from_ints(2, &[&[1, 2]]));

        let id = QMatrix::identity(3);
        assert_eq!(rref(&id), (id.clone(), 3));

        let (z, rank) = rref(&QMatrix::zeros(2, 3));
        assert_eq!((z.rows(), rank), (0, 0));
    }

    #[test]
    fn rref_is_canonical_for_row_space() {
        let a = QMatrix::from_ints(3, &[&[1, 2, 3], &[0, 1, 1]]);
        let b = QMatrix::from_ints(3, &[&[1, 3, 4], &[2, 5, 7], &[1, 1, 2]]);
        assert_eq!(rref(&a).0, rref(&b).0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(
            kernel_basis(&QMatrix::from_ints(2, &[&[1, -1]])),
            QMatrix::from_ints(2, &[&[1, 1]])
        );
        assert_eq!(kernel_basis(&QMatrix::identity(2)).rows(), 0);
        let k = kernel_basis(&QMatrix::from_ints(2, &[&[2, -1]]));
        assert_eq!(k, QMatrix::from_ints(2, &[&[1, 2]]));
        let half = kernel_basis(&QMatrix::from_ints(2, &[&[1, -2]]));
        assert_eq!(half.to_rows(), vec![vec![ratio(1, 1), ratio(1, 2)]]);
    }

    #[test]
    fn kernel_dimension() {
        let m = QMatrix::from_ints(4, &[&[1, 2, 0, 1], &[2, 4, 1, 3]]);
        let k = kernel_basis(&m);
        assert_eq!(k.rows(), 4 - m.rank());
        for r in 0..k.rows() {
            assert!(m.apply(k.row(r)).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn products_and_stacks() {
        let a = QMatrix::from_ints(2, &[&[1, 2], &[3, 4]]);
        assert_eq!(a.mul(&QMatrix::identity(2)).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
        assert!(a.mul(&QMatrix::zeros(3, 1)).is_err());
        let h = a.hstack(&QMatrix::identity(2)).unwrap();
        assert_eq!(h.columns(2..4), QMatrix::identity(2));
        assert_eq!(a.vstack(&a).unwrap().rows(), 4);
    }
}
