//! Dense matrices over an exact ring, with fraction-free elimination.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Rows below this count are eliminated sequentially.
const PARALLEL_ROWS: usize = 24;

impl<F: Ring> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, zero: &F) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero.zero_like(); rows * cols],
        }
    }

    pub fn identity(n: usize, one: &F) -> Self {
        let mut m = Matrix::zeros(n, n, one);
        for i in 0..n {
            m.data[i * n + i] = one.one_like();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = match self.data.first().or(other.data.first()) {
            Some(x) => x.zero_like(),
            None => return Ok(Matrix { rows: self.rows, cols: other.cols, data: Vec::new() }),
        };
        let mut out = Matrix::zeros(self.rows, other.cols, &zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Matrix<F>, f: impl Fn(&F, &F) -> F) -> Result<Matrix<F>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        self.zip(other, |a, b| a.add_ref(b))
    }

    pub fn sub(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        self.zip(other, |a, b| a.sub_ref(b))
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| c.mul_ref(a)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Matrix<F> {
        let data = perm.iter().flat_map(|&p| self.row(p).iter().cloned()).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_cols(&self, perm: &[usize]) -> Matrix<F> {
        let mut data = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            for &p in perm {
                data.push(self.get(i, p).clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Restriction to the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix<F> {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }
}

/// Result of a fraction-free forward elimination.
struct Echelon<F> {
    rank: usize,
    swaps: usize,
    /// The last pivot; for a full-rank square matrix it is `±det`.
    last_pivot: Option<F>,
}

impl<F: Field> Matrix<F> {
    /// Bareiss elimination with first-nonzero pivoting. Each update
    /// `a_ij <- (p a_ij - a_ic a_rj) / p_prev` is exact; in a field the
    /// division is a multiplication by the inverse of the previous pivot.
    fn bareiss(&self) -> Echelon<F> {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        let mut swaps = 0;
        let mut prev_inv: Option<F> = None;
        let mut last_pivot = None;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    a.swap(p * cols + j, rank * cols + j);
                }
                swaps += 1;
            }
            let (top, bottom) = a.split_at_mut((rank + 1) * cols);
            let pivot_row = &top[rank * cols..];
            let pivot = pivot_row[col].clone();
            let update = |row: &mut [F]| {
                let factor = row[col].clone();
                if factor.is_zero() {
                    for x in row[col + 1..].iter_mut() {
                        let mut v = pivot.mul_ref(x);
                        if let Some(inv) = &prev_inv {
                            v = v.mul_ref(inv);
                        }
                        *x = v;
                    }
                } else {
                    for j in col + 1..cols {
                        let mut v = pivot.mul_ref(&row[j]).sub_ref(&factor.mul_ref(&pivot_row[j]));
                        if let Some(inv) = &prev_inv {
                            v = v.mul_ref(inv);
                        }
                        row[j] = v;
                    }
                    row[col] = factor.zero_like();
                }
            };
            if rows - rank > PARALLEL_ROWS {
                bottom.par_chunks_mut(cols).for_each(update);
            } else {
                bottom.chunks_mut(cols).for_each(update);
            }
            prev_inv = pivot.inv();
            last_pivot = Some(pivot);
            rank += 1;
        }
        Echelon {
            rank,
            swaps,
            last_pivot,
        }
    }

    pub fn rank(&self) -> usize {
        self.bareiss().rank
    }

    /// Dimension of the null space, `cols - rank`.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn det(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let one = match self.data.first() {
            Some(x) => x.one_like(),
            None => return Err(Error::Invalid("determinant of an empty matrix needs a field context".into())),
        };
        let e = self.bareiss();
        if e.rank < self.rows {
            return Ok(one.zero_like());
        }
        let det = e.last_pivot.expect("full rank");
        Ok(if e.swaps % 2 == 1 { -det } else { det })
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CyclotomicField, Cyclo};

    fn q(x: i64) -> Cyclo {
        Cyclo::from_i64(&CyclotomicField::new(1), x)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Cyclo> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity() {
        let id = Matrix::identity(3, &q(1));
        assert_eq!(id.rank(), 3);
        assert_eq!(id.det().unwrap(), q(1));
        assert_eq!(id.kernel_dim(), 0);
    }

    #[test]
    fn small_determinants() {
        assert_eq!(m(&[&[2, 3], &[1, 4]]).det().unwrap(), q(5));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), q(-1));
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).det().unwrap(), q(-3));
        let singular = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(singular.det().unwrap(), q(0));
        assert_eq!(singular.rank(), 2);
        assert_eq!(singular.kernel_dim(), 1);
    }

    #[test]
    fn rectangular() {
        let r = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(r.rank(), 1);
        assert!(matches!(r.det(), Err(Error::NotSquare { rows: 2, cols: 3 })));
        assert_eq!(m(&[&[0, 0], &[0, 1], &[0, 2]]).rank(), 1);
    }

    #[test]
    fn products() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        assert!(a.mul(&m(&[&[1, 2, 3]])).is_err());
    }
}
