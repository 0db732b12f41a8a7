//! Dense matrices over a [`Scalar`] with the exact elimination kernel:
//! reduced row-echelon form, rank, kernel bases, and linear solving.
//!
//! Pivoting is by exact comparison with zero — there is no tolerance
//! anywhere, so ranks and kernels are meaningful only over exact scalars.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Matrix::zero(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Build from a list of equal-length rows.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::invalid("rows of unequal length"));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix<S> {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, rhs: &Matrix<S>, f: impl Fn(&S, &S) -> S) -> Result<Matrix<S>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::invalid(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c.clone() * x.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }

    /// Matrix product, skipping zero entries on both sides.
    pub fn matmul(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != rhs.rows {
            return Err(Error::invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::<S>::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a.clone() * b.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::invalid(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![S::zero(); self.rows];
        for i in 0..self.rows {
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let a = self.get(i, j);
                    if !a.is_zero() {
                        out[i] = out[i].clone() + a.clone() * x.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form together with the pivot columns (strictly
    /// increasing). Pivots are chosen as the first nonzero entry in each
    /// column, normalized to one, with all other rows cleared.
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            let Some(pr) = (next_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(next_row, pr);
            let inv_pivot = S::one() / m.get(next_row, col).clone();
            for j in col..m.cols {
                let v = m.get(next_row, j).clone() * inv_pivot.clone();
                m.set(next_row, j, v);
            }
            for r in 0..m.rows {
                if r == next_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j).clone() - factor.clone() * m.get(next_row, j).clone();
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Number of pivots of the reduced row-echelon form.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the null space: one vector per free column, in ascending
    /// free-column order, with the free coordinate set to one.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            out.push(v);
        }
        out
    }

    /// Any exact solution of `A·x = b`, or `None` when `b` is outside the
    /// column space. Free variables are set to zero, which makes the
    /// returned solution canonical.
    pub fn solve(&self, b: &[S]) -> Result<Option<Vec<S>>> {
        if b.len() != self.rows {
            return Err(Error::invalid(format!(
                "right-hand side of length {} against {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, RatMatrix};
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn qi(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn m(rows: Vec<Vec<i64>>) -> RatMatrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(qi).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_of_rank_one_matrix() {
        let (r, pivots) = m(vec![vec![1, 2], vec![2, 4]]).rref();
        assert_eq!(r, m(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let id: RatMatrix = Matrix::identity(3);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_clears_fractional_pivot() {
        let a = Matrix::from_rows(vec![vec![q(1, 2), qi(1)], vec![qi(1), qi(3)]]).unwrap();
        let (r, pivots) = a.rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        let (r, _) = a.rref();
        let (rr, _) = r.rref();
        assert_eq!(r, rr);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::zero(4, 4).rank(), 0);
        assert_eq!(RatMatrix::identity(5).rank(), 5);
        assert_eq!(m(vec![vec![1, 2], vec![2, 4], vec![3, 6]]).rank(), 1);
    }

    #[test]
    fn kernel_basis_spans_the_null_space() {
        assert!(RatMatrix::identity(4).kernel_basis().is_empty());
        assert_eq!(RatMatrix::zero(2, 3).kernel_basis().len(), 3);
        let a = m(vec![vec![1, 2]]);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], vec![qi(-2), qi(1)]);
        for v in &ker {
            assert!(a.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_nullity_adds_up() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(a.rank() + a.kernel_basis().len(), a.cols());
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id: RatMatrix = Matrix::identity(3);
        let b = vec![qi(4), qi(-1), q(2, 7)];
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));
        let z = RatMatrix::zero(2, 2);
        assert_eq!(z.solve(&[qi(1), qi(0)]).unwrap(), None);
    }

    #[test]
    fn solve_with_free_column() {
        let a = m(vec![vec![2, 0], vec![0, 0]]);
        let x = a.solve(&[qi(1), qi(0)]).unwrap().unwrap();
        assert_eq!(a.apply(&x).unwrap(), vec![qi(1), qi(0)]);
        assert_eq!(x, vec![q(1, 2), qi(0)]);
    }

    #[test]
    fn matmul_and_apply_agree() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![0, 1], vec![1, 0]]);
        let ab = a.matmul(&b).unwrap();
        assert_eq!(ab, m(vec![vec![2, 1], vec![4, 3]]));
        assert_eq!(
            ab.apply(&[qi(1), qi(1)]).unwrap(),
            a.apply(&b.apply(&[qi(1), qi(1)]).unwrap()).unwrap()
        );
        assert!(a.matmul(&m(vec![vec![1, 2]])).is_err());
    }
}
