//! Small dense matrices over an exact field scalar.
//!
//! Nothing here is tuned for size: the matrices in this crate are 2x2 to 8x8,
//! and every algorithm is the plain exact-arithmetic version (Gaussian
//! elimination with the first nonzero pivot in column order, which keeps the
//! results deterministic).

use std::fmt;
use std::ops::{Add, Div, Index, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Field scalar usable as a matrix entry.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(entry(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Panics if the rows are empty or ragged; intended for literals.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have the same length"
        );
        let nrows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Self {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::from_fn(self.rows, self.cols, |r, c| f(self.get(r, c)))
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Matrix-vector product. Panics on a length mismatch.
    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Assembles [[a, b], [c, d]] from equally sized square blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.rows;
        for m in [a, b, c, d] {
            assert!(m.rows == n && m.cols == n, "blocks must be square and equal");
        }
        Self::from_fn(2 * n, 2 * n, |r, q| {
            match (r < n, q < n) {
                (true, true) => a.get(r, q).clone(),
                (true, false) => b.get(r, q - n).clone(),
                (false, true) => c.get(r - n, q).clone(),
                (false, false) => d.get(r - n, q - n).clone(),
            }
        })
    }

    /// Splits an even-dimensional square matrix into [[a, b], [c, d]].
    pub fn into_blocks(&self) -> Result<[Self; 4]> {
        if !self.is_square() || !self.rows.is_multiple_of(2) {
            return Err(Error::OddDimension);
        }
        let n = self.rows / 2;
        let block = |ro: usize, co: usize| {
            Self::from_fn(n, n, |r, c| self.get(r + ro, c + co).clone())
        };
        Ok([block(0, 0), block(0, n), block(n, 0), block(n, n)])
    }

    /// Row echelon reduction in place; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let pivot = self.get(row, col).clone();
            for c in col..self.cols {
                let v = self.get(row, c).clone() / pivot.clone();
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c).clone() - factor.clone() * self.get(row, c).clone();
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place().len()
    }

    /// Basis of the null space, one vector per free column. Deterministic:
    /// each basis vector has a 1 in its free coordinate.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -work.get(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !work.get(r, col).is_zero())?;
            if p != col {
                for c in 0..n {
                    work.data.swap(p * n + c, col * n + c);
                    inv.data.swap(p * n + c, col * n + c);
                }
            }
            let pivot = work.get(col, col).clone();
            for c in 0..n {
                let w = work.get(col, c).clone() / pivot.clone();
                work.set(col, c, w);
                let i = inv.get(col, c).clone() / pivot.clone();
                inv.set(col, c, i);
            }
            for r in 0..n {
                if r == col || work.get(r, col).is_zero() {
                    continue;
                }
                let factor = work.get(r, col).clone();
                for c in 0..n {
                    let w = work.get(r, c).clone() - factor.clone() * work.get(col, c).clone();
                    work.set(r, c, w);
                    let i = inv.get(r, c).clone() - factor.clone() * inv.get(col, c).clone();
                    inv.set(r, c, i);
                }
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut work = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !work.get(r, col).is_zero()) else {
                return T::zero();
            };
            if p != col {
                for c in 0..n {
                    work.data.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = work.get(col, col).clone();
            det = det * pivot.clone();
            for r in col + 1..n {
                if work.get(r, col).is_zero() {
                    continue;
                }
                let factor = work.get(r, col).clone() / pivot.clone();
                for c in col..n {
                    let v = work.get(r, c).clone() - factor.clone() * work.get(col, c).clone();
                    work.set(r, c, v);
                }
            }
        }
        det
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() + rhs.get(r, c).clone()
        })
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() - rhs.get(r, c).clone()
        })
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self.get(r, k).clone() * rhs.get(k, c).clone()
            })
        })
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational, Rational};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn ri(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|row| row.into_iter().map(Rational::from_int).collect())
                .collect(),
        )
    }

    #[test]
    fn product_and_identity() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let id = Matrix::<Rational>::identity(2);
        assert_eq!(&a * &id, a);
        let b = m(vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(&b * &b, -&id);
    }

    #[test]
    fn inverse_of_2x2() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let inv = a.inverse().unwrap();
        // Adjugate oracle: (1/det) [[d, -b], [-c, a]], det = -2.
        let oracle = Matrix::from_rows(vec![
            vec![r(-2, 1), ri(1)],
            vec![r(3, 2), r(-1, 2)],
        ]);
        assert_eq!(inv, oracle);
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(m(vec![vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = m(vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(a.determinant(), ri(0));
        let b = m(vec![vec![2, 1], vec![1, 3]]);
        assert_eq!(b.determinant(), ri(5));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let basis = a.kernel();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(a.matvec(v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn kernel_over_gaussian_rationals() {
        // M = [[0, -1], [1, 0]]; kernel of M - iI is spanned by (i, 1)-ish.
        let j = m(vec![vec![0, -1], vec![1, 0]]);
        let shifted = Matrix::from_fn(2, 2, |r, c| {
            let mut z = GaussianRational::from_real(j.get(r, c).clone());
            if r == c {
                z = z - GaussianRational::i();
            }
            z
        });
        let basis = shifted.kernel();
        assert_eq!(basis.len(), 1);
        for v in &basis {
            assert!(shifted.matvec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn blocks_round_trip() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![5, 6], vec![7, 8]]);
        let c = m(vec![vec![9, 10], vec![11, 12]]);
        let d = m(vec![vec![13, 14], vec![15, 16]]);
        let whole = Matrix::from_blocks(&a, &b, &c, &d);
        let [a2, b2, c2, d2] = whole.into_blocks().unwrap();
        assert_eq!((a2, b2, c2, d2), (a, b, c, d));
        assert!(m(vec![vec![1]]).into_blocks().is_err());
    }
}
