//! Exact linear algebra over the rationals.
//!
//! Dense matrices with arbitrary-precision rational entries, sized for the
//! catalecticant and Koszul computations in this crate (a few hundred rows
//! and columns at most). Rank and determinant use fraction-free Bareiss
//! elimination on an integer rescaling of the matrix, which keeps
//! intermediate values bounded by minors of the input. Reduced row echelon
//! form uses exact Gauss-Jordan elimination with leftmost-pivot selection,
//! so every echelon basis produced here is canonical: two spans are equal
//! exactly when their reduced echelon bases are equal.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Dense matrix over [`Rat`] in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` disambiguates the empty case.
    pub fn from_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows in QMatrix::from_rows");
            data.extend(row);
        }
        QMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&QMatrix]) -> Self {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for part in parts {
            assert_eq!(part.cols, cols, "column mismatch in QMatrix::vstack");
            rows += part.rows;
            data.extend_from_slice(&part.data);
        }
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rat) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch in mul");
        QMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                let a = self.at(r, k);
                if !a.is_zero() {
                    acc += a * rhs.at(k, c);
                }
            }
            acc
        })
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for (c, vc) in v.iter().enumerate() {
                    let a = self.at(r, c);
                    if !a.is_zero() {
                        acc += a * vc;
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Clears denominators row by row, returning integer rows and the
    /// product of the row multipliers.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|r| {
                let mut l = BigInt::one();
                for c in 0..self.cols {
                    l = l.lcm(self.at(r, c).denom());
                }
                scale *= &l;
                (0..self.cols)
                    .map(|c| {
                        let e = self.at(r, c);
                        e.numer() * (&l / e.denom())
                    })
                    .collect()
            })
            .collect();
        (rows, scale)
    }

    /// Rank, by fraction-free elimination on the integer rescaling.
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        let mut rank = 0;
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            for i in row + 1..self.rows {
                for j in col + 1..self.cols {
                    let t = &a[i][j] * &a[row][col] - &a[i][col] * &a[row][j];
                    debug_assert!((&t % &prev).is_zero(), "Bareiss division not exact");
                    a[i][j] = t / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[row][col].clone();
            row += 1;
            rank += 1;
        }
        rank
    }

    /// Determinant by Bareiss elimination. Errors on non-square input;
    /// the determinant of the empty matrix is 1.
    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        let (mut a, scale) = self.integer_rows();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Ok(Rat::zero());
                };
                a.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    debug_assert!((&t % &prev).is_zero(), "Bareiss division not exact");
                    a[i][j] = t / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        let d = if negate { -d } else { d };
        Ok(Rat::new(d, scale))
    }

    /// Reduced row echelon form and the pivot column indices, in order.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let pivot = m.at(r, col).clone();
            for j in col..m.cols {
                let v = m.at(r, j) / &pivot;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, col).is_zero() {
                    continue;
                }
                let factor = m.at(i, col).clone();
                for j in col..m.cols {
                    let v = m.at(i, j) - &factor * m.at(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    /// Canonical basis of the right null space `{v : M v = 0}`, one basis
    /// vector per row, in reduced row echelon form. The kernel of a matrix
    /// with no rows is all of the column space.
    pub fn kernel_basis(&self) -> QMatrix {
        let (reduced, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced.at(pr, f).clone();
            }
            rows.push(v);
        }
        let (canonical, _) = QMatrix::from_rows(rows, self.cols).rref();
        canonical
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// True when the rational is an integer with absolute value at most `bound`.
pub fn small_integer(x: &Rat, bound: i64) -> bool {
    x.denom().is_one() && x.numer().abs() <= BigInt::from(bound)
}
