use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// A dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix { rows: r, cols: c, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let s = (0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum();
                out.set(r, c, s);
            }
        }
        Ok(out)
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Exact determinant by Gaussian elimination with row swaps.
    pub fn determinant(&self) -> Result<Rational> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                for k in 0..n {
                    a.swap(p * n + k, col * n + k);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = &a[r * n + col] / &pivot;
                for k in col..n {
                    let delta = &f * &a[col * n + k];
                    a[r * n + k] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Solves `self * x = rhs` exactly. Fails with `SingularMatrix` when the
    /// system has no unique solution.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>> {
        self.require_square()?;
        let n = self.rows;
        if rhs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rhs.len(),
            });
        }
        let w = n + 1;
        let mut a: Vec<Rational> = Vec::with_capacity(n * w);
        for r in 0..n {
            a.extend(self.row(r).iter().cloned());
            a.push(rhs[r].clone());
        }
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r * w + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if p != col {
                for k in 0..w {
                    a.swap(p * w + k, col * w + k);
                }
            }
            let pivot = a[col * w + col].clone();
            for k in col..w {
                a[col * w + k] /= &pivot;
            }
            for r in 0..n {
                if r == col || a[r * w + col].is_zero() {
                    continue;
                }
                let f = a[r * w + col].clone();
                for k in col..w {
                    let delta = &f * &a[col * w + k];
                    a[r * w + k] -= delta;
                }
            }
        }
        Ok((0..n).map(|r| a[r * w + n].clone()).collect())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn solve_linear(m: &RationalMatrix, rhs: &[Rational]) -> Result<Vec<Rational>> {
    m.solve(rhs)
}

pub fn determinant(m: &RationalMatrix) -> Result<Rational> {
    m.determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    // Cofactor expansion: a second, independent route to the determinant.
    fn laplace(m: &RationalMatrix) -> Rational {
        let n = m.rows();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rational::zero();
        for c in 0..n {
            let minor_rows: Vec<Vec<Rational>> = (1..n)
                .map(|r| (0..n).filter(|&k| k != c).map(|k| m.get(r, k).clone()).collect())
                .collect();
            let minor = RationalMatrix::from_rows(minor_rows).unwrap();
            let term = m.get(0, c) * laplace(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn small_determinant() {
        let m = RationalMatrix::from_i64_rows(&[&[0, 2, 1], &[1, 0, 3], &[4, 5, 6]]).unwrap();
        assert_eq!(m.determinant().unwrap(), laplace(&m));
        assert_eq!(m.determinant().unwrap(), int(17));
    }

    #[test]
    fn singular_detected() {
        let m = RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), int(0));
        assert!(matches!(m.solve(&[int(1), int(2)]), Err(Error::SingularMatrix)));
    }

    #[test]
    fn rejects_non_square() {
        let m = RationalMatrix::zeros(2, 3);
        assert!(matches!(m.determinant(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn solve_with_fractions() {
        let m = RationalMatrix::from_rows(vec![
            vec![frac(1, 2), int(3)],
            vec![int(-2), frac(1, 3)],
        ])
        .unwrap();
        let x = m.solve(&[int(1), int(0)]).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![int(1), int(0)]);
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
        proptest::collection::vec((-9i64..10, 1i64..4), n * n).prop_map(move |v| {
            RationalMatrix::new(n, n, v.into_iter().map(|(p, q)| frac(p, q)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn det_matches_cofactor_expansion(m in (1usize..5).prop_flat_map(arb_matrix)) {
            prop_assert_eq!(m.determinant().unwrap(), laplace(&m));
        }

        #[test]
        fn det_is_multiplicative(a in arb_matrix(3), b in arb_matrix(3)) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(
                ab.determinant().unwrap(),
                a.determinant().unwrap() * b.determinant().unwrap()
            );
        }

        #[test]
        fn solve_round_trips(
            m in arb_matrix(4),
            b in proptest::collection::vec(-20i64..20, 4),
        ) {
            let rhs: Vec<Rational> = b.into_iter().map(int).collect();
            match m.solve(&rhs) {
                Ok(x) => prop_assert_eq!(m.mul_vec(&x).unwrap(), rhs),
                Err(Error::SingularMatrix) => prop_assert!(m.determinant().unwrap().is_zero()),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
