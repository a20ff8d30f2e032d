use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;

/// A univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `t`.
    pub fn var() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> Rational {
        self.eval(&Rational::from(x))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i))
                .collect(),
        )
    }

    /// Cauchy's bound: every complex root has modulus below
    /// `1 + max |a_i / a_n|`. `None` for constants.
    pub fn cauchy_bound(&self) -> Option<Rational> {
        let n = self.degree().filter(|&n| n > 0)?;
        let lead = self.leading();
        let m = self.coeffs[..n]
            .iter()
            .map(|c| (c / &lead).abs())
            .fold(Rational::zero(), Rational::max);
        Some(m + Rational::one())
    }

    /// An integer `T ≥ 0` such that the polynomial has the sign of its leading
    /// coefficient on `(T, ∞)`: the smallest `T` with
    /// `T^(n-i) ≥ n·|a_i/a_n|` for every `i < n`. `None` for constants.
    pub fn positive_root_bound(&self) -> Option<BigInt> {
        let n = self.degree().filter(|&n| n > 0)?;
        let lead = self.leading();
        let mut t = BigInt::zero();
        for (i, c) in self.coeffs[..n].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = (c / &lead).abs() * Rational::from(n);
            let q = q.ceil();
            let e = (n - i) as u32;
            // Smallest r with r^e >= q.
            let mut r = q.nth_root(e);
            while r.pow(e) < q {
                r += 1;
            }
            t = t.max(r);
        }
        Some(t)
    }

    /// The primitive integer polynomial with the same roots.
    fn integer_multiple(&self) -> Vec<BigInt> {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| (c * Rational::from(l.clone())).to_integer().expect("cleared"))
            .collect()
    }

    /// All integer roots, ascending, each listed once. The zero polynomial
    /// has every integer as a root and yields `None`.
    pub fn integer_roots(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return None;
        }
        let ints = self.integer_multiple();
        let shift = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(BigInt::zero());
        }
        let a0 = ints[shift].abs();
        if ints.len() - shift > 1 {
            for q in divisors(&a0) {
                for cand in [q.clone(), -q] {
                    if self.eval(&Rational::from(&cand)).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Some(roots)
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag == Rational::one();
            match i {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !unit {
                        if mag.is_integer() {
                            out.push_str(&mag.to_string());
                        } else {
                            out.push_str(&format!("({mag})"));
                        }
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let r = n.sqrt();
    let mut k = BigInt::one();
    while k <= r {
        if (n % &k).is_zero() {
            let other = n / &k;
            if other != k {
                large.push(other);
            }
            small.push(k.clone());
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl From<Rational> for RationalPoly {
    fn from(c: Rational) -> Self {
        RationalPoly::constant(c)
    }
}

impl From<i64> for RationalPoly {
    fn from(c: i64) -> Self {
        RationalPoly::constant(Rational::from(c))
    }
}

impl<'a, 'b> Add<&'b RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &'b RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, 'b> Sub<&'b RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &'b RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, 'b> Mul<&'b RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &'b RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl<'a> Neg for &'a RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalPoly> for RationalPoly {
            type Output = RationalPoly;
            fn $m(self, rhs: RationalPoly) -> RationalPoly {
                $tr::$m(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a RationalPoly> for RationalPoly {
            type Output = RationalPoly;
            fn $m(self, rhs: &'a RationalPoly) -> RationalPoly {
                $tr::$m(&self, rhs)
            }
        }
        impl<'a> $tr<RationalPoly> for &'a RationalPoly {
            type Output = RationalPoly;
            fn $m(self, rhs: RationalPoly) -> RationalPoly {
                $tr::$m(self, &rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn normalizes_trailing_zeros() {
        let p = RationalPoly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(RationalPoly::from_i64(&[0, 0]).degree(), None);
    }

    #[test]
    fn integer_roots_of_quadratic() {
        // (d - 4)(d - 6)
        let p = RationalPoly::from_i64(&[24, -10, 1]);
        assert_eq!(
            p.integer_roots().unwrap(),
            vec![BigInt::from(4), BigInt::from(6)]
        );
    }

    #[test]
    fn integer_roots_with_rational_coefficients() {
        // (t/2 - 3) * t * (t + 5)
        let p = &(&RationalPoly::new(vec![int(-3), frac(1, 2)]) * &RationalPoly::var())
            * &RationalPoly::from_i64(&[5, 1]);
        let roots: Vec<i64> = p
            .integer_roots()
            .unwrap()
            .into_iter()
            .map(|r| r.try_into().unwrap())
            .collect();
        assert_eq!(roots, vec![-5, 0, 6]);
    }

    #[test]
    fn no_integer_roots() {
        assert!(RationalPoly::from_i64(&[1, 0, 1]).integer_roots().unwrap().is_empty());
        assert!(RationalPoly::from_i64(&[7]).integer_roots().unwrap().is_empty());
        assert!(RationalPoly::zero().integer_roots().is_none());
    }

    #[test]
    fn display() {
        let p = RationalPoly::from_i64(&[18976, -1520, -27, 3]);
        assert_eq!(p.display_in("d"), "3d^3 - 27d^2 - 1520d + 18976");
        let q = RationalPoly::new(vec![int(0), frac(-1, 2), int(1)]);
        assert_eq!(q.display_in("x"), "x^2 - (1/2)x");
    }

    #[test]
    fn cauchy_bound_value() {
        let p = RationalPoly::from_i64(&[18976, -1520, -27, 3]);
        assert_eq!(p.cauchy_bound().unwrap(), frac(18976 + 3, 3));
        assert!(RationalPoly::from_i64(&[5]).cauchy_bound().is_none());
    }

    fn arb_poly() -> impl Strategy<Value = RationalPoly> {
        proptest::collection::vec((-30i64..30, 1i64..5), 0..6)
            .prop_map(|v| RationalPoly::new(v.into_iter().map(|(p, q)| frac(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), x in -20i64..20) {
            let x = int(x);
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p - &q).eval(&x), p.eval(&x) - q.eval(&x));
        }

        #[test]
        fn planted_roots_are_found(
            roots in proptest::collection::vec(-40i64..40, 1..4),
            k in 1i64..7,
        ) {
            let mut p = RationalPoly::constant(frac(k, 3));
            for r in &roots {
                p = &p * &RationalPoly::from_i64(&[-r, 1]);
            }
            let found = p.integer_roots().unwrap();
            let mut want: Vec<BigInt> = roots.iter().map(|&r| BigInt::from(r)).collect();
            want.sort();
            want.dedup();
            prop_assert_eq!(found, want);
        }

        #[test]
        fn roots_lie_within_cauchy_bound(
            roots in proptest::collection::vec(-40i64..40, 1..4),
        ) {
            let mut p = RationalPoly::constant(int(1));
            for r in &roots {
                p = &p * &RationalPoly::from_i64(&[-r, 1]);
            }
            let b = p.cauchy_bound().unwrap();
            for r in roots {
                prop_assert!(int(r).abs() < b);
            }
        }
    }
}
