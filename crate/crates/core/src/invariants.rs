//! Numerical invariants of codimension-two subvarieties of quadrics.
//!
//! A threefold `X` on Q^5 is summarized by its degree, sectional genus and
//! the holomorphic Euler characteristics of a hyperplane section `S` and of
//! `X` itself. Surfaces on Q^4 carry `(d, g, χ)`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};

fn check_degree(d: i64) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidInvariants(format!("degree {d} is below 2")));
    }
    if d % 2 != 0 {
        return Err(Error::InvalidInvariants(format!("degree {d} is odd")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Threefold5Invariants {
    pub d: i64,
    pub g: i64,
    pub chi_os: i64,
    pub chi_ox: i64,
}

impl Threefold5Invariants {
    pub fn new(d: i64, g: i64, chi_os: i64, chi_ox: i64) -> Result<Self> {
        check_degree(d)?;
        if g < 0 {
            return Err(Error::InvalidInvariants(format!("negative genus {g}")));
        }
        Ok(Threefold5Invariants { d, g, chi_os, chi_ox })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surface4Invariants {
    pub d: i64,
    pub g: i64,
    pub chi: i64,
}

impl Surface4Invariants {
    pub fn new(d: i64, g: i64, chi: i64) -> Result<Self> {
        check_degree(d)?;
        if g < 0 {
            return Err(Error::InvalidInvariants(format!("negative genus {g}")));
        }
        Ok(Surface4Invariants { d, g, chi })
    }
}

/// Outcome of an inequality screen. `residual` is the signed margin; the
/// screen holds iff it is non-negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub residual: Rational,
}

impl Verdict {
    pub fn from_residual(residual: Rational) -> Self {
        Verdict {
            holds: !residual.is_negative(),
            residual,
        }
    }
}

/// `K·L²`.
pub fn kl2(inv: &Threefold5Invariants) -> Rational {
    int(2 * (inv.g - 1) - 2 * inv.d)
}

/// `K²·L`.
pub fn k2l(inv: &Threefold5Invariants) -> Rational {
    let d = int(inv.d);
    &d * &d / 4 + &d * frac(3, 2) - int(8 * (inv.g - 1)) + int(6 * inv.chi_os)
}

/// `K³`.
pub fn k3(inv: &Threefold5Invariants) -> Rational {
    let d = int(inv.d);
    let g1 = int(inv.g - 1);
    -(&d * &d) * frac(9, 4) + &d * frac(27, 2) + &d * int(inv.g) + g1 * 18
        - int(30 * inv.chi_os)
        - int(24 * inv.chi_ox)
}

/// `K²` of a surface on Q^4 with balanced class, from its double point
/// formula `2K² = d²/2 - 3d - 8(g-1) + 12χ`.
pub fn surface_k2(inv: &Surface4Invariants) -> Rational {
    let d = int(inv.d);
    let twice = &d * &d / 2 - &d * 3 - int(8 * (inv.g - 1)) + int(12 * inv.chi);
    twice / 2
}

/// `60χ(O_S) - (3d²/2 - 12d + (d-48)(g-1) + 24χ(O_X))`.
pub fn check_s3_nonneg(inv: &Threefold5Invariants) -> Verdict {
    let d = int(inv.d);
    let rhs = &d * &d * frac(3, 2) - &d * 12 + int((inv.d - 48) * (inv.g - 1))
        + int(24 * inv.chi_ox);
    Verdict::from_residual(int(60 * inv.chi_os) - rhs)
}

/// Hodge index bound on `χ(O_S)`: residual is
/// `(2/3)(g-1)²/d - d²/24 + 5d/12 - χ(O_S)`.
pub fn check_ghit(inv: &Threefold5Invariants) -> Verdict {
    let d = int(inv.d);
    let g1 = int(inv.g - 1);
    let bound = &g1 * &g1 * frac(2, 3) / &d - &d * &d / 24 + &d * frac(5, 12);
    Verdict::from_residual(bound - int(inv.chi_os))
}

/// One row of the classification table for small degree, plus the K3 scroll.
/// `n = None` means the pair embeds in every Q^n with n ≥ 5.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownPairRecord {
    pub type_label: char,
    pub n: Option<u32>,
    pub d: i64,
    pub g: Option<i64>,
    pub q: Option<i64>,
    pub p_g: Option<i64>,
    pub scroll: bool,
    pub description: String,
}

impl KnownPairRecord {
    /// `χ(O_S) = 1 - q + p_g` when both are known.
    pub fn chi_os(&self) -> Option<i64> {
        Some(1 - self.q? + self.p_g?)
    }

    pub fn fits_ambient(&self, n: u32) -> bool {
        self.n.map_or(n >= 5, |m| m == n)
    }
}

#[allow(clippy::too_many_arguments)]
fn rec(
    type_label: char,
    n: Option<u32>,
    d: i64,
    g: i64,
    q: i64,
    p_g: i64,
    scroll: bool,
    description: &str,
) -> KnownPairRecord {
    KnownPairRecord {
        type_label,
        n,
        d,
        g: Some(g),
        q: Some(q),
        p_g: Some(p_g),
        scroll,
        description: description.to_string(),
    }
}

pub fn known_pairs() -> Vec<KnownPairRecord> {
    vec![
        rec('A', None, 2, 0, 0, 0, false, "complete intersection (1,1,2), O(1)"),
        rec('B', None, 4, 1, 0, 0, false, "complete intersection (1,2,2), O(1)"),
        rec('C', Some(6), 4, 0, 0, 0, true, "P1 x P3, O(1,1)"),
        rec('D', Some(5), 4, 0, 0, 0, true, "P(O(1)^2 + O(2)) over P1, tautological"),
        rec('E', None, 6, 4, 0, 1, false, "complete intersection (1,2,3), O(1)"),
        rec('F', Some(5), 6, 1, 0, 0, true, "P(T_P2), tautological, general codimension one system"),
        rec('G', Some(5), 6, 2, 0, 0, false, "double cover of P1 x P2 branched along (2,2), L = p*O(1,1)"),
        rec('H', None, 8, 9, 0, 5, false, "complete intersection (1,2,4), O(1)"),
        rec('I', None, 8, 5, 0, 1, false, "complete intersection (2,2,2), O(1)"),
        rec('L', Some(5), 8, 4, 0, 0, true, "P(E), E a rank two bundle on Q2, tautological"),
        rec('M', None, 10, 16, 0, 14, false, "complete intersection (1,2,5), O(1)"),
        rec('N', Some(5), 10, 8, 0, 2, false, "Del Pezzo fibration over P1, K_F^2 = 4, K_X = -L + f*O(1)"),
        KnownPairRecord {
            type_label: 'O',
            n: Some(5),
            d: 12,
            g: None,
            q: None,
            p_g: None,
            scroll: true,
            description: "scroll over a minimal K3 surface".to_string(),
        },
    ]
}

/// Records of degree `d`, restricted to ambient `Q^n` when `n` is given.
pub fn lookup(d: i64, n: Option<u32>) -> Vec<KnownPairRecord> {
    known_pairs()
        .into_iter()
        .filter(|r| r.d == d && n.is_none_or(|n| r.fits_ambient(n)))
        .collect()
}

fn opt(v: Option<impl ToString>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Tab-separated export, one record per line, header first.
pub fn known_pairs_tsv() -> String {
    let mut out = String::from("type\tn\td\tg\tq\tp_g\tscroll\tdescription\n");
    for r in known_pairs() {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.type_label,
            r.n.map_or_else(|| ">=5".to_string(), |n| n.to_string()),
            r.d,
            opt(r.g),
            opt(r.q),
            opt(r.p_g),
            r.scroll,
            r.description
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t5(d: i64, g: i64, s: i64, x: i64) -> Threefold5Invariants {
        Threefold5Invariants::new(d, g, s, x).unwrap()
    }

    #[test]
    fn adjoint_numbers_type_n() {
        let n = t5(10, 8, 3, 1);
        assert_eq!(kl2(&n), int(-6));
        assert_eq!(k2l(&n), int(2));
        assert_eq!(k3(&n), int(2));
    }

    #[test]
    fn adjoint_numbers_type_i() {
        let i = t5(8, 5, 2, 1);
        assert_eq!(k2l(&i), int(8));
        assert_eq!(k3(&i), int(-8));
        assert_eq!(kl2(&t5(2, 0, 1, 1)), int(-6));
    }

    #[test]
    fn kl2_vanishes_when_g_minus_one_is_d() {
        assert!(kl2(&t5(6, 7, 0, 0)).is_zero());
    }

    #[test]
    fn k3_slope_in_chi_ox() {
        let a = k3(&t5(12, 9, 2, 0));
        let b = k3(&t5(12, 9, 2, 1));
        assert_eq!(b - a, int(-24));
    }

    #[test]
    fn invalid_records() {
        assert!(Threefold5Invariants::new(0, 0, 0, 0).is_err());
        assert!(Threefold5Invariants::new(7, 1, 1, 1).is_err());
        assert!(Surface4Invariants::new(9, 1, 1).is_err());
        assert!(Threefold5Invariants::new(8, -1, 1, 1).is_err());
    }

    #[test]
    fn surface_k2_values() {
        let k = |d, g, c| surface_k2(&Surface4Invariants::new(d, g, c).unwrap());
        assert_eq!(k(4, 1, 1), int(4));
        assert_eq!(k(6, 4, 2), int(0));
        assert_eq!(k(16, 1, 1), int(46));
    }

    #[test]
    fn s3_screen() {
        let v = check_s3_nonneg(&t5(10, 8, 3, 1));
        assert!(v.holds);
        assert_eq!(v.residual, int(392));
        assert!(!check_s3_nonneg(&t5(100, 500, 0, 0)).holds);
    }

    #[test]
    fn ghit_screen() {
        let v = check_ghit(&t5(10, 8, 3, 1));
        assert!(v.holds);
        // 49/15 - 3
        assert_eq!(v.residual, frac(4, 15));
        assert!(!check_ghit(&t5(100, 10, 500, 0)).holds);
    }

    #[test]
    fn table_shape() {
        let t = known_pairs();
        assert_eq!(t.len(), 13);
        assert!(t.iter().all(|r| r.d % 2 == 0));
        let labels: String = t.iter().map(|r| r.type_label).collect();
        assert_eq!(labels, "ABCDEFGHILMNO");
        let scrolls: String = t.iter().filter(|r| r.scroll).map(|r| r.type_label).collect();
        assert_eq!(scrolls, "CDFLO");
    }

    #[test]
    fn lookups() {
        let six: String = lookup(6, Some(5)).iter().map(|r| r.type_label).collect();
        assert_eq!(six, "EFG");
        let two: String = lookup(2, None).iter().map(|r| r.type_label).collect();
        assert_eq!(two, "A");
        let four6: String = lookup(4, Some(6)).iter().map(|r| r.type_label).collect();
        assert_eq!(four6, "BC");
    }

    #[test]
    fn fixture_matches_table() {
        let fixture = include_str!("../fixtures/known_pairs.tsv");
        assert_eq!(fixture, known_pairs_tsv());
    }

    proptest! {
        #[test]
        fn odd_degrees_rejected(d in 0i64..500, g in 0i64..100) {
            let d = 2 * d + 1;
            prop_assert!(Threefold5Invariants::new(d, g, 0, 0).is_err());
            prop_assert!(Surface4Invariants::new(d, g, 0).is_err());
        }

        #[test]
        fn s3_residual_slope_in_chi_os(d in 1i64..100, g in 0i64..300, s in -50i64..50, x in -5i64..5) {
            let a = check_s3_nonneg(&t5(2 * d, g, s, x)).residual;
            let b = check_s3_nonneg(&t5(2 * d, g, s + 1, x)).residual;
            prop_assert_eq!(b - a, int(60));
        }

        #[test]
        fn ghit_residual_slope_in_chi_os(d in 1i64..100, g in 0i64..300, s in -50i64..50) {
            let a = check_ghit(&t5(2 * d, g, s, 0)).residual;
            let b = check_ghit(&t5(2 * d, g, s + 1, 0)).residual;
            prop_assert_eq!(b - a, int(-1));
        }

        #[test]
        fn adjoint_numbers_integral_on_even_degree(d in 1i64..500, g in 0i64..5000, s in -99i64..99, x in -9i64..9) {
            let inv = t5(2 * d, g, s, x);
            prop_assert!(kl2(&inv).is_integer());
            prop_assert!(k2l(&inv).is_integer());
            prop_assert!(k3(&inv).is_integer());
        }
    }

    #[test]
    fn del_pezzo_relation_singles_out_four_and_six() {
        for d in (2..=100).step_by(2) {
            let k = surface_k2(&Surface4Invariants::new(d, 1, 1).unwrap());
            assert_eq!(k == int(d), d == 4 || d == 6, "d = {d}");
        }
    }
}
