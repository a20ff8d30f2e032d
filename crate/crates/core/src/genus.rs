//! Genus and postulation bounds for curves on Q^3, plus Castelnuovo-type
//! bounds for curves in P^4.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// A curve of degree `d` and genus `g` lying on a surface of degree `2k`
/// in Q^3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveOnQuadric {
    pub d: i64,
    pub g: i64,
    pub k: i64,
}

impl CurveOnQuadric {
    pub fn new(d: i64, g: i64, k: i64) -> Result<Self> {
        if d < 1 || k < 1 || g < 0 {
            return Err(Error::InvalidInvariants(format!(
                "curve needs d >= 1, k >= 1, g >= 0 (got d={d}, g={g}, k={k})"
            )));
        }
        Ok(CurveOnQuadric { d, g, k })
    }

    /// Whether `g - 1` respects [`contained_bound`].
    pub fn satisfies_contained_bound(&self) -> bool {
        int(self.g - 1) <= contained_bound(self.d, self.k)
    }
}

/// Upper bound on `g - 1` for a curve on a surface of degree `2k` in Q^3:
/// `d²/(4k) + (k-3)d/2`.
pub fn contained_bound(d: i64, k: i64) -> Rational {
    assert!(k >= 1, "k must be positive");
    int(d * d) / int(4 * k) + int((k - 3) * d) / 2
}

/// Upper bound on `g - 1` for a curve on no surface of degree below `2k`:
/// `d²/(2k) + (k-4)d/2`.
pub fn notcontained_bound(d: i64, k: i64) -> Rational {
    assert!(k >= 1, "k must be positive");
    int(d * d) / int(2 * k) + int((k - 4) * d) / 2
}

/// `μ_l = c₂(N(-l)) = d²/2 + l(l-3)d - 2l(g-1)`.
pub fn mu(d: i64, g: i64, l: i64) -> Rational {
    int(d * d) / 2 + int(l * (l - 3) * d) - int(2 * l * (g - 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpasVerdict {
    pub holds: bool,
    pub mu: Rational,
    pub upper: Rational,
}

/// `0 ≤ μ_s ≤ s²d`.
pub fn epas_check(d: i64, g: i64, s: i64) -> EpasVerdict {
    let m = mu(d, g, s);
    let upper = int(s * s * d);
    EpasVerdict {
        holds: !m.is_negative() && m <= upper,
        mu: m,
        upper,
    }
}

/// Genus bound for nondegenerate curves in P^4 lying on no surface of
/// degree below 4: the smaller of the classical bound and Harris' `π₁`.
pub fn castelnuovo_p4(d: i64) -> i64 {
    assert!(d >= 1, "degree must be positive");
    harris_pi1(d, 4).min(castelnuovo_classical(d, 4))
}

/// Harris' `π₁(d, r)`: with `m = ⌊(d-1)/r⌋`, `ε = d - 1 - rm`,
/// `r·C(m,2) + m(ε+1) + [ε = r-1]`. Only meaningful for `d ≥ 2r+1`.
pub fn harris_pi1(d: i64, r: i64) -> i64 {
    assert!(d >= 1 && r >= 2, "need d >= 1 and r >= 2");
    let m = (d - 1) / r;
    let eps = d - 1 - r * m;
    r * m * (m - 1) / 2 + m * (eps + 1) + i64::from(eps == r - 1)
}

/// Classical Castelnuovo bound `π₀(d, r)` for nondegenerate curves in P^r:
/// `m = ⌊(d-1)/(r-1)⌋`, `ε = d - 1 - m(r-1)`, `C(m,2)(r-1) + mε`.
pub fn castelnuovo_classical(d: i64, r: i64) -> i64 {
    assert!(d >= 1 && r >= 2, "need d >= 1 and r >= 2");
    let m = (d - 1) / (r - 1);
    let eps = d - 1 - m * (r - 1);
    m * (m - 1) / 2 * (r - 1) + m * eps
}

/// Second difference of `f` at `d` on the integer grid.
pub fn second_difference(f: impl Fn(i64) -> Rational, d: i64) -> Rational {
    f(d + 1) - f(d) * 2 + f(d - 1)
}

/// `μ_{σ+t} - μ_σ` as an explicit polynomial.
pub fn mu_increment(d: i64, g: i64, sigma: i64, t: i64) -> Rational {
    int(sigma * t * d) + int(t * (sigma + t - 3) * d) - int(2 * t * (g - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    #[test]
    fn contained_values() {
        assert_eq!(contained_bound(44, 3), frac(484, 3));
        assert_eq!(contained_bound(98, 11), frac(2401, 11) + int(392));
        // k = 3 leaves only the quadratic term.
        assert_eq!(contained_bound(30, 3), int(75));
    }

    #[test]
    fn notcontained_values() {
        assert_eq!(notcontained_bound(20, 11), frac(400, 22) + int(70));
        assert_eq!(notcontained_bound(20, 4), int(50));
        for d in [20, 64, 98] {
            assert_eq!(
                notcontained_bound(d, 11),
                int(d * d) / 22 + int(d) * frac(7, 2)
            );
        }
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(8, 5, 2), int(0));
        assert_eq!(mu(14, 3, 0), int(98));
    }

    #[test]
    fn epas_values() {
        let v = epas_check(8, 5, 2);
        assert!(v.holds);
        assert_eq!((v.mu.clone(), v.upper.clone()), (int(0), int(32)));
        // d=2, g=0, s=1: μ = 2 - 4 + 2 = 0, upper 2.
        let w = epas_check(2, 0, 1);
        assert!(w.holds);
        assert_eq!(w.mu, int(0));
        assert!(!epas_check(8, 500, 2).holds);
    }

    #[test]
    fn castelnuovo_values() {
        assert_eq!(castelnuovo_p4(12), 13);
        assert_eq!(castelnuovo_p4(5), 1);
        let first: Vec<i64> = (1..=13).map(castelnuovo_p4).collect();
        assert_eq!(first, vec![0, 0, 0, 0, 1, 2, 3, 5, 6, 8, 10, 13, 15]);
        assert_eq!(castelnuovo_classical(12, 4), 15);
        // plane curves
        assert_eq!(castelnuovo_classical(5, 2), 6);
    }

    #[test]
    fn castelnuovo_monotone() {
        for d in 1..2000 {
            assert!(castelnuovo_p4(d) <= castelnuovo_p4(d + 1), "d = {d}");
            assert!(castelnuovo_p4(d) <= castelnuovo_classical(d, 4));
        }
    }

    proptest! {
        #[test]
        fn bounds_are_convex(d in 2i64..2000, k in 1i64..40) {
            prop_assert!(!second_difference(|x| contained_bound(x, k), d).is_negative());
            prop_assert!(!second_difference(|x| notcontained_bound(x, k), d).is_negative());
        }

        #[test]
        fn mu_slope_in_g(d in 1i64..500, g in 0i64..500, l in -10i64..10) {
            prop_assert_eq!(mu(d, g + 1, l) - mu(d, g, l), int(-2 * l));
        }

        #[test]
        fn mu_increment_identity(d in 1i64..300, g in 0i64..2000, sigma in 0i64..12, t in 0i64..12) {
            prop_assert_eq!(
                mu(d, g, sigma + t) - mu(d, g, sigma),
                mu_increment(d, g, sigma, t)
            );
            let direct = epas_check(d, g, sigma + t).mu;
            prop_assert_eq!(direct, mu(d, g, sigma) + mu_increment(d, g, sigma, t));
        }

        #[test]
        fn epas_monotone_in_genus(d in 1i64..300, g in 0i64..2000, s in 1i64..10) {
            prop_assert!(epas_check(d, g + 1, s).mu < epas_check(d, g, s).mu);
        }
    }
}
