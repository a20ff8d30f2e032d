//! Sweep of lattice points `(x, y)` for conic bundles over a surface on
//! Q^5, one degree at a time, with integrality and inequality filters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::conic_bundle::{scaled_solution_forms, genus_form, p_of_d, superbound, triangle, Affine, SolutionVector};
use crate::error::{Error, Result};
use crate::invariants::{check_ghit, check_s3_nonneg, Threefold5Invariants};
use crate::rational::{int, Rational, RationalPoly};

/// Environment variable capping the lattice-point count scanned per degree.
pub const BUDGET_ENV: &str = "QCV_BUDGET";
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Filters in reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Filter {
    #[serde(rename = "triangle")]
    Triangle,
    #[serde(rename = "integrality")]
    Integrality,
    #[serde(rename = "superbound")]
    Superbound,
    #[serde(rename = "s3_chi")]
    S3Chi,
    #[serde(rename = "hodge_Y")]
    HodgeY,
    #[serde(rename = "k3_tail")]
    K3Tail,
}

impl Filter {
    pub const ALL: [Filter; 6] = [
        Filter::Triangle,
        Filter::Integrality,
        Filter::Superbound,
        Filter::S3Chi,
        Filter::HodgeY,
        Filter::K3Tail,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Filter::Triangle => "triangle",
            Filter::Integrality => "integrality",
            Filter::Superbound => "superbound",
            Filter::S3Chi => "s3_chi",
            Filter::HodgeY => "hodge_Y",
            Filter::K3Tail => "k3_tail",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Filter::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown filter {s:?}")))
    }
}

/// Histogram key for the external genus bound, checked alongside the
/// superbound.
pub const GROSS_BOUND_KEY: &str = "gross_bound";

/// An upper bound `g - 1 ≤ poly(d)` supplied from outside, read from JSON:
/// `{"name": "...", "certified": true, "g_minus_1_max": ["0", "1/12", ...]}`
/// with coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrossBound {
    pub name: String,
    /// The user vouches that the polynomial is the intended external bound.
    #[serde(default)]
    pub certified: bool,
    pub g_minus_1_max: Vec<Rational>,
}

impl GrossBound {
    pub fn from_json(s: &str) -> Result<Self> {
        let b: GrossBound = serde_json::from_str(s).map_err(|e| Error::InvalidConfig(format!("gross bound: {e}")))?;
        if b.g_minus_1_max.is_empty() {
            return Err(Error::InvalidConfig("gross bound has no coefficients".into()));
        }
        Ok(b)
    }

    pub fn poly(&self) -> RationalPoly {
        RationalPoly::new(self.g_minus_1_max.clone())
    }

    pub fn allows(&self, d: i64, g_minus_1: &Rational) -> bool {
        *g_minus_1 <= self.poly().eval_i64(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterConfig {
    pub d_min: i64,
    pub d_max: i64,
    pub filters: BTreeSet<Filter>,
    pub gross_bound: Option<GrossBound>,
    pub budget: u64,
}

impl Default for FilterConfig {
    fn default() -> Self {
        FilterConfig {
            d_min: 20,
            d_max: 276,
            filters: Filter::ALL.into_iter().collect(),
            gross_bound: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl FilterConfig {
    /// Default config with the budget taken from `QCV_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        let mut c = Self::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            c.budget = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("{BUDGET_ENV}={v:?} is not a count")))?;
        }
        Ok(c)
    }

    pub fn with_range(mut self, d_min: i64, d_max: i64) -> Self {
        self.d_min = d_min;
        self.d_max = d_max;
        self
    }

    pub fn without(mut self, f: Filter) -> Self {
        self.filters.remove(&f);
        self
    }

    pub fn enabled(&self, f: Filter) -> bool {
        self.filters.contains(&f)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d_min < 20 || self.d_min % 2 != 0 || self.d_max % 2 != 0 || self.d_min > self.d_max {
            return Err(Error::InvalidConfig(format!(
                "degree range [{}, {}] must be even with 20 <= d_min <= d_max",
                self.d_min, self.d_max
            )));
        }
        Ok(())
    }

    pub fn degrees(&self) -> Vec<i64> {
        (self.d_min..=self.d_max).step_by(2).collect()
    }
}

/// `χ(O_Y) = (b₁² + b₂)/12`.
pub fn chi_oy(x: &Rational, b2: &Rational) -> Rational {
    (x + b2) / 12
}

/// `χ(O_S) = 2χ(O_Y) + R(R + K_Y)/2` for the double cover branched along
/// `2R`, with `K_Y·R = -b₁R`.
pub fn chi_os_from_cover(chi_oy: &Rational, r2: &Rational, b1r: &Rational) -> Rational {
    chi_oy * 2 + (r2 - b1r) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeVerdict {
    pub holds: bool,
    /// `(K_Y·R)² = (b₁R)²`.
    pub lhs: Rational,
    /// `K_Y²·R² = x·R²`.
    pub rhs: Rational,
}

/// `(K_Y·R)² ≥ K_Y²·R²` on `Y`. Inside the triangle `x = K_Y² > 0`, so the
/// Hodge index theorem applies.
pub fn hodge_y_checks(v: &SolutionVector, x: &Rational) -> HodgeVerdict {
    let lhs = &v.b1r * &v.b1r;
    let rhs = x * &v.r2;
    HodgeVerdict { holds: lhs >= rhs, lhs, rhs }
}

/// Degrees below 20 where conic bundles over surfaces are known to exist.
pub fn known_small_conic_bundles() -> BTreeSet<i64> {
    [6, 12, 14, 18].into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: i64,
    pub y: i64,
    pub v: SolutionVector,
    #[serde(rename = "chiY")]
    pub chi_y: Rational,
    #[serde(rename = "chiS")]
    pub chi_s: Rational,
    pub g: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSurvivors {
    pub d: i64,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHistogram {
    pub d: i64,
    /// Lattice points in the scanned box.
    pub points: u64,
    /// First failing filter per rejected point.
    pub rejected: BTreeMap<String, u64>,
    pub survivors: u64,
}

impl DegreeHistogram {
    /// The last filter in reporting order that rejected anything: where the
    /// final candidates of a dead degree were lost.
    pub fn eliminated_by(&self) -> Option<String> {
        if self.survivors > 0 {
            return None;
        }
        let order: Vec<&str> = [Filter::Triangle.name(), Filter::Integrality.name(), Filter::Superbound.name()]
            .into_iter()
            .chain([GROSS_BOUND_KEY])
            .chain([Filter::S3Chi, Filter::HodgeY, Filter::K3Tail].map(|f| f.name()))
            .collect();
        order.into_iter().rev().find(|k| self.rejected.get(*k).is_some_and(|&n| n > 0)).map(String::from)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurvivorReport {
    pub config: FilterConfig,
    pub survivors: Vec<DegreeSurvivors>,
    pub rejection_histogram: Vec<DegreeHistogram>,
}

impl SurvivorReport {
    pub fn surviving_degrees(&self) -> BTreeSet<i64> {
        self.survivors.iter().map(|s| s.d).collect()
    }

    pub fn histogram(&self, d: i64) -> Option<&DegreeHistogram> {
        self.rejection_histogram.iter().find(|h| h.d == d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `x ≡ r (mod m)`, with `m ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Progression {
    pub r: BigInt,
    pub m: BigInt,
}

impl Progression {
    pub fn all() -> Self {
        Progression { r: BigInt::zero(), m: BigInt::one() }
    }

    /// Integers `x` with `a·x + b` integral; `None` if there are none.
    pub fn integral(a: &Rational, b: &Rational) -> Option<Self> {
        let l = a.denom().lcm(b.denom());
        let big_a = (a * Rational::from(l.clone())).to_integer().expect("cleared");
        let big_b = (b * Rational::from(l.clone())).to_integer().expect("cleared");
        let g = big_a.gcd(&l);
        if !big_b.is_multiple_of(&g) {
            return None;
        }
        let m = &l / &g;
        if m.is_one() {
            return Some(Self::all());
        }
        let a_red = (&big_a / &g).mod_floor(&m);
        let inv = a_red.extended_gcd(&m).x.mod_floor(&m);
        let r = ((-&big_b / &g) * inv).mod_floor(&m);
        Some(Progression { r, m })
    }

    /// Intersection by the generalized Chinese remainder theorem.
    pub fn meet(&self, o: &Progression) -> Option<Self> {
        let e = self.m.extended_gcd(&o.m);
        let g = e.gcd;
        let diff = &o.r - &self.r;
        if !diff.is_multiple_of(&g) {
            return None;
        }
        let lcm = &self.m / &g * &o.m;
        let k = (&diff / &g * e.x).mod_floor(&(&o.m / &g));
        let r = (&self.r + &self.m * k).mod_floor(&lcm);
        Some(Progression { r, m: lcm })
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        (x - &self.r).is_multiple_of(&self.m)
    }

    /// Members in `[lo, hi]`, ascending.
    pub fn members(&self, lo: &BigInt, hi: &BigInt) -> impl Iterator<Item = BigInt> + '_ {
        let first = lo + (&self.r - lo).mod_floor(&self.m);
        let hi = hi.clone();
        let step = self.m.clone();
        std::iter::successors(Some(first), move |x| Some(x + &step)).take_while(move |x| *x <= hi)
    }

    pub fn count(&self, lo: &BigInt, hi: &BigInt) -> BigInt {
        if lo > hi {
            return BigInt::zero();
        }
        let first = lo + (&self.r - lo).mod_floor(&self.m);
        if first > *hi {
            BigInt::zero()
        } else {
            (hi - &first) / &self.m + 1
        }
    }
}

fn span(lo: &BigInt, hi: &BigInt) -> BigInt {
    if lo > hi {
        BigInt::zero()
    } else {
        hi - lo + 1
    }
}

fn to_u64(n: &BigInt) -> u64 {
    u64::try_from(n).expect("count fits u64")
}

/// Everything that must be integral, as affine functions of `x` at fixed
/// `(d, y)`: the solution vector, `g - 1`, `χ(O_Y)` and `χ(O_S)`.
fn integrality_forms(sol: &[Affine], genus: &Affine, p: &Rational, y: &Rational) -> Vec<(Rational, Rational)> {
    let at = |f: &Affine| (&f.x / p, (&f.y * y + &f.c) / p);
    let v: Vec<(Rational, Rational)> = sol.iter().map(at).collect();
    let (b1r, r2, b2) = (&v[0], &v[1], &v[4]);
    let chi_y = ((&b2.0 + Rational::one()) / 12, &b2.1 / 12);
    let chi_s = (
        &chi_y.0 * 2 + (&r2.0 - &b1r.0) / 2,
        &chi_y.1 * 2 + (&r2.1 - &b1r.1) / 2,
    );
    let mut out = v.clone();
    out.push(at(genus));
    out.push(chi_y);
    out.push(chi_s);
    out
}

struct Tally {
    counts: BTreeMap<String, u64>,
}

impl Tally {
    fn new() -> Self {
        Tally { counts: BTreeMap::new() }
    }

    fn add(&mut self, key: &str, n: u64) {
        if n > 0 {
            *self.counts.entry(key.to_string()).or_default() += n;
        }
    }
}

/// Sweeps one degree.
pub fn enumerate_degree(config: &FilterConfig, d: i64) -> Result<(DegreeSurvivors, DegreeHistogram)> {
    let tri = triangle(d)?;
    let sb = superbound(d)?;
    let p = p_of_d(d);
    let sol: Vec<Affine> = scaled_solution_forms().iter().map(|f| f.at(d)).collect();
    let genus = genus_form().at(d);
    let y_max: BigInt = tri.v3.1.floor();
    let x_box = (tri.v1.0.ceil(), tri.v2.0.floor());
    let points = span(&BigInt::zero(), &y_max) * span(&x_box.0, &x_box.1);
    if points > BigInt::from(config.budget) {
        return Err(Error::RegionOverflow { d, points: Rational::from(points), budget: config.budget });
    }
    let mut tally = Tally::new();
    let mut witnesses = Vec::new();
    let mut y = BigInt::zero();
    while y <= y_max {
        let yr = Rational::from(y.clone());
        let (lo, hi) = if config.enabled(Filter::Triangle) {
            let (lo, hi) = tri.x_range(&yr);
            let (lo, hi) = (lo.ceil().max(x_box.0.clone()), hi.floor().min(x_box.1.clone()));
            tally.add(Filter::Triangle.name(), to_u64(&(span(&x_box.0, &x_box.1) - span(&lo, &hi))));
            (lo, hi)
        } else {
            x_box.clone()
        };
        let forms = integrality_forms(&sol, &genus, &p, &yr);
        let prog = if config.enabled(Filter::Integrality) {
            forms
                .iter()
                .try_fold(Progression::all(), |acc, (a, b)| Progression::integral(a, b).and_then(|q| acc.meet(&q)))
        } else {
            Some(Progression::all())
        };
        let kept = prog.as_ref().map_or(BigInt::zero(), |q| q.count(&lo, &hi));
        tally.add(Filter::Integrality.name(), to_u64(&(span(&lo, &hi) - &kept)));
        if let Some(prog) = prog {
            for x in prog.members(&lo, &hi) {
                let xr = Rational::from(x.clone());
                let val = |i: usize| (&forms[i].0 * &xr) + &forms[i].1;
                let v = SolutionVector::from_slice(&(0..5).map(val).collect::<Vec<_>>());
                let g1 = val(5);
                let (chi_y, chi_s) = (val(6), val(7));
                let fail = first_failure(config, d, &sb, &xr, &v, &g1, &chi_y, &chi_s);
                match fail {
                    Some(key) => tally.add(key, 1),
                    None => witnesses.push(Witness {
                        x: i64::try_from(&x).expect("x fits i64"),
                        y: i64::try_from(&y).expect("y fits i64"),
                        v,
                        chi_y,
                        chi_s,
                        g: &g1 + Rational::one(),
                    }),
                }
            }
        }
        y += 1;
    }
    let hist = DegreeHistogram { d, points: to_u64(&points), rejected: tally.counts, survivors: witnesses.len() as u64 };
    Ok((DegreeSurvivors { d, witnesses }, hist))
}

#[allow(clippy::too_many_arguments)]
fn first_failure(
    config: &FilterConfig,
    d: i64,
    sb: &crate::conic_bundle::Superbound,
    x: &Rational,
    v: &SolutionVector,
    g1: &Rational,
    chi_y: &Rational,
    chi_s: &Rational,
) -> Option<&'static str> {
    if config.enabled(Filter::Superbound) && (*g1 < sb.lo || g1 > sb.max_on_triangle()) {
        return Some(Filter::Superbound.name());
    }
    if let Some(gb) = &config.gross_bound {
        if !gb.allows(d, g1) {
            return Some(GROSS_BOUND_KEY);
        }
    }
    if config.enabled(Filter::S3Chi) {
        let ok = match (g1.to_i64(), chi_s.to_i64(), chi_y.to_i64()) {
            (Some(g1), Some(cs), Some(cy)) => {
                let inv = Threefold5Invariants { d, g: g1 + 1, chi_os: cs, chi_ox: cy };
                check_s3_nonneg(&inv).holds && check_ghit(&inv).holds
            }
            _ => false,
        };
        if !ok {
            return Some(Filter::S3Chi.name());
        }
    }
    if config.enabled(Filter::HodgeY) && !hodge_y_checks(v, x).holds {
        return Some(Filter::HodgeY.name());
    }
    if config.enabled(Filter::K3Tail) && d > 98 && *g1 > int(d * d) / 12 {
        return Some(Filter::K3Tail.name());
    }
    None
}

/// Runs the sweep on a single thread.
pub fn enumerate(config: &FilterConfig) -> Result<SurvivorReport> {
    enumerate_with_jobs(config, 1)
}

/// Runs the sweep with the degrees dealt round-robin to `jobs` workers. The
/// report does not depend on `jobs`.
pub fn enumerate_with_jobs(config: &FilterConfig, jobs: usize) -> Result<SurvivorReport> {
    config.validate()?;
    let degrees = config.degrees();
    let jobs = jobs.clamp(1, degrees.len());
    let parts: Vec<Vec<i64>> = (0..jobs).map(|j| degrees.iter().copied().skip(j).step_by(jobs).collect()).collect();
    let results: Vec<Result<Vec<(DegreeSurvivors, DegreeHistogram)>>> = std::thread::scope(|s| {
        let handles: Vec<_> = parts
            .iter()
            .map(|part| s.spawn(move || part.iter().map(|&d| enumerate_degree(config, d)).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut all = Vec::with_capacity(degrees.len());
    for r in results {
        all.extend(r?);
    }
    all.sort_by_key(|(s, _)| s.d);
    let (survivors, rejection_histogram): (Vec<_>, Vec<_>) = all.into_iter().unzip();
    Ok(SurvivorReport {
        config: config.clone(),
        survivors: survivors.into_iter().filter(|s| !s.witnesses.is_empty()).collect(),
        rejection_histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic_bundle::{genus_of_point, solve_point, ConicBundlePoint};
    use crate::rational::frac;
    use proptest::prelude::*;

    #[test]
    fn noether_examples() {
        assert_eq!(chi_oy(&int(9), &int(3)), int(1));
        assert_eq!(chi_oy(&int(0), &int(24)), int(2));
        assert_eq!(chi_os_from_cover(&int(79), &int(30), &int(-108)), int(227));
    }

    #[test]
    fn hodge_boundary() {
        let mut v = SolutionVector::from_slice(&[int(6), int(4), int(0), int(0), int(0)]);
        assert!(hodge_y_checks(&v, &int(9)).holds);
        v.b1r = int(5);
        assert!(!hodge_y_checks(&v, &int(9)).holds);
    }

    #[test]
    fn small_bundles() {
        let s = known_small_conic_bundles();
        assert!(s.contains(&6) && !s.contains(&44));
        assert!(s.iter().all(|d| d % 2 == 0));
    }

    #[test]
    fn filter_names_round_trip() {
        for f in Filter::ALL {
            assert_eq!(f.name().parse::<Filter>().unwrap(), f);
            assert_eq!(serde_json::to_string(&f).unwrap(), format!("\"{}\"", f.name()));
        }
        assert!("nope".parse::<Filter>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(FilterConfig::default().validate().is_ok());
        assert!(FilterConfig::default().with_range(18, 40).validate().is_err());
        assert!(FilterConfig::default().with_range(21, 40).validate().is_err());
        assert!(FilterConfig::default().with_range(40, 20).validate().is_err());
    }

    #[test]
    fn progression_examples() {
        // x/6 + 1/3 integral iff x ≡ 4 mod 6
        let p = Progression::integral(&frac(1, 6), &frac(1, 3)).unwrap();
        assert_eq!((p.r.clone(), p.m.clone()), (BigInt::from(4), BigInt::from(6)));
        assert!(Progression::integral(&frac(1, 2), &frac(1, 4)).is_none());
        assert_eq!(Progression::integral(&int(3), &int(1)).unwrap(), Progression::all());
        let q = Progression::integral(&frac(1, 4), &int(0)).unwrap();
        let both = p.meet(&q).unwrap();
        assert_eq!((both.r.clone(), both.m.clone()), (BigInt::from(4), BigInt::from(12)));
        let odd = Progression { r: BigInt::from(1), m: BigInt::from(2) };
        assert!(p.meet(&odd).is_none());
        assert_eq!(both.count(&BigInt::from(0), &BigInt::from(40)), BigInt::from(4));
    }

    proptest! {
        #[test]
        fn progression_matches_brute_force(an in -40i64..40, ad in 1i64..30, bn in -40i64..40, bd in 1i64..30) {
            let (a, b) = (frac(an, ad), frac(bn, bd));
            let p = Progression::integral(&a, &b);
            for x in -100i64..100 {
                let integral = (&a * int(x) + &b).is_integer();
                let member = p.as_ref().is_some_and(|p| p.contains(&BigInt::from(x)));
                prop_assert_eq!(integral, member);
            }
        }

        #[test]
        fn meet_matches_brute_force(r1 in 0i64..30, m1 in 1i64..30, r2 in 0i64..30, m2 in 1i64..30) {
            let p = Progression { r: BigInt::from(r1 % m1), m: BigInt::from(m1) };
            let q = Progression { r: BigInt::from(r2 % m2), m: BigInt::from(m2) };
            let both = p.meet(&q);
            for x in -200i64..200 {
                let x = BigInt::from(x);
                prop_assert_eq!(p.contains(&x) && q.contains(&x), both.as_ref().is_some_and(|b| b.contains(&x)));
            }
        }
    }

    /// Brute force over the triangle at one degree, without the
    /// congruence shortcut: every lattice point is solved.
    fn brute_force(d: i64) -> (Vec<(i64, i64)>, BTreeMap<String, u64>) {
        let config = FilterConfig::default().with_range(d, d);
        let tri = triangle(d).unwrap();
        let sb = superbound(d).unwrap();
        let x0 = i64::try_from(tri.v1.0.ceil()).unwrap();
        let x1 = i64::try_from(tri.v2.0.floor()).unwrap();
        let y1 = i64::try_from(tri.v3.1.floor()).unwrap();
        let mut kept = Vec::new();
        let mut counts = BTreeMap::new();
        for y in 0..=y1 {
            for x in x0..=x1 {
                let (xr, yr) = (int(x), int(y));
                let key = if !tri.contains(&xr, &yr) {
                    Some("triangle")
                } else {
                    let v = solve_point(&ConicBundlePoint::new(d, x, y).unwrap()).unwrap().v;
                    let g1 = genus_of_point(d, &xr, &yr).unwrap().value;
                    let cy = chi_oy(&xr, &v.b2);
                    let cs = chi_os_from_cover(&cy, &v.r2, &v.b1r);
                    let all_int = v.to_vec().iter().chain([&g1, &cy, &cs]).all(|q| q.is_integer());
                    if !all_int {
                        Some("integrality")
                    } else {
                        first_failure(&config, d, &sb, &xr, &v, &g1, &cy, &cs)
                    }
                };
                match key {
                    Some(k) => *counts.entry(k.to_string()).or_default() += 1,
                    None => kept.push((x, y)),
                }
            }
        }
        (kept, counts)
    }

    #[test]
    fn sweep_matches_brute_force_at_small_degrees() {
        for d in [20, 22, 24] {
            let (surv, hist) = enumerate_degree(&FilterConfig::default().with_range(d, d), d).unwrap();
            let (kept, counts) = brute_force(d);
            let got: Vec<(i64, i64)> = surv.witnesses.iter().map(|w| (w.x, w.y)).collect();
            assert_eq!(got, kept, "d = {d}");
            assert_eq!(hist.rejected, counts, "d = {d}");
            assert_eq!(hist.points, counts.values().sum::<u64>() + kept.len() as u64);
        }
    }

    #[test]
    fn witnesses_at_forty_four() {
        let (surv, hist) = enumerate_degree(&FilterConfig::default().with_range(44, 44), 44).unwrap();
        assert_eq!(surv.witnesses.len(), 1);
        let w = &surv.witnesses[0];
        assert_eq!((w.x, w.y), (330, 54));
        assert_eq!((w.chi_y.clone(), w.chi_s.clone(), w.g.clone()), (int(79), int(227), int(158)));
        assert_eq!(hist.eliminated_by(), None);
    }

    #[test]
    fn budget_overflow_is_reported() {
        let mut config = FilterConfig::default().with_range(44, 44);
        config.budget = 10;
        assert!(matches!(enumerate(&config), Err(Error::RegionOverflow { d: 44, .. })));
    }

    #[test]
    fn x_positive_on_triangles() {
        for d in (20..=276).step_by(2) {
            assert!(triangle(d).unwrap().v1.0.is_positive(), "d = {d}");
        }
    }

    #[test]
    fn single_degree_probe() {
        let r = enumerate(&FilterConfig::default().with_range(98, 98)).unwrap();
        assert!(r.survivors.is_empty());
        let h = r.histogram(98).unwrap();
        assert_eq!(h.survivors, 0);
        assert!(h.eliminated_by().is_some());
        assert_eq!(h.points, h.rejected.values().sum::<u64>());
    }

    #[test]
    fn partition_and_determinism_on_a_window() {
        let config = FilterConfig::default().with_range(40, 80);
        let one = enumerate(&config).unwrap();
        assert_eq!(one.surviving_degrees(), [44, 66].into_iter().collect());
        for jobs in [2, 3, 7, 100] {
            assert_eq!(enumerate_with_jobs(&config, jobs).unwrap(), one, "jobs = {jobs}");
        }
        assert_eq!(enumerate(&config).unwrap().to_json(), one.to_json());
    }

    #[test]
    fn extra_filters_never_add_survivors() {
        let base = FilterConfig::default().with_range(40, 48);
        let full = enumerate(&base).unwrap();
        for f in Filter::ALL {
            let loose = enumerate(&base.clone().without(f)).unwrap();
            assert!(full.surviving_degrees().is_subset(&loose.surviving_degrees()), "{f}");
            let n = |r: &SurvivorReport| r.survivors.iter().map(|s| s.witnesses.len()).sum::<usize>();
            assert!(n(&full) <= n(&loose), "{f}");
        }
    }

    #[test]
    fn json_has_no_floats() {
        let r = enumerate(&FilterConfig::default().with_range(44, 44)).unwrap();
        let json = r.to_json();
        assert!(json.contains("\"chiY\": \"79\""));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        fn no_float(v: &serde_json::Value) -> bool {
            match v {
                serde_json::Value::Number(n) => !n.is_f64(),
                serde_json::Value::Array(a) => a.iter().all(no_float),
                serde_json::Value::Object(o) => o.values().all(no_float),
                _ => true,
            }
        }
        assert!(no_float(&value));
        let back: SurvivorReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn gross_bound_json() {
        let gb = GrossBound::from_json(r#"{"name": "quadratic", "g_minus_1_max": ["0", "0", "1/12"]}"#).unwrap();
        assert!(!gb.certified);
        assert!(gb.allows(44, &int(161)));
        assert!(!gb.allows(44, &int(162)));
        assert!(GrossBound::from_json(r#"{"name": "x", "g_minus_1_max": []}"#).is_err());
        assert!(GrossBound::from_json(r#"{"name": "x", "g_minus_1_max": [0.5]}"#).is_err());
    }
}
