//! Double point formulas restricted to test surfaces and threefolds.
//!
//! A test surface `S` inside the codimension-two subvariety `X ⊂ Q^n` comes
//! with its own Chern data, the Chern data of its normal bundle in `X` and
//! the restriction of the hyperplane class `L`. Restricting the degree-two
//! double point class `n₂ = (d/2)L²` to `S` gives one linear equation in
//! `d` whose coefficients may depend on an integer parameter `t` (a
//! multiple of the hyperplane class, a Del Pezzo degree, ...).
//!
//! Conventions: `x₁ = c₁(T_X) = -K_X`. On `S`, `x₁|S = c₁(T_S) + c₁(N)` and
//! `x₂|S = c₂(T_S) + c₁(T_S)c₁(N) + c₂(N)`.

use std::fmt::{self, Write as _};

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Rational, RationalPoly};

/// `(n² - n + 2)/2`.
pub fn dpf2_leading(n: u32) -> Rational {
    let n = i64::from(n);
    int(n * n - n + 2) / 2
}

/// A divisor class on a [`SurfaceModel`], as coordinates in its basis. The
/// coordinates may depend on the parameter `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Class(pub Vec<RationalPoly>);

impl Class {
    pub fn from_i64(coords: &[i64]) -> Self {
        Class(coords.iter().map(|&c| RationalPoly::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Class(vec![RationalPoly::zero(); rank])
    }

    pub fn scaled(&self, k: &RationalPoly) -> Self {
        Class(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Class) -> Self {
        Class(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Class) -> Self {
        Class(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Class(self.0.iter().map(|c| -c).collect())
    }
}

/// Numerical data of a smooth projective surface: a basis of (part of) its
/// Néron-Severi group with Gram matrix, the canonical class and the
/// topological Euler number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub name: String,
    pub basis: Vec<String>,
    pub gram: Vec<Vec<RationalPoly>>,
    pub canonical: Class,
    pub euler: RationalPoly,
}

impl SurfaceModel {
    /// P² with hyperplane class `h`.
    pub fn p2() -> Self {
        SurfaceModel {
            name: "P2".into(),
            basis: vec!["h".into()],
            gram: vec![vec![1.into()]],
            canonical: Class::from_i64(&[-3]),
            euler: 3.into(),
        }
    }

    /// The Hirzebruch surface F_e with negative section `E` and fibre `f`.
    pub fn hirzebruch(e: i64) -> Self {
        SurfaceModel {
            name: format!("F{e}"),
            basis: vec!["E".into(), "f".into()],
            gram: vec![vec![(-e).into(), 1.into()], vec![1.into(), 0.into()]],
            canonical: Class::from_i64(&[-2, -(e + 2)]),
            euler: 4.into(),
        }
    }

    /// A Del Pezzo surface of degree `t`, seen only through its
    /// anticanonical class `ℓ = -K` with `ℓ² = t` and `e = 12 - t`.
    pub fn del_pezzo() -> Self {
        SurfaceModel {
            name: "DelPezzo(t)".into(),
            basis: vec!["-K".into()],
            gram: vec![vec![RationalPoly::var()]],
            canonical: Class::from_i64(&[-1]),
            euler: RationalPoly::from_i64(&[12, -1]),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn intersect(&self, a: &Class, b: &Class) -> RationalPoly {
        let mut acc = RationalPoly::zero();
        for (i, ai) in a.0.iter().enumerate() {
            for (j, bj) in b.0.iter().enumerate() {
                acc = acc + &(ai * bj) * &self.gram[i][j];
            }
        }
        acc
    }

    /// `c₁(T_S) = -K_S`.
    pub fn c1(&self) -> Class {
        self.canonical.neg()
    }
}

/// The normal bundle of the test surface inside `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormalData {
    /// Trivial bundle of the given rank (fibre of a morphism).
    Trivial(usize),
    /// A line bundle.
    Line(Class),
    /// Direct sum of two line bundles.
    Split(Class, Class),
    /// A rank-two bundle given by its Chern classes.
    Bundle { c1: Class, c2: RationalPoly },
}

impl NormalData {
    pub fn rank(&self) -> usize {
        match self {
            NormalData::Trivial(r) => *r,
            NormalData::Line(_) => 1,
            NormalData::Split(..) | NormalData::Bundle { .. } => 2,
        }
    }

    fn c1(&self, s: &SurfaceModel) -> Class {
        match self {
            NormalData::Trivial(_) => Class::zero(s.rank()),
            NormalData::Line(a) => a.clone(),
            NormalData::Split(a, b) => a.add(b),
            NormalData::Bundle { c1, .. } => c1.clone(),
        }
    }

    fn c2(&self, s: &SurfaceModel) -> RationalPoly {
        match self {
            NormalData::Trivial(_) | NormalData::Line(_) => RationalPoly::zero(),
            NormalData::Split(a, b) => s.intersect(a, b),
            NormalData::Bundle { c2, .. } => c2.clone(),
        }
    }
}

/// How the restricted hyperplane class is specified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestSurface {
    pub n: u32,
    pub surface: SurfaceModel,
    pub normal: NormalData,
    /// `L|S`, if given explicitly.
    pub hyperplane: Option<Class>,
    /// `c` with `(K_X + cL)|S` trivial. Then `L|S = (c₁(N) - K_S)/c`.
    pub adjoint: Option<i64>,
}

impl TestSurface {
    /// Resolves the class data into intersection numbers. Fails when the
    /// normal rank does not match `n`, when the adjoint condition disagrees
    /// with an explicit `L|S`, or when `L|S` cannot be determined.
    pub fn restrict(&self) -> Result<SurfaceRestrictionData> {
        let s = &self.surface;
        if !(5..=6).contains(&self.n) {
            return Err(Error::InconsistentData(format!("ambient Q^{} is not supported", self.n)));
        }
        let expected_rank = self.n as usize - 4;
        if self.normal.rank() != expected_rank {
            return Err(Error::InconsistentData(format!(
                "normal bundle of a surface in a codimension-two subvariety of Q^{} has rank {}, not {}",
                self.n,
                expected_rank,
                self.normal.rank()
            )));
        }
        let c1n = self.normal.c1(s);
        let derived = self.adjoint.map(|c| {
            let inv = Rational::one() / int(c);
            c1n.sub(&s.canonical).scaled(&RationalPoly::constant(inv))
        });
        let l = match (&self.hyperplane, derived) {
            (Some(l), Some(dl)) => {
                if *l != dl {
                    return Err(Error::InconsistentData(format!(
                        "adjunction gives L|S = {dl:?}, preset says {l:?}"
                    )));
                }
                l.clone()
            }
            (Some(l), None) => l.clone(),
            (None, Some(dl)) => dl,
            (None, None) => {
                return Err(Error::InconsistentData("no hyperplane class and no adjoint condition".into()))
            }
        };
        let c1t = s.c1();
        Ok(SurfaceRestrictionData {
            n: self.n,
            normal_rank: self.normal.rank(),
            l2: s.intersect(&l, &l),
            c1t_l: s.intersect(&c1t, &l),
            c1t_sq: s.intersect(&c1t, &c1t),
            c2t: s.euler.clone(),
            c1n_l: s.intersect(&c1n, &l),
            c1n_sq: s.intersect(&c1n, &c1n),
            c1n_c1t: s.intersect(&c1n, &c1t),
            c2n: self.normal.c2(s),
        })
    }
}

/// Resolved intersection numbers on a test surface, each a polynomial in the
/// parameter `t` (constant when there is none).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceRestrictionData {
    pub n: u32,
    pub normal_rank: usize,
    pub l2: RationalPoly,
    pub c1t_l: RationalPoly,
    pub c1t_sq: RationalPoly,
    pub c2t: RationalPoly,
    pub c1n_l: RationalPoly,
    pub c1n_sq: RationalPoly,
    pub c1n_c1t: RationalPoly,
    pub c2n: RationalPoly,
}

/// `constant(t) = d · d_coeff(t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpfEquation {
    pub n: u32,
    pub constant: RationalPoly,
    pub d_coeff: RationalPoly,
}

impl DpfEquation {
    /// `constant(t) - d·d_coeff(t)`.
    pub fn residual(&self, d: &Rational, t: &Rational) -> Rational {
        self.constant.eval(t) - d * self.d_coeff.eval(t)
    }

    pub fn is_parametric(&self) -> bool {
        self.constant.degree().unwrap_or(0) > 0 || self.d_coeff.degree().unwrap_or(0) > 0
    }
}

impl fmt::Display for DpfEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = d*({})",
            self.constant.display_in("t"),
            self.d_coeff.display_in("t")
        )
    }
}

/// Restriction of `n₂ = C(n)L² - n x₁L + x₁² - x₂` with `n₂|S = (d/2)L²`.
pub fn dpf2_equation(data: &SurfaceRestrictionData) -> Result<DpfEquation> {
    if data.normal_rank == 1 && !data.c2n.is_zero() {
        return Err(Error::InconsistentData(
            "rank-one normal bundle with nonzero second Chern class".into(),
        ));
    }
    let n = RationalPoly::constant(int(i64::from(data.n)));
    let two = RationalPoly::from(2);
    let x1_l = &data.c1t_l + &data.c1n_l;
    let x1_sq = &data.c1t_sq + &(&two * &data.c1n_c1t) + data.c1n_sq.clone();
    let x2 = &data.c2t + &data.c1n_c1t + data.c2n.clone();
    let constant = data.l2.scale(&dpf2_leading(data.n)) - &n * &x1_l + x1_sq - x2;
    Ok(DpfEquation {
        n: data.n,
        constant,
        d_coeff: data.l2.scale(&Rational::new(1, 2)),
    })
}

/// Admissible region for `(d, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeConstraints {
    pub d_min: i64,
    pub d_max: Option<i64>,
    /// `None` when the equation carries no parameter.
    pub param: Option<ParamRange>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRange {
    pub min: i64,
    pub max: Option<i64>,
}

impl Default for DegreeConstraints {
    fn default() -> Self {
        DegreeConstraints {
            d_min: 2,
            d_max: None,
            param: None,
        }
    }
}

impl DegreeConstraints {
    pub fn with_param(min: i64, max: Option<i64>) -> Self {
        DegreeConstraints {
            param: Some(ParamRange { min, max }),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DegreeSolution {
    pub d: i64,
    pub t: Option<i64>,
}

impl fmt::Display for DegreeSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t {
            Some(t) => write!(f, "(d={}, t={})", self.d, t),
            None => write!(f, "d={}", self.d),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSolutions {
    pub solutions: Vec<DegreeSolution>,
    /// Largest admissible even `d`, when the sign argument bounds it.
    pub d_cap: Option<i64>,
    /// Last parameter value that was scanned.
    pub param_bound: Option<i64>,
    pub trail: Vec<String>,
}

fn admissible(d: &Rational, c: &DegreeConstraints) -> Option<i64> {
    let d = d.to_i64()?;
    let ok = d % 2 == 0 && d >= c.d_min && c.d_max.is_none_or(|m| d <= m);
    ok.then_some(d)
}

fn abs_sum(p: &RationalPoly, upto: usize) -> Rational {
    p.coeffs().iter().take(upto).map(Rational::abs).sum()
}

/// Distance from `l` to the nearest even integer other than `l` itself.
fn even_gap(l: &Rational) -> Rational {
    let f = l.floor();
    let below = Rational::from(if f.is_even() { f } else { f - 1 });
    let below = if &below == l { below - 2 } else { below };
    let above = &below + 2;
    let above = if &above == l { above + 2 } else { above };
    (l - below).min(above - l)
}

/// Every admissible `(d, t)` with `constant(t) = d·d_coeff(t)`.
///
/// Without an explicit upper bound on `t`, one is derived: if `d(t)` tends
/// to a finite limit `ℓ`, then past an explicit `T` the value `d(t)` stays
/// strictly within the gap around `ℓ` that contains no other even integer,
/// and never equals `ℓ`. The sign of `d(t) - ℓ` on the parameter range
/// gives the one-sided cap on `d`.
pub fn solve_degree(eq: &DpfEquation, c: &DegreeConstraints) -> Result<DegreeSolutions> {
    let mut trail = vec![format!("equation: {eq}")];
    let a = &eq.constant;
    let b = &eq.d_coeff;

    let Some(range) = c.param else {
        if eq.is_parametric() {
            return Err(Error::InconsistentData(
                "equation depends on a parameter but no range was given".into(),
            ));
        }
        if b.is_zero() {
            if a.is_zero() {
                return Err(Error::UnboundedFamily("equation is 0 = 0".into()));
            }
            trail.push("no d satisfies a nonzero constant = 0".into());
            return Ok(DegreeSolutions { solutions: vec![], d_cap: None, param_bound: None, trail });
        }
        let d = a.coeff(0) / b.coeff(0);
        trail.push(format!("d = {d}"));
        let solutions = admissible(&d, c)
            .map(|d| vec![DegreeSolution { d, t: None }])
            .unwrap_or_default();
        return Ok(DegreeSolutions { solutions, d_cap: None, param_bound: None, trail });
    };

    if b.is_zero() {
        if a.is_zero() {
            return Err(Error::UnboundedFamily("equation is 0 = 0".into()));
        }
        let in_range = |t: &num_bigint::BigInt| {
            t.to_i64()
                .is_some_and(|t| t >= range.min && range.max.is_none_or(|m| t <= m))
        };
        if a.integer_roots().unwrap_or_default().iter().any(in_range) {
            return Err(Error::UnboundedFamily(
                "coefficient of d vanishes where the constant term does".into(),
            ));
        }
        trail.push("coefficient of d vanishes identically; no solutions".into());
        return Ok(DegreeSolutions { solutions: vec![], d_cap: None, param_bound: None, trail });
    }

    let mut d_cap = None;
    let upper = match range.max {
        Some(m) => {
            trail.push(format!("parameter range [{}, {m}]", range.min));
            m
        }
        None => {
            let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
            if da > db {
                return Err(Error::UnboundedFamily(format!(
                    "d grows without bound in t ({eq})"
                )));
            }
            let limit = if da == db { a.leading() / b.leading() } else { Rational::zero() };
            let rem = a - &b.scale(&limit);
            if rem.is_zero() {
                if admissible(&limit, c).is_some() {
                    return Err(Error::UnboundedFamily(format!(
                        "d = {limit} for every parameter value"
                    )));
                }
                trail.push(format!("d = {limit} identically, not admissible"));
                return Ok(DegreeSolutions { solutions: vec![], d_cap: None, param_bound: None, trail });
            }
            trail.push(format!("d(t) -> {limit} as t grows; d - {limit} = ({}) / ({})", rem.display_in("t"), b.display_in("t")));
            let gap = even_gap(&limit);
            let lead = b.leading().abs();
            let tail = (abs_sum(&rem, usize::MAX) / &gap + abs_sum(b, db)) / &lead;
            let mut t_max = Rational::from(tail.floor()) + 1;
            for bound in [b.cauchy_bound(), rem.cauchy_bound()].into_iter().flatten() {
                t_max = t_max.max(Rational::from(bound.ceil()));
            }
            let t_max = t_max.max(int(range.min)).max(int(1)).to_i64().ok_or_else(|| {
                Error::UnboundedFamily("parameter bound does not fit in 64 bits".into())
            })?;
            trail.push(format!(
                "for t > {t_max}, |d - {limit}| < {gap}, so no admissible d beyond t = {t_max}"
            ));

            // Sign of (d - limit) over the whole parameter range.
            let sign_at = |t: i64| {
                let tt = int(t);
                rem.eval(&tt).signum() * b.eval(&tt).signum()
            };
            let tail_sign = rem.leading().signum() * b.leading().signum();
            let signs: Vec<i32> = (range.min..=t_max).map(sign_at).collect();
            if signs.iter().all(|&s| s < 0) && tail_sign < 0 {
                let cap = {
                    let f: num_bigint::BigInt = limit.ceil() - 1;
                    let f = f.to_i64().unwrap_or(i64::MAX);
                    if f % 2 == 0 { f } else { f - 1 }
                };
                trail.push(format!("d < {limit} for every t >= {}, so d <= {cap}", range.min));
                d_cap = Some(cap);
            } else if signs.iter().all(|&s| s > 0) && tail_sign > 0 {
                trail.push(format!("d > {limit} for every t >= {}", range.min));
            }
            t_max
        }
    };

    let mut solutions = Vec::new();
    for t in range.min..=upper {
        let tt = int(t);
        let bt = b.eval(&tt);
        let at = a.eval(&tt);
        if bt.is_zero() {
            if at.is_zero() {
                return Err(Error::UnboundedFamily(format!("every d solves the equation at t = {t}")));
            }
            continue;
        }
        let d = at / bt;
        if let Some(d) = admissible(&d, c) {
            solutions.push(DegreeSolution { d, t: Some(t) });
        }
    }
    let mut line = String::from("solutions:");
    for s in &solutions {
        let _ = write!(line, " {s}");
    }
    trail.push(line);
    Ok(DegreeSolutions { solutions, d_cap, param_bound: Some(upper), trail })
}

/// A named test-surface configuration with the degrees it is expected to
/// produce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberPreset {
    pub name: &'static str,
    pub description: &'static str,
    pub surface: TestSurface,
    pub constraints: DegreeConstraints,
    pub expected: Vec<DegreeSolution>,
}

impl FiberPreset {
    pub fn data(&self) -> Result<SurfaceRestrictionData> {
        self.surface.restrict()
    }

    pub fn equation(&self) -> Result<DpfEquation> {
        dpf2_equation(&self.data()?)
    }

    pub fn solve(&self) -> Result<DegreeSolutions> {
        solve_degree(&self.equation()?, &self.constraints)
    }
}

fn fixed(d: i64) -> Vec<DegreeSolution> {
    vec![DegreeSolution { d, t: None }]
}

fn with_t(pairs: &[(i64, i64)]) -> Vec<DegreeSolution> {
    pairs.iter().map(|&(d, t)| DegreeSolution { d, t: Some(t) }).collect()
}

fn multiple_of(coords: &[i64]) -> Class {
    Class(coords.iter().map(|&c| RationalPoly::from_i64(&[0, c])).collect())
}

fn surface(
    n: u32,
    surface: SurfaceModel,
    normal: NormalData,
    hyperplane: Option<Class>,
    adjoint: Option<i64>,
) -> TestSurface {
    TestSurface { n, surface, normal, hyperplane, adjoint }
}

/// The catalog of test-surface computations used across the classification.
pub fn preset_catalog() -> Vec<FiberPreset> {
    use NormalData::*;
    let p2 = SurfaceModel::p2;
    let f0 = || SurfaceModel::hirzebruch(0);
    let f2 = || SurfaceModel::hirzebruch(2);
    let h = |k: i64| Class::from_i64(&[k]);
    let fixed_c = DegreeConstraints::default;
    vec![
        FiberPreset {
            name: "blowup_plane_in_fourfold",
            description: "exceptional P2 of a point blow-up in a fourfold, N = O + O(-1), L|S = O(t)",
            surface: surface(6, p2(), Split(h(0), h(-1)), Some(multiple_of(&[1])), None),
            constraints: DegreeConstraints::with_param(1, None),
            expected: with_t(&[(16, 1), (22, 2)]),
        },
        FiberPreset {
            name: "delpezzo_surface_fiber",
            description: "Del Pezzo fibre of degree t over a curve, K_F = -L_F, 3 <= t <= 9",
            surface: surface(5, SurfaceModel::del_pezzo(), Trivial(1), Some(Class::from_i64(&[1])), None),
            constraints: DegreeConstraints::with_param(3, Some(9)),
            expected: with_t(&[(8, 3), (10, 4), (12, 6)]),
        },
        FiberPreset {
            name: "quadric_surface_fiber_n5",
            description: "quadric surface fibre over a curve, L_F = O(1,1)",
            surface: surface(5, f0(), Trivial(1), Some(Class::from_i64(&[1, 1])), None),
            constraints: fixed_c(),
            expected: fixed(6),
        },
        FiberPreset {
            name: "quadric_fiber_over_surface_n6",
            description: "quadric surface fibre of a fourfold over a surface, L_F = O(1,1)",
            surface: surface(6, f0(), Trivial(2), Some(Class::from_i64(&[1, 1])), None),
            constraints: fixed_c(),
            expected: fixed(12),
        },
        FiberPreset {
            name: "veronese_fiber_n5",
            description: "P2 fibre over a curve embedded by O(2)",
            surface: surface(5, p2(), Trivial(1), Some(h(2)), None),
            constraints: fixed_c(),
            expected: fixed(10),
        },
        FiberPreset {
            name: "numericaldpf_main",
            description: "divisor D = P2 in a threefold, O_D(D) = O(-1), (K_X + 2L)|D trivial",
            surface: surface(5, p2(), Line(h(-1)), Some(h(1)), Some(2)),
            constraints: fixed_c(),
            expected: fixed(10),
        },
        FiberPreset {
            name: "numericaldpf_main_n6",
            description: "plane in a divisor D = P3 of a fourfold, O_D(D) = O(-1), (K_X + 3L)|D trivial",
            surface: surface(6, p2(), Split(h(1), h(-1)), Some(h(1)), Some(3)),
            constraints: fixed_c(),
            expected: fixed(10),
        },
        FiberPreset {
            name: "numericaldpf_1",
            description: "divisor P2 with O_D(D) = O(-2), L|D = O(1)",
            surface: surface(5, p2(), Line(h(-2)), Some(h(1)), Some(1)),
            constraints: fixed_c(),
            expected: fixed(20),
        },
        FiberPreset {
            name: "numericaldpf_2",
            description: "divisor P2 with O_D(D) = O(-1), L|D = O(2)",
            surface: surface(5, p2(), Line(h(-1)), Some(h(2)), Some(1)),
            constraints: fixed_c(),
            expected: fixed(14),
        },
        FiberPreset {
            name: "numericaldpf_3",
            description: "quadric cone divisor, modelled on F2, O_D(D) = G = -E - 2f, 2G = K_D, L|D = -G",
            surface: surface(5, f2(), Line(Class::from_i64(&[-1, -2])), Some(Class::from_i64(&[1, 2])), Some(1)),
            constraints: fixed_c(),
            expected: fixed(14),
        },
        FiberPreset {
            name: "numericaldpf_4",
            description: "divisor P1 x P1 with O_D(D) = G = O(-1,-1), 2G = K_D, L|D = -G",
            surface: surface(5, f0(), Line(Class::from_i64(&[-1, -1])), Some(Class::from_i64(&[1, 1])), Some(1)),
            constraints: fixed_c(),
            expected: fixed(14),
        },
        FiberPreset {
            name: "scroll_plane_on_Q6",
            description: "plane of a scroll in a fourfold, N = cotangent(1), L|S = O(1)",
            surface: surface(
                6,
                p2(),
                Bundle { c1: h(-1), c2: 1.into() },
                Some(h(1)),
                None,
            ),
            constraints: fixed_c(),
            expected: fixed(14),
        },
        FiberPreset {
            name: "mori_1",
            description: "contracted divisor P2 with O_D(D) = O(-1), L|D = O(t)",
            surface: surface(5, p2(), Line(h(-1)), Some(multiple_of(&[1])), None),
            constraints: DegreeConstraints::with_param(1, None),
            expected: with_t(&[(10, 1), (14, 2)]),
        },
        FiberPreset {
            name: "mori_2",
            description: "contracted divisor P2 with O_D(D) = O(-2), L|D = O(t)",
            surface: surface(5, p2(), Line(h(-2)), Some(multiple_of(&[1])), None),
            constraints: DegreeConstraints::with_param(1, None),
            expected: with_t(&[(8, 1), (16, 2)]),
        },
        FiberPreset {
            name: "mori_4",
            description: "contracted quadric cone divisor, modelled on F2, O_D(D) = G, L|D = -G",
            surface: surface(5, f2(), Line(Class::from_i64(&[-1, -2])), Some(Class::from_i64(&[1, 2])), Some(1)),
            constraints: fixed_c(),
            expected: fixed(14),
        },
    ]
}

pub fn preset(name: &str) -> Option<FiberPreset> {
    preset_catalog().into_iter().find(|p| p.name == name)
}

/// Tab-separated export of the catalog: name, n, the resolved intersection
/// numbers as polynomials in `t`, and the expected solutions.
pub fn preset_catalog_tsv() -> Result<String> {
    let mut out = String::from(
        "name\tn\tL2\tc1T.L\tc1T^2\tc2T\tc1N.L\tc1N^2\tc1N.c1T\tc2N\tequation\texpected\n",
    );
    for p in preset_catalog() {
        let s = p.data()?;
        let eq = dpf2_equation(&s)?;
        let expected: Vec<String> = p.expected.iter().map(ToString::to_string).collect();
        let cells = [&s.l2, &s.c1t_l, &s.c1t_sq, &s.c2t, &s.c1n_l, &s.c1n_sq, &s.c1n_c1t, &s.c2n]
            .map(|x| x.display_in("t"));
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            p.name,
            p.surface.n,
            cells.join("\t"),
            eq,
            expected.join(" ")
        );
    }
    Ok(out)
}

/// Chern numbers of a threefold fibre `F` of `X ⊂ Q^6` over a curve, with
/// `x₁|F = c₁(F)` (trivial normal bundle).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreefoldFiberChernData {
    pub name: String,
    pub l3: Rational,
    pub c1_l2: Rational,
    pub c1sq_l: Rational,
    pub c1cube: Rational,
    pub c1c2: Rational,
    pub x3_expected: Rational,
}

impl ThreefoldFiberChernData {
    /// Del Pezzo threefold of degree 6 with `K_F = -2L_F`; `χ(O_F) = 1`.
    pub fn del_pezzo_degree6(name: &str, x3_expected: i64) -> Self {
        ThreefoldFiberChernData {
            name: name.to_string(),
            l3: int(6),
            c1_l2: int(12),
            c1sq_l: int(24),
            c1cube: int(48),
            c1c2: int(24),
            x3_expected: int(x3_expected),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3Outcome {
    pub c2_l: Rational,
    pub x3_forced: Rational,
    pub x3_expected: Rational,
    pub contradiction: bool,
}

/// `x₂·L` on `F` forced by the degree-two formula dotted with `L|F`:
/// `(d/2)L³ = C(n)L³ - n x₁L² + x₁²L - x₂L`.
pub fn dpf2_on_threefold_c2l(n: u32, data: &ThreefoldFiberChernData, d: i64) -> Rational {
    dpf2_leading(n) * &data.l3 - int(i64::from(n)) * &data.c1_l2 + &data.c1sq_l
        - int(d) * &data.l3 / 2
}

/// Euler number of the fibre forced by the degree-three double point formula
/// `(n³-3n²+8n-12)/6·L³ - (n²-n+2)/2·x₁L² + n(x₁² - x₂)L + 2x₁x₂ - x₁³ - x₃ = 0`
/// on `X ⊂ Q^6`, using the `x₂·L` forced by the degree-two formula.
pub fn dpf3_x3_forced(data: &ThreefoldFiberChernData, d: i64) -> Rational {
    dpf3_test(6, data, d).x3_forced
}

/// As [`dpf3_x3_forced`] for `Q^n`. With `n = 5` the "fibre" is `X` itself.
pub fn dpf3_test(n: u32, data: &ThreefoldFiberChernData, d: i64) -> X3Outcome {
    let nn = i64::from(n);
    let c2_l = dpf2_on_threefold_c2l(n, data, d);
    let cubic = int(nn * nn * nn - 3 * nn * nn + 8 * nn - 12) / 6;
    let quad = int(-nn * nn + nn - 2) / 2;
    let x3 = cubic * &data.l3 + quad * &data.c1_l2 + int(nn) * (&data.c1sq_l - &c2_l)
        + &data.c1c2 * 2
        - &data.c1cube;
    X3Outcome {
        contradiction: x3 != data.x3_expected,
        c2_l,
        x3_forced: x3,
        x3_expected: data.x3_expected.clone(),
    }
}

/// `d ≡ 0 (mod 4)`, required when the surface section is a double cover
/// branched along a Veronese-type curve.
pub fn veronese_mod4_check(d: i64) -> bool {
    d % 4 == 0
}
