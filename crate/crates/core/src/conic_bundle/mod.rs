//! Threefold conic bundles over a surface on Q^5: the 5×5 linear system in
//! `v = (b₁R, R², Db₁, D², b₂)`, the feasibility triangle in the `(x, y)`
//! plane with `x = b₁²` and `y = DR`, the genus line and the degree cascade.

pub mod printed;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genus::{contained_bound, notcontained_bound};
use crate::rational::{frac, int, Rational, RationalMatrix, RationalPoly};

/// `x·X(d) + y·Y(d) + C(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForm {
    pub x: RationalPoly,
    pub y: RationalPoly,
    pub c: RationalPoly,
}

/// A [`LinearForm`] with `d` substituted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub x: Rational,
    pub y: Rational,
    pub c: Rational,
}

impl Affine {
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        &self.x * x + &self.y * y + &self.c
    }
}

impl LinearForm {
    pub fn new(x: RationalPoly, y: RationalPoly, c: RationalPoly) -> Self {
        LinearForm { x, y, c }
    }

    pub fn zero() -> Self {
        Self::new(RationalPoly::zero(), RationalPoly::zero(), RationalPoly::zero())
    }

    pub fn at(&self, d: i64) -> Affine {
        Affine { x: self.x.eval_i64(d), y: self.y.eval_i64(d), c: self.c.eval_i64(d) }
    }

    pub fn eval(&self, d: i64, x: &Rational, y: &Rational) -> Rational {
        self.at(d).eval(x, y)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.x.scale(k), self.y.scale(k), self.c.scale(k))
    }

    pub fn plus(&self, o: &LinearForm) -> Self {
        Self::new(&self.x + &o.x, &self.y + &o.y, &self.c + &o.c)
    }

    pub fn plus_y(&self, p: &RationalPoly) -> Self {
        Self::new(self.x.clone(), &self.y + p, self.c.clone())
    }

    pub fn plus_c(&self, p: &RationalPoly) -> Self {
        Self::new(self.x.clone(), self.y.clone(), &self.c + p)
    }

    fn parts(&self) -> [(&'static str, &RationalPoly); 3] {
        [("x", &self.x), ("y", &self.y), ("const", &self.c)]
    }
}

fn rp(coeffs: &[Rational]) -> RationalPoly {
    RationalPoly::new(coeffs.to_vec())
}

fn ip(coeffs: &[i64]) -> RationalPoly {
    RationalPoly::from_i64(coeffs)
}

/// The coefficient matrix as polynomials in `d`. Rows come from cutting the
/// degree-two relation with `R`, `-b₁`, `D`, `L`, then the degree-three one.
pub fn matrix_polys() -> Vec<Vec<RationalPoly>> {
    let z = RationalPoly::zero;
    vec![
        vec![ip(&[-8]), ip(&[34, -2]), z(), z(), z()],
        vec![ip(&[-34, 2]), z(), rp(&[int(8), frac(-1, 2)]), z(), z()],
        vec![z(), z(), ip(&[-8]), rp(&[int(-8), frac(1, 2)]), z()],
        vec![ip(&[-18]), ip(&[14]), ip(&[4]), z(), ip(&[-2])],
        vec![ip(&[-10, -2]), ip(&[0, 2]), rp(&[int(4), frac(1, 2)]), ip(&[1]), ip(&[-10])],
    ]
}

/// The right-hand side. The fourth entry carries `-2x`: cutting with `L`
/// turns `b₁²` into `L·b₁·b₁ = 2x`, moved across the equality.
pub fn rhs_forms() -> [LinearForm; 5] {
    let z = RationalPoly::zero;
    [
        LinearForm::new(z(), rp(&[int(8), frac(-1, 2)]), z()),
        LinearForm::new(ip(&[-8]), z(), z()),
        LinearForm::new(z(), ip(&[-34, 2]), z()),
        LinearForm::new(ip(&[-2]), ip(&[4]), rp(&[int(0), int(-7), frac(1, 2)])),
        LinearForm::new(ip(&[-2]), rp(&[int(5), frac(1, 2)]), rp(&[int(0), int(-13), frac(1, 2)])),
    ]
}

/// `M(d)` and `c(d, x, y)`, exact.
pub fn build_system(d: i64, x: &Rational, y: &Rational) -> (RationalMatrix, Vec<Rational>) {
    let rows = matrix_polys()
        .iter()
        .map(|row| row.iter().map(|p| p.eval_i64(d)).collect())
        .collect();
    let m = RationalMatrix::from_rows(rows).expect("5x5");
    let c = rhs_forms().iter().map(|f| f.eval(d, x, y)).collect();
    (m, c)
}

/// `P(d) = 3d³ - 27d² - 1520d + 18976`.
pub fn p_poly() -> RationalPoly {
    ip(&[18976, -1520, -27, 3])
}

pub fn p_of_d(d: i64) -> Rational {
    p_poly().eval_i64(d)
}

/// Laplace expansion along the first row.
pub fn poly_det(m: &[Vec<RationalPoly>]) -> RationalPoly {
    match m.len() {
        0 => RationalPoly::from(1),
        1 => m[0][0].clone(),
        n => {
            let mut acc = RationalPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<RationalPoly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &poly_det(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

struct Symbolic {
    det: RationalPoly,
    /// `v_i · P` for each unknown.
    solution: [LinearForm; 5],
    e2: LinearForm,
    e1d: LinearForm,
    genus: LinearForm,
}

fn symbolic() -> &'static Symbolic {
    static CELL: OnceLock<Symbolic> = OnceLock::new();
    CELL.get_or_init(|| {
        let m = matrix_polys();
        let det = poly_det(&m);
        assert_eq!(det, p_poly().scale(&int(-2)), "det M = -2P");
        let rhs = rhs_forms();
        let half = frac(-1, 2);
        let cramer = |i: usize, part: fn(&LinearForm) -> &RationalPoly| {
            let mut mi = m.clone();
            for (r, row) in mi.iter_mut().enumerate() {
                row[i] = part(&rhs[r]).clone();
            }
            poly_det(&mi).scale(&half)
        };
        let solution: [LinearForm; 5] = std::array::from_fn(|i| {
            LinearForm::new(cramer(i, |f| &f.x), cramer(i, |f| &f.y), cramer(i, |f| &f.c))
        });
        let [b1r, r2, db1, d2, _] = &solution;
        let p = p_poly();
        let dp = &RationalPoly::var() * &p;
        let e2 = r2
            .scale(&int(12))
            .plus(d2)
            .plus_y(&p.scale(&int(-7)))
            .plus_c(&-dp.clone())
            .scale(&frac(1, 2));
        let e1d = d2.scale(&int(-1)).plus_y(&p.scale(&int(3)));
        let genus = b1r
            .scale(&int(-2))
            .plus(&db1.scale(&frac(1, 2)))
            .plus(&r2.scale(&int(2)))
            .plus_y(&p.scale(&frac(-1, 2)))
            .plus_c(&dp.scale(&frac(1, 2)));
        Symbolic { det, solution, e2, e1d, genus }
    })
}

/// `det M(d)` as a polynomial.
pub fn det_poly() -> RationalPoly {
    symbolic().det.clone()
}

/// `v_i · P` as linear forms in `(x, y)`, from Cramer's rule on the matrix.
pub fn scaled_solution_forms() -> [LinearForm; 5] {
    symbolic().solution.clone()
}

/// `e₂·P`, rebuilt from the solution forms.
pub fn e2_form() -> LinearForm {
    symbolic().e2.clone()
}

/// `e₁D·P`, rebuilt from the solution forms.
pub fn e1d_form() -> LinearForm {
    symbolic().e1d.clone()
}

/// `(g - 1)·P`, rebuilt from the solution forms.
pub fn genus_form() -> LinearForm {
    symbolic().genus.clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicBundlePoint {
    pub d: i64,
    pub x: i64,
    pub y: i64,
}

impl ConicBundlePoint {
    pub fn new(d: i64, x: i64, y: i64) -> Result<Self> {
        if d < 20 || d % 2 != 0 {
            return Err(Error::InvalidInvariants(format!("degree {d} must be even and >= 20")));
        }
        if y < 0 {
            return Err(Error::InvalidInvariants(format!("y = DR = {y} must be non-negative")));
        }
        Ok(ConicBundlePoint { d, x, y })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionVector {
    pub b1r: Rational,
    pub r2: Rational,
    pub db1: Rational,
    pub d2: Rational,
    pub b2: Rational,
}

impl SolutionVector {
    pub fn from_slice(v: &[Rational]) -> Self {
        SolutionVector {
            b1r: v[0].clone(),
            r2: v[1].clone(),
            db1: v[2].clone(),
            d2: v[3].clone(),
            b2: v[4].clone(),
        }
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        vec![self.b1r.clone(), self.r2.clone(), self.db1.clone(), self.d2.clone(), self.b2.clone()]
    }

    /// `e₂ = (12R² + D² - 7DR - d)/2`.
    pub fn e2(&self, d: i64, y: &Rational) -> Rational {
        (&self.r2 * 12 + &self.d2 - y * 7 - int(d)) / 2
    }

    /// `e₁·D = (3R - D)·D`.
    pub fn e1d(&self, y: &Rational) -> Rational {
        y * 3 - &self.d2
    }

    /// `g - 1 = d/2 - 2b₁R + Db₁/2 + 2R² - DR/2`.
    pub fn genus_minus_one(&self, d: i64, y: &Rational) -> Rational {
        int(d) / 2 - &self.b1r * 2 + &self.db1 / 2 + &self.r2 * 2 - y / 2
    }
}

/// A printed closed form that disagrees with the matrix-derived one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedFormulaDiscrepancy {
    pub quantity: String,
    pub part: String,
    pub printed: String,
    pub derived: String,
}

impl PrintedFormulaDiscrepancy {
    fn new(quantity: &str, part: &str, printed: impl ToString, derived: impl ToString) -> Self {
        PrintedFormulaDiscrepancy {
            quantity: quantity.into(),
            part: part.into(),
            printed: printed.to_string(),
            derived: derived.to_string(),
        }
    }
}

fn compare_forms(out: &mut Vec<PrintedFormulaDiscrepancy>, q: &str, printed: &LinearForm, derived: &LinearForm) {
    for ((part, p), (_, dv)) in printed.parts().into_iter().zip(derived.parts()) {
        if p != dv {
            out.push(PrintedFormulaDiscrepancy::new(q, part, p.display_in("d"), dv.display_in("d")));
        }
    }
}

fn compare_ratio(
    out: &mut Vec<PrintedFormulaDiscrepancy>,
    q: &str,
    printed: &(RationalPoly, RationalPoly),
    derived: &(RationalPoly, RationalPoly),
) {
    if &printed.0 * &derived.1 != &derived.0 * &printed.1 {
        out.push(PrintedFormulaDiscrepancy::new(
            q,
            "ratio",
            format!("({}) / ({})", printed.0.display_in("d"), printed.1.display_in("d")),
            format!("({}) / ({})", derived.0.display_in("d"), derived.1.display_in("d")),
        ));
    }
}

/// Where the `y = 0` root of a form sits: `x = -C/X`.
fn axis_root(f: &LinearForm) -> (RationalPoly, RationalPoly) {
    (-f.c.clone(), f.x.clone())
}

/// `(g - 1)` at the `y = 0` root of `edge`, as a ratio of polynomials.
fn genus_on_axis(edge: &LinearForm) -> (RationalPoly, RationalPoly) {
    let g = &symbolic().genus;
    (&(&g.c * &edge.x) - &(&g.x * &edge.c), &edge.x * &p_poly())
}

/// Lower end of the genus range: `g - 1` at the `e₂ = 0` vertex.
pub fn lo_ratio() -> (RationalPoly, RationalPoly) {
    genus_on_axis(&symbolic().e2)
}

/// Upper end of the genus range: `g - 1` at the `e₁D = 0` vertex.
pub fn hi_ratio() -> (RationalPoly, RationalPoly) {
    genus_on_axis(&symbolic().e1d)
}

/// Every printed form compared structurally against the derived one. The
/// list is deterministic.
pub fn printed_discrepancies() -> Vec<PrintedFormulaDiscrepancy> {
    let s = symbolic();
    let mut out = Vec::new();
    let p_printed = printed::poly("P", "poly");
    let p_derived = s.det.scale(&frac(-1, 2));
    if p_printed != p_derived {
        out.push(PrintedFormulaDiscrepancy::new("P", "poly", p_printed.display_in("d"), p_derived.display_in("d")));
    }
    for (i, (p, dv)) in printed::rhs().iter().zip(rhs_forms().iter()).enumerate() {
        compare_forms(&mut out, &format!("c{}", i + 1), p, dv);
    }
    for ((name, p), dv) in printed::SOLUTION_NAMES.iter().zip(printed::solution().iter()).zip(s.solution.iter()) {
        compare_forms(&mut out, name, p, dv);
    }
    compare_forms(&mut out, "e2P", &printed::linear("e2P"), &s.e2);
    compare_forms(&mut out, "e1DP", &printed::linear("e1DP"), &s.e1d);
    compare_forms(&mut out, "gP", &printed::linear("gP"), &s.genus);
    compare_ratio(&mut out, "x1", &printed::ratio("x1"), &axis_root(&s.e2));
    compare_ratio(&mut out, "x2", &printed::ratio("x2"), &axis_root(&s.e1d));
    compare_ratio(&mut out, "lo", &printed::ratio("lo"), &lo_ratio());
    compare_ratio(&mut out, "hi", &printed::ratio("hi"), &hi_ratio());
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvedPoint {
    pub point: ConicBundlePoint,
    pub v: SolutionVector,
    /// Pointwise disagreements of the printed solution forms.
    pub discrepancies: Vec<PrintedFormulaDiscrepancy>,
}

/// Solves `M·v = c` exactly and checks the residual.
pub fn solve_point(p: &ConicBundlePoint) -> Result<SolvedPoint> {
    let pd = p_of_d(p.d);
    if pd.is_zero() {
        return Err(Error::SingularSystem { d: p.d });
    }
    let (x, y) = (int(p.x), int(p.y));
    let (m, c) = build_system(p.d, &x, &y);
    let v = m.solve(&c).map_err(|_| Error::SingularSystem { d: p.d })?;
    if m.mul_vec(&v)? != c {
        return Err(Error::InconsistentData(format!("nonzero residual at {p:?}")));
    }
    let mut discrepancies = Vec::new();
    for ((name, form), value) in printed::SOLUTION_NAMES.iter().zip(printed::solution()).zip(&v) {
        let printed = form.eval(p.d, &x, &y) / &pd;
        if &printed != value {
            discrepancies.push(PrintedFormulaDiscrepancy::new(
                name,
                &format!("at (d, x, y) = ({}, {}, {})", p.d, p.x, p.y),
                printed,
                value,
            ));
        }
    }
    Ok(SolvedPoint { point: *p, v: SolutionVector::from_slice(&v), discrepancies })
}

/// Solution vector at a possibly non-integral point.
pub fn solve_rational(d: i64, x: &Rational, y: &Rational) -> Result<SolutionVector> {
    let (m, c) = build_system(d, x, y);
    let v = m.solve(&c).map_err(|_| Error::SingularSystem { d })?;
    Ok(SolutionVector::from_slice(&v))
}

/// A quantity computed from the matrix solve (`value`, normative) and from
/// the printed polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualValue {
    pub value: Rational,
    pub printed: Rational,
}

impl DualValue {
    pub fn agrees(&self) -> bool {
        self.value == self.printed
    }
}

/// `e₂·P`.
pub fn e2_scaled(d: i64, x: &Rational, y: &Rational) -> Result<DualValue> {
    let v = solve_rational(d, x, y)?;
    Ok(DualValue {
        value: v.e2(d, y) * p_of_d(d),
        printed: printed::linear("e2P").eval(d, x, y),
    })
}

/// `e₁D·P`.
pub fn e1d_scaled(d: i64, x: &Rational, y: &Rational) -> Result<DualValue> {
    let v = solve_rational(d, x, y)?;
    Ok(DualValue {
        value: v.e1d(y) * p_of_d(d),
        printed: printed::linear("e1DP").eval(d, x, y),
    })
}

/// `g - 1` of a curve section (not scaled by `P`).
pub fn genus_of_point(d: i64, x: &Rational, y: &Rational) -> Result<DualValue> {
    let v = solve_rational(d, x, y)?;
    Ok(DualValue {
        value: v.genus_minus_one(d, y),
        printed: printed::linear("gP").eval(d, x, y) / p_of_d(d),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibleTriangle {
    pub d: i64,
    /// On `e₂ = 0`.
    pub v1: (Rational, Rational),
    /// On `e₁D = 0`.
    pub v2: (Rational, Rational),
    /// `e₂ = 0 ∩ e₁D = 0`.
    pub v3: (Rational, Rational),
    pub slope_e2: Rational,
    pub slope_e1d: Rational,
    #[serde(skip)]
    e2: Option<Affine>,
    #[serde(skip)]
    e1d: Option<Affine>,
}

impl FeasibleTriangle {
    pub fn x1_lt_x2(&self) -> bool {
        self.v1.0 < self.v2.0
    }

    /// The `x` interval cut out at height `y`: `e₂ ≥ 0` on the left,
    /// `e₁D ≥ 0` on the right. Empty when `lo > hi`.
    pub fn x_range(&self, y: &Rational) -> (Rational, Rational) {
        let (e2, e1d) = (self.e2.as_ref().expect("built"), self.e1d.as_ref().expect("built"));
        let lo = -(&e2.y * y + &e2.c) / &e2.x;
        let hi = -(&e1d.y * y + &e1d.c) / &e1d.x;
        (lo, hi)
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        let (e2, e1d) = (self.e2.as_ref().expect("built"), self.e1d.as_ref().expect("built"));
        !y.is_negative() && !e2.eval(x, y).is_negative() && !e1d.eval(x, y).is_negative()
    }
}

/// The feasibility region `e₂ ≥ 0`, `e₁D ≥ 0`, `y ≥ 0` for `d ≥ 20`.
pub fn triangle(d: i64) -> Result<FeasibleTriangle> {
    if d < 20 {
        return Err(Error::InvalidInvariants(format!("triangle needs d >= 20, got {d}")));
    }
    if !p_of_d(d).is_positive() {
        return Err(Error::SingularSystem { d });
    }
    let s = symbolic();
    let (e2, e1d) = (s.e2.at(d), s.e1d.at(d));
    if e2.x.is_zero() || e1d.x.is_zero() || e2.y.is_zero() || e1d.y.is_zero() {
        return Err(Error::DegenerateTriangle { d });
    }
    if !(e2.x.is_positive() && e1d.x.is_negative()) {
        return Err(Error::InconsistentData(format!("unexpected edge orientation at d = {d}")));
    }
    let m = RationalMatrix::from_rows(vec![vec![e2.x.clone(), e2.y.clone()], vec![e1d.x.clone(), e1d.y.clone()]])?;
    let v3 = m
        .solve(&[-e2.c.clone(), -e1d.c.clone()])
        .map_err(|_| Error::DegenerateTriangle { d })?;
    Ok(FeasibleTriangle {
        d,
        v1: (-&e2.c / &e2.x, Rational::zero()),
        v2: (-&e1d.c / &e1d.x, Rational::zero()),
        v3: (v3[0].clone(), v3[1].clone()),
        slope_e2: -&e2.x / &e2.y,
        slope_e1d: -&e1d.x / &e1d.y,
        e2: Some(e2),
        e1d: Some(e1d),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Superbound {
    pub d: i64,
    /// `g - 1` at the `e₂ = 0` vertex.
    pub lo: Rational,
    /// `g - 1` at the `e₁D = 0` vertex.
    pub hi: Rational,
    /// `g - 1` at the apex `e₂ = 0 ∩ e₁D = 0`. For small `d` it exceeds
    /// `hi`, so `hi` is then not the maximum over the triangle.
    pub apex: Rational,
    pub printed_lo: Rational,
    pub printed_hi: Rational,
    pub discrepancies: Vec<PrintedFormulaDiscrepancy>,
}

fn eval_ratio(r: &(RationalPoly, RationalPoly), d: i64) -> Rational {
    r.0.eval_i64(d) / r.1.eval_i64(d)
}

/// Range of `g - 1` over the triangle, by evaluating the genus at the two
/// axis vertices.
pub fn superbound(d: i64) -> Result<Superbound> {
    let t = triangle(d)?;
    let lo = genus_of_point(d, &t.v1.0, &t.v1.1)?.value;
    let hi = genus_of_point(d, &t.v2.0, &t.v2.1)?.value;
    let apex = genus_of_point(d, &t.v3.0, &t.v3.1)?.value;
    let printed_lo = eval_ratio(&printed::ratio("lo"), d);
    let printed_hi = eval_ratio(&printed::ratio("hi"), d);
    let mut discrepancies = Vec::new();
    if printed_lo != lo {
        discrepancies.push(PrintedFormulaDiscrepancy::new("lo", &format!("d = {d}"), &printed_lo, &lo));
    }
    if printed_hi != hi {
        discrepancies.push(PrintedFormulaDiscrepancy::new("hi", &format!("d = {d}"), &printed_hi, &hi));
    }
    Ok(Superbound { d, lo, hi, apex, printed_lo, printed_hi, discrepancies })
}

impl Superbound {
    /// The genus is linear, so its range over the triangle is spanned by
    /// the three vertices; `lo` is always the minimum.
    pub fn max_on_triangle(&self) -> &Rational {
        if self.apex > self.hi {
            &self.apex
        } else {
            &self.hi
        }
    }
}

/// Which genus bound a cascade row tests against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CascadeKind {
    /// On no surface of degree below `2k`: `lo ≤ d²/(2k) + (k-4)d/2`.
    NotContained { k: i64 },
    /// On a surface of degree `2k`: `lo ≤ d²/(4k) + (k-3)d/2`.
    Contained { k: i64 },
    /// On a surface of degree `2s`: `hi ≥ g - 1` forced by `μ_s ≤ s²d`.
    Postulation { s: i64 },
}

impl CascadeKind {
    pub fn surface_degree(&self) -> i64 {
        match *self {
            CascadeKind::NotContained { k } | CascadeKind::Contained { k } => 2 * k,
            CascadeKind::Postulation { s } => 2 * s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CascadeRow {
    pub kind: CascadeKind,
    /// Largest even `d ≥ 20` passing the test; `None` if none does.
    pub max_d: Option<i64>,
    /// The test reads `sign(den(d))·poly(d) ≤ 0`.
    pub certificate_poly: String,
    /// Past this point the signs of `poly` and `den` are constant.
    pub search_limit: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cascade {
    pub rows: Vec<CascadeRow>,
    pub trail: Vec<String>,
}

impl Cascade {
    pub fn max_d(&self, kind: CascadeKind) -> Option<i64> {
        self.rows.iter().find(|r| r.kind == kind).and_then(|r| r.max_d)
    }
}

/// Largest even `d ≥ 20` with `sign(den)·(num - bound·den) ≤ 0`.
fn cascade_row(kind: CascadeKind, num: &RationalPoly, den: &RationalPoly, bound: &RationalPoly) -> Result<CascadeRow> {
    let f = num - &(bound * den);
    let limit = [f.positive_root_bound(), den.positive_root_bound()]
        .into_iter()
        .flatten()
        .map(|b| i64::try_from(b).expect("search limit fits i64"))
        .max()
        .unwrap_or(0)
        .max(20);
    if f.leading().signum() * den.leading().signum() <= 0 {
        return Err(Error::UnboundedFamily(format!("{kind:?} never stops")));
    }
    let passes = |d: i64| {
        let s = den.eval_i64(d).signum();
        !(f.eval_i64(d) * int(s.into())).is_positive()
    };
    let max_d = (20..=limit).rev().filter(|d| d % 2 == 0).find(|&d| passes(d));
    Ok(CascadeRow { kind, max_d, certificate_poly: f.display_in("d"), search_limit: limit })
}

/// The degree bounds for each surface degree containing the curve section.
pub fn degree_bound_cascade() -> Result<Cascade> {
    let d = RationalPoly::var();
    let d2 = d.pow(2);
    let (lo_n, lo_d) = lo_ratio();
    let (hi_n, hi_d) = hi_ratio();
    let mut rows = Vec::new();
    let mut trail = Vec::new();
    let nc = d2.scale(&frac(1, 22)) + d.scale(&frac(7, 2));
    debug_assert_eq!(nc.eval_i64(98), notcontained_bound(98, 11));
    rows.push(cascade_row(CascadeKind::NotContained { k: 11 }, &lo_n, &lo_d, &nc)?);
    for k in (3..=10).rev() {
        let b = d2.scale(&frac(1, 4 * k)) + d.scale(&frac(k - 3, 2));
        debug_assert_eq!(b.eval_i64(44), contained_bound(44, k));
        rows.push(cascade_row(CascadeKind::Contained { k }, &lo_n, &lo_d, &b)?);
    }
    for s in [2i64, 1] {
        // μ_s ≤ s²d  ⇔  g - 1 ≥ (d²/2 + s(s-3)d - s²d)/(2s); test hi ≥ that.
        let lower = d2.scale(&frac(1, 4 * s)) + d.scale(&frac(s * (s - 3) - s * s, 2 * s));
        rows.push(cascade_row(CascadeKind::Postulation { s }, &(-hi_n.clone()), &hi_d, &(-lower))?);
    }
    for r in &rows {
        trail.push(format!(
            "surface degree {}: {:?} -> {}",
            r.kind.surface_degree(),
            r.kind,
            r.max_d.map_or("none with d >= 20".to_string(), |m| format!("d <= {m}"))
        ));
    }
    for (pos, &value) in printed::CONTAINED_LIST.iter().enumerate() {
        let k = 10 - pos as i64;
        let got = rows.iter().find(|r| r.kind == CascadeKind::Contained { k }).and_then(|r| r.max_d);
        let matches: Vec<String> = rows
            .iter()
            .filter(|r| matches!(r.kind, CascadeKind::Contained { .. }) && r.max_d == Some(value))
            .map(|r| match r.kind {
                CascadeKind::Contained { k } => k.to_string(),
                _ => unreachable!(),
            })
            .collect();
        trail.push(format!(
            "list position {} ({value}) read as k = {k}: recomputed {}; value recomputed for k in {{{}}}",
            pos + 1,
            got.map_or("none".into(), |g| g.to_string()),
            matches.join(", ")
        ));
    }
    Ok(Cascade { rows, trail })
}

/// Whether `lo(d) > d²/12`, the `k = 3` containment bound.
pub fn lo_exceeds_k3(d: i64) -> bool {
    eval_ratio(&lo_ratio(), d) > contained_bound(d, 3)
}

#[cfg(test)]
mod tests;
