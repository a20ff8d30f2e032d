//! Diophantine degree screens and small finite searches.

use serde::{Deserialize, Serialize};

use crate::dpf::{dpf2_equation, SurfaceRestrictionData};
use crate::error::{Error, Result};
use crate::genus::castelnuovo_p4;
use crate::invariants::{surface_k2, Surface4Invariants};
use crate::rational::{frac, int, Rational, RationalMatrix, RationalPoly};

/// `2K² - (d²/2 - 3d - 8(g-1) + 12χ)` for a surface on Q^4, as a polynomial
/// in `d` once `K²`, `g - 1` and `χ` are given as polynomials in `d`.
fn surface_dpf_poly(k2: &RationalPoly, g1: &RationalPoly, chi: &RationalPoly) -> RationalPoly {
    let d = RationalPoly::var();
    let rhs = &d.pow(2).scale(&frac(1, 2)) - &d.scale(&int(3)) - g1.scale(&int(8))
        + chi.scale(&int(12));
    k2.scale(&int(2)) - rhs
}

/// Positive even integer roots, ascending.
pub fn positive_even_roots(p: &RationalPoly) -> Vec<i64> {
    p.integer_roots()
        .unwrap_or_default()
        .into_iter()
        .filter_map(|r| i64::try_from(r).ok())
        .filter(|&r| r > 0 && r % 2 == 0)
        .collect()
}

/// The quadratic whose roots are the Del Pezzo variety degrees: surface
/// sections with `g = 1`, `χ = 1` and `K² = d`.
pub fn del_pezzo_degree_poly() -> RationalPoly {
    let p = surface_dpf_poly(&RationalPoly::var(), &RationalPoly::zero(), &1.into());
    let lead = p.leading();
    p.scale(&lead.recip().expect("nonzero"))
}

pub fn del_pezzo_variety_degrees() -> Vec<i64> {
    positive_even_roots(&del_pezzo_degree_poly())
}

/// Surface sections are K3: `K² = 0`, `χ = 2`, `g - 1 = d/2`.
pub fn mukai_degree_poly() -> RationalPoly {
    let g1 = RationalPoly::var().scale(&frac(1, 2));
    let p = surface_dpf_poly(&RationalPoly::zero(), &g1, &2.into());
    let lead = p.leading();
    p.scale(&lead.recip().expect("nonzero"))
}

/// `(d, g)` pairs.
pub fn mukai_degrees() -> Vec<(i64, i64)> {
    positive_even_roots(&mukai_degree_poly())
        .into_iter()
        .map(|d| (d, d / 2 + 1))
        .collect()
}

/// `λ = L·K²`, `2μ = -L²·K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoWitness {
    pub lambda: i64,
    pub mu: i64,
    pub minus_k3: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoScreen {
    pub d: i64,
    /// `false` only when the search was exhaustive and found nothing.
    pub feasible: bool,
    /// Whether every `(λ, μ)` was covered, as opposed to a capped search.
    pub exhaustive: bool,
    pub witnesses: Vec<FanoWitness>,
    pub trail: Vec<String>,
}

/// Bound on `-K³` for Fano threefolds.
pub const FANO_MAX_MINUS_K3: i64 = 64;

/// Searches `(λ, μ)` with `-K³ = (d-22)μ + 5λ + 24` in `[1, 64]` and
/// `2μ(-K³) ≤ λ²`. For `d ≥ 22` the first relation forces `λ ≤ 8`; below
/// that `λ` is unbounded and `lambda_cap` limits the search.
pub fn fano_threefold_feasible(d: i64, lambda_cap: i64) -> Result<FanoScreen> {
    if d < 2 || d % 2 != 0 {
        return Err(Error::InvalidInvariants(format!("degree {d} must be even and >= 2")));
    }
    let mut trail = vec![format!("-K^3 = {}mu + 5lambda + 24, 2mu(-K^3) <= lambda^2", d - 22)];
    let (lambda_max, exhaustive) = if d >= 22 {
        let m = (FANO_MAX_MINUS_K3 - 24) / 5;
        trail.push(format!("(d-22)mu >= 0 and -K^3 <= 64 force lambda <= {m}"));
        (m, true)
    } else {
        trail.push(format!("d < 22: lambda unbounded, searching lambda <= {lambda_cap}"));
        (lambda_cap, false)
    };
    let mut witnesses = Vec::new();
    for lambda in 1..=lambda_max {
        // -K^3 >= 1 and the Hodge inequality give 2mu <= lambda^2.
        for mu in 1..=lambda * lambda / 2 {
            let minus_k3 = (d - 22) * mu + 5 * lambda + 24;
            if !(1..=FANO_MAX_MINUS_K3).contains(&minus_k3) {
                continue;
            }
            if 2 * mu * minus_k3 <= lambda * lambda {
                witnesses.push(FanoWitness { lambda, mu, minus_k3 });
            }
        }
    }
    trail.push(format!("{} numerical witnesses", witnesses.len()));
    Ok(FanoScreen {
        d,
        feasible: !witnesses.is_empty() || !exhaustive,
        exhaustive,
        witnesses,
        trail,
    })
}

/// Numerical data of a Del Pezzo fibre `F` of a threefold on Q^5 over a
/// curve: `u = 𝓛²`, `v = -K_F·𝓛`, `k = K_F²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoFibreCandidate {
    pub d: i64,
    pub u: i64,
    pub v: i64,
    pub k: i64,
    pub hodge_ok: bool,
}

fn fano_fibre_data(u: i64, v: i64, k: i64) -> SurfaceRestrictionData {
    let c = |x: i64| RationalPoly::from(x);
    SurfaceRestrictionData {
        n: 5,
        normal_rank: 1,
        l2: c(u),
        c1t_l: c(v),
        c1t_sq: c(k),
        c2t: c(12 - k),
        c1n_l: c(0),
        c1n_sq: c(0),
        c1n_c1t: c(0),
        c2n: c(0),
    }
}

/// Degree forced on a fibre with data `(u, v, k)`.
pub fn fano_fibre_degree(u: i64, v: i64, k: i64) -> Result<Rational> {
    let eq = dpf2_equation(&fano_fibre_data(u, v, k))?;
    Ok(eq.constant.coeff(0) / eq.d_coeff.coeff(0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoFibrationBound {
    pub n: u32,
    pub max_degree: i64,
    /// Candidates met while excluding degrees above the bound.
    pub rejected: Vec<FanoFibreCandidate>,
    /// A numerical witness at the bound, when one was searched for.
    pub witness: Option<FanoFibreCandidate>,
    pub trail: Vec<String>,
}

/// Largest `d` not excluded for threefolds on Q^5 fibred over a curve in Del
/// Pezzo surfaces. The fibre equation reads `(11 - d/2)u - 5v + 2k - 12 = 0`
/// with `1 ≤ k ≤ 9`, `u, v ≥ 1`, and the Hodge index theorem on `F` demands
/// `v² ≥ k·u`. For Q^6 the bound 30 is returned as a constant.
pub fn fano_fibration_max_degree(n: u32) -> Result<FanoFibrationBound> {
    match n {
        6 => {
            return Ok(FanoFibrationBound {
                n,
                max_degree: 30,
                rejected: vec![],
                witness: None,
                trail: vec!["fourfolds: recorded bound d <= 30".into()],
            })
        }
        5 => {}
        _ => return Err(Error::InvalidInvariants(format!("n = {n} not in {{5, 6}}"))),
    }
    let mut trail = Vec::new();
    // Check the fibre equation coming out of the engine against its closed
    // form before using the closed form to organize the search.
    for (u, v, k) in [(1, 3, 9), (2, 4, 8), (5, 7, 3)] {
        let d = fano_fibre_degree(u, v, k)?;
        let closed = int(2 * (11 * u - 5 * v + 2 * k - 12)) / int(u);
        if d != closed {
            return Err(Error::InconsistentData(format!("fibre equation mismatch at {:?}", (u, v, k))));
        }
    }
    trail.push("fibre equation: (11 - d/2)u - 5v + 2k - 12 = 0".into());
    // For d >= 22: (d/2 - 11)u = 2k - 12 - 5v <= 18 - 12 - 5 = 1.
    let max_rhs = 2 * 9 - 12 - 5;
    trail.push(format!("d >= 22 needs (d/2 - 11)u = 2k - 12 - 5v <= {max_rhs}"));
    let mut rejected = Vec::new();
    let mut d = 22;
    loop {
        let step = d / 2 - 11;
        if step > max_rhs {
            trail.push(format!("d >= {d}: (d/2 - 11)u >= {step} > {max_rhs}, nothing left"));
            break;
        }
        let mut found = false;
        for k in 1..=9 {
            for v in 1..=((2 * k - 12) / 5).max(0) {
                let rhs = 2 * k - 12 - 5 * v;
                if step == 0 {
                    if rhs == 0 {
                        // u is free; Hodge caps it.
                        for u in 1..=v * v / k {
                            let c = FanoFibreCandidate { d, u, v, k, hodge_ok: true };
                            found = true;
                            rejected.push(c);
                        }
                    }
                    continue;
                }
                if rhs <= 0 || rhs % step != 0 {
                    continue;
                }
                let u = rhs / step;
                let hodge_ok = v * v >= k * u;
                let c = FanoFibreCandidate { d, u, v, k, hodge_ok };
                trail.push(format!(
                    "d = {d}: candidate u = {u}, v = {v}, k = {k}; Hodge {} ({} vs {})",
                    if hodge_ok { "holds" } else { "fails" },
                    v * v,
                    k * u
                ));
                found |= hodge_ok;
                rejected.push(c);
            }
        }
        if found {
            return Err(Error::InconsistentData(format!("d = {d} survives the fibre screen")));
        }
        trail.push(format!("d = {d}: excluded"));
        d += 2;
    }
    // A numerical witness at d = 20: u = 5v - 2k + 12 with v² ≥ k·u.
    let witness = (1..=9).rev().find_map(|k| {
        (1..=200).find_map(|v| {
            let u = 5 * v - 2 * k + 12;
            (u >= 1 && v * v >= k * u).then_some(FanoFibreCandidate { d: 20, u, v, k, hodge_ok: true })
        })
    });
    if let Some(w) = &witness {
        trail.push(format!("d = 20 admits u = {}, v = {}, k = {}", w.u, w.v, w.k));
    }
    Ok(FanoFibrationBound { n, max_degree: 20, rejected, witness, trail })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelPezzoFibrationSolution {
    pub d: i64,
    pub g: i64,
    pub chi_os: i64,
    pub p_g: i64,
    pub q: i64,
    pub base_genus: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelPezzoCandidate {
    pub g: i64,
    pub chi_os: i64,
    pub q: Rational,
    pub p_g: Rational,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelPezzoResolution {
    pub solution: DelPezzoFibrationSolution,
    pub candidates: Vec<DelPezzoCandidate>,
    pub trail: Vec<String>,
}

/// Fibre degree `Δ = 24/(16 - d)` of a Del Pezzo fibration over a curve.
pub fn del_pezzo_fibre_degree(d: i64) -> Option<i64> {
    let den = 16 - d;
    (den > 0 && 24 % den == 0).then(|| 24 / den)
}

/// Pins `(g, χ(O_S), p_g, q)` for a Del Pezzo fibration of degree `d`.
///
/// The surface section is an elliptic surface over the base, so `K_S² = 0`,
/// which turns the surface double point formula into a linear relation
/// between `g` and `χ`. Candidates with `0 ≤ g ≤ cap` and `χ ≥ 0` are then
/// tested against `2g - 2 - d = (p_g + q - 1)Δ` and `χ = 1 - q + p_g`.
pub fn resolve_delpezzo_fibration_invariants(d: i64, castelnuovo_cap: Option<i64>) -> Result<DelPezzoResolution> {
    let delta = del_pezzo_fibre_degree(d)
        .ok_or_else(|| Error::InvalidInvariants(format!("24/(16 - {d}) is not a positive integer")))?;
    let cap = castelnuovo_cap.unwrap_or_else(|| castelnuovo_p4(d));
    let mut trail = vec![format!("fibre degree {delta}, genus cap {cap}")];
    let mut candidates = Vec::new();
    for g in 0..=cap {
        // K² = 0 for each chi: solve the linear relation for chi.
        let k0 = |chi: i64| surface_k2(&Surface4Invariants { d, g, chi });
        let slope = k0(1) - k0(0);
        let chi = -k0(0) / slope;
        let Some(chi) = chi.to_i64().filter(|&c| c >= 0) else { continue };
        let s = (int(2 * g - 2 - d) / int(delta)) + 1;
        // p_g + q = s, p_g - q = chi - 1
        let q = (&s - int(chi - 1)) / 2;
        let p_g = (&s + int(chi - 1)) / 2;
        let accepted = q.is_integer() && p_g.is_integer() && !q.is_negative() && !p_g.is_negative();
        trail.push(format!(
            "(g, chi) = ({g}, {chi}): p_g + q = {s}, q = {q}, p_g = {p_g} -> {}",
            if accepted { "kept" } else { "rejected" }
        ));
        candidates.push(DelPezzoCandidate { g, chi_os: chi, q, p_g, accepted });
    }
    let survivors: Vec<&DelPezzoCandidate> = candidates.iter().filter(|c| c.accepted).collect();
    match survivors.as_slice() {
        [] => Err(Error::NoSolution { trail }),
        [c] => {
            let q = c.q.to_i64().expect("integral");
            let solution = DelPezzoFibrationSolution {
                d,
                g: c.g,
                chi_os: c.chi_os,
                p_g: c.p_g.to_i64().expect("integral"),
                q,
                base_genus: q,
            };
            Ok(DelPezzoResolution { solution, candidates, trail })
        }
        many => Err(Error::MultipleSolutions(
            many.iter().map(|c| format!("(g, chi) = ({}, {})", c.g, c.chi_os)).collect(),
        )),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotInP4Outcome {
    pub d: i64,
    pub g_minus_1: Rational,
    pub chi_os: Rational,
    pub integral: bool,
    /// `(p_g, q)` from the fibration relations, when `(g, χ)` are integers.
    pub p_g_q: Option<(Rational, Rational)>,
    /// True when the surface cannot lie in P^4.
    pub excluded: bool,
    pub trail: Vec<String>,
}

/// Tests whether the surface section of a degree-`d` Del Pezzo fibration
/// could lie in P^4. Solves the P^4 double point formula
/// `d² - 10d - 5H·K - 2K² + 12χ = 0` (with `H·K = 2g - 2 - d`) together with
/// the Q^4 formula, both at `K² = 0`, for `(g - 1, χ)`.
pub fn notinp4_check(d: i64) -> Result<NotInP4Outcome> {
    let delta = del_pezzo_fibre_degree(d)
        .ok_or_else(|| Error::InvalidInvariants(format!("24/(16 - {d}) is not a positive integer")))?;
    let dd = int(d);
    // Unknowns (g - 1, chi).
    // Q^4: 8(g-1) - 12chi = d²/2 - 3d
    // P^4: 10(g-1) - 12chi = d² - 5d
    let m = RationalMatrix::from_rows(vec![vec![int(8), int(-12)], vec![int(10), int(-12)]])?;
    let rhs = vec![
        &dd * &dd / 2 - &dd * 3,
        &dd * &dd - &dd * 5,
    ];
    let sol = m.solve(&rhs)?;
    let (g1, chi) = (sol[0].clone(), sol[1].clone());
    let mut trail = vec![format!("g - 1 = {g1}, chi = {chi}")];
    let integral = g1.is_integer() && chi.is_integer();
    let mut p_g_q = None;
    let excluded = if !integral {
        trail.push("non-integral invariants".into());
        true
    } else {
        let s = (&g1 * 2 - &dd) / int(delta) + 1;
        let q = (&s - (&chi - 1)) / 2;
        let p_g = (&s + (&chi - 1)) / 2;
        trail.push(format!("p_g + q = {s}, p_g - q = {}, so p_g = {p_g}, q = {q}", &chi - 1));
        let ok = q.is_integer() && p_g.is_integer() && !q.is_negative() && !p_g.is_negative();
        if !ok {
            trail.push("inconsistent with the fibration relations".into());
        }
        p_g_q = Some((p_g, q));
        !ok
    };
    Ok(NotInP4Outcome { d, g_minus_1: g1, chi_os: chi, integral, p_g_q, excluded, trail })
}
