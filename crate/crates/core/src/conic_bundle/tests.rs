use super::*;
use proptest::prelude::*;

fn even_grid() -> impl Iterator<Item = i64> {
    (20..=276).step_by(2)
}

#[test]
fn p_matches_determinant_on_grid() {
    assert_eq!(p_of_d(20), int(1776));
    assert_eq!(p_of_d(0), int(18976));
    assert_eq!(det_poly(), p_poly().scale(&int(-2)));
    for d in even_grid() {
        let (m, _) = build_system(d, &int(0), &int(0));
        assert_eq!(-m.determinant().unwrap() / 2, p_of_d(d), "d = {d}");
    }
}

#[test]
fn p_has_no_integer_root() {
    assert_eq!(p_poly().integer_roots().unwrap(), Vec::<num_bigint::BigInt>::new());
}

#[test]
fn matrix_entries() {
    let (m, c) = build_system(20, &int(3), &int(5));
    assert_eq!(*m.get(0, 0), int(-8));
    assert_eq!(*m.get(0, 1), int(34 - 40));
    assert_eq!(c[0], int((8 - 10) * 5));
    assert_eq!(c[1], int(-24));
    assert_eq!(c[3], int(-6 + 20 + 20 * 3));
    // odd degrees still build
    let (m, _) = build_system(17, &int(0), &int(0));
    assert_eq!(*m.get(1, 2), frac(-1, 2));
}

#[test]
fn alternate_fifth_row_gives_same_solution() {
    // The degree-three relation rewritten with the other four rows: the row
    // (-34, 20, 8, 1, -8 | -8x + 9y - 6d) spans the same system.
    for (d, x, y) in [(20, 0, 0), (44, 330, 54), (66, 1558, 8), (98, -7, 400)] {
        let (xr, yr) = (int(x), int(y));
        let (m, c) = build_system(d, &xr, &yr);
        let mut rows: Vec<Vec<Rational>> = (0..4).map(|r| m.row(r).to_vec()).collect();
        rows.push([-34, 20, 8, 1, -8].iter().map(|&v| int(v)).collect());
        let mut rhs = c[..4].to_vec();
        rhs.push(int(-8 * x + 9 * y - 6 * d));
        let alt = RationalMatrix::from_rows(rows).unwrap();
        assert_eq!(alt.solve(&rhs).unwrap(), m.solve(&c).unwrap(), "d = {d}");
        assert_eq!(alt.determinant().unwrap(), m.determinant().unwrap());
    }
}

#[test]
fn only_c4_disagrees_with_print() {
    let found = printed_discrepancies();
    assert_eq!(
        found,
        vec![PrintedFormulaDiscrepancy {
            quantity: "c4".into(),
            part: "x".into(),
            printed: "2".into(),
            derived: "-2".into(),
        }]
    );
    assert_eq!(found, printed_discrepancies());
    assert_eq!(printed::notes().len(), 1);
}

#[test]
fn known_witnesses_solve_integrally() {
    let s = solve_point(&ConicBundlePoint::new(44, 330, 54).unwrap()).unwrap();
    assert_eq!(s.v.to_vec(), [-108, 30, -228, 78, 618].map(int).to_vec());
    assert!(s.discrepancies.is_empty());
    assert_eq!(s.v.genus_minus_one(44, &int(54)), int(157));
    let s = solve_point(&ConicBundlePoint::new(66, 1558, 8).unwrap()).unwrap();
    assert_eq!(s.v.to_vec(), [-318, 28, -748, -208, 2246].map(int).to_vec());
}

#[test]
fn point_validation() {
    assert!(ConicBundlePoint::new(44, 0, -1).is_err());
    assert!(ConicBundlePoint::new(18, 0, 0).is_err());
    assert!(ConicBundlePoint::new(45, 0, 0).is_err());
}

#[test]
fn e2_line_coefficients() {
    let e2 = e2_form();
    assert_eq!(e2.x, RationalPoly::from_i64(&[-4480, 896]));
    for d in even_grid() {
        let t = triangle(d).unwrap();
        assert!(e2_scaled(d, &t.v1.0, &int(0)).unwrap().value.is_zero());
        assert!(e1d_scaled(d, &t.v2.0, &int(0)).unwrap().value.is_zero());
    }
}

#[test]
fn triangle_shape_on_grid() {
    for d in even_grid() {
        let t = triangle(d).unwrap();
        assert!(t.x1_lt_x2(), "d = {d}");
        assert!(t.slope_e2.is_positive() && t.slope_e1d.is_negative(), "d = {d}");
        assert!(t.v3.1.is_positive());
        assert!(t.v1.0 < t.v3.0 && t.v3.0 < t.v2.0);
        assert!(e2_scaled(d, &t.v3.0, &t.v3.1).unwrap().value.is_zero());
        assert!(e1d_scaled(d, &t.v3.0, &t.v3.1).unwrap().value.is_zero());
        for v in [&t.v1, &t.v2, &t.v3] {
            assert!(t.contains(&v.0, &v.1));
        }
        let (lo, hi) = t.x_range(&int(0));
        assert_eq!((lo, hi), (t.v1.0.clone(), t.v2.0.clone()));
        let (lo, hi) = t.x_range(&t.v3.1);
        assert_eq!(lo, hi);
    }
    assert!(triangle(18).is_err());
}

#[test]
fn triangle_at_forty_four() {
    let t = triangle(44).unwrap();
    assert_eq!(t.v1.0, frac(103851, 364));
    assert_eq!(t.v2.0, frac(29403, 65));
    assert_eq!(t.v3, (frac(5115, 16), frac(407, 2)));
}

#[test]
fn superbound_is_vertex_genus() {
    for d in even_grid() {
        let s = superbound(d).unwrap();
        let t = triangle(d).unwrap();
        assert!(s.lo <= s.hi, "d = {d}");
        assert!(s.discrepancies.is_empty(), "d = {d}");
        let g3 = genus_of_point(d, &t.v3.0, &t.v3.1).unwrap().value;
        assert_eq!(g3, s.apex);
        assert!(s.lo < g3, "d = {d}");
        // The apex overtakes the e1D vertex exactly for d <= 30.
        assert_eq!(g3 > s.hi, d <= 30, "d = {d}");
        assert_eq!(s.max_on_triangle(), if d <= 30 { &g3 } else { &s.hi });
        assert_eq!(s.lo, eval_ratio(&lo_ratio(), d));
        assert_eq!(s.hi, eval_ratio(&hi_ratio(), d));
        assert_ne!(38 * d, 502);
    }
    let s = superbound(20).unwrap();
    assert_eq!((s.lo, s.hi), (frac(1069, 42), frac(1270, 43)));
}

#[test]
fn cascade_values() {
    let c = degree_bound_cascade().unwrap();
    assert_eq!(c.max_d(CascadeKind::NotContained { k: 11 }), Some(98));
    let contained: Vec<Option<i64>> = (3..=10).rev().map(|k| c.max_d(CascadeKind::Contained { k })).collect();
    assert_eq!(contained, [64, 58, 54, 48, 44, 40, 40, 276].map(Some).to_vec());
    assert_eq!(c.max_d(CascadeKind::Postulation { s: 2 }), Some(42));
    assert_eq!(c.max_d(CascadeKind::Postulation { s: 1 }), None);
    assert!(c.trail.iter().any(|t| t.contains("k in {5, 4}")));
    assert_eq!(c, degree_bound_cascade().unwrap());
}

#[test]
fn degree_two_infeasible_with_true_maximum() {
    // mu_1 <= d forces g - 1 >= d²/4 - 3d/2.
    for d in even_grid() {
        let s = superbound(d).unwrap();
        assert!(*s.max_on_triangle() < int(d * d) / 4 - int(3 * d) / 2, "d = {d}");
    }
}

/// `lo(d) > bound(d)` by cross-multiplying the closed form
/// `(19d³ - 187d² + 416d)/(224d - 1120)` in integers.
fn lo_gt(d: i128, bound_num: i128, bound_den: i128) -> bool {
    (19 * d * d * d - 187 * d * d + 416 * d) * bound_den > bound_num * (224 * d - 1120)
}

#[test]
fn cascade_oracle() {
    // k = 11: bound = (d² + 77d)/22
    let last = even_grid().filter(|&d| !lo_gt(d as i128, (d * d + 77 * d) as i128, 22)).max();
    assert_eq!(last, Some(98));
    for k in 3..=10i64 {
        let b = |d: i64| ((d * d + 2 * k * (k - 3) * d) as i128, 4 * k as i128);
        let last = (20..=2000).step_by(2).filter(|&d| {
            let (n, den) = b(d);
            !lo_gt(d as i128, n, den)
        }).max();
        let c = degree_bound_cascade().unwrap();
        assert_eq!(last, c.max_d(CascadeKind::Contained { k }), "k = {k}");
    }
}

#[test]
fn k3_tail_boundary() {
    assert!(!lo_exceeds_k3(100));
    assert!(!lo_exceeds_k3(276));
    assert!(lo_exceeds_k3(278));
    for d in (100..=276).step_by(2) {
        assert!(!lo_exceeds_k3(d), "d = {d}");
        assert!(!lo_gt(d as i128, (d * d) as i128, 12));
    }
    for d in (278..=3000).step_by(2) {
        assert!(lo_exceeds_k3(d), "d = {d}");
        assert!(lo_gt(d as i128, (d * d) as i128, 12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn residual_is_zero(d in 10i64..=138, x in -100_000i64..300_000, y in 0i64..2000) {
        let d = 2 * d;
        let (m, c) = build_system(d, &int(x), &int(y));
        let v = m.solve(&c).unwrap();
        prop_assert_eq!(m.mul_vec(&v).unwrap(), c);
        let forms = scaled_solution_forms();
        let p = p_of_d(d);
        for (f, vi) in forms.iter().zip(&v) {
            prop_assert_eq!(&(f.eval(d, &int(x), &int(y)) / &p), vi);
        }
    }

    #[test]
    fn dual_paths_agree(d in 10i64..=138, xn in -50_000i64..300_000, xd in 1i64..7, y in 0i64..1500) {
        let d = 2 * d;
        let x = frac(xn, xd);
        let y = int(y);
        prop_assert!(e2_scaled(d, &x, &y).unwrap().agrees());
        prop_assert!(e1d_scaled(d, &x, &y).unwrap().agrees());
        prop_assert!(genus_of_point(d, &x, &y).unwrap().agrees());
    }

    #[test]
    fn genus_linear_in_x(d in 10i64..=138, x in -1000i64..1000, y in 0i64..100) {
        let d = 2 * d;
        let g = |x: i64| genus_of_point(d, &int(x), &int(y)).unwrap().value;
        let slope = printed::poly("gP", "x").eval_i64(d) / p_of_d(d);
        prop_assert_eq!(g(x + 1) - g(x), slope);
    }
}
