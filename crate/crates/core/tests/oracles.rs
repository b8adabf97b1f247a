//! Worked values and comparisons against implementations that share no code
//! with the library: Hamilton's product formula and the classical
//! Cayley-Dickson recursion on plain real arrays.

use hypercomplex::analysis::{
    associator, associator_formula, bracket, classify, conjugate, inverse, norm, solve, ClassKind,
    Side,
};
use hypercomplex::periodic::{
    derived_units, hamilton_residual, orthogonal_unit_power, periodic_params, periodic_rep,
    substituted_units, unit_power, Derived, Orthogonal, PeriodicVariant, Rho, Substituted,
};
use hypercomplex::representation::{
    act_row, mat_mul_nonstandard, rep_octonion, rep_quadratic_quaternion, rep_sedenion, Mat2,
};
use hypercomplex::sampling::{random_real_element, trial_rng};
use hypercomplex::scalar::{real, I, ONE, ZERO};
use hypercomplex::{
    basis_product, cd_product, make_spec, multiply, pair_to_units, units_to_pair, AlgebraError,
    AlgebraSpec, Branch, Element, Family, PairView, Scalar,
};

fn spec(family: Family, p: f64, q: f64) -> AlgebraSpec {
    make_spec(family, real(p), real(q), Branch::Upper).unwrap()
}

fn e(dim: usize, i: usize) -> Element {
    Element::unit(dim, i).unwrap()
}

fn el(coeffs: &[f64]) -> Element {
    Element::from_real(coeffs).unwrap()
}

fn conj_classic(x: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = x.iter().map(|v| -v).collect();
    out[0] = x[0];
    out
}

/// `(a, b)(c, d) = (ac − d̄b, da + bc̄)` on real coordinate arrays.
fn cd_classic(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    if n == 1 {
        return vec![x[0] * y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cd_classic(a, c);
    let db = cd_classic(&conj_classic(d), b);
    let da = cd_classic(d, a);
    let bc = cd_classic(b, &conj_classic(c));
    let mut out: Vec<f64> = ac.iter().zip(&db).map(|(u, v)| u - v).collect();
    out.extend(da.iter().zip(&bc).map(|(u, v)| u + v));
    out
}

fn hamilton(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn real_parts(x: &Element) -> Vec<f64> {
    x.coeffs().iter().map(|c| c.re).collect()
}

#[test]
fn hamilton_formula_matches_q01() {
    let s = spec(Family::Quaternion, 0.0, 1.0);
    let mut rng = trial_rng(11, 0);
    for _ in 0..200 {
        let x = random_real_element(&mut rng, 4);
        let y = random_real_element(&mut rng, 4);
        let want = hamilton(
            real_parts(&x).try_into().unwrap(),
            real_parts(&y).try_into().unwrap(),
        );
        assert!(multiply(&s, &x, &y).unwrap().residual(&el(&want)) < 1e-14);
    }
}

#[test]
fn classic_doubling_matches_every_dimension_at_p0_q1() {
    for family in [
        Family::Quadratic,
        Family::Quaternion,
        Family::Octonion,
        Family::Sedenion,
    ] {
        let s = spec(family, 0.0, 1.0);
        let dim = s.dim();
        for i in 0..dim {
            for j in 0..dim {
                let want = cd_classic(&real_parts(&e(dim, i)), &real_parts(&e(dim, j)));
                assert_eq!(
                    basis_product(&s, i, j).unwrap(),
                    el(&want),
                    "{family:?} e{i}e{j}"
                );
            }
        }
        let mut rng = trial_rng(12, dim as u64);
        for _ in 0..50 {
            let x = random_real_element(&mut rng, dim);
            let y = random_real_element(&mut rng, dim);
            let want = cd_classic(&real_parts(&x), &real_parts(&y));
            assert!(multiply(&s, &x, &y).unwrap().residual(&el(&want)) < 1e-13);
        }
    }
}

#[test]
fn worked_products() {
    assert_eq!(
        basis_product(&spec(Family::Octonion, 0.0, 1.0), 3, 4).unwrap(),
        e(8, 7)
    );
    assert!(basis_product(&spec(Family::Quaternion, 0.0, 0.0), 1, 2)
        .unwrap()
        .is_zero());
    let c = spec(Family::Quadratic, 0.0, 1.0);
    let prod = multiply(&c, &el(&[1.0, 1.0]), &el(&[1.0, -1.0])).unwrap();
    assert_eq!(prod, el(&[2.0, 0.0]));
    let q = spec(Family::Quaternion, 0.0, 1.0);
    assert_eq!(multiply(&q, &e(4, 2), &e(4, 1)).unwrap(), -&e(4, 3));
    let dual = spec(Family::Quadratic, 0.0, 0.0);
    assert!(basis_product(&dual, 1, 1).unwrap().is_zero());
    let general = spec(Family::Quadratic, 0.7, -1.9);
    assert_eq!(basis_product(&general, 1, 1).unwrap(), el(&[1.9, -0.7]));
}

#[test]
fn worked_doubling() {
    let (p, q) = (0.4, 2.5);
    let o = spec(Family::Quaternion, p, q);
    let adj = PairView::adjoined(2);
    let sq = cd_product(&o, &adj, &adj).unwrap();
    assert!(sq.first.residual(&el(&[-q, 0.0])) < 1e-15);
    assert!(sq.second.residual(&el(&[-p, 0.0])) < 1e-15);

    let o = spec(Family::Octonion, 0.0, 1.0);
    let e1 = PairView::new(e(4, 1), Element::zero(4)).unwrap();
    let out = cd_product(&o, &e1, &PairView::adjoined(4)).unwrap();
    assert_eq!(out.to_coords(), e(8, 5));
}

#[test]
fn worked_transforms() {
    let q = spec(Family::Quaternion, 0.0, 1.0);
    let x = el(&[0.1, -0.2, 0.3, 0.4]);
    assert_eq!(
        pair_to_units(&q, &PairView::from_coords(&x).unwrap()).unwrap(),
        x
    );
    let g = make_spec(
        Family::Quaternion,
        Scalar::new(0.3, 0.1),
        real(1.7),
        Branch::Upper,
    )
    .unwrap();
    let only_x3 = PairView::new(Element::zero(2), el(&[0.0, 2.0])).unwrap();
    let units = pair_to_units(&g, &only_x3).unwrap();
    let s = g.sqrt_neg_d();
    assert!((units.coeff(3) - 2.0 * s).norm() < 1e-15);
    let degenerate = spec(Family::Quaternion, 2.0, 1.0);
    assert!(matches!(
        units_to_pair(&degenerate, &x),
        Err(AlgebraError::SingularParameter { .. })
    ));
    let sed = spec(Family::Sedenion, 0.5, 1.0);
    let pair = PairView::identity(8);
    assert_eq!(
        pair_to_units(&sed, &pair),
        Err(AlgebraError::UnsupportedTransform)
    );
}

#[test]
fn worked_norms_and_divisions() {
    let (p, q) = (0.6, -1.3);
    let c = spec(Family::Quadratic, p, q);
    let (x0, x1) = (0.8, -0.45);
    let want = x0 * x0 - p * x0 * x1 + q * x1 * x1;
    assert!((norm(&c, &el(&[x0, x1])).unwrap() - want).norm() < 1e-15);
    let h = spec(Family::Quaternion, 0.0, 1.0);
    assert!((norm(&h, &el(&[1.0, 2.0, -3.0, 0.5])).unwrap() - 14.25).norm() < 1e-14);

    let c01 = spec(Family::Quadratic, 0.0, 1.0);
    assert_eq!(inverse(&c01, &e(2, 1)).unwrap(), -&e(2, 1));
    let dual = spec(Family::Quadratic, 0.0, 0.0);
    assert!(matches!(
        inverse(&dual, &e(2, 1)),
        Err(AlgebraError::DegenerateNorm { .. })
    ));

    let x = solve(&h, &e(4, 1), &e(4, 3), Side::Left).unwrap();
    assert!(multiply(&h, &e(4, 1), &x).unwrap().residual(&e(4, 3)) < 1e-15);
    let o00 = spec(Family::Octonion, 0.0, 0.0);
    assert!(solve(&o00, &e(8, 1), &e(8, 0), Side::Left).is_err());
    let conj = conjugate(&spec(Family::Octonion, 0.3, 1.0), &e(8, 5)).unwrap();
    let mut want = vec![0.0; 8];
    want[0] = -0.3;
    want[5] = -1.0;
    assert_eq!(conj, el(&want));
}

#[test]
fn worked_brackets_and_associators() {
    let h = spec(Family::Quaternion, 0.0, 1.0);
    let b = bracket(&h, 1, 2).unwrap();
    assert_eq!(b.commutator, e(4, 3).scale(real(2.0)));
    assert!(b.anticommutator.is_zero());
    let b = bracket(&spec(Family::Octonion, 0.0, 0.0), 1, 2).unwrap();
    assert!(b.commutator.is_zero() && b.anticommutator.is_zero());

    let o = spec(Family::Octonion, 0.0, 1.0);
    let want = e(8, 7).scale(real(2.0));
    assert_eq!(associator(&o, &e(8, 1), &e(8, 2), &e(8, 4)).unwrap(), want);
    assert_eq!(associator_formula(&o, 1, 2, 4).unwrap(), want);
    let p = 1.3;
    let d0 = spec(Family::Octonion, p, p * p / 4.0);
    for (i, j, k) in [(1, 2, 4), (3, 5, 6), (7, 7, 2)] {
        assert!(associator_formula(&d0, i, j, k).unwrap().max_abs() < 1e-12);
    }
}

#[test]
fn worked_classification() {
    assert_eq!(classify(ZERO, ONE).kind, ClassKind::Division);
    assert_eq!(classify(ZERO, -ONE).kind, ClassKind::Split);
    assert_eq!(classify(real(2.0), ONE).kind, ClassKind::NilDegenerate);
    assert_eq!(classify(I, ONE).kind, ClassKind::Split);
    let minors = classify(real(1.0), real(2.0)).minors;
    // −D = 7/4, so the minors are powers of 7/4.
    for (m, v) in minors.iter().enumerate() {
        assert!(
            (v - real(1.75f64.powi(m as i32))).norm() < 1e-12,
            "minor {m}: {v}"
        );
    }
}

#[test]
fn worked_representations() {
    let r = rep_quadratic_quaternion(ZERO, ONE, Branch::Upper).unwrap();
    assert_eq!(r.mats[1], Mat2::from_scalars([[I, ZERO], [ZERO, -I]]));
    let (p, q) = (Scalar::new(0.2, 0.3), real(-0.8));
    let r = rep_quadratic_quaternion(p, q, Branch::Lower).unwrap();
    assert_eq!(r.mats[2], Mat2::from_scalars([[ZERO, ONE], [-q, -p]]));

    let oct = rep_octonion();
    let h = &oct.coeff_spec;
    let q0 = el(&[0.5, -1.0, 2.0, 0.25]);
    let q4 = el(&[-0.75, 0.0, 1.5, -2.0]);
    let k = e(4, 3);
    let out = act_row(
        &PairView::new(q0.clone(), q4.clone()).unwrap(),
        &oct.mats[7],
        h,
    )
    .unwrap();
    assert_eq!(out.first, multiply(h, &k, &q4).unwrap());
    assert_eq!(out.second, multiply(h, &k, &q0).unwrap());

    let sed = rep_sedenion();
    let o = &sed.coeff_spec;
    let m = |a: usize, b: usize| mat_mul_nonstandard(&sed.mats[a], &sed.mats[b], o).unwrap();
    assert_eq!(m(1, 8), sed.mats[9]);
    assert_eq!(m(9, 1), sed.mats[8]);
    let minus_id = Mat2::identity(8).scale(-ONE);
    for u in 1..16 {
        assert_eq!(m(u, u), minus_id, "R(e{u})^2");
    }
    for u in 1..8 {
        let mo = mat_mul_nonstandard(&oct.mats[u], &oct.mats[u], h).unwrap();
        assert_eq!(mo, Mat2::identity(4).scale(-ONE));
    }
}

#[test]
fn worked_periodic_values() {
    let (p, q) = periodic_params(Rho::I, 1.0);
    assert!(p.norm() < 1e-15 && (q + 1.0).norm() < 1e-15);
    assert_eq!(unit_power(Rho::One, 1.0, 1.0).unwrap(), el(&[0.0, 1.0]));
    for rho in [Rho::One, Rho::I] {
        assert!(
            unit_power(rho, 0.7, 0.0)
                .unwrap()
                .residual(&el(&[1.0, 0.0]))
                < 1e-15
        );
    }
    let x = orthogonal_unit_power(1, 1.0, Orthogonal::Q1).unwrap();
    assert!(x.residual(&e(4, 1)) < 1e-15);

    let u1 = periodic_rep(PeriodicVariant::U1, 0.6);
    let c = (std::f64::consts::FRAC_PI_2 * 0.6).cos();
    assert!(u1.mats[2].residual(&Mat2::from_scalars([[ZERO, ONE], [-ONE, real(2.0 * c)]])) < 1e-15);
    let u1 = periodic_rep(PeriodicVariant::U1, 1.0);
    assert!(u1.mats[1].residual(&Mat2::from_scalars([[I, ZERO], [ZERO, -I]])) < 1e-15);

    let e1 = substituted_units(Substituted::E1, 1.0).unwrap();
    assert!(e1.mats[2].residual(&Mat2::from_scalars([[ZERO, ONE], [-ONE, ZERO]])) < 1e-15);
    assert_eq!(e1.mats[0], Mat2::identity(1));
    let h = derived_units(Derived::Hamilton, 1.0).unwrap();
    assert!(hamilton_residual(&h.primary) < 1e-15);
}
