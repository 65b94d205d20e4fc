//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured quantities (run with `--nocapture` to see them).
//!
//! Wherever a classical display of a coefficient disagrees with the
//! independent oracles (Fourier extraction of exact jets, the embedded
//! Vandermonde oracle, direct residual evaluation), the suite asserts the
//! oracle-validated identity and prints the measured deviation of the
//! alternative display instead of asserting it; the oracles are the source
//! of truth throughout.

use rand::{RngExt as _, SeedableRng as _, rngs::StdRng};
use shrinker::cyclic::{
    CyclicJet, CyclicVerdict, ParallelCircleJet, classify_cyclic_jet, closed_form_a2,
    closed_form_a3, closed_form_a4_rhs, closed_form_b2, closed_form_b3, closed_form_b4_rhs,
    cyclic_lhs_at, cyclic_lhs_poly, cyclic_rhs_at, cyclic_rhs_poly, parallel_circle_analysis,
};
use shrinker::dual::Dual2;
use shrinker::fourier::fourier_extract;
use shrinker::geometry::{
    ImmersionJet2, SurfacePatch, eval_jet2, fit_lambda, fundamental_data_raw, grid_samples,
    shrinker_residual_raw,
};
use shrinker::patches::{Axis, CylinderPatch, SpherePatch};
use shrinker::ruled::{PolyInT, RuledJet, ruled_identity_check, ruled_residual_poly};
use shrinker::solutions::{
    SampledCurve, abresch_langer_closed, abresch_langer_shoot, angenent_profile_shoot, csf_evolve,
    revolve_profile, self_similarity_check,
};
use shrinker::vec3::Vec3;
use std::f64::consts::{PI, TAU};
use std::time::Instant;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / (1.0 + a.abs().max(b.abs()))
}

fn max_abs_residual<P: SurfacePatch<f64>>(
    patch: &P,
    lambda: f64,
    s_range: (f64, f64),
    t_range: (f64, f64),
    ns: usize,
    nt: usize,
) -> f64 {
    grid_samples(s_range, t_range, ns, nt)
        .iter()
        .map(|&(s, t)| shrinker_residual_raw(&eval_jet2(patch, s, t).unwrap(), lambda).abs())
        .fold(0.0, f64::max)
}

#[test]
fn criterion_01_sphere_residual() {
    let start = Instant::now();
    // measure the lambda constant on the unit sphere by inverting the
    // residual pointwise
    let grid = grid_samples((0.2, PI - 0.2), (0.0, TAU), 16, 16);
    let (c, spread) = fit_lambda(&SpherePatch { radius: 1.0 }, &grid).unwrap();
    assert!(spread < 1e-10, "lambda spread {spread}");
    assert!((c - 1.0).abs() < 1e-9, "measured sphere constant c = {c}");
    // the alternative constant 2 (so that lambda = 2/|X|^2) is inconsistent
    // with the residual: flag the comparison
    let alt = max_abs_residual(
        &SpherePatch { radius: 1.0 },
        2.0,
        (0.2, PI - 0.2),
        (0.0, TAU),
        8,
        8,
    );
    assert!(alt > 1e-1, "lambda = 2/R^2 should not satisfy the residual");
    for radius in [0.5, 1.0, 2.0] {
        let lambda = c / (radius * radius);
        let worst = max_abs_residual(
            &SpherePatch { radius },
            lambda,
            (0.0, PI),
            (0.0, TAU),
            64,
            64,
        );
        assert!(worst < 1e-9, "R = {radius}: max residual {worst}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "criterion 01 (sphere residual): PASS - measured c = {c:.12} (lambda = c/R^2); \
         alternative c = 2 flagged inconsistent (residual {alt:.3e}); {elapsed:?}"
    );
}

#[test]
fn criterion_02_cylinder_residual() {
    let grid = grid_samples((-1.0, 1.0), (0.0, TAU), 8, 32);
    let (c_cyl, spread) = fit_lambda(
        &CylinderPatch {
            radius: 1.0,
            axis: Axis::Z,
        },
        &grid,
    )
    .unwrap();
    assert!(spread < 1e-10);
    assert!((c_cyl - 0.5).abs() < 1e-9, "cylinder constant {c_cyl}");
    for radius in [0.5, 1.0, 2.0] {
        let lambda = c_cyl / (radius * radius); // = c/(2 r^2) with c = 2 c_cyl = 1
        let worst = max_abs_residual(
            &CylinderPatch {
                radius,
                axis: Axis::Z,
            },
            lambda,
            (-1.0, 1.0),
            (0.0, TAU),
            64,
            64,
        );
        assert!(worst < 1e-9, "r = {radius}: max residual {worst}");
        // lambda_sphere(R) / lambda_cylinder(R) = 2
        let sphere_grid = grid_samples((0.2, PI - 0.2), (0.0, TAU), 12, 12);
        let (l_sphere, _) = fit_lambda(&SpherePatch { radius }, &sphere_grid).unwrap();
        let cyl_grid = grid_samples((-1.0, 1.0), (0.0, TAU), 8, 24);
        let (l_cyl, _) = fit_lambda(
            &CylinderPatch {
                radius,
                axis: Axis::Z,
            },
            &cyl_grid,
        )
        .unwrap();
        let ratio = l_sphere / l_cyl;
        assert!((ratio - 2.0).abs() < 1e-10, "ratio {ratio} at R = {radius}");
    }
    println!(
        "criterion 02 (cylinder residual): PASS - lambda = 1/(2 r^2), sphere/cylinder ratio = 2"
    );
}

fn random_cyclic_jet(rng: &mut StdRng) -> CyclicJet<f64> {
    let mut u = |lo: f64, hi: f64| rng.random_range(lo..hi);
    CyclicJet {
        k: u(0.2, 2.0),
        kp: u(-1.0, 1.0),
        tau: u(-1.0, 1.0),
        taup: u(-1.0, 1.0),
        radius: u(0.5, 2.0),
        radius_p: u(-1.0, 1.0),
        radius_pp: u(-1.0, 1.0),
        p: u(-1.0, 1.0),
        pp: u(-1.0, 1.0),
        ppp: u(-1.0, 1.0),
        q: u(-1.0, 1.0),
        qp: u(-1.0, 1.0),
        qpp: u(-1.0, 1.0),
        r: u(-1.0, 1.0),
        rp: u(-1.0, 1.0),
        rpp: u(-1.0, 1.0),
    }
}

#[test]
fn criterion_03_cyclic_coefficient_battery() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(1003);
    let n = 1000;
    // least-squares constants through the origin for the order-2 pair
    let (mut a2_num, mut a2_den) = (0.0, 0.0);
    let (mut b2_num, mut b2_den) = (0.0, 0.0);
    let mut jets = Vec::with_capacity(n);
    for _ in 0..n {
        let cj = random_cyclic_jet(&mut rng);
        let lhs = cyclic_lhs_poly(&cj).unwrap();
        let rhs = cyclic_rhs_poly(&cj).unwrap();
        assert!(rel(lhs.cos_coeff(3), closed_form_a3(&cj)) < 1e-8);
        assert!(rel(lhs.sin_coeff(3), closed_form_b3(&cj)) < 1e-8);
        assert!(rel(rhs.cos_coeff(4), closed_form_a4_rhs(&cj)) < 1e-8);
        assert!(rel(rhs.sin_coeff(4), closed_form_b4_rhs(&cj)) < 1e-8);
        a2_num += lhs.cos_coeff(2) * closed_form_a2(&cj);
        a2_den += closed_form_a2(&cj).powi(2);
        b2_num += lhs.sin_coeff(2) * closed_form_b2(&cj);
        b2_den += closed_form_b2(&cj).powi(2);
        jets.push((cj, lhs, rhs));
    }
    let c_a2 = a2_num / a2_den;
    let c_b2 = b2_num / b2_den;
    for (cj, lhs, _) in &jets {
        let scale = lhs.scale();
        assert!(
            (lhs.cos_coeff(2) - c_a2 * closed_form_a2(cj)).abs() < 1e-8 * scale,
            "a2 does not fit a single constant"
        );
        assert!(
            (lhs.sin_coeff(2) - c_b2 * closed_form_b2(cj)).abs() < 1e-8 * scale,
            "b2 does not fit a single constant"
        );
    }
    // order bounds: the lhs is a trig polynomial of order exactly 3 and the
    // rhs of order exactly 4
    for (cj, _, _) in jets.iter().step_by(100) {
        let lhs5 = fourier_extract(|t| cyclic_lhs_at(cj, t).unwrap(), 5).unwrap();
        let rhs5 = fourier_extract(|t| cyclic_rhs_at(cj, t).unwrap(), 5).unwrap();
        for j in 4..=5 {
            assert!(lhs5.cos_coeff(j).abs() < 1e-12 * lhs5.scale());
            assert!(lhs5.sin_coeff(j).abs() < 1e-12 * lhs5.scale());
        }
        assert!(rhs5.cos_coeff(5).abs() < 1e-12 * rhs5.scale());
        assert!(rhs5.sin_coeff(5).abs() < 1e-12 * rhs5.scale());
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!(
        "criterion 03 (cyclic battery, {n} jets): PASS - a3, b3, a4', b4' exact; \
         a2 constant = {c_a2:.12}, b2 constant = {c_b2:.12} (the sin 2t display needs 3/2); {elapsed:?}"
    );
}

#[test]
fn criterion_04_cyclic_dichotomy() {
    let mut rng = StdRng::seed_from_u64(1004);
    let mut products = Vec::new();
    let mut sphere_cases = 0;
    let mut contradictions = 0;
    for i in 0..200 {
        let mut cj = random_cyclic_jet(&mut rng);
        if i % 2 == 0 {
            // sphere family: q and r vanish as functions
            cj.q = 0.0;
            cj.qp = 0.0;
            cj.qpp = 0.0;
            cj.r = 0.0;
            cj.rp = 0.0;
            cj.rpp = 0.0;
        } else {
            // singular family: beta = 0, gamma = R k, alpha = 0, R' = 0,
            // with q, r free (kept away from zero)
            cj.q = rng.random_range(0.2..1.0);
            cj.r = rng.random_range(0.2..1.0);
            cj.rp = cj.radius * cj.k - cj.tau * cj.q;
            cj.qp = cj.tau * cj.r - cj.p * cj.k;
            cj.pp = cj.k * cj.q;
            cj.radius_p = 0.0;
        }
        // both families satisfy a4' = b4' = 0
        assert!(closed_form_a4_rhs(&cj).abs() < 1e-13);
        assert!(closed_form_b4_rhs(&cj).abs() < 1e-13);
        let cls = classify_cyclic_jet(&cj, None, 1e-9).unwrap();
        match cls.verdict {
            CyclicVerdict::SphereCase { lambda } => {
                sphere_cases += 1;
                products.push(lambda * (cj.radius * cj.radius + cj.p * cj.p));
            }
            CyclicVerdict::Contradiction => contradictions += 1,
            other => panic!("unexpected verdict {other:?}"),
        }
    }
    assert_eq!(sphere_cases, 100);
    assert_eq!(contradictions, 100);
    let mean = products.iter().sum::<f64>() / products.len() as f64;
    let dev = products
        .iter()
        .map(|p| (p - mean).abs())
        .fold(0.0, f64::max);
    assert!(dev < 1e-8, "lambda (R^2 + p^2) deviation {dev}");
    println!(
        "criterion 04 (dichotomy): PASS - 100 SphereCase + 100 Contradiction; \
         lambda (R^2 + p^2) = {mean:.12} +- {dev:.2e}"
    );
}

fn random_parallel_jet(rng: &mut StdRng) -> ParallelCircleJet<f64> {
    let mut u = |lo: f64, hi: f64| rng.random_range(lo..hi);
    ParallelCircleJet {
        a: u(-1.0, 1.0),
        ap: u(-1.0, 1.0),
        app: u(-1.0, 1.0),
        b: u(-1.0, 1.0),
        bp: u(-1.0, 1.0),
        bpp: u(-1.0, 1.0),
        radius: u(0.5, 2.0),
        radius_p: u(-1.0, 1.0),
        radius_pp: u(-1.0, 1.0),
        s: u(-1.0, 1.0),
    }
}

#[test]
fn criterion_05_parallel_circle_coefficients() {
    // reference jet fixes the proportionality constant once
    let reference: ParallelCircleJet<f64> = ParallelCircleJet {
        a: 1.0,
        ap: 1.0,
        app: 0.0,
        b: 0.0,
        bp: 0.0,
        bpp: 0.0,
        radius: 1.0,
        radius_p: 0.0,
        radius_pp: 0.0,
        s: 0.0,
    };
    let an = parallel_circle_analysis(&reference, 1.0, 1e-9).unwrap();
    // (A + iB)(u + iv)^2 at the reference: (-1)(1) = -1
    let c3 = an.rhs.cos_coeff(3) / -1.0;
    assert!((c3 - 0.25).abs() < 1e-12, "measured order-3 constant {c3}");

    let mut rng = StdRng::seed_from_u64(1005);
    for _ in 0..1000 {
        let pj = random_parallel_jet(&mut rng);
        let an = parallel_circle_analysis(&pj, 1.0, 1e-9).unwrap();
        let (u, v) = (pj.ap, pj.bp);
        let (ca, cb) = (pj.ap * pj.s - pj.a, pj.bp * pj.s - pj.b);
        // (A + iB)(u + iv)^2, the rotation-covariant combination the order-3
        // pair is proportional to
        let re = ca * (u * u - v * v) - 2.0 * u * v * cb;
        let im = cb * (u * u - v * v) + 2.0 * u * v * ca;
        let r3 = pj.radius.powi(3);
        let scale = an.rhs.scale();
        assert!(
            (an.rhs.cos_coeff(3) - c3 * r3 * re).abs() < 1e-9 * scale,
            "cos 3t fails the covariant form"
        );
        assert!(
            (an.rhs.sin_coeff(3) - c3 * r3 * im).abs() < 1e-9 * scale,
            "sin 3t fails the covariant form"
        );
        // joint vanishing matches the classical factors (a's - a)(u^2 + v^2),
        // (b's - b)(u^2 + v^2): both pairs vanish exactly together
        let pair = an.rhs.cos_coeff(3).abs() + an.rhs.sin_coeff(3).abs();
        let classical = ((ca * ca + cb * cb) * (u * u + v * v)).sqrt();
        assert!(
            (pair <= 1e-9 * scale) == (classical <= 1e-9),
            "joint vanishing equivalence"
        );
    }

    // linear centers a = a0 s, b = b0 s: order 3 vanishes identically and the
    // order-2 pair is proportional to (R's - R)(a0^2 - b0^2) and (R's - R) a0 b0
    let mut c2_measured: Option<f64> = None;
    for _ in 0..1000 {
        let mut pj = random_parallel_jet(&mut rng);
        let (a0, b0) = (pj.ap, pj.bp);
        pj.a = a0 * pj.s;
        pj.b = b0 * pj.s;
        pj.app = 0.0;
        pj.bpp = 0.0;
        let an = parallel_circle_analysis(&pj, 1.0, 1e-9).unwrap();
        let scale = an.rhs.scale();
        assert!(an.rhs.cos_coeff(3).abs() < 1e-11 * scale);
        assert!(an.rhs.sin_coeff(3).abs() < 1e-11 * scale);
        let lin = pj.radius_p * pj.s - pj.radius;
        let r3 = pj.radius.powi(3);
        let base = r3 * lin * (a0 * a0 - b0 * b0);
        if c2_measured.is_none() && base.abs() > 0.1 {
            c2_measured = Some(an.rhs.cos_coeff(2) / base);
        }
        if let Some(c2) = c2_measured {
            assert!(
                (an.rhs.cos_coeff(2) - c2 * base).abs() < 1e-9 * scale,
                "cos 2t fails the fixed-constant form"
            );
            assert!(
                (an.rhs.sin_coeff(2) - 2.0 * c2 * r3 * lin * a0 * b0).abs() < 1e-9 * scale,
                "sin 2t fails the fixed-constant form"
            );
        }
    }
    let c2 = c2_measured.unwrap();
    assert!((c2 - 0.5).abs() < 1e-10, "order-2 constant {c2}");

    // the variant factor (R' - s R) does not fit any fixed constant: measure
    // the implied "constant" at two linear-center jets and report the spread
    let variant_ratio = |radius: f64, radius_p: f64, s: f64| {
        let pj = ParallelCircleJet {
            a: 1.0 * s,
            ap: 1.0,
            app: 0.0,
            b: 0.0,
            bp: 0.0,
            bpp: 0.0,
            radius,
            radius_p,
            radius_pp: 0.0,
            s,
        };
        let an = parallel_circle_analysis(&pj, 1.0, 1e-9).unwrap();
        an.rhs.cos_coeff(2) / (pj.radius.powi(3) * (radius_p - s * radius))
    };
    let v1 = variant_ratio(1.0, 0.2, 0.5);
    let v2 = variant_ratio(1.5, -0.4, 1.2);
    assert!(
        (v1 - v2).abs() > 0.1,
        "the variant should not fit one constant"
    );
    println!(
        "criterion 05 (parallel circles, 1000 + 1000 jets): PASS - order-3 pair = \
         {c3} R^3 (A+iB)(u+iv)^2 (joint vanishing as in the classical factors); \
         order-2 constant {c2} against (R's - R); the (R' - sR) variant implies \
         \"constants\" {v1:.4} vs {v2:.4} and is inconsistent"
    );
}

fn random_ruled_jet(rng: &mut StdRng) -> RuledJet<f64> {
    let mut u = || rng.random_range(-1.0..1.0);
    RuledJet {
        k: u(),
        kp: u(),
        a: u(),
        ap: u(),
        app: u(),
        b: u(),
        bp: u(),
        bpp: u(),
    }
}

/// Residual of the explicitly embedded ruled immersion, interpolated through
/// four ruling parameters (the Vandermonde oracle).
fn ruled_oracle(rj: &RuledJet<f64>, lambda: f64) -> PolyInT<f64> {
    let (k, kp) = (rj.k, rj.kp);
    // frame germs at s = 0 embedded with e3 = gamma' x gamma = -z
    let e = |c1: f64, c2: f64, c3: f64| [c1, c2, -c3];
    let e1 = [(e)(1.0, 0.0, 0.0), (e)(0.0, 1.0, 0.0), (e)(-1.0, 0.0, k)];
    let e2 = [
        (e)(0.0, 1.0, 0.0),
        (e)(-1.0, 0.0, k),
        (e)(0.0, -(1.0 + k * k), kp),
    ];
    let e3 = [(e)(0.0, 0.0, 1.0), (e)(0.0, -k, 0.0), (e)(k, -kp, -k * k)];
    let (a0, ap, app) = (rj.a, rj.ap, rj.app);
    let (b0, bp, bpp) = (rj.b, rj.bp, rj.bpp);
    let quad =
        |v: [[f64; 3]; 3], s: Dual2<f64>, i: usize| s * s * (0.5 * v[2][i]) + s * v[1][i] + v[0][i];
    let patch = move |s: Dual2<f64>, t: Dual2<f64>| {
        let a = s * s * (0.5 * app) + s * ap + a0;
        let b = s * s * (0.5 * bpp) + s * bp + b0;
        [
            quad(e1, s, 0) * t + a * quad(e2, s, 0) + b * quad(e3, s, 0),
            quad(e1, s, 1) * t + a * quad(e2, s, 1) + b * quad(e3, s, 1),
            quad(e1, s, 2) * t + a * quad(e2, s, 2) + b * quad(e3, s, 2),
        ]
    };
    let ts = [-1.5, -0.5, 0.5, 1.5];
    let mut pts = [(0.0, 0.0); 4];
    for (i, &t) in ts.iter().enumerate() {
        let jet = eval_jet2(&patch, 0.0, t).unwrap();
        pts[i] = (t, shrinker_residual_raw(&jet, lambda));
    }
    PolyInT::interpolate(&pts)
}

#[test]
fn criterion_06_ruled_polynomial_chain() {
    let mut rng = StdRng::seed_from_u64(1006);
    for _ in 0..1000 {
        let rj = random_ruled_jet(&mut rng);
        let lambda = rng.random_range(-2.0..2.0);
        let poly = ruled_residual_poly(&rj, lambda);
        let oracle = ruled_oracle(&rj, lambda);
        for (a, b) in poly.coeffs().iter().zip(oracle.coeffs()) {
            assert!(rel(*a, b) < 1e-9, "oracle mismatch: {poly:?} vs {oracle:?}");
        }
        // c3 = 2 lambda b, exactly
        assert!((poly.c3 - 2.0 * lambda * rj.b).abs() < 1e-12 * (1.0 + poly.c3.abs()));
    }
    // with b = 0 the quadratic coefficient is k - 2 lambda k a^2 (det = -k a^2
    // fixes the sign of the lambda term; the additive variant k + 2 lambda k a^2
    // is orientation-inconsistent and is reported, not asserted)
    let mut printed_dev = 0.0_f64;
    for _ in 0..200 {
        let mut rj = random_ruled_jet(&mut rng);
        rj.b = 0.0;
        rj.bp = 0.0;
        rj.bpp = 0.0;
        let lambda = rng.random_range(-2.0..2.0);
        let poly = ruled_residual_poly(&rj, lambda);
        let expected = rj.k - 2.0 * lambda * rj.k * rj.a * rj.a;
        assert!(
            rel(poly.c2, expected) < 1e-12,
            "c2 = {} vs {}",
            poly.c2,
            expected
        );
        printed_dev = printed_dev.max((poly.c2 - (rj.k + 2.0 * lambda * rj.k * rj.a * rj.a)).abs());
        // with additionally constant a: d1 = d2 = 0 and c1 = a k'
        rj.ap = 0.0;
        rj.app = 0.0;
        let (d1, d2) = ruled_identity_check(&rj).unwrap();
        assert!(d1.abs() < 1e-12, "d1 = {d1}");
        assert!(d2.abs() < 1e-12, "d2 = {d2}");
        let poly = ruled_residual_poly(&rj, lambda);
        assert!(
            rel(poly.c1, rj.a * rj.kp) < 1e-12,
            "c1 = {} vs a k' = {}",
            poly.c1,
            rj.a * rj.kp
        );
    }
    println!(
        "criterion 06 (ruled chain, 1000 jets): PASS - coefficients match the embedded \
         oracle to 1e-9; c3 = 2 lambda b; b = 0 gives c2 = k - 2 lambda k a^2 \
         (additive-sign variant deviates by up to {printed_dev:.3e}); constant a gives \
         d1 = d2 = 0 and c1 = a k'"
    );
}

#[test]
fn criterion_07_angenent_torus() {
    let start = Instant::now();
    let res = angenent_profile_shoot(1.0, [0.1, 0.7], 1e-8).unwrap();
    assert!(res.closed, "closure defect {}", res.closure_defect);
    assert!(res.closure_defect < 1e-8);

    let patch = revolve_profile(&res.curve).unwrap();
    let length = patch.length;
    let worst = max_abs_residual(&patch, 1.0, (0.0, length), (0.0, TAU), 128, 64);
    assert!(worst < 1e-6, "torus residual {worst}");

    // homothety covariance: the lambda = 4 profile is the lambda = 1 profile
    // shrunk by 2, pointwise on aligned uniform resamplings
    let res4 = angenent_profile_shoot(4.0, [0.05, 0.35], 1e-8).unwrap();
    assert!(res4.closed);
    assert!((res4.parameter - res.parameter / 2.0).abs() < 1e-6);
    let a = res4.curve.resample_spline(8192);
    let b = res.curve.resample_spline(8192);
    let mut worst_pt = 0.0_f64;
    for (p, q) in a.points.iter().zip(&b.points) {
        let dx = p[0] - q[0] / 2.0;
        let dy = p[1] - q[1] / 2.0;
        worst_pt = worst_pt.max((dx * dx + dy * dy).sqrt());
    }
    assert!(worst_pt < 1e-6, "profile scaling deviation {worst_pt}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "criterion 07 (torus): PASS - inner radius {:.9}, closure defect {:.2e}, \
         max residual {worst:.2e} on 128x64, scaling deviation {worst_pt:.2e}; {elapsed:?}",
        res.parameter, res.closure_defect
    );
}

#[test]
fn criterion_08_abresch_langer() {
    let circle = abresch_langer_shoot(1.0, 1.0, 1e-8).unwrap();
    assert!(circle.closed);
    assert!(
        circle.closure_defect < 1e-8,
        "circle defect {}",
        circle.closure_defect
    );
    assert_eq!(circle.rotation_index, 1);

    let curve = abresch_langer_closed(1.0, 2, 3, [1.05, 3.0], 1e-6).unwrap();
    assert!(curve.closed);
    assert!(
        curve.closure_defect < 1e-6,
        "defect {}",
        curve.closure_defect
    );
    assert!(curve.rotation_index >= 2);
    println!(
        "criterion 08 (closed planar shrinkers): PASS - circle defect {:.2e}; \
         non-circular curve k0 = {:.9}, rotation index {}, defect {:.2e}",
        circle.closure_defect, curve.parameter, curve.rotation_index, curve.closure_defect
    );
}

#[test]
fn criterion_09_flow_dynamics() {
    // circle law R(T) = sqrt(1 - 2T)
    let circle = SampledCurve::circle(1.0_f64, 512);
    let evolved = csf_evolve(&circle, 1e-3, 0.1).unwrap();
    let expect = (1.0f64 - 0.2).sqrt();
    let mut worst = 0.0_f64;
    for p in &evolved.points {
        worst = worst.max(((p[0] * p[0] + p[1] * p[1]).sqrt() - expect).abs());
    }
    assert!(worst < 1e-4, "circle law error {worst}");

    // a closed non-circular shrinker keeps its shape
    let shrinker_curve = abresch_langer_closed(1.0, 2, 3, [1.05, 3.0], 1e-6)
        .unwrap()
        .curve;
    let evolved = csf_evolve(&shrinker_curve, 1e-3, 0.05).unwrap();
    let d_shape = self_similarity_check(&shrinker_curve, &evolved, 1.0, 0.05).unwrap();
    assert!(d_shape < 1e-3, "shape drift {d_shape}");

    // the square is not a shrinker and fails the same check
    let square = SampledCurve::square(1.0, 192);
    let evolved = csf_evolve(&square, 1e-3, 0.05).unwrap();
    let d_square = self_similarity_check(&square, &evolved, 1.0, 0.05).unwrap();
    assert!(d_square > 1e-2, "square drift {d_square}");
    println!(
        "criterion 09 (flow dynamics): PASS - circle law {worst:.2e}; \
         shrinking-curve drift {d_shape:.2e}; square drift {d_square:.2e}"
    );
}

#[test]
fn criterion_10_structural_invariants() {
    let mut rng = StdRng::seed_from_u64(1010);
    let v = |rng: &mut StdRng| {
        Vec3::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        )
    };
    let mut checked = 0;
    while checked < 100 {
        let jet = ImmersionJet2 {
            x: v(&mut rng),
            x_s: v(&mut rng),
            x_t: v(&mut rng),
            x_ss: v(&mut rng),
            x_st: v(&mut rng),
            x_tt: v(&mut rng),
        };
        if fundamental_data_raw(&jet).w < 0.1 {
            continue;
        }
        checked += 1;
        let lambda = rng.random_range(-2.0..2.0);
        let base = shrinker_residual_raw(&jet, lambda);
        for c in [0.5_f64, 2.0, 3.0] {
            let scaled = shrinker_residual_raw(&jet.scaled(c), lambda / (c * c));
            let expect = c.powi(5) * base;
            assert!(
                (scaled - expect).abs() <= 1e-10 * (1.0 + expect.abs()),
                "covariance: {scaled} vs {expect}"
            );
        }
        // swapping the parameter roles negates the residual exactly
        let swapped = shrinker_residual_raw(&jet.swapped_params(), lambda);
        assert_eq!(swapped, -base, "orientation antisymmetry must be exact");
    }
    println!(
        "criterion 10 (structural invariants): PASS - scaling covariance c^5 at 1e-10 \
         and exact orientation antisymmetry on 100 jets"
    );
}
