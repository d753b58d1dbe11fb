//! Property tests for the geometric core and the shipped planners.

use proptest::prelude::*;

use tcplan::{
    annulus_planner, annulus_retraction, concat2, normalize, polyline_length, sample_path,
    sphere_planner, sphere_rule1, sphere_rule2, star_planner, tangent_field_nu, AnnulusSpec, Path,
    SphereSpec, StarDomain, Vector, EPS_PREDICATE,
};

fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-100.0..100.0f64, dim).prop_map(|c| Vector::new(c).unwrap())
}

fn any_vector() -> impl Strategy<Value = Vector> {
    (1usize..=6).prop_flat_map(vector)
}

fn even_vector() -> impl Strategy<Value = Vector> {
    (1usize..=3).prop_flat_map(|m| vector(2 * m))
}

fn unit_vector(dim: usize) -> impl Strategy<Value = Vector> {
    vector(dim).prop_filter_map("norm above predicate threshold", |v| normalize(&v).ok())
}

/// Piecewise-linear path through the waypoints, with the natural uniform
/// schedule and explicit breakpoints. Small coordinates keep speeds low
/// enough for the absolute junction tolerance.
fn polyline(waypoints: Vec<Vector>) -> Path {
    let k = waypoints.len();
    assert!(k >= 2);
    let dim = waypoints[0].dim();
    let breakpoints: Vec<f64> = (1..k - 1).map(|i| i as f64 / (k - 1) as f64).collect();
    Path::from_fn(dim, move |t| {
        let scaled = t * (k - 1) as f64;
        let i = (scaled.floor() as usize).min(k - 2);
        Vector::lerp(&waypoints[i], &waypoints[i + 1], scaled - i as f64)
    })
    .with_breakpoints(breakpoints)
}

fn waypoints(dim: usize, count: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(
        prop::collection::vec(-1.0..1.0f64, dim).prop_map(|c| Vector::new(c).unwrap()),
        count,
    )
}

proptest! {
    #[test]
    fn normalize_returns_unit_vectors(v in any_vector()) {
        prop_assume!(v.norm() > EPS_PREDICATE);
        let u = normalize(&v).unwrap();
        prop_assert!((u.norm() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn tangent_field_is_orthogonal_isometry(v in even_vector()) {
        let t = tangent_field_nu(&v).unwrap();
        let scale = v.norm().max(1.0);
        prop_assert!(t.dot(&v).abs() <= 1e-9 * scale * scale);
        prop_assert!((t.norm() - v.norm()).abs() <= 1e-9 * scale);
    }

    #[test]
    fn concat_is_continuous_at_every_breakpoint(
        (dim, pts) in (2usize..=3).prop_flat_map(|d| (Just(d), waypoints(d, 5)))
    ) {
        prop_assert_eq!(dim, pts[0].dim());
        let p = polyline(pts[..3].to_vec());
        // q starts exactly where p ends, so the junction is admissible.
        let q = polyline(vec![p.eval(1.0), pts[3].clone(), pts[4].clone()]);
        let c = concat2(p, q).unwrap();
        let h = 1e-8;
        for &b in c.breakpoints() {
            let gap = c.eval(b - h).distance(&c.eval(b + h));
            prop_assert!(gap <= 1e-6, "gap {gap} at breakpoint {b}");
        }
    }

    #[test]
    fn sample_path_hits_the_endpoints_exactly(
        pts in waypoints(2, 4),
        n in 2usize..50
    ) {
        let p = polyline(pts);
        let samples = sample_path(&p, n);
        prop_assert_eq!(samples.len(), n);
        prop_assert_eq!(samples[0].clone(), p.eval(0.0));
        prop_assert_eq!(samples[n - 1].clone(), p.eval(1.0));
    }

    #[test]
    fn polyline_length_grows_under_nested_refinement(
        pts in waypoints(3, 4),
        n in 2usize..200
    ) {
        let p = polyline(pts);
        // 2n - 1 points keep every old parameter and split each interval.
        let coarse = polyline_length(&p, n);
        let fine = polyline_length(&p, 2 * n - 1);
        prop_assert!(fine >= coarse - 1e-9, "fine {fine} < coarse {coarse}");
    }

    #[test]
    fn geodesic_reverses_symmetrically(
        (a, b, t) in (unit_vector(2), unit_vector(2), 0.0..=1.0f64)
    ) {
        prop_assume!(a.add(&b).norm() > 0.1);
        let rule = sphere_rule1(&SphereSpec::new(1).unwrap());
        let forward = rule.section(&a, &b).unwrap();
        let backward = rule.section(&b, &a).unwrap();
        let gap = forward.eval(t).distance(&backward.eval(1.0 - t));
        prop_assert!(gap <= 1e-9, "reversal gap {gap} at t = {t}");
    }

    #[test]
    fn sphere_cover_never_misses_a_pair(
        (a, b) in (unit_vector(4), unit_vector(4))
    ) {
        let spec = SphereSpec::new(2).unwrap();
        let covered = sphere_rule1(&spec).admits(&a, &b) || sphere_rule2(&spec).admits(&a, &b);
        prop_assert!(covered);
    }

    #[test]
    fn sphere_paths_stay_on_the_sphere(
        (a, b) in (unit_vector(2), unit_vector(2)),
        steps in 1usize..100
    ) {
        let planner = sphere_planner(&SphereSpec::new(1).unwrap());
        let planned = planner.plan(&a, &b).unwrap();
        for i in 0..=steps {
            let p = planned.path.eval(i as f64 / steps as f64);
            prop_assert!((p.norm() - 1.0).abs() <= 1e-9);
        }
        // The exactly-antipodal pair exercises the detour rule.
        let detour = planner.plan(&a, &a.neg()).unwrap();
        prop_assert_eq!(detour.rule_index, 2);
        for i in 0..=steps {
            let p = detour.path.eval(i as f64 / steps as f64);
            prop_assert!((p.norm() - 1.0).abs() <= 1e-9);
        }
    }

    #[test]
    fn planner_endpoints_meet_the_contract(
        (a_angle, b_angle, ra, rb) in (0.0..std::f64::consts::TAU, 0.0..std::f64::consts::TAU, 0.6..5.0f64, 0.6..5.0f64)
    ) {
        let a = Vector::new(vec![ra * a_angle.cos(), ra * a_angle.sin()]).unwrap();
        let b = Vector::new(vec![rb * b_angle.cos(), rb * b_angle.sin()]).unwrap();

        let planner = annulus_planner(&AnnulusSpec::new(0.3, 0.2).unwrap());
        let planned = planner.plan(&a, &b).unwrap();
        prop_assert!(planned.path.eval(0.0).distance(&a) <= 1e-9);
        prop_assert!(planned.path.eval(1.0).distance(&b) <= 1e-9);

        let disk = star_planner(&StarDomain::unit_disk());
        let (sa, sb) = (a.scale(0.19), b.scale(0.19));
        let planned = disk.plan(&sa, &sb).unwrap();
        prop_assert!(planned.path.eval(0.0).distance(&sa) <= 1e-9);
        prop_assert!(planned.path.eval(1.0).distance(&sb) <= 1e-9);
    }

    #[test]
    fn annulus_domains_are_bitwise_pullbacks(
        (a_angle, b_angle, ra, rb) in (0.0..std::f64::consts::TAU, 0.0..std::f64::consts::TAU, 0.6..5.0f64, 0.6..5.0f64)
    ) {
        let spec = AnnulusSpec::new(0.3, 0.2).unwrap();
        let planner = annulus_planner(&spec);
        let circle = tcplan::circle_planner(spec.rho());
        let data = annulus_retraction(&spec);

        let z1 = Vector::new(vec![ra * a_angle.cos(), ra * a_angle.sin()]).unwrap();
        let z2 = Vector::new(vec![rb * b_angle.cos(), rb * b_angle.sin()]).unwrap();
        for i in 0..2 {
            let direct = planner.rules()[i].admits(&z1, &z2);
            let pulled = circle.rules()[i].admits(&data.apply_g(&z1), &data.apply_g(&z2));
            prop_assert_eq!(direct, pulled);
        }
    }
}

/// Chord sums need not be monotone when the finer partition skips a corner:
/// a kinked path measured with 3 points (hitting the kink) is longer than
/// with 6 points (missing it). That is why the refinement property above
/// doubles intervals, not points.
#[test]
fn naive_point_doubling_can_shorten_a_kinked_polyline() {
    let kinked = polyline(vec![
        Vector::new(vec![0.0, 0.0]).unwrap(),
        Vector::new(vec![0.5, 1.0]).unwrap(),
        Vector::new(vec![1.0, 0.0]).unwrap(),
    ]);
    let with_kink = polyline_length(&kinked, 3);
    let without_kink = polyline_length(&kinked, 6);
    assert!(without_kink < with_kink - 0.1);
}
