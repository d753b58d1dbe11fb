//! Deliberately broken planners, used to prove the harness can fail.
//!
//! Each fixture violates exactly one contract so the corresponding check
//! fails while the others keep passing.

use crate::annulus::AnnulusSpec;
use crate::path::Path;
use crate::rule::{LocalRule, MotionPlanner};
use crate::sphere::{sphere_rule1, SphereSpec};
use crate::vector::{normalize, Vector};

fn circle() -> SphereSpec {
    SphereSpec::new(1).expect("m = 1")
}

fn rotate(v: &Vector, angle: f64) -> Vector {
    let (c, s) = (angle.cos(), angle.sin());
    let x = v.coords()[0];
    let y = v.coords()[1];
    Vector::new(vec![c * x - s * y, s * x + c * y]).expect("rotation of finite coords")
}

/// A circle planner whose single rule anchors the wrong goal: endpoint
/// checks fail with a visible witness.
pub fn broken_endpoint_planner() -> MotionPlanner {
    let good = sphere_rule1(&circle());
    let rule = LocalRule::new(
        "s1-broken",
        |_: &Vector, _: &Vector| true,
        move |a: &Vector, b: &Vector| {
            let skewed = rotate(b, 0.1);
            let target = normalize(&a.add(&skewed).scale(0.5)).unwrap_or_else(|_| skewed.clone());
            good.section(a, &target)
        },
    );
    let spec = circle();
    MotionPlanner::new(
        "S^1 (broken endpoints)",
        vec![rule],
        move |x: &Vector| spec.is_member(x),
        |x: &Vector| (x.norm() - 1.0).abs(),
    )
}

/// Plans straight segments through the plane, ignoring the obstacle:
/// membership checks fail on any pair whose segment crosses the clearance
/// disk.
pub fn straight_line_annulus_planner(spec: &AnnulusSpec) -> MotionPlanner {
    let spec = *spec;
    let rule = LocalRule::new(
        "straight",
        |_: &Vector, _: &Vector| true,
        |a: &Vector, b: &Vector| Path::segment(a, b),
    );
    MotionPlanner::new(
        format!("{} (straight-line)", spec.space_name()),
        vec![rule],
        move |z: &Vector| spec.contains(z),
        move |z: &Vector| (spec.clearance_radius() - z.norm()).max(0.0),
    )
}

/// Keeps only the geodesic rule: the exhaustive cover check finds the
/// antipodal pairs it cannot plan.
pub fn single_rule_sphere_planner() -> MotionPlanner {
    let spec = circle();
    MotionPlanner::new(
        "S^1 (rule 1 only)",
        vec![sphere_rule1(&spec)],
        move |x: &Vector| spec.is_member(x),
        |x: &Vector| (x.norm() - 1.0).abs(),
    )
}

/// Glues two constant halves without matching them: junction probes at
/// `t = 1/2` see the full gap between start and goal.
pub fn gapped_junction_planner() -> MotionPlanner {
    let spec = circle();
    let rule = LocalRule::new(
        "gapped",
        |_: &Vector, _: &Vector| true,
        |a: &Vector, b: &Vector| {
            let (a, b) = (a.clone(), b.clone());
            Ok(
                Path::from_fn(a.dim(), move |t| if t < 0.5 { a.clone() } else { b.clone() })
                    .with_breakpoints(vec![0.5]),
            )
        },
    );
    MotionPlanner::new(
        "S^1 (gapped junction)",
        vec![rule],
        move |x: &Vector| spec.is_member(x),
        |x: &Vector| (x.norm() - 1.0).abs(),
    )
}

/// Fixture registry for the command line.
pub fn by_name(name: &str, spec: &AnnulusSpec) -> Option<MotionPlanner> {
    match name {
        "broken-rule" => Some(broken_endpoint_planner()),
        "straight-line" => Some(straight_line_annulus_planner(spec)),
        "single-rule" => Some(single_rule_sphere_planner()),
        "gapped-junction" => Some(gapped_junction_planner()),
        _ => None,
    }
}

/// Names accepted by [`by_name`].
pub const FIXTURE_NAMES: &[&str] = &[
    "broken-rule",
    "straight-line",
    "single-rule",
    "gapped-junction",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::EPS_ASSERT;

    #[test]
    fn fixtures_still_honor_membership() {
        let planner = broken_endpoint_planner();
        assert!(planner.is_member(&Vector::new(vec![1.0, 0.0]).unwrap()));
        assert!(!planner.is_member(&Vector::new(vec![2.0, 0.0]).unwrap()));
    }

    #[test]
    fn broken_endpoint_misses_the_goal() {
        let planner = broken_endpoint_planner();
        let a = Vector::new(vec![1.0, 0.0]).unwrap();
        let b = Vector::new(vec![0.0, 1.0]).unwrap();
        let planned = planner.plan(&a, &b).unwrap();
        assert!(planned.path.eval(1.0).distance(&b) > EPS_ASSERT);
    }

    #[test]
    fn registry_resolves_all_names() {
        let spec = AnnulusSpec::new(0.3, 0.2).unwrap();
        for name in FIXTURE_NAMES {
            assert!(by_name(name, &spec).is_some(), "missing fixture {name}");
        }
        assert!(by_name("nope", &spec).is_none());
    }
}
