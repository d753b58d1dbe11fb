//! The two-rule planner on odd-dimensional unit spheres.
//!
//! Spheres are not contractible, so no single continuous rule can plan every
//! pair; two rules suffice on odd spheres and that count is minimal. Rule 1
//! covers non-antipodal pairs with the shortest geodesic, traced by
//! normalizing the straight-line interpolant. Rule 2 covers pairs of
//! distinct points by flying to the goal's antipode and finishing with a
//! detour whose waypoint comes from a nowhere-zero tangent field. That is
//! what restricts the construction to odd spheres: even ones admit no such
//! field.
//!
//! Everything here works in ambient dimension `2m`, i.e. on the sphere
//! `S^(2m-1)`.

use crate::error::{Error, Result};
use crate::path::{concat2, Path};
use crate::rule::{LocalRule, MotionPlanner};
use crate::tolerance::{EPS_ASSERT, EPS_PREDICATE};
use crate::vector::{project_unit, tangent_field_nu, Vector};

/// Selects the sphere `S^(2m-1)` sitting in `R^(2m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SphereSpec {
    m: usize,
}

impl SphereSpec {
    pub fn new(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidSphereSpec);
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.m
    }

    pub fn sphere_dim(&self) -> usize {
        2 * self.m - 1
    }

    pub fn space_name(&self) -> String {
        format!("S^{}", self.sphere_dim())
    }

    pub fn is_member(&self, x: &Vector) -> bool {
        x.dim() == self.ambient_dim() && (x.norm() - 1.0).abs() <= EPS_ASSERT
    }
}

fn check_ambient(spec: &SphereSpec, a: &Vector, b: &Vector) -> Result<()> {
    for x in [a, b] {
        if x.dim() != spec.ambient_dim() {
            return Err(Error::DimensionMismatch {
                left: spec.ambient_dim(),
                right: x.dim(),
            });
        }
    }
    Ok(())
}

/// The normalized-interpolant path `t -> ((1-t)a + tb) / ‖(1-t)a + tb‖`.
///
/// For non-antipodal unit vectors this is the shortest geodesic from `a` to
/// `b`. The interpolant's norm never drops below `‖a + b‖ / 2`, so only an
/// exactly-degenerate pair can fail, and it fails here at construction.
fn geodesic_path(a: &Vector, b: &Vector) -> Result<Path> {
    // Surfaces NearZeroVector for exactly antipodal input instead of letting
    // the midpoint evaluation blow up later.
    project_unit(&Vector::lerp(a, b, 0.5))?;
    let (a, b) = (a.clone(), b.clone());
    Ok(Path::from_fn(a.dim(), move |t| {
        project_unit(&Vector::lerp(&a, &b, t)).expect("interpolant of a non-antipodal pair")
    }))
}

/// Rule 1: shortest geodesics on the non-antipodal domain.
pub fn sphere_rule1(spec: &SphereSpec) -> LocalRule {
    let spec = *spec;
    LocalRule::new(
        "s1",
        move |a: &Vector, b: &Vector| {
            a.dim() == spec.ambient_dim()
                && b.dim() == spec.ambient_dim()
                && a.add(b).norm() > EPS_PREDICATE
        },
        move |a: &Vector, b: &Vector| {
            check_ambient(&spec, a, b)?;
            geodesic_path(a, b)
        },
    )
}

/// The detour from `a` to its antipode through the tangent direction: two
/// geodesic quarters `a -> nu(a) -> -a`, glued at `t = 1/2`.
///
/// `nu(a)` is orthogonal to both endpoints, so neither quarter is antipodal
/// and the construction never degenerates.
pub fn alpha_detour(spec: &SphereSpec, a: &Vector) -> Result<Path> {
    if a.dim() != spec.ambient_dim() {
        return Err(Error::DimensionMismatch {
            left: spec.ambient_dim(),
            right: a.dim(),
        });
    }
    let norm = a.norm();
    if (norm - 1.0).abs() > EPS_ASSERT {
        return Err(Error::NotOnSphere {
            norm,
            tolerance: EPS_ASSERT,
        });
    }
    let waypoint = tangent_field_nu(a)?;
    concat2(geodesic_path(a, &waypoint)?, geodesic_path(&waypoint, &a.neg())?)
}

/// Rule 2: fly to the goal's antipode, then take the tangent-field detour
/// to the goal. Defined whenever start and goal differ.
pub fn sphere_rule2(spec: &SphereSpec) -> LocalRule {
    let spec = *spec;
    LocalRule::new(
        "s2",
        move |a: &Vector, b: &Vector| {
            a.dim() == spec.ambient_dim()
                && b.dim() == spec.ambient_dim()
                && a.sub(b).norm() > EPS_PREDICATE
        },
        move |a: &Vector, b: &Vector| {
            check_ambient(&spec, a, b)?;
            let minus_b = b.neg();
            concat2(geodesic_path(a, &minus_b)?, alpha_detour(&spec, &minus_b)?)
        },
    )
}

/// The optimal two-rule planner on `S^(2m-1)`: geodesics where possible,
/// the detour rule everywhere else.
pub fn sphere_planner(spec: &SphereSpec) -> MotionPlanner {
    let spec = *spec;
    MotionPlanner::new(
        spec.space_name(),
        vec![sphere_rule1(&spec), sphere_rule2(&spec)],
        move |x: &Vector| spec.is_member(x),
        move |x: &Vector| {
            if x.dim() != spec.ambient_dim() {
                return f64::INFINITY;
            }
            (x.norm() - 1.0).abs()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn v(coords: &[f64]) -> Vector {
        Vector::new(coords.to_vec()).unwrap()
    }

    fn s1() -> SphereSpec {
        SphereSpec::new(1).unwrap()
    }

    #[test]
    fn spec_rejects_zero() {
        assert!(SphereSpec::new(0).is_err());
        assert_eq!(s1().ambient_dim(), 2);
        assert_eq!(SphereSpec::new(2).unwrap().sphere_dim(), 3);
    }

    #[test]
    fn rule1_midpoint_of_quarter_geodesic() {
        let rule = sphere_rule1(&s1());
        let path = rule.section(&v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap();
        let mid = path.eval(0.5);
        let half_sqrt2 = std::f64::consts::SQRT_2 / 2.0;
        assert_relative_eq!(mid.coords()[0], half_sqrt2, epsilon = 1e-15);
        assert_relative_eq!(mid.coords()[1], half_sqrt2, epsilon = 1e-15);
    }

    #[test]
    fn rule1_constant_on_equal_endpoints() {
        let rule = sphere_rule1(&s1());
        let a = v(&[0.6, 0.8]);
        let path = rule.section(&a, &a).unwrap();
        for i in 0..=8 {
            let p = path.eval(i as f64 / 8.0);
            assert!(p.distance(&a) <= 1e-15);
        }
    }

    #[test]
    fn rule1_domain_excludes_antipodes() {
        let rule = sphere_rule1(&s1());
        assert!(!rule.admits(&v(&[1.0, 0.0]), &v(&[-1.0, 0.0])));
        assert!(rule.admits(&v(&[1.0, 0.0]), &v(&[0.0, 1.0])));
    }

    #[test]
    fn rule1_section_rejects_exact_antipodes() {
        let rule = sphere_rule1(&s1());
        let err = rule.section(&v(&[1.0, 0.0]), &v(&[-1.0, 0.0])).unwrap_err();
        assert!(matches!(err, Error::NearZeroVector { .. }));
    }

    #[test]
    fn alpha_passes_through_the_tangent_waypoint() {
        let spec = s1();
        let path = alpha_detour(&spec, &v(&[1.0, 0.0])).unwrap();
        assert_eq!(path.eval(0.0), v(&[1.0, 0.0]));
        assert_eq!(path.eval(1.0), v(&[-1.0, 0.0]));
        let mid = path.eval(0.5);
        assert_relative_eq!(mid.coords()[0], 0.0, epsilon = 1e-15);
        assert_relative_eq!(mid.coords()[1], 1.0, epsilon = 1e-15);

        let other = alpha_detour(&spec, &v(&[0.0, 1.0])).unwrap();
        let mid = other.eval(0.5);
        assert_relative_eq!(mid.coords()[0], -1.0, epsilon = 1e-15);
        assert_relative_eq!(mid.coords()[1], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn alpha_rejects_off_sphere_points() {
        let err = alpha_detour(&s1(), &v(&[2.0, 0.0])).unwrap_err();
        assert!(matches!(err, Error::NotOnSphere { .. }));
    }

    #[test]
    fn rule2_antipodal_pair_hand_values() {
        let rule = sphere_rule2(&s1());
        let a = v(&[1.0, 0.0]);
        let b = v(&[-1.0, 0.0]);
        let path = rule.section(&a, &b).unwrap();
        // First half is constant at a (the goal's antipode is the start);
        // at t = 3/4 the detour sits on the tangent waypoint.
        assert_eq!(path.eval(0.0), a);
        assert!(path.eval(0.25).distance(&a) <= 1e-15);
        let p = path.eval(0.75);
        assert_relative_eq!(p.coords()[0], 0.0, epsilon = 1e-15);
        assert_relative_eq!(p.coords()[1], 1.0, epsilon = 1e-15);
        assert_eq!(path.eval(1.0), b);
    }

    #[test]
    fn rule2_endpoints_hold_for_generic_pairs() {
        let rule = sphere_rule2(&s1());
        for k in 1..12 {
            let angle = 0.5 + k as f64;
            let a = v(&[angle.cos(), angle.sin()]);
            let b = v(&[(2.0 * angle).cos(), (2.0 * angle).sin()]);
            if a.sub(&b).norm() <= EPS_PREDICATE {
                continue;
            }
            let path = rule.section(&a, &b).unwrap();
            assert!(path.eval(0.0).distance(&a) <= 1e-12);
            assert!(path.eval(1.0).distance(&b) <= 1e-12);
        }
    }

    #[test]
    fn rule2_domain_excludes_equal_points() {
        let rule = sphere_rule2(&s1());
        assert!(!rule.admits(&v(&[1.0, 0.0]), &v(&[1.0, 0.0])));
        assert!(rule.admits(&v(&[1.0, 0.0]), &v(&[-1.0, 0.0])));
    }

    #[test]
    fn planner_dispatch_follows_least_index() {
        let planner = sphere_planner(&s1());
        assert_eq!(planner.rule_count(), 2);

        let same = planner.plan(&v(&[1.0, 0.0]), &v(&[1.0, 0.0])).unwrap();
        assert_eq!(same.rule_index, 1);

        let generic = planner.plan(&v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap();
        assert_eq!(generic.rule_index, 1);

        let antipodal = planner.plan(&v(&[1.0, 0.0]), &v(&[-1.0, 0.0])).unwrap();
        assert_eq!(antipodal.rule_index, 2);
    }

    #[test]
    fn planner_rejects_off_sphere_points() {
        let planner = sphere_planner(&s1());
        let err = planner.plan(&v(&[2.0, 0.0]), &v(&[1.0, 0.0])).unwrap_err();
        assert!(matches!(err, Error::OutsideFreeSpace { .. }));
    }

    #[test]
    fn s3_paths_stay_on_the_sphere() {
        let spec = SphereSpec::new(2).unwrap();
        let planner = sphere_planner(&spec);
        let a = v(&[1.0, 0.0, 0.0, 0.0]);
        let b = v(&[0.0, 0.0, 0.6, 0.8]);
        let planned = planner.plan(&a, &b).unwrap();
        for i in 0..=100 {
            let p = planned.path.eval(i as f64 / 100.0);
            assert!((p.norm() - 1.0).abs() <= 1e-12);
        }

        let antipodal = planner.plan(&a, &a.neg()).unwrap();
        assert_eq!(antipodal.rule_index, 2);
        for i in 0..=100 {
            let p = antipodal.path.eval(i as f64 / 100.0);
            assert!((p.norm() - 1.0).abs() <= 1e-12);
        }
    }
}
