//! Property harness: checks everything the planners promise, at desk scale.
//!
//! Each check samples pairs from an explicit seeded source, measures the
//! worst violation of one contract, and returns a [`VerificationReport`]
//! whose `passed` flag is exactly `max_violation <= tolerance`. Reports are
//! deterministic: fixed seed, fixed output, bit for bit.
//!
//! These are numerical probes, not proofs. The finite-sample continuity
//! checks stand in for statements about the path-space topology; no claim of
//! certification is made.

use serde::Serialize;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::path::{polyline_length, Path};
use crate::rule::{LocalRule, MotionPlanner};
use crate::sampler::PairSource;
use crate::sphere::{sphere_rule1, SphereSpec};
use crate::tolerance::Tolerances;
use crate::vector::Vector;

/// Knobs for the harness. The continuity ratio bound is an empirical
/// regression constant, not a theorem.
#[derive(Debug, Clone, Copy)]
pub struct HarnessConfig {
    pub tolerances: Tolerances,
    /// Half-width of the junction probe.
    pub junction_h: f64,
    /// Maximum admissible junction gap.
    pub junction_tol: f64,
    /// Sample count for polyline length in the geodesic check.
    pub geodesic_refinement: usize,
    /// Maximum |polyline length - arccos(a.b)|.
    pub geodesic_tol: f64,
    /// Empirical bound on (sup path distance) / (input perturbation).
    pub continuity_ratio_bound: f64,
    /// Path samples per continuity comparison.
    pub continuity_samples: usize,
    /// Required sup-distance between the two witness paths.
    pub witness_min_sup_distance: f64,
    /// Maximum input distance between the two witness pairs.
    pub witness_max_input_distance: f64,
    /// Path samples per witness sup-distance estimate.
    pub witness_samples: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            tolerances: Tolerances::default(),
            junction_h: 1e-8,
            junction_tol: 1e-6,
            geodesic_refinement: 10_000,
            geodesic_tol: 1e-6,
            continuity_ratio_bound: 100.0,
            continuity_samples: 100,
            witness_min_sup_distance: 0.5,
            witness_max_input_distance: 1e-3,
            witness_samples: 256,
        }
    }
}

/// An offending (or, for the witness search, exhibiting) input pair.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub start: Vec<f64>,
    pub goal: Vec<f64>,
    pub value: f64,
    pub note: String,
}

impl Witness {
    fn new(start: &Vector, goal: &Vector, value: f64, note: impl Into<String>) -> Self {
        Self {
            start: start.coords().to_vec(),
            goal: goal.coords().to_vec(),
            value,
            note: note.into(),
        }
    }
}

const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub max_violation: f64,
    pub witnesses: Vec<Witness>,
    pub passed: bool,
}

impl VerificationReport {
    fn summarize(
        check_name: String,
        seed: u64,
        samples: usize,
        tolerance: f64,
        max_violation: f64,
        witnesses: Vec<Witness>,
    ) -> Self {
        Self {
            check_name,
            seed,
            samples,
            tolerance,
            max_violation,
            witnesses,
            passed: max_violation <= tolerance,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {} samples={} seed={} max_violation={:.3e} tol={:.3e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check_name,
            self.samples,
            self.seed,
            self.max_violation,
            self.tolerance,
        )?;
        for w in &self.witnesses {
            write!(
                f,
                "\n    witness start={:?} goal={:?} value={:.3e} ({})",
                w.start, w.goal, w.value, w.note
            )?;
        }
        Ok(())
    }
}

/// Tracks the worst violation plus a few witnesses for the report.
struct WorstCase {
    max_violation: f64,
    witnesses: Vec<Witness>,
}

impl WorstCase {
    fn new() -> Self {
        Self {
            max_violation: 0.0,
            witnesses: Vec::new(),
        }
    }

    fn record(&mut self, violation: f64, tolerance: f64, make: impl FnOnce(f64) -> Witness) {
        if violation > self.max_violation {
            self.max_violation = violation;
        }
        if violation > tolerance && self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(make(violation));
        }
    }
}

/// Worst endpoint error `max(‖path(0) - start‖, ‖path(1) - goal‖)` over `n`
/// sampled pairs. Planning failures count as infinite violations.
pub fn check_endpoints(
    planner: &MotionPlanner,
    source: &dyn PairSource,
    n: usize,
    seed: u64,
    cfg: &HarnessConfig,
) -> VerificationReport {
    let tol = cfg.tolerances.eps_assert;
    let mut worst = WorstCase::new();
    let mut samples = 0;
    for (a, b) in source.pairs(seed, n) {
        samples += 1;
        match planner.plan(&a, &b) {
            Ok(planned) => {
                let err = planned
                    .path
                    .eval(0.0)
                    .distance(&a)
                    .max(planned.path.eval(1.0).distance(&b));
                worst.record(err, tol, |v| Witness::new(&a, &b, v, "endpoint error"));
            }
            Err(e) => worst.record(f64::INFINITY, tol, |v| {
                Witness::new(&a, &b, v, format!("plan failed: {e}"))
            }),
        }
    }
    VerificationReport::summarize(
        format!("endpoints({})", planner.space_name()),
        seed,
        samples,
        tol,
        worst.max_violation,
        worst.witnesses,
    )
}

/// Worst free-space violation along planned paths, as scored by the
/// planner's own violation measure (sphere: distance from unit norm;
/// obstacle problem: penetration depth of the clearance disk).
pub fn check_membership(
    planner: &MotionPlanner,
    source: &dyn PairSource,
    n: usize,
    samples_per_path: usize,
    seed: u64,
    cfg: &HarnessConfig,
) -> VerificationReport {
    let tol = cfg.tolerances.eps_assert;
    let mut worst = WorstCase::new();
    let mut samples = 0;
    for (a, b) in source.pairs(seed, n) {
        samples += 1;
        match planner.plan(&a, &b) {
            Ok(planned) => {
                let last = (samples_per_path - 1).max(1) as f64;
                for i in 0..samples_per_path {
                    let point = planned.path.eval(i as f64 / last);
                    let v = planner.membership_violation(&point);
                    worst.record(v, tol, |v| {
                        Witness::new(&a, &b, v, format!("violation at t={}", i as f64 / last))
                    });
                }
            }
            Err(e) => worst.record(f64::INFINITY, tol, |v| {
                Witness::new(&a, &b, v, format!("plan failed: {e}"))
            }),
        }
    }
    VerificationReport::summarize(
        format!("membership({})", planner.space_name()),
        seed,
        samples,
        tol,
        worst.max_violation,
        worst.witnesses,
    )
}

/// Counts sampled pairs accepted by no rule domain. Passes only when zero.
pub fn check_cover(
    planner: &MotionPlanner,
    source: &dyn PairSource,
    n: usize,
    seed: u64,
    _cfg: &HarnessConfig,
) -> VerificationReport {
    let mut uncovered = 0usize;
    let mut witnesses = Vec::new();
    let mut samples = 0;
    for (a, b) in source.pairs(seed, n) {
        samples += 1;
        if !planner.rules().iter().any(|rule| rule.admits(&a, &b)) {
            uncovered += 1;
            if witnesses.len() < MAX_WITNESSES {
                witnesses.push(Witness::new(&a, &b, 1.0, "no rule domain accepts"));
            }
        }
    }
    VerificationReport::summarize(
        format!("cover({})", planner.space_name()),
        seed,
        samples,
        0.0,
        uncovered as f64,
        witnesses,
    )
}

/// Probes every breakpoint of every planned path: `‖path(b-h) - path(b+h)‖`
/// must stay within the junction tolerance.
pub fn check_junctions(
    planner: &MotionPlanner,
    source: &dyn PairSource,
    n: usize,
    h: f64,
    seed: u64,
    cfg: &HarnessConfig,
) -> VerificationReport {
    assert!(h > 0.0 && h <= 1e-6, "junction probe h must be in (0, 1e-6]");
    let tol = cfg.junction_tol;
    let mut worst = WorstCase::new();
    let mut samples = 0;
    for (a, b) in source.pairs(seed, n) {
        samples += 1;
        match planner.plan(&a, &b) {
            Ok(planned) => {
                for &bp in planned.path.breakpoints() {
                    let lo = (bp - h).max(0.0);
                    let hi = (bp + h).min(1.0);
                    let gap = planned.path.eval(lo).distance(&planned.path.eval(hi));
                    worst.record(gap, tol, |v| {
                        Witness::new(&a, &b, v, format!("gap at breakpoint {bp}"))
                    });
                }
            }
            Err(e) => worst.record(f64::INFINITY, tol, |v| {
                Witness::new(&a, &b, v, format!("plan failed: {e}"))
            }),
        }
    }
    VerificationReport::summarize(
        format!("junctions({})", planner.space_name()),
        seed,
        samples,
        tol,
        worst.max_violation,
        worst.witnesses,
    )
}

/// Checks that rule 1 traces shortest geodesics: polyline length of the
/// section against `arccos(a.b)`. The source must keep pairs away from the
/// antipodal locus (`‖a+b‖ > 0.1`), where neither the claim nor the
/// discretization applies.
pub fn check_geodesic(
    spec: &SphereSpec,
    source: &dyn PairSource,
    n: usize,
    seed: u64,
    cfg: &HarnessConfig,
) -> VerificationReport {
    let rule = sphere_rule1(spec);
    let tol = cfg.geodesic_tol;
    let mut worst = WorstCase::new();
    let mut samples = 0;
    for (a, b) in source.pairs(seed, n) {
        samples += 1;
        let expected = a.dot(&b).clamp(-1.0, 1.0).acos();
        match rule.section(&a, &b) {
            Ok(path) => {
                let measured = polyline_length(&path, cfg.geodesic_refinement);
                worst.record((measured - expected).abs(), tol, |v| {
                    Witness::new(&a, &b, v, format!("length {measured} vs arc {expected}"))
                });
            }
            Err(e) => worst.record(f64::INFINITY, tol, |v| {
                Witness::new(&a, &b, v, format!("section failed: {e}"))
            }),
        }
    }
    VerificationReport::summarize(
        format!("geodesic({})", spec.space_name()),
        seed,
        samples,
        tol,
        worst.max_violation,
        worst.witnesses,
    )
}

fn sup_distance(p: &Path, q: &Path, samples: usize) -> f64 {
    let last = (samples - 1).max(1) as f64;
    (0..samples)
        .map(|i| {
            let t = i as f64 / last;
            p.eval(t).distance(&q.eval(t))
        })
        .fold(0.0, f64::max)
}

/// Finite-difference stability probe: perturb an admissible pair by `delta`
/// (staying in the space and the rule domain) and compare the two sections
/// in sup-distance. The ratio sup/delta must stay under the configured
/// empirical bound. The source must provide pairs with comfortable domain
/// margin; straddling the domain boundary is out of contract.
pub fn continuity_probe(
    rule: &LocalRule,
    source: &dyn PairSource,
    n: usize,
    delta: f64,
    seed: u64,
    cfg: &HarnessConfig,
) -> VerificationReport {
    assert!(delta > 0.0 && delta <= 1e-3, "delta must be in (0, 1e-3]");
    let tol = cfg.continuity_ratio_bound;
    let mut worst = WorstCase::new();
    let mut samples = 0;
    // Separate generator for perturbation directions, seeded alongside the
    // pair stream so the whole probe replays from one seed.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for (a, b) in source.pairs(seed, n) {
        if !rule.admits(&a, &b) {
            continue;
        }
        let mut found = None;
        for _ in 0..32 {
            let a2 = source.perturb(&a, delta, &mut rng);
            let b2 = source.perturb(&b, delta, &mut rng);
            if rule.admits(&a2, &b2) {
                found = Some((a2, b2));
                break;
            }
        }
        let Some((a2, b2)) = found else { continue };
        samples += 1;
        match (rule.section(&a, &b), rule.section(&a2, &b2)) {
            (Ok(p), Ok(q)) => {
                let ratio = sup_distance(&p, &q, cfg.continuity_samples) / delta;
                worst.record(ratio, tol, |v| {
                    Witness::new(&a, &b, v, format!("sup/delta ratio {v}"))
                });
            }
            _ => worst.record(f64::INFINITY, tol, |v| {
                Witness::new(&a, &b, v, "section failed")
            }),
        }
    }
    VerificationReport::summarize(
        format!("continuity({})", rule.label()),
        seed,
        samples,
        tol,
        worst.max_violation,
        worst.witnesses,
    )
}

/// Searches near `hint` for two admissible pairs, close in input space but
/// dispatched to different rules, whose planned paths stay far apart: the
/// unavoidable discontinuity of any global dispatch on a space that needs
/// more than one rule.
///
/// Pair distance is `max(‖a - a'‖, ‖b - b'‖)`. Returns `WitnessNotFound`
/// when the grid refinement around the hint exhausts its candidates.
pub fn discontinuity_witness(
    planner: &MotionPlanner,
    source: &dyn PairSource,
    hint: (&Vector, &Vector),
    seed: u64,
    cfg: &HarnessConfig,
) -> Result<VerificationReport> {
    if planner.rule_count() < 2 {
        return Err(Error::NeedsMultipleRules(planner.rule_count()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (ha, hb) = (hint.0.clone(), hint.1.clone());

    // The hint itself plus rings of perturbed pairs at shrinking radii.
    let mut candidates: Vec<(Vector, Vector)> = vec![(ha.clone(), hb.clone())];
    let base = cfg.witness_max_input_distance;
    for radius in [base / 2.0, base / 4.0, base / 10.0] {
        for _ in 0..16 {
            candidates.push((ha.clone(), source.perturb(&hb, radius, &mut rng)));
            candidates.push((source.perturb(&ha, radius, &mut rng), hb.clone()));
        }
    }

    let mut planned = Vec::new();
    for (a, b) in &candidates {
        if let Ok(p) = planner.plan(a, b) {
            planned.push((a.clone(), b.clone(), p));
        }
    }

    let examined = planned.len();
    for i in 0..planned.len() {
        for j in (i + 1)..planned.len() {
            let (a1, b1, p1) = &planned[i];
            let (a2, b2, p2) = &planned[j];
            if p1.rule_index == p2.rule_index {
                continue;
            }
            let input_distance = a1.distance(a2).max(b1.distance(b2));
            if input_distance > cfg.witness_max_input_distance {
                continue;
            }
            let sup = sup_distance(&p1.path, &p2.path, cfg.witness_samples);
            if sup >= cfg.witness_min_sup_distance {
                let witnesses = vec![
                    Witness::new(
                        a1,
                        b1,
                        sup,
                        format!("rule {} side; input distance {input_distance:.3e}", p1.rule_index),
                    ),
                    Witness::new(
                        a2,
                        b2,
                        sup,
                        format!("rule {} side; sup-distance {sup:.3}", p2.rule_index),
                    ),
                ];
                return Ok(VerificationReport::summarize(
                    format!("discontinuity({})", planner.space_name()),
                    seed,
                    examined,
                    0.0,
                    0.0,
                    witnesses,
                ));
            }
        }
    }
    Err(Error::WitnessNotFound {
        candidates: examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annulus::{annulus_planner, AnnulusSpec};
    use crate::fixtures;
    use crate::sampler::{
        AnnulusPairs, AntipodalSpherePairs, CircleGridPairs, DiskPairs, NonAntipodalSpherePairs,
        SpherePairs,
    };
    use crate::sphere::sphere_planner;
    use crate::star::{star_planner, StarDomain};

    fn cfg() -> HarnessConfig {
        HarnessConfig::default()
    }

    fn circle() -> SphereSpec {
        SphereSpec::new(1).unwrap()
    }

    #[test]
    fn endpoints_pass_on_shipped_planners() {
        let c = cfg();
        let sphere = sphere_planner(&circle());
        let source = SpherePairs { spec: circle() };
        let report = check_endpoints(&sphere, &source, 500, 42, &c);
        assert!(report.passed, "{report}");

        let star = star_planner(&StarDomain::unit_disk());
        let report = check_endpoints(&star, &DiskPairs { radius: 1.0 }, 500, 42, &c);
        assert!(report.passed, "{report}");
        assert!(report.max_violation <= 1e-12);
    }

    #[test]
    fn endpoints_fail_on_broken_rule_with_witness() {
        let c = cfg();
        let report = check_endpoints(
            &fixtures::broken_endpoint_planner(),
            &SpherePairs { spec: circle() },
            100,
            1,
            &c,
        );
        assert!(!report.passed);
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn membership_passes_on_annulus_and_fails_on_straight_line() {
        let c = cfg();
        let spec = AnnulusSpec::new(0.3, 0.2).unwrap();
        let source = AnnulusPairs { spec };
        let good = check_membership(&annulus_planner(&spec), &source, 200, 40, 7, &c);
        assert!(good.passed, "{good}");

        let bad = check_membership(
            &fixtures::straight_line_annulus_planner(&spec),
            &source,
            1000,
            40,
            7,
            &c,
        );
        assert!(!bad.passed);
        assert!(!bad.witnesses.is_empty());
    }

    #[test]
    fn cover_grid_catches_single_rule_planner() {
        let c = cfg();
        let grid = CircleGridPairs { resolution: 72 };
        let good = check_cover(&sphere_planner(&circle()), &grid, 0, 0, &c);
        assert!(good.passed, "{good}");
        assert_eq!(good.samples, 72 * 72);

        let bad = check_cover(&fixtures::single_rule_sphere_planner(), &grid, 0, 0, &c);
        assert!(!bad.passed);
    }

    #[test]
    fn junctions_pass_on_sphere_and_fail_on_gapped_fixture() {
        let c = cfg();
        let source = AntipodalSpherePairs { spec: circle() };
        let good = check_junctions(&sphere_planner(&circle()), &source, 200, 1e-8, 11, &c);
        assert!(good.passed, "{good}");

        let bad = check_junctions(
            &fixtures::gapped_junction_planner(),
            &SpherePairs { spec: circle() },
            50,
            1e-8,
            11,
            &c,
        );
        assert!(!bad.passed);
    }

    #[test]
    fn geodesic_check_passes_on_s1_and_s3() {
        let c = cfg();
        for m in [1, 2] {
            let spec = SphereSpec::new(m).unwrap();
            let source = NonAntipodalSpherePairs {
                spec,
                min_sum_norm: 0.1,
            };
            let report = check_geodesic(&spec, &source, 50, 99, &c);
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn geodesic_of_equal_endpoints_has_zero_length() {
        let a = Vector::new(vec![0.6, 0.8]).unwrap();
        let rule = sphere_rule1(&circle());
        let path = rule.section(&a, &a).unwrap();
        // The interpolant wobbles by an ulp across t, so the chord sum is
        // tiny but not exactly zero.
        assert!(polyline_length(&path, 10_000) <= 1e-9);
        assert_eq!(a.dot(&a).clamp(-1.0, 1.0).acos(), 0.0);
    }

    #[test]
    fn continuity_probe_is_bounded_for_rule1() {
        let c = cfg();
        let source = NonAntipodalSpherePairs {
            spec: circle(),
            min_sum_norm: 0.1,
        };
        let report = continuity_probe(&sphere_rule1(&circle()), &source, 100, 1e-4, 21, &c);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn witness_found_on_sphere_and_rejected_on_star() {
        let c = cfg();
        let planner = sphere_planner(&circle());
        let a = Vector::new(vec![1.0, 0.0]).unwrap();
        let b = Vector::new(vec![-1.0, 0.0]).unwrap();
        let source = SpherePairs { spec: circle() };
        let report = discontinuity_witness(&planner, &source, (&a, &b), 5, &c).unwrap();
        assert!(report.passed);
        assert_eq!(report.witnesses.len(), 2);

        let star = star_planner(&StarDomain::unit_disk());
        let err = discontinuity_witness(&star, &DiskPairs { radius: 1.0 }, (&a, &b), 5, &c)
            .unwrap_err();
        assert!(matches!(err, Error::NeedsMultipleRules(1)));
    }

    #[test]
    fn reports_are_deterministic_and_consistent() {
        let c = cfg();
        let planner = sphere_planner(&circle());
        let source = SpherePairs { spec: circle() };
        let r1 = check_endpoints(&planner, &source, 300, 123, &c);
        let r2 = check_endpoints(&planner, &source, 300, 123, &c);
        assert_eq!(r1.to_json(), r2.to_json());
        assert_eq!(r1.passed, r1.max_violation <= r1.tolerance);
    }
}
