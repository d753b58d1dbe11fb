//! The `verify` subcommand: run every applicable check for a space (or a
//! deliberately broken fixture), print one line per report, and optionally
//! dump the reports as JSON.

use anyhow::{anyhow, Result};
use serde::Serialize;

use tcplan::sampler::{
    AnnulusPairs, AntipodalSpherePairs, CircleGridPairs, DiskPairs, NonAntipodalSpherePairs,
    PairSource, RadialOppositeAnnulusPairs, RectanglePairs, SpherePairs,
};
use tcplan::verify::{
    check_cover, check_endpoints, check_geodesic, check_junctions, check_membership,
    continuity_probe, discontinuity_witness, HarnessConfig, VerificationReport,
};
use tcplan::{
    annulus_planner, fixtures, sphere_planner, sphere_rule1, star_planner, AnnulusSpec, Error,
    SphereSpec, StarDomain, Vector,
};

use crate::scenario::{SpaceSpec, StarShape};

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub n: usize,
    pub checks: Vec<VerificationReport>,
    pub all_passed: bool,
}

fn circle_axis_pair(radius: f64) -> (Vector, Vector) {
    (
        Vector::new(vec![radius, 0.0]).expect("finite"),
        Vector::new(vec![-radius, 0.0]).expect("finite"),
    )
}

fn sphere_axis_pair(spec: &SphereSpec) -> (Vector, Vector) {
    let mut a = vec![0.0; spec.ambient_dim()];
    a[0] = 1.0;
    let mut b = vec![0.0; spec.ambient_dim()];
    b[0] = -1.0;
    (
        Vector::new(a).expect("finite"),
        Vector::new(b).expect("finite"),
    )
}

fn sphere_suite(spec: SphereSpec, seed: u64, n: usize, cfg: &HarnessConfig) -> Vec<VerificationReport> {
    let planner = sphere_planner(&spec);
    let generic = SpherePairs { spec };
    let antipodal = AntipodalSpherePairs { spec };
    let non_antipodal = NonAntipodalSpherePairs {
        spec,
        min_sum_norm: 0.1,
    };

    let mut reports = vec![
        check_endpoints(&planner, &generic, n, seed, cfg),
        check_endpoints(&planner, &antipodal, n, seed + 1, cfg),
        check_membership(&planner, &generic, n.min(1000), 200, seed + 2, cfg),
        check_membership(&planner, &antipodal, n.min(1000), 200, seed + 3, cfg),
        check_junctions(&planner, &antipodal, n, cfg.junction_h, seed + 4, cfg),
        check_geodesic(&spec, &non_antipodal, n.min(1000), seed + 5, cfg),
        continuity_probe(
            &sphere_rule1(&spec),
            &non_antipodal,
            n.min(1000),
            1e-4,
            seed + 6,
            cfg,
        ),
    ];
    if spec.m() == 1 {
        reports.push(check_cover(&planner, &CircleGridPairs { resolution: 720 }, 0, 0, cfg));
    } else {
        reports.push(check_cover(&planner, &generic, n, seed + 7, cfg));
    }

    let hint = sphere_axis_pair(&spec);
    reports.push(witness_report(
        discontinuity_witness(&planner, &generic, (&hint.0, &hint.1), seed + 8, cfg),
        planner.space_name(),
    ));
    reports
}

fn annulus_suite(spec: AnnulusSpec, seed: u64, n: usize, cfg: &HarnessConfig) -> Vec<VerificationReport> {
    let planner = annulus_planner(&spec);
    let generic = AnnulusPairs { spec };
    let radial = RadialOppositeAnnulusPairs { spec };

    let mut reports = vec![
        check_endpoints(&planner, &generic, n, seed, cfg),
        check_endpoints(&planner, &radial, n, seed + 1, cfg),
        check_membership(&planner, &generic, n.min(1000), 200, seed + 2, cfg),
        check_membership(&planner, &radial, n.min(1000), 200, seed + 3, cfg),
        check_cover(&planner, &generic, n, seed + 4, cfg),
        check_junctions(&planner, &generic, n, cfg.junction_h, seed + 5, cfg),
        check_junctions(&planner, &radial, n, cfg.junction_h, seed + 6, cfg),
    ];

    let hint = circle_axis_pair(spec.rho());
    reports.push(witness_report(
        discontinuity_witness(&planner, &generic, (&hint.0, &hint.1), seed + 7, cfg),
        planner.space_name(),
    ));
    reports
}

fn star_suite(
    shape: StarShape,
    seed: u64,
    n: usize,
    cfg: &HarnessConfig,
) -> Vec<VerificationReport> {
    let (planner, source): (_, Box<dyn PairSource>) = match shape {
        StarShape::Disk => (
            star_planner(&StarDomain::unit_disk()),
            Box::new(DiskPairs { radius: 1.0 }),
        ),
        StarShape::Rectangle => (
            star_planner(&StarDomain::rectangle(2.0, 1.0)),
            Box::new(RectanglePairs {
                half_width: 2.0,
                half_height: 1.0,
            }),
        ),
    };
    println!(
        "[SKIP] discontinuity({}): single-rule planner is continuous, no dispatch boundary",
        planner.space_name()
    );
    vec![
        check_endpoints(&planner, source.as_ref(), n, seed, cfg),
        check_membership(&planner, source.as_ref(), n.min(1000), 200, seed + 1, cfg),
        check_cover(&planner, source.as_ref(), n, seed + 2, cfg),
        check_junctions(&planner, source.as_ref(), n, cfg.junction_h, seed + 3, cfg),
    ]
}

/// Fold a witness-search result into the report list: a found witness is a
/// passing report, an exhausted search is a failing one.
fn witness_report(
    result: std::result::Result<VerificationReport, Error>,
    space: &str,
) -> VerificationReport {
    match result {
        Ok(report) => report,
        Err(e) => VerificationReport {
            check_name: format!("discontinuity({space})"),
            seed: 0,
            samples: 0,
            tolerance: 0.0,
            max_violation: f64::INFINITY,
            witnesses: Vec::new(),
            passed: matches!(e, Error::NeedsMultipleRules(_)),
        },
    }
}

fn fixture_suite(name: &str, seed: u64, n: usize, cfg: &HarnessConfig) -> Result<Vec<VerificationReport>> {
    let spec = AnnulusSpec::new(0.3, 0.2).expect("default spec");
    let planner = fixtures::by_name(name, &spec).ok_or_else(|| {
        anyhow!(
            "unknown fixture {name}; available: {}",
            fixtures::FIXTURE_NAMES.join(", ")
        )
    })?;
    let n = n.max(1000);
    Ok(match name {
        "straight-line" => {
            let source = AnnulusPairs { spec };
            vec![
                check_endpoints(&planner, &source, n, seed, cfg),
                check_membership(&planner, &source, n, 200, seed + 1, cfg),
            ]
        }
        _ => {
            let source = SpherePairs {
                spec: SphereSpec::new(1).expect("m = 1"),
            };
            vec![
                check_endpoints(&planner, &source, n, seed, cfg),
                check_membership(&planner, &source, n.min(1000), 200, seed + 1, cfg),
                check_cover(&planner, &CircleGridPairs { resolution: 720 }, 0, 0, cfg),
                check_junctions(&planner, &source, n, cfg.junction_h, seed + 2, cfg),
            ]
        }
    })
}

pub fn run(
    space: Option<SpaceSpec>,
    fixture: Option<String>,
    seed: u64,
    n: usize,
    report_path: Option<&std::path::Path>,
) -> Result<i32> {
    let cfg = HarnessConfig::default();
    let checks = match (space, fixture) {
        (_, Some(name)) => fixture_suite(&name, seed, n, &cfg)?,
        (Some(SpaceSpec::Sphere { m }), None) => {
            let spec = SphereSpec::new(m).map_err(|e| anyhow!("violated invariant: {e}"))?;
            sphere_suite(spec, seed, n, &cfg)
        }
        (
            Some(SpaceSpec::Annulus {
                l_obstacle,
                l_robot,
                rho,
            }),
            None,
        ) => {
            let spec = match rho {
                Some(rho) => AnnulusSpec::with_rho(l_obstacle, l_robot, rho),
                None => AnnulusSpec::new(l_obstacle, l_robot),
            }
            .map_err(|e| anyhow!("violated invariant: {e}"))?;
            annulus_suite(spec, seed, n, &cfg)
        }
        (Some(SpaceSpec::Star { shape }), None) => star_suite(shape, seed, n, &cfg),
        (None, None) => {
            return Err(anyhow!("verify needs --scenario or --fixture"));
        }
    };

    for report in &checks {
        println!("{report}");
    }
    let all_passed = checks.iter().all(|r| r.passed);
    println!(
        "verify: {}/{} checks passed",
        checks.iter().filter(|r| r.passed).count(),
        checks.len()
    );

    if let Some(path) = report_path {
        let suite = SuiteReport {
            seed,
            n,
            checks,
            all_passed,
        };
        std::fs::write(path, serde_json::to_string_pretty(&suite)?)?;
    }

    Ok(if all_passed { 0 } else { 1 })
}
