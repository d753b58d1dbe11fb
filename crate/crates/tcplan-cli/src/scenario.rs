//! Scenario files: JSON descriptions of a space plus a start/goal pair.

use std::path::Path as FsPath;

use anyhow::{anyhow, Context, Result};
use serde::{Deserialize, Serialize};

use tcplan::{
    annulus_planner, sphere_planner, star_planner, AnnulusSpec, MotionPlanner, SphereSpec,
    StarDomain, Vector,
};

pub const DEFAULT_SAMPLES: usize = tcplan::DEFAULT_SAMPLE_COUNT;

fn default_samples() -> usize {
    DEFAULT_SAMPLES
}

#[derive(Debug, Clone, Copy, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarShape {
    Disk,
    Rectangle,
}

/// The space a scenario lives in. `rho` defaults to twice the clearance
/// radius when omitted.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    Sphere {
        m: usize,
    },
    Annulus {
        l_obstacle: f64,
        l_robot: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rho: Option<f64>,
    },
    Star {
        shape: StarShape,
    },
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub space: SpaceSpec,
    pub start: Vec<f64>,
    pub goal: Vec<f64>,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

/// A scenario resolved against the library: planner built, endpoints
/// validated.
#[derive(Debug)]
pub struct BuiltScenario {
    pub planner: MotionPlanner,
    pub start: Vector,
    pub goal: Vector,
    pub samples: usize,
    pub geometry: Geometry,
}

/// What the renderer needs to draw the space itself.
#[derive(Debug)]
pub enum Geometry {
    Circle { radius: f64 },
    Annulus(AnnulusSpec),
    Disk { radius: f64 },
    Rectangle { half_width: f64, half_height: f64 },
    NotPlanar { ambient_dim: usize },
}

pub fn load(path: &FsPath) -> Result<Scenario> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read scenario file {}", path.display()))?;
    let scenario: Scenario = serde_json::from_str(&text)
        .with_context(|| format!("invalid scenario JSON in {}", path.display()))?;
    Ok(scenario)
}

pub fn build(scenario: &Scenario) -> Result<BuiltScenario> {
    let (planner, ambient_dim, geometry) = match &scenario.space {
        SpaceSpec::Sphere { m } => {
            let spec = SphereSpec::new(*m)
                .map_err(|e| anyhow!("violated invariant: {e}"))?;
            let geometry = if spec.ambient_dim() == 2 {
                Geometry::Circle { radius: 1.0 }
            } else {
                Geometry::NotPlanar {
                    ambient_dim: spec.ambient_dim(),
                }
            };
            (sphere_planner(&spec), spec.ambient_dim(), geometry)
        }
        SpaceSpec::Annulus {
            l_obstacle,
            l_robot,
            rho,
        } => {
            let spec = match rho {
                Some(rho) => AnnulusSpec::with_rho(*l_obstacle, *l_robot, *rho),
                None => AnnulusSpec::new(*l_obstacle, *l_robot),
            }
            .map_err(|e| anyhow!("violated invariant: {e}"))?;
            (annulus_planner(&spec), 2, Geometry::Annulus(spec))
        }
        SpaceSpec::Star { shape } => match shape {
            StarShape::Disk => (
                star_planner(&StarDomain::unit_disk()),
                2,
                Geometry::Disk { radius: 1.0 },
            ),
            StarShape::Rectangle => (
                star_planner(&StarDomain::rectangle(2.0, 1.0)),
                2,
                Geometry::Rectangle {
                    half_width: 2.0,
                    half_height: 1.0,
                },
            ),
        },
    };

    if scenario.samples < 2 {
        return Err(anyhow!(
            "violated invariant: samples must be at least 2, got {}",
            scenario.samples
        ));
    }

    for (name, coords) in [("start", &scenario.start), ("goal", &scenario.goal)] {
        if coords.len() != ambient_dim {
            return Err(anyhow!(
                "violated invariant: {name} has dimension {}, the space needs {ambient_dim}",
                coords.len()
            ));
        }
    }
    let start = Vector::new(scenario.start.clone())
        .map_err(|e| anyhow!("violated invariant: start: {e}"))?;
    let goal = Vector::new(scenario.goal.clone())
        .map_err(|e| anyhow!("violated invariant: goal: {e}"))?;

    for (name, point) in [("start", &start), ("goal", &goal)] {
        if !planner.is_member(point) {
            return Err(anyhow!(
                "violated invariant: {name} {point} is outside the free space of {}",
                planner.space_name()
            ));
        }
    }

    Ok(BuiltScenario {
        planner,
        start,
        goal,
        samples: scenario.samples,
        geometry,
    })
}
