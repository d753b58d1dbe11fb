//! Explicit motion planners with minimal rule counts.
//!
//! A motion-planning rule takes a (start, goal) pair in a free space and
//! returns a path between them. On a contractible space one continuous rule
//! plans everything; on anything topologically richer, no single continuous
//! rule can exist, and the interesting question becomes: how few continuous
//! local rules cover all pairs, and what do they look like explicitly?
//!
//! This crate builds the classical explicit answers:
//!
//! - [`star_planner`] / [`contractible_planner`]: the one-rule planner on
//!   star-shaped (more generally, contracted) domains, plus
//!   [`contraction_from_planner`] for the reverse direction.
//! - [`sphere_planner`]: the two-rule planner on odd-dimensional spheres:
//!   shortest geodesics where defined, a tangent-field detour for the rest.
//! - [`transfer_planner`]: carries a planner across a homotopy equivalence
//!   with the three-piece deform/plan/undeform schedule.
//! - [`annulus_planner`]: the transfer applied to a disk robot avoiding a
//!   disk obstacle in the plane. Two rules, radial deformation, explicit
//!   formulas all the way down.
//!
//! The [`verify`] module checks the promised properties numerically
//! (endpoint contracts, containment, domain coverage, junction continuity,
//! geodesic optimality, stability, and the unavoidable dispatch
//! discontinuity), with seeded, replayable sampling.
//!
//! ```
//! use tcplan::{sphere_planner, SphereSpec, Vector};
//!
//! let planner = sphere_planner(&SphereSpec::new(1).unwrap());
//! assert_eq!(planner.rule_count(), 2);
//!
//! let a = Vector::new(vec![1.0, 0.0]).unwrap();
//! let b = Vector::new(vec![-1.0, 0.0]).unwrap();
//! let planned = planner.plan(&a, &b).unwrap();
//!
//! // Antipodal pairs need the detour rule; the path still lands exactly.
//! assert_eq!(planned.rule_index, 2);
//! assert!(planned.path.eval(1.0).distance(&b) < 1e-9);
//! ```

mod annulus;
mod error;
mod homotopy;
mod path;
mod rule;
mod sphere;
mod star;
mod tolerance;
mod transfer;
mod vector;

pub mod fixtures;
pub mod sampler;
pub mod verify;

pub use annulus::{annulus_planner, annulus_retraction, circle_planner, AnnulusSpec};
pub use error::{Error, Result};
pub use homotopy::Homotopy;
pub use path::{concat2, concat3, polyline_length, sample_path, Path};
pub use rule::{LocalRule, MotionPlanner, PlannedPath};
pub use sphere::{alpha_detour, sphere_planner, sphere_rule1, sphere_rule2, SphereSpec};
pub use star::{contractible_planner, contraction_from_planner, star_planner, StarDomain};
pub use tolerance::{Tolerances, DEFAULT_SAMPLE_COUNT, EPS_ASSERT, EPS_PREDICATE};
pub use transfer::{transfer_planner, transfer_rule, TransferData};
pub use vector::{normalize, tangent_field_nu, Vector};
