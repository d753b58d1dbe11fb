//! Static SVG rendering of planar scenarios.
//!
//! Output is deterministic: fixed float formatting, fixed element order, a
//! viewBox scaled to 1.2x the larger of the path extent and the space
//! geometry, so reruns of the same scenario are byte-identical.

use std::fmt::Write;

use tcplan::{sample_path, Path, Vector};

use crate::scenario::{BuiltScenario, Geometry};

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

/// y is flipped so the mathematical orientation (counterclockwise positive)
/// matches what the viewer sees.
fn point(v: &Vector) -> (String, String) {
    (fmt(v.coords()[0]), fmt(-v.coords()[1]))
}

pub fn render(built: &BuiltScenario, path: &Path) -> String {
    let samples = sample_path(path, built.samples);

    let geometry_extent = match &built.geometry {
        Geometry::Circle { radius } | Geometry::Disk { radius } => *radius,
        Geometry::Annulus(spec) => spec.rho(),
        Geometry::Rectangle {
            half_width,
            half_height,
        } => half_width.max(*half_height),
        Geometry::NotPlanar { .. } => 1.0,
    };
    let path_extent = samples
        .iter()
        .flat_map(|p| p.coords().iter().map(|c| c.abs()))
        .fold(0.0, f64::max);
    let half = 1.2 * geometry_extent.max(path_extent).max(1e-3);
    let stroke = half / 200.0;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="640" height="640" viewBox="{} {} {} {}">"#,
        fmt(-half),
        fmt(-half),
        fmt(2.0 * half),
        fmt(2.0 * half)
    );
    let _ = writeln!(
        svg,
        r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#ffffff"/>"##,
        fmt(-half),
        fmt(-half),
        fmt(2.0 * half),
        fmt(2.0 * half)
    );

    match &built.geometry {
        Geometry::Annulus(spec) => {
            let _ = writeln!(
                svg,
                r##"  <circle cx="0" cy="0" r="{}" fill="#b0b0b0" stroke="none"/>"##,
                fmt(spec.l_obstacle())
            );
            let _ = writeln!(
                svg,
                r##"  <circle cx="0" cy="0" r="{}" fill="none" stroke="#d06060" stroke-width="{}" stroke-dasharray="{}"/>"##,
                fmt(spec.clearance_radius()),
                fmt(stroke),
                fmt(4.0 * stroke)
            );
            let _ = writeln!(
                svg,
                r##"  <circle cx="0" cy="0" r="{}" fill="none" stroke="#60a060" stroke-width="{}" stroke-dasharray="{}"/>"##,
                fmt(spec.rho()),
                fmt(stroke),
                fmt(2.0 * stroke)
            );
        }
        Geometry::Circle { radius } => {
            let _ = writeln!(
                svg,
                r##"  <circle cx="0" cy="0" r="{}" fill="none" stroke="#c0c0c0" stroke-width="{}"/>"##,
                fmt(*radius),
                fmt(stroke)
            );
        }
        Geometry::Disk { radius } => {
            let _ = writeln!(
                svg,
                r##"  <circle cx="0" cy="0" r="{}" fill="#f0f0f0" stroke="#c0c0c0" stroke-width="{}"/>"##,
                fmt(*radius),
                fmt(stroke)
            );
        }
        Geometry::Rectangle {
            half_width,
            half_height,
        } => {
            let _ = writeln!(
                svg,
                r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#f0f0f0" stroke="#c0c0c0" stroke-width="{}"/>"##,
                fmt(-half_width),
                fmt(-half_height),
                fmt(2.0 * half_width),
                fmt(2.0 * half_height),
                fmt(stroke)
            );
        }
        Geometry::NotPlanar { .. } => {}
    }

    let points: Vec<String> = samples
        .iter()
        .map(|p| {
            let (x, y) = point(p);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        svg,
        r##"  <polyline points="{}" fill="none" stroke="#3060c0" stroke-width="{}"/>"##,
        points.join(" "),
        fmt(1.5 * stroke)
    );

    // Start: filled circle. Goal: cross, so the two ends read differently.
    let (sx, sy) = point(&built.start);
    let _ = writeln!(
        svg,
        r##"  <circle cx="{sx}" cy="{sy}" r="{}" fill="#3060c0" stroke="none"/>"##,
        fmt(3.0 * stroke)
    );
    let gx = built.goal.coords()[0];
    let gy = -built.goal.coords()[1];
    let arm = 4.0 * stroke;
    let _ = writeln!(
        svg,
        r##"  <path d="M {} {} L {} {} M {} {} L {} {}" stroke="#c03030" stroke-width="{}" fill="none"/>"##,
        fmt(gx - arm),
        fmt(gy - arm),
        fmt(gx + arm),
        fmt(gy + arm),
        fmt(gx - arm),
        fmt(gy + arm),
        fmt(gx + arm),
        fmt(gy - arm),
        fmt(stroke)
    );
    svg.push_str("</svg>\n");
    svg
}
