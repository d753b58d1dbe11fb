//! Deterministic, space-aware pair generators for the verification harness.
//!
//! Every source is driven by an explicit seed so any reported failure can be
//! replayed bit-for-bit.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::annulus::AnnulusSpec;
use crate::sphere::SphereSpec;
use crate::vector::{normalize, Vector};

/// A deterministic stream of (start, goal) pairs in some free space, plus a
/// space-aware perturbation used by the continuity probes.
pub trait PairSource: Send + Sync {
    fn label(&self) -> String;

    /// `n` pairs for the given seed. Exhaustive sources may ignore both
    /// arguments and yield their full enumeration.
    fn pairs(&self, seed: u64, n: usize) -> Box<dyn Iterator<Item = (Vector, Vector)> + '_>;

    /// A nearby member at distance about `delta` from `v`.
    fn perturb(&self, v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector;
}

fn gaussian(dim: usize, rng: &mut ChaCha8Rng) -> Vector {
    Vector::raw((0..dim).map(|_| rng.sample(StandardNormal)).collect())
}

fn random_unit(dim: usize, rng: &mut ChaCha8Rng) -> Vector {
    loop {
        if let Ok(u) = normalize(&gaussian(dim, rng)) {
            return u;
        }
    }
}

fn circle_point(angle: f64) -> Vector {
    Vector::raw(vec![angle.cos(), angle.sin()])
}

fn sphere_member(spec: &SphereSpec, rng: &mut ChaCha8Rng) -> Vector {
    if spec.m() == 1 {
        circle_point(rng.gen::<f64>() * std::f64::consts::TAU)
    } else {
        random_unit(spec.ambient_dim(), rng)
    }
}

/// Tangent step followed by re-normalization; stays on the sphere and moves
/// about `delta`.
fn sphere_perturb(v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector {
    let raw = gaussian(v.dim(), rng);
    let tangential = raw.sub(&v.scale(raw.dot(v)));
    match normalize(&tangential) {
        Ok(dir) => normalize(&v.add(&dir.scale(delta))).expect("unit plus small step"),
        Err(_) => v.clone(),
    }
}

/// Uniform pairs on `S^(2m-1)`: uniform angle when `m = 1`, normalized
/// Gaussians above.
#[derive(Clone, Copy, Debug)]
pub struct SpherePairs {
    pub spec: SphereSpec,
}

impl PairSource for SpherePairs {
    fn label(&self) -> String {
        format!("uniform pairs on {}", self.spec.space_name())
    }

    fn pairs(&self, seed: u64, n: usize) -> Box<dyn Iterator<Item = (Vector, Vector)> + '_> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = self.spec;
        Box::new((0..n).map(move |_| {
            (
                sphere_member(&spec, &mut rng),
                sphere_member(&spec, &mut rng),
            )
        }))
    }

    fn perturb(&self, v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector {
        sphere_perturb(v, delta, rng)
    }
}

/// Exactly-antipodal pairs `(a, -a)`: the pairs only rule 2 can plan.
#[derive(Clone, Copy, Debug)]
pub struct AntipodalSpherePairs {
    pub spec: SphereSpec,
}

impl PairSource for AntipodalSpherePairs {
    fn label(&self) -> String {
        format!("antipodal pairs on {}", self.spec.space_name())
    }

    fn pairs(&self, seed: u64, n: usize) -> Box<dyn Iterator<Item = (Vector, Vector)> + '_> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = self.spec;
        Box::new((0..n).map(move |_| {
            let a = sphere_member(&spec, &mut rng);
            let b = a.neg();
            (a, b)
        }))
    }

    fn perturb(&self, v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector {
        sphere_perturb(v, delta, rng)
    }
}

/// Sphere pairs rejected until `‖a + b‖` exceeds a margin; used by the
/// geodesic-length and continuity checks, which are only claimed away from
/// the antipodal locus.
#[derive(Clone, Copy, Debug)]
pub struct NonAntipodalSpherePairs {
    pub spec: SphereSpec,
    pub min_sum_norm: f64,
}

impl PairSource for NonAntipodalSpherePairs {
    fn label(&self) -> String {
        format!(
            "pairs on {} with ‖a+b‖ > {}",
            self.spec.space_name(),
            self.min_sum_norm
        )
    }

    fn pairs(&self, seed: u64, n: usize) -> Box<dyn Iterator<Item = (Vector, Vector)> + '_> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = self.spec;
        let margin = self.min_sum_norm;
        Box::new((0..n).map(move |_| loop {
            let a = sphere_member(&spec, &mut rng);
            let b = sphere_member(&spec, &mut rng);
            if a.add(&b).norm() > margin {
                return (a, b);
            }
        }))
    }

    fn perturb(&self, v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector {
        sphere_perturb(v, delta, rng)
    }
}

/// The exhaustive `resolution x resolution` angular grid on the circle,
/// pairing every grid point with every other. Ignores seed and requested
/// count.
#[derive(Clone, Copy, Debug)]
pub struct CircleGridPairs {
    pub resolution: usize,
}

impl PairSource for CircleGridPairs {
    fn label(&self) -> String {
        format!("{0}x{0} angular grid on S^1", self.resolution)
    }

    fn pairs(&self, _seed: u64, _n: usize) -> Box<dyn Iterator<Item = (Vector, Vector)> + '_> {
        let res = self.resolution;
        let step = std::f64::consts::TAU / res as f64;
        Box::new((0..res).flat_map(move |i| {
            let a = circle_point(i as f64 * step);
            (0..res).map(move |j| (a.clone(), circle_point(j as f64 * step)))
        }))
    }

    fn perturb(&self, v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector {
        sphere_perturb(v, delta, rng)
    }
}

/// Free-space pairs for the obstacle problem: log-uniform radius over
/// `[clearance + 0.01, 10]` times a uniform direction, so dispatch
/// boundaries near every scale get exercised.
#[derive(Clone, Copy, Debug)]
pub struct AnnulusPairs {
    pub spec: AnnulusSpec,
}

impl AnnulusPairs {
    fn radius_range(&self) -> (f64, f64) {
        let lo = self.spec.clearance_radius() + 0.01;
        let hi = 10.0_f64.max(2.0 * lo);
        (lo, hi)
    }

    fn member(&self, rng: &mut ChaCha8Rng) -> Vector {
        let (lo, hi) = self.radius_range();
        let radius = (rng.gen::<f64>() * (hi.ln() - lo.ln()) + lo.ln()).exp();
        circle_point(rng.gen::<f64>() * std::f64::consts::TAU).scale(radius)
    }
}

impl PairSource for AnnulusPairs {
    fn label(&self) -> String {
        format!("free-space pairs in {}", self.spec.space_name())
    }

    fn pairs(&self, seed: u64, n: usize) -> Box<dyn Iterator<Item = (Vector, Vector)> + '_> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Box::new((0..n).map(move |_| (self.member(&mut rng), self.member(&mut rng))))
    }

    fn perturb(&self, v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector {
        let dir = random_unit(v.dim(), rng);
        let moved = v.add(&dir.scale(delta));
        if moved.norm() > self.spec.clearance_radius() + 0.005 {
            moved
        } else {
            v.add(&dir.scale(-delta))
        }
    }
}

/// Pairs whose radial directions are exactly opposite: the rule-2 pairs of
/// the transferred planner.
#[derive(Clone, Copy, Debug)]
pub struct RadialOppositeAnnulusPairs {
    pub spec: AnnulusSpec,
}

impl PairSource for RadialOppositeAnnulusPairs {
    fn label(&self) -> String {
        format!("radially opposite pairs in {}", self.spec.space_name())
    }

    fn pairs(&self, seed: u64, n: usize) -> Box<dyn Iterator<Item = (Vector, Vector)> + '_> {
        let inner = AnnulusPairs { spec: self.spec };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Box::new((0..n).map(move |_| {
            let a = inner.member(&mut rng);
            let b = inner.member(&mut rng);
            let b_opposite = a.scale(-b.norm() / a.norm());
            (a, b_opposite)
        }))
    }

    fn perturb(&self, v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector {
        AnnulusPairs { spec: self.spec }.perturb(v, delta, rng)
    }
}

/// Uniform pairs in the closed disk of the given radius.
#[derive(Clone, Copy, Debug)]
pub struct DiskPairs {
    pub radius: f64,
}

impl DiskPairs {
    fn member(&self, rng: &mut ChaCha8Rng) -> Vector {
        let r = self.radius * rng.gen::<f64>().sqrt();
        circle_point(rng.gen::<f64>() * std::f64::consts::TAU).scale(r)
    }
}

impl PairSource for DiskPairs {
    fn label(&self) -> String {
        format!("uniform pairs in disk(r={})", self.radius)
    }

    fn pairs(&self, seed: u64, n: usize) -> Box<dyn Iterator<Item = (Vector, Vector)> + '_> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Box::new((0..n).map(move |_| (self.member(&mut rng), self.member(&mut rng))))
    }

    fn perturb(&self, v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector {
        let dir = random_unit(v.dim(), rng);
        let moved = v.add(&dir.scale(delta));
        if moved.norm() <= self.radius {
            moved
        } else {
            v.add(&dir.scale(-delta))
        }
    }
}

/// Uniform pairs in the rectangle `[-hw, hw] x [-hh, hh]`.
#[derive(Clone, Copy, Debug)]
pub struct RectanglePairs {
    pub half_width: f64,
    pub half_height: f64,
}

impl RectanglePairs {
    fn member(&self, rng: &mut ChaCha8Rng) -> Vector {
        Vector::raw(vec![
            (rng.gen::<f64>() * 2.0 - 1.0) * self.half_width,
            (rng.gen::<f64>() * 2.0 - 1.0) * self.half_height,
        ])
    }
}

impl PairSource for RectanglePairs {
    fn label(&self) -> String {
        format!(
            "uniform pairs in rectangle({}x{})",
            2.0 * self.half_width,
            2.0 * self.half_height
        )
    }

    fn pairs(&self, seed: u64, n: usize) -> Box<dyn Iterator<Item = (Vector, Vector)> + '_> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Box::new((0..n).map(move |_| (self.member(&mut rng), self.member(&mut rng))))
    }

    fn perturb(&self, v: &Vector, delta: f64, rng: &mut ChaCha8Rng) -> Vector {
        let dir = random_unit(v.dim(), rng);
        let moved = v.add(&dir.scale(delta));
        let inside = moved.coords()[0].abs() <= self.half_width
            && moved.coords()[1].abs() <= self.half_height;
        if inside {
            moved
        } else {
            v.add(&dir.scale(-delta))
        }
    }
}
