//! Evaluable parametric curves `[0,1] -> R^d`.
//!
//! A path is a closed-form evaluation rule, never a stored sample array:
//! every planner in this crate emits exact formulas, and sampling is a view
//! on top of them. Piecewise constructions carry their interior breakpoints
//! explicitly so the verification harness can probe continuity at exactly
//! the schedule points (1/2, or 1/3 and 2/3, and anything nested inside).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::tolerance::EPS_ASSERT;
use crate::vector::Vector;

type EvalFn = Arc<dyn Fn(f64) -> Vector + Send + Sync>;

#[derive(Clone)]
pub struct Path {
    dim: usize,
    breakpoints: Vec<f64>,
    eval: EvalFn,
}

impl std::fmt::Debug for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Path")
            .field("dim", &self.dim)
            .field("breakpoints", &self.breakpoints)
            .finish()
    }
}

impl Path {
    /// A path evaluated by an arbitrary closure, with no interior breakpoints.
    pub fn from_fn<F>(dim: usize, f: F) -> Self
    where
        F: Fn(f64) -> Vector + Send + Sync + 'static,
    {
        assert!(dim >= 1, "path dimension must be at least 1");
        Self {
            dim,
            breakpoints: Vec::new(),
            eval: Arc::new(f),
        }
    }

    /// Attaches interior breakpoints (strictly between 0 and 1).
    pub fn with_breakpoints(mut self, mut breakpoints: Vec<f64>) -> Self {
        assert!(
            breakpoints.iter().all(|b| 0.0 < *b && *b < 1.0),
            "breakpoints must lie strictly inside (0,1)"
        );
        breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
        breakpoints.dedup();
        self.breakpoints = breakpoints;
        self
    }

    pub fn constant(value: &Vector) -> Self {
        let value = value.clone();
        Self::from_fn(value.dim(), move |_| value.clone())
    }

    /// The straight segment `t -> (1-t)a + tb`.
    pub fn segment(a: &Vector, b: &Vector) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                left: a.dim(),
                right: b.dim(),
            });
        }
        let (a, b) = (a.clone(), b.clone());
        Ok(Self::from_fn(a.dim(), move |t| Vector::lerp(&a, &b, t)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Interior parameter values where the defining formula switches.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn eval(&self, t: f64) -> Vector {
        assert!(
            (0.0..=1.0).contains(&t),
            "path parameter {t} outside [0,1]"
        );
        (self.eval)(t)
    }

    pub fn start(&self) -> Vector {
        self.eval(0.0)
    }

    pub fn end(&self) -> Vector {
        self.eval(1.0)
    }

    /// Post-composes a coordinate map, keeping the breakpoint schedule.
    pub fn map<F>(self, dim: usize, f: F) -> Self
    where
        F: Fn(Vector) -> Vector + Send + Sync + 'static,
    {
        let inner = self.eval;
        Self {
            dim,
            breakpoints: self.breakpoints,
            eval: Arc::new(move |t| f(inner(t))),
        }
    }
}

fn junction_gap(left: &Path, right: &Path, at: f64) -> Result<()> {
    let gap = left.end().distance(&right.start());
    if gap > EPS_ASSERT {
        return Err(Error::JunctionGap {
            at,
            gap,
            tolerance: EPS_ASSERT,
        });
    }
    Ok(())
}

fn check_dims(paths: &[&Path]) -> Result<usize> {
    let dim = paths[0].dim();
    for p in &paths[1..] {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: p.dim(),
            });
        }
    }
    Ok(dim)
}

/// Runs `p` on `[0, 1/2]` and `q` on `[1/2, 1]`, each at double speed.
///
/// The endpoints must already agree: a junction gap is a caller bug, not
/// something to smooth over.
pub fn concat2(p: Path, q: Path) -> Result<Path> {
    let dim = check_dims(&[&p, &q])?;
    junction_gap(&p, &q, 0.5)?;

    let mut breakpoints = vec![0.5];
    breakpoints.extend(p.breakpoints().iter().map(|b| b / 2.0));
    breakpoints.extend(q.breakpoints().iter().map(|b| 0.5 + b / 2.0));

    Ok(Path::from_fn(dim, move |t| {
        if t <= 0.5 {
            p.eval((2.0 * t).min(1.0))
        } else {
            q.eval((2.0 * t - 1.0).clamp(0.0, 1.0))
        }
    })
    .with_breakpoints(breakpoints))
}

/// Runs `p`, `q`, `r` on the thirds schedule: `p(3t)`, `q(3t-1)`, `r(3t-2)`.
pub fn concat3(p: Path, q: Path, r: Path) -> Result<Path> {
    let dim = check_dims(&[&p, &q, &r])?;
    junction_gap(&p, &q, 1.0 / 3.0)?;
    junction_gap(&q, &r, 2.0 / 3.0)?;

    let mut breakpoints = vec![1.0 / 3.0, 2.0 / 3.0];
    breakpoints.extend(p.breakpoints().iter().map(|b| b / 3.0));
    breakpoints.extend(q.breakpoints().iter().map(|b| (1.0 + b) / 3.0));
    breakpoints.extend(r.breakpoints().iter().map(|b| (2.0 + b) / 3.0));

    Ok(Path::from_fn(dim, move |t| {
        if t <= 1.0 / 3.0 {
            p.eval((3.0 * t).min(1.0))
        } else if t <= 2.0 / 3.0 {
            q.eval((3.0 * t - 1.0).clamp(0.0, 1.0))
        } else {
            r.eval((3.0 * t - 2.0).clamp(0.0, 1.0))
        }
    })
    .with_breakpoints(breakpoints))
}

/// `n` evaluations at uniform parameters, endpoints included.
pub fn sample_path(p: &Path, n: usize) -> Vec<Vector> {
    assert!(n >= 2, "need at least the two endpoint samples");
    let last = (n - 1) as f64;
    (0..n).map(|i| p.eval(i as f64 / last)).collect()
}

/// Chord-length sum over the uniform `n`-point discretization.
///
/// For the paths this crate produces the value converges to arc length from
/// below as the partition is refined; refining `n` points to `2n - 1` keeps
/// the old parameters and therefore never decreases the sum.
pub fn polyline_length(p: &Path, n: usize) -> f64 {
    assert!(n >= 2, "need at least the two endpoint samples");
    let last = (n - 1) as f64;
    let mut total = 0.0;
    let mut prev = p.eval(0.0);
    for i in 1..n {
        let cur = p.eval(i as f64 / last);
        total += cur.distance(&prev);
        prev = cur;
    }
    total
}
