//! Continuous deformations `H : X x [0,1] -> X`.

use std::sync::Arc;

use crate::path::Path;
use crate::vector::Vector;

type HomotopyFn = Arc<dyn Fn(&Vector, f64) -> Vector + Send + Sync>;

/// A homotopy, evaluated pointwise. The crate only ever inspects it through
/// evaluation, so contracts like `H(x, 0) = x` are checked by sampling where
/// they matter (planner and transfer constructors).
#[derive(Clone)]
pub struct Homotopy {
    dim: usize,
    map: HomotopyFn,
}

impl Homotopy {
    pub fn new<F>(dim: usize, map: F) -> Self
    where
        F: Fn(&Vector, f64) -> Vector + Send + Sync + 'static,
    {
        assert!(dim >= 1, "homotopy dimension must be at least 1");
        Self {
            dim,
            map: Arc::new(map),
        }
    }

    /// The straight-line contraction `H(x, t) = (1-t)x + t*x0`.
    pub fn linear_contraction(center: &Vector) -> Self {
        let center = center.clone();
        Self::new(center.dim(), move |x, t| Vector::lerp(x, &center, t))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, x: &Vector, t: f64) -> Vector {
        assert!(
            (0.0..=1.0).contains(&t),
            "homotopy parameter {t} outside [0,1]"
        );
        (self.map)(x, t)
    }

    /// The track `t -> H(x, t)` as a path.
    pub fn track(&self, x: &Vector) -> Path {
        let map = Arc::clone(&self.map);
        let x = x.clone();
        Path::from_fn(self.dim, move |t| map(&x, t))
    }

    /// The reversed track `t -> H(x, 1 - t)`.
    pub fn reversed_track(&self, x: &Vector) -> Path {
        let map = Arc::clone(&self.map);
        let x = x.clone();
        Path::from_fn(self.dim, move |t| map(&x, 1.0 - t))
    }
}

impl std::fmt::Debug for Homotopy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Homotopy").field("dim", &self.dim).finish()
    }
}
