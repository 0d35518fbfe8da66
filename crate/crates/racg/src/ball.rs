//! Cayley balls and the empirical quasi-density check.
//!
//! A ball of radius `R` holds every element of length ≤ `R`, organized as
//! spheres in ShortLex order, with an index from descent profile to the
//! elements carrying it. Enumeration extends each sphere by the generators
//! outside the descent set, so every candidate really has the next length;
//! deduplication happens on normal forms. Everything is single-threaded and
//! ordered, so two builds of the same ball are identical.
//!
//! The quasi-density check is the boundary-safe version: for a verdict with
//! constant `N`, only centers in the shrunken ball `B_{R−N}` are tested, and
//! their witnesses `w·x` with `ℓ(x) ≤ N` automatically stay inside `B_R`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::presentation::{GenSet, Presentation};
use crate::word::NormalForm;

/// Default cap on enumerated elements, overridable per call.
pub const DEFAULT_BALL_CAP: usize = 10_000_000;

/// All elements of length ≤ `radius`, as ShortLex-sorted spheres plus a
/// descent-profile index.
#[derive(Clone, Debug)]
pub struct Ball {
    radius: usize,
    spheres: Vec<Vec<NormalForm>>,
    by_descent: BTreeMap<GenSet, Vec<NormalForm>>,
    len: usize,
}

impl Ball {
    pub fn build(p: &Presentation, radius: usize) -> Result<Ball> {
        Ball::build_with_cap(p, radius, DEFAULT_BALL_CAP)
    }

    /// Enumerate the ball, failing with a resource error (never a silent
    /// truncation) once more than `cap` elements appear.
    pub fn build_with_cap(p: &Presentation, radius: usize, cap: usize) -> Result<Ball> {
        let mut spheres: Vec<Vec<NormalForm>> = vec![vec![NormalForm::identity()]];
        let mut total = 1usize;
        if total > cap {
            return Err(Error::BallCapExceeded {
                cap,
                completed_radius: 0,
                abandoned_radius: 0,
                elements: 0,
            });
        }
        for k in 0..radius {
            let mut next: Vec<NormalForm> = Vec::new();
            for w in &spheres[k] {
                let descents = p.right_descents(w);
                for s in p.all_gens().without(descents).iter() {
                    next.push(p.right_multiply(w, s));
                }
            }
            next.sort_unstable();
            next.dedup();
            total += next.len();
            if total > cap {
                return Err(Error::BallCapExceeded {
                    cap,
                    completed_radius: k,
                    abandoned_radius: k + 1,
                    elements: total - next.len(),
                });
            }
            spheres.push(next);
        }
        let mut by_descent: BTreeMap<GenSet, Vec<NormalForm>> = BTreeMap::new();
        for sphere in &spheres {
            for w in sphere {
                by_descent.entry(p.right_descents(w)).or_default().push(w.clone());
            }
        }
        Ok(Ball {
            radius,
            spheres,
            by_descent,
            len: total,
        })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Total number of elements.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sphere(&self, k: usize) -> &[NormalForm] {
        &self.spheres[k]
    }

    pub fn sphere_sizes(&self) -> Vec<usize> {
        self.spheres.iter().map(|s| s.len()).collect()
    }

    /// All elements in ShortLex order.
    pub fn elements(&self) -> impl Iterator<Item = &NormalForm> {
        self.spheres.iter().flatten()
    }

    /// Elements of length ≤ `r` in ShortLex order.
    pub fn elements_up_to(&self, r: usize) -> impl Iterator<Item = &NormalForm> {
        self.spheres[..=r.min(self.radius)].iter().flatten()
    }

    pub fn contains(&self, w: &NormalForm) -> bool {
        w.len() <= self.radius && self.spheres[w.len()].binary_search(w).is_ok()
    }

    /// Elements whose right descent set is exactly `t`, in ShortLex order.
    pub fn with_descent(&self, t: GenSet) -> &[NormalForm] {
        self.by_descent.get(&t).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The descent profiles realized in this ball. Keys come out in bitmask
    /// order; callers that display them re-sort lexicographically.
    pub fn descent_profiles(&self) -> impl Iterator<Item = (GenSet, &[NormalForm])> {
        self.by_descent.iter().map(|(k, v)| (*k, v.as_slice()))
    }
}

/// Outcome of the empirical quasi-density check for a descent target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiDensityVerdict {
    /// `n` is the least constant that works at this radius.
    Dense { n: usize },
    /// No constant up to `n_max` works. The counterexample is the
    /// deepest-hole center (ShortLex-least among ties); `distance_floor` is
    /// its exact distance to the nearest target in the ball, `None` when
    /// the ball contains no target at all.
    NotWithin {
        n_max: usize,
        counterexample: NormalForm,
        distance_floor: Option<usize>,
    },
}

impl QuasiDensityVerdict {
    pub fn is_dense(&self) -> bool {
        matches!(self, QuasiDensityVerdict::Dense { .. })
    }

    pub fn dense_n(&self) -> Option<usize> {
        match self {
            QuasiDensityVerdict::Dense { n } => Some(*n),
            QuasiDensityVerdict::NotWithin { .. } => None,
        }
    }
}

/// Is the set of elements with descent set exactly `target` quasi-dense at
/// radius `radius`, for some constant `N ≤ n_max`?
///
/// Returns `Dense` with the least such `N`: every center in `B_{radius−N}`
/// has a multiplier `x` with `ℓ(x) ≤ N` and `right_descents(center·x) =
/// target`. Otherwise `NotWithin` carries the worst failing center.
pub fn quasi_dense_check(
    p: &Presentation,
    target: GenSet,
    radius: usize,
    n_max: usize,
) -> Result<QuasiDensityVerdict> {
    quasi_dense_check_with_cap(p, target, radius, n_max, DEFAULT_BALL_CAP)
}

pub fn quasi_dense_check_with_cap(
    p: &Presentation,
    target: GenSet,
    radius: usize,
    n_max: usize,
    cap: usize,
) -> Result<QuasiDensityVerdict> {
    if radius <= n_max {
        return Err(Error::RadiusTooSmall {
            radius,
            needed: n_max,
        });
    }
    let ball = Ball::build_with_cap(p, radius, cap)?;
    quasi_dense_check_in(p, &ball, target, n_max)
}

/// Same check against a pre-built ball (`ball.radius() > n_max` required).
pub fn quasi_dense_check_in(
    p: &Presentation,
    ball: &Ball,
    target: GenSet,
    n_max: usize,
) -> Result<QuasiDensityVerdict> {
    let radius = ball.radius();
    if radius <= n_max {
        return Err(Error::RadiusTooSmall {
            radius,
            needed: n_max,
        });
    }

    // need(w) = least ℓ(x) ≤ n_max with right_descents(w·x) = target, by
    // trying multipliers sphere by sphere.
    let need = |w: &NormalForm| -> Option<usize> {
        for n in 0..=n_max {
            for x in ball.sphere(n) {
                if p.right_descents(&p.multiply(w, x)) == target {
                    return Some(n);
                }
            }
        }
        None
    };
    let needs: Vec<Vec<Option<usize>>> = (0..=radius)
        .map(|k| ball.sphere(k).iter().map(need).collect())
        .collect();

    for n in 0..=n_max {
        let ok = needs[..=radius - n]
            .iter()
            .flatten()
            .all(|req| matches!(req, Some(r) if *r <= n));
        if ok {
            return Ok(QuasiDensityVerdict::Dense { n });
        }
    }

    // No constant works: report the deepest hole among the failing centers
    // of the outermost admissible region.
    let targets = ball.with_descent(target);
    let floor = |w: &NormalForm| -> Option<usize> {
        targets.iter().map(|v| p.distance(w, v)).min()
    };
    let mut worst: Option<(NormalForm, Option<usize>)> = None;
    for (k, sphere_needs) in needs[..=radius - n_max].iter().enumerate() {
        for (i, req) in sphere_needs.iter().enumerate() {
            if matches!(req, Some(r) if *r <= n_max) {
                continue;
            }
            let w = &ball.sphere(k)[i];
            let d = floor(w);
            let deeper = match &worst {
                None => true,
                // None floor means no target in the ball at all: deepest.
                Some((_, best_d)) => match (d, best_d) {
                    (None, Some(_)) => true,
                    (Some(_), None) => false,
                    (a, b) => a > *b,
                },
            };
            if deeper {
                worst = Some((w.clone(), d));
            }
        }
    }
    let (counterexample, distance_floor) = worst.expect("some center failed");
    Ok(QuasiDensityVerdict::NotWithin {
        n_max,
        counterexample,
        distance_floor,
    })
}
