//! Constructive quasi-density witnesses.
//!
//! For an irreducible infinite system, some single-generator descent class
//! `W^{s₀}` is quasi-dense, and a certificate for that fact can be built by
//! walking descent targets: from a maximal spherical start set `U₀`,
//! right-multiplying the target class by a letter `a ∉ V` replaces the
//! target `V` by `{t ∈ V : o(a·t) = 2} ∪ {a}`. Each step keeps the class
//! quasi-dense and costs one unit of the density constant, so a shortest
//! path from `U₀` to a singleton `{s₀}` certifies quasi-density of
//! `W^{s₀}` with constant `|U₀| + chain length + |finite part|`.
//!
//! The search runs over subsets of `S̃` (the infinite irreducible part):
//! reachability of a singleton needs connectivity of the ∞-graph there,
//! which is exactly the irreducibility hypothesis. For reducible or finite
//! systems [`find_witness`] reports the obstruction instead.

use std::collections::{HashMap, VecDeque};

use crate::ball::{quasi_dense_check_in, Ball, QuasiDensityVerdict, DEFAULT_BALL_CAP};
use crate::error::{Error, Result};
use crate::presentation::{Gen, GenSet, Presentation};
use crate::structure::MinimalityVerdict;
use crate::word::NormalForm;

/// A checkable certificate that `W^{s0}` is quasi-dense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiDensityWitness {
    pub s0: Gen,
    /// `U₀`: the start descent target, a maximal clique of the commutation
    /// graph induced on `S̃`.
    pub start_clique: GenSet,
    /// The step letters `a₁ … a_m`.
    pub chain: Vec<Gen>,
    /// Descent targets along the chain: `V₀ = U₀` through `V_m = {s0}`.
    pub trace: Vec<GenSet>,
    /// Certified density constant: `|U₀| + m + |finite part|`.
    pub bound_n: usize,
}

/// What the witness search finds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// The commutation graph is complete; the group is finite and has no
    /// boundary to certify anything about.
    FiniteGroup,
    /// Two or more infinite irreducible factors; no single-generator class
    /// is quasi-dense. Parts mirror the minimality splitting.
    Splitting { part_a: GenSet, part_b: GenSet },
    Witness(QuasiDensityWitness),
}

/// One step of the descent-target walk: keep the letters of `v` commuting
/// with `a`, then adjoin `a`.
pub fn apply_step(p: &Presentation, v: GenSet, a: Gen) -> Result<GenSet> {
    if !p.is_spherical(v) {
        return Err(Error::NotSpherical(p.set_string(v)));
    }
    if v.contains(a) {
        return Err(Error::StepLetterInTarget {
            letter: p.name(a).to_owned(),
            set: p.set_string(v),
        });
    }
    Ok((v & p.commuters(a)).with(a))
}

/// Search for a quasi-density witness, or report why none exists.
///
/// The start set is the lexicographically least maximal clique of the
/// induced system on `S̃`; the chain is a breadth-first shortest path to a
/// singleton target, ties broken by generator order.
pub fn find_witness(p: &Presentation) -> WitnessOutcome {
    let decomp = p.irreducible_components();
    match p.boundary_minimal() {
        MinimalityVerdict::EmptyBoundary => return WitnessOutcome::FiniteGroup,
        MinimalityVerdict::NotMinimal { part_a, part_b } => {
            return WitnessOutcome::Splitting { part_a, part_b }
        }
        MinimalityVerdict::Minimal => {}
    }
    let s_tilde = decomp.s_tilde;
    let start = *p
        .maximal_cliques_within(s_tilde)
        .first()
        .expect("S̃ is nonempty for a minimal verdict");

    // Breadth-first search over descent targets within S̃. Expanding
    // letters in generator order makes the first singleton reached the
    // canonical shortest chain.
    let mut parent: HashMap<GenSet, (GenSet, Gen)> = HashMap::new();
    let mut queue: VecDeque<GenSet> = VecDeque::new();
    queue.push_back(start);
    let goal = 'search: {
        if let Some(g) = start.sole_element() {
            break 'search Some((start, g));
        }
        while let Some(v) = queue.pop_front() {
            for a in s_tilde.without(v).iter() {
                let next = (v & p.commuters(a)).with(a);
                if next == start || parent.contains_key(&next) {
                    continue;
                }
                parent.insert(next, (v, a));
                if let Some(g) = next.sole_element() {
                    break 'search Some((next, g));
                }
                queue.push_back(next);
            }
        }
        None
    };
    let (end, s0) = goal.expect("singleton reachable: the ∞-graph on S̃ is connected");

    let mut chain_rev = Vec::new();
    let mut trace_rev = vec![end];
    let mut cur = end;
    while cur != start {
        let (prev, a) = parent[&cur];
        chain_rev.push(a);
        trace_rev.push(prev);
        cur = prev;
    }
    let chain: Vec<Gen> = chain_rev.into_iter().rev().collect();
    let trace: Vec<GenSet> = trace_rev.into_iter().rev().collect();
    let bound_n = start.len() + chain.len() + decomp.finite_part.len();
    WitnessOutcome::Witness(QuasiDensityWitness {
        s0,
        start_clique: start,
        chain,
        trace,
        bound_n,
    })
}

/// Empirical certification of a witness against the ball of the given
/// radius.
#[derive(Clone, Debug)]
pub struct CertificationReport {
    pub radius: usize,
    pub bound_n: usize,
    /// How many elements with descent set exactly `U₀` were checked.
    pub inclusion_instances: usize,
    /// Elements where multiplying by the chain did not land on `{s0}`.
    pub inclusion_failures: Vec<InclusionFailure>,
    pub density: QuasiDensityVerdict,
}

#[derive(Clone, Debug)]
pub struct InclusionFailure {
    pub element: NormalForm,
    pub product: NormalForm,
    pub got: GenSet,
}

impl CertificationReport {
    /// The empirically least density constant, when the density check
    /// passed.
    pub fn empirical_n(&self) -> Option<usize> {
        self.density.dense_n()
    }

    pub fn passed(&self) -> bool {
        self.inclusion_failures.is_empty()
            && matches!(self.density, QuasiDensityVerdict::Dense { n } if n <= self.bound_n)
    }
}

/// Validate a witness structurally, then check it against the ball of
/// radius `radius`: every element with descent set exactly `U₀`, multiplied
/// by the chain, must land in descent class `{s0}`, and that class must be
/// quasi-dense with a constant within the witness bound.
///
/// Structural corruption (a step letter inside its target, a broken trace,
/// a non-singleton end) is a precondition error, not a failed report.
pub fn certify_witness(
    p: &Presentation,
    w: &QuasiDensityWitness,
    radius: usize,
) -> Result<CertificationReport> {
    certify_witness_with_cap(p, w, radius, DEFAULT_BALL_CAP)
}

pub fn certify_witness_with_cap(
    p: &Presentation,
    w: &QuasiDensityWitness,
    radius: usize,
    cap: usize,
) -> Result<CertificationReport> {
    validate_witness(p, w)?;
    if radius <= w.bound_n {
        return Err(Error::RadiusTooSmall {
            radius,
            needed: w.bound_n,
        });
    }
    let ball = Ball::build_with_cap(p, radius, cap)?;

    let target = GenSet::singleton(w.s0);
    let mut inclusion_instances = 0;
    let mut inclusion_failures = Vec::new();
    for u in ball.with_descent(w.start_clique) {
        inclusion_instances += 1;
        let mut prod = u.clone();
        for &a in &w.chain {
            prod = p.right_multiply(&prod, a);
        }
        let got = p.right_descents(&prod);
        if got != target {
            inclusion_failures.push(InclusionFailure {
                element: u.clone(),
                product: prod,
                got,
            });
        }
    }

    let density = quasi_dense_check_in(p, &ball, target, w.bound_n)?;
    Ok(CertificationReport {
        radius,
        bound_n: w.bound_n,
        inclusion_instances,
        inclusion_failures,
        density,
    })
}

fn validate_witness(p: &Presentation, w: &QuasiDensityWitness) -> Result<()> {
    let fail = |msg: String| Err(Error::InvalidWitness(msg));
    if w.trace.len() != w.chain.len() + 1 {
        return fail(format!(
            "trace length {} does not fit chain length {}",
            w.trace.len(),
            w.chain.len()
        ));
    }
    if w.trace[0] != w.start_clique {
        return fail("trace does not start at the start clique".to_owned());
    }
    if w.start_clique.is_empty() {
        return fail("start clique is empty".to_owned());
    }
    let mut v = w.start_clique;
    for (k, &a) in w.chain.iter().enumerate() {
        v = apply_step(p, v, a)?;
        if w.trace[k + 1] != v {
            return fail(format!(
                "trace entry {} is {{{}}}, expected {{{}}}",
                k + 1,
                p.set_string(w.trace[k + 1]),
                p.set_string(v)
            ));
        }
    }
    match v.sole_element() {
        Some(g) if g == w.s0 => {}
        _ => {
            return fail(format!(
                "chain ends at {{{}}}, not at the singleton {{{}}}",
                p.set_string(v),
                p.name(w.s0)
            ))
        }
    }
    let decomp = p.irreducible_components();
    let expected_bound = w.start_clique.len() + w.chain.len() + decomp.finite_part.len();
    if w.bound_n != expected_bound {
        return fail(format!(
            "bound {} does not match |U₀| + chain + |finite part| = {}",
            w.bound_n, expected_bound
        ));
    }
    Ok(())
}

/// A center of an empirically empty neighborhood of the descent class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hole {
    pub element: NormalForm,
    /// Exact distance to the nearest element of the class inside the ball;
    /// `None` when the ball contains no such element.
    pub distance_floor: Option<usize>,
}

/// Search `B_{radius−n_max}` for an element farther than `n_max` from every
/// element of descent class `{s}` in `B_radius`. Returns the deepest such
/// hole, or `None` when the class is dense enough at this radius.
pub fn find_hole(
    p: &Presentation,
    s: Gen,
    radius: usize,
    n_max: usize,
) -> Result<Option<Hole>> {
    find_hole_with_cap(p, s, radius, n_max, DEFAULT_BALL_CAP)
}

pub fn find_hole_with_cap(
    p: &Presentation,
    s: Gen,
    radius: usize,
    n_max: usize,
    cap: usize,
) -> Result<Option<Hole>> {
    let verdict =
        crate::ball::quasi_dense_check_with_cap(p, GenSet::singleton(s), radius, n_max, cap)?;
    Ok(match verdict {
        QuasiDensityVerdict::Dense { .. } => None,
        QuasiDensityVerdict::NotWithin {
            counterexample,
            distance_floor,
            ..
        } => Some(Hole {
            element: counterexample,
            distance_floor,
        }),
    })
}
