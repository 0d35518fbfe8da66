//! Exhaustive structural checks over a ball.
//!
//! Each check sweeps every element (or every applicable instance) of a ball
//! and confirms an identity the rest of the crate relies on. They exist to
//! catch implementation drift: a correct engine passes all of them on every
//! presentation, and a corrupted one is expected to fail with a concrete
//! witness word. The descent-based checks accept a custom descent function
//! for exactly that kind of differential testing.

use crate::ball::{quasi_dense_check_in, Ball, QuasiDensityVerdict};
use crate::error::{Error, Result};
use crate::presentation::{GenSet, Presentation};
use crate::word::NormalForm;

/// Cap on recorded violations per check; the count still reflects all of
/// them.
const MAX_RECORDED: usize = 5;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CheckId {
    /// Right or left multiplication by a generator changes length by
    /// exactly one.
    LengthStep,
    /// Every descent set is spherical.
    DescentClique,
    /// For `o(s·t) = ∞`, right-multiplying a descent-`{s}` element by `t`
    /// lands in descent class `{t}`.
    SingletonShift,
    /// If `t·w` is reduced and `t·w·t' = w`, then `t = t'` and `t` commutes
    /// with every letter of `w`.
    CommutingSandwich,
    /// Right-multiplying a descent-`U` element by `s₀ ∉ U` lands in descent
    /// class `{t ∈ U : o(s₀·t) = 2} ∪ {s₀}` exactly.
    DescentStep,
    /// For every maximal spherical `T`, the class `W^T` is quasi-dense with
    /// constant at most `|T|`.
    MaxCliqueDensity,
}

impl CheckId {
    pub const ALL: [CheckId; 6] = [
        CheckId::LengthStep,
        CheckId::DescentClique,
        CheckId::SingletonShift,
        CheckId::CommutingSandwich,
        CheckId::DescentStep,
        CheckId::MaxCliqueDensity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::LengthStep => "length-step",
            CheckId::DescentClique => "descent-clique",
            CheckId::SingletonShift => "singleton-shift",
            CheckId::CommutingSandwich => "commuting-sandwich",
            CheckId::DescentStep => "descent-step",
            CheckId::MaxCliqueDensity => "max-clique-density",
        }
    }

    pub fn from_name(name: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.name() == name)
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check: CheckId,
    pub instances: usize,
    pub violation_count: usize,
    /// Up to [`MAX_RECORDED`] rendered counterexamples.
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

struct Recorder {
    check: CheckId,
    instances: usize,
    violation_count: usize,
    violations: Vec<String>,
}

impl Recorder {
    fn new(check: CheckId) -> Recorder {
        Recorder {
            check,
            instances: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    fn instance(&mut self) {
        self.instances += 1;
    }

    fn violation(&mut self, render: impl FnOnce() -> String) {
        self.violation_count += 1;
        if self.violations.len() < MAX_RECORDED {
            self.violations.push(render());
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            check: self.check,
            instances: self.instances,
            violation_count: self.violation_count,
            violations: self.violations,
        }
    }
}

pub fn run_check(p: &Presentation, ball: &Ball, check: CheckId) -> Result<CheckReport> {
    match check {
        CheckId::LengthStep => Ok(length_step(p, ball)),
        CheckId::DescentClique => Ok(descent_clique_with(p, ball, Presentation::right_descents)),
        CheckId::SingletonShift => Ok(singleton_shift(p, ball)),
        CheckId::CommutingSandwich => Ok(commuting_sandwich(p, ball)),
        CheckId::DescentStep => Ok(descent_step_with(p, ball, Presentation::right_descents)),
        CheckId::MaxCliqueDensity => max_clique_density(p, ball),
    }
}

pub fn run_checks(p: &Presentation, ball: &Ball, checks: &[CheckId]) -> Result<Vec<CheckReport>> {
    checks.iter().map(|&c| run_check(p, ball, c)).collect()
}

fn length_step(p: &Presentation, ball: &Ball) -> CheckReport {
    let mut rec = Recorder::new(CheckId::LengthStep);
    for w in ball.elements() {
        for s in p.gens() {
            rec.instance();
            let snf = p.reduce(&[s]);
            let right = p.right_multiply(w, s).len() as i64 - w.len() as i64;
            let left = p.multiply(&snf, w).len() as i64 - w.len() as i64;
            if right.abs() != 1 || left.abs() != 1 {
                rec.violation(|| {
                    format!(
                        "w = {}, s = {}: length steps right {right}, left {left}",
                        p.word_string(w.letters()),
                        p.name(s)
                    )
                });
            }
        }
    }
    rec.finish()
}

/// Descent sets must be spherical. Exposed with a pluggable descent
/// function so a deliberately corrupted engine can be shown to fail.
pub fn descent_clique_with(
    p: &Presentation,
    ball: &Ball,
    descents: impl Fn(&Presentation, &NormalForm) -> GenSet,
) -> CheckReport {
    let mut rec = Recorder::new(CheckId::DescentClique);
    for w in ball.elements() {
        rec.instance();
        let d = descents(p, w);
        if !p.is_spherical(d) {
            rec.violation(|| {
                format!(
                    "w = {}: descent set {{{}}} is not spherical",
                    p.word_string(w.letters()),
                    p.set_string(d)
                )
            });
        }
    }
    rec.finish()
}

fn singleton_shift(p: &Presentation, ball: &Ball) -> CheckReport {
    let mut rec = Recorder::new(CheckId::SingletonShift);
    for s in p.gens() {
        for t in p.gens() {
            if s == t || p.commutes(s, t) {
                continue;
            }
            for w in ball.with_descent(GenSet::singleton(s)) {
                rec.instance();
                let shifted = p.right_multiply(w, t);
                let got = p.right_descents(&shifted);
                if got != GenSet::singleton(t) {
                    rec.violation(|| {
                        format!(
                            "w = {} in class {{{}}}, t = {}: got {{{}}}",
                            p.word_string(w.letters()),
                            p.name(s),
                            p.name(t),
                            p.set_string(got)
                        )
                    });
                }
            }
        }
    }
    rec.finish()
}

fn commuting_sandwich(p: &Presentation, ball: &Ball) -> CheckReport {
    let mut rec = Recorder::new(CheckId::CommutingSandwich);
    for w in ball.elements() {
        for t in p.gens() {
            let tnf = p.reduce(&[t]);
            let tw = p.multiply(&tnf, w);
            if tw.len() != w.len() + 1 {
                continue;
            }
            for tp in p.gens() {
                rec.instance();
                let twt = p.right_multiply(&tw, tp);
                if &twt != w {
                    continue;
                }
                let commutes_all = w.letters().iter().all(|&x| p.commutes(t, x));
                if t != tp || !commutes_all {
                    rec.violation(|| {
                        format!(
                            "t = {}, w = {}, t' = {}: sandwich closes but t ≠ t' or t fails to commute with w",
                            p.name(t),
                            p.word_string(w.letters()),
                            p.name(tp)
                        )
                    });
                }
            }
        }
    }
    rec.finish()
}

/// The one-step descent update rule, with a pluggable descent function.
pub fn descent_step_with(
    p: &Presentation,
    ball: &Ball,
    descents: impl Fn(&Presentation, &NormalForm) -> GenSet,
) -> CheckReport {
    let mut rec = Recorder::new(CheckId::DescentStep);
    for (u, class) in ball.descent_profiles() {
        for s0 in p.all_gens().without(u).iter() {
            let expected = (u & p.commuters(s0)).with(s0);
            for w in class {
                rec.instance();
                let got = descents(p, &p.right_multiply(w, s0));
                if got != expected {
                    rec.violation(|| {
                        format!(
                            "w = {} with descents {{{}}}, s0 = {}: got {{{}}}, expected {{{}}}",
                            p.word_string(w.letters()),
                            p.set_string(u),
                            p.name(s0),
                            p.set_string(got),
                            p.set_string(expected)
                        )
                    });
                }
            }
        }
    }
    rec.finish()
}

fn max_clique_density(p: &Presentation, ball: &Ball) -> Result<CheckReport> {
    let mut rec = Recorder::new(CheckId::MaxCliqueDensity);
    for t in p.maximal_spherical_subsets() {
        if ball.radius() <= t.len() {
            return Err(Error::RadiusTooSmall {
                radius: ball.radius(),
                needed: t.len(),
            });
        }
        rec.instance();
        match quasi_dense_check_in(p, ball, t, t.len())? {
            QuasiDensityVerdict::Dense { .. } => {}
            QuasiDensityVerdict::NotWithin { counterexample, .. } => {
                rec.violation(|| {
                    format!(
                        "T = {{{}}}: not quasi-dense within |T|, hole at {}",
                        p.set_string(t),
                        p.word_string(counterexample.letters())
                    )
                });
            }
        }
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Gen;

    fn pentagon() -> Presentation {
        Presentation::new(
            &["1", "2", "3", "4", "5"],
            &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")],
        )
        .unwrap()
    }

    #[test]
    fn all_checks_pass_on_the_pentagon() {
        let p = pentagon();
        let ball = Ball::build(&p, 6).unwrap();
        for report in run_checks(&p, &ball, &CheckId::ALL).unwrap() {
            assert!(
                report.passed(),
                "{}: {:?}",
                report.check.name(),
                report.violations
            );
            assert!(report.instances > 0, "{}", report.check.name());
        }
    }

    #[test]
    fn all_checks_pass_on_a_split_system() {
        let p = Presentation::new(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let ball = Ball::build(&p, 6).unwrap();
        for report in run_checks(&p, &ball, &CheckId::ALL).unwrap() {
            assert!(report.passed(), "{}", report.check.name());
        }
    }

    #[test]
    fn corrupted_descents_fail_with_a_witness_word() {
        let p = pentagon();
        let ball = Ball::build(&p, 4).unwrap();
        // Off-by-one corruption: report the descent set of w·s₁ instead.
        let corrupted = |p: &Presentation, w: &NormalForm| {
            let s1 = Gen(0);
            p.right_descents(&p.right_multiply(w, s1))
        };
        let report = descent_clique_with(&p, &ball, corrupted);
        // The clique property alone may survive, so check the step rule too.
        let step = descent_step_with(&p, &ball, corrupted);
        assert!(
            !report.passed() || !step.passed(),
            "corruption went unnoticed"
        );
        let failing = if !report.passed() { &report } else { &step };
        assert!(!failing.violations.is_empty());
    }

    #[test]
    fn check_names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(CheckId::from_name(c.name()), Some(c));
        }
        assert_eq!(CheckId::from_name("nope"), None);
    }

    #[test]
    fn density_check_needs_enough_radius() {
        let p = Presentation::new(&["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c")])
            .unwrap();
        let ball = Ball::build(&p, 3).unwrap();
        assert!(matches!(
            run_check(&p, &ball, CheckId::MaxCliqueDensity),
            Err(Error::RadiusTooSmall { .. })
        ));
    }
}
