//! Command implementations and the exit-code contract.
//!
//! Exit codes: 0 for a successful run (including informational verdicts
//! like a splitting), 1 when a verification or certification check finds a
//! violation, 2 for input problems, 3 when the ball element cap is hit.
//! The cap defaults to the library's and can be lowered or raised through
//! the `RACG_MAX_BALL_ELEMENTS` environment variable.

use std::path::Path;
use std::time::Instant;

use racg::verify::{run_checks, CheckId};
use racg::{
    certify_witness_with_cap, find_hole_with_cap, find_witness, Ball, Error, Gen, GenSet,
    MinimalityVerdict, Presentation, WitnessOutcome, DEFAULT_BALL_CAP,
};

use crate::format;
use crate::report::{
    emit, AnalyzeReport, CertificationBody, CheckBody, DensityReport, DotReport, HoleBody,
    InclusionFailureBody, InputEcho, OrbitReport, ReduceReport, SplittingBody, VerdictReport,
    VerifyReport, WitnessBody, WitnessReport,
};
use crate::{Command, OutputFormat};

pub enum Failure {
    /// Bad file, word, subset, or parameter. Exit 2.
    Input(String),
    /// Ball element cap exceeded. Exit 3.
    Resource(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    pub fn emit(&self, format: OutputFormat) {
        let (kind, message) = match self {
            Failure::Input(m) => ("input", m),
            Failure::Resource(m) => ("resource", m),
        };
        match format {
            OutputFormat::Text => eprintln!("error: {message}"),
            OutputFormat::Machine => crate::report::write_stdout(&format!(
                "{}\n",
                serde_json::json!({ "error": { "kind": kind, "message": message } })
            )),
        }
    }
}

fn from_racg(e: Error) -> Failure {
    match e {
        Error::BallCapExceeded { .. } => Failure::Resource(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn ball_cap() -> Result<usize, Failure> {
    match std::env::var("RACG_MAX_BALL_ELEMENTS") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Input(format!(
                "RACG_MAX_BALL_ELEMENTS must be an element count, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_BALL_CAP),
    }
}

pub fn run(cmd: Command, format: OutputFormat) -> Result<u8, Failure> {
    match cmd {
        Command::Reduce { file, word } => cmd_reduce(&file, &word, format),
        Command::Analyze {
            file,
            subset,
            dot_commutation,
            dot_infinity,
        } => cmd_analyze(
            &file,
            subset.as_deref(),
            dot_commutation.as_deref(),
            dot_infinity.as_deref(),
            format,
        ),
        Command::Witness {
            file,
            radius,
            n_max,
            falsify_radius,
        } => cmd_witness(&file, radius, n_max, falsify_radius, format),
        Command::Verify {
            file,
            radius,
            lemmas,
        } => cmd_verify(&file, radius, lemmas.as_deref(), format),
    }
}

fn load(path: &Path) -> Result<(Presentation, InputEcho), Failure> {
    let p = format::load(path)?;
    let input = InputEcho {
        file: path.display().to_string(),
        digest: format::digest(&p),
        generators: p.names().to_vec(),
    };
    Ok((p, input))
}

fn names_of(p: &Presentation, word: &[Gen]) -> Vec<String> {
    word.iter().map(|&g| p.name(g).to_owned()).collect()
}

fn set_names(p: &Presentation, set: GenSet) -> Vec<String> {
    set.iter().map(|g| p.name(g).to_owned()).collect()
}

fn cmd_reduce(path: &Path, word: &str, format: OutputFormat) -> Result<u8, Failure> {
    let started = Instant::now();
    let (p, input) = load(path)?;
    let letters = p.parse_word(word).map_err(from_racg)?;
    let nf = p.reduce(&letters);
    let report = ReduceReport {
        command: "reduce",
        input,
        word: names_of(&p, &letters),
        normal_form: names_of(&p, nf.letters()),
        length: nf.len(),
        right_descents: set_names(&p, p.right_descents(&nf)),
        left_descents: set_names(&p, p.left_descents(&nf)),
        timing_ms: started.elapsed().as_millis(),
    };
    emit(&report, format);
    Ok(0)
}

fn dot_graph(p: &Presentation, name: &str, edges: &[(Gen, Gen)]) -> String {
    let mut out = format!("graph {name} {{\n");
    for g in p.gens() {
        out.push_str(&format!("    {:?};\n", p.name(g)));
    }
    for &(s, t) in edges {
        out.push_str(&format!("    {:?} -- {:?};\n", p.name(s), p.name(t)));
    }
    out.push_str("}\n");
    out
}

fn infinity_pairs(p: &Presentation) -> Vec<(Gen, Gen)> {
    let mut out = Vec::new();
    for s in p.gens() {
        for t in p.gens() {
            if s < t && !p.commutes(s, t) {
                out.push((s, t));
            }
        }
    }
    out
}

fn cmd_analyze(
    path: &Path,
    subset: Option<&str>,
    dot_commutation: Option<&Path>,
    dot_infinity: Option<&Path>,
    format: OutputFormat,
) -> Result<u8, Failure> {
    let started = Instant::now();
    let (p, input) = load(path)?;
    let decomposition = p.irreducible_components();
    let verdict = match p.boundary_minimal() {
        MinimalityVerdict::Minimal => VerdictReport::Minimal,
        MinimalityVerdict::NotMinimal { part_a, part_b } => VerdictReport::NotMinimal {
            part_a: set_names(&p, part_a),
            part_b: set_names(&p, part_b),
        },
        MinimalityVerdict::EmptyBoundary => VerdictReport::EmptyBoundary,
    };
    let orbit_density = match subset {
        Some(text) => {
            // Accept both comma- and space-separated generator lists.
            let t = p
                .parse_subset(&text.replace(',', " "))
                .map_err(from_racg)?;
            Some(OrbitReport {
                subset: set_names(&p, t),
                dense: p.parabolic_orbit_dense(t),
            })
        }
        None => None,
    };
    let mut dot_files = None;
    if dot_commutation.is_some() || dot_infinity.is_some() {
        let mut report = DotReport {
            commutation: None,
            infinity: None,
        };
        if let Some(out) = dot_commutation {
            let dot = dot_graph(&p, "commutation", &p.commuting_pairs());
            std::fs::write(out, dot)
                .map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
            report.commutation = Some(out.display().to_string());
        }
        if let Some(out) = dot_infinity {
            let dot = dot_graph(&p, "infinity", &infinity_pairs(&p));
            std::fs::write(out, dot)
                .map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
            report.infinity = Some(out.display().to_string());
        }
        dot_files = Some(report);
    }
    let report = AnalyzeReport {
        command: "analyze",
        input,
        components: decomposition
            .components
            .iter()
            .map(|&c| set_names(&p, c))
            .collect(),
        s_tilde: set_names(&p, decomposition.s_tilde),
        finite_part: set_names(&p, decomposition.finite_part),
        maximal_spherical: p
            .maximal_spherical_subsets()
            .iter()
            .map(|&t| set_names(&p, t))
            .collect(),
        verdict,
        orbit_density,
        dot_files,
        timing_ms: started.elapsed().as_millis(),
    };
    emit(&report, format);
    Ok(0)
}

fn density_report(p: &Presentation, verdict: &racg::QuasiDensityVerdict) -> DensityReport {
    match verdict {
        racg::QuasiDensityVerdict::Dense { n } => DensityReport::Dense { n: *n },
        racg::QuasiDensityVerdict::NotWithin {
            n_max,
            counterexample,
            distance_floor,
        } => DensityReport::NotWithin {
            n_max: *n_max,
            counterexample: names_of(p, counterexample.letters()),
            distance_floor: *distance_floor,
        },
    }
}

fn cmd_witness(
    path: &Path,
    radius: usize,
    n_max: usize,
    falsify_radius: usize,
    format: OutputFormat,
) -> Result<u8, Failure> {
    let started = Instant::now();
    let (p, input) = load(path)?;
    let cap = ball_cap()?;
    let mut report = WitnessReport {
        command: "witness",
        input,
        radius,
        outcome: "",
        witness: None,
        certification: None,
        splitting: None,
        timing_ms: 0,
    };
    let mut code = 0;
    match find_witness(&p) {
        WitnessOutcome::FiniteGroup => report.outcome = "finite-group",
        WitnessOutcome::Witness(w) => {
            report.outcome = "witness";
            let cert = certify_witness_with_cap(&p, &w, radius, cap).map_err(from_racg)?;
            report.witness = Some(WitnessBody {
                s0: p.name(w.s0).to_owned(),
                start_clique: set_names(&p, w.start_clique),
                chain: names_of(&p, &w.chain),
                trace: w.trace.iter().map(|&v| set_names(&p, v)).collect(),
                bound_n: w.bound_n,
            });
            let passed = cert.passed();
            report.certification = Some(CertificationBody {
                radius: cert.radius,
                bound_n: cert.bound_n,
                inclusion_instances: cert.inclusion_instances,
                inclusion_failures: cert
                    .inclusion_failures
                    .iter()
                    .map(|f| InclusionFailureBody {
                        element: names_of(&p, f.element.letters()),
                        product: names_of(&p, f.product.letters()),
                        got: set_names(&p, f.got),
                    })
                    .collect(),
                density: density_report(&p, &cert.density),
                empirical_n: cert.empirical_n(),
                passed,
            });
            if !passed {
                code = 1;
            }
        }
        WitnessOutcome::Splitting { part_a, part_b } => {
            report.outcome = "splitting";
            let mut holes = Vec::new();
            for s in p.gens() {
                let hole =
                    find_hole_with_cap(&p, s, falsify_radius, n_max, cap).map_err(from_racg)?;
                holes.push(HoleBody {
                    generator: p.name(s).to_owned(),
                    element: hole.as_ref().map(|h| names_of(&p, h.element.letters())),
                    distance_floor: hole.and_then(|h| h.distance_floor),
                });
            }
            report.splitting = Some(SplittingBody {
                part_a: set_names(&p, part_a),
                part_b: set_names(&p, part_b),
                falsify_radius,
                n_max,
                holes,
            });
        }
    }
    report.timing_ms = started.elapsed().as_millis();
    emit(&report, format);
    Ok(code)
}

fn cmd_verify(
    path: &Path,
    radius: usize,
    lemmas: Option<&str>,
    format: OutputFormat,
) -> Result<u8, Failure> {
    let started = Instant::now();
    let (p, input) = load(path)?;
    let checks: Vec<CheckId> = match lemmas {
        None => CheckId::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| {
                CheckId::from_name(name).ok_or_else(|| {
                    let valid: Vec<&str> = CheckId::ALL.iter().map(|c| c.name()).collect();
                    Failure::Input(format!(
                        "unknown check `{name}` (valid: {})",
                        valid.join(", ")
                    ))
                })
            })
            .collect::<Result<_, _>>()?,
    };
    if checks.is_empty() {
        return Err(Failure::Input("no checks selected".to_owned()));
    }
    let cap = ball_cap()?;
    let ball = Ball::build_with_cap(&p, radius, cap).map_err(from_racg)?;
    let results = run_checks(&p, &ball, &checks).map_err(from_racg)?;
    let passed = results.iter().all(|r| r.passed());
    let report = VerifyReport {
        command: "verify",
        input,
        radius,
        checks: results
            .into_iter()
            .map(|r| CheckBody {
                name: r.check.name(),
                instances: r.instances,
                violations: r.violation_count,
                passed: r.passed(),
                counterexamples: r.violations,
            })
            .collect(),
        passed,
        timing_ms: started.elapsed().as_millis(),
    };
    emit(&report, format);
    Ok(if passed { 0 } else { 1 })
}
