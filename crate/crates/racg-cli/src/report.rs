//! Report documents: one serde struct per command, each with a matching
//! plain-text rendering. Machine output is a single JSON document on
//! stdout; every set is serialized in generator order and every word as an
//! array of generator names, so output is deterministic for a fixed input
//! and flag set.

use serde::Serialize;

use crate::OutputFormat;

pub trait Render {
    fn render_text(&self) -> String;
}

pub fn emit<T: Serialize + Render>(report: &T, format: OutputFormat) {
    match format {
        OutputFormat::Text => write_stdout(&report.render_text()),
        OutputFormat::Machine => {
            let mut doc = serde_json::to_string_pretty(report).expect("report serialization");
            doc.push('\n');
            write_stdout(&doc);
        }
    }
}

/// Write to stdout, treating a closed pipe as a normal end of output
/// rather than a panic.
pub fn write_stdout(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

/// Echo of the input everything else refers to.
#[derive(Serialize)]
pub struct InputEcho {
    pub file: String,
    pub digest: String,
    pub generators: Vec<String>,
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn word(items: &[String]) -> String {
    if items.is_empty() {
        "ε".to_owned()
    } else {
        items.join(" ")
    }
}

#[derive(Serialize)]
pub struct ReduceReport {
    pub command: &'static str,
    pub input: InputEcho,
    pub word: Vec<String>,
    pub normal_form: Vec<String>,
    pub length: usize,
    pub right_descents: Vec<String>,
    pub left_descents: Vec<String>,
    pub timing_ms: u128,
}

impl Render for ReduceReport {
    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("file: {}\n", self.input.file));
        out.push_str(&format!("digest: {}\n", self.input.digest));
        out.push_str(&format!("word: {}\n", word(&self.word)));
        out.push_str(&format!("normal form: {}\n", word(&self.normal_form)));
        out.push_str(&format!("length: {}\n", self.length));
        out.push_str(&format!("right descents: {}\n", braces(&self.right_descents)));
        out.push_str(&format!("left descents: {}\n", braces(&self.left_descents)));
        out.push_str(&format!("time: {} ms\n", self.timing_ms));
        out
    }
}

#[derive(Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum VerdictReport {
    Minimal,
    NotMinimal {
        part_a: Vec<String>,
        part_b: Vec<String>,
    },
    EmptyBoundary,
}

#[derive(Serialize)]
pub struct OrbitReport {
    pub subset: Vec<String>,
    pub dense: bool,
}

#[derive(Serialize)]
pub struct DotReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infinity: Option<String>,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub command: &'static str,
    pub input: InputEcho,
    pub components: Vec<Vec<String>>,
    pub s_tilde: Vec<String>,
    pub finite_part: Vec<String>,
    pub maximal_spherical: Vec<Vec<String>>,
    pub verdict: VerdictReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_density: Option<OrbitReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dot_files: Option<DotReport>,
    pub timing_ms: u128,
}

impl Render for AnalyzeReport {
    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("file: {}\n", self.input.file));
        out.push_str(&format!("digest: {}\n", self.input.digest));
        out.push_str(&format!("generators: {}\n", self.input.generators.join(" ")));
        let comps: Vec<String> = self.components.iter().map(|c| braces(c)).collect();
        out.push_str(&format!("components: {}\n", comps.join(" | ")));
        out.push_str(&format!("S~: {}\n", braces(&self.s_tilde)));
        out.push_str(&format!("finite part: {}\n", braces(&self.finite_part)));
        let cliques: Vec<String> = self.maximal_spherical.iter().map(|c| braces(c)).collect();
        out.push_str(&format!(
            "maximal spherical subsets: {}\n",
            cliques.join(" ")
        ));
        match &self.verdict {
            VerdictReport::Minimal => out.push_str("verdict: minimal\n"),
            VerdictReport::NotMinimal { part_a, part_b } => out.push_str(&format!(
                "verdict: not minimal, splitting {} | {}\n",
                braces(part_a),
                braces(part_b)
            )),
            VerdictReport::EmptyBoundary => out.push_str("verdict: empty boundary\n"),
        }
        if let Some(orbit) = &self.orbit_density {
            out.push_str(&format!(
                "orbit density for {}: {}\n",
                braces(&orbit.subset),
                orbit.dense
            ));
        }
        if let Some(dot) = &self.dot_files {
            if let Some(path) = &dot.commutation {
                out.push_str(&format!("wrote commutation graph: {path}\n"));
            }
            if let Some(path) = &dot.infinity {
                out.push_str(&format!("wrote infinity graph: {path}\n"));
            }
        }
        out.push_str(&format!("time: {} ms\n", self.timing_ms));
        out
    }
}

#[derive(Serialize)]
pub struct WitnessBody {
    pub s0: String,
    pub start_clique: Vec<String>,
    pub chain: Vec<String>,
    pub trace: Vec<Vec<String>>,
    pub bound_n: usize,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DensityReport {
    Dense {
        n: usize,
    },
    NotWithin {
        n_max: usize,
        counterexample: Vec<String>,
        distance_floor: Option<usize>,
    },
}

#[derive(Serialize)]
pub struct InclusionFailureBody {
    pub element: Vec<String>,
    pub product: Vec<String>,
    pub got: Vec<String>,
}

#[derive(Serialize)]
pub struct CertificationBody {
    pub radius: usize,
    pub bound_n: usize,
    pub inclusion_instances: usize,
    pub inclusion_failures: Vec<InclusionFailureBody>,
    pub density: DensityReport,
    pub empirical_n: Option<usize>,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct HoleBody {
    pub generator: String,
    /// `None` when no hole was found at the requested radius and bound.
    pub element: Option<Vec<String>>,
    pub distance_floor: Option<usize>,
}

#[derive(Serialize)]
pub struct SplittingBody {
    pub part_a: Vec<String>,
    pub part_b: Vec<String>,
    pub falsify_radius: usize,
    pub n_max: usize,
    pub holes: Vec<HoleBody>,
}

#[derive(Serialize)]
pub struct WitnessReport {
    pub command: &'static str,
    pub input: InputEcho,
    pub radius: usize,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessBody>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certification: Option<CertificationBody>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splitting: Option<SplittingBody>,
    pub timing_ms: u128,
}

impl Render for WitnessReport {
    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("file: {}\n", self.input.file));
        out.push_str(&format!("digest: {}\n", self.input.digest));
        out.push_str(&format!("outcome: {}\n", self.outcome));
        if let Some(w) = &self.witness {
            out.push_str(&format!("s0: {}\n", w.s0));
            out.push_str(&format!("start clique: {}\n", braces(&w.start_clique)));
            out.push_str(&format!("chain: {}\n", word(&w.chain)));
            let trace: Vec<String> = w.trace.iter().map(|v| braces(v)).collect();
            out.push_str(&format!("trace: {}\n", trace.join(" -> ")));
            out.push_str(&format!("bound N: {}\n", w.bound_n));
        }
        if let Some(c) = &self.certification {
            out.push_str(&format!("certification radius: {}\n", c.radius));
            out.push_str(&format!(
                "inclusion instances: {} ({} failures)\n",
                c.inclusion_instances,
                c.inclusion_failures.len()
            ));
            for f in &c.inclusion_failures {
                out.push_str(&format!(
                    "  inclusion failure: {} * chain = {} with descents {}\n",
                    word(&f.element),
                    word(&f.product),
                    braces(&f.got)
                ));
            }
            match &c.density {
                DensityReport::Dense { n } => {
                    out.push_str(&format!("density: dense, N = {n}\n"));
                }
                DensityReport::NotWithin {
                    n_max,
                    counterexample,
                    distance_floor,
                } => {
                    let floor = match distance_floor {
                        Some(d) => format!("distance floor {d}"),
                        None => "no targets in ball".to_owned(),
                    };
                    out.push_str(&format!(
                        "density: not within {n_max}, counterexample {} ({floor})\n",
                        word(counterexample)
                    ));
                }
            }
            out.push_str(&format!(
                "certification: {}\n",
                if c.passed { "pass" } else { "fail" }
            ));
        }
        if let Some(s) = &self.splitting {
            out.push_str(&format!("part A: {}\n", braces(&s.part_a)));
            out.push_str(&format!("part B: {}\n", braces(&s.part_b)));
            out.push_str(&format!(
                "holes (radius {}, N_max {}):\n",
                s.falsify_radius, s.n_max
            ));
            for h in &s.holes {
                match (&h.element, h.distance_floor) {
                    (Some(e), Some(d)) => out.push_str(&format!(
                        "  {}: {}  (distance floor {})\n",
                        h.generator,
                        word(e),
                        d
                    )),
                    (Some(e), None) => out.push_str(&format!(
                        "  {}: {}  (no targets in ball)\n",
                        h.generator,
                        word(e)
                    )),
                    (None, _) => out.push_str(&format!("  {}: none found\n", h.generator)),
                }
            }
        }
        out.push_str(&format!("time: {} ms\n", self.timing_ms));
        out
    }
}

#[derive(Serialize)]
pub struct CheckBody {
    pub name: &'static str,
    pub instances: usize,
    pub violations: usize,
    pub counterexamples: Vec<String>,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub input: InputEcho,
    pub radius: usize,
    pub checks: Vec<CheckBody>,
    pub passed: bool,
    pub timing_ms: u128,
}

impl Render for VerifyReport {
    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("file: {}\n", self.input.file));
        out.push_str(&format!("digest: {}\n", self.input.digest));
        out.push_str(&format!("radius: {}\n", self.radius));
        out.push_str(&format!(
            "{:<20} {:>10} {:>10}  result\n",
            "check", "instances", "violations"
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "{:<20} {:>10} {:>10}  {}\n",
                c.name,
                c.instances,
                c.violations,
                if c.passed { "pass" } else { "fail" }
            ));
            for w in &c.counterexamples {
                out.push_str(&format!("    counterexample: {w}\n"));
            }
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed { "pass" } else { "fail" }
        ));
        out.push_str(&format!("time: {} ms\n", self.timing_ms));
        out
    }
}
