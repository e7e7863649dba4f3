//! Job files and their execution.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use gaquot::catalog::{self, Fixture};
use gaquot::classify::{self, Bounds, FamilyComparison, FamilyMember, Graph, SliceReport};
use gaquot::{parse_with, transfer, Block, Error, Normalization, Poly, RepSpec, VarTable, VariablePolicy};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Version of the structured report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Exit status for failed self-tests and failed cross-checks.
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_INPUT_ERROR: i32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Classify,
    Invariants,
    Transfer,
    Slice,
    FamilyCompare,
    Selftest,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Representation {
    pub blocks: Vec<Block>,
    #[serde(default = "default_normalization")]
    pub normalization: Normalization,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

fn default_normalization() -> Normalization {
    Normalization::Binomial
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Job {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<Representation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(default)]
    pub bounds: Bounds,
    #[serde(default)]
    pub output: Format,
}

impl Job {
    pub fn new(command: Command) -> Self {
        Job {
            command,
            fixture: None,
            representation: None,
            polynomial: None,
            graph: None,
            phi: None,
            delta: None,
            bounds: Bounds::default(),
            output: Format::Text,
        }
    }
}

/// A failure attributed to one field of the job.
#[derive(Debug)]
pub struct JobError {
    pub field: &'static str,
    pub error: Error,
}

impl std::fmt::Display for JobError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.error)
    }
}

fn at(field: &'static str) -> impl Fn(Error) -> JobError {
    move |error| JobError { field, error }
}

/// What a job produced.
pub struct Outcome {
    pub structured: Value,
    pub text: String,
    pub exit: i32,
}

/// Self-contained job file reproducing a fixture.
pub fn export_fixture(fx: &Fixture) -> Job {
    let default_names: Vec<String> = (0..fx.spec.dim()).map(|i| format!("w{i}")).collect();
    let names = fx.spec.table().names().to_vec();
    Job {
        command: Command::Classify,
        fixture: None,
        representation: Some(Representation {
            blocks: fx.spec.summands().iter().map(|&k| Block::Sym(k)).collect(),
            normalization: fx.spec.normalization(),
            names: (names != default_names).then_some(names),
        }),
        polynomial: fx.f.as_ref().map(|f| f.to_string()),
        graph: fx
            .graph
            .as_ref()
            .map(|g| g.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()),
        phi: None,
        delta: None,
        bounds: Bounds::default(),
        output: Format::Text,
    }
}

struct Resolved {
    spec: Option<RepSpec>,
    f: Option<Poly>,
    graph: Option<Graph>,
    citations: Vec<&'static str>,
}

fn build_spec(r: &Representation) -> Result<RepSpec, JobError> {
    let spec = RepSpec::from_blocks(&r.blocks, r.normalization).map_err(at("representation"))?;
    match &r.names {
        None => Ok(spec),
        Some(names) => RepSpec::with_names(spec.summands().to_vec(), r.normalization, names.clone())
            .map_err(at("representation")),
    }
}

/// Parse graph images over a shared table of the variables in order of
/// first appearance, walking coordinates in representation order.
fn parse_graph(spec: &RepSpec, src: &BTreeMap<String, String>) -> Result<Graph, JobError> {
    for k in src.keys() {
        if spec.table().index_of(k).is_none() {
            return Err(JobError { field: "graph", error: Error::UnknownVariable(k.clone()) });
        }
    }
    let mut table = VarTable::new(Vec::<String>::new()).map_err(at("graph"))?;
    let mut parsed = Vec::new();
    for name in spec.table().names() {
        let Some(expr) = src.get(name) else {
            return Err(JobError { field: "graph", error: Error::MissingAssignment(name.clone()) });
        };
        let p: Poly = parse_with(expr, &table, VariablePolicy::DeclareOnUse).map_err(at("graph"))?;
        table = p.vars().clone();
        parsed.push((name.clone(), p));
    }
    parsed
        .into_iter()
        .map(|(n, p)| Ok((n, p.retable(&table).map_err(at("graph"))?)))
        .collect()
}

fn resolve(job: &Job) -> Result<Resolved, JobError> {
    let mut out = Resolved { spec: None, f: None, graph: None, citations: Vec::new() };
    if let Some(name) = &job.fixture {
        let fx = catalog::fixture(name).map_err(at("fixture"))?;
        out.spec = Some(fx.spec);
        out.f = fx.f;
        out.graph = fx.graph;
        out.citations = fx.citations;
    }
    if let Some(r) = &job.representation {
        out.spec = Some(build_spec(r)?);
        out.f = None;
        out.graph = None;
        out.citations.clear();
    }
    if let Some(spec) = &out.spec {
        if let Some(src) = &job.polynomial {
            out.f = Some(
                parse_with(src, spec.table(), VariablePolicy::Strict).map_err(at("polynomial"))?,
            );
        }
        if let Some(g) = &job.graph {
            out.graph = Some(parse_graph(spec, g)?);
        }
    } else if job.polynomial.is_some() || job.graph.is_some() {
        return Err(JobError {
            field: "representation",
            error: Error::InvalidRepresentation("missing".into()),
        });
    }
    Ok(out)
}

fn need_spec(r: &Resolved) -> Result<&RepSpec, JobError> {
    r.spec.as_ref().ok_or(JobError {
        field: "representation",
        error: Error::InvalidRepresentation("missing".into()),
    })
}

fn need_f(r: &Resolved) -> Result<&Poly, JobError> {
    r.f.as_ref().ok_or(JobError {
        field: "polynomial",
        error: Error::NotHypersurface("no polynomial given".into()),
    })
}

pub fn run(job: &Job) -> Result<Outcome, JobError> {
    let r = resolve(job)?;
    let b = &job.bounds;
    let mut text = String::new();
    let (result, exit) = match job.command {
        Command::Classify => {
            let spec = need_spec(&r)?;
            let report = classify::classify(spec, r.f.as_ref(), r.graph.as_ref(), b)
                .map_err(at("polynomial"))?;
            writeln!(text, "{report}").unwrap();
            for c in &r.citations {
                writeln!(text, "cites: {c}").unwrap();
            }
            let mut v = serde_json::to_value(&report).expect("report serializes");
            v["citations"] = json!(r.citations);
            (v, report.verdict.exit_code())
        }
        Command::Invariants => {
            let spec = need_spec(&r)?;
            let gens = spec
                .derivation::<gaquot::Rational>()
                .graded_kernel_generators(b.invariant_deg)
                .map_err(at("representation"))?;
            writeln!(text, "kernel generators up to degree {}:", b.invariant_deg).unwrap();
            for g in &gens {
                writeln!(text, "  {g}").unwrap();
            }
            (json!({ "degreeBound": b.invariant_deg, "generators": gens }), 0)
        }
        Command::Transfer => {
            let spec = need_spec(&r)?;
            let f = need_f(&r)?;
            let t = transfer::extend(spec, f).map_err(at("polynomial"))?;
            let invariant = transfer::verify_invariance(spec, &t.big_f).map_err(at("polynomial"))?;
            let restores = transfer::restrict_to_identity(spec, &t.big_f).map_err(at("polynomial"))? == *f;
            writeln!(text, "F = {}", t.big_f).unwrap();
            writeln!(text, "F00 = {}", t.f00).unwrap();
            writeln!(text, "g = {}", t.g).unwrap();
            writeln!(text, "boundary: {}", t.boundary).unwrap();
            writeln!(text, "sl2-invariant: {invariant}").unwrap();
            writeln!(text, "F(u=0, v=1) = f: {restores}").unwrap();
            let mut v = serde_json::to_value(&t).expect("transfer serializes");
            v["sl2Invariant"] = json!(invariant);
            v["restoresF"] = json!(restores);
            (v, if invariant && restores { 0 } else { EXIT_CHECK_FAILED })
        }
        Command::Slice => {
            let spec = need_spec(&r)?;
            let g = r.graph.as_ref().ok_or(JobError {
                field: "graph",
                error: Error::NotHypersurface("no graph given".into()),
            })?;
            let dx = spec.derivation::<gaquot::Rational>().restrict_to_graph(g).map_err(at("graph"))?;
            writeln!(text, "restricted derivation: {dx}").unwrap();
            let s = SliceReport::from_outcome(dx.slice_search(b.slice_deg));
            match &s {
                SliceReport::Found { slice, degree } => {
                    writeln!(text, "slice: {slice} (degree {degree})").unwrap()
                }
                SliceReport::NoneUpTo { bound } => {
                    writeln!(text, "slice: none up to degree {bound}").unwrap()
                }
            }
            let images: BTreeMap<String, String> = dx
                .vars()
                .names()
                .iter()
                .zip(dx.images())
                .map(|(n, p)| (n.clone(), p.to_string()))
                .collect();
            (json!({ "restricted": images, "slice": s }), 0)
        }
        Command::FamilyCompare => {
            let phis = job.phi.as_ref().filter(|p| p.len() == 2).ok_or(JobError {
                field: "phi",
                error: Error::InvalidDelta("expected two polynomials".into()),
            })?;
            let member = |src: &str| -> Result<FamilyMember, JobError> {
                let phi: Poly = gaquot::parse(src).map_err(at("phi"))?;
                match (&r.spec, job.delta) {
                    (Some(spec), Some(delta)) => Ok(FamilyMember { phi, spec: spec.clone(), delta }),
                    (Some(spec), None) => Ok(FamilyMember { phi, spec: spec.clone(), delta: 0 }),
                    (None, _) => FamilyMember::standard(phi).map_err(at("phi")),
                }
            };
            let (m1, m2) = (member(&phis[0])?, member(&phis[1])?);
            let cmp = classify::compare_family(&m1, &m2).map_err(at("phi"))?;
            match cmp {
                FamilyComparison::NonIsomorphicBoundaryCounts { first, second } => writeln!(
                    text,
                    "non-isomorphic: boundary component counts {first} and {second}"
                )
                .unwrap(),
                FamilyComparison::Inconclusive { count } => {
                    writeln!(text, "inconclusive: both boundaries have {count} components").unwrap()
                }
            }
            (json!({ "phi": phis, "comparison": cmp }), 0)
        }
        Command::Selftest => {
            let mut checks = Vec::new();
            let mut ok = true;
            for fx in catalog::all_fixtures() {
                let (passed, detail) = match catalog::check_fixture(&fx, b) {
                    Ok(c) => {
                        let mut detail = vec![format!("verdict {}", c.report.verdict)];
                        detail.extend(c.mismatches.iter().cloned());
                        detail.extend(
                            c.report
                                .crosschecks
                                .iter()
                                .filter(|x| !x.passed)
                                .map(|x| format!("crosscheck {} failed: {}", x.name, x.detail)),
                        );
                        (c.passed(), detail.join("; "))
                    }
                    Err(e) => (false, e.to_string()),
                };
                ok &= passed;
                writeln!(text, "{} {}: {detail}", if passed { "pass" } else { "FAIL" }, fx.name).unwrap();
                checks.push(json!({ "name": fx.name, "passed": passed, "detail": detail }));
            }
            let wk = catalog::verify_winkelmann_relation().map_err(at("selftest"))?;
            ok &= wk.passed();
            writeln!(
                text,
                "{} winkelmann-relation: reduced relation {}, perturbed control {}",
                if wk.passed() { "pass" } else { "FAIL" },
                wk.relation,
                if wk.perturbed.is_zero() { "zero" } else { "nonzero" }
            )
            .unwrap();
            checks.push(json!({ "name": "winkelmann-relation", "passed": wk.passed(), "detail": wk }));
            (json!({ "checks": checks, "passed": ok }), if ok { 0 } else { EXIT_CHECK_FAILED })
        }
    };
    let structured = json!({
        "schemaVersion": SCHEMA_VERSION,
        "command": job.command,
        "bounds": job.bounds,
        "result": result,
        "exitCode": exit,
    });
    if job.command != Command::Classify {
        text.push_str(&format!(
            "bounds: kmax={} slice-deg={} inv-deg={}\n",
            b.kmax, b.slice_deg, b.invariant_deg
        ));
    }
    Ok(Outcome { structured, text, exit })
}
