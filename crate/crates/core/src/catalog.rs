//! Named fixtures: a representation, an equation and/or graph, and the
//! verdict the pipeline must reproduce from scratch.

use serde::Serialize;

use crate::classify::{build_family_member, classify, Bounds, ClassificationReport, FamilyMember, Graph, SliceReport, Verdict};
use crate::error::{Error, Result};
use crate::ratpoly::{parse, parse_with, VarTable, VariablePolicy};
use crate::sl2rep::{Normalization, RepSpec};
use crate::Poly;

/// Fixed fixture names. `family-phi(<expr>)` is accepted in addition.
pub const FIXTURE_NAMES: &[&str] =
    &["winkelmann", "sl2-in-v2", "affine-slice", "deveney-finston", "quadric-relation"];

/// Family member run by the self-test.
pub const SAMPLE_FAMILY: &str = "family-phi(t^2 - 2)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Expected {
    pub verdict: Verdict,
    /// `Some(true)`: a slice must be found; `Some(false)`: none may be.
    pub slice_found: Option<bool>,
    pub slice_degree: Option<u32>,
    pub witness_subspace: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub spec: RepSpec,
    pub f: Option<Poly>,
    pub graph: Option<Graph>,
    pub expected: Expected,
    pub citations: Vec<&'static str>,
}

fn poly(t: &VarTable, s: &str) -> Poly {
    parse_with(s, t, VariablePolicy::Strict).expect("fixture polynomial")
}

fn graph(z: &VarTable, pairs: &[(&str, &str)]) -> Graph {
    pairs.iter().map(|(w, h)| (w.to_string(), poly(z, h))).collect()
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let s5 = Normalization::Binomial;
    let fx = match name {
        "winkelmann" => {
            let mut fx = family_fixture(name, "t")?;
            fx.citations = vec![
                "Winkelmann hypersurface x1 x4 - x2 x3 - x5 (x5 + 1) = 0",
                "graph w0 = 1 + w2 w5 - w3 w4 over Sym^1 + V + V",
            ];
            fx
        }
        "sl2-in-v2" => {
            let spec = RepSpec::new(vec![1, 1], s5)?;
            let f = poly(spec.table(), "1 - w0*w3 + w1*w2");
            Fixture {
                name: name.into(),
                spec,
                f: Some(f),
                graph: None,
                expected: Expected {
                    verdict: Verdict::StrictlyQuasiAffine,
                    slice_found: None,
                    slice_degree: None,
                    witness_subspace: None,
                },
                citations: vec!["SL2 as the determinant-one quadric in V + V, quotient A^2 minus the origin"],
            }
        }
        "affine-slice" => {
            let spec = RepSpec::new(vec![1], s5)?;
            let f = poly(spec.table(), "1 - w0");
            let z = VarTable::new(["z1"])?;
            Fixture {
                name: name.into(),
                spec,
                f: Some(f),
                graph: Some(graph(&z, &[("w0", "1"), ("w1", "z1")])),
                expected: Expected {
                    verdict: Verdict::Affine,
                    slice_found: Some(true),
                    slice_degree: Some(1),
                    witness_subspace: None,
                },
                citations: vec!["the line w0 = 1 in Sym^1 with slice w1"],
            }
        }
        "deveney-finston" => {
            let names = (1..=8).map(|i| format!("w{i}"));
            let spec = RepSpec::with_names(vec![1, 1, 3], Normalization::Unit, names)?;
            let z = VarTable::new(["z1", "z2", "z3", "z4", "z8"])?;
            let g = graph(
                &z,
                &[
                    ("w1", "z1"),
                    ("w2", "z2"),
                    ("w3", "z3"),
                    ("w4", "z4"),
                    ("w5", "2*z1*z3^2"),
                    ("w6", "2*z1*z3*z4"),
                    ("w7", "1 + z1*z4^2"),
                    ("w8", "z8"),
                ],
            );
            Fixture {
                name: name.into(),
                spec,
                f: None,
                graph: Some(g),
                expected: Expected {
                    verdict: Verdict::NotEverywhereStable,
                    slice_found: Some(false),
                    slice_degree: None,
                    witness_subspace: Some(vec!["w1".into(), "w3".into()]),
                },
                citations: vec![
                    "Deveney-Finston embedding of A^5 in V + V + Sym^3",
                    "unstable points on w1 = w3 = 0",
                ],
            }
        }
        "quadric-relation" => {
            let spec = RepSpec::new(vec![2], s5)?;
            let f = poly(spec.table(), "w1^2 - 4*w0*w2 - 1");
            Fixture {
                name: name.into(),
                spec,
                f: Some(f),
                graph: None,
                expected: Expected {
                    verdict: Verdict::NotEverywhereStable,
                    slice_found: None,
                    slice_degree: None,
                    witness_subspace: Some(vec!["w0".into()]),
                },
                citations: vec!["level set of the Sym^2 discriminant meeting w0 = 0"],
            }
        }
        other => match other.strip_prefix("family-phi(").and_then(|r| r.strip_suffix(')')) {
            Some(phi) => family_fixture(other, phi)?,
            None => return Err(Error::UnknownFixture(other.to_string())),
        },
    };
    Ok(fx)
}

fn family_fixture(name: &str, phi: &str) -> Result<Fixture> {
    let phi: Poly = parse(phi)?;
    let member = FamilyMember::standard(phi.clone())?;
    let (f, g) = build_family_member(&member)?;
    let affine = phi.is_constant();
    Ok(Fixture {
        name: name.into(),
        spec: member.spec,
        f: Some(f),
        graph: Some(g),
        expected: Expected {
            verdict: if affine { Verdict::Affine } else { Verdict::StrictlyQuasiAffine },
            slice_found: Some(affine),
            slice_degree: None,
            witness_subspace: None,
        },
        citations: vec!["graph w0 = 1 + phi(w2 w5 - w3 w4) over Sym^1 + V + V"],
    })
}

/// Every fixed fixture plus the sample family member.
pub fn all_fixtures() -> Vec<Fixture> {
    FIXTURE_NAMES
        .iter()
        .copied()
        .chain([SAMPLE_FAMILY])
        .map(|n| fixture(n).expect("built-in fixture"))
        .collect()
}

#[derive(Clone, Debug)]
pub struct FixtureCheck {
    pub name: String,
    pub report: ClassificationReport,
    pub mismatches: Vec<String>,
}

impl FixtureCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.report.crosschecks_pass()
    }
}

/// Classify a fixture from its raw data and compare with its expectation.
pub fn check_fixture(fx: &Fixture, bounds: &Bounds) -> Result<FixtureCheck> {
    let report = classify(&fx.spec, fx.f.as_ref(), fx.graph.as_ref(), bounds)?;
    let mut mismatches = Vec::new();
    let e = &fx.expected;
    if report.verdict != e.verdict {
        mismatches.push(format!("verdict {} (expected {})", report.verdict, e.verdict));
    }
    if let Some(want) = e.slice_found {
        let got = report.slice.as_ref().is_some_and(SliceReport::is_found);
        if got != want {
            mismatches.push(format!("slice found: {got} (expected {want})"));
        }
    }
    if let Some(d) = e.slice_degree {
        match &report.slice {
            Some(SliceReport::Found { degree, .. }) if *degree == d => {}
            other => mismatches.push(format!("slice {other:?} (expected degree {d})")),
        }
    }
    if let Some(w) = &e.witness_subspace {
        if &report.witness_subspace != w {
            mismatches.push(format!(
                "witness subspace {:?} (expected {w:?})",
                report.witness_subspace
            ));
        }
        if report.unstable_point.is_none() {
            mismatches.push("no unstable point exhibited".into());
        }
    }
    Ok(FixtureCheck { name: fx.name.clone(), report, mismatches })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WinkelmannCheck {
    /// `x1 x4 - x2 x3 - x5 (x5 + 1)` after substitution and reduction.
    pub relation: Poly,
    /// Same with `x5 (x5 + 2)`.
    pub perturbed: Poly,
    /// The relation before reducing by the hypersurface equation.
    pub unreduced: Poly,
}

impl WinkelmannCheck {
    pub fn passed(&self) -> bool {
        self.relation.is_zero() && !self.perturbed.is_zero() && !self.unreduced.is_zero()
    }
}

/// Substitute the five invariants into the surface relation and reduce
/// modulo `w0 = 1 + w2 w5 - w3 w4`.
pub fn verify_winkelmann_relation() -> Result<WinkelmannCheck> {
    let spec = RepSpec::new(vec![1, 1, 1], Normalization::Binomial)?;
    let t = spec.table();
    let x = VarTable::new(["x1", "x2", "x3", "x4", "x5"])?;
    let assign: Graph = [
        ("x1", "w2"),
        ("x2", "w4"),
        ("x3", "w0*w3 - w1*w2"),
        ("x4", "w0*w5 - w1*w4"),
        ("x5", "w2*w5 - w3*w4"),
    ]
    .iter()
    .map(|(k, v)| (k.to_string(), poly(t, v)))
    .collect();
    let mut reduce: Graph = t.names().iter().map(|n| (n.clone(), poly(t, n))).collect();
    reduce.insert("w0".into(), poly(t, "1 + w2*w5 - w3*w4"));

    let rel = |s: &str| -> Result<(Poly, Poly)> {
        let unreduced = poly(&x, s).substitute(&assign)?;
        let reduced = unreduced.substitute(&reduce)?;
        Ok((reduced, unreduced))
    };
    let (relation, unreduced) = rel("x1*x4 - x2*x3 - x5*(x5 + 1)")?;
    let (perturbed, _) = rel("x1*x4 - x2*x3 - x5*(x5 + 2)")?;
    Ok(WinkelmannCheck { relation, perturbed, unreduced })
}
