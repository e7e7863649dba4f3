//! The decision pipeline for `X / G_a`.
//!
//! A hypersurface `X = {f = 0}` with `D(f) = 0` is first certified to lie in
//! the stable set by restricting `f` to the subspace where every positive
//! weight coordinate vanishes. For certified `f` the boundary class of the
//! transfer decides affine against strictly quasi-affine, and the other
//! characterizations (through `f - c(f)`, through powers in `Im(D)`, and
//! through slices on a graph presentation) are run as cross-checks.

pub mod points;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::derivation::{PowerInImage, SliceOutcome};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::ratpoly::univariate::squarefree_distinct_root_count;
use crate::ratpoly::VarTable;
use crate::sl2rep::RepSpec;
use crate::transfer::{extend, Boundary, TransferResult};
use crate::{Poly, Rational, Scalar};

pub use points::find_common_zero;

/// A subvariety presented as `w = h(z)`, keyed by coordinate name; all
/// images share one table of `z` variables.
pub type Graph = BTreeMap<String, Poly>;

/// Candidate points examined by the unstable-point search.
pub const POINT_BUDGET: usize = 20_000;
/// Candidate points examined by the singular-point search.
pub const SMOOTHNESS_BUDGET: usize = 2_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Affine,
    StrictlyQuasiAffine,
    NotEverywhereStable,
    Unknown,
}

impl Verdict {
    /// Process exit status used by the command line front end.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Affine => 0,
            Verdict::StrictlyQuasiAffine => 10,
            Verdict::NotEverywhereStable => 20,
            Verdict::Unknown => 30,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Affine => "affine",
            Verdict::StrictlyQuasiAffine => "strictly quasi-affine",
            Verdict::NotEverywhereStable => "not everywhere stable",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct Bounds {
    pub kmax: u32,
    pub slice_deg: u32,
    pub invariant_deg: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { kmax: 3, slice_deg: 3, invariant_deg: 2 }
    }
}

/// `f` restricted to the subspace where all positive-weight coordinates
/// vanish. Certified when that restriction is a non-zero constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub restriction: Poly,
    pub certified: bool,
}

/// A point with named coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point(pub Vec<(String, Rational)>);

impl Point {
    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, x)| x)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, &v.to_string())?;
        }
        m.end()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (n, x)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}={x}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "camelCase")]
pub enum SliceReport {
    Found { slice: Poly, degree: u32 },
    NoneUpTo { bound: u32 },
}

impl SliceReport {
    pub fn from_outcome(o: SliceOutcome<Rational>) -> Self {
        match o {
            SliceOutcome::Found(s) => {
                SliceReport::Found { degree: s.total_degree().unwrap_or(0), slice: s }
            }
            SliceOutcome::NoneUpTo(bound) => SliceReport::NoneUpTo { bound },
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SliceReport::Found { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "camelCase")]
pub enum LocalizedQuotient {
    /// `h^k = D(preimage)`.
    TrivialBundleAffine { k: u32, preimage: Poly },
    NoneUpTo { kmax: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "camelCase")]
pub enum Smoothness {
    /// The gradient system is linear and has no solution on the zero set.
    Smooth,
    /// No singular point among the examined candidates. Evidence only.
    SmoothOnSamples { budget: usize },
    SingularWitness { point: Point },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub representation: RepSpec,
    pub f: Option<Poly>,
    pub certificate: Option<Certificate>,
    pub transfer: Option<TransferResult>,
    /// Coordinates whose common vanishing on `X` lands in the unstable
    /// subspace.
    pub witness_subspace: Vec<String>,
    pub unstable_point: Option<Point>,
    pub slice: Option<SliceReport>,
    pub localized: Option<LocalizedQuotient>,
    pub smoothness: Option<Smoothness>,
    pub crosschecks: Vec<Crosscheck>,
    pub bounds: Bounds,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn crosschecks_pass(&self) -> bool {
        self.crosschecks.iter().all(|c| c.passed)
    }
}

fn check_invariant(spec: &RepSpec, f: &Poly) -> Result<Poly> {
    let f = f.retable(spec.table())?;
    let df = spec.derivation::<Rational>().apply(&f)?;
    if !df.is_zero() {
        return Err(Error::NotInvariant(df.to_string()));
    }
    Ok(f)
}

fn nonstable_indices(spec: &RepSpec) -> Vec<usize> {
    (0..spec.dim()).filter(|&i| spec.weights()[i] > 0).collect()
}

pub fn certify_everywhere_stable(spec: &RepSpec, f: &Poly) -> Result<Certificate> {
    let f = check_invariant(spec, f)?;
    let zeros: Vec<(usize, Rational)> =
        nonstable_indices(spec).into_iter().map(|i| (i, Rational::zero())).collect();
    let restriction = f.specialize(&zeros);
    let certified = restriction.is_constant() && !restriction.is_zero();
    Ok(Certificate { restriction, certified })
}

pub fn localized_quotient_affine(spec: &RepSpec, h: &Poly, kmax: u32) -> Result<LocalizedQuotient> {
    let h = h.retable(spec.table())?;
    Ok(match spec.derivation::<Rational>().power_in_image(&h, kmax)? {
        PowerInImage::Found { k, preimage } => LocalizedQuotient::TrivialBundleAffine { k, preimage },
        PowerInImage::NoneUpTo(kmax) => LocalizedQuotient::NoneUpTo { kmax },
    })
}

/// Affine verdict from the boundary class of `f` against the vanishing of
/// `F00` for `f - c(f)`. True when the two agree.
pub fn crosscheck_geomchar2(spec: &RepSpec, f: &Poly) -> Result<bool> {
    let f = check_invariant(spec, f)?;
    if f.is_constant() {
        return Err(Error::NotHypersurface(format!("f = {f} is constant")));
    }
    if !certify_everywhere_stable(spec, &f)?.certified {
        return Err(Error::NotCertified(f.to_string()));
    }
    let affine = extend(spec, &f)?.boundary == Boundary::Misses;
    Ok(affine == geomchar2_affine(spec, &f)?)
}

fn geomchar2_affine(spec: &RepSpec, f: &Poly) -> Result<bool> {
    let fp = f - &Poly::constant(f.vars(), f.constant_term());
    Ok(extend(spec, &fp)?.f00.is_zero())
}

/// Search for singular points of `F00 = 0`. Quadratic input is decided
/// exactly through the linear gradient system.
pub fn jacobian_boundary_smoothness(f00: &Poly, budget: usize) -> Result<Smoothness> {
    if f00.is_constant() {
        return Err(Error::ConstantInput);
    }
    let vars = f00.vars();
    let n = vars.len();
    let grad: Vec<Poly> = (0..n).map(|i| f00.partial(i)).collect();
    let point = |x: Vec<Rational>| {
        Point(vars.names().iter().cloned().zip(x).collect())
    };
    if f00.total_degree().unwrap_or(0) <= 2 {
        let mut ech: Echelon<usize, Rational> = Echelon::new();
        for j in 0..n {
            let col: SparseVec<usize, Rational> = grad
                .iter()
                .enumerate()
                .map(|(i, g)| (i, g.coefficient(&crate::Monomial::var(n, j))))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            ech.push(col);
        }
        let rhs: SparseVec<usize, Rational> = grad
            .iter()
            .enumerate()
            .map(|(i, g)| (i, -g.constant_term()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        return Ok(match ech.solve(rhs) {
            None => Smoothness::Smooth,
            Some(x) => {
                let mut p0 = vec![Rational::zero(); n];
                for (j, c) in x {
                    p0[j] = c;
                }
                // f00 is constant along the critical set
                if f00.eval(&p0).is_zero() {
                    Smoothness::SingularWitness { point: point(p0) }
                } else {
                    Smoothness::Smooth
                }
            }
        });
    }
    let mut system = vec![f00.clone()];
    system.extend(grad);
    Ok(match find_common_zero(&system, budget) {
        Some(p) => Smoothness::SingularWitness { point: point(p) },
        None => Smoothness::SmoothOnSamples { budget },
    })
}

/// Classify `X`, given by `f` or by a graph (or both).
pub fn classify(
    spec: &RepSpec,
    f: Option<&Poly>,
    graph: Option<&Graph>,
    bounds: &Bounds,
) -> Result<ClassificationReport> {
    let mut report = ClassificationReport {
        verdict: Verdict::Unknown,
        representation: spec.clone(),
        f: None,
        certificate: None,
        transfer: None,
        witness_subspace: spec.nonstable_coordinates(),
        unstable_point: None,
        slice: None,
        localized: None,
        smoothness: None,
        crosschecks: Vec::new(),
        bounds: *bounds,
        notes: Vec::new(),
    };
    let d = spec.derivation::<Rational>();
    let restricted = graph.map(|g| d.restrict_to_graph(g)).transpose()?;

    match f {
        Some(f) => classify_equation(spec, f, graph, bounds, &mut report)?,
        None => match graph {
            Some(g) => classify_graph(spec, g, &mut report)?,
            None => {
                return Err(Error::NotHypersurface("neither an equation nor a graph".into()))
            }
        },
    }

    if let Some(dx) = restricted {
        let slice = SliceReport::from_outcome(dx.slice_search(bounds.slice_deg));
        let found = slice.is_found();
        let (passed, detail) = match report.verdict {
            Verdict::Affine => (found, if found {
                "slice found, as an affine quotient requires".to_string()
            } else {
                format!("no slice up to degree {}; bounded search inconclusive", bounds.slice_deg)
            }),
            Verdict::StrictlyQuasiAffine | Verdict::NotEverywhereStable => {
                if found {
                    return Err(Error::InternalInconsistency(format!(
                        "slice found although the verdict is {}",
                        report.verdict
                    )));
                }
                (true, format!("no slice up to degree {}", bounds.slice_deg))
            }
            Verdict::Unknown => (true, format!("slice found: {found}")),
        };
        report.crosschecks.push(Crosscheck { name: "slice".into(), passed, detail });
        report.slice = Some(slice);
    }
    Ok(report)
}

fn classify_equation(
    spec: &RepSpec,
    f: &Poly,
    graph: Option<&Graph>,
    bounds: &Bounds,
    report: &mut ClassificationReport,
) -> Result<()> {
    let f = check_invariant(spec, f)?;
    if f.is_constant() {
        return Err(Error::NotHypersurface(format!("f = {f} is constant")));
    }
    report.f = Some(f.clone());
    if let Some(g) = graph {
        let on_graph = f.substitute(g)?;
        if !on_graph.is_zero() {
            return Err(Error::NotHypersurface(format!(
                "the graph does not lie on f = 0 (f restricts to {on_graph})"
            )));
        }
    }

    let cert = certify_everywhere_stable(spec, &f)?;
    let transfer = extend(spec, &f)?;
    report.certificate = Some(cert.clone());
    report.transfer = Some(transfer.clone());

    if !cert.certified {
        let zeros: Vec<(usize, Rational)> =
            nonstable_indices(spec).into_iter().map(|i| (i, Rational::zero())).collect();
        let r = f.specialize(&zeros);
        match find_common_zero(&[r], POINT_BUDGET) {
            Some(p) => {
                debug_assert!(f.eval(&p).is_zero());
                report.verdict = Verdict::NotEverywhereStable;
                report.unstable_point =
                    Some(Point(spec.table().names().iter().cloned().zip(p).collect()));
            }
            None => {
                report.verdict = Verdict::Unknown;
                report.notes.push(
                    "the stability certificate does not apply and no unstable point was found"
                        .into(),
                );
            }
        }
        return Ok(());
    }

    report.verdict = match transfer.boundary {
        Boundary::Misses => Verdict::Affine,
        Boundary::Intersects => Verdict::StrictlyQuasiAffine,
        Boundary::Contains => {
            return Err(Error::InternalInconsistency(
                "a certified hypersurface cannot contain the boundary".into(),
            ))
        }
    };
    let affine = report.verdict == Verdict::Affine;

    let gc2 = geomchar2_affine(spec, &f)?;
    if gc2 != affine {
        return Err(Error::InternalInconsistency(format!(
            "f - c(f) {} the boundary but the verdict is {}",
            if gc2 { "contains" } else { "does not contain" },
            report.verdict
        )));
    }
    report.crosschecks.push(Crosscheck {
        name: "f - c(f)".into(),
        passed: true,
        detail: format!("F00(f - c(f)) vanishes: {gc2}"),
    });

    let fp = &f - &Poly::constant(f.vars(), f.constant_term());
    let loc = localized_quotient_affine(spec, &fp, bounds.kmax)?;
    let found = matches!(loc, LocalizedQuotient::TrivialBundleAffine { .. });
    if found && !affine {
        return Err(Error::InternalInconsistency(
            "a power of f - c(f) lies in Im(D) but the verdict is not affine".into(),
        ));
    }
    report.crosschecks.push(Crosscheck {
        name: "power of f - c(f) in Im(D)".into(),
        passed: found == affine,
        detail: match &loc {
            LocalizedQuotient::TrivialBundleAffine { k, .. } => format!("found with k = {k}"),
            LocalizedQuotient::NoneUpTo { kmax } => format!("none up to k = {kmax}"),
        },
    });
    report.localized = Some(loc);

    if transfer.boundary == Boundary::Intersects {
        report.smoothness = Some(jacobian_boundary_smoothness(&transfer.f00, SMOOTHNESS_BUDGET)?);
    }
    Ok(())
}

fn classify_graph(spec: &RepSpec, graph: &Graph, report: &mut ClassificationReport) -> Result<()> {
    let ns = nonstable_indices(spec);
    let z = graph
        .values()
        .next()
        .map(|p| p.vars().clone())
        .ok_or_else(|| Error::NotHypersurface("empty graph".into()))?;
    let image = |i: usize| -> Result<Poly> {
        let name = spec.table().name(i);
        graph.get(name).cloned().ok_or_else(|| Error::MissingAssignment(name.to_string()))
    };
    let unstable: Vec<Poly> = ns.iter().map(|&i| image(i)).collect::<Result<_>>()?;
    report.notes.push(format!(
        "no equation given; the unstable locus of X is cut out by {}",
        unstable.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
    ));

    // nonstable coordinates that are free on X, when their vanishing
    // already forces all the others to vanish
    let free: Vec<(usize, usize)> = ns
        .iter()
        .filter_map(|&i| {
            let p = image(i).ok()?;
            let (m, c) = p.leading_term()?;
            (p.num_terms() == 1 && m.degree() == 1 && c == &Rational::from_int(1))
                .then(|| (i, m.exponents().iter().position(|&e| e == 1).unwrap()))
        })
        .collect();
    let zeros: Vec<(usize, Rational)> = free.iter().map(|&(_, j)| (j, Rational::zero())).collect();
    if !free.is_empty() && unstable.iter().all(|p| p.specialize(&zeros).is_zero()) {
        report.witness_subspace =
            free.iter().map(|&(i, _)| spec.table().name(i).to_string()).collect();
    }

    match find_common_zero(&unstable, POINT_BUDGET) {
        Some(zp) => {
            let w: Vec<(String, Rational)> = spec
                .table()
                .names()
                .iter()
                .map(|n| (n.clone(), graph[n].eval(&zp)))
                .collect();
            report.verdict = Verdict::NotEverywhereStable;
            report.unstable_point = Some(Point(w));
        }
        None => {
            report.verdict = Verdict::Unknown;
            report.notes.push(format!(
                "no point of X in the unstable locus among {POINT_BUDGET} candidates over {}",
                z.names().join(", ")
            ));
        }
    }
    Ok(())
}

/// One member of the family `f = 1 + φ(Δ) - w0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    /// Univariate.
    pub phi: Poly,
    pub spec: RepSpec,
    /// Index into [`RepSpec::catalog_invariants`].
    pub delta: usize,
}

impl FamilyMember {
    /// `Sym^1 ⊕ V ⊕ V` with `Δ = w2 w5 - w3 w4`.
    pub fn standard(phi: Poly) -> Result<Self> {
        let spec = RepSpec::new(vec![1, 1, 1], crate::Normalization::Binomial)?;
        Ok(FamilyMember { phi, spec, delta: 2 })
    }

    pub fn delta(&self) -> Result<Poly> {
        let cat = self.spec.catalog_invariants()?;
        let (d, _) = cat
            .get(self.delta)
            .ok_or_else(|| Error::InvalidDelta(format!("index {} of {}", self.delta, cat.len())))?;
        Ok(d.clone())
    }
}

fn graph_variable(name: &str) -> String {
    match name.strip_prefix('w') {
        Some(rest) => format!("z{rest}"),
        None => format!("z_{name}"),
    }
}

/// `f = 1 + φ(Δ) - w0` and the graph `w0 = 1 + φ(Δ(z))`, `w_i = z_i`.
pub fn build_family_member(m: &FamilyMember) -> Result<(Poly, Graph)> {
    let spec = &m.spec;
    if spec.summands()[0] == 0 {
        return Err(Error::InvalidDelta("the first summand must have k >= 1".into()));
    }
    let occ = m.phi.occurring_vars();
    if occ.len() > 1 {
        return Err(Error::NotUnivariate(
            occ.iter().map(|&i| m.phi.vars().name(i).to_string()).collect(),
        ));
    }
    let phi0 = m.phi.constant_term();
    if phi0 == Rational::from_int(-1) {
        return Err(Error::OriginOnHypersurface);
    }
    let w0 = spec.coordinate(0, 0);
    let delta = m.delta()?;
    if delta.degree_in(w0) > 0 {
        return Err(Error::InvalidDelta(format!("{delta} involves {}", spec.table().name(w0))));
    }
    let t = spec.table();
    let subst = |target: &VarTable, d: &Poly| -> Result<Poly> {
        let images: Vec<Option<Poly>> = (0..m.phi.vars().len()).map(|_| Some(d.clone())).collect();
        m.phi.substitute_indexed(&images, target)
    };
    let h = &Poly::one(t) + &subst(t, &delta)?;
    let f = &h - &Poly::var_at(t, w0);

    let znames: Vec<String> = t
        .names()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != w0)
        .map(|(_, n)| graph_variable(n))
        .collect();
    let z = VarTable::new(znames)?;
    let mut graph = Graph::new();
    let mut k = 0;
    for (i, n) in t.names().iter().enumerate() {
        if i != w0 {
            graph.insert(n.clone(), Poly::var_at(&z, k));
            k += 1;
        }
    }
    let dz = delta.substitute(&graph)?;
    graph.insert(t.name(w0).to_string(), &Poly::one(&z) + &subst(&z, &dz)?);
    Ok((f, graph))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "camelCase")]
pub enum FamilyComparison {
    NonIsomorphicBoundaryCounts { first: usize, second: usize },
    Inconclusive { count: usize },
}

/// Distinct-root count of `φ`, which must be squarefree of positive degree.
/// The count only depends on `φ`, so the member itself is not built here.
pub fn boundary_component_count(m: &FamilyMember) -> Result<usize> {
    let (count, squarefree) = squarefree_distinct_root_count(&m.phi)?;
    if !squarefree {
        return Err(Error::NotSquarefree);
    }
    Ok(count)
}

pub fn compare_family(a: &FamilyMember, b: &FamilyMember) -> Result<FamilyComparison> {
    let (c1, c2) = (boundary_component_count(a)?, boundary_component_count(b)?);
    Ok(if c1 != c2 {
        FamilyComparison::NonIsomorphicBoundaryCounts { first: c1, second: c2 }
    } else {
        FamilyComparison::Inconclusive { count: c1 }
    })
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "verdict: {}", self.verdict)?;
        writeln!(
            out,
            "representation: summands {:?}, coordinates {}",
            self.representation.summands(),
            self.representation.table().names().join(" ")
        )?;
        if let Some(f) = &self.f {
            writeln!(out, "f = {f}")?;
        }
        if let Some(c) = &self.certificate {
            writeln!(
                out,
                "certificate: f on the unstable subspace = {} ({})",
                c.restriction,
                if c.certified { "certified stable" } else { "not certified" }
            )?;
        }
        if let Some(t) = &self.transfer {
            writeln!(out, "F = {}", t.big_f)?;
            writeln!(out, "F00 = {}", t.f00)?;
            writeln!(out, "g = {}", t.g)?;
            writeln!(out, "boundary: {}", t.boundary)?;
        }
        match &self.unstable_point {
            Some(p) => {
                writeln!(out, "unstable point: {p}")?;
                writeln!(out, "witness subspace: {} = 0", self.witness_subspace.join(" = "))?;
            }
            None => writeln!(out, "unstable coordinates: {}", self.witness_subspace.join(" "))?,
        }
        match &self.slice {
            Some(SliceReport::Found { slice, degree }) => {
                writeln!(out, "slice: {slice} (degree {degree})")?
            }
            Some(SliceReport::NoneUpTo { bound }) => writeln!(out, "slice: none up to degree {bound}")?,
            None => writeln!(out, "slice: no graph given")?,
        }
        if let Some(l) = &self.localized {
            match l {
                LocalizedQuotient::TrivialBundleAffine { k, preimage } => {
                    writeln!(out, "(f - c(f))^{k} = D({preimage})")?
                }
                LocalizedQuotient::NoneUpTo { kmax } => {
                    writeln!(out, "no power of f - c(f) in Im(D) up to {kmax}")?
                }
            }
        }
        if let Some(s) = &self.smoothness {
            match s {
                Smoothness::Smooth => writeln!(out, "boundary hypersurface: smooth")?,
                Smoothness::SmoothOnSamples { budget } => writeln!(
                    out,
                    "boundary hypersurface: no singular point among {budget} candidates"
                )?,
                Smoothness::SingularWitness { point } => {
                    writeln!(out, "boundary hypersurface: singular at {point}")?
                }
            }
        }
        for c in &self.crosschecks {
            writeln!(
                out,
                "crosscheck {}: {} ({})",
                c.name,
                if c.passed { "pass" } else { "FAIL" },
                c.detail
            )?;
        }
        for n in &self.notes {
            writeln!(out, "note: {n}")?;
        }
        write!(
            out,
            "bounds: kmax={} slice-deg={} inv-deg={}",
            self.bounds.kmax, self.bounds.slice_deg, self.bounds.invariant_deg
        )
    }
}
