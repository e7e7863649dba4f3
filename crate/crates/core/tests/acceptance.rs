//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use common::{corpus_specs, generators, in_image_dense, int, poly, random_invariant};
use gaquot::catalog::{self, all_fixtures, check_fixture, verify_winkelmann_relation};
use gaquot::classify::{
    build_family_member, classify, compare_family, Bounds, FamilyComparison, FamilyMember, SliceReport,
    Verdict,
};
use gaquot::derivation::PowerInImage;
use gaquot::transfer::{self, Boundary};
use gaquot::{parse, parse_with, Error, Normalization, Poly, Rational, RepSpec, VarTable, VariablePolicy};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: gaquot::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn winkelmann_reproduction() -> Outcome {
    let spec = RepSpec::new(vec![1, 1, 1], Normalization::Binomial).unwrap();
    let gens = ok(spec.derivation::<Rational>().graded_kernel_generators(2), "kernel")?;
    let again = ok(spec.derivation::<Rational>().graded_kernel_generators(2), "kernel")?;
    ensure!(gens == again, "generator order is not deterministic");
    let expected = ["w0", "w2", "w4", "w0*w3 - w1*w2", "w0*w5 - w1*w4", "w2*w5 - w3*w4"];
    ensure!(gens.len() == expected.len(), "got {} generators: {:?}", gens.len(), render(&gens));
    for e in expected {
        let e = poly(spec.table(), e);
        ensure!(
            gens.iter().filter(|g| g.is_scalar_multiple_of(&e)).count() == 1,
            "{e} not matched exactly once in {:?}",
            render(&gens)
        );
    }
    let w = ok(verify_winkelmann_relation(), "relation")?;
    ensure!(w.relation.is_zero(), "relation reduces to {}", w.relation);
    ensure!(!w.perturbed.is_zero(), "perturbed control vanished");
    Ok(format!("6 generators [{}]; relation reduces to 0, control to {}", render(&gens).join(", "), w.perturbed))
}

fn render(ps: &[Poly]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn classification_verdicts() -> Outcome {
    let bounds = Bounds::default();
    let mut seen = Vec::new();
    for (name, verdict) in [
        ("winkelmann", Verdict::StrictlyQuasiAffine),
        ("sl2-in-v2", Verdict::StrictlyQuasiAffine),
        ("affine-slice", Verdict::Affine),
        ("deveney-finston", Verdict::NotEverywhereStable),
    ] {
        let fx = ok(catalog::fixture(name), name)?;
        let c = ok(check_fixture(&fx, &bounds), name)?;
        ensure!(c.report.verdict == verdict, "{name}: {} (expected {verdict})", c.report.verdict);
        ensure!(c.passed(), "{name}: {:?}", c.mismatches);
        seen.push(format!("{name} {verdict}"));
    }
    let sl2 = ok(catalog::fixture("sl2-in-v2"), "sl2-in-v2")?;
    let lin = ok(sl2.spec.derivation::<Rational>().graded_kernel_generators(1), "kernel")?;
    let t = sl2.spec.table();
    ensure!(
        lin == vec![poly(t, "w0"), poly(t, "w2")],
        "sl2-in-v2 degree-1 kernel {:?}",
        render(&lin)
    );
    let fx = ok(catalog::fixture("affine-slice"), "affine-slice")?;
    let r = ok(classify(&fx.spec, fx.f.as_ref(), fx.graph.as_ref(), &bounds), "affine-slice")?;
    ensure!(
        matches!(r.slice, Some(SliceReport::Found { degree: 1, .. })),
        "affine-slice slice {:?}",
        r.slice
    );
    let fx = ok(catalog::fixture("deveney-finston"), "deveney-finston")?;
    let r = ok(classify(&fx.spec, fx.f.as_ref(), fx.graph.as_ref(), &bounds), "deveney-finston")?;
    ensure!(r.witness_subspace == ["w1", "w3"], "witness {:?}", r.witness_subspace);
    let p = r.unstable_point.as_ref().ok_or("no unstable point")?;
    ensure!(
        p.get("w1") == Some(&int(0)) && p.get("w3") == Some(&int(0)),
        "unstable point {p} off the witness subspace"
    );
    Ok(format!("{}; kernel_1(sl2-in-v2) = span{{w0, w2}}; witness w1 = w3 = 0", seen.join(", ")))
}

fn transfer_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let specs = corpus_specs();
    let gens: Vec<Vec<Poly>> = specs.iter().map(generators).collect();
    let mut n = 0;
    for round in 0..20 {
        for (spec, g) in specs.iter().zip(&gens) {
            let f1 = random_invariant(&mut rng, spec, g, 4);
            let f2 = random_invariant(&mut rng, spec, g, 2);
            let tag = format!("round {round}, summands {:?}, f = {f1}", spec.summands());
            let r1 = ok(transfer::extend(spec, &f1), &tag)?;
            ensure!(
                ok(transfer::restrict_to_identity(spec, &r1.big_f), &tag)? == f1,
                "{tag}: restriction differs"
            );
            ensure!(ok(transfer::verify_invariance(spec, &r1.big_f), &tag)?, "{tag}: F not killed");
            ensure!(&r1.f00 + &r1.g == f1, "{tag}: F00 + g != f");
            let r2 = ok(transfer::extend(spec, &f2), &tag)?;
            let r12 = ok(transfer::extend(spec, &(&f1 * &f2)), &tag)?;
            ensure!(r12.big_f == &r1.big_f * &r2.big_f, "{tag}: extend not multiplicative");
            n += 1;
        }
    }
    ensure!(n >= 200, "only {n} invariants");
    Ok(format!("{n} random invariants over {} representations", specs.len()))
}

fn duality_corpus() -> Vec<(RepSpec, Poly)> {
    let mut out = Vec::new();
    for fx in all_fixtures() {
        if let Some(f) = &fx.f {
            let fp = f - &Poly::constant(f.vars(), f.constant_term());
            if fp.total_degree().unwrap_or(0) <= 3 {
                out.push((fx.spec.clone(), fp));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for spec in corpus_specs().into_iter().filter(|s| s.dim() <= 6) {
        let kernel = spec.derivation::<Rational>().graded_kernel_generators(3).unwrap();
        for k in &kernel {
            out.push((spec.clone(), k.clone()));
        }
        for _ in 0..6 {
            out.push((spec.clone(), random_invariant(&mut rng, &spec, &kernel, 3)));
        }
    }
    out
}

fn boundary_image_duality() -> Outcome {
    let (mut contains, mut other) = (0, 0);
    for (spec, h) in duality_corpus() {
        let tag = format!("summands {:?}, h = {h}", spec.summands());
        let d = spec.derivation::<Rational>();
        let f00_zero = ok(transfer::extend(&spec, &h), &tag)?.f00.is_zero();
        match ok(d.power_in_image(&h, 3), &tag)? {
            PowerInImage::Found { k, preimage } => {
                ensure!(f00_zero, "{tag}: h^{k} in Im(D) but F00 != 0");
                ensure!(ok(d.apply(&preimage), &tag)? == h.pow(k), "{tag}: bad preimage");
                contains += 1;
            }
            PowerInImage::NoneUpTo(_) => {
                ensure!(!f00_zero, "{tag}: F00 = 0 but no power up to 3 in Im(D)");
                for k in 1..=3 {
                    ensure!(
                        !in_image_dense(&d, spec.weights(), &h.pow(k)),
                        "{tag}: dense oracle finds h^{k} in Im(D)"
                    );
                }
                other += 1;
            }
        }
    }
    Ok(format!("{contains} contain the boundary, {other} do not; all agree"))
}

fn sl2_algebra() -> Outcome {
    let mut n = 0;
    for fx in all_fixtures() {
        for norm in [Normalization::Binomial, Normalization::Unit] {
            let spec = RepSpec::new(fx.spec.summands().to_vec(), norm).unwrap();
            let tr = ok(spec.sl2_triple::<Rational>(), &fx.name)?;
            let t = spec.table();
            let bracket = |a: &gaquot::Derivation<Rational>, b: &gaquot::Derivation<Rational>, x: &Poly| {
                &a.apply(&b.apply(x).unwrap()).unwrap() - &b.apply(&a.apply(x).unwrap()).unwrap()
            };
            for i in 0..spec.dim() {
                let x = Poly::var_at(t, i);
                let (e, f, h) = (tr.e.apply(&x).unwrap(), tr.f.apply(&x).unwrap(), tr.h.apply(&x).unwrap());
                ensure!(bracket(&tr.h, &tr.e, &x) == e.scale(&int(2)), "{}: [H,E] on {}", fx.name, t.name(i));
                ensure!(bracket(&tr.h, &tr.f, &x) == f.scale(&int(-2)), "{}: [H,F] on {}", fx.name, t.name(i));
                ensure!(bracket(&tr.e, &tr.f, &x) == h, "{}: [E,F] on {}", fx.name, t.name(i));
            }
            if norm == Normalization::Binomial {
                for (j, &k) in spec.summands().iter().enumerate() {
                    let r = spec.summand_range(j);
                    for c in r.clone() {
                        ensure!(
                            tr.e.apply_n(&Poly::var_at(t, c), k + 1).unwrap().is_zero(),
                            "{}: D^{} != 0",
                            fx.name,
                            k + 1
                        );
                    }
                    let fact: i64 = (1..=k as i64).product();
                    let top = tr.e.apply_n(&Poly::var_at(t, r.end - 1), k).unwrap();
                    ensure!(
                        top == Poly::var_at(t, r.start).scale(&int(fact)),
                        "{}: D^{k}(w_{k}) = {top}",
                        fx.name
                    );
                }
            }
            n += 1;
        }
    }
    Ok(format!("{n} representations, both normalizations"))
}

fn characterization_coherence() -> Outcome {
    let bounds = Bounds::default();
    let mut lines = Vec::new();
    for fx in all_fixtures() {
        let r = match classify(&fx.spec, fx.f.as_ref(), fx.graph.as_ref(), &bounds) {
            Err(Error::InternalInconsistency(m)) => return Err(format!("{}: {m}", fx.name)),
            other => ok(other, &fx.name)?,
        };
        ensure!(r.crosschecks_pass(), "{}: {:?}", fx.name, r.crosschecks);
        if r.verdict == Verdict::NotEverywhereStable {
            lines.push(format!("{} unstable", fx.name));
            continue;
        }
        let f = fx.f.as_ref().ok_or(format!("{}: stable verdict without f", fx.name))?;
        let affine = r.verdict == Verdict::Affine;
        let route1 = ok(transfer::extend(&fx.spec, f), &fx.name)?.boundary == Boundary::Misses;
        let fp = f - &Poly::constant(f.vars(), f.constant_term());
        let route2 = ok(transfer::extend(&fx.spec, &fp), &fx.name)?.f00.is_zero();
        let route3 = matches!(
            ok(fx.spec.derivation::<Rational>().power_in_image(&fp, bounds.kmax), &fx.name)?,
            PowerInImage::Found { .. }
        );
        ensure!(
            route1 == affine && route2 == affine && route3 == affine,
            "{}: verdict {} but boundary {route1}, F00(f') = 0 {route2}, power in image {route3}",
            fx.name,
            r.verdict
        );
        if let Some(g) = &fx.graph {
            let dx = ok(fx.spec.derivation::<Rational>().restrict_to_graph(g), &fx.name)?;
            let found = dx.slice_search(bounds.slice_deg).slice().is_some();
            ensure!(found == affine, "{}: slice found {found}, affine {affine}", fx.name);
        }
        lines.push(format!("{} {}", fx.name, r.verdict));
    }
    Ok(lines.join(", "))
}

fn family_comparison() -> Outcome {
    let member = |s: &str| FamilyMember::standard(parse(s).unwrap()).unwrap();
    let c = ok(compare_family(&member("t"), &member("t^2 - 1")), "compare")?;
    ensure!(
        c == FamilyComparison::NonIsomorphicBoundaryCounts { first: 1, second: 2 },
        "compare(t, t^2 - 1) = {c:?}"
    );
    let sq = compare_family(&member("t"), &member("t^2"));
    ensure!(matches!(sq, Err(Error::NotSquarefree)), "t^2 gave {sq:?}");
    let origin = build_family_member(&member("t - 1"));
    ensure!(matches!(origin, Err(Error::OriginOnHypersurface)), "phi(0) = -1 gave {origin:?}");
    let origin = build_family_member(&member("t^2 + t - 1"));
    ensure!(matches!(origin, Err(Error::OriginOnHypersurface)), "phi(0) = -1 gave {origin:?}");
    Ok("(t, t^2 - 1) -> counts (1, 2); t^2 rejected; phi(0) = -1 rejected".into())
}

fn parser() -> Outcome {
    let mut n = 0;
    let mut check = |p: &Poly| -> Result<(), String> {
        let back = ok(parse_with(&p.to_string(), p.vars(), VariablePolicy::Strict), "re-parse")?;
        ensure!(&back == p, "{p} re-parses as {back}");
        n += 1;
        Ok(())
    };
    for fx in all_fixtures() {
        if let Some(f) = &fx.f {
            check(f)?;
        }
        for p in fx.graph.iter().flat_map(|g| g.values()) {
            check(p)?;
        }
        for (p, _) in fx.spec.catalog_invariants().unwrap_or_default() {
            check(&p)?;
        }
    }
    let t = VarTable::new(["w0", "w1"]).unwrap();
    check(&poly(&t, "-7/3*w0^2 + w1/2 - 1"))?;
    let malformed: &[(&str, usize)] = &[
        ("w0 +", 4),
        ("", 0),
        ("(w0 + w1", 8),
        ("w0 + w1)", 7),
        ("w0 ^", 4),
        ("w0^-1", 3),
        ("w0 * * w1", 5),
        ("w0 w1", 3),
        ("1/w0", 1),
        ("1/0", 1),
        ("w0 # 2", 3),
        ("w0^w1", 3),
        ("x + w0", 0),
    ];
    for &(src, at) in malformed {
        match parse_with::<Rational>(src, &t, VariablePolicy::Strict) {
            Err(Error::Syntax { pos, .. }) if pos == at => {}
            other => return Err(format!("{src:?}: {other:?} (expected syntax error at {at})")),
        }
    }
    Ok(format!("{n} polynomials round-trip; {} malformed inputs rejected at the expected offset", malformed.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("winkelmann reproduction", winkelmann_reproduction),
        ("classification verdicts", classification_verdicts),
        ("transfer soundness", transfer_soundness),
        ("boundary/image duality", boundary_image_duality),
        ("sl2 algebra", sl2_algebra),
        ("characterization coherence", characterization_coherence),
        ("family comparison", family_comparison),
        ("parser", parser),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
