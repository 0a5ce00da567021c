//! Acceptance suite: one PASS/FAIL line per criterion.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use comatrix_cli::commands::{descent, descent_status, galois, resolve, Resolved};
use comatrix_cli::{parse_workspace, ExitStatus, Selector, Workspace};
use comatrix_core::algebra::{
    dual_basis, dual_basis_with_generators, hom_right, AlgebraRef, BalancedTensor, OperatorAlgebra,
};
use comatrix_core::comatrix::{check_compatible, triangle_report, FamilyAnalysis};
use comatrix_core::coring::{
    check_coring, comodule_from_grouplike, grouplike_hom_ring, sweedler_coring, Coring, Grouplike,
};
use comatrix_core::exactlin::{rat, unit_vec, MapSpace, Subspace};
use comatrix_core::fixtures;
use comatrix_core::graded::{comodule_to_grading, graded_coring, graded_to_comodule, subgroup_family, GradedAlgebra};
use comatrix_core::Matrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture(name: &str) -> Workspace {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    parse_workspace(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn subgroup(names: &[&str]) -> Selector {
    Selector::Subgroup(names.iter().map(|s| s.to_string()).collect())
}

/// Every fixture family: F1 and F4 singletons, both subgroups on F2 and F3.
fn fixture_families() -> Vec<(String, Workspace, Selector)> {
    let mut out = vec![("F1 {[1]A}".to_string(), fixture("f1.json"), Selector::Document)];
    for (label, file) in [("F2", "f2.json"), ("F3", "f3.json")] {
        for h in [&["e"][..], &["e", "s"][..]] {
            out.push((format!("{label} H={{{}}}", h.join(",")), fixture(file), subgroup(h)));
        }
    }
    out.push(("F4 {[1]A}".to_string(), fixture("f4.json"), Selector::Document));
    out
}

fn family_corings(an: &FamilyAnalysis) -> Vec<(&'static str, &Coring)> {
    let mut out = vec![
        ("𝔓", &an.coproduct.coring),
        ("𝔯", &an.quotient.coring),
        ("Σ†⊗_RΣ", &an.infinite.coring),
        ("Σ*⊗_TΣ", &an.infinite.endo.coring),
    ];
    out.extend(an.coproduct.summands.iter().map(|s| ("comatrix", &s.coring)));
    out
}

fn check_all(label: &str, corings: &[(&str, &Coring)]) -> Result<usize, String> {
    for (name, c) in corings {
        let r = check_coring(c);
        ensure(r.ok, || {
            format!("{label}: {name} fails {:?}", r.failures.first().map(|f| &f.axiom))
        })?;
    }
    Ok(corings.len())
}

fn small_enough(ga: &GradedAlgebra) -> bool {
    ga.group.order() * ga.dim() * ga.dim() <= 24
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    let algebras: Vec<AlgebraRef> = [fixtures::f1_algebra(), fixtures::f2_algebra(), fixtures::f3_algebra()]
        .into_iter()
        .map(Arc::new)
        .collect();
    for a in &algebras {
        checked += check_all("fixture", &[("trivial", &Coring::trivial(a).unwrap())])?;
    }
    for (label, ws, sel) in fixture_families() {
        let r = resolve(&ws, &sel).map_err(|e| e.to_string())?;
        let mut corings = vec![("base", ws.coring().unwrap())];
        corings.extend(family_corings(&r.analysis));
        if let Some((g, _)) = &r.grouplike_coring {
            corings.push(("𝔯(G)", g));
        }
        checked += check_all(&label, &corings)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut strong = 0;
    for k in 0..20 {
        let ga = fixtures::random_graded_algebra(&mut rng);
        let label = format!("random #{k}");
        let (ag, gs) = graded_coring(&ga).map_err(|e| e.to_string())?;
        let sw = sweedler_coring(&ga.algebra, &ga.component(ga.group.identity())).map_err(|e| e.to_string())?;
        let trivial = Coring::trivial(&ga.algebra).unwrap();
        checked += check_all(&label, &[("AG", &ag), ("Sweedler", &sw.coring), ("trivial", &trivial)])?;
        let h: Vec<usize> = if small_enough(&ga) {
            (0..ga.group.order()).collect()
        } else {
            vec![ga.group.identity()]
        };
        let sf = subgroup_family(&ga, &ag, &gs, &h).map_err(|e| e.to_string())?;
        let mut corings = family_corings(&sf.analysis);
        corings.push(("𝔯(G)", &sf.family.coring));
        checked += check_all(&label, &corings)?;
        if comatrix_core::graded::is_strongly_graded(&ga) {
            strong += 1;
        }
    }
    Ok(format!(
        "{checked} corings, 20 random algebras ({strong} strongly graded)"
    ))
}

fn criterion_2() -> Outcome {
    let mut lines = Vec::new();
    for (label, ws, sel) in fixture_families() {
        let r = resolve(&ws, &sel).map_err(|e| e.to_string())?;
        let an = &r.analysis;
        let cop = &an.coproduct.coring;
        let q = &an.quotient;
        let pi = q.pi();
        let pi_pi = BalancedTensor::tensor_map(cop.square(), q.coring.square(), &[pi.clone(), pi]);
        for j in q.coideal.basis_vectors() {
            ensure(cop.epsilon(&j).iter().all(|x| *x == rat(0)), || {
                format!("{label}: ε(𝔍) ≠ 0")
            })?;
            let image = pi_pi.mul_vec(&cop.delta(&j));
            ensure(image.iter().all(|x| *x == rat(0)), || format!("{label}: (π⊗π)Δ(𝔍) ≠ 0"))?;
        }
        let (p, jd, x) = (cop.dim(), q.coideal.dim(), an.infinite.coring.dim());
        ensure(p - jd == x, || format!("{label}: {p} − {jd} ≠ {x}"))?;
        lines.push(format!("{p}−{jd}={x}"));
    }
    Ok(lines.join(", "))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for (label, ws, sel) in fixture_families().into_iter().filter(|(l, _, _)| !l.starts_with("F4")) {
        let r = resolve(&ws, &sel).map_err(|e| e.to_string())?;
        let t = triangle_report(&r.analysis.quotient, &r.analysis.infinite);
        ensure(t.holds(), || format!("{label}: {t:?}"))?;
        count += 1;
    }
    Ok(format!("{count} families, 3 isomorphisms each"))
}

/// Rank of `span{a·g·a′}` computed straight from the bimodule actions.
fn brute_force_rank(c: &Coring, gs: &[Grouplike]) -> usize {
    let n = c.algebra().dim();
    let mut vectors = Vec::new();
    for g in gs {
        for i in 0..n {
            for j in 0..n {
                let l = &c.bimodule.left_action[i];
                let r = &c.bimodule.right_action[j];
                vectors.push(l.mul_vec(&r.mul_vec(&g.vector)));
            }
        }
    }
    Subspace::span(c.dim(), &vectors).dim()
}

fn criterion_4() -> Outcome {
    let cases = [
        ("f2.json", &["e"][..], 4, true),
        ("f2.json", &["e", "s"][..], 4, true),
        ("f3.json", &["e", "s"][..], 4, true),
        ("f3.json", &["e"][..], 3, false),
    ];
    let mut lines = Vec::new();
    for (file, h, rank, bijective) in cases {
        let ws = fixture(file);
        let r: Resolved = resolve(&ws, &subgroup(h)).map_err(|e| e.to_string())?;
        let report = galois(&r);
        let gs: Vec<Grouplike> = h.iter().map(|g| ws.grouplike(g).unwrap()).collect();
        let brute = brute_force_rank(ws.coring().unwrap(), &gs);
        let label = format!("{file} H={{{}}}", h.join(","));
        ensure(brute == rank, || {
            format!("{label}: brute-force rank {brute}, expected {rank}")
        })?;
        ensure(report.can.rank == brute, || {
            format!("{label}: pipeline rank {} ≠ {brute}", report.can.rank)
        })?;
        ensure(report.galois == bijective && report.can.target_dim == 4, || {
            format!("{label}: verdict")
        })?;
        ensure(report.violations.is_empty(), || {
            format!("{label}: {:?}", report.violations)
        })?;
        lines.push(format!("{}/{}", report.can.rank, report.can.target_dim));
    }
    Ok(lines.join(", "))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for (label, ws, sel) in fixture_families() {
        let d = descent(&ws, &sel, None).map_err(|e| e.to_string())?;
        let r = &d.report;
        ensure(r.consistent(), || format!("{label}: {:?}", r.violations))?;
        let first = r.can_bijective && r.members_projective && r.sigma_flatness.faithfully_flat;
        ensure(first == r.faithfully_flat_condition, || {
            format!("{label}: condition bookkeeping")
        })?;
        ensure(!first || r.generating_certificate, || format!("{label}: generation"))?;
        ensure(!r.sigma_flatness.faithfully_flat || r.lambda_bijective, || {
            format!("{label}: λ")
        })?;
        ensure(descent_status(&d) != ExitStatus::Inconsistent, || {
            format!("{label}: exit status")
        })?;
        let mut tampered = d.clone();
        tampered.report.lambda_bijective = !r.sigma_flatness.faithfully_flat;
        tampered.report.generating_certificate = !r.faithfully_flat_condition;
        tampered.report.violations = tampered.report.theorem_violations();
        ensure(descent_status(&tampered).code() == 3, || {
            format!("{label}: divergence not flagged")
        })?;
        count += 1;
    }
    Ok(format!("{count} families consistent; forced divergence exits 3"))
}

fn criterion_6() -> Outcome {
    let mut dims = Vec::new();
    for ga in [fixtures::f2_graded(), fixtures::f3_graded()] {
        let (ag, gs) = graded_coring(&ga).map_err(|e| e.to_string())?;
        let group = &ga.group;
        for g in 0..2 {
            for h in 0..2 {
                let gh = grouplike_hom_ring(&ag, &gs[g], &gs[h]).map_err(|e| e.to_string())?;
                let component = ga.component(group.mul(group.inv(h), g));
                ensure(gh.identified, || format!("({g},{h}): f ↦ f(1) is not bijective"))?;
                ensure(gh.subspace == component, || {
                    format!("({g},{h}): not the homogeneous component")
                })?;
                ensure(gh.homs.dim() == component.dim(), || format!("({g},{h}): dimension"))?;
                let src = comodule_from_grouplike(&ag, &gs[g]).unwrap();
                for f in gh.homs.basis_maps() {
                    let image = f.mul_vec(ga.algebra.unit());
                    ensure(gh.subspace.contains(&image), || {
                        format!("({g},{h}): f(1) outside A_{{g,h}}")
                    })?;
                    ensure(f.rows() == src.dim(), || "shape".into())?;
                }
                dims.push(gh.homs.dim().to_string());
            }
        }
    }
    Ok(format!("dims {}", dims.join(" ")))
}

fn scalars(n: usize) -> OperatorAlgebra {
    OperatorAlgebra::new(MapSpace::spanned_by(n, n, &[Matrix::identity(n)])).unwrap()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < 10 {
        attempts += 1;
        ensure(attempts < 200, || "could not find two distinct dual bases".into())?;
        let a: AlgebraRef = Arc::new(if tested % 2 == 0 {
            fixtures::f2_algebra()
        } else {
            fixtures::f3_algebra()
        });
        let p = fixtures::random_projective_module(&mut rng, &a, &fixtures::known_idempotents(&a));
        if p.dim == 0 {
            continue;
        }
        let first = dual_basis(&p).map_err(|e| e.to_string())?;
        let mut gens: Vec<_> = (0..p.dim).map(|i| unit_vec(p.dim, i)).collect();
        gens.push(fixtures::random_invertible(&mut rng, p.dim).column(0));
        gens[0][0] += rat(1);
        let Ok(second) = dual_basis_with_generators(&p, &gens) else {
            continue;
        };
        if first == second {
            continue;
        }
        for t in [
            scalars(p.dim),
            OperatorAlgebra::new(hom_right(&p, &p).unwrap()).unwrap(),
        ] {
            ensure(
                check_compatible(&p, &t, &first, &second).map_err(|e| e.to_string())?,
                || format!("module #{tested}: Δ depends on the dual basis"),
            )?;
        }
        tested += 1;
    }
    Ok(format!("{tested} modules, two operator rings each"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    let mut count = 0;
    for ga in [fixtures::f2_graded(), fixtures::f3_graded()] {
        let (ag, _) = graded_coring(&ga).map_err(|e| e.to_string())?;
        let order = ga.group.order();
        for _ in 0..10 {
            let gm = fixtures::random_graded_module(&mut rng, &ga);
            let c = graded_to_comodule(&ga, &ag, &gm).map_err(|e| e.to_string())?;
            let back = comodule_to_grading(&ga, &c).map_err(|e| e.to_string())?;
            let original = gm.projections(order);
            ensure(back.projections == original, || "recovered projections differ".into())?;
            let (regraded, change) = back.to_graded_module(&ga, &c).map_err(|e| e.to_string())?;
            for (k, act) in gm.module.action.iter().enumerate() {
                ensure(act * &change == &change * &regraded.module.action[k], || {
                    "action not preserved".into()
                })?;
            }
            for (col, &d) in regraded.degrees.iter().enumerate() {
                let v = change.column(col);
                ensure(original[d].mul_vec(&v) == v, || {
                    "basis vector has the wrong degree".into()
                })?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} modules"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("axiom suite", criterion_1),
        ("coideal", criterion_2),
        ("triangle isomorphisms", criterion_3),
        ("Galois ranks", criterion_4),
        ("descent consistency", criterion_5),
        ("grouplike identification", criterion_6),
        ("dual-basis independence", criterion_7),
        ("graded round trip", criterion_8),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!(
        "acceptance: {}/8 passed in {:.2}s",
        8 - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
