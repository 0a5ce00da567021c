//! Command evaluation and report rendering.

use std::fmt::Write as _;

use comatrix_core::algebra::check_algebra;
use comatrix_core::comatrix::{
    analyze, check_iso, descent_report, triangle_report, CanReport, CoidealCertificate, ComoduleFamily, DescentReport,
    DescentVerdict, FamilyAnalysis, TriangleReport,
};
use comatrix_core::coring::{check_comodule, check_coring, is_grouplike, Comodule, Coring};
use comatrix_core::graded::subgroup_family;
use comatrix_core::{Matrix, ValidationReport};
use serde::{Deserialize, Serialize};

use crate::workspace::{coring_document, InputError, Workspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExitStatus {
    Pass = 0,
    Negative = 1,
    InputError = 2,
    Inconsistent = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Result of one command: what to print and how to exit.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: ExitStatus,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new(status: ExitStatus, stdout: String) -> Self {
        Outcome {
            status,
            stdout,
            stderr: String::new(),
        }
    }

    pub fn input_error(e: &InputError) -> Self {
        Outcome {
            status: ExitStatus::InputError,
            stdout: String::new(),
            stderr: format!("input error:\n{e}\n"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub subject: String,
    pub report: ValidationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(|e| e.report.ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisReport {
    pub family: Vec<String>,
    pub coproduct_dim: usize,
    pub coideal_dim: usize,
    pub quotient_dim: usize,
    pub infinite_dim: usize,
    /// `dim 𝔯(G)`, for subgroup families.
    pub grouplike_dim: Option<usize>,
    pub coideal: CoidealCertificate,
    pub triangle: TriangleReport,
    pub can: CanReport,
    /// `R ≅ ⊕ A_{g,h}`, only for subgroup families.
    pub components_match: Option<bool>,
    pub galois: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentDocument {
    pub family: Vec<String>,
    pub report: DescentReport,
}

/// How a family is chosen.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Selector {
    /// Fall back to the document, then to the whole group.
    #[default]
    Document,
    Subgroup(Vec<String>),
    Family(Vec<String>),
}

pub fn check(ws: &Workspace) -> CheckReport {
    let mut entries = Vec::new();
    let Some(a) = &ws.algebra else {
        return CheckReport { entries };
    };
    entries.push(CheckEntry {
        subject: "algebra axioms".into(),
        report: check_algebra(a),
    });
    if let Some((_, c)) = &ws.coring {
        entries.push(CheckEntry {
            subject: "coring axioms".into(),
            report: check_coring(c),
        });
        for (name, v) in &ws.grouplikes {
            let mut report = ValidationReport::new();
            report.require(is_grouplike(c, v), "grouplike", || {
                format!("Δ(g) = g⊗g and ε(g) = 1 fail for {name}")
            });
            entries.push(CheckEntry {
                subject: format!("grouplike {name}"),
                report,
            });
        }
        for (name, m) in ws.declared_comodules() {
            entries.push(CheckEntry {
                subject: format!("comodule {name}"),
                report: check_comodule(c, &m),
            });
        }
    }
    CheckReport { entries }
}

pub fn render_check(r: &CheckReport) -> String {
    if r.entries.is_empty() {
        return "nothing to check\n".into();
    }
    let mut out = String::new();
    for e in &r.entries {
        if e.report.ok {
            let _ = writeln!(out, "{}: pass", e.subject);
        } else {
            let mut axioms: Vec<&str> = e.report.failures.iter().map(|f| f.axiom.as_str()).collect();
            axioms.dedup();
            let _ = writeln!(out, "{}: FAIL ({})", e.subject, axioms.join(", "));
            for f in &e.report.failures {
                let _ = writeln!(out, "  {}: {}", f.axiom, f.witness);
            }
        }
    }
    out
}

pub fn run_check(ws: &Workspace, json: bool) -> Outcome {
    let report = check(ws);
    let status = if report.ok() {
        ExitStatus::Pass
    } else {
        ExitStatus::Negative
    };
    let text = if json && !report.entries.is_empty() {
        to_json(&report)
    } else {
        render_check(&report)
    };
    Outcome::new(status, text)
}

/// A resolved family together with its analysis.
pub struct Resolved {
    pub names: Vec<String>,
    pub family: ComoduleFamily,
    pub analysis: FamilyAnalysis,
    pub components_match: Option<bool>,
    /// `𝔯(G)` and its map to `Σ†⊗_RΣ`, for subgroup families.
    pub grouplike_coring: Option<(Coring, Matrix)>,
}

pub fn resolve(ws: &Workspace, sel: &Selector) -> Result<Resolved, InputError> {
    let sel = match sel {
        Selector::Document => match (&ws.document.family, &ws.document.subgroup) {
            (Some(f), _) => Selector::Family(f.clone()),
            (None, Some(h)) => Selector::Subgroup(h.clone()),
            (None, None) => match &ws.graded {
                Some(ga) => Selector::Subgroup(ga.group.names.clone()),
                None => return Err(InputError::at("family", "no family selected")),
            },
        },
        other => other.clone(),
    };
    let c = ws.coring()?;
    let core = |e: comatrix_core::Error| InputError::at("family", e.to_string());
    match sel {
        Selector::Subgroup(h) => {
            let idx = ws.subgroup_indices(&h)?;
            let ga = ws.graded.as_ref().expect("checked by subgroup_indices");
            let gs = ws
                .grouplikes
                .iter()
                .take(ga.group.order())
                .map(|(name, _)| ws.grouplike(name))
                .collect::<Result<Vec<_>, _>>()?;
            let sf = subgroup_family(ga, c, &gs, &idx).map_err(|e| InputError::at("subgroup", e.to_string()))?;
            Ok(Resolved {
                names: idx.iter().map(|&g| format!("[{}]A", ga.group.names[g])).collect(),
                family: sf.family.family,
                analysis: sf.analysis,
                components_match: Some(sf.matches_components && sf.family.ring_identified),
                grouplike_coring: Some((sf.family.coring, sf.family.to_infinite)),
            })
        }
        Selector::Family(names) => {
            if names.is_empty() {
                return Err(InputError::at("family", "the family is empty"));
            }
            let members = names
                .iter()
                .map(|n| {
                    let m = ws
                        .comodule(n)
                        .map_err(|e| InputError::at("family", e.0[0].message.clone()))?;
                    Ok((n.clone(), m))
                })
                .collect::<Result<Vec<(String, Comodule)>, InputError>>()?;
            let family = ComoduleFamily::new(c, members).map_err(core)?;
            let analysis = analyze(&family).map_err(core)?;
            Ok(Resolved {
                names,
                family,
                analysis,
                components_match: None,
                grouplike_coring: None,
            })
        }
        Selector::Document => unreachable!("replaced above"),
    }
}

pub fn galois(r: &Resolved) -> GaloisReport {
    let an = &r.analysis;
    let triangle = triangle_report(&an.quotient, &an.infinite);
    let coideal = an.quotient.certificate.clone();
    let mut violations = Vec::new();
    if !coideal.passes() {
        violations.push("𝔍 is not a coideal".to_string());
    }
    if an.coproduct.coring.dim() - an.quotient.coideal.dim() != an.infinite.coring.dim() {
        violations.push("dim 𝔓 − dim 𝔍 differs from dim Σ†⊗_RΣ".to_string());
    }
    if !triangle.holds() {
        violations.push("the triangle of corings does not consist of isomorphisms".to_string());
    }
    if !an.can.is_coring_hom {
        violations.push("can is not a coring homomorphism".to_string());
    }
    let grouplike_dim = r.grouplike_coring.as_ref().map(|(g, to_x)| {
        if !check_iso(g, &an.infinite.coring, to_x).holds() {
            violations.push("𝔯(G) → Σ†⊗_RΣ is not an isomorphism of corings".to_string());
        }
        g.dim()
    });
    if r.components_match == Some(false) {
        violations.push("R does not match the homogeneous components".to_string());
    }
    GaloisReport {
        family: r.names.clone(),
        coproduct_dim: an.coproduct.coring.dim(),
        coideal_dim: an.quotient.coideal.dim(),
        quotient_dim: an.quotient.coring.dim(),
        infinite_dim: an.infinite.coring.dim(),
        grouplike_dim,
        coideal,
        triangle,
        can: an.can.clone(),
        components_match: r.components_match,
        galois: an.can.is_bijective,
        violations,
    }
}

pub fn galois_verdict(r: &GaloisReport) -> String {
    format!(
        "GALOIS: {} (rank {}/{})",
        if r.galois { "yes" } else { "no" },
        r.can.rank,
        r.can.target_dim
    )
}

pub fn render_galois(r: &GaloisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family: {}", r.family.join(", "));
    let _ = writeln!(out, "dim 𝔓: {}", r.coproduct_dim);
    let _ = writeln!(out, "dim 𝔍: {}", r.coideal_dim);
    let _ = writeln!(out, "dim 𝔯: {}", r.quotient_dim);
    let _ = writeln!(out, "dim Σ†⊗_RΣ: {}", r.infinite_dim);
    if let Some(d) = r.grouplike_dim {
        let _ = writeln!(out, "dim 𝔯(G): {d}");
    }
    let _ = writeln!(out, "can rank: {}/{}", r.can.rank, r.can.target_dim);
    for v in &r.violations {
        let _ = writeln!(out, "INCONSISTENT: {v}");
    }
    if !r.galois {
        let _ = writeln!(out, "not Galois");
    }
    let _ = writeln!(out, "{}", galois_verdict(r));
    out
}

pub fn galois_status(r: &GaloisReport) -> ExitStatus {
    if !r.violations.is_empty() {
        ExitStatus::Inconsistent
    } else if r.galois {
        ExitStatus::Pass
    } else {
        ExitStatus::Negative
    }
}

pub fn run_galois(ws: &Workspace, sel: &Selector, json: bool) -> Outcome {
    let resolved = match resolve(ws, sel) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(&e),
    };
    let report = galois(&resolved);
    let text = if json { to_json(&report) } else { render_galois(&report) };
    Outcome::new(galois_status(&report), text)
}

pub fn probes(ws: &Workspace, names: Option<&[String]>) -> Result<Vec<(String, Comodule)>, InputError> {
    match names.or(ws.document.probes.as_deref()) {
        Some(names) => names.iter().map(|n| Ok((n.clone(), ws.comodule(n)?))).collect(),
        None => Ok(ws.declared_comodules()),
    }
}

pub fn descent(ws: &Workspace, sel: &Selector, probe_names: Option<&[String]>) -> Result<DescentDocument, InputError> {
    let r = resolve(ws, sel)?;
    let probes = probes(ws, probe_names)?;
    let report =
        descent_report(&r.family, &r.analysis, &probes).map_err(|e| InputError::at("probes", e.to_string()))?;
    Ok(DescentDocument {
        family: r.names,
        report,
    })
}

pub fn descent_status(d: &DescentDocument) -> ExitStatus {
    if !d.report.violations.is_empty() {
        ExitStatus::Inconsistent
    } else if d.report.verdict == DescentVerdict::Equivalence {
        ExitStatus::Pass
    } else {
        ExitStatus::Negative
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn render_descent(d: &DescentDocument) -> String {
    let r = &d.report;
    let mut out = String::new();
    let _ = writeln!(out, "family: {}", d.family.join(", "));
    let rows: Vec<(&str, String)> = vec![
        ("coring flat over A", flag(r.coring_flat).into()),
        ("members f.g. projective", flag(r.members_projective).into()),
        (
            "can bijective",
            format!("{} (rank {}/{})", flag(r.can_bijective), r.can_rank, r.coring_dim),
        ),
        (
            "Σ faithfully flat over R",
            format!(
                "{} (flat {}, faithful {}, {} generators)",
                flag(r.sigma_flatness.faithfully_flat),
                flag(r.sigma_flatness.flat),
                flag(r.sigma_flatness.faithful),
                r.sigma_flatness.generators
            ),
        ),
        ("S faithfully flat over R", flag(r.s_flatness.faithfully_flat).into()),
        ("S ≅ Σ⊗_AΣ†", flag(r.s_tensor_iso).into()),
        ("Σ†⊗_RΣ flat over A", flag(r.infinite_flat).into()),
        ("dim R / dim R̄", format!("{} / {}", r.r_dim, r.r_bar_dim)),
        ("λ: R → R̄ bijective", flag(r.lambda_bijective).into()),
        ("generating certificate", flag(r.generating_certificate).into()),
        ("faithfully flat condition", flag(r.faithfully_flat_condition).into()),
        ("S condition", flag(r.s_condition).into()),
    ];
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in rows {
        let pad = width - k.chars().count();
        let _ = writeln!(out, "{k}{}  {v}", " ".repeat(pad));
    }
    for p in &r.probes {
        let _ = writeln!(
            out,
            "probe {}: generated {}, lifting {}",
            p.name,
            flag(p.generated),
            flag(p.lifting)
        );
    }
    for v in &r.violations {
        let _ = writeln!(out, "INCONSISTENT: {v}");
    }
    let verdict = match r.verdict {
        DescentVerdict::Equivalence => "equivalence",
        DescentVerdict::NoEquivalence => "no equivalence",
        DescentVerdict::Inconclusive => "inconclusive",
    };
    let _ = writeln!(out, "DESCENT: {verdict}");
    out
}

pub fn run_descent(ws: &Workspace, sel: &Selector, probe_names: Option<&[String]>, json: bool) -> Outcome {
    match descent(ws, sel, probe_names) {
        Ok(d) => {
            let text = if json { to_json(&d) } else { render_descent(&d) };
            Outcome::new(descent_status(&d), text)
        }
        Err(e) => Outcome::input_error(&e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildTarget {
    /// The coring of the document itself.
    Base,
    Coproduct,
    Quotient,
    Infinite,
    /// `Σ* ⊗_T Σ`.
    Endo,
    /// `𝔯(G)` from Sweedler corings; subgroup families only.
    Grouplike,
}

pub fn run_build(ws: &Workspace, target: BuildTarget, sel: &Selector) -> Outcome {
    let built = match target {
        BuildTarget::Base => ws.coring().cloned().map(|c| ("coring", c)),
        _ => resolve(ws, sel).and_then(|r| {
            Ok(match target {
                BuildTarget::Coproduct => ("coproduct", r.analysis.coproduct.coring),
                BuildTarget::Quotient => ("quotient", r.analysis.quotient.coring),
                BuildTarget::Infinite => ("infinite comatrix", r.analysis.infinite.coring),
                BuildTarget::Endo => ("endomorphism comatrix", r.analysis.infinite.endo.coring),
                BuildTarget::Grouplike => (
                    "grouplike",
                    r.grouplike_coring
                        .map(|(g, _)| g)
                        .ok_or_else(|| InputError::at("subgroup", "this target needs a subgroup family"))?,
                ),
                BuildTarget::Base => unreachable!(),
            })
        }),
    };
    match built {
        Ok((name, c)) => {
            let status = if check_coring(&c).ok {
                ExitStatus::Pass
            } else {
                ExitStatus::Inconsistent
            };
            Outcome::new(status, to_json(&coring_document(name, &c)))
        }
        Err(e) => Outcome::input_error(&e),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}
