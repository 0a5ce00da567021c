//! The JSON workspace document: parsing, validation and name resolution.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use comatrix_core::algebra::{Algebra, AlgebraRef, Bimodule, RightModule};
use comatrix_core::coring::{comodule_from_grouplike, sweedler_coring, Comodule, Coring, Grouplike};
use comatrix_core::exactlin::{format_rational, parse_rational, zero_vec, Matrix, Subspace};
use comatrix_core::graded::{graded_coring, graded_to_comodule, GradedAlgebra, GradedModule, Group};
use comatrix_core::Rational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A rational written as `"p/q"`, `"p"` or a bare JSON integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)
            .map_err(|_| serde::de::Error::custom("expected a rational string \"p/q\" or an integer"))?
        {
            Raw::Int(n) => Ok(Q(Rational::from_integer(n.into()))),
            Raw::Str(s) => parse_rational(&s).map(Q).map_err(serde::de::Error::custom),
        }
    }
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

pub type RawVector = Vec<Q>;
/// Row-major; matrices act on column vectors.
pub type RawMatrix = Vec<Vec<Q>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<RawAlgebra>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graded: Option<RawGraded>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coring: Option<RawCoring>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub grouplikes: Vec<RawGrouplike>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comodules: Vec<RawComodule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probes: Option<Vec<String>>,
}

/// `products[i][j]` holds the coordinates of `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawAlgebra {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub products: Vec<Vec<RawVector>>,
    pub unit: RawVector,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGraded {
    pub group: RawGroup,
    pub degrees: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RawGroup {
    Cyclic {
        order: usize,
    },
    Klein,
    Table {
        elements: Vec<String>,
        table: Vec<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RawCoring {
    Trivial,
    Graded,
    /// `A ⊗_B A` with `B` spanned by the given vectors.
    Sweedler {
        subalgebra: Vec<RawVector>,
    },
    /// `comult` is given in `C ⊗_ℚ C` coordinates, index `i·dim + j` for `c_i ⊗ c_j`.
    Explicit {
        dim: usize,
        left: Vec<RawMatrix>,
        right: Vec<RawMatrix>,
        comult: RawMatrix,
        counit: RawMatrix,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGrouplike {
    pub name: String,
    pub vector: RawVector,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RawComodule {
    Grouplike {
        name: String,
        grouplike: String,
    },
    Regular {
        name: String,
    },
    /// A graded module; the coaction comes from the grading.
    Graded {
        name: String,
        action: Vec<RawMatrix>,
        degrees: Vec<String>,
    },
    /// `coaction` is given in `M ⊗_ℚ C` coordinates.
    Explicit {
        name: String,
        action: Vec<RawMatrix>,
        coaction: RawMatrix,
    },
}

impl RawComodule {
    pub fn name(&self) -> &str {
        match self {
            RawComodule::Grouplike { name, .. }
            | RawComodule::Regular { name }
            | RawComodule::Graded { name, .. }
            | RawComodule::Explicit { name, .. } => name,
        }
    }
}

/// One problem with the input, located by a JSON path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located {
    pub location: String,
    pub message: String,
}

impl fmt::Display for Located {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct InputError(pub Vec<Located>);

impl InputError {
    pub fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        InputError(vec![Located {
            location: location.into(),
            message: message.into(),
        }])
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

#[derive(Default)]
struct Errors(Vec<Located>);

impl Errors {
    fn push(&mut self, location: impl Into<String>, message: impl fmt::Display) {
        self.0.push(Located {
            location: location.into(),
            message: message.to_string(),
        });
    }
}

fn vector(errs: &mut Errors, path: &str, raw: &[Q], len: usize) -> Option<Vec<Rational>> {
    if raw.len() != len {
        errs.push(path, format!("expected {len} entries, found {}", raw.len()));
        return None;
    }
    Some(raw.iter().map(|q| q.0.clone()).collect())
}

fn matrix(errs: &mut Errors, path: &str, raw: &RawMatrix, rows: usize, cols: usize) -> Option<Matrix> {
    if raw.len() != rows {
        errs.push(path, format!("expected {rows} rows, found {}", raw.len()));
        return None;
    }
    let mut ok = true;
    let mut data = Vec::with_capacity(rows);
    for (r, row) in raw.iter().enumerate() {
        match vector(errs, &format!("{path}[{r}]"), row, cols) {
            Some(v) => data.push(v),
            None => ok = false,
        }
    }
    if !ok {
        return None;
    }
    Some(Matrix::from_fn(rows, cols, |r, c| data[r][c].clone()))
}

fn action(errs: &mut Errors, path: &str, raw: &[RawMatrix], count: usize, dim: usize) -> Option<Vec<Matrix>> {
    if raw.len() != count {
        errs.push(
            path,
            format!(
                "expected one matrix per algebra basis element ({count}), found {}",
                raw.len()
            ),
        );
        return None;
    }
    let mats: Vec<Option<Matrix>> = raw
        .iter()
        .enumerate()
        .map(|(k, m)| matrix(errs, &format!("{path}[{k}]"), m, dim, dim))
        .collect();
    mats.into_iter().collect()
}

/// Infers a module dimension from its first action matrix.
fn action_dim(raw: &[RawMatrix]) -> usize {
    raw.first().map_or(0, Vec::len)
}

#[derive(Clone, Debug)]
pub enum CoringKind {
    Trivial,
    Graded,
    Sweedler,
    Explicit,
}

/// A validated document.  Structures are built eagerly; axioms are not
/// checked here.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub document: Document,
    pub algebra: Option<AlgebraRef>,
    pub graded: Option<GradedAlgebra>,
    pub coring: Option<(CoringKind, Coring)>,
    /// Grouplike candidates, in declaration order; automatic ones first.
    pub grouplikes: Vec<(String, Vec<Rational>)>,
    comodules: BTreeMap<String, Comodule>,
    comodule_order: Vec<String>,
}

pub fn parse_workspace(text: &str) -> Result<Workspace, InputError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let document: Document = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        let location = if path == "." || path.is_empty() {
            format!("line {}, column {}", inner.line(), inner.column())
        } else {
            format!("{path} (line {}, column {})", inner.line(), inner.column())
        };
        let message = inner.to_string();
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        InputError(vec![Located { location, message }])
    })?;
    Workspace::from_document(document)
}

impl Workspace {
    pub fn from_document(document: Document) -> Result<Self, InputError> {
        let mut errs = Errors::default();
        if document.field != "Q" {
            errs.push(
                "field",
                format!("only the rationals \"Q\" are supported, found {:?}", document.field),
            );
        }
        let algebra = document.algebra.as_ref().and_then(|raw| build_algebra(&mut errs, raw));
        let graded = match (&document.graded, &algebra) {
            (Some(raw), Some(a)) => build_graded(&mut errs, raw, a),
            (Some(_), None) => {
                errs.push("graded", "a grading needs an algebra section");
                None
            }
            _ => None,
        };
        let mut grouplikes = Vec::new();
        let coring = match (&document.coring, &algebra) {
            (Some(_), None) => {
                errs.push("coring", "a coring needs an algebra section");
                None
            }
            (None, Some(_)) if graded.is_some() => {
                build_coring(&mut errs, &RawCoring::Graded, &algebra, &graded, &mut grouplikes)
            }
            (Some(raw), Some(_)) => build_coring(&mut errs, raw, &algebra, &graded, &mut grouplikes),
            _ => None,
        };
        for (k, g) in document.grouplikes.iter().enumerate() {
            let path = format!("grouplikes[{k}]");
            let Some((_, c)) = &coring else {
                errs.push(path, "grouplikes need a coring");
                continue;
            };
            if grouplikes.iter().any(|(n, _)| n == &g.name) {
                errs.push(format!("{path}.name"), format!("duplicate grouplike name {:?}", g.name));
                continue;
            }
            if let Some(v) = vector(&mut errs, &format!("{path}.vector"), &g.vector, c.dim()) {
                grouplikes.push((g.name.clone(), v));
            }
        }
        let mut ws = Workspace {
            algebra,
            graded,
            coring,
            grouplikes,
            comodules: BTreeMap::new(),
            comodule_order: Vec::new(),
            document: document.clone(),
        };
        for (k, raw) in document.comodules.iter().enumerate() {
            let path = format!("comodules[{k}]");
            if ws.comodules.contains_key(raw.name()) {
                errs.push(
                    format!("{path}.name"),
                    format!("duplicate comodule name {:?}", raw.name()),
                );
                continue;
            }
            if let Some(m) = ws.build_comodule(&mut errs, &path, raw) {
                ws.comodules.insert(raw.name().to_string(), m);
                ws.comodule_order.push(raw.name().to_string());
            }
        }
        for (sel, names) in [("family", &document.family), ("probes", &document.probes)] {
            for (k, name) in names.iter().flatten().enumerate() {
                if let Err(e) = ws.comodule(name) {
                    errs.push(format!("{sel}[{k}]"), e.0[0].message.clone());
                }
            }
        }
        if let Some(h) = &document.subgroup {
            if let Err(e) = ws.subgroup_indices(h) {
                errs.push("subgroup", e.0[0].message.clone());
            }
        }
        if errs.0.is_empty() {
            Ok(ws)
        } else {
            Err(InputError(errs.0))
        }
    }

    /// `true` when there is nothing to validate.
    pub fn is_empty(&self) -> bool {
        self.algebra.is_none()
    }

    pub fn coring(&self) -> Result<&Coring, InputError> {
        self.coring
            .as_ref()
            .map(|(_, c)| c)
            .ok_or_else(|| InputError::at("coring", "the document defines no coring"))
    }

    pub fn grouplike(&self, name: &str) -> Result<Grouplike, InputError> {
        let c = self.coring()?;
        let (_, v) = self
            .grouplikes
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| InputError::at("grouplikes", format!("unknown grouplike {name:?}")))?;
        Grouplike::new(c, v.clone()).map_err(|e| InputError::at(format!("grouplikes.{name}"), e.to_string()))
    }

    /// Declared comodule names, followed by `[g]A` for every grouplike.
    pub fn comodule_names(&self) -> Vec<String> {
        let mut names = self.comodule_order.clone();
        names.extend(self.grouplikes.iter().map(|(g, _)| format!("[{g}]A")));
        names
    }

    pub fn declared_comodules(&self) -> Vec<(String, Comodule)> {
        self.comodule_order
            .iter()
            .map(|n| (n.clone(), self.comodules[n].clone()))
            .collect()
    }

    /// Resolves a declared comodule, or `[g]A` for a grouplike `g`.
    pub fn comodule(&self, name: &str) -> Result<Comodule, InputError> {
        if let Some(m) = self.comodules.get(name) {
            return Ok(m.clone());
        }
        if let Some(g) = name.strip_prefix('[').and_then(|s| s.strip_suffix("]A")) {
            if self.grouplikes.iter().any(|(n, _)| n == g) {
                let gl = self.grouplike(g)?;
                return comodule_from_grouplike(self.coring()?, &gl)
                    .map_err(|e| InputError::at(format!("grouplikes.{g}"), e.to_string()));
            }
        }
        Err(InputError::at("comodules", format!("unknown comodule {name:?}")))
    }

    pub fn subgroup_indices(&self, names: &[String]) -> Result<Vec<usize>, InputError> {
        let ga = self
            .graded
            .as_ref()
            .ok_or_else(|| InputError::at("subgroup", "a subgroup selector needs a graded section"))?;
        if !matches!(self.coring, Some((CoringKind::Graded, _))) {
            return Err(InputError::at(
                "subgroup",
                "a subgroup selector needs the graded coring",
            ));
        }
        names
            .iter()
            .map(|n| {
                ga.group
                    .index_of(n)
                    .ok_or_else(|| InputError::at("subgroup", format!("unknown group element {n:?}")))
            })
            .collect()
    }

    fn build_comodule(&self, errs: &mut Errors, path: &str, raw: &RawComodule) -> Option<Comodule> {
        let Some((_, c)) = &self.coring else {
            errs.push(path, "comodules need a coring");
            return None;
        };
        let a = self.algebra.as_ref()?;
        let n = a.dim();
        let built = match raw {
            RawComodule::Grouplike { grouplike, .. } => {
                if !self.grouplikes.iter().any(|(g, _)| g == grouplike) {
                    errs.push(format!("{path}.grouplike"), format!("unknown grouplike {grouplike:?}"));
                    return None;
                }
                match self.grouplike(grouplike) {
                    Ok(g) => comodule_from_grouplike(c, &g),
                    Err(e) => {
                        errs.push(format!("{path}.grouplike"), e.0[0].message.clone());
                        return None;
                    }
                }
            }
            RawComodule::Regular { .. } => Comodule::regular(c),
            RawComodule::Graded {
                action: raw_action,
                degrees,
                ..
            } => {
                let Some(ga) = &self.graded else {
                    errs.push(path, "a graded comodule needs a graded section");
                    return None;
                };
                if !matches!(self.coring, Some((CoringKind::Graded, _))) {
                    errs.push(path, "a graded comodule needs the graded coring");
                    return None;
                }
                let dim = action_dim(raw_action);
                let act = action(errs, &format!("{path}.action"), raw_action, n, dim)?;
                let degs = group_elements(errs, &format!("{path}.degrees"), &ga.group, degrees)?;
                let gm = RightModule::new(a.clone(), dim, act).and_then(|m| GradedModule::new(ga, m, degs));
                gm.and_then(|gm| graded_to_comodule(ga, c, &gm))
            }
            RawComodule::Explicit {
                action: raw_action,
                coaction,
                ..
            } => {
                let dim = action_dim(raw_action);
                let act = action(errs, &format!("{path}.action"), raw_action, n, dim)?;
                let co = matrix(errs, &format!("{path}.coaction"), coaction, dim * c.dim(), dim)?;
                RightModule::new(a.clone(), dim, act).and_then(|m| Comodule::from_ambient(c, m, &co))
            }
        };
        match built {
            Ok(m) => Some(m),
            Err(e) => {
                errs.push(path, e);
                None
            }
        }
    }
}

fn group_elements(errs: &mut Errors, path: &str, group: &Group, names: &[String]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(names.len());
    let mut ok = true;
    for (k, n) in names.iter().enumerate() {
        match group.index_of(n) {
            Some(i) => out.push(i),
            None => {
                errs.push(format!("{path}[{k}]"), format!("unknown group element {n:?}"));
                ok = false;
            }
        }
    }
    ok.then_some(out)
}

fn build_algebra(errs: &mut Errors, raw: &RawAlgebra) -> Option<AlgebraRef> {
    let dim = raw.products.len();
    if dim == 0 {
        errs.push("algebra.products", "the algebra must have positive dimension");
        return None;
    }
    if !raw.basis.is_empty() && raw.basis.len() != dim {
        errs.push(
            "algebra.basis",
            format!("expected {dim} names, found {}", raw.basis.len()),
        );
    }
    let mut products = Vec::with_capacity(dim * dim);
    let mut ok = true;
    for (i, row) in raw.products.iter().enumerate() {
        if row.len() != dim {
            errs.push(
                format!("algebra.products[{i}]"),
                format!("expected {dim} products, found {}", row.len()),
            );
            ok = false;
            continue;
        }
        for (j, p) in row.iter().enumerate() {
            match vector(errs, &format!("algebra.products[{i}][{j}]"), p, dim) {
                Some(v) => products.push(v),
                None => ok = false,
            }
        }
    }
    let unit = vector(errs, "algebra.unit", &raw.unit, dim);
    if !ok {
        return None;
    }
    match Algebra::from_products(dim, products, unit?) {
        Ok(a) => Some(Arc::new(a)),
        Err(e) => {
            errs.push("algebra", e);
            None
        }
    }
}

fn build_graded(errs: &mut Errors, raw: &RawGraded, a: &AlgebraRef) -> Option<GradedAlgebra> {
    let group = match &raw.group {
        RawGroup::Cyclic { order: 0 } => {
            errs.push("graded.group.order", "the group order must be positive");
            return None;
        }
        RawGroup::Cyclic { order } => Group::cyclic(*order),
        RawGroup::Klein => Group::klein(),
        RawGroup::Table { elements, table } => {
            let index = |n: &String| elements.iter().position(|e| e == n);
            let mut rows = Vec::with_capacity(table.len());
            for (r, row) in table.iter().enumerate() {
                let mut out = Vec::with_capacity(row.len());
                for (c, n) in row.iter().enumerate() {
                    match index(n) {
                        Some(i) => out.push(i),
                        None => {
                            errs.push(
                                format!("graded.group.table[{r}][{c}]"),
                                format!("unknown group element {n:?}"),
                            );
                            return None;
                        }
                    }
                }
                rows.push(out);
            }
            match Group::new(elements.clone(), rows) {
                Ok(g) => g,
                Err(e) => {
                    errs.push("graded.group", e);
                    return None;
                }
            }
        }
    };
    if raw.degrees.len() != a.dim() {
        errs.push(
            "graded.degrees",
            format!("expected {} degrees, found {}", a.dim(), raw.degrees.len()),
        );
        return None;
    }
    let degrees = group_elements(errs, "graded.degrees", &group, &raw.degrees)?;
    match GradedAlgebra::new(a.clone(), group, degrees) {
        Ok(ga) => Some(ga),
        Err(e) => {
            errs.push("graded", e);
            None
        }
    }
}

fn build_coring(
    errs: &mut Errors,
    raw: &RawCoring,
    algebra: &Option<AlgebraRef>,
    graded: &Option<GradedAlgebra>,
    grouplikes: &mut Vec<(String, Vec<Rational>)>,
) -> Option<(CoringKind, Coring)> {
    let a = algebra.as_ref()?;
    let n = a.dim();
    let result = match raw {
        RawCoring::Trivial => Coring::trivial(a).map(|c| {
            grouplikes.push(("1".into(), a.unit().to_vec()));
            (CoringKind::Trivial, c)
        }),
        RawCoring::Graded => {
            let Some(ga) = graded else {
                errs.push("coring", "the graded coring needs a graded section");
                return None;
            };
            graded_coring(ga).map(|(c, gs)| {
                for (name, g) in ga.group.names.iter().zip(gs) {
                    grouplikes.push((name.clone(), g.vector));
                }
                (CoringKind::Graded, c)
            })
        }
        RawCoring::Sweedler { subalgebra } => {
            let vecs: Vec<Option<Vec<Rational>>> = subalgebra
                .iter()
                .enumerate()
                .map(|(k, v)| vector(errs, &format!("coring.subalgebra[{k}]"), v, n))
                .collect();
            let vecs: Vec<Vec<Rational>> = vecs.into_iter().collect::<Option<_>>()?;
            let b = Subspace::span(n, &vecs);
            sweedler_coring(a, &b).map(|sw| {
                grouplikes.push(("1".into(), sw.grouplike.vector.clone()));
                (CoringKind::Sweedler, sw.coring)
            })
        }
        RawCoring::Explicit {
            dim,
            left,
            right,
            comult,
            counit,
        } => {
            let l = action(errs, "coring.left", left, n, *dim);
            let r = action(errs, "coring.right", right, n, *dim);
            let d = matrix(errs, "coring.comult", comult, dim * dim, *dim);
            let e = matrix(errs, "coring.counit", counit, n, *dim);
            let (l, r, d, e) = (l?, r?, d?, e?);
            Bimodule::new(a.clone(), a.clone(), *dim, l, r)
                .and_then(|bm| Coring::from_ambient(bm, &d, e))
                .map(|c| (CoringKind::Explicit, c))
        }
    };
    match result {
        Ok(c) => Some(c),
        Err(e) => {
            errs.push("coring", e);
            None
        }
    }
}

fn raw_vector(v: &[Rational]) -> RawVector {
    v.iter().cloned().map(Q).collect()
}

fn raw_matrix(m: &Matrix) -> RawMatrix {
    m.to_rows().iter().map(|r| raw_vector(r)).collect()
}

pub fn raw_algebra(a: &Algebra) -> RawAlgebra {
    let n = a.dim();
    RawAlgebra {
        basis: Vec::new(),
        products: (0..n)
            .map(|i| (0..n).map(|j| raw_vector(a.basis_product(i, j))).collect())
            .collect(),
        unit: raw_vector(a.unit()),
    }
}

/// The explicit section describing `c`, with `Δ` lifted to `C ⊗_ℚ C`.
pub fn raw_explicit_coring(c: &Coring) -> RawCoring {
    let d = c.dim();
    let square = c.square();
    let cols: Vec<Vec<Rational>> = (0..d)
        .map(|j| {
            let mut v = zero_vec(d * d);
            for (idx, x) in square.lift_terms(&c.comult.column(j)) {
                v[idx[0] * d + idx[1]] += x;
            }
            v
        })
        .collect();
    RawCoring::Explicit {
        dim: d,
        left: c.bimodule.left_action.iter().map(raw_matrix).collect(),
        right: c.bimodule.right_action.iter().map(raw_matrix).collect(),
        comult: raw_matrix(&Matrix::from_columns(d * d, &cols)),
        counit: raw_matrix(&c.counit),
    }
}

/// A document holding just `c` and its algebra.
pub fn coring_document(name: &str, c: &Coring) -> Document {
    Document {
        field: "Q".into(),
        name: Some(name.into()),
        algebra: Some(raw_algebra(c.algebra())),
        graded: None,
        coring: Some(raw_explicit_coring(c)),
        grouplikes: Vec::new(),
        comodules: Vec::new(),
        family: None,
        subgroup: None,
        probes: None,
    }
}
