//! Corings, comodules, grouplikes, comodule morphisms, cotensor products and
//! Sweedler corings.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{hom_right, same_ring, Algebra, AlgebraRef, BalancedTensor, Bimodule, LeftModule, RightModule};
use crate::error::{Error, Result};
use crate::exactlin::{
    axpy, kernel_basis, kernel_of_columns, quotient_space, sparse_to_dense, unit_vec, zero_vec, MapSpace, Matrix,
    QuotientSpace, Rational, Subspace,
};
use crate::report::ValidationReport;

/// An `A`-coring: bimodule `C` with `Δ: C → C ⊗_A C` and `ε: C → A`.
#[derive(Clone, Debug)]
pub struct Coring {
    pub bimodule: Bimodule,
    square: BalancedTensor,
    pub comult: Matrix,
    pub counit: Matrix,
}

impl Coring {
    pub fn new(bimodule: Bimodule, comult: Matrix, counit: Matrix) -> Result<Self> {
        if !same_ring(&bimodule.left, &bimodule.right) {
            return Err(Error::RingMismatch(
                "a coring needs the same algebra on both sides".into(),
            ));
        }
        let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
        let n = bimodule.left.dim();
        if (comult.rows(), comult.cols()) != (square.dim(), bimodule.dim) {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication is {}x{}, expected {}x{}",
                comult.rows(),
                comult.cols(),
                square.dim(),
                bimodule.dim
            )));
        }
        if (counit.rows(), counit.cols()) != (n, bimodule.dim) {
            return Err(Error::DimensionMismatch(format!(
                "counit is {}x{}, expected {n}x{}",
                counit.rows(),
                counit.cols(),
                bimodule.dim
            )));
        }
        Ok(Coring {
            bimodule,
            square,
            comult,
            counit,
        })
    }

    /// Builds a coring from a comultiplication given on the ambient space
    /// `C ⊗_ℚ C` (one column per basis element of `C`).
    pub fn from_ambient(bimodule: Bimodule, ambient_comult: &Matrix, counit: Matrix) -> Result<Self> {
        let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
        if (ambient_comult.rows(), ambient_comult.cols()) != (square.ambient_dim(), bimodule.dim) {
            return Err(Error::DimensionMismatch(format!(
                "ambient comultiplication is {}x{}, expected {}x{}",
                ambient_comult.rows(),
                ambient_comult.cols(),
                square.ambient_dim(),
                bimodule.dim
            )));
        }
        let cols: Vec<Vec<Rational>> = (0..bimodule.dim)
            .map(|j| square.project(&ambient_comult.column(j)))
            .collect();
        let comult = Matrix::from_columns(square.dim(), &cols);
        Self::new(bimodule, comult, counit)
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.bimodule.left
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim
    }

    pub fn square(&self) -> &BalancedTensor {
        &self.square
    }

    pub fn triple(&self) -> Result<BalancedTensor> {
        BalancedTensor::new(vec![
            self.bimodule.clone(),
            self.bimodule.clone(),
            self.bimodule.clone(),
        ])
    }

    /// `Δ(c)` for a vector `c` of `C`.
    pub fn delta(&self, c: &[Rational]) -> Vec<Rational> {
        self.comult.mul_vec(c)
    }

    pub fn epsilon(&self, c: &[Rational]) -> Vec<Rational> {
        self.counit.mul_vec(c)
    }

    /// The trivial coring `A` with `Δ(a) = a ⊗ 1` and `ε = id`.
    pub fn trivial(a: &AlgebraRef) -> Result<Self> {
        let bimodule = Bimodule::regular(a);
        let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
        let cols: Vec<Vec<Rational>> = (0..a.dim())
            .map(|i| square.project_pure(&[unit_vec(a.dim(), i), a.unit().to_vec()]))
            .collect();
        let comult = Matrix::from_columns(square.dim(), &cols);
        Self::new(bimodule, comult, Matrix::identity(a.dim()))
    }

    /// Coproduct of corings over the same algebra.
    pub fn direct_sum(corings: &[Coring]) -> Result<Self> {
        let bimodule = Bimodule::direct_sum(&corings.iter().map(|c| c.bimodule.clone()).collect::<Vec<_>>())?;
        let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
        let mut cols = Vec::with_capacity(bimodule.dim);
        let mut off = 0;
        for c in corings {
            for i in 0..c.dim() {
                let terms: Vec<(Vec<usize>, Rational)> = c
                    .square
                    .lift_terms(&c.comult.column(i))
                    .into_iter()
                    .map(|(idx, x)| (vec![idx[0] + off, idx[1] + off], x))
                    .collect();
                cols.push(square.project_terms(&terms));
            }
            off += c.dim();
        }
        let comult = Matrix::from_columns(square.dim(), &cols);
        let counit = corings
            .iter()
            .map(|c| c.counit.clone())
            .reduce(|a, b| a.hstack(&b))
            .ok_or_else(|| Error::InvalidStructure("empty coproduct".into()))?;
        Self::new(bimodule, comult, counit)
    }

    /// `C / J` for a sub-bimodule `J`; the coideal property is not assumed
    /// here, see [`coideal_certificate`].
    pub fn quotient(&self, j: &Subspace) -> Result<(Coring, QuotientSpace)> {
        for (name, mats) in [
            ("left", &self.bimodule.left_action),
            ("right", &self.bimodule.right_action),
        ] {
            for v in j.basis_vectors() {
                if mats.iter().any(|m| !j.contains(&m.mul_vec(&v))) {
                    return Err(Error::InvalidStructure(format!("not closed under the {name} action")));
                }
            }
        }
        let q = quotient_space(self.dim(), j)?;
        let free = q.free_columns().to_vec();
        let induce = |mats: &[Matrix]| -> Vec<Matrix> {
            mats.iter()
                .map(|m| {
                    let cols: Vec<Vec<Rational>> = free.iter().map(|&f| q.project(&m.column(f))).collect();
                    Matrix::from_columns(q.dim(), &cols)
                })
                .collect()
        };
        let bimodule = Bimodule::new(
            self.bimodule.left.clone(),
            self.bimodule.right.clone(),
            q.dim(),
            induce(&self.bimodule.left_action),
            induce(&self.bimodule.right_action),
        )?;
        let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
        let pcol = |j: usize| sparse_to_dense(q.dim(), &q.projection_column(j));
        let cols: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut out = zero_vec(square.dim());
                for (idx, x) in self.square.lift_terms(&self.comult.column(f)) {
                    let v = square.project_pure(&[pcol(idx[0]), pcol(idx[1])]);
                    axpy(&mut out, &x, &v);
                }
                out
            })
            .collect();
        let comult = Matrix::from_columns(square.dim(), &cols);
        let counit = Matrix::from_columns(
            self.algebra().dim(),
            &free.iter().map(|&f| self.counit.column(f)).collect::<Vec<_>>(),
        );
        Ok((Coring::new(bimodule, comult, counit)?, q))
    }

    /// The opposite coring over `A^op`, with the twisted comultiplication.
    pub fn opposite(&self) -> Result<Coring> {
        let op: AlgebraRef = Arc::new(self.algebra().opposite());
        let bimodule = Bimodule::new(
            op.clone(),
            op,
            self.dim(),
            self.bimodule.right_action.clone(),
            self.bimodule.left_action.clone(),
        )?;
        let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|i| {
                let terms: Vec<(Vec<usize>, Rational)> = self
                    .square
                    .lift_terms(&self.comult.column(i))
                    .into_iter()
                    .map(|(idx, x)| (vec![idx[1], idx[0]], x))
                    .collect();
                square.project_terms(&terms)
            })
            .collect();
        let comult = Matrix::from_columns(square.dim(), &cols);
        Coring::new(bimodule, comult, self.counit.clone())
    }
}

fn first_diff_column(a: &Matrix, b: &Matrix) -> Option<usize> {
    (0..a.cols()).find(|&j| a.column(j) != b.column(j))
}

fn require_equal(report: &mut ValidationReport, lhs: &Matrix, rhs: &Matrix, axiom: &str, what: &str) {
    if let Some(j) = first_diff_column(lhs, rhs) {
        report.fail(axiom, format!("{what} basis vector {j}"));
    }
}

/// `X ⊗ f` for `f: W → Y ⊗ Z`, from `X ⊗ W` into `X ⊗ Y ⊗ Z`.
fn id_tensor(target: &BalancedTensor, source: &BalancedTensor, inner: &BalancedTensor, f: &Matrix) -> Matrix {
    let cols: Vec<Vec<Rational>> = (0..source.dim())
        .map(|b| {
            let idx = source.multi_index(b);
            let terms: Vec<(Vec<usize>, Rational)> = inner
                .lift_terms(&f.column(idx[1]))
                .into_iter()
                .map(|(inner_idx, x)| {
                    let mut v = vec![idx[0]];
                    v.extend(inner_idx);
                    (v, x)
                })
                .collect();
            target.project_terms(&terms)
        })
        .collect();
    Matrix::from_columns(target.dim(), &cols)
}

/// `f ⊗ Z` for `f: W → X ⊗ Y` (in the first two levels of `target`).
fn tensor_id(target: &BalancedTensor, source: &BalancedTensor, f: &Matrix) -> Matrix {
    let last = source.factors()[1].dim;
    let cols: Vec<Vec<Rational>> = (0..source.dim())
        .map(|b| {
            let idx = source.multi_index(b);
            target.extend(2, &f.column(idx[0]), &unit_vec(last, idx[1]))
        })
        .collect();
    Matrix::from_columns(target.dim(), &cols)
}

pub fn check_coring(c: &Coring) -> ValidationReport {
    let mut report = ValidationReport::new();
    let a = c.algebra();
    let n = a.dim();
    let sq = &c.square;
    for i in 0..n {
        require_equal(
            &mut report,
            &(&sq.left_action()[i] * &c.comult),
            &(&c.comult * &c.bimodule.left_action[i]),
            "comultiplication left linearity",
            &format!("algebra element {i},"),
        );
        require_equal(
            &mut report,
            &(&sq.right_action()[i] * &c.comult),
            &(&c.comult * &c.bimodule.right_action[i]),
            "comultiplication right linearity",
            &format!("algebra element {i},"),
        );
        require_equal(
            &mut report,
            &(a.left_regular(i) * &c.counit),
            &(&c.counit * &c.bimodule.left_action[i]),
            "counit left linearity",
            &format!("algebra element {i},"),
        );
        require_equal(
            &mut report,
            &(a.right_regular(i) * &c.counit),
            &(&c.counit * &c.bimodule.right_action[i]),
            "counit right linearity",
            &format!("algebra element {i},"),
        );
    }
    let triple = match c.triple() {
        Ok(t) => t,
        Err(e) => {
            report.fail("coassociativity", format!("triple tensor unavailable: {e}"));
            return report;
        }
    };
    let c_delta = id_tensor(&triple, sq, sq, &c.comult);
    let delta_c = tensor_id(&triple, sq, &c.comult);
    require_equal(
        &mut report,
        &(&c_delta * &c.comult),
        &(&delta_c * &c.comult),
        "coassociativity",
        "coring",
    );
    let (eps_c, c_eps) = counit_maps(c);
    let id = Matrix::identity(c.dim());
    require_equal(&mut report, &(&eps_c * &c.comult), &id, "left counit", "coring");
    require_equal(&mut report, &(&c_eps * &c.comult), &id, "right counit", "coring");
    report
}

/// `(ε ⊗ C)` and `(C ⊗ ε)` as maps `C ⊗_A C → C`.
fn counit_maps(c: &Coring) -> (Matrix, Matrix) {
    let sq = &c.square;
    let mut eps_c = Matrix::zeros(c.dim(), sq.dim());
    let mut c_eps = Matrix::zeros(c.dim(), sq.dim());
    for b in 0..sq.dim() {
        let idx = sq.multi_index(b);
        let (i, j) = (idx[0], idx[1]);
        let mut left = zero_vec(c.dim());
        let mut right = zero_vec(c.dim());
        for k in 0..c.algebra().dim() {
            let x = &c.counit[(k, i)];
            if !x.is_zero() {
                axpy(&mut left, x, &c.bimodule.left_action[k].column(j));
            }
            let y = &c.counit[(k, j)];
            if !y.is_zero() {
                axpy(&mut right, y, &c.bimodule.right_action[k].column(i));
            }
        }
        for r in 0..c.dim() {
            eps_c[(r, b)] = left[r].clone();
            c_eps[(r, b)] = right[r].clone();
        }
    }
    (eps_c, c_eps)
}

/// Whether `f: C → D` is a homomorphism of corings.
pub fn is_coring_hom(c: &Coring, d: &Coring, f: &Matrix) -> ValidationReport {
    let mut report = ValidationReport::new();
    if (f.rows(), f.cols()) != (d.dim(), c.dim()) {
        report.fail(
            "shape",
            format!("map is {}x{}, expected {}x{}", f.rows(), f.cols(), d.dim(), c.dim()),
        );
        return report;
    }
    report.require(c.bimodule.is_bimodule_map(&d.bimodule, f), "bimodule map", || {
        "actions not preserved".into()
    });
    require_equal(&mut report, &(&d.counit * f), &c.counit, "counit preserved", "source");
    let ff = BalancedTensor::tensor_map(&c.square, &d.square, &[f.clone(), f.clone()]);
    require_equal(
        &mut report,
        &(&d.comult * f),
        &(&ff * &c.comult),
        "comultiplication preserved",
        "source",
    );
    report
}

// ---------------------------------------------------------------------------
// Comodules

/// A right comodule: right `A`-module `M` with `ρ: M → M ⊗_A C`.
#[derive(Clone, Debug)]
pub struct Comodule {
    pub module: RightModule,
    pub coaction: Matrix,
    tensor: BalancedTensor,
}

impl Comodule {
    pub fn new(coring: &Coring, module: RightModule, coaction: Matrix) -> Result<Self> {
        let tensor = BalancedTensor::new(vec![module.as_bimodule(), coring.bimodule.clone()])?;
        if (coaction.rows(), coaction.cols()) != (tensor.dim(), module.dim) {
            return Err(Error::DimensionMismatch(format!(
                "coaction is {}x{}, expected {}x{}",
                coaction.rows(),
                coaction.cols(),
                tensor.dim(),
                module.dim
            )));
        }
        Ok(Comodule {
            module,
            coaction,
            tensor,
        })
    }

    /// Coaction given in ambient `M ⊗_ℚ C` coordinates.
    pub fn from_ambient(coring: &Coring, module: RightModule, ambient: &Matrix) -> Result<Self> {
        let tensor = BalancedTensor::new(vec![module.as_bimodule(), coring.bimodule.clone()])?;
        if (ambient.rows(), ambient.cols()) != (tensor.ambient_dim(), module.dim) {
            return Err(Error::DimensionMismatch(format!(
                "ambient coaction is {}x{}, expected {}x{}",
                ambient.rows(),
                ambient.cols(),
                tensor.ambient_dim(),
                module.dim
            )));
        }
        let cols: Vec<Vec<Rational>> = (0..module.dim).map(|j| tensor.project(&ambient.column(j))).collect();
        let coaction = Matrix::from_columns(tensor.dim(), &cols);
        Self::new(coring, module, coaction)
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// `M ⊗_A C`.
    pub fn tensor(&self) -> &BalancedTensor {
        &self.tensor
    }

    /// `C` as a right comodule over itself.
    pub fn regular(coring: &Coring) -> Result<Self> {
        Self::new(coring, coring.bimodule.right_module(), coring.comult.clone())
    }

    pub fn direct_sum(coring: &Coring, members: &[Comodule]) -> Result<Self> {
        let module = RightModule::direct_sum(&members.iter().map(|m| m.module.clone()).collect::<Vec<_>>())?;
        let tensor = BalancedTensor::new(vec![module.as_bimodule(), coring.bimodule.clone()])?;
        let mut cols = Vec::with_capacity(module.dim);
        let mut off = 0;
        for m in members {
            for i in 0..m.dim() {
                let terms: Vec<(Vec<usize>, Rational)> = m
                    .tensor
                    .lift_terms(&m.coaction.column(i))
                    .into_iter()
                    .map(|(idx, x)| (vec![idx[0] + off, idx[1]], x))
                    .collect();
                cols.push(tensor.project_terms(&terms));
            }
            off += m.dim();
        }
        let coaction = Matrix::from_columns(tensor.dim(), &cols);
        Self::new(coring, module, coaction)
    }

    /// `f ⊗ C: M ⊗_A C → N ⊗_A C` for a right-linear `f: M → N`.
    pub fn tensor_map_to(&self, other: &Comodule, f: &Matrix) -> Matrix {
        let c_dim = self.tensor.factors()[1].dim;
        BalancedTensor::tensor_map(&self.tensor, &other.tensor, &[f.clone(), Matrix::identity(c_dim)])
    }

    /// `(f ⊗ C)ρ_M − ρ_N f`.
    pub fn colinearity_defect(&self, other: &Comodule, f: &Matrix) -> Matrix {
        (&self.tensor_map_to(other, f) * &self.coaction).sub(&(&other.coaction * f))
    }
}

pub fn check_comodule(c: &Coring, m: &Comodule) -> ValidationReport {
    let mut report = ValidationReport::new();
    if !same_ring(&m.module.algebra, c.algebra()) {
        report.fail(
            "same algebra",
            "module and coring are over different algebras".to_string(),
        );
        return report;
    }
    let mc = &m.tensor;
    for i in 0..c.algebra().dim() {
        require_equal(
            &mut report,
            &(&mc.right_action()[i] * &m.coaction),
            &(&m.coaction * &m.module.action[i]),
            "coaction right linearity",
            &format!("algebra element {i},"),
        );
    }
    let mcc = match BalancedTensor::new(vec![m.module.as_bimodule(), c.bimodule.clone(), c.bimodule.clone()]) {
        Ok(t) => t,
        Err(e) => {
            report.fail("coassociativity", format!("tensor unavailable: {e}"));
            return report;
        }
    };
    let m_delta = id_tensor(&mcc, mc, c.square(), &c.comult);
    let rho_c = tensor_id(&mcc, mc, &m.coaction);
    require_equal(
        &mut report,
        &(&m_delta * &m.coaction),
        &(&rho_c * &m.coaction),
        "coaction coassociativity",
        "module",
    );
    let mut m_eps = Matrix::zeros(m.dim(), mc.dim());
    for b in 0..mc.dim() {
        let idx = mc.multi_index(b);
        let mut col = zero_vec(m.dim());
        for k in 0..c.algebra().dim() {
            let x = &c.counit[(k, idx[1])];
            if !x.is_zero() {
                axpy(&mut col, x, &m.module.action[k].column(idx[0]));
            }
        }
        for r in 0..m.dim() {
            m_eps[(r, b)] = col[r].clone();
        }
    }
    require_equal(
        &mut report,
        &(&m_eps * &m.coaction),
        &Matrix::identity(m.dim()),
        "coaction counit",
        "module",
    );
    report
}

/// A left comodule: left `A`-module `N` with `λ: N → C ⊗_A N`.
#[derive(Clone, Debug)]
pub struct LeftComodule {
    pub module: LeftModule,
    pub coaction: Matrix,
    tensor: BalancedTensor,
}

impl LeftComodule {
    pub fn new(coring: &Coring, module: LeftModule, coaction: Matrix) -> Result<Self> {
        let tensor = BalancedTensor::new(vec![coring.bimodule.clone(), module.as_bimodule()])?;
        if (coaction.rows(), coaction.cols()) != (tensor.dim(), module.dim) {
            return Err(Error::DimensionMismatch(format!(
                "left coaction is {}x{}, expected {}x{}",
                coaction.rows(),
                coaction.cols(),
                tensor.dim(),
                module.dim
            )));
        }
        Ok(LeftComodule {
            module,
            coaction,
            tensor,
        })
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn tensor(&self) -> &BalancedTensor {
        &self.tensor
    }

    /// `C` as a left comodule over itself.
    pub fn regular(coring: &Coring) -> Result<Self> {
        Self::new(coring, coring.bimodule.left_module(), coring.comult.clone())
    }

    /// The same data as a right comodule over the opposite coring.
    pub fn to_opposite(&self, op: &Coring) -> Result<Comodule> {
        let module = RightModule::new(op.algebra().clone(), self.dim(), self.module.action.clone())?;
        let target = BalancedTensor::new(vec![module.as_bimodule(), op.bimodule.clone()])?;
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|j| {
                let terms: Vec<(Vec<usize>, Rational)> = self
                    .tensor
                    .lift_terms(&self.coaction.column(j))
                    .into_iter()
                    .map(|(idx, x)| (vec![idx[1], idx[0]], x))
                    .collect();
                target.project_terms(&terms)
            })
            .collect();
        Comodule::new(op, module, Matrix::from_columns(target.dim(), &cols))
    }
}

/// Left comodule axioms, checked as right comodule axioms over `C^op`.
pub fn check_left_comodule(c: &Coring, n: &LeftComodule) -> ValidationReport {
    let checked = c
        .opposite()
        .and_then(|op| n.to_opposite(&op).map(|m| check_comodule(&op, &m)));
    match checked {
        Ok(r) => r,
        Err(e) => {
            let mut report = ValidationReport::new();
            report.fail("left comodule", e.to_string());
            report
        }
    }
}

/// Basis of `Hom^C(M, N)`: right-linear maps commuting with the coactions.
pub fn comodule_hom(c: &Coring, m: &Comodule, n: &Comodule) -> Result<MapSpace> {
    let _ = c;
    let linear = hom_right(&m.module, &n.module)?;
    let defects: Vec<Vec<Rational>> = linear
        .basis_maps()
        .iter()
        .map(|f| m.colinearity_defect(n, f).vectorize())
        .collect();
    let coords = kernel_of_columns(n.tensor.dim() * m.dim(), &defects);
    Ok(linear.restrict(&coords))
}

/// Whether the images of all comodule maps from the family span `M`.
pub fn is_generated_by(c: &Coring, m: &Comodule, family: &[Comodule]) -> Result<bool> {
    Ok(generated_part(c, m, family)?.is_full())
}

/// Sum of the images of all comodule maps `P → M`, `P` in the family.
pub fn generated_part(c: &Coring, m: &Comodule, family: &[Comodule]) -> Result<Subspace> {
    let mut span = Subspace::zero(m.dim());
    for p in family {
        for f in comodule_hom(c, p, m)?.basis_maps() {
            span = span.sum(&Subspace::column_space(&f));
        }
    }
    Ok(span)
}

// ---------------------------------------------------------------------------
// Grouplikes

pub fn is_grouplike(c: &Coring, g: &[Rational]) -> bool {
    g.len() == c.dim()
        && c.delta(g) == c.square.project_pure(&[g.to_vec(), g.to_vec()])
        && c.epsilon(g) == c.algebra().unit()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grouplike {
    pub vector: Vec<Rational>,
}

impl Grouplike {
    pub fn new(c: &Coring, vector: Vec<Rational>) -> Result<Self> {
        if !is_grouplike(c, &vector) {
            return Err(Error::NotGrouplike("Δ(g) ≠ g ⊗ g or ε(g) ≠ 1".into()));
        }
        Ok(Grouplike { vector })
    }
}

/// `[g]A`: the regular right module with `ρ(a) = 1 ⊗ g·a`.
pub fn comodule_from_grouplike(c: &Coring, g: &Grouplike) -> Result<Comodule> {
    if !is_grouplike(c, &g.vector) {
        return Err(Error::NotGrouplike("Δ(g) ≠ g ⊗ g or ε(g) ≠ 1".into()));
    }
    let a = c.algebra();
    let module = RightModule::regular(a);
    let tensor = BalancedTensor::new(vec![module.as_bimodule(), c.bimodule.clone()])?;
    let cols: Vec<Vec<Rational>> = (0..a.dim())
        .map(|i| tensor.project_pure(&[a.unit().to_vec(), c.bimodule.right_action[i].mul_vec(&g.vector)]))
        .collect();
    Comodule::new(c, module, Matrix::from_columns(tensor.dim(), &cols))
}

/// `A[g]`: the regular left module with `λ(a) = a·g ⊗ 1`.
pub fn left_comodule_from_grouplike(c: &Coring, g: &Grouplike) -> Result<LeftComodule> {
    if !is_grouplike(c, &g.vector) {
        return Err(Error::NotGrouplike("Δ(g) ≠ g ⊗ g or ε(g) ≠ 1".into()));
    }
    let a = c.algebra();
    let module = LeftModule::regular(a);
    let tensor = BalancedTensor::new(vec![c.bimodule.clone(), module.as_bimodule()])?;
    let cols: Vec<Vec<Rational>> = (0..a.dim())
        .map(|i| tensor.project_pure(&[c.bimodule.left_action[i].mul_vec(&g.vector), a.unit().to_vec()]))
        .collect();
    LeftComodule::new(c, module, Matrix::from_columns(tensor.dim(), &cols))
}

/// `A_{g,h} = {b : h·b = b·g}` together with `Hom^C([g]A, [h]A)`.
#[derive(Clone, Debug)]
pub struct GrouplikeHom {
    pub subspace: Subspace,
    pub homs: MapSpace,
    /// `f ↦ f(1)` is a bijection from `homs` onto `subspace`.
    pub identified: bool,
}

pub fn grouplike_hom_ring(c: &Coring, g: &Grouplike, h: &Grouplike) -> Result<GrouplikeHom> {
    let a = c.algebra();
    let columns: Vec<Vec<Rational>> = (0..a.dim())
        .map(|i| {
            let hb = c.bimodule.right_action[i].mul_vec(&h.vector);
            let bg = c.bimodule.left_action[i].mul_vec(&g.vector);
            crate::exactlin::sub_vec(&hb, &bg)
        })
        .collect();
    let subspace = kernel_of_columns(c.dim(), &columns);
    let homs = comodule_hom(c, &comodule_from_grouplike(c, g)?, &comodule_from_grouplike(c, h)?)?;
    let images: Vec<Vec<Rational>> = homs.basis_maps().iter().map(|f| f.mul_vec(a.unit())).collect();
    let image = Subspace::span(a.dim(), &images);
    let identified = image == subspace && homs.dim() == subspace.dim();
    Ok(GrouplikeHom {
        subspace,
        homs,
        identified,
    })
}

// ---------------------------------------------------------------------------
// Sweedler coring and cotensor products

#[derive(Clone, Debug)]
pub struct SweedlerCoring {
    pub coring: Coring,
    pub subalgebra: AlgebraRef,
    /// The ring extension `B ⊆ A` as a subspace of `A`.
    pub inclusion: Subspace,
    /// Grouplike `1 ⊗ 1`.
    pub grouplike: Grouplike,
}

/// `A ⊗_B A` with `Δ(a ⊗ a') = (a ⊗ 1) ⊗ (1 ⊗ a')` and `ε(a ⊗ a') = aa'`.
pub fn sweedler_coring(a: &AlgebraRef, b: &Subspace) -> Result<SweedlerCoring> {
    let sub: AlgebraRef = Arc::new(a.subalgebra(b)?);
    let basis = b.basis_vectors();
    let d = a.dim();
    let left_factor = Bimodule::new(
        a.clone(),
        sub.clone(),
        d,
        (0..d).map(|i| a.left_regular(i).clone()).collect(),
        basis.iter().map(|x| a.right_mult(x)).collect(),
    )?;
    let right_factor = Bimodule::new(
        sub.clone(),
        a.clone(),
        d,
        basis.iter().map(|x| a.left_mult(x)).collect(),
        (0..d).map(|i| a.right_regular(i).clone()).collect(),
    )?;
    let t = BalancedTensor::new(vec![left_factor, right_factor])?;
    let bimodule = t.as_bimodule();
    let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
    let one = a.unit().to_vec();
    let mut comult_cols = Vec::with_capacity(t.dim());
    let mut counit_cols = Vec::with_capacity(t.dim());
    for k in 0..t.dim() {
        let idx = t.multi_index(k);
        let (i, j) = (idx[0], idx[1]);
        let u = t.project_pure(&[unit_vec(d, i), one.clone()]);
        let v = t.project_pure(&[one.clone(), unit_vec(d, j)]);
        comult_cols.push(square.project_pure(&[u, v]));
        counit_cols.push(a.basis_product(i, j).to_vec());
    }
    let coring = Coring::new(
        bimodule,
        Matrix::from_columns(square.dim(), &comult_cols),
        Matrix::from_columns(d, &counit_cols),
    )?;
    let g = t.project_pure(&[one.clone(), one]);
    let grouplike = Grouplike::new(&coring, g)?;
    Ok(SweedlerCoring {
        coring,
        subalgebra: sub,
        inclusion: b.clone(),
        grouplike,
    })
}

/// `M □_C N` as a subspace of `M ⊗_A N`.
#[derive(Clone, Debug)]
pub struct Cotensor {
    pub space: Subspace,
    pub tensor: BalancedTensor,
}

pub fn cotensor(c: &Coring, m: &Comodule, n: &LeftComodule) -> Result<Cotensor> {
    let mn = BalancedTensor::new(vec![m.module.as_bimodule(), n.module.as_bimodule()])?;
    let mcn = BalancedTensor::new(vec![m.module.as_bimodule(), c.bimodule.clone(), n.module.as_bimodule()])?;
    let rho_n = tensor_id(&mcn, &mn, &m.coaction);
    let m_lambda = id_tensor(&mcn, &mn, n.tensor(), &n.coaction);
    let kernel = kernel_basis(&rho_n.sub(&m_lambda));
    Ok(Cotensor {
        space: kernel,
        tensor: mn,
    })
}

/// `ε ⊗ N` restricted to `C □_C N`, as a map into `N`.
pub fn cotensor_counit_left(c: &Coring, n: &LeftComodule, cot: &Cotensor) -> Matrix {
    let mut map = Matrix::zeros(n.dim(), cot.tensor.dim());
    for b in 0..cot.tensor.dim() {
        let idx = cot.tensor.multi_index(b);
        let img = n.module.action_of(&c.counit.column(idx[0])).column(idx[1]);
        for (r, x) in img.into_iter().enumerate() {
            map[(r, b)] = x;
        }
    }
    &map * &cot.space.basis().transpose()
}

/// `M ⊗ ε` restricted to `M □_C C`, as a map into `M`.
pub fn cotensor_counit_right(c: &Coring, m: &Comodule, cot: &Cotensor) -> Matrix {
    let mut map = Matrix::zeros(m.dim(), cot.tensor.dim());
    for b in 0..cot.tensor.dim() {
        let idx = cot.tensor.multi_index(b);
        let img = m.module.action_of(&c.counit.column(idx[1])).column(idx[0]);
        for (r, x) in img.into_iter().enumerate() {
            map[(r, b)] = x;
        }
    }
    &map * &cot.space.basis().transpose()
}

pub fn rationals() -> AlgebraRef {
    Arc::new(Algebra::rationals())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::fixtures;
    use crate::graded::graded_coring;

    #[test]
    fn trivial_coring_is_valid() {
        let c = Coring::trivial(&rationals()).unwrap();
        assert!(check_coring(&c).ok);
        assert!(is_grouplike(&c, &[rat(1)]));
        let m = comodule_from_grouplike(&c, &Grouplike::new(&c, vec![rat(1)]).unwrap()).unwrap();
        assert_eq!(m.coaction, Matrix::identity(1));
    }

    #[test]
    fn graded_coring_grouplikes() {
        let (ag, gs) = graded_coring(&fixtures::f2_graded()).unwrap();
        assert!(check_coring(&ag).ok);
        assert_eq!(gs.len(), 2);
        let sum = crate::exactlin::add_vec(&gs[0].vector, &gs[1].vector);
        assert!(!is_grouplike(&ag, &sum));
        assert_eq!(ag.epsilon(&sum), vec![rat(2), rat(0)]);
    }

    #[test]
    fn corrupted_comultiplication_is_reported() {
        let (ag, gs) = graded_coring(&fixtures::f2_graded()).unwrap();
        // redefine Δ(a s) := a ⊗ e on the s-block (basis s·n + i)
        let mut comult = ag.comult.clone();
        let n = 2;
        for i in 0..n {
            let e_i = unit_vec(ag.dim(), i);
            let col = ag.square().project_pure(&[e_i, gs[0].vector.clone()]);
            for (r, x) in col.into_iter().enumerate() {
                comult[(r, n + i)] = x;
            }
        }
        let bad = Coring::new(ag.bimodule.clone(), comult, ag.counit.clone()).unwrap();
        let report = check_coring(&bad);
        assert!(!report.ok);
        assert!(report.has_failure("coassociativity") || report.has_failure("right counit"));
    }

    #[test]
    fn regular_and_grouplike_comodules() {
        let (ag, gs) = graded_coring(&fixtures::f2_graded()).unwrap();
        assert!(check_comodule(&ag, &Comodule::regular(&ag).unwrap()).ok);
        for g in &gs {
            let m = comodule_from_grouplike(&ag, g).unwrap();
            assert!(check_comodule(&ag, &m).ok);
            let l = left_comodule_from_grouplike(&ag, g).unwrap();
            assert!(check_left_comodule(&ag, &l).ok);
        }
        assert!(check_left_comodule(&ag, &LeftComodule::regular(&ag).unwrap()).ok);
    }

    #[test]
    fn miscounted_coaction_is_reported() {
        let (ag, gs) = graded_coring(&fixtures::f2_graded()).unwrap();
        // ρ(1) = 1 ⊗ e but ρ(x) = x ⊗ e, which breaks right linearity
        let a = ag.algebra().clone();
        let module = RightModule::regular(&a);
        let tensor = BalancedTensor::new(vec![module.as_bimodule(), ag.bimodule.clone()]).unwrap();
        let cols = vec![
            tensor.project_pure(&[a.unit().to_vec(), gs[0].vector.clone()]),
            tensor.project_pure(&[a.unit().to_vec(), ag.bimodule.left_action[1].mul_vec(&gs[0].vector)]),
        ];
        let m = Comodule::new(&ag, module, Matrix::from_columns(tensor.dim(), &cols)).unwrap();
        let report = check_comodule(&ag, &m);
        assert!(report.has_failure("coaction right linearity"));
    }

    #[test]
    fn grouplike_coaction_formula() {
        // ρ(x) for [e]A is 1 ⊗ x·e, where x·e = (x)(e·s) as an element of AG
        let (ag, gs) = graded_coring(&fixtures::f2_graded()).unwrap();
        let m = comodule_from_grouplike(&ag, &gs[0]).unwrap();
        let one = ag.algebra().unit().to_vec();
        let x_s = unit_vec(4, 2 + 1);
        assert_eq!(m.coaction.column(1), m.tensor().project_pure(&[one.clone(), x_s]));
        let ms = comodule_from_grouplike(&ag, &gs[1]).unwrap();
        assert_eq!(
            ms.coaction.column(0),
            ms.tensor().project_pure(&[one, gs[1].vector.clone()])
        );
    }

    #[test]
    fn comodule_hom_examples() {
        for (graded, expected) in [(fixtures::f2_graded(), 1), (fixtures::f3_graded(), 1)] {
            let (ag, gs) = graded_coring(&graded).unwrap();
            let e = comodule_from_grouplike(&ag, &gs[0]).unwrap();
            let s = comodule_from_grouplike(&ag, &gs[1]).unwrap();
            let h = comodule_hom(&ag, &e, &s).unwrap();
            assert_eq!(h.dim(), expected);
            // multiplication by x
            assert!(h.contains(ag.algebra().left_regular(1)));
            assert!(comodule_hom(&ag, &e, &e).unwrap().contains(&Matrix::identity(2)));
        }
    }

    #[test]
    fn grouplike_hom_ring_examples() {
        let (ag, gs) = graded_coring(&fixtures::f2_graded()).unwrap();
        let ee = grouplike_hom_ring(&ag, &gs[0], &gs[0]).unwrap();
        assert!(ee.identified);
        assert_eq!(ee.subspace, Subspace::span(2, &[vec![rat(1), rat(0)]]));
        let es = grouplike_hom_ring(&ag, &gs[0], &gs[1]).unwrap();
        assert!(es.identified);
        assert_eq!(es.subspace, Subspace::span(2, &[vec![rat(0), rat(1)]]));
        let (ag3, gs3) = graded_coring(&fixtures::f3_graded()).unwrap();
        let ss = grouplike_hom_ring(&ag3, &gs3[1], &gs3[1]).unwrap();
        assert_eq!(ss.subspace, Subspace::span(2, &[vec![rat(1), rat(0)]]));
    }

    #[test]
    fn sweedler_examples() {
        let a: AlgebraRef = Arc::new(fixtures::f2_algebra());
        let full = sweedler_coring(&a, &Subspace::full(2)).unwrap();
        assert_eq!(full.coring.dim(), 2);
        assert!(check_coring(&full.coring).ok);
        let scalars = Subspace::span(2, &[a.unit().to_vec()]);
        let f4 = sweedler_coring(&a, &scalars).unwrap();
        assert_eq!(f4.coring.dim(), 4);
        assert!(check_coring(&f4.coring).ok);
        let a3: AlgebraRef = Arc::new(fixtures::f3_algebra());
        let s3 = sweedler_coring(&a3, &Subspace::span(2, &[a3.unit().to_vec()])).unwrap();
        assert_eq!(s3.coring.dim(), 4);
        assert!(check_coring(&s3.coring).ok);
        let bad = Subspace::span(2, &[vec![rat(0), rat(1)]]);
        assert!(matches!(sweedler_coring(&a, &bad), Err(Error::NotSubalgebra(_))));
    }

    #[test]
    fn cotensor_examples() {
        let (ag, gs) = graded_coring(&fixtures::f2_graded()).unwrap();
        let e = comodule_from_grouplike(&ag, &gs[0]).unwrap();
        let e_left = left_comodule_from_grouplike(&ag, &gs[0]).unwrap();
        let cot = cotensor(&ag, &e, &e_left).unwrap();
        assert_eq!(cot.space.dim(), 1);

        let c_right = Comodule::regular(&ag).unwrap();
        let c_left = LeftComodule::regular(&ag).unwrap();
        let cn = cotensor(&ag, &c_right, &e_left).unwrap();
        assert_eq!(cn.space.dim(), 2);
        assert!(cotensor_counit_left(&ag, &e_left, &cn).is_invertible());
        let mc = cotensor(&ag, &e, &c_left).unwrap();
        assert_eq!(mc.space.dim(), 2);
        assert!(cotensor_counit_right(&ag, &e, &mc).is_invertible());
    }

    #[test]
    fn generation_examples() {
        let graded = fixtures::f3_graded();
        let (ag, gs) = graded_coring(&graded).unwrap();
        let e = comodule_from_grouplike(&ag, &gs[0]).unwrap();
        let s = comodule_from_grouplike(&ag, &gs[1]).unwrap();
        let simple_s = fixtures::f3_simple(&ag, &graded, 1);
        assert!(check_comodule(&ag, &simple_s).ok);
        assert!(is_generated_by(&ag, &e, std::slice::from_ref(&e)).unwrap());
        assert!(!is_generated_by(&ag, &simple_s, std::slice::from_ref(&e)).unwrap());
        assert!(is_generated_by(&ag, &simple_s, &[e, s]).unwrap());
    }

    #[test]
    fn opposite_of_opposite_comultiplication() {
        let (ag, _) = graded_coring(&fixtures::f3_graded()).unwrap();
        let op = ag.opposite().unwrap();
        assert!(check_coring(&op).ok);
        let back = op.opposite().unwrap();
        assert_eq!(back.comult, ag.comult);
    }
}
