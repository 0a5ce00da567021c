//! Finite-dimensional algebras over ℚ, their modules, balanced tensor
//! products, duals and dual bases, the radical, and flatness tests.
//!
//! Actions are stored as matrices acting on column vectors.  For a right
//! module the matrix `action[i]` sends `m` to `m·e_i`; for a left module it
//! sends `m` to `e_i·m`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    axpy, is_zero_vec, kernel_basis, kernel_of_sparse_columns, quotient_space, rat, solve_columns, sparse_normalize,
    unit_vec, zero_vec, EchelonBuilder, MapSpace, Matrix, QuotientSpace, Rational, SparseVec, Subspace,
};
use crate::report::ValidationReport;

/// Unital associative algebra given by structure constants.
#[derive(Clone)]
pub struct Algebra {
    dim: usize,
    products: Vec<Vec<Rational>>,
    unit: Vec<Rational>,
    left_regular: Vec<Matrix>,
    right_regular: Vec<Matrix>,
}

pub type AlgebraRef = Arc<Algebra>;

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.unit == other.unit && self.products == other.products
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {})", self.dim)
    }
}

impl Algebra {
    /// `structure[(i·dim + j)·dim + k]` is the coefficient of `e_k` in `e_i·e_j`.
    pub fn new(dim: usize, structure: Vec<Rational>, unit: Vec<Rational>) -> Result<Self> {
        if structure.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "structure tensor has {} entries, expected {}",
                structure.len(),
                dim * dim * dim
            )));
        }
        let products = structure
            .chunks(dim.max(1))
            .take(dim * dim)
            .map(<[_]>::to_vec)
            .collect();
        Self::from_products(dim, products, unit)
    }

    /// `products[i·dim + j]` is the coordinate vector of `e_i·e_j`.
    pub fn from_products(dim: usize, products: Vec<Vec<Rational>>, unit: Vec<Rational>) -> Result<Self> {
        if products.len() != dim * dim || products.iter().any(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch("product table shape".into()));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit has length {}, algebra has dimension {dim}",
                unit.len()
            )));
        }
        let left_regular = (0..dim)
            .map(|i| Matrix::from_fn(dim, dim, |k, j| products[i * dim + j][k].clone()))
            .collect();
        let right_regular = (0..dim)
            .map(|i| Matrix::from_fn(dim, dim, |k, j| products[j * dim + i][k].clone()))
            .collect();
        Ok(Algebra {
            dim,
            products,
            unit,
            left_regular,
            right_regular,
        })
    }

    /// The base field ℚ as a one-dimensional algebra.
    pub fn rationals() -> Self {
        Self::from_products(1, vec![vec![rat(1)]], vec![rat(1)]).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        &self.products[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.products[i * self.dim + j][k]
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.left_mult(a).mul_vec(b)
    }

    /// Matrix of `x ↦ e_i·x`.
    pub fn left_regular(&self, i: usize) -> &Matrix {
        &self.left_regular[i]
    }

    /// Matrix of `x ↦ x·e_i`.
    pub fn right_regular(&self, i: usize) -> &Matrix {
        &self.right_regular[i]
    }

    pub fn left_mult(&self, a: &[Rational]) -> Matrix {
        combine_matrices(a, &self.left_regular, self.dim, self.dim)
    }

    pub fn right_mult(&self, a: &[Rational]) -> Matrix {
        combine_matrices(a, &self.right_regular, self.dim, self.dim)
    }

    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let products = (0..d * d)
            .map(|ij| self.products[(ij % d) * d + ij / d].clone())
            .collect();
        Algebra::from_products(d, products, self.unit.clone()).expect("same shape")
    }

    /// `A ⊗_ℚ B` with basis `e_i ⊗ f_j ↦ i·dim(B) + j`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 * d2;
        let mut products = Vec::with_capacity(d * d);
        for x in 0..d {
            for y in 0..d {
                let (i, j) = (x / d2, x % d2);
                let (k, l) = (y / d2, y % d2);
                products.push(crate::exactlin::kron_vec(
                    self.basis_product(i, k),
                    other.basis_product(j, l),
                ));
            }
        }
        let unit = crate::exactlin::kron_vec(&self.unit, &other.unit);
        Algebra::from_products(d, products, unit).expect("same shape")
    }

    /// The unital subalgebra spanned by `b`, with `b`'s canonical basis.
    pub fn subalgebra(&self, b: &Subspace) -> Result<Algebra> {
        if b.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("subspace of the wrong ambient space".into()));
        }
        if !b.contains(&self.unit) {
            return Err(Error::NotSubalgebra("does not contain 1".into()));
        }
        let basis = b.basis_vectors();
        let k = basis.len();
        let mut products = Vec::with_capacity(k * k);
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let p = self.mul(x, y);
                let c = b.coordinates(&p).ok_or_else(|| {
                    Error::NotSubalgebra(format!("product of basis elements {i} and {j} leaves the subspace"))
                })?;
                products.push(c);
            }
        }
        let unit = b.coordinates(&self.unit).expect("checked above");
        Algebra::from_products(k, products, unit)
    }

    /// Subalgebra closure test without building the algebra.
    pub fn is_unital_subalgebra(&self, b: &Subspace) -> bool {
        self.subalgebra(b).is_ok()
    }
}

fn combine_matrices(coeffs: &[Rational], mats: &[Matrix], rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for (c, x) in coeffs.iter().zip(mats) {
        if !c.is_zero() {
            m.add_scaled(c, x);
        }
    }
    m
}

pub fn same_ring(a: &AlgebraRef, b: &AlgebraRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn check_algebra(a: &Algebra) -> ValidationReport {
    let mut report = ValidationReport::new();
    let d = a.dim;
    for i in 0..d {
        for j in 0..d {
            let ij = a.basis_product(i, j);
            for k in 0..d {
                let left = a.right_regular(k).mul_vec(ij);
                let right = a.left_regular(i).mul_vec(a.basis_product(j, k));
                report.require(left == right, "associativity", || {
                    format!("basis triple ({i}, {j}, {k})")
                });
            }
        }
    }
    for i in 0..d {
        let e = unit_vec(d, i);
        report.require(a.mul(&a.unit, &e) == e, "left unit", || format!("basis element {i}"));
        report.require(a.mul(&e, &a.unit) == e, "right unit", || format!("basis element {i}"));
    }
    report
}

/// Algebra with a complete set of pairwise orthogonal idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdemRing {
    pub algebra: AlgebraRef,
    pub idempotents: Vec<Vec<Rational>>,
}

impl IdemRing {
    pub fn new(algebra: AlgebraRef, idempotents: Vec<Vec<Rational>>) -> Result<Self> {
        let r = IdemRing { algebra, idempotents };
        let report = r.check();
        if !report.ok {
            return Err(Error::InvalidStructure(format!("{:?}", report.failures)));
        }
        Ok(r)
    }

    /// A unital algebra viewed with the single idempotent 1.
    pub fn unital(algebra: AlgebraRef) -> Self {
        let unit = algebra.unit().to_vec();
        IdemRing {
            algebra,
            idempotents: vec![unit],
        }
    }

    pub fn check(&self) -> ValidationReport {
        let mut report = check_algebra(&self.algebra);
        let a = &self.algebra;
        for (p, x) in self.idempotents.iter().enumerate() {
            for (q, y) in self.idempotents.iter().enumerate() {
                let prod = a.mul(x, y);
                let expected = if p == q { x.clone() } else { zero_vec(a.dim()) };
                report.require(prod == expected, "orthogonal idempotents", || {
                    format!("pair ({p}, {q})")
                });
            }
        }
        let mut sum = zero_vec(a.dim());
        for x in &self.idempotents {
            axpy(&mut sum, &Rational::one(), x);
        }
        report.require(sum == a.unit(), "complete idempotents", || {
            "sum of idempotents is not 1".into()
        });
        report
    }
}

// ---------------------------------------------------------------------------
// Modules

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub algebra: AlgebraRef,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl RightModule {
    pub fn new(algebra: AlgebraRef, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        check_action_shapes(&algebra, dim, &action)?;
        Ok(RightModule { algebra, dim, action })
    }

    pub fn regular(algebra: &AlgebraRef) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.right_regular(i).clone()).collect();
        RightModule {
            algebra: algebra.clone(),
            dim: algebra.dim(),
            action,
        }
    }

    pub fn zero(algebra: &AlgebraRef) -> Self {
        RightModule {
            algebra: algebra.clone(),
            dim: 0,
            action: vec![Matrix::zeros(0, 0); algebra.dim()],
        }
    }

    /// Matrix of `m ↦ m·a`.
    pub fn action_of(&self, a: &[Rational]) -> Matrix {
        combine_matrices(a, &self.action, self.dim, self.dim)
    }

    pub fn act(&self, m: &[Rational], a: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (c, r) in a.iter().zip(&self.action) {
            if !c.is_zero() {
                axpy(&mut out, c, &r.mul_vec(m));
            }
        }
        out
    }

    pub fn check(&self) -> ValidationReport {
        // m·(e_i e_j) = (m·e_i)·e_j, i.e. R(e_i e_j) = R_j R_i
        let mut report = ValidationReport::new();
        let a = &self.algebra;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action_of(a.basis_product(i, j));
                let rhs = &self.action[j] * &self.action[i];
                report.require(lhs == rhs, "right action associativity", || {
                    format!("algebra basis pair ({i}, {j})")
                });
            }
        }
        report.require(
            self.action_of(a.unit()) == Matrix::identity(self.dim),
            "right action unit",
            || "m·1 ≠ m".into(),
        );
        report
    }

    pub fn direct_sum(mods: &[RightModule]) -> Result<RightModule> {
        let first = mods
            .first()
            .ok_or_else(|| Error::InvalidStructure("empty direct sum".into()))?;
        for m in mods {
            if !same_ring(&m.algebra, &first.algebra) {
                return Err(Error::RingMismatch("direct sum over different algebras".into()));
            }
        }
        let action = (0..first.algebra.dim())
            .map(|i| Matrix::block_diag(&mods.iter().map(|m| &m.action[i]).collect::<Vec<_>>()))
            .collect();
        Ok(RightModule {
            algebra: first.algebra.clone(),
            dim: mods.iter().map(|m| m.dim).sum(),
            action,
        })
    }

    /// As a `ℚ`–`A` bimodule.
    pub fn as_bimodule(&self) -> Bimodule {
        Bimodule {
            left: Arc::new(Algebra::rationals()),
            right: self.algebra.clone(),
            dim: self.dim,
            left_action: vec![Matrix::identity(self.dim)],
            right_action: self.action.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub algebra: AlgebraRef,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl LeftModule {
    pub fn new(algebra: AlgebraRef, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        check_action_shapes(&algebra, dim, &action)?;
        Ok(LeftModule { algebra, dim, action })
    }

    pub fn regular(algebra: &AlgebraRef) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_regular(i).clone()).collect();
        LeftModule {
            algebra: algebra.clone(),
            dim: algebra.dim(),
            action,
        }
    }

    /// Matrix of `m ↦ a·m`.
    pub fn action_of(&self, a: &[Rational]) -> Matrix {
        combine_matrices(a, &self.action, self.dim, self.dim)
    }

    pub fn check(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let a = &self.algebra;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action_of(a.basis_product(i, j));
                let rhs = &self.action[i] * &self.action[j];
                report.require(lhs == rhs, "left action associativity", || {
                    format!("algebra basis pair ({i}, {j})")
                });
            }
        }
        report.require(
            self.action_of(a.unit()) == Matrix::identity(self.dim),
            "left action unit",
            || "1·m ≠ m".into(),
        );
        report
    }

    /// As an `A`–`ℚ` bimodule.
    pub fn as_bimodule(&self) -> Bimodule {
        Bimodule {
            left: self.algebra.clone(),
            right: Arc::new(Algebra::rationals()),
            dim: self.dim,
            left_action: self.action.clone(),
            right_action: vec![Matrix::identity(self.dim)],
        }
    }
}

fn check_action_shapes(algebra: &Algebra, dim: usize, action: &[Matrix]) -> Result<()> {
    if action.len() != algebra.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} action matrices for an algebra of dimension {}",
            action.len(),
            algebra.dim()
        )));
    }
    if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "action matrix is {}x{}, module has dimension {dim}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub left: AlgebraRef,
    pub right: AlgebraRef,
    pub dim: usize,
    pub left_action: Vec<Matrix>,
    pub right_action: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        left: AlgebraRef,
        right: AlgebraRef,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Self> {
        check_action_shapes(&left, dim, &left_action)?;
        check_action_shapes(&right, dim, &right_action)?;
        Ok(Bimodule {
            left,
            right,
            dim,
            left_action,
            right_action,
        })
    }

    pub fn regular(algebra: &AlgebraRef) -> Self {
        Bimodule {
            left: algebra.clone(),
            right: algebra.clone(),
            dim: algebra.dim(),
            left_action: (0..algebra.dim()).map(|i| algebra.left_regular(i).clone()).collect(),
            right_action: (0..algebra.dim()).map(|i| algebra.right_regular(i).clone()).collect(),
        }
    }

    pub fn left_of(&self, a: &[Rational]) -> Matrix {
        combine_matrices(a, &self.left_action, self.dim, self.dim)
    }

    pub fn right_of(&self, a: &[Rational]) -> Matrix {
        combine_matrices(a, &self.right_action, self.dim, self.dim)
    }

    pub fn right_module(&self) -> RightModule {
        RightModule {
            algebra: self.right.clone(),
            dim: self.dim,
            action: self.right_action.clone(),
        }
    }

    pub fn left_module(&self) -> LeftModule {
        LeftModule {
            algebra: self.left.clone(),
            dim: self.dim,
            action: self.left_action.clone(),
        }
    }

    pub fn check(&self) -> ValidationReport {
        let mut report = self.left_module().check();
        report.merge(self.right_module().check());
        for (i, l) in self.left_action.iter().enumerate() {
            for (j, r) in self.right_action.iter().enumerate() {
                report.require((l * r) == (r * l), "bimodule compatibility", || {
                    format!("(e_{i}·m)·f_{j} ≠ e_{i}·(m·f_{j})")
                });
            }
        }
        report
    }

    pub fn direct_sum(mods: &[Bimodule]) -> Result<Bimodule> {
        let first = mods
            .first()
            .ok_or_else(|| Error::InvalidStructure("empty direct sum".into()))?;
        for m in mods {
            if !same_ring(&m.left, &first.left) || !same_ring(&m.right, &first.right) {
                return Err(Error::RingMismatch("direct sum over different algebras".into()));
            }
        }
        let sum = |f: &dyn Fn(&Bimodule) -> &Vec<Matrix>, n: usize| -> Vec<Matrix> {
            (0..n)
                .map(|i| Matrix::block_diag(&mods.iter().map(|m| &f(m)[i]).collect::<Vec<_>>()))
                .collect()
        };
        Ok(Bimodule {
            left: first.left.clone(),
            right: first.right.clone(),
            dim: mods.iter().map(|m| m.dim).sum(),
            left_action: sum(&|m| &m.left_action, first.left.dim()),
            right_action: sum(&|m| &m.right_action, first.right.dim()),
        })
    }

    /// Whether `f` (from `self` to `other`) commutes with both actions.
    pub fn is_bimodule_map(&self, other: &Bimodule, f: &Matrix) -> bool {
        (0..self.left.dim()).all(|i| (f * &self.left_action[i]) == (&other.left_action[i] * f))
            && (0..self.right.dim()).all(|i| (f * &self.right_action[i]) == (&other.right_action[i] * f))
    }
}

// ---------------------------------------------------------------------------
// Hom spaces

/// `{f : f·X_i = Y_i·f for all i}` for families of square matrices.
pub fn intertwiners(source: &[Matrix], target: &[Matrix], sdim: usize, tdim: usize) -> MapSpace {
    assert_eq!(source.len(), target.len());
    let block = tdim * sdim;
    let mut columns = Vec::with_capacity(block);
    for r in 0..tdim {
        for c in 0..sdim {
            // effect of the unknown E_rc on  E_rc·X_i − Y_i·E_rc
            let mut col = Vec::new();
            for (i, (x, y)) in source.iter().zip(target).enumerate() {
                let base = i * block;
                for b in 0..sdim {
                    let v = &x[(c, b)];
                    if !v.is_zero() {
                        col.push((base + r * sdim + b, v.clone()));
                    }
                }
                for a in 0..tdim {
                    let v = &y[(a, r)];
                    if !v.is_zero() {
                        col.push((base + a * sdim + c, -v.clone()));
                    }
                }
            }
            columns.push(sparse_normalize(col));
        }
    }
    let kernel = kernel_of_sparse_columns(block * source.len(), columns);
    MapSpace::new(tdim, sdim, kernel)
}

/// Basis of the right `A`-linear maps `P → Q`.
pub fn hom_right(p: &RightModule, q: &RightModule) -> Result<MapSpace> {
    if !same_ring(&p.algebra, &q.algebra) {
        return Err(Error::RingMismatch(
            "hom between modules over different algebras".into(),
        ));
    }
    Ok(intertwiners(&p.action, &q.action, p.dim, q.dim))
}

pub fn hom_left(p: &LeftModule, q: &LeftModule) -> Result<MapSpace> {
    if !same_ring(&p.algebra, &q.algebra) {
        return Err(Error::RingMismatch(
            "hom between modules over different algebras".into(),
        ));
    }
    Ok(intertwiners(&p.action, &q.action, p.dim, q.dim))
}

/// A subalgebra of `End(V)` given by a space of square matrices, with the
/// algebra structure induced by composition on the space's canonical basis.
#[derive(Clone, Debug)]
pub struct OperatorAlgebra {
    pub maps: MapSpace,
    pub algebra: AlgebraRef,
}

impl OperatorAlgebra {
    pub fn new(maps: MapSpace) -> Result<Self> {
        if maps.rows() != maps.cols() {
            return Err(Error::DimensionMismatch("operators must be square".into()));
        }
        let basis = maps.basis_maps();
        let k = basis.len();
        let mut products = Vec::with_capacity(k * k);
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let c = maps.coordinates(&(x * y)).ok_or_else(|| {
                    Error::NotSubalgebra(format!("composite of operators {i} and {j} leaves the space"))
                })?;
                products.push(c);
            }
        }
        let unit = maps
            .coordinates(&Matrix::identity(maps.rows()))
            .ok_or_else(|| Error::NotSubalgebra("identity operator missing".into()))?;
        Ok(OperatorAlgebra {
            algebra: Arc::new(Algebra::from_products(k, products, unit)?),
            maps,
        })
    }

    /// `P` as a `T`–`A` bimodule, `T` acting by evaluation.
    pub fn module_bimodule(&self, p: &RightModule) -> Bimodule {
        Bimodule {
            left: self.algebra.clone(),
            right: p.algebra.clone(),
            dim: p.dim,
            left_action: self.maps.basis_maps(),
            right_action: p.action.clone(),
        }
    }
}

/// `P* = Hom_A(P, A)` realised as a space of `dim A × dim P` matrices.
#[derive(Clone, Debug)]
pub struct DualModule {
    pub module: RightModule,
    pub space: MapSpace,
}

impl DualModule {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn functional(&self, k: usize) -> Matrix {
        self.space.basis(k)
    }

    pub fn coordinates(&self, phi: &Matrix) -> Option<Vec<Rational>> {
        self.space.coordinates(phi)
    }

    /// Left `A`-action `(a·φ)(x) = a·φ(x)`.
    pub fn left_action(&self) -> Vec<Matrix> {
        let a = &self.module.algebra;
        let basis = self.space.basis_maps();
        (0..a.dim())
            .map(|i| {
                let cols: Vec<Vec<Rational>> = basis
                    .iter()
                    .map(|phi| {
                        self.coordinates(&(a.left_regular(i) * phi))
                            .expect("P* is a left A-module")
                    })
                    .collect();
                Matrix::from_columns(self.dim(), &cols)
            })
            .collect()
    }

    /// Right action of an operator `t` on `P` by precomposition.
    pub fn precompose_matrix(&self, t: &Matrix) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|k| {
                self.coordinates(&(&self.functional(k) * t))
                    .expect("precomposition stays right-linear")
            })
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// `P*` as an `A`–`T` bimodule.
    pub fn bimodule(&self, t: &OperatorAlgebra) -> Bimodule {
        Bimodule {
            left: self.module.algebra.clone(),
            right: t.algebra.clone(),
            dim: self.dim(),
            left_action: self.left_action(),
            right_action: t.maps.basis_maps().iter().map(|m| self.precompose_matrix(m)).collect(),
        }
    }
}

pub fn dual_module(p: &RightModule) -> DualModule {
    let a = RightModule::regular(&p.algebra);
    DualModule {
        module: p.clone(),
        space: intertwiners(&p.action, &a.action, p.dim, a.dim),
    }
}

/// Elements `e_α` of `P` and right-linear functionals `e*_α` with
/// `Σ_α e_α·e*_α(p) = p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    pub elements: Vec<Vec<Rational>>,
    pub functionals: Vec<Matrix>,
}

impl DualBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The dual basis criterion on every basis vector of `P`.
    pub fn check(&self, p: &RightModule) -> bool {
        (0..p.dim).all(|x| {
            let mut sum = zero_vec(p.dim);
            for (e, phi) in self.elements.iter().zip(&self.functionals) {
                axpy(&mut sum, &Rational::one(), &p.act(e, &phi.column(x)));
            }
            sum == unit_vec(p.dim, x)
        })
    }
}

/// Dual basis with the canonical basis of `P` as generators.
pub fn dual_basis(p: &RightModule) -> Result<DualBasis> {
    let gens: Vec<Vec<Rational>> = (0..p.dim).map(|i| unit_vec(p.dim, i)).collect();
    dual_basis_with_generators(p, &gens)
}

/// Dual basis on prescribed generators; fails if they do not split.
pub fn dual_basis_with_generators(p: &RightModule, gens: &[Vec<Rational>]) -> Result<DualBasis> {
    let dual = dual_module(p);
    let d = p.dim;
    let phis = dual.space.basis_maps();
    // unknown (i, k): coefficient of φ_k in the functional paired with gens[i]
    let mut columns = Vec::with_capacity(gens.len() * phis.len());
    for g in gens {
        if g.len() != d {
            return Err(Error::DimensionMismatch("generator length".into()));
        }
        for phi in &phis {
            let mut col = zero_vec(d * d);
            for x in 0..d {
                let img = p.act(g, &phi.column(x));
                for (row, v) in img.into_iter().enumerate() {
                    col[x * d + row] = v;
                }
            }
            columns.push(col);
        }
    }
    let target = Matrix::identity(d).transpose().vectorize();
    let solution = if d == 0 {
        Some(zero_vec(columns.len()))
    } else {
        solve_columns(&columns, &target)
    };
    let x = solution.ok_or_else(|| Error::NotProjective("the generator surjection does not split".into()))?;
    let k = phis.len();
    let functionals = (0..gens.len())
        .map(|i| {
            let mut f = Matrix::zeros(p.algebra.dim(), d);
            for (c, phi) in x[i * k..(i + 1) * k].iter().zip(&phis) {
                f.add_scaled(c, phi);
            }
            f
        })
        .collect();
    Ok(DualBasis {
        elements: gens.to_vec(),
        functionals,
    })
}

// ---------------------------------------------------------------------------
// Radical and flatness

/// Radical via the trace form `(x, y) ↦ tr L(xy)`, valid in characteristic zero.
pub fn jacobson_radical(a: &Algebra) -> Result<Subspace> {
    let d = a.dim();
    let b = Matrix::from_fn(d, d, |i, j| (a.left_regular(i) * a.left_regular(j)).trace());
    let j = kernel_basis(&b);
    if !is_nilpotent_ideal(a, &j) {
        return Err(Error::InvalidStructure(
            "trace-form kernel is not a nilpotent ideal".into(),
        ));
    }
    Ok(j)
}

pub fn is_nilpotent_ideal(a: &Algebra, j: &Subspace) -> bool {
    let d = a.dim();
    let basis = j.basis_vectors();
    for x in &basis {
        for i in 0..d {
            let e = unit_vec(d, i);
            if !j.contains(&a.mul(&e, x)) || !j.contains(&a.mul(x, &e)) {
                return false;
            }
        }
    }
    let mut power = j.clone();
    for _ in 0..=d {
        if power.is_zero() {
            return true;
        }
        let prods: Vec<Vec<Rational>> = power
            .basis_vectors()
            .iter()
            .flat_map(|x| basis.iter().map(move |y| (x, y)))
            .map(|(x, y)| a.mul(x, y))
            .collect();
        power = Subspace::span(d, &prods);
    }
    power.is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FlatnessReport {
    pub unital: bool,
    pub flat: bool,
    pub faithful: bool,
    pub faithfully_flat: bool,
    pub generators: usize,
}

/// Projectivity of a finite-dimensional unital left module: does the
/// canonical cover by `⊕ R·1_P` split?
pub fn is_projective(r: &IdemRing, f: &LeftModule) -> Result<(bool, usize)> {
    if !same_ring(&r.algebra, &f.algebra) {
        return Err(Error::RingMismatch("module over a different ring".into()));
    }
    check_unital(r, f)?;
    let a = &r.algebra;
    let n = a.dim();
    let mut image = Subspace::zero(f.dim);
    let mut cover: Vec<(usize, Vec<Rational>)> = Vec::new();
    for (p, idem) in r.idempotents.iter().enumerate() {
        let e = f.action_of(idem);
        for v in Subspace::column_space(&e).basis_vectors() {
            if image.contains(&v) {
                continue;
            }
            let orbit: Vec<Vec<Rational>> = f.action.iter().map(|l| l.mul_vec(&v)).collect();
            image = image.sum(&Subspace::span(f.dim, &orbit));
            cover.push((p, v));
        }
    }
    // free module ⊕ R·1_p, each summand with the basis of its left ideal
    let mut summands = Vec::new();
    for (p, v) in &cover {
        let ideal = Subspace::column_space(&a.right_mult(&r.idempotents[*p]));
        summands.push((ideal, v.clone()));
    }
    let fdim: usize = summands.iter().map(|(s, _)| s.dim()).sum();
    let mut left = vec![Matrix::zeros(fdim, fdim); n];
    let mut pi = Matrix::zeros(f.dim, fdim);
    let mut off = 0;
    for (ideal, v) in &summands {
        for (b, x) in ideal.basis_vectors().iter().enumerate() {
            for (i, l) in left.iter_mut().enumerate() {
                let c = ideal.coordinates(&a.left_regular(i).mul_vec(x)).expect("left ideal");
                for (k, y) in c.into_iter().enumerate() {
                    l[(off + k, off + b)] = y;
                }
            }
            let img = f.action_of(x).mul_vec(v);
            for (row, y) in img.into_iter().enumerate() {
                pi[(row, off + b)] = y;
            }
        }
        off += ideal.dim();
    }
    let homs = intertwiners(&f.action, &left, f.dim, fdim);
    let columns: Vec<Vec<Rational>> = homs.basis_maps().iter().map(|s| (&pi * s).vectorize()).collect();
    let target = Matrix::identity(f.dim).vectorize();
    let split = f.dim == 0 || solve_columns(&columns, &target).is_some();
    Ok((split, cover.len()))
}

fn check_unital(r: &IdemRing, f: &LeftModule) -> Result<()> {
    let mut sum = Matrix::zeros(f.dim, f.dim);
    for e in &r.idempotents {
        sum = sum.add(&f.action_of(e));
    }
    if sum != Matrix::identity(f.dim) {
        return Err(Error::NonUnital("Σ 1_P does not act as the identity".into()));
    }
    Ok(())
}

/// Faithful flatness of a finite-dimensional left module: projective, and
/// faithful modulo the radical.
pub fn is_faithfully_flat(r: &IdemRing, f: &LeftModule) -> Result<FlatnessReport> {
    let (flat, generators) = is_projective(r, f)?;
    let j = jacobson_radical(&r.algebra)?;
    let jf: Vec<Vec<Rational>> = j
        .basis_vectors()
        .iter()
        .flat_map(|x| {
            let l = f.action_of(x);
            (0..f.dim).map(move |c| l.column(c))
        })
        .collect();
    let jf = Subspace::span(f.dim, &jf);
    let q = quotient_space(f.dim, &jf)?;
    let columns: Vec<SparseVec> = f
        .action
        .iter()
        .map(|l| {
            let mut col = Vec::new();
            for c in 0..f.dim {
                for (k, x) in q.project(&l.column(c)).into_iter().enumerate() {
                    if !x.is_zero() {
                        col.push((c * q.dim() + k, x));
                    }
                }
            }
            col
        })
        .collect();
    let ann = kernel_of_sparse_columns(f.dim * q.dim(), columns);
    let faithful = ann.dim() == j.dim();
    Ok(FlatnessReport {
        unital: true,
        flat,
        faithful,
        faithfully_flat: flat && faithful,
        generators,
    })
}

// ---------------------------------------------------------------------------
// Balanced tensor products

#[derive(Clone, Debug)]
struct Level {
    factor_dim: usize,
    quotient: QuotientSpace,
    proj_cols: Vec<SparseVec>,
}

/// `M_1 ⊗_{B_1} M_2 ⊗_{B_2} ⋯ ⊗ M_n` for bimodules with matching inner rings,
/// built as an iterated quotient.  Every basis element of the result is the
/// image of a pure tensor of basis vectors, recorded as its multi-index.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    factors: Vec<Bimodule>,
    levels: Vec<Level>,
    multi: Vec<Vec<usize>>,
    left_action: Vec<Matrix>,
    right_action: Vec<Matrix>,
}

impl BalancedTensor {
    pub fn new(factors: Vec<Bimodule>) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::InvalidStructure("tensor product of no factors".into()))?
            .clone();
        let mut left_action = first.left_action.clone();
        let mut right_action = first.right_action.clone();
        let mut multi: Vec<Vec<usize>> = (0..first.dim).map(|i| vec![i]).collect();
        let mut levels = Vec::new();
        for k in 1..factors.len() {
            let m = &factors[k];
            if !same_ring(&factors[k - 1].right, &m.left) {
                return Err(Error::RingMismatch(format!(
                    "factor {} is not a left module over the right ring of factor {}",
                    k,
                    k - 1
                )));
            }
            let dq = multi.len();
            let dm = m.dim;
            let ambient = dq * dm;
            let mut builder = EchelonBuilder::new(ambient);
            'outer: for (t, (rq, lm)) in right_action.iter().zip(&m.left_action).enumerate() {
                let _ = t;
                for q in 0..dq {
                    for j in 0..dm {
                        let mut rel = Vec::new();
                        for q2 in 0..dq {
                            let x = &rq[(q2, q)];
                            if !x.is_zero() {
                                rel.push((q2 * dm + j, x.clone()));
                            }
                        }
                        for j2 in 0..dm {
                            let x = &lm[(j2, j)];
                            if !x.is_zero() {
                                rel.push((q * dm + j2, -x.clone()));
                            }
                        }
                        builder.insert(sparse_normalize(rel));
                        if builder.rank() == ambient {
                            break 'outer;
                        }
                    }
                }
            }
            let w = Subspace::from_builder(builder);
            let quotient = quotient_space(ambient, &w)?;
            let proj_cols: Vec<SparseVec> = (0..ambient).map(|j| quotient.projection_column(j)).collect();
            let dn = quotient.dim();
            let new_multi: Vec<Vec<usize>> = quotient
                .free_columns()
                .iter()
                .map(|&f| {
                    let mut v = multi[f / dm].clone();
                    v.push(f % dm);
                    v
                })
                .collect();
            let induce = |build: &dyn Fn(usize, usize) -> Vec<(usize, Rational)>| -> Matrix {
                let mut mat = Matrix::zeros(dn, dn);
                for (b, &f) in quotient.free_columns().iter().enumerate() {
                    let (q, j) = (f / dm, f % dm);
                    for (amb, c) in build(q, j) {
                        for (row, w) in &proj_cols[amb] {
                            mat[(*row, b)] += &c * w;
                        }
                    }
                }
                mat
            };
            let new_left = left_action
                .iter()
                .map(|l| {
                    induce(&|q, j| {
                        (0..dq)
                            .filter(|&q2| !l[(q2, q)].is_zero())
                            .map(|q2| (q2 * dm + j, l[(q2, q)].clone()))
                            .collect()
                    })
                })
                .collect();
            let new_right = m
                .right_action
                .iter()
                .map(|r| {
                    induce(&|q, j| {
                        (0..dm)
                            .filter(|&j2| !r[(j2, j)].is_zero())
                            .map(|j2| (q * dm + j2, r[(j2, j)].clone()))
                            .collect()
                    })
                })
                .collect();
            left_action = new_left;
            right_action = new_right;
            multi = new_multi;
            levels.push(Level {
                factor_dim: dm,
                quotient,
                proj_cols,
            });
        }
        Ok(BalancedTensor {
            factors,
            levels,
            multi,
            left_action,
            right_action,
        })
    }

    pub fn dim(&self) -> usize {
        self.multi.len()
    }

    pub fn factors(&self) -> &[Bimodule] {
        &self.factors
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim).collect()
    }

    pub fn ambient_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).product()
    }

    /// Multi-index of the pure tensor lifting basis element `b`.
    pub fn multi_index(&self, b: usize) -> &[usize] {
        &self.multi[b]
    }

    pub fn left_algebra(&self) -> &AlgebraRef {
        &self.factors[0].left
    }

    pub fn right_algebra(&self) -> &AlgebraRef {
        &self.factors.last().expect("nonempty").right
    }

    pub fn left_action(&self) -> &[Matrix] {
        &self.left_action
    }

    pub fn right_action(&self) -> &[Matrix] {
        &self.right_action
    }

    pub fn as_bimodule(&self) -> Bimodule {
        Bimodule {
            left: self.left_algebra().clone(),
            right: self.right_algebra().clone(),
            dim: self.dim(),
            left_action: self.left_action.clone(),
            right_action: self.right_action.clone(),
        }
    }

    /// Quotient space at level `k` (combining the first `k + 1` factors).
    pub fn level_quotient(&self, k: usize) -> &QuotientSpace {
        &self.levels[k - 1].quotient
    }

    /// `[x ⊗ m]` where `x` lies in the partial product of the first `k` factors.
    pub fn extend(&self, k: usize, x: &[Rational], m: &[Rational]) -> Vec<Rational> {
        let level = &self.levels[k - 1];
        let dm = level.factor_dim;
        assert_eq!(m.len(), dm, "extension vector length");
        let mut out = zero_vec(level.quotient.dim());
        for (q, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in m.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (row, w) in &level.proj_cols[q * dm + j] {
                    out[*row] += &ab * w;
                }
            }
        }
        out
    }

    /// Class of the pure tensor `parts[0] ⊗ parts[1] ⊗ ⋯`.
    pub fn project_pure(&self, parts: &[Vec<Rational>]) -> Vec<Rational> {
        assert_eq!(parts.len(), self.factors.len(), "one vector per factor");
        let mut state = parts[0].clone();
        for k in 1..parts.len() {
            state = self.extend(k, &state, &parts[k]);
        }
        state
    }

    /// Class of `Σ c · e_{i_1} ⊗ ⋯ ⊗ e_{i_n}`.
    pub fn project_terms(&self, terms: &[(Vec<usize>, Rational)]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim());
        for (idx, c) in terms {
            if c.is_zero() {
                continue;
            }
            let mut state: BTreeMap<usize, Rational> = BTreeMap::new();
            state.insert(idx[0], c.clone());
            for (k, level) in self.levels.iter().enumerate() {
                let j = idx[k + 1];
                let mut next: BTreeMap<usize, Rational> = BTreeMap::new();
                for (q, a) in &state {
                    for (row, w) in &level.proj_cols[q * level.factor_dim + j] {
                        *next.entry(*row).or_insert_with(Rational::zero) += a * w;
                    }
                }
                next.retain(|_, v| !v.is_zero());
                state = next;
            }
            for (row, v) in state {
                out[row] += v;
            }
        }
        out
    }

    /// Class of an ambient vector in `M_1 ⊗_ℚ ⋯ ⊗_ℚ M_n`.
    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        let dims = self.factor_dims();
        assert_eq!(v.len(), self.ambient_dim(), "ambient vector length");
        let terms: Vec<(Vec<usize>, Rational)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(mut j, x)| {
                let mut idx = vec![0; dims.len()];
                for k in (0..dims.len()).rev() {
                    idx[k] = j % dims[k];
                    j /= dims[k];
                }
                (idx, x.clone())
            })
            .collect();
        self.project_terms(&terms)
    }

    /// Pure-tensor lifts of an element given in quotient coordinates.
    pub fn lift_terms(&self, coords: &[Rational]) -> Vec<(Vec<usize>, Rational)> {
        coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, c)| (self.multi[b].clone(), c.clone()))
            .collect()
    }

    /// Ambient vector of the canonical lift.
    pub fn lift(&self, coords: &[Rational]) -> Vec<Rational> {
        let dims = self.factor_dims();
        let mut out = zero_vec(self.ambient_dim());
        for (idx, c) in self.lift_terms(coords) {
            let j = idx.iter().zip(&dims).fold(0, |acc, (i, d)| acc * d + i);
            out[j] = c;
        }
        out
    }

    /// `f_1 ⊗ ⋯ ⊗ f_n` from `source` to `target`, computed on canonical lifts.
    pub fn tensor_map(source: &BalancedTensor, target: &BalancedTensor, maps: &[Matrix]) -> Matrix {
        assert_eq!(maps.len(), source.factors.len());
        assert_eq!(maps.len(), target.factors.len());
        let columns: Vec<Vec<Rational>> = (0..source.dim())
            .map(|b| {
                let parts: Vec<Vec<Rational>> = source.multi[b].iter().zip(maps).map(|(&i, f)| f.column(i)).collect();
                target.project_pure(&parts)
            })
            .collect();
        Matrix::from_columns(target.dim(), &columns)
    }
}

/// `M ⊗_T N` for a right `T`-module structure on `M` and a left one on `N`.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Result<BalancedTensor> {
    BalancedTensor::new(vec![m.clone(), n.clone()])
}

/// Balanced tensor over an idempotent ring, requiring both modules unital.
pub fn tensor_over_idem(m: &Bimodule, r: &IdemRing, n: &Bimodule) -> Result<BalancedTensor> {
    if !same_ring(&m.right, &r.algebra) || !same_ring(&n.left, &r.algebra) {
        return Err(Error::RingMismatch("modules are not over the idempotent ring".into()));
    }
    let sum_right = r
        .idempotents
        .iter()
        .fold(Matrix::zeros(m.dim, m.dim), |acc, e| acc.add(&m.right_of(e)));
    if sum_right != Matrix::identity(m.dim) {
        return Err(Error::NonUnital("left factor".into()));
    }
    check_unital(r, &n.left_module())?;
    tensor_over(m, n)
}

pub fn is_zero_map(m: &Matrix) -> bool {
    is_zero_vec(m.data())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::ratio;
    use crate::fixtures;

    #[test]
    fn algebra_checks() {
        assert!(check_algebra(&Algebra::rationals()).ok);
        assert!(check_algebra(&fixtures::f2_algebra()).ok);
        // e1·e1 = e2, e2·e1 = e1, everything else zero: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
        let r = |v: [i64; 2]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        let bad = Algebra::from_products(2, vec![r([0, 1]), r([0, 0]), r([1, 0]), r([0, 0])], r([1, 0])).unwrap();
        let report = check_algebra(&bad);
        assert!(!report.ok);
        assert!(report.has_failure("associativity"));
    }

    #[test]
    fn tensor_over_examples() {
        let a: AlgebraRef = Arc::new(fixtures::f2_algebra());
        let aa = tensor_over(&Bimodule::regular(&a), &Bimodule::regular(&a)).unwrap();
        assert_eq!(aa.dim(), 2);
        // projection of a ⊗ a' equals that of aa' ⊗ 1
        for i in 0..2 {
            for j in 0..2 {
                let lhs = aa.project_pure(&[unit_vec(2, i), unit_vec(2, j)]);
                let rhs = aa.project_pure(&[a.basis_product(i, j).to_vec(), a.unit().to_vec()]);
                assert_eq!(lhs, rhs);
            }
        }
        let q: AlgebraRef = Arc::new(Algebra::rationals());
        let left = Bimodule::new(a.clone(), q.clone(), 2, a_left(&a), vec![Matrix::identity(2)]).unwrap();
        let right = Bimodule::new(q, a.clone(), 2, vec![Matrix::identity(2)], a_right(&a)).unwrap();
        assert_eq!(tensor_over(&left, &right).unwrap().dim(), 4);
    }

    fn a_left(a: &Algebra) -> Vec<Matrix> {
        (0..a.dim()).map(|i| a.left_regular(i).clone()).collect()
    }

    fn a_right(a: &Algebra) -> Vec<Matrix> {
        (0..a.dim()).map(|i| a.right_regular(i).clone()).collect()
    }

    #[test]
    fn hom_examples() {
        let q: AlgebraRef = Arc::new(Algebra::rationals());
        assert_eq!(
            hom_right(&RightModule::regular(&q), &RightModule::regular(&q))
                .unwrap()
                .dim(),
            1
        );
        let a: AlgebraRef = Arc::new(fixtures::f2_algebra());
        let h = hom_right(&RightModule::regular(&a), &RightModule::regular(&a)).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.contains(a.left_regular(1)));
        assert_eq!(
            hom_right(&RightModule::regular(&a), &RightModule::zero(&a))
                .unwrap()
                .dim(),
            0
        );
    }

    #[test]
    fn dual_examples() {
        let q: AlgebraRef = Arc::new(Algebra::rationals());
        assert_eq!(dual_module(&RightModule::regular(&q)).dim(), 1);
        let a: AlgebraRef = Arc::new(fixtures::f2_algebra());
        assert_eq!(dual_module(&RightModule::regular(&a)).dim(), 2);
        assert_eq!(dual_module(&RightModule::zero(&a)).dim(), 0);
    }

    #[test]
    fn dual_basis_examples() {
        for a in [fixtures::f2_algebra(), fixtures::f3_algebra()] {
            let a: AlgebraRef = Arc::new(a);
            let p = RightModule::regular(&a);
            let db = dual_basis(&p).unwrap();
            assert_eq!(db.len(), a.dim());
            assert!(db.check(&p));
        }
        let a: AlgebraRef = Arc::new(fixtures::f3_algebra());
        let simple = RightModule::new(a.clone(), 1, vec![Matrix::identity(1), Matrix::zeros(1, 1)]).unwrap();
        assert!(simple.check().ok);
        assert!(matches!(dual_basis(&simple), Err(Error::NotProjective(_))));
    }

    #[test]
    fn radical_examples() {
        assert!(jacobson_radical(&fixtures::f2_algebra()).unwrap().is_zero());
        assert!(jacobson_radical(&Algebra::rationals()).unwrap().is_zero());
        let j = jacobson_radical(&fixtures::f3_algebra()).unwrap();
        assert_eq!(j, Subspace::span(2, &[vec![rat(0), rat(1)]]));
        // upper triangular 2x2 matrices: radical is the strictly upper corner
        let t = fixtures::upper_triangular();
        let j = jacobson_radical(&t).unwrap();
        assert_eq!(j.dim(), 1);
        let quotient_check = check_algebra(&t);
        assert!(quotient_check.ok);
    }

    #[test]
    fn faithful_flatness_of_regular_modules() {
        for alg in [
            fixtures::f2_algebra(),
            fixtures::f3_algebra(),
            fixtures::upper_triangular(),
        ] {
            let a: AlgebraRef = Arc::new(alg);
            let r = IdemRing::unital(a.clone());
            let rep = is_faithfully_flat(&r, &LeftModule::regular(&a)).unwrap();
            assert!(rep.faithfully_flat, "{rep:?}");
        }
        let a: AlgebraRef = Arc::new(fixtures::f3_algebra());
        let simple = LeftModule::new(a.clone(), 1, vec![Matrix::identity(1), Matrix::zeros(1, 1)]).unwrap();
        let rep = is_faithfully_flat(&IdemRing::unital(a), &simple).unwrap();
        assert!(!rep.flat);
        assert!(rep.faithful);
    }

    #[test]
    fn nonunital_module_rejected() {
        let a: AlgebraRef = Arc::new(fixtures::f2_algebra());
        let zero_action = LeftModule {
            algebra: a.clone(),
            dim: 1,
            action: vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1)],
        };
        assert!(matches!(
            is_faithfully_flat(&IdemRing::unital(a), &zero_action),
            Err(Error::NonUnital(_))
        ));
    }

    #[test]
    fn subalgebra_and_tensor_algebra() {
        let a = fixtures::f2_algebra();
        let b = Subspace::span(2, &[a.unit().to_vec()]);
        assert_eq!(a.subalgebra(&b).unwrap().dim(), 1);
        let not_unital = Subspace::span(2, &[vec![rat(0), rat(1)]]);
        assert!(matches!(a.subalgebra(&not_unital), Err(Error::NotSubalgebra(_))));
        let t = a.tensor(&a);
        assert!(check_algebra(&t).ok);
        assert!(check_algebra(&t.opposite()).ok);
        let half = vec![ratio(1, 2), ratio(1, 2)];
        let e = a.mul(&half, &half);
        assert_eq!(e, half);
    }
}
