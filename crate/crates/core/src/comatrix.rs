//! Comatrix corings, the coproduct coring of a family of comodules, its
//! coideal and quotient, the infinite comatrix coring, the canonical map and
//! the Galois / descent verdicts.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    dual_basis, dual_module, hom_right, is_faithfully_flat, is_projective, Algebra, AlgebraRef, BalancedTensor,
    Bimodule, DualBasis, DualModule, FlatnessReport, IdemRing, LeftModule, OperatorAlgebra, RightModule,
};
use crate::coring::{
    comodule_from_grouplike, comodule_hom, generated_part, grouplike_hom_ring, is_coring_hom, rationals,
    sweedler_coring, Comodule, Coring, Grouplike,
};
use crate::error::{Error, Result};
use crate::exactlin::{
    axpy, kernel_basis, kernel_of_columns, sparse_to_dense, unit_vec, zero_vec, MapSpace, Matrix, QuotientSpace,
    Rational, Subspace,
};
use crate::report::ValidationReport;
use num_traits::{One, Zero};

fn embed(v: &[Rational], offset: usize, total: usize) -> Vec<Rational> {
    let mut out = zero_vec(total);
    out[offset..offset + v.len()].clone_from_slice(v);
    out
}

fn prefix_sums(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    out.push(0);
    for d in dims {
        acc += d;
        out.push(acc);
    }
    out
}

fn locate(offsets: &[usize], i: usize) -> (usize, usize) {
    let p = offsets.partition_point(|&o| o <= i) - 1;
    (p, i - offsets[p])
}

fn matrix_of_columns(rows: usize, cols: Vec<Vec<Rational>>) -> Matrix {
    Matrix::from_columns(rows, &cols)
}

// ---------------------------------------------------------------------------
// Comatrix coring of a single module

/// `P* ⊗_T P` for a finitely generated projective `P_A` and a ring `T` of
/// right-linear operators on `P`.
#[derive(Clone, Debug)]
pub struct ComatrixCoring {
    pub coring: Coring,
    pub tensor: BalancedTensor,
    pub module: RightModule,
    pub dual: DualModule,
    pub operators: OperatorAlgebra,
    pub dual_basis: DualBasis,
}

pub fn comatrix_coring(p: &RightModule, t: &OperatorAlgebra, db: &DualBasis) -> Result<ComatrixCoring> {
    if !db.check(p) {
        return Err(Error::NotProjective(
            "the supplied dual basis does not reconstruct P".into(),
        ));
    }
    let dual = dual_module(p);
    let tensor = BalancedTensor::new(vec![dual.bimodule(t), t.module_bimodule(p)])?;
    let bimodule = tensor.as_bimodule();
    let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
    let star: Vec<Vec<Rational>> = db
        .functionals
        .iter()
        .map(|f| {
            dual.coordinates(f)
                .ok_or_else(|| Error::NotProjective("dual basis functional is not right-linear".into()))
        })
        .collect::<Result<_>>()?;
    let mut comult = Vec::with_capacity(tensor.dim());
    let mut counit = Vec::with_capacity(tensor.dim());
    for b in 0..tensor.dim() {
        let idx = tensor.multi_index(b);
        let (k, j) = (idx[0], idx[1]);
        let mut col = zero_vec(square.dim());
        for (e, s) in db.elements.iter().zip(&star) {
            let u = tensor.project_pure(&[unit_vec(dual.dim(), k), e.clone()]);
            let v = tensor.project_pure(&[s.clone(), unit_vec(p.dim, j)]);
            axpy(&mut col, &Rational::one(), &square.project_pure(&[u, v]));
        }
        comult.push(col);
        counit.push(dual.functional(k).column(j));
    }
    let coring = Coring::new(
        bimodule,
        matrix_of_columns(square.dim(), comult),
        matrix_of_columns(p.algebra.dim(), counit),
    )?;
    Ok(ComatrixCoring {
        coring,
        tensor,
        module: p.clone(),
        dual,
        operators: t.clone(),
        dual_basis: db.clone(),
    })
}

impl ComatrixCoring {
    /// `P` as a comodule: `p ↦ Σ e_α ⊗ (e*_α ⊗ p)`.
    pub fn comodule(&self) -> Result<Comodule> {
        let target = BalancedTensor::new(vec![self.module.as_bimodule(), self.coring.bimodule.clone()])?;
        let cols = (0..self.module.dim)
            .map(|j| {
                let mut col = zero_vec(target.dim());
                for (e, f) in self.dual_basis.elements.iter().zip(&self.dual_basis.functionals) {
                    let s = self.dual.coordinates(f).expect("dual basis functional");
                    let c = self.tensor.project_pure(&[s, unit_vec(self.module.dim, j)]);
                    axpy(&mut col, &Rational::one(), &target.project_pure(&[e.clone(), c]));
                }
                col
            })
            .collect();
        Comodule::new(&self.coring, self.module.clone(), matrix_of_columns(target.dim(), cols))
    }
}

// ---------------------------------------------------------------------------
// Rings with enough idempotents built from blocks of maps

/// `⊕_{P,Q} B(P, Q)` for spaces of maps `B(P, Q) ⊆ Hom(P, Q)` closed under
/// composition, with multiplication given by composition.
#[derive(Clone, Debug)]
pub struct BlockRing {
    pub ring: IdemRing,
    /// `blocks[p][q]` holds maps `P → Q`.
    pub blocks: Vec<Vec<MapSpace>>,
    offsets: Vec<usize>,
    block_start: Vec<Vec<usize>>,
    basis: Vec<(usize, usize, usize)>,
}

impl BlockRing {
    pub fn new(dims: &[usize], blocks: Vec<Vec<MapSpace>>) -> Result<Self> {
        let n = dims.len();
        let mut basis = Vec::new();
        let mut block_start = vec![vec![0; n]; n];
        for p in 0..n {
            for q in 0..n {
                block_start[p][q] = basis.len();
                basis.extend((0..blocks[p][q].dim()).map(|l| (p, q, l)));
            }
        }
        let dim = basis.len();
        let mut products = Vec::with_capacity(dim * dim);
        for &(p, q, l) in &basis {
            let u = blocks[p][q].basis(l);
            for &(r, s, m) in &basis {
                let mut prod = zero_vec(dim);
                if s == p {
                    let uv = &u * &blocks[r][s].basis(m);
                    let c = blocks[r][q]
                        .coordinates(&uv)
                        .ok_or_else(|| Error::InvalidStructure("block maps are not closed under composition".into()))?;
                    prod[block_start[r][q]..block_start[r][q] + c.len()].clone_from_slice(&c);
                }
                products.push(prod);
            }
        }
        let mut unit = zero_vec(dim);
        let mut idempotents = Vec::with_capacity(n);
        for p in 0..n {
            let c = blocks[p][p]
                .coordinates(&Matrix::identity(dims[p]))
                .ok_or_else(|| Error::InvalidStructure("an identity map is missing from the ring".into()))?;
            let e = embed(&c, block_start[p][p], dim);
            axpy(&mut unit, &Rational::one(), &e);
            idempotents.push(e);
        }
        let algebra: AlgebraRef = Arc::new(Algebra::from_products(dim, products, unit)?);
        Ok(BlockRing {
            ring: IdemRing::new(algebra, idempotents)?,
            blocks,
            offsets: prefix_sums(dims),
            block_start,
            basis,
        })
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.ring.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn block_dim(&self, p: usize, q: usize) -> usize {
        self.blocks[p][q].dim()
    }

    pub fn total_dim(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    /// Basis element `k` as an operator on `⊕ P`.
    pub fn operator(&self, k: usize) -> Matrix {
        let (p, q, l) = self.basis[k];
        let mut m = Matrix::zeros(self.total_dim(), self.total_dim());
        m.set_block(self.offsets[q], self.offsets[p], &self.blocks[p][q].basis(l));
        m
    }

    /// Coordinates of a map `P → Q` placed in block `(p, q)`.
    pub fn element(&self, p: usize, q: usize, f: &Matrix) -> Option<Vec<Rational>> {
        let c = self.blocks[p][q].coordinates(f)?;
        Some(embed(&c, self.block_start[p][q], self.dim()))
    }

    pub fn identity_of(&self, p: usize) -> Vec<Rational> {
        self.ring.idempotents[p].clone()
    }

    /// `Σ = ⊕ P` as an `R`–`A` bimodule.
    pub fn sigma(&self, sigma: &RightModule) -> Result<Bimodule> {
        Bimodule::new(
            self.algebra().clone(),
            sigma.algebra.clone(),
            sigma.dim,
            (0..self.dim()).map(|k| self.operator(k)).collect(),
            sigma.action.clone(),
        )
    }

    /// `Σ† = ⊕ P*` as an `A`–`R` bimodule, `R` acting by precomposition.
    pub fn sigma_dagger(&self, duals: &[DualModule], a: &AlgebraRef) -> Result<Bimodule> {
        let ddims: Vec<usize> = duals.iter().map(|d| d.dim()).collect();
        let doff = prefix_sums(&ddims);
        let total = doff[duals.len()];
        let left = (0..a.dim())
            .map(|i| {
                let mut m = Matrix::zeros(total, total);
                for (p, d) in duals.iter().enumerate() {
                    m.set_block(doff[p], doff[p], &d.left_action()[i]);
                }
                m
            })
            .collect();
        let right = self
            .basis
            .iter()
            .map(|&(p, q, l)| {
                let u = self.blocks[p][q].basis(l);
                let mut m = Matrix::zeros(total, total);
                m.set_block(doff[p], doff[q], &dual_precompose(&duals[q], &duals[p], &u));
                m
            })
            .collect();
        Bimodule::new(a.clone(), self.algebra().clone(), total, left, right)
    }

    /// Left action of this ring on `other` by composition `u·s = u∘s`.
    pub fn compose_left_on(&self, other: &BlockRing) -> Vec<Matrix> {
        self.basis
            .iter()
            .map(|&(p, q, l)| {
                let u = self.blocks[p][q].basis(l);
                let cols = other
                    .basis
                    .iter()
                    .map(|&(r, s, m)| {
                        if s != p {
                            return zero_vec(other.dim());
                        }
                        other
                            .element(r, q, &(&u * &other.blocks[r][s].basis(m)))
                            .expect("composite lies in the target block")
                    })
                    .collect();
                matrix_of_columns(other.dim(), cols)
            })
            .collect()
    }

    /// Right action of this ring on `other` by composition `s·u = s∘u`.
    pub fn compose_right_on(&self, other: &BlockRing) -> Vec<Matrix> {
        self.basis
            .iter()
            .map(|&(p, q, l)| {
                let u = self.blocks[p][q].basis(l);
                let cols = other
                    .basis
                    .iter()
                    .map(|&(r, s, m)| {
                        if r != q {
                            return zero_vec(other.dim());
                        }
                        other
                            .element(p, s, &(&other.blocks[r][s].basis(m) * &u))
                            .expect("composite lies in the target block")
                    })
                    .collect();
                matrix_of_columns(other.dim(), cols)
            })
            .collect()
    }
}

/// `Q* → P*`, `ψ ↦ ψ∘u` for `u: P → Q`.
fn dual_precompose(from: &DualModule, to: &DualModule, u: &Matrix) -> Matrix {
    let cols = (0..from.dim())
        .map(|l| {
            to.coordinates(&(&from.functional(l) * u))
                .expect("precomposite is right-linear")
        })
        .collect();
    matrix_of_columns(to.dim(), cols)
}

// ---------------------------------------------------------------------------
// Families of comodules

#[derive(Clone, Debug)]
pub struct Member {
    pub name: String,
    pub comodule: Comodule,
    pub dual: DualModule,
    pub dual_basis: DualBasis,
}

/// A finite family of comodules, each finitely generated projective over `A`.
#[derive(Clone, Debug)]
pub struct ComoduleFamily {
    pub coring: Coring,
    pub members: Vec<Member>,
    /// `homs[p][q] = Hom^C(P, Q)`.
    pub homs: Vec<Vec<MapSpace>>,
    pub ring: BlockRing,
    pub sigma_comodule: Comodule,
    pub sigma: Bimodule,
    pub sigma_dagger: Bimodule,
    offsets: Vec<usize>,
    dual_offsets: Vec<usize>,
}

impl ComoduleFamily {
    pub fn new(coring: &Coring, members: Vec<(String, Comodule)>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidStructure("empty family".into()));
        }
        let mut out = Vec::with_capacity(members.len());
        for (name, comodule) in members {
            let report = crate::coring::check_comodule(coring, &comodule);
            if !report.ok {
                return Err(Error::InvalidStructure(format!(
                    "{name} is not a comodule: {}",
                    report.failures[0].axiom
                )));
            }
            let db = dual_basis(&comodule.module)
                .map_err(|_| Error::NotProjective(format!("{name} is not finitely generated projective")))?;
            out.push(Member {
                dual: dual_module(&comodule.module),
                dual_basis: db,
                name,
                comodule,
            });
        }
        let homs = out
            .iter()
            .map(|p| {
                out.iter()
                    .map(|q| comodule_hom(coring, &p.comodule, &q.comodule))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let dims: Vec<usize> = out.iter().map(|m| m.comodule.dim()).collect();
        let ring = BlockRing::new(&dims, homs.clone())?;
        let sigma_comodule = Comodule::direct_sum(coring, &out.iter().map(|m| m.comodule.clone()).collect::<Vec<_>>())?;
        let sigma = ring.sigma(&sigma_comodule.module)?;
        let duals: Vec<DualModule> = out.iter().map(|m| m.dual.clone()).collect();
        let sigma_dagger = ring.sigma_dagger(&duals, coring.algebra())?;
        let ddims: Vec<usize> = out.iter().map(|m| m.dual.dim()).collect();
        Ok(ComoduleFamily {
            coring: coring.clone(),
            offsets: prefix_sums(&dims),
            dual_offsets: prefix_sums(&ddims),
            members: out,
            homs,
            ring,
            sigma_comodule,
            sigma,
            sigma_dagger,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.members.iter().map(|m| m.name.clone()).collect()
    }

    pub fn comodules(&self) -> Vec<Comodule> {
        self.members.iter().map(|m| m.comodule.clone()).collect()
    }

    pub fn sigma_dim(&self) -> usize {
        self.offsets[self.len()]
    }

    pub fn dagger_dim(&self) -> usize {
        self.dual_offsets[self.len()]
    }

    /// `ι_P(v)` in `Σ`.
    pub fn iota(&self, p: usize, v: &[Rational]) -> Vec<Rational> {
        embed(v, self.offsets[p], self.sigma_dim())
    }

    /// `ι_{P*}(φ)` in `Σ†`, `φ` in coordinates of `P*`.
    pub fn iota_dual(&self, p: usize, phi: &[Rational]) -> Vec<Rational> {
        embed(phi, self.dual_offsets[p], self.dagger_dim())
    }

    pub fn locate_sigma(&self, i: usize) -> (usize, usize) {
        locate(&self.offsets, i)
    }

    pub fn locate_dagger(&self, i: usize) -> (usize, usize) {
        locate(&self.dual_offsets, i)
    }

    fn dual_basis_coords(&self, p: usize) -> Vec<(Vec<Rational>, Vec<Rational>)> {
        let m = &self.members[p];
        m.dual_basis
            .elements
            .iter()
            .zip(&m.dual_basis.functionals)
            .map(|(e, f)| (e.clone(), m.dual.coordinates(f).expect("dual basis functional")))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Coproduct coring, coideal and quotient

#[derive(Clone, Debug)]
pub struct CoproductCoring {
    pub coring: Coring,
    pub summands: Vec<ComatrixCoring>,
    offsets: Vec<usize>,
}

impl CoproductCoring {
    pub fn offset(&self, p: usize) -> usize {
        self.offsets[p]
    }

    /// Each member as a comodule with coaction landing in its own summand.
    pub fn comodule(&self, p: usize) -> Result<Comodule> {
        let local = self.summands[p].comodule()?;
        let target = BalancedTensor::new(vec![local.module.as_bimodule(), self.coring.bimodule.clone()])?;
        let off = self.offsets[p];
        let cols = (0..local.dim())
            .map(|j| {
                let terms: Vec<(Vec<usize>, Rational)> = local
                    .tensor()
                    .lift_terms(&local.coaction.column(j))
                    .into_iter()
                    .map(|(idx, x)| (vec![idx[0], idx[1] + off], x))
                    .collect();
                target.project_terms(&terms)
            })
            .collect();
        Comodule::new(
            &self.coring,
            local.module.clone(),
            matrix_of_columns(target.dim(), cols),
        )
    }
}

pub fn coproduct_coring(fam: &ComoduleFamily) -> Result<CoproductCoring> {
    let summands = fam
        .members
        .iter()
        .enumerate()
        .map(|(p, m)| {
            let ops = OperatorAlgebra::new(fam.homs[p][p].clone())?;
            comatrix_coring(&m.comodule.module, &ops, &m.dual_basis)
        })
        .collect::<Result<Vec<_>>>()?;
    let coring = Coring::direct_sum(&summands.iter().map(|s| s.coring.clone()).collect::<Vec<_>>())?;
    let offsets = prefix_sums(&summands.iter().map(|s| s.coring.dim()).collect::<Vec<_>>());
    Ok(CoproductCoring {
        coring,
        summands,
        offsets,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoidealCertificate {
    pub sub_bimodule: bool,
    pub counit_vanishes: bool,
    pub comult_vanishes: bool,
}

impl CoidealCertificate {
    pub fn passes(&self) -> bool {
        self.sub_bimodule && self.counit_vanishes && self.comult_vanishes
    }
}

/// The span of `φ ⊗ t(p) − φ∘t ⊗ p` over `t ∈ Hom^C(P, Q)`.
pub fn coideal_j(fam: &ComoduleFamily, cop: &CoproductCoring) -> Subspace {
    let total = cop.coring.dim();
    let mut gens = Vec::new();
    for p in 0..fam.len() {
        for q in 0..fam.len() {
            let sp = &cop.summands[p];
            let sq = &cop.summands[q];
            for t in fam.homs[p][q].basis_maps() {
                let pre = dual_precompose(&sq.dual, &sp.dual, &t);
                for phi in 0..sq.dual.dim() {
                    for j in 0..sp.module.dim {
                        let left = sq.tensor.project_pure(&[unit_vec(sq.dual.dim(), phi), t.column(j)]);
                        let right = sp.tensor.project_pure(&[pre.column(phi), unit_vec(sp.module.dim, j)]);
                        let mut g = embed(&left, cop.offsets[q], total);
                        axpy(&mut g, &-Rational::one(), &embed(&right, cop.offsets[p], total));
                        gens.push(g);
                    }
                }
            }
        }
    }
    Subspace::span(total, &gens)
}

#[derive(Clone, Debug)]
pub struct QuotientCoring {
    pub coring: Coring,
    pub projection: QuotientSpace,
    pub coideal: Subspace,
    pub certificate: CoidealCertificate,
    /// Members as comodules over the quotient.
    pub comodules: Vec<Comodule>,
}

impl QuotientCoring {
    pub fn pi(&self) -> Matrix {
        self.projection.projection()
    }
}

pub fn quotient_coring(fam: &ComoduleFamily, cop: &CoproductCoring) -> Result<QuotientCoring> {
    let j = coideal_j(fam, cop);
    let big = &cop.coring;
    let sub_bimodule = j.basis_vectors().iter().all(|v| {
        big.bimodule
            .left_action
            .iter()
            .chain(&big.bimodule.right_action)
            .all(|m| j.contains(&m.mul_vec(v)))
    });
    let counit_vanishes = j
        .basis_vectors()
        .iter()
        .all(|v| big.epsilon(v).iter().all(|x| x.is_zero()));
    let (coring, projection) = big.quotient(&j)?;
    let pi = projection.projection();
    let pipi = BalancedTensor::tensor_map(big.square(), coring.square(), &[pi.clone(), pi.clone()]);
    let comult_vanishes = j
        .basis_vectors()
        .iter()
        .all(|v| pipi.mul_vec(&big.delta(v)).iter().all(|x| x.is_zero()));
    let comodules = (0..fam.len())
        .map(|p| {
            let local = cop.summands[p].comodule()?;
            let target = BalancedTensor::new(vec![local.module.as_bimodule(), coring.bimodule.clone()])?;
            let off = cop.offsets[p];
            let cols = (0..local.dim())
                .map(|jx| {
                    let mut col = zero_vec(target.dim());
                    for (idx, x) in local.tensor().lift_terms(&local.coaction.column(jx)) {
                        let image = sparse_to_dense(projection.dim(), &projection.projection_column(idx[1] + off));
                        axpy(
                            &mut col,
                            &x,
                            &target.project_pure(&[unit_vec(local.dim(), idx[0]), image]),
                        );
                    }
                    col
                })
                .collect();
            Comodule::new(&coring, local.module.clone(), matrix_of_columns(target.dim(), cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuotientCoring {
        coring,
        projection,
        coideal: j,
        certificate: CoidealCertificate {
            sub_bimodule,
            counit_vanishes,
            comult_vanishes,
        },
        comodules,
    })
}

// ---------------------------------------------------------------------------
// Infinite comatrix coring

#[derive(Clone, Debug)]
pub struct InfiniteComatrix {
    /// `Σ† ⊗_R Σ`.
    pub coring: Coring,
    pub tensor: BalancedTensor,
    /// `𝔓 → Σ† ⊗_R Σ`, `φ ⊗ p ↦ ι(φ) ⊗ ι(p)`.
    pub gamma1: Matrix,
    /// `Σ† ⊗_R Σ → Σ* ⊗_T Σ`, `ι(φ) ⊗ ι(p) ↦ φπ ⊗ ι(p)`.
    pub gamma2: Matrix,
    /// `𝔓 → Σ* ⊗_T Σ`, computed directly.
    pub gamma: Matrix,
    /// `Σ* ⊗_T Σ` with `T = End^C(Σ)`.
    pub endo: ComatrixCoring,
}

pub fn infinite_comatrix(fam: &ComoduleFamily, cop: &CoproductCoring) -> Result<InfiniteComatrix> {
    let tensor = BalancedTensor::new(vec![fam.sigma_dagger.clone(), fam.sigma.clone()])?;
    let bimodule = tensor.as_bimodule();
    let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
    let a = fam.coring.algebra();
    let bases: Vec<_> = (0..fam.len()).map(|p| fam.dual_basis_coords(p)).collect();
    let mut comult = Vec::with_capacity(tensor.dim());
    let mut counit = Vec::with_capacity(tensor.dim());
    for b in 0..tensor.dim() {
        let idx = tensor.multi_index(b);
        let (p, k) = fam.locate_dagger(idx[0]);
        let (q, j) = fam.locate_sigma(idx[1]);
        let mut col = zero_vec(square.dim());
        let mut eps = zero_vec(a.dim());
        if p == q {
            let pd = fam.members[p].comodule.dim();
            for (e, s) in &bases[p] {
                let u = tensor.project_pure(&[unit_vec(fam.dagger_dim(), idx[0]), fam.iota(p, e)]);
                let v = tensor.project_pure(&[fam.iota_dual(p, s), fam.iota(p, &unit_vec(pd, j))]);
                axpy(&mut col, &Rational::one(), &square.project_pure(&[u, v]));
            }
            eps = fam.members[p].dual.functional(k).column(j);
        }
        comult.push(col);
        counit.push(eps);
    }
    let coring = Coring::new(
        bimodule,
        matrix_of_columns(square.dim(), comult),
        matrix_of_columns(a.dim(), counit),
    )?;

    let gamma1 = {
        let cols = (0..cop.coring.dim())
            .map(|c| {
                let (p, local) = locate(&cop.offsets, c);
                let idx = cop.summands[p].tensor.multi_index(local);
                let pd = fam.members[p].comodule.dim();
                let dd = fam.members[p].dual.dim();
                tensor.project_pure(&[
                    fam.iota_dual(p, &unit_vec(dd, idx[0])),
                    fam.iota(p, &unit_vec(pd, idx[1])),
                ])
            })
            .collect();
        matrix_of_columns(tensor.dim(), cols)
    };

    let sigma_module = &fam.sigma_comodule.module;
    let t_maps = comodule_hom(&fam.coring, &fam.sigma_comodule, &fam.sigma_comodule)?;
    let t = OperatorAlgebra::new(t_maps)?;
    let endo = comatrix_coring(sigma_module, &t, &dual_basis(sigma_module)?)?;
    // φ ∈ P* composed with the projection Σ → P, in coordinates of Σ*
    let phi_pi = |p: usize, phi: &[Rational]| -> Vec<Rational> {
        let m = &fam.members[p];
        let f = m.dual.space.combine(phi);
        let mut full = Matrix::zeros(a.dim(), fam.sigma_dim());
        full.set_block(0, fam.offsets[p], &f);
        endo.dual.coordinates(&full).expect("φπ is right-linear")
    };
    let gamma2 = {
        let cols = (0..tensor.dim())
            .map(|b| {
                let idx = tensor.multi_index(b);
                let (p, k) = fam.locate_dagger(idx[0]);
                let dd = fam.members[p].dual.dim();
                endo.tensor
                    .project_pure(&[phi_pi(p, &unit_vec(dd, k)), unit_vec(fam.sigma_dim(), idx[1])])
            })
            .collect();
        matrix_of_columns(endo.tensor.dim(), cols)
    };
    let gamma = {
        let cols = (0..cop.coring.dim())
            .map(|c| {
                let (p, local) = locate(&cop.offsets, c);
                let idx = cop.summands[p].tensor.multi_index(local);
                let pd = fam.members[p].comodule.dim();
                let dd = fam.members[p].dual.dim();
                endo.tensor
                    .project_pure(&[phi_pi(p, &unit_vec(dd, idx[0])), fam.iota(p, &unit_vec(pd, idx[1]))])
            })
            .collect();
        matrix_of_columns(endo.tensor.dim(), cols)
    };
    Ok(InfiniteComatrix {
        coring,
        tensor,
        gamma1,
        gamma2,
        gamma,
        endo,
    })
}

impl InfiniteComatrix {
    /// Member `p` as a comodule: `p ↦ Σ e_α ⊗ ι(e*_α) ⊗ ι(p)`.
    pub fn comodule(&self, fam: &ComoduleFamily, p: usize) -> Result<Comodule> {
        let m = &fam.members[p];
        let target = BalancedTensor::new(vec![m.comodule.module.as_bimodule(), self.coring.bimodule.clone()])?;
        let pd = m.comodule.dim();
        let cols = (0..pd)
            .map(|j| {
                let mut col = zero_vec(target.dim());
                for (e, s) in fam.dual_basis_coords(p) {
                    let x = self
                        .tensor
                        .project_pure(&[fam.iota_dual(p, &s), fam.iota(p, &unit_vec(pd, j))]);
                    axpy(&mut col, &Rational::one(), &target.project_pure(&[e, x]));
                }
                col
            })
            .collect();
        Comodule::new(
            &self.coring,
            m.comodule.module.clone(),
            matrix_of_columns(target.dim(), cols),
        )
    }

    /// `𝔯 → Σ† ⊗_R Σ` induced by `Γ₁` on the quotient.
    pub fn induced_from_quotient(&self, q: &QuotientCoring) -> Matrix {
        &self.gamma1 * &q.projection.section()
    }
}

/// Bijectivity plus the coring homomorphism axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCheck {
    pub bijective: bool,
    pub coring_hom: bool,
}

impl IsoCheck {
    pub fn holds(&self) -> bool {
        self.bijective && self.coring_hom
    }
}

pub fn check_iso(c: &Coring, d: &Coring, f: &Matrix) -> IsoCheck {
    IsoCheck {
        bijective: f.is_square() && f.rows() == d.dim() && f.is_invertible(),
        coring_hom: is_coring_hom(c, d, f).ok,
    }
}

/// The three presentations `𝔯`, `Σ†⊗_RΣ`, `Σ*⊗_TΣ` and the maps between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleReport {
    pub gamma1_surjective: bool,
    pub gamma1_kernel_is_j: bool,
    pub commutes: bool,
    pub quotient_to_infinite: IsoCheck,
    pub infinite_to_endo: IsoCheck,
    pub quotient_to_endo: IsoCheck,
}

impl TriangleReport {
    pub fn holds(&self) -> bool {
        self.gamma1_surjective
            && self.gamma1_kernel_is_j
            && self.commutes
            && self.quotient_to_infinite.holds()
            && self.infinite_to_endo.holds()
            && self.quotient_to_endo.holds()
    }
}

pub fn triangle_report(q: &QuotientCoring, inf: &InfiniteComatrix) -> TriangleReport {
    let section = q.projection.section();
    let r_to_x = &inf.gamma1 * &section;
    let r_to_y = &inf.gamma * &section;
    TriangleReport {
        gamma1_surjective: inf.gamma1.rank() == inf.coring.dim(),
        gamma1_kernel_is_j: kernel_basis(&inf.gamma1) == q.coideal,
        commutes: &inf.gamma2 * &inf.gamma1 == inf.gamma,
        quotient_to_infinite: check_iso(&q.coring, &inf.coring, &r_to_x),
        infinite_to_endo: check_iso(&inf.coring, &inf.endo.coring, &inf.gamma2),
        quotient_to_endo: check_iso(&q.coring, &inf.endo.coring, &r_to_y),
    }
}

// ---------------------------------------------------------------------------
// Canonical map

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanReport {
    pub can_matrix: Matrix,
    pub is_coring_hom: bool,
    pub is_bijective: bool,
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
}

/// `can(ι(φ) ⊗ ι(q)) = (φ ⊗ C) ρ_Q(q)`.
pub fn canonical_map(fam: &ComoduleFamily, inf: &InfiniteComatrix) -> CanReport {
    let c = &fam.coring;
    let cols = (0..inf.tensor.dim())
        .map(|b| {
            let idx = inf.tensor.multi_index(b);
            let (p, k) = fam.locate_dagger(idx[0]);
            let (q, j) = fam.locate_sigma(idx[1]);
            let mut col = zero_vec(c.dim());
            if p == q {
                let m = &fam.members[q].comodule;
                let phi = fam.members[p].dual.functional(k);
                for (t, x) in m.tensor().lift_terms(&m.coaction.column(j)) {
                    let img = c.bimodule.left_of(&phi.column(t[0])).mul_vec(&unit_vec(c.dim(), t[1]));
                    axpy(&mut col, &x, &img);
                }
            }
            col
        })
        .collect();
    let can = matrix_of_columns(c.dim(), cols);
    let rank = can.rank();
    CanReport {
        is_coring_hom: is_coring_hom(&inf.coring, c, &can).ok,
        is_bijective: rank == c.dim() && rank == inf.coring.dim(),
        rank,
        source_dim: inf.coring.dim(),
        target_dim: c.dim(),
        can_matrix: can,
    }
}

/// `ρ_P = (P ⊗ can) ∘ ϱ_P` for every member.
pub fn can_factorizes(fam: &ComoduleFamily, inf: &InfiniteComatrix, can: &CanReport) -> Result<bool> {
    for p in 0..fam.len() {
        let varrho = inf.comodule(fam, p)?;
        let rho = &fam.members[p].comodule;
        let id = Matrix::identity(rho.dim());
        let map = BalancedTensor::tensor_map(varrho.tensor(), rho.tensor(), &[id, can.can_matrix.clone()]);
        if &map * &varrho.coaction != rho.coaction {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Endomorphism ring of the family over the infinite comatrix coring

#[derive(Clone, Debug)]
pub struct EndomorphismBar {
    pub ring: BlockRing,
    /// The same blocks computed from the balanced condition in `S ⊗_R Σ`.
    pub agrees_with_balanced_condition: bool,
    pub contains_r: bool,
    pub lambda_bijective: bool,
    /// `Σ† ⊗_{R̄} Σ → Σ† ⊗_R Σ` is bijective.
    pub can_iso: bool,
    pub comodules_valid: bool,
}

/// `S = ⊕ Hom_A(P, Q)` as a block ring.
pub fn full_hom_ring(fam: &ComoduleFamily) -> Result<BlockRing> {
    let blocks = fam
        .members
        .iter()
        .map(|p| {
            fam.members
                .iter()
                .map(|q| hom_right(&p.comodule.module, &q.comodule.module))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let dims: Vec<usize> = fam.members.iter().map(|m| m.comodule.dim()).collect();
    BlockRing::new(&dims, blocks)
}

pub fn endomorphism_ring_bar(fam: &ComoduleFamily, inf: &InfiniteComatrix, s: &BlockRing) -> Result<EndomorphismBar> {
    let n = fam.len();
    let varrho = (0..n).map(|p| inf.comodule(fam, p)).collect::<Result<Vec<_>>>()?;
    let comodules_valid = varrho.iter().all(|m| crate::coring::check_comodule(&inf.coring, m).ok);
    let blocks = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| comodule_hom(&inf.coring, &varrho[p], &varrho[q]))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    // f ⊗_R ι_P(p) = 1_Q ⊗_R ι_Q(f(p)) inside S ⊗_R Σ
    let q_rational = rationals();
    let s_right = Bimodule::new(
        q_rational.clone(),
        fam.ring.algebra().clone(),
        s.dim(),
        vec![Matrix::identity(s.dim())],
        fam.ring.compose_right_on(s),
    )?;
    let st = BalancedTensor::new(vec![s_right, fam.sigma.clone()])?;
    let mut agrees = true;
    for p in 0..n {
        for q in 0..n {
            let pd = fam.members[p].comodule.dim();
            let full = &s.blocks[p][q];
            let columns: Vec<Vec<Rational>> = full
                .basis_maps()
                .iter()
                .map(|f| {
                    let sf = s.element(p, q, f).expect("block element");
                    let one_q = s.identity_of(q);
                    let mut col = Vec::with_capacity(pd * st.dim());
                    for j in 0..pd {
                        let lhs = st.project_pure(&[sf.clone(), fam.iota(p, &unit_vec(pd, j))]);
                        let rhs = st.project_pure(&[one_q.clone(), fam.iota(q, &f.column(j))]);
                        col.extend(crate::exactlin::sub_vec(&lhs, &rhs));
                    }
                    col
                })
                .collect();
            let coords = kernel_of_columns(pd * st.dim(), &columns);
            let balanced = full.restrict(&coords);
            if balanced.subspace() != blocks[p][q].subspace() {
                agrees = false;
            }
        }
    }

    let dims: Vec<usize> = fam.members.iter().map(|m| m.comodule.dim()).collect();
    let contains_r = (0..n).all(|p| (0..n).all(|q| fam.homs[p][q].subspace().is_subspace_of(blocks[p][q].subspace())));
    let ring = BlockRing::new(&dims, blocks)?;
    let lambda_bijective = contains_r && ring.dim() == fam.ring.dim();
    let duals: Vec<DualModule> = fam.members.iter().map(|m| m.dual.clone()).collect();
    let bar_tensor = BalancedTensor::new(vec![
        ring.sigma_dagger(&duals, fam.coring.algebra())?,
        ring.sigma(&fam.sigma_comodule.module)?,
    ])?;
    // the surjection induced by R ⊆ R̄; the lemma's map is its inverse
    let to_bar = {
        let cols = (0..inf.tensor.dim())
            .map(|b| {
                let idx = inf.tensor.multi_index(b);
                bar_tensor.project_pure(&[unit_vec(fam.dagger_dim(), idx[0]), unit_vec(fam.sigma_dim(), idx[1])])
            })
            .collect();
        matrix_of_columns(bar_tensor.dim(), cols)
    };
    let can_iso = to_bar.is_square() && to_bar.is_invertible();
    Ok(EndomorphismBar {
        ring,
        agrees_with_balanced_condition: agrees,
        contains_r,
        lambda_bijective,
        can_iso,
        comodules_valid,
    })
}

/// `S ≅ Σ ⊗_A Σ†` via `x ⊗ φ ↦ (y ↦ x·φ(y))`.
pub fn s_tensor_iso(fam: &ComoduleFamily, s: &BlockRing) -> Result<bool> {
    let t = BalancedTensor::new(vec![fam.sigma.clone(), fam.sigma_dagger.clone()])?;
    let cols = (0..t.dim())
        .map(|b| {
            let idx = t.multi_index(b);
            let (q, i) = fam.locate_sigma(idx[0]);
            let (p, k) = fam.locate_dagger(idx[1]);
            let mq = &fam.members[q].comodule.module;
            let phi = fam.members[p].dual.functional(k);
            let pd = fam.members[p].comodule.dim();
            let x = unit_vec(mq.dim, i);
            let map_cols: Vec<Vec<Rational>> = (0..pd).map(|c| mq.act(&x, &phi.column(c))).collect();
            let f = Matrix::from_columns(mq.dim, &map_cols);
            s.element(p, q, &f).expect("x·φ(−) is right-linear")
        })
        .collect();
    let m = matrix_of_columns(s.dim(), cols);
    Ok(m.is_square() && m.is_invertible())
}

// ---------------------------------------------------------------------------
// Descent

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub name: String,
    pub generated: bool,
    /// Every member lifts through each colinear surjection among probes and
    /// members onto this probe.
    pub lifting: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DescentVerdict {
    /// The conditions hold: comodules are modules over `R`.
    Equivalence,
    /// The conditions fail.
    NoEquivalence,
    /// The probe certificate holds but the structural conditions fail.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentReport {
    pub coring_flat: bool,
    pub members_projective: bool,
    pub can_bijective: bool,
    pub can_rank: usize,
    pub coring_dim: usize,
    pub sigma_flatness: FlatnessReport,
    pub s_flatness: FlatnessReport,
    pub s_tensor_iso: bool,
    pub infinite_flat: bool,
    pub r_dim: usize,
    pub r_bar_dim: usize,
    pub r_in_r_bar: bool,
    pub lambda_bijective: bool,
    pub can_iso_lemma: bool,
    pub r_bar_agrees: bool,
    pub comodules_valid: bool,
    pub can_coring_hom: bool,
    pub probes: Vec<ProbeReport>,
    /// Flatness, generation of every probe and the lifting certificates.
    pub generating_certificate: bool,
    /// Projectivity, `can` bijective, `Σ` faithfully flat over `R`.
    pub faithfully_flat_condition: bool,
    /// Flatness, projectivity, `can` bijective, `S` faithfully flat over `R`.
    pub s_condition: bool,
    pub verdict: DescentVerdict,
    pub violations: Vec<String>,
}

impl DescentReport {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }

    /// Re-derives every implication that must hold between the flags.
    pub fn theorem_violations(&self) -> Vec<String> {
        let mut violations = Vec::new();
        let mut rule = |holds: bool, what: &str| {
            if !holds {
                violations.push(what.to_string());
            }
        };
        let ffc = self.faithfully_flat_condition;
        let sigma_ff = self.sigma_flatness.faithfully_flat;
        rule(
            !ffc || self.generating_certificate,
            "faithful flatness without the generating certificate",
        );
        rule(
            ffc == self.s_condition,
            "the Σ and S faithful flatness conditions disagree",
        );
        rule(!ffc || self.coring_flat, "bijective can with a non-flat coring");
        rule(
            !sigma_ff || self.lambda_bijective,
            "Σ faithfully flat but λ not bijective",
        );
        rule(
            sigma_ff == (self.infinite_flat && self.s_flatness.faithfully_flat),
            "Σ faithful flatness disagrees with flatness of Σ†⊗Σ plus S faithful flatness",
        );
        rule(self.r_in_r_bar, "R is not contained in R̄");
        rule(self.can_iso_lemma, "Σ†⊗_R̄Σ → Σ†⊗_RΣ is not bijective");
        rule(self.r_bar_agrees, "the two computations of R̄ disagree");
        rule(self.comodules_valid, "a member fails the Σ†⊗Σ comodule axioms");
        rule(self.s_tensor_iso, "S is not isomorphic to Σ⊗_AΣ†");
        rule(self.can_coring_hom, "can is not a coring homomorphism");
        violations
    }
}

fn left_flat(c: &Bimodule) -> Result<bool> {
    let r = IdemRing::unital(c.left.clone());
    let m = LeftModule::new(c.left.clone(), c.dim, c.left_action.clone())?;
    Ok(is_projective(&r, &m)?.0)
}

/// A deterministic generic element of a map space.
fn generic_map(space: &MapSpace) -> Matrix {
    let coords: Vec<Rational> = (0..space.dim())
        .map(|k| Rational::from_integer((k as i64 + 1).into()))
        .collect();
    space.combine(&coords)
}

fn lifting_certificate(c: &Coring, members: &[Comodule], target: &Comodule, sources: &[Comodule]) -> Result<bool> {
    for n in sources {
        let onto = generic_map(&comodule_hom(c, n, target)?);
        if target.dim() == 0 || onto.rank() != target.dim() {
            continue;
        }
        for p in members {
            let lifts = comodule_hom(c, p, n)?;
            let through: Vec<Matrix> = lifts.basis_maps().iter().map(|g| &onto * g).collect();
            let image = MapSpace::spanned_by(target.dim(), p.dim(), &through);
            let needed = comodule_hom(c, p, target)?;
            if !needed.basis_maps().iter().all(|f| image.contains(f)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Everything computed from a family, shared by the reports.
#[derive(Clone, Debug)]
pub struct FamilyAnalysis {
    pub coproduct: CoproductCoring,
    pub quotient: QuotientCoring,
    pub infinite: InfiniteComatrix,
    pub can: CanReport,
}

pub fn analyze(fam: &ComoduleFamily) -> Result<FamilyAnalysis> {
    let coproduct = coproduct_coring(fam)?;
    let quotient = quotient_coring(fam, &coproduct)?;
    let infinite = infinite_comatrix(fam, &coproduct)?;
    let can = canonical_map(fam, &infinite);
    Ok(FamilyAnalysis {
        coproduct,
        quotient,
        infinite,
        can,
    })
}

pub fn descent_report(
    fam: &ComoduleFamily,
    an: &FamilyAnalysis,
    probes: &[(String, Comodule)],
) -> Result<DescentReport> {
    let c = &fam.coring;
    let coring_flat = left_flat(&c.bimodule)?;
    let members_projective = fam.members.iter().all(|m| m.dual_basis.check(&m.comodule.module));
    let sigma_left = LeftModule::new(fam.ring.algebra().clone(), fam.sigma.dim, fam.sigma.left_action.clone())?;
    let sigma_flatness = is_faithfully_flat(&fam.ring.ring, &sigma_left)?;
    let s = full_hom_ring(fam)?;
    let s_left = LeftModule::new(fam.ring.algebra().clone(), s.dim(), fam.ring.compose_left_on(&s))?;
    let s_flatness = is_faithfully_flat(&fam.ring.ring, &s_left)?;
    let s_iso = s_tensor_iso(fam, &s)?;
    let infinite_flat = left_flat(&an.infinite.coring.bimodule)?;
    let bar = endomorphism_ring_bar(fam, &an.infinite, &s)?;

    let members = fam.comodules();
    let mut sources: Vec<Comodule> = probes.iter().map(|(_, m)| m.clone()).collect();
    sources.extend(members.iter().cloned());
    let probe_reports = probes
        .iter()
        .map(|(name, m)| {
            Ok(ProbeReport {
                name: name.clone(),
                generated: generated_part(c, m, &members)?.is_full(),
                lifting: lifting_certificate(c, &members, m, &sources)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let can_bijective = an.can.is_bijective;
    let generating_certificate =
        coring_flat && members_projective && probe_reports.iter().all(|p| p.generated && p.lifting);
    let faithfully_flat_condition = members_projective && can_bijective && sigma_flatness.faithfully_flat;
    let s_condition = coring_flat && members_projective && can_bijective && s_flatness.faithfully_flat;

    let verdict = if faithfully_flat_condition {
        DescentVerdict::Equivalence
    } else if generating_certificate {
        DescentVerdict::Inconclusive
    } else {
        DescentVerdict::NoEquivalence
    };
    let mut report = DescentReport {
        coring_flat,
        members_projective,
        can_bijective,
        can_rank: an.can.rank,
        coring_dim: c.dim(),
        sigma_flatness,
        s_flatness,
        s_tensor_iso: s_iso,
        infinite_flat,
        r_dim: fam.ring.dim(),
        r_bar_dim: bar.ring.dim(),
        r_in_r_bar: bar.contains_r,
        lambda_bijective: bar.lambda_bijective,
        can_iso_lemma: bar.can_iso,
        r_bar_agrees: bar.agrees_with_balanced_condition,
        comodules_valid: bar.comodules_valid,
        can_coring_hom: an.can.is_coring_hom,
        probes: probe_reports,
        generating_certificate,
        faithfully_flat_condition,
        s_condition,
        verdict,
        violations: Vec::new(),
    };
    report.violations = report.theorem_violations();
    Ok(report)
}

// ---------------------------------------------------------------------------
// Grouplike families

/// Family `{[g]A}` together with `𝔯(G)` built from Sweedler corings.
#[derive(Clone, Debug)]
pub struct GrouplikeFamily {
    pub family: ComoduleFamily,
    /// `⊕_g A ⊗_{A_{g,g}} A` modulo the relations, and the quotient map.
    pub coring: Coring,
    pub projection: QuotientSpace,
    /// `𝔯(G) → Σ† ⊗_R Σ`.
    pub to_infinite: Matrix,
    /// `R ≅ ⊕ A_{g,h}` via `f ↦ f(1)` on every block.
    pub ring_identified: bool,
}

pub fn grouplike_family(c: &Coring, gs: &[(String, Grouplike)]) -> Result<(GrouplikeFamily, FamilyAnalysis)> {
    let a = c.algebra();
    let n = a.dim();
    let members = gs
        .iter()
        .map(|(name, g)| Ok((name.clone(), comodule_from_grouplike(c, g)?)))
        .collect::<Result<Vec<_>>>()?;
    let family = ComoduleFamily::new(c, members)?;
    let mut ring_identified = true;
    let mut a_gh = vec![vec![Subspace::zero(n); gs.len()]; gs.len()];
    for (p, (_, g)) in gs.iter().enumerate() {
        for (q, (_, h)) in gs.iter().enumerate() {
            let gh = grouplike_hom_ring(c, g, h)?;
            ring_identified &= gh.identified && gh.homs.subspace() == family.homs[p][q].subspace();
            a_gh[p][q] = gh.subspace;
        }
    }
    let sweedlers = (0..gs.len())
        .map(|p| sweedler_coring(a, &a_gh[p][p]))
        .collect::<Result<Vec<_>>>()?;
    let sum = Coring::direct_sum(&sweedlers.iter().map(|s| s.coring.clone()).collect::<Vec<_>>())?;
    let offsets = prefix_sums(&sweedlers.iter().map(|s| s.coring.dim()).collect::<Vec<_>>());
    // the Sweedler tensor of summand p, rebuilt for projecting pure tensors
    let tensors = sweedlers
        .iter()
        .map(|s| {
            let basis = s.inclusion.basis_vectors();
            BalancedTensor::new(vec![
                Bimodule::new(
                    a.clone(),
                    s.subalgebra.clone(),
                    n,
                    (0..n).map(|i| a.left_regular(i).clone()).collect(),
                    basis.iter().map(|x| a.right_mult(x)).collect(),
                )?,
                Bimodule::new(
                    s.subalgebra.clone(),
                    a.clone(),
                    n,
                    basis.iter().map(|x| a.left_mult(x)).collect(),
                    (0..n).map(|i| a.right_regular(i).clone()).collect(),
                )?,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rels = Vec::new();
    for p in 0..gs.len() {
        for q in 0..gs.len() {
            for b in a_gh[p][q].basis_vectors() {
                for i in 0..n {
                    for j in 0..n {
                        // a ⊗_{A_{h,h}} b a′ − a b ⊗_{A_{g,g}} a′
                        let ei = unit_vec(n, i);
                        let ej = unit_vec(n, j);
                        let left = tensors[q].project_pure(&[ei.clone(), a.mul(&b, &ej)]);
                        let right = tensors[p].project_pure(&[a.mul(&ei, &b), ej]);
                        let mut g = embed(&left, offsets[q], sum.dim());
                        axpy(&mut g, &-Rational::one(), &embed(&right, offsets[p], sum.dim()));
                        rels.push(g);
                    }
                }
            }
        }
    }
    let rel_space = Subspace::span(sum.dim(), &rels);
    let (coring, projection) = sum.quotient(&rel_space)?;
    let analysis = analyze(&family)?;
    let inf = &analysis.infinite;
    let sum_to_x = {
        let cols = (0..sum.dim())
            .map(|col| {
                let (p, local) = locate(&offsets, col);
                let idx = tensors[p].multi_index(local);
                let m = &family.members[p];
                let phi = m
                    .dual
                    .coordinates(&a.left_mult(&unit_vec(n, idx[0])))
                    .expect("left multiplication is right-linear");
                inf.tensor
                    .project_pure(&[family.iota_dual(p, &phi), family.iota(p, &unit_vec(n, idx[1]))])
            })
            .collect();
        matrix_of_columns(inf.tensor.dim(), cols)
    };
    let to_infinite = &sum_to_x * &projection.section();
    Ok((
        GrouplikeFamily {
            family,
            coring,
            projection,
            to_infinite,
            ring_identified,
        },
        analysis,
    ))
}

/// Checks that the dual-basis comultiplication is independent of the choice.
pub fn check_compatible(p: &RightModule, t: &OperatorAlgebra, first: &DualBasis, second: &DualBasis) -> Result<bool> {
    let a = comatrix_coring(p, t, first)?;
    let b = comatrix_coring(p, t, second)?;
    Ok(a.coring.comult == b.coring.comult && a.coring.counit == b.coring.counit)
}

/// Validation of all constructed corings of a family.
pub fn check_family_corings(fam: &ComoduleFamily, an: &FamilyAnalysis) -> ValidationReport {
    let mut report = ValidationReport::new();
    let label = |r: ValidationReport, what: &str| {
        let mut out = ValidationReport::new();
        for f in r.failures {
            out.fail(format!("{what}: {}", f.axiom), f.witness);
        }
        out
    };
    report.merge(label(
        crate::coring::check_coring(&an.coproduct.coring),
        "coproduct coring",
    ));
    report.merge(label(
        crate::coring::check_coring(&an.quotient.coring),
        "quotient coring",
    ));
    report.merge(label(
        crate::coring::check_coring(&an.infinite.coring),
        "infinite comatrix coring",
    ));
    report.merge(label(
        crate::coring::check_coring(&an.infinite.endo.coring),
        "endomorphism comatrix coring",
    ));
    for (s, m) in an.coproduct.summands.iter().zip(&fam.members) {
        report.merge(label(
            crate::coring::check_coring(&s.coring),
            &format!("comatrix coring of {}", m.name),
        ));
    }
    report
}
