//! Group-graded algebras, the coring `AG`, and the graded module dictionary.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraRef, BalancedTensor, Bimodule, RightModule};
use crate::comatrix::{grouplike_family, FamilyAnalysis, GrouplikeFamily};
use crate::coring::{Comodule, Coring, Grouplike};
use crate::error::{Error, Result};
use crate::exactlin::{unit_vec, zero_vec, Matrix, Rational, Subspace};
use num_traits::Zero;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub names: Vec<String>,
    /// `table[a][b]` is the index of `ab`.
    pub table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl Group {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidStructure(
                "multiplication table must be square over the element list".into(),
            ));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidStructure(format!(
                            "not associative on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidStructure("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidStructure(format!("{} has no inverse", names[a])))?;
            inverses.push(inv);
        }
        Ok(Group {
            names,
            table,
            identity,
            inverses,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_n` with elements named `e, g, g^2, ...`; for `n = 2` the generator is `s`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n)
            .map(|k| match (k, n) {
                (0, _) => "e".to_string(),
                (1, 2) => "s".to_string(),
                (1, _) => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(names, table).expect("cyclic group")
    }

    /// `Z_2 × Z_2` with elements `e, a, b, ab`.
    pub fn klein() -> Self {
        let names = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        let table = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
        Self::new(names, table).expect("klein group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        !h.is_empty()
            && h.iter().all(|&x| x < self.order())
            && h.contains(&self.identity)
            && h.iter()
                .all(|&a| h.contains(&self.inv(a)) && h.iter().all(|&b| h.contains(&self.mul(a, b))))
    }
}

/// An algebra with a homogeneous basis graded by a finite group.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub algebra: AlgebraRef,
    pub group: Group,
    pub degrees: Vec<usize>,
}

impl GradedAlgebra {
    pub fn new(algebra: AlgebraRef, group: Group, degrees: Vec<usize>) -> Result<Self> {
        let n = algebra.dim();
        if degrees.len() != n || degrees.iter().any(|&d| d >= group.order()) {
            return Err(Error::GradingViolation(
                "one degree in the group is needed per basis vector".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                let d = group.mul(degrees[i], degrees[j]);
                if let Some(k) = (0..n).find(|&k| !algebra.structure_constant(i, j, k).is_zero() && degrees[k] != d) {
                    return Err(Error::GradingViolation(format!(
                        "e{i}·e{j} has a component along e{k} of degree {}, expected {}",
                        group.names[degrees[k]], group.names[d]
                    )));
                }
            }
        }
        if let Some(k) = (0..n).find(|&k| !algebra.unit()[k].is_zero() && degrees[k] != group.identity()) {
            return Err(Error::GradingViolation(format!(
                "the unit has a component along e{k} outside degree e"
            )));
        }
        Ok(GradedAlgebra {
            algebra,
            group,
            degrees,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The homogeneous component `A_g`.
    pub fn component(&self, g: usize) -> Subspace {
        let n = self.dim();
        let vs: Vec<Vec<Rational>> = (0..n)
            .filter(|&i| self.degrees[i] == g)
            .map(|i| unit_vec(n, i))
            .collect();
        Subspace::span(n, &vs)
    }

    /// Index of the basis element `e_i g` of `AG`.
    pub fn ag_index(&self, g: usize, i: usize) -> usize {
        g * self.dim() + i
    }
}

/// The coring `AG` together with the grouplikes `g ∈ G` (listed in group order).
pub fn graded_coring(ga: &GradedAlgebra) -> Result<(Coring, Vec<Grouplike>)> {
    let a = &ga.algebra;
    let n = a.dim();
    let order = ga.group.order();
    let dim = n * order;
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for k in 0..n {
        let mut l = Matrix::zeros(dim, dim);
        let mut r = Matrix::zeros(dim, dim);
        for g in 0..order {
            let shifted = ga.group.mul(g, ga.degrees[k]);
            for i in 0..n {
                let lk = a.basis_product(k, i);
                let rk = a.basis_product(i, k);
                for t in 0..n {
                    l[(ga.ag_index(g, t), ga.ag_index(g, i))] = lk[t].clone();
                    r[(ga.ag_index(shifted, t), ga.ag_index(g, i))] = rk[t].clone();
                }
            }
        }
        left.push(l);
        right.push(r);
    }
    let bimodule = Bimodule::new(a.clone(), a.clone(), dim, left, right)?;
    let square = BalancedTensor::new(vec![bimodule.clone(), bimodule.clone()])?;
    let group_vector = |g: usize| -> Vec<Rational> {
        let mut v = zero_vec(dim);
        for k in 0..n {
            v[ga.ag_index(g, k)] = a.unit()[k].clone();
        }
        v
    };
    let mut comult = Vec::with_capacity(dim);
    let mut counit = Vec::with_capacity(dim);
    for g in 0..order {
        for i in 0..n {
            comult.push(square.project_pure(&[unit_vec(dim, ga.ag_index(g, i)), group_vector(g)]));
            counit.push(unit_vec(n, i));
        }
    }
    let coring = Coring::new(
        bimodule,
        Matrix::from_columns(square.dim(), &comult),
        Matrix::from_columns(n, &counit),
    )?;
    let grouplikes = (0..order)
        .map(|g| Grouplike::new(&coring, group_vector(g)))
        .collect::<Result<Vec<_>>>()?;
    Ok((coring, grouplikes))
}

/// `A_g A_h = A_{gh}` for all `g, h`.
pub fn is_strongly_graded(ga: &GradedAlgebra) -> bool {
    let n = ga.dim();
    let order = ga.group.order();
    (0..order).all(|g| {
        (0..order).all(|h| {
            let products: Vec<Vec<Rational>> = (0..n)
                .filter(|&i| ga.degrees[i] == g)
                .flat_map(|i| (0..n).filter(move |&j| ga.degrees[j] == h).map(move |j| (i, j)))
                .map(|(i, j)| ga.algebra.basis_product(i, j).to_vec())
                .collect();
            Subspace::span(n, &products) == ga.component(ga.group.mul(g, h))
        })
    })
}

/// The family `{[h]A : h ∈ H}` for a subgroup `H`.
#[derive(Clone, Debug)]
pub struct SubgroupFamily {
    pub subgroup: Vec<usize>,
    pub family: GrouplikeFamily,
    pub analysis: FamilyAnalysis,
    /// The `(g, h)` block of `R` is the homogeneous component of degree `h⁻¹g`.
    pub matches_components: bool,
}

pub fn subgroup_family(
    ga: &GradedAlgebra,
    ag: &Coring,
    grouplikes: &[Grouplike],
    h: &[usize],
) -> Result<SubgroupFamily> {
    if !ga.group.is_subgroup(h) {
        return Err(Error::NotSubgroup(format!(
            "{{{}}} is not a subgroup",
            h.iter()
                .map(|&x| ga.group.names.get(x).cloned().unwrap_or_else(|| x.to_string()))
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let gs: Vec<(String, Grouplike)> = h
        .iter()
        .map(|&x| (format!("[{}]A", ga.group.names[x]), grouplikes[x].clone()))
        .collect();
    let (family, analysis) = grouplike_family(ag, &gs)?;
    let unit = ga.algebra.unit().to_vec();
    let matches_components = h.iter().enumerate().all(|(p, &g)| {
        h.iter().enumerate().all(|(q, &k)| {
            let values: Vec<Vec<Rational>> = family.family.homs[p][q]
                .basis_maps()
                .iter()
                .map(|f| f.mul_vec(&unit))
                .collect();
            Subspace::span(ga.dim(), &values) == ga.component(ga.group.mul(ga.group.inv(k), g))
        })
    });
    Ok(SubgroupFamily {
        subgroup: h.to_vec(),
        family,
        analysis,
        matches_components,
    })
}

/// A right `A`-module with a homogeneous basis: `M_g A_h ⊆ M_{gh}`.
#[derive(Clone, Debug)]
pub struct GradedModule {
    pub module: RightModule,
    pub degrees: Vec<usize>,
}

impl GradedModule {
    pub fn new(ga: &GradedAlgebra, module: RightModule, degrees: Vec<usize>) -> Result<Self> {
        if degrees.len() != module.dim || degrees.iter().any(|&d| d >= ga.group.order()) {
            return Err(Error::GradingViolation(
                "one degree is needed per module basis vector".into(),
            ));
        }
        for (k, act) in module.action.iter().enumerate() {
            for i in 0..module.dim {
                let d = ga.group.mul(degrees[i], ga.degrees[k]);
                if let Some(r) = (0..module.dim).find(|&r| !act[(r, i)].is_zero() && degrees[r] != d) {
                    return Err(Error::GradingViolation(format!(
                        "m{i}·e{k} has a component along m{r} outside degree {}",
                        ga.group.names[d]
                    )));
                }
            }
        }
        Ok(GradedModule { module, degrees })
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// Projections onto the homogeneous components, one per group element.
    pub fn projections(&self, order: usize) -> Vec<Matrix> {
        (0..order)
            .map(|g| {
                Matrix::from_fn(self.dim(), self.dim(), |r, c| {
                    if r == c && self.degrees[r] == g {
                        Rational::from_integer(1.into())
                    } else {
                        Rational::zero()
                    }
                })
            })
            .collect()
    }
}

/// The `AG`-comodule of a graded module: `ρ(m) = m ⊗ g` for `m ∈ M_g`.
pub fn graded_to_comodule(ga: &GradedAlgebra, ag: &Coring, gm: &GradedModule) -> Result<Comodule> {
    let tensor = BalancedTensor::new(vec![gm.module.as_bimodule(), ag.bimodule.clone()])?;
    let n = ga.dim();
    let cols: Vec<Vec<Rational>> = (0..gm.dim())
        .map(|i| {
            let mut g = zero_vec(ag.dim());
            for k in 0..n {
                g[ga.ag_index(gm.degrees[i], k)] = ga.algebra.unit()[k].clone();
            }
            tensor.project_pure(&[unit_vec(gm.dim(), i), g])
        })
        .collect();
    Comodule::new(ag, gm.module.clone(), Matrix::from_columns(tensor.dim(), &cols))
}

/// The grading induced by an `AG`-coaction.
#[derive(Clone, Debug)]
pub struct InducedGrading {
    /// `π_g`, from `m ⊗ e_k h ↦ δ_{g,h} m·e_k` applied to `ρ(m)`.
    pub projections: Vec<Matrix>,
    pub components: Vec<Subspace>,
}

impl InducedGrading {
    /// A graded module on a homogeneous basis adapted to the components,
    /// with the change-of-basis matrix (new basis vectors as columns).
    pub fn to_graded_module(&self, ga: &GradedAlgebra, m: &Comodule) -> Result<(GradedModule, Matrix)> {
        let mut basis = Vec::new();
        let mut degrees = Vec::new();
        for (g, c) in self.components.iter().enumerate() {
            for v in c.basis_vectors() {
                basis.push(v);
                degrees.push(g);
            }
        }
        let change = Matrix::from_columns(m.dim(), &basis);
        let inv = change
            .inverse()
            .ok_or_else(|| Error::GradingViolation("components do not form a direct sum decomposition".into()))?;
        let action = m.module.action.iter().map(|a| &(&inv * a) * &change).collect();
        let module = RightModule::new(ga.algebra.clone(), m.dim(), action)?;
        Ok((GradedModule::new(ga, module, degrees)?, change))
    }
}

pub fn comodule_to_grading(ga: &GradedAlgebra, m: &Comodule) -> Result<InducedGrading> {
    let order = ga.group.order();
    let n = ga.dim();
    let tensor = m.tensor();
    let d = m.dim();
    let mut phi = vec![Matrix::zeros(d, tensor.dim()); order];
    for b in 0..tensor.dim() {
        let idx = tensor.multi_index(b);
        let (g, k) = (idx[1] / n, idx[1] % n);
        let img = m.module.action[k].column(idx[0]);
        for (r, x) in img.into_iter().enumerate() {
            phi[g][(r, b)] = x;
        }
    }
    let projections: Vec<Matrix> = phi.iter().map(|p| p * &m.coaction).collect();
    let mut total = Matrix::zeros(d, d);
    for (g, p) in projections.iter().enumerate() {
        if &(p * p) != p {
            return Err(Error::GradingViolation(format!(
                "π_{} is not idempotent",
                ga.group.names[g]
            )));
        }
        for (h, q) in projections.iter().enumerate() {
            if g != h && !(p * q).is_zero() {
                return Err(Error::GradingViolation(
                    "component projections are not orthogonal".into(),
                ));
            }
        }
        total = total.add(p);
    }
    if total != Matrix::identity(d) {
        return Err(Error::GradingViolation(
            "component projections do not sum to the identity".into(),
        ));
    }
    let components = projections.iter().map(Subspace::column_space).collect();
    Ok(InducedGrading {
        projections,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coring::{check_comodule, check_coring, comodule_from_grouplike, Coring};
    use crate::exactlin::rat;
    use crate::fixtures;
    use std::sync::Arc;

    #[test]
    fn groups() {
        assert!(Group::klein().is_subgroup(&[0, 1]));
        assert!(!Group::cyclic(4).is_subgroup(&[0, 1]));
        assert!(Group::cyclic(4).is_subgroup(&[0, 2]));
        assert_eq!(Group::cyclic(3).inv(1), 2);
        let bad = Group::new(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 1]]);
        assert!(bad.is_err());
    }

    #[test]
    fn trivial_group_gives_trivial_coring() {
        let a: AlgebraRef = Arc::new(fixtures::f2_algebra());
        let ga = GradedAlgebra::new(a.clone(), Group::trivial(), vec![0, 0]).unwrap();
        let (ag, gs) = graded_coring(&ga).unwrap();
        let triv = Coring::trivial(&a).unwrap();
        assert_eq!(ag.comult, triv.comult);
        assert_eq!(ag.counit, triv.counit);
        assert_eq!(gs.len(), 1);
        assert!(is_strongly_graded(&ga));
    }

    #[test]
    fn fixtures_give_valid_corings() {
        for ga in [fixtures::f2_graded(), fixtures::f3_graded()] {
            let (ag, gs) = graded_coring(&ga).unwrap();
            assert_eq!(ag.dim(), 4);
            assert!(check_coring(&ag).ok);
            assert_eq!(gs.len(), 2);
        }
    }

    #[test]
    fn strong_grading() {
        assert!(is_strongly_graded(&fixtures::f2_graded()));
        assert!(!is_strongly_graded(&fixtures::f3_graded()));
    }

    #[test]
    fn grading_violation_detected() {
        let a: AlgebraRef = Arc::new(fixtures::f2_algebra());
        assert!(matches!(
            GradedAlgebra::new(a, Group::cyclic(2), vec![1, 0]),
            Err(Error::GradingViolation(_))
        ));
    }

    #[test]
    fn shift_comodules_match_grouplike_comodules() {
        let ga = fixtures::f3_graded();
        let (ag, gs) = graded_coring(&ga).unwrap();
        for (g, gl) in gs.iter().enumerate() {
            let from_g = comodule_from_grouplike(&ag, gl).unwrap();
            let degrees = ga.degrees.iter().map(|&d| ga.group.mul(g, d)).collect();
            let gm = GradedModule::new(&ga, RightModule::regular(&ga.algebra), degrees).unwrap();
            let c = graded_to_comodule(&ga, &ag, &gm).unwrap();
            assert_eq!(c.coaction, from_g.coaction);
        }
    }

    #[test]
    fn dictionary_round_trip() {
        let ga = fixtures::f2_graded();
        let (ag, _) = graded_coring(&ga).unwrap();
        let module =
            RightModule::direct_sum(&[RightModule::regular(&ga.algebra), RightModule::regular(&ga.algebra)]).unwrap();
        let gm = GradedModule::new(&ga, module, vec![0, 1, 1, 0]).unwrap();
        let c = graded_to_comodule(&ga, &ag, &gm).unwrap();
        assert!(check_comodule(&ag, &c).ok);
        let back = comodule_to_grading(&ga, &c).unwrap();
        assert_eq!(back.projections, gm.projections(2));
        assert_eq!(back.projections[1].trace(), rat(2));
    }
}
