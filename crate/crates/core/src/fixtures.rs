//! Reference algebras, graded data and random generators used by tests and
//! the command line tool.

use std::sync::Arc;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Algebra, AlgebraRef, RightModule};
use crate::coring::{sweedler_coring, Comodule, Coring, SweedlerCoring};
use crate::exactlin::{quotient_space, rat, ratio, unit_vec, zero_vec, Matrix, Rational, Subspace};
use crate::graded::{graded_to_comodule, GradedAlgebra, GradedModule, Group};

fn quadratic(c: i64) -> Algebra {
    // basis {1, x}, x² = c
    Algebra::from_products(
        2,
        vec![
            vec![rat(1), rat(0)],
            vec![rat(0), rat(1)],
            vec![rat(0), rat(1)],
            vec![rat(c), rat(0)],
        ],
        vec![rat(1), rat(0)],
    )
    .expect("quadratic algebra")
}

/// `ℚ`.
pub fn f1_algebra() -> Algebra {
    Algebra::rationals()
}

/// `ℚ[x]/(x² − 1)` on the basis `{1, x}`.
pub fn f2_algebra() -> Algebra {
    quadratic(1)
}

/// `ℚ[x]/(x²)` on the basis `{1, x}`.
pub fn f3_algebra() -> Algebra {
    quadratic(0)
}

/// Upper triangular 2×2 matrices on the basis `{e11, e12, e22}`.
pub fn upper_triangular() -> Algebra {
    let mut p = vec![vec![rat(0); 3]; 9];
    p[0] = vec![rat(1), rat(0), rat(0)];
    p[1] = vec![rat(0), rat(1), rat(0)];
    p[5] = vec![rat(0), rat(1), rat(0)];
    p[8] = vec![rat(0), rat(0), rat(1)];
    Algebra::from_products(3, p, vec![rat(1), rat(0), rat(1)]).expect("upper triangular")
}

pub fn f1_graded() -> GradedAlgebra {
    GradedAlgebra::new(Arc::new(f1_algebra()), Group::trivial(), vec![0]).expect("F1 grading")
}

/// F2 graded by `Z_2 = {e, s}` with `deg x = s`.
pub fn f2_graded() -> GradedAlgebra {
    GradedAlgebra::new(Arc::new(f2_algebra()), Group::cyclic(2), vec![0, 1]).expect("F2 grading")
}

/// F3 graded by `Z_2 = {e, s}` with `deg x = s`.
pub fn f3_graded() -> GradedAlgebra {
    GradedAlgebra::new(Arc::new(f3_algebra()), Group::cyclic(2), vec![0, 1]).expect("F3 grading")
}

/// The Sweedler coring `A ⊗_ℚ A` for the F2 algebra.
pub fn f4_sweedler() -> SweedlerCoring {
    let a: AlgebraRef = Arc::new(f2_algebra());
    let scalars = Subspace::span(2, &[a.unit().to_vec()]);
    sweedler_coring(&a, &scalars).expect("F4 Sweedler coring")
}

/// The one-dimensional graded module concentrated in degree `g` on which
/// the positive-degree part acts as zero (F3 style simples).
pub fn graded_simple(ga: &GradedAlgebra, g: usize) -> Option<GradedModule> {
    let n = ga.dim();
    let action: Vec<Matrix> = (0..n)
        .map(|k| {
            Matrix::from_fn(1, 1, |_, _| {
                if ga.degrees[k] == ga.group.identity() {
                    ga.algebra.unit()[k].clone()
                } else {
                    Rational::zero()
                }
            })
        })
        .collect();
    // only a module when A_e acts through ε(unit) consistently
    let module = RightModule::new(ga.algebra.clone(), 1, action).ok()?;
    if !module.check().ok {
        return None;
    }
    GradedModule::new(ga, module, vec![g]).ok()
}

/// The simple comodule of F3 concentrated in degree `g`.
pub fn f3_simple(ag: &Coring, ga: &GradedAlgebra, g: usize) -> Comodule {
    let gm = graded_simple(ga, g).expect("graded simple");
    graded_to_comodule(ga, ag, &gm).expect("simple comodule")
}

/// Graded simples of every degree, when they exist.
pub fn graded_simples(ga: &GradedAlgebra, ag: &Coring) -> Vec<Comodule> {
    (0..ga.group.order())
        .filter_map(|g| graded_simple(ga, g))
        .filter_map(|gm| graded_to_comodule(ga, ag, &gm).ok())
        .collect()
}

// ---------------------------------------------------------------------------
// Random generators

fn nonzero<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let p = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let q = rng.gen_range(1..=2);
    ratio(p, q)
}

fn small<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-2..=2))
}

fn random_group<R: Rng + ?Sized>(rng: &mut R) -> Group {
    match rng.gen_range(0..5) {
        0 => Group::trivial(),
        1 => Group::cyclic(2),
        2 => Group::cyclic(3),
        3 => Group::cyclic(4),
        _ => Group::klein(),
    }
}

fn from_structure(n: usize, product: impl Fn(usize, usize) -> Vec<Rational>, unit: Vec<Rational>) -> Algebra {
    let products = (0..n * n).map(|ij| product(ij / n, ij % n)).collect();
    Algebra::from_products(n, products, unit).expect("random algebra")
}

/// Rescales the basis by nonzero scalars, keeping it homogeneous.
fn rescale<R: Rng + ?Sized>(rng: &mut R, ga: GradedAlgebra) -> GradedAlgebra {
    let a = &ga.algebra;
    let n = a.dim();
    let lambda: Vec<Rational> = (0..n).map(|_| nonzero(rng)).collect();
    let alg = from_structure(
        n,
        |i, j| {
            let p = a.basis_product(i, j);
            (0..n).map(|k| &p[k] * &lambda[i] * &lambda[j] / &lambda[k]).collect()
        },
        (0..n).map(|k| &a.unit()[k] / &lambda[k]).collect(),
    );
    GradedAlgebra::new(Arc::new(alg), ga.group, ga.degrees).expect("rescaled grading")
}

/// `ℚ[x]/(x^n − c)` graded by `Z_m` for `m | n`.
fn truncated_polynomial(n: usize, m: usize, c: Rational) -> GradedAlgebra {
    let alg = from_structure(
        n,
        |i, j| {
            let mut v = zero_vec(n);
            if i + j < n {
                v[i + j] = rat(1);
            } else {
                v[i + j - n] = c.clone();
            }
            v
        },
        unit_vec(n, 0),
    );
    GradedAlgebra::new(Arc::new(alg), Group::cyclic(m), (0..n).map(|i| i % m).collect()).expect("polynomial grading")
}

/// A random valid graded algebra of dimension at most 4 over a group of
/// order at most 4, strongly graded or not.
pub fn random_graded_algebra<R: Rng + ?Sized>(rng: &mut R) -> GradedAlgebra {
    let ga = match rng.gen_range(0..6) {
        0 => {
            // twisted group algebra with a coboundary cocycle
            let group = random_group(rng);
            let n = group.order();
            let f: Vec<Rational> = (0..n).map(|_| nonzero(rng)).collect();
            let alg = from_structure(
                n,
                |g, h| {
                    let gh = group.mul(g, h);
                    let mut v = zero_vec(n);
                    v[gh] = &f[g] * &f[h] / &f[gh];
                    v
                },
                {
                    let e = group.identity();
                    let mut u = zero_vec(n);
                    u[e] = Rational::from_integer(1.into()) / &f[e];
                    u
                },
            );
            GradedAlgebra::new(Arc::new(alg), group.clone(), (0..n).collect()).expect("group algebra grading")
        }
        1 => {
            let n = rng.gen_range(2..=4);
            let divisors: Vec<usize> = (1..=n).filter(|m| n % m == 0).collect();
            let m = *divisors.choose(rng).unwrap();
            let c = if rng.gen_bool(0.3) { rat(0) } else { nonzero(rng) };
            truncated_polynomial(n, m, c)
        }
        2 => {
            let (a, b) = (
                if rng.gen_bool(0.3) { rat(0) } else { nonzero(rng) },
                if rng.gen_bool(0.3) { rat(0) } else { nonzero(rng) },
            );
            // ℚ[x]/(x²−a) ⊗ ℚ[y]/(y²−b), basis 1, x, y, xy
            let alg = from_structure(
                4,
                |i, j| {
                    let (xi, yi) = (i & 1, i >> 1);
                    let (xj, yj) = (j & 1, j >> 1);
                    let mut coef = rat(1);
                    if xi + xj == 2 {
                        coef *= &a;
                    }
                    if yi + yj == 2 {
                        coef *= &b;
                    }
                    let mut v = zero_vec(4);
                    v[((xi + xj) % 2) | (((yi + yj) % 2) << 1)] = coef;
                    v
                },
                unit_vec(4, 0),
            );
            GradedAlgebra::new(Arc::new(alg), Group::klein(), vec![0, 1, 2, 3]).expect("klein grading")
        }
        3 => {
            // ℚ × ℚ, trivially graded
            let group = random_group(rng);
            let alg = from_structure(
                2,
                |i, j| {
                    let mut v = zero_vec(2);
                    if i == j {
                        v[i] = rat(1);
                    }
                    v
                },
                vec![rat(1), rat(1)],
            );
            GradedAlgebra::new(Arc::new(alg), group, vec![0, 0]).expect("trivial grading")
        }
        4 => {
            // upper triangular with e12 in a degree of order ≤ 2 ... any degree works
            let group = random_group(rng);
            let d = rng.gen_range(0..group.order());
            GradedAlgebra::new(Arc::new(upper_triangular()), group, vec![0, d, 0]).expect("triangular grading")
        }
        _ => {
            let c = if rng.gen_bool(0.5) { rat(0) } else { nonzero(rng) };
            truncated_polynomial(2, 2, c)
        }
    };
    rescale(rng, ga)
}

/// Restriction of a right module to an invariant subspace.
pub fn submodule(m: &RightModule, s: &Subspace) -> RightModule {
    let basis = s.basis_vectors();
    let action = m
        .action
        .iter()
        .map(|a| {
            let cols: Vec<Vec<Rational>> = basis
                .iter()
                .map(|v| s.coordinates(&a.mul_vec(v)).expect("invariant subspace"))
                .collect();
            Matrix::from_columns(s.dim(), &cols)
        })
        .collect();
    RightModule::new(m.algebra.clone(), s.dim(), action).expect("submodule")
}

/// Conjugates the module structure by a random invertible matrix, returning
/// the new module and `S` with new basis vector `j` = column `j` of `S`.
pub fn random_base_change<R: Rng + ?Sized>(rng: &mut R, m: &RightModule) -> (RightModule, Matrix) {
    let d = m.dim;
    let s = random_invertible(rng, d);
    let inv = s.inverse().expect("invertible");
    let action = m.action.iter().map(|a| &(&inv * a) * &s).collect();
    (RightModule::new(m.algebra.clone(), d, action).expect("base change"), s)
}

pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Matrix {
    loop {
        let s = Matrix::from_fn(d, d, |i, j| if i == j { nonzero(rng) } else { small(rng) });
        if s.is_invertible() {
            return s;
        }
    }
}

/// A random finitely generated projective right module: a sum of copies of
/// `eA` for the supplied idempotents, in a random basis.
pub fn random_projective_module<R: Rng + ?Sized>(
    rng: &mut R,
    a: &AlgebraRef,
    idempotents: &[Vec<Rational>],
) -> RightModule {
    let count = rng.gen_range(1..=2);
    let regular = RightModule::regular(a);
    let parts: Vec<RightModule> = (0..count)
        .map(|_| {
            let e = idempotents.choose(rng).expect("idempotent");
            submodule(&regular, &Subspace::column_space(&a.left_mult(e)))
        })
        .collect();
    let sum = RightModule::direct_sum(&parts).expect("direct sum");
    random_base_change(rng, &sum).0
}

/// Idempotents of an algebra usable by [`random_projective_module`]: the
/// unit, plus `(1 ± x)/2` when the second basis vector squares to 1.
pub fn known_idempotents(a: &Algebra) -> Vec<Vec<Rational>> {
    let mut out = vec![a.unit().to_vec()];
    if a.dim() == 2 && a.basis_product(1, 1) == a.unit() {
        let half = ratio(1, 2);
        out.push(vec![half.clone(), half.clone()]);
        out.push(vec![half.clone(), -half]);
    }
    out
}

/// A random graded module: shifts of the regular module, optionally cut
/// down by a cyclic graded submodule, in a random homogeneous basis.
pub fn random_graded_module<R: Rng + ?Sized>(rng: &mut R, ga: &GradedAlgebra) -> GradedModule {
    let order = ga.group.order();
    let count = rng.gen_range(1..=2);
    let mut parts = Vec::new();
    let mut degrees = Vec::new();
    for _ in 0..count {
        let g = rng.gen_range(0..order);
        parts.push(RightModule::regular(&ga.algebra));
        degrees.extend(ga.degrees.iter().map(|&d| ga.group.mul(g, d)));
    }
    let mut module = RightModule::direct_sum(&parts).expect("direct sum");
    if rng.gen_bool(0.5) {
        // quotient by the submodule generated by a random homogeneous vector
        let g = rng.gen_range(0..order);
        let support: Vec<usize> = (0..module.dim).filter(|&i| degrees[i] == g).collect();
        if !support.is_empty() {
            let mut v = zero_vec(module.dim);
            for &i in &support {
                v[i] = small(rng);
            }
            let generated: Vec<Vec<Rational>> = module.action.iter().map(|a| a.mul_vec(&v)).collect();
            let sub = Subspace::span(module.dim, &generated);
            let q = quotient_space(module.dim, &sub).expect("quotient");
            let free = q.free_columns().to_vec();
            let action = module
                .action
                .iter()
                .map(|a| {
                    let cols: Vec<Vec<Rational>> = free.iter().map(|&f| q.project(&a.column(f))).collect();
                    Matrix::from_columns(q.dim(), &cols)
                })
                .collect();
            module = RightModule::new(ga.algebra.clone(), q.dim(), action).expect("quotient module");
            degrees = free.iter().map(|&f| degrees[f]).collect();
        }
    }
    // homogeneous base change: invertible blocks within each degree
    let d = module.dim;
    let mut s = Matrix::zeros(d, d);
    for g in 0..order {
        let idx: Vec<usize> = (0..d).filter(|&i| degrees[i] == g).collect();
        let block = random_invertible(rng, idx.len());
        for (r, &i) in idx.iter().enumerate() {
            for (c, &j) in idx.iter().enumerate() {
                s[(i, j)] = block[(r, c)].clone();
            }
        }
    }
    let inv = s.inverse().expect("invertible");
    let action = module.action.iter().map(|a| &(&inv * a) * &s).collect();
    let module = RightModule::new(ga.algebra.clone(), d, action).expect("graded base change");
    GradedModule::new(ga, module, degrees).expect("random graded module")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_algebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_algebras_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let ga = random_graded_algebra(&mut rng);
            assert!(check_algebra(&ga.algebra).ok);
            assert!(ga.dim() <= 4 && ga.group.order() <= 4);
        }
    }

    #[test]
    fn random_modules_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for ga in [f2_graded(), f3_graded()] {
            for _ in 0..10 {
                let gm = random_graded_module(&mut rng, &ga);
                assert!(gm.module.check().ok);
            }
        }
        let a: AlgebraRef = Arc::new(f2_algebra());
        let idem = known_idempotents(&a);
        assert_eq!(idem.len(), 3);
        for _ in 0..5 {
            assert!(random_projective_module(&mut rng, &a, &idem).check().ok);
        }
    }

    #[test]
    fn simples() {
        assert!(graded_simple(&f3_graded(), 1).is_some());
        assert!(graded_simple(&f2_graded(), 1).is_none());
    }
}
