//! Seeded generators of random test data.
//!
//! Rational entries stay small (numerators in −5..=5, denominators 1..=3)
//! so that exact arithmetic remains fast; prime-field entries are uniform.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::clifford::{CliffElt, CliffordContext, DualElt};
use crate::forms::{AlgebraContext, BilinearForm, DualTwoForm, LinearForm, QuadraticForm};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::tensor::{TensorElt, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> Scalar {
    match field {
        FieldSpec::Rationals => {
            let num = rng.gen_range(-5i64..=5);
            let den = if rng.gen_bool(0.25) { rng.gen_range(2i64..=3) } else { 1 };
            field.from_ratio(num, den).expect("nonzero denominator")
        }
        FieldSpec::PrimeField(p) => field.from_u64(rng.gen_range(0..p)),
    }
}

fn nonzero_scalar<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> Scalar {
    loop {
        let s = scalar(field, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn coords<R: Rng + ?Sized>(ctx: &AlgebraContext, rng: &mut R) -> Vec<Scalar> {
    (0..ctx.dim()).map(|_| scalar(ctx.field(), rng)).collect()
}

pub fn vector<R: Rng + ?Sized>(ctx: &AlgebraContext, rng: &mut R) -> Vector {
    Vector::new(*ctx, coords(ctx, rng)).expect("valid vector")
}

pub fn linear_form<R: Rng + ?Sized>(ctx: &AlgebraContext, rng: &mut R) -> LinearForm {
    LinearForm::new(*ctx, coords(ctx, rng)).expect("valid form")
}

pub fn bilinear<R: Rng + ?Sized>(ctx: &AlgebraContext, rng: &mut R) -> BilinearForm {
    BilinearForm::from_fn(*ctx, |_, _| scalar(ctx.field(), rng))
}

/// A random alternating form (zero diagonal, A_ji = −A_ij).
pub fn alternating<R: Rng + ?Sized>(ctx: &AlgebraContext, rng: &mut R) -> BilinearForm {
    let n = ctx.dim();
    let mut upper = Matrix::zeros(ctx.field(), n, n);
    for i in 0..n {
        for j in i + 1..n {
            upper.set(i, j, scalar(ctx.field(), rng));
        }
    }
    BilinearForm::from_fn(*ctx, |i, j| {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => upper.get(i, j).clone(),
            Greater => -upper.get(j, i),
            Equal => ctx.field().zero(),
        }
    })
}

pub fn dual_two_form<R: Rng + ?Sized>(ctx: &AlgebraContext, rng: &mut R) -> DualTwoForm {
    DualTwoForm::from_alternating(&alternating(ctx, rng)).expect("alternating")
}

pub fn quadratic<R: Rng + ?Sized>(ctx: &AlgebraContext, rng: &mut R) -> QuadraticForm {
    bilinear(ctx, rng).quadratic()
}

/// A random element of T(V) with up to `max_terms` words of length ≤ `max_degree`.
pub fn tensor<R: Rng + ?Sized>(
    ctx: &AlgebraContext,
    max_degree: usize,
    max_terms: usize,
    rng: &mut R,
) -> TensorElt {
    let count = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<(Vec<usize>, Scalar)> = (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_degree);
            let word = (0..len).map(|_| rng.gen_range(0..ctx.dim())).collect();
            (word, nonzero_scalar(ctx.field(), rng))
        })
        .collect();
    TensorElt::from_terms(*ctx, terms).expect("valid words")
}

/// A homogeneous random tensor of the given degree.
pub fn homogeneous_tensor<R: Rng + ?Sized>(
    ctx: &AlgebraContext,
    degree: usize,
    max_terms: usize,
    rng: &mut R,
) -> TensorElt {
    let count = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<(Vec<usize>, Scalar)> = (0..count)
        .map(|_| {
            let word = (0..degree).map(|_| rng.gen_range(0..ctx.dim())).collect();
            (word, nonzero_scalar(ctx.field(), rng))
        })
        .collect();
    TensorElt::from_terms(*ctx, terms).expect("valid words")
}

fn random_blade<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// A random element of Cl(V, Q) with up to `max_terms` blades.
pub fn cliff<R: Rng + ?Sized>(cctx: &CliffordContext, max_terms: usize, rng: &mut R) -> CliffElt {
    let count = rng.gen_range(1..=max_terms.max(1));
    let field = cctx.base().field();
    let terms: Vec<(Vec<usize>, Scalar)> = (0..count)
        .map(|_| (random_blade(cctx.dim(), rng), nonzero_scalar(field, rng)))
        .collect();
    CliffElt::from_terms(cctx, terms).expect("valid blades")
}

pub fn dual_elt<R: Rng + ?Sized>(ctx: &AlgebraContext, max_terms: usize, rng: &mut R) -> DualElt {
    let count = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<(Vec<usize>, Scalar)> = (0..count)
        .map(|_| (random_blade(ctx.dim(), rng), nonzero_scalar(ctx.field(), rng)))
        .collect();
    DualElt::from_terms(*ctx, terms).expect("valid blades")
}

/// A random alternating matrix of size n.
pub fn alternating_matrix<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> BilinearForm {
    let ctx = AlgebraContext::new(n, field).expect("positive dimension");
    alternating(&ctx, rng)
}
