//! Explicit matrices for the representations ρ_F = bL_F of Cl(V, Q_F) on
//! Λ(V), equivalence checks under alternating twists, and a randomized
//! search for common invariant subspaces.
//!
//! Rows and columns of an [`EndoMatrix`] are indexed by blade bitmasks:
//! the subset S ⊆ {1..n} sits at index Σ_{i∈S} 2^{i−1}.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::{bl_action, bl_map, CliffElt, CliffordContext};
use crate::error::{Error, Result};
use crate::forms::{AlgebraContext, BilinearForm};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// Largest dimension n for which 2^n × 2^n matrices are materialized.
pub const MAX_RHO_DIM: usize = 12;

/// An endomorphism of Λ(V) in the blade-bitmask basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoMatrix {
    ctx: AlgebraContext,
    m: Matrix,
}

impl EndoMatrix {
    pub fn new(ctx: AlgebraContext, m: Matrix) -> Result<Self> {
        let size = 1usize << ctx.dim();
        if m.rows() != size || m.cols() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                got: m.rows(),
            });
        }
        Ok(EndoMatrix { ctx, m })
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix {
        self.m
    }

    pub fn mul(&self, other: &EndoMatrix) -> EndoMatrix {
        EndoMatrix {
            ctx: self.ctx,
            m: self.m.mul(&other.m),
        }
    }

    /// The image of the unit 1 ∈ Λ(V), i.e. column ∅.
    pub fn unit_column(&self) -> Vec<Scalar> {
        self.m.column(0)
    }
}

fn guard(ctx: &AlgebraContext, op: &'static str) -> Result<()> {
    if ctx.dim() > MAX_RHO_DIM {
        return Err(Error::DimensionGuard {
            op,
            dim: ctx.dim(),
            limit: MAX_RHO_DIM,
        });
    }
    Ok(())
}

fn columns_of(ctx: &AlgebraContext, f: impl Fn(&CliffElt) -> Result<CliffElt>) -> Result<Matrix> {
    let ext = CliffordContext::exterior(*ctx);
    let size = 1usize << ctx.dim();
    let mut cols = Vec::with_capacity(size);
    for b in 0..size {
        let basis = CliffElt::from_dense(&ext, &unit_vector(ctx.field(), size, b));
        cols.push(f(&basis)?.to_dense());
    }
    Ok(Matrix::from_columns(ctx.field(), size, &cols))
}

fn unit_vector(field: FieldSpec, len: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); len];
    v[i] = field.one();
    v
}

/// The matrix of ρ_F(u) = bL_F(u) on Λ(V), for u ∈ Cl(V, Q_F).
pub fn rho_matrix(form: &BilinearForm, u: &CliffElt) -> Result<EndoMatrix> {
    let ctx = *form.ctx();
    guard(&ctx, "rho_matrix")?;
    let m = columns_of(&ctx, |v| bl_action(form, u, v))?;
    EndoMatrix::new(ctx, m)
}

/// The matrices ρ_F(e_1), …, ρ_F(e_n).
pub fn rho_generators(form: &BilinearForm) -> Result<Vec<EndoMatrix>> {
    let cctx = CliffordContext::new(form.quadratic());
    (0..form.ctx().dim())
        .map(|i| rho_matrix(form, &CliffElt::blade(&cctx, &[i])?))
        .collect()
}

/// The matrix of bl_A: Λ(V) → Λ(V) for an alternating A (Q_A = 0).
pub fn bl_matrix(a: &BilinearForm) -> Result<EndoMatrix> {
    if !a.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let ctx = *a.ctx();
    guard(&ctx, "bl_matrix")?;
    let ext = CliffordContext::exterior(ctx);
    let m = columns_of(&ctx, |v| bl_map(a, &ext, v))?;
    EndoMatrix::new(ctx, m)
}

/// One discrepancy in an equivalence check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleFailure {
    pub sample: usize,
    /// 1-based row and column of the first differing entry.
    pub row: usize,
    pub col: usize,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub identity: String,
    pub samples: usize,
    pub failures: Vec<SampleFailure>,
    pub seed: Option<u64>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check ρ_{F+A}(a) · M_A = M_A · ρ_F(a) for every sample a ∈ Cl(V, Q_F),
/// where M_A is the matrix of bl_A on Λ(V).
pub fn check_equivalence(
    form: &BilinearForm,
    a: &BilinearForm,
    samples: &[CliffElt],
) -> Result<EquivalenceReport> {
    let ma = bl_matrix(a)?;
    let twisted = form.add(a)?;
    let cctx = CliffordContext::new(form.quadratic());
    let mut failures = Vec::new();
    for (idx, u) in samples.iter().enumerate() {
        let u = u.recast(&cctx).and_then(|r| {
            if r.cctx() == u.cctx() {
                Ok(r)
            } else {
                Err(Error::FormMismatch("samples must lie in Cl(V, Q_F)".into()))
            }
        })?;
        let left = rho_matrix(&twisted, &u)?.mul(&ma);
        let right = ma.mul(&rho_matrix(form, &u)?);
        if let Some((r, c)) = first_difference(left.matrix(), right.matrix()) {
            failures.push(SampleFailure {
                sample: idx,
                row: r + 1,
                col: c + 1,
                left: left.matrix().get(r, c).to_string(),
                right: right.matrix().get(r, c).to_string(),
            });
        }
    }
    Ok(EquivalenceReport {
        identity: "rho_{F+A}(a) * M_A = M_A * rho_F(a)".into(),
        samples: samples.len(),
        failures,
        seed: None,
    })
}

fn first_difference(a: &Matrix, b: &Matrix) -> Option<(usize, usize)> {
    (0..a.rows())
        .flat_map(|r| (0..a.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| a.get(r, c) != b.get(r, c))
}

/// Incrementally built subspace in echelon form.
#[derive(Debug, Clone)]
struct Span {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Span {
    fn new() -> Self {
        Span { rows: Vec::new() }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    /// Insert `v`; returns the new echelon row if `v` was outside the span.
    fn insert(&mut self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let r = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let inv = r[p].inverse().expect("nonzero pivot");
        let r: Vec<Scalar> = r.iter().map(|x| x * &inv).collect();
        self.rows.push((p, r.clone()));
        Some(r)
    }

    fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// The smallest subspace containing `vectors` and invariant under `mats`.
pub fn spin_closure(mats: &[Matrix], vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    spin(mats, vectors, usize::MAX).basis()
}

fn spin(mats: &[Matrix], vectors: &[Vec<Scalar>], stop_at: usize) -> Span {
    let mut span = Span::new();
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for v in vectors {
        if let Some(r) = span.insert(v) {
            queue.push(r);
        }
    }
    while let Some(v) = queue.pop() {
        if span.dim() >= stop_at {
            break;
        }
        for m in mats {
            if let Some(r) = span.insert(&m.mul_vec(&v)) {
                queue.push(r);
            }
        }
    }
    span
}

/// Whether span(basis) is mapped into itself by every matrix.
pub fn is_invariant(mats: &[Matrix], basis: &[Vec<Scalar>]) -> bool {
    let mut span = Span::new();
    for v in basis {
        span.insert(v);
    }
    mats.iter()
        .all(|m| basis.iter().all(|v| span.reduce(&m.mul_vec(v)).iter().all(Scalar::is_zero)))
}

/// Matrices of `mats` restricted to the invariant subspace spanned by
/// `basis`, in that basis: M B = B R.
pub fn restrict(mats: &[Matrix], basis: &[Vec<Scalar>]) -> Result<Vec<Matrix>> {
    let Some(first) = basis.first() else {
        return Err(Error::Invalid("cannot restrict to the zero subspace".into()));
    };
    let field = first[0].field();
    let b = Matrix::from_columns(field, first.len(), basis);
    mats.iter()
        .map(|m| {
            let cols = basis
                .iter()
                .map(|v| {
                    b.solve_in_column_span(&m.mul_vec(v)).ok_or_else(|| {
                        Error::Invalid("subspace is not invariant under the matrices".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(field, basis.len(), &cols))
        })
        .collect()
}

/// The left ideal Cl(V, Q_F) · e carried to Λ(V) by bl_F, with the
/// generators ρ_F(e_i) restricted to it.
///
/// Returns the basis of the ideal (as coordinate vectors on Λ(V)) and the
/// restricted matrices.
pub fn left_ideal_restriction(
    form: &BilinearForm,
    element: &CliffElt,
) -> Result<(Vec<Vec<Scalar>>, Vec<Matrix>)> {
    let ext = CliffordContext::exterior(*form.ctx());
    let seed = bl_map(form, &ext, element)?.to_dense();
    let gens: Vec<Matrix> = rho_generators(form)?
        .into_iter()
        .map(EndoMatrix::into_matrix)
        .collect();
    let basis = spin_closure(&gens, &[seed]);
    let restricted = restrict(&gens, &basis)?;
    Ok((basis, restricted))
}

/// A common invariant subspace found by [`invariant_probe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSubspace {
    pub basis: Vec<Vec<Scalar>>,
}

impl InvariantSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub seed: u64,
    pub dimension: usize,
    pub trials: usize,
    /// Proper nonzero subspaces, each verified invariant; sorted by dimension.
    pub subspaces: Vec<InvariantSubspace>,
}

impl ProbeReport {
    pub const NOTE: &'static str = "semi-decision: every listed subspace is verified invariant; \
        an empty list does not prove irreducibility";

    /// Sorted distinct dimensions of the subspaces found.
    pub fn dimensions(&self) -> Vec<usize> {
        self.subspaces
            .iter()
            .map(InvariantSubspace::dim)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn found(&self) -> bool {
        !self.subspaces.is_empty()
    }
}

/// Number of random algebra elements tried by [`invariant_probe`].
pub const PROBE_TRIALS: usize = 60;
const MAX_SUBSPACES: usize = 64;
const COMMUTANT_LIMIT: usize = 16;

/// Randomized search for proper nonzero subspaces invariant under every
/// matrix in `mats`.
///
/// Sources of candidates:
/// - eigenspaces (for eigenvalues in the base field) of elements of the
///   commutant, which are invariant outright;
/// - cyclic closures of eigenvectors of random elements of the algebra
///   generated by `mats`, and of the standard basis vectors;
/// - annihilators of the same closures for the transposed matrices.
///
/// The candidates are then closed under sums and intersections, so a family
/// of commuting scalars yields a full flag. Finding nothing proves nothing.
pub fn invariant_probe(mats: &[Matrix], seed: u64) -> Result<ProbeReport> {
    let Some(first) = mats.first() else {
        return Err(Error::Invalid("invariant_probe needs at least one matrix".into()));
    };
    let d = first.rows();
    let field = first.field();
    for m in mats {
        if m.rows() != d || m.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: if m.rows() != d { m.rows() } else { m.cols() },
            });
        }
        if m.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: m.field(),
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = Lattice::new(field, d);
    let transposed: Vec<Matrix> = mats.iter().map(Matrix::transpose).collect();

    if d <= COMMUTANT_LIMIT {
        for c in commutant(mats) {
            for (_, kernel) in eigenspaces(&c) {
                found.offer(kernel);
            }
        }
    }

    let try_vectors = |found: &mut Lattice, vectors: &[Vec<Scalar>], dual: bool| {
        for v in vectors {
            if dual {
                let w = spin(&transposed, std::slice::from_ref(v), d);
                if w.dim() < d {
                    let ann = Matrix::from_rows(field, w.basis()).expect("rows").null_space();
                    found.offer(ann);
                }
            } else {
                let w = spin(mats, std::slice::from_ref(v), d);
                found.offer(w.basis());
            }
        }
    };

    let basis_vectors: Vec<Vec<Scalar>> = (0..d).map(|i| unit_vector(field, d, i)).collect();
    try_vectors(&mut found, &basis_vectors, false);
    try_vectors(&mut found, &basis_vectors, true);

    for _ in 0..PROBE_TRIALS {
        let x = random_algebra_element(mats, field, &mut rng);
        for (r, kernel) in eigenspaces(&x) {
            try_vectors(&mut found, &kernel, false);
            let shifted = x.sub(&Matrix::identity(field, d).scale(&r)).transpose();
            try_vectors(&mut found, &shifted.null_space(), true);
        }
    }

    found.close();
    let mut subspaces: Vec<InvariantSubspace> = found
        .spaces
        .into_iter()
        .filter(|b| is_invariant(mats, b))
        .map(|basis| InvariantSubspace { basis })
        .collect();
    subspaces.sort_by_key(InvariantSubspace::dim);
    Ok(ProbeReport {
        seed,
        dimension: d,
        trials: PROBE_TRIALS,
        subspaces,
    })
}

/// Distinct proper nonzero subspaces, stored as reduced echelon bases.
struct Lattice {
    field: FieldSpec,
    d: usize,
    spaces: Vec<Vec<Vec<Scalar>>>,
}

impl Lattice {
    fn new(field: FieldSpec, d: usize) -> Self {
        Lattice {
            field,
            d,
            spaces: Vec::new(),
        }
    }

    fn offer(&mut self, vectors: Vec<Vec<Scalar>>) {
        if self.spaces.len() >= MAX_SUBSPACES {
            return;
        }
        let basis = crate::linalg::span_basis(self.field, self.d, &vectors);
        if basis.is_empty() || basis.len() >= self.d || self.spaces.contains(&basis) {
            return;
        }
        self.spaces.push(basis);
    }

    fn intersect(&self, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        // solve Σ s_i a_i = Σ t_j b_j
        let mut cols: Vec<Vec<Scalar>> = a.to_vec();
        cols.extend(b.iter().map(|v| v.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.field, self.d, &cols);
        m.null_space()
            .into_iter()
            .map(|coef| {
                let mut v = vec![self.field.zero(); self.d];
                for (c, basis) in coef.iter().zip(a) {
                    for (x, y) in v.iter_mut().zip(basis) {
                        *x = &*x + &(c * y);
                    }
                }
                v
            })
            .collect()
    }

    /// Close under pairwise sums and intersections, up to the size bound.
    fn close(&mut self) {
        let mut i = 0;
        while i < self.spaces.len() && self.spaces.len() < MAX_SUBSPACES {
            for j in 0..i {
                let (a, b) = (self.spaces[i].clone(), self.spaces[j].clone());
                let mut sum = a.clone();
                sum.extend(b.iter().cloned());
                self.offer(sum);
                let meet = self.intersect(&a, &b);
                self.offer(meet);
            }
            i += 1;
        }
    }
}

/// Basis of { C : C M = M C for all M }.
fn commutant(mats: &[Matrix]) -> Vec<Matrix> {
    let d = mats[0].rows();
    let field = mats[0].field();
    let mut rows = Vec::new();
    for m in mats {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![field.zero(); d * d];
                for k in 0..d {
                    // (C M)_ij = Σ_k C_ik M_kj, (M C)_ij = Σ_k M_ik C_kj
                    row[i * d + k] = &row[i * d + k] + m.get(k, j);
                    row[k * d + j] = &row[k * d + j] - m.get(i, k);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Vec::new();
    }
    let system = Matrix::from_rows(field, rows).expect("consistent rows");
    system
        .null_space()
        .into_iter()
        .map(|v| Matrix::from_rows(field, v.chunks(d).map(<[Scalar]>::to_vec).collect()).expect("square"))
        .collect()
}

/// Eigenvalues lying in the base field, with their eigenspaces.
///
/// Over ℚ the matrix is scaled to integer entries; rational eigenvalues of
/// the scaled matrix are then integer roots of its characteristic
/// polynomial, found among the divisors of its lowest nonzero coefficient
/// up to the largest absolute row sum. Over GF(p) small primes are scanned fully.
fn eigenspaces(x: &Matrix) -> Vec<(Scalar, Vec<Vec<Scalar>>)> {
    let field = x.field();
    let d = x.rows();
    let id = Matrix::identity(field, d);
    let kernel_at = |r: &Scalar| {
        let k = x.sub(&id.scale(r)).null_space();
        (!k.is_empty()).then(|| (r.clone(), k))
    };
    match field {
        FieldSpec::PrimeField(p) => {
            let limit = p.min(2048);
            (0..limit).filter_map(|r| kernel_at(&field.from_u64(r))).collect()
        }
        FieldSpec::Rationals => {
            let mut denom = BigInt::from(1);
            for r in 0..d {
                for c in 0..d {
                    if let Some(q) = x.get(r, c).as_rational() {
                        denom = denom.lcm(q.denom());
                    }
                }
            }
            let scale = field.from_bigint(&denom);
            let scaled = x.scale(&scale);
            let mut bound = BigInt::zero();
            for r in 0..d {
                let row_sum: BigInt = scaled
                    .row(r)
                    .iter()
                    .filter_map(|s| s.as_rational().map(|q| q.numer().abs()))
                    .sum();
                bound = bound.max(row_sum);
            }
            let bound = bound.to_i64().unwrap_or(i64::MAX).min(100_000);
            let poly: Vec<BigInt> = scaled
                .characteristic_polynomial()
                .expect("characteristic 0")
                .iter()
                .map(|c| c.as_rational().map(|q| q.numer().clone()).unwrap_or_default())
                .collect();
            let low = poly.iter().position(|c| !c.is_zero()).unwrap_or(0);
            let reduced = &poly[low..];
            let inv_scale = scale.inverse().expect("nonzero");
            let mut roots = Vec::new();
            if low > 0 {
                roots.push(0);
            }
            for r in 1..=bound {
                if !(&reduced[0] % BigInt::from(r)).is_zero() {
                    continue;
                }
                for cand in [r, -r] {
                    let at = reduced
                        .iter()
                        .rev()
                        .fold(BigInt::zero(), |acc, c| acc * BigInt::from(cand) + c);
                    if at.is_zero() {
                        roots.push(cand);
                    }
                }
            }
            roots
                .into_iter()
                .filter_map(|r| kernel_at(&(field.from_i64(r) * &inv_scale)))
                .collect()
        }
    }
}

/// A random element of the algebra generated by `mats`: a combination of a
/// few words of length ≤ 3 with small integer coefficients.
fn random_algebra_element(mats: &[Matrix], field: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    let d = mats[0].rows();
    let mut x = Matrix::zeros(field, d, d);
    for _ in 0..3 {
        let len = rng.gen_range(1..=3);
        let mut word = Matrix::identity(field, d);
        for _ in 0..len {
            word = word.mul(&mats[rng.gen_range(0..mats.len())]);
        }
        let c = rng.gen_range(-3i64..=3);
        x = x.add(&word.scale(&field.from_i64(c)));
    }
    let shift = rng.gen_range(-2i64..=2);
    x.add(&Matrix::identity(field, d).scale(&field.from_i64(shift)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::QuadraticForm;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn s(v: i64) -> Scalar {
        Q.from_i64(v)
    }

    #[test]
    fn rho_of_one_is_identity() {
        let ctx = AlgebraContext::new(3, Q).unwrap();
        let f = BilinearForm::from_fn(ctx, |i, j| s((i * 3 + j) as i64 - 4));
        let cctx = CliffordContext::new(f.quadratic());
        let m = rho_matrix(&f, &CliffElt::one(&cctx)).unwrap();
        assert_eq!(m.matrix(), &Matrix::identity(Q, 8));
    }

    #[test]
    fn rho_in_dimension_one() {
        let ctx = AlgebraContext::new(1, Q).unwrap();
        let f = BilinearForm::identity(ctx);
        let cctx = CliffordContext::new(f.quadratic());
        let m = rho_matrix(&f, &CliffElt::blade(&cctx, &[0]).unwrap()).unwrap();
        let expected = Matrix::from_rows(Q, vec![vec![s(0), s(1)], vec![s(1), s(0)]]).unwrap();
        assert_eq!(m.matrix(), &expected);
    }

    #[test]
    fn rho_rejects_large_dimension() {
        let ctx = AlgebraContext::new(13, Q).unwrap();
        let f = BilinearForm::zero(ctx);
        let cctx = CliffordContext::new(QuadraticForm::zero(ctx));
        let err = rho_matrix(&f, &CliffElt::one(&cctx)).unwrap_err();
        assert!(matches!(err, Error::DimensionGuard { limit: 12, .. }));
    }

    #[test]
    fn equivalence_examples() {
        let ctx = AlgebraContext::new(2, Q).unwrap();
        let f = BilinearForm::identity(ctx);
        let cctx = CliffordContext::new(f.quadratic());
        let e12 = CliffElt::blade(&cctx, &[0, 1]).unwrap();
        let zero = BilinearForm::zero(ctx);
        assert!(check_equivalence(&f, &zero, std::slice::from_ref(&e12)).unwrap().passed());
        let a = BilinearForm::from_fn(ctx, |i, j| s(j as i64 - i as i64));
        let report = check_equivalence(&f, &a, &[e12]).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(matches!(check_equivalence(&f, &f, &[]), Err(Error::NotAlternating)));
    }

    #[test]
    fn probe_identity_gives_full_flag() {
        let report = invariant_probe(&[Matrix::identity(Q, 4)], 1).unwrap();
        assert_eq!(report.dimensions(), vec![1, 2, 3]);
    }

    #[test]
    fn probe_full_matrix_algebra_finds_nothing() {
        let d = 4;
        let mats: Vec<Matrix> = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut m = Matrix::zeros(Q, d, d);
                m.set(i, j, s(1));
                m
            })
            .collect();
        let report = invariant_probe(&mats, 7).unwrap();
        assert!(!report.found());
    }

    #[test]
    fn probe_finds_block_structure() {
        // direct sum of a 2x2 rotation-like block and a 1x1 block
        let m = Matrix::from_rows(
            Q,
            vec![
                vec![s(0), s(-1), s(0)],
                vec![s(1), s(0), s(0)],
                vec![s(0), s(0), s(5)],
            ],
        )
        .unwrap();
        let report = invariant_probe(std::slice::from_ref(&m), 3).unwrap();
        assert_eq!(report.dimensions(), vec![1, 2]);
        for sub in &report.subspaces {
            assert!(is_invariant(std::slice::from_ref(&m), &sub.basis));
        }
    }

    #[test]
    fn probe_rejects_mismatched_sizes() {
        let err = invariant_probe(&[Matrix::identity(Q, 2), Matrix::identity(Q, 3)], 0).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }
}
