//! Named identity suites, runnable by id with a seed and a sample count.
//!
//! Sample `i` of a run draws from its own ChaCha8 stream (`seed`, stream `i`),
//! so results do not depend on how many samples run before it. Without an
//! explicit field, samples cycle through the suite's default fields.

use std::fmt::Debug;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use serde::Serialize;

use crate::clifford::{
    bl_action, bl_map, cl_apply_i, cl_apply_i_form, e_bar, exp_contract, interior, pi_q, quantize,
    symbol, twisted_mul, CliffElt, CliffordContext,
};
use crate::error::{Error, Result};
use crate::forms::{AlgebraContext, BilinearForm, DualTwoForm, QuadraticForm};
use crate::linalg::Matrix;
use crate::random;
use crate::repcheck::{
    bl_matrix, check_equivalence, invariant_probe, is_invariant, left_ideal_restriction,
    rho_matrix,
};
use crate::scalar::{FieldSpec, Scalar};
use crate::tensor::{
    apply_e, apply_i, divided_power, lambda_big, lambda_map, TensorElt, Vector,
};

const GF2: FieldSpec = FieldSpec::PrimeField(2);
const GF7: FieldSpec = FieldSpec::PrimeField(7);
const RATIONALS: FieldSpec = FieldSpec::Rationals;

/// Which fields a suite is meaningful over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fields {
    /// Every field; defaults to ℚ, GF(2), GF(7).
    Any,
    /// Characteristic ≠ 2; defaults to ℚ, GF(7).
    NotTwo,
    /// Characteristic 0 only.
    Zero,
}

impl Fields {
    fn defaults(self) -> &'static [FieldSpec] {
        match self {
            Fields::Any => &[RATIONALS, GF2, GF7],
            Fields::NotTwo => &[RATIONALS, GF7],
            Fields::Zero => &[RATIONALS],
        }
    }

    fn admits(self, field: FieldSpec) -> bool {
        match self {
            Fields::Any => true,
            Fields::NotTwo => field.characteristic() != 2,
            Fields::Zero => field.characteristic() == 0,
        }
    }
}

/// Per-sample state: a random stream plus the field and dimension in use.
pub struct Case {
    pub rng: ChaCha8Rng,
    pub field: FieldSpec,
    pub dim: usize,
}

#[derive(Debug)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

pub type Outcome = std::result::Result<(), Failure>;

fn expect_eq<T: PartialEq + Debug>(what: &str, left: T, right: T) -> Outcome {
    if left == right {
        Ok(())
    } else {
        Err(Failure(format!("{what}: {left:?} != {right:?}")))
    }
}

fn expect(what: &str, cond: bool) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Failure(what.to_string()))
    }
}

impl Case {
    pub fn ctx(&self) -> AlgebraContext {
        AlgebraContext::new(self.dim, self.field).expect("suite dimensions are positive")
    }

    fn tensor(&mut self, max_degree: usize) -> TensorElt {
        random::tensor(&self.ctx(), max_degree, 4, &mut self.rng)
    }

    fn bilinear(&mut self) -> BilinearForm {
        random::bilinear(&self.ctx(), &mut self.rng)
    }

    fn alternating(&mut self) -> BilinearForm {
        random::alternating(&self.ctx(), &mut self.rng)
    }

    fn vector(&mut self) -> Vector {
        random::vector(&self.ctx(), &mut self.rng)
    }

    fn linear_form(&mut self) -> crate::forms::LinearForm {
        random::linear_form(&self.ctx(), &mut self.rng)
    }

    fn quadratic(&mut self) -> QuadraticForm {
        random::quadratic(&self.ctx(), &mut self.rng)
    }

    fn cctx(&mut self) -> CliffordContext {
        CliffordContext::new(self.quadratic())
    }

    fn cliff(&mut self, cctx: &CliffordContext) -> CliffElt {
        random::cliff(cctx, 4, &mut self.rng)
    }
}

/// A registered identity suite.
pub struct Suite {
    pub id: &'static str,
    pub summary: &'static str,
    pub fields: Fields,
    /// Default dimension range when none is requested.
    pub dims: (usize, usize),
    run: fn(&mut Case) -> Outcome,
}

impl Suite {
    /// Run a single prepared case.
    pub fn run_case(&self, case: &mut Case) -> Outcome {
        (self.run)(case)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub sample: usize,
    pub field: FieldSpec,
    pub dim: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub seed: u64,
    pub samples: usize,
    pub failures: Vec<CaseFailure>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub samples: usize,
    pub field: Option<FieldSpec>,
    pub dim: Option<usize>,
}

/// Failures beyond this many are counted but not itemized.
const MAX_REPORTED_FAILURES: usize = 10;

pub fn find(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

pub fn suites() -> &'static [Suite] {
    SUITES
}

pub fn run_suite(id: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let suite = find(id).ok_or_else(|| Error::Invalid(format!("unknown suite {id:?}")))?;
    if let Some(field) = opts.field {
        if !suite.fields.admits(field) {
            return Err(Error::Characteristic {
                op: suite.id,
                characteristic: field.characteristic(),
                reason: "this suite is not defined in that characteristic",
            });
        }
    }
    if let Some(dim) = opts.dim {
        if dim == 0 || dim > suite.dims.1.max(suite.dims.0) {
            return Err(Error::DimensionGuard {
                op: suite.id,
                dim,
                limit: suite.dims.1,
            });
        }
    }
    let defaults = suite.fields.defaults();
    let mut report = SuiteReport {
        suite: suite.id.to_string(),
        passed: 0,
        failed: 0,
        seed: opts.seed,
        samples: opts.samples,
        failures: Vec::new(),
    };
    for i in 0..opts.samples {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(i as u64);
        let field = opts.field.unwrap_or(defaults[i % defaults.len()]);
        let dim = opts
            .dim
            .unwrap_or_else(|| rng.gen_range(suite.dims.0..=suite.dims.1));
        let mut case = Case { rng, field, dim };
        match suite.run_case(&mut case) {
            Ok(()) => report.passed += 1,
            Err(Failure(message)) => {
                report.failed += 1;
                if report.failures.len() < MAX_REPORTED_FAILURES {
                    report.failures.push(CaseFailure {
                        sample: i,
                        field,
                        dim,
                        message,
                    });
                }
            }
        }
    }
    Ok(report)
}

macro_rules! suite {
    ($id:literal, $summary:literal, $fields:expr, $dims:expr, $run:expr) => {
        Suite {
            id: $id,
            summary: $summary,
            fields: $fields,
            dims: $dims,
            run: $run,
        }
    };
}

static SUITES: &[Suite] = &[
    suite!("forms.polar", "Φ(x, y) = Q(x + y) − Q(x) − Q(y), Φ symmetric, Φ(x, x) = 2Q(x)", Fields::Any, (1, 5), forms_polar),
    suite!("forms.quad-of-bilinear", "Q_F(x) = F(x, x)", Fields::Any, (1, 5), forms_quad_of_bilinear),
    suite!("forms.bf2", "the upper-triangular form of Q reproduces Q (exhaustive over GF(2))", Fields::Any, (1, 4), forms_bf2),
    suite!("forms.pfaffian-det", "Pf(A)² = det(A) for alternating A of even size", Fields::Any, (2, 6), forms_pfaffian_det),
    suite!("forms.split", "F = g + A with g symmetric, A alternating, split unique", Fields::NotTwo, (1, 5), forms_split),
    suite!("forms.dual-roundtrip", "alternating forms ↔ Λ²(V*) are mutually inverse", Fields::Any, (1, 5), forms_dual_roundtrip),
    suite!("tensor.antiderivation", "i_f(u ⊗ v) = i_f(u) ⊗ v + α(u) ⊗ i_f(v), i_f² = 0", Fields::Any, (1, 5), tensor_antiderivation),
    suite!("tensor.anticommutators", "i_f i_g + i_g i_f = 0, e_x i_f + i_f e_x = f(x) Id", Fields::Any, (1, 5), tensor_anticommutators),
    suite!("tensor.lambda-commutation", "i_f Λ_F(u) = Λ_F(i_f u) + (−1)^p Λ_F(u) i_f", Fields::Any, (1, 4), tensor_lambda_commutation),
    suite!("tensor.divided-powers", "a_k a_l = C(k+l, k) a_{k+l}; a_k^F a_l^G = a_l^G a_k^F", Fields::Any, (1, 4), tensor_divided_powers),
    suite!("tensor.exp", "λ_F = Σ (1/k!) (a_1^F)^k", Fields::Zero, (1, 4), tensor_exp),
    suite!("lambda.group-law", "λ_F ∘ λ_G = λ_{F+G}", Fields::Any, (1, 4), lambda_group_law),
    suite!("lambda.inverse", "λ_F ∘ λ_{−F} = Id = λ_{−F} ∘ λ_F", Fields::Any, (1, 4), lambda_inverse),
    suite!("lambda.commutes-i", "λ_F ∘ i_f = i_f ∘ λ_F", Fields::Any, (1, 4), lambda_commutes_i),
    suite!("lambda.radical-lemma", "Λ_F(Λ_G(u)(v))(w) = Λ_{F+G}(u)(Λ_F(v)(w)) for w over Rad_R(G)", Fields::Any, (2, 4), lambda_radical_lemma),
    suite!("lambda.divided-power-sum", "λ_F = Σ_k a_k^F", Fields::Any, (1, 4), lambda_divided_power_sum),
    suite!("lambda.parity", "α ∘ λ_F = λ_F ∘ α, no grades above the input", Fields::Any, (1, 4), lambda_parity),
    suite!("clifford.homomorphism", "π_Q(u ⊗ v) = π_Q(u) π_Q(v)", Fields::Any, (1, 5), clifford_homomorphism),
    suite!("clifford.associativity", "(u v) w = u (v w) in Cl(Q)", Fields::Any, (1, 5), clifford_associativity),
    suite!("clifford.nontrivial", "π_Q(1) ≠ 0 and π_Q is injective on V", Fields::Any, (1, 5), clifford_nontrivial),
    suite!("clifford.quotient-squares", "π_Q(x ⊗ x − Q(x)) = 0", Fields::Any, (1, 5), clifford_quotient_squares),
    suite!("clifford.involutions", "π_Q ∘ α = α ∘ π_Q and π_Q ∘ τ = τ ∘ π_Q", Fields::Any, (1, 4), clifford_involutions),
    suite!("clifford.contraction", "π_Q i_f = ī_f π_Q, ī_f² = 0, ī_f ē_x + ē_x ī_f = f(x)", Fields::Any, (1, 4), clifford_contraction),
    suite!("bl.commutation-square", "bl_F ∘ π_{Q+Q_F} = π_Q ∘ λ_F", Fields::Any, (1, 4), bl_commutation_square),
    suite!("bl.group-law", "bl_F ∘ bl_G = bl_{F+G}", Fields::Any, (1, 4), bl_group_law),
    suite!("bl.inverse", "bl_{−F} ∘ bl_F = Id", Fields::Any, (1, 4), bl_inverse),
    suite!("bl.parity", "bl_F preserves even and odd parts", Fields::Any, (1, 4), bl_parity),
    suite!("bL.homomorphism", "bL_F(u v) = bL_F(u) ∘ bL_F(v)", Fields::Any, (1, 4), big_l_homomorphism),
    suite!("bL.square", "(ē_x + ī_x^F)² = (Q + Q_F)(x) Id and bL_F(u)(1) = bl_F(u)", Fields::Any, (1, 4), big_l_square),
    suite!("bL.composition", "bL_F(bL_G(u)(v))(w) = bL_{F+G}(u)(bL_F(v)(w)) for w over Rad_R(G)", Fields::Any, (2, 4), big_l_composition),
    suite!("twist.associativity", "(u ∘_F v) ∘_F w = u ∘_F (v ∘_F w)", Fields::Any, (1, 4), twist_associativity),
    suite!("twist.transport", "bl_{−F}(u ∘_F v) = bl_{−F}(u) bl_{−F}(v)", Fields::Any, (1, 4), twist_transport),
    suite!("twist.vector", "x ∘_F v = x v + ī_x^F(v)", Fields::Any, (1, 4), twist_vector),
    suite!("interior.module", "ī_{u* ∧ v*} = ī_{u*} ∘ ī_{v*}", Fields::Any, (1, 4), interior_module),
    suite!("interior.prA", "ī_{A*}(x u) = x ī_{A*}(u) + ī_x^A(u)", Fields::Any, (1, 4), interior_pra),
    suite!("exp.gauge", "exp(ī_{A*}) = bl_A", Fields::Zero, (1, 4), exp_gauge),
    suite!("exp.conjugation", "exp(ī_{A*}) ē_x exp(−ī_{A*}) = ē_x + ī_x^A = x ∘_A ·", Fields::Zero, (1, 4), exp_conjugation),
    suite!("symbol.roundtrip", "quantize ∘ symbol = Id and symbol ∘ quantize = Id", Fields::NotTwo, (1, 4), symbol_roundtrip),
    suite!("symbol.orthogonal", "σ_Q(x_1 ⋯ x_k) = x_1 ∧ ⋯ ∧ x_k for orthogonal x_i", Fields::NotTwo, (1, 4), symbol_orthogonal),
    suite!("symbol.antisymmetrization", "n! q_Q(y_1 ∧ ⋯ ∧ y_n) = Σ_σ sgn(σ) y_σ(1) ⋯ y_σ(n)", Fields::NotTwo, (1, 4), symbol_antisymmetrization),
    suite!("rho.homomorphism", "ρ_F(u v) = ρ_F(u) ρ_F(v)", Fields::Any, (1, 3), rho_homomorphism),
    suite!("rho.unit-column", "column ∅ of ρ_F(u) is bl_F(u); ρ_F(x)² = Q_F(x)", Fields::Any, (1, 3), rho_unit_column),
    suite!("rho.equivalence", "ρ_{F+A}(a) M_A = M_A ρ_F(a)", Fields::Any, (1, 4), rho_equivalence),
    suite!("probe.intertwined", "invariant subspaces of the twisted and untwisted split-signature ideal correspond under M_A", Fields::Zero, (4, 4), probe_intertwined),
];

fn forms_polar(c: &mut Case) -> Outcome {
    let q = c.quadratic();
    let (x, y) = (c.vector(), c.vector());
    let phi = q.polar_form();
    let lhs = phi.eval(x.coeffs(), y.coeffs());
    let rhs = q.eval(x.add(&y).coeffs()) - q.eval(x.coeffs()) - q.eval(y.coeffs());
    expect_eq("polar identity", lhs, rhs)?;
    expect("polar form symmetric", phi.is_symmetric())?;
    let two = c.field.from_i64(2);
    expect_eq("Φ(x,x) = 2Q(x)", phi.eval(x.coeffs(), x.coeffs()), two * q.eval(x.coeffs()))
}

fn forms_quad_of_bilinear(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let q = f.quadratic();
    for x in sample_vectors(c) {
        expect_eq("Q_F(x) = F(x,x)", q.eval(&x), f.eval(&x, &x))?;
    }
    Ok(())
}

/// Every vector over GF(2) for n ≤ 4, otherwise a handful of random ones.
fn sample_vectors(c: &mut Case) -> Vec<Vec<Scalar>> {
    if c.field == GF2 && c.dim <= 4 {
        all_vectors(c.field, c.dim)
    } else {
        (0..4).map(|_| c.vector().coeffs().to_vec()).collect()
    }
}

pub(crate) fn all_vectors(field: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    (0u32..1 << n)
        .map(|m| (0..n).map(|i| field.from_u64(u64::from(m >> i & 1))).collect())
        .collect()
}

fn forms_bf2(c: &mut Case) -> Outcome {
    let q = c.quadratic();
    let f = q.bf2_bilinear();
    expect("quadratic of bf2 equals Q", crate::clifford::same_form(&f.quadratic(), &q))?;
    for x in sample_vectors(c) {
        expect_eq("F(x,x) = Q(x)", f.eval(&x, &x), q.eval(&x))?;
    }
    Ok(())
}

fn forms_pfaffian_det(c: &mut Case) -> Outcome {
    let n = c.dim + c.dim % 2;
    let a = random::alternating_matrix(c.field, n, &mut c.rng);
    let pf = a.pfaffian()?;
    expect_eq("Pf² = det", &pf * &pf, a.determinant())
}

fn forms_split(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let (g, a) = f.split_sym_alt()?;
    expect("g symmetric", g.is_symmetric())?;
    expect("A alternating", a.is_alternating())?;
    expect_eq("g + A = F", g.add(&a)?, f)?;
    let (g2, a2) = g.add(&a)?.split_sym_alt()?;
    expect_eq("unique split", (g2, a2), (g, a))
}

fn forms_dual_roundtrip(c: &mut Case) -> Outcome {
    let a = c.alternating();
    let d = DualTwoForm::from_alternating(&a)?;
    expect_eq("alt → dual → alt", d.alternating_form(), a)?;
    expect_eq("dual → alt → dual", DualTwoForm::from_alternating(&d.alternating_form())?, d)
}

fn tensor_antiderivation(c: &mut Case) -> Outcome {
    let f = c.linear_form();
    let (u, v) = (c.tensor(3), c.tensor(3));
    expect("i_f² = 0", apply_i(&f, &apply_i(&f, &u)?)?.is_zero())?;
    let lhs = apply_i(&f, &u.mul(&v)?)?;
    let rhs = apply_i(&f, &u)?.mul(&v)?.add(&u.alpha().mul(&apply_i(&f, &v)?)?)?;
    expect_eq("graded Leibniz rule", lhs, rhs)
}

fn tensor_anticommutators(c: &mut Case) -> Outcome {
    let (f, g) = (c.linear_form(), c.linear_form());
    let x = c.vector();
    let u = c.tensor(5);
    let ifg = apply_i(&f, &apply_i(&g, &u)?)?;
    let igf = apply_i(&g, &apply_i(&f, &u)?)?;
    expect("i_f i_g + i_g i_f = 0", ifg.add(&igf)?.is_zero())?;
    let lhs = apply_e(&x, &apply_i(&f, &u)?)?.add(&apply_i(&f, &apply_e(&x, &u)?)?)?;
    expect_eq("e_x i_f + i_f e_x = f(x)", lhs, u.scale(&f.eval(x.coeffs())))
}

fn tensor_lambda_commutation(c: &mut Case) -> Outcome {
    let form = c.bilinear();
    let f = c.linear_form();
    let p = c.rng.gen_range(0..=3);
    let u = random::homogeneous_tensor(&c.ctx(), p, 3, &mut c.rng);
    let v = c.tensor(3);
    let lhs = apply_i(&f, &lambda_big(&form, &u, &v)?)?;
    let mut last = lambda_big(&form, &u, &apply_i(&f, &v)?)?;
    if p % 2 == 1 {
        last = last.neg();
    }
    let rhs = lambda_big(&form, &apply_i(&f, &u)?, &v)?.add(&last)?;
    expect_eq("i_f Λ_F(u)", lhs, rhs)
}

fn tensor_divided_powers(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let g = c.bilinear();
    let u = random::homogeneous_tensor(&c.ctx(), 6, 3, &mut c.rng);
    let k = c.rng.gen_range(0..=2);
    let l = c.rng.gen_range(0..=(3 - k));
    let lhs = divided_power(&f, k, &divided_power(&f, l, &u)?)?;
    let rhs = divided_power(&f, k + l, &u)?.scale(&c.field.binomial((k + l) as u64, k as u64));
    expect_eq("a_k a_l = C(k+l,k) a_{k+l}", lhs, rhs)?;
    let fg = divided_power(&f, k, &divided_power(&g, l, &u)?)?;
    let gf = divided_power(&g, l, &divided_power(&f, k, &u)?)?;
    expect_eq("a_k^F a_l^G = a_l^G a_k^F", fg, gf)
}

fn tensor_exp(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let u = c.tensor(6);
    let mut total = u.clone();
    let mut power = u.clone();
    let mut k = 0;
    while !power.is_zero() {
        k += 1;
        power = divided_power(&f, 1, &power)?;
        let inv = c.field.inverse_factorial(k).expect("characteristic 0");
        total = total.add(&power.scale(&inv))?;
    }
    expect_eq("exp(a_1) = λ_F", total, lambda_map(&f, &u)?)
}

fn lambda_group_law(c: &mut Case) -> Outcome {
    let (f, g) = (c.bilinear(), c.bilinear());
    let u = c.tensor(5);
    expect_eq(
        "λ_F λ_G = λ_{F+G}",
        lambda_map(&f, &lambda_map(&g, &u)?)?,
        lambda_map(&f.add(&g)?, &u)?,
    )
}

fn lambda_inverse(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let u = c.tensor(5);
    expect_eq("λ_{−F} λ_F = Id", lambda_map(&f.neg(), &lambda_map(&f, &u)?)?, u.clone())?;
    expect_eq("λ_F λ_{−F} = Id", lambda_map(&f, &lambda_map(&f.neg(), &u)?)?, u)
}

fn lambda_commutes_i(c: &mut Case) -> Outcome {
    let form = c.bilinear();
    let f = c.linear_form();
    let u = c.tensor(5);
    expect_eq(
        "λ_F i_f = i_f λ_F",
        lambda_map(&form, &apply_i(&f, &u)?)?,
        apply_i(&f, &lambda_map(&form, &u)?)?,
    )
}

/// A random form with a nonzero right radical: a sum of fewer than n rank-one forms.
fn degenerate_form(c: &mut Case) -> BilinearForm {
    let ctx = c.ctx();
    let rank = c.rng.gen_range(0..ctx.dim());
    let pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = (0..rank)
        .map(|_| (c.vector().coeffs().to_vec(), c.vector().coeffs().to_vec()))
        .collect();
    BilinearForm::from_fn(ctx, |i, j| {
        pairs
            .iter()
            .fold(ctx.field().zero(), |acc, (a, b)| acc + &a[i] * &b[j])
    })
}

/// A random tensor built from products of vectors in `span`.
fn tensor_over(c: &mut Case, span: &[Vec<Scalar>]) -> Result<TensorElt> {
    let ctx = c.ctx();
    let mut out = TensorElt::scalar(ctx, random::scalar(c.field, &mut c.rng));
    if span.is_empty() {
        return Ok(out);
    }
    for _ in 0..2 {
        let len = c.rng.gen_range(1..=2);
        let mut term = TensorElt::one(ctx);
        for _ in 0..len {
            let mut v = ctx.zero_vector();
            for b in span {
                let s = random::scalar(c.field, &mut c.rng);
                v = v.iter().zip(b).map(|(x, y)| x + &(&s * y)).collect();
            }
            term = term.mul(&TensorElt::vector(&Vector::new(ctx, v)?))?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

fn lambda_radical_lemma(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let g = degenerate_form(c);
    let radical = g.right_radical();
    let (u, v) = (c.tensor(2), c.tensor(2));
    let w = tensor_over(c, &radical)?;
    let lhs = lambda_big(&f, &lambda_big(&g, &u, &v)?, &w)?;
    let rhs = lambda_big(&f.add(&g)?, &u, &lambda_big(&f, &v, &w)?)?;
    expect_eq("radical lemma", lhs, rhs)
}

fn lambda_divided_power_sum(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let u = c.tensor(6);
    let top = u.max_grade().unwrap_or(0) / 2;
    let mut total = TensorElt::zero(c.ctx());
    for k in 0..=top {
        total = total.add(&divided_power(&f, k, &u)?)?;
    }
    expect_eq("Σ a_k = λ_F", total, lambda_map(&f, &u)?)
}

fn lambda_parity(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let u = c.tensor(5);
    let l = lambda_map(&f, &u)?;
    expect_eq("α λ_F = λ_F α", l.alpha(), lambda_map(&f, &u.alpha())?)?;
    expect("grade bound", l.max_grade() <= u.max_grade())
}

fn clifford_homomorphism(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let (u, v) = (c.tensor(3), c.tensor(3));
    expect_eq(
        "π(u ⊗ v) = π(u) π(v)",
        pi_q(&cctx, &u.mul(&v)?)?,
        pi_q(&cctx, &u)?.mul(&pi_q(&cctx, &v)?)?,
    )
}

fn clifford_associativity(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let (a, b, d) = (c.cliff(&cctx), c.cliff(&cctx), c.cliff(&cctx));
    expect_eq("(ab)c = a(bc)", a.mul(&b)?.mul(&d)?, a.mul(&b.mul(&d)?)?)
}

fn clifford_nontrivial(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    expect("π(1) ≠ 0", !pi_q(&cctx, &TensorElt::one(c.ctx()))?.is_zero())?;
    let x = c.vector();
    let image = pi_q(&cctx, &TensorElt::vector(&x))?;
    let x_is_zero = x.support().next().is_none();
    expect_eq("π injective on V", image.is_zero(), x_is_zero)
}

fn clifford_quotient_squares(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let x = TensorElt::vector(&c.vector());
    let qx = cctx.quadratic().eval(c_vector_coeffs(&x, c.dim).as_slice());
    let rel = x.mul(&x)?.sub(&TensorElt::scalar(c.ctx(), qx))?;
    expect("π(x⊗x − Q(x)) = 0", pi_q(&cctx, &rel)?.is_zero())
}

fn c_vector_coeffs(x: &TensorElt, n: usize) -> Vec<Scalar> {
    (0..n).map(|i| x.coeff(&[i])).collect()
}

fn clifford_involutions(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let u = c.tensor(4);
    expect_eq("π α = α π", pi_q(&cctx, &u.alpha())?, pi_q(&cctx, &u)?.alpha())?;
    expect_eq("π τ = τ π", pi_q(&cctx, &u.tau())?, pi_q(&cctx, &u)?.tau())
}

fn clifford_contraction(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let (f, g) = (c.linear_form(), c.linear_form());
    let x = c.vector();
    let u = c.tensor(4);
    let w = pi_q(&cctx, &u)?;
    expect_eq("π i_f = ī_f π", pi_q(&cctx, &apply_i(&f, &u)?)?, cl_apply_i(&f, &w)?)?;
    expect("ī_f² = 0", cl_apply_i(&f, &cl_apply_i(&f, &w)?)?.is_zero())?;
    let fg = cl_apply_i(&f, &cl_apply_i(&g, &w)?)?;
    let gf = cl_apply_i(&g, &cl_apply_i(&f, &w)?)?;
    expect("ī_f ī_g + ī_g ī_f = 0", fg.add(&gf)?.is_zero())?;
    let lhs = cl_apply_i(&f, &e_bar(&x, &w)?)?.add(&e_bar(&x, &cl_apply_i(&f, &w)?)?)?;
    expect_eq("ī_f ē_x + ē_x ī_f = f(x)", lhs, w.scale(&f.eval(x.coeffs())))
}

fn bl_commutation_square(c: &mut Case) -> Outcome {
    let target = c.cctx();
    let f = c.bilinear();
    let source = target.deformed(&f)?;
    let u = c.tensor(4);
    expect_eq(
        "bl_F π' = π λ_F",
        bl_map(&f, &target, &pi_q(&source, &u)?)?,
        pi_q(&target, &lambda_map(&f, &u)?)?,
    )
}

fn bl_group_law(c: &mut Case) -> Outcome {
    let base = c.cctx();
    let (f, g) = (c.bilinear(), c.bilinear());
    let mid = base.deformed(&f)?;
    let top = mid.deformed(&g)?;
    let w = c.cliff(&top);
    expect_eq(
        "bl_F bl_G = bl_{F+G}",
        bl_map(&f, &base, &bl_map(&g, &mid, &w)?)?,
        bl_map(&f.add(&g)?, &base, &w)?,
    )
}

fn bl_inverse(c: &mut Case) -> Outcome {
    let base = c.cctx();
    let f = c.bilinear();
    let up = base.deformed(&f)?;
    let w = c.cliff(&up);
    expect_eq("bl_{−F} bl_F = Id", bl_map(&f.neg(), &up, &bl_map(&f, &base, &w)?)?, w)
}

fn bl_parity(c: &mut Case) -> Outcome {
    let base = c.cctx();
    let f = c.bilinear();
    let up = base.deformed(&f)?;
    let w = c.cliff(&up);
    for parity in 0..2 {
        let image = bl_map(&f, &base, &w.parity_part(parity))?;
        expect_eq("parity preserved", image.parity_part(parity), image)?;
    }
    Ok(())
}

fn big_l_homomorphism(c: &mut Case) -> Outcome {
    let base = c.cctx();
    let f = c.bilinear();
    let up = base.deformed(&f)?;
    let (u, v) = (c.cliff(&up), c.cliff(&up));
    let w = c.cliff(&base);
    expect_eq(
        "bL(uv) = bL(u) bL(v)",
        bl_action(&f, &u.mul(&v)?, &w)?,
        bl_action(&f, &u, &bl_action(&f, &v, &w)?)?,
    )
}

fn big_l_square(c: &mut Case) -> Outcome {
    let base = c.cctx();
    let f = c.bilinear();
    let up = base.deformed(&f)?;
    let x = c.vector();
    let w = c.cliff(&base);
    let xe = CliffElt::vector(&up, &x)?;
    let twice = bl_action(&f, &xe, &bl_action(&f, &xe, &w)?)?;
    expect_eq("(ē_x + ī_x^F)² = Q'(x)", twice, w.scale(&up.quadratic().eval(x.coeffs())))?;
    let u = c.cliff(&up);
    expect_eq("bL_F(u)(1) = bl_F(u)", bl_action(&f, &u, &CliffElt::one(&base))?, bl_map(&f, &base, &u)?)
}

fn big_l_composition(c: &mut Case) -> Outcome {
    let base = c.cctx();
    let f = c.bilinear();
    let g = degenerate_form(c);
    let mid = base.deformed(&f)?;
    let top = base.deformed(&f.add(&g)?)?;
    let u = c.cliff(&top);
    let v = c.cliff(&mid);
    let radical = g.right_radical();
    let w = pi_q(&base, &tensor_over(c, &radical)?)?;
    let lhs = bl_action(&f, &bl_action(&g, &u, &v)?, &w)?;
    let rhs = bl_action(&f.add(&g)?, &u, &bl_action(&f, &v, &w)?)?;
    expect_eq("bL composition", lhs, rhs)
}

fn twist_associativity(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let f = c.bilinear();
    let (u, v, w) = (c.cliff(&cctx), c.cliff(&cctx), c.cliff(&cctx));
    let left = twisted_mul(&f, &twisted_mul(&f, &u, &v)?, &w)?;
    let right = twisted_mul(&f, &u, &twisted_mul(&f, &v, &w)?)?;
    expect_eq("∘_F associative", left, right)
}

fn twist_transport(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let f = c.bilinear();
    let up = cctx.deformed(&f)?;
    let (u, v) = (c.cliff(&cctx), c.cliff(&cctx));
    let down = |e: &CliffElt| bl_map(&f.neg(), &up, e);
    expect_eq("transport", down(&twisted_mul(&f, &u, &v)?)?, down(&u)?.mul(&down(&v)?)?)
}

fn twist_vector(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let f = c.bilinear();
    let x = c.vector();
    let v = c.cliff(&cctx);
    let xe = CliffElt::vector(&cctx, &x)?;
    let rhs = xe.mul(&v)?.add(&cl_apply_i_form(&f, &x, &v)?)?;
    expect_eq("x ∘_F v", twisted_mul(&f, &xe, &v)?, rhs)
}

fn interior_module(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let a = random::dual_elt(&c.ctx(), 3, &mut c.rng);
    let b = random::dual_elt(&c.ctx(), 3, &mut c.rng);
    let w = c.cliff(&cctx);
    expect_eq(
        "ī_{a∧b} = ī_a ī_b",
        interior(&a.wedge(&b)?, &w)?,
        interior(&a, &interior(&b, &w)?)?,
    )
}

fn interior_pra(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let astar = random::dual_two_form(&c.ctx(), &mut c.rng);
    let a = astar.alternating_form();
    let d = crate::clifford::DualElt::from_two_form(&astar);
    let x = c.vector();
    let u = c.cliff(&cctx);
    let lhs = interior(&d, &e_bar(&x, &u)?)?;
    let rhs = e_bar(&x, &interior(&d, &u)?)?.add(&cl_apply_i_form(&a, &x, &u)?)?;
    expect_eq("ī_{A*}(xu)", lhs, rhs)
}

fn exp_gauge(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let astar = random::dual_two_form(&c.ctx(), &mut c.rng);
    let w = c.cliff(&cctx);
    expect_eq(
        "exp(ī_{A*}) = bl_A",
        exp_contract(&astar, &w)?,
        bl_map(&astar.alternating_form(), &cctx, &w)?,
    )
}

fn exp_conjugation(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let astar = random::dual_two_form(&c.ctx(), &mut c.rng);
    let a = astar.alternating_form();
    let x = c.vector();
    let w = c.cliff(&cctx);
    let conj = exp_contract(&astar, &e_bar(&x, &exp_contract(&astar.neg(), &w)?)?)?;
    let rhs = e_bar(&x, &w)?.add(&cl_apply_i_form(&a, &x, &w)?)?;
    expect_eq("conjugated ē_x", conj.clone(), rhs)?;
    expect_eq("x ∘_A w", conj, twisted_mul(&a, &CliffElt::vector(&cctx, &x)?, &w)?)
}

fn symbol_roundtrip(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let w = c.cliff(&cctx);
    expect_eq("q σ = Id", quantize(&cctx, &symbol(&w)?)?, w)?;
    let ext = CliffordContext::exterior(c.ctx());
    let e = c.cliff(&ext);
    expect_eq("σ q = Id", symbol(&quantize(&cctx, &e)?)?, e)
}

fn symbol_orthogonal(c: &mut Case) -> Outcome {
    let ctx = c.ctx();
    let diag = random::coords(&ctx, &mut c.rng);
    let cctx = CliffordContext::new(QuadraticForm::diagonal(ctx, diag)?);
    let ext = CliffordContext::exterior(ctx);
    let indices: Vec<usize> = (0..c.dim).filter(|_| c.rng.gen_bool(0.5)).collect();
    let s = random::scalar(c.field, &mut c.rng);
    let w = CliffElt::blade(&cctx, &indices)?.scale(&s);
    expect_eq("σ(e_S) = e_S", symbol(&w)?, w.recast(&ext)?)
}

/// All permutations of 0..n with their signs (true = odd).
pub(crate) fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        // insert n-1 at each position; moving it left past k entries flips k times
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push((q, odd ^ ((p.len() - pos) % 2 == 1)));
        }
    }
    out
}

fn symbol_antisymmetrization(c: &mut Case) -> Outcome {
    let cctx = c.cctx();
    let ext = CliffordContext::exterior(c.ctx());
    let k = c.rng.gen_range(1..=c.dim.min(4));
    let ys: Vec<Vector> = (0..k).map(|_| c.vector()).collect();
    let mut wedge = CliffElt::one(&ext);
    for y in &ys {
        wedge = wedge.mul(&CliffElt::vector(&ext, y)?)?;
    }
    let factorial = (1..=k as u64).fold(c.field.one(), |acc, i| acc * c.field.from_u64(i));
    let lhs = quantize(&cctx, &wedge)?.scale(&factorial);
    let mut rhs = CliffElt::zero(&cctx);
    for (perm, odd) in permutations(k) {
        let mut prod = CliffElt::one(&cctx);
        for &i in &perm {
            prod = prod.mul(&CliffElt::vector(&cctx, &ys[i])?)?;
        }
        rhs = if odd { rhs.sub(&prod)? } else { rhs.add(&prod)? };
    }
    expect_eq("n! q(y_1 ∧ … ∧ y_n)", lhs, rhs)
}

fn rho_homomorphism(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let cctx = CliffordContext::new(f.quadratic());
    let (u, v) = (c.cliff(&cctx), c.cliff(&cctx));
    expect_eq(
        "ρ(uv) = ρ(u)ρ(v)",
        rho_matrix(&f, &u.mul(&v)?)?,
        rho_matrix(&f, &u)?.mul(&rho_matrix(&f, &v)?),
    )
}

fn rho_unit_column(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let cctx = CliffordContext::new(f.quadratic());
    let ext = CliffordContext::exterior(c.ctx());
    let u = c.cliff(&cctx);
    let m = rho_matrix(&f, &u)?;
    expect_eq("unit column", m.unit_column(), bl_map(&f, &ext, &u)?.to_dense())?;
    expect("faithful on the unit column", u.is_zero() == m.unit_column().iter().all(Scalar::is_zero))?;
    let x = c.vector();
    let rx = rho_matrix(&f, &CliffElt::vector(&cctx, &x)?)?;
    let qx = f.quadratic().eval(x.coeffs());
    let id = Matrix::identity(c.field, 1 << c.dim);
    expect_eq("ρ(x)² = Q_F(x)", rx.matrix().mul(rx.matrix()), id.scale(&qx))
}

fn rho_equivalence(c: &mut Case) -> Outcome {
    let f = c.bilinear();
    let a = c.alternating();
    let cctx = CliffordContext::new(f.quadratic());
    let sample = c.cliff(&cctx);
    let report = check_equivalence(&f, &a, &[sample])?;
    match report.failures.first() {
        None => Ok(()),
        Some(fail) => Err(Failure(format!(
            "entry ({}, {}): {} != {}",
            fail.row, fail.col, fail.left, fail.right
        ))),
    }
}

/// diag(1, 1, −1, −1) in dimension 4.
pub fn split_signature_metric(field: FieldSpec) -> BilinearForm {
    let ctx = AlgebraContext::new(4, field).expect("dimension 4");
    BilinearForm::from_fn(ctx, |i, j| {
        if i != j {
            field.zero()
        } else if i < 2 {
            field.one()
        } else {
            -field.one()
        }
    })
}

/// (1 + e_1)/2, an idempotent whenever Q(e_1) = 1.
pub fn half_plus_half_e1(cctx: &CliffordContext) -> Result<CliffElt> {
    let half = crate::forms::half(cctx.base().field(), "half_plus_half_e1")?;
    Ok(CliffElt::one(cctx).add(&CliffElt::blade(cctx, &[0])?)?.scale(&half))
}

fn probe_intertwined(c: &mut Case) -> Outcome {
    let g = split_signature_metric(c.field);
    let mut a = c.alternating();
    while a.is_zero() {
        a = c.alternating();
    }
    let twisted = g.add(&a)?;
    let cctx = CliffordContext::new(g.quadratic());
    let idem = half_plus_half_e1(&cctx)?;
    let (basis, mats) = left_ideal_restriction(&g, &idem)?;
    let (basis_t, mats_t) = left_ideal_restriction(&twisted, &idem)?;
    expect_eq("ideal dimension", (basis.len(), basis_t.len()), (8, 8))?;
    let seed = c.rng.gen();
    let plain = invariant_probe(&mats, seed)?;
    let twist = invariant_probe(&mats_t, seed)?;
    expect("found a proper invariant subspace", plain.found() && twist.found())?;
    expect_eq("dimension lists", plain.dimensions(), twist.dimensions())?;
    let ma = bl_matrix(&a)?;
    let field = c.field;
    let frame_t = Matrix::from_columns(field, 16, &basis_t);
    for sub in &plain.subspaces {
        let mut mapped = Vec::new();
        for coords in &sub.basis {
            let mut v = vec![field.zero(); 16];
            for (ci, b) in coords.iter().zip(&basis) {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = &*x + &(ci * y);
                }
            }
            let image = ma.matrix().mul_vec(&v);
            let local = frame_t
                .solve_in_column_span(&image)
                .ok_or_else(|| Failure("M_A does not map the ideal onto the twisted ideal".into()))?;
            mapped.push(local);
        }
        expect("image of an invariant subspace is invariant", is_invariant(&mats_t, &mapped))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = suites().iter().map(|s| s.id).collect();
        ids.sort();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        let odd = perms.iter().filter(|(_, o)| *o).count();
        assert_eq!(odd, 3);
        for (p, odd) in perms {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            assert_eq!(odd, inversions % 2 == 1);
        }
    }

    #[test]
    fn unknown_suite_is_invalid() {
        let opts = SuiteOptions { seed: 1, samples: 1, field: None, dim: None };
        assert!(run_suite("nope", &opts).unwrap_err().is_malformed_input());
    }

    #[test]
    fn restricted_field_is_a_domain_error() {
        let opts = SuiteOptions { seed: 1, samples: 1, field: Some(GF7), dim: None };
        let err = run_suite("exp.gauge", &opts).unwrap_err();
        assert!(!err.is_malformed_input());
    }
}
