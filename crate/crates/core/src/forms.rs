//! Bilinear, quadratic and alternating forms on a based n-dimensional space.
//!
//! All forms are stored against the standard basis `e_1..e_n` of an
//! [`AlgebraContext`]. Indices are 0-based in the API and 1-based in JSON.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// The based vector space V = K^n every element and form is built against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    dim: usize,
    field: FieldSpec,
    grade_cap: usize,
}

impl AlgebraContext {
    pub const DEFAULT_GRADE_CAP: usize = 16;
    /// Subsets of the basis are stored as `u64` bitmasks.
    pub const MAX_DIM: usize = 63;

    pub fn new(dim: usize, field: FieldSpec) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("dimension must be at least 1".into()));
        }
        if dim > Self::MAX_DIM {
            return Err(Error::DimensionGuard {
                op: "context",
                dim,
                limit: Self::MAX_DIM,
            });
        }
        Ok(AlgebraContext {
            dim,
            field,
            grade_cap: Self::DEFAULT_GRADE_CAP,
        })
    }

    /// Longest tensor word operations may produce before failing with
    /// [`Error::GradeCap`].
    pub fn with_grade_cap(mut self, cap: usize) -> Self {
        self.grade_cap = cap;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn grade_cap(&self) -> usize {
        self.grade_cap
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    /// Same space and field (the grade cap is a runtime limit, not part of
    /// the algebra).
    pub fn ensure_compatible(&self, other: &AlgebraContext) -> Result<()> {
        if self.dim != other.dim || self.field != other.field {
            return Err(Error::ContextMismatch(format!(
                "dim {} over {} vs dim {} over {}",
                self.dim, self.field, other.dim, other.field
            )));
        }
        Ok(())
    }

    pub fn check_vector(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if let Some(s) = x.iter().find(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: s.field(),
            });
        }
        Ok(())
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    /// The standard basis vector e_i (0-based).
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        v[i] = self.field.one();
        v
    }
}

/// F(x, y) = x^T M y with M[i][j] = F(e_i, e_j).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    ctx: AlgebraContext,
    m: Matrix,
}

impl BilinearForm {
    pub fn new(ctx: AlgebraContext, m: Matrix) -> Result<Self> {
        if m.rows() != ctx.dim() || m.cols() != ctx.dim() {
            return Err(Error::DimensionMismatch {
                expected: ctx.dim(),
                got: if m.rows() != ctx.dim() { m.rows() } else { m.cols() },
            });
        }
        if m.field() != ctx.field() {
            return Err(Error::FieldMismatch {
                left: ctx.field(),
                right: m.field(),
            });
        }
        Ok(BilinearForm { ctx, m })
    }

    pub fn from_rows(ctx: AlgebraContext, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.len() != ctx.dim() {
            return Err(Error::DimensionMismatch {
                expected: ctx.dim(),
                got: rows.len(),
            });
        }
        Self::new(ctx, Matrix::from_rows(ctx.field(), rows)?)
    }

    pub fn from_fn(ctx: AlgebraContext, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let n = ctx.dim();
        let mut m = Matrix::zeros(ctx.field(), n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j));
            }
        }
        BilinearForm { ctx, m }
    }

    pub fn zero(ctx: AlgebraContext) -> Self {
        BilinearForm {
            ctx,
            m: Matrix::zeros(ctx.field(), ctx.dim(), ctx.dim()),
        }
    }

    pub fn identity(ctx: AlgebraContext) -> Self {
        BilinearForm {
            ctx,
            m: Matrix::identity(ctx.field(), ctx.dim()),
        }
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    /// F(e_i, e_j).
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.m.get(i, j)
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let my = self.m.mul_vec(y);
        x.iter()
            .zip(&my)
            .fold(self.ctx.field().zero(), |acc, (a, b)| acc + a * b)
    }

    /// The linear form y ↦ F(x, y).
    pub fn left_partial(&self, x: &[Scalar]) -> LinearForm {
        let coeffs = self.m.transpose().mul_vec(x);
        LinearForm { ctx: self.ctx, coeffs }
    }

    pub fn add(&self, other: &BilinearForm) -> Result<BilinearForm> {
        self.ctx.ensure_compatible(&other.ctx)?;
        Ok(BilinearForm {
            ctx: self.ctx,
            m: self.m.add(&other.m),
        })
    }

    pub fn sub(&self, other: &BilinearForm) -> Result<BilinearForm> {
        self.ctx.ensure_compatible(&other.ctx)?;
        Ok(BilinearForm {
            ctx: self.ctx,
            m: self.m.sub(&other.m),
        })
    }

    pub fn neg(&self) -> BilinearForm {
        self.scale(&-self.ctx.field().one())
    }

    pub fn scale(&self, s: &Scalar) -> BilinearForm {
        BilinearForm {
            ctx: self.ctx,
            m: self.m.scale(s),
        }
    }

    pub fn transpose(&self) -> BilinearForm {
        BilinearForm {
            ctx: self.ctx,
            m: self.m.transpose(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.m == self.m.transpose()
    }

    /// F(x, x) = 0 for all x: zero diagonal and F(e_i,e_j) = -F(e_j,e_i).
    pub fn is_alternating(&self) -> bool {
        let n = self.ctx.dim();
        (0..n).all(|i| {
            self.entry(i, i).is_zero()
                && (i + 1..n).all(|j| (self.entry(i, j) + self.entry(j, i)).is_zero())
        })
    }

    /// Q_F(x) = F(x, x).
    pub fn quadratic(&self) -> QuadraticForm {
        let n = self.ctx.dim();
        let diag = (0..n).map(|i| self.entry(i, i).clone()).collect();
        let mut polar = Matrix::zeros(self.ctx.field(), n, n);
        for i in 0..n {
            for j in i + 1..n {
                polar.set(i, j, self.entry(i, j) + self.entry(j, i));
            }
        }
        QuadraticForm {
            ctx: self.ctx,
            diag,
            polar,
        }
    }

    /// F = g + A with g symmetric and A alternating. Needs 1/2.
    pub fn split_sym_alt(&self) -> Result<(BilinearForm, BilinearForm)> {
        let half = self.half("split_sym_alt")?;
        let t = self.transpose();
        let g = BilinearForm {
            ctx: self.ctx,
            m: self.m.add(&t.m).scale(&half),
        };
        let a = BilinearForm {
            ctx: self.ctx,
            m: self.m.sub(&t.m).scale(&half),
        };
        Ok((g, a))
    }

    fn half(&self, op: &'static str) -> Result<Scalar> {
        half(self.ctx.field(), op)
    }

    /// Pfaffian of an even-dimensional alternating form, by expansion along
    /// the first remaining row with memoization over index subsets.
    pub fn pfaffian(&self) -> Result<Scalar> {
        let n = self.ctx.dim();
        if !n.is_multiple_of(2) {
            return Err(Error::OddDimension(n));
        }
        if !self.is_alternating() {
            return Err(Error::NotAlternating);
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut memo = HashMap::new();
        Ok(self.pfaffian_of(full, &mut memo))
    }

    fn pfaffian_of(&self, set: u64, memo: &mut HashMap<u64, Scalar>) -> Scalar {
        let field = self.ctx.field();
        if set == 0 {
            return field.one();
        }
        if let Some(v) = memo.get(&set) {
            return v.clone();
        }
        let i = set.trailing_zeros() as usize;
        let rest = set & !(1u64 << i);
        let mut acc = field.zero();
        let mut position = 0;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = self.entry(i, j);
            if !a.is_zero() {
                let minor = self.pfaffian_of(rest & !(1u64 << j), memo);
                let term = a * &minor;
                acc = if position % 2 == 0 { acc + term } else { acc - term };
            }
            position += 1;
        }
        memo.insert(set, acc.clone());
        acc
    }

    /// Basis of Rad_R(G) = { w : G(v, w) = 0 for all v }.
    pub fn right_radical(&self) -> Vec<Vec<Scalar>> {
        self.m.null_space()
    }

    pub fn determinant(&self) -> Scalar {
        self.m.determinant().expect("square")
    }
}

pub(crate) fn half(field: FieldSpec, op: &'static str) -> Result<Scalar> {
    if field.characteristic() == 2 {
        return Err(Error::Characteristic {
            op,
            characteristic: 2,
            reason: "1/2 is undefined",
        });
    }
    field.from_i64(2).inverse()
}

/// A quadratic form stored as Q(e_i) and the polar values Φ(e_i, e_j), i < j.
///
/// This is exactly the data that determines Q in every characteristic:
/// Q(Σ a_i e_i) = Σ a_i² Q(e_i) + Σ_{i<j} a_i a_j Φ(e_i, e_j).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    ctx: AlgebraContext,
    diag: Vec<Scalar>,
    /// Only the strictly upper triangle is meaningful; the rest stays zero.
    polar: Matrix,
}

impl QuadraticForm {
    /// `polar_upper` must be n×n with zeros on and below the diagonal.
    pub fn new(ctx: AlgebraContext, diag: Vec<Scalar>, polar_upper: Matrix) -> Result<Self> {
        ctx.check_vector(&diag)?;
        let n = ctx.dim();
        if polar_upper.rows() != n || polar_upper.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: polar_upper.rows(),
            });
        }
        if polar_upper.field() != ctx.field() {
            return Err(Error::FieldMismatch {
                left: ctx.field(),
                right: polar_upper.field(),
            });
        }
        for i in 0..n {
            for j in 0..=i {
                if !polar_upper.get(i, j).is_zero() {
                    return Err(Error::Invalid(format!(
                        "polar_upper entry ({}, {}) lies on or below the diagonal",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(QuadraticForm {
            ctx,
            diag,
            polar: polar_upper,
        })
    }

    pub fn zero(ctx: AlgebraContext) -> Self {
        QuadraticForm {
            ctx,
            diag: ctx.zero_vector(),
            polar: Matrix::zeros(ctx.field(), ctx.dim(), ctx.dim()),
        }
    }

    /// Diagonal form Σ d_i a_i².
    pub fn diagonal(ctx: AlgebraContext, diag: Vec<Scalar>) -> Result<Self> {
        Self::new(ctx, diag, Matrix::zeros(ctx.field(), ctx.dim(), ctx.dim()))
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    /// Q(e_i).
    pub fn diag(&self, i: usize) -> &Scalar {
        &self.diag[i]
    }

    pub fn diag_values(&self) -> &[Scalar] {
        &self.diag
    }

    /// The stored strictly-upper polar matrix.
    pub fn polar_upper(&self) -> &Matrix {
        &self.polar
    }

    /// Φ(e_i, e_j) for any i, j; Φ(e_i, e_i) = 2 Q(e_i).
    pub fn polar(&self, i: usize, j: usize) -> Scalar {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.polar.get(i, j).clone(),
            Greater => self.polar.get(j, i).clone(),
            Equal => &self.diag[i] + &self.diag[i],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(Scalar::is_zero) && self.polar.is_zero()
    }

    /// Q(x) via the basis expansion over single indices and two-element subsets.
    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let n = self.ctx.dim();
        let mut acc = self.ctx.field().zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            acc = acc + &x[i] * &x[i] * &self.diag[i];
            for j in i + 1..n {
                acc = acc + &x[i] * &x[j] * self.polar.get(i, j);
            }
        }
        acc
    }

    /// The polar form Φ(x, y) = Q(x + y) - Q(x) - Q(y).
    pub fn polar_form(&self) -> BilinearForm {
        BilinearForm::from_fn(self.ctx, |i, j| self.polar(i, j))
    }

    /// Upper-triangular F with F(x, x) = Q(x), valid in every characteristic:
    /// f_ii = Q(e_i), f_ij = Φ(e_i, e_j) for i < j, f_ij = 0 for i > j.
    pub fn bf2_bilinear(&self) -> BilinearForm {
        BilinearForm::from_fn(self.ctx, |i, j| {
            use std::cmp::Ordering::*;
            match i.cmp(&j) {
                Less => self.polar.get(i, j).clone(),
                Equal => self.diag[i].clone(),
                Greater => self.ctx.field().zero(),
            }
        })
    }

    pub fn add(&self, other: &QuadraticForm) -> Result<QuadraticForm> {
        self.ctx.ensure_compatible(&other.ctx)?;
        Ok(QuadraticForm {
            ctx: self.ctx,
            diag: self.diag.iter().zip(&other.diag).map(|(a, b)| a + b).collect(),
            polar: self.polar.add(&other.polar),
        })
    }

    /// Q + Q_F, the action of a bilinear form on the space of quadratic forms.
    pub fn deformed_by(&self, f: &BilinearForm) -> Result<QuadraticForm> {
        self.add(&f.quadratic())
    }

    /// The symmetric form Φ/2 with Q(x) = (Φ/2)(x, x). Needs 1/2.
    pub fn half_polar(&self) -> Result<BilinearForm> {
        let h = half(self.ctx.field(), "half_polar")?;
        Ok(self.polar_form().scale(&h))
    }
}

/// A linear form f ∈ V*, given by f(e_i).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    ctx: AlgebraContext,
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(ctx: AlgebraContext, coeffs: Vec<Scalar>) -> Result<Self> {
        ctx.check_vector(&coeffs)?;
        Ok(LinearForm { ctx, coeffs })
    }

    /// The dual basis form e_i*.
    pub fn coordinate(ctx: AlgebraContext, i: usize) -> Self {
        LinearForm {
            ctx,
            coeffs: ctx.basis_vector(i),
        }
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// f(e_i).
    pub fn at(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        self.coeffs
            .iter()
            .zip(x)
            .fold(self.ctx.field().zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        LinearForm {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> LinearForm {
        LinearForm {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }
}

/// A* = Σ_{i<j} c_ij e_i* ∧ e_j* in Λ²(V*).
///
/// The pairing is ⟨f ∧ g, x ∧ y⟩ = g(x) f(y) − f(x) g(y), so the form induced
/// by e_i* ∧ e_j* takes the value −1 on (e_i, e_j): A(e_i, e_j) = −c_ij.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualTwoForm {
    ctx: AlgebraContext,
    coeffs: Matrix,
}

impl DualTwoForm {
    pub fn new(ctx: AlgebraContext, coeffs: Matrix) -> Result<Self> {
        let n = ctx.dim();
        if coeffs.rows() != n || coeffs.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: coeffs.rows(),
            });
        }
        for i in 0..n {
            for j in 0..=i {
                if !coeffs.get(i, j).is_zero() {
                    return Err(Error::Invalid(format!(
                        "two-form coefficient ({}, {}) lies on or below the diagonal",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(DualTwoForm { ctx, coeffs })
    }

    pub fn zero(ctx: AlgebraContext) -> Self {
        DualTwoForm {
            ctx,
            coeffs: Matrix::zeros(ctx.field(), ctx.dim(), ctx.dim()),
        }
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    /// Coefficient of e_i* ∧ e_j*, i < j.
    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        self.coeffs.get(i, j)
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn neg(&self) -> DualTwoForm {
        DualTwoForm {
            ctx: self.ctx,
            coeffs: self.coeffs.scale(&-self.ctx.field().one()),
        }
    }

    /// The alternating form A(x, y) = ⟨A*, x ∧ y⟩.
    pub fn alternating_form(&self) -> BilinearForm {
        BilinearForm::from_fn(self.ctx, |i, j| {
            use std::cmp::Ordering::*;
            match i.cmp(&j) {
                Less => -self.coeffs.get(i, j),
                Greater => self.coeffs.get(j, i).clone(),
                Equal => self.ctx.field().zero(),
            }
        })
    }

    /// Inverse of [`DualTwoForm::alternating_form`].
    pub fn from_alternating(a: &BilinearForm) -> Result<Self> {
        if !a.is_alternating() {
            return Err(Error::NotAlternating);
        }
        let ctx = *a.ctx();
        let n = ctx.dim();
        let mut coeffs = Matrix::zeros(ctx.field(), n, n);
        for i in 0..n {
            for j in i + 1..n {
                coeffs.set(i, j, -a.entry(i, j));
            }
        }
        Ok(DualTwoForm { ctx, coeffs })
    }
}

/// `dual_two_form(A)`: alternating form → Λ²(V*) coefficients.
pub fn dual_two_form(a: &BilinearForm) -> Result<DualTwoForm> {
    DualTwoForm::from_alternating(a)
}

/// `alt_of_dual(A*)`: Λ²(V*) coefficients → alternating form.
pub fn alt_of_dual(a: &DualTwoForm) -> BilinearForm {
    a.alternating_form()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, field: FieldSpec) -> AlgebraContext {
        AlgebraContext::new(n, field).unwrap()
    }

    fn form(field: FieldSpec, rows: &[&[&str]]) -> BilinearForm {
        let c = ctx(rows.len(), field);
        BilinearForm::from_rows(
            c,
            rows.iter()
                .map(|r| r.iter().map(|s| field.parse(s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn quad(field: FieldSpec, diag: &[&str], upper: &[(usize, usize, &str)]) -> QuadraticForm {
        let c = ctx(diag.len(), field);
        let mut p = Matrix::zeros(field, diag.len(), diag.len());
        for &(i, j, v) in upper {
            p.set(i, j, field.parse(v).unwrap());
        }
        QuadraticForm::new(c, diag.iter().map(|s| field.parse(s).unwrap()).collect(), p).unwrap()
    }

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);

    #[test]
    fn polar_of_unit_form() {
        let qf = quad(Q, &["1", "1"], &[]);
        assert_eq!(qf.polar_form(), form(Q, &[&["2", "0"], &["0", "2"]]));
        let over2 = quad(F2, &["1", "1"], &[]);
        let phi = over2.polar_form();
        assert!(phi.is_zero());
        assert!(phi.is_alternating());
    }

    #[test]
    fn polar_of_q_f() {
        let f = form(Q, &[&["0", "1"], &["0", "0"]]);
        assert_eq!(f.quadratic().polar_form(), form(Q, &[&["0", "1"], &["1", "0"]]));
    }

    #[test]
    fn quad_of_bilinear_examples() {
        let id = form(Q, &[&["1", "0"], &["0", "1"]]);
        assert_eq!(id.quadratic(), quad(Q, &["1", "1"], &[]));
        let f = form(Q, &[&["0", "1"], &["0", "0"]]);
        assert_eq!(f.quadratic(), quad(Q, &["0", "0"], &[(0, 1, "1")]));
        let a = form(Q, &[&["0", "3"], &["-3", "0"]]);
        assert!(a.quadratic().is_zero());
    }

    #[test]
    fn eval_quad_examples() {
        let qf = quad(Q, &["1", "1"], &[]);
        assert_eq!(qf.eval(&[Q.one(), Q.one()]), Q.from_i64(2));
        let hyp = quad(Q, &["0", "0"], &[(0, 1, "1")]);
        assert_eq!(hyp.eval(&[Q.from_i64(3), Q.from_i64(5)]), Q.from_i64(15));
        let g = quad(F2, &["1", "1"], &[(0, 1, "1")]);
        assert_eq!(g.eval(&[F2.one(), F2.one()]), F2.one());
    }

    #[test]
    fn bf2_examples() {
        let qf = quad(Q, &["1", "1"], &[(0, 1, "1")]);
        assert_eq!(qf.bf2_bilinear(), form(Q, &[&["1", "1"], &["0", "1"]]));
        assert!(QuadraticForm::zero(ctx(3, Q)).bf2_bilinear().is_zero());
    }

    #[test]
    fn split_examples() {
        let f = form(Q, &[&["0", "1"], &["0", "0"]]);
        let (g, a) = f.split_sym_alt().unwrap();
        assert_eq!(g, form(Q, &[&["0", "1/2"], &["1/2", "0"]]));
        assert_eq!(a, form(Q, &[&["0", "1/2"], &["-1/2", "0"]]));
        let s = form(Q, &[&["1", "2"], &["2", "5"]]);
        let (g, a) = s.split_sym_alt().unwrap();
        assert_eq!(g, s);
        assert!(a.is_zero());
        let f2 = form(F2, &[&["0", "1"], &["0", "0"]]);
        assert!(matches!(f2.split_sym_alt(), Err(Error::Characteristic { characteristic: 2, .. })));
    }

    #[test]
    fn pfaffian_small() {
        assert_eq!(form(Q, &[&["0", "7"], &["-7", "0"]]).pfaffian().unwrap(), Q.from_i64(7));
        // a12 a34 - a13 a24 + a14 a23 with a = (2, 3, 5, 7, 11, 13)
        let a = form(
            Q,
            &[
                &["0", "2", "3", "5"],
                &["-2", "0", "7", "11"],
                &["-3", "-7", "0", "13"],
                &["-5", "-11", "-13", "0"],
            ],
        );
        assert_eq!(a.pfaffian().unwrap(), Q.from_i64(2 * 13 - 3 * 11 + 5 * 7));
    }

    #[test]
    fn pfaffian_errors() {
        let odd = form(Q, &[&["0", "1", "0"], &["-1", "0", "0"], &["0", "0", "0"]]);
        assert_eq!(odd.pfaffian(), Err(Error::OddDimension(3)));
        let sym = form(Q, &[&["0", "1"], &["1", "0"]]);
        assert_eq!(sym.pfaffian(), Err(Error::NotAlternating));
    }

    #[test]
    fn radical_examples() {
        let c = ctx(2, Q);
        assert!(BilinearForm::identity(c).right_radical().is_empty());
        assert_eq!(BilinearForm::zero(c).right_radical().len(), 2);
        let g = form(Q, &[&["1", "0"], &["0", "0"]]);
        assert_eq!(g.right_radical(), vec![vec![Q.zero(), Q.one()]]);
    }

    #[test]
    fn dual_two_form_examples() {
        let c = ctx(2, Q);
        assert!(dual_two_form(&BilinearForm::zero(c)).unwrap().is_zero());
        let a = form(Q, &[&["0", "1"], &["-1", "0"]]);
        let d = dual_two_form(&a).unwrap();
        assert_eq!(d.coeff(0, 1), &Q.from_i64(-1));
        assert_eq!(alt_of_dual(&d), a);
        let sym = form(Q, &[&["0", "1"], &["1", "0"]]);
        assert_eq!(dual_two_form(&sym), Err(Error::NotAlternating));
    }

    #[test]
    fn simple_two_form_matches_pairing() {
        // ⟨e1* ∧ e2*, x ∧ y⟩ = e2*(x) e1*(y) − e1*(x) e2*(y)
        let c = ctx(3, Q);
        let mut m = Matrix::zeros(Q, 3, 3);
        m.set(0, 1, Q.one());
        let a = DualTwoForm::new(c, m).unwrap().alternating_form();
        let x = [Q.from_i64(2), Q.from_i64(3), Q.from_i64(5)];
        let y = [Q.from_i64(7), Q.from_i64(11), Q.from_i64(13)];
        let expected = &x[1] * &y[0] - &x[0] * &y[1];
        assert_eq!(a.eval(&x, &y), expected);
    }

    #[test]
    fn deformation_adds_q_f() {
        let qf = quad(Q, &["1", "2"], &[(0, 1, "3")]);
        let f = form(Q, &[&["1", "4"], &["5", "0"]]);
        assert_eq!(qf.deformed_by(&f).unwrap(), quad(Q, &["2", "2"], &[(0, 1, "12")]));
    }
}
