//! Clifford algebras Cl(V, Q) in normal form over the subset basis.
//!
//! A blade is a `u64` bitmask: index i (0-based) is bit i, and the mask
//! stands for the ordered product e_{s_1} ⋯ e_{s_k} with s_1 < ⋯ < s_k.
//! Products are normal-ordered using only Q(e_i) and Φ(e_i, e_j):
//! e_j e_i = Φ(e_i, e_j) − e_i e_j for j > i, and e_i e_i = Q(e_i).

mod dual;
mod maps;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::forms::{AlgebraContext, BilinearForm, QuadraticForm};
use crate::scalar::Scalar;
use crate::tensor::{accumulate, TensorElt, Vector};

pub use dual::{exp_contract, interior, DualElt};
pub use maps::{bl_action, bl_map, cl_apply_i, cl_apply_i_form, quantize, symbol, twisted_mul};

pub type Blade = u64;

pub(crate) type Terms = BTreeMap<Blade, Scalar>;

/// Iterate the indices of a blade in increasing order.
pub fn blade_indices(b: Blade) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| b >> i & 1 == 1)
}

pub fn blade_of(indices: &[usize]) -> Blade {
    indices.iter().fold(0, |acc, &i| acc | 1 << i)
}

struct Inner {
    q: QuadraticForm,
    /// Φ(e_i, e_j) for all i, j.
    phi: Vec<Vec<Scalar>>,
}

/// Fixes the algebra Cl(V, Q). Q = 0 gives the exterior algebra Λ(V).
///
/// Cheap to clone; equality is extensional in (dim, field, Q).
#[derive(Clone)]
pub struct CliffordContext {
    inner: Arc<Inner>,
}

impl PartialEq for CliffordContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || same_form(&self.inner.q, &other.inner.q)
    }
}

impl Eq for CliffordContext {}

/// Extensional equality of quadratic forms on the same space.
pub(crate) fn same_form(a: &QuadraticForm, b: &QuadraticForm) -> bool {
    a.ctx().dim() == b.ctx().dim()
        && a.ctx().field() == b.ctx().field()
        && a.diag_values() == b.diag_values()
        && a.polar_upper() == b.polar_upper()
}

impl fmt::Debug for CliffordContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CliffordContext").field("q", &self.inner.q).finish()
    }
}

impl CliffordContext {
    pub fn new(q: QuadraticForm) -> Self {
        let n = q.ctx().dim();
        let phi = (0..n).map(|i| (0..n).map(|j| q.polar(i, j)).collect()).collect();
        CliffordContext {
            inner: Arc::new(Inner { q, phi }),
        }
    }

    /// Λ(V): the Clifford algebra of the zero form.
    pub fn exterior(base: AlgebraContext) -> Self {
        Self::new(QuadraticForm::zero(base))
    }

    /// The context for Q + Q_F.
    pub fn deformed(&self, form: &BilinearForm) -> Result<Self> {
        Ok(Self::new(self.inner.q.deformed_by(form)?))
    }

    pub fn base(&self) -> &AlgebraContext {
        self.inner.q.ctx()
    }

    pub fn quadratic(&self) -> &QuadraticForm {
        &self.inner.q
    }

    pub fn dim(&self) -> usize {
        self.base().dim()
    }

    pub fn ensure_same(&self, other: &CliffordContext) -> Result<()> {
        self.base().ensure_compatible(other.base())?;
        if self != other {
            return Err(Error::ContextMismatch(
                "elements belong to Clifford algebras of different quadratic forms".into(),
            ));
        }
        Ok(())
    }

    fn diag(&self, i: usize) -> &Scalar {
        self.inner.q.diag(i)
    }

    fn phi(&self, i: usize, j: usize) -> &Scalar {
        &self.inner.phi[i][j]
    }

    /// Accumulate c · e_S e_j into `out`.
    pub(crate) fn push_right_gen(&self, s: Blade, j: usize, c: Scalar, out: &mut Terms) {
        if s == 0 {
            accumulate(out, 1 << j, c);
            return;
        }
        let k = 63 - s.leading_zeros() as usize;
        let rest = s & !(1 << k);
        if k < j {
            accumulate(out, s | 1 << j, c);
        } else if k == j {
            accumulate(out, rest, c * self.diag(j));
        } else {
            // e_{S'} e_k e_j = Φ(e_j, e_k) e_{S'} − (e_{S'} e_j) e_k
            let phi = self.phi(j, k);
            if !phi.is_zero() {
                accumulate(out, rest, &c * phi);
            }
            let mut tmp = Terms::new();
            self.push_right_gen(rest, j, -c, &mut tmp);
            for (t, v) in tmp {
                accumulate(out, t | 1 << k, v);
            }
        }
    }

    /// Accumulate c · e_j e_S into `out`.
    pub(crate) fn push_left_gen(&self, j: usize, s: Blade, c: Scalar, out: &mut Terms) {
        if s == 0 {
            accumulate(out, 1 << j, c);
            return;
        }
        let k = s.trailing_zeros() as usize;
        let rest = s & !(1 << k);
        if j < k {
            accumulate(out, s | 1 << j, c);
        } else if j == k {
            accumulate(out, rest, c * self.diag(j));
        } else {
            // e_j e_k e_{S'} = Φ(e_k, e_j) e_{S'} − e_k (e_j e_{S'})
            let phi = self.phi(k, j);
            if !phi.is_zero() {
                accumulate(out, rest, &c * phi);
            }
            let mut tmp = Terms::new();
            self.push_left_gen(j, rest, -c, &mut tmp);
            for (t, v) in tmp {
                accumulate(out, t | 1 << k, v);
            }
        }
    }

    fn right_mul_gen(&self, terms: &Terms, j: usize) -> Terms {
        let mut out = Terms::new();
        for (&s, c) in terms {
            self.push_right_gen(s, j, c.clone(), &mut out);
        }
        out
    }

    pub(crate) fn left_mul_gen(&self, j: usize, terms: &Terms) -> Terms {
        let mut out = Terms::new();
        for (&s, c) in terms {
            self.push_left_gen(j, s, c.clone(), &mut out);
        }
        out
    }

    /// e_S · e_T in normal form.
    pub(crate) fn blade_product(&self, s: Blade, t: Blade) -> Terms {
        let mut acc = Terms::new();
        acc.insert(s, self.base().field().one());
        for j in blade_indices(t) {
            acc = self.right_mul_gen(&acc, j);
        }
        acc
    }
}

/// An element of Cl(V, Q) in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffElt {
    cctx: CliffordContext,
    terms: Terms,
}

impl fmt::Debug for CliffElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (&b, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let idx: Vec<String> = blade_indices(b).map(|i| (i + 1).to_string()).collect();
            write!(f, "({c}){{{}}}", idx.join(","))?;
        }
        Ok(())
    }
}

impl CliffElt {
    pub fn zero(cctx: &CliffordContext) -> Self {
        CliffElt {
            cctx: cctx.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(cctx: &CliffordContext) -> Self {
        Self::scalar(cctx, cctx.base().field().one())
    }

    pub fn scalar(cctx: &CliffordContext, s: Scalar) -> Self {
        let mut e = Self::zero(cctx);
        accumulate(&mut e.terms, 0, s);
        e
    }

    /// The basis monomial for a strictly increasing index list (0-based).
    pub fn blade(cctx: &CliffordContext, indices: &[usize]) -> Result<Self> {
        Self::from_terms(cctx, [(indices.to_vec(), cctx.base().field().one())])
    }

    pub fn vector(cctx: &CliffordContext, x: &Vector) -> Result<Self> {
        cctx.base().ensure_compatible(x.ctx())?;
        let mut e = Self::zero(cctx);
        for (i, c) in x.support() {
            accumulate(&mut e.terms, 1 << i, c.clone());
        }
        Ok(e)
    }

    /// Terms keyed by strictly increasing 0-based index lists.
    pub fn from_terms(
        cctx: &CliffordContext,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self> {
        let n = cctx.dim();
        let field = cctx.base().field();
        let mut e = Self::zero(cctx);
        for (indices, coeff) in terms {
            if let Some(&i) = indices.iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: i, dim: n });
            }
            if indices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invalid(format!(
                    "blade indices must be strictly increasing, got {:?}",
                    indices.iter().map(|i| i + 1).collect::<Vec<_>>()
                )));
            }
            if coeff.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: coeff.field(),
                });
            }
            accumulate(&mut e.terms, blade_of(&indices), coeff);
        }
        Ok(e)
    }

    pub(crate) fn from_raw(cctx: &CliffordContext, terms: Terms) -> Self {
        CliffElt {
            cctx: cctx.clone(),
            terms,
        }
    }

    pub fn cctx(&self) -> &CliffordContext {
        &self.cctx
    }

    pub fn terms(&self) -> &BTreeMap<Blade, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, indices: &[usize]) -> Scalar {
        self.terms
            .get(&blade_of(indices))
            .cloned()
            .unwrap_or_else(|| self.cctx.base().field().zero())
    }

    /// Coefficients indexed by blade bitmask, length 2^n.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let field = self.cctx.base().field();
        let mut v = vec![field.zero(); 1 << self.cctx.dim()];
        for (&b, c) in &self.terms {
            v[b as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(cctx: &CliffordContext, coeffs: &[Scalar]) -> Self {
        let mut e = Self::zero(cctx);
        for (b, c) in coeffs.iter().enumerate() {
            accumulate(&mut e.terms, b as Blade, c.clone());
        }
        e
    }

    /// Reinterpret the same coordinates in another algebra over the same space.
    pub fn recast(&self, cctx: &CliffordContext) -> Result<CliffElt> {
        self.cctx.base().ensure_compatible(cctx.base())?;
        Ok(Self::from_raw(cctx, self.terms.clone()))
    }

    pub fn add(&self, other: &CliffElt) -> Result<CliffElt> {
        self.cctx.ensure_same(&other.cctx)?;
        let mut terms = self.terms.clone();
        for (&b, c) in &other.terms {
            accumulate(&mut terms, b, c.clone());
        }
        Ok(Self::from_raw(&self.cctx, terms))
    }

    pub fn sub(&self, other: &CliffElt) -> Result<CliffElt> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CliffElt {
        Self::from_raw(
            &self.cctx,
            self.terms.iter().map(|(&b, c)| (b, -c)).collect(),
        )
    }

    pub fn scale(&self, s: &Scalar) -> CliffElt {
        if s.is_zero() {
            return Self::zero(&self.cctx);
        }
        Self::from_raw(
            &self.cctx,
            self.terms.iter().map(|(&b, c)| (b, c * s)).collect(),
        )
    }

    /// The product of Cl(V, Q).
    pub fn mul(&self, other: &CliffElt) -> Result<CliffElt> {
        self.cctx.ensure_same(&other.cctx)?;
        let mut terms = Terms::new();
        for (&s, a) in &self.terms {
            for (&t, b) in &other.terms {
                let ab = a * b;
                for (r, c) in self.cctx.blade_product(s, t) {
                    accumulate(&mut terms, r, c * &ab);
                }
            }
        }
        Ok(Self::from_raw(&self.cctx, terms))
    }

    /// Even part (parity 0) or odd part (parity 1).
    pub fn parity_part(&self, parity: u32) -> CliffElt {
        Self::from_raw(
            &self.cctx,
            self.terms
                .iter()
                .filter(|(b, _)| b.count_ones() % 2 == parity % 2)
                .map(|(&b, c)| (b, c.clone()))
                .collect(),
        )
    }

    /// Main automorphism α: (−1)^|S| on e_S.
    pub fn alpha(&self) -> CliffElt {
        Self::from_raw(
            &self.cctx,
            self.terms
                .iter()
                .map(|(&b, c)| (b, if b.count_ones() % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        )
    }

    /// Main anti-automorphism τ: e_{s_1} ⋯ e_{s_k} ↦ e_{s_k} ⋯ e_{s_1},
    /// normal-ordered again.
    pub fn tau(&self) -> CliffElt {
        let mut terms = Terms::new();
        for (&b, c) in &self.terms {
            let mut acc = Terms::new();
            acc.insert(0, c.clone());
            for j in blade_indices(b).collect::<Vec<_>>().into_iter().rev() {
                acc = self.cctx.right_mul_gen(&acc, j);
            }
            for (r, v) in acc {
                accumulate(&mut terms, r, v);
            }
        }
        Self::from_raw(&self.cctx, terms)
    }

    /// The tensor e_{s_1} ⊗ ⋯ ⊗ e_{s_k} for each blade: a lift through π_Q.
    pub fn lift(&self) -> Result<TensorElt> {
        TensorElt::from_terms(
            *self.cctx.base(),
            self.terms
                .iter()
                .map(|(&b, c)| (blade_indices(b).collect(), c.clone())),
        )
    }
}

/// The canonical map π_Q: T(V) → Cl(V, Q).
pub fn pi_q(cctx: &CliffordContext, u: &TensorElt) -> Result<CliffElt> {
    cctx.base().ensure_compatible(u.ctx())?;
    let mut terms = Terms::new();
    for (word, c) in u.terms() {
        let mut acc = Terms::new();
        acc.insert(0, c.clone());
        for &j in word {
            acc = cctx.right_mul_gen(&acc, j as usize);
        }
        for (b, v) in acc {
            accumulate(&mut terms, b, v);
        }
    }
    Ok(CliffElt::from_raw(cctx, terms))
}

/// cl_mul(u, v).
pub fn cl_mul(u: &CliffElt, v: &CliffElt) -> Result<CliffElt> {
    u.mul(v)
}

/// ē_x(w) = x · w.
pub fn e_bar(x: &Vector, w: &CliffElt) -> Result<CliffElt> {
    CliffElt::vector(&w.cctx, x)?.mul(w)
}

#[cfg(test)]
mod tests;
