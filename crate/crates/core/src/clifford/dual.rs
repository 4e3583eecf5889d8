//! Λ(V*) acting on Cl(V, Q) by iterated contractions.

use std::collections::BTreeMap;

use super::{blade_indices, blade_of, Blade, CliffElt, Terms};
use crate::error::{Error, Result};
use crate::forms::{AlgebraContext, DualTwoForm, LinearForm};
use crate::scalar::Scalar;
use crate::tensor::accumulate;

/// An element of Λ(V*) over the dual subset basis e_S* = e_{s_1}* ∧ ⋯ ∧ e_{s_k}*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualElt {
    ctx: AlgebraContext,
    terms: Terms,
}

/// Sign of e_S ∧ e_T as a multiple of e_{S∪T}; `None` if they overlap.
fn wedge_sign(s: Blade, t: Blade) -> Option<bool> {
    if s & t != 0 {
        return None;
    }
    // count pairs (a ∈ S, b ∈ T) with a > b
    let inversions: u32 = blade_indices(t)
        .map(|b| (s >> (b + 1)).count_ones())
        .sum();
    Some(inversions % 2 == 1)
}

impl DualElt {
    pub fn zero(ctx: AlgebraContext) -> Self {
        DualElt {
            ctx,
            terms: Terms::new(),
        }
    }

    pub fn one(ctx: AlgebraContext) -> Self {
        let mut d = Self::zero(ctx);
        d.terms.insert(0, ctx.field().one());
        d
    }

    pub fn from_terms(
        ctx: AlgebraContext,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self> {
        let mut d = Self::zero(ctx);
        for (indices, c) in terms {
            if let Some(&i) = indices.iter().find(|&&i| i >= ctx.dim()) {
                return Err(Error::IndexOutOfRange { index: i, dim: ctx.dim() });
            }
            if indices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invalid("dual blade indices must be strictly increasing".into()));
            }
            if c.field() != ctx.field() {
                return Err(Error::FieldMismatch {
                    left: ctx.field(),
                    right: c.field(),
                });
            }
            accumulate(&mut d.terms, blade_of(&indices), c);
        }
        Ok(d)
    }

    pub fn from_linear(f: &LinearForm) -> Self {
        let mut d = Self::zero(*f.ctx());
        for (i, c) in f.coeffs().iter().enumerate() {
            accumulate(&mut d.terms, 1 << i, c.clone());
        }
        d
    }

    /// A* = Σ_{i<j} c_ij e_i* ∧ e_j*.
    pub fn from_two_form(a: &DualTwoForm) -> Self {
        let ctx = *a.ctx();
        let mut d = Self::zero(ctx);
        for i in 0..ctx.dim() {
            for j in i + 1..ctx.dim() {
                accumulate(&mut d.terms, 1 << i | 1 << j, a.coeff(i, j).clone());
            }
        }
        d
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Blade, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &DualElt) -> Result<DualElt> {
        self.ctx.ensure_compatible(&other.ctx)?;
        let mut terms = self.terms.clone();
        for (&b, c) in &other.terms {
            accumulate(&mut terms, b, c.clone());
        }
        Ok(DualElt { ctx: self.ctx, terms })
    }

    pub fn scale(&self, s: &Scalar) -> DualElt {
        let mut terms = Terms::new();
        for (&b, c) in &self.terms {
            accumulate(&mut terms, b, c * s);
        }
        DualElt { ctx: self.ctx, terms }
    }

    /// Exterior product in Λ(V*).
    pub fn wedge(&self, other: &DualElt) -> Result<DualElt> {
        self.ctx.ensure_compatible(&other.ctx)?;
        let mut terms = Terms::new();
        for (&s, a) in &self.terms {
            for (&t, b) in &other.terms {
                if let Some(negative) = wedge_sign(s, t) {
                    let v = a * b;
                    accumulate(&mut terms, s | t, if negative { -v } else { v });
                }
            }
        }
        Ok(DualElt { ctx: self.ctx, terms })
    }
}

/// ī_{e_j*} on coordinates.
fn contract_coordinate(j: usize, terms: &Terms) -> Terms {
    let mut out = Terms::new();
    for (&b, c) in terms {
        if b >> j & 1 == 1 {
            let pos = (b & ((1 << j) - 1)).count_ones();
            accumulate(&mut out, b & !(1 << j), if pos.is_multiple_of(2) { c.clone() } else { -c });
        }
    }
    out
}

fn interior_terms(ustar: &DualElt, terms: &Terms) -> Terms {
    let mut out = Terms::new();
    for (&s, c) in &ustar.terms {
        let mut acc = terms.clone();
        for j in blade_indices(s).collect::<Vec<_>>().into_iter().rev() {
            acc = contract_coordinate(j, &acc);
        }
        for (b, v) in acc {
            accumulate(&mut out, b, v * c);
        }
    }
    out
}

/// The left Λ(V*)-module structure: ī_{f_1 ∧ ⋯ ∧ f_k} = ī_{f_1} ∘ ⋯ ∘ ī_{f_k}.
pub fn interior(ustar: &DualElt, w: &CliffElt) -> Result<CliffElt> {
    ustar.ctx.ensure_compatible(w.cctx().base())?;
    Ok(CliffElt::from_raw(w.cctx(), interior_terms(ustar, w.terms())))
}

/// exp(ī_{A*})(w) = Σ_k (1/k!) ī_{A*}^k (w), a finite sum since each
/// application lowers the blade size by two. Characteristic 0 only; in
/// positive characteristic use `bl_map` with the alternating form of A*.
pub fn exp_contract(astar: &DualTwoForm, w: &CliffElt) -> Result<CliffElt> {
    astar.ctx().ensure_compatible(w.cctx().base())?;
    let field = w.cctx().base().field();
    if field.characteristic() != 0 {
        return Err(Error::Characteristic {
            op: "exp_contract",
            characteristic: field.characteristic(),
            reason: "the exponential series needs 1/k!; use bl_map with the alternating form instead",
        });
    }
    let a = DualElt::from_two_form(astar);
    let mut out = w.terms().clone();
    let mut power = w.terms().clone();
    let mut k = 0u64;
    while !power.is_empty() {
        k += 1;
        power = interior_terms(&a, &power);
        let inv = field.inverse_factorial(k).expect("characteristic 0");
        for (b, v) in &power {
            accumulate(&mut out, *b, v * &inv);
        }
    }
    Ok(CliffElt::from_raw(w.cctx(), out))
}
