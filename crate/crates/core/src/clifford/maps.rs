//! Descended contractions and the fiber maps between Clifford algebras that
//! differ by a bilinear form.

use std::collections::HashMap;

use super::{blade_indices, same_form, Blade, CliffElt, CliffordContext, Terms};
use crate::error::{Error, Result};
use crate::forms::{half, BilinearForm, LinearForm};
use crate::scalar::Scalar;
use crate::tensor::{accumulate, Vector};

/// ī_f on coordinates: Σ_i (−1)^{i−1} f(e_{s_i}) e_{S∖s_i}.
pub(crate) fn contract_terms(f: &[Scalar], terms: &Terms) -> Terms {
    let mut out = Terms::new();
    for (&b, c) in terms {
        contract_blade(f, b, c, &mut out);
    }
    out
}

fn contract_blade(f: &[Scalar], b: Blade, c: &Scalar, out: &mut Terms) {
    for (pos, i) in blade_indices(b).enumerate() {
        let fx = &f[i];
        if fx.is_zero() {
            continue;
        }
        let v = c * fx;
        accumulate(out, b & !(1 << i), if pos % 2 == 0 { v } else { -v });
    }
}

/// ī_f: the contraction descended to Cl(V, Q).
pub fn cl_apply_i(f: &LinearForm, w: &CliffElt) -> Result<CliffElt> {
    f.ctx().ensure_compatible(w.cctx().base())?;
    Ok(CliffElt::from_raw(w.cctx(), contract_terms(f.coeffs(), w.terms())))
}

/// ī_x^F = ī_f with f(y) = F(x, y).
pub fn cl_apply_i_form(form: &BilinearForm, x: &Vector, w: &CliffElt) -> Result<CliffElt> {
    form.ctx().ensure_compatible(w.cctx().base())?;
    cl_apply_i(&form.left_partial(x.coeffs()), w)
}

/// Require `source` to carry target.Q + Q_F.
fn check_deformation(form: &BilinearForm, source: &CliffordContext, target: &CliffordContext) -> Result<()> {
    form.ctx().ensure_compatible(target.base())?;
    source.base().ensure_compatible(target.base())?;
    let expected = target.quadratic().deformed_by(form)?;
    if !same_form(&expected, source.quadratic()) {
        return Err(Error::FormMismatch(
            "source algebra must carry Q + Q_F for the target form Q".into(),
        ));
    }
    Ok(())
}

/// x ↦ (ē_{e_k} + ī_{e_k}^F) on the terms of Cl(Q).
fn step(cctx: &CliffordContext, k: usize, row: &[Scalar], terms: &Terms) -> Terms {
    let mut out = cctx.left_mul_gen(k, terms);
    for (&b, c) in terms {
        contract_blade(row, b, c, &mut out);
    }
    out
}

/// bl_F: Cl(V, Q + Q_F) → Cl(V, Q), the descent of λ_F.
///
/// Computed blade by blade with bl_F(x w) = x bl_F(w) + ī_x^F(bl_F(w)),
/// peeling the lowest index of each blade and memoizing the remainders.
pub fn bl_map(form: &BilinearForm, target: &CliffordContext, w: &CliffElt) -> Result<CliffElt> {
    check_deformation(form, w.cctx(), target)?;
    let rows = form.matrix().to_rows();
    let mut memo: HashMap<Blade, Terms> = HashMap::new();
    let mut out = Terms::new();
    for (&b, c) in w.terms() {
        for (r, v) in bl_blade(target, &rows, b, &mut memo) {
            accumulate(&mut out, r, v * c);
        }
    }
    Ok(CliffElt::from_raw(target, out))
}

fn bl_blade(
    target: &CliffordContext,
    rows: &[Vec<Scalar>],
    b: Blade,
    memo: &mut HashMap<Blade, Terms>,
) -> Terms {
    if b.count_ones() <= 1 {
        let mut t = Terms::new();
        t.insert(b, target.base().field().one());
        return t;
    }
    if let Some(t) = memo.get(&b) {
        return t.clone();
    }
    let k = b.trailing_zeros() as usize;
    let rest = bl_blade(target, rows, b & !(1 << k), memo);
    let image = step(target, k, &rows[k], &rest);
    memo.insert(b, image.clone());
    image
}

/// bL_F(u)(v): the action of u ∈ Cl(V, Q + Q_F) on v ∈ Cl(V, Q) through
/// x ↦ ē_x + ī_x^F. bL_F(u)(1) = bl_F(u).
pub fn bl_action(form: &BilinearForm, u: &CliffElt, v: &CliffElt) -> Result<CliffElt> {
    check_deformation(form, u.cctx(), v.cctx())?;
    let target = v.cctx();
    let rows = form.matrix().to_rows();
    let mut out = Terms::new();
    for (&b, c) in u.terms() {
        let mut acc = v.terms().clone();
        for k in blade_indices(b).collect::<Vec<_>>().into_iter().rev() {
            acc = step(target, k, &rows[k], &acc);
        }
        for (r, x) in acc {
            accumulate(&mut out, r, x * c);
        }
    }
    Ok(CliffElt::from_raw(target, out))
}

/// u ∘_F v = bl_F(bl_{−F}(u) bl_{−F}(v)): the product of Cl(V, Q + Q_F)
/// carried over to the underlying space of Cl(V, Q).
///
/// Evaluated as bL_F(bl_{−F}(u))(v).
pub fn twisted_mul(form: &BilinearForm, u: &CliffElt, v: &CliffElt) -> Result<CliffElt> {
    u.cctx().ensure_same(v.cctx())?;
    let lifted = u.cctx().deformed(form)?;
    let u_up = bl_map(&form.neg(), &lifted, u)?;
    bl_action(form, &u_up, v)
}

/// σ_Q = bl_{Φ/2}: Cl(V, Q) → Λ(V). Needs characteristic ≠ 2.
pub fn symbol(w: &CliffElt) -> Result<CliffElt> {
    let cctx = w.cctx();
    let h = half(cctx.base().field(), "symbol")?;
    let form = cctx.quadratic().polar_form().scale(&h);
    bl_map(&form, &CliffordContext::exterior(*cctx.base()), w)
}

/// q_Q = bl_{−Φ/2}: Λ(V) → Cl(V, Q), inverse to [`symbol`].
pub fn quantize(cctx: &CliffordContext, ext: &CliffElt) -> Result<CliffElt> {
    let h = half(cctx.base().field(), "quantize")?;
    let form = cctx.quadratic().polar_form().scale(&-h);
    bl_map(&form, cctx, ext)
}
