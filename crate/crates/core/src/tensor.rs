//! The tensor algebra T(V) over the basis of an [`AlgebraContext`].
//!
//! Elements are sparse maps from words (index sequences, 0-based) to nonzero
//! scalars; the empty word is the unit. T(V) is free, so words need no
//! normalization.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::forms::{AlgebraContext, BilinearForm, LinearForm};
use crate::scalar::Scalar;

pub type Word = Vec<u8>;

/// A vector x ∈ V, identified with the grade-1 part of T(V).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    ctx: AlgebraContext,
    coeffs: Vec<Scalar>,
}

impl Vector {
    pub fn new(ctx: AlgebraContext, coeffs: Vec<Scalar>) -> Result<Self> {
        ctx.check_vector(&coeffs)?;
        Ok(Vector { ctx, coeffs })
    }

    pub fn basis(ctx: AlgebraContext, i: usize) -> Self {
        Vector {
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

    pub fn add(&self, other: &Vector) -> Vector {
        Vector {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    /// Nonzero coordinates as (index, coefficient).
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

/// An element of T(V).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElt {
    ctx: AlgebraContext,
    terms: BTreeMap<Word, Scalar>,
}

pub(crate) fn accumulate<K: Ord>(terms: &mut BTreeMap<K, Scalar>, key: K, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get() + &coeff;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl TensorElt {
    pub fn zero(ctx: AlgebraContext) -> Self {
        TensorElt {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: AlgebraContext) -> Self {
        Self::scalar(ctx, ctx.field().one())
    }

    pub fn scalar(ctx: AlgebraContext, s: Scalar) -> Self {
        let mut t = Self::zero(ctx);
        accumulate(&mut t.terms, Vec::new(), s);
        t
    }

    /// The basis tensor e_{w_1} ⊗ ... ⊗ e_{w_p} (0-based indices).
    pub fn word(ctx: AlgebraContext, word: &[usize]) -> Result<Self> {
        Self::from_terms(ctx, [(word.to_vec(), ctx.field().one())])
    }

    pub fn vector(x: &Vector) -> Self {
        let mut t = Self::zero(x.ctx);
        for (i, c) in x.support() {
            accumulate(&mut t.terms, vec![i as u8], c.clone());
        }
        t
    }

    /// Collect terms, summing repeated words and dropping zeros.
    pub fn from_terms(
        ctx: AlgebraContext,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ctx);
        for (word, coeff) in terms {
            if word.len() > ctx.grade_cap() {
                return Err(Error::GradeCap {
                    len: word.len(),
                    cap: ctx.grade_cap(),
                });
            }
            if let Some(&i) = word.iter().find(|&&i| i >= ctx.dim()) {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: ctx.dim(),
                });
            }
            if coeff.field() != ctx.field() {
                return Err(Error::FieldMismatch {
                    left: ctx.field(),
                    right: coeff.field(),
                });
            }
            accumulate(&mut out.terms, word.into_iter().map(|i| i as u8).collect(), coeff);
        }
        Ok(out)
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[usize]) -> Scalar {
        let w: Word = word.iter().map(|&i| i as u8).collect();
        self.terms
            .get(&w)
            .cloned()
            .unwrap_or_else(|| self.ctx.field().zero())
    }

    /// Highest grade present, `None` for zero.
    pub fn max_grade(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    fn with_terms(&self, terms: BTreeMap<Word, Scalar>) -> Self {
        TensorElt {
            ctx: self.ctx,
            terms,
        }
    }

    pub fn add(&self, other: &TensorElt) -> Result<TensorElt> {
        self.ctx.ensure_compatible(&other.ctx)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        Ok(self.with_terms(terms))
    }

    pub fn sub(&self, other: &TensorElt) -> Result<TensorElt> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorElt {
        self.scale(&-self.ctx.field().one())
    }

    pub fn scale(&self, s: &Scalar) -> TensorElt {
        if s.is_zero() {
            return Self::zero(self.ctx);
        }
        self.with_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect())
    }

    fn check_cap(&self, len: usize) -> Result<()> {
        if len > self.ctx.grade_cap() {
            return Err(Error::GradeCap {
                len,
                cap: self.ctx.grade_cap(),
            });
        }
        Ok(())
    }

    /// u ⊗ v: word concatenation, extended bilinearly.
    pub fn mul(&self, other: &TensorElt) -> Result<TensorElt> {
        self.ctx.ensure_compatible(&other.ctx)?;
        if let (Some(a), Some(b)) = (self.max_grade(), other.max_grade()) {
            self.check_cap(a + b)?;
        }
        let mut terms = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                accumulate(&mut terms, w, ca * cb);
            }
        }
        Ok(self.with_terms(terms))
    }

    /// The grade-p component u_p.
    pub fn grade_project(&self, p: usize) -> TensorElt {
        self.with_terms(
            self.terms
                .iter()
                .filter(|(w, _)| w.len() == p)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        )
    }

    /// Main involution: (-1)^p on grade p.
    pub fn alpha(&self) -> TensorElt {
        self.with_terms(
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), if w.len() % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        )
    }

    /// Main anti-involution: word reversal.
    pub fn tau(&self) -> TensorElt {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let mut r = w.clone();
            r.reverse();
            accumulate(&mut terms, r, c.clone());
        }
        self.with_terms(terms)
    }

    /// Apply a linear map given on basis words.
    fn map_words(&self, mut f: impl FnMut(&[u8], &Scalar, &mut BTreeMap<Word, Scalar>)) -> TensorElt {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            f(w, c, &mut terms);
        }
        self.with_terms(terms)
    }
}

/// e_x(u) = x ⊗ u.
pub fn apply_e(x: &Vector, u: &TensorElt) -> Result<TensorElt> {
    x.ctx.ensure_compatible(&u.ctx)?;
    TensorElt::vector(x).mul(u)
}

/// The antiderivation i_f: i_f(1) = 0, i_f(x ⊗ u) = f(x) u − x ⊗ i_f(u),
/// evaluated through its closed form on words,
/// i_f(x_1 ⊗ … ⊗ x_p) = Σ_i (−1)^{i−1} f(x_i) x_1 ⊗ … x̂_i … ⊗ x_p.
pub fn apply_i(f: &LinearForm, u: &TensorElt) -> Result<TensorElt> {
    f.ctx().ensure_compatible(&u.ctx)?;
    Ok(contract(f.coeffs(), u))
}

fn contract(f: &[Scalar], u: &TensorElt) -> TensorElt {
    u.map_words(|w, c, out| {
        for (pos, &letter) in w.iter().enumerate() {
            let fx = &f[letter as usize];
            if fx.is_zero() {
                continue;
            }
            let mut rest = w.to_vec();
            rest.remove(pos);
            let v = c * fx;
            accumulate(out, rest, if pos % 2 == 0 { v } else { -v });
        }
    })
}

/// i_x^F = i_f with f(y) = F(x, y).
pub fn apply_i_form(form: &BilinearForm, x: &Vector, u: &TensorElt) -> Result<TensorElt> {
    form.ctx().ensure_compatible(&u.ctx)?;
    x.ctx.ensure_compatible(&u.ctx)?;
    apply_i(&form.left_partial(&x.coeffs), u)
}

/// Rows of F: row k is the linear form y ↦ F(e_k, y).
fn form_rows(form: &BilinearForm) -> Vec<Vec<Scalar>> {
    form.matrix().to_rows()
}

/// (e_{e_k} + i_{e_k}^F)(v)
fn lambda_generator(k: u8, row: &[Scalar], v: &TensorElt) -> TensorElt {
    let mut out = contract(row, v);
    for (w, c) in &v.terms {
        let mut nw = Vec::with_capacity(w.len() + 1);
        nw.push(k);
        nw.extend_from_slice(w);
        accumulate(&mut out.terms, nw, c.clone());
    }
    out
}

/// Λ_F(u)(v): the algebra homomorphism T(V) → End(T(V)) extending
/// x ↦ e_x + i_x^F.
pub fn lambda_big(form: &BilinearForm, u: &TensorElt, v: &TensorElt) -> Result<TensorElt> {
    form.ctx().ensure_compatible(&u.ctx)?;
    u.ctx.ensure_compatible(&v.ctx)?;
    if let (Some(a), Some(b)) = (u.max_grade(), v.max_grade()) {
        v.check_cap(a + b)?;
    }
    let rows = form_rows(form);
    let mut out = TensorElt::zero(v.ctx);
    for (w, c) in &u.terms {
        let mut acc = v.clone();
        for &k in w.iter().rev() {
            acc = lambda_generator(k, &rows[k as usize], &acc);
        }
        for (rw, rc) in acc.terms {
            accumulate(&mut out.terms, rw, rc * c);
        }
    }
    Ok(out)
}

/// λ_F(u) = Λ_F(u)(1), computed by the recursion
/// λ_F(x ⊗ u) = x ⊗ λ_F(u) + i_x^F(λ_F(u)) with memoization over suffixes.
pub fn lambda_map(form: &BilinearForm, u: &TensorElt) -> Result<TensorElt> {
    form.ctx().ensure_compatible(&u.ctx)?;
    if let Some(g) = u.max_grade() {
        u.check_cap(g)?;
    }
    let rows = form_rows(form);
    let mut memo: HashMap<Word, TensorElt> = HashMap::new();
    let mut out = TensorElt::zero(u.ctx);
    for (w, c) in &u.terms {
        let image = lambda_word(&rows, u.ctx, w, &mut memo);
        for (rw, rc) in &image.terms {
            accumulate(&mut out.terms, rw.clone(), rc * c);
        }
    }
    Ok(out)
}

fn lambda_word(
    rows: &[Vec<Scalar>],
    ctx: AlgebraContext,
    w: &[u8],
    memo: &mut HashMap<Word, TensorElt>,
) -> TensorElt {
    if w.len() <= 1 {
        return TensorElt::from_terms(ctx, [(w.iter().map(|&i| i as usize).collect(), ctx.field().one())])
            .expect("valid word");
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let tail = lambda_word(rows, ctx, &w[1..], memo);
    let k = w[0];
    let image = lambda_generator(k, &rows[k as usize], &tail);
    memo.insert(w.to_vec(), image.clone());
    image
}

/// a_k^F(u): the part of λ_F(u) carrying exactly k factors of F.
///
/// Computed from the signed sum over ordered families of k disjoint pairs
/// (i_1 < j_1, …, i_k < j_k, i_1 < … < i_k); the sign is the parity of the
/// permutation listing the pairs first and the untouched positions after.
/// Defined in every characteristic.
pub fn divided_power(form: &BilinearForm, k: usize, u: &TensorElt) -> Result<TensorElt> {
    form.ctx().ensure_compatible(&u.ctx)?;
    if k == 0 {
        return Ok(u.clone());
    }
    let rows = form_rows(form);
    let mut out = TensorElt::zero(u.ctx);
    for (w, c) in &u.terms {
        if w.len() < 2 * k {
            continue;
        }
        let positions: Vec<usize> = (0..w.len()).collect();
        let mut emit = |rest: &[usize], coeff: Scalar| {
            let word: Word = rest.iter().map(|&p| w[p]).collect();
            accumulate(&mut out.terms, word, coeff * c);
        };
        pair_up(&rows, w, positions, 0, k, u.ctx.field().one(), &mut emit);
    }
    Ok(out)
}

/// Walk the remaining positions left to right. Positions before `cursor`
/// are left untouched; the one at `cursor` is either left untouched or paired
/// with a later position `b`. Pulling the pair to the front of the remaining
/// list costs `cursor + b - 1` transpositions.
fn pair_up(
    rows: &[Vec<Scalar>],
    word: &[u8],
    remaining: Vec<usize>,
    cursor: usize,
    pairs_left: usize,
    coeff: Scalar,
    emit: &mut impl FnMut(&[usize], Scalar),
) {
    if pairs_left == 0 {
        emit(&remaining, coeff);
        return;
    }
    if remaining.len() < cursor + 2 * pairs_left {
        return;
    }
    pair_up(rows, word, remaining.clone(), cursor + 1, pairs_left, coeff.clone(), emit);
    let first = word[remaining[cursor]] as usize;
    for b in cursor + 1..remaining.len() {
        let value = &rows[first][word[remaining[b]] as usize];
        if value.is_zero() {
            continue;
        }
        let mut next = remaining.clone();
        next.remove(b);
        next.remove(cursor);
        let term = &coeff * value;
        let term = if (cursor + b - 1).is_multiple_of(2) { term } else { -term };
        pair_up(rows, word, next, cursor, pairs_left - 1, term, emit);
    }
}
