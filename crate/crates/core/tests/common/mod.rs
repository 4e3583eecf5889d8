//! Independent oracles: brute-force combinatorial formulas that share no code
//! with the recursive library implementations.
#![allow(dead_code)]

use cliff_bundle::clifford::{CliffElt, CliffordContext};
use cliff_bundle::{AlgebraContext, BilinearForm, FieldSpec, Scalar, TensorElt, Vector};

/// Partial matchings of 0..p as (pairs, odd), pairs sorted by first index and
/// `odd` the parity of i₁ j₁ … i_k j_k followed by the unmatched indices.
pub fn matchings(p: usize) -> Vec<(Vec<(usize, usize)>, bool)> {
    // pairs are listed by increasing first index
    fn go(free: &[usize], after: usize, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(acc.clone());
        for a in 0..free.len() {
            if free[a] < after {
                continue;
            }
            for b in a + 1..free.len() {
                let rest: Vec<usize> = free.iter().copied().filter(|&x| x != free[a] && x != free[b]).collect();
                acc.push((free[a], free[b]));
                go(&rest, free[a], acc, out);
                acc.pop();
            }
        }
    }
    let all: Vec<usize> = (0..p).collect();
    let mut out = Vec::new();
    go(&all, 0, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|pairs| {
            let mut seq: Vec<usize> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
            seq.extend((0..p).filter(|x| !pairs.iter().any(|&(i, j)| i == *x || j == *x)));
            let inv = (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).filter(|&(a, b)| seq[a] > seq[b]).count();
            (pairs, inv % 2 == 1)
        })
        .collect()
}

/// λ_F on a word of basis vectors, by the signed matching sum.
pub fn lambda_by_matchings(f: &BilinearForm, word: &[usize]) -> TensorElt {
    let ctx = *f.ctx();
    let mut terms = Vec::new();
    for (pairs, odd) in matchings(word.len()) {
        let mut c = ctx.field().one();
        for &(i, j) in &pairs {
            c = c * f.entry(word[i], word[j]).clone();
        }
        if odd {
            c = -c;
        }
        let rest: Vec<usize> = (0..word.len())
            .filter(|x| !pairs.iter().any(|&(i, j)| i == *x || j == *x))
            .map(|x| word[x])
            .collect();
        terms.push((rest, c));
    }
    TensorElt::from_terms(ctx, terms).unwrap()
}

/// bl_F on a product of basis vectors in the deformed algebra, by the same sum taken in Cl(Q).
pub fn bl_by_matchings(f: &BilinearForm, target: &CliffordContext, word: &[usize]) -> CliffElt {
    let mut total = CliffElt::zero(target);
    for (pairs, odd) in matchings(word.len()) {
        let mut c = f.ctx().field().one();
        for &(i, j) in &pairs {
            c = c * f.entry(word[i], word[j]).clone();
        }
        if odd {
            c = -c;
        }
        let mut prod = CliffElt::scalar(target, c);
        for x in (0..word.len()).filter(|x| !pairs.iter().any(|&(i, j)| i == *x || j == *x)) {
            prod = prod.mul(&CliffElt::blade(target, &[word[x]]).unwrap()).unwrap();
        }
        total = total.add(&prod).unwrap();
    }
    total
}

/// Pfaffian as a signed sum over perfect matchings.
pub fn pfaffian_by_matchings(a: &BilinearForm) -> Scalar {
    let n = a.ctx().dim();
    let field = a.ctx().field();
    let mut total = field.zero();
    for (pairs, odd) in matchings(n) {
        if 2 * pairs.len() != n {
            continue;
        }
        let mut c = field.one();
        for &(i, j) in &pairs {
            c = c * a.entry(i, j).clone();
        }
        total = if odd { total - c } else { total + c };
    }
    total
}

/// All words of length ≤ `max_len` over 0..n.
pub fn all_words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| (0..n).map(move |i| [w.as_slice(), &[i]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn ctx(n: usize, field: FieldSpec) -> AlgebraContext {
    AlgebraContext::new(n, field).unwrap()
}

/// Σ_σ sgn(σ) y_σ(1) ⋯ y_σ(n) in Cl(Q), enumerating permutations by Heap's algorithm.
pub fn permutation_sum(cctx: &CliffordContext, ys: &[Vector]) -> CliffElt {
    let n = ys.len();
    let field = cctx.base().field();
    let mut total = CliffElt::zero(cctx);
    let mut emit = |perm: &[usize], odd: bool| {
        let sign = if odd { -field.one() } else { field.one() };
        let mut prod = CliffElt::scalar(cctx, sign);
        for &i in perm {
            prod = prod.mul(&CliffElt::vector(cctx, &ys[i]).unwrap()).unwrap();
        }
        total = total.add(&prod).unwrap();
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut odd = false;
    let mut stack = vec![0usize; n];
    emit(&perm, odd);
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i)
            } else {
                perm.swap(stack[i], i)
            }
            odd = !odd;
            emit(&perm, odd);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    total
}
