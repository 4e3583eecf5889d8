use super::*;
use crate::forms::{DualTwoForm, LinearForm};
use crate::linalg::Matrix;
use crate::scalar::FieldSpec;

const Q: FieldSpec = FieldSpec::Rationals;

fn base(n: usize) -> AlgebraContext {
    AlgebraContext::new(n, Q).unwrap()
}

fn s(v: i64) -> Scalar {
    Q.from_i64(v)
}

/// Q = diag(d) with Φ_12 = c (n = 2 or more).
fn cctx_with(d: &[i64], c: i64) -> CliffordContext {
    let b = base(d.len());
    let mut polar = Matrix::zeros(Q, d.len(), d.len());
    polar.set(0, 1, s(c));
    let q = QuadraticForm::new(b, d.iter().map(|&x| s(x)).collect(), polar).unwrap();
    CliffordContext::new(q)
}

fn blade(c: &CliffordContext, idx: &[usize]) -> CliffElt {
    CliffElt::blade(c, idx).unwrap()
}

fn word(c: &CliffordContext, w: &[usize]) -> TensorElt {
    TensorElt::word(*c.base(), w).unwrap()
}

fn form(n: usize, f: impl Fn(usize, usize) -> i64) -> BilinearForm {
    BilinearForm::from_fn(base(n), |i, j| s(f(i, j)))
}

#[test]
fn quotient_map_examples() {
    let c = cctx_with(&[1, 1], 0);
    assert_eq!(pi_q(&c, &word(&c, &[0, 0])).unwrap(), CliffElt::one(&c));
    assert_eq!(pi_q(&c, &word(&c, &[1, 0])).unwrap(), blade(&c, &[0, 1]).neg());
    let c = cctx_with(&[1, 1], 5);
    let expected = CliffElt::scalar(&c, s(5)).sub(&blade(&c, &[0, 1])).unwrap();
    assert_eq!(pi_q(&c, &word(&c, &[1, 0])).unwrap(), expected);
}

#[test]
fn product_examples() {
    let c = cctx_with(&[3, 1], 7);
    let e1 = blade(&c, &[0]);
    let e2 = blade(&c, &[1]);
    assert_eq!(e1.mul(&e1).unwrap(), CliffElt::scalar(&c, s(3)));
    assert_eq!(e1.mul(&e2).unwrap(), blade(&c, &[0, 1]));
    let c = cctx_with(&[1, 1], 0);
    assert_eq!(blade(&c, &[1]).mul(&blade(&c, &[0])).unwrap(), blade(&c, &[0, 1]).neg());
}

#[test]
fn product_is_associative_on_blades() {
    let c = cctx_with(&[2, -1, 3], 4);
    let all: Vec<CliffElt> = (0..8u64).map(|b| CliffElt::from_raw(&c, [(b, s(1))].into())).collect();
    for a in &all {
        for b in &all {
            for d in &all {
                let l = a.mul(b).unwrap().mul(d).unwrap();
                let r = a.mul(&b.mul(d).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn contraction_examples() {
    let c = cctx_with(&[1, 1], 0);
    let f1 = LinearForm::coordinate(*c.base(), 0);
    let f2 = LinearForm::coordinate(*c.base(), 1);
    assert!(cl_apply_i(&f1, &CliffElt::one(&c)).unwrap().is_zero());
    assert_eq!(cl_apply_i(&f1, &blade(&c, &[0, 1])).unwrap(), blade(&c, &[1]));
    assert_eq!(cl_apply_i(&f2, &blade(&c, &[0, 1])).unwrap(), blade(&c, &[0]).neg());
}

#[test]
fn bl_examples() {
    let target = cctx_with(&[1, 2, 0], 1);
    let f = form(3, |i, j| (3 * i + j + 1) as i64);
    let source = target.deformed(&f).unwrap();

    let zero = BilinearForm::zero(base(3));
    let w = blade(&target, &[0, 2]).add(&blade(&target, &[1])).unwrap();
    assert_eq!(bl_map(&zero, &target, &w).unwrap(), w);

    let e12 = blade(&source, &[0]).mul(&blade(&source, &[1])).unwrap();
    let expected = blade(&target, &[0, 1]).add(&CliffElt::scalar(&target, f.entry(0, 1).clone())).unwrap();
    assert_eq!(bl_map(&f, &target, &e12).unwrap(), expected);

    let lower = form(3, |i, j| if i < j { 0 } else { (i + 2 * j + 1) as i64 });
    let source = target.deformed(&lower).unwrap();
    assert_eq!(
        bl_map(&lower, &target, &blade(&source, &[0, 1, 2])).unwrap(),
        blade(&target, &[0, 1, 2])
    );
}

#[test]
fn bl_rejects_wrong_source() {
    let target = cctx_with(&[1, 1], 0);
    let f = form(2, |_, _| 1);
    let w = blade(&target, &[0, 1]);
    assert!(matches!(bl_map(&f, &target, &w), Err(Error::FormMismatch(_))));
}

#[test]
fn bl_action_examples() {
    let target = cctx_with(&[1, -1, 2], 3);
    let f = form(3, |i, j| (i as i64) - 2 * (j as i64) + 1);
    let source = target.deformed(&f).unwrap();
    let v = blade(&target, &[0, 2]).add(&CliffElt::scalar(&target, s(4))).unwrap();
    assert_eq!(bl_action(&f, &CliffElt::one(&source), &v).unwrap(), v);
    assert_eq!(
        bl_action(&f, &blade(&source, &[1]), &CliffElt::one(&target)).unwrap(),
        blade(&target, &[1])
    );
    let x = blade(&source, &[0]).add(&blade(&source, &[2]).scale(&s(2))).unwrap();
    let xx = bl_action(&f, &x, &bl_action(&f, &x, &v).unwrap()).unwrap();
    let qx = source.quadratic().eval(&[s(1), s(0), s(2)]);
    assert_eq!(xx, v.scale(&qx));
}

#[test]
fn twisted_product_examples() {
    let c = cctx_with(&[2, 1], 1);
    let f = form(2, |i, j| (2 * i + j + 1) as i64);
    let x = blade(&c, &[0]);
    let expected = CliffElt::scalar(&c, s(2) + f.entry(0, 0));
    assert_eq!(twisted_mul(&f, &x, &x).unwrap(), expected);

    let zero = BilinearForm::zero(base(2));
    let u = blade(&c, &[1]).add(&blade(&c, &[0, 1])).unwrap();
    assert_eq!(twisted_mul(&zero, &u, &x).unwrap(), u.mul(&x).unwrap());

    let ext = CliffordContext::exterior(base(2));
    let got = twisted_mul(&f, &blade(&ext, &[0]), &blade(&ext, &[1])).unwrap();
    let expected = blade(&ext, &[0, 1]).add(&CliffElt::scalar(&ext, f.entry(0, 1).clone())).unwrap();
    assert_eq!(got, expected);
}

#[test]
fn interior_examples() {
    let c = cctx_with(&[1, 1], 0);
    let w = blade(&c, &[0, 1]).add(&blade(&c, &[0])).unwrap();
    assert_eq!(interior(&DualElt::one(*c.base()), &w).unwrap(), w);
    let e12 = DualElt::from_terms(*c.base(), [(vec![0, 1], s(1))]).unwrap();
    assert_eq!(interior(&e12, &blade(&c, &[0, 1])).unwrap(), CliffElt::scalar(&c, s(-1)));
}

#[test]
fn exp_contract_examples() {
    let c = cctx_with(&[1, 1, 1, 1], 0);
    let mut m = Matrix::zeros(Q, 4, 4);
    m.set(0, 1, s(3));
    m.set(1, 3, s(-2));
    let astar = DualTwoForm::new(*c.base(), m).unwrap();
    assert_eq!(exp_contract(&astar, &CliffElt::one(&c)).unwrap(), CliffElt::one(&c));
    let a = astar.alternating_form();
    let expected = blade(&c, &[0, 1]).add(&CliffElt::scalar(&c, a.entry(0, 1).clone())).unwrap();
    assert_eq!(exp_contract(&astar, &blade(&c, &[0, 1])).unwrap(), expected);
    let w = blade(&c, &[0, 1, 2, 3]);
    assert_eq!(exp_contract(&astar, &w).unwrap(), bl_map(&a, &c, &w).unwrap());

    let f7 = FieldSpec::prime(7).unwrap();
    let b7 = AlgebraContext::new(2, f7).unwrap();
    let c7 = CliffordContext::exterior(b7);
    let err = exp_contract(&DualTwoForm::zero(b7), &CliffElt::one(&c7)).unwrap_err();
    assert!(matches!(err, Error::Characteristic { characteristic: 7, .. }));
}

#[test]
fn symbol_examples() {
    let c = cctx_with(&[1, 1], 0);
    let sym = symbol(&blade(&c, &[0, 1])).unwrap();
    let ext = CliffordContext::exterior(base(2));
    assert_eq!(sym, blade(&ext, &[0, 1]));
    assert_eq!(symbol(&blade(&c, &[1])).unwrap(), blade(&ext, &[1]));
    let c = cctx_with(&[1, 3], 4);
    let w = blade(&c, &[0, 1]);
    assert_eq!(quantize(&c, &symbol(&w).unwrap()).unwrap(), w);

    let f2 = FieldSpec::prime(2).unwrap();
    let c2 = CliffordContext::exterior(AlgebraContext::new(2, f2).unwrap());
    assert!(matches!(symbol(&CliffElt::one(&c2)), Err(Error::Characteristic { .. })));
}

#[test]
fn involution_examples() {
    let c = cctx_with(&[1, 1, 1], 5);
    assert_eq!(blade(&c, &[0, 1]).alpha(), blade(&c, &[0, 1]));
    assert_eq!(blade(&c, &[0, 1]).tau(), pi_q(&c, &word(&c, &[1, 0])).unwrap());
    let w = blade(&c, &[0, 1, 2]).add(&blade(&c, &[1])).unwrap();
    assert_eq!(w.tau().tau(), w);
}

#[test]
fn contexts_must_match() {
    let a = cctx_with(&[1, 1], 0);
    let b = cctx_with(&[1, 2], 0);
    assert!(matches!(blade(&a, &[0]).mul(&blade(&b, &[0])), Err(Error::ContextMismatch(_))));
    // extensional equality
    let a2 = cctx_with(&[1, 1], 0);
    assert!(blade(&a, &[0]).mul(&blade(&a2, &[0])).is_ok());
}
