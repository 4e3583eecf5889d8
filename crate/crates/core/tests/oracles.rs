mod common;

use cliff_bundle::clifford::{bl_map, CliffordContext, CliffElt, quantize};
use cliff_bundle::random;
use cliff_bundle::tensor::{divided_power, lambda_map};
use cliff_bundle::{BilinearForm, FieldSpec, TensorElt};
use common::*;

const FIELDS: [FieldSpec; 3] = [FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(7)];

#[test]
fn matching_counts_are_telephone_numbers() {
    let counts: Vec<usize> = (0..7).map(|p| matchings(p).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76]);
}

#[test]
fn recursive_lambda_matches_matching_sum() {
    let mut rng = random::rng(31);
    for field in FIELDS {
        for _ in 0..3 {
            let f = random::bilinear(&ctx(3, field), &mut rng);
            for w in all_words(3, 5) {
                let word = TensorElt::word(*f.ctx(), &w).unwrap();
                assert_eq!(lambda_map(&f, &word).unwrap(), lambda_by_matchings(&f, &w), "{w:?}");
            }
        }
    }
}

#[test]
fn bl_matches_matching_sum_in_the_quotient() {
    let mut rng = random::rng(32);
    for field in FIELDS {
        let c = ctx(3, field);
        let target = CliffordContext::new(random::quadratic(&c, &mut rng));
        let f = random::bilinear(&c, &mut rng);
        let source = target.deformed(&f).unwrap();
        for w in all_words(3, 4) {
            let mut prod = CliffElt::one(&source);
            for &i in &w {
                prod = prod.mul(&CliffElt::blade(&source, &[i]).unwrap()).unwrap();
            }
            assert_eq!(bl_map(&f, &target, &prod).unwrap(), bl_by_matchings(&f, &target, &w), "{w:?}");
        }
    }
}

#[test]
fn pfaffian_matches_matching_sum_and_scalar_part_of_lambda() {
    let mut rng = random::rng(33);
    for field in [FieldSpec::Rationals, FieldSpec::PrimeField(7)] {
        for n in [2, 4, 6] {
            let a = random::alternating_matrix(field, n, &mut rng);
            let pf = a.pfaffian().unwrap();
            assert_eq!(pf, pfaffian_by_matchings(&a));
            let full: Vec<usize> = (0..n).collect();
            let word = TensorElt::word(*a.ctx(), &full).unwrap();
            assert_eq!(lambda_map(&a, &word).unwrap().coeff(&[]), pf);
            assert_eq!(divided_power(&a, n / 2, &word).unwrap().coeff(&[]), pf);
        }
    }
}

#[test]
fn generic_four_by_four_pfaffian() {
    let q = FieldSpec::Rationals;
    let vals = [[0, 2, 3, 5], [-2, 0, 7, 11], [-3, -7, 0, 13], [-5, -11, -13, 0]];
    let a = BilinearForm::from_fn(ctx(4, q), |i, j| q.from_i64(vals[i][j]));
    // a12 a34 − a13 a24 + a14 a23
    assert_eq!(a.pfaffian().unwrap(), q.from_i64(2 * 13 - 3 * 11 + 5 * 7));
}

#[test]
fn antisymmetrization_matches_permutation_sum() {
    let q = FieldSpec::Rationals;
    let mut rng = random::rng(34);
    for n in 1..=4 {
        let c = ctx(n, q);
        let cctx = CliffordContext::new(random::quadratic(&c, &mut rng));
        let ext = CliffordContext::exterior(c);
        let ys: Vec<_> = (0..n).map(|_| random::vector(&c, &mut rng)).collect();
        let mut wedge = CliffElt::one(&ext);
        for y in &ys {
            wedge = wedge.mul(&CliffElt::vector(&ext, y).unwrap()).unwrap();
        }
        let fact = (1..=n as i64).product::<i64>();
        let lhs = quantize(&cctx, &wedge).unwrap().scale(&q.from_i64(fact));
        assert_eq!(lhs, permutation_sum(&cctx, &ys));
    }
}
