use proptest::prelude::*;

use racah_bi::dunkl::{DunklElement, DunklMonomial};
use racah_bi::kernel::{ParamPoly, RatFunc, Scalar, Symbol};
use racah_bi::pbw::{pbw_normal_form, pbw_normal_form_with_steps, AlgebraKind, PbwElement, MAX_REWRITE_STEPS};
use racah_bi::shift::{build_standard_bi, BiParams, ShiftOperator};

fn kind() -> impl Strategy<Value = AlgebraKind> {
    prop_oneof![Just(AlgebraKind::Racah), Just(AlgebraKind::BannaiIto)]
}

fn word() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 0..4)
}

fn pbw(kind: AlgebraKind, words: Vec<(Vec<u8>, i64)>) -> PbwElement {
    words.into_iter().fold(PbwElement::zero(kind), |acc, (w, c)| {
        &acc + &pbw_normal_form(kind, &w, ParamPoly::int(c)).unwrap()
    })
}

fn word_of(m: &[u16; 3]) -> Vec<u8> {
    (0..3u8).flat_map(|g| std::iter::repeat_n(g, m[g as usize] as usize)).collect()
}

fn pbw_terms() -> impl Strategy<Value = Vec<(Vec<u8>, i64)>> {
    prop::collection::vec((word(), -3i64..=3), 1..4)
}

fn shift_op() -> impl Strategy<Value = ShiftOperator> {
    prop::collection::vec((-2i32..=2, any::<bool>(), 1i64..=2, -3i64..=3, -3i64..=3), 1..4).prop_map(|terms| {
        let z = Symbol::Z;
        terms.into_iter().fold(ShiftOperator::zero(z), |acc, (k, eps, a, b, c)| {
            let lin = |a: i64, b: i64| &ParamPoly::var(z).scale(&Scalar::from_int(a)) + &ParamPoly::int(b);
            let coeff = RatFunc::normalize(lin(a, b), lin(1, c)).unwrap();
            &acc + &ShiftOperator::term(z, (k, eps), coeff)
        })
    })
}

fn poly_shift_op() -> impl Strategy<Value = ShiftOperator> {
    prop::collection::vec((-2i32..=2, any::<bool>(), -2i64..=2, -3i64..=3), 1..4).prop_map(|terms| {
        let z = Symbol::Z;
        terms.into_iter().fold(ShiftOperator::zero(z), |acc, (k, eps, a, b)| {
            let coeff = &ParamPoly::var(z).scale(&Scalar::from_int(a)) + &ParamPoly::int(b);
            &acc + &ShiftOperator::term(z, (k, eps), RatFunc::from_poly(coeff))
        })
    })
}

fn dunkl() -> impl Strategy<Value = DunklElement> {
    let mono = ([-2i16..=2, -2i16..=2, -2i16..=2], [0u8..=1, 0u8..=1, 0u8..=1], 0u8..8, -3i64..=3);
    prop::collection::vec(mono, 1..4).prop_map(|ms| {
        ms.into_iter().fold(DunklElement::zero(), |acc, (a, b, e, c)| {
            let coeff = &ParamPoly::var(Symbol::MU1) + &ParamPoly::int(c);
            &acc + &DunklElement::monomial(DunklMonomial { a, b, e }, coeff)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pbw_product_is_associative(k in kind(), a in pbw_terms(), b in pbw_terms(), c in pbw_terms()) {
        let (a, b, c) = (pbw(k, a), pbw(k, b), pbw(k, c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn pbw_rewriting_terminates_within_bound(k in kind(), w in prop::collection::vec(0u8..3, 0..10)) {
        let (_, steps) = pbw_normal_form_with_steps(k, &w, ParamPoly::one()).unwrap();
        prop_assert!(steps <= MAX_REWRITE_STEPS);
    }

    #[test]
    fn pbw_normal_form_is_idempotent(k in kind(), t in pbw_terms()) {
        let e = pbw(k, t);
        let again = e.terms().fold(PbwElement::zero(k), |acc, (m, c)| {
            &acc + &pbw_normal_form(k, &word_of(m), c.clone()).unwrap()
        });
        prop_assert_eq!(again, e);
    }

    #[test]
    fn shift_composition_is_associative(a in shift_op(), b in shift_op(), c in shift_op()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn shift_action_is_a_representation(a in poly_shift_op(), b in poly_shift_op(), n in 0u32..4) {
        let p = ParamPoly::var(Symbol::Z).pow(n);
        let bp = b.apply_to_polynomial(&p).unwrap();
        prop_assert_eq!((&a * &b).apply_to_polynomial(&p).unwrap(), a.apply_to_polynomial(&bp).unwrap());
    }

    #[test]
    fn dunkl_product_is_associative(a in dunkl(), b in dunkl(), c in dunkl()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn bi_x_preserves_polynomial_degree(p in prop::collection::vec((-12i64..=12, 1i64..=9), 4)) {
        let q = |i: usize| Scalar::ratio(p[i].0, p[i].1);
        let r = build_standard_bi(BiParams::numeric(q(0), q(1), q(2), q(3)));
        for n in 0..=8u8 {
            let zn = ParamPoly::var(Symbol::Z).pow(u32::from(n));
            let image = r.x.apply_to_polynomial(&zn).unwrap();
            prop_assert!(image.degree_in(Symbol::Z).unwrap_or(0) <= n, "X z^{} = {}", n, image);
        }
    }
}
