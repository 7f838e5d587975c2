use proptest::prelude::*;

use racah_bi::kernel::{
    poly_gcd, solve_polynomial_system, ExactMatrix, Monomial, ParamPoly, RatFunc, Scalar, Symbol,
};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=6, -9i64..=9, 1i64..=6).prop_map(|(a, b, c, d)| &Scalar::ratio(a, b) + &(&Scalar::i() * &Scalar::ratio(c, d)))
}

fn real() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=6).prop_map(|(a, b)| Scalar::ratio(a, b))
}

const VARS: [Symbol; 3] = [Symbol::X, Symbol::ALPHA, Symbol::BETA];

fn poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((0u8..3, 0u8..3, 0u8..3, -5i64..=5), 0..5).prop_map(|terms| {
        terms.into_iter().fold(ParamPoly::zero(), |acc, (i, j, k, c)| {
            let m = Monomial::var(VARS[0], i).mul(&Monomial::var(VARS[1], j)).mul(&Monomial::var(VARS[2], k));
            &acc + &ParamPoly::term(m, Scalar::from_int(c))
        })
    })
}

fn nonzero_poly() -> impl Strategy<Value = ParamPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// `c x + a α + b β + e` with `c ≠ 0`.
fn linear() -> impl Strategy<Value = ParamPoly> {
    (prop_oneof![-3i64..=-1, 1i64..=3], -2i64..=2, -2i64..=2, -4i64..=4).prop_map(|(c, a, b, e)| {
        let v = |s, n| ParamPoly::var(s).scale(&Scalar::from_int(n));
        &(&(&v(Symbol::X, c) + &v(Symbol::ALPHA, a)) + &v(Symbol::BETA, b)) + &ParamPoly::int(e)
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), prop::collection::vec(linear(), 0..3))
        .prop_map(|(n, fs)| RatFunc::from_linear_factors(n, &fs).expect("nonzero factors"))
}

fn product(ps: &[ParamPoly]) -> ParamPoly {
    ps.iter().fold(ParamPoly::one(), |acc, p| &acc * p)
}

fn unit_leading(p: &ParamPoly) -> bool {
    p.leading().map(|(_, c)| c.is_one()).unwrap_or(false)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn scalar_pq_round_trip(a in real()) {
        prop_assert_eq!(a.to_pq_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), k in nonzero_poly()) {
        let (ak, bk) = (&a * &k, &b * &k);
        let g = poly_gcd(&ak, &bk);
        prop_assert!(ak.div_exact(&g).is_some());
        prop_assert!(bk.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&k.monic()).is_some(), "gcd {} misses common factor {}", g, k);
    }

    #[test]
    fn normalization_is_canonical(n in poly(), d in nonzero_poly(), k in nonzero_poly()) {
        let f = RatFunc::normalize(n.clone(), d.clone()).unwrap();
        let g = RatFunc::normalize(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert!(unit_leading(f.den()));
        prop_assert!(poly_gcd(f.num(), f.den()).is_constant() || f.num().is_zero());
        prop_assert_eq!(f.num() * &d, f.den() * &n);
    }

    #[test]
    fn factored_and_gcd_paths_agree(n in poly(), fs in prop::collection::vec(linear(), 1..4), m in poly(), gs in prop::collection::vec(linear(), 1..4)) {
        let a = RatFunc::from_linear_factors(n.clone(), &fs).unwrap();
        let b = RatFunc::from_linear_factors(m.clone(), &gs).unwrap();
        let (da, db) = (product(&fs), product(&gs));
        prop_assert_eq!(&a, &RatFunc::normalize(n.clone(), da.clone()).unwrap());
        let sum = RatFunc::normalize(&(&n * &db) + &(&m * &da), &da * &db).unwrap();
        prop_assert_eq!(&a + &b, sum);
        let prod = RatFunc::normalize(&n * &m, &da * &db).unwrap();
        prop_assert_eq!(&a * &b, prod);
    }

    #[test]
    fn rational_functions_form_a_field(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        }
        prop_assert!(unit_leading((&a + &b).den()));
    }

    #[test]
    fn shift_substitution_commutes_with_arithmetic(a in ratfunc(), b in ratfunc(), k in -3i64..=3) {
        let shifted = &ParamPoly::var(Symbol::X) + &ParamPoly::int(k);
        let s = |f: &RatFunc| f.substitute_affine(Symbol::X, &shifted);
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn triangular_eigendecomposition_round_trips(diag in prop::collection::btree_set(-20i64..=20, 5), upper in prop::collection::vec(real(), 10)) {
        let diag: Vec<Scalar> = diag.into_iter().map(Scalar::from_int).collect();
        let n = diag.len();
        let mut t = ExactMatrix::diagonal(&diag);
        let mut it = upper.into_iter();
        for r in 0..n {
            for c in r + 1..n {
                t.set(r, c, it.next().unwrap());
            }
        }
        let (values, p) = t.eig_triangular().unwrap();
        prop_assert_eq!(&values, &diag);
        let pinv = p.inverse_upper().unwrap();
        let d = pinv.mul(&t).unwrap().mul(&p).unwrap();
        prop_assert_eq!(d, ExactMatrix::diagonal(&values));
    }

    #[test]
    fn fraction_free_solve_matches_field_solve(entries in prop::collection::vec(-6i64..=6, 9), rhs in prop::collection::vec(-6i64..=6, 3)) {
        let rows: Vec<Vec<Scalar>> = entries.chunks(3).map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect()).collect();
        let b: Vec<Scalar> = rhs.iter().map(|&v| Scalar::from_int(v)).collect();
        let m = ExactMatrix::from_rows(rows.clone()).unwrap();
        let lifted: Vec<Vec<ParamPoly>> = rows.iter().map(|r| r.iter().cloned().map(ParamPoly::constant).collect()).collect();
        let lb: Vec<ParamPoly> = b.iter().cloned().map(ParamPoly::constant).collect();
        match (m.solve(&b), solve_polynomial_system(&lifted, &lb)) {
            (Ok(x), Ok(y)) => {
                let y: Vec<Scalar> = y.iter().map(|f| f.constant_value().unwrap()).collect();
                prop_assert_eq!(x, y);
            }
            (Err(_), Err(_)) => {}
            (x, y) => prop_assert!(false, "solvers disagree: {:?} vs {:?}", x, y),
        }
    }
}

#[test]
fn parametric_system_solution_satisfies_equations() {
    let a = ParamPoly::var(Symbol::ALPHA);
    let b = ParamPoly::var(Symbol::BETA);
    let rows = vec![vec![a.clone(), ParamPoly::one()], vec![ParamPoly::one(), b.clone()]];
    let rhs = vec![ParamPoly::one(), ParamPoly::zero()];
    let x = solve_polynomial_system(&rows, &rhs).unwrap();
    for (row, r) in rows.iter().zip(&rhs) {
        let lhs = row
            .iter()
            .zip(&x)
            .fold(RatFunc::zero(), |acc, (c, xi)| &acc + &xi.mul_poly(c));
        assert_eq!(lhs, RatFunc::from_poly(r.clone()));
    }
}
