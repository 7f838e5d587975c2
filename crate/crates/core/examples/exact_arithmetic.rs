//! Gaussian rationals, parametric polynomials and canonical rational functions.

use racah_bi::kernel::{poly_gcd, ParamPoly, RatFunc, Scalar, Symbol};

fn main() {
    let half = Scalar::ratio(1, 2);
    let z = &half + &(&Scalar::i() * &Scalar::ratio(-3, 4));
    println!("z = {z}, z^-1 = {}", z.inv().unwrap());

    let x = ParamPoly::var(Symbol::X);
    let a = ParamPoly::var(Symbol::ALPHA);
    let f = &(&x + &a) * &(&x - &ParamPoly::one());
    let g = &(&x + &a) * &(&x + &ParamPoly::int(2));
    println!("gcd({f}, {g}) = {}", poly_gcd(&f, &g));

    let r = RatFunc::normalize(f.clone(), g.clone()).unwrap();
    println!("{f} / ({g}) = {r}");

    let shifted = r.substitute_affine(Symbol::X, &(&x + &ParamPoly::one()));
    println!("x -> x + 1: {shifted}");
    println!("sum: {}", &r + &shifted);
}
