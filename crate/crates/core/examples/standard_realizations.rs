//! Shift-reflection realizations and their fitted structure constants.

use racah_bi::kernel::Scalar;
use racah_bi::shift::{
    build_standard_bi, build_standard_racah, casimir_scalar, fit_bi, fit_racah, BiParams, RacahParams, Realization,
};

fn main() {
    let r = build_standard_racah(RacahParams::symbolic());
    let fit = fit_racah(&r).unwrap();
    println!("Racah realization, symbolic α, β, γ, δ");
    println!("κ1 = {}", r.k1);
    for (name, value) in fit.constants.named() {
        println!("  {name} = {value}");
    }

    let r = build_standard_bi(BiParams::symbolic());
    let fit = fit_bi(&r).unwrap();
    println!("Bannai-Ito realization, symbolic ρ1, ρ2, r1, r2");
    println!("  ωX = {}", fit.constants.omega_x);
    println!("  ωY = {}", fit.constants.omega_y);
    println!("  ωZ = {}", fit.constants.omega_z);
    println!("  U = {}", casimir_scalar(&Realization::BannaiIto(r)).unwrap());

    let q = |n, d| Scalar::ratio(n, d);
    let r = build_standard_bi(BiParams::numeric(q(1, 1), q(3, 2), q(1, 2), q(2, 1)));
    println!("at (1, 3/2, 1/2, 2): U = {}", casimir_scalar(&Realization::BannaiIto(r)).unwrap());
}
