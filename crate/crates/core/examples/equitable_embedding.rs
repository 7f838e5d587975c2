//! The Racah algebra inside the Bannai-Ito algebra through the quadratic
//! combinations `A, B, C`.

use racah_bi::kernel::Scalar;
use racah_bi::pbw::{bannai_ito_casimir, build_equitable_embedding, commutator, verify_identity, PbwElement, AlgebraKind};
use racah_bi::kernel::ParamPoly;

fn main() {
    let e = build_equitable_embedding();
    println!("A = {}", e.a);
    println!("B = {}", e.b);
    println!("C = {}", e.c);
    println!("I = {}", e.i);

    let two_delta = e.delta.scale_scalar(Scalar::from_int(2));
    println!("[B, C] = 2Δ: {}", commutator(&e.b, &e.c) == two_delta);
    println!("[C, A] = 2Δ: {}", commutator(&e.c, &e.a) == two_delta);

    let sum = &(&e.a + &e.b) + &e.c;
    let shift = PbwElement::scalar(AlgebraKind::BannaiIto, ParamPoly::ratio(15, 4));
    let rhs = (&(&bannai_ito_casimir() - &e.i) - &shift).scale_scalar(Scalar::ratio(1, 4));
    println!("A + B + C = (U - I - 15/4)/4: {}", verify_identity(&sum, &rhs).unwrap().passed());
}
