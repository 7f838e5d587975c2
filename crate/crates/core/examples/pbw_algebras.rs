//! Normal ordering in the abstract Racah and Bannai-Ito algebras.

use racah_bi::pbw::{
    bannai_ito_casimir, commutator, is_central, parse_word, pbw_normal_form_with_steps, racah_casimir, AlgebraKind,
    PbwElement,
};
use racah_bi::kernel::ParamPoly;

fn main() {
    for kind in [AlgebraKind::Racah, AlgebraKind::BannaiIto] {
        let [a, b, c] = kind.generator_names();
        let word = parse_word(kind, &format!("{c}*{b}*{a}")).unwrap();
        let (normal, steps) = pbw_normal_form_with_steps(kind, &word, ParamPoly::one()).unwrap();
        println!("{kind:?}: {c}{b}{a} = {normal}  ({steps} rewrites)");
        let g = PbwElement::generators(kind);
        println!("  [{a}, {b}] = {}", commutator(&g[0], &g[1]));
    }

    let q = racah_casimir();
    println!("Racah Casimir: {q}");
    println!("  central: {}", is_central(&q).is_central());
    let u = bannai_ito_casimir();
    println!("Bannai-Ito Casimir: {u}");
    println!("  central: {}", is_central(&u).is_central());
}
