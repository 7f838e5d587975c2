//! Seeded random parameters and elements for the sampled checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dunkl::{DunklElement, DunklMonomial};
use crate::kernel::{ParamPoly, RatFunc, Scalar, Symbol};
use crate::pbw::{pbw_normal_form, AlgebraKind, PbwElement};
use crate::shift::ShiftOperator;

/// An independent generator for sample `index` of stream `stream`, so that
/// results do not depend on the order in which samples are drawn.
pub fn sample_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(u128::from(index) << 20);
    rng
}

/// `p/q` with `|p| ≤ 12`, `1 ≤ q ≤ 9`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::ratio(rng.gen_range(-12..=12), rng.gen_range(1..=9))
}

fn small_coeff<R: Rng>(rng: &mut R, params: &[Symbol]) -> ParamPoly {
    let mut c = ParamPoly::int(rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 });
    if !params.is_empty() && rng.gen_bool(0.3) {
        c = &c * &ParamPoly::var(*params.choose(rng).expect("nonempty"));
    }
    c
}

/// One to three normal-ordered words of length at most three.
pub fn random_pbw_element<R: Rng>(kind: AlgebraKind, rng: &mut R) -> PbwElement {
    let params: &[Symbol] = match kind {
        AlgebraKind::Racah => &[Symbol::A1, Symbol::D, Symbol::E2],
        AlgebraKind::BannaiIto => &[Symbol::OMEGA_X, Symbol::OMEGA_Z],
    };
    let mut out = PbwElement::zero(kind);
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(0..=3);
        let word: Vec<u8> = (0..len).map(|_| rng.gen_range(0..3)).collect();
        let term = pbw_normal_form(kind, &word, small_coeff(rng, params)).expect("word in range");
        out = &out + &term;
    }
    out
}

/// One to three terms `c(z) T^k R^ε`, `|k| ≤ 2`, with `c` a polynomial of
/// degree at most one or a ratio of two linear factors.
pub fn random_shift_operator<R: Rng>(rng: &mut R) -> ShiftOperator {
    let z = Symbol::Z;
    let lin = |rng: &mut R| &ParamPoly::var(z).scale(&Scalar::from_int(rng.gen_range(1..=2))) + &ParamPoly::int(rng.gen_range(-3..=3));
    let mut out = ShiftOperator::zero(z);
    for _ in 0..rng.gen_range(1..=3) {
        let k = rng.gen_range(-2..=2);
        let eps = rng.gen_bool(0.5);
        let c = if rng.gen_bool(0.5) {
            RatFunc::from_poly(&lin(rng) + &ParamPoly::int(rng.gen_range(0..=2)))
        } else {
            RatFunc::normalize(lin(rng), lin(rng)).expect("linear denominator is nonzero")
        };
        out = &out + &ShiftOperator::term(z, (k, eps), c);
    }
    out
}

/// One to three monomials `c x^a ∂^b R^e` with `|a_i| ≤ 2`, `b_i ≤ 2` and
/// total derivative order at most two.
pub fn random_dunkl_element<R: Rng>(rng: &mut R) -> DunklElement {
    let params = [Symbol::MU1, Symbol::MU2, Symbol::G3];
    let mut out = DunklElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut b = [0u8; 3];
        for _ in 0..rng.gen_range(0..=2) {
            b[rng.gen_range(0..3)] += 1;
        }
        let m = DunklMonomial {
            a: [rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2)],
            b,
            e: rng.gen_range(0..8),
        };
        out = &out + &DunklElement::monomial(m, small_coeff(rng, &params));
    }
    out
}
