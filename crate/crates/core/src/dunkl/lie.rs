//! `su(1,1)` and `osp(1|2)` in one variable, their coproducts, and the
//! lifted generators and Casimir operators on two or three variables.

use crate::kernel::{Scalar, Symbol};

use super::element::DunklElement;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Algebra {
    Su11,
    Osp12,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    KPlus,
    KMinus,
    K0,
    APlus,
    AMinus,
    A0,
    P,
}

impl Generator {
    pub fn algebra(self) -> Algebra {
        match self {
            Generator::KPlus | Generator::KMinus | Generator::K0 => Algebra::Su11,
            _ => Algebra::Osp12,
        }
    }
}

impl Algebra {
    pub fn generators(self) -> &'static [Generator] {
        match self {
            Algebra::Su11 => &[Generator::KPlus, Generator::KMinus, Generator::K0],
            Algebra::Osp12 => &[Generator::APlus, Generator::AMinus, Generator::A0, Generator::P],
        }
    }
}

/// The factors a lifted operator acts on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Legs {
    Pair12,
    Pair23,
    Triple,
}

impl Legs {
    fn vars(self) -> &'static [usize] {
        match self {
            Legs::Pair12 => &[1, 2],
            Legs::Pair23 => &[2, 3],
            Legs::Triple => &[1, 2, 3],
        }
    }
}

/// Which leg is split on the second application of the coproduct.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coassociation {
    /// `(1 ⊗ Δ) Δ`
    SplitRight,
    /// `(Δ ⊗ 1) Δ`
    SplitLeft,
}

/// `K0 = (-∂² + x² + g/x²)/4`, `K± = ((x ∓ ∂)² - g/x²)/4` with `g = k² - 1/4`.
pub fn su11_generator(g: Generator, i: usize) -> DunklElement {
    let x = DunklElement::x(i);
    let d = DunklElement::d(i);
    let pot = &DunklElement::sym(Symbol::g(i)) * &DunklElement::x_pow(i, -2);
    let quarter = Scalar::ratio(1, 4);
    match g {
        Generator::K0 => (&(&(&x * &x) - &(&d * &d)) + &pot).scale_scalar(&quarter),
        Generator::KPlus => {
            let xm = &x - &d;
            (&(&xm * &xm) - &pot).scale_scalar(&quarter)
        }
        Generator::KMinus => {
            let xp = &x + &d;
            (&(&xp * &xp) - &pot).scale_scalar(&quarter)
        }
        _ => panic!("{g:?} is not an su(1,1) generator"),
    }
}

/// `A± = (x ∓ ∂ ± (μ/x) R)/2`, `A0 = (-∂² + x² + μ(μ - R)/x²)/4`, `P = R`.
pub fn osp12_generator(g: Generator, i: usize) -> DunklElement {
    let x = DunklElement::x(i);
    let d = DunklElement::d(i);
    let r = DunklElement::r(i);
    let mu = DunklElement::sym(Symbol::mu(i));
    let xinv = DunklElement::x_pow(i, -1);
    let half = Scalar::ratio(1, 2);
    match g {
        Generator::APlus => (&(&x - &d) + &(&(&mu * &xinv) * &r)).scale_scalar(&half),
        Generator::AMinus => (&(&x + &d) - &(&(&mu * &xinv) * &r)).scale_scalar(&half),
        Generator::A0 => {
            let pot = &(&mu * &(&mu - &r)) * &DunklElement::x_pow(i, -2);
            (&(&(&x * &x) - &(&d * &d)) + &pot).scale_scalar(&Scalar::ratio(1, 4))
        }
        Generator::P => r,
        _ => panic!("{g:?} is not an osp(1|2) generator"),
    }
}

pub fn single_generator(g: Generator, i: usize) -> DunklElement {
    match g.algebra() {
        Algebra::Su11 => su11_generator(g, i),
        Algebra::Osp12 => osp12_generator(g, i),
    }
}

/// A formal sum of tensor words; `None` marks the unit on that leg.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorSum(pub Vec<(Scalar, Vec<Option<Generator>>)>);

/// `Δ(g)` on two legs.
pub fn coproduct(g: Generator) -> TensorSum {
    let one = Scalar::one();
    let words = match g {
        Generator::APlus | Generator::AMinus => vec![
            (one.clone(), vec![Some(g), Some(Generator::P)]),
            (one, vec![None, Some(g)]),
        ],
        Generator::P => vec![(one, vec![Some(g), Some(g)])],
        _ => vec![(one.clone(), vec![Some(g), None]), (one, vec![None, Some(g)])],
    };
    TensorSum(words)
}

impl TensorSum {
    pub fn single(g: Generator) -> Self {
        TensorSum(vec![(Scalar::one(), vec![Some(g)])])
    }

    /// Apply the coproduct to leg `leg`, doubling it.
    pub fn split(&self, leg: usize) -> TensorSum {
        let mut out = Vec::new();
        for (c, word) in &self.0 {
            let pieces = match word[leg] {
                None => vec![(Scalar::one(), vec![None, None])],
                Some(g) => coproduct(g).0,
            };
            for (c2, piece) in pieces {
                let mut w = word[..leg].to_vec();
                w.extend(piece);
                w.extend_from_slice(&word[leg + 1..]);
                out.push((c * &c2, w));
            }
        }
        TensorSum(out)
    }

    /// Realize with leg `j` acting on variable `vars[j]`.
    pub fn realize(&self, vars: &[usize]) -> DunklElement {
        let mut out = DunklElement::zero();
        for (c, word) in &self.0 {
            let mut term = DunklElement::constant(c.clone());
            for (leg, g) in word.iter().enumerate() {
                if let Some(g) = g {
                    term = &term * &single_generator(*g, vars[leg]);
                }
            }
            out = &out + &term;
        }
        out
    }
}

/// The generator `g` lifted to the given legs through the coproduct.
pub fn coproduct_lift(g: Generator, legs: Legs) -> DunklElement {
    coproduct_lift_with(g, legs, Coassociation::SplitRight)
}

pub fn coproduct_lift_with(g: Generator, legs: Legs, order: Coassociation) -> DunklElement {
    let once = TensorSum::single(g).split(0);
    let t = match (legs, order) {
        (Legs::Triple, Coassociation::SplitRight) => once.split(1),
        (Legs::Triple, Coassociation::SplitLeft) => once.split(0),
        _ => once,
    };
    t.realize(legs.vars())
}

/// `su(1,1)` generators and Casimir `C = K0² - K+K- - K0`.
#[derive(Clone, Debug)]
pub struct Su11 {
    pub k0: DunklElement,
    pub kp: DunklElement,
    pub km: DunklElement,
    pub c: DunklElement,
}

impl Su11 {
    pub fn from_generators(k0: DunklElement, kp: DunklElement, km: DunklElement) -> Self {
        let c = &(&(&k0 * &k0) - &(&kp * &km)) - &k0;
        Su11 { k0, kp, km, c }
    }

    pub fn generators(&self) -> [&DunklElement; 3] {
        [&self.k0, &self.kp, &self.km]
    }
}

/// `osp(1|2)` generators with the sCasimir `S = 2A+A- - 2A0 + 1/2`, the
/// Casimir `Q = S P`, `J± = A±²` and the even Casimir `A0² - J+J- - A0`.
#[derive(Clone, Debug)]
pub struct Osp12 {
    pub ap: DunklElement,
    pub am: DunklElement,
    pub a0: DunklElement,
    pub p: DunklElement,
    pub s: DunklElement,
    pub q: DunklElement,
    pub jp: DunklElement,
    pub jm: DunklElement,
    pub c_even: DunklElement,
}

impl Osp12 {
    pub fn from_generators(ap: DunklElement, am: DunklElement, a0: DunklElement, p: DunklElement) -> Self {
        let two = Scalar::from_int(2);
        let s = &(&(&ap * &am).scale_scalar(&two) - &a0.scale_scalar(&two)) + &DunklElement::ratio(1, 2);
        let q = &s * &p;
        let jp = &ap * &ap;
        let jm = &am * &am;
        let c_even = &(&(&a0 * &a0) - &(&jp * &jm)) - &a0;
        Osp12 {
            ap,
            am,
            a0,
            p,
            s,
            q,
            jp,
            jm,
            c_even,
        }
    }

    pub fn generators(&self) -> [&DunklElement; 4] {
        [&self.ap, &self.am, &self.a0, &self.p]
    }
}

pub fn build_su11_single(i: usize) -> Su11 {
    let g = |g| su11_generator(g, i);
    Su11::from_generators(g(Generator::K0), g(Generator::KPlus), g(Generator::KMinus))
}

pub fn build_osp12_single(i: usize) -> Osp12 {
    let g = |g| osp12_generator(g, i);
    Osp12::from_generators(g(Generator::APlus), g(Generator::AMinus), g(Generator::A0), g(Generator::P))
}

pub fn build_su11_lifted(legs: Legs) -> Su11 {
    let g = |g| coproduct_lift(g, legs);
    Su11::from_generators(g(Generator::K0), g(Generator::KPlus), g(Generator::KMinus))
}

pub fn build_osp12_lifted(legs: Legs) -> Osp12 {
    let g = |g| coproduct_lift(g, legs);
    Osp12::from_generators(g(Generator::APlus), g(Generator::AMinus), g(Generator::A0), g(Generator::P))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dunkl::element::commutator;
    use crate::kernel::ParamPoly;

    #[test]
    fn su11_relations() {
        let su = build_su11_single(1);
        assert_eq!(commutator(&su.k0, &su.kp), su.kp);
        assert_eq!(commutator(&su.k0, &su.km), -&su.km);
        assert_eq!(commutator(&su.km, &su.kp), su.k0.scale_scalar(&Scalar::from_int(2)));
        let g = ParamPoly::var(Symbol::G1);
        let expected = (&g - &ParamPoly::ratio(3, 4)).scale(&Scalar::ratio(1, 4));
        assert_eq!(su.c.scalar_value(), Some(expected));
    }

    #[test]
    fn osp12_casimirs() {
        let osp = build_osp12_single(2);
        let mu = DunklElement::sym(Symbol::MU2);
        assert_eq!(osp.q, -&mu);
        assert_eq!(osp.s, -(&mu * &DunklElement::r(2)));
        assert_eq!(&osp.p * &osp.p, DunklElement::one());
    }

    #[test]
    fn lifts_on_three_legs() {
        let k0 = coproduct_lift(Generator::K0, Legs::Triple);
        let sum = &(&su11_generator(Generator::K0, 1) + &su11_generator(Generator::K0, 2)) + &su11_generator(Generator::K0, 3);
        assert_eq!(k0, sum);
        let p = coproduct_lift(Generator::P, Legs::Triple);
        assert_eq!(p, &(&DunklElement::r(1) * &DunklElement::r(2)) * &DunklElement::r(3));
        let ap = coproduct_lift(Generator::APlus, Legs::Pair12);
        let expected = &(&osp12_generator(Generator::APlus, 1) * &DunklElement::r(2)) + &osp12_generator(Generator::APlus, 2);
        assert_eq!(ap, expected);
    }

    #[test]
    fn coassociative() {
        for alg in [Algebra::Su11, Algebra::Osp12] {
            for &g in alg.generators() {
                assert_eq!(
                    coproduct_lift_with(g, Legs::Triple, Coassociation::SplitRight),
                    coproduct_lift_with(g, Legs::Triple, Coassociation::SplitLeft)
                );
            }
        }
    }
}
