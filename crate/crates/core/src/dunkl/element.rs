//! Normal-ordered differential-reflection operators in `x1, x2, x3`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::kernel::{ParamPoly, Scalar, Symbol};

/// `x^a ∂^b R^e`: Laurent exponents `a`, derivative orders `b`, and a
/// reflection bitmask `e` (bit `i` is `R_{i+1}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DunklMonomial {
    pub a: [i16; 3],
    pub b: [u8; 3],
    pub e: u8,
}

impl DunklMonomial {
    pub const ONE: DunklMonomial = DunklMonomial {
        a: [0; 3],
        b: [0; 3],
        e: 0,
    };

    pub fn degree(&self) -> u32 {
        self.b.iter().map(|&b| b as u32).sum()
    }
}

fn falling(m: i64, j: u8) -> i64 {
    (0..j as i64).fold(1i64, |acc, t| acc.checked_mul(m - t).expect("coefficient overflow"))
}

fn binom(n: u8, k: u8) -> i64 {
    (0..k as i64).fold(1i64, |acc, t| acc * (n as i64 - t) / (t + 1))
}

/// `∂^p x^m = Σ_j C(p, j) m(m-1)…(m-j+1) x^{m-j} ∂^{p-j}` as `(j, coefficient)`.
fn leibniz(p: u8, m: i16) -> Vec<(u8, i64)> {
    (0..=p)
        .map(|j| (j, binom(p, j) * falling(m as i64, j)))
        .filter(|&(_, c)| c != 0)
        .collect()
}

/// Product of two monomials as a list of `(monomial, integer coefficient)`.
pub fn monomial_product(l: &DunklMonomial, r: &DunklMonomial) -> Vec<(DunklMonomial, i64)> {
    // Move R^e past x^{a'} ∂^{b'}: each R_i flips the sign of x_i and ∂_i.
    let flips: i32 = (0..3)
        .filter(|i| l.e >> i & 1 == 1)
        .map(|i| r.a[i] as i32 + r.b[i] as i32)
        .sum();
    let sign: i64 = if flips.rem_euclid(2) == 0 { 1 } else { -1 };
    let e = l.e ^ r.e;
    let per_var: Vec<Vec<(u8, i64)>> = (0..3).map(|i| leibniz(l.b[i], r.a[i])).collect();
    let mut out = Vec::with_capacity(per_var.iter().map(Vec::len).product());
    for &(j0, c0) in &per_var[0] {
        for &(j1, c1) in &per_var[1] {
            for &(j2, c2) in &per_var[2] {
                let j = [j0, j1, j2];
                let mut m = DunklMonomial { a: [0; 3], b: [0; 3], e };
                for i in 0..3 {
                    m.a[i] = l.a[i] + r.a[i] - j[i] as i16;
                    m.b[i] = l.b[i] - j[i] + r.b[i];
                }
                out.push((m, sign * c0 * c1 * c2));
            }
        }
    }
    out
}

/// A finite sum of normal-ordered monomials with parameter-polynomial
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DunklElement {
    terms: BTreeMap<DunklMonomial, ParamPoly>,
}

fn check_index(i: usize) -> usize {
    assert!((1..=3).contains(&i), "variable index {i} out of range 1..=3");
    i - 1
}

impl DunklElement {
    pub fn zero() -> Self {
        DunklElement::default()
    }

    pub fn one() -> Self {
        DunklElement::scalar(ParamPoly::one())
    }

    pub fn monomial(m: DunklMonomial, c: ParamPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        DunklElement { terms }
    }

    pub fn scalar(c: ParamPoly) -> Self {
        DunklElement::monomial(DunklMonomial::ONE, c)
    }

    pub fn constant(c: Scalar) -> Self {
        DunklElement::scalar(ParamPoly::constant(c))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        DunklElement::constant(Scalar::ratio(n, d))
    }

    pub fn sym(s: Symbol) -> Self {
        DunklElement::scalar(ParamPoly::var(s))
    }

    /// `x_i^k` for any integer `k`; `i` is 1-based.
    pub fn x_pow(i: usize, k: i16) -> Self {
        let mut m = DunklMonomial::ONE;
        m.a[check_index(i)] = k;
        DunklElement::monomial(m, ParamPoly::one())
    }

    pub fn x(i: usize) -> Self {
        DunklElement::x_pow(i, 1)
    }

    /// `∂_{x_i}`.
    pub fn d(i: usize) -> Self {
        let mut m = DunklMonomial::ONE;
        m.b[check_index(i)] = 1;
        DunklElement::monomial(m, ParamPoly::one())
    }

    /// The reflection `R_i f(x_i) = f(-x_i)`.
    pub fn r(i: usize) -> Self {
        let mut m = DunklMonomial::ONE;
        m.e = 1 << check_index(i);
        DunklElement::monomial(m, ParamPoly::one())
    }

    /// Angular momentum `L_i = -i (x_j ∂_k - x_k ∂_j)` for cyclic `(i, j, k)`.
    pub fn angular(i: usize) -> Self {
        let i0 = check_index(i);
        let j = (i0 + 1) % 3 + 1;
        let k = (i0 + 2) % 3 + 1;
        let inner = &(&DunklElement::x(j) * &DunklElement::d(k)) - &(&DunklElement::x(k) * &DunklElement::d(j));
        inner.scale_scalar(&-Scalar::i())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DunklMonomial, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &DunklMonomial) -> ParamPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The coefficient when the element is a multiple of the identity.
    pub fn scalar_value(&self) -> Option<ParamPoly> {
        match self.terms.len() {
            0 => Some(ParamPoly::zero()),
            1 => self.terms.get(&DunklMonomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        if c.is_zero() {
            return DunklElement::zero();
        }
        DunklElement {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_scalar(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return DunklElement::zero();
        }
        DunklElement {
            terms: self.terms.iter().map(|(m, v)| (*m, v.scale(c))).collect(),
        }
    }

    fn add_term(terms: &mut BTreeMap<DunklMonomial, ParamPoly>, m: DunklMonomial, c: &ParamPoly) {
        match terms.get_mut(&m) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    terms.remove(&m);
                }
            }
            None => {
                if !c.is_zero() {
                    terms.insert(m, c.clone());
                }
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(DunklElement::one(), |acc, _| &acc * self)
    }

    /// Replace a parameter symbol by an element, placing it to the left of
    /// each monomial.
    pub fn substitute(&self, s: Symbol, value: &DunklElement) -> DunklElement {
        let mut out = DunklElement::zero();
        let mut powers = vec![DunklElement::one()];
        for (m, c) in &self.terms {
            let unit = DunklElement::monomial(*m, ParamPoly::one());
            for (k, ck) in c.coeffs_in(s).into_iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                while powers.len() <= k {
                    let next = powers.last().expect("nonempty") * value;
                    powers.push(next);
                }
                out = &out + &(&powers[k] * &unit).scale(&ck);
            }
        }
        out
    }
}

impl<'a> Add<&'a DunklElement> for &'a DunklElement {
    type Output = DunklElement;
    fn add(self, rhs: &DunklElement) -> DunklElement {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            DunklElement::add_term(&mut terms, *m, c);
        }
        DunklElement { terms }
    }
}

impl<'a> Sub<&'a DunklElement> for &'a DunklElement {
    type Output = DunklElement;
    fn sub(self, rhs: &DunklElement) -> DunklElement {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            DunklElement::add_term(&mut terms, *m, &-c);
        }
        DunklElement { terms }
    }
}

impl<'a> Mul<&'a DunklElement> for &'a DunklElement {
    type Output = DunklElement;
    fn mul(self, rhs: &DunklElement) -> DunklElement {
        // Group equal integer multiples of the coefficient products first.
        let mut acc: BTreeMap<DunklMonomial, ParamPoly> = BTreeMap::new();
        for (ml, cl) in &self.terms {
            for (mr, cr) in &rhs.terms {
                let c = cl * cr;
                for (m, k) in monomial_product(ml, mr) {
                    let term = if k == 1 { c.clone() } else { c.scale(&Scalar::from_int(k)) };
                    DunklElement::add_term(&mut acc, m, &term);
                }
            }
        }
        DunklElement { terms: acc }
    }
}

impl Neg for &DunklElement {
    type Output = DunklElement;
    fn neg(self) -> DunklElement {
        DunklElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<DunklElement> for DunklElement {
            type Output = DunklElement;
            fn $m(self, rhs: DunklElement) -> DunklElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a DunklElement> for DunklElement {
            type Output = DunklElement;
            fn $m(self, rhs: &DunklElement) -> DunklElement {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for DunklElement {
    type Output = DunklElement;
    fn neg(self) -> DunklElement {
        -&self
    }
}

impl From<ParamPoly> for DunklElement {
    fn from(c: ParamPoly) -> Self {
        DunklElement::scalar(c)
    }
}

pub fn commutator(a: &DunklElement, b: &DunklElement) -> DunklElement {
    &(a * b) - &(b * a)
}

pub fn anticommutator(a: &DunklElement, b: &DunklElement) -> DunklElement {
    &(a * b) + &(b * a)
}

impl fmt::Display for DunklMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for i in 0..3 {
            match self.a[i] {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                k => parts.push(format!("x{}^{}", i + 1, k)),
            }
        }
        for i in 0..3 {
            match self.b[i] {
                0 => {}
                1 => parts.push(format!("∂{}", i + 1)),
                k => parts.push(format!("∂{}^{}", i + 1, k)),
            }
        }
        for i in 0..3 {
            if self.e >> i & 1 == 1 {
                parts.push(format!("R{}", i + 1));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for DunklElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m == &DunklMonomial::ONE {
                    format!("({c})")
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for DunklElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1() -> DunklElement {
        DunklElement::x(1)
    }
    fn d1() -> DunklElement {
        DunklElement::d(1)
    }
    fn n(k: i64) -> DunklElement {
        DunklElement::constant(Scalar::from_int(k))
    }

    #[test]
    fn leibniz_rule() {
        assert_eq!(&d1() * &x1(), &(&x1() * &d1()) + &n(1));
    }

    #[test]
    fn second_order_leibniz() {
        let lhs = &(&d1() * &d1()) * &(&x1() * &x1());
        let rhs = &(&(&DunklElement::x_pow(1, 2) * &d1().pow(2)) + &(&x1() * &d1()).scale_scalar(&Scalar::from_int(4))) + &n(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_rule() {
        let xi = DunklElement::x_pow(1, -1);
        let rhs = &(&xi * &d1()) - &DunklElement::x_pow(1, -2);
        assert_eq!(&d1() * &xi, rhs);
    }

    #[test]
    fn reflections() {
        let r1 = DunklElement::r(1);
        assert_eq!(&r1 * &x1(), -(&x1() * &r1));
        assert_eq!(&r1 * &d1(), -(&d1() * &r1));
        assert_eq!(&r1 * &r1, DunklElement::one());
        let x2 = DunklElement::x(2);
        assert_eq!(&r1 * &x2, &x2 * &r1);
    }

    #[test]
    fn angular_momentum_commutator() {
        // [L1, L2] = i L3
        let l = |i| DunklElement::angular(i);
        assert_eq!(commutator(&l(1), &l(2)), l(3).scale_scalar(&Scalar::i()));
    }

    #[test]
    fn substitution_places_value_on_the_left() {
        let g = DunklElement::sym(Symbol::G1);
        let e = &g * &DunklElement::x_pow(1, -2);
        let r1 = DunklElement::r(1);
        let out = e.substitute(Symbol::G1, &r1);
        assert_eq!(out, &r1 * &DunklElement::x_pow(1, -2));
    }
}
