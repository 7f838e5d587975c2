//! Reduced quotients of [`ParamPoly`]s.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{gcd, ParamPoly};
use super::scalar::Scalar;
use super::symbol::Symbol;
use super::KernelError;

/// A rational function `num / den` in canonical form.
///
/// `gcd(num, den)` is 1 and the deg-lex leading coefficient of `den` is 1.
/// The distinguished variables `x`, `z` rank first in that order, so for the
/// denominators arising from linear factors `c*z + (affine in parameters)` this
/// is the same as making `den` monic in `z`. Zero is `0 / 1`.
///
/// When the denominator is a product of linear polynomials its factorization
/// is carried along, and sums and products cancel by trial division instead
/// of computing multivariate gcds.
#[derive(Clone)]
pub struct RatFunc {
    num: ParamPoly,
    den: ParamPoly,
    factors: Option<Factors>,
}

/// Distinct linear polynomials with unit leading coefficient and their
/// multiplicities, sorted.
type Factors = Vec<(ParamPoly, u32)>;

fn unit_linear(p: &ParamPoly) -> Option<(ParamPoly, Scalar)> {
    if p.total_degree() != Some(1) {
        return None;
    }
    let lc = p.leading().expect("nonzero").1.clone();
    Some((p.scale(&lc.inv().expect("nonzero")), lc))
}

fn trivial_factors(den: &ParamPoly) -> Option<Factors> {
    if den.is_one() {
        return Some(Vec::new());
    }
    unit_linear(den).map(|(u, _)| vec![(u, 1)])
}

fn expand(factors: &[(ParamPoly, u32)]) -> ParamPoly {
    factors
        .iter()
        .fold(ParamPoly::one(), |acc, (f, k)| &acc * &f.pow(*k))
}

fn merge(mut a: Factors, b: &[(ParamPoly, u32)], max: bool) -> Factors {
    for (f, k) in b {
        match a.iter_mut().find(|(g, _)| g == f) {
            Some(entry) if max => entry.1 = entry.1.max(*k),
            Some(entry) => entry.1 += k,
            None => a.push((f.clone(), *k)),
        }
    }
    a.sort();
    a
}

/// `a / b` for factor multisets with `b ⊆ a`.
fn quotient(a: &[(ParamPoly, u32)], b: &[(ParamPoly, u32)]) -> Factors {
    a.iter()
        .filter_map(|(f, k)| {
            let j = b.iter().find(|(g, _)| g == f).map_or(0, |e| e.1);
            (*k > j).then(|| (f.clone(), k - j))
        })
        .collect()
}

/// Divide `num` by each factor as often as it goes exactly.
fn cancel(mut num: ParamPoly, factors: &[(ParamPoly, u32)]) -> (ParamPoly, Factors) {
    let mut left = Vec::new();
    for (f, k) in factors {
        let mut k = *k;
        while k > 0 && !num.is_zero() {
            match num.div_exact(f) {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        if k > 0 {
            left.push((f.clone(), k));
        }
    }
    (num, left)
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc::from_poly(ParamPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(ParamPoly::one())
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        RatFunc {
            num: p,
            den: ParamPoly::one(),
            factors: Some(Vec::new()),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        RatFunc::from_poly(ParamPoly::constant(c))
    }

    pub fn var(s: Symbol) -> Self {
        RatFunc::from_poly(ParamPoly::var(s))
    }

    fn from_factored(num: ParamPoly, factors: &[(ParamPoly, u32)]) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, left) = cancel(num, factors);
        RatFunc {
            num,
            den: expand(&left),
            factors: Some(left),
        }
    }

    /// `num` divided by a product of polynomials of degree at most one.
    /// Falls back to [`RatFunc::normalize`] when a factor has higher degree.
    pub fn from_linear_factors(num: ParamPoly, factors: &[ParamPoly]) -> Result<Self, KernelError> {
        let mut num = num;
        let mut fs: Factors = Vec::new();
        for f in factors {
            if let Some(c) = f.constant_value() {
                let inv = c.inv().ok_or(KernelError::ZeroDenominator)?;
                num = num.scale(&inv);
            } else if let Some((u, lc)) = unit_linear(f) {
                num = num.scale(&lc.inv().expect("nonzero"));
                fs = merge(fs, &[(u, 1)], false);
            } else {
                let den = factors.iter().fold(ParamPoly::one(), |acc, f| &acc * f);
                return RatFunc::normalize(num, den);
            }
        }
        Ok(RatFunc::from_factored(num, &fs))
    }

    /// Reduce `num / den` to canonical form.
    pub fn normalize(num: ParamPoly, den: ParamPoly) -> Result<Self, KernelError> {
        if den.is_zero() {
            return Err(KernelError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        if den.is_constant() {
            let inv = den.constant_value().and_then(|c| c.inv()).expect("nonzero");
            return Ok(RatFunc::from_poly(num.scale(&inv)));
        }
        if let Some((u, lc)) = unit_linear(&den) {
            return Ok(RatFunc::from_factored(num.scale(&lc.inv().expect("nonzero")), &[(u, 1)]));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Ok(RatFunc::from_coprime(num, den))
    }

    /// Build from an already coprime pair; only the scalar normalization runs.
    pub fn from_coprime(num: ParamPoly, den: ParamPoly) -> Self {
        let lc = den.leading().expect("nonzero denominator").1.clone();
        let (num, den) = if lc.is_one() {
            (num, den)
        } else {
            let inv = lc.inv().expect("nonzero");
            (num.scale(&inv), den.scale(&inv))
        };
        let factors = trivial_factors(&den);
        RatFunc { num, den, factors }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    /// Linear factors of the denominator with multiplicities, when known.
    pub fn den_factors(&self) -> Option<&[(ParamPoly, u32)]> {
        self.factors.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&ParamPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        self.as_poly().and_then(|p| p.constant_value())
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.num.contains(s) || self.den.contains(s)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, KernelError> {
        let inv = rhs.inv().ok_or(KernelError::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn scale(&self, c: &Scalar) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
            factors: self.factors.clone(),
        }
    }

    pub fn mul_poly(&self, p: &ParamPoly) -> RatFunc {
        self * &RatFunc::from_poly(p.clone())
    }

    pub fn pow(&self, n: u32) -> RatFunc {
        if n == 0 {
            return RatFunc::one();
        }
        RatFunc {
            num: self.num.pow(n),
            den: self.den.pow(n),
            factors: self
                .factors
                .as_ref()
                .map(|fs| fs.iter().map(|(f, k)| (f.clone(), k * n)).collect()),
        }
    }

    /// Re-express after mapping every factor; `None` when a mapped factor
    /// stops being linear.
    fn map_factors(
        &self,
        num: ParamPoly,
        map: impl Fn(&ParamPoly) -> ParamPoly,
    ) -> Option<Result<RatFunc, KernelError>> {
        let fs = self.factors.as_ref()?;
        let mut mapped = Vec::with_capacity(fs.len());
        for (f, k) in fs {
            let g = map(f);
            if g.is_constant() || g.total_degree() == Some(1) {
                mapped.extend(std::iter::repeat_n(g, *k as usize));
            } else {
                return None;
            }
        }
        Some(RatFunc::from_linear_factors(num, &mapped))
    }

    /// Substitute `s := value` where the substitution is an automorphism of
    /// the polynomial ring (e.g. `z -> -z - 1`), which preserves coprimality.
    pub fn substitute_affine(&self, s: Symbol, value: &ParamPoly) -> RatFunc {
        if !self.contains(s) {
            return self.clone();
        }
        let num = self.num.substitute(s, value);
        if let Some(r) = self.map_factors(num.clone(), |f| f.substitute(s, value)) {
            return r.expect("automorphism keeps the denominator nonzero");
        }
        RatFunc::from_coprime(num, self.den.substitute(s, value))
    }

    /// General substitution of scalar values; re-reduces the quotient.
    pub fn evaluate(&self, values: &[(Symbol, Scalar)]) -> Result<RatFunc, KernelError> {
        let num = self.num.evaluate(values);
        if let Some(r) = self.map_factors(num.clone(), |f| f.evaluate(values)) {
            return r;
        }
        RatFunc::normalize(num, self.den.evaluate(values))
    }

    /// General substitution `s := value`; re-reduces the quotient.
    pub fn substitute(&self, s: Symbol, value: &ParamPoly) -> Result<RatFunc, KernelError> {
        let num = self.num.substitute(s, value);
        if let Some(r) = self.map_factors(num.clone(), |f| f.substitute(s, value)) {
            return r;
        }
        RatFunc::normalize(num, self.den.substitute(s, value))
    }
}

/// A common multiple of the denominators: the least one when every
/// factorization is known, otherwise built from pairwise gcds.
pub fn common_denominator<'a>(fs: impl IntoIterator<Item = &'a RatFunc>) -> ParamPoly {
    let mut known: Factors = Vec::new();
    let mut other = ParamPoly::one();
    for f in fs {
        match &f.factors {
            Some(fs) => known = merge(known, fs, true),
            None if other.is_one() => other = f.den.clone(),
            None if other == f.den => {}
            None => {
                let g = gcd(&other, &f.den);
                other = &other.div_exact(&g).expect("gcd divides") * &f.den;
            }
        }
    }
    if other.is_one() {
        return expand(&known);
    }
    // Drop the known factors already contained in `other`.
    let mut extra = Vec::new();
    for (f, k) in &known {
        let mut rest = other.clone();
        let mut k = *k;
        while k > 0 {
            match rest.div_exact(f) {
                Some(q) => {
                    rest = q;
                    k -= 1;
                }
                None => break,
            }
        }
        if k > 0 {
            extra.push((f.clone(), k));
        }
    }
    &other * &expand(&extra)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for RatFunc {}

impl std::hash::Hash for RatFunc {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.num, &self.den).cmp(&(&other.num, &other.den))
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if let (Some(fa), Some(fb)) = (&self.factors, &rhs.factors) {
            if self.den == rhs.den {
                return RatFunc::from_factored(&self.num + &rhs.num, fa);
            }
            let l = merge(fa.clone(), fb, true);
            let num = &(&self.num * &expand(&quotient(&l, fa))) + &(&rhs.num * &expand(&quotient(&l, fb)));
            return RatFunc::from_factored(num, &l);
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return RatFunc::normalize(num, self.den.clone()).expect("nonzero denominator");
        }
        if self.den.is_one() {
            return RatFunc::from_coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFunc::from_coprime(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        // Henrici: only factors of gcd(b, d) can cancel in a/b + c/d.
        let g = gcd(&self.den, &rhs.den);
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        let den = &self.den * &d1;
        if g.is_one() || num.is_zero() {
            return RatFunc::normalize(num, den).expect("nonzero denominator");
        }
        let g2 = gcd(&num, &g);
        if g2.is_one() {
            RatFunc::from_coprime(num, den)
        } else {
            RatFunc::from_coprime(
                num.div_exact(&g2).expect("gcd divides"),
                den.div_exact(&g2).expect("gcd divides"),
            )
        }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        if let (Some(fa), Some(fb)) = (&self.factors, &rhs.factors) {
            let (n1, fb_left) = cancel(self.num.clone(), fb);
            let (n2, fa_left) = cancel(rhs.num.clone(), fa);
            let fs = merge(fa_left, &fb_left, false);
            return RatFunc {
                num: &n1 * &n2,
                den: expand(&fs),
                factors: Some(fs),
            };
        }
        // Cross-cancel: gcd(a, d) and gcd(c, b) are the only possible common factors.
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let div = |p: &ParamPoly, g: &ParamPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        RatFunc::from_coprime(num, den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
            factors: self.factors.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<ParamPoly> for RatFunc {
    fn from(p: ParamPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Scalar> for RatFunc {
    fn from(c: Scalar) -> Self {
        RatFunc::constant(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> ParamPoly {
        ParamPoly::var(Symbol::Z)
    }

    #[test]
    fn removable_factor() {
        let n = &(&z() * &z()) - &ParamPoly::one();
        let d = &z() - &ParamPoly::one();
        let r = RatFunc::normalize(n, d).unwrap();
        assert_eq!(r, RatFunc::from_poly(&z() + &ParamPoly::one()));
    }

    #[test]
    fn zero_numerator_and_zero_denominator() {
        assert_eq!(RatFunc::normalize(ParamPoly::zero(), z()).unwrap(), RatFunc::zero());
        assert!(matches!(
            RatFunc::normalize(z(), ParamPoly::zero()),
            Err(KernelError::ZeroDenominator)
        ));
    }

    #[test]
    fn negative_denominator_is_normalized() {
        // (z - ρ1)(z - ρ2) / (-z)
        let rho1 = ParamPoly::var(Symbol::RHO1);
        let rho2 = ParamPoly::var(Symbol::RHO2);
        let n = &(&z() - &rho1) * &(&z() - &rho2);
        let g = RatFunc::normalize(n.clone(), -z()).unwrap();
        assert_eq!(g.den(), &z());
        assert_eq!(g.num(), &-n);
    }

    #[test]
    fn sum_cancels_common_factor() {
        // 1/(z(z+1)) + 1/(z+1) = (1 + z)/(z(z+1)) = 1/z
        let zp1 = &z() + &ParamPoly::one();
        let a = RatFunc::normalize(ParamPoly::one(), &z() * &zp1).unwrap();
        let b = RatFunc::normalize(ParamPoly::one(), zp1).unwrap();
        assert_eq!(&a + &b, RatFunc::normalize(ParamPoly::one(), z()).unwrap());
    }
}
