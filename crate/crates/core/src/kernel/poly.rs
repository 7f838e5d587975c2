//! Sparse multivariate polynomials over the Gaussian rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::Scalar;
use super::symbol::{Symbol, NSYM};

/// A power product of registered symbols.
///
/// The derived order compares total degree first and then the exponent
/// vectors lexicographically, which is the deg-lex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u16,
    exps: [u8; NSYM],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            deg: 0,
            exps: [0; NSYM],
        }
    }

    pub fn var(s: Symbol, e: u8) -> Self {
        let mut m = Monomial::one();
        m.exps[s.index()] = e;
        m.deg = e as u16;
        m
    }

    pub fn degree(&self) -> u16 {
        self.deg
    }

    pub fn exp(&self, s: Symbol) -> u8 {
        self.exps[s.index()]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_add(*o).expect("monomial exponent overflow");
        }
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_sub(*o)?;
        }
        Some(Monomial {
            deg: self.deg - other.deg,
            exps,
        })
    }

    fn with_exp(&self, s: Symbol, e: u8) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[s.index()] as u16 + e as u16;
        m.exps[s.index()] = e;
        m
    }

    /// Bit set of the symbols occurring with positive exponent.
    pub fn support(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in Symbol::all() {
            let e = self.exp(s);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial in the registered symbols with [`Scalar`] coefficients.
///
/// Zero coefficients are never stored, so equality is map equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        ParamPoly::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        ParamPoly::constant(Scalar::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ParamPoly::constant(Scalar::ratio(n, d))
    }

    pub fn var(s: Symbol) -> Self {
        ParamPoly::term(Monomial::var(s, 1), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Leading term in deg-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u16> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn support(&self) -> u32 {
        self.terms.keys().fold(0, |acc, m| acc | m.support())
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.support() & (1 << s.index()) != 0
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let sup = self.support();
        Symbol::all().filter(|s| sup & (1 << s.index()) != 0).collect()
    }

    pub fn degree_in(&self, s: Symbol) -> Option<u8> {
        self.terms.keys().map(|m| m.exp(s)).max()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &ParamPoly) {
        for (m, c) in &other.terms {
            self.add_term_ref(*m, c);
        }
    }

    pub fn sub_assign_ref(&mut self, other: &ParamPoly) {
        for (m, c) in &other.terms {
            self.add_term(*m, -c);
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &Scalar, other: &ParamPoly) {
        if factor.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(*m, factor * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiply by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, v)| (mm.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Make the leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> ParamPoly {
        match self.leading() {
            None => ParamPoly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &ParamPoly) -> Option<ParamPoly> {
        let (dm, dc) = divisor.leading()?;
        let (dm, dc_inv) = (*dm, dc.inv().expect("nonzero"));
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.inv()?));
        }
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(&dm)?;
            let qc = rc * &dc_inv;
            for (m, c) in &divisor.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `s`;
    /// index `k` holds the coefficient of `s^k`.
    pub fn coeffs_in(&self, s: Symbol) -> Vec<ParamPoly> {
        let deg = match self.degree_in(s) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![ParamPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(s);
            out[e as usize].terms.insert(m.with_exp(s, 0), c.clone());
        }
        out
    }

    /// Rebuild from coefficients in `s` (inverse of [`ParamPoly::coeffs_in`]).
    pub fn from_coeffs_in(s: Symbol, coeffs: &[ParamPoly]) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let sk = Monomial::var(s, k as u8);
            for (m, v) in &c.terms {
                out.add_term_ref(m.mul(&sk), v);
            }
        }
        out
    }

    /// Leading coefficient with respect to `s` (a polynomial free of `s`).
    pub fn lc_in(&self, s: Symbol) -> ParamPoly {
        self.coeffs_in(s).pop().unwrap_or_default()
    }

    /// Substitute `s := value` everywhere.
    pub fn substitute(&self, s: Symbol, value: &ParamPoly) -> ParamPoly {
        if !self.contains(s) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(s);
        let mut acc = ParamPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Substitute several symbols simultaneously by scalar values.
    pub fn evaluate(&self, values: &[(Symbol, Scalar)]) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = *m;
            for (s, v) in values {
                let e = mono.exp(*s);
                if e > 0 {
                    coeff = &coeff * &v.pow(e as u32);
                    mono = mono.with_exp(*s, 0);
                }
            }
            out.add_term(mono, coeff);
        }
        out
    }

    /// Formal derivative with respect to `s`.
    pub fn derivative(&self, s: Symbol) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(s);
            if e > 0 {
                out.add_term(m.with_exp(s, e - 1), c * &Scalar::from_int(e as i64));
            }
        }
        out
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        big.add_assign_ref(small);
        big
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut out = ParamPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: &ParamPoly) -> ParamPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Symbol> for ParamPoly {
    fn from(s: Symbol) -> Self {
        ParamPoly::var(s)
    }
}

impl From<Scalar> for ParamPoly {
    fn from(c: Scalar) -> Self {
        ParamPoly::constant(c)
    }
}

impl From<i64> for ParamPoly {
    fn from(n: i64) -> Self {
        ParamPoly::int(n)
    }
}

impl fmt::Display for ParamPoly {
    /// Terms in descending deg-lex order, e.g. `2*ρ1^2 - 1/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if c.is_real() && num_traits::Signed::is_negative(c.re()) {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// gcd of the coefficients of `p` viewed as a polynomial in `s`.
fn content_in(p: &ParamPoly, s: Symbol) -> ParamPoly {
    let mut g = ParamPoly::zero();
    for c in p.coeffs_in(s) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Dense coefficients (constant term first) of a polynomial in `s` alone.
fn dense_in(p: &ParamPoly, s: Symbol) -> Vec<Scalar> {
    p.coeffs_in(s)
        .iter()
        .map(|c| c.constant_value().expect("only `s` remains"))
        .collect()
}

fn trim(v: &mut Vec<Scalar>) {
    while v.last().is_some_and(Scalar::is_zero) {
        v.pop();
    }
}

/// Monic gcd of two dense univariate polynomials (empty if both vanish).
fn dense_gcd(mut f: Vec<Scalar>, mut g: Vec<Scalar>) -> Vec<Scalar> {
    trim(&mut f);
    trim(&mut g);
    while !g.is_empty() {
        while f.len() >= g.len() {
            let q = f.last().expect("nonempty").checked_div(g.last().expect("nonempty")).expect("nonzero");
            let shift = f.len() - g.len();
            for (i, c) in g.iter().enumerate() {
                f[i + shift] = &f[i + shift] - &(&q * c);
            }
            f.pop();
            trim(&mut f);
            if f.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut f, &mut g);
    }
    if let Some(inv) = f.last().and_then(Scalar::inv) {
        for c in &mut f {
            *c = &*c * &inv;
        }
    }
    f
}

/// Whether `a` and `b` have no common factor involving `v`, decided by
/// specializing every other variable to integers. A constant image gcd at a
/// point where neither leading coefficient in `v` vanishes proves it; other
/// outcomes are inconclusive.
fn coprime_in(a: &ParamPoly, b: &ParamPoly, v: Symbol) -> bool {
    let others: Vec<Symbol> = Symbol::all()
        .filter(|s| *s != v && (a.support() | b.support()) & (1 << s.index()) != 0)
        .collect();
    (0..3i64).any(|attempt| {
        let point: Vec<(Symbol, Scalar)> = others
            .iter()
            .enumerate()
            .map(|(k, s)| (*s, Scalar::from_int(3 + 7 * k as i64 + 11 * attempt + 5 * attempt * k as i64)))
            .collect();
        if a.lc_in(v).evaluate(&point).is_zero() || b.lc_in(v).evaluate(&point).is_zero() {
            return false;
        }
        dense_gcd(dense_in(&a.evaluate(&point), v), dense_in(&b.evaluate(&point), v)).len() == 1
    })
}

/// Coefficients of `p` in the variables `others` over `Q[y]`, keyed by
/// exponent vector so that the last key is the lex-leading one.
fn coeffs_over(p: &ParamPoly, y: Symbol, others: &[Symbol]) -> BTreeMap<Vec<u8>, ParamPoly> {
    let mut out: BTreeMap<Vec<u8>, ParamPoly> = BTreeMap::new();
    for (m, c) in &p.terms {
        let key = others.iter().map(|s| m.exp(*s)).collect();
        out.entry(key).or_default().add_term_ref(Monomial::var(y, m.exp(y)), c);
    }
    out
}

fn content_over(p: &ParamPoly, y: Symbol, others: &[Symbol]) -> ParamPoly {
    let mut g = ParamPoly::zero();
    for c in coeffs_over(p, y, others).values() {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn lead_over(p: &ParamPoly, y: Symbol, others: &[Symbol]) -> (Vec<u8>, ParamPoly) {
    coeffs_over(p, y, others).pop_last().expect("nonzero polynomial")
}

/// gcd of two polynomials primitive over `Q[y]`: images at `y = t` are
/// scaled by the gcd of the leading coefficients and interpolated in `y`
/// until the candidate divides both inputs.
fn interpolation_gcd(a: &ParamPoly, b: &ParamPoly, y: Symbol, others: &[Symbol]) -> ParamPoly {
    let (_, la) = lead_over(a, y, others);
    let (_, lb) = lead_over(b, y, others);
    let gamma = gcd(&la, &lb);
    let bound = a.degree_in(y).unwrap_or(0).min(b.degree_in(y).unwrap_or(0)) as usize
        + gamma.degree_in(y).unwrap_or(0) as usize;
    let yv = ParamPoly::var(y);
    let mut t = 0i64;
    loop {
        let mut h = ParamPoly::zero();
        let mut q = ParamPoly::one();
        let mut key: Option<Vec<u8>> = None;
        let mut points = 0usize;
        while points <= bound {
            t += 1;
            let pt = [(y, Scalar::from_int(t))];
            let value = |p: &ParamPoly| p.evaluate(&pt).constant_value().expect("free of other variables");
            if value(&la).is_zero() || value(&lb).is_zero() {
                continue;
            }
            let g = gcd(&a.evaluate(&pt), &b.evaluate(&pt));
            let (gk, gl) = lead_over(&g, y, others);
            if gk.iter().all(|&e| e == 0) {
                return ParamPoly::one();
            }
            match &key {
                Some(k) if gk > *k => continue,
                Some(k) if gk == *k => {}
                _ => {
                    key = Some(gk);
                    h = ParamPoly::zero();
                    q = ParamPoly::one();
                    points = 0;
                }
            }
            let scaled = g.scale(&value(&gamma).checked_div(&gl.constant_value().expect("scalar image")).expect("nonzero"));
            let prev = h.clone();
            let correction = &scaled - &h.evaluate(&pt);
            h = &h + &(&correction * &q).scale(&value(&q).inv().expect("distinct points"));
            q = &q * &(&yv - &ParamPoly::int(t));
            points += 1;
            if (points > 1 && h == prev) || points > bound {
                let cand = h.div_exact(&content_over(&h, y, others)).expect("content divides");
                if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                    return cand;
                }
            }
        }
    }
}

/// Greatest common divisor of two multivariate polynomials, normalized to
/// leading coefficient 1 in deg-lex order; `gcd(0, 0) = 0`.
///
/// Univariate inputs use the Euclidean algorithm. Otherwise the last common
/// variable `y` is singled out, contents over `Q[y]` are split off, and the
/// primitive gcd is interpolated from images at integer values of `y`.
pub fn gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return ParamPoly::one();
    }
    if a == b {
        return a.monic();
    }
    if a.len() <= b.len() {
        if b.div_exact(a).is_some() {
            return a.monic();
        }
    } else if a.div_exact(b).is_some() {
        return b.monic();
    }
    let (sa, sb) = (a.support(), b.support());
    if sa != sb {
        // A variable present in only one argument: its content carries the gcd.
        let only = sa ^ sb;
        let v = Symbol::from_index(only.trailing_zeros() as usize);
        return if sa & (1 << v.index()) != 0 {
            gcd(&content_in(a, v), b)
        } else {
            gcd(a, &content_in(b, v))
        };
    }
    let vars: Vec<Symbol> = Symbol::all().filter(|s| sa & (1 << s.index()) != 0).collect();
    if let [v] = vars[..] {
        let g = dense_gcd(dense_in(a, v), dense_in(b, v));
        return g.iter().enumerate().fold(ParamPoly::zero(), |acc, (k, c)| {
            &acc + &ParamPoly::term(Monomial::var(v, k as u8), c.clone())
        });
    }
    if coprime_in(a, b, vars[0]) {
        let (ca, cb) = (content_in(a, vars[0]), content_in(b, vars[0]));
        return gcd(&ca, &cb);
    }
    let (&y, others) = vars.split_last().expect("at least two variables");
    let (ca, cb) = (content_over(a, y, others), content_over(b, y, others));
    let f = a.div_exact(&ca).expect("content divides");
    let g = b.div_exact(&cb).expect("content divides");
    (&gcd(&ca, &cb) * &interpolation_gcd(&f, &g, y, others)).monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> ParamPoly {
        ParamPoly::var(Symbol::Z)
    }

    #[test]
    fn gcd_shares_linear_factor() {
        let a = &(&z() * &z()) - &ParamPoly::one();
        let b = &(&(&z() * &z()) - &z().scale(&Scalar::from_int(2))) + &ParamPoly::one();
        assert_eq!(gcd(&a, &b), &z() - &ParamPoly::one());
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let p = &z().scale(&Scalar::from_int(3)) + &ParamPoly::int(6);
        assert_eq!(gcd(&p, &ParamPoly::zero()), &z() + &ParamPoly::int(2));
        assert!(gcd(&ParamPoly::zero(), &ParamPoly::zero()).is_zero());
    }

    #[test]
    fn gcd_coprime_linear() {
        let a = &z() + &ParamPoly::ratio(1, 2);
        assert!(gcd(&a, &z()).is_one());
    }

    #[test]
    fn gcd_multivariate() {
        let r1 = ParamPoly::var(Symbol::RHO1);
        let r2 = ParamPoly::var(Symbol::RHO2);
        let f1 = &z() - &r1;
        let f2 = &z() - &r2;
        let f3 = &z().scale(&Scalar::from_int(2)) + &r1;
        let a = &(&f1 * &f2) * &f3;
        let b = &(&f1 * &f3) * &(&z() + &r2);
        let expected = (&f1 * &f3).monic();
        assert_eq!(gcd(&a, &b), expected);
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = &(&z() * &z()) - &ParamPoly::one();
        assert_eq!(
            a.div_exact(&(&z() - &ParamPoly::one())).unwrap(),
            &z() + &ParamPoly::one()
        );
        assert!(a.div_exact(&z()).is_none());
    }

    #[test]
    fn substitution_is_composition() {
        // (z^2 + ρ1) at z := -z - 1
        let p = &(&z() * &z()) + &ParamPoly::var(Symbol::RHO1);
        let sub = &(-z()) - &ParamPoly::one();
        let expected = &(&(&z() * &z()) + &z().scale(&Scalar::from_int(2)))
            + &(&ParamPoly::one() + &ParamPoly::var(Symbol::RHO1));
        assert_eq!(p.substitute(Symbol::Z, &sub), expected);
    }

    #[test]
    fn display_orders_terms() {
        let p = &(&ParamPoly::var(Symbol::RHO1) * &ParamPoly::var(Symbol::RHO1))
            .scale(&Scalar::from_int(2))
            - &ParamPoly::ratio(1, 4);
        assert_eq!(p.to_string(), "2*ρ1^2 - 1/4");
    }
}
