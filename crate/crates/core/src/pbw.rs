//! PBW normal forms for the abstract Racah and Bannai-Ito algebras.
//!
//! Elements are linear combinations of ordered monomials `g0^a g1^b g2^c`
//! with coefficients in the polynomial ring of the (symbolic) structure
//! constants. Products are reduced by rewriting the leftmost out-of-order
//! adjacent pair, which strictly lowers (degree, inversion count).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::kernel::{ParamPoly, Scalar, Symbol};

/// Upper bound on single rewrite steps in one normalization.
pub const MAX_REWRITE_STEPS: usize = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("cannot combine elements of different algebras")]
    MixedAlgebras,
    #[error("rewriting exceeded {0} steps")]
    StepLimit(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    /// Generators `κ1 < κ2 < κ3`, structure constants `a1, a2, c1, c2, d, e1, e2`.
    Racah,
    /// Generators `X < Y < Z`, structure constants `ωX, ωY, ωZ`.
    BannaiIto,
}

impl AlgebraKind {
    pub fn generator_names(self) -> [&'static str; 3] {
        match self {
            AlgebraKind::Racah => ["κ1", "κ2", "κ3"],
            AlgebraKind::BannaiIto => ["X", "Y", "Z"],
        }
    }

    fn ascii_names(self) -> [&'static str; 3] {
        match self {
            AlgebraKind::Racah => ["k1", "k2", "k3"],
            AlgebraKind::BannaiIto => ["x", "y", "z"],
        }
    }

    pub fn parse_generator(self, name: &str) -> Result<u8, PbwError> {
        let name = name.trim();
        self.generator_names()
            .iter()
            .position(|g| *g == name)
            .or_else(|| {
                self.ascii_names()
                    .iter()
                    .position(|g| g.eq_ignore_ascii_case(name))
            })
            .map(|i| i as u8)
            .ok_or_else(|| PbwError::UnknownGenerator(name.to_string()))
    }
}

type Word = Vec<u8>;

/// Replacement rules for the out-of-order pairs `(j, i)` with `j > i`.
///
/// Every right-hand side is already in normal form, so one application
/// either swaps the pair (one inversion fewer) or drops the degree.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    kind: AlgebraKind,
    // indexed by [hi][lo]
    rules: [[Vec<(Word, ParamPoly)>; 3]; 3],
}

fn p(s: Symbol) -> ParamPoly {
    ParamPoly::var(s)
}

impl RewriteSystem {
    pub fn new(kind: AlgebraKind) -> Self {
        let mut rules: [[Vec<(Word, ParamPoly)>; 3]; 3] = Default::default();
        let one = ParamPoly::one;
        match kind {
            AlgebraKind::BannaiIto => {
                // {X,Y} = Z + ωZ, {Z,X} = Y + ωY, {Y,Z} = X + ωX
                rules[1][0] = vec![(vec![0, 1], -one()), (vec![2], one()), (vec![], p(Symbol::OMEGA_Z))];
                rules[2][0] = vec![(vec![0, 2], -one()), (vec![1], one()), (vec![], p(Symbol::OMEGA_Y))];
                rules[2][1] = vec![(vec![1, 2], -one()), (vec![0], one()), (vec![], p(Symbol::OMEGA_X))];
            }
            AlgebraKind::Racah => {
                let (a1, a2) = (p(Symbol::A1), p(Symbol::A2));
                // [κ1,κ2] = κ3
                rules[1][0] = vec![(vec![0, 1], one()), (vec![2], -one())];
                // κ3κ1 = κ1κ3 + a1κ1² + a2(2κ1κ2 - κ3) + c2κ2 + dκ1 + e2
                rules[2][0] = vec![
                    (vec![0, 2], one()),
                    (vec![0, 0], a1.clone()),
                    (vec![0, 1], a2.scale(&Scalar::from_int(2))),
                    (vec![2], -&a2),
                    (vec![1], p(Symbol::C2)),
                    (vec![0], p(Symbol::D)),
                    (vec![], p(Symbol::E2)),
                ];
                // κ3κ2 = κ2κ3 - (a2κ2² + a1(2κ1κ2 - κ3) + c1κ1 + dκ2 + e1)
                rules[2][1] = vec![
                    (vec![1, 2], one()),
                    (vec![1, 1], -&a2),
                    (vec![0, 1], a1.scale(&Scalar::from_int(-2))),
                    (vec![2], a1.clone()),
                    (vec![0], -p(Symbol::C1)),
                    (vec![1], -p(Symbol::D)),
                    (vec![], -p(Symbol::E1)),
                ];
            }
        }
        RewriteSystem { kind, rules }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Rewrite a linear combination of words to normal form; returns the
    /// number of single-pair rewrites performed.
    fn normalize(
        &self,
        mut pending: BTreeMap<Word, ParamPoly>,
    ) -> Result<(BTreeMap<Word, ParamPoly>, usize), PbwError> {
        let mut done: BTreeMap<Word, ParamPoly> = BTreeMap::new();
        let mut steps = 0usize;
        while !pending.is_empty() {
            let mut next: BTreeMap<Word, ParamPoly> = BTreeMap::new();
            for (word, coeff) in pending {
                if coeff.is_zero() {
                    continue;
                }
                let Some(pos) = word.windows(2).position(|w| w[0] > w[1]) else {
                    accumulate(&mut done, word, &coeff);
                    continue;
                };
                steps += 1;
                if steps > MAX_REWRITE_STEPS {
                    return Err(PbwError::StepLimit(MAX_REWRITE_STEPS));
                }
                let (hi, lo) = (word[pos] as usize, word[pos + 1] as usize);
                for (rhs, c) in &self.rules[hi][lo] {
                    let mut w = Vec::with_capacity(word.len());
                    w.extend_from_slice(&word[..pos]);
                    w.extend_from_slice(rhs);
                    w.extend_from_slice(&word[pos + 2..]);
                    accumulate(&mut next, w, &(&coeff * c));
                }
            }
            pending = next;
        }
        done.retain(|_, c| !c.is_zero());
        Ok((done, steps))
    }
}

fn accumulate(map: &mut BTreeMap<Word, ParamPoly>, w: Word, c: &ParamPoly) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(w).or_default();
    e.add_assign_ref(c);
}

/// Exponents `(a, b, c)` of an ordered monomial `g0^a g1^b g2^c`.
pub type PbwMonomial = [u16; 3];

fn monomial_to_word(m: &PbwMonomial) -> Word {
    let mut w = Vec::with_capacity((m[0] + m[1] + m[2]) as usize);
    for (g, e) in m.iter().enumerate() {
        w.extend(std::iter::repeat_n(g as u8, *e as usize));
    }
    w
}

fn word_to_monomial(w: &[u8]) -> PbwMonomial {
    let mut m = [0u16; 3];
    for g in w {
        m[*g as usize] += 1;
    }
    m
}

/// An element of the abstract Racah or Bannai-Ito algebra in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct PbwElement {
    kind: AlgebraKind,
    terms: BTreeMap<PbwMonomial, ParamPoly>,
}

impl PbwElement {
    pub fn zero(kind: AlgebraKind) -> Self {
        PbwElement {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(kind: AlgebraKind, c: ParamPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0, 0, 0], c);
        }
        PbwElement { kind, terms }
    }

    pub fn one(kind: AlgebraKind) -> Self {
        PbwElement::scalar(kind, ParamPoly::one())
    }

    pub fn generator(kind: AlgebraKind, g: u8) -> Self {
        assert!(g < 3, "generator index out of range");
        let mut m = [0u16; 3];
        m[g as usize] = 1;
        PbwElement {
            kind,
            terms: BTreeMap::from([(m, ParamPoly::one())]),
        }
    }

    /// The three generators in order.
    pub fn generators(kind: AlgebraKind) -> [PbwElement; 3] {
        [0, 1, 2].map(|g| PbwElement::generator(kind, g))
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: PbwMonomial) -> ParamPoly {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> u16 {
        self.terms.keys().map(|m| m[0] + m[1] + m[2]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        let mut out = PbwElement::zero(self.kind);
        for (m, v) in &self.terms {
            let v = v * c;
            if !v.is_zero() {
                out.terms.insert(*m, v);
            }
        }
        out
    }

    pub fn scale_scalar(&self, c: Scalar) -> Self {
        self.scale(&ParamPoly::constant(c))
    }

    fn check_kind(&self, other: &PbwElement) -> Result<(), PbwError> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(PbwError::MixedAlgebras)
        }
    }

    pub fn try_add(&self, other: &PbwElement) -> Result<PbwElement, PbwError> {
        self.check_kind(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.terms.entry(*m).or_default().add_assign_ref(c);
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Normal form of the product `self * other`.
    pub fn try_mul(&self, other: &PbwElement) -> Result<PbwElement, PbwError> {
        self.check_kind(other)?;
        let mut words = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut w = monomial_to_word(m1);
                w.extend(monomial_to_word(m2));
                accumulate(&mut words, w, &(c1 * c2));
            }
        }
        let (done, _) = RewriteSystem::new(self.kind).normalize(words)?;
        Ok(PbwElement::from_words(self.kind, done))
    }

    fn from_words(kind: AlgebraKind, words: BTreeMap<Word, ParamPoly>) -> Self {
        let terms = words
            .into_iter()
            .map(|(w, c)| (word_to_monomial(&w), c))
            .collect();
        PbwElement { kind, terms }
    }

    pub fn pow(&self, n: u32) -> PbwElement {
        let mut acc = PbwElement::one(self.kind);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

/// Commutator or anticommutator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

/// Normal form of `xy - yx` or `xy + yx`.
pub fn bracket(x: &PbwElement, y: &PbwElement, kind: BracketKind) -> Result<PbwElement, PbwError> {
    let xy = x.try_mul(y)?;
    let yx = y.try_mul(x)?;
    match kind {
        BracketKind::Commutator => Ok(&xy - &yx),
        BracketKind::Anticommutator => Ok(&xy + &yx),
    }
}

pub fn commutator(x: &PbwElement, y: &PbwElement) -> PbwElement {
    bracket(x, y, BracketKind::Commutator).expect("same algebra")
}

pub fn anticommutator(x: &PbwElement, y: &PbwElement) -> PbwElement {
    bracket(x, y, BracketKind::Anticommutator).expect("same algebra")
}

/// Parse a word such as `"Y*X"`, `"κ2 κ1"` or `"k3*k1*k1"`.
pub fn parse_word(kind: AlgebraKind, word: &str) -> Result<Vec<u8>, PbwError> {
    word.split(|c: char| c == '*' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| kind.parse_generator(t))
        .collect()
}

/// Normal form of `coeff * g_{w0} g_{w1} ...`, plus the number of rewrite steps.
pub fn pbw_normal_form_with_steps(
    kind: AlgebraKind,
    word: &[u8],
    coeff: ParamPoly,
) -> Result<(PbwElement, usize), PbwError> {
    if let Some(g) = word.iter().find(|g| **g > 2) {
        return Err(PbwError::UnknownGenerator(format!("#{g}")));
    }
    let (done, steps) =
        RewriteSystem::new(kind).normalize(BTreeMap::from([(word.to_vec(), coeff)]))?;
    Ok((PbwElement::from_words(kind, done), steps))
}

pub fn pbw_normal_form(kind: AlgebraKind, word: &[u8], coeff: ParamPoly) -> Result<PbwElement, PbwError> {
    pbw_normal_form_with_steps(kind, word, coeff).map(|(e, _)| e)
}

/// Outcome of a centrality test: the nonzero commutators `[x, g]`.
#[derive(Debug, Clone)]
pub struct CentralityReport {
    pub witnesses: Vec<(u8, PbwElement)>,
}

impl CentralityReport {
    pub fn is_central(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// `[x, g]` for every generator `g`; central iff all vanish.
pub fn is_central(x: &PbwElement) -> CentralityReport {
    let witnesses = PbwElement::generators(x.kind)
        .iter()
        .enumerate()
        .map(|(i, g)| (i as u8, commutator(x, g)))
        .filter(|(_, r)| !r.is_zero())
        .collect();
    CentralityReport { witnesses }
}

/// Result of comparing two elements: the normal form of `lhs - rhs`.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub residual: PbwElement,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn verify_identity(lhs: &PbwElement, rhs: &PbwElement) -> Result<IdentityCheck, PbwError> {
    lhs.check_kind(rhs)?;
    Ok(IdentityCheck {
        residual: lhs - rhs,
    })
}

/// The Casimir `T` of the Racah algebra with symbolic structure constants.
pub fn racah_casimir() -> PbwElement {
    let k = AlgebraKind::Racah;
    let [k1, k2, k3] = PbwElement::generators(k);
    let c = |s: Symbol| ParamPoly::var(s);
    let (a1, a2, c1, c2, d, e1, e2) = (
        c(Symbol::A1),
        c(Symbol::A2),
        c(Symbol::C1),
        c(Symbol::C2),
        c(Symbol::D),
        c(Symbol::E1),
        c(Symbol::E2),
    );
    let two = Scalar::from_int(2);
    let k1sq = &k1 * &k1;
    let k2sq = &k2 * &k2;
    let terms = [
        anticommutator(&k1sq, &k2).scale(&a1),
        anticommutator(&k1, &k2sq).scale(&a2),
        k1sq.scale(&(&(&a1 * &a1) + &c1)),
        k2sq.scale(&(&(&a2 * &a2) + &c2)),
        &k3 * &k3,
        anticommutator(&k1, &k2).scale(&(&d + &(&a1 * &a2))),
        k1.scale(&(&e1.scale(&two) + &(&d * &a1))),
        k2.scale(&(&e2.scale(&two) + &(&d * &a2))),
    ];
    terms
        .iter()
        .fold(PbwElement::zero(k), |acc, t| &acc + t)
}

/// The Casimir `U = X² + Y² + Z²` of the Bannai-Ito algebra.
pub fn bannai_ito_casimir() -> PbwElement {
    let [x, y, z] = PbwElement::generators(AlgebraKind::BannaiIto);
    &(&(&x * &x) + &(&y * &y)) + &(&z * &z)
}

/// The quadratic combinations of Bannai-Ito generators that close into an
/// equitable Racah algebra, together with the central element `I` and `Δ`.
#[derive(Debug, Clone)]
pub struct EquitableEmbedding {
    pub a: PbwElement,
    pub b: PbwElement,
    pub c: PbwElement,
    pub i: PbwElement,
    pub delta: PbwElement,
}

/// `(G² - G - 3/4) / 4`.
pub fn quadratic_combination(g: &PbwElement) -> PbwElement {
    let kind = g.kind();
    (&(&(g * g) - g) - &PbwElement::scalar(kind, ParamPoly::ratio(3, 4))).scale_scalar(Scalar::ratio(1, 4))
}

/// `A, B, C` from `X, Y, Z`, `I = X + Y + Z - 3/2` and `Δ = [A, B] / 2`.
pub fn build_equitable_embedding() -> EquitableEmbedding {
    let kind = AlgebraKind::BannaiIto;
    let [x, y, z] = PbwElement::generators(kind);
    let a = quadratic_combination(&x);
    let b = quadratic_combination(&y);
    let c = quadratic_combination(&z);
    let i = &(&(&x + &y) + &z) - &PbwElement::scalar(kind, ParamPoly::ratio(3, 2));
    let delta = commutator(&a, &b).scale_scalar(Scalar::ratio(1, 2));
    EquitableEmbedding { a, b, c, i, delta }
}

/// Right-hand side constant of the `[A, Δ]` family:
/// `(1/16) * ((ω_p - ω_q)/2) * ((ω_p + ω_q)/2 - I)`.
pub fn equitable_inhomogeneity(omega_p: &ParamPoly, omega_q: &ParamPoly, i: &PbwElement) -> PbwElement {
    let half = Scalar::ratio(1, 2);
    let diff = (omega_p - omega_q).scale(&half);
    let sum = (omega_p + omega_q).scale(&half);
    let inner = &PbwElement::scalar(i.kind(), sum) - i;
    inner.scale(&diff.scale(&Scalar::ratio(1, 16)))
}

impl<'a> Add<&'a PbwElement> for &'a PbwElement {
    type Output = PbwElement;
    fn add(self, rhs: &PbwElement) -> PbwElement {
        self.try_add(rhs).expect("same algebra")
    }
}

impl<'a> Sub<&'a PbwElement> for &'a PbwElement {
    type Output = PbwElement;
    fn sub(self, rhs: &PbwElement) -> PbwElement {
        self.try_add(&-rhs).expect("same algebra")
    }
}

impl<'a> Mul<&'a PbwElement> for &'a PbwElement {
    type Output = PbwElement;
    /// Panics on mixed algebras; see [`PbwElement::try_mul`].
    fn mul(self, rhs: &PbwElement) -> PbwElement {
        self.try_mul(rhs).expect("same algebra")
    }
}

impl Neg for &PbwElement {
    type Output = PbwElement;
    fn neg(self) -> PbwElement {
        PbwElement {
            kind: self.kind,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = self.kind.generator_names();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(g, e)| {
                    if *e == 1 {
                        names[g].to_string()
                    } else {
                        format!("{}^{}", names[g], e)
                    }
                })
                .collect();
            let coeff = if c.len() > 1 { format!("({c})") } else { c.to_string() };
            if mono.is_empty() {
                write!(f, "{coeff}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BI: AlgebraKind = AlgebraKind::BannaiIto;
    const RA: AlgebraKind = AlgebraKind::Racah;

    fn om(s: Symbol) -> PbwElement {
        PbwElement::scalar(BI, ParamPoly::var(s))
    }

    #[test]
    fn bi_yx_rewrites() {
        let [x, y, z] = PbwElement::generators(BI);
        let nf = pbw_normal_form(BI, &parse_word(BI, "Y*X").unwrap(), ParamPoly::one()).unwrap();
        let expected = &(&z - &(&x * &y)) + &om(Symbol::OMEGA_Z);
        assert_eq!(nf, expected);
        let xx = pbw_normal_form(BI, &[0, 0], ParamPoly::one()).unwrap();
        assert_eq!(xx.coeff([2, 0, 0]), ParamPoly::one());
        assert_eq!(xx.terms().count(), 1);
    }

    #[test]
    fn racah_k2k1_rewrites() {
        let [k1, k2, k3] = PbwElement::generators(RA);
        let nf = pbw_normal_form(RA, &parse_word(RA, "κ2 κ1").unwrap(), ParamPoly::one()).unwrap();
        assert_eq!(nf, &(&k1 * &k2) - &k3);
    }

    #[test]
    fn unknown_generator_is_rejected() {
        assert!(matches!(parse_word(BI, "X*W"), Err(PbwError::UnknownGenerator(_))));
        assert!(matches!(
            pbw_normal_form(BI, &[0, 3], ParamPoly::one()),
            Err(PbwError::UnknownGenerator(_))
        ));
    }

    #[test]
    fn brackets_match_relations() {
        let [x, y, z] = PbwElement::generators(BI);
        assert!(commutator(&x, &x).is_zero());
        assert_eq!(anticommutator(&y, &z), &x + &om(Symbol::OMEGA_X));
        assert_eq!(anticommutator(&z, &x), &y + &om(Symbol::OMEGA_Y));

        let [k1, k2, _] = PbwElement::generators(RA);
        let k3 = commutator(&k1, &k2);
        let c = |s| PbwElement::scalar(RA, ParamPoly::var(s));
        let rhs = [
            (&k1 * &k1).scale(&ParamPoly::var(Symbol::A1)),
            anticommutator(&k1, &k2).scale(&ParamPoly::var(Symbol::A2)),
            k2.scale(&ParamPoly::var(Symbol::C2)),
            k1.scale(&ParamPoly::var(Symbol::D)),
            c(Symbol::E2),
        ]
        .iter()
        .fold(PbwElement::zero(RA), |acc, t| &acc + t);
        assert_eq!(commutator(&k3, &k1), rhs);
    }

    #[test]
    fn mixed_algebras_error() {
        let x = PbwElement::generator(BI, 0);
        let k = PbwElement::generator(RA, 0);
        assert_eq!(
            bracket(&x, &k, BracketKind::Commutator).unwrap_err(),
            PbwError::MixedAlgebras
        );
    }

    #[test]
    fn x_is_not_central() {
        let x = PbwElement::generator(BI, 0);
        let report = is_central(&x);
        assert!(!report.is_central());
        // [X, Y] = 2XY - Z - ωZ, the witness for generator Y
        let [xg, y, z] = PbwElement::generators(BI);
        let expected = &(&(&xg * &y).scale_scalar(Scalar::from_int(2)) - &z) - &om(Symbol::OMEGA_Z);
        let w = report.witnesses.iter().find(|(g, _)| *g == 1).unwrap();
        assert_eq!(w.1, expected);
    }

    #[test]
    fn casimirs_are_central() {
        assert!(is_central(&bannai_ito_casimir()).is_central());
        assert!(is_central(&racah_casimir()).is_central());
    }

    #[test]
    fn combination_a_coefficients() {
        let e = build_equitable_embedding();
        assert_eq!(e.a.coeff([2, 0, 0]), ParamPoly::ratio(1, 4));
        assert_eq!(e.a.coeff([1, 0, 0]), ParamPoly::ratio(-1, 4));
        assert_eq!(e.a.coeff([0, 0, 0]), ParamPoly::ratio(-3, 16));
        assert_eq!(e.a.terms().count(), 3);
    }

    #[test]
    fn sum_of_combinations_matches_casimir() {
        let e = build_equitable_embedding();
        let lhs = &(&e.a + &e.b) + &e.c;
        let u = bannai_ito_casimir();
        let rhs = (&(&u - &e.i) - &PbwElement::scalar(BI, ParamPoly::ratio(15, 4)))
            .scale_scalar(Scalar::ratio(1, 4));
        assert!(verify_identity(&lhs, &rhs).unwrap().passed());
    }

    #[test]
    fn equitable_relations_hold_abstractly() {
        let e = build_equitable_embedding();
        let two_delta = e.delta.scale_scalar(Scalar::from_int(2));
        assert_eq!(commutator(&e.b, &e.c), two_delta);
        assert_eq!(commutator(&e.c, &e.a), two_delta);
        let (wx, wy, wz) = (
            ParamPoly::var(Symbol::OMEGA_X),
            ParamPoly::var(Symbol::OMEGA_Y),
            ParamPoly::var(Symbol::OMEGA_Z),
        );
        let lhs = commutator(&e.a, &e.delta);
        let rhs = &(&(&e.b * &e.a) - &(&e.a * &e.c)) + &equitable_inhomogeneity(&wy, &wz, &e.i);
        let check = verify_identity(&lhs, &rhs).unwrap();
        assert!(check.passed(), "residual {}", check.residual);
        let lhs = commutator(&e.b, &e.delta);
        let rhs = &(&(&e.c * &e.b) - &(&e.b * &e.a)) + &equitable_inhomogeneity(&wz, &wx, &e.i);
        let check = verify_identity(&lhs, &rhs).unwrap();
        assert!(check.passed(), "residual {}", check.residual);
        assert!(commutator(&e.a, &e.i).is_zero());
    }
}
