use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::kernel::{common_denominator, solve_polynomial_system, ParamPoly, RatFunc, Scalar, Symbol};

use super::ShiftError;

/// `(k, ε)` for the term `T^k R^ε`.
pub type ShiftKey = (i32, bool);

/// A finite sum of terms `c(v) T^k R^ε` acting on functions of one variable `v`,
/// where `T^k f(v) = f(v + k)` and `R f(v) = f(-v)`.
#[derive(Clone, PartialEq, Eq)]
pub struct ShiftOperator {
    var: Symbol,
    terms: BTreeMap<ShiftKey, RatFunc>,
}

impl ShiftOperator {
    pub fn zero(var: Symbol) -> Self {
        ShiftOperator {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(var: Symbol, key: ShiftKey, c: RatFunc) -> Self {
        let mut op = ShiftOperator::zero(var);
        if !c.is_zero() {
            op.terms.insert(key, c);
        }
        op
    }

    pub fn identity(var: Symbol) -> Self {
        ShiftOperator::term(var, (0, false), RatFunc::one())
    }

    pub fn shift(var: Symbol, k: i32) -> Self {
        ShiftOperator::term(var, (k, false), RatFunc::one())
    }

    pub fn reflection(var: Symbol) -> Self {
        ShiftOperator::term(var, (0, true), RatFunc::one())
    }

    /// Multiplication by a function of the variable (and parameters).
    pub fn multiplication(var: Symbol, c: RatFunc) -> Self {
        ShiftOperator::term(var, (0, false), c)
    }

    pub fn var(&self) -> Symbol {
        self.var
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ShiftKey, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: ShiftKey) -> RatFunc {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant `c` if the operator is `c * I` with `c` free of the variable.
    pub fn scalar_value(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => {
                let c = self.terms.get(&(0, false))?;
                (!c.contains(self.var)).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = ShiftOperator::zero(self.var);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.insert_add(*k, v * c);
        }
        out
    }

    pub fn scale_scalar(&self, c: Scalar) -> Self {
        self.scale(&RatFunc::constant(c))
    }

    fn insert_add(&mut self, key: ShiftKey, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_var(&self, other: &ShiftOperator) -> Result<(), ShiftError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(ShiftError::VariableMismatch(self.var, other.var))
        }
    }

    pub fn try_add(&self, other: &ShiftOperator) -> Result<ShiftOperator, ShiftError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, c.clone());
        }
        Ok(out)
    }

    /// `c(v)` evaluated at `(-1)^e (v + a)`.
    fn transported(&self, c: &RatFunc, a: i32, e: bool) -> RatFunc {
        if a == 0 && !e {
            return c.clone();
        }
        let v = ParamPoly::var(self.var);
        let moved = &v + &ParamPoly::int(a as i64);
        let arg = if e { -moved } else { moved };
        c.substitute_affine(self.var, &arg)
    }

    /// Composition `self ∘ other`, bilinear in the single-term rule
    /// `(c T^a R^e)(d T^b R^f) = c(v) d((-1)^e (v+a)) T^{a + (-1)^e b} R^{e xor f}`.
    pub fn try_compose(&self, other: &ShiftOperator) -> Result<ShiftOperator, ShiftError> {
        self.check_var(other)?;
        let mut out = ShiftOperator::zero(self.var);
        for (&(a, e), c) in &self.terms {
            for (&(b, f), d) in &other.terms {
                let moved = self.transported(d, a, e);
                let shift = if e { a - b } else { a + b };
                out.insert_add((shift, e ^ f), c * &moved);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> ShiftOperator {
        let mut acc = ShiftOperator::identity(self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Apply to a polynomial in the variable. The sum is reduced exactly and
    /// must come out polynomial.
    pub fn apply_to_polynomial(&self, p: &ParamPoly) -> Result<ParamPoly, ShiftError> {
        let mut acc = RatFunc::zero();
        for (&(k, e), c) in &self.terms {
            let moved = self.transported(&RatFunc::from_poly(p.clone()), k, e);
            acc = &acc + &(c * &moved);
        }
        acc.as_poly()
            .cloned()
            .ok_or(ShiftError::NotPolynomialPreserving)
    }

    /// Substitute scalar values for parameters in every coefficient.
    pub fn evaluate(&self, values: &[(Symbol, Scalar)]) -> Result<ShiftOperator, ShiftError> {
        let mut out = ShiftOperator::zero(self.var);
        for (k, c) in &self.terms {
            out.insert_add(*k, c.evaluate(values)?);
        }
        Ok(out)
    }
}

pub fn commutator(a: &ShiftOperator, b: &ShiftOperator) -> ShiftOperator {
    &(a * b) - &(b * a)
}

pub fn anticommutator(a: &ShiftOperator, b: &ShiftOperator) -> ShiftOperator {
    &(a * b) + &(b * a)
}

/// Result of comparing two operators: `lhs - rhs`.
#[derive(Debug, Clone)]
pub struct OperatorCheck {
    pub residual: ShiftOperator,
}

impl OperatorCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn verify_operator_identity(
    lhs: &ShiftOperator,
    rhs: &ShiftOperator,
) -> Result<OperatorCheck, ShiftError> {
    lhs.check_var(rhs)?;
    Ok(OperatorCheck {
        residual: lhs - rhs,
    })
}

/// Express `target` as `Σ c_j basis_j` with coefficients `c_j` free of the
/// variable, by matching the coefficient of every power of the variable in
/// every `(k, ε)` slot after clearing denominators.
pub fn fit_combination(
    target: &ShiftOperator,
    basis: &[ShiftOperator],
) -> Result<Vec<RatFunc>, ShiftError> {
    let var = target.var;
    for b in basis {
        target.check_var(b)?;
    }
    let mut keys: Vec<ShiftKey> = target.terms.keys().copied().collect();
    for b in basis {
        keys.extend(b.terms.keys().copied());
    }
    keys.sort();
    keys.dedup();

    let mut rows: Vec<Vec<ParamPoly>> = Vec::new();
    let mut rhs: Vec<ParamPoly> = Vec::new();
    for key in keys {
        let t = target.coeff(key);
        let fs: Vec<RatFunc> = basis.iter().map(|b| b.coeff(key)).collect();
        let den = common_denominator(fs.iter().chain(std::iter::once(&t)));
        let clear = |f: &RatFunc| -> Vec<ParamPoly> {
            let scaled = f.num() * &den.div_exact(f.den()).expect("lcm is a multiple");
            scaled.coeffs_in(var)
        };
        let t_coeffs = clear(&t);
        let f_coeffs: Vec<Vec<ParamPoly>> = fs.iter().map(clear).collect();
        let degree = f_coeffs
            .iter()
            .map(Vec::len)
            .chain(std::iter::once(t_coeffs.len()))
            .max()
            .unwrap_or(0);
        for n in 0..degree {
            let row: Vec<ParamPoly> = f_coeffs
                .iter()
                .map(|c| c.get(n).cloned().unwrap_or_default())
                .collect();
            let r = t_coeffs.get(n).cloned().unwrap_or_default();
            if row.iter().all(ParamPoly::is_zero) {
                if !r.is_zero() {
                    return Err(ShiftError::Inconsistent);
                }
                continue;
            }
            rows.push(row);
            rhs.push(r);
        }
    }
    if basis.is_empty() {
        return if target.is_zero() {
            Ok(Vec::new())
        } else {
            Err(ShiftError::Inconsistent)
        };
    }
    if rows.is_empty() {
        return Err(ShiftError::Singular);
    }
    let sol = solve_polynomial_system(&rows, &rhs).map_err(|e| match e {
        crate::kernel::KernelError::Inconsistent => ShiftError::Inconsistent,
        crate::kernel::KernelError::Singular => ShiftError::Singular,
        other => ShiftError::Kernel(other),
    })?;
    // The elimination checked every equation; confirm against the operators too.
    let recon = basis
        .iter()
        .zip(&sol)
        .fold(ShiftOperator::zero(var), |acc, (b, c)| &acc + &b.scale(c));
    if recon != *target {
        return Err(ShiftError::Inconsistent);
    }
    Ok(sol)
}

impl<'a> Add<&'a ShiftOperator> for &'a ShiftOperator {
    type Output = ShiftOperator;
    fn add(self, rhs: &ShiftOperator) -> ShiftOperator {
        self.try_add(rhs).expect("same variable")
    }
}

impl<'a> Sub<&'a ShiftOperator> for &'a ShiftOperator {
    type Output = ShiftOperator;
    fn sub(self, rhs: &ShiftOperator) -> ShiftOperator {
        self.try_add(&-rhs).expect("same variable")
    }
}

impl<'a> Mul<&'a ShiftOperator> for &'a ShiftOperator {
    type Output = ShiftOperator;
    /// Composition; panics on mismatched variables (see [`ShiftOperator::try_compose`]).
    fn mul(self, rhs: &ShiftOperator) -> ShiftOperator {
        self.try_compose(rhs).expect("same variable")
    }
}

impl Neg for &ShiftOperator {
    type Output = ShiftOperator;
    fn neg(self) -> ShiftOperator {
        ShiftOperator {
            var: self.var,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl fmt::Display for ShiftOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&(k, e), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]")?;
            match k {
                0 => {}
                1 => f.write_str("*T")?,
                _ => write!(f, "*T^{k}")?,
            }
            if e {
                f.write_str("*R")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ShiftOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
