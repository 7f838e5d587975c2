//! The standard realizations of the Racah and Bannai-Ito algebras by
//! shift/reflection operators acting on polynomials.

use std::collections::BTreeMap;

use crate::kernel::{ParamPoly, RatFunc, Scalar, Symbol};

use super::operator::{anticommutator, commutator, fit_combination, ShiftOperator};
use super::ShiftError;

/// Parameter values, each either a symbol or a rational number.
pub type ParamOverrides = BTreeMap<Symbol, Scalar>;

fn param(s: Symbol, overrides: &ParamOverrides) -> ParamPoly {
    overrides
        .get(&s)
        .map(|v| ParamPoly::constant(v.clone()))
        .unwrap_or_else(|| ParamPoly::var(s))
}

fn lin(var: Symbol, scale: i64, rest: ParamPoly) -> ParamPoly {
    &ParamPoly::var(var).scale(&Scalar::from_int(scale)) + &rest
}

fn prod(factors: &[ParamPoly]) -> ParamPoly {
    factors.iter().fold(ParamPoly::one(), |acc, f| &acc * f)
}

/// `(α, β, γ, δ)` for the Racah difference operator.
#[derive(Debug, Clone, PartialEq)]
pub struct RacahParams {
    pub alpha: ParamPoly,
    pub beta: ParamPoly,
    pub gamma: ParamPoly,
    pub delta: ParamPoly,
}

impl RacahParams {
    pub fn symbolic() -> Self {
        RacahParams::with_overrides(&ParamOverrides::new())
    }

    pub fn with_overrides(o: &ParamOverrides) -> Self {
        RacahParams {
            alpha: param(Symbol::ALPHA, o),
            beta: param(Symbol::BETA, o),
            gamma: param(Symbol::GAMMA, o),
            delta: param(Symbol::DELTA, o),
        }
    }

    pub fn numeric(alpha: Scalar, beta: Scalar, gamma: Scalar, delta: Scalar) -> Self {
        let o = ParamOverrides::from([
            (Symbol::ALPHA, alpha),
            (Symbol::BETA, beta),
            (Symbol::GAMMA, gamma),
            (Symbol::DELTA, delta),
        ]);
        RacahParams::with_overrides(&o)
    }

    /// `λ(x) = x (x + γ + δ + 1)`.
    pub fn lambda(&self) -> ParamPoly {
        let x = ParamPoly::var(Symbol::X);
        &x * &(&x + &(&(&self.gamma + &self.delta) + &ParamPoly::one()))
    }

    /// The involution `x -> -x - γ - δ - 1` that fixes `λ(x)`.
    pub fn lambda_reflection(&self) -> ParamPoly {
        let x = ParamPoly::var(Symbol::X);
        &(&(-x) - &self.gamma) - &(&self.delta + &ParamPoly::one())
    }
}

/// `(ρ1, ρ2, r1, r2)` for the Bannai-Ito operator.
#[derive(Debug, Clone, PartialEq)]
pub struct BiParams {
    pub rho1: ParamPoly,
    pub rho2: ParamPoly,
    pub r1: ParamPoly,
    pub r2: ParamPoly,
}

impl BiParams {
    pub fn symbolic() -> Self {
        BiParams::with_overrides(&ParamOverrides::new())
    }

    pub fn with_overrides(o: &ParamOverrides) -> Self {
        BiParams {
            rho1: param(Symbol::RHO1, o),
            rho2: param(Symbol::RHO2, o),
            r1: param(Symbol::R1, o),
            r2: param(Symbol::R2, o),
        }
    }

    pub fn numeric(rho1: Scalar, rho2: Scalar, r1: Scalar, r2: Scalar) -> Self {
        let o = ParamOverrides::from([
            (Symbol::RHO1, rho1),
            (Symbol::RHO2, rho2),
            (Symbol::R1, r1),
            (Symbol::R2, r2),
        ]);
        BiParams::with_overrides(&o)
    }

    /// `h = ρ1 + ρ2 - r1 - r2 + 1/2`.
    pub fn h(&self) -> ParamPoly {
        &(&(&self.rho1 + &self.rho2) - &(&self.r1 + &self.r2)) + &ParamPoly::ratio(1, 2)
    }

    /// `ωX = 4(ρ1ρ2 + r1r2)`, `ωY = 2(ρ1² + ρ2² - r1² - r2²)`, `ωZ = 4(ρ1ρ2 - r1r2)`.
    pub fn expected_omegas(&self) -> [ParamPoly; 3] {
        let four = Scalar::from_int(4);
        let two = Scalar::from_int(2);
        let rr = &self.rho1 * &self.rho2;
        let ss = &self.r1 * &self.r2;
        let sq = |p: &ParamPoly| p * p;
        [
            (&rr + &ss).scale(&four),
            (&(&sq(&self.rho1) + &sq(&self.rho2)) - &(&sq(&self.r1) + &sq(&self.r2))).scale(&two),
            (&rr - &ss).scale(&four),
        ]
    }

    /// `u = 2(ρ1² + ρ2² + r1² + r2²) - 1/4`.
    pub fn expected_casimir(&self) -> ParamPoly {
        let sq = |p: &ParamPoly| p * p;
        let s = &(&sq(&self.rho1) + &sq(&self.rho2)) + &(&sq(&self.r1) + &sq(&self.r2));
        &s.scale(&Scalar::from_int(2)) - &ParamPoly::ratio(1, 4)
    }
}

/// `κ1 = B T⁺ + D T⁻ - (B + D)`, `κ2 = λ(x)`.
#[derive(Debug, Clone)]
pub struct RacahRealization {
    pub params: RacahParams,
    pub b: RatFunc,
    pub d: RatFunc,
    pub k1: ShiftOperator,
    pub k2: ShiftOperator,
}

pub fn build_standard_racah(params: RacahParams) -> RacahRealization {
    let x = Symbol::X;
    let RacahParams {
        alpha,
        beta,
        gamma,
        delta,
    } = &params;
    let one = ParamPoly::one;
    let gd = gamma + delta;
    let b_num = prod(&[
        lin(x, 1, alpha + &one()),
        lin(x, 1, &(beta + delta) + &one()),
        lin(x, 1, gamma + &one()),
        lin(x, 1, &gd + &one()),
    ]);
    let b_den = [lin(x, 2, &gd + &one()), lin(x, 2, &gd + &ParamPoly::int(2))];
    let d_num = prod(&[
        ParamPoly::var(x),
        lin(x, 1, &gd - alpha),
        lin(x, 1, gamma - beta),
        lin(x, 1, delta.clone()),
    ]);
    let d_den = [lin(x, 2, gd.clone()), lin(x, 2, &gd + &one())];
    let b = RatFunc::from_linear_factors(b_num, &b_den).expect("nonzero denominator");
    let d = RatFunc::from_linear_factors(d_num, &d_den).expect("nonzero denominator");
    let k1 = &(&ShiftOperator::term(x, (1, false), b.clone())
        + &ShiftOperator::term(x, (-1, false), d.clone()))
        - &ShiftOperator::multiplication(x, &b + &d);
    let k2 = ShiftOperator::multiplication(x, RatFunc::from_poly(params.lambda()));
    RacahRealization { params, b, d, k1, k2 }
}

/// `X = F T⁺R + G R - (F + G - h)`, `Y = 2z + 1/2`.
#[derive(Debug, Clone)]
pub struct BiRealization {
    pub params: BiParams,
    pub f: RatFunc,
    pub g: RatFunc,
    pub h: ParamPoly,
    pub x: ShiftOperator,
    pub y: ShiftOperator,
}

pub fn build_standard_bi(params: BiParams) -> BiRealization {
    let z = Symbol::Z;
    let half = ParamPoly::ratio(1, 2);
    let f_num = &lin(z, 1, &half - &params.r1) * &lin(z, 1, &half - &params.r2);
    let f = RatFunc::normalize(f_num, lin(z, 1, half.clone())).expect("nonzero denominator");
    let g_num = &lin(z, 1, -&params.rho1) * &lin(z, 1, -&params.rho2);
    let g = RatFunc::normalize(g_num, -ParamPoly::var(z)).expect("nonzero denominator");
    let h = params.h();
    let x = &(&ShiftOperator::term(z, (1, true), f.clone()) + &ShiftOperator::term(z, (0, true), g.clone()))
        - &ShiftOperator::multiplication(z, &(&f + &g) - &RatFunc::from_poly(h.clone()));
    let y = ShiftOperator::multiplication(z, RatFunc::from_poly(lin(z, 2, half)));
    BiRealization {
        params,
        f,
        g,
        h,
        x,
        y,
    }
}

/// Fitted Racah structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct RacahConstants {
    pub a1: RatFunc,
    pub a2: RatFunc,
    pub c1: RatFunc,
    pub c2: RatFunc,
    pub d: RatFunc,
    pub e1: RatFunc,
    pub e2: RatFunc,
}

impl RacahConstants {
    pub fn named(&self) -> [(&'static str, &RatFunc); 7] {
        [
            ("a1", &self.a1),
            ("a2", &self.a2),
            ("c1", &self.c1),
            ("c2", &self.c2),
            ("d", &self.d),
            ("e1", &self.e1),
            ("e2", &self.e2),
        ]
    }
}

/// Fitted Bannai-Ito structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct BiConstants {
    pub omega_x: RatFunc,
    pub omega_y: RatFunc,
    pub omega_z: RatFunc,
}

#[derive(Debug, Clone, PartialEq)]
pub enum StructureConstants {
    Racah(RacahConstants),
    BannaiIto(BiConstants),
}

/// The Racah fit together with the derived generator `κ3 = [κ1, κ2]`.
#[derive(Debug, Clone)]
pub struct RacahFit {
    pub constants: RacahConstants,
    pub k3: ShiftOperator,
}

/// Compute `κ3`, then solve `[κ2, κ3]` and `[κ3, κ1]` over the basis
/// `{κ2², {κ1,κ2}, κ1², κ1, κ2, 1}` and check that the two fits share
/// `a1, a2, d` and have the required zero slots.
pub fn fit_racah(r: &RacahRealization) -> Result<RacahFit, ShiftError> {
    let (k1, k2) = (&r.k1, &r.k2);
    let k3 = commutator(k1, k2);
    let basis = [
        k2 * k2,
        anticommutator(k1, k2),
        k1 * k1,
        k1.clone(),
        k2.clone(),
        ShiftOperator::identity(k1.var()),
    ];
    let s1 = fit_combination(&commutator(k2, &k3), &basis)?;
    let s2 = fit_combination(&commutator(&k3, k1), &basis)?;
    // s1 = [a2, a1, 0, c1, d, e1], s2 = [0, a2, a1, d, c2, e2]
    if !s1[2].is_zero() || !s2[0].is_zero() || s1[0] != s2[1] || s1[1] != s2[2] || s1[4] != s2[3] {
        return Err(ShiftError::Inconsistent);
    }
    let constants = RacahConstants {
        a1: s1[1].clone(),
        a2: s1[0].clone(),
        c1: s1[3].clone(),
        c2: s2[4].clone(),
        d: s1[4].clone(),
        e1: s1[5].clone(),
        e2: s2[5].clone(),
    };
    Ok(RacahFit { constants, k3 })
}

/// The Bannai-Ito fit together with `Z = {X, Y} - ωZ`.
#[derive(Debug, Clone)]
pub struct BiFit {
    pub constants: BiConstants,
    pub z: ShiftOperator,
}

/// With `W = {X, Y}`: `{Y, W} - X = 2ωZ Y + ωX` determines `ωZ, ωX`, and then
/// `{Z, X} - Y` must be the scalar `ωY`.
pub fn fit_bi(r: &BiRealization) -> Result<BiFit, ShiftError> {
    let (x, y) = (&r.x, &r.y);
    let id = ShiftOperator::identity(x.var());
    let w = anticommutator(x, y);
    let sol = fit_combination(&(&anticommutator(y, &w) - x), &[y.clone(), id.clone()])?;
    let omega_z = sol[0].scale(&Scalar::ratio(1, 2));
    let omega_x = sol[1].clone();
    let z = &w - &id.scale(&omega_z);
    let omega_y = (&anticommutator(&z, x) - y)
        .scalar_value()
        .ok_or(ShiftError::Inconsistent)?;
    Ok(BiFit {
        constants: BiConstants {
            omega_x,
            omega_y,
            omega_z,
        },
        z,
    })
}

/// Which standard realization to fit.
#[derive(Debug, Clone)]
pub enum Realization {
    Racah(RacahRealization),
    BannaiIto(BiRealization),
}

pub fn fit_structure_constants(r: &Realization) -> Result<StructureConstants, ShiftError> {
    match r {
        Realization::Racah(r) => fit_racah(r).map(|f| StructureConstants::Racah(f.constants)),
        Realization::BannaiIto(r) => fit_bi(r).map(|f| StructureConstants::BannaiIto(f.constants)),
    }
}

/// The Racah Casimir `T` assembled from the realization and fitted constants.
pub fn racah_casimir_operator(r: &RacahRealization, fit: &RacahFit) -> ShiftOperator {
    let (k1, k2, k3) = (&r.k1, &r.k2, &fit.k3);
    let c = &fit.constants;
    let two = Scalar::from_int(2);
    let k1sq = k1 * k1;
    let k2sq = k2 * k2;
    let terms = [
        anticommutator(&k1sq, k2).scale(&c.a1),
        anticommutator(k1, &k2sq).scale(&c.a2),
        k1sq.scale(&(&(&c.a1 * &c.a1) + &c.c1)),
        k2sq.scale(&(&(&c.a2 * &c.a2) + &c.c2)),
        k3 * k3,
        anticommutator(k1, k2).scale(&(&c.d + &(&c.a1 * &c.a2))),
        k1.scale(&(&c.e1.scale(&two) + &(&c.d * &c.a1))),
        k2.scale(&(&c.e2.scale(&two) + &(&c.d * &c.a2))),
    ];
    terms
        .iter()
        .fold(ShiftOperator::zero(k1.var()), |acc, t| &acc + t)
}

/// Substitute the realization into its Casimir and return the scalar it acts as.
pub fn casimir_scalar(r: &Realization) -> Result<RatFunc, ShiftError> {
    match r {
        Realization::Racah(r) => {
            let fit = fit_racah(r)?;
            racah_casimir_operator(r, &fit)
                .scalar_value()
                .ok_or(ShiftError::NotScalar)
        }
        Realization::BannaiIto(r) => {
            let fit = fit_bi(r)?;
            let u = &(&(&r.x * &r.x) + &(&r.y * &r.y)) + &(&fit.z * &fit.z);
            u.scalar_value().ok_or(ShiftError::NotScalar)
        }
    }
}

/// Quadratic combinations of the Bannai-Ito generators in the standard realization.
#[derive(Debug, Clone)]
pub struct QuadraticCombos {
    pub a: ShiftOperator,
    pub b: ShiftOperator,
    pub c: ShiftOperator,
    pub i: ShiftOperator,
    pub delta: ShiftOperator,
}

/// `(G² - G - 3/4) / 4`.
pub fn quadratic_combination(g: &ShiftOperator) -> ShiftOperator {
    let id = ShiftOperator::identity(g.var());
    (&(&(g * g) - g) - &id.scale_scalar(Scalar::ratio(3, 4))).scale_scalar(Scalar::ratio(1, 4))
}

pub fn build_quadratic_combos(r: &BiRealization, fit: &BiFit) -> QuadraticCombos {
    let id = ShiftOperator::identity(r.x.var());
    let a = quadratic_combination(&r.x);
    let b = quadratic_combination(&r.y);
    let c = quadratic_combination(&fit.z);
    let i = &(&(&r.x + &r.y) + &fit.z) - &id.scale_scalar(Scalar::ratio(3, 2));
    let delta = commutator(&a, &b).scale_scalar(Scalar::ratio(1, 2));
    QuadraticCombos { a, b, c, i, delta }
}

/// `(1/16) ((ω_p - ω_q)/2) ((ω_p + ω_q)/2 - I)` as an operator.
pub fn equitable_inhomogeneity(omega_p: &RatFunc, omega_q: &RatFunc, i: &ShiftOperator) -> ShiftOperator {
    let half = Scalar::ratio(1, 2);
    let diff = (omega_p - omega_q).scale(&half);
    let sum = (omega_p + omega_q).scale(&half);
    let id = ShiftOperator::identity(i.var());
    (&id.scale(&sum) - i).scale(&diff.scale(&Scalar::ratio(1, 16)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_bi() -> BiParams {
        BiParams::numeric(
            Scalar::from_int(1),
            Scalar::ratio(3, 2),
            Scalar::ratio(1, 2),
            Scalar::from_int(2),
        )
    }

    #[test]
    fn lambda_is_kappa2() {
        let r = build_standard_racah(RacahParams::symbolic());
        assert_eq!(r.k2.terms().count(), 1);
        let x = ParamPoly::var(Symbol::X);
        let g = ParamPoly::var(Symbol::GAMMA);
        let dl = ParamPoly::var(Symbol::DELTA);
        let expected = &(&x * &x) + &(&x * &(&(&g + &dl) + &ParamPoly::one()));
        assert_eq!(r.k2.coeff((0, false)), RatFunc::from_poly(expected));
    }

    #[test]
    fn kappa1_kills_constants_and_d_vanishes_at_zero() {
        let r = build_standard_racah(RacahParams::symbolic());
        assert!(r.k1.apply_to_polynomial(&ParamPoly::one()).unwrap().is_zero());
        let d0 = r.d.evaluate(&[(Symbol::X, Scalar::zero())]).unwrap();
        assert!(d0.is_zero());
    }

    #[test]
    fn bi_x_on_constants_is_h() {
        let r = build_standard_bi(sample_bi());
        assert_eq!(r.h, ParamPoly::ratio(1, 2));
        assert_eq!(r.x.apply_to_polynomial(&ParamPoly::one()).unwrap(), ParamPoly::ratio(1, 2));
        let z = ParamPoly::var(Symbol::Z);
        let yz = &z.scale(&Scalar::from_int(2)) + &ParamPoly::ratio(1, 2);
        assert_eq!(r.y.coeff((0, false)), RatFunc::from_poly(yz));
    }

    #[test]
    fn bi_x_preserves_degree_one() {
        let r = build_standard_bi(sample_bi());
        let out = r.x.apply_to_polynomial(&ParamPoly::var(Symbol::Z)).unwrap();
        assert_eq!(out.degree_in(Symbol::Z), Some(1));
    }

    #[test]
    fn bi_fit_numeric() {
        let r = build_standard_bi(sample_bi());
        let fit = fit_bi(&r).unwrap();
        assert_eq!(fit.constants.omega_z, RatFunc::constant(Scalar::from_int(2)));
        assert_eq!(fit.constants.omega_y, RatFunc::constant(Scalar::from_int(-2)));
        assert_eq!(fit.constants.omega_x, RatFunc::constant(Scalar::from_int(10)));
        let u = casimir_scalar(&Realization::BannaiIto(r)).unwrap();
        assert_eq!(u, RatFunc::constant(Scalar::ratio(59, 4)));
    }

    #[test]
    fn bi_casimir_at_zero_parameters() {
        let z = Scalar::zero();
        let r = build_standard_bi(BiParams::numeric(z.clone(), z.clone(), z.clone(), z));
        let u = casimir_scalar(&Realization::BannaiIto(r)).unwrap();
        assert_eq!(u, RatFunc::constant(Scalar::ratio(-1, 4)));
    }

    #[test]
    fn bi_symbolic_matches_closed_forms() {
        let params = BiParams::symbolic();
        let [wx, wy, wz] = params.expected_omegas();
        let u = params.expected_casimir();
        let r = build_standard_bi(params);
        let fit = fit_bi(&r).unwrap();
        assert_eq!(fit.constants.omega_x, RatFunc::from_poly(wx));
        assert_eq!(fit.constants.omega_y, RatFunc::from_poly(wy));
        assert_eq!(fit.constants.omega_z, RatFunc::from_poly(wz));
        assert_eq!(casimir_scalar(&Realization::BannaiIto(r)).unwrap(), RatFunc::from_poly(u));
    }

    #[test]
    fn racah_symbolic_fit_and_casimir() {
        let r = build_standard_racah(RacahParams::symbolic());
        let fit = fit_racah(&r).unwrap();
        for (_, c) in fit.constants.named() {
            assert!(c.is_polynomial());
            assert!(!c.contains(Symbol::X));
        }
        let t = casimir_scalar(&Realization::Racah(r)).unwrap();
        assert!(t.is_polynomial() && !t.contains(Symbol::X));
    }
}
