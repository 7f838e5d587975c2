//! The fixed registry of commuting symbols used by every polynomial in the crate.
//!
//! The two distinguished variables come first so that the deg-lex order ranks
//! them above the parameters; denominators built from linear factors in the
//! distinguished variable then have their pure power as leading monomial.

use std::fmt;
use std::str::FromStr;

use super::KernelError;

/// Number of registered symbols; the length of every exponent vector.
pub const NSYM: usize = 26;

const NAMES: [&str; NSYM] = [
    "x", "z", "α", "β", "γ", "δ", "ρ1", "ρ2", "r1", "r2", "μ1", "μ2", "μ3", "g1", "g2", "g3", "a1",
    "a2", "c1", "c2", "d", "e1", "e2", "ωX", "ωY", "ωZ",
];

const ASCII: [&str; NSYM] = [
    "x", "z", "alpha", "beta", "gamma", "delta", "rho1", "rho2", "r1", "r2", "mu1", "mu2", "mu3",
    "g1", "g2", "g3", "a1", "a2", "c1", "c2", "d", "e1", "e2", "omegaX", "omegaY", "omegaZ",
];

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u8);

impl Symbol {
    pub const X: Symbol = Symbol(0);
    pub const Z: Symbol = Symbol(1);
    pub const ALPHA: Symbol = Symbol(2);
    pub const BETA: Symbol = Symbol(3);
    pub const GAMMA: Symbol = Symbol(4);
    pub const DELTA: Symbol = Symbol(5);
    pub const RHO1: Symbol = Symbol(6);
    pub const RHO2: Symbol = Symbol(7);
    pub const R1: Symbol = Symbol(8);
    pub const R2: Symbol = Symbol(9);
    pub const MU1: Symbol = Symbol(10);
    pub const MU2: Symbol = Symbol(11);
    pub const MU3: Symbol = Symbol(12);
    pub const G1: Symbol = Symbol(13);
    pub const G2: Symbol = Symbol(14);
    pub const G3: Symbol = Symbol(15);
    pub const A1: Symbol = Symbol(16);
    pub const A2: Symbol = Symbol(17);
    pub const C1: Symbol = Symbol(18);
    pub const C2: Symbol = Symbol(19);
    pub const D: Symbol = Symbol(20);
    pub const E1: Symbol = Symbol(21);
    pub const E2: Symbol = Symbol(22);
    pub const OMEGA_X: Symbol = Symbol(23);
    pub const OMEGA_Y: Symbol = Symbol(24);
    pub const OMEGA_Z: Symbol = Symbol(25);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Symbol {
        assert!(i < NSYM, "symbol index out of range");
        Symbol(i as u8)
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn ascii_name(self) -> &'static str {
        ASCII[self.index()]
    }

    pub fn all() -> impl Iterator<Item = Symbol> {
        (0..NSYM).map(Symbol::from_index)
    }

    /// `μ_i`, `g_i` for `i` in 1..=3.
    pub fn mu(i: usize) -> Symbol {
        [Symbol::MU1, Symbol::MU2, Symbol::MU3][i - 1]
    }

    pub fn g(i: usize) -> Symbol {
        [Symbol::G1, Symbol::G2, Symbol::G3][i - 1]
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = KernelError;

    /// Accepts the Greek names (`ρ1`) and their ASCII spellings (`rho1`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        NAMES
            .iter()
            .position(|n| *n == s)
            .or_else(|| ASCII.iter().position(|n| n.eq_ignore_ascii_case(s)))
            .map(Symbol::from_index)
            .ok_or_else(|| KernelError::UnknownSymbol(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_both_spellings() {
        assert_eq!("ρ1".parse::<Symbol>().unwrap(), Symbol::RHO1);
        assert_eq!("rho1".parse::<Symbol>().unwrap(), Symbol::RHO1);
        assert_eq!("omegaX".parse::<Symbol>().unwrap(), Symbol::OMEGA_X);
        assert!("nope".parse::<Symbol>().is_err());
    }

    #[test]
    fn names_roundtrip() {
        for s in Symbol::all() {
            assert_eq!(s.name().parse::<Symbol>().unwrap(), s);
            assert_eq!(s.ascii_name().parse::<Symbol>().unwrap(), s);
        }
    }
}
