//! Gaussian rationals: the exact base field `Q(i)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::KernelError;

/// An exact complex rational `re + im*i`.
///
/// Both parts are kept in lowest terms with positive denominators (this is
/// what `BigRational` guarantees), so derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `num/den` as a real scalar. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in Scalar::ratio");
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Scalar::from_rational(self.re.recip()));
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Scalar {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, KernelError> {
        let inv = rhs.inv().ok_or(KernelError::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Serialization form: `p/q` for reals, `p/q+p/qi` otherwise.
    /// Denominators are always written out.
    pub fn to_pq_string(&self) -> String {
        fn pq(r: &BigRational) -> String {
            format!("{}/{}", r.numer(), r.denom())
        }
        if self.im.is_zero() {
            pq(&self.re)
        } else if self.im.is_negative() {
            format!("{}-{}i", pq(&self.re), pq(&-self.im.clone()))
        } else {
            format!("{}+{}i", pq(&self.re), pq(&self.im))
        }
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(&self.re, f),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-self.im.clone()).is_one() {
                    write!(f, "-i")
                } else {
                    fmt_rational(&self.im, f)?;
                    write!(f, "i")
                }
            }
            (false, false) => {
                write!(f, "(")?;
                fmt_rational(&self.re, f)?;
                if self.im.is_negative() {
                    write!(f, "-")?;
                    fmt_rational(&-self.im.clone(), f)?;
                } else {
                    write!(f, "+")?;
                    fmt_rational(&self.im, f)?;
                }
                write!(f, "i)")
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = KernelError;

    /// Parses `n`, `p/q` or a decimal-free real rational. Complex input is
    /// not accepted here (parameters are real).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || KernelError::MalformedRational(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Scalar::from_rational(BigRational::new(num, den)))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_rational(&self.re * &rhs.re);
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] otherwise.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: (i64, i64), im: (i64, i64)) -> Scalar {
        Scalar::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    #[test]
    fn gaussian_product_by_hand() {
        // (1/2 + i/3)(3 + 6i) = 3/2 + 3i + i - 2 = -1/2 + 4i
        let a = c((1, 2), (1, 3));
        let b = c((3, 1), (6, 1));
        assert_eq!(&a * &b, c((-1, 2), (4, 1)));
    }

    #[test]
    fn identity_and_i_squared() {
        let a = c((5, 7), (-2, 9));
        assert_eq!(&a * &Scalar::one(), a);
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_of_complex() {
        let a = c((1, 2), (1, 3));
        assert!((&a * &a.inv().unwrap()).is_one());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn parse_and_serialize() {
        let s: Scalar = "3/2".parse().unwrap();
        assert_eq!(s, Scalar::ratio(3, 2));
        assert_eq!(s.to_pq_string(), "3/2");
        assert_eq!(Scalar::from_int(-4).to_pq_string(), "-4/1");
        assert_eq!("6/4".parse::<Scalar>().unwrap().to_pq_string(), "3/2");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert_eq!(c((1, 2), (-1, 3)).to_pq_string(), "1/2-1/3i");
    }
}
