//! Exact arithmetic in the cyclotomic field `Q(q)`, `q` a primitive cube root of unity.
//!
//! Elements are stored as `a + b*q` over the basis `{1, q}` with reduced
//! rational components. Multiplication folds `q^2` back into the basis via
//! the minimal polynomial `q^2 + q + 1 = 0`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary precision rational, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// A scalar `a + b*q` in `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycQ {
    a: Rational,
    b: Rational,
}

impl CycQ {
    pub fn new(a: Rational, b: Rational) -> Self {
        CycQ { a, b }
    }

    /// `a + b*q` from machine integers.
    pub fn from_ints(a: i64, b: i64) -> Self {
        CycQ::new(Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }

    pub fn from_rational(a: Rational) -> Self {
        CycQ::new(a, Rational::zero())
    }

    pub fn zero() -> Self {
        CycQ::from_ints(0, 0)
    }

    pub fn one() -> Self {
        CycQ::from_ints(1, 0)
    }

    /// The root of unity itself.
    pub fn q() -> Self {
        CycQ::from_ints(0, 1)
    }

    /// `q^2 = -1 - q`.
    pub fn q_squared() -> Self {
        CycQ::from_ints(-1, -1)
    }

    /// `q^e` for any integer exponent, reduced mod 3.
    pub fn q_pow(e: i64) -> Self {
        match e.rem_euclid(3) {
            0 => CycQ::one(),
            1 => CycQ::q(),
            _ => CycQ::q_squared(),
        }
    }

    /// Rational part.
    pub fn re(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of `q`.
    pub fn q_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the `q` component vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field norm `N(a + bq) = a^2 - ab + b^2`, nonnegative and zero only at zero.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Galois conjugate `a + b*q^2 = (a - b) - b*q`.
    pub fn conj(&self) -> Self {
        CycQ::new(&self.a - &self.b, -&self.b)
    }

    pub fn add(&self, other: &CycQ) -> CycQ {
        CycQ::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn sub(&self, other: &CycQ) -> CycQ {
        CycQ::new(&self.a - &other.a, &self.b - &other.b)
    }

    pub fn neg(&self) -> CycQ {
        CycQ::new(-&self.a, -&self.b)
    }

    /// `(a1 + b1 q)(a2 + b2 q) = (a1 a2 - b1 b2) + (a1 b2 + b1 a2 - b1 b2) q`.
    pub fn mul(&self, other: &CycQ) -> CycQ {
        let bb = &self.b * &other.b;
        let a = &self.a * &other.a - &bb;
        let b = &self.a * &other.b + &self.b * &other.a - bb;
        CycQ::new(a, b)
    }

    pub fn scale(&self, r: &Rational) -> CycQ {
        CycQ::new(&self.a * r, &self.b * r)
    }

    /// Multiplicative inverse via `u^{-1} = conj(u) / N(u)`.
    pub fn inv(&self) -> Result<CycQ, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(CycQ::new(c.a / &n, c.b / n))
    }

    pub fn div(&self, other: &CycQ) -> Result<CycQ, Error> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut n: u64) -> CycQ {
        let mut base = self.clone();
        let mut acc = CycQ::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Sign of the single nonzero component, when there is exactly one.
    pub(crate) fn simple_sign(&self) -> Option<bool> {
        match (self.a.is_zero(), self.b.is_zero()) {
            (false, true) => Some(self.a.is_negative()),
            (true, false) => Some(self.b.is_negative()),
            _ => None,
        }
    }
}

impl Default for CycQ {
    fn default() -> Self {
        CycQ::zero()
    }
}

impl From<i64> for CycQ {
    fn from(n: i64) -> Self {
        CycQ::from_ints(n, 0)
    }
}

impl From<Rational> for CycQ {
    fn from(r: Rational) -> Self {
        CycQ::from_rational(r)
    }
}

impl From<BigInt> for CycQ {
    fn from(n: BigInt) -> Self {
        CycQ::from_rational(Rational::from_integer(n))
    }
}

impl<'a> Add<&'a CycQ> for &'a CycQ {
    type Output = CycQ;
    fn add(self, rhs: &CycQ) -> CycQ {
        CycQ::add(self, rhs)
    }
}

impl<'a> Sub<&'a CycQ> for &'a CycQ {
    type Output = CycQ;
    fn sub(self, rhs: &CycQ) -> CycQ {
        CycQ::sub(self, rhs)
    }
}

impl<'a> Mul<&'a CycQ> for &'a CycQ {
    type Output = CycQ;
    fn mul(self, rhs: &CycQ) -> CycQ {
        CycQ::mul(self, rhs)
    }
}

impl Neg for &CycQ {
    type Output = CycQ;
    fn neg(self) -> CycQ {
        CycQ::neg(self)
    }
}

impl AddAssign<&CycQ> for CycQ {
    fn add_assign(&mut self, rhs: &CycQ) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

pub(crate) fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Renders as `a+b*q`, eliding a zero component: `0`, `3/2`, `1*q`, `-1-1*q`.
impl fmt::Display for CycQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return fmt_rational(&self.a, f);
        }
        if !self.a.is_zero() {
            fmt_rational(&self.a, f)?;
            if !self.b.is_negative() {
                f.write_str("+")?;
            }
        }
        fmt_rational(&self.b, f)?;
        f.write_str("*q")
    }
}
