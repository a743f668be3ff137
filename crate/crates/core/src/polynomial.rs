//! The coordinate algebra `A`: sparse polynomials in `x` over `Q(q)`.
//!
//! A polynomial carries its [`Mode`]. In anyonic mode it lives in the
//! quotient `A/(x^3)` and degrees `>= 3` are dropped on construction.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::CycQ;
use crate::error::{Error, Result};

/// Which coordinate algebra a value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// The free algebra on `x`.
    Generic,
    /// The quotient by `x^3 = 0`.
    Anyonic,
}

impl Mode {
    pub fn is_truncated(self) -> bool {
        self == Mode::Anyonic
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Generic => "generic",
            Mode::Anyonic => "anyonic",
        }
    }

    /// Fails with [`Error::ModeMismatch`] unless both modes agree.
    pub fn ensure_same(self, other: Mode) -> Result<Mode> {
        if self == other {
            Ok(self)
        } else {
            Err(Error::ModeMismatch { left: self.name(), right: other.name() })
        }
    }

    /// Whether a monomial of this degree survives the truncation.
    pub fn admits_degree(self, deg: u32) -> bool {
        !self.is_truncated() || deg < 3
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element of `A`, in sparse canonical form: no zero coefficient is stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: BTreeMap<u32, CycQ>,
    mode: Mode,
}

impl Poly {
    pub fn zero(mode: Mode) -> Self {
        Poly { coeffs: BTreeMap::new(), mode }
    }

    pub fn one(mode: Mode) -> Self {
        Poly::constant(CycQ::one(), mode)
    }

    /// The generator `x`.
    pub fn x(mode: Mode) -> Self {
        Poly::monomial(CycQ::one(), 1, mode)
    }

    pub fn constant(c: CycQ, mode: Mode) -> Self {
        Poly::monomial(c, 0, mode)
    }

    /// `c * x^deg`, which is zero when `c = 0` or the truncation kills the degree.
    pub fn monomial(c: CycQ, deg: u32, mode: Mode) -> Self {
        let mut p = Poly::zero(mode);
        p.add_term(deg, &c);
        p
    }

    /// Builds from `(degree, coefficient)` pairs, summing repeated degrees.
    pub fn from_terms<I>(terms: I, mode: Mode) -> Self
    where
        I: IntoIterator<Item = (u32, CycQ)>,
    {
        let mut p = Poly::zero(mode);
        for (d, c) in terms {
            p.add_term(d, &c);
        }
        p
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(CycQ::is_one)
    }

    /// Highest degree with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: u32) -> CycQ {
        self.coeffs.get(&deg).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &CycQ)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The constant term when the polynomial has degree `<= 0`.
    pub fn as_constant(&self) -> Option<CycQ> {
        match self.degree() {
            None => Some(CycQ::zero()),
            Some(0) => Some(self.coeff(0)),
            _ => None,
        }
    }

    fn add_term(&mut self, deg: u32, c: &CycQ) {
        if c.is_zero() || !self.mode.admits_degree(deg) {
            return;
        }
        let slot = self.coeffs.entry(deg).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        let mode = self.mode.ensure_same(other.mode)?;
        let mut out = Poly { coeffs: self.coeffs.clone(), mode };
        for (d, c) in &other.coeffs {
            out.add_term(*d, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, c.neg())).collect(),
            mode: self.mode,
        }
    }

    /// Convolution product; in anyonic mode degrees `>= 3` vanish.
    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        let mode = self.mode.ensure_same(other.mode)?;
        let mut out = Poly::zero(mode);
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &other.coeffs {
                out.add_term(d1 + d2, &c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CycQ) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.mode);
        }
        Poly {
            coeffs: self.coeffs.iter().map(|(d, a)| (*d, a.mul(c))).collect(),
            mode: self.mode,
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(self.mode);
        for _ in 0..n {
            acc = acc.mul(self).expect("same mode");
        }
        acc
    }

    /// Replaces every coefficient `c_d` by `g(d, c_d)`, re-canonicalizing.
    pub fn map_terms<F>(&self, mut g: F) -> Poly
    where
        F: FnMut(u32, &CycQ) -> (u32, CycQ),
    {
        Poly::from_terms(self.coeffs.iter().map(|(d, c)| g(*d, c)), self.mode)
    }

    /// Reinterprets the polynomial in another mode, truncating if needed.
    pub fn with_mode(&self, mode: Mode) -> Poly {
        Poly::from_terms(self.coeffs.iter().map(|(d, c)| (*d, c.clone())), mode)
    }
}

/// Ascending degree, e.g. `1 + (1+q)*x - x^3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render(&crate::forms::Form::from_poly(self.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(mode: Mode) -> Poly {
        Poly::x(mode)
    }

    fn c(a: i64, b: i64) -> CycQ {
        CycQ::from_ints(a, b)
    }

    #[test]
    fn addition_examples() {
        let g = Mode::Generic;
        assert_eq!(x(g).add(&x(g)).unwrap(), Poly::monomial(c(2, 0), 1, g));
        let x2 = Poly::monomial(c(1, 0), 2, g);
        assert!(x2.add(&x2.scale(&c(-1, 0))).unwrap().is_zero());
        let lhs = Poly::one(g).add(&x(g)).unwrap();
        let sum = lhs.add(&x(g).scale(&CycQ::q())).unwrap();
        assert_eq!(sum, Poly::from_terms([(0, c(1, 0)), (1, c(1, 1))], g));
    }

    #[test]
    fn multiplication_examples() {
        let x2g = Poly::monomial(c(1, 0), 2, Mode::Generic);
        assert_eq!(x(Mode::Generic).mul(&x2g).unwrap(), Poly::monomial(c(1, 0), 3, Mode::Generic));
        let x2a = Poly::monomial(c(1, 0), 2, Mode::Anyonic);
        assert!(x(Mode::Anyonic).mul(&x2a).unwrap().is_zero());
        let g = Mode::Generic;
        let p = Poly::from_terms([(0, c(1, 0)), (1, c(1, 0))], g);
        let m = Poly::from_terms([(0, c(1, 0)), (1, c(-1, 0))], g);
        assert_eq!(p.mul(&m).unwrap(), Poly::from_terms([(0, c(1, 0)), (2, c(-1, 0))], g));
    }

    #[test]
    fn scaling_examples() {
        let g = Mode::Generic;
        assert_eq!(x(g).scale(&CycQ::q()), Poly::monomial(CycQ::q(), 1, g));
        assert!(Poly::one(g).add(&x(g)).unwrap().scale(&CycQ::zero()).is_zero());
        let qx = Poly::monomial(CycQ::q(), 1, g);
        assert_eq!(qx.scale(&CycQ::q_squared()), x(g));
    }

    #[test]
    fn mixed_modes_are_rejected() {
        let err = x(Mode::Generic).add(&x(Mode::Anyonic)).unwrap_err();
        assert!(matches!(err, Error::ModeMismatch { .. }));
        assert!(x(Mode::Generic).mul(&x(Mode::Anyonic)).is_err());
    }

    #[test]
    fn display() {
        let g = Mode::Generic;
        let p = Poly::from_terms([(3, c(-1, 0)), (0, c(1, 0)), (1, c(1, 1))], g);
        assert_eq!(p.to_string(), "1 + (1+q)*x - x^3");
        assert_eq!(Poly::zero(g).to_string(), "0");
    }

    #[test]
    fn truncation_on_construction() {
        assert!(Poly::monomial(c(1, 0), 3, Mode::Anyonic).is_zero());
        assert_eq!(x(Mode::Anyonic).pow(2).degree(), Some(2));
        assert!(x(Mode::Anyonic).pow(3).is_zero());
    }

    pub(crate) fn arb_poly(mode: Mode) -> impl Strategy<Value = Poly> {
        prop::collection::vec((0u32..6, -5i64..=5, -5i64..=5), 0..5).prop_map(move |ts| {
            Poly::from_terms(ts.into_iter().map(|(d, a, b)| (d, c(a, b))), mode)
        })
    }

    fn arb_mode() -> impl Strategy<Value = Mode> {
        prop_oneof![Just(Mode::Generic), Just(Mode::Anyonic)]
    }

    proptest! {
        #[test]
        fn commutative_ring_axioms(
            (f, g, h) in arb_mode().prop_flat_map(|m| (arb_poly(m), arb_poly(m), arb_poly(m)))
        ) {
            prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
            prop_assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
            prop_assert!(f.sub(&f).unwrap().is_zero());
            prop_assert_eq!(f.mul(&Poly::one(f.mode())).unwrap(), f.clone());
        }

        #[test]
        fn truncated_products_stay_below_three(f in arb_poly(Mode::Anyonic), g in arb_poly(Mode::Anyonic)) {
            let p = f.mul(&g).unwrap();
            prop_assert!(p.degree().unwrap_or(0) <= 2);
            let x = Poly::x(Mode::Anyonic);
            prop_assert!(x.pow(2).mul(&x).unwrap().is_zero());
        }

        #[test]
        fn degree_is_additive(f in arb_poly(Mode::Generic), g in arb_poly(Mode::Generic)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let p = f.mul(&g).unwrap();
            prop_assert_eq!(p.degree().unwrap(), f.degree().unwrap() + g.degree().unwrap());
        }

        #[test]
        fn no_zero_coefficients_stored(f in arb_poly(Mode::Generic), g in arb_poly(Mode::Generic)) {
            let s = f.sub(&g).unwrap();
            prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
