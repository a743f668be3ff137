//! Coordinate calculus on `A` twisted by the homomorphism `xi(x) = alpha * x`.
//!
//! `partial` satisfies `partial(x) = 1` and the twisted Leibniz rule
//! `partial(f g) = partial(f) g + xi(f) partial(g)`. On monomials it acts as
//! `partial(x^m) = [m]_alpha x^(m-1)` with `[m]_alpha = 1 + alpha + ... + alpha^(m-1)`.

use crate::cyclotomic::CycQ;
use crate::error::{Error, Result};
use crate::polynomial::{Mode, Poly};

/// The homomorphism parameter together with the choice of coordinate algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CalculusConfig {
    alpha: CycQ,
    anyonic: bool,
}

impl CalculusConfig {
    /// Generic calculus over the free algebra with `xi(x) = alpha * x`.
    pub fn new(alpha: CycQ) -> Self {
        CalculusConfig { alpha, anyonic: false }
    }

    /// Calculus on the anyonic line: `alpha = q` and `x^3 = 0`.
    pub fn anyonic() -> Self {
        CalculusConfig { alpha: CycQ::q(), anyonic: true }
    }

    pub fn try_new(alpha: CycQ, anyonic: bool) -> Result<Self> {
        if anyonic && alpha != CycQ::q() {
            return Err(Error::Config(format!(
                "the anyonic line requires alpha = q, got alpha = {alpha}"
            )));
        }
        Ok(CalculusConfig { alpha, anyonic })
    }

    /// Configures from the image `h = xi(x)`. Only `h = alpha * x` yields a
    /// derivative with `partial(x^m) ~ x^(m-1)`; anything else is rejected.
    pub fn from_image(h: &Poly, anyonic: bool) -> Result<Self> {
        let mut terms = h.terms();
        match (terms.next(), terms.next()) {
            (Some((1, alpha)), None) => CalculusConfig::try_new(alpha.clone(), anyonic),
            _ => Err(Error::Config(
                "xi(x) must be a nonzero multiple of x".to_string(),
            )),
        }
    }

    pub fn alpha(&self) -> &CycQ {
        &self.alpha
    }

    pub fn is_anyonic(&self) -> bool {
        self.anyonic
    }

    pub fn mode(&self) -> Mode {
        if self.anyonic {
            Mode::Anyonic
        } else {
            Mode::Generic
        }
    }

    fn ensure_mode(&self, f: &Poly) -> Result<()> {
        self.mode().ensure_same(f.mode()).map(|_| ())
    }

    /// `[m]_alpha = sum_{k < m} alpha^k`.
    pub fn alpha_number(&self, m: u32) -> CycQ {
        let mut acc = CycQ::zero();
        let mut pow = CycQ::one();
        for _ in 0..m {
            acc += &pow;
            pow = pow.mul(&self.alpha);
        }
        acc
    }

    /// `xi(f)(x) = f(alpha x)`.
    pub fn xi(&self, f: &Poly) -> Result<Poly> {
        self.ensure_mode(f)?;
        Ok(self.xi_unchecked(f))
    }

    pub(crate) fn xi_unchecked(&self, f: &Poly) -> Poly {
        f.map_terms(|d, c| (d, c.mul(&self.alpha.pow(d as u64))))
    }

    /// The twisted derivative.
    pub fn partial(&self, f: &Poly) -> Result<Poly> {
        self.ensure_mode(f)?;
        Ok(self.partial_unchecked(f))
    }

    pub(crate) fn partial_unchecked(&self, f: &Poly) -> Poly {
        Poly::from_terms(
            f.terms()
                .filter(|(d, _)| *d >= 1)
                .map(|(d, c)| (d - 1, c.mul(&self.alpha_number(d)))),
            f.mode(),
        )
    }

    /// `[partial, xi]_q (f) = partial(xi(f)) - q xi(partial(f))`.
    pub fn q_bracket(&self, f: &Poly) -> Result<Poly> {
        self.ensure_mode(f)?;
        Ok(self.q_bracket_unchecked(f))
    }

    pub(crate) fn q_bracket_unchecked(&self, f: &Poly) -> Poly {
        let lhs = self.partial_unchecked(&self.xi_unchecked(f));
        let rhs = self.xi_unchecked(&self.partial_unchecked(f)).scale(&CycQ::q());
        lhs.sub(&rhs).expect("same mode")
    }

    /// First monomial `x^m`, `1 <= m <= max_degree`, whose bracket is nonzero.
    pub fn homogeneity_witness(&self, max_degree: u32) -> Option<(u32, Poly)> {
        (1..=max_degree).find_map(|m| {
            let xm = Poly::monomial(CycQ::one(), m, self.mode());
            let b = self.q_bracket_unchecked(&xm);
            (!b.is_zero()).then_some((m, b))
        })
    }
}

/// True iff the q-bracket vanishes on every `x^m` with `1 <= m <= max_degree`,
/// which by linearity certifies homogeneity of the `d2x` relation on all
/// polynomials of degree at most `max_degree`.
pub fn check_homogeneity(cfg: &CalculusConfig, max_degree: u32) -> Result<bool> {
    if max_degree == 0 {
        return Err(Error::Config("max_degree must be at least 1".to_string()));
    }
    Ok(cfg.homogeneity_witness(max_degree).is_none())
}
