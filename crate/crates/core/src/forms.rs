//! Differential forms `Omega_xi(A)` in left normal form.
//!
//! Every form is stored as `sum f_km (dx)^k (d2x)^m` with polynomial left
//! coefficients and `k <= 2`. Multiplication is defined by
//!
//! ```text
//! dx f   = xi(f) dx
//! d2x f  = xi(f) d2x + [partial, xi]_q(f) (dx)^2
//! (dx)^3 = 0
//! d2x dx = q^2 dx d2x
//! ```
//!
//! and reduces products back to normal form by left-multiplying generator
//! by generator.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::calculus::CalculusConfig;
use crate::cyclotomic::CycQ;
use crate::error::Result;
use crate::polynomial::{Mode, Poly};

/// The basis monomial `(dx)^k (d2x)^m`.
///
/// Ordered by `m` first and then `k`, which is the rendering order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormMonomial {
    dx: u8,
    d2x: u32,
}

impl FormMonomial {
    pub const ONE: FormMonomial = FormMonomial { dx: 0, d2x: 0 };

    /// `None` when `dx >= 3`, i.e. the monomial is zero.
    pub fn new(dx: u32, d2x: u32) -> Option<Self> {
        (dx <= 2).then_some(FormMonomial { dx: dx as u8, d2x })
    }

    pub fn dx(self) -> u32 {
        self.dx as u32
    }

    pub fn d2x(self) -> u32 {
        self.d2x
    }

    /// `k + 2m`.
    pub fn grade(self) -> u32 {
        self.dx() + 2 * self.d2x
    }
}

impl Ord for FormMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.d2x, self.dx).cmp(&(other.d2x, other.dx))
    }
}

impl PartialOrd for FormMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `grade(k, m) = k + 2m`.
pub fn grade(mon: FormMonomial) -> u32 {
    mon.grade()
}

/// `q^(2rj)`: the scalar with `(d2x)^r (dx)^j = q^(2rj) (dx)^j (d2x)^r`.
pub fn swap_oracle(r: u32, j: u32) -> CycQ {
    CycQ::q_pow(((2 * r as u64 * j as u64) % 3) as i64)
}

/// An element of `Omega_xi(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Form {
    terms: BTreeMap<FormMonomial, Poly>,
    mode: Mode,
}

impl Form {
    pub fn zero(mode: Mode) -> Self {
        Form { terms: BTreeMap::new(), mode }
    }

    pub fn one(mode: Mode) -> Self {
        Form::from_poly(Poly::one(mode))
    }

    /// A grade zero form.
    pub fn from_poly(f: Poly) -> Self {
        Form::term(f, FormMonomial::ONE)
    }

    pub fn scalar(c: CycQ, mode: Mode) -> Self {
        Form::from_poly(Poly::constant(c, mode))
    }

    pub fn x(mode: Mode) -> Self {
        Form::from_poly(Poly::x(mode))
    }

    pub fn dx(mode: Mode) -> Self {
        Form::monomial(Poly::one(mode), 1, 0)
    }

    pub fn d2x(mode: Mode) -> Self {
        Form::monomial(Poly::one(mode), 0, 1)
    }

    pub fn term(f: Poly, mon: FormMonomial) -> Self {
        let mut out = Form::zero(f.mode());
        out.add_term(mon, f);
        out
    }

    /// `f (dx)^k (d2x)^m`; zero when `k >= 3`.
    pub fn monomial(f: Poly, dx: u32, d2x: u32) -> Self {
        match FormMonomial::new(dx, d2x) {
            Some(mon) => Form::term(f, mon),
            None => Form::zero(f.mode()),
        }
    }

    /// Builds a form by summing the given terms.
    pub fn from_terms<I>(terms: I, mode: Mode) -> Result<Self>
    where
        I: IntoIterator<Item = (FormMonomial, Poly)>,
    {
        let mut out = Form::zero(mode);
        for (mon, f) in terms {
            mode.ensure_same(f.mode())?;
            out.add_term(mon, f);
        }
        Ok(out)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (FormMonomial, &Poly)> + '_ {
        self.terms.iter().map(|(m, f)| (*m, f))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mon: FormMonomial) -> Poly {
        self.terms.get(&mon).cloned().unwrap_or_else(|| Poly::zero(self.mode))
    }

    /// Coefficient of `(dx)^k (d2x)^m`, zero for `k >= 3`.
    pub fn coeff_at(&self, dx: u32, d2x: u32) -> Poly {
        match FormMonomial::new(dx, d2x) {
            Some(mon) => self.coeff(mon),
            None => Poly::zero(self.mode),
        }
    }

    /// The grade shared by all terms, or `None` for zero and mixed forms.
    pub fn homogeneous_grade(&self) -> Option<u32> {
        let mut grades = self.terms.keys().map(|m| m.grade());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_grade().is_some()
    }

    /// Largest `d2x` power present.
    pub fn max_d2x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.d2x()).max()
    }

    fn add_term(&mut self, mon: FormMonomial, f: Poly) {
        if f.is_zero() {
            return;
        }
        debug_assert_eq!(f.mode(), self.mode);
        match self.terms.remove(&mon) {
            Some(prev) => {
                let sum = prev.add(&f).expect("same mode");
                if !sum.is_zero() {
                    self.terms.insert(mon, sum);
                }
            }
            None => {
                self.terms.insert(mon, f);
            }
        }
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.mode.ensure_same(other.mode)?;
        let mut out = self.clone();
        for (mon, f) in &other.terms {
            out.add_term(*mon, f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        self.map_coeffs(|f| f.neg())
    }

    pub fn scale(&self, c: &CycQ) -> Form {
        self.map_coeffs(|f| f.scale(c))
    }

    /// `g * self` for a function `g`; equal to multiplying by the grade zero form `g`.
    pub fn left_mul_poly(&self, g: &Poly) -> Result<Form> {
        self.mode.ensure_same(g.mode())?;
        Ok(self.map_coeffs(|f| g.mul(f).expect("same mode")))
    }

    fn map_coeffs<F: Fn(&Poly) -> Poly>(&self, g: F) -> Form {
        let mut out = Form::zero(self.mode);
        for (mon, f) in &self.terms {
            out.add_term(*mon, g(f));
        }
        out
    }

    /// Splits into homogeneous components keyed by grade.
    pub fn decompose(&self) -> BTreeMap<u32, Form> {
        let mut out: BTreeMap<u32, Form> = BTreeMap::new();
        for (mon, f) in &self.terms {
            out.entry(mon.grade())
                .or_insert_with(|| Form::zero(self.mode))
                .add_term(*mon, f.clone());
        }
        out
    }

    /// Only the components of odd (`odd = true`) or even grade.
    pub fn parity_part(&self, odd: bool) -> Form {
        let mut out = Form::zero(self.mode);
        for (mon, f) in &self.terms {
            if (mon.grade() % 2 == 1) == odd {
                out.add_term(*mon, f.clone());
            }
        }
        out
    }

    /// The product `self * other` in normal form.
    pub fn mul(&self, other: &Form, cfg: &CalculusConfig) -> Result<Form> {
        self.mode.ensure_same(other.mode)?;
        self.mode.ensure_same(cfg.mode())?;
        let mut out = Form::zero(self.mode);
        // (dx)^k (d2x)^m * other, one generator at a time from the right
        let mut cache: BTreeMap<FormMonomial, Form> = BTreeMap::new();
        for (mon, f) in &self.terms {
            let shifted = cache.entry(*mon).or_insert_with(|| {
                let mut w = other.clone();
                for _ in 0..mon.d2x() {
                    w = w.lmul_d2x(cfg);
                }
                for _ in 0..mon.dx() {
                    w = w.lmul_dx(cfg);
                }
                w
            });
            for (m2, g) in &shifted.terms {
                out.add_term(*m2, f.mul(g).expect("same mode"));
            }
        }
        Ok(out)
    }

    /// `dx * self`: `dx h (dx)^a (d2x)^b = xi(h) (dx)^(a+1) (d2x)^b`.
    fn lmul_dx(&self, cfg: &CalculusConfig) -> Form {
        let mut out = Form::zero(self.mode);
        for (mon, h) in &self.terms {
            if let Some(next) = FormMonomial::new(mon.dx() + 1, mon.d2x()) {
                out.add_term(next, cfg.xi_unchecked(h));
            }
        }
        out
    }

    /// `d2x * self`:
    /// `d2x h (dx)^a (d2x)^b = q^(2a) xi(h) (dx)^a (d2x)^(b+1) + [partial, xi]_q(h) (dx)^(a+2) (d2x)^b`.
    fn lmul_d2x(&self, cfg: &CalculusConfig) -> Form {
        let mut out = Form::zero(self.mode);
        for (mon, h) in &self.terms {
            let lifted = FormMonomial { dx: mon.dx, d2x: mon.d2x + 1 };
            // one q^2 per dx that d2x moves past
            let swaps = CycQ::q_squared().pow(mon.dx() as u64);
            out.add_term(lifted, cfg.xi_unchecked(h).scale(&swaps));
            if let Some(spilled) = FormMonomial::new(mon.dx() + 2, mon.d2x()) {
                out.add_term(spilled, cfg.q_bracket_unchecked(h));
            }
        }
        out
    }

    /// `self^n`, with `self^0 = 1`.
    pub fn pow(&self, n: u32, cfg: &CalculusConfig) -> Result<Form> {
        self.mode.ensure_same(cfg.mode())?;
        let mut acc = Form::one(self.mode);
        for _ in 0..n {
            acc = acc.mul(self, cfg)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render(self))
    }
}
