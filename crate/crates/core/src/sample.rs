//! Seeded random forms for the verification suites.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus::CalculusConfig;
use crate::cyclotomic::CycQ;
use crate::forms::{Form, FormMonomial};
use crate::polynomial::{Mode, Poly};

/// Shape bounds for generated forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleBounds {
    /// Largest power of `x` in a coefficient.
    pub max_degree: u32,
    /// Largest power of `d2x`.
    pub max_d2x: u32,
    /// Integer parts of `a + b*q` are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    /// Largest number of monomials in one form.
    pub max_terms: usize,
}

impl Default for SampleBounds {
    fn default() -> Self {
        SampleBounds { max_degree: 6, max_d2x: 3, coeff_bound: 5, max_terms: 4 }
    }
}

/// Deterministic generator of polynomials and forms.
pub struct FormSampler {
    rng: ChaCha8Rng,
    mode: Mode,
    bounds: SampleBounds,
}

impl FormSampler {
    pub fn new(seed: u64, mode: Mode, bounds: SampleBounds) -> Self {
        FormSampler { rng: ChaCha8Rng::seed_from_u64(seed), mode, bounds }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn max_degree(&self) -> u32 {
        if self.mode.is_truncated() {
            self.bounds.max_degree.min(2)
        } else {
            self.bounds.max_degree
        }
    }

    pub fn scalar(&mut self) -> CycQ {
        let b = self.bounds.coeff_bound;
        CycQ::from_ints(self.rng.gen_range(-b..=b), self.rng.gen_range(-b..=b))
    }

    /// A polynomial with one to three terms; it may cancel to zero.
    pub fn poly(&mut self) -> Poly {
        let n = self.rng.gen_range(1..=3);
        let top = self.max_degree();
        let mut terms = BTreeMap::new();
        for _ in 0..n {
            let d = self.rng.gen_range(0..=top);
            let c = self.scalar();
            terms.insert(d, c);
        }
        Poly::from_terms(terms, self.mode)
    }

    fn nonzero_poly(&mut self) -> Poly {
        loop {
            let p = self.poly();
            if !p.is_zero() {
                return p;
            }
        }
    }

    fn d2x_power(&mut self) -> u32 {
        self.rng.gen_range(0..=self.bounds.max_d2x)
    }

    /// An arbitrary form over `(dx)^k (d2x)^m`, `k <= 2`, `m <= max_d2x`.
    pub fn form(&mut self) -> Form {
        let n = self.rng.gen_range(1..=self.bounds.max_terms);
        let mut terms = BTreeMap::new();
        for _ in 0..n {
            let k = self.rng.gen_range(0..=2);
            let m = self.d2x_power();
            let f = self.poly();
            terms.insert(FormMonomial::new(k, m).expect("k <= 2"), f);
        }
        Form::from_terms(terms, self.mode).expect("same mode")
    }

    /// A nonzero form all of whose monomials share one grade.
    pub fn homogeneous_form(&mut self) -> Form {
        let top = 2 + 2 * self.bounds.max_d2x;
        loop {
            let g = self.rng.gen_range(0..=top);
            let mut out = Form::zero(self.mode);
            for k in 0..=2u32 {
                if k > g || (g - k) % 2 != 0 || (g - k) / 2 > self.bounds.max_d2x {
                    continue;
                }
                if self.rng.gen_bool(0.7) {
                    let t = Form::monomial(self.poly(), k, (g - k) / 2);
                    out = out.add(&t).expect("same mode");
                }
            }
            if !out.is_zero() {
                return out;
            }
        }
    }

    /// A form supported on odd grades: `sum g_k dx (d2x)^k`.
    pub fn odd_form(&mut self) -> Form {
        let n = self.rng.gen_range(1..=self.bounds.max_terms);
        let mut terms = BTreeMap::new();
        for _ in 0..n {
            let m = self.d2x_power();
            let f = self.poly();
            terms.insert(FormMonomial::new(1, m).expect("k <= 2"), f);
        }
        Form::from_terms(terms, self.mode).expect("same mode")
    }

    /// An even form `sum_k f_k (d2x)^k + partial(f_k) (dx)^2 (d2x)^(k-1)`, `k >= 1`,
    /// which is closed by construction. Every `f_k` is nonzero.
    pub fn closed_even_form(&mut self, cfg: &CalculusConfig) -> Form {
        let top = self.bounds.max_d2x.max(1);
        let n = self.rng.gen_range(1..=top);
        let mut coeffs = BTreeMap::new();
        for _ in 0..n {
            let k = self.rng.gen_range(1..=top);
            let f = self.nonzero_poly();
            coeffs.insert(k, f);
        }
        let mut terms = Vec::with_capacity(2 * coeffs.len());
        for (k, f) in coeffs {
            let h = cfg.partial(&f).expect("sampler mode matches config");
            terms.push((FormMonomial::new(0, k).expect("valid monomial"), f));
            terms.push((FormMonomial::new(2, k - 1).expect("valid monomial"), h));
        }
        Form::from_terms(terms, self.mode).expect("same mode")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_forms() {
        let mut a = FormSampler::new(7, Mode::Generic, SampleBounds::default());
        let mut b = FormSampler::new(7, Mode::Generic, SampleBounds::default());
        for _ in 0..20 {
            assert_eq!(a.form(), b.form());
        }
    }

    #[test]
    fn shapes_respect_bounds() {
        let mut s = FormSampler::new(1, Mode::Anyonic, SampleBounds::default());
        for _ in 0..200 {
            let u = s.form();
            for (mon, f) in u.terms() {
                assert!(mon.d2x() <= 3);
                assert!(f.degree().unwrap() <= 2);
                for (_, c) in f.terms() {
                    assert!(c.re().numer().magnitude() <= &5u32.into());
                }
            }
            assert!(s.homogeneous_form().is_homogeneous());
            assert!(s.odd_form().terms().all(|(m, _)| m.grade() % 2 == 1));
        }
    }
}
