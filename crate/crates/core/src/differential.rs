//! The exterior differential `d` on `Omega_xi(A)`, with `d^3 = 0`.
//!
//! `d` is linear and acts on a term `f (dx)^k (d2x)^m` by
//!
//! ```text
//! k = 0:  partial(f) dx (d2x)^m
//! k = 1:  f (d2x)^(m+1) + partial(f) (dx)^2 (d2x)^m
//! k = 2:  -f dx (d2x)^(m+1)
//! ```

use crate::calculus::CalculusConfig;
use crate::error::Result;
use crate::forms::{Form, FormMonomial};
use crate::polynomial::Poly;

/// `d(u)`.
pub fn d(u: &Form, cfg: &CalculusConfig) -> Result<Form> {
    u.mode().ensure_same(cfg.mode())?;
    let mut terms: Vec<(FormMonomial, Poly)> = Vec::with_capacity(2 * u.len());
    for (mon, f) in u.terms() {
        let m = mon.d2x();
        match mon.dx() {
            0 => terms.push((mono(1, m), cfg.partial_unchecked(f))),
            1 => {
                terms.push((mono(0, m + 1), f.clone()));
                terms.push((mono(2, m), cfg.partial_unchecked(f)));
            }
            _ => terms.push((mono(1, m + 1), f.neg())),
        }
    }
    Form::from_terms(terms, u.mode())
}

fn mono(dx: u32, d2x: u32) -> FormMonomial {
    FormMonomial::new(dx, d2x).expect("dx power below 3")
}

/// `d^n(u)`; `d_pow(u, 0) = u`.
pub fn d_pow(u: &Form, n: u32, cfg: &CalculusConfig) -> Result<Form> {
    u.mode().ensure_same(cfg.mode())?;
    let mut acc = u.clone();
    for _ in 0..n {
        if acc.is_zero() {
            break;
        }
        acc = d(&acc, cfg)?;
    }
    Ok(acc)
}

/// `d(u) = 0`.
pub fn is_closed(u: &Form, cfg: &CalculusConfig) -> Result<bool> {
    Ok(d(u, cfg)?.is_zero())
}

/// Closedness of the even part of `u` read off its coefficients: writing the
/// even part as `sum_k f_k (d2x)^k + h_(k-1) (dx)^2 (d2x)^(k-1)`, it is closed
/// iff `partial(f_k) = h_(k-1)` for every `k >= 0` (with `h_(-1) = 0`).
pub fn even_closed_by_coefficients(u: &Form, cfg: &CalculusConfig) -> Result<bool> {
    u.mode().ensure_same(cfg.mode())?;
    let top = match u.max_d2x() {
        Some(m) => m + 1,
        None => return Ok(true),
    };
    for k in 0..=top {
        let f_k = u.coeff_at(0, k);
        let h_prev = if k == 0 { Poly::zero(u.mode()) } else { u.coeff_at(2, k - 1) };
        if cfg.partial_unchecked(&f_k) != h_prev {
            return Ok(false);
        }
    }
    Ok(true)
}
