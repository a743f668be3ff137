//! Seeded property suites for the algebra of forms.
//!
//! Samples are drawn sequentially from one seeded generator and then checked
//! in parallel; results are gathered in sample order, so a report depends
//! only on the configuration, seed, sample count and degree bound.

use std::fmt;

use rayon::prelude::*;

use crate::calculus::{check_homogeneity, CalculusConfig};
use crate::cyclotomic::CycQ;
use crate::differential::{d, d_pow, even_closed_by_coefficients, is_closed};
use crate::error::Result;
use crate::forms::{swap_oracle, Form};
use crate::parser::render;
use crate::polynomial::Poly;
use crate::sample::{FormSampler, SampleBounds};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub seed: u64,
    pub samples: usize,
    /// Coefficient degree bound for sampled forms, and the degree bound for `prop2`.
    pub max_degree: u32,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { seed: 0, samples: 200, max_degree: 6 }
    }
}

impl SuiteParams {
    fn sampler(&self, cfg: &CalculusConfig) -> FormSampler {
        let bounds = SampleBounds { max_degree: self.max_degree, ..SampleBounds::default() };
        FormSampler::new(self.seed, cfg.mode(), bounds)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Assoc,
    Leibniz,
    D3,
    Prop2,
    Swap,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Assoc => "assoc",
            Suite::Leibniz => "leibniz",
            Suite::D3 => "d3",
            Suite::Prop2 => "prop2",
            Suite::Swap => "swap",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "assoc" => Suite::Assoc,
            "leibniz" => Suite::Leibniz,
            "d3" => Suite::D3,
            "prop2" => Suite::Prop2,
            "swap" => Suite::Swap,
            "all" => Suite::All,
            other => return Err(format!("unknown suite '{other}'")),
        })
    }
}

/// Outcome of one property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub note: String,
    /// Smallest failing instance, rendered.
    pub counterexample: Option<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {}/{} ok; {}",
            self.name,
            self.checked - self.failures,
            self.checked,
            self.note
        )?;
        if let Some(cx) = &self.counterexample {
            write!(f, "\n  counterexample: {cx}")?;
        }
        Ok(())
    }
}

fn sampled<T, G, C>(name: &'static str, note: String, params: &SuiteParams, cfg: &CalculusConfig, mut gen: G, check: C) -> PropertyReport
where
    T: Send + Sync,
    G: FnMut(&mut FormSampler) -> T,
    C: Fn(&T) -> Option<String> + Sync,
{
    let mut sampler = params.sampler(cfg);
    let cases: Vec<T> = (0..params.samples).map(|_| gen(&mut sampler)).collect();
    let failures: Vec<String> = cases.par_iter().filter_map(&check).collect();
    let counterexample = failures
        .iter()
        .min_by_key(|s| s.len())
        .cloned();
    PropertyReport { name, checked: cases.len(), failures: failures.len(), note, counterexample }
}

fn describe(cfg: &CalculusConfig) -> String {
    format!("alpha = {}, {}", cfg.alpha(), cfg.mode())
}

fn err_text(e: crate::error::Error) -> Option<String> {
    Some(format!("error: {e}"))
}

/// `(uv)w = u(vw)` on random triples.
pub fn associativity(cfg: &CalculusConfig, params: &SuiteParams) -> PropertyReport {
    sampled(
        "assoc",
        format!("(uv)w = u(vw), {}", describe(cfg)),
        params,
        cfg,
        |s| (s.form(), s.form(), s.form()),
        |(u, v, w)| {
            let check = || -> Result<bool> {
                let left = u.mul(v, cfg)?.mul(w, cfg)?;
                let right = u.mul(&v.mul(w, cfg)?, cfg)?;
                Ok(left == right)
            };
            match check() {
                Ok(true) => None,
                Ok(false) => Some(format!("u = {u}; v = {v}; w = {w}")),
                Err(e) => err_text(e),
            }
        },
    )
}

/// `1 u = u 1 = u` on random forms.
pub fn unit(cfg: &CalculusConfig, params: &SuiteParams) -> PropertyReport {
    sampled(
        "unit",
        format!("1u = u1 = u, {}", describe(cfg)),
        params,
        cfg,
        |s| s.form(),
        |u| {
            let one = Form::one(u.mode());
            match (one.mul(u, cfg), u.mul(&one, cfg)) {
                (Ok(a), Ok(b)) if a == *u && b == *u => None,
                (Err(e), _) | (_, Err(e)) => err_text(e),
                _ => Some(format!("u = {u}")),
            }
        },
    )
}

/// `d(uv) = d(u) v + q^|u| u d(v)` for homogeneous `u` and arbitrary `v`.
pub fn q_leibniz(cfg: &CalculusConfig, params: &SuiteParams) -> PropertyReport {
    sampled(
        "leibniz",
        format!("d(uv) = d(u)v + q^|u| u d(v), {}", describe(cfg)),
        params,
        cfg,
        |s| (s.homogeneous_form(), s.form()),
        |(u, v)| {
            let grade = u.homogeneous_grade().unwrap_or(0);
            let check = || -> Result<bool> {
                let lhs = d(&u.mul(v, cfg)?, cfg)?;
                let rhs = d(u, cfg)?
                    .mul(v, cfg)?
                    .add(&u.mul(&d(v, cfg)?, cfg)?.scale(&CycQ::q_pow(grade as i64)))?;
                Ok(lhs == rhs)
            };
            match check() {
                Ok(true) => None,
                Ok(false) => Some(format!("u = {u}; v = {v}")),
                Err(e) => err_text(e),
            }
        },
    )
}

/// `d^3 u = 0`.
pub fn d_cubed(cfg: &CalculusConfig, params: &SuiteParams) -> PropertyReport {
    sampled(
        "d3",
        format!("d^3 u = 0, {}", describe(cfg)),
        params,
        cfg,
        |s| s.form(),
        |u| match d_pow(u, 3, cfg) {
            Ok(r) if r.is_zero() => None,
            Ok(_) => Some(format!("u = {u}")),
            Err(e) => err_text(e),
        },
    )
}

/// `d^2 u = 0` for forms of odd grade.
pub fn odd_d2_closed(cfg: &CalculusConfig, params: &SuiteParams) -> PropertyReport {
    sampled(
        "odd-d2",
        format!("d^2 u = 0 for odd u, {}", describe(cfg)),
        params,
        cfg,
        |s| s.odd_form(),
        |u| match d_pow(u, 2, cfg) {
            Ok(r) if r.is_zero() => None,
            Ok(_) => Some(format!("u = {u}")),
            Err(e) => err_text(e),
        },
    )
}

/// Every monomial of `d(u)` sits one grade above its source term.
pub fn degree_raising(cfg: &CalculusConfig, params: &SuiteParams) -> PropertyReport {
    sampled(
        "degree",
        format!("d raises grade by one, {}", describe(cfg)),
        params,
        cfg,
        |s| s.homogeneous_form(),
        |u| {
            let g = u.homogeneous_grade().unwrap_or(0);
            match d(u, cfg) {
                Ok(r) if r.terms().all(|(m, _)| m.grade() == g + 1) => None,
                Ok(_) => Some(format!("u = {u}")),
                Err(e) => err_text(e),
            }
        },
    )
}

/// Even forms with `h_(k-1) = partial(f_k)` are closed, and adding one to
/// any `h_(k-1)` makes them not closed; both agree with the coefficient test.
pub fn closedness(cfg: &CalculusConfig, params: &SuiteParams) -> PropertyReport {
    sampled(
        "closed",
        format!("partial f_k = h_(k-1) iff closed, {}", describe(cfg)),
        params,
        cfg,
        |s| s.closed_even_form(cfg),
        |u| {
            let check = || -> Result<bool> {
                if !is_closed(u, cfg)? || !even_closed_by_coefficients(u, cfg)? {
                    return Ok(false);
                }
                let k = u.max_d2x().unwrap_or(1).max(1);
                let bump = Form::monomial(Poly::one(u.mode()), 2, k - 1);
                let perturbed = u.add(&bump)?;
                Ok(!is_closed(&perturbed, cfg)? && !even_closed_by_coefficients(&perturbed, cfg)?)
            };
            match check() {
                Ok(true) => None,
                Ok(false) => Some(format!("u = {u}")),
                Err(e) => err_text(e),
            }
        },
    )
}

/// Homogeneity of the `d2x` relation: expected to hold iff `alpha = q`.
/// When `alpha != q` the report passes if the first witness is `x` with
/// bracket `alpha - q`.
pub fn prop2(cfg: &CalculusConfig, max_degree: u32) -> PropertyReport {
    let max_degree = max_degree.max(1);
    let expect_homogeneous = *cfg.alpha() == CycQ::q();
    let holds = check_homogeneity(cfg, max_degree).expect("degree bound is positive");
    let (failures, note) = if expect_homogeneous {
        let note = format!("[partial, xi]_q vanishes on x^1..x^{max_degree}, {}", describe(cfg));
        (usize::from(!holds), note)
    } else {
        let witness = cfg.homogeneity_witness(max_degree);
        let expected = Poly::constant(cfg.alpha().sub(&CycQ::q()), cfg.mode());
        let ok = matches!(&witness, Some((1, b)) if *b == expected);
        let note = format!(
            "FAIL-as-expected: [partial, xi]_q(x) = {} != 0 since alpha != q, {}",
            render(&Form::from_poly(expected)),
            describe(cfg)
        );
        (usize::from(!ok), note)
    };
    let counterexample = (failures > 0).then(|| match cfg.homogeneity_witness(max_degree) {
        Some((m, b)) => format!("[partial, xi]_q(x^{m}) = {}", render(&Form::from_poly(b))),
        None => "bracket vanished on every tested degree".to_string(),
    });
    PropertyReport { name: "prop2", checked: max_degree as usize, failures, note, counterexample }
}

/// `(d2x)^r (dx)^j = q^(2rj) (dx)^j (d2x)^r` for `r <= 4`, `j <= 2`.
pub fn swap(cfg: &CalculusConfig) -> PropertyReport {
    let mode = cfg.mode();
    let mut failures = Vec::new();
    let mut checked = 0;
    for r in 0..=4 {
        for j in 0..=2 {
            checked += 1;
            let word = Form::d2x(mode)
                .pow(r, cfg)
                .and_then(|a| a.mul(&Form::monomial(Poly::one(mode), j, 0), cfg));
            let expected = Form::monomial(Poly::one(mode), j, r).scale(&swap_oracle(r, j));
            match word {
                Ok(w) if w == expected => {}
                Ok(w) => failures.push(format!("(d2x)^{r} (dx)^{j} reduced to {w}, expected {expected}")),
                Err(e) => failures.push(format!("error: {e}")),
            }
        }
    }
    PropertyReport {
        name: "swap",
        checked,
        failures: failures.len(),
        note: format!("(d2x)^r (dx)^j = q^(2rj) (dx)^j (d2x)^r, r <= 4, j <= 2, {}", describe(cfg)),
        counterexample: failures.into_iter().min_by_key(|s| s.len()),
    }
}

/// Runs a named suite.
pub fn run_suite(suite: Suite, cfg: &CalculusConfig, params: &SuiteParams) -> Vec<PropertyReport> {
    match suite {
        Suite::Assoc => vec![associativity(cfg, params), unit(cfg, params)],
        Suite::Leibniz => vec![q_leibniz(cfg, params), degree_raising(cfg, params)],
        Suite::D3 => vec![d_cubed(cfg, params), odd_d2_closed(cfg, params), closedness(cfg, params)],
        Suite::Prop2 => vec![prop2(cfg, params.max_degree)],
        Suite::Swap => vec![swap(cfg)],
        Suite::All => [Suite::Assoc, Suite::Leibniz, Suite::D3, Suite::Prop2, Suite::Swap]
            .into_iter()
            .flat_map(|s| run_suite(s, cfg, params))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteParams {
        SuiteParams { seed: 3, samples: 20, max_degree: 4 }
    }

    #[test]
    fn all_suites_pass_for_generic_alpha() {
        let cfg = CalculusConfig::new(CycQ::from_ints(2, 0));
        for r in run_suite(Suite::All, &cfg, &small()) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn prop2_reports_expected_failure() {
        let r = prop2(&CalculusConfig::new(CycQ::one()), 6);
        assert!(r.passed());
        assert!(r.note.starts_with("FAIL-as-expected"));
        assert!(r.note.contains("(1-q)"));
        assert!(prop2(&CalculusConfig::anyonic(), 10).passed());
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = CalculusConfig::anyonic();
        let a = run_suite(Suite::All, &cfg, &small());
        let b = run_suite(Suite::All, &cfg, &small());
        assert_eq!(a, b);
    }
}
