//! JSON wire format for forms:
//!
//! ```text
//! {"mode":"generic"|"anyonic","terms":[{"dx":k,"d2x":m,"coeff":[[degree,[a_num,a_den,b_num,b_den]],...]},...]}
//! ```
//!
//! Terms appear in normal-form order and coefficients by ascending degree.
//! Integers are written exactly, whatever their size.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::cyclotomic::{CycQ, Rational};
use crate::error::{Error, Result};
use crate::forms::{Form, FormMonomial};
use crate::polynomial::{Mode, Poly};

fn big(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

fn rational_pair(r: &Rational) -> [Value; 2] {
    [big(r.numer()), big(r.denom())]
}

pub fn to_value(u: &Form) -> Value {
    let terms: Vec<Value> = u
        .terms()
        .map(|(mon, f)| {
            let coeff: Vec<Value> = f
                .terms()
                .map(|(deg, c)| {
                    let [an, ad] = rational_pair(c.re());
                    let [bn, bd] = rational_pair(c.q_part());
                    json!([deg, [an, ad, bn, bd]])
                })
                .collect();
            let mut obj = Map::new();
            obj.insert("dx".into(), json!(mon.dx()));
            obj.insert("d2x".into(), json!(mon.d2x()));
            obj.insert("coeff".into(), Value::Array(coeff));
            Value::Object(obj)
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("mode".into(), json!(u.mode().name()));
    obj.insert("terms".into(), Value::Array(terms));
    Value::Object(obj)
}

/// Compact, byte-stable serialization.
pub fn to_json(u: &Form) -> String {
    to_value(u).to_string()
}

fn bad(msg: &str) -> Error {
    Error::Format(msg.to_string())
}

fn as_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| bad("expected an integer")),
        _ => Err(bad("expected an integer")),
    }
}

fn as_u32(v: &Value, what: &str) -> Result<u32> {
    v.as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Error::Format(format!("{what} must be a nonnegative integer")))
}

fn as_rational(num: &Value, den: &Value) -> Result<Rational> {
    let den = as_bigint(den)?;
    if den.sign() != num_bigint::Sign::Plus {
        return Err(bad("denominators must be positive"));
    }
    Ok(Rational::new(as_bigint(num)?, den))
}

pub fn from_value(v: &Value) -> Result<Form> {
    let mode = match v.get("mode").and_then(Value::as_str) {
        Some("generic") => Mode::Generic,
        Some("anyonic") => Mode::Anyonic,
        _ => return Err(bad("mode must be \"generic\" or \"anyonic\"")),
    };
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let dx = as_u32(t.get("dx").unwrap_or(&Value::Null), "dx")?;
        let d2x = as_u32(t.get("d2x").unwrap_or(&Value::Null), "d2x")?;
        let mon = FormMonomial::new(dx, d2x).ok_or_else(|| bad("dx power must be at most 2"))?;
        let coeff = t.get("coeff").and_then(Value::as_array).ok_or_else(|| bad("missing coeff"))?;
        let mut poly_terms = Vec::with_capacity(coeff.len());
        for entry in coeff {
            let pair = entry.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("coefficient entries are [degree, scalar]"))?;
            let deg = as_u32(&pair[0], "degree")?;
            let s = pair[1].as_array().filter(|s| s.len() == 4).ok_or_else(|| bad("scalars have four components"))?;
            let c = CycQ::new(as_rational(&s[0], &s[1])?, as_rational(&s[2], &s[3])?);
            poly_terms.push((deg, c));
        }
        out.push((mon, Poly::from_terms(poly_terms, mode)));
    }
    Form::from_terms(out, mode)
}

pub fn from_json(s: &str) -> Result<Form> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    from_value(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::CalculusConfig;
    use crate::parser::parse;

    #[test]
    fn exact_layout() {
        let cfg = CalculusConfig::new(CycQ::from_ints(1, 0));
        let u = parse("d2x*x + 1/2", &cfg).unwrap();
        assert_eq!(
            to_json(&u),
            r#"{"mode":"generic","terms":[{"dx":0,"d2x":0,"coeff":[[0,[1,2,0,1]]]},{"dx":2,"d2x":0,"coeff":[[0,[1,1,-1,1]]]},{"dx":0,"d2x":1,"coeff":[[1,[1,1,0,1]]]}]}"#
        );
        assert_eq!(to_json(&Form::zero(Mode::Anyonic)), r#"{"mode":"anyonic","terms":[]}"#);
    }

    #[test]
    fn big_integers_survive() {
        let cfg = CalculusConfig::new(CycQ::from_ints(2, 0));
        let u = parse("(123456789012345678901234567891/7)*x^3*dx", &cfg).unwrap();
        let s = to_json(&u);
        assert!(s.contains("123456789012345678901234567891"));
        assert_eq!(from_json(&s).unwrap(), u);
    }

    #[test]
    fn rejects_malformed() {
        assert!(from_json("{}").is_err());
        assert!(from_json(r#"{"mode":"generic","terms":[{"dx":3,"d2x":0,"coeff":[]}]}"#).is_err());
        assert!(from_json(r#"{"mode":"generic","terms":[{"dx":0,"d2x":0,"coeff":[[0,[1,0,0,1]]]}]}"#).is_err());
        assert!(from_json("not json").is_err());
    }
}
