//! Exact numbers in JSON: integers that fit in 53 bits are numbers, larger
//! integers are decimal strings and non-integral rationals are "p/q" strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Deserialize;
use serde_json::Value;

use krawtchouk::scalar;
use krawtchouk::WeightDistribution;

use crate::CliError;

const SAFE: i64 = (1 << 53) - 1;

pub fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) if (-SAFE..=SAFE).contains(&x) => Value::from(x),
        _ => Value::String(v.to_string()),
    }
}

pub fn rational(v: &BigRational) -> Value {
    if v.denom().is_one() {
        int(v.numer())
    } else {
        Value::String(scalar::format(v))
    }
}

pub fn ints<'a>(vs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(vs.into_iter().map(int).collect())
}

pub fn dist(d: &WeightDistribution) -> Value {
    ints(d.counts())
}

/// An integer given either as a JSON number or as a decimal string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Count {
    Number(i64),
    Text(String),
}

impl Count {
    pub fn value(&self) -> Result<BigInt, CliError> {
        match self {
            Count::Number(n) => Ok(BigInt::from(*n)),
            Count::Text(s) => parse_int(s),
        }
    }
}

pub fn parse_int(s: &str) -> Result<BigInt, CliError> {
    s.trim().parse().map_err(|_| CliError::Input(format!("{s:?} is not an integer")))
}

/// Weights as a JSON array (`[1,0,0,1]`) or a comma-separated list
/// (`1,0,0,1`).
pub fn parse_weights(s: &str) -> Result<Vec<BigInt>, CliError> {
    let t = s.trim();
    if t.starts_with('[') {
        let counts: Vec<Count> =
            serde_json::from_str(t).map_err(|e| CliError::Input(format!("weights: {e}")))?;
        return counts.iter().map(Count::value).collect();
    }
    t.split(',').map(parse_int).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_switch_to_strings_past_53_bits() {
        assert_eq!(int(&BigInt::from(SAFE)), Value::from(SAFE));
        assert_eq!(int(&BigInt::from(SAFE + 1)), Value::String((SAFE + 1).to_string()));
        assert_eq!(int(&BigInt::from(-7)), Value::from(-7));
    }

    #[test]
    fn rationals() {
        assert_eq!(rational(&scalar::ratio(1, 2)), Value::String("1/2".into()));
        assert_eq!(rational(&scalar::ratio(-6, 3)), Value::from(-2));
    }

    #[test]
    fn weight_formats() {
        let expected: Vec<BigInt> = [1, 0, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(parse_weights("[1, 0, 0, 1]").unwrap(), expected);
        assert_eq!(parse_weights("1,0,0,1").unwrap(), expected);
        assert_eq!(parse_weights(r#"[1, "0", 0, "1"]"#).unwrap(), expected);
        assert!(parse_weights("1,x").is_err());
    }
}
