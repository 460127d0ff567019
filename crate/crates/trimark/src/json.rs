//! JSON helpers shared by the machine-readable outputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::Value;

const SAFE: i64 = (1 << 53) - 1;

/// Integers within the 53-bit safe range become JSON numbers, larger ones
/// become decimal strings.
pub fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if (-SAFE..=SAFE).contains(&v) => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

/// `"num/den"`, or just `"num"` for integers.
pub fn rational_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"num/den"`, `"num"`, or a plain JSON integer.
pub fn parse_rational(v: &Value) -> Option<BigRational> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(i.into())),
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().ok()?;
                    let d: BigInt = d.trim().parse().ok()?;
                    if d == BigInt::from(0) {
                        None
                    } else {
                        Some(BigRational::new(n, d))
                    }
                }
                None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn safe_range_boundary() {
        assert_eq!(int_value(&BigInt::from(SAFE)), Value::from(SAFE));
        assert_eq!(int_value(&BigInt::from(SAFE + 1)), Value::from("9007199254740992"));
        assert_eq!(int_value(&BigInt::from(-SAFE - 1)), Value::from("-9007199254740992"));
    }

    #[test]
    fn rationals_round_trip() {
        let x = BigRational::new((-6).into(), 4.into());
        let s = rational_string(&x);
        assert_eq!(s, "-3/2");
        assert_eq!(parse_rational(&Value::from(s)), Some(x));
        assert_eq!(parse_rational(&Value::from("1/0")), None);
        assert_eq!(parse_rational(&Value::from(3)), Some(BigRational::from_integer(3.into())));
    }
}
