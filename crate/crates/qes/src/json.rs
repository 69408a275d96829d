//! Polynomial JSON.
//!
//! A constant is a string holding an exact rational (`"3"`, `"-5/8"`). Any
//! other polynomial is `{"var": name, "coeffs": [...]}` with coefficients
//! lowest degree first, each of which may only mention strictly inner
//! variables. The zero polynomial is `"0"`.

use qes_core::{Error, Poly, Rational, Result, Var};
use serde_json::{json, Value};

pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

pub fn poly_to_json(p: &Poly) -> Value {
    match (p.as_const(), p.main_var()) {
        (Some(c), _) => Value::String(rational_string(c)),
        (None, Some(var)) => json!({
            "var": var.name(),
            "coeffs": p.coeffs().iter().map(poly_to_json).collect::<Vec<_>>(),
        }),
        (None, None) => unreachable!("a non-constant polynomial has a main variable"),
    }
}

pub fn poly_from_json(value: &Value) -> Result<Poly> {
    parse_node(value, None)
}

/// `outer` is the variable of the enclosing object; everything inside must be
/// strictly inner to it.
fn parse_node(value: &Value, outer: Option<Var>) -> Result<Poly> {
    match value {
        Value::String(s) => parse_rational(s).map(Poly::constant),
        Value::Object(map) => {
            let name = map
                .get("var")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Structural("object without a \"var\" string".into()))?;
            let var = Var::from_name(name)
                .ok_or_else(|| Error::Structural(format!("unknown variable {name:?}")))?;
            if let Some(o) = outer {
                if var >= o {
                    return Err(Error::Structural(format!(
                        "{var} nested inside {o}; coefficients must use inner variables"
                    )));
                }
            }
            let coeffs = map
                .get("coeffs")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Structural("object without a \"coeffs\" array".into()))?;
            let coeffs = coeffs
                .iter()
                .map(|c| parse_node(c, Some(var)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Poly::from_coeffs(var, coeffs))
        }
        other => Err(Error::Structural(format!(
            "expected a rational string or an object, got {other}"
        ))),
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    qes_core::rational::parse(s)
        .map_err(|_| Error::Structural(format!("{s:?} is not an exact rational")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for text in ["0", "7/3", "E^2 - 6t E + 5t^2 - 8J", "x^3 + (b/2 - E) x + sqrt_a c"] {
            let p = Poly::parse(text).unwrap();
            let back = poly_from_json(&poly_to_json(&p)).unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn shape() {
        let v = poly_to_json(&Poly::parse("E - 3t").unwrap());
        assert_eq!(
            v,
            json!({"var": "E", "coeffs": [{"var": "t", "coeffs": ["0", "-3"]}, "1"]})
        );
    }

    #[test]
    fn rejects_bad_nesting() {
        let bad = json!({"var": "t", "coeffs": [{"var": "E", "coeffs": ["0", "1"]}]});
        assert!(matches!(poly_from_json(&bad), Err(Error::Structural(_))));
        let bad = json!({"var": "E", "coeffs": [{"var": "E", "coeffs": ["1"]}]});
        assert!(matches!(poly_from_json(&bad), Err(Error::Structural(_))));
        assert!(poly_from_json(&json!({"var": "q", "coeffs": []})).is_err());
        assert!(poly_from_json(&json!(3)).is_err());
        assert!(poly_from_json(&json!("1/0")).is_err());
    }

    #[test]
    fn tolerates_unnormalized_input() {
        let v = json!({"var": "E", "coeffs": ["1", "0", "0"]});
        assert_eq!(poly_from_json(&v).unwrap(), Poly::one());
        let v = json!({"var": "E", "coeffs": []});
        assert_eq!(poly_from_json(&v).unwrap(), Poly::zero());
    }
}
