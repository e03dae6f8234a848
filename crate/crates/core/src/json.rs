//! JSON encodings.
//!
//! Polynomials are lists of `{"exp": [...], "num": "...", "den": "..."}` in
//! increasing term order; compositions are `{"lo": .., "parts": [...]}`;
//! partitions and one-variable polynomials are plain arrays.

use num_bigint::BigInt;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::glaction::{KeySituation, WeightFamily};
use crate::poly::{Monomial, Poly, Rational};
use crate::quotient::QuotientElement;
use crate::traces::ModuleHom;

#[derive(Serialize, Deserialize)]
struct Term {
    exp: Vec<u16>,
    num: String,
    den: String,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&Term { exp: m.exps().to_vec(), num: c.numer().to_string(), den: c.denom().to_string() })?;
        }
        seq.end()
    }
}

/// Reads a polynomial in `nvars` variables from its term list.
pub fn poly_from_json(value: &Value, nvars: usize) -> Result<Poly> {
    let terms: Vec<Term> = serde_json::from_value(value.clone()).map_err(|e| Error::InvalidInput(format!("bad polynomial JSON: {e}")))?;
    let mut out = Poly::zero(nvars);
    for t in terms {
        if t.exp.len() != nvars {
            return Err(Error::SizeMismatch(t.exp.len(), nvars));
        }
        let parse = |s: &str| s.parse::<BigInt>().map_err(|_| Error::InvalidInput(format!("bad integer {s:?}")));
        let den = parse(&t.den)?;
        if den == BigInt::from(0) {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        out.add_term(Monomial::from_exps(&t.exp), Rational::new(parse(&t.num)?, den));
    }
    Ok(out)
}

impl Serialize for QuotientElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("algebra", self.quotient().label())?;
        map.serialize_entry("rep", self.rep())?;
        map.end()
    }
}

impl Serialize for WeightFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let components: Vec<Value> =
            self.components().iter().map(|(nu, z)| json!({ "nu": nu, "degree": z.rep().degree(), "element": z.rep() })).collect();
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("window", &self.window)?;
        map.serialize_entry("algebra", &self.kind)?;
        map.serialize_entry("components", &components)?;
        map.end()
    }
}

impl Serialize for KeySituation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(6))?;
        map.serialize_entry("i", &self.i)?;
        map.serialize_entry("nu", &self.nu)?;
        map.serialize_entry("nu_prime", &self.nu_prime)?;
        map.serialize_entry("a", &self.a)?;
        map.serialize_entry("b", &self.b)?;
        map.serialize_entry("k", &self.k)?;
        map.end()
    }
}

impl Serialize for ModuleHom {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let values: Vec<&Poly> = self.values().iter().map(QuotientElement::rep).collect();
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("key_situation", &self.ks)?;
        map.serialize_entry("over", if self.base == crate::glaction::Side::Nu { "nu" } else { "nu_prime" })?;
        map.serialize_entry("values_on_powers", &values)?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::shapes::{Composition, Partition};
    use crate::tableaux::IntPolynomial;

    #[test]
    fn composition_round_trip_normalizes() {
        let c = Composition::new(1, vec![1, 2, 1]);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v, json!({"lo": 1, "parts": [1, 2, 1]}));
        let padded: Composition = serde_json::from_value(json!({"lo": 0, "parts": [0, 1, 2, 1, 0]})).unwrap();
        assert_eq!(padded, c);
    }

    #[test]
    fn partitions_and_series_are_arrays() {
        assert_eq!(serde_json::to_value(Partition::new(vec![1, 3])).unwrap(), json!([3, 1]));
        let p: Partition = serde_json::from_value(json!([1, 0, 2])).unwrap();
        assert_eq!(p, Partition::new(vec![2, 1]));
        assert_eq!(serde_json::to_value(IntPolynomial::new(vec![1, 0, 2])).unwrap(), json!([1, 0, 2]));
    }

    #[test]
    fn poly_round_trip() {
        let f = &Poly::var(2, 0).scale(&rat(-3, 4)) + &Poly::one(2);
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v, json!([{"exp": [0, 0], "num": "1", "den": "1"}, {"exp": [1, 0], "num": "-3", "den": "4"}]));
        assert_eq!(poly_from_json(&v, 2).unwrap(), f);
        assert!(poly_from_json(&v, 3).is_err());
        assert!(poly_from_json(&json!([{"exp": [0, 0], "num": "1", "den": "0"}]), 2).is_err());
        assert_eq!(poly_from_json(&json!([]), 4).unwrap(), Poly::zero(4));
    }
}
