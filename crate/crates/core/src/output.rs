//! Machine-readable output: every rational is rendered as a pair of
//! decimal strings `{"num": .., "den": ..}` and never as a float.

use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};

/// Wire form of a rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDoc {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalDoc {
    fn from(v: &Rational) -> Self {
        RationalDoc { num: v.numer().to_string(), den: v.denom().to_string() }
    }
}

impl RationalDoc {
    /// Parses back to a rational; rejects zero or malformed denominators.
    pub fn to_rational(&self) -> crate::Result<Rational> {
        arith::parse_rational(&format!("{}/{}", self.num, self.den))
    }
}

/// `#[serde(with = "rational")]` for [`Rational`] fields.
pub mod rational {
    use super::*;
    use serde::{de::Error as _, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        RationalDoc::from(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        RationalDoc::deserialize(d)?.to_rational().map_err(D::Error::custom)
    }
}

/// `#[serde(with = "opt_rational")]` for `Option<Rational>` fields.
pub mod opt_rational {
    use super::*;
    use serde::{de::Error as _, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(RationalDoc::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<RationalDoc>::deserialize(d)?
            .map(|doc| doc.to_rational().map_err(D::Error::custom))
            .transpose()
    }
}

/// Top-level JSON document: `{"command": .., "params": .., "result": ..}`.
#[derive(Debug, Clone, Serialize)]
pub struct Document<P: Serialize, R: Serialize> {
    pub command: &'static str,
    pub params: P,
    pub result: R,
}

impl<P: Serialize, R: Serialize> Document<P, R> {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialise");
        s.push('\n');
        s
    }
}

/// Comma-separated rows with a header. Cells never contain commas
/// (integers, `num/den` rationals, booleans), so no quoting is needed.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use proptest::prelude::*;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Wrapper {
        #[serde(with = "rational")]
        v: Rational,
    }

    #[test]
    fn wire_form() {
        let json = serde_json::to_string(&Wrapper { v: ratio(-691, 2730) }).unwrap();
        assert_eq!(json, r#"{"v":{"num":"-691","den":"2730"}}"#);
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let bad = r#"{"v":{"num":"1","den":"0"}}"#;
        assert!(serde_json::from_str::<Wrapper>(bad).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip_is_canonical(num in any::<i64>(), den in 1i64..i64::MAX) {
            let v = ratio(num, den);
            let json = serde_json::to_string(&Wrapper { v: v.clone() }).unwrap();
            let back: Wrapper = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back.v, v);
        }
    }
}
