//! JSON encoding for arbitrary-precision integers: a plain number when the
//! value fits in an `i64`, otherwise a decimal string.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BigIntJson(pub BigInt);

impl Serialize for BigIntJson {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for BigIntJson {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = BigIntJson;
            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigIntJson, E> {
                Ok(BigIntJson(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigIntJson, E> {
                Ok(BigIntJson(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigIntJson, E> {
                v.parse().map(BigIntJson).map_err(E::custom)
            }
        }
        deserializer.deserialize_any(V)
    }
}

/// `#[serde(with = "...")]` adapter for `BigInt` fields.
pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        BigIntJson(v.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Ok(BigIntJson::deserialize(d)?.0)
    }
}
