//! JSON form: an array of terms `[coeff_string, e1, e2, ...]` in canonical
//! order. Coefficients are decimal strings (`"-27"`, `"3/2"`).

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::{Monomial, Poly, Vars};
use crate::coeff::Coeff;
use crate::error::{Error, Result};

struct TermRef<'a, C, V>(&'a Monomial<V>, &'a C);

impl<C: Coeff, V: Vars> Serialize for TermRef<'_, C, V> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(1 + V::arity()))?;
        seq.serialize_element(&self.1.to_string())?;
        for k in 0..V::arity() {
            seq.serialize_element(&self.0.exp(k))?;
        }
        seq.end()
    }
}

impl<C: Coeff, V: Vars> Serialize for Poly<C, V> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&TermRef(m, c))?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff, V: Vars> Deserialize<'de> for Poly<C, V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<Vec<serde_json::Value>> = Vec::deserialize(d)?;
        let mut p = Poly::zero();
        for term in raw {
            if term.len() != 1 + V::arity() {
                return Err(de::Error::custom(format!(
                    "term must have {} entries",
                    1 + V::arity()
                )));
            }
            let coeff = term[0]
                .as_str()
                .ok_or_else(|| de::Error::custom("coefficient must be a string"))?
                .parse::<C>()
                .map_err(|_| de::Error::custom("unparsable coefficient"))?;
            let exps = term[1..]
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|e| u32::try_from(e).ok())
                        .ok_or_else(|| de::Error::custom("exponent must be a non-negative integer"))
                })
                .collect::<std::result::Result<Vec<u32>, _>>()?;
            p.add_term(Monomial::from_exponents(&exps), coeff);
        }
        Ok(p)
    }
}

/// Parses a Chern polynomial written as a sum of terms such as
/// `12c1^4 - 90c1^2c2 + 189c2^2` or `4*c1^3 - 6*c1*c2`.
pub(super) fn parse_chern<C: Coeff>(s: &str) -> Result<Poly<C, super::Chern>> {
    let bad = || Error::DomainError(format!("cannot parse polynomial {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    let mut out = Poly::zero();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ => (false, rest),
        };
        if body.is_empty() {
            return Err(bad());
        }
        let end = body[1..].find(['+', '-']).map_or(body.len(), |k| k + 1);
        let (term, tail) = body.split_at(end);
        rest = tail;

        let digits_end = term.find(|ch: char| !(ch.is_ascii_digit() || ch == '/')).unwrap_or(term.len());
        let (num, vars) = term.split_at(digits_end);
        let mut coeff = if num.is_empty() { C::one() } else { num.parse::<C>().map_err(|_| bad())? };
        if neg {
            coeff = -coeff;
        }
        let mut exps = [0u32; 2];
        let mut v = vars.trim_start_matches('*');
        while !v.is_empty() {
            let idx = if let Some(r) = v.strip_prefix("c1") {
                v = r;
                0
            } else if let Some(r) = v.strip_prefix("c2") {
                v = r;
                1
            } else {
                return Err(bad());
            };
            let mut e = 1;
            if let Some(r) = v.strip_prefix('^') {
                let k = r.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(r.len());
                e = r[..k].parse::<u32>().map_err(|_| bad())?;
                v = &r[k..];
            }
            exps[idx] += e;
            v = v.trim_start_matches('*');
        }
        out.add_term(Monomial::from_exponents(&exps), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use crate::poly::{QChern, ZChern};

    #[test]
    fn json_layout() {
        let p = ZChern::parse("9c1^2 - 27c2").unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"[["9",2,0],["-27",0,1]]"#);
        let q = ZChern::parse("c2 + 1 + c1").unwrap();
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"[["1",0,0],["1",1,0],["1",0,1]]"#);
    }

    #[test]
    fn json_round_trip_rational() {
        let p = QChern::parse("3/2c1^3 - 1/4c1c2").unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[["3/2",3,0],["-1/4",1,1]]"#);
        let back: QChern = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_malformed_terms() {
        assert!(serde_json::from_str::<ZChern>(r#"[["1",0]]"#).is_err());
        assert!(serde_json::from_str::<ZChern>(r#"[[1,0,0]]"#).is_err());
        assert!(ZChern::parse("c3").is_err());
    }
}
