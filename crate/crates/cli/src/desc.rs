//! Code description files and the small flag grammars.
//!
//! Every command reads the same JSON shape: {q, n, cosets: [...]} or
//! {q, n, defining_set: [...], closed: bool}. With `cosets` the set is the
//! union of the named cyclotomic cosets. With `defining_set` the listed
//! residues are taken verbatim when `closed` is true and replaced by their
//! q-ary closure otherwise, so raw (non-closed) patterns stay expressible.

use cyclic_bounds::{DefiningSet, SearchConfig};
use serde_json::Value;

pub struct CodeDesc {
    pub q: u64,
    pub n: u64,
    pub set: DefiningSet,
}

const KNOWN_KEYS: [&str; 5] = ["q", "n", "cosets", "defining_set", "closed"];

pub fn parse_desc(text: &str) -> Result<CodeDesc, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = value
        .as_object()
        .ok_or("description must be a JSON object")?;
    for key in obj.keys() {
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(format!("unknown key {key:?} in description"));
        }
    }
    let q = required_u64(obj, "q")?;
    let n = required_u64(obj, "n")?;
    if !is_prime_power(q) {
        return Err(format!("q = {q} is not a prime power"));
    }
    if n == 0 {
        return Err("n must be positive".into());
    }
    let set = match (obj.get("cosets"), obj.get("defining_set")) {
        (Some(_), Some(_)) => {
            return Err("give either cosets or defining_set, not both".into());
        }
        (None, None) => return Err("missing cosets or defining_set".into()),
        (Some(c), None) => {
            if obj.contains_key("closed") {
                return Err("closed only applies to defining_set".into());
            }
            let reps = int_array(c, "cosets")?;
            DefiningSet::new(n, q, &reps)
                .map_err(|e| e.to_string())?
                .closure()
        }
        (None, Some(d)) => {
            let members = int_array(d, "defining_set")?;
            let closed = match obj.get("closed") {
                Some(Value::Bool(b)) => *b,
                Some(_) => return Err("closed must be a boolean".into()),
                None => false,
            };
            let raw = DefiningSet::new(n, q, &members).map_err(|e| e.to_string())?;
            if closed {
                raw
            } else {
                raw.closure()
            }
        }
    };
    Ok(CodeDesc { q, n, set })
}

fn required_u64(obj: &serde_json::Map<String, Value>, key: &str) -> Result<u64, String> {
    obj.get(key)
        .ok_or(format!("missing key {key:?}"))?
        .as_u64()
        .ok_or(format!("{key} must be a non-negative integer"))
}

fn int_array(value: &Value, key: &str) -> Result<Vec<i64>, String> {
    let arr = value.as_array().ok_or(format!("{key} must be an array"))?;
    arr.iter()
        .map(|v| v.as_i64().ok_or(format!("{key} must contain integers")))
        .collect()
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut q = q;
    let mut p = 0u64;
    for cand in 2..=q {
        if cand * cand > q {
            p = q;
            break;
        }
        if q % cand == 0 {
            p = cand;
            break;
        }
    }
    while q % p == 0 {
        q /= p;
    }
    q == 1
}

/// "lo-hi" or a single value, inclusive on both ends.
pub fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let s = s.trim();
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (a.trim().parse::<u64>(), b.trim().parse::<u64>()),
        None => (s.parse::<u64>(), s.parse::<u64>()),
    };
    let lo = lo.map_err(|_| format!("bad range {s:?}"))?;
    let hi = hi.map_err(|_| format!("bad range {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// Comma-separated clauses "parity:lo-hi" and "rs:lo-hi" naming locator
/// lengths to try. Custom locators are a library feature only.
pub fn parse_families(spec: &str) -> Result<SearchConfig, String> {
    let mut config = SearchConfig {
        parity_lengths: Vec::new(),
        rs_lengths: Vec::new(),
        custom: Vec::new(),
    };
    for clause in spec.split(',') {
        let clause = clause.trim();
        let (name, range) = clause
            .split_once(':')
            .ok_or(format!("family clause {clause:?} must look like name:lo-hi"))?;
        let (lo, hi) = parse_range(range)?;
        match name.trim() {
            "parity" => config.parity_lengths.extend(lo..=hi),
            "rs" => config.rs_lengths.extend(lo..=hi),
            other => return Err(format!("unknown family {other:?} (expected parity or rs)")),
        }
    }
    if config.parity_lengths.is_empty() && config.rs_lengths.is_empty() {
        return Err("family spec names no locators".into());
    }
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_form_closes() {
        let desc = parse_desc(r#"{"q":2,"n":21,"cosets":[1,3,7,9]}"#).unwrap();
        assert_eq!(desc.set.len(), 14);
        assert!(desc.set.is_closed());
    }

    #[test]
    fn verbatim_set_stays_open() {
        let desc =
            parse_desc(r#"{"q":2,"n":13,"defining_set":[1,2,4,5,8,9,11,12],"closed":true}"#)
                .unwrap();
        assert_eq!(desc.set.len(), 8);
        assert!(!desc.set.is_closed());
    }

    #[test]
    fn unclosed_set_is_closed_by_default() {
        let desc = parse_desc(r#"{"q":2,"n":7,"defining_set":[1]}"#).unwrap();
        assert_eq!(desc.set.members(), vec![1, 2, 4]);
    }

    #[test]
    fn rejects_malformed_descriptions() {
        assert!(parse_desc("{").is_err());
        assert!(parse_desc(r#"{"q":2,"n":21}"#).is_err());
        assert!(parse_desc(r#"{"q":2,"n":21,"cosets":[1],"defining_set":[1]}"#).is_err());
        assert!(parse_desc(r#"{"q":2,"n":21,"cosets":[1],"closed":true}"#).is_err());
        assert!(parse_desc(r#"{"q":6,"n":21,"cosets":[1]}"#).is_err());
        assert!(parse_desc(r#"{"q":2,"n":21,"cosets":[1],"extra":1}"#).is_err());
        assert!(parse_desc(r#"{"q":2,"n":21,"cosets":"1"}"#).is_err());
    }

    #[test]
    fn prime_power_test() {
        for q in [2u64, 3, 4, 5, 8, 9, 16, 25, 27, 121] {
            assert!(is_prime_power(q), "{q}");
        }
        for q in [0u64, 1, 6, 10, 12, 15, 100] {
            assert!(!is_prime_power(q), "{q}");
        }
    }

    #[test]
    fn range_grammar() {
        assert_eq!(parse_range("2-20").unwrap(), (2, 20));
        assert_eq!(parse_range("6").unwrap(), (6, 6));
        assert!(parse_range("20-2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn family_grammar() {
        let config = parse_families("parity:2-8,rs:3").unwrap();
        assert_eq!(config.parity_lengths, (2..=8).collect::<Vec<_>>());
        assert_eq!(config.rs_lengths, vec![3]);
        assert!(parse_families("parity:2-8,custom:3").is_err());
        assert!(parse_families("parity").is_err());
    }
}
