//! JSON encodings of tracts, elements, Grassmann-Plücker functions, vectors and flags.
//!
//! Elements are written as `{"v": ...}`; on input the bare encoding is accepted too.
//! Rationals are written as `"a/b"`, or `"a"` when the denominator is 1.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value as Json};

use crate::error::{Error, Result};
use crate::flag::FlagMatroid;
use crate::matroid::{CircuitFamily, FMatroid, GpFunction, TractVector};
use crate::subset;
use crate::tract::{Element, MorphismKind, Tract, TractMorphism, Value};

fn bad(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("at {path}: {msg}"))
}

/// Parses JSON text; syntax errors carry line and column.
pub fn parse(text: &str) -> Result<Json> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("{} at line {} column {}", e, e.line(), e.column()))
    })
}

pub fn tract_to_json(t: Tract) -> Json {
    match t {
        Tract::FiniteField(p) => json!({"kind": "finite_field", "p": p}),
        _ => json!({"kind": t.name()}),
    }
}

/// Accepts `{"kind": .., "p": ..}` or a name such as `"sign"`, `"finite_field(3)"`.
pub fn tract_from_json(v: &Json, path: &str) -> Result<Tract> {
    match v {
        Json::String(s) => tract_from_name(s).map_err(|e| bad(path, e)),
        Json::Object(o) => {
            let kind = o
                .get("kind")
                .and_then(Json::as_str)
                .ok_or_else(|| bad(path, "missing string field \"kind\""))?;
            match kind {
                "finite_field" => {
                    let p = o
                        .get("p")
                        .and_then(Json::as_u64)
                        .ok_or_else(|| bad(path, "finite_field needs an integer \"p\""))?;
                    Tract::finite_field(u32::try_from(p).map_err(|_| Error::BadModulus(u32::MAX))?)
                }
                _ => tract_from_name(kind).map_err(|e| bad(path, e)),
            }
        }
        _ => Err(bad(path, "expected a tract descriptor")),
    }
}

pub fn tract_from_name(s: &str) -> Result<Tract> {
    let s = s.trim();
    let simple = match s {
        "krasner" | "K" => Some(Tract::Krasner),
        "sign" | "S" => Some(Tract::Sign),
        "regular_partial" | "regular" | "F1pm" => Some(Tract::RegularPartial),
        "rationals" | "Q" => Some(Tract::Rationals),
        "tropical" | "T" => Some(Tract::Tropical),
        "phase" | "P" => Some(Tract::Phase),
        "triangle" | "V" => Some(Tract::Triangle),
        _ => None,
    };
    if let Some(t) = simple {
        return Ok(t);
    }
    let p = s
        .strip_prefix("finite_field(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| s.strip_prefix("finite_field:"))
        .or_else(|| s.strip_prefix("F").filter(|r| r.chars().all(|c| c.is_ascii_digit())))
        .ok_or_else(|| Error::Parse(format!("unknown tract {s:?}")))?;
    let p: u32 = p.parse().map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
    Tract::finite_field(p)
}

fn rational_to_json(q: &BigRational) -> Json {
    if q.denom().is_one() {
        Json::String(q.numer().to_string())
    } else {
        Json::String(format!("{}/{}", q.numer(), q.denom()))
    }
}

fn rational_from_json(v: &Json, path: &str) -> Result<BigRational> {
    match v {
        Json::String(s) => {
            let q = BigRational::from_str(s.trim()).map_err(|_| bad(path, format!("bad rational {s:?}")))?;
            Ok(q)
        }
        Json::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .ok_or_else(|| bad(path, "rationals must be integers or \"a/b\" strings")),
        _ => Err(bad(path, "expected a rational")),
    }
}

fn encoding(e: &Element) -> Json {
    match (e.tract(), e.value()) {
        (Tract::Phase, Value::Zero) => json!({"zero": true}),
        (Tract::Phase, Value::Angle(a)) => json!({"angle": rational_to_json(a)}),
        (Tract::Rationals | Tract::Tropical | Tract::Triangle, Value::Zero) => json!("0"),
        (_, Value::Zero) => json!(0),
        (_, Value::Unit) => json!(1),
        (_, Value::Signed(s)) => json!(s),
        (_, Value::Residue(r)) => json!(r),
        (_, Value::Rational(q)) => rational_to_json(q),
        (_, Value::Angle(a)) => rational_to_json(a),
    }
}

pub fn element_to_json(e: &Element) -> Json {
    json!({"v": encoding(e)})
}

pub fn element_from_json(t: Tract, v: &Json, path: &str) -> Result<Element> {
    let enc = match v {
        Json::Object(o) if o.len() == 1 && o.contains_key("v") => &o["v"],
        _ => v,
    };
    let int = || enc.as_i64().ok_or_else(|| bad(path, format!("expected an integer for {t}")));
    let wrap = |r: Result<Element>| r.map_err(|e| bad(path, e));
    match t {
        Tract::Krasner => match int()? {
            0 => Ok(Element::krasner(false)),
            1 => Ok(Element::krasner(true)),
            k => Err(bad(path, format!("krasner element must be 0 or 1, got {k}"))),
        },
        Tract::Sign | Tract::RegularPartial => {
            let s = int()?;
            let s = i8::try_from(s).map_err(|_| bad(path, format!("{s} is not a sign")))?;
            wrap(Element::signed(t, s))
        }
        Tract::FiniteField(p) => {
            let r = int()?;
            let r = u32::try_from(r).map_err(|_| bad(path, format!("residue {r} out of range")))?;
            wrap(Element::residue(p, r))
        }
        Tract::Rationals => Ok(Element::rational(rational_from_json(enc, path)?)),
        Tract::Tropical | Tract::Triangle => wrap(Element::nonnegative(t, rational_from_json(enc, path)?)),
        Tract::Phase => {
            let o = enc.as_object().ok_or_else(|| bad(path, "phase elements are {\"zero\": true} or {\"angle\": \"a/b\"}"))?;
            if o.get("zero") == Some(&Json::Bool(true)) && o.len() == 1 {
                Ok(Tract::Phase.zero())
            } else if let (Some(a), 1) = (o.get("angle"), o.len()) {
                Ok(Element::phase(rational_from_json(a, &format!("{path}.angle"))?))
            } else {
                Err(bad(path, "phase elements are {\"zero\": true} or {\"angle\": \"a/b\"}"))
            }
        }
    }
}

fn field<'a>(o: &'a Map<String, Json>, key: &str, path: &str) -> Result<&'a Json> {
    o.get(key).ok_or_else(|| bad(path, format!("missing field {key:?}")))
}

fn usize_field(o: &Map<String, Json>, key: &str, path: &str) -> Result<usize> {
    field(o, key, path)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| bad(path, format!("field {key:?} must be a nonnegative integer")))
}

fn object<'a>(v: &'a Json, path: &str) -> Result<&'a Map<String, Json>> {
    v.as_object().ok_or_else(|| bad(path, "expected an object"))
}

pub fn gp_to_json(g: &GpFunction) -> Json {
    let mut values = Map::new();
    for (mask, v) in g.entries() {
        if !v.is_zero() {
            values.insert(subset::format_key(mask), element_to_json(v));
        }
    }
    json!({
        "n": g.ground_size(),
        "r": g.rank(),
        "tract": tract_to_json(g.tract()),
        "values": values,
    })
}

/// Parses a subset key such as `"1,3"` (1-based, strictly increasing; empty for rank 0).
pub fn parse_key(key: &str, n: usize, r: usize) -> std::result::Result<subset::Mask, String> {
    let elems: Vec<usize> = if key.trim().is_empty() {
        Vec::new()
    } else {
        key.split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| format!("bad element {s:?}")))
            .collect::<std::result::Result<_, _>>()?
    };
    if elems.len() != r {
        return Err(format!("key {key:?} has {} entries, rank is {r}", elems.len()));
    }
    if elems.windows(2).any(|w| w[0] >= w[1]) {
        return Err(format!("key {key:?} is not strictly increasing"));
    }
    if elems.iter().any(|&e| e == 0 || e > n) {
        return Err(format!("key {key:?} leaves 1..{n}"));
    }
    Ok(elems.iter().fold(0, |m, &e| m | 1 << (e - 1)))
}

/// Parses a subset given as a list of 1-based elements.
pub fn parse_subset(v: &Json, n: usize, path: &str) -> Result<subset::Mask> {
    let arr = v.as_array().ok_or_else(|| bad(path, "expected a list of elements"))?;
    let mut mask = 0;
    for (i, e) in arr.iter().enumerate() {
        let e = e.as_u64().ok_or_else(|| bad(&format!("{path}[{i}]"), "expected an element"))? as usize;
        if e == 0 || e > n {
            return Err(bad(&format!("{path}[{i}]"), format!("element {e} leaves 1..{n}")));
        }
        mask |= 1 << (e - 1);
    }
    Ok(mask)
}

pub fn gp_from_json(v: &Json, path: &str) -> Result<GpFunction> {
    let o = object(v, path)?;
    let n = usize_field(o, "n", path)?;
    let r = usize_field(o, "r", path)?;
    let tract = tract_from_json(field(o, "tract", path)?, &format!("{path}.tract"))?;
    if n == 0 || n > subset::MAX_GROUND || r > n {
        return Err(bad(path, format!("rank {r} on {n} elements is out of range")));
    }
    let values = object(field(o, "values", path)?, &format!("{path}.values"))?;
    let mut out = vec![tract.zero(); subset::binomial(n, r)];
    for (key, val) in values {
        let vpath = format!("{path}.values[{key:?}]");
        let mask = parse_key(key, n, r).map_err(|e| bad(&vpath, e))?;
        out[subset::lex_rank(mask, n)] = element_from_json(tract, val, &vpath)?;
    }
    GpFunction::new(n, r, tract, out)
}

pub fn matroid_to_json(m: &FMatroid) -> Json {
    gp_to_json(m.gp())
}

/// Parses and validates a matroid; the result is in canonical form.
pub fn matroid_from_json(v: &Json, path: &str) -> Result<FMatroid> {
    FMatroid::new(gp_from_json(v, path)?)
}

pub fn vector_to_json(x: &TractVector) -> Json {
    json!({
        "tract": tract_to_json(x.tract()),
        "n": x.len(),
        "coords": x.coords().iter().map(element_to_json).collect::<Vec<_>>(),
    })
}

pub fn vector_from_json(v: &Json, path: &str) -> Result<TractVector> {
    let o = object(v, path)?;
    let tract = tract_from_json(field(o, "tract", path)?, &format!("{path}.tract"))?;
    let n = usize_field(o, "n", path)?;
    let coords = field(o, "coords", path)?
        .as_array()
        .ok_or_else(|| bad(path, "\"coords\" must be a list"))?;
    if coords.len() != n {
        return Err(bad(path, format!("{} coordinates for n = {n}", coords.len())));
    }
    let coords = coords
        .iter()
        .enumerate()
        .map(|(i, c)| element_from_json(tract, c, &format!("{path}.coords[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    TractVector::new(tract, coords)
}

pub fn family_to_json(c: &CircuitFamily) -> Json {
    json!({
        "tract": tract_to_json(c.tract()),
        "n": c.ground_size(),
        "representatives": c.representatives().iter().map(vector_to_json).collect::<Vec<_>>(),
    })
}

pub fn family_from_json(v: &Json, path: &str) -> Result<CircuitFamily> {
    let o = object(v, path)?;
    let tract = tract_from_json(field(o, "tract", path)?, &format!("{path}.tract"))?;
    let n = usize_field(o, "n", path)?;
    let reps = field(o, "representatives", path)?
        .as_array()
        .ok_or_else(|| bad(path, "\"representatives\" must be a list"))?
        .iter()
        .enumerate()
        .map(|(i, r)| vector_from_json(r, &format!("{path}.representatives[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    CircuitFamily::new(tract, n, reps)
}

pub fn flag_to_json(f: &FlagMatroid) -> Json {
    json!({
        "tract": tract_to_json(f.tract()),
        "n": f.ground_size(),
        "components": f.components().iter().map(matroid_to_json).collect::<Vec<_>>(),
    })
}

/// Parses a flag; each component is validated as a matroid, the flag relations are not.
pub fn flag_from_json(v: &Json, path: &str) -> Result<FlagMatroid> {
    let o = object(v, path)?;
    let tract = tract_from_json(field(o, "tract", path)?, &format!("{path}.tract"))?;
    let n = usize_field(o, "n", path)?;
    let comps = field(o, "components", path)?
        .as_array()
        .ok_or_else(|| bad(path, "\"components\" must be a list"))?
        .iter()
        .enumerate()
        .map(|(i, c)| matroid_from_json(c, &format!("{path}.components[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    for c in &comps {
        if c.tract() != tract {
            return Err(Error::TractMismatch { expected: tract, found: c.tract() });
        }
        if c.ground_size() != n {
            return Err(Error::GroundMismatch(n, c.ground_size()));
        }
    }
    FlagMatroid::new(comps)
}

/// Morphism names: `terminal`, `regular`, `sign_to_k`, `field_to_k`, `rationals_to_sign`,
/// `rationals_to_tropical` (trivial) or `rationals_to_tropical(p)`, `ff_inclusion`.
pub fn morphism_from_name(name: &str, source: Tract, target: Option<Tract>) -> Result<TractMorphism> {
    let name = name.trim();
    let (kind, default_target) = match name {
        "terminal" | "terminal_to_K" | "terminal_to_k" => (MorphismKind::TerminalToK, Some(Tract::Krasner)),
        "regular" | "regular_to_any" => (MorphismKind::RegularToAny, None),
        "sign_to_K" | "sign_to_k" => (MorphismKind::SignToK, Some(Tract::Krasner)),
        "field_to_K" | "field_to_k" => (MorphismKind::FieldToK, Some(Tract::Krasner)),
        "rationals_to_sign" => (MorphismKind::RationalsToSign, Some(Tract::Sign)),
        "rationals_to_tropical" => (MorphismKind::RationalsToTropical(None), Some(Tract::Tropical)),
        "ff_inclusion" => (MorphismKind::FfInclusion, Some(source)),
        _ => {
            let p = name
                .strip_prefix("rationals_to_tropical(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|p| p.parse::<u32>().ok())
                .ok_or_else(|| Error::Parse(format!("unknown morphism {name:?}")))?;
            (MorphismKind::RationalsToTropical(Some(p)), Some(Tract::Tropical))
        }
    };
    let target = target
        .or(default_target)
        .ok_or_else(|| Error::Parse(format!("morphism {name:?} needs an explicit target tract")))?;
    TractMorphism::new(kind, source, target)
}
