//! Bundled scenarios: scripted computations compared against checked-in expectations.

use std::collections::BTreeMap;

use flagtract::json;
use flagtract::{quotient_check, Error, FMatroid, FlagMatroid, FlagMode};
use serde_json::{json, Value as Json};

use crate::{Output, Run};

const FIXTURES: [(&str, &str); 4] = [
    ("phase-counterexample", include_str!("../fixtures/scenarios/phase-counterexample.json")),
    ("k-rank-1-2", include_str!("../fixtures/scenarios/k-rank-1-2.json")),
    ("flags-of-minors-u23", include_str!("../fixtures/scenarios/flags-of-minors-u23.json")),
    ("lift-roundtrip", include_str!("../fixtures/scenarios/lift-roundtrip.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

fn get<'a>(fixture: &'a Json, key: &str) -> Result<&'a Json, Error> {
    fixture.get(key).ok_or_else(|| Error::Parse(format!("scenario fixture lacks {key:?}")))
}

fn quotient(big: &FMatroid, small: &FMatroid) -> Result<bool, Error> {
    Ok(quotient_check(big, small)?.ok)
}

fn phase_counterexample(fx: &Json) -> Result<BTreeMap<String, Json>, Error> {
    let ms = get(fx, "matroids")?;
    let m = |k: &str| json::matroid_from_json(get(ms, k)?, &format!("$.matroids.{k}"));
    let (m1, m2, m3) = (m("M1")?, m("M2")?, m("M3")?);
    let w = json::vector_from_json(get(fx, "w")?, "$.w")?;
    let triple = FlagMatroid::new(vec![m1.clone(), m2.clone(), m3.clone()])?;
    Ok(BTreeMap::from([
        ("M2↠M1".into(), json!(quotient(&m2, &m1)?)),
        ("M3↠M2".into(), json!(quotient(&m3, &m2)?)),
        ("M3↠M1".into(), json!(quotient(&m3, &m1)?)),
        ("w_covector_M2".into(), json!(m2.is_covector(&w)?)),
        ("w_covector_M3".into(), json!(m3.is_covector(&w)?)),
        ("flag_M1_M2_M3".into(), json!(triple.validate(FlagMode::Pairwise)?.ok)),
    ]))
}

fn k_rank_one_two(fx: &Json) -> Result<BTreeMap<String, Json>, Error> {
    let f = json::flag_from_json(get(fx, "flag")?, "$.flag")?;
    let del = json::parse_subset(get(fx, "delete")?, f.ground_size(), "$.delete")?;
    let c = f.components();
    Ok(BTreeMap::from([
        ("N↠M".into(), json!(quotient(&c[1], &c[0])?)),
        ("flag_valid".into(), json!(f.validate(FlagMode::Pairwise)?.ok)),
        ("crypto_check".into(), json!(f.cryptomorphic_check().ok)),
        ("deletion_ranks".into(), json!(f.minor(del, 0)?.ranks())),
        ("dual_ranks".into(), json!(f.dual().ranks())),
    ]))
}

fn flags_of_minors_u23(fx: &Json) -> Result<BTreeMap<String, Json>, Error> {
    let m = json::matroid_from_json(get(fx, "matroid")?, "$.matroid")?;
    let n = get(fx, "n")?.as_u64().ok_or_else(|| Error::Parse("n must be an integer".into()))? as usize;
    let cuts: Vec<usize> = serde_json::from_value(get(fx, "cuts")?.clone())
        .map_err(|e| Error::Parse(format!("cuts: {e}")))?;
    let expected = json::flag_from_json(get(fx, "expected_flag")?, "$.expected_flag")?;
    let f = flagtract::flags_of_minors(&m, n, &cuts)?;
    Ok(BTreeMap::from([
        ("flag_valid".into(), json!(f.validate(FlagMode::Pairwise)?.ok)),
        ("ranks".into(), json!(f.ranks())),
        ("matches_expected_flag".into(), json!(f == expected)),
    ]))
}

fn lift_roundtrip(fx: &Json) -> Result<BTreeMap<String, Json>, Error> {
    let f = json::flag_from_json(get(fx, "flag")?, "$.flag")?;
    let units = f.tract().units()?;
    let e = 1 << f.ground_size();
    let (mut all_valid, mut roundtrip) = (true, true);
    let mut lifts = std::collections::BTreeSet::new();
    for a in &units {
        for b in &units {
            match f.lift(a, b) {
                Ok(m) => {
                    let back = FlagMatroid::new(vec![m.contract(e)?, m.delete(e)?])?;
                    roundtrip &= back == f;
                    lifts.insert(m);
                }
                Err(Error::NotGp(_)) => all_valid = false,
                Err(err) => return Err(err),
            }
        }
    }
    Ok(BTreeMap::from([
        ("flag_valid".into(), json!(f.validate(FlagMode::Pairwise)?.ok)),
        ("lifts_valid".into(), json!(all_valid)),
        ("roundtrip".into(), json!(all_valid && roundtrip)),
        ("distinct_lifts".into(), json!(lifts.len())),
    ]))
}

pub fn run(name: &str) -> Run {
    let Some((_, text)) = FIXTURES.iter().find(|(n, _)| *n == name) else {
        let known: Vec<_> = names().collect();
        return Err(Error::Invalid(format!("unknown scenario {name:?}; known: {}", known.join(", "))));
    };
    let fx = json::parse(text)?;
    let actual = match name {
        "phase-counterexample" => phase_counterexample(&fx)?,
        "k-rank-1-2" => k_rank_one_two(&fx)?,
        "flags-of-minors-u23" => flags_of_minors_u23(&fx)?,
        "lift-roundtrip" => lift_roundtrip(&fx)?,
        _ => unreachable!("fixture list and dispatch agree"),
    };
    let expected = get(&fx, "expected")?
        .as_object()
        .ok_or_else(|| Error::Parse("\"expected\" must be an object".into()))?;
    let mut failed = Vec::new();
    for (key, want) in expected {
        let got = actual.get(key).cloned().unwrap_or(Json::Null);
        if &got != want {
            failed.push(json!({"assertion": key, "expected": want, "actual": got}));
        }
    }
    let passed = expected.len() - failed.len();
    let ok = failed.is_empty();
    Ok(Output {
        ok,
        result: json!({
            "scenario": name,
            "provenance": get(&fx, "provenance")?,
            "verdicts": actual,
            "passed": passed,
            "failed": failed.len(),
        }),
        witness: (!ok).then_some(Json::Array(failed)),
    })
}
