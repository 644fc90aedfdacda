//! The on-disk instance format: a universe, a family, one payload, and an
//! optional list of expected claims. The schema is a fixed contract; unknown
//! keys are rejected and all set values are emitted as sorted arrays.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::conditions::{ChoiceFunction, ConditionId};
use crate::error::{Error, Result};
use crate::gallery::{Instance, Payload};
use crate::structures::{BoothStructure, DistanceSpace, PrefStructure, RankedStructure};
use crate::universe::{DomainFamily, PointSet, Universe};

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub universe: Vec<String>,
    pub family: Vec<Vec<String>>,
    pub payload_kind: PayloadKind,
    pub payload: PayloadFile,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<ExpectedClaim>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum PayloadKind {
    ChoiceFunction,
    PrefStructure,
    Ranked,
    Booth,
    Distance,
}

#[derive(Serialize, Deserialize, Debug, Clone, Default)]
#[serde(deny_unknown_fields)]
pub struct PayloadFile {
    /// Choice function: one entry per family member.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<MuEntry>>,
    /// Preferential structure: copies as `[point, index]` pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub copies: Option<Vec<(String, u32)>>,
    /// Relation as `[[p,i],[q,j]]` pairs meaning `⟨p,i⟩ ≺ ⟨q,j⟩`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel: Option<Vec<((String, u32), (String, u32))>>,
    /// Ranked and Booth structures: rank per point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<BTreeMap<String, u32>>,
    /// Booth subrelation ◁ as point pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sub: Option<Vec<(String, String)>>,
    /// Distance space: symmetric entries `[p, q, d]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<(String, String, f64)>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct MuEntry {
    pub set: Vec<String>,
    pub value: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ExpectedClaim {
    pub condition: String,
    pub holds: bool,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> InstanceFile {
        let u = inst.universe();
        let family = inst.family.members().iter().map(|&m| u.names(m)).collect();
        let (payload_kind, payload) = match &inst.payload {
            Payload::Choice(c) => (
                PayloadKind::ChoiceFunction,
                PayloadFile {
                    mu: Some(
                        inst.family
                            .members()
                            .iter()
                            .enumerate()
                            .map(|(i, &m)| MuEntry {
                                set: u.names(m),
                                value: u.names(c.value_at(i)),
                            })
                            .collect(),
                    ),
                    ..Default::default()
                },
            ),
            Payload::Pref(s) => (
                PayloadKind::PrefStructure,
                PayloadFile {
                    copies: Some(
                        s.copies()
                            .iter()
                            .map(|&(p, i)| (u.name(p).to_string(), i))
                            .collect(),
                    ),
                    rel: Some(
                        s.rel()
                            .iter()
                            .map(|&(a, b)| {
                                let ca = s.copies()[a];
                                let cb = s.copies()[b];
                                (
                                    (u.name(ca.0).to_string(), ca.1),
                                    (u.name(cb.0).to_string(), cb.1),
                                )
                            })
                            .collect(),
                    ),
                    ..Default::default()
                },
            ),
            Payload::Ranked(r) => (
                PayloadKind::Ranked,
                PayloadFile {
                    rank: Some(
                        (0..u.len())
                            .map(|p| (u.name(p).to_string(), r.rank(p)))
                            .collect(),
                    ),
                    ..Default::default()
                },
            ),
            Payload::Booth(b) => (
                PayloadKind::Booth,
                PayloadFile {
                    rank: Some(
                        (0..u.len())
                            .map(|p| (u.name(p).to_string(), b.ranked().rank(p)))
                            .collect(),
                    ),
                    sub: Some(
                        b.sub()
                            .iter()
                            .map(|&(a, c)| (u.name(a).to_string(), u.name(c).to_string()))
                            .collect(),
                    ),
                    ..Default::default()
                },
            ),
            Payload::Distance(sp) => {
                let mut entries = Vec::new();
                for a in 0..u.len() {
                    for b in a + 1..u.len() {
                        entries.push((u.name(a).to_string(), u.name(b).to_string(), sp.dist(a, b)));
                    }
                }
                (PayloadKind::Distance, PayloadFile { d: Some(entries), ..Default::default() })
            }
        };
        InstanceFile {
            universe: u.points().to_vec(),
            family,
            payload_kind,
            payload,
            expected: inst
                .expected
                .iter()
                .map(|&(c, holds)| ExpectedClaim { condition: c.to_string(), holds })
                .collect(),
            notes: inst.notes.clone(),
        }
    }

    pub fn to_instance(&self, name: &str) -> Result<Instance> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        let mut members = Vec::new();
        for set in &self.family {
            members.push(universe.set_of(set)?);
        }
        let family = DomainFamily::new(universe.clone(), members)?;
        let need = |field: &str| Error::input(format!("payload field {field:?} is required"));
        let payload = match self.payload_kind {
            PayloadKind::ChoiceFunction => {
                let entries = self.payload.mu.as_ref().ok_or_else(|| need("mu"))?;
                self.reject_extras(&["mu"])?;
                let mut values = vec![None; family.len()];
                for e in entries {
                    let set = universe.set_of(&e.set)?;
                    let idx = family
                        .member_index(set)
                        .ok_or_else(|| Error::input("mu entry for a non-member set"))?;
                    if values[idx].is_some() {
                        return Err(Error::input("duplicate mu entry"));
                    }
                    values[idx] = Some(universe.set_of(&e.value)?);
                }
                let values: Result<Vec<PointSet>> = values
                    .into_iter()
                    .map(|v| v.ok_or_else(|| Error::input("mu must cover every family member")))
                    .collect();
                Payload::Choice(ChoiceFunction::new(family.clone(), values?)?)
            }
            PayloadKind::PrefStructure => {
                let copies = self.payload.copies.as_ref().ok_or_else(|| need("copies"))?;
                let rel = self.payload.rel.as_ref().ok_or_else(|| need("rel"))?;
                self.reject_extras(&["copies", "rel"])?;
                let resolve = |name: &str| {
                    universe
                        .index_of(name)
                        .ok_or_else(|| Error::input(format!("unknown point {name:?}")))
                };
                let mut cs = Vec::new();
                for (p, i) in copies {
                    cs.push((resolve(p)?, *i));
                }
                let mut pairs = Vec::new();
                for ((p, i), (q, j)) in rel {
                    let (pi, qi) = (resolve(p)?, resolve(q)?);
                    let a = cs
                        .iter()
                        .position(|&c| c == (pi, *i))
                        .ok_or_else(|| Error::input("relation names an unlisted copy"))?;
                    let b = cs
                        .iter()
                        .position(|&c| c == (qi, *j))
                        .ok_or_else(|| Error::input("relation names an unlisted copy"))?;
                    pairs.push((a, b));
                }
                Payload::Pref(PrefStructure::new(universe.clone(), cs, pairs)?)
            }
            PayloadKind::Ranked => {
                let rank = self.payload.rank.as_ref().ok_or_else(|| need("rank"))?;
                self.reject_extras(&["rank"])?;
                Payload::Ranked(ranked_from_map(&universe, rank)?)
            }
            PayloadKind::Booth => {
                let rank = self.payload.rank.as_ref().ok_or_else(|| need("rank"))?;
                let sub = self.payload.sub.as_ref().ok_or_else(|| need("sub"))?;
                self.reject_extras(&["rank", "sub"])?;
                let ranked = ranked_from_map(&universe, rank)?;
                let mut pairs = Vec::new();
                for (a, b) in sub {
                    let pa = universe
                        .index_of(a)
                        .ok_or_else(|| Error::input(format!("unknown point {a:?}")))?;
                    let pb = universe
                        .index_of(b)
                        .ok_or_else(|| Error::input(format!("unknown point {b:?}")))?;
                    pairs.push((pa, pb));
                }
                Payload::Booth(BoothStructure::new(ranked, pairs)?)
            }
            PayloadKind::Distance => {
                let entries = self.payload.d.as_ref().ok_or_else(|| need("d"))?;
                self.reject_extras(&["d"])?;
                let n = universe.len();
                let mut m = vec![vec![f64::NAN; n]; n];
                for row in m.iter_mut().enumerate() {
                    row.1[row.0] = 0.0;
                }
                for (a, b, v) in entries {
                    let pa = universe
                        .index_of(a)
                        .ok_or_else(|| Error::input(format!("unknown point {a:?}")))?;
                    let pb = universe
                        .index_of(b)
                        .ok_or_else(|| Error::input(format!("unknown point {b:?}")))?;
                    m[pa][pb] = *v;
                    m[pb][pa] = *v;
                }
                if m.iter().flatten().any(|v| v.is_nan()) {
                    return Err(Error::input("distance entries must cover every pair"));
                }
                Payload::Distance(DistanceSpace::new(universe.clone(), m)?)
            }
        };
        let mut expected = Vec::new();
        for claim in &self.expected {
            expected.push((claim.condition.parse::<ConditionId>()?, claim.holds));
        }
        Ok(Instance {
            name: name.to_string(),
            params: BTreeMap::new(),
            family,
            payload,
            expected,
            notes: self.notes.clone(),
        })
    }

    /// Rejects payload fields that do not belong to the declared kind.
    fn reject_extras(&self, allowed: &[&str]) -> Result<()> {
        let fields: [(&str, bool); 6] = [
            ("mu", self.payload.mu.is_some()),
            ("copies", self.payload.copies.is_some()),
            ("rel", self.payload.rel.is_some()),
            ("rank", self.payload.rank.is_some()),
            ("sub", self.payload.sub.is_some()),
            ("d", self.payload.d.is_some()),
        ];
        for (name, present) in fields {
            if present && !allowed.contains(&name) {
                return Err(Error::input(format!(
                    "payload field {name:?} does not belong to this payload kind"
                )));
            }
        }
        Ok(())
    }
}

fn ranked_from_map(universe: &Universe, rank: &BTreeMap<String, u32>) -> Result<RankedStructure> {
    let mut out = vec![None; universe.len()];
    for (name, r) in rank {
        let p = universe
            .index_of(name)
            .ok_or_else(|| Error::input(format!("unknown point {name:?}")))?;
        out[p] = Some(*r);
    }
    let ranks: Result<Vec<u32>> = out
        .into_iter()
        .map(|r| r.ok_or_else(|| Error::input("rank must cover every point")))
        .collect();
    RankedStructure::new(universe.clone(), ranks?)
}

/// Canonical JSON emission: two-space pretty printing, stable field order.
pub fn write_instance(inst: &Instance) -> String {
    let file = InstanceFile::from_instance(inst);
    serde_json::to_string_pretty(&file).expect("serializable") + "\n"
}

pub fn read_instance(text: &str, name: &str) -> Result<Instance> {
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad instance JSON: {e}")))?;
    file.to_instance(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::gallery;

    #[test]
    fn instance_json_round_trips() {
        let inst = gallery("cum_hierarchy", &[("k", "1")].into()).unwrap();
        let text = write_instance(&inst);
        let back = read_instance(&text, "cum_hierarchy").unwrap();
        assert_eq!(back.family, inst.family);
        let again = write_instance(&back);
        assert_eq!(text, again, "emission is canonical");
    }

    #[test]
    fn unknown_keys_rejected() {
        let bad = r#"{"universe": ["a"], "family": [["a"]], "payload_kind": "ranked",
                      "payload": {"rank": {"a": 0}}, "wrong": 1}"#;
        assert!(read_instance(bad, "x").is_err());
        let wrong_field = r#"{"universe": ["a"], "family": [["a"]], "payload_kind": "ranked",
                      "payload": {"rank": {"a": 0}, "sub": []}}"#;
        assert!(read_instance(wrong_field, "x").is_err());
    }

    #[test]
    fn structure_payload_round_trips() {
        let inst = gallery("initial_segments", &BTreeMap::new()).unwrap();
        let text = write_instance(&inst);
        let back = read_instance(&text, "initial_segments").unwrap();
        match (&inst.payload, &back.payload) {
            (Payload::Pref(a), Payload::Pref(b)) => assert_eq!(a, b),
            _ => panic!("payload kind changed"),
        }
    }
}
