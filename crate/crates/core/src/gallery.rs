//! Parameterized generators for the worked counterexample instances, each
//! bundling a universe, a family, a payload, and the claims it is documented
//! to satisfy or violate.
//!
//! The three `nondp_*` generators are bounded brute-force searches; when the
//! budget runs out without a hit they report exhaustion instead of inventing
//! an instance.

use std::collections::BTreeMap;

use crate::conditions::{ChoiceFunction, ConditionId};
use crate::error::{Error, Result};
use crate::structures::{BoothStructure, DistanceSpace, PrefStructure, RankedStructure};
use crate::universe::{CloseOp, DomainFamily, PointSet, Universe};

/// The payload a gallery instance carries.
#[derive(Clone, Debug)]
pub enum Payload {
    Choice(ChoiceFunction),
    Pref(PrefStructure),
    Ranked(RankedStructure),
    Booth(BoothStructure),
    Distance(DistanceSpace),
}

impl Payload {
    pub fn as_choice(&self) -> Result<ChoiceFunction> {
        match self {
            Payload::Choice(c) => Ok(c.clone()),
            _ => Err(Error::input("payload is not a choice function")),
        }
    }
}

/// A bundled, self-describing instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub family: DomainFamily,
    pub payload: Payload,
    /// Claims this instance is documented to satisfy or violate.
    pub expected: Vec<(ConditionId, bool)>,
    pub notes: Vec<String>,
}

impl Instance {
    pub fn universe(&self) -> &Universe {
        self.family.universe()
    }
}

/// Generator dispatch. Parameters: `cum_hierarchy` takes `k` in 1..=3,
/// `tau_vs_hu` takes `depth` in 1..=5, the `nondp_*` searches take an
/// optional `budget`.
pub fn gallery(name: &str, params: &BTreeMap<&str, &str>) -> Result<Instance> {
    let get_num = |key: &str, default: Option<u32>| -> Result<u32> {
        match params.get(key) {
            Some(v) => v
                .parse()
                .map_err(|_| Error::input(format!("parameter {key} must be a number"))),
            None => default.ok_or_else(|| Error::input(format!("missing parameter {key}"))),
        }
    };
    match name {
        "cum_hierarchy" => {
            let k = get_num("k", None)?;
            if !(1..=3).contains(&k) {
                return Err(Error::input("cum_hierarchy needs k in 1..=3"));
            }
            cum_hierarchy(k)
        }
        "no_transitive" => no_transitive(),
        "tau_vs_hu" => {
            let depth = get_num("depth", Some(3))?;
            if !(1..=5).contains(&depth) {
                return Err(Error::input("tau_vs_hu needs depth in 1..=5"));
            }
            tau_vs_hu(depth)
        }
        "initial_segments" => initial_segments(),
        "cumt_fail" => cumt_fail(),
        "nondp_pr_fail" => nondp_pr_fail(get_num("budget", Some(200_000))?),
        "nondp_star4_fail" => nondp_star4_fail(get_num("budget", Some(200_000))?),
        "nondp_mu01_cum_fail" => nondp_mu01_cum_fail(get_num("budget", Some(200_000))?),
        _ => Err(Error::input(format!("unknown gallery instance {name:?}"))),
    }
}

pub const GALLERY_NAMES: &[&str] = &[
    "cum_hierarchy",
    "no_transitive",
    "tau_vs_hu",
    "initial_segments",
    "cumt_fail",
    "nondp_pr_fail",
    "nondp_star4_fail",
    "nondp_mu01_cum_fail",
];

fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// The hierarchy-separating family: a non-transitive relation on
/// `{a,b,c, x_0..x_{k+1}, x'_0..x'_k}` with generators `U`, `X_0..X_{k-1}`,
/// `X'_k`, closed under pairwise intersection. Satisfies `(μCum)` and every
/// `(μCumt α)` for `α < k`, fails `(μCum k)` at the point `c`.
fn cum_hierarchy(k: u32) -> Result<Instance> {
    let k = k as usize;
    let mut names: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
    for i in 0..=k + 1 {
        names.push(format!("x{i}"));
    }
    for i in 0..=k {
        names.push(format!("x'{i}"));
    }
    let u = Universe::new(names)?;
    let idx = |n: &str| u.index_of(n).expect("known point");
    // a≺b≺c, x_i≺x_{i+1}, x_i≺x'_i; deliberately not transitive
    let mut rel: Vec<(usize, usize)> = vec![(idx("a"), idx("b")), (idx("b"), idx("c"))];
    for i in 0..=k {
        rel.push((idx(&format!("x{i}")), idx(&format!("x{}", i + 1))));
        rel.push((idx(&format!("x{i}")), idx(&format!("x'{i}"))));
    }
    let s = PrefStructure::simple(u.clone(), rel)?;

    let mut gens: Vec<PointSet> = Vec::new();
    gens.push(u.set_of(&["a", "c", "x0"])?); // U
    for i in 0..k {
        gens.push(u.set_of(&[
            "c",
            &format!("x{i}"),
            &format!("x'{i}"),
            &format!("x{}", i + 1),
        ])?);
    }
    gens.push(u.set_of(&[
        "a",
        "b",
        "c",
        &format!("x{k}"),
        &format!("x'{k}"),
        &format!("x{}", k + 1),
    ])?); // X'_k
    let family = DomainFamily::new(u.clone(), gens)?.close(&[CloseOp::PairwiseIntersection]);
    let mu = ChoiceFunction::from_structure(&s, &family);

    let mut expected = vec![
        (ConditionId::MuSubset, true),
        (ConditionId::MuPr, true),
        (ConditionId::MuCum, true),
        (ConditionId::MuCumAlpha(k as u32), false),
        (ConditionId::Hux, false),
    ];
    for alpha in 0..k as u32 {
        expected.push((ConditionId::MuCumAlpha(alpha), true));
        expected.push((ConditionId::MuCumtAlpha(alpha), true));
    }
    Ok(Instance {
        name: "cum_hierarchy".into(),
        params: params_of(&[("k", k.to_string())]),
        family,
        payload: Payload::Choice(mu),
        expected,
        notes: vec![
            "finite successor stage of the (μCum α) separation; the witness point is c".into(),
        ],
    })
}

/// The four-set choice function with no smooth transitive representation:
/// every `(μCumt α)` holds vacuously, yet the μτ tree stars out at the root.
fn no_transitive() -> Result<Instance> {
    let u = Universe::new(["u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"])?;
    let big_u = u.set_of(&["u1", "u2", "u3", "u4"])?;
    let y1 = u.set_of(&["u4", "v1", "v2", "v3", "v4"])?;
    let y21 = u.set_of(&["u2", "v2", "v4"])?;
    let y22 = u.set_of(&["u1", "v1", "v3"])?;
    let family = DomainFamily::new(u.clone(), [big_u, y1, y21, y22])?;
    let values: Vec<PointSet> = family
        .members()
        .iter()
        .map(|&m| {
            if m == big_u {
                u.set_of(&["u3", "u4"]).unwrap()
            } else if m == y1 {
                u.set_of(&["v3", "v4"]).unwrap()
            } else if m == y21 {
                u.set_of(&["u2", "v2"]).unwrap()
            } else {
                u.set_of(&["u1", "v1"]).unwrap()
            }
        })
        .collect();
    let mu = ChoiceFunction::new(family.clone(), values)?;
    let mut expected = vec![
        (ConditionId::MuSubset, true),
        (ConditionId::MuPr, true),
        (ConditionId::MuCum, true),
        (ConditionId::MuTau, false),
    ];
    for alpha in 0..family.len() as u32 {
        expected.push((ConditionId::MuCumtAlpha(alpha), true));
    }
    Ok(Instance {
        name: "no_transitive".into(),
        params: BTreeMap::new(),
        family,
        payload: Payload::Choice(mu),
        expected,
        notes: vec!["the prerequisite of (μCumt α) never fires, so all hold".into()],
    })
}

/// Finite truncation of the escape-branch picture: a descending y-chain that
/// never returns to `U`, with z-side chains of growing length that do. Both
/// `(HU)` and `(μτ)` hold on the truncation.
fn tau_vs_hu(depth: u32) -> Result<Instance> {
    let d = depth as usize;
    let mut names: Vec<String> = vec!["x".into(), "u_end".into()];
    for i in 1..=d {
        names.push(format!("y{i}"));
        names.push(format!("z{i}"));
        for j in 1..=i {
            names.push(format!("u{i}_{j}"));
        }
    }
    let u = Universe::new(names)?;
    let idx = |n: &str| u.index_of(n).expect("known point");
    let mut rel: Vec<(usize, usize)> = Vec::new();
    // y_1 ≺ x, y_{i+1} ≺ y_i, z_1 ≺ x, z_{i+1} ≺ y_i
    rel.push((idx("y1"), idx("x")));
    rel.push((idx("z1"), idx("x")));
    for i in 1..d {
        rel.push((idx(&format!("y{}", i + 1)), idx(&format!("y{i}"))));
        rel.push((idx(&format!("z{}", i + 1)), idx(&format!("y{i}"))));
    }
    // return chains: u{i}_1 ≺ z_i, u{i}_{j+1} ≺ u{i}_j, and the chain ends in U
    for i in 1..=d {
        rel.push((idx(&format!("u{i}_1")), idx(&format!("z{i}"))));
        for j in 1..i {
            rel.push((idx(&format!("u{i}_{}", j + 1)), idx(&format!("u{i}_{j}"))));
        }
        rel.push((idx("u_end"), idx(&format!("u{i}_{i}"))));
    }
    let s = PrefStructure::simple(u.clone(), rel)?;

    let mut gens: Vec<PointSet> = Vec::new();
    gens.push(u.set_of(&["x", "u_end"])?); // U
    gens.push(u.set_of(&["x", "y1", "z1"])?);
    for i in 2..=d {
        gens.push(u.set_of(&[&format!("y{}", i - 1), &format!("y{i}"), &format!("z{i}")])?);
    }
    for i in 1..=d {
        gens.push(u.set_of(&[&format!("z{i}"), &format!("u{i}_1")])?);
        for j in 1..i {
            gens.push(u.set_of(&[&format!("u{i}_{j}"), &format!("u{i}_{}", j + 1)])?);
        }
        gens.push(u.set_of(&[&format!("u{i}_{i}"), "u_end"])?);
    }
    let family = DomainFamily::new(u.clone(), gens)?;
    let mu = ChoiceFunction::from_structure(&s, &family);
    Ok(Instance {
        name: "tau_vs_hu".into(),
        params: params_of(&[("depth", d.to_string())]),
        family,
        payload: Payload::Choice(mu),
        expected: vec![
            (ConditionId::MuSubset, true),
            (ConditionId::Hu, true),
            (ConditionId::MuTau, true),
        ],
        notes: vec![
            format!("truncated at depth {d}: the y-branch escape is only exhibited this far"),
            "no Y_i lies inside H(U): the y-chain points never enter the hull".into(),
        ],
    })
}

/// The non-transitive initial-segment structure on the 2-variable model
/// space: limit consequence yields two formulas but not their conjunction.
fn initial_segments() -> Result<Instance> {
    // points are the models of p,q: a=11, b=10, c=01, d=00
    let u = Universe::new(["00", "01", "10", "11"])?;
    let idx = |n: &str| u.index_of(n).expect("model");
    // a≺b, a≺c, b≺d, c≺d without transitivity
    let rel = [
        (idx("11"), idx("10")),
        (idx("11"), idx("01")),
        (idx("10"), idx("00")),
        (idx("01"), idx("00")),
    ];
    let s = PrefStructure::simple(u.clone(), rel)?;
    let family = DomainFamily::new(u.clone(), (0u64..16).map(PointSet))?;
    Ok(Instance {
        name: "initial_segments".into(),
        params: BTreeMap::new(),
        family,
        payload: Payload::Pref(s),
        expected: vec![(ConditionId::LambdaAnd, false), (ConditionId::MuSubset, true)],
        notes: vec![
            "limit: p and q each hold, p∧q does not; the relation is not transitive".into(),
        ],
    })
}

/// The three-point smooth but non-transitive structure where `(μCumt 1)`
/// fails although every `(μCum α)` holds.
fn cumt_fail() -> Result<Instance> {
    let u = Universe::new(["a", "b", "c"])?;
    let idx = |n: &str| u.index_of(n).expect("point");
    // c ≺ b ≺ a without transitivity
    let s = PrefStructure::simple(u.clone(), [(idx("c"), idx("b")), (idx("b"), idx("a"))])?;
    let members = [
        PointSet::EMPTY,
        u.set_of(&["a"])?,
        u.set_of(&["b"])?,
        u.set_of(&["c"])?,
        u.set_of(&["a", "c"])?, // U
        u.set_of(&["b", "c"])?, // X0
        u.set_of(&["a", "b"])?, // X1
    ];
    let family = DomainFamily::new(u.clone(), members)?;
    let mu = ChoiceFunction::from_structure(&s, &family);
    Ok(Instance {
        name: "cumt_fail".into(),
        params: BTreeMap::new(),
        family,
        payload: Payload::Choice(mu),
        expected: vec![
            (ConditionId::MuSubset, true),
            (ConditionId::MuCum, true),
            (ConditionId::MuCumAlpha(1), true),
            (ConditionId::MuCumtAlpha(1), false),
        ],
        notes: vec!["smooth for all listed sets; transitivity is what fails".into()],
    })
}

/// Union- and intersection-closed families with ∅ and Z over a small
/// universe, enumerated by closing picks of up to `max_extra` generators
/// from `pool`.
fn closed_families(
    u: &Universe,
    pool: &[PointSet],
    max_extra: usize,
    budget: &mut u32,
) -> Vec<DomainFamily> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let base = [PointSet::EMPTY, u.full_set()];
    let mut stack: Vec<Vec<PointSet>> = vec![base.to_vec()];
    while let Some(gens) = stack.pop() {
        if *budget == 0 {
            break;
        }
        *budget = budget.saturating_sub(1);
        let fam = DomainFamily::new(u.clone(), gens.iter().copied())
            .expect("subsets of the universe")
            .close(&[CloseOp::FiniteUnion, CloseOp::PairwiseIntersection]);
        let key: Vec<PointSet> = fam.members().to_vec();
        if seen.insert(key) {
            out.push(fam);
        }
        if gens.len() < max_extra + 2 {
            for &s in pool {
                if !gens.contains(&s) {
                    let mut g = gens.clone();
                    g.push(s);
                    stack.push(g);
                }
            }
        }
    }
    out.sort_by(|a, b| a.members().cmp(b.members()));
    out
}

fn all_subsets(u: &Universe) -> Vec<PointSet> {
    (0u64..(1u64 << u.len())).map(PointSet).collect()
}

/// Searches for a finite (PR) failure of the hat-composed μ of a structure
/// over a union/intersection-closed family that is not complement closed.
/// Complement-closed (block) families provably cannot fail here.
fn nondp_pr_fail(budget: u32) -> Result<Instance> {
    let mut budget = budget;
    let u = Universe::new(["1", "2", "3"])?;
    let fams = closed_families(&u, &all_subsets(&u), 2, &mut budget);
    let n = u.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b)
        .collect();
    for fam in &fams {
        if fam.len() < 3 {
            continue;
        }
        for rel_mask in 0u32..(1 << pairs.len()) {
            if budget == 0 {
                return Err(Error::SearchExhausted(
                    "nondp_pr_fail: budget ran out before a (PR) failure appeared".into(),
                ));
            }
            budget -= 1;
            let rel = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| rel_mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            let s = PrefStructure::simple(u.clone(), rel).expect("points in range");
            // (PR) with hat: hat(μ(A))∩B ⊆ hat(μ(A∩B)) over family members
            let mut witness = None;
            'scan: for &a in fam.members() {
                for &b in fam.members() {
                    let ab = a.inter(b);
                    if !fam.contains(ab) {
                        continue;
                    }
                    let lhs = fam.hat(s.mu(a))?.inter(b);
                    let rhs = fam.hat(s.mu(ab))?;
                    if !lhs.is_subset(rhs) {
                        witness = Some((a, b));
                        break 'scan;
                    }
                }
            }
            if let Some((a, b)) = witness {
                let mu = ChoiceFunction::new(
                    fam.clone(),
                    fam.members().iter().map(|&m| fam.hat(s.mu(m)).unwrap()).collect(),
                )?;
                return Ok(Instance {
                    name: "nondp_pr_fail".into(),
                    params: params_of(&[("budget", budget.to_string())]),
                    family: fam.clone(),
                    payload: Payload::Choice(mu),
                    expected: vec![(ConditionId::Pr, false)],
                    notes: vec![
                        format!(
                            "hat(μ_Z(M_T))∩M_T' ⊄ hat(μ_Z(M_(T∪T'))) at T={}, T'={}",
                            u.display(a),
                            u.display(b)
                        ),
                        "the family is union/intersection closed but not complement closed"
                            .into(),
                    ],
                });
            }
        }
    }
    Err(Error::SearchExhausted(
        "nondp_pr_fail: no failure in the enumerated families".into(),
    ))
}

/// Finite analogue of the revision counterexample: a ring of equidistant
/// points close to `m`, a nearer and a farther outside model, and a family
/// that cannot see the ring itself. Searches the family space for a `(*4)`
/// failure under the hat-composed minimal revision.
fn nondp_star4_fail(budget: u32) -> Result<Instance> {
    let mut budget = budget;
    let u = Universe::new(["m", "m1", "m2", "r"])?;
    let idx = |n: &str| u.index_of(n).expect("point");
    let mut d = vec![vec![0.0; 4]; 4];
    let mut set = |a: usize, b: usize, v: f64| {
        d[a][b] = v;
        d[b][a] = v;
    };
    // ring at distance 1 from m, m2 at 2, m1 at 3; distances between others
    // are immaterial for the failure, keep them large
    set(idx("m"), idx("r"), 1.0);
    set(idx("m"), idx("m2"), 2.0);
    set(idx("m"), idx("m1"), 3.0);
    set(idx("r"), idx("m1"), 5.0);
    set(idx("r"), idx("m2"), 5.0);
    set(idx("m1"), idx("m2"), 5.0);
    let space = DistanceSpace::new(u.clone(), d)?;
    // the family must stay blind to the ring: generators avoid r, plus the
    // one member that swallows the whole ring
    let r = idx("r");
    let mut pool: Vec<PointSet> = all_subsets(&u)
        .into_iter()
        .filter(|s| !s.contains(r))
        .collect();
    pool.push(u.set_of(&["r", "m1", "m2"])?);
    let fams = closed_families(&u, &pool, 3, &mut budget);
    for fam in &fams {
        if budget == 0 {
            return Err(Error::SearchExhausted(
                "nondp_star4_fail: budget ran out before a (*4) failure appeared".into(),
            ));
        }
        budget -= 1;
        let v = crate::conditions::check(
            ConditionId::Star4,
            &crate::conditions::Subject::Distance(&space),
            fam,
        );
        if let Ok(v) = v {
            if !v.holds {
                return Ok(Instance {
                    name: "nondp_star4_fail".into(),
                    params: params_of(&[("budget", budget.to_string())]),
                    family: fam.clone(),
                    payload: Payload::Distance(space),
                    expected: vec![(ConditionId::Star4, false)],
                    notes: vec![
                        "ring distances from the revision example, family blind to the ring"
                            .into(),
                    ],
                });
            }
        }
    }
    Err(Error::SearchExhausted(
        "nondp_star4_fail: no failure in the enumerated families".into(),
    ))
}

/// Searches for a smooth transitive structure (with copies) whose
/// hat-composed μ makes `(μCum)` fail for μ0 and μ1 but hold for μ2.
fn nondp_mu01_cum_fail(budget: u32) -> Result<Instance> {
    let mut budget = budget;
    let u = Universe::new(["a", "b", "m", "n"])?;
    let fams = closed_families(&u, &all_subsets(&u), 3, &mut budget);
    // copy-doubling patterns: two copies for each point of a chosen pair
    // (m, n), each pair of copies tied to one of the plain points
    let plain: Vec<usize> = (0..u.len()).collect();
    let mut candidates: Vec<PrefStructure> = Vec::new();
    for &m in &plain {
        for &n in &plain {
            if m == n {
                continue;
            }
            let anchors: Vec<usize> = plain.iter().copied().filter(|&p| p != m && p != n).collect();
            // copies: anchors once, m and n once per anchor
            let mut copies: Vec<(usize, u32)> = anchors.iter().map(|&p| (p, 0)).collect();
            for (i, _) in anchors.iter().enumerate() {
                copies.push((m, i as u32 + 1));
                copies.push((n, i as u32 + 1));
            }
            let find = |p: usize, i: u32, copies: &[(usize, u32)]| {
                copies.iter().position(|&c| c == (p, i)).unwrap()
            };
            let mut rel: Vec<(usize, usize)> = Vec::new();
            for (i, &anchor) in anchors.iter().enumerate() {
                let ai = find(anchor, 0, &copies);
                let mi = find(m, i as u32 + 1, &copies);
                let ni = find(n, i as u32 + 1, &copies);
                rel.push((mi, ni));
                rel.push((ai, mi));
                rel.push((ai, ni));
            }
            if let Ok(s) = PrefStructure::new(u.clone(), copies, rel) {
                candidates.push(s);
            }
        }
    }
    for fam in &fams {
        for s in &candidates {
            if budget == 0 {
                return Err(Error::SearchExhausted(
                    "nondp_mu01_cum_fail: budget ran out".into(),
                ));
            }
            budget -= 1;
            let hat_mu: Result<Vec<PointSet>> =
                fam.members().iter().map(|&m| fam.hat(s.mu(m))).collect();
            let Ok(values) = hat_mu else { continue };
            let Ok(mu) = ChoiceFunction::new(fam.clone(), values) else { continue };
            if !mu.codomain_in_family() {
                continue;
            }
            let ok = |c: ConditionId| -> bool {
                crate::conditions::check_mu_condition(c, &mu).map(|v| v.holds).unwrap_or(false)
            };
            if !(ok(ConditionId::MuSubset)
                && ok(ConditionId::MuCum)
                && ok(ConditionId::MuPrI(0))
                && ok(ConditionId::MuPrI(2)))
            {
                continue;
            }
            let cum_of = |i: u8| -> Option<bool> {
                let d = crate::conditions::derive_mu_i(&mu, i).ok()?;
                crate::conditions::check_mu_condition(ConditionId::MuCum, &d)
                    .ok()
                    .map(|v| v.holds)
            };
            if cum_of(0) == Some(false) && cum_of(1) == Some(false) && cum_of(2) == Some(true) {
                return Ok(Instance {
                    name: "nondp_mu01_cum_fail".into(),
                    params: params_of(&[("budget", budget.to_string())]),
                    family: fam.clone(),
                    payload: Payload::Choice(mu),
                    expected: vec![
                        (ConditionId::MuSubset, true),
                        (ConditionId::MuCum, true),
                        (ConditionId::MuPrI(0), true),
                        (ConditionId::MuPrI(2), true),
                    ],
                    notes: vec![
                        "μ0 and μ1 lose (μCum) under hat while μ2 keeps it".into(),
                    ],
                });
            }
        }
    }
    Err(Error::SearchExhausted(
        "nondp_mu01_cum_fail: no instance in the enumerated grid".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::{check_mu_condition, Subject};

    #[test]
    fn every_instance_reverifies_its_claims() {
        let named: Vec<(&str, BTreeMap<&str, &str>)> = vec![
            ("cum_hierarchy", [("k", "1")].into()),
            ("cum_hierarchy", [("k", "2")].into()),
            ("no_transitive", BTreeMap::new()),
            ("tau_vs_hu", [("depth", "2")].into()),
            ("initial_segments", BTreeMap::new()),
            ("cumt_fail", BTreeMap::new()),
        ];
        for (name, params) in named {
            let inst = gallery(name, &params).unwrap();
            for &(cond, holds) in &inst.expected {
                let v = match &inst.payload {
                    Payload::Choice(c) => {
                        crate::conditions::check(cond, &Subject::Choice(c), &inst.family).unwrap()
                    }
                    Payload::Pref(s) => {
                        crate::conditions::check(cond, &Subject::Pref(s), &inst.family).unwrap()
                    }
                    _ => unreachable!("no such payloads here"),
                };
                assert_eq!(
                    v.holds, holds,
                    "{name}: {cond} expected holds={holds}"
                );
            }
        }
    }

    #[test]
    fn unknown_name_and_bad_params_error() {
        assert!(gallery("nope", &BTreeMap::new()).is_err());
        assert!(gallery("cum_hierarchy", &[("k", "9")].into()).is_err());
        assert!(gallery("tau_vs_hu", &[("depth", "0")].into()).is_err());
    }

    #[test]
    fn no_transitive_mu_values_match() {
        let inst = gallery("no_transitive", &BTreeMap::new()).unwrap();
        let mu = inst.payload.as_choice().unwrap();
        let u = mu.universe();
        let big_u = u.set_of(&["u1", "u2", "u3", "u4"]).unwrap();
        assert_eq!(mu.apply(big_u).unwrap(), u.set_of(&["u3", "u4"]).unwrap());
        let v = check_mu_condition(ConditionId::MuTau, &mu).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn cum_hierarchy_family_is_intersection_closed() {
        for k in 1..=3 {
            let inst = gallery("cum_hierarchy", &[("k", k.to_string().as_str())].into()).unwrap();
            assert!(inst.family.flags().closed_arbitrary_intersection);
            assert!(!inst.family.flags().closed_finite_union);
        }
    }
}
