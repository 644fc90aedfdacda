//! The postulate-checking engine: every named algebraic, limit and logical
//! condition, the H-hull fixpoints, the cumulativity hierarchy search, the μτ
//! tree procedure, and the derived functions μ0..μ3.
//!
//! Checks are exhaustive quantifier sweeps over the family in canonical member
//! order; a failed condition always carries the first violation found.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::structures::{
    enumerate_mise_pref, enumerate_mise_ranked, BoothStructure, DistanceSpace, Mise,
    PrefStructure, RankedStructure,
};
use crate::universe::{DomainFamily, PointSet, Universe};

/// A choice function `μ` on a family: a total map from members to subsets of
/// the universe. `(μ⊆)` and friends are conditions under test, not invariants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChoiceFunction {
    family: DomainFamily,
    values: Vec<PointSet>,
}

impl ChoiceFunction {
    pub fn new(family: DomainFamily, values: Vec<PointSet>) -> Result<ChoiceFunction> {
        if values.len() != family.len() {
            return Err(Error::input("choice function must be total on the family"));
        }
        let full = family.universe().full_set();
        if values.iter().any(|v| !v.is_subset(full)) {
            return Err(Error::input("choice value outside the universe"));
        }
        Ok(ChoiceFunction { family, values })
    }

    /// The μ induced by a preferential structure on the family members.
    pub fn from_structure(s: &PrefStructure, family: &DomainFamily) -> ChoiceFunction {
        let values = family.members().iter().map(|&m| s.mu(m)).collect();
        ChoiceFunction { family: family.clone(), values }
    }

    pub fn from_ranked(r: &RankedStructure, family: &DomainFamily) -> ChoiceFunction {
        let values = family.members().iter().map(|&m| r.mu(m)).collect();
        ChoiceFunction { family: family.clone(), values }
    }

    pub fn family(&self) -> &DomainFamily {
        &self.family
    }

    pub fn universe(&self) -> &Universe {
        self.family.universe()
    }

    pub fn value_at(&self, member_idx: usize) -> PointSet {
        self.values[member_idx]
    }

    /// `μ(X)` for a family member; input error otherwise.
    pub fn apply(&self, x: PointSet) -> Result<PointSet> {
        match self.family.member_index(x) {
            Some(i) => Ok(self.values[i]),
            None => Err(Error::input(format!(
                "{} is not a family member",
                self.universe().display(x)
            ))),
        }
    }

    /// Whether every value is itself a family member (μ: Y → Y).
    pub fn codomain_in_family(&self) -> bool {
        self.values.iter().all(|&v| self.family.contains(v))
    }

    pub fn map_values(&self, f: impl Fn(usize, PointSet) -> PointSet) -> ChoiceFunction {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &v)| f(i, v))
            .collect();
        ChoiceFunction { family: self.family.clone(), values }
    }
}

/// Identifier of a checkable condition. The `Display`/`FromStr` strings are
/// the exact tokens used in CLI arguments and JSON reports.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ConditionId {
    MuSubset,
    MuPr,
    MuPrPrime,
    MuCum,
    MuEmpty,
    MuEmptyFin,
    MuEq,
    MuEqPrime,
    MuPar,
    MuUnion,
    MuUnionPrime,
    MuIn,
    Hu,
    Hux,
    MuTau,
    MuCumAlpha(u32),
    MuCumtAlpha(u32),
    MuPrI(u8),
    LambdaAnd,
    LambdaPr,
    LambdaCumFin,
    LambdaEq,
    MuMinus(u8),
    Star4,
    And,
    Or,
    Lle,
    Rw,
    Ccl,
    Sc,
    Cp,
    Rm,
    Cm,
    Cum,
    Pr,
    ScrRules,
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConditionId::*;
        match self {
            MuSubset => write!(f, "MU_SUBSET"),
            MuPr => write!(f, "MU_PR"),
            MuPrPrime => write!(f, "MU_PR_PRIME"),
            MuCum => write!(f, "MU_CUM"),
            MuEmpty => write!(f, "MU_EMPTY"),
            MuEmptyFin => write!(f, "MU_EMPTY_FIN"),
            MuEq => write!(f, "MU_EQ"),
            MuEqPrime => write!(f, "MU_EQ_PRIME"),
            MuPar => write!(f, "MU_PAR"),
            MuUnion => write!(f, "MU_UNION"),
            MuUnionPrime => write!(f, "MU_UNION_PRIME"),
            MuIn => write!(f, "MU_IN"),
            Hu => write!(f, "HU"),
            Hux => write!(f, "HUX"),
            MuTau => write!(f, "MU_TAU"),
            MuCumAlpha(k) => write!(f, "MU_CUM_ALPHA:{k}"),
            MuCumtAlpha(k) => write!(f, "MU_CUMT_ALPHA:{k}"),
            MuPrI(i) => write!(f, "MU_PR_I:{i}"),
            LambdaAnd => write!(f, "LAMBDA_AND"),
            LambdaPr => write!(f, "LAMBDA_PR"),
            LambdaCumFin => write!(f, "LAMBDA_CUMFIN"),
            LambdaEq => write!(f, "LAMBDA_EQ"),
            MuMinus(j) => write!(f, "MU_MINUS:{j}"),
            Star4 => write!(f, "STAR4"),
            And => write!(f, "AND"),
            Or => write!(f, "OR"),
            Lle => write!(f, "LLE"),
            Rw => write!(f, "RW"),
            Ccl => write!(f, "CCL"),
            Sc => write!(f, "SC"),
            Cp => write!(f, "CP"),
            Rm => write!(f, "RM"),
            Cm => write!(f, "CM"),
            Cum => write!(f, "CUM"),
            Pr => write!(f, "PR"),
            ScrRules => write!(f, "SCR_RULES"),
        }
    }
}

impl FromStr for ConditionId {
    type Err = Error;
    fn from_str(s: &str) -> Result<ConditionId> {
        use ConditionId::*;
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let parse_u32 = |a: Option<&str>| -> Result<u32> {
            a.ok_or_else(|| Error::input(format!("condition {head} needs a numeric argument")))?
                .parse()
                .map_err(|_| Error::input(format!("bad argument in condition {s:?}")))
        };
        let id = match head {
            "MU_SUBSET" => MuSubset,
            "MU_PR" => MuPr,
            "MU_PR_PRIME" => MuPrPrime,
            "MU_CUM" => MuCum,
            "MU_EMPTY" => MuEmpty,
            "MU_EMPTY_FIN" => MuEmptyFin,
            "MU_EQ" => MuEq,
            "MU_EQ_PRIME" => MuEqPrime,
            "MU_PAR" => MuPar,
            "MU_UNION" => MuUnion,
            "MU_UNION_PRIME" => MuUnionPrime,
            "MU_IN" => MuIn,
            "HU" => Hu,
            "HUX" => Hux,
            "MU_TAU" => MuTau,
            "MU_CUM_ALPHA" => MuCumAlpha(parse_u32(arg)?),
            "MU_CUMT_ALPHA" => MuCumtAlpha(parse_u32(arg)?),
            "MU_PR_I" => {
                let i = parse_u32(arg)?;
                if i > 3 {
                    return Err(Error::input("MU_PR_I index must be 0..3"));
                }
                MuPrI(i as u8)
            }
            "LAMBDA_AND" => LambdaAnd,
            "LAMBDA_PR" => LambdaPr,
            "LAMBDA_CUMFIN" => LambdaCumFin,
            "LAMBDA_EQ" => LambdaEq,
            "MU_MINUS" => {
                let j = parse_u32(arg)?;
                if !(1..=5).contains(&j) {
                    return Err(Error::input("MU_MINUS index must be 1..5"));
                }
                MuMinus(j as u8)
            }
            "STAR4" => Star4,
            "AND" => And,
            "OR" => Or,
            "LLE" => Lle,
            "RW" => Rw,
            "CCL" => Ccl,
            "SC" => Sc,
            "CP" => Cp,
            "RM" => Rm,
            "CM" => Cm,
            "CUM" => Cum,
            "PR" => Pr,
            "SCR_RULES" => ScrRules,
            _ => return Err(Error::input(format!("unknown condition {s:?}"))),
        };
        if arg.is_some() && !matches!(id, MuCumAlpha(_) | MuCumtAlpha(_) | MuPrI(_) | MuMinus(_)) {
            return Err(Error::input(format!("condition {head} takes no argument")));
        }
        Ok(id)
    }
}

/// One named binding of a counterexample: a point, a set, or a set sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessItem {
    Point(String),
    Set(Vec<String>),
    Sets(Vec<Vec<String>>),
}

/// A structured counterexample: role-named bindings in discovery order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Witness {
    pub bindings: Vec<(String, WitnessItem)>,
}

impl Witness {
    pub fn new() -> Witness {
        Witness::default()
    }

    pub fn point(mut self, role: &str, u: &Universe, p: usize) -> Witness {
        self.bindings
            .push((role.to_string(), WitnessItem::Point(u.name(p).to_string())));
        self
    }

    pub fn set(mut self, role: &str, u: &Universe, s: PointSet) -> Witness {
        self.bindings.push((role.to_string(), WitnessItem::Set(u.names(s))));
        self
    }

    pub fn sets(mut self, role: &str, u: &Universe, ss: &[PointSet]) -> Witness {
        self.bindings.push((
            role.to_string(),
            WitnessItem::Sets(ss.iter().map(|&s| u.names(s)).collect()),
        ));
        self
    }

    pub fn get(&self, role: &str) -> Option<&WitnessItem> {
        self.bindings.iter().find(|(r, _)| r == role).map(|(_, w)| w)
    }
}

/// Outcome of a condition check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub condition: ConditionId,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn pass(condition: ConditionId) -> Verdict {
        Verdict { condition, holds: true, witness: None, notes: Vec::new() }
    }

    fn fail(condition: ConditionId, witness: Witness) -> Verdict {
        Verdict { condition, holds: false, witness: Some(witness), notes: Vec::new() }
    }

    fn with_note(mut self, note: impl Into<String>) -> Verdict {
        self.notes.push(note.into());
        self
    }
}

/// A `(μ⁺, μ⁻)` pair over every member of a family, the input shape of the
/// Booth representation. The family is expected to be the full model-set
/// family of `lang`.
#[derive(Clone, Debug)]
pub struct NuData {
    pub family: DomainFamily,
    pub lang: crate::logic::Language,
    pub mu_plus: Vec<PointSet>,
    pub mu_minus: Vec<PointSet>,
}

impl NuData {
    pub fn from_booth(b: &BoothStructure, lang: &crate::logic::Language) -> Result<NuData> {
        if b.universe().len() != lang.model_count() {
            return Err(Error::input("Booth universe must be the model space of the language"));
        }
        let family =
            crate::logic::definable_family(lang, &crate::logic::Restriction::Full)?;
        let mu_plus = family.members().iter().map(|&m| b.mu_plus(m)).collect();
        let mu_minus = family.members().iter().map(|&m| b.mu_minus(m)).collect();
        Ok(NuData { family, lang: lang.clone(), mu_plus, mu_minus })
    }

    pub fn plus(&self, x: PointSet) -> PointSet {
        self.mu_plus[self.family.member_index(x).expect("member")]
    }

    pub fn minus(&self, x: PointSet) -> PointSet {
        self.mu_minus[self.family.member_index(x).expect("member")]
    }
}

/// What a condition is checked against.
pub enum Subject<'a> {
    Choice(&'a ChoiceFunction),
    Pref(&'a PrefStructure),
    Ranked(&'a RankedStructure),
    Booth(&'a BoothStructure),
    Distance(&'a DistanceSpace),
    Nu(&'a NuData),
}

impl<'a> Subject<'a> {
    /// The subject's μ on the family, for the plain μ-conditions.
    fn as_choice(&self, family: &DomainFamily) -> Result<ChoiceFunction> {
        match self {
            Subject::Choice(c) => {
                if c.family() != family {
                    return Err(Error::input("choice function family mismatch"));
                }
                Ok((*c).clone())
            }
            Subject::Pref(s) => Ok(ChoiceFunction::from_structure(s, family)),
            Subject::Ranked(r) => Ok(ChoiceFunction::from_ranked(r, family)),
            Subject::Booth(b) => Ok(ChoiceFunction::new(
                family.clone(),
                family.members().iter().map(|&m| b.mu_plus(m)).collect(),
            )?),
            Subject::Nu(nu) => Ok(ChoiceFunction::new(family.clone(), nu.mu_plus.clone())?),
            Subject::Distance(_) => {
                Err(Error::input("this condition needs a choice function or structure"))
            }
        }
    }

    /// MISE oracle `Λ(X)` for the limit conditions.
    fn lambda(&self, x: PointSet) -> Result<Vec<Mise>> {
        match self {
            Subject::Pref(s) => enumerate_mise_pref(s, x),
            Subject::Ranked(r) => Ok(enumerate_mise_ranked(r, x)),
            _ => Err(Error::input("limit conditions need a preferential or ranked structure")),
        }
    }

    /// Point sets of `Λ(X)`.
    fn lambda_sets(&self, x: PointSet) -> Result<Vec<PointSet>> {
        let s = match self {
            Subject::Pref(p) => Some(*p),
            _ => None,
        };
        Ok(self.lambda(x)?.iter().map(|m| m.segment_points(s)).collect())
    }
}

/// Dispatches a condition check against a subject over a family.
pub fn check(condition: ConditionId, subject: &Subject, family: &DomainFamily) -> Result<Verdict> {
    use ConditionId::*;
    match condition {
        MuSubset | MuPr | MuPrPrime | MuCum | MuEmpty | MuEmptyFin | MuEq | MuEqPrime | MuPar
        | MuUnion | MuUnionPrime | MuIn | Hu | Hux | MuTau | MuCumAlpha(_) | MuCumtAlpha(_)
        | MuPrI(_) => {
            let mu = subject.as_choice(family)?;
            check_mu_condition(condition, &mu)
        }
        LambdaAnd | LambdaPr | LambdaCumFin | LambdaEq => check_lambda(condition, subject, family),
        MuMinus(j) => {
            let nu = match subject {
                Subject::Nu(nu) => (*nu).clone(),
                Subject::Booth(b) => {
                    // derive pointwise over this family rather than the full one
                    NuData {
                        family: family.clone(),
                        lang: crate::logic::Language::new(Vec::<String>::new())?,
                        mu_plus: family.members().iter().map(|&m| b.mu_plus(m)).collect(),
                        mu_minus: family.members().iter().map(|&m| b.mu_minus(m)).collect(),
                    }
                }
                _ => return Err(Error::input("MU_MINUS needs Booth data")),
            };
            check_mu_minus(j, &nu, family)
        }
        Star4 => match subject {
            Subject::Distance(sp) => check_star4(sp, family),
            _ => Err(Error::input("STAR4 needs a distance space")),
        },
        And | Or | Lle | Rw | Ccl | Sc | Cp | Rm | Cm | Cum | Pr => {
            let mu = subject.as_choice(family)?;
            check_logical(condition, &mu)
        }
        ScrRules => check_scr(family.universe()),
    }
}

/// The plain μ-conditions on a choice function.
pub fn check_mu_condition(condition: ConditionId, mu: &ChoiceFunction) -> Result<Verdict> {
    use ConditionId::*;
    let fam = mu.family();
    let u = mu.universe();
    let members = fam.members();
    let val = |i: usize| mu.value_at(i);

    let verdict = match condition {
        MuSubset => members
            .iter()
            .enumerate()
            .find(|&(i, &x)| !val(i).is_subset(x))
            .map(|(i, &x)| {
                Verdict::fail(
                    condition,
                    Witness::new().set("X", u, x).set("mu(X)", u, val(i)),
                )
            }),
        MuPr => first_pair(members, |i, j| {
            let (x, y) = (members[i], members[j]);
            if x.is_subset(y) && !val(j).inter(x).is_subset(val(i)) {
                Some(
                    Witness::new()
                        .set("X", u, x)
                        .set("Y", u, y)
                        .set("mu(Y)∩X", u, val(j).inter(x))
                        .set("mu(X)", u, val(i)),
                )
            } else {
                None
            }
        })
        .map(|w| Verdict::fail(condition, w)),
        MuPrPrime => first_pair(members, |i, j| {
            let (x, y) = (members[i], members[j]);
            let xy = x.inter(y);
            let k = fam.member_index(xy)?;
            if !val(i).inter(y).is_subset(val(k)) {
                Some(Witness::new().set("X", u, x).set("Y", u, y).set("X∩Y", u, xy))
            } else {
                None
            }
        })
        .map(|w| Verdict::fail(condition, w)),
        MuCum => first_pair(members, |i, j| {
            let (x, y) = (members[i], members[j]);
            if val(i).is_subset(y) && y.is_subset(x) && val(i) != val(j) {
                Some(
                    Witness::new()
                        .set("X", u, x)
                        .set("Y", u, y)
                        .set("mu(X)", u, val(i))
                        .set("mu(Y)", u, val(j)),
                )
            } else {
                None
            }
        })
        .map(|w| Verdict::fail(condition, w)),
        MuEmpty | MuEmptyFin => members
            .iter()
            .enumerate()
            .find(|&(i, &x)| !x.is_empty() && val(i).is_empty())
            .map(|(_, &x)| Verdict::fail(condition, Witness::new().set("X", u, x))),
        MuEq => first_pair(members, |i, j| {
            let (x, y) = (members[i], members[j]);
            if x.is_subset(y) && !val(j).inter(x).is_empty() && val(j).inter(x) != val(i) {
                Some(
                    Witness::new()
                        .set("X", u, x)
                        .set("Y", u, y)
                        .set("mu(Y)∩X", u, val(j).inter(x))
                        .set("mu(X)", u, val(i)),
                )
            } else {
                None
            }
        })
        .map(|w| Verdict::fail(condition, w)),
        MuEqPrime => first_pair(members, |i, j| {
            let (x, y) = (members[j], members[i]); // (μ=') quantifies (Y, X)
            let yx = y.inter(x);
            let k = fam.member_index(yx)?;
            if !val(i).inter(x).is_empty() && val(k) != val(i).inter(x) {
                Some(Witness::new().set("Y", u, y).set("X", u, x).set("Y∩X", u, yx))
            } else {
                None
            }
        })
        .map(|w| Verdict::fail(condition, w)),
        MuPar => first_pair(members, |i, j| {
            let (x, y) = (members[i], members[j]);
            let k = fam.member_index(x.union(y))?;
            let v = val(k);
            if v != val(i) && v != val(j) && v != val(i).union(val(j)) {
                Some(
                    Witness::new()
                        .set("X", u, x)
                        .set("Y", u, y)
                        .set("mu(X∪Y)", u, v),
                )
            } else {
                None
            }
        })
        .map(|w| Verdict::fail(condition, w)),
        MuUnion => first_pair(members, |i, j| {
            let (x, y) = (members[i], members[j]);
            let k = fam.member_index(x.union(y))?;
            if !val(j).inter(x.diff(val(i))).is_empty() && !val(k).inter(y).is_empty() {
                Some(
                    Witness::new()
                        .set("X", u, x)
                        .set("Y", u, y)
                        .set("mu(X∪Y)∩Y", u, val(k).inter(y)),
                )
            } else {
                None
            }
        })
        .map(|w| Verdict::fail(condition, w)),
        MuUnionPrime => first_pair(members, |i, j| {
            let (x, y) = (members[i], members[j]);
            let k = fam.member_index(x.union(y))?;
            if !val(j).inter(x.diff(val(i))).is_empty() && val(k) != val(i) {
                Some(
                    Witness::new()
                        .set("X", u, x)
                        .set("Y", u, y)
                        .set("mu(X∪Y)", u, val(k))
                        .set("mu(X)", u, val(i)),
                )
            } else {
                None
            }
        })
        .map(|w| Verdict::fail(condition, w)),
        MuIn => {
            // (μ∈) a ∈ X−μ(X) → ∃b ∈ X. a ∉ μ({a,b}); needs pair sets.
            for (i, &x) in members.iter().enumerate() {
                for a in x.diff(val(i)).iter() {
                    let mut ok = false;
                    for b in x.iter() {
                        let pair = PointSet::singleton(a).union(PointSet::singleton(b));
                        let k = fam.member_index(pair).ok_or_else(|| {
                            Error::missing_closure(format!(
                                "MU_IN needs pair set {} in the family",
                                u.display(pair)
                            ))
                        })?;
                        if !val(k).contains(a) {
                            ok = true;
                            break;
                        }
                    }
                    if !ok {
                        return Ok(Verdict::fail(
                            condition,
                            Witness::new().set("X", u, x).point("a", u, a),
                        ));
                    }
                }
            }
            None
        }
        Hu => check_hull(mu, false)?,
        Hux => check_hull(mu, true)?,
        MuTau => check_mu_tau(mu)?,
        MuCumAlpha(k) => return check_cum_alpha(mu, k, false),
        MuCumtAlpha(k) => return check_cum_alpha(mu, k, true),
        MuPrI(i) => {
            let derived = derive_mu_i(mu, i)?;
            for (idx, &m) in members.iter().enumerate() {
                let j = small_witness(fam, derived.value_at(idx), val(idx));
                if let Some(x) = j {
                    return Ok(Verdict::fail(
                        condition,
                        Witness::new()
                            .set("U", u, m)
                            .set("mu(U)", u, val(idx))
                            .set(&format!("mu{}(U)", i), u, derived.value_at(idx))
                            .set("separating X", u, x),
                    ));
                }
            }
            None
        }
        _ => return Err(Error::input(format!("{condition} is not a μ-condition"))),
    };
    Ok(verdict.unwrap_or_else(|| Verdict::pass(condition)))
}

fn first_pair(
    members: &[PointSet],
    mut probe: impl FnMut(usize, usize) -> Option<Witness>,
) -> Option<Witness> {
    for i in 0..members.len() {
        for j in 0..members.len() {
            if let Some(w) = probe(i, j) {
                return Some(w);
            }
        }
    }
    None
}

/// `μ(U)−A` small in `μ(U)`: returns the separating family member if not.
fn small_witness(fam: &DomainFamily, inner: PointSet, outer: PointSet) -> Option<PointSet> {
    // smallness of outer−inner in outer: no X with inner ⊆ X ⊂ outer
    let inner = inner.inter(outer);
    fam.members()
        .iter()
        .copied()
        .find(|&x| inner.is_subset(x) && x.is_proper_subset(outer))
}

/// Stages of the hull `H(U,x)` (or `H(U)` when `x` is absent): what can be
/// reached from `U` by adjoining sets whose selection already lies inside.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HSet {
    pub base: PointSet,
    pub focus: Option<usize>,
    pub stages: Vec<PointSet>,
    pub result: PointSet,
}

/// Computes the staged fixpoint `H(U,x)` / `H(U)`.
pub fn h_set(mu: &ChoiceFunction, base: PointSet, focus: Option<usize>) -> Result<HSet> {
    let fam = mu.family();
    if !fam.contains(base) {
        return Err(Error::input("H-hull base must be a family member"));
    }
    let mut stages = vec![base];
    let mut cur = base;
    loop {
        let mut next = cur;
        for (i, &x) in fam.members().iter().enumerate() {
            let eligible = match focus {
                Some(p) => x.contains(p),
                None => true,
            };
            if eligible && mu.value_at(i).is_subset(cur) {
                next = next.union(x);
            }
        }
        if next == cur {
            break;
        }
        stages.push(next);
        cur = next;
    }
    Ok(HSet { base, focus, stages, result: cur })
}

/// (HU) / (HUx): `x ∈ μ(U), x ∈ Y−μ(Y)` forbids `μ(Y) ⊆ H(U)` resp. `H(U,x)`.
fn check_hull(mu: &ChoiceFunction, with_focus: bool) -> Result<Option<Verdict>> {
    let fam = mu.family();
    let u = mu.universe();
    let id = if with_focus { ConditionId::Hux } else { ConditionId::Hu };
    for (ui, &base) in fam.members().iter().enumerate() {
        for x in mu.value_at(ui).iter() {
            let hull = if with_focus {
                h_set(mu, base, Some(x))?.result
            } else {
                h_set(mu, base, None)?.result
            };
            for (yi, &y) in fam.members().iter().enumerate() {
                if y.contains(x) && !mu.value_at(yi).contains(x) && mu.value_at(yi).is_subset(hull)
                {
                    return Ok(Some(Verdict::fail(
                        id,
                        Witness::new()
                            .set("U", u, base)
                            .point("x", u, x)
                            .set("Y", u, y)
                            .set("mu(Y)", u, mu.value_at(yi))
                            .set("H", u, hull),
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Exhaustive search for a violation of `(μCum k)` or `(μCumt k)`: base `U`
/// and a sequence `X_0..X_k` with the staged prerequisite
/// `μ(X_β) ⊆ U ∪ ⋃{X_γ: γ<β}`; the conclusion intersects all sets (plain) or
/// only the last one (transitive variant).
///
/// Sequences may repeat sets, but a repeat changes neither the unions nor the
/// intersection, so a violating sequence of length `j+1 ≤ k+1` compresses to
/// a duplicate-free one and, conversely, stuttering pads any short violation
/// out to length `k+1`. The search therefore runs duplicate-free at every
/// length up to `k`, shortest first; the first violation found in
/// lexicographic member order is the witness.
pub fn check_cum_alpha(mu: &ChoiceFunction, k: u32, transitive_variant: bool) -> Result<Verdict> {
    let fam = mu.family();
    let u = mu.universe();
    let id = if transitive_variant {
        ConditionId::MuCumtAlpha(k)
    } else {
        ConditionId::MuCumAlpha(k)
    };

    // depth-first over duplicate-free sequences of one fixed length, pruning
    // on the staged prerequisite and, for the plain variant, on the running
    // intersection with μ(U)
    struct Search<'a> {
        mu: &'a ChoiceFunction,
        len: usize,
        transitive: bool,
        seq: Vec<usize>,
    }
    impl Search<'_> {
        fn go(
            &mut self,
            ui: usize,
            depth: usize,
            union: PointSet,
            inter: PointSet,
        ) -> Option<(Vec<usize>, usize)> {
            let fam = self.mu.family();
            if depth == self.len {
                let last = *self.seq.last().unwrap();
                let conclusion_lhs = if self.transitive {
                    fam.members()[last].inter(self.mu.value_at(ui))
                } else {
                    inter.inter(self.mu.value_at(ui))
                };
                if !conclusion_lhs.is_subset(self.mu.value_at(last)) {
                    let bad = conclusion_lhs.diff(self.mu.value_at(last)).iter().next().unwrap();
                    return Some((self.seq.clone(), bad));
                }
                return None;
            }
            for xi in 0..fam.len() {
                if self.seq.contains(&xi) {
                    continue;
                }
                if !self.mu.value_at(xi).is_subset(union) {
                    continue;
                }
                let x = fam.members()[xi];
                let next_inter = inter.inter(x);
                if !self.transitive && next_inter.inter(self.mu.value_at(ui)).is_empty() {
                    continue; // no witness point can survive the intersection
                }
                self.seq.push(xi);
                if let Some(hit) = self.go(ui, depth + 1, union.union(x), next_inter) {
                    return Some(hit);
                }
                self.seq.pop();
            }
            None
        }
    }

    for len in 1..=(k as usize + 1).min(fam.len()) {
        for (ui, &base) in fam.members().iter().enumerate() {
            let mut search = Search { mu, len, transitive: transitive_variant, seq: Vec::new() };
            if let Some((seq, point)) = search.go(ui, 0, base, u.full_set()) {
                let sets: Vec<PointSet> = seq.iter().map(|&i| fam.members()[i]).collect();
                return Ok(Verdict::fail(
                    id,
                    Witness::new()
                        .set("U", u, base)
                        .sets("X", u, &sets)
                        .point("x", u, point),
                ));
            }
        }
    }
    Ok(Verdict::pass(id))
}

/// Conjunction bound standing in for `(μCum ∞)` / `(μCumt ∞)`: duplicate-free
/// sequences over the family cannot be longer than the family itself.
pub fn cum_infinity_bound(fam: &DomainFamily) -> u32 {
    fam.len().saturating_sub(1) as u32
}

/// `(μCum ∞)`: all `(μCum k)` up to the sequence-length bound.
pub fn check_cum_infinity(mu: &ChoiceFunction, transitive_variant: bool) -> Result<Verdict> {
    for k in 0..=cum_infinity_bound(mu.family()) {
        let v = check_cum_alpha(mu, k, transitive_variant)?;
        if !v.holds {
            return Ok(v);
        }
    }
    Ok(Verdict::pass(if transitive_variant {
        ConditionId::MuCumtAlpha(u32::MAX)
    } else {
        ConditionId::MuCumAlpha(u32::MAX)
    })
    .with_note("conjunction over all k up to the family bound"))
}

/// A node of the μτ tree: the treated sets, the chosen points, and whether
/// the node is a dead end after pruning.
#[derive(Clone, Debug)]
pub struct TauNode {
    pub sets: Vec<usize>,
    pub points: Vec<usize>,
    pub starred: bool,
    pub children: Vec<usize>,
}

/// The labeled tree the μτ procedure explores for one `(U, x)` root.
#[derive(Clone, Debug)]
pub struct TauTree {
    pub nodes: Vec<TauNode>,
    pub root: usize,
    pub root_starred: bool,
}

/// Memoized star test for the μτ procedure. A position is legal iff for every
/// untreated set containing the current point there is some successor choice
/// that is itself legal; successor legality depends only on the visited-set
/// mask and the current point.
pub struct TauStar<'a> {
    mu: &'a ChoiceFunction,
    memo: HashMap<(u64, usize), bool>,
}

impl<'a> TauStar<'a> {
    pub fn new(mu: &'a ChoiceFunction) -> TauStar<'a> {
        TauStar { mu, memo: HashMap::new() }
    }

    fn union_of(&self, visited: u64) -> PointSet {
        let mut s = PointSet::EMPTY;
        for (i, &m) in self.mu.family().members().iter().enumerate() {
            if visited >> i & 1 == 1 {
                s = s.union(m);
            }
        }
        s
    }

    /// Candidate next points when treating member `yi` from `point`:
    /// staying put is allowed when the point is already minimal there,
    /// otherwise a fresh element of `μ(Y)` outside everything visited.
    fn candidates(&self, visited: u64, point: usize, yi: usize) -> Vec<usize> {
        let muy = self.mu.value_at(yi);
        let fresh = muy.diff(self.union_of(visited));
        let mut out = Vec::new();
        if muy.contains(point) {
            out.push(point);
        }
        out.extend(fresh.iter().filter(|&p| p != point));
        out
    }

    pub fn ok(&mut self, visited: u64, point: usize) -> bool {
        if let Some(&v) = self.memo.get(&(visited, point)) {
            return v;
        }
        // terminates: every recursive call strictly grows `visited`
        let fam_len = self.mu.family().len();
        let mut good = true;
        for yi in 0..fam_len {
            if visited >> yi & 1 == 1 {
                continue;
            }
            if !self.mu.family().members()[yi].contains(point) {
                continue;
            }
            let cands = self.candidates(visited, point, yi);
            let survivable = cands
                .iter()
                .any(|&c| self.ok(visited | 1 << yi, c));
            if !survivable {
                good = false;
                break;
            }
        }
        self.memo.insert((visited, point), good);
        good
    }
}

/// Checks `(μτ)` overall: no root `⟨(U), (x)⟩` with `x ∈ μ(U)` may be starred.
pub fn check_mu_tau(mu: &ChoiceFunction) -> Result<Option<Verdict>> {
    let fam = mu.family();
    if fam.len() > 63 {
        return Err(Error::input("μτ check capped at 63 family members"));
    }
    let u = mu.universe();
    let mut engine = TauStar::new(mu);
    for (ui, &base) in fam.members().iter().enumerate() {
        for x in mu.value_at(ui).iter() {
            if !engine.ok(1 << ui, x) {
                return Ok(Some(Verdict::fail(
                    ConditionId::MuTau,
                    Witness::new().set("U", u, base).point("x", u, x),
                )));
            }
        }
    }
    Ok(None)
}

/// Builds the full labeled μτ tree for one root `(U, x)`, stars propagated.
/// `x ∈ μ(U)` is required. Node count is capped to keep pathological inputs
/// from exploding; the cap is far above anything desk scale produces.
pub fn mu_tau_tree(mu: &ChoiceFunction, base: PointSet, x: usize) -> Result<TauTree> {
    let fam = mu.family();
    let ui = fam
        .member_index(base)
        .ok_or_else(|| Error::input("μτ base must be a family member"))?;
    if !mu.value_at(ui).contains(x) {
        return Err(Error::input("μτ root point must be in μ(U)"));
    }
    let mut engine = TauStar::new(mu);
    let mut nodes: Vec<TauNode> = Vec::new();
    const CAP: usize = 200_000;

    fn build(
        engine: &mut TauStar,
        nodes: &mut Vec<TauNode>,
        visited: u64,
        sets: &mut Vec<usize>,
        points: &mut Vec<usize>,
    ) -> Result<usize> {
        if nodes.len() >= CAP {
            return Err(Error::input("μτ tree too large"));
        }
        let point = *points.last().unwrap();
        let me = nodes.len();
        nodes.push(TauNode {
            sets: sets.clone(),
            points: points.clone(),
            starred: !engine.ok(visited, point),
            children: Vec::new(),
        });
        let fam_len = engine.mu.family().len();
        let mut children = Vec::new();
        for yi in 0..fam_len {
            if visited >> yi & 1 == 1 || !engine.mu.family().members()[yi].contains(point) {
                continue;
            }
            for c in engine.candidates(visited, point, yi) {
                sets.push(yi);
                points.push(c);
                let child = build(engine, nodes, visited | 1 << yi, sets, points)?;
                children.push(child);
                sets.pop();
                points.pop();
            }
        }
        nodes[me].children = children;
        Ok(me)
    }

    let mut sets = vec![ui];
    let mut points = vec![x];
    let root = build(&mut engine, &mut nodes, 1 << ui, &mut sets, &mut points)?;
    let root_starred = nodes[root].starred;
    Ok(TauTree { nodes, root, root_starred })
}

/// The derived functions of Definition 4.3. `i = 2` needs union closure,
/// `i = 3` needs singletons and pair sets in the family.
pub fn derive_mu_i(mu: &ChoiceFunction, i: u8) -> Result<ChoiceFunction> {
    let fam = mu.family();
    match i {
        0 | 1 => {}
        2 => {
            if !fam.flags().closed_finite_union {
                return Err(Error::missing_closure("mu_2 needs a union-closed family"));
            }
        }
        3 => {
            let u = fam.universe();
            for a in 0..u.len() {
                for b in a..u.len() {
                    let pair = PointSet::singleton(a).union(PointSet::singleton(b));
                    if !fam.contains(pair) {
                        return Err(Error::missing_closure(
                            "mu_3 needs all singletons and pair sets in the family",
                        ));
                    }
                }
            }
        }
        _ => return Err(Error::input("derived index must be 0..3")),
    }
    let members = fam.members();
    let values: Vec<PointSet> = members
        .iter()
        .enumerate()
        .map(|(_ui, &base)| {
            let mut keep = PointSet::EMPTY;
            'point: for x in base.iter() {
                match i {
                    3 => {
                        for y in base.iter() {
                            let pair = PointSet::singleton(x).union(PointSet::singleton(y));
                            let k = fam.member_index(pair).expect("checked above");
                            if !mu.value_at(k).contains(x) {
                                continue 'point;
                            }
                        }
                    }
                    _ => {
                        for (yi, &y) in members.iter().enumerate() {
                            if !y.contains(x) || mu.value_at(yi).contains(x) {
                                continue;
                            }
                            let triggers = match i {
                                0 => y.is_subset(base),
                                1 => mu.value_at(yi).is_subset(base),
                                2 => {
                                    let uy = fam
                                        .member_index(base.union(y))
                                        .expect("union closed");
                                    mu.value_at(uy).is_subset(base)
                                }
                                _ => unreachable!(),
                            };
                            if triggers {
                                continue 'point;
                            }
                        }
                    }
                }
                keep.insert(x);
            }
            keep
        })
        .collect();
    ChoiceFunction::new(fam.clone(), values)
}

/// The limit-variant laws over the subject's MISE systems.
fn check_lambda(condition: ConditionId, subject: &Subject, family: &DomainFamily) -> Result<Verdict> {
    use ConditionId::*;
    let u = family.universe();
    let mut lambda_cache: BTreeMap<PointSet, Vec<PointSet>> = BTreeMap::new();
    let mut lambda = |x: PointSet| -> Result<Vec<PointSet>> {
        if let Some(v) = lambda_cache.get(&x) {
            return Ok(v.clone());
        }
        let v = subject.lambda_sets(x)?;
        lambda_cache.insert(x, v.clone());
        Ok(v)
    };
    match condition {
        LambdaAnd => {
            for &x in family.members() {
                let lam = lambda(x)?;
                for &a in &lam {
                    for &b in &lam {
                        if !lam.iter().any(|&c| c.is_subset(a.inter(b))) {
                            return Ok(Verdict::fail(
                                condition,
                                Witness::new().set("X", u, x).set("A", u, a).set("B", u, b),
                            ));
                        }
                    }
                }
            }
        }
        LambdaPr => {
            for &x in family.members() {
                for &y in family.members() {
                    if !x.is_subset(y) {
                        continue;
                    }
                    let lx = lambda(x)?;
                    let ly = lambda(y)?;
                    for &a in &lx {
                        if !ly.iter().any(|&b| b.inter(x).is_subset(a)) {
                            return Ok(Verdict::fail(
                                condition,
                                Witness::new().set("X", u, x).set("Y", u, y).set("A", u, a),
                            ));
                        }
                    }
                }
            }
        }
        LambdaCumFin => {
            for &x in family.members() {
                for &y in family.members() {
                    if !x.is_subset(y) {
                        continue;
                    }
                    let lx = lambda(x)?;
                    let ly = lambda(y)?;
                    if !ly.iter().any(|&b| b.is_subset(x)) {
                        continue;
                    }
                    for &a in &lx {
                        if !ly.iter().any(|&b| b.is_subset(a)) {
                            return Ok(Verdict::fail(
                                condition,
                                Witness::new().set("X", u, x).set("Y", u, y).set("A", u, a),
                            ));
                        }
                    }
                    for &b in &ly {
                        if !lx.iter().any(|&a| a.is_subset(b)) {
                            return Ok(Verdict::fail(
                                condition,
                                Witness::new().set("X", u, x).set("Y", u, y).set("B'", u, b),
                            ));
                        }
                    }
                }
            }
        }
        LambdaEq => {
            for &x in family.members() {
                for &y in family.members() {
                    if !x.is_subset(y) {
                        continue;
                    }
                    let lx = lambda(x)?;
                    let ly = lambda(y)?;
                    if !ly.iter().all(|&b| !b.inter(x).is_empty()) {
                        continue;
                    }
                    for &b in &ly {
                        if !lx.iter().any(|&a| a.is_subset(b.inter(x))) {
                            return Ok(Verdict::fail(
                                condition,
                                Witness::new().set("X", u, x).set("Y", u, y).set("B", u, b),
                            ));
                        }
                    }
                    for &a in &lx {
                        if !ly.iter().any(|&b| b.inter(x).is_subset(a)) {
                            return Ok(Verdict::fail(
                                condition,
                                Witness::new().set("X", u, x).set("Y", u, y).set("A", u, a),
                            ));
                        }
                    }
                }
            }
        }
        _ => return Err(Error::input("not a limit condition")),
    }
    Ok(Verdict::pass(condition))
}

/// The Booth side conditions `(μ⁻1)..(μ⁻5)`.
fn check_mu_minus(j: u8, nu: &NuData, family: &DomainFamily) -> Result<Verdict> {
    let u = family.universe();
    let id = ConditionId::MuMinus(j);
    let plus = |x: PointSet| nu.plus(x);
    let minus = |x: PointSet| nu.minus(x);
    for &x in family.members() {
        for &y in family.members() {
            let bad = match j {
                1 => !y.inter(minus(x)).is_empty() && !plus(y).inter(x).is_empty(),
                2 => {
                    let xy = x.union(y);
                    family.contains(xy)
                        && !y.inter(minus(x)).is_empty()
                        && plus(xy) != plus(y)
                }
                3 => !y.inter(minus(x)).is_empty() && !minus(y).inter(x).is_empty(),
                4 => plus(x).is_subset(plus(y)) && !minus(x).is_subset(minus(y)),
                5 => {
                    let xy = x.union(y);
                    family.contains(xy)
                        && plus(xy) == plus(x).union(plus(y))
                        && minus(xy) != minus(x).union(minus(y))
                }
                _ => return Err(Error::input("MU_MINUS index must be 1..5")),
            };
            if bad {
                return Ok(Verdict::fail(id, Witness::new().set("X", u, x).set("Y", u, y)));
            }
        }
    }
    Ok(Verdict::pass(id))
}

/// `(*4)` for the distance-based minimal revision with approximation through
/// `hat`: consistency of `T*T'` with `T''` forces
/// `T*(T'∪T'') = classical closure of (T*T') ∪ T''`.
fn check_star4(space: &DistanceSpace, family: &DomainFamily) -> Result<Verdict> {
    let u = family.universe();
    let fl = family.flags();
    if !fl.closed_pairwise_intersection || !fl.contains_empty {
        return Err(Error::missing_closure("STAR4 needs an intersection-closed family with ∅"));
    }
    for &a in family.members() {
        if a.is_empty() {
            continue;
        }
        for &b in family.members() {
            if b.is_empty() {
                continue;
            }
            let revised = family.hat(space.revision_min(a, b))?;
            for &c in family.members() {
                if revised.inter(c).is_empty() {
                    continue; // not consistent, no claim
                }
                let lhs_core = space.revision_min(a, b.inter(c));
                let lhs = if lhs_core.is_empty() {
                    PointSet::EMPTY
                } else {
                    family.hat(lhs_core)?
                };
                let rhs = revised.inter(c);
                if lhs != rhs {
                    return Ok(Verdict::fail(
                        ConditionId::Star4,
                        Witness::new()
                            .set("M(T)", u, a)
                            .set("M(T')", u, b)
                            .set("M(T'')", u, c)
                            .set("T*(T'∪T'')", u, lhs)
                            .set("(T*T')∪T''", u, rhs),
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass(ConditionId::Star4))
}

/// Logical rules of the basic table, evaluated semantically over the family:
/// theories are family members, the consequence set of `A` has model set
/// `hat(μ(A))`.
fn check_logical(condition: ConditionId, mu: &ChoiceFunction) -> Result<Verdict> {
    use ConditionId::*;
    let fam = mu.family();
    let u = mu.universe();
    let fl = fam.flags();
    if !fl.closed_pairwise_intersection || !fl.contains_universe {
        return Err(Error::missing_closure(
            "logical conditions need an intersection-closed family containing the universe",
        ));
    }
    let cons = |i: usize| -> Result<PointSet> { fam.hat(mu.value_at(i)) };
    let members = fam.members();
    match condition {
        Lle => {
            // theories are identified with model sets; LLE holds by functionality
            Ok(Verdict::pass(condition).with_note("theories are canonical model sets"))
        }
        Rw | And => {
            // on model sets these are inclusion tautologies: cons(T) ⊆ M(ψ) ⊆ M(ψ')
            // propagates, and cons(T) lies inside M(ψ)∩M(ψ') iff inside both
            Ok(Verdict::pass(condition).with_note("tautological on canonical model sets"))
        }
        Sc => {
            // T ⊢ ψ → T |~ ψ reduces to hat(μ(A)) ⊆ A, i.e. μ(A) ⊆ A on members
            for (i, &a) in members.iter().enumerate() {
                if !mu.value_at(i).is_subset(a) {
                    return Ok(Verdict::fail(
                        condition,
                        Witness::new().set("T", u, a).set("mu", u, mu.value_at(i)),
                    ));
                }
            }
            Ok(Verdict::pass(condition))
        }
        Ccl => {
            for (i, &a) in members.iter().enumerate() {
                let c = cons(i)?;
                if !fam.contains(c) {
                    return Ok(Verdict::fail(
                        condition,
                        Witness::new().set("T", u, a).set("consequences", u, c),
                    ));
                }
            }
            Ok(Verdict::pass(condition))
        }
        Cp => {
            for (i, &a) in members.iter().enumerate() {
                if mu.value_at(i).is_empty() && !a.is_empty() {
                    return Ok(Verdict::fail(condition, Witness::new().set("T", u, a)));
                }
            }
            Ok(Verdict::pass(condition))
        }
        Or => {
            // T |~ ψ, T' |~ ψ ⇒ T∨T' |~ ψ, with ψ over family members
            for (i, &a) in members.iter().enumerate() {
                for (j, &b) in members.iter().enumerate() {
                    let Some(k) = fam.member_index(a.union(b)) else { continue };
                    let (ca, cb, cab) = (cons(i)?, cons(j)?, cons(k)?);
                    for &psi in members {
                        if ca.is_subset(psi) && cb.is_subset(psi) && !cab.is_subset(psi) {
                            return Ok(Verdict::fail(
                                condition,
                                Witness::new().set("T", u, a).set("T'", u, b).set("psi", u, psi),
                            ));
                        }
                    }
                }
            }
            Ok(Verdict::pass(condition))
        }
        Rm => {
            for (i, &a) in members.iter().enumerate() {
                let ca = cons(i)?;
                for &b in members {
                    if ca.inter(b).is_empty() {
                        continue; // T |~ ¬ψ', no claim
                    }
                    let Some(k) = fam.member_index(a.inter(b)) else { continue };
                    let cab = cons(k)?;
                    for &psi in members {
                        if ca.is_subset(psi) && !cab.is_subset(psi) {
                            return Ok(Verdict::fail(
                                condition,
                                Witness::new()
                                    .set("T", u, a)
                                    .set("psi'", u, b)
                                    .set("psi", u, psi),
                            ));
                        }
                    }
                }
            }
            Ok(Verdict::pass(condition))
        }
        Cm | Cum => {
            for (i, &a) in members.iter().enumerate() {
                let ca = cons(i)?;
                for (j, &b) in members.iter().enumerate() {
                    if !(b.is_subset(a) && ca.is_subset(b)) {
                        continue; // needs T ⊆ T̄' ⊆ T̄̄
                    }
                    let cb = cons(j)?;
                    let bad = if condition == Cm { !cb.is_subset(ca) } else { cb != ca };
                    if bad {
                        return Ok(Verdict::fail(
                            condition,
                            Witness::new()
                                .set("T", u, a)
                                .set("T'", u, b)
                                .set("cons(T)", u, ca)
                                .set("cons(T')", u, cb),
                        ));
                    }
                }
            }
            Ok(Verdict::pass(condition))
        }
        Pr => {
            for (i, &a) in members.iter().enumerate() {
                let ca = cons(i)?;
                for &b in members {
                    let Some(k) = fam.member_index(a.inter(b)) else { continue };
                    let cab = cons(k)?;
                    if !ca.inter(b).is_subset(cab) {
                        return Ok(Verdict::fail(
                            condition,
                            Witness::new()
                                .set("T", u, a)
                                .set("T'", u, b)
                                .set("cons(T)∩M(T')", u, ca.inter(b))
                                .set("cons(T∪T')", u, cab),
                        ));
                    }
                }
            }
            Ok(Verdict::pass(condition))
        }
        _ => Err(Error::input("not a logical condition")),
    }
}

/// The intersection-based consequence `Γ ⊢ Δ iff Γ∩Δ ≠ ∅` and its rules
/// s-R, M, C, verified over every pair/triple of subsets of the base set.
fn check_scr(universe: &Universe) -> Result<Verdict> {
    let n = universe.len();
    if n > 4 {
        return Err(Error::input("SCR_RULES capped at 4 base elements"));
    }
    let full = universe.full_set();
    let turnstile = |g: PointSet, d: PointSet| !g.inter(d).is_empty();
    // s-R is the definition; M is monotony in both slots; C is the cut rule.
    for g in full.subsets() {
        for d in full.subsets() {
            if turnstile(g, d) {
                for g2 in full.subsets() {
                    for d2 in full.subsets() {
                        if g.is_subset(g2) && d.is_subset(d2) && !turnstile(g2, d2) {
                            return Ok(Verdict::fail(
                                ConditionId::ScrRules,
                                Witness::new()
                                    .set("Gamma", universe, g)
                                    .set("Delta", universe, d)
                                    .set("Gamma'", universe, g2)
                                    .set("Delta'", universe, d2),
                            )
                            .with_note("monotony M failed"));
                        }
                    }
                }
            }
        }
    }
    for g1 in full.subsets() {
        for d1 in full.subsets() {
            for g2 in full.subsets() {
                for d2 in full.subsets() {
                    for psi in 0..n {
                        let p = PointSet::singleton(psi);
                        if turnstile(g1, d1.union(p))
                            && turnstile(g2.union(p), d2)
                            && !turnstile(g1.union(g2), d1.union(d2))
                        {
                            return Ok(Verdict::fail(
                                ConditionId::ScrRules,
                                Witness::new()
                                    .set("Gamma1", universe, g1)
                                    .set("Delta1", universe, d1)
                                    .set("Gamma2", universe, g2)
                                    .set("Delta2", universe, d2)
                                    .point("psi", universe, psi),
                            )
                            .with_note("cut C failed"));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::pass(ConditionId::ScrRules).with_note("s-R holds by definition; M and C verified"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn uni(names: &[&str]) -> Universe {
        Universe::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn condition_id_round_trip() {
        let ids = [
            "MU_SUBSET",
            "MU_CUM_ALPHA:2",
            "MU_CUMT_ALPHA:0",
            "MU_PR_I:3",
            "MU_MINUS:5",
            "LAMBDA_CUMFIN",
            "SCR_RULES",
            "STAR4",
        ];
        for s in ids {
            let id: ConditionId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!("MU_MINUS:6".parse::<ConditionId>().is_err());
        assert!("MU_CUM:1".parse::<ConditionId>().is_err());
        assert!("NOPE".parse::<ConditionId>().is_err());
    }

    #[test]
    fn mu_subset_holds_for_structure_mu() {
        let u = uni(&["a", "b", "c"]);
        let fam = DomainFamily::new(u.clone(), (0u64..8).map(PointSet)).unwrap();
        let s = PrefStructure::simple(u.clone(), [(0, 1), (1, 2)]).unwrap();
        let mu = ChoiceFunction::from_structure(&s, &fam);
        assert!(check_mu_condition(ConditionId::MuSubset, &mu).unwrap().holds);
        assert!(check_mu_condition(ConditionId::MuPr, &mu).unwrap().holds);
    }

    #[test]
    fn identity_mu_h_set_stays_at_base() {
        let u = uni(&["a", "b", "c"]);
        let fam = DomainFamily::new(u.clone(), (0u64..8).map(PointSet)).unwrap();
        let mu = ChoiceFunction::new(fam.clone(), fam.members().to_vec()).unwrap();
        for &m in fam.members() {
            let h = h_set(&mu, m, None).unwrap();
            assert_eq!(h.result, m, "identity μ only adjoins subsets");
        }
    }

    #[test]
    fn h_set_monotone_in_focus() {
        // H(U,x) ⊆ H(U) for all U, x (paper: noted after the definition)
        let u = uni(&["a", "b", "c"]);
        let fam = DomainFamily::new(u.clone(), (0u64..8).map(PointSet)).unwrap();
        let s = PrefStructure::simple(u.clone(), [(0, 1)]).unwrap();
        let mu = ChoiceFunction::from_structure(&s, &fam);
        for &m in fam.members() {
            let hu = h_set(&mu, m, None).unwrap().result;
            for x in 0..3 {
                let hux = h_set(&mu, m, Some(x)).unwrap().result;
                assert!(hux.is_subset(hu));
            }
        }
    }

    #[test]
    fn example_2_1_h_set_stages_and_hux() {
        // κ=1: H(U,c) grows U → U∪X0 → U∪X0∪X'1 and (HUx) fails there.
        let inst = gallery::gallery("cum_hierarchy", &[("k", "1")].into()).unwrap();
        let mu = inst.payload.as_choice().unwrap();
        let u = mu.universe();
        let base = u.set_of(&["a", "c", "x0"]).unwrap();
        let c = u.index_of("c").unwrap();
        let h = h_set(&mu, base, Some(c)).unwrap();
        assert_eq!(h.stages.len(), 3);
        let x0 = u.set_of(&["c", "x0", "x'0", "x1"]).unwrap();
        assert_eq!(h.stages[1], base.union(x0));
        assert_eq!(h.result, u.full_set());
        let v = check_mu_condition(ConditionId::Hux, &mu).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn cumt_fail_fixture() {
        // Fact 2.1 (2.3): c≺b≺a without transitivity over {a,b,c}.
        let u = uni(&["a", "b", "c"]);
        let s = PrefStructure::simple(u.clone(), [(2, 1), (1, 0)]).unwrap();
        let members = [
            PointSet::EMPTY,
            u.set_of(&["a"]).unwrap(),
            u.set_of(&["b"]).unwrap(),
            u.set_of(&["c"]).unwrap(),
            u.set_of(&["a", "c"]).unwrap(),
            u.set_of(&["b", "c"]).unwrap(),
            u.set_of(&["a", "b"]).unwrap(),
        ];
        let fam = DomainFamily::new(u.clone(), members).unwrap();
        let mu = ChoiceFunction::from_structure(&s, &fam);
        let v = check_cum_alpha(&mu, 1, true).unwrap();
        assert!(!v.holds, "(μCumt1) must fail");
        // the violating point is a: X1∩μ(U) = {a} ⊄ {b} = μ(X1)
        match v.witness.unwrap().get("x") {
            Some(WitnessItem::Point(p)) => assert_eq!(p, "a"),
            w => panic!("unexpected witness {w:?}"),
        }
        // all (μCum k) hold: the structure is smooth for the family
        for k in 0..=2 {
            assert!(check_cum_alpha(&mu, k, false).unwrap().holds);
        }
        let rep = crate::structures::check_structure(&s, &fam);
        assert!(rep.smooth, "fixture is smooth for the listed sets");
    }

    #[test]
    fn derived_mu_identity_stays_identity() {
        let u = uni(&["a", "b"]);
        let fam = DomainFamily::new(u.clone(), (0u64..4).map(PointSet)).unwrap();
        let mu = ChoiceFunction::new(fam.clone(), fam.members().to_vec()).unwrap();
        for i in 0..4u8 {
            let d = derive_mu_i(&mu, i).unwrap();
            assert_eq!(d, mu, "identity is a fixpoint of mu_{i}");
        }
    }

    #[test]
    fn derived_mu_orderings() {
        // Fact 4.7 (1): μ1 ⊆ μ0 and μ3 ⊆ μ0 under (μ⊆)
        let u = uni(&["a", "b", "c"]);
        let fam = DomainFamily::new(u.clone(), (0u64..8).map(PointSet)).unwrap();
        let s = PrefStructure::simple(u.clone(), [(0, 1), (1, 2), (0, 2)]).unwrap();
        let mu = ChoiceFunction::from_structure(&s, &fam);
        let m0 = derive_mu_i(&mu, 0).unwrap();
        let m1 = derive_mu_i(&mu, 1).unwrap();
        let m3 = derive_mu_i(&mu, 3).unwrap();
        for i in 0..fam.len() {
            assert!(m1.value_at(i).is_subset(m0.value_at(i)));
            assert!(m3.value_at(i).is_subset(m0.value_at(i)));
        }
        // ranked-derived μ has μ3 = μ on finite sets (Fact 4.13 (2))
        let r = RankedStructure::new(u.clone(), vec![0, 1, 2]).unwrap();
        let mu_r = ChoiceFunction::from_ranked(&r, &fam);
        assert_eq!(derive_mu_i(&mu_r, 3).unwrap(), mu_r);
    }

    #[test]
    fn scr_rules_hold_on_small_bases() {
        for n in 0..=4 {
            let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
            let u = Universe::new(names).unwrap();
            let v = check_scr(&u).unwrap();
            assert!(v.holds, "⊢ is an scr over {n} elements");
        }
    }

    #[test]
    fn lambda_and_fails_on_initial_segment_example() {
        let u = uni(&["a", "b", "c", "d"]);
        let s = PrefStructure::simple(u.clone(), [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let fam = DomainFamily::new(u.clone(), (0u64..16).map(PointSet)).unwrap();
        let v = check(ConditionId::LambdaAnd, &Subject::Pref(&s), &fam).unwrap();
        assert!(!v.holds);
        // a transitive repair satisfies it
        let t = PrefStructure::simple(
            u.clone(),
            [(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)],
        )
        .unwrap();
        let v = check(ConditionId::LambdaAnd, &Subject::Pref(&t), &fam).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn mu_tau_holds_on_transitive_smooth_mu() {
        let u = uni(&["a", "b", "c"]);
        let fam = DomainFamily::new(u.clone(), (0u64..8).map(PointSet)).unwrap();
        let s = PrefStructure::simple(u.clone(), [(0, 1), (1, 2), (0, 2)]).unwrap();
        let mu = ChoiceFunction::from_structure(&s, &fam);
        assert!(check_mu_tau(&mu).unwrap().is_none());
    }
}
