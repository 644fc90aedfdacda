//! Finite propositional languages, models, formulas, theories, and the bridge
//! from syntax to the set-algebra layer.
//!
//! A theory is identified with its model set (truth-table normal form); source
//! formulas are kept only as input syntax. All logical conditions downstream
//! are checked semantically on model sets.

use crate::error::{Error, Result};
use crate::universe::{DomainFamily, PointSet, Universe};

/// A propositional language: an ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Language {
    vars: Vec<String>,
}

impl Language {
    pub fn new<I, S>(vars: I) -> Result<Language>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::input(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::input(format!("duplicate variable {v:?}")));
            }
        }
        if vars.len() > 6 {
            return Err(Error::input("at most 6 propositional variables are supported"));
        }
        Ok(Language { vars })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Number of models, `2^n`.
    pub fn model_count(&self) -> usize {
        1usize << self.vars.len()
    }

    /// Model with the given index. Bit layout: variable `i` is true in model
    /// `m` iff bit `n-1-i` of `m` is set, so the name of model `m` is the
    /// `n`-character binary string with variable 0 leftmost.
    pub fn model(&self, index: usize) -> Model {
        Model { index, width: self.vars.len() }
    }

    pub fn models(&self) -> impl Iterator<Item = Model> + '_ {
        (0..self.model_count()).map(move |i| self.model(i))
    }

    /// The universe whose points are the model names of this language.
    /// Model index equals point index because binary names sort numerically.
    pub fn model_universe(&self) -> Universe {
        Universe::new((0..self.model_count()).map(|i| self.model(i).name()))
            .expect("model names are distinct")
    }

    /// All models as a set.
    pub fn all_models(&self) -> PointSet {
        PointSet((!0u64) >> (64 - self.model_count()))
    }
}

/// A classical model: a total assignment of the language's variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Model {
    index: usize,
    width: usize,
}

impl Model {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn truth(&self, var: usize) -> bool {
        self.index >> (self.width - 1 - var) & 1 == 1
    }

    /// Binary-string name, variable 0 leftmost: `"10"` is p=true, q=false.
    pub fn name(&self) -> String {
        (0..self.width)
            .map(|v| if self.truth(v) { '1' } else { '0' })
            .collect()
    }
}

/// Formula syntax tree. Connectives: ¬ ∧ ∨ → ↔ plus the constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Formula {
    True,
    False,
    Var(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    /// Parses the CLI text syntax: `! & | -> <->`, `true`, `false`,
    /// identifiers, parentheses; precedence ¬ > ∧ > ∨ > → > ↔.
    pub fn parse(text: &str) -> Result<Formula> {
        Parser::new(text)?.parse_formula()
    }

    pub fn eval(&self, lang: &Language, m: Model) -> Result<bool> {
        Ok(match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Var(v) => {
                let idx = lang
                    .index_of(v)
                    .ok_or_else(|| Error::input(format!("unknown variable {v:?}")))?;
                m.truth(idx)
            }
            Formula::Not(a) => !a.eval(lang, m)?,
            Formula::And(a, b) => a.eval(lang, m)? && b.eval(lang, m)?,
            Formula::Or(a, b) => a.eval(lang, m)? || b.eval(lang, m)?,
            Formula::Implies(a, b) => !a.eval(lang, m)? || b.eval(lang, m)?,
            Formula::Iff(a, b) => a.eval(lang, m)? == b.eval(lang, m)?,
        })
    }
}

struct Parser<'a> {
    toks: Vec<Tok<'a>>,
    pos: usize,
}

#[derive(Clone, Copy, PartialEq, Debug)]
enum Tok<'a> {
    Ident(&'a str),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Parser<'a>> {
        let mut toks = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\n' | '\r' => i += 1,
                '!' => {
                    toks.push(Tok::Not);
                    i += 1;
                }
                '&' => {
                    toks.push(Tok::And);
                    i += 1;
                }
                '|' => {
                    toks.push(Tok::Or);
                    i += 1;
                }
                '(' => {
                    toks.push(Tok::LParen);
                    i += 1;
                }
                ')' => {
                    toks.push(Tok::RParen);
                    i += 1;
                }
                '-' => {
                    if text[i..].starts_with("->") {
                        toks.push(Tok::Implies);
                        i += 2;
                    } else {
                        return Err(Error::input("expected '->'"));
                    }
                }
                '<' => {
                    if text[i..].starts_with("<->") {
                        toks.push(Tok::Iff);
                        i += 3;
                    } else {
                        return Err(Error::input("expected '<->'"));
                    }
                }
                _ if c.is_alphanumeric() || c == '_' => {
                    let start = i;
                    while i < bytes.len()
                        && ((bytes[i] as char).is_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    toks.push(Tok::Ident(&text[start..i]));
                }
                _ => return Err(Error::input(format!("unexpected character {c:?} in formula"))),
            }
        }
        Ok(Parser { toks, pos: 0 })
    }

    fn peek(&self) -> Option<Tok<'a>> {
        self.toks.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Tok<'a>> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_formula(&mut self) -> Result<Formula> {
        let f = self.parse_iff()?;
        if self.pos != self.toks.len() {
            return Err(Error::input("trailing tokens after formula"));
        }
        Ok(f)
    }

    fn parse_iff(&mut self) -> Result<Formula> {
        let lhs = self.parse_implies()?;
        if self.peek() == Some(Tok::Iff) {
            self.bump();
            let rhs = self.parse_iff()?;
            Ok(Formula::iff(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn parse_implies(&mut self) -> Result<Formula> {
        let lhs = self.parse_or()?;
        if self.peek() == Some(Tok::Implies) {
            self.bump();
            let rhs = self.parse_implies()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn parse_or(&mut self) -> Result<Formula> {
        let mut f = self.parse_and()?;
        while self.peek() == Some(Tok::Or) {
            self.bump();
            f = Formula::or(f, self.parse_and()?);
        }
        Ok(f)
    }

    fn parse_and(&mut self) -> Result<Formula> {
        let mut f = self.parse_unary()?;
        while self.peek() == Some(Tok::And) {
            self.bump();
            f = Formula::and(f, self.parse_unary()?);
        }
        Ok(f)
    }

    fn parse_unary(&mut self) -> Result<Formula> {
        match self.bump() {
            Some(Tok::Not) => Ok(Formula::not(self.parse_unary()?)),
            Some(Tok::LParen) => {
                let f = self.parse_iff()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(f),
                    _ => Err(Error::input("expected ')'")),
                }
            }
            Some(Tok::Ident("true")) => Ok(Formula::True),
            Some(Tok::Ident("false")) => Ok(Formula::False),
            Some(Tok::Ident(v)) => Ok(Formula::var(v)),
            _ => Err(Error::input("expected a formula")),
        }
    }
}

/// A theory in canonical form: its model set, plus the formulas it came from.
#[derive(Clone, Debug)]
pub struct Theory {
    pub models: PointSet,
    pub sources: Vec<Formula>,
}

impl PartialEq for Theory {
    fn eq(&self, other: &Self) -> bool {
        self.models == other.models
    }
}
impl Eq for Theory {}

/// Model set of a formula (as a `PointSet` over the model universe).
pub fn models_of(f: &Formula, lang: &Language) -> Result<PointSet> {
    let mut s = PointSet::EMPTY;
    for m in lang.models() {
        if f.eval(lang, m)? {
            s.insert(m.index());
        }
    }
    Ok(s)
}

/// Model set of a theory: intersection of the formulas' model sets.
pub fn models_of_theory(fs: &[Formula], lang: &Language) -> Result<PointSet> {
    let mut s = lang.all_models();
    for f in fs {
        s = s.inter(models_of(f, lang)?);
    }
    Ok(s)
}

/// Canonical theory with exactly the given model set; the `∅` case is the
/// inconsistent theory. Over a finite language every model set is definable.
pub fn theory_of(x: PointSet, lang: &Language) -> Theory {
    let mut sources = Vec::new();
    if x.is_empty() {
        sources.push(Formula::False);
    } else if x == lang.all_models() {
        sources.push(Formula::True);
    } else {
        // disjunction of the models' describing conjunctions
        let mut disj: Option<Formula> = None;
        for idx in x.iter() {
            let m = lang.model(idx);
            let mut conj: Option<Formula> = None;
            for (v, name) in lang.vars().iter().enumerate() {
                let lit = if m.truth(v) {
                    Formula::var(name)
                } else {
                    Formula::not(Formula::var(name))
                };
                conj = Some(match conj {
                    None => lit,
                    Some(c) => Formula::and(c, lit),
                });
            }
            let conj = conj.unwrap_or(Formula::True);
            disj = Some(match disj {
                None => conj,
                Some(d) => Formula::or(d, conj),
            });
        }
        sources.push(disj.expect("nonempty"));
    }
    Theory { models: x, sources }
}

/// Restriction modes for `definable_family`.
#[derive(Clone, Debug)]
pub enum Restriction {
    /// All model sets.
    Full,
    /// Sets definable by formulas over the listed variables only.
    Sublanguage(Vec<String>),
    /// All unions of the given partition blocks (plus ∅).
    Blocks(Vec<PointSet>),
}

/// The family of definable model sets under a restriction. All three modes
/// yield families closed under union and intersection with ∅ and Z present.
pub fn definable_family(lang: &Language, restriction: &Restriction) -> Result<DomainFamily> {
    let universe = lang.model_universe();
    let nmodels = lang.model_count();
    match restriction {
        Restriction::Full => {
            if nmodels > 16 {
                return Err(Error::input("full definable family needs at most 4 variables"));
            }
            let members = (0u64..(1u64 << nmodels)).map(PointSet);
            DomainFamily::new(universe, members)
        }
        Restriction::Sublanguage(vars) => {
            let mut idxs = Vec::new();
            for v in vars {
                match lang.index_of(v) {
                    Some(i) => idxs.push(i),
                    None => return Err(Error::input(format!("unknown variable {v:?}"))),
                }
            }
            idxs.sort();
            idxs.dedup();
            // blocks = classes of models agreeing on the chosen variables
            let mut blocks: std::collections::BTreeMap<u64, PointSet> = Default::default();
            for m in lang.models() {
                let key: u64 = idxs
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| (m.truth(v) as u64) << k)
                    .sum();
                blocks.entry(key).or_default().insert(m.index());
            }
            let blocks: Vec<PointSet> = blocks.into_values().collect();
            family_of_blocks(universe, &blocks)
        }
        Restriction::Blocks(blocks) => {
            let mut seen = PointSet::EMPTY;
            for b in blocks {
                if b.is_empty() {
                    return Err(Error::input("partition blocks must be nonempty"));
                }
                if !seen.inter(*b).is_empty() {
                    return Err(Error::input("partition blocks must be disjoint"));
                }
                seen = seen.union(*b);
            }
            if seen != universe.full_set() {
                return Err(Error::input("partition blocks must cover the model space"));
            }
            family_of_blocks(universe, blocks)
        }
    }
}

fn family_of_blocks(universe: Universe, blocks: &[PointSet]) -> Result<DomainFamily> {
    if blocks.len() > 20 {
        return Err(Error::input("too many partition blocks"));
    }
    let mut members = Vec::with_capacity(1 << blocks.len());
    for mask in 0u64..(1u64 << blocks.len()) {
        let mut s = PointSet::EMPTY;
        for (i, b) in blocks.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s = s.union(*b);
            }
        }
        members.push(s);
    }
    DomainFamily::new(universe, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lang_pq() -> Language {
        Language::new(["p", "q"]).unwrap()
    }

    #[test]
    fn models_of_basics() {
        let l = lang_pq();
        // p∧q has exactly the model "11"
        let f = Formula::parse("p & q").unwrap();
        let s = models_of(&f, &l).unwrap();
        assert_eq!(l.model_universe().names(s), vec!["11"]);
        // p∨¬p is a tautology
        let t = Formula::parse("p | !p").unwrap();
        assert_eq!(models_of(&t, &l).unwrap(), l.all_models());
        // theory {p}: q stays free
        let th = models_of_theory(&[Formula::parse("p").unwrap()], &l).unwrap();
        assert_eq!(l.model_universe().names(th), vec!["10", "11"]);
        // unknown variable is an input error
        assert!(models_of(&Formula::parse("r").unwrap(), &l).is_err());
    }

    #[test]
    fn theory_of_round_trips() {
        let l = lang_pq();
        for mask in 0u64..16 {
            let x = PointSet(mask);
            let th = theory_of(x, &l);
            assert_eq!(models_of_theory(&th.sources, &l).unwrap(), x);
        }
        // inconsistent theory has no models
        let none = theory_of(PointSet::EMPTY, &l);
        assert_eq!(models_of_theory(&none.sources, &l).unwrap(), PointSet::EMPTY);
    }

    #[test]
    fn parser_precedence_and_errors() {
        let l = lang_pq();
        // ¬ binds tighter than ∧ than ∨ than → than ↔
        let a = Formula::parse("!p & q | p -> q <-> p").unwrap();
        let b = Formula::parse("((((!p) & q) | p) -> q) <-> p").unwrap();
        assert_eq!(models_of(&a, &l).unwrap(), models_of(&b, &l).unwrap());
        assert!(Formula::parse("p &").is_err());
        assert!(Formula::parse("p <- q").is_err());
        assert!(Formula::parse("(p").is_err());
    }

    #[test]
    fn definable_families() {
        let l = lang_pq();
        let full = definable_family(&l, &Restriction::Full).unwrap();
        assert_eq!(full.len(), 16);
        let sub = definable_family(&l, &Restriction::Sublanguage(vec!["p".into()])).unwrap();
        // {∅, M(p), M(¬p), all}
        assert_eq!(sub.len(), 4);
        let mp = models_of(&Formula::parse("p").unwrap(), &l).unwrap();
        assert!(sub.contains(mp));
        assert!(sub.contains(l.all_models().diff(mp)));
        // two blocks over the 4 models
        let b1 = PointSet(0b0011);
        let b2 = PointSet(0b1100);
        let blocks = definable_family(&l, &Restriction::Blocks(vec![b1, b2])).unwrap();
        assert_eq!(blocks.len(), 4);
        for fam in [&full, &sub, &blocks] {
            let f = fam.flags();
            assert!(f.closed_finite_union);
            assert!(f.closed_arbitrary_intersection);
            assert!(f.contains_empty && f.contains_universe);
        }
    }

    #[test]
    fn restricted_hat_strictly_enlarges_somewhere() {
        let l = lang_pq();
        let sub = definable_family(&l, &Restriction::Sublanguage(vec!["p".into()])).unwrap();
        let mut found = false;
        for mask in 0u64..16 {
            let a = PointSet(mask);
            let h = sub.hat(a).unwrap();
            assert!(a.is_subset(h));
            if a.is_proper_subset(h) {
                found = true;
            }
        }
        assert!(found, "a proper restriction must enlarge some set");
    }
}
