//! Preferential structures with copies, ranked and Booth structures, distance
//! spaces, the minimal choice function μ, structural property checks, minimal
//! and limit consequence, and MISE enumeration.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::universe::{DomainFamily, PointSet, Universe};

/// An indexed occurrence of a point. Copies let one point behave differently
/// in different contexts.
pub type Copy = (usize, u32);

/// A preferential structure: a finite set of copies and a binary relation ≺
/// on them. `rel` contains `(i, j)` iff `copies[i] ≺ copies[j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrefStructure {
    universe: Universe,
    copies: Vec<Copy>,
    rel: BTreeSet<(usize, usize)>,
}

impl PrefStructure {
    pub fn new(
        universe: Universe,
        copies: impl IntoIterator<Item = Copy>,
        rel: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<PrefStructure> {
        let copies: Vec<Copy> = copies.into_iter().collect();
        let mut seen = BTreeSet::new();
        for &(p, i) in &copies {
            if p >= universe.len() {
                return Err(Error::input("copy point outside the universe"));
            }
            if !seen.insert((p, i)) {
                return Err(Error::input(format!(
                    "duplicate copy ({}, {})",
                    universe.name(p),
                    i
                )));
            }
        }
        let rel: BTreeSet<(usize, usize)> = rel.into_iter().collect();
        for &(a, b) in &rel {
            if a >= copies.len() || b >= copies.len() {
                return Err(Error::input("relation pair outside the copy set"));
            }
        }
        Ok(PrefStructure { universe, copies, rel })
    }

    /// One copy per point, relation given on point indices.
    pub fn simple(
        universe: Universe,
        rel: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<PrefStructure> {
        let n = universe.len();
        PrefStructure::new(universe, (0..n).map(|p| (p, 0)), rel)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn copies(&self) -> &[Copy] {
        &self.copies
    }

    pub fn rel(&self) -> &BTreeSet<(usize, usize)> {
        &self.rel
    }

    pub fn prec(&self, a: usize, b: usize) -> bool {
        self.rel.contains(&(a, b))
    }

    /// Points that occur as some copy.
    pub fn carrier(&self) -> PointSet {
        let mut s = PointSet::EMPTY;
        for &(p, _) in &self.copies {
            s.insert(p);
        }
        s
    }

    /// Indices of copies whose point lies in `x`.
    pub fn copies_in(&self, x: PointSet) -> Vec<usize> {
        (0..self.copies.len())
            .filter(|&i| x.contains(self.copies[i].0))
            .collect()
    }

    /// The minimal choice function: `x ∈ μ(X)` iff some copy of `x` has no
    /// strictly smaller copy whose point also lies in `X`. `X` need not be
    /// related to the structure's carrier in any way.
    pub fn mu(&self, x: PointSet) -> PointSet {
        let inside = self.copies_in(x);
        let mut out = PointSet::EMPTY;
        'cand: for &c in &inside {
            for &k in &inside {
                if self.prec(k, c) {
                    continue 'cand;
                }
            }
            out.insert(self.copies[c].0);
        }
        out.inter(x)
    }

    pub fn is_irreflexive(&self) -> Option<usize> {
        (0..self.copies.len()).find(|&i| self.prec(i, i))
    }

    /// Returns a witness triple `(a, b, c)` with `a≺b≺c` but not `a≺c`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for &(a, b) in &self.rel {
            for &(b2, c) in &self.rel {
                if b == b2 && !self.prec(a, c) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// Returns a cycle `c0 ≺ c1 ≺ … ≺ c0` if one exists.
    pub fn cycle_witness(&self) -> Option<Vec<usize>> {
        // DFS with colors over the ≺ edges (edge a→b when a ≺ b).
        let n = self.copies.len();
        let mut color = vec![0u8; n];
        let mut stack = Vec::new();
        fn dfs(
            v: usize,
            s: &PrefStructure,
            color: &mut [u8],
            stack: &mut Vec<usize>,
        ) -> Option<Vec<usize>> {
            color[v] = 1;
            stack.push(v);
            for w in 0..color.len() {
                if s.prec(v, w) {
                    if color[w] == 1 {
                        let start = stack.iter().position(|&x| x == w).unwrap();
                        return Some(stack[start..].to_vec());
                    }
                    if color[w] == 0 {
                        if let Some(c) = dfs(w, s, color, stack) {
                            return Some(c);
                        }
                    }
                }
            }
            stack.pop();
            color[v] = 2;
            None
        }
        (0..n).find_map(|v| {
            if color[v] == 0 {
                dfs(v, self, &mut color, &mut stack)
            } else {
                None
            }
        })
    }

    /// Rankedness test on copies: any two ≺-incomparable copies must have
    /// identical up-sets and down-sets.
    pub fn rankedness_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.copies.len();
        for a in 0..n {
            for b in a + 1..n {
                if self.prec(a, b) || self.prec(b, a) {
                    continue;
                }
                for y in 0..n {
                    if self.prec(y, a) != self.prec(y, b) || self.prec(a, y) != self.prec(b, y) {
                        return Some((a, b, y));
                    }
                }
            }
        }
        None
    }

    /// Y-smoothness with copies: for `x ∈ X ∈ Y` and any copy of `x`, the copy
    /// is either minimal in `X` or above a copy minimal in `X`.
    pub fn smoothness_witness(&self, family: &DomainFamily) -> Option<(PointSet, Copy)> {
        for &x_set in family.members() {
            let inside = self.copies_in(x_set);
            let minimal: Vec<bool> = inside
                .iter()
                .map(|&c| inside.iter().all(|&k| !self.prec(k, c)))
                .collect();
            for (ci, &c) in inside.iter().enumerate() {
                if minimal[ci] {
                    continue;
                }
                let repaired = inside
                    .iter()
                    .enumerate()
                    .any(|(ki, &k)| minimal[ki] && self.prec(k, c));
                if !repaired {
                    return Some((x_set, self.copies[c]));
                }
            }
        }
        None
    }
}

/// Structural property report for a preferential structure.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub irreflexive: bool,
    pub transitive: bool,
    pub acyclic: bool,
    pub smooth: bool,
    pub ranked: bool,
    pub reflexive_witness: Option<Copy>,
    pub transitivity_witness: Option<(Copy, Copy, Copy)>,
    pub cycle_witness: Option<Vec<Copy>>,
    pub smoothness_witness: Option<(PointSet, Copy)>,
    pub rankedness_witness: Option<(Copy, Copy, Copy)>,
}

/// Checks irreflexivity, transitivity, acyclicity, Y-smoothness and
/// rankedness, with a concrete witness for each failure.
pub fn check_structure(s: &PrefStructure, family: &DomainFamily) -> StructureReport {
    let refl = s.is_irreflexive();
    let trans = s.transitivity_witness();
    let cycle = s.cycle_witness();
    let smooth = s.smoothness_witness(family);
    let ranked = s.rankedness_witness();
    let cp = |i: usize| s.copies()[i];
    StructureReport {
        irreflexive: refl.is_none(),
        transitive: trans.is_none(),
        acyclic: cycle.is_none(),
        smooth: smooth.is_none(),
        ranked: ranked.is_none(),
        reflexive_witness: refl.map(cp),
        transitivity_witness: trans.map(|(a, b, c)| (cp(a), cp(b), cp(c))),
        cycle_witness: cycle.map(|v| v.into_iter().map(cp).collect()),
        smoothness_witness: smooth,
        rankedness_witness: ranked.map(|(a, b, c)| (cp(a), cp(b), cp(c))),
    }
}

/// A ranked structure: a total preorder presented as a rank per point,
/// `x ≺ y` iff `rank(x) < rank(y)`. No copies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankedStructure {
    universe: Universe,
    rank: Vec<u32>,
}

impl RankedStructure {
    pub fn new(universe: Universe, rank: Vec<u32>) -> Result<RankedStructure> {
        if rank.len() != universe.len() {
            return Err(Error::input("rank must assign every universe point"));
        }
        Ok(RankedStructure { universe, rank })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn rank(&self, p: usize) -> u32 {
        self.rank[p]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// Rank minimization within `x`.
    pub fn mu(&self, x: PointSet) -> PointSet {
        let min = x.iter().map(|p| self.rank[p]).min();
        match min {
            None => PointSet::EMPTY,
            Some(r) => {
                let mut out = PointSet::EMPTY;
                for p in x.iter() {
                    if self.rank[p] == r {
                        out.insert(p);
                    }
                }
                out
            }
        }
    }

    /// The induced one-copy preferential structure.
    pub fn to_pref(&self) -> PrefStructure {
        let n = self.universe.len();
        let rel = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.rank[a] < self.rank[b]);
        PrefStructure::simple(self.universe.clone(), rel).expect("valid by construction")
    }
}

/// A Booth structure: a ranked relation `<` plus an arbitrary subrelation `◁`
/// of `<` used to pull extra points from outside a set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoothStructure {
    ranked: RankedStructure,
    sub: BTreeSet<(usize, usize)>,
}

impl BoothStructure {
    pub fn new(ranked: RankedStructure, sub: impl IntoIterator<Item = (usize, usize)>) -> Result<BoothStructure> {
        let sub: BTreeSet<(usize, usize)> = sub.into_iter().collect();
        for &(a, b) in &sub {
            if a >= ranked.universe().len() || b >= ranked.universe().len() {
                return Err(Error::input("◁ pair outside the universe"));
            }
            if ranked.rank(a) >= ranked.rank(b) {
                return Err(Error::input("◁ must be a subrelation of the strict rank order"));
            }
        }
        Ok(BoothStructure { ranked, sub })
    }

    pub fn ranked(&self) -> &RankedStructure {
        &self.ranked
    }

    pub fn sub(&self) -> &BTreeSet<(usize, usize)> {
        &self.sub
    }

    pub fn universe(&self) -> &Universe {
        self.ranked.universe()
    }

    /// `μ⁺(X)`: rank-minimal elements of `X`.
    pub fn mu_plus(&self, x: PointSet) -> PointSet {
        self.ranked.mu(x)
    }

    /// `μ⁻(X) = {x ∉ X : ∃y ∈ μ⁺(X). x ◁ y}`.
    pub fn mu_minus(&self, x: PointSet) -> PointSet {
        let plus = self.mu_plus(x);
        let mut out = PointSet::EMPTY;
        for &(a, b) in &self.sub {
            if plus.contains(b) && !x.contains(a) {
                out.insert(a);
            }
        }
        out
    }

    /// `ν(X) = μ⁺(X) ∪ μ⁻(X)`.
    pub fn nu(&self, x: PointSet) -> PointSet {
        self.mu_plus(x).union(self.mu_minus(x))
    }
}

/// A distance space on a point set: symmetric, zero on the diagonal. The
/// triangle inequality is not assumed.
#[derive(Clone, PartialEq, Debug)]
pub struct DistanceSpace {
    universe: Universe,
    d: Vec<Vec<f64>>,
}

impl DistanceSpace {
    pub fn new(universe: Universe, d: Vec<Vec<f64>>) -> Result<DistanceSpace> {
        let n = universe.len();
        if d.len() != n || d.iter().any(|row| row.len() != n) {
            return Err(Error::input("distance matrix shape mismatch"));
        }
        for i in 0..n {
            if d[i][i] != 0.0 {
                return Err(Error::input("distance must be zero on the diagonal"));
            }
            for j in 0..n {
                if d[i][j] < 0.0 || !d[i][j].is_finite() {
                    return Err(Error::input("distances must be finite and non-negative"));
                }
                if d[i][j] != d[j][i] {
                    return Err(Error::input("distance must be symmetric"));
                }
            }
        }
        Ok(DistanceSpace { universe, d })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn dist(&self, a: usize, b: usize) -> f64 {
        self.d[a][b]
    }

    /// Least distance from any point of `x` to `y`.
    pub fn dist_to_set(&self, x: PointSet, y: usize) -> Option<f64> {
        x.iter()
            .map(|a| self.d[a][y])
            .min_by(|p, q| p.partial_cmp(q).expect("finite"))
    }

    /// Minimal-variant revision: the points of `y` at least distance from `x`.
    pub fn revision_min(&self, x: PointSet, y: PointSet) -> PointSet {
        if x.is_empty() || y.is_empty() {
            return PointSet::EMPTY;
        }
        let best = y
            .iter()
            .map(|p| self.dist_to_set(x, p).unwrap())
            .min_by(|p, q| p.partial_cmp(q).unwrap())
            .unwrap();
        let mut out = PointSet::EMPTY;
        for p in y.iter() {
            if self.dist_to_set(x, p).unwrap() == best {
                out.insert(p);
            }
        }
        out
    }
}

/// Which flavor of minimizing initial segment a [`Mise`] is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MiseKind {
    General,
    Ranked,
    Revision,
}

/// A minimizing initial segment. For `General` the base and segment are sets
/// of copy indices of some structure; for `Ranked` and `Revision` they are
/// point sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mise {
    pub kind: MiseKind,
    pub base: Vec<usize>,
    pub segment: Vec<usize>,
}

impl Mise {
    /// Points of the segment (copy indices resolved for the general kind).
    pub fn segment_points(&self, s: Option<&PrefStructure>) -> PointSet {
        let mut out = PointSet::EMPTY;
        for &i in &self.segment {
            match (self.kind, s) {
                (MiseKind::General, Some(st)) => out.insert(st.copies()[i].0),
                _ => out.insert(i),
            }
        }
        out
    }
}

/// All MISE of `X` in a preferential structure: subsets `Y` of the copies over
/// `X` that minimize every copy over `X` and are downward closed in it.
/// `Λ(∅) = {∅}` by convention.
pub fn enumerate_mise_pref(s: &PrefStructure, x: PointSet) -> Result<Vec<Mise>> {
    let inside = s.copies_in(x);
    if inside.len() > 22 {
        return Err(Error::input("MISE enumeration capped at 22 copies"));
    }
    if inside.is_empty() {
        return Ok(vec![Mise { kind: MiseKind::General, base: vec![], segment: vec![] }]);
    }
    let n = inside.len();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let seg: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| inside[i]).collect();
        // (a) every copy over X has a ⪯-smaller copy in the segment
        let minimizes = inside.iter().all(|&c| {
            seg.iter().any(|&y| y == c || s.prec(y, c))
        });
        if !minimizes {
            continue;
        }
        // (b) downward closed within X
        let closed = seg.iter().all(|&y| {
            inside.iter().all(|&c| !s.prec(c, y) || seg.contains(&c))
        });
        if closed {
            out.push(Mise { kind: MiseKind::General, base: inside.clone(), segment: seg });
        }
    }
    Ok(out)
}

/// All MISE of `X` in a ranked structure: exactly the nonempty downward and
/// horizontally closed subsets, i.e. the rank-threshold cuts of `X`.
pub fn enumerate_mise_ranked(r: &RankedStructure, x: PointSet) -> Vec<Mise> {
    if x.is_empty() {
        return vec![Mise { kind: MiseKind::Ranked, base: vec![], segment: vec![] }];
    }
    let base: Vec<usize> = x.iter().collect();
    let mut thresholds: Vec<u32> = x.iter().map(|p| r.rank(p)).collect();
    thresholds.sort();
    thresholds.dedup();
    thresholds
        .into_iter()
        .map(|t| Mise {
            kind: MiseKind::Ranked,
            base: base.clone(),
            segment: x.iter().filter(|&p| r.rank(p) <= t).collect(),
        })
        .collect()
}

/// The revision MISE family `Λ(X, Y)`: the nested nonempty distance balls of
/// `Y` around `X`, one per realized threshold. Empty `X` or `Y` yields `Λ = ∅`.
pub fn revision_mise(space: &DistanceSpace, x: PointSet, y: PointSet) -> Vec<Mise> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut thresholds: Vec<f64> = y.iter().map(|p| space.dist_to_set(x, p).unwrap()).collect();
    thresholds.sort_by(|a, b| a.partial_cmp(b).unwrap());
    thresholds.dedup();
    let base: Vec<usize> = y.iter().collect();
    thresholds
        .into_iter()
        .map(|t| Mise {
            kind: MiseKind::Revision,
            base: base.clone(),
            segment: y.iter().filter(|&p| space.dist_to_set(x, p).unwrap() <= t).collect(),
        })
        .collect()
}

/// Limit revision: `φ ∈ T*T'` iff some ball of `M(T')` around `M(T)` lies
/// inside `M(φ)`. With no ball at all (inconsistent input), only a tautology
/// counts as a consequence.
pub fn limit_revision(
    space: &DistanceSpace,
    t: PointSet,
    t_prime: PointSet,
    phi: PointSet,
) -> bool {
    let balls = revision_mise(space, t, t_prime);
    if balls.is_empty() {
        return phi == space.universe().full_set();
    }
    balls.iter().any(|b| b.segment_points(None).is_subset(phi))
}

/// Consequence variant selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConsequenceVariant {
    Minimal,
    Limit,
}

/// `T ⊨ φ` over a structure, on model sets: minimal compares `μ(M(T)) ⊆ M(φ)`,
/// limit asks for a MISE of the copies over `M(T)` all satisfying `φ`.
pub fn consequence(
    s: &PrefStructure,
    t_models: PointSet,
    phi_models: PointSet,
    variant: ConsequenceVariant,
) -> Result<bool> {
    match variant {
        ConsequenceVariant::Minimal => Ok(s.mu(t_models).is_subset(phi_models)),
        ConsequenceVariant::Limit => {
            let mises = enumerate_mise_pref(s, t_models)?;
            Ok(mises
                .iter()
                .any(|m| m.segment_points(Some(s)).is_subset(phi_models)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(names: &[&str]) -> Universe {
        Universe::new(names.iter().copied()).unwrap()
    }

    fn family_all(u: &Universe) -> DomainFamily {
        let n = u.len();
        DomainFamily::new(u.clone(), (0u64..(1 << n)).map(PointSet)).unwrap()
    }

    #[test]
    fn mu_on_chain() {
        let u = uni(&["a", "b", "c"]);
        // a≺b≺c with a≺c (transitive chain)
        let s = PrefStructure::simple(u.clone(), [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(s.mu(u.full_set()), u.set_of(&["a"]).unwrap());
        // μ(X) ⊆ X always
        for mask in 0u64..8 {
            assert!(s.mu(PointSet(mask)).is_subset(PointSet(mask)));
        }
        let rep = check_structure(&s, &family_all(&u));
        assert!(rep.transitive && rep.smooth && rep.ranked && rep.acyclic);
    }

    #[test]
    fn mu_with_mutual_copies_is_empty() {
        // two mutually smaller copies of the same point: ⟨x,1⟩≺⟨x,2⟩≺⟨x,1⟩
        let u = uni(&["x"]);
        let s = PrefStructure::new(u.clone(), [(0, 1), (0, 2)], [(0, 1), (1, 0)]).unwrap();
        assert_eq!(s.mu(u.full_set()), PointSet::EMPTY);
        // smoothness fails on the family containing {x}
        let fam = DomainFamily::new(u.clone(), [u.full_set()]).unwrap();
        let rep = check_structure(&s, &fam);
        assert!(!rep.smooth);
        assert_eq!(rep.smoothness_witness.unwrap().0, u.full_set());
    }

    /// The Example 3.1 shape: a≺b, a≺c, b≺d, c≺d, not transitive.
    fn initial_segment_structure() -> (Universe, PrefStructure) {
        let u = uni(&["a", "b", "c", "d"]);
        let s = PrefStructure::simple(u.clone(), [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        (u, s)
    }

    #[test]
    fn mise_enumeration_on_chain_and_example() {
        let u = uni(&["a", "b", "c"]);
        let s = PrefStructure::simple(u.clone(), [(0, 1), (1, 2), (0, 2)]).unwrap();
        // oracle: check the two clauses on all 8 subsets of the copies
        let mises = enumerate_mise_pref(&s, u.full_set()).unwrap();
        let sets: Vec<PointSet> = mises.iter().map(|m| m.segment_points(Some(&s))).collect();
        assert_eq!(
            sets,
            vec![
                u.set_of(&["a"]).unwrap(),
                u.set_of(&["a", "b"]).unwrap(),
                u.full_set()
            ]
        );

        let (u4, s4) = initial_segment_structure();
        let mises = enumerate_mise_pref(&s4, u4.full_set()).unwrap();
        let sets: BTreeSet<PointSet> =
            mises.iter().map(|m| m.segment_points(Some(&s4))).collect();
        let expect: BTreeSet<PointSet> = [
            u4.set_of(&["a", "b"]).unwrap(),
            u4.set_of(&["a", "c"]).unwrap(),
            u4.set_of(&["a", "b", "c"]).unwrap(),
            u4.full_set(),
        ]
        .into_iter()
        .collect();
        assert_eq!(sets, expect);
        // not transitive
        assert!(!check_structure(&s4, &family_all(&u4)).transitive);
    }

    #[test]
    fn mise_of_empty_base_is_empty_segment() {
        let u = uni(&["a"]);
        let s = PrefStructure::simple(u.clone(), []).unwrap();
        let mises = enumerate_mise_pref(&s, PointSet::EMPTY).unwrap();
        assert_eq!(mises.len(), 1);
        assert!(mises[0].segment.is_empty());
    }

    #[test]
    fn ranked_mise_are_downsets() {
        let u = uni(&["a", "b", "c"]);
        let r = RankedStructure::new(u.clone(), vec![0, 0, 1]).unwrap();
        let mises = enumerate_mise_ranked(&r, u.full_set());
        let sets: Vec<PointSet> = mises.iter().map(|m| m.segment_points(None)).collect();
        assert_eq!(sets, vec![u.set_of(&["a", "b"]).unwrap(), u.full_set()]);
        // totally ordered by inclusion
        for w in sets.windows(2) {
            assert!(w[0].is_subset(w[1]));
        }
    }

    #[test]
    fn limit_consequence_on_antichain_is_classical() {
        let u = uni(&["a", "b", "c"]);
        let s = PrefStructure::simple(u.clone(), []).unwrap();
        for t_mask in 0u64..8 {
            for phi_mask in 0u64..8 {
                let t = PointSet(t_mask);
                let phi = PointSet(phi_mask);
                let classical = t.is_subset(phi);
                assert_eq!(
                    consequence(&s, t, phi, ConsequenceVariant::Limit).unwrap(),
                    classical
                );
            }
        }
    }

    #[test]
    fn limit_consequence_example_conjunction_fails() {
        let (u, s) = initial_segment_structure();
        let psi = u.set_of(&["a", "b"]).unwrap();
        let psi2 = u.set_of(&["a", "c"]).unwrap();
        let t = u.full_set();
        assert!(consequence(&s, t, psi, ConsequenceVariant::Limit).unwrap());
        assert!(consequence(&s, t, psi2, ConsequenceVariant::Limit).unwrap());
        assert!(!consequence(&s, t, psi.inter(psi2), ConsequenceVariant::Limit).unwrap());
        // minimal consequence would accept the conjunction: μ = {a}
        assert!(consequence(&s, t, psi.inter(psi2), ConsequenceVariant::Minimal).unwrap());
    }

    #[test]
    fn revision_mise_thresholds() {
        let u = uni(&["x", "y1", "y2"]);
        let d = vec![
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 1.0],
            vec![2.0, 1.0, 0.0],
        ];
        let sp = DistanceSpace::new(u.clone(), d).unwrap();
        let x = u.set_of(&["x"]).unwrap();
        let y = u.set_of(&["y1", "y2"]).unwrap();
        let mises = revision_mise(&sp, x, y);
        let sets: Vec<PointSet> = mises.iter().map(|m| m.segment_points(None)).collect();
        assert_eq!(sets, vec![u.set_of(&["y1"]).unwrap(), y]);
        // X ∩ Y ≠ ∅: the smallest ball contains the intersection
        let y2 = u.set_of(&["x", "y2"]).unwrap();
        let mises = revision_mise(&sp, x, y2);
        assert!(x.inter(y2).is_subset(mises[0].segment_points(None)));
        // empty side: no balls, tautology convention
        assert!(revision_mise(&sp, PointSet::EMPTY, y).is_empty());
        assert!(limit_revision(&sp, PointSet::EMPTY, y, u.full_set()));
        assert!(!limit_revision(&sp, PointSet::EMPTY, y, y));
    }

    #[test]
    fn booth_nu_examples() {
        // 1 variable: rank(m_¬p)=0 < rank(m_p)=1, ◁ = {(m_¬p, m_p)}
        let u = uni(&["0", "1"]);
        let r = RankedStructure::new(u.clone(), vec![0, 1]).unwrap();
        let b = BoothStructure::new(r.clone(), [(0, 1)]).unwrap();
        let m_p = u.set_of(&["1"]).unwrap();
        // ν(p) = {m_p} ∪ {m_¬p} since m_¬p ◁ m_p
        assert_eq!(b.nu(m_p), u.full_set());
        // empty ◁: ν = μ⁺
        let b0 = BoothStructure::new(r, []).unwrap();
        assert_eq!(b0.nu(m_p), m_p);
        // ◁ must be inside the strict rank order
        let r2 = RankedStructure::new(u.clone(), vec![0, 0]).unwrap();
        assert!(BoothStructure::new(r2, [(0, 1)]).is_err());
    }

    #[test]
    fn full_sub_relation_nu() {
        // ◁ = full strict rank order: ν(φ) adds every strictly lower point
        let u = uni(&["a", "b", "c"]);
        let r = RankedStructure::new(u.clone(), vec![0, 1, 2]).unwrap();
        let full: Vec<(usize, usize)> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .filter(|&(a, b)| a < b)
            .collect();
        let b = BoothStructure::new(r.clone(), full).unwrap();
        let x = u.set_of(&["b", "c"]).unwrap();
        let mu_plus = b.mu_plus(x);
        assert_eq!(mu_plus, u.set_of(&["b"]).unwrap());
        assert_eq!(b.nu(x), u.set_of(&["a", "b"]).unwrap());
    }
}
