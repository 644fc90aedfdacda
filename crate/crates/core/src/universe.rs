//! Finite universes, set families with closure flags, the least-definable-superset
//! operator `hat`, and smallness of subsets.
//!
//! Everything downstream happens on a fixed finite universe `Z` of named points.
//! Sets of points are bitmasks over the sorted point list, so iteration order is
//! deterministic everywhere and witnesses are reproducible.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of points in a universe (sets are `u64` bitmasks).
pub const MAX_POINTS: usize = 64;

/// A set of points of some universe, as a bitmask over its sorted point list.
///
/// A `PointSet` is only meaningful together with the universe it was built
/// against; operations never check this, callers keep them paired.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn singleton(idx: usize) -> PointSet {
        PointSet(1u64 << idx)
    }

    pub fn contains(self, idx: usize) -> bool {
        self.0 & (1u64 << idx) != 0
    }

    pub fn insert(&mut self, idx: usize) {
        self.0 |= 1u64 << idx;
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn inter(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn diff(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: PointSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in ascending mask order (∅ first, `self` last).
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let full = self.0;
        let mut cur: u64 = 0;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = PointSet(cur);
            if cur == full {
                done = true;
            } else {
                // enumerate submasks of `full` in increasing order
                cur = (cur.wrapping_sub(full)) & full;
            }
            Some(out)
        })
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet({:#b})", self.0)
    }
}

/// The fixed set `Z` of points everything is a subset of.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Universe {
    points: Vec<String>,
}

impl Universe {
    /// Builds a universe from point names. Names are sorted and must be unique.
    pub fn new<I, S>(names: I) -> Result<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut points: Vec<String> = names.into_iter().map(Into::into).collect();
        points.sort();
        for w in points.windows(2) {
            if w[0] == w[1] {
                return Err(Error::input(format!("duplicate point name {:?}", w[0])));
            }
        }
        if points.len() > MAX_POINTS {
            return Err(Error::input(format!(
                "universe has {} points, maximum is {MAX_POINTS}",
                points.len()
            )));
        }
        Ok(Universe { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.points[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_str().cmp(name)).ok()
    }

    /// The set containing every point.
    pub fn full_set(&self) -> PointSet {
        if self.points.is_empty() {
            PointSet::EMPTY
        } else {
            PointSet((!0u64) >> (64 - self.points.len()))
        }
    }

    /// Builds a set from point names; unknown names are input errors.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSet> {
        let mut s = PointSet::EMPTY;
        for n in names {
            match self.index_of(n.as_ref()) {
                Some(i) => s.insert(i),
                None => return Err(Error::input(format!("unknown point {:?}", n.as_ref()))),
            }
        }
        Ok(s)
    }

    /// Sorted names of a set's points.
    pub fn names(&self, s: PointSet) -> Vec<String> {
        s.iter().map(|i| self.points[i].clone()).collect()
    }

    /// Renders a set as `{a, b}` for reports and witnesses.
    pub fn display(&self, s: PointSet) -> String {
        let mut out = String::from("{");
        for (k, i) in s.iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            out.push_str(&self.points[i]);
        }
        out.push('}');
        out
    }
}

/// Closure operations `close_family` can apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CloseOp {
    FiniteUnion,
    PairwiseIntersection,
    AddEmpty,
    AddUniverse,
    Singletons,
}

/// Closure and membership properties of a family, recomputable from its members.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct FamilyFlags {
    pub closed_finite_union: bool,
    pub closed_pairwise_intersection: bool,
    /// Over a finite family, closure under arbitrary (nonempty) intersections
    /// coincides with closure under pairwise intersections.
    pub closed_arbitrary_intersection: bool,
    pub contains_empty: bool,
    pub contains_universe: bool,
    pub contains_singletons: bool,
    pub closed_set_difference: bool,
}

/// A finite family `Y` of subsets of a universe. Members are kept sorted in
/// ascending mask order, which is the canonical sweep order everywhere.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DomainFamily {
    universe: Universe,
    members: Vec<PointSet>,
    flags: FamilyFlags,
}

/// Outcome of a smallness test: `A` is small in `B` iff no family member is
/// squeezed strictly between `B - A` and `B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmallnessJudgement {
    pub inner: PointSet,
    pub outer: PointSet,
    pub small: bool,
    /// The separating `X` with `B−A ⊆ X ⊂ B`, when smallness fails.
    pub witness: Option<PointSet>,
}

impl DomainFamily {
    pub fn new(universe: Universe, members: impl IntoIterator<Item = PointSet>) -> Result<DomainFamily> {
        let full = universe.full_set();
        let mut ms: Vec<PointSet> = members.into_iter().collect();
        for m in &ms {
            if !m.is_subset(full) {
                return Err(Error::input("family member is not a subset of the universe"));
            }
        }
        ms.sort();
        ms.dedup();
        let mut fam = DomainFamily {
            universe,
            members: ms,
            flags: FamilyFlags::default(),
        };
        fam.flags = fam.compute_flags();
        Ok(fam)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: PointSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn member_index(&self, s: PointSet) -> Option<usize> {
        self.members.binary_search(&s).ok()
    }

    pub fn flags(&self) -> FamilyFlags {
        self.flags
    }

    /// Recomputes the closure flags from the member list.
    pub fn compute_flags(&self) -> FamilyFlags {
        let full = self.universe.full_set();
        let n = self.members.len();
        // A family holding every subset is closed under everything; the direct
        // pair scan below would be quadratic in 2^|Z| for no information.
        let is_powerset = self.universe.len() <= 32 && n == 1usize << self.universe.len();
        let mut f = FamilyFlags {
            closed_finite_union: true,
            closed_pairwise_intersection: true,
            closed_arbitrary_intersection: true,
            contains_empty: self.contains(PointSet::EMPTY),
            contains_universe: self.contains(full),
            contains_singletons: (0..self.universe.len()).all(|i| self.contains(PointSet::singleton(i))),
            closed_set_difference: true,
        };
        if is_powerset {
            return f;
        }
        'outer: for i in 0..n {
            for j in i..n {
                let (a, b) = (self.members[i], self.members[j]);
                if f.closed_finite_union && !self.contains(a.union(b)) {
                    f.closed_finite_union = false;
                }
                if f.closed_pairwise_intersection && !self.contains(a.inter(b)) {
                    f.closed_pairwise_intersection = false;
                    f.closed_arbitrary_intersection = false;
                }
                if f.closed_set_difference
                    && (!self.contains(a.diff(b)) || !self.contains(b.diff(a)))
                {
                    f.closed_set_difference = false;
                }
                if !f.closed_finite_union && !f.closed_pairwise_intersection && !f.closed_set_difference {
                    break 'outer;
                }
            }
        }
        f
    }

    /// Least superfamily closed under the requested operations. Idempotent.
    pub fn close(&self, ops: &[CloseOp]) -> DomainFamily {
        let full = self.universe.full_set();
        let mut set: BTreeSet<PointSet> = self.members.iter().copied().collect();
        if ops.contains(&CloseOp::AddEmpty) {
            set.insert(PointSet::EMPTY);
        }
        if ops.contains(&CloseOp::AddUniverse) {
            set.insert(full);
        }
        if ops.contains(&CloseOp::Singletons) {
            for i in 0..self.universe.len() {
                set.insert(PointSet::singleton(i));
            }
        }
        let union = ops.contains(&CloseOp::FiniteUnion);
        let inter = ops.contains(&CloseOp::PairwiseIntersection);
        loop {
            let snapshot: Vec<PointSet> = set.iter().copied().collect();
            let before = set.len();
            for (i, &a) in snapshot.iter().enumerate() {
                for &b in &snapshot[i..] {
                    if union {
                        set.insert(a.union(b));
                    }
                    if inter {
                        set.insert(a.inter(b));
                    }
                }
            }
            if set.len() == before {
                break;
            }
        }
        DomainFamily::new(self.universe.clone(), set).expect("closure stays within the universe")
    }

    /// `⌢A`: the least family member containing `A`.
    ///
    /// Requires the family to be intersection closed with the universe present,
    /// otherwise the intersection of supersets may fall outside the family.
    pub fn hat(&self, a: PointSet) -> Result<PointSet> {
        let mut acc: Option<PointSet> = None;
        for &m in &self.members {
            if a.is_subset(m) {
                acc = Some(match acc {
                    None => m,
                    Some(x) => x.inter(m),
                });
            }
        }
        match acc {
            None => Err(Error::missing_closure(format!(
                "no family member contains {}",
                self.universe.display(a)
            ))),
            Some(h) => {
                if self.contains(h) {
                    Ok(h)
                } else {
                    Err(Error::missing_closure(format!(
                        "intersection of supersets of {} is not a family member",
                        self.universe.display(a)
                    )))
                }
            }
        }
    }

    /// Decides whether `A` is a small subset of `B` (`A ⊆ B` required):
    /// small iff there is no `X ∈ Y` with `B−A ⊆ X ⊂ B`.
    pub fn is_small(&self, a: PointSet, b: PointSet) -> Result<SmallnessJudgement> {
        if !a.is_subset(b) || !b.is_subset(self.universe.full_set()) {
            return Err(Error::input("is_small requires A ⊆ B ⊆ universe"));
        }
        let core = b.diff(a);
        let witness = self
            .members
            .iter()
            .copied()
            .find(|&x| core.is_subset(x) && x.is_proper_subset(b));
        Ok(SmallnessJudgement {
            inner: a,
            outer: b,
            small: witness.is_none(),
            witness,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(names: &[&str]) -> Universe {
        Universe::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn close_family_generates_lattice() {
        // Z={1,2,3}, members={{1},{2,3}} closed under union, intersection, empty.
        let u = uni(&["1", "2", "3"]);
        let m1 = u.set_of(&["1"]).unwrap();
        let m23 = u.set_of(&["2", "3"]).unwrap();
        let fam = DomainFamily::new(u.clone(), [m1, m23]).unwrap();
        let closed = fam.close(&[
            CloseOp::FiniteUnion,
            CloseOp::PairwiseIntersection,
            CloseOp::AddEmpty,
        ]);
        let expect = vec![
            PointSet::EMPTY,
            m1,
            m23,
            u.full_set(),
        ];
        let mut expect = expect;
        expect.sort();
        assert_eq!(closed.members(), expect.as_slice());
        // idempotent
        let again = closed.close(&[
            CloseOp::FiniteUnion,
            CloseOp::PairwiseIntersection,
            CloseOp::AddEmpty,
        ]);
        assert_eq!(again, closed);
        let fl = closed.flags();
        assert!(fl.closed_finite_union && fl.closed_pairwise_intersection && fl.contains_empty);
    }

    #[test]
    fn hat_is_least_member() {
        // family={∅,{1},{1,2},{1,2,3}}: hat({2}) = {1,2}.
        let u = uni(&["1", "2", "3"]);
        let fam = DomainFamily::new(
            u.clone(),
            [
                PointSet::EMPTY,
                u.set_of(&["1"]).unwrap(),
                u.set_of(&["1", "2"]).unwrap(),
                u.full_set(),
            ],
        )
        .unwrap();
        let a = u.set_of(&["2"]).unwrap();
        // independent oracle: intersect every member that contains {2}
        let oracle = fam
            .members()
            .iter()
            .copied()
            .filter(|m| a.is_subset(*m))
            .fold(u.full_set(), |acc, m| acc.inter(m));
        assert_eq!(oracle, u.set_of(&["1", "2"]).unwrap());
        assert_eq!(fam.hat(a).unwrap(), oracle);
        // member sets are their own hat
        for &m in fam.members() {
            assert_eq!(fam.hat(m).unwrap(), m);
        }
        // hat(X ∪ Y') = hat(X) ∪ hat(Y') on this union-closed family
        let h2 = fam.hat(u.set_of(&["2"]).unwrap()).unwrap();
        let h3 = fam.hat(u.set_of(&["3"]).unwrap()).unwrap();
        let h23 = fam.hat(u.set_of(&["2", "3"]).unwrap()).unwrap();
        assert_eq!(h2.union(h3), h23);
        assert_eq!(h23, u.full_set());
    }

    #[test]
    fn smallness_enumeration() {
        let u = uni(&["1", "2", "3"]);
        let fam = DomainFamily::new(
            u.clone(),
            [
                PointSet::EMPTY,
                u.set_of(&["1"]).unwrap(),
                u.set_of(&["1", "2"]).unwrap(),
                u.full_set(),
            ],
        )
        .unwrap();
        // A=∅ is small in any B
        for &b in fam.members() {
            let j = fam.is_small(PointSet::EMPTY, b).unwrap();
            assert!(j.small, "∅ must be small in {}", u.display(b));
        }
        // B={1,2}, A={2}: not small, witness {1}
        let j = fam
            .is_small(u.set_of(&["2"]).unwrap(), u.set_of(&["1", "2"]).unwrap())
            .unwrap();
        assert!(!j.small);
        assert_eq!(j.witness, Some(u.set_of(&["1"]).unwrap()));
        // family={∅,{1,2,3}}: A={1} small in B=Z
        let fam2 = DomainFamily::new(u.clone(), [PointSet::EMPTY, u.full_set()]).unwrap();
        let j2 = fam2.is_small(u.set_of(&["1"]).unwrap(), u.full_set()).unwrap();
        assert!(j2.small);
        // precondition violation
        assert!(fam.is_small(u.set_of(&["3"]).unwrap(), u.set_of(&["1"]).unwrap()).is_err());
    }

    #[test]
    fn subset_enumeration_order() {
        let s = PointSet(0b101);
        let subs: Vec<u64> = s.subsets().map(|p| p.0).collect();
        assert_eq!(subs, vec![0b000, 0b001, 0b100, 0b101]);
    }

    #[test]
    fn flags_on_powerset() {
        let u = uni(&["a", "b"]);
        let all: Vec<PointSet> = (0u64..4).map(PointSet).collect();
        let fam = DomainFamily::new(u, all).unwrap();
        let f = fam.flags();
        assert!(f.closed_finite_union);
        assert!(f.closed_arbitrary_intersection);
        assert!(f.contains_singletons);
        assert!(f.closed_set_difference);
    }
}
