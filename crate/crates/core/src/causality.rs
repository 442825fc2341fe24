//! Representations of the causality law `C` and exhaustive checkers for
//! the axioms it must satisfy.
//!
//! Two representations coexist. A [`RuleSystem`] induces the map
//! `C(A) = union of conclusions of rules whose premise is contained in A`,
//! which is monotone by construction and scales past dense enumeration.
//! A [`DenseTable`] stores all 2^n values explicitly and guarantees
//! nothing, which is exactly what negative fixtures need.

use crate::error::Error;
use crate::lattice::{all_subsets, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub premise: Subset,
    pub conclusion: Subset,
}

/// A causality law given by premise/conclusion pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSystem {
    width: usize,
    rules: Vec<Rule>,
}

impl RuleSystem {
    pub fn new(width: usize, rules: Vec<Rule>) -> Result<Self, Error> {
        for rule in &rules {
            for part in [&rule.premise, &rule.conclusion] {
                if part.width() != width {
                    return Err(Error::WidthMismatch {
                        expected: width,
                        got: part.width(),
                    });
                }
            }
        }
        Ok(RuleSystem { width, rules })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn apply(&self, a: Subset) -> Subset {
        assert_eq!(a.width(), self.width, "universe mismatch");
        let mut out = Subset::empty(self.width);
        for rule in &self.rules {
            if rule.premise.leq(&a) {
                out = out.join(&rule.conclusion);
            }
        }
        out
    }
}

/// A causality law given by its full graph: one entry per subset, indexed
/// by the argument's bit value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseTable {
    width: usize,
    entries: Vec<Subset>,
}

impl DenseTable {
    pub fn new(width: usize, entries: Vec<Subset>) -> Result<Self, Error> {
        let expected = 1usize << width;
        if entries.len() != expected {
            return Err(Error::TableSize {
                expected,
                got: entries.len(),
            });
        }
        for e in &entries {
            if e.width() != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    got: e.width(),
                });
            }
        }
        Ok(DenseTable { width, entries })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn entries(&self) -> &[Subset] {
        &self.entries
    }

    pub fn apply(&self, a: Subset) -> Subset {
        assert_eq!(a.width(), self.width, "universe mismatch");
        self.entries[a.bits() as usize]
    }
}

/// The causality law `C`, in whichever representation a model uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CausalityMap {
    Rules(RuleSystem),
    Table(DenseTable),
}

impl CausalityMap {
    pub fn width(&self) -> usize {
        match self {
            CausalityMap::Rules(r) => r.width(),
            CausalityMap::Table(t) => t.width(),
        }
    }

    /// Evaluates `C(A)`. Total and deterministic for both representations.
    pub fn apply(&self, a: Subset) -> Subset {
        match self {
            CausalityMap::Rules(r) => r.apply(a),
            CausalityMap::Table(t) => t.apply(a),
        }
    }

    /// The cause of the empty set, `C(e)`: the first cause.
    pub fn first_cause(&self) -> Subset {
        self.apply(Subset::empty(self.width()))
    }

    /// A1: every subset has a non-empty cause. The witness is the smallest
    /// failing argument by bit value.
    pub fn check_a1(&self) -> CheckResult {
        for a in all_subsets(self.width()) {
            if self.apply(a).is_empty() {
                return CheckResult::fail(clause::EMPTY_CAUSE, vec![a]);
            }
        }
        CheckResult::pass()
    }

    /// A2: the map is monotone for inclusion.
    ///
    /// Only cover pairs `(A, A ∪ {x})` with `x ∉ A` are checked: any
    /// inclusion is a chain of covers and inclusion is transitive, so this
    /// is equivalent to the all-pairs check (tested against it). The
    /// witness is the smallest failing pair ordered by the set's bit value,
    /// then the added element's index.
    pub fn check_a2(&self) -> CheckResult {
        let n = self.width();
        let applied: Vec<Subset> = all_subsets(n).map(|a| self.apply(a)).collect();
        for a in all_subsets(n) {
            for x in 0..n {
                if a.contains(x) {
                    continue;
                }
                let b = a.join(&Subset::singleton(n, x));
                if !applied[a.bits() as usize].leq(&applied[b.bits() as usize]) {
                    return CheckResult::fail(clause::NOT_MONOTONE, vec![a, b]);
                }
            }
        }
        CheckResult::pass()
    }

    /// The cause of the diversity of beings is non-empty: `C(e) ≠ e`.
    pub fn check_prop_2_1(&self) -> CheckResult {
        let fc = self.first_cause();
        if fc.is_empty() {
            CheckResult::fail(clause::EMPTY_FIRST_CAUSE, vec![fc])
        } else {
            CheckResult::pass()
        }
    }

    /// The first cause is contained in every cause: `C(e) ⊆ C(A)` for all A.
    ///
    /// Implied by A2, but swept independently so that non-monotone tables
    /// are exercised too. The witness is the smallest failing argument.
    pub fn check_prop_2_2(&self) -> CheckResult {
        let fc = self.first_cause();
        for a in all_subsets(self.width()) {
            if !fc.leq(&self.apply(a)) {
                return CheckResult::fail(clause::FIRST_CAUSE_NOT_CONTAINED, vec![a]);
            }
        }
        CheckResult::pass()
    }
}

/// Stable witness tags; these appear verbatim in reports and golden files.
pub mod clause {
    pub const EMPTY_CAUSE: &str = "empty_cause";
    pub const NOT_MONOTONE: &str = "not_monotone";
    pub const EMPTY_FIRST_CAUSE: &str = "empty_first_cause";
    pub const FIRST_CAUSE_NOT_CONTAINED: &str = "first_cause_not_contained";
    pub const ESCAPES_SLICE: &str = "escapes_slice";
    pub const SUBSTANCES_OVERLAP: &str = "substances_overlap";
    pub const NO_SUBSTANCE: &str = "no_substance";
    pub const MULTIPLE_SUBSTANCES: &str = "multiple_substances";
    pub const EMPTY_SUBSTANCE: &str = "S = e";
    pub const TIME_DEPENDENT: &str = "time_dependent";
    pub const UNCOVERED_ELEMENT: &str = "uncovered_element";
    pub const OUTSIDE_SLICE: &str = "outside_slice";
    pub const FIXED_PROPER_PART: &str = "fixed_proper_part";
    pub const MORTAL_ELEMENT: &str = "mortal_element";
    pub const STRICT_POST_FIXPOINT: &str = "strict_post_fixpoint";
    pub const NOT_SINGLETON: &str = "substance_not_singleton";
    pub const NOT_FIRST_CAUSE: &str = "substance_not_first_cause";
    pub const CAUSE_NOT_EARLIER: &str = "cause_not_earlier";
    pub const INF_MISMATCH: &str = "inf_of_pre_fixpoints_mismatch";
    pub const SUP_MISMATCH: &str = "sup_of_post_fixpoints_mismatch";
    pub const OUTSIDE_BRACKET: &str = "fixed_point_outside_bracket";
}

/// A structured counterexample: the violated clause, the offending subset
/// or pair, and the offending instant when one is involved. Replaying the
/// sets through `apply` reproduces the violation.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub clause: String,
    pub sets: Vec<Subset>,
    pub time: Option<f64>,
}

/// Outcome of one checker: passed, or failed with a witness.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    passed: bool,
    witness: Option<Witness>,
}

impl CheckResult {
    pub fn pass() -> Self {
        CheckResult {
            passed: true,
            witness: None,
        }
    }

    pub fn fail(clause: &str, sets: Vec<Subset>) -> Self {
        CheckResult {
            passed: false,
            witness: Some(Witness {
                clause: clause.to_string(),
                sets,
                time: None,
            }),
        }
    }

    pub fn fail_at(clause: &str, sets: Vec<Subset>, time: f64) -> Self {
        CheckResult {
            passed: false,
            witness: Some(Witness {
                clause: clause.to_string(),
                sets,
                time: Some(time),
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<Witness> {
        self.witness
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Universe;
    use crate::testutil::{m1, m3, m4, m5};

    #[test]
    fn apply_unions_matching_rules() {
        let m = m1();
        let u = m.universe();
        assert_eq!(m.map().apply(u.set_of(&["b"])), u.set_of(&["s", "a"]));
        assert_eq!(m.map().apply(u.empty_set()), u.set_of(&["s"]));
        assert_eq!(m.map().apply(u.full_set()), u.set_of(&["s", "a"]));
    }

    #[test]
    fn a1_checker() {
        assert!(m1().map().check_a1().passed());

        let m = m4();
        let r = m.map().check_a1();
        assert!(!r.passed());
        assert_eq!(r.witness().unwrap().sets, vec![m.universe().empty_set()]);

        // a single rule {a}→{a} never fires on the empty set
        let u = Universe::from_names(&["a"]).unwrap();
        let rs = RuleSystem::new(
            1,
            vec![Rule {
                premise: u.set_of(&["a"]),
                conclusion: u.set_of(&["a"]),
            }],
        )
        .unwrap();
        let r = CausalityMap::Rules(rs).check_a1();
        assert!(!r.passed());
        assert_eq!(r.witness().unwrap().sets, vec![u.empty_set()]);
    }

    #[test]
    fn a2_checker() {
        assert!(m1().map().check_a2().passed());
        assert!(m3().map().check_a2().passed());

        // first failing cover pair of the non-monotone table, scanning
        // subsets in ascending bit order: C({}) = {s} is not contained in
        // C({s}) = {x}
        let m = m5();
        let u = m.universe();
        let r = m.map().check_a2();
        assert!(!r.passed());
        let w = r.witness().unwrap();
        assert_eq!(w.clause, clause::NOT_MONOTONE);
        assert_eq!(w.sets, vec![u.empty_set(), u.set_of(&["s"])]);
        // the witness replays: C(A) is not below C(B)
        assert!(!m.map().apply(w.sets[0]).leq(&m.map().apply(w.sets[1])));
    }

    #[test]
    fn first_cause_values() {
        let m = m1();
        assert_eq!(m.map().first_cause(), m.universe().set_of(&["s"]));
        let m = m4();
        assert_eq!(m.map().first_cause(), m.universe().empty_set());
    }

    #[test]
    fn prop_2_1_checker() {
        assert!(m1().map().check_prop_2_1().passed());
        assert!(!m4().map().check_prop_2_1().passed());
    }

    #[test]
    fn prop_2_2_checker() {
        assert!(m1().map().check_prop_2_2().passed());
        assert!(m3().map().check_prop_2_2().passed());

        let m = m5();
        let r = m.map().check_prop_2_2();
        assert!(!r.passed());
        assert_eq!(r.witness().unwrap().sets, vec![m.universe().set_of(&["s"])]);
    }

    #[test]
    fn cover_check_agrees_with_all_pairs() {
        // naive O(4^n) oracle, kept independent of check_a2
        fn naive_monotone(map: &CausalityMap) -> bool {
            let n = map.width();
            for a in all_subsets(n) {
                for b in all_subsets(n) {
                    if a.leq(&b) && !map.apply(a).leq(&map.apply(b)) {
                        return false;
                    }
                }
            }
            true
        }
        for m in [m1(), m3(), m4(), m5()] {
            assert_eq!(m.map().check_a2().passed(), naive_monotone(m.map()));
        }
    }
}
