//! Time-indexed world model and the full proposition suite.
//!
//! A [`SpinozaModel`] is a universe with birth times, a list of sample
//! instants, and a causality law. The slice `E_t` holds the elements born
//! strictly before `t`; the nature `N_t` holds the slice elements that
//! differ from their own cause. The checks here establish, model by
//! model, the claims that hold for every law satisfying the axioms: a
//! non-empty least fixed point (the substance) exists, is the same at
//! every instant, absorbs the first cause, partitions each slice with the
//! nature, has no fixed proper part, and — when every strict post-fixpoint
//! is excluded — collapses to the single-element first cause.

use crate::causality::{clause, CausalityMap, CheckResult, Witness};
use crate::error::Error;
use crate::fixpoint::{
    enumerate_fixed_points_within, fixpoint_report_within, kleene_lfp_within, FixpointReport,
};
use crate::lattice::{all_subsets, Subset, Universe};

/// One checkable world: universe, sample instants, causality law.
///
/// Instants are kept sorted and distinct; they are finite or `+inf`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinozaModel {
    universe: Universe,
    times: Vec<f64>,
    map: CausalityMap,
}

impl SpinozaModel {
    pub fn new(universe: Universe, times: Vec<f64>, map: CausalityMap) -> Result<Self, Error> {
        if map.width() != universe.len() {
            return Err(Error::WidthMismatch {
                expected: universe.len(),
                got: map.width(),
            });
        }
        if times.is_empty() {
            return Err(Error::InvalidTimes);
        }
        for (i, &t) in times.iter().enumerate() {
            if t.is_nan() || t == f64::NEG_INFINITY {
                return Err(Error::InvalidTimes);
            }
            if i > 0 && times[i - 1] >= t {
                return Err(Error::InvalidTimes);
            }
        }
        Ok(SpinozaModel {
            universe,
            times,
            map,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn map(&self) -> &CausalityMap {
        &self.map
    }

    /// The slice `E_t`: elements born strictly before `t`. Births of
    /// `-inf` belong to every slice; `t = +inf` yields the full universe.
    pub fn slice(&self, t: f64) -> Subset {
        let mut s = self.universe.empty_set();
        for i in 0..self.universe.len() {
            if self.universe.birth(i) < t {
                s.insert(i);
            }
        }
        s
    }

    /// The nature `N_t`: slice elements whose singleton is not its own
    /// cause.
    pub fn nature(&self, t: f64) -> Subset {
        let n = self.universe.len();
        let mut out = self.universe.empty_set();
        for i in self.slice(t).iter() {
            let single = Subset::singleton(n, i);
            if self.map.apply(single) != single {
                out.insert(i);
            }
        }
        out
    }

    /// Slice of the latest listed instant.
    pub fn largest_slice(&self) -> Subset {
        self.slice(*self.times.last().expect("times are non-empty"))
    }
}

/// Closure of every listed slice under the law: for each `t` and each
/// `A ⊆ E_t`, `C(A) ⊆ E_t`. Witness: earliest failing instant, then the
/// smallest failing argument.
pub fn check_slice_closure(model: &SpinozaModel) -> CheckResult {
    for &t in model.times() {
        let top = model.slice(t);
        for a in all_subsets(model.universe().len()) {
            if a.leq(&top) && !model.map().apply(a).leq(&top) {
                return CheckResult::fail_at(clause::ESCAPES_SLICE, vec![a], t);
            }
        }
    }
    CheckResult::pass()
}

/// Per-instant least fixed points and the substance verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct SubstanceOutcome {
    pub check: CheckResult,
    /// Present iff the verdict passed; then it equals every `S_t`.
    pub substance: Option<Subset>,
    pub per_time: Vec<(f64, Subset)>,
}

/// Computes `S_t` (least fixed point within `E_t`) for every listed
/// instant and verifies: each is non-empty, all agree, and the first
/// cause is contained in the common value.
///
/// Callers are expected to have checked A1, A2 and slice closure; with
/// those in place the verdict always passes. Violations are reported, not
/// repaired. Errors only if an iteration leaves its slice or fails to
/// stabilize, which the preconditions exclude.
pub fn compute_substance(model: &SpinozaModel) -> Result<SubstanceOutcome, Error> {
    let mut per_time = Vec::with_capacity(model.times().len());
    for &t in model.times() {
        let top = model.slice(t);
        let (s_t, _) = kleene_lfp_within(model.map(), top)?;
        per_time.push((t, s_t));
    }
    if let Some(&(t, s)) = per_time.iter().find(|(_, s)| s.is_empty()) {
        return Ok(SubstanceOutcome {
            check: CheckResult::fail_at(clause::EMPTY_SUBSTANCE, vec![s], t),
            substance: None,
            per_time,
        });
    }
    let first = per_time[0].1;
    if let Some(&(t, s)) = per_time.iter().find(|(_, s)| *s != first) {
        return Ok(SubstanceOutcome {
            check: CheckResult::fail_at(clause::TIME_DEPENDENT, vec![first, s], t),
            substance: None,
            per_time,
        });
    }
    let fc = model.map().first_cause();
    if !fc.leq(&first) {
        return Ok(SubstanceOutcome {
            check: CheckResult::fail(clause::FIRST_CAUSE_NOT_CONTAINED, vec![fc, first]),
            substance: None,
            per_time,
        });
    }
    Ok(SubstanceOutcome {
        check: CheckResult::pass(),
        substance: Some(first),
        per_time,
    })
}

/// A3: distinct fixed points of the largest slice share nothing. Witness:
/// smallest overlapping pair in ascending bit order.
pub fn check_a3(model: &SpinozaModel) -> CheckResult {
    let fps = enumerate_fixed_points_within(model.map(), model.largest_slice());
    for (i, &a) in fps.iter().enumerate() {
        for &b in &fps[i + 1..] {
            if !a.meet(&b).is_empty() {
                return CheckResult::fail(clause::SUBSTANCES_OVERLAP, vec![a, b]);
            }
        }
    }
    CheckResult::pass()
}

/// Exactly one non-empty fixed point on every listed slice.
pub fn check_uniqueness(model: &SpinozaModel) -> CheckResult {
    for &t in model.times() {
        let fps: Vec<Subset> = enumerate_fixed_points_within(model.map(), model.slice(t))
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect();
        match fps.len() {
            1 => {}
            0 => return CheckResult::fail_at(clause::NO_SUBSTANCE, vec![], t),
            _ => return CheckResult::fail_at(clause::MULTIPLE_SUBSTANCES, fps, t),
        }
    }
    CheckResult::pass()
}

/// `N_t ∪ S = E_t` for every listed instant. Witness: the smallest element
/// in exactly one side, as a singleton.
pub fn check_partition(model: &SpinozaModel, substance: Subset) -> CheckResult {
    let n = model.universe().len();
    for &t in model.times() {
        let e_t = model.slice(t);
        let covered = model.nature(t).join(&substance);
        if covered == e_t {
            continue;
        }
        let missing = e_t.minus(&covered);
        if let Some(i) = missing.first() {
            return CheckResult::fail_at(clause::UNCOVERED_ELEMENT, vec![Subset::singleton(n, i)], t);
        }
        let extra = covered.minus(&e_t);
        let i = extra.first().expect("covered differs from slice");
        return CheckResult::fail_at(clause::OUTSIDE_SLICE, vec![Subset::singleton(n, i)], t);
    }
    CheckResult::pass()
}

/// No proper non-empty part of the substance is a fixed point.
pub fn check_indivisibility(model: &SpinozaModel, substance: Subset) -> CheckResult {
    for part in all_subsets(model.universe().len()) {
        if part.is_empty() || part == substance || !part.leq(&substance) {
            continue;
        }
        if model.map().apply(part) == part {
            return CheckResult::fail(clause::FIXED_PROPER_PART, vec![part]);
        }
    }
    CheckResult::pass()
}

/// The substance is contained in every listed slice, all its elements
/// have birth `-inf`, and it envelops the first cause.
pub fn check_eternity(model: &SpinozaModel, substance: Subset) -> CheckResult {
    for &t in model.times() {
        let e_t = model.slice(t);
        if !substance.leq(&e_t) {
            return CheckResult::fail_at(clause::OUTSIDE_SLICE, vec![substance.minus(&e_t)], t);
        }
    }
    let n = model.universe().len();
    for i in substance.iter() {
        if model.universe().birth(i) != f64::NEG_INFINITY {
            return CheckResult::fail(clause::MORTAL_ELEMENT, vec![Subset::singleton(n, i)]);
        }
    }
    let fc = model.map().first_cause();
    if !fc.leq(&substance) {
        return CheckResult::fail(clause::FIRST_CAUSE_NOT_CONTAINED, vec![fc, substance]);
    }
    CheckResult::pass()
}

/// Property (P): any set contained in its own cause is empty or fixed.
/// Witness: the smallest strict post-fixpoint.
pub fn check_property_p(model: &SpinozaModel) -> CheckResult {
    for a in all_subsets(model.universe().len()) {
        let c = model.map().apply(a);
        if a.leq(&c) && !a.is_empty() && a != c {
            return CheckResult::fail(clause::STRICT_POST_FIXPOINT, vec![a]);
        }
    }
    CheckResult::pass()
}

/// If property (P) holds, the substance must be a single element equal to
/// the first cause. A failing (P) makes the implication vacuous, so the
/// check passes without looking further.
pub fn check_atom_theorem(
    model: &SpinozaModel,
    substance: Subset,
    property_p: &CheckResult,
) -> CheckResult {
    if !property_p.passed() {
        return CheckResult::pass();
    }
    if substance.len() != 1 {
        return CheckResult::fail(clause::NOT_SINGLETON, vec![substance]);
    }
    let fc = model.map().first_cause();
    if substance != fc {
        return CheckResult::fail(clause::NOT_FIRST_CAUSE, vec![substance, fc]);
    }
    CheckResult::pass()
}

/// No effect precedes its cause: every element of `C({x})` is born no
/// later than `x`, strictly earlier when `x` is outside the substance
/// (inside it, effect and cause may be simultaneous).
pub fn check_temporal_consistency(model: &SpinozaModel, substance: Subset) -> CheckResult {
    let n = model.universe().len();
    for x in 0..n {
        let effect_birth = model.universe().birth(x);
        let strict = !substance.contains(x);
        for c in model.map().apply(Subset::singleton(n, x)).iter() {
            let cause_birth = model.universe().birth(c);
            let ok = if strict {
                cause_birth < effect_birth
            } else {
                cause_birth <= effect_birth
            };
            if !ok {
                return CheckResult::fail(
                    clause::CAUSE_NOT_EARLIER,
                    vec![Subset::singleton(n, x), Subset::singleton(n, c)],
                );
            }
        }
    }
    CheckResult::pass()
}

/// Outcome of one pipeline stage.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Passed,
    Failed(Witness),
    /// The stage did not run because a precondition failed.
    Skipped(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Passed)
    }

    pub fn failed(&self) -> bool {
        matches!(self, Verdict::Failed(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Failed(w) => Some(w),
            _ => None,
        }
    }
}

impl From<CheckResult> for Verdict {
    fn from(r: CheckResult) -> Self {
        if r.passed() {
            Verdict::Passed
        } else {
            Verdict::Failed(r.into_witness().expect("failed check carries a witness"))
        }
    }
}

/// The fixpoint stage either produced a report or was skipped.
#[derive(Debug, Clone, PartialEq)]
pub enum FixpointSection {
    Computed(FixpointReport),
    Skipped(String),
}

impl FixpointSection {
    pub fn report(&self) -> Option<&FixpointReport> {
        match self {
            FixpointSection::Computed(r) => Some(r),
            FixpointSection::Skipped(_) => None,
        }
    }
}

/// Every verdict for one model, in pipeline order. Stages whose
/// preconditions failed are skipped, never silently passed.
#[derive(Debug, Clone, PartialEq)]
pub struct PropositionReport {
    pub a1: Verdict,
    pub a2: Verdict,
    pub slice_closure: Verdict,
    pub prop_2_1: Verdict,
    pub prop_2_2: Verdict,
    pub fixpoint: FixpointSection,
    pub a3: Verdict,
    pub uniqueness: Verdict,
    pub substance: Verdict,
    pub substance_set: Option<Subset>,
    pub substance_per_time: Vec<(f64, Subset)>,
    pub partition: Verdict,
    pub indivisibility: Verdict,
    pub eternity: Verdict,
    pub temporal: Verdict,
    pub property_p: Verdict,
    pub atom: Verdict,
}

impl PropositionReport {
    pub fn any_failed(&self) -> bool {
        self.verdicts().iter().any(|v| v.failed())
            || matches!(self.fixpoint, FixpointSection::Skipped(_))
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts().iter().all(|v| v.passed())
            && matches!(self.fixpoint, FixpointSection::Computed(_))
    }

    fn verdicts(&self) -> [&Verdict; 14] {
        [
            &self.a1,
            &self.a2,
            &self.slice_closure,
            &self.prop_2_1,
            &self.prop_2_2,
            &self.a3,
            &self.uniqueness,
            &self.substance,
            &self.partition,
            &self.indivisibility,
            &self.eternity,
            &self.temporal,
            &self.property_p,
            &self.atom,
        ]
    }
}

/// Runs the whole pipeline in fixed order: A1, A2, slice closure, the two
/// first-cause propositions, the fixpoint solves, A3, uniqueness, the
/// substance computation, partition, indivisibility, eternity, temporal
/// consistency, property (P), and the atom implication.
pub fn evaluate(model: &SpinozaModel) -> PropositionReport {
    let a1: Verdict = model.map().check_a1().into();
    let a2: Verdict = model.map().check_a2().into();
    let slice_closure: Verdict = check_slice_closure(model).into();
    let prop_2_1: Verdict = model.map().check_prop_2_1().into();
    let prop_2_2: Verdict = model.map().check_prop_2_2().into();

    let fixpoint = match fixpoint_report_within(model.map(), model.largest_slice()) {
        Ok(report) => FixpointSection::Computed(report),
        Err(e) => FixpointSection::Skipped(e.to_string()),
    };

    let a3: Verdict = check_a3(model).into();

    let uniqueness = if a3.passed() {
        check_uniqueness(model).into()
    } else {
        Verdict::Skipped("A3 failed".into())
    };

    let (substance, substance_set, substance_per_time) =
        if a1.passed() && a2.passed() && slice_closure.passed() {
            match compute_substance(model) {
                Ok(outcome) => (
                    Verdict::from(outcome.check),
                    outcome.substance,
                    outcome.per_time,
                ),
                Err(e) => (Verdict::Skipped(e.to_string()), None, Vec::new()),
            }
        } else {
            (
                Verdict::Skipped("A1, A2 or slice closure failed".into()),
                None,
                Vec::new(),
            )
        };

    let dependent = |v: &Verdict, run: &dyn Fn(Subset) -> CheckResult| -> Verdict {
        match substance_set {
            Some(s) if v.passed() => run(s).into(),
            _ => Verdict::Skipped("substance unavailable".into()),
        }
    };
    let partition = dependent(&substance, &|s| check_partition(model, s));
    let indivisibility = dependent(&substance, &|s| check_indivisibility(model, s));
    let eternity = dependent(&substance, &|s| check_eternity(model, s));
    let temporal = dependent(&substance, &|s| check_temporal_consistency(model, s));

    let property_p_result = check_property_p(model);
    let atom = match substance_set {
        Some(s) if a1.passed() && a2.passed() && a3.passed() => {
            check_atom_theorem(model, s, &property_p_result).into()
        }
        _ => Verdict::Skipped("A1, A2, A3 or substance unavailable".into()),
    };
    let property_p: Verdict = property_p_result.into();

    PropositionReport {
        a1,
        a2,
        slice_closure,
        prop_2_1,
        prop_2_2,
        fixpoint,
        a3,
        uniqueness,
        substance,
        substance_set,
        substance_per_time,
        partition,
        indivisibility,
        eternity,
        temporal,
        property_p,
        atom,
    }
}
