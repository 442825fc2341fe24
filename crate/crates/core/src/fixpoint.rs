//! Fixed-point solvers and the brute-force oracles that cross-check them.
//!
//! On a finite powerset lattice a monotone map reaches its least fixed
//! point by iterating from the empty set and its greatest by iterating
//! from the top, in at most n strict steps. The oracle side recomputes
//! both bounds from the pre- and post-fixpoint families
//! `I = {A : C(A) ⊆ A}` and `J = {A : A ⊆ C(A)}` as `inf(I)` and
//! `sup(J)`, and enumerates every fixed point to confirm the bracket
//! `lfp ⊆ λ ⊆ gfp`.

use std::collections::VecDeque;

use crate::causality::{clause, CausalityMap, CheckResult, RuleSystem};
use crate::error::Error;
use crate::lattice::{all_subsets, big_join, big_meet, Subset};

/// Full solver output for one map: both extremal fixed points, the two
/// Kleene chains (final element repeated), the enumerated fixed points
/// when a sweep was done, and the number of map evaluations the chains
/// consumed.
#[derive(Debug, Clone, PartialEq)]
pub struct FixpointReport {
    pub lfp: Subset,
    pub gfp: Subset,
    pub ascending_chain: Vec<Subset>,
    pub descending_chain: Vec<Subset>,
    pub all_fixed_points: Option<Vec<Subset>>,
    pub applications: usize,
}

/// The proof sets: pre-fixpoints `I` and post-fixpoints `J`, in ascending
/// bit order. Membership is one `apply` call per element.
#[derive(Debug, Clone, PartialEq)]
pub struct PrePostSets {
    pub pre_fixpoints: Vec<Subset>,
    pub post_fixpoints: Vec<Subset>,
}

/// Queue discipline for [`worklist_lfp_with`]. The fixed point must not
/// depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WorklistOrder {
    /// Rule indices in declaration order, FIFO requeue. The default.
    Fifo,
    /// Rule indices popped from the back (stack discipline).
    Lifo,
    /// Declaration order reversed, FIFO requeue.
    ReverseFifo,
}

fn kleene_chain(
    map: &CausalityMap,
    start: Subset,
    within: Option<Subset>,
) -> Result<(Subset, Vec<Subset>, usize), Error> {
    let max_applications = map.width() + 2;
    let mut chain = vec![start];
    let mut current = start;
    for applications in 1..=max_applications {
        let next = map.apply(current);
        if let Some(top) = within {
            if !next.leq(&top) {
                return Err(Error::EscapedSlice { applications });
            }
        }
        chain.push(next);
        if next == current {
            return Ok((current, chain, applications));
        }
        current = next;
    }
    Err(Error::NoStabilization {
        applications: max_applications,
    })
}

/// Least fixed point by ascending iteration from the empty set.
///
/// Assumes the map is monotone; a non-monotone map either stabilizes
/// anyway or trips the cycle guard after n+2 applications.
pub fn kleene_lfp(map: &CausalityMap) -> Result<(Subset, Vec<Subset>), Error> {
    let (fp, chain, _) = kleene_chain(map, Subset::empty(map.width()), None)?;
    Ok((fp, chain))
}

/// Greatest fixed point by descending iteration from the full set.
pub fn kleene_gfp(map: &CausalityMap) -> Result<(Subset, Vec<Subset>), Error> {
    let (fp, chain, _) = kleene_chain(map, Subset::full(map.width()), None)?;
    Ok((fp, chain))
}

/// Least fixed point of the map restricted to subsets of `top`; errors if
/// an iterate leaves the slice.
pub fn kleene_lfp_within(
    map: &CausalityMap,
    top: Subset,
) -> Result<(Subset, Vec<Subset>), Error> {
    let (fp, chain, _) = kleene_chain(map, Subset::empty(map.width()), Some(top))?;
    Ok((fp, chain))
}

/// Greatest fixed point of the map restricted to subsets of `top`.
pub fn kleene_gfp_within(
    map: &CausalityMap,
    top: Subset,
) -> Result<(Subset, Vec<Subset>), Error> {
    let (fp, chain, _) = kleene_chain(map, top, Some(top))?;
    Ok((fp, chain))
}

/// Least fixed point by chaotic iteration: fire any rule whose premise is
/// satisfied and whose conclusion adds elements, until quiescence.
/// Always terminates (the set only grows) and agrees with [`kleene_lfp`].
pub fn worklist_lfp(rules: &RuleSystem) -> Subset {
    worklist_lfp_with(rules, WorklistOrder::Fifo)
}

pub fn worklist_lfp_with(rules: &RuleSystem, order: WorklistOrder) -> Subset {
    let count = rules.rules().len();
    let mut current = Subset::empty(rules.width());
    let mut queue: VecDeque<usize> = match order {
        WorklistOrder::Fifo | WorklistOrder::Lifo => (0..count).collect(),
        WorklistOrder::ReverseFifo => (0..count).rev().collect(),
    };
    let mut queued = vec![true; count];
    while let Some(i) = match order {
        WorklistOrder::Lifo => queue.pop_back(),
        _ => queue.pop_front(),
    } {
        queued[i] = false;
        let rule = &rules.rules()[i];
        if rule.premise.leq(&current) && !rule.conclusion.leq(&current) {
            current = current.join(&rule.conclusion);
            // the set grew, so any dormant rule may fire now
            for (j, q) in queued.iter_mut().enumerate() {
                if j != i && !*q {
                    *q = true;
                    queue.push_back(j);
                }
            }
        }
    }
    current
}

/// Every fixed point of the map, ascending by bit value.
pub fn enumerate_fixed_points(map: &CausalityMap) -> Vec<Subset> {
    all_subsets(map.width())
        .filter(|&a| map.apply(a) == a)
        .collect()
}

/// Fixed points lying inside `top`, ascending by bit value.
pub fn enumerate_fixed_points_within(map: &CausalityMap, top: Subset) -> Vec<Subset> {
    all_subsets(map.width())
        .filter(|a| a.leq(&top) && map.apply(*a) == *a)
        .collect()
}

/// Sweeps all subsets into the pre-fixpoint family `I` and post-fixpoint
/// family `J`.
pub fn pre_post_sets(map: &CausalityMap) -> PrePostSets {
    let mut pre = Vec::new();
    let mut post = Vec::new();
    for a in all_subsets(map.width()) {
        let c = map.apply(a);
        if c.leq(&a) {
            pre.push(a);
        }
        if a.leq(&c) {
            post.push(a);
        }
    }
    PrePostSets {
        pre_fixpoints: pre,
        post_fixpoints: post,
    }
}

/// Checks the solvers against the proof-set construction: `inf(I)` must be
/// the least fixed point, `sup(J)` the greatest, and every enumerated
/// fixed point must lie between them.
pub fn tarski_oracle(map: &CausalityMap) -> Result<CheckResult, Error> {
    let n = map.width();
    let (lfp, _) = kleene_lfp(map)?;
    let (gfp, _) = kleene_gfp(map)?;
    let sets = pre_post_sets(map);
    let inf_pre = big_meet(&sets.pre_fixpoints, n);
    if inf_pre != lfp {
        return Ok(CheckResult::fail(clause::INF_MISMATCH, vec![inf_pre, lfp]));
    }
    let sup_post = big_join(&sets.post_fixpoints, n);
    if sup_post != gfp {
        return Ok(CheckResult::fail(clause::SUP_MISMATCH, vec![sup_post, gfp]));
    }
    for fp in enumerate_fixed_points(map) {
        if !(lfp.leq(&fp) && fp.leq(&gfp)) {
            return Ok(CheckResult::fail(clause::OUTSIDE_BRACKET, vec![fp]));
        }
    }
    Ok(CheckResult::pass())
}

/// Runs both Kleene solves and the full enumeration over subsets of `top`.
pub fn fixpoint_report_within(map: &CausalityMap, top: Subset) -> Result<FixpointReport, Error> {
    let (lfp, ascending_chain, asc_apps) =
        kleene_chain(map, Subset::empty(map.width()), Some(top))?;
    let (gfp, descending_chain, desc_apps) = kleene_chain(map, top, Some(top))?;
    Ok(FixpointReport {
        lfp,
        gfp,
        ascending_chain,
        descending_chain,
        all_fixed_points: Some(enumerate_fixed_points_within(map, top)),
        applications: asc_apps + desc_apps,
    })
}

/// [`fixpoint_report_within`] over the whole universe.
pub fn fixpoint_report(map: &CausalityMap) -> Result<FixpointReport, Error> {
    fixpoint_report_within(map, Subset::full(map.width()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::causality::Rule;
    use crate::lattice::Universe;
    use crate::testutil::{m1, m2, m3, m4, m5};

    #[test]
    fn kleene_lfp_chains() {
        let m = m1();
        let u = m.universe();
        let (lfp, chain) = kleene_lfp(m.map()).unwrap();
        assert_eq!(lfp, u.set_of(&["s"]));
        assert_eq!(
            chain,
            vec![u.empty_set(), u.set_of(&["s"]), u.set_of(&["s"])]
        );

        let m = m2();
        let u = m.universe();
        let (lfp, chain) = kleene_lfp(m.map()).unwrap();
        assert_eq!(lfp, u.set_of(&["s1", "s2"]));
        assert_eq!(chain.len(), 3);

        let m = m3();
        assert_eq!(kleene_lfp(m.map()).unwrap().0, m.universe().set_of(&["s"]));
    }

    #[test]
    fn kleene_gfp_chains() {
        let m = m1();
        let u = m.universe();
        let (gfp, chain) = kleene_gfp(m.map()).unwrap();
        assert_eq!(gfp, u.set_of(&["s"]));
        assert_eq!(
            chain,
            vec![
                u.full_set(),
                u.set_of(&["s", "a"]),
                u.set_of(&["s"]),
                u.set_of(&["s"])
            ]
        );

        let m = m3();
        let (gfp, chain) = kleene_gfp(m.map()).unwrap();
        assert_eq!(gfp, m.universe().full_set());
        assert_eq!(chain.len(), 2); // top is already fixed

        let m = m2();
        let u = m.universe();
        let (gfp, chain) = kleene_gfp(m.map()).unwrap();
        assert_eq!(gfp, u.set_of(&["s1", "s2"]));
        assert_eq!(
            chain,
            vec![
                u.full_set(),
                u.set_of(&["s1", "s2"]),
                u.set_of(&["s1", "s2"])
            ]
        );
    }

    #[test]
    fn cycle_guard_trips_on_non_monotone_map() {
        let m = m5();
        assert_eq!(
            kleene_lfp(m.map()),
            Err(Error::NoStabilization { applications: 4 })
        );
    }

    #[test]
    fn worklist_agrees_on_fixtures() {
        for m in [m1(), m2()] {
            let rules = match m.map() {
                CausalityMap::Rules(r) => r,
                _ => unreachable!(),
            };
            let expected = kleene_lfp(m.map()).unwrap().0;
            for order in [
                WorklistOrder::Fifo,
                WorklistOrder::Lifo,
                WorklistOrder::ReverseFifo,
            ] {
                assert_eq!(worklist_lfp_with(rules, order), expected);
            }
        }
    }

    #[test]
    fn worklist_chain_closure() {
        let u = Universe::from_names(&["a", "b", "c"]).unwrap();
        let rules = RuleSystem::new(
            3,
            vec![
                Rule {
                    premise: u.empty_set(),
                    conclusion: u.set_of(&["a"]),
                },
                Rule {
                    premise: u.set_of(&["a"]),
                    conclusion: u.set_of(&["b"]),
                },
                Rule {
                    premise: u.set_of(&["b"]),
                    conclusion: u.set_of(&["c"]),
                },
            ],
        )
        .unwrap();
        assert_eq!(worklist_lfp(&rules), u.full_set());
    }

    #[test]
    fn fixed_point_enumeration() {
        let m = m1();
        assert_eq!(
            enumerate_fixed_points(m.map()),
            vec![m.universe().set_of(&["s"])]
        );

        let m = m3();
        let u = m.universe();
        assert_eq!(
            enumerate_fixed_points(m.map()),
            vec![u.set_of(&["s"]), u.set_of(&["s", "x"])]
        );

        let m = m4();
        assert_eq!(enumerate_fixed_points(m.map()).len(), 4);
    }

    #[test]
    fn proof_sets_and_oracle() {
        // I for the three-rule model: sweeping all 8 subsets leaves
        // {s}, {s,a} and {s,a,b}; its meet is the least fixed point
        let m = m1();
        let u = m.universe();
        let sets = pre_post_sets(m.map());
        assert_eq!(
            sets.pre_fixpoints,
            vec![
                u.set_of(&["s"]),
                u.set_of(&["s", "a"]),
                u.set_of(&["s", "a", "b"])
            ]
        );
        assert_eq!(sets.post_fixpoints, vec![u.empty_set(), u.set_of(&["s"])]);
        assert!(tarski_oracle(m.map()).unwrap().passed());

        let m = m2();
        let u = m.universe();
        let sets = pre_post_sets(m.map());
        assert_eq!(
            sets.post_fixpoints,
            vec![
                u.empty_set(),
                u.set_of(&["s1"]),
                u.set_of(&["s2"]),
                u.set_of(&["s1", "s2"])
            ]
        );
        assert!(tarski_oracle(m.map()).unwrap().passed());

        let m = m3();
        assert!(tarski_oracle(m.map()).unwrap().passed());
    }

    #[test]
    fn report_counts_applications() {
        let m = m1();
        let report = fixpoint_report(m.map()).unwrap();
        assert_eq!(report.applications, 5); // 2 ascending + 3 descending
        assert_eq!(report.ascending_chain.first(), Some(&m.universe().empty_set()));
        assert_eq!(report.descending_chain.first(), Some(&m.universe().full_set()));
        assert_eq!(
            report.all_fixed_points,
            Some(vec![m.universe().set_of(&["s"])])
        );
    }
}
