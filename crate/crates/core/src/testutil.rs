//! Hand-checked fixture models shared across the unit tests.

use crate::causality::{CausalityMap, DenseTable, Rule, RuleSystem};
use crate::lattice::{all_subsets, Universe};
use crate::substance::SpinozaModel;

/// Universe s,a,b (births -inf, 1, 2); rules ∅→{s}, {a}→{s}, {b}→{s,a};
/// times 1.5 and +inf. Passes every check.
pub fn m1() -> SpinozaModel {
    let u = Universe::new(
        vec!["s".into(), "a".into(), "b".into()],
        vec![f64::NEG_INFINITY, 1.0, 2.0],
    )
    .unwrap();
    let rules = vec![
        Rule {
            premise: u.empty_set(),
            conclusion: u.set_of(&["s"]),
        },
        Rule {
            premise: u.set_of(&["a"]),
            conclusion: u.set_of(&["s"]),
        },
        Rule {
            premise: u.set_of(&["b"]),
            conclusion: u.set_of(&["s", "a"]),
        },
    ];
    let map = CausalityMap::Rules(RuleSystem::new(3, rules).unwrap());
    SpinozaModel::new(u, vec![1.5, f64::INFINITY], map).unwrap()
}

/// Universe s1,s2,x (births -inf, -inf, 0); single rule ∅→{s1,s2}.
/// Unique two-element substance; property (P) fails.
pub fn m2() -> SpinozaModel {
    let u = Universe::new(
        vec!["s1".into(), "s2".into(), "x".into()],
        vec![f64::NEG_INFINITY, f64::NEG_INFINITY, 0.0],
    )
    .unwrap();
    let rules = vec![Rule {
        premise: u.empty_set(),
        conclusion: u.set_of(&["s1", "s2"]),
    }];
    let map = CausalityMap::Rules(RuleSystem::new(3, rules).unwrap());
    SpinozaModel::new(u, vec![f64::INFINITY], map).unwrap()
}

/// Universe s,x; monotone table with two nested fixed points {s} ⊂ {s,x},
/// so A3 fails.
pub fn m3() -> SpinozaModel {
    let u = Universe::from_names(&["s", "x"]).unwrap();
    let entries = vec![
        u.set_of(&["s"]),      // C({})
        u.set_of(&["s"]),      // C({s})
        u.set_of(&["s", "x"]), // C({x})
        u.set_of(&["s", "x"]), // C({s,x})
    ];
    let map = CausalityMap::Table(DenseTable::new(2, entries).unwrap());
    SpinozaModel::new(u, vec![f64::INFINITY], map).unwrap()
}

/// Universe s,x; identity table. Violates A1 at the empty set.
pub fn m4() -> SpinozaModel {
    let u = Universe::from_names(&["s", "x"]).unwrap();
    let entries = all_subsets(2).collect();
    let map = CausalityMap::Table(DenseTable::new(2, entries).unwrap());
    SpinozaModel::new(u, vec![f64::INFINITY], map).unwrap()
}

/// Universe s,x; non-monotone table (C({s}) = {x} escapes C({s,x}) = {s}).
pub fn m5() -> SpinozaModel {
    let u = Universe::from_names(&["s", "x"]).unwrap();
    let entries = vec![
        u.set_of(&["s"]), // C({})
        u.set_of(&["x"]), // C({s})
        u.set_of(&["s"]), // C({x})
        u.set_of(&["s"]), // C({s,x})
    ];
    let map = CausalityMap::Table(DenseTable::new(2, entries).unwrap());
    SpinozaModel::new(u, vec![f64::INFINITY], map).unwrap()
}
