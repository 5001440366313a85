//! Property-based checks of the algebraic laws and the structural
//! theorems relating the determinization constructions.

use proptest::prelude::*;

use fza::automaton::cdfa_isomorphic;
use fza::determinize::{determinize_phi, nerode, run_method, DetMethod};
use fza::fuzzrel::{
    compose_rr, compose_sr, residual_left_rel, residual_right_rel, FuzzyRelation, FuzzySet,
};
use fza::invariants::{
    greatest_weakly_left_invariant, greatest_weakly_right_invariant, Budget,
};
use fza::lattice::{LatticeKind, TruthValue};
use fza::FuzzyAutomaton;

fn kind_strategy() -> impl Strategy<Value = LatticeKind> {
    prop_oneof![
        Just(LatticeKind::Boolean),
        Just(LatticeKind::Godel),
        Just(LatticeKind::Product),
        Just(LatticeKind::Lukasiewicz),
        Just(LatticeKind::Chain(3)),
    ]
}

fn value_strategy(kind: LatticeKind) -> impl Strategy<Value = TruthValue> {
    (0u32..=2).prop_map(move |v| match kind {
        LatticeKind::Boolean => {
            if v == 2 {
                kind.one()
            } else {
                kind.zero()
            }
        }
        LatticeKind::Chain(n) => TruthValue::chain(v * n / 2),
        _ => match v {
            0 => kind.zero(),
            1 => TruthValue::rational(1, 2),
            _ => kind.one(),
        },
    })
}

fn rel_strategy(kind: LatticeKind, n: usize) -> impl Strategy<Value = FuzzyRelation> {
    proptest::collection::vec(value_strategy(kind), n * n)
        .prop_map(move |vals| FuzzyRelation::new(kind, n, n, vals).unwrap())
}

fn set_strategy(kind: LatticeKind, n: usize) -> impl Strategy<Value = FuzzySet> {
    proptest::collection::vec(value_strategy(kind), n)
        .prop_map(move |vals| FuzzySet::new(kind, vals).unwrap())
}

fn automaton_strategy() -> impl Strategy<Value = FuzzyAutomaton> {
    (kind_strategy(), 2usize..=4)
        .prop_flat_map(|(kind, n)| {
            (
                set_strategy(kind, n),
                rel_strategy(kind, n),
                rel_strategy(kind, n),
                set_strategy(kind, n),
            )
        })
        .prop_map(|(sigma, dx, dy, tau)| {
            let kind = sigma.kind;
            FuzzyAutomaton::new(kind, vec!["x".into(), "y".into()], sigma, vec![dx, dy], tau)
                .unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(
        (a, b, c) in kind_strategy().prop_flat_map(|k| {
            (rel_strategy(k, 3), rel_strategy(k, 3), rel_strategy(k, 3))
        })
    ) {
        let left = compose_rr(&compose_rr(&a, &b).unwrap(), &c).unwrap();
        let right = compose_rr(&a, &compose_rr(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn set_composition_is_associative(
        (f, a, b) in kind_strategy().prop_flat_map(|k| {
            (set_strategy(k, 3), rel_strategy(k, 3), rel_strategy(k, 3))
        })
    ) {
        let left = compose_sr(&compose_sr(&f, &a).unwrap(), &b).unwrap();
        let right = compose_sr(&f, &compose_rr(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn residual_adjunction(
        (a, b, x) in kind_strategy().prop_flat_map(|k| {
            (rel_strategy(k, 3), rel_strategy(k, 3), rel_strategy(k, 3))
        })
    ) {
        let res = residual_right_rel(&a, &b).unwrap();
        let lhs = compose_rr(&a, &x).unwrap().leq(&b).unwrap();
        let rhs = x.leq(&res).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn self_residuals_are_quasi_orders(
        a in kind_strategy().prop_flat_map(|k| rel_strategy(k, 3))
    ) {
        prop_assert!(residual_right_rel(&a, &a).unwrap().is_quasi_order().unwrap());
        prop_assert!(residual_left_rel(&a, &a).unwrap().is_quasi_order().unwrap());
    }

    #[test]
    fn distinct_rows_permutation_invariant(
        a in kind_strategy().prop_flat_map(|k| rel_strategy(k, 4))
    ) {
        let (count, _) = a.distinct_rows();
        // rotate the rows by one
        let rotated = FuzzyRelation::from_fn(a.kind, a.rows, a.cols, |i, j| {
            a.get((i + 1) % a.rows, j).clone()
        });
        prop_assert_eq!(count, rotated.distinct_rows().0);
    }

    #[test]
    fn word_relation_splits(a in automaton_strategy(), split in 0usize..=3) {
        let u: Vec<String> = ["x", "y", "x"].iter().map(|s| s.to_string()).collect();
        let (left, right) = u.split_at(split);
        let whole = a.delta_word(&u).unwrap();
        let composed = compose_rr(
            &a.delta_word(left).unwrap(),
            &a.delta_word(right).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(whole, composed);
    }

    #[test]
    fn reverse_is_involutive(a in automaton_strategy()) {
        prop_assert_eq!(a.reverse().reverse(), a);
    }

    #[test]
    fn methods_are_deterministic(a in finite_automaton_strategy()) {
        // boolean/Gödel over {0, 1/2, 1} keeps every vector family finite
        let b = Budget { max_states: 2_000, ..Budget::default() };
        for method in [DetMethod::Nerode, DetMethod::Wri, DetMethod::Brzozowski] {
            let r1 = run_method(&a, method, &b).unwrap();
            let r2 = run_method(&a, method, &b).unwrap();
            prop_assert_eq!(r1.cdfa, r2.cdfa);
            prop_assert_eq!(r1.closure_checks, r2.closure_checks);
        }
    }
}

fn finite_automaton_strategy() -> impl Strategy<Value = FuzzyAutomaton> {
    (
        prop_oneof![Just(LatticeKind::Boolean), Just(LatticeKind::Godel)],
        2usize..=3,
    )
        .prop_flat_map(|(kind, n)| {
            (
                set_strategy(kind, n),
                rel_strategy(kind, n),
                rel_strategy(kind, n),
                set_strategy(kind, n),
            )
        })
        .prop_map(|(sigma, dx, dy, tau)| {
            let kind = sigma.kind;
            FuzzyAutomaton::new(kind, vec!["x".into(), "y".into()], sigma, vec![dx, dy], tau)
                .unwrap()
        })
}

/// The reduction over the greatest weakly right invariant quasi-order is
/// isomorphic to the Nerode automaton of the corresponding afterset
/// automaton, and afterset reduction by the greatest weakly left
/// invariant quasi-order leaves the Nerode automaton unchanged.
#[test]
fn afterset_theorems_on_fixtures() {
    let budget = Budget::default();
    for name in ["e1", "e2", "e3", "e4", "e5"] {
        let path = format!("{}/tests/fixtures/{name}.fza", env!("CARGO_MANIFEST_DIR"));
        let a = fza::format::parse_automaton(&std::fs::read_to_string(path).unwrap()).unwrap();

        let wri = greatest_weakly_right_invariant(&a, &budget).unwrap();
        let direct = determinize_phi(&a, &wri.relation, 10_000, true).unwrap();
        let quotient = a.afterset_automaton(&wri.relation).unwrap();
        let via_quotient = nerode(&quotient, 10_000).unwrap();
        assert!(
            cdfa_isomorphic(&direct.cdfa, &via_quotient.cdfa),
            "{name}: reduction is not the Nerode automaton of the afterset automaton"
        );

        let wli = greatest_weakly_left_invariant(&a, &budget).unwrap();
        let reduced = a.afterset_automaton(&wli.relation).unwrap();
        assert!(
            cdfa_isomorphic(
                &nerode(&reduced, 10_000).unwrap().cdfa,
                &nerode(&a, 10_000).unwrap().cdfa
            ),
            "{name}: weakly left invariant afterset changed the Nerode automaton"
        );
    }
}
