//! Machine-readable JSON emission. All truth values are rendered as
//! exact strings ("p/q", integers, or "a<k>") — never as floats — so
//! downstream consumers can compare results bit-exactly.

use serde_json::{json, Value};

use crate::automaton::{word_label, Cdfa};
use crate::determinize::DetResult;
use crate::fuzzrel::FuzzyRelation;
use crate::invariants::QuasiOrderReport;

/// JSON view of a CDFA: states with labels, exact terminal degrees, and
/// witness words; the transition table as state indices.
pub fn cdfa_json(c: &Cdfa) -> Value {
    json!({
        "lattice": c.kind.to_string(),
        "alphabet": c.alphabet,
        "initial": c.initial,
        "states": c.states.iter().map(|s| json!({
            "label": s.label,
            "term": s.term.to_string(),
            "witness": word_label(&s.witness),
        })).collect::<Vec<_>>(),
        "next": c.next,
    })
}

/// JSON view of a determinization run.
pub fn det_result_json(r: &DetResult, input_states: usize) -> Value {
    json!({
        "method": r.method.to_string(),
        "input_states": input_states,
        "output_states": r.cdfa.size(),
        "states_created": r.states_created,
        "closure_checks": r.closure_checks,
        "verified": r.verified,
        "cdfa": cdfa_json(&r.cdfa),
    })
}

/// JSON view of a fuzzy relation as a matrix of exact value strings.
pub fn relation_json(rel: &FuzzyRelation) -> Value {
    let rows: Vec<Vec<String>> = (0..rel.rows)
        .map(|i| rel.row(i).iter().map(|v| v.to_string()).collect())
        .collect();
    json!(rows)
}

/// JSON view of a quasi-order computation.
pub fn quasi_order_json(q: &QuasiOrderReport) -> Value {
    let (distinct, _) = q.relation.distinct_rows();
    json!({
        "kind": q.class_checked.to_string(),
        "relation": relation_json(&q.relation),
        "reflexive": q.reflexive,
        "transitive": q.transitive,
        "holds": q.holds,
        "iterations_used": q.iterations_used,
        "family_size": q.family_size,
        "distinct_rows": distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{LatticeKind, TruthValue};

    #[test]
    fn rationals_serialize_as_strings() {
        let k = LatticeKind::Product;
        let rel = FuzzyRelation::new(
            k,
            1,
            2,
            vec![TruthValue::rational(1, 2), TruthValue::rational(1, 1)],
        )
        .unwrap();
        let v = relation_json(&rel);
        assert_eq!(v, json!([["1/2", "1"]]));
        let text = serde_json::to_string(&v).unwrap();
        assert!(!text.contains("0.5"));
    }
}
