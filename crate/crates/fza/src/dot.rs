//! DOT (Graphviz) rendering of crisp-deterministic fuzzy automata: one
//! node per state with its terminal degree in the label, an unlabeled
//! arrow into the initial state, and edges merged across symbols that
//! share source and target.

use crate::automaton::Cdfa;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders a CDFA as a DOT digraph with deterministic node and edge order.
pub fn emit_dot(c: &Cdfa) -> String {
    let mut out = String::from("digraph cdfa {\n  rankdir=LR;\n");
    out.push_str("  __start [shape=none, label=\"\"];\n");
    for (i, st) in c.states.iter().enumerate() {
        out.push_str(&format!(
            "  q{i} [shape=circle, label=\"{} / {}\"];\n",
            escape(&st.label),
            escape(&st.term.to_string())
        ));
    }
    out.push_str(&format!("  __start -> q{};\n", c.initial));
    for (i, succs) in c.next.iter().enumerate() {
        // merge symbols sharing a target, first-target order
        let mut targets: Vec<usize> = Vec::new();
        let mut labels: Vec<Vec<&str>> = Vec::new();
        for (xi, &t) in succs.iter().enumerate() {
            match targets.iter().position(|&u| u == t) {
                Some(p) => labels[p].push(&c.alphabet[xi]),
                None => {
                    targets.push(t);
                    labels.push(vec![&c.alphabet[xi]]);
                }
            }
        }
        for (t, syms) in targets.iter().zip(&labels) {
            out.push_str(&format!(
                "  q{i} -> q{t} [label=\"{}\"];\n",
                escape(&syms.join(","))
            ));
        }
    }
    out.push_str("}\n");
    out
}
