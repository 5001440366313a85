//! The `.fza` text format: a fixed-order, line-based encoding of a fuzzy
//! automaton. `#` starts a comment, values are whitespace-separated, and
//! parsing is exact (decimals become rationals, never floats).
//!
//! ```text
//! lattice godel
//! states 3            # optionally followed by state names
//! alphabet x y
//! initial 1 0 0
//! terminal 0 1 1
//! trans x
//! 0 1 0
//! 1 0 1
//! 1 0 0
//! trans y
//! ...
//! ```

use crate::automaton::FuzzyAutomaton;
use crate::fuzzrel::{FuzzyRelation, FuzzySet};
use crate::lattice::{parse_value, LatticeKind, TruthValue};
use crate::{FzaError, Result};

struct Line {
    no: usize,
    tokens: Vec<String>,
}

struct Cursor {
    lines: Vec<Line>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let content = raw.split('#').next().unwrap_or("");
                let tokens: Vec<String> =
                    content.split_whitespace().map(str::to_string).collect();
                if tokens.is_empty() {
                    None
                } else {
                    Some(Line { no: i + 1, tokens })
                }
            })
            .collect();
        Cursor { lines, pos: 0 }
    }

    fn next(&mut self, expect: &str) -> Result<&Line> {
        let line = self.lines.get(self.pos).ok_or_else(|| FzaError::Syntax {
            line: self.lines.last().map_or(0, |l| l.no) + 1,
            msg: format!("missing `{expect}` section"),
        })?;
        if line.tokens[0] != expect {
            return Err(FzaError::Syntax {
                line: line.no,
                msg: format!("expected `{expect}`, found `{}`", line.tokens[0]),
            });
        }
        self.pos += 1;
        Ok(line)
    }

    fn next_row(&mut self) -> Result<&Line> {
        let line = self.lines.get(self.pos).ok_or_else(|| FzaError::Syntax {
            line: self.lines.last().map_or(0, |l| l.no) + 1,
            msg: "missing matrix row".to_string(),
        })?;
        self.pos += 1;
        Ok(line)
    }
}

fn syn(line: usize, msg: impl Into<String>) -> FzaError {
    FzaError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn values(tokens: &[String], n: usize, kind: LatticeKind, line: usize) -> Result<Vec<TruthValue>> {
    if tokens.len() != n {
        return Err(syn(line, format!("expected {n} values, found {}", tokens.len())));
    }
    tokens
        .iter()
        .map(|t| parse_value(t, kind).map_err(|e| syn(line, e.to_string())))
        .collect()
}

/// Parses an automaton from `.fza` text, reporting the first error with
/// its line number, then validates it.
pub fn parse_automaton(text: &str) -> Result<FuzzyAutomaton> {
    let mut cur = Cursor::new(text);

    let lat = cur.next("lattice")?;
    if lat.tokens.len() != 2 {
        return Err(syn(lat.no, "expected `lattice <kind>`"));
    }
    let kind: LatticeKind = lat.tokens[1]
        .parse()
        .map_err(|e: String| syn(lat.no, e))?;

    let st = cur.next("states")?;
    if st.tokens.len() < 2 {
        return Err(syn(st.no, "expected `states <n>`"));
    }
    let st_no = st.no;
    let n: usize = st.tokens[1]
        .parse()
        .map_err(|_| syn(st_no, format!("invalid state count `{}`", st.tokens[1])))?;
    if n == 0 {
        return Err(syn(st_no, "state count must be positive"));
    }
    let names = if st.tokens.len() > 2 {
        let names: Vec<String> = st.tokens[2..].to_vec();
        if names.len() != n {
            return Err(syn(st_no, format!("expected {n} state names, found {}", names.len())));
        }
        Some(names)
    } else {
        None
    };

    let al = cur.next("alphabet")?;
    if al.tokens.len() < 2 {
        return Err(syn(al.no, "alphabet must list at least one symbol"));
    }
    let al_no = al.no;
    let alphabet: Vec<String> = al.tokens[1..].to_vec();
    for (i, s) in alphabet.iter().enumerate() {
        if alphabet[..i].contains(s) {
            return Err(syn(al_no, format!("duplicate alphabet symbol `{s}`")));
        }
    }

    let init = cur.next("initial")?;
    let sigma = FuzzySet::new(kind, values(&init.tokens[1..], n, kind, init.no)?)?;
    let term = cur.next("terminal")?;
    let tau = FuzzySet::new(kind, values(&term.tokens[1..], n, kind, term.no)?)?;

    let mut delta = Vec::with_capacity(alphabet.len());
    for sym in &alphabet {
        let tr = cur.next("trans")?;
        if tr.tokens.len() != 2 || &tr.tokens[1] != sym {
            return Err(syn(
                tr.no,
                format!("expected `trans {sym}` (transition blocks follow alphabet order)"),
            ));
        }
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n {
            let row = cur.next_row()?;
            let (no, toks) = (row.no, row.tokens.clone());
            if toks[0] == "trans" {
                return Err(syn(no, "matrix row missing"));
            }
            entries.extend(values(&toks, n, kind, no)?);
        }
        delta.push(FuzzyRelation::new(kind, n, n, entries)?);
    }

    if let Some(extra) = cur.lines.get(cur.pos) {
        return Err(syn(extra.no, format!("unexpected trailing content `{}`", extra.tokens[0])));
    }

    let mut a = FuzzyAutomaton::new(kind, alphabet, sigma, delta, tau)?;
    a.names = names;
    a.validate()?;
    Ok(a)
}

/// Serializes an automaton to `.fza` text; `parse_automaton` of the
/// result reproduces the input exactly.
pub fn serialize_automaton(a: &FuzzyAutomaton) -> String {
    let mut out = String::new();
    out.push_str(&format!("lattice {}\n", a.kind));
    match &a.names {
        Some(names) => out.push_str(&format!("states {} {}\n", a.n, names.join(" "))),
        None => out.push_str(&format!("states {}\n", a.n)),
    }
    out.push_str(&format!("alphabet {}\n", a.alphabet.join(" ")));
    let row = |vals: &[TruthValue]| {
        vals.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str(&format!("initial {}\n", row(&a.sigma.values)));
    out.push_str(&format!("terminal {}\n", row(&a.tau.values)));
    for (sym, d) in a.alphabet.iter().zip(&a.delta) {
        out.push_str(&format!("trans {sym}\n"));
        for i in 0..d.rows {
            out.push_str(&row(d.row(i)));
            out.push('\n');
        }
    }
    out
}
