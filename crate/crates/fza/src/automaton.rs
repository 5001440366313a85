//! Fuzzy automata and crisp-deterministic fuzzy automata, with the
//! word-indexed constructions derived from them: transition relations of
//! words, initial/terminal vectors of words, recognized language degrees,
//! reversal, and afterset automata over fuzzy quasi-orders.

use crate::fuzzrel::{compose_rr, compose_rs, compose_sr, dot, FuzzyRelation, FuzzySet};
use crate::lattice::{LatticeKind, TruthValue};
use crate::{FzaError, Result};

/// A word over the automaton's alphabet; the empty vector is ε.
pub type Word = Vec<String>;

/// Renders a word for labels and reports; ε for the empty word.
pub fn word_label(u: &[String]) -> String {
    if u.is_empty() {
        "ε".to_string()
    } else {
        u.join("")
    }
}

/// A fuzzy finite automaton: fuzzy initial vector, one fuzzy transition
/// relation per alphabet symbol, fuzzy terminal vector.
#[derive(Clone, PartialEq, Debug)]
pub struct FuzzyAutomaton {
    pub kind: LatticeKind,
    pub n: usize,
    pub alphabet: Vec<String>,
    pub names: Option<Vec<String>>,
    pub sigma: FuzzySet,
    pub delta: Vec<FuzzyRelation>,
    pub tau: FuzzySet,
}

impl FuzzyAutomaton {
    pub fn new(
        kind: LatticeKind,
        alphabet: Vec<String>,
        sigma: FuzzySet,
        delta: Vec<FuzzyRelation>,
        tau: FuzzySet,
    ) -> Result<Self> {
        let n = sigma.len();
        let a = FuzzyAutomaton {
            kind,
            n,
            alphabet,
            names: None,
            sigma,
            delta,
            tau,
        };
        a.validate()?;
        Ok(a)
    }

    /// Checks every structural invariant, accumulating all violations.
    pub fn validate(&self) -> Result<()> {
        let mut errs = Vec::new();
        if self.n == 0 {
            errs.push("automaton must have at least one state".to_string());
        }
        if self.alphabet.is_empty() {
            errs.push("alphabet must be non-empty".to_string());
        }
        for (i, s) in self.alphabet.iter().enumerate() {
            if self.alphabet[..i].contains(s) {
                errs.push(format!("duplicate alphabet symbol `{s}`"));
            }
        }
        if self.delta.len() != self.alphabet.len() {
            errs.push(format!(
                "{} transition relations for {} symbols",
                self.delta.len(),
                self.alphabet.len()
            ));
        }
        if self.sigma.len() != self.n {
            errs.push(format!("initial vector has length {}", self.sigma.len()));
        }
        if self.tau.len() != self.n {
            errs.push(format!("terminal vector has length {}", self.tau.len()));
        }
        if self.sigma.kind != self.kind {
            errs.push("initial vector lattice kind differs".to_string());
        }
        if self.tau.kind != self.kind {
            errs.push("terminal vector lattice kind differs".to_string());
        }
        for (x, d) in self.alphabet.iter().zip(&self.delta) {
            if d.rows != self.n || d.cols != self.n {
                errs.push(format!(
                    "transition relation for `{x}` is {}x{}, expected {0}x{0}",
                    d.rows, d.cols
                ));
            }
            if d.kind != self.kind {
                errs.push(format!("transition relation for `{x}` has a different lattice kind"));
            }
        }
        if let Some(names) = &self.names {
            if names.len() != self.n {
                errs.push(format!("{} state names for {} states", names.len(), self.n));
            }
        }
        // carrier membership is enforced by FuzzySet/FuzzyRelation constructors,
        // but components may have been built under another kind
        for v in &self.sigma.values {
            if let Err(e) = self.kind.check_member(v) {
                errs.push(e.to_string());
            }
        }
        for v in &self.tau.values {
            if let Err(e) = self.kind.check_member(v) {
                errs.push(e.to_string());
            }
        }
        for d in &self.delta {
            for i in 0..d.rows {
                for v in d.row(i) {
                    if let Err(e) = self.kind.check_member(v) {
                        errs.push(e.to_string());
                        break;
                    }
                }
            }
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(FzaError::Invalid(errs))
        }
    }

    pub fn symbol_index(&self, x: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|s| s == x)
            .ok_or_else(|| FzaError::UnknownSymbol(x.to_string()))
    }

    pub fn delta_of(&self, x: &str) -> Result<&FuzzyRelation> {
        Ok(&self.delta[self.symbol_index(x)?])
    }

    /// Transition relation of a word: δ_ε = Δ, δ_{uv} = δ_u ∘ δ_v.
    pub fn delta_word(&self, u: &[String]) -> Result<FuzzyRelation> {
        let mut rel = FuzzyRelation::identity(self.kind, self.n);
        for x in u {
            rel = compose_rr(&rel, self.delta_of(x)?)?;
        }
        Ok(rel)
    }

    /// σ_u = σ ∘ δ_u, computed incrementally as σ_ux = σ_u ∘ δ_x.
    pub fn sigma_u(&self, u: &[String]) -> Result<FuzzySet> {
        let mut s = self.sigma.clone();
        for x in u {
            s = compose_sr(&s, self.delta_of(x)?)?;
        }
        Ok(s)
    }

    /// τ_u = δ_u ∘ τ, computed incrementally as τ_{xu} = δ_x ∘ τ_u.
    pub fn tau_u(&self, u: &[String]) -> Result<FuzzySet> {
        let mut t = self.tau.clone();
        for x in u.iter().rev() {
            t = compose_rs(self.delta_of(x)?, &t)?;
        }
        Ok(t)
    }

    /// Degree to which the automaton recognizes `u`: σ ∘ δ_u ∘ τ.
    pub fn language_degree(&self, u: &[String]) -> Result<TruthValue> {
        dot(&self.sigma_u(u)?, &self.tau)
    }

    /// Reverse automaton: σ and τ swapped, every δ_x transposed.
    pub fn reverse(&self) -> FuzzyAutomaton {
        FuzzyAutomaton {
            kind: self.kind,
            n: self.n,
            alphabet: self.alphabet.clone(),
            names: self.names.clone(),
            sigma: self.tau.clone(),
            delta: self.delta.iter().map(|d| d.transpose()).collect(),
            tau: self.sigma.clone(),
        }
    }

    /// Afterset automaton with respect to a fuzzy quasi-order `phi`:
    /// states are the distinct rows of `phi` (represented by their first
    /// index), with δ' = φ∘δ_x∘φ, σ' = σ∘φ, τ' = φ∘τ restricted to the
    /// representatives.
    pub fn afterset_automaton(&self, phi: &FuzzyRelation) -> Result<FuzzyAutomaton> {
        if phi.rows != self.n || phi.cols != self.n {
            return Err(FzaError::DimensionMismatch(format!(
                "{}x{} relation over {} states",
                phi.rows, phi.cols, self.n
            )));
        }
        if !phi.is_quasi_order()? {
            return Err(FzaError::NotQuasiOrder);
        }
        let (_, groups) = phi.distinct_rows();
        let reps: Vec<usize> = groups.iter().map(|g| g[0]).collect();
        let sigma_full = compose_sr(&self.sigma, phi)?;
        let tau_full = compose_rs(phi, &self.tau)?;
        let sigma = FuzzySet::new(
            self.kind,
            reps.iter().map(|&i| sigma_full.values[i].clone()).collect(),
        )?;
        let tau = FuzzySet::new(
            self.kind,
            reps.iter().map(|&i| tau_full.values[i].clone()).collect(),
        )?;
        let mut delta = Vec::with_capacity(self.delta.len());
        for d in &self.delta {
            let full = compose_rr(&compose_rr(phi, d)?, phi)?;
            delta.push(FuzzyRelation::from_fn(
                self.kind,
                reps.len(),
                reps.len(),
                |i, j| full.get(reps[i], reps[j]).clone(),
            ));
        }
        FuzzyAutomaton::new(self.kind, self.alphabet.clone(), sigma, delta, tau)
    }
}

/// One state of a crisp-deterministic fuzzy automaton.
#[derive(Clone, PartialEq, Debug)]
pub struct CdfaState {
    pub label: String,
    pub term: TruthValue,
    /// First word (in military order) whose construction vector named
    /// this state.
    pub witness: Word,
    /// The defining fuzzy vector, when the construction has one.
    pub provenance: Option<FuzzySet>,
}

/// A crisp-deterministic fuzzy automaton: one crisp initial state, a total
/// deterministic transition function, and a fuzzy terminal map.
#[derive(Clone, PartialEq, Debug)]
pub struct Cdfa {
    pub kind: LatticeKind,
    pub alphabet: Vec<String>,
    pub states: Vec<CdfaState>,
    /// next[state][symbol index] = successor state.
    pub next: Vec<Vec<usize>>,
    pub initial: usize,
}

impl Cdfa {
    pub fn size(&self) -> usize {
        self.states.len()
    }

    pub fn symbol_index(&self, x: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|s| s == x)
            .ok_or_else(|| FzaError::UnknownSymbol(x.to_string()))
    }

    /// Walks the transition function from the initial state and returns
    /// the terminal degree of the state reached.
    pub fn eval(&self, u: &[String]) -> Result<TruthValue> {
        let mut q = self.initial;
        for x in u {
            q = self.next[q][self.symbol_index(x)?];
        }
        Ok(self.states[q].term.clone())
    }

    /// Every state reachable, transitions total and in range.
    pub fn check_accessible(&self) -> bool {
        let n = self.size();
        if self.initial >= n || self.next.len() != n {
            return false;
        }
        let m = self.alphabet.len();
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([self.initial]);
        seen[self.initial] = true;
        let mut count = 1;
        while let Some(q) = queue.pop_front() {
            if self.next[q].len() != m {
                return false;
            }
            for &r in &self.next[q] {
                if r >= n {
                    return false;
                }
                if !seen[r] {
                    seen[r] = true;
                    count += 1;
                    queue.push_back(r);
                }
            }
        }
        count == n
    }

    /// Reinterprets the CDFA as a fuzzy automaton: crisp transition
    /// relations, crisp singleton initial vector, terminal map as τ.
    pub fn to_fuzzy_automaton(&self) -> Result<FuzzyAutomaton> {
        let n = self.size();
        let sigma = FuzzySet::unit(self.kind, n, self.initial);
        let tau = FuzzySet::new(
            self.kind,
            self.states.iter().map(|s| s.term.clone()).collect(),
        )?;
        let mut delta = Vec::with_capacity(self.alphabet.len());
        for xi in 0..self.alphabet.len() {
            let one = self.kind.one();
            let zero = self.kind.zero();
            delta.push(FuzzyRelation::from_fn(self.kind, n, n, |i, j| {
                if self.next[i][xi] == j {
                    one.clone()
                } else {
                    zero.clone()
                }
            }));
        }
        FuzzyAutomaton::new(self.kind, self.alphabet.clone(), sigma, delta, tau)
    }
}

/// True iff a root-preserving bijection exists that preserves transitions
/// and terminal degrees. Both automata are accessible, so a parallel BFS
/// from the two initial states decides this.
pub fn cdfa_isomorphic(c1: &Cdfa, c2: &Cdfa) -> bool {
    if c1.kind != c2.kind || c1.alphabet != c2.alphabet || c1.size() != c2.size() {
        return false;
    }
    let n = c1.size();
    let mut map = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    let mut queue = std::collections::VecDeque::from([(c1.initial, c2.initial)]);
    map[c1.initial] = c2.initial;
    hit[c2.initial] = true;
    while let Some((p, q)) = queue.pop_front() {
        if c1.states[p].term != c2.states[q].term {
            return false;
        }
        for xi in 0..c1.alphabet.len() {
            let (p2, q2) = (c1.next[p][xi], c2.next[q][xi]);
            if map[p2] == usize::MAX {
                if hit[q2] {
                    return false;
                }
                map[p2] = q2;
                hit[q2] = true;
                queue.push_back((p2, q2));
            } else if map[p2] != q2 {
                return false;
            }
        }
    }
    map.iter().all(|&m| m != usize::MAX)
}
