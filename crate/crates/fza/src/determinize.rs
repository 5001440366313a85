//! Determinization constructions: transition-tree determinization over a
//! reflexive weakly right invariant relation (Nerode as the identity
//! special case), the dual reverse construction, the children automaton,
//! the double-reverse minimization pipeline, and a partition-refinement
//! minimization oracle.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::automaton::{word_label, Cdfa, CdfaState, FuzzyAutomaton, Word};
use crate::fuzzrel::{compose_rr, compose_rs, compose_sr, dot, FuzzyRelation, FuzzySet};
use crate::invariants::{
    check_weakly_left_invariant, check_weakly_right_invariant, greatest_left_invariant,
    greatest_right_invariant, greatest_weakly_left_invariant, greatest_weakly_right_invariant,
    Budget,
};
use crate::lattice::TruthValue;
use crate::{FzaError, Result};

/// The determinization method selector used by the CLI and the comparison
/// driver. Mirrors the command-line `--method` names.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum DetMethod {
    Nerode,
    Ri,
    Wri,
    ChildrenNerode,
    ChildrenRi,
    ChildrenWri,
    ReverseNerode,
    Li,
    Wli,
    Brzozowski,
    BrzozowskiLi,
    BrzozowskiWli,
}

impl DetMethod {
    pub const ALL: [DetMethod; 12] = [
        DetMethod::Nerode,
        DetMethod::Ri,
        DetMethod::Wri,
        DetMethod::ChildrenNerode,
        DetMethod::ChildrenRi,
        DetMethod::ChildrenWri,
        DetMethod::ReverseNerode,
        DetMethod::Li,
        DetMethod::Wli,
        DetMethod::Brzozowski,
        DetMethod::BrzozowskiLi,
        DetMethod::BrzozowskiWli,
    ];

    /// True when the resulting CDFA recognizes the source language; the
    /// reverse constructions recognize the reverse language instead.
    pub fn is_forward(&self) -> bool {
        !matches!(self, DetMethod::ReverseNerode | DetMethod::Li | DetMethod::Wli)
    }
}

impl fmt::Display for DetMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DetMethod::Nerode => "nerode",
            DetMethod::Ri => "ri",
            DetMethod::Wri => "wri",
            DetMethod::ChildrenNerode => "children-nerode",
            DetMethod::ChildrenRi => "children-ri",
            DetMethod::ChildrenWri => "children-wri",
            DetMethod::ReverseNerode => "reverse-nerode",
            DetMethod::Li => "li",
            DetMethod::Wli => "wli",
            DetMethod::Brzozowski => "brzozowski",
            DetMethod::BrzozowskiLi => "brzozowski-li",
            DetMethod::BrzozowskiWli => "brzozowski-wli",
        };
        f.write_str(s)
    }
}

impl FromStr for DetMethod {
    type Err = FzaError;

    fn from_str(s: &str) -> Result<Self> {
        DetMethod::ALL
            .iter()
            .copied()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| FzaError::Semantic(format!("unknown method `{s}`")))
    }
}

/// The outcome of one determinization run, with instrumentation.
#[derive(Clone, Debug)]
pub struct DetResult {
    pub cdfa: Cdfa,
    pub states_created: usize,
    pub closure_checks: usize,
    /// A state or family budget was hit (only possible on error paths;
    /// successful results always have this false).
    pub budget_hit: bool,
    /// The relation's invariance precondition was checked (or is
    /// guaranteed by construction) rather than bypassed.
    pub verified: bool,
    pub method: DetMethod,
}

struct TreeOutcome {
    cdfa: Cdfa,
    closure_checks: usize,
}

/// Shared breadth-first transition-tree driver. Starting from `root`,
/// expands each open vertex by every symbol via `step`, closing a leaf
/// when its vector was seen before. `prepend` controls whether the
/// witness word grows on the left (reverse constructions) or right.
fn tree_determinize(
    a: &FuzzyAutomaton,
    root: FuzzySet,
    step: impl Fn(&FuzzySet, usize) -> Result<FuzzySet>,
    term: impl Fn(&FuzzySet) -> Result<TruthValue>,
    prefix: &str,
    prepend: bool,
    max_states: usize,
) -> Result<TreeOutcome> {
    let m = a.alphabet.len();
    let mut index: HashMap<FuzzySet, usize> = HashMap::new();
    let mut states: Vec<CdfaState> = Vec::new();
    let mut vectors: Vec<FuzzySet> = Vec::new();
    let mut next: Vec<Vec<usize>> = Vec::new();
    let mut closure_checks = 0usize;

    let push = |vec: FuzzySet,
                    witness: Word,
                    index: &mut HashMap<FuzzySet, usize>,
                    states: &mut Vec<CdfaState>,
                    vectors: &mut Vec<FuzzySet>,
                    next: &mut Vec<Vec<usize>>|
     -> Result<usize> {
        if states.len() >= max_states {
            return Err(FzaError::BudgetExceeded {
                what: "max_states",
                limit: max_states,
            });
        }
        let id = states.len();
        states.push(CdfaState {
            label: format!("{prefix}_{}", word_label(&witness)),
            term: term(&vec)?,
            witness,
            provenance: Some(vec.clone()),
        });
        index.insert(vec.clone(), id);
        vectors.push(vec);
        next.push(vec![usize::MAX; m]);
        Ok(id)
    };

    push(root, Vec::new(), &mut index, &mut states, &mut vectors, &mut next)?;
    let mut head = 0usize;
    while head < states.len() {
        for xi in 0..m {
            let child = step(&vectors[head], xi)?;
            closure_checks += 1;
            let target = match index.get(&child) {
                Some(&id) => id,
                None => {
                    let witness = if prepend {
                        let mut w = vec![a.alphabet[xi].clone()];
                        w.extend(states[head].witness.iter().cloned());
                        w
                    } else {
                        let mut w = states[head].witness.clone();
                        w.push(a.alphabet[xi].clone());
                        w
                    };
                    push(child, witness, &mut index, &mut states, &mut vectors, &mut next)?
                }
            };
            next[head][xi] = target;
        }
        head += 1;
    }

    Ok(TreeOutcome {
        cdfa: Cdfa {
            kind: a.kind,
            alphabet: a.alphabet.clone(),
            states,
            next,
            initial: 0,
        },
        closure_checks,
    })
}

/// Determinization over a reflexive weakly right invariant fuzzy relation
/// `phi`: states are the distinct vectors φ_ε = σ∘φ, φ_ux = φ_u∘δ_x∘φ,
/// with terminal degrees φ_u∘τ. With `phi` the identity this is the
/// Nerode automaton.
///
/// When `validate` is false the precondition is not checked and the
/// result is flagged unverified.
pub fn determinize_phi(
    a: &FuzzyAutomaton,
    phi: &FuzzyRelation,
    max_states: usize,
    validate: bool,
) -> Result<DetResult> {
    determinize_phi_as(a, phi, max_states, validate, DetMethod::Ri)
}

fn determinize_phi_as(
    a: &FuzzyAutomaton,
    phi: &FuzzyRelation,
    max_states: usize,
    validate: bool,
    method: DetMethod,
) -> Result<DetResult> {
    if validate {
        require_reflexive(phi, a.n)?;
        let budget = Budget {
            max_states,
            ..Budget::default()
        };
        if !check_weakly_right_invariant(a, phi, &budget)? {
            return Err(FzaError::PreconditionFailed(
                "relation is not weakly right invariant".into(),
            ));
        }
    }
    // φ_u ∘ δ_x ∘ φ computed as φ_u ∘ (δ_x∘φ)
    let pre: Vec<FuzzyRelation> = a
        .delta
        .iter()
        .map(|d| compose_rr(d, phi))
        .collect::<Result<_>>()?;
    let root = compose_sr(&a.sigma, phi)?;
    let label = if is_identity(phi) { "σ" } else { "φ" };
    let out = tree_determinize(
        a,
        root,
        |v, xi| compose_sr(v, &pre[xi]),
        |v| dot(v, &a.tau),
        label,
        false,
        max_states,
    )?;
    Ok(DetResult {
        states_created: out.cdfa.size(),
        closure_checks: out.closure_checks,
        cdfa: out.cdfa,
        budget_hit: false,
        verified: validate,
        method,
    })
}

/// The reverse construction over a reflexive weakly left invariant
/// relation `psi`: states are ψ^ε = ψ∘τ, ψ^{xu} = ψ∘δ_x∘ψ^u, with
/// terminal degrees σ∘ψ^u. The result recognizes the reverse language;
/// with `psi` the identity this is the reverse Nerode automaton.
pub fn determinize_psi(
    a: &FuzzyAutomaton,
    psi: &FuzzyRelation,
    max_states: usize,
    validate: bool,
) -> Result<DetResult> {
    determinize_psi_as(a, psi, max_states, validate, DetMethod::Li)
}

fn determinize_psi_as(
    a: &FuzzyAutomaton,
    psi: &FuzzyRelation,
    max_states: usize,
    validate: bool,
    method: DetMethod,
) -> Result<DetResult> {
    if validate {
        require_reflexive(psi, a.n)?;
        let budget = Budget {
            max_states,
            ..Budget::default()
        };
        if !check_weakly_left_invariant(a, psi, &budget)? {
            return Err(FzaError::PreconditionFailed(
                "relation is not weakly left invariant".into(),
            ));
        }
    }
    // ψ ∘ δ_x precomputed; ψ^{xu} = (ψ∘δ_x) ∘ ψ^u
    let pre: Vec<FuzzyRelation> = a
        .delta
        .iter()
        .map(|d| compose_rr(psi, d))
        .collect::<Result<_>>()?;
    let root = compose_rs(psi, &a.tau)?;
    let label = if is_identity(psi) { "τ" } else { "ψ" };
    let out = tree_determinize(
        a,
        root,
        |v, xi| compose_rs(&pre[xi], v),
        |v| dot(&a.sigma, v),
        label,
        true,
        max_states,
    )?;
    Ok(DetResult {
        states_created: out.cdfa.size(),
        closure_checks: out.closure_checks,
        cdfa: out.cdfa,
        budget_hit: false,
        verified: validate,
        method,
    })
}

/// Nerode automaton: determinization over the identity relation.
pub fn nerode(a: &FuzzyAutomaton, max_states: usize) -> Result<DetResult> {
    let id = FuzzyRelation::identity(a.kind, a.n);
    determinize_phi_as(a, &id, max_states, false, DetMethod::Nerode).map(verified)
}

/// Reverse Nerode automaton: the reverse construction over the identity.
pub fn reverse_nerode(a: &FuzzyAutomaton, max_states: usize) -> Result<DetResult> {
    let id = FuzzyRelation::identity(a.kind, a.n);
    determinize_psi_as(a, &id, max_states, false, DetMethod::ReverseNerode).map(verified)
}

fn verified(mut r: DetResult) -> DetResult {
    r.verified = true;
    r
}

fn require_reflexive(phi: &FuzzyRelation, n: usize) -> Result<()> {
    if phi.rows != n || phi.cols != n {
        return Err(FzaError::DimensionMismatch(format!(
            "{}x{} relation over {n} states",
            phi.rows, phi.cols
        )));
    }
    if !phi.is_reflexive()? {
        return Err(FzaError::PreconditionFailed("relation is not reflexive".into()));
    }
    Ok(())
}

fn is_identity(phi: &FuzzyRelation) -> bool {
    phi.is_square() && *phi == FuzzyRelation::identity(phi.kind, phi.rows)
}

/// Children automaton: build the transition tree of the `phi`
/// determinization, then merge tree vertices whose successor pointers and
/// terminal degree all coincide. Merging is well defined because equal
/// tuples have equal one-step behavior by construction.
pub fn children(a: &FuzzyAutomaton, phi: &FuzzyRelation, max_states: usize) -> Result<DetResult> {
    children_as(a, phi, max_states, false, DetMethod::ChildrenNerode)
}

fn children_as(
    a: &FuzzyAutomaton,
    phi: &FuzzyRelation,
    max_states: usize,
    validate: bool,
    method: DetMethod,
) -> Result<DetResult> {
    let base = determinize_phi_as(a, phi, max_states, validate, method)?;
    let c = &base.cdfa;
    let n = c.size();
    // group states by (successor pointers, terminal degree)
    let mut index: HashMap<(Vec<usize>, TruthValue), usize> = HashMap::new();
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for q in 0..n {
        let key = (c.next[q].clone(), c.states[q].term.clone());
        match index.get(&key) {
            Some(&cl) => class_of[q] = cl,
            None => {
                let cl = reps.len();
                index.insert(key, cl);
                class_of[q] = cl;
                reps.push(q);
            }
        }
    }
    // renumber classes in breadth-first order from the initial class
    let k = reps.len();
    let m = c.alphabet.len();
    let mut order = vec![usize::MAX; k];
    let mut bfs: Vec<usize> = vec![class_of[c.initial]];
    order[class_of[c.initial]] = 0;
    let mut head = 0;
    while head < bfs.len() {
        let cl = bfs[head];
        head += 1;
        for xi in 0..m {
            let succ = class_of[c.next[reps[cl]][xi]];
            if order[succ] == usize::MAX {
                order[succ] = bfs.len();
                bfs.push(succ);
            }
        }
    }
    let mut states = Vec::with_capacity(bfs.len());
    let mut next = Vec::with_capacity(bfs.len());
    for &cl in &bfs {
        let rep = reps[cl];
        let st = &c.states[rep];
        states.push(CdfaState {
            label: format!("{}ᶜ", st.label),
            term: st.term.clone(),
            witness: st.witness.clone(),
            provenance: st.provenance.clone(),
        });
        next.push(
            (0..m)
                .map(|xi| order[class_of[c.next[rep][xi]]])
                .collect::<Vec<_>>(),
        );
    }
    let cdfa = Cdfa {
        kind: c.kind,
        alphabet: c.alphabet.clone(),
        states,
        next,
        initial: 0,
    };
    Ok(DetResult {
        states_created: base.states_created,
        closure_checks: base.closure_checks,
        cdfa,
        budget_hit: false,
        verified: base.verified,
        method,
    })
}

/// First-stage relation choice for the double-reverse pipeline.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BrzozowskiStage {
    ReverseNerode,
    PsiLi,
    PsiWli,
}

/// Double-reverse determinization: stage one builds the reverse
/// construction over ψ (identity, greatest left invariant, or greatest
/// weakly left invariant); stage two builds the reverse Nerode automaton
/// of the stage-one result viewed as a fuzzy automaton with crisp
/// transitions. The output is the minimal CDFA equivalent to `a`.
pub fn brzozowski(
    a: &FuzzyAutomaton,
    first_stage: BrzozowskiStage,
    max_states: usize,
    budget: &Budget,
) -> Result<DetResult> {
    let (stage1, method) = match first_stage {
        BrzozowskiStage::ReverseNerode => {
            (reverse_nerode(a, max_states)?, DetMethod::Brzozowski)
        }
        BrzozowskiStage::PsiLi => {
            let psi = greatest_left_invariant(a, budget)?;
            (
                determinize_psi_as(a, &psi.relation, max_states, false, DetMethod::Li)
                    .map(verified)?,
                DetMethod::BrzozowskiLi,
            )
        }
        BrzozowskiStage::PsiWli => {
            let psi = greatest_weakly_left_invariant(a, budget)?;
            (
                determinize_psi_as(a, &psi.relation, max_states, false, DetMethod::Wli)
                    .map(verified)?,
                DetMethod::BrzozowskiWli,
            )
        }
    };
    let intermediate = stage1.cdfa.to_fuzzy_automaton()?;
    let stage2 = reverse_nerode(&intermediate, max_states)?;
    Ok(DetResult {
        states_created: stage1.states_created + stage2.states_created,
        closure_checks: stage1.closure_checks + stage2.closure_checks,
        cdfa: stage2.cdfa,
        budget_hit: false,
        verified: true,
        method,
    })
}

/// Partition-refinement minimization: the initial partition groups states
/// by exact terminal degree; refinement splits blocks by successor-block
/// signatures until stable. Used as the minimality oracle in tests.
pub fn minimize_cdfa(c: &Cdfa) -> Cdfa {
    let n = c.size();
    let m = c.alphabet.len();
    let mut block = vec![0usize; n];
    let mut blocks = {
        let mut index: HashMap<&TruthValue, usize> = HashMap::new();
        let mut count = 0;
        for q in 0..n {
            let b = *index.entry(&c.states[q].term).or_insert_with(|| {
                count += 1;
                count - 1
            });
            block[q] = b;
        }
        count
    };
    loop {
        let mut index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next_block = vec![0usize; n];
        let mut count = 0;
        for q in 0..n {
            let sig = (block[q], (0..m).map(|xi| block[c.next[q][xi]]).collect());
            let b = *index.entry(sig).or_insert_with(|| {
                count += 1;
                count - 1
            });
            next_block[q] = b;
        }
        if count == blocks {
            break;
        }
        blocks = count;
        block = next_block;
    }
    // representative per block, then breadth-first renumbering
    let mut rep = vec![usize::MAX; blocks];
    for q in 0..n {
        if rep[block[q]] == usize::MAX {
            rep[block[q]] = q;
        }
    }
    let mut order = vec![usize::MAX; blocks];
    let mut bfs = vec![block[c.initial]];
    order[block[c.initial]] = 0;
    let mut head = 0;
    while head < bfs.len() {
        let b = bfs[head];
        head += 1;
        for xi in 0..m {
            let succ = block[c.next[rep[b]][xi]];
            if order[succ] == usize::MAX {
                order[succ] = bfs.len();
                bfs.push(succ);
            }
        }
    }
    let mut states = Vec::with_capacity(bfs.len());
    let mut next = Vec::with_capacity(bfs.len());
    for &b in &bfs {
        let st = &c.states[rep[b]];
        states.push(st.clone());
        next.push(
            (0..m)
                .map(|xi| order[block[c.next[rep[b]][xi]]])
                .collect::<Vec<_>>(),
        );
    }
    Cdfa {
        kind: c.kind,
        alphabet: c.alphabet.clone(),
        states,
        next,
        initial: 0,
    }
}

/// Enumerates the distinct vectors σ_u over all words, breadth-first in
/// military order. Errors when the family exceeds the budget.
pub fn enumerate_sigma_family(a: &FuzzyAutomaton, max_family: usize) -> Result<Vec<FuzzySet>> {
    let mut seen: HashMap<FuzzySet, ()> = HashMap::new();
    let mut family = vec![a.sigma.clone()];
    seen.insert(a.sigma.clone(), ());
    let mut head = 0;
    while head < family.len() {
        let current = family[head].clone();
        head += 1;
        for d in &a.delta {
            let nxt = compose_sr(&current, d)?;
            if !seen.contains_key(&nxt) {
                if family.len() >= max_family {
                    return Err(FzaError::BudgetExceeded {
                        what: "max_family",
                        limit: max_family,
                    });
                }
                seen.insert(nxt.clone(), ());
                family.push(nxt);
            }
        }
    }
    Ok(family)
}

/// Enumerates the distinct vectors τ_u over all words (τ_{xu} = δ_x∘τ_u).
pub fn enumerate_tau_family(a: &FuzzyAutomaton, max_family: usize) -> Result<Vec<FuzzySet>> {
    let mut seen: HashMap<FuzzySet, ()> = HashMap::new();
    let mut family = vec![a.tau.clone()];
    seen.insert(a.tau.clone(), ());
    let mut head = 0;
    while head < family.len() {
        let current = family[head].clone();
        head += 1;
        for d in &a.delta {
            let nxt = compose_rs(d, &current)?;
            if !seen.contains_key(&nxt) {
                if family.len() >= max_family {
                    return Err(FzaError::BudgetExceeded {
                        what: "max_family",
                        limit: max_family,
                    });
                }
                seen.insert(nxt.clone(), ());
                family.push(nxt);
            }
        }
    }
    Ok(family)
}

/// Runs any of the named methods end to end, computing the required
/// quasi-order first where the method calls for one.
pub fn run_method(a: &FuzzyAutomaton, method: DetMethod, budget: &Budget) -> Result<DetResult> {
    let ms = budget.max_states;
    match method {
        DetMethod::Nerode => nerode(a, ms),
        DetMethod::Ri => {
            let phi = greatest_right_invariant(a, budget)?;
            determinize_phi_as(a, &phi.relation, ms, false, DetMethod::Ri).map(verified)
        }
        DetMethod::Wri => {
            let phi = greatest_weakly_right_invariant(a, budget)?;
            determinize_phi_as(a, &phi.relation, ms, false, DetMethod::Wri).map(verified)
        }
        DetMethod::ChildrenNerode => {
            let id = FuzzyRelation::identity(a.kind, a.n);
            children_as(a, &id, ms, false, DetMethod::ChildrenNerode).map(verified)
        }
        DetMethod::ChildrenRi => {
            let phi = greatest_right_invariant(a, budget)?;
            children_as(a, &phi.relation, ms, false, DetMethod::ChildrenRi).map(verified)
        }
        DetMethod::ChildrenWri => {
            let phi = greatest_weakly_right_invariant(a, budget)?;
            children_as(a, &phi.relation, ms, false, DetMethod::ChildrenWri).map(verified)
        }
        DetMethod::ReverseNerode => reverse_nerode(a, ms),
        DetMethod::Li => {
            let psi = greatest_left_invariant(a, budget)?;
            determinize_psi_as(a, &psi.relation, ms, false, DetMethod::Li).map(verified)
        }
        DetMethod::Wli => {
            let psi = greatest_weakly_left_invariant(a, budget)?;
            determinize_psi_as(a, &psi.relation, ms, false, DetMethod::Wli).map(verified)
        }
        DetMethod::Brzozowski => brzozowski(a, BrzozowskiStage::ReverseNerode, ms, budget),
        DetMethod::BrzozowskiLi => brzozowski(a, BrzozowskiStage::PsiLi, ms, budget),
        DetMethod::BrzozowskiWli => brzozowski(a, BrzozowskiStage::PsiWli, ms, budget),
    }
}
