//! Greatest invariant fuzzy quasi-orders of an automaton — right/left
//! invariant via descending fixpoint iteration, weakly right/left
//! invariant via meets over the finite τ_u / σ_u families — together with
//! membership checks for arbitrary relations.

use std::fmt;

use crate::automaton::FuzzyAutomaton;
use crate::determinize::{enumerate_sigma_family, enumerate_tau_family};
use crate::fuzzrel::{
    compose_rr, compose_rs, compose_sr, residual_left_rel, residual_left_set, residual_right_rel,
    residual_right_set, FuzzyRelation,
};
use crate::{FzaError, Result};

/// Resource limits standing in for the descending-chain-condition
/// hypothesis: iteration cap for fixpoints, family cap for the weak
/// constructors, state cap passed through to embedded determinizations.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_iterations: usize,
    pub max_family: usize,
    pub max_states: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_iterations: 10_000,
            max_family: 100_000,
            max_states: 10_000,
        }
    }
}

/// Which invariance class a relation was checked against.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InvClass {
    Ri,
    Li,
    Wri,
    Wli,
}

impl fmt::Display for InvClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvClass::Ri => "ri",
            InvClass::Li => "li",
            InvClass::Wri => "wri",
            InvClass::Wli => "wli",
        })
    }
}

/// A computed quasi-order plus the verification evidence for it.
#[derive(Clone, Debug)]
pub struct QuasiOrderReport {
    pub relation: FuzzyRelation,
    pub reflexive: bool,
    pub transitive: bool,
    pub class_checked: InvClass,
    pub holds: bool,
    /// Fixpoint iterations used (1 for the weak constructors' single meet).
    pub iterations_used: usize,
    /// Number of distinct family members inspected (0 for fixpoint
    /// constructors).
    pub family_size: usize,
}

fn finish(
    a: &FuzzyAutomaton,
    relation: FuzzyRelation,
    class: InvClass,
    iterations_used: usize,
    family_size: usize,
    budget: &Budget,
) -> Result<QuasiOrderReport> {
    let reflexive = relation.is_reflexive()?;
    let transitive = relation.is_transitive()?;
    let holds = match class {
        InvClass::Ri => check_right_invariant(a, &relation)?,
        InvClass::Li => check_left_invariant(a, &relation)?,
        InvClass::Wri => check_weakly_right_invariant(a, &relation, budget)?,
        InvClass::Wli => check_weakly_left_invariant(a, &relation, budget)?,
    };
    Ok(QuasiOrderReport {
        relation,
        reflexive,
        transitive,
        class_checked: class,
        holds,
        iterations_used,
        family_size,
    })
}

/// Greatest right invariant fuzzy quasi-order: descending iteration from
/// φ_1 = τ/τ with φ_{k+1} = φ_k ∧ ⋀_x (δ_x∘φ_k)/(δ_x∘φ_k), stopping at
/// the first fixpoint.
pub fn greatest_right_invariant(a: &FuzzyAutomaton, budget: &Budget) -> Result<QuasiOrderReport> {
    let mut phi = residual_left_set(&a.tau, &a.tau)?;
    let mut iterations = 1usize;
    loop {
        if iterations >= budget.max_iterations {
            return Err(FzaError::BudgetExceeded {
                what: "max_iterations",
                limit: budget.max_iterations,
            });
        }
        let mut next = phi.clone();
        for d in &a.delta {
            let dphi = compose_rr(d, &phi)?;
            next = next.meet(&residual_left_rel(&dphi, &dphi)?)?;
        }
        iterations += 1;
        if next == phi {
            break;
        }
        debug_assert!(next.leq(&phi).unwrap());
        phi = next;
    }
    finish(a, phi, InvClass::Ri, iterations, 0, budget)
}

/// Greatest left invariant fuzzy quasi-order: descending iteration from
/// ψ_1 = σ\σ with ψ_{k+1} = ψ_k ∧ ⋀_x (ψ_k∘δ_x)\(ψ_k∘δ_x).
pub fn greatest_left_invariant(a: &FuzzyAutomaton, budget: &Budget) -> Result<QuasiOrderReport> {
    let mut psi = residual_right_set(&a.sigma, &a.sigma)?;
    let mut iterations = 1usize;
    loop {
        if iterations >= budget.max_iterations {
            return Err(FzaError::BudgetExceeded {
                what: "max_iterations",
                limit: budget.max_iterations,
            });
        }
        let mut next = psi.clone();
        for d in &a.delta {
            let psid = compose_rr(&psi, d)?;
            next = next.meet(&residual_right_rel(&psid, &psid)?)?;
        }
        iterations += 1;
        if next == psi {
            break;
        }
        debug_assert!(next.leq(&psi).unwrap());
        psi = next;
    }
    finish(a, psi, InvClass::Li, iterations, 0, budget)
}

/// Greatest weakly right invariant fuzzy quasi-order: the meet of τ_u/τ_u
/// over the (finite) family of all terminal vectors of words.
pub fn greatest_weakly_right_invariant(
    a: &FuzzyAutomaton,
    budget: &Budget,
) -> Result<QuasiOrderReport> {
    let family = enumerate_tau_family(a, budget.max_family)?;
    let mut phi = residual_left_set(&family[0], &family[0])?;
    for t in &family[1..] {
        phi = phi.meet(&residual_left_set(t, t)?)?;
    }
    let size = family.len();
    finish(a, phi, InvClass::Wri, 1, size, budget)
}

/// Greatest weakly left invariant fuzzy quasi-order: the meet of σ_u\σ_u
/// over the family of all initial vectors of words.
pub fn greatest_weakly_left_invariant(
    a: &FuzzyAutomaton,
    budget: &Budget,
) -> Result<QuasiOrderReport> {
    let family = enumerate_sigma_family(a, budget.max_family)?;
    let mut psi = residual_right_set(&family[0], &family[0])?;
    for s in &family[1..] {
        psi = psi.meet(&residual_right_set(s, s)?)?;
    }
    let size = family.len();
    finish(a, psi, InvClass::Wli, 1, size, budget)
}

fn require_dims(a: &FuzzyAutomaton, phi: &FuzzyRelation) -> Result<()> {
    if phi.rows != a.n || phi.cols != a.n {
        return Err(FzaError::DimensionMismatch(format!(
            "{}x{} relation over {} states",
            phi.rows, phi.cols, a.n
        )));
    }
    Ok(())
}

/// φ∘δ_x ≤ δ_x∘φ for every symbol, and φ∘τ ≤ τ.
pub fn check_right_invariant(a: &FuzzyAutomaton, phi: &FuzzyRelation) -> Result<bool> {
    require_dims(a, phi)?;
    for d in &a.delta {
        if !compose_rr(phi, d)?.leq(&compose_rr(d, phi)?)? {
            return Ok(false);
        }
    }
    compose_rs(phi, &a.tau)?.leq(&a.tau)
}

/// δ_x∘φ ≤ φ∘δ_x for every symbol, and σ∘φ ≤ σ.
pub fn check_left_invariant(a: &FuzzyAutomaton, phi: &FuzzyRelation) -> Result<bool> {
    require_dims(a, phi)?;
    for d in &a.delta {
        if !compose_rr(d, phi)?.leq(&compose_rr(phi, d)?)? {
            return Ok(false);
        }
    }
    compose_sr(&a.sigma, phi)?.leq(&a.sigma)
}

/// φ∘τ_u ≤ τ_u for every member of the τ_u family.
pub fn check_weakly_right_invariant(
    a: &FuzzyAutomaton,
    phi: &FuzzyRelation,
    budget: &Budget,
) -> Result<bool> {
    require_dims(a, phi)?;
    for t in enumerate_tau_family(a, budget.max_family)? {
        if !compose_rs(phi, &t)?.leq(&t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// σ_u∘φ ≤ σ_u for every member of the σ_u family.
pub fn check_weakly_left_invariant(
    a: &FuzzyAutomaton,
    phi: &FuzzyRelation,
    budget: &Budget,
) -> Result<bool> {
    require_dims(a, phi)?;
    for s in enumerate_sigma_family(a, budget.max_family)? {
        if !compose_sr(&s, phi)?.leq(&s)? {
            return Ok(false);
        }
    }
    Ok(true)
}
