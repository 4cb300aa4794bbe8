//! Equivalence of constant-jump machines, decided through a classical
//! detour: each machine is turned into an NFA whose states carry a bounded
//! queue of owed letters, the NFAs are determinized, and the two DFAs are
//! compared by product search.
//!
//! A machine with constant jump complexity accepts every word with fewer
//! than `|Q|` jumps, so at most `|Q| - 1` owed letters are ever pending on
//! an accepting computation. The owed-queue construction guesses each jump
//! with an ε-arc, remembers the skipped-letter guard of the jumping state,
//! and amortizes the owed letter when the scan reaches its occurrence.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::classical::{determinize, Dfa, Nfa};
use crate::jumpcx;
use crate::model::{DfaWtl, Letter, LetterSet, StateId, Word};
use crate::sim;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AmortizeError {
    #[error("the {side} machine does not have constant jump complexity")]
    NotConstant { side: Side },
    #[error("the machines have different alphabets")]
    AlphabetMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// A letter consumed ahead of the scan by a guessed jump. `guard` is the
/// translucent set of the state that jumped; every letter read while this
/// entry is pending must have been skippable then, so it must lie in the
/// guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OwedEntry {
    pub letter: Letter,
    pub guard: LetterSet,
}

/// An NFA state of the amortizing construction: a base state plus pending
/// owed letters in jump-creation order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmortState {
    pub base: StateId,
    pub pending: Vec<OwedEntry>,
}

/// The equivalence answer. A `NotEqual` witness is accepted by exactly one
/// of the two machines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Equal,
    NotEqual { witness: Word },
    NotApplicable { side: Side },
}

/// The reachable owed-queue states of the construction, before
/// ε-elimination. Exposed for inspection; [`build_amortizing_nfa`] is the
/// operational entry point.
pub fn reachable_amort_states(m: &DfaWtl, bound: usize) -> Vec<AmortState> {
    let trimmed = m.trim();
    explore(&trimmed, bound).0
}

/// Arcs of the construction: `(from, letter or ε, to)` over interned ids.
type AmortArc = (usize, Option<Letter>, usize);

fn explore(m: &DfaWtl, bound: usize) -> (Vec<AmortState>, Vec<AmortArc>) {
    let mut ids: HashMap<AmortState, usize> = HashMap::new();
    let mut states: Vec<AmortState> = Vec::new();
    let mut arcs: Vec<AmortArc> = Vec::new();
    let start = AmortState {
        base: m.initial(),
        pending: Vec::new(),
    };
    ids.insert(start.clone(), 0);
    states.push(start);
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        let state = states[id].clone();
        let mut push = |next: AmortState,
                        label: Option<Letter>,
                        ids: &mut HashMap<AmortState, usize>,
                        states: &mut Vec<AmortState>,
                        queue: &mut VecDeque<usize>| {
            let to = match ids.get(&next) {
                Some(&existing) => existing,
                None => {
                    let fresh = states.len();
                    ids.insert(next.clone(), fresh);
                    states.push(next);
                    queue.push_back(fresh);
                    fresh
                }
            };
            arcs.push((id, label, to));
        };
        // Jump guesses: any defined transition of a deficient base may be
        // taken early, recording the owed letter and the skip guard.
        let guard = m.deficiency(state.base);
        if !guard.is_empty() && state.pending.len() < bound {
            for letter in m.alphabet().letters() {
                if let Some(p) = m.target(state.base, letter) {
                    let mut pending = state.pending.clone();
                    pending.push(OwedEntry { letter, guard });
                    push(
                        AmortState { base: p, pending },
                        None,
                        &mut ids,
                        &mut states,
                        &mut queue,
                    );
                }
            }
        }
        for letter in m.alphabet().letters() {
            let owed = state.pending.iter().position(|e| e.letter == letter);
            match owed {
                // Forced amortization: the scan reached an occurrence that
                // was already consumed by the earliest matching jump; every
                // earlier jump must have skipped over it.
                Some(index) => {
                    if state.pending[..index]
                        .iter()
                        .all(|e| e.guard.contains(letter))
                    {
                        let mut pending = state.pending.clone();
                        pending.remove(index);
                        push(
                            AmortState {
                                base: state.base,
                                pending,
                            },
                            Some(letter),
                            &mut ids,
                            &mut states,
                            &mut queue,
                        );
                    }
                }
                // Sequential read, allowed only when every pending jump
                // skipped over this occurrence.
                None => {
                    if let Some(p) = m.target(state.base, letter) {
                        if state.pending.iter().all(|e| e.guard.contains(letter)) {
                            push(
                                AmortState {
                                    base: p,
                                    pending: state.pending.clone(),
                                },
                                Some(letter),
                                &mut ids,
                                &mut states,
                                &mut queue,
                            );
                        }
                    }
                }
            }
        }
    }
    (states, arcs)
}

fn render_amort_state(m: &DfaWtl, s: &AmortState) -> String {
    if s.pending.is_empty() {
        return m.state_name(s.base).to_string();
    }
    let entries: Vec<String> = s
        .pending
        .iter()
        .map(|e| {
            let guard: Vec<&str> = e.guard.iter().map(|l| m.alphabet().symbol(l)).collect();
            format!("{}{{{}}}", m.alphabet().symbol(e.letter), guard.join(""))
        })
        .collect();
    format!("{}[{}]", m.state_name(s.base), entries.join(","))
}

/// Builds the owed-queue NFA of a constant-jump machine with pending bound
/// `bound`, ε-eliminated and pruned. Accepts the same language as the
/// trimmed machine.
pub fn build_amortizing_nfa_with_bound(
    m: &DfaWtl,
    bound: usize,
    side: Side,
) -> Result<Nfa, AmortizeError> {
    if jumpcx::classify(m).is_linear() {
        return Err(AmortizeError::NotConstant { side });
    }
    let trimmed = m.trim();
    let (states, arcs) = explore(&trimmed, bound);
    let names: Vec<String> = states
        .iter()
        .map(|s| render_amort_state(&trimmed, s))
        .collect();
    let finals: Vec<bool> = states
        .iter()
        .map(|s| trimmed.is_final(s.base) && s.pending.is_empty())
        .collect();
    let mut nfa = Nfa::new(trimmed.alphabet().clone(), names, 0, finals);
    for (from, label, to) in arcs {
        match label {
            Some(l) => nfa.add_move(from, l, to),
            None => nfa.add_epsilon(from, to),
        }
    }
    Ok(nfa.eliminate_epsilon().prune_unreachable())
}

/// [`build_amortizing_nfa_with_bound`] with the default bound `|Q| - 1` of
/// the trimmed machine: an accepting run of a constant-jump machine never
/// has `|Q|` or more jumps pending.
pub fn build_amortizing_nfa(m: &DfaWtl) -> Result<Nfa, AmortizeError> {
    let bound = m.trim().state_count().saturating_sub(1);
    build_amortizing_nfa_with_bound(m, bound, Side::Left)
}

/// Classical powerset determinization over reachable subsets.
pub fn subset_construction(nfa: &Nfa) -> Dfa {
    determinize(nfa)
}

/// Breadth-first product search. Returns `None` when the automata agree and
/// otherwise the shortest distinguishing word, lexicographically least in
/// declared letter order among shortest ones.
pub fn dfa_equivalence(d1: &Dfa, d2: &Dfa) -> Result<Option<Word>, AmortizeError> {
    if d1.alphabet() != d2.alphabet() {
        return Err(AmortizeError::AlphabetMismatch);
    }
    let mut seen = vec![vec![false; d2.state_count()]; d1.state_count()];
    // One node per discovered pair, with the arc that reached it.
    type SearchNode = ((StateId, StateId), Option<(usize, Letter)>);
    let mut trace: Vec<SearchNode> = Vec::new();
    let start = (d1.initial(), d2.initial());
    seen[start.0][start.1] = true;
    trace.push((start, None));
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let ((q1, q2), _) = trace[idx];
        if d1.is_final(q1) != d2.is_final(q2) {
            let mut word = Vec::new();
            let mut cursor = idx;
            while let (_, Some((parent, letter))) = trace[cursor] {
                word.push(letter);
                cursor = parent;
            }
            word.reverse();
            return Ok(Some(word));
        }
        for a in d1.alphabet().letters() {
            let next = (d1.next(q1, a), d2.next(q2, a));
            if !seen[next.0][next.1] {
                seen[next.0][next.1] = true;
                trace.push((next, Some((idx, a))));
                queue.push_back(trace.len() - 1);
            }
        }
    }
    Ok(None)
}

/// Decides language equivalence of two machines with the same alphabet.
/// Machines of linear jump complexity are out of scope and reported as
/// `NotApplicable`; the left input is checked first. A `NotEqual` witness is
/// re-checked against both simulators before it is returned.
pub fn decide_equivalence(
    left: &DfaWtl,
    right: &DfaWtl,
) -> Result<EquivalenceVerdict, AmortizeError> {
    if left.alphabet() != right.alphabet() {
        return Err(AmortizeError::AlphabetMismatch);
    }
    if jumpcx::classify(left).is_linear() {
        return Ok(EquivalenceVerdict::NotApplicable { side: Side::Left });
    }
    if jumpcx::classify(right).is_linear() {
        return Ok(EquivalenceVerdict::NotApplicable { side: Side::Right });
    }
    let left_trimmed = left.trim();
    let right_trimmed = right.trim();
    let nfa_left =
        build_amortizing_nfa_with_bound(left, left_trimmed.state_count() - 1, Side::Left)?;
    let nfa_right =
        build_amortizing_nfa_with_bound(right, right_trimmed.state_count() - 1, Side::Right)?;
    let dfa_left = subset_construction(&nfa_left);
    let dfa_right = subset_construction(&nfa_right);
    match dfa_equivalence(&dfa_left, &dfa_right)? {
        None => Ok(EquivalenceVerdict::Equal),
        Some(witness) => {
            let on_left = sim::jc_word(&left_trimmed, &witness)
                .expect("witness letters come from the shared alphabet")
                .is_some();
            let on_right = sim::jc_word(&right_trimmed, &witness)
                .expect("witness letters come from the shared alphabet")
                .is_some();
            assert!(
                on_left != on_right,
                "distinguishing word must separate the machines: {witness:?}"
            );
            Ok(EquivalenceVerdict::NotEqual { witness })
        }
    }
}
