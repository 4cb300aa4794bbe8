//! The jump-complexity classifier: every deterministic machine with
//! translucent letters has either constant-bounded or linear jump
//! complexity, and the two cases are separated by two graph-checkable
//! triggers. A `Linear` verdict always carries a machine-checkable pump
//! witness.
//!
//! Both trigger searches expect a trimmed machine; [`classify`] trims
//! internally, so its verdict and witness refer to the trimmed machine.

use crate::graph::{self, Digraph};
use crate::model::{DfaWtl, Letter, StateId, Word};
use crate::sim;

/// Structural evidence that the jump complexity is linear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trigger {
    /// State `state` cannot read `jumped`, but reading `consumed` leads to
    /// `via`, which reads `jumped` into `back`, and `back` reaches `state`
    /// again (possibly by the empty path). Pumping the loop forces one jump
    /// per iteration.
    ReadBack {
        state: StateId,
        jumped: Letter,
        consumed: Letter,
        via: StateId,
        back: StateId,
    },
    /// A cycle of states that are all deficient on `letter`, plus an escape
    /// path through deficient states ending in an arc to a state that reads
    /// `letter`. A single pending occurrence of `letter` is then jumped over
    /// once per consumed cycle letter.
    DeficientCycle {
        letter: Letter,
        /// Cycle states `p0, …, p{k-1}`; the arc `cycle_labels[i]` goes from
        /// `cycle_states[i]` to `cycle_states[(i+1) % k]`.
        cycle_states: Vec<StateId>,
        cycle_labels: Vec<Letter>,
        /// Arcs from the cycle base to the reading state; all sources are
        /// deficient on `letter`, the last target is not.
        escape: Vec<(Letter, StateId)>,
    },
}

impl Trigger {
    /// The state that finally reads the trigger letter (cycle triggers only).
    pub fn reader(&self) -> Option<StateId> {
        match self {
            Trigger::ReadBack { .. } => None,
            Trigger::DeficientCycle { escape, .. } => escape.last().map(|&(_, p)| p),
        }
    }
}

/// A pump family `prefix · pumpⁱ · suffix`, accepted with at least
/// `i · jumps_per_iteration` jumps for every `i ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearWitness {
    pub prefix: Word,
    pub pump: Word,
    pub suffix: Word,
    pub jumps_per_iteration: usize,
}

impl LinearWitness {
    pub fn family_word(&self, iterations: usize) -> Word {
        let mut w = self.prefix.clone();
        for _ in 0..iterations {
            w.extend_from_slice(&self.pump);
        }
        w.extend_from_slice(&self.suffix);
        w
    }
}

/// The two-valued verdict. No intermediate growth class is representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexityVerdict {
    Constant,
    Linear {
        trigger: Trigger,
        witness: LinearWitness,
    },
}

impl ComplexityVerdict {
    pub fn is_linear(&self) -> bool {
        matches!(self, ComplexityVerdict::Linear { .. })
    }
}

/// Outcome of checking a witness up to a depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub checked: usize,
    pub failure: Option<WitnessFailure>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFailure {
    pub iteration: usize,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    NotAccepted,
    TooFewJumps { required: usize, observed: usize },
}

/// Looks for the first read-back trigger in (state, jumped letter, consumed
/// letter) declared order. Expects a trimmed machine.
pub fn read_back_trigger(m: &DfaWtl) -> Option<Trigger> {
    let reach = graph::transitive_closure(&m.digraph());
    for state in 0..m.state_count() {
        for jumped in m.alphabet().letters() {
            if m.target(state, jumped).is_some() {
                continue;
            }
            for consumed in m.alphabet().letters() {
                let Some(via) = m.target(state, consumed) else {
                    continue;
                };
                let Some(back) = m.target(via, jumped) else {
                    continue;
                };
                if reach.reaches(back, state) {
                    return Some(Trigger::ReadBack {
                        state,
                        jumped,
                        consumed,
                        via,
                        back,
                    });
                }
            }
        }
    }
    None
}

/// Looks for the first deficient-cycle trigger in (letter, cycle base)
/// declared order. Expects a trimmed machine.
pub fn deficient_cycle_trigger(m: &DfaWtl) -> Option<Trigger> {
    let n = m.state_count();
    let g = m.digraph();
    for letter in m.alphabet().letters() {
        let deficient: Vec<bool> = (0..n).map(|q| m.is_deficient_on(q, letter)).collect();
        let mut restriction = Digraph::new(n);
        for (u, label, v) in g.arcs() {
            if deficient[u] && deficient[v] {
                restriction.add_arc(u, label, v);
            }
        }
        let closure = graph::transitive_closure(&restriction);
        let on_cycle: Vec<bool> = (0..n)
            .map(|q| {
                deficient[q]
                    && restriction
                        .out(q)
                        .iter()
                        .any(|&(_, v)| closure.reaches(v, q))
            })
            .collect();
        let owns_escape: Vec<bool> = (0..n)
            .map(|s| deficient[s] && escape_arc(m, s, letter).is_some())
            .collect();
        for (base, &cycles) in on_cycle.iter().enumerate() {
            if !cycles {
                continue;
            }
            // The escape path may have length zero: the base itself may own
            // the escape arc.
            let Some(path) = graph::lex_shortest_path_to_any(&restriction, base, &owns_escape)
            else {
                continue;
            };
            let last = path.last().map_or(base, |&(_, v)| v);
            let (esc_letter, reader) =
                escape_arc(m, last, letter).expect("owner found by the search above");
            let mut escape: Vec<(Letter, StateId)> = path;
            escape.push((esc_letter, reader));
            let cycle = graph::lex_shortest_cycle_through(&restriction, base)
                .expect("base is on a cycle of the restriction");
            let mut cycle_states = vec![base];
            let mut cycle_labels = Vec::with_capacity(cycle.len());
            for &(l, v) in &cycle {
                cycle_labels.push(l);
                cycle_states.push(v);
            }
            cycle_states.pop();
            return Some(Trigger::DeficientCycle {
                letter,
                cycle_states,
                cycle_labels,
                escape,
            });
        }
    }
    None
}

/// First arc (in letter order) from `s` to a state that can read `letter`.
fn escape_arc(m: &DfaWtl, s: StateId, letter: Letter) -> Option<(Letter, StateId)> {
    for l in m.alphabet().letters() {
        if let Some(p) = m.target(s, l) {
            if m.target(p, letter).is_some() {
                return Some((l, p));
            }
        }
    }
    None
}

/// Decides whether the jump complexity of `m` is constant-bounded or linear.
/// Trimming is applied internally; a `Linear` verdict carries the trigger
/// and a synthesized pump witness, both in terms of the trimmed machine.
pub fn classify(m: &DfaWtl) -> ComplexityVerdict {
    let trimmed = m.trim();
    let trigger = read_back_trigger(&trimmed).or_else(|| deficient_cycle_trigger(&trimmed));
    match trigger {
        None => ComplexityVerdict::Constant,
        Some(trigger) => {
            let witness = synthesize_linear_witness(&trimmed, &trigger);
            ComplexityVerdict::Linear { trigger, witness }
        }
    }
}

/// Builds the pump family for a trigger found on a trimmed machine. All
/// connecting paths are shortest digraph paths with lexicographic
/// tie-breaks, so the output is canonical.
pub fn synthesize_linear_witness(m: &DfaWtl, trigger: &Trigger) -> LinearWitness {
    let g = m.digraph();
    let finals = m.final_flags();
    let labels =
        |path: Vec<(Letter, StateId)>| -> Word { path.into_iter().map(|(l, _)| l).collect() };
    match trigger {
        Trigger::ReadBack {
            state,
            jumped,
            consumed,
            back,
            ..
        } => {
            let prefix = labels(
                graph::lex_shortest_path(&g, m.initial(), *state)
                    .expect("trimmed machines reach every state"),
            );
            let mut pump = vec![*jumped, *consumed];
            pump.extend(labels(
                graph::lex_shortest_path(&g, *back, *state)
                    .expect("trigger requires a return path"),
            ));
            let suffix = labels(
                graph::lex_shortest_path_to_any(&g, *state, finals)
                    .expect("trimmed machines reach a final state"),
            );
            LinearWitness {
                prefix,
                pump,
                suffix,
                jumps_per_iteration: 1,
            }
        }
        Trigger::DeficientCycle {
            letter,
            cycle_states,
            cycle_labels,
            escape,
        } => {
            let base = cycle_states[0];
            let mut prefix = labels(
                graph::lex_shortest_path(&g, m.initial(), base)
                    .expect("trimmed machines reach every state"),
            );
            prefix.push(*letter);
            let reader = escape.last().expect("escape ends in the reading arc").1;
            let after_read = m
                .target(reader, *letter)
                .expect("the reader has a transition on the trigger letter");
            let mut suffix: Word = escape.iter().map(|&(l, _)| l).collect();
            suffix.extend(labels(
                graph::lex_shortest_path_to_any(&g, after_read, finals)
                    .expect("trimmed machines reach a final state"),
            ));
            LinearWitness {
                prefix,
                pump: cycle_labels.clone(),
                suffix,
                jumps_per_iteration: cycle_labels.len(),
            }
        }
    }
}

/// Checks `prefix · pumpⁱ · suffix` for `i` in `1..=depth`: the word must be
/// accepted with at least `i · jumps_per_iteration` jumps. Reports the first
/// failing iteration.
pub fn verify_witness(m: &DfaWtl, witness: &LinearWitness, depth: usize) -> WitnessReport {
    for i in 1..=depth {
        let word = witness.family_word(i);
        let jumps = sim::jc_word(m, &word).expect("witness words stay inside the alphabet");
        let required = i * witness.jumps_per_iteration;
        let failure = match jumps {
            None => Some(FailureReason::NotAccepted),
            Some(observed) if observed < required => {
                Some(FailureReason::TooFewJumps { required, observed })
            }
            Some(_) => None,
        };
        if let Some(reason) = failure {
            return WitnessReport {
                checked: i,
                failure: Some(WitnessFailure {
                    iteration: i,
                    reason,
                }),
            };
        }
    }
    WitnessReport {
        checked: depth,
        failure: None,
    }
}
