//! Exact execution semantics for automata with translucent letters.
//!
//! A step consumes the leftmost remaining letter that has a defined
//! transition. When that letter is not the first one, the step is a jump:
//! the skipped prefix consists of letters that are translucent for the
//! current state and stays on the tape. A word is accepted when the input
//! is fully consumed and the machine halts in a final state.
//!
//! [`enumerate_language`] is the brute-force oracle used throughout testing;
//! it refuses bounds beyond an explicit limit rather than running forever.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::model::{DfaWtl, Letter, NfaWtl, StateId, Word};

/// Default ceiling for exhaustive enumeration and profiling.
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("letter index {0} is outside the alphabet")]
    LetterOutsideAlphabet(Letter),
    #[error("requested length {requested} exceeds the enumeration limit {limit}")]
    BoundTooLarge { requested: usize, limit: usize },
}

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Accepted,
    /// No remaining letter has a defined transition.
    RejectedStuck,
    /// Input exhausted in a non-final state.
    RejectedNonFinal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Sequential,
    Jump,
}

/// A machine state together with the unconsumed part of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub state: StateId,
    pub remaining: Word,
}

/// One consumption step. `consumed_index` is the position of the consumed
/// letter within the remaining word before the step; it is zero exactly for
/// sequential steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub from: StateId,
    pub to: StateId,
    pub kind: StepKind,
    pub letter: Letter,
    pub consumed_index: usize,
}

/// A full computation record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub input: Word,
    pub steps: Vec<TraceStep>,
    pub outcome: Outcome,
    pub jump_count: usize,
}

/// Result of a single step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepResult {
    Continue {
        next: Configuration,
        step: TraceStep,
    },
    Halt(Outcome),
}

/// Performs one step from `c`, or halts. Total on valid configurations.
pub fn step(m: &DfaWtl, c: &Configuration) -> StepResult {
    if c.remaining.is_empty() {
        return StepResult::Halt(if m.is_final(c.state) {
            Outcome::Accepted
        } else {
            Outcome::RejectedNonFinal
        });
    }
    let readable = c
        .remaining
        .iter()
        .position(|&a| m.target(c.state, a).is_some());
    match readable {
        None => StepResult::Halt(Outcome::RejectedStuck),
        Some(index) => {
            let letter = c.remaining[index];
            let to = m.target(c.state, letter).expect("position found above");
            let mut remaining = c.remaining.clone();
            remaining.remove(index);
            StepResult::Continue {
                next: Configuration {
                    state: to,
                    remaining,
                },
                step: TraceStep {
                    from: c.state,
                    to,
                    kind: if index == 0 {
                        StepKind::Sequential
                    } else {
                        StepKind::Jump
                    },
                    letter,
                    consumed_index: index,
                },
            }
        }
    }
}

/// Runs the machine on `w`. Deterministic machines yield a unique trace.
pub fn run(m: &DfaWtl, w: &[Letter]) -> Result<Trace, SimError> {
    for &a in w {
        if a >= m.alphabet().len() {
            return Err(SimError::LetterOutsideAlphabet(a));
        }
    }
    let mut config = Configuration {
        state: m.initial(),
        remaining: w.to_vec(),
    };
    let mut steps = Vec::with_capacity(w.len());
    let outcome = loop {
        match step(m, &config) {
            StepResult::Continue { next, step } => {
                steps.push(step);
                config = next;
            }
            StepResult::Halt(outcome) => break outcome,
        }
    };
    let jump_count = steps.iter().filter(|s| s.kind == StepKind::Jump).count();
    Ok(Trace {
        input: w.to_vec(),
        steps,
        outcome,
        jump_count,
    })
}

/// Jump count of the unique computation on `w`, or `None` when `w` is not
/// accepted.
pub fn jc_word(m: &DfaWtl, w: &[Letter]) -> Result<Option<usize>, SimError> {
    let trace = run(m, w)?;
    Ok(match trace.outcome {
        Outcome::Accepted => Some(trace.jump_count),
        _ => None,
    })
}

/// Minimum jump count over all accepting computations of a nondeterministic
/// machine, or `None` when `w` is not accepted.
///
/// Implemented as 0/1-weight shortest path over explicit configurations;
/// exponential in the worst case and intended for desk-scale oracles.
pub fn min_jump_count(n: &NfaWtl, w: &[Letter]) -> Result<Option<usize>, SimError> {
    for &a in w {
        if a >= n.alphabet().len() {
            return Err(SimError::LetterOutsideAlphabet(a));
        }
    }
    let start = (n.initial(), w.to_vec());
    let mut best: HashMap<(StateId, Word), usize> = HashMap::new();
    best.insert(start.clone(), 0);
    let mut queue: VecDeque<(StateId, Word)> = VecDeque::new();
    queue.push_back(start);
    while let Some(key) = queue.pop_front() {
        let cost = best[&key];
        let (state, remaining) = key;
        if remaining.is_empty() {
            if n.is_final(state) {
                // 0/1 BFS pops configurations in nondecreasing cost order.
                return Ok(Some(cost));
            }
            continue;
        }
        let readable = remaining
            .iter()
            .position(|&a| !n.targets(state, a).is_empty());
        let Some(index) = readable else { continue };
        let letter = remaining[index];
        let weight = usize::from(index > 0);
        let mut next_remaining = remaining;
        next_remaining.remove(index);
        for &p in n.targets(state, letter) {
            let next = (p, next_remaining.clone());
            let candidate = cost + weight;
            if best.get(&next).is_none_or(|&b| candidate < b) {
                best.insert(next.clone(), candidate);
                if weight == 0 {
                    queue.push_front(next);
                } else {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(None)
}

fn check_bound(maxlen: usize, limit: usize) -> Result<(), SimError> {
    if maxlen > limit {
        Err(SimError::BoundTooLarge {
            requested: maxlen,
            limit,
        })
    } else {
        Ok(())
    }
}

/// All accepted words of length ≤ `maxlen` with their jump counts, in
/// length-lexicographic order. Refuses `maxlen` beyond
/// [`DEFAULT_ENUMERATION_BOUND`]; use [`enumerate_language_with_limit`] to
/// override explicitly.
pub fn enumerate_language(m: &DfaWtl, maxlen: usize) -> Result<Vec<(Word, usize)>, SimError> {
    enumerate_language_with_limit(m, maxlen, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_language_with_limit(
    m: &DfaWtl,
    maxlen: usize,
    limit: usize,
) -> Result<Vec<(Word, usize)>, SimError> {
    check_bound(maxlen, limit)?;
    let k = m.alphabet().len();
    let mut accepted = Vec::new();
    for len in 0..=maxlen {
        if len > 0 && k == 0 {
            break;
        }
        let mut word = vec![0usize; len];
        loop {
            let trace = run(m, &word)?;
            if trace.outcome == Outcome::Accepted {
                accepted.push((word.clone(), trace.jump_count));
            }
            // Odometer increment in declared letter order.
            let mut pos = len;
            while pos > 0 {
                pos -= 1;
                word[pos] += 1;
                if word[pos] < k {
                    break;
                }
                word[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if len == 0 || pos == usize::MAX {
                break;
            }
        }
    }
    Ok(accepted)
}

/// Per-length maximum jump count among accepted words, `None` where no word
/// of that length is accepted. Index `n` of the result holds the value for
/// length `n`.
pub fn jc_profile(m: &DfaWtl, maxlen: usize) -> Result<Vec<Option<usize>>, SimError> {
    jc_profile_with_limit(m, maxlen, DEFAULT_ENUMERATION_BOUND)
}

pub fn jc_profile_with_limit(
    m: &DfaWtl,
    maxlen: usize,
    limit: usize,
) -> Result<Vec<Option<usize>>, SimError> {
    let words = enumerate_language_with_limit(m, maxlen, limit)?;
    let mut profile = vec![None; maxlen + 1];
    for (word, jumps) in words {
        let slot = &mut profile[word.len()];
        *slot = Some(slot.map_or(jumps, |prev: usize| prev.max(jumps)));
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Alphabet;
    use crate::testutil::{astar, balanced, twoword, word};

    #[test]
    fn sequential_step_on_balanced() {
        let m = balanced();
        let c = Configuration {
            state: 0,
            remaining: word("ab"),
        };
        match step(&m, &c) {
            StepResult::Continue { next, step } => {
                assert_eq!(next.state, 1);
                assert_eq!(next.remaining, word("b"));
                assert_eq!(step.kind, StepKind::Sequential);
                assert_eq!(step.letter, 0);
                assert_eq!(step.consumed_index, 0);
            }
            other => panic!("unexpected halt: {other:?}"),
        }
    }

    #[test]
    fn jump_step_on_balanced() {
        let m = balanced();
        let c = Configuration {
            state: 0,
            remaining: word("ba"),
        };
        match step(&m, &c) {
            StepResult::Continue { next, step } => {
                assert_eq!(next.state, 1);
                assert_eq!(next.remaining, word("b"));
                assert_eq!(step.kind, StepKind::Jump);
                assert_eq!(step.letter, 0);
                assert_eq!(step.consumed_index, 1);
            }
            other => panic!("unexpected halt: {other:?}"),
        }
    }

    #[test]
    fn stuck_step_on_balanced() {
        let m = balanced();
        let c = Configuration {
            state: 0,
            remaining: word("bb"),
        };
        assert_eq!(step(&m, &c), StepResult::Halt(Outcome::RejectedStuck));
    }

    #[test]
    fn run_examples_on_balanced() {
        let m = balanced();
        let t = run(&m, &word("abab")).unwrap();
        assert_eq!(t.outcome, Outcome::Accepted);
        assert_eq!(t.jump_count, 0);

        let t = run(&m, &word("ba")).unwrap();
        assert_eq!(t.outcome, Outcome::Accepted);
        assert_eq!(t.jump_count, 1);

        let t = run(&m, &word("aab")).unwrap();
        assert_ne!(t.outcome, Outcome::Accepted);
    }

    #[test]
    fn accepted_traces_consume_everything() {
        let m = balanced();
        let t = run(&m, &word("bbaa")).unwrap();
        assert_eq!(t.outcome, Outcome::Accepted);
        assert_eq!(t.steps.len(), t.input.len());
        assert!(m.is_final(t.steps.last().unwrap().to));
    }

    #[test]
    fn jc_word_examples() {
        let m = balanced();
        assert_eq!(jc_word(&m, &word("bbaa")).unwrap(), Some(2));
        assert_eq!(jc_word(&m, &word("ab")).unwrap(), Some(0));
        assert_eq!(jc_word(&m, &word("a")).unwrap(), None);
    }

    #[test]
    fn jc_of_b_blocks_then_a_blocks_is_n() {
        let m = balanced();
        for n in 0..=6 {
            let mut w = vec![1usize; n];
            w.extend(std::iter::repeat_n(0, n));
            assert_eq!(jc_word(&m, &w).unwrap(), Some(n));
        }
    }

    #[test]
    fn min_jump_equals_jc_for_deterministic_machines() {
        let m = balanced();
        let n = m.as_nfawtl();
        for w in [word(""), word("ab"), word("ba"), word("bbaa"), word("abba")] {
            assert_eq!(min_jump_count(&n, &w).unwrap(), jc_word(&m, &w).unwrap());
        }
    }

    #[test]
    fn min_jump_prefers_the_sequential_branch() {
        // δ(q0,a)={q1,q2}, δ(q1,a)={q3}, δ(q2,b)={q3}; q1 is b-deficient.
        let n = NfaWtl::from_parts(
            Alphabet::ab(),
            vec!["q0".into(), "q1".into(), "q2".into(), "q3".into()],
            0,
            &[3],
            &[(0, 0, 1), (0, 0, 2), (1, 0, 3), (2, 1, 3)],
        )
        .unwrap();
        assert_eq!(min_jump_count(&n, &word("ab")).unwrap(), Some(0));
        assert_eq!(min_jump_count(&n, &word("bb")).unwrap(), None);
    }

    #[test]
    fn enumerate_balanced_up_to_two() {
        let m = balanced();
        let words = enumerate_language(&m, 2).unwrap();
        assert_eq!(words, vec![(word(""), 0), (word("ab"), 0), (word("ba"), 1)]);
    }

    #[test]
    fn enumerate_astar_up_to_two() {
        let m = astar();
        let words = enumerate_language(&m, 2).unwrap();
        assert_eq!(words, vec![(word(""), 0), (word("a"), 0), (word("aa"), 0)]);
    }

    #[test]
    fn enumerate_length_zero() {
        let m = balanced();
        assert_eq!(enumerate_language(&m, 0).unwrap(), vec![(word(""), 0)]);
        let t = twoword();
        assert!(enumerate_language(&t, 0).unwrap().is_empty());
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let m = balanced();
        assert!(matches!(
            enumerate_language(&m, 13),
            Err(SimError::BoundTooLarge { .. })
        ));
        assert!(enumerate_language_with_limit(&m, 13, 13).is_ok());
    }

    #[test]
    fn profile_of_balanced() {
        let m = balanced();
        let profile = jc_profile(&m, 4).unwrap();
        assert_eq!(profile[2], Some(1));
        assert_eq!(profile[4], Some(2));
        assert_eq!(profile[3], None);
    }

    #[test]
    fn profile_of_astar_is_zero() {
        let m = astar();
        let profile = jc_profile(&m, 6).unwrap();
        for entry in &profile {
            assert_eq!(*entry, Some(0));
        }
    }

    #[test]
    fn profile_of_twoword() {
        let m = twoword();
        let profile = jc_profile(&m, 5).unwrap();
        assert_eq!(profile[2], Some(1));
        for n in [0, 1, 3, 4, 5] {
            assert_eq!(profile[n], None);
        }
    }
}
