//! Deterministic finite automata with translucent letters.
//!
//! A machine stores a partial transition map; a letter without a transition
//! from a state is translucent there, and the machine jumps over such
//! letters to consume the leftmost readable one. This crate provides
//!
//! * exact execution semantics and a brute-force language oracle ([`sim`]),
//! * the constant/linear jump-complexity classifier with verifiable pump
//!   witnesses ([`jumpcx`]),
//! * a regularity decider for binary alphabets with evidence in both
//!   directions ([`regular`]),
//! * an equivalence decider for constant-jump machines via an owed-letter
//!   amortizing construction ([`amortize`]),
//! * the shared automaton model and graph utilities ([`model`], [`graph`],
//!   [`classical`]), and random instance generation ([`random`]).

pub mod amortize;
pub mod classical;
pub mod graph;
pub mod jumpcx;
pub mod model;
pub mod random;
pub mod regular;
pub mod sim;

#[cfg(test)]
pub(crate) mod testutil;

pub use amortize::{decide_equivalence, EquivalenceVerdict, Side};
pub use jumpcx::{classify, ComplexityVerdict, LinearWitness, Trigger};
pub use model::{validate, Alphabet, DfaWtl, Letter, NfaWtl, RawAutomaton, StateId, Word};
pub use regular::{decide_regular, JumpingCycle, NonRegularWitness, RegularityVerdict};
pub use sim::{enumerate_language, jc_profile, jc_word, run, Outcome, Trace};
