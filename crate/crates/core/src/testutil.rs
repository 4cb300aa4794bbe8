//! Shared fixture machines for unit tests.

use crate::model::{Alphabet, DfaWtl, Word};

/// Accepts the words with equally many a's and b's: q0 -a-> q1 -b-> q0,
/// initial and final q0.
pub fn balanced() -> DfaWtl {
    DfaWtl::with_auto_names(Alphabet::ab(), 2, 0, &[0], &[(0, 0, 1), (1, 1, 0)]).unwrap()
}

/// Accepts the regular language ab*c + b*ac + b*ca while jumping linearly
/// often on a bⁿ c.
pub fn regular_linear() -> DfaWtl {
    DfaWtl::with_auto_names(
        Alphabet::abc(),
        3,
        0,
        &[2],
        &[(0, 1, 0), (0, 2, 1), (1, 0, 2)],
    )
    .unwrap()
}

/// Accepts a* over the alphabet {a, b}.
pub fn astar() -> DfaWtl {
    DfaWtl::with_auto_names(Alphabet::ab(), 1, 0, &[0], &[(0, 0, 0)]).unwrap()
}

/// Accepts exactly {ab, ba}.
pub fn twoword() -> DfaWtl {
    DfaWtl::with_auto_names(Alphabet::ab(), 3, 0, &[2], &[(0, 1, 1), (1, 0, 2)]).unwrap()
}

/// Complete initial state: q0 reads both letters, q1 reads only b.
pub fn complete1() -> DfaWtl {
    DfaWtl::with_auto_names(
        Alphabet::ab(),
        2,
        0,
        &[0],
        &[(0, 0, 1), (0, 1, 0), (1, 1, 0)],
    )
    .unwrap()
}

/// A four-state machine for {ab, ba} shaped like a classical DFA.
pub fn dfa_abba() -> DfaWtl {
    DfaWtl::from_parts(
        Alphabet::ab(),
        vec!["q0".into(), "qa".into(), "qb".into(), "qf".into()],
        0,
        &[3],
        &[(0, 0, 1), (0, 1, 2), (1, 1, 3), (2, 0, 3)],
    )
    .unwrap()
}

/// Word literal over {a, b, c}: one letter per character.
pub fn word(s: &str) -> Word {
    s.chars()
        .map(|c| match c {
            'a' => 0,
            'b' => 1,
            'c' => 2,
            other => panic!("unexpected letter {other}"),
        })
        .collect()
}
