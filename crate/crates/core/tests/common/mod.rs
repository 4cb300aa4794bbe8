//! Fixtures and helpers shared by the integration test suites.
#![allow(dead_code)]

use wtl_core::model::{Alphabet, DfaWtl, Word};

pub fn balanced() -> DfaWtl {
    DfaWtl::with_auto_names(Alphabet::ab(), 2, 0, &[0], &[(0, 0, 1), (1, 1, 0)]).unwrap()
}

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

pub fn astar() -> DfaWtl {
    DfaWtl::with_auto_names(Alphabet::ab(), 1, 0, &[0], &[(0, 0, 0)]).unwrap()
}

pub fn twoword() -> DfaWtl {
    DfaWtl::with_auto_names(Alphabet::ab(), 3, 0, &[2], &[(0, 1, 1), (1, 0, 2)]).unwrap()
}

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

pub fn corpus() -> Vec<DfaWtl> {
    vec![
        balanced(),
        regular_linear(),
        astar(),
        twoword(),
        complete1(),
        dfa_abba(),
    ]
}

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

/// All words over `alphabet_size` letters with length ≤ maxlen,
/// length-lexicographic.
pub fn words_up_to(alphabet_size: usize, maxlen: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 0..=maxlen {
        if len > 0 && alphabet_size == 0 {
            break;
        }
        let mut w = vec![0usize; len];
        loop {
            out.push(w.clone());
            let mut pos = len;
            while pos > 0 {
                pos -= 1;
                w[pos] += 1;
                if w[pos] < alphabet_size {
                    break;
                }
                w[pos] = 0;
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
    out
}
