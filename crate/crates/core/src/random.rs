//! Random machines and digraphs for differential testing and benchmarks.
//!
//! Generated machines use partial transition maps, so deficient states (and
//! with them jumps) appear naturally. The helpers take any [`Rng`], which
//! keeps test suites reproducible under a seeded generator.

use rand::Rng;

use crate::graph::Digraph;
use crate::model::{Alphabet, DfaWtl};

const SYMBOLS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// A random partial deterministic machine with exactly `n_states` states.
/// `density` is the probability that a transition is defined;
/// `final_density` the probability that a state is final.
pub fn random_dfawtl_with_size<R: Rng + ?Sized>(
    rng: &mut R,
    n_states: usize,
    alphabet_size: usize,
    density: f64,
    final_density: f64,
) -> DfaWtl {
    assert!(alphabet_size <= SYMBOLS.len());
    assert!(n_states >= 1);
    let alphabet = Alphabet::new(SYMBOLS[..alphabet_size].to_vec()).unwrap();
    let mut transitions = Vec::new();
    for q in 0..n_states {
        for a in 0..alphabet_size {
            if rng.gen_bool(density) {
                transitions.push((q, a, rng.gen_range(0..n_states)));
            }
        }
    }
    let finals: Vec<usize> = (0..n_states)
        .filter(|_| rng.gen_bool(final_density))
        .collect();
    DfaWtl::with_auto_names(alphabet, n_states, 0, &finals, &transitions)
        .expect("generated indices are in range")
}

/// A random partial deterministic machine with up to `max_states` states.
pub fn random_dfawtl<R: Rng + ?Sized>(
    rng: &mut R,
    max_states: usize,
    alphabet_size: usize,
    density: f64,
    final_density: f64,
) -> DfaWtl {
    let n = rng.gen_range(1..=max_states.max(1));
    random_dfawtl_with_size(rng, n, alphabet_size, density, final_density)
}

/// A random machine with every state useful: the raw machine is trimmed.
pub fn random_trimmed_dfawtl<R: Rng + ?Sized>(
    rng: &mut R,
    max_states: usize,
    alphabet_size: usize,
    density: f64,
    final_density: f64,
) -> DfaWtl {
    random_dfawtl(rng, max_states, alphabet_size, density, final_density).trim()
}

/// A random digraph with up to `max_vertices` vertices; each ordered pair
/// carries an arc with probability `arc_density`.
pub fn random_digraph<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    arc_density: f64,
) -> Digraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let mut g = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if rng.gen_bool(arc_density) {
                g.add_arc(u, None, v);
            }
        }
    }
    g
}
