//! Regularity of the accepted language, decidable for binary alphabets: the
//! language is non-regular exactly when the trimmed machine has a reachable
//! jumping cycle, i.e. a cycle carrying both letters in which every source
//! of an `x`-arc is deficient on the other letter.
//!
//! Detection runs the bounded-step path dynamic program on a restricted
//! transition graph. A negative answer is certified by a counter ε-NFA that
//! amortizes pending jumps with two bounded counters; a positive answer by a
//! tandem pump family.

use thiserror::Error;

use crate::classical::Nfa;
use crate::graph::{self, Digraph};
use crate::model::{DfaWtl, Letter, StateId, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularError {
    #[error("this analysis is defined for binary alphabets only (got {0} letters)")]
    AlphabetNotBinary(usize),
    #[error("the machine has a jumping cycle on '{letter}', its language is not regular")]
    JumpingCycleExists { letter: String },
}

/// A cycle witnessing non-regularity: `states[i] --labels[i]--> states[(i+1) % len]`,
/// with at least one arc on `letter`, at least one on the other letter, and
/// every `letter`-arc source deficient on the other letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingCycle {
    pub letter: Letter,
    pub states: Vec<StateId>,
    pub labels: Vec<Letter>,
}

impl JumpingCycle {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of arcs labeled with the jumping letter.
    pub fn jump_arc_count(&self) -> usize {
        self.labels.iter().filter(|&&l| l == self.letter).count()
    }
}

/// A tandem pump family: `prefix · first_blockⁱ · second_blockⁱ · suffix` is
/// accepted for every `i ≥ 0`, which no regular language allows for these
/// block shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonRegularWitness {
    pub prefix: Word,
    pub first_block: Word,
    pub second_block: Word,
    pub suffix: Word,
}

impl NonRegularWitness {
    pub fn family_word(&self, iterations: usize) -> Word {
        let mut w = self.prefix.clone();
        for _ in 0..iterations {
            w.extend_from_slice(&self.first_block);
        }
        for _ in 0..iterations {
            w.extend_from_slice(&self.second_block);
        }
        w.extend_from_slice(&self.suffix);
        w
    }
}

/// The regularity answer, with verifiable evidence either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularityVerdict {
    Regular {
        counter_nfa: Nfa,
    },
    NonRegular {
        cycle: JumpingCycle,
        witness: NonRegularWitness,
    },
}

impl RegularityVerdict {
    pub fn is_regular(&self) -> bool {
        matches!(self, RegularityVerdict::Regular { .. })
    }
}

fn require_binary(m: &DfaWtl) -> Result<(Letter, Letter), RegularError> {
    if m.alphabet().is_binary() {
        Ok((0, 1))
    } else {
        Err(RegularError::AlphabetNotBinary(m.alphabet().len()))
    }
}

/// The transition graph with every arc on the other letter kept and arcs on
/// `x` kept only when their source cannot read the other letter. Only such
/// `x`-arcs can lie on a jumping cycle. Expects a trimmed machine.
pub fn restrict_graph(m: &DfaWtl, x: Letter) -> Result<Digraph, RegularError> {
    require_binary(m)?;
    let y = 1 - x;
    let mut g = Digraph::new(m.state_count());
    for (q, a, p) in m.transitions() {
        if a == y || m.is_deficient_on(q, y) {
            g.add_arc(q, Some(a), p);
        }
    }
    Ok(g)
}

/// Bounded-step path matrix over a labeled digraph: `entry(i, p, q, c)`
/// holds exactly when some path of length at most `i` from `p` to `q`
/// contains at least one `c`-arc.
#[derive(Debug, Clone)]
pub struct DpMatrix {
    steps: usize,
    n: usize,
    letters: usize,
    bits: Vec<bool>,
}

impl DpMatrix {
    /// Fills the matrix layer by layer up to `steps`. A layer extends the
    /// previous one by a single arc: either a fresh `c`-arc, a `c`-marked
    /// path prolonged by any arc, or any nonempty path closed with a
    /// `c`-arc.
    pub fn build(g: &Digraph, letters: usize, steps: usize) -> DpMatrix {
        let n = g.vertex_count();
        let mut dp = DpMatrix {
            steps,
            n,
            letters,
            bits: vec![false; (steps + 1) * letters * n * n],
        };
        for i in 1..=steps {
            for c in 0..letters {
                for p in 0..n {
                    // Carry layer i-1 forward.
                    for q in 0..n {
                        if dp.get(i - 1, p, q, c) {
                            dp.set(i, p, q, c);
                        }
                    }
                    // Fresh c-arc out of p.
                    if i >= 1 {
                        for &(label, q) in g.out(p) {
                            if label == Some(c) {
                                dp.set(i, p, q, c);
                            }
                        }
                    }
                    for r in 0..n {
                        let marked = dp.get(i - 1, p, r, c);
                        let any_mark = marked || (0..letters).any(|c2| dp.get(i - 1, p, r, c2));
                        if !any_mark {
                            continue;
                        }
                        for &(label, q) in g.out(r) {
                            if marked || label == Some(c) {
                                dp.set(i, p, q, c);
                            }
                        }
                    }
                }
            }
        }
        dp
    }

    fn index(&self, i: usize, p: usize, q: usize, c: usize) -> usize {
        ((i * self.letters + c) * self.n + p) * self.n + q
    }

    fn set(&mut self, i: usize, p: usize, q: usize, c: usize) {
        let idx = self.index(i, p, q, c);
        self.bits[idx] = true;
    }

    pub fn entry(&self, i: usize, p: usize, q: usize, c: usize) -> bool {
        self.get(i, p, q, c)
    }

    fn get(&self, i: usize, p: usize, q: usize, c: usize) -> bool {
        self.bits[self.index(i, p, q, c)]
    }

    pub fn steps(&self) -> usize {
        self.steps
    }
}

/// Looks for a jumping cycle on `x` in the trimmed machine `m`. Runs the
/// path DP up to `|Q|` steps on the restricted graph and closes a circuit
/// from the first state pair (in declared order) with an `x`-marked walk out
/// and a `y`-marked walk back.
pub fn detect_jumping_cycle(m: &DfaWtl, x: Letter) -> Result<Option<JumpingCycle>, RegularError> {
    let (_, _) = require_binary(m)?;
    let y = 1 - x;
    let g = restrict_graph(m, x)?;
    let n = m.state_count();
    let dp = DpMatrix::build(&g, 2, n);
    for p in 0..n {
        for r in 0..n {
            if dp.entry(n, p, r, x) && dp.entry(n, r, p, y) {
                return Ok(Some(reconstruct_cycle(&g, p, x)));
            }
        }
    }
    Ok(None)
}

/// In the restricted graph every vertex has at most one outgoing arc (a
/// state with a `y`-arc keeps only it, a `y`-deficient state has at most an
/// `x`-arc), so the cycle through `p` is unique: follow the arcs.
fn reconstruct_cycle(g: &Digraph, start: usize, x: Letter) -> JumpingCycle {
    let mut states = vec![start];
    let mut labels = Vec::new();
    let mut cur = start;
    loop {
        debug_assert!(g.out(cur).len() <= 1, "restricted graphs are functional");
        let &(label, next) = g
            .out(cur)
            .first()
            .expect("a state on a detected cycle has an outgoing arc");
        labels.push(label.expect("automaton arcs are labeled"));
        if next == start {
            break;
        }
        states.push(next);
        cur = next;
    }
    JumpingCycle {
        letter: x,
        states,
        labels,
    }
}

/// Builds the tandem pump family of a detected cycle: from the cycle base,
/// the block of the other letter is read along the cycle while every
/// occurrence of the jumping letter is consumed by a jump, so
/// `u · yⁱ⁽ⁿ⁻ˡ⁾ · xⁱˡ · v` is accepted for every `i`. Expects the trimmed
/// machine the cycle was found in.
pub fn synthesize_nonregular_witness(m: &DfaWtl, cycle: &JumpingCycle) -> NonRegularWitness {
    let g = m.digraph();
    let base = cycle.states[0];
    let prefix: Word = graph::lex_shortest_path(&g, m.initial(), base)
        .expect("trimmed machines reach every state")
        .into_iter()
        .map(|(l, _)| l)
        .collect();
    let suffix: Word = graph::lex_shortest_path_to_any(&g, base, m.final_flags())
        .expect("trimmed machines reach a final state")
        .into_iter()
        .map(|(l, _)| l)
        .collect();
    let x = cycle.letter;
    let y = 1 - x;
    let jump_arcs = cycle.jump_arc_count();
    NonRegularWitness {
        prefix,
        first_block: vec![y; cycle.len() - jump_arcs],
        second_block: vec![x; jump_arcs],
        suffix,
    }
}

/// Decides regularity of a binary-alphabet machine. Trims internally; the
/// verdict evidence refers to the trimmed machine.
pub fn decide_regular(m: &DfaWtl) -> Result<RegularityVerdict, RegularError> {
    require_binary(m)?;
    let trimmed = m.trim();
    for x in trimmed.alphabet().letters() {
        if let Some(cycle) = detect_jumping_cycle(&trimmed, x)? {
            let witness = synthesize_nonregular_witness(&trimmed, &cycle);
            return Ok(RegularityVerdict::NonRegular { cycle, witness });
        }
    }
    Ok(RegularityVerdict::Regular {
        counter_nfa: build_counter_nfa_unchecked(&trimmed),
    })
}

/// Builds the counter ε-NFA certifying a regular language. Fails when a
/// jumping cycle exists, since the pending-jump counters are then unbounded.
/// Trims internally.
pub fn build_counter_nfa(m: &DfaWtl) -> Result<Nfa, RegularError> {
    require_binary(m)?;
    let trimmed = m.trim();
    for x in trimmed.alphabet().letters() {
        if detect_jumping_cycle(&trimmed, x)?.is_some() {
            return Err(RegularError::JumpingCycleExists {
                letter: trimmed.alphabet().symbol(x).to_string(),
            });
        }
    }
    Ok(build_counter_nfa_unchecked(&trimmed))
}

/// Counter states `(q, m, n)` track the base state plus the number of
/// pending jump-consumed occurrences of each letter. Jumps are recorded by
/// ε-arcs that increment a counter, amortized when the scan reaches the
/// consumed occurrence, and sequential reads require the matching counter to
/// be zero. Counters never exceed `|Q| - 1`: without jumping cycles larger
/// values are unreachable, so those arcs are simply omitted.
fn build_counter_nfa_unchecked(m: &DfaWtl) -> Nfa {
    use std::collections::HashMap;

    let bound = m.state_count() - 1;
    let a = 0usize;
    let b = 1usize;
    let mut ids: HashMap<(StateId, usize, usize), usize> = HashMap::new();
    let mut states: Vec<(StateId, usize, usize)> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    let start = (m.initial(), 0, 0);
    ids.insert(start, 0);
    states.push(start);
    queue.push_back(0usize);
    // (from, Some(letter)|None, to) collected while discovering states.
    let mut arcs: Vec<(usize, Option<Letter>, usize)> = Vec::new();
    let intern = |key: (StateId, usize, usize),
                  ids: &mut HashMap<(StateId, usize, usize), usize>,
                  states: &mut Vec<(StateId, usize, usize)>,
                  queue: &mut std::collections::VecDeque<usize>| {
        match ids.get(&key) {
            Some(&id) => id,
            None => {
                let id = states.len();
                ids.insert(key, id);
                states.push(key);
                queue.push_back(id);
                id
            }
        }
    };
    while let Some(id) = queue.pop_front() {
        let (q, ca, cb) = states[id];
        // Jump records: an a-deficient base reads b ahead of pending a's, and
        // symmetrically.
        if m.is_deficient_on(q, a) && cb < bound {
            if let Some(p) = m.target(q, b) {
                let to = intern((p, ca, cb + 1), &mut ids, &mut states, &mut queue);
                arcs.push((id, None, to));
            }
        }
        if m.is_deficient_on(q, b) && ca < bound {
            if let Some(p) = m.target(q, a) {
                let to = intern((p, ca + 1, cb), &mut ids, &mut states, &mut queue);
                arcs.push((id, None, to));
            }
        }
        // Amortizing reads.
        if ca >= 1 {
            let to = intern((q, ca - 1, cb), &mut ids, &mut states, &mut queue);
            arcs.push((id, Some(a), to));
        }
        if cb >= 1 {
            let to = intern((q, ca, cb - 1), &mut ids, &mut states, &mut queue);
            arcs.push((id, Some(b), to));
        }
        // Sequential reads, gated on the matching counter.
        if ca == 0 {
            if let Some(p) = m.target(q, a) {
                let to = intern((p, 0, cb), &mut ids, &mut states, &mut queue);
                arcs.push((id, Some(a), to));
            }
        }
        if cb == 0 {
            if let Some(p) = m.target(q, b) {
                let to = intern((p, ca, 0), &mut ids, &mut states, &mut queue);
                arcs.push((id, Some(b), to));
            }
        }
    }
    let names: Vec<String> = states
        .iter()
        .map(|&(q, ca, cb)| format!("({},{},{})", m.state_name(q), ca, cb))
        .collect();
    let finals: Vec<bool> = states
        .iter()
        .map(|&(q, ca, cb)| m.is_final(q) && ca == 0 && cb == 0)
        .collect();
    let mut nfa = Nfa::new(m.alphabet().clone(), names, 0, finals);
    for (from, label, to) in arcs {
        match label {
            Some(l) => nfa.add_move(from, l, to),
            None => nfa.add_epsilon(from, to),
        }
    }
    nfa
}
