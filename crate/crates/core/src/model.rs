//! Core data model: alphabets, automata with translucent letters, validation,
//! deficiency computation, and useless-state trimming.
//!
//! Transition maps are *partial*. A letter with no transition out of a state
//! is translucent there: the machine skips over its occurrences when it
//! jumps. No sink or dead state is ever materialized to complete the map.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{self, Digraph};

/// Index of a state inside an automaton.
pub type StateId = usize;

/// Index of a letter inside the declared alphabet.
pub type Letter = usize;

/// A word over an alphabet, stored as letter indices.
pub type Word = Vec<Letter>;

/// Token reserved for ε-arcs in textual automaton descriptions.
pub const EPSILON_TOKEN: &str = "epsilon";

/// Maximum supported alphabet size; letter sets are 32-bit masks.
pub const MAX_ALPHABET: usize = 32;

/// Errors reported while validating an automaton description.
///
/// Validation collects every violation it finds rather than stopping at the
/// first one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("duplicate letter '{0}' in alphabet")]
    DuplicateLetter(String),
    #[error("alphabet uses the reserved token '{0}'")]
    ReservedLetter(String),
    #[error("alphabet has {0} letters, at most {MAX_ALPHABET} are supported")]
    AlphabetTooLarge(usize),
    #[error("duplicate state '{0}'")]
    DuplicateState(String),
    #[error("initial state '{0}' is not declared")]
    MissingInitial(String),
    #[error("unknown state '{0}'")]
    UnknownState(String),
    #[error("unknown letter '{0}'")]
    UnknownLetter(String),
    #[error("nondeterministic transitions from '{state}' on '{letter}'")]
    Nondeterministic { state: String, letter: String },
    #[error("epsilon transition from '{state}' is not allowed in a deterministic automaton")]
    EpsilonTransition { state: String },
    #[error("state index {0} out of range")]
    StateOutOfRange(usize),
    #[error("letter index {0} out of range")]
    LetterOutOfRange(usize),
}

/// An ordered, duplicate-free set of letter symbols.
///
/// Letters are referred to by their index in declared order, so every
/// iteration over an alphabet is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, Vec<ValidationError>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let mut errors = Vec::new();
        let mut seen = HashMap::new();
        for s in &symbols {
            if s == EPSILON_TOKEN {
                errors.push(ValidationError::ReservedLetter(s.clone()));
            }
            if seen.insert(s.clone(), ()).is_some() {
                errors.push(ValidationError::DuplicateLetter(s.clone()));
            }
        }
        if symbols.len() > MAX_ALPHABET {
            errors.push(ValidationError::AlphabetTooLarge(symbols.len()));
        }
        if errors.is_empty() {
            Ok(Alphabet { symbols })
        } else {
            Err(errors)
        }
    }

    /// Convenience constructor for the binary alphabet `{a, b}`.
    pub fn ab() -> Self {
        Alphabet::new(["a", "b"]).unwrap()
    }

    /// Convenience constructor for `{a, b, c}`.
    pub fn abc() -> Self {
        Alphabet::new(["a", "b", "c"]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.symbols.len() == 2
    }

    /// Letters in declared order.
    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.symbols.len()
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, symbol: &str) -> Option<Letter> {
        self.symbols.iter().position(|s| s == symbol)
    }

    /// Parses a word. Whitespace-separated tokens are accepted always; a
    /// bare string is split into one letter per character when every symbol
    /// is a single character.
    pub fn parse_word(&self, text: &str) -> Result<Word, ValidationError> {
        if text.is_empty() {
            return Ok(Vec::new());
        }
        if text.contains(char::is_whitespace) {
            text.split_whitespace()
                .map(|tok| {
                    self.index_of(tok)
                        .ok_or_else(|| ValidationError::UnknownLetter(tok.to_string()))
                })
                .collect()
        } else if self.symbols.iter().all(|s| s.chars().count() == 1) {
            text.chars()
                .map(|c| {
                    self.index_of(&c.to_string())
                        .ok_or_else(|| ValidationError::UnknownLetter(c.to_string()))
                })
                .collect()
        } else {
            self.index_of(text)
                .map(|l| vec![l])
                .ok_or_else(|| ValidationError::UnknownLetter(text.to_string()))
        }
    }

    /// Renders a word with the declared symbols; the empty word prints as ε.
    pub fn render_word(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "ε".to_string();
        }
        if self.symbols.iter().all(|s| s.chars().count() == 1) {
            word.iter().map(|&l| self.symbol(l)).collect()
        } else {
            word.iter()
                .map(|&l| self.symbol(l))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

/// A small set of letters, stored as a bit mask over alphabet indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LetterSet(u32);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    pub fn insert(&mut self, letter: Letter) {
        debug_assert!(letter < MAX_ALPHABET);
        self.0 |= 1 << letter;
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter < MAX_ALPHABET && self.0 & (1 << letter) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    /// Letters in ascending (declared) order.
    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..MAX_ALPHABET).filter(|&l| self.contains(l))
    }
}

impl FromIterator<Letter> for LetterSet {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        let mut set = LetterSet::EMPTY;
        for l in iter {
            set.insert(l);
        }
        set
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// A raw, unvalidated automaton description: the in-memory form of the
/// textual format. State and letter references are plain tokens.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RawAutomaton {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: String,
    pub finals: Vec<String>,
    pub transitions: Vec<RawTransition>,
}

/// One `source letter target` line of a description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTransition {
    pub source: String,
    pub letter: String,
    pub target: String,
}

impl RawAutomaton {
    /// Sorts transitions by declared state order, then declared letter order
    /// (ε last), then target, and drops exact duplicates. Serialization and
    /// round-trip equality both rely on this order.
    pub fn canonicalize(&mut self) {
        let state_index: HashMap<&str, usize> = self
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let letter_index: HashMap<&str, usize> = self
            .alphabet
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let state_key = |name: &str| {
            (
                state_index.get(name).copied().unwrap_or(usize::MAX),
                name.to_string(),
            )
        };
        let letter_key = |name: &str| {
            let idx = if name == EPSILON_TOKEN {
                self.alphabet.len()
            } else {
                letter_index.get(name).copied().unwrap_or(usize::MAX)
            };
            (idx, name.to_string())
        };
        self.transitions.sort_by_key(|t| {
            (
                state_key(&t.source),
                letter_key(&t.letter),
                state_key(&t.target),
            )
        });
        self.transitions.dedup();
    }
}

/// A nondeterministic finite automaton with translucent letters.
///
/// `targets(q, a)` empty means the transition is undefined, i.e. `a` is
/// translucent in state `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NfaWtl {
    alphabet: Alphabet,
    state_names: Vec<String>,
    initial: StateId,
    finals: Vec<bool>,
    delta: Vec<Vec<Vec<StateId>>>,
}

impl NfaWtl {
    pub fn from_parts(
        alphabet: Alphabet,
        state_names: Vec<String>,
        initial: StateId,
        finals: &[StateId],
        transitions: &[(StateId, Letter, StateId)],
    ) -> Result<Self, Vec<ValidationError>> {
        let n = state_names.len();
        let k = alphabet.len();
        let mut errors = Vec::new();
        if initial >= n {
            errors.push(ValidationError::StateOutOfRange(initial));
        }
        let mut fin = vec![false; n];
        for &f in finals {
            if f >= n {
                errors.push(ValidationError::StateOutOfRange(f));
            } else {
                fin[f] = true;
            }
        }
        let mut delta = vec![vec![Vec::new(); k]; n];
        for &(q, a, p) in transitions {
            if q >= n || p >= n {
                errors.push(ValidationError::StateOutOfRange(q.max(p)));
                continue;
            }
            if a >= k {
                errors.push(ValidationError::LetterOutOfRange(a));
                continue;
            }
            if !delta[q][a].contains(&p) {
                delta[q][a].push(p);
            }
        }
        for row in &mut delta {
            for cell in row {
                cell.sort_unstable();
            }
        }
        if errors.is_empty() {
            Ok(NfaWtl {
                alphabet,
                state_names,
                initial,
                finals: fin,
                delta,
            })
        } else {
            Err(errors)
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.state_names[q]
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn targets(&self, q: StateId, a: Letter) -> &[StateId] {
        &self.delta[q][a]
    }
}

/// A deterministic finite automaton with translucent letters: at most one
/// target per `(state, letter)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfaWtl {
    alphabet: Alphabet,
    state_names: Vec<String>,
    initial: StateId,
    finals: Vec<bool>,
    delta: Vec<Vec<Option<StateId>>>,
}

impl DfaWtl {
    pub fn from_parts(
        alphabet: Alphabet,
        state_names: Vec<String>,
        initial: StateId,
        finals: &[StateId],
        transitions: &[(StateId, Letter, StateId)],
    ) -> Result<Self, Vec<ValidationError>> {
        let n = state_names.len();
        let k = alphabet.len();
        let mut errors = Vec::new();
        if initial >= n {
            errors.push(ValidationError::StateOutOfRange(initial));
        }
        let mut fin = vec![false; n];
        for &f in finals {
            if f >= n {
                errors.push(ValidationError::StateOutOfRange(f));
            } else {
                fin[f] = true;
            }
        }
        let mut delta: Vec<Vec<Option<StateId>>> = vec![vec![None; k]; n];
        for &(q, a, p) in transitions {
            if q >= n || p >= n {
                errors.push(ValidationError::StateOutOfRange(q.max(p)));
                continue;
            }
            if a >= k {
                errors.push(ValidationError::LetterOutOfRange(a));
                continue;
            }
            match delta[q][a] {
                None => delta[q][a] = Some(p),
                Some(existing) if existing == p => {}
                Some(_) => errors.push(ValidationError::Nondeterministic {
                    state: state_names[q].clone(),
                    letter: alphabet.symbol(a).to_string(),
                }),
            }
        }
        if errors.is_empty() {
            Ok(DfaWtl {
                alphabet,
                state_names,
                initial,
                finals: fin,
                delta,
            })
        } else {
            Err(errors)
        }
    }

    /// Builds a machine with auto-generated state names `q0..q{n-1}`.
    pub fn with_auto_names(
        alphabet: Alphabet,
        n_states: usize,
        initial: StateId,
        finals: &[StateId],
        transitions: &[(StateId, Letter, StateId)],
    ) -> Result<Self, Vec<ValidationError>> {
        let names = (0..n_states).map(|i| format!("q{i}")).collect();
        DfaWtl::from_parts(alphabet, names, initial, finals, transitions)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.state_names[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn final_states(&self) -> Vec<StateId> {
        (0..self.state_count())
            .filter(|&q| self.finals[q])
            .collect()
    }

    pub fn final_flags(&self) -> &[bool] {
        &self.finals
    }

    pub fn target(&self, q: StateId, a: Letter) -> Option<StateId> {
        self.delta[q][a]
    }

    /// All defined transitions in (state, letter) declared order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(a, t)| t.map(|p| (q, a, p)))
        })
    }

    /// The translucent letters of `q`: exactly the letters with no
    /// transition out of `q`.
    pub fn deficiency(&self, q: StateId) -> LetterSet {
        self.alphabet
            .letters()
            .filter(|&a| self.delta[q][a].is_none())
            .collect()
    }

    /// The letters with a defined transition out of `q`.
    pub fn defined_letters(&self, q: StateId) -> LetterSet {
        self.alphabet
            .letters()
            .filter(|&a| self.delta[q][a].is_some())
            .collect()
    }

    pub fn is_deficient_on(&self, q: StateId, a: Letter) -> bool {
        self.delta[q][a].is_none()
    }

    /// The labeled digraph underlying the transition map.
    pub fn digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.state_count());
        for (q, a, p) in self.transitions() {
            g.add_arc(q, Some(a), p);
        }
        g
    }

    /// Removes every state that is not reachable from the initial state or
    /// cannot reach a final state along digraph arcs. If the initial state
    /// itself is useless the result is a canonical one-state automaton
    /// accepting nothing.
    pub fn trim(&self) -> DfaWtl {
        let g = self.digraph();
        let fwd = graph::forward_reachable(&g, self.initial);
        let bwd = graph::backward_reachable(&g, &self.finals);
        let keep: Vec<bool> = fwd.iter().zip(&bwd).map(|(&f, &b)| f && b).collect();
        if !keep[self.initial] {
            return DfaWtl {
                alphabet: self.alphabet.clone(),
                state_names: vec![self.state_names[self.initial].clone()],
                initial: 0,
                finals: vec![false],
                delta: vec![vec![None; self.alphabet.len()]],
            };
        }
        let mut remap = vec![usize::MAX; self.state_count()];
        let mut names = Vec::new();
        for q in 0..self.state_count() {
            if keep[q] {
                remap[q] = names.len();
                names.push(self.state_names[q].clone());
            }
        }
        let k = self.alphabet.len();
        let mut delta = vec![vec![None; k]; names.len()];
        for (q, a, p) in self.transitions() {
            if keep[q] && keep[p] {
                delta[remap[q]][a] = Some(remap[p]);
            }
        }
        let finals = (0..self.state_count())
            .filter(|&q| keep[q])
            .map(|q| self.finals[q])
            .collect();
        DfaWtl {
            alphabet: self.alphabet.clone(),
            state_names: names,
            initial: remap[self.initial],
            finals,
            delta,
        }
    }

    /// Views this machine as a (degenerate) nondeterministic one.
    pub fn as_nfawtl(&self) -> NfaWtl {
        let transitions: Vec<(StateId, Letter, StateId)> = self.transitions().collect();
        NfaWtl::from_parts(
            self.alphabet.clone(),
            self.state_names.clone(),
            self.initial,
            &self.final_states(),
            &transitions,
        )
        .expect("a valid deterministic machine is a valid nondeterministic one")
    }
}

/// Checks a raw description against the deterministic model and resolves all
/// names. Every violation found is reported, not just the first.
pub fn validate(raw: &RawAutomaton) -> Result<DfaWtl, Vec<ValidationError>> {
    let mut errors = Vec::new();
    let alphabet = match Alphabet::new(raw.alphabet.clone()) {
        Ok(a) => a,
        Err(errs) => {
            errors.extend(errs);
            Alphabet {
                symbols: Vec::new(),
            }
        }
    };
    let mut state_index: HashMap<&str, StateId> = HashMap::new();
    for (i, name) in raw.states.iter().enumerate() {
        if state_index.insert(name.as_str(), i).is_some() {
            errors.push(ValidationError::DuplicateState(name.clone()));
        }
    }
    let initial = match state_index.get(raw.initial.as_str()) {
        Some(&q) => q,
        None => {
            errors.push(ValidationError::MissingInitial(raw.initial.clone()));
            0
        }
    };
    let mut finals = Vec::new();
    for name in &raw.finals {
        match state_index.get(name.as_str()) {
            Some(&q) => finals.push(q),
            None => errors.push(ValidationError::UnknownState(name.clone())),
        }
    }
    let mut transitions = Vec::new();
    for t in &raw.transitions {
        let source = state_index.get(t.source.as_str()).copied();
        if source.is_none() {
            errors.push(ValidationError::UnknownState(t.source.clone()));
        }
        let target = state_index.get(t.target.as_str()).copied();
        if target.is_none() {
            errors.push(ValidationError::UnknownState(t.target.clone()));
        }
        if t.letter == EPSILON_TOKEN {
            errors.push(ValidationError::EpsilonTransition {
                state: t.source.clone(),
            });
            continue;
        }
        let letter = alphabet.index_of(&t.letter);
        if letter.is_none() {
            errors.push(ValidationError::UnknownLetter(t.letter.clone()));
        }
        if let (Some(q), Some(a), Some(p)) = (source, letter, target) {
            transitions.push((q, a, p));
        }
    }
    // Determinism is checked on the resolved triples so that all name errors
    // are reported alongside it.
    let mut seen: HashMap<(StateId, Letter), StateId> = HashMap::new();
    for &(q, a, p) in &transitions {
        match seen.insert((q, a), p) {
            Some(prev) if prev != p => errors.push(ValidationError::Nondeterministic {
                state: raw.states[q].clone(),
                letter: alphabet.symbol(a).to_string(),
            }),
            _ => {}
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    DfaWtl::from_parts(alphabet, raw.states.clone(), initial, &finals, &transitions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{balanced, complete1, regular_linear};

    fn balanced_raw() -> RawAutomaton {
        RawAutomaton {
            alphabet: vec!["a".into(), "b".into()],
            states: vec!["q0".into(), "q1".into()],
            initial: "q0".into(),
            finals: vec!["q0".into()],
            transitions: vec![
                RawTransition {
                    source: "q0".into(),
                    letter: "a".into(),
                    target: "q1".into(),
                },
                RawTransition {
                    source: "q1".into(),
                    letter: "b".into(),
                    target: "q0".into(),
                },
            ],
        }
    }

    #[test]
    fn validate_accepts_the_balanced_machine() {
        let m = validate(&balanced_raw()).unwrap();
        assert_eq!(m, balanced());
    }

    #[test]
    fn validate_rejects_nondeterminism() {
        let mut raw = balanced_raw();
        raw.transitions.push(RawTransition {
            source: "q0".into(),
            letter: "a".into(),
            target: "q0".into(),
        });
        let errs = validate(&raw).unwrap_err();
        assert!(errs.iter().any(|e| matches!(
            e,
            ValidationError::Nondeterministic { state, letter } if state == "q0" && letter == "a"
        )));
    }

    #[test]
    fn validate_rejects_undeclared_final_state() {
        let mut raw = balanced_raw();
        raw.finals.push("q9".into());
        let errs = validate(&raw).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, ValidationError::UnknownState(s) if s == "q9")));
    }

    #[test]
    fn validate_reports_missing_initial() {
        let mut raw = balanced_raw();
        raw.initial = "nowhere".into();
        let errs = validate(&raw).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, ValidationError::MissingInitial(s) if s == "nowhere")));
    }

    #[test]
    fn deficiency_of_balanced_initial_state() {
        let m = balanced();
        let b = m.alphabet().index_of("b").unwrap();
        assert_eq!(m.deficiency(0), LetterSet::from_iter([b]));
    }

    #[test]
    fn deficiency_of_complete_state_is_empty() {
        let m = complete1();
        assert!(m.deficiency(0).is_empty());
    }

    #[test]
    fn deficiency_of_sink_like_state_is_whole_alphabet() {
        let m = regular_linear();
        assert_eq!(m.deficiency(2), LetterSet::from_iter([0, 1, 2]));
    }

    #[test]
    fn deficiency_partitions_the_alphabet() {
        let m = regular_linear();
        for q in 0..m.state_count() {
            let deficient = m.deficiency(q);
            let defined = m.defined_letters(q);
            assert_eq!(deficient.len() + defined.len(), m.alphabet().len());
            for a in m.alphabet().letters() {
                assert!(deficient.contains(a) != defined.contains(a));
            }
        }
    }

    #[test]
    fn trim_keeps_useful_machines_intact() {
        let m = balanced();
        assert_eq!(m.trim(), m);
    }

    #[test]
    fn trim_drops_isolated_state() {
        let ab = Alphabet::ab();
        let m = DfaWtl::with_auto_names(ab, 3, 0, &[0], &[(0, 0, 1), (1, 1, 0)]).unwrap();
        let t = m.trim();
        assert_eq!(t.state_count(), 2);
        assert_eq!(t, balanced());
    }

    #[test]
    fn trim_of_empty_language_is_one_state() {
        let ab = Alphabet::ab();
        // No final state is reachable.
        let m = DfaWtl::with_auto_names(ab, 2, 0, &[], &[(0, 0, 1)]).unwrap();
        let t = m.trim();
        assert_eq!(t.state_count(), 1);
        assert!(t.final_states().is_empty());
        assert!(t.transitions().next().is_none());
    }

    #[test]
    fn trim_is_idempotent() {
        let ab = Alphabet::ab();
        let m =
            DfaWtl::with_auto_names(ab, 4, 0, &[1], &[(0, 0, 1), (1, 0, 2), (3, 1, 3)]).unwrap();
        let once = m.trim();
        assert_eq!(once.trim(), once);
    }

    #[test]
    fn canonicalize_orders_and_dedupes() {
        let mut raw = balanced_raw();
        raw.transitions.reverse();
        raw.transitions.push(raw.transitions[0].clone());
        raw.canonicalize();
        let mut expected = balanced_raw();
        expected.canonicalize();
        assert_eq!(raw, expected);
    }

    #[test]
    fn parse_and_render_words() {
        let ab = Alphabet::ab();
        assert_eq!(ab.parse_word("ab").unwrap(), vec![0, 1]);
        assert_eq!(ab.parse_word("a b").unwrap(), vec![0, 1]);
        assert_eq!(ab.parse_word("").unwrap(), Vec::<Letter>::new());
        assert!(ab.parse_word("ax").is_err());
        assert_eq!(ab.render_word(&[1, 0]), "ba");
        assert_eq!(ab.render_word(&[]), "ε");
    }
}
