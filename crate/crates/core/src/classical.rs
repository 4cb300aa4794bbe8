//! Classical (non-jumping) automata: ε-NFAs, NFAs and complete DFAs. These
//! carry the evidence produced by the regularity and equivalence deciders.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::model::{
    Alphabet, Letter, RawAutomaton, RawTransition, StateId, ValidationError, Word, EPSILON_TOKEN,
};

/// A classical nondeterministic automaton, possibly with ε-arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    state_names: Vec<String>,
    initial: StateId,
    finals: Vec<bool>,
    moves: Vec<Vec<Vec<StateId>>>,
    epsilon: Vec<Vec<StateId>>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        state_names: Vec<String>,
        initial: StateId,
        finals: Vec<bool>,
    ) -> Self {
        let n = state_names.len();
        let k = alphabet.len();
        assert!(initial < n);
        assert_eq!(finals.len(), n);
        Nfa {
            alphabet,
            state_names,
            initial,
            finals,
            moves: vec![vec![Vec::new(); k]; n],
            epsilon: vec![Vec::new(); n],
        }
    }

    pub fn add_move(&mut self, from: StateId, letter: Letter, to: StateId) {
        let cell = &mut self.moves[from][letter];
        if !cell.contains(&to) {
            cell.push(to);
            cell.sort_unstable();
        }
    }

    pub fn add_epsilon(&mut self, from: StateId, to: StateId) {
        let cell = &mut self.epsilon[from];
        if !cell.contains(&to) {
            cell.push(to);
            cell.sort_unstable();
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

    pub fn moves(&self, q: StateId, a: Letter) -> &[StateId] {
        &self.moves[q][a]
    }

    pub fn epsilon_moves(&self, q: StateId) -> &[StateId] {
        &self.epsilon[q]
    }

    pub fn has_epsilon(&self) -> bool {
        self.epsilon.iter().any(|cell| !cell.is_empty())
    }

    fn close(&self, set: &mut [bool]) {
        let mut stack: Vec<StateId> = (0..self.state_count()).filter(|&q| set[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &self.epsilon[q] {
                if !set[p] {
                    set[p] = true;
                    stack.push(p);
                }
            }
        }
    }

    /// Classical subset acceptance, ε-closure included.
    pub fn accepts(&self, w: &[Letter]) -> bool {
        let mut current = vec![false; self.state_count()];
        current[self.initial] = true;
        self.close(&mut current);
        for &a in w {
            if a >= self.alphabet.len() {
                return false;
            }
            let mut next = vec![false; self.state_count()];
            for (q, &active) in current.iter().enumerate() {
                if active {
                    for &p in &self.moves[q][a] {
                        next[p] = true;
                    }
                }
            }
            self.close(&mut next);
            current = next;
        }
        (0..self.state_count()).any(|q| current[q] && self.finals[q])
    }

    /// Produces an equivalent NFA without ε-arcs.
    pub fn eliminate_epsilon(&self) -> Nfa {
        let n = self.state_count();
        let mut closures: Vec<Vec<bool>> = Vec::with_capacity(n);
        for q in 0..n {
            let mut set = vec![false; n];
            set[q] = true;
            self.close(&mut set);
            closures.push(set);
        }
        let mut out = Nfa::new(
            self.alphabet.clone(),
            self.state_names.clone(),
            self.initial,
            closures
                .iter()
                .map(|closure| {
                    closure
                        .iter()
                        .enumerate()
                        .any(|(p, &in_c)| in_c && self.finals[p])
                })
                .collect(),
        );
        for (q, closure) in closures.iter().enumerate() {
            for a in self.alphabet.letters() {
                let mut reachable = vec![false; n];
                for (mid, &in_c) in closure.iter().enumerate() {
                    if in_c {
                        for &p in &self.moves[mid][a] {
                            reachable[p] = true;
                        }
                    }
                }
                self.close(&mut reachable);
                for (p, &hit) in reachable.iter().enumerate() {
                    if hit {
                        out.add_move(q, a, p);
                    }
                }
            }
        }
        out
    }

    /// Drops states unreachable from the initial one.
    pub fn prune_unreachable(&self) -> Nfa {
        let n = self.state_count();
        let mut seen = vec![false; n];
        seen[self.initial] = true;
        let mut stack = vec![self.initial];
        while let Some(q) = stack.pop() {
            for cell in &self.moves[q] {
                for &p in cell {
                    if !seen[p] {
                        seen[p] = true;
                        stack.push(p);
                    }
                }
            }
            for &p in &self.epsilon[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        let mut remap = vec![usize::MAX; n];
        let mut names = Vec::new();
        for q in 0..n {
            if seen[q] {
                remap[q] = names.len();
                names.push(self.state_names[q].clone());
            }
        }
        let finals = (0..n)
            .filter(|&q| seen[q])
            .map(|q| self.finals[q])
            .collect();
        let mut out = Nfa::new(self.alphabet.clone(), names, remap[self.initial], finals);
        for q in 0..n {
            if !seen[q] {
                continue;
            }
            for a in self.alphabet.letters() {
                for &p in &self.moves[q][a] {
                    out.add_move(remap[q], a, remap[p]);
                }
            }
            for &p in &self.epsilon[q] {
                out.add_epsilon(remap[q], remap[p]);
            }
        }
        out
    }

    /// Validates a raw description as an NFA; the letter token `epsilon`
    /// denotes ε-arcs.
    pub fn from_raw(raw: &RawAutomaton) -> Result<Nfa, Vec<ValidationError>> {
        let mut errors = Vec::new();
        let alphabet = match Alphabet::new(raw.alphabet.clone()) {
            Ok(a) => a,
            Err(errs) => {
                errors.extend(errs);
                Alphabet::new(Vec::<String>::new()).unwrap()
            }
        };
        let mut index: HashMap<&str, StateId> = HashMap::new();
        for (i, name) in raw.states.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                errors.push(ValidationError::DuplicateState(name.clone()));
            }
        }
        let initial = match index.get(raw.initial.as_str()) {
            Some(&q) => q,
            None => {
                errors.push(ValidationError::MissingInitial(raw.initial.clone()));
                0
            }
        };
        let mut finals = vec![false; raw.states.len()];
        for name in &raw.finals {
            match index.get(name.as_str()) {
                Some(&q) => finals[q] = true,
                None => errors.push(ValidationError::UnknownState(name.clone())),
            }
        }
        let mut resolved: Vec<(StateId, Option<Letter>, StateId)> = Vec::new();
        for t in &raw.transitions {
            let source = index.get(t.source.as_str()).copied();
            if source.is_none() {
                errors.push(ValidationError::UnknownState(t.source.clone()));
            }
            let target = index.get(t.target.as_str()).copied();
            if target.is_none() {
                errors.push(ValidationError::UnknownState(t.target.clone()));
            }
            let letter = if t.letter == EPSILON_TOKEN {
                Some(None)
            } else {
                match alphabet.index_of(&t.letter) {
                    Some(l) => Some(Some(l)),
                    None => {
                        errors.push(ValidationError::UnknownLetter(t.letter.clone()));
                        None
                    }
                }
            };
            if let (Some(q), Some(l), Some(p)) = (source, letter, target) {
                resolved.push((q, l, p));
            }
        }
        if !errors.is_empty() {
            return Err(errors);
        }
        let mut nfa = Nfa::new(alphabet, raw.states.clone(), initial, finals);
        for (q, l, p) in resolved {
            match l {
                Some(a) => nfa.add_move(q, a, p),
                None => nfa.add_epsilon(q, p),
            }
        }
        Ok(nfa)
    }

    /// The raw description of this NFA, canonically ordered.
    pub fn to_raw(&self) -> RawAutomaton {
        let mut transitions = Vec::new();
        for q in 0..self.state_count() {
            for a in self.alphabet.letters() {
                for &p in &self.moves[q][a] {
                    transitions.push(RawTransition {
                        source: self.state_names[q].clone(),
                        letter: self.alphabet.symbol(a).to_string(),
                        target: self.state_names[p].clone(),
                    });
                }
            }
            for &p in &self.epsilon[q] {
                transitions.push(RawTransition {
                    source: self.state_names[q].clone(),
                    letter: EPSILON_TOKEN.to_string(),
                    target: self.state_names[p].clone(),
                });
            }
        }
        let mut raw = RawAutomaton {
            alphabet: self.alphabet.symbols().to_vec(),
            states: self.state_names.clone(),
            initial: self.state_names[self.initial].clone(),
            finals: (0..self.state_count())
                .filter(|&q| self.finals[q])
                .map(|q| self.state_names[q].clone())
                .collect(),
            transitions,
        };
        raw.canonicalize();
        raw
    }
}

/// A complete deterministic automaton over subsets or plain states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    state_names: Vec<String>,
    initial: StateId,
    finals: Vec<bool>,
    table: Vec<Vec<StateId>>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        state_names: Vec<String>,
        initial: StateId,
        finals: Vec<bool>,
        table: Vec<Vec<StateId>>,
    ) -> Self {
        assert_eq!(state_names.len(), finals.len());
        assert_eq!(state_names.len(), table.len());
        for row in &table {
            assert_eq!(row.len(), alphabet.len());
        }
        Dfa {
            alphabet,
            state_names,
            initial,
            finals,
            table,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn next(&self, q: StateId, a: Letter) -> StateId {
        self.table[q][a]
    }

    pub fn accepts(&self, w: &[Letter]) -> bool {
        let mut q = self.initial;
        for &a in w {
            if a >= self.alphabet.len() {
                return false;
            }
            q = self.table[q][a];
        }
        self.finals[q]
    }

    /// Words of length ≤ `maxlen` accepted by this automaton, in
    /// length-lexicographic order. Test helper for language comparisons.
    pub fn language_sample(&self, maxlen: usize) -> Vec<Word> {
        let k = self.alphabet.len();
        let mut out = Vec::new();
        for len in 0..=maxlen {
            if len > 0 && k == 0 {
                break;
            }
            let mut word = vec![0usize; len];
            loop {
                if self.accepts(&word) {
                    out.push(word.clone());
                }
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
        out
    }
}

/// Classical powerset determinization. ε-arcs are handled through closures,
/// so ε-free and ε-carrying inputs are both accepted. Subset states are
/// discovered breadth-first with letters in declared order, which makes the
/// numbering deterministic.
pub fn determinize(nfa: &Nfa) -> Dfa {
    let n = nfa.state_count();
    let close = |set: BTreeSet<StateId>| -> BTreeSet<StateId> {
        let mut flags = vec![false; n];
        for &q in &set {
            flags[q] = true;
        }
        let mut stack: Vec<StateId> = set.into_iter().collect();
        while let Some(q) = stack.pop() {
            for &p in nfa.epsilon_moves(q) {
                if !flags[p] {
                    flags[p] = true;
                    stack.push(p);
                }
            }
        }
        (0..n).filter(|&q| flags[q]).collect()
    };
    let start = close(BTreeSet::from([nfa.initial()]));
    let mut ids: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
    let mut sets: Vec<BTreeSet<StateId>> = Vec::new();
    let mut table: Vec<Vec<StateId>> = Vec::new();
    ids.insert(start.clone(), 0);
    sets.push(start);
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        let mut row = Vec::with_capacity(nfa.alphabet().len());
        for a in nfa.alphabet().letters() {
            let mut targets = BTreeSet::new();
            for &q in &sets[id] {
                targets.extend(nfa.moves(q, a).iter().copied());
            }
            let closed = close(targets);
            let next_id = match ids.get(&closed) {
                Some(&existing) => existing,
                None => {
                    let fresh = sets.len();
                    ids.insert(closed.clone(), fresh);
                    sets.push(closed);
                    queue.push_back(fresh);
                    fresh
                }
            };
            row.push(next_id);
        }
        table.push(row);
    }
    let finals: Vec<bool> = sets
        .iter()
        .map(|set| set.iter().any(|&q| nfa.is_final(q)))
        .collect();
    let names = (0..sets.len()).map(|i| format!("p{i}")).collect();
    Dfa::new(nfa.alphabet().clone(), names, 0, finals, table)
}
