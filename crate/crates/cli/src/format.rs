//! The textual automaton format.
//!
//! ```text
//! # comment
//! alphabet: a b
//! states: q0 q1
//! initial: q0
//! final: q0
//! q0 a q1
//! q1 b q0
//! ```
//!
//! Header lines carry the alphabet, the state list, the initial state and
//! the (possibly empty) final-state list; every other non-blank line is one
//! `source letter target` transition. Nondeterministic descriptions repeat
//! `(source, letter)` pairs, and `epsilon` as the letter token denotes an
//! ε-arc. Serialization is canonical: repeated serialize/parse round trips
//! are byte-identical.

use std::fmt;

use wtl_core::model::{RawAutomaton, RawTransition, EPSILON_TOKEN};

/// A parse problem, located by line and column (both 1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into (token, 1-based column) pairs.
fn tokens_with_columns(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (idx, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((&line[s..idx], s + 1));
            }
        } else if start.is_none() {
            start = Some(idx);
        }
    }
    if let Some(s) = start {
        out.push((&line[s..], s + 1));
    }
    out
}

/// Parses a description. Blank lines are skipped and `#` starts a comment.
/// All problems found are reported together; transitions are checked against
/// the declared alphabet (state names are resolved later, by validation).
pub fn parse_automaton(text: &str) -> Result<RawAutomaton, Vec<ParseError>> {
    let mut errors = Vec::new();
    let mut doc = RawAutomaton::default();
    let mut seen_sections: Vec<&str> = Vec::new();
    let mut transition_lines: Vec<(usize, Vec<(String, usize)>)> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(hash) => &raw_line[..hash],
            None => raw_line,
        };
        let tokens = tokens_with_columns(line);
        if tokens.is_empty() {
            continue;
        }
        let (head, head_col) = tokens[0];
        if let Some(section) = head.strip_suffix(':') {
            let section = match section {
                "alphabet" => "alphabet",
                "states" => "states",
                "initial" => "initial",
                "final" => "final",
                other => {
                    errors.push(error(
                        line_no,
                        head_col,
                        format!("unknown section '{other}:'"),
                    ));
                    continue;
                }
            };
            if seen_sections.contains(&section) {
                errors.push(error(
                    line_no,
                    head_col,
                    format!("duplicate section '{section}:'"),
                ));
                continue;
            }
            seen_sections.push(section);
            let rest: Vec<String> = tokens[1..].iter().map(|&(t, _)| t.to_string()).collect();
            match section {
                "alphabet" => doc.alphabet = rest,
                "states" => doc.states = rest,
                "initial" => match rest.len() {
                    1 => doc.initial = rest.into_iter().next().unwrap(),
                    n => errors.push(error(
                        line_no,
                        head_col,
                        format!("'initial:' expects exactly one state, got {n}"),
                    )),
                },
                _ => doc.finals = rest,
            }
        } else if tokens.len() == 3 {
            transition_lines.push((
                line_no,
                tokens.iter().map(|&(t, c)| (t.to_string(), c)).collect(),
            ));
        } else {
            errors.push(error(
                line_no,
                head_col,
                format!(
                    "expected 'source letter target' (3 tokens), got {}",
                    tokens.len()
                ),
            ));
        }
    }
    for section in ["alphabet", "states", "initial", "final"] {
        if !seen_sections.contains(&section) {
            errors.push(error(1, 1, format!("missing section '{section}:'")));
        }
    }
    for (line_no, tokens) in transition_lines {
        let (letter, letter_col) = (&tokens[1].0, tokens[1].1);
        if letter != EPSILON_TOKEN && !doc.alphabet.iter().any(|s| s == letter) {
            errors.push(error(
                line_no,
                letter_col,
                format!("unknown letter '{letter}'"),
            ));
            continue;
        }
        doc.transitions.push(RawTransition {
            source: tokens[0].0.clone(),
            letter: letter.clone(),
            target: tokens[2].0.clone(),
        });
    }
    if errors.is_empty() {
        doc.canonicalize();
        Ok(doc)
    } else {
        Err(errors)
    }
}

/// Canonical rendering: header first, then transitions sorted by declared
/// state and letter order. Byte-identical on repeated calls.
pub fn serialize_automaton(doc: &RawAutomaton) -> String {
    let mut doc = doc.clone();
    doc.canonicalize();
    let mut out = String::new();
    out.push_str("alphabet:");
    for symbol in &doc.alphabet {
        out.push(' ');
        out.push_str(symbol);
    }
    out.push('\n');
    out.push_str("states:");
    for state in &doc.states {
        out.push(' ');
        out.push_str(state);
    }
    out.push('\n');
    out.push_str("initial: ");
    out.push_str(&doc.initial);
    out.push('\n');
    out.push_str("final:");
    for state in &doc.finals {
        out.push(' ');
        out.push_str(state);
    }
    out.push('\n');
    for t in &doc.transitions {
        out.push_str(&t.source);
        out.push(' ');
        out.push_str(&t.letter);
        out.push(' ');
        out.push_str(&t.target);
        out.push('\n');
    }
    out
}
