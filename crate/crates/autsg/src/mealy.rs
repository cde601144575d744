//! Synchronous (Mealy) transducers and the action of words of states on
//! symbol sequences.
//!
//! A word acts through its stages in application order: `stages[0]` reads
//! the input sequence first and each stage feeds the next. In the usual
//! algebraic notation a product `u·v` applies `v` first, so the word
//! written `q_n…q_2q_1` has stages `[q_1, q_2, …, q_n]`.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MealyError {
    #[error("state row {state} must list one (next, output) pair per symbol")]
    IncompleteDelta { state: usize },
    #[error("transition ({state},{symbol}) points outside the automaton")]
    BadTransition { state: usize, symbol: usize },
    #[error("duplicate state or symbol name `{0}`")]
    DuplicateName(String),
    #[error("an automaton needs at least one state and one symbol")]
    Empty,
    #[error("unknown symbol index {0}")]
    UnknownSymbol(usize),
    #[error("invalid state index {0}")]
    InvalidState(usize),
    #[error("a word needs at least one state")]
    EmptyWord,
}

/// A complete deterministic transducer emitting one output symbol per input
/// symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MealyAutomaton {
    states: Vec<String>,
    alphabet: Vec<String>,
    /// `delta[q][b] = (next state, output symbol)`.
    delta: Vec<Vec<(usize, usize)>>,
}

/// A non-empty word of states in application order: `stages[0]` processes
/// the input sequence first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompositeState {
    stages: Vec<usize>,
}

/// Outcome of deciding whether two words induce the same map on all
/// sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    /// The shortest sequence on which the two actions differ (ties broken
    /// by alphabet order).
    Distinct {
        witness: Vec<usize>,
    },
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

impl CompositeState {
    pub fn new(stages: Vec<usize>) -> Result<Self, MealyError> {
        if stages.is_empty() {
            return Err(MealyError::EmptyWord);
        }
        Ok(CompositeState { stages })
    }

    pub fn singleton(state: usize) -> Self {
        CompositeState {
            stages: vec![state],
        }
    }

    pub fn stages(&self) -> &[usize] {
        &self.stages
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    /// Words are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The algebraic product `left·right`, which applies `right` first.
    pub fn product(left: &CompositeState, right: &CompositeState) -> CompositeState {
        let mut stages = right.stages.clone();
        stages.extend_from_slice(&left.stages);
        CompositeState { stages }
    }

    /// Stages of the word written in algebraic order (leftmost letter
    /// applied last).
    pub fn from_algebraic(word: &[usize]) -> Result<Self, MealyError> {
        let mut stages: Vec<usize> = word.to_vec();
        stages.reverse();
        CompositeState::new(stages)
    }
}

impl MealyAutomaton {
    pub fn new(
        states: Vec<String>,
        alphabet: Vec<String>,
        delta: Vec<Vec<(usize, usize)>>,
    ) -> Result<Self, MealyError> {
        if states.is_empty() || alphabet.is_empty() {
            return Err(MealyError::Empty);
        }
        for pool in [&states, &alphabet] {
            let mut seen = std::collections::BTreeSet::new();
            for name in pool {
                if !seen.insert(name) {
                    return Err(MealyError::DuplicateName(name.clone()));
                }
            }
        }
        if delta.len() != states.len() {
            return Err(MealyError::IncompleteDelta { state: delta.len() });
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(MealyError::IncompleteDelta { state: q });
            }
            for (b, &(next, out)) in row.iter().enumerate() {
                if next >= states.len() || out >= alphabet.len() {
                    return Err(MealyError::BadTransition {
                        state: q,
                        symbol: b,
                    });
                }
            }
        }
        Ok(MealyAutomaton {
            states,
            alphabet,
            delta,
        })
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn symbol_names(&self) -> &[String] {
        &self.alphabet
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.states[q]
    }

    pub fn symbol_name(&self, b: usize) -> &str {
        &self.alphabet[b]
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.alphabet.iter().position(|s| s == name)
    }

    /// The raw transition `δ(q, b) = (next, output)`.
    pub fn transition(&self, q: usize, b: usize) -> (usize, usize) {
        self.delta[q][b]
    }

    fn check_word(&self, w: &CompositeState) -> Result<(), MealyError> {
        match w.stages().iter().find(|&&q| q >= self.state_count()) {
            Some(&q) => Err(MealyError::InvalidState(q)),
            None => Ok(()),
        }
    }

    /// Reads one symbol through every stage: the output of stage `i` is the
    /// input of stage `i+1`. Returns the final output and the successor
    /// word.
    pub fn step(
        &self,
        w: &CompositeState,
        symbol: usize,
    ) -> Result<(usize, CompositeState), MealyError> {
        self.check_word(w)?;
        if symbol >= self.alphabet_len() {
            return Err(MealyError::UnknownSymbol(symbol));
        }
        let (out, next) = self.step_stages(w.stages(), symbol);
        Ok((out, CompositeState { stages: next }))
    }

    fn step_stages(&self, stages: &[usize], symbol: usize) -> (usize, Vec<usize>) {
        let mut carried = symbol;
        let mut next = Vec::with_capacity(stages.len());
        for &q in stages {
            let (state, out) = self.delta[q][carried];
            next.push(state);
            carried = out;
        }
        (carried, next)
    }

    /// The sequence output by running `seq` through the stages of `w`.
    /// Output length always equals input length.
    pub fn act(&self, w: &CompositeState, seq: &[usize]) -> Result<Vec<usize>, MealyError> {
        self.check_word(w)?;
        if let Some(&b) = seq.iter().find(|&&b| b >= self.alphabet_len()) {
            return Err(MealyError::UnknownSymbol(b));
        }
        let mut stages = w.stages().to_vec();
        let mut output = Vec::with_capacity(seq.len());
        for &b in seq {
            let (out, next) = self.step_stages(&stages, b);
            output.push(out);
            stages = next;
        }
        Ok(output)
    }

    /// Decides whether `u` and `v` induce the same map on all finite
    /// sequences by breadth-first closure over reachable pairs of words,
    /// comparing the outputs on every symbol.
    pub fn words_equal(&self, u: &CompositeState, v: &CompositeState) -> Equivalence {
        type WordPair = (Vec<usize>, Vec<usize>);
        self.check_word(u).expect("valid word");
        self.check_word(v).expect("valid word");

        let root: WordPair = (u.stages().to_vec(), v.stages().to_vec());
        let mut ids: HashMap<WordPair, usize> = HashMap::new();
        let mut parents: Vec<Option<(usize, usize)>> = vec![None];
        let mut queue: VecDeque<(usize, WordPair)> = VecDeque::new();
        ids.insert(root.clone(), 0);
        queue.push_back((0, root));

        while let Some((id, (us, vs))) = queue.pop_front() {
            for b in 0..self.alphabet_len() {
                let (out_u, next_u) = self.step_stages(&us, b);
                let (out_v, next_v) = self.step_stages(&vs, b);
                if out_u != out_v {
                    let mut witness = vec![b];
                    let mut cursor = id;
                    while let Some((parent, symbol)) = parents[cursor] {
                        witness.push(symbol);
                        cursor = parent;
                    }
                    witness.reverse();
                    return Equivalence::Distinct { witness };
                }
                let pair = (next_u, next_v);
                if let Entry::Vacant(slot) = ids.entry(pair.clone()) {
                    let fresh = parents.len();
                    slot.insert(fresh);
                    parents.push(Some((id, b)));
                    queue.push_back((fresh, pair));
                }
            }
        }
        Equivalence::Equal
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Two states a, b over {0, 1}: a reads 0 to b emitting 0, loops on 1
    /// emitting 1; b loops on 0 emitting 0 and reads 1 to a emitting 0.
    /// Generates the semigroup presented by `⟨a, b | ab = b²⟩`.
    pub fn two_state_example() -> MealyAutomaton {
        MealyAutomaton::new(
            vec!["a".into(), "b".into()],
            vec!["0".into(), "1".into()],
            vec![
                vec![(1, 0), (0, 1)], // a: 0|0 -> b, 1|1 -> a
                vec![(1, 0), (0, 0)], // b: 0|0 -> b, 1|0 -> a
            ],
        )
        .unwrap()
    }

    pub fn identity_automaton(states: usize, symbols: usize) -> MealyAutomaton {
        MealyAutomaton::new(
            (0..states).map(|q| format!("q{q}")).collect(),
            (0..symbols).map(|b| format!("s{b}")).collect(),
            (0..states)
                .map(|q| (0..symbols).map(|b| (q, b)).collect())
                .collect(),
        )
        .unwrap()
    }
}
