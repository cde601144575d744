//! Canonical minimized form of a word action and breadth-first enumeration
//! of the generated semigroup.
//!
//! An [`ActionKey`] is the minimal pointed transducer of one word, with
//! states renumbered breadth-first under the fixed symbol order. Two words
//! have equal keys exactly when they induce the same map on all sequences,
//! which makes the key a hashable identity for semigroup elements.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::mealy::{CompositeState, MealyAutomaton};
use crate::semigroup::FiniteSemigroup;

/// Canonical pointed machine of a word action: initial state 0, transition
/// and output tables in state-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionKey {
    alphabet: usize,
    trans: Vec<usize>,
    out: Vec<usize>,
}

impl ActionKey {
    pub fn state_count(&self) -> usize {
        self.trans.len() / self.alphabet
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet
    }

    fn step(&self, state: usize, symbol: usize) -> (usize, usize) {
        let slot = state * self.alphabet + symbol;
        (self.trans[slot], self.out[slot])
    }
}

/// An unminimized pointed machine; initial state 0, all states reachable.
struct RawMachine {
    alphabet: usize,
    trans: Vec<usize>,
    out: Vec<usize>,
}

impl RawMachine {
    fn state_count(&self) -> usize {
        self.trans.len() / self.alphabet
    }
}

/// Explores the machine generated by a seed state under a successor
/// function, interning states in breadth-first order with symbols ascending.
fn explore<S, F>(alphabet: usize, seed: S, mut step: F) -> RawMachine
where
    S: Clone + Eq + std::hash::Hash,
    F: FnMut(&S, usize) -> (S, usize),
{
    let mut ids: HashMap<S, usize> = HashMap::new();
    let mut pending = vec![seed.clone()];
    ids.insert(seed, 0);
    let mut trans = Vec::new();
    let mut out = Vec::new();
    let mut cursor = 0;
    while cursor < pending.len() {
        let state = pending[cursor].clone();
        cursor += 1;
        for symbol in 0..alphabet {
            let (next, emitted) = step(&state, symbol);
            let fresh = ids.len();
            let id = match ids.entry(next.clone()) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(slot) => {
                    slot.insert(fresh);
                    pending.push(next);
                    fresh
                }
            };
            trans.push(id);
            out.push(emitted);
        }
    }
    RawMachine {
        alphabet,
        trans,
        out,
    }
}

/// Moore-style partition refinement followed by a breadth-first renumbering
/// of the quotient, yielding the canonical key.
fn canonicalize(machine: &RawMachine) -> ActionKey {
    let n = machine.state_count();
    let a = machine.alphabet;

    // Initial partition: states with identical full output rows.
    let mut rows: HashMap<&[usize], usize> = HashMap::new();
    let mut block: Vec<usize> = (0..n)
        .map(|q| {
            let row = &machine.out[q * a..(q + 1) * a];
            let fresh = rows.len();
            *rows.entry(row).or_insert(fresh)
        })
        .collect();
    let mut block_count = rows.len();

    // Refine by successor blocks until stable.
    loop {
        let mut signatures: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let next_block: Vec<usize> = (0..n)
            .map(|q| {
                let succ: Vec<usize> = (0..a).map(|b| block[machine.trans[q * a + b]]).collect();
                let fresh = signatures.len();
                *signatures.entry((block[q], succ)).or_insert(fresh)
            })
            .collect();
        let refined = signatures.len();
        block = next_block;
        if refined == block_count {
            break;
        }
        block_count = refined;
    }

    // Quotient, then renumber blocks breadth-first from the initial block.
    let mut order = vec![usize::MAX; block_count];
    let mut listed = Vec::with_capacity(block_count);
    let mut representative = vec![usize::MAX; block_count];
    for (q, &b) in block.iter().enumerate() {
        if representative[b] == usize::MAX {
            representative[b] = q;
        }
    }
    order[block[0]] = 0;
    listed.push(block[0]);
    let mut cursor = 0;
    while cursor < listed.len() {
        let b = listed[cursor];
        cursor += 1;
        let q = representative[b];
        for symbol in 0..a {
            let target = block[machine.trans[q * a + symbol]];
            if order[target] == usize::MAX {
                order[target] = listed.len();
                listed.push(target);
            }
        }
    }
    debug_assert!(listed.len() == block_count, "quotient must stay reachable");

    let mut trans = vec![0usize; block_count * a];
    let mut out = vec![0usize; block_count * a];
    for (new_id, &b) in listed.iter().enumerate() {
        let q = representative[b];
        for symbol in 0..a {
            trans[new_id * a + symbol] = order[block[machine.trans[q * a + symbol]]];
            out[new_id * a + symbol] = machine.out[q * a + symbol];
        }
    }
    ActionKey {
        alphabet: a,
        trans,
        out,
    }
}

impl MealyAutomaton {
    /// Builds the reachable composite machine of `w`, minimizes it and
    /// returns the canonical key. Key equality coincides with
    /// [`MealyAutomaton::words_equal`].
    pub fn minimize_pointed(&self, w: &CompositeState) -> ActionKey {
        let machine = explore(self.alphabet_len(), w.stages().to_vec(), |stages, b| {
            let mut carried = b;
            let mut next = Vec::with_capacity(stages.len());
            for &q in stages.iter() {
                let (state, emitted) = self.transition(q, carried);
                next.push(state);
                carried = emitted;
            }
            (next, carried)
        });
        canonicalize(&machine)
    }
}

/// Canonical key of the algebraic product `left·right` (with `right`
/// applied first): input runs through `right`, whose output feeds `left`.
/// Equals canonicalizing the concatenated word directly.
pub fn key_product(left: &ActionKey, right: &ActionKey) -> ActionKey {
    assert_eq!(left.alphabet, right.alphabet);
    let machine = explore(left.alphabet, (0usize, 0usize), |&(l, r), b| {
        let (r_next, carried) = right.step(r, b);
        let (l_next, emitted) = left.step(l, carried);
        ((l_next, r_next), emitted)
    });
    canonicalize(&machine)
}

/// Exploration budgets for semigroup enumeration. Enumeration never loops
/// silently: exceeding either budget aborts with a partial census.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub max_elements: usize,
    pub max_length: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_elements: 100_000,
            max_length: 12,
        }
    }
}

/// A fully enumerated automaton semigroup.
#[derive(Debug, Clone)]
pub struct Enumeration {
    /// The multiplication table, elements named by their representative
    /// word (state names joined by `·`).
    pub semigroup: FiniteSemigroup,
    /// Shortlex-least representative of each element, written in algebraic
    /// order (leftmost state applied last).
    pub words: Vec<Vec<usize>>,
    /// Canonical key of each element.
    pub keys: Vec<ActionKey>,
    /// Element represented by each single-state word.
    pub generator_element: Vec<usize>,
}

/// Enumeration gave up before closing: the census so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhausted {
    pub elements_found: usize,
    pub frontier: usize,
    pub max_elements_hit: bool,
    pub max_length_hit: bool,
}

impl std::fmt::Display for Exhausted {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cap = if self.max_elements_hit {
            "element budget"
        } else {
            "length budget"
        };
        write!(
            f,
            "enumeration exhausted its {cap}: {} element(s) found, {} unexplored",
            self.elements_found, self.frontier
        )
    }
}

impl MealyAutomaton {
    /// Breadth-first closure of the word semigroup: seeds every length-1
    /// word, repeatedly right-multiplies by one generator, and identifies
    /// elements by canonical key. Returns the multiplication table when the
    /// closure completes within budget.
    pub fn enumerate_semigroup(&self, budgets: &Budgets) -> Result<Enumeration, Exhausted> {
        let gen_count = self.state_count();
        let gen_keys: Vec<ActionKey> = (0..gen_count)
            .map(|q| self.minimize_pointed(&CompositeState::singleton(q)))
            .collect();

        let mut words: Vec<Vec<usize>> = Vec::new();
        let mut keys: Vec<ActionKey> = Vec::new();
        let mut ids: HashMap<ActionKey, usize> = HashMap::new();
        let mut generator_element = vec![usize::MAX; gen_count];

        for (q, gen_key) in gen_keys.iter().enumerate() {
            let fresh = ids.len();
            let id = *ids.entry(gen_key.clone()).or_insert(fresh);
            if id == fresh {
                words.push(vec![q]);
                keys.push(gen_key.clone());
            }
            generator_element[q] = id;
        }

        let mut cursor = 0;
        while cursor < words.len() {
            for (q, gen_key) in gen_keys.iter().enumerate() {
                // The right product w·q̄ applies q̄ first; in algebraic
                // order the new letter is appended.
                let key = key_product(&keys[cursor], gen_key);
                if !ids.contains_key(&key) {
                    let exhausted = |max_elements_hit, max_length_hit| Exhausted {
                        elements_found: words.len(),
                        frontier: words.len() - cursor,
                        max_elements_hit,
                        max_length_hit,
                    };
                    if words[cursor].len() + 1 > budgets.max_length {
                        return Err(exhausted(false, true));
                    }
                    if words.len() >= budgets.max_elements {
                        return Err(exhausted(true, false));
                    }
                    let mut word = words[cursor].clone();
                    word.push(q);
                    ids.insert(key.clone(), words.len());
                    words.push(word);
                    keys.push(key);
                }
            }
            cursor += 1;
        }

        let count = words.len();
        let names: Vec<String> = words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&q| self.state_name(q))
                    .collect::<Vec<_>>()
                    .join("·")
            })
            .collect();
        let mut table = vec![vec![0usize; count]; count];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let key = key_product(&keys[i], &keys[j]);
                *slot = *ids
                    .get(&key)
                    .expect("a closed element set is closed under products");
            }
        }
        let semigroup = FiniteSemigroup::new(names, table)
            .expect("an enumerated action semigroup is associative");
        Ok(Enumeration {
            semigroup,
            words,
            keys,
            generator_element,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mealy::fixtures::{identity_automaton, two_state_example};
    use crate::mealy::Equivalence;

    #[test]
    fn equal_words_share_a_key() {
        let a = two_state_example();
        let ab = CompositeState::new(vec![1, 0]).unwrap();
        let bb = CompositeState::new(vec![1, 1]).unwrap();
        assert_eq!(a.minimize_pointed(&ab), a.minimize_pointed(&bb));
    }

    #[test]
    fn distinct_generators_have_distinct_keys() {
        let a = two_state_example();
        let ka = a.minimize_pointed(&CompositeState::singleton(0));
        let kb = a.minimize_pointed(&CompositeState::singleton(1));
        assert_ne!(ka, kb);
    }

    #[test]
    fn identity_action_minimizes_to_one_state() {
        let a = identity_automaton(4, 3);
        for stages in [vec![0], vec![3, 1], vec![2, 2, 0]] {
            let key = a.minimize_pointed(&CompositeState::new(stages).unwrap());
            assert_eq!(key.state_count(), 1);
        }
    }

    #[test]
    fn key_product_matches_concatenation() {
        let a = two_state_example();
        for (u, v) in [
            (vec![0], vec![1]),
            (vec![1, 0], vec![0]),
            (vec![0, 1], vec![1, 1]),
        ] {
            let left = CompositeState::new(u.clone()).unwrap();
            let right = CompositeState::new(v.clone()).unwrap();
            let composed = key_product(&a.minimize_pointed(&left), &a.minimize_pointed(&right));
            let concatenated = a.minimize_pointed(&CompositeState::product(&left, &right));
            assert_eq!(composed, concatenated);
        }
    }

    #[test]
    fn key_equality_agrees_with_bisimulation() {
        let a = two_state_example();
        let words: Vec<CompositeState> = vec![
            CompositeState::singleton(0),
            CompositeState::singleton(1),
            CompositeState::new(vec![1, 0]).unwrap(),
            CompositeState::new(vec![1, 1]).unwrap(),
            CompositeState::new(vec![0, 1]).unwrap(),
        ];
        for u in &words {
            for v in &words {
                let by_key = a.minimize_pointed(u) == a.minimize_pointed(v);
                let by_bisim = a.words_equal(u, v) == Equivalence::Equal;
                assert_eq!(by_key, by_bisim);
            }
        }
    }

    #[test]
    fn identity_automaton_generates_the_trivial_semigroup() {
        let a = identity_automaton(3, 2);
        let result = a.enumerate_semigroup(&Budgets::default()).unwrap();
        assert_eq!(result.semigroup.size(), 1);
        assert_eq!(result.generator_element, vec![0, 0, 0]);
    }

    #[test]
    fn free_ish_semigroup_exhausts_the_budget() {
        let a = two_state_example();
        let err = a
            .enumerate_semigroup(&Budgets {
                max_elements: 100_000,
                max_length: 6,
            })
            .unwrap_err();
        assert!(err.max_length_hit);
        // Words b^i a^j with i+j ≤ 6 are pairwise distinct.
        assert_eq!(err.elements_found, 2 + 3 + 4 + 5 + 6 + 7);
    }

    #[test]
    fn element_budget_is_respected() {
        let a = two_state_example();
        let err = a
            .enumerate_semigroup(&Budgets {
                max_elements: 5,
                max_length: 12,
            })
            .unwrap_err();
        assert!(err.max_elements_hit);
        assert_eq!(err.elements_found, 5);
    }
}
