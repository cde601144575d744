//! The Cayley automaton of a finite semigroup, the semigroup it generates
//! and the canonical-map classification.
//!
//! For a semigroup `S` the Cayley automaton has state set and alphabet both
//! equal to `S`, with `δ(s̄, t) = (st-bar, st)`. The state `s̄` acts on a
//! sequence by emitting the running prefix products. The word semigroup of
//! this automaton is written `sigma` here; `pi` is its dual, obtained by
//! acting on sequences from the right.

use serde::Serialize;

use crate::canon::{Budgets, Enumeration, Exhausted};
use crate::iso::{find_isomorphism, is_self_dual};
use crate::mealy::{CompositeState, Equivalence, MealyAutomaton, MealyError};
use crate::semigroup::{FiniteSemigroup, PeriodWitness};

/// States and symbols are both the elements of `S`; reading `t` in state
/// `s̄` outputs `st` and moves to state `st-bar`.
pub fn cayley_automaton(s: &FiniteSemigroup) -> MealyAutomaton {
    let names: Vec<String> = s.names().to_vec();
    let delta = (0..s.size())
        .map(|q| {
            (0..s.size())
                .map(|b| {
                    let product = s.mul(q, b);
                    (product, product)
                })
                .collect()
        })
        .collect();
    MealyAutomaton::new(names.clone(), names, delta).expect("Cayley automaton is well-formed")
}

/// The closed-form action of the state `s̄` on a sequence: the outputs are
/// the running prefix products `(sα₁)(sα₁α₂)…`.
pub fn state_action(
    s: &FiniteSemigroup,
    element: usize,
    seq: &[usize],
) -> Result<Vec<usize>, MealyError> {
    if element >= s.size() {
        return Err(MealyError::InvalidState(element));
    }
    if let Some(&b) = seq.iter().find(|&&b| b >= s.size()) {
        return Err(MealyError::UnknownSymbol(b));
    }
    let mut accumulated = element;
    Ok(seq
        .iter()
        .map(|&b| {
            accumulated = s.mul(accumulated, b);
            accumulated
        })
        .collect())
}

/// Acting on sequences from the right: `α·s̄₁·s̄₂ = (α·s̄₁)·s̄₂`, where each
/// single state acts by the same prefix-product formula.
pub fn right_action(
    s: &FiniteSemigroup,
    seq: &[usize],
    word: &[usize],
) -> Result<Vec<usize>, MealyError> {
    let mut current = seq.to_vec();
    for &state in word {
        current = state_action(s, state, &current)?;
    }
    Ok(current)
}

/// A pair of elements whose canonical product acts differently from the
/// state of the product element, plus the shortest sequence exposing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCounterexample {
    pub left_factor: usize,
    pub right_factor: usize,
    pub witness: Vec<usize>,
}

/// Is the canonical map `s ↦ s̄` injective? Decided two independent ways —
/// row comparison of the left-regular representation and pairwise word
/// equivalence of the singleton states — which must agree. On failure
/// returns all collapsed pairs.
pub fn canonical_injective(s: &FiniteSemigroup) -> Result<(), Vec<(usize, usize)>> {
    let by_rows = s.left_regular().kernel_pairs;

    let automaton = cayley_automaton(s);
    let mut by_actions = Vec::new();
    for a in 0..s.size() {
        for b in a + 1..s.size() {
            let equal = automaton
                .words_equal(&CompositeState::singleton(a), &CompositeState::singleton(b))
                .is_equal();
            if equal {
                by_actions.push((a, b));
            }
        }
    }

    assert_eq!(
        by_rows, by_actions,
        "internal disagreement: row kernel and action kernel differ"
    );
    if by_actions.is_empty() {
        Ok(())
    } else {
        Err(by_actions)
    }
}

/// Is the canonical map `s ↦ s̄` a homomorphism? For every ordered pair
/// `(s, t)` the product word `s̄·t̄` (t̄ applied first) must act like the
/// single state `st-bar`; the first failing pair in scan order is
/// returned.
pub fn canonical_homomorphism(s: &FiniteSemigroup) -> Result<(), HomCounterexample> {
    let automaton = cayley_automaton(s);
    for left in 0..s.size() {
        for right in 0..s.size() {
            let product_word = CompositeState::product(
                &CompositeState::singleton(left),
                &CompositeState::singleton(right),
            );
            let product_state = CompositeState::singleton(s.mul(left, right));
            if let Equivalence::Distinct { witness } =
                automaton.words_equal(&product_word, &product_state)
            {
                return Err(HomCounterexample {
                    left_factor: left,
                    right_factor: right,
                    witness,
                });
            }
        }
    }
    Ok(())
}

/// Result of enumerating the Cayley automaton semigroup.
#[derive(Debug, Clone)]
pub enum SigmaResult {
    Finite(Enumeration),
    /// The input has an element of period > 1, so the generated semigroup
    /// is infinite; no enumeration was attempted.
    KnownInfinite(PeriodWitness),
    Exhausted(Exhausted),
}

impl SigmaResult {
    pub fn finite(&self) -> Option<&Enumeration> {
        match self {
            SigmaResult::Finite(e) => Some(e),
            _ => None,
        }
    }
}

/// Enumerates the semigroup generated by the Cayley automaton of `s`.
///
/// Non-aperiodic input is rejected up front as `KnownInfinite` unless
/// `force` is set, in which case enumeration runs to its budget. On a
/// complete enumeration where the canonical map is a homomorphism, the
/// result is checked against the image of the left-regular representation
/// (they must be isomorphic); a mismatch is an internal bug and panics.
pub fn sigma(s: &FiniteSemigroup, budgets: &Budgets, force: bool) -> SigmaResult {
    if !force {
        if let Some(witness) = s.period_witness() {
            return SigmaResult::KnownInfinite(witness);
        }
    }
    match cayley_automaton(s).enumerate_semigroup(budgets) {
        Ok(enumeration) => {
            if canonical_homomorphism(s).is_ok() {
                let lrr = s.left_regular();
                assert_eq!(
                    enumeration.semigroup.size(),
                    lrr.image.size(),
                    "internal disagreement: enumerated size differs from the \
                     left-regular image"
                );
                assert!(
                    find_isomorphism(&enumeration.semigroup, &lrr.image).is_some(),
                    "internal disagreement: enumeration is not isomorphic to the \
                     left-regular image"
                );
            }
            SigmaResult::Finite(enumeration)
        }
        Err(exhausted) => SigmaResult::Exhausted(exhausted),
    }
}

/// The dual semigroup, obtained by acting on sequences from the right:
/// structurally the opposite of [`sigma`]. On semigroups of at most four
/// elements the table is re-derived from the right action directly and the
/// two must agree.
pub fn pi(s: &FiniteSemigroup, budgets: &Budgets, force: bool) -> SigmaResult {
    match sigma(s, budgets, force) {
        SigmaResult::Finite(enumeration) => {
            let flipped = Enumeration {
                semigroup: enumeration.semigroup.opposite(),
                words: enumeration.words,
                keys: enumeration.keys,
                generator_element: enumeration.generator_element,
            };
            if s.size() <= 4 {
                cross_check_right_action(s, &flipped);
            }
            SigmaResult::Finite(flipped)
        }
        other => other,
    }
}

/// Checks the dual table against direct right-action evaluation for all
/// words of length ≤ 3 and sequences of length ≤ 4.
fn cross_check_right_action(s: &FiniteSemigroup, dual: &Enumeration) {
    let automaton = cayley_automaton(s);
    let n = s.size();
    let mut words: Vec<Vec<usize>> = (0..n).map(|q| vec![q]).collect();
    let mut word_level = words.clone();
    for _ in 1..3 {
        let mut next_level = Vec::new();
        for w in &word_level {
            for q in 0..n {
                let mut next = w.clone();
                next.push(q);
                next_level.push(next);
            }
        }
        words.extend(next_level.iter().cloned());
        word_level = next_level;
    }
    let mut sequences: Vec<Vec<usize>> = vec![vec![]];
    let mut level: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..4 {
        let mut next_level = Vec::new();
        for seq in &level {
            for b in 0..n {
                let mut next = seq.clone();
                next.push(b);
                next_level.push(next);
            }
        }
        sequences.extend(next_level.iter().cloned());
        level = next_level;
    }

    for word in &words {
        // Fold the word through the dual table: α·s̄₁·s̄₂ is the element
        // s̄₁·s̄₂ of the dual semigroup.
        let mut element = dual.generator_element[word[0]];
        for &q in &word[1..] {
            element = dual.semigroup.mul(element, dual.generator_element[q]);
        }
        let stages: Vec<usize> = dual.words[element].iter().rev().copied().collect();
        let composite = CompositeState::new(stages).expect("non-empty representative");
        for seq in &sequences {
            let direct = right_action(s, seq, word).expect("valid indices");
            let via_table = automaton.act(&composite, seq).expect("valid indices");
            assert_eq!(
                direct, via_table,
                "internal disagreement: right action differs from the dual table"
            );
        }
    }
}

/// Decides whether `s` is isomorphic to the dual of its Cayley automaton
/// semigroup. `None` means the enumeration budget ran out. Non-aperiodic
/// input is decided negatively outright: a finite semigroup cannot be
/// isomorphic to an infinite one.
pub fn is_c_self_automaton(s: &FiniteSemigroup, budgets: &Budgets) -> Option<bool> {
    let result = match sigma(s, budgets, false) {
        SigmaResult::KnownInfinite(_) => Some(false),
        SigmaResult::Exhausted(_) => None,
        SigmaResult::Finite(enumeration) => {
            Some(find_isomorphism(s, &enumeration.semigroup.opposite()).is_some())
        }
    };
    if let Some(decided) = result {
        if canonical_injective(s).is_ok()
            && canonical_homomorphism(s).is_ok()
            && is_self_dual(s).is_some()
        {
            assert!(
                decided,
                "internal disagreement: a self-dual self-automaton semigroup must \
                 be isomorphic to its dual"
            );
        }
    }
    result
}

/// Outcome of checking that short words act pairwise distinctly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Freeness {
    /// All words up to the length bound act distinctly; `words_checked`
    /// counts them.
    Free { words_checked: usize },
    /// Two words in algebraic order (shortlex-first collision) with equal
    /// actions.
    Collision {
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

/// Enumerates every word over the states of the Cayley automaton up to
/// `max_len` in shortlex order and reports the first pair acting
/// identically, if any.
pub fn freeness_check(s: &FiniteSemigroup, max_len: usize) -> Freeness {
    let automaton = cayley_automaton(s);
    let n = s.size();
    let gen_keys: Vec<_> = (0..n)
        .map(|q| automaton.minimize_pointed(&CompositeState::singleton(q)))
        .collect();

    let mut seen: std::collections::HashMap<crate::canon::ActionKey, Vec<usize>> =
        std::collections::HashMap::new();
    let mut level: Vec<(Vec<usize>, crate::canon::ActionKey)> = Vec::new();
    let mut words_checked = 0usize;

    for length in 1..=max_len {
        let mut next_level = Vec::new();
        if length == 1 {
            for (q, key) in gen_keys.iter().enumerate() {
                next_level.push((vec![q], key.clone()));
            }
        } else {
            for (word, key) in &level {
                for (q, gen_key) in gen_keys.iter().enumerate() {
                    let mut next = word.clone();
                    next.push(q);
                    next_level.push((next, crate::canon::key_product(key, gen_key)));
                }
            }
        }
        for (word, key) in &next_level {
            if let Some(existing) = seen.get(key) {
                return Freeness::Collision {
                    first: existing.clone(),
                    second: word.clone(),
                };
            }
            seen.insert(key.clone(), word.clone());
            words_checked += 1;
        }
        level = next_level;
    }
    Freeness::Free { words_checked }
}

/// Everything the classifier can say about one semigroup, with witnesses.
/// Optional fields are unknown when the enumeration budget ran out.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub band: bool,
    pub aperiodic: bool,
    pub monoid: bool,
    pub relative_identities: bool,
    pub lrr_faithful: bool,
    pub s_squared_band: bool,
    pub canonical_injective: bool,
    pub canonical_homomorphism: bool,
    pub self_automaton: bool,
    pub self_dual: bool,
    pub c_self_automaton: Option<bool>,
    pub sigma_size: Option<usize>,
    pub kernel_pairs: Vec<(String, String)>,
    pub homomorphism_counterexample: Option<ReportHomWitness>,
    pub period_witness: Option<ReportPeriodWitness>,
    pub anti_isomorphism: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportHomWitness {
    pub left: String,
    pub right: String,
    pub sequence: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportPeriodWitness {
    pub element: String,
    pub index: usize,
    pub period: usize,
}

/// Classifies `s` with the default budgets. The semigroup is
/// self-automaton exactly when the canonical map is injective and a
/// homomorphism.
pub fn is_self_automaton(s: &FiniteSemigroup) -> ClassificationReport {
    classify(s, &Budgets::default())
}

/// Full classification: all structural flags, the canonical-map criteria,
/// self-duality, and (budget permitting) the generated semigroup and the
/// comparison with its dual.
pub fn classify(s: &FiniteSemigroup, budgets: &Budgets) -> ClassificationReport {
    let name = |i: usize| s.name(i).to_string();

    let band = s.is_band();
    let aperiodic = s.is_aperiodic();
    let period = s.period_witness();
    let monoid = s.is_monoid();
    let relative_identities = s.has_relative_identities();
    let lrr_faithful = s.left_regular().faithful();
    let s_squared_band = s.square().semigroup.is_band();

    let injective = canonical_injective(s);
    let homomorphism = canonical_homomorphism(s);
    let self_automaton = injective.is_ok() && homomorphism.is_ok();
    let dual_witness = is_self_dual(s);
    let self_dual = dual_witness.is_some();

    assert_eq!(
        injective.is_ok(),
        lrr_faithful,
        "internal disagreement: injectivity must match faithfulness"
    );
    if band || s_squared_band {
        assert!(
            homomorphism.is_ok(),
            "internal disagreement: a (squared) band must give a homomorphism"
        );
    }
    if monoid && self_automaton {
        assert!(
            band,
            "internal disagreement: a self-automaton monoid is a band"
        );
    }
    if relative_identities && self_automaton {
        assert!(
            band && lrr_faithful,
            "internal disagreement: relative identities force a faithful band"
        );
    }

    let (sigma_size, c_self_automaton) = match sigma(s, budgets, false) {
        SigmaResult::Finite(enumeration) => {
            let c = find_isomorphism(s, &enumeration.semigroup.opposite()).is_some();
            (Some(enumeration.semigroup.size()), Some(c))
        }
        SigmaResult::KnownInfinite(_) => (None, Some(false)),
        SigmaResult::Exhausted(_) => (None, None),
    };
    if let (true, true, Some(decided)) = (self_automaton, self_dual, c_self_automaton) {
        assert!(
            decided,
            "internal disagreement: self-dual and self-automaton imply the dual \
             isomorphism"
        );
    }

    ClassificationReport {
        n: s.size(),
        band,
        aperiodic,
        monoid,
        relative_identities,
        lrr_faithful,
        s_squared_band,
        canonical_injective: injective.is_ok(),
        canonical_homomorphism: homomorphism.is_ok(),
        self_automaton,
        self_dual,
        c_self_automaton,
        sigma_size,
        kernel_pairs: injective
            .err()
            .unwrap_or_default()
            .into_iter()
            .map(|(a, b)| (name(a), name(b)))
            .collect(),
        homomorphism_counterexample: homomorphism.err().map(|h| ReportHomWitness {
            left: name(h.left_factor),
            right: name(h.right_factor),
            sequence: h.witness.into_iter().map(name).collect(),
        }),
        period_witness: period.map(|p| ReportPeriodWitness {
            element: name(p.element),
            index: p.index,
            period: p.period,
        }),
        anti_isomorphism: dual_witness.map(|w| w.mapping.into_iter().map(name).collect()),
    }
}
