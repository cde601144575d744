//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).

mod common;

use std::time::Instant;

use autsg::canon::Budgets;
use autsg::cayley::{
    canonical_injective, cayley_automaton, freeness_check, is_c_self_automaton, is_self_automaton,
    sigma, state_action, Freeness, SigmaResult,
};
use autsg::constructions::*;
use autsg::iso::{find_isomorphism, is_self_dual};
use autsg::mealy::{CompositeState, Equivalence, MealyAutomaton};
use autsg::FiniteSemigroup;
use common::{corpus, self_automaton_flag, two_state_example};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn criterion_01_two_state_example() {
    let a = two_state_example();

    let out = a.act(&CompositeState::singleton(0), &[0, 0, 1, 1]).unwrap();
    assert_eq!(out, vec![0, 0, 0, 1]);

    let ab = CompositeState::from_algebraic(&[0, 1]).unwrap();
    let bb = CompositeState::from_algebraic(&[1, 1]).unwrap();
    assert!(a.words_equal(&ab, &bb).is_equal());

    // All words b^i a^j with 0 <= i, j <= 4 and i + j >= 1 act pairwise
    // distinctly.
    let mut keys = Vec::new();
    for i in 0..=4usize {
        for j in 0..=4usize {
            if i + j == 0 {
                continue;
            }
            let mut word = vec![1; i];
            word.extend(std::iter::repeat_n(0, j));
            let composite = CompositeState::from_algebraic(&word).unwrap();
            keys.push(a.minimize_pointed(&composite));
        }
    }
    for x in 0..keys.len() {
        for y in x + 1..keys.len() {
            assert_ne!(keys[x], keys[y], "words {x} and {y} collide");
        }
    }

    let result = a.enumerate_semigroup(&Budgets::default());
    assert!(result.is_err(), "the generated semigroup is infinite");
    println!("PASS criterion 1: two-state example action, relation and exhaustion");
}

#[test]
fn criterion_02_freeness_counts() {
    let start = Instant::now();
    match freeness_check(&cyclic_group(2).unwrap(), 6) {
        Freeness::Free { words_checked } => assert_eq!(words_checked, 126),
        other => panic!("expected freeness, got {other:?}"),
    }
    match freeness_check(&cyclic_group(3).unwrap(), 5) {
        Freeness::Free { words_checked } => assert_eq!(words_checked, 363),
        other => panic!("expected freeness, got {other:?}"),
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}");
    println!("PASS criterion 2: freeness counts 126 and 363 in {elapsed:?}");
}

#[test]
fn criterion_03_finiteness_guard() {
    let s = example_table(ExampleTable::NonBand);
    let result = sigma(&s, &Budgets::default(), false);
    assert_eq!(result.finite().unwrap().semigroup.size(), 4);

    for n in [2, 3] {
        match sigma(&cyclic_group(n).unwrap(), &Budgets::default(), false) {
            SigmaResult::KnownInfinite(witness) => assert!(witness.period > 1),
            other => panic!("expected KnownInfinite for cyclic_group({n}), got {other:?}"),
        }
    }
    println!("PASS criterion 3: finiteness guard");
}

#[test]
fn criterion_04_left_zero_semigroups() {
    for n in 1..=5 {
        let lz = left_zero(n).unwrap();
        assert!(
            is_self_automaton(&lz).self_automaton,
            "left_zero({n}) must be self-automaton"
        );
        for element in 0..n {
            for len in 0..=4 {
                let seq: Vec<usize> = (0..len).map(|i| i % n).collect();
                assert_eq!(
                    state_action(&lz, element, &seq).unwrap(),
                    vec![element; len]
                );
            }
        }
    }
    println!("PASS criterion 4: left-zero semigroups");
}

#[test]
fn criterion_05_nonband_example() {
    let s = example_table(ExampleTable::NonBand);
    let report = is_self_automaton(&s);
    assert!(!report.band);
    assert!(report.lrr_faithful);
    assert!(report.self_automaton);

    let square = s.square();
    assert!(find_isomorphism(&square.semigroup, &left_zero(3).unwrap()).is_some());
    println!("PASS criterion 5: four-element non-band example");
}

#[test]
fn criterion_06_collapse_example() {
    let s = example_table(ExampleTable::Collapse);
    let collapsed = canonical_injective(&s).unwrap_err();
    assert_eq!(collapsed, vec![(0, 1), (0, 3), (1, 3)]); // ā = b̄ = d̄

    let enumeration = sigma(&s, &Budgets::default(), false);
    let sg = &enumeration.finite().unwrap().semigroup;
    assert!(find_isomorphism(sg, &right_zero(2).unwrap()).is_some());

    let rz = sigma(&right_zero(2).unwrap(), &Budgets::default(), false);
    assert_eq!(rz.finite().unwrap().semigroup.size(), 1);

    assert!(!is_self_automaton(sg).self_automaton);
    println!("PASS criterion 6: collapse example");
}

#[test]
fn criterion_07_steinberg_counterexample() {
    let start = Instant::now();
    let bundle = steinberg();

    assert_eq!(bundle.that.size(), 11);
    assert_eq!(bundle.s.size(), 36);

    let t = &bundle.t;
    let (a, a2, b) = (
        t.index_of("a").unwrap(),
        t.index_of("a2").unwrap(),
        t.index_of("b").unwrap(),
    );
    assert_eq!(t.mul(b, a), b);
    assert_ne!(a, a2);
    assert_eq!(t.mul(a, a), a2);
    assert_eq!(t.mul(a2, a), a2);

    let s = &bundle.s;
    let x = s.index_of("(b'a',b)").unwrap();
    let y = s.index_of("(1,2)").unwrap();
    assert_eq!(s.mul(x, y), s.index_of("(5,2)").unwrap());

    let square = s.square();
    assert_eq!(square.semigroup.size(), 35);
    assert!(square.semigroup.is_band());
    assert!(s.left_regular().faithful());
    assert!(is_self_dual(s).is_some());
    assert!(!s.is_band());
    assert!(self_automaton_flag(s));
    assert_eq!(is_c_self_automaton(s, &Budgets::default()), Some(true));

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}");
    println!("PASS criterion 7: 36-element counterexample in {elapsed:?}");
}

fn band_corpus() -> Vec<(String, FiniteSemigroup)> {
    let mut bands: Vec<(String, FiniteSemigroup)> = Vec::new();
    for p in 1..=3 {
        for q in 1..=3 {
            bands.push((format!("rect_{p}x{q}"), rectangular_band(p, q).unwrap()));
        }
    }
    for n in 1..=4 {
        bands.push((format!("chain_{n}"), chain_semilattice(n).unwrap()));
    }
    bands.push((
        "rect_2x2*chain_2".into(),
        rectangular_band(2, 2)
            .unwrap()
            .direct_product(&chain_semilattice(2).unwrap()),
    ));
    bands.push((
        "rect_3x3*chain_2".into(),
        rectangular_band(3, 3)
            .unwrap()
            .direct_product(&chain_semilattice(2).unwrap()),
    ));
    bands.push((
        "chain_3*chain_4".into(),
        chain_semilattice(3)
            .unwrap()
            .direct_product(&chain_semilattice(4).unwrap()),
    ));
    bands.push((
        "rect_2x2*rect_2x2".into(),
        rectangular_band(2, 2)
            .unwrap()
            .direct_product(&rectangular_band(2, 2).unwrap()),
    ));
    bands.push((
        "rect_2x3*rect_3x2".into(),
        rectangular_band(2, 3)
            .unwrap()
            .direct_product(&rectangular_band(3, 2).unwrap()),
    ));
    for (p, q) in [(2, 2), (2, 3), (3, 3)] {
        bands.push((
            format!("rect_{p}x{q}+1"),
            adjoin_identity(&rectangular_band(p, q).unwrap()),
        ));
    }
    bands.push((
        "chain_3+1".into(),
        adjoin_identity(&chain_semilattice(3).unwrap()),
    ));
    bands
}

#[test]
fn criterion_08_band_expansion() {
    for (name, band) in band_corpus() {
        assert!(band.is_band(), "{name} must be a band");
        let enumeration = sigma(&band, &Budgets::default(), false);
        let sg = &enumeration
            .finite()
            .unwrap_or_else(|| panic!("{name}: bands are aperiodic"))
            .semigroup;
        assert!(
            self_automaton_flag(sg),
            "{name}: the generated semigroup of a band must be self-automaton"
        );
    }
    println!(
        "PASS criterion 8: band expansion over {} bands",
        band_corpus().len()
    );
}

#[test]
fn criterion_09_product_closure() {
    let factors: Vec<(String, FiniteSemigroup)> = corpus()
        .into_iter()
        .filter(|(_, s)| s.size() <= 4)
        .collect();
    let mut pairs = 0;
    for (an, a) in &factors {
        for (bn, b) in &factors {
            if a.size() * b.size() > 16 || pairs >= 20 {
                continue;
            }
            pairs += 1;
            let product = a.direct_product(b);
            assert_eq!(
                self_automaton_flag(&product),
                self_automaton_flag(a) && self_automaton_flag(b),
                "product closure fails for {an} x {bn}"
            );
        }
    }
    assert!(pairs >= 10, "only {pairs} pairs exercised");
    println!("PASS criterion 9: product closure over {pairs} pairs");
}

#[test]
fn criterion_10_structural_lemma_suite() {
    let mut checked = 0;
    for (name, s) in corpus() {
        if !self_automaton_flag(&s) {
            continue;
        }
        checked += 1;
        let n = s.size();
        let green = s.green();
        let self_dual = is_self_dual(&s).is_some();

        // (a) xa = a forces a to be idempotent.
        for x in 0..n {
            for a in 0..n {
                if s.mul(x, a) == a {
                    assert!(s.is_idempotent(a), "{name}: xa=a with a not idempotent");
                }
            }
        }
        // (b) non-idempotents have trivial L-classes.
        for a in 0..n {
            if !s.is_idempotent(a) {
                let class = &green.l_classes[green.l_class_of[a]];
                assert_eq!(class.len(), 1, "{name}: fat L-class at non-idempotent");
            }
        }
        if self_dual {
            // (c) ax = a forces idempotency, and products with a regular
            // factor are idempotent.
            for a in 0..n {
                for x in 0..n {
                    if s.mul(a, x) == a {
                        assert!(s.is_idempotent(a), "{name}: ax=a with a not idempotent");
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    if green.regular[x] || green.regular[y] {
                        let z = s.mul(x, y);
                        assert!(s.is_idempotent(z), "{name}: regular product not idempotent");
                    }
                }
            }
            // (d) if additionally S² = S, the semigroup is a band.
            if s.square().semigroup.size() == n {
                assert!(s.is_band(), "{name}: S²=S self-dual must be a band");
            }
        }
    }
    assert!(
        checked >= 8,
        "only {checked} self-automaton semigroups in the corpus"
    );
    println!("PASS criterion 10: structural lemmas over {checked} semigroups");
}

#[test]
fn criterion_11_nilpotency_shift() {
    for k in [3, 4, 5] {
        let s = nilpotent_monogenic(k).unwrap();
        let enumeration = sigma(&s, &Budgets::default(), false);
        let class = enumeration
            .finite()
            .unwrap()
            .semigroup
            .nilpotency_class()
            .unwrap();
        assert_eq!(class, k - 1, "nilpotent_monogenic({k})");
    }
    println!("PASS criterion 11: nilpotency class drops by one");
}

#[test]
fn criterion_12_zero_union_search() {
    let mut found = Vec::new();
    for k in 2..=5 {
        for m in 1..=6 {
            for merge in [false, true] {
                let s = zero_union(
                    &nilpotent_monogenic(k).unwrap(),
                    &right_zero(m).unwrap(),
                    merge,
                );
                if let SigmaResult::Finite(enumeration) = sigma(&s, &Budgets::default(), false) {
                    let sg = &enumeration.semigroup;
                    if sg.size() == s.size() && find_isomorphism(&s, sg).is_none() {
                        found.push((k, m, merge));
                    }
                }
            }
        }
    }
    assert!(
        !found.is_empty(),
        "no zero-union with |S| = |Σ| but S not isomorphic to Σ"
    );
    println!("PASS criterion 12: zero-union witnesses (k, m, merged) = {found:?}");
}

fn random_automaton(rng: &mut StdRng) -> MealyAutomaton {
    let states = rng.random_range(2..=5);
    let symbols = rng.random_range(2..=3);
    let delta = (0..states)
        .map(|_| {
            (0..symbols)
                .map(|_| (rng.random_range(0..states), rng.random_range(0..symbols)))
                .collect()
        })
        .collect();
    MealyAutomaton::new(
        (0..states).map(|q| format!("q{q}")).collect(),
        (0..symbols).map(|b| format!("s{b}")).collect(),
        delta,
    )
    .unwrap()
}

/// First sequence (shortest, then lexicographic) on which the two actions
/// differ, trying every sequence of length 1..=cap.
fn brute_force_distinguish(
    a: &MealyAutomaton,
    u: &CompositeState,
    v: &CompositeState,
    cap: usize,
) -> Option<Vec<usize>> {
    let symbols = a.alphabet_len();
    let mut level: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..cap {
        let mut next_level = Vec::new();
        for seq in &level {
            for b in 0..symbols {
                let mut candidate = seq.clone();
                candidate.push(b);
                if a.act(u, &candidate).unwrap() != a.act(v, &candidate).unwrap() {
                    return Some(candidate);
                }
                next_level.push(candidate);
            }
        }
        level = next_level;
    }
    None
}

#[test]
fn criterion_13_oracle_equivalence() {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut pairs_checked = 0;
    let mut automata_used = 0;
    while automata_used < 12 {
        let a = random_automaton(&mut rng);
        automata_used += 1;
        for _ in 0..10 {
            let into_word = |rng: &mut StdRng| {
                let len = rng.random_range(1..=3);
                CompositeState::new(
                    (0..len)
                        .map(|_| rng.random_range(0..a.state_count()))
                        .collect(),
                )
                .unwrap()
            };
            let u = into_word(&mut rng);
            let v = into_word(&mut rng);
            let bound = a
                .state_count()
                .pow(u.len() as u32)
                .saturating_mul(a.state_count().pow(v.len() as u32));
            let cap = bound.min(8);

            let decision = a.words_equal(&u, &v);
            let oracle = brute_force_distinguish(&a, &u, &v, cap);
            match (&decision, &oracle) {
                (Equivalence::Equal, None) => {}
                (Equivalence::Distinct { witness }, Some(expected)) => {
                    assert_eq!(witness, expected, "witness mismatch");
                    assert_ne!(a.act(&u, witness).unwrap(), a.act(&v, witness).unwrap());
                }
                other => panic!("oracle disagreement: {other:?}"),
            }

            let keys_equal = a.minimize_pointed(&u) == a.minimize_pointed(&v);
            assert_eq!(keys_equal, decision.is_equal(), "key/bisimulation mismatch");
            pairs_checked += 1;
        }
    }
    assert!(pairs_checked >= 100);
    println!(
        "PASS criterion 13: {pairs_checked} word pairs over {automata_used} automata, zero disagreements"
    );
}

#[test]
fn cayley_automata_of_corpus_members_are_well_formed() {
    for (name, s) in corpus() {
        let a = cayley_automaton(&s);
        assert_eq!(a.state_count(), s.size(), "{name}");
        assert_eq!(a.alphabet_len(), s.size(), "{name}");
    }
}
