//! Shared fixtures for the integration suites.

use autsg::cayley::{canonical_homomorphism, canonical_injective};
use autsg::constructions::*;
use autsg::{FiniteSemigroup, MealyAutomaton};

/// The named semigroups the property and acceptance suites run over.
pub fn corpus() -> Vec<(String, FiniteSemigroup)> {
    let mut items: Vec<(String, FiniteSemigroup)> = Vec::new();
    let mut add = |name: String, s: FiniteSemigroup| items.push((name, s));

    for n in 1..=5 {
        add(format!("left_zero_{n}"), left_zero(n).unwrap());
    }
    for n in 1..=3 {
        add(format!("right_zero_{n}"), right_zero(n).unwrap());
    }
    for (p, q) in [(2, 2), (2, 3), (3, 3)] {
        add(format!("rect_{p}x{q}"), rectangular_band(p, q).unwrap());
    }
    for n in 1..=4 {
        add(format!("chain_{n}"), chain_semilattice(n).unwrap());
    }
    for n in [2, 3] {
        add(format!("cyclic_{n}"), cyclic_group(n).unwrap());
    }
    for k in [3, 4, 5] {
        add(format!("nilpotent_{k}"), nilpotent_monogenic(k).unwrap());
    }
    add("ex_nonband".into(), example_table(ExampleTable::NonBand));
    add("ex_collapse".into(), example_table(ExampleTable::Collapse));
    add(
        "zero_union_plain".into(),
        zero_union(
            &nilpotent_monogenic(3).unwrap(),
            &right_zero(2).unwrap(),
            false,
        ),
    );
    add(
        "zero_union_merged".into(),
        zero_union(
            &nilpotent_monogenic(3).unwrap(),
            &right_zero(2).unwrap(),
            true,
        ),
    );
    add(
        "tails_lz2".into(),
        tails_construction(&[left_zero(2).unwrap()], &[1]).unwrap(),
    );
    add(
        "rect_2x2_monoid".into(),
        adjoin_identity(&rectangular_band(2, 2).unwrap()),
    );
    add(
        "lz2_x_rz2".into(),
        left_zero(2)
            .unwrap()
            .direct_product(&right_zero(2).unwrap()),
    );
    add(
        "nonband_x_lz2".into(),
        example_table(ExampleTable::NonBand).direct_product(&left_zero(2).unwrap()),
    );

    let bundle = steinberg();
    add("steinberg_t".into(), bundle.t);
    add("steinberg_tprime".into(), bundle.tprime);
    add("steinberg_that".into(), bundle.that);
    add("steinberg_r".into(), bundle.r);
    add("steinberg_s".into(), bundle.s);

    items
}

/// Self-automaton means exactly: the canonical map is injective and a
/// homomorphism.
#[allow(dead_code)]
pub fn self_automaton_flag(s: &FiniteSemigroup) -> bool {
    canonical_injective(s).is_ok() && canonical_homomorphism(s).is_ok()
}

/// Two states a, b over {0, 1}; generates the semigroup presented by
/// `⟨a, b | ab = b²⟩`.
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
