use num_bigint::BigInt;
use proptest::prelude::*;

use shadow_bracket::bracket::{closure, power};
use shadow_bracket::oracle::{
    classify_boundary, compile_word, enumerate_states, enumerate_states_with, smooth,
    EnumerationOptions, StateSum, TangleLetter, TangleWord,
};
use shadow_bracket::tl3::{multiply, TlElement};
use shadow_bracket::{BracketVector, Generator, Polynomial};

fn word_strategy(max_len: usize) -> impl Strategy<Value = TangleWord> {
    prop::collection::vec(
        prop::sample::select(TangleLetter::ALL.to_vec()),
        0..=max_len,
    )
    .prop_map(TangleWord)
}

/// Word of cap letters realising each basis element.
fn element_word(e: TlElement) -> Vec<TangleLetter> {
    use TangleLetter::*;
    match e {
        TlElement::Id3 => vec![],
        TlElement::U1 => vec![U1Cap],
        TlElement::U2 => vec![U2Cap],
        TlElement::R => vec![U2Cap, U1Cap],
        TlElement::S => vec![U1Cap, U2Cap],
    }
}

#[test]
fn multiplication_table_matches_glued_diagrams() {
    for a in TlElement::ALL {
        for b in TlElement::ALL {
            let mut letters = element_word(a);
            letters.extend(element_word(b));
            let oracle = enumerate_states(&compile_word(&TangleWord(letters)))
                .unwrap()
                .into_tangle()
                .unwrap();
            let prod = multiply(a, b);
            let expected = BracketVector::basis(prod.element)
                .scale(&Polynomial::monomial(1, prod.loops as usize));
            assert_eq!(oracle, expected, "{a}·{b}");
        }
    }
}

#[test]
fn element_diagrams_classify_to_themselves() {
    for e in TlElement::ALL {
        let d = compile_word(&TangleWord(element_word(e)));
        let s = smooth(&d, &[]).unwrap();
        assert_eq!(classify_boundary(&s.pairing.unwrap()).unwrap(), e);
        assert_eq!(s.loops, 0);
    }
}

#[test]
fn generator_powers_match_algebra() {
    for g in Generator::ALL {
        let max_n = match g {
            Generator::T => 6,
            Generator::C => 5,
            Generator::E => 4,
        };
        for n in 0..=max_n {
            let d = g.power_diagram(n);
            assert_eq!(d.crossing_count(), g.crossings() * n);
            let expected = power(&g.tuple(), n);
            assert_eq!(
                enumerate_states(&d).unwrap(),
                StateSum::Tangle(expected.clone()),
                "{g}^{n}"
            );
            assert_eq!(
                enumerate_states(&d.closure()).unwrap(),
                StateSum::Closed(closure(&expected)),
                "closure of {g}^{n}"
            );
        }
    }
}

#[test]
fn t_power_diagrams_equal_compiled_words() {
    let t = Generator::T.word().unwrap();
    for n in 0..=4 {
        assert_eq!(Generator::T.power_diagram(n), compile_word(&t.repeat(n)));
    }
}

#[test]
fn sequential_and_parallel_agree_on_a_large_diagram() {
    let d = Generator::E.power_diagram(5);
    let seq = enumerate_states_with(
        &d,
        EnumerationOptions {
            parallel: false,
            ..Default::default()
        },
    );
    let par = enumerate_states_with(
        &d,
        EnumerationOptions {
            parallel: true,
            ..Default::default()
        },
    );
    assert_eq!(seq, par);
    assert_eq!(
        seq.unwrap(),
        StateSum::Tangle(power(&Generator::E.tuple(), 5))
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn oracle_equals_letter_composition(w in word_strategy(8)) {
        let oracle = enumerate_states(&compile_word(&w)).unwrap();
        prop_assert_eq!(oracle, StateSum::Tangle(w.tuple()));
    }

    #[test]
    fn closed_enumeration_equals_closure(w in word_strategy(8)) {
        let d = compile_word(&w);
        let closed = enumerate_states(&d.closure()).unwrap().into_closed().unwrap();
        prop_assert_eq!(&closed, &closure(&w.tuple()));
        prop_assert_eq!(closed.coeff(0), BigInt::from(0));
    }

    #[test]
    fn state_count_is_two_to_the_crossings(w in word_strategy(8)) {
        let d = compile_word(&w);
        let v = enumerate_states(&d).unwrap().into_tangle().unwrap();
        let crossings = w.letters().iter().filter(|l| matches!(l, TangleLetter::X1 | TangleLetter::X2)).count();
        prop_assert_eq!(d.crossing_count(), crossings);
        prop_assert_eq!(v.state_count(), BigInt::from(1u64 << crossings));
    }

    #[test]
    fn crossing_order_does_not_matter(w in word_strategy(8), seed in any::<u64>()) {
        let d = compile_word(&w);
        let mut order: Vec<usize> = (0..d.crossing_count()).collect();
        // Fisher-Yates with a small LCG so the permutation follows the seed.
        let mut state = seed;
        for i in (1..order.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let permuted = d.permute_crossings(&order);
        prop_assert_eq!(enumerate_states(&permuted).unwrap(), enumerate_states(&d).unwrap());
    }
}
