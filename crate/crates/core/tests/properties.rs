//! Randomized invariants: round trips and algebraic laws over generated
//! words and fractions.

use proptest::prelude::*;

use twobridge::bridge::{equivalent, phi, phi_inverse_knot, word_fraction};
use twobridge::rational::even_expansion;
use twobridge::words::{class_of, expand, maximal_components, ConnectorWord};
use twobridge::{ExpandedWord, Fraction};

/// Strategy: a valid expanded word, built by the same grammar the validator
/// enforces (nonzero ends, zeros flanked by equal entries).
fn expanded_word(max_len: usize) -> impl Strategy<Value = ExpandedWord> {
    prop::collection::vec(prop_oneof![Just(2i8), Just(0), Just(-2)], 1..=max_len).prop_map(|raw| {
        let mut entries: Vec<i8> = Vec::with_capacity(raw.len());
        for e in raw {
            if entries.last() == Some(&0) {
                // The entry after a zero must equal the one before it.
                let flank = entries[entries.len() - 2];
                entries.push(flank);
            } else if e == 0 {
                // A zero is only legal after a nonzero entry.
                match entries.last() {
                    Some(_) => entries.push(0),
                    None => entries.push(2),
                }
            } else {
                entries.push(e);
            }
        }
        if entries.last() == Some(&0) {
            let flank = entries[entries.len() - 2];
            entries.push(flank);
        }
        ExpandedWord::new(entries).expect("constructed by the grammar")
    })
}

proptest! {
    #[test]
    fn contract_expand_round_trip(w in expanded_word(24)) {
        prop_assert_eq!(expand(&w.contract()), w);
    }

    #[test]
    fn display_parse_round_trip(w in expanded_word(24)) {
        let shown = w.to_string();
        let back: ExpandedWord = shown.parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn class_operations_are_involutions(w in expanded_word(24)) {
        prop_assert_eq!(w.negated().negated(), w.clone());
        prop_assert_eq!(w.reversed().reversed(), w.clone());
        let c = class_of(&w);
        prop_assert_eq!(class_of(&w.negated()), c.clone());
        prop_assert_eq!(class_of(&w.reversed()), c.clone());
        prop_assert_eq!(class_of(c.canonical()), c);
    }

    #[test]
    fn components_concatenate(w in expanded_word(24)) {
        let parts = maximal_components(&w);
        let mut entries = Vec::new();
        for p in &parts {
            entries.extend_from_slice(&p.word());
        }
        prop_assert_eq!(ExpandedWord::new(entries).unwrap(), w);
    }

    #[test]
    fn connector_value_word_round_trip(v in -30i64..=30) {
        let k = ConnectorWord::new(v);
        prop_assert_eq!(ConnectorWord::from_word(&k.word()), Some(k));
    }

    #[test]
    fn expansion_round_trip(p in 1i64..400, q in 1i64..400) {
        let f = Fraction::from_i64(p, q).unwrap();
        for e in even_expansion(&f) {
            prop_assert_eq!(e.eval().unwrap(), f.clone());
        }
    }

    #[test]
    fn phi_respects_class_and_inverts(w in expanded_word(16)) {
        let k = phi(&w);
        prop_assert_eq!(phi(&w.negated()), k.clone());
        prop_assert_eq!(phi(&w.reversed()), k.clone());
        if w.len() % 2 == 0 {
            prop_assert_eq!(phi_inverse_knot(&k).unwrap(), class_of(&w));
        }
        // The class fraction is equivalent to the word's own value.
        prop_assert!(equivalent(&k.fraction(), &word_fraction(&w)));
    }
}
