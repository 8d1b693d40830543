//! Classification of 2-bridge knots and links by reduced fractions, and the
//! correspondence between word classes and knot/link classes. K_{p/q} and
//! K_{p'/q'} name the same knot or link exactly when q' = q and p' is
//! congruent to one of ±p^{±1} modulo q; mirror images are identified.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{even_expansion, eval_cf, Fraction};
use crate::words::{class_of, expand, ExpandedWord, WordClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Knot,
    Link,
    Unknot,
}

/// A 2-bridge knot or link up to equivalence (including mirror images),
/// identified by the canonical numerator: the least element of
/// {±p^{±1} mod q} in (0, q). The unknot is the distinguished q = 1 class.
// The derived order (q, then canonical p) gives deterministic listings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeClass {
    q: BigInt,
    p_canonical: BigInt,
    kind: Kind,
}

fn modinv(p: &BigInt, q: &BigInt) -> BigInt {
    let ext = p.extended_gcd(q);
    debug_assert!(ext.gcd.is_one());
    ext.x.mod_floor(q)
}

impl TwoBridgeClass {
    pub fn unknot() -> Self {
        TwoBridgeClass {
            q: BigInt::one(),
            p_canonical: BigInt::zero(),
            kind: Kind::Unknot,
        }
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The canonical numerator in (0, q); zero for the unknot.
    pub fn p_canonical(&self) -> &BigInt {
        &self.p_canonical
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_knot(&self) -> bool {
        self.kind == Kind::Knot
    }

    pub fn is_unknot(&self) -> bool {
        self.kind == Kind::Unknot
    }

    /// The canonical fraction p/q (1/1 for the unknot).
    pub fn fraction(&self) -> Fraction {
        if self.is_unknot() {
            return Fraction::new(BigInt::one(), BigInt::one()).expect("1/1");
        }
        Fraction::new(self.p_canonical.clone(), self.q.clone()).expect("reduced by construction")
    }
}

impl fmt::Display for TwoBridgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unknot() {
            write!(f, "unknot")
        } else {
            write!(f, "K({}/{})", self.p_canonical, self.q)
        }
    }
}

impl Serialize for TwoBridgeClass {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("TwoBridgeClass", 2)?;
        s.serialize_field("fraction", &self.fraction().to_string())?;
        s.serialize_field("kind", &self.kind)?;
        s.end()
    }
}

/// The equivalence class of the knot or link named by a reduced fraction.
/// Denominator 1 yields the unknot.
pub fn knot_class(f: &Fraction) -> TwoBridgeClass {
    let q = f.den().clone();
    if q.is_one() {
        return TwoBridgeClass::unknot();
    }
    let p = f.num().mod_floor(&q);
    let inv = modinv(&p, &q);
    let candidates = [p.clone(), &q - &p, inv.clone(), &q - &inv];
    let p_canonical = candidates.into_iter().min().expect("four candidates");
    let kind = if q.is_odd() { Kind::Knot } else { Kind::Link };
    TwoBridgeClass {
        q,
        p_canonical,
        kind,
    }
}

/// Whether two fractions name equivalent 2-bridge knots/links.
pub fn equivalent(f1: &Fraction, f2: &Fraction) -> bool {
    knot_class(f1) == knot_class(f2)
}

/// The value 0+[a] of an expanded word as a reduced fraction.
pub fn word_fraction(a: &ExpandedWord) -> Fraction {
    let entries: Vec<BigInt> = a.entries().iter().map(|&e| BigInt::from(e)).collect();
    eval_cf(&BigInt::zero(), &entries).expect("expanded words never hit a zero tail")
}

/// The knot or link class of an expanded word: the class of 0+[a].
/// Well-defined on word classes.
pub fn phi(a: &ExpandedWord) -> TwoBridgeClass {
    knot_class(&word_fraction(a))
}

/// The unique even-length word class mapping to the given knot.
pub fn phi_inverse_knot(k: &TwoBridgeClass) -> Result<WordClass> {
    if k.kind() != Kind::Knot {
        return Err(Error::NotAKnot(k.to_string()));
    }
    // Of the mirror pair p and q - p, exactly one is even (q is odd), and the
    // expansion of the even one over an odd denominator in (0, 1) has
    // integer part 0, so its word evaluates to the fraction itself.
    let p = if k.p_canonical().is_even() {
        k.p_canonical().clone()
    } else {
        k.q() - k.p_canonical()
    };
    let f = Fraction::new(p, k.q().clone()).expect("reduced");
    let exps = even_expansion(&f);
    debug_assert_eq!(exps.len(), 1);
    debug_assert!(exps[0].integer_part.is_zero());
    Ok(class_of(&expand(&exps[0].word)))
}

/// The two odd-length word classes mapping to the given link, with a flag for
/// the degenerate q = 2 case where the two coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkPreimage {
    pub classes: (WordClass, WordClass),
    pub coincide: bool,
}

pub fn phi_inverse_link(k: &TwoBridgeClass) -> Result<LinkPreimage> {
    if k.kind() != Kind::Link {
        return Err(Error::NotALink(k.to_string()));
    }
    // The floor expansions of p/q and (q-p)/q are, up to negation, the two
    // expansions of p/q with an even denominator: if 1+[b] = p/q then
    // 0+[-b] = (q-p)/q, and the floor expansion there is unique.
    let class_for = |p: BigInt| -> WordClass {
        let f = Fraction::new(p, k.q().clone()).expect("reduced");
        let exps = even_expansion(&f);
        let zero_part = exps
            .iter()
            .find(|e| e.integer_part.is_zero())
            .expect("a fraction in (0,1) has a floor expansion with integer part 0");
        class_of(&expand(&zero_part.word))
    };
    let first = class_for(k.p_canonical().clone());
    let second = class_for(k.q() - k.p_canonical());
    let coincide = first == second;
    Ok(LinkPreimage {
        classes: (first, second),
        coincide,
    })
}
