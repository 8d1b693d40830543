//! Reduced fractions with arbitrary-precision integers and the even
//! continued-fraction expansion produced by the generalized Euclidean
//! algorithm.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced fraction `num/den` with `den >= 1`. The sign lives in the
/// numerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    /// Builds a fraction from any integer pair, reducing and normalizing the
    /// sign. The denominator must be nonzero.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidFraction("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Fraction { num, den })
    }

    pub fn from_i64(num: i64, den: i64) -> Result<Self> {
        Fraction::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn integer(n: BigInt) -> Self {
        Fraction { num: n, den: BigInt::one() }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn neg(&self) -> Self {
        Fraction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Parses `"p/q"` or a bare integer `"p"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |_| Error::InvalidFraction(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(bad)?;
                let q = BigInt::from_str(q.trim()).map_err(bad)?;
                Fraction::new(p, q)
            }
            None => Ok(Fraction::integer(BigInt::from_str(s.trim()).map_err(bad)?)),
        }
    }
}

/// A word of nonzero even partial quotients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvenWord {
    entries: Vec<BigInt>,
}

impl EvenWord {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        for e in &entries {
            if e.is_zero() || e.is_odd() {
                return Err(Error::InvalidWord(format!(
                    "entry {e} is not a nonzero even integer"
                )));
            }
        }
        Ok(EvenWord { entries })
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        EvenWord::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for EvenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(self.entries.iter()))
    }
}

/// An expression `r + [a_1, ..., a_n]` with all `a_i` nonzero and even.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CFExpansion {
    pub integer_part: BigInt,
    pub word: EvenWord,
}

impl CFExpansion {
    pub fn eval(&self) -> Result<Fraction> {
        eval_cf(&self.integer_part, self.word.entries())
    }
}

pub(crate) fn format_word<'a, I: Iterator<Item = &'a BigInt>>(entries: I) -> String {
    let parts: Vec<String> = entries.map(|e| e.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Evaluates `r + [a_1, ..., a_n]` exactly, folding right to left. Zero
/// entries are allowed; an intermediate zero tail that must be inverted is an
/// error.
pub fn eval_cf(r: &BigInt, word: &[BigInt]) -> Result<Fraction> {
    // Tail value as an unreduced pair (num, den); gcd 1 is preserved by each
    // step a + den/num.
    let mut tail: Option<(BigInt, BigInt)> = None;
    for a in word.iter().rev() {
        tail = Some(match tail {
            None => (a.clone(), BigInt::one()),
            Some((n, d)) => {
                if n.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                (a * &n + d, n)
            }
        });
    }
    let (num, den) = match tail {
        None => (r.clone(), BigInt::one()),
        Some((n, d)) => {
            if n.is_zero() {
                return Err(Error::DivisionByZero);
            }
            (r * &n + d, n)
        }
    };
    Fraction::new(num, den)
}

/// Convenience wrapper over `i64` input.
pub fn eval_cf_i64(r: i64, word: &[i64]) -> Result<Fraction> {
    let w: Vec<BigInt> = word.iter().map(|&a| BigInt::from(a)).collect();
    eval_cf(&BigInt::from(r), &w)
}

enum FirstStep {
    /// Match this parity (true = odd) when there is a choice.
    Parity(bool),
    Floor,
    Ceil,
}

/// One run of the generalized Euclidean algorithm. Every step after the first
/// takes the even partial quotient; the first step is controlled by `first`.
fn euclid_run(p: &BigInt, q: &BigInt, first: FirstStep) -> CFExpansion {
    let mut quotients: Vec<BigInt> = Vec::new();
    let mut prev = p.clone();
    let mut cur = q.clone();
    let mut step = 0usize;
    while !cur.is_zero() {
        let (floor, rem) = prev.div_mod_floor(&cur);
        let a = if rem.is_zero() {
            // Final step: the quotient is forced.
            floor
        } else {
            let ceil = &floor + 1;
            match (step, &first) {
                (0, FirstStep::Floor) => floor,
                (0, FirstStep::Ceil) => ceil,
                (0, FirstStep::Parity(odd)) => {
                    if floor.is_odd() == *odd {
                        floor
                    } else {
                        ceil
                    }
                }
                // Exactly one of floor/ceil is even; all later steps take it.
                _ => {
                    if floor.is_even() {
                        floor
                    } else {
                        ceil
                    }
                }
            }
        };
        let next = &prev - &a * &cur;
        quotients.push(a);
        prev = cur;
        cur = next;
        step += 1;
    }
    let integer_part = quotients.remove(0);
    let word = EvenWord::new(quotients).expect("euclid quotients are nonzero and even");
    CFExpansion { integer_part, word }
}

/// The even continued-fraction expansions of a reduced fraction.
///
/// An odd denominator yields exactly one expansion with an even-length word;
/// an even denominator yields exactly two, with odd-length words, whose
/// integer parts are the floor and the ceiling of the fraction.
pub fn even_expansion(f: &Fraction) -> Vec<CFExpansion> {
    let p = f.num();
    let q = f.den();
    if q.is_odd() {
        vec![euclid_run(p, q, FirstStep::Parity(p.is_odd()))]
    } else {
        vec![
            euclid_run(p, q, FirstStep::Floor),
            euclid_run(p, q, FirstStep::Ceil),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(p: i64, q: i64) -> Fraction {
        Fraction::from_i64(p, q).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_cf_i64(0, &[2, -2, 0, -2]).unwrap(), frac(4, 7));
        assert_eq!(eval_cf_i64(0, &[]).unwrap(), frac(0, 1));
        assert_eq!(eval_cf_i64(0, &[2, 2, -2, 2, 2]).unwrap(), frac(11, 30));
        assert_eq!(eval_cf_i64(0, &[2, 2]).unwrap(), frac(2, 5));
        assert_eq!(eval_cf_i64(0, &[2, -4, 2, -4]).unwrap(), frac(24, 41));
    }

    #[test]
    fn eval_zero_tail_errors() {
        // [0] forces inverting a zero tail.
        assert_eq!(eval_cf_i64(0, &[0]), Err(Error::DivisionByZero));
        assert_eq!(eval_cf_i64(3, &[1, -1]), Err(Error::DivisionByZero));
    }

    #[test]
    fn expansion_examples() {
        let e = even_expansion(&frac(4, 7));
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].integer_part, BigInt::from(0));
        assert_eq!(e[0].word, EvenWord::from_i64s(&[2, -4]).unwrap());

        let e = even_expansion(&frac(1, 2));
        assert_eq!(e.len(), 2);
        assert_eq!(e[0].integer_part, BigInt::from(0));
        assert_eq!(e[0].word, EvenWord::from_i64s(&[2]).unwrap());
        assert_eq!(e[1].integer_part, BigInt::from(1));
        assert_eq!(e[1].word, EvenWord::from_i64s(&[-2]).unwrap());

        let e = even_expansion(&frac(24, 41));
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].word, EvenWord::from_i64s(&[2, -4, 2, -4]).unwrap());
    }

    #[test]
    fn expansion_of_integers() {
        let e = even_expansion(&frac(5, 1));
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].integer_part, BigInt::from(5));
        assert!(e[0].word.is_empty());
    }

    #[test]
    fn negative_fractions() {
        let e = even_expansion(&frac(-1, 3));
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].eval().unwrap(), frac(-1, 3));
        assert!(e[0].word.len() % 2 == 0);
    }

    #[test]
    fn lemma_parity_sweep() {
        // Lemma: q odd gives one expansion, even word, r ≡ p (mod 2);
        // q even gives two, odd words, integer parts floor and ceiling.
        for q in 1i64..=60 {
            for p in -2 * q..=2 * q {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let f = frac(p, q);
                let exps = even_expansion(&f);
                if q % 2 == 1 {
                    assert_eq!(exps.len(), 1, "p/q = {p}/{q}");
                    assert_eq!(exps[0].word.len() % 2, 0);
                    let r = &exps[0].integer_part;
                    assert_eq!((r - BigInt::from(p)).is_even(), true);
                } else {
                    assert_eq!(exps.len(), 2, "p/q = {p}/{q}");
                    for e in &exps {
                        assert_eq!(e.word.len() % 2, 1);
                    }
                    let floor = BigInt::from(p).div_mod_floor(&BigInt::from(q)).0;
                    assert_eq!(exps[0].integer_part, floor);
                    assert_eq!(exps[1].integer_part, &floor + 1);
                }
                for e in &exps {
                    assert_eq!(e.eval().unwrap(), f, "round trip {p}/{q}");
                    // The last partial quotient is never ±1.
                    if let Some(last) = e.word.entries().last() {
                        assert!(last.abs() >= BigInt::from(2));
                    }
                }
            }
        }
    }

    #[test]
    fn negation_rule() {
        // 0 + [-a] = -(0 + [a])
        for word in [&[2i64, 2][..], &[2, -4, 2], &[4, 2, -2, 6]] {
            let v = eval_cf_i64(0, word).unwrap();
            let neg: Vec<i64> = word.iter().map(|a| -a).collect();
            assert_eq!(eval_cf_i64(0, &neg).unwrap(), v.neg());
        }
    }

    #[test]
    fn fraction_parsing() {
        assert_eq!("4/7".parse::<Fraction>().unwrap(), frac(4, 7));
        assert_eq!("-3/5".parse::<Fraction>().unwrap(), frac(-3, 5));
        assert_eq!("6/-10".parse::<Fraction>().unwrap(), frac(-3, 5));
        assert_eq!("7".parse::<Fraction>().unwrap(), frac(7, 1));
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("x/2".parse::<Fraction>().is_err());
        assert_eq!(frac(4, 7).to_string(), "4/7");
    }
}
