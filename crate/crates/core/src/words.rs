//! Expanded even vectors: words over {-2, 0, 2} with nonzero ends in which
//! every zero sits between two equal entries. These are the computational
//! normal form for 2-bridge knots and links. The module also provides the
//! equivalence classes under negation and reversal, the zero
//! insertion/contraction maps to and from nonzero even words, and the
//! decomposition of a word into maximal connector components.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::EvenWord;

/// A member of the set of expanded even vectors: entries in {-2, 0, 2},
/// nonzero first and last entry, and every 0 flanked by two equal entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpandedWord {
    entries: Vec<i8>,
}

impl ExpandedWord {
    /// Validates membership. The empty word is rejected; the unknot is
    /// represented elsewhere, not as a word.
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        for (i, &e) in entries.iter().enumerate() {
            if e != 2 && e != 0 && e != -2 {
                return Err(Error::InvalidWord(format!("entry {e} not in {{-2, 0, 2}}")));
            }
            if e == 0 {
                let flanked = i > 0
                    && i + 1 < entries.len()
                    && entries[i - 1] == entries[i + 1]
                    && entries[i - 1] != 0;
                if !flanked {
                    return Err(Error::InvalidWord(format!(
                        "zero at index {i} is not flanked by two equal nonzero entries"
                    )));
                }
            }
        }
        Ok(ExpandedWord { entries })
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Entry-wise negation; stays in the set.
    pub fn negated(&self) -> Self {
        ExpandedWord {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Reversal; stays in the set.
    pub fn reversed(&self) -> Self {
        ExpandedWord {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    /// Concatenation of validated pieces, revalidated as a whole (the junction
    /// can create an unflanked zero).
    pub fn concat(parts: &[&[i8]]) -> Result<Self> {
        ExpandedWord::new(parts.concat())
    }

    /// Deletes zeros by merging their neighbors, yielding the unique nonzero
    /// even word with the same continued-fraction value.
    pub fn contract(&self) -> EvenWord {
        let mut out: Vec<BigInt> = Vec::new();
        let mut after_zero = false;
        for &e in &self.entries {
            if e == 0 {
                after_zero = true;
                continue;
            }
            if after_zero {
                // [x, 0, y] -> [x + y]; both flanks share a sign, so the
                // merged entry is nonzero.
                *out.last_mut().expect("zero is never first") += e;
            } else {
                out.push(BigInt::from(e));
            }
            after_zero = false;
        }
        EvenWord::new(out).expect("contraction of an expanded word is a nonzero even word")
    }
}

/// Replaces each entry ±2k by k copies of ±2 separated by zeros. Inverse of
/// [`ExpandedWord::contract`]; preserves the continued-fraction value.
pub fn expand(w: &EvenWord) -> ExpandedWord {
    let mut entries = Vec::new();
    for a in w.entries() {
        let sign: i8 = if a.is_negative() { -2 } else { 2 };
        let k = (a.abs() / 2u8)
            .to_usize()
            .expect("partial quotients of practical words fit in usize");
        for j in 0..k {
            if j > 0 {
                entries.push(0);
            }
            entries.push(sign);
        }
    }
    ExpandedWord::new(entries).expect("expansion of a nonzero even word is an expanded word")
}

impl fmt::Display for ExpandedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for ExpandedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidWord(format!("expected [..] form, got {s:?}")))?;
        let mut entries = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::InvalidWord(format!("empty entry in {s:?}")));
            }
            let v: i8 = tok
                .parse()
                .map_err(|_| Error::InvalidWord(format!("bad entry {tok:?}")))?;
            entries.push(v);
        }
        ExpandedWord::new(entries)
    }
}

impl Serialize for ExpandedWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExpandedWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Rank under the entry order 2 < 0 < -2 used for canonical representatives.
fn entry_rank(e: i8) -> u8 {
    match e {
        2 => 0,
        0 => 1,
        _ => 2,
    }
}

fn rank_key(w: &ExpandedWord) -> Vec<u8> {
    w.entries().iter().map(|&e| entry_rank(e)).collect()
}

/// Knot or link, read off the parity of the word length (even is a knot).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WordParity {
    Knot,
    Link,
}

/// Equivalence class of an expanded word under negation and reversal,
/// identified by its canonical representative: the lexicographically smallest
/// of {a, -a, a⁻¹, -a⁻¹} under the entry order 2 < 0 < -2. The canonical word
/// always starts with 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordClass {
    canonical: ExpandedWord,
}

impl WordClass {
    pub fn canonical(&self) -> &ExpandedWord {
        &self.canonical
    }

    pub fn parity(&self) -> WordParity {
        if self.canonical.len() % 2 == 0 {
            WordParity::Knot
        } else {
            WordParity::Link
        }
    }

    /// The distinct members of the class, canonical first, in the 2 < 0 < -2
    /// lexicographic order.
    pub fn representatives(&self) -> Vec<ExpandedWord> {
        let a = &self.canonical;
        let mut reps = vec![
            a.clone(),
            a.negated(),
            a.reversed(),
            a.negated().reversed(),
        ];
        reps.sort_by_key(rank_key);
        reps.dedup();
        reps
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

impl Serialize for WordClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.canonical.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WordClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = ExpandedWord::deserialize(deserializer)?;
        Ok(class_of(&w))
    }
}

/// The equivalence class of `a` under negation and reversal.
pub fn class_of(a: &ExpandedWord) -> WordClass {
    let canonical = [
        a.clone(),
        a.negated(),
        a.reversed(),
        a.negated().reversed(),
    ]
    .into_iter()
    .min_by_key(rank_key)
    .expect("four candidates");
    WordClass { canonical }
}

/// A connector: the word (0) for value 0, or ±(2,0,2,…,0,2) whose entries sum
/// to twice the stored value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConnectorWord {
    value: i64,
}

impl ConnectorWord {
    pub fn new(value: i64) -> Self {
        ConnectorWord { value }
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    /// The word form: (0), or |c| copies of ±2 separated by zeros.
    pub fn word(&self) -> Vec<i8> {
        if self.value == 0 {
            return vec![0];
        }
        let sign: i8 = if self.value > 0 { 2 } else { -2 };
        let k = self.value.unsigned_abs() as usize;
        let mut out = Vec::with_capacity(2 * k - 1);
        for j in 0..k {
            if j > 0 {
                out.push(0);
            }
            out.push(sign);
        }
        out
    }

    /// Length of the word form: 1 for value 0, else 2|c| - 1.
    pub fn word_len(&self) -> usize {
        if self.value == 0 {
            1
        } else {
            2 * self.value.unsigned_abs() as usize - 1
        }
    }

    /// Reads a connector back from its word form; `None` if the slice is not
    /// a connector word.
    pub fn from_word(w: &[i8]) -> Option<Self> {
        if w == [0] {
            return Some(ConnectorWord::new(0));
        }
        let first = *w.first()?;
        if first == 0 || w.len() % 2 == 0 {
            return None;
        }
        for (i, &e) in w.iter().enumerate() {
            let want = if i % 2 == 0 { first } else { 0 };
            if e != want {
                return None;
            }
        }
        Some(ConnectorWord::new(
            (first as i64 / 2) * ((w.len() / 2) as i64 + 1),
        ))
    }
}

impl fmt::Display for ConnectorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.word().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Index ranges of the maximal connector-form runs of a slice.
pub(crate) fn component_ranges(entries: &[i8]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < entries.len() {
        let start = i;
        let sign = entries[i];
        i += 1;
        while i + 1 < entries.len() && entries[i] == 0 && entries[i + 1] == sign {
            i += 2;
        }
        out.push((start, i));
    }
    out
}

/// Splits a word into its maximal connector-form runs. Concatenating the
/// component words reproduces the input; (0) never appears since every zero
/// of an expanded word is attached to equal neighbors.
pub fn maximal_components(a: &ExpandedWord) -> Vec<ConnectorWord> {
    let e = a.entries();
    let mut out = Vec::new();
    let mut i = 0;
    while i < e.len() {
        let sign = e[i];
        let mut k: i64 = 1;
        i += 1;
        while i + 1 < e.len() && e[i] == 0 && e[i + 1] == sign {
            k += 1;
            i += 2;
        }
        out.push(ConnectorWord::new(if sign > 0 { k } else { -k }));
    }
    out
}
