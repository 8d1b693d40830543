//! The tile/connector parsing engine. A word c parses with respect to a tile
//! word a when c = (ε₁a, 2c₁, ε₂a⁻¹, 2c₂, ε₃a, …): tiles alternate between a
//! and its reverse, each carries a sign ε_i with ε₁ = +1, consecutive tiles
//! are separated by a single connector word, and a zero connector forces the
//! adjacent tiles to share a sign. Such a parsing is unique when it exists.
//! The partial order on 2-bridge knots is decided by the class-level variant
//! that ranges over the negation/reversal representatives of both words.

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{ConnectorWord, ExpandedWord, WordClass};

/// What a given entry range of a parsed word is: a signed, oriented tile or a
/// connector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Element {
    Tile {
        index: usize,
        sign: i8,
        forward: bool,
    },
    Connector {
        index: usize,
        value: i64,
    },
}

impl Element {
    pub fn is_tile(&self) -> bool {
        matches!(self, Element::Tile { .. })
    }
}

/// One element of a parsing together with the entry range it occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub element: Element,
}

/// A decomposition of a word into signed alternating-orientation tiles
/// separated by connectors. `signs[i]` is ε_{i+1}; tile i is forward (the
/// tile word itself) when i is even and reversed when i is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsing {
    tile: ExpandedWord,
    signs: Vec<i8>,
    connectors: Vec<ConnectorWord>,
}

impl Parsing {
    pub fn tile(&self) -> &ExpandedWord {
        &self.tile
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn connectors(&self) -> &[ConnectorWord] {
        &self.connectors
    }

    pub fn tile_count(&self) -> usize {
        self.signs.len()
    }

    /// The word occupied by tile i: ±(a or a reversed).
    pub fn tile_word(&self, i: usize) -> ExpandedWord {
        let oriented = if i % 2 == 0 {
            self.tile.clone()
        } else {
            self.tile.reversed()
        };
        if self.signs[i] < 0 {
            oriented.negated()
        } else {
            oriented
        }
    }

    /// Entry ranges of all tiles and connectors, in order.
    pub fn spans(&self) -> Vec<Span> {
        let mut out = Vec::with_capacity(2 * self.signs.len() - 1);
        let mut pos = 0;
        for i in 0..self.signs.len() {
            let end = pos + self.tile.len();
            out.push(Span {
                start: pos,
                end,
                element: Element::Tile {
                    index: i,
                    sign: self.signs[i],
                    forward: i % 2 == 0,
                },
            });
            pos = end;
            if i < self.connectors.len() {
                let c = self.connectors[i];
                let end = pos + c.word_len();
                out.push(Span {
                    start: pos,
                    end,
                    element: Element::Connector {
                        index: i,
                        value: c.value(),
                    },
                });
                pos = end;
            }
        }
        out
    }

    /// Concatenates the tiles and connectors back into the parsed word.
    pub fn reassemble(&self) -> ExpandedWord {
        let mut entries = Vec::new();
        for i in 0..self.signs.len() {
            entries.extend_from_slice(self.tile_word(i).entries());
            if i < self.connectors.len() {
                entries.extend(self.connectors[i].word());
            }
        }
        ExpandedWord::new(entries).expect("a parsing reassembles to a valid word")
    }

    /// Internal element boundaries: position k means "between entries k and
    /// k+1". Paired with whether the element ending there is a tile.
    pub fn boundaries(&self) -> Vec<(usize, bool)> {
        let spans = self.spans();
        spans
            .iter()
            .take(spans.len() - 1)
            .map(|s| (s.end, s.element.is_tile()))
            .collect()
    }
}

impl Serialize for Parsing {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Parsing", 3)?;
        s.serialize_field("tile", &self.tile)?;
        s.serialize_field("signs", &self.signs)?;
        s.serialize_field("connector_values", &self.connectors)?;
        s.end()
    }
}

struct Search<'a> {
    c: &'a [i8],
    fwd: &'a [i8],
    rev: Vec<i8>,
}

impl Search<'_> {
    fn tile_matches(&self, pos: usize, forward: bool, sign: i8) -> bool {
        let tile = if forward { self.fwd } else { &self.rev };
        if pos + tile.len() > self.c.len() {
            return false;
        }
        self.c[pos..pos + tile.len()]
            .iter()
            .zip(tile)
            .all(|(&x, &t)| x == sign * t)
    }

    /// Connector candidates starting at `pos`: (0) if the entry there is
    /// zero, else the odd-length prefixes of the ±(2,0,2,…) run, shortest
    /// first.
    fn connectors_at(&self, pos: usize) -> Vec<ConnectorWord> {
        if self.c[pos] == 0 {
            return vec![ConnectorWord::new(0)];
        }
        let sign = self.c[pos];
        let mut out = Vec::new();
        let mut k: i64 = 1;
        loop {
            out.push(ConnectorWord::new(if sign > 0 { k } else { -k }));
            let zero_at = pos + 2 * k as usize - 1;
            if zero_at + 1 < self.c.len() && self.c[zero_at] == 0 && self.c[zero_at + 1] == sign {
                k += 1;
            } else {
                return out;
            }
        }
    }

    fn go(
        &self,
        pos: usize,
        idx: usize,
        signs: &mut Vec<i8>,
        conns: &mut Vec<ConnectorWord>,
    ) -> bool {
        let sign_choices: &[i8] = if idx == 0 {
            &[1]
        } else if conns.last().map(|c| c.value()) == Some(0) {
            if *signs.last().unwrap() > 0 {
                &[1]
            } else {
                &[-1]
            }
        } else {
            &[1, -1]
        };
        for &s in sign_choices {
            if !self.tile_matches(pos, idx % 2 == 0, s) {
                continue;
            }
            signs.push(s);
            let end = pos + self.fwd.len();
            if end == self.c.len() {
                return true;
            }
            for conn in self.connectors_at(end) {
                let after = end + conn.word_len();
                if after + self.fwd.len() > self.c.len() {
                    continue;
                }
                conns.push(conn);
                if self.go(after, idx + 1, signs, conns) {
                    return true;
                }
                conns.pop();
            }
            signs.pop();
        }
        false
    }
}

/// The unique parsing of `c` with respect to the literal tile word `a` with
/// ε₁ = +1, if one exists.
pub fn parse(c: &ExpandedWord, a: &ExpandedWord) -> Option<Parsing> {
    let search = Search {
        c: c.entries(),
        fwd: a.entries(),
        rev: a.reversed().entries().to_vec(),
    };
    let mut signs = Vec::new();
    let mut conns = Vec::new();
    if search.go(0, 0, &mut signs, &mut conns) {
        Some(Parsing {
            tile: a.clone(),
            signs,
            connectors: conns,
        })
    } else {
        None
    }
}

/// Class-level parsing: some representative of `c_hat` parses with respect to
/// some representative of `a_hat`. Representatives are tried in canonical
/// order, so the result is deterministic; the parsed representative is
/// recovered with [`Parsing::reassemble`].
pub fn parse_class(c_hat: &WordClass, a_hat: &WordClass) -> Option<Parsing> {
    for c in c_hat.representatives() {
        for a in a_hat.representatives() {
            if let Some(p) = parse(&c, &a) {
                return Some(p);
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeamKind {
    Pure,
    Mixed,
}

/// A position where both parsings of the same word have an element boundary.
/// `position` counts the entries before the seam: the seam lies between
/// entries `position` and `position + 1` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Seam {
    pub position: usize,
    pub kind: SeamKind,
}

/// The seams of a word under two parsings of it. Pure seams have tiles on the
/// same side in both parsings; mixed seams do not.
pub fn seams(c: &ExpandedWord, pa: &Parsing, pb: &Parsing) -> Result<Vec<Seam>> {
    if &pa.reassemble() != c || &pb.reassemble() != c {
        return Err(Error::NotADoubleParsing);
    }
    let b_bounds: std::collections::HashMap<usize, bool> = pb.boundaries().into_iter().collect();
    let mut out = Vec::new();
    for (position, a_tile_left) in pa.boundaries() {
        if let Some(&b_tile_left) = b_bounds.get(&position) {
            let kind = if a_tile_left == b_tile_left {
                SeamKind::Pure
            } else {
                SeamKind::Mixed
            };
            out.push(Seam { position, kind });
        }
    }
    Ok(out)
}
