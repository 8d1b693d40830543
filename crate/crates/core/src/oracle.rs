//! Independent brute-force ground truth. Candidate double-parsing words are
//! composed directly from tiles and connectors of one word class and filtered
//! against the other by a small nondeterministic automaton that tracks every
//! way the growing prefix could still extend to a word decomposable into
//! signed alternating tiles of the second class. The automaton is an
//! independent decision procedure: it never calls the parsing engine, so its
//! verdicts cross-check it.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parsing::{parse, seams, Element, Parsing, SeamKind, Span};
use crate::words::{class_of, ExpandedWord, WordClass};

/// Resource limits for the witness search.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Inclusive length bound of the sweep.
    pub max_word_length: usize,
    /// Leaf candidates examined before giving up.
    pub max_candidates: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_word_length: 42,
            max_candidates: 20_000_000,
            time_limit: Duration::from_secs(120),
        }
    }
}

/// Result of a minimal-witness sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    /// All shortest double-parsing words (deduplicated, deterministic order).
    Found {
        length: usize,
        minimal: Vec<ExpandedWord>,
    },
    /// A complete sweep up to the bound found nothing. Definitive whenever
    /// the bound covers the constructive upper-bound length.
    NoneWithinBound { bound: usize },
    /// The candidate or time budget ran out before the sweep completed.
    BudgetExhausted,
}

/// Every expanded word of length ≤ max_len, in length-then-lexicographic
/// order under the entry order 2 < 0 < -2.
pub fn enumerate_s(max_len: usize, even_only: bool) -> Vec<ExpandedWord> {
    fn extend(cur: &mut Vec<i8>, target: usize, out: &mut Vec<ExpandedWord>) {
        if cur.len() == target {
            if *cur.last().unwrap() != 0 {
                out.push(ExpandedWord::new(cur.clone()).unwrap());
            }
            return;
        }
        let last = *cur.last().unwrap();
        for next in [2, 0, -2] {
            if next == 0 && (last == 0 || cur.len() + 1 == target) {
                continue;
            }
            if last == 0 && next != cur[cur.len() - 2] {
                continue;
            }
            cur.push(next);
            extend(cur, target, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for len in 1..=max_len {
        if even_only && len % 2 != 0 {
            continue;
        }
        for start in [2i8, -2] {
            let mut cur = vec![start];
            extend(&mut cur, len, &mut out);
        }
    }
    out
}

/// Automaton states while scanning a prefix against one tile representative.
/// `rep` indexes the representative; tiles alternate orientation starting
/// forward, with free signs except after a zero connector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum NState {
    Tile {
        rep: u8,
        fwd: bool,
        sign: i8,
        pos: u16,
    },
    AfterTile {
        rep: u8,
        fwd: bool,
        sign: i8,
    },
    ConnOdd {
        rep: u8,
        next_fwd: bool,
        c_sign: i8,
    },
    ConnEven {
        rep: u8,
        next_fwd: bool,
        c_sign: i8,
    },
    AfterZeroConn {
        rep: u8,
        next_fwd: bool,
        forced: i8,
    },
}

/// Decides, entry by entry, whether a word can still decompose into signed
/// alternating tiles of any representative of a class. Accepting the full
/// word is equivalent to the class-level parsing relation.
pub struct TileAutomaton {
    reps: Vec<Vec<i8>>,
}

impl TileAutomaton {
    pub fn new(class: &WordClass) -> Self {
        TileAutomaton {
            reps: class
                .representatives()
                .iter()
                .map(|r| r.entries().to_vec())
                .collect(),
        }
    }

    fn entry(&self, rep: u8, fwd: bool, pos: usize) -> i8 {
        let r = &self.reps[rep as usize];
        if fwd {
            r[pos]
        } else {
            r[r.len() - 1 - pos]
        }
    }

    fn tile_len(&self, rep: u8) -> usize {
        self.reps[rep as usize].len()
    }

    fn initial(&self) -> Vec<NState> {
        let mut out = Vec::new();
        for rep in 0..self.reps.len() as u8 {
            for sign in [1i8, -1] {
                out.push(NState::Tile {
                    rep,
                    fwd: true,
                    sign,
                    pos: 0,
                });
            }
        }
        out
    }

    fn start_tile(&self, rep: u8, fwd: bool, sign: i8, e: i8, out: &mut Vec<NState>) {
        if e == sign * self.entry(rep, fwd, 0) {
            if self.tile_len(rep) == 1 {
                out.push(NState::AfterTile { rep, fwd, sign });
            } else {
                out.push(NState::Tile {
                    rep,
                    fwd,
                    sign,
                    pos: 1,
                });
            }
        }
    }

    fn advance(&self, states: &[NState], e: i8) -> Vec<NState> {
        let mut out = Vec::new();
        for &s in states {
            match s {
                NState::Tile {
                    rep,
                    fwd,
                    sign,
                    pos,
                } => {
                    if e == sign * self.entry(rep, fwd, pos as usize) {
                        if pos as usize + 1 == self.tile_len(rep) {
                            out.push(NState::AfterTile { rep, fwd, sign });
                        } else {
                            out.push(NState::Tile {
                                rep,
                                fwd,
                                sign,
                                pos: pos + 1,
                            });
                        }
                    }
                }
                NState::AfterTile { rep, fwd, sign } => {
                    if e == 0 {
                        out.push(NState::AfterZeroConn {
                            rep,
                            next_fwd: !fwd,
                            forced: sign,
                        });
                    } else {
                        out.push(NState::ConnOdd {
                            rep,
                            next_fwd: !fwd,
                            c_sign: e,
                        });
                    }
                }
                NState::ConnOdd {
                    rep,
                    next_fwd,
                    c_sign,
                } => {
                    if e == 0 {
                        out.push(NState::ConnEven {
                            rep,
                            next_fwd,
                            c_sign,
                        });
                    }
                    for sign in [1i8, -1] {
                        self.start_tile(rep, next_fwd, sign, e, &mut out);
                    }
                }
                NState::ConnEven {
                    rep,
                    next_fwd,
                    c_sign,
                } => {
                    if e == c_sign {
                        out.push(NState::ConnOdd {
                            rep,
                            next_fwd,
                            c_sign,
                        });
                    }
                }
                NState::AfterZeroConn {
                    rep,
                    next_fwd,
                    forced,
                } => {
                    self.start_tile(rep, next_fwd, forced, e, &mut out);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn accepting(states: &[NState]) -> bool {
        states.iter().any(|s| matches!(s, NState::AfterTile { .. }))
    }

    /// Full-word membership test: the word decomposes into signed
    /// alternating tiles of the class.
    pub fn accepts(&self, word: &ExpandedWord) -> bool {
        let mut states = self.initial();
        for &e in word.entries() {
            states = self.advance(&states, e);
            if states.is_empty() {
                return false;
            }
        }
        Self::accepting(&states)
    }
}

struct WitnessSearch<'a> {
    tile: Vec<i8>,
    tile_rev: Vec<i8>,
    nfa: &'a TileAutomaton,
    target: usize,
    deadline: Instant,
    candidates_left: u64,
    found: BTreeSet<Vec<i8>>,
    exhausted: bool,
}

impl WitnessSearch<'_> {
    /// Can `rem` entries be exactly filled by k ≥ 1 more tiles preceded by
    /// connectors (first a connector, then tile, then connector, …)?
    fn feasible_tail(&self, rem: usize) -> bool {
        let tl = self.tile.len();
        let mut tiles = 1;
        loop {
            // tiles tiles + tiles connectors of odd length ≥ 1 each.
            let least = tiles * tl + tiles;
            if least > rem {
                return false;
            }
            if (rem - least) % 2 == 0 {
                return true;
            }
            tiles += 1;
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.exhausted {
            return true;
        }
        if self.candidates_left == 0 || Instant::now() >= self.deadline {
            self.exhausted = true;
        }
        self.exhausted
    }

    fn push_entries(
        &self,
        states: &[NState],
        entries: &[i8],
        cur: &mut Vec<i8>,
    ) -> Option<Vec<NState>> {
        let mut s = states.to_vec();
        for &e in entries {
            s = self.nfa.advance(&s, e);
            if s.is_empty() {
                return None;
            }
        }
        cur.extend_from_slice(entries);
        Some(s)
    }

    fn tile_entries(&self, index: usize, sign: i8) -> Vec<i8> {
        let base = if index % 2 == 0 {
            &self.tile
        } else {
            &self.tile_rev
        };
        base.iter().map(|&x| sign * x).collect()
    }

    /// Extends past a completed tile: either the word is done, or a
    /// connector and further tiles follow.
    fn after_tile(&mut self, states: Vec<NState>, cur: &mut Vec<i8>, tile_index: usize, prev_sign: i8) {
        if cur.len() == self.target {
            if self.candidates_left == 0 {
                self.exhausted = true;
                return;
            }
            self.candidates_left -= 1;
            if TileAutomaton::accepting(&states) {
                self.found.insert(cur.clone());
            }
            return;
        }
        if self.out_of_budget() {
            return;
        }
        let room = self.target - cur.len();
        // Connector candidates in deterministic order: value 0, then ±1, ±2…
        let mut conn_words: Vec<(Vec<i8>, bool)> = vec![(vec![0], true)];
        let mut k = 1usize;
        while 2 * k - 1 <= room {
            let mut pos_word = Vec::with_capacity(2 * k - 1);
            for j in 0..k {
                if j > 0 {
                    pos_word.push(0);
                }
                pos_word.push(2);
            }
            let neg_word: Vec<i8> = pos_word.iter().map(|&x| -x).collect();
            conn_words.push((pos_word, false));
            conn_words.push((neg_word, false));
            k += 1;
        }
        for (word, is_zero) in conn_words {
            let after_conn = room.checked_sub(word.len());
            let Some(rem) = after_conn else { continue };
            if rem < self.tile.len() || !self.feasible_tail_tiles(rem) {
                continue;
            }
            let saved = cur.len();
            let Some(conn_states) = self.push_entries(&states, &word, cur) else {
                continue;
            };
            let signs: &[i8] = if is_zero { &[prev_sign] } else { &[1, -1] };
            for &sign in signs {
                let entries = self.tile_entries(tile_index + 1, sign);
                let saved2 = cur.len();
                if let Some(next_states) = self.push_entries(&conn_states, &entries, cur) {
                    self.after_tile(next_states, cur, tile_index + 1, sign);
                    cur.truncate(saved2);
                }
                if self.exhausted {
                    break;
                }
            }
            cur.truncate(saved);
            if self.exhausted {
                return;
            }
        }
    }

    /// Can `rem` entries be exactly k ≥ 1 tiles separated by k-1 connectors?
    fn feasible_tail_tiles(&self, rem: usize) -> bool {
        let tl = self.tile.len();
        let mut tiles = 1usize;
        loop {
            let least = tiles * tl + (tiles - 1);
            if least > rem {
                return false;
            }
            if (rem - tiles * tl) >= tiles - 1 && (rem - tiles * tl + 1 - tiles) % 2 == 0 {
                return true;
            }
            tiles += 1;
        }
    }
}

/// Sweeps lengths from max(|a|, |b|) to the budget bound, shortest first,
/// composing candidates from tiles of `a_hat` and filtering by the automaton
/// of `b_hat`. Returns every shortest witness found.
pub fn search_double_parsing(
    a_hat: &WordClass,
    b_hat: &WordClass,
    budget: &SearchBudget,
) -> SearchOutcome {
    let nfa = TileAutomaton::new(b_hat);
    let a_canon = a_hat.canonical();
    let leads = {
        let mut v = vec![a_canon.clone(), a_canon.reversed()];
        v.dedup();
        v
    };
    let deadline = Instant::now() + budget.time_limit;
    let mut candidates_left = budget.max_candidates;
    let start = a_canon.len().max(b_hat.canonical().len());
    let mut length = start + (start % 2);
    while length <= budget.max_word_length {
        let mut found: BTreeSet<Vec<i8>> = BTreeSet::new();
        for lead in &leads {
            let mut search = WitnessSearch {
                tile: lead.entries().to_vec(),
                tile_rev: lead.reversed().entries().to_vec(),
                nfa: &nfa,
                target: length,
                deadline,
                candidates_left,
                found: BTreeSet::new(),
                exhausted: false,
            };
            if length >= lead.len() {
                let mut cur = Vec::with_capacity(length);
                if let Some(states) =
                    search.push_entries(&nfa.initial(), &search.tile_entries(0, 1), &mut cur)
                {
                    if search.feasible_lead(length) {
                        search.after_tile(states, &mut cur, 0, 1);
                    }
                }
            }
            candidates_left = search.candidates_left;
            if search.exhausted {
                return SearchOutcome::BudgetExhausted;
            }
            found.extend(search.found);
        }
        if !found.is_empty() {
            // Normalize to canonical class representatives.
            let classes: BTreeSet<ExpandedWord> = found
                .into_iter()
                .map(|v| {
                    let word = ExpandedWord::new(v).expect("composed words are valid");
                    class_of(&word).canonical().clone()
                })
                .collect();
            return SearchOutcome::Found {
                length,
                minimal: classes.into_iter().collect(),
            };
        }
        length += 2;
    }
    SearchOutcome::NoneWithinBound {
        bound: budget.max_word_length,
    }
}

impl WitnessSearch<'_> {
    fn feasible_lead(&self, length: usize) -> bool {
        let rem = length - self.tile.len();
        rem == 0 || self.feasible_tail(rem.saturating_sub(0))
    }
}

/// Convenience wrapper: the single shortest witness (first in canonical
/// order), if any.
pub fn minimal_double_parsing(
    a_hat: &WordClass,
    b_hat: &WordClass,
    budget: &SearchBudget,
) -> Result<Option<ExpandedWord>> {
    match search_double_parsing(a_hat, b_hat, budget) {
        SearchOutcome::Found { minimal, .. } => Ok(minimal.into_iter().next()),
        SearchOutcome::NoneWithinBound { .. } => Ok(None),
        SearchOutcome::BudgetExhausted => Err(Error::BudgetExhausted),
    }
}

/// Property report for a minimal double-parsing word: the structural facts
/// that hold of every shortest witness.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub word: String,
    pub no_pure_seams: bool,
    pub connectors_disjoint: bool,
    pub a_connectors_placed: bool,
    pub b_connectors_placed: bool,
    pub lower_left_uniform: bool,
    pub upper_right_uniform: bool,
    pub no_shared_component_a: bool,
    pub no_shared_component_b: bool,
    pub diagonal_signs_matched: bool,
    pub mixed_seam_count: usize,
    pub mixed_seams_zero_or_two: bool,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.no_pure_seams
            && self.connectors_disjoint
            && self.a_connectors_placed
            && self.b_connectors_placed
            && self.lower_left_uniform
            && self.upper_right_uniform
            && self.no_shared_component_a
            && self.no_shared_component_b
            && self.diagonal_signs_matched
            && self.mixed_seams_zero_or_two
    }
}

use crate::words::component_ranges;

/// One pair checked by [`agreement_sweep`]: the decision-procedure verdict
/// against the brute-force sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub a: ExpandedWord,
    pub b: ExpandedWord,
    pub decision: bool,
    pub oracle: bool,
    pub minimal_length: Option<usize>,
    pub agree: bool,
}

/// Cross-checks the upper-bound decision procedure against the brute-force
/// search on every unordered pair of word classes of even length ≤ max_len.
/// The per-pair sweep bound is the constructed witness length when the
/// decision procedure produces one, and at least the budget's bound always.
pub fn agreement_sweep(max_len: usize, budget: &SearchBudget) -> Result<Vec<SweepRecord>> {
    use crate::bridge::phi;
    use crate::order::{construct_upper_bound, upper_bound_exists};

    let classes: BTreeSet<ExpandedWord> = enumerate_s(max_len, true)
        .iter()
        .map(|w| class_of(w).canonical().clone())
        .collect();
    let classes: Vec<ExpandedWord> = classes.into_iter().collect();
    let mut out = Vec::new();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i..] {
            let ka = phi(a);
            let kb = phi(b);
            let cert = upper_bound_exists(&ka, &kb)?;
            let decision = cert.is_some();
            let mut bound = budget.max_word_length;
            if decision {
                let witness = construct_upper_bound(&[ka.clone(), kb.clone()])?;
                bound = bound.max(witness.len());
            }
            let pair_budget = SearchBudget {
                max_word_length: bound,
                ..budget.clone()
            };
            let (oracle, minimal_length) =
                match search_double_parsing(&class_of(a), &class_of(b), &pair_budget) {
                    SearchOutcome::Found { length, .. } => (true, Some(length)),
                    SearchOutcome::NoneWithinBound { .. } => (false, None),
                    SearchOutcome::BudgetExhausted => return Err(Error::BudgetExhausted),
                };
            out.push(SweepRecord {
                a: a.clone(),
                b: b.clone(),
                decision,
                oracle,
                minimal_length,
                agree: decision == oracle,
            });
        }
    }
    Ok(out)
}

/// Strict parsings of the literal word `c` with respect to the class of `t`.
pub fn strict_parse_any(c: &ExpandedWord, t: &ExpandedWord) -> Option<Parsing> {
    class_of(t)
        .representatives()
        .iter()
        .find_map(|r| parse(c, r))
}

fn connector_spans(spans: &[Span]) -> Vec<(usize, usize, usize, i64)> {
    spans
        .iter()
        .filter_map(|s| match s.element {
            Element::Connector { index, value } => Some((s.start, s.end, index, value)),
            _ => None,
        })
        .collect()
}

/// Checks the structural properties of a double parsing of `c` with respect
/// to `a` and `b`: seam purity, connector disjointness and placement, edge
/// uniformity, sign pairing, and the mixed-seam count.
pub fn verify_parsing_lemmas(
    c: &ExpandedWord,
    a: &ExpandedWord,
    b: &ExpandedWord,
) -> Result<LemmaReport> {
    let pa = strict_parse_any(c, a).ok_or(Error::NotADoubleParsing)?;
    let pb = strict_parse_any(c, b).ok_or(Error::NotADoubleParsing)?;
    let seam_list = seams(c, &pa, &pb)?;
    let mixed_seam_count = seam_list
        .iter()
        .filter(|s| s.kind == SeamKind::Mixed)
        .count();
    let no_pure_seams = seam_list.iter().all(|s| s.kind == SeamKind::Mixed);

    let spans_a = pa.spans();
    let spans_b = pb.spans();
    let conns_a = connector_spans(&spans_a);
    let conns_b = connector_spans(&spans_b);

    let connectors_disjoint = conns_a.iter().all(|&(s1, e1, _, _)| {
        conns_b
            .iter()
            .all(|&(s2, e2, _, _)| e1 <= s2 || e2 <= s1)
    });

    // A connector of one parsing must sit inside a tile of the other as a
    // whole maximal component, or as the central zero of one.
    let placed = |conns: &[(usize, usize, usize, i64)], tiles: &[Span]| -> bool {
        conns.iter().all(|&(s, e, _, _)| {
            let Some(tile) = tiles
                .iter()
                .find(|t| t.element.is_tile() && t.start <= s && e <= t.end)
            else {
                return false;
            };
            let rel = (s - tile.start, e - tile.start);
            let entries = &c.entries()[tile.start..tile.end];
            component_ranges(entries).iter().any(|&(cs, ce)| {
                (cs, ce) == rel || (rel.1 - rel.0 == 1 && entries[rel.0] == 0 && cs < rel.0 && rel.1 < ce && rel.0 - cs == ce - rel.1)
            })
        })
    };
    let a_connectors_placed = placed(&conns_a, &spans_b);
    let b_connectors_placed = placed(&conns_b, &spans_a);

    // No two connectors of one parsing inside the same maximal component of
    // a tile of the other.
    let exclusive = |conns: &[(usize, usize, usize, i64)], tiles: &[Span]| -> bool {
        let mut seen = BTreeSet::new();
        for &(s, _, _, _) in conns {
            let Some(tile) = tiles
                .iter()
                .find(|t| t.element.is_tile() && t.start <= s && s < t.end)
            else {
                continue;
            };
            let entries = &c.entries()[tile.start..tile.end];
            let rel = s - tile.start;
            let comp = component_ranges(entries)
                .iter()
                .position(|&(cs, ce)| cs <= rel && rel < ce)
                .unwrap();
            if !seen.insert((tile.start, comp)) {
                return false;
            }
        }
        true
    };
    let no_shared_component_a = exclusive(&conns_a, &spans_b);
    let no_shared_component_b = exclusive(&conns_b, &spans_a);

    // Edge attribution: a connector follows tile of the same index; a
    // forward traversal puts the following connector on the far edge
    // (top/right), a backward one on the near edge (bottom/left).
    let uniform = |values: &[i64]| values.iter().all(|&v| v == 0) || values.iter().all(|&v| v != 0);
    let split_edges = |conns: &[(usize, usize, usize, i64)]| -> (Vec<i64>, Vec<i64>) {
        let mut far = Vec::new();
        let mut near = Vec::new();
        for &(_, _, index, value) in conns {
            if index % 2 == 0 {
                far.push(value);
            } else {
                near.push(value);
            }
        }
        (far, near)
    };
    let (a_far, a_near) = split_edges(&conns_a);
    let (b_far, b_near) = split_edges(&conns_b);
    let lower_left_uniform = uniform(&[a_near.clone(), b_near].concat());
    let upper_right_uniform = uniform(&[a_far.clone(), b_far].concat());

    // Entries inside tiles of both parsings carry the sign pair of their two
    // tiles; minimal witnesses only use (+,+) and (-,-).
    let sign_at = |spans: &[Span], idx: usize| -> Option<i8> {
        spans.iter().find_map(|s| match s.element {
            Element::Tile { sign, .. } if s.start <= idx && idx < s.end => Some(sign),
            _ => None,
        })
    };
    let diagonal_signs_matched = (0..c.len()).all(|i| {
        match (sign_at(&spans_a, i), sign_at(&spans_b, i)) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        }
    });

    Ok(LemmaReport {
        word: c.to_string(),
        no_pure_seams,
        connectors_disjoint,
        a_connectors_placed,
        b_connectors_placed,
        lower_left_uniform,
        upper_right_uniform,
        no_shared_component_a,
        no_shared_component_b,
        diagonal_signs_matched,
        mixed_seam_count,
        mixed_seams_zero_or_two: mixed_seam_count == 0 || mixed_seam_count == 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::assemble_form;
    use crate::parsing::parse_class;

    fn w(entries: &[i8]) -> ExpandedWord {
        ExpandedWord::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order_and_counts() {
        let two = enumerate_s(2, false);
        let expected: Vec<ExpandedWord> = [
            vec![2],
            vec![-2],
            vec![2, 2],
            vec![2, -2],
            vec![-2, 2],
            vec![-2, -2],
        ]
        .into_iter()
        .map(|v| ExpandedWord::new(v).unwrap())
        .collect();
        assert_eq!(two, expected);

        let all = enumerate_s(6, false);
        for (len, want) in [(1usize, 2usize), (2, 4), (3, 10), (4, 24), (5, 58), (6, 140)] {
            assert_eq!(all.iter().filter(|w| w.len() == len).count(), want);
        }
        let even = enumerate_s(6, true);
        assert_eq!(even.len(), 4 + 24 + 140);
    }

    #[test]
    fn automaton_matches_parsing_engine() {
        let tiles: Vec<ExpandedWord> = enumerate_s(4, true);
        let words = enumerate_s(8, true);
        for t in &tiles {
            let class = class_of(t);
            let nfa = TileAutomaton::new(&class);
            for c in &words {
                let via_nfa = nfa.accepts(c);
                let via_parse = parse_class(&class_of(c), &class).is_some();
                assert_eq!(via_nfa, via_parse, "c={c} tile={t}");
            }
        }
    }

    #[test]
    fn no_witness_for_trefoil_and_figure_eight() {
        let budget = SearchBudget::default();
        let out = search_double_parsing(&class_of(&w(&[2, -2])), &class_of(&w(&[2, 2])), &budget);
        assert_eq!(out, SearchOutcome::NoneWithinBound { bound: 42 });
    }

    #[test]
    fn minimal_witness_for_example_pair() {
        let a = class_of(&w(&[2, -2, 0, -2]));
        let b = class_of(&assemble_form(&[], 2, -4, 2).unwrap());
        let out = search_double_parsing(&a, &b, &SearchBudget::default());
        match out {
            SearchOutcome::Found { length, minimal } => {
                assert_eq!(length, 28);
                assert!(!minimal.is_empty());
                for c in &minimal {
                    assert!(parse_class(&class_of(c), &a).is_some());
                    assert!(parse_class(&class_of(c), &b).is_some());
                }
            }
            other => panic!("expected witnesses, got {other:?}"),
        }
    }

    #[test]
    fn identity_witness() {
        let a = class_of(&w(&[2, -2, 0, -2]));
        let out = search_double_parsing(&a, &a, &SearchBudget::default());
        match out {
            SearchOutcome::Found { length, minimal } => {
                assert_eq!(length, 4);
                let canon = class_of(&w(&[2, -2, 0, -2])).canonical().clone();
                assert_eq!(minimal, vec![canon]);
            }
            other => panic!("expected the tile itself, got {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let tight = SearchBudget {
            max_word_length: 42,
            max_candidates: 1,
            time_limit: Duration::from_secs(60),
        };
        let a = class_of(&w(&[2, 2]));
        let b = class_of(&w(&[2; 6]));
        assert!(matches!(
            minimal_double_parsing(&a, &b, &tight),
            Err(Error::BudgetExhausted) | Ok(Some(_))
        ));
    }

    #[test]
    fn minimal_length_matches_construction() {
        // Partner pairs (w^p, e) vs (w^q, e): minimal witness length equals
        // the length of (w^T, e) with 2T+1 = lcm(2p+1, 2q+1).
        let cases = [(1u64, 2u64), (1, 3), (2, 3)];
        for (p, q) in cases {
            let a = class_of(&assemble_form(&[], 2, 2, p).unwrap());
            let b = class_of(&assemble_form(&[], 2, 2, q).unwrap());
            let lcm = num_integer::lcm(2 * p + 1, 2 * q + 1);
            let t = (lcm - 1) / 2;
            let expect = assemble_form(&[], 2, 2, t).unwrap().len();
            match search_double_parsing(&a, &b, &SearchBudget::default()) {
                SearchOutcome::Found { length, .. } => {
                    assert_eq!(length, expect, "p={p} q={q}")
                }
                other => panic!("expected witness for p={p} q={q}, got {other:?}"),
            }
        }
    }

    #[test]
    fn lemma_report_on_example() {
        let a = w(&[2, -2, 0, -2]);
        let b = w(&[2, -2, 0, -2, 2, -2, 0, -2]);
        let c = w(&[
            2, -2, 0, -2, 2, -2, 0, -2, 2, 2, 0, 2, -2, 2, 0, 2, -2, -2, 0, -2, 2, -2, 0, -2, 2,
            -2, 0, -2,
        ]);
        let report = verify_parsing_lemmas(&c, &a, &b).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.mixed_seam_count, 2);
    }

    #[test]
    fn lemma_report_identity_vacuous() {
        let a = w(&[2, -2, 0, -2]);
        let report = verify_parsing_lemmas(&a, &a, &a).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.mixed_seam_count, 0);
    }

    #[test]
    fn agreement_on_short_classes() {
        let records = agreement_sweep(4, &SearchBudget::default()).unwrap();
        assert!(!records.is_empty());
        for r in &records {
            assert!(r.agree, "disagreement on {} vs {}", r.a, r.b);
        }
    }

    #[test]
    fn lemma_report_rejects_non_witness() {
        assert!(matches!(
            verify_parsing_lemmas(&w(&[2, 2]), &w(&[2, -2]), &w(&[2, 2])),
            Err(Error::NotADoubleParsing)
        ));
    }
}
