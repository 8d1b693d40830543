//! The partial order on 2-bridge knots: K₁ ≥ K₂ when the word class of K₁
//! parses with respect to the word class of K₂. This module decides
//! comparability, enumerates lower bounds, computes standard forms
//! a = (wᵖ, e) with w = (e, m, e⁻¹, n), decides and constructs upper bounds,
//! builds shortest least upper bounds, and enumerates the incomparable
//! partners of a knot that still admit a common upper bound.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;

use crate::bridge::{phi, phi_inverse_knot, Kind, TwoBridgeClass};
use crate::error::{Error, Result};
use crate::parsing::{parse, parse_class, seams, Parsing, SeamKind};
use crate::words::{class_of, ConnectorWord, ExpandedWord, WordClass};

/// A decomposition a = (wᵉˣᵖ, e) with w = (e, m-word, e⁻¹, n-word), where the
/// m- and n-words are the connectors whose entries sum to m and n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct StdForm {
    /// Possibly empty; e⁻¹ is its reversal.
    pub e: Vec<i8>,
    /// Sum of the entries of the m-word (an even integer).
    pub m: i64,
    /// Sum of the entries of the n-word (an even integer).
    pub n: i64,
    /// Number of copies of w; at least 1.
    pub exponent: u64,
}

/// Builds (wᵉˣᵖ, e) for a given base; fails if the result leaves the word set
/// (it never does when the base came from a valid decomposition).
pub fn assemble_form(e: &[i8], m: i64, n: i64, exponent: u64) -> Result<ExpandedWord> {
    debug_assert!(m % 2 == 0 && n % 2 == 0);
    let m_word = ConnectorWord::new(m / 2).word();
    let n_word = ConnectorWord::new(n / 2).word();
    let e_rev: Vec<i8> = e.iter().rev().copied().collect();
    let mut entries = Vec::new();
    for _ in 0..exponent {
        entries.extend_from_slice(e);
        entries.extend_from_slice(&m_word);
        entries.extend_from_slice(&e_rev);
        entries.extend_from_slice(&n_word);
    }
    entries.extend_from_slice(e);
    ExpandedWord::new(entries)
}

impl StdForm {
    pub fn assemble(&self) -> Result<ExpandedWord> {
        assemble_form(&self.e, self.m, self.n, self.exponent)
    }
}

/// All decompositions of `a` as (w^q, e) with q ≥ 1, by brute force over
/// e-prefixes and connector splits of w. Sorted by |e| ascending (equivalently
/// exponent descending), so a minimal-e base comes first.
pub fn std_forms(a: &ExpandedWord) -> Vec<StdForm> {
    let entries = a.entries();
    let total = entries.len();
    let mut out = Vec::new();
    for e_len in (0..total).step_by(2) {
        let e = &entries[..e_len];
        if e_len > 0 && ExpandedWord::new(e.to_vec()).is_err() {
            continue;
        }
        let rem = total - e_len;
        for q in 1..=rem {
            if rem % q != 0 {
                continue;
            }
            let w_len = rem / q;
            // w = (e, m-word, e⁻¹, n-word) needs at least one entry for each
            // connector.
            if w_len < 2 * e_len + 2 {
                continue;
            }
            let w = &entries[..w_len];
            let repeats = (0..q).all(|i| &entries[i * w_len..(i + 1) * w_len] == w)
                && &entries[q * w_len..] == e;
            if !repeats {
                continue;
            }
            let e_rev: Vec<i8> = e.iter().rev().copied().collect();
            let inner = &w[e_len..];
            let conn_total = w_len - 2 * e_len;
            for m_len in (1..conn_total).step_by(2) {
                let Some(mc) = ConnectorWord::from_word(&inner[..m_len]) else {
                    continue;
                };
                if inner[m_len..m_len + e_len] != e_rev[..] {
                    continue;
                }
                let Some(nc) = ConnectorWord::from_word(&inner[m_len + e_len..]) else {
                    continue;
                };
                out.push(StdForm {
                    e: e.to_vec(),
                    m: 2 * mc.value(),
                    n: 2 * nc.value(),
                    exponent: q as u64,
                });
            }
        }
    }
    out.sort_by_key(|f| (f.e.len(), f.e.clone(), f.m, f.n));
    out.dedup();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// The outcome of comparing two knots, with a witness parsing when one
/// dominates the other.
#[derive(Debug, Clone, Serialize)]
pub struct OrderRelation {
    pub left: TwoBridgeClass,
    pub right: TwoBridgeClass,
    pub relation: Relation,
    pub witness: Option<Parsing>,
}

fn require_orderable(k: &TwoBridgeClass) -> Result<()> {
    if k.kind() == Kind::Link {
        return Err(Error::LinkNotOrdered(k.to_string()));
    }
    Ok(())
}

/// Decides the order between two knots (links are rejected; the unknot is
/// below every nontrivial knot).
pub fn compare(k1: &TwoBridgeClass, k2: &TwoBridgeClass) -> Result<OrderRelation> {
    require_orderable(k1)?;
    require_orderable(k2)?;
    let mk = |relation, witness| OrderRelation {
        left: k1.clone(),
        right: k2.clone(),
        relation,
        witness,
    };
    if k1 == k2 {
        return Ok(mk(Relation::Equal, None));
    }
    if k1.is_unknot() {
        return Ok(mk(Relation::Less, None));
    }
    if k2.is_unknot() {
        return Ok(mk(Relation::Greater, None));
    }
    let c1 = phi_inverse_knot(k1)?;
    let c2 = phi_inverse_knot(k2)?;
    if let Some(p) = parse_class(&c1, &c2) {
        return Ok(mk(Relation::Greater, Some(p)));
    }
    if let Some(p) = parse_class(&c2, &c1) {
        return Ok(mk(Relation::Less, Some(p)));
    }
    Ok(mk(Relation::Incomparable, None))
}

/// All knots below `k`: every class whose word appears as a tile of a parsing
/// of a representative of k's word. Includes k itself; the unknot is appended
/// when requested.
pub fn lower_bounds(k: &TwoBridgeClass, include_unknot: bool) -> Result<Vec<TwoBridgeClass>> {
    require_orderable(k)?;
    let mut found = BTreeSet::new();
    if k.is_unknot() {
        let mut out = Vec::new();
        if include_unknot {
            out.push(TwoBridgeClass::unknot());
        }
        return Ok(out);
    }
    // Any lower bound's tile appears, with first sign +1, as a prefix of the
    // representative it parses; enumerating even prefixes of every
    // representative therefore finds them all.
    for rep in phi_inverse_knot(k)?.representatives() {
        for tile_len in (2..=rep.len()).step_by(2) {
            let Ok(tile) = ExpandedWord::new(rep.entries()[..tile_len].to_vec()) else {
                continue;
            };
            if parse(&rep, &tile).is_some() {
                found.insert(phi(&tile));
            }
        }
    }
    let mut out: Vec<TwoBridgeClass> = Vec::new();
    if include_unknot {
        out.push(TwoBridgeClass::unknot());
    }
    out.extend(found);
    Ok(out)
}

/// Why a pair of knots has an upper bound.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UpperBoundCertificate {
    /// One of the two already dominates the other.
    Comparable { larger: TwoBridgeClass },
    /// Standard forms a = (wᵖ, e) and b = (w^q, e) over one shared base
    /// (e, m, n); with the pair incomparable, neither 2p+1 nor 2q+1 divides
    /// the other.
    SharedBase {
        e: Vec<i8>,
        m: i64,
        n: i64,
        p: u64,
        q: u64,
    },
}

type BaseKey = (Vec<i8>, i64, i64);

/// Deterministic preference among equivalent bases: rank the single-copy word
/// w = (e, m, e⁻¹, n) entry-wise with 2 before -2 before 0, which favors the
/// conventionally oriented representative (leading entry positive).
fn key_preference(key: &BaseKey) -> Vec<u8> {
    match assemble_form(&key.0, key.1, key.2, 1) {
        Ok(w) => w
            .entries()
            .iter()
            .map(|&e| match e {
                2 => 0,
                -2 => 1,
                _ => 2,
            })
            .collect(),
        Err(_) => vec![u8::MAX],
    }
}

/// Standard-form bases over all representatives of a knot's word class,
/// keyed by (e, m, n); the exponent per key is determined by the length.
fn base_exponents(k: &TwoBridgeClass) -> Result<BTreeMap<BaseKey, u64>> {
    let mut map = BTreeMap::new();
    for rep in phi_inverse_knot(k)?.representatives() {
        for f in std_forms(&rep) {
            map.insert((f.e, f.m, f.n), f.exponent);
        }
    }
    Ok(map)
}

/// Decides whether {k1, k2} has an upper bound, returning a certificate.
pub fn upper_bound_exists(
    k1: &TwoBridgeClass,
    k2: &TwoBridgeClass,
) -> Result<Option<UpperBoundCertificate>> {
    let rel = compare(k1, k2)?;
    match rel.relation {
        Relation::Greater | Relation::Equal => {
            return Ok(Some(UpperBoundCertificate::Comparable {
                larger: k1.clone(),
            }))
        }
        Relation::Less => {
            return Ok(Some(UpperBoundCertificate::Comparable {
                larger: k2.clone(),
            }))
        }
        Relation::Incomparable => {}
    }
    let b1 = base_exponents(k1)?;
    let b2 = base_exponents(k2)?;
    let best = b1
        .iter()
        .filter_map(|(key, &p)| b2.get(key).map(|&q| (key, p, q)))
        .min_by_key(|(key, _, _)| key_preference(key));
    Ok(best.map(|(key, p, q)| UpperBoundCertificate::SharedBase {
        e: key.0.clone(),
        m: key.1,
        n: key.2,
        p,
        q,
    }))
}

/// Drops every knot dominated by another member of the list and deduplicates.
fn maximal_elements(ks: &[TwoBridgeClass]) -> Result<Vec<TwoBridgeClass>> {
    let mut kept: Vec<TwoBridgeClass> = Vec::new();
    for k in ks {
        require_orderable(k)?;
        if k.is_unknot() {
            continue;
        }
        let mut dominated = false;
        let mut next = Vec::new();
        for other in kept {
            match compare(&other, k)?.relation {
                Relation::Greater | Relation::Equal => {
                    dominated = true;
                    next.push(other);
                }
                Relation::Less => {}
                Relation::Incomparable => next.push(other),
            }
        }
        kept = next;
        if !dominated {
            kept.push(k.clone());
        }
    }
    Ok(kept)
}

/// Builds the word of an upper bound of the whole set: over a base (e, m, n)
/// shared by every member, (w^Q, e) with 2Q+1 = lcm of the members' 2Pᵢ+1.
/// The empty and all-unknot cases yield NoUpperBound.
pub fn construct_upper_bound(ks: &[TwoBridgeClass]) -> Result<ExpandedWord> {
    let maximal = maximal_elements(ks)?;
    if maximal.is_empty() {
        return Err(Error::NoUpperBound("no nontrivial knots given".into()));
    }
    if maximal.len() == 1 {
        return Ok(phi_inverse_knot(&maximal[0])?.canonical().clone());
    }
    let mut maps = Vec::new();
    for k in &maximal {
        maps.push(base_exponents(k)?);
    }
    let mut shared: Vec<(&BaseKey, Vec<u64>)> = Vec::new();
    'keys: for key in maps[0].keys() {
        let mut exps = Vec::new();
        for map in &maps {
            match map.get(key) {
                Some(&p) => exps.push(p),
                None => continue 'keys,
            }
        }
        shared.push((key, exps));
    }
    let Some((key, exponents)) = shared
        .into_iter()
        .min_by_key(|(key, _)| key_preference(key))
    else {
        return Err(Error::NoUpperBound(
            "no shared standard-form base across the set".into(),
        ));
    };
    let lcm = exponents
        .iter()
        .fold(1u128, |acc, &p| acc.lcm(&(2 * p as u128 + 1)));
    let big_q = ((lcm - 1) / 2) as u64;
    let word = assemble_form(&key.0, key.1, key.2, big_q)?;
    // Internal check: the construction must dominate every input.
    let w_class = class_of(&word);
    for k in &maximal {
        if parse_class(&w_class, &phi_inverse_knot(k)?).is_none() {
            return Err(Error::NoUpperBound(format!(
                "constructed word fails to dominate {k}"
            )));
        }
    }
    Ok(word)
}

/// The shortest least-upper-bound words of an incomparable pair: the base
/// construction plus its valid mixed-seam sign variants (entries between the
/// two seams negated, entries after the second negated, or both). A pair with
/// a comparable relation yields the larger knot's word alone.
pub fn shortest_lubs(k1: &TwoBridgeClass, k2: &TwoBridgeClass) -> Result<Vec<ExpandedWord>> {
    let base = construct_upper_bound(&[k1.clone(), k2.clone()])?;
    if compare(k1, k2)?.relation != Relation::Incomparable {
        return Ok(vec![base]);
    }
    let a_hat = phi_inverse_knot(k1)?;
    let b_hat = phi_inverse_knot(k2)?;
    // Strict parsings of the one constructed representative, needed so both
    // boundary sets refer to the same word.
    let strict = |class: &WordClass| -> Option<Parsing> {
        class.representatives().iter().find_map(|r| parse(&base, r))
    };
    let (Some(pa), Some(pb)) = (strict(&a_hat), strict(&b_hat)) else {
        return Err(Error::NoUpperBound(
            "constructed word fails to parse against an input".into(),
        ));
    };
    let mixed: Vec<usize> = seams(&base, &pa, &pb)?
        .into_iter()
        .filter(|s| s.kind == SeamKind::Mixed)
        .map(|s| s.position)
        .collect();
    let mut out = vec![base.clone()];
    if let [s1, s2] = mixed[..] {
        let negate_range = |ranges: &[std::ops::Range<usize>]| -> Option<ExpandedWord> {
            let mut entries = base.entries().to_vec();
            for range in ranges {
                for e in &mut entries[range.clone()] {
                    *e = -*e;
                }
            }
            let w = ExpandedWord::new(entries).ok()?;
            let w_class = class_of(&w);
            (parse_class(&w_class, &a_hat).is_some() && parse_class(&w_class, &b_hat).is_some())
                .then_some(w)
        };
        let len = base.len();
        for ranges in [
            vec![s1..s2],
            vec![s2..len],
            vec![s1..s2, s2..len],
        ] {
            if let Some(w) = negate_range(&ranges) {
                out.push(w);
            }
        }
        out.dedup();
    }
    Ok(out)
}

/// The knots incomparable with `k` that nonetheless share an upper bound with
/// it: over every standard form (e, m, n, p) of every representative, the
/// classes of (w^q, e) for q up to `q_max` with neither 2p+1 nor 2q+1
/// dividing the other.
pub fn incomparable_partners(k: &TwoBridgeClass, q_max: u64) -> Result<Vec<TwoBridgeClass>> {
    require_orderable(k)?;
    if k.is_unknot() {
        return Ok(Vec::new());
    }
    let mut found = BTreeSet::new();
    for rep in phi_inverse_knot(k)?.representatives() {
        for f in std_forms(&rep) {
            let p_odd = 2 * f.exponent + 1;
            for q in 1..=q_max {
                let q_odd = 2 * q + 1;
                if p_odd % q_odd == 0 || q_odd % p_odd == 0 {
                    continue;
                }
                if let Ok(word) = assemble_form(&f.e, f.m, f.n, q) {
                    found.insert(phi(&word));
                }
            }
        }
    }
    found.remove(k);
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bridge::knot_class;
    use crate::rational::Fraction;

    fn knot(p: i64, q: i64) -> TwoBridgeClass {
        knot_class(&Fraction::from_i64(p, q).unwrap())
    }

    fn w(entries: &[i8]) -> ExpandedWord {
        ExpandedWord::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn compare_examples() {
        let j = knot(322892, 551327);
        let k47 = knot(4, 7);
        let rel = compare(&j, &k47).unwrap();
        assert_eq!(rel.relation, Relation::Greater);
        assert!(rel.witness.is_some());
        assert_eq!(compare(&k47, &j).unwrap().relation, Relation::Less);
        let trefoil = knot(1, 3);
        assert_eq!(compare(&trefoil, &trefoil).unwrap().relation, Relation::Equal);
        assert_eq!(
            compare(&trefoil, &knot(3, 5)).unwrap().relation,
            Relation::Incomparable
        );
        assert_eq!(
            compare(&TwoBridgeClass::unknot(), &trefoil).unwrap().relation,
            Relation::Less
        );
        assert!(matches!(
            compare(&trefoil, &knot(11, 30)),
            Err(Error::LinkNotOrdered(_))
        ));
    }

    #[test]
    fn lower_bound_examples() {
        let j = phi(&assemble_form(&[], 2, -4, 7).unwrap());
        let lbs = lower_bounds(&j, false).unwrap();
        assert_eq!(lbs, vec![knot(4, 7), knot(24, 41), j.clone()]);
        let with_unknot = lower_bounds(&j, true).unwrap();
        assert_eq!(with_unknot.len(), 4);
        assert!(with_unknot[0].is_unknot());

        assert_eq!(lower_bounds(&knot(1, 3), false).unwrap(), vec![knot(1, 3)]);
        assert_eq!(lower_bounds(&knot(3, 5), false).unwrap(), vec![knot(3, 5)]);
    }

    #[test]
    fn std_form_examples() {
        assert_eq!(
            std_forms(&w(&[2, 2])),
            vec![StdForm {
                e: vec![],
                m: 2,
                n: 2,
                exponent: 1
            }]
        );
        assert_eq!(
            std_forms(&w(&[2, -2, 0, -2, 2, -2, 0, -2])),
            vec![StdForm {
                e: vec![],
                m: 2,
                n: -4,
                exponent: 2
            }]
        );
        // Six twos admit only the exponent-3 form: a secondary e would need
        // (2l+1)q + l = 3, unsolvable with l, q ≥ 1.
        assert_eq!(
            std_forms(&w(&[2; 6])),
            vec![StdForm {
                e: vec![],
                m: 2,
                n: 2,
                exponent: 3
            }]
        );
        // Eight twos: the l = 1 secondary form appears.
        assert_eq!(
            std_forms(&w(&[2; 8])),
            vec![
                StdForm {
                    e: vec![],
                    m: 2,
                    n: 2,
                    exponent: 4
                },
                StdForm {
                    e: vec![2, 2],
                    m: 2,
                    n: 2,
                    exponent: 1
                },
            ]
        );
        assert!(std_forms(&w(&[2, 2, 0, 2, -2, 2])).is_empty());
    }

    #[test]
    fn std_form_assembly_round_trip() {
        for word in [
            w(&[2, 2]),
            w(&[2; 8]),
            w(&[2, -2, 0, -2, 2, -2, 0, -2]),
            w(&[2, -2, 2, -2, 2, -2]),
        ] {
            for f in std_forms(&word) {
                assert_eq!(f.assemble().unwrap(), word, "{f:?}");
            }
        }
    }

    #[test]
    fn std_form_family_law() {
        // Every decomposition comes from the minimal base via
        // (2l+1)q + l = q₀.
        for word in [w(&[2; 8]), w(&[2; 16]), w(&[2, -2].repeat(8))] {
            let forms = std_forms(&word);
            let minimal = &forms[0];
            let q0 = minimal.exponent;
            let mut expected = vec![minimal.clone()];
            for l in 1..q0 {
                let num = q0 - l;
                let den = 2 * l + 1;
                if num % den == 0 && num / den >= 1 {
                    let e = {
                        let inner = assemble_form(&minimal.e, minimal.m, minimal.n, l).unwrap();
                        inner.entries().to_vec()
                    };
                    expected.push(StdForm {
                        e,
                        m: minimal.m,
                        n: minimal.n,
                        exponent: num / den,
                    });
                }
            }
            expected.sort();
            let mut got = forms.clone();
            got.sort();
            assert_eq!(got, expected, "word {word}");
            let (m0, n0) = (minimal.m, minimal.n);
            assert!(forms.iter().all(|f| f.m == m0 && f.n == n0));
        }
    }

    #[test]
    fn upper_bound_existence() {
        assert!(upper_bound_exists(&knot(1, 3), &knot(3, 5))
            .unwrap()
            .is_none());
        let c = upper_bound_exists(&knot(4, 7), &knot(24, 41))
            .unwrap()
            .unwrap();
        match c {
            UpperBoundCertificate::SharedBase { e, m, n, p, q } => {
                assert!(e.is_empty());
                assert_eq!((m, n), (2, -4));
                assert_eq!((p, q), (1, 2));
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        let fig8 = knot(3, 5);
        let four_twos = phi(&w(&[2; 4]));
        assert!(matches!(
            upper_bound_exists(&fig8, &four_twos).unwrap(),
            Some(UpperBoundCertificate::SharedBase { p: 1, q: 2, .. })
        ));
        assert!(matches!(
            upper_bound_exists(&knot(4, 7), &knot(322892, 551327)).unwrap(),
            Some(UpperBoundCertificate::Comparable { .. })
        ));
    }

    #[test]
    fn construction_examples() {
        let ub = construct_upper_bound(&[knot(4, 7), knot(24, 41)]).unwrap();
        assert_eq!(ub.len(), 28);
        assert_eq!(ub, assemble_form(&[], 2, -4, 7).unwrap());

        let fig8 = knot(3, 5);
        let four_twos = phi(&w(&[2; 4]));
        let ub2 = construct_upper_bound(&[fig8, four_twos]).unwrap();
        assert_eq!(ub2, w(&[2; 14]));

        assert_eq!(
            construct_upper_bound(&[knot(1, 3)]).unwrap(),
            w(&[2, -2])
        );
        assert!(construct_upper_bound(&[knot(1, 3), knot(3, 5)]).is_err());
    }

    #[test]
    fn shortest_lub_examples() {
        let lubs = shortest_lubs(&knot(4, 7), &knot(24, 41)).unwrap();
        let c1 = w(&[
            2, -2, 0, -2, 2, -2, 0, -2, 2, 2, 0, 2, -2, 2, 0, 2, -2, -2, 0, -2, 2, -2, 0, -2, 2,
            -2, 0, -2,
        ]);
        assert!(lubs.contains(&c1), "missing the negated-segment variant");
        assert!(lubs.contains(&assemble_form(&[], 2, -4, 7).unwrap()));
        for word in &lubs {
            assert_eq!(word.len(), 28);
            let cls = class_of(word);
            assert!(parse_class(&cls, &phi_inverse_knot(&knot(4, 7)).unwrap()).is_some());
            assert!(parse_class(&cls, &phi_inverse_knot(&knot(24, 41)).unwrap()).is_some());
        }
        // Distinct words here are genuinely distinct knots.
        let knots: BTreeSet<TwoBridgeClass> = lubs.iter().map(phi).collect();
        assert!(knots.len() > 1);

        let fig8 = knot(3, 5);
        let four_twos = phi(&w(&[2; 4]));
        let lubs2 = shortest_lubs(&fig8, &four_twos).unwrap();
        assert!(lubs2.contains(&w(&[2; 14])));
    }

    #[test]
    fn partner_families() {
        let fig8 = knot(3, 5);
        let partners = incomparable_partners(&fig8, 6).unwrap();
        let expected: Vec<TwoBridgeClass> = [2usize, 3, 5, 6]
            .iter()
            .map(|&n| phi(&w(&vec![2; 2 * n])))
            .collect();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(partners, expected_sorted);

        let trefoil = knot(1, 3);
        let alt_partners = incomparable_partners(&trefoil, 6).unwrap();
        let expected_alt: BTreeSet<TwoBridgeClass> = [2usize, 3, 5, 6]
            .iter()
            .map(|&n| phi(&w(&[2, -2].repeat(n))))
            .collect();
        assert_eq!(alt_partners, expected_alt.into_iter().collect::<Vec<_>>());

        // No standard form, no partners.
        let k = phi(&w(&[2, 2, 0, 2, -2, 2]));
        assert!(incomparable_partners(&k, 6).unwrap().is_empty());
    }

    #[test]
    fn divisibility_law() {
        // (w^p, e) parses with respect to the class of (w^q, e) exactly when
        // 2q+1 divides 2p+1.
        let bases: [(&[i8], i64, i64); 3] = [(&[], 2, 2), (&[], 2, -2), (&[2, -2], 2, 0)];
        for (e, m, n) in bases {
            for p in 1..=7u64 {
                let Ok(big) = assemble_form(e, m, n, p) else { continue };
                for q in 1..=p {
                    let Ok(small) = assemble_form(e, m, n, q) else { continue };
                    let parses = parse_class(&class_of(&big), &class_of(&small)).is_some();
                    assert_eq!(
                        parses,
                        (2 * p + 1) % (2 * q + 1) == 0,
                        "e={e:?} m={m} n={n} p={p} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn antisymmetry_small() {
        let ks = [knot(1, 3), knot(3, 5), knot(4, 7), knot(24, 41)];
        for a in &ks {
            for b in &ks {
                let ab = compare(a, b).unwrap().relation;
                let ba = compare(b, a).unwrap().relation;
                match ab {
                    Relation::Greater => assert_eq!(ba, Relation::Less),
                    Relation::Less => assert_eq!(ba, Relation::Greater),
                    Relation::Equal => assert_eq!(ba, Relation::Equal),
                    Relation::Incomparable => assert_eq!(ba, Relation::Incomparable),
                }
            }
        }
    }

    #[test]
    fn serialization_is_stable() {
        let rel = compare(&knot(1, 3), &knot(3, 5)).unwrap();
        let one = serde_json::to_string(&rel).unwrap();
        let two = serde_json::to_string(&compare(&knot(1, 3), &knot(3, 5)).unwrap()).unwrap();
        assert_eq!(one, two);
        assert!(one.contains("\"relation\":\"incomparable\""));
    }
}
