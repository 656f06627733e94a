//! Return words of factors of the infinite Fibonacci word, and the
//! transform that collapses the occurrences of a factor to a fresh letter.
//!
//! Every derived object here is computed twice: once empirically from a
//! corpus prefix, once in closed form through singular words. The two
//! routes must agree exactly or the operation fails; nothing falls back
//! silently.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::gbs::{gbs_from_difference_word, Gbs, GbsError};
use crate::words::{
    fibonacci_word, has_overlap, occurrences, positions_of, Letter, Word, WordError,
};

/// Corpus prefix length used when no explicit depth is given. Long enough
/// for every factor handled here (lengths up to a few hundred letters).
pub const DEFAULT_CORPUS_DEPTH: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReturnsError {
    #[error("word {0} is not a factor of the Fibonacci word")]
    NotAFactor(Word),
    #[error("corpus of depth {depth} is too short to exhibit two distinct return words of {w}")]
    NeedDeeperCorpus { w: Word, depth: usize },
    #[error("empirical and singular-word routes disagree on {part}")]
    RouteDisagreement { part: &'static str },
    #[error("factor {0} overlaps itself in the Fibonacci word, so its transform does not collapse to Beatty form")]
    Overlapping(Word),
    #[error("factor {0} fails the small-prefix condition |r0| <= |r1| - |w|")]
    Sr0Violated(Word),
    #[error("the two forms of the small-prefix condition disagree on {0}")]
    Sr0FormsDisagree(Word),
    #[error("occurrence positions of {w} deviate from the fitted sequence at occurrence {index}")]
    OccurrenceMismatch { w: Word, index: usize },
    #[error("marked positions in the transform of {w} deviate from the fitted sequence at position {index}")]
    TransformMismatch { w: Word, index: usize },
    #[error("decomposition of letter {letter} disagrees with the transform at value {value}")]
    CoverageMismatch { letter: Letter, value: i64 },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Gbs(#[from] GbsError),
}

/// Window length that is guaranteed to contain every factor of the given
/// length (the Fibonacci word is linearly recurrent with constant < 5).
fn factor_window(len: usize) -> usize {
    (8 * len).max(1000)
}

/// k-th singular word: s_0 = 1, s_1 = 00, s_2 = 101, and
/// s_{k+1} = s_{k-1} s_{k-2} s_{k-1}, so |s_k| = F_{k+2}.
pub fn singular_word(k: usize) -> Word {
    singular(k as i64)
}

// The internal table also carries s_{-2} = eps and s_{-1} = 0, which the
// return-word formulas need for the two one-letter factors.
fn singular(k: i64) -> Word {
    assert!(k >= -2, "singular words start at s_-2");
    let mut table: Vec<Word> = vec![
        Word::default(),
        Word::new(vec![0]),
        Word::new(vec![1]),
        Word::new(vec![0, 0]),
        Word::new(vec![1, 0, 1]),
    ];
    let idx = (k + 2) as usize;
    while table.len() <= idx {
        let n = table.len();
        let outer = table[n - 2].clone();
        table.push(outer.concat(&table[n - 3]).concat(&outer));
    }
    table[idx].clone()
}

/// Splits a factor as mu1 . s_k . mu2 around the largest singular word
/// occurring in it. That occurrence is unique; k = -1 only for w = "0".
pub fn singular_decompose(w: &Word) -> Result<(i64, Word, Word), ReturnsError> {
    if w.is_empty() {
        return Err(ReturnsError::NotAFactor(w.clone()));
    }
    let check = fibonacci_word(factor_window(w.len()));
    if occurrences(&check, w)?.is_empty() {
        return Err(ReturnsError::NotAFactor(w.clone()));
    }
    let mut k = -1;
    while singular(k + 1).len() <= w.len() {
        k += 1;
    }
    while k >= -1 {
        let s = singular(k);
        let occ = occurrences(w, &s)?;
        if !occ.is_empty() {
            // the largest singular factor occurs exactly once
            assert_eq!(occ.len(), 1, "singular occurrence must be unique");
            let pos = occ[0] as usize;
            let mu1 = Word::new(w.letters()[..pos - 1].to_vec());
            let mu2 = Word::new(w.letters()[pos - 1 + s.len()..].to_vec());
            return Ok((k, mu1, mu2));
        }
        k -= 1;
    }
    unreachable!("a nonempty binary factor contains s_-1 or s_0")
}

/// Return-word structure of a factor of the Fibonacci word.
///
/// r0 is the prefix before the first occurrence, r1 the first return after
/// it, r2 the other return; w = mu1 . s_k . mu2 is the singular split. For
/// non-overlapping factors the splits r1 = w . m1 . t2 and r2 = w . t2 are
/// precomputed; when occurrences overlap, r2 is shorter than w and the
/// splits do not exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnStructure {
    pub w: Word,
    pub r0: Word,
    pub r1: Word,
    pub r2: Word,
    pub k: i64,
    pub mu1: Word,
    pub mu2: Word,
    splits: Option<(Word, Word)>,
}

impl ReturnStructure {
    fn assemble(w: Word, r0: Word, r1: Word, r2: Word, k: i64, mu1: Word, mu2: Word) -> Self {
        assert!(r1.len() > r2.len(), "r1 must be the long return");
        assert!(r1.ends_with(&r0), "r0 must be a suffix of r1");
        let splits = if r1.starts_with(&w) && r2.starts_with(&w) {
            let t2 = Word::new(r2.letters()[w.len()..].to_vec());
            assert!(r1.ends_with(&t2), "t2 must be a suffix of r1");
            assert!(t2.len() <= r0.len(), "|r0| - |t2| is always nonnegative");
            let m1 = Word::new(r1.letters()[w.len()..r1.len() - t2.len()].to_vec());
            Some((m1, t2))
        } else {
            None
        };
        ReturnStructure { w, r0, r1, r2, k, mu1, mu2, splits }
    }

    /// Tail shared by both returns, r2 = w . t2. None when occurrences of
    /// w overlap.
    pub fn t2(&self) -> Option<&Word> {
        self.splits.as_ref().map(|(_, t2)| t2)
    }

    /// Middle part of the long return, r1 = w . m1 . t2. None when
    /// occurrences of w overlap.
    pub fn m1(&self) -> Option<&Word> {
        self.splits.as_ref().map(|(m1, _)| m1)
    }
}

/// Computes the return words of a factor along both routes and checks that
/// they agree: a corpus scan (prefix before the first occurrence, first
/// return, first differing return) against the singular-word formulas
/// r1 = mu1 s_k s_{k+1} mu1^-1, r2 = mu1 s_k s_{k-1} mu1^-1 and
/// r0 = (s_{k+1} without its first letter) mu1^-1.
pub fn return_words(w: &Word, corpus_depth: usize) -> Result<ReturnStructure, ReturnsError> {
    let (k, mu1, mu2) = singular_decompose(w)?;

    let corpus = fibonacci_word(corpus_depth);
    let occ = occurrences(&corpus, w)?;
    let deeper = || ReturnsError::NeedDeeperCorpus { w: w.clone(), depth: corpus_depth };
    if occ.len() < 3 {
        return Err(deeper());
    }
    let letters = corpus.letters();
    let seg = |a: u64, b: u64| Word::new(letters[a as usize - 1..b as usize - 1].to_vec());
    let r0_emp = Word::new(letters[..occ[0] as usize - 1].to_vec());
    let r1_emp = seg(occ[0], occ[1]);
    let mut r2_emp = None;
    for pair in occ.windows(2).skip(1) {
        let s = seg(pair[0], pair[1]);
        if s != r1_emp {
            r2_emp = Some(s);
            break;
        }
    }
    let r2_emp = r2_emp.ok_or_else(deeper)?;

    let strip = |word: Word, part: &'static str| -> Result<Word, ReturnsError> {
        if word.ends_with(&mu1) {
            Ok(word.strip_suffix(&mu1))
        } else {
            Err(ReturnsError::RouteDisagreement { part })
        }
    };
    let sk = singular(k);
    let r1_formula = strip(mu1.concat(&sk).concat(&singular(k + 1)), "r1")?;
    let r2_formula = strip(mu1.concat(&sk).concat(&singular(k - 1)), "r2")?;
    let next = singular(k + 1);
    let r0_formula = strip(Word::new(next.letters()[1..].to_vec()), "r0")?;

    if r1_formula != r1_emp {
        return Err(ReturnsError::RouteDisagreement { part: "r1" });
    }
    if r2_formula != r2_emp {
        return Err(ReturnsError::RouteDisagreement { part: "r2" });
    }
    if r0_formula != r0_emp {
        return Err(ReturnsError::RouteDisagreement { part: "r0" });
    }

    Ok(ReturnStructure::assemble(w.clone(), r0_emp, r1_emp, r2_emp, k, mu1, mu2))
}

/// Fits the occurrence positions of a factor as the golden sequence with
/// p = |r1| - |r2|, q = 2|r2| - |r1|, r = |r0| + 1 - p - q, indexed from 1,
/// and verifies the fit against scanned occurrences up to position 1000.
pub fn occurrence_gbs(w: &Word) -> Result<Gbs, ReturnsError> {
    let rs = return_words(w, DEFAULT_CORPUS_DEPTH)?;
    let p = rs.r1.len() as i64 - rs.r2.len() as i64;
    let q = 2 * rs.r2.len() as i64 - rs.r1.len() as i64;
    let r = rs.r0.len() as i64 + 1 - p - q;
    let gbs = Gbs::golden(p, q, r, 1).expect("start 1 over the golden ratio");

    let corpus = fibonacci_word(DEFAULT_CORPUS_DEPTH);
    let occ = occurrences(&corpus, w)?;
    for (i, (&pos, term)) in occ.iter().zip(gbs.terms()).enumerate() {
        if pos > 1000 {
            break;
        }
        if pos as i64 != term {
            return Err(ReturnsError::OccurrenceMismatch { w: w.clone(), index: i + 1 });
        }
    }
    Ok(gbs)
}

/// Rewrites `text` by replacing each leftmost non-overlapping occurrence
/// of `w` with the letter 2; all other letters are copied unchanged.
pub fn kimberling_transform(text: &Word, w: &Word) -> Word {
    if w.is_empty() {
        return text.clone();
    }
    let t = text.letters();
    let f = w.letters();
    let mut out = Vec::with_capacity(t.len());
    let mut i = 0;
    while i < t.len() {
        if i + f.len() <= t.len() && t[i..i + f.len()] == *f {
            out.push(2);
            i += f.len();
        } else {
            out.push(t[i]);
            i += 1;
        }
    }
    Word::new(out)
}

// Positions of the marker letter in the transform, in closed form: with
// block lengths l1 = |r1| - |w| + 1 and l2 = |r2| - |w| + 1 the markers sit
// at p = l1 - l2, q = 2*l2 - l1, r = |r0| - l2 + 1, indexed from 1.
fn transform_params(rs: &ReturnStructure) -> (Gbs, i64, i64) {
    let wl = rs.w.len() as i64;
    let l1 = rs.r1.len() as i64 - wl + 1;
    let l2 = rs.r2.len() as i64 - wl + 1;
    let p = l1 - l2;
    let q = 2 * l2 - l1;
    let r = rs.r0.len() as i64 - l2 + 1;
    (Gbs::golden(p, q, r, 1).expect("start 1 over the golden ratio"), l1, l2)
}

/// Positions of the marker letter in the transform of the Fibonacci word,
/// as a golden sequence. Fails for factors that overlap themselves, whose
/// marker positions do not have Beatty form. The fitted sequence is checked
/// against a materialized transform.
pub fn transform_gbs(w: &Word) -> Result<Gbs, ReturnsError> {
    let overlap_corpus = fibonacci_word(factor_window(w.len()).max(10_000));
    if has_overlap(w, &overlap_corpus)? {
        return Err(ReturnsError::Overlapping(w.clone()));
    }
    let rs = return_words(w, DEFAULT_CORPUS_DEPTH)?;
    let (gbs, _, _) = transform_params(&rs);

    let corpus = fibonacci_word(DEFAULT_CORPUS_DEPTH);
    let y = kimberling_transform(&corpus, w);
    let horizon = (y.len() - w.len()) as u64;
    let marks = positions_of(&y, 2);
    for (i, (&pos, term)) in marks.iter().zip(gbs.terms()).enumerate() {
        if pos > horizon || i >= 1000 {
            break;
        }
        if pos as i64 != term {
            return Err(ReturnsError::TransformMismatch { w: w.clone(), index: i + 1 });
        }
    }
    Ok(gbs)
}

/// Small-prefix condition: the prefix before the first occurrence fits in
/// the long return, |r0| <= |r1| - |w|. Equivalently |mu2| <= 1. Both forms
/// are evaluated and must agree.
pub fn sr0_check(w: &Word) -> Result<bool, ReturnsError> {
    let rs = return_words(w, DEFAULT_CORPUS_DEPTH)?;
    let by_returns = rs.r0.len() + w.len() <= rs.r1.len();
    let by_mu2 = rs.mu2.len() <= 1;
    if by_returns != by_mu2 {
        return Err(ReturnsError::Sr0FormsDisagree(w.clone()));
    }
    Ok(by_returns)
}

/// Finite union of golden sequences covering one letter of the transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbsUnion {
    pub components: Vec<Gbs>,
}

// One component per letter position inside a return block. Letters in the
// shared tail t2 sit at a fixed distance before the next marker, so they
// are shifted copies of the marker sequence. Letters in m1 sit at a fixed
// distance after a long-block marker; those markers are enumerated by
// replacing the gaps l1, l2 of the marker sequence with l1 + l2, l1. A
// component whose shifted offset already names a position in the prefix
// before the first marker starts at index 0 instead of 1.
fn union_components(rs: &ReturnStructure) -> BTreeMap<Letter, Vec<Gbs>> {
    let (z, l1, l2) = transform_params(rs);
    let z1 = z.eval(1).expect("start 1");
    let long_starts = gbs_from_difference_word(l1 + l2, l1, z1);

    let mut map: BTreeMap<Letter, Vec<Gbs>> = BTreeMap::new();
    let t2 = rs.t2().expect("gated by the overlap check");
    for (i, &letter) in t2.letters().iter().enumerate() {
        let back = (t2.len() - i) as i64;
        let g = Gbs::golden(z.p(), z.q(), z.r() - back, 1).expect("start 1");
        map.entry(letter).or_default().push(g);
    }
    let m1 = rs.m1().expect("gated by the overlap check");
    for (i, &letter) in m1.letters().iter().enumerate() {
        let ahead = i as i64 + 1;
        let r = long_starts.r() + ahead;
        let start = if r >= 1 { 0 } else { 1 };
        let g = Gbs::golden(long_starts.p(), long_starts.q(), r, start).expect("valid start");
        map.entry(letter).or_default().push(g);
    }
    map.entry(2).or_default().push(z);
    for comps in map.values_mut() {
        comps.sort_by_key(|g| g.eval(g.start()).expect("first term"));
    }
    map
}

// Checks the candidate cover against a materialized transform: components
// must be pairwise disjoint and every value they produce must be a true
// position of the letter. Returns the positions left uncovered.
fn verify_cover(
    map: &BTreeMap<Letter, Vec<Gbs>>,
    y: &Word,
    window: i64,
) -> Result<BTreeMap<Letter, Vec<i64>>, ReturnsError> {
    let mut alphabet: BTreeSet<Letter> = y.letters().iter().copied().collect();
    alphabet.extend(map.keys().copied());

    let mut uncovered = BTreeMap::new();
    for letter in alphabet {
        let expected: BTreeSet<i64> = positions_of(y, letter)
            .into_iter()
            .map(|p| p as i64)
            .take_while(|&p| p <= window)
            .collect();
        let mut produced: Vec<i64> = Vec::new();
        for g in map.get(&letter).map(Vec::as_slice).unwrap_or(&[]) {
            produced.extend(g.terms().take_while(|&v| v <= window));
        }
        produced.sort_unstable();
        for pair in produced.windows(2) {
            if pair[0] == pair[1] {
                return Err(ReturnsError::CoverageMismatch { letter, value: pair[0] });
            }
        }
        if let Some(&bad) = produced.iter().find(|v| !expected.contains(v)) {
            return Err(ReturnsError::CoverageMismatch { letter, value: bad });
        }
        let produced: BTreeSet<i64> = produced.into_iter().collect();
        let missing: Vec<i64> = expected.difference(&produced).copied().collect();
        uncovered.insert(letter, missing);
    }
    Ok(uncovered)
}

fn decompose_inner(
    w: &Word,
    n: usize,
) -> Result<(BTreeMap<Letter, GbsUnion>, BTreeMap<Letter, Vec<i64>>), ReturnsError> {
    let overlap_corpus = fibonacci_word(factor_window(w.len()).max(10_000));
    if has_overlap(w, &overlap_corpus)? {
        return Err(ReturnsError::Overlapping(w.clone()));
    }
    let rs = return_words(w, DEFAULT_CORPUS_DEPTH)?;
    let components = union_components(&rs);

    let depth = DEFAULT_CORPUS_DEPTH.max((n + 16) * (w.len() + 1));
    let corpus = fibonacci_word(depth);
    let y = kimberling_transform(&corpus, w);
    let window = (n as i64).min((y.len() - w.len()) as i64);
    let uncovered = verify_cover(&components, &y, window)?;

    let map = components
        .into_iter()
        .map(|(letter, components)| (letter, GbsUnion { components }))
        .collect();
    Ok((map, uncovered))
}

/// Decomposes every letter of the transformed Fibonacci word into a finite
/// disjoint union of golden sequences, verified exactly against a
/// materialized transform over [1, min(n, usable prefix)]. Requires the
/// factor to be non-overlapping and to satisfy the small-prefix condition.
pub fn gbs_union_decompose(
    w: &Word,
    n: usize,
) -> Result<BTreeMap<Letter, GbsUnion>, ReturnsError> {
    if !sr0_check(w)? {
        return Err(ReturnsError::Sr0Violated(w.clone()));
    }
    let (map, uncovered) = decompose_inner(w, n)?;
    for (letter, missing) in &uncovered {
        if let Some(&value) = missing.first() {
            return Err(ReturnsError::CoverageMismatch { letter: *letter, value });
        }
    }
    Ok(map)
}

/// Same construction without the small-prefix gate. The per-letter unions
/// are still verified to be disjoint subsets of the true position sets;
/// the positions they fail to reach are returned alongside.
pub fn gbs_union_decompose_diagnostic(
    w: &Word,
    n: usize,
) -> Result<(BTreeMap<Letter, GbsUnion>, BTreeMap<Letter, Vec<i64>>), ReturnsError> {
    decompose_inner(w, n)
}

/// All distinct factors of the Fibonacci word of length m, in lexicographic
/// order. A Sturmian word has exactly m + 1 of them, which is asserted.
pub fn factors_of_length(m: usize) -> Vec<Word> {
    assert!(m >= 1, "factors have positive length");
    let corpus = fibonacci_word(factor_window(m));
    let set: BTreeSet<Word> = corpus
        .letters()
        .windows(m)
        .map(|win| Word::new(win.to_vec()))
        .collect();
    assert_eq!(set.len(), m + 1, "Sturmian factor complexity is m + 1");
    set.into_iter().collect()
}

/// Non-overlapping factors of length m that satisfy the small-prefix
/// condition.
pub fn sr0_census(m: usize) -> Result<Vec<Word>, ReturnsError> {
    let corpus = fibonacci_word(factor_window(m).max(10_000));
    let mut keep = Vec::new();
    for w in factors_of_length(m) {
        if has_overlap(&w, &corpus)? {
            continue;
        }
        if sr0_check(&w)? {
            keep.push(w);
        }
    }
    Ok(keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gbs::fibonacci;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    fn sig(g: &Gbs) -> (i64, i64, i64, u64) {
        (g.p(), g.q(), g.r(), g.start())
    }

    fn sigs(u: &GbsUnion) -> Vec<(i64, i64, i64, u64)> {
        u.components.iter().map(sig).collect()
    }

    #[test]
    fn singular_words_match_the_table() {
        assert_eq!(singular_word(0), w("1"));
        assert_eq!(singular_word(1), w("00"));
        assert_eq!(singular_word(2), w("101"));
        assert_eq!(singular_word(3), w("00100"));
        assert_eq!(singular_word(4), w("10100101"));
        for k in 0..=10 {
            assert_eq!(singular_word(k).len() as i64, fibonacci(k as u32 + 2));
        }
    }

    #[test]
    fn singular_words_occur_in_the_corpus() {
        let corpus = fibonacci_word(2000);
        for k in 0..=10 {
            let occ = occurrences(&corpus, &singular_word(k)).unwrap();
            assert!(!occ.is_empty(), "s_{k} must be a factor");
        }
    }

    #[test]
    fn singular_decompositions() {
        assert_eq!(singular_decompose(&w("001")).unwrap(), (1, Word::default(), w("1")));
        assert_eq!(singular_decompose(&w("00100")).unwrap(), (3, Word::default(), Word::default()));
        assert_eq!(singular_decompose(&w("10100")).unwrap(), (2, Word::default(), w("00")));
        assert_eq!(singular_decompose(&w("0")).unwrap(), (-1, Word::default(), Word::default()));
        assert_eq!(singular_decompose(&w("1")).unwrap(), (0, Word::default(), Word::default()));
        assert_eq!(singular_decompose(&w("100")).unwrap(), (1, w("1"), Word::default()));
    }

    #[test]
    fn non_factors_are_rejected() {
        assert_eq!(singular_decompose(&w("11")), Err(ReturnsError::NotAFactor(w("11"))));
        assert_eq!(singular_decompose(&w("000")), Err(ReturnsError::NotAFactor(w("000"))));
    }

    #[test]
    fn return_words_of_the_three_reference_factors() {
        let rs = return_words(&w("001"), DEFAULT_CORPUS_DEPTH).unwrap();
        assert_eq!((rs.r0, rs.r1, rs.r2), (w("01"), w("00101"), w("001")));

        let rs = return_words(&w("00100"), DEFAULT_CORPUS_DEPTH).unwrap();
        assert_eq!(rs.r0, w("0100101"));
        assert_eq!(rs.r1, w("0010010100101"));
        assert_eq!(rs.r2, w("00100101"));
        assert_eq!(rs.t2(), Some(&w("101")));
        assert_eq!(rs.m1(), Some(&w("10100")));

        let rs = return_words(&w("10100"), DEFAULT_CORPUS_DEPTH).unwrap();
        assert_eq!((rs.r0, rs.r1, rs.r2), (w("0100"), w("10100100"), w("10100")));
    }

    #[test]
    fn return_words_of_short_factors() {
        let rs = return_words(&w("0"), DEFAULT_CORPUS_DEPTH).unwrap();
        assert_eq!((rs.r0, rs.r1, rs.r2), (Word::default(), w("01"), w("0")));

        let rs = return_words(&w("1"), DEFAULT_CORPUS_DEPTH).unwrap();
        assert_eq!((rs.r0, rs.r1, rs.r2), (w("0"), w("100"), w("10")));

        let rs = return_words(&w("100"), DEFAULT_CORPUS_DEPTH).unwrap();
        assert_eq!((rs.r0, rs.r1, rs.r2), (w("0"), w("10010"), w("100")));
    }

    #[test]
    fn shallow_corpus_is_reported() {
        assert_eq!(
            return_words(&w("00100"), 12),
            Err(ReturnsError::NeedDeeperCorpus { w: w("00100"), depth: 12 })
        );
    }

    #[test]
    fn returns_follow_the_fibonacci_word() {
        // after r0 the sequence of return kinds reads as the Fibonacci word
        // with r1 in place of 0 and r2 in place of 1
        for factor in ["001", "0", "10100"] {
            let fw = w(factor);
            let rs = return_words(&fw, DEFAULT_CORPUS_DEPTH).unwrap();
            let corpus = fibonacci_word(DEFAULT_CORPUS_DEPTH);
            let occ = occurrences(&corpus, &fw).unwrap();
            let pattern = fibonacci_word(200);
            for (i, pair) in occ.windows(2).take(200).enumerate() {
                let seg = Word::new(
                    corpus.letters()[pair[0] as usize - 1..pair[1] as usize - 1].to_vec(),
                );
                let expected = if pattern.letters()[i] == 0 { &rs.r1 } else { &rs.r2 };
                assert_eq!(&seg, expected, "return {} of {}", i + 1, factor);
            }
        }
    }

    #[test]
    fn occurrence_sequences() {
        assert_eq!(sig(&occurrence_gbs(&w("001")).unwrap()), (2, 1, 0, 1));
        assert_eq!(sig(&occurrence_gbs(&w("0")).unwrap()), (1, 0, 0, 1));
        assert_eq!(sig(&occurrence_gbs(&w("01")).unwrap()), (1, 1, -1, 1));
    }

    #[test]
    fn transform_prefixes() {
        let x = fibonacci_word(60);
        let y = kimberling_transform(&x, &w("001"));
        assert_eq!(y.prefix(11), w("01201220120"));

        let y = kimberling_transform(&x, &w("00100"));
        assert_eq!(y.prefix(21), w("010010121010010121012"));

        assert_eq!(kimberling_transform(&x, &w("11")), x);
    }

    #[test]
    fn transform_sequences() {
        assert_eq!(sig(&transform_gbs(&w("001")).unwrap()), (2, -1, 2, 1));
        assert_eq!(sig(&transform_gbs(&w("00100")).unwrap()), (5, -1, 4, 1));
        assert_eq!(sig(&transform_gbs(&w("10100")).unwrap()), (3, -2, 4, 1));
    }

    #[test]
    fn overlapping_factors_are_rejected() {
        assert_eq!(transform_gbs(&w("010")), Err(ReturnsError::Overlapping(w("010"))));
        assert!(matches!(
            gbs_union_decompose(&w("0100"), 100),
            Err(ReturnsError::Overlapping(_))
        ));
    }

    #[test]
    fn small_prefix_condition() {
        assert_eq!(sr0_check(&w("001")).unwrap(), true);
        assert_eq!(sr0_check(&w("00100")).unwrap(), true);
        assert_eq!(sr0_check(&w("10100")).unwrap(), false);
    }

    #[test]
    fn decomposition_of_001() {
        let map = gbs_union_decompose(&w("001"), 2000).unwrap();
        assert_eq!(map.len(), 3);
        assert_eq!(sigs(&map[&0]), vec![(1, 2, 1, 0)]);
        assert_eq!(sigs(&map[&1]), vec![(1, 2, 2, 0)]);
        assert_eq!(sigs(&map[&2]), vec![(2, -1, 2, 1)]);
    }

    #[test]
    fn decomposition_of_00100() {
        let map = gbs_union_decompose(&w("00100"), 2000).unwrap();
        assert_eq!(
            sigs(&map[&0]),
            vec![(4, 5, 1, 0), (4, 5, 3, 0), (4, 5, 4, 0), (5, -1, 2, 1)]
        );
        assert_eq!(
            sigs(&map[&1]),
            vec![(4, 5, 2, 0), (5, -1, 1, 1), (5, -1, 3, 1), (4, 5, 0, 1)]
        );
        assert_eq!(sigs(&map[&2]), vec![(5, -1, 4, 1)]);
    }

    #[test]
    fn decomposition_requires_the_small_prefix_condition() {
        assert_eq!(
            gbs_union_decompose(&w("10100"), 2000),
            Err(ReturnsError::Sr0Violated(w("10100")))
        );
    }

    #[test]
    fn diagnostic_decomposition_of_10100() {
        let (map, uncovered) = gbs_union_decompose_diagnostic(&w("10100"), 2000).unwrap();
        assert_eq!(sigs(&map[&0]), vec![(1, 3, 3, 0), (1, 3, 4, 0)]);
        assert_eq!(sigs(&map[&1]), vec![(1, 3, 2, 0)]);
        assert_eq!(sigs(&map[&2]), vec![(3, -2, 4, 1)]);
        // the letter 0 at position 1 is the only position out of reach
        assert_eq!(uncovered[&0], vec![1]);
        assert!(uncovered[&1].is_empty());
        assert!(uncovered[&2].is_empty());
    }

    #[test]
    fn factor_enumeration() {
        assert_eq!(factors_of_length(1), vec![w("0"), w("1")]);
        assert_eq!(factors_of_length(2), vec![w("00"), w("01"), w("10")]);
        assert_eq!(
            factors_of_length(3),
            vec![w("001"), w("010"), w("100"), w("101")]
        );
    }

    #[test]
    fn census_of_small_lengths() {
        assert_eq!(sr0_census(2).unwrap(), vec![w("00"), w("01"), w("10")]);
        assert_eq!(sr0_census(3).unwrap(), vec![w("001"), w("100"), w("101")]);
        assert_eq!(sr0_census(4).unwrap(), vec![w("0101"), w("1010")]);
    }

    #[test]
    fn dual_route_holds_for_overlapping_factors_too() {
        let rs = return_words(&w("010"), DEFAULT_CORPUS_DEPTH).unwrap();
        assert_eq!((rs.r0, rs.r1, rs.r2), (Word::default(), w("010"), w("01")));
        assert_eq!(sig(&occurrence_gbs(&w("010")).unwrap()), (1, 1, -1, 1));
    }
}
