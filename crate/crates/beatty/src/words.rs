//! Finite words over integer alphabets, morphisms, fixed points, and the
//! factor scans the rest of the crate leans on.
//!
//! Positions are 1-based everywhere in the public API; that convention
//! matches the sequence indexing used by the sequence modules.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::quad::{floor_mul, QuadraticIrrational};

/// Letters are plain integers; difference words use values well outside 0..9.
pub type Letter = i64;

/// Errors from word and morphism operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {0} has no image under the morphism")]
    MissingImage(Letter),
    #[error("morphism must be non-erasing (letter {0} maps to the empty word)")]
    ErasingImage(Letter),
    #[error("morphism is not prolongable on letter {0}")]
    NotProlongable(Letter),
    #[error("morphism is not prolongable on any letter")]
    NoProlongableLetter,
    #[error("iteration stopped growing before reaching the requested length")]
    NotGrowing,
    #[error("word is not over the digit alphabet 0..=9")]
    NonDigitLetter(Letter),
    #[error("morphisms share no alphabet letters")]
    DisjointAlphabets,
    #[error("corpus too short: need at least {need} letters, have {have}")]
    CorpusTooShort { need: usize, have: usize },
    #[error("corpus of depth {depth} is too small to close the block inventory")]
    BlockInventoryOpen { depth: usize },
    #[error("empty word where a nonempty one is required")]
    EmptyWord,
}

/// A finite word. Letters are exposed as a slice; positions in the search
/// helpers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Parses a plain digit string such as "00100".
    pub fn from_digits(s: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch.to_digit(10) {
                Some(v) => letters.push(v as Letter),
                None => return Err(WordError::NonDigitLetter(ch as i64)),
            }
        }
        Ok(Word(letters))
    }

    /// Renders as a digit string; fails when a letter is outside 0..=9.
    pub fn to_digits(&self) -> Result<String, WordError> {
        let mut s = String::with_capacity(self.len());
        for &l in &self.0 {
            if !(0..=9).contains(&l) {
                return Err(WordError::NonDigitLetter(l));
            }
            s.push(char::from(b'0' + l as u8));
        }
        Ok(s)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.len())].to_vec())
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.0.ends_with(&other.0)
    }

    /// Removes `suffix` from the end; panics if it is not a suffix (callers
    /// use this only where the algebra guarantees it, and a violation means
    /// the computation has already gone wrong).
    pub fn strip_suffix(&self, suffix: &Word) -> Word {
        assert!(self.ends_with(suffix), "strip_suffix: not a suffix");
        Word(self.0[..self.len() - suffix.len()].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_digits() {
            Ok(s) => f.write_str(&s),
            Err(_) => {
                let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

/// All positions (1-based) where `letter` occurs in `w`.
pub fn positions_of(w: &Word, letter: Letter) -> Vec<u64> {
    w.0.iter()
        .enumerate()
        .filter(|(_, &l)| l == letter)
        .map(|(i, _)| i as u64 + 1)
        .collect()
}

/// All start positions (1-based) of `factor` in `text`, overlapping
/// occurrences included. Empty factors are rejected.
pub fn occurrences(text: &Word, factor: &Word) -> Result<Vec<u64>, WordError> {
    if factor.is_empty() {
        return Err(WordError::EmptyWord);
    }
    let t = text.letters();
    let f = factor.letters();
    if f.len() > t.len() {
        return Ok(Vec::new());
    }
    Ok(t.windows(f.len())
        .enumerate()
        .filter(|(_, win)| *win == f)
        .map(|(i, _)| i as u64 + 1)
        .collect())
}

/// Overlap test in the sense of Wen and Wen: `w` is overlapping when a word
/// of the shape xyz with w = xy = yz (x, y, z nonempty) occurs in the corpus.
/// Every candidate y is a proper border of w, so xyz = w . z is checked for
/// each border. The corpus must be long enough to contain any candidate.
pub fn has_overlap(w: &Word, corpus: &Word) -> Result<bool, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    let need = 2 * w.len();
    if corpus.len() < need {
        return Err(WordError::CorpusTooShort { need, have: corpus.len() });
    }
    let letters = w.letters();
    for border in 1..w.len() {
        if letters[..border] == letters[w.len() - border..] {
            let mut cand = w.0.clone();
            cand.extend_from_slice(&letters[border..]);
            if !occurrences(corpus, &Word(cand))?.is_empty() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// A non-erasing morphism over an explicit integer alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: BTreeMap<Letter, Word>,
}

impl Morphism {
    pub fn new(images: BTreeMap<Letter, Word>) -> Result<Self, WordError> {
        for (&l, img) in &images {
            if img.is_empty() {
                return Err(WordError::ErasingImage(l));
            }
        }
        Ok(Morphism { images })
    }

    pub fn from_pairs(pairs: &[(Letter, &[Letter])]) -> Result<Self, WordError> {
        let mut images = BTreeMap::new();
        for &(l, img) in pairs {
            images.insert(l, Word(img.to_vec()));
        }
        Self::new(images)
    }

    pub fn alphabet(&self) -> Vec<Letter> {
        self.images.keys().copied().collect()
    }

    pub fn image(&self, letter: Letter) -> Result<&Word, WordError> {
        self.images.get(&letter).ok_or(WordError::MissingImage(letter))
    }

    /// Image of a word: images concatenated letterwise.
    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        let mut out = Vec::new();
        for &l in &w.0 {
            out.extend_from_slice(&self.image(l)?.0);
        }
        Ok(Word(out))
    }

    /// Composition self . other (apply `other` first).
    pub fn compose(&self, other: &Morphism) -> Result<Morphism, WordError> {
        let mut images = BTreeMap::new();
        for (&l, img) in &other.images {
            images.insert(l, self.apply(img)?);
        }
        Morphism::new(images)
    }

    /// k-fold self-composition; `pow(0)` would be the identity, which has no
    /// finite alphabet-free representation here, so k >= 1 is required.
    pub fn pow(&self, k: u32) -> Result<Morphism, WordError> {
        assert!(k >= 1, "pow requires k >= 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Letterwise equality on the shared alphabet. Errors when the two
    /// domains are disjoint.
    pub fn equal_on_alphabet(&self, other: &Morphism) -> Result<bool, WordError> {
        let mut common = false;
        for (l, img) in &self.images {
            if let Some(other_img) = other.images.get(l) {
                common = true;
                if img != other_img {
                    return Ok(false);
                }
            }
        }
        if common {
            Ok(true)
        } else {
            Err(WordError::DisjointAlphabets)
        }
    }

    pub fn is_prolongable_on(&self, seed: Letter) -> bool {
        matches!(self.images.get(&seed), Some(img) if img.len() >= 2 && img.0[0] == seed)
    }

    /// Prefix of length `n` of the fixed point starting from `seed`.
    ///
    /// Iterates the morphism, expanding each round only until `n` letters
    /// are produced; prefix stability is asserted every round.
    pub fn fixed_point(&self, seed: Letter, n: usize) -> Result<Word, WordError> {
        if !self.is_prolongable_on(seed) {
            return Err(WordError::NotProlongable(seed));
        }
        let mut cur = vec![seed];
        while cur.len() < n {
            let mut next = Vec::with_capacity(n + 8);
            for &l in &cur {
                next.extend_from_slice(&self.image(l)?.0);
                if next.len() >= n {
                    break;
                }
            }
            let shared = cur.len().min(next.len());
            assert!(
                next[..shared] == cur[..shared],
                "fixed_point: prefix stability violated"
            );
            if next.len() <= cur.len() {
                return Err(WordError::NotGrowing);
            }
            next.truncate(n);
            cur = next;
        }
        cur.truncate(n);
        Ok(Word(cur))
    }
}

/// Prefix of the Fibonacci word 0100101001001010... (fixed point of
/// 0 -> 01, 1 -> 0), built by the stage recurrence x(k+1) = x(k) x(k-1).
pub fn fibonacci_word(n: usize) -> Word {
    if n == 0 {
        return Word::default();
    }
    let mut v: Vec<Letter> = Vec::with_capacity(n + 1);
    v.push(0);
    if n == 1 {
        return Word(v);
    }
    v.push(1);
    let mut prev_len = 1usize; // length of the stage before the one in v
    while v.len() < n {
        let cur_len = v.len();
        let take = prev_len.min(n - cur_len);
        for i in 0..take {
            let l = v[i];
            v.push(l);
        }
        prev_len = cur_len;
    }
    Word(v)
}

/// Fibonacci word on a two-letter alphabet {a, b}: the image of the
/// Fibonacci word under 0 -> a, 1 -> b, so it begins with `a`.
pub fn fibonacci_word_on(a: Letter, b: Letter, n: usize) -> Word {
    Word(
        fibonacci_word(n)
            .0
            .into_iter()
            .map(|l| if l == 0 { a } else { b })
            .collect(),
    )
}

/// First `n` letters of the characteristic Sturmian word of `alpha` in
/// (0, 1): the letter at position k (1-based) is
/// floor((k+1) alpha) - floor(k alpha), all floors exact.
pub fn sturmian_word(alpha: &QuadraticIrrational, n: usize) -> Word {
    assert!(
        alpha.in_open_unit_interval(),
        "sturmian_word requires 0 < alpha < 1"
    );
    if n == 0 {
        return Word::default();
    }
    let mut letters = Vec::with_capacity(n);
    let mut prev = floor_mul(alpha, 1);
    for k in 1..=n {
        let hi = floor_mul(alpha, k as i64 + 1);
        letters.push(hi - prev);
        prev = hi;
    }
    Word(letters)
}

/// Checks that applying `mu` to a prefix of the Sturmian word of `alpha`
/// reproduces that word out to `n` letters, i.e. that the word is fixed by
/// the morphism as far as the check can see.
pub fn verify_fixes(mu: &Morphism, alpha: &QuadraticIrrational, n: usize) -> Result<bool, WordError> {
    let w = sturmian_word(alpha, n);
    let image = mu.apply(&w)?;
    let shared = n.min(image.len());
    Ok(image.0[..shared] == w.0[..shared])
}

/// The k-block recoding of the fixed point of `mu`: blocks of length k are
/// numbered 1, 2, ... in order of first occurrence, and the returned
/// morphism maps each block code to the codes of the blocks spanned by the
/// image of the letter under that block.
///
/// The fixed point is seeded at the smallest prolongable letter of `mu`.
/// Returns the coded morphism together with the coding table (code i is the
/// block at index i-1). The construction is verified by projecting the coded
/// fixed point back onto the original one.
pub fn block_morphism(
    mu: &Morphism,
    k: usize,
    corpus_depth: usize,
) -> Result<(Morphism, Vec<Word>), WordError> {
    assert!(k >= 1, "block length must be positive");
    let seed = mu
        .alphabet()
        .into_iter()
        .find(|&l| mu.is_prolongable_on(l))
        .ok_or(WordError::NoProlongableLetter)?;
    let u = mu.fixed_point(seed, corpus_depth)?;
    if u.len() < k {
        return Err(WordError::CorpusTooShort { need: k, have: u.len() });
    }
    let n_blocks = u.len() - k + 1;
    let mut codes: BTreeMap<&[Letter], Letter> = BTreeMap::new();
    let mut coding: Vec<Word> = Vec::new();
    let mut coded: Vec<Letter> = Vec::with_capacity(n_blocks);
    for i in 0..n_blocks {
        let block = &u.letters()[i..i + k];
        let code = *codes.entry(block).or_insert_with(|| {
            coding.push(Word(block.to_vec()));
            coding.len() as Letter
        });
        coded.push(code);
    }
    // The block starting at position i maps to the blocks starting at
    // positions m(i)..m(i+1) where m(i) = |mu(u[..i])|; only the first
    // occurrence of each code defines its image.
    let mut first_at: BTreeMap<Letter, usize> = BTreeMap::new();
    for (i, &code) in coded.iter().enumerate() {
        first_at.entry(code).or_insert(i);
    }
    let mut boundary = vec![0usize; n_blocks + 1];
    for i in 0..n_blocks {
        boundary[i + 1] = boundary[i] + mu.image(u.letters()[i])?.len();
    }
    let mut images: BTreeMap<Letter, Word> = BTreeMap::new();
    for (&code, &i) in &first_at {
        let (lo, hi) = (boundary[i], boundary[i + 1]);
        if hi > coded.len() {
            return Err(WordError::BlockInventoryOpen { depth: corpus_depth });
        }
        images.insert(code, Word(coded[lo..hi].to_vec()));
    }
    let block_mu = Morphism::new(images)?;
    // Verification: the coded sequence must be the fixed point of the coded
    // morphism, and projecting codes to their block's first letter must give
    // back the original word.
    let fp = block_mu.fixed_point(coded[0], coded.len())?;
    assert!(fp.0 == coded, "block morphism fixed point mismatch");
    for (i, &code) in coded.iter().enumerate() {
        assert!(
            coding[code as usize - 1].0[0] == u.letters()[i],
            "block coding projection mismatch"
        );
    }
    Ok((block_mu, coding))
}
