//! Complementary-pair machinery: multiset partition checking, the density
//! and Pell necessary conditions, exhaustive search for increasing pairs,
//! and the pair-to-triple and morphic constructions.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::gbs::{Gbs, GbsError};
use crate::quad::{floor_mul, QuadraticIrrational};
use crate::words::{positions_of, Letter, Morphism, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("stream {index} fails to exceed {limit} within the iteration budget")]
    StreamBudget { index: usize, limit: i64 },
    #[error("branch explosion: more than {bound} search nodes")]
    BranchExplosion { bound: u64 },
    #[error("the search cannot pin parameters for this alpha; its fractional part is too close to an integer")]
    UnsupportedAlpha,
    #[error("letter {0} occurs in the word but no sequence is given for it")]
    UncoveredLetter(Letter),
    #[error("letter {letter}: positions and sequence terms first differ at index {index}")]
    PositionMismatch { letter: Letter, index: usize },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Gbs(#[from] GbsError),
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer overflow in exact arithmetic")
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer overflow in exact arithmetic")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Exact,
    Failed,
}

/// Outcome of a coverage check of [1, depth]. `depth` is the largest prefix
/// of the positive integers that the evaluated stream segments fully
/// determine; missing and collision values below it are conclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub verdict: Verdict,
    pub depth: i64,
    pub missing: Vec<i64>,
    pub collisions: Vec<(i64, u32)>,
}

impl PartitionReport {
    pub fn is_exact(&self) -> bool {
        self.verdict == Verdict::Exact
    }
}

/// One stream's contribution: values <= n, plus the last value <= n emitted
/// before the stream first exceeded n (the horizon its segment certifies).
struct PulledStream {
    values: Vec<i64>,
    last_below: i64,
}

/// Streams are almost increasing but may wobble (a GBS with q < 0 dips by a
/// bounded amount), so pulling stops only once the stream clears n by a
/// guard margin: 8*(largest observed single-step decrease + 1), never less
/// than `min_guard`. Callers that know the stream is a GBS pass |p|-based
/// margins to make the cut provably safe.
fn pull_stream(
    stream: &mut dyn Iterator<Item = i64>,
    n: i64,
    min_guard: i64,
    index: usize,
) -> Result<PulledStream, PairError> {
    let budget = 4 * n.max(1) + 64;
    let mut pulls = 0i64;
    let mut prev: Option<i64> = None;
    let mut max_dip = 0i64;
    let mut crossed = false;
    let mut last_below = 0i64;
    let mut values = Vec::new();
    for v in stream {
        pulls += 1;
        if pulls > budget {
            return Err(PairError::StreamBudget { index, limit: n });
        }
        if let Some(p) = prev {
            max_dip = max_dip.max(p - v);
        }
        prev = Some(v);
        if v <= n {
            values.push(v);
            if !crossed {
                last_below = v;
            }
        } else {
            crossed = true;
            let guard = (8 * (max_dip + 1)).max(min_guard);
            if v > n + guard {
                return Ok(PulledStream { values, last_below });
            }
        }
    }
    // Finite stream exhausted below the guard line: everything it will ever
    // contribute has been seen.
    Ok(PulledStream { values, last_below })
}

fn assemble_report(pulled: Vec<PulledStream>, n: i64) -> PartitionReport {
    let depth = pulled
        .iter()
        .map(|s| s.last_below)
        .min()
        .unwrap_or(0)
        .min(n)
        .max(0);
    let mut counts = vec![0u32; depth as usize + 1];
    for s in &pulled {
        for &v in &s.values {
            if v >= 1 && v <= depth {
                counts[v as usize] += 1;
            }
        }
    }
    let mut missing = Vec::new();
    let mut collisions = Vec::new();
    for v in 1..=depth {
        match counts[v as usize] {
            0 => missing.push(v),
            1 => {}
            c => collisions.push((v, c)),
        }
    }
    let verdict = if missing.is_empty() && collisions.is_empty() {
        Verdict::Exact
    } else {
        Verdict::Failed
    };
    PartitionReport { verdict, depth, missing, collisions }
}

/// Checks whether the given integer streams cover [1, depth] exactly once
/// each. Streams are consumed as multisets: duplicated values count twice.
/// Errors when a stream stays at or below `n` past the iteration budget.
pub fn partition_check(
    streams: Vec<Box<dyn Iterator<Item = i64>>>,
    n: i64,
) -> Result<PartitionReport, PairError> {
    let mut pulled = Vec::with_capacity(streams.len());
    for (index, mut stream) in streams.into_iter().enumerate() {
        pulled.push(pull_stream(&mut stream, n, 0, index)?);
    }
    Ok(assemble_report(pulled, n))
}

/// partition_check for GBS streams, with a guard margin derived from each
/// sequence's oscillation amplitude |p| so that no value <= n can appear
/// after pulling stops.
pub fn partition_check_gbs(seqs: &[Gbs], n: i64) -> Result<PartitionReport, PairError> {
    let mut pulled = Vec::with_capacity(seqs.len());
    for (index, g) in seqs.iter().enumerate() {
        let guard = 2 * g.p().abs() + 2;
        let mut stream = g.terms();
        pulled.push(pull_stream(&mut stream, n, guard, index)?);
    }
    Ok(assemble_report(pulled, n))
}

/// The two integer identities equivalent to 1/(p phi + q) + 1/(s phi + t) = 1
/// over the golden ratio: p s + p t + q s - p - s = 0 and
/// q + t - p s - q t = 0.
pub fn density_condition(p: i64, q: i64, s: i64, t: i64) -> bool {
    let (p, q, s, t) = (p as i128, q as i128, s as i128, t as i128);
    let first = checked_add(
        checked_add(checked_mul(p, s), checked_mul(p, t)),
        checked_mul(q, s) - p - s,
    );
    let second = checked_add(q + t, -checked_add(checked_mul(p, s), checked_mul(q, t)));
    first == 0 && second == 0
}

/// Densities of two GBS sum to 1 exactly when x + y = x*y for the slopes
/// x = p1*alpha1 + q1 and y = p2*alpha2 + q2. Evaluated exactly in the basis
/// {1, sqrt(d)} of each slope's field.
pub fn density_identity(v: &Gbs, w: &Gbs) -> bool {
    let slope = |g: &Gbs| -> (i128, i128, i128, i64) {
        let al = g.alpha();
        let x0 = checked_add(
            checked_mul(g.p() as i128, al.a() as i128),
            checked_mul(g.q() as i128, al.c() as i128),
        );
        let x1 = checked_mul(g.p() as i128, al.b() as i128);
        (x0, x1, al.c() as i128, al.d())
    };
    let (x0, x1, c1, d1) = slope(v);
    let (y0, y1, c2, d2) = slope(w);
    let rational_sides = (
        checked_add(checked_mul(x0, c2), checked_mul(y0, c1)),
        checked_mul(x0, y0),
    );
    if d1 == d2 {
        rational_sides.0 == checked_add(rational_sides.1, checked_mul(checked_mul(x1, y1), d1 as i128))
            && checked_add(checked_mul(x1, c2), checked_mul(y1, c1))
                == checked_add(checked_mul(x0, y1), checked_mul(x1, y0))
    } else {
        // slopes in different fields: both must be rational
        x1 == 0 && y1 == 0 && rational_sides.0 == rational_sides.1
    }
}

/// The discriminant obstruction for a golden pair with leading coefficients
/// p and s: Delta = 5 p^2 s^2 - 4 p s must be a perfect square.
pub fn delta_is_square(p: i64, s: i64) -> bool {
    let ps = BigInt::from(p) * BigInt::from(s);
    let delta: BigInt = 5 * &ps * &ps - 4 * &ps;
    if delta < BigInt::from(0) {
        return false;
    }
    let root = delta.sqrt();
    &root * &root == delta
}

/// Whether p divides some Fibonacci number of odd index. Decided by scanning
/// (F_i, F_{i+1}) mod p together with the parity of i over one full period
/// of that combined state.
pub fn divides_odd_index_fib(p: i64) -> bool {
    assert!(p >= 1, "divisor must be positive");
    let (mut a, mut b) = (1 % p, 1 % p); // (F_1, F_2) mod p
    let mut i = 1u64;
    loop {
        if i % 2 == 1 && a == 0 {
            return true;
        }
        let next = (a + b) % p;
        a = b;
        b = next;
        i += 1;
        // state (1, 1) at odd index is the starting point; reaching it again
        // closes the period of (F_i, F_{i+1}, i mod 2)
        if a == 1 % p && b == 1 % p && i % 2 == 1 {
            return false;
        }
    }
}

/// Exact Fibonacci pair (F_j, F_{j+1}) by fast doubling.
fn fib_pair_big(j: u64) -> (BigInt, BigInt) {
    if j == 0 {
        return (BigInt::from(0), BigInt::from(1));
    }
    let (a, b) = fib_pair_big(j / 2);
    let two_b_minus_a = 2 * &b - &a;
    let c = &a * two_b_minus_a; // F(2k)
    let d = &a * &a + &b * &b; // F(2k+1)
    if j % 2 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// A solution (x, y) of 5 p^2 x^2 - 4 x = y^2 with x > 0, built from the
/// smallest odd j with p | F_j: x = (F_j / p)^2 and y = (F_j / p) L_j.
/// Returns None when no odd-index Fibonacci number is divisible by p.
pub fn pell_witness(p: i64) -> Option<(BigInt, BigInt)> {
    assert!(p >= 1, "divisor must be positive");
    // rank of apparition: smallest j >= 1 with p | F_j
    let (mut a, mut b) = (1 % p, 1 % p);
    let mut j = 1u64;
    while a != 0 {
        let next = (a + b) % p;
        a = b;
        b = next;
        j += 1;
        assert!(j <= 6 * p as u64 + 3, "rank of apparition must exist below the Pisano bound");
    }
    // odd-index multiples of F_j exist iff j itself is odd
    if j % 2 == 0 {
        return None;
    }
    let (fj, fj1) = fib_pair_big(j);
    let lucas = 2 * fj1 - &fj;
    let beta = fj / p; // exact: p | F_j
    let x = &beta * &beta;
    let y = beta * lucas;
    debug_assert_eq!(
        5 * BigInt::from(p).pow(2) * &x * &x - 4 * &x,
        &y * &y,
        "witness must satisfy the Pell identity"
    );
    Some((x, y))
}

/// Whether -1 is a square modulo p, by brute force (p is small in all uses).
pub fn neg_one_square_mod(p: i64) -> bool {
    assert!(p >= 1, "modulus must be positive");
    let target = (p - 1) % p; // -1 mod p, with p = 1 giving 0
    (0..p).any(|y| (y as i128 * y as i128 % p as i128) as i64 == target)
}

/// One increasing pair found by the search, verified to the stated depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSolution {
    pub v: Gbs,
    pub w: Gbs,
    pub verified_to: i64,
}

impl PairSolution {
    pub fn sixtuple(&self) -> [i64; 6] {
        [
            self.v.p(),
            self.v.q(),
            self.v.r(),
            self.w.p(),
            self.w.q(),
            self.w.r(),
        ]
    }
}

/// Per-stream search state: how many terms the stream holds, its first and
/// last values, and what is known about its difference pattern. A stream's
/// differences follow base + p*c(k), where c is the Sturmian word of the
/// fractional part of alpha; observing both letters pins (base, p).
#[derive(Clone, Copy)]
struct StreamState {
    count: u64,
    first: i64,
    last: i64,
    seen: Option<(i64, u8)>,
    pinned: Option<(i64, i64)>,
}

impl StreamState {
    fn empty() -> Self {
        StreamState { count: 0, first: 0, last: 0, seen: None, pinned: None }
    }

    /// Forced next value once pinned.
    fn forced_next(&self, c_word: &[u8]) -> Option<i64> {
        let (base, p) = self.pinned?;
        if self.count == 0 {
            return None;
        }
        let class = c_word[self.count as usize] as i64;
        Some(self.last + base + p * class)
    }

    /// Tries to extend the stream with value m; returns the updated state or
    /// None when the difference pattern rules it out.
    fn extend(&self, m: i64, c_word: &[u8]) -> Option<StreamState> {
        let mut next = *self;
        if self.count == 0 {
            next.first = m;
            next.last = m;
            next.count = 1;
            return Some(next);
        }
        let diff = m - self.last;
        let class = c_word[self.count as usize];
        match (self.pinned, self.seen) {
            (Some((base, p)), _) => {
                if diff != base + p * class as i64 {
                    return None;
                }
            }
            (None, Some((d0, e0))) => {
                if class == e0 {
                    if diff != d0 {
                        return None;
                    }
                } else {
                    let (base, other) = if e0 == 0 { (d0, diff) } else { (diff, d0) };
                    let p = other - base;
                    if p == 0 {
                        return None; // trivial stream, out of scope
                    }
                    next.pinned = Some((base, p));
                }
            }
            (None, None) => {
                next.seen = Some((diff, class));
            }
        }
        next.last = m;
        next.count += 1;
        Some(next)
    }
}

struct SearchCtx {
    alpha: QuadraticIrrational,
    c_word: Vec<u8>,
    n_verify: i64,
    branch_bound: u64,
    nodes: u64,
    max_depth: i64,
    keep_one_first: bool,
    found: BTreeSet<[i64; 6]>,
    solutions: Vec<PairSolution>,
}

impl SearchCtx {
    fn resolve(&mut self, streams: [StreamState; 2]) -> Result<(), PairError> {
        let m_int = self.alpha.floor();
        let mut pair = Vec::with_capacity(2);
        for s in &streams {
            let (base, p) = s.pinned.expect("resolve requires pinned streams");
            // increasing solutions only: both difference letters positive
            if base <= 0 || base + p <= 0 {
                return Ok(());
            }
            let q = base - p * m_int;
            let r = s.first - p * m_int - q;
            pair.push(Gbs::new(p, q, r, self.alpha, 1)?);
        }
        let (v, w) = (pair[0], pair[1]);
        if !density_identity(&v, &w) {
            return Ok(());
        }
        let report = partition_check_gbs(&[v, w], self.n_verify)?;
        if !report.is_exact() {
            return Ok(());
        }
        // presentation: the stream containing 1 goes first when the search
        // band allows it to be read off; otherwise lead with positive p
        let (v, w) = if self.keep_one_first || v.p() > 0 { (v, w) } else { (w, v) };
        let sol = PairSolution { v, w, verified_to: report.depth };
        if self.found.insert(sol.sixtuple()) {
            self.solutions.push(sol);
        }
        Ok(())
    }

    fn dfs(&mut self, m: i64, streams: [StreamState; 2]) -> Result<(), PairError> {
        if streams.iter().all(|s| s.pinned.is_some()) {
            return self.resolve(streams);
        }
        assert!(
            m <= self.max_depth,
            "search failed to pin parameters within its designed horizon"
        );
        for idx in 0..2 {
            // a pinned stream whose forced next value was skipped can never
            // emit it, so the whole node is dead
            if let Some(f) = streams[idx].forced_next(&self.c_word) {
                if f < m {
                    return Ok(());
                }
            }
        }
        for idx in 0..2 {
            self.nodes += 1;
            if self.nodes > self.branch_bound {
                return Err(PairError::BranchExplosion { bound: self.branch_bound });
            }
            if let Some(next) = streams[idx].extend(m, &self.c_word) {
                let mut branched = streams;
                branched[idx] = next;
                self.dfs(m + 1, branched)?;
            }
        }
        Ok(())
    }
}

/// Exhaustive search for non-trivial increasing pairs (V, W) over alpha that
/// partition the positive integers, normalized so that 1 is a term of the
/// first stream. Integers 1, 2, 3, ... are assigned to one of the two
/// streams; each stream's successive gaps must follow the Sturmian pattern
/// base + p*c(k) of alpha's fractional part, which pins (p, q, r) after
/// finitely many terms. Pinned candidates are verified by partition_check
/// to `n_verify` and by the exact density identity.
///
/// Solutions are reported as (V; W) sixtuples, deduplicated and sorted in
/// descending lexicographic order, each tagged with the verified depth.
pub fn pair_search(
    alpha: &QuadraticIrrational,
    n_verify: i64,
    branch_bound: u64,
) -> Result<Vec<PairSolution>, PairError> {
    let frac = alpha.frac();
    // the search horizon assumes the rarer difference letter shows up at
    // least once every six steps: require 1/6 < {alpha} < 5/6
    let six = frac.affine(6, 0).expect("small affine");
    if six.cmp_int(1) != std::cmp::Ordering::Greater
        || six.cmp_int(5) != std::cmp::Ordering::Less
    {
        return Err(PairError::UnsupportedAlpha);
    }
    let change = {
        let c1 = floor_mul(&frac, 2) - floor_mul(&frac, 1);
        let mut k = 2i64;
        loop {
            let ck = floor_mul(&frac, k + 1) - floor_mul(&frac, k);
            if ck != c1 {
                break k;
            }
            k += 1;
            assert!(k < 1 << 20, "fractional part has no letter change in range");
        }
    };
    let max_depth = 8 * (change + 2) + 16;
    let c_word: Vec<u8> = (0..=max_depth + 2)
        .map(|k| {
            if k == 0 {
                0
            } else {
                (floor_mul(&frac, k + 1) - floor_mul(&frac, k)) as u8
            }
        })
        .collect();
    let keep_one_first = {
        let three = frac.affine(3, 0).expect("small affine");
        three.cmp_int(1) == std::cmp::Ordering::Greater
            && three.cmp_int(2) == std::cmp::Ordering::Less
    };
    let mut ctx = SearchCtx {
        alpha: *alpha,
        c_word,
        n_verify,
        branch_bound,
        nodes: 0,
        max_depth,
        keep_one_first,
        found: BTreeSet::new(),
        solutions: Vec::new(),
    };
    // V(1) = 1 by convention: the stream containing 1 is stream 0
    let mut streams = [StreamState::empty(), StreamState::empty()];
    streams[0] = streams[0].extend(1, &ctx.c_word).expect("first term");
    ctx.dfs(2, streams)?;
    let mut solutions = ctx.solutions;
    solutions.sort_by(|a, b| b.sixtuple().cmp(&a.sixtuple()));
    Ok(solutions)
}

/// Splits a golden pair (V, W) into the complementary triple
/// (V after A, V after B, W).
pub fn pair_to_triple(v: &Gbs, w: &Gbs) -> Result<(Gbs, Gbs, Gbs), GbsError> {
    Ok((v.compose_a()?, v.compose_b()?, *w))
}

/// Generates the fixed point of `mu` from `seed` (optionally recoded by
/// `post_map`), checks that the positions of each expected letter agree
/// elementwise with the paired GBS out to `n`, and partition-checks the
/// union of the position streams.
pub fn morphic_partition_check(
    mu: &Morphism,
    seed: Letter,
    post_map: Option<&Morphism>,
    expected: &[(Letter, Gbs)],
    n: usize,
) -> Result<PartitionReport, PairError> {
    let mut word = mu.fixed_point(seed, n)?;
    if let Some(post) = post_map {
        word = post.apply(&word)?;
        word.0.truncate(n);
    }
    for &l in word.letters() {
        if !expected.iter().any(|&(e, _)| e == l) {
            return Err(PairError::UncoveredLetter(l));
        }
    }
    let mut position_streams: Vec<Box<dyn Iterator<Item = i64>>> = Vec::new();
    for &(letter, gbs) in expected {
        let positions: Vec<i64> = positions_of(&word, letter)
            .into_iter()
            .map(|u| u as i64)
            .collect();
        let terms: Vec<i64> = gbs.terms().take_while(|&t| t <= n as i64).collect();
        for (i, (&got, &want)) in positions.iter().zip(terms.iter()).enumerate() {
            if got != want {
                return Err(PairError::PositionMismatch { letter, index: i + 1 });
            }
        }
        if positions.len() != terms.len() {
            let index = positions.len().min(terms.len()) + 1;
            return Err(PairError::PositionMismatch { letter, index });
        }
        position_streams.push(Box::new(positions.into_iter()));
    }
    partition_check(position_streams, n as i64)
}
