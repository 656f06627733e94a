//! Exact arithmetic on real quadratic irrationals of the form (a + b*sqrt(d))/c.
//!
//! Everything in this module is decided by integer comparisons; no floating
//! point is used anywhere. Values are kept in a canonical form so that
//! structural equality coincides with numerical equality.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Errors from constructing or evaluating quadratic irrationals.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuadError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("value is rational, not a quadratic irrational")]
    Rational,
    #[error("radicand must be nonnegative")]
    NegativeRadicand,
    #[error("negative input to isqrt")]
    NegativeInput,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("operands lie in different quadratic fields ({0} vs {1})")]
    FieldMismatch(i64, i64),
}

/// Floor of the exact square root of a nonnegative integer.
///
/// Rejects negative input; never overflows (the result of a `u128`
/// Newton iteration always fits back into `i128`).
pub fn isqrt(m: i128) -> Result<i128, QuadError> {
    if m < 0 {
        return Err(QuadError::NegativeInput);
    }
    Ok(isqrt_u128(m as u128) as i128)
}

/// Newton's method on integers; converges monotonically from above.
pub(crate) fn isqrt_u128(m: u128) -> u128 {
    if m < 2 {
        return m;
    }
    // Seed strictly above the root to keep the iteration monotone.
    let mut x = 1u128 << (m.ilog2() / 2 + 1);
    loop {
        let y = (x + m / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// True iff `m` is a perfect square.
pub fn is_square(m: i128) -> bool {
    if m < 0 {
        return false;
    }
    let s = isqrt_u128(m as u128);
    s * s == m as u128
}

fn checked_mul(x: i128, y: i128) -> i128 {
    x.checked_mul(y).expect("integer overflow in exact arithmetic")
}

fn checked_add(x: i128, y: i128) -> i128 {
    x.checked_add(y).expect("integer overflow in exact arithmetic")
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Compares the integer `t` against `b*sqrt(d)` exactly (`d >= 2`, not a
/// perfect square). Works by comparing squares with sign handling.
pub(crate) fn cmp_int_vs_surd(t: i128, b: i128, d: i128) -> Ordering {
    if b == 0 {
        return t.cmp(&0);
    }
    let bb_d = checked_mul(checked_mul(b, b), d);
    if b > 0 {
        if t < 0 {
            Ordering::Less
        } else {
            checked_mul(t, t).cmp(&bb_d)
        }
    } else if t >= 0 {
        Ordering::Greater
    } else {
        // both negative: t < b*sqrt(d) iff t^2 > b^2 d
        bb_d.cmp(&checked_mul(t, t))
    }
}

/// A real quadratic irrational (a + b*sqrt(d))/c in canonical form:
/// d >= 2 squarefree, c > 0, gcd(a, b, c) = 1 and b != 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl QuadraticIrrational {
    /// Builds (a + b*sqrt(d))/c, normalizing: the square part of d is folded
    /// into b, signs are fixed so c > 0, and the common divisor of (a, b, c)
    /// is removed. Rational inputs (b = 0, or d a perfect square) are
    /// rejected, as are c = 0 and d < 0.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, QuadError> {
        if c == 0 {
            return Err(QuadError::ZeroDenominator);
        }
        if d < 0 {
            return Err(QuadError::NegativeRadicand);
        }
        if b == 0 || d == 0 {
            return Err(QuadError::Rational);
        }
        let (mut a, mut b, mut c) = (a as i128, b as i128, c as i128);
        let mut d = d as i128;
        // Extract the square part of d. Trial division is fine here: inputs
        // are i64 and construction is not a hot path.
        let mut f = 2i128;
        while f * f <= d {
            let sq = f * f;
            while d % sq == 0 {
                d /= sq;
                b = b.checked_mul(f).ok_or(QuadError::Overflow)?;
            }
            f += 1;
        }
        if d == 1 {
            return Err(QuadError::Rational);
        }
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = gcd(gcd(a, b), c);
        if g > 1 {
            a /= g;
            b /= g;
            c /= g;
        }
        let back = |x: i128| i64::try_from(x).map_err(|_| QuadError::Overflow);
        Ok(Self { a: back(a)?, b: back(b)?, c: back(c)?, d: back(d)? })
    }

    /// The golden ratio (1 + sqrt(5))/2.
    pub fn golden() -> Self {
        Self { a: 1, b: 1, c: 2, d: 5 }
    }

    /// sqrt(d) for a nonsquare d >= 2; sqrt(8) normalizes to 2*sqrt(2).
    pub fn sqrt(d: i64) -> Result<Self, QuadError> {
        Self::new(0, 1, 1, d)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The algebraic conjugate (a - b*sqrt(d))/c.
    pub fn conjugate(&self) -> Self {
        Self { a: self.a, b: -self.b, c: self.c, d: self.d }
    }

    /// Exact sign of self - t for an integer t.
    pub fn cmp_int(&self, t: i64) -> Ordering {
        // (a + b sqrt d)/c vs t  <=>  a - tc vs -b sqrt d ... rearranged:
        // compare b*sqrt(d) against tc - a.
        let lhs = checked_mul(t as i128, self.c as i128) - self.a as i128;
        cmp_int_vs_surd(lhs, self.b as i128, self.d as i128).reverse()
    }

    /// Floor of the value itself.
    pub fn floor(&self) -> i64 {
        floor_mul(self, 1)
    }

    /// Fractional part as a quadratic irrational (always irrational).
    pub fn frac(&self) -> Self {
        self.add_int(-self.floor())
    }

    /// self + k, exactly.
    pub fn add_int(&self, k: i64) -> Self {
        let a = checked_add(self.a as i128, checked_mul(k as i128, self.c as i128));
        Self { a: i64::try_from(a).expect("integer overflow in exact arithmetic"), ..*self }
    }

    /// self + other; both must lie in the same quadratic field.
    pub fn add(&self, other: &Self) -> Result<Self, QuadError> {
        if self.d != other.d {
            return Err(QuadError::FieldMismatch(self.d, other.d));
        }
        let (a1, b1, c1) = (self.a as i128, self.b as i128, self.c as i128);
        let (a2, b2, c2) = (other.a as i128, other.b as i128, other.c as i128);
        Self::from_i128(a1 * c2 + a2 * c1, b1 * c2 + b2 * c1, c1 * c2, self.d as i128)
    }

    /// self * other; both must lie in the same quadratic field.
    pub fn mul(&self, other: &Self) -> Result<Self, QuadError> {
        if self.d != other.d {
            return Err(QuadError::FieldMismatch(self.d, other.d));
        }
        let (a1, b1, c1) = (self.a as i128, self.b as i128, self.c as i128);
        let (a2, b2, c2) = (other.a as i128, other.b as i128, other.c as i128);
        let d = self.d as i128;
        Self::from_i128(a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1, c1 * c2, d)
    }

    /// p*self + q, exactly. Errors when p = 0 (the result would be rational).
    pub fn affine(&self, p: i64, q: i64) -> Result<Self, QuadError> {
        let (p, q) = (p as i128, q as i128);
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        Self::from_i128(p * a + q * c, p * b, c, self.d as i128)
    }

    fn from_i128(a: i128, b: i128, c: i128, d: i128) -> Result<Self, QuadError> {
        if b == 0 {
            return Err(QuadError::Rational);
        }
        let mut a = a;
        let mut b = b;
        let mut c = c;
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = gcd(gcd(a, b), c);
        if g > 1 {
            a /= g;
            b /= g;
            c /= g;
        }
        let back = |x: i128| i64::try_from(x).map_err(|_| QuadError::Overflow);
        // d is already squarefree here (operands were canonical).
        Ok(Self { a: back(a)?, b: back(b)?, c: back(c)?, d: back(d)? })
    }

    /// True iff the value lies strictly inside (0, 1).
    pub fn in_open_unit_interval(&self) -> bool {
        self.cmp_int(0) == Ordering::Greater && self.cmp_int(1) == Ordering::Less
    }

    /// Sturm number test: the value lies in (0,1) while its conjugate does
    /// not. Endpoints cannot occur (the value is irrational).
    pub fn is_sturm(&self) -> bool {
        self.in_open_unit_interval() && !self.conjugate().in_open_unit_interval()
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::golden() {
            write!(f, "golden")
        } else if self.a == 0 && self.c == 1 && self.b > 0 {
            if self.b == 1 {
                write!(f, "sqrt:{}", self.d)
            } else {
                write!(f, "sqrt:{}", (self.b as i128 * self.b as i128) as i64 * self.d)
            }
        } else {
            write!(f, "quad:{},{},{},{}", self.a, self.b, self.c, self.d)
        }
    }
}

/// Exact floor(n * alpha) for n >= 1.
///
/// Finds the unique integer k with c*k <= a*n + b*n*sqrt(d) < c*(k+1); the
/// irrational part is bounded by its own integer square root, and the nested
/// floor identity floor(x/c) = floor(floor(x)/c) (c a positive integer)
/// finishes the job.
pub fn floor_mul(alpha: &QuadraticIrrational, n: i64) -> i64 {
    assert!(n >= 1, "floor_mul requires n >= 1");
    let a = checked_mul(alpha.a as i128, n as i128);
    let b = checked_mul(alpha.b as i128, n as i128);
    let c = alpha.c as i128;
    let d = alpha.d as i128;
    let s = isqrt_u128(checked_mul(checked_mul(b, b), d) as u128) as i128;
    // floor(a + b*sqrt(d)): b*sqrt(d) is irrational, so for b < 0 the floor
    // of the surd part is -s - 1.
    let num = if b > 0 { checked_add(a, s) } else { a - s - 1 };
    let k = num.div_euclid(c);
    debug_assert!({
        // Direct check of c*k <= a*n + b*n*sqrt(d) < c*(k+1) by comparing
        // t = c*k - a*n against b*n*sqrt(d).
        let lo = cmp_int_vs_surd(checked_mul(c, k) - a, b, d) != Ordering::Greater;
        let hi = cmp_int_vs_surd(checked_mul(c, k + 1) - a, b, d) == Ordering::Greater;
        lo && hi
    });
    i64::try_from(k).expect("integer overflow in exact arithmetic")
}

/// A continued fraction expansion with its periodic tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    pub preperiod: Vec<i64>,
    pub period: Vec<i64>,
}

/// Error from `cf_expansion` when the quotient budget is exhausted before
/// the period closes; carries the partial quotients.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("period not yet detected after {} quotients", partial.len())]
pub struct PeriodNotDetected {
    pub partial: Vec<i64>,
}

/// Continued fraction of a quadratic irrational via the integer state
/// machine on (P + sqrt(D))/Q states. The period is detected by the first
/// repeated state; the leading quotient (which may be negative) is always
/// reported in the preperiod.
pub fn cf_expansion(
    alpha: &QuadraticIrrational,
    max_quotients: usize,
) -> Result<CfExpansion, PeriodNotDetected> {
    // Rewrite (a + b*sqrt(d))/c as (P + sqrt(D))/Q with D = b^2 d.
    let sign = if alpha.b > 0 { 1 } else { -1 };
    let mut p = sign as i128 * alpha.a as i128;
    let mut q = sign as i128 * alpha.c as i128;
    let mut big_d = checked_mul(
        checked_mul(alpha.b as i128, alpha.b as i128),
        alpha.d as i128,
    );
    // The recurrence needs Q | D - P^2; scale the state if necessary.
    if (big_d - p * p) % q != 0 {
        big_d = checked_mul(big_d, checked_mul(q, q));
        p = checked_mul(p, q.abs());
        q = checked_mul(q, q.abs());
    }
    let mut quotients: Vec<i64> = Vec::new();
    let mut seen: Vec<(i128, i128)> = Vec::new(); // states before quotient k, k >= 1
    for k in 0..max_quotients {
        if k >= 1 {
            if let Some(i) = seen.iter().position(|&st| st == (p, q)) {
                return Ok(CfExpansion {
                    preperiod: quotients[..=i].to_vec(),
                    period: quotients[i + 1..].to_vec(),
                });
            }
            seen.push((p, q));
        }
        let s = isqrt_u128(big_d as u128) as i128;
        let a_k = if q > 0 {
            (p + s).div_euclid(q)
        } else {
            (-p - s - 1).div_euclid(-q)
        };
        quotients.push(i64::try_from(a_k).expect("integer overflow in exact arithmetic"));
        p = checked_mul(a_k, q) - p;
        q = (big_d - checked_mul(p, p)) / q;
        debug_assert!(q != 0);
    }
    Err(PeriodNotDetected { partial: quotients })
}
