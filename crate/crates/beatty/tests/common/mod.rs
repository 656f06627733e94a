// Helpers shared by the integration suites.
//
// The floor oracle re-derives floor(n * alpha) from a 200-digit decimal
// approximation of sqrt(d), sharing no code with quad::floor_mul. Each call
// brackets the true value between two rationals whose floors must agree, so
// a result is only ever returned when the approximation provably cannot
// matter.

use beatty::gbs::{csh_compose, fibonacci, CshLetter};
use beatty::quad::{floor_mul, QuadraticIrrational};
use num_bigint::{BigInt, Sign};

const ORACLE_DIGITS: u32 = 200;

pub struct FloorOracle {
    a: BigInt,
    b: BigInt,
    den: BigInt,
    scale: BigInt,
    // floor(sqrt(d) * 10^200), certified by squaring
    root: BigInt,
}

impl FloorOracle {
    pub fn new(alpha: &QuadraticIrrational) -> Self {
        assert!(alpha.c() > 0, "normalized denominators are positive");
        let scale = BigInt::from(10).pow(ORACLE_DIGITS);
        let target = BigInt::from(alpha.d()) * &scale * &scale;
        let root = target.sqrt();
        assert!(&root * &root <= target, "scaled root overshoots");
        assert!((&root + 1) * (&root + 1) > target, "scaled root undershoots");
        FloorOracle {
            a: alpha.a().into(),
            b: alpha.b().into(),
            den: BigInt::from(alpha.c()) * &scale,
            scale,
            root,
        }
    }

    pub fn floor_mul(&self, n: i64) -> i64 {
        let lo = BigInt::from(n) * (&self.a * &self.scale + &self.b * &self.root);
        let hi = BigInt::from(n) * (&self.a * &self.scale + &self.b * (&self.root + 1));
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        let f = div_floor(&lo, &self.den);
        assert_eq!(
            f,
            div_floor(&hi, &self.den),
            "200 digits do not separate the floor at n = {n}"
        );
        i64::try_from(&f).expect("oracle value fits i64")
    }
}

fn div_floor(num: &BigInt, den: &BigInt) -> BigInt {
    let q = num / den;
    if (num - &q * den).sign() == Sign::Minus {
        q - 1
    } else {
        q
    }
}

/// Checks floor_mul against the oracle for n = 1..=n_max and returns the
/// number of agreements.
pub fn assert_floor_matches_oracle(alpha: &QuadraticIrrational, n_max: i64) -> i64 {
    let oracle = FloorOracle::new(alpha);
    for n in 1..=n_max {
        assert_eq!(
            floor_mul(alpha, n),
            oracle.floor_mul(n),
            "floor_mul({alpha}, {n})"
        );
    }
    n_max
}

/// Every composition word over {A, B} of length 1..=max_len: csh_compose
/// must match direct nesting of A(n) = floor(n*phi) and B(n) = A(n) + n for
/// n = 1..=n_check, with the Fibonacci coefficient law and a constant
/// lambda. Returns the number of words checked.
pub fn csh_nesting_sweep(max_len: u32, n_check: i64) -> usize {
    let phi = QuadraticIrrational::golden();
    let mut words = 0;
    for len in 1..=max_len {
        for mask in 0u32..1 << len {
            let word: Vec<CshLetter> = (0..len)
                .map(|bit| {
                    if mask >> bit & 1 == 0 {
                        CshLetter::A
                    } else {
                        CshLetter::B
                    }
                })
                .collect();
            let (g, coeffs) = csh_compose(&word).expect("word is nonempty");
            let i = word.iter().filter(|&&l| l == CshLetter::A).count() as u32;
            let j = len - i;
            assert_eq!(coeffs.coeff_a, fibonacci(i + 2 * j), "A-coefficient law");
            assert_eq!(coeffs.coeff_id, fibonacci(i + 2 * j - 1), "consecutive pair");
            assert_eq!(
                (g.p(), g.q(), g.r()),
                (coeffs.coeff_a, coeffs.coeff_id, -coeffs.lambda),
                "coefficient view matches the composed sequence"
            );
            for n in 1..=n_check {
                // first letter is the outermost map
                let mut v = n;
                for &l in word.iter().rev() {
                    v = match l {
                        CshLetter::A => floor_mul(&phi, v),
                        CshLetter::B => floor_mul(&phi, v) + v,
                    };
                }
                assert_eq!(g.eval(n as u64).unwrap(), v, "word {word:?} at n = {n}");
            }
            words += 1;
        }
    }
    words
}
