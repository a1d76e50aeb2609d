//! Arbitrary-precision rational scalars plus factorial/binomial helpers.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! two invariants every caller relies on: values are stored in lowest terms
//! and the denominator is positive. Helpers here cover the constructions the
//! rest of the crate needs constantly: small literals, factorials (memoized),
//! and binomial coefficients that are zero outside `0 <= k <= n`.

use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The universal exact scalar.
pub type Rational = num_rational::BigRational;

/// `n` as a `BigInt`.
pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `n/d` as a `Rational`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(int(n), int(d))
}

fn factorial_cache() -> &'static Mutex<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// `n!` as a `BigInt`, memoized across calls.
pub fn factorial(n: u64) -> BigInt {
    let mut cache = factorial_cache().lock().unwrap();
    while (cache.len() as u64) <= n {
        let k = cache.len() as u64;
        let next = cache.last().unwrap() * int(k as i64);
        cache.push(next);
    }
    cache[n as usize].clone()
}

/// Binomial coefficient `C(n, k)` over big integers; zero outside range.
pub fn binom_big(n: &BigInt, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n.is_negative() {
        // C(n, k) = (-1)^k C(k - n - 1, k) would extend to negative n, but
        // no caller needs it; the tables all live in n >= 0.
        panic!("binom_big: negative upper index {n}");
    }
    if BigInt::from(k) > *n {
        return BigInt::zero();
    }
    // Product form keeps intermediate values integral: the running value
    // after j steps is C(n, j).
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - int(j)) / int(j + 1);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as an exact `Rational`; zero for `k < 0`
/// or `k > n`.
pub fn binom(n: u64, k: i64) -> Rational {
    Rational::from(binom_big(&int(n as i64), k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_edges() {
        assert_eq!(binom(0, 0), rat(1, 1));
        assert_eq!(binom(4, 2), rat(6, 1));
        assert_eq!(binom(3, -1), rat(0, 1));
        assert_eq!(binom(3, 5), rat(0, 1));
    }

    #[test]
    fn binom_squares_from_beta_table() {
        // C(3,2)^2 * C(3,1)^2 = 81, the table value at alpha=1, nu=2, k=1.
        let v = binom(3, 2) * binom(3, 2) * binom(3, 1) * binom(3, 1);
        assert_eq!(v, rat(81, 1));
    }

    #[test]
    fn factorial_memo() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(10), int(3628800));
        // second lookup hits the cache
        assert_eq!(factorial(5), int(120));
    }

    proptest! {
        #[test]
        fn add_sub_round_trip(a in -1000i64..1000, b in 1i64..100, c in -1000i64..1000, d in 1i64..100) {
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!((x.clone() + y.clone()) - y, x);
        }

        #[test]
        fn stored_in_lowest_terms(a in -1000i64..1000, b in 1i64..100, k in 1i64..50) {
            let x = rat(a * k, b * k);
            prop_assert_eq!(x, rat(a, b));
        }
    }
}
