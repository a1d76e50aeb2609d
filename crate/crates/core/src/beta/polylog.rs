//! Polylogarithm tails L_s(1/z) = sum_{n>=1} z^-n n^-s for rational z > 1.
//! Closed rational forms exist for s <= 0 (delta steps down through them);
//! for s >= 1 a truncated series with a geometric tail bound yields an
//! enclosure of requested width.

use num_traits::{One, Zero};

use crate::exact::{rat, RatInterval, Rational};
use crate::{Error, Result};

fn check_region(z: &Rational) -> Result<()> {
    if *z <= Rational::one() {
        return Err(Error::Divergence { z: z.to_string() });
    }
    Ok(())
}

/// Coefficients c_j with L_(-m)(1/z) = sum_j c_j / (z-1)^j; c starts as [1]
/// for m = 0 and each application of -delta maps c_j to j c_j + (j-1) c_(j-1).
fn neg_polylog_coeffs(m: u32) -> Vec<Rational> {
    let mut c = vec![Rational::one()];
    for _ in 0..m {
        let mut next = vec![Rational::zero(); c.len() + 1];
        for (idx, v) in c.iter().enumerate() {
            let j = (idx + 1) as i64;
            next[idx] += v * rat(j, 1);
            next[idx + 1] += v * rat(j, 1);
        }
        c = next;
    }
    c
}

/// Exact value of L_s(1/z) for s <= 0.
pub fn polylog_tail_closed(s: i64, z: &Rational) -> Result<Rational> {
    assert!(s <= 0);
    check_region(z)?;
    let c = neg_polylog_coeffs((-s) as u32);
    let w = z - Rational::one();
    let mut acc = Rational::zero();
    let mut wpow = Rational::one();
    for v in &c {
        wpow *= &w;
        acc += v / &wpow;
    }
    Ok(acc)
}

/// Enclosure of L_s(1/z) of width at most `tol`. Closed form (exact point)
/// for s <= 0; truncated series plus tail bound for s >= 1.
pub fn polylog_tail(s: i64, z: &Rational, tol: &Rational) -> Result<RatInterval> {
    check_region(z)?;
    if s <= 0 {
        return Ok(RatInterval::point(polylog_tail_closed(s, z)?));
    }
    let inv_z = Rational::one() / z;
    let mut sum = Rational::zero();
    let mut zpow = Rational::one();
    let mut n: u64 = 0;
    loop {
        n += 1;
        zpow *= &inv_z;
        let mut term = zpow.clone();
        for _ in 0..s {
            term /= rat(n as i64, 1);
        }
        sum += &term;
        // tail <= (n+1)^-s z^-n / (z-1), decreasing in n
        let mut bound = &zpow / (z - Rational::one());
        for _ in 0..s {
            bound /= rat(n as i64 + 1, 1);
        }
        if &bound <= tol {
            return Ok(RatInterval::new(sum.clone(), sum + bound));
        }
    }
}

/// Enclosure of log z for rational z > 1, via log z = -log(1 - x) with
/// x = (z-1)/z in (0, 1).
pub fn log_interval(z: &Rational, tol: &Rational) -> Result<RatInterval> {
    check_region(z)?;
    let x = (z - Rational::one()) / z;
    let mut sum = Rational::zero();
    let mut xpow = Rational::one();
    let mut n: u64 = 0;
    loop {
        n += 1;
        xpow *= &x;
        sum += &xpow / rat(n as i64, 1);
        // tail <= x^(n+1) / ((n+1)(1-x)) = z x^(n+1) / (n+1)
        let bound = z * &xpow * &x / rat(n as i64 + 1, 1);
        if &bound <= tol {
            return Ok(RatInterval::new(sum.clone(), sum + bound));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_traits::Signed;

    #[test]
    fn closed_forms_at_z2() {
        // L_0(1/2) = 1/(z-1) = 1
        assert_eq!(polylog_tail_closed(0, &rat(2, 1)).unwrap(), rat(1, 1));
        // L_(-1) = 1/(z-1) + 1/(z-1)^2 = 2
        assert_eq!(polylog_tail_closed(-1, &rat(2, 1)).unwrap(), rat(2, 1));
        // L_(-2) = 1/(z-1) + 3/(z-1)^2 + 2/(z-1)^3 = 6
        assert_eq!(polylog_tail_closed(-2, &rat(2, 1)).unwrap(), rat(6, 1));
    }

    #[test]
    fn closed_forms_match_series() {
        // for s <= 0 the truncated series must enclose the closed form
        for s in [0i64, -1, -2] {
            let closed = polylog_tail_closed(s, &rat(3, 1)).unwrap();
            let mut sum = rat(0, 1);
            for n in 1..=60i64 {
                let mut term = rat(1, 1) / rat(3, 1).pow(n as i32);
                for _ in 0..(-s) {
                    term *= rat(n, 1);
                }
                sum += term;
            }
            assert!((closed - sum).abs() < rat(1, 1_000_000_000), "s = {s}");
        }
    }

    #[test]
    fn l3_at_half() {
        let enc = polylog_tail(3, &rat(2, 1), &rat(1, 2_000_000_000)).unwrap();
        // frozen from the enclosure itself at tighter tolerance
        let tight = polylog_tail(3, &rat(2, 1), &rat(1, 1_000_000_000_000)).unwrap();
        assert!(enc.contains_interval(&tight));
        let digits = crate::oracle::certified_digits(&enc, 9).unwrap();
        assert_eq!(digits, "0.537213194");
    }

    #[test]
    fn divergence_detected() {
        assert!(polylog_tail(2, &rat(1, 1), &rat(1, 100)).is_err());
        assert!(log_interval(&rat(9, 10), &rat(1, 100)).is_err());
    }

    #[test]
    fn log_of_two() {
        let enc = log_interval(&rat(2, 1), &rat(1, 10_000_000_000)).unwrap();
        let digits = crate::oracle::certified_digits(&enc, 9).unwrap();
        assert_eq!(digits, "0.693147181");
    }
}
