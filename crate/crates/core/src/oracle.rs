//! Independent reference for zeta(3) = sum 1/n^3, with certified rational
//! enclosures, decimal digit extraction, and the log-slope regression used
//! by the convergence-rate checks.
//!
//! Two tail bounds are provided for the same series. The integral bound
//! 1/(2N^2) <= sum_{n>=N} 1/n^3 <= 1/(2(N-1)^2) is simple but its enclosure
//! width shrinks only like N^-3. The Euler-Maclaurin form with exact
//! Bernoulli-number corrections reaches hundreds of digits at modest N and
//! is what the high-precision callers use. Both come from the series alone;
//! nothing here touches the recurrence machinery being tested against it.

use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{int, rat, RatInterval, Rational};
use crate::{Error, Result};

/// sum_{n=1}^{n_max} 1/n^3 as a single exact rational, by binary splitting.
pub fn partial_sum_inv_cubes(n_max: u64) -> Rational {
    fn split(a: u64, b: u64) -> (BigInt, BigInt) {
        // returns (num, den) of sum_{n=a}^{b} 1/n^3, unreduced
        if a == b {
            let n = int(a as i64);
            return (BigInt::one(), &n * &n * &n);
        }
        let mid = (a + b) / 2;
        let (n1, d1) = split(a, mid);
        let (n2, d2) = split(mid + 1, b);
        (&n1 * &d2 + &n2 * &d1, d1 * d2)
    }
    if n_max == 0 {
        return Rational::zero();
    }
    let (num, den) = split(1, n_max);
    Rational::new(num, den)
}

/// Enclosure of zeta(3) from the partial sum to N-1 plus the integral tail
/// bound: tail(N) = sum_{n>=N} 1/n^3 lies in [1/(2N^2), 1/(2(N-1)^2)].
pub fn zeta3_interval_integral(n: u64) -> RatInterval {
    assert!(n >= 2, "integral tail bound needs N >= 2");
    let s = partial_sum_inv_cubes(n - 1);
    let lo = &s + rat(1, 2) / rat((n * n) as i64, 1);
    let hi = &s + rat(1, 2) / rat(((n - 1) * (n - 1)) as i64, 1);
    RatInterval::new(lo, hi)
}

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// Bernoulli number B_n (B_1 = -1/2 convention), exact and memoized.
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = bernoulli_cache().lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
        let mut acc = Rational::zero();
        let mut c = BigInt::one(); // running C(m+1, k)
        for (k, b) in cache.iter().enumerate() {
            acc += Rational::from(c.clone()) * b;
            c = c * int((m + 1 - k) as i64) / int((k + 1) as i64);
        }
        let bm = -acc / rat((m + 1) as i64, 1);
        cache.push(bm);
    }
    cache[n].clone()
}

fn pow_int(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Euler-Maclaurin tail for sum_{n>=N} 1/n^3, refined incrementally until
/// the remainder bound (the first omitted term, valid because every
/// derivative of x^-3 keeps one sign on [N, inf)) drops below `target`.
/// Returns None if the bounds bottom out above the target before the
/// Bernoulli growth takes over.
fn em_tail_to(n: u64, target: &Rational) -> Option<(Rational, Rational)> {
    let inv_n = Rational::one() / rat(n as i64, 1);
    let inv_n2 = &inv_n * &inv_n;
    let mut tail = &inv_n2 / rat(2, 1) + &inv_n2 * &inv_n / rat(2, 1);
    let mut npow = pow_int(&inv_n, 4); // N^(-2k-2) at k = 1
    let mut bound = bernoulli(2).abs() * rat(3, 2) * &npow;
    let mut k: u32 = 1;
    loop {
        // fold in the B_{2k} (2k+1)/2 N^(-2k-2) term; the remainder is then
        // bounded by the next one
        tail += bernoulli(2 * k as usize) * rat(2 * k as i64 + 1, 2) * &npow;
        npow *= &inv_n2;
        let next = bernoulli(2 * k as usize + 2).abs() * rat(2 * k as i64 + 3, 2) * &npow;
        if &next <= target {
            return Some((tail, next));
        }
        if next >= bound {
            return None; // asymptotic floor for this N
        }
        bound = next;
        k += 1;
    }
}

fn zeta3_cache() -> &'static Mutex<Option<RatInterval>> {
    static CACHE: OnceLock<Mutex<Option<RatInterval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(None))
}

/// Deep-precision variant: the same partial sum and Euler-Maclaurin tail,
/// but accumulated in fixed-point scaled by 10^scale_digits with directed
/// rounding, so no arithmetic ever touches the (N!)^3-sized exact
/// denominators. Each floored term loses less than one unit in the last
/// place; the slack is counted and added to the enclosure.
fn zeta3_interval_fixed(scale_digits: u32) -> RatInterval {
    // N is pushed 64x past the analytic minimum so the correction count
    // stays near scale/5 instead of scale; the partial sum is linear in N
    // and stays cheap
    let n_min = (scale_digits as f64 * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI))
        .ceil() as u64;
    let n: u64 = 64 * n_min.next_power_of_two().max(4);
    let pow = int(10).pow(scale_digits);
    // partial sum: sum_{k<n} floor(P/k^3), losing < n units total
    let mut acc = BigInt::zero();
    for k in 1..n {
        let k3 = int(k as i64).pow(3);
        acc += &pow / k3;
    }
    let mut slack = int(n as i64);
    // tail terms, each floored: floor(t*P) <= t*P < floor(t*P) + 1
    let floor_term = |num: &BigInt, den: &BigInt| -> BigInt {
        let v = num * &pow;
        // integer division truncates toward zero; shift negatives to a floor
        let q = &v / den;
        if (&q * den) > v {
            q - 1
        } else {
            q
        }
    };
    let n_big = int(n as i64);
    let n2 = &n_big * &n_big;
    // 1/(2N^2) + 1/(2N^3)
    acc += floor_term(&BigInt::one(), &(&n2 * 2));
    acc += floor_term(&BigInt::one(), &(&n2 * &n_big * 2));
    slack += int(2);
    let target = Rational::new(BigInt::one(), &pow / 100u8); // 10^-(scale-2)
    let mut npow = &n2 * &n2; // N^(2k+2) at k = 1
    let mut k: usize = 1;
    loop {
        // fold in B_2k (2k+1) / (2 N^(2k+2))
        let b = bernoulli(2 * k);
        let num = b.numer() * int(2 * k as i64 + 1);
        let den = b.denom() * 2 * &npow;
        acc += floor_term(&num, &den);
        slack += int(1);
        npow *= &n2;
        let next = bernoulli(2 * k + 2).abs() * rat(2 * k as i64 + 3, 2)
            / Rational::from(npow.clone());
        if next <= target {
            // remainder bound in scaled units, rounded up
            let bound_units = (next.numer() * &pow) / next.denom() + 1;
            let lo = Rational::new(&acc - &bound_units, pow.clone());
            let hi = Rational::new(&acc + &slack + &bound_units, pow.clone());
            return RatInterval::new(lo, hi);
        }
        k += 1;
    }
}

/// Certified enclosure of zeta(3) of width at most `tol`, from the series
/// with Euler-Maclaurin tail corrections. `tol` must be positive. The
/// tightest enclosure computed so far is kept and reused.
pub fn zeta3_interval(tol: &Rational) -> RatInterval {
    assert!(tol.is_positive(), "tolerance must be positive");
    let mut cache = zeta3_cache().lock().unwrap();
    if let Some(best) = cache.as_ref() {
        if best.width() <= *tol {
            return best.clone();
        }
    }
    // exact rational tail arithmetic while the partial sum stays short;
    // fixed-point beyond that
    let deep = *tol < pow10_inv(300);
    let enclosure = if deep {
        let digits = {
            let mut d = 300u32;
            while pow10_inv(d) > *tol {
                d += 50;
            }
            d + 10
        };
        let enc = zeta3_interval_fixed(digits);
        assert!(enc.width() <= *tol);
        enc
    } else {
        let half_tol = tol / rat(2, 1);
        let mut n: u64 = 16;
        loop {
            if let Some((tail, bound)) = em_tail_to(n, &half_tol) {
                let s = partial_sum_inv_cubes(n - 1);
                break RatInterval::centered(s + tail, bound);
            }
            n *= 2;
        }
    };
    *cache = Some(enclosure.clone());
    enclosure
}

/// Certified enclosure of 2*zeta(3).
pub fn two_zeta3_interval(tol: &Rational) -> RatInterval {
    zeta3_interval(&(tol / rat(2, 1))).scale(&rat(2, 1))
}

/// 10^-d as a rational.
pub fn pow10_inv(d: u32) -> Rational {
    Rational::new(BigInt::one(), int(10).pow(d))
}

/// Round a positive rational to `digits` fractional decimal digits and
/// render it. The caller guarantees the enclosure is tighter than one unit
/// in the last digit, so the printed value is within 1 ulp of the truth.
pub fn decimal_string(v: &Rational, digits: u32) -> String {
    assert!(!v.is_negative());
    let scale = int(10).pow(digits);
    // round(v * 10^d) = floor(v * 10^d + 1/2)
    let scaled = v * Rational::from(scale.clone()) + rat(1, 2);
    let n = scaled.floor().to_integer();
    let (ip, fp) = (&n / &scale, &n % &scale);
    if digits == 0 {
        return ip.to_string();
    }
    format!("{}.{:0>width$}", ip, fp.to_string(), width = digits as usize)
}

/// Digits of the midpoint of `enc`, valid to +/- 1 ulp provided
/// `enc.width() <= 10^-digits`. Returns None if the enclosure is too wide.
pub fn certified_digits(enc: &RatInterval, digits: u32) -> Option<String> {
    if enc.width() > pow10_inv(digits) {
        return None;
    }
    Some(decimal_string(&enc.midpoint(), digits))
}

/// Decimal string of a nonnegative rational rounded up, so the printed
/// value is itself a valid upper bound.
pub fn decimal_upper_bound(v: &Rational, digits: u32) -> String {
    assert!(!v.is_negative());
    let scale = int(10).pow(digits);
    let n = (v * Rational::from(scale.clone())).ceil().to_integer();
    let (ip, fp) = (&n / &scale, &n % &scale);
    if digits == 0 {
        return ip.to_string();
    }
    format!("{}.{:0>width$}", ip, fp.to_string(), width = digits as usize)
}

/// Natural log of a positive big integer, accurate to ~1e-13 relative.
fn ln_bigint(n: &BigInt) -> f64 {
    assert!(n.is_positive());
    let bits = n.bits();
    if bits <= 53 {
        return n.to_f64().unwrap().ln();
    }
    let shifted = n >> (bits - 53);
    shifted.to_f64().unwrap().ln() + (bits - 53) as f64 * std::f64::consts::LN_2
}

/// Natural log of |r| for nonzero rational r, as f64. Handles magnitudes far
/// outside the f64 range by working from the bit lengths.
pub fn ln_abs(r: &Rational) -> Result<f64> {
    if r.is_zero() {
        return Err(Error::NonPositiveError { index: 0 });
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    Ok(ln_bigint(&BigInt::from_biguint(Sign::Plus, num.clone()))
        - ln_bigint(&BigInt::from_biguint(Sign::Plus, den.clone())))
}

/// Least-squares slope of y against x.
pub fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    assert!(points.len() >= 2);
    let n = points.len() as f64;
    let xbar = points.iter().map(|p| p.0).sum::<f64>() / n;
    let ybar = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - xbar) * (p.1 - ybar)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - xbar) * (p.0 - xbar)).sum();
    sxy / sxx
}

/// The rate constant the convergence tests compare against:
/// 8*ln(1+sqrt(2)) = 7.0509889...
pub fn eight_ln_silver() -> f64 {
    8.0 * (1.0 + 2.0_f64.sqrt()).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(10), rat(5, 66));
        assert_eq!(bernoulli(3), rat(0, 1));
    }

    #[test]
    fn partial_sums() {
        assert_eq!(partial_sum_inv_cubes(1), rat(1, 1));
        assert_eq!(partial_sum_inv_cubes(2), rat(9, 8));
        assert_eq!(partial_sum_inv_cubes(4), rat(2035, 1728));
    }

    #[test]
    fn refined_enclosure_sits_inside_integral_one() {
        let crude = zeta3_interval_integral(50);
        let fine = zeta3_interval(&pow10_inv(30));
        assert!(crude.contains_interval(&fine));
        assert!(fine.width() <= pow10_inv(30));
    }

    #[test]
    fn enclosures_at_different_depths_agree() {
        let a = zeta3_interval(&pow10_inv(20));
        let b = zeta3_interval(&pow10_inv(60));
        assert!(a.contains_interval(&b));
    }

    #[test]
    fn fixed_point_path_agrees_with_exact_path() {
        // the deep (fixed-point) enclosure must sit inside the exact-tail
        // one; both certify the same series
        let exact = zeta3_interval(&pow10_inv(60));
        let deep = zeta3_interval_fixed(340);
        assert!(deep.width() <= pow10_inv(330));
        assert!(exact.contains_interval(&deep));
        let crude = zeta3_interval_integral(40);
        assert!(crude.contains_interval(&deep));
    }

    #[test]
    fn ten_digit_reference() {
        let enc = zeta3_interval(&pow10_inv(12));
        assert_eq!(certified_digits(&enc, 10).unwrap(), "1.2020569032");
        let enc2 = two_zeta3_interval(&pow10_inv(12));
        assert_eq!(certified_digits(&enc2, 10).unwrap(), "2.4041138063");
        assert_eq!(certified_digits(&enc, 1).unwrap(), "1.2");
    }

    #[test]
    fn ln_abs_handles_huge_values() {
        let big = Rational::new(int(10).pow(500), int(3));
        let l = ln_abs(&big).unwrap();
        assert!((l - (500.0 * 10f64.ln() - 3f64.ln())).abs() < 1e-8);
        let tiny = Rational::new(int(7), int(10).pow(400));
        let l2 = ln_abs(&tiny).unwrap();
        assert!((l2 - (7f64.ln() - 400.0 * 10f64.ln())).abs() < 1e-8);
        assert!(ln_abs(&Rational::zero()).is_err());
    }

    #[test]
    fn slope_of_exact_line() {
        let pts: Vec<(f64, f64)> = (0..10).map(|k| (k as f64, 3.0 - 2.0 * k as f64)).collect();
        assert!((least_squares_slope(&pts) + 2.0).abs() < 1e-12);
    }
}
