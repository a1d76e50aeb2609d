//! The concrete zeta(3) sequences and the exact 2x2 identities relating
//! them: the Apery pairs (u_nu, v_nu), the zeta(3) continued fraction, the
//! Nesterenko fraction and its 2*zeta(3) variant, the block matrices B_k,
//! the intertwiners H_k, subsequence and product identities, and the
//! empirical log-error slope shared with the expansion tests.

use num_traits::{One, Signed, Zero};

use crate::cf::{CfSpec, Mat2};
use crate::exact::{factorial, rat, RatInterval, Rational};
use crate::oracle;
use crate::{Error, Result};

/// One step of the Apery recurrence
/// (nu+1)^3 x_{nu+1} = (34nu^3 + 51nu^2 + 27nu + 5) x_nu - nu^3 x_{nu-1}.
///
/// Initial values: (u_0, u_1) = (1, 5) and (v_0, v_1) = (0, 6). These seeds
/// are the ones under which (nu!)^3 v_nu and (nu!)^3 u_nu coincide with the
/// integer convergents P, Q of [`zeta3_cf_spec`] (e.g. (2!)^3 v_2 = 702).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyPair {
    pub nu: i64,
    /// Integer-valued denominator sequence.
    pub u: Rational,
    /// Numerator sequence; (nu!)^3 v_nu is an integer.
    pub v: Rational,
}

fn apery_b(nu: i64) -> Rational {
    rat(34 * nu * nu * nu + 51 * nu * nu + 27 * nu + 5, 1)
}

/// Apery pairs (u_nu, v_nu) for nu = 0..=n.
pub fn apery_pairs(n: i64) -> Vec<AperyPair> {
    assert!(n >= 0);
    let mut out = Vec::with_capacity(n as usize + 1);
    let (mut u_prev, mut v_prev) = (rat(1, 1), rat(0, 1));
    let (mut u, mut v) = (rat(5, 1), rat(6, 1));
    out.push(AperyPair { nu: 0, u: u_prev.clone(), v: v_prev.clone() });
    if n >= 1 {
        out.push(AperyPair { nu: 1, u: u.clone(), v: v.clone() });
    }
    for nu in 1..n {
        let b = apery_b(nu);
        let cube = rat(nu * nu * nu, 1);
        let div = rat((nu + 1) * (nu + 1) * (nu + 1), 1);
        let u_next = (&b * &u - &cube * &u_prev) / &div;
        let v_next = (&b * &v - &cube * &v_prev) / &div;
        u_prev = std::mem::replace(&mut u, u_next);
        v_prev = std::mem::replace(&mut v, v_next);
        out.push(AperyPair { nu: nu + 1, u: u.clone(), v: v.clone() });
    }
    out
}

/// The pair at a single index.
pub fn apery_pair(nu: i64) -> AperyPair {
    apery_pairs(nu).pop().unwrap()
}

/// The zeta(3) fraction: b0 = 0, (a_1, b_1) = (6, 5), and for nu >= 1
/// a_{nu+1} = -nu^6, b_{nu+1} = 34nu^3 + 51nu^2 + 27nu + 5.
pub fn zeta3_cf_spec() -> CfSpec {
    CfSpec::new("zeta3", rat(0, 1), |nu| {
        if nu == 1 {
            (rat(6, 1), rat(5, 1))
        } else {
            let m = nu - 1;
            (rat(-m * m * m * m * m * m, 1), apery_b(m))
        }
    })
}

/// The Apery recurrence normalized as a continued fraction whose convergents
/// are exactly the pairs (v_nu, u_nu).
pub fn apery_cf_spec() -> CfSpec {
    CfSpec::new("apery", rat(0, 1), |nu| {
        if nu == 1 {
            (rat(6, 1), rat(5, 1))
        } else {
            let m = nu - 1;
            let div = rat((m + 1) * (m + 1) * (m + 1), 1);
            (rat(-m * m * m, 1) / &div, apery_b(m) / &div)
        }
    })
}

fn nesterenko_tail(nu: i64) -> (Rational, Rational) {
    // nu >= 3; the 4-periodic closed forms
    match nu % 4 {
        1 => {
            let k = (nu - 1) / 4;
            (rat(k * (k + 1), 1), rat(2 * k + 2, 1))
        }
        2 => {
            let k = (nu - 2) / 4;
            (rat((k + 1) * (k + 2), 1), rat(2 * k + 4, 1))
        }
        3 => {
            let k = (nu - 3) / 4;
            (rat((k + 1) * (k + 1), 1), rat(2 * k + 3, 1))
        }
        _ => {
            let k = (nu - 4) / 4;
            (rat((k + 2) * (k + 2), 1), rat(2 * k + 2, 1))
        }
    }
}

/// The Nesterenko fraction in its zeta(3)-valued normalization:
/// b0 = 1, (a_1, b_1) = (1, 4), (a_2, b_2) = (4, 4), then the 4-periodic
/// closed forms.
pub fn nesterenko_cf_spec() -> CfSpec {
    CfSpec::new("nesterenko", rat(1, 1), |nu| match nu {
        1 => (rat(1, 1), rat(4, 1)),
        2 => (rat(4, 1), rat(4, 1)),
        _ => nesterenko_tail(nu),
    })
}

/// The same fraction rescaled at the head to converge to 2*zeta(3):
/// b0 = b1 = a2 = 2, a1 = 1, b2 = 4, identical coefficients from index 3 on.
pub fn nesterenko_2zeta3_cf_spec() -> CfSpec {
    CfSpec::new("nesterenko2", rat(2, 1), |nu| match nu {
        1 => (rat(1, 1), rat(2, 1)),
        2 => (rat(2, 1), rat(4, 1)),
        _ => nesterenko_tail(nu),
    })
}

/// c(k) = -1 / (2 (k-1)^3 (k+1)!), the scalar entering the intertwiners.
fn c_scalar(k: i64) -> Rational {
    assert!(k >= 2);
    let cube = rat((k - 1) * (k - 1) * (k - 1), 1);
    -Rational::one() / (rat(2, 1) * cube * Rational::from(factorial((k + 1) as u64)))
}

/// Intertwiner relating the zeta(3)-fraction convergents to every fourth
/// Nesterenko convergent: U^(zeta3)_k = H_k U^(nesterenko)_{4k-2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwinerH {
    pub k: i64,
    pub m: Mat2,
}

/// H_1 = (1/4) [[-24, 5], [0, 1]]; for k >= 2 the matrix is upper
/// triangular with entries built from c(k), c(k+1).
pub fn intertwiner_h(k: i64) -> IntertwinerH {
    assert!(k >= 1);
    let m = if k == 1 {
        Mat2::from_ints([[-24, 5], [0, 1]]).scale(&rat(1, 4))
    } else {
        let ck = c_scalar(k);
        let ck1 = c_scalar(k + 1);
        Mat2([
            [rat(12 * (k + 2) * (k + 1), 1) * &ck1, rat(-5 * (k + 2), 1) * &ck1],
            [Rational::zero(), rat(-(k - 1) * (k - 1) * (k - 1), 1) * &ck],
        ])
    };
    IntertwinerH { k, m }
}

/// Closed form of the four-step block
/// B_k = A_{4k-3} A_{4k-4} A_{4k-5} A_{4k-6} of the Nesterenko fraction.
pub fn block_b(k: i64) -> Mat2 {
    assert!(k >= 2);
    let kc = (k - 1) * (k - 1) * (k - 1);
    Mat2::from_ints([
        [5 * k * kc, k * (12 * k * k - 15 * k + 5)],
        [12 * k * (k + 1) * kc, k * (k + 1) * (29 * k * k - 36 * k + 12)],
    ])
}

/// The same block as the literal product of step matrices.
pub fn block_b_product(k: i64) -> Result<Mat2> {
    assert!(k >= 2);
    let spec = nesterenko_cf_spec();
    let mut m = Mat2::identity();
    // A_nu = [[0,1],[a_{nu+1}, b_{nu+1}]]; the block runs nu = 4k-6 .. 4k-3.
    for nu in (4 * k - 6)..=(4 * k - 3) {
        let (a, b) = spec.coeffs(nu + 1)?;
        m = Mat2::step(&a, &b).mul(&m);
    }
    Ok(m)
}

/// Step matrix A_{k-1} of the zeta(3) fraction: [[0,1],[a_k, b_k]], the
/// matrix advancing U_{k-1} to U_k.
fn zeta3_step_into(k: i64) -> Result<Mat2> {
    let (a, b) = zeta3_cf_spec().coeffs(k)?;
    Ok(Mat2::step(&a, &b))
}

/// Exact sweep of the intertwining identities:
/// the commutation A_{k-1} H_{k-1} = H_k B_k for 2 <= k <= k_max and the
/// subsequence identity U^(zeta3)_k = H_k U^(nesterenko)_{4k-2} for
/// 1 <= k <= k_max.
pub fn verify_intertwining(k_max: i64) -> Result<()> {
    assert!(k_max >= 2);
    for k in 2..=k_max {
        let lhs = zeta3_step_into(k)?.mul(&intertwiner_h(k - 1).m);
        let rhs = intertwiner_h(k).m.mul(&block_b(k));
        if lhs != rhs {
            return Err(Error::violation(
                "intertwiner-commutation",
                format!("k = {k}: A_(k-1) H_(k-1) != H_k B_k"),
            ));
        }
    }
    let zeta3 = zeta3_cf_spec();
    let nest = nesterenko_cf_spec();
    for k in 1..=k_max {
        let lhs = zeta3.u_matrix(k)?.m;
        let rhs = intertwiner_h(k).m.mul(&nest.u_matrix(4 * k - 2)?.m);
        if lhs != rhs {
            return Err(Error::violation(
                "subsequence-matrix",
                format!("k = {k}: U_k != H_k U_(4k-2)"),
            ));
        }
        // closed block form equals the literal step product
        if k >= 2 && block_b(k) != block_b_product(k)? {
            return Err(Error::violation(
                "block-closed-form",
                format!("k = {k}: closed form != product of step matrices"),
            ));
        }
    }
    Ok(())
}

/// Exact sweep of the scalar subsequence identities for 2 <= k <= k_max:
/// P^(zeta3)_k = P^(nesterenko)_{4k-2} / (2 (k+1)!) and
/// P^(nesterenko)_{4k-2} = 2 (k+1) (k!)^4 v_k (same shape for Q with u_k).
pub fn verify_subsequence(k_max: i64) -> Result<()> {
    assert!(k_max >= 2);
    let zc = zeta3_cf_spec().convergents(k_max)?;
    let nc = nesterenko_cf_spec().convergents(4 * k_max - 2)?;
    let pairs = apery_pairs(k_max);
    for k in 2..=k_max {
        let (pz, qz) = &zc[k as usize];
        let (pn, qn) = &nc[(4 * k - 2) as usize];
        let half_fact = rat(2, 1) * Rational::from(factorial((k + 1) as u64));
        if pz != &(pn / &half_fact) || qz != &(qn / &half_fact) {
            return Err(Error::violation(
                "subsequence-halving",
                format!("k = {k}: (P, Q) != (P', Q')/(2 (k+1)!)"),
            ));
        }
        let scale = rat(2 * (k + 1), 1) * Rational::from(factorial(k as u64)).pow(4);
        let pair = &pairs[k as usize];
        if pn != &(&scale * &pair.v) || qn != &(&scale * &pair.u) {
            return Err(Error::violation(
                "subsequence-apery",
                format!("k = {k}: (P', Q') != 2(k+1)(k!)^4 (v, u)"),
            ));
        }
    }
    Ok(())
}

/// Integrality sweep: u_nu is an integer and (nu!)^3 v_nu, (nu!)^3 u_nu are
/// the integer convergents of the zeta(3) fraction, for nu <= n.
pub fn verify_integrality(n: i64) -> Result<()> {
    let pairs = apery_pairs(n);
    let conv = zeta3_cf_spec().convergents(n)?;
    for p in &pairs {
        if !p.u.is_integer() {
            return Err(Error::violation(
                "apery-integrality",
                format!("u_{} is not an integer", p.nu),
            ));
        }
        let cube = Rational::from(factorial(p.nu as u64)).pow(3);
        let (pc, qc) = &conv[p.nu as usize];
        if &(&cube * &p.v) != pc || &(&cube * &p.u) != qc {
            return Err(Error::violation(
                "apery-convergent-match",
                format!("nu = {}: (nu!)^3 (v, u) != (P, Q)", p.nu),
            ));
        }
    }
    Ok(())
}

/// Closed forms of the partial products prod a_kappa of the Nesterenko
/// fraction at depths 4k-2, 4k-1, 4k, 4k+1:
/// 2 (k!)^8 (k+1)/k^3, 2 (k!)^8 (k+1)/k, 2 (k!)^8 (k+1)^3/k, 2 (k!)^8 (k+1)^4.
pub fn partial_products(k: i64) -> (Rational, Rational, Rational, Rational) {
    assert!(k >= 2);
    let f8 = Rational::from(factorial(k as u64)).pow(8);
    let base = rat(2, 1) * f8;
    let kp = rat(k + 1, 1);
    let kr = rat(k, 1);
    (
        &base * &kp / (&kr * &kr * &kr),
        &base * &kp / &kr,
        &base * (&kp * &kp * &kp) / &kr,
        &base * (&kp * &kp * &kp * &kp),
    )
}

/// Check the product closed forms against literal multiplication, and the
/// stated ratios between consecutive depths, for 2 <= k <= k_max.
pub fn verify_partial_products(k_max: i64) -> Result<()> {
    let spec = nesterenko_cf_spec();
    for k in 2..=k_max {
        let (c0, c1, c2, c3) = partial_products(k);
        let p0 = spec.partial_numerator_product(4 * k - 2)?;
        let p1 = spec.partial_numerator_product(4 * k - 1)?;
        let p2 = spec.partial_numerator_product(4 * k)?;
        let p3 = spec.partial_numerator_product(4 * k + 1)?;
        if (c0, c1, c2, c3) != (p0.clone(), p1.clone(), p2.clone(), p3.clone()) {
            return Err(Error::violation(
                "partial-product-closed-form",
                format!("k = {k}"),
            ));
        }
        if p1 != &p0 * rat(k * k, 1) || p2 != &p1 * rat((k + 1) * (k + 1), 1) {
            return Err(Error::violation(
                "partial-product-ratios",
                format!("k = {k}"),
            ));
        }
    }
    Ok(())
}

/// Monotone interlacing of the Nesterenko denominators with the stated
/// polynomial factors as upper bounds, for 2 <= k <= k_max.
pub fn verify_interlacing(k_max: i64) -> Result<()> {
    let conv = nesterenko_cf_spec().convergents(4 * k_max + 1)?;
    let q = |i: i64| &conv[i as usize].1;
    for k in 2..=k_max {
        let (q0, q1, q2, q3) = (q(4 * k - 2), q(4 * k - 1), q(4 * k), q(4 * k + 1));
        let ok = q0 < q1
            && q1 < q2
            && q2 < q3
            && *q1 < q0 * rat(k * k + 2 * k + 1, 1)
            && *q2 < q1 * rat(k * k + 4 * k + 1, 1)
            && *q3 < q2 * rat(k * k + 3 * k + 2, 1);
        if !ok {
            return Err(Error::violation("denominator-interlacing", format!("k = {k}")));
        }
    }
    Ok(())
}

/// Least-squares slope of log|value - reference| against the index, over the
/// given (index, value) points. The reference enclosure must be far tighter
/// than the smallest error or the logs would be dominated by its width.
///
/// Errors with |value - reference| = 0 make the log undefined and are
/// reported as `NonPositiveError`.
pub fn error_slope(points: &[(i64, Rational)], reference: &RatInterval) -> Result<f64> {
    assert!(points.len() >= 10, "slope estimate needs at least 10 points");
    let mid = reference.midpoint();
    let mut logs = Vec::with_capacity(points.len());
    for (i, (k, v)) in points.iter().enumerate() {
        let err = (v - &mid).abs();
        if err.is_zero() {
            return Err(Error::NonPositiveError { index: i });
        }
        logs.push((*k as f64, oracle::ln_abs(&err)?));
    }
    Ok(oracle::least_squares_slope(&logs))
}

/// Slope of log|zeta(3) - v_k/u_k| for k in [k_lo, k_hi], against the
/// series reference. Expected near -8 ln(1+sqrt2) = -7.051.
pub fn apery_error_slope(k_lo: i64, k_hi: i64) -> Result<f64> {
    let pairs = apery_pairs(k_hi);
    let points: Vec<(i64, Rational)> = (k_lo..=k_hi)
        .map(|k| (k, &pairs[k as usize].v / &pairs[k as usize].u))
        .collect();
    // errors at k_hi sit near (1+sqrt2)^(-8 k_hi); keep the reference well below
    let digits = (3.1 * k_hi as f64) as u32 + 30;
    let reference = oracle::zeta3_interval(&oracle::pow10_inv(digits));
    error_slope(&points, &reference)
}

/// Slope of log|zeta(3) - P_(4k-2)/Q_(4k-2)| of the Nesterenko fraction for
/// k in [k_lo, k_hi]; the same rate as the Apery ratios.
pub fn nesterenko_error_slope(k_lo: i64, k_hi: i64) -> Result<f64> {
    let conv = nesterenko_cf_spec().convergents(4 * k_hi - 2)?;
    let points: Vec<(i64, Rational)> = (k_lo..=k_hi)
        .map(|k| {
            let (p, q) = &conv[(4 * k - 2) as usize];
            (k, p / q)
        })
        .collect();
    let digits = (3.1 * k_hi as f64) as u32 + 30;
    let reference = oracle::zeta3_interval(&oracle::pow10_inv(digits));
    error_slope(&points, &reference)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apery_pair_values() {
        assert_eq!(apery_pair(0), AperyPair { nu: 0, u: rat(1, 1), v: rat(0, 1) });
        assert_eq!(apery_pair(1), AperyPair { nu: 1, u: rat(5, 1), v: rat(6, 1) });
        let p2 = apery_pair(2);
        assert_eq!(p2.u, rat(73, 1));
        assert_eq!(p2.v, rat(351, 4));
        // (2!)^3 v_2 = 702 = P_2 of the zeta(3) fraction
        assert_eq!(rat(8, 1) * p2.v, rat(702, 1));
    }

    #[test]
    fn zeta3_spec_coefficients() {
        let spec = zeta3_cf_spec();
        assert_eq!(spec.coeffs(2).unwrap(), (rat(-1, 1), rat(117, 1)));
        // index 3: a_3 = -2^6, b_3 = 34*8 + 51*4 + 27*2 + 5
        assert_eq!(spec.coeffs(3).unwrap(), (rat(-64, 1), rat(535, 1)));
    }

    #[test]
    fn nesterenko_spec_coefficients() {
        let spec = nesterenko_cf_spec();
        assert_eq!(spec.coeffs(4).unwrap(), (rat(4, 1), rat(2, 1)));
        let c = spec.convergents(4).unwrap();
        assert_eq!(c[4].1, rat(208, 1));
    }

    #[test]
    fn two_zeta3_variant_doubles_ratios() {
        let a = nesterenko_cf_spec();
        let b = nesterenko_2zeta3_cf_spec();
        for nu in 0..=20 {
            assert_eq!(b.ratio(nu).unwrap(), rat(2, 1) * a.ratio(nu).unwrap());
        }
    }

    #[test]
    fn apery_cf_matches_pairs() {
        let spec = apery_cf_spec();
        let conv = spec.convergents(12).unwrap();
        let pairs = apery_pairs(12);
        for (c, p) in conv.iter().zip(pairs.iter()) {
            assert_eq!(c.0, p.v);
            assert_eq!(c.1, p.u);
        }
    }

    #[test]
    fn intertwiner_values() {
        assert_eq!(intertwiner_h(1).m, Mat2::from_ints([[-24, 5], [0, 1]]).scale(&rat(1, 4)));
        // H_2 applied to U_6 gives U_2 of the zeta(3) fraction
        let u6 = nesterenko_cf_spec().u_matrix(6).unwrap().m;
        let u2 = zeta3_cf_spec().u_matrix(2).unwrap().m;
        assert_eq!(intertwiner_h(2).m.mul(&u6), u2);
        assert_eq!(u2, Mat2::from_ints([[6, 5], [702, 584]]));
    }

    #[test]
    fn block_values() {
        assert_eq!(block_b(2), Mat2::from_ints([[10, 46], [72, 336]]));
        assert_eq!(block_b(2), block_b_product(2).unwrap());
        let u2 = nesterenko_cf_spec().u_matrix(2).unwrap().m;
        let u6 = nesterenko_cf_spec().u_matrix(6).unwrap().m;
        assert_eq!(block_b(2).mul(&u2), u6);
    }

    #[test]
    fn sweeps_to_k_40() {
        verify_intertwining(40).unwrap();
        verify_subsequence(40).unwrap();
        verify_integrality(60).unwrap();
        verify_partial_products(40).unwrap();
        verify_interlacing(40).unwrap();
    }

    #[test]
    fn partial_product_values_at_k2() {
        let (p0, _, _, p3) = partial_products(2);
        assert_eq!(p0, rat(192, 1));
        assert_eq!(p3, rat(41472, 1));
        // literal products of the fraction coefficients
        let spec = nesterenko_cf_spec();
        assert_eq!(spec.partial_numerator_product(6).unwrap(), rat(192, 1));
        assert_eq!(spec.partial_numerator_product(9).unwrap(), rat(41472, 1));
    }

    #[test]
    fn halved_convergents_equal_apery_ratios() {
        let nest = nesterenko_cf_spec();
        let pairs = apery_pairs(12);
        for k in 1..=12i64 {
            let r = nest.ratio(4 * k - 2).unwrap();
            assert_eq!(r, &pairs[k as usize].v / &pairs[k as usize].u);
        }
    }

    #[test]
    fn exact_match_is_rejected_by_slope() {
        let reference = RatInterval::point(rat(1, 1));
        let points: Vec<(i64, Rational)> = (0..12).map(|k| (k, rat(1, 1))).collect();
        match error_slope(&points, &reference) {
            Err(Error::NonPositiveError { index: 0 }) => {}
            other => panic!("expected NonPositiveError, got {other:?}"),
        }
    }

    #[test]
    fn apery_slope_matches_rate() {
        let slope = apery_error_slope(5, 40).unwrap();
        let target = -oracle::eight_ln_silver();
        assert!(
            (slope - target).abs() <= 0.02 * target.abs(),
            "slope {slope} vs {target}"
        );
    }
}
