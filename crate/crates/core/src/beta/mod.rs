//! Partial-fraction apparatus: the squared rational function R(alpha,t,nu),
//! its partial-fraction coefficient tables beta^(r), harmonic sums S_{i,k},
//! the generating polynomials beta*^(r)_i(z;nu), polylogarithm tails, and
//! the z -> 1 linear forms in zeta(2), zeta(3).
//!
//! Two fully independent routes exist for the tables: closed forms
//! (binomial squares and harmonic sums) and the limit definition (exact
//! differentiation of the squared rational function at its poles). The
//! closed forms are the production path; the derivative route and the
//! reconstruction identity are the oracles the suite checks them against.

pub mod polylog;
pub mod series;

use num_traits::{One, Zero};

use crate::exact::{binom, factorial, rat, Rational, UniPoly, Var};
use crate::{Error, Result};

pub use polylog::{log_interval, polylog_tail, polylog_tail_closed};
pub use series::{closed_form_f, series_f};

/// The terminating hypergeometric square
/// f*_(alpha,0,1)(z,nu) = sum_k z^k C(nu+alpha,k)^2 C(nu+k,nu)^2.
pub fn f_star_1(alpha: i64, nu: i64) -> UniPoly {
    assert!(alpha >= 0 && nu >= 0);
    let n = (nu + alpha) as u64;
    let coeffs = (0..=(nu + alpha))
        .map(|k| {
            let b1 = binom(n, k);
            let b2 = binom((nu + k) as u64, k);
            &b1 * &b1 * &b2 * &b2
        })
        .collect();
    UniPoly::new(Var::Z, coeffs)
}

/// Signed harmonic sum
/// S_{i,k}(alpha,nu) = -sum_{j=k+1}^{nu+k} j^-i - sum_{j=1}^{nu+alpha-k} j^-i
///                     + sum_{j=1}^{k} j^-i.
pub fn harmonic_s(i: u32, k: i64, alpha: i64, nu: i64) -> Rational {
    assert!(i >= 1 && k >= 0 && k <= nu + alpha);
    let power_sum = |lo: i64, hi: i64| -> Rational {
        let mut acc = Rational::zero();
        for j in lo..=hi {
            let mut term = Rational::one();
            for _ in 0..i {
                term /= rat(j, 1);
            }
            acc += term;
        }
        acc
    };
    -power_sum(k + 1, nu + k) - power_sum(1, nu + alpha - k) + power_sum(1, k)
}

/// Partial-fraction coefficients of
/// ((nu+alpha)!/nu!)^2 (-t)^r R(alpha,t,nu)^2 at the poles t = -k:
/// `beta2[k]` multiplies (t+k)^-2 and `beta1[k]` multiplies (t+k)^-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaTable {
    pub alpha: i64,
    pub nu: i64,
    pub r: u32,
    pub beta1: Vec<Rational>,
    pub beta2: Vec<Rational>,
}

/// The r = 0 table from the closed forms
/// beta2 = C(nu+alpha,k)^2 C(nu+k,k)^2 and beta1 = 2 beta2 S_{1,k}.
pub fn beta_base(alpha: i64, nu: i64) -> BetaTable {
    assert!(alpha >= 0 && nu >= 0);
    let n = (nu + alpha) as u64;
    let mut beta1 = Vec::with_capacity((nu + alpha + 1) as usize);
    let mut beta2 = Vec::with_capacity((nu + alpha + 1) as usize);
    for k in 0..=(nu + alpha) {
        let b1 = binom(n, k);
        let b2 = binom((nu + k) as u64, k);
        let sq = &b1 * &b1 * &b2 * &b2;
        beta1.push(rat(2, 1) * &sq * harmonic_s(1, k, alpha, nu));
        beta2.push(sq);
    }
    BetaTable { alpha, nu, r: 0, beta1, beta2 }
}

/// Lift a table from r to r+1: beta2 gains a factor k and beta1 becomes
/// k beta1 - beta2, entrywise.
pub fn beta_lift(table: &BetaTable) -> BetaTable {
    assert!(table.r <= 2, "tables only exist for r <= 3");
    let beta2 = table
        .beta2
        .iter()
        .enumerate()
        .map(|(k, b)| b * rat(k as i64, 1))
        .collect();
    let beta1 = table
        .beta1
        .iter()
        .zip(table.beta2.iter())
        .enumerate()
        .map(|(k, (b1, b2))| b1 * rat(k as i64, 1) - b2)
        .collect();
    BetaTable {
        alpha: table.alpha,
        nu: table.nu,
        r: table.r + 1,
        beta1,
        beta2,
    }
}

/// The table at any r in 0..=3.
pub fn beta_table(alpha: i64, nu: i64, r: u32) -> BetaTable {
    let mut t = beta_base(alpha, nu);
    for _ in 0..r {
        t = beta_lift(&t);
    }
    t
}

fn poly_prod(var: Var, roots: impl Iterator<Item = Rational>) -> UniPoly {
    let mut acc = UniPoly::one(var);
    for root in roots {
        acc = &acc * &UniPoly::new(var, vec![root, Rational::one()]);
    }
    acc
}

/// ((nu+alpha)!/nu!)^2 as an exact rational.
pub fn norm_factor(alpha: i64, nu: i64) -> Rational {
    let m = Rational::from(factorial((nu + alpha) as u64)) / Rational::from(factorial(nu as u64));
    &m * &m
}

/// The same table from the limit definition: exact differentiation of
/// (-t)^r (R(alpha,t,nu)(t+k))^2 at t = -k. Independent of the closed
/// forms; this is the oracle route.
pub fn beta_table_from_derivatives(alpha: i64, nu: i64, r: u32) -> BetaTable {
    assert!(alpha >= 0 && nu >= 0 && r <= 3);
    let m2 = norm_factor(alpha, nu);
    let numer_base = {
        // (-t)^r prod (t - j)^2
        let n = poly_prod(Var::T, (1..=nu).map(|j| rat(-j, 1)));
        let sign = if r % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        (&n * &n).shift_up(r as usize).scale(&sign)
    };
    let mut beta1 = Vec::new();
    let mut beta2 = Vec::new();
    for k in 0..=(nu + alpha) {
        let den = poly_prod(Var::T, (0..=(nu + alpha)).filter(|j| *j != k).map(|j| rat(j, 1)));
        let t0 = rat(-k, 1);
        let num_v = numer_base.eval(&t0);
        let den_v = den.eval(&t0);
        // g = num/den^2; beta2 = M^2 g(-k), beta1 = M^2 g'(-k)
        let den2 = &den_v * &den_v;
        beta2.push(&m2 * &num_v / &den2);
        let num_d = numer_base.derivative().eval(&t0);
        let den_d = den.derivative().eval(&t0);
        let g_prime =
            (&num_d * &den_v - rat(2, 1) * &num_v * &den_d) / (&den2 * &den_v);
        beta1.push(&m2 * g_prime);
    }
    BetaTable { alpha, nu, r, beta1, beta2 }
}

impl BetaTable {
    /// sum_k beta1[k]/(t+k) + beta2[k]/(t+k)^2 at an exact t away from the
    /// poles. Accumulated as an unreduced numerator/denominator pair so the
    /// 50-point sweeps pay one gcd per evaluation, not one per term.
    pub fn partial_fraction_value(&self, t: &Rational) -> Rational {
        use num_bigint::BigInt;
        let mut num = BigInt::from(0);
        let mut den = BigInt::from(1);
        let mut fold = |a: &BigInt, b: BigInt| {
            assert!(!b.is_zero(), "evaluation at a pole");
            num = &num * &b + a * &den;
            den *= b;
        };
        for k in 0..self.beta1.len() {
            // t + k = (p + k q)/q, so 1/(t+k) = q/(p + k q)
            let shift = t.numer() + t.denom() * BigInt::from(k);
            let b1 = &self.beta1[k];
            fold(&(b1.numer() * t.denom()), b1.denom() * &shift);
            let b2 = &self.beta2[k];
            fold(&(b2.numer() * t.denom() * t.denom()), b2.denom() * &shift * &shift);
        }
        Rational::new(num, den)
    }

    /// Row sums sum_k beta1[k]: zero for r <= 2, -(nu+1)^2 for r = 3 at
    /// alpha = 1.
    pub fn verify_row_sum(&self) -> Result<()> {
        let sum: Rational = self.beta1.iter().sum();
        let expect = if self.r <= 2 {
            Rational::zero()
        } else if self.alpha == 1 {
            -rat((self.nu + 1) * (self.nu + 1), 1)
        } else {
            return Ok(()); // no displayed value for r = 3, alpha > 1
        };
        if sum != expect {
            return Err(Error::violation(
                "beta-row-sum",
                format!(
                    "alpha = {}, nu = {}, r = {}: sum = {sum}, expected {expect}",
                    self.alpha, self.nu, self.r
                ),
            ));
        }
        Ok(())
    }
}

/// ((nu+alpha)!/nu!)^2 (-t)^r R(alpha,t,nu)^2 at an exact rational t, the
/// reconstruction target of [`BetaTable::partial_fraction_value`]. With
/// t = p/q, R = q^(alpha+1) prod(p - jq) / prod(p + jq); everything is
/// accumulated as raw integers and reduced once.
pub fn weighted_r_squared(alpha: i64, nu: i64, r: u32, t: &Rational) -> Rational {
    use num_bigint::BigInt;
    let (p, q) = (t.numer(), t.denom());
    let mut num = BigInt::from(1);
    for _ in 0..(alpha + 1) {
        num *= q;
    }
    for j in 1..=nu {
        num *= p - q * BigInt::from(j);
    }
    let mut den = BigInt::from(1);
    for j in 0..=(nu + alpha) {
        let f = p + q * BigInt::from(j);
        assert!(!f.is_zero(), "evaluation at a pole");
        den *= f;
    }
    num = &num * &num;
    den = &den * &den;
    // (-t)^r = (-p)^r / q^r
    for _ in 0..r {
        num *= -p;
        den *= q;
    }
    let m2 = norm_factor(alpha, nu);
    Rational::new(num * m2.numer(), den * m2.denom())
}

/// The four generating polynomials at one (alpha, nu, r):
/// beta*_1, beta*_2 collect the table rows; beta*_3, beta*_4 carry the
/// harmonic corrections. For r >= 1, p3 and p4 are also reachable through
/// the delta-recurrences; construction fails if the two routes disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaStarPolys {
    pub alpha: i64,
    pub nu: i64,
    pub r: u32,
    pub p1: UniPoly,
    pub p2: UniPoly,
    pub p3: UniPoly,
    pub p4: UniPoly,
}

fn star_12(table: &BetaTable) -> (UniPoly, UniPoly) {
    (
        UniPoly::new(Var::Z, table.beta1.clone()),
        UniPoly::new(Var::Z, table.beta2.clone()),
    )
}

/// beta*_(3+j) by the direct double sum
/// sum_{i,k} c_i beta_{i,k} sum_{m=1}^{k} z^(k-m) m^(-i-j), with weights
/// c = (1, 1) for j = 0 and (1, 2) for j = 1. Each z-coefficient is
/// accumulated unreduced and normalized once.
fn star_34_direct(table: &BetaTable, j: u32) -> UniPoly {
    use num_bigint::BigInt;
    let n = table.beta1.len();
    let mut acc = vec![(BigInt::from(0), BigInt::from(1)); n.max(1) - 1];
    for k in 1..n {
        let (b1, b2) = (&table.beta1[k], &table.beta2[k]);
        for m in 1..=k {
            let mut m1 = BigInt::from(1); // m^(1+j)
            for _ in 0..(1 + j) {
                m1 *= BigInt::from(m);
            }
            let m2 = &m1 * BigInt::from(m); // m^(2+j)
            let c2: i64 = if j == 0 { 1 } else { 2 };
            // beta1/m^(1+j) + c2 beta2/m^(2+j) as one fraction
            let num = b1.numer() * b2.denom() * &m2 + b2.numer() * b1.denom() * &m1 * c2;
            let den = b1.denom() * b2.denom() * m1 * m2;
            let slot = &mut acc[k - m];
            slot.0 = &slot.0 * &den + num * &slot.1;
            slot.1 *= den;
        }
    }
    UniPoly::new(
        Var::Z,
        acc.into_iter().map(|(n, d)| Rational::new(n, d)).collect(),
    )
}

/// Quotient beta*_1 / (z - 1); exact for r <= 2, and exact after adding
/// (nu+1)^2 for r = 3 at alpha = 1.
fn star_1_reduced(p1: &UniPoly, table: &BetaTable) -> Result<UniPoly> {
    let (q, rem) = p1.div_linear(&Rational::one());
    let expect_rem = if table.r <= 2 {
        Rational::zero()
    } else if table.alpha == 1 {
        -rat((table.nu + 1) * (table.nu + 1), 1)
    } else {
        rem.clone()
    };
    if rem != expect_rem {
        return Err(Error::violation(
            "beta-star-1-root",
            format!(
                "alpha = {}, nu = {}, r = {}: remainder {rem} at z = 1",
                table.alpha, table.nu, table.r
            ),
        ));
    }
    Ok(q)
}

/// Build the generating polynomials at every r in 0..=r_max,
/// cross-checking the direct sums against the delta-recurrences at each
/// lift.
pub fn beta_star_levels(alpha: i64, nu: i64, r_max: u32) -> Result<Vec<BetaStarPolys>> {
    assert!(alpha >= 0 && r_max <= 3);
    let mut table = beta_base(alpha, nu);
    let (mut p1, mut p2) = star_12(&table);
    let mut p3 = star_34_direct(&table, 0);
    let mut p4 = star_34_direct(&table, 1);
    let mut out = Vec::with_capacity(r_max as usize + 1);
    out.push(BetaStarPolys {
        alpha,
        nu,
        r: 0,
        p1: p1.clone(),
        p2: p2.clone(),
        p3: p3.clone(),
        p4: p4.clone(),
    });
    for r in 1..=r_max {
        let p1_red = star_1_reduced(&p1, &table)?;
        let next = beta_lift(&table);
        let p3_rec = &p3.delta() + &p1_red;
        let p4_rec = &p4.delta() + &p3;
        let (n1, n2) = star_12(&next);
        let n3 = star_34_direct(&next, 0);
        let n4 = star_34_direct(&next, 1);
        if n3 != p3_rec || n4 != p4_rec {
            return Err(Error::violation(
                "beta-star-two-routes",
                format!("alpha = {alpha}, nu = {nu}, r -> {}", table.r + 1),
            ));
        }
        table = next;
        p1 = n1;
        p2 = n2;
        p3 = n3;
        p4 = n4;
        out.push(BetaStarPolys {
            alpha,
            nu,
            r,
            p1: p1.clone(),
            p2: p2.clone(),
            p3: p3.clone(),
            p4: p4.clone(),
        });
    }
    Ok(out)
}

/// The generating polynomials at one r.
pub fn beta_star(alpha: i64, nu: i64, r: u32) -> Result<BetaStarPolys> {
    Ok(beta_star_levels(alpha, nu, r)?.pop().unwrap())
}

/// The four generating-polynomial values at z = 1 in O(nu) arithmetic
/// operations, via prefix sums of m^-i: p3(1) and p4(1) collapse to
/// sum_k (beta1_k P_(1+j)(k) + (1+j) beta2_k P_(2+j)(k)) with
/// P_i(k) = sum_{m<=k} m^-i. The deep sweeps use this instead of the full
/// polynomials.
pub fn beta_star_values_at_one(alpha: i64, nu: i64, r: u32) -> [Rational; 4] {
    let table = beta_table(alpha, nu, r);
    let v1: Rational = table.beta1.iter().sum();
    let v2: Rational = table.beta2.iter().sum();
    let mut p1 = Rational::zero(); // sum m^-1
    let mut p2 = Rational::zero();
    let mut p3 = Rational::zero();
    let (mut v3, mut v4) = (Rational::zero(), Rational::zero());
    for k in 1..table.beta1.len() {
        let inv = rat(1, k as i64);
        p1 += &inv;
        p2 += &inv * &inv;
        p3 += &inv * &inv * &inv;
        v3 += &table.beta1[k] * &p1 + &table.beta2[k] * &p2;
        v4 += &table.beta1[k] * &p2 + rat(2, 1) * &table.beta2[k] * &p3;
    }
    [v1, v2, v3, v4]
}

/// The z -> 1 linear form of delta^r f*_(alpha,0,2+j):
/// value = coeff * zeta(2+j) - constant with
/// coeff = (1+j) beta*_2(1;nu) and constant = beta*_(3+j)(1;nu).
/// Only r <= 2 survives the limit.
pub fn linear_form_at_1(alpha: i64, nu: i64, r: u32, j: u32) -> Result<(Rational, Rational)> {
    assert!(r <= 2, "the z -> 1 limit exists for r <= 2 only");
    assert!(j <= 1);
    let star = beta_star(alpha, nu, r)?;
    let one = Rational::one();
    let coeff = rat(1 + j as i64, 1) * star.p2.eval(&one);
    let constant = if j == 0 {
        star.p3.eval(&one)
    } else {
        star.p4.eval(&one)
    };
    Ok((coeff, constant))
}

/// delta^r f*_1 equals beta*_2 and has nonnegative integer coefficients.
pub fn verify_star2_is_delta_f1(alpha: i64, nu: i64, r: u32) -> Result<()> {
    let star = beta_star(alpha, nu, r)?;
    let mut f = f_star_1(alpha, nu);
    for _ in 0..r {
        f = f.delta();
    }
    if star.p2 != f {
        return Err(Error::violation(
            "beta-star-2-delta-f1",
            format!("alpha = {alpha}, nu = {nu}, r = {r}"),
        ));
    }
    if !star.p2.has_nonneg_integer_coeffs() {
        return Err(Error::violation(
            "beta-star-2-naturality",
            format!("alpha = {alpha}, nu = {nu}, r = {r}"),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::Z, coeffs)
    }

    #[test]
    fn f_star_values() {
        assert_eq!(f_star_1(1, 0), zp(&[1, 1]));
        assert_eq!(f_star_1(1, 1), zp(&[1, 16, 9]));
        assert_eq!(f_star_1(1, 2), zp(&[1, 81, 324, 100]));
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic_s(1, 0, 0, 0), rat(0, 1));
        assert_eq!(harmonic_s(1, 1, 1, 1), rat(-1, 2));
        assert_eq!(harmonic_s(1, 3, 1, 2), rat(83, 60));
        assert_eq!(harmonic_s(1, 0, 1, 0), rat(-1, 1));
        assert_eq!(harmonic_s(1, 2, 1, 1), rat(7, 6));
    }

    #[test]
    fn base_tables() {
        let t = beta_base(1, 1);
        assert_eq!(t.beta2, vec![rat(1, 1), rat(16, 1), rat(9, 1)]);
        assert_eq!(t.beta1, vec![rat(-5, 1), rat(-16, 1), rat(21, 1)]);
        let t2 = beta_base(1, 2);
        assert_eq!(t2.beta2, vec![rat(1, 1), rat(81, 1), rat(324, 1), rat(100, 1)]);
        assert_eq!(
            t2.beta1,
            vec![rat(-20, 3), rat(-216, 1), rat(-54, 1), rat(830, 3)]
        );
        let t0 = beta_base(0, 1);
        assert_eq!(t0.beta1, vec![rat(-4, 1), rat(4, 1)]);
        assert_eq!(t0.beta2, vec![rat(1, 1), rat(4, 1)]);
    }

    #[test]
    fn lift_reproduces_tabulated_polys() {
        // r = 1 at nu = 1: beta*_1 = (z-1)(33z+1)
        let s1 = beta_star(1, 1, 1).unwrap();
        assert_eq!(s1.p1, &zp(&[-1, 1]) * &zp(&[1, 33]));
        assert_eq!(s1.p2, zp(&[0, 16, 18]));
        // r = 2: beta*_1 = 48z(z-1)
        let s2 = beta_star(1, 1, 2).unwrap();
        assert_eq!(s2.p1, &zp(&[0, 48]) * &zp(&[-1, 1]));
        // r = 3 row sum at alpha = 1, nu = 1 is -(nu+1)^2
        let t3 = beta_table(1, 1, 3);
        t3.verify_row_sum().unwrap();
        let sum: Rational = t3.beta1.iter().sum();
        assert_eq!(sum, rat(-4, 1));
    }

    #[test]
    fn star_polys_match_tabulated_values() {
        let s = beta_star(1, 1, 0).unwrap();
        assert_eq!(s.p3, UniPoly::new(Var::Z, vec![rat(51, 4), rat(30, 1)]));
        assert_eq!(s.p4, UniPoly::new(Var::Z, vec![rat(47, 2), rat(39, 1)]));
        let s = beta_star(1, 2, 1).unwrap();
        assert_eq!(
            s.p4,
            UniPoly::new(Var::Z, vec![rat(67, 3), rat(6729, 6), rat(1330, 1)])
        );
        let s = beta_star(1, 0, 2).unwrap();
        assert_eq!(s.p1, UniPoly::zero(Var::Z));
        assert_eq!(s.p2, zp(&[0, 1]));
        assert_eq!(s.p3, zp(&[1]));
        assert_eq!(s.p4, zp(&[2]));
        let s = beta_star(0, 1, 0).unwrap();
        assert_eq!(s.p3, zp(&[8]));
        assert_eq!(s.p4, zp(&[12]));
    }

    #[test]
    fn derivative_route_agrees_with_closed_forms() {
        for alpha in 0..=2 {
            for nu in 0..=4 {
                for r in 0..=3 {
                    let a = beta_table(alpha, nu, r);
                    let b = beta_table_from_derivatives(alpha, nu, r);
                    assert_eq!(a, b, "alpha={alpha} nu={nu} r={r}");
                }
            }
        }
    }

    #[test]
    fn reconstruction_at_sample_points() {
        let table = beta_table(1, 3, 2);
        for t in [rat(1, 2), rat(7, 3), rat(-13, 5), rat(22, 7)] {
            assert_eq!(
                table.partial_fraction_value(&t),
                weighted_r_squared(1, 3, 2, &t)
            );
        }
    }

    #[test]
    fn r_value_spot_check() {
        // R(1,1,0)^2 = (1/(1*2))^2 = 1/4, with the (alpha+nu)!/nu! factor 1
        let v = weighted_r_squared(1, 0, 0, &rat(1, 1));
        assert_eq!(v, rat(1, 4) * norm_factor(1, 0));
    }

    #[test]
    fn linear_forms() {
        assert_eq!(
            linear_form_at_1(1, 1, 1, 1).unwrap(),
            (rat(68, 1), rat(327, 4))
        );
        assert_eq!(
            linear_form_at_1(1, 2, 2, 1).unwrap(),
            (rat(4554, 1), rat(32845, 6))
        );
        // j = 0: coefficient of zeta(2) at r = 0, nu = 1 is 26
        assert_eq!(linear_form_at_1(1, 1, 0, 0).unwrap().0, rat(26, 1));
    }

    #[test]
    fn star2_checks() {
        for alpha in 1..=2 {
            for nu in 0..=5 {
                for r in 0..=3 {
                    verify_star2_is_delta_f1(alpha, nu, r).unwrap();
                }
            }
        }
    }
}
