//! Generic continued-fraction machinery.
//!
//! A fraction b0 + a1/(b1 + a2/(b2 + ...)) is described by its coefficient
//! generator nu -> (a_nu, b_nu). Convergents P_nu/Q_nu solve the three-term
//! recurrence x_{nu+1} = b_{nu+1} x_nu + a_{nu+1} x_{nu-1} with
//! P_{-1} = 1, Q_{-1} = 0, P_0 = b0, Q_0 = 1, and the stacked 2x2 convergent
//! matrices evolve by left-multiplication with step matrices [[0,1],[a,b]].

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exact::{rat, Rational};
use crate::{Error, Result};

/// Coefficient generator: index nu >= 1 to (a_nu, b_nu), fallible so derived
/// specs (equivalence transforms) can surface bad scales at query time.
pub type CoeffFn = Arc<dyn Fn(i64) -> Result<(Rational, Rational)> + Send + Sync>;

/// A continued fraction given by closed-form coefficient generators, so
/// sweeps to large depth never materialize coefficient tables.
#[derive(Clone)]
pub struct CfSpec {
    name: String,
    b0: Rational,
    coeff_fn: CoeffFn,
}

impl fmt::Debug for CfSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CfSpec({})", self.name)
    }
}

/// Exact 2x2 matrix of convergents [[P_{nu-1}, Q_{nu-1}], [P_nu, Q_nu]].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConvergentMatrix {
    pub index: i64,
    pub m: Mat2,
}

/// 2x2 matrix over `Rational`.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat2(pub [[Rational; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        Mat2([
            [Rational::one(), Rational::zero()],
            [Rational::zero(), Rational::one()],
        ])
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Self {
        Mat2(m.map(|row| row.map(|v| rat(v, 1))))
    }

    /// Step matrix [[0, 1], [a, b]].
    pub fn step(a: &Rational, b: &Rational) -> Self {
        Mat2([
            [Rational::zero(), Rational::one()],
            [a.clone(), b.clone()],
        ])
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let mut out = [
            [Rational::zero(), Rational::zero()],
            [Rational::zero(), Rational::zero()],
        ];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = &self.0[i][0] * &rhs.0[0][j] + &self.0[i][1] * &rhs.0[1][j];
            }
        }
        Mat2(out)
    }

    pub fn det(&self) -> Rational {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    pub fn scale(&self, s: &Rational) -> Mat2 {
        Mat2(self.0.clone().map(|row| row.map(|v| v * s)))
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1]
        )
    }
}

impl CfSpec {
    /// Build a spec from infallible closed-form generators.
    pub fn new<F>(name: impl Into<String>, b0: Rational, gen: F) -> Self
    where
        F: Fn(i64) -> (Rational, Rational) + Send + Sync + 'static,
    {
        CfSpec {
            name: name.into(),
            b0,
            coeff_fn: Arc::new(move |nu| Ok(gen(nu))),
        }
    }

    /// Build a spec whose generator may fail (used by derived specs).
    pub fn new_fallible(name: impl Into<String>, b0: Rational, coeff_fn: CoeffFn) -> Self {
        CfSpec {
            name: name.into(),
            b0,
            coeff_fn,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn b0(&self) -> &Rational {
        &self.b0
    }

    /// Coefficients (a_nu, b_nu) for nu >= 1. A vanishing partial numerator
    /// truncates the fraction and is rejected here.
    pub fn coeffs(&self, nu: i64) -> Result<(Rational, Rational)> {
        assert!(nu >= 1, "coefficients start at index 1");
        let (a, b) = (self.coeff_fn)(nu)?;
        if a.is_zero() {
            return Err(Error::ZeroPartialNumerator { index: nu });
        }
        Ok((a, b))
    }

    /// Convergent pairs (P_0, Q_0) .. (P_n, Q_n).
    pub fn convergents(&self, n: i64) -> Result<Vec<(Rational, Rational)>> {
        assert!(n >= 0);
        let mut out = Vec::with_capacity(n as usize + 1);
        let (mut p_prev, mut q_prev) = (Rational::one(), Rational::zero());
        let (mut p, mut q) = (self.b0.clone(), Rational::one());
        out.push((p.clone(), q.clone()));
        for nu in 1..=n {
            let (a, b) = self.coeffs(nu)?;
            let p_next = &b * &p + &a * &p_prev;
            let q_next = &b * &q + &a * &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            out.push((p.clone(), q.clone()));
        }
        Ok(out)
    }

    /// The convergent matrix U_nu, built as the product of step matrices
    /// applied to U_0. Only the running matrix is kept.
    pub fn u_matrix(&self, nu: i64) -> Result<ConvergentMatrix> {
        assert!(nu >= 0);
        let mut m = Mat2([
            [Rational::one(), Rational::zero()],
            [self.b0.clone(), Rational::one()],
        ]);
        for k in 1..=nu {
            let (a, b) = self.coeffs(k)?;
            m = Mat2::step(&a, &b).mul(&m);
        }
        Ok(ConvergentMatrix { index: nu, m })
    }

    /// Ratio P_nu/Q_nu of the deepest convergent at index nu.
    pub fn ratio(&self, nu: i64) -> Result<Rational> {
        let u = self.u_matrix(nu)?;
        let q = &u.m.0[1][1];
        if q.is_zero() {
            return Err(Error::DividedByZeroConvergent { index: nu });
        }
        Ok(&u.m.0[1][0] / q)
    }

    /// Exact product of partial numerators a_1 * ... * a_n.
    pub fn partial_numerator_product(&self, n: i64) -> Result<Rational> {
        let mut acc = Rational::one();
        for nu in 1..=n {
            acc *= self.coeffs(nu)?.0;
        }
        Ok(acc)
    }

    /// Rescale solutions by d: the new coefficients are
    /// a'_m = a_m d_m / d_{m-2} and b'_m = b_m d_m / d_{m-1}, with
    /// d_0 = d_{-1} = 1 fixed. Convergent ratios are unchanged.
    pub fn equivalence_transform<D>(&self, name: impl Into<String>, d: D) -> CfSpec
    where
        D: Fn(i64) -> Rational + Send + Sync + 'static,
    {
        let inner = self.coeff_fn.clone();
        let scale = move |m: i64| -> Result<Rational> {
            if m <= 0 {
                return Ok(Rational::one());
            }
            let v = d(m);
            if v.is_zero() {
                return Err(Error::ZeroScale { index: m });
            }
            Ok(v)
        };
        CfSpec {
            name: name.into(),
            b0: self.b0.clone(),
            coeff_fn: Arc::new(move |m| {
                let (a, b) = inner(m)?;
                let dm = scale(m)?;
                let dm1 = scale(m - 1)?;
                let dm2 = scale(m - 2)?;
                Ok((a * &dm / dm2, b * &dm / dm1))
            }),
        }
    }
}

impl ConvergentMatrix {
    pub fn p_prev(&self) -> &Rational {
        &self.m.0[0][0]
    }
    pub fn q_prev(&self) -> &Rational {
        &self.m.0[0][1]
    }
    pub fn p(&self) -> &Rational {
        &self.m.0[1][0]
    }
    pub fn q(&self) -> &Rational {
        &self.m.0[1][1]
    }

    /// The determinant identity: det U_nu = (-1)^nu * prod_{k<=nu} a_k.
    pub fn check_determinant(&self, spec: &CfSpec) -> Result<()> {
        let prod = spec.partial_numerator_product(self.index)?;
        let sign = if self.index % 2 == 0 { 1 } else { -1 };
        let expect = prod * rat(sign, 1);
        if self.m.det() != expect {
            return Err(Error::violation(
                "convergent-matrix-determinant",
                format!("index {}: det = {}, expected {}", self.index, self.m.det(), expect),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apery::{nesterenko_cf_spec, zeta3_cf_spec};
    use proptest::prelude::*;

    #[test]
    fn constant_spec_initial_convergent() {
        let spec = CfSpec::new("unit", rat(3, 1), |_| (rat(1, 1), rat(1, 1)));
        let c = spec.convergents(0).unwrap();
        assert_eq!(c, vec![(rat(3, 1), rat(1, 1))]);
    }

    #[test]
    fn zeta3_spec_early_convergents() {
        let c = zeta3_cf_spec().convergents(2).unwrap();
        assert_eq!(c[1], (rat(6, 1), rat(5, 1)));
        assert_eq!(c[2], (rat(702, 1), rat(584, 1)));
    }

    #[test]
    fn nesterenko_spec_early_convergents() {
        let c = nesterenko_cf_spec().convergents(4).unwrap();
        assert_eq!(c[3], (rat(77, 1), rat(64, 1)));
        assert_eq!(c[4], (rat(250, 1), rat(208, 1)));
    }

    #[test]
    fn u_matrix_values() {
        let n = nesterenko_cf_spec();
        assert_eq!(n.u_matrix(2).unwrap().m, Mat2::from_ints([[5, 4], [24, 20]]));
        assert_eq!(
            n.u_matrix(6).unwrap().m,
            Mat2::from_ints([[1154, 960], [8424, 7008]])
        );
        let z = zeta3_cf_spec();
        assert_eq!(z.u_matrix(0).unwrap().m, Mat2::identity());
    }

    #[test]
    fn zero_partial_numerator_is_rejected() {
        let spec = CfSpec::new("bad", rat(0, 1), |nu| (rat(nu - 3, 1), rat(1, 1)));
        match spec.convergents(5) {
            Err(Error::ZeroPartialNumerator { index: 3 }) => {}
            other => panic!("expected ZeroPartialNumerator at 3, got {other:?}"),
        }
    }

    #[test]
    fn determinant_identity_on_named_specs() {
        for spec in [zeta3_cf_spec(), nesterenko_cf_spec()] {
            for nu in 0..=60 {
                spec.u_matrix(nu).unwrap().check_determinant(&spec).unwrap();
            }
        }
    }

    #[test]
    fn identity_transform_is_identity() {
        let spec = zeta3_cf_spec();
        let t = spec.equivalence_transform("same", |_| rat(1, 1));
        for nu in 1..=10 {
            assert_eq!(spec.coeffs(nu).unwrap(), t.coeffs(nu).unwrap());
        }
    }

    #[test]
    fn zero_scale_is_rejected() {
        let spec = zeta3_cf_spec();
        let t = spec.equivalence_transform("bad", |m| rat(m - 2, 1));
        match t.coeffs(2) {
            Err(Error::ZeroScale { index: 2 }) => {}
            other => panic!("expected ZeroScale at 2, got {other:?}"),
        }
    }

    #[test]
    fn undefined_ratio_is_reported_not_skipped() {
        // Q_1 = b_1 Q_0 + a_1 Q_-1 = 0 here, so the ratio at index 1 is
        // undefined; none of the named specs ever hit this
        let spec = CfSpec::new("degenerate", rat(1, 1), |_| (rat(1, 1), rat(0, 1)));
        match spec.ratio(1) {
            Err(Error::DividedByZeroConvergent { index: 1 }) => {}
            other => panic!("expected DividedByZeroConvergent, got {other:?}"),
        }
        for spec in [zeta3_cf_spec(), nesterenko_cf_spec()] {
            for nu in 0..=40 {
                spec.ratio(nu).unwrap();
            }
        }
    }

    proptest! {
        // Rescaling never changes the ratio sequence.
        #[test]
        fn transform_preserves_ratios(
            coeffs in proptest::collection::vec((1i64..9, -9i64..9, 1i64..5), 30),
            scales in proptest::collection::vec((1i64..9, 1i64..5), 30),
        ) {
            let table: Vec<(Rational, Rational)> = coeffs
                .iter()
                .map(|&(a, b, d)| (rat(a, d), rat(b, d)))
                .collect();
            let spec = CfSpec::new("random", rat(1, 1), move |nu| table[(nu - 1) as usize].clone());
            let dvals: Vec<Rational> = scales.iter().map(|&(n, d)| rat(n, d)).collect();
            let t = spec.equivalence_transform("scaled", move |m| dvals[(m - 1) as usize].clone());
            let orig = spec.convergents(29).unwrap();
            let scaled = t.convergents(29).unwrap();
            for ((p, q), (ps, qs)) in orig.iter().zip(scaled.iter()) {
                if !q.is_zero() && !qs.is_zero() {
                    prop_assert_eq!(p / q, ps / qs);
                }
            }
        }
    }
}
