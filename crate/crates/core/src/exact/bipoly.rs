//! Bivariate polynomials in (z, nu): dense in z, with each z-coefficient a
//! dense `UniPoly` in nu. Houses the entries of the 4x4 matrix system, where
//! the degree in z never exceeds 1 but products of matrices push it to 2.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::{UniPoly, Var};
use super::rational::{rat, Rational};

/// Polynomial in z whose coefficients are polynomials in nu.
///
/// Invariant: evaluation at rational (z, nu) agrees with iterated evaluation
/// in either order (checked by a property test below).
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    z_coeffs: Vec<UniPoly>,
}

impl BiPoly {
    /// Build from z-coefficients (index = power of z), each a polynomial in
    /// nu. Trailing zero coefficients are trimmed.
    pub fn new(z_coeffs: Vec<UniPoly>) -> Self {
        for c in &z_coeffs {
            assert_eq!(c.var(), Var::Nu, "BiPoly coefficients must be in nu");
        }
        let mut p = BiPoly { z_coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        BiPoly { z_coeffs: Vec::new() }
    }

    /// Embed a polynomial in nu as a z-constant.
    pub fn from_nu_poly(p: UniPoly) -> Self {
        Self::new(vec![p])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_nu_poly(UniPoly::constant(Var::Nu, c))
    }

    fn trim(&mut self) {
        while self.z_coeffs.last().map_or(false, UniPoly::is_zero) {
            self.z_coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.z_coeffs.is_empty()
    }

    pub fn z_degree(&self) -> i64 {
        self.z_coeffs.len() as i64 - 1
    }

    /// Coefficient of z^k as a polynomial in nu.
    pub fn z_coeff(&self, k: usize) -> UniPoly {
        self.z_coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(Var::Nu))
    }

    /// Evaluate the z variable, leaving a polynomial in nu.
    pub fn eval_z(&self, z: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero(Var::Nu);
        for c in self.z_coeffs.iter().rev() {
            acc = &acc.scale(z) + c;
        }
        acc
    }

    /// Evaluate the nu variable, leaving a polynomial in z.
    pub fn eval_nu(&self, nu: &Rational) -> UniPoly {
        UniPoly::new(Var::Z, self.z_coeffs.iter().map(|c| c.eval(nu)).collect())
    }

    /// Full evaluation at a rational point.
    pub fn eval(&self, z: &Rational, nu: &Rational) -> Rational {
        self.eval_nu(nu).eval(z)
    }

    /// Substitute an affine expression for nu: nu -> c0 + c1*nu.
    pub fn subst_nu(&self, c0: &Rational, c1: &Rational) -> Self {
        let arg = UniPoly::new(Var::Nu, vec![c0.clone(), c1.clone()]);
        BiPoly::new(self.z_coeffs.iter().map(|c| c.compose(&arg)).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        BiPoly::new(self.z_coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// Multiply by a polynomial in nu.
    pub fn mul_nu_poly(&self, p: &UniPoly) -> Self {
        BiPoly::new(self.z_coeffs.iter().map(|c| c * p).collect())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.z_coeffs.len().max(rhs.z_coeffs.len());
        BiPoly::new((0..n).map(|k| &self.z_coeff(k) + &rhs.z_coeff(k)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.z_coeffs.len().max(rhs.z_coeffs.len());
        BiPoly::new((0..n).map(|k| &self.z_coeff(k) - &rhs.z_coeff(k)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs =
            vec![UniPoly::zero(Var::Nu); self.z_coeffs.len() + rhs.z_coeffs.len() - 1];
        for (i, a) in self.z_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.z_coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BiPoly::new(coeffs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&rat(-1, 1))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.z_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}]*z^{k}")?;
        }
        Ok(())
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}
