//! Dense univariate polynomials over `Rational`, tagged with the symbolic
//! variable they live in (z, nu, tau, or t). Degrees in this crate stay
//! small (<= ~40), so dense coefficient lists are the right storage.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{rat, Rational};

/// Symbolic variable label carried by a [`UniPoly`].
///
/// Mixing variables in arithmetic is a programming error and panics; the
/// label otherwise only affects display.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    /// Series/generating variable.
    Z,
    /// Recurrence index.
    Nu,
    /// Shifted index tau = nu + (1+alpha)/2.
    Tau,
    /// Partial-fraction variable.
    T,
}

impl Var {
    fn symbol(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::Nu => "nu",
            Var::Tau => "tau",
            Var::T => "t",
        }
    }
}

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of x^k.
///
/// Invariant: the leading coefficient is nonzero unless the polynomial is
/// zero, in which case `coeffs` is empty.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: Var,
}

impl UniPoly {
    /// Build from a coefficient list (index = degree); trailing zeros are
    /// trimmed.
    pub fn new(var: Var, coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs, var };
        p.trim();
        p
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { coeffs: Vec::new(), var }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    /// The monomial x in the given variable.
    pub fn x(var: Var) -> Self {
        Self::from_ints(var, &[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree -1 by convention.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Coefficient of x^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "mixed polynomial variables {:?} and {:?}",
            self.var, other.var
        );
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The Euler operator delta = x d/dx: multiplies the coefficient of x^k
    /// by k. Kills constants.
    pub fn delta(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * rat(k as i64, 1))
            .collect();
        Self::new(self.var, coeffs)
    }

    /// Ordinary derivative d/dx.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat(k as i64, 1))
            .collect();
        Self::new(self.var, coeffs)
    }

    /// Substitute another polynomial for the variable: `self(arg)`. The
    /// result lives in `arg`'s variable.
    pub fn compose(&self, arg: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(arg.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * arg) + &UniPoly::constant(arg.var, c.clone());
        }
        acc
    }

    /// Multiply by the scalar `s`.
    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.var, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::one(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by (x - root). Returns `(quotient, remainder)` with
    /// `self = quotient * (x - root) + remainder`.
    pub fn div_linear(&self, root: &Rational) -> (UniPoly, Rational) {
        if self.is_zero() {
            return (UniPoly::zero(self.var), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &carry;
            if k == 0 {
                return (UniPoly::new(self.var, q), v);
            }
            carry = &v * root;
            q[k - 1] = v;
        }
        unreachable!()
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{}", self.var.symbol())?,
                _ => write!(f, "({c})*{}^{k}", self.var.symbol())?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        UniPoly::new(self.var, coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        UniPoly::new(self.var, coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(self.var, coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(&rat(-1, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::Z, coeffs)
    }

    #[test]
    fn delta_matches_tabulated_values() {
        // delta(1 + 16z + 9z^2) = 16z + 18z^2, delta^2 = 16z + 36z^2
        let f = p(&[1, 16, 9]);
        assert_eq!(f.delta(), p(&[0, 16, 18]));
        assert_eq!(f.delta().delta(), p(&[0, 16, 36]));
        // constants die
        assert_eq!(p(&[7]).delta(), UniPoly::zero(Var::Z));
    }

    #[test]
    fn eval_examples() {
        let f = p(&[1, 16, 9]);
        assert_eq!(f.eval(&rat(1, 1)), rat(26, 1));
        assert_eq!(UniPoly::zero(Var::Z).eval(&rat(17, 3)), rat(0, 1));
        // (z-1)(21z+5) has a root at 1
        let g = &p(&[-1, 1]) * &p(&[5, 21]);
        assert_eq!(g.eval(&rat(1, 1)), rat(0, 1));
    }

    #[test]
    fn div_linear_splits_off_roots() {
        let g = &p(&[-1, 1]) * &p(&[5, 21]);
        let (q, r) = g.div_linear(&rat(1, 1));
        assert_eq!(r, rat(0, 1));
        assert_eq!(q, p(&[5, 21]));
    }

    #[test]
    fn compose_substitutes() {
        // (x^2 + 1) at x = nu + 1  ->  nu^2 + 2nu + 2
        let f = UniPoly::from_ints(Var::Tau, &[1, 0, 1]);
        let arg = UniPoly::from_ints(Var::Nu, &[1, 1]);
        assert_eq!(f.compose(&arg), UniPoly::from_ints(Var::Nu, &[2, 2, 1]));
    }

    fn arb_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec((-30i64..30, 1i64..6), 0..6)
            .prop_map(|cs| UniPoly::new(Var::Z, cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn delta_satisfies_leibniz(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).delta();
            let rhs = &(&a.delta() * &b) + &(&a * &b.delta());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), n in -40i64..40, d in 1i64..12) {
            let x = rat(n, d);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }
    }
}
