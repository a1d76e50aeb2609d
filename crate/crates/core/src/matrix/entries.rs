//! The 32 displayed entry polynomials of the 4x4 system: the "vee" matrix
//! A^v(z;nu) and the "wedge" matrix A^w(z;nu), each entry linear in z with
//! coefficients polynomial in mu = (nu+alpha)(nu+1) and alpha. The starred
//! matrix is A* = A^v + tau A^w with tau = nu + (1+alpha)/2.
//!
//! Every entry is encoded as mu-power rows of alpha-coefficients for the
//! z^0 and z^1 parts, with an optional overall factor 1/2. The identity
//! sweeps (inversion, eigenrow, column recurrence, and the z=1 closed
//! forms) cross-check the tables from four independent directions, so a
//! wrong coefficient anywhere cannot survive the suite.

use num_traits::Zero;

use super::Mat4;
use crate::exact::{rat, BiPoly, Rational, UniPoly, Var};

/// mu = (nu + alpha)(nu + 1) as a polynomial in nu.
pub fn mu_poly(alpha: i64) -> UniPoly {
    let a = UniPoly::from_ints(Var::Nu, &[alpha, 1]);
    let b = UniPoly::from_ints(Var::Nu, &[1, 1]);
    &a * &b
}

/// tau = nu + (1 + alpha)/2 as a polynomial in nu.
pub fn tau_poly(alpha: i64) -> UniPoly {
    UniPoly::new(
        Var::Nu,
        vec![rat(1 + alpha, 2), rat(1, 1)],
    )
}

struct Cx {
    alpha: Rational,
    mu_pows: Vec<UniPoly>,
}

impl Cx {
    fn new(alpha: i64) -> Self {
        let mu = mu_poly(alpha);
        let mut mu_pows = vec![UniPoly::one(Var::Nu)];
        for _ in 0..4 {
            mu_pows.push(&mu_pows.last().unwrap().clone() * &mu);
        }
        Cx {
            alpha: rat(alpha, 1),
            mu_pows,
        }
    }

    /// Polynomial in alpha with integer coefficients, evaluated exactly.
    fn ap(&self, coeffs: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for &c in coeffs.iter().rev() {
            acc = acc * &self.alpha + rat(c, 1);
        }
        acc
    }

    /// sum over p of ap(rows[p]) * mu^p, optionally halved.
    fn part(&self, half: bool, rows: &[&[i64]]) -> UniPoly {
        let mut acc = UniPoly::zero(Var::Nu);
        for (p, row) in rows.iter().enumerate() {
            let mut c = self.ap(row);
            if half {
                c /= rat(2, 1);
            }
            acc = &acc + &self.mu_pows[p].scale(&c);
        }
        acc
    }

    fn entry(&self, half: bool, z0: &[&[i64]], z1: &[&[i64]]) -> BiPoly {
        BiPoly::new(vec![self.part(half, z0), self.part(half, z1)])
    }
}

/// The vee matrix A^v(z;nu) for a fixed alpha.
pub fn a_vee(alpha: i64) -> Mat4<BiPoly> {
    let c = Cx::new(alpha);
    let e11 = c.entry(
        true,
        &[&[-1, 2, -1], &[-5, 3], &[-5, -1]],
        &[&[-4, 12, -13, 6, -1], &[-32, 54, -29, 5], &[-56, 20]],
    );
    let e12 = c.entry(
        false,
        &[&[-2, 3, -1], &[-8, 1, -1], &[-4]],
        &[&[2, -11, 17, -10, 2], &[-4, -11, 3], &[-20]],
    );
    let e13 = c.entry(
        true,
        &[&[-8, 10, -3, -1], &[-24, -4]],
        &[&[20, -48, 37, -11], &[48, -44]],
    );
    let e14 = c.entry(
        false,
        &[&[-6, 7, -3], &[-12]],
        &[&[6, -7, 3], &[12]],
    );
    let e21 = c.entry(
        true,
        &[],
        &[
            &[-4, 12, -13, 6, -1],
            &[-32, 54, -29, 5],
            &[-68, 34, -6],
            &[-24],
        ],
    );
    let e22 = c.entry(
        true,
        &[&[-1, 2, -1], &[-5, 3], &[-5, -1]],
        &[&[0, -10, 21, -14, 3], &[-16, -20, 17, -7], &[-48, -28]],
    );
    let e23 = c.entry(
        true,
        &[&[-4, 6, -2], &[-16, 2, -2], &[-8]],
        &[&[12, -32, 25, -5, -2], &[40, -46, -6], &[8]],
    );
    let e24 = c.entry(
        true,
        &[&[-8, 10, -3, -1], &[-24, -4]],
        &[&[8, -10, 3, 1], &[24, 4]],
    );
    let e31 = c.entry(
        true,
        &[],
        &[
            &[-4, 12, -13, 6, -1],
            &[-32, 54, -29, 5],
            &[-76, 44, -9, -1],
            &[-48, -4],
        ],
    );
    let e32 = c.entry(
        false,
        &[],
        &[
            &[-2, 1, 4, -4, 1],
            &[-16, -1, 7, -3, -1],
            &[-34, -17, -7],
            &[-12],
        ],
    );
    let e33 = c.entry(
        true,
        &[&[-1, 2, -1], &[-5, 3], &[-5, -1]],
        &[&[4, -16, 15, -4, 0, -1], &[16, -42, 1, -9], &[8, -20]],
    );
    let e34 = c.entry(
        false,
        &[&[-2, 3, -1], &[-8, 1, -1], &[-4]],
        &[&[2, -3, 1], &[8, -1, 1], &[4]],
    );
    let e41 = c.entry(
        true,
        &[],
        &[
            &[-4, 12, -13, 6, -1],
            &[-32, 54, -29, 5],
            &[-80, 50, -11, -1],
            &[-64, -2, -2],
            &[-8],
        ],
    );
    let e42 = c.entry(
        true,
        &[],
        &[
            &[-8, 14, -5, -2, 1],
            &[-56, 32, 1, -5, -2],
            &[-112, -26, -15, -5],
            &[-56, -20],
        ],
    );
    let e43 = c.entry(
        true,
        &[],
        &[
            &[-4, 0, 5, -2, 0, -1],
            &[-24, -22, -3, -9, -4],
            &[-36, -42, -18],
            &[-8],
        ],
    );
    let e44 = c.entry(
        true,
        &[&[-1, 2, -1], &[-5, 3], &[-5, -1]],
        &[&[0, -2, 1, 0, 0, -1], &[0, -8, -5, -5], &[0, -4]],
    );
    Mat4([
        [e11, e12, e13, e14],
        [e21, e22, e23, e24],
        [e31, e32, e33, e34],
        [e41, e42, e43, e44],
    ])
}

/// The wedge matrix A^w(z;nu) for a fixed alpha.
pub fn a_wedge(alpha: i64) -> Mat4<BiPoly> {
    let c = Cx::new(alpha);
    let e11 = c.entry(
        false,
        &[&[1, -1], &[3], &[1]],
        &[&[4, -8, 5, -1], &[24, -22, 5], &[16]],
    );
    let e12 = c.entry(
        false,
        &[&[4, -2], &[8, 2]],
        &[&[-4, 18, -16, 4], &[16, 10]],
    );
    let e13 = c.entry(
        false,
        &[&[8, -2, 1], &[8]],
        &[&[-20, 28, -5], &[-8]],
    );
    let e14 = c.entry(false, &[&[12, -2]], &[&[-12, 2]]);
    let e21 = c.entry(
        false,
        &[],
        &[&[4, -8, 5, -1], &[24, -22, 5], &[28, -2]],
    );
    let e22 = c.entry(
        false,
        &[&[1, -1], &[3], &[1]],
        &[&[0, 10, -11, 3], &[16, 16, 1], &[16]],
    );
    let e23 = c.entry(
        false,
        &[&[4, -2], &[8, 2]],
        &[&[-12, 20, -5, 2], &[-16, 14]],
    );
    let e24 = c.entry(
        false,
        &[&[8, -2, 1], &[8]],
        &[&[-8, 2, -1], &[-8]],
    );
    let e31 = c.entry(
        false,
        &[],
        &[&[4, -8, 5, -1], &[24, -22, 5], &[36, -4, 1], &[8]],
    );
    let e32 = c.entry(
        false,
        &[],
        &[&[4, 2, -6, 2], &[24, 14, 0, 2], &[28, 14]],
    );
    let e33 = c.entry(
        false,
        &[&[1, -1], &[3], &[1]],
        &[&[-4, 12, -3, 1, 1], &[-8, 18, 7]],
    );
    let e34 = c.entry(
        false,
        &[&[4, -2], &[8, 2]],
        &[&[-4, 2], &[-8, -2]],
    );
    let e41 = c.entry(
        false,
        &[],
        &[&[4, -8, 5, -1], &[24, -22, 5], &[40, -6, 1], &[16, 2]],
    );
    let e42 = c.entry(
        false,
        &[],
        &[&[8, -6, -1, 1], &[40, 4, 1, 2], &[48, 22, 5], &[8]],
    );
    let e43 = c.entry(
        false,
        &[],
        &[&[4, 4, -1, 1, 1], &[16, 22, 11, 4], &[12, 10]],
    );
    let e44 = c.entry(
        false,
        &[&[1, -1], &[3], &[1]],
        &[&[0, 2, 1, 1, 1], &[0, 4, 3]],
    );
    Mat4([
        [e11, e12, e13, e14],
        [e21, e22, e23, e24],
        [e31, e32, e33, e34],
        [e41, e42, e43, e44],
    ])
}
