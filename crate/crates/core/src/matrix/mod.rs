//! The 4x4 polynomial matrix system: assembly of A*(z;nu) from the
//! displayed vee/wedge tables, the inversion identity, the left-eigenrow
//! identity, the conjugated systems, the z=1 closed forms, the scaled
//! large-nu limits, and the order-4 annihilator acting through delta.

pub mod closed_forms;
pub mod entries;

use num_traits::{Signed, Zero};

use crate::beta::f_star_1;
use crate::exact::{factorial, rat, BiPoly, Rational, UniPoly, Var};
use crate::{Error, Result};

pub use closed_forms::{closed_form_table, mu_form_table, zero_positions, ClosedForm, Table};
pub use entries::{a_vee, a_wedge, mu_poly, tau_poly};

/// Parameter point (alpha, nu) with the derived shifts, always recomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    pub alpha: i64,
    pub nu: Rational,
}

impl ParamPoint {
    pub fn new(alpha: i64, nu: Rational) -> Self {
        assert!(alpha >= 0);
        ParamPoint { alpha, nu }
    }

    /// mu = (nu + alpha)(nu + 1).
    pub fn mu(&self) -> Rational {
        (&self.nu + rat(self.alpha, 1)) * (&self.nu + rat(1, 1))
    }

    /// tau = nu + (1 + alpha)/2.
    pub fn tau(&self) -> Rational {
        &self.nu + rat(1 + self.alpha, 2)
    }

    /// The reflected point nu -> -nu - 1 - alpha (fixes mu, negates tau).
    pub fn reflected(&self) -> ParamPoint {
        ParamPoint {
            alpha: self.alpha,
            nu: -(&self.nu) - rat(1 + self.alpha, 1),
        }
    }
}

/// Arithmetic needed of a matrix entry; implemented for exact scalars,
/// polynomials in nu, and bivariate polynomials.
pub trait MatEntry: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl MatEntry for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        rat(1, 1)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Matrix entries in this module are polynomials in nu.
impl MatEntry for UniPoly {
    fn zero() -> Self {
        UniPoly::zero(Var::Nu)
    }
    fn one() -> Self {
        UniPoly::one(Var::Nu)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl MatEntry for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::constant(rat(1, 1))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
}

/// 4x4 matrix over any [`MatEntry`].
#[derive(Clone, PartialEq, Debug)]
pub struct Mat4<T>(pub [[T; 4]; 4]);

impl<T: MatEntry> Mat4<T> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Mat4(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = T::zero();
            for k in 0..4 {
                acc = acc.add(&self.0[i][k].mul(&rhs.0[k][j]));
            }
            acc
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].sub(&rhs.0[i][j]))
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_fn(|i, j| self.0[i][j].mul(s))
    }

    pub fn map<U: MatEntry>(&self, mut f: impl FnMut(&T) -> U) -> Mat4<U> {
        Mat4(std::array::from_fn(|i| {
            std::array::from_fn(|j| f(&self.0[i][j]))
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|row| row.iter().all(MatEntry::is_zero))
    }
}

impl Mat4<BiPoly> {
    pub fn eval_z(&self, z: &Rational) -> Mat4<UniPoly> {
        self.map(|e| e.eval_z(z))
    }

    pub fn subst_nu(&self, c0: &Rational, c1: &Rational) -> Mat4<BiPoly> {
        self.map(|e| e.subst_nu(c0, c1))
    }

    /// Evaluate nu, leaving entries polynomial in z.
    pub fn eval_nu(&self, nu: &Rational) -> [[UniPoly; 4]; 4] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].eval_nu(nu)))
    }
}

impl Mat4<UniPoly> {
    pub fn eval(&self, nu: &Rational) -> Mat4<Rational> {
        self.map(|e| e.eval(nu))
    }

    pub fn subst_affine(&self, c0: &Rational, c1: &Rational) -> Mat4<UniPoly> {
        let arg = UniPoly::new(Var::Nu, vec![c0.clone(), c1.clone()]);
        self.map(|e| e.compose(&arg))
    }

    pub fn to_bipoly(&self) -> Mat4<BiPoly> {
        self.map(|e| BiPoly::from_nu_poly(e.clone()))
    }
}

/// A*(z;nu) = A^v(z;nu) + tau A^w(z;nu).
pub fn build_a(alpha: i64) -> Mat4<BiPoly> {
    let tau = tau_poly(alpha);
    let vee = a_vee(alpha);
    let wedge = a_wedge(alpha);
    Mat4::from_fn(|i, j| &vee.0[i][j] + &wedge.0[i][j].mul_nu_poly(&tau))
}

/// The left eigenrow (mu^2, -2(1-alpha)mu, (1-alpha)^2 - 2mu, 2(1-alpha))
/// as polynomials in nu.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenRow(pub [UniPoly; 4]);

pub fn eigen_row(alpha: i64) -> EigenRow {
    let mu = mu_poly(alpha);
    let c = rat(1 - alpha, 1);
    EigenRow([
        &mu * &mu,
        mu.scale(&(rat(-2, 1) * &c)),
        &UniPoly::constant(Var::Nu, &c * &c) - &mu.scale(&rat(2, 1)),
        UniPoly::constant(Var::Nu, rat(2, 1) * &c),
    ])
}

fn nu_pow5() -> UniPoly {
    UniPoly::from_ints(Var::Nu, &[0, 0, 0, 0, 0, 1])
}

/// The inversion identity: A*(z;-nu-alpha) A*(z;nu) = -nu^5 (nu+alpha)^5 E4,
/// checked coefficient-by-coefficient as bivariate polynomials.
pub fn verify_inversion(alpha: i64) -> Result<()> {
    let a = build_a(alpha);
    let reflected = a.subst_nu(&rat(-alpha, 1), &rat(-1, 1));
    let product = reflected.mul(&a);
    let shifted = UniPoly::from_ints(Var::Nu, &[alpha, 1]); // nu + alpha
    let diag = (&nu_pow5() * &shifted.pow(5)).scale(&rat(-1, 1));
    let expect = Mat4::<UniPoly>::identity().scale(&diag).to_bipoly();
    for i in 0..4 {
        for j in 0..4 {
            if product.0[i][j] != expect.0[i][j] {
                return Err(Error::violation(
                    "inversion-product",
                    format!("alpha = {alpha}, entry ({}, {})", i + 1, j + 1),
                ));
            }
        }
    }
    Ok(())
}

/// The eigenrow identity R(nu-1) A*(1;nu) = nu^5 R(nu), exact in nu.
pub fn verify_eigenrow(alpha: i64) -> Result<()> {
    let a1 = build_a(alpha).eval_z(&rat(1, 1));
    let row = eigen_row(alpha);
    let shift = UniPoly::from_ints(Var::Nu, &[-1, 1]); // nu - 1
    let row_shifted: Vec<UniPoly> = row.0.iter().map(|r| r.compose(&shift)).collect();
    let n5 = nu_pow5();
    for j in 0..4 {
        let mut lhs = UniPoly::zero(Var::Nu);
        for i in 0..4 {
            lhs = &lhs + &(&row_shifted[i] * &a1.0[i][j]);
        }
        let rhs = &n5 * &row.0[j];
        if lhs != rhs {
            return Err(Error::violation(
                "eigenrow-recurrence",
                format!("alpha = {alpha}, column {}", j + 1),
            ));
        }
    }
    Ok(())
}

/// The conjugators C^(kappa)(nu), D^(kappa)(nu) at alpha = 1: C replaces row
/// 2kappa+1 of the identity by the eigenrow; D is its adjugate, taken from
/// the displayed form.
pub fn conjugators(kappa: u8) -> (Mat4<UniPoly>, Mat4<UniPoly>) {
    assert!(kappa <= 1);
    let r = eigen_row(1).0;
    let k = 2 * kappa as usize; // row index 0 or 2
    let mut c = Mat4::<UniPoly>::identity();
    for j in 0..4 {
        c.0[k][j] = r[j].clone();
    }
    let mut d = Mat4::<UniPoly>::identity();
    for i in 0..4 {
        d.0[i][i] = if i == k { UniPoly::one(Var::Nu) } else { r[k].clone() };
    }
    for j in 0..4 {
        if j != k {
            d.0[k][j] = (&r[j]).scale(&rat(-1, 1));
        }
    }
    (c, d)
}

/// C D = (-2)^kappa mu^(2-kappa) E4, plus the reflection invariance
/// C(-nu-2) = C(nu), D(-nu-2) = D(nu).
pub fn verify_conjugators(kappa: u8) -> Result<()> {
    let (c, d) = conjugators(kappa);
    let mu = mu_poly(1);
    let diag = if kappa == 0 {
        &mu * &mu
    } else {
        mu.scale(&rat(-2, 1))
    };
    let expect = Mat4::<UniPoly>::identity().scale(&diag);
    if c.mul(&d) != expect || d.mul(&c) != expect {
        return Err(Error::violation(
            "conjugator-product",
            format!("kappa = {kappa}"),
        ));
    }
    let (m2, m1) = (rat(-2, 1), rat(-1, 1));
    if c.subst_affine(&m2, &m1) != c || d.subst_affine(&m2, &m1) != d {
        return Err(Error::violation(
            "conjugator-reflection",
            format!("kappa = {kappa}"),
        ));
    }
    Ok(())
}

/// The transformed system C^(kappa)(nu-1) A*(z,nu) D^(kappa)(nu).
pub fn transformed_a(kappa: u8) -> Mat4<BiPoly> {
    let (c, d) = conjugators(kappa);
    let c_shift = c.subst_affine(&rat(-1, 1), &rat(1, 1)).to_bipoly();
    let d = d.to_bipoly();
    c_shift.mul(&build_a(1)).mul(&d)
}

/// The inversion identity of the transformed system:
/// T(z,-nu-1) T(z,nu) = -4^kappa (mu(nu) mu(nu-1))^(2-kappa) (nu(nu+1))^5 E4.
pub fn verify_transformed_inversion(kappa: u8) -> Result<()> {
    let t = transformed_a(kappa);
    let reflected = t.subst_nu(&rat(-1, 1), &rat(-1, 1));
    let product = reflected.mul(&t);
    let mu = mu_poly(1);
    let mu_prev = mu.compose(&UniPoly::from_ints(Var::Nu, &[-1, 1]));
    let pair = &mu * &mu_prev;
    let pair_pow = if kappa == 0 { &pair * &pair } else { pair.clone() };
    let nn1 = UniPoly::from_ints(Var::Nu, &[0, 1, 1]); // nu(nu+1)
    let scale = rat(if kappa == 0 { -1 } else { -4 }, 1);
    let diag = (&pair_pow * &nn1.pow(5)).scale(&scale);
    let expect = Mat4::<UniPoly>::identity().scale(&diag).to_bipoly();
    if product != expect {
        return Err(Error::violation(
            "transformed-inversion",
            format!("kappa = {kappa}"),
        ));
    }
    Ok(())
}

/// z-linearity: A(z) = A(1) + (z-1) V with V independent of z, for both the
/// plain and transformed systems, and V transforms by the same conjugation.
pub fn verify_z_decomposition(alpha: i64) -> Result<()> {
    let a = build_a(alpha);
    for i in 0..4 {
        for j in 0..4 {
            if a.0[i][j].z_degree() > 1 {
                return Err(Error::violation(
                    "z-linearity",
                    format!("alpha = {alpha}, entry ({}, {})", i + 1, j + 1),
                ));
            }
        }
    }
    // A(z) - A(1) = (z-1) * (z-coefficient matrix)
    let a1 = a.eval_z(&rat(1, 1)).to_bipoly();
    let v = a.map(|e| BiPoly::from_nu_poly(e.z_coeff(1)));
    let zm1 = BiPoly::new(vec![
        UniPoly::from_ints(Var::Nu, &[-1]),
        UniPoly::one(Var::Nu),
    ]);
    let recomposed = Mat4::from_fn(|i, j| a1.0[i][j].add(&zm1.mul(&v.0[i][j])));
    if recomposed != a {
        return Err(Error::violation("z-decomposition", format!("alpha = {alpha}")));
    }
    if alpha == 1 {
        for kappa in 0..=1u8 {
            let t = transformed_a(kappa);
            let (c, d) = conjugators(kappa);
            let c_shift = c.subst_affine(&rat(-1, 1), &rat(1, 1)).to_bipoly();
            let vt = c_shift.mul(&v).mul(&d.to_bipoly());
            let t1 = t.eval_z(&rat(1, 1)).to_bipoly();
            let recomposed = Mat4::from_fn(|i, j| t1.0[i][j].add(&zm1.mul(&vt.0[i][j])));
            if recomposed != t {
                return Err(Error::violation(
                    "z-decomposition-transformed",
                    format!("kappa = {kappa}"),
                ));
            }
        }
    }
    Ok(())
}

/// nu^5 = p5(mu) + tau q5(mu) at alpha = 1, with p5 = -5mu^2 - 10mu - 1 and
/// q5 = mu^2 + 10mu + 5.
pub fn verify_p5_q5() -> Result<()> {
    let mu = mu_poly(1);
    let tau = tau_poly(1);
    let p5 = {
        let m2 = (&mu * &mu).scale(&rat(-5, 1));
        &(&m2 - &mu.scale(&rat(10, 1))) - &UniPoly::one(Var::Nu)
    };
    let q5 = {
        let m2 = &mu * &mu;
        &(&m2 + &mu.scale(&rat(10, 1))) + &UniPoly::constant(Var::Nu, rat(5, 1))
    };
    if &p5 + &(&tau * &q5) != nu_pow5() {
        return Err(Error::violation("p5-q5-split", "alpha = 1"));
    }
    Ok(())
}

/// Outcome of checking one displayed closed form.
#[derive(Clone, Debug)]
pub struct ClosedFormOutcome {
    pub name: String,
    pub matched: bool,
    pub note: Option<&'static str>,
}

fn table_matrix(table: Table) -> Mat4<UniPoly> {
    match table {
        Table::Plain => build_a(1).eval_z(&rat(1, 1)),
        Table::Conj0 => transformed_a(0).eval_z(&rat(1, 1)),
        Table::Conj1 => transformed_a(1).eval_z(&rat(1, 1)),
    }
}

/// Compare every tabulated z=1 closed form (and required zero entries, and
/// the vee/wedge mu-forms) against the recomputed matrices. The recomputed
/// entries are ground truth; each display either matches or is reported.
pub fn verify_closed_forms() -> Result<Vec<ClosedFormOutcome>> {
    let plain = table_matrix(Table::Plain);
    let conj0 = table_matrix(Table::Conj0);
    let conj1 = table_matrix(Table::Conj1);
    let pick = |t: Table| match t {
        Table::Plain => &plain,
        Table::Conj0 => &conj0,
        Table::Conj1 => &conj1,
    };
    let mut out = Vec::new();
    for cfm in closed_form_table() {
        let got = &pick(cfm.table).0[cfm.i - 1][cfm.j - 1];
        let matched = *got == cfm.nu_poly();
        out.push(ClosedFormOutcome {
            name: cfm.name.to_string(),
            matched,
            note: cfm.note,
        });
    }
    for (t, label) in [(Table::Plain, "plain"), (Table::Conj0, "conj0"), (Table::Conj1, "conj1")]
    {
        for (i, j) in zero_positions(t) {
            let ok = pick(t).0[i - 1][j - 1].is_zero();
            out.push(ClosedFormOutcome {
                name: format!("{label}-zero-{i}{j}"),
                matched: ok,
                note: None,
            });
        }
    }
    let vee1 = a_vee(1).eval_z(&rat(1, 1));
    let wedge1 = a_wedge(1).eval_z(&rat(1, 1));
    let mu = mu_poly(1);
    for (is_wedge, i, j, coeffs) in mu_form_table() {
        let mut expect = UniPoly::zero(Var::Nu);
        let mut mu_pow = UniPoly::one(Var::Nu);
        for c in &coeffs {
            expect = &expect + &mu_pow.scale(&rat(*c, 1));
            mu_pow = &mu_pow * &mu;
        }
        let m = if is_wedge { &wedge1 } else { &vee1 };
        let matched = m.0[i - 1][j - 1] == expect;
        out.push(ClosedFormOutcome {
            name: format!("mu-form-{}{}{}", if is_wedge { "w" } else { "v" }, i, j),
            matched,
            note: None,
        });
    }
    // passthrough columns: conjugation leaves column 1 (kappa=0, rows 2..4)
    // and column 3 (kappa=1, rows 1,2,4) of the plain matrix unchanged
    for i in [2, 3, 4] {
        let ok = conj0.0[i - 1][0] == plain.0[i - 1][0];
        out.push(ClosedFormOutcome {
            name: format!("conj0-passthrough-{i}1"),
            matched: ok,
            note: None,
        });
    }
    for i in [1, 2, 4] {
        let ok = conj1.0[i - 1][2] == plain.0[i - 1][2];
        out.push(ClosedFormOutcome {
            name: format!("conj1-passthrough-{i}3"),
            matched: ok,
            note: None,
        });
    }
    Ok(out)
}

/// Row 2kappa+1 of the transformed matrix at z=1 is
/// (-2)^kappa tau^(4-2kappa) (tau-1)^5 e_(2kappa+1), equivalently
/// (-2)^kappa mu^(2-kappa) nu^5 e_(2kappa+1); both normalizations are the
/// same polynomial and both are enforced.
pub fn verify_row_structure(kappa: u8) -> Result<()> {
    let t = table_matrix(if kappa == 0 { Table::Conj0 } else { Table::Conj1 });
    let k = 2 * kappa as usize;
    let tau = tau_poly(1);
    let tm1 = &tau - &UniPoly::one(Var::Nu);
    let via_tau = {
        let p = &tau.pow(4 - 2 * kappa as u32) * &tm1.pow(5);
        if kappa == 1 { p.scale(&rat(-2, 1)) } else { p }
    };
    let mu = mu_poly(1);
    let via_mu = {
        let p = &mu.pow(2 - kappa as u32) * &nu_pow5();
        if kappa == 1 { p.scale(&rat(-2, 1)) } else { p }
    };
    if via_tau != via_mu {
        return Err(Error::violation("row-normalizations", format!("kappa = {kappa}")));
    }
    for j in 0..4 {
        let expect = if j == k { via_tau.clone() } else { UniPoly::zero(Var::Nu) };
        if t.0[k][j] != expect {
            return Err(Error::violation(
                "row-structure",
                format!("kappa = {kappa}, column {}", j + 1),
            ));
        }
    }
    Ok(())
}

/// Antisymmetry between the two conjugated systems:
/// entry (k, 3-2kappa) of the kappa system is minus entry (k, 2kappa+1) of
/// the other, for k = 2, 4.
pub fn verify_theta_antisymmetry() -> Result<()> {
    let conj0 = table_matrix(Table::Conj0);
    let conj1 = table_matrix(Table::Conj1);
    for k in [2usize, 4] {
        // kappa = 0: (k,3) of conj0 vs -(k,1) of conj1
        let lhs = &conj0.0[k - 1][2];
        let rhs = (&conj1.0[k - 1][0]).scale(&rat(-1, 1));
        if *lhs != rhs {
            return Err(Error::violation("theta-antisymmetry", format!("k = {k}, kappa = 0")));
        }
        // kappa = 1: (k,1) of conj1 vs -(k,3) of conj0
        let lhs = &conj1.0[k - 1][0];
        let rhs = (&conj0.0[k - 1][2]).scale(&rat(-1, 1));
        if *lhs != rhs {
            return Err(Error::violation("theta-antisymmetry", format!("k = {k}, kappa = 1")));
        }
    }
    Ok(())
}

/// The scaled large-nu limit matrices. Row 4, column 1 of the kappa = 0
/// matrix is -4: the recomputed conjugation fixes the sign, and
/// [`resolve_limit_corner_sign`] re-derives it numerically.
pub fn limit_matrix(kappa: u8) -> Mat4<Rational> {
    let m: [[i64; 4]; 4] = if kappa == 0 {
        [[1, 0, 0, 0], [-12, 17, -24, 0], [8, -12, 17, 0], [-4, 8, -12, 1]]
    } else {
        [[17, -24, 0, 0], [-12, 17, 0, 0], [0, 0, 1, 0], [-6, 8, 2, 1]]
    };
    Mat4(m.map(|row| row.map(|v| rat(v, 1))))
}

/// (-2)^-kappa nu^(-9+2kappa) S^-1 T(1;nu) S at an exact rational nu, where
/// S is the diagonal scaling diag(nu^(j-1)) with an extra nu^(4-2kappa) at
/// position 2kappa+1.
pub fn scaled_transformed(kappa: u8, nu: &Rational) -> Mat4<Rational> {
    let t = table_matrix(if kappa == 0 { Table::Conj0 } else { Table::Conj1 }).eval(nu);
    let mut s = [rat(1, 1), nu.clone(), nu * nu, nu * nu * nu];
    let extra = {
        let mut e = rat(1, 1);
        for _ in 0..(4 - 2 * kappa as u32) {
            e *= nu;
        }
        e
    };
    s[2 * kappa as usize] *= &extra;
    let mut pre = rat(1, 1);
    for _ in 0..(9 - 2 * kappa as i32) {
        pre /= nu;
    }
    if kappa == 1 {
        pre /= rat(-2, 1);
    }
    Mat4::from_fn(|i, j| &t.0[i][j] * &s[j] / &s[i] * &pre)
}

/// Deviation of the scaled matrix from its limit: entries of
/// scaled_transformed - limit_matrix.
pub fn scaled_limit_deviation(kappa: u8, nu: &Rational) -> Mat4<Rational> {
    scaled_transformed(kappa, nu).sub(&limit_matrix(kappa))
}

/// Decide the sign of the (4,1) limit entry for kappa = 0 numerically: the
/// returned value is +4 or -4, whichever the scaled matrix approaches.
pub fn resolve_limit_corner_sign(nu: i64) -> i64 {
    let m = scaled_transformed(0, &rat(nu, 1));
    let v = &m.0[3][0];
    if (v - rat(4, 1)).abs() < (v - rat(-4, 1)).abs() {
        4
    } else {
        -4
    }
}

/// The normalized column solution f_(alpha,0,1)(z,nu) =
/// (nu!/(nu+alpha)!)^2 f*_(alpha,0,1)(z,nu), a polynomial in z.
fn f1_normalized(alpha: i64, nu: i64) -> UniPoly {
    let fs = f_star_1(alpha, nu);
    let num = Rational::from(factorial(nu as u64));
    let den = Rational::from(factorial((nu + alpha) as u64));
    let s = &num / &den;
    fs.scale(&(&s * &s))
}

fn delta_column(f: &UniPoly) -> [UniPoly; 4] {
    let d1 = f.delta();
    let d2 = d1.delta();
    let d3 = d2.delta();
    [f.clone(), d1, d2, d3]
}

/// The column recurrence nu^5 X(z;nu-1) = A*(z;nu) X(z;nu) for the
/// terminating solution (k = 1), exact in Q[z] for each integer nu in
/// 1..=nu_max.
pub fn column_recurrence_check_k1(alpha: i64, nu_max: i64) -> Result<()> {
    assert!(alpha >= 1 && nu_max >= 1);
    let a = build_a(alpha);
    for nu in 1..=nu_max {
        let m = a.eval_nu(&rat(nu, 1));
        let x = delta_column(&f1_normalized(alpha, nu));
        let x_prev = delta_column(&f1_normalized(alpha, nu - 1));
        let scale = rat(nu, 1).pow(5);
        for i in 0..4 {
            let mut rhs = UniPoly::zero(Var::Z);
            for j in 0..4 {
                rhs = &rhs + &(&m[i][j] * &x[j]);
            }
            let lhs = x_prev[i].scale(&scale);
            if lhs != rhs {
                return Err(Error::violation(
                    "column-recurrence",
                    format!("alpha = {alpha}, nu = {nu}, row {}", i + 1),
                ));
            }
        }
    }
    Ok(())
}

/// The order-4 annihilator z (delta^2 + (1-alpha) delta - mu)^2 - delta^4,
/// applied to the terminating solution; the result must be the zero
/// polynomial for each nu in 0..=nu_max.
pub fn annihilator_check_k1(alpha: i64, nu_max: i64) -> Result<()> {
    assert!(alpha >= 1 && nu_max >= 0);
    for nu in 0..=nu_max {
        let f = f_star_1(alpha, nu);
        let p = ParamPoint::new(alpha, rat(nu, 1));
        let applied = annihilator_apply(alpha, &p.mu(), &f);
        if !applied.is_zero() {
            return Err(Error::violation(
                "annihilator",
                format!("alpha = {alpha}, nu = {nu}: got {applied}"),
            ));
        }
    }
    Ok(())
}

/// Apply z (delta^2 + (1-alpha) delta - mu)^2 - delta^4 to a polynomial,
/// with the multiplication by z performed after the squared operator, as
/// the operator is written.
pub fn annihilator_apply(alpha: i64, mu: &Rational, f: &UniPoly) -> UniPoly {
    let inner = |g: &UniPoly| -> UniPoly {
        let d2 = g.delta().delta();
        let d1 = g.delta().scale(&rat(1 - alpha, 1));
        &(&d2 + &d1) - &g.scale(mu)
    };
    let squared = inner(&inner(f));
    let z_part = squared.shift_up(1);
    let d4 = f.delta().delta().delta().delta();
    &z_part - &d4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_point_shifts() {
        let p = ParamPoint::new(2, rat(3, 1));
        assert_eq!(p.mu(), rat(20, 1));
        assert_eq!(p.tau(), rat(9, 2));
        let r = p.reflected();
        assert_eq!(r.mu(), p.mu());
        assert_eq!(r.tau(), -p.tau());
    }

    #[test]
    fn vee_entry_11_at_z1_alpha1() {
        // -2mu - 21mu^2 with mu = (nu+1)^2
        let vee = a_vee(1).eval_z(&rat(1, 1));
        let mu = mu_poly(1);
        let expect = &mu.scale(&rat(-2, 1)) - &(&mu * &mu).scale(&rat(21, 1));
        assert_eq!(vee.0[0][0], expect);
    }

    #[test]
    fn star_entry_11_at_z1_alpha1() {
        // tau^2 (17 tau^3 - 21 tau^2 + 10 tau - 2) after tau = nu + 1
        let a1 = build_a(1).eval_z(&rat(1, 1));
        let tau = UniPoly::from_ints(Var::Tau, &[0, 1]);
        let expect = &tau.pow(2) * &UniPoly::from_ints(Var::Tau, &[-2, 10, -21, 17]);
        assert_eq!(a1.0[0][0], expect.compose(&UniPoly::from_ints(Var::Nu, &[1, 1])));
    }

    #[test]
    fn column4_vanishes_at_z1() {
        for alpha in 0..=3 {
            let vee = a_vee(alpha).eval_z(&rat(1, 1));
            let wedge = a_wedge(alpha).eval_z(&rat(1, 1));
            for k in 0..3 {
                assert!(vee.0[k][3].is_zero(), "vee alpha={alpha} row {k}");
                assert!(wedge.0[k][3].is_zero(), "wedge alpha={alpha} row {k}");
            }
        }
    }

    #[test]
    fn inversion_identity_symbolic() {
        for alpha in 1..=3 {
            verify_inversion(alpha).unwrap();
        }
    }

    #[test]
    fn inversion_spot_value() {
        // alpha = 1 at (z, nu) = (2, 3): diagonal is -3^5 * 4^5 = -248832
        let a = build_a(1);
        let m_pos = a.eval_nu(&rat(3, 1));
        let m_neg = a.eval_nu(&rat(-4, 1)); // -nu - alpha
        let z = rat(2, 1);
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = rat(0, 1);
                for k in 0..4 {
                    acc += m_neg[i][k].eval(&z) * m_pos[k][j].eval(&z);
                }
                let expect = if i == j { rat(-248832, 1) } else { rat(0, 1) };
                assert_eq!(acc, expect, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn eigenrow_identity_symbolic() {
        for alpha in 0..=3 {
            verify_eigenrow(alpha).unwrap();
        }
    }

    #[test]
    fn eigenrow_alpha1_is_tau_form() {
        // (tau^4, 0, -2tau^2, 0)
        let r = eigen_row(1).0;
        let tau = tau_poly(1);
        assert_eq!(r[0], tau.pow(4));
        assert!(r[1].is_zero());
        assert_eq!(r[2], tau.pow(2).scale(&rat(-2, 1)));
        assert!(r[3].is_zero());
    }

    #[test]
    fn eigenrow_numeric_instance() {
        // nu = 1, alpha = 1: R(0) A*(1;1) = 1^5 R(1)
        let a1 = build_a(1).eval_z(&rat(1, 1)).eval(&rat(1, 1));
        let r0: Vec<Rational> = eigen_row(1).0.iter().map(|p| p.eval(&rat(0, 1))).collect();
        let r1: Vec<Rational> = eigen_row(1).0.iter().map(|p| p.eval(&rat(1, 1))).collect();
        for j in 0..4 {
            let mut acc = rat(0, 1);
            for i in 0..4 {
                acc += &r0[i] * &a1.0[i][j];
            }
            assert_eq!(acc, r1[j]);
        }
    }

    #[test]
    fn conjugator_checks() {
        verify_conjugators(0).unwrap();
        verify_conjugators(1).unwrap();
        // kappa = 0: first row of C is the eigenrow, rest identity
        let (c, _) = conjugators(0);
        assert_eq!(c.0[0][0], mu_poly(1).pow(2));
        assert_eq!(c.0[1][1], UniPoly::one(Var::Nu));
    }

    #[test]
    fn transformed_inversion_identity() {
        verify_transformed_inversion(0).unwrap();
        verify_transformed_inversion(1).unwrap();
    }

    #[test]
    fn z_decomposition_and_p5q5() {
        for alpha in 0..=3 {
            verify_z_decomposition(alpha).unwrap();
        }
        verify_p5_q5().unwrap();
    }

    #[test]
    fn closed_forms_all_match() {
        let outcomes = verify_closed_forms().unwrap();
        for o in &outcomes {
            assert!(o.matched, "closed form {} mismatched", o.name);
        }
        assert!(outcomes.len() > 60);
    }

    #[test]
    fn row_structure_and_antisymmetry() {
        verify_row_structure(0).unwrap();
        verify_row_structure(1).unwrap();
        verify_theta_antisymmetry().unwrap();
    }

    #[test]
    fn limit_corner_sign_is_negative() {
        assert_eq!(resolve_limit_corner_sign(10_000), -4);
    }

    #[test]
    fn scaled_limits_approach_targets() {
        for kappa in 0..=1u8 {
            let m = scaled_limit_deviation(kappa, &rat(1000, 1));
            for i in 0..4 {
                for j in 0..4 {
                    let dev = m.0[i][j].abs();
                    assert!(
                        dev <= rat(150, 1000),
                        "kappa={kappa} entry ({i},{j}) deviation {dev}"
                    );
                }
            }
            // the pivot row is exact at every nu
            let t = scaled_transformed(kappa, &rat(57, 1));
            let k = 2 * kappa as usize;
            for j in 0..4 {
                if j != k {
                    assert!(Zero::is_zero(&t.0[k][j]));
                }
            }
        }
    }

    #[test]
    fn column_recurrence_small_sweep() {
        column_recurrence_check_k1(1, 4).unwrap();
        column_recurrence_check_k1(2, 4).unwrap();
    }

    #[test]
    fn annihilator_small_sweep() {
        annihilator_check_k1(1, 4).unwrap();
        annihilator_check_k1(2, 3).unwrap();
        // the zero function is annihilated
        let z = UniPoly::zero(Var::Z);
        assert!(annihilator_apply(1, &rat(4, 1), &z).is_zero());
    }

    #[test]
    fn annihilator_coefficients_are_the_eigenrow() {
        // z(w^2 + w(1-alpha) - mu)^2 - w^4 expands to
        // (z-1)w^4 + z(r4 w^3 + r3 w^2 + r2 w + r1)
        for alpha in 0..=3i64 {
            let one_minus_a = rat(1 - alpha, 1);
            let mu = mu_poly(alpha);
            let w2 = |w: &UniPoly| w.pow(2);
            let _ = w2;
            let w = UniPoly::from_ints(Var::Tau, &[0, 1]); // stand-in variable
            let mu_c = UniPoly::constant(Var::Tau, rat(0, 1));
            let _ = (w, mu_c);
            // coefficient comparison done on the nu side:
            let r = eigen_row(alpha).0;
            // quadratic q(w) = w^2 + (1-alpha)w - mu; q^2 coefficients:
            // w^0: mu^2, w^1: -2(1-alpha)mu, w^2: (1-alpha)^2 - 2mu, w^3: 2(1-alpha)
            let c0 = &mu * &mu;
            let c1 = mu.scale(&(rat(-2, 1) * &one_minus_a));
            let c2 = &UniPoly::constant(Var::Nu, &one_minus_a * &one_minus_a)
                - &mu.scale(&rat(2, 1));
            let c3 = UniPoly::constant(Var::Nu, rat(2, 1) * &one_minus_a);
            assert_eq!(r[0], c0);
            assert_eq!(r[1], c1);
            assert_eq!(r[2], c2);
            assert_eq!(r[3], c3);
        }
    }
}
