//! Factorized tau-forms of the z=1 entries, kept as a separate validation
//! table. The canonical entries are the expanded nu-coefficient polynomials
//! assembled in [`super::entries`]; everything here is compared against
//! those after substituting tau = nu + 1 (alpha = 1), so each displayed
//! factorization is individually confirmed or flagged.

use crate::exact::{rat, Rational, UniPoly, Var};

/// Which matrix a tabulated form belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// A*(1;nu) itself.
    Plain,
    /// The conjugated matrix with kappa = 0.
    Conj0,
    /// The conjugated matrix with kappa = 1.
    Conj1,
}

/// One tabulated closed form: entry (i, j) of `table` should equal
/// `scale * prod(factors)` where each factor is a polynomial in tau given
/// by ascending coefficients, raised to a power.
pub struct ClosedForm {
    pub table: Table,
    pub i: usize,
    pub j: usize,
    pub name: &'static str,
    pub scale: Rational,
    pub factors: Vec<(Vec<i64>, u32)>,
    /// Display defect carried by the source line, if any.
    pub note: Option<&'static str>,
}

impl ClosedForm {
    /// The tabulated polynomial, expanded in tau.
    pub fn tau_poly(&self) -> UniPoly {
        let mut acc = UniPoly::constant(Var::Tau, self.scale.clone());
        for (coeffs, e) in &self.factors {
            let f = UniPoly::from_ints(Var::Tau, coeffs);
            acc = &acc * &f.pow(*e);
        }
        acc
    }

    /// The same polynomial in nu (tau = nu + 1).
    pub fn nu_poly(&self) -> UniPoly {
        self.tau_poly().compose(&UniPoly::from_ints(Var::Nu, &[1, 1]))
    }
}

fn cf(
    table: Table,
    i: usize,
    j: usize,
    name: &'static str,
    scale: i64,
    factors: &[(&[i64], u32)],
    note: Option<&'static str>,
) -> ClosedForm {
    ClosedForm {
        table,
        i,
        j,
        name,
        scale: rat(scale, 1),
        factors: factors.iter().map(|(c, e)| (c.to_vec(), *e)).collect(),
        note,
    }
}

/// The full table of displayed factorizations at z = 1, alpha = 1.
/// Entries listed more than once (alternative factorizations of the same
/// position) are each checked.
pub fn closed_form_table() -> Vec<ClosedForm> {
    use Table::*;
    let t = |k: u32| (&[0i64, 1][..], k); // tau^k
    let tm1 = |k: u32| (&[-1i64, 1][..], k); // (tau-1)^k
    let two_tm1 = |k: u32| (&[-1i64, 2][..], k); // (2tau-1)^k
    vec![
        // ---- plain starred entries ----
        cf(Plain, 1, 1, "star-11", 1, &[t(2), (&[-2, 10, -21, 17], 1)], None),
        cf(
            Plain,
            2,
            1,
            "star-21",
            -1,
            &[t(2), tm1(1), two_tm1(1), (&[1, -4, 6], 1)],
            None,
        ),
        cf(
            Plain,
            3,
            1,
            "star-31-quartic",
            1,
            &[t(2), tm1(1), (&[1, -6, 15, -18, 8], 1)],
            None,
        ),
        cf(
            Plain,
            3,
            1,
            "star-31-cubic",
            1,
            &[t(2), tm1(2), (&[-1, 5, -10, 8], 1)],
            Some("two factorizations displayed with no connective; both checked"),
        ),
        cf(
            Plain,
            3,
            1,
            "star-31-split",
            1,
            &[t(2), tm1(2), two_tm1(1), (&[1, -3, 4], 1)],
            Some("two factorizations displayed with no connective; both checked"),
        ),
        cf(
            Plain,
            4,
            1,
            "star-41",
            -1,
            &[t(2), tm1(3), two_tm1(1), (&[1, -2, 2], 1)],
            None,
        ),
        cf(Plain, 1, 3, "star-13", -2, &[two_tm1(1), (&[-1, 3], 1)], None),
        cf(
            Plain,
            2,
            3,
            "star-23",
            1,
            &[tm1(1), two_tm1(1), (&[-1, 4], 1)],
            None,
        ),
        cf(Plain, 3, 3, "star-33", 1, &[tm1(2), (&[-1, 5, -7, 1], 1)], None),
        cf(
            Plain,
            4,
            3,
            "star-43",
            -1,
            &[tm1(3), two_tm1(1), (&[1, -4, 2], 1)],
            None,
        ),
        // ---- kappa = 0 conjugated entries ----
        cf(Conj0, 1, 1, "conj0-row1", 1, &[t(4), tm1(5)], None),
        cf(
            Conj0,
            2,
            2,
            "conj0-22",
            1,
            &[t(4), (&[0, 2, -14, 36, -41, 17], 1)],
            None,
        ),
        cf(
            Conj0,
            2,
            3,
            "conj0-23",
            -3,
            &[t(4), tm1(1), two_tm1(3)],
            None,
        ),
        cf(
            Conj0,
            3,
            2,
            "conj0-32",
            -2,
            &[t(5), tm1(2), two_tm1(1), (&[1, -3, 3], 1)],
            None,
        ),
        cf(
            Conj0,
            3,
            3,
            "conj0-33",
            1,
            &[t(4), tm1(2), (&[-3, 15, -27, 17], 1)],
            None,
        ),
        cf(
            Conj0,
            4,
            2,
            "conj0-42",
            1,
            &[t(5), tm1(3), two_tm1(1), (&[2, -5, 4], 1)],
            Some("source line prints '5tau' for the linear coefficient"),
        ),
        cf(
            Conj0,
            4,
            3,
            "conj0-43",
            -1,
            &[t(4), tm1(3), two_tm1(1), (&[3, -8, 6], 1)],
            None,
        ),
        cf(Conj0, 4, 4, "conj0-44", 1, &[t(4), tm1(5)], None),
        // ---- kappa = 1 conjugated entries ----
        cf(
            Conj1,
            1,
            1,
            "conj1-11",
            -2,
            &[t(4), (&[-3, 15, -27, 17], 1)],
            None,
        ),
        cf(
            Conj1,
            1,
            2,
            "conj1-12",
            8,
            &[t(3), two_tm1(1), (&[1, -3, 3], 1)],
            None,
        ),
        cf(Conj1, 2, 1, "conj1-21", 3, &[t(4), tm1(1), two_tm1(3)], None),
        cf(
            Conj1,
            2,
            2,
            "conj1-22",
            -2,
            &[t(2), (&[0, 2, -14, 36, -41, 17], 1)],
            None,
        ),
        cf(
            Conj1,
            4,
            1,
            "conj1-41",
            1,
            &[t(4), tm1(3), two_tm1(1), (&[3, -8, 6], 1)],
            None,
        ),
        cf(
            Conj1,
            4,
            2,
            "conj1-42",
            -2,
            &[t(3), tm1(3), two_tm1(1), (&[2, -5, 4], 1)],
            None,
        ),
        cf(Conj1, 3, 3, "conj1-row3", -2, &[t(2), tm1(5)], None),
        cf(Conj1, 4, 4, "conj1-44", -2, &[t(2), tm1(5)], None),
    ]
}

/// Zero positions demanded at z = 1: column 4 of rows 1..3 in every table,
/// and the off-(2kappa+1) entries of row 2kappa+1 in the conjugated ones.
pub fn zero_positions(table: Table) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (1..=3).map(|k| (k, 4)).collect();
    match table {
        Table::Plain => {}
        Table::Conj0 => v.extend([(1, 2), (1, 3), (1, 4)]),
        Table::Conj1 => v.extend([(3, 1), (3, 2), (3, 4)]),
    }
    v.sort_unstable();
    v.dedup();
    v
}

/// mu-coefficient forms of the vee/wedge entries at z = 1, alpha = 1.
/// Returned as (is_wedge, i, j, mu-ascending coefficients).
pub fn mu_form_table() -> Vec<(bool, usize, usize, Vec<i64>)> {
    vec![
        (false, 1, 1, vec![0, -2, -21]),
        (true, 1, 1, vec![0, 10, 17]),
        (false, 2, 1, vec![0, -1, -20, -12]),
        (true, 2, 1, vec![0, 7, 26]),
        (false, 3, 1, vec![0, -1, -21, -26]),
        (true, 3, 1, vec![0, 7, 33, 8]),
        (false, 4, 1, vec![0, -1, -21, -34, -4]),
        (true, 4, 1, vec![0, 7, 35, 18]),
        (false, 1, 2, vec![0, -20, -24]),
        (true, 1, 2, vec![4, 36]),
        (false, 2, 2, vec![0, -14, -41]),
        (true, 2, 2, vec![2, 36, 17]),
        (false, 3, 2, vec![0, -14, -58, -12]),
        (true, 3, 2, vec![2, 40, 42]),
        (false, 4, 2, vec![0, -15, -79, -38]),
        (true, 4, 2, vec![2, 47, 75, 8]),
        (false, 1, 3, vec![-2, -12]),
        (true, 1, 3, vec![10]),
        (false, 2, 3, vec![-1, -14]),
        (true, 2, 3, vec![7, 8]),
        (false, 3, 3, vec![-1, -18, -9]),
        (true, 3, 3, vec![7, 20, 1]),
        (false, 4, 3, vec![-1, -31, -48, -4]),
        (true, 4, 3, vec![9, 53, 22]),
        (false, 4, 4, vec![-1, -10, -5]),
        (true, 4, 4, vec![5, 10, 1]),
    ]
}
