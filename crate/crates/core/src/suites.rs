//! Named verification suites. Each assembles the module-level checks into a
//! [`Report`] with one record per identity family, so the command line can
//! gate on exit codes and CI can diff the JSON.

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::apery;
use crate::beta;
use crate::cf::Mat2;
use crate::exact::{rat, UniPoly, Var};
use crate::matrix;
use crate::oracle;
use crate::report::Report;
use crate::theorem_a::{self, Expansion};
use crate::{Error, Result};

/// Bounds shared by the suites; the defaults match the deepest sweeps the
/// acceptance gate requires.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub k_max: i64,
    pub nu_max_beta: i64,
    pub nu_max_forms: i64,
    pub alpha_max: i64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            k_max: 40,
            nu_max_beta: 20,
            nu_max_forms: 40,
            alpha_max: 3,
        }
    }
}

fn slope_within(name: &str, got: f64, target: f64, rel_tol: f64) -> Result<()> {
    if (got - target).abs() <= rel_tol * target.abs() {
        Ok(())
    } else {
        Err(Error::violation(
            name.to_string(),
            format!("slope {got:.5} vs target {target:.5} beyond {:.1}%", rel_tol * 100.0),
        ))
    }
}

/// Exact identities of the two fractions and their intertwining, plus the
/// convergence-rate measurements.
pub fn nesterenko_suite(cfg: &SuiteConfig) -> Report {
    let mut rep = Report::new("nesterenko");
    let k = cfg.k_max.max(2);

    rep.record("step-commutation", "nesterenko/intertwine-step", apery::verify_intertwining(k));
    rep.record("subsequence-scaling", "nesterenko/subsequence", apery::verify_subsequence(k));
    rep.record("integrality", "nesterenko/integrality", apery::verify_integrality(60));
    rep.record("partial-products", "nesterenko/partial-products", apery::verify_partial_products(k));
    rep.record("interlacing", "nesterenko/interlacing", apery::verify_interlacing(k));

    rep.record("u-table-values", "nesterenko/u-table", (|| {
        let nest = apery::nesterenko_cf_spec();
        let expect = [
            (3, [[24, 20], [77, 64]]),
            (4, [[77, 64], [250, 208]]),
            (5, [[250, 208], [1154, 960]]),
            (6, [[1154, 960], [8424, 7008]]),
        ];
        for (idx, m) in expect {
            if nest.u_matrix(idx)?.m != Mat2::from_ints(m) {
                return Err(Error::violation("u-table", format!("index {idx}")));
            }
        }
        let z2 = apery::zeta3_cf_spec().u_matrix(2)?.m;
        if z2 != Mat2::from_ints([[6, 5], [702, 584]]) {
            return Err(Error::violation("u-table", "zeta3 fraction at depth 2"));
        }
        Ok(())
    })());

    rep.record("determinant-identity", "cf/determinant", (|| {
        for spec in [apery::zeta3_cf_spec(), apery::nesterenko_cf_spec()] {
            for nu in 0..=60 {
                spec.u_matrix(nu)?.check_determinant(&spec)?;
            }
        }
        Ok(())
    })());

    rep.record("doubled-variant", "nesterenko/two-zeta3", (|| {
        let a = apery::nesterenko_cf_spec();
        let b = apery::nesterenko_2zeta3_cf_spec();
        for nu in 0..=30 {
            if b.ratio(nu)? != rat(2, 1) * a.ratio(nu)? {
                return Err(Error::violation("two-zeta3-ratio", format!("nu = {nu}")));
            }
        }
        Ok(())
    })());

    let target = -oracle::eight_ln_silver();
    rep.record("apery-error-slope", "rates/apery", (|| {
        slope_within("apery-error-slope", apery::apery_error_slope(5, k)?, target, 0.02)
    })());
    rep.record("subsequence-error-slope", "rates/nesterenko", (|| {
        slope_within("subsequence-error-slope", apery::nesterenko_error_slope(5, k)?, target, 0.02)
    })());
    rep.waive(
        "head-normalization note: U_1 of the zeta(3) fraction equals H_1 U_2 exactly; \
         the 1/4 scale needs no sign adjustment"
            .to_string(),
    );
    rep
}

/// Symbolic identities of the 4x4 system and the z = 1 tables.
pub fn matrix_suite(cfg: &SuiteConfig) -> Report {
    let mut rep = Report::new("matrix");
    for alpha in 1..=cfg.alpha_max {
        rep.record(
            format!("inversion-alpha{alpha}"),
            "matrix/inversion",
            matrix::verify_inversion(alpha),
        );
    }
    for alpha in 0..=cfg.alpha_max {
        rep.record(
            format!("eigenrow-alpha{alpha}"),
            "matrix/eigenrow",
            matrix::verify_eigenrow(alpha),
        );
        rep.record(
            format!("z-decomposition-alpha{alpha}"),
            "matrix/z-split",
            matrix::verify_z_decomposition(alpha),
        );
    }
    for kappa in 0..=1u8 {
        rep.record(
            format!("conjugators-kappa{kappa}"),
            "matrix/conjugators",
            matrix::verify_conjugators(kappa),
        );
        rep.record(
            format!("transformed-inversion-kappa{kappa}"),
            "matrix/transformed-inversion",
            matrix::verify_transformed_inversion(kappa),
        );
        rep.record(
            format!("pivot-row-kappa{kappa}"),
            "matrix/pivot-row",
            matrix::verify_row_structure(kappa),
        );
    }
    rep.record("p5-q5-split", "matrix/p5-q5", matrix::verify_p5_q5());
    rep.record("theta-antisymmetry", "matrix/theta", matrix::verify_theta_antisymmetry());

    match matrix::verify_closed_forms() {
        Ok(outcomes) => {
            for o in outcomes {
                let res = if o.matched {
                    Ok(())
                } else {
                    Err(Error::violation("closed-form", o.name.clone()))
                };
                rep.record(format!("closed-form-{}", o.name), "matrix/z1-tables", res);
                if let Some(note) = o.note {
                    rep.waive(format!("{}: {note}", o.name));
                }
            }
        }
        Err(e) => rep.record("closed-forms", "matrix/z1-tables", Err(e)),
    }

    rep.record("scaled-limits", "matrix/limits", (|| {
        let nu = rat(1000, 1);
        // worst deviation constants measured exactly: 132.3 (kappa 0) and
        // 108.2 (kappa 1) times 1/nu; 150/nu is the derived bound
        let bound = rat(150, 1) / &nu;
        for kappa in 0..=1u8 {
            let dev = matrix::scaled_limit_deviation(kappa, &nu);
            for i in 0..4 {
                for j in 0..4 {
                    if dev.0[i][j].abs() > bound {
                        return Err(Error::violation(
                            "scaled-limit",
                            format!("kappa = {kappa}, entry ({}, {})", i + 1, j + 1),
                        ));
                    }
                }
            }
        }
        Ok(())
    })());
    let corner = matrix::resolve_limit_corner_sign(10_000);
    rep.record("limit-corner-sign", "matrix/limits", (|| {
        if corner == -4 {
            Ok(())
        } else {
            Err(Error::violation("limit-corner-sign", format!("resolved to {corner}")))
        }
    })());
    rep.waive(format!(
        "kappa = 0 limit-matrix corner (4,1): displayed ambiguously ('04' / '4'); \
         recomputation resolves it to {corner}"
    ));
    rep.waive(
        "pivot-row scale: the tau^(4-2k)(tau-1)^5 and mu^(2-k)nu^5 normalizations \
         are the same polynomial; both are enforced"
            .to_string(),
    );

    for alpha in 1..=2 {
        rep.record(
            format!("column-recurrence-alpha{alpha}"),
            "matrix/column-recurrence",
            matrix::column_recurrence_check_k1(alpha, 10),
        );
        rep.record(
            format!("annihilator-alpha{alpha}"),
            "matrix/annihilator",
            matrix::annihilator_check_k1(alpha, 10),
        );
    }
    rep
}

/// Table identities, reconstruction oracles, generating polynomials, and
/// the z -> 1 linear forms.
pub fn beta_suite(cfg: &SuiteConfig) -> Report {
    let mut rep = Report::new("beta");
    let nu_max = cfg.nu_max_beta;

    rep.record("row-sums", "beta/row-sums", (|| {
        for alpha in 1..=cfg.alpha_max {
            for nu in 0..=nu_max {
                for r in 0..=3 {
                    beta::beta_table(alpha, nu, r).verify_row_sum()?;
                }
            }
        }
        Ok(())
    })());

    rep.record("reconstruction-oracle", "beta/reconstruction", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0701);
        for alpha in 1..=cfg.alpha_max {
            for nu in 0..=nu_max {
                // the lifts only reweight the r = 0 rows, so fresh sample
                // points per r still probe every table
                let tables: Vec<beta::BetaTable> =
                    (0..=3).map(|r| beta::beta_table(alpha, nu, r)).collect();
                for table in &tables {
                    for _ in 0..50 {
                        let t = loop {
                            let num = rng.gen_range(-99i64..=99);
                            let den = rng.gen_range(1i64..=9);
                            let t = rat(num, den);
                            // stay away from the poles at 0, -1, .., -(nu+alpha)
                            if !(t.is_integer()
                                && t <= rat(0, 1)
                                && t >= rat(-(nu + alpha), 1))
                            {
                                break t;
                            }
                        };
                        let lhs = table.partial_fraction_value(&t);
                        let rhs = beta::weighted_r_squared(alpha, nu, table.r, &t);
                        if lhs != rhs {
                            return Err(Error::violation(
                                "reconstruction",
                                format!(
                                    "alpha = {alpha}, nu = {nu}, r = {}, t = {t}",
                                    table.r
                                ),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    })());

    rep.record("derivative-route", "beta/derivative-oracle", (|| {
        for alpha in 1..=2 {
            for nu in 0..=6 {
                for r in 0..=3 {
                    let a = beta::beta_table(alpha, nu, r);
                    let b = beta::beta_table_from_derivatives(alpha, nu, r);
                    if a != b {
                        return Err(Error::violation(
                            "derivative-route",
                            format!("alpha = {alpha}, nu = {nu}, r = {r}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    })());

    // one pass builds all four r-levels per (alpha, nu); the construction
    // itself compares the direct sums with the delta-recurrences at every
    // lift, and the levels feed the delta^r f*_1 comparison
    let mut two_route = Ok(());
    let mut star2 = Ok(());
    'outer: for alpha in 1..=cfg.alpha_max {
        for nu in 0..=nu_max {
            let levels = match beta::beta_star_levels(alpha, nu, 3) {
                Ok(l) => l,
                Err(e) => {
                    two_route = Err(e);
                    break 'outer;
                }
            };
            let mut f = beta::f_star_1(alpha, nu);
            for star in &levels {
                if star.p2 != f || !f.has_nonneg_integer_coeffs() {
                    star2 = Err(Error::violation(
                        "beta-star-2-delta-f1",
                        format!("alpha = {alpha}, nu = {nu}, r = {}", star.r),
                    ));
                    break 'outer;
                }
                f = f.delta();
            }
        }
    }
    rep.record("two-route-stars", "beta/two-routes", two_route);
    rep.record("star2-delta-f1", "beta/star2", star2);

    rep.record("tabulated-values", "beta/tables", (|| {
        let expect_eq = |name: &str, got: bool| {
            if got {
                Ok(())
            } else {
                Err(Error::violation("tabulated-values", name.to_string()))
            }
        };
        expect_eq("S(1,1;1,1)", beta::harmonic_s(1, 1, 1, 1) == rat(-1, 2))?;
        expect_eq("S(1,0;0,0)", beta::harmonic_s(1, 0, 0, 0) == rat(0, 1))?;
        expect_eq("S(1,3;1,2)", beta::harmonic_s(1, 3, 1, 2) == rat(83, 60))?;
        let t = beta::beta_base(1, 1);
        expect_eq("base-row2", t.beta2 == vec![rat(1, 1), rat(16, 1), rat(9, 1)])?;
        let t2 = beta::beta_base(1, 2);
        expect_eq(
            "base-row1",
            t2.beta1 == vec![rat(-20, 3), rat(-216, 1), rat(-54, 1), rat(830, 3)],
        )?;
        let t0 = beta::beta_base(0, 1);
        expect_eq("alpha0-row1", t0.beta1 == vec![rat(-4, 1), rat(4, 1)])?;
        let s = beta::beta_star(1, 1, 0)?;
        expect_eq("star3", s.p3 == UniPoly::new(Var::Z, vec![rat(51, 4), rat(30, 1)]))?;
        expect_eq("star4", s.p4 == UniPoly::new(Var::Z, vec![rat(47, 2), rat(39, 1)]))?;
        let s = beta::beta_star(1, 1, 1)?;
        expect_eq(
            "star1-r1",
            s.p1 == &UniPoly::from_ints(Var::Z, &[-1, 1]) * &UniPoly::from_ints(Var::Z, &[1, 33]),
        )?;
        let s = beta::beta_star(1, 1, 2)?;
        expect_eq(
            "star1-r2",
            s.p1 == &UniPoly::from_ints(Var::Z, &[0, 48]) * &UniPoly::from_ints(Var::Z, &[-1, 1]),
        )?;
        let s = beta::beta_star(1, 2, 2)?;
        expect_eq(
            "star4-r2",
            s.p4 == UniPoly::new(Var::Z, vec![rat(20, 3), rat(3555, 2), rat(3690, 1)]),
        )?;
        Ok(())
    })());

    rep.record("series-vs-closed-form", "beta/series", (|| {
        let tol = oracle::pow10_inv(9);
        for (alpha, nu, r, k) in [(1i64, 1i64, 0u32, 2u8), (1, 2, 1, 2), (1, 1, 0, 3), (2, 1, 0, 2)] {
            let a = beta::series_f(alpha, nu, r, k, &rat(2, 1), &tol)?;
            let b = beta::closed_form_f(alpha, nu, r, k, &rat(2, 1), &tol)?;
            if !a.intersects(&b) {
                return Err(Error::violation(
                    "series-agreement",
                    format!("alpha = {alpha}, nu = {nu}, r = {r}, k = {k}"),
                ));
            }
        }
        Ok(())
    })());

    rep.record("polylog-closed-forms", "beta/polylog", (|| {
        let z = rat(2, 1);
        if beta::polylog_tail_closed(0, &z)? != rat(1, 1)
            || beta::polylog_tail_closed(-2, &z)? != rat(6, 1)
        {
            return Err(Error::violation("polylog", "closed forms at z = 2"));
        }
        Ok(())
    })());

    rep.record("linear-forms", "beta/linear-forms", (|| {
        if beta::linear_form_at_1(1, 1, 1, 1)? != (rat(68, 1), rat(327, 4)) {
            return Err(Error::violation("linear-form", "r = 1, nu = 1"));
        }
        if beta::linear_form_at_1(1, 2, 2, 1)? != (rat(4554, 1), rat(32845, 6)) {
            return Err(Error::violation("linear-form", "r = 2, nu = 2"));
        }
        if beta::linear_form_at_1(1, 1, 0, 0)?.0 != rat(26, 1) {
            return Err(Error::violation("linear-form", "zeta(2) coefficient"));
        }
        // the r = 1, nu = 1 form evaluates near -0.0101
        let zeta3 = oracle::zeta3_interval(&oracle::pow10_inv(12));
        let v = theorem_a::Zeta3Form { c: rat(68, 1), d: rat(327, 4) }.value(&zeta3);
        if v.max_distance(&rat(0, 1)) > rat(2, 100) {
            return Err(Error::violation("linear-form", "r = 1, nu = 1 magnitude"));
        }
        Ok(())
    })());

    rep
}

/// The delta-recurrences, the identification with the generating
/// polynomials, the two integer-coefficient expansions, and their
/// convergence to 2 zeta(3).
pub fn theorem_a_suite(cfg: &SuiteConfig) -> Report {
    let mut rep = Report::new("theoremA");
    let n = cfg.nu_max_forms;

    rep.record("seed-consistency", "expansion/seeds", (|| {
        theorem_a::PoincareRecurrence::new(Expansion::One).verify_seed()?;
        theorem_a::PoincareRecurrence::new(Expansion::Two).verify_seed()
    })());

    rep.record("zero-combinations", "expansion/weights", (|| {
        let z1 = rat(486, 1) * rat(1029, 1) - rat(14716, 1) * rat(34, 1) + rat(250, 1);
        let z2 = rat(252, 1) * rat(2277, 1) - rat(11042, 1) * rat(52, 1) + rat(380, 1);
        if !z1.is_zero() || !z2.is_zero() {
            return Err(Error::violation("zero-combination", "rational family"));
        }
        // the beta*_4 companions, exact in Q
        let a = rat(486, 1) * rat(14843, 6) - rat(14716, 1) * rat(327, 4) + rat(250, 1) * rat(3, 1);
        let b = rat(252, 1) * rat(32845, 6) - rat(11042, 1) * rat(125, 1) + rat(380, 1) * rat(2, 1);
        if !a.is_zero() || !b.is_zero() {
            return Err(Error::violation("zero-combination", "beta*_4 companions"));
        }
        Ok(())
    })());

    rep.record(
        "delta-recurrences",
        "expansion/delta-recurrences",
        theorem_a::verify_delta_recurrences(n),
    );
    for label in [Expansion::One, Expansion::Two] {
        rep.record(
            format!("beta-identification-{label:?}"),
            "expansion/identification",
            theorem_a::verify_beta_identification(label, n),
        );
        rep.record(
            format!("construction-agreement-{label:?}"),
            "expansion/construction",
            theorem_a::verify_spec_agreement(label, 100),
        );
    }

    rep.record("early-convergents", "expansion/early", (|| {
        let tol = oracle::pow10_inv(12);
        let (r1, e1, _) = theorem_a::converge_2zeta3(Expansion::One, 2, &tol)?;
        if r1 != rat(4809132, 1) / rat(2000376, 1) || e1 >= oracle::pow10_inv(5) {
            return Err(Error::violation("early-convergents", "expansion 1 depth 2"));
        }
        let (r2, e2, _) = theorem_a::converge_2zeta3(Expansion::Two, 2, &tol)?;
        if r2 != rat(2758980, 1) / rat(1147608, 1) || e2 >= oracle::pow10_inv(4) {
            return Err(Error::violation("early-convergents", "expansion 2 depth 2"));
        }
        Ok(())
    })());

    let silver = 4.0 * (1.0 + 2.0_f64.sqrt()).ln();
    for label in [Expansion::One, Expansion::Two] {
        rep.record(format!("ratio-error-slope-{label:?}"), "rates/expansion", (|| {
            let (_, _, slope) = theorem_a::converge_2zeta3(label, n, &oracle::pow10_inv(12))?;
            slope_within("ratio-error-slope", slope.unwrap(), -2.0 * silver, 0.02)
        })());
        rep.record(format!("q-growth-slope-{label:?}"), "rates/growth", (|| {
            slope_within("q-growth-slope", theorem_a::q_growth_slope(label, 5, n)?, silver, 0.02)
        })());
        rep.record(format!("linear-form-slope-{label:?}"), "rates/decay", (|| {
            slope_within(
                "linear-form-slope",
                theorem_a::linear_form_slope(label, 5, n)?,
                -silver,
                0.02,
            )
        })());
    }

    rep.record("expansions-share-limit", "expansion/shared-limit", (|| {
        let s1 = theorem_a::theorem_a_spec(Expansion::One);
        let s2 = theorem_a::theorem_a_spec(Expansion::Two);
        let mut pts = Vec::new();
        for m in 5..=n {
            let d = (s1.ratio(m)? - s2.ratio(m)?).abs();
            if d.is_zero() {
                return Err(Error::NonPositiveError { index: m as usize });
            }
            pts.push((m as f64, oracle::ln_abs(&d)?));
        }
        slope_within(
            "expansion-difference-slope",
            oracle::least_squares_slope(&pts),
            -2.0 * silver,
            0.02,
        )
    })());

    rep.waive(
        "asymptotic existence constants are not estimated; the growth and decay \
         rates are confirmed by log-slope regression instead (deliberate substitution)"
            .to_string(),
    );
    rep
}

/// Every suite, merged.
pub fn all_suites(cfg: &SuiteConfig) -> Report {
    let mut rep = Report::new("all");
    rep.merge(nesterenko_suite(cfg));
    rep.merge(matrix_suite(cfg));
    rep.merge(beta_suite(cfg));
    rep.merge(theorem_a_suite(cfg));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nesterenko_and_beta_suites_pass() {
        let cfg = SuiteConfig {
            k_max: 20,
            nu_max_beta: 5,
            nu_max_forms: 20,
            alpha_max: 2,
        };
        for rep in [nesterenko_suite(&cfg), beta_suite(&cfg)] {
            assert!(
                rep.all_passed(),
                "suite {} first failure: {:?}",
                rep.suite,
                rep.first_failure()
            );
        }
    }

    #[test]
    fn theorem_a_suite_passes_at_full_depth() {
        let rep = theorem_a_suite(&SuiteConfig::default());
        assert!(
            rep.all_passed(),
            "first failure: {:?}",
            rep.first_failure()
        );
    }
}
