//! Cross-checks between the enumerator, the classifier, the closed forms and
//! the generating functions. Each check is named; the suite stops at nothing
//! and reports every outcome, callers decide what to do with failures.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::class::{enumerate_class, seed_cycle, seed_dynkin_d};
use crate::classify::{classify, RealizationParams};
use crate::counting::{
    a_tilde, binomial, catalan, d_n_count, derived_class_count, parameter_splits, realization_count,
    refined_realization_count, symmetric_count, table_row,
};
use crate::series::{
    atilde_series, b_series, b_series_unweighted, solve_a_point, solve_a_point_unweighted, SeriesError,
    TruncatedSeries, Var,
};

/// Published counts of Ã_{n-1} quivers, rows `n = 2..=10`, columns `r = 1..`.
pub const REFERENCE_TABLE: [&[u64]; 9] = [
    &[1],
    &[2],
    &[5, 4],
    &[14, 12],
    &[42, 36, 22],
    &[132, 108, 100],
    &[429, 349, 315, 172],
    &[1430, 1144, 1028, 980],
    &[4862, 3868, 3432, 3240, 1651],
];

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Largest vertex count enumerated by brute force.
    pub n_max: u64,
    /// Truncation degree of the series checks.
    pub degree: u32,
    pub multiplicity_cap: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: 8, degree: 10, multiplicity_cap: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub result: Result<(), String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

type Check = Result<(), String>;

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn series_err(e: SeriesError) -> String {
    e.to_string()
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn check_reference_table(n_max: u64) -> Check {
    for (idx, expected) in REFERENCE_TABLE.iter().enumerate() {
        let n = idx as u64 + 2;
        if n > n_max {
            break;
        }
        let row = table_row(n).map_err(|e| e.to_string())?;
        let want: Vec<BigInt> = expected.iter().map(|&v| BigInt::from(v)).collect();
        expect_eq(&format!("table row n = {n}"), row, want)?;
    }
    Ok(())
}

pub fn check_class_size(r: u64, s: u64, cap: u32) -> Check {
    let seed = seed_cycle(r as usize, s as usize).map_err(|e| e.to_string())?;
    let class = enumerate_class(&seed, cap).map_err(|e| e.to_string())?;
    let formula = a_tilde(r, s).map_err(|e| e.to_string())?;
    expect_eq(&format!("class ({r}, {s})"), BigInt::from(class.size()), formula)
}

pub fn check_d_n(n: u64, cap: u32) -> Check {
    let seed = seed_dynkin_d(n as usize).map_err(|e| e.to_string())?;
    let class = enumerate_class(&seed, cap).map_err(|e| e.to_string())?;
    let formula = d_n_count(n).map_err(|e| e.to_string())?;
    expect_eq(&format!("D_{n}"), BigInt::from(class.size()), formula)
}

/// Census of a class by classifier parameters, realizations and symmetry.
#[derive(Debug, Clone, Default)]
pub struct Census {
    pub size: usize,
    pub by_params: BTreeMap<RealizationParams, usize>,
    pub symmetric: usize,
    pub symmetric_by_r2: BTreeMap<usize, usize>,
    /// Sum over members of the number of distinct realizations.
    pub realizations: usize,
    pub unclassified: usize,
    /// Members whose `(r, s)` disagrees with the class.
    pub wrong_class: usize,
}

pub fn census(r: u64, s: u64, cap: u32) -> Result<Census, String> {
    let seed = seed_cycle(r as usize, s as usize).map_err(|e| e.to_string())?;
    let class = enumerate_class(&seed, cap).map_err(|e| e.to_string())?;
    let mut c = Census { size: class.size(), ..Census::default() };
    let want = (r.max(s) as usize, r.min(s) as usize);
    for m in class.members() {
        let Some(st) = classify(&m.quiver).structure().cloned() else {
            c.unclassified += 1;
            continue;
        };
        let p = st.realization_1.normalized();
        if (p.r(), p.s()) != want {
            c.wrong_class += 1;
        }
        *c.by_params.entry(p).or_default() += 1;
        if st.is_symmetric() {
            c.symmetric += 1;
            *c.symmetric_by_r2.entry(p.r2).or_default() += 1;
            c.realizations += 1;
        } else {
            c.realizations += 2;
        }
    }
    Ok(c)
}

/// Classifier census against the refined closed forms.
pub fn check_census(r: u64, s: u64, cap: u32) -> Check {
    let c = census(r, s, cap)?;
    expect_eq("unclassified members", c.unclassified, 0)?;
    expect_eq("members with wrong (r, s)", c.wrong_class, 0)?;
    let (hi, lo) = (r.max(s), r.min(s));
    let mut total = BigInt::zero();
    for (r1, r2, s1, s2) in parameter_splits(hi, lo) {
        let formula = derived_class_count(r1, r2, s1, s2).map_err(|e| e.to_string())?;
        let key = RealizationParams { r1: r1 as usize, r2: r2 as usize, s1: s1 as usize, s2: s2 as usize }.normalized();
        let found = c.by_params.get(&key).copied().unwrap_or(0);
        expect_eq(&format!("split ({r1}, {r2}, {s1}, {s2})"), BigInt::from(found), formula.clone())?;
        total += formula;
    }
    expect_eq("splits sum", total, a_tilde(r, s).map_err(|e| e.to_string())?)?;
    let mut realizations = realization_count(r, s).map_err(|e| e.to_string())?;
    if r != s {
        realizations += realization_count(s, r).map_err(|e| e.to_string())?;
    }
    expect_eq("realizations", BigInt::from(c.realizations), realizations)?;
    if r == s {
        expect_eq("symmetric members", BigInt::from(c.symmetric), symmetric_count(r).map_err(|e| e.to_string())?)?;
    } else {
        expect_eq("symmetric members", c.symmetric, 0)?;
    }
    Ok(())
}

pub fn check_marginals(n_max: u64) -> Check {
    for r in 1..n_max {
        for s in 1..=n_max - r {
            let mut sum = BigInt::zero();
            for r2 in 0..=r / 2 {
                for s2 in 0..=s / 2 {
                    sum += refined_realization_count(r, r2, s, s2).map_err(|e| e.to_string())?;
                }
            }
            expect_eq(
                &format!("marginal ({r}, {s})"),
                sum,
                realization_count(r, s).map_err(|e| e.to_string())?,
            )?;
            expect_eq(
                &format!("realization symmetry ({r}, {s})"),
                realization_count(r, s).map_err(|e| e.to_string())?,
                realization_count(s, r).map_err(|e| e.to_string())?,
            )?;
        }
    }
    Ok(())
}

pub fn check_partition(n_max: u64) -> Check {
    for n in 2..=n_max {
        for r in 1..=n / 2 {
            let s = n - r;
            let mut sum = BigInt::zero();
            for (a, b, c, d) in parameter_splits(s, r) {
                sum += derived_class_count(a, b, c, d).map_err(|e| e.to_string())?;
            }
            expect_eq(&format!("partition ({r}, {s})"), sum, a_tilde(r, s).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(())
}

/// `A = 1 + 2 z A + z^2 t A^2` holds exactly in the truncated ring.
pub fn check_a_point_identity(degree: u32) -> Check {
    let vars = [Var::Z, Var::T];
    let a = solve_a_point(degree);
    let one = TruncatedSeries::one(&vars, degree);
    let two_z = TruncatedSeries::monomial(&vars, degree, &[(Var::Z, 1)], int(2)).map_err(series_err)?;
    let z2t = TruncatedSeries::monomial(&vars, degree, &[(Var::Z, 2), (Var::T, 1)], int(1)).map_err(series_err)?;
    let rhs = one
        .add(&two_z.mul(&a).map_err(series_err)?)
        .and_then(|s| s.add(&z2t.mul(&a.pow(2))?))
        .map_err(series_err)?;
    let residual = a.sub(&rhs).map_err(series_err)?;
    expect_eq("A residual", residual.is_zero(), true)
}

/// At `t = 1`, `A` is the shifted Catalan series.
pub fn check_catalan(degree: u32) -> Check {
    let a = solve_a_point(degree).specialize(Var::T, &int(1)).map_err(series_err)?;
    let unweighted = solve_a_point_unweighted(degree);
    // z^n t^j has j <= n/2, so z^n is complete once n + n/2 <= degree.
    for n in (0..=degree).filter(|n| n + n / 2 <= degree) {
        let want = int(catalan(n as u64 + 1));
        expect_eq(&format!("A(z, 1) [z^{n}]"), a.coeff(&[(Var::Z, n)]).map_err(series_err)?, want.clone())?;
        expect_eq(&format!("A(z) [z^{n}]"), unweighted.coeff(&[(Var::Z, n)]).map_err(series_err)?, want)?;
    }
    Ok(())
}

/// `B(p, q, x, y) = B(p + (x-1) p^2, q + (y-1) q^2, 1, 1)`.
pub fn check_b_substitution(degree: u32) -> Check {
    let vars = [Var::P, Var::Q, Var::X, Var::Y];
    let lhs = b_series(degree);
    let plain = b_series_unweighted(degree).rename(&[], &vars, degree).map_err(series_err)?;
    let shift = |v: Var, m: Var| -> Result<TruncatedSeries, SeriesError> {
        let lin = TruncatedSeries::variable(&vars, degree, v)?;
        let quad_x = TruncatedSeries::monomial(&vars, degree, &[(v, 2), (m, 1)], int(1))?;
        let quad = TruncatedSeries::monomial(&vars, degree, &[(v, 2)], int(1))?;
        lin.add(&quad_x)?.sub(&quad)
    };
    let rhs = plain
        .substitute(Var::P, &shift(Var::P, Var::X).map_err(series_err)?)
        .and_then(|s| s.substitute(Var::Q, &shift(Var::Q, Var::Y)?))
        .map_err(series_err)?;
    let diff = lhs.sub(&rhs).map_err(series_err)?;
    expect_eq("B substitution residual", diff.is_zero(), true)
}

/// `[p^r q^s] log(1/(1 - B(p, q, 1, 1))) = C(2r, r) C(2s, s) / (2 (r + s))`.
pub fn check_log_coefficients(degree: u32) -> Check {
    let log = b_series_unweighted(degree).log_one_over_one_minus().map_err(series_err)?;
    for r in 0..=degree {
        for s in 0..=degree - r {
            if r + s == 0 {
                continue;
            }
            let want = BigRational::new(
                binomial(2 * r as i64, r as i64) * binomial(2 * s as i64, s as i64),
                BigInt::from(2 * (r + s)),
            );
            expect_eq(&format!("log [p^{r} q^{s}]"), log.coeff(&[(Var::P, r), (Var::Q, s)]).map_err(series_err)?, want)?;
        }
    }
    Ok(())
}

/// `(1 + 2 t d/dt log(1/(1 - B(tp, tq, 1, 1))))^2 (1 - 4tp)(1 - 4tq) = 1`,
/// plus the coefficientwise form `C(2r, r) C(2s, s)` of the unsquared side.
pub fn check_log_derivative(degree: u32) -> Check {
    let vars = [Var::T, Var::P, Var::Q];
    let b = b_series_unweighted(degree).rename(&[], &vars, degree).map_err(series_err)?;
    let tp = TruncatedSeries::monomial(&vars, degree, &[(Var::T, 1), (Var::P, 1)], int(1)).map_err(series_err)?;
    let tq = TruncatedSeries::monomial(&vars, degree, &[(Var::T, 1), (Var::Q, 1)], int(1)).map_err(series_err)?;
    let scaled = b
        .substitute(Var::P, &tp)
        .and_then(|s| s.substitute(Var::Q, &tq))
        .map_err(series_err)?;
    let log = scaled.log_one_over_one_minus().map_err(series_err)?;
    let euler = log
        .derivative(Var::T)
        .and_then(|d| d.mul_var(Var::T))
        .map_err(series_err)?;
    let one = TruncatedSeries::one(&vars, degree);
    let lhs = one.add(&euler.scalar_mul(&int(2))).map_err(series_err)?;

    for (e, c) in lhs.terms() {
        let (t, p, q) = (e[0], e[1], e[2]);
        if t != p + q {
            return Err(format!("unexpected term t^{t} p^{p} q^{q}"));
        }
        let want = int(binomial(2 * p as i64, p as i64) * binomial(2 * q as i64, q as i64));
        expect_eq(&format!("[t^{t} p^{p} q^{q}]"), c.clone(), want)?;
    }

    let four_tp = tp.scalar_mul(&int(4));
    let four_tq = tq.scalar_mul(&int(4));
    let product = lhs
        .pow(2)
        .mul(&one.sub(&four_tp).map_err(series_err)?)
        .and_then(|s| s.mul(&one.sub(&four_tq)?))
        .map_err(series_err)?;
    expect_eq("squared identity", product, one)
}

/// Every coefficient of the realization series matches the refined closed
/// form, and no term lies outside the parameter grid.
pub fn check_atilde_series(degree: u32) -> Check {
    let series = atilde_series(degree);
    for (e, _) in series.terms() {
        let (r, s, r2, s2) = (e[0], e[1], e[2], e[3]);
        if 2 * r2 > r || 2 * s2 > s {
            return Err(format!("term outside the grid: p^{r} q^{s} x^{r2} y^{s2}"));
        }
    }
    for r in 1..=degree {
        for s in 1..=degree - r {
            for r2 in 0..=r / 2 {
                for s2 in 0..=s / 2 {
                    if r + s + r2 + s2 > degree {
                        continue;
                    }
                    let got = series
                        .coeff(&[(Var::P, r), (Var::Q, s), (Var::X, r2), (Var::Y, s2)])
                        .map_err(series_err)?;
                    let want = refined_realization_count(r as u64, r2 as u64, s as u64, s2 as u64)
                        .map_err(|e| e.to_string())?;
                    expect_eq(&format!("[p^{r} q^{s} x^{r2} y^{s2}]"), got, int(want))?;
                }
            }
        }
    }
    Ok(())
}

/// Runs the whole suite, calling `report` after every check.
pub fn run(cfg: &VerifyConfig, mut report: impl FnMut(&CheckOutcome)) -> Vec<CheckOutcome> {
    let mut outcomes = Vec::new();
    let mut record = |name: String, result: Check| {
        let o = CheckOutcome { name, result };
        report(&o);
        outcomes.push(o);
    };
    let n = cfg.n_max;
    let cap = cfg.multiplicity_cap;
    let d = cfg.degree;

    record("reference table".into(), check_reference_table(n.max(10)));
    record("marginalisation of refined counts".into(), check_marginals(n.max(2)));
    record("partition by parameter splits".into(), check_partition(n.max(2)));
    for size in 2..=n {
        for r in 1..=size / 2 {
            record(format!("class size ({r}, {})", size - r), check_class_size(r, size - r, cap));
        }
    }
    for size in 4..=n {
        record(format!("D_{size} class size"), check_d_n(size, cap));
    }
    for size in 2..=n {
        for r in 1..=size / 2 {
            record(format!("classifier census ({r}, {})", size - r), check_census(r, size - r, cap));
        }
    }
    record(format!("A quadratic identity (degree {d})"), check_a_point_identity(d));
    record(format!("Catalan specialisation (degree {d})"), check_catalan(d));
    record(format!("B substitution identity (degree {d})"), check_b_substitution(d));
    record(format!("log coefficients (degree {d})"), check_log_coefficients(d));
    record(format!("log derivative identity (degree {d})"), check_log_derivative(d));
    record(format!("realization series vs refined counts (degree {d})"), check_atilde_series(d));
    outcomes
}
