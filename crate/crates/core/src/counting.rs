//! Closed-form counts for Ã and D mutation classes, in exact arithmetic.
//!
//! Every public count is evaluated over the rationals and converted back to an
//! integer at the end. A non-integral result is reported as
//! [`CountError::NotIntegral`], never rounded.
//!
//! Divisor sums of the form `k | r, k | r2` treat `0` as divisible by every
//! `k`, i.e. `k` runs over the divisors of `gcd(r, r2)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{op} produced the non-integer {value}")]
    NotIntegral { op: &'static str, value: String },
}

pub type CountResult = Result<BigInt, CountError>;

fn invalid(msg: impl Into<String>) -> CountError {
    CountError::InvalidArgument(msg.into())
}

fn into_integer(op: &'static str, q: BigRational) -> CountResult {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(CountError::NotIntegral { op, value: q.to_string() })
    }
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn frac(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Euler's totient by trial-division factorisation.
pub fn euler_phi(k: u64) -> u64 {
    assert!(k >= 1, "euler_phi is defined for k >= 1");
    let mut n = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 are unbounded");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `top! / prod(parts!)`, or zero when a part is negative or the parts do not
/// add up to `top`. The zero extension bounds the inner sums of the refined
/// formulas.
pub fn multinomial(top: i64, parts: &[i64]) -> BigInt {
    if top < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != top {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    let mut placed = 0;
    for &p in parts {
        placed += p;
        acc *= binomial(placed, p);
    }
    acc
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

fn central(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64)
}

/// Number of realizations with `r` arrows anticlockwise and `s` clockwise,
/// i.e. cyclic arrangements of base-arrow blocks of total weights `(r, s)`.
pub fn realization_count(r: u64, s: u64) -> CountResult {
    if r == 0 || s == 0 {
        return Err(invalid("realization_count needs r, s >= 1"));
    }
    let mut total = BigRational::zero();
    for k in divisors(r.gcd(&s)) {
        total += frac(euler_phi(k) * central(r / k) * central(s / k), r + s);
    }
    into_integer("realization_count", total / rat(2))
}

/// `[i-range]` of the inner sum for one side: `multinomial(2i; i, 2i-R, R2,
/// R-R2-i)` is non-zero exactly for `ceil(R/2) <= i <= R - R2`.
fn side_terms(big_r: i64, big_r2: i64) -> Vec<(i64, BigInt)> {
    ((big_r + 1) / 2..=big_r - big_r2)
        .map(|i| (i, multinomial(2 * i, &[i, 2 * i - big_r, big_r2, big_r - big_r2 - i])))
        .filter(|(_, m)| !m.is_zero())
        .collect()
}

/// `sum_{(i,j) != (0,0)} (-1)^(i+j) / (den * (i+j)) * M_i * M_j` for one
/// divisor, with the per-side reduced parameters.
fn pair_sum(left: &[(i64, BigInt)], right: &[(i64, BigInt)], den: i64) -> BigRational {
    let mut acc = BigRational::zero();
    for (i, mi) in left {
        for (j, mj) in right {
            if i + j == 0 {
                continue;
            }
            let term = frac(mi * mj, den * (i + j));
            if (i + j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
    }
    acc
}

fn check_refined(r: u64, r2: u64, side: &str) -> Result<(), CountError> {
    if r == 0 {
        return Err(invalid(format!("{side} must be at least 1")));
    }
    if 2 * r2 > r {
        return Err(invalid(format!("{side}2 = {r2} exceeds {side}/2")));
    }
    Ok(())
}

/// Number of realizations with weights `(r, s)` carrying `r2` oriented
/// 3-cycles on the anticlockwise side and `s2` on the clockwise side.
pub fn refined_realization_count(r: u64, r2: u64, s: u64, s2: u64) -> CountResult {
    check_refined(r, r2, "r")?;
    check_refined(s, s2, "s")?;
    let g = r.gcd(&r2).gcd(&s).gcd(&s2);
    let mut total = BigRational::zero();
    for k in divisors(g) {
        let (rr, rr2, ss, ss2) = ((r / k) as i64, (r2 / k) as i64, (s / k) as i64, (s2 / k) as i64);
        let inner = pair_sum(&side_terms(rr, rr2), &side_terms(ss, ss2), 2);
        let weighted = inner * frac(euler_phi(k), k);
        if (rr + rr2 + ss + ss2) % 2 == 0 {
            total += weighted;
        } else {
            total -= weighted;
        }
    }
    into_integer("refined_realization_count", total)
}

/// Size of the mutation class of the non-oriented cycle with `r` arrows one
/// way and `s` the other. Arguments may be given in either order.
///
/// With one argument zero this evaluates the cyclic-arrangement count that
/// agrees with the size of the D_n class for `n >= 5` (and for `n = 3`, where
/// D_3 = A_3); at `n = 4` it does not, see [`d_n_count`].
pub fn a_tilde(r: u64, s: u64) -> CountResult {
    let (r, s) = (r.min(s), r.max(s));
    if r + s < 2 {
        return Err(invalid("a_tilde needs r + s >= 2"));
    }
    let value = if r == s {
        let mut realizations = BigRational::zero();
        for k in divisors(r) {
            let c = central(r / k);
            realizations += frac(euler_phi(k) * &c * &c, 4 * r);
        }
        (frac(central(r), 2) + realizations) / rat(2)
    } else {
        let mut total = BigRational::zero();
        // gcd(0, s) = s: every k divides 0.
        for k in divisors(r.gcd(&s)) {
            total += frac(euler_phi(k) * central(r / k) * central(s / k), r + s);
        }
        total / rat(2)
    };
    into_integer("a_tilde", value)
}

/// Number of quivers of type Ã_{2r-1} whose two realizations coincide.
pub fn symmetric_count(r: u64) -> CountResult {
    if r == 0 {
        return Err(invalid("symmetric_count needs r >= 1"));
    }
    into_integer("symmetric_count", frac(central(r), 2))
}

/// Symmetric quivers of type Ã_{2r-1} with `2 * r2` oriented 3-cycles.
pub fn symmetric_count_refined(r: u64, r2: u64) -> CountResult {
    check_refined(r, r2, "r")?;
    let m = multinomial(r as i64, &[r2 as i64, r2 as i64, (r - 2 * r2) as i64]);
    into_integer("symmetric_count_refined", pow2(r as i64 - 2 * r2 as i64 - 1) * rat(m))
}

fn pow2(e: i64) -> BigRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        rat(p)
    } else {
        frac(1, p)
    }
}

/// Number of lists of base-arrow blocks with `r + len` vertices in total.
pub fn list_count(r: u64) -> BigInt {
    central(r)
}

/// Lists as in [`list_count`] containing `r2` oriented 3-cycles.
pub fn list_count_refined(r: u64, r2: u64) -> CountResult {
    if 2 * r2 > r {
        return Err(invalid(format!("r2 = {r2} exceeds r/2")));
    }
    let m = multinomial(r as i64, &[r2 as i64, r2 as i64, (r - 2 * r2) as i64]);
    into_integer("list_count_refined", pow2((r - 2 * r2) as i64) * rat(m))
}

/// Number of quivers with parameters `(r1, r2, s1, s2)`, identified with
/// `(s1, s2, r1, r2)`.
pub fn derived_class_count(r1: u64, r2: u64, s1: u64, s2: u64) -> CountResult {
    let (r, s) = (r1 + 2 * r2, s1 + 2 * s2);
    if r == 0 || s == 0 {
        return Err(invalid("derived_class_count needs r1 + 2 r2 >= 1 and s1 + 2 s2 >= 1"));
    }
    if (r1, r2) != (s1, s2) {
        return refined_realization_count(r, r2, s, s2);
    }
    let m = multinomial(r as i64, &[r2 as i64, r2 as i64, r1 as i64]);
    let mut total = pow2(r1 as i64 - 2) * rat(m);
    for k in divisors(r.gcd(&r2)) {
        let terms = side_terms((r / k) as i64, (r2 / k) as i64);
        total += pair_sum(&terms, &terms, 4) * frac(euler_phi(k), k);
    }
    into_integer("derived_class_count", total)
}

/// Size of the D_n mutation class. The general formula fails at `n = 4`,
/// where the class has 6 members.
pub fn d_n_count(n: u64) -> CountResult {
    match n {
        0..=3 => Err(invalid(format!("D_n needs n >= 4, got {n}"))),
        4 => Ok(BigInt::from(6)),
        _ => {
            let mut total = BigRational::zero();
            for d in divisors(n) {
                total += frac(euler_phi(n / d) * central(d), 2 * n);
            }
            into_integer("d_n_count", total)
        }
    }
}

/// All unordered parameter splits `(r1, r2, s1, s2)` of the class `(r, s)`,
/// each listed once with `(r1, r2) >= (s1, s2)` when `r = s`.
pub fn parameter_splits(r: u64, s: u64) -> Vec<(u64, u64, u64, u64)> {
    let mut out = Vec::new();
    for r2 in 0..=r / 2 {
        for s2 in 0..=s / 2 {
            let split = (r - 2 * r2, r2, s - 2 * s2, s2);
            if r == s && (split.0, split.1) < (split.2, split.3) {
                continue;
            }
            out.push(split);
        }
    }
    out
}

/// Row `n` of the Ã count table: `a_tilde(r, n - r)` for `r = 1..=n/2`.
pub fn table_row(n: u64) -> Result<Vec<BigInt>, CountError> {
    (1..=n / 2).map(|r| a_tilde(r, n - r)).collect()
}

/// Text table with one row per `n = 2..=n_max`, formatted `n | c1 c2 ...`.
pub fn format_table(n_max: u64) -> Result<String, CountError> {
    let mut out = String::new();
    for n in 2..=n_max {
        let row = table_row(n)?;
        let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
        out.push_str(&format!("{n} | {}\n", cells.join(" ")));
    }
    Ok(out)
}

/// Convenience for callers that know the value is small.
pub fn to_u64(v: &BigInt) -> Option<u64> {
    if v.is_negative() {
        None
    } else {
        v.to_u64()
    }
}
