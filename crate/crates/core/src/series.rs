//! Multivariate formal power series with rational coefficients, truncated at a
//! total degree.
//!
//! A coefficient of total degree `d <= max_degree` is exact as long as every
//! input was exact up to `max_degree`; ring operations, substitution of series
//! without constant term and the logarithm all keep that property. Two
//! operations are special: [`TruncatedSeries::derivative`] lowers the
//! truncation by one, and [`TruncatedSeries::specialize`] sums over a variable
//! so only the coefficients whose full fibre lies below the truncation are
//! exact.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::counting::euler_phi;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Z,
    T,
    P,
    Q,
    X,
    Y,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::Z => "z",
            Var::T => "t",
            Var::P => "p",
            Var::Q => "q",
            Var::X => "x",
            Var::Y => "y",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("variable sets differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<Var>, Vec<Var>),
    #[error("truncation degrees differ: {0} vs {1}")]
    TruncationMismatch(u32, u32),
    #[error("variable {0} is not in {1:?}")]
    UnknownVariable(Var, Vec<Var>),
    #[error("series has a non-zero constant term")]
    NonZeroConstant,
}

type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: Vec<Var>,
    max_degree: u32,
    coeffs: BTreeMap<Exponents, BigRational>,
}

fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl TruncatedSeries {
    pub fn zero(vars: &[Var], max_degree: u32) -> Self {
        TruncatedSeries {
            vars: vars.to_vec(),
            max_degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[Var], max_degree: u32, c: BigRational) -> Self {
        let mut s = Self::zero(vars, max_degree);
        s.add_term(vec![0; vars.len()], c);
        s
    }

    pub fn one(vars: &[Var], max_degree: u32) -> Self {
        Self::constant(vars, max_degree, BigRational::one())
    }

    pub fn variable(vars: &[Var], max_degree: u32, v: Var) -> Result<Self, SeriesError> {
        Self::monomial(vars, max_degree, &[(v, 1)], BigRational::one())
    }

    /// `c * prod(v^e)`; dropped if above the truncation.
    pub fn monomial(
        vars: &[Var],
        max_degree: u32,
        powers: &[(Var, u32)],
        c: BigRational,
    ) -> Result<Self, SeriesError> {
        let mut s = Self::zero(vars, max_degree);
        let e = s.exponents_of(powers)?;
        s.add_term(e, c);
        Ok(s)
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn index_of(&self, v: Var) -> Result<usize, SeriesError> {
        self.vars
            .iter()
            .position(|&w| w == v)
            .ok_or_else(|| SeriesError::UnknownVariable(v, self.vars.clone()))
    }

    fn exponents_of(&self, powers: &[(Var, u32)]) -> Result<Exponents, SeriesError> {
        let mut e = vec![0; self.vars.len()];
        for &(v, k) in powers {
            e[self.index_of(v)?] += k;
        }
        Ok(e)
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if degree(&e) > self.max_degree || c.is_zero() {
            return;
        }
        match self.coeffs.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Coefficient at an exponent tuple given in variable order.
    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `prod(v^k)`; variables not mentioned have exponent 0.
    pub fn coeff(&self, powers: &[(Var, u32)]) -> Result<BigRational, SeriesError> {
        Ok(self.coefficient(&self.exponents_of(powers)?))
    }

    /// Non-zero terms in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![0; self.vars.len()])
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.vars != other.vars {
            return Err(SeriesError::VariableMismatch(self.vars.clone(), other.vars.clone()));
        }
        if self.max_degree != other.max_degree {
            return Err(SeriesError::TruncationMismatch(self.max_degree, other.max_degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(&-BigRational::one())
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(&self.vars, self.max_degree);
        if c.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.vars, self.max_degree);
        let right: Vec<(&Exponents, u32, &BigRational)> =
            other.coeffs.iter().map(|(e, c)| (e, degree(e), c)).collect();
        for (ea, ca) in &self.coeffs {
            let da = degree(ea);
            for &(eb, db, cb) in &right {
                if da + db > self.max_degree {
                    continue;
                }
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars, self.max_degree);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Drops every term above `max_degree` and lowers the truncation.
    pub fn truncate(&self, max_degree: u32) -> Self {
        let max_degree = max_degree.min(self.max_degree);
        let mut out = Self::zero(&self.vars, max_degree);
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Same series viewed in a larger ring, or with renamed variables.
    ///
    /// `mapping` sends each variable of `self` to a variable of `target`.
    pub fn rename(&self, mapping: &[(Var, Var)], target: &[Var], max_degree: u32) -> Result<Self, SeriesError> {
        let mut out = Self::zero(target, max_degree);
        let mut slots = Vec::with_capacity(self.vars.len());
        for &v in &self.vars {
            let to = mapping
                .iter()
                .find(|(from, _)| *from == v)
                .map(|&(_, to)| to)
                .unwrap_or(v);
            slots.push(out.index_of(to)?);
        }
        for (e, c) in &self.coeffs {
            let mut ne = vec![0; target.len()];
            for (k, &slot) in e.iter().zip(&slots) {
                ne[slot] += k;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Replaces `var` by the series `g`, which must live in the same ring and
    /// have no constant term.
    pub fn substitute(&self, var: Var, g: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(g)?;
        if !g.constant_term().is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        let idx = self.index_of(var)?;
        let top = self.coeffs.keys().map(|e| e[idx]).max().unwrap_or(0);
        let mut powers = vec![Self::one(&self.vars, self.max_degree)];
        for k in 1..=top {
            let next = powers[k as usize - 1].mul(g)?;
            powers.push(next);
        }
        let mut out = Self::zero(&self.vars, self.max_degree);
        for (e, c) in &self.coeffs {
            let mut rest = e.clone();
            let k = std::mem::replace(&mut rest[idx], 0);
            let rest_deg = degree(&rest);
            for (pe, pc) in &powers[k as usize].coeffs {
                if rest_deg + degree(pe) > self.max_degree {
                    continue;
                }
                let ne: Exponents = rest.iter().zip(pe).map(|(a, b)| a + b).collect();
                out.add_term(ne, c * pc);
            }
        }
        Ok(out)
    }

    /// Replaces every variable `v` by `v^k`.
    pub fn scale_exponents(&self, k: u32) -> Self {
        let mut out = Self::zero(&self.vars, self.max_degree);
        for (e, c) in &self.coeffs {
            out.add_term(e.iter().map(|x| x * k).collect(), c.clone());
        }
        out
    }

    /// Sets `var` to the constant `value`. A coefficient of the result is
    /// exact only if every term it collects was below the truncation.
    pub fn specialize(&self, var: Var, value: &BigRational) -> Result<Self, SeriesError> {
        let idx = self.index_of(var)?;
        let mut out = Self::zero(&self.vars, self.max_degree);
        for (e, c) in &self.coeffs {
            let mut ne = e.clone();
            let k = std::mem::replace(&mut ne[idx], 0);
            let factor = num_traits::pow(value.clone(), k as usize);
            out.add_term(ne, c * factor);
        }
        Ok(out)
    }

    /// Formal partial derivative; the result is truncated one degree lower.
    pub fn derivative(&self, var: Var) -> Result<Self, SeriesError> {
        let idx = self.index_of(var)?;
        let mut out = Self::zero(&self.vars, self.max_degree.saturating_sub(1));
        for (e, c) in &self.coeffs {
            if e[idx] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[idx] -= 1;
            out.add_term(ne, c * BigInt::from(e[idx]));
        }
        Ok(out)
    }

    /// Multiplies by `var`; the result is truncated one degree higher.
    pub fn mul_var(&self, var: Var) -> Result<Self, SeriesError> {
        let idx = self.index_of(var)?;
        let mut out = Self::zero(&self.vars, self.max_degree + 1);
        for (e, c) in &self.coeffs {
            let mut ne = e.clone();
            ne[idx] += 1;
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// `log(1 / (1 - b)) = sum_{m >= 1} b^m / m`.
    pub fn log_one_over_one_minus(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        let mut out = Self::zero(&self.vars, self.max_degree);
        let mut power = self.clone();
        for m in 1..=self.max_degree {
            if power.is_zero() {
                break;
            }
            out = out.add(&power.scalar_mul(&BigRational::new(BigInt::one(), BigInt::from(m))))?;
            power = power.mul(self)?;
        }
        Ok(out)
    }

    /// `1 / (1 - b) = sum_{m >= 0} b^m`.
    pub fn one_over_one_minus(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        let mut out = Self::one(&self.vars, self.max_degree);
        let mut power = self.clone();
        while !power.is_zero() {
            out = out.add(&power)?;
            power = power.mul(self)?;
        }
        Ok(out)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O(deg {})", self.max_degree + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Cycle construction: `sum_{k >= 1} phi(k)/k * log(1/(1 - b(v^k)))`. The
/// sum is finite because `b` has no constant term.
pub fn cycle_construction(b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let log = b.log_one_over_one_minus()?;
    let mut out = TruncatedSeries::zero(b.vars(), b.max_degree());
    for k in 1..=b.max_degree().max(1) {
        let weight = BigRational::new(BigInt::from(euler_phi(k as u64)), BigInt::from(k));
        out = out.add(&log.scale_exponents(k).scalar_mul(&weight))?;
    }
    Ok(out)
}

/// Iterates `A = 1 + 2 z A + z^2 t A^2` from `A = 1` to its fixpoint.
/// `z` marks vertices other than the root, `t` oriented 3-cycles.
pub fn solve_a_point(max_degree: u32) -> TruncatedSeries {
    let vars = [Var::Z, Var::T];
    let one = TruncatedSeries::one(&vars, max_degree);
    let two_z = TruncatedSeries::monomial(&vars, max_degree, &[(Var::Z, 1)], BigRational::from_integer(2.into()))
        .expect("z in ring");
    let z2t = TruncatedSeries::monomial(&vars, max_degree, &[(Var::Z, 2), (Var::T, 1)], BigRational::one())
        .expect("z, t in ring");
    let mut a = one.clone();
    loop {
        let next = one
            .add(&two_z.mul(&a).unwrap())
            .and_then(|s| s.add(&z2t.mul(&a.mul(&a).unwrap()).unwrap()))
            .expect("same ring");
        if next == a {
            return a;
        }
        a = next;
    }
}

/// Same recursion without the `t` marker: `A = 1 + 2 z A + z^2 A^2`.
pub fn solve_a_point_unweighted(max_degree: u32) -> TruncatedSeries {
    let vars = [Var::Z];
    let one = TruncatedSeries::one(&vars, max_degree);
    let two_z =
        TruncatedSeries::monomial(&vars, max_degree, &[(Var::Z, 1)], BigRational::from_integer(2.into())).unwrap();
    let z2 = TruncatedSeries::monomial(&vars, max_degree, &[(Var::Z, 2)], BigRational::one()).unwrap();
    let mut a = one.clone();
    loop {
        let next = one
            .add(&two_z.mul(&a).unwrap())
            .and_then(|s| s.add(&z2.mul(&a.mul(&a).unwrap()).unwrap()))
            .unwrap();
        if next == a {
            return a;
        }
        a = next;
    }
}

const PQXY: [Var; 4] = [Var::P, Var::Q, Var::X, Var::Y];

/// Generating function of base-arrow blocks:
/// `B(p, q, x, y) = p + p^2 x A(p, x) + q + q^2 y A(q, y)`.
pub fn b_series(max_degree: u32) -> TruncatedSeries {
    let a = solve_a_point(max_degree);
    let half = |v: Var, m: Var| {
        let a_v = a.rename(&[(Var::Z, v), (Var::T, m)], &PQXY, max_degree).unwrap();
        let lead = TruncatedSeries::monomial(&PQXY, max_degree, &[(v, 2), (m, 1)], BigRational::one()).unwrap();
        TruncatedSeries::variable(&PQXY, max_degree, v)
            .unwrap()
            .add(&lead.mul(&a_v).unwrap())
            .unwrap()
    };
    half(Var::P, Var::X).add(&half(Var::Q, Var::Y)).unwrap()
}

/// `B(p, q, 1, 1)` in the ring `[p, q]`, built from the unweighted recursion.
pub fn b_series_unweighted(max_degree: u32) -> TruncatedSeries {
    let vars = [Var::P, Var::Q];
    let a = solve_a_point_unweighted(max_degree);
    let half = |v: Var| {
        let a_v = a.rename(&[(Var::Z, v)], &vars, max_degree).unwrap();
        let lead = TruncatedSeries::monomial(&vars, max_degree, &[(v, 2)], BigRational::one()).unwrap();
        TruncatedSeries::variable(&vars, max_degree, v)
            .unwrap()
            .add(&lead.mul(&a_v).unwrap())
            .unwrap()
    };
    half(Var::P).add(&half(Var::Q)).unwrap()
}

/// Generating function of realizations,
/// `sum_k phi(k)/k log(1/(1 - B(p^k, q^k, x^k, y^k)))`; the coefficient of
/// `p^r q^s x^r2 y^s2` counts realizations with those parameters.
pub fn atilde_series(max_degree: u32) -> TruncatedSeries {
    cycle_construction(&b_series(max_degree)).expect("B has no constant term")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn z_ring(deg: u32) -> (TruncatedSeries, TruncatedSeries) {
        let one = TruncatedSeries::one(&[Var::Z], deg);
        let z = TruncatedSeries::variable(&[Var::Z], deg, Var::Z).unwrap();
        (one, z)
    }

    #[test]
    fn ring_operations() {
        let (one, z) = z_ring(6);
        let prod = one.add(&z).unwrap().mul(&one.sub(&z).unwrap()).unwrap();
        assert_eq!(prod, one.sub(&z.pow(2)).unwrap());
        let zero = TruncatedSeries::zero(&[Var::Z], 6);
        assert_eq!(z.add(&zero).unwrap(), z);
        assert!(z.pow(7).is_zero());
        assert_eq!(z.pow(6).coeff(&[(Var::Z, 6)]).unwrap(), q(1));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = TruncatedSeries::one(&[Var::Z], 4);
        let b = TruncatedSeries::one(&[Var::P], 4);
        let c = TruncatedSeries::one(&[Var::Z], 5);
        assert!(matches!(a.add(&b), Err(SeriesError::VariableMismatch(..))));
        assert!(matches!(a.mul(&c), Err(SeriesError::TruncationMismatch(4, 5))));
        assert!(matches!(a.coeff(&[(Var::Q, 1)]), Err(SeriesError::UnknownVariable(..))));
    }

    #[test]
    fn log_of_z() {
        let (one, z) = z_ring(8);
        let log = z.log_one_over_one_minus().unwrap();
        for m in 1..=8u32 {
            assert_eq!(log.coeff(&[(Var::Z, m)]).unwrap(), BigRational::new(1.into(), m.into()));
        }
        assert_eq!(one.log_one_over_one_minus().unwrap_err(), SeriesError::NonZeroConstant);
    }

    #[test]
    fn substitute_square() {
        let (one, z) = z_ring(10);
        let geometric = z.one_over_one_minus().unwrap();
        let squared = geometric.substitute(Var::Z, &z.pow(2)).unwrap();
        for n in 0..=10u32 {
            let expected = if n % 2 == 0 { q(1) } else { q(0) };
            assert_eq!(squared.coeff(&[(Var::Z, n)]).unwrap(), expected);
        }
        assert_eq!(geometric.scale_exponents(2), squared);
        assert!(geometric.substitute(Var::Z, &one).is_err());
    }

    #[test]
    fn derivative_and_shift() {
        let (_, z) = z_ring(5);
        let d = z.pow(3).derivative(Var::Z).unwrap();
        assert_eq!(d.max_degree(), 4);
        assert_eq!(d.coeff(&[(Var::Z, 2)]).unwrap(), q(3));
        let back = d.mul_var(Var::Z).unwrap();
        assert_eq!(back.max_degree(), 5);
        assert_eq!(back.coeff(&[(Var::Z, 3)]).unwrap(), q(3));
    }

    #[test]
    fn a_point_leading_coefficients() {
        let a = solve_a_point(8);
        assert_eq!(a.coeff(&[]).unwrap(), q(1));
        assert_eq!(a.coeff(&[(Var::Z, 1)]).unwrap(), q(2));
        // three vertices: four oriented paths and one oriented triangle
        assert_eq!(a.coeff(&[(Var::Z, 2)]).unwrap(), q(4));
        assert_eq!(a.coeff(&[(Var::Z, 2), (Var::T, 1)]).unwrap(), q(1));
    }

    #[test]
    fn unweighted_a_point_is_shifted_catalan() {
        let a = solve_a_point_unweighted(6);
        let expected = [1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(a.coeff(&[(Var::Z, n as u32)]).unwrap(), q(c));
        }
    }

    #[test]
    fn b_series_low_terms() {
        let b = b_series(6);
        assert_eq!(b.coeff(&[(Var::P, 1)]).unwrap(), q(1));
        assert_eq!(b.coeff(&[(Var::P, 2), (Var::X, 1)]).unwrap(), q(1));
        assert_eq!(b.coeff(&[(Var::P, 3), (Var::X, 1)]).unwrap(), q(2));
        assert_eq!(b.coeff(&[(Var::P, 1), (Var::Q, 1)]).unwrap(), q(0));
        assert_eq!(b.constant_term(), q(0));
    }

    #[test]
    fn display() {
        let (one, z) = z_ring(3);
        assert_eq!(one.add(&z.pow(2)).unwrap().to_string(), "1 + 1*z^2");
        assert_eq!(TruncatedSeries::zero(&[Var::Z], 3).to_string(), "0");
    }
}
