//! Sparse multivariate polynomials over exact rationals.
//!
//! A [`Poly`] in ambient dimension `n` lives in the `2n` coordinates
//! `(x_1..x_n; u_1..u_n)` of a cotangent chart.  Terms are kept in a
//! `BTreeMap` keyed by [`Monomial`] in graded-lexicographic order, so
//! iteration order, equality and rendering are all canonical.
//!
//! Invariants:
//! - every stored monomial has exponent vector length `2n`
//! - no stored zero coefficients (enforced on every operation)

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{falling, Rational};

/// Exponent vector of length `2n`: positions `0..n` hold the `x`
/// exponents, positions `n..2n` the `u` exponents (0-based variable
/// indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn constant(n: usize) -> Self {
        Monomial { exps: vec![0; 2 * n] }
    }

    /// `x_i` (0-based `i < n`).
    pub fn x(n: usize, i: usize) -> Self {
        assert!(i < n, "x index out of range");
        let mut exps = vec![0; 2 * n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// `u_i` (0-based `i < n`).
    pub fn u(n: usize, i: usize) -> Self {
        assert!(i < n, "u index out of range");
        let mut exps = vec![0; 2 * n];
        exps[n + i] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        assert!(exps.len() % 2 == 0, "exponent vector must have even length");
        Monomial { exps }
    }

    pub fn dim(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn x_exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn u_exp(&self, i: usize) -> u32 {
        self.exps[self.dim() + i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Total degree in the first `d` of the `u` variables.
    pub fn u_degree_leading(&self, d: usize) -> u32 {
        let n = self.dim();
        self.exps[n..n + d].iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded-lexicographic: total degree first, ties broken
    /// lexicographically on the exponent vector (x before u).
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let n = self.dim();
        let mut first = true;
        for i in 0..2 * n {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let (name, idx) = if i < n { ("x", i + 1) } else { ("u", i - n + 1) };
            if e == 1 {
                write!(f, "{name}{idx}")?;
            } else {
                write!(f, "{name}{idx}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in `(x_1..x_n; u_1..u_n)` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, value: Rational) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(Monomial::constant(n), value);
        p
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, Rational::one())
    }

    /// The coordinate polynomial `x_i` (0-based).
    pub fn x(n: usize, i: usize) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(Monomial::x(n, i), Rational::one());
        p
    }

    /// The coordinate polynomial `u_i` (0-based).
    pub fn u(n: usize, i: usize) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(Monomial::u(n, i), Rational::one());
        p
    }

    pub fn monomial(mono: Monomial, coeff: Rational) -> Self {
        let n = mono.dim();
        let mut p = Poly::zero(n);
        p.add_term(mono, coeff);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest total degree among stored terms; `None` for the zero
    /// polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Adds `coeff · mono`, dropping the entry if it cancels.
    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        assert_eq!(mono.dim(), self.n, "dimension mismatch");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * factor.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = Poly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Partial derivative in `x_i` (0-based).
    pub fn deriv_x(&self, i: usize) -> Poly {
        self.deriv_at(i)
    }

    /// Partial derivative in `u_i` (0-based).
    pub fn deriv_u(&self, i: usize) -> Poly {
        self.deriv_at(self.n + i)
    }

    fn deriv_at(&self, pos: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exps[pos];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[pos] = e - 1;
            out.add_term(Monomial::from_exponents(exps), c.clone() * Rational::from_integer(e.into()));
        }
        out
    }

    /// Substitutes `u_1 = … = u_d = 0`: drops every term with a positive
    /// exponent on one of the first `d` u-variables.
    pub fn substitute_u_zero(&self, d: usize) -> Poly {
        assert!(d <= self.n);
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.u_degree_leading(d) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `u ↦ −u` for every u-variable: flips the sign of terms
    /// of odd total u-degree.
    pub fn negate_u(&self) -> Poly {
        let n = self.n;
        Poly {
            n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let udeg = m.u_degree_leading(n);
                    let c = if udeg % 2 == 1 { -c.clone() } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// True when every term is free of the first `d` x-variables and the
    /// first `d` u-variables.
    pub fn is_transverse(&self, d: usize) -> bool {
        self.terms.keys().all(|m| {
            (0..d).all(|i| m.x_exp(i) == 0) && m.u_degree_leading(d) == 0
        })
    }

    /// Triangle-inequality majorant `Σ |c| · r^{deg}` of `sup` over the
    /// closed polydisc of radius `r`.
    pub fn majorant(&self, radius: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut pow = Rational::one();
            for _ in 0..m.total_degree() {
                pow *= radius.clone();
            }
            acc += c.abs() * pow;
        }
        acc
    }

    /// Componentwise max of x-exponents over all terms.
    pub fn max_x_exps(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for m in self.terms.keys() {
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = (*slot).max(m.x_exp(i));
            }
        }
        out
    }

    /// Componentwise max of u-exponents over all terms.
    pub fn max_u_exps(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for m in self.terms.keys() {
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = (*slot).max(m.u_exp(i));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Terms in graded-lex descending order, `p/q` coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            write_term(f, m, c, first)?;
            first = false;
        }
        Ok(())
    }
}

/// Renders one `coeff · mono` factor group, shared by `Poly` and symbol
/// display.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    mono: &Monomial,
    coeff: &Rational,
    first: bool,
) -> fmt::Result {
    write_term_tau(f, mono, coeff, 0, first)
}

pub(crate) fn write_term_tau(
    f: &mut fmt::Formatter<'_>,
    mono: &Monomial,
    coeff: &Rational,
    tau_order: i64,
    first: bool,
) -> fmt::Result {
    let negative = coeff.is_negative();
    if first {
        if negative {
            write!(f, "-")?;
        }
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let abs = coeff.abs();
    let mut wrote_factor = false;
    if !abs.is_one() || (mono.is_constant() && tau_order == 0) {
        write!(f, "{}", crate::rational::format_rational(&abs))?;
        wrote_factor = true;
    }
    if !mono.is_constant() {
        if wrote_factor {
            write!(f, "*")?;
        }
        write!(f, "{mono}")?;
        wrote_factor = true;
    }
    if tau_order != 0 {
        if wrote_factor {
            write!(f, "*")?;
        }
        if tau_order == 1 {
            write!(f, "tau")?;
        } else {
            write!(f, "tau^{tau_order}")?;
        }
    }
    Ok(())
}

/// Canonical Poisson bracket `Σ_i (∂_{u_i} f · ∂_{x_i} g − ∂_{x_i} f · ∂_{u_i} g)`.
pub fn poisson_bracket(f: &Poly, g: &Poly) -> Poly {
    assert_eq!(f.dim(), g.dim(), "dimension mismatch");
    let n = f.dim();
    let mut out = Poly::zero(n);
    for i in 0..n {
        out = out.add(&f.deriv_u(i).mul(&g.deriv_x(i)));
        out = out.sub(&f.deriv_x(i).mul(&g.deriv_u(i)));
    }
    out
}

/// Coefficient of the multi-derivative `(1/α!) ∂_u^α(term_a) · ∂_x^α(term_b)`
/// for single monomial terms, as used by the star composition: returns the
/// rational factor `Π falling(a_u_i, α_i) · falling(b_x_i, α_i) / α_i!`.
pub(crate) fn star_alpha_factor(mono_a: &Monomial, mono_b: &Monomial, alpha: &[u32]) -> Rational {
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for (i, &ai) in alpha.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        num *= falling(mono_a.u_exp(i), ai);
        num *= falling(mono_b.x_exp(i), ai);
        den *= crate::rational::factorial(ai as i64);
    }
    Rational::new(num, den)
}

/// Iterates over all multi-indices `0 ≤ α ≤ bounds` componentwise.
pub(crate) struct MultiIndexIter {
    bounds: Vec<u32>,
    current: Option<Vec<u32>>,
}

impl MultiIndexIter {
    pub(crate) fn new(bounds: Vec<u32>) -> Self {
        let current = Some(vec![0; bounds.len()]);
        MultiIndexIter { bounds, current }
    }
}

impl Iterator for MultiIndexIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        // odometer increment
        let cur = self.current.as_mut().unwrap();
        let mut pos = 0;
        loop {
            if pos == cur.len() {
                self.current = None;
                break;
            }
            if cur[pos] < self.bounds[pos] {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn graded_lex_order() {
        let n = 2;
        let one = Monomial::constant(n);
        let x1 = Monomial::x(n, 0);
        let u1 = Monomial::u(n, 0);
        let x1sq = x1.mul(&x1);
        assert!(one < x1);
        assert!(x1 < u1); // same degree, x before u lexicographically
        assert!(u1 < x1sq); // degree dominates
    }

    #[test]
    fn poisson_canonical_pair() {
        let n = 2;
        let f = Poly::u(n, 0);
        let g = Poly::x(n, 0);
        assert_eq!(poisson_bracket(&f, &g), Poly::one(n));
    }

    #[test]
    fn poisson_antisymmetry() {
        let n = 2;
        let f = Poly::u(n, 0).mul(&Poly::x(n, 1)).add(&Poly::x(n, 0));
        assert!(poisson_bracket(&f, &f).is_zero());
    }

    #[test]
    fn poisson_product_example() {
        // {u1·u2, x1·x2} = u2·x2 + u1·x1
        let n = 2;
        let f = Poly::u(n, 0).mul(&Poly::u(n, 1));
        let g = Poly::x(n, 0).mul(&Poly::x(n, 1));
        let expected = Poly::u(n, 1)
            .mul(&Poly::x(n, 1))
            .add(&Poly::u(n, 0).mul(&Poly::x(n, 0)));
        assert_eq!(poisson_bracket(&f, &g), expected);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let n = 1;
        let p = Poly::x(n, 0).sub(&Poly::x(n, 0));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn majorant_of_monomial() {
        // |3/2 · x1^2| on the polydisc of radius 2 majorized by 3/2 · 4 = 6
        let p = Poly::monomial(
            Monomial::from_exponents(vec![2, 0]),
            ratio(3, 2),
        );
        assert_eq!(p.majorant(&int(2)), int(6));
    }

    #[test]
    fn substitute_and_negate() {
        let n = 2;
        // x1 + u1·x2 + u2
        let p = Poly::x(n, 0)
            .add(&Poly::u(n, 0).mul(&Poly::x(n, 1)))
            .add(&Poly::u(n, 1));
        let q = p.substitute_u_zero(1);
        assert_eq!(q, Poly::x(n, 0).add(&Poly::u(n, 1)));
        let r = p.negate_u();
        assert_eq!(
            r,
            Poly::x(n, 0)
                .sub(&Poly::u(n, 0).mul(&Poly::x(n, 1)))
                .sub(&Poly::u(n, 1))
        );
    }

    #[test]
    fn display_descending() {
        let n = 1;
        let p = Poly::x(n, 0).mul(&Poly::x(n, 0)).add(&Poly::constant(n, ratio(-1, 2)));
        assert_eq!(p.to_string(), "x1^2 - 1/2");
    }

    #[test]
    fn multi_index_iteration() {
        let all: Vec<_> = MultiIndexIter::new(vec![1, 2]).collect();
        assert_eq!(all.len(), 6);
        assert!(all.contains(&vec![1, 2]));
        assert!(all.contains(&vec![0, 0]));
    }
}
