//! Exact sparse arithmetic in truncated multigraded quotient algebras
//! `Q[g_1, ..., g_k] / (g_i^{m_i}, total degree > cap)`.
//!
//! Every Chow class in the crate is a [`GradedClass`] over some [`RingSpec`].
//! The grading of a monomial is the sum of its exponents (codimension).
//! Coefficients are arbitrary-precision rationals; there is no floating point
//! anywhere in this module.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest admissible total cap. Exponents are stored as `u8`.
pub const MAX_CAP: u32 = 255;

/// Products with more term pairs than this are split across the rayon pool.
const PARALLEL_MUL_THRESHOLD: usize = 1 << 16;

/// Generator names, per-generator nilpotency orders and a total-degree cap.
///
/// A monomial containing `g_i^{m_i}` is zero, and so is any monomial of total
/// degree above `total_cap`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    generators: Vec<String>,
    nilpotency: Vec<u32>,
    total_cap: u32,
}

impl RingSpec {
    pub fn new<S: AsRef<str>>(
        generators: &[S],
        nilpotency: &[u32],
        total_cap: u32,
    ) -> Result<Arc<Self>> {
        if generators.len() != nilpotency.len() {
            return Err(Error::InvalidRing(format!(
                "{} generators but {} nilpotency orders",
                generators.len(),
                nilpotency.len()
            )));
        }
        if generators.is_empty() {
            return Err(Error::InvalidRing("no generators".into()));
        }
        if total_cap == 0 || total_cap > MAX_CAP {
            return Err(Error::InvalidRing(format!(
                "total cap must lie in 1..={MAX_CAP}, got {total_cap}"
            )));
        }
        let mut names: Vec<String> = Vec::with_capacity(generators.len());
        for g in generators {
            let g = g.as_ref();
            if g.is_empty() || g.contains(|c: char| c.is_whitespace() || c == '*' || c == '^') {
                return Err(Error::InvalidRing(format!("bad generator name `{g}`")));
            }
            if names.iter().any(|n| n == g) {
                return Err(Error::DuplicateGenerator(g.to_string()));
            }
            names.push(g.to_string());
        }
        if let Some(pos) = nilpotency.iter().position(|&m| m == 0) {
            return Err(Error::InvalidRing(format!(
                "nilpotency order of `{}` must be positive",
                names[pos]
            )));
        }
        // an order above cap + 1 can never bite; clamping keeps exponents in u8
        let nilpotency = nilpotency.iter().map(|&m| m.min(total_cap + 1)).collect();
        Ok(Arc::new(RingSpec {
            generators: names,
            nilpotency,
            total_cap,
        }))
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn nilpotency(&self) -> &[u32] {
        &self.nilpotency
    }

    pub fn total_cap(&self) -> u32 {
        self.total_cap
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Whether an exponent vector survives both truncation rules.
    pub fn admits(&self, exps: &[u8]) -> bool {
        exps.len() == self.len()
            && exps
                .iter()
                .zip(&self.nilpotency)
                .all(|(&e, &m)| u32::from(e) < m)
            && exps.iter().map(|&e| u32::from(e)).sum::<u32>() <= self.total_cap
    }

    /// Builds a monomial from `(generator, exponent)` pairs.
    pub fn monomial(&self, powers: &[(&str, u32)]) -> Result<Monomial> {
        let mut exps: SmallVec<[u8; 12]> = SmallVec::from_elem(0, self.len());
        for &(name, e) in powers {
            let i = self.index_of(name)?;
            let total = u32::from(exps[i]) + e;
            exps[i] = u8::try_from(total).map_err(|_| Error::TruncatedMonomial)?;
        }
        if !self.admits(&exps) {
            return Err(Error::TruncatedMonomial);
        }
        Ok(Monomial(exps))
    }
}

/// Exponent vector over the generators of a [`RingSpec`].
///
/// Ordered lexicographically, which is the canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u8; 12]>);

impl Monomial {
    pub fn unit(len: usize) -> Self {
        Monomial(SmallVec::from_elem(0, len))
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        u32::from(self.0[i])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of two monomials, or `None` if it is truncated away.
    #[inline]
    pub fn mul_in(&self, other: &Monomial, spec: &RingSpec) -> Option<Monomial> {
        let mut out: SmallVec<[u8; 12]> = SmallVec::with_capacity(self.0.len());
        let mut total = 0u32;
        for ((&a, &b), &m) in self.0.iter().zip(&other.0).zip(&spec.nilpotency) {
            let e = u32::from(a) + u32::from(b);
            if e >= m {
                return None;
            }
            total += e;
            out.push(e as u8);
        }
        (total <= spec.total_cap).then_some(Monomial(out))
    }

    /// Same monomial with generator `i` removed (exponent set to zero).
    pub fn without(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] = 0;
        m
    }

    fn fmt_with(&self, spec: &RingSpec, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, g) in self.0.iter().zip(spec.generators()) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            write!(f, "{g}^{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// Binary operation selector for [`GradedClass::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// An element of a truncated multigraded quotient algebra.
///
/// Invariants: no stored coefficient is zero, and every stored monomial
/// satisfies the truncation rules of `spec`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    spec: Arc<RingSpec>,
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl GradedClass {
    pub fn zero(spec: &Arc<RingSpec>) -> Self {
        GradedClass {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &Arc<RingSpec>) -> Self {
        Self::constant(spec, BigRational::one())
    }

    pub fn constant(spec: &Arc<RingSpec>, c: BigRational) -> Self {
        Self::from_term(spec, Monomial::unit(spec.len()), c)
    }

    pub fn integer(spec: &Arc<RingSpec>, c: i64) -> Self {
        Self::constant(spec, rational(c))
    }

    /// The degree-one class of a single generator.
    pub fn generator(spec: &Arc<RingSpec>, name: &str) -> Result<Self> {
        let m = spec.monomial(&[(name, 1)])?;
        Ok(Self::from_term(spec, m, BigRational::one()))
    }

    /// `c * m`; a monomial violating the truncation yields zero.
    pub fn from_term(spec: &Arc<RingSpec>, m: Monomial, c: BigRational) -> Self {
        let mut out = Self::zero(spec);
        if !c.is_zero() && spec.admits(m.exponents()) {
            out.terms.insert(m, c);
        }
        out
    }

    /// Collects terms, summing repeated monomials and dropping truncated or
    /// zero ones.
    pub fn from_terms<I>(spec: &Arc<RingSpec>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut acc = BTreeMap::new();
        for (m, c) in terms {
            if spec.admits(m.exponents()) {
                accumulate(&mut acc, m, c);
            }
        }
        acc.retain(|_, c: &mut BigRational| !c.is_zero());
        GradedClass {
            spec: spec.clone(),
            terms: acc,
        }
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, BigRational> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Sub => self.checked_sub(other),
            ArithOp::Mul => self.checked_mul(other),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(GradedClass {
            spec: self.spec.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let spec = &*self.spec;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_zero() {
            return Self::zero(&self.spec);
        }
        let work = small.len().saturating_mul(large.len());
        let terms = if work < PARALLEL_MUL_THRESHOLD {
            let mut acc = FxHashMap::default();
            mul_into(&mut acc, small.terms.iter(), &large.terms, spec);
            finish(acc)
        } else {
            let left: Vec<_> = small.terms.iter().collect();
            let chunk = (left.len() / (4 * rayon::current_num_threads())).max(1);
            let partials: Vec<FxHashMap<Monomial, BigRational>> = left
                .par_chunks(chunk)
                .map(|part| {
                    let mut acc = FxHashMap::default();
                    mul_into(&mut acc, part.iter().copied(), &large.terms, spec);
                    acc
                })
                .collect();
            let mut acc: FxHashMap<Monomial, BigRational> = FxHashMap::default();
            for part in partials {
                for (m, c) in part {
                    *acc.entry(m).or_insert_with(BigRational::zero) += c;
                }
            }
            finish(acc)
        };
        GradedClass {
            spec: self.spec.clone(),
            terms,
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero(&self.spec);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect();
        GradedClass {
            spec: self.spec.clone(),
            terms,
        }
    }

    pub fn scale_int(&self, s: i64) -> Self {
        self.scale(&rational(s))
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.spec);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Sum of the terms of total degree exactly `k`; zero when out of range.
    pub fn graded_part(&self, k: i64) -> Self {
        let terms = if k < 0 {
            BTreeMap::new()
        } else {
            self.terms
                .iter()
                .filter(|(m, _)| i64::from(m.degree()) == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect()
        };
        GradedClass {
            spec: self.spec.clone(),
            terms,
        }
    }

    /// Highest total degree present, `None` for the zero class.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(k)` if every term has degree `k`; the zero class is homogeneous
    /// of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Monomial::unit(self.spec.len()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the monomial described by `(generator, exponent)` pairs.
    pub fn coefficient_of(&self, powers: &[(&str, u32)]) -> Result<BigRational> {
        Ok(self.coefficient(&self.spec.monomial(powers)?))
    }

    /// Whether generator `name` occurs in any term.
    pub fn mentions(&self, name: &str) -> bool {
        match self.spec.index_of(name) {
            Ok(i) => self.terms.keys().any(|m| m.exponent(i) > 0),
            Err(_) => false,
        }
    }

    /// Splits `self = sum_j g^j * alpha_j` with `alpha_j` free of generator `i`.
    pub fn split_by(&self, i: usize) -> BTreeMap<u32, GradedClass> {
        let mut out: BTreeMap<u32, BTreeMap<Monomial, BigRational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exponent(i))
                .or_default()
                .insert(m.without(i), c.clone());
        }
        out.into_iter()
            .map(|(j, terms)| {
                (
                    j,
                    GradedClass {
                        spec: self.spec.clone(),
                        terms,
                    },
                )
            })
            .collect()
    }

    /// Drops every term whose monomial fails `keep`.
    pub fn retain(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| keep(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        GradedClass {
            spec: self.spec.clone(),
            terms,
        }
    }

    /// Formal inverse of a class with nonzero constant term.
    ///
    /// Solved degree by degree: `b_0 = 1/a_0`, `b_k = -(1/a_0) sum_{i>=1} a_i b_{k-i}`.
    pub fn invert_unit(&self) -> Result<Self> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv0 = a0.recip();
        let cap = self.spec.total_cap as usize;
        let parts: Vec<GradedClass> = (0..=cap).map(|k| self.graded_part(k as i64)).collect();
        let mut inverse: Vec<GradedClass> = Vec::with_capacity(cap + 1);
        inverse.push(Self::constant(&self.spec, inv0.clone()));
        let minus_inv0 = -inv0;
        for k in 1..=cap {
            let mut acc = Self::zero(&self.spec);
            for i in 1..=k {
                if parts[i].is_zero() || inverse[k - i].is_zero() {
                    continue;
                }
                acc = &acc + &parts[i].mul_unchecked(&inverse[k - i]);
            }
            inverse.push(acc.scale(&minus_inv0));
        }
        let terms = inverse.into_iter().flat_map(|p| p.terms).collect();
        Ok(GradedClass {
            spec: self.spec.clone(),
            terms,
        })
    }

    /// Ring-homomorphic image under `generator -> image`, evaluated in `target`.
    pub fn substitute(
        &self,
        map: &BTreeMap<String, GradedClass>,
        target: &Arc<RingSpec>,
    ) -> Result<Self> {
        let k = self.spec.len();
        let mut images: Vec<Option<&GradedClass>> = Vec::with_capacity(k);
        for (i, g) in self.spec.generators().iter().enumerate() {
            let used = self.terms.keys().any(|m| m.exponent(i) > 0);
            match map.get(g) {
                Some(img) => {
                    if img.spec != *target {
                        return Err(Error::RingMismatch);
                    }
                    images.push(Some(img));
                }
                None if used => return Err(Error::UnmappedGenerator(g.clone())),
                None => images.push(None),
            }
        }
        let mut powers: Vec<Vec<GradedClass>> = vec![vec![Self::one(target)]; k];
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for i in 0..k {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                let img = images[i].expect("checked above");
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_unchecked(img);
                    powers[i].push(next);
                }
                term = term.mul_unchecked(&powers[i][e]);
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Renames generators inside the same ring, e.g. the swap `h2 <-> h3`.
    pub fn permute(&self, perm: &[(&str, &str)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for g in self.spec.generators() {
            let to = perm
                .iter()
                .find(|(from, _)| from == g)
                .map_or(g.as_str(), |(_, to)| to);
            map.insert(g.clone(), Self::generator(&self.spec, to)?);
        }
        self.substitute(&map, &self.spec)
    }

    /// Parses the canonical serialization produced by `Display`.
    pub fn parse(spec: &Arc<RingSpec>, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero(spec));
        }
        let mut out = Self::zero(spec);
        for term in text.split(" + ") {
            let (coef, mono) = match term.split_once(" * ") {
                Some((c, m)) => (c, Some(m)),
                None => (term, None),
            };
            let coef: BigRational = coef
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{coef}`")))?;
            let mut powers = Vec::new();
            if let Some(mono) = mono {
                for factor in mono.split('*') {
                    let (g, e) = factor
                        .split_once('^')
                        .ok_or_else(|| Error::Parse(format!("bad factor `{factor}`")))?;
                    let e: u32 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?;
                    powers.push((g, e));
                }
            }
            let m = spec.monomial(&powers)?;
            out = &out + &Self::from_term(spec, m, coef);
        }
        Ok(out)
    }
}

fn accumulate(acc: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    match acc.get_mut(&m) {
        Some(v) => *v += c,
        None => {
            acc.insert(m, c);
        }
    }
}

fn mul_into<'a>(
    acc: &mut FxHashMap<Monomial, BigRational>,
    left: impl Iterator<Item = (&'a Monomial, &'a BigRational)>,
    right: &BTreeMap<Monomial, BigRational>,
    spec: &RingSpec,
) {
    for (ma, ca) in left {
        for (mb, cb) in right {
            if let Some(m) = ma.mul_in(mb, spec) {
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
    }
}

fn finish(acc: FxHashMap<Monomial, BigRational>) -> BTreeMap<Monomial, BigRational> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl fmt::Display for GradedClass {
    /// Canonical form: terms in lexicographic exponent order, each written
    /// `c * g1^a1*...*gk^ak` (zero exponents omitted, bare `c` for the
    /// constant term), joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if !m.is_unit() {
                f.write_str(" * ")?;
                m.fmt_with(&self.spec, f)?;
            }
        }
        Ok(())
    }
}

// Operator sugar for classes known to share a ring. Panics on mismatch; use
// the `checked_*` methods when the rings are not known to agree.

impl Add for &GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: &GradedClass) -> GradedClass {
        self.checked_add(rhs)
            .expect("operands live in different rings")
    }
}

impl Sub for &GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: &GradedClass) -> GradedClass {
        self.checked_sub(rhs)
            .expect("operands live in different rings")
    }
}

impl Mul for &GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: &GradedClass) -> GradedClass {
        self.checked_mul(rhs)
            .expect("operands live in different rings")
    }
}

impl Neg for &GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        GradedClass {
            spec: self.spec.clone(),
            terms,
        }
    }
}

impl Add for GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: GradedClass) -> GradedClass {
        &self + &rhs
    }
}

impl Sub for GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: GradedClass) -> GradedClass {
        &self - &rhs
    }
}

impl Mul for GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: GradedClass) -> GradedClass {
        &self * &rhs
    }
}

impl Neg for GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_n3() -> Arc<RingSpec> {
        RingSpec::new(&["h1", "h2", "h3", "h4"], &[2, 4, 4, 4], 10).unwrap()
    }

    fn g(r: &Arc<RingSpec>, s: &str) -> GradedClass {
        GradedClass::generator(r, s).unwrap()
    }

    fn one(r: &Arc<RingSpec>) -> GradedClass {
        GradedClass::one(r)
    }

    #[test]
    fn make_ring_validation() {
        assert!(RingSpec::new(&["t"], &[5], 4).is_ok());
        assert_eq!(
            RingSpec::new(&["h1", "h1"], &[2, 2], 3).unwrap_err(),
            Error::DuplicateGenerator("h1".into())
        );
        assert!(RingSpec::new(&["a"], &[0], 3).is_err());
        assert!(RingSpec::new(&["a"], &[2], 0).is_err());
        assert!(RingSpec::new(&["a", "b"], &[2], 3).is_err());
        let r = ring_n3();
        assert!(GradedClass::zero(&r).is_zero());
        assert_eq!(one(&r).constant_term(), rational(1));
    }

    #[test]
    fn arith_examples() {
        let r = ring_n3();
        let (h1, h2, h3) = (g(&r, "h1"), g(&r, "h2"), g(&r, "h3"));
        let p = &(&one(&r) + &h2) * &(&one(&r) + &h3);
        let expected = GradedClass::parse(&r, "1 + 1 * h3^1 + 1 * h2^1 + 1 * h2^1*h3^1").unwrap();
        assert_eq!(p, expected);

        let sq = (&one(&r) + &h1).pow(2);
        assert_eq!(sq, &one(&r) + &h1.scale_int(2));

        let quart = (&h2 + &h3).pow(4);
        let expected =
            GradedClass::parse(&r, "4 * h2^1*h3^3 + 6 * h2^2*h3^2 + 4 * h2^3*h3^1").unwrap();
        assert_eq!(quart, expected);
    }

    #[test]
    fn mismatched_rings_error() {
        let r = ring_n3();
        let s = RingSpec::new(&["t"], &[5], 4).unwrap();
        let a = one(&r);
        let b = one(&s);
        assert_eq!(a.arith(&b, ArithOp::Mul).unwrap_err(), Error::RingMismatch);
        assert_eq!(a.arith(&b, ArithOp::Add).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn graded_part_examples() {
        let r = ring_n3();
        let c = GradedClass::parse(&r, "1 + 2 * h1^1 + 3 * h1^1*h2^1").unwrap();
        assert_eq!(
            c.graded_part(2),
            GradedClass::parse(&r, "3 * h1^1*h2^1").unwrap()
        );
        assert!(c.graded_part(-1).is_zero());
        assert!(c.graded_part(11).is_zero());
        let sum = (0..=10).fold(GradedClass::zero(&r), |acc, k| &acc + &c.graded_part(k));
        assert_eq!(sum, c);

        let p = (&one(&r) + &g(&r, "h2")).pow(8);
        assert_eq!(p.graded_part(3), g(&r, "h2").pow(3).scale_int(56));
    }

    #[test]
    fn invert_unit_examples() {
        let r = ring_n3();
        let h2 = g(&r, "h2");
        let inv = (&one(&r) + &h2).invert_unit().unwrap();
        assert_eq!(
            inv,
            GradedClass::parse(&r, "1 + -1 * h2^1 + 1 * h2^2 + -1 * h2^3").unwrap()
        );

        let c8 = (&one(&r) + &h2).pow(8);
        let inv8 = c8.invert_unit().unwrap();
        assert_eq!(
            inv8,
            GradedClass::parse(&r, "1 + -8 * h2^1 + 36 * h2^2 + -120 * h2^3").unwrap()
        );
        assert_eq!(&inv8 * &c8, one(&r));
        assert_eq!(h2.invert_unit().unwrap_err(), Error::NotAUnit);

        let half = GradedClass::parse(&r, "2 + 1 * h1^1").unwrap();
        assert_eq!(&half * &half.invert_unit().unwrap(), one(&r));
    }

    #[test]
    fn substitute_examples() {
        let r = ring_n3();
        let target = RingSpec::new(&["h1", "h"], &[2, 4], 10).unwrap();
        let h = GradedClass::generator(&target, "h").unwrap();
        let map: BTreeMap<String, GradedClass> = [
            (
                "h1".to_string(),
                GradedClass::generator(&target, "h1").unwrap(),
            ),
            ("h2".to_string(), h.clone()),
            ("h3".to_string(), h.clone()),
            ("h4".to_string(), h.clone()),
        ]
        .into_iter()
        .collect();
        let s = &(&g(&r, "h2") + &g(&r, "h3")) + &g(&r, "h4");
        assert_eq!(s.substitute(&map, &target).unwrap(), h.scale_int(3));

        let e = GradedClass::parse(&r, "1 * h2^2*h4^1").unwrap();
        assert_eq!(
            e.permute(&[("h2", "h3"), ("h3", "h2")]).unwrap(),
            GradedClass::parse(&r, "1 * h3^2*h4^1").unwrap()
        );

        let partial: BTreeMap<String, GradedClass> =
            [("h2".to_string(), h.clone())].into_iter().collect();
        assert_eq!(
            g(&r, "h3").substitute(&partial, &target).unwrap_err(),
            Error::UnmappedGenerator("h3".into())
        );
    }

    #[test]
    fn coefficient_examples() {
        let r = ring_n3();
        let point = r
            .monomial(&[("h1", 1), ("h2", 3), ("h3", 3), ("h4", 3)])
            .unwrap();
        let pt = GradedClass::from_term(&r, point.clone(), rational(1));
        assert_eq!(pt.coefficient(&point), rational(1));
        let c = &one(&r) + &g(&r, "h2");
        assert_eq!(c.coefficient_of(&[("h3", 1)]).unwrap(), rational(0));
        let s = &(&g(&r, "h2") + &g(&r, "h3")) + &g(&r, "h4");
        let top = &s.pow(9) * &g(&r, "h1");
        assert_eq!(top.coefficient(&point), rational(1680));
    }

    #[test]
    fn truncation_is_sound() {
        let r = ring_n3();
        let x = &(&one(&r) + &g(&r, "h1")) + &g(&r, "h2").scale_int(3);
        let p = x.pow(12);
        for (m, _) in p.terms() {
            assert!(r.admits(m.exponents()));
        }
        assert!(r.monomial(&[("h1", 2)]).is_err());
    }

    #[test]
    fn display_is_canonical() {
        let r = ring_n3();
        let c = GradedClass::parse(&r, "1 * h2^1 + -1/2 * h1^1 + 3").unwrap();
        assert_eq!(c.to_string(), "3 + 1 * h2^1 + -1/2 * h1^1");
        assert_eq!(GradedClass::zero(&r).to_string(), "0");
    }

    #[test]
    fn split_by_reassembles() {
        let r = ring_n3();
        let c = (&(&one(&r) + &g(&r, "h2")) + &g(&r, "h3")).pow(4);
        let i = r.index_of("h2").unwrap();
        let h2 = g(&r, "h2");
        let back = c
            .split_by(i)
            .into_iter()
            .fold(GradedClass::zero(&r), |acc, (j, a)| {
                &acc + &(&a * &h2.pow(j))
            });
        assert_eq!(back, c);
    }
}
