//! Exact multivariate polynomials over `Q` in `x_0, ..., x_{k-1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::rational;

/// Exponent vectors compare lexicographically with `x_0` most significant,
/// so the last key of the map is the lex-leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable x{i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly {
            nvars,
            terms: BTreeMap::from([(e, BigRational::one())]),
        }
    }

    /// `sum_i c_i x_i`.
    pub fn linear(coeffs: &[BigRational]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; nvars];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn linear_int(coeffs: &[i64]) -> Self {
        Self::linear(&coeffs.iter().map(|&c| rational(c)).collect::<Vec<_>>())
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x_i` (meaningful for linear forms).
    pub fn linear_coefficient(&self, i: usize) -> BigRational {
        let mut e = vec![0; self.nvars];
        e[i] = 1;
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` when every term has degree `d`; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn leading(&self) -> Option<(&Vec<u32>, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect();
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `d/dx_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * rational(i64::from(e[i])));
        }
        out
    }

    /// Replaces `x_i` by `image`.
    pub fn substitute_var(&self, i: usize, image: &Poly) -> Self {
        let mut powers = vec![Self::one(self.nvars)];
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * image;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let mono = Poly {
                nvars: self.nvars,
                terms: BTreeMap::from([(rest, c.clone())]),
            };
            out = &out + &(&mono * &powers[k]);
        }
        out
    }

    /// `(q, r)` with `self = q * d + r` and no term of `r` divisible by the
    /// lex-leading monomial of `d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let (lm, lc) = d.leading().expect("division by the zero polynomial");
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut q = Self::zero(self.nvars);
        let mut r = Self::zero(self.nvars);
        let mut p = self.clone();
        while let Some((e, c)) = p.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lm).all(|(a, b)| a >= b) {
                let shift: Vec<u32> = e.iter().zip(&lm).map(|(a, b)| a - b).collect();
                let t = Poly::from_terms(self.nvars, [(shift, &c / &lc)]);
                p = &p - &(&t * d);
                q = &q + &t;
            } else {
                p.terms.remove(&e);
                r.add_term(e, c);
            }
        }
        (q, r)
    }

    /// `self / d` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Whether `self` and `other` are nonzero multiples of each other.
    pub fn is_proportional(&self, other: &Poly) -> bool {
        let (Some((e, a)), Some((f, b))) = (self.leading(), other.leading()) else {
            return false;
        };
        e == f && self.scale(b) == other.scale(a)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &-rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        Poly {
            nvars: self.nvars,
            terms,
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different rings");
        let mut out = Poly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(3, i)
    }

    #[test]
    fn arithmetic_and_derivative() {
        let p = &(&x(0) * &x(1)) + &x(2).pow(2);
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(p.derivative(0), x(1));
        assert_eq!(p.derivative(2), x(2).scale(&rational(2)));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = &x(0) + &x(1);
        let b = &x(1) - &x(2).scale(&rational(3));
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!((&prod + &x(2)).div_exact(&a), None);
        let (q, r) = (&prod + &x(2)).div_rem(&a);
        assert_eq!(&(&q * &a) + &r, &prod + &x(2));
    }

    #[test]
    fn substitution() {
        // x0 -> x1 + x2 in x0^2
        let img = &x(1) + &x(2);
        assert_eq!(x(0).pow(2).substitute_var(0, &img), img.pow(2));
    }

    #[test]
    fn proportionality() {
        let a = Poly::linear_int(&[1, 2, 0]);
        assert!(a.is_proportional(&a.scale(&rational(-3))));
        assert!(!a.is_proportional(&Poly::linear_int(&[1, 3, 0])));
        assert!(!a.is_proportional(&Poly::zero(3)));
    }

    #[test]
    fn display() {
        let p = &x(0).pow(2).scale(&rational(2)) - &x(1);
        assert_eq!(p.to_string(), "2*x0^2 + -1*x1");
        assert_eq!(Poly::zero(2).to_string(), "0");
    }
}
