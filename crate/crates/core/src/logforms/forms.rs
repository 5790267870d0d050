//! Polynomial differential forms on affine space `k^{n+1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::poly::Poly;
use crate::error::{Error, Result};

/// A `k`-form `sum_I a_I dx_I`, `I` strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Poly>,
}

impl Form {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        Form {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The 0-form `p`.
    pub fn function(p: Poly) -> Self {
        let mut f = Self::zero(p.nvars(), 0);
        f.insert(Vec::new(), p);
        f
    }

    /// `dx_i`.
    pub fn dx(nvars: usize, i: usize) -> Self {
        let mut f = Self::zero(nvars, 1);
        f.insert(vec![i], Poly::one(nvars));
        f
    }

    /// `dp` for a polynomial `p`.
    pub fn exact(p: &Poly) -> Self {
        Self::function(p.clone()).d()
    }

    fn insert(&mut self, idx: Vec<usize>, p: Poly) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&idx) {
            Some(q) => &q + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(idx, sum);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, idx: &[usize]) -> Poly {
        self.terms
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.nvars))
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(
            (self.nvars, self.degree),
            (other.nvars, other.degree),
            "form shapes differ"
        );
        let mut out = self.clone();
        for (i, p) in &other.terms {
            out.insert(i.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&BigRational::from_integer((-1).into())))
    }

    pub fn scale(&self, s: &BigRational) -> Form {
        self.mul_poly(&Poly::constant(self.nvars, s.clone()))
    }

    pub fn mul_poly(&self, p: &Poly) -> Form {
        let mut out = Self::zero(self.nvars, self.degree);
        for (i, a) in &self.terms {
            out.insert(i.clone(), a * p);
        }
        out
    }

    /// Divides every coefficient by `p`; `None` unless all divide exactly.
    pub fn div_exact(&self, p: &Poly) -> Option<Form> {
        let mut out = Self::zero(self.nvars, self.degree);
        for (i, a) in &self.terms {
            out.insert(i.clone(), a.div_exact(p)?);
        }
        Some(out)
    }

    pub fn wedge(&self, other: &Form) -> Form {
        assert_eq!(self.nvars, other.nvars, "forms on different spaces");
        let mut out = Self::zero(self.nvars, self.degree + other.degree);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                if let Some((idx, sign)) = merge(i, j) {
                    let c = a * b;
                    out.insert(idx, if sign { c } else { -&c });
                }
            }
        }
        out
    }

    /// Exterior derivative.
    pub fn d(&self) -> Form {
        let mut out = Self::zero(self.nvars, self.degree + 1);
        for (idx, a) in &self.terms {
            for v in 0..self.nvars {
                let da = a.derivative(v);
                if da.is_zero() {
                    continue;
                }
                if let Some((merged, sign)) = merge(&[v], idx) {
                    out.insert(merged, if sign { da } else { -&da });
                }
            }
        }
        out
    }
}

/// Sorted union of disjoint index lists with the sign of the shuffle
/// (`true` for `+`); `None` if they share an index.
fn merge(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, inversions.is_multiple_of(2)))
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (idx, p)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p})")?;
            for (m, i) in idx.iter().enumerate() {
                f.write_str(if m == 0 { " " } else { "^" })?;
                write!(f, "dx{i}")?;
            }
        }
        Ok(())
    }
}

/// A 1-form `sum_i a_i dx_i` whose coefficients are homogeneous of one
/// common degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedForm {
    coeffs: Vec<Poly>,
}

impl TwistedForm {
    pub fn new(coeffs: Vec<Poly>) -> Result<Self> {
        let nvars = coeffs.len();
        if nvars == 0 {
            return Err(Error::InvalidForm(
                "a form needs at least one coordinate".into(),
            ));
        }
        let mut degree = None;
        for (i, a) in coeffs.iter().enumerate() {
            if a.nvars() != nvars {
                return Err(Error::InvalidForm(format!(
                    "coefficient {i} lives in the wrong ring"
                )));
            }
            if a.is_zero() {
                continue;
            }
            let d = a
                .homogeneous_degree()
                .ok_or_else(|| Error::InvalidForm(format!("coefficient {i} is not homogeneous")))?;
            if *degree.get_or_insert(d) != d {
                return Err(Error::InvalidForm(
                    "coefficients have different degrees".into(),
                ));
            }
        }
        Ok(TwistedForm { coeffs })
    }

    pub fn from_form(f: &Form) -> Result<Self> {
        if f.degree() != 1 {
            return Err(Error::InvalidForm(format!(
                "expected a 1-form, got degree {}",
                f.degree()
            )));
        }
        Self::new((0..f.nvars()).map(|i| f.coefficient(&[i])).collect())
    }

    pub fn zero(nvars: usize) -> Self {
        TwistedForm {
            coeffs: vec![Poly::zero(nvars); nvars],
        }
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn to_form(&self) -> Form {
        let n = self.nvars();
        let mut f = Form::zero(n, 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            f.insert(vec![i], a.clone());
        }
        f
    }
}

impl fmt::Display for TwistedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_form().fmt(f)
    }
}

/// `i_R(w) = sum_i x_i a_i` for the radial field `R = sum_i x_i d/dx_i`.
pub fn contract_radial(w: &TwistedForm) -> Poly {
    let n = w.nvars();
    let mut acc = Poly::zero(n);
    for (i, a) in w.coeffs.iter().enumerate() {
        acc = &acc + &(&Poly::var(n, i) * a);
    }
    acc
}

/// Whether `w ^ dw` vanishes identically.
pub fn frobenius_check(w: &TwistedForm) -> bool {
    let f = w.to_form();
    f.wedge(&f.d()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;

    fn x(i: usize) -> Poly {
        Poly::var(3, i)
    }

    #[test]
    fn wedge_signs() {
        let (a, b) = (Form::dx(3, 0), Form::dx(3, 1));
        assert_eq!(a.wedge(&b), b.wedge(&a).scale(&rational(-1)));
        assert!(a.wedge(&a).is_zero());
        let c = Form::dx(3, 2);
        assert_eq!(a.wedge(&b).wedge(&c), c.wedge(&a).wedge(&b));
    }

    #[test]
    fn d_squared_is_zero() {
        let p = &(&x(0) * &x(1).pow(2)) + &x(2).pow(3);
        let f = Form::exact(&p);
        assert!(f.d().is_zero());
        let w = Form::dx(3, 0).mul_poly(&(&x(1) * &x(2)));
        assert!(w.d().d().is_zero());
    }

    #[test]
    fn contraction_examples() {
        let dx0 = TwistedForm::new(vec![Poly::one(3), Poly::zero(3), Poly::zero(3)]).unwrap();
        assert_eq!(contract_radial(&dx0), x(0));
        let rot = TwistedForm::new(vec![x(1), -&x(0), Poly::zero(3)]).unwrap();
        assert!(contract_radial(&rot).is_zero());
    }

    #[test]
    fn frobenius_detects_non_integrable() {
        let exact = TwistedForm::from_form(&Form::exact(&(&x(0) * &x(1)))).unwrap();
        assert!(frobenius_check(&exact));
        let w = TwistedForm::new(vec![x(2), x(0), Poly::zero(3)]).unwrap();
        assert!(!frobenius_check(&w));
    }

    #[test]
    fn twisted_form_validation() {
        assert!(TwistedForm::new(vec![x(0), x(1).pow(2), Poly::zero(3)]).is_err());
        assert!(
            TwistedForm::new(vec![&x(0) + &x(1).pow(2), Poly::zero(3), Poly::zero(3)]).is_err()
        );
        assert!(TwistedForm::new(vec![]).is_err());
    }
}
