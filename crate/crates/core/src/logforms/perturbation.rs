//! First- and second-order behaviour of `mu` at a base point `x` along a
//! direction `v`: `mu(x + eps v) = eps H1 + eps^2 H2 mod eps^3`.
//!
//! Two independent routes. [`expand_eps`] expands the product form of `mu`
//! at `x + eps v` as a polynomial in `eps`. [`h1`] and [`h2`] evaluate the
//! closed forms
//!
//! ```text
//! H1 = F (sum lambda'_i dF_i/F_i + d(sum lambda_i F'_i/F_i))
//! H2 = (sum F'_i/F_i) H1 + F d(sum (lambda'_i F'_i F_i - lambda_i F'_i^2 / 2) / F_i^2)
//! ```
//!
//! in a fraction layer whose denominators are monomials in `F1, F2, F3`,
//! then clear the denominators exactly.

use std::fmt;

use num_rational::BigRational;

use super::forms::{Form, TwistedForm};
use super::poly::Poly;
use super::{check_lambda, omega, others, LinearTriple};
use crate::error::{Error, Result};
use crate::ring::rational;

/// A base point together with a tangent direction `(lambda', F')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perturbation {
    base: LinearTriple,
    dir_lambda: [BigRational; 3],
    dir_f: [Poly; 3],
}

impl Perturbation {
    /// `sum lambda'_i` must vanish and each `F'_i` must be linear or zero.
    pub fn new(base: LinearTriple, dir_lambda: [BigRational; 3], dir_f: [Poly; 3]) -> Result<Self> {
        check_lambda(&dir_lambda)?;
        for (i, g) in dir_f.iter().enumerate() {
            if g.nvars() != base.nvars() {
                return Err(Error::InvalidForm(
                    "direction lives in a different ring".into(),
                ));
            }
            if !g.is_zero() && g.homogeneous_degree() != Some(1) {
                return Err(Error::InvalidForm(format!("F'{} is not linear", i + 1)));
            }
        }
        Ok(Perturbation {
            base,
            dir_lambda,
            dir_f,
        })
    }

    pub fn from_ints(base: LinearTriple, dir_lambda: [i64; 3], dir_f: [&[i64]; 3]) -> Result<Self> {
        if dir_f.iter().any(|c| c.len() != base.nvars()) {
            return Err(Error::InvalidForm(
                "direction lives in a different ring".into(),
            ));
        }
        Self::new(base, dir_lambda.map(rational), dir_f.map(Poly::linear_int))
    }

    pub fn base(&self) -> &LinearTriple {
        &self.base
    }

    pub fn dir_lambda(&self) -> &[BigRational; 3] {
        &self.dir_lambda
    }

    pub fn dir_f(&self) -> &[Poly; 3] {
        &self.dir_f
    }

    fn check_base_locus(&self) -> Result<()> {
        if omega(&self.base).is_zero() {
            Ok(())
        } else {
            Err(Error::NotInBaseLocus)
        }
    }
}

impl fmt::Display for Perturbation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.dir_lambda;
        let [f1, f2, f3] = &self.dir_f;
        write!(
            f,
            "x: {} v: lambda'=({a}, {b}, {c}) F'=({f1}; {f2}; {f3})",
            self.base
        )
    }
}

/// Coefficients of `eps^0 .. eps^{order-1}` of `mu(x + eps v)`.
#[allow(clippy::needless_range_loop)]
pub fn expand_eps(p: &Perturbation, order: usize) -> Result<Vec<TwistedForm>> {
    p.check_base_locus()?;
    let n = p.base.nvars();
    let t = &p.base;
    let mut out = vec![Form::zero(n, 1); order];
    for i in 0..3 {
        let (j, k) = others(i);
        // (lambda_i + eps lambda'_i) (F_j + eps F'_j) (F_k + eps F'_k)
        let lam = [
            Poly::constant(n, t.lambda()[i].clone()),
            Poly::constant(n, p.dir_lambda[i].clone()),
        ];
        let fj = [t.f()[j].clone(), p.dir_f[j].clone()];
        let fk = [t.f()[k].clone(), p.dir_f[k].clone()];
        let df = [Form::exact(&t.f()[i]), Form::exact(&p.dir_f[i])];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for e in 0..2 {
                        let deg = a + b + c + e;
                        if deg >= order {
                            continue;
                        }
                        let coef = &(&lam[a] * &fj[b]) * &fk[c];
                        out[deg] = out[deg].add(&df[e].mul_poly(&coef));
                    }
                }
            }
        }
    }
    out.iter().map(TwistedForm::from_form).collect()
}

/// `num / (F1^e1 F2^e2 F3^e3)` with `num` a 0-form or a 1-form.
#[derive(Debug, Clone)]
struct Frac {
    num: Form,
    den: [u32; 3],
}

impl Frac {
    fn over(num: Form, den: [u32; 3]) -> Self {
        Frac { num, den }
    }

    fn raised(&self, to: [u32; 3], f: &[Poly; 3]) -> Form {
        let mut num = self.num.clone();
        for i in 0..3 {
            for _ in self.den[i]..to[i] {
                num = num.mul_poly(&f[i]);
            }
        }
        num
    }

    fn add(&self, other: &Frac, f: &[Poly; 3]) -> Frac {
        let to = [0, 1, 2].map(|i| self.den[i].max(other.den[i]));
        Frac {
            num: self.raised(to, f).add(&other.raised(to, f)),
            den: to,
        }
    }

    /// Multiplication by `F1^m1 F2^m2 F3^m3`.
    fn times_factors(&self, m: [u32; 3], f: &[Poly; 3]) -> Frac {
        let mut num = self.num.clone();
        let mut den = self.den;
        for i in 0..3 {
            let cancel = m[i].min(den[i]);
            den[i] -= cancel;
            for _ in cancel..m[i] {
                num = num.mul_poly(&f[i]);
            }
        }
        Frac { num, den }
    }

    fn wedge(&self, other: &Frac) -> Frac {
        let den = [0, 1, 2].map(|i| self.den[i] + other.den[i]);
        Frac {
            num: self.num.wedge(&other.num),
            den,
        }
    }

    /// `d(p / D) = (dp - p sum_i e_i dF_i / F_i) / D` for a 0-form `p`.
    fn d(&self, f: &[Poly; 3]) -> Frac {
        assert_eq!(
            self.num.degree(),
            0,
            "d of a fraction is only taken on functions"
        );
        let mut acc = Frac::over(self.num.d(), self.den);
        for i in 0..3 {
            if self.den[i] == 0 {
                continue;
            }
            let mut den = self.den;
            den[i] += 1;
            let term = self
                .num
                .wedge(&Form::exact(&f[i]))
                .scale(&rational(-i64::from(self.den[i])));
            acc = acc.add(&Frac::over(term, den), f);
        }
        acc
    }

    /// Divides out the denominator factor by factor.
    fn clear(&self, f: &[Poly; 3]) -> Result<Form> {
        let mut num = self.num.clone();
        for (i, (fi, &k)) in f.iter().zip(&self.den).enumerate() {
            for _ in 0..k {
                num = num.div_exact(fi).ok_or_else(|| {
                    Error::NonClearing(format!("numerator is not divisible by F{}", i + 1))
                })?;
            }
        }
        Ok(num)
    }
}

fn unit(i: usize) -> [u32; 3] {
    let mut e = [0; 3];
    e[i] = 1;
    e
}

fn frac_h1(p: &Perturbation) -> Frac {
    let t = &p.base;
    let f = t.f();
    let n = t.nvars();
    let mut g1 = Frac::over(Form::zero(n, 1), [0; 3]);
    for i in 0..3 {
        let log_term = Frac::over(Form::exact(&f[i]).scale(&p.dir_lambda[i]), unit(i));
        let ratio = Frac::over(Form::function(p.dir_f[i].scale(&t.lambda()[i])), unit(i));
        g1 = g1.add(&log_term, f).add(&ratio.d(f), f);
    }
    g1.times_factors([1, 1, 1], f)
}

/// The closed form of the first-order term.
pub fn h1(p: &Perturbation) -> Result<TwistedForm> {
    p.check_base_locus()?;
    TwistedForm::from_form(&frac_h1(p).clear(p.base.f())?)
}

/// The closed form of the second-order term.
pub fn h2(p: &Perturbation) -> Result<TwistedForm> {
    p.check_base_locus()?;
    let t = &p.base;
    let f = t.f();
    let n = t.nvars();
    let first = Frac::over(frac_h1(p).clear(f)?, [0; 3]);
    let half = BigRational::new(1.into(), 2.into());

    let mut s1 = Frac::over(Form::function(Poly::zero(n)), [0; 3]);
    let mut inner = Frac::over(Form::function(Poly::zero(n)), [0; 3]);
    for i in 0..3 {
        let fp = &p.dir_f[i];
        s1 = s1.add(&Frac::over(Form::function(fp.clone()), unit(i)), f);
        let num =
            &(fp * &f[i]).scale(&p.dir_lambda[i]) - &(fp * fp).scale(&(&t.lambda()[i] * &half));
        let mut den = [0; 3];
        den[i] = 2;
        inner = inner.add(&Frac::over(Form::function(num), den), f);
    }
    let total = s1
        .wedge(&first)
        .add(&inner.d(f).times_factors([1, 1, 1], f), f);
    TwistedForm::from_form(&total.clear(f)?)
}

/// Whether the `eps`-coefficient computed both ways agrees, and likewise the
/// `eps^2`-coefficient.
pub fn closed_forms_agree(p: &Perturbation) -> Result<(bool, bool)> {
    let e = expand_eps(p, 3)?;
    Ok((e[1] == h1(p)?, e[2] == h2(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(3, i)
    }

    fn b0(lambda: [i64; 3]) -> LinearTriple {
        LinearTriple::from_ints(lambda, [&[1, 0, 0], &[1, 0, 0], &[1, 0, 0]]).unwrap()
    }

    #[test]
    fn worked_example() {
        let p = Perturbation::from_ints(
            b0([1, -1, 0]),
            [0, 0, 0],
            [&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]],
        )
        .unwrap();
        let e = expand_eps(&p, 3).unwrap();
        assert!(e[0].is_zero());
        let expected =
            TwistedForm::new(vec![-&(&x(0) * &x(1)), x(0).pow(2), Poly::zero(3)]).unwrap();
        assert_eq!(e[1], expected);
        assert!(e[2].is_zero());
        assert_eq!(h1(&p).unwrap(), expected);
        assert!(h2(&p).unwrap().is_zero());
    }

    #[test]
    fn tangent_direction_has_no_first_order_term() {
        let p = Perturbation::from_ints(
            b0([2, -1, -1]),
            [1, 2, -3],
            [&[2, 0, 0], &[-1, 0, 0], &[5, 0, 0]],
        )
        .unwrap();
        assert!(expand_eps(&p, 3).unwrap()[1].is_zero());
        assert!(h1(&p).unwrap().is_zero());
    }

    #[test]
    fn closed_forms_match_expansion_off_b0() {
        // a point of B3 with a generic direction
        let base =
            LinearTriple::from_ints([1, -1, 0], [&[1, 1, 0], &[2, 2, 0], &[0, 1, 3]]).unwrap();
        let p = Perturbation::from_ints(base, [1, 1, -2], [&[0, 1, 1], &[1, 0, -1], &[2, 1, 0]])
            .unwrap();
        assert_eq!(closed_forms_agree(&p).unwrap(), (true, true));
    }

    #[test]
    fn rejects_points_off_the_base_locus() {
        let base =
            LinearTriple::from_ints([1, 1, -2], [&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let p =
            Perturbation::from_ints(base, [0, 0, 0], [&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]).unwrap();
        assert_eq!(expand_eps(&p, 3).unwrap_err(), Error::NotInBaseLocus);
        assert_eq!(h1(&p).unwrap_err(), Error::NotInBaseLocus);
        assert_eq!(h2(&p).unwrap_err(), Error::NotInBaseLocus);
    }

    #[test]
    fn direction_validation() {
        assert!(Perturbation::from_ints(b0([1, -1, 0]), [1, 0, 0], [&[0, 0, 0]; 3]).is_err());
    }
}
