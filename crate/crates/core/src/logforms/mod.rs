//! Exact oracle for logarithmic 1-forms of type (1,1,1) on `P^n`:
//! `mu(lambda, F) = F1 F2 F3 sum_i lambda_i dF_i / F_i`, its first two
//! derivatives along a direction, the base locus of `mu`, and the
//! congruence dichotomy used on the second blow-up.

pub mod forms;
pub mod locus;
pub mod perturbation;
pub mod poly;
pub mod sample;

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::rational;
pub use forms::{contract_radial, frobenius_check, Form, TwistedForm};
pub use locus::{
    b0_tangent_congruence, base_locus_component, vandermonde_dichotomy, Dichotomy, LocusTag,
};
pub use perturbation::{expand_eps, h1, h2, Perturbation};
pub use poly::Poly;

/// A point `(lambda, F1, F2, F3)` with `sum lambda_i = 0` and linear `F_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearTriple {
    lambda: [BigRational; 3],
    f: [Poly; 3],
}

impl LinearTriple {
    /// Rejects `lambda = 0`, `sum lambda_i != 0`, and any `F_i` that is zero
    /// or not linear.
    pub fn new(lambda: [BigRational; 3], f: [Poly; 3]) -> Result<Self> {
        check_lambda(&lambda)?;
        if lambda.iter().all(Zero::is_zero) {
            return Err(Error::InvalidForm("lambda is the zero vector".into()));
        }
        let nvars = f[0].nvars();
        for (i, fi) in f.iter().enumerate() {
            if fi.nvars() != nvars {
                return Err(Error::InvalidForm("F_i live in different rings".into()));
            }
            if fi.homogeneous_degree() != Some(1) {
                return Err(Error::InvalidForm(format!(
                    "F{} is not a nonzero linear form",
                    i + 1
                )));
            }
        }
        Ok(LinearTriple { lambda, f })
    }

    pub fn from_ints(lambda: [i64; 3], f: [&[i64]; 3]) -> Result<Self> {
        let len = f[0].len();
        if f.iter().any(|c| c.len() != len) {
            return Err(Error::InvalidForm("F_i live in different rings".into()));
        }
        Self::new(lambda.map(rational), f.map(Poly::linear_int))
    }

    pub fn lambda(&self) -> &[BigRational; 3] {
        &self.lambda
    }

    pub fn f(&self) -> &[Poly; 3] {
        &self.f
    }

    pub fn nvars(&self) -> usize {
        self.f[0].nvars()
    }

    /// `F = F1 F2 F3`.
    pub fn product(&self) -> Poly {
        &(&self.f[0] * &self.f[1]) * &self.f[2]
    }

    /// The simultaneous action of a permutation on `lambda` and `F`.
    pub fn permuted(&self, sigma: [usize; 3]) -> Self {
        LinearTriple {
            lambda: sigma.map(|i| self.lambda[i].clone()),
            f: sigma.map(|i| self.f[i].clone()),
        }
    }
}

impl fmt::Display for LinearTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.lambda;
        let [f1, f2, f3] = &self.f;
        write!(f, "lambda=({a}, {b}, {c}) F=({f1}; {f2}; {f3})")
    }
}

pub(crate) fn check_lambda(lambda: &[BigRational; 3]) -> Result<()> {
    let sum: BigRational = lambda.iter().sum();
    if !sum.is_zero() {
        return Err(Error::InvalidForm(format!("lambda sums to {sum}, not 0")));
    }
    Ok(())
}

/// `sum_i lambda_i (prod_{j != i} F_j) dF_i`.
pub fn omega(t: &LinearTriple) -> TwistedForm {
    let form = omega_form(t);
    TwistedForm::from_form(&form).expect("omega has homogeneous quadratic coefficients")
}

fn omega_form(t: &LinearTriple) -> Form {
    let n = t.nvars();
    let mut acc = Form::zero(n, 1);
    for i in 0..3 {
        let (j, k) = others(i);
        let coef = (&t.f[j] * &t.f[k]).scale(&t.lambda[i]);
        acc = acc.add(&Form::exact(&t.f[i]).mul_poly(&coef));
    }
    acc
}

pub(crate) fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// `F dw = dF ^ w`.
pub fn log_derivative_identity(t: &LinearTriple) -> bool {
    let w = omega_form(t);
    let f = t.product();
    w.d().mul_poly(&f) == Form::exact(&f).wedge(&w)
}

pub const S3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
];

/// `omega(sigma . t) = omega(t)` for every permutation `sigma`.
pub fn s3_orbit_invariance(t: &LinearTriple) -> bool {
    let w = omega(t);
    S3.iter().all(|&s| omega(&t.permuted(s)) == w)
}
