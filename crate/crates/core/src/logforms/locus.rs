//! Base locus of `mu` and the congruence dichotomy modulo `F0`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::perturbation::Perturbation;
use super::poly::Poly;
use super::LinearTriple;
use crate::error::{Error, Result};
use crate::ring::rational;

/// Which piece of the base locus a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocusTag {
    /// `F1 = F2 = F3`.
    B0,
    /// `lambda ~ (0, 1, -1)` and `F2 = F3`.
    B1,
    /// `lambda ~ (1, 0, -1)` and `F1 = F3`.
    B2,
    /// `lambda ~ (1, -1, 0)` and `F1 = F2`.
    B3,
    /// Not in the base locus.
    Outside,
}

impl fmt::Display for LocusTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LocusTag::B0 => "B0",
            LocusTag::B1 => "B1",
            LocusTag::B2 => "B2",
            LocusTag::B3 => "B3",
            LocusTag::Outside => "none",
        };
        f.write_str(s)
    }
}

/// `mu^(k)` and the pair of factors it identifies, 0-based.
pub const MU: [([i64; 3], (usize, usize)); 3] = [
    ([0, 1, -1], (1, 2)),
    ([1, 0, -1], (0, 2)),
    ([1, -1, 0], (0, 1)),
];

/// Classifies a point by proportionality of the `F_i` (projectively) and
/// of `lambda` with the `mu^(k)`. Checked in the order `B0, B1, B2, B3`.
pub fn base_locus_component(t: &LinearTriple) -> LocusTag {
    let f = t.f();
    if f[0].is_proportional(&f[1]) && f[0].is_proportional(&f[2]) {
        return LocusTag::B0;
    }
    let tags = [LocusTag::B1, LocusTag::B2, LocusTag::B3];
    for (k, (mu, (a, b))) in MU.iter().enumerate() {
        if proportional(t.lambda(), mu) && f[*a].is_proportional(&f[*b]) {
            return tags[k];
        }
    }
    LocusTag::Outside
}

fn proportional(lambda: &[BigRational; 3], mu: &[i64; 3]) -> bool {
    // lambda x mu = 0
    let m = mu.map(rational);
    (0..3).all(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        &lambda[j] * &m[k] == &lambda[k] * &m[j]
    })
}

/// Outcome of the dichotomy on `F'` modulo `F0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dichotomy {
    /// `F'_1 = F'_2 = F'_3 mod F0`.
    AllCongruent,
    /// `F'_i = F'_j mod F0` and `lambda_i + lambda_j = 0`, 1-based `i < j`.
    Pair(usize, usize),
}

impl fmt::Display for Dichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dichotomy::AllCongruent => f.write_str("all-congruent"),
            Dichotomy::Pair(i, j) => write!(f, "pair({i},{j})"),
        }
    }
}

/// Normal form modulo a nonzero linear form: the first variable with a
/// nonzero coefficient is eliminated.
#[derive(Debug, Clone)]
pub struct LinearQuotient {
    pivot: usize,
    image: Poly,
}

impl LinearQuotient {
    pub fn new(f0: &Poly) -> Result<Self> {
        if f0.homogeneous_degree() != Some(1) {
            return Err(Error::Precondition(
                "F0 must be a nonzero linear form".into(),
            ));
        }
        let n = f0.nvars();
        let pivot = (0..n)
            .find(|&i| !f0.linear_coefficient(i).is_zero())
            .expect("nonzero");
        let c = f0.linear_coefficient(pivot);
        let rest = &f0.clone() - &Poly::var(n, pivot).scale(&c);
        let image = rest.scale(&-c.recip());
        Ok(LinearQuotient { pivot, image })
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        p.substitute_var(self.pivot, &self.image)
    }

    pub fn congruent(&self, a: &Poly, b: &Poly) -> bool {
        self.reduce(&(a - b)).is_zero()
    }
}

/// Given `sum lambda_i = 0`, `lambda != 0`, `sum lambda_i F'_i = 0` and
/// `sum lambda_i F'_i^2 = 0` modulo `F0`, decides which disjunct holds.
pub fn vandermonde_dichotomy(
    f0: &Poly,
    lambda: &[BigRational; 3],
    fp: &[Poly; 3],
) -> Result<Dichotomy> {
    let q = LinearQuotient::new(f0)?;
    let sum: BigRational = lambda.iter().sum();
    if !sum.is_zero() {
        return Err(Error::Precondition("lambda does not sum to zero".into()));
    }
    if lambda.iter().all(Zero::is_zero) {
        return Err(Error::Precondition("lambda is zero".into()));
    }
    if fp.iter().any(|g| g.nvars() != f0.nvars()) {
        return Err(Error::Precondition("F' lives in a different ring".into()));
    }
    let n = f0.nvars();
    let mut first = Poly::zero(n);
    let mut second = Poly::zero(n);
    for (l, g) in lambda.iter().zip(fp) {
        first = &first + &g.scale(l);
        second = &second + &(g * g).scale(l);
    }
    if !q.reduce(&first).is_zero() {
        return Err(Error::Precondition(
            "sum lambda_i F'_i is not 0 mod F0".into(),
        ));
    }
    if !q.reduce(&second).is_zero() {
        return Err(Error::Precondition(
            "sum lambda_i F'_i^2 is not 0 mod F0".into(),
        ));
    }

    let c01 = q.congruent(&fp[0], &fp[1]);
    let c02 = q.congruent(&fp[0], &fp[2]);
    let c12 = q.congruent(&fp[1], &fp[2]);
    if c01 && c02 {
        return Ok(Dichotomy::AllCongruent);
    }
    for (hit, i, j) in [(c01, 0, 1), (c02, 0, 2), (c12, 1, 2)] {
        if hit {
            if (&lambda[i] + &lambda[j]).is_zero() {
                return Ok(Dichotomy::Pair(i + 1, j + 1));
            }
            return Err(Error::DichotomyFailure(format!(
                "F'{} = F'{} mod F0 but lambda_{} + lambda_{} != 0",
                i + 1,
                j + 1,
                i + 1,
                j + 1
            )));
        }
    }
    Err(Error::DichotomyFailure(
        "the three F'_i are pairwise incongruent mod F0".into(),
    ))
}

/// For a base point `(lambda, (F0, F0, F0))`: whether
/// `sum lambda_i F'_i = 0 mod F0`, the condition for `v` to be tangent to
/// the non-reduced structure along `(B0)_red`.
pub fn b0_tangent_congruence(p: &Perturbation) -> Result<bool> {
    let f = p.base().f();
    if f[0] != f[1] || f[0] != f[2] {
        return Err(Error::Precondition(
            "base point must have F1 = F2 = F3".into(),
        ));
    }
    let q = LinearQuotient::new(&f[0])?;
    let n = f[0].nvars();
    let mut acc = Poly::zero(n);
    for (l, g) in p.base().lambda().iter().zip(p.dir_f()) {
        acc = &acc + &g.scale(l);
    }
    Ok(q.reduce(&acc).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logforms::omega;

    fn lin(c: &[i64]) -> Poly {
        Poly::linear_int(c)
    }

    #[test]
    fn classification_examples() {
        let b0 =
            LinearTriple::from_ints([5, -2, -3], [&[1, 0, 0], &[2, 0, 0], &[-1, 0, 0]]).unwrap();
        assert_eq!(base_locus_component(&b0), LocusTag::B0);
        let b3 = LinearTriple::from_ints([1, -1, 0], [&[1, 0, 0], &[1, 0, 0], &[0, 1, 0]]).unwrap();
        assert_eq!(base_locus_component(&b3), LocusTag::B3);
        let b1 = LinearTriple::from_ints([0, 3, -3], [&[1, 0, 0], &[0, 1, 1], &[0, 2, 2]]).unwrap();
        assert_eq!(base_locus_component(&b1), LocusTag::B1);
        let none =
            LinearTriple::from_ints([1, 1, -2], [&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(base_locus_component(&none), LocusTag::Outside);
        assert!(!omega(&none).is_zero());
        // F1 = F2 but lambda not proportional to mu^(3)
        let near =
            LinearTriple::from_ints([1, 1, -2], [&[1, 0, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(base_locus_component(&near), LocusTag::Outside);
        assert!(!omega(&near).is_zero());
    }

    #[test]
    fn dichotomy_examples() {
        let f0 = lin(&[1, 0, 0]);
        let l = [1, -1, 0].map(rational);
        let fp = [lin(&[0, 1, 0]), lin(&[0, 1, 0]), lin(&[0, 0, 1])];
        assert_eq!(
            vandermonde_dichotomy(&f0, &l, &fp).unwrap(),
            Dichotomy::Pair(1, 2)
        );

        let l = [2, -1, -1].map(rational);
        let fp = [lin(&[0, 1, 0]), lin(&[0, 1, 0]), lin(&[0, 1, 0])];
        assert_eq!(
            vandermonde_dichotomy(&f0, &l, &fp).unwrap(),
            Dichotomy::AllCongruent
        );

        // congruent modulo F0 only
        let fp = [lin(&[3, 1, 0]), lin(&[-1, 1, 0]), lin(&[0, 1, 0])];
        assert_eq!(
            vandermonde_dichotomy(&f0, &l, &fp).unwrap(),
            Dichotomy::AllCongruent
        );
    }

    #[test]
    fn dichotomy_preconditions() {
        let f0 = lin(&[1, 0, 0]);
        let fp = [lin(&[0, 1, 0]), lin(&[0, 0, 1]), lin(&[0, 1, 1])];
        let err = vandermonde_dichotomy(&f0, &[1, -1, 0].map(rational), &fp).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let err = vandermonde_dichotomy(&f0, &[0, 0, 0].map(rational), &fp).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let err =
            vandermonde_dichotomy(&Poly::zero(3), &[1, -1, 0].map(rational), &fp).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn quotient_reduction() {
        let q = LinearQuotient::new(&lin(&[0, 2, -1])).unwrap();
        assert!(q.reduce(&lin(&[0, 2, -1])).is_zero());
        assert!(q.congruent(&lin(&[1, 2, 0]), &lin(&[1, 0, 1])));
        assert!(!q.congruent(&lin(&[1, 0, 0]), &lin(&[0, 0, 1])));
    }
}
