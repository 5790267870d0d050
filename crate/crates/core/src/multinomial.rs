//! Multinomial expansion of a power of a linear form, streamed monomial by
//! monomial so that whole families of terms can be pruned before they are
//! ever stored.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{GradedClass, Monomial};

/// `linear^k`, keeping only monomials of total degree exactly `k` that the
/// ring admits and that `keep` accepts.
///
/// `keep` sees partial exponent vectors (generators not yet assigned are 0)
/// and must be monotone: once it rejects a vector it must reject every vector
/// obtained by raising exponents. Returns the class and its term count.
pub fn expand_power<F>(linear: &GradedClass, k: u32, keep: F) -> Result<(GradedClass, u64)>
where
    F: Fn(&[u8]) -> bool + Sync,
{
    if !linear.is_homogeneous_of(1) && !linear.is_zero() {
        return Err(Error::NotHomogeneous { expected: 1 });
    }
    let spec = linear.spec().clone();
    let len = spec.len();
    let mut coefs: Vec<BigRational> = vec![BigRational::zero(); len];
    for (m, c) in linear.terms() {
        let i = (0..len)
            .find(|&i| m.exponent(i) == 1)
            .expect("degree-1 monomial");
        coefs[i] = c.clone();
    }
    let active: Vec<usize> = (0..len).filter(|&i| !coefs[i].is_zero()).collect();
    if k > spec.total_cap() {
        return Ok((GradedClass::zero(&spec), 0));
    }
    if active.is_empty() {
        let out = if k == 0 {
            GradedClass::one(&spec)
        } else {
            GradedClass::zero(&spec)
        };
        let count = out.len() as u64;
        return Ok((out, count));
    }

    let factorial: Vec<BigInt> = (0..=k)
        .scan(BigInt::one(), |acc, i| {
            if i > 0 {
                *acc *= i;
            }
            Some(acc.clone())
        })
        .collect();
    let powers: Vec<Vec<BigRational>> = coefs
        .iter()
        .map(|c| {
            (0..=k)
                .scan(BigRational::one(), |acc, i| {
                    if i > 0 {
                        *acc *= c;
                    }
                    Some(acc.clone())
                })
                .collect()
        })
        .collect();

    let ctx = Ctx {
        spec: &spec,
        active: &active,
        factorial: &factorial,
        powers: &powers,
        keep: &keep,
        k,
    };
    let first = active[0];
    let top = k.min(spec.nilpotency()[first] - 1);
    let parts: Vec<BTreeMap<Monomial, BigRational>> = (0..=top)
        .into_par_iter()
        .map(|e| {
            let mut exps = vec![0u8; len];
            exps[first] = e as u8;
            let mut out = BTreeMap::new();
            if keep(&exps) {
                ctx.walk(1, k - e, &mut exps, &mut out);
            }
            out
        })
        .collect();
    let mut terms = BTreeMap::new();
    for p in parts {
        terms.extend(p);
    }
    let count = terms.len() as u64;
    Ok((GradedClass::from_terms(&spec, terms), count))
}

struct Ctx<'a, F> {
    spec: &'a crate::ring::RingSpec,
    active: &'a [usize],
    factorial: &'a [BigInt],
    powers: &'a [Vec<BigRational>],
    keep: &'a F,
    k: u32,
}

impl<F: Fn(&[u8]) -> bool + Sync> Ctx<'_, F> {
    fn walk(
        &self,
        pos: usize,
        rest: u32,
        exps: &mut [u8],
        out: &mut BTreeMap<Monomial, BigRational>,
    ) {
        let g = self.active[pos];
        let bound = self.spec.nilpotency()[g] - 1;
        if pos + 1 == self.active.len() {
            if rest > bound {
                return;
            }
            exps[g] = rest as u8;
            if (self.keep)(exps) {
                let c = self.coefficient(exps);
                if !c.is_zero() {
                    out.insert(Monomial::from_exponents(exps), c);
                }
            }
            exps[g] = 0;
            return;
        }
        for e in 0..=rest.min(bound) {
            exps[g] = e as u8;
            if !(self.keep)(exps) {
                break;
            }
            self.walk(pos + 1, rest - e, exps, out);
        }
        exps[g] = 0;
    }

    fn coefficient(&self, exps: &[u8]) -> BigRational {
        let mut denom = BigInt::one();
        let mut c = BigRational::one();
        for &g in self.active {
            let e = exps[g] as usize;
            denom *= &self.factorial[e];
            c *= &self.powers[g][e];
        }
        c * BigRational::new(self.factorial[self.k as usize].clone(), denom)
    }
}
