//! Seeded random instances with small integer coefficients.
//!
//! Instance `i` of a suite run with seed `s` is drawn from its own ChaCha
//! stream, so any single instance can be regenerated from `(s, i)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::locus::{Dichotomy, LinearQuotient, LocusTag, MU};
use super::perturbation::Perturbation;
use super::poly::Poly;
use super::LinearTriple;
use crate::ring::rational;

const COEF: i64 = 3;

/// The generator for instance `index` of a run with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn small(rng: &mut impl Rng) -> i64 {
    rng.gen_range(-COEF..=COEF)
}

fn nonzero(rng: &mut impl Rng) -> i64 {
    loop {
        let c = small(rng);
        if c != 0 {
            return c;
        }
    }
}

/// A linear form in `nvars` variables, possibly zero.
pub fn linear(rng: &mut impl Rng, nvars: usize) -> Poly {
    let c: Vec<i64> = (0..nvars).map(|_| small(rng)).collect();
    Poly::linear_int(&c)
}

pub fn nonzero_linear(rng: &mut impl Rng, nvars: usize) -> Poly {
    loop {
        let p = linear(rng, nvars);
        if !p.is_zero() {
            return p;
        }
    }
}

/// `lambda` with zero sum, possibly zero.
pub fn lambda_any(rng: &mut impl Rng) -> [i64; 3] {
    let (a, b) = (small(rng), small(rng));
    [a, b, -a - b]
}

pub fn lambda_nonzero(rng: &mut impl Rng) -> [i64; 3] {
    loop {
        let l = lambda_any(rng);
        if l != [0, 0, 0] {
            return l;
        }
    }
}

fn triple(lambda: [i64; 3], f: [Poly; 3]) -> LinearTriple {
    LinearTriple::new(lambda.map(rational), f).expect("sampled triple is valid")
}

/// A generic point: independent `lambda` and `F_i`.
pub fn generic_triple(rng: &mut impl Rng, nvars: usize) -> LinearTriple {
    let l = lambda_nonzero(rng);
    triple(l, [0; 3].map(|_| nonzero_linear(rng, nvars)))
}

/// A point on the requested piece of the base locus, with `F_i` only
/// projectively equal where they must agree.
pub fn base_locus_triple(rng: &mut impl Rng, nvars: usize, tag: LocusTag) -> LinearTriple {
    match tag {
        LocusTag::B0 => {
            let f0 = nonzero_linear(rng, nvars);
            let l = lambda_nonzero(rng);
            triple(l, [0; 3].map(|_| f0.scale(&rational(nonzero(rng)))))
        }
        LocusTag::B1 | LocusTag::B2 | LocusTag::B3 => {
            let k = match tag {
                LocusTag::B1 => 0,
                LocusTag::B2 => 1,
                _ => 2,
            };
            let (mu, (a, b)) = MU[k];
            let s = nonzero(rng);
            let mut f = [0; 3].map(|_| nonzero_linear(rng, nvars));
            f[b] = f[a].scale(&rational(nonzero(rng)));
            triple(mu.map(|m| m * s), f)
        }
        LocusTag::Outside => generic_triple(rng, nvars),
    }
}

/// Points chosen to stress the classifier: generic points, base-locus
/// points, and near misses (one coincidence without the matching `lambda`,
/// or the matching `lambda` without the coincidence).
pub fn adversarial_triple(rng: &mut impl Rng, nvars: usize) -> LinearTriple {
    let tags = [
        LocusTag::B0,
        LocusTag::B1,
        LocusTag::B2,
        LocusTag::B3,
        LocusTag::Outside,
    ];
    match rng.gen_range(0..4) {
        0 => generic_triple(rng, nvars),
        1 => {
            let tag = *tags.choose(rng).unwrap();
            base_locus_triple(rng, nvars, tag)
        }
        2 => {
            let (_, (a, b)) = MU[rng.gen_range(0..3)];
            let mut f = [0; 3].map(|_| nonzero_linear(rng, nvars));
            f[b] = f[a].scale(&rational(nonzero(rng)));
            triple(lambda_nonzero(rng), f)
        }
        _ => {
            let (mu, _) = MU[rng.gen_range(0..3)];
            let s = nonzero(rng);
            triple(
                mu.map(|m| m * s),
                [0; 3].map(|_| nonzero_linear(rng, nvars)),
            )
        }
    }
}

/// A base-locus point (any piece) with an arbitrary direction.
pub fn base_locus_perturbation(rng: &mut impl Rng, nvars: usize) -> Perturbation {
    let tags = [LocusTag::B0, LocusTag::B1, LocusTag::B2, LocusTag::B3];
    let tag = *tags.choose(rng).unwrap();
    let base = base_locus_triple(rng, nvars, tag);
    direction(rng, base)
}

fn direction(rng: &mut impl Rng, base: LinearTriple) -> Perturbation {
    let nvars = base.nvars();
    let l = lambda_any(rng);
    let f = [0; 3].map(|_| {
        if rng.gen_bool(0.15) {
            Poly::zero(nvars)
        } else {
            linear(rng, nvars)
        }
    });
    Perturbation::new(base, l.map(rational), f).expect("sampled direction is valid")
}

/// A point `(lambda, (F0, F0, F0))` with a direction; when `tangent` is set,
/// the direction satisfies `sum lambda_i F'_i = 0 mod F0`.
pub fn b0_perturbation(rng: &mut impl Rng, nvars: usize, tangent: bool) -> Perturbation {
    let f0 = nonzero_linear(rng, nvars);
    let l = lambda_nonzero(rng);
    let base = triple(l, [f0.clone(), f0.clone(), f0.clone()]);
    let mut p = direction(rng, base);
    if tangent {
        let pivot = (0..3).find(|&i| l[i] != 0).expect("lambda is nonzero");
        let mut f = p.dir_f().clone();
        // solve lambda_pivot F'_pivot = -(sum of the others) + a F0
        let mut rest = f0.scale(&rational(small(rng)));
        for i in (0..3).filter(|&i| i != pivot) {
            rest = &rest - &f[i].scale(&rational(l[i]));
        }
        f[pivot] = rest.scale(&rational(l[pivot]).recip());
        p = Perturbation::new(p.base().clone(), p.dir_lambda().clone(), f)
            .expect("valid direction");
    }
    p
}

/// A valid dichotomy instance built by construction, with the expected
/// answer.
pub fn vandermonde_instance(
    rng: &mut impl Rng,
    nvars: usize,
) -> (Poly, [i64; 3], [Poly; 3], Dichotomy) {
    let f0 = nonzero_linear(rng, nvars);
    let g = linear(rng, nvars);
    let q = LinearQuotient::new(&f0).expect("nonzero");
    if rng.gen_bool(0.5) {
        let l = lambda_nonzero(rng);
        let fp = [0; 3].map(|_| shifted(rng, &g, &f0));
        (f0.clone(), l, fp, Dichotomy::AllCongruent)
    } else {
        let (mu, (a, b)) = MU[rng.gen_range(0..3)];
        let s = nonzero(rng);
        let c = 3 - a - b;
        let mut fp = [Poly::zero(nvars), Poly::zero(nvars), Poly::zero(nvars)];
        fp[a] = shifted(rng, &g, &f0);
        fp[b] = shifted(rng, &g, &f0);
        // the third factor is arbitrary but not congruent to the pair
        loop {
            let h = linear(rng, nvars);
            if !q.congruent(&h, &g) {
                fp[c] = h;
                break;
            }
        }
        (
            f0.clone(),
            mu.map(|m| m * s),
            fp,
            Dichotomy::Pair(a + 1, b + 1),
        )
    }
}

fn shifted(rng: &mut impl Rng, g: &Poly, f0: &Poly) -> Poly {
    g + &f0.scale(&rational(small(rng)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logforms::{base_locus_component, omega};

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<i64> = (0..5).map(|_| small(&mut instance_rng(7, 3))).collect();
        let b: Vec<i64> = (0..5).map(|_| small(&mut instance_rng(7, 3))).collect();
        assert_eq!(a, b);
        let t1 = generic_triple(&mut instance_rng(1, 0), 4);
        let t2 = generic_triple(&mut instance_rng(1, 0), 4);
        assert_eq!(t1, t2);
    }

    #[test]
    fn base_locus_samples_classify() {
        let mut rng = instance_rng(11, 0);
        for tag in [LocusTag::B0, LocusTag::B1, LocusTag::B2, LocusTag::B3] {
            for _ in 0..10 {
                let t = base_locus_triple(&mut rng, 4, tag);
                assert!(omega(&t).is_zero());
                let got = base_locus_component(&t);
                assert!(got == tag || got == LocusTag::B0, "{tag} sampled as {got}");
            }
        }
    }

    #[test]
    fn tangent_samples_satisfy_congruence() {
        let mut rng = instance_rng(5, 0);
        for _ in 0..10 {
            let p = b0_perturbation(&mut rng, 4, true);
            assert!(crate::logforms::b0_tangent_congruence(&p).unwrap());
        }
    }
}
