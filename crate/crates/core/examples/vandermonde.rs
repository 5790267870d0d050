//! The congruence dichotomy on hand-built and random instances.

use logdeg::logforms::sample::{instance_rng, vandermonde_instance};
use logdeg::logforms::{vandermonde_dichotomy, Poly};
use logdeg::ring::rational;

fn main() -> logdeg::Result<()> {
    let f0 = Poly::linear_int(&[1, 0, 0]);
    let lambda = [1, -1, 0].map(rational);
    let fp = [&[2, 1, 0][..], &[5, 1, 0], &[0, 0, 1]].map(Poly::linear_int);
    println!(
        "pair instance: {}",
        vandermonde_dichotomy(&f0, &lambda, &fp)?
    );

    let same = [&[0, 1, 1][..], &[3, 1, 1], &[-1, 1, 1]].map(Poly::linear_int);
    println!(
        "congruent instance: {}",
        vandermonde_dichotomy(&f0, &[1, 2, -3].map(rational), &same)?
    );

    for i in 0..5 {
        let (f0, l, fp, expected) = vandermonde_instance(&mut instance_rng(7, i), 4);
        let got = vandermonde_dichotomy(&f0, &l.map(rational), &fp)?;
        println!("#{i} F0={f0} lambda={l:?} -> {got} (built {expected})");
    }
    Ok(())
}
