//! The log-form oracle on explicit points and perturbations.

use logdeg::logforms::{
    base_locus_component, expand_eps, h1, h2, omega, LinearTriple, Perturbation,
};
use logdeg::oracle::{run_all, DEFAULT_SEED};

fn main() -> logdeg::Result<()> {
    let t = LinearTriple::from_ints([2, 1, -3], [&[1, 2, 0, 0], &[0, 1, -1, 0], &[3, 0, 1, 1]])?;
    println!("{t}");
    println!("omega = {}", omega(&t));
    println!("locus = {}", base_locus_component(&t));

    // a point of (B0)red moved in a non-tangent direction
    let b0 = LinearTriple::from_ints([1, 1, -2], [&[1, 0, 0]; 3])?;
    let p = Perturbation::from_ints(b0, [1, -1, 0], [&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])?;
    let e = expand_eps(&p, 3)?;
    println!("{p}");
    println!("eps^1: {}  H1: {}", e[1], h1(&p)?);
    println!("eps^2: {}  H2: {}", e[2], h2(&p)?);

    for r in run_all(DEFAULT_SEED)? {
        println!("{r}");
    }
    Ok(())
}
