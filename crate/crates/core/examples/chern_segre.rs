//! Chern and Segre classes: tangent bundles, twists and Whitney quotients.

use logdeg::charclass::{tangent_projective, twist, whitney_quotient, BundleClass};
use logdeg::ring::{GradedClass, RingSpec};

fn main() -> logdeg::Result<()> {
    let spec = RingSpec::new(&["h"], &[4], 3)?;
    let h = GradedClass::generator(&spec, "h")?;

    let tp3 = tangent_projective(&spec, 3, "h")?;
    println!("c(T P^3)     = {}", tp3.chern());
    println!("s(T P^3)     = {}", tp3.segre());

    let o1 = BundleClass::line(&h)?;
    let twisted = twist(&tp3, &(-&h))?;
    println!("c(T P^3(-1)) = {}", twisted.chern());

    // O(1)^4 / O = T P^3 by the Euler sequence
    let o1_4 = o1.direct_sum(&o1)?.direct_sum(&o1)?.direct_sum(&o1)?;
    let q = whitney_quotient(&o1_4, &BundleClass::trivial(&spec, 1))?;
    assert_eq!(q.chern(), tp3.chern());
    println!("Euler sequence quotient matches c(T P^3)");
    Ok(())
}
