//! Truncated graded arithmetic: products, unit inversion and the text format.

use logdeg::ring::{GradedClass, RingSpec};

fn main() -> logdeg::Result<()> {
    // H*(P^2) with an exceptional symbol e, truncated at codimension 2
    let spec = RingSpec::new(&["h", "e"], &[3, 3], 2)?;
    let h = GradedClass::generator(&spec, "h")?;
    let e = GradedClass::generator(&spec, "e")?;
    let one = GradedClass::one(&spec);

    let c = &(&one + &h).pow(3) * &(&one - &e);
    println!("(1 + h)^3 (1 - e) = {c}");
    let inv = c.invert_unit()?;
    println!("inverse           = {inv}");
    println!("product           = {}", &c * &inv);

    let parsed = GradedClass::parse(&spec, &c.to_string())?;
    assert_eq!(parsed, c);
    println!("round trip through text ok");
    Ok(())
}
