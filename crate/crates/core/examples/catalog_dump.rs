//! Every named class of the geometric catalog at a given n.
//!
//! `cargo run --example catalog_dump -- 4`

use logdeg::geometry::Catalog;

fn main() -> logdeg::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let cat = Catalog::new(n)?;
    println!("symbol ring: {:?}", cat.ring().generators());
    for (name, value) in cat.dump() {
        println!("{name} = {value}");
    }
    Ok(())
}
