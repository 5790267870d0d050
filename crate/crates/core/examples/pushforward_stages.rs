//! The blow-up tower: pushforwards of exceptional powers, stage by stage.

use logdeg::geometry::{Catalog, E1};
use logdeg::pushforward::eliminate;

fn main() -> logdeg::Result<()> {
    let n = 3;
    let cat = Catalog::new(n)?;
    let tower = cat.tower()?;
    for stage in tower.stages() {
        println!(
            "stage {} (center codim {})",
            stage.symbol(),
            stage.center_codim()
        );
        for j in stage.center_codim()..=stage.center_codim() + 1 {
            println!("  push({}^{j}) = {}", stage.symbol(), stage.push_power(j));
        }
    }
    let x = &cat.gen("h1") * &cat.gen(E1).pow(2 * n + 1);
    println!(
        "eliminate(h1 e1^{}) = {}",
        2 * n + 1,
        eliminate(&x, &tower)?
    );
    Ok(())
}
