//! Degrees for a range of n, compared with the known values.
//!
//! `cargo run --release --example degree_table -- 3 6`

use logdeg::degree::{table, DEFAULT_MAX_N};

fn main() -> logdeg::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>());
    let from = args.next().and_then(Result::ok).unwrap_or(3);
    let to = args.next().and_then(Result::ok).unwrap_or(5);
    for r in table(from, to, DEFAULT_MAX_N)? {
        let check = match r.matches_known() {
            Some(true) => "matches",
            Some(false) => "MISMATCH",
            None => "no reference",
        };
        println!(
            "n={:>2} degree={} total={} terms={} {:.2}s {check}",
            r.n,
            r.degree,
            r.pre_division_total,
            r.term_count,
            r.elapsed.as_secs_f64()
        );
    }
    Ok(())
}
