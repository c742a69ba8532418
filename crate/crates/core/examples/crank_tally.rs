//! Enumerate partitions, compute cranks and tally them by parity.
//!
//! cargo run --release --example crank_tally -- 30

use std::env;

use qcrank::crank::{crank_tally, partitions};
use qcrank::verifier::sequences::c_series;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit: u32 = env::args().nth(1).map_or(Ok(25), |s| s.parse())?;

    println!("partitions of 6 with their cranks:");
    for p in partitions(6) {
        println!("  {p:<16} crank {}", p.crank());
    }

    let series = c_series(limit as i64, None)?;
    println!("\n{:>3} {:>8} {:>8} {:>8} {:>8}", "n", "c_e", "c_o", "C(n)", "series");
    for n in 0..=limit {
        let t = crank_tally(n);
        let expected = series.coeff_at(n as i64)?;
        let mark = if expected == t.c_diff.into() { "" } else { "  <-- disagrees" };
        println!("{n:>3} {:>8} {:>8} {:>8} {expected:>8}{mark}", t.c_even, t.c_odd, t.c_diff);
    }
    Ok(())
}
