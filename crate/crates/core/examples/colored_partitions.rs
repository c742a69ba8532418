//! The three colored-partition readings of a(n) = [q^n] f2^2/f1^3.
//!
//! cargo run --example colored_partitions

use qcrank::crank::{a_oracle, colored_objects, Interpretation};
use qcrank::verifier::sequences::a_series;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for interpretation in Interpretation::ALL {
        let objects = colored_objects(3, interpretation)?;
        println!("{} ({} objects of size 3):", interpretation.name(), objects.len());
        println!("  {}", objects.join(" "));
    }

    let a = a_series(20, None)?;
    println!("\n{:>3} {:>10} {:>10} {:>10} {:>10}", "n", "series", "odd3", "nu2", "first2");
    for n in 0..=20u32 {
        let counts = Interpretation::ALL.map(|i| a_oracle(n, i));
        println!("{n:>3} {:>10} {:>10} {:>10} {:>10}", a.coeff_at(n as i64)?, counts[0], counts[1], counts[2]);
    }
    Ok(())
}
