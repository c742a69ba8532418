//! a(n) mod 16 lives on the generalized pentagonal numbers; its value there is
//! periodic in the index.
//!
//! cargo run --release --example mod16_characterization

use qcrank::qproducts::{pentagonal, FigurateKind, FigurateTable};
use qcrank::verifier::sequences::a_series;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 5_000;
    let a = a_series(order, Some(16))?;
    let table = FigurateTable::up_to(FigurateKind::GeneralizedPentagonal, order as u64);

    let stray = a.terms().into_iter().filter(|(e, _)| !table.contains(*e as u64)).count();
    println!("nonzero a(n) mod 16 off the pentagonal numbers below {order}: {stray}");

    println!("\n  k   w_k   a(w_k) mod 16");
    for k in 0..32u64 {
        let w = pentagonal(k) as i64;
        println!("{k:>3} {w:>5} {:>8}", a.coeff_at(w)?);
    }

    let periodic = (0..table.values().len() as u64 - 16)
        .all(|k| a.coeff_at(pentagonal(k) as i64).ok() == a.coeff_at(pentagonal(k + 16) as i64).ok());
    println!("\nperiod 16 in k below {order}: {periodic}");
    Ok(())
}
