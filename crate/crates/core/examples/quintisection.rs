//! Dissecting series into residue classes mod 5 and the circulant determinant
//! of the components.
//!
//! cargo run --release --example quintisection

use qcrank::qproducts::{eta_expand, EtaQuotientSpec};
use qcrank::verifier::determinant;
use qcrank::Series;
use qcrank::verifier::sequences::c_series;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 100;
    let c = c_series(order, None)?;
    for r in 0..5 {
        let part = c.dissect(5, r)?;
        let head: Vec<String> = part.terms().iter().take(6).map(|(e, v)| format!("{v}q^{e}")).collect();
        println!("C(5n+{r}): {} ...", head.join(" + "));
    }

    let f2sq = eta_expand(&EtaQuotientSpec::of(&[(2, 2)]), order)?;
    // components keep their exponents: g_r = sum over e = r (mod 5) of [q^e] q^e
    let g: Vec<Series> =
        (0..5).map(|r| Series::from_terms(f2sq.terms().into_iter().filter(|(e, _)| e % 5 == r), order)).collect();
    let matrix: Vec<Vec<_>> = (0..5).map(|i| (0..5).map(|j| g[(i + 5 - j) % 5].clone()).collect()).collect();
    let det = determinant(&matrix)?;
    let target = eta_expand(&EtaQuotientSpec::of(&[(10, 12), (50, -2)]), order)?;
    println!("\ncirculant determinant = f10^12/f50^2 to order {order}: {}", det.agrees_to(&target, order)?);
    Ok(())
}
