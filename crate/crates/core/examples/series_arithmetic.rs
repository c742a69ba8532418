//! Truncated series arithmetic: products, quotients, dissection and residue rings.
//!
//! cargo run --example series_arithmetic

use num_bigint::BigInt;
use qcrank::qproducts::euler_product;
use qcrank::{Series, SeriesError};

fn show(label: &str, s: &Series) {
    let terms: Vec<String> = s.terms().iter().map(|(e, c)| format!("{c}q^{e}")).collect();
    let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
    println!("{label:>14} = {body} + O(q^{})", s.order() + 1);
}

fn main() -> Result<(), SeriesError> {
    let order = 12;
    let f1 = euler_product(1, order);
    show("f1", &f1);

    // 1/f1 is the partition generating function
    let p = f1.invert()?;
    show("1/f1", &p);
    show("f1 * (1/f1)", &f1.mul(&p)?);

    // a pole: q^-2 / (1 - q)
    let geometric = Series::polynomial(&[1, -1], order).invert()?.shift(-2);
    show("q^-2/(1-q)", &geometric);

    // p(5n+4) is divisible by 5
    let order = 60;
    let p = euler_product(1, order).invert()?;
    let fifth = p.dissect(5, 4)?;
    show("p(5n+4)", &fifth.truncate(24));
    show("p(5n+4) mod 5", &fifth.reduce_mod(&BigInt::from(5))?);
    Ok(())
}
