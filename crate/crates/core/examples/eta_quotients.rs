//! Parsing and expanding eta quotients, including q-shifts and negative valuations.
//!
//! cargo run --example eta_quotients -- "1:-3,2:2" 20

use std::env;

use qcrank::qproducts::{eta_expand, theta, EtaQuotientSpec, ThetaKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = env::args().skip(1);
    let spec: EtaQuotientSpec = args.next().as_deref().unwrap_or("1:-3,2:2").parse()?;
    let order: i64 = args.next().map_or(Ok(15), |s| s.parse())?;

    let series = eta_expand(&spec, order)?;
    println!("{spec} to order {order}:");
    for (e, c) in series.terms() {
        println!("  q^{e:<3} {c}");
    }

    // every named theta series equals its product form
    for kind in ThetaKind::ALL {
        let product = eta_expand(&kind.product_form(), 200)?;
        let agrees = theta(kind, 200).agrees_to(&product, 200)?;
        println!("{:>18} = {:<22} {}", kind.name(), kind.product_form().to_string(), if agrees { "ok" } else { "MISMATCH" });
    }

    // a malformed spec reports where it went wrong
    if let Err(e) = "1:2,,5:1".parse::<EtaQuotientSpec>() {
        println!("\"1:2,,5:1\": {e}");
    }
    Ok(())
}
