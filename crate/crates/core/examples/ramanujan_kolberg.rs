//! a(7n+2) is divisible by 7, and its generating function is a polynomial in an
//! eta-quotient modular function.
//!
//! cargo run --release --example ramanujan_kolberg

use qcrank::verifier::run_check;
use qcrank::verifier::sequences::a_series;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = a_series(7 * 12 + 2, None)?;
    println!("{:>3} {:>22} {:>20}", "n", "a(7n+2)", "a(7n+2)/7");
    for n in 0..=12 {
        let v = a.coeff_at(7 * n + 2)?;
        println!("{n:>3} {v:>22} {:>20}", &v / 7);
    }

    for id in ["rk_basis_identity", "thm6", "cor7"] {
        let r = run_check(id, None)?;
        println!("{} {id} at N = {} ({:.1} ms)", r.status, r.order_used, r.runtime_ms);
    }
    Ok(())
}
