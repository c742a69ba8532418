//! Run the whole check catalogue in parallel and print a JSON report.
//!
//! cargo run --release --example verify_catalogue -- [ORDER]

use std::collections::BTreeMap;
use std::env;
use std::time::Instant;

use qcrank::report::{Orders, ReportDocument, RunError};
use qcrank::verifier::{registry, run_checks};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order: Option<i64> = env::args().nth(1).map(|s| s.parse()).transpose()?;
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let start = Instant::now();
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());

    let (mut checks, mut errors) = (Vec::new(), Vec::new());
    for (id, outcome) in ids.iter().zip(run_checks(&ids, order, jobs)?) {
        match outcome {
            Ok(r) => checks.push(r),
            Err(e) => errors.push(RunError { id: id.to_string(), message: e.to_string() }),
        }
    }
    let defaults: BTreeMap<String, i64> = registry().iter().map(|c| (c.id.to_string(), c.default_order)).collect();
    let doc = ReportDocument::new(Orders { override_order: order, defaults }, checks, errors, start.elapsed().as_secs_f64() * 1e3);
    println!("{}", doc.to_json());
    eprintln!("overall {}", doc.overall);
    Ok(())
}
