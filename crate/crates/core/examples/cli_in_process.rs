//! Drive the command-line front end in-process, capturing its output.
//!
//! cargo run --example cli_in_process

use qcrank::bfile::parse_bfile;
use qcrank::cli::run;

fn main() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(["qcrank", "seq", "C", "--limit", "14"], &mut out, &mut err);
    let text = String::from_utf8_lossy(&out);
    print!("{text}");
    let parsed = parse_bfile(&text).expect("seq emits a valid b-file");
    println!("exit {code}, {} terms round-tripped", parsed.len());

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(["qcrank", "eta", "1:2,2:-1;qshift=-1", "--order", "4"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit {code}");

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(["qcrank", "verify", "--check", "nosuch"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&err));
    println!("exit {code}");
}
