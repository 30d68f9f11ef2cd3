//! The CLI entry point driven in-process, in each output format.

use bordered_actions::cli::run as cli;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for format in ["table", "csv", "json"] {
        let out = cli(["bordered-actions", "classify", "ann2", "--N", "6", "--format", format]);
        assert_eq!(out.status, 0, "{}", out.stderr);
        println!("--- {format}\n{}", out.stdout);
    }
    let out = cli(["bordered-actions", "min-genus", "--N", "9", "--variant", "p+-"]);
    println!("exit {}: {}", out.status, out.stderr.trim());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
