//! Closed-form classification for a few quotient types.

use bordered_actions::classify::{classify, classify_ann1};
use bordered_actions::QuotientType;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let r = classify_ann1(12, 12, 7, true);
    println!("ann1, N = m = 12, k = 7: {} classes", r.class_count);
    for x in &r.realizations {
        println!("  {} {} {:?}: {}", x.surface, x.action, x.part, x.classes);
    }

    for (q, n) in [
        (QuotientType::Ann2, 6),
        (QuotientType::Mb1 { m: 4 }, 8),
        (QuotientType::D21 { m: 6, n: 6 }, 6),
        (QuotientType::D2c { n: 3, m: 3 }, 6),
    ] {
        let r = classify(q, n)?;
        println!("{q} at N = {n}:");
        for ((s, a), c) in r.by_surface() {
            println!("  {c} on {s} ({a})");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
