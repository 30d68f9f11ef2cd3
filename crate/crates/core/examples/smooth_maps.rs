//! Checking candidate maps onto Z_N and reading off the covered surface.

use bordered_actions::{BskMap, QuotientType};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let q = QuotientType::D21 { m: 2, n: 3 };
    let good = BskMap::from_named(q, 6, &[("x1", 3), ("x2", 2), ("c", 0)])?;
    println!("{}", serde_json::to_string(&good)?);
    println!("  surface: {}, {}", good.surface()?, good.action_sense()?);

    // x2 must have order 3
    let bad = BskMap::from_named(q, 6, &[("x1", 3), ("x2", 1), ("c", 0)])?;
    for v in bad.violations() {
        println!("  rejected: {v}");
    }

    let mb2 = BskMap::from_named(QuotientType::Mb2, 8, &[("d", 1), ("c0", 0), ("c1", 4)])?;
    let s = mb2.surface()?;
    println!("mb2 at N = 8: {s} (p = {})", s.algebraic_genus);

    let back: BskMap = serde_json::from_str(&serde_json::to_string(&mb2)?)?;
    assert_eq!(back, mb2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
