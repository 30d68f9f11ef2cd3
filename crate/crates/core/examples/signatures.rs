//! The ten quotient signatures and what they say about the covering surface.

use bordered_actions::signature::{admissible_signatures_below_unit_area, ALL_FAMILIES};
use bordered_actions::{NecSignature, QuotientType};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for f in ALL_FAMILIES {
        println!("{:<5} {}", f.id(), f.template());
    }

    let s: NecSignature = "(1;-;[5];{()})".parse()?;
    println!("{s}: area {}, canonical Fuchsian {}", s.area(), s.canonical_fuchsian());
    println!("  kernel genus at N = 5: {}", s.kernel_algebraic_genus(5)?);
    println!("  kernel genus at N = 10: {}", s.kernel_algebraic_genus(10)?);

    // signatures are matched back to their family
    let q = QuotientType::from_signature(&"(0;+;[2,3];{()})".parse()?)?;
    println!("(0;+;[2,3];{{()}}) is {}", q.id());

    let below = admissible_signatures_below_unit_area(12);
    println!("{} admissible signatures with area below 1 and periods up to 12", below.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
