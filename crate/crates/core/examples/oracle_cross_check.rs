//! Brute-force orbit counts against the closed forms.

use bordered_actions::oracle::{check_point, cross_check, moves_for, orbits};
use bordered_actions::signature::Family;
use bordered_actions::QuotientType;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let q = QuotientType::Ann1 { m: 12 };
    for mv in moves_for(&q) {
        println!("move {}: {:?}", mv.name, mv.matrix);
    }
    let r = orbits(q, 12)?;
    println!("{q} at N = 12: {} maps in {} orbits", r.map_count, r.orbit_count);
    for o in r.orbits.iter().filter(|o| o.invariants.surface.boundary_count == 7) {
        println!("  k = 7 orbit, connector orders {:?}", o.invariants.connector_orders);
    }

    let p = check_point(QuotientType::D21 { m: 4, n: 4 }, 4)?;
    println!("d21(4,4) at N = 4: oracle {}, closed form {}", p.oracle_count, p.closed_count);

    let report = cross_check(&[Family::Mb1, Family::Ann1, Family::D21], 16)?;
    println!(
        "{} points up to N = 16, {} mismatches",
        report.points.len(),
        report.mismatches().count()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
