//! Modular arithmetic helpers behind the counting formulas.

use bordered_actions::zmod::{crt_solve, euler_phi, harvey_check, maclachlan, psi, units};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for n in [12u64, 15, 16, 45] {
        println!("N = {n:>2}: phi = {:>2}, psi = {:>2}, units = {:?}", euler_phi(n), psi(n), units(n));
    }

    // x = 2 mod 3, x = 3 mod 5
    let r = crt_solve(2, 3, 3, 5).ok_or("no solution")?;
    println!("crt: x = {} mod {}", r.value, r.modulus);
    assert_eq!((r.value, r.modulus), (8, 15));

    // Z_N generated by three elements of orders m, n, l summing to zero
    for (m, n, l, big) in [(2, 3, 6, 6), (4, 4, 2, 4), (2, 2, 2, 2)] {
        println!("harvey({m},{n},{l}; N = {big}) = {}", harvey_check(m, n, l, big));
    }

    let q = maclachlan(12, 12, 6)?;
    println!("maclachlan(12, 12, 6) = (A, A1, A2, A3) = ({}, {}, {}, {})", q.a, q.a1, q.a2, q.a3);
    assert_eq!(q.triple(), (12, 12, 6));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
