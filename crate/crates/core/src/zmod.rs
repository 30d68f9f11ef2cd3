//! Integer and modular arithmetic used by the counting formulas.
//!
//! Everything works on `u64` residues. Products that could leave the `u64`
//! range go through checked multiplication and panic instead of wrapping;
//! the release profile keeps overflow checks on for the same reason.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .expect("lcm exceeds the u64 range")
}

pub fn lcm_all(values: &[u64]) -> u64 {
    values.iter().fold(1, |acc, &v| lcm(acc, v))
}

pub fn checked_product(factors: &[u64]) -> u64 {
    factors.iter().fold(1u64, |acc, &f| {
        acc.checked_mul(f).expect("product exceeds the u64 range")
    })
}

/// Prime factorization by trial division, primes in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn smallest_prime_factor(n: u64) -> Option<u64> {
    factorize(n).first().map(|&(p, _)| p)
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    factorize(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// The multiplicative companion of the totient with `psi(p^a) = (p - 2) p^(a-1)`.
///
/// `psi(2^a) = 0`; callers that multiply by it must expect a zero factor.
pub fn psi(c: u64) -> u64 {
    assert!(c >= 1, "psi is defined for c >= 1");
    factorize(c)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 2) * p.pow(e - 1))
}

/// Additive order of `a` in `Z_n`.
pub fn additive_order(a: u64, n: u64) -> u64 {
    n / gcd(a % n, n)
}

pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&a| gcd(a, n) == 1).collect()
}

/// Elements of `Z_n` of exact additive order `order`.
pub fn elements_of_order(order: u64, n: u64) -> Vec<u64> {
    if order == 0 || n % order != 0 {
        return Vec::new();
    }
    let step = n / order;
    units(order).into_iter().map(|u| (u * step) % n).collect()
}

/// Largest divisor of `a` sharing no prime with `b`.
pub fn biggest_coprime_divisor(a: u64, b: u64) -> u64 {
    let mut c = a;
    loop {
        let g = gcd(c, b);
        if g == 1 {
            return c;
        }
        c /= g;
    }
}

pub fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

fn reduce(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

/// Solves `x = a (mod m)`, `x = b (mod n)`.
///
/// Returns the unique residue modulo `lcm(m, n)` or `None` when
/// `a` and `b` disagree modulo `gcd(m, n)`.
pub fn crt_solve(a: i64, m: u64, b: i64, n: u64) -> Option<Residue> {
    assert!(m >= 1 && n >= 1, "moduli must be positive");
    let a = reduce(a, m);
    let b = reduce(b, n);
    let ext = (m as i128).extended_gcd(&(n as i128));
    let g = ext.gcd;
    let diff = b as i128 - a as i128;
    if diff % g != 0 {
        return None;
    }
    let l = (m as i128 / g) * n as i128;
    // m * x = diff (mod n), with x = (diff / g) * inv(m / g) mod (n / g)
    let step = (diff / g).rem_euclid(n as i128 / g) * ext.x.rem_euclid(n as i128 / g);
    let x = (a as i128 + m as i128 * step).rem_euclid(l);
    Some(Residue {
        value: x as u64,
        modulus: l as u64,
    })
}

/// Lifts a unit of `Z_n` to a unit of `Z_big` along the reduction map, for `n | big`.
///
/// The smallest representative is returned, so the answer is deterministic.
pub fn lift_unit(a: u64, n: u64, big: u64) -> Result<u64> {
    if n == 0 || big % n != 0 {
        return Err(Error::NotADivisor {
            divisor: n,
            modulus: big,
        });
    }
    if gcd(a % n, n) != 1 {
        return Err(Error::NotAUnit { value: a, modulus: n });
    }
    if big == 1 {
        return Ok(0);
    }
    let mut c = a % n;
    while c < big {
        if gcd(c, big) == 1 {
            return Ok(c);
        }
        c += n;
    }
    unreachable!("the reduction map on unit groups is onto")
}

/// Whether `Z_big` is generated by elements of orders `m`, `n`, `l` summing to zero.
pub fn harvey_check(m: u64, n: u64, l: u64, big: u64) -> bool {
    if [m, n, l, big].contains(&0) {
        return false;
    }
    if lcm(m, n) != big || lcm(m, l) != big || lcm(n, l) != big {
        return false;
    }
    if big % 2 == 1 {
        return true;
    }
    [m, n, l].iter().filter(|&&x| (big / x) % 2 == 0).count() == 1
}

/// `m = a*a2*a3`, `n = a*a1*a3`, `l = a*a1*a2`, `big = a*a1*a2*a3`.
///
/// `a1`, `a2`, `a3` are pairwise coprime. `a` need not be coprime to them:
/// for `(12, 12, 6)` the decomposition is `(6, 1, 1, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MaclachlanQuad {
    pub a: u64,
    pub a1: u64,
    pub a2: u64,
    pub a3: u64,
}

impl MaclachlanQuad {
    pub fn order(&self) -> u64 {
        checked_product(&[self.a, self.a1, self.a2, self.a3])
    }

    /// The triple `(m, n, l)` this quadruple decomposes.
    pub fn triple(&self) -> (u64, u64, u64) {
        (
            checked_product(&[self.a, self.a2, self.a3]),
            checked_product(&[self.a, self.a1, self.a3]),
            checked_product(&[self.a, self.a1, self.a2]),
        )
    }
}

pub fn maclachlan(m: u64, n: u64, l: u64) -> Result<MaclachlanQuad> {
    let big = lcm(m, n);
    if m == 0 || n == 0 || l == 0 || lcm(m, l) != big || lcm(n, l) != big {
        return Err(Error::LcmCondition { m, n, l });
    }
    let (a1, a2, a3) = (big / m, big / n, big / l);
    let a = big / (a1 * a2 * a3);
    let quad = MaclachlanQuad { a, a1, a2, a3 };
    debug_assert_eq!(quad.triple(), (m, n, l));
    Ok(quad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(7), 6);
        // units of 12 are 1, 5, 7, 11
        assert_eq!(units(12), vec![1, 5, 7, 11]);
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(1), 1);
        assert_eq!(psi(9), 3);
        assert_eq!(psi(4), 0);
        assert_eq!(psi(15), 3);
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt_solve(1, 4, 3, 6), Some(Residue { value: 9, modulus: 12 }));
        assert_eq!(crt_solve(0, 5, 0, 7), Some(Residue { value: 0, modulus: 35 }));
        assert_eq!(crt_solve(1, 4, 2, 6), None);
        assert_eq!(crt_solve(-1, 4, -1, 6), Some(Residue { value: 11, modulus: 12 }));
    }

    #[test]
    fn lift_unit_examples() {
        assert_eq!(lift_unit(3, 4, 12), Ok(7));
        assert_eq!(lift_unit(2, 3, 12), Ok(5));
        assert_eq!(lift_unit(1, 5, 30), Ok(1));
        assert!(matches!(lift_unit(2, 4, 12), Err(Error::NotAUnit { .. })));
        assert!(matches!(lift_unit(1, 5, 12), Err(Error::NotADivisor { .. })));
    }

    #[test]
    fn harvey_examples() {
        assert!(harvey_check(2, 3, 6, 6));
        assert!(!harvey_check(2, 2, 2, 2));
        assert!(harvey_check(9, 9, 9, 9));
        assert!(!harvey_check(2, 3, 6, 12));
    }

    #[test]
    fn maclachlan_examples() {
        let q = maclachlan(2, 3, 6).unwrap();
        assert_eq!((q.a, q.a1, q.a2, q.a3), (1, 3, 2, 1));
        let q = maclachlan(5, 5, 5).unwrap();
        assert_eq!((q.a, q.a1, q.a2, q.a3), (5, 1, 1, 1));
        let q = maclachlan(12, 12, 6).unwrap();
        assert_eq!((q.a, q.a1, q.a2, q.a3), (6, 1, 1, 2));
        assert_eq!(q.triple(), (12, 12, 6));
        assert_eq!(q.order(), 12);
        assert!(maclachlan(2, 3, 3).is_err());
    }

    #[test]
    fn coprime_part() {
        assert_eq!(biggest_coprime_divisor(12, 2), 3);
        assert_eq!(biggest_coprime_divisor(9, 3), 1);
        assert_eq!(biggest_coprime_divisor(15, 4), 15);
    }

    #[test]
    fn elements_with_exact_order() {
        assert_eq!(elements_of_order(3, 12), vec![4, 8]);
        assert_eq!(elements_of_order(1, 12), vec![0]);
        assert!(elements_of_order(5, 12).is_empty());
    }
}
