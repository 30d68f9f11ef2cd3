//! Property tests for the arithmetic kernel, serialization and orbit moves.

use bordered_actions::oracle::{enumerate_smooth, moves_for};
use bordered_actions::report::{OutputRecord, Payload};
use bordered_actions::bsk::presentation_of;
use bordered_actions::classify::classify;
use bordered_actions::signature::ALL_FAMILIES;
use bordered_actions::zmod::{crt_solve, euler_phi, gcd, lcm, maclachlan, psi, units};
use bordered_actions::{BskMap, NecSignature};
use proptest::prelude::*;
use std::collections::BTreeMap;

proptest! {
    #[test]
    fn phi_psi_multiplicative(a in 1u64..200, b in 1u64..200) {
        prop_assume!(gcd(a, b) == 1);
        prop_assert_eq!(euler_phi(a * b), euler_phi(a) * euler_phi(b));
        prop_assert_eq!(psi(a * b), psi(a) * psi(b));
    }

    #[test]
    fn crt_solution_satisfies_both(a in -50i64..50, m in 1u64..40, b in -50i64..50, n in 1u64..40) {
        let solvable = (a - b).rem_euclid(gcd(m, n) as i64) == 0;
        match crt_solve(a, m, b, n) {
            Some(r) => {
                prop_assert!(solvable);
                prop_assert_eq!(r.modulus, lcm(m, n));
                prop_assert!(r.value < r.modulus);
                prop_assert_eq!(r.value as i64 % m as i64, a.rem_euclid(m as i64));
                prop_assert_eq!(r.value as i64 % n as i64, b.rem_euclid(n as i64));
            }
            None => prop_assert!(!solvable),
        }
    }

    #[test]
    fn maclachlan_reconstructs(a in 1u64..30, a1 in 1u64..12, a2 in 1u64..12, a3 in 1u64..12) {
        prop_assume!(gcd(a1, a2) == 1 && gcd(a1, a3) == 1 && gcd(a2, a3) == 1);
        let (m, n, l) = (a * a1 * a3, a * a2 * a3, a * a1 * a2);
        let q = maclachlan(m, n, l).unwrap();
        prop_assert_eq!(q.triple(), (m, n, l));
    }

    #[test]
    fn family_orbit_moves_preserve_topology(f in 0usize..10, n in 2u64..18, pick in any::<prop::sample::Index>()) {
        let family = ALL_FAMILIES[f];
        let quotients = family.instances_dividing(n);
        prop_assume!(!quotients.is_empty());
        let q = *pick.get(&quotients);
        let maps = enumerate_smooth(q, n).unwrap();
        prop_assume!(!maps.is_empty());
        let m = pick.get(&maps);
        let surface = m.surface().unwrap();
        let pres = presentation_of(&q);
        for u in units(n) {
            let images = m.images.iter().map(|&v| v * u % n).collect();
            let other = BskMap::new(q, n, images).unwrap();
            prop_assert!(other.is_smooth());
            prop_assert_eq!(other.surface().unwrap(), surface);
        }
        for mv in moves_for(&q) {
            let other = BskMap::new(q, n, mv.apply(&pres, n, &m.images)).unwrap();
            prop_assert!(other.is_smooth());
            prop_assert_eq!(other.surface().unwrap(), surface);
        }
    }

    #[test]
    fn map_json_roundtrip(f in 0usize..10, n in 2u64..16, pick in any::<prop::sample::Index>()) {
        let quotients = ALL_FAMILIES[f].instances_dividing(n);
        prop_assume!(!quotients.is_empty());
        let q = *pick.get(&quotients);
        let maps = enumerate_smooth(q, n).unwrap();
        prop_assume!(!maps.is_empty());
        let m = pick.get(&maps);
        let back: BskMap = serde_json::from_str(&serde_json::to_string(m).unwrap()).unwrap();
        prop_assert_eq!(&back, m);
        let sig: NecSignature = q.signature().to_string().parse().unwrap();
        prop_assert_eq!(sig, q.signature());
    }

    #[test]
    fn record_json_roundtrip(f in 0usize..10, n in 2u64..30, pick in any::<prop::sample::Index>()) {
        let quotients = ALL_FAMILIES[f].instances_dividing(n);
        prop_assume!(!quotients.is_empty());
        let q = *pick.get(&quotients);
        let rec = OutputRecord::new("classify", BTreeMap::new(), Payload::Classification(classify(q, n).unwrap()));
        let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
        prop_assert_eq!(back, rec);
    }
}
