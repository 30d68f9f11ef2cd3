//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Counts are compared exactly. Runtime limits are the only tolerances and are pinned below.
//! A criterion listed in `EXPECTED_FAILURES` still runs and still prints FAIL; it just does not
//! fail the process.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use bordered_actions::bsk::{presentation_of, Cycle};
use bordered_actions::classify::classify_ann1;
use bordered_actions::extremal::{
    max_order_closed, max_order_search, min_genus_closed, min_genus_search, MaxOrderVariant, MinGenusVariant,
};
use bordered_actions::oracle::{check_point, enumerate_smooth, moves_for, orbits, parameter_points};
use bordered_actions::signature::{Family, ALL_FAMILIES};
use bordered_actions::zmod::{crt_solve, euler_phi, harvey_check, lift_unit, maclachlan, psi, units};
use bordered_actions::{ActionSense, BskMap, QuotientType, SurfaceTopology};

const LIMIT_ORACLE: Duration = Duration::from_secs(300);
const LIMIT_ORDER_TWO: Duration = Duration::from_secs(1);
const LIMIT_EXTREMAL: Duration = Duration::from_secs(120);
const LIMIT_NUMBER_THEORY: Duration = Duration::from_secs(10);

/// Criteria that cannot hold as stated; the reason is printed with the result.
const EXPECTED_FAILURES: &[(u32, &str)] = &[(
    4,
    "the stated p- tallies include non-orientable covers over the 1-punctured annulus, \
     which need a reflection mapped to N/2 and so cannot occur for odd N",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let spent = start.elapsed();
    o.detail = format!("{} ({:.2}s, limit {}s)", o.detail, spent.as_secs_f64(), limit.as_secs());
    if spent > limit {
        o.pass = false;
        o.detail.push_str(" over time");
    }
    o
}

// 1

fn oracle_agreement() -> Outcome {
    // the three named families plus the other seven
    let families = ALL_FAMILIES;
    let mut first = None;
    let mut bad = 0;
    let points = parameter_points(&families, 48);
    let named = points
        .iter()
        .filter(|(q, _)| matches!(q.family(), Family::Mb1 | Family::Ann1 | Family::D21))
        .count();
    for &(q, n) in &points {
        let p = check_point(q, n).expect("check point runs");
        if !p.agrees {
            bad += 1;
            first.get_or_insert(format!("{q} N = {n}: {}", p.counterexample.unwrap_or_default()));
        }
    }
    let detail = format!("{} points (all ten families, {} from mb1/ann1/d21; N <= 48), {bad} mismatches", points.len(), named);
    match first {
        None => outcome(true, detail),
        Some(f) => outcome(false, format!("{detail}; first: {f}")),
    }
}

// 2

fn biggest_coprime_divisor_brute(a: u64, b: u64) -> u64 {
    (1..=a).filter(|d| a % d == 0 && gcd_brute(*d, b) == 1).max().unwrap()
}

fn gcd_brute(a: u64, b: u64) -> u64 {
    (1..=a.max(b)).filter(|d| a % d == 0 && b % d == 0).max().unwrap_or(a.max(b))
}

fn oracle_count_at(q: QuotientType, n: u64, k: u64, orientable: bool) -> u64 {
    orbits(q, n)
        .unwrap()
        .orbits
        .iter()
        .filter(|o| o.invariants.surface.boundary_count == k && o.invariants.surface.orientable == orientable)
        .count() as u64
}

fn worked_examples() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;

    let r = classify_ann1(12, 12, 7, true);
    let genus: Vec<u64> = r.realizations.iter().map(|x| x.surface.genus).collect();
    let oracle = oracle_count_at(QuotientType::Ann1 { m: 12 }, 12, 7, true);
    let ok = r.class_count == 2 && genus.iter().all(|&g| g == 3) && oracle == 2;
    pass &= ok;
    notes.push(format!("ann1 N=m=12 k=7: {} classes, genus {:?}, oracle {}", r.class_count, genus, oracle));

    for m in [3u64, 5, 9, 15] {
        let n = 2 * m;
        let c = biggest_coprime_divisor_brute(m, n / m);
        let expected = euler_phi(m) + (euler_phi(m / c) * psi(c)).div_ceil(2);
        let closed = classify_ann1(n, m, 2, true).class_count;
        let oracle = oracle_count_at(QuotientType::Ann1 { m }, n, 2, true);
        pass &= closed == expected && oracle == expected;
        notes.push(format!("m={m}: expected {expected}, closed {closed}, oracle {oracle}"));
    }
    outcome(pass, notes.join("; "))
}

// 3

fn order_two_inventory() -> Outcome {
    let mut tally: BTreeMap<(SurfaceTopology, ActionSense), u64> = BTreeMap::new();
    for f in ALL_FAMILIES {
        for q in f.instances_dividing(2) {
            let r = orbits(q, 2).unwrap();
            for (key, c) in r.by_surface() {
                *tally.entry(key).or_insert(0) += c;
            }
        }
    }
    let count = |pred: &dyn Fn(&SurfaceTopology, ActionSense) -> bool| -> u64 {
        tally.iter().filter(|((s, a), _)| pred(s, *a)).map(|(_, c)| c).sum()
    };
    let name = |s: &SurfaceTopology| s.to_string();
    let pres = count(&|s, a| s.algebraic_genus == 2 && a == ActionSense::Preserving);
    let rev = count(&|s, a| s.algebraic_genus == 2 && a == ActionSense::Reversing);
    let non = count(&|s, a| s.algebraic_genus == 2 && a == ActionSense::Unoriented);
    let by = |a: ActionSense, n: &str| count(&|s, b| b == a && name(s) == n);
    let split = [
        by(ActionSense::Preserving, "1-holed torus"),
        by(ActionSense::Preserving, "3-holed sphere"),
        by(ActionSense::Reversing, "1-holed torus"),
        by(ActionSense::Reversing, "3-holed sphere"),
        by(ActionSense::Unoriented, "2-holed projective plane"),
        by(ActionSense::Unoriented, "1-holed Klein bottle"),
    ];
    let pass = (pres, rev, non) == (2, 4, 8) && split == [1, 1, 2, 2, 3, 5];
    outcome(
        pass,
        format!("tallies {pres}/{rev}/{non}; torus/sphere {}/{} and {}/{}; projective plane {}, Klein bottle {}",
            split[0], split[1], split[2], split[3], split[4], split[5]),
    )
}

// 4

fn odd_prime_inventory() -> Outcome {
    let mut pass_plus = true;
    let mut pass_minus = true;
    let mut notes = Vec::new();
    for n in [3u64, 5, 7, 11, 13] {
        let plus = min_genus_search(n, MinGenusVariant::Preserving).unwrap();
        let minus = min_genus_search(n, MinGenusVariant::NonOrientable).unwrap();
        let at = |a: &bordered_actions::extremal::ExtremalAnswer, k: u64| -> u64 {
            a.realizers.iter().filter(|r| r.surface.boundary_count == k).map(|r| r.classes).sum()
        };
        // independent check of the same tallies by brute force
        let oracle_minus = |k: u64| -> u64 {
            [QuotientType::Mb1 { m: n }, QuotientType::Ann1 { m: n }]
                .into_iter()
                .map(|q| oracle_count_at(q, n, k, false))
                .sum()
        };
        let oracle_plus = |k: u64| oracle_count_at(QuotientType::D21 { m: n, n }, n, k, true);
        let got_plus = (plus.value, at(&plus, n), at(&plus, 1));
        let got_minus = (minus.value, at(&minus, n), at(&minus, 1));
        pass_plus &= got_plus == (n - 1, 1, (n - 1) / 2) && (oracle_plus(n), oracle_plus(1)) == (1, (n - 1) / 2);
        let stated = (n, 2, 3 * (n - 1) / 2);
        pass_minus &= got_minus == stated;
        notes.push(format!(
            "N={n}: p++ {} ({} at k=N, {} at k=1); p- {} ({} at k=N, {} at k=1; oracle {}, {}; stated {}, {})",
            got_plus.0, got_plus.1, got_plus.2, got_minus.0, got_minus.1, got_minus.2,
            oracle_minus(n), oracle_minus(1), stated.1, stated.2
        ));
    }
    let head = format!(
        "p++ part {}, p- part {}",
        if pass_plus { "holds" } else { "fails" },
        if pass_minus { "holds" } else { "fails" }
    );
    outcome(pass_plus && pass_minus, format!("{head}; {}", notes.join("; ")))
}

// 5

fn extremal_agreement() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=60 {
        for v in MinGenusVariant::ALL {
            checked += 1;
            match (min_genus_closed(n, v), min_genus_search(n, v)) {
                (Ok(a), Ok(b)) if a == b => {}
                (Err(_), Err(_)) if n % 2 == 1 && v == MinGenusVariant::Reversing => {}
                _ => bad.push(format!("N={n} {v}")),
            }
        }
    }
    for p in 2..=30 {
        for v in MaxOrderVariant::ALL {
            checked += 1;
            match (max_order_closed(p, v), max_order_search(p, v)) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => bad.push(format!("p={p} {v}")),
            }
        }
    }
    let nine = min_genus_search(9, MinGenusVariant::Orientable).unwrap();
    let nine_ok = nine.value == 6 && nine.class_count() == 2;
    if !nine_ok {
        bad.push(format!("N=9 p+: {} with {} classes", nine.value, nine.class_count()));
    }
    outcome(
        bad.is_empty(),
        format!("{checked} queries, {} disagreements{}; N=9 p+ = {} with {} classes",
            bad.len(),
            bad.first().map(|b| format!(" (first {b})")).unwrap_or_default(),
            nine.value, nine.class_count()),
    )
}

// 6

fn structural_invariants() -> Outcome {
    let mut maps_seen = 0usize;
    let mut violations = Vec::new();
    for n in 2..=24u64 {
        for f in ALL_FAMILIES {
            for q in f.instances_dividing(n) {
                let maps = enumerate_smooth(q, n).unwrap();
                let set: HashSet<&Vec<u64>> = maps.iter().map(|m| &m.images).collect();
                let pres = presentation_of(&q);
                let moves = moves_for(&q);
                if maps.is_empty() {
                    continue;
                }
                let Ok(p) = q.signature().kernel_algebraic_genus(n) else {
                    violations.push(format!("(a) {q} N={n}: smooth maps exist but N*area + 1 is not integral"));
                    continue;
                };
                for m in &maps {
                    maps_seen += 1;
                    let orientable = m.orientable().unwrap();
                    let k = m.boundary_count().unwrap();
                    // (a) Riemann-Hurwitz against eps*g + k - 1
                    let eps = if orientable { 2 } else { 1 };
                    let rest = (p + 1).checked_sub(k);
                    let consistent = matches!(rest, Some(r) if r % eps == 0 && (orientable || r > 0));
                    if !consistent {
                        violations.push(format!("(a) {q} N={n} {:?}: p={p} k={k}", m.images));
                        continue;
                    }
                    let surface = m.surface().unwrap();
                    if surface.epsilon() * surface.genus + surface.boundary_count - 1 != p {
                        violations.push(format!("(a) {q} N={n} {:?}", m.images));
                    }
                    // (b) units and moves
                    let mut images: Vec<Vec<u64>> = units(n)
                        .into_iter()
                        .map(|u| m.images.iter().map(|&v| v * u % n).collect())
                        .collect();
                    images.extend(moves.iter().map(|mv| mv.apply(&pres, n, &m.images)));
                    for img in images {
                        let other = BskMap { quotient: q, order: n, images: img };
                        let same = set.contains(&other.images)
                            && other.orientable().ok() == Some(orientable)
                            && other.boundary_count().ok() == Some(k)
                            && other.surface().ok().map(|s| s.genus) == Some(surface.genus);
                        if !same {
                            violations.push(format!("(b) {q} N={n} {:?} -> {:?}", m.images, other.images));
                        }
                    }
                    // (c) consecutive reflections differ
                    for c in &pres.cycles {
                        if let Cycle::Corners { reflections } = c {
                            if reflections.windows(2).any(|w| m.images[w[0]] == m.images[w[1]]) {
                                violations.push(format!("(c) {q} N={n} {:?}", m.images));
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(
        violations.is_empty(),
        format!("{maps_seen} smooth maps, {} violations{}", violations.len(),
            violations.first().map(|v| format!(" (first {v})")).unwrap_or_default()),
    )
}

// 7

fn order_in(a: u64, n: u64) -> u64 {
    (1..=n).find(|k| (a * k) % n == 0).unwrap()
}

fn number_theory() -> Outcome {
    let mut bad = Vec::new();

    for n in 1..=40u64 {
        let count = (1..=n).filter(|&a| gcd_brute(a, n) == 1).count() as u64;
        if euler_phi(n) != count {
            bad.push(format!("phi({n})"));
        }
        // psi from the prime-power definition, factoring by trial division here
        let mut rest = n;
        let mut expected = 1u64;
        for p in 2..=n {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                expected *= (p - 2) * p.pow(e - 1);
            }
        }
        if psi(n) != expected {
            bad.push(format!("psi({n})"));
        }
    }
    for a in 1..=50u64 {
        for b in 1..=50u64 {
            if gcd_brute(a, b) == 1 && (euler_phi(a * b) != euler_phi(a) * euler_phi(b) || psi(a * b) != psi(a) * psi(b)) {
                bad.push(format!("multiplicativity at ({a}, {b})"));
            }
        }
    }

    for m in 1..=20u64 {
        for n in 1..=20u64 {
            let l = m * n / gcd_brute(m, n);
            for a in 0..m {
                for b in 0..n {
                    let scan = (0..l).find(|x| x % m == a && x % n == b);
                    let got = crt_solve(a as i64, m, b as i64, n).map(|r| (r.value, r.modulus));
                    if got != scan.map(|x| (x, l)) {
                        bad.push(format!("crt({a},{m},{b},{n})"));
                    }
                }
            }
        }
    }

    for big in 1..=40u64 {
        for n in (1..=big).filter(|d| big % d == 0) {
            for a in (0..n).filter(|&a| gcd_brute(a, n) == 1 || n == 1) {
                let scan = (0..big.max(1)).find(|&c| c % n == a % n && (gcd_brute(c, big) == 1));
                if lift_unit(a, n, big).ok() != scan {
                    bad.push(format!("lift_unit({a},{n},{big})"));
                }
            }
        }
    }

    for big in 1..=40u64 {
        let divs: Vec<u64> = (1..=big).filter(|d| big % d == 0).collect();
        for &m in &divs {
            for &n in &divs {
                for &l in &divs {
                    let brute = (0..big).any(|a| {
                        order_in(a, big) == m
                            && (0..big).any(|b| {
                                let c = (2 * big - a - b) % big;
                                order_in(b, big) == n
                                    && order_in(c, big) == l
                                    && gcd_brute(gcd_brute(gcd_brute(a, b), c), big) == 1
                            })
                    });
                    if harvey_check(m, n, l, big) != brute {
                        bad.push(format!("harvey({m},{n},{l},{big})"));
                    }
                }
            }
        }
    }

    for m in 1..=40u64 {
        for n in 1..=40u64 {
            for l in 1..=40u64 {
                let big = m * n / gcd_brute(m, n);
                let lcm = |x: u64, y: u64| x * y / gcd_brute(x, y);
                let ok = lcm(m, l) == big && lcm(n, l) == big;
                match maclachlan(m, n, l) {
                    Ok(q) => {
                        let coprime = gcd_brute(q.a1, q.a2) == 1 && gcd_brute(q.a1, q.a3) == 1 && gcd_brute(q.a2, q.a3) == 1;
                        if !ok || q.triple() != (m, n, l) || q.order() != big || !coprime {
                            bad.push(format!("maclachlan({m},{n},{l})"));
                        }
                    }
                    Err(_) if ok => bad.push(format!("maclachlan({m},{n},{l}) rejected")),
                    Err(_) => {}
                }
            }
        }
    }

    outcome(
        bad.is_empty(),
        format!("{} violations{}", bad.len(), bad.first().map(|b| format!(" (first {b})")).unwrap_or_default()),
    )
}

fn main() {
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "oracle vs closed-form counts", Box::new(|| timed(LIMIT_ORACLE, oracle_agreement))),
        (2, "worked examples", Box::new(worked_examples)),
        (3, "N = 2 inventory", Box::new(|| timed(LIMIT_ORDER_TWO, order_two_inventory))),
        (4, "odd-prime inventory", Box::new(odd_prime_inventory)),
        (5, "extremal closed form vs search", Box::new(|| timed(LIMIT_EXTREMAL, extremal_agreement))),
        (6, "structural invariants", Box::new(structural_invariants)),
        (7, "number-theory kernel", Box::new(|| timed(LIMIT_NUMBER_THEORY, number_theory))),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let o = run();
        let expected = EXPECTED_FAILURES.iter().find(|(i, _)| *i == id);
        println!("{} {id} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        match (o.pass, expected) {
            (false, Some((_, why))) => println!("     expected failure: {why}"),
            (false, None) => unexpected += 1,
            (true, Some(_)) => println!("     listed as an expected failure but passed"),
            (true, None) => {}
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criterion/criteria failed");
        std::process::exit(1);
    }
}
