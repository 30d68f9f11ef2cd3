//! Closed-form existence, class counts and surface types for each quotient family.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signature::QuotientType;
use crate::surface::{ActionSense, SurfaceTopology};
use crate::zmod::{biggest_coprime_divisor, divisors, euler_phi, factorize, gcd, lcm, psi};

/// Which of the two kinds of orientable 1-punctured-annulus actions a count belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Ann1Part {
    /// The two boundary reflections have different images.
    Type1,
    /// Both reflections in the kernel; connector images of orders `N/n` and `N/complement`.
    Type2 { n: u64, complement: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Realization {
    pub surface: SurfaceTopology,
    pub action: ActionSense,
    pub classes: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub part: Option<Ann1Part>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub quotient: QuotientType,
    #[serde(rename = "N")]
    pub order: u64,
    pub exists: bool,
    pub class_count: u64,
    pub realizations: Vec<Realization>,
}

impl ClassificationResult {
    fn new(quotient: QuotientType, order: u64, mut realizations: Vec<Realization>) -> Self {
        realizations.retain(|r| r.classes > 0);
        realizations.sort();
        let class_count = realizations.iter().map(|r| r.classes).sum();
        ClassificationResult {
            quotient,
            order,
            exists: class_count > 0,
            class_count,
            realizations,
        }
    }

    fn none(quotient: QuotientType, order: u64) -> Self {
        Self::new(quotient, order, Vec::new())
    }

    /// Class counts keyed by surface and action sense, merging itemized parts.
    pub fn by_surface(&self) -> BTreeMap<(SurfaceTopology, ActionSense), u64> {
        let mut out = BTreeMap::new();
        for r in &self.realizations {
            *out.entry((r.surface, r.action)).or_insert(0) += r.classes;
        }
        out
    }

    /// Keeps only realizations with the given boundary count and orientability.
    pub fn filtered(&self, k: Option<u64>, orientable: Option<bool>) -> Self {
        let rs = self
            .realizations
            .iter()
            .filter(|r| k.is_none_or(|k| r.surface.boundary_count == k))
            .filter(|r| orientable.is_none_or(|o| r.surface.orientable == o))
            .cloned()
            .collect();
        Self::new(self.quotient, self.order, rs)
    }
}

fn surface(orientable: bool, p: u64, k: u64) -> SurfaceTopology {
    SurfaceTopology::from_invariants(orientable, p, k)
        .unwrap_or_else(|e| panic!("closed form produced an impossible surface: {e}"))
}

fn real(surface: SurfaceTopology, action: ActionSense, classes: u64) -> Realization {
    Realization { surface, action, classes, part: None }
}

fn genus_of(q: &QuotientType, order: u64) -> u64 {
    q.signature()
        .kernel_algebraic_genus(order)
        .unwrap_or_else(|e| panic!("closed form produced a non-integral genus: {e}"))
}

fn ceil_half(x: u64) -> u64 {
    x.div_ceil(2)
}

/// `psi(C)` where the existence conditions guarantee `C` is odd.
fn psi_checked(c: u64) -> u64 {
    let v = psi(c);
    assert!(v > 0, "psi({c}) vanished inside an existing case");
    v
}

/// Disc with six corners, annulus with two corners, Möbius band with two corners.
pub fn classify_corner_only(q: QuotientType, order: u64) -> Result<ClassificationResult> {
    use ActionSense::*;
    let half = order / 2;
    let rs = match q {
        QuotientType::D6 if order == 2 => vec![real(surface(true, 2, 3), Reversing, 1)],
        QuotientType::Ann2 | QuotientType::Mb2 if order % 2 == 0 && order >= 2 => {
            let p = genus_of(&q, order);
            let mut rs = vec![real(surface(false, p, half), Unoriented, 1)];
            if q == QuotientType::Ann2 {
                rs.push(real(surface(false, p, half + 1), Unoriented, 1));
            }
            if half % 2 == 1 {
                rs.push(real(surface(true, p, half), Reversing, 1));
                if q == QuotientType::Ann2 {
                    rs.push(real(surface(true, p, half + 2), Reversing, 1));
                }
            }
            rs
        }
        QuotientType::D6 | QuotientType::Ann2 | QuotientType::Mb2 => vec![],
        other => {
            return Err(Error::InvalidQuotient(format!("{} has cone points", other.id())));
        }
    };
    Ok(ClassificationResult::new(q, order, rs))
}

/// 1-punctured disc with two or four corners. The order is forced by `m`.
pub fn classify_disc_corners(q: QuotientType) -> Result<ClassificationResult> {
    q.validate()?;
    let (m, corners) = match q {
        QuotientType::D12 { m } => (m, 2),
        QuotientType::D14 { m } => (m, 4),
        other => return Err(Error::InvalidQuotient(format!("{} is not d12/d14", other.id()))),
    };
    let order = if m % 2 == 0 { m } else { 2 * m };
    let k = corners * order / 4;
    let p = genus_of(&q, order);
    let r = if m % 2 == 0 {
        real(surface(false, p, k), ActionSense::Unoriented, 1)
    } else {
        real(surface(true, p, k), ActionSense::Reversing, 1)
    };
    Ok(ClassificationResult::new(q, order, vec![r]))
}

/// 1-punctured Möbius band with cone order `m`, `k` boundary components.
pub fn classify_mb1(order: u64, m: u64, k: u64, orientable: bool) -> ClassificationResult {
    let q = QuotientType::Mb1 { m };
    if m < 2 || k == 0 || order % k != 0 {
        return ClassificationResult::none(q, order);
    }
    let t = gcd(m, order / k);
    let l = lcm(m, order / k);
    let count = if orientable {
        if order == 2 * l && (t % 2 == 1 || (order / (2 * t)) % 2 == 0) {
            ceil_half(euler_phi(t))
        } else {
            0
        }
    } else if order == l && (order / t) % 2 == 1 {
        if order % 2 == 0 {
            euler_phi(t)
        } else {
            ceil_half(euler_phi(t))
        }
    } else {
        0
    };
    if count == 0 {
        return ClassificationResult::none(q, order);
    }
    let p = genus_of(&q, order);
    let action = if orientable { ActionSense::Reversing } else { ActionSense::Unoriented };
    ClassificationResult::new(q, order, vec![real(surface(orientable, p, k), action, count)])
}

/// Class count for the 2-punctured disc with cone orders `m`, `n` and `k` boundary components.
fn d21_count(m: u64, n: u64, k: u64) -> u64 {
    let order = lcm(m, n);
    let t = gcd(m, n);
    if k == 0 || (t / gcd(t, order / t)) % k != 0 || gcd(k, order / t) != 1 {
        return 0;
    }
    if order % 2 == 0 && (order / t) % 2 == 1 && k % 2 == 1 {
        return 0;
    }
    let c = biggest_coprime_divisor(t / k, order * k / t);
    let v = euler_phi(t / (k * c)) * psi_checked(c);
    if m != n {
        return v;
    }
    // Swapping the cone points pairs up the classes except those fixed by b -> b^-1.
    let f = d21_swap_fixed(n, k);
    assert!((v + f) % 2 == 0, "swap orbits do not pair up");
    (v + f) / 2
}

/// Number of `b` in `Z_n` with `b^2 = 1` and `gcd(1 + b, n) = k`, computed prime by prime.
fn d21_swap_fixed(n: u64, k: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| {
            let full = p.pow(e);
            let kp = gcd(k, full);
            match (p, e) {
                (2, 1) => u64::from(kp == 2),
                (2, 2) => u64::from(kp >= 2),
                (2, _) if kp == 2 => 2,
                (2, _) => u64::from(kp == full || kp == full / 2),
                _ => u64::from(kp == 1 || kp == full),
            }
        })
        .product()
}

/// 2-punctured disc with cone orders `m`, `n`; the order is forced to `lcm(m, n)`.
pub fn classify_d21(m: u64, n: u64, k: u64) -> ClassificationResult {
    let (m, n) = (m.min(n), m.max(n));
    let q = QuotientType::D21 { m, n };
    let order = lcm(m, n);
    if q.validate().is_err() {
        return ClassificationResult::none(q, order);
    }
    let count = d21_count(m, n, k);
    if count == 0 {
        return ClassificationResult::none(q, order);
    }
    let p = genus_of(&q, order);
    ClassificationResult::new(q, order, vec![real(surface(true, p, k), ActionSense::Preserving, count)])
}

/// Orientable type-2 count for one unordered split `{n, k - n}`.
fn ann1_type2_count(order: u64, m: u64, k: u64, n: u64) -> u64 {
    let r = k - n;
    if order % m != 0 || m % n != 0 || m % r != 0 {
        return 0;
    }
    let a3 = order / m;
    if gcd(a3, n) != 1 || gcd(a3, r) != 1 || gcd(n, r) != 1 {
        return 0;
    }
    if order % 2 == 0 && a3 % 2 == 1 && n % 2 == 1 && r % 2 == 1 {
        return 0;
    }
    let nr = n * r;
    let c = biggest_coprime_divisor(m / nr, order * nr / m);
    let v = euler_phi(m / (c * nr)) * psi_checked(c);
    if k != 2 {
        return v;
    }
    // With both connectors of order N, swapping the boundaries pairs up the classes
    // except those fixed by x -> -x / (1 + x).
    let f = ann1_swap_fixed(order, m);
    assert!((v + f) % 2 == 0, "swap orbits do not pair up");
    (v + f) / 2
}

/// Number of `x` of order `m` in `Z_N` with `x (x + 2) = 0`, computed prime by prime.
fn ann1_swap_fixed(order: u64, m: u64) -> u64 {
    factorize(order)
        .into_iter()
        .map(|(p, a)| {
            let b = factorize(m).into_iter().find(|&(q, _)| q == p).map_or(0, |(_, e)| e);
            match (p, a) {
                (2, 1) => u64::from(b == 0),
                (2, 2) => u64::from(b <= 1),
                (2, _) if b == a - 1 => 2,
                (2, _) => u64::from(b <= 1),
                _ => u64::from(b == 0 || b == a),
            }
        })
        .product()
}

/// 1-punctured annulus with cone order `m`, `k` boundary components.
///
/// Orientable results are itemized by type. Non-orientable covers need an even order:
/// for odd `N` both reflections lie in the kernel and every cover is orientable.
pub fn classify_ann1(order: u64, m: u64, k: u64, orientable: bool) -> ClassificationResult {
    let q = QuotientType::Ann1 { m };
    if m < 2 || k == 0 {
        return ClassificationResult::none(q, order);
    }
    let p = match q.signature().kernel_algebraic_genus(order) {
        Ok(p) => p,
        Err(_) => return ClassificationResult::none(q, order),
    };
    let mut rs = Vec::new();
    if !orientable {
        if order % 2 == 0 && order % k == 0 && order == lcm(m, order / k) {
            let t = gcd(m, order / k);
            rs.push(real(surface(false, p, k), ActionSense::Unoriented, euler_phi(t)));
        }
        return ClassificationResult::new(q, order, rs);
    }
    if order % k == 0 && order == 2 * lcm(m, order / k) && (order / 2) % 2 == 1 {
        let t = gcd(m, order / k);
        rs.push(Realization {
            surface: surface(true, p, k),
            action: ActionSense::Reversing,
            classes: euler_phi(t),
            part: Some(Ann1Part::Type1),
        });
    }
    for n in 1..=k / 2 {
        let classes = ann1_type2_count(order, m, k, n);
        if classes > 0 {
            rs.push(Realization {
                surface: surface(true, p, k),
                action: ActionSense::Preserving,
                classes,
                part: Some(Ann1Part::Type2 { n, complement: k - n }),
            });
        }
    }
    ClassificationResult::new(q, order, rs)
}

/// 3-punctured disc with cone orders `2, 2, m` or `2, 3, m`.
pub fn classify_triangle(q: QuotientType) -> Result<ClassificationResult> {
    q.validate()?;
    let QuotientType::D3 { n, m } = q else {
        return Err(Error::InvalidQuotient(format!("{} is not d3", q.id())));
    };
    let order = lcm(lcm(2, n), m);
    let p = genus_of(&q, order);
    let gk: Vec<(u64, u64)> = match (n, m) {
        (2, _) => vec![(1 + (m - 2) * order / (2 * m), order / m)],
        (3, 3) => vec![(3, 1), (2, 3)],
        (3, 4) => vec![(6, 1)],
        _ => vec![(15, 1)],
    };
    let rs = gk
        .into_iter()
        .map(|(g, k)| {
            let s = surface(true, p, k);
            assert_eq!(s.genus, g, "genus formula disagrees with the area");
            real(s, ActionSense::Preserving, 1)
        })
        .collect();
    Ok(ClassificationResult::new(q, order, rs))
}

/// 2-punctured disc with two corners, cone orders `2, m` or `3, m`.
pub fn classify_corner_pair(q: QuotientType) -> Result<ClassificationResult> {
    q.validate()?;
    let QuotientType::D2c { n, m } = q else {
        return Err(Error::InvalidQuotient(format!("{} is not d2c", q.id())));
    };
    let order = lcm(lcm(2, n), m);
    let p = genus_of(&q, order);
    let k = order / 2;
    let (orientable, g, classes) = match (n, m) {
        (2, _) => (false, 2 + (m - 2) * order / (2 * m), 1),
        (3, 3) => (true, 2, 2),
        (3, 4) => (false, 7, 1),
        _ => (true, 8, 1),
    };
    let s = surface(orientable, p, k);
    assert_eq!(s.genus, g, "genus formula disagrees with the area");
    let action = if orientable { ActionSense::Reversing } else { ActionSense::Unoriented };
    Ok(ClassificationResult::new(q, order, vec![real(s, action, classes)]))
}

/// All actions of order `order` with quotient `q`, over every boundary count and orientability.
pub fn classify(q: QuotientType, order: u64) -> Result<ClassificationResult> {
    q.validate()?;
    let forced = |r: ClassificationResult| {
        if r.order == order {
            r
        } else {
            ClassificationResult::none(q, order)
        }
    };
    Ok(match q {
        QuotientType::D6 | QuotientType::Ann2 | QuotientType::Mb2 => classify_corner_only(q, order)?,
        QuotientType::D12 { .. } | QuotientType::D14 { .. } => forced(classify_disc_corners(q)?),
        QuotientType::D3 { .. } => forced(classify_triangle(q)?),
        QuotientType::D2c { .. } => forced(classify_corner_pair(q)?),
        QuotientType::D21 { m, n } => {
            if lcm(m, n) != order {
                ClassificationResult::none(q, order)
            } else {
                let rs = divisors(gcd(m, n))
                    .into_iter()
                    .flat_map(|k| classify_d21(m, n, k).realizations)
                    .collect();
                ClassificationResult::new(q, order, rs)
            }
        }
        QuotientType::Mb1 { m } => {
            let rs = divisors(order)
                .into_iter()
                .flat_map(|k| {
                    let mut v = classify_mb1(order, m, k, true).realizations;
                    v.extend(classify_mb1(order, m, k, false).realizations);
                    v
                })
                .collect();
            ClassificationResult::new(q, order, rs)
        }
        QuotientType::Ann1 { m } => {
            let rs = (1..=2 * order)
                .flat_map(|k| {
                    let mut v = classify_ann1(order, m, k, true).realizations;
                    v.extend(classify_ann1(order, m, k, false).realizations);
                    v
                })
                .collect();
            ClassificationResult::new(q, order, rs)
        }
    })
}
