//! Minimum genus for a given order and maximum order for a given genus.
//!
//! Each problem is answered twice: from closed forms, and by scanning the catalog with
//! [`classify`]. The scan is exhaustive as long as the answer satisfies `N > p - 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, Realization};
use crate::error::{Error, Result};
use crate::signature::{QuotientType, ALL_FAMILIES};
use crate::surface::{ActionSense, SurfaceTopology};
use crate::zmod::{is_prime, smallest_prime_factor};

/// Largest order the catalog scan will look at.
pub const SEARCH_BOUND: u64 = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MinGenusVariant {
    #[serde(rename = "p")]
    Any,
    #[serde(rename = "p+")]
    Orientable,
    #[serde(rename = "p-")]
    NonOrientable,
    #[serde(rename = "p++")]
    Preserving,
    #[serde(rename = "p+-")]
    Reversing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MaxOrderVariant {
    #[serde(rename = "N")]
    Any,
    #[serde(rename = "N+")]
    Orientable,
    #[serde(rename = "N-")]
    NonOrientable,
    #[serde(rename = "N++")]
    Preserving,
    #[serde(rename = "N+-")]
    Reversing,
}

/// The surface class a variant ranges over. Shared by both problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Constraint {
    Any,
    Orientable,
    NonOrientable,
    Preserving,
    Reversing,
}

impl Constraint {
    fn admits(self, r: &Realization) -> bool {
        match self {
            Constraint::Any => true,
            Constraint::Orientable => r.surface.orientable,
            Constraint::NonOrientable => !r.surface.orientable,
            Constraint::Preserving => r.action == ActionSense::Preserving,
            Constraint::Reversing => r.action == ActionSense::Reversing,
        }
    }
}

impl MinGenusVariant {
    pub const ALL: [MinGenusVariant; 5] = [
        MinGenusVariant::Any,
        MinGenusVariant::Orientable,
        MinGenusVariant::NonOrientable,
        MinGenusVariant::Preserving,
        MinGenusVariant::Reversing,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MinGenusVariant::Any => "p",
            MinGenusVariant::Orientable => "p+",
            MinGenusVariant::NonOrientable => "p-",
            MinGenusVariant::Preserving => "p++",
            MinGenusVariant::Reversing => "p+-",
        }
    }

    fn constraint(self) -> Constraint {
        match self {
            MinGenusVariant::Any => Constraint::Any,
            MinGenusVariant::Orientable => Constraint::Orientable,
            MinGenusVariant::NonOrientable => Constraint::NonOrientable,
            MinGenusVariant::Preserving => Constraint::Preserving,
            MinGenusVariant::Reversing => Constraint::Reversing,
        }
    }
}

impl MaxOrderVariant {
    pub const ALL: [MaxOrderVariant; 5] = [
        MaxOrderVariant::Any,
        MaxOrderVariant::Orientable,
        MaxOrderVariant::NonOrientable,
        MaxOrderVariant::Preserving,
        MaxOrderVariant::Reversing,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MaxOrderVariant::Any => "N",
            MaxOrderVariant::Orientable => "N+",
            MaxOrderVariant::NonOrientable => "N-",
            MaxOrderVariant::Preserving => "N++",
            MaxOrderVariant::Reversing => "N+-",
        }
    }

    fn constraint(self) -> Constraint {
        match self {
            MaxOrderVariant::Any => Constraint::Any,
            MaxOrderVariant::Orientable => Constraint::Orientable,
            MaxOrderVariant::NonOrientable => Constraint::NonOrientable,
            MaxOrderVariant::Preserving => Constraint::Preserving,
            MaxOrderVariant::Reversing => Constraint::Reversing,
        }
    }
}

impl fmt::Display for MinGenusVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.id())
    }
}

impl fmt::Display for MaxOrderVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.id())
    }
}

impl FromStr for MinGenusVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('−', "-");
        MinGenusVariant::ALL
            .into_iter()
            .find(|v| v.id() == s)
            .ok_or(Error::Unknown { what: "min-genus variant", value: s })
    }
}

impl FromStr for MaxOrderVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('−', "-");
        MaxOrderVariant::ALL
            .into_iter()
            .find(|v| v.id() == s)
            .ok_or(Error::Unknown { what: "max-order variant", value: s })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "kebab-case")]
pub enum Query {
    MinGenus {
        variant: MinGenusVariant,
        #[serde(rename = "N")]
        order: u64,
    },
    MaxOrder {
        variant: MaxOrderVariant,
        #[serde(rename = "p")]
        genus: u64,
    },
}

/// One quotient type realizing an extremal value on one surface.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Realizer {
    pub quotient: QuotientType,
    #[serde(rename = "N")]
    pub order: u64,
    pub surface: SurfaceTopology,
    pub action: ActionSense,
    pub classes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalAnswer {
    pub query: Query,
    pub value: u64,
    pub realizers: Vec<Realizer>,
}

impl ExtremalAnswer {
    fn new(query: Query, value: u64, realizers: Vec<Realizer>) -> Self {
        // merge itemized parts of the same quotient and surface
        let mut merged: BTreeMap<(QuotientType, u64, SurfaceTopology, ActionSense), u64> = BTreeMap::new();
        for r in realizers {
            *merged.entry((r.quotient, r.order, r.surface, r.action)).or_insert(0) += r.classes;
        }
        let realizers = merged
            .into_iter()
            .map(|((quotient, order, surface, action), classes)| Realizer { quotient, order, surface, action, classes })
            .collect();
        ExtremalAnswer { query, value, realizers }
    }

    pub fn class_count(&self) -> u64 {
        self.realizers.iter().map(|r| r.classes).sum()
    }

    /// Class counts per surface and action, summed over quotient types.
    pub fn by_surface(&self) -> BTreeMap<(SurfaceTopology, ActionSense), u64> {
        let mut out = BTreeMap::new();
        for r in &self.realizers {
            *out.entry((r.surface, r.action)).or_insert(0) += r.classes;
        }
        out
    }
}

fn realizer(q: QuotientType, order: u64, orientable: bool, p: u64, k: u64, classes: u64) -> Realizer {
    let surface = SurfaceTopology::from_invariants(orientable, p, k)
        .unwrap_or_else(|e| panic!("closed-form realizer {q} at N = {order}: {e}"));
    let action = if !orientable {
        ActionSense::Unoriented
    } else if matches!(q, QuotientType::D21 { .. } | QuotientType::D3 { .. } | QuotientType::Ann1 { .. }) {
        // every realizer of these families used below keeps the reflections in the kernel
        ActionSense::Preserving
    } else {
        ActionSense::Reversing
    };
    Realizer { quotient: q, order, surface, action, classes }
}

/// `Z_2` on algebraic genus 2, one entry per quotient and surface.
fn order_two_realizers() -> Vec<Realizer> {
    use QuotientType::*;
    let r = |q, orientable, k| realizer(q, 2, orientable, 2, k, 1);
    vec![
        r(D3 { n: 2, m: 2 }, true, 1),
        r(Ann1 { m: 2 }, true, 3),
        r(Ann2, true, 1),
        r(Ann2, true, 3),
        r(Mb2, true, 1),
        r(D6, true, 3),
        r(Ann2, false, 1),
        r(Ann2, false, 2),
        r(Mb2, false, 1),
        r(D14 { m: 2 }, false, 2),
        r(Mb1 { m: 2 }, false, 1),
        r(Ann1 { m: 2 }, false, 1),
        r(Ann1 { m: 2 }, false, 2),
        r(D2c { n: 2, m: 2 }, false, 1),
    ]
}

fn check_order(order: u64) -> Result<()> {
    if order < 2 {
        return Err(Error::InvalidArgument(format!("N must be at least 2, got {order}")));
    }
    Ok(())
}

fn check_genus(genus: u64) -> Result<()> {
    if genus < 2 {
        return Err(Error::InvalidArgument(format!("p must be at least 2, got {genus}")));
    }
    Ok(())
}

/// Closed-form `(value, realizers)` for the four signed minimum-genus variants.
fn min_genus_signed(order: u64, variant: MinGenusVariant) -> Result<(u64, Vec<Realizer>)> {
    use MinGenusVariant::*;
    use QuotientType::*;
    let n = order;
    let undefined = || Error::UndefinedVariant { variant: variant.id().into(), order };
    if n == 2 {
        let all = order_two_realizers();
        let c = variant.constraint();
        let rs = all.into_iter().filter(|r| admitted(c, r)).collect();
        return Ok((2, rs));
    }
    if n % 2 == 1 {
        let q = smallest_prime_factor(n).expect("n > 1");
        return Ok(match variant {
            Reversing => return Err(undefined()),
            Orientable | Preserving if is_prime(n) => {
                let p = n - 1;
                let d = D21 { m: n, n };
                (p, vec![realizer(d, n, true, p, n, 1), realizer(d, n, true, p, 1, (n - 1) / 2)])
            }
            NonOrientable if is_prime(n) => {
                let p = n;
                let mb = Mb1 { m: n };
                (p, vec![realizer(mb, n, false, p, n, 1), realizer(mb, n, false, p, 1, (n - 1) / 2)])
            }
            Orientable | Preserving => {
                if n % (q * q) == 0 {
                    let p = (q - 1) * n / q;
                    (p, vec![realizer(D21 { m: q, n }, n, true, p, 1, q - 1)])
                } else {
                    let p = (q - 1) * (n - q) / q;
                    (p, vec![realizer(D21 { m: q, n: n / q }, n, true, p, 1, 1)])
                }
            }
            NonOrientable => {
                let p = (q - 1) * n / q + 1;
                let mb = Mb1 { m: q };
                let mut rs = vec![realizer(mb, n, false, p, 1, (q - 1) / 2)];
                if n % (q * q) != 0 {
                    rs.push(realizer(mb, n, false, p, q, 1));
                }
                (p, rs)
            }
            Any => unreachable!("handled by the caller"),
        });
    }
    let half = n / 2;
    Ok(match variant {
        Preserving | Orientable if n % 4 != 0 => {
            let pp = realizer(D21 { m: 2, n: half }, n, true, half - 1, 1, 1);
            let mut rs = vec![pp];
            if variant == Orientable {
                rs.push(realizer(D12 { m: half }, n, true, half - 1, half, 1));
            }
            (half - 1, rs)
        }
        Reversing if n % 4 != 0 => (half - 1, vec![realizer(D12 { m: half }, n, true, half - 1, half, 1)]),
        Preserving | Orientable => {
            let mut rs = vec![realizer(D21 { m: 2, n }, n, true, half, 1, 1)];
            // 1/3 + 1/4 = 1/2 + 1/12: the only other pair of cone orders reaching N/2
            if n == 12 {
                rs.push(realizer(D21 { m: 3, n: 4 }, n, true, half, 1, 1));
            }
            (half, rs)
        }
        Reversing => {
            let k = if n % 8 == 0 { 2 } else { 4 };
            (half + 1, vec![realizer(Mb1 { m: 2 }, n, true, half + 1, k, 1)])
        }
        NonOrientable => (half, vec![realizer(D12 { m: n }, n, false, half, half, 1)]),
        Any => unreachable!("handled by the caller"),
    })
}

/// Minimum algebraic genus of a bordered surface with a `Z_N` action of the given kind,
/// from the closed forms.
pub fn min_genus_closed(order: u64, variant: MinGenusVariant) -> Result<ExtremalAnswer> {
    check_order(order)?;
    let query = Query::MinGenus { variant, order };
    let (value, realizers) = if variant == MinGenusVariant::Any {
        let mut best: Option<(u64, Vec<Realizer>)> = None;
        let signed = if order % 2 == 1 {
            vec![MinGenusVariant::Preserving, MinGenusVariant::NonOrientable]
        } else {
            vec![
                MinGenusVariant::Preserving,
                MinGenusVariant::Reversing,
                MinGenusVariant::NonOrientable,
            ]
        };
        for v in signed {
            let (p, rs) = min_genus_signed(order, v)?;
            best = match best {
                Some((b, mut brs)) if b == p => {
                    brs.extend(rs);
                    Some((b, brs))
                }
                Some((b, brs)) if b < p => Some((b, brs)),
                _ => Some((p, rs)),
            };
        }
        best.expect("at least one variant")
    } else {
        min_genus_signed(order, variant)?
    };
    Ok(ExtremalAnswer::new(query, value, realizers))
}

/// Largest order of a cyclic action of the given kind on a surface of algebraic genus `genus`,
/// from the closed forms.
pub fn max_order_closed(genus: u64, variant: MaxOrderVariant) -> Result<ExtremalAnswer> {
    use MaxOrderVariant::*;
    use QuotientType::*;
    check_genus(genus)?;
    let p = genus;
    let even = p % 2 == 0;
    let minus = || (2 * p, vec![realizer(D12 { m: 2 * p }, 2 * p, false, p, p, 1)]);
    let plus_plus = || {
        if even {
            (2 * (p + 1), vec![realizer(D21 { m: 2, n: p + 1 }, 2 * (p + 1), true, p, 1, 1)])
        } else {
            // t = 2 and N/t = p odd force an even boundary count
            (2 * p, vec![realizer(D21 { m: 2, n: 2 * p }, 2 * p, true, p, 2, 1)])
        }
    };
    let plus_minus = || {
        if even {
            (2 * (p + 1), vec![realizer(D12 { m: p + 1 }, 2 * (p + 1), true, p, p + 1, 1)])
        } else {
            let k = if (p - 1) % 4 == 0 { 2 } else { 4 };
            (2 * (p - 1), vec![realizer(Mb1 { m: 2 }, 2 * (p - 1), true, p, k, 1)])
        }
    };
    let best = |parts: Vec<(u64, Vec<Realizer>)>| {
        let top = parts.iter().map(|(n, _)| *n).max().expect("nonempty");
        let rs = parts.into_iter().filter(|(n, _)| *n == top).flat_map(|(_, rs)| rs).collect();
        (top, rs)
    };
    let (value, realizers) = match variant {
        NonOrientable => minus(),
        Preserving => plus_plus(),
        Reversing => plus_minus(),
        Orientable => best(vec![plus_plus(), plus_minus()]),
        Any => best(vec![plus_plus(), plus_minus(), minus()]),
    };
    Ok(ExtremalAnswer::new(Query::MaxOrder { variant, genus }, value, realizers))
}

/// Every realization of order `order` over the whole catalog.
fn catalog_realizations(order: u64) -> Result<Vec<Realizer>> {
    let mut out = Vec::new();
    for f in ALL_FAMILIES {
        for q in f.instances_dividing(order) {
            let r = classify(q, order)?;
            out.extend(r.realizations.into_iter().map(|x| Realizer {
                quotient: q,
                order,
                surface: x.surface,
                action: x.action,
                classes: x.classes,
            }));
        }
    }
    Ok(out)
}

fn admitted(c: Constraint, r: &Realizer) -> bool {
    c.admits(&Realization { surface: r.surface, action: r.action, classes: r.classes, part: None })
}

/// Minimum genus found by scanning the catalog with the classification formulas.
pub fn min_genus_search(order: u64, variant: MinGenusVariant) -> Result<ExtremalAnswer> {
    check_order(order)?;
    if order > SEARCH_BOUND {
        return Err(Error::BoundExceeded { order, bound: SEARCH_BOUND });
    }
    let c = variant.constraint();
    let rs: Vec<Realizer> = catalog_realizations(order)?
        .into_iter()
        .filter(|r| admitted(c, r))
        .collect();
    let value = rs
        .iter()
        .map(|r| r.surface.algebraic_genus)
        .min()
        .ok_or_else(|| Error::UndefinedVariant { variant: variant.id().into(), order })?;
    if value > order {
        return Err(Error::CatalogInsufficient { order, genus: value });
    }
    let rs = rs.into_iter().filter(|r| r.surface.algebraic_genus == value).collect();
    Ok(ExtremalAnswer::new(Query::MinGenus { variant, order }, value, rs))
}

/// Maximum order found by scanning `N = 2p + 2, 2p + 1, ...` over the catalog.
pub fn max_order_search(genus: u64, variant: MaxOrderVariant) -> Result<ExtremalAnswer> {
    check_genus(genus)?;
    let top = 2 * genus + 2;
    if top > SEARCH_BOUND {
        return Err(Error::BoundExceeded { order: top, bound: SEARCH_BOUND });
    }
    let c = variant.constraint();
    // below N = p the catalog no longer covers every action
    for order in (genus..=top).rev() {
        let rs: Vec<Realizer> = catalog_realizations(order)?
            .into_iter()
            .filter(|r| r.surface.algebraic_genus == genus && admitted(c, r))
            .collect();
        if !rs.is_empty() {
            return Ok(ExtremalAnswer::new(Query::MaxOrder { variant, genus }, order, rs));
        }
    }
    Err(Error::CatalogInsufficient { order: genus, genus })
}
