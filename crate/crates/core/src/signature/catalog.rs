use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{NecSignature, Sign};
use crate::error::{Error, Result};

/// The ten quotient orbifolds of large cyclic actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    D6,
    Ann2,
    Mb2,
    D12,
    D14,
    Mb1,
    D21,
    Ann1,
    D3,
    D2c,
}

pub const ALL_FAMILIES: [Family; 10] = [
    Family::D6,
    Family::Ann2,
    Family::Mb2,
    Family::D12,
    Family::D14,
    Family::Mb1,
    Family::D21,
    Family::Ann1,
    Family::D3,
    Family::D2c,
];

impl Family {
    pub fn id(self) -> &'static str {
        match self {
            Family::D6 => "d6",
            Family::Ann2 => "ann2",
            Family::Mb2 => "mb2",
            Family::D12 => "d12",
            Family::D14 => "d14",
            Family::Mb1 => "mb1",
            Family::D21 => "d21",
            Family::Ann1 => "ann1",
            Family::D3 => "d3",
            Family::D2c => "d2c",
        }
    }

    pub fn template(self) -> &'static str {
        match self {
            Family::D6 => "(0;+;[];{(2,2,2,2,2,2)})",
            Family::Ann2 => "(0;+;[];{(),(2,2)})",
            Family::Mb2 => "(1;-;[];{(2,2)})",
            Family::D12 => "(0;+;[m];{(2,2)})",
            Family::D14 => "(0;+;[m];{(2,2,2,2)})",
            Family::Mb1 => "(1;-;[m];{()})",
            Family::D21 => "(0;+;[m,n];{()})",
            Family::Ann1 => "(0;+;[m];{(),()})",
            Family::D3 => "(0;+;[2,n,m];{()}), n=2, or n=3 and m=3,4,5",
            Family::D2c => "(0;+;[n,m];{(2,2)}), n=2, or n=3 and m=3,4,5",
        }
    }

    /// Every valid parameter choice with all periods at most `max_period`.
    pub fn instances(self, max_period: u64) -> Vec<QuotientType> {
        let ms = || 2..=max_period;
        let mut out = Vec::new();
        match self {
            Family::D6 => out.push(QuotientType::D6),
            Family::Ann2 => out.push(QuotientType::Ann2),
            Family::Mb2 => out.push(QuotientType::Mb2),
            Family::D12 => out.extend(ms().map(|m| QuotientType::D12 { m })),
            Family::D14 => out.extend(ms().map(|m| QuotientType::D14 { m })),
            Family::Mb1 => out.extend(ms().map(|m| QuotientType::Mb1 { m })),
            Family::Ann1 => out.extend(ms().map(|m| QuotientType::Ann1 { m })),
            Family::D21 => {
                for m in ms() {
                    for n in m..=max_period {
                        out.push(QuotientType::D21 { m, n });
                    }
                }
            }
            Family::D3 | Family::D2c => {
                for n in [2, 3] {
                    for m in ms() {
                        let q = if self == Family::D3 {
                            QuotientType::D3 { n, m }
                        } else {
                            QuotientType::D2c { n, m }
                        };
                        out.push(q);
                    }
                }
            }
        }
        out.retain(|q| q.validate().is_ok());
        out
    }

    /// Valid parameter choices whose periods all divide `order`.
    pub fn instances_dividing(self, order: u64) -> Vec<QuotientType> {
        self.instances(order)
            .into_iter()
            .filter(|q| q.periods().iter().all(|&m| order % m == 0))
            .collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One family together with its cone orders.
///
/// `D3 { n, m }` is `[2, n, m]` and `D2c { n, m }` is `[n, m]` with a `(2,2)` cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum QuotientType {
    D6,
    Ann2,
    Mb2,
    D12 { m: u64 },
    D14 { m: u64 },
    Mb1 { m: u64 },
    D21 { m: u64, n: u64 },
    Ann1 { m: u64 },
    D3 { n: u64, m: u64 },
    D2c { n: u64, m: u64 },
}

impl QuotientType {
    pub fn new(q: QuotientType) -> Result<Self> {
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidQuotient(format!("{}: {why}", self.id())));
        match *self {
            QuotientType::D6 | QuotientType::Ann2 | QuotientType::Mb2 => Ok(()),
            QuotientType::D12 { m } if m < 3 => bad("m must be at least 3"),
            QuotientType::D14 { m } | QuotientType::Mb1 { m } | QuotientType::Ann1 { m } if m < 2 => {
                bad("m must be at least 2")
            }
            QuotientType::D21 { m, n } if m < 2 || n < 2 || (m == 2 && n == 2) => {
                bad("need 1/m + 1/n < 1")
            }
            QuotientType::D3 { n, m } | QuotientType::D2c { n, m } => match n {
                2 if m >= 2 => Ok(()),
                3 if (3..=5).contains(&m) => Ok(()),
                2 => bad("m must be at least 2"),
                3 => bad("m must be 3, 4 or 5 when n = 3"),
                _ => bad("n must be 2 or 3"),
            },
            _ => Ok(()),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            QuotientType::D6 => Family::D6,
            QuotientType::Ann2 => Family::Ann2,
            QuotientType::Mb2 => Family::Mb2,
            QuotientType::D12 { .. } => Family::D12,
            QuotientType::D14 { .. } => Family::D14,
            QuotientType::Mb1 { .. } => Family::Mb1,
            QuotientType::D21 { .. } => Family::D21,
            QuotientType::Ann1 { .. } => Family::Ann1,
            QuotientType::D3 { .. } => Family::D3,
            QuotientType::D2c { .. } => Family::D2c,
        }
    }

    /// Short command-line id, with the subcase for the two split families.
    pub fn id(&self) -> &'static str {
        match self {
            QuotientType::D3 { n: 3, .. } => "d3-23m",
            QuotientType::D3 { .. } => "d3-22m",
            QuotientType::D2c { n: 3, .. } => "d2c-3m",
            QuotientType::D2c { .. } => "d2c-2m",
            q => q.family().id(),
        }
    }

    /// Proper periods in the order of the elliptic generators.
    pub fn periods(&self) -> Vec<u64> {
        match *self {
            QuotientType::D6 | QuotientType::Ann2 | QuotientType::Mb2 => vec![],
            QuotientType::D12 { m }
            | QuotientType::D14 { m }
            | QuotientType::Mb1 { m }
            | QuotientType::Ann1 { m } => vec![m],
            QuotientType::D21 { m, n } => vec![m, n],
            QuotientType::D3 { n, m } => vec![2, n, m],
            QuotientType::D2c { n, m } => vec![n, m],
        }
    }

    pub fn signature(&self) -> NecSignature {
        let two = |s: usize| vec![2u64; s];
        let (g, sign, cycles) = match self {
            QuotientType::D6 => (0, Sign::Plus, vec![two(6)]),
            QuotientType::Ann2 => (0, Sign::Plus, vec![vec![], two(2)]),
            QuotientType::Mb2 => (1, Sign::Minus, vec![two(2)]),
            QuotientType::D12 { .. } | QuotientType::D2c { .. } => (0, Sign::Plus, vec![two(2)]),
            QuotientType::D14 { .. } => (0, Sign::Plus, vec![two(4)]),
            QuotientType::Mb1 { .. } => (1, Sign::Minus, vec![vec![]]),
            QuotientType::D21 { .. } | QuotientType::D3 { .. } => (0, Sign::Plus, vec![vec![]]),
            QuotientType::Ann1 { .. } => (0, Sign::Plus, vec![vec![], vec![]]),
        };
        NecSignature {
            orbit_genus: g,
            sign,
            proper_periods: self.periods(),
            period_cycles: cycles,
        }
    }

    pub fn area(&self) -> Ratio<i64> {
        self.signature().area()
    }

    /// Recognizes a catalog signature, in any period order.
    pub fn from_signature(sig: &NecSignature) -> Result<Self> {
        let c = sig.canonical();
        let cycles: Vec<usize> = c.period_cycles.iter().map(Vec::len).collect();
        if c.period_cycles.iter().flatten().any(|&n| n != 2) {
            return Err(Error::Unknown { what: "catalog signature", value: sig.to_string() });
        }
        let p = &c.proper_periods;
        let q = match (c.orbit_genus, c.sign, p.len(), cycles.as_slice()) {
            (0, Sign::Plus, 0, [6]) => QuotientType::D6,
            (0, Sign::Plus, 0, [0, 2]) => QuotientType::Ann2,
            (1, Sign::Minus, 0, [2]) => QuotientType::Mb2,
            (0, Sign::Plus, 1, [2]) => QuotientType::D12 { m: p[0] },
            (0, Sign::Plus, 1, [4]) => QuotientType::D14 { m: p[0] },
            (1, Sign::Minus, 1, [0]) => QuotientType::Mb1 { m: p[0] },
            (0, Sign::Plus, 2, [0]) => QuotientType::D21 { m: p[0], n: p[1] },
            (0, Sign::Plus, 1, [0, 0]) => QuotientType::Ann1 { m: p[0] },
            (0, Sign::Plus, 3, [0]) if p[0] == 2 => QuotientType::D3 { n: p[1], m: p[2] },
            (0, Sign::Plus, 2, [2]) => QuotientType::D2c { n: p[0], m: p[1] },
            _ => {
                return Err(Error::Unknown { what: "catalog signature", value: sig.to_string() });
            }
        };
        q.validate()
            .map_err(|_| Error::Unknown { what: "catalog signature", value: sig.to_string() })?;
        Ok(q)
    }

    /// Builds a quotient from a command-line id and optional cone orders.
    pub fn from_id(id: &str, m: Option<u64>, n: Option<u64>) -> Result<Self> {
        let need = |v: Option<u64>, name: &str| {
            v.ok_or_else(|| Error::InvalidQuotient(format!("{id} needs --{name}")))
        };
        let q = match id {
            "d6" => QuotientType::D6,
            "ann2" => QuotientType::Ann2,
            "mb2" => QuotientType::Mb2,
            "d12" => QuotientType::D12 { m: need(m, "m")? },
            "d14" => QuotientType::D14 { m: need(m, "m")? },
            "mb1" => QuotientType::Mb1 { m: need(m, "m")? },
            "ann1" => QuotientType::Ann1 { m: need(m, "m")? },
            "d21" => QuotientType::D21 { m: need(m, "m")?, n: need(n, "n")? },
            "d3-22m" => QuotientType::D3 { n: 2, m: need(m, "m")? },
            "d3-23m" => QuotientType::D3 { n: 3, m: need(m, "m")? },
            "d2c-2m" => QuotientType::D2c { n: 2, m: need(m, "m")? },
            "d2c-3m" => QuotientType::D2c { n: 3, m: need(m, "m")? },
            other => return Err(Error::Unknown { what: "quotient id", value: other.to_string() }),
        };
        QuotientType::new(q)
    }
}

impl fmt::Display for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id(), self.signature())
    }
}

pub const CLI_IDS: [&str; 12] = [
    "d6", "ann2", "mb2", "d12", "d14", "mb1", "d21", "ann1", "d3-22m", "d3-23m", "d2c-2m", "d2c-3m",
];

pub fn large_action_catalog() -> Vec<Family> {
    ALL_FAMILIES.to_vec()
}

fn nondecreasing(len: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut tail in nondecreasing(len - 1, first, hi) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Every signature with a bordered-admissible cycle shape and `0 < area < 1`,
/// with proper periods up to `max_period`, in canonical form.
///
/// Built from the area bound alone so it can be compared with the hard-coded families.
pub fn admissible_signatures_below_unit_area(max_period: u64) -> BTreeSet<NecSignature> {
    let mut out = BTreeSet::new();
    for g in 0..=2u64 {
        for sign in [Sign::Plus, Sign::Minus] {
            if sign == Sign::Minus && g == 0 {
                continue;
            }
            for k in 1..=2usize {
                // the constant part of the area must stay below 1
                if sign.epsilon() * g as i64 + k as i64 - 2 >= 1 {
                    continue;
                }
                for r in 0..=3usize {
                    for periods in nondecreasing(r, 2, max_period) {
                        // cycle lengths are even, and their contribution s/4 stays below 2
                        for lens in nondecreasing(k, 0, 3) {
                            let cycles: Vec<Vec<u64>> = lens.iter().map(|&h| vec![2; 2 * h as usize]).collect();
                            let s = NecSignature {
                                orbit_genus: g,
                                sign,
                                proper_periods: periods.clone(),
                                period_cycles: cycles,
                            };
                            let a = s.area();
                            if a > Ratio::zero() && a < Ratio::one() {
                                out.insert(s.canonical());
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
