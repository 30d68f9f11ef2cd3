//! NEC signatures and the quantities derived from them.

mod catalog;

pub use catalog::{
    admissible_signatures_below_unit_area, large_action_catalog, Family, QuotientType, ALL_FAMILIES, CLI_IDS,
};

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// 2 for orientable quotients, 1 otherwise.
    pub fn epsilon(self) -> i64 {
        match self {
            Sign::Plus => 2,
            Sign::Minus => 1,
        }
    }
}

/// `(g; ±; [m_1, ..., m_r]; {C_1, ..., C_k})`.
///
/// An empty cycle is `vec![]`; a signature with no cycles at all has an empty `period_cycles`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NecSignature {
    pub orbit_genus: u64,
    pub sign: Sign,
    pub proper_periods: Vec<u64>,
    pub period_cycles: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FuchsianSignature {
    pub genus: u64,
    pub periods: Vec<u64>,
}

impl FuchsianSignature {
    pub fn area(&self) -> Ratio<i64> {
        let mut a = Ratio::from_integer(2 * self.genus as i64 - 2);
        for &m in &self.periods {
            a += Ratio::one() - Ratio::new(1, m as i64);
        }
        a
    }
}

impl fmt::Display for FuchsianSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.periods.is_empty() {
            return write!(f, "({}; -)", self.genus);
        }
        let ps: Vec<String> = self.periods.iter().map(u64::to_string).collect();
        write!(f, "({}; {})", self.genus, ps.join(", "))
    }
}

impl NecSignature {
    pub fn new(
        orbit_genus: u64,
        sign: Sign,
        proper_periods: Vec<u64>,
        period_cycles: Vec<Vec<u64>>,
    ) -> Result<Self> {
        let sig = NecSignature {
            orbit_genus,
            sign,
            proper_periods,
            period_cycles,
        };
        sig.validate()?;
        Ok(sig)
    }

    fn validate(&self) -> Result<()> {
        if self.sign == Sign::Minus && self.orbit_genus == 0 {
            return Err(Error::InvalidSignature(format!("{self}: sign - needs genus >= 1")));
        }
        let bad_period = self
            .proper_periods
            .iter()
            .chain(self.period_cycles.iter().flatten())
            .any(|&m| m < 2);
        if bad_period {
            return Err(Error::InvalidSignature(format!("{self}: periods must be >= 2")));
        }
        if self.area() <= Ratio::zero() {
            return Err(Error::InvalidSignature(format!("{self}: area is not positive")));
        }
        Ok(())
    }

    pub fn epsilon(&self) -> i64 {
        self.sign.epsilon()
    }

    pub fn cycle_count(&self) -> usize {
        self.period_cycles.len()
    }

    /// Normalized hyperbolic area, i.e. area divided by 2π.
    pub fn area(&self) -> Ratio<i64> {
        let mut a = Ratio::from_integer(
            self.epsilon() * self.orbit_genus as i64 + self.period_cycles.len() as i64 - 2,
        );
        for &m in &self.proper_periods {
            a += Ratio::one() - Ratio::new(1, m as i64);
        }
        for &n in self.period_cycles.iter().flatten() {
            a += (Ratio::one() - Ratio::new(1, n as i64)) / 2;
        }
        a
    }

    /// Algebraic genus of a bordered surface kernel of index `order`.
    pub fn kernel_algebraic_genus(&self, order: u64) -> Result<u64> {
        let p = self.area() * Ratio::from_integer(order as i64) + Ratio::one();
        if !p.is_integer() || *p.numer() < 0 {
            return Err(Error::NonIntegralGenus {
                signature: self.to_string(),
                order,
            });
        }
        Ok(p.to_integer() as u64)
    }

    pub fn canonical_fuchsian(&self) -> FuchsianSignature {
        let genus = (self.epsilon() as u64) * self.orbit_genus + self.period_cycles.len() as u64 - 1;
        let mut periods = Vec::new();
        for &m in &self.proper_periods {
            periods.push(m);
            periods.push(m);
        }
        periods.extend(self.period_cycles.iter().flatten().copied());
        FuchsianSignature { genus, periods }
    }

    /// Whether a cyclic group of order `order` can act with this quotient and a bordered kernel,
    /// as far as the cycle shape is concerned.
    pub fn is_admissible_quotient(&self, order: u64) -> bool {
        if self.period_cycles.is_empty() {
            return false;
        }
        self.period_cycles.iter().all(|cycle| {
            cycle.is_empty() || (order % 2 == 0 && cycle.len() % 2 == 0 && cycle.iter().all(|&n| n == 2))
        })
    }

    /// Sorted proper periods and cycles, so equal quotients compare equal.
    pub fn canonical(&self) -> Self {
        let mut s = self.clone();
        s.proper_periods.sort_unstable();
        s.period_cycles.sort();
        s
    }
}

impl fmt::Display for NecSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let cycles: Vec<String> = self
            .period_cycles
            .iter()
            .map(|c| format!("({})", join(c)))
            .collect();
        write!(
            f,
            "({};{};[{}];{{{}}})",
            self.orbit_genus,
            sign,
            join(&self.proper_periods),
            cycles.join(",")
        )
    }
}

fn syntax(input: &str, reason: &str) -> Error {
    Error::SignatureSyntax {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_list(input: &str, body: &str) -> Result<Vec<u64>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| syntax(input, "bad integer")))
        .collect()
}

impl FromStr for NecSignature {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.replace('−', "-").chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| syntax(input, "expected outer parentheses"))?;
        let parts: Vec<&str> = inner.splitn(4, ';').collect();
        if parts.len() != 4 {
            return Err(syntax(input, "expected four ';'-separated fields"));
        }
        let genus = parts[0].parse().map_err(|_| syntax(input, "bad genus"))?;
        let sign = match parts[1] {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            _ => return Err(syntax(input, "sign must be + or -")),
        };
        let periods = parts[2]
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| syntax(input, "periods must be in [...]"))?;
        let periods = parse_list(input, periods)?;
        let cycles = parts[3]
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| syntax(input, "cycles must be in {...}"))?;
        let mut period_cycles = Vec::new();
        let mut rest = cycles;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| syntax(input, "cycle must start with ("))?;
            let close = open.find(')').ok_or_else(|| syntax(input, "unclosed cycle"))?;
            period_cycles.push(parse_list(input, &open[..close])?);
            rest = &open[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                rest = r;
            } else if !rest.is_empty() {
                return Err(syntax(input, "cycles must be separated by ','"));
            }
        }
        NecSignature::new(genus, sign, periods, period_cycles)
    }
}

impl TryFrom<String> for NecSignature {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
