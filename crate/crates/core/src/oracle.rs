//! Brute-force enumeration of smooth maps and orbit counting, used to check the closed forms.
//!
//! Inner automorphisms act trivially on maps into an abelian group, so orbits are taken
//! under unit multiplication together with a list of outer moves.

use std::collections::{BTreeMap, HashMap};

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bsk::{self, BskMap, Cycle, GeneratorKind, Presentation};
use crate::classify::{classify, ClassificationResult};
use crate::error::{Error, Result};
use crate::signature::{Family, QuotientType};
use crate::surface::{ActionSense, SurfaceTopology};
use crate::zmod::{additive_order, elements_of_order, units};

pub const DEFAULT_BOUND: u64 = 96;

/// A substitution of generators, stored as an integer matrix on image vectors.
///
/// Row `i` gives the new image of free generator `i` as a combination of old images.
/// Eliminated generators are recomputed after the substitution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutMove {
    pub name: String,
    pub matrix: Vec<Vec<i64>>,
}

impl AutMove {
    pub fn identity(pres: &Presentation) -> Self {
        let n = pres.generators.len();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        AutMove { name: "id".into(), matrix }
    }

    /// Builds a move from word substitutions; generators not listed are fixed.
    pub fn from_words(pres: &Presentation, name: &str, subs: &[(&str, &str)]) -> Result<Self> {
        let mut mv = AutMove::identity(pres);
        mv.name = name.to_string();
        for &(g, w) in subs {
            let i = pres
                .index(g)
                .ok_or_else(|| Error::BadMap(format!("move {name}: unknown generator {g}")))?;
            mv.matrix[i] = pres.word(w)?.coeffs;
        }
        Ok(mv)
    }

    pub fn apply(&self, pres: &Presentation, order: u64, images: &[u64]) -> Vec<u64> {
        let n = order as i128;
        let mut out: Vec<u64> = self
            .matrix
            .iter()
            .map(|row| {
                let s: i128 = row.iter().zip(images).map(|(&c, &v)| c as i128 * v as i128).sum();
                s.rem_euclid(n) as u64
            })
            .collect();
        pres.fill_derived(&mut out, order);
        out
    }
}

/// Rotates the reflections of a cornered cycle by one step.
fn cycle_shift(pres: &Presentation, reflections: &[usize], label: usize) -> AutMove {
    let mut mv = AutMove::identity(pres);
    mv.name = format!("shift{label}");
    let s = reflections.len() - 1;
    for j in 0..s {
        let src = reflections[(j + s - 1) % s];
        let dst = reflections[j];
        mv.matrix[dst] = (0..pres.generators.len()).map(|i| i64::from(i == src)).collect();
    }
    mv
}

/// Moves generating the outer automorphism group used for `q`, besides units.
pub fn moves_for(q: &QuotientType) -> Vec<AutMove> {
    let pres = bsk::presentation_of(q);
    let words: Vec<(&str, Vec<(&str, &str)>)> = match *q {
        QuotientType::Mb1 { .. } => vec![
            ("gamma", vec![("x", "x^-1"), ("d", "x^-1 d^-1 x")]),
            ("delta", vec![("d", "(d x)^-1"), ("c", "(d x)^-1 c (d x)")]),
        ],
        QuotientType::Ann1 { .. } => vec![
            ("alpha", vec![("x", "e1^-1 x^-1 e1"), ("e1", "e1^-1")]),
            ("beta", vec![("x", "e1^-1 x e1"), ("e1", "(x e1)^-1"), ("c1", "c2"), ("c2", "c1")]),
        ],
        QuotientType::D21 { m, n } => {
            let mut v = vec![("alpha", vec![("x1", "x1^-1"), ("x2", "x1 x2^-1 x1^-1")])];
            if m == n {
                v.push(("beta", vec![("x1", "x2"), ("x2", "x2^-1 x1 x2")]));
            }
            v
        }
        _ => vec![],
    };
    let mut out: Vec<AutMove> = words
        .into_iter()
        .map(|(name, subs)| AutMove::from_words(&pres, name, &subs).expect("move words parse"))
        .collect();
    for (i, cycle) in pres.cycles.iter().enumerate() {
        if let Cycle::Corners { reflections } = cycle {
            out.push(cycle_shift(&pres, reflections, i));
        }
    }
    out
}

fn search_domain(pres: &Presentation, order: u64, g: usize) -> Vec<u64> {
    let gen = &pres.generators[g];
    if gen.kind == GeneratorKind::Reflection {
        return if order % 2 == 0 { vec![0, order / 2] } else { vec![0] };
    }
    let exact = pres.torsion.iter().find(|t| {
        t.word.coeffs.iter().enumerate().all(|(i, &c)| c == i64::from(i == g))
    });
    match exact {
        Some(t) if order % t.order == 0 => elements_of_order(t.order, order),
        Some(_) => vec![],
        None => (0..order).collect(),
    }
}

/// Every smooth map for `(q, order)`, sorted by image vector.
pub fn enumerate_smooth(q: QuotientType, order: u64) -> Result<Vec<BskMap>> {
    enumerate_smooth_with(q, order, DEFAULT_BOUND, None)
}

/// Like [`enumerate_smooth`] with an explicit bound and, optionally, the order in which
/// free generators are assigned.
pub fn enumerate_smooth_with(
    q: QuotientType,
    order: u64,
    bound: u64,
    search_order: Option<&[usize]>,
) -> Result<Vec<BskMap>> {
    q.validate()?;
    if order > bound {
        return Err(Error::BoundExceeded { order, bound });
    }
    if order == 0 {
        return Err(Error::BadMap("N must be positive".into()));
    }
    let pres = bsk::presentation_of(&q);
    let free = match search_order {
        Some(s) => {
            let mut sorted = s.to_vec();
            sorted.sort_unstable();
            if sorted != pres.free_generators() {
                return Err(Error::BadMap("search order must permute the free generators".into()));
            }
            s.to_vec()
        }
        None => pres.free_generators(),
    };
    let domains: Vec<Vec<u64>> = free.iter().map(|&g| search_domain(&pres, order, g)).collect();
    let mut images = vec![0; pres.generators.len()];
    let mut found = Vec::new();
    assign(&pres, order, &free, &domains, 0, &mut images, &mut found);
    found.sort();
    found.dedup();
    Ok(found
        .into_iter()
        .map(|images| BskMap { quotient: q, order, images })
        .collect())
}

fn assign(
    pres: &Presentation,
    order: u64,
    free: &[usize],
    domains: &[Vec<u64>],
    depth: usize,
    images: &mut Vec<u64>,
    found: &mut Vec<Vec<u64>>,
) {
    if depth == free.len() {
        let mut full = images.clone();
        pres.fill_derived(&mut full, order);
        if bsk::violations(pres, order, &full).is_empty() {
            found.push(full);
        }
        return;
    }
    for &v in &domains[depth] {
        images[free[depth]] = v;
        assign(pres, order, free, domains, depth + 1, images, found);
    }
}

/// Invariants recorded for one orbit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitInvariants {
    pub surface: SurfaceTopology,
    pub action: ActionSense,
    /// Orders of the connector images, sorted.
    pub connector_orders: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub representative: BskMap,
    pub size: usize,
    pub invariants: OrbitInvariants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub quotient: QuotientType,
    #[serde(rename = "N")]
    pub order: u64,
    pub map_count: usize,
    pub orbit_count: usize,
    pub orbits: Vec<Orbit>,
}

impl OrbitReport {
    pub fn by_surface(&self) -> BTreeMap<(SurfaceTopology, ActionSense), u64> {
        let mut out = BTreeMap::new();
        for o in &self.orbits {
            *out.entry((o.invariants.surface, o.invariants.action)).or_insert(0) += 1;
        }
        out
    }
}

pub fn invariants_of(map: &BskMap) -> Result<OrbitInvariants> {
    let pres = map.presentation();
    let mut connector_orders: Vec<u64> = pres
        .generators
        .iter()
        .zip(&map.images)
        .filter(|(g, _)| g.kind == GeneratorKind::Connector)
        .map(|(_, &v)| additive_order(v, map.order))
        .collect();
    connector_orders.sort_unstable();
    Ok(OrbitInvariants {
        surface: map.surface()?,
        action: map.action_sense()?,
        connector_orders,
    })
}

/// Orbits of `maps` under units of `Z_N` and the group generated by `moves`.
///
/// Every map must be smooth and share one quotient and order; a move leaving the set is a bug
/// in the move list and panics.
pub fn orbit_count(maps: &[BskMap], moves: &[AutMove]) -> Result<OrbitReport> {
    let Some(first) = maps.first() else {
        return Err(Error::BadMap("no maps to count".into()));
    };
    let (q, order) = (first.quotient, first.order);
    if maps.iter().any(|m| m.quotient != q || m.order != order) {
        return Err(Error::BadMap("maps belong to different quotients or orders".into()));
    }
    let pres = bsk::presentation_of(&q);
    let index: HashMap<&[u64], usize> = maps.iter().enumerate().map(|(i, m)| (m.images.as_slice(), i)).collect();
    let lookup = |images: &[u64], how: &str| -> usize {
        *index
            .get(images)
            .unwrap_or_else(|| panic!("{how} sends a smooth map of {q} at N = {order} outside the set"))
    };
    let mut uf = UnionFind::<usize>::new(maps.len());
    let us = units(order);
    for (i, m) in maps.iter().enumerate() {
        for &u in &us {
            let scaled: Vec<u64> = m
                .images
                .iter()
                .map(|&v| ((v as u128 * u as u128) % order as u128) as u64)
                .collect();
            uf.union(i, lookup(&scaled, "a unit"));
        }
        for mv in moves {
            uf.union(i, lookup(&mv.apply(&pres, order, &m.images), &mv.name));
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..maps.len() {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    let mut orbits = groups
        .into_values()
        .map(|members| {
            let representative = maps[members[0]].clone();
            let invariants = invariants_of(&representative)?;
            Ok(Orbit { representative, size: members.len(), invariants })
        })
        .collect::<Result<Vec<_>>>()?;
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(OrbitReport {
        quotient: q,
        order,
        map_count: maps.len(),
        orbit_count: orbits.len(),
        orbits,
    })
}

/// Enumerates and counts orbits for one point, with the full move list for `q`.
pub fn orbits(q: QuotientType, order: u64) -> Result<OrbitReport> {
    let maps = enumerate_smooth(q, order)?;
    if maps.is_empty() {
        return Ok(OrbitReport { quotient: q, order, map_count: 0, orbit_count: 0, orbits: vec![] });
    }
    orbit_count(&maps, &moves_for(&q))
}

/// Oracle against closed form at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckPoint {
    pub quotient: QuotientType,
    #[serde(rename = "N")]
    pub order: u64,
    pub oracle_count: u64,
    pub closed_count: u64,
    pub agrees: bool,
    /// First surface where the two disagree, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

pub fn check_point(q: QuotientType, order: u64) -> Result<CheckPoint> {
    let report = orbits(q, order)?;
    let closed: ClassificationResult = classify(q, order)?;
    let lhs = report.by_surface();
    let rhs = closed.by_surface();
    let counterexample = lhs
        .keys()
        .chain(rhs.keys())
        .find(|key| lhs.get(key) != rhs.get(key))
        .map(|(s, a)| {
            format!(
                "{s} ({a}): oracle {}, closed form {}",
                lhs.get(&(*s, *a)).copied().unwrap_or(0),
                rhs.get(&(*s, *a)).copied().unwrap_or(0)
            )
        });
    Ok(CheckPoint {
        quotient: q,
        order,
        oracle_count: report.orbit_count as u64,
        closed_count: closed.class_count,
        agrees: counterexample.is_none(),
        counterexample,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub n_max: u64,
    pub families: Vec<Family>,
    pub points: Vec<CheckPoint>,
}

impl CrossCheckReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CheckPoint> {
        self.points.iter().filter(|p| !p.agrees)
    }

    pub fn passed(&self) -> bool {
        self.mismatches().next().is_none()
    }
}

/// Every `(q, N)` with `2 <= N <= n_max` whose cone orders divide `N`.
pub fn parameter_points(families: &[Family], n_max: u64) -> Vec<(QuotientType, u64)> {
    let mut out = Vec::new();
    for &f in families {
        for order in 2..=n_max {
            out.extend(f.instances_dividing(order).into_iter().map(|q| (q, order)));
        }
    }
    out
}

/// Runs [`check_point`] over all parameter points; points are evaluated in parallel.
pub fn cross_check(families: &[Family], n_max: u64) -> Result<CrossCheckReport> {
    let points = parameter_points(families, n_max)
        .into_par_iter()
        .map(|(q, order)| check_point(q, order))
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossCheckReport { n_max, families: families.to_vec(), points })
}
