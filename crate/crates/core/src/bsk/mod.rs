//! Candidate bordered-surface-kernel epimorphisms onto `Z_N`.

mod presentation;

pub use presentation::{
    presentation_of, Cycle, Derived, Generator, GeneratorKind, Presentation, Torsion, Word,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::signature::{NecSignature, QuotientType};
use crate::surface::{ActionSense, SurfaceTopology};
use crate::zmod::{additive_order, gcd};

/// Why a map fails to be smooth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { generator: String, value: u64 },
    Relation { relation: String, value: u64 },
    Torsion { element: String, expected: u64, actual: u64 },
    ReflectionImage { generator: String, value: u64 },
    NotSurjective { index: u64 },
    NoKernelReflection,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { generator, value } => {
                write!(f, "image {value} of {generator} is not reduced")
            }
            Violation::Relation { relation, value } => {
                write!(f, "relation {relation} evaluates to {value}, not 0")
            }
            Violation::Torsion { element, expected, actual } => {
                write!(f, "{element} has order {actual}, expected {expected}")
            }
            Violation::ReflectionImage { generator, value } => {
                write!(f, "reflection {generator} maps to {value}, outside {{0, N/2}}")
            }
            Violation::NotSurjective { index } => write!(f, "image has index {index}"),
            Violation::NoKernelReflection => write!(f, "no reflection lies in the kernel"),
        }
    }
}

/// Images of the canonical generators, in presentation order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BskMap {
    pub quotient: QuotientType,
    pub order: u64,
    pub images: Vec<u64>,
}

impl BskMap {
    pub fn new(quotient: QuotientType, order: u64, images: Vec<u64>) -> Result<Self> {
        quotient.validate()?;
        if order < 1 {
            return Err(Error::BadMap("N must be positive".into()));
        }
        if let QuotientType::D21 { m, n } = quotient {
            if m > n {
                return Err(Error::BadMap("d21 parameters must satisfy m <= n".into()));
            }
        }
        let pres = presentation_of(&quotient);
        if images.len() != pres.generators.len() {
            return Err(Error::BadMap(format!(
                "{} images given, presentation has {} generators",
                images.len(),
                pres.generators.len()
            )));
        }
        Ok(BskMap { quotient, order, images })
    }

    /// Builds a map from named images; omitted eliminated generators are computed.
    pub fn from_named(quotient: QuotientType, order: u64, named: &[(&str, u64)]) -> Result<Self> {
        let pres = presentation_of(&quotient);
        let mut images = vec![0; pres.generators.len()];
        let mut given = vec![false; images.len()];
        for &(name, v) in named {
            let i = pres
                .index(name)
                .ok_or_else(|| Error::BadMap(format!("unknown generator {name}")))?;
            images[i] = v;
            given[i] = true;
        }
        for d in &pres.derived {
            if !given[d.target] {
                images[d.target] = d.word.eval(&images, order);
                given[d.target] = true;
            }
        }
        if let Some(i) = given.iter().position(|g| !g) {
            return Err(Error::BadMap(format!("missing image for {}", pres.generators[i].name)));
        }
        BskMap::new(quotient, order, images)
    }

    pub fn presentation(&self) -> Presentation {
        presentation_of(&self.quotient)
    }

    pub fn signature(&self) -> NecSignature {
        self.quotient.signature()
    }

    pub fn image(&self, name: &str) -> Option<u64> {
        self.presentation().index(name).map(|i| self.images[i])
    }

    pub fn named_images(&self) -> BTreeMap<String, u64> {
        let pres = self.presentation();
        pres.generators
            .iter()
            .zip(&self.images)
            .map(|(g, &v)| (g.name.clone(), v))
            .collect()
    }

    pub fn violations(&self) -> Vec<Violation> {
        violations(&self.presentation(), self.order, &self.images)
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        match self.violations().into_iter().next() {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.validate().is_ok()
    }

    fn smooth_presentation(&self) -> Result<Presentation> {
        let pres = self.presentation();
        if let Some(v) = violations(&pres, self.order, &self.images).into_iter().next() {
            return Err(Error::BadMap(v.to_string()));
        }
        Ok(pres)
    }

    pub fn orientable(&self) -> Result<bool> {
        Ok(orientable(&self.smooth_presentation()?, self.order, &self.images))
    }

    pub fn boundary_count(&self) -> Result<u64> {
        boundary_count(&self.smooth_presentation()?, self.order, &self.images)
    }

    pub fn surface(&self) -> Result<SurfaceTopology> {
        let pres = self.smooth_presentation()?;
        surface_of(&self.quotient, &pres, self.order, &self.images)
    }

    pub fn action_sense(&self) -> Result<ActionSense> {
        Ok(action_sense(&self.smooth_presentation()?, self.order, &self.images))
    }
}

/// Checks every smoothness condition; an empty list means smooth.
pub fn violations(pres: &Presentation, order: u64, images: &[u64]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (g, &v) in pres.generators.iter().zip(images) {
        if v >= order {
            out.push(Violation::OutOfRange { generator: g.name.clone(), value: v });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for r in &pres.relations {
        let v = r.eval(images, order);
        if v != 0 {
            out.push(Violation::Relation { relation: r.text.clone(), value: v });
        }
    }
    for t in &pres.torsion {
        let actual = additive_order(t.word.eval(images, order), order);
        if actual != t.order {
            out.push(Violation::Torsion {
                element: t.word.text.clone(),
                expected: t.order,
                actual,
            });
        }
    }
    let half = if order % 2 == 0 { Some(order / 2) } else { None };
    let mut kernel_reflection = false;
    for i in pres.reflections() {
        let v = images[i];
        if v == 0 {
            kernel_reflection = true;
        } else if Some(v) != half {
            out.push(Violation::ReflectionImage { generator: pres.generators[i].name.clone(), value: v });
        }
    }
    let index = images.iter().fold(order, |g, &v| gcd(g, v));
    if index != 1 && order != 1 {
        out.push(Violation::NotSurjective { index });
    }
    if !kernel_reflection {
        out.push(Violation::NoKernelReflection);
    }
    out
}

/// Subgroup of `Z_N x Z_2` generated by `(image, orientation)` of every generator
/// other than the reflections in the kernel. Membership table indexed by `2*a + s`.
fn orientation_subgroup(pres: &Presentation, order: u64, images: &[u64]) -> Vec<bool> {
    let n = order as usize;
    let gens: Vec<(usize, usize)> = pres
        .generators
        .iter()
        .zip(images)
        .filter(|(g, &v)| !(g.kind == GeneratorKind::Reflection && v == 0))
        .map(|(g, &v)| (v as usize % n, usize::from(g.kind.orientation() < 0)))
        .collect();
    let mut member = vec![false; 2 * n];
    member[0] = true;
    let mut stack = vec![(0usize, 0usize)];
    while let Some((a, s)) = stack.pop() {
        for &(b, t) in &gens {
            let next = ((a + b) % n, s ^ t);
            let key = 2 * next.0 + next.1;
            if !member[key] {
                member[key] = true;
                stack.push(next);
            }
        }
    }
    member
}

/// The covered surface is non-orientable iff the kernel contains a non-orientable word.
pub fn orientable(pres: &Presentation, order: u64, images: &[u64]) -> bool {
    !orientation_subgroup(pres, order, images)[1]
}

/// For orientable covers, the subgroup is the graph of a character of `Z_N`;
/// the action reverses orientation iff the generator 1 has character -1.
pub fn action_sense(pres: &Presentation, order: u64, images: &[u64]) -> ActionSense {
    let h = orientation_subgroup(pres, order, images);
    if h[1] {
        ActionSense::Unoriented
    } else if h[2 % (2 * order as usize) + 1] {
        ActionSense::Reversing
    } else {
        ActionSense::Preserving
    }
}

pub fn boundary_count(pres: &Presentation, order: u64, images: &[u64]) -> Result<u64> {
    let mut k = 0;
    for cycle in &pres.cycles {
        k += match cycle {
            Cycle::Empty { reflection, connector } => {
                if images[*reflection] != 0 {
                    0
                } else {
                    order / additive_order(images[*connector], order)
                }
            }
            Cycle::Corners { reflections } => {
                let s = (reflections.len() - 1) as u64;
                if (s * order) % 4 != 0 {
                    return Err(Error::InconsistentSurface(format!(
                        "cycle of length {s} gives non-integral {s}*{order}/4 boundary components"
                    )));
                }
                s * order / 4
            }
        };
    }
    Ok(k)
}

pub fn surface_of(
    quotient: &QuotientType,
    pres: &Presentation,
    order: u64,
    images: &[u64],
) -> Result<SurfaceTopology> {
    let p = quotient.signature().kernel_algebraic_genus(order)?;
    let k = boundary_count(pres, order, images)?;
    SurfaceTopology::from_invariants(orientable(pres, order, images), p, k)
}

#[derive(Serialize, Deserialize)]
struct BskMapJson {
    signature: String,
    #[serde(rename = "N")]
    order: u64,
    images: BTreeMap<String, u64>,
}

impl Serialize for BskMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BskMapJson {
            signature: self.signature().to_string(),
            order: self.order,
            images: self.named_images(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BskMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BskMapJson::deserialize(d)?;
        let sig: NecSignature = raw.signature.parse().map_err(D::Error::custom)?;
        let q = QuotientType::from_signature(&sig).map_err(D::Error::custom)?;
        let named: Vec<(&str, u64)> = raw.images.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        BskMap::from_named(q, raw.order, &named).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d21() -> QuotientType {
        QuotientType::D21 { m: 2, n: 3 }
    }

    #[test]
    fn d21_smoothness() {
        let a = BskMap::from_named(d21(), 6, &[("x1", 3), ("x2", 2), ("c", 0)]).unwrap();
        assert_eq!(a.image("e"), Some(1));
        assert!(a.is_smooth());
        let b = BskMap::from_named(d21(), 6, &[("x1", 3), ("x2", 4), ("c", 0)]).unwrap();
        assert_eq!(b.image("e"), Some(5));
        assert!(b.is_smooth());
        let bad = BskMap::from_named(d21(), 6, &[("x1", 0), ("x2", 2), ("c", 0)]).unwrap();
        assert!(matches!(bad.validate(), Err(Violation::Torsion { .. })));
    }

    #[test]
    fn inconsistent_named_images_cite_relation() {
        let m = BskMap::from_named(d21(), 6, &[("x1", 3), ("x2", 2), ("c", 0), ("e", 2)]).unwrap();
        match m.validate() {
            Err(Violation::Relation { relation, .. }) => assert_eq!(relation, "x1 x2 e"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn d6_three_holed_sphere() {
        let names = ["c0", "c1", "c2", "c3", "c4", "c5"];
        let named: Vec<_> = names.iter().zip([1, 0, 1, 0, 1, 0]).map(|(n, v)| (*n, v)).collect();
        let m = BskMap::from_named(QuotientType::D6, 2, &named).unwrap();
        assert!(m.orientable().unwrap());
        assert_eq!(m.boundary_count().unwrap(), 3);
        assert_eq!(m.surface().unwrap().to_string(), "3-holed sphere");
        assert_eq!(m.action_sense().unwrap(), ActionSense::Reversing);
    }

    #[test]
    fn mb2_orientability_depends_on_half_order() {
        let m8 = BskMap::from_named(QuotientType::Mb2, 8, &[("d", 1), ("c0", 4), ("c1", 0)]).unwrap();
        assert!(!m8.orientable().unwrap());
        let s = m8.surface().unwrap();
        assert_eq!((s.boundary_count, s.algebraic_genus, s.genus), (4, 5, 2));
        let m6 = BskMap::from_named(QuotientType::Mb2, 6, &[("d", 1), ("c0", 3), ("c1", 0)]).unwrap();
        assert!(m6.orientable().unwrap());
    }

    #[test]
    fn ann2_boundary() {
        let q = QuotientType::Ann2;
        let a = BskMap::from_named(q, 6, &[("e1", 1), ("c10", 0), ("c20", 3), ("c21", 0)]).unwrap();
        assert_eq!(a.boundary_count().unwrap(), 4);
        let b = BskMap::from_named(q, 6, &[("e1", 1), ("c10", 3), ("c20", 3), ("c21", 0)]).unwrap();
        assert_eq!(b.boundary_count().unwrap(), 3);
    }

    #[test]
    fn surfaces_of_small_quotients() {
        let d3 = QuotientType::D3 { n: 2, m: 3 };
        let m = BskMap::from_named(d3, 6, &[("x1", 3), ("x2", 3), ("x3", 2), ("c", 0)]).unwrap();
        let s = m.surface().unwrap();
        assert!(s.orientable);
        assert_eq!((s.genus, s.boundary_count), (2, 2));
        let d12 = QuotientType::D12 { m: 3 };
        let m = BskMap::from_named(d12, 6, &[("x", 2), ("c0", 3), ("c1", 0)]).unwrap();
        assert_eq!(m.surface().unwrap().to_string(), "3-holed sphere");
    }

    #[test]
    fn json_roundtrip() {
        let m = BskMap::from_named(d21(), 6, &[("x1", 3), ("x2", 2), ("c", 0)]).unwrap();
        let j = serde_json::to_string(&m).unwrap();
        assert_eq!(
            j,
            r#"{"signature":"(0;+;[2,3];{()})","N":6,"images":{"c":0,"e":1,"x1":3,"x2":2}}"#
        );
        assert_eq!(serde_json::from_str::<BskMap>(&j).unwrap(), m);
    }
}
