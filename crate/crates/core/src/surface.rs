use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Topological type of a compact bordered surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceTopology {
    pub orientable: bool,
    pub genus: u64,
    pub boundary_count: u64,
    pub algebraic_genus: u64,
}

impl SurfaceTopology {
    pub fn new(orientable: bool, genus: u64, boundary_count: u64) -> Result<Self> {
        if boundary_count == 0 {
            return Err(Error::InconsistentSurface("a bordered surface needs a boundary".into()));
        }
        if !orientable && genus == 0 {
            return Err(Error::InconsistentSurface("non-orientable genus must be positive".into()));
        }
        let eps = if orientable { 2 } else { 1 };
        Ok(SurfaceTopology {
            orientable,
            genus,
            boundary_count,
            algebraic_genus: eps * genus + boundary_count - 1,
        })
    }

    /// Solves `p = eps*g + k - 1` for `g`, rejecting non-integral or negative genus.
    pub fn from_invariants(orientable: bool, algebraic_genus: u64, boundary_count: u64) -> Result<Self> {
        let eps = if orientable { 2 } else { 1 };
        let rest = (algebraic_genus + 1)
            .checked_sub(boundary_count)
            .ok_or_else(|| {
                Error::InconsistentSurface(format!(
                    "k = {boundary_count} exceeds p + 1 = {}",
                    algebraic_genus + 1
                ))
            })?;
        if rest % eps != 0 {
            return Err(Error::InconsistentSurface(format!(
                "p = {algebraic_genus}, k = {boundary_count} give a non-integral genus"
            )));
        }
        SurfaceTopology::new(orientable, rest / eps, boundary_count)
    }

    pub fn epsilon(&self) -> u64 {
        if self.orientable {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for SurfaceTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.boundary_count;
        let closed = match (self.orientable, self.genus) {
            (true, 0) => "sphere".to_string(),
            (true, 1) => "torus".to_string(),
            (true, g) => format!("orientable surface of genus {g}"),
            (false, 1) => "projective plane".to_string(),
            (false, 2) => "Klein bottle".to_string(),
            (false, g) => format!("non-orientable surface of genus {g}"),
        };
        write!(f, "{k}-holed {closed}")
    }
}

/// How the generator of the cyclic group acts on the orientation of the surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionSense {
    Preserving,
    Reversing,
    /// The surface is non-orientable.
    Unoriented,
}

impl fmt::Display for ActionSense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionSense::Preserving => "orientation-preserving",
            ActionSense::Reversing => "orientation-reversing",
            ActionSense::Unoriented => "non-orientable",
        })
    }
}
