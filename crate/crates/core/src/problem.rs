//! Problem files: a ring plus one payload, as JSON.
//!
//! ```json
//! {
//!   "field": "q",
//!   "ring": { "variables": ["x0", "x1", "y0", "y1"],
//!             "degrees": [[1, 0], [1, 0], [0, 1], [0, 1]] },
//!   "ideal": ["x0*x1", "y0*y1"]
//! }
//! ```
//!
//! `ring` may instead be `{ "dims": [1, 1] }` for a product of projective spaces. The
//! payload is exactly one of `ideal`, `module` (`shifts` plus `relations`, each relation a
//! column of component strings), `free` (a list of shifts), `complex` (`vertices` and
//! `facets` named by ring variables) or `points` (`dims` and integer coordinates; the ring
//! is then implied).

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::{DegreeMatrix, Multidegree};
use crate::localcoh::SimplicialComplex;
use crate::module::{FreeModuleElement, ModulePresentation};
use crate::points::{point_ideal, PointSet};
use crate::poly::Polynomial;
use crate::ring::MultigradedRing;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub description: Option<String>,
    #[serde(default)]
    pub field: Option<String>,
    #[serde(default)]
    pub ring: Option<RingSpec>,
    #[serde(default)]
    pub ideal: Option<Vec<String>>,
    #[serde(default)]
    pub module: Option<ModuleSpec>,
    #[serde(default)]
    pub free: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub complex: Option<ComplexSpec>,
    #[serde(default)]
    pub points: Option<PointsSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum RingSpec {
    Explicit {
        variables: Vec<String>,
        degrees: Vec<Vec<i64>>,
    },
    Product {
        dims: Vec<usize>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub shifts: Vec<Vec<i64>>,
    pub relations: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsSpec {
    pub dims: Vec<usize>,
    pub points: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug)]
pub enum Payload {
    Ideal(Vec<Polynomial>),
    Module(ModulePresentation),
    Free(Vec<Multidegree>),
    Complex(SimplicialComplex),
    Points(PointSet),
}

/// A validated problem.
#[derive(Clone, Debug)]
pub struct Problem {
    pub ring: MultigradedRing,
    pub payload: Payload,
}

impl Problem {
    pub fn from_path(path: &Path, field: Option<Field>) -> Result<Problem> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text, field)
    }

    /// `field` overrides the file's own field.
    pub fn from_json(text: &str, field: Option<Field>) -> Result<Problem> {
        let file: ProblemFile =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("bad problem file: {e}")))?;
        file.build(field)
    }

    /// The module described by the payload.
    pub fn presentation(&self) -> Result<ModulePresentation> {
        match &self.payload {
            Payload::Ideal(gens) => ModulePresentation::quotient(&self.ring, gens),
            Payload::Module(p) => Ok(p.clone()),
            Payload::Free(shifts) => ModulePresentation::free(&self.ring, shifts.clone()),
            Payload::Complex(k) => {
                let gens: Vec<Polynomial> = k
                    .stanley_reisner_ideal()
                    .into_iter()
                    .map(|m| Polynomial::monomial(m, self.ring.field().one(), self.ring.field()))
                    .collect();
                ModulePresentation::quotient(&self.ring, &gens)
            }
            Payload::Points(x) => ModulePresentation::quotient(&self.ring, &point_ideal(x)?),
        }
    }

    /// The simplicial complex of the payload, when it is one or a square-free monomial ideal.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        match &self.payload {
            Payload::Complex(k) => Ok(k.clone()),
            Payload::Ideal(gens) => {
                let mut monos = Vec::new();
                for g in gens {
                    if g.is_zero() {
                        continue;
                    }
                    if g.len() != 1 {
                        return Err(Error::Domain(
                            "Hochster's formula needs a monomial ideal".into(),
                        ));
                    }
                    monos.push(g.terms().next().unwrap().0.clone());
                }
                SimplicialComplex::from_monomial_ideal(self.ring.nvars(), &monos)
            }
            _ => Err(Error::Domain(
                "Hochster's formula needs a complex or a square-free monomial ideal".into(),
            )),
        }
    }

    pub fn points(&self) -> Result<&PointSet> {
        match &self.payload {
            Payload::Points(x) => Ok(x),
            _ => Err(Error::Domain("this command needs a point set".into())),
        }
    }
}

impl ProblemFile {
    pub fn build(&self, field_override: Option<Field>) -> Result<Problem> {
        let field = match (field_override, &self.field) {
            (Some(f), _) => f,
            (None, Some(s)) => Field::parse(s)?,
            (None, None) => Field::default(),
        };
        let count = [
            self.ideal.is_some(),
            self.module.is_some(),
            self.free.is_some(),
            self.complex.is_some(),
            self.points.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if count != 1 {
            return Err(Error::Input(format!(
                "expected exactly one payload, found {count}"
            )));
        }
        if let Some(ps) = &self.points {
            let x = PointSet::new(&ps.dims, &ps.points, field)?;
            let ring = x.ring()?;
            if let Some(spec) = &self.ring {
                let given = build_ring(spec, field)?;
                if given.degrees() != ring.degrees() {
                    return Err(Error::Input(
                        "ring does not match the point set dimensions".into(),
                    ));
                }
            }
            return Ok(Problem {
                ring,
                payload: Payload::Points(x),
            });
        }
        let ring = build_ring(
            self.ring
                .as_ref()
                .ok_or_else(|| Error::Input("missing ring".into()))?,
            field,
        )?;
        let shift = |s: &Vec<i64>| -> Result<Multidegree> {
            if s.len() != ring.rank() {
                return Err(Error::Input(format!(
                    "shift {s:?} has length {}, grading has rank {}",
                    s.len(),
                    ring.rank()
                )));
            }
            Ok(Multidegree(s.clone()))
        };
        let payload = if let Some(gens) = &self.ideal {
            let gens: Vec<Polynomial> = gens.iter().map(|g| ring.parse(g)).collect::<Result<_>>()?;
            for g in &gens {
                if !g.is_zero() {
                    g.multidegree(ring.degrees())?;
                }
            }
            Payload::Ideal(gens)
        } else if let Some(m) = &self.module {
            let shifts: Vec<Multidegree> = m.shifts.iter().map(shift).collect::<Result<_>>()?;
            let rels = m
                .relations
                .iter()
                .map(|col| {
                    Ok(FreeModuleElement::new(
                        col.iter().map(|t| ring.parse(t)).collect::<Result<_>>()?,
                    ))
                })
                .collect::<Result<_>>()?;
            Payload::Module(ModulePresentation::new(&ring, shifts, rels)?)
        } else if let Some(f) = &self.free {
            if f.is_empty() {
                return Err(Error::Input("a free module needs at least one shift".into()));
            }
            Payload::Free(f.iter().map(shift).collect::<Result<_>>()?)
        } else {
            let c = self.complex.as_ref().unwrap();
            Payload::Complex(SimplicialComplex::from_names(&ring, &c.vertices, &c.facets)?)
        };
        Ok(Problem { ring, payload })
    }
}

fn build_ring(spec: &RingSpec, field: Field) -> Result<MultigradedRing> {
    match spec {
        RingSpec::Explicit { variables, degrees } => {
            MultigradedRing::new(variables.clone(), DegreeMatrix::from_columns(degrees.clone())?, field)
        }
        RingSpec::Product { dims } => MultigradedRing::standard_multigraded(dims, field),
    }
}
