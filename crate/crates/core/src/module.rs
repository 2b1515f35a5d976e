//! Free modules, their elements, and cokernel presentations.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::grading::Multidegree;
use crate::poly::{Monomial, Polynomial};
use crate::ring::MultigradedRing;

/// `S(-d_1) + ... + S(-d_m)`, recorded by the generator degrees `d_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    shifts: Vec<Multidegree>,
}

impl FreeModule {
    pub fn new(shifts: Vec<Multidegree>) -> Self {
        FreeModule { shifts }
    }

    pub fn shifts(&self) -> &[Multidegree] {
        &self.shifts
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn zero(&self, ring: &MultigradedRing) -> FreeModuleElement {
        FreeModuleElement::zero(self.rank(), ring)
    }

    pub fn basis_element(&self, ring: &MultigradedRing, k: usize) -> FreeModuleElement {
        let mut e = self.zero(ring);
        e.components[k] = ring.one();
        e
    }

    /// Multidegree of a homogeneous element. Zero elements have no degree.
    pub fn degree_of(
        &self,
        ring: &MultigradedRing,
        f: &FreeModuleElement,
    ) -> Result<Multidegree> {
        if f.rank() != self.rank() {
            return Err(Error::Input(format!(
                "element of rank {} in a free module of rank {}",
                f.rank(),
                self.rank()
            )));
        }
        let mut deg: Option<Multidegree> = None;
        for (k, c) in f.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = &c.multidegree(ring.degrees())? + &self.shifts[k];
            match &deg {
                None => deg = Some(d),
                Some(e) if *e == d => {}
                Some(e) => {
                    return Err(Error::NonHomogeneous(format!(
                        "components of degrees {e} and {d} in one module element"
                    )))
                }
            }
        }
        deg.ok_or_else(|| Error::Domain("the zero element has no degree".into()))
    }
}

/// An element of a free module: one polynomial per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleElement {
    components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        FreeModuleElement { components }
    }

    pub fn zero(rank: usize, ring: &MultigradedRing) -> Self {
        FreeModuleElement {
            components: vec![ring.zero(); rank],
        }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &Polynomial {
        &self.components[k]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &FreeModuleElement) -> FreeModuleElement {
        FreeModuleElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FreeModuleElement) -> FreeModuleElement {
        FreeModuleElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> FreeModuleElement {
        FreeModuleElement {
            components: self.components.iter().map(|c| c.mul(p)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> FreeModuleElement {
        FreeModuleElement {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> FreeModuleElement {
        FreeModuleElement {
            components: self.components.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    /// Drops component `k`.
    pub fn without(&self, k: usize) -> FreeModuleElement {
        let mut components = self.components.clone();
        components.remove(k);
        FreeModuleElement { components }
    }

    pub fn to_strings(&self, ring: &MultigradedRing) -> Vec<String> {
        self.components
            .iter()
            .map(|c| c.to_string_with(ring.names()))
            .collect()
    }
}

/// Applies a matrix given by its columns (images of basis vectors) to coefficient vector `x`.
pub fn apply_matrix(
    ring: &MultigradedRing,
    target_rank: usize,
    columns: &[FreeModuleElement],
    x: &FreeModuleElement,
) -> FreeModuleElement {
    let mut acc = FreeModuleElement::zero(target_rank, ring);
    for (col, coeff) in columns.iter().zip(x.components()) {
        if !coeff.is_zero() {
            acc = acc.add(&col.mul_poly(coeff));
        }
    }
    acc
}

/// `M = coker(relations)`: a free module with generator degrees `shifts` modulo the
/// submodule generated by the relation columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    target: FreeModule,
    relations: Vec<FreeModuleElement>,
}

impl ModulePresentation {
    /// Validates that every relation lives in the target and is homogeneous.
    pub fn new(
        ring: &MultigradedRing,
        shifts: Vec<Multidegree>,
        relations: Vec<FreeModuleElement>,
    ) -> Result<Self> {
        if let Some(s) = shifts.iter().find(|s| s.rank() != ring.rank()) {
            return Err(Error::Input(format!(
                "shift {s} has length {}, grading has rank {}",
                s.rank(),
                ring.rank()
            )));
        }
        let target = FreeModule::new(shifts);
        for rel in &relations {
            if rel.rank() != target.rank() {
                return Err(Error::Input(format!(
                    "relation with {} components for {} generators",
                    rel.rank(),
                    target.rank()
                )));
            }
            if !rel.is_zero() {
                target.degree_of(ring, rel)?;
            }
        }
        Ok(ModulePresentation { target, relations })
    }

    /// `S / I` for an ideal given by generators.
    pub fn quotient(ring: &MultigradedRing, ideal: &[Polynomial]) -> Result<Self> {
        Self::new(
            ring,
            vec![Multidegree::zero(ring.rank())],
            ideal
                .iter()
                .map(|f| FreeModuleElement::new(vec![f.clone()]))
                .collect(),
        )
    }

    /// The free module `S(-d_1) + ... + S(-d_m)`.
    pub fn free(ring: &MultigradedRing, shifts: Vec<Multidegree>) -> Result<Self> {
        Self::new(ring, shifts, Vec::new())
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn shifts(&self) -> &[Multidegree] {
        self.target.shifts()
    }

    pub fn relations(&self) -> &[FreeModuleElement] {
        &self.relations
    }

    /// If this is `S/I` with `I` generated by monomials, returns those monomials.
    pub fn monomial_ideal(&self) -> Option<Vec<Monomial>> {
        if self.target.rank() != 1 || self.target.shifts()[0].0.iter().any(|&x| x != 0) {
            return None;
        }
        let mut out = Vec::new();
        for r in &self.relations {
            let p = r.component(0);
            if p.is_zero() {
                continue;
            }
            if p.len() != 1 {
                return None;
            }
            out.push(p.terms().next().unwrap().0.clone());
        }
        Some(out)
    }
}
