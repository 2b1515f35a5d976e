//! Regularity numbers of coarsened modules and the degree bounds they give for
//! minimal syzygies.

use std::ops::RangeInclusive;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::{
    enumerate_bounded_region, CoarseningVector, FiniteRegion, Multidegree,
};
use crate::localcoh::{
    a_invariants_from_ext, ext_from_resolution, local_cohomology_dimension, AInvariants, ExtModule,
};
use crate::module::ModulePresentation;
use crate::resolution::{
    betti_table, minimal_free_resolution_with, regnum_lower_bound, BettiTable, FreeResolution,
    ResolutionLimits,
};
use crate::groebner::default_order;
use crate::ring::MultigradedRing;

/// Longest arithmetic progression scanned by a membership query.
const MAX_PROGRESSION: i64 = 1_000_000;

/// `c_v = lcm(vdeg x_i)`, `sigma = sum vdeg x_i`, `s_v = max(n c_v - sigma, c_v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoarseningConstants {
    pub v: CoarseningVector,
    pub c: i64,
    pub s: i64,
    pub sigma: i64,
}

pub fn coarsening_constants(ring: &MultigradedRing, v: &CoarseningVector) -> Result<CoarseningConstants> {
    let w = v.vdegs(ring.degrees())?;
    let c = w.iter().fold(1i64, |acc, &x| acc.lcm(&x));
    let sigma: i64 = w.iter().sum();
    let n = ring.nvars() as i64;
    Ok(CoarseningConstants {
        v: v.clone(),
        c,
        s: (n * c - sigma).max(c),
        sigma,
    })
}

/// `(n - 1) c_v + 1 - sigma`.
pub fn regnum_ring(ring: &MultigradedRing, v: &CoarseningVector) -> Result<i64> {
    let k = coarsening_constants(ring, v)?;
    Ok((ring.nvars() as i64 - 1) * k.c + 1 - k.sigma)
}

/// `max_d (regnum(S) + d . v)` over the shifts of a free module.
pub fn regnum_free(
    shifts: &[Multidegree],
    ring: &MultigradedRing,
    v: &CoarseningVector,
) -> Result<i64> {
    let base = regnum_ring(ring, v)?;
    shifts
        .iter()
        .map(|d| base + v.degree_of(d))
        .max()
        .ok_or_else(|| Error::Domain("a free module needs at least one shift".into()))
}

/// `max_i (a^i - c_v (1 - i) + 1)` over finite `a^i`; `None` when every `a^i` is infinite.
pub fn regnum_from_a_invariants(a: &AInvariants, c: i64) -> Option<i64> {
    a.finite().map(|(i, ai)| ai - c * (1 - i as i64) + 1).max()
}

/// `regnum + i s_v + c_v - 1`.
pub fn syzygy_degree_bound(regnum: i64, k: &CoarseningConstants, i: i64) -> Result<i64> {
    if i < 0 {
        return Err(Error::Input(format!("homological index {i} is negative")));
    }
    Ok(regnum + i * k.s + k.c - 1)
}

/// Multidegrees allowed for minimal `i`-th syzygies by one or several coarsening vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundSet {
    pub i: usize,
    pub vectors: Vec<CoarseningVector>,
    pub bounds: Vec<i64>,
    pub bases: Vec<Multidegree>,
    pub region: FiniteRegion,
}

impl DegreeBoundSet {
    pub fn degrees(&self) -> &[Multidegree] {
        self.region.points()
    }

    pub fn contains(&self, a: &Multidegree) -> bool {
        self.region.contains(a)
    }

    pub fn len(&self) -> usize {
        self.region.len()
    }

    pub fn is_empty(&self) -> bool {
        self.region.is_empty()
    }
}

/// A module together with its minimal resolution and Ext modules, from which every
/// per-vector quantity is read.
#[derive(Clone, Debug)]
pub struct ModuleAnalysis {
    ring: MultigradedRing,
    resolution: FreeResolution,
    exts: Vec<ExtModule>,
}

impl ModuleAnalysis {
    pub fn new(ring: &MultigradedRing, p: &ModulePresentation) -> Result<Self> {
        Self::with_limits(ring, p, &ResolutionLimits::default())
    }

    pub fn with_limits(
        ring: &MultigradedRing,
        p: &ModulePresentation,
        limits: &ResolutionLimits,
    ) -> Result<Self> {
        let order = default_order(ring)?;
        let res = minimal_free_resolution_with(ring, p, &order, limits)?;
        Self::from_resolution(res)
    }

    /// Takes a minimal resolution as given.
    pub fn from_resolution(resolution: FreeResolution) -> Result<Self> {
        let exts = ext_from_resolution(&resolution)?;
        Ok(ModuleAnalysis {
            ring: resolution.ring().clone(),
            resolution,
            exts,
        })
    }

    pub fn ring(&self) -> &MultigradedRing {
        &self.ring
    }

    pub fn resolution(&self) -> &FreeResolution {
        &self.resolution
    }

    pub fn betti(&self) -> BettiTable {
        betti_table(&self.resolution)
    }

    pub fn exts(&self) -> &[ExtModule] {
        &self.exts
    }

    pub fn is_zero(&self) -> bool {
        self.resolution.is_zero_module()
    }

    pub fn projective_dimension(&self) -> usize {
        self.resolution.length()
    }

    /// Degrees of minimal generators, sorted and deduplicated.
    pub fn generator_degrees(&self) -> Vec<Multidegree> {
        let mut d = self.resolution.shifts(0).to_vec();
        d.sort();
        d.dedup();
        d
    }

    /// First syzygy module, through the tail of the resolution.
    pub fn first_syzygy(&self) -> Result<ModuleAnalysis> {
        Self::from_resolution(self.resolution.tail(1))
    }

    pub fn constants(&self, v: &CoarseningVector) -> Result<CoarseningConstants> {
        coarsening_constants(&self.ring, v)
    }

    pub fn a_invariants(&self, v: &CoarseningVector) -> Result<AInvariants> {
        v.vdegs(self.ring.degrees())?;
        Ok(a_invariants_from_ext(&self.exts, v))
    }

    /// `dim H^i_m(M^[v])_q`.
    pub fn local_cohomology_dimension(&self, v: &CoarseningVector, i: usize, q: i64) -> Result<u64> {
        local_cohomology_dimension(&self.ring, &self.exts, v, i, q)
    }

    /// Regularity number; `None` for the zero module.
    pub fn regnum_opt(&self, v: &CoarseningVector) -> Result<Option<i64>> {
        let k = self.constants(v)?;
        if self.is_zero() {
            return Ok(None);
        }
        let r = regnum_from_a_invariants(&self.a_invariants(v)?, k.c);
        assert!(r.is_some(), "nonzero module with vanishing local cohomology");
        Ok(r)
    }

    pub fn regnum(&self, v: &CoarseningVector) -> Result<i64> {
        self.regnum_opt(v)?
            .ok_or_else(|| Error::Domain("the zero module has no regularity number".into()))
    }

    /// `p in vreg(M)`: `H^i_m(M)_q = 0` for `q in p + c_v(1 - i) + N c_v`, scanned up to `a^i`.
    pub fn vreg_membership(&self, v: &CoarseningVector, p: i64) -> Result<bool> {
        let k = self.constants(v)?;
        let a = self.a_invariants(v)?;
        for (i, ai) in a.finite() {
            let mut q = p + k.c * (1 - i as i64);
            if q <= ai && (ai - q) / k.c > MAX_PROGRESSION {
                return Err(Error::ResourceLimit(format!(
                    "membership scan from {q} to {ai} is too long"
                )));
            }
            while q <= ai {
                if self.local_cohomology_dimension(v, i, q)? > 0 {
                    return Ok(false);
                }
                q += k.c;
            }
        }
        Ok(true)
    }

    pub fn lower_bound(&self, v: &CoarseningVector) -> Result<i64> {
        let k = self.constants(v)?;
        regnum_lower_bound(&self.betti().coarsen(v), k.c, k.s)
    }

    /// `D_{i,v}` with the generator degrees as bases.
    pub fn degree_bound_set(&self, v: &CoarseningVector, i: usize) -> Result<DegreeBoundSet> {
        self.degree_bound_set_with(v, i, &self.generator_degrees())
    }

    pub fn degree_bound_set_with(
        &self,
        v: &CoarseningVector,
        i: usize,
        bases: &[Multidegree],
    ) -> Result<DegreeBoundSet> {
        let k = self.constants(v)?;
        let bound = syzygy_degree_bound(self.regnum(v)?, &k, i as i64)?;
        let region = enumerate_bounded_region(bases, self.ring.degrees(), v, bound)?;
        Ok(DegreeBoundSet {
            i,
            vectors: vec![v.clone()],
            bounds: vec![bound],
            bases: bases.to_vec(),
            region,
        })
    }

    /// `D_{i,v}` for each vector, computed concurrently, in input order.
    pub fn degree_bound_sets(
        &self,
        vectors: &[CoarseningVector],
        i: usize,
    ) -> Result<Vec<DegreeBoundSet>> {
        vectors
            .par_iter()
            .map(|v| self.degree_bound_set(v, i))
            .collect()
    }

    /// `cap_v D_{i,v}` over a nonempty family.
    pub fn intersect_degree_bounds(
        &self,
        vectors: &[CoarseningVector],
        i: usize,
    ) -> Result<DegreeBoundSet> {
        if vectors.is_empty() {
            return Err(Error::Input("empty family of coarsening vectors".into()));
        }
        let sets = self.degree_bound_sets(vectors, i)?;
        let mut it = sets.into_iter();
        let mut acc = it.next().unwrap();
        for s in it {
            acc.region = acc.region.intersect(&s.region);
            acc.vectors.extend(s.vectors);
            acc.bounds.extend(s.bounds);
        }
        Ok(acc)
    }

    /// A subfamily of `candidates` with the same intersections `cap D_{i,v}` for every `i`
    /// in `range`, and minimal with that property. Vectors are tried for removal in
    /// decreasing lexicographic order.
    pub fn minimal_coarsening_set(
        &self,
        candidates: &[CoarseningVector],
        range: RangeInclusive<usize>,
    ) -> Result<Vec<CoarseningVector>> {
        let mut cands = candidates.to_vec();
        cands.sort();
        cands.dedup();
        if cands.is_empty() {
            return Err(Error::Input("no candidate coarsening vectors".into()));
        }
        let is: Vec<usize> = range.collect();
        let sets: Vec<Vec<FiniteRegion>> = cands
            .par_iter()
            .map(|v| {
                is.iter()
                    .map(|&i| Ok(self.degree_bound_set(v, i)?.region))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let meet = |keep: &[bool], col: usize| -> Option<Vec<Multidegree>> {
            let mut acc: Option<FiniteRegion> = None;
            for (k, s) in sets.iter().enumerate() {
                if keep[k] {
                    acc = Some(match acc {
                        None => s[col].clone(),
                        Some(a) => a.intersect(&s[col]),
                    });
                }
            }
            acc.map(|a| a.points().to_vec())
        };
        let mut keep = vec![true; cands.len()];
        let target: Vec<_> = (0..is.len()).map(|c| meet(&keep, c)).collect();
        for k in (0..cands.len()).rev() {
            keep[k] = false;
            let same = (0..is.len()).all(|c| meet(&keep, c) == target[c]);
            if !same {
                keep[k] = true;
            }
        }
        Ok(cands
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(v, _)| v)
            .collect())
    }

    /// Compares the regularity number and the bound sets under `v` and `d v`.
    pub fn scalar_report(
        &self,
        v: &CoarseningVector,
        d: i64,
        range: RangeInclusive<usize>,
    ) -> Result<ScalarReport> {
        if d < 1 {
            return Err(Error::Input(format!("scalar {d} must be positive")));
        }
        let dv = v.scaled(d);
        let regnum_v = self.regnum(v)?;
        let regnum_dv = self.regnum(&dv)?;
        let predicted = d * regnum_v - d + 1;
        let sets = range
            .map(|i| {
                let a = self.degree_bound_set(v, i)?;
                let b = self.degree_bound_set(&dv, i)?;
                Ok(SetComparison {
                    i,
                    equal: a.degrees() == b.degrees(),
                    size_v: a.len(),
                    size_dv: b.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ScalarReport {
            v: v.clone(),
            d,
            regnum_v,
            regnum_dv,
            predicted,
            regnum_holds: regnum_dv == predicted,
            holds: regnum_dv == predicted && sets.iter().all(|s| s.equal),
            sets,
        })
    }

    /// Regularity numbers along `0 -> M' -> F -> M -> 0` with `F` the free cover.
    pub fn exact_sequence_check(&self, v: &CoarseningVector) -> Result<ExactSequenceReport> {
        let k = self.constants(v)?;
        let m = self.regnum_opt(v)?;
        let f = if self.is_zero() {
            None
        } else {
            Some(regnum_free(self.resolution.shifts(0), &self.ring, v)?)
        };
        let sub = self.first_syzygy()?.regnum_opt(v)?;
        let shift = |x: Option<i64>, s: i64| x.map(|x| x + s);
        let holds = [
            le(m, max(f, shift(sub, -k.c))),
            le(f, max(sub, m)),
            le(sub, max(f, shift(m, k.c))),
        ];
        Ok(ExactSequenceReport {
            v: v.clone(),
            c: k.c,
            submodule: sub,
            free: f,
            quotient: m,
            holds,
        })
    }

    pub fn report(&self, v: &CoarseningVector, imax: usize, with_degrees: bool) -> Result<RegularityReport> {
        let k = self.constants(v)?;
        let regnum = self.regnum(v)?;
        let bounds = (0..=imax)
            .map(|i| {
                Ok(IndexedBound {
                    i,
                    bound: syzygy_degree_bound(regnum, &k, i as i64)?,
                })
            })
            .collect::<Result<_>>()?;
        let degrees = if with_degrees {
            Some(
                (0..=imax)
                    .map(|i| {
                        Ok(IndexedDegrees {
                            i,
                            degrees: self.degree_bound_set(v, i)?.degrees().to_vec(),
                        })
                    })
                    .collect::<Result<_>>()?,
            )
        } else {
            None
        };
        Ok(RegularityReport {
            v: v.clone(),
            c: k.c,
            s: k.s,
            sigma: k.sigma,
            a_invariants: self.a_invariants(v)?,
            regnum,
            lower_bound: self.lower_bound(v)?,
            bounds,
            degrees,
        })
    }
}

fn max(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn le(a: Option<i64>, b: Option<i64>) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

/// Regularity number of `coker P`.
pub fn regnum_module(ring: &MultigradedRing, p: &ModulePresentation, v: &CoarseningVector) -> Result<i64> {
    ModuleAnalysis::new(ring, p)?.regnum(v)
}

pub fn vreg_membership(
    ring: &MultigradedRing,
    p: &ModulePresentation,
    v: &CoarseningVector,
    q: i64,
) -> Result<bool> {
    ModuleAnalysis::new(ring, p)?.vreg_membership(v, q)
}

pub fn degree_bound_set(
    ring: &MultigradedRing,
    p: &ModulePresentation,
    v: &CoarseningVector,
    i: usize,
) -> Result<DegreeBoundSet> {
    ModuleAnalysis::new(ring, p)?.degree_bound_set(v, i)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetComparison {
    pub i: usize,
    pub equal: bool,
    pub size_v: usize,
    pub size_dv: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalarReport {
    pub v: CoarseningVector,
    pub d: i64,
    pub regnum_v: i64,
    pub regnum_dv: i64,
    pub predicted: i64,
    pub regnum_holds: bool,
    pub sets: Vec<SetComparison>,
    pub holds: bool,
}

/// `None` entries are regularity numbers of the zero module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSequenceReport {
    pub v: CoarseningVector,
    pub c: i64,
    pub submodule: Option<i64>,
    pub free: Option<i64>,
    pub quotient: Option<i64>,
    pub holds: [bool; 3],
}

impl ExactSequenceReport {
    pub fn all_hold(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexedBound {
    pub i: usize,
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexedDegrees {
    pub i: usize,
    pub degrees: Vec<Multidegree>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub v: CoarseningVector,
    pub c: i64,
    pub s: i64,
    pub sigma: i64,
    pub a_invariants: AInvariants,
    pub regnum: i64,
    pub lower_bound: i64,
    pub bounds: Vec<IndexedBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<IndexedDegrees>>,
}
