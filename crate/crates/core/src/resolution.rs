//! Minimal multigraded free resolutions and Betti tables.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::{CoarseningVector, Multidegree};
use crate::groebner::{default_order, minimal_generators, syzygy_basis};
use crate::module::{apply_matrix, FreeModule, FreeModuleElement, ModulePresentation};
use crate::poly::TermOrder;
use crate::ring::MultigradedRing;

/// Caps on resolution size; exceeding one is a resource error.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ResolutionLimits {
    /// Largest homological index allowed.
    pub max_length: Option<usize>,
    /// Largest coarse shift degree allowed, measured in the resolution's order.
    pub max_degree: Option<i64>,
}

/// `0 -> F_l -> ... -> F_0`, with `d_i : F_i -> F_{i-1}` stored as its columns.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: MultigradedRing,
    shifts: Vec<Vec<Multidegree>>,
    differentials: Vec<Vec<FreeModuleElement>>,
}

impl FreeResolution {
    pub fn ring(&self) -> &MultigradedRing {
        &self.ring
    }

    /// Homological length `l`; zero for a free module (and for the zero module).
    pub fn length(&self) -> usize {
        self.shifts.len().saturating_sub(1)
    }

    pub fn shifts(&self, i: usize) -> &[Multidegree] {
        self.shifts.get(i).map_or(&[], |s| s.as_slice())
    }

    pub fn levels(&self) -> &[Vec<Multidegree>] {
        &self.shifts
    }

    pub fn rank(&self, i: usize) -> usize {
        self.shifts(i).len()
    }

    /// Columns of `d_i` for `i >= 1`.
    pub fn differential(&self, i: usize) -> &[FreeModuleElement] {
        if i == 0 {
            return &[];
        }
        self.differentials.get(i - 1).map_or(&[], |d| d.as_slice())
    }

    pub fn free_module(&self, i: usize) -> FreeModule {
        FreeModule::new(self.shifts(i).to_vec())
    }

    /// True when `F_0 = 0`.
    pub fn is_zero_module(&self) -> bool {
        self.rank(0) == 0
    }

    /// `d_{i-1} d_i = 0` for all `i`.
    pub fn is_complex(&self) -> bool {
        (2..=self.length()).all(|i| {
            self.differential(i).iter().all(|col| {
                apply_matrix(&self.ring, self.rank(i - 2), self.differential(i - 1), col).is_zero()
            })
        })
    }

    /// No differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| {
            d.iter()
                .all(|col| col.components().iter().all(|p| p.as_nonzero_constant().is_none()))
        })
    }

    /// Each differential is homogeneous of degree zero for the recorded shifts.
    pub fn is_homogeneous(&self) -> bool {
        (1..=self.length()).all(|i| {
            let target = self.free_module(i - 1);
            self.differential(i)
                .iter()
                .zip(self.shifts(i))
                .all(|(col, s)| col.is_zero() || target.degree_of(&self.ring, col).ok().as_ref() == Some(s))
        })
    }

    /// The same complex over the rank-one grading `a -> a . v`.
    pub fn coarsen(&self, v: &CoarseningVector) -> Result<FreeResolution> {
        let ring = self.ring.coarsen(v)?;
        Ok(FreeResolution {
            ring,
            shifts: self
                .shifts
                .iter()
                .map(|lvl| lvl.iter().map(|a| Multidegree(vec![v.degree_of(a)])).collect())
                .collect(),
            differentials: self.differentials.clone(),
        })
    }

    /// `F_k <- F_{k+1} <- ...`, a minimal resolution of `im(d_k)` when this one is minimal.
    pub fn tail(&self, k: usize) -> FreeResolution {
        FreeResolution {
            ring: self.ring.clone(),
            shifts: self.shifts.get(k..).map_or(Vec::new(), |s| s.to_vec()),
            differentials: self.differentials.get(k..).map_or(Vec::new(), |d| d.to_vec()),
        }
    }

    /// The module `coker(d_{i+1}) = im(d_i)` presented on the generators of `F_i`.
    pub fn cokernel_at(&self, i: usize) -> Result<ModulePresentation> {
        ModulePresentation::new(
            &self.ring,
            self.shifts(i).to_vec(),
            self.differential(i + 1).to_vec(),
        )
    }
}

/// Pivots out constant entries: take the first one in row-major order, solve for that
/// generator, drop it together with the relation, and repeat.
fn prune_constants(
    mut shifts: Vec<Multidegree>,
    mut rels: Vec<FreeModuleElement>,
) -> (Vec<Multidegree>, Vec<FreeModuleElement>) {
    loop {
        let pivot = (0..shifts.len()).find_map(|row| {
            rels.iter()
                .position(|r| r.component(row).as_nonzero_constant().is_some())
                .map(|col| (row, col))
        });
        let Some((row, col)) = pivot else {
            return (shifts, rels);
        };
        let p = rels.remove(col);
        let inv = p.component(row).as_nonzero_constant().unwrap().inv();
        let p = p.scale(&inv);
        rels = rels
            .into_iter()
            .map(|r| {
                let c = r.component(row).clone();
                let r = if c.is_zero() { r } else { r.sub(&p.mul_poly(&c)) };
                r.without(row)
            })
            .filter(|r| !r.is_zero())
            .collect();
        shifts.remove(row);
    }
}

fn check_limits(
    limits: &ResolutionLimits,
    order: &TermOrder,
    level: usize,
    shifts: &[Multidegree],
) -> Result<()> {
    if let Some(l) = limits.max_length {
        if level > l && !shifts.is_empty() {
            return Err(Error::ResourceLimit(format!(
                "resolution longer than the cap {l}"
            )));
        }
    }
    if let Some(m) = limits.max_degree {
        if let Some(s) = shifts.iter().find(|s| order.shift_degree(s) > m) {
            return Err(Error::ResourceLimit(format!(
                "shift {s} exceeds the degree cap {m}"
            )));
        }
    }
    Ok(())
}

/// Minimal free resolution with the default order of the ring.
pub fn minimal_free_resolution(
    ring: &MultigradedRing,
    p: &ModulePresentation,
) -> Result<FreeResolution> {
    let order = default_order(ring)?;
    minimal_free_resolution_with(ring, p, &order, &ResolutionLimits::default())
}

/// Minimal free resolution: prune constant entries from the presentation, then alternate
/// greedy minimal generators and syzygies. `order` must carry a positive coarsening vector.
pub fn minimal_free_resolution_with(
    ring: &MultigradedRing,
    p: &ModulePresentation,
    order: &TermOrder,
    limits: &ResolutionLimits,
) -> Result<FreeResolution> {
    if order.grading().is_none() {
        return Err(Error::Input(
            "resolutions need an order built from a positive coarsening vector".into(),
        ));
    }
    let rels: Vec<FreeModuleElement> =
        p.relations().iter().filter(|r| !r.is_zero()).cloned().collect();
    let (f0, rels) = prune_constants(p.shifts().to_vec(), rels);
    check_limits(limits, order, 0, &f0)?;
    let mut shifts = vec![f0];
    let mut differentials = Vec::new();
    let mut gens = rels;
    let n = ring.nvars();
    while !gens.is_empty() {
        let level = shifts.len();
        let target = FreeModule::new(shifts[level - 1].clone());
        let keep = minimal_generators(ring, &target, &gens, order)?;
        let cols: Vec<FreeModuleElement> = keep.iter().map(|&k| gens[k].clone()).collect();
        let degs: Vec<Multidegree> = cols
            .iter()
            .map(|c| target.degree_of(ring, c))
            .collect::<Result<_>>()?;
        check_limits(limits, order, level, &degs)?;
        assert!(level <= n, "resolution longer than the number of variables");
        let (_, syz) = syzygy_basis(ring, &target, &cols, &degs, order)?;
        shifts.push(degs);
        differentials.push(cols);
        gens = syz;
    }
    Ok(FreeResolution {
        ring: ring.clone(),
        shifts,
        differentials,
    })
}

/// One nonzero Betti number, in the serialized shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub degree: Multidegree,
    pub beta: usize,
}

/// Nonzero graded Betti numbers `beta_{i,a}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Multidegree), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, a: &Multidegree) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Multidegree, usize)> {
        self.entries.iter().map(|((i, a), &b)| (*i, a, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Degrees at level `i`, sorted, with multiplicity.
    pub fn degrees_at(&self, i: usize) -> Vec<Multidegree> {
        self.iter()
            .filter(|(j, _, _)| *j == i)
            .flat_map(|(_, a, b)| std::iter::repeat_n(a.clone(), b))
            .collect()
    }

    pub fn total(&self, i: usize) -> usize {
        self.iter().filter(|(j, _, _)| *j == i).map(|(_, _, b)| b).sum()
    }

    pub fn entries(&self) -> Vec<BettiEntry> {
        self.iter()
            .map(|(i, a, b)| BettiEntry {
                i,
                degree: a.clone(),
                beta: b,
            })
            .collect()
    }

    /// Sums entries along `a . v`.
    pub fn coarsen(&self, v: &CoarseningVector) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, a, b) in self.iter() {
            *entries
                .entry((i, Multidegree(vec![v.degree_of(a)])))
                .or_insert(0) += b;
        }
        BettiTable { entries }
    }
}

pub fn betti_table(f: &FreeResolution) -> BettiTable {
    let mut entries = BTreeMap::new();
    for (i, lvl) in f.levels().iter().enumerate() {
        for a in lvl {
            *entries.entry((i, a.clone())).or_insert(0) += 1;
        }
    }
    BettiTable { entries }
}

pub fn coarsen_resolution(f: &FreeResolution, v: &CoarseningVector) -> Result<FreeResolution> {
    f.coarsen(v)
}

/// `(d_1, ..., d_r)` with `d_l = max (a_l - i)` over nonzero `beta_{i,a}`. Only defined for
/// standard multigraded rings.
pub fn resolution_regularity_vector(ring: &MultigradedRing, b: &BettiTable) -> Result<Multidegree> {
    if !ring.is_standard_multigraded() {
        return Err(Error::Domain(
            "the resolution regularity vector needs a standard multigrading".into(),
        ));
    }
    if b.is_empty() {
        return Err(Error::Domain("the zero module has no regularity vector".into()));
    }
    let r = ring.rank();
    let mut d = vec![i64::MIN; r];
    for (i, a, _) in b.iter() {
        for (dl, &al) in d.iter_mut().zip(&a.0) {
            *dl = (*dl).max(al - i as i64);
        }
    }
    Ok(Multidegree(d))
}

/// `max { j - i s_v - c_v + 1 : beta_{i,j} != 0 }` over a coarse Betti table.
pub fn regnum_lower_bound(bz: &BettiTable, c_v: i64, s_v: i64) -> Result<i64> {
    bz.iter()
        .map(|(i, a, _)| {
            if a.rank() != 1 {
                return Err(Error::Input("lower bound needs a coarse Betti table".into()));
            }
            Ok(a.0[0] - i as i64 * s_v - c_v + 1)
        })
        .try_fold(None, |acc: Option<i64>, x| {
            let x = x?;
            Ok(Some(acc.map_or(x, |m| m.max(x))))
        })?
        .ok_or_else(|| Error::Domain("empty Betti table".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn p1p1() -> MultigradedRing {
        MultigradedRing::standard_multigraded(&[1, 1], Field::Rational).unwrap()
    }

    fn md(x: &[i64]) -> Multidegree {
        Multidegree(x.to_vec())
    }

    #[test]
    fn koszul_resolution() {
        let r = p1p1();
        let i = vec![r.parse("x0*x1").unwrap(), r.parse("y0*y1").unwrap()];
        let p = ModulePresentation::quotient(&r, &i).unwrap();
        let f = minimal_free_resolution(&r, &p).unwrap();
        assert_eq!(f.length(), 2);
        assert!(f.is_complex() && f.is_minimal() && f.is_homogeneous());
        let b = betti_table(&f);
        assert_eq!(b.get(0, &md(&[0, 0])), 1);
        assert_eq!(b.get(1, &md(&[2, 0])), 1);
        assert_eq!(b.get(1, &md(&[0, 2])), 1);
        assert_eq!(b.get(2, &md(&[2, 2])), 1);
        assert_eq!(b.entries().len(), 4);
        let c = b.coarsen(&CoarseningVector::new(vec![1, 2]));
        assert_eq!(c.degrees_at(1), vec![md(&[2]), md(&[4])]);
        assert_eq!(c.degrees_at(2), vec![md(&[6])]);
        assert_eq!(regnum_lower_bound(&b.coarsen(&CoarseningVector::ones(2)), 1, 1).unwrap(), 2);
        assert_eq!(resolution_regularity_vector(&r, &b).unwrap(), md(&[1, 1]));
    }

    #[test]
    fn free_module_has_length_zero() {
        let r = p1p1();
        let p = ModulePresentation::free(&r, vec![md(&[1, 0]), md(&[0, 1])]).unwrap();
        let f = minimal_free_resolution(&r, &p).unwrap();
        assert_eq!(f.length(), 0);
        let b = betti_table(&f);
        assert_eq!(b.total(0), 2);
        let bz = b.coarsen(&CoarseningVector::new(vec![5, 3]));
        assert_eq!(regnum_lower_bound(&bz, 15, 0).unwrap(), -9);
    }

    #[test]
    fn constant_entries_are_pruned() {
        let r = p1p1();
        let zero = md(&[0, 0]);
        let rels = vec![
            FreeModuleElement::new(vec![r.parse("x0").unwrap(), r.parse("x0").unwrap()]),
            FreeModuleElement::new(vec![r.parse("y0").unwrap(), r.zero()]),
        ];
        let p = ModulePresentation::new(&r, vec![zero.clone(), md(&[0, 0])], rels.clone()).unwrap();
        let f = minimal_free_resolution(&r, &p).unwrap();
        assert_eq!(f.rank(0), 2);
        // A unit relation kills a generator.
        let rels = vec![FreeModuleElement::new(vec![r.parse("x0").unwrap(), r.one()])];
        let p = ModulePresentation::new(&r, vec![zero, md(&[1, 0])], rels).unwrap();
        let f = minimal_free_resolution(&r, &p).unwrap();
        assert_eq!(f.rank(0), 1);
        assert_eq!(f.length(), 0);
        assert_eq!(f.shifts(0), &[md(&[0, 0])]);
    }

    #[test]
    fn redundant_relations_dropped() {
        let r = p1p1();
        let i = vec![
            r.parse("x0*y0").unwrap(),
            r.parse("x0^2*y0").unwrap(),
            r.parse("x1*y1").unwrap(),
        ];
        let p = ModulePresentation::quotient(&r, &i).unwrap();
        let f = minimal_free_resolution(&r, &p).unwrap();
        assert_eq!(f.rank(1), 2);
        assert_eq!(f.rank(2), 1);
    }

    #[test]
    fn length_cap_is_enforced() {
        let r = p1p1();
        let i = vec![r.parse("x0*x1").unwrap(), r.parse("y0*y1").unwrap()];
        let p = ModulePresentation::quotient(&r, &i).unwrap();
        let order = default_order(&r).unwrap();
        let limits = ResolutionLimits {
            max_length: Some(1),
            max_degree: None,
        };
        let e = minimal_free_resolution_with(&r, &p, &order, &limits).unwrap_err();
        assert_eq!(e.exit_code(), 5);
    }

    #[test]
    fn regularity_vector_needs_standard_grading() {
        let r = MultigradedRing::from_parts(&["x", "y"], vec![vec![1], vec![2]], Field::Rational)
            .unwrap();
        let p = ModulePresentation::quotient(&r, &[]).unwrap();
        let b = betti_table(&minimal_free_resolution(&r, &p).unwrap());
        assert!(resolution_regularity_vector(&r, &b).is_err());
    }
}
