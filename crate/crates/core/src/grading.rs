//! Degree matrices, positivity of a grading, positive coarsening vectors and
//! lattice regions built from translates of the degree semigroup.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default per-coordinate truncation for queries that enumerate inside a box.
pub const DEFAULT_BOX: i64 = 10;
/// Largest box searched by [`find_positive_coarsening_vector`].
pub const MAX_SEARCH_BOX: i64 = 64;

/// An element of `Z^r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn zero(r: usize) -> Self {
        Multidegree(vec![0; r])
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        Multidegree(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dot(&self, other: &[i64]) -> i64 {
        debug_assert_eq!(self.0.len(), other.len());
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        Multidegree(self.0.iter().map(|a| a * k).collect())
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Multidegree) -> bool {
        debug_assert_eq!(self.rank(), other.rank());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: &Multidegree) -> Multidegree {
        debug_assert_eq!(self.rank(), rhs.rank());
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Multidegree {
    type Output = Multidegree;
    fn sub(self, rhs: &Multidegree) -> Multidegree {
        debug_assert_eq!(self.rank(), rhs.rank());
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Multidegree {
    type Output = Multidegree;
    fn neg(self) -> Multidegree {
        Multidegree(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<i64>> for Multidegree {
    fn from(v: Vec<i64>) -> Self {
        Multidegree(v)
    }
}

/// The degrees `a_1, ..., a_n` of the variables, one column per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMatrix {
    columns: Vec<Multidegree>,
    rank: usize,
}

impl DegreeMatrix {
    /// Builds a matrix from per-variable degree vectors. Ragged or empty input is an input error.
    pub fn from_columns(columns: Vec<Vec<i64>>) -> Result<Self> {
        let Some(first) = columns.first() else {
            return Err(Error::Input("degree matrix has no columns".into()));
        };
        let rank = first.len();
        if rank == 0 {
            return Err(Error::Input("degree matrix has zero rows".into()));
        }
        if let Some((i, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != rank) {
            return Err(Error::Input(format!(
                "ragged degree matrix: column {i} has {} entries, expected {rank}",
                c.len()
            )));
        }
        Ok(DegreeMatrix {
            columns: columns.into_iter().map(Multidegree).collect(),
            rank,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Multidegree] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &Multidegree {
        &self.columns[i]
    }

    /// Coarsened variable degrees `a_i . v`.
    pub fn dot_all(&self, v: &[i64]) -> Vec<i64> {
        self.columns.iter().map(|a| a.dot(v)).collect()
    }

    /// Sum of the columns (the multidegree of `x_1 ... x_n`).
    pub fn column_sum(&self) -> Multidegree {
        self.columns
            .iter()
            .fold(Multidegree::zero(self.rank), |acc, c| &acc + c)
    }
}

/// An integral vector `v` used to collapse the `Z^r` grading to `Z` by dot product.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoarseningVector(pub Vec<i64>);

impl CoarseningVector {
    pub fn new(coords: Vec<i64>) -> Self {
        CoarseningVector(coords)
    }

    pub fn ones(r: usize) -> Self {
        CoarseningVector(vec![1; r])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_positive_for(&self, a: &DegreeMatrix) -> bool {
        self.rank() == a.rank() && a.columns().iter().all(|c| c.dot(&self.0) >= 1)
    }

    /// The coarsened degrees `vdeg(x_i)`, failing unless all of them are positive.
    pub fn vdegs(&self, a: &DegreeMatrix) -> Result<Vec<i64>> {
        if self.rank() != a.rank() {
            return Err(Error::Input(format!(
                "coarsening vector {self} has length {}, grading has rank {}",
                self.rank(),
                a.rank()
            )));
        }
        let d = a.dot_all(&self.0);
        if let Some(i) = d.iter().position(|&x| x < 1) {
            return Err(Error::Domain(format!(
                "{self} is not a positive coarsening vector: variable {i} gets degree {}",
                d[i]
            )));
        }
        Ok(d)
    }

    pub fn degree_of(&self, a: &Multidegree) -> i64 {
        a.dot(&self.0)
    }

    pub fn scaled(&self, d: i64) -> Self {
        CoarseningVector(self.0.iter().map(|x| x * d).collect())
    }

    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x))
    }
}

impl fmt::Debug for CoarseningVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CoarseningVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Multidegree(self.0.clone()))
    }
}

/// Decides whether the grading is positive: no zero column and `{v . a_i >= 1}` feasible.
pub fn check_positive_grading(a: &DegreeMatrix) -> bool {
    if a.columns().iter().any(|c| c.0.iter().all(|&x| x == 0)) {
        return false;
    }
    strictly_positive_functional_exists(a)
}

/// Fourier-Motzkin elimination on the strict system `a_i . v > 0`, which is feasible exactly
/// when `a_i . v >= 1` is. Rows are kept integral and primitive; a zero row means `0 > 0`.
fn strictly_positive_functional_exists(a: &DegreeMatrix) -> bool {
    let mut rows: Vec<Vec<BigInt>> = a
        .columns()
        .iter()
        .map(|c| c.0.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    for k in 0..a.rank() {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut next = Vec::new();
        for row in rows {
            if row[k].is_positive() {
                pos.push(row);
            } else if row[k].is_negative() {
                neg.push(row);
            } else {
                next.push(row);
            }
        }
        for p in &pos {
            for q in &neg {
                let pk = &p[k];
                let qk = -&q[k];
                let combined: Vec<BigInt> =
                    p.iter().zip(q).map(|(x, y)| x * &qk + y * pk).collect();
                next.push(primitive_row(combined));
            }
        }
        if next.iter().any(|r| r.iter().all(|c| c.is_zero())) {
            return false;
        }
        next.sort();
        next.dedup();
        rows = next;
    }
    rows.is_empty()
}

fn primitive_row(row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g == BigInt::from(1) {
        row
    } else {
        row.into_iter().map(|c| c / &g).collect()
    }
}

/// Reduces `v` to the primitive vector on the same ray.
pub fn primitive_reduce(v: &CoarseningVector) -> CoarseningVector {
    let g = v.content();
    if g <= 1 {
        return v.clone();
    }
    CoarseningVector(v.0.iter().map(|x| x / g).collect())
}

/// All integer vectors of `Z^r` whose max-norm equals `b`.
fn shell(r: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-b; r];
    loop {
        if cur.iter().any(|x| x.abs() == b) {
            out.push(cur.clone());
        }
        let mut k = r;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < b {
                cur[k] += 1;
                for c in cur.iter_mut().skip(k + 1) {
                    *c = -b;
                }
                break;
            }
        }
    }
}

fn l1(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

/// Finds a primitive positive coarsening vector by expanding max-norm boxes; within the
/// first box containing one, returns the minimum by L1 norm then lexicographic order.
pub fn find_positive_coarsening_vector(a: &DegreeMatrix) -> Result<CoarseningVector> {
    if !check_positive_grading(a) {
        return Err(Error::NotPositive(
            "no vector v with v . deg(x_i) >= 1 for every variable".into(),
        ));
    }
    for b in 1..=MAX_SEARCH_BOX {
        let best = shell(a.rank(), b)
            .into_iter()
            .map(CoarseningVector)
            .filter(|v| v.content() == 1 && v.is_positive_for(a))
            .min_by(|x, y| l1(&x.0).cmp(&l1(&y.0)).then_with(|| x.0.cmp(&y.0)));
        if let Some(v) = best {
            return Ok(v);
        }
    }
    Err(Error::ResourceLimit(format!(
        "no positive coarsening vector with coordinates bounded by {MAX_SEARCH_BOX}"
    )))
}

/// Every primitive positive coarsening vector with all coordinates in `[-bound, bound]`,
/// in lexicographic order.
pub fn positive_vectors_in_box(a: &DegreeMatrix, bound: i64) -> Vec<CoarseningVector> {
    let mut out: Vec<CoarseningVector> = (1..=bound)
        .flat_map(|b| shell(a.rank(), b))
        .map(CoarseningVector)
        .filter(|v| v.content() == 1 && v.is_positive_for(a))
        .collect();
    out.sort();
    out
}

/// How a point of a [`FiniteRegion`] decomposes as `b_k + sum n_i a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub base: usize,
    pub exponents: Vec<u32>,
}

/// A finite, sorted, deduplicated set of multidegrees with a decomposition for each point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRegion {
    points: Vec<Multidegree>,
    witnesses: Vec<Witness>,
}

impl FiniteRegion {
    pub fn points(&self) -> &[Multidegree] {
        &self.points
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, a: &Multidegree) -> bool {
        self.points.binary_search(a).is_ok()
    }

    /// Points present in both regions; witnesses are taken from `self`.
    pub fn intersect(&self, other: &FiniteRegion) -> FiniteRegion {
        let (points, witnesses) = self
            .points
            .iter()
            .zip(&self.witnesses)
            .filter(|(p, _)| other.contains(p))
            .map(|(p, w)| (p.clone(), w.clone()))
            .unzip();
        FiniteRegion { points, witnesses }
    }
}

/// A region of `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeRegion {
    Finite(FiniteRegion),
    /// `union_k (b_k + N^r)`
    OrthantTranslates { bases: Vec<Multidegree> },
    /// `union_k (b_k + Q)` with `Q` generated by the columns; `functional` must be positive on
    /// every generator, which makes membership decidable.
    SemigroupTranslates {
        bases: Vec<Multidegree>,
        generators: DegreeMatrix,
        functional: CoarseningVector,
    },
}

impl DegreeRegion {
    pub fn contains(&self, x: &Multidegree) -> bool {
        match self {
            DegreeRegion::Finite(f) => f.contains(x),
            DegreeRegion::OrthantTranslates { bases } => bases.iter().any(|b| b.le(x)),
            DegreeRegion::SemigroupTranslates {
                bases,
                generators,
                functional,
            } => {
                let vdeg = generators.dot_all(functional.coords());
                let mut memo = HashMap::new();
                bases
                    .iter()
                    .any(|b| in_semigroup(&(x - b), generators, &vdeg, functional, &mut memo))
            }
        }
    }

    /// Minimal elements of the base list (all bases for the finite kind).
    pub fn minimal_bases(&self) -> Vec<Multidegree> {
        match self {
            DegreeRegion::Finite(f) => f.points().to_vec(),
            DegreeRegion::OrthantTranslates { bases } => minimal_elements(bases),
            DegreeRegion::SemigroupTranslates { bases, .. } => bases.clone(),
        }
    }

    /// Members of the region inside the box `[lo, hi]`, sorted.
    pub fn enumerate_box(&self, lo: &Multidegree, hi: &Multidegree) -> Vec<Multidegree> {
        box_points(lo, hi)
            .into_iter()
            .filter(|p| self.contains(p))
            .collect()
    }
}

fn in_semigroup(
    t: &Multidegree,
    gens: &DegreeMatrix,
    vdeg: &[i64],
    v: &CoarseningVector,
    memo: &mut HashMap<Multidegree, bool>,
) -> bool {
    let d = v.degree_of(t);
    if d < 0 {
        return false;
    }
    if d == 0 {
        return t.0.iter().all(|&x| x == 0);
    }
    if let Some(&r) = memo.get(t) {
        return r;
    }
    let r = gens
        .columns()
        .iter()
        .zip(vdeg)
        .filter(|(_, &g)| g <= d)
        .any(|(g, _)| in_semigroup(&(t - g), gens, vdeg, v, memo));
    memo.insert(t.clone(), r);
    r
}

/// Minimal elements of a finite set under the componentwise order, sorted and deduplicated.
pub fn minimal_elements(points: &[Multidegree]) -> Vec<Multidegree> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    pts.iter()
        .filter(|p| !pts.iter().any(|q| q != *p && q.le(p)))
        .cloned()
        .collect()
}

/// All lattice points of the box `[lo, hi]` in lexicographic order.
pub fn box_points(lo: &Multidegree, hi: &Multidegree) -> Vec<Multidegree> {
    let r = lo.rank();
    if lo.0.iter().zip(&hi.0).any(|(a, b)| a > b) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = lo.0.clone();
    loop {
        out.push(Multidegree(cur.clone()));
        let mut k = r;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi.0[k] {
                cur[k] += 1;
                cur[k + 1..r].copy_from_slice(&lo.0[k + 1..r]);
                break;
            }
        }
    }
}

/// Enumerates `{ b_k + sum n_i a_i : n in N^n, v-degree <= bound }` by a breadth-first
/// closure in order of v-degree, retaining one decomposition per point.
pub fn enumerate_bounded_region(
    bases: &[Multidegree],
    a: &DegreeMatrix,
    v: &CoarseningVector,
    bound: i64,
) -> Result<FiniteRegion> {
    let vdeg = v.vdegs(a)?;
    let mut seen: BTreeMap<Multidegree, Witness> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let mut start: Vec<(i64, usize)> = bases
        .iter()
        .enumerate()
        .map(|(k, b)| (v.degree_of(b), k))
        .filter(|&(d, _)| d <= bound)
        .collect();
    start.sort();
    for (_, k) in start {
        if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(bases[k].clone()) {
            e.insert(Witness {
                base: k,
                exponents: vec![0; a.nvars()],
            });
            queue.push_back(bases[k].clone());
        }
    }
    while let Some(p) = queue.pop_front() {
        let pd = v.degree_of(&p);
        let wit = seen[&p].clone();
        for (i, g) in a.columns().iter().enumerate() {
            if pd + vdeg[i] > bound {
                continue;
            }
            let q = &p + g;
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(q.clone()) {
                let mut w = wit.clone();
                w.exponents[i] += 1;
                e.insert(w);
                queue.push_back(q);
            }
        }
    }
    let (points, witnesses) = seen.into_iter().unzip();
    Ok(FiniteRegion { points, witnesses })
}

/// `N^r[j]`: the union of `sign(j) w + N^r` over `w in N^r` with `|w| = |j|`.
pub fn shifted_orthant_region(r: usize, j: i64) -> DegreeRegion {
    let sign = if j < 0 { -1 } else { 1 };
    let bases = compositions(r, j.unsigned_abs() as i64)
        .into_iter()
        .map(|w| Multidegree(w.into_iter().map(|x| sign * x).collect()))
        .collect();
    DegreeRegion::OrthantTranslates { bases }
}

/// Weak compositions of `total` into `r` parts.
pub(crate) fn compositions(r: usize, total: i64) -> Vec<Vec<i64>> {
    if r == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if r == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(r - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
