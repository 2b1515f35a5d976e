//! Finite sets of reduced points in a product of projective spaces.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::grading::{box_points, minimal_elements, CoarseningVector, DegreeRegion, Multidegree};
use crate::groebner::{default_order, ideal_intersection, minimal_generators};
use crate::linalg::Matrix;
use crate::module::{FreeModule, FreeModuleElement, ModulePresentation};
use crate::poly::{monomials_of_degree, Monomial, Polynomial};
use crate::regularity::ModuleAnalysis;
use crate::ring::MultigradedRing;

/// Points of `P^{n_1} x ... x P^{n_r}`, each stored by affine representatives whose first
/// nonzero coordinate in every factor is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dims: Vec<usize>,
    field: Field,
    points: Vec<Vec<Vec<Scalar>>>,
}

impl PointSet {
    pub fn new(dims: &[usize], coords: &[Vec<Vec<i64>>], field: Field) -> Result<Self> {
        let scalars = coords
            .iter()
            .map(|p| {
                p.iter()
                    .map(|f| f.iter().map(|&x| field.from_i64(x)).collect())
                    .collect()
            })
            .collect();
        Self::from_scalars(dims, scalars, field)
    }

    pub fn from_scalars(
        dims: &[usize],
        points: Vec<Vec<Vec<Scalar>>>,
        field: Field,
    ) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Input("no projective factors".into()));
        }
        let mut out: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(points.len());
        for (k, p) in points.into_iter().enumerate() {
            if p.len() != dims.len() {
                return Err(Error::Input(format!(
                    "point {k} has {} factors, expected {}",
                    p.len(),
                    dims.len()
                )));
            }
            let mut norm = Vec::with_capacity(dims.len());
            for (i, (f, &n)) in p.into_iter().zip(dims).enumerate() {
                if f.len() != n + 1 {
                    return Err(Error::Input(format!(
                        "point {k}, factor {i}: {} coordinates for P^{n}",
                        f.len()
                    )));
                }
                let Some(lead) = f.iter().find(|x| !x.is_zero()) else {
                    return Err(Error::Input(format!("point {k}, factor {i} is all zero")));
                };
                let inv = lead.inv();
                norm.push(f.iter().map(|x| x * &inv).collect::<Vec<_>>());
            }
            if out.contains(&norm) {
                return Err(Error::Input(format!("point {k} is repeated")));
            }
            out.push(norm);
        }
        Ok(PointSet {
            dims: dims.to_vec(),
            field,
            points: out,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Vec<Scalar>>] {
        &self.points
    }

    pub fn ring(&self) -> Result<MultigradedRing> {
        MultigradedRing::standard_multigraded(&self.dims, self.field)
    }

    /// `|pi_i(X)|`.
    pub fn projection_count(&self, i: usize) -> usize {
        let mut seen: Vec<&Vec<Scalar>> = Vec::new();
        for p in &self.points {
            if !seen.contains(&&p[i]) {
                seen.push(&p[i]);
            }
        }
        seen.len()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &n in &self.dims {
            off.push(acc);
            acc += n + 1;
        }
        off
    }
}

/// Minimal generators of `I_X`, folding `I_P` into the running intersection in input order.
pub fn point_ideal(x: &PointSet) -> Result<Vec<Polynomial>> {
    if x.is_empty() {
        return Err(Error::Input("empty point set".into()));
    }
    let ring = x.ring()?;
    let order = default_order(&ring)?;
    let off = x.offsets();
    let linear = |p: &Vec<Vec<Scalar>>| -> Vec<Polynomial> {
        let mut gens = Vec::new();
        for (i, f) in p.iter().enumerate() {
            let j0 = f.iter().position(|c| !c.is_zero()).unwrap();
            for (k, c) in f.iter().enumerate() {
                if k == j0 {
                    continue;
                }
                // f[j0] = 1
                gens.push(ring.var(off[i] + k).sub(&ring.var(off[i] + j0).scale(c)));
            }
        }
        gens
    };
    let mut ideal = linear(&x.points[0]);
    for p in &x.points[1..] {
        ideal = ideal_intersection(&ring, &ideal, &linear(p), &order)?;
    }
    let module = FreeModule::new(vec![Multidegree::zero(ring.rank())]);
    let elems: Vec<FreeModuleElement> = ideal
        .iter()
        .map(|f| FreeModuleElement::new(vec![f.clone()]))
        .collect();
    let keep = minimal_generators(&ring, &module, &elems, &order)?;
    Ok(keep.into_iter().map(|k| ideal[k].clone()).collect())
}

/// `S / I_X`.
pub fn point_quotient(x: &PointSet) -> Result<(MultigradedRing, ModulePresentation)> {
    let ring = x.ring()?;
    let p = ModulePresentation::quotient(&ring, &point_ideal(x)?)?;
    Ok((ring, p))
}

/// `H_X(i)`: rank of evaluating all monomials of multidegree `i` at the points.
pub fn hilbert_function_points(x: &PointSet, i: &Multidegree) -> Result<usize> {
    if i.rank() != x.dims.len() {
        return Err(Error::Input(format!("degree {i} has the wrong length")));
    }
    if i.0.iter().any(|&t| t < 0) {
        return Ok(0);
    }
    let field = x.field;
    // per factor: values of each degree-t monomial at each point
    let tables: Vec<Vec<Vec<Scalar>>> = x
        .dims
        .iter()
        .enumerate()
        .map(|(k, &n)| {
            let monos = monomials_of_degree(&vec![1; n + 1], i.0[k]);
            x.points
                .iter()
                .map(|p| monos.iter().map(|m| eval(m, &p[k], field)).collect())
                .collect()
        })
        .collect();
    let rows: Vec<Vec<Scalar>> = (0..x.len())
        .map(|pt| {
            tables.iter().fold(vec![field.one()], |acc, t| {
                acc.iter()
                    .flat_map(|a| t[pt].iter().map(move |b| a * b))
                    .collect()
            })
        })
        .collect();
    Ok(Matrix::from_rows(field, rows).rank())
}

fn eval(m: &Monomial, p: &[Scalar], field: Field) -> Scalar {
    let mut acc = field.one();
    for (c, &e) in p.iter().zip(m.exponents()) {
        for _ in 0..e {
            acc = &acc * c;
        }
    }
    acc
}

/// `H_X` on the box `[0, hi]`, in lexicographic order of degrees.
pub fn hilbert_table(x: &PointSet, hi: &Multidegree) -> Result<Vec<(Multidegree, usize)>> {
    let lo = Multidegree::zero(hi.rank());
    box_points(&lo, hi)
        .into_par_iter()
        .map(|d| Ok((d.clone(), hilbert_function_points(x, &d)?)))
        .collect()
}

/// `reg_B(S/I_X) = { i : H_X(i) = |X| }`, truncated to a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BRegularity {
    pub bound: Multidegree,
    pub minimal: Vec<Multidegree>,
    pub members: Vec<Multidegree>,
}

impl BRegularity {
    pub fn region(&self) -> DegreeRegion {
        DegreeRegion::OrthantTranslates {
            bases: self.minimal.clone(),
        }
    }

    pub fn contains(&self, a: &Multidegree) -> bool {
        self.members.binary_search(a).is_ok()
    }
}

pub fn b_regularity_region(x: &PointSet, bound: &Multidegree) -> Result<BRegularity> {
    let table = hilbert_table(x, bound)?;
    let members: Vec<Multidegree> = table
        .iter()
        .filter(|(_, h)| *h == x.len())
        .map(|(d, _)| d.clone())
        .collect();
    if members.is_empty() {
        return Err(Error::Domain(format!(
            "H_X never reaches |X| inside the box {bound}; use a larger box"
        )));
    }
    for m in &members {
        for k in 0..m.rank() {
            let mut up = m.clone();
            up.0[k] += 1;
            if up.0[k] <= bound.0[k] && members.binary_search(&up).is_err() {
                return Err(Error::Domain(format!(
                    "region not upward closed at {m} inside box {bound}; use a larger box"
                )));
            }
        }
    }
    Ok(BRegularity {
        bound: bound.clone(),
        minimal: minimal_elements(&members),
        members,
    })
}

/// `(t_1, ..., t_r)` with `t_i = min { t : H_X(t e_i) = |pi_i(X)| }`.
pub fn res_reg_vector_points(x: &PointSet) -> Result<Multidegree> {
    let r = x.dims.len();
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let target = x.projection_count(i);
        let mut t = 0;
        loop {
            if hilbert_function_points(x, &Multidegree::unit(r, i).scale(t))? == target {
                break;
            }
            t += 1;
            if t as usize > x.len() {
                return Err(Error::Domain("Hilbert function did not stabilize".into()));
            }
        }
        out.push(t);
    }
    Ok(Multidegree(out))
}

fn binomial_at_least(top: u64, k: u64, target: u64) -> bool {
    // C(top, k) >= target, computed exactly with early exit
    let mut c: u128 = 1;
    for j in 1..=k {
        c = c * (top - k + j) as u128 / j as u128;
        if c >= target as u128 {
            return true;
        }
    }
    c >= target as u128
}

/// `dim_k S_i = prod C(i_k + n_k, n_k)`, saturated at `cap`.
fn ambient_dimension(dims: &[usize], i: &Multidegree, cap: u64) -> u64 {
    let mut acc: u128 = 1;
    for (&n, &t) in dims.iter().zip(&i.0) {
        if t < 0 {
            return 0;
        }
        let mut c: u128 = 1;
        for j in 1..=n as u128 {
            c = c * (t as u128 + j) / j;
            if c > cap as u128 {
                c = cap as u128 + 1;
                break;
            }
        }
        acc = (acc * c).min(cap as u128 + 1);
    }
    acc.min(cap as u128) as u64
}

/// `H_X(i) = min(dim S_i, |X|)` throughout the box.
pub fn generic_position_check(x: &PointSet, bound: &Multidegree) -> Result<bool> {
    let table = hilbert_table(x, bound)?;
    if table.last().map(|(_, h)| *h) != Some(x.len()) {
        return Err(Error::Domain(format!(
            "H_X has not reached |X| at {bound}; use a larger box"
        )));
    }
    let n = x.len() as u64;
    Ok(table
        .iter()
        .all(|(d, h)| *h as u64 == ambient_dimension(&x.dims, d, n)))
}

/// `max_i min { d : C(d + n_i, d) >= count }`.
pub fn generic_regularity_formula(dims: &[usize], count: usize) -> Result<i64> {
    if count == 0 {
        return Err(Error::Input("at least one point is required".into()));
    }
    Ok(dims
        .iter()
        .map(|&n| {
            let mut d = 0u64;
            while !binomial_at_least(d + n as u64, d, count as u64) {
                d += 1;
            }
            d as i64
        })
        .max()
        .unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectionsReport {
    pub d: i64,
    pub pdim: usize,
    pub m: usize,
    pub resolution_vector: Multidegree,
    pub b_regularity_minimal: Vec<Multidegree>,
    pub vector_bounded: bool,
    pub region_contained: bool,
    pub holds: bool,
}

/// Checks `r(M) <= (d,...,d)` and `(d+m,...,d+m) + N^r[-(m-1)]` inside `reg_B` within
/// the box, where `N^r[-j]` is the union of `-lambda + N^r` over `|lambda| = j`.
pub fn connections_check(x: &PointSet, bound: &Multidegree) -> Result<ConnectionsReport> {
    let (ring, p) = point_quotient(x)?;
    let analysis = ModuleAnalysis::new(&ring, &p)?;
    let r = ring.rank();
    let d = analysis.regnum(&CoarseningVector::ones(r))?;
    let pdim = analysis.projective_dimension();
    let m = pdim.min(x.dims.iter().sum::<usize>() + 1);
    let rvec = res_reg_vector_points(x)?;
    let breg = b_regularity_region(x, bound)?;
    let vector_bounded = rvec.0.iter().all(|&t| t <= d);
    let region_contained = if m == 0 {
        true
    } else {
        let corner = d + m as i64;
        box_points(&Multidegree::zero(r), bound).iter().all(|a| {
            let deficit: i64 = a.0.iter().map(|&ak| (corner - ak).max(0)).sum();
            deficit > m as i64 - 1 || breg.contains(a)
        })
    };
    Ok(ConnectionsReport {
        d,
        pdim,
        m,
        resolution_vector: rvec,
        b_regularity_minimal: breg.minimal.clone(),
        vector_bounded,
        region_contained,
        holds: vector_bounded && region_contained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex11() -> PointSet {
        // [1:0] and [0:1] in each factor
        let a = vec![1, 0];
        let b = vec![0, 1];
        PointSet::new(
            &[1, 1],
            &[
                vec![a.clone(), a.clone()],
                vec![a.clone(), b.clone()],
                vec![b.clone(), a.clone()],
                vec![b.clone(), b.clone()],
            ],
            Field::Rational,
        )
        .unwrap()
    }

    #[test]
    fn four_points() {
        let x = ex11();
        let r = x.ring().unwrap();
        let mut gens: Vec<String> = point_ideal(&x)
            .unwrap()
            .iter()
            .map(|f| f.to_string_with(r.names()))
            .collect();
        gens.sort();
        assert_eq!(gens, vec!["x0*x1", "y0*y1"]);
        assert_eq!(hilbert_function_points(&x, &Multidegree(vec![1, 1])).unwrap(), 4);
        assert_eq!(res_reg_vector_points(&x).unwrap(), Multidegree(vec![1, 1]));
        let b = b_regularity_region(&x, &Multidegree(vec![4, 4])).unwrap();
        assert_eq!(b.minimal, vec![Multidegree(vec![1, 1])]);
        assert!(!generic_position_check(&x, &Multidegree(vec![4, 4])).unwrap());
    }

    #[test]
    fn single_point() {
        let x = PointSet::new(&[1, 1], &[vec![vec![1, 0], vec![1, 0]]], Field::Rational).unwrap();
        let r = x.ring().unwrap();
        let gens: Vec<String> = point_ideal(&x)
            .unwrap()
            .iter()
            .map(|f| f.to_string_with(r.names()))
            .collect();
        assert_eq!(gens.len(), 2);
        assert!(gens.contains(&"x1".to_string()) && gens.contains(&"y1".to_string()));
        assert_eq!(res_reg_vector_points(&x).unwrap(), Multidegree(vec![0, 0]));
        assert!(generic_position_check(&x, &Multidegree(vec![2, 2])).unwrap());
        assert!(connections_check(&x, &Multidegree(vec![4, 4])).unwrap().holds);
    }

    #[test]
    fn rejects_bad_points() {
        let f = Field::Rational;
        assert!(PointSet::new(&[1], &[vec![vec![0, 0]]], f).is_err());
        assert!(PointSet::new(&[1], &[vec![vec![1, 2, 3]]], f).is_err());
        assert!(PointSet::new(&[1], &[vec![vec![1, 2]], vec![vec![2, 4]]], f).is_err());
    }

    #[test]
    fn generic_formula() {
        assert_eq!(generic_regularity_formula(&[1, 1], 4).unwrap(), 3);
        assert_eq!(generic_regularity_formula(&[3, 2], 1).unwrap(), 0);
        assert_eq!(generic_regularity_formula(&[2], 6).unwrap(), 2);
        assert_eq!(generic_regularity_formula(&[2], 7).unwrap(), 3);
        assert!(generic_regularity_formula(&[2], 0).is_err());
    }
}
