//! a-invariants of coarsened modules. The general route reads local cohomology off
//! `Ext^j(M, S(-sigma))` through graded local duality; square-free monomial quotients
//! can also use Hochster's formula.

use std::collections::BTreeSet;

use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::{CoarseningVector, Multidegree};
use crate::groebner::{default_order, groebner_basis, syzygy_basis, GroebnerBasis};
use crate::linalg::Matrix;
use crate::module::{FreeModule, FreeModuleElement, ModulePresentation};
use crate::poly::Monomial;
use crate::resolution::{minimal_free_resolution, FreeResolution};
use crate::ring::MultigradedRing;

/// `a^i` for `i = 0..=n`; `None` stands for minus infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInvariants {
    values: Vec<Option<i64>>,
}

impl AInvariants {
    pub fn new(values: Vec<Option<i64>>) -> Self {
        AInvariants { values }
    }

    pub fn get(&self, i: usize) -> Option<i64> {
        self.values.get(i).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Option<i64>] {
        &self.values
    }

    /// Indices with a finite value.
    pub fn finite(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.map(|a| (i, a)))
    }
}

struct AEntry(usize, Option<i64>);

impl Serialize for AEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AInvariant", 3)?;
        st.serialize_field("i", &self.0)?;
        st.serialize_field("value", &self.1)?;
        st.serialize_field("finite", &self.1.is_some())?;
        st.end()
    }
}

impl Serialize for AInvariants {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.values.len()))?;
        for (i, a) in self.values.iter().enumerate() {
            seq.serialize_element(&AEntry(i, *a))?;
        }
        seq.end()
    }
}

/// `E^j = ker(d_{j+1}^T) / im(d_j^T)` inside the dual free module `F_j^*`.
#[derive(Clone, Debug)]
pub struct ExtModule {
    j: usize,
    ambient: FreeModule,
    kernel_gens: Vec<FreeModuleElement>,
    generators: Vec<Multidegree>,
    kernel: GroebnerBasis,
    image: GroebnerBasis,
    image_gens: Vec<FreeModuleElement>,
}

impl ExtModule {
    pub fn index(&self) -> usize {
        self.j
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    /// Degrees of kernel generators that survive in the quotient.
    pub fn generator_degrees(&self) -> &[Multidegree] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Least `v`-degree of a nonzero element. The coarse grading is positive, so this is
    /// attained by a generator.
    pub fn initial_degree(&self, v: &CoarseningVector) -> Option<i64> {
        self.generators.iter().map(|d| v.degree_of(d)).min()
    }

    /// `dim (E^j)_d` in the `v`-coarsening, as `dim (F/L)_d - dim (F/K)_d`.
    pub fn piece_dimension(&self, ring: &MultigradedRing, v: &CoarseningVector, d: i64) -> Result<u64> {
        if self.is_zero() {
            return Ok(0);
        }
        let w = v.vdegs(ring.degrees())?;
        let sd: Vec<i64> = self.ambient.shifts().iter().map(|s| v.degree_of(s)).collect();
        Ok(self.image.count_standard(&w, &sd, d) - self.kernel.count_standard(&w, &sd, d))
    }

    /// A presentation of the subquotient on the kernel generators.
    pub fn presentation(&self, ring: &MultigradedRing) -> Result<ModulePresentation> {
        let order = self.kernel.order().clone();
        let k = self.kernel_gens.len();
        let mut gens = self.kernel_gens.clone();
        gens.extend(self.image_gens.iter().cloned());
        let degs: Vec<Multidegree> = gens
            .iter()
            .map(|g| self.ambient.degree_of(ring, g))
            .collect::<Result<_>>()?;
        let (_, syz) = syzygy_basis(ring, &self.ambient, &gens, &degs, &order)?;
        let rels = syz
            .into_iter()
            .map(|s| FreeModuleElement::new(s.components()[..k].to_vec()))
            .filter(|s| !s.is_zero())
            .collect();
        ModulePresentation::new(ring, degs[..k].to_vec(), rels)
    }
}

fn transpose(d: &[FreeModuleElement], rows: usize) -> Vec<FreeModuleElement> {
    (0..rows)
        .map(|l| FreeModuleElement::new(d.iter().map(|c| c.component(l).clone()).collect()))
        .collect()
}

/// `Ext^j(M, S(-sigma))` for `j = 0..=n`, by dualizing a minimal resolution of `M`.
pub fn ext_from_resolution(res: &FreeResolution) -> Result<Vec<ExtModule>> {
    let ring = res.ring();
    let order = default_order(ring)?;
    let sigma = ring.degrees().column_sum();
    let dual = |i: usize| -> FreeModule {
        FreeModule::new(res.shifts(i).iter().map(|a| &sigma - a).collect())
    };
    (0..=ring.nvars())
        .map(|j| {
            let ambient = dual(j);
            let kernel_gens: Vec<FreeModuleElement> = if res.rank(j + 1) == 0 {
                (0..ambient.rank()).map(|k| ambient.basis_element(ring, k)).collect()
            } else {
                let cols = transpose(res.differential(j + 1), res.rank(j));
                let target = dual(j + 1);
                let (_, syz) =
                    syzygy_basis(ring, &target, &cols, ambient.shifts(), &order)?;
                syz
            };
            let image_gens: Vec<FreeModuleElement> = if j == 0 {
                Vec::new()
            } else {
                transpose(res.differential(j), res.rank(j - 1))
                    .into_iter()
                    .filter(|c| !c.is_zero())
                    .collect()
            };
            let image = groebner_basis(ring, &ambient, &image_gens, &order)?;
            let kernel = groebner_basis(ring, &ambient, &kernel_gens, &order)?;
            let mut generators = Vec::new();
            for g in &kernel_gens {
                if !g.is_zero() && !image.contains(g) {
                    generators.push(ambient.degree_of(ring, g)?);
                }
            }
            generators.sort();
            generators.dedup();
            Ok(ExtModule {
                j,
                ambient,
                kernel_gens,
                generators,
                kernel,
                image,
                image_gens,
            })
        })
        .collect()
}

/// `Ext^j(M, S(-sigma))` for `j = 0..=n`. The modules are finely graded and serve every
/// positive `v`; `v` is validated here.
pub fn ext_modules(
    ring: &MultigradedRing,
    p: &ModulePresentation,
    v: &CoarseningVector,
) -> Result<Vec<ExtModule>> {
    v.vdegs(ring.degrees())?;
    ext_from_resolution(&minimal_free_resolution(ring, p)?)
}

/// `a^i = -indeg(E^{n-i})` by graded local duality.
pub fn a_invariants_from_ext(exts: &[ExtModule], v: &CoarseningVector) -> AInvariants {
    let n = exts.len() - 1;
    AInvariants::new(
        (0..=n)
            .map(|i| exts[n - i].initial_degree(v).map(|d| -d))
            .collect(),
    )
}

pub fn a_invariants_ext(
    ring: &MultigradedRing,
    p: &ModulePresentation,
    v: &CoarseningVector,
) -> Result<AInvariants> {
    Ok(a_invariants_from_ext(&ext_modules(ring, p, v)?, v))
}

/// `dim H^i_m(M^[v])_q`, read as `dim (E^{n-i})_{-q}`.
pub fn local_cohomology_dimension(
    ring: &MultigradedRing,
    exts: &[ExtModule],
    v: &CoarseningVector,
    i: usize,
    q: i64,
) -> Result<u64> {
    let n = exts.len() - 1;
    if i > n {
        return Ok(0);
    }
    exts[n - i].piece_dimension(ring, v, -q)
}

/// A simplicial complex on the variables of a ring, stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    nvertices: usize,
    facets: Vec<u64>,
}

fn mask(face: &[usize]) -> u64 {
    face.iter().fold(0, |m, &i| m | (1 << i))
}

fn unmask(m: u64) -> Vec<usize> {
    (0..64).filter(|&i| m >> i & 1 == 1).collect()
}

impl SimplicialComplex {
    /// Facets may be given redundantly; only maximal ones are kept. No facets at all is the
    /// void complex, while a single empty facet is `{emptyset}`.
    pub fn new(nvertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if nvertices > 63 {
            return Err(Error::Input("at most 63 vertices are supported".into()));
        }
        if let Some(&i) = facets.iter().flatten().find(|&&i| i >= nvertices) {
            return Err(Error::Input(format!("vertex {i} out of range")));
        }
        let masks: BTreeSet<u64> = facets.iter().map(|f| mask(f)).collect();
        let facets = masks
            .iter()
            .copied()
            .filter(|&f| !masks.iter().any(|&g| g != f && g & f == f))
            .collect();
        Ok(SimplicialComplex { nvertices, facets })
    }

    /// Vertices and facets named by ring variables.
    pub fn from_names(
        ring: &MultigradedRing,
        vertices: &[String],
        facets: &[Vec<String>],
    ) -> Result<Self> {
        let index = |name: &String| {
            ring.var_index(name)
                .ok_or_else(|| Error::Input(format!("vertex {name} is not a ring variable")))
        };
        let verts: Vec<usize> = vertices.iter().map(index).collect::<Result<_>>()?;
        let facets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|x| {
                        let i = index(x)?;
                        if verts.contains(&i) {
                            Ok(i)
                        } else {
                            Err(Error::Input(format!("facet vertex {x} is not listed")))
                        }
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::new(ring.nvars(), &facets)
    }

    /// The complex whose Stanley-Reisner ideal is generated by the given square-free
    /// monomials.
    pub fn from_monomial_ideal(nvars: usize, gens: &[Monomial]) -> Result<Self> {
        if nvars > 20 {
            return Err(Error::ResourceLimit(
                "Stanley-Reisner complexes limited to 20 variables".into(),
            ));
        }
        if let Some(g) = gens.iter().find(|g| !g.is_squarefree()) {
            return Err(Error::Domain(format!("{g:?} is not square-free")));
        }
        let non: Vec<u64> = gens.iter().map(|g| mask(&g.support())).collect();
        let faces: Vec<Vec<usize>> = (0u64..1 << nvars)
            .filter(|&f| !non.iter().any(|&m| m & f == m))
            .map(unmask)
            .collect();
        Self::new(nvars, &faces)
    }

    pub fn nvertices(&self) -> usize {
        self.nvertices
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| unmask(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    fn face_masks(&self) -> Vec<u64> {
        let mut all = BTreeSet::new();
        for &f in &self.facets {
            let mut s = f;
            loop {
                all.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut v: Vec<u64> = all.into_iter().collect();
        v.sort_by_key(|&m| (m.count_ones(), m));
        v
    }

    /// All faces including the empty one, by size then lexicographically on bits.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.face_masks().into_iter().map(unmask).collect()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let m = mask(face);
        self.facets.iter().any(|&f| f & m == m)
    }

    /// `{ tau : tau and sigma disjoint, tau + sigma a face }`.
    pub fn link(&self, sigma: &[usize]) -> SimplicialComplex {
        let s = mask(sigma);
        let facets = self
            .facets
            .iter()
            .filter(|&&f| f & s == s)
            .map(|&f| f & !s)
            .collect::<BTreeSet<u64>>();
        let masks: Vec<u64> = facets.iter().copied().collect();
        SimplicialComplex {
            nvertices: self.nvertices,
            facets: masks
                .iter()
                .copied()
                .filter(|&f| !masks.iter().any(|&g| g != f && g & f == f))
                .collect(),
        }
    }

    /// Minimal non-faces as square-free monomials.
    pub fn stanley_reisner_ideal(&self) -> Vec<Monomial> {
        let n = self.nvertices;
        let is_face = |m: u64| self.facets.iter().any(|&f| f & m == m);
        let mut out = Vec::new();
        let mut cands: Vec<u64> = (0u64..1 << n).filter(|&m| !is_face(m)).collect();
        cands.sort_by_key(|&m| (m.count_ones(), m));
        let mut mins: Vec<u64> = Vec::new();
        for m in cands {
            if mins.iter().all(|&g| g & m != g) {
                mins.push(m);
            }
        }
        for m in mins {
            let e: Vec<u32> = (0..n).map(|i| (m >> i & 1) as u32).collect();
            out.push(Monomial::from_exponents(e));
        }
        out
    }
}

/// `dim H~_k(K)` for `k = -1..=dim K`, at index `k + 1`. Empty for the void complex.
pub fn reduced_homology_ranks(k: &SimplicialComplex, field: Field) -> Vec<usize> {
    if k.is_void() {
        return Vec::new();
    }
    let faces = k.face_masks();
    let top = faces.iter().map(|m| m.count_ones() as usize).max().unwrap();
    let by_size: Vec<Vec<u64>> = (0..=top)
        .map(|s| faces.iter().copied().filter(|m| m.count_ones() as usize == s).collect())
        .collect();
    // rank of the boundary from faces of size s to size s - 1
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        let rows = &by_size[s - 1];
        let cols = &by_size[s];
        let mut m = Matrix::zeros(field, rows.len(), cols.len());
        for (c, &f) in cols.iter().enumerate() {
            for (pos, v) in unmask(f).into_iter().enumerate() {
                let g = f & !(1 << v);
                let r = rows.binary_search(&g).expect("face closure");
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                m.set(r, c, field.from_i64(sign));
            }
        }
        m.rank()
    };
    let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
    (0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// Faces `sigma` with `H~_{i-|sigma|-1}(lk sigma) != 0`, with that rank.
pub fn hochster_support(
    k: &SimplicialComplex,
    ring: &MultigradedRing,
    i: usize,
) -> Result<Vec<(Vec<usize>, usize)>> {
    if k.nvertices() != ring.nvars() {
        return Err(Error::Input(
            "complex and ring have different vertex sets".into(),
        ));
    }
    let mut out = Vec::new();
    for sigma in k.faces() {
        let deg = i as i64 - sigma.len() as i64 - 1;
        if deg < -1 {
            continue;
        }
        let h = reduced_homology_ranks(&k.link(&sigma), ring.field());
        let rank = h.get((deg + 1) as usize).copied().unwrap_or(0);
        if rank > 0 {
            out.push((sigma, rank));
        }
    }
    Ok(out)
}

/// `a^i = max -sum_{j in sigma} vdeg(x_j)` over the Hochster support in cohomological
/// degree `i`.
pub fn a_invariants_hochster(
    k: &SimplicialComplex,
    ring: &MultigradedRing,
    v: &CoarseningVector,
) -> Result<AInvariants> {
    let w = v.vdegs(ring.degrees())?;
    let values = (0..=ring.nvars())
        .map(|i| {
            Ok(hochster_support(k, ring, i)?
                .iter()
                .map(|(s, _)| -s.iter().map(|&j| w[j]).sum::<i64>())
                .max())
        })
        .collect::<Result<_>>()?;
    Ok(AInvariants::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1p1() -> MultigradedRing {
        MultigradedRing::standard_multigraded(&[1, 1], Field::Rational).unwrap()
    }

    fn four_cycle() -> SimplicialComplex {
        // x0 x1 y0 y1 with non-edges x0x1 and y0y1
        SimplicialComplex::new(4, &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]).unwrap()
    }

    #[test]
    fn homology_of_small_complexes() {
        let q = Field::Rational;
        assert_eq!(reduced_homology_ranks(&four_cycle(), q), vec![0, 0, 1]);
        let pts = SimplicialComplex::new(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(reduced_homology_ranks(&pts, q), vec![0, 1]);
        let empty = SimplicialComplex::new(3, &[vec![]]).unwrap();
        assert_eq!(reduced_homology_ranks(&empty, q), vec![1]);
        let simplex = SimplicialComplex::new(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(reduced_homology_ranks(&simplex, q), vec![0, 0, 0, 0]);
    }

    #[test]
    fn projective_plane_homology_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let f = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets: Vec<Vec<usize>> = f.iter().map(|x| x.to_vec()).collect();
        let k = SimplicialComplex::new(6, &facets).unwrap();
        assert_eq!(reduced_homology_ranks(&k, Field::Rational), vec![0, 0, 0, 0]);
        assert_eq!(
            reduced_homology_ranks(&k, Field::prime(2).unwrap()),
            vec![0, 0, 1, 1]
        );
    }

    #[test]
    fn four_cycle_support() {
        let r = p1p1();
        let k = four_cycle();
        let s = hochster_support(&k, &r, 2).unwrap();
        assert_eq!(s.len(), 9);
        assert!(s.iter().all(|(_, rank)| *rank == 1));
        assert_eq!(s.iter().filter(|(f, _)| f.is_empty()).count(), 1);
        assert_eq!(s.iter().filter(|(f, _)| f.len() == 1).count(), 4);
        assert_eq!(s.iter().filter(|(f, _)| f.len() == 2).count(), 4);
        assert!(hochster_support(&k, &r, 0).unwrap().is_empty());
        assert!(hochster_support(&k, &r, 1).unwrap().is_empty());
    }

    #[test]
    fn stanley_reisner_round_trip() {
        let k = four_cycle();
        let ideal = k.stanley_reisner_ideal();
        assert_eq!(ideal.len(), 2);
        assert_eq!(SimplicialComplex::from_monomial_ideal(4, &ideal).unwrap(), k);
    }

    #[test]
    fn ext_of_polynomial_ring() {
        let r = p1p1();
        let p = ModulePresentation::quotient(&r, &[]).unwrap();
        let v = CoarseningVector::ones(2);
        let exts = ext_modules(&r, &p, &v).unwrap();
        assert_eq!(exts[0].generator_degrees(), &[Multidegree(vec![2, 2])]);
        assert!(exts[1..].iter().all(|e| e.is_zero()));
        let a = a_invariants_from_ext(&exts, &v);
        assert_eq!(a.values(), &[None, None, None, None, Some(-4)]);
    }

    #[test]
    fn ext_of_four_cycle_quotient() {
        let r = p1p1();
        let i = vec![r.parse("x0*x1").unwrap(), r.parse("y0*y1").unwrap()];
        let p = ModulePresentation::quotient(&r, &i).unwrap();
        for v in [[1, 1], [2, 3], [3, 5]] {
            let v = CoarseningVector::new(v.to_vec());
            let exts = ext_modules(&r, &p, &v).unwrap();
            let nonzero: Vec<usize> = exts.iter().filter(|e| !e.is_zero()).map(|e| e.index()).collect();
            assert_eq!(nonzero, vec![2]);
            let a = a_invariants_from_ext(&exts, &v);
            assert_eq!(a, a_invariants_hochster(&four_cycle(), &r, &v).unwrap());
            assert_eq!(a.get(2), Some(0));
        }
    }

    #[test]
    fn gaps_in_weighted_line() {
        let r = MultigradedRing::from_parts(&["x1", "x2"], vec![vec![4], vec![4]], Field::Rational)
            .unwrap();
        let p = ModulePresentation::quotient(&r, &[]).unwrap();
        let v = CoarseningVector::new(vec![1]);
        let exts = ext_modules(&r, &p, &v).unwrap();
        for q in -20..=0 {
            let d = local_cohomology_dimension(&r, &exts, &v, 2, q).unwrap();
            assert_eq!(d > 0, q <= -8 && q % 4 == 0, "q = {q}");
        }
        assert_eq!(local_cohomology_dimension(&r, &exts, &v, 2, -12).unwrap(), 2);
    }

    #[test]
    fn ext_presentation_of_cyclic_quotient() {
        let r = p1p1();
        let i = vec![r.parse("x0*x1").unwrap(), r.parse("y0*y1").unwrap()];
        let p = ModulePresentation::quotient(&r, &i).unwrap();
        let exts = ext_modules(&r, &p, &CoarseningVector::ones(2)).unwrap();
        let e2 = exts[2].presentation(&r).unwrap();
        // E^2 of a complete intersection is a shifted copy of the quotient.
        let v = CoarseningVector::ones(2);
        for d in -4..2 {
            let lhs = crate::groebner::graded_piece_dimension(&r, &e2, &v, d).unwrap();
            let rhs = exts[2].piece_dimension(&r, &v, d).unwrap();
            assert_eq!(lhs, rhs, "degree {d}");
        }
    }
}
