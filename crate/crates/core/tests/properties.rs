//! Property tests for the invariants the algorithms rely on.

mod common;

use common::*;
use mreg::grading::{enumerate_bounded_region, positive_vectors_in_box, Multidegree};
use mreg::groebner::{
    graded_piece_dimension, groebner_basis, ideal_groebner_basis, ideal_intersection,
    minimal_generators, syzygy_basis,
};
use mreg::linalg::Matrix;
use mreg::module::{apply_matrix, FreeModule, FreeModuleElement, ModulePresentation};
use mreg::points::{hilbert_function_points, point_ideal, point_quotient, PointSet};
use mreg::poly::monomials_of_degree;
use mreg::regularity::{regnum_ring, ModuleAnalysis};
use mreg::{Field, Monomial, MultigradedRing, Polynomial, Scalar, TermOrder};
use proptest::prelude::*;

const P: u32 = 32003;

fn xyz(field: Field) -> MultigradedRing {
    MultigradedRing::from_parts(&["x", "y", "z"], vec![vec![1], vec![1], vec![1]], field).unwrap()
}

fn order(ring: &MultigradedRing) -> TermOrder {
    mreg::groebner::default_order(ring).unwrap()
}

/// A homogeneous polynomial of degree `d` in three standard-graded variables from raw picks.
fn homogeneous(ring: &MultigradedRing, d: i64, picks: &[(usize, i64)]) -> Polynomial {
    let monos = monomials_of_degree(&[1, 1, 1], d);
    let f = ring.field();
    let mut p = ring.zero();
    for &(k, c) in picks {
        p.add_term(monos[k % monos.len()].clone(), &f.from_i64(c));
    }
    p
}

fn raw_poly() -> impl Strategy<Value = (i64, Vec<(usize, i64)>)> {
    (1i64..=3, prop::collection::vec((0usize..10, -3i64..=3), 1..4))
}

fn raw_ideal() -> impl Strategy<Value = Vec<(i64, Vec<(usize, i64)>)>> {
    prop::collection::vec(raw_poly(), 1..4)
}

fn build(ring: &MultigradedRing, raw: &[(i64, Vec<(usize, i64)>)]) -> Vec<Polynomial> {
    raw.iter()
        .map(|(d, picks)| homogeneous(ring, *d, picks))
        .filter(|p| !p.is_zero())
        .collect()
}

fn elems(gens: &[Polynomial]) -> Vec<FreeModuleElement> {
    gens.iter().map(|g| FreeModuleElement::new(vec![g.clone()])).collect()
}

fn rank1(ring: &MultigradedRing) -> FreeModule {
    FreeModule::new(vec![Multidegree::zero(ring.rank())])
}

/// Linear-algebra membership oracle: is `f` in the degree-`d` span of `x^m g`?
fn in_span(ring: &MultigradedRing, gens: &[Polynomial], f: &Polynomial, d: i64) -> bool {
    let monos = monomials_of_degree(&[1, 1, 1], d);
    let field = ring.field();
    let row = |p: &Polynomial| -> Vec<Scalar> { monos.iter().map(|m| p.coefficient(m)).collect() };
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.multidegree(ring.degrees()).unwrap().0[0];
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(&[1, 1, 1], d - gd) {
            rows.push(row(&g.mul_term(&m, &field.one())));
        }
    }
    let base = Matrix::from_rows(field, rows.clone()).rank();
    rows.push(row(f));
    Matrix::from_rows(field, rows).rank() == base
}

fn monomial(e: &[u32], ring: &MultigradedRing) -> Polynomial {
    Polynomial::monomial(Monomial::from_exponents(e.to_vec()), ring.field().one(), ring.field())
}

fn raw_monomials(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..5)
        .prop_map(|v| v.into_iter().filter(|e| e.iter().any(|&x| x > 0)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_basis_ignores_generator_order(raw in raw_ideal(), rot in 0usize..4) {
        let ring = xyz(Field::Prime(P));
        let mut gens = build(&ring, &raw);
        let a = ideal_groebner_basis(&ring, &gens, &order(&ring)).unwrap();
        if !gens.is_empty() {
            let k = rot % gens.len();
            gens.rotate_left(k);
            gens.reverse();
        }
        let b = ideal_groebner_basis(&ring, &gens, &order(&ring)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn normal_form_decides_membership(raw in raw_ideal(), test in raw_poly()) {
        let ring = xyz(Field::Prime(P));
        let gens = build(&ring, &raw);
        let gb = groebner_basis(&ring, &rank1(&ring), &elems(&gens), &order(&ring)).unwrap();
        for g in &gens {
            prop_assert!(gb.contains(&FreeModuleElement::new(vec![g.clone()])));
        }
        // a sum of multiples of the generators plus a random polynomial
        let (d, picks) = test;
        let f = homogeneous(&ring, d, &picks);
        if f.is_zero() {
            return Ok(());
        }
        let member = gb.contains(&FreeModuleElement::new(vec![f.clone()]));
        prop_assert_eq!(member, in_span(&ring, &gens, &f, d));
        let nf = gb.normal_form(&FreeModuleElement::new(vec![f.clone()]));
        let diff = f.sub(nf.component(0));
        prop_assert!(diff.is_zero() || in_span(&ring, &gens, &diff, d));
    }

    #[test]
    fn syzygies_annihilate(raw in raw_ideal()) {
        let ring = xyz(Field::Rational);
        let gens = build(&ring, &raw);
        let cols = elems(&gens);
        let degs: Vec<Multidegree> = gens.iter().map(|g| g.multidegree(ring.degrees()).unwrap()).collect();
        let (_, syz) = syzygy_basis(&ring, &rank1(&ring), &cols, &degs, &order(&ring)).unwrap();
        for s in &syz {
            prop_assert!(apply_matrix(&ring, 1, &cols, s).is_zero());
        }
        if gens.len() >= 2 {
            // the Koszul syzygy of the first two generators is generated
            let k = FreeModuleElement::new(
                (0..gens.len()).map(|j| match j {
                    0 => gens[1].clone(),
                    1 => gens[0].neg(),
                    _ => ring.zero(),
                }).collect(),
            );
            let src = FreeModule::new(degs.clone());
            let gb = groebner_basis(&ring, &src, &syz, &order(&ring)).unwrap();
            prop_assert!(gb.contains(&k));
        }
    }

    #[test]
    fn minimal_generators_span_and_are_irredundant(raw in raw_ideal()) {
        let ring = xyz(Field::Prime(P));
        let gens = build(&ring, &raw);
        let cols = elems(&gens);
        let o = order(&ring);
        let keep = minimal_generators(&ring, &rank1(&ring), &cols, &o).unwrap();
        let kept: Vec<_> = keep.iter().map(|&k| cols[k].clone()).collect();
        let full = groebner_basis(&ring, &rank1(&ring), &cols, &o).unwrap();
        let sub = groebner_basis(&ring, &rank1(&ring), &kept, &o).unwrap();
        prop_assert_eq!(full.elements(), sub.elements());
        for k in 0..kept.len() {
            let mut rest = kept.clone();
            let dropped = rest.remove(k);
            let gb = groebner_basis(&ring, &rank1(&ring), &rest, &o).unwrap();
            prop_assert!(!gb.contains(&dropped));
        }
    }

    #[test]
    fn monomial_intersection_is_pairwise_lcms(a in raw_monomials(4), b in raw_monomials(4)) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        let ring = p1p1();
        let o = order(&ring);
        let i: Vec<_> = a.iter().map(|e| monomial(e, &ring)).collect();
        let j: Vec<_> = b.iter().map(|e| monomial(e, &ring)).collect();
        let got = ideal_intersection(&ring, &i, &j, &o).unwrap();
        let lcms: Vec<_> = a.iter().flat_map(|x| b.iter().map(move |y| {
            x.iter().zip(y).map(|(p, q)| *p.max(q)).collect::<Vec<u32>>()
        })).map(|e| monomial(&e, &ring)).collect();
        let want = ideal_groebner_basis(&ring, &lcms, &o).unwrap();
        let got = ideal_groebner_basis(&ring, &got, &o).unwrap();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn intersection_lies_in_both(ri in raw_ideal(), rj in raw_ideal()) {
        let ring = xyz(Field::Prime(P));
        let (i, j) = (build(&ring, &ri), build(&ring, &rj));
        let o = order(&ring);
        let meet = ideal_intersection(&ring, &i, &j, &o).unwrap();
        let gi = groebner_basis(&ring, &rank1(&ring), &elems(&i), &o).unwrap();
        let gj = groebner_basis(&ring, &rank1(&ring), &elems(&j), &o).unwrap();
        for f in elems(&meet) {
            prop_assert!(gi.contains(&f) && gj.contains(&f));
        }
        // products lie in the intersection
        let gm = groebner_basis(&ring, &rank1(&ring), &elems(&meet), &o).unwrap();
        for f in &i {
            for g in &j {
                prop_assert!(gm.contains(&FreeModuleElement::new(vec![f.mul(g)])));
            }
        }
    }
}

/// Monomial quotients of P1 x P1 and of a weighted plane.
fn quotient_case() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (0usize..3).prop_flat_map(|k| {
        let n = [4, 4, 3][k];
        (Just(k), raw_monomials(n))
    })
}

fn quotient_ring(k: usize) -> MultigradedRing {
    match k {
        0 => p1p1(),
        1 => hirzebruch(1),
        _ => MultigradedRing::from_parts(&["x", "y", "z"], vec![vec![1], vec![2], vec![3]], Field::Rational)
            .unwrap(),
    }
}

/// `dim S_m` counted directly.
fn ring_piece(weights: &[i64], m: i64) -> i64 {
    if m < 0 {
        return 0;
    }
    monomials_of_degree(weights, m).len() as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn resolutions_are_minimal_complexes((k, gens) in quotient_case()) {
        let ring = quotient_ring(k);
        let polys: Vec<_> = gens.iter().map(|e| monomial(e, &ring)).collect();
        let p = ModulePresentation::quotient(&ring, &polys).unwrap();
        let a = ModuleAnalysis::new(&ring, &p).unwrap();
        let res = a.resolution();
        prop_assert!(res.is_complex());
        prop_assert!(res.is_minimal());
        prop_assert!(res.is_homogeneous());
        prop_assert!(res.length() <= ring.nvars());
        let v = mreg::find_positive_coarsening_vector(ring.degrees()).unwrap();
        let w = v.vdegs(ring.degrees()).unwrap();
        // Euler characteristic of the resolution against the Hilbert function
        for m in 0..=10 {
            let mut chi = 0i64;
            for i in 0..=res.length() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for s in res.shifts(i) {
                    chi += sign * ring_piece(&w, m - v.degree_of(s));
                }
            }
            let dim = graded_piece_dimension(&ring, &p, &v, m).unwrap() as i64;
            prop_assert_eq!(chi, dim);
        }
        // coarsening keeps the total Betti numbers in each homological degree
        let fine = a.betti();
        let coarse = fine.coarsen(&v);
        for i in 0..=res.length() {
            prop_assert_eq!(fine.total(i), coarse.total(i));
            prop_assert_eq!(fine.total(i), res.rank(i));
        }
    }

    #[test]
    fn regularity_threshold_is_sharp((k, gens) in quotient_case()) {
        let ring = quotient_ring(k);
        let polys: Vec<_> = gens.iter().map(|e| monomial(e, &ring)).collect();
        let p = ModulePresentation::quotient(&ring, &polys).unwrap();
        let a = ModuleAnalysis::new(&ring, &p).unwrap();
        for v in positive_vectors_in_box(ring.degrees(), 3) {
            let Some(reg) = a.regnum_opt(&v).unwrap() else { continue };
            for q in reg..reg + 6 {
                prop_assert!(a.vreg_membership(&v, q).unwrap());
            }
            prop_assert!(!a.vreg_membership(&v, reg - 1).unwrap());
            prop_assert!(a.lower_bound(&v).unwrap() <= reg);
            for d in [2, 3] {
                prop_assert_eq!(a.regnum(&v.scaled(d)).unwrap(), d * reg - d + 1);
            }
        }
    }

    #[test]
    fn bounded_regions_are_what_they_claim(
        bases in prop::collection::vec((-3i64..=3, -3i64..=3), 1..4),
        bound in -4i64..=14,
        s in 0i64..=2,
    ) {
        let ring = hirzebruch(s);
        let bases: Vec<Multidegree> = bases.into_iter().map(|(a, b)| md(&[a, b])).collect();
        for v in positive_vectors_in_box(ring.degrees(), 3) {
            let region = enumerate_bounded_region(&bases, ring.degrees(), &v, bound).unwrap();
            for (pt, w) in region.points().iter().zip(region.witnesses()) {
                prop_assert!(v.degree_of(pt) <= bound);
                let mut back = bases[w.base].clone();
                for (i, &e) in w.exponents.iter().enumerate() {
                    back = &back + &ring.degrees().column(i).scale(e as i64);
                }
                prop_assert_eq!(&back, pt);
            }
            // every base within the bound, and every one-step extension within it, is present
            for b in &bases {
                if v.degree_of(b) <= bound {
                    prop_assert!(region.contains(b));
                }
            }
            for pt in region.points() {
                for g in ring.degrees().columns() {
                    let q = pt + g;
                    if v.degree_of(&q) <= bound {
                        prop_assert!(region.contains(&q));
                    }
                }
            }
        }
        for v in positive_vectors_in_box(ring.degrees(), 3) {
            let c = regnum_ring(&ring, &v).unwrap();
            for d in [2, 3] {
                prop_assert_eq!(regnum_ring(&ring, &v.scaled(d)).unwrap(), d * c - d + 1);
            }
        }
    }
}

fn raw_points() -> impl Strategy<Value = Vec<(i64, i64, i64, i64)>> {
    prop::collection::vec((0i64..=1, -4i64..=4, 0i64..=1, -4i64..=4), 1..7)
}

fn point_set(raw: &[(i64, i64, i64, i64)]) -> Option<PointSet> {
    let mut pts: Vec<Vec<Vec<i64>>> = raw
        .iter()
        .map(|&(a, b, c, d)| {
            let f = |h: i64, x: i64| if h == 0 { vec![0, 1] } else { vec![1, x] };
            vec![f(a, b), f(c, d)]
        })
        .collect();
    pts.sort();
    pts.dedup();
    PointSet::new(&[1, 1], &pts, Field::Rational).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn point_ideals_vanish_and_count(raw in raw_points()) {
        let Some(x) = point_set(&raw) else { return Ok(()) };
        let ring = x.ring().unwrap();
        for g in point_ideal(&x).unwrap() {
            for p in x.points() {
                let coords: Vec<Scalar> = p.iter().flatten().cloned().collect();
                prop_assert!(g.evaluate(&coords).is_zero());
            }
        }
        let (_, q) = point_quotient(&x).unwrap();
        let v = mreg::CoarseningVector::ones(2);
        for m in 0..=6i64 {
            let mut total = 0;
            for i in 0..=m {
                let h = hilbert_function_points(&x, &md(&[i, m - i])).unwrap();
                prop_assert!(h <= x.len());
                total += h as u64;
            }
            prop_assert_eq!(graded_piece_dimension(&ring, &q, &v, m).unwrap(), total);
        }
    }
}
