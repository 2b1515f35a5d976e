#![allow(dead_code)]

use mreg::grading::{positive_vectors_in_box, CoarseningVector, Multidegree};
use mreg::module::ModulePresentation;
use mreg::points::{point_quotient, PointSet};
use mreg::poly::{Monomial, Polynomial};
use mreg::{Field, MultigradedRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn p1p1() -> MultigradedRing {
    MultigradedRing::standard_multigraded(&[1, 1], Field::Rational).unwrap()
}

pub fn hirzebruch(s: i64) -> MultigradedRing {
    MultigradedRing::from_parts(
        &["x1", "x2", "x3", "x4"],
        vec![vec![1, 0], vec![-s, 1], vec![1, 0], vec![0, 1]],
        Field::Rational,
    )
    .unwrap()
}

pub fn weighted_line() -> MultigradedRing {
    MultigradedRing::from_parts(&["x1", "x2"], vec![vec![4], vec![4]], Field::Rational).unwrap()
}

pub fn plane_bigraded() -> MultigradedRing {
    MultigradedRing::from_parts(&["x", "y"], vec![vec![1, 0], vec![0, 1]], Field::Rational).unwrap()
}

pub fn cv(x: &[i64]) -> CoarseningVector {
    CoarseningVector::new(x.to_vec())
}

pub fn md(x: &[i64]) -> Multidegree {
    Multidegree(x.to_vec())
}

pub fn ideal(ring: &MultigradedRing, gens: &[&str]) -> ModulePresentation {
    let gens: Vec<Polynomial> = gens.iter().map(|g| ring.parse(g).unwrap()).collect();
    ModulePresentation::quotient(ring, &gens).unwrap()
}

pub fn four_points() -> PointSet {
    let (a, b) = (vec![1, 0], vec![0, 1]);
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

pub fn eight_points() -> PointSet {
    let ij = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (3, 1), (4, 1), (5, 1)];
    let pts: Vec<Vec<Vec<i64>>> = ij.iter().map(|&(i, j)| vec![vec![1, i], vec![1, j]]).collect();
    PointSet::new(&[1, 1], &pts, Field::Rational).unwrap()
}

pub struct CorpusModule {
    pub name: String,
    pub ring: MultigradedRing,
    pub presentation: ModulePresentation,
    /// Vectors exercised beyond the default one.
    pub extra: Vec<CoarseningVector>,
}

impl CorpusModule {
    pub fn vectors(&self) -> Vec<CoarseningVector> {
        let mut v = vec![mreg::find_positive_coarsening_vector(self.ring.degrees()).unwrap()];
        for e in &self.extra {
            if !v.contains(e) {
                v.push(e.clone());
            }
        }
        v
    }

    pub fn box_family(&self, bound: i64) -> Vec<CoarseningVector> {
        positive_vectors_in_box(self.ring.degrees(), bound)
    }
}

fn module(name: &str, ring: MultigradedRing, p: ModulePresentation, extra: &[&[i64]]) -> CorpusModule {
    CorpusModule {
        name: name.into(),
        ring,
        presentation: p,
        extra: extra.iter().map(|x| cv(x)).collect(),
    }
}

/// Square-free or general monomial quotients drawn from a fixed seed.
pub fn random_monomial_quotients(seed: u64, count: usize) -> Vec<CorpusModule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rings: Vec<(MultigradedRing, Vec<&[i64]>)> = vec![
        (p1p1(), vec![&[2, 3]]),
        (hirzebruch(1), vec![&[1, 3]]),
        (
            MultigradedRing::from_parts(&["x", "y", "z"], vec![vec![1], vec![2], vec![3]], Field::Rational)
                .unwrap(),
            vec![],
        ),
    ];
    let mut out = Vec::new();
    for k in 0..count {
        let (ring, extra) = &rings[k % rings.len()];
        let n = ring.nvars();
        let ngens = rng.gen_range(1..=3);
        let mut gens = Vec::new();
        while gens.len() < ngens {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            if e.iter().all(|&x| x == 0) {
                continue;
            }
            gens.push(Polynomial::monomial(
                Monomial::from_exponents(e),
                ring.field().one(),
                ring.field(),
            ));
        }
        let names: Vec<String> = gens.iter().map(|g| g.to_string_with(ring.names())).collect();
        let p = ModulePresentation::quotient(ring, &gens).unwrap();
        out.push(module(&format!("random {k}: <{}>", names.join(", ")), ring.clone(), p, extra));
    }
    out
}

/// The modules every property in the acceptance suite is checked on.
pub fn corpus() -> Vec<CorpusModule> {
    let r = p1p1();
    let mut out = vec![
        module("four-point quotient", r.clone(), ideal(&r, &["x0*x1", "y0*y1"]), &[&[2, 3], &[3, 5]]),
    ];
    let (r8, p8) = point_quotient(&eight_points()).unwrap();
    out.push(module("eight-point quotient", r8, p8, &[&[1, 2]]));
    for s in 1..=3 {
        let h = hirzebruch(s);
        let p = ideal(&h, &["x1*x2", "x3*x4"]);
        out.push(module(&format!("Hirzebruch s={s} quotient"), h, p, &[&[1, 2 * s]]));
    }
    let w = weighted_line();
    out.push(module("weighted line", w.clone(), ideal(&w, &[]), &[]));
    let pb = plane_bigraded();
    out.push(module(
        "S(-(1,0)) + S(-(0,1))",
        pb.clone(),
        ModulePresentation::free(&pb, vec![md(&[1, 0]), md(&[0, 1])]).unwrap(),
        &[&[5, 3]],
    ));
    out.extend(random_monomial_quotients(0x5eed, 6));
    out
}
