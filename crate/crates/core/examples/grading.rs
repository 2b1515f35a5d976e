//! Positivity of a grading, the suggested coarsening vector and a bounded degree region.

use mreg::grading::{enumerate_bounded_region, positive_vectors_in_box};
use mreg::regularity::{coarsening_constants, regnum_ring};
use mreg::{check_positive_grading, find_positive_coarsening_vector, Field, Multidegree, MultigradedRing};

fn main() -> mreg::Result<()> {
    // Cox ring of the Hirzebruch surface F_2
    let ring = MultigradedRing::from_parts(
        &["x1", "x2", "x3", "x4"],
        vec![vec![1, 0], vec![-2, 1], vec![1, 0], vec![0, 1]],
        Field::Rational,
    )?;
    println!("positive: {}", check_positive_grading(ring.degrees()));
    let v = find_positive_coarsening_vector(ring.degrees())?;
    let k = coarsening_constants(&ring, &v)?;
    println!("v = {v}: c = {}, s = {}, sigma = {}", k.c, k.s, k.sigma);
    println!("regnum(S) = {}", regnum_ring(&ring, &v)?);

    let family = positive_vectors_in_box(ring.degrees(), 3);
    let list: Vec<String> = family.iter().map(|u| u.to_string()).collect();
    println!("primitive positive vectors in [-3,3]^2: {}", list.join(" "));

    let region = enumerate_bounded_region(&[Multidegree(vec![0, 0])], ring.degrees(), &v, 2)?;
    let pts: Vec<String> = region.points().iter().map(|p| p.to_string()).collect();
    println!("degrees of v-degree <= 2 reachable from 0: {}", pts.join(" "));

    let flat = MultigradedRing::from_parts(&["x", "y"], vec![vec![1], vec![-1]], Field::Rational)?;
    println!("k[x,y] with degrees 1, -1 positive: {}", check_positive_grading(flat.degrees()));
    Ok(())
}
