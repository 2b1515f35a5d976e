//! Eight points in P^1 x P^1: Hilbert function, B-regularity and the regularity number.

use mreg::points::{
    b_regularity_region, connections_check, hilbert_function_points, point_quotient,
    res_reg_vector_points, PointSet,
};
use mreg::regularity::ModuleAnalysis;
use mreg::{CoarseningVector, Field, Multidegree};

fn main() -> mreg::Result<()> {
    let ij = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (3, 1), (4, 1), (5, 1)];
    let pts: Vec<Vec<Vec<i64>>> = ij.iter().map(|&(i, j)| vec![vec![1, i], vec![1, j]]).collect();
    let x = PointSet::new(&[1, 1], &pts, Field::Rational)?;

    println!("H_X(i, j), j from 5 down to 0:");
    for j in (0..=5).rev() {
        let row: Vec<String> = (0..=6)
            .map(|i| hilbert_function_points(&x, &Multidegree(vec![i, j])).map(|h| format!("{h:>2}")))
            .collect::<mreg::Result<_>>()?;
        println!("  {}", row.join(" "));
    }
    let breg = b_regularity_region(&x, &Multidegree(vec![8, 8]))?;
    println!("reg_B minimal elements: {:?}", breg.minimal.iter().map(|m| m.to_string()).collect::<Vec<_>>());
    println!("resolution regularity vector: {}", res_reg_vector_points(&x)?);

    let (ring, p) = point_quotient(&x)?;
    let a = ModuleAnalysis::new(&ring, &p)?;
    let one = CoarseningVector::ones(2);
    println!("regnum with v = (1,1): {}", a.regnum(&one)?);
    let coarse = a.resolution().coarsen(&one)?;
    for i in 1..=coarse.length() {
        let s: Vec<String> = coarse.shifts(i).iter().map(|d| d.0[0].to_string()).collect();
        println!("coarse shifts at level {i}: {}", s.join(" "));
    }
    let c = connections_check(&x, &Multidegree(vec![10, 10]))?;
    println!("connections: d = {}, m = {}, holds {}", c.d, c.m, c.holds);
    Ok(())
}
