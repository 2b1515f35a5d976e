//! Minimal free resolution of a monomial quotient, its fine and coarse Betti tables.

use mreg::resolution::{betti_table, minimal_free_resolution, resolution_regularity_vector};
use mreg::{CoarseningVector, Field, ModulePresentation, MultigradedRing};

fn main() -> mreg::Result<()> {
    let ring = MultigradedRing::standard_multigraded(&[1, 1], Field::Rational)?;
    let ideal = vec![ring.parse("x0*x1")?, ring.parse("y0*y1")?];
    let p = ModulePresentation::quotient(&ring, &ideal)?;
    let res = minimal_free_resolution(&ring, &p)?;
    println!("length {}, complex {}, minimal {}", res.length(), res.is_complex(), res.is_minimal());
    for i in 1..=res.length() {
        println!("d_{i}:");
        for col in res.differential(i) {
            println!("  [{}]", col.to_strings(&ring).join(", "));
        }
    }
    let b = betti_table(&res);
    for e in b.entries() {
        println!("beta_{{{},{}}} = {}", e.i, e.degree, e.beta);
    }
    let coarse = b.coarsen(&CoarseningVector::new(vec![2, 3]));
    for e in coarse.entries() {
        println!("coarse (2,3): beta_{{{},{}}} = {}", e.i, e.degree, e.beta);
    }
    println!("resolution regularity vector {}", resolution_regularity_vector(&ring, &b)?);
    Ok(())
}
