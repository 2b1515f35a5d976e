//! Regularity numbers, syzygy degree bounds and a minimal family of coarsening vectors.

use mreg::grading::positive_vectors_in_box;
use mreg::regularity::ModuleAnalysis;
use mreg::{CoarseningVector, Field, ModulePresentation, MultigradedRing};

fn main() -> mreg::Result<()> {
    for s in 1..=3 {
        let ring = MultigradedRing::from_parts(
            &["x1", "x2", "x3", "x4"],
            vec![vec![1, 0], vec![-s, 1], vec![1, 0], vec![0, 1]],
            Field::Rational,
        )?;
        let ideal = vec![ring.parse("x1*x2")?, ring.parse("x3*x4")?];
        let a = ModuleAnalysis::new(&ring, &ModulePresentation::quotient(&ring, &ideal)?)?;
        let v = CoarseningVector::new(vec![1, s + 1]);
        let r = a.report(&v, 2, false)?;
        let bounds: Vec<String> = r.bounds.iter().map(|b| format!("i={}: {}", b.i, b.bound)).collect();
        println!(
            "F_{s}, v = {v}: regnum {} (lower bound {}), syzygy degree bounds {}",
            r.regnum,
            r.lower_bound,
            bounds.join(", ")
        );
        let d1 = a.degree_bound_set(&v, 1)?;
        let betti: Vec<String> = a.betti().degrees_at(1).iter().map(|d| d.to_string()).collect();
        println!("  |D_1| = {}, first syzygy degrees {}", d1.len(), betti.join(" "));
    }

    let ring = MultigradedRing::standard_multigraded(&[1, 1], Field::Rational)?;
    let ideal = vec![ring.parse("x0*x1")?, ring.parse("y0*y1")?];
    let a = ModuleAnalysis::new(&ring, &ModulePresentation::quotient(&ring, &ideal)?)?;
    let cands = positive_vectors_in_box(ring.degrees(), 4);
    let keep = a.minimal_coarsening_set(&cands, 0..=2)?;
    let keep: Vec<String> = keep.iter().map(|v| v.to_string()).collect();
    println!("minimal family among {} candidates: {}", cands.len(), keep.join(" "));
    let sc = a.scalar_report(&CoarseningVector::ones(2), 3, 0..=2)?;
    println!("regnum under (3,3): {} (predicted {})", sc.regnum_dv, sc.predicted);
    Ok(())
}
