//! a-invariants by local duality and by Hochster's formula; homology over two fields.

use mreg::localcoh::{a_invariants_hochster, reduced_homology_ranks, SimplicialComplex};
use mreg::regularity::ModuleAnalysis;
use mreg::{CoarseningVector, Field, ModulePresentation, MultigradedRing};

fn show(a: &mreg::localcoh::AInvariants) -> String {
    let parts: Vec<String> = a
        .values()
        .iter()
        .map(|x| x.map_or("-inf".to_string(), |x| x.to_string()))
        .collect();
    parts.join(" ")
}

fn main() -> mreg::Result<()> {
    let ring = MultigradedRing::standard_multigraded(&[1, 1], Field::Rational)?;
    let k = SimplicialComplex::new(4, &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])?;
    let gens: Vec<_> = k
        .stanley_reisner_ideal()
        .into_iter()
        .map(|m| mreg::Polynomial::monomial(m, ring.field().one(), ring.field()))
        .collect();
    let analysis = ModuleAnalysis::new(&ring, &ModulePresentation::quotient(&ring, &gens)?)?;
    for v in [[1, 1], [2, 3], [3, 5]] {
        let v = CoarseningVector::new(v.to_vec());
        println!(
            "v = {v}: Ext a^i = [{}], Hochster a^i = [{}], regnum {}",
            show(&analysis.a_invariants(&v)?),
            show(&a_invariants_hochster(&k, &ring, &v)?),
            analysis.regnum(&v)?
        );
    }
    println!("dim H^2_m(M)_q for v = (1,1), q = -3..1:");
    for q in -3..=1 {
        println!("  q = {q}: {}", analysis.local_cohomology_dimension(&CoarseningVector::ones(2), 2, q)?);
    }

    // six-vertex real projective plane
    let rp2 = SimplicialComplex::new(
        6,
        &[
            vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 1, 5],
            vec![1, 2, 4], vec![2, 3, 5], vec![1, 3, 4], vec![2, 4, 5], vec![1, 3, 5],
        ],
    )?;
    println!("RP^2 reduced homology over Q:   {:?}", reduced_homology_ranks(&rp2, Field::Rational));
    println!("RP^2 reduced homology over F_2: {:?}", reduced_homology_ranks(&rp2, Field::prime(2)?));
    Ok(())
}
