//! Gröbner bases, syzygies and ideal intersection over a bigraded ring.

use mreg::groebner::{default_order, ideal_groebner_basis, ideal_intersection, syzygy_basis};
use mreg::{Field, FreeModule, FreeModuleElement, Multidegree, MultigradedRing};

fn main() -> mreg::Result<()> {
    let ring = MultigradedRing::standard_multigraded(&[1, 1], Field::Rational)?;
    let order = default_order(&ring)?;
    let gens = vec![ring.parse("x0*y0 - x1*y1")?, ring.parse("x0*y1")?];

    println!("reduced Gröbner basis of <x0*y0 - x1*y1, x0*y1>:");
    for g in ideal_groebner_basis(&ring, &gens, &order)? {
        println!("  {}", g.to_string_with(ring.names()));
    }

    let module = FreeModule::new(vec![Multidegree::zero(2)]);
    let cols: Vec<_> = gens.iter().map(|g| FreeModuleElement::new(vec![g.clone()])).collect();
    let degs = gens
        .iter()
        .map(|g| g.multidegree(ring.degrees()))
        .collect::<mreg::Result<Vec<_>>>()?;
    let (_, syz) = syzygy_basis(&ring, &module, &cols, &degs, &order)?;
    println!("syzygies:");
    for s in syz {
        println!("  ({})", s.to_strings(&ring).join(", "));
    }

    let i = vec![ring.parse("x0")?, ring.parse("y0")?];
    let j = vec![ring.parse("x1")?, ring.parse("y1")?];
    println!("<x0, y0> ∩ <x1, y1>:");
    for g in ideal_intersection(&ring, &i, &j, &order)? {
        println!("  {}", g.to_string_with(ring.names()));
    }
    Ok(())
}
