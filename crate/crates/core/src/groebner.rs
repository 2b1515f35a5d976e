//! Buchberger's algorithm for graded submodules of free modules, plus the operations
//! built on it: normal forms, syzygies, minimal generators, ideal intersection and
//! graded piece dimensions through standard monomials.
//!
//! Module orders are position over term, with a smaller position index ranking higher.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::grading::{find_positive_coarsening_vector, CoarseningVector, Multidegree};
use crate::module::{FreeModule, FreeModuleElement, ModulePresentation};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, TermOrder};
use crate::ring::MultigradedRing;

#[derive(Clone, Debug)]
struct Term {
    pos: usize,
    mon: Monomial,
    coeff: Scalar,
}

/// Terms kept in ascending order, so the leading term is the last one.
#[derive(Clone, Debug, Default)]
struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Term {
        self.terms.last().expect("lead of zero vector")
    }

    fn mul_term(&self, m: &Monomial, c: &Scalar) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mon: t.mon.mul(m),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
struct Ctx {
    order: TermOrder,
    pos_deg: Vec<i64>,
    field: Field,
    nvars: usize,
}

impl Ctx {
    fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        if a.0 != b.0 {
            return b.0.cmp(&a.0);
        }
        self.order.compare(a.1, b.1)
    }

    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp((a.pos, &a.mon), (b.pos, &b.mon))
    }

    fn vector(&self, comps: &[Polynomial]) -> Vector {
        let mut terms: Vec<Term> = comps
            .iter()
            .enumerate()
            .flat_map(|(k, p)| {
                p.terms().map(move |(m, c)| Term {
                    pos: k,
                    mon: m.clone(),
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|x, y| self.cmp_terms(x, y));
        Vector { terms }
    }

    fn components(&self, v: &Vector, rank: usize) -> Vec<Polynomial> {
        let mut comps = vec![Polynomial::zero(self.nvars, self.field); rank];
        for t in &v.terms {
            comps[t.pos].add_term(t.mon.clone(), &t.coeff);
        }
        comps
    }

    fn degree(&self, pos: usize, m: &Monomial) -> i64 {
        m.weighted_degree(self.order.weights()) + self.pos_deg[pos]
    }

    /// `f - c * m * g`, merging two sorted term lists.
    fn sub_mul(&self, f: &Vector, c: &Scalar, m: &Monomial, g: &Vector) -> Vector {
        let g = g.mul_term(m, &-c);
        let (a, b) = (&f.terms, &g.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.cmp_terms(&a[i], &b[j]) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].coeff + &b[j].coeff;
                    if !s.is_zero() {
                        out.push(Term {
                            pos: a[i].pos,
                            mon: a[i].mon.clone(),
                            coeff: s,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Vector { terms: out }
    }

    /// Reduces the leading term until it is irreducible; with `full`, every term.
    fn reduce(&self, mut f: Vector, basis: &[Vector], full: bool) -> Vector {
        let mut done: Vec<Term> = Vec::new();
        while let Some(lt) = f.terms.last() {
            let reducer = basis.iter().find(|g| {
                let gl = g.lead();
                gl.pos == lt.pos && gl.mon.divides(&lt.mon)
            });
            match reducer {
                Some(g) => {
                    let gl = g.lead();
                    let q = gl.mon.quotient_of(&lt.mon);
                    let c = if gl.coeff.is_one() {
                        lt.coeff.clone()
                    } else {
                        &lt.coeff * &gl.coeff.inv()
                    };
                    f = self.sub_mul(&f, &c, &q, g);
                }
                None => {
                    if !full {
                        break;
                    }
                    done.push(f.terms.pop().unwrap());
                }
            }
        }
        if full {
            done.reverse();
            f.terms = done;
        }
        f
    }

    fn monic(&self, f: Vector) -> Vector {
        if f.is_zero() || f.lead().coeff.is_one() {
            return f;
        }
        let inv = f.lead().coeff.inv();
        Vector {
            terms: f
                .terms
                .into_iter()
                .map(|t| Term {
                    coeff: &t.coeff * &inv,
                    ..t
                })
                .collect(),
        }
    }
}

/// Incremental Buchberger state.
struct Buchberger {
    ctx: Ctx,
    basis: Vec<Vector>,
    pairs: BTreeSet<(i64, u64, usize, usize)>,
    pending: HashSet<(usize, usize)>,
    seq: u64,
    product_criterion: bool,
}

impl Buchberger {
    fn new(ctx: Ctx, single_position: bool) -> Self {
        Buchberger {
            ctx,
            basis: Vec::new(),
            pairs: BTreeSet::new(),
            pending: HashSet::new(),
            seq: 0,
            product_criterion: single_position,
        }
    }

    fn add(&mut self, f: Vector) {
        let r = self.ctx.reduce(f, &self.basis, false);
        if r.is_zero() {
            return;
        }
        let r = self.ctx.monic(r);
        let idx = self.basis.len();
        let (pos, lm) = (r.lead().pos, r.lead().mon.clone());
        for (j, g) in self.basis.iter().enumerate() {
            let gl = g.lead();
            if gl.pos != pos {
                continue;
            }
            let deg = self.ctx.degree(pos, &gl.mon.lcm(&lm));
            self.pairs.insert((deg, self.seq, j, idx));
            self.pending.insert((j, idx));
            self.seq += 1;
        }
        self.basis.push(r);
    }

    fn chain_criterion(&self, i: usize, j: usize, pos: usize, lcm: &Monomial) -> bool {
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        self.basis.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && g.lead().pos == pos
                && g.lead().mon.divides(lcm)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    fn complete(&mut self) {
        while let Some((_, _, i, j)) = self.pairs.pop_first() {
            self.pending.remove(&(i, j));
            let (li, lj) = (self.basis[i].lead(), self.basis[j].lead());
            if self.product_criterion && li.mon.is_coprime(&lj.mon) {
                continue;
            }
            let pos = li.pos;
            let lcm = li.mon.lcm(&lj.mon);
            if self.chain_criterion(i, j, pos, &lcm) {
                continue;
            }
            let one = self.ctx.field.one();
            let a = self.basis[i].mul_term(&li.mon.quotient_of(&lcm), &one);
            let s = self
                .ctx
                .sub_mul(&a, &one, &lj.mon.quotient_of(&lcm), &self.basis[j]);
            self.add(s);
        }
    }

    /// Minimal, monic, tail-reduced, sorted by leading term.
    fn reduced(&self) -> Vec<Vector> {
        let n = self.basis.len();
        let keep: Vec<Vector> = (0..n)
            .filter(|&i| {
                let li = self.basis[i].lead();
                !(0..n).any(|j| {
                    let lj = self.basis[j].lead();
                    j != i
                        && lj.pos == li.pos
                        && lj.mon.divides(&li.mon)
                        && (lj.mon != li.mon || j < i)
                })
            })
            .map(|i| self.basis[i].clone())
            .collect();
        let mut out: Vec<Vector> = keep
            .iter()
            .map(|g| {
                let mut tail = g.clone();
                let lead = tail.terms.pop().unwrap();
                let mut r = self.ctx.reduce(tail, &keep, true);
                r.terms.push(lead);
                r
            })
            .collect();
        out.sort_by(|a, b| self.ctx.cmp_terms(a.lead(), b.lead()));
        out
    }
}

/// A reduced Gröbner basis of a graded submodule of a free module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ctx: Ctx,
    rank: usize,
    elements: Vec<Vector>,
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn order(&self) -> &TermOrder {
        &self.ctx.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> Vec<FreeModuleElement> {
        self.elements
            .iter()
            .map(|v| FreeModuleElement::new(self.ctx.components(v, self.rank)))
            .collect()
    }

    /// Leading terms as (position, monomial).
    pub fn leading_monomials(&self) -> Vec<(usize, Monomial)> {
        self.elements
            .iter()
            .map(|v| (v.lead().pos, v.lead().mon.clone()))
            .collect()
    }

    /// Remainder of full reduction; zero exactly on the submodule.
    pub fn normal_form(&self, f: &FreeModuleElement) -> FreeModuleElement {
        let v = self.ctx.vector(f.components());
        let r = self.ctx.reduce(v, &self.elements, true);
        FreeModuleElement::new(self.ctx.components(&r, self.rank))
    }

    pub fn contains(&self, f: &FreeModuleElement) -> bool {
        let v = self.ctx.vector(f.components());
        self.ctx.reduce(v, &self.elements, false).is_zero()
    }

    /// Number of standard monomials `m e_k` with `wdeg(m) + shift_degrees[k] == target`,
    /// which is the dimension of that graded piece of the quotient. `weights` must be
    /// positive; the count is correct for any term order when the submodule is graded
    /// by those weights.
    pub fn count_standard(&self, weights: &[i64], shift_degrees: &[i64], target: i64) -> u64 {
        let leads = self.leading_monomials();
        let mut total = 0u64;
        for (k, &s) in shift_degrees.iter().enumerate() {
            let here: Vec<&Monomial> = leads
                .iter()
                .filter(|(p, _)| *p == k)
                .map(|(_, m)| m)
                .collect();
            total += monomials_of_degree(weights, target - s)
                .iter()
                .filter(|m| !here.iter().any(|l| l.divides(m)))
                .count() as u64;
        }
        total
    }
}

/// Weighted revlex order along the ring's default positive coarsening vector.
pub fn default_order(ring: &MultigradedRing) -> Result<TermOrder> {
    let v = find_positive_coarsening_vector(ring.degrees())?;
    TermOrder::coarse(ring.degrees(), &v)
}

fn check_order(ring: &MultigradedRing, order: &TermOrder) -> Result<()> {
    if order.nvars() != ring.nvars() {
        return Err(Error::Input(format!(
            "term order on {} variables for a ring with {}",
            order.nvars(),
            ring.nvars()
        )));
    }
    Ok(())
}

fn check_elements(
    ring: &MultigradedRing,
    module: &FreeModule,
    gens: &[FreeModuleElement],
) -> Result<Vec<Option<Multidegree>>> {
    gens.iter()
        .map(|g| {
            if g.rank() != module.rank() {
                return Err(Error::Input(format!(
                    "element with {} components in a free module of rank {}",
                    g.rank(),
                    module.rank()
                )));
            }
            if g.is_zero() {
                Ok(None)
            } else {
                module.degree_of(ring, g).map(Some)
            }
        })
        .collect()
}

fn context(ring: &MultigradedRing, shifts: &[Multidegree], order: &TermOrder) -> Ctx {
    Ctx {
        order: order.clone(),
        pos_deg: shifts.iter().map(|s| order.shift_degree(s)).collect(),
        field: ring.field(),
        nvars: ring.nvars(),
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn groebner_basis(
    ring: &MultigradedRing,
    module: &FreeModule,
    gens: &[FreeModuleElement],
    order: &TermOrder,
) -> Result<GroebnerBasis> {
    check_order(ring, order)?;
    check_elements(ring, module, gens)?;
    let ctx = context(ring, module.shifts(), order);
    let mut bb = Buchberger::new(ctx.clone(), module.rank() == 1);
    for g in gens {
        bb.add(ctx.vector(g.components()));
    }
    bb.complete();
    Ok(GroebnerBasis {
        elements: bb.reduced(),
        ctx,
        rank: module.rank(),
    })
}

/// Reduced Gröbner basis of an ideal.
pub fn ideal_groebner_basis(
    ring: &MultigradedRing,
    gens: &[Polynomial],
    order: &TermOrder,
) -> Result<Vec<Polynomial>> {
    let module = FreeModule::new(vec![Multidegree::zero(ring.rank())]);
    let gens: Vec<_> = gens
        .iter()
        .map(|g| FreeModuleElement::new(vec![g.clone()]))
        .collect();
    let gb = groebner_basis(ring, &module, &gens, order)?;
    Ok(gb
        .elements()
        .into_iter()
        .map(|e| e.into_components().remove(0))
        .collect())
}

/// Generators of the syzygy module of `gens`, living in the free module whose
/// generator degrees are `gen_degrees`. Zero columns are allowed: their degree is
/// taken from `gen_degrees` and their unit vector is a syzygy.
pub fn syzygy_basis(
    ring: &MultigradedRing,
    module: &FreeModule,
    gens: &[FreeModuleElement],
    gen_degrees: &[Multidegree],
    order: &TermOrder,
) -> Result<(FreeModule, Vec<FreeModuleElement>)> {
    check_order(ring, order)?;
    if gen_degrees.len() != gens.len() {
        return Err(Error::Input("one degree per generator is required".into()));
    }
    for (d, g) in check_elements(ring, module, gens)?.iter().zip(gen_degrees) {
        if let Some(d) = d {
            if d != g {
                return Err(Error::Input(format!(
                    "generator of degree {d} declared with degree {g}"
                )));
            }
        }
    }
    let m = module.rank();
    let k = gens.len();
    let mut shifts = module.shifts().to_vec();
    shifts.extend(gen_degrees.iter().cloned());
    let ctx = context(ring, &shifts, order);
    let mut bb = Buchberger::new(ctx.clone(), false);
    for (i, g) in gens.iter().enumerate() {
        let mut comps = g.components().to_vec();
        comps.resize(m + k, ring.zero());
        comps[m + i] = ring.one();
        bb.add(ctx.vector(&comps));
    }
    bb.complete();
    let source = FreeModule::new(gen_degrees.to_vec());
    let syz = bb
        .reduced()
        .into_iter()
        .filter(|v| v.lead().pos >= m)
        .map(|v| {
            let comps = ctx.components(&v, m + k);
            FreeModuleElement::new(comps[m..].to_vec())
        })
        .collect();
    Ok((source, syz))
}

/// Greedy minimal generating subset: scan in increasing coarse degree (ties by index)
/// and keep an element when it is not in the span of those already kept. Returns
/// indices into `gens` in scan order. Correct for graded modules over a positively
/// graded ring.
pub fn minimal_generators(
    ring: &MultigradedRing,
    module: &FreeModule,
    gens: &[FreeModuleElement],
    order: &TermOrder,
) -> Result<Vec<usize>> {
    check_order(ring, order)?;
    let degs = check_elements(ring, module, gens)?;
    let mut idx: Vec<(i64, usize)> = degs
        .iter()
        .enumerate()
        .filter_map(|(i, d)| d.as_ref().map(|d| (order.shift_degree(d), i)))
        .collect();
    if order.grading().is_none() {
        return Err(Error::Input(
            "minimal generators need an order built from a coarsening vector".into(),
        ));
    }
    idx.sort();
    let ctx = context(ring, module.shifts(), order);
    let mut bb = Buchberger::new(ctx.clone(), module.rank() == 1);
    let mut kept = Vec::new();
    for (_, i) in idx {
        let v = ctx.vector(gens[i].components());
        if ctx.reduce(v.clone(), &bb.basis, false).is_zero() {
            continue;
        }
        kept.push(i);
        bb.add(v);
        bb.complete();
    }
    Ok(kept)
}

/// Generators of `I ∩ J`, via `t I + (1 - t) J` and elimination of `t`.
/// The result is the reduced Gröbner basis of the intersection under `order`.
pub fn ideal_intersection(
    ring: &MultigradedRing,
    i: &[Polynomial],
    j: &[Polynomial],
    order: &TermOrder,
) -> Result<Vec<Polynomial>> {
    check_order(ring, order)?;
    for f in i.iter().chain(j) {
        if !f.is_zero() {
            f.multidegree(ring.degrees())?;
        }
    }
    let n = ring.nvars();
    let field = ring.field();
    let mut weights = vec![0];
    weights.extend_from_slice(order.weights());
    let ctx = Ctx {
        order: TermOrder::eliminating(1, weights),
        pos_deg: vec![0],
        field,
        nvars: n + 1,
    };
    let lift = |f: &Polynomial, e: u32, c: &Scalar| {
        Polynomial::from_terms(
            n + 1,
            field,
            f.terms().map(|(m, a)| (m.with_prepended(e), a * c)),
        )
    };
    let one = field.one();
    let mut bb = Buchberger::new(ctx.clone(), true);
    for f in i {
        bb.add(ctx.vector(&[lift(f, 1, &one)]));
    }
    for g in j {
        let p = lift(g, 0, &one).sub(&lift(g, 1, &one));
        bb.add(ctx.vector(&[p]));
    }
    bb.complete();
    let mut out: Vec<Polynomial> = Vec::new();
    for v in bb.reduced() {
        if v.lead().mon.exponents()[0] != 0 {
            continue;
        }
        let p = &ctx.components(&v, 1)[0];
        let p = Polynomial::from_terms(
            n,
            field,
            p.terms().map(|(m, c)| (m.drop_first(), c.clone())),
        );
        out.extend(p.homogeneous_components(ring.degrees()).into_values());
    }
    Ok(out)
}

/// `dim_k M_m` for the coarse grading by `v`, by counting standard monomials of a
/// Gröbner basis of the relations.
pub fn graded_piece_dimension(
    ring: &MultigradedRing,
    p: &ModulePresentation,
    v: &CoarseningVector,
    m: i64,
) -> Result<u64> {
    let order = TermOrder::coarse(ring.degrees(), v)?;
    let gb = groebner_basis(ring, p.target(), p.relations(), &order)?;
    Ok(quotient_piece_dimension(&gb, p.shifts(), v, m))
}

/// `dim (F / U)_m` for a Gröbner basis of `U` whose order carries weights from `v`.
pub fn quotient_piece_dimension(
    gb: &GroebnerBasis,
    shifts: &[Multidegree],
    v: &CoarseningVector,
    m: i64,
) -> u64 {
    let sd: Vec<i64> = shifts.iter().map(|s| v.degree_of(s)).collect();
    gb.count_standard(gb.order().weights(), &sd, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ring_xyz() -> MultigradedRing {
        MultigradedRing::from_parts(&["x", "y", "z"], vec![vec![1], vec![1], vec![1]], Field::Rational)
            .unwrap()
    }

    fn polys(r: &MultigradedRing, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| r.parse(t).unwrap()).collect()
    }

    #[test]
    fn twisted_cubic_basis() {
        let r = MultigradedRing::from_parts(
            &["a", "b", "c", "d"],
            vec![vec![1]; 4],
            Field::Rational,
        )
        .unwrap();
        let order = default_order(&r).unwrap();
        let gb = ideal_groebner_basis(&r, &polys(&r, &["a*c - b^2", "b*d - c^2", "a*d - b*c"]), &order)
            .unwrap();
        assert_eq!(gb.len(), 3);
        let module = FreeModule::new(vec![Multidegree::zero(1)]);
        let gens: Vec<_> = gb.iter().map(|g| FreeModuleElement::new(vec![g.clone()])).collect();
        let basis = groebner_basis(&r, &module, &gens, &order).unwrap();
        let f = FreeModuleElement::new(vec![r.parse("a*c^2 - b^2*c").unwrap()]);
        assert!(basis.contains(&f));
        let g = FreeModuleElement::new(vec![r.parse("a*b").unwrap()]);
        assert!(!basis.contains(&g));
    }

    #[test]
    fn normal_form_is_canonical() {
        let r = ring_xyz();
        let order = default_order(&r).unwrap();
        let module = FreeModule::new(vec![Multidegree::zero(1)]);
        let gens: Vec<_> = polys(&r, &["x^2 - y*z", "x*y - z^2"])
            .into_iter()
            .map(|p| FreeModuleElement::new(vec![p]))
            .collect();
        let gb = groebner_basis(&r, &module, &gens, &order).unwrap();
        let f = FreeModuleElement::new(vec![r.parse("x^3 + y^3").unwrap()]);
        let g = f.add(&gens[0].mul_poly(&r.parse("x + 2*z").unwrap()));
        assert_eq!(gb.normal_form(&f), gb.normal_form(&g));
    }

    #[test]
    fn koszul_syzygies() {
        let r = ring_xyz();
        let order = default_order(&r).unwrap();
        let module = FreeModule::new(vec![Multidegree::zero(1)]);
        let gens: Vec<_> = polys(&r, &["x", "y", "z"])
            .into_iter()
            .map(|p| FreeModuleElement::new(vec![p]))
            .collect();
        let degs = vec![Multidegree(vec![1]); 3];
        let (src, syz) = syzygy_basis(&r, &module, &gens, &degs, &order).unwrap();
        assert_eq!(src.rank(), 3);
        assert_eq!(syz.len(), 3);
        for s in &syz {
            assert!(crate::module::apply_matrix(&r, 1, &gens, s).is_zero());
            assert_eq!(src.degree_of(&r, s).unwrap(), Multidegree(vec![2]));
        }
    }

    #[test]
    fn zero_column_gives_unit_syzygy() {
        let r = ring_xyz();
        let order = default_order(&r).unwrap();
        let module = FreeModule::new(vec![Multidegree::zero(1)]);
        let gens = vec![
            FreeModuleElement::new(vec![r.parse("x").unwrap()]),
            FreeModuleElement::new(vec![r.zero()]),
        ];
        let degs = vec![Multidegree(vec![1]), Multidegree(vec![4])];
        let (_, syz) = syzygy_basis(&r, &module, &gens, &degs, &order).unwrap();
        assert_eq!(syz.len(), 1);
        assert!(syz[0].component(0).is_zero());
        assert!(syz[0].component(1).as_nonzero_constant().is_some());
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let r = ring_xyz();
        let order = default_order(&r).unwrap();
        let module = FreeModule::new(vec![Multidegree::zero(1)]);
        let gens: Vec<_> = polys(&r, &["x*y", "x", "x^2 + x*z", "y"])
            .into_iter()
            .map(|p| FreeModuleElement::new(vec![p]))
            .collect();
        assert_eq!(minimal_generators(&r, &module, &gens, &order).unwrap(), vec![1, 3]);
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let r = ring_xyz();
        let order = default_order(&r).unwrap();
        let i = polys(&r, &["x^2", "y"]);
        let j = polys(&r, &["x", "y^2"]);
        let mut got: Vec<String> = ideal_intersection(&r, &i, &j, &order)
            .unwrap()
            .iter()
            .map(|p| p.to_string_with(r.names()))
            .collect();
        got.sort();
        assert_eq!(got, vec!["x*y", "x^2", "y^2"]);
    }

    #[test]
    fn hilbert_function_of_complete_intersection() {
        let r = ring_xyz();
        let p = ModulePresentation::quotient(&r, &polys(&r, &["x^2", "y^3"])).unwrap();
        let v = CoarseningVector::new(vec![1]);
        // (1 + t)(1 + t + t^2)/(1 - t) : 1, 3, 5, 6, 6, ...
        let got: Vec<u64> = (0..6)
            .map(|m| graded_piece_dimension(&r, &p, &v, m).unwrap())
            .collect();
        assert_eq!(got, vec![1, 3, 5, 6, 6, 6]);
        assert_eq!(graded_piece_dimension(&r, &p, &v, -1).unwrap(), 0);
    }

    #[test]
    fn module_basis_uses_positions() {
        let r = ring_xyz();
        let order = default_order(&r).unwrap();
        let module = FreeModule::new(vec![Multidegree::zero(1), Multidegree(vec![1])]);
        let gens = vec![
            FreeModuleElement::new(vec![r.parse("x").unwrap(), r.one()]),
            FreeModuleElement::new(vec![r.parse("y").unwrap(), r.zero()]),
        ];
        let gb = groebner_basis(&r, &module, &gens, &order).unwrap();
        let probe = FreeModuleElement::new(vec![r.parse("x*y").unwrap(), r.parse("y").unwrap()]);
        assert!(gb.contains(&probe));
        let probe = FreeModuleElement::new(vec![r.zero(), r.parse("y").unwrap()]);
        assert!(gb.contains(&probe));
        let probe = FreeModuleElement::new(vec![r.zero(), r.parse("z").unwrap()]);
        assert!(!gb.contains(&probe));
    }
}
