//! Sparse multivariate polynomials with exact coefficients, monomial orders, and the
//! text syntax used by problem files.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::grading::{CoarseningVector, DegreeMatrix, Multidegree};

/// A monomial as a dense exponent vector. The derived order is lexicographic on exponents
/// and only serves as a canonical storage order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(&e, &x)| e as i64 * x).sum()
    }

    pub fn multidegree(&self, a: &DegreeMatrix) -> Multidegree {
        let mut d = vec![0i64; a.rank()];
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                for (dk, ak) in d.iter_mut().zip(a.column(i).coords()) {
                    *dk += e as i64 * ak;
                }
            }
        }
        Multidegree(d)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub(crate) fn with_prepended(&self, e: u32) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(e);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    pub(crate) fn drop_first(&self) -> Monomial {
        Monomial(self.0[1..].to_vec())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A monomial order: optional elimination block, then a positive weight, then reverse
/// lexicographic tiebreak in the declared variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    weights: Vec<i64>,
    eliminate: usize,
    grading: Option<Vec<i64>>,
}

impl TermOrder {
    /// Weighted degree reverse lexicographic order. All weights must be positive.
    pub fn weighted(weights: Vec<i64>) -> Self {
        assert!(weights.iter().all(|&w| w >= 1), "weights must be positive");
        TermOrder {
            weights,
            eliminate: 0,
            grading: None,
        }
    }

    /// Weighted order whose weights are the `v`-degrees of the variables. Remembers `v`
    /// so module shifts can be coarsened too.
    pub fn coarse(a: &DegreeMatrix, v: &CoarseningVector) -> Result<Self> {
        let weights = v.vdegs(a)?;
        Ok(TermOrder {
            weights,
            eliminate: 0,
            grading: Some(v.coords().to_vec()),
        })
    }

    /// The coarsening vector behind the weights, if known.
    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    /// Coarse degree of a multidegree shift; zero when no coarsening vector is attached.
    pub fn shift_degree(&self, d: &Multidegree) -> i64 {
        match &self.grading {
            Some(v) => d.dot(v),
            None => 0,
        }
    }

    /// Block order eliminating the first `k` variables: compare their total exponent first.
    /// Variables outside the block must have positive weight.
    pub fn eliminating(k: usize, weights: Vec<i64>) -> Self {
        assert!(weights[k..].iter().all(|&w| w >= 1), "weights must be positive");
        TermOrder {
            weights,
            eliminate: k,
            grading: None,
        }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn eliminated(&self) -> usize {
        self.eliminate
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.eliminate > 0 {
            let ea: u64 = a.0[..self.eliminate].iter().map(|&e| e as u64).sum();
            let eb: u64 = b.0[..self.eliminate].iter().map(|&e| e as u64).sum();
            match ea.cmp(&eb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        match a
            .weighted_degree(&self.weights)
            .cmp(&b.weighted_degree(&self.weights))
        {
            Ordering::Equal => {}
            o => return o,
        }
        for (x, y) in a.0.iter().zip(&b.0).rev() {
            match x.cmp(y) {
                Ordering::Equal => {}
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

/// All monomials in `weights.len()` variables of weighted degree exactly `d`.
pub fn monomials_of_degree(weights: &[i64], d: i64) -> Vec<Monomial> {
    fn rec(w: &[i64], i: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let mut e = 0u32;
        while e as i64 * w[i] <= left {
            cur[i] = e;
            rec(w, i + 1, left - e as i64 * w[i], cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    assert!(weights.iter().all(|&w| w >= 1));
    let mut out = Vec::new();
    if d >= 0 {
        rec(weights, 0, d, &mut vec![0; weights.len()], &mut out);
    }
    out
}

/// Compares two monomials under `order`.
pub fn compare_monomials(order: &TermOrder, a: &Monomial, b: &Monomial) -> Ordering {
    order.compare(a, b)
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: Field) -> Self {
        Polynomial {
            nvars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, field: Field, c: Scalar) -> Self {
        Self::monomial(Monomial::one(nvars), c, field)
    }

    pub fn one(nvars: usize, field: Field) -> Self {
        Self::constant(nvars, field, field.one())
    }

    pub fn var(nvars: usize, field: Field, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), field.one(), field)
    }

    pub fn monomial(m: Monomial, c: Scalar, field: Field) -> Self {
        let mut p = Polynomial::zero(m.nvars(), field);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        field: Field,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Polynomial::zero(nvars, field);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// The constant coefficient if the polynomial is a nonzero constant.
    pub fn as_nonzero_constant(&self) -> Option<&Scalar> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c);
            }
        }
        None
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c);
        }
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-&self.field.one())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars, self.field);
        for (m, a) in &self.terms {
            for (t, b) in &other.terms {
                p.add_term(m.mul(t), &(a * b));
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut r = Polynomial::one(self.nvars, self.field);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Evaluates at a point given by one field element per variable.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = &t * &point[i];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// The common multidegree of all terms.
    pub fn multidegree(&self, a: &DegreeMatrix) -> Result<Multidegree> {
        let mut it = self.terms.keys().map(|m| m.multidegree(a));
        let Some(first) = it.next() else {
            return Err(Error::Domain("the zero polynomial has no degree".into()));
        };
        for d in it {
            if d != first {
                return Err(Error::NonHomogeneous(format!(
                    "terms of degrees {first} and {d} in the same polynomial"
                )));
            }
        }
        Ok(first)
    }

    pub fn is_homogeneous(&self, a: &DegreeMatrix) -> bool {
        self.is_zero() || self.multidegree(a).is_ok()
    }

    /// Splits into multihomogeneous components, keyed by multidegree.
    pub fn homogeneous_components(&self, a: &DegreeMatrix) -> BTreeMap<Multidegree, Polynomial> {
        let mut out: BTreeMap<Multidegree, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.multidegree(a))
                .or_insert_with(|| Polynomial::zero(self.nvars, self.field))
                .add_term(m.clone(), c);
        }
        out
    }

    /// Terms in descending order under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Renders with the given variable names, terms in descending degree-revlex order.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let order = TermOrder::weighted(vec![1; self.nvars.max(1)]);
        let mut out = String::new();
        let terms = if self.nvars == 0 {
            self.terms.iter().collect()
        } else {
            self.sorted_terms(&order)
        };
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative_for_display();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs_string();
            let mut factors: Vec<String> = Vec::new();
            if abs != "1" || m.is_one() {
                factors.push(abs);
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{e}", names[i])),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Parses the text syntax `x0*x1 - 2*y0^2*y1 + 3/2*z`.
pub fn parse_polynomial(text: &str, names: &[String], field: Field) -> Result<Polynomial> {
    let n = names.len();
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Input("empty polynomial".into()));
    }
    let mut pos = 0;
    let mut result = Polynomial::zero(n, field);
    let mut first = true;
    while pos < tokens.len() {
        let mut negative = false;
        match tokens[pos] {
            Token::Plus => pos += 1,
            Token::Minus => {
                negative = true;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(Error::Input(format!("expected + or - in `{text}`"))),
        }
        first = false;
        let mut coeff = BigRational::from_integer(BigInt::from(1));
        let mut mono = vec![0u32; n];
        let mut expect_factor = true;
        while pos < tokens.len() {
            if expect_factor {
                match &tokens[pos] {
                    Token::Number(q) => {
                        coeff *= q;
                        pos += 1;
                    }
                    Token::Ident(name) => {
                        let i = names.iter().position(|x| x == name).ok_or_else(|| {
                            Error::Input(format!("unknown variable `{name}` in `{text}`"))
                        })?;
                        pos += 1;
                        let mut e = 1u32;
                        if pos < tokens.len() && tokens[pos] == Token::Caret {
                            pos += 1;
                            match tokens.get(pos) {
                                Some(Token::Number(q)) if q.is_integer() => {
                                    e = q.to_integer().try_into().map_err(|_| {
                                        Error::Input(format!("bad exponent in `{text}`"))
                                    })?;
                                    pos += 1;
                                }
                                _ => {
                                    return Err(Error::Input(format!(
                                        "expected integer exponent in `{text}`"
                                    )))
                                }
                            }
                        }
                        mono[i] += e;
                    }
                    _ => return Err(Error::Input(format!("expected a factor in `{text}`"))),
                }
                expect_factor = false;
            } else {
                match tokens[pos] {
                    Token::Star => {
                        pos += 1;
                        expect_factor = true;
                    }
                    _ => break,
                }
            }
        }
        if expect_factor {
            return Err(Error::Input(format!("dangling operator in `{text}`")));
        }
        if negative {
            coeff = -coeff;
        }
        result.add_term(Monomial(mono), &field.from_ratio(&coeff)?);
    }
    Ok(result)
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
                let mut q = BigRational::from_integer(num);
                if i < chars.len() && chars[i] == '/' {
                    let s2 = i + 1;
                    let mut j = s2;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == s2 {
                        return Err(Error::Input(format!("bad rational in `{text}`")));
                    }
                    let den: BigInt = chars[s2..j].iter().collect::<String>().parse().unwrap();
                    if den == BigInt::from(0) {
                        return Err(Error::Input(format!("zero denominator in `{text}`")));
                    }
                    q /= BigRational::from_integer(den);
                    i = j;
                }
                out.push(Token::Number(q));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            _ => return Err(Error::Input(format!("unexpected `{c}` in `{text}`"))),
        }
    }
    Ok(out)
}
