//! Small polynomial toolkit over ℚ: monomial orders, Buchberger's algorithm,
//! normal forms, ideal membership / equality / intersection, and Fitting ideals.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::complex::binomial;
use crate::error::{Error, Result};
use crate::exactlin::{rat, Rational};
use crate::koszul::presentation::PresentationMatrix;

pub type Exponent = Vec<u32>;

/// Largest number of minors [`fitting_ideal`] will expand.
pub const MINOR_GUARD: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// `x_1 > x_2 > … > x_n`.
    Lex,
    Grevlex,
    /// Grevlex on the first `k` variables, ties broken by grevlex on the rest;
    /// eliminates the first `k` variables.
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// A polynomial in `x_1, …, x_n` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    pub n: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(n, vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, rat(1))
    }

    pub fn monomial(n: usize, exponent: Exponent, c: Rational) -> Self {
        assert_eq!(exponent.len(), n, "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Polynomial { n, terms }
    }

    /// The variable `x_{j+1}` (0-based `j`).
    pub fn var(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        Self::monomial(n, e, rat(1))
    }

    /// Product of the variables with the given 1-based indices.
    pub fn square_free_monomial(n: usize, vertices: &[usize]) -> Self {
        let mut e = vec![0; n];
        for v in vertices {
            e[v - 1] += 1;
        }
        Self::monomial(n, e, rat(1))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| *x == 0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn add_term(&mut self, e: Exponent, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// `c · x^e · self`.
    pub fn mul_term(&self, e: &[u32], c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.iter().zip(e).map(|(a, b)| a + b).collect(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &other.terms {
            for (m, v) in &self.terms {
                out.add_term(m.iter().zip(e).map(|(a, b)| a + b).collect(), &(v * c));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Exponent> {
        self.leading_term(order).map(|(e, _)| e)
    }

    /// Clears denominators and common content, leading coefficient positive.
    pub fn primitive(&self, order: MonomialOrder) -> Self {
        let Some((_, lc)) = self.leading_term(order) else { return self.clone() };
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &den / c.denom())));
        let mut factor = Rational::new(den, num);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Insert a new variable at position 0 (used for elimination).
    fn lift(&self) -> Self {
        Polynomial {
            n: self.n + 1,
            terms: self.terms.iter().map(|(e, c)| (std::iter::once(0).chain(e.iter().copied()).collect(), c.clone())).collect(),
        }
    }

    /// Drop variable 0, assumed absent.
    fn drop_first(&self) -> Self {
        Polynomial { n: self.n - 1, terms: self.terms.iter().map(|(e, c)| (e[1..].to_vec(), c.clone())).collect() }
    }

    /// Terms sorted from largest to smallest in the given order.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Exponent, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| order.cmp(b.0, a.0));
        t
    }

    pub fn display_with(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, x)| **x > 0)
                .map(|(j, x)| if *x == 1 { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, x) })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&format!("{abs}*"));
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(MonomialOrder::Grevlex))
    }
}

/// Full reduction of `f` modulo `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let leads: Vec<(Exponent, Rational)> = basis
        .iter()
        .map(|g| {
            let (e, c) = g.leading_term(order).expect("nonzero basis element");
            (e.clone(), c.clone())
        })
        .collect();
    let mut p = f.clone();
    let mut r = Polynomial::zero(f.n);
    while let Some((e, c)) = p.leading_term(order).map(|(e, c)| (e.clone(), c.clone())) {
        match leads.iter().position(|(le, _)| divides(le, &e)) {
            Some(k) => {
                let factor = -(&c / &leads[k].1);
                p = p.add(&basis[k].mul_term(&quotient(&e, &leads[k].0), &factor));
            }
            None => {
                r.add_term(e.clone(), &c);
                p.terms.remove(&e);
            }
        }
    }
    r
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (ef, cf) = f.leading_term(order).expect("nonzero");
    let (eg, cg) = g.leading_term(order).expect("nonzero");
    let l = lcm(ef, eg);
    f.mul_term(&quotient(&l, ef), &cf.recip()).sub(&g.mul_term(&quotient(&l, eg), &cg.recip()))
}

/// Reduced Gröbner basis (integer-primitive, positive leading coefficients,
/// sorted by decreasing leading monomial). The zero ideal gives an empty basis.
pub fn buchberger(generators: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).map(|g| g.primitive(order)).collect();
    basis.dedup();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();
    while let Some((i, j)) = pairs.pop() {
        done.insert((i, j));
        let li = basis[i].leading_monomial(order).expect("nonzero").clone();
        let lj = basis[j].leading_monomial(order).expect("nonzero").clone();
        // coprime leading monomials
        if li.iter().zip(&lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        // chain criterion
        let l = lcm(&li, &lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].leading_monomial(order).expect("nonzero"), &l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if !r.is_zero() {
            let new = basis.len();
            basis.push(r.primitive(order));
            pairs.extend((0..new).map(|k| (k, new)));
        }
    }
    reduce_basis(basis, order)
}

fn reduce_basis(basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    // minimal basis
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial(order).expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(m, h)| {
            let lh = h.leading_monomial(order).expect("nonzero");
            m != k && divides(lh, lg) && (lh != lg || m < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    // interreduce
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, p)| p.clone()).collect();
        let lead = minimal[k].leading_term(order).map(|(e, c)| (e.clone(), c.clone())).expect("nonzero");
        let tail = {
            let mut t = minimal[k].clone();
            t.terms.remove(&lead.0);
            t
        };
        let nf = normal_form(&tail, &others, order);
        reduced.push(Polynomial::monomial(minimal[k].n, lead.0, lead.1).add(&nf).primitive(order));
    }
    reduced.sort_by(|a, b| {
        order.cmp(b.leading_monomial(order).expect("nonzero"), a.leading_monomial(order).expect("nonzero"))
    });
    reduced
}

/// Ideal of `ℚ[x_1, …, x_n]` with a lazily computed grevlex Gröbner basis.
#[derive(Debug)]
pub struct PolynomialIdeal {
    pub n: usize,
    generators: Vec<Polynomial>,
    grevlex: OnceLock<Vec<Polynomial>>,
}

impl Clone for PolynomialIdeal {
    fn clone(&self) -> Self {
        PolynomialIdeal { n: self.n, generators: self.generators.clone(), grevlex: self.grevlex.clone() }
    }
}

impl PolynomialIdeal {
    pub fn new(n: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.n != n) {
            return Err(Error::DimensionMismatch(format!("generator in {} variables for an ideal in {n}", g.n)));
        }
        Ok(PolynomialIdeal { n, generators, grevlex: OnceLock::new() })
    }

    /// Ideal generated by square-free monomials given as 1-based vertex sets.
    pub fn monomial(n: usize, generators: &[Vec<usize>]) -> Self {
        PolynomialIdeal {
            n,
            generators: generators.iter().map(|g| Polynomial::square_free_monomial(n, g)).collect(),
            grevlex: OnceLock::new(),
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.grevlex.get_or_init(|| buchberger(&self.generators, MonomialOrder::Grevlex))
    }

    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Vec<Polynomial> {
        match order {
            MonomialOrder::Grevlex => self.groebner_basis().to_vec(),
            _ => buchberger(&self.generators, order),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(|g| g.is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.groebner_basis().is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self.groebner_basis(), MonomialOrder::Grevlex).is_zero()
    }

    pub fn contains_ideal(&self, other: &PolynomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }
}

impl PartialEq for PolynomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        ideal_equal(self, other)
    }
}

impl fmt::Display for PolynomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn ideal_member(f: &Polynomial, ideal: &PolynomialIdeal) -> bool {
    ideal.contains(f)
}

pub fn ideal_equal(a: &PolynomialIdeal, b: &PolynomialIdeal) -> bool {
    a.n == b.n && a.groebner_basis() == b.groebner_basis()
}

/// `I ∩ J` as the `t`-free part of a Gröbner basis of `tI + (1 - t)J` under an
/// order eliminating `t`.
pub fn ideal_intersect(a: &PolynomialIdeal, b: &PolynomialIdeal) -> Result<PolynomialIdeal> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(format!("ideals in {} and {} variables", a.n, b.n)));
    }
    let n = a.n;
    let t = Polynomial::var(n + 1, 0);
    let one_minus_t = Polynomial::one(n + 1).sub(&t);
    let mut gens: Vec<Polynomial> = a.generators.iter().map(|g| t.mul(&g.lift())).collect();
    gens.extend(b.generators.iter().map(|g| one_minus_t.mul(&g.lift())));
    let gb = buchberger(&gens, MonomialOrder::Block(1));
    let kept: Vec<Polynomial> = gb.into_iter().filter(|g| g.terms.keys().all(|e| e[0] == 0)).map(|g| g.drop_first()).collect();
    PolynomialIdeal::new(n, kept)
}

/// Determinant by cofactor expansion along the first row.
fn determinant(m: &[Vec<Polynomial>], n: usize) -> Polynomial {
    let k = m.len();
    match k {
        0 => Polynomial::one(n),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Polynomial::zero(n);
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][c].mul(&determinant(&minor, n));
                acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::bits::subsets_of_size(n, k).into_iter().map(|m| crate::bits::bit_positions(m).collect()).collect()
}

/// `Fitt_r` of the module presented by `matrix` (rows = generators): the ideal of
/// `(rows - r)`-minors. Unit ideal when `rows ≤ r`, zero ideal when there are too few columns.
pub fn fitting_ideal(matrix: &[Vec<Polynomial>], n: usize, r: usize) -> Result<PolynomialIdeal> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |row| row.len());
    if matrix.iter().any(|row| row.len() != cols) {
        return Err(Error::DimensionMismatch("ragged presentation matrix".into()));
    }
    if rows <= r {
        return PolynomialIdeal::new(n, vec![Polynomial::one(n)]);
    }
    let k = rows - r;
    if k > cols {
        return PolynomialIdeal::new(n, Vec::new());
    }
    let count = binomial(rows, k).saturating_mul(binomial(cols, k));
    if count > MINOR_GUARD {
        return Err(Error::Precondition(format!("{count} minors exceed the limit of {MINOR_GUARD}")));
    }
    let mut minors = Vec::new();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<Polynomial>> =
                rs.iter().map(|&i| cs.iter().map(|&j| matrix[i][j].clone()).collect()).collect();
            let d = determinant(&sub, n);
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    PolynomialIdeal::new(n, minors)
}

/// Entries of a linear presentation as polynomials.
pub fn polynomial_matrix(p: &PresentationMatrix) -> Vec<Vec<Polynomial>> {
    p.dense()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| match e {
                    None => Polynomial::zero(p.n),
                    Some((s, v)) => Polynomial::var(p.n, v).scale(&rat(s)),
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    /// `I ⊆ J`.
    pub contained: bool,
    /// `I = J`.
    pub equal: bool,
    /// Every generator of `J` has a power in `I`, so `√I ⊇ J`.
    pub powers_in: bool,
    /// Smallest exponent that works for all generators, when `powers_in`.
    pub exponent: Option<u32>,
}

impl RadicalReport {
    /// `I ⊊ J = √I`.
    pub fn non_reduced(&self) -> bool {
        self.contained && !self.equal && self.powers_in
    }

    pub fn reduced(&self) -> bool {
        self.equal
    }
}

/// Compare `I` with a square-free monomial ideal `J` claimed to be its radical.
pub fn is_radical_vs(ideal: &PolynomialIdeal, radical: &PolynomialIdeal) -> RadicalReport {
    const MAX_EXPONENT: u32 = 16;
    let contained = radical.contains_ideal(ideal);
    let equal = contained && ideal.contains_ideal(radical);
    let mut exponent = Some(1);
    for g in radical.generators() {
        match (1..=MAX_EXPONENT).find(|&k| ideal.contains(&g.pow(k))) {
            Some(k) => exponent = exponent.map(|e| e.max(k)),
            None => {
                exponent = None;
                break;
            }
        }
    }
    RadicalReport { contained, equal, powers_in: exponent.is_some(), exponent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::exactlin::RationalMatrix;
    use crate::koszul::presentation::presentation_matrix;
    use proptest::prelude::*;

    fn x(n: usize, j: usize) -> Polynomial {
        Polynomial::var(n, j - 1)
    }

    #[test]
    fn orders() {
        let a = vec![1, 0, 2];
        let b = vec![0, 3, 0];
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Grevlex.cmp(&[1, 1, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(MonomialOrder::Block(1).cmp(&[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
    }

    #[test]
    fn small_bases() {
        let gb = buchberger(&[x(2, 1), x(2, 2)], MonomialOrder::Grevlex);
        assert_eq!(gb, vec![x(2, 1), x(2, 2)]);
        let f = x(2, 1).mul(&x(2, 1)).sub(&x(2, 2));
        let gb = buchberger(&[f, x(2, 1)], MonomialOrder::Lex);
        assert_eq!(gb, vec![x(2, 1), x(2, 2)]);
        assert!(buchberger(&[], MonomialOrder::Lex).is_empty());
        let gb = buchberger(&[x(2, 1).scale(&rat(3)).add(&Polynomial::constant(2, rat(-6)))], MonomialOrder::Grevlex);
        assert_eq!(gb[0].to_string(), "x1 - 2");
    }

    #[test]
    fn monomial_intersections() {
        let i = PolynomialIdeal::monomial(4, &[vec![2]]);
        let j = PolynomialIdeal::monomial(4, &[vec![3]]);
        let k = ideal_intersect(&i, &j).unwrap();
        assert_eq!(k, PolynomialIdeal::monomial(4, &[vec![2, 3]]));
        assert!(k.contains(&Polynomial::square_free_monomial(4, &[2, 3])));
        assert!(!k.contains(&x(4, 2)));
        assert!(!PolynomialIdeal::monomial(4, &[vec![2, 3]]).contains(&x(4, 2)));
    }

    #[test]
    fn fitting_trivial_cases() {
        let id = vec![vec![Polynomial::one(2), Polynomial::zero(2)], vec![Polynomial::zero(2), Polynomial::one(2)]];
        assert!(fitting_ideal(&id, 2, 0).unwrap().is_unit());
        let diag = vec![vec![x(2, 1), Polynomial::zero(2)], vec![Polynomial::zero(2), x(2, 2)]];
        assert_eq!(fitting_ideal(&diag, 2, 0).unwrap(), PolynomialIdeal::monomial(2, &[vec![1, 2]]));
        assert_eq!(fitting_ideal(&diag, 2, 1).unwrap(), PolynomialIdeal::monomial(2, &[vec![1], vec![2]]));
    }

    #[test]
    fn fitting_of_path4() {
        let p = presentation_matrix(&SimplicialComplex::path(4).unwrap()).unwrap();
        let fitt = fitting_ideal(&polynomial_matrix(&p), 4, 0).unwrap();
        let x2 = PolynomialIdeal::monomial(4, &[vec![2]]);
        let x3 = PolynomialIdeal::monomial(4, &[vec![3]]);
        let sq = |j: usize| x(4, j).pow(2);
        let embedded = PolynomialIdeal::new(4, vec![x(4, 1), sq(2), sq(3), x(4, 4)]).unwrap();
        let target = ideal_intersect(&ideal_intersect(&x2, &x3).unwrap(), &embedded).unwrap();
        assert_eq!(fitt, target);
        let ann = PolynomialIdeal::monomial(4, &[vec![2, 3]]);
        let report = is_radical_vs(&fitt, &ann);
        assert!(report.non_reduced(), "{report:?}");
        assert!(is_radical_vs(&ann, &ann).reduced());
    }

    #[test]
    fn radical_of_a_square() {
        let i = PolynomialIdeal::new(1, vec![x(1, 1).pow(2)]).unwrap();
        let j = PolynomialIdeal::monomial(1, &[vec![1]]);
        let r = is_radical_vs(&i, &j);
        assert!(r.non_reduced());
        assert_eq!(r.exponent, Some(2));
    }

    fn arb_homogeneous(n: usize, deg: u32) -> impl Strategy<Value = Polynomial> {
        let monos = crate::koszul::strand::multidegrees_of_total(n, deg);
        proptest::collection::vec(-2i64..=2, monos.len())
            .prop_map(move |cs| Polynomial::from_terms(n, monos.iter().cloned().zip(cs.into_iter().map(rat))))
    }

    /// Membership of a homogeneous `f` of degree `D` via linear algebra on `S_{D - deg g} · g`.
    fn linear_membership(f: &Polynomial, gens: &[Polynomial], n: usize) -> bool {
        let d = f.total_degree().unwrap_or(0);
        let monos = crate::koszul::strand::multidegrees_of_total(n, d);
        let index: std::collections::HashMap<&Exponent, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut columns: Vec<Vec<Rational>> = Vec::new();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let gd = g.total_degree().unwrap();
            if gd > d {
                continue;
            }
            for m in crate::koszul::strand::multidegrees_of_total(n, d - gd) {
                let p = g.mul_term(&m, &rat(1));
                let mut col = vec![rat(0); monos.len()];
                for (e, c) in p.terms() {
                    col[index[e]] = c.clone();
                }
                columns.push(col);
            }
        }
        let mut fcol = vec![rat(0); monos.len()];
        for (e, c) in f.terms() {
            fcol[index[e]] = c.clone();
        }
        let base = RationalMatrix::from_columns(monos.len(), &columns).unwrap().rank();
        columns.push(fcol);
        base == RationalMatrix::from_columns(monos.len(), &columns).unwrap().rank()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reduced_basis_is_idempotent(gens in proptest::collection::vec(arb_homogeneous(3, 2), 1..4)) {
            let gb = buchberger(&gens, MonomialOrder::Grevlex);
            prop_assert_eq!(buchberger(&gb, MonomialOrder::Grevlex), gb);
        }

        #[test]
        fn membership_matches_linear_algebra(
            gens in proptest::collection::vec(arb_homogeneous(3, 2), 1..3),
            mult in proptest::collection::vec(arb_homogeneous(3, 1), 2),
            noise in arb_homogeneous(3, 3),
            with_noise in any::<bool>(),
        ) {
            let mut f = Polynomial::zero(3);
            for (g, m) in gens.iter().zip(&mult) {
                f = f.add(&g.mul(m));
            }
            if with_noise {
                f = f.add(&noise);
            }
            let ideal = PolynomialIdeal::new(3, gens.clone()).unwrap();
            prop_assert_eq!(ideal.contains(&f), linear_membership(&f, &gens, 3));
        }

        #[test]
        fn intersection_matches_lcm_formula(
            a in proptest::collection::vec(1u64..32, 1..4),
            b in proptest::collection::vec(1u64..32, 1..4),
        ) {
            let to_sets = |v: &[u64]| v.iter().map(|m| crate::bits::to_vertices(*m)).collect::<Vec<_>>();
            let i = PolynomialIdeal::monomial(5, &to_sets(&a));
            let j = PolynomialIdeal::monomial(5, &to_sets(&b));
            let lcms: Vec<u64> = a.iter().flat_map(|x| b.iter().map(move |y| x | y)).collect();
            let expected = PolynomialIdeal::monomial(5, &to_sets(&lcms));
            prop_assert_eq!(ideal_intersect(&i, &j).unwrap(), expected);
        }
    }
}
