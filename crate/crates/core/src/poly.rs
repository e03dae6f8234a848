//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are exponent vectors ordered graded-lexicographically with
//! `x_1 > x_2 > ... > x_n`. Each variable carries degree two in the grading
//! used throughout the crate; [`Poly::degree`] reports that doubled degree,
//! while [`Poly::exp_degree`] is the plain exponent sum.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::shapes::{factorial, Composition};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[j] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Exponent sum.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| b - a).collect())
    }

    /// Image under `x_j -> x_{w(j)}`.
    pub fn permuted(&self, w: &Permutation) -> Monomial {
        let mut out = Self::one(self.nvars());
        for (j, &e) in self.0.iter().enumerate() {
            out.0[w.image(j)] = e;
        }
        out
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A permutation of `{0, ..., n-1}` stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Permutation(images))
    }

    /// The transposition of positions `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, j);
        p
    }

    pub fn image(&self, j: usize) -> usize {
        self.0[j]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.0.len()];
        let mut even_cycles = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j];
                len += 1;
            }
            if len % 2 == 0 {
                even_cycles += 1;
            }
        }
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All elements of the parabolic subgroup permuting variables within blocks.
pub fn parabolic_group(nvars: usize, blocks: &[std::ops::Range<usize>]) -> Vec<Permutation> {
    let per_block: Vec<Vec<Vec<usize>>> = blocks.iter().map(|b| b.clone().permutations(b.len()).collect()).collect();
    if per_block.is_empty() {
        return vec![Permutation::identity(nvars)];
    }
    per_block
        .iter()
        .map(|v| v.iter())
        .multi_cartesian_product()
        .map(|choice| {
            let mut images: Vec<usize> = (0..nvars).collect();
            for (block, imgs) in blocks.iter().zip(choice) {
                for (src, &dst) in block.clone().zip(imgs.iter()) {
                    images[src] = dst;
                }
            }
            Permutation(images)
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    /// The variable `x_{j+1}` (zero-based `j`).
    pub fn var(nvars: usize, j: usize) -> Self {
        Self::monomial(Monomial::var(nvars, j), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    /// Terms in increasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Largest exponent sum (0 for the zero polynomial).
    pub fn exp_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Degree in the doubled grading.
    pub fn degree(&self) -> usize {
        2 * self.exp_degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.keys().map(Monomial::degree).all_equal()
    }

    /// Components keyed by exponent sum.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, Poly> {
        let mut out: BTreeMap<usize, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_insert_with(|| Poly::zero(self.nvars)).terms.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn apply_permutation(&self, w: &Permutation) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.permuted(w), c.clone())).collect() }
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Substitutes rational values for all variables.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    fn sub_scaled_shift(&mut self, c: &Rational, shift: &Monomial, g: &Poly) {
        for (m, v) in &g.terms {
            self.add_term(shift * m, -(c * v));
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| if e == 1 { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// `(1/|S_nu|) sum_{w in S_nu} w.f`
pub fn symmetrize(f: &Poly, nu: &Composition) -> Poly {
    average_over(f, nu, false)
}

/// `(1/|S_nu|) sum_{w in S_nu} sgn(w) w.f`
pub fn antisymmetrize(f: &Poly, nu: &Composition) -> Poly {
    average_over(f, nu, true)
}

fn average_over(f: &Poly, nu: &Composition, signed: bool) -> Poly {
    let group = parabolic_group(f.nvars(), &nu.blocks());
    let mut out = Poly::zero(f.nvars());
    for w in &group {
        let sign = if signed { w.sign() } else { 1 };
        for (m, c) in &f.terms {
            let c = if sign < 0 { -c } else { c.clone() };
            out.add_term(m.permuted(w), c);
        }
    }
    out.scale(&rat(1, group.len() as i64))
}

/// Multivariate division by a single divisor; fails unless the remainder is zero.
pub fn exact_divide(f: &Poly, g: &Poly) -> Result<Poly> {
    let (g_lead, g_coeff) = g.leading_term().ok_or_else(|| Error::InvalidInput("division by zero".into()))?;
    let (g_lead, g_inv) = (g_lead.clone(), g_coeff.recip());
    let mut rem = f.clone();
    let mut quot = Poly::zero(f.nvars());
    while let Some((lead, c)) = rem.leading_term() {
        if !g_lead.divides(lead) {
            return Err(Error::NotDivisible);
        }
        let shift = g_lead.quotient_of(lead);
        let c = c * &g_inv;
        rem.sub_scaled_shift(&c, &shift, g);
        quot.add_term(shift, c);
    }
    Ok(quot)
}

/// Elementary symmetric polynomial `e_r` in the given (zero-based) variables.
pub fn e_sym(nvars: usize, vars: &[usize], r: i64) -> Poly {
    if r < 0 || r as usize > vars.len() {
        return Poly::zero(nvars);
    }
    let mut out = Poly::zero(nvars);
    for subset in vars.iter().combinations(r as usize) {
        let mut m = Monomial::one(nvars);
        for &j in subset {
            m.0[j] += 1;
        }
        out.add_term(m, Rational::one());
    }
    out
}

/// Complete homogeneous symmetric polynomial `h_r` in the given variables.
pub fn h_sym(nvars: usize, vars: &[usize], r: i64) -> Poly {
    if r < 0 || (vars.is_empty() && r > 0) {
        return Poly::zero(nvars);
    }
    let mut out = Poly::zero(nvars);
    for multiset in vars.iter().combinations_with_replacement(r as usize) {
        let mut m = Monomial::one(nvars);
        for &j in multiset {
            m.0[j] += 1;
        }
        out.add_term(m, Rational::one());
    }
    out
}

fn block_union(nu: &Composition, indices: &[i64]) -> Result<Vec<usize>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut vars = Vec::new();
    for &i in indices {
        if !seen.insert(i) {
            return Err(Error::RepeatedIndex(i));
        }
        vars.extend(nu.block(i));
    }
    vars.sort_unstable();
    Ok(vars)
}

/// `e_r(nu; i_1, ..., i_m)`: elementary symmetric in the union of the blocks.
pub fn e_block(nu: &Composition, indices: &[i64], r: i64) -> Result<Poly> {
    Ok(e_sym(nu.size(), &block_union(nu, indices)?, r))
}

/// `h_r(nu; i_1, ..., i_m)`: complete symmetric in the union of the blocks.
pub fn h_block(nu: &Composition, indices: &[i64], r: i64) -> Result<Poly> {
    Ok(h_sym(nu.size(), &block_union(nu, indices)?, r))
}

/// Vandermonde-type product over pairs of variables in a common class,
/// normalized by the order of the product of symmetric groups on the classes.
fn class_vandermonde(nvars: usize, blocks: &[std::ops::Range<usize>]) -> Poly {
    let mut out = Poly::one(nvars);
    let mut order: u64 = 1;
    for b in blocks {
        order *= factorial(b.len());
        for i in b.clone() {
            for j in (i + 1)..b.end {
                out = &out * &(&Poly::var(nvars, i) - &Poly::var(nvars, j));
            }
        }
    }
    out.scale(&rat(1, order as i64))
}

/// `(1/n!) prod_{i<j} (x_i - x_j)`
pub fn eps_full(n: usize) -> Poly {
    class_vandermonde(n, std::slice::from_ref(&(0..n)))
}

/// `(1/|S_nu|) prod_{i<j, i ~ j} (x_i - x_j)` over pairs in a common block of `nu`.
pub fn eps_nu(nu: &Composition) -> Poly {
    class_vandermonde(nu.size(), &nu.blocks())
}

/// Returns `i` such that `nu_prime` is `nu` with one unit moved from `i` to `i + 1`.
pub fn key_index(nu: &Composition, nu_prime: &Composition) -> Option<i64> {
    if nu.is_empty() {
        return None;
    }
    (nu.lo()..=nu.hi()).find(|&i| nu.moved_right(i).as_ref() == Some(nu_prime))
}

/// The normalized product over pairs lying in a common orbit of `S_nu ∩ S_nu'`.
pub fn eps_pair(nu: &Composition, nu_prime: &Composition) -> Result<Poly> {
    let i = key_index(nu, nu_prime).ok_or_else(|| Error::NotKeySituation(format!("{nu} -> {nu_prime}")))?;
    let a = nu.get(i) - 1;
    let refined = nu.split_at(i, &[a, 1]);
    Ok(class_vandermonde(nu.size(), &refined.blocks()))
}

/// True when every adjacent transposition inside a block fixes `f` (up to `sign`).
pub(crate) fn is_block_invariant(f: &Poly, blocks: &[std::ops::Range<usize>], sign: i64) -> bool {
    for b in blocks {
        for j in b.start..b.end.saturating_sub(1) {
            let w = Permutation::transposition(f.nvars(), j, j + 1);
            let image = f.apply_permutation(&w);
            let ok = if sign > 0 { image == *f } else { image == -f };
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, j: usize) -> Poly {
        Poly::var(n, j - 1)
    }

    #[test]
    fn arithmetic_examples() {
        let n = 2;
        assert_eq!(&x(n, 1) * &x(n, 1), Poly::monomial(Monomial::from_exps(&[2, 0]), int(1)));
        let f = &x(n, 1) + &x(n, 2);
        assert!((&f + &(-&f)).is_zero());
        let lhs = &(&x(n, 1) + &x(n, 2)) * &(&x(n, 1) - &x(n, 2));
        assert_eq!(lhs, &x(n, 1).pow(2) - &x(n, 2).pow(2));
    }

    #[test]
    fn permutation_examples() {
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(x(2, 1).apply_permutation(&swap), x(2, 2));
        let f = &x(2, 1).pow(3) + &x(2, 2).scale(&int(5));
        assert_eq!(f.apply_permutation(&Permutation::identity(2)), f);
        let m = &x(2, 1) * &x(2, 2);
        assert_eq!(m.apply_permutation(&swap), m);
        assert_eq!(swap.sign(), -1);
        assert_eq!(Permutation::from_images(vec![1, 2, 0]).unwrap().sign(), 1);
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn symmetrize_examples() {
        let nu = Composition::from_parts(&[2]);
        assert_eq!(symmetrize(&x(2, 1), &nu), (&x(2, 1) + &x(2, 2)).scale(&rat(1, 2)));
        let reg = Composition::regular(3);
        let f = &x(3, 1).pow(2) * &x(3, 3);
        assert_eq!(symmetrize(&f, &reg), f);
        assert_eq!(symmetrize(&x(2, 1).pow(2), &nu), (&x(2, 1).pow(2) + &x(2, 2).pow(2)).scale(&rat(1, 2)));
    }

    #[test]
    fn antisymmetrize_examples() {
        let nu = Composition::from_parts(&[2]);
        assert_eq!(antisymmetrize(&x(2, 1), &nu), (&x(2, 1) - &x(2, 2)).scale(&rat(1, 2)));
        assert!(antisymmetrize(&(&x(2, 1) * &x(2, 2)), &nu).is_zero());
        assert_eq!(antisymmetrize(&x(2, 1).pow(2), &nu), (&x(2, 1).pow(2) - &x(2, 2).pow(2)).scale(&rat(1, 2)));
    }

    #[test]
    fn exact_divide_examples() {
        let f = &x(2, 1).pow(2) - &x(2, 2).pow(2);
        let g = &x(2, 1) - &x(2, 2);
        assert_eq!(exact_divide(&f, &g).unwrap(), &x(2, 1) + &x(2, 2));
        assert_eq!(exact_divide(&f, &Poly::one(2)).unwrap(), f);
        assert_eq!(exact_divide(&x(2, 1), &x(2, 2)), Err(Error::NotDivisible));
        assert!(exact_divide(&f, &Poly::zero(2)).is_err());
    }

    #[test]
    fn symmetric_function_examples() {
        let n = 3;
        let e2 = &(&(&x(n, 1) * &x(n, 2)) + &(&x(n, 1) * &x(n, 3))) + &(&x(n, 2) * &x(n, 3));
        assert_eq!(e_sym(n, &[0, 1, 2], 2), e2);
        let h2 = &(&x(2, 1).pow(2) + &(&x(2, 1) * &x(2, 2))) + &x(2, 2).pow(2);
        assert_eq!(h_sym(2, &[0, 1], 2), h2);
        assert!(e_sym(2, &[0], 2).is_zero());
        assert_eq!(h_sym(2, &[], 0), Poly::one(2));
        assert!(h_sym(2, &[0], -1).is_zero());
    }

    #[test]
    fn block_function_examples() {
        let nu = Composition::from_parts(&[1, 2, 1]);
        let e = e_block(&nu, &[1, 2], 1).unwrap();
        assert_eq!(e, &(&x(4, 1) + &x(4, 2)) + &x(4, 3));
        assert_eq!(h_block(&nu, &[3], 0).unwrap(), Poly::one(4));
        assert!(e_block(&nu, &[2], 3).unwrap().is_zero());
        assert_eq!(e_block(&nu, &[2, 2], 1), Err(Error::RepeatedIndex(2)));
    }

    #[test]
    fn eps_examples() {
        assert_eq!(eps_full(2), (&x(2, 1) - &x(2, 2)).scale(&rat(1, 2)));
        assert_eq!(eps_nu(&Composition::regular(4)), Poly::one(4));
        let nu = Composition::from_parts(&[2]);
        let nu_p = Composition::from_parts(&[1, 1]);
        assert_eq!(eps_pair(&nu, &nu_p).unwrap(), Poly::one(2));
        assert!(eps_pair(&nu_p, &nu).is_err());
        // eps_nu / eps_pair is the normalized product of (x_{k-j} - x_k)
        let nu = Composition::from_parts(&[3, 1]);
        let nu_p = Composition::from_parts(&[2, 2]);
        let q = exact_divide(&eps_nu(&nu), &eps_pair(&nu, &nu_p).unwrap()).unwrap();
        let expected = (&(&x(4, 1) - &x(4, 3)) * &(&x(4, 2) - &x(4, 3))).scale(&rat(1, 3));
        assert_eq!(q, expected);
    }

    #[test]
    fn degree_is_doubled() {
        let f = &x(3, 1).pow(2) * &x(3, 2);
        assert_eq!(f.exp_degree(), 3);
        assert_eq!(f.degree(), 6);
        assert!(f.is_homogeneous());
        assert!(!(&f + &Poly::one(3)).is_homogeneous());
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((prop::collection::vec(0u16..3, n), -4i64..5), 0..5)
            .prop_map(move |terms| Poly::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::from_exps(&e), int(c)))))
    }

    proptest! {
        #[test]
        fn permutation_is_a_ring_map(f in arb_poly(3), g in arb_poly(3), idx in 0usize..6) {
            let w = Permutation::from_images((0..3).permutations(3).nth(idx).unwrap()).unwrap();
            prop_assert_eq!((&f * &g).apply_permutation(&w), &f.apply_permutation(&w) * &g.apply_permutation(&w));
            prop_assert_eq!((&f + &g).apply_permutation(&w), &f.apply_permutation(&w) + &g.apply_permutation(&w));
            let before: Vec<usize> = f.homogeneous_components().into_keys().collect();
            let after: Vec<usize> = f.apply_permutation(&w).homogeneous_components().into_keys().collect();
            prop_assert_eq!(after, before);
        }

        #[test]
        fn projections_are_idempotent(f in arb_poly(4)) {
            let nu = Composition::from_parts(&[1, 3]);
            let s = symmetrize(&f, &nu);
            prop_assert_eq!(symmetrize(&s, &nu), s);
            let a = antisymmetrize(&f, &nu);
            prop_assert_eq!(antisymmetrize(&a, &nu), a);
        }

        #[test]
        fn division_inverts_multiplication(f in arb_poly(3), g in arb_poly(3)) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!(exact_divide(&(&f * &g), &g).unwrap(), f);
        }
    }
}
