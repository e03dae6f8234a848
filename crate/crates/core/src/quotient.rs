//! Graded quotients `P_nu / I` of the ring of `S_nu`-invariants.
//!
//! Each graded piece of `P_nu` is coordinatized by the orbit sums of its
//! canonical monomials (exponents weakly decreasing inside every block): the
//! coordinate of an invariant polynomial is simply its coefficient at each
//! canonical monomial. The ideal is built degree by degree as
//! `I(d) = gens(d) + sum_y y * I(d - deg y)` over the algebra generators
//! `y = e_r(nu; i)` and kept in reduced echelon form, pivoting on the
//! smallest monomial; the free columns give the normal-form complement.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{e_sym, eps_nu, exact_divide, h_sym, is_block_invariant, Monomial, Poly, Rational};
use crate::shapes::{d_mu_nu, d_nu, dominates, sort_to_partition, transpose, Composition, Partition};
use crate::tableaux::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorForm {
    /// Complete symmetric functions of unions of blocks.
    H,
    /// Elementary symmetric functions of unions of blocks.
    E,
}

impl std::str::FromStr for GeneratorForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h" | "H" => Ok(GeneratorForm::H),
            "e" | "E" => Ok(GeneratorForm::E),
            _ => Err(Error::InvalidInput(format!("unknown generator form {s:?}"))),
        }
    }
}

/// Canonical monomials of exponent sum `d`, ascending in the term order.
fn canonical_monomials(nvars: usize, blocks: &[Range<usize>], d: usize) -> Vec<Monomial> {
    fn parts_at_most(total: usize, len: usize, max: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if len == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if total > len * max {
            return;
        }
        for p in (0..=max.min(total)).rev() {
            cur.push(p as u16);
            parts_at_most(total - p, len - 1, p, cur, out);
            cur.pop();
        }
    }
    fn rec(blocks: &[Range<usize>], left: usize, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let Some((b, rest)) = blocks.split_first() else {
            if left == 0 {
                out.push(Monomial::from_exps(exps));
            }
            return;
        };
        for s in 0..=left {
            let mut shapes = Vec::new();
            parts_at_most(s, b.len(), s, &mut Vec::new(), &mut shapes);
            for shape in shapes {
                exps[b.clone()].copy_from_slice(&shape);
                rec(rest, left - s, exps, out);
            }
        }
        exps[b.clone()].iter_mut().for_each(|e| *e = 0);
    }
    let mut out = Vec::new();
    rec(blocks, d, &mut vec![0; nvars], &mut out);
    out.sort();
    out
}

/// All distinct images of `m` under permutations inside the blocks.
fn orbit(m: &Monomial, blocks: &[Range<usize>]) -> Vec<Monomial> {
    let per_block: Vec<Vec<Vec<u16>>> = blocks
        .iter()
        .map(|b| {
            let exps = &m.exps()[b.clone()];
            exps.iter().copied().permutations(exps.len()).unique().collect()
        })
        .collect();
    if per_block.is_empty() {
        return vec![m.clone()];
    }
    per_block
        .iter()
        .map(|v| v.iter())
        .multi_cartesian_product()
        .map(|choice| {
            let mut exps = m.exps().to_vec();
            for (b, e) in blocks.iter().zip(choice) {
                exps[b.clone()].copy_from_slice(e);
            }
            Monomial::from_exps(&exps)
        })
        .collect()
}

struct Piece {
    columns: Vec<Monomial>,
    orbits: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
    echelon: Echelon,
    free: Vec<usize>,
}

impl Piece {
    fn new(nvars: usize, blocks: &[Range<usize>], d: usize) -> Self {
        let columns = canonical_monomials(nvars, blocks, d);
        let orbits = columns.iter().map(|m| orbit(m, blocks)).collect();
        let index = columns.iter().cloned().enumerate().map(|(j, m)| (m, j)).collect();
        let echelon = Echelon::new(columns.len());
        Piece { columns, orbits, index, echelon, free: Vec::new() }
    }

    fn dim(&self) -> usize {
        self.free.len()
    }

    fn coords(&self, f: &Poly) -> SparseVec {
        f.terms().filter_map(|(m, c)| self.index.get(m).map(|&j| (j, c.clone()))).collect()
    }

    /// Canonical coordinates of `y * g` where `g` is given by orbit-sum coordinates.
    fn product_coords(&self, y: &Poly, g: &SparseVec, source: &Piece) -> SparseVec {
        let mut out = SparseVec::new();
        for (&col, c) in g {
            for m in &source.orbits[col] {
                for (my, cy) in y.terms() {
                    if let Some(&j) = self.index.get(&(my * m)) {
                        let e = out.entry(j).or_insert_with(Rational::zero);
                        *e += c * cy;
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn expand(&self, coords: impl IntoIterator<Item = (usize, Rational)>) -> Vec<(Monomial, Rational)> {
        let mut out = Vec::new();
        for (col, c) in coords {
            for m in &self.orbits[col] {
                out.push((m.clone(), c.clone()));
            }
        }
        out
    }
}

/// A graded quotient of `P_nu` with cached echelon data in every degree
/// up to `limit` (exponent sum).
pub struct GradedQuotient {
    label: String,
    nu: Composition,
    blocks: Vec<Range<usize>>,
    nvars: usize,
    generators: Vec<Poly>,
    pieces: Vec<Piece>,
    limit: usize,
    bounded: bool,
}

impl fmt::Debug for GradedQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

impl GradedQuotient {
    fn build(label: String, nu: &Composition, generators: Vec<Poly>, limit: usize, bounded: bool) -> Result<Self> {
        let nvars = nu.size();
        let blocks = nu.blocks();
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::SizeMismatch(g.nvars(), nvars));
            }
            if !g.is_homogeneous() {
                return Err(Error::InvalidInput(format!("generator {g} is not homogeneous")));
            }
            if !is_block_invariant(g, &blocks, 1) {
                return Err(Error::NotInvariant);
            }
        }
        let algebra_gens: Vec<(usize, Poly)> = blocks
            .iter()
            .flat_map(|b| {
                let vars: Vec<usize> = b.clone().collect();
                (1..=b.len()).map(move |r| (r, e_sym(nvars, &vars, r as i64)))
            })
            .collect();
        let reach = nu.max_part();
        let mut pieces: Vec<Piece> = Vec::with_capacity(limit + 1);
        for d in 0..=limit {
            let mut piece = Piece::new(nvars, &blocks, d);
            let below = &pieces[d.saturating_sub(reach)..d];
            let saturated = d > 0 && !below.is_empty() && below.iter().all(|p| p.echelon.is_full());
            if saturated {
                for j in 0..piece.columns.len() {
                    piece.echelon.insert(SparseVec::from([(j, Rational::one())]));
                }
            } else {
                for g in generators.iter().filter(|g| !g.is_zero() && g.exp_degree() == d) {
                    let v = piece.coords(g);
                    piece.echelon.insert(v);
                }
                'outer: for (e, y) in &algebra_gens {
                    if *e > d {
                        continue;
                    }
                    let source = &pieces[d - e];
                    for (_, row) in source.echelon.rows() {
                        if piece.echelon.is_full() {
                            break 'outer;
                        }
                        let v = piece.product_coords(y, row, source);
                        piece.echelon.insert(v);
                    }
                }
            }
            piece.free = piece.echelon.free_columns();
            pieces.push(piece);
        }
        Ok(GradedQuotient { label, nu: nu.clone(), blocks, nvars, generators, pieces, limit, bounded })
    }

    /// A quotient known only through exponent degree `limit`; normal forms
    /// above that degree are refused.
    pub fn truncated(nu: &Composition, generators: Vec<Poly>, limit: usize) -> Result<Self> {
        Self::build(format!("P_{nu}/I"), nu, generators, limit, false)
    }

    /// Builds the quotient through `top + max(nu)` and checks that it vanishes
    /// above `top`, which then forces vanishing in all higher degrees.
    fn terminating(label: String, nu: &Composition, generators: Vec<Poly>, top: usize) -> Result<Self> {
        let limit = top + nu.max_part();
        let q = Self::build(label, nu, generators, limit, true)?;
        for d in top + 1..=limit {
            let dim = q.pieces[d].dim();
            if dim != 0 {
                return Err(Error::NonTerminating { top: 2 * top, degree: 2 * d, dim });
            }
        }
        Ok(q)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The composition whose parabolic subgroup defines the ambient ring,
    /// normalized to its non-zero parts starting at index 1.
    pub fn nu(&self) -> &Composition {
        &self.nu
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Largest exponent degree with cached data.
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Dimensions indexed by exponent degree `0..=limit`.
    pub fn graded_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Piece::dim).collect()
    }

    pub fn dim_in_exp_degree(&self, d: usize) -> usize {
        self.pieces.get(d).map_or(0, Piece::dim)
    }

    pub fn dim(&self) -> usize {
        self.pieces.iter().map(Piece::dim).sum()
    }

    /// Largest exponent degree with a non-zero component, `None` for the zero algebra.
    pub fn top_exp_degree(&self) -> Option<usize> {
        self.pieces.iter().rposition(|p| p.dim() > 0)
    }

    /// Hilbert series in the doubled grading.
    pub fn hilbert(&self) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (d, p) in self.pieces.iter().enumerate() {
            out.add_term(2 * d, p.dim() as i64);
        }
        out
    }

    fn check_member(&self, f: &Poly) -> Result<()> {
        if f.nvars() != self.nvars {
            return Err(Error::SizeMismatch(f.nvars(), self.nvars));
        }
        if !is_block_invariant(f, &self.blocks, 1) {
            return Err(Error::NotInvariant);
        }
        Ok(())
    }

    /// Free coordinates of the degree-`d` component of an invariant `f`.
    fn reduced(&self, d: usize, component: &Poly) -> Result<Option<SparseVec>> {
        match self.pieces.get(d) {
            Some(piece) => {
                let mut v = piece.coords(component);
                piece.echelon.reduce(&mut v);
                Ok(Some(v))
            }
            None if self.bounded => Ok(None),
            None => Err(Error::InvalidInput(format!("degree {} lies beyond the computed range of {}", 2 * d, self.label))),
        }
    }

    fn normal_form_rep(&self, f: &Poly) -> Result<Poly> {
        self.check_member(f)?;
        let mut out = Poly::zero(self.nvars);
        for (d, component) in f.homogeneous_components() {
            if let Some(v) = self.reduced(d, &component)? {
                for (m, c) in self.pieces[d].expand(v) {
                    out.add_term(m, c);
                }
            }
        }
        Ok(out)
    }

    fn coords_of_rep(&self, rep: &Poly) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.dim());
        for piece in &self.pieces {
            for &col in &piece.free {
                out.push(rep.coeff(&piece.columns[col]));
            }
        }
        out
    }

    fn coords_in_exp_degree(&self, rep: &Poly, d: usize) -> Vec<Rational> {
        match self.pieces.get(d) {
            Some(piece) => piece.free.iter().map(|&col| rep.coeff(&piece.columns[col])).collect(),
            None => Vec::new(),
        }
    }

    fn basis_reps(&self) -> impl Iterator<Item = (usize, Poly)> + '_ {
        self.pieces.iter().enumerate().flat_map(move |(d, piece)| {
            piece.free.iter().map(move |&col| (d, Poly::from_terms(self.nvars, piece.expand([(col, Rational::one())]))))
        })
    }
}

/// An element of a graded quotient, stored as its normal-form representative.
#[derive(Clone)]
pub struct QuotientElement {
    quotient: Arc<GradedQuotient>,
    rep: Poly,
}

impl PartialEq for QuotientElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.quotient, &other.quotient) && self.rep == other.rep
    }
}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in {}", self.rep, self.quotient.label)
    }
}

impl QuotientElement {
    pub fn zero(q: &Arc<GradedQuotient>) -> Self {
        QuotientElement { quotient: q.clone(), rep: Poly::zero(q.nvars) }
    }

    pub fn one(q: &Arc<GradedQuotient>) -> Self {
        normal_form(&Poly::one(q.nvars), q).expect("constants are invariant")
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn quotient(&self) -> &Arc<GradedQuotient> {
        &self.quotient
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(Arc::ptr_eq(&self.quotient, &other.quotient));
        QuotientElement { quotient: self.quotient.clone(), rep: &self.rep + &other.rep }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert!(Arc::ptr_eq(&self.quotient, &other.quotient));
        QuotientElement { quotient: self.quotient.clone(), rep: &self.rep - &other.rep }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuotientElement { quotient: self.quotient.clone(), rep: self.rep.scale(c) }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        normal_form(&(&self.rep * &other.rep), &self.quotient)
    }

    /// Multiplies by an arbitrary invariant polynomial.
    pub fn mul_poly(&self, f: &Poly) -> Result<Self> {
        normal_form(&(&self.rep * f), &self.quotient)
    }

    /// Coordinates in the basis returned by [`basis`].
    pub fn coordinates(&self) -> Vec<Rational> {
        self.quotient.coords_of_rep(&self.rep)
    }

    pub fn from_coordinates(q: &Arc<GradedQuotient>, coords: &[Rational]) -> Self {
        let mut rep = Poly::zero(q.nvars);
        for ((_, b), c) in q.basis_reps().zip(coords) {
            rep += &b.scale(c);
        }
        QuotientElement { quotient: q.clone(), rep }
    }

    /// Coordinates of the component of exponent degree `d` in the basis
    /// returned by [`graded_basis`] for doubled degree `2d`.
    pub fn coordinates_in_exp_degree(&self, d: usize) -> Vec<Rational> {
        self.quotient.coords_in_exp_degree(&self.rep, d)
    }

    pub fn from_exp_degree_coordinates(q: &Arc<GradedQuotient>, d: usize, coords: &[Rational]) -> Self {
        let mut rep = Poly::zero(q.nvars);
        if let Some(piece) = q.pieces.get(d) {
            for (&col, c) in piece.free.iter().zip(coords) {
                for (m, v) in piece.expand([(col, c.clone())]) {
                    rep.add_term(m, v);
                }
            }
        }
        QuotientElement { quotient: q.clone(), rep }
    }

    /// Exponent degrees of the non-zero homogeneous components.
    pub fn exp_degrees(&self) -> Vec<usize> {
        self.rep.homogeneous_components().into_keys().collect()
    }
}

/// `e_1, ..., e_n` in all variables.
pub fn coinvariant_generators(nu: &Composition) -> Vec<Poly> {
    let n = nu.size();
    let vars: Vec<usize> = (0..n).collect();
    (1..=n).map(|r| e_sym(n, &vars, r as i64)).collect()
}

/// Exponent-degree cap for generator lists: the top degree of the quotient
/// plus the largest block, and at least `n`.
fn generator_cap(mu: &Composition, nu: &Composition) -> Result<usize> {
    let n = nu.size();
    match d_mu_nu(mu, nu) {
        Ok(d) => Ok((d / 2 + nu.max_part()).max(n)),
        Err(Error::ZeroAlgebra) => Ok(n),
        Err(e) => Err(e),
    }
}

/// Generators for the ideal attached to `lam` using the blocks of `nu`
/// indexed by `indices` (which may include zero blocks).
fn tanisaki_generators_over(lam: &Partition, nu: &Composition, indices: &[i64], form: GeneratorForm, cap: usize) -> Vec<Poly> {
    let n = nu.size();
    let lam_part = |j: usize| lam.part(j);
    let nonzero: Vec<i64> = nu.support().map(|(i, _)| i).collect();
    let mut out = Vec::new();
    for m in 1..=indices.len() {
        for subset in indices.iter().copied().combinations(m) {
            let mut vars: Vec<usize> = subset.iter().flat_map(|&i| nu.block(i)).collect();
            vars.sort_unstable();
            let size: usize = subset.iter().map(|&i| nu.get(i)).sum();
            match form {
                GeneratorForm::H => {
                    let bound = (1..=m).map(lam_part).sum::<usize>() as i64 - size as i64;
                    for r in (bound + 1).max(0)..=cap as i64 {
                        let g = h_sym(n, &vars, r);
                        if !g.is_zero() {
                            out.push(g);
                        }
                    }
                }
                GeneratorForm::E => {
                    let l = nonzero.iter().filter(|i| !subset.contains(i)).count();
                    let tail: usize = n - (1..=l).map(lam_part).sum::<usize>();
                    let bound = size as i64 - tail as i64;
                    for r in (bound + 1).max(0)..=(size.min(cap) as i64) {
                        out.push(e_sym(n, &vars, r));
                    }
                }
            }
        }
    }
    out
}

fn tanisaki_generators(mu: &Composition, nu: &Composition, form: GeneratorForm) -> Result<Vec<Poly>> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(mu.size(), nu.size()));
    }
    let cap = generator_cap(mu, nu)?;
    let lam = transpose(mu);
    let indices: Vec<i64> = nu.support().map(|(i, _)| i).collect();
    let mut gens = tanisaki_generators_over(&lam, nu, &indices, form, cap);
    // a subset of zero blocks only gives e_0 = 1 once lam is longer than the support
    if form == GeneratorForm::E && lam.len() > indices.len() {
        gens.insert(0, Poly::one(nu.size()));
    }
    Ok(gens)
}

/// Generators `h_r(nu; i_1, ..., i_m)` of the Tanisaki ideal, degree-capped.
pub fn tanisaki_generators_h(mu: &Composition, nu: &Composition) -> Result<Vec<Poly>> {
    tanisaki_generators(mu, nu, GeneratorForm::H)
}

/// Generators `e_r(nu; i_1, ..., i_m)` of the Tanisaki ideal, degree-capped.
pub fn tanisaki_generators_e(mu: &Composition, nu: &Composition) -> Result<Vec<Poly>> {
    tanisaki_generators(mu, nu, GeneratorForm::E)
}

/// Same as [`tanisaki_generators_h`]/[`tanisaki_generators_e`] but letting the
/// index subsets run over every index from `lo` to `hi`, zero blocks included.
pub fn tanisaki_generators_with_zero_blocks(
    mu: &Composition,
    nu: &Composition,
    form: GeneratorForm,
    lo: i64,
    hi: i64,
) -> Result<Vec<Poly>> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(mu.size(), nu.size()));
    }
    let cap = generator_cap(mu, nu)?;
    let indices: Vec<i64> = (lo..=hi).collect();
    Ok(tanisaki_generators_over(&transpose(mu), nu, &indices, form, cap))
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum CacheKey {
    Coinvariant(Vec<usize>),
    Tanisaki(Partition, GeneratorForm, Vec<usize>),
}

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<GradedQuotient>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<GradedQuotient>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(key: CacheKey, build: impl FnOnce() -> Result<GradedQuotient>) -> Result<Arc<GradedQuotient>> {
    if let Some(q) = cache().lock().unwrap().get(&key) {
        return Ok(q.clone());
    }
    let q = Arc::new(build()?);
    Ok(cache().lock().unwrap().entry(key).or_insert(q).clone())
}

/// The partial coinvariant algebra `C_nu = P_nu / (e_1, ..., e_n)`.
pub fn coinvariant_quotient(nu: &Composition) -> Result<Arc<GradedQuotient>> {
    let parts = nu.nonzero_parts();
    cached(CacheKey::Coinvariant(parts.clone()), || {
        let base = Composition::from_parts(&parts);
        let label = format!("C_({})", parts.iter().join(","));
        GradedQuotient::terminating(label, &base, coinvariant_generators(&base), d_nu(&base) / 2)
    })
}

/// The Tanisaki quotient `C^mu_nu` presented by the chosen generator form.
pub fn tanisaki_quotient(mu: &Composition, nu: &Composition, form: GeneratorForm) -> Result<Arc<GradedQuotient>> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(mu.size(), nu.size()));
    }
    let lam = transpose(mu);
    let parts = nu.nonzero_parts();
    cached(CacheKey::Tanisaki(lam.clone(), form, parts.clone()), || {
        let base = Composition::from_parts(&parts);
        let mu_rep = lam.transpose().to_composition();
        let gens = tanisaki_generators(&mu_rep, &base, form)?;
        let label = format!("C^{lam}_({})", parts.iter().join(","));
        match d_mu_nu(&mu_rep, &base) {
            Ok(d) => GradedQuotient::terminating(label, &base, gens, d / 2),
            Err(Error::ZeroAlgebra) => {
                let q = GradedQuotient::build(label, &base, gens, 0, true)?;
                if q.dim() != 0 {
                    return Err(Error::NonTerminating { top: 0, degree: 0, dim: q.dim() });
                }
                Ok(q)
            }
            Err(e) => Err(e),
        }
    })
}

/// Basis of the component in doubled degree `d` (empty for odd `d`).
pub fn graded_basis(q: &Arc<GradedQuotient>, d: usize) -> Vec<QuotientElement> {
    if d % 2 == 1 {
        return Vec::new();
    }
    let Some(piece) = q.pieces.get(d / 2) else {
        return Vec::new();
    };
    piece
        .free
        .iter()
        .map(|&col| QuotientElement { quotient: q.clone(), rep: Poly::from_terms(q.nvars, piece.expand([(col, Rational::one())])) })
        .collect()
}

/// The full basis, ordered by degree and then by the term order.
pub fn basis(q: &Arc<GradedQuotient>) -> Vec<QuotientElement> {
    q.basis_reps().map(|(_, rep)| QuotientElement { quotient: q.clone(), rep }).collect()
}

pub fn dim(q: &GradedQuotient) -> usize {
    q.dim()
}

pub fn hilbert(q: &GradedQuotient) -> IntPolynomial {
    q.hilbert()
}

pub fn normal_form(f: &Poly, q: &Arc<GradedQuotient>) -> Result<QuotientElement> {
    Ok(QuotientElement { quotient: q.clone(), rep: q.normal_form_rep(f)? })
}

pub fn contains(f: &Poly, q: &Arc<GradedQuotient>) -> Result<bool> {
    Ok(normal_form(f, q)?.is_zero())
}

/// Whether the two generator lists generate the same ideal of `P_nu`.
pub fn ideals_equal(gens_a: &[Poly], gens_b: &[Poly], nu: &Composition) -> Result<bool> {
    let limit = gens_a.iter().chain(gens_b).map(Poly::exp_degree).max().unwrap_or(0);
    let qa = Arc::new(GradedQuotient::truncated(nu, gens_a.to_vec(), limit)?);
    let qb = Arc::new(GradedQuotient::truncated(nu, gens_b.to_vec(), limit)?);
    for g in gens_a {
        if !contains(g, &qb)? {
            return Ok(false);
        }
    }
    for g in gens_b {
        if !contains(g, &qa)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `C^mu_nu` is non-zero, i.e. the transpose of `mu` dominates `nu+`.
pub fn is_nonzero(mu: &Composition, nu: &Composition) -> Result<bool> {
    dominates(&transpose(mu), &sort_to_partition(nu))
}

/// Divides an `S_nu`-anti-invariant polynomial by `eps_nu`.
pub fn antiinv_divide(g: &Poly, nu: &Composition) -> Result<Poly> {
    if g.nvars() != nu.size() {
        return Err(Error::SizeMismatch(g.nvars(), nu.size()));
    }
    if !is_block_invariant(g, &nu.blocks(), -1) {
        return Err(Error::NotAntiInvariant);
    }
    exact_divide(g, &eps_nu(nu))
}

/// For a non-zero homogeneous `z`, searches the basis in complementary degree
/// for `y` with `y z` non-zero in the top component. A diagnostic only: a hit
/// certifies existence, a miss proves nothing beyond the basis tried.
pub fn top_multiple_search(z: &QuotientElement) -> Option<QuotientElement> {
    let q = z.quotient();
    let top = q.top_exp_degree()?;
    let degrees = z.exp_degrees();
    let [d] = degrees[..] else {
        return None;
    };
    if d > top {
        return None;
    }
    graded_basis(q, 2 * (top - d)).into_iter().find(|y| y.mul(z).map(|p| !p.is_zero()).unwrap_or(false))
}
