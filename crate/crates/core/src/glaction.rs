//! Chevalley operators `D_i`, `E_i`, `F_i` on the direct sums of the
//! algebras `C_nu` and `C^mu_nu`, realized both by antisymmetrization and
//! division (polynomial level) and through power-basis decompositions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::poly::{antisymmetrize, e_block, eps_nu, eps_pair, exact_divide, h_block, int, is_block_invariant, Poly, Rational};
use crate::quotient::{
    basis, coinvariant_quotient, contains, graded_basis, normal_form, tanisaki_generators_h, tanisaki_quotient, GeneratorForm,
    GradedQuotient, QuotientElement,
};
use crate::report::CheckReport;
use crate::shapes::{compositions_of, d_mu_nu, transpose, Composition, IndexWindow};
use crate::tableaux::{count_column_strict, kostka, kostka_foulkes, IntPolynomial};

/// `nu_prime` is `nu` with one unit moved from index `i` to `i + 1`;
/// `a = nu_i - 1`, `b = nu_{i+1}`, and `x_k` (1-based `k`) is the last
/// variable of the block `X_i` of `nu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KeySituation {
    pub i: i64,
    pub nu: Composition,
    pub nu_prime: Composition,
    pub a: usize,
    pub b: usize,
    pub k: usize,
}

impl KeySituation {
    pub fn new(nu: &Composition, i: i64) -> Result<Self> {
        let nu_prime = nu.moved_right(i).ok_or_else(|| Error::NotKeySituation(format!("{nu} has no unit at index {i}")))?;
        Ok(KeySituation { i, a: nu.get(i) - 1, b: nu.get(i + 1), k: nu.offset_before(i) + nu.get(i), nu: nu.clone(), nu_prime })
    }

    /// The key situation whose target weight is `nu_prime`.
    pub fn ending_at(nu_prime: &Composition, i: i64) -> Result<Self> {
        let nu = nu_prime.moved_left(i).ok_or_else(|| Error::NotKeySituation(format!("{nu_prime} has no unit at index {}", i + 1)))?;
        Self::new(&nu, i)
    }

    pub fn n(&self) -> usize {
        self.nu.size()
    }

    /// The common refinement: block `i` of `nu` split as `(a, 1)`.
    pub fn rho(&self) -> Composition {
        self.nu.split_at(self.i, &[self.a, 1])
    }

    pub fn x_k(&self) -> Poly {
        Poly::var(self.n(), self.k - 1)
    }

    pub fn x_k_pow(&self, r: usize) -> Poly {
        self.x_k().pow(r)
    }

    /// Size of the power basis of `C_{nu,nu'}` over the given side.
    pub fn rank_over(&self, side: Side) -> usize {
        match side {
            Side::Nu => self.a + 1,
            Side::NuPrime => self.b + 1,
        }
    }

    pub fn side(&self, side: Side) -> &Composition {
        match side {
            Side::Nu => &self.nu,
            Side::NuPrime => &self.nu_prime,
        }
    }

    pub(crate) fn e(&self, side: Side, index: i64, r: i64) -> Poly {
        e_block(self.side(side), &[index], r).expect("single index")
    }

    pub(crate) fn h(&self, side: Side, index: i64, r: i64) -> Poly {
        h_block(self.side(side), &[index], r).expect("single index")
    }
}

impl fmt::Display for KeySituation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} at i={}", self.nu, self.nu_prime, self.i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Nu,
    NuPrime,
}

/// Which family of algebras the operators act on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    /// The partial coinvariant algebras `C_nu`.
    Coinvariant,
    /// The Tanisaki quotients `C^mu_nu`.
    Tanisaki(Composition, GeneratorForm),
}

impl AlgebraKind {
    pub fn quotient(&self, nu: &Composition) -> Result<Arc<GradedQuotient>> {
        match self {
            AlgebraKind::Coinvariant => coinvariant_quotient(nu),
            AlgebraKind::Tanisaki(mu, form) => tanisaki_quotient(mu, nu, *form),
        }
    }

    fn cache_key(&self) -> (Option<crate::shapes::Partition>, Option<GeneratorForm>) {
        match self {
            AlgebraKind::Coinvariant => (None, None),
            AlgebraKind::Tanisaki(mu, form) => (Some(transpose(mu)), Some(*form)),
        }
    }
}

fn prod_lower(ks: &KeySituation) -> Poly {
    let n = ks.n();
    let xk = ks.x_k();
    let mut out = Poly::one(n);
    for j in 1..=ks.a {
        out = &out * &(&Poly::var(n, ks.k - 1 - j) - &xk);
    }
    out
}

fn prod_upper(ks: &KeySituation) -> Poly {
    let n = ks.n();
    let xk = ks.x_k();
    let mut out = Poly::one(n);
    for j in 1..=ks.b {
        out = &out * &(&xk - &Poly::var(n, ks.k - 1 + j));
    }
    out
}

/// `F_i` on `P_nu`: antisymmetrize `eps_{nu,nu'} prod_{j<=a}(x_{k-j} - x_k) f`
/// over `S_{nu'}` and divide by `eps_{nu'}`.
pub fn apply_f_poly(ks: &KeySituation, f: &Poly) -> Result<Poly> {
    if !is_block_invariant(f, &ks.nu.blocks(), 1) {
        return Err(Error::NotInvariant);
    }
    let g = &(&eps_pair(&ks.nu, &ks.nu_prime)? * &prod_lower(ks)) * f;
    exact_divide(&antisymmetrize(&g, &ks.nu_prime), &eps_nu(&ks.nu_prime))
}

/// `E_i` on `P_{nu'}`: antisymmetrize `eps_{nu,nu'} prod_{j<=b}(x_k - x_{k+j}) f`
/// over `S_nu` and divide by `eps_nu`.
pub fn apply_e_poly(ks: &KeySituation, f: &Poly) -> Result<Poly> {
    if !is_block_invariant(f, &ks.nu_prime.blocks(), 1) {
        return Err(Error::NotInvariant);
    }
    let g = &(&eps_pair(&ks.nu, &ks.nu_prime)? * &prod_upper(ks)) * f;
    exact_divide(&antisymmetrize(&g, &ks.nu), &eps_nu(&ks.nu))
}

/// Inverse of the square system expressing degree-`d` elements of the big
/// quotient as `sum_r z_r x_k^r` with `z_r` in the small one.
struct PowerSolver {
    inverse: DenseMatrix,
    unknowns: Vec<(usize, QuotientElement)>,
}

fn power_solver(small: &Arc<GradedQuotient>, big: &Arc<GradedQuotient>, xk: &Poly, range: usize, d: usize) -> Result<PowerSolver> {
    let mut unknowns = Vec::new();
    let mut columns = Vec::new();
    for r in 0..range.min(d + 1) {
        for b in graded_basis(small, 2 * (d - r)) {
            let image = normal_form(&(b.rep() * &xk.pow(r)), big)?;
            columns.push(image.coordinates_in_exp_degree(d));
            unknowns.push((r, b));
        }
    }
    let rows = big.dim_in_exp_degree(d);
    if columns.len() != rows {
        return Err(Error::NoSolution);
    }
    let inverse = DenseMatrix::from_columns(rows, &columns).inverse().ok_or(Error::NoSolution)?;
    Ok(PowerSolver { inverse, unknowns })
}

fn solve_over(
    small: &Arc<GradedQuotient>,
    range: usize,
    f: &QuotientElement,
    solver: &dyn Fn(usize) -> Result<Arc<PowerSolver>>,
) -> Result<Vec<QuotientElement>> {
    let mut out = vec![QuotientElement::zero(small); range];
    for d in f.exp_degrees() {
        let s = solver(d)?;
        let sol = s.inverse.mul_vec(&f.coordinates_in_exp_degree(d));
        for ((r, b), c) in s.unknowns.iter().zip(sol) {
            if !c.is_zero() {
                out[*r] = out[*r].add(&b.scale(&c));
            }
        }
    }
    Ok(out)
}

type SolverKey = (Composition, i64, Side, usize);

fn solver_cache() -> &'static Mutex<HashMap<SolverKey, Arc<PowerSolver>>> {
    static CACHE: OnceLock<Mutex<HashMap<SolverKey, Arc<PowerSolver>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The quotient `C_{nu,nu'}` of invariants under `S_nu ∩ S_nu'`.
pub fn pair_quotient(ks: &KeySituation) -> Result<Arc<GradedQuotient>> {
    coinvariant_quotient(&ks.rho())
}

/// Coefficients `z_r` in `C_nu` (side `Nu`, `r <= a`) or `C_nu'` (side
/// `NuPrime`, `r <= b`) with `f = sum_r z_r x_k^r` in `C_{nu,nu'}`.
pub fn decompose_over(ks: &KeySituation, f: &QuotientElement, side: Side) -> Result<Vec<QuotientElement>> {
    let small = coinvariant_quotient(ks.side(side))?;
    let big = pair_quotient(ks)?;
    if !Arc::ptr_eq(f.quotient(), &big) {
        return Err(Error::InvalidInput(format!("element of {} is not in {}", f.quotient().label(), big.label())));
    }
    let xk = ks.x_k();
    let range = ks.rank_over(side);
    let lookup = |d: usize| -> Result<Arc<PowerSolver>> {
        let key = (ks.nu.clone(), ks.i, side, d);
        if let Some(s) = solver_cache().lock().unwrap().get(&key) {
            return Ok(s.clone());
        }
        let s = Arc::new(power_solver(&small, &big, &xk, range, d)?);
        Ok(solver_cache().lock().unwrap().entry(key).or_insert(s).clone())
    };
    solve_over(&small, range, f, &lookup)
}

/// Polynomial-level decomposition of an `S_nu ∩ S_nu'`-invariant polynomial
/// over the free `P_side`-module with basis `1, x_k, ..., x_k^{range-1}`.
pub fn decompose_poly(ks: &KeySituation, f: &Poly, side: Side) -> Result<Vec<Poly>> {
    let limit = f.exp_degree();
    let small = Arc::new(GradedQuotient::truncated(ks.side(side), Vec::new(), limit)?);
    let big = Arc::new(GradedQuotient::truncated(&ks.rho(), Vec::new(), limit)?);
    let f = normal_form(f, &big).map_err(|_| Error::NoSolution)?;
    let xk = ks.x_k();
    let range = ks.rank_over(side);
    let lookup = |d: usize| power_solver(&small, &big, &xk, range, d).map(Arc::new);
    Ok(solve_over(&small, range, &f, &lookup)?.into_iter().map(|z| z.rep().clone()).collect())
}

/// Image of `x_k^r` under the module map of the `F_i` formula.
fn f_power_image(ks: &KeySituation, r: usize) -> Poly {
    let (a, b) = (ks.a as i64, ks.b as i64);
    let mut out = Poly::zero(ks.n());
    for s in 0..=a {
        let term = &ks.e(Side::NuPrime, ks.i, s) * &ks.h(Side::NuPrime, ks.i + 1, r as i64 - s + a - b);
        out = if s % 2 == 0 { &out + &term } else { &out - &term };
    }
    if a % 2 == 1 {
        -out
    } else {
        out
    }
}

/// Image of `x_k^r` under the module map of the `E_i` formula.
fn e_power_image(ks: &KeySituation, r: usize) -> Poly {
    let (a, b) = (ks.a as i64, ks.b as i64);
    let mut out = Poly::zero(ks.n());
    for s in 0..=b {
        let term = &ks.e(Side::Nu, ks.i + 1, s) * &ks.h(Side::Nu, ks.i, r as i64 - s + b - a);
        out = if s % 2 == 0 { &out + &term } else { &out - &term };
    }
    if a % 2 == 1 {
        -out
    } else {
        out
    }
}

fn sum_in(q: &Arc<GradedQuotient>, terms: impl IntoIterator<Item = (QuotientElement, Poly)>) -> Result<QuotientElement> {
    let mut total = Poly::zero(q.nvars());
    for (z, p) in terms {
        total += &(z.rep() * &p);
    }
    normal_form(&total, q)
}

/// `F_i : C_nu -> C_nu'` through the decomposition of `z` over `C_nu'`.
pub fn apply_f_oracle(ks: &KeySituation, z: &QuotientElement) -> Result<QuotientElement> {
    let lifted = normal_form(z.rep(), &pair_quotient(ks)?)?;
    let coeffs = decompose_over(ks, &lifted, Side::NuPrime)?;
    let target = coinvariant_quotient(&ks.nu_prime)?;
    sum_in(&target, coeffs.into_iter().enumerate().map(|(r, c)| (c, f_power_image(ks, r))))
}

/// `E_i : C_nu' -> C_nu` through the decomposition of `z` over `C_nu`.
pub fn apply_e_oracle(ks: &KeySituation, z: &QuotientElement) -> Result<QuotientElement> {
    let lifted = normal_form(z.rep(), &pair_quotient(ks)?)?;
    let coeffs = decompose_over(ks, &lifted, Side::Nu)?;
    let target = coinvariant_quotient(&ks.nu)?;
    sum_in(&target, coeffs.into_iter().enumerate().map(|(r, c)| (c, e_power_image(ks, r))))
}

/// `p_* : C_{nu,nu'} -> C_nu`, `x_k^r -> (-1)^a h_{r-a}(nu; i)`.
pub fn push_p(ks: &KeySituation, f: &QuotientElement) -> Result<QuotientElement> {
    let coeffs = decompose_over(ks, f, Side::Nu)?;
    let sign = if ks.a.is_multiple_of(2) { int(1) } else { int(-1) };
    let target = coinvariant_quotient(&ks.nu)?;
    sum_in(&target, coeffs.into_iter().enumerate().map(|(r, c)| (c, ks.h(Side::Nu, ks.i, r as i64 - ks.a as i64).scale(&sign))))
}

/// `p'_* : C_{nu,nu'} -> C_nu'`, `x_k^r -> h_{r-b}(nu'; i+1)`.
pub fn push_p_prime(ks: &KeySituation, f: &QuotientElement) -> Result<QuotientElement> {
    let coeffs = decompose_over(ks, f, Side::NuPrime)?;
    let target = coinvariant_quotient(&ks.nu_prime)?;
    sum_in(&target, coeffs.into_iter().enumerate().map(|(r, c)| (c, ks.h(Side::NuPrime, ks.i + 1, r as i64 - ks.b as i64))))
}

/// Push-forward to `P_nu` by antisymmetrization: `(1/eps_nu) (1/|S_nu|) sum sgn(w) w(eps_{nu,nu'} f)`.
pub fn push_p_antisymmetric(ks: &KeySituation, f: &Poly) -> Result<Poly> {
    let g = &eps_pair(&ks.nu, &ks.nu_prime)? * f;
    exact_divide(&antisymmetrize(&g, &ks.nu), &eps_nu(&ks.nu))
}

/// Push-forward to `P_nu'` by antisymmetrization over `S_nu'`.
pub fn push_p_prime_antisymmetric(ks: &KeySituation, f: &Poly) -> Result<Poly> {
    let g = &eps_pair(&ks.nu, &ks.nu_prime)? * f;
    exact_divide(&antisymmetrize(&g, &ks.nu_prime), &eps_nu(&ks.nu_prime))
}

/// Multiplication by the scalar `nu_i`.
pub fn apply_d(i: i64, nu: &Composition, z: &QuotientElement) -> QuotientElement {
    z.scale(&int(nu.get(i) as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChevalleyOp {
    E(i64),
    F(i64),
    D(i64),
}

impl fmt::Display for ChevalleyOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChevalleyOp::E(i) => write!(f, "E_{i}"),
            ChevalleyOp::F(i) => write!(f, "F_{i}"),
            ChevalleyOp::D(i) => write!(f, "D_{i}"),
        }
    }
}

impl std::str::FromStr for ChevalleyOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse operator {s:?}"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let index: i64 = rest.strip_prefix('_').unwrap_or(rest).parse().map_err(|_| bad())?;
        match head {
            'E' | 'e' => Ok(ChevalleyOp::E(index)),
            'F' | 'f' => Ok(ChevalleyOp::F(index)),
            'D' | 'd' => Ok(ChevalleyOp::D(index)),
            _ => Err(bad()),
        }
    }
}

/// Parses a whitespace- or comma-separated word such as `"F_2 F_1 E_2"`.
pub fn parse_op_word(s: &str) -> Result<Vec<ChevalleyOp>> {
    s.split(|c: char| c.is_whitespace() || c == ',' || c == '*').filter(|t| !t.is_empty()).map(str::parse).collect()
}

impl ChevalleyOp {
    /// The weight reached from `nu`, or `None` if the operator kills it.
    pub fn target(&self, nu: &Composition) -> Option<Composition> {
        match *self {
            ChevalleyOp::E(i) => nu.moved_left(i),
            ChevalleyOp::F(i) => nu.moved_right(i),
            ChevalleyOp::D(_) => Some(nu.clone()),
        }
    }

    fn check_window(&self, window: &IndexWindow) -> Result<()> {
        let i = match *self {
            ChevalleyOp::E(i) | ChevalleyOp::F(i) => i,
            ChevalleyOp::D(_) => return Ok(()),
        };
        for index in [i, i + 1] {
            if !window.contains(index) {
                return Err(Error::WindowOverflow { index, lo: window.lo, hi: window.hi });
            }
        }
        Ok(())
    }

    /// Applies the operator to an element of the algebra at weight `nu`.
    pub fn apply(&self, kind: &AlgebraKind, nu: &Composition, z: &QuotientElement) -> Result<Option<(Composition, QuotientElement)>> {
        match *self {
            ChevalleyOp::D(i) => Ok(Some((nu.clone(), apply_d(i, nu, z)))),
            ChevalleyOp::F(i) => {
                if nu.get(i) == 0 {
                    return Ok(None);
                }
                let ks = KeySituation::new(nu, i)?;
                let image = apply_f_poly(&ks, z.rep())?;
                Ok(Some((ks.nu_prime.clone(), normal_form(&image, &kind.quotient(&ks.nu_prime)?)?)))
            }
            ChevalleyOp::E(i) => {
                if nu.get(i + 1) == 0 {
                    return Ok(None);
                }
                let ks = KeySituation::ending_at(nu, i)?;
                let image = apply_e_poly(&ks, z.rep())?;
                Ok(Some((ks.nu.clone(), normal_form(&image, &kind.quotient(&ks.nu)?)?)))
            }
        }
    }
}

/// An element of the direct sum over all weights of `n` inside a window.
#[derive(Clone, Debug)]
pub struct WeightFamily {
    pub n: usize,
    pub window: IndexWindow,
    pub kind: AlgebraKind,
    components: BTreeMap<Composition, QuotientElement>,
}

impl WeightFamily {
    pub fn new(n: usize, window: IndexWindow, kind: AlgebraKind) -> Self {
        WeightFamily { n, window, kind, components: BTreeMap::new() }
    }

    /// Adds `z` to the component at `nu`; `z` must already be reduced in that algebra.
    pub fn insert(&mut self, nu: &Composition, z: QuotientElement) -> Result<()> {
        if nu.size() != self.n {
            return Err(Error::SizeMismatch(nu.size(), self.n));
        }
        if !self.window.contains_composition(nu) {
            let index = if self.window.contains(nu.lo()) { nu.hi() } else { nu.lo() };
            return Err(Error::WindowOverflow { index, lo: self.window.lo, hi: self.window.hi });
        }
        let sum = match self.components.get(nu) {
            Some(old) => old.add(&z),
            None => z,
        };
        if sum.is_zero() {
            self.components.remove(nu);
        } else {
            self.components.insert(nu.clone(), sum);
        }
        Ok(())
    }

    /// Reduces `f` in the algebra at `nu` and adds it.
    pub fn insert_poly(&mut self, nu: &Composition, f: &Poly) -> Result<()> {
        let z = normal_form(f, &self.kind.quotient(nu)?)?;
        self.insert(nu, z)
    }

    pub fn components(&self) -> &BTreeMap<Composition, QuotientElement> {
        &self.components
    }

    pub fn get(&self, nu: &Composition) -> Option<&QuotientElement> {
        self.components.get(nu)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    fn apply_op(&self, op: ChevalleyOp) -> Result<WeightFamily> {
        op.check_window(&self.window)?;
        let mut out = WeightFamily::new(self.n, self.window, self.kind.clone());
        for (nu, z) in &self.components {
            if let Some((target, image)) = op.apply(&self.kind, nu, z)? {
                out.insert(&target, image)?;
            }
        }
        Ok(out)
    }
}

/// Every key situation `(nu, i)` with `nu` a composition of `n` inside the
/// window and both `i`, `i + 1` in the window.
pub fn key_situations(n: usize, window: IndexWindow) -> Vec<KeySituation> {
    let mut out = Vec::new();
    for nu in compositions_of(n, window) {
        for i in window.chevalley_indices() {
            if nu.get(i) > 0 {
                out.push(KeySituation::new(&nu, i).expect("non-zero part"));
            }
        }
    }
    out
}

/// Applies a word in product notation: the rightmost operator acts first.
pub fn apply_operator_family(word: &[ChevalleyOp], wf: &WeightFamily) -> Result<WeightFamily> {
    let mut cur = wf.clone();
    for op in word.iter().rev() {
        cur = cur.apply_op(*op)?;
    }
    Ok(cur)
}

type MatrixKey = (Option<crate::shapes::Partition>, Option<GeneratorForm>, ChevalleyOp, Composition);
type MatrixCache = Mutex<HashMap<MatrixKey, Option<(Composition, Arc<DenseMatrix>)>>>;

fn matrix_cache() -> &'static MatrixCache {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Matrix of an operator from the basis at `nu` to the basis at its target weight.
pub fn operator_matrix(kind: &AlgebraKind, op: ChevalleyOp, nu: &Composition) -> Result<Option<(Composition, Arc<DenseMatrix>)>> {
    let (lam, form) = kind.cache_key();
    let key = (lam, form, op, nu.clone());
    if let Some(m) = matrix_cache().lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let value = match op.target(nu) {
        None => None,
        Some(target) => {
            let source = kind.quotient(nu)?;
            let rows = kind.quotient(&target)?.dim();
            let mut columns = Vec::new();
            for z in basis(&source) {
                let image = op.apply(kind, nu, &z)?.map(|(_, w)| w.coordinates()).unwrap_or_else(|| vec![Rational::zero(); rows]);
                columns.push(image);
            }
            Some((target, Arc::new(DenseMatrix::from_columns(rows, &columns))))
        }
    };
    Ok(matrix_cache().lock().unwrap().entry(key).or_insert(value).clone())
}

/// Net weight after a word, `None` when some part would become negative.
fn net_weight(word: &[ChevalleyOp], nu: &Composition) -> Option<Composition> {
    let mut parts: BTreeMap<i64, i64> = nu.support().map(|(i, p)| (i, p as i64)).collect();
    for op in word {
        match *op {
            ChevalleyOp::E(i) => {
                *parts.entry(i).or_default() += 1;
                *parts.entry(i + 1).or_default() -= 1;
            }
            ChevalleyOp::F(i) => {
                *parts.entry(i).or_default() -= 1;
                *parts.entry(i + 1).or_default() += 1;
            }
            ChevalleyOp::D(_) => {}
        }
    }
    if parts.values().any(|&p| p < 0) {
        return None;
    }
    let lo = *parts.keys().next()?;
    let hi = *parts.keys().next_back()?;
    Some(Composition::new(lo, (lo..=hi).map(|i| parts.get(&i).copied().unwrap_or(0) as usize).collect()))
}

/// Matrix of a word (rightmost operator first) at `nu`, or `None` when the
/// net weight is not a composition.
pub fn word_matrix(kind: &AlgebraKind, word: &[ChevalleyOp], nu: &Composition) -> Result<Option<(Composition, DenseMatrix)>> {
    let Some(net) = net_weight(word, nu) else {
        return Ok(None);
    };
    let source_dim = kind.quotient(nu)?.dim();
    let mut cur = DenseMatrix::identity(source_dim);
    let mut weight = nu.clone();
    for op in word.iter().rev() {
        match operator_matrix(kind, *op, &weight)? {
            None => {
                let rows = kind.quotient(&net)?.dim();
                return Ok(Some((net, DenseMatrix::zeros(rows, source_dim))));
            }
            Some((target, m)) => {
                cur = m.mul(&cur);
                weight = target;
            }
        }
    }
    Ok(Some((net, cur)))
}

fn check_linear_relation(
    report: &mut CheckReport,
    kind: &AlgebraKind,
    nu: &Composition,
    name: &str,
    label: String,
    terms: &[(i64, Vec<ChevalleyOp>)],
) {
    let at = format!("{nu}, {label}");
    let mut total: Option<DenseMatrix> = None;
    for (c, word) in terms {
        match word_matrix(kind, word, nu) {
            Err(e) => return report.record_error(name, &at, &e),
            Ok(None) => return report.record(name, &at, true, ""),
            Ok(Some((_, m))) => {
                let m = m.scale(&int(*c));
                total = Some(match total {
                    None => m,
                    Some(t) => t.add(&m),
                });
            }
        }
    }
    let ok = total.is_none_or(|t| t.is_zero());
    report.record(name, &at, ok, "");
}

fn commutator(x: ChevalleyOp, y: ChevalleyOp) -> Vec<(i64, Vec<ChevalleyOp>)> {
    vec![(1, vec![x, y]), (-1, vec![y, x])]
}

fn relations_at(kind: &AlgebraKind, nu: &Composition, window: &IndexWindow) -> CheckReport {
    use ChevalleyOp::{D, E, F};
    let mut report = CheckReport::default();
    let chev: Vec<i64> = window.chevalley_indices().collect();
    for &i in &chev {
        for &j in &chev {
            let label = format!("i={i}, j={j}");
            let mut terms = commutator(E(i), F(j));
            if i == j {
                terms.push((-1, vec![D(i)]));
                terms.push((1, vec![D(i + 1)]));
            }
            check_linear_relation(&mut report, kind, nu, "[E_i,F_j] = delta_ij (D_i - D_i+1)", label.clone(), &terms);
            if (i - j).abs() >= 2 && i < j {
                check_linear_relation(&mut report, kind, nu, "[E_i,E_j] = 0 for |i-j| >= 2", label.clone(), &commutator(E(i), E(j)));
                check_linear_relation(&mut report, kind, nu, "[F_i,F_j] = 0 for |i-j| >= 2", label.clone(), &commutator(F(i), F(j)));
            }
            if (i - j).abs() == 1 {
                for (name, x, y) in [("Serre relation for E", E(i), E(j)), ("Serre relation for F", F(i), F(j))] {
                    let terms = vec![(1, vec![x, x, y]), (-2, vec![x, y, x]), (1, vec![y, x, x])];
                    check_linear_relation(&mut report, kind, nu, name, label.clone(), &terms);
                }
            }
        }
    }
    for i in window.lo..=window.hi {
        for &j in &chev {
            let label = format!("i={i}, j={j}");
            let c = i64::from(i == j) - i64::from(i == j + 1);
            let mut terms = commutator(D(i), E(j));
            terms.push((-c, vec![E(j)]));
            check_linear_relation(&mut report, kind, nu, "[D_i,E_j] = (delta_ij - delta_i,j+1) E_j", label.clone(), &terms);
            let mut terms = commutator(D(i), F(j));
            terms.push((c, vec![F(j)]));
            check_linear_relation(&mut report, kind, nu, "[D_i,F_j] = -(delta_ij - delta_i,j+1) F_j", label, &terms);
        }
    }
    report
}

/// Polynomial-level `F_i`, `E_i` agree with the module-basis formulas on
/// every basis element of every key situation of `n` in the window.
pub fn oracle_equivalence_check(n: usize, window: IndexWindow) -> CheckReport {
    key_situations(n, window)
        .par_iter()
        .map(|ks| {
            let mut report = CheckReport::default();
            let run = |report: &mut CheckReport| -> Result<()> {
                let source = coinvariant_quotient(&ks.nu)?;
                let target = coinvariant_quotient(&ks.nu_prime)?;
                for z in basis(&source) {
                    let ok = normal_form(&apply_f_poly(ks, z.rep())?, &target)? == apply_f_oracle(ks, &z)?;
                    report.record(
                        "F by antisymmetrization equals the F formula",
                        ks,
                        ok,
                        if ok { String::new() } else { format!("on {}", z.rep()) },
                    );
                }
                for z in basis(&target) {
                    let ok = normal_form(&apply_e_poly(ks, z.rep())?, &source)? == apply_e_oracle(ks, &z)?;
                    report.record(
                        "E by antisymmetrization equals the E formula",
                        ks,
                        ok,
                        if ok { String::new() } else { format!("on {}", z.rep()) },
                    );
                }
                Ok(())
            };
            if let Err(e) = run(&mut report) {
                report.record_error("operator formulas", ks, &e);
            }
            report
        })
        .collect()
}

/// Checks the commutation and Serre relations on every weight of `n` in the window.
pub fn relation_report(n: usize, window: IndexWindow, mu: Option<&Composition>) -> CheckReport {
    let kind = match mu {
        None => AlgebraKind::Coinvariant,
        Some(mu) => AlgebraKind::Tanisaki(mu.clone(), GeneratorForm::H),
    };
    compositions_of(n, window).par_iter().map(|nu| relations_at(&kind, nu, &window)).collect()
}

fn invariance_at(mu: &Composition, nu: &Composition, window: &IndexWindow) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let gens = tanisaki_generators_h(mu, nu)?;
    let plain = basis(&coinvariant_quotient(nu)?);
    let mut cases: Vec<(KeySituation, bool)> = Vec::new();
    for i in window.chevalley_indices() {
        if nu.get(i) > 0 {
            cases.push((KeySituation::new(nu, i)?, true));
        }
        if nu.get(i + 1) > 0 {
            cases.push((KeySituation::ending_at(nu, i)?, false));
        }
    }
    for (ks, lowering) in cases {
        let (target, shift) =
            if lowering { (ks.nu_prime.clone(), ks.a as i64 - ks.b as i64) } else { (ks.nu.clone(), ks.b as i64 - ks.a as i64) };
        let name = if lowering { "F preserves the ideal" } else { "E preserves the ideal" };
        let at = format!("{mu}: {ks}");
        let q = tanisaki_quotient(mu, &target, GeneratorForm::H)?;
        let top = q.top_exp_degree().map(|t| t as i64).unwrap_or(-1);
        for g in &gens {
            for b in &plain {
                let f = g * b.rep();
                if f.exp_degree() as i64 + shift > top {
                    report.record(name, &at, true, "");
                    continue;
                }
                let image = if lowering { apply_f_poly(&ks, &f) } else { apply_e_poly(&ks, &f) };
                match image.and_then(|img| contains(&img, &q)) {
                    Ok(ok) => report.record(name, &at, ok, if ok { String::new() } else { format!("image of {g} * {} escapes", b.rep()) }),
                    Err(e) => report.record_error(name, &at, &e),
                }
            }
        }
    }
    Ok(report)
}

/// Checks that `E_i` and `F_i` map `I^mu_nu` into `I^mu` of the target weight:
/// every product of an ideal generator with a basis representative of `C_nu`
/// is pushed through the polynomial-level operator and tested for membership.
pub fn ideal_invariance_check(mu: &Composition, window: IndexWindow) -> CheckReport {
    compositions_of(mu.size(), window)
        .par_iter()
        .map(|nu| {
            invariance_at(mu, nu, &window).unwrap_or_else(|e| {
                let mut r = CheckReport::default();
                r.record_error("ideal invariance", nu, &e);
                r
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightRow {
    pub nu: Composition,
    pub dim: usize,
    pub column_strict: u64,
    /// Top non-zero degree (doubled grading), if the algebra is non-zero.
    pub top_degree: Option<usize>,
    pub expected_top_degree: Option<usize>,
    pub top_dim: usize,
    pub kostka: u64,
}

impl WeightRow {
    pub fn ok(&self) -> bool {
        self.dim as u64 == self.column_strict && self.top_degree == self.expected_top_degree && self.top_dim as u64 == self.kostka
    }
}

/// Dimension, top degree and top dimension of `C^mu_nu` next to their
/// tableau-count predictions, for every weight in the window.
pub fn weight_dim_report(mu: &Composition, window: IndexWindow) -> Result<Vec<WeightRow>> {
    let lam = transpose(mu);
    compositions_of(mu.size(), window)
        .par_iter()
        .map(|nu| {
            let q = tanisaki_quotient(mu, nu, GeneratorForm::H)?;
            let top = q.top_exp_degree();
            Ok(WeightRow {
                nu: nu.clone(),
                dim: q.dim(),
                column_strict: count_column_strict(&lam, nu),
                top_degree: top.map(|t| 2 * t),
                expected_top_degree: d_mu_nu(mu, nu).ok(),
                top_dim: top.map_or(0, |t| q.dim_in_exp_degree(t)),
                kostka: kostka(&lam, nu),
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertComparison {
    pub mu: Composition,
    pub nu: Composition,
    pub computed: IntPolynomial,
    pub predicted: IntPolynomial,
}

impl HilbertComparison {
    pub fn ok(&self) -> bool {
        self.computed == self.predicted
    }
}

/// `t^{d} sum_kappa K_{kappa,nu} K_{kappa',mu}(t^{-2})` next to the computed Hilbert series.
pub fn hilbert_prediction(mu: &Composition, nu: &Composition) -> Result<IntPolynomial> {
    let d = d_mu_nu(mu, nu)?;
    let mut out = IntPolynomial::zero();
    for kappa in crate::shapes::Partition::all(nu.size()) {
        let k = kostka(&kappa, nu) as i64;
        if k == 0 {
            continue;
        }
        let kf = kostka_foulkes(&kappa.transpose(), mu);
        for (j, &c) in kf.coeffs().iter().enumerate() {
            if c != 0 {
                let degree = d as i64 - 2 * j as i64;
                if degree < 0 {
                    return Err(Error::InvalidInput(format!("negative degree in the prediction for {mu}, {nu}")));
                }
                out.add_term(degree as usize, k * c);
            }
        }
    }
    Ok(out)
}

pub fn hilbert_identity_check(mu: &Composition, nu: &Composition) -> Result<HilbertComparison> {
    let q = tanisaki_quotient(mu, nu, GeneratorForm::H)?;
    Ok(HilbertComparison { mu: mu.clone(), nu: nu.clone(), computed: q.hilbert(), predicted: hilbert_prediction(mu, nu)? })
}

/// `F_i` on `C_nu` and `C^mu_nu` through the quotient map agree: reducing
/// `F_i(f)` modulo `I^mu` equals applying the `C^mu` operator to the reduction of `f`.
pub fn quotient_map_intertwines(ks: &KeySituation, mu: &Composition, f: &Poly) -> Result<bool> {
    let kind = AlgebraKind::Tanisaki(mu.clone(), GeneratorForm::H);
    let target = kind.quotient(&ks.nu_prime)?;
    let direct = normal_form(&apply_f_poly(ks, f)?, &target)?;
    let reduced = normal_form(f, &kind.quotient(&ks.nu)?)?;
    let via = ChevalleyOp::F(ks.i).apply(&kind, &ks.nu, &reduced)?.map(|(_, z)| z);
    Ok(via.map_or(direct.is_zero(), |z| z == direct))
}

/// Lifts a normal form by an ideal element before applying `F_i`; the
/// result must not change.
pub fn lift_independent(ks: &KeySituation, z: &QuotientElement, ideal_element: &Poly) -> Result<bool> {
    let target = coinvariant_quotient(&ks.nu_prime)?;
    let a = normal_form(&apply_f_poly(ks, z.rep())?, &target)?;
    let b = normal_form(&apply_f_poly(ks, &(z.rep() + ideal_element))?, &target)?;
    Ok(a == b)
}

/// Identity matrix helper for callers assembling operator words.
pub fn identity_on(kind: &AlgebraKind, nu: &Composition) -> Result<DenseMatrix> {
    Ok(DenseMatrix::identity(kind.quotient(nu)?.dim()))
}

pub fn one_at(kind: &AlgebraKind, nu: &Composition) -> Result<QuotientElement> {
    Ok(QuotientElement::one(&kind.quotient(nu)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn comp(lo: i64, parts: &[usize]) -> Composition {
        Composition::new(lo, parts.to_vec())
    }

    fn window(lo: i64, hi: i64) -> IndexWindow {
        IndexWindow::new(lo, hi).unwrap()
    }

    #[test]
    fn f_of_one_on_a_single_block_of_two() {
        let ks = KeySituation::new(&comp(1, &[2]), 1).unwrap();
        assert_eq!((ks.a, ks.b, ks.k), (1, 0, 2));
        let img = apply_f_poly(&ks, &Poly::one(2)).unwrap();
        assert_eq!(img, &Poly::var(2, 0) - &Poly::var(2, 1));
        let z = QuotientElement::one(&coinvariant_quotient(&ks.nu).unwrap());
        let oracle = apply_f_oracle(&ks, &z).unwrap();
        let expected = normal_form(&Poly::var(2, 0).scale(&int(2)), &coinvariant_quotient(&ks.nu_prime).unwrap()).unwrap();
        assert_eq!(oracle, expected);
    }

    #[test]
    fn one_variable_operators_are_identity() {
        let ks = KeySituation::new(&comp(3, &[1]), 3).unwrap();
        assert_eq!(ks.nu_prime, comp(4, &[1]));
        assert_eq!(apply_f_poly(&ks, &Poly::one(1)).unwrap(), Poly::one(1));
        assert_eq!(apply_e_poly(&ks, &Poly::one(1)).unwrap(), Poly::one(1));
    }

    #[test]
    fn operators_vanish_outside_key_situations() {
        let kind = AlgebraKind::Coinvariant;
        let nu = comp(1, &[2]);
        let one = one_at(&kind, &nu).unwrap();
        assert!(ChevalleyOp::F(2).apply(&kind, &nu, &one).unwrap().is_none());
        assert!(ChevalleyOp::E(1).apply(&kind, &nu, &one).unwrap().is_none());
    }

    #[test]
    fn decompose_examples() {
        let ks = KeySituation::new(&comp(1, &[2]), 1).unwrap();
        let x1 = Poly::var(2, 0);
        let coeffs = decompose_poly(&ks, &x1, Side::Nu).unwrap();
        assert_eq!(coeffs, vec![&x1 + &Poly::var(2, 1), Poly::constant(2, int(-1))]);
        assert_eq!(decompose_poly(&ks, &Poly::one(2), Side::Nu).unwrap(), vec![Poly::one(2), Poly::zero(2)]);

        let ks = KeySituation::new(&comp(1, &[1, 1]), 1).unwrap();
        let coeffs = decompose_poly(&ks, &ks.x_k(), Side::NuPrime).unwrap();
        assert_eq!(coeffs, vec![Poly::zero(2), Poly::one(2)]);
    }

    #[test]
    fn push_forward_examples() {
        let ks = KeySituation::new(&comp(1, &[1, 2, 1]), 2).unwrap();
        let pair = pair_quotient(&ks).unwrap();
        let kernel = exact_divide(&eps_nu(&ks.nu), &eps_pair(&ks.nu, &ks.nu_prime).unwrap()).unwrap();
        let pushed = push_p(&ks, &normal_form(&kernel, &pair).unwrap()).unwrap();
        assert_eq!(pushed, QuotientElement::one(&coinvariant_quotient(&ks.nu).unwrap()));
        for r in 0..ks.a {
            assert!(push_p(&ks, &normal_form(&ks.x_k_pow(r), &pair).unwrap()).unwrap().is_zero());
        }
        let top = push_p_prime(&ks, &normal_form(&ks.x_k_pow(ks.b), &pair).unwrap()).unwrap();
        assert_eq!(top, QuotientElement::one(&coinvariant_quotient(&ks.nu_prime).unwrap()));
    }

    #[test]
    fn push_forwards_match_antisymmetrization() {
        for ks in key_situations(3, window(1, 3)) {
            let pair = pair_quotient(&ks).unwrap();
            let small = coinvariant_quotient(&ks.nu).unwrap();
            let small_prime = coinvariant_quotient(&ks.nu_prime).unwrap();
            for b in basis(&pair) {
                let direct = normal_form(&push_p_antisymmetric(&ks, b.rep()).unwrap(), &small).unwrap();
                assert_eq!(push_p(&ks, &b).unwrap(), direct, "{ks}: {}", b.rep());
                let direct = normal_form(&push_p_prime_antisymmetric(&ks, b.rep()).unwrap(), &small_prime).unwrap();
                assert_eq!(push_p_prime(&ks, &b).unwrap(), direct, "{ks}: {}", b.rep());
            }
        }
    }

    #[test]
    fn oracle_equivalence_up_to_three() {
        for n in 1..=3 {
            for ks in key_situations(n, window(0, 3)) {
                let source = coinvariant_quotient(&ks.nu).unwrap();
                let target = coinvariant_quotient(&ks.nu_prime).unwrap();
                for z in basis(&source) {
                    let poly = normal_form(&apply_f_poly(&ks, z.rep()).unwrap(), &target).unwrap();
                    assert_eq!(poly, apply_f_oracle(&ks, &z).unwrap(), "F at {ks} on {}", z.rep());
                }
                for z in basis(&target) {
                    let poly = normal_form(&apply_e_poly(&ks, z.rep()).unwrap(), &source).unwrap();
                    assert_eq!(poly, apply_e_oracle(&ks, &z).unwrap(), "E at {ks} on {}", z.rep());
                }
            }
        }
    }

    #[test]
    fn operators_shift_degree_by_weight() {
        for ks in key_situations(4, window(1, 3)) {
            let source = coinvariant_quotient(&ks.nu).unwrap();
            let shift = ks.a as i64 - ks.b as i64;
            for z in basis(&source) {
                let img = apply_f_poly(&ks, z.rep()).unwrap();
                if !img.is_zero() {
                    assert!(img.is_homogeneous());
                    assert_eq!(img.exp_degree() as i64, z.rep().exp_degree() as i64 + shift);
                }
            }
            // d_nu - 2r maps to d_nu' - 2r
            let (d, d_prime) = (crate::shapes::d_nu(&ks.nu) as i64, crate::shapes::d_nu(&ks.nu_prime) as i64);
            assert_eq!(d_prime - d, 2 * shift);
        }
    }

    #[test]
    fn lifts_do_not_matter() {
        for ks in key_situations(3, window(1, 3)) {
            let source = coinvariant_quotient(&ks.nu).unwrap();
            for z in basis(&source) {
                for g in crate::quotient::coinvariant_generators(&ks.nu) {
                    assert!(lift_independent(&ks, &z, &g).unwrap());
                    assert!(lift_independent(&ks, &z, &(&g * z.rep())).unwrap());
                }
            }
        }
    }

    #[test]
    fn quotient_maps_intertwine() {
        let mu = comp(1, &[1, 2, 1]);
        for ks in key_situations(4, window(1, 3)) {
            if crate::quotient::is_nonzero(&mu, &ks.nu).unwrap() {
                for z in basis(&coinvariant_quotient(&ks.nu).unwrap()) {
                    assert!(quotient_map_intertwines(&ks, &mu, z.rep()).unwrap(), "{ks}");
                }
            }
        }
    }

    #[test]
    fn d_is_scalar() {
        let nu = comp(1, &[1, 2, 1]);
        let q = coinvariant_quotient(&nu).unwrap();
        let one = QuotientElement::one(&q);
        assert_eq!(apply_d(2, &nu, &one), one.scale(&int(2)));
        assert!(apply_d(7, &nu, &one).is_zero());
        assert!(apply_d(1, &nu, &QuotientElement::zero(&q)).is_zero());
        assert_eq!(apply_d(1, &nu, &one.scale(&rat(1, 2))), one.scale(&rat(1, 2)));
    }

    #[test]
    fn op_parsing() {
        assert_eq!(parse_op_word("F_2 F1, E_2").unwrap(), vec![ChevalleyOp::F(2), ChevalleyOp::F(1), ChevalleyOp::E(2)]);
        assert_eq!(parse_op_word("D_-1").unwrap(), vec![ChevalleyOp::D(-1)]);
        assert!(parse_op_word("G_1").is_err());
        assert_eq!(ChevalleyOp::E(3).to_string(), "E_3");
    }

    #[test]
    fn family_word_application() {
        let w = window(1, 2);
        let nu = comp(1, &[2]);
        let mut wf = WeightFamily::new(2, w, AlgebraKind::Coinvariant);
        wf.insert_poly(&nu, &Poly::one(2)).unwrap();
        let same = apply_operator_family(&[], &wf).unwrap();
        assert_eq!(same.components(), wf.components());
        let down = apply_operator_family(&[ChevalleyOp::F(1)], &wf).unwrap();
        let (target, z) = down.components().iter().next().unwrap();
        assert_eq!(target, &comp(1, &[1, 1]));
        assert_eq!(z.rep(), &Poly::var(2, 0).scale(&int(2)));
        // [E_1, F_1] acts by nu_1 - nu_2 = 2
        let ef = apply_operator_family(&[ChevalleyOp::E(1), ChevalleyOp::F(1)], &wf).unwrap();
        let fe = apply_operator_family(&[ChevalleyOp::F(1), ChevalleyOp::E(1)], &wf).unwrap();
        assert!(fe.is_zero());
        assert_eq!(ef.get(&nu).unwrap(), &wf.get(&nu).unwrap().scale(&int(2)));
        assert!(matches!(apply_operator_family(&[ChevalleyOp::F(2)], &wf), Err(Error::WindowOverflow { index: 3, .. })));
    }

    #[test]
    fn relations_for_small_n() {
        for n in 1..=2 {
            let report = relation_report(n, window(0, 2), None);
            assert!(report.passed(), "{:?}", report.failures);
            assert!(report.checks() > 0);
        }
        let report = relation_report(2, window(0, 2), Some(&comp(1, &[2])));
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn relations_for_three() {
        let report = relation_report(3, window(1, 3), None);
        assert!(report.passed(), "{:?}", report.failures);
        let report = relation_report(3, window(1, 3), Some(&comp(1, &[2, 1])));
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn ideal_invariance_examples() {
        assert!(ideal_invariance_check(&comp(1, &[1, 1, 1]), window(1, 3)).passed());
        let report = ideal_invariance_check(&comp(1, &[1, 2, 1]), window(1, 3));
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.checks() > 0);
    }

    #[test]
    fn weight_dims_for_the_small_example() {
        let mu = comp(1, &[1, 2, 1]);
        let rows = weight_dim_report(&mu, window(1, 3)).unwrap();
        let row = rows.iter().find(|r| r.nu == mu).unwrap();
        assert_eq!((row.dim, row.column_strict, row.top_dim, row.kostka), (5, 5, 2, 2));
        assert!(rows.iter().all(WeightRow::ok));
        for row in weight_dim_report(&comp(1, &[3]), window(1, 3)).unwrap() {
            assert!(row.dim <= 1 && row.ok());
        }
    }

    #[test]
    fn hilbert_identity_small_example() {
        let mu = comp(1, &[1, 2, 1]);
        let cmp = hilbert_identity_check(&mu, &mu).unwrap();
        assert_eq!(cmp.computed, IntPolynomial::new(vec![1, 0, 2, 0, 2]));
        assert!(cmp.ok());
        let reg = comp(1, &[1, 1, 1]);
        let cmp = hilbert_identity_check(&reg, &reg).unwrap();
        assert_eq!(cmp.computed, IntPolynomial::new(vec![1, 0, 2, 0, 2, 0, 1]));
        assert!(cmp.ok());
    }

    #[test]
    fn extremal_weights_are_lines_killed_by_raising() {
        for mu in [comp(1, &[1, 2, 1]), comp(1, &[2, 2]), comp(1, &[1, 1, 2])] {
            let kind = AlgebraKind::Tanisaki(mu.clone(), GeneratorForm::H);
            let lam = transpose(&mu);
            let gamma = Composition::new(1, lam.parts().to_vec());
            let w = window(1, 4);
            assert_eq!(kind.quotient(&gamma).unwrap().dim(), 1);
            let one = one_at(&kind, &gamma).unwrap();
            for i in w.chevalley_indices() {
                if let Some((_, z)) = ChevalleyOp::E(i).apply(&kind, &gamma, &one).unwrap() {
                    assert!(z.is_zero(), "E_{i} on {gamma} for {mu}");
                }
            }
        }
    }
}
