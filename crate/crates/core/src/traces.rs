//! Units, counits and trace maps of the two adjunctions between tensoring
//! with `C_{nu',nu}` and with `C_{nu,nu'}`, evaluated on regular modules.
//!
//! Both bimodules are the ring `C_{nu,nu'}`. A tensor over `C_nu` is kept as
//! `sum x_k^p (x) x_k^s c_ps` with `p <= a`, `s <= b` and `c_ps` in `C_nu'`;
//! a tensor over `C_nu'` as the mirror with `p <= b`, `s <= a`, `c_ps` in `C_nu`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::glaction::{apply_e_oracle, apply_f_oracle, decompose_over, key_situations, pair_quotient, KeySituation, Side};
use crate::poly::{int, Poly, Rational};
use crate::quotient::{basis, coinvariant_quotient, normal_form, GradedQuotient, QuotientElement};
use crate::report::CheckReport;
use crate::shapes::IndexWindow;

fn other(side: Side) -> Side {
    match side {
        Side::Nu => Side::NuPrime,
        Side::NuPrime => Side::Nu,
    }
}

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn ring(ks: &KeySituation, side: Side) -> Result<Arc<GradedQuotient>> {
    coinvariant_quotient(ks.side(side))
}

fn in_pair(ks: &KeySituation, f: &Poly) -> Result<QuotientElement> {
    normal_form(f, &pair_quotient(ks)?)
}

/// An element of `C_{nu,nu'} (x) C_{nu,nu'}` with the tensor taken over
/// the ring on side `middle`, in canonical power-basis form.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerBasisTensor {
    pub ks: KeySituation,
    pub middle: Side,
    coeffs: Vec<Vec<QuotientElement>>,
}

impl PowerBasisTensor {
    pub fn zero(ks: &KeySituation, middle: Side) -> Result<Self> {
        let outer = ring(ks, other(middle))?;
        let row = vec![QuotientElement::zero(&outer); ks.rank_over(other(middle))];
        Ok(PowerBasisTensor { ks: ks.clone(), middle, coeffs: vec![row; ks.rank_over(middle)] })
    }

    /// Canonical form of `sum u_j (x) v_j`.
    pub fn from_pairs(ks: &KeySituation, middle: Side, pairs: &[(Poly, Poly)]) -> Result<Self> {
        let mut t = Self::zero(ks, middle)?;
        for (u, v) in pairs {
            t.add_pair(u, v)?;
        }
        Ok(t)
    }

    /// Adds `u (x) v`: the coefficients of `u` over the middle ring are moved
    /// into the right factor, which is then expanded over the outer ring.
    pub fn add_pair(&mut self, u: &Poly, v: &Poly) -> Result<()> {
        let ks = self.ks.clone();
        let left = decompose_over(&ks, &in_pair(&ks, u)?, self.middle)?;
        for (p, c) in left.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let right = decompose_over(&ks, &in_pair(&ks, &(c.rep() * v))?, other(self.middle))?;
            for (s, d) in right.into_iter().enumerate() {
                self.coeffs[p][s] = self.coeffs[p][s].add(&d);
            }
        }
        Ok(())
    }

    /// Coefficient of `x_k^p (x) x_k^s`.
    pub fn coeff(&self, p: usize, s: usize) -> &QuotientElement {
        &self.coeffs[p][s]
    }

    pub fn coeffs(&self) -> &[Vec<QuotientElement>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(QuotientElement::is_zero)
    }

    /// Spelled-out pairs `(x_k^p, x_k^s c_ps)`.
    fn pairs(&self) -> Vec<(Poly, Poly)> {
        let mut out = Vec::new();
        for (p, row) in self.coeffs.iter().enumerate() {
            for (s, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((self.ks.x_k_pow(p), &self.ks.x_k_pow(s) * c.rep()));
                }
            }
        }
        out
    }

    /// Multiplies the middle of the tensor by `z`, acting on the right factor.
    pub fn mul_middle(&self, z: &Poly) -> Result<Self> {
        let pairs: Vec<(Poly, Poly)> = self.pairs().into_iter().map(|(u, v)| (u, z * &v)).collect();
        Self::from_pairs(&self.ks, self.middle, &pairs)
    }

    /// Multiplies the middle of the tensor by `z`, acting on the left factor.
    pub fn mul_middle_left(&self, z: &Poly) -> Result<Self> {
        let pairs: Vec<(Poly, Poly)> = self.pairs().into_iter().map(|(u, v)| (&u * z, v)).collect();
        Self::from_pairs(&self.ks, self.middle, &pairs)
    }
}

/// A counit as its table of values on `x_k^p (x) x_k^s`.
#[derive(Clone, Debug)]
pub struct Counit {
    pub ks: KeySituation,
    pub middle: Side,
    table: Vec<Vec<QuotientElement>>,
}

impl Counit {
    pub fn table(&self) -> &[Vec<QuotientElement>] {
        &self.table
    }

    pub fn apply(&self, t: &PowerBasisTensor) -> Result<QuotientElement> {
        if t.middle != self.middle || t.ks != self.ks {
            return Err(Error::InvalidInput("counit applied to a tensor of the wrong shape".into()));
        }
        let outer = ring(&self.ks, other(self.middle))?;
        let mut total = Poly::zero(self.ks.n());
        for (row_t, row_c) in self.table.iter().zip(&t.coeffs) {
            for (v, c) in row_t.iter().zip(row_c) {
                if !c.is_zero() {
                    total += &(v.rep() * c.rep());
                }
            }
        }
        normal_form(&total, &outer)
    }

    /// The counit of a single pair `u (x) v`.
    pub fn apply_pair(&self, u: &Poly, v: &Poly) -> Result<QuotientElement> {
        self.apply(&PowerBasisTensor::from_pairs(&self.ks, self.middle, &[(u.clone(), v.clone())])?)
    }
}

/// `1 -> (-1)^a sum_r (-1)^r e_r(nu'; i) (x) x_k^{a-r}`, a tensor over `C_nu`.
pub fn unit_iota_prime(ks: &KeySituation) -> Result<PowerBasisTensor> {
    let pairs: Vec<(Poly, Poly)> =
        (0..=ks.a).map(|r| (ks.e(Side::NuPrime, ks.i, r as i64).scale(&sign(ks.a + r)), ks.x_k_pow(ks.a - r))).collect();
    PowerBasisTensor::from_pairs(ks, Side::Nu, &pairs)
}

/// `1 -> sum_r (-1)^r e_r(nu; i+1) (x) x_k^{b-r}`, a tensor over `C_nu'`.
pub fn unit_iota(ks: &KeySituation) -> Result<PowerBasisTensor> {
    let pairs: Vec<(Poly, Poly)> = (0..=ks.b).map(|r| (ks.e(Side::Nu, ks.i + 1, r as i64).scale(&sign(r)), ks.x_k_pow(ks.b - r))).collect();
    PowerBasisTensor::from_pairs(ks, Side::NuPrime, &pairs)
}

/// `x_k^r (x) x_k^s -> (-1)^a h_{r+s-a}(nu; i)` on tensors over `C_nu'`.
pub fn counit_eps(ks: &KeySituation) -> Result<Counit> {
    let q = ring(ks, Side::Nu)?;
    let table = (0..=ks.b)
        .map(|r| {
            (0..=ks.a)
                .map(|s| normal_form(&ks.h(Side::Nu, ks.i, (r + s) as i64 - ks.a as i64).scale(&sign(ks.a)), &q))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Counit { ks: ks.clone(), middle: Side::NuPrime, table })
}

/// `x_k^r (x) x_k^s -> h_{r+s-b}(nu'; i+1)` on tensors over `C_nu`.
pub fn counit_eps_prime(ks: &KeySituation) -> Result<Counit> {
    let q = ring(ks, Side::NuPrime)?;
    let table = (0..=ks.a)
        .map(|r| {
            (0..=ks.b).map(|s| normal_form(&ks.h(Side::NuPrime, ks.i + 1, (r + s) as i64 - ks.b as i64), &q)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Counit { ks: ks.clone(), middle: Side::Nu, table })
}

/// `F_i(z) = eps' . z . iota'` on the regular module: `C_nu -> C_nu'`.
pub fn trace_f(ks: &KeySituation, z: &QuotientElement) -> Result<QuotientElement> {
    counit_eps_prime(ks)?.apply(&unit_iota_prime(ks)?.mul_middle(z.rep())?)
}

/// `E_i(z') = eps . z' . iota` on the regular module: `C_nu' -> C_nu`.
pub fn trace_e(ks: &KeySituation, z: &QuotientElement) -> Result<QuotientElement> {
    counit_eps(ks)?.apply(&unit_iota(ks)?.mul_middle(z.rep())?)
}

/// [`trace_f`] with `z` multiplied into the left tensor factor.
pub fn trace_f_left(ks: &KeySituation, z: &QuotientElement) -> Result<QuotientElement> {
    counit_eps_prime(ks)?.apply(&unit_iota_prime(ks)?.mul_middle_left(z.rep())?)
}

/// [`trace_e`] with `z'` multiplied into the left tensor factor.
pub fn trace_e_left(ks: &KeySituation, z: &QuotientElement) -> Result<QuotientElement> {
    counit_eps(ks)?.apply(&unit_iota(ks)?.mul_middle_left(z.rep())?)
}

/// A homomorphism of free modules over the ring on side `base`, given by its
/// values on `1, x_k, ..., x_k^{rank-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleHom {
    pub ks: KeySituation,
    pub base: Side,
    values: Vec<QuotientElement>,
}

impl ModuleHom {
    pub fn new(ks: &KeySituation, base: Side, values: Vec<QuotientElement>) -> Result<Self> {
        let q = ring(ks, base)?;
        if values.len() != ks.rank_over(base) || values.iter().any(|v| !Arc::ptr_eq(v.quotient(), &q)) {
            return Err(Error::InvalidInput(format!("module map needs {} values in {}", ks.rank_over(base), q.label())));
        }
        Ok(ModuleHom { ks: ks.clone(), base, values })
    }

    pub fn values(&self) -> &[QuotientElement] {
        &self.values
    }

    /// Value on an arbitrary element of `C_{nu,nu'}`.
    pub fn evaluate(&self, x: &Poly) -> Result<QuotientElement> {
        let coeffs = decompose_over(&self.ks, &in_pair(&self.ks, x)?, self.base)?;
        let mut total = Poly::zero(self.ks.n());
        for (c, v) in coeffs.iter().zip(&self.values) {
            total += &(c.rep() * v.rep());
        }
        normal_form(&total, &ring(&self.ks, self.base)?)
    }
}

fn delta_along(ks: &KeySituation, g: &Poly, base: Side) -> Result<ModuleHom> {
    let q = ring(ks, base)?;
    let coeffs = decompose_over(ks, &in_pair(ks, g)?, base)?;
    let values = (0..ks.rank_over(base))
        .map(|s| {
            let mut total = Poly::zero(ks.n());
            for (r, c) in coeffs.iter().enumerate() {
                let value = match base {
                    Side::Nu => ks.h(Side::Nu, ks.i, (r + s) as i64 - ks.a as i64).scale(&sign(ks.a)),
                    Side::NuPrime => ks.h(Side::NuPrime, ks.i + 1, (r + s) as i64 - ks.b as i64),
                };
                total += &(c.rep() * &value);
            }
            normal_form(&total, &q)
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleHom::new(ks, base, values)
}

/// `delta : C_{nu',nu} -> Hom_{C_nu}(C_{nu,nu'}, C_nu)`,
/// `delta(x_k^r)(x_k^s) = (-1)^a h_{r+s-a}(nu; i)`, extended over `C_nu`.
pub fn delta(ks: &KeySituation, g: &Poly) -> Result<ModuleHom> {
    delta_along(ks, g, Side::Nu)
}

/// `f -> (-1)^a sum_{r<=a} (-1)^r e_r(nu'; i) f(x_k^{a-r})`.
pub fn delta_inv(f: &ModuleHom) -> Result<QuotientElement> {
    let ks = &f.ks;
    if f.base != Side::Nu {
        return Err(Error::InvalidInput("delta_inv needs a map over C_nu".into()));
    }
    let mut total = Poly::zero(ks.n());
    for r in 0..=ks.a {
        let term = &ks.e(Side::NuPrime, ks.i, r as i64) * f.evaluate(&ks.x_k_pow(ks.a - r))?.rep();
        total += &term.scale(&sign(ks.a + r));
    }
    in_pair(ks, &total)
}

/// `delta' : C_{nu,nu'} -> Hom_{C_nu'}(C_{nu',nu}, C_nu')`,
/// `delta'(x_k^r)(x_k^s) = h_{r+s-b}(nu'; i+1)`, extended over `C_nu'`.
pub fn delta_prime(ks: &KeySituation, g: &Poly) -> Result<ModuleHom> {
    delta_along(ks, g, Side::NuPrime)
}

/// `f -> sum_{r<=b} (-1)^r e_r(nu; i+1) f(x_k^{b-r})`.
pub fn delta_prime_inv(f: &ModuleHom) -> Result<QuotientElement> {
    let ks = &f.ks;
    if f.base != Side::NuPrime {
        return Err(Error::InvalidInput("delta_prime_inv needs a map over C_nu'".into()));
    }
    let mut total = Poly::zero(ks.n());
    for r in 0..=ks.b {
        let term = &ks.e(Side::Nu, ks.i + 1, r as i64) * f.evaluate(&ks.x_k_pow(ks.b - r))?.rep();
        total += &term.scale(&sign(r));
    }
    in_pair(ks, &total)
}

/// Maps sending one power of `x_k` to one basis element of the base ring:
/// a rational basis of the Hom space.
fn elementary_homs(ks: &KeySituation, base: Side) -> Result<Vec<ModuleHom>> {
    let q = ring(ks, base)?;
    let zero = QuotientElement::zero(&q);
    let mut out = Vec::new();
    for s in 0..ks.rank_over(base) {
        for b in basis(&q) {
            let mut values = vec![zero.clone(); ks.rank_over(base)];
            values[s] = b;
            out.push(ModuleHom::new(ks, base, values)?);
        }
    }
    Ok(out)
}

/// Both triangle identities of both adjunctions, on every basis element of `C_{nu,nu'}`:
///
/// - `sum_r (-1)^{a+r} eps(u (x) e_r(nu'; i)) x_k^{a-r} = u`
/// - `sum_r (-1)^{a+r} e_r(nu'; i) eps(x_k^{a-r} (x) w) = w`
/// - `sum_r (-1)^r eps'(w (x) e_r(nu; i+1)) x_k^{b-r} = w`
/// - `sum_r (-1)^r e_r(nu; i+1) eps'(x_k^{b-r} (x) u) = u`
pub fn triangle_report(ks: &KeySituation) -> Result<CheckReport> {
    let eps = counit_eps(ks)?;
    let eps_prime = counit_eps_prime(ks)?;
    let n = ks.n();
    let mut report = CheckReport::default();
    for u in basis(&pair_quotient(ks)?) {
        let u = u.rep();
        let mut sums = [Poly::zero(n), Poly::zero(n), Poly::zero(n), Poly::zero(n)];
        for r in 0..=ks.a {
            let e = ks.e(Side::NuPrime, ks.i, r as i64).scale(&sign(ks.a + r));
            let x = ks.x_k_pow(ks.a - r);
            sums[0] += &(eps.apply_pair(u, &e)?.rep() * &x);
            sums[1] += &(&e * eps.apply_pair(&x, u)?.rep());
        }
        for r in 0..=ks.b {
            let e = ks.e(Side::Nu, ks.i + 1, r as i64).scale(&sign(r));
            let x = ks.x_k_pow(ks.b - r);
            sums[2] += &(eps_prime.apply_pair(u, &e)?.rep() * &x);
            sums[3] += &(&e * eps_prime.apply_pair(&x, u)?.rep());
        }
        let names = [
            "unit then counit is the identity on C_{nu,nu'} (right)",
            "unit then counit is the identity on C_{nu',nu} (left)",
            "unit then counit is the identity on C_{nu',nu} (right)",
            "unit then counit is the identity on C_{nu,nu'} (left)",
        ];
        for (name, sum) in names.iter().zip(&sums) {
            let ok = in_pair(ks, &(sum - u))?.is_zero();
            report.record(name, ks, ok, if ok { String::new() } else { format!("fails on {u}") });
        }
    }
    Ok(report)
}

pub fn triangle_identity_check(ks: &KeySituation) -> Result<bool> {
    Ok(triangle_report(ks)?.passed())
}

/// `delta` and `delta'` are inverse to their stated inverses.
pub fn delta_report(ks: &KeySituation) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for g in basis(&pair_quotient(ks)?) {
        let ok = delta_inv(&delta(ks, g.rep())?)? == g;
        report.record("delta_inv after delta is the identity", ks, ok, lazy(ok, || format!("on {}", g.rep())));
        let ok = delta_prime_inv(&delta_prime(ks, g.rep())?)? == g;
        report.record("delta'_inv after delta' is the identity", ks, ok, lazy(ok, || format!("on {}", g.rep())));
    }
    for f in elementary_homs(ks, Side::Nu)? {
        let ok = delta(ks, delta_inv(&f)?.rep())? == f;
        report.record("delta after delta_inv is the identity", ks, ok, lazy(ok, || format!("on {:?}", f.values())));
    }
    for f in elementary_homs(ks, Side::NuPrime)? {
        let ok = delta_prime(ks, delta_prime_inv(&f)?.rep())? == f;
        report.record("delta' after delta'_inv is the identity", ks, ok, lazy(ok, || format!("on {:?}", f.values())));
    }
    Ok(report)
}

/// `delta(c' g c)(x) = delta(g)(c x c')` for basis elements `c` of `C_nu` and
/// `c'` of `C_nu'` (likewise for `delta'`), and naturality of
/// `g (x) m -> (x -> delta(g)(x) m)` in `M = C_nu` under multiplication maps.
pub fn delta_linearity_report(ks: &KeySituation) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let pair = pair_quotient(ks)?;
    let small = ring(ks, Side::Nu)?;
    let small_prime = ring(ks, Side::NuPrime)?;
    let powers: Vec<Poly> = (0..=ks.a.max(ks.b)).map(|s| ks.x_k_pow(s)).collect();
    for g in basis(&pair) {
        let g = g.rep();
        let dg = delta(ks, g)?;
        let dg_prime = delta_prime(ks, g)?;
        for c in basis(&small) {
            for c_prime in basis(&small_prime) {
                let outer = &(c_prime.rep() * g) * c.rep();
                let detail = || format!("g={g}, c={}, c'={}", c.rep(), c_prime.rep());
                let d_outer = delta(ks, &outer)?;
                let d_outer_prime = delta_prime(ks, &outer)?;
                for x in &powers {
                    let moved = &(c.rep() * x) * c_prime.rep();
                    let ok = d_outer.evaluate(x)? == dg.evaluate(&moved)?;
                    report.record("delta is bimodule linear", ks, ok, lazy(ok, detail));
                    let ok = d_outer_prime.evaluate(x)? == dg_prime.evaluate(&moved)?;
                    report.record("delta' is bimodule linear", ks, ok, lazy(ok, detail));
                }
            }
            for m in basis(&small) {
                let cm = c.rep() * m.rep();
                let moved = delta(ks, &(g * &cm))?;
                for x in &powers {
                    let ok = moved.evaluate(x)? == dg.evaluate(x)?.mul_poly(&cm)?;
                    report.record("tensor-hom isomorphism is natural", ks, ok, lazy(ok, || format!("g={g}, m={}", m.rep())));
                }
            }
        }
    }
    Ok(report)
}

fn lazy(ok: bool, detail: impl FnOnce() -> String) -> String {
    if ok {
        String::new()
    } else {
        detail()
    }
}

fn traces_at(ks: &KeySituation) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let source = ring(ks, Side::Nu)?;
    let target = ring(ks, Side::NuPrime)?;
    for z in basis(&source) {
        let t = trace_f(ks, &z)?;
        let ok = t == apply_f_oracle(ks, &z)?;
        report.record("trace of F equals the F formula", ks, ok, lazy(ok, || format!("on {}", z.rep())));
        let ok = trace_f_left(ks, &z)? == t;
        report.record("trace of F is independent of the side z acts on", ks, ok, lazy(ok, || format!("on {}", z.rep())));
    }
    for z in basis(&target) {
        let t = trace_e(ks, &z)?;
        let ok = t == apply_e_oracle(ks, &z)?;
        report.record("trace of E equals the E formula", ks, ok, lazy(ok, || format!("on {}", z.rep())));
        let ok = trace_e_left(ks, &z)? == t;
        report.record("trace of E is independent of the side z acts on", ks, ok, lazy(ok, || format!("on {}", z.rep())));
    }
    Ok(report)
}

fn sweep(n: usize, window: IndexWindow, name: &str, at: fn(&KeySituation) -> Result<CheckReport>) -> CheckReport {
    key_situations(n, window)
        .par_iter()
        .map(|ks| {
            at(ks).unwrap_or_else(|e| {
                let mut r = CheckReport::default();
                r.record_error(name, ks, &e);
                r
            })
        })
        .collect()
}

/// Trace maps against the Chevalley-operator formulas on every basis
/// element of every key situation of `n` in the window.
pub fn trace_formula_check(n: usize, window: IndexWindow) -> CheckReport {
    sweep(n, window, "trace maps", traces_at)
}

/// Triangle identities for every key situation of `n` in the window.
pub fn triangle_check(n: usize, window: IndexWindow) -> CheckReport {
    sweep(n, window, "triangle identities", triangle_report)
}

/// The `delta` isomorphisms for every key situation of `n` in the window.
pub fn delta_check(n: usize, window: IndexWindow) -> CheckReport {
    sweep(n, window, "delta isomorphism", delta_report)
}

/// Bimodule linearity and naturality of `delta` for every key situation of `n` in the window.
pub fn delta_linearity_check(n: usize, window: IndexWindow) -> CheckReport {
    sweep(n, window, "delta linearity", delta_linearity_report)
}
