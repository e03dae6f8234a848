//! Symmetric-function identities checked as exact polynomial equalities,
//! and their consequences checked by membership in `I_nu`.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::poly::{e_block, e_sym, h_block, h_sym, Poly};
use crate::quotient::{coinvariant_quotient, contains};
use crate::report::CheckReport;
use crate::shapes::{compositions_of, Composition, IndexWindow};

/// `e_r` and `h_r` of contiguous variable ranges, memoized.
struct Sym {
    n: usize,
    cache: Mutex<HashMap<(bool, usize, usize, i64), Poly>>,
}

impl Sym {
    fn new(n: usize) -> Self {
        Sym { n, cache: Mutex::new(HashMap::new()) }
    }

    fn get(&self, elementary: bool, lo: usize, hi: usize, r: i64) -> Poly {
        let key = (elementary, lo, hi, r);
        if let Some(p) = self.cache.lock().unwrap().get(&key) {
            return p.clone();
        }
        let vars: Vec<usize> = (lo..hi).collect();
        let p = if elementary { e_sym(self.n, &vars, r) } else { h_sym(self.n, &vars, r) };
        self.cache.lock().unwrap().insert(key, p.clone());
        p
    }

    fn e(&self, lo: usize, hi: usize, r: i64) -> Poly {
        self.get(true, lo, hi, r)
    }

    fn h(&self, lo: usize, hi: usize, r: i64) -> Poly {
        self.get(false, lo, hi, r)
    }
}

fn signed(p: Poly, e: i64) -> Poly {
    if e.rem_euclid(2) == 0 {
        p
    } else {
        -p
    }
}

fn sum(n: usize, terms: impl IntoIterator<Item = Poly>) -> Poly {
    let mut out = Poly::zero(n);
    for t in terms {
        out += &t;
    }
    out
}

/// Identities that hold exactly in `P` for the variables `x_1..x_m` and `x_{m+1}..x_n`.
fn split_identities(sym: &Sym, m: usize, r_max: i64, report: &mut CheckReport) {
    let n = sym.n;
    let at = format!("n={n}, split at {m}");
    for r in 0..=r_max {
        let lhs = sym.h(0, n, r);
        let rhs = sum(n, (0..=r).map(|s| &sym.h(0, m, s) * &sym.h(m, n, r - s)));
        report.record("h of a union is the convolution of h's", &at, lhs == rhs, format!("r={r}"));

        let lhs = sym.e(0, n, r);
        let rhs = sum(n, (0..=r).map(|s| &sym.e(0, m, s) * &sym.e(m, n, r - s)));
        report.record("e of a union is the convolution of e's", &at, lhs == rhs, format!("r={r}"));

        let lhs = sym.h(m, n, r);
        let rhs = sum(n, (0..=r).map(|s| signed(&sym.e(0, m, s) * &sym.h(0, n, r - s), s)));
        report.record("h of a part from e of its complement and h of the whole", &at, lhs == rhs, format!("r={r}"));

        let lhs = sym.e(m, n, r);
        let rhs = sum(n, (0..=r).map(|s| signed(&sym.h(0, m, s) * &sym.e(0, n, r - s), s)));
        report.record("e of a part from h of its complement and e of the whole", &at, lhs == rhs, format!("r={r}"));
    }
}

/// `sum_s (-1)^s e_s h_{r-s} = 0` in the first `m` variables.
fn alternating_sum_vanishes(sym: &Sym, m: usize, r_max: i64, report: &mut CheckReport) {
    let n = sym.n;
    for r in 1..=r_max {
        let total = sum(n, (0..=r).map(|s| signed(&sym.e(0, m, s) * &sym.h(0, m, r - s), s)));
        report.record("alternating sum of e_s h_{r-s} vanishes", format!("n={n}, {m} variables"), total.is_zero(), format!("r={r}"));
    }
}

/// Expansions of `u^{n+r}` in the basis `1, u, ..., u^{n-1}` over the
/// symmetric polynomials, checked at every `u = x_j`.
fn power_expansions(sym: &Sym, r_max: i64, report: &mut CheckReport) {
    let n = sym.n;
    let ni = n as i64;
    let at = format!("n={n}");
    for r in 0..=r_max {
        // coefficients of u^{n-s}, s = 1..n, in both forms
        let first: Vec<Poly> =
            (1..=ni).map(|s| sum(n, (0..=r).map(|t| signed(&sym.e(0, n, s + t) * &sym.h(0, n, r - t), s + t - 1)))).collect();
        let second: Vec<Poly> =
            (1..=ni).map(|s| sum(n, (1..=s).map(|t| signed(&sym.e(0, n, s - t) * &sym.h(0, n, r + t), s - t)))).collect();
        for j in 0..n {
            let u = Poly::var(n, j);
            let lhs = u.pow(n + r as usize);
            let eval = |coeffs: &[Poly]| sum(n, coeffs.iter().enumerate().map(|(s, c)| c * &u.pow(n - 1 - s)));
            report.record("power expansion with e_{s+t} h_{r-t}", &at, eval(&first) == lhs, format!("r={r}, u=x_{}", j + 1));
            report.record("power expansion with e_{s-t} h_{r+t}", &at, eval(&second) == lhs, format!("r={r}, u=x_{}", j + 1));
        }
    }
}

fn subsets(items: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    (0..1usize << items.len())
        .map(|mask| {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (bit, &i) in items.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    a.push(i);
                } else {
                    b.push(i);
                }
            }
            (a, b)
        })
        .collect()
}

/// Block identities for one composition: the convolution definitions of
/// `e_r(nu; I)`, `h_r(nu; I)`, the expansion of `h_r(nu; I)` through `e(nu; J)`
/// for complementary `J` as an identity in `P`, and the relations
/// `h_r(nu; I) = (-1)^r e_r(nu; J)` and `sum_s (-1)^s e_s(nu; I) h_{r-s}(nu; I) = 0` in `C_nu`.
fn block_identities(nu: &Composition, r_max: i64, report: &mut CheckReport) {
    let n = nu.size();
    let q = match coinvariant_quotient(nu) {
        Ok(q) => q,
        Err(e) => return report.record_error("block identities", nu, &e),
    };
    let all: Vec<usize> = (0..n).collect();
    let indices: Vec<i64> = nu.support().filter(|&(_, p)| p > 0).map(|(i, _)| i).collect();
    for (set, rest) in subsets(&indices) {
        let at = format!("{nu}, I={set:?}");
        for r in 0..=r_max {
            let e_union = e_block(nu, &set, r).unwrap();
            let h_union = h_block(nu, &set, r).unwrap();
            let conv = |elementary: bool| -> Poly {
                let mut acc = vec![Poly::one(n)];
                for &i in &set {
                    let mut next = vec![Poly::zero(n); r as usize + 1];
                    for (t, partial) in acc.iter().enumerate() {
                        for s in 0..=(r - t as i64) {
                            let f = if elementary { e_block(nu, &[i], s) } else { h_block(nu, &[i], s) };
                            next[t + s as usize] += &(partial * &f.unwrap());
                        }
                    }
                    acc = next;
                }
                acc.get(r as usize).cloned().unwrap_or_else(|| Poly::zero(n))
            };
            report.record("e of a union of blocks is the block convolution", &at, conv(true) == e_union, format!("r={r}"));
            report.record("h of a union of blocks is the block convolution", &at, conv(false) == h_union, format!("r={r}"));

            let expansion = sum(n, (0..=r).map(|s| signed(&e_block(nu, &rest, s).unwrap() * &h_sym(n, &all, r - s), s)));
            report.record("h of blocks through e of the complementary blocks", &at, expansion == h_union, format!("r={r}"));

            let rel = &h_union - &signed(e_block(nu, &rest, r).unwrap(), r);
            match contains(&rel, &q) {
                Ok(ok) => report.record("h of blocks equals signed e of the complement in C_nu", &at, ok, format!("r={r}")),
                Err(e) => report.record_error("h of blocks equals signed e of the complement in C_nu", &at, &e),
            }
            if r >= 1 {
                let alt = sum(n, (0..=r).map(|s| signed(&e_block(nu, &set, s).unwrap() * &h_block(nu, &set, r - s).unwrap(), s)));
                match contains(&alt, &q) {
                    Ok(ok) => report.record("alternating block sum vanishes in C_nu", &at, ok, format!("r={r}")),
                    Err(e) => report.record_error("alternating block sum vanishes in C_nu", &at, &e),
                }
            }
        }
    }
}

/// Every identity of the suite for `n` variables and degrees `r <= r_max`.
/// Block identities run over every composition of `n` into positive parts.
pub fn verify_identity_suite(n: usize, r_max: usize) -> CheckReport {
    let sym = Sym::new(n);
    let r_max = r_max as i64;
    let mut polynomial: CheckReport = (0..=n)
        .into_par_iter()
        .map(|m| {
            let mut report = CheckReport::default();
            split_identities(&sym, m, r_max, &mut report);
            if m >= 1 {
                alternating_sum_vanishes(&sym, m, r_max, &mut report);
            }
            report
        })
        .collect();
    let mut powers = CheckReport::default();
    power_expansions(&sym, r_max, &mut powers);
    polynomial.merge(powers);

    let shapes: BTreeSet<Vec<usize>> = match IndexWindow::new(1, n.max(1) as i64) {
        Ok(window) => compositions_of(n, window).iter().map(Composition::nonzero_parts).collect(),
        Err(_) => BTreeSet::new(),
    };
    let blocks: CheckReport = shapes
        .into_par_iter()
        .map(|parts| {
            let mut report = CheckReport::default();
            block_identities(&Composition::from_parts(&parts), r_max, &mut report);
            report
        })
        .collect();
    polynomial.merge(blocks);
    polynomial
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_for_small_n() {
        for n in 0..=3 {
            let report = verify_identity_suite(n, 2 * n);
            assert!(report.passed(), "{:?}", report.failures);
            assert!(report.checks() > 0 || n == 0);
        }
    }

    #[test]
    fn small_cases_by_hand() {
        let sym = Sym::new(2);
        assert!((&sym.h(0, 2, 1) - &sym.e(0, 2, 1)).is_zero());
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        let h2 = &(&x1.pow(2) + &(&x1 * &x2)) + &x2.pow(2);
        assert_eq!(sym.h(0, 2, 2), h2);
        assert_eq!(sym.h(0, 2, 2), sum(2, [sym.h(0, 1, 2), &sym.h(0, 1, 1) * &sym.h(1, 2, 1), sym.h(1, 2, 2)]));
    }

    #[test]
    fn a_wrong_identity_is_reported() {
        let sym = Sym::new(3);
        let mut report = CheckReport::default();
        let lhs = sym.h(0, 3, 2);
        report.record("deliberately false", "n=3", lhs == sym.e(0, 3, 2), "");
        assert!(!report.passed());
    }
}
