//! Compositions, partitions and the dimension constants attached to them.
//!
//! A [`Composition`] is a finitely supported function `Z -> N`. Absolute
//! indices matter (the Chevalley operators `E_i`, `F_i` are indexed by them),
//! so a composition remembers the index of its first stored part.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by default; overridable from the CLI.
pub const DEFAULT_N_MAX: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawComposition")]
pub struct Composition {
    lo: i64,
    parts: Vec<usize>,
}

#[derive(Deserialize)]
struct RawComposition {
    lo: i64,
    parts: Vec<usize>,
}

impl From<RawComposition> for Composition {
    fn from(raw: RawComposition) -> Self {
        Composition::new(raw.lo, raw.parts)
    }
}

impl Composition {
    /// Builds `(parts[0], parts[1], ...)` placed at indices `lo, lo+1, ...`.
    /// Leading and trailing zeros are trimmed, `lo` is adjusted accordingly.
    pub fn new(lo: i64, parts: Vec<usize>) -> Self {
        let first = parts.iter().position(|&p| p != 0);
        match first {
            None => Composition { lo: 0, parts: Vec::new() },
            Some(f) => {
                let last = parts.iter().rposition(|&p| p != 0).unwrap();
                Composition { lo: lo + f as i64, parts: parts[f..=last].to_vec() }
            }
        }
    }

    /// Parts placed starting at index 1.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(1, parts.to_vec())
    }

    pub fn empty() -> Self {
        Self::new(0, Vec::new())
    }

    /// The regular composition `(1, 1, ..., 1)` starting at index 1.
    pub fn regular(n: usize) -> Self {
        Self::new(1, vec![1; n])
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Index of the first non-zero part (0 for the empty composition).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Index of the last non-zero part (`lo - 1` for the empty composition).
    pub fn hi(&self) -> i64 {
        self.lo + self.parts.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Stored parts from `lo()` to `hi()`; interior zeros are kept.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn get(&self, i: i64) -> usize {
        if i < self.lo {
            return 0;
        }
        self.parts.get((i - self.lo) as usize).copied().unwrap_or(0)
    }

    /// `(index, part)` for every non-zero part, in increasing index order.
    pub fn support(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.parts.iter().enumerate().filter(|(_, &p)| p != 0).map(move |(j, &p)| (self.lo + j as i64, p))
    }

    pub fn nonzero_parts(&self) -> Vec<usize> {
        self.parts.iter().copied().filter(|&p| p != 0).collect()
    }

    pub fn max_part(&self) -> usize {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// Regular means the parabolic subgroup is trivial.
    pub fn is_regular(&self) -> bool {
        self.parts.iter().all(|&p| p <= 1)
    }

    /// Sum of the parts strictly before index `i`.
    pub fn offset_before(&self, i: i64) -> usize {
        self.parts.iter().enumerate().take_while(|(j, _)| self.lo + (*j as i64) < i).map(|(_, &p)| p).sum()
    }

    /// Zero-based variable positions of the block `X_i`.
    pub fn block(&self, i: i64) -> Range<usize> {
        let start = self.offset_before(i);
        start..start + self.get(i)
    }

    /// Variable ranges of all non-zero blocks, in order.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        self.support().map(|(i, _)| self.block(i)).collect()
    }

    /// Order of the parabolic subgroup `S_nu`.
    pub fn parabolic_order(&self) -> u64 {
        self.parts.iter().map(|&p| factorial(p)).product()
    }

    /// The composition with one unit moved from index `i` to `i + 1`.
    pub fn moved_right(&self, i: i64) -> Option<Composition> {
        if self.get(i) == 0 {
            return None;
        }
        Some(self.adjusted(&[(i, -1), (i + 1, 1)]))
    }

    /// The composition with one unit moved from index `i + 1` to `i`.
    pub fn moved_left(&self, i: i64) -> Option<Composition> {
        if self.get(i + 1) == 0 {
            return None;
        }
        Some(self.adjusted(&[(i, 1), (i + 1, -1)]))
    }

    fn adjusted(&self, deltas: &[(i64, i64)]) -> Composition {
        let lo = deltas.iter().map(|d| d.0).chain([self.lo]).min().unwrap();
        let hi = deltas.iter().map(|d| d.0).chain([self.hi()]).max().unwrap();
        let mut parts: Vec<usize> = (lo..=hi).map(|j| self.get(j)).collect();
        for &(i, d) in deltas {
            let slot = &mut parts[(i - lo) as usize];
            *slot = (*slot as i64 + d) as usize;
        }
        Composition::new(lo, parts)
    }

    /// Inserts `parts` as a block of consecutive parts replacing index `i`.
    /// Used to build refinements such as the intersection of two parabolics.
    pub fn split_at(&self, i: i64, pieces: &[usize]) -> Composition {
        let lo = self.lo.min(i);
        let hi = self.hi().max(i);
        let mut parts = Vec::new();
        for j in lo..=hi {
            if j == i {
                parts.extend_from_slice(pieces);
            } else {
                parts.push(self.get(j));
            }
        }
        Composition::new(lo, parts)
    }

    pub fn to_partition(&self) -> Partition {
        sort_to_partition(self)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})@{}", parts.join(","), self.lo)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

impl Partition {
    /// Sorts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `lambda_j` with 1-based `j`; zero beyond the length.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    /// `lambda_1 + ... + lambda_m`.
    pub fn partial_sum(&self, m: usize) -> usize {
        self.0.iter().take(m).sum()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn to_composition(&self) -> Composition {
        Composition::from_parts(&self.0)
    }

    /// `sum lambda_i (lambda_i - 1)`.
    pub fn pair_count_doubled(&self) -> usize {
        self.0.iter().map(|&p| p * p.saturating_sub(1)).sum()
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad part {p:?} in {s:?}")))).collect()
}

/// `2,1,0,3` or `2,1@0`: parts with an optional index of the first one (default 1).
/// The `(2,1)@0` form printed by `Display` is accepted too.
impl std::str::FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (parts, lo) = match s.split_once('@') {
            Some((parts, lo)) => {
                let lo = lo.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad offset {lo:?}")))?;
                (parts, lo)
            }
            None => (s, 1),
        };
        Ok(Composition::new(lo, parse_parts(parts)?))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Partition::new(parse_parts(s)?))
    }
}

/// Inclusive range of indices inside which compositions are supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexWindow {
    pub lo: i64,
    pub hi: i64,
}

impl IndexWindow {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!("empty window [{lo}, {hi}]")));
        }
        Ok(IndexWindow { lo, hi })
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains(&self, i: i64) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn contains_composition(&self, c: &Composition) -> bool {
        c.is_empty() || (self.contains(c.lo()) && self.contains(c.hi()))
    }

    /// Indices `i` for which both `i` and `i + 1` lie in the window.
    pub fn chevalley_indices(&self) -> impl Iterator<Item = i64> {
        self.lo..self.hi
    }
}

/// `lambda_j = #{ i : mu_i >= j }`.
pub fn transpose(mu: &Composition) -> Partition {
    let width = mu.max_part();
    Partition((1..=width).map(|j| mu.parts().iter().filter(|&&p| p >= j).count()).collect())
}

pub fn sort_to_partition(nu: &Composition) -> Partition {
    Partition::new(nu.parts().to_vec())
}

pub fn dominates(lam: &Partition, kap: &Partition) -> Result<bool> {
    if lam.size() != kap.size() {
        return Err(Error::SizeMismatch(lam.size(), kap.size()));
    }
    let m = lam.len().max(kap.len());
    Ok((1..=m).all(|j| lam.partial_sum(j) >= kap.partial_sum(j)))
}

/// `n(n-1) - sum nu_i (nu_i - 1)`: twice the dimension of the partial flag variety.
pub fn d_nu(nu: &Composition) -> usize {
    let n = nu.size();
    n * n.saturating_sub(1) - sorted_pair_count(nu)
}

/// Top degree of the Tanisaki quotient attached to `(mu, nu)`.
pub fn d_mu_nu(mu: &Composition, nu: &Composition) -> Result<usize> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(mu.size(), nu.size()));
    }
    let lam = transpose(mu);
    if !dominates(&lam, &sort_to_partition(nu))? {
        return Err(Error::ZeroAlgebra);
    }
    Ok(lam.pair_count_doubled() - sorted_pair_count(nu))
}

fn sorted_pair_count(nu: &Composition) -> usize {
    nu.parts().iter().map(|&p| p * p.saturating_sub(1)).sum()
}

/// All compositions of `n` supported in `window`, lexicographically
/// decreasing in the part vector (so `(n, 0, ...)` comes first).
pub fn compositions_of(n: usize, window: IndexWindow) -> Vec<Composition> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in (0..=rest).rev() {
            cur.push(p);
            rec(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, window.width(), &mut Vec::new(), &mut raw);
    raw.into_iter().map(|parts| Composition::new(window.lo, parts)).collect()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::from_parts(parts)
    }

    #[test]
    fn parsing() {
        assert_eq!("2,1".parse::<Composition>().unwrap(), c(&[2, 1]));
        assert_eq!("0,2,1@0".parse::<Composition>().unwrap(), c(&[2, 1]));
        assert_eq!("2@-3".parse::<Composition>().unwrap(), Composition::new(-3, vec![2]));
        let nu = Composition::new(2, vec![1, 0, 3]);
        assert_eq!(nu.to_string().parse::<Composition>().unwrap(), nu);
        assert_eq!("".parse::<Composition>().unwrap(), Composition::empty());
        assert!("2,x".parse::<Composition>().is_err());
        assert!("2@y".parse::<Composition>().is_err());
        assert_eq!("1,3".parse::<Partition>().unwrap(), Partition::new(vec![3, 1]));
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&c(&[1, 2, 1])), p(&[3, 1]));
        assert_eq!(transpose(&c(&[4])), p(&[1, 1, 1, 1]));
        assert_eq!(transpose(&c(&[1, 1, 1, 1])), p(&[4]));
        assert_eq!(transpose(&Composition::empty()), p(&[]));
    }

    #[test]
    fn sort_examples() {
        assert_eq!(sort_to_partition(&c(&[1, 2, 1])), p(&[2, 1, 1]));
        assert_eq!(sort_to_partition(&c(&[0, 3, 0])), p(&[3]));
        assert_eq!(sort_to_partition(&c(&[2, 2])), p(&[2, 2]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap());
        assert!(!dominates(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        for kap in Partition::all(5) {
            assert!(dominates(&p(&[5]), &kap).unwrap());
        }
        assert!(dominates(&p(&[2]), &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn d_nu_examples() {
        assert_eq!(d_nu(&c(&[1, 1, 1])), 6);
        assert_eq!(d_nu(&c(&[5])), 0);
        assert_eq!(d_nu(&c(&[1, 2, 1])), 10);
    }

    #[test]
    fn d_mu_nu_examples() {
        assert_eq!(d_mu_nu(&c(&[1, 2, 1]), &c(&[1, 2, 1])).unwrap(), 4);
        assert_eq!(d_mu_nu(&c(&[1, 1, 1, 1]), &c(&[1, 1, 1, 1])).unwrap(), 12);
        assert_eq!(d_mu_nu(&c(&[1, 1, 1]), &c(&[3])).unwrap(), 0);
        assert_eq!(d_mu_nu(&c(&[3]), &c(&[3])), Err(Error::ZeroAlgebra));
        assert_eq!(d_mu_nu(&c(&[2, 2]), &c(&[4])), Err(Error::ZeroAlgebra));
    }

    #[test]
    fn compositions_in_window() {
        let w = IndexWindow::new(0, 1).unwrap();
        assert_eq!(
            compositions_of(2, w),
            vec![Composition::new(0, vec![2, 0]), Composition::new(0, vec![1, 1]), Composition::new(0, vec![0, 2])]
        );
        assert_eq!(compositions_of(0, w), vec![Composition::empty()]);
        assert_eq!(compositions_of(3, w).len(), 4);
        assert!(IndexWindow::new(2, 1).is_err());
    }

    #[test]
    fn absolute_indices_matter() {
        let a = Composition::new(0, vec![1, 2, 1]);
        let b = Composition::new(1, vec![1, 2, 1]);
        assert_ne!(a, b);
        assert_eq!(Composition::new(0, vec![0, 1, 2, 1, 0]), b);
        assert_eq!(a.get(1), 2);
        assert_eq!(b.block(2), 1..3);
        assert_eq!(b.block(7), 4..4);
    }

    #[test]
    fn moves_and_splits() {
        let nu = c(&[2]);
        assert_eq!(nu.moved_right(1), Some(c(&[1, 1])));
        assert_eq!(nu.moved_right(2), None);
        assert_eq!(c(&[1, 1]).moved_left(1), Some(c(&[2])));
        assert_eq!(c(&[3, 2]).split_at(1, &[2, 1]), c(&[2, 1, 2]));
        assert_eq!(c(&[1, 2]).split_at(1, &[0, 1]).blocks(), vec![0..1, 1..3]);
    }

    #[test]
    fn transpose_is_an_involution_on_sorted_shapes() {
        for n in 0..=6 {
            for lam in Partition::all(n) {
                let mu = lam.to_composition();
                assert_eq!(transpose(&transpose(&mu).to_composition()), sort_to_partition(&mu));
                assert_eq!(lam.transpose().transpose(), lam);
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=6 {
            let all = Partition::all(n);
            for a in &all {
                assert!(dominates(a, a).unwrap());
                for b in &all {
                    if a != b && dominates(a, b).unwrap() {
                        assert!(!dominates(b, a).unwrap());
                    }
                    for c in &all {
                        if dominates(a, b).unwrap() && dominates(b, c).unwrap() {
                            assert!(dominates(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn d_mu_nu_matches_difference_of_d_nu() {
        for n in 1..=5 {
            let w = IndexWindow::new(1, n as i64).unwrap();
            for mu in compositions_of(n, w) {
                let lam = transpose(&mu);
                let gamma = lam.to_composition();
                for nu in compositions_of(n, w) {
                    if let Ok(d) = d_mu_nu(&mu, &nu) {
                        assert_eq!(d as i64, d_nu(&nu) as i64 - d_nu(&gamma) as i64);
                        let mut rev = nu.parts().to_vec();
                        rev.reverse();
                        assert_eq!(d_mu_nu(&lam.transpose().to_composition(), &Composition::from_parts(&rev)).unwrap(), d);
                    }
                }
            }
        }
    }
}
