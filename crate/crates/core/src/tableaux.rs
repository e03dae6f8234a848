//! Tableau enumeration, Kostka numbers and Kostka-Foulkes polynomials.
//!
//! Tableaux are stored in English notation: row 0 is the top row and
//! columns strictly increase downwards. (Drawn French style, with columns
//! increasing upwards, the same fillings are obtained by flipping every
//! column; all counts are unaffected.)

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::shapes::{Composition, Partition};

/// A polynomial in one variable `t` with integer coefficients, constant term first.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn monomial(degree: usize, c: i64) -> Self {
        let mut v = vec![0; degree + 1];
        v[degree] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, j: usize) -> i64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    pub fn add_term(&mut self, degree: usize, c: i64) {
        if self.0.len() <= degree {
            self.0.resize(degree + 1, 0);
        }
        self.0[degree] += c;
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.0.len().max(other.0.len());
        Self::new((0..len).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| match (j, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (j, 1) => format!("t^{j}"),
                (j, c) => format!("{c}t^{j}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A filling of a Young diagram, rows listed top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<i64>>,
}

impl Tableau {
    pub fn is_column_strict(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lower, upper)| lower > upper))
    }

    pub fn is_row_weak(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    /// Rows from bottom to top, each read left to right.
    pub fn reading_word(&self) -> Vec<i64> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// The content of `nu` as a multiplicity vector over its stored positions.
fn content(nu: &Composition) -> Vec<usize> {
    nu.parts().to_vec()
}

/// Visits every way of choosing strictly increasing columns with the given
/// lengths and total content `remaining`.
fn column_choices(lengths: &[usize], remaining: &mut Vec<usize>, chosen: &mut Vec<Vec<usize>>, visit: &mut dyn FnMut(&[Vec<usize>])) {
    let Some((&len, rest)) = lengths.split_first() else {
        if remaining.iter().all(|&c| c == 0) {
            visit(chosen);
        }
        return;
    };
    let available: Vec<usize> = (0..remaining.len()).filter(|&j| remaining[j] > 0).collect();
    for col in itertools::Itertools::combinations(available.into_iter(), len) {
        for &j in &col {
            remaining[j] -= 1;
        }
        chosen.push(col);
        column_choices(rest, remaining, chosen, visit);
        let col = chosen.pop().unwrap();
        for &j in &col {
            remaining[j] += 1;
        }
    }
}

fn count_columns(lengths: &[usize], remaining: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), u64>) -> u64 {
    let Some((&len, rest)) = lengths.split_first() else {
        return u64::from(remaining.iter().all(|&c| c == 0));
    };
    let key = (lengths.len(), remaining.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let available: Vec<usize> = (0..remaining.len()).filter(|&j| remaining[j] > 0).collect();
    let mut total = 0;
    for col in itertools::Itertools::combinations(available.into_iter(), len) {
        for &j in &col {
            remaining[j] -= 1;
        }
        total += count_columns(rest, remaining, memo);
        for &j in &col {
            remaining[j] += 1;
        }
    }
    memo.insert(key, total);
    total
}

/// Number of fillings of `lam` with exactly `nu_i` entries `i`, strictly
/// increasing along columns and unconstrained along rows.
pub fn count_column_strict(lam: &Partition, nu: &Composition) -> u64 {
    if lam.size() != nu.size() {
        return 0;
    }
    let lengths = lam.transpose().parts().to_vec();
    count_columns(&lengths, &mut content(nu), &mut HashMap::new())
}

fn columns_to_tableau(lam: &Partition, nu: &Composition, cols: &[Vec<usize>]) -> Tableau {
    let rows = (0..lam.len()).map(|r| cols.iter().take(lam.part(r + 1)).map(|c| nu.lo() + c[r] as i64).collect()).collect();
    Tableau { shape: lam.clone(), rows }
}

/// All column-strict fillings, ordered lexicographically by row-major entries.
pub fn enumerate_column_strict(lam: &Partition, nu: &Composition) -> Vec<Tableau> {
    if lam.size() != nu.size() {
        return Vec::new();
    }
    let lengths = lam.transpose().parts().to_vec();
    let mut out = Vec::new();
    column_choices(&lengths, &mut content(nu), &mut Vec::new(), &mut |cols| out.push(columns_to_tableau(lam, nu, cols)));
    out.sort_by_key(|a| a.rows.concat());
    out
}

/// Shapes obtained from `inner` by adding a horizontal strip of `size` boxes inside `outer`.
fn horizontal_strips(inner: &[usize], outer: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn rec(j: usize, left: usize, inner: &[usize], outer: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j == outer.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let base = inner.get(j).copied().unwrap_or(0);
        let cap = if j == 0 { outer[0] } else { outer[j].min(inner.get(j - 1).copied().unwrap_or(0)) };
        for row in base..=cap.max(base) {
            let add = row - base;
            if add > left {
                break;
            }
            cur.push(row);
            rec(j + 1, left - add, inner, outer, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, size, inner, outer, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard tableaux of shape `lam` and content `nu`.
pub fn kostka(lam: &Partition, nu: &Composition) -> u64 {
    if lam.size() != nu.size() {
        return 0;
    }
    let outer = lam.parts().to_vec();
    let mut layer: HashMap<Vec<usize>, u64> = HashMap::from([(vec![0; outer.len()], 1)]);
    for &size in nu.parts() {
        let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
        for (shape, count) in &layer {
            for grown in horizontal_strips(shape, &outer, size) {
                *next.entry(grown).or_default() += count;
            }
        }
        layer = next;
    }
    layer.get(&outer).copied().unwrap_or(0)
}

/// Semistandard tableaux of shape `lam` with content `nu` (entries are the
/// indices of `nu`), built by adding one horizontal strip per index.
pub fn enumerate_semistandard(lam: &Partition, nu: &Composition) -> Vec<Tableau> {
    if lam.size() != nu.size() {
        return Vec::new();
    }
    let outer = lam.parts().to_vec();
    let mut layer: Vec<Vec<Vec<i64>>> = vec![vec![Vec::new(); outer.len()]];
    for (pos, &size) in nu.parts().iter().enumerate() {
        let value = nu.lo() + pos as i64;
        let mut next = Vec::new();
        for rows in &layer {
            let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
            for grown in horizontal_strips(&shape, &outer, size) {
                let mut r = rows.clone();
                for (row, (&old, &new)) in r.iter_mut().zip(shape.iter().zip(&grown)) {
                    row.extend(std::iter::repeat_n(value, new - old));
                }
                next.push(r);
            }
        }
        layer = next;
    }
    let mut out: Vec<Tableau> = layer
        .into_iter()
        .filter(|rows| rows.iter().map(Vec::len).eq(outer.iter().copied()))
        .map(|rows| Tableau { shape: lam.clone(), rows })
        .collect();
    out.sort_by_key(|a| a.rows.concat());
    out
}

/// Lascoux-Schutzenberger charge of a word whose content is a partition
/// (value `v + 1` occurs at most as often as `v`, starting from 1).
pub fn charge_of_word(word: &[i64]) -> usize {
    let mut alive: Vec<Option<i64>> = word.iter().copied().map(Some).collect();
    let mut total = 0;
    while let Some(start) = alive.iter().rposition(|&c| c == Some(1)) {
        let mut selected = vec![start];
        let mut pos = start;
        let mut index = 0;
        let mut value = 2;
        loop {
            let left = (0..pos).rev().find(|&p| alive[p] == Some(value));
            let found = match left {
                Some(p) => Some(p),
                None => {
                    let wrapped = (pos + 1..alive.len()).rev().find(|&p| alive[p] == Some(value));
                    if wrapped.is_some() {
                        index += 1;
                    }
                    wrapped
                }
            };
            let Some(p) = found else {
                break;
            };
            total += index;
            selected.push(p);
            pos = p;
            value += 1;
        }
        for p in selected {
            alive[p] = None;
        }
    }
    total
}

pub fn charge(t: &Tableau) -> usize {
    charge_of_word(&t.reading_word())
}

/// `K_{tau, mu+}(t)` as the charge generating function over semistandard
/// tableaux of shape `tau` and content `mu` sorted into a partition.
pub fn kostka_foulkes(tau: &Partition, mu: &Composition) -> IntPolynomial {
    let content = mu.to_partition().to_composition();
    let mut out = IntPolynomial::zero();
    for t in enumerate_semistandard(tau, &content) {
        out.add_term(charge(&t), 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{compositions_of, dominates, IndexWindow};
    use itertools::Itertools;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn c(parts: &[usize]) -> Composition {
        Composition::from_parts(parts)
    }

    /// Every filling of the shape with the given content, checked box by box.
    fn brute_force(lam: &Partition, nu: &Composition) -> Vec<Tableau> {
        let mut entries: Vec<i64> = nu.support().flat_map(|(i, m)| std::iter::repeat_n(i, m)).collect();
        entries.sort_unstable();
        let mut out: Vec<Tableau> = entries
            .iter()
            .copied()
            .permutations(entries.len())
            .unique()
            .map(|perm| {
                let mut it = perm.into_iter();
                let rows = lam.parts().iter().map(|&len| it.by_ref().take(len).collect()).collect();
                Tableau { shape: lam.clone(), rows }
            })
            .filter(Tableau::is_column_strict)
            .collect();
        out.sort_by_key(|a| a.rows.concat());
        out
    }

    #[test]
    fn column_strict_examples() {
        assert_eq!(count_column_strict(&p(&[3, 1]), &c(&[1, 2, 1])), 5);
        assert_eq!(count_column_strict(&p(&[1, 1, 1, 1]), &c(&[1, 1, 1, 1])), 1);
        assert_eq!(count_column_strict(&p(&[4]), &c(&[1, 1, 1, 1])), 24);
        assert_eq!(enumerate_column_strict(&p(&[1]), &c(&[1])).len(), 1);
        assert_eq!(enumerate_column_strict(&p(&[3, 1]), &c(&[1, 2, 1])).len(), 5);
        assert_eq!(enumerate_column_strict(&p(&[2]), &c(&[2])).len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=5 {
            for lam in Partition::all(n) {
                for nu in compositions_of(n, IndexWindow::new(1, 3).unwrap()) {
                    let fast = enumerate_column_strict(&lam, &nu);
                    assert_eq!(fast, brute_force(&lam, &nu), "{lam} {nu}");
                    assert_eq!(fast.len() as u64, count_column_strict(&lam, &nu));
                    let standard = fast.iter().filter(|t| t.is_row_weak()).count() as u64;
                    assert_eq!(standard, kostka(&lam, &nu), "{lam} {nu}");
                    assert_eq!(enumerate_semistandard(&lam, &nu).len() as u64, kostka(&lam, &nu));
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[3, 1]), &c(&[1, 2, 1])), 2);
        assert_eq!(kostka(&p(&[2, 1, 1]), &c(&[2, 1, 1])), 1);
        assert_eq!(kostka(&p(&[1, 1]), &c(&[2])), 0);
    }

    #[test]
    fn kostka_properties() {
        for n in 0..=5 {
            for lam in Partition::all(n) {
                for nu in compositions_of(n, IndexWindow::new(1, n.max(1) as i64).unwrap()) {
                    let k = kostka(&lam, &nu);
                    let sorted = nu.to_partition().to_composition();
                    assert!(k <= count_column_strict(&lam, &nu));
                    assert_eq!(k, kostka(&lam, &sorted));
                    assert_eq!(count_column_strict(&lam, &nu), count_column_strict(&lam, &sorted));
                    assert_eq!(k != 0, dominates(&lam, &nu.to_partition()).unwrap(), "{lam} {nu}");
                }
            }
        }
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge_of_word(&[1, 2, 3]), 3);
        assert_eq!(charge_of_word(&[3, 2, 1]), 0);
        assert_eq!(charge_of_word(&[3, 1, 2]), 2);
        assert_eq!(charge_of_word(&[2, 1, 3]), 1);
    }

    #[test]
    fn kostka_foulkes_examples() {
        for n in 1..=5 {
            for tau in Partition::all(n) {
                assert_eq!(kostka_foulkes(&tau, &tau.to_composition()), IntPolynomial::new(vec![1]));
            }
            assert_eq!(kostka_foulkes(&p(&[n]), &Composition::regular(n)), IntPolynomial::monomial(n * (n - 1) / 2, 1));
        }
        assert_eq!(kostka_foulkes(&p(&[2, 1]), &c(&[1, 1, 1])), IntPolynomial::new(vec![0, 1, 1]));
    }

    #[test]
    fn kostka_foulkes_specializes_to_kostka() {
        for n in 0..=5 {
            for tau in Partition::all(n) {
                for mu in Partition::all(n) {
                    let kf = kostka_foulkes(&tau, &mu.to_composition());
                    assert_eq!(kf.eval(1), kostka(&tau, &mu.to_composition()) as i64);
                    assert!(kf.coeffs().iter().all(|&c| c >= 0));
                }
            }
        }
    }

    #[test]
    fn int_polynomial_arithmetic() {
        let a = IntPolynomial::new(vec![1, 1]);
        assert_eq!(a.mul(&a), IntPolynomial::new(vec![1, 2, 1]));
        assert_eq!(a.add(&IntPolynomial::new(vec![-1, -1])), IntPolynomial::zero());
        assert_eq!(IntPolynomial::new(vec![0, 1, 1]).to_string(), "t + t^2");
    }
}
