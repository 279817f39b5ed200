//! Partitions, Young tableaux, and the Deruyts family of fillings.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ugl::Symbol;

/// A partition `λ_1 ≥ λ_2 ≥ ⋯ ≥ λ_p > 0`. The empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Shape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Shape(parts))
    }

    /// Drops trailing zeros before validating, so weights like `(2,1,0)` work.
    pub fn from_weight(parts: &[usize]) -> Result<Self> {
        Shape::new(parts.iter().copied().filter(|&p| p > 0).collect())
    }

    /// The rectangle `n^p` (`p` rows of length `n`).
    pub fn rectangle(n: usize, p: usize) -> Self {
        if n == 0 {
            return Shape(vec![]);
        }
        Shape(vec![n; p])
    }

    pub fn empty() -> Self {
        Shape(vec![])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows `p`.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// `|λ| = Σ λ_i`.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn last(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Shape {
        let w = self.first();
        Shape((1..=w).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// `e_2(λ) = Σ_{i<j} λ_i λ_j`, the exponent of the sign in the hook formula.
    pub fn e2(&self) -> usize {
        let mut s = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                s += self.0[i] * self.0[j];
            }
        }
        s
    }

    /// The shape with one more row of length `k` at the bottom (`k ≤ λ_p`).
    pub fn with_row(&self, k: usize) -> Result<Shape> {
        let mut v = self.0.clone();
        if k > 0 {
            v.push(k);
        }
        Shape::new(v)
    }

    /// The shape without its last row.
    pub fn without_last(&self) -> Shape {
        let mut v = self.0.clone();
        v.pop();
        Shape(v)
    }

    /// All partitions of `weight` with at most `max_rows` rows and parts at most `max_part`.
    pub fn all_of_weight(weight: usize, max_part: usize, max_rows: usize) -> Vec<Shape> {
        fn go(rest: usize, cap: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if rest == 0 {
                out.push(Shape(cur.clone()));
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(weight, max_part, max_rows, &mut Vec::new(), &mut out);
        out
    }

    pub fn parse(s: &str) -> Result<Shape> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Shape::empty());
        }
        let parts: std::result::Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse::<usize>()).collect();
        Shape::new(parts.map_err(|_| Error::Parse(format!("bad partition {s:?}")))?)
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Shape::new(v)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Young tableau: rows of entries whose lengths form a partition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau<T = Symbol> {
    rows: Vec<Vec<T>>,
}

impl<T: Clone> Tableau<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        Shape::new(rows.iter().map(|r| r.len()).collect())?;
        Ok(Tableau { rows })
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// Entries in row-major reading order.
    pub fn reading(&self) -> Vec<T> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Tableau<U> {
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    /// Appends a bottom row; it must not be longer than the current last row.
    pub fn with_row(&self, row: Vec<T>) -> Result<Self> {
        let mut rows = self.rows.clone();
        if !row.is_empty() {
            rows.push(row);
        }
        Tableau::new(rows)
    }
}

impl<T: fmt::Display> fmt::Display for Tableau<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().join(" ")).collect();
        write!(f, "({})", rows.join(" / "))
    }
}

impl<T: fmt::Display> fmt::Debug for Tableau<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered supply of distinct virtual symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualPool(Vec<Symbol>);

impl VirtualPool {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.iter().any(|s| s.is_proper()) {
            return Err(Error::Range("pool contains a proper symbol".into()));
        }
        if symbols.iter().duplicates().next().is_some() {
            return Err(Error::DuplicateEntry);
        }
        Ok(VirtualPool(symbols))
    }

    /// `α_1, …, α_m`.
    pub fn first(m: u16) -> Self {
        VirtualPool((1..=m).map(Symbol::virt).collect())
    }

    /// `α_{start}, …, α_{start+m−1}`.
    pub fn range(start: u16, m: u16) -> Self {
        VirtualPool((start..start + m).map(Symbol::virt).collect())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest virtual index used, i.e. the `m` a context needs.
    pub fn max_index(&self) -> u16 {
        self.0.iter().map(|s| s.index()).max().unwrap_or(0)
    }
}

fn check_width(lambda: &Shape, n: usize) -> Result<()> {
    if lambda.first() > n {
        return Err(Error::Shape(format!("first row {} exceeds n = {n}", lambda.first())));
    }
    Ok(())
}

/// `Der_λ`: row `i` is `1 2 ⋯ λ_i`.
pub fn deruyts(lambda: &Shape, n: usize) -> Result<Tableau> {
    check_width(lambda, n)?;
    Ok(Tableau {
        rows: lambda.parts().iter().map(|&l| (1..=l as u16).map(Symbol::proper).collect()).collect(),
    })
}

/// `Der*_λ`: row `i` is `λ_i ⋯ 2 1`.
pub fn reverse_deruyts(lambda: &Shape, n: usize) -> Result<Tableau> {
    check_width(lambda, n)?;
    Ok(Tableau {
        rows: lambda.parts().iter().map(|&l| (1..=l as u16).rev().map(Symbol::proper).collect()).collect(),
    })
}

/// `C*_λ`: row `i` is the `i`-th pool symbol repeated `λ_i` times.
pub fn coderuyts(lambda: &Shape, pool: &VirtualPool) -> Result<Tableau> {
    if pool.len() < lambda.rows() {
        return Err(Error::PoolExhausted { need: lambda.rows(), have: pool.len() });
    }
    Ok(Tableau {
        rows: lambda.parts().iter().zip(pool.symbols()).map(|(&l, &a)| vec![a; l]).collect(),
    })
}

/// All tableaux of shape `λ` over `1..=n` with strictly increasing rows.
pub fn row_increasing(lambda: &Shape, n: usize) -> Vec<Tableau> {
    if lambda.rows() == 0 {
        return vec![Tableau { rows: vec![] }];
    }
    let row_choices: Vec<Vec<Vec<Symbol>>> = lambda
        .parts()
        .iter()
        .map(|&l| (1..=n as u16).combinations(l).map(|c| c.into_iter().map(Symbol::proper).collect()).collect())
        .collect();
    row_choices
        .into_iter()
        .multi_cartesian_product()
        .map(|rows| Tableau { rows })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(v: &[usize]) -> Shape {
        Shape::new(v.to_vec()).unwrap()
    }

    fn rows(t: &Tableau) -> Vec<String> {
        t.rows().iter().map(|r| r.iter().join("")).collect()
    }

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![2, 3]).is_err());
        assert!(Shape::new(vec![2, 0]).is_err());
        assert_eq!(Shape::from_weight(&[2, 1, 0]).unwrap(), sh(&[2, 1]));
        assert_eq!(sh(&[3, 2, 2]).conjugate(), sh(&[3, 3, 1]));
        assert_eq!(sh(&[3, 2]).e2(), 6);
        assert_eq!(Shape::parse("3, 2,2").unwrap(), sh(&[3, 2, 2]));
        assert!(Shape::parse("1,2").is_err());
    }

    #[test]
    fn deruyts_family() {
        let l = sh(&[3, 2, 2]);
        assert_eq!(rows(&deruyts(&l, 3).unwrap()), ["123", "12", "12"]);
        assert_eq!(rows(&reverse_deruyts(&l, 3).unwrap()), ["321", "21", "21"]);
        assert_eq!(rows(&deruyts(&sh(&[1]), 1).unwrap()), ["1"]);
        assert_eq!(rows(&reverse_deruyts(&sh(&[2, 1]), 2).unwrap()), ["21", "1"]);
        assert_eq!(rows(&deruyts(&sh(&[4]), 4).unwrap()), ["1234"]);
        assert!(deruyts(&l, 2).is_err());
    }

    #[test]
    fn coderuyts_rows_repeat_pool_symbols() {
        let t = coderuyts(&sh(&[2, 1]), &VirtualPool::first(2)).unwrap();
        assert_eq!(rows(&t), ["α1α1", "α2"]);
        assert_eq!(rows(&coderuyts(&sh(&[3]), &VirtualPool::first(1)).unwrap()), ["α1α1α1"]);
        assert_eq!(
            coderuyts(&sh(&[2, 2, 1]), &VirtualPool::first(2)),
            Err(Error::PoolExhausted { need: 3, have: 2 })
        );
    }

    #[test]
    fn row_increasing_count() {
        assert_eq!(row_increasing(&sh(&[2, 1]), 3).len(), 9);
        assert_eq!(row_increasing(&sh(&[3]), 3).len(), 1);
        assert_eq!(row_increasing(&Shape::empty(), 3).len(), 1);
    }

    #[test]
    fn partitions_enumerated() {
        assert_eq!(Shape::all_of_weight(4, 4, 4).len(), 5);
        assert_eq!(Shape::all_of_weight(4, 2, 3).len(), 2);
    }
}
