//! Column determinants over noncommutative rings, and polynomials in a
//! central variable.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ugl::{Context, EnvElement, GeneratorOrder};

/// The minimal ring interface `cdet` needs. Multiplication is not assumed
/// commutative; factor order is always respected.
pub trait NcRing: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rat) -> Self;
    fn is_zero(&self) -> bool;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }
}

/// Products are taken in standard PBW normal form, so intermediate results
/// stay small. Entries of one matrix share a context (checked by
/// [`Matrix::new`]), which is what makes the `expect` below unreachable.
impl NcRing for EnvElement {
    fn zero_like(&self) -> Self {
        EnvElement::zero(self.context())
    }
    fn one_like(&self) -> Self {
        EnvElement::one(self.context())
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("entries share one context")
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_normal(other, GeneratorOrder::Standard).expect("entries share one context")
    }
    fn scale(&self, c: &Rat) -> Self {
        EnvElement::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        EnvElement::is_zero(self)
    }
}

impl NcRing for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

/// Square matrix with entries in an [`NcRing`].
#[derive(Clone, Debug)]
pub struct Matrix<R> {
    k: usize,
    entries: Vec<R>,
}

pub type EnvMatrix = Matrix<EnvElement>;

impl<R: NcRing> Matrix<R> {
    pub fn from_fn(k: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                entries.push(f(i, j));
            }
        }
        Matrix { k, entries }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// Entry in row `i`, column `j`, both 0-based.
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.k + j]
    }

    /// The submatrix on the given rows and columns (0-based, in that order).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), cols.len());
        Matrix::from_fn(rows.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

impl Matrix<EnvElement> {
    pub fn new(rows: Vec<Vec<EnvElement>>) -> Result<Self> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::Shape(format!("matrix is not square ({k} rows)")));
        }
        let entries: Vec<EnvElement> = rows.into_iter().flatten().collect();
        if let Some(first) = entries.first() {
            let ctx = first.context();
            if let Some(bad) = entries.iter().find(|x| x.context() != ctx) {
                let c = bad.context();
                return Err(Error::ContextMismatch(ctx.m, ctx.n, c.m, c.n));
            }
        }
        Ok(Matrix { k, entries })
    }
}

static CDET_LIMIT: AtomicUsize = AtomicUsize::new(5);

/// Largest dimension accepted by the named Capelli constructors.
pub fn cdet_limit() -> usize {
    CDET_LIMIT.load(Ordering::Relaxed)
}

/// Raise or lower the guard returned by [`cdet_limit`].
pub fn set_cdet_limit(n: usize) {
    CDET_LIMIT.store(n, Ordering::Relaxed);
}

pub(crate) fn check_limit(n: usize) -> Result<()> {
    let lim = cdet_limit();
    if n > lim {
        return Err(Error::Range(format!("n = {n} exceeds the column determinant guard {lim}")));
    }
    Ok(())
}

/// `cdet(A) = Σ_σ sgn(σ) a_{σ(1),1} a_{σ(2),2} ⋯ a_{σ(k),k}`.
///
/// Expanded from the last column backwards: the partial sums over the rows
/// still unused are shared between all permutations with the same tail,
/// so the cost is `k·2^k` products rather than `k!·k`. The empty matrix
/// has determinant 1, which needs a prototype entry; callers pass `one`.
pub fn cdet_with<R: NcRing>(a: &Matrix<R>, one: &R) -> R {
    let k = a.dim();
    if k == 0 {
        return one.clone();
    }
    // tail[mask] = Σ over bijections from rows `mask` to the last |mask|
    // columns, with the sign of the induced ordering.
    let full = (1usize << k) - 1;
    let mut tail: Vec<Option<R>> = vec![None; 1 << k];
    tail[0] = Some(one.clone());
    for col in (0..k).rev() {
        let size = k - col;
        for mask in 0..=full {
            if mask.count_ones() as usize != size {
                continue;
            }
            let mut acc: Option<R> = None;
            for i in 0..k {
                if mask & (1 << i) == 0 {
                    continue;
                }
                let rest = mask & !(1 << i);
                let Some(t) = &tail[rest] else { continue };
                if t.is_zero() {
                    continue;
                }
                let below = (mask & ((1 << i) - 1)).count_ones();
                let mut term = a.get(i, col).mul(t);
                if below % 2 == 1 {
                    term = term.scale(&-Rat::one());
                }
                acc = Some(match acc {
                    None => term,
                    Some(x) => x.add(&term),
                });
            }
            tail[mask] = Some(acc.unwrap_or_else(|| one.zero_like()));
        }
    }
    tail[full].take().expect("full mask is filled")
}

/// Column determinant of a matrix over `U(gl(m|n))`.
pub fn cdet(a: &EnvMatrix) -> Result<EnvElement> {
    if a.dim() == 0 {
        return Err(Error::Shape("empty matrix has no context; use cdet_with".into()));
    }
    let one = a.get(0, 0).one_like();
    Ok(cdet_with(a, &one))
}

/// Polynomial in one central variable with coefficients in `R`, lowest
/// degree first. Trailing zero coefficients are never stored.
#[derive(Clone)]
pub struct UniPoly<R> {
    zero: R,
    coeffs: Vec<R>,
}

pub type EnvPoly = UniPoly<EnvElement>;

impl<R: NcRing> UniPoly<R> {
    pub fn zero(proto: &R) -> Self {
        UniPoly { zero: proto.zero_like(), coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        UniPoly::from_coeffs(&c.clone(), vec![c])
    }

    /// The variable itself, with coefficient ring taken from `proto`.
    pub fn var(proto: &R) -> Self {
        UniPoly::from_coeffs(proto, vec![proto.zero_like(), proto.one_like()])
    }

    pub fn from_coeffs(proto: &R, coeffs: Vec<R>) -> Self {
        let mut p = UniPoly { zero: proto.zero_like(), coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `Σ c_k (a·s + b)^k`, again as a polynomial in `s`.
    pub fn substitute_linear(&self, a: &Rat, b: &Rat) -> Self {
        let proto = &self.zero;
        let lin = UniPoly::from_coeffs(proto, vec![proto.one_like().scale(b), proto.one_like().scale(a)]);
        let mut out = UniPoly::zero(proto);
        let mut power = UniPoly::constant(proto.one_like());
        for c in &self.coeffs {
            out = out.add(&power.mul(&UniPoly::constant(c.clone())));
            power = power.mul(&lin);
        }
        out
    }

    /// Value at a rational point.
    pub fn eval(&self, t: &Rat) -> R {
        let mut acc = self.zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(t).add(c);
        }
        acc
    }
}

impl<R: NcRing> NcRing for UniPoly<R> {
    fn zero_like(&self) -> Self {
        UniPoly::zero(&self.zero)
    }
    fn one_like(&self) -> Self {
        UniPoly::constant(self.zero.one_like())
    }
    fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        UniPoly::from_coeffs(&self.zero, coeffs)
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return self.zero_like();
        }
        let mut coeffs = vec![self.zero.clone(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a.mul(b);
                if !prod.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&prod);
                }
            }
        }
        UniPoly::from_coeffs(&self.zero, coeffs)
    }
    fn scale(&self, c: &Rat) -> Self {
        UniPoly::from_coeffs(&self.zero, self.coeffs.iter().map(|x| x.scale(c)).collect())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl EnvPoly {
    /// Coefficient-wise PBW equality.
    pub fn equals(&self, other: &EnvPoly) -> Result<bool> {
        let d = self.sub(other);
        for c in d.coeffs() {
            if !c.normalized().is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn context(&self) -> Context {
        self.zero.context()
    }
}

impl<R: NcRing + fmt::Display> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<R: NcRing + fmt::Display> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn ctx2() -> Context {
        Context::gl(2)
    }

    /// Brute force over all permutations, products in the free algebra.
    fn cdet_brute(a: &EnvMatrix) -> EnvElement {
        let k = a.dim();
        let mut out = EnvElement::zero(a.get(0, 0).context());
        for perm in (0..k).permutations(k) {
            let inv = (0..k).tuple_combinations().filter(|&(i, j)| perm[i] > perm[j]).count();
            let mut term = EnvElement::one(out.context());
            for (col, &row) in perm.iter().enumerate() {
                term = &term * a.get(row, col);
            }
            out = &out + &term.scale(&Rat::sign(inv));
        }
        out
    }

    #[test]
    fn one_by_one() {
        let x = EnvElement::e(ctx2(), 1, 2);
        let m = EnvMatrix::new(vec![vec![x.clone()]]).unwrap();
        assert_eq!(cdet(&m).unwrap(), x);
    }

    #[test]
    fn two_by_two_keeps_column_order() {
        let c = ctx2();
        let (a, b, cc, d) = (EnvElement::e(c, 1, 1), EnvElement::e(c, 1, 2), EnvElement::e(c, 2, 1), EnvElement::e(c, 2, 2));
        let m = EnvMatrix::new(vec![vec![a.clone(), b.clone()], vec![cc.clone(), d.clone()]]).unwrap();
        let expect = &(&a * &d) - &(&cc * &b);
        assert!(cdet(&m).unwrap().equals(&expect).unwrap());
    }

    #[test]
    fn capelli_matrix_n2() {
        let c = ctx2();
        let one = EnvElement::one(c);
        let m = EnvMatrix::new(vec![
            vec![&EnvElement::e(c, 1, 1) + &one, EnvElement::e(c, 1, 2)],
            vec![EnvElement::e(c, 2, 1), EnvElement::e(c, 2, 2)],
        ])
        .unwrap();
        let expect = &(&(&EnvElement::e(c, 1, 1) + &one) * &EnvElement::e(c, 2, 2))
            - &(&EnvElement::e(c, 2, 1) * &EnvElement::e(c, 1, 2));
        assert!(cdet(&m).unwrap().equals(&expect).unwrap());
    }

    #[test]
    fn subset_recursion_matches_permutations() {
        let c = Context::gl(3);
        let m = EnvMatrix::from_fn(3, |i, j| {
            let mut x = EnvElement::e(c, i as u16 + 1, j as u16 + 1);
            if i == j {
                x = &x + &EnvElement::scalar(c, Rat::from_int(2 - i as i64));
            }
            x
        });
        assert!(cdet(&m).unwrap().equals(&cdet_brute(&m)).unwrap());
    }

    #[test]
    fn rational_determinant() {
        let m = Matrix::from_fn(3, |i, j| Rat::from_int([[2, 0, 1], [1, 3, 2], [1, 1, 1]][i][j]));
        assert_eq!(cdet_with(&m, &Rat::one()), Rat::from_int(0));
        let m = Matrix::from_fn(2, |i, j| Rat::from_int([[1, 2], [3, 4]][i][j]));
        assert_eq!(cdet_with(&m, &Rat::one()), Rat::from_int(-2));
    }

    #[test]
    fn context_mismatch_rejected() {
        let r = EnvMatrix::new(vec![vec![EnvElement::one(Context::gl(1)), EnvElement::one(Context::gl(2))], vec![
            EnvElement::one(Context::gl(1)),
            EnvElement::one(Context::gl(1)),
        ]]);
        assert!(r.is_err());
    }

    #[test]
    fn polynomial_substitution() {
        // (t^2 + 1) at t = 2s - 1 is 4s^2 - 4s + 2
        let one = Rat::one();
        let p = UniPoly::from_coeffs(&one, vec![Rat::one(), Rat::zero(), Rat::one()]);
        let q = p.substitute_linear(&Rat::from_int(2), &Rat::from_int(-1));
        assert_eq!(q.coeffs(), &[Rat::from_int(2), Rat::from_int(-4), Rat::from_int(4)]);
        assert_eq!(p.eval(&Rat::from_int(3)), Rat::from_int(10));
    }
}
