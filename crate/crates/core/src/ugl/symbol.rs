//! Graded symbols, elementary-matrix generators, and the `gl(m|n)` context.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

const VIRTUAL_BIT: u16 = 0x8000;

/// A basis symbol of the superspace `V_0 ⊕ V_1`.
///
/// Proper symbols `1..=n` are odd, virtual symbols `α_1, α_2, …` are even.
/// Proper symbols sort before virtual ones, then by index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u16);

impl Symbol {
    /// Largest index a user-visible symbol may carry.
    pub const MAX_INDEX: u16 = VIRTUAL_BIT - 1;

    /// Proper symbol `i`. Panics if `i` is 0 or exceeds [`Symbol::MAX_INDEX`].
    pub fn proper(i: u16) -> Self {
        assert!((1..=Self::MAX_INDEX).contains(&i), "proper symbol index {i} out of range");
        Symbol(i)
    }

    /// Virtual symbol `α_s`. Panics if `s` is 0 or exceeds [`Symbol::MAX_INDEX`].
    pub fn virt(s: u16) -> Self {
        assert!((1..=Self::MAX_INDEX).contains(&s), "virtual symbol index {s} out of range");
        Symbol(VIRTUAL_BIT | s)
    }

    /// The auxiliary virtual symbol used internally by biproducts. It never
    /// collides with a user symbol because user indices start at 1.
    pub(crate) const fn auxiliary() -> Self {
        Symbol(VIRTUAL_BIT)
    }

    pub fn is_virtual(self) -> bool {
        self.0 & VIRTUAL_BIT != 0
    }

    pub fn is_proper(self) -> bool {
        !self.is_virtual()
    }

    pub fn index(self) -> u16 {
        self.0 & !VIRTUAL_BIT
    }

    /// ℤ₂-degree: 1 for proper, 0 for virtual.
    pub fn parity(self) -> u8 {
        self.is_proper() as u8
    }

    pub(crate) fn raw(self) -> u16 {
        self.0
    }

    pub fn latex(self) -> String {
        if self.is_proper() {
            self.index().to_string()
        } else if self.index() == 0 {
            "\\gamma".to_string()
        } else {
            format!("\\alpha_{{{}}}", self.index())
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_proper() {
            write!(f, "{}", self.index())
        } else if self.index() == 0 {
            write!(f, "γ")
        } else {
            write!(f, "α{}", self.index())
        }
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Wire form of a symbol: `{"kind": "proper"|"virtual", "index": int}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolRepr {
    pub kind: SymbolKind,
    pub index: u16,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolKind {
    Proper,
    Virtual,
}

impl From<Symbol> for SymbolRepr {
    fn from(s: Symbol) -> Self {
        SymbolRepr {
            kind: if s.is_proper() { SymbolKind::Proper } else { SymbolKind::Virtual },
            index: s.index(),
        }
    }
}

impl TryFrom<SymbolRepr> for Symbol {
    type Error = Error;
    fn try_from(r: SymbolRepr) -> Result<Self, Error> {
        if r.index == 0 || r.index > Symbol::MAX_INDEX {
            return Err(Error::Parse(format!("symbol index {} out of range", r.index)));
        }
        Ok(match r.kind {
            SymbolKind::Proper => Symbol::proper(r.index),
            SymbolKind::Virtual => Symbol::virt(r.index),
        })
    }
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymbolRepr::from(*self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = SymbolRepr::deserialize(d)?;
        Symbol::try_from(r).map_err(serde::de::Error::custom)
    }
}

/// The elementary matrix `e_{row,col}` of `gl(m|n)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub row: Symbol,
    pub col: Symbol,
}

/// Shorthand for the proper generator `e_{i,j}`.
pub fn e(i: u16, j: u16) -> Generator {
    Generator::new(Symbol::proper(i), Symbol::proper(j))
}

impl Generator {
    pub fn new(row: Symbol, col: Symbol) -> Self {
        Generator { row, col }
    }

    /// `|e_{a,b}| = |a| + |b|`.
    pub fn parity(self) -> u8 {
        (self.row.parity() + self.col.parity()) & 1
    }

    pub fn is_odd(self) -> bool {
        self.parity() == 1
    }

    pub fn is_proper(self) -> bool {
        self.row.is_proper() && self.col.is_proper()
    }

    /// True when the column is virtual, i.e. the generator consumes a virtual symbol.
    pub fn is_annihilator(self) -> bool {
        self.col.is_virtual()
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }

    pub fn latex(self) -> String {
        format!("e_{{{},{}}}", self.row.latex(), self.col.latex())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e_{{{},{}}}", self.row, self.col)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.row, self.col).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (row, col) = <(Symbol, Symbol)>::deserialize(d)?;
        Ok(Generator { row, col })
    }
}

/// The ambient `gl(m|n)`: `m` virtual symbols and `n` proper symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Context {
    pub m: u16,
    pub n: u16,
}

impl Context {
    pub fn new(m: u16, n: u16) -> Self {
        Context { m, n }
    }

    /// `gl(0|n) = gl(n)`: no virtual symbols.
    pub fn gl(n: u16) -> Self {
        Context { m: 0, n }
    }

    pub fn contains_symbol(&self, s: Symbol) -> bool {
        if s.is_proper() {
            s.index() <= self.n
        } else {
            s.index() >= 1 && s.index() <= self.m
        }
    }

    pub fn contains(&self, g: Generator) -> bool {
        self.contains_symbol(g.row) && self.contains_symbol(g.col)
    }

    pub fn check(&self, g: Generator) -> Result<(), Error> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::OutOfContext { generator: g.to_string(), m: self.m, n: self.n })
        }
    }

    /// All symbols of the context, proper first.
    pub fn symbols(&self) -> Vec<Symbol> {
        (1..=self.n)
            .map(Symbol::proper)
            .chain((1..=self.m).map(Symbol::virt))
            .collect()
    }

    /// All `(m+n)^2` generators.
    pub fn generators(&self) -> Vec<Generator> {
        let syms = self.symbols();
        let mut out = Vec::with_capacity(syms.len() * syms.len());
        for &a in &syms {
            for &b in &syms {
                out.push(Generator::new(a, b));
            }
        }
        out
    }

    /// The smallest context containing both.
    pub fn join(&self, other: &Context) -> Context {
        Context { m: self.m.max(other.m), n: self.n.max(other.n) }
    }
}
