//! Hash-consed words of generators.
//!
//! Every distinct sequence of generators is stored once in a global table, so
//! a [`Word`] is a pointer: equality and hashing are O(1). Ordering compares
//! contents, which keeps printed output deterministic.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::sync::Arc;

use dashmap::DashSet;
use once_cell::sync::Lazy;
use rustc_hash::FxBuildHasher;

use super::symbol::Generator;

static INTERNER: Lazy<DashSet<Arc<[Generator]>, FxBuildHasher>> =
    Lazy::new(|| DashSet::with_hasher(FxBuildHasher));

static EMPTY: Lazy<Word> = Lazy::new(|| Word::intern(&[]));

/// An interned, immutable product of generators.
#[derive(Clone)]
pub struct Word(Arc<[Generator]>);

impl Word {
    pub fn intern(gens: &[Generator]) -> Word {
        if let Some(w) = INTERNER.get(gens) {
            return Word(w.key().clone());
        }
        let arc: Arc<[Generator]> = Arc::from(gens);
        // Another thread may have inserted meanwhile; keep whichever won.
        if !INTERNER.insert(arc.clone()) {
            return Word(INTERNER.get(gens).expect("just inserted").key().clone());
        }
        Word(arc)
    }

    /// The empty word, the multiplicative identity.
    pub fn empty() -> Word {
        EMPTY.clone()
    }

    pub fn single(g: Generator) -> Word {
        Word::intern(&[g])
    }

    pub fn gens(&self) -> &[Generator] {
        &self.0
    }

    /// ℤ₂-degree of the product.
    pub fn parity(&self) -> u8 {
        self.0.iter().fold(0, |p, g| p ^ g.parity())
    }

    pub fn concat(&self, other: &Word) -> Word {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(self);
        v.extend_from_slice(other);
        Word::intern(&v)
    }

    pub fn prepend(&self, g: Generator) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(g);
        v.extend_from_slice(self);
        Word::intern(&v)
    }

    /// The word without its first `k` factors.
    pub fn tail(&self, k: usize) -> Word {
        Word::intern(&self.0[k..])
    }

    /// Number of distinct words interned so far.
    pub fn interned_count() -> usize {
        INTERNER.len()
    }
}

impl Deref for Word {
    type Target = [Generator];
    fn deref(&self) -> &[Generator] {
        &self.0
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (Arc::as_ptr(&self.0) as *const Generator as usize).hash(state);
    }
}

impl Ord for Word {
    /// Shorter words first, then lexicographic; consistent with `Eq` because
    /// equal contents share one allocation.
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for g in self.iter() {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ugl::symbol::e;

    #[test]
    fn interning_shares_allocations() {
        let a = Word::intern(&[e(1, 2), e(2, 1)]);
        let b = Word::single(e(1, 2)).concat(&Word::single(e(2, 1)));
        assert_eq!(a, b);
        assert!(Arc::ptr_eq(&a.0, &b.0));
        assert_ne!(a, Word::intern(&[e(2, 1), e(1, 2)]));
    }

    #[test]
    fn empty_is_identity() {
        let w = Word::single(e(1, 1));
        assert_eq!(Word::empty().concat(&w), w);
        assert_eq!(w.concat(&Word::empty()), w);
        assert_eq!(Word::intern(&[]), Word::empty());
    }

    #[test]
    fn parity_adds() {
        use crate::ugl::symbol::{Generator, Symbol};
        let odd = Generator::new(Symbol::proper(1), Symbol::virt(1));
        assert_eq!(Word::intern(&[odd, e(1, 2)]).parity(), 1);
        assert_eq!(Word::intern(&[odd, odd]).parity(), 0);
    }
}
