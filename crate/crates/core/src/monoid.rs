//! Finite unital monoids given by multiplication tables.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monoid {
    size: usize,
    unit: usize,
    table: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonoidViolation {
    /// `unit·x != x` or `x·unit != x`.
    Unit(usize),
    /// `(a·b)·c != a·(b·c)`.
    Associativity(usize, usize, usize),
}

impl Monoid {
    /// Checks shapes and index ranges only; use [`validate_monoid`] for the laws.
    pub fn new(unit: usize, table: Vec<Vec<usize>>) -> Result<Monoid> {
        let size = table.len();
        if size == 0 {
            return Err(Error::malformed("monoid must have at least one element"));
        }
        if unit >= size {
            return Err(Error::malformed(format!("unit {} out of range", unit)));
        }
        let mut flat = Vec::with_capacity(size * size);
        for (a, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::malformed(format!("table row {} has length {}, expected {}", a, row.len(), size)));
            }
            for (b, &x) in row.iter().enumerate() {
                if x >= size {
                    return Err(Error::malformed(format!("table[{}][{}] = {} out of range", a, b, x)));
                }
                flat.push(x);
            }
        }
        Ok(Monoid { size, unit, table: flat })
    }

    pub fn trivial() -> Monoid {
        Monoid { size: 1, unit: 0, table: vec![0] }
    }

    /// Cyclic group of order `n`, element `k` standing for `g^k`.
    pub fn cyclic(n: usize) -> Monoid {
        assert!(n > 0);
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Monoid { size: n, unit: 0, table }
    }

    /// `{1, z}` with `z·z = z`.
    pub fn idempotent_pair() -> Monoid {
        Monoid { size: 2, unit: 0, table: vec![0, 1, 1, 1] }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Left fold of a nonempty word.
    pub fn product_word(&self, word: &[usize]) -> Result<usize> {
        let (&first, rest) = word.split_first().ok_or_else(|| Error::precondition("empty word"))?;
        if let Some(&bad) = word.iter().find(|&&x| x >= self.size) {
            return Err(Error::malformed(format!("element {} out of range", bad)));
        }
        Ok(rest.iter().fold(first, |acc, &x| self.mul(acc, x)))
    }

    /// Like `product_word` but the empty word evaluates to the unit.
    pub fn fold(&self, word: &[usize]) -> usize {
        word.iter().fold(self.unit, |acc, &x| self.mul(acc, x))
    }

    /// Number of words of length `n`.
    pub fn tuple_count(&self, n: usize) -> usize {
        self.size.pow(n as u32)
    }

    /// The `idx`-th word of length `n` in lexicographic order.
    pub fn tuple(&self, n: usize, mut idx: usize) -> Vec<usize> {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = idx % self.size;
            idx /= self.size;
        }
        t
    }

    pub fn tuple_index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.size + x)
    }
}

/// Returns the first violated law: unit failures are reported before
/// associativity, and triples are scanned lexicographically.
pub fn validate_monoid(m: &Monoid) -> core::result::Result<(), MonoidViolation> {
    for x in 0..m.size {
        if m.mul(m.unit, x) != x || m.mul(x, m.unit) != x {
            return Err(MonoidViolation::Unit(x));
        }
    }
    for a in 0..m.size {
        for b in 0..m.size {
            for c in 0..m.size {
                if m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)) {
                    return Err(MonoidViolation::Associativity(a, b, c));
                }
            }
        }
    }
    Ok(())
}
