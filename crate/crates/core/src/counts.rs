//! Exact counts, indexed sequence tables and the number-theoretic helpers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Every enumeration result is an exact nonnegative integer.
pub type Count = BigUint;

/// Transient accumulator for weighted sums such as `n/k * x`.
pub type Fraction = BigRational;

pub static ZERO: Count = BigUint::ZERO;

/// `a - b`, failing instead of going negative.
pub fn checked_sub(a: &Count, b: &Count) -> Result<Count> {
    if b > a {
        return Err(Error::NegativeCount);
    }
    Ok(a - b)
}

/// Euler's totient.
pub fn totient(l: u64) -> Result<u64> {
    if l == 0 {
        return Err(Error::Domain("totient of 0".into()));
    }
    let mut n = l;
    let mut phi = l;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    Ok(phi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    All,
}

/// Ascending divisors of `n` whose own parity matches.
pub fn divisors(n: u64, parity: Parity) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small.retain(|d| match parity {
        Parity::Odd => d % 2 == 1,
        Parity::Even => d % 2 == 0,
        Parity::All => true,
    });
    small
}

/// `a / b` when `b` divides `a`.
pub fn exact_div(a: &Count, b: u64, context: &str) -> Result<Count> {
    if b == 0 {
        return Err(Error::Domain(format!("{context}: division by zero")));
    }
    let (q, rem) = a.div_rem(&Count::from(b));
    if !rem.is_zero() {
        return Err(Error::Integrality { context: context.into(), value: a.to_string(), divisor: b.to_string() });
    }
    Ok(q)
}

/// Reduce an accumulated fraction to a count.
pub fn to_count(value: &Fraction, context: &str) -> Result<Count> {
    let value = value.reduced();
    if !value.denom().is_one() {
        return Err(Error::Integrality {
            context: context.into(),
            value: value.numer().to_string(),
            divisor: value.denom().to_string(),
        });
    }
    value.numer().to_biguint().ok_or(Error::NegativeCount)
}

pub fn fraction(numer: &Count, denom: u64) -> Fraction {
    Fraction::new(numer.clone().into(), Count::from(denom).into())
}

/// Name of a sequence together with the regularity it was computed for.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqId {
    pub name: String,
    pub r: usize,
}

impl SeqId {
    pub fn new(name: &str, r: usize) -> Self {
        SeqId { name: name.into(), r }
    }
}

impl fmt::Display for SeqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[r={}]", self.name, self.r)
    }
}

/// Memo table over index tuples of fixed arity, stored row by row on the
/// first index.
///
/// Every index whose first component is at most `frontier` is known;
/// absent entries there are zero. Reads past the frontier fail, reads
/// with a negative component are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqTable {
    pub id: SeqId,
    pub arity: usize,
    rows: Vec<BTreeMap<[usize; 2], Count>>,
    frontier: Option<usize>,
}

impl SeqTable {
    pub fn new(id: SeqId, arity: usize) -> Self {
        assert!((1..=3).contains(&arity), "arity must be 1, 2 or 3");
        SeqTable { id, arity, rows: Vec::new(), frontier: None }
    }

    pub fn frontier(&self) -> Option<usize> {
        self.frontier
    }

    /// Declare every index with first component `<= n` as known.
    pub fn advance_frontier(&mut self, n: usize) {
        self.frontier = Some(self.frontier.map_or(n, |f| f.max(n)));
    }

    fn split(&self, index: &[usize]) -> (usize, [usize; 2]) {
        assert_eq!(index.len(), self.arity, "{} has arity {}", self.id, self.arity);
        let mut rest = [0; 2];
        rest[..index.len() - 1].copy_from_slice(&index[1..]);
        (index[0], rest)
    }

    /// Store a value. Zeros are not stored; a differing rewrite panics.
    pub fn set(&mut self, index: &[usize], value: Count) {
        let (first, rest) = self.split(index);
        if self.rows.len() <= first {
            self.rows.resize_with(first + 1, BTreeMap::new);
        }
        let row = &mut self.rows[first];
        if value.is_zero() {
            assert!(!row.contains_key(&rest), "{} rewritten at {index:?}", self.id);
            return;
        }
        if let Some(old) = row.insert(rest, value.clone()) {
            assert_eq!(old, value, "{} rewritten at {index:?}", self.id);
        }
    }

    pub fn get(&self, index: &[i64]) -> Result<&Count> {
        if index.iter().any(|&i| i < 0) {
            return Ok(&ZERO);
        }
        let first = index[0] as usize;
        if !self.frontier.is_some_and(|f| first <= f) {
            return Err(Error::ProviderExhausted { sequence: self.id.to_string(), index: index.to_vec() });
        }
        let idx: Vec<usize> = index.iter().map(|&i| i as usize).collect();
        let (_, rest) = self.split(&idx);
        Ok(self.rows.get(first).and_then(|row| row.get(&rest)).unwrap_or(&ZERO))
    }

    /// Nonzero entries with the given first index, ordered by the rest.
    pub fn row(&self, first: usize) -> impl Iterator<Item = ([usize; 2], &Count)> + '_ {
        self.rows.get(first).into_iter().flat_map(|row| row.iter().map(|(k, v)| (*k, v)))
    }

    /// Nonzero entries in lexicographic index order.
    pub fn entries(&self) -> Vec<(Vec<usize>, &Count)> {
        let mut out = Vec::new();
        for (first, row) in self.rows.iter().enumerate() {
            for (rest, v) in row {
                let mut idx = vec![first];
                idx.extend_from_slice(&rest[..self.arity - 1]);
                out.push((idx, v));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
