//! Closed-surface sequences consumed by the quotient recurrences and the
//! final assembly, behind interchangeable backends.

mod brute;
mod derive;

mod file;

use std::collections::BTreeMap;
use std::fmt;

pub use brute::brute_force_precursors;
pub use derive::{derive_recurrence_precursors, recurrence_precursors_unvalidated, validate_precursors};

pub use file::{export_precursors, load_precursors, parse_precursors};

use crate::counts::{Count, SeqId, SeqTable, ZERO};
use crate::error::{Error, Result};

/// The precursor sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sequence {
    /// Rooted sphere maps by (darts, root degree); other vertices r-valent.
    STilde,
    /// Sphere maps with a rooted vertex of degree k and a second vertex of
    /// degree l with a distinguished dart, by (darts, k, l).
    STilde2,
    /// Rooted projective-plane maps by (darts, root degree).
    P,
    /// Same objects as `P`, read where a covered Moebius boundary is
    /// contracted.
    PTilde,
    /// Rooted r-regular Klein-bottle maps by darts.
    Kappa,
    /// Sensed r-regular torus maps by edges.
    TauSensed,
}

impl Sequence {
    pub const ALL: [Sequence; 6] =
        [Sequence::STilde, Sequence::STilde2, Sequence::P, Sequence::PTilde, Sequence::Kappa, Sequence::TauSensed];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::STilde => "s_tilde",
            Sequence::STilde2 => "s_tilde2",
            Sequence::P => "p",
            Sequence::PTilde => "p_tilde",
            Sequence::Kappa => "kappa",
            Sequence::TauSensed => "tau_sensed",
        }
    }

    pub fn from_name(name: &str) -> Option<Sequence> {
        Sequence::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn arity(self) -> usize {
        match self {
            Sequence::STilde | Sequence::P | Sequence::PTilde => 2,
            Sequence::STilde2 => 3,
            Sequence::Kappa | Sequence::TauSensed => 1,
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    BruteForce,
    File,
    DerivedRecurrence,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::BruteForce => "brute_force",
            Backend::File => "file",
            Backend::DerivedRecurrence => "derived_recurrence",
        }
    }
}

/// Bundle of precursor tables, keyed by sequence and regularity.
#[derive(Clone, Debug)]
pub struct PrecursorSet {
    pub backend: Backend,
    tables: BTreeMap<(Sequence, usize), SeqTable>,
}

impl PrecursorSet {
    pub fn new(backend: Backend) -> Self {
        PrecursorSet { backend, tables: BTreeMap::new() }
    }

    pub fn insert(&mut self, seq: Sequence, table: SeqTable) {
        assert_eq!(table.arity, seq.arity(), "arity mismatch for {seq}");
        self.tables.insert((seq, table.id.r), table);
    }

    pub fn table(&self, seq: Sequence, r: usize) -> Option<&SeqTable> {
        self.tables.get(&(seq, r))
    }

    pub fn tables(&self) -> impl Iterator<Item = (Sequence, &SeqTable)> {
        self.tables.iter().map(|(&(s, _), t)| (s, t))
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    /// Highest fully known first index of a sequence, if any.
    pub fn range(&self, seq: Sequence, r: usize) -> Option<usize> {
        self.table(seq, r).and_then(SeqTable::frontier)
    }

    pub fn get(&self, seq: Sequence, r: usize, index: &[i64]) -> Result<&Count> {
        match self.table(seq, r) {
            Some(t) => t.get(index),
            None if index.iter().any(|&i| i < 0) => Ok(&ZERO),
            None => Err(Error::ProviderExhausted { sequence: SeqId::new(seq.name(), r).to_string(), index: index.to_vec() }),
        }
    }

    /// Copy every table of `other` into this set, replacing same-keyed ones.
    pub fn merge(&mut self, other: PrecursorSet) {
        self.tables.extend(other.tables);
    }
}

/// Exact agreement of two tables on their common known range; returns the
/// first differing index.
pub fn first_disagreement(a: &SeqTable, b: &SeqTable) -> Option<Vec<usize>> {
    let common = a.frontier()?.min(b.frontier()?);
    let mut keys: Vec<Vec<usize>> = a.entries().into_iter().chain(b.entries()).map(|(k, _)| k).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().filter(|k| k[0] <= common).find(|k| {
        let idx: Vec<i64> = k.iter().map(|&i| i as i64).collect();
        a.get(&idx).ok() != b.get(&idx).ok()
    })
}
