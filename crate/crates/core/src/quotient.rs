//! Tables of the rooted quotient-map families on the disc, annulus and
//! Moebius band, filled level by level in the semi-edge count.
//!
//! Indices follow the boundary weighting: a semi-edge along the boundary
//! counts one half, so `n` and the root degree `d` are integers. For r = 3
//! every boundary edge is contracted into the vertex pair it joins, which
//! leaves boundary vertices of degree 2 that carry one hidden semi-edge.

use std::fmt;

use num_traits::Zero;

use crate::counts::{Count, SeqId, SeqTable};
use crate::error::{Error, Result};
use crate::precursors::{PrecursorSet, Sequence};
use crate::{annulus, disc, moebius};

/// Quotient families indexed by (n, d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Disc, root vertex on the boundary.
    DiscOut,
    /// Disc, interior root vertex.
    DiscIn,
    /// Disc, boundary root vertex and one distinguished boundary leaf.
    DiscOne,
    AnnulusOut,
    AnnulusIn,
    MoebiusOut,
    MoebiusIn,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::DiscOut,
        Family::DiscIn,
        Family::DiscOne,
        Family::AnnulusOut,
        Family::AnnulusIn,
        Family::MoebiusOut,
        Family::MoebiusIn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DiscOut => "disc_out",
            Family::DiscIn => "disc_in",
            Family::DiscOne => "disc_one",
            Family::AnnulusOut => "annulus_out",
            Family::AnnulusIn => "annulus_in",
            Family::MoebiusOut => "moebius_out",
            Family::MoebiusIn => "moebius_in",
        }
    }

    pub fn root_on_boundary(self) -> bool {
        matches!(self, Family::DiscOut | Family::DiscOne | Family::AnnulusOut | Family::MoebiusOut)
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn check_r(r: usize) -> Result<()> {
    if r == 3 || r == 4 {
        Ok(())
    } else {
        Err(Error::Domain(format!("quotient recurrences exist only for r = 3 and r = 4, not r = {r}")))
    }
}

/// Operand of a convolution.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Src {
    F(Family),
    Pre(Sequence),
}

/// Read access to everything below the level being filled.
pub(crate) struct Ctx<'a> {
    pub r: usize,
    q: &'a QuotientTables,
    pre: &'a PrecursorSet,
}

impl Ctx<'_> {
    /// Degree gained by the root when an edge to an interior vertex is
    /// contracted.
    pub fn gain(&self) -> i64 {
        self.r as i64 - 2
    }

    /// Semi-edges removed with an edge to a boundary vertex of degree 2.
    pub fn step(&self) -> i64 {
        if self.r == 3 {
            3
        } else {
            2
        }
    }

    fn table(&self, src: Src) -> Result<&SeqTable> {
        match src {
            Src::F(f) => Ok(&self.q.tables[f.slot()]),
            Src::Pre(seq) => self.pre.table(seq, self.r).ok_or_else(|| Error::ProviderExhausted {
                sequence: SeqId::new(seq.name(), self.r).to_string(),
                index: vec![0, 0],
            }),
        }
    }

    pub fn get(&self, src: Src, n: i64, d: i64) -> Result<&Count> {
        if n < 0 || d < 0 {
            return Ok(&crate::counts::ZERO);
        }
        self.table(src)?.get(&[n, d])
    }

    pub fn precursor(&self, seq: Sequence, index: &[i64]) -> Result<&Count> {
        self.pre.get(seq, self.r, index)
    }

    pub fn f(&self, family: Family, n: i64, d: i64) -> Result<&Count> {
        self.get(Src::F(family), n, d)
    }

    /// `sum_i a(i, 1) * b(n - i - step, d - 1)`: the root edge ends at a
    /// boundary vertex and splits the surface.
    pub fn chain(&self, a: Src, b: Src, n: i64, d: i64) -> Result<Count> {
        let mut sum = Count::zero();
        let top = n - self.step();
        if top < 0 || d < 1 {
            return Ok(sum);
        }
        let ta = self.table(a)?;
        for i in 0..=top {
            let x = ta.get(&[i, 1])?;
            if !x.is_zero() {
                sum += x * self.get(b, top - i, d - 1)?;
            }
        }
        Ok(sum)
    }

    /// `sum_{i,j} a(i, j) * b(n - 2 - i, d - 2 - j)`: the root edge is a
    /// loop and contracting it separates two maps.
    pub fn loops(&self, a: Src, b: Src, n: i64, d: i64) -> Result<Count> {
        let mut sum = Count::zero();
        if n < 2 || d < 2 {
            return Ok(sum);
        }
        let ta = self.table(a)?;
        for i in 0..=(n - 2) {
            ta.get(&[i, 0])?;
            for ([j, _], x) in ta.row(i as usize) {
                let j = j as i64;
                if j > d - 2 {
                    break;
                }
                sum += x * self.get(b, n - 2 - i, d - 2 - j)?;
            }
        }
        Ok(sum)
    }
}

/// The seven family tables for one r.
#[derive(Clone, Debug)]
pub struct QuotientTables {
    pub r: usize,
    tables: Vec<SeqTable>,
    level: Option<usize>,
}

impl QuotientTables {
    pub fn new(r: usize) -> Result<Self> {
        check_r(r)?;
        let tables = Family::ALL.iter().map(|f| SeqTable::new(SeqId::new(f.name(), r), 2)).collect();
        Ok(QuotientTables { r, tables, level: None })
    }

    /// Build every family up to `max_n`.
    pub fn build(r: usize, max_n: usize, pre: &PrecursorSet) -> Result<Self> {
        let mut q = QuotientTables::new(r)?;
        q.extend_to(max_n, pre)?;
        Ok(q)
    }

    /// Highest completely filled level.
    pub fn level(&self) -> Option<usize> {
        self.level
    }

    pub fn table(&self, family: Family) -> &SeqTable {
        &self.tables[family.slot()]
    }

    /// Value of a family entry; negative indices read as zero.
    pub fn get(&self, family: Family, n: i64, d: i64) -> Result<&Count> {
        if n < 0 || d < 0 {
            return Ok(&crate::counts::ZERO);
        }
        self.tables[family.slot()].get(&[n, d])
    }

    /// Fill levels in increasing n, and within a level in increasing d,
    /// until `max_n`. Each level only reads lower levels and precursors.
    pub fn extend_to(&mut self, max_n: usize, pre: &PrecursorSet) -> Result<()> {
        let start = self.level.map_or(0, |l| l + 1);
        for n in start..=max_n {
            let mut level = Vec::with_capacity(Family::ALL.len());
            {
                let ctx = Ctx { r: self.r, q: self, pre };
                for family in Family::ALL {
                    let mut row = Vec::with_capacity(n + 1);
                    for d in 0..=n {
                        row.push(entry(&ctx, family, n as i64, d as i64)?);
                    }
                    level.push(row);
                }
            }
            for (family, row) in Family::ALL.into_iter().zip(level) {
                let t = &mut self.tables[family.slot()];
                for (d, value) in row.into_iter().enumerate() {
                    t.set(&[n, d], value);
                }
                t.advance_frontier(n);
            }
            self.level = Some(n);
        }
        Ok(())
    }
}

fn entry(ctx: &Ctx, family: Family, n: i64, d: i64) -> Result<Count> {
    match family {
        Family::DiscOut => disc::out_entry(ctx, n, d),
        Family::DiscIn => disc::in_entry(ctx, n, d),
        Family::DiscOne => disc::one_entry(ctx, n, d),
        Family::AnnulusOut => annulus::out_entry(ctx, n, d),
        Family::AnnulusIn => annulus::in_entry(ctx, n, d),
        Family::MoebiusOut => moebius::out_entry(ctx, n, d),
        Family::MoebiusIn => moebius::in_entry(ctx, n, d),
    }
}

/// A total split into its classes of maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classes {
    pub parts: Vec<(&'static str, Count)>,
    pub total: Count,
}

impl Classes {
    pub fn new(parts: Vec<(&'static str, Count)>) -> Self {
        let total = parts.iter().map(|(_, c)| c).sum();
        Classes { parts, total }
    }
}

impl QuotientTables {
    /// Reader over the filled levels, for totals at level `n`.
    pub(crate) fn ctx<'a>(&'a self, pre: &'a PrecursorSet, n: usize) -> Result<Ctx<'a>> {
        if !self.level.is_some_and(|l| l >= n) {
            return Err(Error::Domain(format!("quotient tables for r={} not built to level {n}", self.r)));
        }
        Ok(Ctx { r: self.r, q: self, pre })
    }
}

/// Build tables just far enough to read one entry.
pub(crate) fn single(family: Family, r: usize, n: i64, d: i64, pre: &PrecursorSet) -> Result<Count> {
    if n < 0 || d < 0 {
        return Ok(Count::zero());
    }
    let q = QuotientTables::build(r, n as usize, pre)?;
    q.get(family, n, d).cloned()
}
