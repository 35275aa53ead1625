//! Reflexible and unsensed torus counts from quotient totals, Klein-bottle
//! counts and sensed counts.

use std::fmt;

use num_traits::Zero;

use crate::annulus::annulus_classes;
use crate::counts::{divisors, exact_div, totient, Count, Parity};
use crate::error::{Error, Result};
use crate::moebius::moebius_classes;
use crate::precursors::{PrecursorSet, Sequence};
use crate::quotient::{check_r, QuotientTables};

/// Orientation-reversing cyclic orbifolds of the torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbifoldKind {
    Annulus,
    KleinBottle,
    MoebiusBand,
    DiscTwoBranch,
    ProjPlaneTwoBranch,
}

impl OrbifoldKind {
    pub const ALL: [OrbifoldKind; 5] = [
        OrbifoldKind::Annulus,
        OrbifoldKind::KleinBottle,
        OrbifoldKind::MoebiusBand,
        OrbifoldKind::DiscTwoBranch,
        OrbifoldKind::ProjPlaneTwoBranch,
    ];
}

/// Order- and orientation-preserving epimorphisms from the orbifold group
/// onto the cyclic group of order 2l.
pub fn epi_count(o: OrbifoldKind, l: u64) -> Result<Count> {
    let phi = totient(l)?;
    let odd = l % 2 == 1;
    Ok(Count::from(match o {
        OrbifoldKind::Annulus | OrbifoldKind::MoebiusBand if odd => phi,
        OrbifoldKind::KleinBottle if odd => phi,
        OrbifoldKind::KleinBottle => 4 * phi,
        _ => 0,
    }))
}

/// Semi-edge count at which the quotient totals are read for a symmetry of
/// order 2l of a map with n edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum QuotientIndex {
    /// Annulus and Moebius totals at n / l; agrees with enumeration.
    #[default]
    SemiEdges,
    /// Annulus and Moebius totals at 2n / l.
    Doubled,
}

/// One census line. For odd r, `vertices` is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub r: usize,
    pub vertices: usize,
    pub edges: usize,
    pub sensed: Count,
    pub reflexible: Count,
    pub unsensed: Count,
}

impl fmt::Display for CensusRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r={} vertices={} edges={} sensed={} reflexible={} unsensed={}",
            self.r, self.vertices, self.edges, self.sensed, self.reflexible, self.unsensed
        )
    }
}

/// Number of edges of an r-regular map with the given number of vertices.
pub fn edges_for(r: usize, vertices: usize) -> Result<usize> {
    if vertices == 0 {
        return Err(Error::Domain("a map needs at least one vertex".into()));
    }
    if (r * vertices) % 2 == 1 {
        return Err(Error::Domain(format!("no {r}-regular map has {vertices} vertices")));
    }
    Ok(r * vertices / 2)
}

/// Vertex count of table row `v`: v for even r, 2v for odd r.
pub fn row_vertices(r: usize, v: usize) -> usize {
    if r % 2 == 1 {
        2 * v
    } else {
        v
    }
}

/// Quotient tables grown on demand over one precursor set.
pub struct Assembly<'a> {
    pub r: usize,
    pub index: QuotientIndex,
    pre: &'a PrecursorSet,
    tables: QuotientTables,
}

impl<'a> Assembly<'a> {
    pub fn new(r: usize, pre: &'a PrecursorSet) -> Result<Self> {
        Ok(Assembly { r, index: QuotientIndex::default(), pre, tables: QuotientTables::new(r)? })
    }

    pub fn with_index(mut self, index: QuotientIndex) -> Self {
        self.index = index;
        self
    }

    /// `(C, M)` at `m` semi-edges.
    pub fn quotient_totals(&mut self, m: usize) -> Result<(Count, Count)> {
        if self.tables.level().is_none_or(|l| l < m) {
            self.tables.extend_to(m, self.pre)?;
        }
        let c = annulus_classes(&self.tables, self.pre, m)?.total;
        let mm = moebius_classes(&self.tables, self.pre, m)?.total;
        Ok((c, mm))
    }

    /// Maps with `n` edges admitting an orientation-reversing automorphism.
    pub fn reflexible(&mut self, n: usize) -> Result<Count> {
        if n == 0 {
            return Err(Error::Domain("edge count must be positive".into()));
        }
        let mut sum = Count::zero();
        for l in divisors(n as u64, Parity::All) {
            let m = n / l as usize;
            let klein = epi_count(OrbifoldKind::KleinBottle, l)?;
            if !klein.is_zero() {
                sum += klein * self.pre.get(Sequence::Kappa, self.r, &[m as i64])?;
            }
            let annulus = epi_count(OrbifoldKind::Annulus, l)?;
            let band = epi_count(OrbifoldKind::MoebiusBand, l)?;
            if annulus.is_zero() && band.is_zero() {
                continue;
            }
            let q = match self.index {
                QuotientIndex::SemiEdges => m,
                QuotientIndex::Doubled => 2 * m,
            };
            let (c, mm) = self.quotient_totals(q)?;
            sum += annulus * c + band * mm;
        }
        exact_div(&sum, 2 * n as u64, &format!("reflexible count r={} n={n}", self.r))
    }

    /// Full census line for maps with `n` edges.
    pub fn row(&mut self, n: usize) -> Result<CensusRow> {
        let reflexible = self.reflexible(n)?;
        let sensed = self.pre.get(Sequence::TauSensed, self.r, &[n as i64])?.clone();
        if reflexible > sensed {
            return Err(Error::Inconsistent(format!(
                "r={} n={n}: reflexible {reflexible} exceeds sensed {sensed}",
                self.r
            )));
        }
        let unsensed = exact_div(&(&sensed + &reflexible), 2, &format!("unsensed count r={} n={n}", self.r))?;
        Ok(CensusRow { r: self.r, vertices: 2 * n / self.r, edges: n, sensed, reflexible, unsensed })
    }
}

pub fn reflexible_count(r: usize, n: usize, pre: &PrecursorSet) -> Result<Count> {
    Assembly::new(r, pre)?.reflexible(n)
}

pub fn unsensed_count(r: usize, n: usize, pre: &PrecursorSet) -> Result<CensusRow> {
    Assembly::new(r, pre)?.row(n)
}

/// Completed rows and the first row that failed, if any.
#[derive(Clone, Debug)]
pub struct CensusTable {
    pub r: usize,
    pub rows: Vec<CensusRow>,
    pub uncovered: Option<(usize, Error)>,
}

/// Rows v = 1..=v_max; for odd r row v has 2v vertices. Stops at the first
/// row that cannot be computed.
pub fn census_table(r: usize, v_max: usize, pre: &PrecursorSet) -> Result<CensusTable> {
    census_table_with(r, v_max, pre, QuotientIndex::default())
}

pub fn census_table_with(r: usize, v_max: usize, pre: &PrecursorSet, index: QuotientIndex) -> Result<CensusTable> {
    check_r(r)?;
    if v_max == 0 {
        return Err(Error::Domain("v_max must be at least 1".into()));
    }
    let mut asm = Assembly::new(r, pre)?.with_index(index);
    let mut table = CensusTable { r, rows: Vec::new(), uncovered: None };
    for v in 1..=v_max {
        let n = edges_for(r, row_vertices(r, v))?;
        match asm.row(n) {
            Ok(row) => table.rows.push(row),
            Err(e) => {
                table.uncovered = Some((v, e));
                break;
            }
        }
    }
    Ok(table)
}
