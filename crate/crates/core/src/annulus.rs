//! Quotient maps on the annulus and their totals.

use num_traits::Zero;

use crate::counts::{fraction, to_count, Count, Fraction};
use crate::error::Result;
use crate::precursors::{PrecursorSet, Sequence};
use crate::quotient::{single, Classes, Ctx, Family, QuotientTables, Src};

const S: Src = Src::Pre(Sequence::STilde);
const DOUT: Src = Src::F(Family::DiscOut);
const DIN: Src = Src::F(Family::DiscIn);
const COUT: Src = Src::F(Family::AnnulusOut);

/// Root on a boundary with no edge along it.
pub fn annulus_out(r: usize, n: i64, d: i64, pre: &PrecursorSet) -> Result<Count> {
    single(Family::AnnulusOut, r, n, d, pre)
}

/// Interior root.
pub fn annulus_in(r: usize, n: i64, d: i64, pre: &PrecursorSet) -> Result<Count> {
    single(Family::AnnulusIn, r, n, d, pre)
}

pub(crate) fn out_entry(c: &Ctx, n: i64, d: i64) -> Result<Count> {
    if d == 0 {
        return Ok(Count::zero());
    }
    let (g, b) = (c.gain(), c.step());
    let mut v = c.f(Family::AnnulusOut, n - 2, d + g)? + c.f(Family::AnnulusOut, n - 1, d - 1)?;
    // root edge crosses to the other boundary
    v += c.f(Family::DiscOne, n - b, d - 1)?;
    v += c.f(Family::AnnulusOut, n - b, d)?;
    v += c.chain(DOUT, COUT, n, d)?;
    v += c.chain(COUT, DOUT, n, d)?;
    v += c.loops(S, COUT, n, d)?;
    // loop around the hole
    v += c.loops(DOUT, DIN, n, d)?;
    Ok(v)
}

pub(crate) fn in_entry(c: &Ctx, n: i64, d: i64) -> Result<Count> {
    if d == 0 {
        return Ok(Count::zero());
    }
    let (g, b) = (c.gain(), c.step());
    let mut v = c.f(Family::AnnulusIn, n - 2, d + g)? + c.f(Family::AnnulusOut, n - 1, d - 1)?;
    v += c.f(Family::AnnulusOut, n - b, d)? * 2u32;
    v += c.loops(S, Src::F(Family::AnnulusIn), n, d)? * 2u32;
    v += c.loops(DIN, DIN, n, d)?;
    Ok(v)
}

/// All rooted annulus quotient maps with `n` semi-edges, by class.
///
/// r = 4: no covered boundary, one boundary covered by edges (contracted
/// to the root of a disc map), both covered (contracted to the two roots of
/// a sphere map). r = 3: interior root, boundary root.
pub fn annulus_classes(q: &QuotientTables, pre: &PrecursorSet, n: usize) -> Result<Classes> {
    let c = q.ctx(pre, n)?;
    let n = n as i64;
    if q.r == 3 {
        let interior = c.f(Family::AnnulusIn, n, 3)?.clone();
        let boundary = c.f(Family::AnnulusOut, n - 1, 2)? * 3u32;
        return Ok(Classes::new(vec![("interior_root", interior), ("boundary_root", boundary)]));
    }
    let uncovered = c.f(Family::AnnulusIn, n, 4)? + c.f(Family::AnnulusOut, n, 2)? * 2u32;
    let mut one = Fraction::zero();
    for k in 1..=n {
        let x = c.f(Family::DiscIn, n - k, k)?;
        if !x.is_zero() {
            one += fraction(&(x * n as u64), k as u64);
        }
    }
    let mut two = Fraction::zero();
    for k in 1..=n {
        for l in 1..=(n - k) {
            let x = c.precursor(Sequence::STilde2, &[n - k - l, k, l])?;
            if !x.is_zero() {
                two += fraction(&(x * n as u64), (2 * k * l) as u64);
            }
        }
    }
    Ok(Classes::new(vec![
        ("uncovered", uncovered),
        ("one_covered", to_count(&one, &format!("annulus class one_covered, r=4, n={n}"))?),
        ("two_covered", to_count(&two, &format!("annulus class two_covered, r=4, n={n}"))?),
    ]))
}

/// Total number of rooted annulus quotient maps with `n` semi-edges.
pub fn annulus_total(r: usize, n: usize, pre: &PrecursorSet) -> Result<Count> {
    let q = QuotientTables::build(r, n, pre)?;
    Ok(annulus_classes(&q, pre, n)?.total)
}
