//! Quotient maps on the disc with no edge along the boundary.
//!
//! Seeds: the lone boundary vertex gives `disc_out(0, 0) = 1`. A lone
//! interior vertex is not a disc map, so `disc_in(0, 0) = 0`; neither is a
//! root of degree 0 with edges elsewhere.

use num_traits::{One, Zero};

use crate::counts::Count;
use crate::error::Result;
use crate::precursors::{PrecursorSet, Sequence};
use crate::quotient::{single, Ctx, Family, Src};

const OUT: Src = Src::F(Family::DiscOut);
const ONE: Src = Src::F(Family::DiscOne);
const S: Src = Src::Pre(Sequence::STilde);

/// Root on the boundary; the root semi-edge is the last one around the
/// root in counter-clockwise order.
pub fn disc_out(r: usize, n: i64, d: i64, pre: &PrecursorSet) -> Result<Count> {
    single(Family::DiscOut, r, n, d, pre)
}

/// Interior root.
pub fn disc_in(r: usize, n: i64, d: i64, pre: &PrecursorSet) -> Result<Count> {
    single(Family::DiscIn, r, n, d, pre)
}

/// Boundary root and one distinguished leaf on the boundary.
pub fn disc_one(r: usize, n: i64, d: i64, pre: &PrecursorSet) -> Result<Count> {
    single(Family::DiscOne, r, n, d, pre)
}

pub(crate) fn out_entry(c: &Ctx, n: i64, d: i64) -> Result<Count> {
    if d == 0 {
        return Ok(if n == 0 { Count::one() } else { Count::zero() });
    }
    let (g, b) = (c.gain(), c.step());
    let mut v = c.f(Family::DiscOut, n - 2, d + g)? + c.f(Family::DiscOut, n - 1, d - 1)?;
    v += c.f(Family::DiscOut, n - b, d)?;
    v += c.chain(OUT, OUT, n, d)?;
    v += c.loops(S, OUT, n, d)?;
    Ok(v)
}

pub(crate) fn in_entry(c: &Ctx, n: i64, d: i64) -> Result<Count> {
    if d == 0 {
        return Ok(Count::zero());
    }
    let (g, b) = (c.gain(), c.step());
    let mut v = c.f(Family::DiscIn, n - 2, d + g)? + c.f(Family::DiscOut, n - 1, d - 1)?;
    v += c.f(Family::DiscOut, n - b, d)? * 2u32;
    v += c.loops(S, Src::F(Family::DiscIn), n, d)? * 2u32;
    Ok(v)
}

pub(crate) fn one_entry(c: &Ctx, n: i64, d: i64) -> Result<Count> {
    if d == 0 {
        return Ok(Count::zero());
    }
    let (g, b) = (c.gain(), c.step());
    let mut v = c.f(Family::DiscOne, n - 2, d + g)? + c.f(Family::DiscOne, n - 1, d - 1)?;
    v += c.f(Family::DiscOne, n - b, d)?;
    // root edge ends at the leaf
    v += c.f(Family::DiscOut, n - 2, d - 1)?;
    v += c.chain(OUT, ONE, n, d)?;
    v += c.chain(ONE, OUT, n, d)?;
    v += c.loops(S, ONE, n, d)?;
    Ok(v)
}
