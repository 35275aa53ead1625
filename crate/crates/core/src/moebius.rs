//! Quotient maps on the Moebius band and their totals.

use num_traits::Zero;

use crate::counts::{fraction, to_count, Count, Fraction};
use crate::error::Result;
use crate::precursors::{PrecursorSet, Sequence};
use crate::quotient::{single, Classes, Ctx, Family, QuotientTables, Src};

const S: Src = Src::Pre(Sequence::STilde);
const DOUT: Src = Src::F(Family::DiscOut);
const DIN: Src = Src::F(Family::DiscIn);
const MOUT: Src = Src::F(Family::MoebiusOut);

/// Projective-plane factor: `p` for r = 4, `p_tilde` for r = 3.
fn projective(c: &Ctx) -> Src {
    Src::Pre(if c.r == 4 { Sequence::P } else { Sequence::PTilde })
}

/// Root on the boundary with no edge along it.
pub fn moebius_out(r: usize, n: i64, d: i64, pre: &PrecursorSet) -> Result<Count> {
    single(Family::MoebiusOut, r, n, d, pre)
}

/// Interior root.
pub fn moebius_in(r: usize, n: i64, d: i64, pre: &PrecursorSet) -> Result<Count> {
    single(Family::MoebiusIn, r, n, d, pre)
}

pub(crate) fn out_entry(c: &Ctx, n: i64, d: i64) -> Result<Count> {
    if d == 0 {
        return Ok(Count::zero());
    }
    let (g, b) = (c.gain(), c.step());
    let mut v = c.f(Family::MoebiusOut, n - 2, d + g)? + c.f(Family::MoebiusOut, n - 1, d - 1)?;
    v += c.f(Family::MoebiusOut, n - b, d)?;
    v += c.chain(DOUT, MOUT, n, d)?;
    v += c.chain(MOUT, DOUT, n, d)?;
    // root edge crosses the cross-cap to the boundary
    v += c.f(Family::DiscOne, n - b, d - 1)?;
    v += c.loops(S, MOUT, n, d)?;
    v += c.loops(DOUT, projective(c), n, d)?;
    // one-sided loop
    v += c.f(Family::DiscOut, n - 2, d - 2)? * (d - 1) as u64;
    Ok(v)
}

pub(crate) fn in_entry(c: &Ctx, n: i64, d: i64) -> Result<Count> {
    if d == 0 {
        return Ok(Count::zero());
    }
    let (g, b) = (c.gain(), c.step());
    let mut v = c.f(Family::MoebiusIn, n - 2, d + g)? + c.f(Family::MoebiusOut, n - 1, d - 1)?;
    v += c.f(Family::MoebiusOut, n - b, d)? * 2u32;
    let loops = c.loops(S, Src::F(Family::MoebiusIn), n, d)? + c.loops(DIN, projective(c), n, d)?;
    v += loops * 2u32;
    v += c.f(Family::DiscIn, n - 2, d - 2)? * (d - 1) as u64;
    Ok(v)
}

/// All rooted Moebius quotient maps with `n` semi-edges, by class.
///
/// r = 4: boundary not covered, boundary covered by edges (contracted to
/// the root of a projective-plane map). r = 3: interior root, boundary root.
pub fn moebius_classes(q: &QuotientTables, pre: &PrecursorSet, n: usize) -> Result<Classes> {
    let c = q.ctx(pre, n)?;
    let n = n as i64;
    if q.r == 3 {
        let interior = c.f(Family::MoebiusIn, n, 3)?.clone();
        let boundary = c.f(Family::MoebiusOut, n - 1, 2)? * 3u32;
        return Ok(Classes::new(vec![("interior_root", interior), ("boundary_root", boundary)]));
    }
    let uncovered = c.f(Family::MoebiusIn, n, 4)? + c.f(Family::MoebiusOut, n, 2)? * 2u32;
    let mut one = Fraction::zero();
    for k in 1..=n {
        let x = c.precursor(Sequence::PTilde, &[n - k, k])?;
        if !x.is_zero() {
            one += fraction(&(x * n as u64), k as u64);
        }
    }
    Ok(Classes::new(vec![
        ("uncovered", uncovered),
        ("covered", to_count(&one, &format!("moebius class covered, r=4, n={n}"))?),
    ]))
}

/// Total number of rooted Moebius quotient maps with `n` semi-edges.
pub fn moebius_total(r: usize, n: usize, pre: &PrecursorSet) -> Result<Count> {
    let q = QuotientTables::build(r, n, pre)?;
    Ok(moebius_classes(&q, pre, n)?.total)
}
