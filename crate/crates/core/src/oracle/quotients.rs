//! Rooted quotient maps on the disc, annulus and Moebius band, and the
//! closed-surface sequences the recurrences consume, all by exhaustive
//! flag-model generation.
//!
//! Index conventions: `n` is the number of semi-edges with boundary darts
//! weighted one half (always `flags / 2`), `d` the weighted root degree.

use std::collections::BTreeMap;

use super::flags::{count_by_root, generate, FamilySpec, RootVertex, Surface, VertexRules};
use crate::error::Result;
use crate::quotient::Family;

fn surface(family: Family) -> Surface {
    match family {
        Family::DiscOut | Family::DiscIn | Family::DiscOne => Surface::Disc,
        Family::AnnulusOut | Family::AnnulusIn => Surface::Annulus,
        Family::MoebiusOut | Family::MoebiusIn => Surface::MoebiusBand,
    }
}

fn rules(family: Family, r: usize) -> VertexRules {
    VertexRules {
        regular: r,
        // even r: these families have no edge along the boundary
        boundary_darts: r % 2 == 1,
        root: Some(if family.root_on_boundary() { RootVertex::BoundaryCorner } else { RootVertex::Interior }),
        leaves: usize::from(family == Family::DiscOne),
        marked_interior: None,
    }
}

/// Table of a quotient family, `(n, d) -> count`, for all `n <= max_n`.
/// The single boundary vertex of the disc (n = d = 0) is included.
pub fn family_table(family: Family, r: usize, max_n: usize, budget: u64) -> Result<BTreeMap<(usize, usize), u64>> {
    let spec = FamilySpec { surface: surface(family), max_flags: 2 * max_n, vertices: rules(family, r), budget };
    let mut out: BTreeMap<(usize, usize), u64> =
        count_by_root(&spec)?.into_iter().map(|((flags, root), c)| ((flags / 2, root / 2), c)).collect();
    if family == Family::DiscOut {
        out.insert((0, 0), 1);
    }
    Ok(out)
}

/// All rooted quotient maps on the annulus or Moebius band whose lift is
/// r-regular, by weighted semi-edge count.
pub fn quotient_totals(surface: Surface, r: usize, max_n: usize, budget: u64) -> Result<BTreeMap<usize, u64>> {
    closed_or_total(surface, r, max_n, budget)
}

fn closed_or_total(surface: Surface, r: usize, max_n: usize, budget: u64) -> Result<BTreeMap<usize, u64>> {
    let spec = FamilySpec { surface, max_flags: 2 * max_n, vertices: VertexRules::regular(r), budget };
    let mut out = BTreeMap::new();
    generate(&spec, |v| *out.entry(v.map.len() / 2).or_insert(0u64) += 1)?;
    Ok(out)
}

/// Rooted r-regular maps on the Klein bottle by number of darts.
pub fn klein_bottle(r: usize, max_darts: usize, budget: u64) -> Result<BTreeMap<usize, u64>> {
    closed_or_total(Surface::KleinBottle, r, max_darts, budget)
}

/// Rooted maps on a closed surface whose root vertex has free degree and
/// all other vertices degree r: `(darts, root degree) -> count`.
/// The sphere includes the single vertex at (0, 0).
pub fn root_degree_table(surface: Surface, r: usize, max_darts: usize, budget: u64) -> Result<BTreeMap<(usize, usize), u64>> {
    let rules = VertexRules { regular: r, boundary_darts: false, root: Some(RootVertex::Interior), leaves: 0, marked_interior: None };
    let spec = FamilySpec { surface, max_flags: 2 * max_darts, vertices: rules, budget };
    let mut out: BTreeMap<(usize, usize), u64> =
        count_by_root(&spec)?.into_iter().map(|((flags, root), c)| ((flags / 2, root / 2), c)).collect();
    if surface == Surface::Sphere {
        out.insert((0, 0), 1);
    }
    Ok(out)
}

/// Sphere maps with a rooted vertex of degree k and a second, distinct
/// vertex of degree l carrying a distinguished dart; all other vertices
/// have degree r. Keyed by (darts, k, l).
pub fn sphere_two_roots(r: usize, max_darts: usize, budget: u64) -> Result<BTreeMap<(usize, usize, usize), u64>> {
    let mut out = BTreeMap::new();
    // degree of the second vertex is bounded by the dart count
    for l in 1..=max_darts {
        let rules = VertexRules {
            regular: r,
            boundary_darts: false,
            root: Some(RootVertex::Interior),
            leaves: 0,
            marked_interior: Some(l),
        };
        let spec = FamilySpec { surface: Surface::Sphere, max_flags: 2 * max_darts, vertices: rules, budget };
        generate(&spec, |v| {
            let choices = v.others.iter().filter(|s| s.flags == 2 * l).count() * l;
            if choices > 0 {
                *out.entry((v.map.len() / 2, v.root.flags / 2, l)).or_insert(0u64) += choices as u64;
            }
        })?;
    }
    Ok(out)
}
