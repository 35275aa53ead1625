use super::{Backend, PrecursorSet, Sequence};
use crate::counts::{Count, SeqId, SeqTable};
use crate::error::{Error, Result};
use crate::oracle::flags::Surface;
use crate::oracle::{quotients, torus};

fn table_from<I>(seq: Sequence, r: usize, frontier: usize, rows: I) -> SeqTable
where
    I: IntoIterator<Item = (Vec<usize>, u64)>,
{
    let mut t = SeqTable::new(SeqId::new(seq.name(), r), seq.arity());
    t.advance_frontier(frontier);
    for (index, value) in rows {
        if index[0] <= frontier {
            t.set(&index, Count::from(value));
        }
    }
    t
}

/// All precursor sequences by exhaustive generation: closed-surface tables
/// up to `max_n` darts and sensed torus counts up to `max_n` edges.
/// `budget` bounds each individual search.
pub fn brute_force_precursors(r: usize, max_n: usize, budget: u64) -> Result<PrecursorSet> {
    if !(3..=6).contains(&r) {
        return Err(Error::Domain(format!("no brute-force precursors for r={r}")));
    }
    let mut set = PrecursorSet::new(Backend::BruteForce);

    let s = quotients::root_degree_table(Surface::Sphere, r, max_n, budget)?;
    set.insert(Sequence::STilde, table_from(Sequence::STilde, r, max_n, s.into_iter().map(|((n, d), c)| (vec![n, d], c))));

    let s2 = quotients::sphere_two_roots(r, max_n, budget)?;
    let rows = s2.into_iter().map(|((n, k, l), c)| (vec![n, k, l], c));
    set.insert(Sequence::STilde2, table_from(Sequence::STilde2, r, max_n, rows));

    let p = quotients::root_degree_table(Surface::ProjectivePlane, r, max_n, budget)?;
    for seq in [Sequence::P, Sequence::PTilde] {
        let rows = p.iter().map(|(&(n, d), &c)| (vec![n, d], c));
        set.insert(seq, table_from(seq, r, max_n, rows));
    }

    let k = quotients::klein_bottle(r, max_n, budget)?;
    set.insert(Sequence::Kappa, table_from(Sequence::Kappa, r, max_n, k.into_iter().map(|(n, c)| (vec![n], c))));

    let mut tau = Vec::new();
    for v in 1.. {
        if (r * v) % 2 == 1 {
            continue;
        }
        let edges = r * v / 2;
        if edges > max_n {
            break;
        }
        tau.push((vec![edges], torus::census(r, v, 1, budget)?.sensed));
    }
    set.insert(Sequence::TauSensed, table_from(Sequence::TauSensed, r, max_n, tau));
    Ok(set)
}
