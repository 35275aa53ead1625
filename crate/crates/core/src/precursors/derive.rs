//! Precursor sequences by root-edge decomposition of closed-surface maps.
//!
//! All closed-surface indices count darts; non-root vertices have degree r.
//! Sensed torus counts come from rooted torus maps and rooted sphere maps
//! with branch points, summed over the cyclic orbifolds of the torus.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{first_disagreement, Backend, PrecursorSet, Sequence};
use crate::counts::{exact_div, Count, SeqId, SeqTable, ZERO};
use crate::error::{Error, Result};

/// Dense table over (n, d) with d <= n.
#[derive(Default)]
struct Grid(Vec<Vec<Count>>);

impl Grid {
    fn at(&self, n: i64, d: i64) -> &Count {
        if n < 0 || d < 0 {
            return &ZERO;
        }
        self.0.get(n as usize).and_then(|row| row.get(d as usize)).unwrap_or(&ZERO)
    }

    fn nonzero(&self, n: usize) -> impl Iterator<Item = (i64, &Count)> {
        self.0[n].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(d, c)| (d as i64, c))
    }
}

/// `sum_{i,j} a(i, j) * b(n - 2 - i, d - 2 - j)`.
fn conv(a: &Grid, b: impl Fn(i64, i64) -> Count, n: i64, d: i64) -> Count {
    let mut sum = Count::zero();
    for i in 0..=(n - 2) {
        for (j, x) in a.nonzero(i as usize) {
            if j > d - 2 {
                break;
            }
            let y = b(n - 2 - i, d - 2 - j);
            if !y.is_zero() {
                sum += x * y;
            }
        }
    }
    sum
}

/// Rooted maps on the sphere, projective plane, Klein bottle and torus.
struct Closed {
    g: i64,
    /// sphere, root degree d
    s: Grid,
    /// sphere with a second root of degree l, stored as s2[n][k][l]
    s2: Vec<Vec<Vec<Count>>>,
    p: Grid,
    k: Grid,
    t: Grid,
}

impl Closed {
    fn s2_at(&self, n: i64, k: i64, l: i64) -> &Count {
        if n < 0 || k < 0 || l < 0 {
            return &ZERO;
        }
        self.s2
            .get(n as usize)
            .and_then(|a| a.get(k as usize))
            .and_then(|b| b.get(l as usize))
            .unwrap_or(&ZERO)
    }

    /// `sum_j s2(n, j, d - j)`: the two roots are the ends of a handle edge.
    fn s2_diag(&self, n: i64, d: i64) -> Count {
        (0..=d).map(|j| self.s2_at(n, j, d - j)).sum()
    }

    fn build(r: usize, max_n: usize, with_nonorientable: bool) -> Self {
        let g = r as i64 - 2;
        let mut c = Closed { g, s: Grid::default(), s2: Vec::new(), p: Grid::default(), k: Grid::default(), t: Grid::default() };
        for n in 0..=max_n as i64 {
            let ds: Vec<i64> = (0..=n).collect();
            let s_row: Vec<Count> = ds.par_iter().map(|&d| c.sphere(n, d)).collect();
            let s2_row: Vec<Vec<Count>> =
                ds.par_iter().map(|&k| (0..=n).map(|l| c.sphere_two(n, k, l)).collect()).collect();
            let t_row: Vec<Count> = ds.par_iter().map(|&d| c.torus(n, d)).collect();
            let (p_row, k_row) = if with_nonorientable {
                let p_row: Vec<Count> = ds.par_iter().map(|&d| c.projective(n, d)).collect();
                let k_row: Vec<Count> = ds.par_iter().map(|&d| c.klein(n, d)).collect();
                (p_row, k_row)
            } else {
                (Vec::new(), Vec::new())
            };
            c.s.0.push(s_row);
            c.s2.push(s2_row);
            c.t.0.push(t_row);
            c.p.0.push(p_row);
            c.k.0.push(k_row);
        }
        c
    }

    fn sphere(&self, n: i64, d: i64) -> Count {
        if d == 0 {
            return if n == 0 { Count::one() } else { Count::zero() };
        }
        self.s.at(n - 2, d + self.g) + conv(&self.s, |i, j| self.s.at(i, j).clone(), n, d)
    }

    fn sphere_two(&self, n: i64, k: i64, l: i64) -> Count {
        if k == 0 || l == 0 || k + l > n {
            return Count::zero();
        }
        let mut v = self.s2_at(n - 2, k + self.g, l) + self.s.at(n - 2, k + l - 2) * l as u64;
        v += conv(&self.s, |i, j| self.s2_at(i, j, l).clone(), n, k) * 2u32;
        v
    }

    fn projective(&self, n: i64, d: i64) -> Count {
        if d == 0 {
            return Count::zero();
        }
        let mut v = self.p.at(n - 2, d + self.g) + conv(&self.s, |i, j| self.p.at(i, j).clone(), n, d) * 2u32;
        v += self.s.at(n - 2, d - 2) * (d - 1) as u64;
        v
    }

    fn klein(&self, n: i64, d: i64) -> Count {
        if d == 0 {
            return Count::zero();
        }
        let mut v = self.k.at(n - 2, d + self.g) + conv(&self.s, |i, j| self.k.at(i, j).clone(), n, d) * 2u32;
        v += conv(&self.p, |i, j| self.p.at(i, j).clone(), n, d);
        v += self.p.at(n - 2, d - 2) * (d - 1) as u64;
        v += self.s2_diag(n - 2, d - 2);
        v
    }

    fn torus(&self, n: i64, d: i64) -> Count {
        if d == 0 {
            return Count::zero();
        }
        let mut v = self.t.at(n - 2, d + self.g) + conv(&self.s, |i, j| self.t.at(i, j).clone(), n, d) * 2u32;
        v += self.s2_diag(n - 2, d - 2);
        v
    }
}

/// Rooted sphere maps with special vertices of prescribed degrees and
/// dangling semi-edges. Special vertices of equal degree are unlabelled.
struct Branched {
    g: i64,
    memo: HashMap<(i64, i64, Vec<i64>, i64), Count>,
}

/// Ways to split a sorted multiset into two, up to equal elements.
fn multiset_splits(s: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut groups: BTreeMap<i64, usize> = BTreeMap::new();
    for &e in s {
        *groups.entry(e).or_default() += 1;
    }
    let mut out = vec![(Vec::new(), Vec::new())];
    for (&e, &count) in &groups {
        let mut next = Vec::new();
        for (a, b) in &out {
            for x in 0..=count {
                let mut a = a.clone();
                let mut b = b.clone();
                a.extend(std::iter::repeat_n(e, x));
                b.extend(std::iter::repeat_n(e, count - x));
                next.push((a, b));
            }
        }
        out = next;
    }
    out
}

fn without(s: &[i64], e: i64) -> Vec<i64> {
    let mut rest = s.to_vec();
    let pos = rest.iter().position(|&x| x == e).expect("element present");
    rest.remove(pos);
    rest
}

fn distinct(s: &[i64]) -> Vec<i64> {
    let mut d = s.to_vec();
    d.dedup();
    d
}

impl Branched {
    fn new(r: usize) -> Self {
        Branched { g: r as i64 - 2, memo: HashMap::new() }
    }

    fn count(&mut self, n: i64, d: i64, s: &[i64], h: i64) -> Count {
        if n < 0 || d < 0 || h < 0 {
            return Count::zero();
        }
        if d == 0 {
            return if n == 0 && s.is_empty() && h == 0 { Count::one() } else { Count::zero() };
        }
        let key = (n, d, s.to_vec(), h);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut v = self.count(n - 1, d - 1, s, h - 1) + self.count(n - 2, d + self.g, s, h);
        for e in distinct(s) {
            v += self.count(n - 2, d + e - 2, &without(s, e), h);
        }
        for (a, b) in multiset_splits(s) {
            for h1 in 0..=h {
                for i in 0..=(n - 2) {
                    for j in 0..=(d - 2) {
                        let x = self.count(i, j, &a, h1);
                        if !x.is_zero() {
                            v += x * self.count(n - 2 - i, d - 2 - j, &b, h - h1);
                        }
                    }
                }
            }
        }
        self.memo.insert(key, v.clone());
        v
    }

    /// Quotient maps with `m` darts on the sphere orbifold with the given
    /// branch orders, rooted anywhere, branch points unlabelled.
    fn orbifold(&mut self, r: usize, orders: &[usize], m: usize) -> Count {
        let mut groups: BTreeMap<usize, usize> = BTreeMap::new();
        for &o in orders {
            *groups.entry(o).or_default() += 1;
        }
        // per order: (order, at vertices, at semi-edges, in faces)
        let mut options: Vec<Vec<(usize, usize, usize, usize)>> = Vec::new();
        for (&k, &c) in &groups {
            let mut o = Vec::new();
            for a in 0..=c {
                if a > 0 && r % k != 0 {
                    continue;
                }
                for b in 0..=(c - a) {
                    if b > 0 && k != 2 {
                        continue;
                    }
                    o.push((k, a, b, c - a - b));
                }
            }
            options.push(o);
        }
        let mut total = Count::zero();
        let mut choice = vec![0usize; options.len()];
        loop {
            let picked: Vec<_> = choice.iter().zip(&options).map(|(&i, o)| o[i]).collect();
            total += self.placement(r, &picked, m);
            let mut pos = 0;
            while pos < choice.len() {
                choice[pos] += 1;
                if choice[pos] < options[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == choice.len() {
                break;
            }
        }
        total
    }

    fn placement(&mut self, r: usize, picked: &[(usize, usize, usize, usize)], m: usize) -> Count {
        let mut special: Vec<i64> = Vec::new();
        for &(k, a, _, _) in picked {
            special.extend(std::iter::repeat_n((r / k) as i64, a));
        }
        special.sort_unstable();
        let h: usize = picked.iter().map(|p| p.2).sum();
        let special_darts: usize = special.iter().sum::<i64>() as usize;
        if h > m || (m - h) % 2 == 1 || special_darts > m || (m - special_darts) % r != 0 {
            return Count::zero();
        }
        let vertices = special.len() + (m - special_darts) / r;
        let faces = 2 + (m - h) / 2;
        if faces < vertices {
            return Count::zero();
        }
        let faces = faces - vertices;
        let in_faces: Vec<usize> = picked.iter().map(|p| p.3).collect();
        let used: usize = in_faces.iter().sum();
        if used > faces {
            return Count::zero();
        }
        // ordered choice of faces, divided by the symmetric relabellings
        let mut ways = Count::one();
        for f in (faces - used + 1)..=faces {
            ways *= f as u64;
        }
        for &f in &in_faces {
            for x in 2..=f {
                ways /= x as u64;
            }
        }
        let m = m as i64;
        let mut rooted = self.count(m, r as i64, &special, h as i64);
        for e in distinct(&special) {
            rooted += self.count(m, e, &without(&special, e), h as i64);
        }
        rooted * ways
    }
}

/// Jordan's totient J_2.
fn jordan2(l: u64) -> u64 {
    let (mut res, mut x, mut p) = (l * l, l, 2);
    while p * p <= x {
        if x % p == 0 {
            while x % p == 0 {
                x /= p;
            }
            res = res / (p * p) * (p * p - 1);
        }
        p += 1;
    }
    if x > 1 {
        res = res / (x * x) * (x * x - 1);
    }
    res
}

/// Orientation-preserving sphere orbifolds of the torus: period, branch
/// orders, epimorphisms onto the cyclic group.
const SPHERE_ORBIFOLDS: [(usize, &[usize], u64); 4] =
    [(2, &[2, 2, 2, 2], 1), (3, &[3, 3, 3], 2), (4, &[2, 4, 4], 2), (6, &[2, 3, 6], 2)];

/// Sensed r-regular torus maps with `edges` edges.
fn sensed(r: usize, edges: usize, closed: &Closed, branched: &mut Branched) -> Result<Count> {
    let darts = 2 * edges;
    let mut sum = Count::zero();
    for l in crate::counts::divisors(darts as u64, crate::counts::Parity::All) {
        sum += closed.t.at((darts as u64 / l) as i64, r as i64) * jordan2(l);
    }
    for (l, orders, epi) in SPHERE_ORBIFOLDS {
        if darts % l == 0 {
            sum += branched.orbifold(r, orders, darts / l) * epi;
        }
    }
    exact_div(&sum, darts as u64, &format!("sensed torus count r={r} edges={edges}"))
}

fn table(seq: Sequence, r: usize, max_n: usize, rows: impl IntoIterator<Item = (Vec<usize>, Count)>) -> SeqTable {
    let mut t = SeqTable::new(SeqId::new(seq.name(), r), seq.arity());
    t.advance_frontier(max_n);
    for (index, value) in rows {
        t.set(&index, value);
    }
    t
}

fn grid_rows(g: &Grid, max_n: usize) -> Vec<(Vec<usize>, Count)> {
    let mut out = Vec::new();
    for (n, row) in g.0.iter().enumerate().take(max_n + 1) {
        for (d, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.push((vec![n, d], c.clone()));
            }
        }
    }
    out
}

/// All precursor sequences up to `max_n` (darts for closed surfaces, edges
/// for sensed torus counts), without any validation.
pub fn recurrence_precursors_unvalidated(r: usize, max_n: usize) -> Result<PrecursorSet> {
    if r < 3 {
        return Err(Error::Domain(format!("no derived precursors for r={r}")));
    }
    let closed = Closed::build(r, 2 * max_n, true);
    let mut set = PrecursorSet::new(Backend::DerivedRecurrence);
    set.insert(Sequence::STilde, table(Sequence::STilde, r, max_n, grid_rows(&closed.s, max_n)));
    for seq in [Sequence::P, Sequence::PTilde] {
        set.insert(seq, table(seq, r, max_n, grid_rows(&closed.p, max_n)));
    }
    let mut s2 = Vec::new();
    for (n, ks) in closed.s2.iter().enumerate().take(max_n + 1) {
        for (k, ls) in ks.iter().enumerate() {
            for (l, c) in ls.iter().enumerate() {
                if !c.is_zero() {
                    s2.push((vec![n, k, l], c.clone()));
                }
            }
        }
    }
    set.insert(Sequence::STilde2, table(Sequence::STilde2, r, max_n, s2));
    let kappa = (0..=max_n).map(|n| (vec![n], closed.k.at(n as i64, r as i64).clone()));
    set.insert(Sequence::Kappa, table(Sequence::Kappa, r, max_n, kappa));
    let mut branched = Branched::new(r);
    let mut tau = Vec::new();
    for edges in 1..=max_n {
        if (2 * edges) % r == 0 {
            tau.push((vec![edges], sensed(r, edges, &closed, &mut branched)?));
        }
    }
    set.insert(Sequence::TauSensed, table(Sequence::TauSensed, r, max_n, tau));
    Ok(set)
}

/// Every table of `candidate` must agree with `reference` wherever both
/// are known; at least one table must overlap.
pub fn validate_precursors(candidate: &PrecursorSet, reference: &PrecursorSet) -> Result<()> {
    let mut overlapping = 0;
    for (seq, t) in candidate.tables() {
        let Some(b) = reference.table(seq, t.id.r) else { continue };
        if t.frontier().is_none() || b.frontier().is_none() {
            continue;
        }
        overlapping += 1;
        if let Some(index) = first_disagreement(t, b) {
            return Err(Error::ValidationMismatch {
                sequence: t.id.to_string(),
                index: index.into_iter().map(|i| i as i64).collect(),
            });
        }
    }
    if overlapping == 0 {
        return Err(Error::Domain("no validation range shared with the reference precursors".into()));
    }
    Ok(())
}

/// Derived precursors up to `max_n`, accepted only if they agree with
/// `reference` (normally brute force) on every shared index.
pub fn derive_recurrence_precursors(r: usize, max_n: usize, reference: &PrecursorSet) -> Result<PrecursorSet> {
    let set = recurrence_precursors_unvalidated(r, max_n)?;
    validate_precursors(&set, reference)?;
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jordan_totient() {
        let j: Vec<u64> = (1..=8).map(jordan2).collect();
        assert_eq!(j, [1, 3, 8, 12, 24, 24, 48, 48]);
    }

    #[test]
    fn splits_of_multisets() {
        assert_eq!(multiset_splits(&[]).len(), 1);
        assert_eq!(multiset_splits(&[1, 1]).len(), 3);
        assert_eq!(multiset_splits(&[1, 1, 2]).len(), 6);
    }

    #[test]
    fn sensed_four_regular() {
        let set = recurrence_precursors_unvalidated(4, 8).unwrap();
        let tau: Vec<u64> = [2, 4, 6, 8]
            .iter()
            .map(|&e| u64::try_from(set.get(Sequence::TauSensed, 4, &[e]).unwrap()).unwrap())
            .collect();
        assert_eq!(tau, [1, 4, 23, 185]);
    }
}
