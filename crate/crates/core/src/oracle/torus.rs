//! Unrooted r-regular maps on orientable surfaces by exhaustive matching of
//! darts against a fixed rotation, with canonical forms for isomorphism.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Oriented map: `rotation` gives the next dart counter-clockwise around a
/// vertex, `pairing` the other half of the edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationMap {
    pub rotation: Vec<u8>,
    pub pairing: Vec<u8>,
}

impl RotationMap {
    pub fn darts(&self) -> usize {
        self.rotation.len()
    }

    pub fn mirror(&self) -> RotationMap {
        let mut inv = vec![0u8; self.darts()];
        for (d, &s) in self.rotation.iter().enumerate() {
            inv[s as usize] = d as u8;
        }
        RotationMap { rotation: inv, pairing: self.pairing.clone() }
    }

    fn cycles_of(&self, perm: impl Fn(usize) -> usize) -> usize {
        let n = self.darts();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = perm(d);
            }
        }
        count
    }

    pub fn vertex_count(&self) -> usize {
        self.cycles_of(|d| self.rotation[d] as usize)
    }

    pub fn face_count(&self) -> usize {
        self.cycles_of(|d| self.rotation[self.pairing[d] as usize] as usize)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.darts();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(d) = stack.pop() {
            for e in [self.rotation[d] as usize, self.pairing[d] as usize] {
                if !seen[e] {
                    seen[e] = true;
                    reached += 1;
                    stack.push(e);
                }
            }
        }
        reached == n
    }

    pub fn genus(&self) -> usize {
        let chi = self.vertex_count() as i64 - (self.darts() / 2) as i64 + self.face_count() as i64;
        ((2 - chi) / 2) as usize
    }

    /// Minimal breadth-first relabelling over all root darts. Two maps are
    /// isomorphic by an orientation-preserving map iff their forms agree.
    pub fn canonical_form(&self) -> Vec<u8> {
        let n = self.darts();
        let mut best: Option<Vec<u8>> = None;
        let mut label = vec![u8::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut code = Vec::with_capacity(2 * n);
        for root in 0..n {
            label.iter_mut().for_each(|l| *l = u8::MAX);
            order.clear();
            code.clear();
            label[root] = 0;
            order.push(root);
            let mut k = 0;
            let mut worse = false;
            while k < order.len() {
                let d = order[k];
                for e in [self.rotation[d] as usize, self.pairing[d] as usize] {
                    if label[e] == u8::MAX {
                        label[e] = order.len() as u8;
                        order.push(e);
                    }
                    code.push(label[e]);
                    if let Some(b) = &best {
                        let i = code.len() - 1;
                        if code[i] > b[i] {
                            worse = true;
                            break;
                        }
                        if code[i] < b[i] {
                            // strictly better from here on; stop comparing
                            best = None;
                        }
                    }
                }
                if worse {
                    break;
                }
                k += 1;
            }
            if !worse {
                best = Some(code.clone());
            }
        }
        best.expect("nonempty map")
    }
}

/// Sensed, reflexible and unsensed counts of one census cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCensus {
    pub sensed: u64,
    pub reflexible: u64,
    pub unsensed: u64,
}

fn double_factorial_odd(n: usize) -> u128 {
    (1..n).step_by(2).map(|k| k as u128).product::<u128>().max(1)
}

/// Count r-regular maps of the given genus with `vertices` vertices.
/// `budget` bounds the number of dart matchings examined.
pub fn census(r: usize, vertices: usize, genus: usize, budget: u64) -> Result<TorusCensus> {
    let darts = r * vertices;
    if r == 0 || vertices == 0 || darts % 2 == 1 {
        return Err(Error::Domain(format!("no {r}-regular map has {vertices} vertices")));
    }
    if darts > 250 {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    let matchings = double_factorial_odd(darts);
    if matchings > budget as u128 {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    let rotation: Vec<u8> = (0..darts).map(|d| (d - d % r + (d + 1) % r) as u8).collect();

    // split the search on the partner of dart 0
    let forms: Vec<(Vec<u8>, Vec<u8>)> = (1..darts)
        .into_par_iter()
        .flat_map_iter(|partner| {
            let mut pairing = vec![u8::MAX; darts];
            pairing[0] = partner as u8;
            pairing[partner] = 0;
            let mut found = HashSet::new();
            complete_matching(&rotation, &mut pairing, genus, &mut found);
            found.into_iter()
        })
        .collect();

    let mut sensed = HashSet::new();
    let mut unsensed = HashSet::new();
    let mut reflexible = 0u64;
    for (form, mirror) in forms {
        if sensed.insert(form.clone()) {
            if form == mirror {
                reflexible += 1;
            }
            unsensed.insert(form.min(mirror));
        }
    }
    Ok(TorusCensus { sensed: sensed.len() as u64, reflexible, unsensed: unsensed.len() as u64 })
}

fn complete_matching(rotation: &[u8], pairing: &mut Vec<u8>, genus: usize, found: &mut HashSet<(Vec<u8>, Vec<u8>)>) {
    let Some(first) = pairing.iter().position(|&p| p == u8::MAX) else {
        let map = RotationMap { rotation: rotation.to_vec(), pairing: pairing.clone() };
        if map.is_connected() && map.genus() == genus {
            let form = map.canonical_form();
            let mirror = map.mirror().canonical_form();
            found.insert((form, mirror));
        }
        return;
    };
    for other in first + 1..pairing.len() {
        if pairing[other] == u8::MAX {
            pairing[first] = other as u8;
            pairing[other] = first as u8;
            complete_matching(rotation, pairing, genus, found);
            pairing[first] = u8::MAX;
            pairing[other] = u8::MAX;
        }
    }
}
