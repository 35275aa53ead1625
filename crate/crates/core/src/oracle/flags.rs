//! Flag-model maps on surfaces with or without boundary.
//!
//! A map is a set of flags with three involutions: `r0` swaps the vertex end
//! of an edge, `r1` swaps the edge around a vertex and `r2` swaps the face
//! side of a dart. Fixed points encode mirror boundary:
//!
//! * `r0` fixed: the edge is cut by the boundary at its midpoint (a dangling
//!   semi-edge);
//! * `r1` fixed: the boundary passes through a vertex corner;
//! * `r2` fixed: the dart runs along the boundary.
//!
//! Rooted maps are generated in canonical breadth-first order from the root
//! flag, so every rooted map is produced exactly once and no isomorphism
//! test is needed.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub(crate) const UNSET: u32 = u32::MAX;

/// Closed or bordered surface a flag map lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Surface {
    Sphere,
    ProjectivePlane,
    Torus,
    KleinBottle,
    Disc,
    Annulus,
    MoebiusBand,
}

impl Surface {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            Surface::Sphere => 2,
            Surface::ProjectivePlane | Surface::Disc => 1,
            Surface::Torus | Surface::KleinBottle | Surface::Annulus | Surface::MoebiusBand => 0,
        }
    }

    pub fn is_orientable(self) -> bool {
        !matches!(
            self,
            Surface::ProjectivePlane | Surface::KleinBottle | Surface::MoebiusBand
        )
    }

    pub fn boundary_components(self) -> usize {
        match self {
            Surface::Disc | Surface::MoebiusBand => 1,
            Surface::Annulus => 2,
            _ => 0,
        }
    }

    pub fn has_boundary(self) -> bool {
        self.boundary_components() > 0
    }
}

/// How the two ends of a vertex chain meet the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// No boundary through the vertex: the flags form a cycle.
    Interior,
    /// Boundary passes through two corners (no boundary darts).
    CornerCorner,
    /// Both extreme darts lie along the boundary.
    EdgeEdge,
    /// One boundary dart and one corner.
    EdgeCorner,
}

/// Shape of a vertex orbit: kind plus number of flags. The weighted degree
/// (boundary darts counting one half) is always `flags / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexShape {
    pub kind: VertexKind,
    pub flags: usize,
}

impl VertexShape {
    pub fn interior(degree: usize) -> Self {
        VertexShape { kind: VertexKind::Interior, flags: 2 * degree }
    }

    pub fn corner_corner(degree: usize) -> Self {
        VertexShape { kind: VertexKind::CornerCorner, flags: 2 * degree }
    }

    /// Degree counting every boundary dart as one half, doubled.
    pub fn half_degree(&self) -> usize {
        self.flags
    }
}

/// A complete flag map. Flag 0 is the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagMap {
    pub r: [Vec<u32>; 3],
}

impl FlagMap {
    pub fn len(&self) -> usize {
        self.r[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.r[0].is_empty()
    }

    fn orbits_of(&self, gens: &[usize]) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orbit = vec![s as u32];
            let mut k = 0;
            while k < orbit.len() {
                let f = orbit[k] as usize;
                for &g in gens {
                    let t = self.r[g][f] as usize;
                    if !seen[t] {
                        seen[t] = true;
                        orbit.push(t as u32);
                    }
                }
                k += 1;
            }
            out.push(orbit);
        }
        out
    }

    /// Vertex orbits, each listed as a walk (chain from one end, or cycle).
    pub fn vertices(&self) -> Vec<(VertexShape, Vec<u32>)> {
        self.orbits_of(&[1, 2])
            .into_iter()
            .map(|orbit| {
                let shape = self.vertex_shape(orbit[0]);
                (shape, orbit)
            })
            .collect()
    }

    pub fn vertex_shape(&self, f: u32) -> VertexShape {
        match trace_vertex(&self.r, f) {
            Trace::Complete { shape, .. } => shape,
            _ => unreachable!("complete map has complete vertices"),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.orbits_of(&[0, 2]).len()
    }

    pub fn face_count(&self) -> usize {
        self.orbits_of(&[0, 1]).len()
    }

    /// Euler characteristic of the surface obtained from the barycentric
    /// subdivision (one triangle per flag).
    pub fn euler_characteristic(&self) -> i64 {
        let n = self.len();
        let v = self.orbits_of(&[1, 2]).len() + self.orbits_of(&[0, 2]).len() + self.orbits_of(&[0, 1]).len();
        let mut e = 0usize;
        for i in 0..3 {
            let fixed = (0..n).filter(|&f| self.r[i][f] as usize == f).count();
            e += fixed + (n - fixed) / 2;
        }
        v as i64 - e as i64 + n as i64
    }

    pub fn is_connected(&self) -> bool {
        self.orbits_of(&[0, 1, 2]).len() <= 1
    }

    pub fn is_orientable(&self) -> bool {
        let n = self.len();
        let mut colour = vec![u8::MAX; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            stack.push(s);
            while let Some(f) = stack.pop() {
                for i in 0..3 {
                    let g = self.r[i][f] as usize;
                    if g == f {
                        continue;
                    }
                    if colour[g] == u8::MAX {
                        colour[g] = 1 - colour[f];
                        stack.push(g);
                    } else if colour[g] == colour[f] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Number of boundary circles formed by the fixed sides of flags.
    pub fn boundary_components(&self) -> usize {
        let n = self.len();
        let mut id = BTreeMap::new();
        for f in 0..n {
            for i in 0..3 {
                if self.r[i][f] as usize == f {
                    let k = id.len();
                    id.insert((f, i), k);
                }
            }
        }
        let mut uf = UnionFind::new(id.len());
        for (&(f, i), &k) in &id {
            // walk around each of the two corners of side i
            for j in (0..3).filter(|&j| j != i) {
                let other = 3 - i - j;
                let (mut g, mut inv) = (f, other);
                loop {
                    let t = self.r[inv][g] as usize;
                    if t == g {
                        uf.union(k, id[&(g, inv)]);
                        break;
                    }
                    g = t;
                    inv = if inv == other { i } else { other };
                }
            }
        }
        uf.components()
    }

    pub fn surface(&self) -> Option<Surface> {
        if !self.is_connected() {
            return None;
        }
        let chi = self.euler_characteristic();
        let orientable = self.is_orientable();
        let b = self.boundary_components();
        [
            Surface::Sphere,
            Surface::ProjectivePlane,
            Surface::Torus,
            Surface::KleinBottle,
            Surface::Disc,
            Surface::Annulus,
            Surface::MoebiusBand,
        ]
        .into_iter()
        .find(|s| s.euler_characteristic() == chi && s.is_orientable() == orientable && s.boundary_components() == b)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a] = b;
        }
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

enum Trace {
    Open { flags: usize, has_root: bool },
    Complete { shape: VertexShape, has_root: bool },
    Degenerate,
}

fn end_kind(inv: usize) -> u8 {
    // 1 = corner, 2 = edge
    inv as u8
}

fn trace_vertex(r: &[Vec<u32>; 3], a: u32) -> Trace {
    let mut flags = 1usize;
    let mut has_root = a == 0;
    let mut ends = [0u8; 2];
    let mut open = false;
    for (side, first) in [(0usize, 1usize), (1, 2)] {
        let (mut cur, mut inv) = (a, first);
        loop {
            let nxt = r[inv][cur as usize];
            if nxt == UNSET {
                open = true;
                break;
            }
            if nxt == cur {
                ends[side] = end_kind(inv);
                break;
            }
            if nxt == a {
                // only reachable on the first sweep: closed alternating cycle
                return Trace::Complete {
                    shape: VertexShape { kind: VertexKind::Interior, flags },
                    has_root,
                };
            }
            cur = nxt;
            has_root |= cur == 0;
            flags += 1;
            inv = 3 - inv;
        }
    }
    if open {
        return Trace::Open { flags, has_root };
    }
    if flags == 1 {
        return Trace::Degenerate;
    }
    let kind = match (ends[0].min(ends[1]), ends[0].max(ends[1])) {
        (1, 1) => VertexKind::CornerCorner,
        (2, 2) => VertexKind::EdgeEdge,
        _ => VertexKind::EdgeCorner,
    };
    Trace::Complete { shape: VertexShape { kind, flags }, has_root }
}

/// Which vertex shapes a family admits.
#[derive(Clone, Debug)]
pub struct VertexRules {
    /// Regularity of ordinary vertices.
    pub regular: usize,
    /// Whether darts may lie along the boundary.
    pub boundary_darts: bool,
    /// Special root vertex; `None` means the root vertex is ordinary.
    pub root: Option<RootVertex>,
    /// Exact number of distinguished boundary leaves (corner-corner, degree 1).
    pub leaves: usize,
    /// Degree of one further distinguished interior vertex, if any.
    pub marked_interior: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootVertex {
    /// Root vertex on the boundary with both extremes at corners; the root
    /// flag is an extreme flag of its chain. Degree is free.
    BoundaryCorner,
    /// Interior root vertex of free degree.
    Interior,
}

impl VertexRules {
    pub fn regular(r: usize) -> Self {
        VertexRules { regular: r, boundary_darts: true, root: None, leaves: 0, marked_interior: None }
    }

    fn ordinary(&self, shape: VertexShape) -> bool {
        let r = self.regular;
        match shape.kind {
            VertexKind::Interior => shape.flags == 2 * r,
            VertexKind::CornerCorner => r % 2 == 0 && shape.flags == r,
            VertexKind::EdgeEdge => self.boundary_darts && r % 2 == 0 && shape.flags == r,
            VertexKind::EdgeCorner => self.boundary_darts && r % 2 == 1 && shape.flags == r,
        }
    }

    fn root_ok(&self, shape: VertexShape) -> bool {
        match self.root {
            None => self.ordinary(shape),
            Some(RootVertex::Interior) => shape.kind == VertexKind::Interior,
            Some(RootVertex::BoundaryCorner) => shape.kind == VertexKind::CornerCorner,
        }
    }

    fn is_leaf(&self, shape: VertexShape) -> bool {
        self.leaves > 0 && shape.kind == VertexKind::CornerCorner && shape.flags == 2
    }

    fn is_marked(&self, shape: VertexShape) -> bool {
        self.marked_interior
            .is_some_and(|d| shape.kind == VertexKind::Interior && shape.flags == 2 * d)
    }

    fn non_root_ok(&self, shape: VertexShape) -> bool {
        self.ordinary(shape) || self.is_leaf(shape) || self.is_marked(shape)
    }

    fn max_non_root_flags(&self) -> usize {
        let mut m = 2 * self.regular;
        if let Some(d) = self.marked_interior {
            m = m.max(2 * d);
        }
        m
    }

    /// Final check over all vertices; the root vertex is excluded.
    fn accept(&self, shapes: &[VertexShape]) -> bool {
        let mut leaves = 0;
        let mut marked = 0;
        let mut odd = 0;
        for &s in shapes {
            if self.ordinary(s) {
                continue;
            }
            if self.is_leaf(s) {
                leaves += 1;
            } else if self.is_marked(s) {
                marked += 1;
            } else {
                odd += 1;
            }
        }
        let marked_ok = match self.marked_interior {
            Some(d) if d != self.regular => marked == 1,
            _ => true,
        };
        odd == 0 && leaves == self.leaves && marked_ok
    }
}

/// What to generate.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub surface: Surface,
    pub max_flags: usize,
    pub vertices: VertexRules,
    /// Search-node limit; exceeding it aborts with `BudgetExceeded`.
    pub budget: u64,
}

/// Summary passed to the visitor for each accepted rooted map.
pub struct Visit<'a> {
    pub map: &'a FlagMap,
    pub root: VertexShape,
    pub others: &'a [VertexShape],
}

struct Generator<'a, F: FnMut(&Visit)> {
    spec: &'a FamilySpec,
    r: [Vec<u32>; 3],
    len: usize,
    allow_fixed: [bool; 3],
    trail: Vec<(u8, u32)>,
    nodes: u64,
    visit: F,
}

/// Enumerate every rooted map of the family with at most `max_flags` flags.
pub fn generate<F: FnMut(&Visit)>(spec: &FamilySpec, visit: F) -> Result<()> {
    let boundary = spec.surface.has_boundary();
    let mut g = Generator {
        spec,
        r: [vec![UNSET; spec.max_flags], vec![UNSET; spec.max_flags], vec![UNSET; spec.max_flags]],
        len: 0,
        allow_fixed: [boundary, boundary, boundary && spec.vertices.boundary_darts],
        trail: Vec::new(),
        nodes: 0,
        visit,
    };
    if spec.max_flags == 0 {
        return Ok(());
    }
    g.len = 1;
    if spec.vertices.root == Some(RootVertex::BoundaryCorner) {
        if !g.allow_fixed[1] {
            return Ok(());
        }
        if !g.assign(1, 0, 0) {
            return Ok(());
        }
    }
    g.search(0)
}

impl<F: FnMut(&Visit)> Generator<'_, F> {
    fn search(&mut self, mut slot: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.spec.budget {
            return Err(Error::BudgetExceeded { limit: self.spec.budget });
        }
        // next unset (flag, involution) in canonical order
        loop {
            let f = slot / 3;
            if f >= self.len {
                self.finish();
                return Ok(());
            }
            let i = ORDER[slot % 3];
            if self.r[i][f] == UNSET {
                break;
            }
            slot += 1;
        }
        let f = slot / 3;
        let i = ORDER[slot % 3];

        if self.allow_fixed[i] {
            self.branch(slot, i, f, f)?;
        }
        for g in 0..self.len {
            if g != f && self.r[i][g] == UNSET {
                self.branch(slot, i, f, g)?;
            }
        }
        if self.len < self.spec.max_flags {
            let g = self.len;
            self.len += 1;
            self.branch(slot, i, f, g)?;
            self.len -= 1;
        }
        Ok(())
    }

    fn branch(&mut self, slot: usize, i: usize, a: usize, b: usize) -> Result<()> {
        let mark = self.trail.len();
        if self.assign(i, a as u32, b as u32) {
            self.search(slot + 1)?;
        }
        self.undo(mark);
        Ok(())
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (i, f) = self.trail.pop().unwrap();
            self.r[i as usize][f as usize] = UNSET;
        }
    }

    fn set(&mut self, i: usize, a: u32, b: u32) {
        self.r[i][a as usize] = b;
        self.trail.push((i as u8, a));
        if a != b {
            self.r[i][b as usize] = a;
            self.trail.push((i as u8, b));
        }
    }

    /// Set `r_i(a) = b` and propagate; false on contradiction. The caller
    /// undoes the trail on failure.
    fn assign(&mut self, i: usize, a: u32, b: u32) -> bool {
        if a == b && !self.allow_fixed[i] {
            return false;
        }
        self.set(i, a, b);
        if i != 1 && !(self.edge_ok(a) && self.edge_ok(b)) {
            return false;
        }
        if i != 0 && !self.vertex_ok(a) {
            return false;
        }
        true
    }

    /// Edge orbits: r0 and r2 commute, with no flag fixed by both and no
    /// two-flag orbit on which they agree.
    fn edge_ok(&mut self, h: u32) -> bool {
        let a = self.r[0][h as usize];
        let b = self.r[2][h as usize];
        if a == UNSET || b == UNSET {
            return true;
        }
        if a == h && b == h {
            return false;
        }
        if a == b {
            return false;
        }
        let x = self.r[2][a as usize];
        let y = self.r[0][b as usize];
        match (x == UNSET, y == UNSET) {
            (false, false) => x == y,
            (false, true) => {
                if x != b && self.r[0][x as usize] != UNSET {
                    return false;
                }
                self.assign(0, b, x)
            }
            (true, false) => {
                if y != a && self.r[2][y as usize] != UNSET {
                    return false;
                }
                self.assign(2, a, y)
            }
            (true, true) => true,
        }
    }

    fn vertex_ok(&mut self, a: u32) -> bool {
        let rules = &self.spec.vertices;
        match trace_vertex(&self.r, a) {
            Trace::Degenerate => false,
            Trace::Open { flags, has_root } => {
                let root_cap = if rules.root.is_some() { self.spec.max_flags } else { rules.max_non_root_flags() };
                let cap = if has_root {
                    root_cap
                } else if matches!(trace_vertex(&self.r, 0), Trace::Complete { .. }) {
                    rules.max_non_root_flags()
                } else {
                    // may still close up into the root vertex
                    root_cap.max(rules.max_non_root_flags())
                };
                flags <= cap
            }
            Trace::Complete { shape, has_root } => {
                if has_root {
                    rules.root_ok(shape)
                } else {
                    rules.non_root_ok(shape)
                }
            }
        }
    }

    fn finish(&mut self) {
        let n = self.len;
        let map = FlagMap { r: [self.r[0][..n].to_vec(), self.r[1][..n].to_vec(), self.r[2][..n].to_vec()] };
        if map.surface() != Some(self.spec.surface) {
            return;
        }
        let mut root = None;
        let mut others = Vec::new();
        for (shape, orbit) in map.vertices() {
            if orbit.contains(&0) {
                root = Some(shape);
            } else {
                others.push(shape);
            }
        }
        let root = root.expect("root vertex");
        if !self.spec.vertices.accept(&others) {
            return;
        }
        (self.visit)(&Visit { map: &map, root, others: &others });
    }
}

const ORDER: [usize; 3] = [2, 1, 0];

/// Counts of rooted maps bucketed by (flags, root-vertex flags).
pub fn count_by_root(spec: &FamilySpec) -> Result<BTreeMap<(usize, usize), u64>> {
    let mut out = BTreeMap::new();
    generate(spec, |v| {
        *out.entry((v.map.len(), v.root.flags)).or_insert(0) += 1;
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(surface: Surface, max_flags: usize, vertices: VertexRules) -> FamilySpec {
        FamilySpec { surface, max_flags, vertices, budget: u64::MAX }
    }

    #[test]
    fn rooted_planar_maps_by_edges() {
        // rooted planar maps with no degree restriction: 1, 2, 9, 54
        let rules = VertexRules { regular: 0, boundary_darts: false, root: Some(RootVertex::Interior), leaves: 0, marked_interior: None };
        let mut by_edges = BTreeMap::new();
        // allow every interior degree by marking root interior and making
        // non-root ordinary check accept any interior vertex is not
        // expressible, so count one-vertex maps only: planar one-vertex maps
        // with e loops are counted by Catalan numbers.
        generate(&spec(Surface::Sphere, 12, rules), |v| {
            if v.others.is_empty() {
                *by_edges.entry(v.map.len() / 4).or_insert(0u64) += 1;
            }
        })
        .unwrap();
        // rooted at a flag on an oriented sphere: Catalan(e)
        assert_eq!(by_edges.get(&1), Some(&1));
        assert_eq!(by_edges.get(&2), Some(&2));
        assert_eq!(by_edges.get(&3), Some(&5));
    }

    #[test]
    fn rooted_quartic_planar_maps() {
        // 2, 9, 54 rooted 4-regular planar maps with 1, 2, 3 vertices
        let mut by_vertices = BTreeMap::new();
        generate(&spec(Surface::Sphere, 24, VertexRules::regular(4)), |v| {
            *by_vertices.entry(v.map.len() / 8).or_insert(0u64) += 1;
        })
        .unwrap();
        assert_eq!(by_vertices, BTreeMap::from([(1, 2), (2, 9), (3, 54)]));
    }

    #[test]
    fn rooted_cubic_planar_maps() {
        // 4, 32, 336 rooted cubic planar maps with 2, 4, 6 vertices
        let mut by_vertices = BTreeMap::new();
        generate(&spec(Surface::Sphere, 36, VertexRules::regular(3)), |v| {
            *by_vertices.entry(v.map.len() / 6).or_insert(0u64) += 1;
        })
        .unwrap();
        assert_eq!(by_vertices, BTreeMap::from([(2, 4), (4, 32), (6, 336)]));
    }

    #[test]
    fn square_torus_flags() {
        // one vertex, two loops, rooted: 4-regular torus maps with 2 edges
        let mut count = 0;
        generate(&spec(Surface::Torus, 8, VertexRules::regular(4)), |_| count += 1).unwrap();
        assert_eq!(count, 1);
    }
}
