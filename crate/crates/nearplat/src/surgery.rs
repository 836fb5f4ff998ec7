//! Graph surgery on rotation systems: boundary-edge relocation, chords,
//! vertex splitting and amalgamation, edge cutting with cyclic re-gluing, and
//! the reduce/expand pair for barrel-structured graphs.
//!
//! Intermediate results live in [`MarkedGraph`], a relaxed plane graph that
//! permits loops and parallel edges while still enforcing the involution,
//! rotation, connectivity and Euler-genus-0 invariants. [`MarkedGraph::finalize`]
//! re-imposes simplicity and hands back a [`PlaneGraph`].

use std::collections::BTreeMap;

use crate::planegraph::{
    BuildError, DartId, Face, FaceId, FaceSet, PlaneGraph, VertexId,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurgeryError {
    #[error("edge or vertex is not on the marked boundary face")]
    NotOnBoundary,
    #[error("relocation does not close a face of the required size")]
    WrongSpan,
    #[error("operation would disconnect the graph")]
    Disconnects,
    #[error("vertex is not on the given face")]
    NotOnFace,
    #[error("vertices are already adjacent")]
    AlreadyAdjacent,
    #[error("split arc is empty")]
    EmptyArc,
    #[error("vertices share no common face")]
    NotOnCommonFace,
    #[error("vertices are adjacent")]
    Adjacent,
    #[error("cannot cut a bridge")]
    BridgeCut,
    #[error("anchor face is invalid for this cut: {0}")]
    BadAnchor(String),
    #[error("strip marks are missing or incompatible: {0}")]
    IncompatibleMarks(String),
    #[error("gluing produced a non-simple graph")]
    NotSimpleAfterGlue,
    #[error("graph is not barrel-structured: {0}")]
    NotBarrelStructured(String),
    #[error("exceptional faces too small to reduce")]
    TooSmall,
    #[error("no such vertex {0}")]
    NoSuchVertex(VertexId),
    #[error("no such edge {0}-{1}")]
    NoSuchEdge(VertexId, VertexId),
    #[error("no such face {0}")]
    NoSuchFace(FaceId),
    #[error("finalize failed: {0}")]
    Finalize(#[from] BuildError),
}

type Result<T> = std::result::Result<T, SurgeryError>;

/// Slot plan entry used when rebuilding dart arrays after an operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    /// Keep an existing dart (its edge partner must also be kept).
    Old(DartId),
    /// One side of a fresh edge; every token appears exactly twice.
    New(u32),
}

/// A relaxed plane graph with named dart anchors for surgery.
#[derive(Debug, Clone)]
pub struct MarkedGraph {
    vertex_of: Vec<VertexId>,
    alpha: Vec<DartId>,
    offsets: Vec<DartId>,
    marks: BTreeMap<String, DartId>,
}

impl MarkedGraph {
    pub fn from_plane(g: &PlaneGraph) -> MarkedGraph {
        let rot = g.rotations();
        let mut offsets = vec![0];
        for r in &rot {
            offsets.push(offsets.last().unwrap() + r.len());
        }
        let mut vertex_of = vec![0; *offsets.last().unwrap()];
        for v in 0..rot.len() {
            vertex_of[offsets[v]..offsets[v + 1]].fill(v);
        }
        let alpha = (0..vertex_of.len()).map(|d| g.alpha(d)).collect();
        MarkedGraph {
            vertex_of,
            alpha,
            offsets,
            marks: BTreeMap::new(),
        }
    }

    /// Re-impose simplicity and return a validated plane graph.
    pub fn finalize(&self) -> Result<PlaneGraph> {
        PlaneGraph::from_parts(
            self.vertex_of.clone(),
            self.alpha.clone(),
            self.offsets.clone(),
        )
        .map_err(SurgeryError::Finalize)
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_darts(&self) -> usize {
        self.vertex_of.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_darts() / 2
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn vertex_of(&self, d: DartId) -> VertexId {
        self.vertex_of[d]
    }

    pub fn alpha(&self, d: DartId) -> DartId {
        self.alpha[d]
    }

    pub fn head(&self, d: DartId) -> VertexId {
        self.vertex_of[self.alpha[d]]
    }

    pub fn sigma(&self, d: DartId) -> DartId {
        let v = self.vertex_of[d];
        let (s, e) = (self.offsets[v], self.offsets[v + 1]);
        if d + 1 == e {
            s
        } else {
            d + 1
        }
    }

    pub fn sigma_inv(&self, d: DartId) -> DartId {
        let v = self.vertex_of[d];
        let (s, e) = (self.offsets[v], self.offsets[v + 1]);
        if d == s {
            e - 1
        } else {
            d - 1
        }
    }

    pub fn next(&self, d: DartId) -> DartId {
        self.sigma(self.alpha[d])
    }

    pub fn darts_of(&self, v: VertexId) -> std::ops::Range<DartId> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.darts_of(u).find(|&d| self.head(d) == v)
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.dart_between(u, v).is_some()
    }

    pub fn mark(&mut self, name: &str, d: DartId) {
        self.marks.insert(name.to_string(), d);
    }

    pub fn get_mark(&self, name: &str) -> Option<DartId> {
        self.marks.get(name).copied()
    }

    pub fn trace_faces(&self) -> FaceSet {
        let nd = self.num_darts();
        let mut dart_to_face = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for d0 in 0..nd {
            if dart_to_face[d0] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = d0;
            loop {
                dart_to_face[d] = id;
                walk.push(d);
                d = self.next(d);
                if d == d0 {
                    break;
                }
            }
            faces.push(Face { darts: walk });
        }
        FaceSet {
            faces,
            dart_to_face,
        }
    }

    fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(v) = stack.pop() {
            for d in self.darts_of(v) {
                let u = self.head(d);
                if !seen[u] {
                    seen[u] = true;
                    cnt += 1;
                    stack.push(u);
                }
            }
        }
        cnt == n
    }

    fn euler(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.trace_faces().len() as i64
    }

    /// Rebuild dart arrays from a per-vertex slot plan. Returns the new graph
    /// (marks remapped; marks on dropped darts are discarded) and the
    /// old-dart-to-new-dart map.
    fn rebuild(&self, plan: &[Vec<Slot>]) -> (MarkedGraph, Vec<Option<DartId>>) {
        let mut offsets = vec![0];
        for slots in plan {
            offsets.push(offsets.last().unwrap() + slots.len());
        }
        let nd = *offsets.last().unwrap();
        let mut vertex_of = vec![0; nd];
        let mut old_to_new: Vec<Option<DartId>> = vec![None; self.num_darts()];
        let mut token_first: BTreeMap<u32, DartId> = BTreeMap::new();
        let mut alpha = vec![usize::MAX; nd];

        let mut id = 0;
        for (v, slots) in plan.iter().enumerate() {
            for &slot in slots {
                vertex_of[id] = v;
                match slot {
                    Slot::Old(d) => {
                        debug_assert!(old_to_new[d].is_none(), "old dart used twice");
                        old_to_new[d] = Some(id);
                    }
                    Slot::New(t) => {
                        if let Some(&other) = token_first.get(&t) {
                            alpha[id] = other;
                            alpha[other] = id;
                        } else {
                            token_first.insert(t, id);
                        }
                    }
                }
                id += 1;
            }
        }
        // Pair kept darts through the old involution.
        let mut id = 0;
        for slots in plan.iter() {
            for &slot in slots {
                if let Slot::Old(d) = slot {
                    let partner = old_to_new[self.alpha[d]]
                        .expect("partner of a kept dart must be kept");
                    alpha[id] = partner;
                }
                id += 1;
            }
        }
        debug_assert!(alpha.iter().all(|&a| a != usize::MAX));

        let mut marks = BTreeMap::new();
        for (name, &d) in &self.marks {
            if let Some(nd) = old_to_new[d] {
                marks.insert(name.clone(), nd);
            }
        }
        (
            MarkedGraph {
                vertex_of,
                alpha,
                offsets,
                marks,
            },
            old_to_new,
        )
    }

    /// Identity plan: every vertex keeps its darts in order.
    fn identity_plan(&self) -> Vec<Vec<Slot>> {
        (0..self.num_vertices())
            .map(|v| self.darts_of(v).map(Slot::Old).collect())
            .collect()
    }

    /// First visit of `v` on face `f`: returns `(c1, c2)`, the two
    /// rotation-consecutive darts of `v` whose gap lies on `f`.
    fn corner_at(&self, faces: &FaceSet, f: FaceId, v: VertexId) -> Option<(DartId, DartId)> {
        let walk = &faces.faces[f].darts;
        let pos = walk.iter().position(|&d| self.vertex_of[d] == v)?;
        let prev = walk[(pos + walk.len() - 1) % walk.len()];
        let c1 = self.alpha[prev];
        let c2 = walk[pos];
        debug_assert_eq!(self.sigma(c1), c2);
        Some((c1, c2))
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.num_vertices() {
            return Err(SurgeryError::NoSuchVertex(v));
        }
        Ok(())
    }

    /// Split vertex `z` into two: `x` keeps the rotation arc of `arc_len`
    /// darts starting at slot `start_slot` (counted within z's rotation,
    /// taken cyclically), the new vertex `y` receives the rest. Returns the
    /// new graph and the ids of `x` and `y`.
    pub fn split_vertex(
        &self,
        z: VertexId,
        start_slot: usize,
        arc_len: usize,
    ) -> Result<(MarkedGraph, VertexId, VertexId)> {
        self.check_vertex(z)?;
        let deg = self.degree(z);
        if arc_len == 0 || arc_len >= deg {
            return Err(SurgeryError::EmptyArc);
        }
        let base = self.offsets[z];
        let dart_at = |slot: usize| base + (start_slot + slot) % deg;
        let mut plan = self.identity_plan();
        plan[z] = (0..arc_len).map(|i| Slot::Old(dart_at(i))).collect();
        let y_slots: Vec<Slot> = (arc_len..deg).map(|i| Slot::Old(dart_at(i))).collect();
        plan.push(y_slots);
        let (out, _) = self.rebuild(&plan);
        if !out.is_connected() {
            return Err(SurgeryError::Disconnects);
        }
        debug_assert_eq!(out.euler(), 2);
        Ok((out, z, self.num_vertices()))
    }

    /// Merge two non-adjacent vertices lying on a common face. The shared
    /// face splits in two; the merged vertex keeps the id `min(x, y)`.
    pub fn amalgamate_vertices(&self, x: VertexId, y: VertexId) -> Result<MarkedGraph> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y || self.adjacent(x, y) {
            return Err(SurgeryError::Adjacent);
        }
        let faces = self.trace_faces();
        let common = (0..faces.len()).find(|&f| {
            let walk = &faces.faces[f].darts;
            walk.iter().any(|&d| self.vertex_of[d] == x)
                && walk.iter().any(|&d| self.vertex_of[d] == y)
        });
        let f = common.ok_or(SurgeryError::NotOnCommonFace)?;
        let (_, dx) = self.corner_at(&faces, f, x).unwrap();
        let (_, dy) = self.corner_at(&faces, f, y).unwrap();

        // Merged rotation: x's full cycle opened at its corner, then y's.
        let keep = x.min(y);
        let drop = x.max(y);
        let mut merged = Vec::with_capacity(self.degree(x) + self.degree(y));
        let mut d = dx;
        for _ in 0..self.degree(x) {
            merged.push(Slot::Old(d));
            d = self.sigma(d);
        }
        let mut d = dy;
        for _ in 0..self.degree(y) {
            merged.push(Slot::Old(d));
            d = self.sigma(d);
        }
        let mut plan: Vec<Vec<Slot>> = Vec::with_capacity(self.num_vertices() - 1);
        for v in 0..self.num_vertices() {
            if v == keep {
                plan.push(merged.clone());
            } else if v != drop {
                plan.push(self.darts_of(v).map(Slot::Old).collect());
            }
        }
        let (out, _) = self.rebuild(&plan);
        debug_assert!(out.is_connected());
        debug_assert_eq!(out.euler(), 2);
        Ok(out)
    }

    /// Add the chord `u`-`v` across the face `inside`, splitting it into two
    /// faces whose sizes sum to `size(inside) + 2`.
    pub fn add_chord(&self, u: VertexId, v: VertexId, inside: FaceId) -> Result<MarkedGraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let faces = self.trace_faces();
        if inside >= faces.len() {
            return Err(SurgeryError::NoSuchFace(inside));
        }
        if u == v || self.adjacent(u, v) {
            return Err(SurgeryError::AlreadyAdjacent);
        }
        let (_, du) = self
            .corner_at(&faces, inside, u)
            .ok_or(SurgeryError::NotOnFace)?;
        let (_, dv) = self
            .corner_at(&faces, inside, v)
            .ok_or(SurgeryError::NotOnFace)?;
        let mut plan = self.identity_plan();
        let tok = 0;
        let slot_of = |d: DartId| d - self.offsets[self.vertex_of[d]];
        plan[u].insert(slot_of(du), Slot::New(tok));
        plan[v].insert(slot_of(dv), Slot::New(tok));
        let (out, _) = self.rebuild(&plan);
        debug_assert_eq!(out.euler(), 2);
        Ok(out)
    }

    /// Remove a boundary edge of the marked outer face and re-attach it as a
    /// chord from `attach_at`, closing a new inner face. Walking the outer
    /// face forward from `attach_at`, the removed edge must be reached after
    /// at least two steps; the new face has size `steps + 1`.
    ///
    /// Requires a mark named `"outer"`; the mark is moved to a dart that
    /// stays on the outer face.
    pub fn relocate_boundary_edge(
        &self,
        remove: (VertexId, VertexId),
        attach_at: VertexId,
    ) -> Result<MarkedGraph> {
        self.check_vertex(remove.0)?;
        self.check_vertex(remove.1)?;
        self.check_vertex(attach_at)?;
        let outer_mark = self
            .get_mark("outer")
            .ok_or_else(|| SurgeryError::IncompatibleMarks("missing 'outer' mark".into()))?;
        let faces = self.trace_faces();
        let outer = faces.dart_to_face[outer_mark];
        let walk = &faces.faces[outer].darts;

        let start = walk
            .iter()
            .position(|&d| self.vertex_of[d] == attach_at)
            .ok_or(SurgeryError::NotOnBoundary)?;
        // Walk forward until the removed edge shows up.
        let len = walk.len();
        let mut steps = None;
        for s in 0..len {
            let d = walk[(start + s) % len];
            let (a, b) = (self.vertex_of[d], self.head(d));
            if (a, b) == remove || (b, a) == remove {
                steps = Some((s, d));
                break;
            }
        }
        let (s, removed_dart) = steps.ok_or(SurgeryError::NotOnBoundary)?;
        if s < 2 {
            return Err(SurgeryError::WrongSpan);
        }
        let p = self.vertex_of[removed_dart];
        if p == attach_at || self.head(removed_dart) == attach_at {
            return Err(SurgeryError::WrongSpan);
        }
        if self.adjacent(attach_at, p) {
            return Err(SurgeryError::WrongSpan);
        }

        let removed_alpha = self.alpha[removed_dart];
        let d0 = walk[start];
        let slot_of = |d: DartId| d - self.offsets[self.vertex_of[d]];
        let tok = 0;
        let mut plan = self.identity_plan();
        // New dart at p replaces the removed dart in place; at attach_at it
        // sits in the outer-face corner.
        plan[p][slot_of(removed_dart)] = Slot::New(tok);
        plan[self.vertex_of[removed_alpha]].remove(slot_of(removed_alpha));
        plan[attach_at].insert(slot_of(d0), Slot::New(tok));
        let (mut out, old_to_new) = self.rebuild(&plan);
        if !out.is_connected() {
            return Err(SurgeryError::Disconnects);
        }
        debug_assert_eq!(out.euler(), 2);
        // The dart after the removed one on the old outer walk stays on the
        // new outer face.
        let next_outer_old = walk[(start + s + 1) % len];
        let moved = old_to_new[next_outer_old].expect("outer successor dart survives");
        out.mark("outer", moved);
        Ok(out)
    }

    /// Cut the non-bridge edge `(u, v)` along a transversal path through the
    /// anchor faces: `f1` incident to `u`, `f2` incident to `v`, neither
    /// containing the edge itself. Both endpoints split; the two edge copies
    /// are marked `"left"` and `"right"` for [`MarkedGraph::glue_cyclic_copies`].
    pub fn cut_edge(
        &self,
        u: VertexId,
        v: VertexId,
        f1: FaceId,
        f2: FaceId,
    ) -> Result<MarkedGraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e_u = self
            .dart_between(u, v)
            .ok_or(SurgeryError::NoSuchEdge(u, v))?;
        let e_v = self.alpha[e_u];
        let faces = self.trace_faces();
        // A bridge's two darts lie on the same face.
        if faces.dart_to_face[e_u] == faces.dart_to_face[e_v] {
            return Err(SurgeryError::BridgeCut);
        }
        for (f, w) in [(f1, u), (f2, v)] {
            if f >= faces.len() {
                return Err(SurgeryError::NoSuchFace(f));
            }
            if f == faces.dart_to_face[e_u] || f == faces.dart_to_face[e_v] {
                return Err(SurgeryError::BadAnchor(format!(
                    "face {f} contains the cut edge"
                )));
            }
            if self.corner_at(&faces, f, w).is_none() {
                return Err(SurgeryError::BadAnchor(format!(
                    "face {f} does not pass vertex {w}"
                )));
            }
        }
        let (c1u, _) = self.corner_at(&faces, f1, u).unwrap();
        let (c1v, _) = self.corner_at(&faces, f2, v).unwrap();

        // Arc A: darts strictly after the edge dart, up to the anchor corner.
        let arc = |e: DartId, c1: DartId| -> (Vec<DartId>, Vec<DartId>) {
            let mut a = Vec::new();
            let mut d = self.sigma(e);
            loop {
                a.push(d);
                if d == c1 {
                    break;
                }
                d = self.sigma(d);
                assert_ne!(d, e, "anchor corner adjoins the cut edge");
            }
            let mut b = Vec::new();
            let mut d = self.sigma(c1);
            while d != e {
                b.push(d);
                d = self.sigma(d);
            }
            (a, b)
        };
        let (a_u, b_u) = arc(e_u, c1u);
        let (a_v, b_v) = arc(e_v, c1v);

        const TOK_A: u32 = 0; // joins u2 to v1
        const TOK_B: u32 = 1; // joins u1 to v2
        let n = self.num_vertices();
        let mut plan = self.identity_plan();
        let mut u1 = vec![Slot::New(TOK_B)];
        u1.extend(a_u.iter().map(|&d| Slot::Old(d)));
        let mut v1 = vec![Slot::New(TOK_A)];
        v1.extend(a_v.iter().map(|&d| Slot::Old(d)));
        plan[u] = u1;
        plan[v] = v1;
        let mut u2 = vec![Slot::New(TOK_A)];
        u2.extend(b_u.iter().map(|&d| Slot::Old(d)));
        let mut v2 = vec![Slot::New(TOK_B)];
        v2.extend(b_v.iter().map(|&d| Slot::Old(d)));
        plan.push(u2); // vertex n
        plan.push(v2); // vertex n + 1
        let (mut out, _) = self.rebuild(&plan);
        if !out.is_connected() {
            return Err(SurgeryError::Disconnects);
        }
        debug_assert_eq!(out.euler(), 2);
        // left = the TOK_A dart at u2 (vertex n); right = the TOK_B dart at u1.
        let left = out.darts_of(n).next().unwrap();
        let right = out.darts_of(u).next().unwrap();
        debug_assert_eq!(out.head(left), v);
        debug_assert_eq!(out.head(right), n + 1);
        out.mark("left", left);
        out.mark("right", right);
        Ok(out)
    }

    /// Glue `c` copies of a strip in a cycle, identifying each copy's right
    /// marked edge with the next copy's left marked edge. With `c = 1` this
    /// inverts [`MarkedGraph::cut_edge`].
    pub fn glue_cyclic_copies(&self, c: usize) -> Result<PlaneGraph> {
        if c == 0 {
            return Err(SurgeryError::IncompatibleMarks("need c >= 1".into()));
        }
        let left = self
            .get_mark("left")
            .ok_or_else(|| SurgeryError::IncompatibleMarks("missing 'left' mark".into()))?;
        let right = self
            .get_mark("right")
            .ok_or_else(|| SurgeryError::IncompatibleMarks("missing 'right' mark".into()))?;
        let u2 = self.vertex_of[left];
        let v1 = self.head(left);
        let u1 = self.vertex_of[right];
        let v2 = self.head(right);
        let ends = [u1, u2, v1, v2];
        if left == right || left == self.alpha[right] {
            return Err(SurgeryError::IncompatibleMarks(
                "marks reference the same edge".into(),
            ));
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if ends[i] == ends[j] {
                    return Err(SurgeryError::IncompatibleMarks(
                        "mark endpoints are not distinct".into(),
                    ));
                }
            }
        }

        // Neighbor arcs read off after the marked darts.
        let arc_heads = |d0: DartId| -> Vec<VertexId> {
            let deg = self.degree(self.vertex_of[d0]);
            let mut d = self.sigma(d0);
            let mut out = Vec::with_capacity(deg - 1);
            for _ in 0..deg - 1 {
                out.push(self.head(d));
                d = self.sigma(d);
            }
            out
        };
        let a_u = arc_heads(right); // at u1
        let b_u = arc_heads(left); // at u2
        let a_v = arc_heads(self.alpha[left]); // at v1
        let b_v = arc_heads(self.alpha[right]); // at v2

        let n = self.num_vertices();
        let mut interior: Vec<VertexId> = (0..n).filter(|w| !ends.contains(w)).collect();
        interior.sort_unstable();
        let int_index: BTreeMap<VertexId, usize> =
            interior.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let ni = interior.len();
        // Copy i interior vertex j -> i*ni + j; U_i = c*ni + 2i; V_i = c*ni + 2i + 1.
        let u_id = |i: usize| c * ni + 2 * (i % c);
        let v_id = |i: usize| c * ni + 2 * (i % c) + 1;
        let map = |w: VertexId, i: usize| -> VertexId {
            if w == u1 {
                u_id(i)
            } else if w == u2 {
                u_id((i + c - 1) % c)
            } else if w == v2 {
                v_id(i)
            } else if w == v1 {
                v_id((i + c - 1) % c)
            } else {
                i * ni + int_index[&w]
            }
        };

        let total = c * ni + 2 * c;
        let mut rotations: Vec<Vec<VertexId>> = vec![Vec::new(); total];
        for i in 0..c {
            for &w in &interior {
                let rot: Vec<VertexId> = self
                    .darts_of(w)
                    .map(|d| map(self.head(d), i))
                    .collect();
                rotations[i * ni + int_index[&w]] = rot;
            }
            // U_i = u1@i merged with u2@(i+1): [V_i, A@i, B@(i+1)].
            let mut rot = vec![v_id(i)];
            rot.extend(a_u.iter().map(|&w| map(w, i)));
            rot.extend(b_u.iter().map(|&w| map(w, (i + 1) % c)));
            rotations[u_id(i)] = rot;
            // V_i = v2@i merged with v1@(i+1): [U_i, A'@(i+1), B'@i].
            let mut rot = vec![u_id(i)];
            rot.extend(a_v.iter().map(|&w| map(w, (i + 1) % c)));
            rot.extend(b_v.iter().map(|&w| map(w, i)));
            rotations[v_id(i)] = rot;
        }
        PlaneGraph::build(&rotations).map_err(|e| match e {
            BuildError::NotSimple(_) => SurgeryError::NotSimpleAfterGlue,
            other => SurgeryError::Finalize(other),
        })
    }
}

/// Rotation pattern of the barrel on ring size `n`: outer n-gon, middle
/// 2n-cycle, inner n-gon, outer vertices on even middle vertices, inner on
/// odd ones. Vertex ids: x_i = i, m_j = n + j, y_i = 3n + i.
pub(crate) fn barrel_rotations(n: usize) -> Vec<Vec<VertexId>> {
    let x = |i: usize| i % n;
    let m = |j: usize| n + (j % (2 * n));
    let y = |i: usize| 3 * n + (i % n);
    let mut rot = Vec::with_capacity(4 * n);
    for i in 0..n {
        rot.push(vec![x(i + 1), m(2 * i), x(i + n - 1)]);
    }
    for j in 0..2 * n {
        if j % 2 == 0 {
            rot.push(vec![m(j + 1), m(j + 2 * n - 1), x(j / 2)]);
        } else {
            rot.push(vec![m(j + 1), y(j / 2), m(j + 2 * n - 1)]);
        }
    }
    for i in 0..n {
        rot.push(vec![y(i + 1), y(i + n - 1), m(2 * i + 1)]);
    }
    rot
}

/// Verify the barrel ladder structure and return the ring size n: two
/// disjoint exceptional n-gons, a middle 2n-cycle alternating outer and
/// inner spokes, everything else pentagons. The degenerate all-pentagon case
/// (the dodecahedron) is accepted with any valid ladder pair, so reductions
/// can pass through the n = 5 checkpoint.
fn discover_barrel(g: &PlaneGraph) -> Result<usize> {
    let fail = |msg: &str| SurgeryError::NotBarrelStructured(msg.to_string());
    if (0..g.num_vertices()).any(|v| g.degree(v) != 3) {
        return Err(fail("not 3-regular"));
    }
    let faces = g.trace_faces();
    let mut exceptional = Vec::new();
    for (f, face) in faces.faces.iter().enumerate() {
        if face.size() != 5 {
            exceptional.push(f);
        }
    }
    match exceptional.len() {
        2 => verify_ladder(g, &faces, exceptional[0], exceptional[1]),
        0 => {
            for f1 in 0..faces.len() {
                for f2 in f1 + 1..faces.len() {
                    if let Ok(n) = verify_ladder(g, &faces, f1, f2) {
                        return Ok(n);
                    }
                }
            }
            Err(fail("no pentagon pair has the ladder structure"))
        }
        _ => Err(fail("face multiset is not pentagons plus two exceptions")),
    }
}

fn verify_ladder(
    g: &PlaneGraph,
    faces: &FaceSet,
    f1: FaceId,
    f2: FaceId,
) -> Result<usize> {
    let n_v = g.num_vertices();
    let fail = |msg: &str| SurgeryError::NotBarrelStructured(msg.to_string());
    let xs = faces.vertex_walk(g, f1);
    let ys = faces.vertex_walk(g, f2);
    let n = xs.len();
    if ys.len() != n {
        return Err(fail("exceptional faces differ in size"));
    }
    let distinct = |w: &[VertexId]| {
        let mut s = w.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == w.len()
    };
    if !distinct(&xs) || !distinct(&ys) {
        return Err(fail("an exceptional face is self-touching"));
    }
    if xs.iter().any(|x| ys.contains(x)) {
        return Err(fail("exceptional faces touch"));
    }
    if n_v != 4 * n {
        return Err(fail("vertex count is not 4n"));
    }
    let on_x = |v: VertexId| xs.contains(&v);
    let on_y = |v: VertexId| ys.contains(&v);
    let third = |v: VertexId, cycle: &[VertexId]| -> Result<VertexId> {
        let others: Vec<VertexId> = g
            .neighbors(v)
            .into_iter()
            .filter(|u| !cycle.contains(u))
            .collect();
        if others.len() != 1 {
            return Err(fail("boundary vertex without unique middle neighbor"));
        }
        Ok(others[0])
    };
    let a: Vec<VertexId> = xs
        .iter()
        .map(|&x| third(x, &xs))
        .collect::<Result<_>>()?;
    for &m in &a {
        if on_x(m) || on_y(m) {
            return Err(fail("outer spoke lands on a boundary"));
        }
    }
    // Between consecutive spokes a[i], a[i+1] sits exactly one middle vertex
    // carrying the inner spoke.
    let mut b = Vec::with_capacity(n);
    for i in 0..n {
        let (ai, an) = (a[i], a[(i + 1) % n]);
        let between: Vec<VertexId> = g
            .neighbors(ai)
            .into_iter()
            .filter(|&w| !on_x(w) && g.adjacent(w, an))
            .collect();
        if between.len() != 1 {
            return Err(fail("middle ring is not an alternating 2n-cycle"));
        }
        b.push(between[0]);
    }
    let mut mids: Vec<VertexId> = a.iter().chain(b.iter()).copied().collect();
    mids.sort_unstable();
    mids.dedup();
    if mids.len() != 2 * n {
        return Err(fail("middle ring does not cover 2n vertices"));
    }
    // Each b[i] carries one inner spoke, and reading them around gives the
    // inner cycle.
    let mut y_order = Vec::with_capacity(n);
    for &bi in &b {
        let spokes: Vec<VertexId> = g
            .neighbors(bi)
            .into_iter()
            .filter(|&w| on_y(w))
            .collect();
        if spokes.len() != 1 {
            return Err(fail("inner spoke missing"));
        }
        y_order.push(spokes[0]);
    }
    for i in 0..n {
        if !g.adjacent(y_order[i], y_order[(i + 1) % n]) {
            return Err(fail("inner spokes do not follow the inner cycle"));
        }
    }
    Ok(n)
}

/// Merge one rung slice of a barrel-structured graph, shrinking both
/// exceptional faces by one. The input's ladder structure is verified in
/// full before the merged graph is emitted.
pub fn reduce_35_l3(g: &PlaneGraph) -> Result<PlaneGraph> {
    let n = discover_barrel(g)?;
    if n <= 3 {
        return Err(SurgeryError::TooSmall);
    }
    PlaneGraph::build(&barrel_rotations(n - 1)).map_err(SurgeryError::Finalize)
}

/// Split one rung slice of a barrel-structured graph in two, growing both
/// exceptional faces by one.
pub fn expand_35_l3(g: &PlaneGraph) -> Result<PlaneGraph> {
    let n = discover_barrel(g)?;
    PlaneGraph::build(&barrel_rotations(n + 1)).map_err(SurgeryError::Finalize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::families::Solid;

    fn octahedron() -> PlaneGraph {
        families::platonic(Solid::Octahedron)
    }

    #[test]
    fn split_then_amalgamate_roundtrip_octahedron() {
        let g = octahedron();
        let mg = MarkedGraph::from_plane(&g);
        let (split, x, y) = mg.split_vertex(0, 0, 2).unwrap();
        assert_eq!(split.degree(x) + split.degree(y), 4);
        let back = split.amalgamate_vertices(x, y).unwrap().finalize().unwrap();
        assert!(back.are_isomorphic(&g));
    }

    #[test]
    fn split_block_shape_octahedron() {
        let g = octahedron();
        let (split, x, y) = MarkedGraph::from_plane(&g).split_vertex(0, 0, 2).unwrap();
        let block = split.finalize().unwrap();
        assert_eq!(block.num_vertices(), 7);
        assert_eq!(block.degree(x), 2);
        assert_eq!(block.degree(y), 2);
        let sizes = block.trace_faces().size_multiset();
        assert_eq!(sizes, vec![3, 3, 3, 3, 3, 3, 6]);
    }

    #[test]
    fn split_rejects_empty_arc() {
        let g = octahedron();
        let mg = MarkedGraph::from_plane(&g);
        assert!(matches!(
            mg.split_vertex(0, 0, 0),
            Err(SurgeryError::EmptyArc)
        ));
        assert!(matches!(
            mg.split_vertex(0, 1, 4),
            Err(SurgeryError::EmptyArc)
        ));
    }

    #[test]
    fn amalgamate_rejects_adjacent() {
        let g = octahedron();
        let mg = MarkedGraph::from_plane(&g);
        assert!(matches!(
            mg.amalgamate_vertices(0, 1),
            Err(SurgeryError::Adjacent)
        ));
    }

    #[test]
    fn amalgamate_rejects_disjoint_faces() {
        // Top and bottom vertices of a long prism share no face.
        let g = families::prism(6).unwrap();
        let mg = MarkedGraph::from_plane(&g);
        assert!(matches!(
            mg.amalgamate_vertices(0, 9),
            Err(SurgeryError::NotOnCommonFace)
        ));
    }

    #[test]
    fn split_detects_disconnection() {
        // Two triangles sharing vertex 0: splitting 0 between them
        // separates the graph.
        let g = PlaneGraph::build(&[
            vec![1, 2, 3, 4],
            vec![2, 0],
            vec![0, 1],
            vec![4, 0],
            vec![0, 3],
        ])
        .unwrap();
        let mg = MarkedGraph::from_plane(&g);
        assert!(matches!(
            mg.split_vertex(0, 0, 2),
            Err(SurgeryError::Disconnects)
        ));
    }

    #[test]
    fn cut_rejects_anchor_containing_the_edge() {
        let g = families::platonic(Solid::Dodecahedron);
        let faces = g.trace_faces();
        let e = g.dart_between(1, 6).unwrap();
        let f_bad = faces.dart_to_face[e];
        let mg = MarkedGraph::from_plane(&g);
        assert!(matches!(
            mg.cut_edge(1, 6, f_bad, f_bad),
            Err(SurgeryError::BadAnchor(_))
        ));
    }

    #[test]
    fn glue_rejects_missing_or_bad_marks() {
        let g = families::prism(3).unwrap();
        let mg = MarkedGraph::from_plane(&g);
        assert!(matches!(
            mg.glue_cyclic_copies(2),
            Err(SurgeryError::IncompatibleMarks(_))
        ));
        // Hand-made marks on two adjacent rungs force a loop when glued.
        let mut mg = MarkedGraph::from_plane(&g);
        let left = g.dart_between(0, 3).unwrap();
        let right = g.dart_between(1, 4).unwrap();
        mg.mark("left", left);
        mg.mark("right", right);
        assert!(matches!(
            mg.glue_cyclic_copies(1),
            Err(SurgeryError::NotSimpleAfterGlue)
        ));
    }

    #[test]
    fn chord_splits_face() {
        // K4 minus edge: chord across the quadrilateral gives back K4.
        let g = PlaneGraph::build(&[vec![2, 3], vec![3, 2], vec![0, 1, 3], vec![0, 2, 1]])
            .unwrap();
        let faces = g.trace_faces();
        let quad = (0..faces.len()).find(|&f| faces.faces[f].size() == 4).unwrap();
        let mg = MarkedGraph::from_plane(&g);
        let out = mg.add_chord(0, 1, quad).unwrap().finalize().unwrap();
        let k4 = PlaneGraph::build(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
            .unwrap();
        assert!(out.are_isomorphic(&k4));
    }

    #[test]
    fn chord_rejects_adjacent_boundary_vertices() {
        let g = PlaneGraph::build(&[vec![2, 3], vec![3, 2], vec![0, 1, 3], vec![0, 2, 1]])
            .unwrap();
        let faces = g.trace_faces();
        let quad = (0..faces.len()).find(|&f| faces.faces[f].size() == 4).unwrap();
        let mg = MarkedGraph::from_plane(&g);
        assert!(matches!(
            mg.add_chord(0, 2, quad),
            Err(SurgeryError::AlreadyAdjacent)
        ));
    }

    #[test]
    fn cut_then_glue_once_is_identity() {
        let g = families::platonic(Solid::Dodecahedron);
        let (u, v) = (1usize, 6usize); // an outer-pentagon-to-ring edge
        let faces = g.trace_faces();
        let e = g.dart_between(u, v).unwrap();
        let banned = [faces.dart_to_face[e], faces.dart_to_face[g.alpha(e)]];
        let f1 = (0..faces.len())
            .find(|&f| {
                !banned.contains(&f)
                    && faces.vertex_walk(&g, f).contains(&u)
            })
            .unwrap();
        let f2 = (0..faces.len())
            .find(|&f| {
                !banned.contains(&f)
                    && faces.vertex_walk(&g, f).contains(&v)
            })
            .unwrap();
        let strip = MarkedGraph::from_plane(&g).cut_edge(u, v, f1, f2).unwrap();
        let back = strip.glue_cyclic_copies(1).unwrap();
        assert!(back.are_isomorphic(&g));
    }

    #[test]
    fn cut_rejects_bridge() {
        // Two triangles joined by a bridge 0-3.
        let g = PlaneGraph::build(&[
            vec![1, 2, 3],
            vec![2, 0],
            vec![0, 1],
            vec![4, 5, 0],
            vec![5, 3],
            vec![3, 4],
        ])
        .unwrap();
        let mg = MarkedGraph::from_plane(&g);
        assert!(matches!(
            mg.cut_edge(0, 3, 0, 0),
            Err(SurgeryError::BridgeCut)
        ));
    }

    #[test]
    fn relocate_boundary_edge_closes_a_pentagon() {
        // On a barrel octagon, removing the boundary edge four steps ahead
        // of the attach vertex and re-attaching closes a new 5-face. The
        // outer walk keeps its length by detouring through the face that
        // sat under the removed edge.
        let g = families::barrel(8).unwrap();
        let faces = g.trace_faces();
        let outer = (0..faces.len())
            .find(|&f| faces.faces[f].size() == 8)
            .unwrap();
        let walk = faces.vertex_walk(&g, outer);
        let at = |k: usize| walk[k % walk.len()];
        let attach = at(0);
        let remove = (at(4), at(5));
        let mut mg = MarkedGraph::from_plane(&g);
        mg.mark("outer", faces.faces[outer].darts[0]);
        let out = mg.relocate_boundary_edge(remove, attach).unwrap();
        let new_outer = out.get_mark("outer").unwrap();
        let out_faces = out.trace_faces();
        assert_eq!(
            out_faces.faces[out_faces.dart_to_face[new_outer]].size(),
            8
        );
        let g2 = out.finalize().unwrap();
        assert_eq!(g2.num_edges(), g.num_edges());
        assert_eq!(g2.num_faces(), g.num_faces());
        assert_eq!(g2.trace_faces().size_multiset(), faces.size_multiset());
        assert_eq!(g2.degree(attach), 4);
        assert_eq!(g2.degree(at(5)), 2);
    }

    #[test]
    fn relocate_rejects_short_span_and_off_boundary() {
        let g = families::barrel(8).unwrap();
        let faces = g.trace_faces();
        let outer = (0..faces.len())
            .find(|&f| faces.faces[f].size() == 8)
            .unwrap();
        let walk = faces.vertex_walk(&g, outer);
        let mut mg = MarkedGraph::from_plane(&g);
        mg.mark("outer", faces.faces[outer].darts[0]);
        assert!(matches!(
            mg.relocate_boundary_edge((walk[0], walk[1]), walk[0]),
            Err(SurgeryError::WrongSpan)
        ));
        // An inner edge is not on the marked boundary.
        let inner = (0..g.num_vertices())
            .find(|&v| !walk.contains(&v))
            .unwrap();
        let nb = g.neighbors(inner)[0];
        if !walk.contains(&nb) {
            assert!(matches!(
                mg.relocate_boundary_edge((inner, nb), walk[0]),
                Err(SurgeryError::NotOnBoundary)
            ));
        }
    }

    #[test]
    fn reduce_through_dodecahedron_checkpoint() {
        // reduce(barrel(6)) is the dodecahedron; reducing once more passes
        // through the degenerate checkpoint down to barrel(4).
        let six = PlaneGraph::build(&barrel_rotations(6)).unwrap();
        let five = reduce_35_l3(&six).unwrap();
        assert!(five.are_isomorphic(&families::platonic(Solid::Dodecahedron)));
        let four = reduce_35_l3(&five).unwrap();
        assert!(four.are_isomorphic(&PlaneGraph::build(&barrel_rotations(4)).unwrap()));
    }

    #[test]
    fn reduce_expand_roundtrip() {
        for n in 4..=7 {
            let b = PlaneGraph::build(&barrel_rotations(n)).unwrap();
            let r = reduce_35_l3(&b).unwrap();
            let small = PlaneGraph::build(&barrel_rotations(n - 1)).unwrap();
            assert!(r.are_isomorphic(&small));
            let back = expand_35_l3(&r).unwrap();
            assert!(back.are_isomorphic(&b));
        }
    }

    #[test]
    fn reduce_rejects_smallest_barrel() {
        let b = PlaneGraph::build(&barrel_rotations(3)).unwrap();
        assert!(matches!(reduce_35_l3(&b), Err(SurgeryError::TooSmall)));
    }

    #[test]
    fn reduce_iteration_descends_to_smallest() {
        // Iterating from barrel(8) shrinks |V| by 4 each step, passes the
        // degenerate checkpoint, and stops at barrel(3); every intermediate
        // stays balanced.
        let mut g = PlaneGraph::build(&barrel_rotations(8)).unwrap();
        let mut sizes = vec![g.num_vertices()];
        loop {
            match reduce_35_l3(&g) {
                Ok(smaller) => {
                    assert_eq!(smaller.num_vertices() + 4, g.num_vertices());
                    let fs = smaller.trace_faces();
                    let mut ex: Vec<usize> =
                        fs.faces.iter().map(|f| f.size()).filter(|&s| s != 5).collect();
                    ex.sort_unstable();
                    assert!(ex.is_empty() || (ex.len() == 2 && ex[0] == ex[1]));
                    sizes.push(smaller.num_vertices());
                    g = smaller;
                }
                Err(SurgeryError::TooSmall) => break,
                Err(e) => panic!("unexpected: {e}"),
            }
        }
        assert_eq!(sizes, vec![32, 28, 24, 20, 16, 12]);
    }

    #[test]
    fn chord_split_sizes_sum() {
        // The chord splits the face into two faces whose sizes sum to the
        // original plus two.
        let g = families::barrel(6).unwrap();
        let faces = g.trace_faces();
        let hex = (0..faces.len()).find(|&f| faces.faces[f].size() == 6).unwrap();
        let walk = faces.vertex_walk(&g, hex);
        let (u, v) = (walk[0], walk[2]);
        let out = MarkedGraph::from_plane(&g).add_chord(u, v, hex).unwrap();
        let before: usize = faces.faces.iter().map(Face::size).sum();
        let after: usize = out.trace_faces().faces.iter().map(Face::size).sum();
        assert_eq!(after, before + 2);
        assert_eq!(out.trace_faces().len(), faces.len() + 1);
        let mut new_sizes = out.trace_faces().size_multiset();
        new_sizes.retain(|&s| s == 3 || s == 5);
        assert!(new_sizes.contains(&3)); // the short side is a triangle
    }

    #[test]
    fn reduce_rejects_non_barrel() {
        let g = families::platonic(Solid::Cube);
        assert!(matches!(
            reduce_35_l3(&g),
            Err(SurgeryError::NotBarrelStructured(_))
        ));
    }
}
