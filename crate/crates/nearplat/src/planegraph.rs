//! Connected plane graphs as rotation systems.
//!
//! A plane graph is stored as a set of darts (half-edges). Darts of vertex
//! `v` occupy a contiguous id range and their id order is the counterclockwise
//! rotation at `v`. `alpha` pairs the two darts of every edge. Faces are the
//! orbits of the face successor `next(d) = sigma(alpha(d))`; that convention
//! is fixed here and used everywhere.

use std::collections::BTreeSet;
use std::fmt;

pub type VertexId = usize;
pub type DartId = usize;
pub type FaceId = usize;

/// Errors raised while building or parsing a plane graph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("rotation system is not planar: V - E + F = {0}, expected 2")]
    NotPlanar(i64),
    #[error("adjacency is not symmetric: {0}")]
    AsymmetricInput(String),
    #[error("syntax error at line {line}: {msg}")]
    SyntaxError { line: usize, msg: String },
}

/// Error for the brute-force abstract-isomorphism oracle.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AbstractIsoError {
    #[error("graph too large for brute-force isomorphism: {0} vertices > limit {1}")]
    TooLarge(usize, usize),
}

/// A connected simple plane graph, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    /// dart -> origin vertex
    vertex_of: Vec<VertexId>,
    /// dart -> opposite dart of the same edge
    alpha: Vec<DartId>,
    /// vertex -> first dart id; darts of vertex v are offsets[v]..offsets[v+1]
    offsets: Vec<DartId>,
}

/// One face: its boundary walk as a dart sequence (face-successor order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<DartId>,
}

impl Face {
    /// Face size: length of the boundary walk. A cut edge contributes twice.
    pub fn size(&self) -> usize {
        self.darts.len()
    }
}

/// The face decomposition of a plane graph.
#[derive(Debug, Clone)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    pub dart_to_face: Vec<FaceId>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Vertices visited by the boundary walk of face `f`, in walk order.
    pub fn vertex_walk(&self, g: &PlaneGraph, f: FaceId) -> Vec<VertexId> {
        self.faces[f].darts.iter().map(|&d| g.vertex_of(d)).collect()
    }

    /// Sorted multiset of face sizes.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.faces.iter().map(Face::size).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// Connectivity structure: cut vertices, bridges and biconnected components.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub connected: bool,
    pub cut_vertices: Vec<VertexId>,
    pub bridges: Vec<(VertexId, VertexId)>,
    /// Vertex sets of the maximal 2-connected subgraphs; a bridge forms a
    /// two-vertex block of its own.
    pub blocks: Vec<Vec<VertexId>>,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl StructureReport {
    pub fn is_two_connected(&self, g: &PlaneGraph) -> bool {
        g.num_vertices() >= 3 && self.connected && self.cut_vertices.is_empty()
    }
}

/// Canonical form of a plane graph up to relabeling, choice of starting dart
/// and reflection. Equal codes hold exactly for embedding-isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.bytes.len() * 2);
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl PlaneGraph {
    /// Build a validated plane graph from per-vertex counterclockwise
    /// neighbor lists.
    pub fn build(rotations: &[Vec<VertexId>]) -> Result<PlaneGraph, BuildError> {
        let n = rotations.len();
        if n < 2 {
            return Err(BuildError::NotSimple(format!(
                "need at least 2 vertices, got {n}"
            )));
        }
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(BuildError::NotSimple(format!("vertex {v} is isolated")));
            }
            let mut seen = BTreeSet::new();
            for &u in rot {
                if u == v {
                    return Err(BuildError::NotSimple(format!("loop at vertex {v}")));
                }
                if u >= n {
                    return Err(BuildError::AsymmetricInput(format!(
                        "vertex {v} lists out-of-range neighbor {u}"
                    )));
                }
                if !seen.insert(u) {
                    return Err(BuildError::NotSimple(format!(
                        "parallel edge between {v} and {u}"
                    )));
                }
            }
        }
        // Symmetry: u in rot(v) iff v in rot(u).
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                if !rotations[u].contains(&v) {
                    return Err(BuildError::AsymmetricInput(format!(
                        "{v} lists {u} but not vice versa"
                    )));
                }
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for rot in rotations {
            offsets.push(offsets.last().unwrap() + rot.len());
        }
        let nd = *offsets.last().unwrap();
        let mut vertex_of = vec![0; nd];
        for v in 0..n {
            vertex_of[offsets[v]..offsets[v + 1]].fill(v);
        }
        // alpha: dart (v -> u) pairs with dart (u -> v); unique since simple.
        let mut alpha = vec![usize::MAX; nd];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                let d = offsets[v] + i;
                let j = rotations[u].iter().position(|&w| w == v).unwrap();
                alpha[d] = offsets[u] + j;
            }
        }
        let g = PlaneGraph {
            vertex_of,
            alpha,
            offsets,
        };
        if !g.is_connected() {
            return Err(BuildError::NotConnected);
        }
        let f = g.count_faces() as i64;
        let euler = n as i64 - g.num_edges() as i64 + f;
        if euler != 2 {
            return Err(BuildError::NotPlanar(euler));
        }
        Ok(g)
    }

    /// Construct from raw dart arrays. Used by surgery finalization; the
    /// caller guarantees the layout (contiguous darts per vertex), the
    /// remaining invariants are re-validated.
    pub(crate) fn from_parts(
        vertex_of: Vec<VertexId>,
        alpha: Vec<DartId>,
        offsets: Vec<DartId>,
    ) -> Result<PlaneGraph, BuildError> {
        let g = PlaneGraph {
            vertex_of,
            alpha,
            offsets,
        };
        // Involution, loops, parallels.
        for d in 0..g.num_darts() {
            let a = g.alpha[d];
            if a == d || g.alpha[a] != d {
                return Err(BuildError::NotSimple(format!(
                    "alpha is not a fixed-point-free involution at dart {d}"
                )));
            }
            if g.vertex_of[d] == g.vertex_of[a] {
                return Err(BuildError::NotSimple(format!(
                    "loop at vertex {}",
                    g.vertex_of[d]
                )));
            }
        }
        let mut pairs = BTreeSet::new();
        for d in 0..g.num_darts() {
            let (u, v) = (g.vertex_of[d], g.vertex_of[g.alpha[d]]);
            if u < v && !pairs.insert((u, v)) {
                return Err(BuildError::NotSimple(format!(
                    "parallel edge between {u} and {v}"
                )));
            }
        }
        if !g.is_connected() {
            return Err(BuildError::NotConnected);
        }
        let euler = g.num_vertices() as i64 - g.num_edges() as i64 + g.count_faces() as i64;
        if euler != 2 {
            return Err(BuildError::NotPlanar(euler));
        }
        Ok(g)
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

    pub fn num_faces(&self) -> usize {
        self.count_faces()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn vertex_of(&self, d: DartId) -> VertexId {
        self.vertex_of[d]
    }

    /// The other dart of the edge of `d`.
    pub fn alpha(&self, d: DartId) -> DartId {
        self.alpha[d]
    }

    /// Counterclockwise-next dart around the origin vertex of `d`.
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

    /// Face successor: `sigma(alpha(d))`.
    pub fn next(&self, d: DartId) -> DartId {
        self.sigma(self.alpha[d])
    }

    /// Head vertex of dart `d` (its edge's other endpoint).
    pub fn head(&self, d: DartId) -> VertexId {
        self.vertex_of[self.alpha[d]]
    }

    pub fn darts_of(&self, v: VertexId) -> std::ops::Range<DartId> {
        self.offsets[v]..self.offsets[v + 1]
    }

    /// Neighbors of `v` in rotation order.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.darts_of(v).map(|d| self.head(d)).collect()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.darts_of(u).any(|d| self.head(d) == v)
    }

    /// The dart from `u` to `v`, if the edge exists.
    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.darts_of(u).find(|&d| self.head(d) == v)
    }

    /// Per-vertex counterclockwise neighbor lists, slot order preserved.
    pub fn rotations(&self) -> Vec<Vec<VertexId>> {
        (0..self.num_vertices()).map(|v| self.neighbors(v)).collect()
    }

    /// Undirected edge list, each edge once with u < v, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut es = Vec::with_capacity(self.num_edges());
        for d in 0..self.num_darts() {
            let (u, v) = (self.vertex_of[d], self.head(d));
            if u < v {
                es.push((u, v));
            }
        }
        es.sort_unstable();
        es
    }

    fn is_connected(&self) -> bool {
        let n = self.num_vertices();
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

    fn count_faces(&self) -> usize {
        let mut seen = vec![false; self.num_darts()];
        let mut f = 0;
        for d0 in 0..self.num_darts() {
            if seen[d0] {
                continue;
            }
            f += 1;
            let mut d = d0;
            loop {
                seen[d] = true;
                d = self.next(d);
                if d == d0 {
                    break;
                }
            }
        }
        f
    }

    /// Decompose all darts into face boundary walks.
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

    /// Cut vertices, bridges and biconnected components by lowpoint DFS.
    pub fn structure(&self) -> StructureReport {
        let n = self.num_vertices();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut is_cut = vec![false; n];
        let mut bridges = Vec::new();
        let mut blocks: Vec<Vec<VertexId>> = Vec::new();
        let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
        let mut timer = 0usize;

        // Iterative DFS; child counting at the root decides root cutness.
        let root = 0;
        let mut stack: Vec<(VertexId, usize)> = vec![(root, 0)];
        let mut root_children = 0usize;
        disc[root] = timer;
        low[root] = timer;
        timer += 1;

        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            let darts: Vec<DartId> = self.darts_of(v).collect();
            if *i < darts.len() {
                let d = darts[*i];
                *i += 1;
                let u = self.head(d);
                if disc[u] == usize::MAX {
                    parent[u] = v;
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    edge_stack.push((v, u));
                    stack.push((u, 0));
                } else if u != parent[v] && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        // Pop the biconnected component ending at edge (p, v).
                        let mut comp = BTreeSet::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[v] || (a == p && b == v) {
                                comp.insert(a);
                                comp.insert(b);
                                edge_stack.pop();
                                if a == p && b == v {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        if low[v] > disc[p] {
                            bridges.push((p.min(v), p.max(v)));
                        }
                        blocks.push(comp.into_iter().collect());
                    }
                }
            }
        }
        is_cut[root] = root_children > 1;

        let degrees: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        bridges.sort_unstable();
        blocks.sort();
        StructureReport {
            connected: true,
            cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
            bridges,
            blocks,
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
        }
    }

    /// Canonical code: for every starting dart and both orientations, relabel
    /// darts in first-visit order of the traversal that explores `alpha` then
    /// `sigma` (or `sigma^-1`), and emit the relabeled permutation tables.
    /// The code is the lexicographic minimum over all starts.
    pub fn canonical_code(&self) -> CanonicalCode {
        let nd = self.num_darts();
        assert!(nd < u16::MAX as usize, "graph too large for canonical code");
        let mut best: Option<Vec<u16>> = None;
        let mut label = vec![u16::MAX; nd];
        let mut order: Vec<DartId> = Vec::with_capacity(nd);
        for start in 0..nd {
            for mirror in [false, true] {
                label.iter_mut().for_each(|x| *x = u16::MAX);
                order.clear();
                label[start] = 0;
                order.push(start);
                let mut out: Vec<u16> = Vec::with_capacity(2 * nd);
                let mut worse = false;
                let mut i = 0;
                while i < order.len() {
                    let d = order[i];
                    let s = if mirror {
                        self.sigma_inv(d)
                    } else {
                        self.sigma(d)
                    };
                    for nd2 in [self.alpha[d], s] {
                        if label[nd2] == u16::MAX {
                            label[nd2] = order.len() as u16;
                            order.push(nd2);
                        }
                        out.push(label[nd2]);
                        if let Some(b) = &best {
                            let k = out.len() - 1;
                            match out[k].cmp(&b[k]) {
                                std::cmp::Ordering::Less => {}
                                std::cmp::Ordering::Equal => {}
                                std::cmp::Ordering::Greater => {
                                    worse = true;
                                }
                            }
                            if out[k] < b[k] {
                                // Strictly better prefix: clear best so the
                                // remaining comparison is skipped.
                                best = None;
                            }
                        }
                        if worse {
                            break;
                        }
                    }
                    if worse {
                        break;
                    }
                    i += 1;
                }
                if worse {
                    continue;
                }
                match &best {
                    Some(b) if out >= *b => {}
                    _ => best = Some(out),
                }
            }
        }
        let seq = best.unwrap();
        let mut bytes = Vec::with_capacity(2 + seq.len() * 2);
        bytes.extend_from_slice(&(self.num_vertices() as u16).to_le_bytes());
        for x in seq {
            bytes.extend_from_slice(&x.to_le_bytes());
        }
        CanonicalCode { bytes }
    }

    /// Embedding isomorphism (reflections identified).
    pub fn are_isomorphic(&self, other: &PlaneGraph) -> bool {
        if self.num_vertices() != other.num_vertices()
            || self.num_darts() != other.num_darts()
        {
            return false;
        }
        self.canonical_code() == other.canonical_code()
    }

    /// Brute-force abstract (embedding-ignoring) isomorphism by backtracking.
    pub fn are_isomorphic_abstract(
        &self,
        other: &PlaneGraph,
        limit: usize,
    ) -> Result<bool, AbstractIsoError> {
        let n = self.num_vertices();
        if n > limit {
            return Err(AbstractIsoError::TooLarge(n, limit));
        }
        if other.num_vertices() > limit {
            return Err(AbstractIsoError::TooLarge(other.num_vertices(), limit));
        }
        if n != other.num_vertices() || self.num_edges() != other.num_edges() {
            return Ok(false);
        }
        let mut dg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut dh: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        dg.sort_unstable();
        dh.sort_unstable();
        if dg != dh {
            return Ok(false);
        }
        // Map vertices of self in BFS order so each new vertex has a mapped
        // neighbor, keeping the search shallow.
        let order = {
            let mut order = Vec::with_capacity(n);
            let mut seen = vec![false; n];
            let mut q = std::collections::VecDeque::from([0usize]);
            seen[0] = true;
            while let Some(v) = q.pop_front() {
                order.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        q.push_back(u);
                    }
                }
            }
            order
        };
        let adj_g: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| self.adjacent(u, v)).collect())
            .collect();
        let adj_h: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| other.adjacent(u, v)).collect())
            .collect();

        #[allow(clippy::too_many_arguments)]
        fn backtrack(
            k: usize,
            order: &[usize],
            map: &mut [usize],
            used: &mut [bool],
            g: &PlaneGraph,
            h: &PlaneGraph,
            adj_g: &[Vec<bool>],
            adj_h: &[Vec<bool>],
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let v = order[k];
            for img in 0..h.num_vertices() {
                if used[img] || g.degree(v) != h.degree(img) {
                    continue;
                }
                let ok = order[..k].iter().all(|&w| {
                    adj_g[v][w] == adj_h[img][map[w]]
                });
                if ok {
                    map[v] = img;
                    used[img] = true;
                    if backtrack(k + 1, order, map, used, g, h, adj_g, adj_h) {
                        return true;
                    }
                    used[img] = false;
                }
            }
            false
        }

        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        Ok(backtrack(
            0, &order, &mut map, &mut used, self, other, &adj_g, &adj_h,
        ))
    }

    /// Reflection: every vertex rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let rotations: Vec<Vec<VertexId>> = self
            .rotations()
            .into_iter()
            .map(|mut r| {
                r.reverse();
                r
            })
            .collect();
        PlaneGraph::build(&rotations).expect("mirror of a valid plane graph is valid")
    }

    /// Emit the `.rot` text format. `parse(serialize(g))` is dart-exact.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("n {}\n", self.num_vertices()));
        for v in 0..self.num_vertices() {
            let nbrs: Vec<String> = self.neighbors(v).iter().map(|u| u.to_string()).collect();
            s.push_str(&format!("v {}: {}\n", v, nbrs.join(" ")));
        }
        s
    }

    /// Parse the `.rot` text format: optional `#` comment lines, a header
    /// `n <count>`, then one `v <id>: <ccw neighbors>` line per vertex.
    pub fn parse(text: &str) -> Result<PlaneGraph, BuildError> {
        let mut n: Option<usize> = None;
        let mut rotations: Vec<Option<Vec<usize>>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = lineno + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("n ") {
                if n.is_some() {
                    return Err(BuildError::SyntaxError {
                        line: lineno,
                        msg: "duplicate header".into(),
                    });
                }
                let count: usize = rest.trim().parse().map_err(|_| BuildError::SyntaxError {
                    line: lineno,
                    msg: format!("bad vertex count {rest:?}"),
                })?;
                n = Some(count);
                rotations = vec![None; count];
            } else if let Some(rest) = line.strip_prefix("v ") {
                let count = n.ok_or(BuildError::SyntaxError {
                    line: lineno,
                    msg: "vertex line before header".into(),
                })?;
                let (id_part, nbr_part) =
                    rest.split_once(':').ok_or(BuildError::SyntaxError {
                        line: lineno,
                        msg: "missing ':'".into(),
                    })?;
                let id: usize = id_part.trim().parse().map_err(|_| BuildError::SyntaxError {
                    line: lineno,
                    msg: format!("bad vertex id {id_part:?}"),
                })?;
                if id >= count {
                    return Err(BuildError::SyntaxError {
                        line: lineno,
                        msg: format!("vertex id {id} out of range"),
                    });
                }
                if rotations[id].is_some() {
                    return Err(BuildError::SyntaxError {
                        line: lineno,
                        msg: format!("duplicate vertex {id}"),
                    });
                }
                let mut nbrs = Vec::new();
                for tok in nbr_part.split_whitespace() {
                    let u: usize = tok.parse().map_err(|_| BuildError::SyntaxError {
                        line: lineno,
                        msg: format!("bad neighbor id {tok:?}"),
                    })?;
                    nbrs.push(u);
                }
                rotations[id] = Some(nbrs);
            } else {
                return Err(BuildError::SyntaxError {
                    line: lineno,
                    msg: format!("unrecognized line {line:?}"),
                });
            }
        }
        let count = n.ok_or(BuildError::SyntaxError {
            line: 0,
            msg: "missing header".into(),
        })?;
        let mut rots = Vec::with_capacity(count);
        for (v, r) in rotations.into_iter().enumerate() {
            rots.push(r.ok_or(BuildError::SyntaxError {
                line: 0,
                msg: format!("missing vertex {v}"),
            })?);
        }
        PlaneGraph::build(&rots)
    }

    /// Shortest-path distances from a set of source vertices.
    pub fn bfs_distances(&self, sources: &[VertexId]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.num_vertices()];
        let mut q = std::collections::VecDeque::new();
        for &s in sources {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                q.push_back(s);
            }
        }
        while let Some(v) = q.pop_front() {
            for u in self.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
            }
        }
        dist
    }
}
