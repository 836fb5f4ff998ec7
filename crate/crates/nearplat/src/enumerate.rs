//! Isomorph-free exhaustive generation of connected simple k-regular plane
//! graphs up to a vertex bound.
//!
//! The main engine grows rotation systems dart slot by dart slot: every
//! vertex is born with k slots whose index order is its rotation, and the
//! search repeatedly extends the partial face with the fewest open slots,
//! pairing one of them either with a fresh vertex or with another open slot
//! of the same face. Pairing only within one face keeps the Euler
//! characteristic at 2 throughout, so every completed assignment is planar
//! by construction. Completed graphs are deduplicated by canonical code,
//! which also folds reflections.
//!
//! An independent brute-force oracle enumerates abstract regular graphs by
//! adjacency backtracking and then all genus-0 rotation systems per graph;
//! the two engines are cross-checked in the acceptance suite.

use std::collections::BTreeMap;

use crate::classify::{self, NPReport};
use crate::planegraph::{CanonicalCode, PlaneGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    CanonicalAugmentation,
    BruteForceOracle,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("invalid enumeration spec: {0}")]
    BadSpec(String),
    #[error("brute-force oracle limit exceeded: k={k} supports n <= {max}, got {n}")]
    TooLarge { k: usize, n: usize, max: usize },
}

/// What to enumerate and how.
#[derive(Debug, Clone)]
pub struct EnumSpec {
    pub k: usize,
    pub max_vertices: usize,
    pub strategy: Strategy,
    /// Worker count hint; the current engine is sequential and treats this
    /// as documentation.
    pub parallelism: usize,
}

impl EnumSpec {
    pub fn new(k: usize, max_vertices: usize) -> Result<EnumSpec, EnumError> {
        if !(3..=5).contains(&k) {
            return Err(EnumError::BadSpec(format!("k must be in [3,5], got {k}")));
        }
        if max_vertices < k + 1 {
            return Err(EnumError::BadSpec(format!(
                "max_vertices {max_vertices} < k+1 = {}",
                k + 1
            )));
        }
        Ok(EnumSpec {
            k,
            max_vertices,
            strategy: Strategy::CanonicalAugmentation,
            parallelism: 1,
        })
    }
}

/// Largest n per k the brute-force oracle accepts.
pub fn oracle_limit(k: usize) -> usize {
    match k {
        3 => 10,
        4 => 9,
        _ => 12,
    }
}

const UNSET: usize = usize::MAX;

/// Slot-pairing DFS state. Dart d belongs to vertex d / k; slot order is
/// the counterclockwise rotation.
struct Search {
    k: usize,
    n_max: usize,
    nv: usize,
    alpha: Vec<usize>,
    /// adjacency bitmasks; n_max <= 64
    adj: Vec<u64>,
    closed_faces: usize,
    closed_size_sum: usize,
    /// (n, code) -> graph
    found: BTreeMap<(usize, CanonicalCode), PlaneGraph>,
    /// scratch generation marks for region walks
    seen: Vec<u32>,
    generation: u32,
}

impl Search {
    fn vertex(&self, d: usize) -> usize {
        d / self.k
    }

    fn sigma(&self, d: usize) -> usize {
        let v = d / self.k;
        v * self.k + (d % self.k + 1) % self.k
    }

    /// Stubs of the region (generalized face) through the paired dart `r0`,
    /// in walk order, marking the region's paired darts with the current
    /// generation.
    fn region_stubs(&mut self, r0: usize) -> Vec<usize> {
        let mut stubs = Vec::new();
        let mut d = r0;
        loop {
            self.seen[d] = self.generation;
            let mut e = self.sigma(self.alpha[d]);
            while self.alpha[e] == UNSET {
                stubs.push(e);
                e = self.sigma(e);
            }
            d = e;
            if d == r0 {
                break;
            }
        }
        stubs
    }

    /// Stub list of the region with the fewest open slots, or None when the
    /// assignment is complete. Completing the most constrained region first
    /// keeps the branching factor small and closes faces early.
    fn most_constrained_region(&mut self) -> Option<Vec<usize>> {
        self.generation += 1;
        let mut best: Option<Vec<usize>> = None;
        for d0 in 0..self.nv * self.k {
            if self.alpha[d0] == UNSET || self.seen[d0] == self.generation {
                continue;
            }
            let stubs = self.region_stubs(d0);
            if stubs.is_empty() {
                continue;
            }
            if best.as_ref().is_none_or(|b| stubs.len() < b.len()) {
                best = Some(stubs);
            }
        }
        best
    }

    /// If the face orbit through the paired dart `d` has no open slots it is
    /// final: returns its size and whether it contains `probe`.
    fn closed_orbit(&self, d: usize, probe: usize) -> Option<(usize, bool)> {
        let mut size = 0;
        let mut contains = false;
        let mut e = d;
        loop {
            size += 1;
            if e == probe {
                contains = true;
            }
            let s = self.sigma(self.alpha[e]);
            if self.alpha[s] == UNSET {
                return None;
            }
            e = s;
            if e == d {
                return Some((size, contains));
            }
        }
    }

    fn faces_required(&self, n: usize) -> usize {
        2 + n * (self.k - 2) / 2
    }

    /// Some final vertex count n >= nv can still absorb the closed faces.
    fn budget_ok(&self) -> bool {
        let mut n = self.nv;
        if self.k % 2 == 1 && n % 2 == 1 {
            n += 1;
        }
        let step = if self.k % 2 == 1 { 2 } else { 1 };
        while n <= self.n_max {
            let f_req = self.faces_required(n);
            if self.closed_faces <= f_req
                && self.closed_size_sum + 3 * (f_req - self.closed_faces) <= self.k * n
            {
                return true;
            }
            n += step;
        }
        false
    }

    fn emit(&mut self) {
        let n = self.nv;
        debug_assert_eq!(self.closed_faces, self.faces_required(n));
        debug_assert_eq!(self.closed_size_sum, self.k * n);
        let rotations: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                (0..self.k)
                    .map(|i| self.vertex(self.alpha[v * self.k + i]))
                    .collect()
            })
            .collect();
        let g = PlaneGraph::build(&rotations).expect("completed assignment is a plane graph");
        let code = g.canonical_code();
        self.found.entry((n, code)).or_insert(g);
    }

    fn pair(&mut self, a: usize, b: usize) {
        let (va, vb) = (self.vertex(a), self.vertex(b));
        self.alpha[a] = b;
        self.alpha[b] = a;
        self.adj[va] |= 1 << vb;
        self.adj[vb] |= 1 << va;
    }

    fn unpair(&mut self, a: usize, b: usize) {
        let (va, vb) = (self.vertex(a), self.vertex(b));
        self.alpha[a] = UNSET;
        self.alpha[b] = UNSET;
        self.adj[va] &= !(1 << vb);
        self.adj[vb] &= !(1 << va);
    }

    /// Try pairing the active stub with `other`, recursing when the freshly
    /// closed faces pass the size and budget checks.
    fn try_pair(&mut self, s: usize, other: usize) {
        self.pair(s, other);
        let mut ok = true;
        let mut closed: Vec<usize> = Vec::with_capacity(2);
        match self.closed_orbit(s, other) {
            Some((size, contains_other)) => {
                closed.push(size);
                if !contains_other {
                    if let Some((size2, _)) = self.closed_orbit(other, s) {
                        closed.push(size2);
                    }
                }
            }
            None => {
                if let Some((size2, _)) = self.closed_orbit(other, s) {
                    closed.push(size2);
                }
            }
        }
        if closed.iter().any(|&sz| sz < 3) {
            ok = false;
        }
        if ok {
            self.closed_faces += closed.len();
            self.closed_size_sum += closed.iter().sum::<usize>();
            if self.budget_ok() {
                self.dfs();
            }
            self.closed_faces -= closed.len();
            self.closed_size_sum -= closed.iter().sum::<usize>();
        }
        self.unpair(s, other);
    }

    fn dfs(&mut self) {
        let stubs = match self.most_constrained_region() {
            None => {
                self.emit();
                return;
            }
            Some(stubs) => stubs,
        };
        let s = stubs[0];
        let v = self.vertex(s);
        for &other in &stubs[1..] {
            let w = self.vertex(other);
            if w == v || self.adj[v] >> w & 1 == 1 {
                continue;
            }
            self.try_pair(s, other);
        }
        if self.nv < self.n_max {
            let w = self.nv;
            self.nv += 1;
            self.try_pair(s, w * self.k);
            self.nv -= 1;
        }
    }
}

/// Exactly one representative per embedding-isomorphism class (reflections
/// identified) of connected simple k-regular plane graphs with at most
/// `spec.max_vertices` vertices, ordered by vertex count and then by
/// canonical code.
pub fn enumerate_k_regular(spec: &EnumSpec) -> Result<Vec<PlaneGraph>, EnumError> {
    if !(3..=5).contains(&spec.k) {
        return Err(EnumError::BadSpec(format!("k = {}", spec.k)));
    }
    if spec.max_vertices < spec.k + 1 {
        return Err(EnumError::BadSpec(format!(
            "max_vertices {} < {}",
            spec.max_vertices,
            spec.k + 1
        )));
    }
    if spec.max_vertices > 60 {
        return Err(EnumError::BadSpec(
            "enumeration supports at most 60 vertices".into(),
        ));
    }
    match spec.strategy {
        Strategy::CanonicalAugmentation => {
            let k = spec.k;
            let mut search = Search {
                k,
                n_max: spec.max_vertices,
                nv: 2,
                alpha: vec![UNSET; spec.max_vertices * k],
                adj: vec![0; spec.max_vertices],
                closed_faces: 0,
                closed_size_sum: 0,
                found: BTreeMap::new(),
                seen: vec![0; spec.max_vertices * k],
                generation: 0,
            };
            // First edge: vertex 0 slot 0 to vertex 1 slot 0.
            search.pair(0, k);
            search.dfs();
            Ok(search.found.into_values().collect())
        }
        Strategy::BruteForceOracle => {
            let limit = oracle_limit(spec.k);
            if spec.max_vertices > limit {
                return Err(EnumError::TooLarge {
                    k: spec.k,
                    n: spec.max_vertices,
                    max: limit,
                });
            }
            let mut out = Vec::new();
            for n in spec.k + 1..=spec.max_vertices {
                if spec.k * n % 2 == 1 {
                    continue;
                }
                let graphs = oracle_graphs(spec.k, n)?;
                out.extend(graphs.into_values());
            }
            Ok(out)
        }
    }
}

/// Canonical codes of all connected simple k-regular plane graphs on exactly
/// n vertices, found by the independent brute-force route.
pub fn bruteforce_oracle(k: usize, n: usize) -> Result<std::collections::BTreeSet<CanonicalCode>, EnumError> {
    Ok(oracle_graphs(k, n)?.into_keys().collect())
}

fn oracle_graphs(k: usize, n: usize) -> Result<BTreeMap<CanonicalCode, PlaneGraph>, EnumError> {
    let limit = oracle_limit(k);
    if n > limit {
        return Err(EnumError::TooLarge { k, n, max: limit });
    }
    let mut out = BTreeMap::new();
    if n < k + 1 || k * n % 2 == 1 {
        return Ok(out);
    }
    let e = k * n / 2;
    if n >= 3 && e > 3 * n - 6 {
        return Ok(out); // too dense for any planar embedding
    }
    let tight = n >= 3 && e == 3 * n - 6;

    // Stage A: abstract k-regular connected graphs by adjacency
    // backtracking. Vertex 0's neighborhood is pinned to {1..k} and fresh
    // vertices are introduced in label order, which removes most label
    // symmetry; the leftover relabelings of each class are merged by an
    // invariant-bucketed isomorphism check before any embedding work.
    let mut adj: Vec<u32> = vec![0; n];
    let mut deg: Vec<usize> = vec![0; n];
    for u in 1..=k {
        adj[0] |= 1 << u;
        adj[u] |= 1;
        deg[u] = 1;
    }
    deg[0] = k;
    let mut ctx = OracleCtx {
        k,
        n,
        tight,
        reps: std::collections::HashMap::new(),
    };
    extend_vertex(&mut ctx, &mut adj, &mut deg, 1, k);

    // Stage B once per abstract isomorphism class.
    let reps: Vec<Vec<u32>> = ctx.reps.into_values().flatten().collect();
    for adj in reps {
        embed_all(k, n, &adj, &mut out);
    }
    Ok(out)
}

struct OracleCtx {
    k: usize,
    n: usize,
    tight: bool,
    /// invariant -> representatives of distinct abstract classes
    reps: std::collections::HashMap<Vec<u32>, Vec<Vec<u32>>>,
}

/// Cheap abstract-isomorphism invariant: per vertex, the sorted list of
/// common-neighbor counts along its edges plus its distance profile, the
/// whole table sorted.
fn abstract_invariant(adj: &[u32], n: usize) -> Vec<u32> {
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut row = Vec::new();
        for u in 0..n {
            if adj[v] >> u & 1 == 1 {
                row.push((adj[v] & adj[u]).count_ones());
            }
        }
        row.sort_unstable();
        // BFS distance profile from v.
        let mut dist = vec![u32::MAX; n];
        let mut q = std::collections::VecDeque::from([v]);
        dist[v] = 0;
        while let Some(w) = q.pop_front() {
            for u in 0..n {
                if adj[w] >> u & 1 == 1 && dist[u] == u32::MAX {
                    dist[u] = dist[w] + 1;
                    q.push_back(u);
                }
            }
        }
        dist.sort_unstable();
        row.extend(dist);
        rows.push(row);
    }
    rows.sort();
    rows.into_iter().flatten().collect()
}

/// Backtracking isomorphism test on adjacency bitmasks.
fn abstract_iso(a: &[u32], b: &[u32], n: usize) -> bool {
    fn go(a: &[u32], b: &[u32], v: usize, map: &mut [usize], used: &mut u32, n: usize) -> bool {
        if v == n {
            return true;
        }
        for im in 0..n {
            if *used >> im & 1 == 1 {
                continue;
            }
            let ok = (0..v).all(|w| (a[v] >> w & 1) == (b[im] >> map[w] & 1));
            if ok {
                map[v] = im;
                *used |= 1 << im;
                if go(a, b, v + 1, map, used, n) {
                    return true;
                }
                *used &= !(1 << im);
            }
        }
        false
    }
    let mut map = vec![0usize; n];
    let mut used = 0u32;
    go(a, b, 0, &mut map, &mut used, n)
}

/// Complete vertex v's adjacency and recurse; `max_touched` is the highest
/// vertex with any edge so far.
fn extend_vertex(
    ctx: &mut OracleCtx,
    adj: &mut Vec<u32>,
    deg: &mut Vec<usize>,
    v: usize,
    max_touched: usize,
) {
    let (k, n) = (ctx.k, ctx.n);
    if ctx.tight && v > 0 {
        // In the triangulation-forced case every edge borders two triangles.
        // Vertices below v are complete, so for the freshly completed vertex
        // the common neighborhoods along its lower edges are final.
        let u = v - 1;
        for a in 0..u {
            if adj[u] >> a & 1 == 1 && (adj[a] & adj[u]).count_ones() < 2 {
                return;
            }
        }
    }
    if v == n {
        let inv = abstract_invariant(adj, n);
        let bucket = ctx.reps.entry(inv).or_default();
        if !bucket.iter().any(|rep| abstract_iso(adj, rep, n)) {
            bucket.push(adj.clone());
        }
        return;
    }
    if deg[v] == 0 {
        return; // disconnected from the processed prefix
    }
    let need = k - deg[v];
    // Choose `need` neighbors above v in increasing order.
    #[allow(clippy::too_many_arguments)]
    fn choose(
        ctx: &mut OracleCtx,
        adj: &mut Vec<u32>,
        deg: &mut Vec<usize>,
        v: usize,
        mut from: usize,
        need: usize,
        max_touched: usize,
    ) {
        if need == 0 {
            extend_vertex(ctx, adj, deg, v + 1, max_touched);
            return;
        }
        let n = ctx.n;
        while from < n {
            let u = from;
            from += 1;
            if u > max_touched + 1 {
                break; // fresh vertices only in label order
            }
            if adj[v] >> u & 1 == 1 || deg[u] >= ctx.k {
                continue;
            }
            adj[v] |= 1 << u;
            adj[u] |= 1 << v;
            deg[u] += 1;
            deg[v] += 1;
            choose(ctx, adj, deg, v, from, need - 1, max_touched.max(u));
            deg[u] -= 1;
            deg[v] -= 1;
            adj[v] &= !(1 << u);
            adj[u] &= !(1 << v);
        }
    }
    choose(ctx, adj, deg, v, v + 1, need, max_touched);
}

/// Stage B: all genus-0 rotation systems of one abstract graph, by assigning
/// cyclic neighbor orders vertex by vertex with face-size pruning.
struct Embedder {
    k: usize,
    n: usize,
    e: usize,
    f_target: usize,
    /// No face fits above this once the others take their minimum of 3.
    max_face: usize,
    /// A corner whose two consecutive neighbors are non-adjacent lies on a
    /// face of size > 3; at most 4 * (2E - 3F) such corners can exist.
    nonadj_budget: usize,
    adj: Vec<u32>,
    nbrs: Vec<Vec<usize>>,
    rot: Vec<Vec<usize>>,
    /// per-permutation scratch: dart -> visit generation
    seen: Vec<u32>,
    generation: u32,
}

impl Embedder {
    /// Scan all face walks over the first `depth` assigned vertices. None
    /// means some closed face or open walk already violates the budget;
    /// Some(true) means the assignment is complete and planar.
    fn faces_ok(&mut self, depth: usize) -> Option<bool> {
        let (k, n) = (self.k, self.n);
        self.generation += 1;
        let gen = self.generation;
        let mut closed = 0usize;
        let mut closed_sum = 0usize;
        for d0 in 0..n * k {
            let (v0, i0) = (d0 / k, d0 % k);
            if v0 >= depth || i0 >= self.rot[v0].len() || self.seen[d0] == gen {
                continue;
            }
            let mut length = 0usize;
            let mut d = d0;
            let closed_here = loop {
                self.seen[d] = gen;
                length += 1;
                if length > self.max_face {
                    return None;
                }
                let (v, i) = (d / k, d % k);
                let u = self.rot[v][i];
                if u >= depth {
                    break false;
                }
                let j = self.rot[u]
                    .iter()
                    .position(|&w| w == v)
                    .expect("symmetric adjacency");
                d = u * k + (j + 1) % self.rot[u].len();
                if d == d0 {
                    break true;
                }
                if self.seen[d] == gen {
                    break false; // joined a previously scanned open walk
                }
            };
            if closed_here {
                if length < 3 {
                    return None;
                }
                closed += 1;
                closed_sum += length;
                if closed > self.f_target
                    || closed_sum + 3 * (self.f_target - closed) > 2 * self.e
                {
                    return None;
                }
            }
        }
        Some(closed == self.f_target && depth == n)
    }

    /// Corners of this rotation whose two consecutive neighbors are not
    /// adjacent in the graph.
    fn nonadjacent_corners(&self, order: &[usize]) -> usize {
        let k = order.len();
        (0..k)
            .filter(|&i| {
                let (a, b) = (order[i], order[(i + 1) % k]);
                self.adj[a] >> b & 1 == 0
            })
            .count()
    }

    fn assign(
        &mut self,
        v: usize,
        nonadj: usize,
        out: &mut BTreeMap<CanonicalCode, PlaneGraph>,
    ) {
        if v == self.n {
            if self.faces_ok(self.n) == Some(true) {
                let g = PlaneGraph::build(&self.rot).expect("verified rotation system");
                let code = g.canonical_code();
                out.entry(code).or_insert_with(|| g);
            }
            return;
        }
        // All cyclic orders: first neighbor pinned, permute the rest. For
        // vertex 0 only reversal representatives are kept; the mirror image
        // shares its canonical code anyway.
        let mut rest: Vec<usize> = self.nbrs[v][1..].to_vec();
        let mut perms: Vec<Vec<usize>> = Vec::new();
        permute(&mut rest, 0, &mut |p| {
            if v == 0 {
                let rev: Vec<usize> = p.iter().rev().copied().collect();
                if rev[..] < *p {
                    return;
                }
            }
            perms.push(p.to_vec());
        });
        let first = self.nbrs[v][0];
        for p in perms {
            self.rot[v].clear();
            self.rot[v].push(first);
            self.rot[v].extend_from_slice(&p);
            let here = nonadj + self.nonadjacent_corners(&self.rot[v]);
            if here <= self.nonadj_budget && self.faces_ok(v + 1).is_some() {
                self.assign(v + 1, here, out);
            }
        }
        self.rot[v].clear();
    }
}

fn permute(items: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, f);
        items.swap(at, i);
    }
}

fn embed_all(k: usize, n: usize, adj: &[u32], out: &mut BTreeMap<CanonicalCode, PlaneGraph>) {
    let e = k * n / 2;
    let f_target = 2 + e - n;
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| adj[v] >> u & 1 == 1).collect())
        .collect();
    let mut emb = Embedder {
        k,
        n,
        e,
        f_target,
        max_face: 2 * e - 3 * (f_target - 1),
        nonadj_budget: 4 * (2 * e - 3 * f_target),
        adj: adj.to_vec(),
        nbrs,
        rot: vec![Vec::new(); n],
        seen: vec![0; n * k],
        generation: 0,
    };
    emb.assign(0, 0, out);
}

/// Filter an enumeration stream down to nearly-Platonic graphs, optionally
/// restricted to a given number of exceptional faces.
pub fn filter_nearly_platonic(
    graphs: impl IntoIterator<Item = PlaneGraph>,
    t_filter: Option<usize>,
) -> impl Iterator<Item = (PlaneGraph, NPReport)> {
    graphs.into_iter().filter_map(move |g| {
        let report = classify::classify_nearly_platonic(&g).ok()?;
        if let Some(t) = t_filter {
            if report.t != t {
                return None;
            }
        }
        Some((g, report))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, Solid};

    fn codes_of(graphs: &[PlaneGraph], n: usize) -> Vec<CanonicalCode> {
        graphs
            .iter()
            .filter(|g| g.num_vertices() == n)
            .map(|g| g.canonical_code())
            .collect()
    }

    #[test]
    fn smallest_cubic_is_k4() {
        let spec = EnumSpec::new(3, 4).unwrap();
        let graphs = enumerate_k_regular(&spec).unwrap();
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0].are_isomorphic(&families::platonic(Solid::Tetrahedron)));
    }

    #[test]
    fn smallest_quartic_is_octahedron() {
        let spec = EnumSpec::new(4, 6).unwrap();
        let graphs = enumerate_k_regular(&spec).unwrap();
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0].are_isomorphic(&families::platonic(Solid::Octahedron)));
    }

    #[test]
    fn smallest_quintic_is_icosahedron() {
        let spec = EnumSpec::new(5, 12).unwrap();
        let graphs = enumerate_k_regular(&spec).unwrap();
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0].are_isomorphic(&families::platonic(Solid::Icosahedron)));
    }

    #[test]
    fn cubic_on_six_is_the_prism() {
        let oracle = bruteforce_oracle(3, 6).unwrap();
        let prism = families::prism(3).unwrap();
        assert_eq!(oracle.len(), 1);
        assert!(oracle.contains(&prism.canonical_code()));
    }

    #[test]
    fn oracle_matches_enumerator_small() {
        for (k, n_max) in [(3, 8), (4, 7)] {
            let spec = EnumSpec::new(k, n_max).unwrap();
            let graphs = enumerate_k_regular(&spec).unwrap();
            for n in (k + 1)..=n_max {
                if k * n % 2 == 1 {
                    continue;
                }
                let oracle = bruteforce_oracle(k, n).unwrap();
                let mine: std::collections::BTreeSet<CanonicalCode> =
                    codes_of(&graphs, n).into_iter().collect();
                assert_eq!(mine, oracle, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn no_duplicate_codes_and_all_regular() {
        let spec = EnumSpec::new(3, 10).unwrap();
        let graphs = enumerate_k_regular(&spec).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for g in &graphs {
            assert!((0..g.num_vertices()).all(|v| g.degree(v) == 3));
            assert!(seen.insert(g.canonical_code()), "duplicate emitted");
        }
    }

    #[test]
    fn filter_passes_prism_and_chain() {
        let spec = EnumSpec::new(3, 8).unwrap();
        let graphs = enumerate_k_regular(&spec).unwrap();
        let found: Vec<(PlaneGraph, NPReport)> =
            filter_nearly_platonic(graphs, Some(2)).collect();
        let chain = families::edge_cycle(Solid::Tetrahedron, 2).unwrap();
        let prism3 = families::prism(3).unwrap();
        assert!(found.iter().any(|(g, _)| g.are_isomorphic(&chain)));
        assert!(found.iter().any(|(g, _)| g.are_isomorphic(&prism3)));
    }

    #[test]
    fn oracle_rejects_out_of_range() {
        assert!(matches!(
            bruteforce_oracle(3, 11),
            Err(EnumError::TooLarge { .. })
        ));
    }

    #[test]
    fn spec_validation() {
        assert!(EnumSpec::new(2, 10).is_err());
        assert!(EnumSpec::new(3, 3).is_err());
    }
}
