//! Nearly-Platonic classification: regularity, majority face size,
//! exceptional faces, touching status, face distance, saturation predicates,
//! block signatures and family identification.

use std::collections::BTreeSet;

use crate::families::{self, FamilyId};
use crate::planegraph::{FaceId, FaceSet, PlaneGraph, VertexId};

/// Why a graph is not nearly Platonic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotNP {
    #[error("graph is not regular")]
    NotRegular,
    #[error("no face size holds a strict majority")]
    NoMajorityFaceSize,
    #[error("regular of degree {0} < 3")]
    DegreeTooSmall(usize),
}

/// Classification result: k-regular, f faces of which all but t share size d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NPReport {
    pub k: usize,
    pub d: usize,
    pub t: usize,
    pub f: usize,
    /// The exceptional faces as (face id, size); sizes all differ from d.
    pub exceptional: Vec<(FaceId, usize)>,
    pub balanced: bool,
}

impl NPReport {
    pub fn is_platonic(&self) -> bool {
        self.t == 0
    }

    /// Sorted exceptional sizes; for t = 2 these are the paper's (m, n).
    pub fn exceptional_sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.exceptional.iter().map(|&(_, s)| s).collect();
        v.sort_unstable();
        v
    }
}

/// Relationship of the two exceptional faces of a t = 2 report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TouchingStatus {
    NonTouching,
    /// The faces share these vertices.
    Touching(Vec<VertexId>),
    /// This face's boundary walk repeats a vertex.
    SelfTouching(FaceId),
}

/// Decide nearly-Platonic status. Any t >= 0 is reported (t = 0 means
/// Platonic); the caller filters.
pub fn classify_nearly_platonic(g: &PlaneGraph) -> Result<NPReport, NotNP> {
    let n = g.num_vertices();
    let k = g.degree(0);
    if (1..n).any(|v| g.degree(v) != k) {
        return Err(NotNP::NotRegular);
    }
    if k < 3 {
        return Err(NotNP::DegreeTooSmall(k));
    }
    let faces = g.trace_faces();
    let f = faces.len();
    let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
    for face in &faces.faces {
        *counts.entry(face.size()).or_insert(0) += 1;
    }
    // d must hold a strict majority: f - t > t.
    let (&d, &cnt) = counts.iter().max_by_key(|&(_, &c)| c).unwrap();
    if 2 * cnt <= f {
        return Err(NotNP::NoMajorityFaceSize);
    }
    let exceptional: Vec<(FaceId, usize)> = faces
        .faces
        .iter()
        .enumerate()
        .filter(|(_, face)| face.size() != d)
        .map(|(i, face)| (i, face.size()))
        .collect();
    let t = exceptional.len();
    let balanced = match exceptional.first() {
        None => true,
        Some(&(_, s0)) => exceptional.iter().all(|&(_, s)| s == s0),
    };
    Ok(NPReport {
        k,
        d,
        t,
        f,
        exceptional,
        balanced,
    })
}

/// The five (k, d) pairs admitting two-exception graphs, derived from the
/// Euler and degree-sum identities rather than hard-coded: with all but two
/// faces of size d, the two leftover sizes sum to n(2k - d(k-2))/2, which is
/// positive for arbitrarily large n exactly when 2k > d(k-2).
pub fn admissible_2np_types() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 3..=6 {
        for d in 3..=6 {
            if 2 * k > d * (k - 2) {
                out.push((k, d));
            }
        }
    }
    out
}

/// Minimum over boundary-vertex pairs of the graph distance between two
/// faces; 0 exactly when they share a vertex.
pub fn face_distance(g: &PlaneGraph, faces: &FaceSet, f1: FaceId, f2: FaceId) -> usize {
    assert_ne!(f1, f2, "face distance needs two distinct faces");
    let b1: Vec<VertexId> = dedup(faces.vertex_walk(g, f1));
    let b2: BTreeSet<VertexId> = faces.vertex_walk(g, f2).into_iter().collect();
    let dist = g.bfs_distances(&b1);
    b2.iter().map(|&v| dist[v]).min().expect("faces are nonempty")
}

fn dedup(mut v: Vec<VertexId>) -> Vec<VertexId> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Touching relationship of the two exceptional faces. Requires t = 2.
pub fn touching_status(g: &PlaneGraph, report: &NPReport) -> TouchingStatus {
    assert_eq!(report.t, 2, "touching status is defined for t = 2");
    let faces = g.trace_faces();
    let (f1, f2) = (report.exceptional[0].0, report.exceptional[1].0);
    for f in [f1, f2] {
        let walk = faces.vertex_walk(g, f);
        if dedup(walk.clone()).len() != walk.len() {
            return TouchingStatus::SelfTouching(f);
        }
    }
    let b1: BTreeSet<VertexId> = faces.vertex_walk(g, f1).into_iter().collect();
    let shared: Vec<VertexId> = faces
        .vertex_walk(g, f2)
        .into_iter()
        .filter(|v| b1.contains(v))
        .collect();
    let shared = dedup(shared);
    if shared.is_empty() {
        TouchingStatus::NonTouching
    } else {
        TouchingStatus::Touching(shared)
    }
}

/// A vertex is saturated when it already has full degree k.
pub fn is_saturated(g: &PlaneGraph, v: VertexId, k: usize) -> bool {
    g.degree(v) == k
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("path has {got} vertices, weak saturation for d = {d} needs {want}")]
    BadPathLength { got: usize, want: usize, d: usize },
    #[error("vertex sequence is not a path in the graph")]
    NotAPath,
}

/// A path of length d-1 (d vertices) is weakly saturated when all its
/// internal vertices have degree k.
pub fn is_weakly_saturated(
    g: &PlaneGraph,
    path: &[VertexId],
    k: usize,
    d: usize,
) -> Result<bool, PathError> {
    if path.len() != d {
        return Err(PathError::BadPathLength {
            got: path.len(),
            want: d,
            d,
        });
    }
    for w in path.windows(2) {
        if !g.adjacent(w[0], w[1]) {
            return Err(PathError::NotAPath);
        }
    }
    Ok(path[1..path.len() - 1]
        .iter()
        .all(|&v| is_saturated(g, v, k)))
}

/// All vertices adjacent to the boundary of `f` but not on it.
pub fn face_neighborhood(g: &PlaneGraph, faces: &FaceSet, f: FaceId) -> BTreeSet<VertexId> {
    let boundary: BTreeSet<VertexId> = faces.vertex_walk(g, f).into_iter().collect();
    let mut out = BTreeSet::new();
    for &v in &boundary {
        for u in g.neighbors(v) {
            if !boundary.contains(&u) {
                out.insert(u);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BlockError {
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("not a block: {0}")]
    NotABlock(String),
}

/// A recognized (k; k1, k2 | d, <a, b>)-block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDescriptor {
    pub k: usize,
    pub k1: usize,
    pub k2: usize,
    pub d: usize,
    pub a: usize,
    pub b: usize,
    /// deg(x) = k1 >= k2 = deg(y).
    pub x: VertexId,
    pub y: VertexId,
    /// The outer walk starting at x; y sits at position a.
    pub boundary: Vec<VertexId>,
}

/// block_signature also recognizes the one-special-vertex analogue, which
/// the classification says cannot occur inside valid two-exception graphs;
/// it is reported rather than silently rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockSignature {
    Block(BlockDescriptor),
    Endblock {
        k: usize,
        k1: usize,
        d: usize,
        h: usize,
        x: VertexId,
    },
}

/// Recognize a (k; k1, k2 | d)-block with designated outer face: all faces
/// but `outer` share one size d, exactly two (or, flagged, one) vertices
/// fall short of the common degree k, and those lie on `outer`.
pub fn block_signature(g: &PlaneGraph, outer: FaceId) -> Result<BlockSignature, BlockError> {
    let s = g.structure();
    if !s.is_two_connected(g) {
        return Err(BlockError::NotTwoConnected);
    }
    let faces = g.trace_faces();
    if outer >= faces.len() {
        return Err(BlockError::NotABlock(format!("no face {outer}")));
    }
    let k = s.max_degree;
    let sub: Vec<VertexId> = (0..g.num_vertices())
        .filter(|&v| g.degree(v) < k)
        .collect();
    for &v in &sub {
        if g.degree(v) < 2 {
            return Err(BlockError::NotABlock(format!(
                "special vertex {v} has degree < 2"
            )));
        }
    }
    let mut inner_sizes = BTreeSet::new();
    for (f, face) in faces.faces.iter().enumerate() {
        if f != outer {
            inner_sizes.insert(face.size());
        }
    }
    if inner_sizes.len() != 1 {
        return Err(BlockError::NotABlock(format!(
            "inner faces have mixed sizes {inner_sizes:?}"
        )));
    }
    let d = *inner_sizes.iter().next().unwrap();
    let h = faces.faces[outer].size();
    if h == d {
        return Err(BlockError::NotABlock(
            "outer face has the common size".into(),
        ));
    }
    let walk = faces.vertex_walk(g, outer);
    match sub.len() {
        1 => {
            let x = sub[0];
            if !walk.contains(&x) {
                return Err(BlockError::NotABlock(
                    "special vertex not on the outer face".into(),
                ));
            }
            Ok(BlockSignature::Endblock {
                k,
                k1: g.degree(x),
                d,
                h,
                x,
            })
        }
        2 => {
            let (mut x, mut y) = (sub[0], sub[1]);
            if g.degree(x) < g.degree(y) {
                std::mem::swap(&mut x, &mut y);
            }
            let px = walk.iter().position(|&w| w == x);
            let py = walk.iter().position(|&w| w == y);
            let (px, py) = match (px, py) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(BlockError::NotABlock(
                        "special vertices not on the outer face".into(),
                    ))
                }
            };
            let fwd = (py + h - px) % h;
            let a = fwd.min(h - fwd);
            let b = h - a;
            // Boundary reported from x, oriented so y sits at position a.
            let mut boundary = Vec::with_capacity(h);
            if fwd == a {
                for i in 0..h {
                    boundary.push(walk[(px + i) % h]);
                }
            } else {
                for i in 0..h {
                    boundary.push(walk[(px + h - i % h) % h]);
                }
            }
            debug_assert_eq!(boundary[0], x);
            debug_assert_eq!(boundary[a], y);
            Ok(BlockSignature::Block(BlockDescriptor {
                k,
                k1: g.degree(x),
                k2: g.degree(y),
                d,
                a,
                b,
                x,
                y,
                boundary,
            }))
        }
        n => Err(BlockError::NotABlock(format!(
            "{n} vertices fall short of degree {k}"
        ))),
    }
}

/// Family identification outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Identification {
    Member(FamilyId, usize),
    Unrecognized,
}

/// Find the family member embedding-isomorphic to `g` by generating every
/// candidate whose type and order match.
pub fn identify_family(g: &PlaneGraph, report: &NPReport) -> Identification {
    assert_eq!(report.t, 2, "family identification is defined for t = 2");
    let n = g.num_vertices();
    let t = (report.k, report.d);
    for id in FamilyId::ALL {
        if id.np_type() != t {
            continue;
        }
        // Invert the order formula.
        let coeff = id.order(1);
        if !n.is_multiple_of(coeff) {
            continue;
        }
        let param = n / coeff;
        if param < id.param_min() || families::is_degenerate(id, param) {
            continue;
        }
        let candidate = families::generate(id, param).expect("parameter is in range");
        if g.are_isomorphic(&candidate) {
            return Identification::Member(id, param);
        }
    }
    Identification::Unrecognized
}

/// One tab-separated machine-readable line per classified graph: canonical
/// code, |V|, k, d, t, sorted exceptional sizes, balanced flag, family, param.
pub fn report_line(g: &PlaneGraph, report: &NPReport) -> String {
    let code = g.canonical_code().to_hex();
    let sizes = report
        .exceptional_sizes()
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let sizes = if sizes.is_empty() { "-".to_string() } else { sizes };
    let (fam, param) = if report.t == 2 {
        match identify_family(g, report) {
            Identification::Member(id, p) => (id.name().to_string(), p.to_string()),
            Identification::Unrecognized => ("unrecognized".to_string(), "-".to_string()),
        }
    } else {
        ("-".to_string(), "-".to_string())
    };
    format!(
        "{code}\t{}\t{}\t{}\t{}\t{sizes}\t{}\t{fam}\t{param}",
        g.num_vertices(),
        report.k,
        report.d,
        report.t,
        report.balanced
    )
}
