//! Generators for the five Platonic graphs, the fourteen infinite families
//! of two-exception graphs, and their building blocks.

use crate::planegraph::{FaceId, PlaneGraph, VertexId};
use crate::surgery::{self, MarkedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Solid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] = [
        Solid::Tetrahedron,
        Solid::Cube,
        Solid::Octahedron,
        Solid::Dodecahedron,
        Solid::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Cube => "cube",
            Solid::Octahedron => "octahedron",
            Solid::Dodecahedron => "dodecahedron",
            Solid::Icosahedron => "icosahedron",
        }
    }

    /// (vertex degree, face size) of the solid.
    pub fn type_kd(self) -> (usize, usize) {
        match self {
            Solid::Tetrahedron => (3, 3),
            Solid::Cube => (3, 4),
            Solid::Octahedron => (4, 3),
            Solid::Dodecahedron => (3, 5),
            Solid::Icosahedron => (5, 3),
        }
    }

    pub fn order(self) -> usize {
        match self {
            Solid::Tetrahedron => 4,
            Solid::Cube => 8,
            Solid::Octahedron => 6,
            Solid::Dodecahedron => 20,
            Solid::Icosahedron => 12,
        }
    }
}

/// The fourteen families, grouped by type as in the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    // (3|3)
    TetrahedronEdgeCycle,
    // (3|4)
    CubeEdgeCycle,
    Prism,
    // (3|5)
    DodecahedronEdgeCycle,
    Barrel,
    DodecahedronThickCycle,
    // (4|3)
    OctahedronEdgeCycle,
    OctahedronVertexCycle,
    Antiprism,
    // (5|3)
    IcosahedronEdgeCycle,
    IcosahedronVertexCycle,
    IcosahedronWideCycle,
    IcosahedronFirstThickCycle,
    IcosahedronSecondThickCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub param: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("parameter {param} too small for {family:?} (minimum {min})")]
    ParamTooSmall {
        family: FamilyId,
        param: usize,
        min: usize,
    },
    #[error("solid {0:?} has no {1} family")]
    UnsupportedSolid(Solid, &'static str),
    #[error("{0:?} is not a thick-cycle family")]
    NotAThickCycle(FamilyId),
}

/// One catalog row: a family, its type, parameter domain and order formula.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: FamilyId,
    /// (k, d): vertex degree and common face size.
    pub np_type: (usize, usize),
    pub param_min: usize,
    /// Parameter at which the construction degenerates to the base solid.
    pub degenerate_param: Option<usize>,
    pub param_range: &'static str,
    pub order_formula: &'static str,
}

impl FamilyId {
    pub const ALL: [FamilyId; 14] = [
        FamilyId::TetrahedronEdgeCycle,
        FamilyId::CubeEdgeCycle,
        FamilyId::Prism,
        FamilyId::DodecahedronEdgeCycle,
        FamilyId::Barrel,
        FamilyId::DodecahedronThickCycle,
        FamilyId::OctahedronEdgeCycle,
        FamilyId::OctahedronVertexCycle,
        FamilyId::Antiprism,
        FamilyId::IcosahedronEdgeCycle,
        FamilyId::IcosahedronVertexCycle,
        FamilyId::IcosahedronWideCycle,
        FamilyId::IcosahedronFirstThickCycle,
        FamilyId::IcosahedronSecondThickCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::TetrahedronEdgeCycle => "tetrahedron-edge-cycle",
            FamilyId::CubeEdgeCycle => "cube-edge-cycle",
            FamilyId::Prism => "prism",
            FamilyId::DodecahedronEdgeCycle => "dodecahedron-edge-cycle",
            FamilyId::Barrel => "barrel",
            FamilyId::DodecahedronThickCycle => "dodecahedron-thick-cycle",
            FamilyId::OctahedronEdgeCycle => "octahedron-edge-cycle",
            FamilyId::OctahedronVertexCycle => "octahedron-vertex-cycle",
            FamilyId::Antiprism => "antiprism",
            FamilyId::IcosahedronEdgeCycle => "icosahedron-edge-cycle",
            FamilyId::IcosahedronVertexCycle => "icosahedron-vertex-cycle",
            FamilyId::IcosahedronWideCycle => "icosahedron-wide-cycle",
            FamilyId::IcosahedronFirstThickCycle => "icosahedron-first-thick-cycle",
            FamilyId::IcosahedronSecondThickCycle => "icosahedron-second-thick-cycle",
        }
    }

    pub fn from_name(name: &str) -> Option<FamilyId> {
        FamilyId::ALL.iter().copied().find(|f| f.name() == name)
    }

    /// (k, d) of every member.
    pub fn np_type(self) -> (usize, usize) {
        match self {
            FamilyId::TetrahedronEdgeCycle => (3, 3),
            FamilyId::CubeEdgeCycle | FamilyId::Prism => (3, 4),
            FamilyId::DodecahedronEdgeCycle
            | FamilyId::Barrel
            | FamilyId::DodecahedronThickCycle => (3, 5),
            FamilyId::OctahedronEdgeCycle
            | FamilyId::OctahedronVertexCycle
            | FamilyId::Antiprism => (4, 3),
            FamilyId::IcosahedronEdgeCycle
            | FamilyId::IcosahedronVertexCycle
            | FamilyId::IcosahedronWideCycle
            | FamilyId::IcosahedronFirstThickCycle
            | FamilyId::IcosahedronSecondThickCycle => (5, 3),
        }
    }

    pub fn param_min(self) -> usize {
        match self {
            FamilyId::Prism
            | FamilyId::Antiprism
            | FamilyId::Barrel
            | FamilyId::IcosahedronWideCycle => 3,
            _ => 1,
        }
    }

    pub fn degenerate_param(self) -> Option<usize> {
        match self {
            FamilyId::Prism => Some(4),
            FamilyId::Antiprism => Some(3),
            FamilyId::Barrel => Some(5),
            FamilyId::IcosahedronWideCycle => Some(3),
            _ => Some(1),
        }
    }

    /// Number of vertices of the member with the given parameter.
    pub fn order(self, param: usize) -> usize {
        match self {
            FamilyId::TetrahedronEdgeCycle => 4 * param,
            FamilyId::CubeEdgeCycle => 8 * param,
            FamilyId::Prism | FamilyId::Antiprism => 2 * param,
            FamilyId::DodecahedronEdgeCycle | FamilyId::DodecahedronThickCycle => 20 * param,
            FamilyId::Barrel | FamilyId::IcosahedronWideCycle => 4 * param,
            FamilyId::OctahedronEdgeCycle | FamilyId::OctahedronVertexCycle => 6 * param,
            FamilyId::IcosahedronEdgeCycle
            | FamilyId::IcosahedronVertexCycle
            | FamilyId::IcosahedronFirstThickCycle
            | FamilyId::IcosahedronSecondThickCycle => 12 * param,
        }
    }

    /// Sizes of the two exceptional faces of a non-degenerate member.
    pub fn exceptional_size(self, param: usize) -> usize {
        match self {
            FamilyId::TetrahedronEdgeCycle
            | FamilyId::OctahedronEdgeCycle
            | FamilyId::IcosahedronEdgeCycle
            | FamilyId::OctahedronVertexCycle
            | FamilyId::IcosahedronVertexCycle
            | FamilyId::IcosahedronFirstThickCycle
            | FamilyId::IcosahedronSecondThickCycle => 3 * param,
            FamilyId::CubeEdgeCycle => 4 * param,
            FamilyId::DodecahedronEdgeCycle | FamilyId::DodecahedronThickCycle => 5 * param,
            FamilyId::Prism | FamilyId::Antiprism => param,
            FamilyId::Barrel | FamilyId::IcosahedronWideCycle => param,
        }
    }
}

/// All fourteen families with parameter domains and order formulas.
pub fn catalog() -> Vec<CatalogEntry> {
    fn entry(
        id: FamilyId,
        param_range: &'static str,
        order_formula: &'static str,
    ) -> CatalogEntry {
        CatalogEntry {
            id,
            np_type: id.np_type(),
            param_min: id.param_min(),
            degenerate_param: id.degenerate_param(),
            param_range,
            order_formula,
        }
    }
    vec![
        entry(FamilyId::TetrahedronEdgeCycle, "c >= 1, degenerate at 1", "4c"),
        entry(FamilyId::CubeEdgeCycle, "c >= 1, degenerate at 1", "8c"),
        entry(FamilyId::Prism, "n >= 3, degenerate at 4", "2n"),
        entry(FamilyId::DodecahedronEdgeCycle, "c >= 1, degenerate at 1", "20c"),
        entry(FamilyId::Barrel, "n >= 3, degenerate at 5", "4n"),
        entry(FamilyId::DodecahedronThickCycle, "c >= 1, degenerate at 1", "20c"),
        entry(FamilyId::OctahedronEdgeCycle, "c >= 1, degenerate at 1", "6c"),
        entry(FamilyId::OctahedronVertexCycle, "c >= 1, degenerate at 1", "6c"),
        entry(FamilyId::Antiprism, "n >= 3, degenerate at 3", "2n"),
        entry(FamilyId::IcosahedronEdgeCycle, "c >= 1, degenerate at 1", "12c"),
        entry(FamilyId::IcosahedronVertexCycle, "c >= 1, degenerate at 1", "12c"),
        entry(FamilyId::IcosahedronWideCycle, "n >= 3, degenerate at 3", "4n"),
        entry(FamilyId::IcosahedronFirstThickCycle, "c >= 1, degenerate at 1", "12c"),
        entry(FamilyId::IcosahedronSecondThickCycle, "c >= 1, degenerate at 1", "12c"),
    ]
}

fn platonic_rotations(s: Solid) -> Vec<Vec<VertexId>> {
    match s {
        Solid::Tetrahedron => vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
        Solid::Cube => vec![
            // Vertices indexed by binary coordinates x + 2y + 4z.
            vec![1, 4, 2],
            vec![3, 5, 0],
            vec![0, 6, 3],
            vec![2, 7, 1],
            vec![5, 6, 0],
            vec![7, 4, 1],
            vec![4, 7, 2],
            vec![6, 5, 3],
        ],
        Solid::Octahedron => vec![
            vec![1, 2, 3, 4],
            vec![2, 0, 4, 5],
            vec![3, 0, 1, 5],
            vec![4, 0, 2, 5],
            vec![1, 0, 3, 5],
            vec![1, 4, 3, 2],
        ],
        Solid::Dodecahedron => {
            // Outer pentagon a = 0..5, rings b = 5..10 and c = 10..15,
            // inner pentagon d = 15..20.
            let mut rot = Vec::with_capacity(20);
            for i in 0..5 {
                rot.push(vec![(i + 1) % 5, 5 + i, (i + 4) % 5]);
            }
            for i in 0..5 {
                rot.push(vec![i, 10 + i, 10 + (i + 4) % 5]);
            }
            for i in 0..5 {
                rot.push(vec![5 + (i + 1) % 5, 15 + i, 5 + i]);
            }
            for i in 0..5 {
                rot.push(vec![10 + i, 15 + (i + 1) % 5, 15 + (i + 4) % 5]);
            }
            rot
        }
        Solid::Icosahedron => {
            // Apex 0, upper pentagon u = 1..6, lower pentagon w = 6..11,
            // antipode 11.
            let u = |i: usize| 1 + i % 5;
            let w = |i: usize| 6 + i % 5;
            let mut rot = Vec::with_capacity(12);
            rot.push(vec![1, 2, 3, 4, 5]);
            for i in 0..5 {
                rot.push(vec![0, u(i + 4), w(i + 4), w(i), u(i + 1)]);
            }
            for i in 0..5 {
                rot.push(vec![11, w(i + 1), u(i + 1), u(i), w(i + 4)]);
            }
            rot.push(vec![6, 10, 9, 8, 7]);
            rot
        }
    }
}

/// Plane embedding of a Platonic solid's skeleton.
pub fn platonic(s: Solid) -> PlaneGraph {
    PlaneGraph::build(&platonic_rotations(s)).expect("platonic tables are valid")
}

/// The solid with the edge `{0, first neighbor of 0}` removed; the two
/// endpoints drop to degree k-1.
pub fn platonic_minus_edge(s: Solid) -> (PlaneGraph, VertexId, VertexId) {
    let mut rot = platonic_rotations(s);
    let u = 0;
    let v = rot[0][0];
    rot[u].retain(|&w| w != v);
    rot[v].retain(|&w| w != u);
    let g = PlaneGraph::build(&rot).expect("solid minus an edge is valid");
    (g, u, v)
}

/// The vertex-split block of the octahedron (arcs 2+2) or icosahedron
/// (arcs 3+2). Returns the block and its two sub-degree boundary vertices.
pub fn split_block(s: Solid) -> Result<(PlaneGraph, VertexId, VertexId), GenError> {
    let arc_len = match s {
        Solid::Octahedron => 2,
        Solid::Icosahedron => 3,
        other => return Err(GenError::UnsupportedSolid(other, "vertex-split block")),
    };
    let g = platonic(s);
    let (mg, x, y) = MarkedGraph::from_plane(&g)
        .split_vertex(0, 0, arc_len)
        .expect("splitting a solid vertex is valid");
    Ok((mg.finalize().expect("split block is simple"), x, y))
}

fn check_min(id: FamilyId, param: usize) -> Result<(), GenError> {
    let min = id.param_min();
    if param < min {
        return Err(GenError::ParamTooSmall {
            family: id,
            param,
            min,
        });
    }
    Ok(())
}

/// Two n-cycles joined by rungs; the cubic type-(3|4) family.
pub fn prism(n: usize) -> Result<PlaneGraph, GenError> {
    check_min(FamilyId::Prism, n)?;
    let x = |i: usize| i % n;
    let y = |i: usize| n + i % n;
    let mut rot = Vec::with_capacity(2 * n);
    for i in 0..n {
        rot.push(vec![x(i + 1), y(i), x(i + n - 1)]);
    }
    for i in 0..n {
        rot.push(vec![y(i + 1), y(i + n - 1), x(i)]);
    }
    Ok(PlaneGraph::build(&rot).expect("prism pattern is valid"))
}

/// Two n-cycles joined by a zigzag; the quartic type-(4|3) family.
pub fn antiprism(n: usize) -> Result<PlaneGraph, GenError> {
    check_min(FamilyId::Antiprism, n)?;
    let x = |i: usize| i % n;
    let y = |i: usize| n + i % n;
    let mut rot = Vec::with_capacity(2 * n);
    for i in 0..n {
        rot.push(vec![x(i + 1), y(i), y(i + n - 1), x(i + n - 1)]);
    }
    for i in 0..n {
        rot.push(vec![y(i + 1), y(i + n - 1), x(i), x(i + 1)]);
    }
    Ok(PlaneGraph::build(&rot).expect("antiprism pattern is valid"))
}

/// Two n-gons separated by two rings of n pentagons; the type-(3|5)
/// distance-3 family. The dodecahedron is the n = 5 member.
pub fn barrel(n: usize) -> Result<PlaneGraph, GenError> {
    check_min(FamilyId::Barrel, n)?;
    Ok(PlaneGraph::build(&surgery::barrel_rotations(n)).expect("barrel pattern is valid"))
}

/// Two n-gons separated by three rings of 6n triangles; the type-(5|3)
/// distance-2 family. The icosahedron is the n = 3 member.
pub fn wide_cycle(n: usize) -> Result<PlaneGraph, GenError> {
    check_min(FamilyId::IcosahedronWideCycle, n)?;
    let x = |i: usize| i % n;
    let v = |i: usize| n + i % n;
    let w = |i: usize| 2 * n + i % n;
    let y = |i: usize| 3 * n + i % n;
    let mut rot = Vec::with_capacity(4 * n);
    for i in 0..n {
        rot.push(vec![x(i + 1), w(i), v(i), w(i + n - 1), x(i + n - 1)]);
    }
    for i in 0..n {
        rot.push(vec![x(i), w(i), y(i), y(i + n - 1), w(i + n - 1)]);
    }
    for i in 0..n {
        rot.push(vec![x(i + 1), v(i + 1), y(i), v(i), x(i)]);
    }
    for i in 0..n {
        rot.push(vec![w(i), v(i + 1), y(i + 1), y(i + n - 1), v(i)]);
    }
    Ok(PlaneGraph::build(&rot).expect("wide cycle pattern is valid"))
}

/// c copies of the solid minus one edge, chained in a cycle by edges between
/// the degree-(k-1) endpoints of consecutive copies. c = 1 restores the solid.
pub fn edge_cycle(s: Solid, c: usize) -> Result<PlaneGraph, GenError> {
    let id = match s {
        Solid::Tetrahedron => FamilyId::TetrahedronEdgeCycle,
        Solid::Cube => FamilyId::CubeEdgeCycle,
        Solid::Octahedron => FamilyId::OctahedronEdgeCycle,
        Solid::Dodecahedron => FamilyId::DodecahedronEdgeCycle,
        Solid::Icosahedron => FamilyId::IcosahedronEdgeCycle,
    };
    check_min(id, c)?;
    let base = platonic_rotations(s);
    let n = base.len();
    let u = 0usize;
    let v = base[0][0];
    let pos_u = 0usize;
    let pos_v = base[v].iter().position(|&w| w == u).unwrap();
    let mut rot = Vec::with_capacity(c * n);
    for i in 0..c {
        for (w, nbrs) in base.iter().enumerate() {
            let mut r: Vec<VertexId> = nbrs.iter().map(|&x| x + i * n).collect();
            if w == u {
                // The connector from the previous copy occupies the deleted
                // edge's rotation slot.
                r[pos_u] = v + ((i + c - 1) % c) * n;
            }
            if w == v {
                r[pos_v] = u + ((i + 1) % c) * n;
            }
            rot.push(r);
        }
    }
    Ok(PlaneGraph::build(&rot).expect("edge cycle pattern is valid"))
}

/// c copies of the vertex-split block, chained in a cycle by amalgamating the
/// low-degree boundary vertices of consecutive copies. c = 1 restores the
/// solid.
pub fn vertex_cycle(s: Solid, c: usize) -> Result<PlaneGraph, GenError> {
    let id = match s {
        Solid::Octahedron => FamilyId::OctahedronVertexCycle,
        Solid::Icosahedron => FamilyId::IcosahedronVertexCycle,
        other => return Err(GenError::UnsupportedSolid(other, "vertex cycle")),
    };
    check_min(id, c)?;
    let (block, x, y) = split_block(s)?;
    let nb = block.num_vertices();
    // Interior vertices of each copy keep their order; the amalgams go last.
    let interior: Vec<VertexId> = (0..nb).filter(|&w| w != x && w != y).collect();
    let idx: std::collections::BTreeMap<VertexId, usize> =
        interior.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let ni = interior.len();
    let merged = |i: usize| c * ni + i % c;
    // y of copy i and x of copy i+1 merge into vertex M_i.
    let map = |w: VertexId, i: usize| -> VertexId {
        if w == x {
            merged((i + c - 1) % c)
        } else if w == y {
            merged(i)
        } else {
            i * ni + idx[&w]
        }
    };
    let mut rot: Vec<Vec<VertexId>> = vec![Vec::new(); c * ni + c];
    for i in 0..c {
        for &w in &interior {
            rot[i * ni + idx[&w]] = block.neighbors(w).into_iter().map(|h| map(h, i)).collect();
        }
        let mut m = Vec::with_capacity(block.degree(x) + block.degree(y));
        m.extend(block.neighbors(y).into_iter().map(|h| map(h, i)));
        m.extend(
            block
                .neighbors(x)
                .into_iter()
                .map(|h| map(h, (i + 1) % c)),
        );
        rot[merged(i)] = m;
    }
    Ok(PlaneGraph::build(&rot).expect("vertex cycle pattern is valid"))
}

/// Cut data for one thick-cycle family: the edge between the two chosen
/// distance-1 faces and the anchor faces themselves.
fn thick_cycle_cut(id: FamilyId) -> Result<(PlaneGraph, VertexId, VertexId, FaceId, FaceId), GenError> {
    let (solid, want_split) = match id {
        FamilyId::DodecahedronThickCycle => (Solid::Dodecahedron, false),
        FamilyId::IcosahedronFirstThickCycle => (Solid::Icosahedron, false),
        FamilyId::IcosahedronSecondThickCycle => (Solid::Icosahedron, true),
        other => return Err(GenError::NotAThickCycle(other)),
    };
    let g = platonic(solid);
    let faces = g.trace_faces();
    let walks: Vec<Vec<VertexId>> = (0..faces.len()).map(|f| faces.vertex_walk(&g, f)).collect();
    // Classify the neighbors of w that lie off the anchor face f by the side
    // of the crossing edge (w, other): scanning the rotation from the edge
    // dart, the f-corner of w separates the two sides. Returns true when
    // both sides are populated (the split configuration).
    let split_sides = |w: VertexId, other: VertexId, f: FaceId| -> bool {
        let e = g.dart_between(w, other).unwrap();
        let boundary = &walks[f];
        let pos = faces.faces[f]
            .darts
            .iter()
            .position(|&d| g.vertex_of(d) == w)
            .unwrap();
        let walk = &faces.faces[f].darts;
        let c2 = walk[pos];
        let mut side = 0usize;
        let mut counts = [0usize; 2];
        let mut d = g.sigma(e);
        while d != e {
            if d == c2 {
                side = 1;
            }
            let h = g.head(d);
            if !boundary.contains(&h) {
                counts[side] += 1;
            }
            d = g.sigma(d);
        }
        counts[0] > 0 && counts[1] > 0
    };
    // Deterministic scan for an edge joining two vertex-disjoint faces, with
    // the requested neighbor configuration at both endpoints.
    for e in 0..g.num_darts() {
        let (u, v) = (g.vertex_of(e), g.head(e));
        if u > v {
            continue;
        }
        for f1 in 0..faces.len() {
            if !walks[f1].contains(&u) || walks[f1].contains(&v) {
                continue;
            }
            for f2 in 0..faces.len() {
                if !walks[f2].contains(&v) || walks[f2].contains(&u) {
                    continue;
                }
                if walks[f1].iter().any(|w| walks[f2].contains(w)) {
                    continue;
                }
                let su = split_sides(u, v, f1);
                let sv = split_sides(v, u, f2);
                if su == want_split && sv == want_split {
                    return Ok((g, u, v, f1, f2));
                }
            }
        }
    }
    unreachable!("every thick-cycle base cut exists in its solid");
}

/// Strip replication along a distance-1 cut of the base solid. c = 1
/// restores the solid.
pub fn thick_cycle(id: FamilyId, c: usize) -> Result<PlaneGraph, GenError> {
    let (g, u, v, f1, f2) = thick_cycle_cut(id)?;
    check_min(id, c)?;
    let strip = MarkedGraph::from_plane(&g)
        .cut_edge(u, v, f1, f2)
        .expect("thick cycle cut is valid");
    Ok(strip
        .glue_cyclic_copies(c)
        .expect("thick cycle gluing is valid"))
}

/// Generate the member of `id` with parameter `param`.
pub fn generate(id: FamilyId, param: usize) -> Result<PlaneGraph, GenError> {
    match id {
        FamilyId::TetrahedronEdgeCycle => edge_cycle(Solid::Tetrahedron, param),
        FamilyId::CubeEdgeCycle => edge_cycle(Solid::Cube, param),
        FamilyId::Prism => prism(param),
        FamilyId::DodecahedronEdgeCycle => edge_cycle(Solid::Dodecahedron, param),
        FamilyId::Barrel => barrel(param),
        FamilyId::DodecahedronThickCycle => thick_cycle(id, param),
        FamilyId::OctahedronEdgeCycle => edge_cycle(Solid::Octahedron, param),
        FamilyId::OctahedronVertexCycle => vertex_cycle(Solid::Octahedron, param),
        FamilyId::Antiprism => antiprism(param),
        FamilyId::IcosahedronEdgeCycle => edge_cycle(Solid::Icosahedron, param),
        FamilyId::IcosahedronVertexCycle => vertex_cycle(Solid::Icosahedron, param),
        FamilyId::IcosahedronWideCycle => wide_cycle(param),
        FamilyId::IcosahedronFirstThickCycle => thick_cycle(id, param),
        FamilyId::IcosahedronSecondThickCycle => thick_cycle(id, param),
    }
}

/// Whether this parameter produces the base Platonic solid (t = 0).
pub fn is_degenerate(id: FamilyId, param: usize) -> bool {
    id.degenerate_param() == Some(param)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn platonic_counts() {
        let expect = [
            (Solid::Tetrahedron, 4, 6, 4, 3),
            (Solid::Cube, 8, 12, 6, 4),
            (Solid::Octahedron, 6, 12, 8, 3),
            (Solid::Dodecahedron, 20, 30, 12, 5),
            (Solid::Icosahedron, 12, 30, 20, 3),
        ];
        for (s, v, e, f, d) in expect {
            let g = platonic(s);
            assert_eq!(g.num_vertices(), v, "{s:?}");
            assert_eq!(g.num_edges(), e, "{s:?}");
            assert_eq!(g.num_faces(), f, "{s:?}");
            assert!(g.trace_faces().faces.iter().all(|fc| fc.size() == d));
        }
    }

    #[test]
    fn prism_4_is_cube() {
        assert!(prism(4).unwrap().are_isomorphic(&platonic(Solid::Cube)));
    }

    #[test]
    fn antiprism_3_is_octahedron() {
        assert!(antiprism(3)
            .unwrap()
            .are_isomorphic(&platonic(Solid::Octahedron)));
    }

    #[test]
    fn barrel_5_is_dodecahedron() {
        let b = barrel(5).unwrap();
        let d = platonic(Solid::Dodecahedron);
        assert!(b.are_isomorphic(&d));
        assert!(b.are_isomorphic_abstract(&d, 20).unwrap());
    }

    #[test]
    fn wide_cycle_3_is_icosahedron() {
        let w = wide_cycle(3).unwrap();
        let i = platonic(Solid::Icosahedron);
        assert!(w.are_isomorphic(&i));
        assert!(w.are_isomorphic_abstract(&i, 12).unwrap());
    }

    #[test]
    fn prism_6_counts() {
        let g = prism(6).unwrap();
        assert_eq!(g.num_vertices(), 12);
        assert_eq!(g.num_edges(), 18);
        assert_eq!(g.trace_faces().size_multiset(), vec![4, 4, 4, 4, 4, 4, 6, 6]);
    }

    #[test]
    fn barrel_counts() {
        let g = barrel(6).unwrap();
        assert_eq!(g.num_vertices(), 24);
        assert_eq!(g.num_edges(), 36);
        let sizes = g.trace_faces().size_multiset();
        assert_eq!(sizes.iter().filter(|&&s| s == 5).count(), 12);
        assert_eq!(sizes.iter().filter(|&&s| s == 6).count(), 2);
    }

    #[test]
    fn barrel_3_face_accounting() {
        let g = barrel(3).unwrap();
        assert_eq!(g.num_vertices(), 12);
        let sizes = g.trace_faces().size_multiset();
        assert_eq!(sizes, vec![3, 3, 5, 5, 5, 5, 5, 5]);
    }

    #[test]
    fn edge_cycle_degenerate_is_solid() {
        for s in Solid::ALL {
            let g = edge_cycle(s, 1).unwrap();
            assert!(g.are_isomorphic(&platonic(s)), "{s:?}");
        }
    }

    #[test]
    fn edge_cycle_tetra_2_counts() {
        let g = edge_cycle(Solid::Tetrahedron, 2).unwrap();
        assert_eq!(g.num_vertices(), 8);
        assert_eq!(g.num_edges(), 12);
        assert_eq!(g.trace_faces().size_multiset(), vec![3, 3, 3, 3, 6, 6]);
    }

    #[test]
    fn edge_cycle_cube_2_counts() {
        let g = edge_cycle(Solid::Cube, 2).unwrap();
        assert_eq!(g.num_vertices(), 16);
        let sizes = g.trace_faces().size_multiset();
        assert_eq!(sizes.iter().filter(|&&s| s == 8).count(), 2);
        assert_eq!(sizes.iter().filter(|&&s| s == 4).count(), 8);
    }

    #[test]
    fn edge_cycle_dodecahedron_sizes_scale() {
        for c in 2..=3 {
            let g = edge_cycle(Solid::Dodecahedron, c).unwrap();
            let sizes = g.trace_faces().size_multiset();
            assert_eq!(sizes.iter().filter(|&&s| s == 5 * c).count(), 2, "c={c}");
        }
    }

    #[test]
    fn vertex_cycle_degenerate_is_solid() {
        for s in [Solid::Octahedron, Solid::Icosahedron] {
            let g = vertex_cycle(s, 1).unwrap();
            assert!(g.are_isomorphic(&platonic(s)), "{s:?}");
        }
    }

    #[test]
    fn vertex_cycle_counts() {
        let g = vertex_cycle(Solid::Octahedron, 2).unwrap();
        assert_eq!(g.num_vertices(), 12);
        assert_eq!(g.num_edges(), 24);
        let sizes = g.trace_faces().size_multiset();
        assert_eq!(sizes.iter().filter(|&&s| s == 6).count(), 2);
        let g = vertex_cycle(Solid::Icosahedron, 2).unwrap();
        assert_eq!(g.num_vertices(), 24);
        assert_eq!(g.num_edges(), 60);
        let sizes = g.trace_faces().size_multiset();
        assert_eq!(sizes.iter().filter(|&&s| s == 6).count(), 2);
    }

    #[test]
    fn thick_cycle_degenerate_is_solid() {
        assert!(thick_cycle(FamilyId::DodecahedronThickCycle, 1)
            .unwrap()
            .are_isomorphic(&platonic(Solid::Dodecahedron)));
        assert!(thick_cycle(FamilyId::IcosahedronFirstThickCycle, 1)
            .unwrap()
            .are_isomorphic(&platonic(Solid::Icosahedron)));
        assert!(thick_cycle(FamilyId::IcosahedronSecondThickCycle, 1)
            .unwrap()
            .are_isomorphic(&platonic(Solid::Icosahedron)));
    }

    #[test]
    fn thick_cycle_counts() {
        let g = thick_cycle(FamilyId::DodecahedronThickCycle, 2).unwrap();
        assert_eq!(g.num_vertices(), 40);
        let sizes = g.trace_faces().size_multiset();
        assert_eq!(sizes.iter().filter(|&&s| s == 10).count(), 2);
        assert_eq!(sizes.iter().filter(|&&s| s == 5).count(), 20);

        for id in [
            FamilyId::IcosahedronFirstThickCycle,
            FamilyId::IcosahedronSecondThickCycle,
        ] {
            let g = thick_cycle(id, 2).unwrap();
            assert_eq!(g.num_vertices(), 24, "{id:?}");
            let sizes = g.trace_faces().size_multiset();
            assert_eq!(sizes.iter().filter(|&&s| s == 6).count(), 2, "{id:?}");
            assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 36, "{id:?}");
        }
    }

    #[test]
    fn icosahedron_thick_cycles_differ() {
        for c in 2..=3 {
            let a = thick_cycle(FamilyId::IcosahedronFirstThickCycle, c).unwrap();
            let b = thick_cycle(FamilyId::IcosahedronSecondThickCycle, c).unwrap();
            assert!(!a.are_isomorphic(&b), "c={c}");
        }
    }

    #[test]
    fn catalog_grouping() {
        let cat = catalog();
        assert_eq!(cat.len(), 14);
        let count = |t: (usize, usize)| cat.iter().filter(|e| e.np_type == t).count();
        assert_eq!(count((3, 3)), 1);
        assert_eq!(count((3, 4)), 2);
        assert_eq!(count((3, 5)), 3);
        assert_eq!(count((4, 3)), 3);
        assert_eq!(count((5, 3)), 5);
    }

    #[test]
    fn param_too_small() {
        assert!(matches!(
            prism(2),
            Err(GenError::ParamTooSmall { .. })
        ));
        assert!(matches!(
            vertex_cycle(Solid::Cube, 2),
            Err(GenError::UnsupportedSolid(..))
        ));
    }

    #[test]
    fn order_formulas_match_generated() {
        for entry in catalog() {
            for param in entry.param_min..entry.param_min + 3 {
                let g = generate(entry.id, param).unwrap();
                assert_eq!(
                    g.num_vertices(),
                    entry.id.order(param),
                    "{:?} param {param}",
                    entry.id
                );
            }
        }
    }
}
