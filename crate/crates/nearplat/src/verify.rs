//! The theorem harness: exhaustively enumerate k-regular plane graphs,
//! classify every one, and check the classification claims over the searched
//! range. A violated claim becomes a report entry, never a crash; an
//! unexpected graph is this module's most valuable output.

use std::collections::BTreeMap;

use crate::classify::{
    self, BlockSignature, Identification, NPReport, TouchingStatus,
};
use crate::enumerate::{enumerate_k_regular, EnumError, EnumSpec};
use crate::families::{FamilyId, Solid};
use crate::planegraph::{PlaneGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LawError {
    #[error("vertex count law applies to non-touching type (5|3) reports only")]
    WrongType,
}

/// One graph with exactly one exceptional face; the classification says
/// these cannot exist.
#[derive(Debug, Clone)]
pub struct Np1Finding {
    pub code_hex: String,
    pub n: usize,
    pub np_type: (usize, usize),
    pub exceptional_size: usize,
}

/// One two-exception graph found by the sweep.
#[derive(Debug, Clone)]
pub struct Np2Finding {
    pub code_hex: String,
    pub n: usize,
    pub np_type: (usize, usize),
    pub exceptional_sizes: Vec<usize>,
    pub balanced: bool,
    pub touching: bool,
    pub family: Option<(FamilyId, usize)>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub k: usize,
    pub max_vertices: usize,
    /// graphs enumerated per vertex count
    pub counts: BTreeMap<usize, usize>,
    pub np1_found: Vec<Np1Finding>,
    pub np2_found: Vec<Np2Finding>,
    pub violations: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Human-readable summary, one line per fact.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let total: usize = self.counts.values().sum();
        out.push_str(&format!(
            "k={} up to {} vertices: {} plane graphs\n",
            self.k, self.max_vertices, total
        ));
        for (n, c) in &self.counts {
            out.push_str(&format!("  n={n}: {c}\n"));
        }
        out.push_str(&format!(
            "one-exception graphs found: {} (expected 0)\n",
            self.np1_found.len()
        ));
        out.push_str(&format!(
            "two-exception graphs found: {}\n",
            self.np2_found.len()
        ));
        for f in &self.np2_found {
            let fam = match &f.family {
                Some((id, p)) => format!("{} {}", id.name(), p),
                None => "UNRECOGNIZED".to_string(),
            };
            out.push_str(&format!(
                "  n={} type ({}|{}) sizes {:?} {} -> {}\n",
                f.n,
                f.np_type.0,
                f.np_type.1,
                f.exceptional_sizes,
                if f.touching { "touching" } else { "non-touching" },
                fam
            ));
        }
        if self.violations.is_empty() {
            out.push_str("violations: none\n");
        } else {
            out.push_str(&format!("violations: {}\n", self.violations.len()));
            for v in &self.violations {
                out.push_str(&format!("  VIOLATION: {v}\n"));
            }
        }
        out
    }

    /// Machine-readable report: one classification line per two-exception
    /// graph plus a violations section.
    pub fn machine_report(&self, graphs: &[(PlaneGraph, NPReport)]) -> String {
        let mut out = String::new();
        for (g, r) in graphs {
            out.push_str(&classify::report_line(g, r));
            out.push('\n');
        }
        out.push_str("# violations\n");
        for v in &self.violations {
            out.push_str(&format!("# {v}\n"));
        }
        out
    }
}

/// Confirm the absence of one-exception graphs over the searched range.
pub fn verify_no_1np(k: usize, max_vertices: usize) -> Result<VerificationReport, EnumError> {
    sweep(k, max_vertices)
}

/// Confirm that every two-exception graph over the searched range is
/// balanced, belongs to one of the fourteen families, and satisfies the
/// touching/distance laws.
pub fn verify_2np_classification(
    k: usize,
    max_vertices: usize,
) -> Result<VerificationReport, EnumError> {
    sweep(k, max_vertices)
}

/// For a non-touching type (5|3) report: |V| = 2(m + n).
pub fn verify_vertex_count_law(g: &PlaneGraph, report: &NPReport) -> Result<bool, LawError> {
    if report.t != 2 || (report.k, report.d) != (5, 3) {
        return Err(LawError::WrongType);
    }
    if !matches!(classify::touching_status(g, report), TouchingStatus::NonTouching) {
        return Err(LawError::WrongType);
    }
    let sizes = report.exceptional_sizes();
    Ok(g.num_vertices() == 2 * (sizes[0] + sizes[1]))
}

fn sweep(k: usize, max_vertices: usize) -> Result<VerificationReport, EnumError> {
    let spec = EnumSpec::new(k, max_vertices)?;
    let graphs = enumerate_k_regular(&spec)?;
    let mut report = VerificationReport {
        k,
        max_vertices,
        counts: BTreeMap::new(),
        np1_found: Vec::new(),
        np2_found: Vec::new(),
        violations: Vec::new(),
    };
    let admissible = classify::admissible_2np_types();
    for g in &graphs {
        *report.counts.entry(g.num_vertices()).or_insert(0) += 1;
        let r = match classify::classify_nearly_platonic(g) {
            Ok(r) => r,
            Err(_) => continue,
        };
        match r.t {
            0 => {}
            1 => {
                let code_hex = g.canonical_code().to_hex();
                report.violations.push(format!(
                    "one-exception graph exists: n={} type ({}|{}) code {}",
                    g.num_vertices(),
                    r.k,
                    r.d,
                    code_hex
                ));
                report.np1_found.push(Np1Finding {
                    code_hex,
                    n: g.num_vertices(),
                    np_type: (r.k, r.d),
                    exceptional_size: r.exceptional[0].1,
                });
            }
            2 => check_np2(g, &r, &admissible, &mut report),
            _ => {}
        }
    }
    Ok(report)
}

fn check_np2(
    g: &PlaneGraph,
    r: &NPReport,
    admissible: &[(usize, usize)],
    report: &mut VerificationReport,
) {
    let code_hex = g.canonical_code().to_hex();
    let label = format!("n={} code {}", g.num_vertices(), code_hex);
    if !r.balanced {
        report
            .violations
            .push(format!("unbalanced two-exception graph: {label}"));
    }
    if !admissible.contains(&(r.k, r.d)) {
        report.violations.push(format!(
            "inadmissible type ({}|{}): {label}",
            r.k, r.d
        ));
    }
    let family = match classify::identify_family(g, r) {
        Identification::Member(id, p) => Some((id, p)),
        Identification::Unrecognized => {
            report
                .violations
                .push(format!("two-exception graph outside the 14 families: {label}"));
            None
        }
    };
    let status = classify::touching_status(g, r);
    let touching = match &status {
        TouchingStatus::SelfTouching(f) => {
            report
                .violations
                .push(format!("self-touching exceptional face {f}: {label}"));
            true
        }
        TouchingStatus::Touching(shared) => {
            check_chain_structure(g, r, shared, family, report, &label);
            true
        }
        TouchingStatus::NonTouching => {
            check_non_touching_laws(g, r, report, &label);
            false
        }
    };
    report.np2_found.push(Np2Finding {
        code_hex,
        n: g.num_vertices(),
        np_type: (r.k, r.d),
        exceptional_sizes: r.exceptional_sizes(),
        balanced: r.balanced,
        touching,
        family,
    });
}

fn check_non_touching_laws(
    g: &PlaneGraph,
    r: &NPReport,
    report: &mut VerificationReport,
    label: &str,
) {
    let faces = g.trace_faces();
    let (f1, f2) = (r.exceptional[0].0, r.exceptional[1].0);
    let l = classify::face_distance(g, &faces, f1, f2);
    match (r.k, r.d) {
        (3, 3) => report.violations.push(format!(
            "non-touching type (3|3) graph should not exist: {label}"
        )),
        (3, 5) => {
            if l != 1 && l != 3 {
                report.violations.push(format!(
                    "non-touching (3|5) distance {l} not in {{1,3}}: {label}"
                ));
            }
        }
        (5, 3) => {
            if !(1..=2).contains(&l) {
                report.violations.push(format!(
                    "non-touching (5|3) distance {l} not in {{1,2}}: {label}"
                ));
            }
            match verify_vertex_count_law(g, r) {
                Ok(true) => {}
                Ok(false) => report.violations.push(format!(
                    "non-touching (5|3) vertex count law |V| = 2(m+n) fails: {label}"
                )),
                Err(_) => {}
            }
        }
        _ => {}
    }
}

/// Extract the connected components of a rotation table as separate graphs.
fn components(rotations: &[Vec<VertexId>]) -> Vec<PlaneGraph> {
    let n = rotations.len();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = count;
        while let Some(v) = stack.pop() {
            for &u in &rotations[v] {
                if comp[u] == usize::MAX {
                    comp[u] = count;
                    stack.push(u);
                }
            }
        }
        count += 1;
    }
    let mut out = Vec::with_capacity(count);
    for c in 0..count {
        let members: Vec<usize> = (0..n).filter(|&v| comp[v] == c).collect();
        let index: BTreeMap<usize, usize> =
            members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let rot: Vec<Vec<usize>> = members
            .iter()
            .map(|&v| rotations[v].iter().map(|u| index[u]).collect())
            .collect();
        out.push(PlaneGraph::build(&rot).expect("component of a valid table"));
    }
    out
}

/// Confirm the chain description of a touching instance: cutting the chain
/// at its connectors (edge cycles) or shared vertices (vertex cycles) yields
/// param-many copies of the expected block.
fn check_chain_structure(
    g: &PlaneGraph,
    r: &NPReport,
    shared: &[VertexId],
    family: Option<(FamilyId, usize)>,
    report: &mut VerificationReport,
    label: &str,
) {
    let Some((id, param)) = family else {
        return; // already reported as unrecognized
    };
    let faces = g.trace_faces();
    let (f1, f2) = (r.exceptional[0].0, r.exceptional[1].0);
    // Connector edges lie on both exceptional faces, one dart on each.
    let mut connectors: Vec<(VertexId, VertexId)> = Vec::new();
    for d in 0..g.num_darts() {
        let (u, v) = (g.vertex_of(d), g.head(d));
        if u < v {
            let (fa, fb) = (faces.dart_to_face[d], faces.dart_to_face[g.alpha(d)]);
            if (fa == f1 && fb == f2) || (fa == f2 && fb == f1) {
                connectors.push((u, v));
            }
        }
    }
    let expected_block: Option<(Solid, usize, usize, usize, usize)> = match id {
        // solid, k1, k2, a, b of the block the chain decomposes into
        FamilyId::TetrahedronEdgeCycle => Some((Solid::Tetrahedron, 2, 2, 2, 2)),
        FamilyId::CubeEdgeCycle => Some((Solid::Cube, 2, 2, 3, 3)),
        FamilyId::DodecahedronEdgeCycle => Some((Solid::Dodecahedron, 2, 2, 4, 4)),
        FamilyId::OctahedronEdgeCycle => Some((Solid::Octahedron, 3, 3, 2, 2)),
        FamilyId::IcosahedronEdgeCycle => Some((Solid::Icosahedron, 4, 4, 2, 2)),
        FamilyId::OctahedronVertexCycle => Some((Solid::Octahedron, 2, 2, 3, 3)),
        FamilyId::IcosahedronVertexCycle => Some((Solid::Icosahedron, 3, 2, 3, 3)),
        _ => None,
    };
    let Some((solid, k1, k2, a, b)) = expected_block else {
        report.violations.push(format!(
            "touching instance identified as a non-chain family {}: {label}",
            id.name()
        ));
        return;
    };
    let is_edge_cycle = !matches!(
        id,
        FamilyId::OctahedronVertexCycle | FamilyId::IcosahedronVertexCycle
    );
    let pieces: Vec<PlaneGraph> = if is_edge_cycle {
        if connectors.len() != param || shared.len() != 2 * param {
            report.violations.push(format!(
                "edge chain has {} connectors and {} shared vertices, expected {} and {}: {label}",
                connectors.len(),
                shared.len(),
                param,
                2 * param
            ));
            return;
        }
        let mut rot = g.rotations();
        for &(u, v) in &connectors {
            rot[u].retain(|&w| w != v);
            rot[v].retain(|&w| w != u);
        }
        components(&rot)
    } else {
        if !connectors.is_empty() || shared.len() != param {
            report.violations.push(format!(
                "vertex chain has {} connectors and {} shared vertices, expected 0 and {}: {label}",
                connectors.len(),
                shared.len(),
                param
            ));
            return;
        }
        // Split every shared vertex at its two exceptional-face corners.
        let mut rot: Vec<Vec<VertexId>> = Vec::new();
        let mut next_id = g.num_vertices();
        let mut renames: Vec<(VertexId, Vec<VertexId>, Vec<VertexId>)> = Vec::new();
        for v in 0..g.num_vertices() {
            rot.push(g.neighbors(v));
        }
        for &z in shared {
            // Corner on a face = position where the walk passes z; the two
            // arcs lie between the f1 corner and the f2 corner.
            let corner = |f: usize| -> usize {
                let walk = &faces.faces[f].darts;
                let pos = walk
                    .iter()
                    .position(|&d| g.vertex_of(d) == z)
                    .expect("shared vertex on both faces");
                walk[pos] - g.darts_of(z).start
            };
            let (c1, c2) = (corner(f1), corner(f2));
            let deg = g.degree(z);
            let nbrs = g.neighbors(z);
            let arc1: Vec<VertexId> = (0..(c2 + deg - c1) % deg)
                .map(|i| nbrs[(c1 + i) % deg])
                .collect();
            let arc2: Vec<VertexId> = (0..(c1 + deg - c2) % deg)
                .map(|i| nbrs[(c2 + i) % deg])
                .collect();
            rot[z] = arc1.clone();
            rot.push(arc2.clone());
            renames.push((z, arc2, vec![next_id]));
            next_id += 1;
        }
        // Arc2 neighbors must now point at the clone instead of z.
        for (z, arc2, ids) in &renames {
            let clone = ids[0];
            for &u in arc2 {
                let mut replaced = false;
                for w in rot[u].iter_mut() {
                    if *w == *z && !replaced {
                        *w = clone;
                        replaced = true;
                    }
                }
            }
        }
        components(&rot)
    };
    if pieces.len() != param {
        report.violations.push(format!(
            "chain decomposes into {} pieces, expected {}: {label}",
            pieces.len(),
            param
        ));
        return;
    }
    for piece in &pieces {
        let pf = piece.trace_faces();
        let sizes: Vec<usize> = pf.faces.iter().map(|f| f.size()).collect();
        let outer = (0..pf.len())
            .find(|&f| sizes.iter().filter(|&&s| s == sizes[f]).count() == 1);
        let Some(outer) = outer else {
            report.violations.push(format!(
                "chain piece has no unique outer face: {label}"
            ));
            continue;
        };
        match classify::block_signature(piece, outer) {
            Ok(BlockSignature::Block(desc)) => {
                if (desc.k, desc.k1, desc.k2, desc.d, desc.a, desc.b)
                    != (r.k, k1, k2, r.d, a, b)
                {
                    report.violations.push(format!(
                        "chain piece is a ({};{},{}|{},<{},{}>)-block, expected ({};{},{}|{},<{},{}>): {label}",
                        desc.k, desc.k1, desc.k2, desc.d, desc.a, desc.b,
                        r.k, k1, k2, r.d, a, b
                    ));
                }
            }
            other => {
                report.violations.push(format!(
                    "chain piece is not a block ({other:?}): {label}"
                ));
            }
        }
        let _ = solid;
    }
}
