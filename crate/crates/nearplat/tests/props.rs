//! Property tests and independent oracles: serialization round trips,
//! canonical-code semantics against a brute-force embedding-isomorphism
//! check, and the block structure report against a removal-based oracle.

use proptest::prelude::*;

use nearplat::enumerate::{self, EnumSpec};
use nearplat::families::{self, FamilyId};
use nearplat::planegraph::PlaneGraph;

fn family_member() -> impl Strategy<Value = PlaneGraph> {
    (0usize..14, 1usize..6).prop_filter_map("parameter in range", |(i, p)| {
        let id = FamilyId::ALL[i];
        let p = p.max(id.param_min());
        if id.order(p) > 60 {
            return None;
        }
        families::generate(id, p).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialize_parse_identity(g in family_member()) {
        let text = g.serialize();
        let back = PlaneGraph::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn code_invariant_under_relabeling(g in family_member(), seed in any::<u64>()) {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = g.num_vertices();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut rot = vec![Vec::new(); n];
        for (v, nbrs) in g.rotations().into_iter().enumerate() {
            let mut r: Vec<usize> = nbrs.into_iter().map(|u| perm[u]).collect();
            let shift = rng.gen_range(0..r.len());
            r.rotate_left(shift);
            rot[perm[v]] = r;
        }
        let h = PlaneGraph::build(&rot).unwrap();
        prop_assert_eq!(g.canonical_code(), h.canonical_code());
        prop_assert_eq!(g.mirror().canonical_code(), g.canonical_code());
    }

    #[test]
    fn euler_and_sums(g in family_member()) {
        let faces = g.trace_faces();
        let n = g.num_vertices() as i64;
        let e = g.num_edges() as i64;
        prop_assert_eq!(n - e + faces.len() as i64, 2);
        let face_sum: usize = faces.faces.iter().map(|f| f.size()).sum();
        prop_assert_eq!(face_sum, 2 * g.num_edges());
    }

    #[test]
    fn two_connected_face_walks_are_cycles(g in family_member()) {
        // Every family member is 2-connected: face walks visit each vertex
        // once and each edge borders two distinct faces.
        let s = g.structure();
        prop_assert!(s.is_two_connected(&g));
        let faces = g.trace_faces();
        for f in 0..faces.len() {
            let mut walk = faces.vertex_walk(&g, f);
            let len = walk.len();
            walk.sort_unstable();
            walk.dedup();
            prop_assert_eq!(walk.len(), len, "face walk repeats a vertex");
        }
        for d in 0..g.num_darts() {
            prop_assert_ne!(faces.dart_to_face[d], faces.dart_to_face[g.alpha(d)]);
        }
    }

    #[test]
    fn structure_matches_removal_oracle(g in family_member()) {
        let s = g.structure();
        let (cuts, bridges) = removal_oracle(&g);
        prop_assert_eq!(s.cut_vertices.clone(), cuts);
        prop_assert_eq!(s.bridges.clone(), bridges);
    }
}

/// Cut vertices and bridges the slow way: remove each vertex or edge and
/// test connectivity by breadth-first search.
fn removal_oracle(g: &PlaneGraph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = g.num_vertices();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let connected = |skip_v: Option<usize>, skip_e: Option<(usize, usize)>| -> bool {
        let start = (0..n).find(|&v| Some(v) != skip_v).unwrap();
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut cnt = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if Some(u) == skip_v {
                    continue;
                }
                if let Some((a, b)) = skip_e {
                    if (v, u) == (a, b) || (v, u) == (b, a) {
                        continue;
                    }
                }
                if !seen[u] {
                    seen[u] = true;
                    cnt += 1;
                    stack.push(u);
                }
            }
        }
        cnt == n - usize::from(skip_v.is_some())
    };
    let cuts: Vec<usize> = (0..n).filter(|&v| !connected(Some(v), None)).collect();
    let bridges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&e| !connected(None, Some(e)))
        .collect();
    (cuts, bridges)
}

/// Brute-force embedding isomorphism: search for a dart bijection commuting
/// with both permutations, built from a synchronized traversal at every
/// root-dart/orientation combination of `h`.
fn embedding_iso_oracle(g: &PlaneGraph, h: &PlaneGraph) -> bool {
    if g.num_darts() != h.num_darts() {
        return false;
    }
    let nd = g.num_darts();
    if nd == 0 {
        return true;
    }
    for start in 0..nd {
        for mirror in [false, true] {
            // Traverse g from dart 0 forward and h from `start` with the
            // chosen orientation, mapping first-visits pairwise.
            let mut map = vec![usize::MAX; nd];
            let mut order = Vec::with_capacity(nd);
            map[0] = start;
            order.push(0usize);
            let mut i = 0;
            let mut ok = true;
            while i < order.len() && ok {
                let d = order[i];
                let img = map[d];
                let steps = [
                    (g.alpha(d), h.alpha(img)),
                    (
                        g.sigma(d),
                        if mirror { h.sigma_inv(img) } else { h.sigma(img) },
                    ),
                ];
                for (nd_g, nd_h) in steps {
                    if map[nd_g] == usize::MAX {
                        if map.contains(&nd_h) {
                            ok = false;
                            break;
                        }
                        map[nd_g] = nd_h;
                        order.push(nd_g);
                    } else if map[nd_g] != nd_h {
                        ok = false;
                        break;
                    }
                }
                i += 1;
            }
            if !ok || order.len() != nd {
                continue;
            }
            // Verify commutation everywhere.
            let commutes = (0..nd).all(|d| {
                map[g.alpha(d)] == h.alpha(map[d])
                    && map[g.sigma(d)]
                        == if mirror {
                            h.sigma_inv(map[d])
                        } else {
                            h.sigma(map[d])
                        }
            });
            if commutes {
                return true;
            }
        }
    }
    false
}

/// Code equality must coincide with brute-force embedding isomorphism on all
/// pairs of enumerated graphs up to 10 vertices.
#[test]
fn canonical_code_agrees_with_embedding_iso_oracle() {
    let mut graphs = Vec::new();
    for (k, max) in [(3usize, 10usize), (4, 9)] {
        let spec = EnumSpec::new(k, max).unwrap();
        graphs.extend(enumerate::enumerate_k_regular(&spec).unwrap());
    }
    // Add some relabelings so equal pairs actually occur.
    for g in graphs.clone() {
        let mirrored = g.mirror();
        graphs.push(mirrored);
    }
    let codes: Vec<_> = graphs.iter().map(|g| g.canonical_code()).collect();
    let mut equal_pairs = 0;
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            let same_code = codes[i] == codes[j];
            let iso = embedding_iso_oracle(&graphs[i], &graphs[j]);
            assert_eq!(
                same_code, iso,
                "code equality and brute-force isomorphism disagree on pair ({i}, {j})"
            );
            if same_code {
                equal_pairs += 1;
            }
        }
    }
    assert!(equal_pairs >= graphs.len() / 2, "mirror pairs must match");
}

/// Embedding isomorphism implies abstract isomorphism on small pairs.
#[test]
fn embedding_iso_implies_abstract_iso() {
    let spec = EnumSpec::new(3, 8).unwrap();
    let graphs = enumerate::enumerate_k_regular(&spec).unwrap();
    for g in &graphs {
        let h = g.mirror();
        if g.are_isomorphic(&h) {
            assert!(g.are_isomorphic_abstract(&h, 16).unwrap());
        }
    }
}

/// The closed chain of two tetrahedron blocks is 2-connected: the connector
/// edges lie on cycles, so the removal oracle reports no cut vertices and no
/// bridges, and the block decomposition is a single block.
#[test]
fn tetrahedron_chain_structure() {
    let g = families::edge_cycle(families::Solid::Tetrahedron, 2).unwrap();
    let (cuts, bridges) = removal_oracle(&g);
    assert!(cuts.is_empty());
    assert!(bridges.is_empty());
    let s = g.structure();
    assert!(s.cut_vertices.is_empty());
    assert!(s.bridges.is_empty());
    assert_eq!(s.blocks.len(), 1);
    assert_eq!(s.min_degree, 3);
    assert_eq!(s.max_degree, 3);
}
