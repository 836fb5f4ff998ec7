//! Command-line front end: generation, classification, isomorphism checks,
//! enumeration, theorem verification, surgery and dot export. Graphs travel
//! as `.rot` text on the standard streams unless `--in`/`--out` say
//! otherwise; logs go to stderr. Exit codes: 0 success, 1 domain error,
//! 2 usage error.

use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use nearplat::classify::{self};
use nearplat::enumerate::{self, EnumSpec, Strategy};
use nearplat::families::{self, FamilyId, Solid};
use nearplat::planegraph::PlaneGraph;
use nearplat::surgery::MarkedGraph;
use nearplat::verify;

#[derive(Parser)]
#[command(name = "nearplat", version, about = "k-regular plane graphs with two exceptional faces: generate, classify, transform, enumerate, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member (or `platonic <solid>`) as .rot text
    Gen {
        /// Family name (e.g. prism, barrel, icosahedron-wide-cycle) or "platonic"
        family: String,
        /// Integer parameter, or the solid name when family is "platonic"
        param: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Classify .rot graphs (blank-line separated) into report lines
    Classify {
        #[arg(long, name = "in")]
        input: Option<String>,
    },
    /// Test embedding isomorphism between the input graph and --against
    Iso {
        #[arg(long)]
        against: String,
        #[arg(long, name = "in")]
        input: Option<String>,
        /// Compare as abstract graphs (backtracking, <= 16 vertices) instead
        #[arg(long)]
        abstract_graphs: bool,
    },
    /// Enumerate connected simple k-regular plane graphs up to --max vertices
    Enumerate(EnumerateArgs),
    /// Run the classification theorems over the enumerable range
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max: usize,
        /// Where to write the machine-readable report
        #[arg(long, default_value = "-")]
        report_file: String,
    },
    /// Apply a surgery operation to the graph on stdin
    Surgery {
        #[command(subcommand)]
        op: SurgeryOp,
    },
    /// Export the input graph in dot format (lossy: embedding in comments)
    Export {
        #[arg(long, name = "in")]
        input: Option<String>,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    max: usize,
    /// Keep only graphs with exactly this many exceptional faces
    #[arg(long)]
    t: Option<usize>,
    /// Print one classification line per graph instead of .rot blocks
    #[arg(long)]
    report: bool,
    /// Use the brute-force oracle engine instead of the default search
    #[arg(long)]
    oracle: bool,
}

#[derive(Subcommand)]
enum SurgeryOp {
    /// Remove a boundary edge of face --outer and re-attach from --attach
    Relocate {
        #[arg(long, value_parser = parse_pair)]
        remove: (usize, usize),
        #[arg(long)]
        attach: usize,
        /// Face id (trace order) of the marked outer face
        #[arg(long)]
        outer: usize,
    },
    /// Add the chord u-v across face --face
    AddChord {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        face: usize,
    },
    /// Split vertex --vertex; the first arc keeps --len slots from --start
    SplitVertex {
        #[arg(long)]
        vertex: usize,
        #[arg(long, default_value_t = 0)]
        start: usize,
        #[arg(long)]
        len: usize,
    },
    /// Merge two non-adjacent vertices on a common face
    Amalgamate {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
    /// Cut edge u-v through anchor faces --f1 (at u) and --f2 (at v);
    /// emits a strip with left/right marks as comments
    CutEdge {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        f1: usize,
        #[arg(long)]
        f2: usize,
    },
    /// Glue --copies copies of a marked strip in a cycle
    GlueCyclic {
        #[arg(long)]
        copies: usize,
    },
    /// Shrink both exceptional faces of a barrel-structured graph by one
    #[command(name = "reduce-35")]
    Reduce35,
    /// Grow both exceptional faces of a barrel-structured graph by one
    #[command(name = "expand-35")]
    Expand35,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected U,V, got {s:?}"))?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn read_input(path: &Option<String>) -> Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {p}")),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn write_output(path: &Option<String>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {p}")),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Split concatenated .rot blocks on blank lines.
fn parse_blocks(text: &str) -> Result<Vec<PlaneGraph>> {
    let mut graphs = Vec::new();
    for block in text.split("\n\n") {
        if block.trim().is_empty() {
            continue;
        }
        graphs.push(PlaneGraph::parse(block).map_err(|e| anyhow!("{e}"))?);
    }
    if graphs.is_empty() {
        bail!("no graphs on input");
    }
    Ok(graphs)
}

fn parse_one(text: &str) -> Result<PlaneGraph> {
    let graphs = parse_blocks(text)?;
    if graphs.len() != 1 {
        bail!("expected exactly one graph, got {}", graphs.len());
    }
    Ok(graphs.into_iter().next().unwrap())
}

/// Strip serialization: .rot text plus `# mark <name> <vertex> <slot>` lines.
fn marked_to_text(mg: &MarkedGraph) -> Result<String> {
    let g = mg.finalize().map_err(|e| anyhow!("{e}"))?;
    let mut out = String::new();
    for name in ["left", "right", "outer"] {
        if let Some(d) = mg.get_mark(name) {
            let v = mg.vertex_of(d);
            let slot = d - mg.darts_of(v).start;
            out.push_str(&format!("# mark {name} {v} {slot}\n"));
        }
    }
    out.push_str(&g.serialize());
    Ok(out)
}

fn text_to_marked(text: &str) -> Result<MarkedGraph> {
    let g = parse_one(text)?;
    let mut mg = MarkedGraph::from_plane(&g);
    for line in text.lines() {
        if let Some(rest) = line.trim().strip_prefix("# mark ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 {
                bail!("malformed mark line: {line:?}");
            }
            let v: usize = parts[1].parse()?;
            let slot: usize = parts[2].parse()?;
            let d = mg.darts_of(v).start + slot;
            mg.mark(parts[0], d);
        }
    }
    Ok(mg)
}

/// Dot export with the embedding recorded as comment lines.
fn render_dot(g: &PlaneGraph) -> String {
    let mut out = String::new();
    for v in 0..g.num_vertices() {
        let nbrs: Vec<String> = g.neighbors(v).iter().map(|u| u.to_string()).collect();
        out.push_str(&format!("# rotation v{v}: {}\n", nbrs.join(" ")));
    }
    out.push_str("graph g {\n");
    for v in 0..g.num_vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { family, param, out } => {
            let g = if family == "platonic" {
                let solid = Solid::ALL
                    .into_iter()
                    .find(|s| s.name() == param)
                    .ok_or_else(|| anyhow!("unknown solid {param:?}"))?;
                families::platonic(solid)
            } else {
                let id = FamilyId::from_name(&family)
                    .ok_or_else(|| anyhow!("unknown family {family:?}"))?;
                let p: usize = param.parse().context("family parameter")?;
                families::generate(id, p).map_err(|e| anyhow!("{e}"))?
            };
            write_output(&out, &g.serialize())
        }
        Command::Classify { input } => {
            let text = read_input(&input)?;
            let graphs = parse_blocks(&text)?;
            let mut out = String::new();
            for g in &graphs {
                match classify::classify_nearly_platonic(g) {
                    Ok(r) => {
                        out.push_str(&classify::report_line(g, &r));
                        out.push('\n');
                    }
                    Err(e) => {
                        out.push_str(&format!(
                            "{}\t{}\tnot-nearly-platonic\t{e}\n",
                            g.canonical_code().to_hex(),
                            g.num_vertices()
                        ));
                    }
                }
            }
            write_output(&None, &out)
        }
        Command::Iso {
            against,
            input,
            abstract_graphs,
        } => {
            let g = parse_one(&read_input(&input)?)?;
            let h = parse_one(
                &std::fs::read_to_string(&against).with_context(|| format!("reading {against}"))?,
            )?;
            let iso = if abstract_graphs {
                g.are_isomorphic_abstract(&h, 16).map_err(|e| anyhow!("{e}"))?
            } else {
                g.are_isomorphic(&h)
            };
            if iso {
                println!("isomorphic");
                Ok(())
            } else {
                println!("not isomorphic");
                bail!("graphs are not isomorphic");
            }
        }
        Command::Enumerate(args) => {
            let mut spec = EnumSpec::new(args.k, args.max).map_err(|e| anyhow!("{e}"))?;
            if args.oracle {
                spec.strategy = Strategy::BruteForceOracle;
            }
            spec.parallelism = jobs_hint();
            let graphs = enumerate::enumerate_k_regular(&spec).map_err(|e| anyhow!("{e}"))?;
            let mut out = String::new();
            let mut first = true;
            for g in graphs {
                let r = classify::classify_nearly_platonic(&g).ok();
                if let Some(t) = args.t {
                    if r.as_ref().map(|r| r.t) != Some(t) {
                        continue;
                    }
                }
                if args.report {
                    match &r {
                        Some(r) => {
                            out.push_str(&classify::report_line(&g, r));
                            out.push('\n');
                        }
                        None => {
                            out.push_str(&format!(
                                "{}\t{}\tnot-nearly-platonic\n",
                                g.canonical_code().to_hex(),
                                g.num_vertices()
                            ));
                        }
                    }
                } else {
                    if !first {
                        out.push('\n');
                    }
                    out.push_str(&g.serialize());
                    first = false;
                }
            }
            write_output(&None, &out)
        }
        Command::Verify {
            k,
            max,
            report_file,
        } => {
            let report = verify::verify_2np_classification(k, max).map_err(|e| anyhow!("{e}"))?;
            eprint!("{}", report.summary());
            // Machine-readable lines for the found two-exception graphs.
            let spec = EnumSpec::new(k, max).map_err(|e| anyhow!("{e}"))?;
            let graphs = enumerate::enumerate_k_regular(&spec).map_err(|e| anyhow!("{e}"))?;
            let pairs: Vec<_> = enumerate::filter_nearly_platonic(graphs, Some(2)).collect();
            let text = report.machine_report(&pairs);
            if report_file == "-" {
                write_output(&None, &text)?;
            } else {
                std::fs::write(&report_file, &text)
                    .with_context(|| format!("writing {report_file}"))?;
                eprintln!("report written to {report_file}");
            }
            if report.passed() {
                Ok(())
            } else {
                bail!("{} violation(s) found", report.violations.len());
            }
        }
        Command::Surgery { op } => {
            let text = read_input(&None)?;
            match op {
                SurgeryOp::Relocate {
                    remove,
                    attach,
                    outer,
                } => {
                    let g = parse_one(&text)?;
                    let faces = g.trace_faces();
                    if outer >= faces.len() {
                        bail!("no face {outer}");
                    }
                    let mut mg = MarkedGraph::from_plane(&g);
                    mg.mark("outer", faces.faces[outer].darts[0]);
                    let out = mg
                        .relocate_boundary_edge(remove, attach)
                        .map_err(|e| anyhow!("{e}"))?;
                    write_output(&None, &marked_to_text(&out)?)
                }
                SurgeryOp::AddChord { u, v, face } => {
                    let g = parse_one(&text)?;
                    let out = MarkedGraph::from_plane(&g)
                        .add_chord(u, v, face)
                        .map_err(|e| anyhow!("{e}"))?;
                    write_output(&None, &marked_to_text(&out)?)
                }
                SurgeryOp::SplitVertex { vertex, start, len } => {
                    let g = parse_one(&text)?;
                    let (out, _, _) = MarkedGraph::from_plane(&g)
                        .split_vertex(vertex, start, len)
                        .map_err(|e| anyhow!("{e}"))?;
                    write_output(&None, &marked_to_text(&out)?)
                }
                SurgeryOp::Amalgamate { x, y } => {
                    let g = parse_one(&text)?;
                    let out = MarkedGraph::from_plane(&g)
                        .amalgamate_vertices(x, y)
                        .map_err(|e| anyhow!("{e}"))?;
                    write_output(&None, &marked_to_text(&out)?)
                }
                SurgeryOp::CutEdge { u, v, f1, f2 } => {
                    let g = parse_one(&text)?;
                    let strip = MarkedGraph::from_plane(&g)
                        .cut_edge(u, v, f1, f2)
                        .map_err(|e| anyhow!("{e}"))?;
                    write_output(&None, &marked_to_text(&strip)?)
                }
                SurgeryOp::GlueCyclic { copies } => {
                    let mg = text_to_marked(&text)?;
                    let g = mg.glue_cyclic_copies(copies).map_err(|e| anyhow!("{e}"))?;
                    write_output(&None, &g.serialize())
                }
                SurgeryOp::Reduce35 => {
                    let g = parse_one(&text)?;
                    let out = nearplat::surgery::reduce_35_l3(&g).map_err(|e| anyhow!("{e}"))?;
                    write_output(&None, &out.serialize())
                }
                SurgeryOp::Expand35 => {
                    let g = parse_one(&text)?;
                    let out = nearplat::surgery::expand_35_l3(&g).map_err(|e| anyhow!("{e}"))?;
                    write_output(&None, &out.serialize())
                }
            }
        }
        Command::Export { input } => {
            let g = parse_one(&read_input(&input)?)?;
            write_output(&None, &render_dot(&g))
        }
    }
}

/// Default worker-count hint from the environment; the engines are currently
/// sequential and deterministic regardless.
fn jobs_hint() -> usize {
    std::env::var("NEARPLAT_JOBS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1)
}
