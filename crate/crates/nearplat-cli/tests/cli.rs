//! End-to-end checks of the command-line surface: exit codes, stream
//! formats, and the gen | classify pipeline over the whole catalog.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn nearplat(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nearplat"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("spawn nearplat");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("wait for nearplat")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_emits_rot_format() {
    let out = nearplat(&["gen", "platonic", "tetrahedron"], None);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(
        text,
        "n 4\nv 0: 1 2 3\nv 1: 0 3 2\nv 2: 0 1 3\nv 3: 0 2 1\n"
    );
}

#[test]
fn gen_classify_pipeline_over_catalog() {
    for entry in nearplat::families::catalog() {
        for param in entry.param_min..entry.param_min + 2 {
            let name = entry.id.name();
            let p = param.to_string();
            let gen = nearplat(&["gen", name, &p], None);
            assert!(gen.status.success(), "gen {name} {p}");
            let cls = nearplat(&["classify"], Some(&stdout_of(&gen)));
            assert!(cls.status.success(), "classify {name} {p}");
            let line = stdout_of(&cls);
            assert_eq!(line.lines().count(), 1);
            let fields: Vec<&str> = line.trim().split('\t').collect();
            assert_eq!(fields.len(), 9, "report line has 9 fields: {line}");
        }
    }
}

#[test]
fn classify_reports_prism_fields() {
    let gen = nearplat(&["gen", "prism", "5"], None);
    let cls = nearplat(&["classify"], Some(&stdout_of(&gen)));
    let line = stdout_of(&cls);
    let fields: Vec<&str> = line.trim().split('\t').collect();
    // code, |V|, k, d, t, sizes, balanced, family, param
    assert_eq!(&fields[1..], &["10", "3", "4", "2", "5,5", "true", "prism", "5"]);
}

#[test]
fn iso_exit_codes() {
    let anti = stdout_of(&nearplat(&["gen", "antiprism", "3"], None));
    let octa_path = std::env::temp_dir().join("nearplat-test-octa.rot");
    let octa = stdout_of(&nearplat(&["gen", "platonic", "octahedron"], None));
    std::fs::write(&octa_path, octa).unwrap();
    let ok = nearplat(&["iso", "--against", octa_path.to_str().unwrap()], Some(&anti));
    assert!(ok.status.success());
    assert_eq!(stdout_of(&ok).trim(), "isomorphic");

    let cube = stdout_of(&nearplat(&["gen", "platonic", "cube"], None));
    let no = nearplat(&["iso", "--against", octa_path.to_str().unwrap()], Some(&cube));
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout_of(&no).trim(), "not isomorphic");
}

#[test]
fn usage_errors_exit_2() {
    let out = nearplat(&["gen"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = nearplat(&["frobnicate"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1() {
    let out = nearplat(&["gen", "prism", "2"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("too small"));
    let out = nearplat(&["classify"], Some("n 1\nv 0: 0\n"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumerate_blocks_parse_back() {
    let out = nearplat(&["enumerate", "--k", "3", "--max", "6"], None);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let blocks: Vec<&str> = text.split("\n\n").filter(|b| !b.trim().is_empty()).collect();
    assert_eq!(blocks.len(), 2); // K4 and the 3-prism
    for b in blocks {
        nearplat::planegraph::PlaneGraph::parse(b).unwrap();
    }
}

#[test]
fn enumerate_report_filters_t() {
    let out = nearplat(
        &["enumerate", "--k", "3", "--max", "8", "--t", "2", "--report"],
        None,
    );
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("prism"));
    assert!(text.contains("tetrahedron-edge-cycle"));
}

#[test]
fn enumerate_oracle_strategy_agrees() {
    let a = stdout_of(&nearplat(
        &["enumerate", "--k", "4", "--max", "6", "--report"],
        None,
    ));
    let b = stdout_of(&nearplat(
        &["enumerate", "--k", "4", "--max", "6", "--report", "--oracle"],
        None,
    ));
    assert_eq!(a, b);
    assert!(a.contains("\t0\t")); // the octahedron is Platonic: t = 0
}

#[test]
fn verify_writes_report() {
    let path = std::env::temp_dir().join("nearplat-test-verify.tsv");
    let out = nearplat(
        &[
            "verify",
            "--k",
            "3",
            "--max",
            "8",
            "--report-file",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains("violations: none"));
    let report = std::fs::read_to_string(&path).unwrap();
    assert!(report.contains("prism"));
    assert!(report.contains("# violations"));
}

#[test]
fn surgery_roundtrip_through_cli() {
    let barrel6 = stdout_of(&nearplat(&["gen", "barrel", "6"], None));
    let reduced = nearplat(&["surgery", "reduce-35"], Some(&barrel6));
    assert!(reduced.status.success());
    let dodeca_path = std::env::temp_dir().join("nearplat-test-dodeca.rot");
    std::fs::write(
        &dodeca_path,
        stdout_of(&nearplat(&["gen", "platonic", "dodecahedron"], None)),
    )
    .unwrap();
    let iso = nearplat(
        &["iso", "--against", dodeca_path.to_str().unwrap()],
        Some(&stdout_of(&reduced)),
    );
    assert!(iso.status.success());
}

#[test]
fn surgery_errors_exit_1() {
    let tetra = stdout_of(&nearplat(&["gen", "platonic", "tetrahedron"], None));
    let out = nearplat(
        &["surgery", "add-chord", "--u", "0", "--v", "1", "--face", "0"],
        Some(&tetra),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("adjacent"));
}

#[test]
fn export_is_stable_and_lossy() {
    let cube = stdout_of(&nearplat(&["gen", "platonic", "cube"], None));
    let a = stdout_of(&nearplat(&["export"], Some(&cube)));
    let b = stdout_of(&nearplat(&["export"], Some(&cube)));
    assert_eq!(a, b);
    assert!(a.contains("# rotation v0:"));
    assert!(a.contains("graph g {"));
    assert_eq!(a.matches(" -- ").count(), 12);
}

#[test]
fn parse_accepts_comments() {
    let text = "# a comment\nn 4\nv 0: 1 2 3\nv 1: 0 3 2\nv 2: 0 1 3\nv 3: 0 2 1\n";
    let out = nearplat(&["classify"], Some(text));
    assert!(out.status.success());
}
