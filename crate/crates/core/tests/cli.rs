//! End-to-end runs of the `penta` command line through `run_with`.

use sphere_pentagons::cli::{run_with, Bundle};
use sphere_pentagons::geom::SphTiling;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str], stdin: &str) -> Run {
    let mut argv = vec!["penta"];
    argv.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut input, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn generate(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    let r = run(&full, "");
    assert_eq!(r.code, 0, "{}", r.err);
    r.out
}

#[test]
fn generate_then_verify_with_geometry() {
    let bundle = generate(&["--construction", "double", "--solid", "octahedron"]);
    let r = run(&["verify", "--geom", "-", "-"], &bundle);
    assert_eq!(r.code, 0, "{}{}", r.out, r.err);
    assert!(r.out.ends_with("verify: PASS\n"));
    assert!(r.out.contains("edge-congruence"));
}

#[test]
fn bundle_round_trips() {
    let text = generate(&["--construction", "pentagonal", "--solid", "icosahedron", "--param", "0.2,0.5"]);
    let bundle: Bundle = serde_json::from_str(&text).unwrap();
    assert_eq!(bundle.f, 60);
    let again = serde_json::to_string(&bundle).unwrap();
    assert_eq!(again.trim_end(), text.trim_end());
    let st = bundle.sph_tiling().unwrap();
    assert_eq!(st.coords.len(), bundle.map.num_vertices());
}

#[test]
fn solids_without_coordinates_verify_combinatorially() {
    let bundle = generate(&["--construction", "pentagonal", "--solid", "dodecahedron"]);
    let parsed: Bundle = serde_json::from_str(&bundle).unwrap();
    assert!(parsed.sph_tiling().is_none());
    let r = run(&["verify", "-"], &bundle);
    assert_eq!(r.code, 0, "{}", r.out);
}

#[test]
fn output_file_and_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tetra.json");
    let path = path.to_str().unwrap();
    let r = run(&["generate", "--construction", "double", "--solid", "tetrahedron", "-o", path], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.is_empty());
    let r = run(&["verify", path, "--geom", path, "--json"], "");
    assert_eq!(r.code, 0);
    let report: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(report["pass"], true);
    assert!(report["geometry"]["edge_lengths"]["a"].as_f64().unwrap() > 0.0);
}

#[test]
fn perturbed_coordinates_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    let text = generate(&["--construction", "double", "--solid", "octahedron"]);
    let bundle: Bundle = serde_json::from_str(&text).unwrap();
    let mut st = bundle.sph_tiling().unwrap();
    st.coords[5] = (st.coords[5] + nalgebra::Vector3::new(0.0, 1e-4, 0.0)).normalize();
    let geom = dir.path().join("coords.json");
    std::fs::write(&geom, serde_json::to_string(&st).unwrap()).unwrap();
    let r = run(&["verify", "--geom", geom.to_str().unwrap(), "-"], &text);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("worst vertex: 5"), "{}", r.out);
    assert!(r.out.ends_with("verify: FAIL\n"));
}

#[test]
fn export_obj_and_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let bundle_path = dir.path().join("b.json");
    std::fs::write(&bundle_path, generate(&["--construction", "double", "--solid", "icosahedron"])).unwrap();
    let obj = dir.path().join("t.obj");
    let coords = dir.path().join("c.json");
    let r = run(
        &[
            "export",
            "--obj",
            obj.to_str().unwrap(),
            "--coords-out",
            coords.to_str().unwrap(),
            "--segments",
            "4",
            bundle_path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(r.code, 0, "{}", r.err);
    let text = std::fs::read_to_string(&obj).unwrap();
    let bundle: Bundle = serde_json::from_str(&std::fs::read_to_string(&bundle_path).unwrap()).unwrap();
    let edges = bundle.map.num_edges();
    assert_eq!(text.lines().filter(|l| l.starts_with("l ")).count(), edges);
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), bundle.map.num_vertices() + 3 * edges);
    let st: SphTiling = serde_json::from_str(&std::fs::read_to_string(&coords).unwrap()).unwrap();
    assert_eq!(st, bundle.sph_tiling().unwrap());
}

#[test]
fn export_needs_a_target() {
    let text = generate(&["--construction", "double", "--solid", "tetrahedron"]);
    let r = run(&["export", "-"], &text);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("nothing to write"));
}

#[test]
fn avc_at_one_tile_count() {
    let r = run(&["avc", "--case", "1.3-a4", "--f", "72", "--lower-bounds"], "");
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["f"], 72);
    let vertices: Vec<&str> = v["vertices"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(vertices.len(), 5);
    assert!(vertices.contains(&"de3"));
    assert!(v["rejected_by_edges"].as_array().unwrap().iter().any(|x| x == "ge3"));
}

#[test]
fn avc_table_lists_tile_counts() {
    let r = run(&["avc", "--case", "alpha4", "--above", "24"], "");
    assert_eq!(r.code, 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&r.out).unwrap();
    let fs: Vec<String> = rows.iter().map(|r| r["f"].to_string()).collect();
    assert_eq!(fs, ["\"all\"", "48", "72", "96", "120", "192"]);
}

#[test]
fn aad_prints_layers() {
    let r = run(&["aad", "--proto", "a3bc", "--word", "-g|d|..."], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "—αε|βε|···\n—αε|εβ|···\n");
    let r = run(&["aad", "--proto", "a3bc", "--word", "|g-g|d|", "--canonical", "--ascii"], "");
    assert_eq!(r.code, 0);
    assert_eq!(r.out.lines().count(), 1);
    assert!(r.out.is_ascii());
}

#[test]
fn solve_prints_arc_lengths() {
    let r = run(&["solve", "--double-pentagon", "--n", "4"], "");
    assert_eq!(r.code, 0);
    assert!(r.out.contains("a ≈ 0.127800π"), "{}", r.out);
    let r = run(&["solve", "--double-pentagon", "--n", "5", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["f"], 120);
    assert!(v["cos_a_closed_form"].is_null());
}

#[test]
fn report_passes() {
    let r = run(&["report"], "");
    assert_eq!(r.code, 0, "{}", r.out);
    assert!(r.out.ends_with("report: PASS\n"));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(run(&["solve", "--double-pentagon", "--n", "6"], "").code, 2);
    assert_eq!(run(&["generate", "--construction", "double", "--solid", "torus"], "").code, 2);
    assert_eq!(run(&["aad", "--proto", "a3bc", "--word", "|x|"], "").code, 2);
    assert_eq!(run(&["verify", "-"], "{not json").code, 2);
    assert_eq!(run(&["avc", "--case", "9.9"], "").code, 2);
    assert_eq!(run(&["frobnicate"], "").code, 2);
    assert_eq!(run(&["--help"], "").code, 0);
    let r = run(&["aad", "--proto", "a3bc", "--word", "‖δ|..."], "");
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("error:"));
}

#[test]
fn list_arguments_are_checked() {
    let r = run(&["generate", "--construction", "pentagonal", "--solid", "tetrahedron", "--param", "0.1"], "");
    assert_eq!(r.code, 2);
    let r = run(&["avc", "--case", "alpha4", "--bounds", "1,1,1"], "");
    assert_eq!(r.code, 2);
    let r = run(&["avc", "--case", "alpha4", "--bounds", "4,5,3,3,5", "--f", "48"], "");
    assert_eq!(r.code, 0);
    let r = run(&["generate", "--construction", "pentagonal", "--solid", "tetrahedron", "--param", "0.8,0.4"], "");
    assert_eq!(r.code, 1, "{}", r.err);
}
