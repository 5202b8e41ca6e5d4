use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn squircle(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_squircle"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn curve_to_svg() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(
        &["curve", "--family", "fg", "--squareness", "0.8", "--radius", "1", "--format", "svg", "--out", "c.svg"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let svg = fs::read_to_string(dir.path().join("c.svg")).unwrap();
    assert_eq!(svg.matches("<path").count(), 1);
    assert!(svg.contains(" Z\""));
}

#[test]
fn curve_to_csv_closes_on_the_circle() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(&["curve", "--family", "lame", "--grid", "64", "--format", "csv", "--out", "c.csv"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = fs::read_to_string(dir.path().join("c.csv")).unwrap();
    let mut rows = csv.lines();
    assert_eq!(rows.next(), Some("polyline_id,point_index,x,y,closed"));
    for row in rows {
        let f: Vec<&str> = row.split(',').collect();
        let (x, y): (f64, f64) = (f[2].parse().unwrap(), f[3].parse().unwrap());
        assert!((x.hypot(y) - 1.0).abs() < 1e-3);
        assert_eq!(f[4], "true");
    }
}

#[test]
fn square_toroid_surface() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(
        &[
            "surface", "--family", "toroid", "--R", "2", "--r", "0.5", "--squareness", "1", "--grid", "48", "--format",
            "obj", "--out", "t.obj",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let obj = fs::read_to_string(dir.path().join("t.obj")).unwrap();
    assert!(obj.lines().any(|l| l.starts_with("v ")));
    assert!(obj.lines().any(|l| l.starts_with("f ")));
    assert!(obj.lines().nth(1).unwrap().contains("toroid"));
}

#[test]
fn stl_size_matches_triangle_count() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(&["surface", "--family", "sphube", "--squareness", "0.5", "--grid", "24", "--format", "stl", "--out", "s.stl"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let bytes = fs::read(dir.path().join("s.stl")).unwrap();
    let n = u32::from_le_bytes(bytes[80..84].try_into().unwrap()) as usize;
    assert!(n > 0);
    assert_eq!(bytes.len(), 84 + 50 * n);
}

#[test]
fn sham_schwarz_accepts_pi() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(
        &[
            "surface", "--family", "oblique3d", "--squareness", "1", "--radius", "pi", "--overshoot", "1", "--grid", "32",
            "--out", "p.obj",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(fs::metadata(dir.path().join("p.obj")).unwrap().len() > 0);
}

#[test]
fn sweep_writes_numbered_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(
        &["sweep", "--family", "periodic", "--param", "s", "--from", "0.2", "--to", "1.0", "--steps", "5", "--grid", "64", "--out", "fig"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let mut names: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(names, ["fig_000.svg", "fig_001.svg", "fig_002.svg", "fig_003.svg", "fig_004.svg"]);
}

#[test]
fn sweep_validates_every_step_first() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(
        &["sweep", "--family", "fg", "--param", "s", "--from", "0.5", "--to", "1.5", "--steps", "3", "--out", "bad"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--squareness"));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn receding_overshoot_is_a_notice() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(
        &["curve", "--family", "oblique", "--squareness", "1", "--overshoot", "2", "--grid", "64", "--out", "e.svg"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("empty level set"));
    let svg = fs::read_to_string(dir.path().join("e.svg")).unwrap();
    assert!(svg.contains("</svg>") && !svg.contains("<path"));

    let o = squircle(
        &["surface", "--family", "oblique3d", "--squareness", "1", "--overshoot", "4", "--grid", "32", "--out", "e.obj"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("empty level set"));
}

#[test]
fn usage_errors_name_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &str)] = &[
        (&["curve", "--family", "fg", "--squareness", "1.5", "--out", "x.svg"], "--squareness"),
        (&["curve", "--family", "fg", "--grid", "4", "--out", "x.svg"], "--grid"),
        (&["curve", "--family", "fg", "--tiles", "0", "--out", "x.svg"], "--tiles"),
        (&["curve", "--family", "fg", "--format", "obj", "--out", "x.obj"], "--format"),
        (&["curve", "--family", "sphube", "--out", "x.svg"], "--family"),
        (&["surface", "--family", "blob", "--out", "x.obj"], "--family"),
        (&["surface", "--family", "toroid", "--R", "0.3", "--r", "0.5", "--out", "x.obj"], "--R"),
        (&["surface", "--family", "lame3d", "--exponent", "0.5", "--out", "x.obj"], "--exponent"),
        (&["curve", "--family", "fg", "--radius", "2pie", "--out", "x.svg"], "--radius"),
        (&["curve", "--family", "fg", "--xmin", "1", "--xmax", "0", "--out", "x.svg"], "axis x"),
        (&["sweep", "--family", "fg", "--param", "s", "--from", "0", "--to", "1", "--steps", "2", "--format", "stl", "--out", "x"], "--format"),
    ];
    for (args, flag) in cases {
        let o = squircle(args, dir.path());
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(stderr(&o).contains(flag), "{args:?}: {}", stderr(&o));
    }
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn non_finite_samples_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    // x²y² overflows to infinity and the quartic becomes inf - inf.
    let o = squircle(
        &[
            "curve", "--family", "fg", "--squareness", "0.5", "--xmin", "-1e200", "--xmax", "1e200", "--ymin", "-1e200",
            "--ymax", "1e200", "--grid", "8", "--out", "x.svg",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("not finite"));
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(&["curve", "--family", "fg", "--grid", "16", "--out", "missing/dir/x.svg"], dir.path());
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("missing/dir/x.svg"));
}

#[test]
fn help_and_info() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(&["--help"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("surface"));

    let o = squircle(&[], dir.path());
    assert_eq!(o.status.code(), Some(1));

    let o = squircle(&["info", "--family", "oblique3d"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("equation:") && text.contains("parameters:") && text.contains("[0, 4]"));

    let o = squircle(&["info", "--family", "nope"], dir.path());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_square_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = squircle(&["verify", "--suite", "square"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() >= 8);
    for line in lines {
        assert!(line.ends_with(" PASS"), "{line}");
        assert!(line.contains(" measured=") && line.contains(" bound"));
    }
}

#[test]
fn identical_invocations_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a.svg", "b.svg"] {
        let o = squircle(&["curve", "--family", "periodic", "--squareness", "0.7", "--tiles", "3", "--out", name], dir.path());
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(dir.path().join("a.svg")).unwrap(), fs::read(dir.path().join("b.svg")).unwrap());
}
