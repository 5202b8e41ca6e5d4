//! Acceptance criteria 1–8: one PASS/FAIL line each, nonzero exit on failure.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use squircle::parallel::{Engine, WORKERS_ENV};
use squircle::recipes::GALLERY;
use squircle::verify::{self, Check};

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_checks(checks: Vec<Check>, budget: Option<Duration>, elapsed: Duration) -> Outcome {
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed()).map(|c| c.to_string()).collect();
    let in_time = budget.is_none_or(|b| elapsed < b);
    let mut detail = format!("{} checks", checks.len());
    if !failed.is_empty() {
        detail = format!("{detail}, failed: {}", failed.join("; "));
    }
    if !in_time {
        detail = format!("{detail}, over budget {:?}", budget.unwrap());
    }
    Outcome {
        ok: failed.is_empty() && in_time && !checks.is_empty(),
        detail,
    }
}

fn timed(budget: Option<Duration>, f: impl FnOnce() -> Vec<Check>) -> Outcome {
    let start = Instant::now();
    let checks = f();
    from_checks(checks, budget, start.elapsed())
}

fn run(args: &[String], dir: &Path, workers: Option<usize>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_squircle"));
    cmd.args(args).current_dir(dir);
    if let Some(n) = workers {
        cmd.env(WORKERS_ENV, n.to_string());
    }
    cmd.output().expect("binary runs")
}

fn strings(args: &[&str]) -> Vec<String> {
    args.iter().map(|s| s.to_string()).collect()
}

/// One recipe per family, every output format.
fn determinism() -> Outcome {
    let curves: &[&[&str]] = &[
        &["--family", "lame", "--exponent", "4"],
        &["--family", "fg", "--squareness", "0.8"],
        &["--family", "periodic", "--squareness", "0.7", "--tiles", "2"],
        &["--family", "oblique", "--squareness", "0.7", "--tiles", "2"],
        &["--family", "frantz", "--squareness", "2"],
        &["--family", "phase_grid", "--tiles", "2"],
    ];
    let surfaces: &[&[&str]] = &[
        &["--family", "lame3d", "--exponent", "4"],
        &["--family", "sphube", "--squareness", "0.8"],
        &["--family", "periodic3d", "--squareness", "0.8", "--tiles", "2"],
        &["--family", "oblique3d", "--squareness", "0.8"],
        &["--family", "toroid", "--squareness", "0.5"],
        &["--family", "toroid_octic", "--squareness", "0.5"],
        &["--family", "cone_fg", "--squareness", "0.8", "--c", "3"],
        &["--family", "cone_lame", "--exponent", "1.5", "--c", "2"],
        &["--family", "cuboctahedron", "--k", "1", "--cc", "2"],
    ];
    let mut jobs = Vec::new();
    for args in curves {
        for ext in ["svg", "csv"] {
            jobs.push(([&["curve"], *args, &["--grid", "256", "--format", ext]].concat(), ext));
        }
    }
    for args in surfaces {
        for ext in ["obj", "stl"] {
            jobs.push(([&["surface"], *args, &["--grid", "48", "--format", ext]].concat(), ext));
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let runs = [Some(1), Some(3), Some(4), Some(4), None];
    let mut mismatches = Vec::new();
    for (j, (args, ext)) in jobs.iter().enumerate() {
        let mut reference: Option<Vec<u8>> = None;
        for (k, workers) in runs.iter().enumerate() {
            let out = format!("job{j}_{k}.{ext}");
            let mut full = strings(args);
            full.extend(["--out".to_string(), out.clone()]);
            let o = run(&full, dir.path(), *workers);
            let bytes = fs::read(dir.path().join(&out)).unwrap_or_default();
            if o.status.code() != Some(0) || bytes.is_empty() {
                mismatches.push(format!("{args:?} failed with {:?} workers", workers));
                break;
            }
            match &reference {
                None => reference = Some(bytes),
                Some(r) if *r != bytes => mismatches.push(format!("{args:?} differs with {workers:?} workers")),
                Some(_) => {}
            }
        }
    }
    Outcome {
        ok: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            format!("{} outputs x {} runs (workers 1,3,4,4,default) byte-identical", jobs.len(), runs.len())
        } else {
            mismatches.join("; ")
        },
    }
}

fn gallery() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut problems = Vec::new();
    let mut files = 0;
    for recipe in GALLERY {
        let o = run(&recipe.command_line(recipe.name), dir.path(), None);
        if o.status.code() != Some(0) {
            problems.push(format!("{} exited {:?}: {}", recipe.name, o.status.code(), String::from_utf8_lossy(&o.stderr).trim()));
            continue;
        }
        let outputs: Vec<_> = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap())
            .filter(|e| {
                let name = e.file_name().to_string_lossy().into_owned();
                if recipe.is_sweep() {
                    name.starts_with(&format!("{}_", recipe.name))
                } else {
                    name == format!("{}.{}", recipe.name, recipe.ext)
                }
            })
            .collect();
        if outputs.is_empty() || outputs.iter().any(|e| e.metadata().unwrap().len() == 0) {
            problems.push(format!("{}: missing or empty output", recipe.name));
        }
        files += outputs.len();
        let notice = String::from_utf8_lossy(&o.stdout).contains("empty level set");
        if notice != recipe.recedes {
            problems.push(format!("{}: empty-level-set notice {}", recipe.name, if notice { "unexpected" } else { "missing" }));
        }
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{} recipes, {files} files", GALLERY.len())
        } else {
            problems.join("; ")
        },
    }
}

fn main() {
    let engine = Engine::from_env();
    let second = Some(Duration::from_secs(1));
    let criteria: Vec<(u32, &str, Box<dyn FnOnce() -> Outcome + '_>)> = vec![
        (1, "circle limits", Box::new(move || timed(second, verify::circle_limits))),
        (2, "square cases", Box::new(move || timed(second, verify::square_cases))),
        (3, "limit convergence", Box::new(move || timed(second, verify::limit_convergence))),
        (4, "equivalences", Box::new(|| timed(Some(Duration::from_secs(5)), verify::equivalences))),
        (5, "mesh topology", Box::new(|| timed(Some(Duration::from_secs(60)), || verify::mesh_topology(&engine)))),
        (6, "determinism", Box::new(determinism)),
        (7, "gallery recipes", Box::new(gallery)),
        (8, "periodicity", Box::new(|| timed(None, verify::periodicity))),
    ];
    let mut all = true;
    for (n, name, f) in criteria {
        let start = Instant::now();
        let out = f();
        all &= out.ok;
        println!(
            "criterion {n} {name}: {} ({:.2}s) {}",
            if out.ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            out.detail
        );
    }
    if !all {
        std::process::exit(1);
    }
}
