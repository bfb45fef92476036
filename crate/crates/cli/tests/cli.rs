use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TORUS: &str = "triangles 2\nglue 0 0 1 0\nglue 0 1 1 1\nglue 0 2 1 2\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_handleslide"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no `{key}` line in:\n{text}"))
        .trim()
}

#[test]
fn validate_torus() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "pt.tri", TORUS);
    let out = run(&["validate", s(&tri)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("valid: triangles 2 edges 3 link 6 genus 1"));
}

#[test]
fn generated_surface_validates() {
    let dir = TempDir::new().unwrap();
    let out = run(&["gen", "--genus", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let tri = write(dir.path(), "g2.tri", &stdout(&out));
    let out = run(&["validate", s(&tri)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("valid: triangles 6 edges 9 link 18 genus 2"));
}

#[test]
fn bad_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "pt.tri", TORUS);
    let odd = write(dir.path(), "odd.col", "1 1 1\n");
    let out = run(&["reduce", s(&tri), s(&odd)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parity_violation"), "{err}");
    assert_eq!(err.lines().count(), 1, "{err}");

    let folded = write(dir.path(), "folded.tri", "triangles 2\nglue 0 0 0 1\nglue 0 2 1 0\nglue 1 1 1 2\n");
    assert_eq!(run(&["validate", s(&folded)]).status.code(), Some(2));

    let missing = dir.path().join("missing.col");
    assert_eq!(run(&["reduce", s(&tri), s(&missing)]).status.code(), Some(2));

    let short = write(dir.path(), "short.col", "0 1\n");
    assert_eq!(run(&["analyze", s(&tri), s(&short)]).status.code(), Some(2));
}

#[test]
fn reduce_reports_peripheral_curves() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "pt.tri", TORUS);
    let f = write(dir.path(), "f.col", "2 3 3\n");
    let out = run(&["reduce", s(&tri), s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(field(&text, "peripheral"), "1");
    assert_eq!(field(&text, "final"), "0 1 1 weight 2");
    assert_eq!(field(&text, "plateau_used"), "false");
}

#[test]
fn equiv_exit_codes() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "pt.tri", TORUS);
    let a = write(dir.path(), "a.col", "0 1 1\n");
    let b = write(dir.path(), "b.col", "2 3 3\n");
    let c = write(dir.path(), "c.col", "# same curve\n0 1 1\n");

    let out = run(&["equiv", s(&tri), s(&a), s(&b)]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert_eq!(field(&text, "equivalent"), "no");
    assert_eq!(field(&text, "peripheral"), "0 1");

    let out = run(&["equiv", s(&tri), s(&a), s(&c)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(field(&stdout(&out), "equivalent"), "yes");
}

#[test]
fn certificate_replays_through_analyze() {
    let dir = TempDir::new().unwrap();
    let gen = run(&["gen", "--genus", "2"]);
    let tri = write(dir.path(), "g2.tri", &stdout(&gen));
    // the far pushoff of an edge, scrambled by random slides
    let seed = write(dir.path(), "seed.col", "0 1 2 2 1 1 2 2 2\n");
    let seed_ok = run(&["reduce", s(&tri), s(&seed)]);
    assert_eq!(seed_ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&seed_ok.stderr));
    let fuzz = run(&["random-rep", s(&tri), s(&seed), "--steps", "4", "--seed", "11"]);
    assert_eq!(fuzz.status.code(), Some(0));
    let other = write(dir.path(), "other.col", &stdout(&fuzz));

    let out = run(&["equiv", s(&tri), s(&seed), s(&other)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let common = field(&text, "common").to_string();
    for (key, file) in [("certificate first:", &seed), ("certificate second:", &other)] {
        let path = field(&text, key);
        let mut args = vec!["analyze", s(&tri), s(file)];
        if !path.is_empty() {
            args.extend(["--apply", path]);
        }
        let shown = stdout(&run(&args));
        assert!(
            shown.contains(&format!("coloring {common} weight")),
            "replaying {path} on {}:\n{shown}",
            file.display()
        );
    }
}

#[test]
fn analyze_lists_bands_and_slides() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "pt.tri", TORUS);
    let f = write(dir.path(), "f.col", "0 1 1\n");
    let out = run(&["analyze", s(&tri), s(&f), "--slides"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("bands 2:"), "{text}");
    assert!(text.contains("band@4 len 1 short"), "{text}");
    assert!(text.contains("delta +0 cascades 1 -> 0 1 1"), "{text}");
}

#[test]
fn minset_and_render() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "pt.tri", TORUS);
    let f = write(dir.path(), "f.col", "2 1 1\n");
    let out = run(&["minset", s(&tri), s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(field(&text, "members"), "1");
    assert!(text.contains("uniqueness not guaranteed"), "{text}");

    let first = run(&["render", s(&tri), s(&f), "--format", "svg"]);
    let second = run(&["render", s(&tri), s(&f)]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let svg = stdout(&first);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="band half""#).count(), 2);
}
