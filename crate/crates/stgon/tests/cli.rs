//! Exit-code and output contract of the command line: 0 on success (stable
//! or total input where applicable), 1 on domain failures, 2 on usage,
//! parse and I/O failures.

use std::path::PathBuf;
use std::process::Command;

use stgon::hgon::HGon;
use stgon::{io, DynkinType};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stgon"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("stgon-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn code(out: &std::process::Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn info_and_usage() {
    let ok = bin().args(["info", "F4"]).output().unwrap();
    assert_eq!(code(&ok), 0);
    let text = String::from_utf8(ok.stdout).unwrap();
    assert!(text.contains("folded from E6"));
    assert!(text.contains("rank 4"));

    assert_eq!(code(&bin().args(["info", "Z9"]).output().unwrap()), 2);
    assert_eq!(code(&bin().output().unwrap()), 2);
    assert_eq!(code(&bin().args(["frobnicate"]).output().unwrap()), 2);
}

#[test]
fn check_exit_codes() {
    let stable = tmp("stable.json");
    io::write_polygon_file(&stable, &HGon::regular(DynkinType::parse("E6").unwrap())).unwrap();
    assert_eq!(
        code(&bin().args(["check", stable.to_str().unwrap()]).output().unwrap()),
        0
    );

    // perturbing one vertex breaks the relations: domain failure
    let mut verts = HGon::regular(DynkinType::parse("E6").unwrap())
        .vertices()
        .to_vec();
    verts[0] += num_complex::Complex64::new(0.1, 0.0);
    let invalid = tmp("invalid.json");
    io::write_polygon_file(
        &invalid,
        &HGon::new(DynkinType::parse("E6").unwrap(), verts, vec![], None).unwrap(),
    )
    .unwrap();
    assert_eq!(
        code(&bin().args(["check", invalid.to_str().unwrap()]).output().unwrap()),
        1
    );

    // an unstable but valid polygon is also a domain failure
    let unstable = tmp("unstable.json");
    let g = (0..)
        .map(|s| HGon::sample_near_regular(DynkinType::parse("E8").unwrap(), 0.5, s).unwrap())
        .find(|g| !g.stability().unwrap().is_stable)
        .unwrap();
    io::write_polygon_file(&unstable, &g).unwrap();
    assert_eq!(
        code(&bin().args(["check", unstable.to_str().unwrap()]).output().unwrap()),
        1
    );

    // truncated file: parse failure
    let truncated = tmp("truncated.json");
    std::fs::write(&truncated, "{\"type\": \"E6\", \"vert").unwrap();
    assert_eq!(
        code(&bin().args(["check", truncated.to_str().unwrap()]).output().unwrap()),
        2
    );
    assert_eq!(
        code(&bin().args(["check", tmp("missing.json").to_str().unwrap()]).output().unwrap()),
        2
    );
}

#[test]
fn tost_exit_codes() {
    let stable = tmp("tost-stable.json");
    io::write_polygon_file(&stable, &HGon::regular(DynkinType::parse("D5").unwrap())).unwrap();
    let out = bin().args(["tost", stable.to_str().unwrap()]).output().unwrap();
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total: true"));
    assert!(text.contains("gldim 0.75"));

    let unstable = tmp("tost-unstable.json");
    let g = (0..)
        .map(|s| HGon::sample_near_regular(DynkinType::parse("A3").unwrap(), 1.2, s).unwrap())
        .find(|g| !g.stability().unwrap().is_stable)
        .unwrap();
    io::write_polygon_file(&unstable, &g).unwrap();
    let out = bin().args(["tost", unstable.to_str().unwrap()]).output().unwrap();
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8(out.stdout).unwrap().contains("violated arrow"));
}

#[test]
fn sample_render_gepner() {
    let out = bin()
        .args(["sample", "D4", "-n", "30", "--mag", "0.1", "--seed", "5"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout).unwrap().contains("disagreements 0"));

    let poly = tmp("g2.json");
    let svg = tmp("g2.svg");
    assert_eq!(
        code(
            &bin()
                .args([
                    "gepner",
                    "G2",
                    "-o",
                    poly.to_str().unwrap(),
                    "--svg",
                    svg.to_str().unwrap(),
                ])
                .output()
                .unwrap()
        ),
        0
    );
    let rendered = tmp("g2-render.svg");
    assert_eq!(
        code(
            &bin()
                .args([
                    "render",
                    poly.to_str().unwrap(),
                    "-o",
                    rendered.to_str().unwrap(),
                    "--layers",
                    "edges,punctures,diagonals",
                ])
                .output()
                .unwrap()
        ),
        0
    );
    // tiling mode rejects non-E6 input
    assert_eq!(
        code(
            &bin()
                .args([
                    "render",
                    poly.to_str().unwrap(),
                    "-o",
                    rendered.to_str().unwrap(),
                    "--tiling",
                    "1",
                ])
                .output()
                .unwrap()
        ),
        1
    );
    // and accepts an E6 polygon
    let e6 = tmp("e6.json");
    io::write_polygon_file(&e6, &HGon::regular(DynkinType::parse("E6").unwrap())).unwrap();
    assert_eq!(
        code(
            &bin()
                .args([
                    "render",
                    e6.to_str().unwrap(),
                    "-o",
                    tmp("e6-tiling.svg").to_str().unwrap(),
                    "--tiling",
                    "2",
                ])
                .output()
                .unwrap()
        ),
        0
    );
}

#[test]
fn selftest_passes() {
    assert_eq!(code(&bin().args(["selftest"]).output().unwrap()), 0);
}
