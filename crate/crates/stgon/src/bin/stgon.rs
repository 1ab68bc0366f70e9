//! Command line for the polygon models: type info, polygon checking, the
//! total-stability pipeline, Gepner figures, sampling experiments and SVG
//! rendering.
//!
//! Exit codes: 0 success (stable/total where applicable), 1 domain failure
//! (invalid or unstable input), 2 usage, parse or I/O failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use stgon::dynkin::{folding_data, Orientation};
use stgon::hgon::{effective_vars, relation_rank};
use stgon::render::{self, RenderSpec};
use stgon::{io, DynkinType, Error, HGon, Model};

const USAGE: &str = "usage:
  stgon info <TYPE>
  stgon check <FILE> [--tol EPS]
  stgon tost <FILE>
  stgon gepner <TYPE> -o <FILE> [--svg <FILE>]
  stgon sample <TYPE> -n <N> --mag <M> --seed <S>
  stgon render <FILE> -o <SVG> [--layers L1,L2,..] [--tiling <REPS>]
  stgon selftest";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = match run(&args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidHGon { .. }
                | Error::Degenerate(_)
                | Error::Unsupported { .. }
                | Error::WrongVertexCount { .. }
                | Error::WrongPunctureCount { .. } => 1,
                _ => 2,
            }
        }
    };
    ExitCode::from(code)
}

fn run(args: &[String]) -> Result<u8, Error> {
    let usage = || Error::Parse(USAGE.to_string());
    let cmd = args.first().ok_or_else(usage)?;
    match cmd.as_str() {
        "info" => cmd_info(args.get(1).ok_or_else(usage)?),
        "check" => {
            let file = args.get(1).ok_or_else(usage)?;
            let tol = flag_value(args, "--tol")?.map(|s| parse_f64(&s)).transpose()?;
            cmd_check(Path::new(file), tol)
        }
        "tost" => cmd_tost(Path::new(args.get(1).ok_or_else(usage)?)),
        "gepner" => {
            let tag = args.get(1).ok_or_else(usage)?;
            let out = flag_value(args, "-o")?.ok_or_else(usage)?;
            let svg = flag_value(args, "--svg")?;
            cmd_gepner(tag, Path::new(&out), svg.map(PathBuf::from).as_deref())
        }
        "sample" => {
            let tag = args.get(1).ok_or_else(usage)?;
            let n = parse_usize(&flag_value(args, "-n")?.ok_or_else(usage)?)?;
            let mag = parse_f64(&flag_value(args, "--mag")?.ok_or_else(usage)?)?;
            let seed = parse_u64(&flag_value(args, "--seed")?.unwrap_or_else(|| "0".into()))?;
            cmd_sample(tag, n, mag, seed)
        }
        "render" => {
            let file = args.get(1).ok_or_else(usage)?;
            let out = flag_value(args, "-o")?.ok_or_else(usage)?;
            let layers = flag_value(args, "--layers")?;
            let tiling = flag_value(args, "--tiling")?
                .map(|s| parse_usize(&s))
                .transpose()?
                .unwrap_or(0);
            cmd_render(Path::new(file), Path::new(&out), layers.as_deref(), tiling as u32)
        }
        "selftest" => cmd_selftest(),
        _ => Err(usage()),
    }
}

fn flag_value(args: &[String], flag: &str) -> Result<Option<String>, Error> {
    match args.iter().position(|a| a == flag) {
        None => Ok(None),
        Some(i) => args
            .get(i + 1)
            .cloned()
            .map(Some)
            .ok_or_else(|| Error::Parse(format!("{flag} needs a value"))),
    }
}

fn parse_f64(s: &str) -> Result<f64, Error> {
    s.parse().map_err(|_| Error::Parse(format!("bad number `{s}`")))
}

fn parse_u64(s: &str) -> Result<u64, Error> {
    s.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

fn parse_usize(s: &str) -> Result<usize, Error> {
    s.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

fn cmd_info(tag: &str) -> Result<u8, Error> {
    let t = DynkinType::parse(tag)?;
    let o = Orientation::standard(t);
    println!("type {t}");
    println!(
        "rank {}   coxeter number h = {}   moduli dimension {}",
        t.rank(),
        t.coxeter_number(),
        t.rank()
    );
    if t.is_simply_laced() {
        let (p, q, r) = t.branches().expect("simply laced");
        println!("simply laced, tree T_{{{p},{q},{r}}}");
    } else if let Some(f) = folding_data(t) {
        let w: Vec<String> = f.weights.iter().map(usize::to_string).collect();
        println!("folded from {} (orbit weights {})", f.source, w.join(","));
    }
    if let Ok(rank) = relation_rank(t) {
        println!(
            "edge relations: rank {rank} on {} effective variables",
            effective_vars(t).expect("exceptional type"),
        );
    }
    let gon = match t.puncture_count() {
        2 => "doubly punctured symmetric",
        1 => "centrally punctured symmetric",
        _ if t.symmetric_gon() => "symmetric",
        _ => "plain",
    };
    println!("model polygon: {gon} {}-gon", t.hgon_sides());
    print!("far end {}", o.far_end());
    if let Some(v) = o.near_end() {
        print!("   near end {v}");
    }
    if let Some(v) = o.mid_end() {
        print!("   mid end {v}");
    }
    println!();
    let arrows: Vec<String> = o
        .arrows()
        .iter()
        .map(|(s, t)| format!("{s}->{t}"))
        .collect();
    println!("orientation: {}", arrows.join(" "));
    Ok(0)
}

fn cmd_check(path: &Path, tol: Option<f64>) -> Result<u8, Error> {
    let mut g = io::read_polygon_file(path)?;
    if let Some(eps) = tol {
        g = HGon::new(
            g.dtype(),
            g.vertices().to_vec(),
            g.punctures().to_vec(),
            Some(eps),
        )?;
    }
    let v = g.validate();
    println!("type {}   scale {:.6}", g.dtype(), v.scale);
    for (name, residual) in &v.checks {
        println!("  {name:<20} residual {residual:.3e}");
    }
    println!("  {:<20} {:.3e}", "shortest edge", v.min_edge);
    if !v.is_valid {
        println!("INVALID (threshold {:.3e})", v.threshold);
        return Ok(1);
    }
    let s = g.stability()?;
    println!("valid polygon");
    println!(
        "  positively convex: {} (margin {:.3e})",
        s.convex, s.convex_margin
    );
    if let Some((edge, vertex)) = s.convex_witness {
        println!("    witness: vertex {vertex} right of edge into V{edge}");
    }
    if let Some(level) = s.level {
        for c in &s.containment {
            println!(
                "  {} in level-{level} diagonal-gon: {} (margin {:.3e})",
                c.name, c.inside, c.margin
            );
        }
    }
    if let (Some(ok), Some(margin)) = (s.core_fan_convex, s.core_fan_margin) {
        println!("  mid-end orbit polygon convex: {ok} (margin {margin:.3e})");
    }
    if s.folded_criterion {
        println!("  (folded criterion via {})", g.dtype().source());
    }
    if s.marginal {
        println!("  marginal: some margin within 10 tolerances of zero");
    }
    println!("{}", if s.is_stable { "STABLE" } else { "UNSTABLE" });
    Ok(if s.is_stable { 0 } else { 1 })
}

fn cmd_tost(path: &Path) -> Result<u8, Error> {
    let g = io::read_polygon_file(path)?;
    let model = Model::new(g.dtype());
    let p = model.build_slicing(&g)?;
    let rep = model.check_total(&p);
    let gl = model.gldim(&p);
    println!("type {}", g.dtype());
    println!("total: {}", rep.is_total);
    println!("gldim {:.12} (angle route {:.12})", rep.gldim, gl.by_angles);
    for v in &rep.violations {
        println!(
            "  violated arrow {} -> {}: phases {:.6} -> {:.6} (gap {:.6})",
            v.from, v.to, v.from_phase, v.to_phase, v.gap
        );
    }
    if rep.marginal {
        println!("  marginal: smallest gap margin {:.3e}", rep.min_gap_margin);
    }
    Ok(if rep.is_total { 0 } else { 1 })
}

fn cmd_gepner(tag: &str, out: &Path, svg: Option<&Path>) -> Result<u8, Error> {
    let t = DynkinType::parse(tag)?;
    let model = Model::new(t);
    let (g, _, p) = model.gepner()?;
    io::write_polygon_file(out, &g)?;
    println!("wrote {}", out.display());
    let rep = model.check_total(&p);
    println!(
        "gepner point of {t}: total {}   gldim {:.12} (= 1 - 2/{})",
        rep.is_total,
        rep.gldim,
        t.coxeter_number()
    );
    if let Some(svg_path) = svg {
        let figure = render::render_gepner(&model, 640)?;
        std::fs::write(svg_path, figure)?;
        println!("wrote {}", svg_path.display());
    }
    Ok(0)
}

fn cmd_sample(tag: &str, n: usize, mag: f64, seed: u64) -> Result<u8, Error> {
    if n == 0 {
        return Err(Error::Parse("need at least one sample".into()));
    }
    let t = DynkinType::parse(tag)?;
    let model = Model::new(t);
    let stats = model.sample_stats(n, mag, seed)?;
    let h = t.coxeter_number() as f64;
    println!("type {t}   samples {n}   magnitude {mag}   seed {seed}");
    println!(
        "stable {}/{} ({:.1}%)   stability-vs-totality disagreements {}",
        stats.stable,
        n,
        100.0 * stats.stable as f64 / n as f64,
        stats.disagreements
    );
    if stats.stable > 0 {
        println!(
            "gldim over stable samples: min {:.9}  max {:.9}  (floor 1 - 2/h = {:.9})",
            stats.gldim_min,
            stats.gldim_max,
            1.0 - 2.0 / h
        );
        let bars: Vec<String> = stats.gldim_bins.iter().map(usize::to_string).collect();
        println!("gldim histogram over [1-2/h, 1): [{}]", bars.join(", "));
    }
    Ok(if stats.disagreements == 0 { 0 } else { 1 })
}

fn cmd_render(file: &Path, out: &Path, layers: Option<&str>, tiling: u32) -> Result<u8, Error> {
    let g = io::read_polygon_file(file)?;
    let mut spec = RenderSpec {
        tiling_reps: tiling,
        ..RenderSpec::default()
    };
    if let Some(list) = layers {
        spec.layers = render::Layers::parse(list)?;
    }
    let svg = render::render_polygon(&g, &spec)?;
    std::fs::write(out, svg)?;
    println!("wrote {}", out.display());
    Ok(0)
}

fn cmd_selftest() -> Result<u8, Error> {
    let mut failures = 0;
    let mut check = |name: &str, ok: bool| {
        println!("{} {name}", if ok { "ok  " } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };
    for tag in ["A3", "D4", "D5", "E6", "E7", "E8", "B3", "C3", "F4", "G2"] {
        let t = DynkinType::parse(tag).expect("known tag");
        let model = Model::new(t);
        let (g, z, p) = model.gepner()?;
        check(&format!("{tag} gepner polygon valid"), g.validate().is_valid);
        check(&format!("{tag} gepner total"), model.check_total(&p).is_total);
        check(
            &format!("{tag} gepner gldim = 1 - 2/h"),
            (model.check_total(&p).gldim - (1.0 - 2.0 / t.coxeter_number() as f64)).abs() < 1e-9,
        );
        check(&format!("{tag} mesh residual"), model.verify_mesh(&z) < 1e-9);
        let s = model.sample(0.05, 12345)?;
        check(
            &format!("{tag} round trip"),
            model.roundtrip_distance(&s)? < 1e-9,
        );
    }
    if failures == 0 {
        println!("selftest passed");
        Ok(0)
    } else {
        println!("selftest failed ({failures})");
        Ok(1)
    }
}
