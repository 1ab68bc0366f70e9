//! Deterministic SVG figures: model polygons with their diagonal-gons,
//! cores and punctures, Gepner polygons overlaid with the Coxeter-plane
//! projection of the root system, the three far-end hexagons of D4, and
//! the E6 ice-and-fire tiling.
//!
//! Output bytes are a pure function of the input: fixed element order and
//! fixed 4-decimal coordinate formatting.

use num_complex::Complex64;

use crate::charge::farend_polygon;
use crate::dynkin::Family;
use crate::hgon::HGon;
use crate::{Error, Model};

pub const MIN_CANVAS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layers {
    pub edges: bool,
    pub diagonals: bool,
    pub cores: bool,
    pub punctures: bool,
    pub roots: bool,
    pub labels: bool,
    pub farends: bool,
}

impl Default for Layers {
    fn default() -> Layers {
        Layers {
            edges: true,
            diagonals: true,
            cores: true,
            punctures: true,
            roots: false,
            labels: false,
            farends: false,
        }
    }
}

impl Layers {
    pub fn none() -> Layers {
        Layers {
            edges: false,
            diagonals: false,
            cores: false,
            punctures: false,
            roots: false,
            labels: false,
            farends: false,
        }
    }

    /// Parses a comma-separated layer list like "edges,cores,labels".
    pub fn parse(list: &str) -> Result<Layers, Error> {
        let mut l = Layers::none();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "edges" => l.edges = true,
                "diagonals" => l.diagonals = true,
                "cores" => l.cores = true,
                "punctures" => l.punctures = true,
                "roots" => l.roots = true,
                "labels" => l.labels = true,
                "farends" => l.farends = true,
                other => return Err(Error::Parse(format!("unknown layer `{other}`"))),
            }
        }
        Ok(l)
    }
}

#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub canvas: u32,
    pub layers: Layers,
    pub tiling_reps: u32,
}

impl Default for RenderSpec {
    fn default() -> RenderSpec {
        RenderSpec {
            canvas: 640,
            layers: Layers::default(),
            tiling_reps: 0,
        }
    }
}

impl RenderSpec {
    fn checked(&self) -> Result<(), Error> {
        if self.canvas < MIN_CANVAS {
            return Err(Error::Degenerate(format!(
                "canvas must be at least {MIN_CANVAS}px"
            )));
        }
        Ok(())
    }
}

const EDGE_COLOR: &str = "#1f6fb4";
const DIAGONAL_COLOR: &str = "#e8a33d";
const ICE_COLOR: &str = "#3bb8c4";
const FIRE_COLOR: &str = "#d1495b";
const PUNCTURE_COLOR: &str = "#222222";
const ROOT_COLOR: &str = "#666666";

enum Shape {
    Poly {
        pts: Vec<Complex64>,
        stroke: &'static str,
        width: f64,
        closed: bool,
        fill: Option<&'static str>,
    },
    Dot {
        at: Complex64,
        radius: f64,
        fill: &'static str,
    },
    Label {
        at: Complex64,
        text: String,
    },
}

struct Scene {
    shapes: Vec<Shape>,
    comments: Vec<String>,
}

impl Scene {
    fn new() -> Scene {
        Scene {
            shapes: Vec::new(),
            comments: Vec::new(),
        }
    }

    fn poly(&mut self, pts: Vec<Complex64>, stroke: &'static str, width: f64, closed: bool) {
        self.shapes.push(Shape::Poly {
            pts,
            stroke,
            width,
            closed,
            fill: None,
        });
    }

    fn dot(&mut self, at: Complex64, radius: f64, fill: &'static str) {
        self.shapes.push(Shape::Dot { at, radius, fill });
    }

    fn label(&mut self, at: Complex64, text: String) {
        self.shapes.push(Shape::Label { at, text });
    }

    fn finish(self, canvas: u32) -> String {
        let mut lo = Complex64::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut track = |p: &Complex64| {
            lo.re = lo.re.min(p.re);
            lo.im = lo.im.min(p.im);
            hi.re = hi.re.max(p.re);
            hi.im = hi.im.max(p.im);
        };
        for s in &self.shapes {
            match s {
                Shape::Poly { pts, .. } => pts.iter().for_each(&mut track),
                Shape::Dot { at, .. } | Shape::Label { at, .. } => track(at),
            }
        }
        if !lo.re.is_finite() {
            lo = Complex64::new(-1.0, -1.0);
            hi = Complex64::new(1.0, 1.0);
        }
        let side = canvas as f64;
        let pad = side * 0.05;
        let span = (hi.re - lo.re).max(hi.im - lo.im).max(1e-12);
        let scale = (side - 2.0 * pad) / span;
        let cx = (lo.re + hi.re) / 2.0;
        let cy = (lo.im + hi.im) / 2.0;
        let map = |p: Complex64| -> (f64, f64) {
            (side / 2.0 + (p.re - cx) * scale, side / 2.0 - (p.im - cy) * scale)
        };
        let f = |v: f64| format!("{v:.4}");

        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{canvas}\" height=\"{canvas}\" viewBox=\"0 0 {canvas} {canvas}\">\n"
        ));
        for c in &self.comments {
            out.push_str(&format!("<!-- {c} -->\n"));
        }
        out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");
        for s in &self.shapes {
            match s {
                Shape::Poly {
                    pts,
                    stroke,
                    width,
                    closed,
                    fill,
                } => {
                    let coords: Vec<String> = pts
                        .iter()
                        .map(|&p| {
                            let (x, y) = map(p);
                            format!("{},{}", f(x), f(y))
                        })
                        .collect();
                    let tag = if *closed { "polygon" } else { "polyline" };
                    out.push_str(&format!(
                        "<{tag} points=\"{}\" fill=\"{}\" stroke=\"{stroke}\" stroke-width=\"{}\" stroke-linejoin=\"round\"/>\n",
                        coords.join(" "),
                        fill.unwrap_or("none"),
                        f(*width),
                    ));
                }
                Shape::Dot { at, radius, fill } => {
                    let (x, y) = map(*at);
                    out.push_str(&format!(
                        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\"/>\n",
                        f(x),
                        f(y),
                        f(*radius),
                    ));
                }
                Shape::Label { at, text } => {
                    let (x, y) = map(*at);
                    out.push_str(&format!(
                        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\" fill=\"#333333\">{text}</text>\n",
                        f(x),
                        f(y),
                    ));
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn add_polygon_layers(scene: &mut Scene, g: &HGon, layers: &Layers) -> Result<(), Error> {
    let h = g.h() as i64;
    if layers.roots {
        // root projections in the gauge that matches the type's most
        // stable charge configuration
        let model = Model::new(g.dtype());
        let (_, gauge) = crate::tost::gepner_coxeter_alignment(model.quiver())?;
        let cox = crate::rootsys::CoxeterAction::build(model.orientation());
        for r in crate::rootsys::build_root_system(g.dtype()).roots() {
            scene.dot(cox.project(r) * gauge, 2.5, ROOT_COLOR);
        }
    }
    if layers.diagonals {
        if let Some(s) = g.containment_level() {
            if s >= 2 {
                for j in 0..h {
                    scene.poly(
                        vec![g.vertex(j), g.vertex(j + s as i64)],
                        DIAGONAL_COLOR,
                        1.0,
                        false,
                    );
                }
            }
        }
    }
    if layers.edges {
        scene.poly(g.vertices().to_vec(), EDGE_COLOR, 2.0, true);
    }
    if layers.cores {
        let src = g.dtype().source();
        if src.family() == Family::E {
            let cores = g.build_cores()?;
            scene.poly(cores.ice(), ICE_COLOR, 1.5, true);
            scene.poly(cores.fire(), FIRE_COLOR, 1.5, true);
        }
    }
    if layers.punctures {
        for &p in g.punctures() {
            scene.dot(p, 4.0, PUNCTURE_COLOR);
        }
    }
    if layers.labels {
        let c = g.center();
        for (j, &v) in g.vertices().iter().enumerate() {
            scene.label(c + (v - c) * 1.08, format!("V{j}"));
        }
    }
    Ok(())
}

/// Renders a polygon with the requested layers; `tiling_reps > 0` switches
/// to the E6 ice-and-fire tiling.
pub fn render_polygon(g: &HGon, spec: &RenderSpec) -> Result<String, Error> {
    spec.checked()?;
    if spec.tiling_reps > 0 {
        return render_tiling(g, spec.tiling_reps, spec.canvas);
    }
    if spec.layers.farends {
        return render_farend_panels(g, spec.canvas);
    }
    let mut scene = Scene::new();
    add_polygon_layers(&mut scene, g, &spec.layers)?;
    Ok(scene.finish(spec.canvas))
}

/// The Gepner figure of a type: the regular polygon with diagonals, cores
/// and punctures, overlaid with the root system projected to the Coxeter
/// plane (gauge-aligned to the charge values).
pub fn render_gepner(model: &Model, canvas: u32) -> Result<String, Error> {
    if canvas < MIN_CANVAS {
        return Err(Error::Degenerate(format!(
            "canvas must be at least {MIN_CANVAS}px"
        )));
    }
    let (g, _, _) = model.gepner()?;
    let mut scene = Scene::new();
    scene
        .comments
        .push(format!("gepner point of {}", model.dtype()));
    let layers = Layers {
        roots: true,
        ..Layers::default()
    };
    add_polygon_layers(&mut scene, &g, &layers)?;
    Ok(scene.finish(canvas))
}

/// The three far-end hexagons of a D4 polygon's charge, drawn side by side.
pub fn render_farend_panels(g: &HGon, canvas: u32) -> Result<String, Error> {
    let src = g.dtype().source();
    if !(src.family() == Family::D && src.rank() == 4) {
        return Err(Error::Unsupported {
            dtype: g.dtype().to_string(),
            what: "far-end panels are a D4 figure",
        });
    }
    let model = Model::new(g.dtype());
    let z = model.charge_from_hgon(g)?;
    let mut scene = Scene::new();
    let step = 2.6 * g.scale();
    for (k, choice) in [1usize, 3, 4].into_iter().enumerate() {
        let hexagon = farend_polygon(&z, model.quiver(), Some(choice))?;
        let offset = Complex64::new(step * k as f64, 0.0);
        let panel = hexagon.translated(offset);
        add_polygon_layers(&mut scene, &panel, &Layers::default())?;
        scene.label(offset - Complex64::new(0.0, 0.72 * g.scale()), format!("far end {choice}"));
    }
    Ok(scene.finish(canvas))
}

/// Lattice vectors of the E6 tiling: translations taking the core hexagon
/// across a square onto the neighbouring copy, u = V_0 - W_5 and
/// v = V_2 - W_7.
pub fn tiling_lattice(g: &HGon) -> Result<(Complex64, Complex64), Error> {
    let cores = g.build_cores()?;
    let w = |j: i64| cores.w[(j.rem_euclid(12)) as usize];
    Ok((g.vertex(0) - w(5), g.vertex(2) - w(7)))
}

/// The ice-and-fire tiling of a (proper) E6 polygon: translated copies of
/// both dissections over the lattice patch |a|, |b| <= reps.
pub fn render_tiling(g: &HGon, reps: u32, canvas: u32) -> Result<String, Error> {
    let t = g.dtype();
    if !(t.family() == Family::E && t.rank() == 6) {
        return Err(Error::Unsupported {
            dtype: t.to_string(),
            what: "the ice-and-fire tiling needs a proper E6 polygon",
        });
    }
    let validity = g.validate();
    if !validity.is_valid {
        return Err(Error::InvalidHGon {
            residual: validity.worst,
        });
    }
    let cores = g.build_cores()?;
    let (u, v) = tiling_lattice(g)?;
    let mut scene = Scene::new();
    scene.comments.push(format!(
        "tiling lattice u = ({:.6}, {:.6}), v = ({:.6}, {:.6})",
        u.re, u.im, v.re, v.im
    ));
    let w = |j: i64| cores.w[(j.rem_euclid(12)) as usize];
    let reps = reps as i64;
    for a in -reps..=reps {
        for b in -reps..=reps {
            let off = u * a as f64 + v * b as f64;
            // ice: even triangles, odd squares, even core
            for j in 0..6i64 {
                let tri = vec![
                    g.vertex(2 * j - 1) + off,
                    g.vertex(2 * j) + off,
                    w(2 * j) + off,
                ];
                scene.poly(tri, ICE_COLOR, 1.0, true);
                let sq = vec![
                    g.vertex(2 * j) + off,
                    g.vertex(2 * j + 1) + off,
                    w(2 * j + 2) + off,
                    w(2 * j) + off,
                ];
                scene.poly(sq, ICE_COLOR, 1.0, true);
            }
            scene.poly((0..6).map(|j| w(2 * j) + off).collect(), ICE_COLOR, 1.5, true);
            // fire: odd triangles, even squares, odd core
            for j in 0..6i64 {
                let tri = vec![
                    g.vertex(2 * j) + off,
                    g.vertex(2 * j + 1) + off,
                    w(2 * j + 1) + off,
                ];
                scene.poly(tri, FIRE_COLOR, 1.0, true);
                let sq = vec![
                    g.vertex(2 * j - 1) + off,
                    g.vertex(2 * j) + off,
                    w(2 * j + 1) + off,
                    w(2 * j - 1) + off,
                ];
                scene.poly(sq, FIRE_COLOR, 1.0, true);
            }
            scene.poly(
                (0..6).map(|j| w(2 * j + 1) + off).collect(),
                FIRE_COLOR,
                1.5,
                true,
            );
        }
    }
    if canvas < MIN_CANVAS {
        return Err(Error::Degenerate(format!(
            "canvas must be at least {MIN_CANVAS}px"
        )));
    }
    Ok(scene.finish(canvas))
}
