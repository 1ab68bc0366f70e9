//! Model polygons: an h-gon of each Dynkin type with its defining linear
//! relations, punctures or ice/fire cores, validity and stability checks,
//! free-coordinate charts and a deterministic sampler.
//!
//! Relation catalogue (edges z_j = V_{j-1} V_j, indices mod h):
//! - A_n: closure only.
//! - B_n / C_n: centrally symmetric 2n-gon (B additionally carries a
//!   puncture at the geometric center).
//! - D_n: centrally symmetric 2(n-1)-gon with punctures B_+, B_- whose
//!   midpoint is the center.
//! - E6: triangles z_j + z_{j+4} + z_{j+8} = 0 and squares
//!   z_j - z_{j-3} + z_{j-6} - z_{j-9} = 0.
//! - E7: symmetric, hexagons z_j + z_{j+1} + z_{j+6} + z_{j+7} + z_{j+12}
//!   + z_{j+13} = 0.
//! - E8: symmetric, triangles z_j + z_{j+10} + z_{j+20} = 0 and pentagons
//!   z_j + z_{j+6} + z_{j+12} + z_{j+18} + z_{j+24} = 0.
//! - F4: symmetric 12-gon with the E6 relations.
//! - G2: symmetric 6-gon with triangles z_j + z_{j+2} + z_{j+4} = 0 and a
//!   puncture at the center.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::dynkin::{DynkinType, Family};
use crate::geom;
use crate::imat;
use crate::Error;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A planar model polygon with optional punctures.
#[derive(Debug, Clone)]
pub struct HGon {
    dtype: DynkinType,
    vertices: Vec<Complex64>,
    punctures: Vec<Complex64>,
    tolerance: f64,
}

impl HGon {
    /// Wraps raw data, enforcing the structural counts: h(t) vertices,
    /// two punctures for D, one (or two coincident) for B and G2, none
    /// otherwise. Geometric validity is checked separately by
    /// [`HGon::validate`].
    pub fn new(
        dtype: DynkinType,
        vertices: Vec<Complex64>,
        punctures: Vec<Complex64>,
        tolerance: Option<f64>,
    ) -> Result<HGon, Error> {
        let h = dtype.hgon_sides();
        if vertices.len() != h {
            return Err(Error::WrongVertexCount {
                dtype: dtype.to_string(),
                expected: h,
                got: vertices.len(),
            });
        }
        let ok = match dtype.family() {
            Family::D => punctures.len() == 2,
            Family::B | Family::G => (1..=2).contains(&punctures.len()),
            _ => punctures.is_empty(),
        };
        if !ok {
            return Err(Error::WrongPunctureCount {
                dtype: dtype.to_string(),
                got: punctures.len(),
            });
        }
        Ok(HGon {
            dtype,
            vertices,
            punctures,
            tolerance: tolerance.unwrap_or(DEFAULT_TOLERANCE),
        })
    }

    pub fn dtype(&self) -> DynkinType {
        self.dtype
    }

    pub fn h(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn punctures(&self) -> &[Complex64] {
        &self.punctures
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn vertex(&self, j: i64) -> Complex64 {
        let h = self.h() as i64;
        self.vertices[j.rem_euclid(h) as usize]
    }

    /// Edge z_j = V_{j-1} V_j, index mod h.
    pub fn edge(&self, j: i64) -> Complex64 {
        self.vertex(j) - self.vertex(j - 1)
    }

    pub fn center(&self) -> Complex64 {
        geom::centroid(&self.vertices)
    }

    pub fn scale(&self) -> f64 {
        geom::diameter(&self.vertices)
    }

    pub fn translated(&self, c: Complex64) -> HGon {
        HGon {
            dtype: self.dtype,
            vertices: self.vertices.iter().map(|v| v + c).collect(),
            punctures: self.punctures.iter().map(|p| p + c).collect(),
            tolerance: self.tolerance,
        }
    }

    pub fn rotated(&self, theta: f64) -> HGon {
        let r = Complex64::from_polar(1.0, theta);
        HGon {
            dtype: self.dtype,
            vertices: self.vertices.iter().map(|v| v * r).collect(),
            punctures: self.punctures.iter().map(|p| p * r).collect(),
            tolerance: self.tolerance,
        }
    }

    /// Translate so the vertex centroid sits at the origin.
    pub fn canonicalized(&self) -> HGon {
        self.translated(-self.center())
    }

    /// Reinterpret a folded polygon as one of its simply-laced source type
    /// (identity for simply-laced input). B and G2 duplicate the merged
    /// puncture into the two source punctures; C and F4 only change tag.
    pub fn unfold(&self) -> HGon {
        let src = self.dtype.source();
        if src == self.dtype {
            return self.clone();
        }
        let punctures = match src.family() {
            Family::D => {
                let p = self.punctures.first().copied().unwrap_or_else(|| self.center());
                vec![p, 2.0 * self.center() - p]
            }
            _ => Vec::new(),
        };
        HGon {
            dtype: src,
            vertices: self.vertices.clone(),
            punctures,
            tolerance: self.tolerance,
        }
    }

    /// All per-type relation residuals. The polygon is valid when every
    /// residual is at most tolerance * scale and no edge degenerates.
    pub fn validate(&self) -> ValidityReport {
        let h = self.h() as i64;
        let t = self.dtype;
        let mut checks: Vec<(&'static str, f64)> = Vec::new();
        let max_over = |f: &dyn Fn(i64) -> Complex64| -> f64 {
            (0..h).map(|j| f(j).norm()).fold(0.0, f64::max)
        };

        let closure = (0..h).map(|j| self.edge(j)).sum::<Complex64>().norm();
        checks.push(("closure", closure));
        if t.symmetric_gon() {
            checks.push((
                "central symmetry",
                max_over(&|j| self.edge(j + h / 2) + self.edge(j)),
            ));
        }
        match t.family() {
            Family::E if t.rank() == 6 => {
                checks.push((
                    "triangle relations",
                    max_over(&|j| self.edge(j) + self.edge(j + 4) + self.edge(j + 8)),
                ));
                checks.push((
                    "square relations",
                    max_over(&|j| {
                        self.edge(j) - self.edge(j - 3) + self.edge(j - 6) - self.edge(j - 9)
                    }),
                ));
            }
            Family::E if t.rank() == 7 => {
                checks.push((
                    "hexagon relations",
                    max_over(&|j| {
                        self.edge(j)
                            + self.edge(j + 1)
                            + self.edge(j + 6)
                            + self.edge(j + 7)
                            + self.edge(j + 12)
                            + self.edge(j + 13)
                    }),
                ));
            }
            Family::E => {
                checks.push((
                    "triangle relations",
                    max_over(&|j| self.edge(j) + self.edge(j + 10) + self.edge(j + 20)),
                ));
                checks.push((
                    "pentagon relations",
                    max_over(&|j| {
                        self.edge(j)
                            + self.edge(j + 6)
                            + self.edge(j + 12)
                            + self.edge(j + 18)
                            + self.edge(j + 24)
                    }),
                ));
            }
            Family::F => {
                checks.push((
                    "triangle relations",
                    max_over(&|j| self.edge(j) + self.edge(j + 4) + self.edge(j + 8)),
                ));
                checks.push((
                    "square relations",
                    max_over(&|j| {
                        self.edge(j) - self.edge(j - 3) + self.edge(j - 6) - self.edge(j - 9)
                    }),
                ));
            }
            Family::G => {
                checks.push((
                    "triangle relations",
                    max_over(&|j| self.edge(j) + self.edge(j + 2) + self.edge(j + 4)),
                ));
            }
            _ => {}
        }
        let center = self.center();
        match t.family() {
            Family::D => {
                let sum = self.punctures[0] + self.punctures[1] - 2.0 * center;
                checks.push(("puncture midpoint", sum.norm()));
            }
            Family::B | Family::G => {
                let worst = self
                    .punctures
                    .iter()
                    .map(|p| (p - center).norm())
                    .fold(0.0, f64::max);
                checks.push(("puncture at center", worst));
            }
            _ => {}
        }

        let scale = self.scale();
        let min_edge = (0..h).map(|j| self.edge(j).norm()).fold(f64::INFINITY, f64::min);
        let threshold = self.tolerance * scale;
        let worst = checks.iter().map(|c| c.1).fold(0.0, f64::max);
        let is_valid = scale > 0.0 && worst <= threshold && min_edge > threshold;
        ValidityReport {
            checks,
            min_edge,
            scale,
            threshold,
            worst,
            is_valid,
        }
    }

    /// Derived core data for the exceptional types (E6, E7, E8 and F4).
    ///
    /// The core vertices W_j are reached by fixed edge walks; a second,
    /// independent walk per vertex cross-checks the relations. The core
    /// edges satisfy W_{j-1} W_{j+1} = z_{j-2} + z_{j+n-4}.
    pub fn build_cores(&self) -> Result<CoreSet, Error> {
        let t = self.dtype;
        let n = t.source().rank();
        let h = self.h() as i64;
        let exceptional = matches!(t.family(), Family::F) || matches!(t.family(), Family::E);
        if !exceptional {
            return Err(Error::Unsupported {
                dtype: t.to_string(),
                what: "cores exist for E6, E7, E8 and F4 only",
            });
        }
        let mut w = Vec::with_capacity(self.h());
        let mut walk_residual = 0.0f64;
        let mut aux = Vec::new();
        match n {
            6 => {
                for j in 0..h {
                    let w1 = self.vertex(j) + self.edge(j + 4);
                    let w2 = self.vertex(j - 1) - self.edge(j + 8);
                    walk_residual = walk_residual.max((w1 - w2).norm());
                    w.push(w1);
                }
            }
            7 => {
                for j in 0..h {
                    w.push(self.vertex(j) + self.edge(j + 5));
                }
                for j in 0..h {
                    aux.push(w[((j + 1).rem_euclid(h)) as usize] + self.edge(j + 7));
                }
                for j in 0..h {
                    let w2 = aux[((j + 1).rem_euclid(h)) as usize] + self.edge(j + 13);
                    walk_residual = walk_residual.max((w[j as usize] - w2).norm());
                }
            }
            8 => {
                for j in 0..h {
                    let w1 = self.vertex(j) + self.edge(j + 6);
                    let w2 = self.vertex(j + 1) + self.edge(j + 11);
                    walk_residual = walk_residual.max((w1 - w2).norm());
                    w.push(w1);
                }
                for j in 0..h {
                    aux.push(w[((j + 1).rem_euclid(h)) as usize] + self.edge(j + 13));
                }
            }
            _ => unreachable!(),
        }
        // ice parity follows the constructions: even W for 12-gons,
        // odd W for E7/E8
        let ice_parity = if n == 6 { 0 } else { 1 };
        Ok(CoreSet {
            ice_parity,
            w,
            aux,
            walk_residual,
        })
    }

    /// Positive convexity of the vertex cycle, with the worst
    /// (edge, vertex) witness.
    pub fn convexity(&self) -> geom::ConvexityReport {
        geom::positively_convex(&self.vertices, self.tolerance)
    }

    /// Strict containment of `p` in the level-s diagonal-gon.
    pub fn in_level_diagonal_gon(&self, s: usize, p: Complex64) -> bool {
        geom::diagonal_gon_margin(&self.vertices, s, p) > self.tolerance
    }

    /// The diagonal level that bounds punctures/cores for this type
    /// (None when stability is plain convexity).
    pub fn containment_level(&self) -> Option<usize> {
        let n = self.dtype.rank();
        match self.dtype.family() {
            Family::D => Some(n - 2),
            Family::B => Some(n - 1),
            Family::E => Some(n - 3),
            Family::F => Some(3),
            Family::G => Some(2),
            Family::A | Family::C => None,
        }
    }

    /// Full stability check. Requires a valid polygon.
    pub fn stability(&self) -> Result<StabilityReport, Error> {
        let validity = self.validate();
        if !validity.is_valid {
            return Err(Error::InvalidHGon {
                residual: validity.worst.max(if validity.min_edge <= validity.threshold {
                    validity.threshold * 2.0
                } else {
                    0.0
                }),
            });
        }
        let convex = self.convexity();
        let level = self.containment_level();
        let mut containment = Vec::new();
        if let Some(s) = level {
            let points: Vec<(String, Complex64)> = match self.dtype.family() {
                Family::D => vec![
                    ("B+".to_string(), self.punctures[0]),
                    ("B-".to_string(), self.punctures[1]),
                ],
                Family::B | Family::G => self
                    .punctures
                    .iter()
                    .enumerate()
                    .map(|(k, &p)| (format!("puncture {k}"), p))
                    .collect(),
                Family::E | Family::F => {
                    let cores = self.build_cores()?;
                    cores
                        .w
                        .iter()
                        .enumerate()
                        .map(|(k, &p)| (format!("W{k}"), p))
                        .collect()
                }
                _ => unreachable!(),
            };
            for (name, p) in points {
                let margin = geom::diagonal_gon_margin(&self.vertices, s, p);
                containment.push(Containment {
                    name,
                    level: s,
                    margin,
                    inside: margin > self.tolerance,
                });
            }
        }
        // For the exceptional types the mid-end orbit polygon (edges w_j,
        // interleaving the two core edge fans) must be positively convex as
        // well. For 12-gons it is the central mirror of the outer polygon,
        // so the check is redundant there; for E7/E8 it is independent of
        // the containment conditions and cannot be dropped.
        let core_fan = match self.dtype.source().family() {
            Family::E => {
                let cores = self.build_cores()?;
                let mut pts = Vec::with_capacity(self.h());
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 1..=self.h() as i64 {
                    acc += cores.core_edge(j);
                    pts.push(acc);
                }
                Some(geom::positively_convex(&pts, self.tolerance))
            }
            _ => None,
        };
        let all_inside = containment.iter().all(|c| c.inside);
        let fan_ok = core_fan.as_ref().is_none_or(|f| f.ok);
        let is_stable = convex.ok && all_inside && fan_ok;
        let band = 10.0 * self.tolerance;
        let marginal = convex.min_margin.abs() < band
            || containment.iter().any(|c| c.margin.abs() < band)
            || core_fan
                .as_ref()
                .is_some_and(|f| f.min_margin.abs() < band);
        Ok(StabilityReport {
            convex: convex.ok,
            convex_witness: convex.witness,
            convex_margin: convex.min_margin,
            containment,
            level,
            core_fan_convex: core_fan.as_ref().map(|f| f.ok),
            core_fan_margin: core_fan.map(|f| f.min_margin),
            is_stable,
            marginal,
            folded_criterion: !self.dtype.is_simply_laced(),
        })
    }

    /// The equivalent stability test for 12-gons (E6 or F4): the even-index
    /// core sits inside the hexagon cut out by the odd long diagonals
    /// V_{2j} V_{2j+3} and the odd-index core inside the one cut out by
    /// V_{2j-1} V_{2j+2}.
    pub fn ice_fire_boundary_check(&self) -> Result<bool, Error> {
        let src = self.dtype.source();
        if !(src.family() == Family::E && src.rank() == 6) {
            return Err(Error::Unsupported {
                dtype: self.dtype.to_string(),
                what: "the boundary criterion is for E6/F4 12-gons",
            });
        }
        if !self.validate().is_valid {
            return Err(Error::InvalidHGon {
                residual: self.validate().worst,
            });
        }
        if !self.convexity().ok {
            return Ok(false);
        }
        let cores = self.build_cores()?;
        let scale = self.scale();
        let mut ok = true;
        for (k, &wk) in cores.w.iter().enumerate() {
            for j in 0..6i64 {
                // boundary diagonals of the opposite configuration
                let (a, b) = if k % 2 == 0 {
                    (self.vertex(2 * j), self.vertex(2 * j + 3))
                } else {
                    (self.vertex(2 * j - 1), self.vertex(2 * j + 2))
                };
                ok &= geom::left_margin(a, b, wk, scale) > self.tolerance;
            }
        }
        Ok(ok)
    }

    /// Free-coordinate chart, matching [`from_free_coordinates`]: the free
    /// edges (and for D the vector from V_0 to the first puncture).
    pub fn free_coordinates(&self) -> Vec<Complex64> {
        let t = self.dtype;
        let n = t.rank();
        let free_edges = match t.family() {
            Family::D => n - 1,
            Family::E => n,
            Family::F => 4,
            Family::G => 2,
            _ => n,
        };
        let mut out: Vec<Complex64> = (1..=free_edges as i64).map(|j| self.edge(j)).collect();
        if t.family() == Family::D {
            out.push(self.punctures[0] - self.vertices[0]);
        }
        out
    }

    /// Builds the polygon with the given free coordinates: the designated
    /// free edges are taken verbatim, the remaining edges are solved from
    /// the relation system (elimination order fixed), the vertex centroid
    /// is placed at the origin and punctures are attached per type.
    pub fn from_free_coordinates(t: DynkinType, params: &[Complex64]) -> Result<HGon, Error> {
        let n = t.rank();
        if params.len() != n {
            return Err(Error::Degenerate(format!(
                "{t} takes {n} free coordinates, got {}",
                params.len()
            )));
        }
        if params.iter().any(|p| !p.re.is_finite() || !p.im.is_finite()) {
            return Err(Error::Degenerate("non-finite free coordinate".into()));
        }
        let h = t.hgon_sides();
        let mut z = vec![Complex64::new(0.0, 0.0); h];
        let set_symmetric_tail = |z: &mut Vec<Complex64>| {
            for k in 1..h / 2 {
                z[h / 2 + k] = -z[k];
            }
            z[0] = -z[h / 2];
        };
        match t.family() {
            Family::A => {
                z[1..=n].copy_from_slice(params);
                z[0] = -params.iter().sum::<Complex64>();
            }
            Family::B | Family::C => {
                z[1..=n].copy_from_slice(params);
                set_symmetric_tail(&mut z);
            }
            Family::D => {
                z[1..n].copy_from_slice(&params[..n - 1]);
                set_symmetric_tail(&mut z);
            }
            Family::E if n == 6 => {
                z[1..=6].copy_from_slice(params);
                let p = |k: usize| params[k - 1];
                z[7] = -p(1) - p(2) + p(4) - p(6);
                z[8] = p(1) - p(3) - p(4) + p(5) + p(6);
                z[9] = -p(1) - p(5);
                z[10] = -p(2) - p(6);
                z[11] = p(1) + p(2) - p(3) - p(4) + p(6);
                z[0] = -p(1) + p(3) - p(5) - p(6);
            }
            Family::E if n == 7 => {
                z[1..=7].copy_from_slice(params);
                let p = |k: usize| params[k - 1];
                z[8] = -p(1) - p(2) + p(4) + p(5) - p(7);
                z[9] = p(1) - p(3) - p(4) + p(6) + p(7);
                set_symmetric_tail(&mut z);
            }
            Family::E => {
                z[1..=8].copy_from_slice(params);
                let p = |k: usize| params[k - 1];
                z[9] = -p(1) - p(2) + p(4) + p(5) + p(6) - p(8);
                z[10] = p(1) + p(7) + p(8) - p(3) - p(4);
                z[11] = p(6) - p(1);
                z[12] = p(7) - p(2);
                z[13] = p(8) - p(3);
                z[14] = z[9] - p(4);
                z[15] = z[10] - p(5);
                for k in 1..15 {
                    z[15 + k] = -z[k];
                }
                z[0] = -z[15];
            }
            Family::F => {
                z[1..=4].copy_from_slice(params);
                let p = |k: usize| params[k - 1];
                z[5] = p(3) - p(1);
                z[6] = p(4) - p(2);
                for k in 1..6 {
                    z[6 + k] = -z[k];
                }
                z[0] = -z[6];
            }
            Family::G => {
                z[1] = params[0];
                z[2] = params[1];
                z[3] = params[1] - params[0];
                z[4] = -z[1];
                z[5] = -z[2];
                z[0] = -z[3];
            }
        }
        // vertices from cumulative sums, centroid at the origin
        let mut verts = Vec::with_capacity(h);
        let mut v = Complex64::new(0.0, 0.0);
        verts.push(v);
        for zk in z.iter().take(h).skip(1) {
            v += zk;
            verts.push(v);
        }
        let shift = -geom::centroid(&verts);
        for v in &mut verts {
            *v += shift;
        }
        let punctures = match t.family() {
            Family::D => {
                let b_plus = verts[0] + params[n - 1];
                let center = geom::centroid(&verts);
                vec![b_plus, 2.0 * center - b_plus]
            }
            Family::B | Family::G => vec![geom::centroid(&verts)],
            _ => Vec::new(),
        };
        HGon::new(t, verts, punctures, None)
    }

    /// The regular model polygon: unit circumradius, V_j = e^{2 pi i j / h},
    /// punctures at the center.
    pub fn regular(t: DynkinType) -> HGon {
        let h = t.hgon_sides();
        let verts: Vec<Complex64> = (0..h)
            .map(|j| Complex64::from_polar(1.0, TAU * j as f64 / h as f64))
            .collect();
        let punctures = vec![Complex64::new(0.0, 0.0); t.puncture_count()];
        HGon::new(t, verts, punctures, None).expect("regular polygon is structurally sound")
    }

    /// Deterministic sampler: perturbs every free coordinate of the regular
    /// polygon by an independent complex offset of at most `magnitude`,
    /// then rebuilds. Resamples degenerate results up to a retry cap.
    pub fn sample_near_regular(t: DynkinType, magnitude: f64, seed: u64) -> Result<HGon, Error> {
        if magnitude < 0.0 {
            return Err(Error::Degenerate("negative magnitude".into()));
        }
        let base = HGon::regular(t).free_coordinates();
        let mut rng = SplitMix64::new(seed);
        for _ in 0..32 {
            let params: Vec<Complex64> = base
                .iter()
                .map(|p| p + magnitude * rng.unit_disk())
                .collect();
            let g = HGon::from_free_coordinates(t, &params)?;
            if g.validate().is_valid {
                return Ok(g);
            }
        }
        Err(Error::Degenerate(format!(
            "no valid {t} polygon after 32 draws (magnitude {magnitude})"
        )))
    }
}

/// Validity residuals, in absolute units of the input coordinates.
#[derive(Debug, Clone)]
pub struct ValidityReport {
    pub checks: Vec<(&'static str, f64)>,
    pub min_edge: f64,
    pub scale: f64,
    pub threshold: f64,
    pub worst: f64,
    pub is_valid: bool,
}

/// Core data of an exceptional-type polygon: all h core vertices W_j (the
/// two cores are the parity classes), the auxiliary vertices U_j for E7/E8,
/// and the worst disagreement between the two defining edge walks.
#[derive(Debug, Clone)]
pub struct CoreSet {
    ice_parity: usize,
    pub w: Vec<Complex64>,
    pub aux: Vec<Complex64>,
    pub walk_residual: f64,
}

impl CoreSet {
    pub fn ice(&self) -> Vec<Complex64> {
        self.w
            .iter()
            .enumerate()
            .filter(|(k, _)| k % 2 == self.ice_parity)
            .map(|(_, &p)| p)
            .collect()
    }

    pub fn fire(&self) -> Vec<Complex64> {
        self.w
            .iter()
            .enumerate()
            .filter(|(k, _)| k % 2 != self.ice_parity)
            .map(|(_, &p)| p)
            .collect()
    }

    /// Core edge w_j = W_{j-1} W_{j+1} = z_{j-2} + z_{j+n-4}.
    pub fn core_edge(&self, j: i64) -> Complex64 {
        let h = self.w.len() as i64;
        self.w[(j + 1).rem_euclid(h) as usize] - self.w[(j - 1).rem_euclid(h) as usize]
    }
}

#[derive(Debug, Clone)]
pub struct Containment {
    pub name: String,
    pub level: usize,
    pub margin: f64,
    pub inside: bool,
}

#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub convex: bool,
    pub convex_witness: Option<(usize, usize)>,
    pub convex_margin: f64,
    pub containment: Vec<Containment>,
    pub level: Option<usize>,
    /// Convexity of the mid-end orbit polygon (exceptional types only).
    pub core_fan_convex: Option<bool>,
    pub core_fan_margin: Option<f64>,
    pub is_stable: bool,
    /// Some decision sits within ten tolerances of its boundary.
    pub marginal: bool,
    /// The verdict comes from the folded reading of the source type.
    pub folded_criterion: bool,
}

/// Exact rank of the relation system for the exceptional and folded types,
/// after substituting the central symmetry where the type is symmetric.
pub fn relation_rank(t: DynkinType) -> Result<usize, Error> {
    let rows = relation_rows(t)?;
    Ok(imat::rank(&rows))
}

/// Effective number of free complex edge variables before relations:
/// h for E6, h/2 for the symmetric exceptional/folded types.
pub fn effective_vars(t: DynkinType) -> Result<usize, Error> {
    let h = t.hgon_sides();
    Ok(if t.symmetric_gon() { h / 2 } else { h })
}

fn relation_rows(t: DynkinType) -> Result<Vec<Vec<i64>>, Error> {
    let h = t.hgon_sides();
    let offsets: Vec<Vec<(i64, i64)>> = match (t.family(), t.rank()) {
        (Family::E, 6) | (Family::F, _) => vec![
            vec![(0, 1), (4, 1), (8, 1)],
            vec![(0, 1), (-3, -1), (-6, 1), (-9, -1)],
        ],
        (Family::E, 7) => vec![vec![(0, 1), (1, 1), (6, 1), (7, 1), (12, 1), (13, 1)]],
        (Family::E, 8) => vec![
            vec![(0, 1), (10, 1), (20, 1)],
            vec![(0, 1), (6, 1), (12, 1), (18, 1), (24, 1)],
        ],
        (Family::G, _) => vec![vec![(0, 1), (2, 1), (4, 1)]],
        _ => {
            return Err(Error::Unsupported {
                dtype: t.to_string(),
                what: "relation rank is defined for E6, E7, E8, F4 and G2",
            })
        }
    };
    let mut rows = Vec::new();
    for shape in &offsets {
        for j in 0..h as i64 {
            let mut row = vec![0i64; h];
            for &(off, coef) in shape {
                row[(j + off).rem_euclid(h as i64) as usize] += coef;
            }
            rows.push(row);
        }
    }
    if t.symmetric_gon() {
        rows = rows
            .into_iter()
            .map(|row| (0..h / 2).map(|k| row[k] - row[k + h / 2]).collect())
            .collect();
    }
    Ok(rows)
}

/// Largest vertex/puncture distance between two polygons of the same type
/// after translating both centroids to the origin.
pub fn polygon_distance(a: &HGon, b: &HGon) -> f64 {
    let a = a.canonicalized();
    let b = b.canonicalized();
    let mut d = 0.0f64;
    for (x, y) in a.vertices.iter().zip(&b.vertices) {
        d = d.max((x - y).norm());
    }
    for (x, y) in a.punctures.iter().zip(&b.punctures) {
        d = d.max((x - y).norm());
    }
    d
}

/// SplitMix64: tiny, deterministic and portable.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in the closed unit disk, by rejection.
    pub fn unit_disk(&mut self) -> Complex64 {
        loop {
            let x = 2.0 * self.next_f64() - 1.0;
            let y = 2.0 * self.next_f64() - 1.0;
            if x * x + y * y <= 1.0 {
                return Complex64::new(x, y);
            }
        }
    }
}
