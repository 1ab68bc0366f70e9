//! Geometric models of Dynkin root categories.
//!
//! Every Dynkin type has a model polygon: an h-gon (h the Coxeter number)
//! cut out by linear edge relations, carrying punctures (types B, D, G2) or
//! a pair of ice/fire cores (E6, E7, E8, F4). A polygon is *stable* when it
//! is positively convex and its punctures/cores sit inside the prescribed
//! diagonal-gon. Stable polygons up to translation classify the total
//! stability conditions on the bounded derived category of the type: the
//! polygon's edges are the central charges of the far-end orbit, and the
//! phase windows it induces make every indecomposable stable.
//!
//! The crate provides, per type:
//! - [`dynkin`]: type tags, Coxeter numbers, fixed orientations, folding;
//! - [`rootsys`]: reflection closure, Coxeter element and plane projection;
//! - [`arquiver`]: the AR quiver of the root category with its mesh
//!   relations and Gabriel dimension-vector table;
//! - [`hgon`]: polygons, validity, stability, free coordinates, sampling;
//! - [`charge`]: polygon <-> central charge in both directions;
//! - [`tost`]: slicing, totality, global dimension, the Gepner point;
//! - [`render`]: deterministic SVG figures;
//! - [`io`]: JSON polygon and charge files.
//!
//! Most workflows go through [`Model`], which bundles the fixed orientation
//! and AR quiver of a type. See the `examples/` directory for one runnable
//! program per capability, and the `stgon` binary for the command line.

pub mod arquiver;
pub mod charge;
pub mod dynkin;
pub mod geom;
pub mod hgon;
pub mod imat;
pub mod io;
pub mod render;
pub mod rootsys;
pub mod tost;

pub use arquiver::{ArQuiver, IndLabel};
pub use charge::CentralCharge;
pub use dynkin::{DynkinType, Family, FoldingData, Orientation};
pub use hgon::HGon;
pub use tost::{PhaseAssignment, TotalityReport};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown Dynkin type `{0}`")]
    BadTypeTag(String),
    #[error("inadmissible Dynkin type {family}{rank}")]
    BadRank { family: char, rank: usize },
    #[error("{dtype} needs {expected} vertices, got {got}")]
    WrongVertexCount {
        dtype: String,
        expected: usize,
        got: usize,
    },
    #[error("wrong number of punctures for {dtype}: {got}")]
    WrongPunctureCount { dtype: String, got: usize },
    #[error("not a valid polygon of its type (worst residual {residual:.3e})")]
    InvalidHGon { residual: f64 },
    #[error("degenerate data: {0}")]
    Degenerate(String),
    #[error("{dtype}: {what}")]
    Unsupported { dtype: String, what: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Everything fixed by a type choice: the (source) orientation and its AR
/// quiver. Folded types carry their own tag but compute on the source.
pub struct Model {
    dtype: DynkinType,
    quiver: ArQuiver,
}

impl Model {
    pub fn new(dtype: DynkinType) -> Model {
        let orientation = Orientation::standard(dtype);
        Model {
            dtype,
            quiver: ArQuiver::build(&orientation),
        }
    }

    pub fn dtype(&self) -> DynkinType {
        self.dtype
    }

    pub fn source(&self) -> DynkinType {
        self.dtype.source()
    }

    pub fn quiver(&self) -> &ArQuiver {
        &self.quiver
    }

    pub fn orientation(&self) -> &Orientation {
        self.quiver.orientation()
    }

    pub fn charge_from_hgon(&self, g: &HGon) -> Result<CentralCharge, Error> {
        charge::charge_from_hgon(g, &self.quiver)
    }

    pub fn farend_polygon(
        &self,
        z: &CentralCharge,
        far_end: Option<usize>,
    ) -> Result<HGon, Error> {
        charge::farend_polygon(z, &self.quiver, far_end)
    }

    pub fn verify_mesh(&self, z: &CentralCharge) -> f64 {
        charge::verify_mesh(z, &self.quiver)
    }

    pub fn build_slicing(&self, g: &HGon) -> Result<PhaseAssignment, Error> {
        tost::build_slicing(g, &self.quiver)
    }

    pub fn check_total(&self, p: &PhaseAssignment) -> TotalityReport {
        tost::check_total(p, &self.quiver)
    }

    pub fn gldim(&self, p: &PhaseAssignment) -> tost::GldimReport {
        tost::gldim(p, &self.quiver)
    }

    pub fn gepner(&self) -> Result<(HGon, CentralCharge, PhaseAssignment), Error> {
        tost::gepner(self.dtype, &self.quiver)
    }

    pub fn gepner_coxeter_distance(&self) -> Result<f64, Error> {
        tost::gepner_coxeter_distance(&self.quiver)
    }

    pub fn roundtrip_distance(&self, g: &HGon) -> Result<f64, Error> {
        tost::roundtrip_distance(g, &self.quiver)
    }

    pub fn sample(&self, magnitude: f64, seed: u64) -> Result<HGon, Error> {
        HGon::sample_near_regular(self.dtype, magnitude, seed)
    }

    /// Sampling experiment over `count` polygons: stability verdicts, the
    /// stability-vs-totality cross check (disagreements must be zero), and
    /// a histogram of the global dimension over the stable samples.
    pub fn sample_stats(
        &self,
        count: usize,
        magnitude: f64,
        seed: u64,
    ) -> Result<SampleStats, Error> {
        let h = self.dtype.coxeter_number() as f64;
        let lo = 1.0 - 2.0 / h;
        let mut stats = SampleStats {
            count,
            stable: 0,
            disagreements: 0,
            gldim_bins: vec![0; 10],
            gldim_min: f64::INFINITY,
            gldim_max: f64::NEG_INFINITY,
        };
        for k in 0..count {
            let g = self.sample(magnitude, seed.wrapping_add(k as u64))?;
            let stable = g.stability()?.is_stable;
            let rep = self.check_total(&self.build_slicing(&g)?);
            if stable != rep.is_total {
                stats.disagreements += 1;
            }
            if stable {
                stats.stable += 1;
                let v = rep.gldim;
                stats.gldim_min = stats.gldim_min.min(v);
                stats.gldim_max = stats.gldim_max.max(v);
                let width = (1.0 - lo) / 10.0;
                let bin = (((v - lo) / width).floor() as isize).clamp(0, 9) as usize;
                stats.gldim_bins[bin] += 1;
            }
        }
        Ok(stats)
    }
}

/// Outcome of [`Model::sample_stats`].
#[derive(Debug, Clone)]
pub struct SampleStats {
    pub count: usize,
    pub stable: usize,
    pub disagreements: usize,
    /// Stable-sample global dimensions binned over [1 - 2/h, 1).
    pub gldim_bins: Vec<usize>,
    pub gldim_min: f64,
    pub gldim_max: f64,
}
