//! Central charges: the additive map from the class lattice to the plane.
//!
//! One direction reads a charge off a model polygon (edges, diagonals,
//! puncture segments and core edges realize the indecomposable classes);
//! the other rebuilds the far-end polygon from a charge by partial sums
//! along the far-end orbit. The mesh residual measures how far a charge is
//! from being realized by a polygon of the type.

use num_complex::Complex64;

use crate::arquiver::{ArQuiver, IndLabel};
use crate::dynkin::{DynkinType, Family, Orientation};
use crate::geom;
use crate::hgon::HGon;
use crate::imat;
use crate::Error;

/// A central charge, stored by its values on the projectives of the fixed
/// source orientation and evaluated on arbitrary classes by linearity.
#[derive(Debug, Clone)]
pub struct CentralCharge {
    dtype: DynkinType,
    source: DynkinType,
    proj_values: Vec<Complex64>,
    simple_values: Vec<Complex64>,
}

impl CentralCharge {
    /// Builds from the values on the projectives P_1..P_n of the source
    /// orientation. `dtype` may be a folded tag whose source matches the
    /// quiver.
    pub fn from_projective_values(
        q: &ArQuiver,
        dtype: DynkinType,
        values: Vec<Complex64>,
    ) -> CentralCharge {
        let source = dtype.source();
        assert_eq!(source, q.orientation().dtype(), "charge/quiver type mismatch");
        assert_eq!(values.len(), source.rank());
        // Z(S) = C^{-1} Z(P) for the path-count matrix C
        let c_inv = imat::inverse_unimodular(&q.orientation().path_matrix());
        let simple_values = c_inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&values)
                    .map(|(&a, z)| z * a as f64)
                    .sum::<Complex64>()
            })
            .collect();
        CentralCharge {
            dtype,
            source,
            proj_values: values,
            simple_values,
        }
    }

    pub fn dtype(&self) -> DynkinType {
        self.dtype
    }

    pub fn source(&self) -> DynkinType {
        self.source
    }

    /// Z on the projective basis.
    pub fn projective_values(&self) -> &[Complex64] {
        &self.proj_values
    }

    /// Z of an integer class in simple-root coordinates.
    pub fn eval_class(&self, v: &[i64]) -> Complex64 {
        v.iter()
            .zip(&self.simple_values)
            .map(|(&a, z)| z * a as f64)
            .sum()
    }

    pub fn eval_label(&self, q: &ArQuiver, x: IndLabel) -> Complex64 {
        self.eval_class(q.dim_vector(x))
    }

    pub fn scaled(&self, factor: Complex64) -> CentralCharge {
        CentralCharge {
            dtype: self.dtype,
            source: self.source,
            proj_values: self.proj_values.iter().map(|z| z * factor).collect(),
            simple_values: self.simple_values.iter().map(|z| z * factor).collect(),
        }
    }
}

/// The planar realization behind a charge: far-end polygon vertices,
/// punctures (D source) and core vertices (E source). Every label of the
/// AR quiver is realized as a concrete plane vector.
#[derive(Debug, Clone)]
pub struct GeomModel {
    source: DynkinType,
    v: Vec<Complex64>,
    b: Vec<Complex64>,
    w: Vec<Complex64>,
}

impl GeomModel {
    /// Reads the model off a polygon (given in source form, punctures
    /// included for D).
    pub fn from_polygon(g: &HGon) -> Result<GeomModel, Error> {
        let src = g.dtype().source();
        let g = g.unfold();
        let w = match src.family() {
            Family::E => g.build_cores()?.w,
            _ => Vec::new(),
        };
        Ok(GeomModel {
            source: src,
            v: g.vertices().to_vec(),
            b: g.punctures().to_vec(),
            w,
        })
    }

    /// Rebuilds the model from a charge: vertices as partial sums over the
    /// far-end orbit (centroid at the origin), punctures from the fork
    /// values, cores from the fixed edge walks.
    pub fn from_charge(z: &CentralCharge, q: &ArQuiver, far_end: usize) -> GeomModel {
        let src = z.source();
        let n = src.rank();
        let h = q.h();
        let mut v = Vec::with_capacity(h);
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..h {
            acc += z.eval_label(q, q.label(far_end, j as i64));
            v.push(acc);
        }
        let shift = -geom::centroid(&v);
        for p in &mut v {
            *p += shift;
        }
        // edge k of v is Z(P^{k-1}_far); rotate so index 0 plays V_0
        v.rotate_right(1);
        let b = if src.family() == Family::D {
            // puncture orbit: the smallest boundary vertex besides the
            // chosen far end
            let u = [1, n - 1, n]
                .into_iter()
                .find(|&l| l != far_end)
                .expect("three boundary vertices");
            let a = fork_alignment(q, far_end, u);
            let plus = v[a] + z.eval_label(q, q.label(u, 0));
            let center = geom::centroid(&v);
            vec![plus, 2.0 * center - plus]
        } else {
            Vec::new()
        };
        let w = if src.family() == Family::E {
            let edge = |j: i64| -> Complex64 {
                let h = h as i64;
                v[j.rem_euclid(h) as usize] - v[(j - 1).rem_euclid(h) as usize]
            };
            let off = match n {
                6 => 4,
                7 => 5,
                _ => 6,
            };
            (0..h as i64).map(|j| v[j as usize] + edge(j + off)).collect()
        } else {
            Vec::new()
        };
        GeomModel {
            source: src,
            v,
            b,
            w,
        }
    }

    fn vtx(&self, j: i64) -> Complex64 {
        let h = self.v.len() as i64;
        self.v[j.rem_euclid(h) as usize]
    }

    fn core(&self, j: i64) -> Complex64 {
        let h = self.w.len() as i64;
        self.w[j.rem_euclid(h) as usize]
    }

    /// The plane vector realizing P^j_i:
    /// - A_n: the diagonal V_j V_{j+i};
    /// - D_n: diagonals for i <= n-2, the alternating puncture segments
    ///   V_j B_+/- for the two fork orbits;
    /// - E_n: core edges W_j W_{j+2} (mid end), V_{j-1} W_{j+2} and
    ///   V_{j-1} W_{j+1} (orbits 2 and 3), diagonals V_j V_{j+1+(n-i)}
    ///   otherwise.
    pub fn label_vector(&self, x: IndLabel) -> Complex64 {
        let n = self.source.rank();
        let (i, j) = (x.vertex, x.power as i64);
        match self.source.family() {
            Family::A => self.vtx(j + i as i64) - self.vtx(j),
            Family::D => {
                if i <= n - 2 {
                    self.vtx(j + i as i64) - self.vtx(j)
                } else {
                    // orbit n-1 starts on B_+, orbit n on B_-
                    let parity = if i == n - 1 { j } else { j + 1 };
                    self.b[(parity.rem_euclid(2)) as usize] - self.vtx(j)
                }
            }
            Family::E => match i {
                1 => self.core(j + 2) - self.core(j),
                2 => self.core(j + 2) - self.vtx(j - 1),
                3 => self.core(j + 1) - self.vtx(j - 1),
                _ => self.vtx(j + 1 + (n - i) as i64) - self.vtx(j),
            },
            _ => unreachable!("geometric models live on the simply-laced source"),
        }
    }
}

/// The power offset aligning the puncture segments of orbit `u` with the
/// far-end polygon of orbit `c` in a D-type quiver: the unique `a` with
/// `[P^{j+a}_c] + [P^{j+a+1}_c] + [P^{j+2}_u] - [P^j_u] = 0` for all j,
/// which makes `V'_{j+a} + Z(P^j_u)` independent of the parity class of j.
/// Zero for the standard far end; the D4 alternatives need a shift.
fn fork_alignment(q: &ArQuiver, c: usize, u: usize) -> usize {
    let h = q.h();
    let n = q.n();
    'candidates: for a in 0..h {
        for j in 0..h {
            let mut acc = vec![0i64; n];
            let terms: [(usize, i64, i64); 4] = [
                (c, (j + a) as i64, 1),
                (c, (j + a + 1) as i64, 1),
                (u, j as i64 + 2, 1),
                (u, j as i64, -1),
            ];
            for (vertex, power, sign) in terms {
                for (s, d) in acc.iter_mut().zip(q.dim_vector(q.label(vertex, power))) {
                    *s += sign * d;
                }
            }
            if acc.iter().any(|&x| x != 0) {
                continue 'candidates;
            }
        }
        return a;
    }
    unreachable!("every boundary pair of a D-type quiver aligns");
}

/// Reads the central charge off a valid polygon by the geometric model:
/// the values on the projectives are the power-zero label vectors.
pub fn charge_from_hgon(g: &HGon, q: &ArQuiver) -> Result<CentralCharge, Error> {
    let validity = g.validate();
    if !validity.is_valid {
        return Err(Error::InvalidHGon {
            residual: validity.worst,
        });
    }
    charge_from_hgon_unchecked(g, q)
}

/// Same as [`charge_from_hgon`] but without the validity gate; used to
/// probe the (linear) charge map itself.
pub fn charge_from_hgon_unchecked(g: &HGon, q: &ArQuiver) -> Result<CentralCharge, Error> {
    let model = GeomModel::from_polygon(g)?;
    let n = g.dtype().source().rank();
    let values = (1..=n)
        .map(|i| model.label_vector(IndLabel { vertex: i, power: 0 }))
        .collect();
    Ok(CentralCharge::from_projective_values(q, g.dtype(), values))
}

/// Maximum mesh residual of the geometric realization of a charge: rebuild
/// the far-end polygon, punctures and cores from `z`, realize every label
/// as a plane vector, and evaluate all mesh relations.
///
/// Because the type relations are class identities, every linear charge is
/// geometrically consistent and the residual is rounding noise; the number
/// certifies the reconstruction. The discriminating direction is
/// [`polygon_mesh_residual`], whose input carries independent vertex data.
pub fn verify_mesh(z: &CentralCharge, q: &ArQuiver) -> f64 {
    let model = GeomModel::from_charge(z, q, q.orientation().far_end());
    mesh_residual(&model, q)
}

/// Maximum mesh residual of the per-label plane vectors read off a polygon
/// as drawn (vertices, punctures and core walks). Vanishes within rounding
/// iff the polygon satisfies its type relations, so this is the working
/// homomorphism check for the polygon -> charge direction.
pub fn polygon_mesh_residual(g: &HGon, q: &ArQuiver) -> Result<f64, Error> {
    Ok(mesh_residual(&GeomModel::from_polygon(g)?, q))
}

/// Maximum mesh residual of a geometric model.
pub fn mesh_residual(model: &GeomModel, q: &ArQuiver) -> f64 {
    let mut worst = 0.0f64;
    for mesh in q.mesh_relations() {
        let mut acc = model.label_vector(mesh.start) + model.label_vector(mesh.end);
        for m in &mesh.middles {
            acc -= model.label_vector(*m);
        }
        worst = worst.max(acc.norm());
    }
    worst
}

/// The far-end polygon of a charge: edges are the values along the chosen
/// far-end orbit, anchored with the vertex centroid at the origin; for the
/// D family the punctures are half the difference of the fork values.
/// The output is tagged with the charge's own (possibly folded) type.
pub fn farend_polygon(
    z: &CentralCharge,
    q: &ArQuiver,
    far_end: Option<usize>,
) -> Result<HGon, Error> {
    let fe = far_end.unwrap_or_else(|| q.orientation().far_end());
    if !Orientation::far_end_choices(z.source()).contains(&fe) {
        return Err(Error::Unsupported {
            dtype: z.source().to_string(),
            what: "not an admissible far-end vertex",
        });
    }
    let model = GeomModel::from_charge(z, q, fe);
    let punctures = match z.dtype().family() {
        Family::D => model.b.clone(),
        Family::B | Family::G => vec![model.b.first().copied().unwrap_or_default()],
        _ => Vec::new(),
    };
    HGon::new(z.dtype(), model.v.clone(), punctures, None)
}

/// One closed polygon per tau-orbit: the partial sums of the orbit values,
/// translated so the vertex centroid is at the origin.
pub fn all_orbit_polygons(z: &CentralCharge, q: &ArQuiver) -> Vec<Vec<Complex64>> {
    (1..=q.n())
        .map(|i| {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut pts: Vec<Complex64> = (0..q.h())
                .map(|j| {
                    acc += z.eval_label(q, q.label(i, j as i64));
                    acc
                })
                .collect();
            let shift = -geom::centroid(&pts);
            for p in &mut pts {
                *p += shift;
            }
            pts
        })
        .collect()
}
