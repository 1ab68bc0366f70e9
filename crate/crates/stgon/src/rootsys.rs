//! Root systems and Coxeter data: reflection closure of the simple roots,
//! the Coxeter element, the Coxeter transformation of a quiver orientation,
//! and the projection onto the Coxeter plane.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::dynkin::{DynkinType, Orientation};
use crate::imat::{self, IMat};

/// The full root system of a simply-laced type, with roots stored as integer
/// vectors in the simple-root basis.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dtype: DynkinType,
    cartan: IMat,
    roots: Vec<Vec<i64>>,
}

/// The symmetric Cartan matrix 2I - adjacency of the diagram (simply-laced).
pub fn cartan_matrix(t: DynkinType) -> IMat {
    let t = t.source();
    let o = Orientation::standard(t);
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    for &(s, v) in o.arrows() {
        a[s - 1][v - 1] = -1;
        a[v - 1][s - 1] = -1;
    }
    a
}

/// Saturates the simple roots under all simple reflections. The result has
/// exactly rank * coxeter_number elements for the simply-laced types.
pub fn build_root_system(t: DynkinType) -> RootSystem {
    let t = t.source();
    let n = t.rank();
    let cartan = cartan_matrix(t);
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        set.insert(e.clone());
        e[i] = -1;
        set.insert(e);
    }
    loop {
        let mut fresh: Vec<Vec<i64>> = Vec::new();
        for alpha in &set {
            for i in 0..n {
                let r = reflect(&cartan, i, alpha);
                if !set.contains(&r) {
                    fresh.push(r);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        set.extend(fresh);
    }
    RootSystem {
        dtype: t,
        cartan,
        roots: set.into_iter().collect(),
    }
}

fn reflect(cartan: &IMat, i: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = cartan[i].iter().zip(v).map(|(a, x)| a * x).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

impl RootSystem {
    pub fn dtype(&self) -> DynkinType {
        self.dtype
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.roots.binary_search_by(|r| r.as_slice().cmp(v)).is_ok()
    }

    pub fn simple_reflection(&self, i: usize, v: &[i64]) -> Vec<i64> {
        reflect(&self.cartan, i, v)
    }

    /// Squared length in the Cartan form (2 for every root here).
    pub fn length_sq(&self, v: &[i64]) -> i64 {
        let n = v.len();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += v[i] * self.cartan[i][j] * v[j];
            }
        }
        s
    }
}

/// The Coxeter transformation of an oriented quiver: the class action of the
/// Auslander-Reiten translation, i.e. the matrix with
/// `phi * dim P_i = -dim I_i` on dimension vectors. Equals `-C * C^{-T}`
/// for the path-count matrix `C` with `C[i][j] = #paths i -> j`.
pub fn coxeter_transformation(o: &Orientation) -> IMat {
    let c = o.path_matrix();
    let c_inv_t = imat::transpose(&imat::inverse_unimodular(&c));
    imat::neg(&imat::mat_mul(&c, &c_inv_t))
}

/// Coxeter element (fixed reflection order), Coxeter transformation of the
/// orientation, and the complex functional projecting onto the Coxeter
/// plane.
#[derive(Debug, Clone)]
pub struct CoxeterAction {
    dtype: DynkinType,
    h: usize,
    w: IMat,
    phi: IMat,
    proj: Vec<Complex64>,
}

impl CoxeterAction {
    /// Builds everything from the orientation. The Coxeter element is the
    /// product of simple reflections in ascending vertex order; the plane
    /// functional is the unit eigenvector of w^T for e^{2 pi i / h},
    /// gauge-fixed so the far-end coordinate is real positive.
    pub fn build(o: &Orientation) -> CoxeterAction {
        let t = o.dtype();
        let n = t.rank();
        let h = t.coxeter_number();
        let cartan = cartan_matrix(t);
        let mut w = imat::identity(n);
        for i in 0..n {
            // matrix of s_i: e_j -> e_j - cartan[i][j] e_i
            let mut s = imat::identity(n);
            for j in 0..n {
                s[i][j] -= cartan[i][j];
            }
            w = imat::mat_mul(&w, &s);
        }
        let phi = coxeter_transformation(o);
        let lambda = Complex64::from_polar(1.0, std::f64::consts::TAU / h as f64);
        let wt = imat::transpose(&w);
        let mut m: Vec<Vec<Complex64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Complex64::new(wt[i][j] as f64, 0.0) - if i == j { lambda } else { Complex64::new(0.0, 0.0) })
                    .collect()
            })
            .collect();
        let mut proj = null_vector(&mut m);
        // gauge: far-end coordinate real positive, unit norm
        let f = o.far_end() - 1;
        let anchor = if proj[f].norm() > 1e-9 {
            proj[f]
        } else {
            *proj
                .iter()
                .max_by(|a, b| a.norm().total_cmp(&b.norm()))
                .expect("nonzero eigenvector")
        };
        let phase = anchor / anchor.norm();
        let norm: f64 = proj.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut proj {
            *z = *z / phase / norm;
        }
        CoxeterAction {
            dtype: t,
            h,
            w,
            phi,
            proj,
        }
    }

    pub fn dtype(&self) -> DynkinType {
        self.dtype
    }

    pub fn coxeter_element(&self) -> &IMat {
        &self.w
    }

    pub fn coxeter_transformation(&self) -> &IMat {
        &self.phi
    }

    pub fn apply_w(&self, v: &[i64]) -> Vec<i64> {
        imat::mat_vec(&self.w, v)
    }

    /// Projection of a lattice vector onto the Coxeter plane, as a complex
    /// number. Satisfies `project(w v) = e^{2 pi i / h} project(v)`.
    pub fn project(&self, v: &[i64]) -> Complex64 {
        self.proj
            .iter()
            .zip(v)
            .map(|(u, &x)| u * x as f64)
            .sum()
    }

    pub fn h(&self) -> usize {
        self.h
    }
}

/// Null vector of a (numerically rank n-1) complex matrix via Gaussian
/// elimination with partial pivoting.
fn null_vector(m: &mut [Vec<Complex64>]) -> Vec<Complex64> {
    let n = m.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n)
            .filter(|&r| m[r][col].norm() > 1e-10)
            .max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))
        else {
            continue;
        };
        m.swap(row, p);
        for r in 0..n {
            if r != row {
                let factor = m[r][col] / m[row][col];
                for c in col..n {
                    let sub = factor * m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let free = pivot_of_col
        .iter()
        .position(Option::is_none)
        .expect("matrix has a null vector");
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    x[free] = Complex64::new(1.0, 0.0);
    for col in 0..n {
        if let Some(r) = pivot_of_col[col] {
            x[col] = -m[r][free] / m[r][col];
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imat::{char_poly, det, identity, mat_pow};

    fn t(tag: &str) -> DynkinType {
        DynkinType::parse(tag).unwrap()
    }

    #[test]
    fn small_closures() {
        let a2 = build_root_system(t("A2"));
        let mut expect: Vec<Vec<i64>> = vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![-1, 0],
            vec![0, -1],
            vec![-1, -1],
        ];
        expect.sort();
        assert_eq!(a2.roots(), expect.as_slice());
    }

    #[test]
    fn closure_cardinalities() {
        for tag in ["A1", "A4", "D4", "D5", "E6", "E7", "E8"] {
            let ty = t(tag);
            let rs = build_root_system(ty);
            assert_eq!(rs.len(), ty.rank() * ty.coxeter_number(), "{tag}");
            // closed under negation and reflection; rerunning adds nothing
            for r in rs.roots() {
                let neg: Vec<i64> = r.iter().map(|x| -x).collect();
                assert!(rs.contains(&neg));
                for i in 0..ty.rank() {
                    assert!(rs.contains(&rs.simple_reflection(i, r)));
                }
            }
        }
    }

    #[test]
    fn coxeter_element_order_and_plane() {
        for tag in ["A1", "A3", "D4", "D5", "E6", "E7"] {
            let ty = t(tag);
            let o = Orientation::standard(ty);
            let cox = CoxeterAction::build(&o);
            let h = ty.coxeter_number();
            assert_eq!(mat_pow(cox.coxeter_element(), h), identity(ty.rank()), "{tag}");
            // the plane functional rotates by 2 pi / h under w
            let rs = build_root_system(ty);
            let lambda = Complex64::from_polar(1.0, std::f64::consts::TAU / h as f64);
            for r in rs.roots().iter().take(12) {
                let lhs = cox.project(&cox.apply_w(r));
                let rhs = lambda * cox.project(r);
                assert!((lhs - rhs).norm() < 1e-9, "{tag}");
            }
        }
    }

    #[test]
    fn coxeter_transformation_facts() {
        // phi * dim P_i = -dim I_i on A2 with arrows 2 -> 1
        let o = Orientation::standard(t("A2"));
        let phi = coxeter_transformation(&o);
        assert_eq!(imat::mat_vec(&phi, &[1, 0]), vec![-1, -1]);
        assert_eq!(imat::mat_vec(&phi, &[1, 1]), vec![0, -1]);

        for tag in ["A1", "A5", "D4", "D6", "E6", "E7", "E8"] {
            let ty = t(tag);
            let o = Orientation::standard(ty);
            let phi = coxeter_transformation(&o);
            let h = ty.coxeter_number();
            assert_eq!(mat_pow(&phi, h), identity(ty.rank()), "{tag}: phi^h = 1");
            let shifted = crate::imat::sub(&phi, &identity(ty.rank()));
            assert_ne!(det(&shifted), 0, "{tag}: 1 is not an eigenvalue");
            // phi and w are both Coxeter transformations: same char poly
            let cox = CoxeterAction::build(&o);
            assert_eq!(char_poly(&phi), char_poly(cox.coxeter_element()), "{tag}");
        }
    }

    #[test]
    fn projection_of_a2_roots_is_hexagonal() {
        let o = Orientation::standard(t("A2"));
        let cox = CoxeterAction::build(&o);
        let rs = build_root_system(t("A2"));
        let mut args: Vec<f64> = rs.roots().iter().map(|r| cox.project(r).arg()).collect();
        args.sort_by(f64::total_cmp);
        for pair in args.windows(2) {
            let gap = pair[1] - pair[0];
            assert!((gap - std::f64::consts::TAU / 6.0).abs() < 1e-9);
        }
        // equal moduli along each w-orbit (single length class for A2)
        let norms: Vec<f64> = rs.roots().iter().map(|r| cox.project(r).norm()).collect();
        for n in &norms {
            assert!((n - norms[0]).abs() < 1e-9);
        }
        // zero maps to zero
        assert_eq!(cox.project(&[0, 0]).norm(), 0.0);
    }
}
