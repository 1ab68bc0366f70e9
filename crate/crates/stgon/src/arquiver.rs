//! The Auslander-Reiten quiver of the root category of a Dynkin quiver:
//! labels P^j_i on a fundamental domain (vertex i, power j mod h), arrows,
//! mesh relations, the Gabriel dimension-vector table, and the shift.
//!
//! Conventions pinned here and relied on everywhere else:
//! - `P^j_i` is the j-th inverse-translate of the projective at vertex i,
//!   so `dim P^{j+1}_i = phi^{-1} dim P^j_i` for the Coxeter
//!   transformation phi.
//! - a quiver arrow s -> t contributes AR arrows `P^j_t -> P^j_s` and
//!   `P^j_s -> P^{j+1}_t`; the arrow into the next power wraps past the
//!   fundamental domain when j + 1 = h (a wrap adds one even shift).
//! - the mesh at (i, j) reads `[P^j_i] + [P^{j+1}_i] = sum of middles`
//!   with middles `P^j_s` for arrows s -> i and `P^{j+1}_t` for arrows
//!   i -> t; it holds exactly on dimension vectors.

use std::collections::HashMap;
use std::fmt;

use crate::dynkin::Orientation;
use crate::imat::{self, IMat};

/// Label of an indecomposable in the root category: vertex `1..=n`,
/// power `0..h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndLabel {
    pub vertex: usize,
    pub power: usize,
}

impl fmt::Display for IndLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P^{}_{}", self.power, self.vertex)
    }
}

/// One AR arrow between labels of the fundamental domain. `wrap` marks the
/// arrows whose target power wrapped around, i.e. whose target lives one
/// even shift up in the universal cover.
#[derive(Debug, Clone, Copy)]
pub struct Arrow {
    pub from: IndLabel,
    pub to: IndLabel,
    pub wrap: bool,
}

/// The mesh `[start] + [end] = sum(middles)` with `end = tau_bar(start)`.
#[derive(Debug, Clone)]
pub struct MeshRelation {
    pub start: IndLabel,
    pub end: IndLabel,
    pub middles: Vec<IndLabel>,
}

#[derive(Debug, Clone)]
pub struct ArQuiver {
    orientation: Orientation,
    n: usize,
    h: usize,
    dims: Vec<Vec<i64>>,
    arrows: Vec<Arrow>,
    shift: Vec<usize>,
    phi: IMat,
    phi_inv: IMat,
    by_dim: HashMap<Vec<i64>, usize>,
}

impl ArQuiver {
    pub fn build(o: &Orientation) -> ArQuiver {
        let t = o.dtype();
        let n = t.rank();
        let h = t.coxeter_number();
        let phi = crate::rootsys::coxeter_transformation(o);
        let phi_inv = imat::inverse_unimodular(&phi);
        let paths = o.path_matrix();

        let mut dims = vec![Vec::new(); n * h];
        for i in 1..=n {
            let mut d = paths[i - 1].clone();
            for j in 0..h {
                dims[(i - 1) * h + j] = d.clone();
                d = imat::mat_vec(&phi_inv, &d);
            }
        }
        let mut by_dim = HashMap::with_capacity(n * h);
        for (idx, d) in dims.iter().enumerate() {
            let prev = by_dim.insert(d.clone(), idx);
            assert!(prev.is_none(), "dimension vectors must be distinct");
        }

        let mut arrows = Vec::new();
        for &(s, tgt) in o.arrows() {
            for j in 0..h {
                arrows.push(Arrow {
                    from: IndLabel { vertex: tgt, power: j },
                    to: IndLabel { vertex: s, power: j },
                    wrap: false,
                });
                arrows.push(Arrow {
                    from: IndLabel { vertex: s, power: j },
                    to: IndLabel {
                        vertex: tgt,
                        power: (j + 1) % h,
                    },
                    wrap: j + 1 == h,
                });
            }
        }

        let shift = (0..n * h)
            .map(|idx| {
                let negated: Vec<i64> = dims[idx].iter().map(|x| -x).collect();
                *by_dim
                    .get(&negated)
                    .expect("the class table is closed under negation")
            })
            .collect();

        ArQuiver {
            orientation: o.clone(),
            n,
            h,
            dims,
            arrows,
            shift,
            phi,
            phi_inv,
            by_dim,
        }
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn label(&self, vertex: usize, power: i64) -> IndLabel {
        debug_assert!((1..=self.n).contains(&vertex));
        IndLabel {
            vertex,
            power: power.rem_euclid(self.h as i64) as usize,
        }
    }

    pub fn idx(&self, x: IndLabel) -> usize {
        (x.vertex - 1) * self.h + x.power
    }

    pub fn labels(&self) -> impl Iterator<Item = IndLabel> + '_ {
        (1..=self.n).flat_map(move |v| (0..self.h).map(move |j| IndLabel { vertex: v, power: j }))
    }

    pub fn dim_vector(&self, x: IndLabel) -> &[i64] {
        &self.dims[self.idx(x)]
    }

    /// The label whose dimension vector is `v`, if `v` is a root.
    pub fn label_of_class(&self, v: &[i64]) -> Option<IndLabel> {
        self.by_dim.get(v).map(|&idx| self.label_at(idx))
    }

    fn label_at(&self, idx: usize) -> IndLabel {
        IndLabel {
            vertex: idx / self.h + 1,
            power: idx % self.h,
        }
    }

    pub fn tau_bar(&self, x: IndLabel) -> IndLabel {
        self.label(x.vertex, x.power as i64 + 1)
    }

    pub fn tau(&self, x: IndLabel) -> IndLabel {
        self.label(x.vertex, x.power as i64 - 1)
    }

    /// The shift [1]: the unique label with the negated dimension vector.
    pub fn shift(&self, x: IndLabel) -> IndLabel {
        self.label_at(self.shift[self.idx(x)])
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn phi(&self) -> &IMat {
        &self.phi
    }

    pub fn phi_inv(&self) -> &IMat {
        &self.phi_inv
    }

    /// One mesh per label, in label order.
    pub fn mesh_relations(&self) -> Vec<MeshRelation> {
        let mut out = Vec::with_capacity(self.n * self.h);
        for x in self.labels() {
            let mut middles = Vec::new();
            for &(s, t) in self.orientation.arrows() {
                if t == x.vertex {
                    middles.push(IndLabel {
                        vertex: s,
                        power: x.power,
                    });
                }
                if s == x.vertex {
                    middles.push(self.label(t, x.power as i64 + 1));
                }
            }
            out.push(MeshRelation {
                start: x,
                end: self.tau_bar(x),
                middles,
            });
        }
        out
    }

    /// Exact integer defect of a mesh on dimension vectors (all zero).
    pub fn mesh_defect(&self, mesh: &MeshRelation) -> Vec<i64> {
        let mut acc: Vec<i64> = self.dim_vector(mesh.start).to_vec();
        for (a, b) in acc.iter_mut().zip(self.dim_vector(mesh.end)) {
            *a += b;
        }
        for m in &mesh.middles {
            for (a, b) in acc.iter_mut().zip(self.dim_vector(*m)) {
                *a -= b;
            }
        }
        acc
    }

    /// Sum of the dimension vectors over one tau-orbit (always zero).
    pub fn orbit_class_sum(&self, vertex: usize) -> Vec<i64> {
        let mut acc = vec![0i64; self.n];
        for j in 0..self.h {
            for (a, b) in acc
                .iter_mut()
                .zip(self.dim_vector(IndLabel { vertex, power: j }))
            {
                *a += b;
            }
        }
        acc
    }

    /// Mid-end orbit alias for the exceptional types: C_j = P^{j-1}_1.
    pub fn c_label(&self, j: i64) -> IndLabel {
        self.label(1, j - 1)
    }

    /// Near-end orbit alias: M_j = P^{j-1}_3.
    pub fn m_label(&self, j: i64) -> IndLabel {
        self.label(3, j - 1)
    }

    /// Far-end orbit alias: B_j = P^{j-1}_n.
    pub fn b_label(&self, j: i64) -> IndLabel {
        self.label(self.n, j - 1)
    }

    /// Text adjacency dump: one line per label with its dimension vector
    /// and outgoing arrows.
    pub fn dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for x in self.labels() {
            let dim: Vec<String> = self.dim_vector(x).iter().map(i64::to_string).collect();
            let targets: Vec<String> = self
                .arrows
                .iter()
                .filter(|a| a.from == x)
                .map(|a| format!("{}{}", a.to, if a.wrap { "[+]" } else { "" }))
                .collect();
            writeln!(out, "{} dim ({}) -> {}", x, dim.join(","), targets.join(" ")).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;
    use crate::rootsys::build_root_system;

    fn quiver(tag: &str) -> ArQuiver {
        ArQuiver::build(&Orientation::standard(DynkinType::parse(tag).unwrap()))
    }

    #[test]
    fn a2_by_hand() {
        let q = quiver("A2");
        assert_eq!(q.n() * q.h(), 6);
        assert_eq!(q.dim_vector(q.label(1, 0)), &[1, 0]);
        assert_eq!(q.dim_vector(q.label(1, 1)), &[0, 1]);
        assert_eq!(q.dim_vector(q.label(2, 0)), &[1, 1]);
        // hexagonal pattern: 2 arrows per power step
        assert_eq!(q.arrows().len(), 6);
        let dump = q.dump();
        assert_eq!(dump.lines().count(), 6);
        assert!(dump.starts_with("P^0_1 dim (1,0) -> P^0_2"));
    }

    #[test]
    fn gabriel_bijection() {
        for tag in ["A3", "D4", "D5", "E6", "E7", "E8"] {
            let t = DynkinType::parse(tag).unwrap();
            let q = quiver(tag);
            let rs = build_root_system(t);
            let mut dims: Vec<Vec<i64>> = q.labels().map(|x| q.dim_vector(x).to_vec()).collect();
            dims.sort();
            assert_eq!(dims.as_slice(), rs.roots(), "{tag}");
        }
    }

    #[test]
    fn tau_bar_has_order_h() {
        let q = quiver("E6");
        for x in q.labels() {
            let mut y = x;
            for _ in 0..q.h() {
                y = q.tau_bar(y);
            }
            assert_eq!(x, y);
            assert_eq!(q.tau(q.tau_bar(x)), x);
        }
    }

    #[test]
    fn shift_is_an_involution_negating_classes() {
        for tag in ["A4", "D5", "E6"] {
            let q = quiver(tag);
            for x in q.labels() {
                let y = q.shift(x);
                assert_eq!(q.shift(y), x, "{tag}");
                let neg: Vec<i64> = q.dim_vector(x).iter().map(|v| -v).collect();
                assert_eq!(q.dim_vector(y), neg.as_slice(), "{tag}");
            }
        }
    }

    #[test]
    fn d5_far_end_shift_is_tau_bar_m() {
        // tau_bar^m = [1] on the far-end orbit, m = n - 1
        let q = quiver("D5");
        for j in 0..q.h() {
            let x = q.label(1, j as i64);
            assert_eq!(q.shift(x), q.label(1, j as i64 + 4));
        }
    }

    #[test]
    fn e6_named_orbits() {
        // C_{j+6} = B_j[1] and the far-end orbit is adjacent only to orbit 5
        let q = quiver("E6");
        for j in 1..=12 {
            assert_eq!(q.shift(q.b_label(j)), q.c_label(j + 6));
        }
        for a in q.arrows() {
            if a.from.vertex == 6 {
                assert_eq!(a.to.vertex, 5);
            }
            if a.to.vertex == 6 {
                assert_eq!(a.from.vertex, 5);
            }
        }
    }

    #[test]
    fn meshes_vanish_exactly() {
        for tag in ["A2", "A5", "D4", "D6", "E6", "E7", "E8"] {
            let q = quiver(tag);
            let meshes = q.mesh_relations();
            assert_eq!(meshes.len(), q.n() * q.h(), "{tag}");
            for m in &meshes {
                assert!(q.mesh_defect(m).iter().all(|&x| x == 0), "{tag}: {}", m.start);
            }
        }
    }

    #[test]
    fn mesh_shapes_match_the_models() {
        // A_n far end: [P^j_1] + [P^{j+1}_1] = [P^j_2]
        let q = quiver("A4");
        let meshes = q.mesh_relations();
        let far = &meshes[q.idx(q.label(1, 0))];
        assert_eq!(far.middles, vec![q.label(2, 0)]);
        // D_n fork: [P^j_i] + [P^{j+1}_i] = [P^{j+1}_{n-2}]
        let q = quiver("D5");
        let meshes = q.mesh_relations();
        let fork = &meshes[q.idx(q.label(4, 2))];
        assert_eq!(fork.middles, vec![q.label(3, 3)]);
    }

    #[test]
    fn exceptional_class_triangles() {
        // the standard triangles between the boundary orbits, exact on
        // dimension vectors:
        //   [C_{j+2}] = [B_j] + [B_{j+n-2}]
        //   [M_{j+1}] = [B_j] + [C_{j+3}] = [C_j] + [B_{j+n-3}]
        //   [C_{j+3}] = [C_j] + [L_j],  L_j = M_{j+4} / C_{j+6} / B_{j+10}
        for (tag, n) in [("E6", 6i64), ("E7", 7), ("E8", 8)] {
            let q = quiver(tag);
            let class = |x: IndLabel| q.dim_vector(x).to_vec();
            let add = |a: Vec<i64>, b: &[i64]| -> Vec<i64> {
                a.iter().zip(b).map(|(x, y)| x + y).collect()
            };
            for j in 1..=q.h() as i64 {
                let b = class(q.b_label(j));
                assert_eq!(
                    class(q.c_label(j + 2)),
                    add(b.clone(), &class(q.b_label(j + n - 2))),
                    "{tag}"
                );
                let m = class(q.m_label(j + 1));
                assert_eq!(m, add(b.clone(), &class(q.c_label(j + 3))), "{tag}");
                assert_eq!(
                    m,
                    add(class(q.c_label(j)), &class(q.b_label(j + n - 3))),
                    "{tag}"
                );
                let l = match n {
                    6 => q.m_label(j + 4),
                    7 => q.c_label(j + 6),
                    _ => q.b_label(j + 10),
                };
                assert_eq!(
                    class(q.c_label(j + 3)),
                    add(class(q.c_label(j)), &class(l)),
                    "{tag}"
                );
            }
        }
    }

    #[test]
    fn orbit_sums_vanish() {
        for tag in ["A2", "D4", "E8"] {
            let q = quiver(tag);
            for v in 1..=q.n() {
                assert!(q.orbit_class_sum(v).iter().all(|&x| x == 0), "{tag} orbit {v}");
            }
        }
    }

    #[test]
    fn arrow_count_is_twice_the_edges_per_power() {
        for tag in ["A5", "D6", "E7"] {
            let q = quiver(tag);
            let edges = q.orientation().arrows().len();
            assert_eq!(q.arrows().len(), 2 * edges * q.h(), "{tag}");
        }
    }
}
