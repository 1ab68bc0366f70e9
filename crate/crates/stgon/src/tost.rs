//! Total stability: phase assignment from a polygon charge, totality via
//! arrow monotonicity in the AR quiver, the global dimension function, the
//! Gepner point and its Coxeter-plane cross-check.
//!
//! Phases live on the fundamental domain of the root category (length-2
//! windows); an arrow whose target power wraps compares against the target
//! phase plus 2. A phase assignment is total when every arrow gap lies
//! strictly inside (0, 1); for charges coming from stable polygons this
//! reproduces the slicing of the associated total stability condition.

use num_complex::Complex64;

use crate::arquiver::{ArQuiver, IndLabel};
use crate::charge::{self, CentralCharge};
use crate::geom::{arg_over_pi, rep_mod2_in};
use crate::hgon::HGon;
use crate::Error;

pub const PHASE_MARGIN: f64 = 1e-9;

/// A real phase for every label, aligned with the charge:
/// Z(x) = |Z(x)| e^{i pi phi(x)} up to even shifts.
#[derive(Debug, Clone)]
pub struct PhaseAssignment {
    charge: CentralCharge,
    values: Vec<Complex64>,
    phases: Vec<f64>,
}

impl PhaseAssignment {
    pub fn charge(&self) -> &CentralCharge {
        &self.charge
    }

    pub fn phase(&self, q: &ArQuiver, x: IndLabel) -> f64 {
        self.phases[q.idx(x)]
    }

    pub fn value(&self, q: &ArQuiver, x: IndLabel) -> Complex64 {
        self.values[q.idx(x)]
    }
}

/// Builds the phase assignment of a valid polygon: charge first, then
/// phase windows.
pub fn build_slicing(g: &HGon, q: &ArQuiver) -> Result<PhaseAssignment, Error> {
    let z = charge::charge_from_hgon(g, q)?;
    slicing_from_charge(z, q)
}

/// Phase windows, anchored at the far-end projective:
/// 1. the far-end orbit unwraps into one window of length 2 starting at
///    the projective's phase;
/// 2. every other label unwraps along the diagram path from the far end
///    within its power slice, each step into the open unit window that an
///    AR arrow with increasing phases allows.
pub fn slicing_from_charge(z: CentralCharge, q: &ArQuiver) -> Result<PhaseAssignment, Error> {
    let n = q.n();
    let h = q.h();
    let values: Vec<Complex64> = q.labels().map(|x| z.eval_label(q, x)).collect();
    let top = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if let Some(x) = q.labels().find(|&x| values[q.idx(x)].norm() <= 1e-12 * top) {
        return Err(Error::Degenerate(format!(
            "central charge vanishes on {x}"
        )));
    }
    let far = q.orientation().far_end();
    let arg = |idx: usize| arg_over_pi(values[idx]);

    let mut phases = vec![f64::NAN; n * h];
    let far0 = q.idx(q.label(far, 0));
    let anchor = rep_mod2_in(arg(far0), 0.0);
    for j in 0..h {
        let idx = q.idx(q.label(far, j as i64));
        phases[idx] = rep_mod2_in(arg(idx), anchor);
    }

    // fixed traversal order: vertices sorted by diagram distance from far
    let parents = q.orientation().parents_toward(far);
    let mut order: Vec<usize> = Vec::with_capacity(n - 1);
    let mut placed = vec![false; n + 1];
    placed[far] = true;
    while order.len() < n - 1 {
        for v in 1..=n {
            if !placed[v] && parents[v - 1].map(|p| placed[p]) == Some(true) {
                placed[v] = true;
                order.push(v);
            }
        }
    }
    // is there a quiver arrow v -> p? then the AR arrow points p -> v at
    // equal power and the phase of v sits above p; otherwise below.
    let arrow_from_v = |v: usize, p: usize| q.orientation().arrows().contains(&(v, p));
    for j in 0..h {
        for &v in &order {
            let p = parents[v - 1].expect("non-root vertex has a parent");
            let idx = q.idx(q.label(v, j as i64));
            let pidx = q.idx(q.label(p, j as i64));
            let lo = if arrow_from_v(v, p) {
                phases[pidx]
            } else {
                phases[pidx] - 2.0
            };
            phases[idx] = rep_mod2_in(arg(idx), lo);
        }
    }
    Ok(PhaseAssignment {
        charge: z,
        values,
        phases,
    })
}

#[derive(Debug, Clone)]
pub struct ArrowViolation {
    pub from: IndLabel,
    pub to: IndLabel,
    pub from_phase: f64,
    pub to_phase: f64,
    /// Lifted phase gap along the arrow (total iff in (0, 1)).
    pub gap: f64,
}

#[derive(Debug, Clone)]
pub struct TotalityReport {
    pub violations: Vec<ArrowViolation>,
    pub is_total: bool,
    /// Smallest distance of any arrow gap from the boundary of (0, 1).
    pub min_gap_margin: f64,
    pub marginal: bool,
    pub gldim: f64,
}

/// Examines every AR arrow once: the lifted target phase must exceed the
/// source phase by a gap in (0, 1), with margin [`PHASE_MARGIN`].
pub fn check_total(p: &PhaseAssignment, q: &ArQuiver) -> TotalityReport {
    let mut violations = Vec::new();
    let mut min_margin = f64::INFINITY;
    for a in q.arrows() {
        let lifted_to = p.phases[q.idx(a.to)] + if a.wrap { 2.0 } else { 0.0 };
        let gap = lifted_to - p.phases[q.idx(a.from)];
        let margin = gap.min(1.0 - gap);
        min_margin = min_margin.min(margin);
        if margin <= PHASE_MARGIN {
            violations.push(ArrowViolation {
                from: a.from,
                to: a.to,
                from_phase: p.phases[q.idx(a.from)],
                to_phase: lifted_to,
                gap,
            });
        }
    }
    TotalityReport {
        is_total: violations.is_empty(),
        marginal: min_margin.abs() <= 10.0 * PHASE_MARGIN,
        violations,
        min_gap_margin: min_margin,
        gldim: gldim(p, q).value,
    }
}

#[derive(Debug, Clone)]
pub struct GldimReport {
    /// max over labels E of phi(tau(E[1])) - phi(E), reduced mod 2.
    pub value: f64,
    /// max interior angle over the orbit polygons, divided by pi.
    pub by_angles: f64,
}

/// The global dimension of the phase assignment, by the arrow formula and
/// by orbit-polygon interior angles. The two routes agree up to rounding;
/// the value is the honest global dimension only when the assignment is
/// total.
pub fn gldim(p: &PhaseAssignment, q: &ArQuiver) -> GldimReport {
    let mut by_arrows = 0.0f64;
    for x in q.labels() {
        let y = q.shift(q.tau(x));
        let delta = rep_mod2_in(p.phases[q.idx(y)] - p.phases[q.idx(x)], 0.0);
        by_arrows = by_arrows.max(delta);
    }
    let mut by_angles = 0.0f64;
    for i in 1..=q.n() {
        for j in 0..q.h() as i64 {
            let prev = p.values[q.idx(q.label(i, j - 1))];
            let next = p.values[q.idx(q.label(i, j))];
            let interior = rep_mod2_in(1.0 - arg_over_pi(next / prev), 0.0);
            by_angles = by_angles.max(interior);
        }
    }
    GldimReport {
        value: by_arrows,
        by_angles,
    }
}

/// The Gepner point of a type: the regular polygon, its charge and phases.
/// The charge satisfies Z(tau_bar M) = e^{2 pi i / h} Z(M) and the global
/// dimension is 1 - 2/h.
pub fn gepner(
    t: crate::dynkin::DynkinType,
    q: &ArQuiver,
) -> Result<(HGon, CentralCharge, PhaseAssignment), Error> {
    let g = HGon::regular(t);
    let z = charge::charge_from_hgon(&g, q)?;
    let p = slicing_from_charge(z.clone(), q)?;
    Ok((g, z, p))
}

/// Distance between g and the far-end polygon of its own charge, after
/// translation alignment.
pub fn roundtrip_distance(g: &HGon, q: &ArQuiver) -> Result<f64, Error> {
    let z = charge::charge_from_hgon(g, q)?;
    let back = charge::farend_polygon(&z, q, None)?;
    Ok(crate::hgon::polygon_distance(g, &back))
}

/// Multiset distance between the Gepner charge values and the Coxeter-plane
/// projection of the root system, after one global rotation/scale fixed by
/// matching an extreme point. Both multisets consist of n circles of h
/// evenly spaced points; they agree up to gauge.
pub fn gepner_coxeter_distance(q: &ArQuiver) -> Result<f64, Error> {
    gepner_coxeter_alignment(q).map(|(d, _)| d)
}

/// Like [`gepner_coxeter_distance`], also returning the complex gauge that
/// carries the projections onto the charge values.
pub fn gepner_coxeter_alignment(q: &ArQuiver) -> Result<(f64, Complex64), Error> {
    let t = q.orientation().dtype();
    let (_, z, _) = gepner(t, q)?;
    let charges: Vec<Complex64> = q.labels().map(|x| z.eval_label(q, x)).collect();
    let cox = crate::rootsys::CoxeterAction::build(q.orientation());
    let roots = crate::rootsys::build_root_system(t);
    let projections: Vec<Complex64> = roots.roots().iter().map(|r| cox.project(r)).collect();

    let a_max = charges
        .iter()
        .copied()
        .max_by(|x, y| x.norm().total_cmp(&y.norm()))
        .expect("nonempty");
    let b_top = projections
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let mut best = (f64::INFINITY, Complex64::new(1.0, 0.0));
    for b in projections
        .iter()
        .filter(|b| b.norm() >= b_top * (1.0 - 1e-6))
    {
        let gauge = a_max / b;
        let scaled: Vec<Complex64> = projections.iter().map(|p| p * gauge).collect();
        let d = greedy_match_distance(&charges, &scaled);
        if d < best.0 {
            best = (d, gauge);
        }
        if best.0 < 1e-12 {
            break;
        }
    }
    Ok(best)
}

/// Max distance of a greedy nearest-point matching between two equal-size
/// multisets. Exact here because matched points coincide to rounding while
/// distinct points stay far apart.
fn greedy_match_distance(xs: &[Complex64], ys: &[Complex64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let mut used = vec![false; ys.len()];
    let mut worst = 0.0f64;
    for x in xs {
        let mut best = f64::INFINITY;
        let mut best_idx = usize::MAX;
        for (k, y) in ys.iter().enumerate() {
            if !used[k] {
                let d = (x - y).norm();
                if d < best {
                    best = d;
                    best_idx = k;
                }
            }
        }
        used[best_idx] = true;
        worst = worst.max(best);
    }
    worst
}
