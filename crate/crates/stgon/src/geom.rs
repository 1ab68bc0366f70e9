//! Planar geometry helpers: orientation predicates, convexity with a
//! witness, containment in diagonal-gons, and phase unwrapping.
//!
//! All strict predicates use margins normalized by the figure scale so that
//! verdicts are invariant under rotation and positive scaling of the plane.

use num_complex::Complex64;

pub fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

pub fn centroid(pts: &[Complex64]) -> Complex64 {
    pts.iter().sum::<Complex64>() / pts.len() as f64
}

pub fn diameter(pts: &[Complex64]) -> f64 {
    let mut d = 0.0f64;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            d = d.max((pts[i] - pts[j]).norm());
        }
    }
    d
}

/// Signed, scale-free margin of `p` relative to the directed line `a -> b`:
/// positive iff `p` lies strictly on the left. The cross product is
/// normalized by |b - a| and the ambient scale.
pub fn left_margin(a: Complex64, b: Complex64, p: Complex64, scale: f64) -> f64 {
    let d = b - a;
    let len = d.norm();
    if len == 0.0 || scale == 0.0 {
        return f64::NEG_INFINITY;
    }
    cross(d, p - a) / (len * scale)
}

#[derive(Debug, Clone)]
pub struct ConvexityReport {
    pub ok: bool,
    /// Worst (edge index, vertex index) pair when not positively convex.
    pub witness: Option<(usize, usize)>,
    /// Smallest left-margin over all (edge, non-incident vertex) pairs.
    pub min_margin: f64,
}

/// Positive convexity: every vertex lies strictly to the left of every
/// directed edge it is not incident to. Degenerate inputs (< 3 points,
/// zero edges) report not convex.
pub fn positively_convex(pts: &[Complex64], eps: f64) -> ConvexityReport {
    let h = pts.len();
    let scale = diameter(pts);
    if h < 3 || scale == 0.0 {
        // A 2-gon has no non-incident (edge, vertex) pairs; treat as convex.
        return ConvexityReport {
            ok: h == 2 && scale > 0.0,
            witness: None,
            min_margin: if h == 2 { f64::INFINITY } else { f64::NEG_INFINITY },
        };
    }
    let mut min_margin = f64::INFINITY;
    let mut witness = None;
    for j in 0..h {
        let a = pts[(j + h - 1) % h];
        let b = pts[j];
        for (k, &p) in pts.iter().enumerate() {
            if k == j || k == (j + h - 1) % h {
                continue;
            }
            let m = left_margin(a, b, p, scale);
            if m < min_margin {
                min_margin = m;
                witness = Some((j, k));
            }
        }
    }
    let ok = min_margin > eps;
    ConvexityReport {
        ok,
        witness: if ok { None } else { witness },
        min_margin,
    }
}

/// Smallest left-margin of `p` over the length-`s` diagonals V_j V_{j+s}.
/// Positive means strictly inside the level-s diagonal-gon.
pub fn diagonal_gon_margin(pts: &[Complex64], s: usize, p: Complex64) -> f64 {
    let h = pts.len();
    let scale = diameter(pts);
    let mut m = f64::INFINITY;
    for j in 0..h {
        m = m.min(left_margin(pts[j], pts[(j + s) % h], p, scale));
    }
    m
}

/// Argument divided by pi, in (-1, 1].
pub fn arg_over_pi(z: Complex64) -> f64 {
    z.arg() / std::f64::consts::PI
}

/// The representative of `v` modulo 2 lying in `[lo, lo + 2)`.
pub fn rep_mod2_in(v: f64, lo: f64) -> f64 {
    let mut x = v - 2.0 * ((v - lo) / 2.0).floor();
    // floating point can leave x just outside the half-open window
    if x < lo {
        x += 2.0;
    }
    if x >= lo + 2.0 {
        x -= 2.0;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;
    use std::f64::consts::TAU;

    fn regular(h: usize) -> Vec<C> {
        (0..h)
            .map(|j| C::from_polar(1.0, TAU * j as f64 / h as f64))
            .collect()
    }

    #[test]
    fn regular_gon_is_positively_convex() {
        let pts = regular(8);
        assert!(positively_convex(&pts, 1e-9).ok);
        let mut rev = pts.clone();
        rev.reverse();
        assert!(!positively_convex(&rev, 1e-9).ok);
    }

    #[test]
    fn reflected_vertex_breaks_convexity() {
        let mut pts = regular(8);
        // reflect V_0 across the chord V_7 V_1
        let a = pts[7];
        let d = (pts[1] - a) / (pts[1] - a).norm();
        pts[0] = a + ((pts[0] - a) / d).conj() * d;
        let rep = positively_convex(&pts, 1e-9);
        assert!(!rep.ok);
        // the worst pair involves the reflected vertex or an edge at it
        let (edge, vertex) = rep.witness.unwrap();
        assert!(vertex == 0 || edge == 0 || edge == 1, "witness ({edge}, {vertex})");
    }

    #[test]
    fn diagonal_gon_levels() {
        let pts = regular(12);
        let center = C::new(0.0, 0.0);
        for s in 1..=5 {
            assert!(diagonal_gon_margin(&pts, s, center) > 1e-9, "level {s}");
        }
        // a vertex lies outside the level-2 diagonal-gon
        assert!(diagonal_gon_margin(&pts, 2, pts[0]) < -1e-9);
    }

    #[test]
    fn mod2_window() {
        assert!((rep_mod2_in(0.25, 1.0) - 2.25).abs() < 1e-15);
        assert!((rep_mod2_in(3.5, 1.0) - 1.5).abs() < 1e-15);
        let x = rep_mod2_in(-0.75, 0.0);
        assert!((x - 1.25).abs() < 1e-15);
    }
}
