//! The two directions of the polygon/charge correspondence: read a charge
//! off a polygon, rebuild the far-end polygon from partial sums, and check
//! all the orbit polygons close.

use stgon::charge::all_orbit_polygons;
use stgon::{DynkinType, Model};

fn main() {
    let model = Model::new(DynkinType::parse("E6").unwrap());
    let g = model.sample(0.08, 2024).unwrap();
    let z = model.charge_from_hgon(&g).unwrap();

    println!("charge on the projective basis:");
    for (i, v) in z.projective_values().iter().enumerate() {
        println!("   Z(P_{}) = {:+.6} {:+.6}i", i + 1, v.re, v.im);
    }

    println!("mesh residual of the realization: {:.3e}", model.verify_mesh(&z));
    println!("round-trip distance: {:.3e}", model.roundtrip_distance(&g).unwrap());

    // every tau-orbit yields a closed 12-gon; at a stable charge they are
    // all positively convex
    let polys = all_orbit_polygons(&z, model.quiver());
    for (i, p) in polys.iter().enumerate() {
        let closure: num_complex::Complex64 = (0..p.len())
            .map(|k| p[(k + 1) % p.len()] - p[k])
            .sum();
        let convex = stgon::geom::positively_convex(p, 1e-9).ok;
        println!(
            "orbit {}: closure {:.2e}, positively convex: {convex}",
            i + 1,
            closure.norm()
        );
    }

    // the far-end choice matters: E6 also admits the mid-end reading,
    // which is the central mirror of the far-end polygon
    let far = model.farend_polygon(&z, Some(6)).unwrap();
    let mid = model.farend_polygon(&z, Some(1)).unwrap();
    let mirror: f64 = (0..12)
        .map(|j| (mid.edge(j) + far.edge(j + 6)).norm())
        .fold(0.0, f64::max);
    println!("mid-end gon vs mirrored far-end gon: {mirror:.3e}");
}
