//! From a polygon to a total stability condition: phase windows, the
//! arrow-monotonicity check, and the global dimension, on a stable sample
//! and on one pushed past the stability wall.

use stgon::{DynkinType, Model};

fn run(model: &Model, label: &str, g: &stgon::HGon) {
    let s = g.stability().unwrap();
    let p = model.build_slicing(g).unwrap();
    let rep = model.check_total(&p);
    let gl = model.gldim(&p);
    println!("{label}:");
    println!("   stable (geometry) = {}   total (phases) = {}", s.is_stable, rep.is_total);
    println!("   gldim = {:.9}   by interior angles = {:.9}", rep.gldim, gl.by_angles);
    for v in rep.violations.iter().take(3) {
        println!(
            "   violated arrow {} -> {} (phases {:.4} -> {:.4})",
            v.from, v.to, v.from_phase, v.to_phase
        );
    }
    if rep.violations.len() > 3 {
        println!("   ... and {} more", rep.violations.len() - 3);
    }
}

fn main() {
    let model = Model::new(DynkinType::parse("E6").unwrap());
    let h = 12.0;
    println!("type E6: gldim of a total condition lives in [1 - 2/h, 1) = [{:.6}, 1)", 1.0 - 2.0 / h);

    let (regular, _, _) = model.gepner().unwrap();
    run(&model, "gepner point (regular 12-gon)", &regular);

    let stable = (0..)
        .map(|s| model.sample(0.12, s).unwrap())
        .find(|g| g.stability().unwrap().is_stable)
        .unwrap();
    run(&model, "stable sample", &stable);

    let unstable = (0..)
        .map(|s| model.sample(0.3, s).unwrap())
        .find(|g| !g.stability().unwrap().is_stable)
        .unwrap();
    run(&model, "unstable sample", &unstable);
}
