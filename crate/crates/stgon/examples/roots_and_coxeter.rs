//! Root systems by reflection closure and the Coxeter plane: closure
//! sizes, the order of the Coxeter transformation, and the evenly spread
//! projection of a root orbit.

use stgon::dynkin::Orientation;
use stgon::imat::{identity, mat_pow};
use stgon::rootsys::{build_root_system, CoxeterAction};
use stgon::DynkinType;

fn main() {
    for tag in ["A3", "D5", "E6", "E7", "E8"] {
        let t = DynkinType::parse(tag).unwrap();
        let rs = build_root_system(t);
        println!(
            "{tag}: |roots| = {} = rank * h = {} * {}",
            rs.len(),
            t.rank(),
            t.coxeter_number()
        );
        let o = Orientation::standard(t);
        let cox = CoxeterAction::build(&o);
        let h = t.coxeter_number();
        assert_eq!(mat_pow(cox.coxeter_element(), h), identity(t.rank()));
        println!("  coxeter element has order {h}");

        // one w-orbit projects to h evenly spaced points on a circle
        let alpha = rs.roots().iter().find(|r| r.iter().all(|&x| x >= 0)).unwrap();
        let mut v = alpha.clone();
        let mut args = Vec::new();
        for _ in 0..h {
            let p = cox.project(&v);
            args.push(p.arg());
            v = cox.apply_w(&v);
        }
        let mut gaps: Vec<f64> = args
            .windows(2)
            .map(|w| (w[1] - w[0]).rem_euclid(std::f64::consts::TAU))
            .collect();
        gaps.sort_by(f64::total_cmp);
        println!(
            "  projected orbit turns in steps of {:.6} rad (2 pi / h = {:.6})",
            gaps[gaps.len() / 2],
            std::f64::consts::TAU / h as f64
        );
    }
}
