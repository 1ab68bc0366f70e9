//! Building polygons from free coordinates and reading the validity and
//! stability reports, including a deliberately broken sample.

use num_complex::Complex64;
use stgon::hgon::HGon;
use stgon::DynkinType;

fn show(label: &str, g: &HGon) {
    let v = g.validate();
    println!("{label}: valid = {}", v.is_valid);
    for (name, residual) in &v.checks {
        println!("   {name:<18} {residual:.3e}");
    }
    if v.is_valid {
        let s = g.stability().unwrap();
        println!(
            "   stable = {} (convex {} margin {:.3e})",
            s.is_stable, s.convex, s.convex_margin
        );
        for c in s.containment.iter().take(3) {
            println!("   {} in level-{}: {} ({:.3e})", c.name, c.level, c.inside, c.margin);
        }
    }
}

fn main() {
    let t = DynkinType::parse("D5").unwrap();

    // the regular octagon with punctures dead center
    show("regular D5", &HGon::regular(t));

    // a custom octagon: free edges z_1..z_4 plus the puncture offset
    let params = vec![
        Complex64::new(1.0, 0.05),
        Complex64::new(0.62, 0.74),
        Complex64::new(-0.1, 1.02),
        Complex64::new(-0.83, 0.66),
        Complex64::new(1.4, 0.9), // vector from V_0 to B+
    ];
    let custom = HGon::from_free_coordinates(t, &params).unwrap();
    show("custom D5", &custom);

    // push the puncture far out: still a valid polygon, no longer stable
    let mut far = params;
    far[4] = Complex64::new(2.6, 1.4);
    show("puncture pushed out", &HGon::from_free_coordinates(t, &far).unwrap());

    // break a relation outright
    let mut verts = HGon::regular(t).vertices().to_vec();
    verts[2] += Complex64::new(0.2, 0.1);
    let broken = HGon::new(t, verts, vec![Complex64::default(); 2], None).unwrap();
    show("broken symmetry", &broken);
}
