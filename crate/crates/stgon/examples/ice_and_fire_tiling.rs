//! The E6 ice-and-fire tiling: any valid 12-gon of type E6 dissects into
//! triangles, squares and its two core hexagons, and translated copies
//! tile the plane.

use stgon::hgon::HGon;
use stgon::render::{render_tiling, tiling_lattice};
use stgon::DynkinType;

fn main() -> Result<(), stgon::Error> {
    let dir = std::path::Path::new("target/figures");
    std::fs::create_dir_all(dir)?;
    let t = DynkinType::parse("E6")?;
    for (name, g) in [
        ("regular", HGon::regular(t)),
        ("skewed", HGon::sample_near_regular(t, 0.12, 77)?),
    ] {
        let (u, v) = tiling_lattice(&g)?;
        let svg = render_tiling(&g, 2, 900)?;
        let path = dir.join(format!("tiling-{name}.svg"));
        std::fs::write(&path, svg)?;
        println!(
            "{name}: wrote {}  lattice u = ({:.4}, {:.4}), v = ({:.4}, {:.4})",
            path.display(),
            u.re,
            u.im,
            v.re,
            v.im
        );
    }
    Ok(())
}
