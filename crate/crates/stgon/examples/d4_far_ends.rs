//! D4 admits three far-end orbits; one totally stable charge therefore
//! induces three different stable hexagons. This draws all three and
//! checks each passes the round trip.

use stgon::charge::farend_polygon;
use stgon::render::render_farend_panels;
use stgon::{DynkinType, Model};

fn main() -> Result<(), stgon::Error> {
    let model = Model::new(DynkinType::parse("D4")?);
    let g = (0..)
        .map(|s| model.sample(0.15, s).unwrap())
        .find(|g| g.stability().unwrap().is_stable)
        .unwrap();
    let z = model.charge_from_hgon(&g)?;
    for choice in [1usize, 3, 4] {
        let hexagon = farend_polygon(&z, model.quiver(), Some(choice))?;
        let s = hexagon.stability()?;
        println!(
            "far end {choice}: valid {}, stable {}, round trip {:.2e}",
            hexagon.validate().is_valid,
            s.is_stable,
            model.roundtrip_distance(&hexagon)?
        );
    }
    let dir = std::path::Path::new("target/figures");
    std::fs::create_dir_all(dir)?;
    let path = dir.join("d4-far-ends.svg");
    std::fs::write(&path, render_farend_panels(&g, 960)?)?;
    println!("wrote {}", path.display());
    Ok(())
}
