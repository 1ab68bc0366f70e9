//! Writes the Gepner-point figures: the regular model polygon of each type
//! overlaid with the Coxeter-plane projection of its root system.

use stgon::render::render_gepner;
use stgon::{DynkinType, Model};

fn main() -> Result<(), stgon::Error> {
    let dir = std::path::Path::new("target/figures");
    std::fs::create_dir_all(dir)?;
    for tag in ["D5", "E6", "E7", "E8", "G2"] {
        let model = Model::new(DynkinType::parse(tag)?);
        let d = model.gepner_coxeter_distance()?;
        let svg = render_gepner(&model, 720)?;
        let path = dir.join(format!("gepner-{}.svg", tag.to_lowercase()));
        std::fs::write(&path, svg)?;
        println!(
            "{tag}: wrote {} (charge/projection multiset distance {d:.2e})",
            path.display()
        );
    }
    Ok(())
}
