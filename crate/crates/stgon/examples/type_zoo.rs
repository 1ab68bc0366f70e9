//! Tour of the supported Dynkin types: ranks, Coxeter numbers, model
//! polygons, folding data and relation ranks.

use stgon::dynkin::{folding_data, Orientation};
use stgon::hgon::{effective_vars, relation_rank};
use stgon::DynkinType;

fn main() {
    println!("{:<5} {:>4} {:>4}  {:<26} notes", "type", "rank", "h", "model polygon");
    for tag in [
        "A1", "A5", "B2", "B4", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2",
    ] {
        let t = DynkinType::parse(tag).unwrap();
        let gon = match (t.puncture_count(), t.symmetric_gon()) {
            (2, _) => format!("doubly punctured {}-gon", t.hgon_sides()),
            (1, _) => format!("punctured symmetric {}-gon", t.hgon_sides()),
            (_, true) => format!("symmetric {}-gon", t.hgon_sides()),
            _ => format!("{}-gon", t.hgon_sides()),
        };
        let mut notes = Vec::new();
        if let Some(f) = folding_data(t) {
            let w: Vec<String> = f.weights.iter().map(usize::to_string).collect();
            notes.push(format!("folds from {} (weights {})", f.source, w.join(",")));
        } else {
            let o = Orientation::standard(t);
            notes.push(format!("far end {}", o.far_end()));
        }
        if let Ok(r) = relation_rank(t) {
            notes.push(format!(
                "relations rank {r} on {} vars",
                effective_vars(t).unwrap()
            ));
        }
        println!(
            "{:<5} {:>4} {:>4}  {:<26} {}",
            t.to_string(),
            t.rank(),
            t.coxeter_number(),
            gon,
            notes.join("; ")
        );
    }
}
