//! Desk-scale exploration of the stable locus: stable fractions, the
//! stability-vs-totality cross check (never allowed to disagree), and the
//! distribution of the global dimension over [1 - 2/h, 1).

use stgon::{DynkinType, Model};

fn main() -> Result<(), stgon::Error> {
    let count = 400;
    println!(
        "{:<5} {:>9} {:>8} {:>13} {:>11}  gldim histogram over [1-2/h, 1)",
        "type", "magnitude", "stable", "disagreements", "gldim floor"
    );
    for tag in ["A5", "D5", "E6", "E7", "E8", "B3", "F4", "G2"] {
        let t = DynkinType::parse(tag)?;
        let model = Model::new(t);
        for magnitude in [0.05, 0.2] {
            let stats = model.sample_stats(count, magnitude, 1)?;
            let bars: Vec<String> = stats.gldim_bins.iter().map(usize::to_string).collect();
            println!(
                "{:<5} {:>9.2} {:>5}/{:<3} {:>13} {:>11.6}  [{}]",
                tag,
                magnitude,
                stats.stable,
                count,
                stats.disagreements,
                1.0 - 2.0 / t.coxeter_number() as f64,
                bars.join(" ")
            );
            assert_eq!(stats.disagreements, 0);
        }
    }
    Ok(())
}
