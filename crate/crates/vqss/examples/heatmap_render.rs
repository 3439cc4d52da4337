//! Renders real- and imaginary-part heatmaps of the exact TFIM steady state
//! into `out/heatmaps/`.

use std::path::Path;

use vqss::heatmap::{emit_heatmap, Part};
use vqss::LindbladModel;

fn main() {
    let model = LindbladModel::dissipative_tfim(4, 0.3, 1.0, 0.5).unwrap();
    let ss = model.steady_state_exact().unwrap();
    let dir = Path::new("out/heatmaps");
    for part in [Part::Real, Part::Imaginary] {
        let path = dir.join(format!("tfim_oracle_{}.svg", part.label()));
        emit_heatmap(&ss.rho, part, &path).unwrap();
        println!("wrote {}", path.display());
    }
}
