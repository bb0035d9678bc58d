//! Frame and model files: JSON with lossless complex entries, CSV for
//! real-valued frames.
//!
//! ```bash
//! cargo run -p quasidual --example file_roundtrip
//! ```

use num_complex::Complex64;
use quasidual::frame::Frame;
use quasidual::io::{frame_from_csv, read_frame, write_frame, FrameFile, SpectralModelFile};

fn main() {
    let dir = std::env::temp_dir().join("quasidual-example");
    std::fs::create_dir_all(&dir).unwrap();

    // JSON round trip keeps complex entries bit-exact.
    let frame = Frame::from_vectors(&[
        vec![Complex64::new(1.0, 0.125), Complex64::new(0.0, -2.0)],
        vec![Complex64::new(0.5, 0.0), Complex64::new(1.0, 1.0)],
        vec![Complex64::new(-0.25, 0.75), Complex64::new(0.0, 0.0)],
    ])
    .unwrap();
    let path = dir.join("frame.json");
    write_frame(&path, &frame).unwrap();
    let back = read_frame(&path).unwrap();
    println!(
        "json round trip exact: {}",
        (frame.synthesis() - back.synthesis()).max_abs() == 0.0
    );
    println!("file contents:\n{}", std::fs::read_to_string(&path).unwrap());

    // CSV import: one real vector per row.
    let csv = "1, 0\n0, 1\n0.5, 0.5\n";
    let from_csv = frame_from_csv(csv).unwrap();
    println!("csv frame: n = {}, m = {}", from_csv.dim(), from_csv.len());

    // Spectral models use the same JSON conventions.
    let model_text = r#"{
        "ess": [0.5, 1.0],
        "above": [[2.0, 1]],
        "excess": "inf"
    }"#;
    let file: SpectralModelFile = serde_json::from_str(model_text).unwrap();
    let model = file.to_model().unwrap();
    println!("model excess: {:?}, ess = [{}, {}]", model.excess(), model.ess_lo(), model.ess_hi());

    // FrameFile is the exchange type the CLI reads and writes.
    let as_file = FrameFile::from_frame(&frame);
    println!("frame file shape: n = {}, m = {}", as_file.n, as_file.m);

    std::fs::remove_dir_all(&dir).ok();
}
