//! File formats: frames and spectral models as JSON, plus CSV import for
//! real-valued frames.
//!
//! Complex entries are `[re, im]` pairs so frames survive a round trip
//! losslessly. A CSV file carries one frame vector per row and real entries
//! only.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::spectral::{Excess, SpectralModel};

/// On-disk frame: m vectors of n complex entries, each entry `[re, im]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FrameFile {
    pub n: usize,
    pub m: usize,
    pub vectors: Vec<Vec<[f64; 2]>>,
}

impl FrameFile {
    pub fn from_frame(frame: &Frame) -> Self {
        let vectors = (0..frame.len())
            .map(|i| frame.vector(i).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        FrameFile {
            n: frame.dim(),
            m: frame.len(),
            vectors,
        }
    }

    pub fn to_frame(&self) -> Result<Frame> {
        if self.vectors.len() != self.m {
            return Err(Error::ParseError(format!(
                "frame file declares m = {} but lists {} vectors",
                self.m,
                self.vectors.len()
            )));
        }
        if self.vectors.iter().any(|v| v.len() != self.n) {
            return Err(Error::ParseError(format!(
                "frame file declares n = {} but a vector has another length",
                self.n
            )));
        }
        let vectors: Vec<Vec<Complex64>> = self
            .vectors
            .iter()
            .map(|v| v.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect();
        for v in vectors.iter().flatten() {
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::ParseError("non-finite entry in frame file".into()));
            }
        }
        Frame::from_vectors(&vectors)
    }
}

/// Reads a frame from JSON, or from CSV when the path ends in `.csv`.
pub fn read_frame(path: &Path) -> Result<Frame> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::ParseError(format!("cannot read {}: {}", path.display(), e)))?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        return frame_from_csv(&text);
    }
    let file: FrameFile = serde_json::from_str(&text)
        .map_err(|e| Error::ParseError(format!("{}: {}", path.display(), e)))?;
    file.to_frame()
}

/// Writes a frame as a JSON FrameFile.
pub fn write_frame(path: &Path, frame: &Frame) -> Result<()> {
    let file = FrameFile::from_frame(frame);
    let text = serde_json::to_string_pretty(&file)
        .map_err(|e| Error::ParseError(format!("serialize: {}", e)))?;
    fs::write(path, text)
        .map_err(|e| Error::ParseError(format!("cannot write {}: {}", path.display(), e)))
}

/// One real-valued frame vector per row, comma separated.
pub fn frame_from_csv(text: &str) -> Result<Frame> {
    let mut vectors: Vec<Vec<Complex64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for field in line.split(',') {
            let value: f64 = field.trim().parse().map_err(|_| {
                Error::ParseError(format!("line {}: bad number {:?}", lineno + 1, field))
            })?;
            if !value.is_finite() {
                return Err(Error::ParseError(format!(
                    "line {}: non-finite entry",
                    lineno + 1
                )));
            }
            row.push(Complex64::new(value, 0.0));
        }
        vectors.push(row);
    }
    if vectors.is_empty() {
        return Err(Error::ParseError("empty CSV frame file".into()));
    }
    if vectors.iter().any(|v| v.len() != vectors[0].len()) {
        return Err(Error::ParseError("CSV rows have differing lengths".into()));
    }
    Frame::from_vectors(&vectors)
}

/// On-disk spectral model.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralModelFile {
    /// `[ess_lo, ess_hi]` on the singular-value scale of `|F|`.
    pub ess: [f64; 2],
    #[serde(default)]
    pub above: Vec<(f64, usize)>,
    #[serde(default)]
    pub below: Vec<(f64, usize)>,
    pub excess: serde_json::Value,
    #[serde(default)]
    pub cluster_at_me: bool,
}

impl SpectralModelFile {
    pub fn to_model(&self) -> Result<SpectralModel> {
        let excess = match &self.excess {
            serde_json::Value::Number(n) => {
                let v = n.as_u64().ok_or_else(|| {
                    Error::ParseError(format!("excess {} is not a non-negative integer", n))
                })?;
                Excess::Finite(v as usize)
            }
            serde_json::Value::String(s) if s == "inf" => Excess::Infinite,
            other => {
                return Err(Error::ParseError(format!(
                    "excess must be a count or \"inf\", got {}",
                    other
                )))
            }
        };
        SpectralModel::new(
            (self.ess[0], self.ess[1]),
            self.above.clone(),
            self.below.clone(),
            excess,
            self.cluster_at_me,
        )
    }

    pub fn from_model(model: &SpectralModel) -> Self {
        SpectralModelFile {
            ess: [model.ess_lo(), model.ess_hi()],
            above: model.above().to_vec(),
            below: model.below().to_vec(),
            excess: match model.excess() {
                Excess::Finite(n) => serde_json::json!(n),
                Excess::Infinite => serde_json::json!("inf"),
            },
            cluster_at_me: model.cluster_at_me(),
        }
    }
}

/// Reads a spectral model from JSON.
pub fn read_model(path: &Path) -> Result<SpectralModel> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::ParseError(format!("cannot read {}: {}", path.display(), e)))?;
    let file: SpectralModelFile = serde_json::from_str(&text)
        .map_err(|e| Error::ParseError(format!("{}: {}", path.display(), e)))?;
    file.to_model()
}
