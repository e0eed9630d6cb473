//! Deterministic instance generators for tests and benchmarks.
//!
//! Every cell value is a pure hash of `(seed, row, col)` plus the family
//! parameters, so instances are reproducible across runs and identical
//! whether materialized densely or probed lazily. All families are
//! generated lazily; a 2^16-square instance costs memory only for the
//! cells an algorithm actually touches.

use std::sync::Arc;

use crate::matrix::{MatrixData, MatrixView};

/// Instance family. Names match the CLI selectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Independent uniform values in `[0, 1)`.
    Random,
    /// Every cell holds the same seeded value.
    Constant,
    /// A strict saddlepoint of value `0` at a seeded position: its row is
    /// strictly negative elsewhere, its column strictly positive.
    PlantedSsp,
    /// Exactly `multiplicity` saddlepoints, all of value `0`, arranged on a
    /// seeded grid of rows and columns. Requires
    /// `1 <= multiplicity <= min(rows, cols)`.
    PlantedSp { multiplicity: usize },
    /// Provably saddle-free: a shifted two-level checkerboard where every
    /// row maximum sits above every column minimum. Requires at least two
    /// rows and two columns.
    NoSp,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Constant => "constant",
            Family::PlantedSsp => "planted-ssp",
            Family::PlantedSp { .. } => "planted-sp",
            Family::NoSp => "no-sp",
        }
    }
}

/// Unrecognized family selector name.
#[derive(Debug, thiserror::Error)]
#[error("unknown family `{0}` (expected random, constant, planted-ssp, planted-sp, or no-sp)")]
pub struct ParseFamilyError(String);

impl std::str::FromStr for Family {
    type Err = ParseFamilyError;

    /// `planted-sp` parses with multiplicity 1; richer multiplicities are
    /// constructed directly.
    fn from_str(s: &str) -> Result<Family, ParseFamilyError> {
        match s {
            "random" => Ok(Family::Random),
            "constant" => Ok(Family::Constant),
            "planted-ssp" => Ok(Family::PlantedSsp),
            "planted-sp" => Ok(Family::PlantedSp { multiplicity: 1 }),
            "no-sp" => Ok(Family::NoSp),
            other => Err(ParseFamilyError(other.to_string())),
        }
    }
}

/// What is known about a generated instance by construction.
#[derive(Clone, Debug, PartialEq)]
pub enum Truth {
    /// Nothing beyond the family (random instances).
    Unconstrained,
    /// Every cell equals `value`; all cells are (weak) saddlepoints.
    AllEqual { value: f64 },
    /// The unique strict saddlepoint sits at `(row, col)` with `value`.
    StrictSaddle { row: usize, col: usize, value: f64 },
    /// The saddlepoint value is `value`; it occurs exactly `multiplicity`
    /// times and every occurrence is a saddlepoint.
    SaddleValue { value: f64, multiplicity: usize },
    /// No saddlepoint, weak or strict.
    SaddleFree,
}

/// A generated instance: shared cell data plus its construction truth.
///
/// Call [`Instance::view`] for a counted view; each call roots fresh
/// counters over the same cells, so repeated runs measure independently.
pub struct Instance {
    pub data: Arc<MatrixData>,
    pub truth: Truth,
}

impl Instance {
    pub fn view(&self) -> MatrixView {
        MatrixView::root(Arc::clone(&self.data))
    }
}

/// Invalid generator parameters.
#[derive(Debug, thiserror::Error)]
pub enum GenerateError {
    #[error("matrix dimensions must be positive (got {rows}x{cols})")]
    EmptyMatrix { rows: usize, cols: usize },
    #[error("planted-sp multiplicity {multiplicity} is out of range 1..={bound} for {rows}x{cols}")]
    MultiplicityOutOfRange { multiplicity: usize, bound: usize, rows: usize, cols: usize },
    #[error("no-sp requires at least 2x2 (got {rows}x{cols}); single-row and single-column matrices always have a saddlepoint")]
    NoSpTooSmall { rows: usize, cols: usize },
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Pure per-cell hash; the whole generator's determinism rests here.
fn cell_hash(seed: u64, i: usize, j: usize) -> u64 {
    let a = mix(
        seed.wrapping_add(0x9E37_79B9_7F4A_7C15)
            .wrapping_add((i as u64).wrapping_mul(0xA076_1D64_78BD_642F)),
    );
    mix(a ^ (j as u64).wrapping_mul(0xE703_7ED1_A0B4_28DB))
}

/// Uniform in `[0, 1)` from a hash word.
fn unit(h: u64) -> f64 {
    (h >> 11) as f64 / (1u64 << 53) as f64
}

/// Uniform in `[0.05, 0.95)`: bounded away from zero so planted structure
/// keeps exact multiplicities.
fn off_zero(h: u64) -> f64 {
    0.05 + 0.9 * unit(h)
}

/// Seeded auxiliary draw for instance-level parameters (pivot position,
/// grid offsets, the constant level). Distinct salts keep the streams for
/// parameters and cells independent.
fn param(seed: u64, salt: u64) -> u64 {
    mix(seed ^ salt.wrapping_mul(0x2545_F491_4F6C_DD1D))
}

/// Seeded grid of `count` distinct indices in `0..len`: a random offset
/// plus a fixed stride, which stays collision-free because
/// `count * stride <= len`.
#[derive(Clone, Copy, Debug)]
struct IndexGrid {
    len: usize,
    offset: usize,
    stride: usize,
    count: usize,
}

impl IndexGrid {
    fn new(len: usize, count: usize, seed: u64, salt: u64) -> IndexGrid {
        assert!(count >= 1 && count <= len);
        let stride = len / count;
        let offset = (param(seed, salt) % len as u64) as usize;
        IndexGrid { len, offset, stride, count }
    }

    /// Is `i` one of the grid indices?
    fn contains(&self, i: usize) -> bool {
        let d = (i + self.len - self.offset) % self.len;
        d % self.stride == 0 && d / self.stride < self.count
    }
}

/// Build a deterministic instance of the given family and shape.
pub fn generate(
    family: Family,
    rows: usize,
    cols: usize,
    seed: u64,
) -> Result<Instance, GenerateError> {
    if rows == 0 || cols == 0 {
        return Err(GenerateError::EmptyMatrix { rows, cols });
    }
    let inst = match family {
        Family::Random => Instance {
            data: Arc::new(MatrixData::from_fn(rows, cols, move |i, j| {
                unit(cell_hash(seed, i, j))
            })),
            truth: Truth::Unconstrained,
        },
        Family::Constant => {
            let value = 2.0 * unit(param(seed, 1)) - 1.0;
            Instance {
                data: Arc::new(MatrixData::from_fn(rows, cols, move |_, _| value)),
                truth: Truth::AllEqual { value },
            }
        }
        Family::PlantedSsp => {
            let pr = (param(seed, 2) % rows as u64) as usize;
            let pc = (param(seed, 3) % cols as u64) as usize;
            let data = MatrixData::from_fn(rows, cols, move |i, j| {
                if i == pr && j == pc {
                    0.0
                } else if i == pr {
                    -off_zero(cell_hash(seed, i, j))
                } else if j == pc {
                    off_zero(cell_hash(seed, i, j))
                } else {
                    2.0 * unit(cell_hash(seed, i, j)) - 1.0
                }
            });
            Instance {
                data: Arc::new(data),
                truth: Truth::StrictSaddle { row: pr, col: pc, value: 0.0 },
            }
        }
        Family::PlantedSp { multiplicity } => {
            let bound = rows.min(cols);
            if multiplicity < 1 || multiplicity > bound {
                return Err(GenerateError::MultiplicityOutOfRange {
                    multiplicity,
                    bound,
                    rows,
                    cols,
                });
            }
            // Balanced factorization multiplicity = g * h; both factors are
            // at most `multiplicity <= min(rows, cols)`, so the grid fits.
            let mut g = (multiplicity as f64).sqrt() as usize;
            while multiplicity % g != 0 {
                g -= 1;
            }
            let h = multiplicity / g;
            let row_grid = IndexGrid::new(rows, g, seed, 4);
            let col_grid = IndexGrid::new(cols, h, seed, 5);
            let data = MatrixData::from_fn(rows, cols, move |i, j| {
                match (row_grid.contains(i), col_grid.contains(j)) {
                    (true, true) => 0.0,
                    (true, false) => -off_zero(cell_hash(seed, i, j)),
                    (false, true) => off_zero(cell_hash(seed, i, j)),
                    (false, false) => {
                        let hsh = cell_hash(seed, i, j);
                        let v = off_zero(hsh);
                        if hsh & 1 == 0 {
                            v
                        } else {
                            -v
                        }
                    }
                }
            });
            Instance {
                data: Arc::new(data),
                truth: Truth::SaddleValue { value: 0.0, multiplicity },
            }
        }
        Family::NoSp => {
            if rows < 2 || cols < 2 {
                return Err(GenerateError::NoSpTooSmall { rows, cols });
            }
            let shift = (param(seed, 6) & 1) as usize;
            // Checkerboard of two separated bands: every row has a high
            // cell (row max > 0.6) and every column a low cell (col min
            // < 0.4), so max col-min < min row-max and no saddle exists.
            let data = MatrixData::from_fn(rows, cols, move |i, j| {
                let u = 0.4 * unit(cell_hash(seed, i, j));
                if (i + j + shift) % 2 == 0 {
                    0.6 + u
                } else {
                    u
                }
            });
            Instance { data: Arc::new(data), truth: Truth::SaddleFree }
        }
    };
    Ok(inst)
}
