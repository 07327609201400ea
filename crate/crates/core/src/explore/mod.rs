//! Random and exhaustive experiments over populations of semigroups.

mod box_model;
mod census;
mod genus_tree;

pub use box_model::{
    box_experiment, sample_box, write_csv, BoxModelParams, ExperimentRecord, Sampler, RNG_NAME,
};
pub use census::{rank_census, Census, CensusRow};
pub use genus_tree::{
    enumerate_by_genus, enumerate_fixed, genus_counts, GenusTree, GenusTreeNode,
    DEFAULT_GENUS_CEILING, MAX_GENUS,
};

/// Two-sided 95% Wilson score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    const Z: f64 = 1.959_963_984_540_054;
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = Z * Z;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let radius = Z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((centre - radius).max(0.0), (centre + radius).min(1.0))
}
