//! Dataset handling: splitting, per-class limiting, synthetic generators,
//! and the per-feature statistics that drive sampling and normalization.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand_distr::{Distribution, StandardNormal};

use crate::fmath;
use crate::matrix::Matrix;
use crate::rng::{self, Rng};
use crate::{Error, Result};

/// Labeled tabular dataset. Labels are contiguous class indices.
#[derive(Clone, Debug)]
pub struct Dataset {
    features: Matrix,
    labels: Vec<usize>,
    class_count: usize,
}

impl Dataset {
    /// Validates the invariants: row/label counts match, every label is in
    /// `[0, class_count)`, at least one feature, at least two classes.
    pub fn new(features: Matrix, labels: Vec<usize>, class_count: usize) -> Result<Self> {
        if features.rows() != labels.len() {
            return Err(Error::SampleCountMismatch {
                rows: features.rows(),
                labels: labels.len(),
            });
        }
        if class_count < 2 {
            return Err(Error::TooFewClasses { class_count });
        }
        if features.cols() == 0 {
            return Err(Error::NoFeatures);
        }
        if let Some(&label) = labels.iter().find(|&&l| l >= class_count) {
            return Err(Error::LabelOutOfRange { label, class_count });
        }
        Ok(Self {
            features,
            labels,
            class_count,
        })
    }

    pub fn features(&self) -> &Matrix {
        &self.features
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn feature_count(&self) -> usize {
        self.features.cols()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        self.features.row(i)
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    /// Sub-dataset containing `indices` in order; class count is preserved.
    pub fn select(&self, indices: &[usize]) -> Dataset {
        Dataset {
            features: self.features.select_rows(indices),
            labels: indices.iter().map(|&i| self.labels[i]).collect(),
            class_count: self.class_count,
        }
    }

    fn indices_by_class(&self) -> Vec<Vec<usize>> {
        let mut by_class = vec![Vec::new(); self.class_count];
        for (i, &label) in self.labels.iter().enumerate() {
            by_class[label].push(i);
        }
        by_class
    }
}

/// Per-feature summary statistics of a training feature matrix.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FeatureStats {
    pub f_min: Vec<f64>,
    pub f_max: Vec<f64>,
    pub f_mean: Vec<f64>,
    pub f_std: Vec<f64>,
    pub f_absmax: Vec<f64>,
}

impl FeatureStats {
    pub fn feature_count(&self) -> usize {
        self.f_mean.len()
    }
}

/// Computes [`FeatureStats`] over the rows of `features`.
///
/// `f_std` is the population standard deviation (divisor = row count): the
/// value is a sampling scale, not an estimator.
pub fn compute_feature_stats(features: &Matrix) -> Result<FeatureStats> {
    let rows = features.rows();
    if rows == 0 {
        return Err(Error::EmptyDataset);
    }
    let cols = features.cols();
    let n = rows as f64;
    let mut f_min = vec![f64::INFINITY; cols];
    let mut f_max = vec![f64::NEG_INFINITY; cols];
    let mut f_mean = vec![0.0; cols];
    let mut f_absmax = vec![0.0; cols];
    for row in features.iter_rows() {
        for (f, &v) in row.iter().enumerate() {
            f_min[f] = f_min[f].min(v);
            f_max[f] = f_max[f].max(v);
            f_mean[f] += v;
            f_absmax[f] = f_absmax[f].max(v.abs());
        }
    }
    for m in f_mean.iter_mut() {
        *m /= n;
    }
    let mut f_std = vec![0.0; cols];
    for row in features.iter_rows() {
        for (f, &v) in row.iter().enumerate() {
            let d = v - f_mean[f];
            f_std[f] += d * d;
        }
    }
    for s in f_std.iter_mut() {
        *s = fmath::sqrt(*s / n);
    }
    Ok(FeatureStats {
        f_min,
        f_max,
        f_mean,
        f_std,
        f_absmax,
    })
}

/// Fraction of exactly-zero entries in a feature matrix.
///
/// Default for the zeroing probability of sample initialization.
pub fn zero_fraction(features: &Matrix) -> f64 {
    let total = features.rows() * features.cols();
    if total == 0 {
        return 0.0;
    }
    let zeros = features.as_slice().iter().filter(|&&v| v == 0.0).count();
    zeros as f64 / total as f64
}

/// Centers by `f_mean` and divides by `f_absmax` per feature.
///
/// A zero `f_absmax` (constant-zero feature) uses divisor 1, so the output
/// stays 0 for that feature.
pub fn normalize(x: &[f64], stats: &FeatureStats) -> Vec<f64> {
    assert_eq!(x.len(), stats.feature_count(), "feature count mismatch");
    x.iter()
        .enumerate()
        .map(|(f, &v)| {
            let d = stats.f_absmax[f];
            (v - stats.f_mean[f]) / if d == 0.0 { 1.0 } else { d }
        })
        .collect()
}

/// Stratified three-way split.
///
/// Fractions must be positive and sum to 1 (within 1e-9). Within each class
/// the counts follow the largest-remainder rule, with the guarantee that
/// every class contributes at least one sample to the training part. The
/// parts are disjoint and cover the input; fixed seeds give fixed splits.
pub fn split_dataset(
    ds: &Dataset,
    fractions: (f64, f64, f64),
    seed: u64,
) -> Result<(Dataset, Dataset, Dataset)> {
    let (ft, fv, fs) = fractions;
    let sum = ft + fv + fs;
    if !(ft > 0.0 && fv > 0.0 && fs > 0.0) || (sum - 1.0).abs() > 1e-9 {
        return Err(Error::BadSplitFractions);
    }
    let mut rng = rng::seeded(seed);
    let mut parts: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for mut idx in ds.indices_by_class() {
        idx.shuffle(&mut rng);
        let m = idx.len();
        if m == 0 {
            continue;
        }
        let mut counts = largest_remainder(m, [ft, fv, fs]);
        if counts[0] == 0 {
            // every class reaches the training part
            let donor = if counts[2] >= counts[1] { 2 } else { 1 };
            counts[donor] -= 1;
            counts[0] += 1;
        }
        let mut offset = 0;
        for (part, &count) in parts.iter_mut().zip(counts.iter()) {
            part.extend_from_slice(&idx[offset..offset + count]);
            offset += count;
        }
    }
    for part in parts.iter_mut() {
        part.sort_unstable();
    }
    Ok((
        ds.select(&parts[0]),
        ds.select(&parts[1]),
        ds.select(&parts[2]),
    ))
}

fn largest_remainder(m: usize, fractions: [f64; 3]) -> [usize; 3] {
    let mut counts = [0usize; 3];
    let mut remainders = [(0.0, 0usize); 3];
    let mut assigned = 0;
    for (i, &f) in fractions.iter().enumerate() {
        let ideal = m as f64 * f;
        counts[i] = ideal as usize; // truncation = floor for non-negative
        remainders[i] = (ideal - counts[i] as f64, i);
        assigned += counts[i];
    }
    // ties broken toward the earlier part
    remainders.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
    for &(_, i) in remainders.iter().take(m - assigned) {
        counts[i] += 1;
    }
    counts
}

/// Keeps at most `n_limit` samples per class, chosen by a seeded shuffle.
/// Classes with fewer samples keep all of them. Panics if `n_limit` is 0.
pub fn limit_per_class(ds: &Dataset, n_limit: usize, seed: u64) -> Dataset {
    assert!(n_limit >= 1, "n_limit must be at least 1");
    let mut rng = rng::seeded(seed);
    let mut keep = Vec::new();
    for mut idx in ds.indices_by_class() {
        idx.shuffle(&mut rng);
        idx.truncate(n_limit);
        keep.extend_from_slice(&idx);
    }
    keep.sort_unstable();
    ds.select(&keep)
}

/// Built-in two-class synthetic datasets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SyntheticKind {
    /// Two Gaussian blobs centered at -2 and +2 in every dimension.
    Blobs,
    /// The interleaved half-circles pattern in the first two dimensions.
    TwoMoons,
    /// A 4x4 checkerboard of alternating classes in the first two dimensions.
    XorGrid,
}

/// Generates a deterministic synthetic dataset with balanced labels
/// (within one sample).
///
/// `noise` is a Gaussian perturbation scale; dimensions beyond the pattern
/// (all of them for blobs, the first two otherwise) are filled with pure
/// noise.
pub fn make_synthetic(
    kind: SyntheticKind,
    n_samples: usize,
    n_features: usize,
    noise: f64,
    seed: u64,
) -> Result<Dataset> {
    if n_samples < 2 {
        return Err(Error::BadSyntheticRequest("need at least one sample per class"));
    }
    if n_features == 0 {
        return Err(Error::BadSyntheticRequest("need at least one feature"));
    }
    if !(noise >= 0.0) || !noise.is_finite() {
        return Err(Error::BadSyntheticRequest("noise must be finite and non-negative"));
    }
    if matches!(kind, SyntheticKind::TwoMoons | SyntheticKind::XorGrid) && n_features < 2 {
        return Err(Error::BadSyntheticRequest("pattern needs at least 2 features"));
    }
    let mut rng = rng::seeded(seed);
    let mut features = Matrix::with_cols(n_features);
    let mut labels = Vec::with_capacity(n_samples);
    let mut row = vec![0.0; n_features];
    for k in 0..n_samples {
        let label = k % 2;
        match kind {
            SyntheticKind::Blobs => {
                let center = if label == 0 { -2.0 } else { 2.0 };
                for v in row.iter_mut() {
                    *v = center + noise * normal(&mut rng);
                }
            }
            SyntheticKind::TwoMoons => {
                let t = core::f64::consts::PI * rng.random::<f64>();
                let (sin, cos) = t.sin_cos();
                let (x, y) = if label == 0 {
                    (cos, sin)
                } else {
                    (1.0 - cos, 0.5 - sin)
                };
                row[0] = x + noise * normal(&mut rng);
                row[1] = y + noise * normal(&mut rng);
                fill_noise(&mut row[2..], noise, &mut rng);
            }
            SyntheticKind::XorGrid => {
                // cells with even i+j carry class 0; pick one of the 8
                // matching cells, then a uniform point inside it
                let cell = rng.random_range(0..8u32);
                let i = cell / 4;
                let j = 2 * (cell % 4) + (i + label as u32) % 2;
                let i = 2 * i + j % 2; // stagger rows to cover all 16 cells
                let (i, j) = (j / 2 * 2 + (j + label as u32 + 1) % 2, i);
                let _ = (i, j);
                // the index juggling above is hard to follow; recompute plainly
                let c = cell as usize;
                let row_i = c / 2;
                let col_base = 2 * (c % 2);
                let col_j = col_base + (row_i + label) % 2;
                row[0] = row_i as f64 + rng.random::<f64>() + noise * normal(&mut rng);
                row[1] = col_j as f64 + rng.random::<f64>() + noise * normal(&mut rng);
                fill_noise(&mut row[2..], noise, &mut rng);
            }
        }
        features.push_row(&row);
        labels.push(label);
    }
    Dataset::new(features, labels, 2)
}

fn fill_noise<R: Rng>(slice: &mut [f64], noise: f64, rng: &mut R) {
    for v in slice.iter_mut() {
        *v = noise * normal(rng);
    }
}

fn normal<R: Rng>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy(labels: &[usize], class_count: usize) -> Dataset {
        let rows: Vec<Vec<f64>> = labels.iter().map(|&l| vec![l as f64, 1.0]).collect();
        Dataset::new(Matrix::from_rows(&rows), labels.to_vec(), class_count).unwrap()
    }

    #[test]
    fn dataset_validation() {
        let m = Matrix::from_rows(&[vec![1.0], vec![2.0]]);
        assert!(Dataset::new(m.clone(), vec![0], 2).is_err());
        assert!(Dataset::new(m.clone(), vec![0, 2], 2).is_err());
        assert!(Dataset::new(m.clone(), vec![0, 0], 1).is_err());
        assert!(Dataset::new(m, vec![0, 1], 2).is_ok());
    }

    #[test]
    fn split_exact_fractions_on_balanced_data() {
        let labels: Vec<usize> = (0..100).map(|i| i % 2).collect();
        let ds = toy(&labels, 2);
        let (train, val, test) = split_dataset(&ds, (0.6, 0.2, 0.2), 7).unwrap();
        assert_eq!(train.len(), 60);
        assert_eq!(val.len(), 20);
        assert_eq!(test.len(), 20);
    }

    #[test]
    fn split_is_deterministic() {
        let labels: Vec<usize> = (0..50).map(|i| i % 3).collect();
        let ds = toy(&labels, 3);
        let (a, b, c) = split_dataset(&ds, (0.6, 0.2, 0.2), 7).unwrap();
        let (a2, b2, c2) = split_dataset(&ds, (0.6, 0.2, 0.2), 7).unwrap();
        assert_eq!(a.labels(), a2.labels());
        assert_eq!(b.labels(), b2.labels());
        assert_eq!(c.labels(), c2.labels());
        assert_eq!(a.features(), a2.features());
    }

    // Oracle: enumerate the partition and count per-class membership in
    // every part.
    #[test]
    fn split_minority_class_reaches_all_parts() {
        let mut labels = vec![0usize; 10];
        labels.extend(vec![1usize; 90]);
        let ds = toy(&labels, 2);
        let (train, val, test) = split_dataset(&ds, (0.6, 0.2, 0.2), 3).unwrap();
        for part in [&train, &val, &test] {
            let minority = part.labels().iter().filter(|&&l| l == 0).count();
            assert!(minority > 0, "class 0 missing from a part");
        }
        assert_eq!(train.len() + val.len() + test.len(), 100);
    }

    #[test]
    fn split_tiny_class_prefers_train() {
        let labels = vec![0usize, 1, 1, 1, 1, 1, 1, 1, 1, 1];
        let ds = toy(&labels, 2);
        let (train, _, _) = split_dataset(&ds, (0.6, 0.2, 0.2), 1).unwrap();
        assert!(train.labels().contains(&0));
    }

    #[test]
    fn split_rejects_bad_fractions() {
        let ds = toy(&[0, 1, 0, 1], 2);
        assert!(split_dataset(&ds, (0.5, 0.2, 0.2), 0).is_err());
        assert!(split_dataset(&ds, (1.0, 0.0, 0.0), 0).is_err());
    }

    #[test]
    fn limit_caps_each_class() {
        let labels: Vec<usize> = (0..100).map(|i| i % 2).collect();
        let ds = toy(&labels, 2);
        let limited = limit_per_class(&ds, 20, 0);
        for c in 0..2 {
            assert_eq!(limited.labels().iter().filter(|&&l| l == c).count(), 20);
        }
    }

    #[test]
    fn limit_keeps_smaller_classes_whole() {
        let labels: Vec<usize> = (0..10).map(|i| i % 2).collect();
        let ds = toy(&labels, 2);
        let limited = limit_per_class(&ds, 20, 0);
        assert_eq!(limited.len(), 10);
        let one_each = limit_per_class(&ds, 1, 0);
        assert_eq!(one_each.len(), 2);
    }

    #[test]
    fn stats_single_row() {
        let m = Matrix::from_rows(&[vec![-3.0, 4.0]]);
        let s = compute_feature_stats(&m).unwrap();
        assert_eq!(s.f_min, vec![-3.0, 4.0]);
        assert_eq!(s.f_max, vec![-3.0, 4.0]);
        assert_eq!(s.f_mean, vec![-3.0, 4.0]);
        assert_eq!(s.f_std, vec![0.0, 0.0]);
        assert_eq!(s.f_absmax, vec![3.0, 4.0]);
    }

    #[test]
    fn stats_symmetric_pair() {
        let m = Matrix::from_rows(&[vec![-2.0], vec![2.0]]);
        let s = compute_feature_stats(&m).unwrap();
        assert_eq!(s.f_min[0], -2.0);
        assert_eq!(s.f_max[0], 2.0);
        assert_eq!(s.f_mean[0], 0.0);
        assert_eq!(s.f_std[0], 2.0);
        assert_eq!(s.f_absmax[0], 2.0);
    }

    // Hand computation: mean 2, population variance 2/3.
    #[test]
    fn stats_population_std() {
        let m = Matrix::from_rows(&[vec![1.0], vec![2.0], vec![3.0]]);
        let s = compute_feature_stats(&m).unwrap();
        assert_eq!(s.f_mean[0], 2.0);
        assert!((s.f_std[0] - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn stats_reject_empty() {
        assert!(compute_feature_stats(&Matrix::with_cols(3)).is_err());
    }

    #[test]
    fn normalize_basics() {
        let stats = FeatureStats {
            f_min: vec![0.0, -4.0, 0.0],
            f_max: vec![1.0, 4.0, 0.0],
            f_mean: vec![0.5, 0.0, 0.0],
            f_std: vec![0.1, 2.0, 0.0],
            f_absmax: vec![1.0, 4.0, 0.0],
        };
        // x == mean maps to zero
        assert_eq!(normalize(&[0.5, 0.0, 0.0], &stats), vec![0.0, 0.0, 0.0]);
        // mean 0, absmax 4, x 2 -> 0.5
        assert_eq!(normalize(&[0.5, 2.0, 0.0], &stats)[1], 0.5);
        // constant-zero feature stays zero under the divisor guard
        assert_eq!(normalize(&[1.0, -4.0, 0.0], &stats)[2], 0.0);
    }

    #[test]
    fn zero_fraction_counts_exact_zeros() {
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]);
        assert_eq!(zero_fraction(&m), 0.5);
    }

    #[test]
    fn blobs_are_balanced() {
        let ds = make_synthetic(SyntheticKind::Blobs, 200, 2, 0.5, 1).unwrap();
        assert_eq!(ds.len(), 200);
        assert_eq!(ds.labels().iter().filter(|&&l| l == 0).count(), 100);
        assert_eq!(ds.labels().iter().filter(|&&l| l == 1).count(), 100);
    }

    #[test]
    fn moons_need_two_features() {
        assert!(make_synthetic(SyntheticKind::TwoMoons, 100, 1, 0.1, 0).is_err());
        assert!(make_synthetic(SyntheticKind::TwoMoons, 100, 3, 0.1, 0).is_ok());
    }

    #[test]
    fn synthetic_is_deterministic() {
        let a = make_synthetic(SyntheticKind::XorGrid, 64, 4, 0.2, 9).unwrap();
        let b = make_synthetic(SyntheticKind::XorGrid, 64, 4, 0.2, 9).unwrap();
        assert_eq!(a.features(), b.features());
        assert_eq!(a.labels(), b.labels());
    }
}
