//! Turning random forests into compact neural networks.
//!
//! The pipeline: train (or load) an axis-aligned random forest, generate
//! labeled samples directly from its decision boundaries, and train a small
//! fully-connected network on the generated stream until it imitates the
//! forest. The classical direct tree-to-network mapping is included as an
//! exactness baseline for accuracy and size comparisons.
//!
//! The crate is `no_std` compatible (`alloc` required); all file formats,
//! CSV handling, and the command-line driver live in the companion `rf2nn`
//! crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod data;
pub mod datagen;
mod fmath;
pub mod forest;
pub mod imitation;
pub mod mapping;
pub mod matrix;
pub mod neuralnet;
pub mod rng;

pub use data::{Dataset, FeatureStats};
pub use datagen::{GenerationConfig, SampleStream};
pub use forest::{DecisionTree, RandomForest, TreeTrainParams};
pub use matrix::Matrix;
pub use neuralnet::{Mlp, TrainConfig};

use core::fmt;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operation requires at least one sample.
    EmptyDataset,
    /// A label is outside `[0, class_count)`.
    LabelOutOfRange { label: usize, class_count: usize },
    /// Row count of the feature matrix and label count differ.
    SampleCountMismatch { rows: usize, labels: usize },
    /// Fewer than two classes.
    TooFewClasses { class_count: usize },
    /// Dataset has zero feature columns.
    NoFeatures,
    /// Split fractions must be positive and sum to one.
    BadSplitFractions,
    /// Synthetic dataset constraints violated (see message).
    BadSyntheticRequest(&'static str),
    /// Input vector length does not match the expected feature count.
    FeatureCountMismatch { expected: usize, got: usize },
    /// Class counts of two components differ.
    ClassCountMismatch { expected: usize, got: usize },
    /// A network layer size is zero or the layer list is too short.
    BadLayerSizes,
    /// Structural validation of a forest failed (see message).
    InvalidForest(&'static str),
    /// Structural validation of a network failed (see message).
    InvalidNetwork(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyDataset => write!(f, "dataset is empty"),
            Error::LabelOutOfRange { label, class_count } => {
                write!(f, "label {label} out of range for {class_count} classes")
            }
            Error::SampleCountMismatch { rows, labels } => {
                write!(f, "feature matrix has {rows} rows but {labels} labels")
            }
            Error::TooFewClasses { class_count } => {
                write!(f, "need at least 2 classes, got {class_count}")
            }
            Error::NoFeatures => write!(f, "dataset has no feature columns"),
            Error::BadSplitFractions => {
                write!(f, "split fractions must be positive and sum to 1")
            }
            Error::BadSyntheticRequest(msg) => write!(f, "invalid synthetic dataset request: {msg}"),
            Error::FeatureCountMismatch { expected, got } => {
                write!(f, "expected {expected} features, got {got}")
            }
            Error::ClassCountMismatch { expected, got } => {
                write!(f, "expected {expected} classes, got {got}")
            }
            Error::BadLayerSizes => write!(f, "layer sizes must be non-zero, at least [input, output]"),
            Error::InvalidForest(msg) => write!(f, "invalid forest: {msg}"),
            Error::InvalidNetwork(msg) => write!(f, "invalid network: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Index of the largest element, first occurrence on ties.
///
/// All prediction agreement metrics in this crate (accuracy, fidelity,
/// mapping equivalence) resolve argmax ties the same way.
pub fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::argmax;

    #[test]
    fn argmax_prefers_first_on_ties() {
        assert_eq!(argmax(&[0.5, 0.5]), 0);
        assert_eq!(argmax(&[0.1, 0.7, 0.2]), 1);
        assert_eq!(argmax(&[1.0]), 0);
    }
}
