//! Pedestrian gesture classification from 2D skeleton keypoint sequences.
//!
//! The pipeline goes: parse or synthesize COCO-17 keypoint sequences
//! ([`ingest`], [`synth`]), normalize them against torso size and mid-hip
//! center ([`skeleton`]), reduce each sequence to a 76-dimensional feature
//! vector of pose statistics and wrist kinematics ([`features`]), classify
//! with a seeded random forest ([`forest`]), and inspect class structure
//! with exact t-SNE, silhouette scoring, and per-class Gaussian ellipses
//! ([`cluster`]).
//!
//! Everything downstream of a seed is deterministic: corpora, splits,
//! forests, and embeddings reproduce bit-for-bit for the same inputs.

pub mod cluster;
pub mod dataset;
pub mod features;
pub mod forest;
pub mod geom;
pub mod gesture;
pub mod ingest;
pub mod seed;
pub mod skeleton;
pub mod synth;

pub use cluster::{
    fit_class_gaussians, silhouette_score, tsne_embed, ClassGaussian, ClusterError, Ellipse,
    Embedding2D, TsneParams,
};
pub use dataset::{DatasetError, LabeledDataset};
pub use features::{
    dynamic_features, extract_feature_vector, static_features, DynamicFeatures, FeatureError,
    FeatureSubset, FeatureVector, StaticFeatures,
};
pub use forest::{
    evaluate, gini_importance, predict, stratified_split, train_forest, train_forest_serial,
    ConfusionMatrix, ForestError, ForestModel, ForestParams,
};
pub use geom::Vec2;
pub use gesture::GestureClass;
pub use ingest::{
    load_manifest, parse_manifest, parse_sequence_file, repair_low_confidence,
    serialize_sequence, trim_gesture_positive, DatasetManifest, IngestError, LoadOptions,
    LoadedCorpus, ManifestEntry,
};
pub use skeleton::{
    center_point, normalize_frame, normalize_sequence, torso_size, Keypoint, KeypointSequence,
    NormalizedFrame, NormalizedSequence, RawFrame, SkeletonError,
};
pub use synth::{generate_corpus, generate_sequence, write_corpus, Arm, SynthCorpus, SynthParams};

/// Schema version stamped into every file format this crate reads or writes.
pub const SCHEMA_VERSION: u32 = 1;
