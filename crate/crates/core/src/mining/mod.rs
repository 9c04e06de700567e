//! Mining pipelines built on the distance measures: k-NN classification,
//! LOF anomaly scoring, metrics and parameter selection.

mod eval;
mod knn;
mod lof;
mod measure;
mod metrics;

pub use eval::{
    anomaly_label, classify_with_cv, cv_errors, evaluate_anomaly, evaluate_classification,
    select_s_by_cv, EvalReport, ANOMALY_PROTOCOL, F1_AVERAGING,
};
pub use knn::{knn_classify, knn_predict, knn_vote, loo_predict};
pub use lof::{lof_from_matrix, lof_scores, MAX_LRD};
pub use measure::{DistanceMatrix, Encoded, Measure, MeasureConfig};
pub use metrics::{auc, f1_score, ClassMetrics, Confusion};
