//! Linear text classification for biomedical abstract triage.
//!
//! `lintext` implements a complete pipeline for deciding whether PubMed-style
//! abstracts report pharmacokinetic drug-drug-interaction evidence:
//!
//! 1. [`corpus`] — JSONL ingestion, tokenization, Porter stemming, number
//!    masking, field-prefixed author/MeSH tokens.
//! 2. [`features`] — unigram/bigram binary occurrence matrices with a
//!    min-document-count filter, IDF/TFIDF/L2 transforms, and PCA.
//! 3. [`classifiers`] — six linear classifiers (VTT, SVM, logistic
//!    regression, binomial Naive Bayes, LDA, diagonal LDA) sharing one
//!    decision-score interface.
//! 4. [`ner`] — dictionary-based named-entity counting plus ingestion of
//!    externally produced count files, appended as extra feature columns
//!    (or routed to VTT's per-tool bias terms).
//! 5. [`eval`] — F1, Matthews correlation, and interpolated
//!    precision/recall AUC.
//! 6. [`harness`] — nested 4-repeat x 4-fold cross-validation with
//!    MCC-selected hyperparameters, plus a synthetic corpus generator for
//!    self-contained benchmarks.
//! 7. [`cli`] — the `lintext` command-line front end.
//!
//! The `examples/` directory has one runnable example per capability; start
//! with `cargo run --example train_and_score`.

pub mod classifiers;
pub mod cli;
pub mod config;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod features;
pub mod harness;
pub mod ner;
pub mod report;

pub use error::{Error, Result};

/// Tool version stamped into reports and model files.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
