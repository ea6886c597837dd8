//! Source-code vocabulary modeling toolkit.
//!
//! The crate covers the path from a directory of Java projects to vocabulary
//! statistics and language-model scores:
//!
//! - [`corpus`]: project ingestion, exact deduplication and seeded splits
//! - [`lexer`]: lossless Java tokenization
//! - [`pipeline`]: modeling choices (whitespace, comments, strings, numbers,
//!   non-English words, identifier splitting with case encoding)
//! - [`bpe`]: byte-pair encoding with markers kept atomic
//! - [`stats`]: vocabulary size, token counts, OOV thresholds, growth curves
//! - [`ngram`]: interpolated n-gram model with a file cache, entropy and MRR

pub mod corpus;
pub mod error;
pub mod lexer;
pub mod pipeline;
pub mod bpe;
pub mod ngram;
pub mod stats;

pub use bpe::{BpeModel, SubwordSequence};
pub use corpus::{DedupIndex, Project, ProjectSet, Split};
pub use error::{Error, Result};
pub use lexer::{lex, Token, TokenKind};
pub use ngram::{EvalOptions, EvalResult, NgramConfig, NgramModel, Scenario, Unit};
pub use pipeline::{apply, CorpusWord, PipelineConfig, Processed};
pub use stats::{GrowthCurve, ReportRow, VocabStats};
