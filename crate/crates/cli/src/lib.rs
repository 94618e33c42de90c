//! Divisor input files, the analysis pipeline and golden-file corpora.

mod corpus;
mod input;
mod pipeline;
mod report;

pub use corpus::{diff_reports, run_corpus, CorpusEntry, CorpusSummary};
pub use input::{DivisorInput, InputError};
pub use pipeline::{analyze, exit_code, Flags, Outcome, STEP_BUDGET_VAR};
pub use report::{
    AnalysisReport, BoundsReport, CylinderReport, DeformationSummary, Field, ProfileReport, StageReport,
    TraceWitness, SCHEMA_VERSION,
};
