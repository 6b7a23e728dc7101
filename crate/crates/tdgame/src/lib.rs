//! File formats, batch surveys, and the reproduction table for
//! [`tdgame_core`].

pub mod format;
pub mod suite;
pub mod survey;

pub use format::{parse_graph, serialize_graph, GraphFormat, GraphText, ParseError};
pub use suite::{paper_claims, run_claims, run_paper_suite, Style, SuiteReport, SuiteRow};
pub use survey::{load_corpus, survey, write_rows, Corpus, Emit, SurveyError};

/// Process exit codes of the `tdgame` binary.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const PRECONDITION: i32 = 3;
}

/// Exit code for a solver error: malformed input is a usage error, the rest
/// are capacity or precondition failures.
pub fn exit_code(e: &tdgame_core::Error) -> i32 {
    use tdgame_core::Error::*;
    match e {
        InvalidFamily(_) | VertexOutOfRange { .. } | SelfLoop(_) => exit::USAGE,
        _ => exit::PRECONDITION,
    }
}
