use thiserror::Error;

/// Errors surfaced by the library.
///
/// Internal consistency violations (facts that hold for every simple graph,
/// such as transitivity of the twin relation or the complete-join/zero-edge
/// dichotomy between skeleton nodes) are not represented here; those panic,
/// since reaching them means the implementation itself is wrong.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input. `line` is 1-based when the input is line oriented.
    #[error("parse error{}: {msg}", match line { Some(l) => format!(" at line {l}"), None => String::new() })]
    Parse { line: Option<usize>, msg: String },

    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The request exceeds the supported desk scale (e.g. graph6 n > 62,
    /// canonical forms beyond n = 8, enumeration beyond n = 7).
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The two skeleton nodes cannot be conflated; `reason` names the
    /// neighbor present around exactly one of them, or the missing edge.
    #[error("cannot conflate nodes {a} and {b}: {reason}")]
    Conflation { a: usize, b: usize, reason: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line: Some(line),
            msg: msg.into(),
        }
    }

    pub(crate) fn parse_noline(msg: impl Into<String>) -> Self {
        Error::Parse {
            line: None,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
