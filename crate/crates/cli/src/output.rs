use std::fmt;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use gvbounds::Error;

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// An error with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParams(_) | Error::Domain(_) | Error::Codebook(_) | Error::NoThreshold => EXIT_INVALID,
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::Underflow | Error::Io(_) | Error::Json(_) => EXIT_FAIL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_FAIL,
            message: e.to_string(),
        }
    }
}

pub type CmdResult<T = i32> = Result<T, Failure>;

/// Runs `body` against `out`, or stdout when `out` is `None`. Files are
/// written to a temporary sibling and renamed into place only on success.
pub fn emit<F>(out: Option<&Path>, body: F) -> CmdResult<()>
where
    F: FnOnce(&mut dyn Write) -> CmdResult<()>,
{
    match out {
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w)?;
            w.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            {
                let mut w = BufWriter::new(tmp.as_file_mut());
                body(&mut w)?;
                w.flush()?;
            }
            tmp.persist(path).map_err(|e| Failure::from(e.error))?;
        }
    }
    Ok(())
}
