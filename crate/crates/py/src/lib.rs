//! Python bindings: documents in, JSON reports out.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use inert_core::cli::{exit_code, parse_spec, run as run_spec, Command, Options, Report};
use inert_core::Error;

/// Runs `command` on a space-spec document and returns `(exit_code, report)`.
pub fn run_document(document: &str, command: &str, certify: bool) -> Result<(i32, Report), Error> {
    let cmd: Command = command.parse()?;
    let spec = parse_spec(document)?;
    let rep = run_spec(&spec, cmd, &Options { certify, timing: false })?;
    Ok((exit_code(&Ok(rep.clone())), rep))
}

fn to_py(e: Error) -> PyErr {
    let code = exit_code(&Err(e.clone()));
    if (20..30).contains(&code) {
        PyValueError::new_err(format!("[{code}] {e}"))
    } else {
        PyRuntimeError::new_err(format!("[{code}] {e}"))
    }
}

/// Run a command and return `(exit_code, report_json)`.
#[pyfunction]
#[pyo3(signature = (document, command = "inert", certify = false))]
fn run(document: &str, command: &str, certify: bool) -> PyResult<(i32, String)> {
    let (code, rep) = run_document(document, command, certify).map_err(to_py)?;
    Ok((code, rep.to_json()))
}

/// Parse and validate a document, returning it in canonical form.
#[pyfunction]
fn normalize(document: &str) -> PyResult<String> {
    parse_spec(document).map(|s| s.to_json()).map_err(to_py)
}

#[pymodule]
fn inert(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_a_document() {
        let (code, rep) = run_document(r#"{"r":2,"word":"[a,b]"}"#, "aspherical", false).unwrap();
        assert_eq!(code, 0);
        assert_eq!(rep.aspherical, Some(true));
    }

    #[test]
    fn rejects_unknown_commands() {
        assert!(matches!(run_document(r#"{"spheres":[2]}"#, "frobnicate", false), Err(Error::Input(_))));
    }
}
