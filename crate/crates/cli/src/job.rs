//! Commands described by a JSON job file.

use serde::Deserialize;
use serde_json::Value;

use krawtchouk::oracle::CodeSpec;
use krawtchouk::SchemeSpec;

use crate::commands::{self, Method, Output};
use crate::json::Count;
use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Job {
    SchemeInfo {
        scheme: SchemeSpec,
    },
    Eigenmatrix {
        scheme: SchemeSpec,
    },
    #[serde(rename_all = "camelCase")]
    Transform {
        scheme: SchemeSpec,
        weights: Vec<Count>,
        code_size: Option<Count>,
        #[serde(default)]
        method: Method,
    },
    #[serde(rename_all = "camelCase")]
    Moments {
        scheme: SchemeSpec,
        weights: Vec<Count>,
        code_size: Option<Count>,
        phi: Option<usize>,
    },
    #[serde(rename_all = "camelCase")]
    Maximal {
        scheme: SchemeSpec,
        d_s: usize,
        code_size: Count,
    },
    Verify {
        scheme: SchemeSpec,
        #[serde(default = "default_suite")]
        suite: String,
        #[serde(default = "default_trials")]
        trials: usize,
        #[serde(default)]
        seed: u64,
    },
    Code {
        code: CodeSpec,
    },
}

fn default_suite() -> String {
    "all".into()
}

fn default_trials() -> usize {
    20
}

/// A parsed job and the optional output path from its `out` field.
pub fn parse(text: &str) -> Result<(Job, Option<String>), CliError> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("job: {e}")))?;
    let out = match value.as_object_mut().and_then(|m| m.remove("out")) {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s),
        Some(other) => return Err(CliError::Input(format!("job: out must be a string, got {other}"))),
    };
    let job = serde_json::from_value(value).map_err(|e| CliError::Input(format!("job: {e}")))?;
    Ok((job, out))
}

fn counts(v: &[Count]) -> Result<Vec<num_bigint::BigInt>, CliError> {
    v.iter().map(Count::value).collect()
}

pub fn run(job: Job) -> Result<Output, CliError> {
    match job {
        Job::SchemeInfo { scheme } => commands::scheme_info(scheme),
        Job::Eigenmatrix { scheme } => commands::scheme_eigenmatrix(scheme),
        Job::Transform { scheme, weights, code_size, method } => {
            commands::transform(scheme, counts(&weights)?, code_size.map(|c| c.value()).transpose()?, method)
        }
        Job::Moments { scheme, weights, code_size, phi } => {
            commands::moments(scheme, counts(&weights)?, code_size.map(|c| c.value()).transpose()?, phi)
        }
        Job::Maximal { scheme, d_s, code_size } => commands::maximal(scheme, d_s, code_size.value()?),
        Job::Verify { scheme, suite, trials, seed } => commands::run_verify(scheme, suite.parse()?, trials, seed),
        Job::Code { code } => commands::code(&code),
    }
}
