//! Command implementations. Exit status: 0 when every checked module has
//! the property, 1 when at least one does not, 2 on any error.

use std::fmt::Write as _;
use std::path::Path;

use lefschetz::module::GradedModule;
use lefschetz::wlp::{determinant_method, has_wlp, Method, WlpReport};

use crate::build::build_module;
use crate::report;
use crate::spec::parse_spec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Wlp = 0,
    NoWlp = 1,
    Error = 2,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn worst(self, other: Exit) -> Exit {
        // Error dominates; NoWlp dominates Wlp
        match (self, other) {
            (Exit::Error, _) | (_, Exit::Error) => Exit::Error,
            (Exit::NoWlp, _) | (_, Exit::NoWlp) => Exit::NoWlp,
            _ => Exit::Wlp,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub method: Method,
    pub json: bool,
    pub witness: bool,
    pub trace: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            method: Method::Auto,
            json: false,
            witness: false,
            trace: false,
        }
    }
}

fn load_module(path: &Path, out_err: &mut String) -> Option<GradedModule> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(out_err, "{}: cannot read file: {e}", path.display());
            return None;
        }
    };
    let spec = match parse_spec(&text) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(out_err, "{}: {e}", path.display());
            return None;
        }
    };
    match build_module(&spec) {
        Ok(m) => Some(m),
        Err(e) => {
            let _ = writeln!(out_err, "{}: build error: {e}", path.display());
            None
        }
    }
}

fn decide(m: &GradedModule, method: Method, out_err: &mut String, label: &str) -> Option<WlpReport> {
    match has_wlp(m, method) {
        Ok(r) => Some(r),
        Err(e) => {
            let _ = writeln!(out_err, "{label}: {e}");
            None
        }
    }
}

/// Run a verdict check over one or more files, rendering each report.
/// Returns (stdout, stderr, exit).
pub fn run_check(paths: &[&Path], opts: CheckOptions) -> (String, String, Exit) {
    let mut out = String::new();
    let mut err = String::new();
    let mut exit = Exit::Wlp;
    for path in paths {
        let label = path.display().to_string();
        let Some(module) = load_module(path, &mut err) else {
            exit = exit.worst(Exit::Error);
            continue;
        };
        let Some(rep) = decide(&module, opts.method, &mut err, &label) else {
            exit = exit.worst(Exit::Error);
            continue;
        };
        exit = exit.worst(if rep.verdict { Exit::Wlp } else { Exit::NoWlp });
        if opts.json {
            let j = report::json_report(&label, &module, &rep, opts.trace);
            let _ = writeln!(out, "{}", serde_json::to_string(&j).expect("serializable"));
        } else {
            out.push_str(&report::text_report(
                &label,
                &module,
                &rep,
                opts.witness,
                opts.trace,
            ));
        }
    }
    (out, err, exit)
}

/// `explain` is `check` on one file with the witness and trace forced on.
pub fn run_explain(path: &Path, opts: CheckOptions) -> (String, String, Exit) {
    run_check(
        &[path],
        CheckOptions {
            witness: true,
            trace: true,
            ..opts
        },
    )
}

/// `oracle` forces the pencil-rank method.
pub fn run_oracle(path: &Path, opts: CheckOptions) -> (String, String, Exit) {
    run_check(
        &[path],
        CheckOptions {
            method: Method::Oracle,
            witness: true,
            ..opts
        },
    )
}

/// `gamma` prints the pencil determinant certificate for every degree pair;
/// pairs outside the determinant method's scope are an error.
pub fn run_gamma(path: &Path, opts: CheckOptions) -> (String, String, Exit) {
    let mut out = String::new();
    let mut err = String::new();
    let label = path.display().to_string();
    let Some(module) = load_module(path, &mut err) else {
        return (out, err, Exit::Error);
    };
    let mut entries = Vec::new();
    for i in 0..module.len().saturating_sub(1) {
        let pair = module.degree_pair(i).expect("in range");
        match determinant_method(&pair) {
            Ok((_, p)) => entries.push((module.shift() + i as i64, p)),
            Err(e) => {
                let _ = writeln!(err, "{label}: degree {}: {e}", module.shift() + i as i64);
                return (out, err, Exit::Error);
            }
        }
    }
    if opts.json {
        let j = report::gamma_json(&label, &entries);
        let _ = writeln!(out, "{}", serde_json::to_string(&j).expect("serializable"));
    } else {
        out.push_str(&report::gamma_text(&label, &entries));
    }
    (out, err, Exit::Wlp)
}
