//! Text and JSON rendering for decision reports. The JSON schema is stable:
//! tests pin the field names.

use serde::Serialize;

use lefschetz::linalg::{Matrix, Subspace, UniPoly};
use lefschetz::module::GradedModule;
use lefschetz::wlp::{TraceStep, Var, WlpReport};

#[derive(Serialize)]
pub struct JsonReport {
    pub file: String,
    pub field: String,
    pub verdict: &'static str,
    pub hilbert_function: JsonHilbert,
    pub minimal_generators: Vec<JsonGenerator>,
    pub witness: Option<JsonWitness>,
    pub finite_field_caveat: bool,
    pub per_degree: Vec<JsonDegree>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<JsonTrace>>,
}

#[derive(Serialize)]
pub struct JsonHilbert {
    pub first_degree: i64,
    pub values: Vec<usize>,
}

#[derive(Serialize)]
pub struct JsonGenerator {
    pub degree: i64,
    pub count: usize,
}

#[derive(Serialize)]
pub struct JsonWitness {
    pub x: String,
    pub y: String,
    pub form: String,
}

#[derive(Serialize)]
pub struct JsonDegree {
    pub degree: i64,
    pub required_rank: usize,
    pub generic_rank: usize,
    pub method: String,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct JsonTrace {
    pub degree: i64,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn json_report(
    file: &str,
    module: &GradedModule,
    report: &WlpReport,
    with_trace: bool,
) -> JsonReport {
    let hf = module.hilbert_function();
    JsonReport {
        file: file.to_string(),
        field: module.field().to_string(),
        verdict: if report.verdict { "wlp" } else { "no-wlp" },
        hilbert_function: JsonHilbert {
            first_degree: hf.shift,
            values: hf.values.clone(),
        },
        minimal_generators: module
            .minimal_generator_degrees()
            .into_iter()
            .map(|(d, count)| JsonGenerator {
                degree: module.shift() + d as i64,
                count,
            })
            .collect(),
        witness: report.witness.as_ref().map(|w| JsonWitness {
            x: w.x_coeff.to_string(),
            y: w.y_coeff.to_string(),
            form: w.to_string(),
        }),
        finite_field_caveat: report.finite_field_caveat,
        per_degree: report
            .per_degree
            .iter()
            .map(|c| JsonDegree {
                degree: c.degree,
                required_rank: c.required_rank,
                generic_rank: c.generic_rank,
                method: c.method.to_string(),
                ok: c.passes(),
            })
            .collect(),
        trace: with_trace.then(|| {
            report
                .trace
                .iter()
                .map(|e| {
                    let (kind, detail) = trace_parts(&e.step);
                    JsonTrace {
                        degree: e.degree,
                        kind,
                        detail,
                    }
                })
                .collect()
        }),
    }
}

fn trace_parts(step: &TraceStep) -> (&'static str, Option<String>) {
    match step {
        TraceStep::InjectionCheck { var: Var::X, kernel } => ("inj_x", Some(kernel_detail(kernel))),
        TraceStep::InjectionCheck { var: Var::Y, kernel } => ("inj_y", Some(kernel_detail(kernel))),
        TraceStep::KernelMeet { meet } => ("kernel_meet", Some(kernel_detail(meet))),
        TraceStep::ImageMeet { meet } => ("image_meet", Some(kernel_detail(meet))),
        TraceStep::QuotientStep { removed, dims } => (
            "quotient",
            Some(format!(
                "drop {removed} from each component -> dims ({},{})",
                dims.0, dims.1
            )),
        ),
        TraceStep::Dualize => ("dualize", None),
        TraceStep::MultiplierSearch { assignment } => (
            "multiplier_search",
            Some(match assignment {
                Some(z) => format!(
                    "found ({})",
                    z.iter().map(Var::to_string).collect::<Vec<_>>().join(",")
                ),
                None => "no independent assignment".to_string(),
            }),
        ),
        TraceStep::DeterminantStep { mat_x, mat_y, p } => (
            "determinant",
            Some(format!(
                "A = {}, B = {}, p(gamma) = {p}",
                inline_matrix(mat_x),
                inline_matrix(mat_y)
            )),
        ),
    }
}

fn kernel_detail(s: &Subspace) -> String {
    if s.is_zero() {
        "dim 0".to_string()
    } else {
        format!("dim {}, basis {}", s.dim(), inline_matrix(s.basis()))
    }
}

fn inline_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

/// Human-readable report. `witness`/`trace` toggle the optional sections.
pub fn text_report(
    file: &str,
    module: &GradedModule,
    report: &WlpReport,
    show_witness: bool,
    show_trace: bool,
) -> String {
    let mut out = String::new();
    let verdict = if report.verdict { "WLP" } else { "NO-WLP" };
    out.push_str(&format!("{file}: {verdict}\n"));
    let hf = module.hilbert_function();
    out.push_str(&format!(
        "  field: {}\n  Hilbert function: {} starting in degree {}\n",
        module.field(),
        hf,
        hf.shift
    ));
    let gens: Vec<String> = module
        .minimal_generator_degrees()
        .into_iter()
        .map(|(d, count)| format!("{count} in degree {}", module.shift() + d as i64))
        .collect();
    if !gens.is_empty() {
        out.push_str(&format!("  minimal generators: {}\n", gens.join(", ")));
    }
    if report.finite_field_caveat {
        out.push_str(
            "  note: finite field; the verdict describes the generic pencil and a witness may not exist in the field\n",
        );
    }
    if show_witness {
        match &report.witness {
            Some(w) => out.push_str(&format!("  witness: {w}\n")),
            None if report.verdict => out.push_str("  witness: none found in this field\n"),
            None => {}
        }
    }
    for c in &report.per_degree {
        out.push_str(&format!(
            "  degree {} -> {}: required rank {}, generic rank {}, method {}{}\n",
            c.degree,
            c.degree + 1,
            c.required_rank,
            c.generic_rank,
            c.method,
            if c.passes() { "" } else { "  [FAILS]" }
        ));
    }
    if !report.verdict {
        let failing: Vec<String> = report
            .per_degree
            .iter()
            .filter(|c| !c.passes())
            .map(|c| format!("{} -> {}", c.degree, c.degree + 1))
            .collect();
        out.push_str(&format!("  failing degrees: {}\n", failing.join(", ")));
    }
    if show_trace {
        out.push_str("  trace:\n");
        for e in &report.trace {
            let (kind, detail) = trace_parts(&e.step);
            match detail {
                Some(d) => out.push_str(&format!("    [degree {}] {kind}: {d}\n", e.degree)),
                None => out.push_str(&format!("    [degree {}] {kind}\n", e.degree)),
            }
        }
    }
    out
}

/// Rendering for the pencil-determinant certificates of the `gamma`
/// command.
pub fn gamma_text(file: &str, entries: &[(i64, UniPoly)]) -> String {
    let mut out = String::new();
    for (degree, p) in entries {
        out.push_str(&format!(
            "{file}: degree {} -> {}: p(gamma) = {p}\n",
            degree,
            degree + 1
        ));
    }
    out
}

#[derive(Serialize)]
pub struct JsonGamma {
    pub file: String,
    pub certificates: Vec<JsonGammaEntry>,
}

#[derive(Serialize)]
pub struct JsonGammaEntry {
    pub degree: i64,
    pub p: String,
    pub zero: bool,
}

pub fn gamma_json(file: &str, entries: &[(i64, UniPoly)]) -> JsonGamma {
    JsonGamma {
        file: file.to_string(),
        certificates: entries
            .iter()
            .map(|(degree, p)| JsonGammaEntry {
                degree: *degree,
                p: p.to_string(),
                zero: p.is_zero(),
            })
            .collect(),
    }
}
