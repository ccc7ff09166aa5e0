//! Turn a parsed specification tree into a graded module.

use thiserror::Error;

use lefschetz::module::{cyclic, direct_sum, from_quotient_submodule, GradedModule, ModuleError};
use lefschetz::poly::PolyError;

use crate::spec::{ModuleExpr, ModuleSpec};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum BuildError {
    #[error("{0}")]
    Ideal(#[from] PolyError),
    #[error("{0}")]
    Module(#[from] ModuleError),
}

pub fn build_module(spec: &ModuleSpec) -> Result<GradedModule, BuildError> {
    build_expr(&spec.expr, spec)
}

fn build_expr(expr: &ModuleExpr, spec: &ModuleSpec) -> Result<GradedModule, BuildError> {
    match expr {
        ModuleExpr::QuotientSubmodule { ideal, gens } => {
            let gens_expanded = ideal.expand(spec.field)?;
            Ok(from_quotient_submodule(&gens_expanded, gens, spec.field)?)
        }
        ModuleExpr::Cyclic { ideal } => {
            let gens_expanded = ideal.expand(spec.field)?;
            Ok(cyclic(&gens_expanded, spec.field)?)
        }
        ModuleExpr::Sum(parts) => {
            let built: Result<Vec<GradedModule>, BuildError> =
                parts.iter().map(|p| build_expr(p, spec)).collect();
            Ok(direct_sum(&built?)?)
        }
        ModuleExpr::Dual(inner) => Ok(build_expr(inner, spec)?.dual()),
        ModuleExpr::Shift(inner, k) => Ok(build_expr(inner, spec)?.shifted(*k)),
    }
}
