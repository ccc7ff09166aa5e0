//! The module-specification file format.
//!
//! Files are line-oriented `key = value` with `#` comments:
//!
//! ```text
//! field = Q            # or GF(p)
//! module = <expr>
//! ```
//!
//! where `<expr>` (which may continue over following lines) is one of
//!
//! ```text
//! submodule(ideal = <ideal>, gens = (<poly>, <poly>, ...))
//! cyclic(<ideal>)
//! sum(<expr>, <expr>, ...)
//! dual(<expr>)
//! shift(<expr>, <int>)
//! ```
//!
//! Ideals are sums of parenthesized generator lists, where only the group
//! `(x, y)` may carry a power, e.g. `(x,y)^8 + (x^2*y^5, x^4*y^3)`.

use std::fmt;

use lefschetz::field::FieldSpec;
use lefschetz::poly::{
    parse_ideal_expr_at, parse_poly_at, BiPoly, Cursor, IdealExpr, ParseError,
};

/// A parsed specification: the field and the construction tree.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleSpec {
    pub field: FieldSpec,
    pub expr: ModuleExpr,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModuleExpr {
    QuotientSubmodule { ideal: IdealExpr, gens: Vec<BiPoly> },
    Cyclic { ideal: IdealExpr },
    Sum(Vec<ModuleExpr>),
    Dual(Box<ModuleExpr>),
    Shift(Box<ModuleExpr>, i64),
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::QuotientSubmodule { ideal, gens } => {
                write!(f, "submodule(ideal = {ideal}, gens = (")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, "))")
            }
            ModuleExpr::Cyclic { ideal } => write!(f, "cyclic({ideal})"),
            ModuleExpr::Sum(parts) => {
                write!(f, "sum(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            ModuleExpr::Dual(inner) => write!(f, "dual({inner})"),
            ModuleExpr::Shift(inner, k) => write!(f, "shift({inner}, {k})"),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field = {}", self.field)?;
        writeln!(f, "module = {}", self.expr)
    }
}

/// Parse a complete specification file.
pub fn parse_spec(text: &str) -> Result<ModuleSpec, ParseError> {
    let mut field: Option<FieldSpec> = None;
    let mut module: Option<(String, usize)> = None; // (expr text, 1-based line)

    let mut current: Option<(String, String, usize)> = None; // key, value, line
    let mut entries: Vec<(String, String, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = line.trim_start();
        let key = ["field", "module"]
            .iter()
            .find(|k| {
                trimmed.starts_with(**k)
                    && trimmed[k.len()..].trim_start().starts_with('=')
            })
            .copied();
        if let Some(key) = key {
            if let Some(entry) = current.take() {
                entries.push(entry);
            }
            let value = trimmed[key.len()..].trim_start()[1..].to_string();
            current = Some((key.to_string(), value, idx + 1));
        } else if let Some(("module", value, _)) = current
            .as_mut()
            .map(|(k, v, l)| (k.as_str(), v, l))
        {
            // only module expressions may continue over following lines
            value.push('\n');
            value.push_str(line);
        } else if !line.trim().is_empty() {
            return Err(ParseError {
                line: idx + 1,
                col: 1,
                message: "expected `field = ...` or `module = ...`".into(),
            });
        }
    }
    if let Some(entry) = current.take() {
        entries.push(entry);
    }

    for (key, value, line) in entries {
        match key.as_str() {
            "field" => {
                let v = value.trim();
                field = Some(parse_field(v).ok_or(ParseError {
                    line,
                    col: 1,
                    message: format!("unknown field `{v}`; expected Q or GF(p)"),
                })?);
            }
            "module" => {
                if module.is_some() {
                    return Err(ParseError {
                        line,
                        col: 1,
                        message: "duplicate `module` entry".into(),
                    });
                }
                module = Some((value, line));
            }
            _ => unreachable!(),
        }
    }

    let field = field.unwrap_or(FieldSpec::Rationals);
    let (module_text, line) = module.ok_or(ParseError {
        line: text.lines().count().max(1),
        col: 1,
        message: "missing `module = ...` entry".into(),
    })?;
    let mut cur = Cursor::with_origin(&module_text, line, 1);
    let expr = parse_expr(&mut cur, field)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input after module expression"));
    }
    Ok(ModuleSpec { field, expr })
}

fn parse_field(text: &str) -> Option<FieldSpec> {
    if text == "Q" {
        return Some(FieldSpec::Rationals);
    }
    let inner = text.strip_prefix("GF(")?.strip_suffix(')')?;
    let p: u64 = inner.trim().parse().ok()?;
    FieldSpec::prime(p).ok()
}

fn parse_expr(cur: &mut Cursor<'_>, field: FieldSpec) -> Result<ModuleExpr, ParseError> {
    cur.skip_ws();
    let name = parse_ident(cur)?;
    match name.as_str() {
        "submodule" => {
            cur.expect('(')?;
            expect_keyword(cur, "ideal")?;
            cur.expect('=')?;
            let ideal = parse_ideal_expr_at(cur, field)?;
            cur.expect(',')?;
            expect_keyword(cur, "gens")?;
            cur.expect('=')?;
            cur.expect('(')?;
            cur.skip_ws();
            if cur.peek() == Some(')') {
                return Err(cur.error("generator list must not be empty"));
            }
            let mut gens = vec![parse_poly_at(cur, field)?];
            while cur.eat(',') {
                gens.push(parse_poly_at(cur, field)?);
            }
            cur.expect(')')?;
            cur.expect(')')?;
            Ok(ModuleExpr::QuotientSubmodule { ideal, gens })
        }
        "cyclic" => {
            cur.expect('(')?;
            let ideal = parse_ideal_expr_at(cur, field)?;
            cur.expect(')')?;
            Ok(ModuleExpr::Cyclic { ideal })
        }
        "sum" => {
            cur.expect('(')?;
            let mut parts = vec![parse_expr(cur, field)?];
            while cur.eat(',') {
                parts.push(parse_expr(cur, field)?);
            }
            cur.expect(')')?;
            Ok(ModuleExpr::Sum(parts))
        }
        "dual" => {
            cur.expect('(')?;
            let inner = parse_expr(cur, field)?;
            cur.expect(')')?;
            Ok(ModuleExpr::Dual(Box::new(inner)))
        }
        "shift" => {
            cur.expect('(')?;
            let inner = parse_expr(cur, field)?;
            cur.expect(',')?;
            cur.skip_ws();
            let negative = cur.eat('-');
            let k = cur.parse_uint()? as i64;
            cur.expect(')')?;
            Ok(ModuleExpr::Shift(
                Box::new(inner),
                if negative { -k } else { k },
            ))
        }
        other => Err(cur.error(format!(
            "unknown construction `{other}`; expected submodule, cyclic, sum, dual, or shift"
        ))),
    }
}

fn parse_ident(cur: &mut Cursor<'_>) -> Result<String, ParseError> {
    cur.skip_ws();
    let mut s = String::new();
    while matches!(cur.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_') {
        s.push(cur.bump().unwrap());
    }
    if s.is_empty() {
        return Err(cur.error("expected an identifier"));
    }
    Ok(s)
}

fn expect_keyword(cur: &mut Cursor<'_>, kw: &str) -> Result<(), ParseError> {
    let got = parse_ident(cur)?;
    if got != kw {
        return Err(cur.error(format!("expected `{kw}`, found `{got}`")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_submodule_spec() {
        let text = "\
# the vanishing-pencil module
field = Q
module = submodule(ideal = (x,y)^8 + (x^2*y^5, x^4*y^3), gens = (x^6, x^2*y^4, x^3*y^3))
";
        let spec = parse_spec(text).unwrap();
        assert_eq!(spec.field, FieldSpec::Rationals);
        match &spec.expr {
            ModuleExpr::QuotientSubmodule { ideal, gens } => {
                assert_eq!(ideal.groups.len(), 2);
                assert_eq!(gens.len(), 3);
            }
            other => panic!("unexpected expr {other:?}"),
        }
    }

    #[test]
    fn parses_a_sum_of_cyclics() {
        let text = "field = Q\nmodule = sum(cyclic((x^2, x*y, y^2)), cyclic((x, y)))\n";
        let spec = parse_spec(text).unwrap();
        match &spec.expr {
            ModuleExpr::Sum(parts) => assert_eq!(parts.len(), 2),
            other => panic!("unexpected expr {other:?}"),
        }
    }

    #[test]
    fn empty_generator_list_is_a_parse_error() {
        let text = "field = Q\nmodule = submodule(ideal = (x, y), gens = ())\n";
        let err = parse_spec(text).unwrap_err();
        assert!(err.message.contains("must not be empty"), "{err}");
    }

    #[test]
    fn field_defaults_to_the_rationals() {
        let spec = parse_spec("module = cyclic((x, y))\n").unwrap();
        assert_eq!(spec.field, FieldSpec::Rationals);
    }

    #[test]
    fn prime_fields_are_validated() {
        let err = parse_spec("field = GF(6)\nmodule = cyclic((x, y))\n").unwrap_err();
        assert!(err.message.contains("unknown field"), "{err}");
        let spec = parse_spec("field = GF(7)\nmodule = cyclic((x, y))\n").unwrap();
        assert_eq!(spec.field, FieldSpec::prime(7).unwrap());
    }

    #[test]
    fn multiline_module_expressions_parse() {
        let text = "\
field = Q
module = sum(
    cyclic((x, y^2)),
    shift(dual(cyclic((x, y^2))), 1)
)
";
        let spec = parse_spec(text).unwrap();
        match &spec.expr {
            ModuleExpr::Sum(parts) => {
                assert_eq!(parts.len(), 2);
                assert!(matches!(parts[1], ModuleExpr::Shift(_, 1)));
            }
            other => panic!("unexpected expr {other:?}"),
        }
    }

    #[test]
    fn print_parse_round_trip_on_asts() {
        let texts = [
            "field = Q\nmodule = submodule(ideal = (x,y)^8 + (x^2*y^5, x^4*y^3), gens = (x^6 + x^2*y^4, x^6 - x^2*y^4, x^3*y^3))\n",
            "field = Q\nmodule = sum(cyclic((x^2, x*y, y^2)), dual(shift(cyclic((x, y)), -2)))\n",
            "field = GF(13)\nmodule = cyclic((x, y)^3 + (x*y))\n",
        ];
        for text in texts {
            let spec = parse_spec(text).unwrap();
            let printed = spec.to_string();
            assert_eq!(parse_spec(&printed).unwrap(), spec, "round trip of {text}");
        }
    }

    #[test]
    fn errors_carry_file_positions() {
        let err = parse_spec("field = Q\nmodule = cyclic((x, y)\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_spec("field = Q\nnonsense\n").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
