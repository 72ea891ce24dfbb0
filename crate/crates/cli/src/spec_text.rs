//! The declarative spec grammar for Young functions and integrands:
//!
//! ```text
//! fn       := "catalog(" name ("," number)* ")"
//!           | "splice(" segment ("," segment)* ")"
//!           | "normalized(" fn ")"
//! segment  := "[(" lo "," hi "):" kind "]"
//! kind     := "power(" a "," r "," d ")"            // a·t^r + d
//!           | "scaled(" factor "," offset "," fn ")" // factor·Φ(t) + offset
//! ```
//!
//! `hi` may be `inf`. Spec files hold one entry per line: `name = fn`,
//! with `#` comments.

use orlicz_core::integrand::Integrand;
use orlicz_core::yf::{CatalogForm, Form, Segment, SegmentKind, YoungFunction};
use orlicz_core::GridSpec;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at {}:{}: {}",
            self.line, self.col, self.message
        )
    }
}

#[derive(Debug)]
pub enum SpecError {
    Syntax(ParseError),
    /// The text parsed but does not define a Young function (bad
    /// parameters or a violated axiom).
    Validation(String),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Syntax(e) => write!(f, "{e}"),
            SpecError::Validation(m) => write!(f, "validation error: {m}"),
        }
    }
}

struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let consumed = &self.src[..self.pos];
        let line = consumed.matches('\n').count() + 1;
        let col = consumed.chars().rev().take_while(|c| *c != '\n').count() + 1;
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, expected: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == expected => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{expected}', found '{c}'"))),
            None => Err(self.error(format!("expected '{expected}', found end of input"))),
        }
    }

    fn try_eat(&mut self, expected: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(expected) {
            self.pos += expected.len_utf8();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.error("expected an identifier"));
        }
        Ok(self.src[start..self.pos].to_ascii_lowercase())
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.src[self.pos..].starts_with("inf") {
            self.pos += 3;
            return Ok(f64::INFINITY);
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E') {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        self.src[start..self.pos].parse::<f64>().map_err(|_| {
            self.error(format!(
                "expected a number, found '{}'",
                &self.src[start..self.pos]
            ))
        })
    }

    fn number_list(&mut self) -> Result<Vec<f64>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            if self.peek() == Some(')') {
                break;
            }
            out.push(self.number()?);
            if !self.try_eat(',') {
                break;
            }
        }
        Ok(out)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }
}

fn catalog_from_parts(s: &Scanner, name: &str, args: &[f64]) -> Result<CatalogForm, SpecError> {
    let arity = |n: usize| -> Result<(), SpecError> {
        if args.len() != n {
            return Err(SpecError::Syntax(s.error(format!(
                "catalog '{name}' takes {n} parameter(s), got {}",
                args.len()
            ))));
        }
        Ok(())
    };
    let form = match name {
        "power" => {
            arity(1)?;
            CatalogForm::Power { p: args[0] }
        }
        "power_sum" => {
            arity(2)?;
            CatalogForm::PowerSum {
                q: args[0],
                p: args[1],
            }
        }
        "power_log" => {
            arity(2)?;
            CatalogForm::PowerLog {
                n: args[0],
                m: args[1],
            }
        }
        "power_exp" => {
            arity(1)?;
            CatalogForm::PowerExp { n: args[0] }
        }
        "power_log_shift" => {
            arity(0)?;
            CatalogForm::PowerLogShift
        }
        "exp_minus_one" => {
            arity(0)?;
            CatalogForm::ExpMinusOne
        }
        "flat_origin" => {
            arity(0)?;
            CatalogForm::FlatOrigin
        }
        "dual_23" => {
            arity(0)?;
            CatalogForm::Dual23
        }
        other => {
            return Err(SpecError::Syntax(
                s.error(format!("unknown catalog form '{other}'")),
            ))
        }
    };
    Ok(form)
}

fn parse_young_expr(s: &mut Scanner) -> Result<YoungFunction, SpecError> {
    let head = s.ident().map_err(SpecError::Syntax)?;
    s.eat('(').map_err(SpecError::Syntax)?;
    match head.as_str() {
        "catalog" => {
            let name = s.ident().map_err(SpecError::Syntax)?;
            let args = if s.try_eat(',') {
                s.number_list().map_err(SpecError::Syntax)?
            } else {
                Vec::new()
            };
            s.eat(')').map_err(SpecError::Syntax)?;
            let form = catalog_from_parts(s, &name, &args)?;
            YoungFunction::catalog(form).map_err(|e| SpecError::Validation(e.to_string()))
        }
        "splice" => {
            let mut segments = Vec::new();
            loop {
                segments.push(parse_segment(s)?);
                if !s.try_eat(',') {
                    break;
                }
            }
            s.eat(')').map_err(SpecError::Syntax)?;
            check_segment_order(s, &segments)?;
            let phi = YoungFunction::splice("splice", segments)
                .map_err(|e| SpecError::Validation(e.to_string()))?;
            Ok(phi)
        }
        "normalized" => {
            let inner = parse_young_expr(s)?;
            s.eat(')').map_err(SpecError::Syntax)?;
            Ok(inner.normalized())
        }
        other => Err(SpecError::Syntax(s.error(format!(
            "expected catalog/splice/normalized, found '{other}'"
        )))),
    }
}

fn check_segment_order(s: &Scanner, segments: &[Segment]) -> Result<(), SpecError> {
    for w in segments.windows(2) {
        if w[0].hi != w[1].lo {
            return Err(SpecError::Syntax(s.error(format!(
                "segment intervals are not contiguous: ({}, {}] then ({}, {}]",
                w[0].lo, w[0].hi, w[1].lo, w[1].hi
            ))));
        }
    }
    Ok(())
}

fn parse_segment(s: &mut Scanner) -> Result<Segment, SpecError> {
    s.eat('[').map_err(SpecError::Syntax)?;
    s.eat('(').map_err(SpecError::Syntax)?;
    let lo = s.number().map_err(SpecError::Syntax)?;
    s.eat(',').map_err(SpecError::Syntax)?;
    let hi = s.number().map_err(SpecError::Syntax)?;
    s.eat(')').map_err(SpecError::Syntax)?;
    s.eat(':').map_err(SpecError::Syntax)?;
    let kind_name = s.ident().map_err(SpecError::Syntax)?;
    s.eat('(').map_err(SpecError::Syntax)?;
    let kind = match kind_name.as_str() {
        "power" => {
            let args = s.number_list().map_err(SpecError::Syntax)?;
            if args.len() != 3 {
                return Err(SpecError::Syntax(s.error(format!(
                    "power segment takes (a, r, d), got {} numbers",
                    args.len()
                ))));
            }
            SegmentKind::Power {
                coeff: args[0],
                exponent: args[1],
                offset: args[2],
            }
        }
        "scaled" => {
            let factor = s.number().map_err(SpecError::Syntax)?;
            s.eat(',').map_err(SpecError::Syntax)?;
            let offset = s.number().map_err(SpecError::Syntax)?;
            s.eat(',').map_err(SpecError::Syntax)?;
            let base = parse_young_expr(s)?;
            SegmentKind::ScaledBase {
                base: Arc::new(base),
                factor,
                offset,
            }
        }
        other => {
            return Err(SpecError::Syntax(
                s.error(format!("unknown segment kind '{other}'")),
            ))
        }
    };
    s.eat(')').map_err(SpecError::Syntax)?;
    s.eat(']').map_err(SpecError::Syntax)?;
    Ok(Segment { lo, hi, kind })
}

/// Parse one Young-function expression without the axiom sweep; the
/// `validate` command uses this so it can report on broken input.
pub fn parse_young_unchecked(src: &str) -> Result<YoungFunction, SpecError> {
    let mut s = Scanner::new(src);
    let phi = parse_young_expr(&mut s)?;
    if !s.at_end() {
        return Err(SpecError::Syntax(
            s.error("trailing input after the expression"),
        ));
    }
    Ok(phi)
}

/// Parse one Young-function expression and validate the axioms on a
/// moderate grid.
pub fn parse_young(src: &str) -> Result<YoungFunction, SpecError> {
    let phi = parse_young_unchecked(src)?;
    let report = phi.validate(&GridSpec::new(1e-6, 1e6, 128));
    if !report.is_valid() {
        let mut reasons = Vec::new();
        if !report.monotonicity_violations.is_empty() {
            reasons.push(format!(
                "monotonicity fails near t = {:.6e}",
                report.monotonicity_violations[0].0
            ));
        }
        if !report.convexity_violations.is_empty() {
            let v = &report.convexity_violations[0];
            reasons.push(format!(
                "convexity fails between t = {:.6e} and t = {:.6e}",
                v.t1, v.t2
            ));
        }
        for m in report.knot_mismatches.iter().take(2) {
            reasons.push(format!("{:?} mismatch at knot {}", m.kind, m.knot));
        }
        return Err(SpecError::Validation(reasons.join("; ")));
    }
    Ok(phi)
}

/// Integrand grammar: `cauchy_power(s)`, `gauss_quad(n)`,
/// `indicator(m, h)`, `separable(f, g)`, `finite_sum((w, f), ...)`,
/// `zero(d)`.
pub fn parse_integrand(src: &str) -> Result<Integrand, SpecError> {
    let mut s = Scanner::new(src);
    let f = parse_integrand_expr(&mut s)?;
    if !s.at_end() {
        return Err(SpecError::Syntax(
            s.error("trailing input after the expression"),
        ));
    }
    Ok(f)
}

fn parse_integrand_expr(s: &mut Scanner) -> Result<Integrand, SpecError> {
    let head = s.ident().map_err(SpecError::Syntax)?;
    s.eat('(').map_err(SpecError::Syntax)?;
    let f = match head.as_str() {
        "cauchy_power" => {
            let v = s.number().map_err(SpecError::Syntax)?;
            Integrand::cauchy_power(v).map_err(|e| SpecError::Validation(e.to_string()))?
        }
        "gauss_quad" => {
            let v = s.number().map_err(SpecError::Syntax)?;
            Integrand::gauss_quad(v).map_err(|e| SpecError::Validation(e.to_string()))?
        }
        "indicator" => {
            let m = s.number().map_err(SpecError::Syntax)?;
            s.eat(',').map_err(SpecError::Syntax)?;
            let h = s.number().map_err(SpecError::Syntax)?;
            Integrand::indicator(m, h).map_err(|e| SpecError::Validation(e.to_string()))?
        }
        "separable" => {
            let fx = parse_integrand_expr(s)?;
            s.eat(',').map_err(SpecError::Syntax)?;
            let fy = parse_integrand_expr(s)?;
            Integrand::separable(fx, fy).map_err(|e| SpecError::Validation(e.to_string()))?
        }
        "finite_sum" => {
            let mut terms = Vec::new();
            loop {
                s.eat('(').map_err(SpecError::Syntax)?;
                let w = s.number().map_err(SpecError::Syntax)?;
                s.eat(',').map_err(SpecError::Syntax)?;
                let f = parse_integrand_expr(s)?;
                s.eat(')').map_err(SpecError::Syntax)?;
                terms.push((w, f));
                if !s.try_eat(',') {
                    break;
                }
            }
            Integrand::finite_sum(terms).map_err(|e| SpecError::Validation(e.to_string()))?
        }
        "zero" => {
            let d = s.number().map_err(SpecError::Syntax)? as usize;
            if d != 1 && d != 2 {
                return Err(SpecError::Validation("zero(d) needs d in {1, 2}".into()));
            }
            Integrand::zero(d)
        }
        other => {
            return Err(SpecError::Syntax(
                s.error(format!("unknown integrand form '{other}'")),
            ))
        }
    };
    s.eat(')').map_err(SpecError::Syntax)?;
    Ok(f)
}

/// `--moments "2:1.5707963, 3:1"` → [(2.0, 1.5707963), (3.0, 1.0)].
pub fn parse_moments(src: &str) -> Result<Vec<(f64, f64)>, SpecError> {
    let mut out = Vec::new();
    for part in src.split(',') {
        let piece = part.trim();
        if piece.is_empty() {
            continue;
        }
        let (e, v) = piece.split_once(':').ok_or_else(|| {
            SpecError::Syntax(ParseError {
                line: 1,
                col: 1,
                message: format!("moment entry '{piece}' must look like exponent:value"),
            })
        })?;
        let parse = |x: &str| {
            x.trim().parse::<f64>().map_err(|_| {
                SpecError::Syntax(ParseError {
                    line: 1,
                    col: 1,
                    message: format!("'{x}' is not a number"),
                })
            })
        };
        out.push((parse(e)?, parse(v)?));
    }
    if out.is_empty() {
        return Err(SpecError::Validation("no moments given".into()));
    }
    Ok(out)
}

/// Spec file: `name = fn` entries, `#` comments, blank lines.
pub fn parse_spec_file(src: &str) -> Result<Vec<(String, YoungFunction)>, SpecError> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, expr) = line.split_once('=').ok_or_else(|| {
            SpecError::Syntax(ParseError {
                line: i + 1,
                col: 1,
                message: "entry must look like 'name = fn'".into(),
            })
        })?;
        let phi = parse_young(expr.trim()).map_err(|e| match e {
            SpecError::Syntax(mut p) => {
                p.line = i + 1;
                SpecError::Syntax(p)
            }
            other => other,
        })?;
        out.push((
            name.trim().to_string(),
            phi.with_name(name.trim().to_string()),
        ));
    }
    Ok(out)
}

/// Render a Young function back into the grammar. Catalog forms, splices
/// (with renderable bases), and normalized wrappers round-trip; combined
/// forms have no textual representation.
pub fn render_young(phi: &YoungFunction) -> Result<String, String> {
    match phi.form() {
        Form::Catalog(c) => Ok(match c {
            CatalogForm::Power { p } => format!("catalog(power, {p})"),
            CatalogForm::PowerSum { q, p } => format!("catalog(power_sum, {q}, {p})"),
            CatalogForm::PowerLog { n, m } => format!("catalog(power_log, {n}, {m})"),
            CatalogForm::PowerExp { n } => format!("catalog(power_exp, {n})"),
            CatalogForm::PowerLogShift => "catalog(power_log_shift)".into(),
            CatalogForm::ExpMinusOne => "catalog(exp_minus_one)".into(),
            CatalogForm::FlatOrigin => "catalog(flat_origin)".into(),
            CatalogForm::Dual23 => "catalog(dual_23)".into(),
        }),
        Form::Scaled { base, .. } => Ok(format!("normalized({})", render_young(base)?)),
        Form::Splice(segments) => {
            let mut parts = Vec::new();
            for seg in segments {
                let hi = if seg.hi.is_infinite() {
                    "inf".to_string()
                } else {
                    format!("{}", seg.hi)
                };
                let body = match &seg.kind {
                    SegmentKind::Power {
                        coeff,
                        exponent,
                        offset,
                    } => {
                        format!("power({coeff}, {exponent}, {offset})")
                    }
                    SegmentKind::ScaledBase {
                        base,
                        factor,
                        offset,
                    } => {
                        format!("scaled({factor}, {offset}, {})", render_young(base)?)
                    }
                };
                parts.push(format!("[({}, {}): {}]", seg.lo, hi, body));
            }
            Ok(format!("splice({})", parts.join(", ")))
        }
        _ => Err(format!("{} has no spec-text representation", phi.name())),
    }
}
