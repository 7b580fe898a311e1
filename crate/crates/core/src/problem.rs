//! Problem files: a ring, optional relations, named abbreviations, a
//! derivation, an optional kernel and options.
//!
//! ```text
//! [ring]
//! x, y, z
//! weights = 1, 1, 1
//!
//! [define]
//! F = x*z - y^2
//!
//! [derivation]
//! x -> 0
//! y -> x
//! z -> 2*y
//!
//! [kernel]
//! x
//! F
//!
//! [options]
//! chain_cap = 64
//! ```

use std::collections::HashMap;

use crate::degmod::{DegmodOptions, InitialPolicy, DEFAULT_CHAIN_CAP};
use crate::groebner::QuotientContext;
use crate::lnd::{Derivation, DEFAULT_NILPOTENCY_CAP};
use crate::poly::{PolyParser, Polynomial, Ring};
use crate::subalg::SubalgebraPresentation;
use crate::{Error, Result};

/// Default cap on the exponent used to clear denominators of modifications.
pub const DEFAULT_EXPONENT_CAP: u32 = 16;

#[derive(Clone, Debug)]
pub struct ProblemOptions {
    pub nilpotency_cap: usize,
    pub chain_cap: usize,
    pub exponent_cap: u32,
    pub kernel_rounds: usize,
    pub policy: InitialPolicy,
    pub interleave_factors: bool,
}

impl Default for ProblemOptions {
    fn default() -> Self {
        ProblemOptions {
            nilpotency_cap: DEFAULT_NILPOTENCY_CAP,
            chain_cap: DEFAULT_CHAIN_CAP,
            exponent_cap: DEFAULT_EXPONENT_CAP,
            kernel_rounds: DEFAULT_CHAIN_CAP,
            policy: InitialPolicy::Auto,
            interleave_factors: false,
        }
    }
}

impl ProblemOptions {
    pub fn degmod(&self) -> DegmodOptions {
        DegmodOptions {
            policy: self.policy,
            chain_cap: self.chain_cap,
            interleave_factors: self.interleave_factors,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub ring: Ring,
    pub relations: Vec<Polynomial>,
    pub definitions: Vec<(String, Polynomial)>,
    pub derivation: Vec<Polynomial>,
    pub kernel: Option<Vec<(String, Polynomial)>>,
    pub options: ProblemOptions,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_alphanumeric() || ch == '_')
}

/// Column (1-based) of the first non-space character of `part` inside `line`.
fn col_of(line: &str, part: &str) -> usize {
    let off = part.as_ptr() as usize - line.as_ptr() as usize;
    line[..off].chars().count() + 1
}

impl Problem {
    pub fn parse(src: &str) -> Result<Problem> {
        let mut section: Option<String> = None;
        let mut ring: Option<Ring> = None;
        let mut weights: Option<Vec<u32>> = None;
        let mut relations = Vec::new();
        let mut definitions: Vec<(String, Polynomial)> = Vec::new();
        let mut defs: HashMap<String, Polynomial> = HashMap::new();
        let mut derivation: Vec<Option<Polynomial>> = Vec::new();
        let mut kernel: Option<Vec<(String, Polynomial)>> = None;
        let mut options = ProblemOptions::default();
        let mut seen = std::collections::HashSet::new();

        for (idx, raw) in src.lines().enumerate() {
            let lineno = idx + 1;
            let content = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            let text = content.trim();
            if text.is_empty() {
                continue;
            }
            if text.starts_with('[') {
                if !text.ends_with(']') {
                    return Err(perr(
                        lineno,
                        col_of(raw, text),
                        "unterminated section header",
                    ));
                }
                let name = text[1..text.len() - 1].trim().to_string();
                if ![
                    "ring",
                    "relations",
                    "define",
                    "derivation",
                    "kernel",
                    "options",
                ]
                .contains(&name.as_str())
                {
                    return Err(perr(
                        lineno,
                        col_of(raw, text),
                        format!("unknown section [{name}]"),
                    ));
                }
                if !seen.insert(name.clone()) {
                    return Err(perr(
                        lineno,
                        col_of(raw, text),
                        format!("duplicate section [{name}]"),
                    ));
                }
                if name != "ring" && name != "options" && ring.is_none() {
                    return Err(perr(lineno, col_of(raw, text), "[ring] must come first"));
                }
                if name == "kernel" {
                    kernel = Some(Vec::new());
                }
                section = Some(name);
                continue;
            }
            let Some(sec) = section.as_deref() else {
                return Err(perr(
                    lineno,
                    col_of(raw, text),
                    "content outside of a section",
                ));
            };
            match sec {
                "ring" => {
                    if let Some(rest) = text.strip_prefix("weights") {
                        let rest = rest.trim_start();
                        let Some(list) = rest.strip_prefix('=') else {
                            return Err(perr(
                                lineno,
                                col_of(raw, text),
                                "expected `weights = ...`",
                            ));
                        };
                        let mut w = Vec::new();
                        for part in list.split(',') {
                            let t = part.trim();
                            let v: u32 = t.parse().ok().filter(|&v| v > 0).ok_or_else(|| {
                                perr(lineno, col_of(raw, t), format!("invalid weight `{t}`"))
                            })?;
                            w.push(v);
                        }
                        weights = Some(w);
                        continue;
                    }
                    if ring.is_some() {
                        return Err(perr(
                            lineno,
                            col_of(raw, text),
                            "variables already declared",
                        ));
                    }
                    let mut names = Vec::new();
                    for part in text.split(',') {
                        let t = part.trim();
                        if !is_identifier(t) {
                            return Err(perr(
                                lineno,
                                col_of(raw, t),
                                format!("invalid variable name `{t}`"),
                            ));
                        }
                        if names.contains(&t) {
                            return Err(perr(
                                lineno,
                                col_of(raw, t),
                                format!("duplicate variable `{t}`"),
                            ));
                        }
                        names.push(t);
                    }
                    let r = Ring::new(&names);
                    derivation = vec![None; r.nvars()];
                    ring = Some(r);
                }
                "relations" => {
                    let r = ring.as_ref().unwrap();
                    let p = PolyParser::with_definitions(r, &defs).parse_at(
                        text,
                        lineno,
                        col_of(raw, text) - 1,
                    )?;
                    relations.push(p);
                }
                "define" => {
                    let r = ring.as_ref().unwrap();
                    let Some(eq) = text.find('=') else {
                        return Err(perr(
                            lineno,
                            col_of(raw, text),
                            "expected `NAME = expression`",
                        ));
                    };
                    let name = text[..eq].trim();
                    if !is_identifier(name) {
                        return Err(perr(
                            lineno,
                            col_of(raw, text),
                            format!("invalid name `{name}`"),
                        ));
                    }
                    if r.index_of(name).is_some() || defs.contains_key(name) {
                        return Err(perr(
                            lineno,
                            col_of(raw, text),
                            format!("`{name}` is already defined"),
                        ));
                    }
                    let rhs = &text[eq + 1..];
                    let p = PolyParser::with_definitions(r, &defs).parse_at(
                        rhs,
                        lineno,
                        col_of(raw, rhs) - 1,
                    )?;
                    defs.insert(name.to_string(), p.clone());
                    definitions.push((name.to_string(), p));
                }
                "derivation" => {
                    let r = ring.as_ref().unwrap();
                    let Some(arrow) = text.find("->") else {
                        return Err(perr(
                            lineno,
                            col_of(raw, text),
                            "expected `variable -> image`",
                        ));
                    };
                    let name = text[..arrow].trim();
                    let Some(i) = r.index_of(name) else {
                        return Err(perr(
                            lineno,
                            col_of(raw, text),
                            format!("unknown variable `{name}`"),
                        ));
                    };
                    if derivation[i].is_some() {
                        return Err(perr(
                            lineno,
                            col_of(raw, text),
                            format!("image of `{name}` given twice"),
                        ));
                    }
                    let rhs = &text[arrow + 2..];
                    let p = PolyParser::with_definitions(r, &defs).parse_at(
                        rhs,
                        lineno,
                        col_of(raw, rhs) - 1,
                    )?;
                    derivation[i] = Some(p);
                }
                "kernel" => {
                    let r = ring.as_ref().unwrap();
                    let p = PolyParser::with_definitions(r, &defs).parse_at(
                        text,
                        lineno,
                        col_of(raw, text) - 1,
                    )?;
                    let k = kernel.as_mut().unwrap();
                    let name = if is_identifier(text) {
                        text.to_string()
                    } else {
                        format!("Y{}", k.len() + 1)
                    };
                    k.push((name, p));
                }
                "options" => {
                    let Some(eq) = text.find('=') else {
                        return Err(perr(lineno, col_of(raw, text), "expected `key = value`"));
                    };
                    let key = text[..eq].trim();
                    let val = text[eq + 1..].trim();
                    let col = col_of(raw, text);
                    let num = |v: &str| -> Result<usize> {
                        v.parse().map_err(|_| {
                            perr(lineno, col, format!("invalid value `{v}` for {key}"))
                        })
                    };
                    match key {
                        "nilpotency_cap" => options.nilpotency_cap = num(val)?,
                        "chain_cap" => options.chain_cap = num(val)?,
                        "kernel_rounds" => options.kernel_rounds = num(val)?,
                        "exponent_cap" => options.exponent_cap = num(val)? as u32,
                        "policy" => {
                            options.policy = match val {
                                "auto" => InitialPolicy::Auto,
                                "products" => InitialPolicy::Products,
                                "slice-powers" => InitialPolicy::SlicePowers,
                                _ => {
                                    return Err(perr(
                                        lineno,
                                        col,
                                        format!("unknown policy `{val}`"),
                                    ))
                                }
                            }
                        }
                        "interleave_factors" => {
                            options.interleave_factors = match val {
                                "true" => true,
                                "false" => false,
                                _ => {
                                    return Err(perr(
                                        lineno,
                                        col,
                                        format!("expected true or false, got `{val}`"),
                                    ))
                                }
                            }
                        }
                        _ => return Err(perr(lineno, col, format!("unknown option `{key}`"))),
                    }
                }
                _ => unreachable!(),
            }
        }
        let Some(mut ring) = ring else {
            return Err(perr(1, 1, "missing [ring] section"));
        };
        if let Some(w) = weights {
            if w.len() != ring.nvars() {
                return Err(Error::Input(format!(
                    "{} weights given for {} variables",
                    w.len(),
                    ring.nvars()
                )));
            }
            let rw = ring.with_weights(w);
            let names: Vec<usize> = (0..ring.nvars()).collect();
            relations = relations.iter().map(|p| p.embed(&rw, &names)).collect();
            definitions = definitions
                .iter()
                .map(|(n, p)| (n.clone(), p.embed(&rw, &names)))
                .collect();
            kernel = kernel.map(|k| {
                k.iter()
                    .map(|(n, p)| (n.clone(), p.embed(&rw, &names)))
                    .collect()
            });
            for d in derivation.iter_mut() {
                if let Some(p) = d {
                    *d = Some(p.embed(&rw, &names));
                }
            }
            ring = rw;
        }
        let mut images = Vec::with_capacity(ring.nvars());
        for (i, d) in derivation.into_iter().enumerate() {
            match d {
                Some(p) => images.push(p),
                None => {
                    return Err(Error::Input(format!(
                        "missing derivation image for `{}`",
                        ring.name(i)
                    )))
                }
            }
        }
        Ok(Problem {
            ring,
            relations,
            definitions,
            derivation: images,
            kernel,
            options,
        })
    }

    pub fn quotient(&self) -> Result<QuotientContext> {
        QuotientContext::new(&self.ring, self.relations.clone())
    }

    /// The derivation, checked for well-definedness but not yet for nilpotency.
    pub fn derivation(&self) -> Result<Derivation> {
        Derivation::on_quotient(&self.quotient()?, self.derivation.clone())
    }

    /// The kernel given in the file, as a presentation.
    pub fn kernel_presentation(&self) -> Result<Option<SubalgebraPresentation>> {
        let Some(k) = &self.kernel else {
            return Ok(None);
        };
        let names: Vec<String> = k.iter().map(|(n, _)| n.clone()).collect();
        let gens: Vec<Polynomial> = k.iter().map(|(_, p)| p.clone()).collect();
        let a = SubalgebraPresentation::in_quotient(&self.quotient()?, gens, Some(names))?;
        Ok(Some(a))
    }

    /// Value of a `[define]` abbreviation.
    pub fn definition(&self, name: &str) -> Option<&Polynomial> {
        self.definitions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
    }
}
