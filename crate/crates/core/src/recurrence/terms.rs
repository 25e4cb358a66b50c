//! Parametric term tables: each term is `c * (-1)^{sign} * y^{exponent}`
//! where `sign` and `exponent` are affine forms in named integer symbols.
//!
//! Text format, one record per line:
//!
//! ```text
//! # comment
//! symbols: p k q
//! 2 ; 1 + p ; p + 2q + 2k + 3
//! ```

use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

const DUMBBELL_TABLE: &str = include_str!("../../data/f_dumbbell.terms");
const THETA_TABLE: &str = include_str!("../../data/f_theta.terms");

/// `constant + Σ coeff * symbol`
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AffineForm {
    pub constant: i64,
    pub coeffs: BTreeMap<String, i64>,
}

impl AffineForm {
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty expression".into());
        }
        let mut form = AffineForm::default();
        let bytes = compact.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                sign = if bytes[i] == b'-' { -1 } else { 1 };
                i += 1;
            } else if i > 0 {
                return Err(format!("expected '+' or '-' at '{}'", &compact[i..]));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let number = if i > start {
                Some(
                    compact[start..i]
                        .parse::<i64>()
                        .map_err(|e| format!("bad integer: {e}"))?,
                )
            } else {
                None
            };
            if i < bytes.len() && bytes[i] == b'*' {
                if number.is_none() {
                    return Err("'*' without a preceding integer".into());
                }
                i += 1;
            }
            let sym_start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                i += 1;
            }
            let symbol = &compact[sym_start..i];
            match (number, symbol.is_empty()) {
                (None, true) => return Err(format!("dangling sign in '{compact}'")),
                (Some(c), true) => form.constant += sign * c,
                (c, false) => {
                    *form.coeffs.entry(symbol.to_string()).or_insert(0) += sign * c.unwrap_or(1)
                }
            }
        }
        form.coeffs.retain(|_, c| *c != 0);
        Ok(form)
    }

    pub fn eval(&self, bindings: &BTreeMap<&str, i64>) -> Result<i64> {
        let mut total = self.constant;
        for (sym, c) in &self.coeffs {
            let v = bindings.get(sym.as_str()).ok_or_else(|| {
                Error::InvalidParams(format!("no value bound for symbol '{sym}'"))
            })?;
            total += c * v;
        }
        Ok(total)
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(s, &c)| match c {
                1 => s.clone(),
                -1 => format!("-{s}"),
                _ => format!("{c}{s}"),
            })
            .collect();
        if self.constant != 0 || parts.is_empty() {
            parts.push(self.constant.to_string());
        }
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coefficient: i64,
    /// Power of `-1`.
    pub sign: AffineForm,
    pub exponent: AffineForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermTable {
    pub symbols: Vec<String>,
    pub terms: Vec<Term>,
}

impl TermTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut symbols: Option<Vec<String>> = None;
        let mut terms = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |reason: String| Error::TermTable {
                line: line_no,
                reason,
            };
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("symbols:") {
                symbols = Some(rest.split_whitespace().map(str::to_string).collect());
                continue;
            }
            let declared = symbols
                .as_ref()
                .ok_or_else(|| err("term before 'symbols:' declaration".into()))?;
            let fields: Vec<&str> = line.split(';').collect();
            if fields.len() != 3 {
                return Err(err(format!(
                    "expected 3 ';'-separated fields, got {}",
                    fields.len()
                )));
            }
            let coefficient = fields[0]
                .trim()
                .parse::<i64>()
                .map_err(|e| err(format!("bad coefficient: {e}")))?;
            let sign = AffineForm::parse(fields[1]).map_err(&err)?;
            let exponent = AffineForm::parse(fields[2]).map_err(&err)?;
            for sym in sign.coeffs.keys().chain(exponent.coeffs.keys()) {
                if !declared.contains(sym) {
                    return Err(err(format!("undeclared symbol '{sym}'")));
                }
            }
            terms.push(Term {
                coefficient,
                sign,
                exponent,
            });
        }
        Ok(TermTable {
            symbols: symbols.unwrap_or_default(),
            terms,
        })
    }

    /// The transcribed dumbbell table, symbols `p k q`.
    pub fn dumbbell() -> &'static TermTable {
        static TABLE: OnceLock<TermTable> = OnceLock::new();
        TABLE.get_or_init(|| TermTable::parse(DUMBBELL_TABLE).expect("bundled table parses"))
    }

    /// The transcribed theta table, symbols `r s t`.
    pub fn theta() -> &'static TermTable {
        static TABLE: OnceLock<TermTable> = OnceLock::new();
        TABLE.get_or_init(|| TermTable::parse(THETA_TABLE).expect("bundled table parses"))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sums all terms at the given symbol values; colliding exponents add.
    pub fn instantiate(&self, values: &[(&str, i64)]) -> Result<LaurentPolynomial> {
        let bindings: BTreeMap<&str, i64> = values.iter().copied().collect();
        for sym in &self.symbols {
            if !bindings.contains_key(sym.as_str()) {
                return Err(Error::InvalidParams(format!(
                    "no value bound for symbol '{sym}'"
                )));
            }
        }
        let mut out = LaurentPolynomial::zero();
        for term in &self.terms {
            let parity = term.sign.eval(&bindings)?;
            let sign = if parity.rem_euclid(2) == 0 { 1 } else { -1 };
            out.add_term(
                term.exponent.eval(&bindings)?,
                BigInt::from(sign * term.coefficient),
            );
        }
        Ok(out)
    }
}
