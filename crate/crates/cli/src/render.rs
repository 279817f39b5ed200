//! Text, LaTeX and JSON output.

use anyhow::Result;
use capelli::elements::EnvPoly;
use capelli::report::SuiteReport;
use capelli::rep::SuperPolynomial;
use capelli::shifted::ShiftedPoly;
use capelli::ugl::element::ElementRepr;
use capelli::ugl::EnvElement;
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

/// JSON form of a polynomial in a central variable: coefficients from the
/// constant term up.
#[derive(Serialize, Deserialize)]
pub struct PolyRepr {
    pub variable: String,
    pub coeffs: Vec<ElementRepr>,
}

fn json<T: Serialize>(x: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(x)?)
}

pub fn element(x: &EnvElement, f: Format) -> Result<String> {
    Ok(match f {
        Format::Text => x.to_string(),
        Format::Latex => x.to_latex(),
        Format::Json => json(&x.to_repr())?,
    })
}

pub fn poly(p: &EnvPoly, var: char, f: Format) -> Result<String> {
    if f == Format::Json {
        let coeffs = p.coeffs().iter().map(|c| c.to_repr()).collect();
        return json(&PolyRepr { variable: var.to_string(), coeffs });
    }
    let mut parts = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let body = if f == Format::Latex { c.to_latex() } else { c.to_string() };
        let power = match (k, f) {
            (0, _) => String::new(),
            (1, Format::Latex) => format!(" {var}"),
            (1, _) => format!("*{var}"),
            (_, Format::Latex) => format!(" {var}^{{{k}}}"),
            _ => format!("*{var}^{k}"),
        };
        let open = if f == Format::Latex { "\\left(" } else { "(" };
        let close = if f == Format::Latex { "\\right)" } else { ")" };
        parts.push(format!("{open}{body}{close}{power}"));
    }
    Ok(if parts.is_empty() { "0".into() } else { parts.join(" + ") })
}

pub fn shifted(p: &ShiftedPoly, f: Format) -> Result<String> {
    Ok(match f {
        Format::Text => p.to_string(),
        Format::Latex => latex_vars(&p.to_string(), 'x'),
        Format::Json => json(&p.to_repr())?,
    })
}

pub fn super_poly(p: &SuperPolynomial, f: Format) -> Result<String> {
    Ok(match f {
        Format::Text | Format::Latex => p.to_string(),
        Format::Json => json(&p.to_repr())?,
    })
}

/// `x12*x3^2` to `x_{12} x_{3}^{2}`.
fn latex_vars(s: &str, var: char) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            _ if c == var => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                out.push_str(&format!("{var}_{{{digits}}}"));
            }
            '^' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                out.push_str(&format!("^{{{digits}}}"));
            }
            '*' => out.push(' '),
            _ => out.push(c),
        }
    }
    out
}

pub fn report(r: &SuiteReport, f: Format) -> Result<String> {
    Ok(match f {
        Format::Text => r.to_string(),
        Format::Json => json(r)?,
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{llll}\n\\hline\nidentity & parameters & result & ms \\\\\n\\hline\n");
            for rec in &r.records {
                let params: Vec<String> = rec.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                s.push_str(&format!(
                    "{} & {} & {} & {:.1} \\\\\n",
                    rec.name,
                    params.join(", "),
                    if rec.pass { "pass" } else { "fail" },
                    rec.elapsed_us as f64 / 1000.0
                ));
            }
            s.push_str("\\hline\n\\end{tabular}");
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_variables() {
        assert_eq!(latex_vars("x1*x2^2 + 3*x2", 'x'), "x_{1} x_{2}^{2} + 3 x_{2}");
    }
}
