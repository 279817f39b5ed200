//! Element descriptors such as `H 2 2`, `Kshaped 2,1 3` or `e12`.

use anyhow::{anyhow, bail, Context as _, Result};
use capelli::elements::{
    capelli_c, capelli_det_poly, capelli_deruyts, capelli_h, capelli_h_shift, capelli_script_coeff,
    capelli_script_poly, rectangular_k, shaped_k, EnvPoly,
};
use capelli::ugl::{Context, EnvElement};
use capelli::virt::Shape;

/// What a descriptor builds.
pub enum Built {
    Element(EnvElement),
    /// A polynomial in a central variable, named by the `char`.
    Poly(EnvPoly, char),
}

pub const HELP: &str = "H n k | Hshift n p | C n p | K shape [n] | Krect n p | Kshaped shape [n] | \
cdet-poly n | script-poly n | script n h | eIJ [n] (or e I J [n])";

fn num<T: std::str::FromStr>(args: &[String], i: usize, what: &str) -> Result<T> {
    let s = args.get(i).ok_or_else(|| anyhow!("missing {what}"))?;
    s.parse().map_err(|_| anyhow!("bad {what}: {s:?}"))
}

fn opt_n(args: &[String], i: usize, default: usize) -> Result<usize> {
    if args.len() > i {
        num(args, i, "n")
    } else {
        Ok(default)
    }
}

fn arity(args: &[String], min: usize, max: usize) -> Result<()> {
    let k = args.len() - 1;
    if k < min || k > max {
        bail!("{} takes {min}..={max} arguments, got {k}", args[0]);
    }
    Ok(())
}

/// Splits a single quoted descriptor (`"H 2 2"`) into tokens.
pub fn tokens(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

/// Parses `e12`, `e1,2`, or `e 1 2` into `(i, j, rest)`.
fn generator_indices(args: &[String]) -> Result<Option<(u16, u16, usize)>> {
    let head = args[0].as_str();
    let Some(tail) = head.strip_prefix('e') else { return Ok(None) };
    if tail.is_empty() {
        return Ok(Some((num(args, 1, "row")?, num(args, 2, "column")?, 3)));
    }
    let (i, j) = if let Some((a, b)) = tail.split_once(',') {
        (a.parse().ok(), b.parse().ok())
    } else if tail.len() == 2 && tail.chars().all(|c| c.is_ascii_digit()) {
        (tail[..1].parse().ok(), tail[1..].parse().ok())
    } else {
        (None, None)
    };
    match (i, j) {
        (Some(i), Some(j)) => Ok(Some((i, j, 1))),
        _ => bail!("bad generator {head:?}; use e12, e1,2 or e 1 2"),
    }
}

/// Builds the element named by `args`. `n_override` fixes the rank for
/// generator descriptors such as `e12`.
pub fn build(args: &[String], n_override: Option<usize>) -> Result<Built> {
    let Some(head) = args.first() else { bail!("empty element descriptor; expected {HELP}") };
    let el = |x: capelli::Result<EnvElement>| -> Result<Built> { Ok(Built::Element(x?)) };
    match head.as_str() {
        "H" => {
            arity(args, 2, 2)?;
            el(capelli_h(num(args, 1, "n")?, num(args, 2, "k")?))
        }
        "Hshift" => {
            arity(args, 2, 2)?;
            el(capelli_h_shift(num(args, 1, "n")?, num(args, 2, "p")?))
        }
        "C" => {
            arity(args, 2, 2)?;
            el(capelli_c(num(args, 1, "n")?, num(args, 2, "p")?))
        }
        "K" | "Kshaped" => {
            arity(args, 1, 2)?;
            let shape = Shape::parse(&args[1]).with_context(|| format!("shape {:?}", args[1]))?;
            let n = opt_n(args, 2, shape.first())?;
            if head == "K" {
                el(capelli_deruyts(&shape, n))
            } else {
                el(shaped_k(&shape, n))
            }
        }
        "Krect" => {
            arity(args, 2, 2)?;
            el(rectangular_k(num(args, 1, "n")?, num(args, 2, "p")?))
        }
        "cdet-poly" => {
            arity(args, 1, 1)?;
            Ok(Built::Poly(capelli_det_poly(num(args, 1, "n")?)?, 't'))
        }
        "script-poly" => {
            arity(args, 1, 1)?;
            Ok(Built::Poly(capelli_script_poly(num(args, 1, "n")?)?, 's'))
        }
        "script" => {
            arity(args, 2, 2)?;
            el(capelli_script_coeff(num(args, 1, "n")?, num(args, 2, "h")?))
        }
        _ => match generator_indices(args)? {
            Some((i, j, rest)) => {
                if args.len() > rest + 1 {
                    bail!("trailing arguments after {head}");
                }
                let n = match n_override {
                    Some(n) => n,
                    None => opt_n(args, rest, i.max(j) as usize)?,
                };
                if i == 0 || j == 0 || i as usize > n || j as usize > n {
                    bail!("e_{{{i},{j}}} is not a generator of gl({n})");
                }
                Ok(Built::Element(EnvElement::e(Context::gl(n as u16), i, j)))
            }
            None => bail!("unknown element {head:?}; expected {HELP}"),
        },
    }
}

/// [`build`], insisting on an element rather than a polynomial.
pub fn build_element(args: &[String], n_override: Option<usize>) -> Result<EnvElement> {
    match build(args, n_override)? {
        Built::Element(x) => Ok(x),
        Built::Poly(..) => bail!("{} is a polynomial in a central variable, not an element", args[0]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Result<EnvElement> {
        build_element(&tokens(s), None)
    }

    #[test]
    fn descriptors() {
        assert_eq!(b("Krect 1 0").unwrap().to_string(), "1");
        assert!(b("H 2 2").unwrap().equals(&capelli_h(2, 2).unwrap()).unwrap());
        assert!(b("K 2,1").unwrap().equals(&capelli_deruyts(&Shape::parse("2,1").unwrap(), 2).unwrap()).unwrap());
        assert_eq!(b("e12").unwrap().context(), Context::gl(2));
        assert_eq!(b("e 1 2 3").unwrap().context(), Context::gl(3));
        assert_eq!(build_element(&tokens("e12"), Some(4)).unwrap().context(), Context::gl(4));
        assert!(b("e13 2").is_err());
        assert!(b("Q 1").is_err());
        assert!(b("H 2").is_err());
        assert!(b("cdet-poly 2").is_err());
        assert!(matches!(build(&tokens("cdet-poly 2"), None).unwrap(), Built::Poly(_, 't')));
    }
}
