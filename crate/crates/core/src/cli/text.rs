use crate::algebra::Element;
use crate::representation::{coefficient_unit_name, Mat2};
use crate::scalar::{format_scalar, Scalar};

/// Parses a complex literal: an optional real part and an optional imaginary
/// part suffixed `i`, e.g. `0`, `-1`, `0.5+2i`, `i`, `-i`, `1e-3-2.5i`.
pub fn parse_scalar(s: &str) -> std::result::Result<Scalar, String> {
    let t = s.trim();
    let bad = || format!("invalid complex literal `{s}`");
    let number = |x: &str| match x.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(bad()),
    };
    let coefficient = |x: &str| match x {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => number(x),
    };
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Scalar::new(number(t)?, 0.0));
    };
    // The imaginary part starts at the last sign that is not an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => Ok(Scalar::new(number(&body[..i])?, coefficient(&body[i..])?)),
        None => Ok(Scalar::new(0.0, coefficient(body)?)),
    }
}

/// Parses a comma-separated coefficient list of complex literals.
pub fn parse_element(s: &str) -> std::result::Result<Element, String> {
    let coeffs = s
        .split(',')
        .map(parse_scalar)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Element::new(coeffs).map_err(|e| format!("invalid element `{s}`: {e}"))
}

fn term(c: Scalar, name: &str) -> String {
    let z = format_scalar(c);
    let compound = z[1..].contains(['+', '-']);
    let z = if compound { format!("({z})") } else { z };
    match (name, z.as_str()) {
        ("1", _) => z,
        (_, "1") => name.to_string(),
        (_, "-1") => format!("-{name}"),
        _ => format!("{z}·{name}"),
    }
}

/// Renders `Σ c_m·name(m)`, skipping zero terms; `0` for the zero element.
pub fn format_with(x: &Element, name: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (m, &c) in x.coeffs().iter().enumerate() {
        if format_scalar(c) == "0" {
            continue;
        }
        let t = term(c, &name(m));
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// `e0..e15` unit names.
pub fn format_element(x: &Element) -> String {
    format_with(x, |m| format!("e{m}"))
}

/// Coefficient-algebra names `1, i, j, …, o`; falls back to `e_m` above 8.
pub fn format_entry(x: &Element) -> String {
    format_with(x, |m| {
        coefficient_unit_name(m).map_or_else(|| format!("e{m}"), str::to_string)
    })
}

/// `[a b; c d]` with entries named as coefficient units.
pub fn format_mat(m: &Mat2) -> String {
    let e = |r, c| format_entry(m.entry(r, c));
    format!("[{} {}; {} {}]", e(0, 0), e(0, 1), e(1, 0), e(1, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{real, I};

    #[test]
    fn literals() {
        assert_eq!(parse_scalar("0").unwrap(), real(0.0));
        assert_eq!(parse_scalar("-1").unwrap(), real(-1.0));
        assert_eq!(parse_scalar("0.5+2i").unwrap(), Scalar::new(0.5, 2.0));
        assert_eq!(parse_scalar("i").unwrap(), I);
        assert_eq!(parse_scalar("-i").unwrap(), -I);
        assert_eq!(parse_scalar("2i").unwrap(), Scalar::new(0.0, 2.0));
        assert_eq!(parse_scalar("1e-3-2.5i").unwrap(), Scalar::new(1e-3, -2.5));
        assert_eq!(parse_scalar("-1e+2+i").unwrap(), Scalar::new(-100.0, 1.0));
        assert_eq!(parse_scalar("3-i").unwrap(), Scalar::new(3.0, -1.0));
        for bad in [
            "", "x", "1+", "inf", "nan", "1+2j", "+", "-", "--1", "1++2i",
        ] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn literal_round_trip() {
        for z in [
            real(2.5),
            Scalar::new(-1.0, 0.25),
            I,
            Scalar::new(0.0, -3.0),
        ] {
            assert_eq!(parse_scalar(&format_scalar(z)).unwrap(), z);
        }
    }

    #[test]
    fn elements() {
        let x = parse_element("0,0,0,-1").unwrap();
        assert_eq!(format_element(&x), "-e3");
        let x = parse_element("-1,0.5,0,1+2i").unwrap();
        assert_eq!(format_element(&x), "-e0 + 0.5·e1 + (1+2i)·e3");
        assert_eq!(format_element(&Element::zero(2)), "0");
        let x = parse_element("0,-2i").unwrap();
        assert_eq!(format_element(&x), "-2i·e1");
        assert!(parse_element("1,2,3").is_err());
    }

    #[test]
    fn entries() {
        let x = parse_element("0,0,0,1").unwrap();
        assert_eq!(format_entry(&x), "k");
        let x = parse_element("-1,0,0,0").unwrap();
        assert_eq!(format_entry(&x), "-1");
        let x = Element::scalar(1, Scalar::new(0.5, -1.0));
        assert_eq!(format_entry(&x), "(0.5-i)");
    }
}
