//! Input parsing: moduli written as "b+ai", coefficient vectors, and the
//! JSON file formats for matrices and 3-forms.

use std::fmt;

use gcg_core::{Modulus, ModulusRole, Rational};

/// Parse failure with the byte position of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulusParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ModulusParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.msg)
    }
}

fn err(pos: usize, msg: impl Into<String>) -> ModulusParseError {
    ModulusParseError {
        pos,
        msg: msg.into(),
    }
}

/// Parses "b+ai": an optional rational or decimal real part and a mandatory
/// imaginary part ending in `i` with positive coefficient. Examples:
/// "i", "2i", "1/2+3i", "0.5+0.5i", "-1+2i".
pub fn parse_modulus(input: &str, role: ModulusRole) -> Result<Modulus, ModulusParseError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(err(0, "empty modulus"));
    }

    // The first sign past index 0 separates the real and imaginary terms;
    // signs inside a term can only appear at its first byte.
    let split = s
        .char_indices()
        .skip(1)
        .find(|&(_, c)| c == '+' || c == '-')
        .map(|(idx, _)| idx);
    let (real_str, imag_str, imag_pos) = match split {
        Some(idx) => (&s[..idx], &s[idx..], idx),
        None => ("", s, 0),
    };

    let b = if real_str.is_empty() {
        Rational::from_int(0)
    } else {
        real_str
            .parse::<Rational>()
            .map_err(|e| err(0, format!("bad real part: {e}")))?
    };

    let Some(coeff_str) = imag_str.strip_suffix('i') else {
        return Err(err(
            s.len().saturating_sub(1),
            "imaginary part must end with 'i'",
        ));
    };
    let a = match coeff_str {
        "" | "+" => Rational::from_int(1),
        "-" => Rational::from_int(-1),
        _ => coeff_str
            .parse::<Rational>()
            .map_err(|e| err(imag_pos, format!("bad imaginary part: {e}")))?,
    };
    if !a.is_positive() {
        return Err(err(imag_pos, "imaginary part must be positive"));
    }

    Modulus::new(b, a, role).map_err(|e| err(imag_pos, e.to_string()))
}

/// Comma-separated rationals, e.g. "0,1,0,0" or "1/2,-3,0.25,0".
pub fn parse_coeffs(input: &str) -> Result<Vec<Rational>, String> {
    input
        .split(',')
        .map(|tok| tok.trim().parse::<Rational>().map_err(|e| e.to_string()))
        .collect()
}
