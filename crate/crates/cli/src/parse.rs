//! Complex literals: `a`, `bi`, `a+bi`, `a-bi`, with `.` as decimal point and
//! no spaces. `i` alone means `1i`.

use bizeta_core::complex::{c, ComplexValue};

pub fn parse_complex(text: &str) -> Result<ComplexValue, String> {
    let t = text.trim();
    if t.is_empty() || t.contains(char::is_whitespace) {
        return Err(format!("invalid complex literal {text:?}"));
    }
    let bad = || format!("invalid complex literal {text:?} (expected a, bi, a+bi or a-bi)");
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|x| c(x, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not the leading one and not part of an exponent
    let bytes = body.as_bytes();
    let mut split = None;
    for j in (1..bytes.len()).rev() {
        if (bytes[j] == b'+' || bytes[j] == b'-') && !matches!(bytes[j - 1], b'e' | b'E') {
            split = Some(j);
            break;
        }
    }
    let imag = |s: &str| -> Result<f64, String> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse::<f64>().map_err(|_| bad()),
        }
    };
    match split {
        Some(j) => {
            let re = body[..j].parse::<f64>().map_err(|_| bad())?;
            Ok(c(re, imag(&body[j..])?))
        }
        None => Ok(c(0.0, imag(body)?)),
    }
}
