//! Text forms for complex and bicomplex numbers and for real grids.
//!
//! Accepted bicomplex literals:
//! * j-form `a+bi+cj+dk`: any subset of the four terms, in any order, each
//!   unit at most once; a bare unit means coefficient 1.
//! * idempotent form `z1|z2` with two complex literals such as `1.5-2i`.
//!
//! Whitespace is ignored everywhere. The canonical output is the idempotent
//! form with shortest round-trip decimal components.

use num_complex::Complex64;
use thiserror::Error;

use crate::bicomplex::Bicomplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty literal")]
    Empty,
    #[error("unexpected character {ch:?} at offset {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unit {0:?} appears more than once")]
    DuplicateUnit(char),
    #[error("expected a number at offset {0}")]
    MissingNumber(usize),
    #[error("number out of range")]
    NonFinite,
    #[error("bad grid: {0}")]
    BadGrid(String),
}

/// Largest number of points a grid literal may expand to.
pub const MAX_GRID_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Unit {
    One,
    I,
    J,
    K,
}

impl Unit {
    fn index(self) -> usize {
        self as usize
    }

    fn symbol(self) -> char {
        ['1', 'i', 'j', 'k'][self.index()]
    }
}

/// Splits a whitespace-free literal into signed terms `(coefficient, unit)`.
fn terms(s: &[u8], allowed: &[u8]) -> Result<Vec<(f64, Unit)>, ParseError> {
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < s.len() {
        let mut sign = 1.0;
        let mut saw_sign = false;
        if s[pos] == b'+' || s[pos] == b'-' {
            if s[pos] == b'-' {
                sign = -1.0;
            }
            saw_sign = true;
            pos += 1;
        } else if !out.is_empty() {
            return Err(ParseError::UnexpectedChar {
                ch: s[pos] as char,
                pos,
            });
        }
        let start = pos;
        while pos < s.len() && (s[pos].is_ascii_digit() || s[pos] == b'.') {
            pos += 1;
        }
        let mantissa_end = pos;
        if mantissa_end > start && pos < s.len() && (s[pos] == b'e' || s[pos] == b'E') {
            let mut p = pos + 1;
            if p < s.len() && (s[p] == b'+' || s[p] == b'-') {
                p += 1;
            }
            let digits = p;
            while p < s.len() && s[p].is_ascii_digit() {
                p += 1;
            }
            if p == digits {
                return Err(ParseError::MissingNumber(digits));
            }
            pos = p;
        }
        let coefficient = if pos > start {
            let text = std::str::from_utf8(&s[start..pos]).expect("ascii");
            let v: f64 = text.parse().map_err(|_| ParseError::MissingNumber(start))?;
            if !v.is_finite() {
                return Err(ParseError::NonFinite);
            }
            Some(v)
        } else {
            None
        };
        let unit = match s.get(pos) {
            Some(&u) if allowed.contains(&u) => {
                pos += 1;
                match u {
                    b'i' => Unit::I,
                    b'j' => Unit::J,
                    _ => Unit::K,
                }
            }
            _ => Unit::One,
        };
        if coefficient.is_none() && unit == Unit::One {
            return match s.get(pos) {
                Some(&ch) => Err(ParseError::UnexpectedChar {
                    ch: ch as char,
                    pos,
                }),
                None if saw_sign || out.is_empty() => Err(ParseError::MissingNumber(pos)),
                None => Err(ParseError::Empty),
            };
        }
        out.push((sign * coefficient.unwrap_or(1.0), unit));
    }
    Ok(out)
}

fn squeeze(s: &str) -> Result<Vec<u8>, ParseError> {
    let mut out = Vec::with_capacity(s.len());
    for (pos, ch) in s.char_indices() {
        if ch.is_whitespace() {
            continue;
        }
        if !ch.is_ascii() {
            return Err(ParseError::UnexpectedChar { ch, pos });
        }
        out.push(ch as u8);
    }
    if out.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(out)
}

fn collect(terms: Vec<(f64, Unit)>) -> Result<[f64; 4], ParseError> {
    let mut seen = [false; 4];
    let mut parts = [0.0; 4];
    for (v, unit) in terms {
        if std::mem::replace(&mut seen[unit.index()], true) {
            return Err(ParseError::DuplicateUnit(unit.symbol()));
        }
        parts[unit.index()] = v;
    }
    Ok(parts)
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, ... into a complex number.
pub fn parse_complex(s: &str) -> Result<Complex64, ParseError> {
    let bytes = squeeze(s)?;
    let parts = collect(terms(&bytes, b"i")?)?;
    Ok(Complex64::new(parts[0], parts[1]))
}

/// Parses a bicomplex literal in j-form or idempotent form.
pub fn parse_bicomplex(s: &str) -> Result<Bicomplex, ParseError> {
    if let Some((left, right)) = s.split_once('|') {
        if let Some(pos) = right.find('|') {
            return Err(ParseError::UnexpectedChar {
                ch: '|',
                pos: left.len() + 1 + pos,
            });
        }
        return Ok(Bicomplex::new(parse_complex(left)?, parse_complex(right)?));
    }
    let bytes = squeeze(s)?;
    let [a, b, c, d] = collect(terms(&bytes, b"ijk")?)?;
    let z = Bicomplex::from_parts(a, b, c, d);
    if !z.is_finite() {
        return Err(ParseError::NonFinite);
    }
    Ok(z)
}

/// Parses `start:stop:step` into the inclusive list of grid points, or a
/// single number into a one-point grid.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, ParseError> {
    let fields: Vec<&str> = s.split(':').map(str::trim).collect();
    let number = |t: &str| -> Result<f64, ParseError> {
        let c = parse_complex(t)?;
        if c.im != 0.0 {
            return Err(ParseError::BadGrid(format!("{t:?} is not real")));
        }
        Ok(c.re)
    };
    match fields.as_slice() {
        [x] => Ok(vec![number(x)?]),
        [a, b, h] => {
            let (start, stop, step) = (number(a)?, number(b)?, number(h)?);
            if step == 0.0 {
                return Err(ParseError::BadGrid("step must be nonzero".into()));
            }
            let n = ((stop - start) / step).round();
            if !n.is_finite() || n < 0.0 {
                return Err(ParseError::BadGrid("step points away from stop".into()));
            }
            if n >= MAX_GRID_POINTS as f64 {
                return Err(ParseError::BadGrid(format!(
                    "more than {MAX_GRID_POINTS} points"
                )));
            }
            // 15 significant digits drop the representation error of
            // start + r * step (0.30000000000000004 -> 0.3)
            let last = start + n * step;
            if !last.is_finite() {
                return Err(ParseError::BadGrid("grid overflows".into()));
            }
            Ok((0..=n as usize)
                .map(|r| {
                    let x = start + r as f64 * step;
                    let rounded: f64 = format!("{x:.14e}").parse().unwrap_or(x);
                    if rounded.is_finite() {
                        rounded
                    } else {
                        x
                    }
                })
                .collect())
        }
        _ => Err(ParseError::BadGrid(
            "expected start:stop:step or a single value".into(),
        )),
    }
}

/// Shortest round-trip decimal for `x`, in exponent notation when very
/// large or small. Negative zero prints as `0`.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let a = x.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// `a+bi`, or just `a` when the imaginary part is zero.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return format_real(z.re);
    }
    let im = z.im;
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", format_real(z.re), sign, format_real(im.abs()))
}

/// Canonical idempotent form `z1|z2`.
pub fn format_bicomplex(z: &Bicomplex) -> String {
    format!("{}|{}", format_complex(z.z1), format_complex(z.z2))
}
