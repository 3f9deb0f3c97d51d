//! Ideal expressions: `x1*x2, x2^3*x4`, plus `0` and `1` for the zero and
//! unit ideals.

use mideal::{Monomial, MonomialIdeal, VariableSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{msg} at column {}", .pos + 1)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<(usize, u64), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected a number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<u64>() {
            Ok(v) => Ok((start, v)),
            Err(_) => err(start, "number too large"),
        }
    }
}

/// Exponent vectors indexed from 0, before the variable count is known.
type RawMonomial = Vec<(usize, u32)>;

fn factor(lx: &mut Lexer) -> Result<(usize, usize, u32), ParseError> {
    let at = {
        lx.skip_ws();
        lx.pos
    };
    if !lx.eat(b'x') {
        return err(at, "expected a variable like x1");
    }
    let (ipos, index) = lx.int()?;
    if index == 0 {
        return err(ipos, "variable indices start at 1");
    }
    let mut e = 1u32;
    if lx.eat(b'^') {
        let (epos, v) = lx.int()?;
        if v == 0 {
            return err(epos, "exponent must be positive");
        }
        e = u32::try_from(v).or_else(|_| err(epos, "exponent too large"))?;
    }
    Ok((ipos, index as usize, e))
}

/// Parses an ideal. Without `nvars` the variable count is the largest index
/// seen.
pub fn parse_ideal(text: &str, nvars: Option<usize>) -> Result<MonomialIdeal, ParseError> {
    let trimmed = text.trim();
    if trimmed == "0" || trimmed == "1" {
        let n = nvars.unwrap_or(1);
        let vars = VariableSet::standard(n).map_err(|e| ParseError { pos: 0, msg: e.to_string() })?;
        return Ok(if trimmed == "0" { MonomialIdeal::zero(vars) } else { MonomialIdeal::unit(vars) });
    }
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut raw: Vec<RawMonomial> = Vec::new();
    let mut top = 0usize;
    loop {
        let mut m = RawMonomial::new();
        loop {
            let (ipos, index, e) = factor(&mut lx)?;
            if let Some(n) = nvars {
                if index > n {
                    return err(ipos, format!("x{index} exceeds the declared {n} variables"));
                }
            }
            top = top.max(index);
            m.push((index - 1, e));
            if !lx.eat(b'*') {
                break;
            }
        }
        raw.push(m);
        if !lx.eat(b',') {
            break;
        }
    }
    if let Some(c) = lx.peek() {
        return err(lx.pos, format!("unexpected '{}'", c as char));
    }
    let n = nvars.unwrap_or(top);
    let vars = VariableSet::standard(n).map_err(|e| ParseError { pos: 0, msg: e.to_string() })?;
    let gens = raw
        .into_iter()
        .map(|m| {
            let mut e = vec![0u32; n];
            for (i, a) in m {
                e[i] = e[i].saturating_add(a);
            }
            Monomial::from_exponents(e)
        })
        .collect();
    MonomialIdeal::minimalize(vars, gens).map_err(|e| ParseError { pos: 0, msg: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_ideal() {
        let i = parse_ideal("x1*x2, x2*x3, x3*x4", None).unwrap();
        assert_eq!(i.nvars(), 4);
        assert_eq!(i.num_gens(), 3);
        assert_eq!(i.to_string(), "x1*x2, x2*x3, x3*x4");
    }

    #[test]
    fn exponents_and_whitespace() {
        let i = parse_ideal(" x1 ^ 2 ", None).unwrap();
        assert!(i.is_principal());
        assert_eq!(i.gens()[0].exp(0), 2);
        assert_eq!(parse_ideal("x1*x1", None).unwrap().to_string(), "x1^2");
    }

    #[test]
    fn minimalizes() {
        assert_eq!(parse_ideal("x1*x2, x1, x2*x3", None).unwrap().to_string(), "x1, x2*x3");
    }

    #[test]
    fn declared_variables() {
        assert_eq!(parse_ideal("x1", Some(3)).unwrap().nvars(), 3);
        let e = parse_ideal("x1*x4", Some(3)).unwrap_err();
        assert_eq!(e.pos, 4);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ideal("x0*x1", None).unwrap_err();
        assert_eq!(e.pos, 1);
        assert!(e.msg.contains("start at 1"));
        assert_eq!(parse_ideal("x1^0", None).unwrap_err().pos, 3);
        assert_eq!(parse_ideal("x1,,x2", None).unwrap_err().pos, 3);
        assert_eq!(parse_ideal("x1 x2", None).unwrap_err().pos, 3);
        assert_eq!(parse_ideal("", None).unwrap_err().pos, 0);
        assert_eq!(parse_ideal("y1", None).unwrap_err().to_string(), "expected a variable like x1 at column 1");
    }

    #[test]
    fn zero_and_unit() {
        assert!(parse_ideal("0", Some(3)).unwrap().is_zero());
        assert!(parse_ideal("1", None).unwrap().is_unit());
    }
}
