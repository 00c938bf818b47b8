//! Polynomial expressions in x, y, z and rational functions in t.
//!
//! Integers, fractions `a/b`, `+ - * /`, powers with `^` (or `**`),
//! parentheses and juxtaposition (`2x`, `3(x+y)`).

use crate::qpoly::{Field, Int, MPoly, Rat, Ring};
use crate::sqrtfield::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// Values an expression can evaluate to.
trait Target: Sized + Clone {
    fn constant(c: Rat) -> Self;
    fn variable(name: u8) -> Option<Self>;
    fn var_letters() -> &'static [u8];
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Result<Self, &'static str>;
    fn pow(&self, e: u32) -> Self;
}

impl Target for MPoly<Rat> {
    fn constant(c: Rat) -> Self {
        MPoly::constant(c)
    }
    fn variable(name: u8) -> Option<Self> {
        matches!(name, b'x' | b'y' | b'z').then(|| MPoly::var((name - b'x') as usize))
    }
    fn var_letters() -> &'static [u8] {
        b"xyz"
    }
    fn add(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.sub_ref(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn neg(&self) -> Self {
        self.neg_ref()
    }
    fn div(&self, o: &Self) -> Result<Self, &'static str> {
        if !o.is_constant() {
            return Err("division by a non-constant polynomial");
        }
        match o.constant_term().inverse() {
            Some(k) => Ok(self.scale(&k)),
            None => Err("division by zero"),
        }
    }
    fn pow(&self, e: u32) -> Self {
        MPoly::pow(self, e)
    }
}

impl Target for RatFunc {
    fn constant(c: Rat) -> Self {
        RatFunc::constant(c)
    }
    fn variable(name: u8) -> Option<Self> {
        (name == b't').then(RatFunc::t)
    }
    fn var_letters() -> &'static [u8] {
        b"t"
    }
    fn add(&self, o: &Self) -> Self {
        self.plus(o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.minus(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.times(o)
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn div(&self, o: &Self) -> Result<Self, &'static str> {
        self.divide(o).ok_or("division by zero")
    }
    fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }
}

struct Parser<'a, T> {
    src: &'a [u8],
    pos: usize,
    _t: std::marker::PhantomData<T>,
}

type PResult<T> = Result<T, ParseError>;

impl<'a, T: Target> Parser<'a, T> {
    fn err<V>(&self, at: usize, msg: impl Into<String>) -> PResult<V> {
        Err(ParseError { offset: at, message: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn power_op(&mut self) -> bool {
        match self.peek() {
            Some(b'^') => {
                self.pos += 1;
                true
            }
            Some(b'*') if self.src.get(self.pos + 1) == Some(&b'*') => {
                self.pos += 2;
                true
            }
            _ => false,
        }
    }

    fn integer(&mut self) -> PResult<Int> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.src.get(start) {
                Some(&c) => self.err(start, format!("expected a number, found '{}'", c as char)),
                None => self.err(start, "expected a number, found end of input"),
            };
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn expr(&mut self) -> PResult<T> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<T> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') if self.src.get(self.pos + 1) != Some(&b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = {
                        self.skip_ws();
                        self.pos
                    };
                    let d = self.power()?;
                    acc = match acc.div(&d) {
                        Ok(v) => v,
                        Err(m) => return self.err(at, m),
                    };
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> PResult<T> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult<T> {
        let base = self.primary()?;
        if self.power_op() {
            let at = {
                self.skip_ws();
                self.pos
            };
            let e = self.integer()?;
            let e: u32 = match e.try_into() {
                Ok(e) if e <= 1000 => e,
                _ => return self.err(at, "exponent too large"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<T> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(T::constant(Rat::from_integer(self.integer()?))),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    let here = self.pos;
                    return self.err(here, "expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let mut end = self.pos;
                while end < self.src.len() && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_') {
                    end += 1;
                }
                let name = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                // a run like "xy" reads as x·y
                if name.bytes().all(|b| T::var_letters().contains(&b)) {
                    self.pos += 1;
                    return Ok(T::variable(c).unwrap());
                }
                self.err(at, format!("unknown identifier '{name}'"))
            }
            Some(c) => self.err(at, format!("unexpected '{}'", c as char)),
            None => self.err(at, "unexpected end of input"),
        }
    }
}

fn parse_with<T: Target>(text: &str) -> Result<T, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError { offset: 0, message: "empty expression".into() });
    }
    let mut p = Parser::<T> { src: text.as_bytes(), pos: 0, _t: std::marker::PhantomData };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        let at = p.pos;
        return p.err(at, format!("unexpected '{}'", c as char));
    }
    Ok(e)
}

/// Parses a polynomial in x, y, z with rational coefficients.
pub fn parse_surface_expression(text: &str) -> Result<MPoly<Rat>, ParseError> {
    parse_with(text)
}

/// Parses a rational function of t.
pub fn parse_rational_function(text: &str) -> Result<RatFunc, ParseError> {
    parse_with(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{qconst, qvar, rat, UPoly};

    #[test]
    fn sphere_and_example() {
        let (x, y, z) = (qvar(0), qvar(1), qvar(2));
        let sphere = &(&(&(&x * &x) + &(&y * &y)) + &(&z * &z)) - &qconst(1);
        assert_eq!(parse_surface_expression("x^2+y^2+z^2-1").unwrap(), sphere);
        let e1 = parse_surface_expression("x^3+x*y^2+x*z^2+2*x^2+3*y^2+z^2-5*x-6").unwrap();
        assert_eq!(e1.nterms(), 8);
    }

    #[test]
    fn juxtaposition_fractions_and_powers() {
        let (x, y) = (qvar(0), qvar(1));
        assert_eq!(parse_surface_expression("2x y").unwrap(), (&x * &y).scale(&rat(2, 1)));
        assert_eq!(parse_surface_expression("3/4 x").unwrap(), x.scale(&rat(3, 4)));
        assert_eq!(parse_surface_expression("-x**2").unwrap(), (&x * &x).neg_ref());
        assert_eq!(parse_surface_expression("2(x+1)").unwrap(), (&x + &qconst(1)).scale(&rat(2, 1)));
        assert_eq!(parse_surface_expression("xy").unwrap(), &x * &y);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_surface_expression("x^^2").unwrap_err().offset, 2);
        assert_eq!(parse_surface_expression("x + w").unwrap_err().offset, 4);
        assert_eq!(parse_surface_expression("(x+1").unwrap_err().offset, 4);
        assert!(parse_surface_expression("   ").is_err());
        assert!(parse_surface_expression("x/0").is_err());
        assert!(parse_surface_expression("1/x").is_err());
    }

    #[test]
    fn rational_functions() {
        let r = parse_rational_function("-7(2t-1)/(12t-5)").unwrap();
        assert_eq!(r, RatFunc::new(UPoly::from_ints(&[7, -14]), UPoly::from_ints(&[-5, 12])));
        assert_eq!(parse_rational_function("t^2/t").unwrap(), RatFunc::t());
        assert!(parse_rational_function("x").is_err());
        assert!(parse_rational_function("1/(t-t)").is_err());
    }
}
