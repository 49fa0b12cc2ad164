//! Parser for group expressions such as `Z/4 x Z/4 x Z/2` or `C2^6`.
//!
//! ```text
//! expr := term (("x" | "*") term)*
//! term := atom ("^" INT)?
//! atom := ("Z" | "C") "/"? INT
//! ```
//!
//! Whitespace and letter case are ignored; every `INT` must be at least 1.

use crate::error::{Error, Result};
use crate::group::AbelianGroup;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).map(u8::to_ascii_lowercase)
    }

    fn int(&mut self, what: &str) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, format!("expected {what}")));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let value: u64 = text
            .parse()
            .map_err(|_| Error::parse(start, format!("{what} `{text}` is too large")))?;
        Ok((value, start))
    }

    /// Returns (order, exponent).
    fn term(&mut self) -> Result<(u64, u64)> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'z' | b'c') => self.pos += 1,
            Some(_) => {
                let tok = self.token_at(start);
                return Err(Error::parse(
                    start,
                    format!("expected `Z` or `C`, found `{tok}`"),
                ));
            }
            None => return Err(Error::parse(start, "expected a cyclic factor")),
        }
        if self.peek() == Some(b'/') {
            self.pos += 1;
        }
        let (order, _) = self.int("cyclic order")?;
        if order == 0 {
            let tok = self.token_at(start);
            return Err(Error::parse(start, format!("zero order in `{tok}`")));
        }
        let mut exponent = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let (e, at) = self.int("exponent")?;
            if e == 0 {
                return Err(Error::parse(at, "exponent must be at least 1"));
            }
            exponent = e;
        }
        Ok((order, exponent))
    }

    fn token_at(&self, start: usize) -> String {
        let rest = &self.src[start..];
        let end = rest
            .iter()
            .position(|b| b.is_ascii_whitespace() || matches!(b, b'x' | b'X' | b'*'))
            .unwrap_or(rest.len());
        String::from_utf8_lossy(&rest[..end.max(1).min(rest.len())]).into_owned()
    }
}

/// Parses a group expression into canonical form.
pub fn parse_group(text: &str) -> Result<AbelianGroup> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    if cur.peek().is_none() {
        return Err(Error::parse(0, "empty group expression"));
    }
    let mut factors = Vec::new();
    loop {
        let (order, exponent) = cur.term()?;
        if order > 1 {
            if exponent > 64 {
                return Err(Error::OrderOverflow);
            }
            factors.extend(std::iter::repeat_n(order, exponent as usize));
        }
        match cur.peek() {
            None => break,
            Some(b'x' | b'*') => cur.pos += 1,
            Some(_) => {
                let at = cur.pos;
                let tok = cur.token_at(at);
                return Err(Error::parse(
                    at,
                    format!("expected `x` or `*`, found `{tok}`"),
                ));
            }
        }
    }
    AbelianGroup::from_cyclic_factors(&factors)
}
