//! Text notations.
//!
//! Part-multiplicity form: `<1^2 2^-3 3^1>`, with `<>` for the empty
//! overpartition. Tokens are separated by exactly one space and nothing may
//! precede `<` or follow `>`. Parts may appear in any order on input; output
//! is always ascending.
//!
//! Overline-list form: `~3,2,2,2,1,1`, parts non-increasing, `~` marking an
//! overlined first occurrence. The empty string is the empty overpartition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::overpartition::{OverlinedPart, Overpartition};
use crate::{Multiplicity, Part};

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, (part, mult)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{part}^{mult}")?;
        }
        f.write_str(">")
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Formats in canonical part-multiplicity form.
pub fn format(a: &Overpartition) -> String {
    a.to_string()
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.error(format!(
                "expected '{}', found '{}'",
                byte as char,
                (b as char).escape_default()
            ))),
            None => Err(self.error(format!("expected '{}', found end of input", byte as char))),
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a decimal digit"));
        }
        // ASCII digits only, so this slice is valid UTF-8.
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn part(&mut self) -> Result<Part> {
        let start = self.pos;
        let text = self.digits()?;
        let value: Part = text.parse().map_err(|_| Error::Syntax {
            position: start,
            message: format!("part {text} is out of range"),
        })?;
        if value == 0 {
            return Err(Error::NonPositivePart);
        }
        Ok(value)
    }

    fn multiplicity(&mut self, part: Part) -> Result<Multiplicity> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let text = self.digits()?;
        let magnitude: Multiplicity = text
            .parse()
            .map_err(|_| Error::MultiplicityOverflow(part))?;
        if magnitude == 0 {
            return Err(Error::ZeroMultiplicity(part));
        }
        Ok(if negative { -magnitude } else { magnitude })
    }
}

/// Parses the part-multiplicity form.
pub fn parse(text: &str) -> Result<Overpartition> {
    let mut cursor = Cursor::new(text);
    cursor.expect(b'<')?;
    let mut multiplicities = BTreeMap::new();
    if cursor.peek() != Some(b'>') {
        loop {
            let part = cursor.part()?;
            cursor.expect(b'^')?;
            let mult = cursor.multiplicity(part)?;
            if multiplicities.insert(part, mult).is_some() {
                return Err(Error::DuplicatePart(part));
            }
            match cursor.peek() {
                Some(b' ') => cursor.pos += 1,
                _ => break,
            }
        }
    }
    cursor.expect(b'>')?;
    if cursor.pos != cursor.bytes.len() {
        return Err(cursor.error("trailing characters after '>'"));
    }
    Overpartition::try_from(multiplicities)
}

/// Parses the overline-list form, e.g. `~3,2,2,2,1,1`. Blanks around items are ignored.
pub fn parse_overline_list(text: &str) -> Result<Vec<OverlinedPart>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for item in text.split(',') {
        let leading = item.len() - item.trim_start().len();
        let trimmed = item.trim();
        let (overlined, digits) = match trimmed.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, trimmed),
        };
        let position = offset + leading + usize::from(overlined);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Syntax {
                position,
                message: format!("expected a part value, found '{trimmed}'"),
            });
        }
        let value: Part = digits.parse().map_err(|_| Error::Syntax {
            position,
            message: format!("part {digits} is out of range"),
        })?;
        if value == 0 {
            return Err(Error::NonPositivePart);
        }
        out.push(OverlinedPart { value, overlined });
        offset += item.len() + 1;
    }
    Ok(out)
}

/// Formats the overline-list form.
pub fn format_overline_list(parts: &[OverlinedPart]) -> String {
    parts
        .iter()
        .map(|p| {
            if p.overlined {
                format!("~{}", p.value)
            } else {
                p.value.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Accepts either notation: text starting with `<` (after blanks) is
/// part-multiplicity form, anything else is an overline list.
pub fn parse_literal(text: &str) -> Result<Overpartition> {
    let trimmed = text.trim();
    if trimmed.starts_with('<') {
        parse(trimmed)
    } else {
        Overpartition::from_overline_list(&parse_overline_list(trimmed)?)
    }
}
