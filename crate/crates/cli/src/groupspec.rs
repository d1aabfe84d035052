//! Group specs accepted on the command line:
//!
//! - `cyclic:N`
//! - a product of cyclic factors: `6,2`, `Z6xZ2`, `Z6 x Z2`
//! - a canonical signature: `2:[1,1];3:[1]`

use ordsum_core::AbelianGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError { pos, msg: msg.into() }
}

pub fn parse_group(spec: &str) -> Result<AbelianGroup, ParseError> {
    if let Some(rest) = spec.strip_prefix("cyclic:") {
        let base = "cyclic:".len();
        let n: u64 = rest
            .trim()
            .parse()
            .map_err(|_| err(base, "expected a positive integer after `cyclic:`"))?;
        return AbelianGroup::cyclic(n).map_err(|e| err(base, e.to_string()));
    }
    if spec.contains('[') {
        return spec.parse().map_err(|e| match e {
            ordsum_core::Error::Parse { pos, msg } => err(pos, msg),
            other => err(0, other.to_string()),
        });
    }
    let factors = parse_factors(spec)?;
    AbelianGroup::from_cyclic_factors(&factors).map_err(|e| err(0, e.to_string()))
}

fn parse_factors(spec: &str) -> Result<Vec<u64>, ParseError> {
    let mut factors = Vec::new();
    let mut chars = spec.char_indices().peekable();
    let skip_ws = |chars: &mut std::iter::Peekable<std::str::CharIndices>| {
        while chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    };
    loop {
        skip_ws(&mut chars);
        let start = chars.peek().map_or(spec.len(), |&(i, _)| i);
        chars.next_if(|&(_, c)| c == 'Z' || c == 'z');
        let digits_at = chars.peek().map_or(spec.len(), |&(i, _)| i);
        let mut end = digits_at;
        while let Some((i, c)) = chars.next_if(|(_, c)| c.is_ascii_digit()) {
            end = i + c.len_utf8();
        }
        if end == digits_at {
            return Err(err(digits_at, "expected a cyclic factor order"));
        }
        let d: u64 = spec[digits_at..end]
            .parse()
            .map_err(|_| err(digits_at, "factor order out of range"))?;
        if d == 0 {
            return Err(err(start, "factor order must be positive"));
        }
        factors.push(d);
        skip_ws(&mut chars);
        match chars.next() {
            None => return Ok(factors),
            Some((_, ',' | 'x' | 'X' | '×')) => {}
            Some((i, c)) => return Err(err(i, format!("unexpected `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(spec: &str) -> String {
        parse_group(spec).unwrap().signature()
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(sig("cyclic:12"), "2:[2];3:[1]");
        assert_eq!(sig("cyclic:1"), "1");
        assert_eq!(sig("6,2"), "2:[1,1];3:[1]");
        assert_eq!(sig("Z6xZ2"), "2:[1,1];3:[1]");
        assert_eq!(sig("Z6 x Z2"), "2:[1,1];3:[1]");
        assert_eq!(sig("z4 × z2"), "2:[2,1]");
        assert_eq!(sig("12"), "2:[2];3:[1]");
        assert_eq!(sig("2:[1,1];3:[1]"), "2:[1,1];3:[1]");
        assert_eq!(sig(" 2 , 2 "), "2:[1,1]");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_group("6,,2").unwrap_err().pos, 2);
        assert_eq!(parse_group("Z6xY2").unwrap_err().pos, 3);
        assert_eq!(parse_group("6;2").unwrap_err().pos, 1);
        assert_eq!(parse_group("").unwrap_err().pos, 0);
        assert_eq!(parse_group("cyclic:x").unwrap_err().pos, 7);
        assert_eq!(parse_group("6,0").unwrap_err().pos, 2);
        assert!(parse_group("4:[1]").is_err());
        assert!(parse_group("99999999999999999999999").is_err());
    }
}
