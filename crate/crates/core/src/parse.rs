//! Text syntax for words and endomorphisms.
//!
//! ```text
//! word   := factor ('*' factor)*
//! factor := atom ('^' '-'? digits)?
//! atom   := 'x' digits | '1' | '(' word ')' | '[' word (',' word)+ ']'
//! map    := 'x' digits '->' word (';' 'x' digits '->' word)*
//! ```
//!
//! `[u1,...,uk]` is left-normed.

use crate::freegroup::GroupWord;
use crate::series::MAX_RANK;
use crate::Error;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    max_index: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { s: s.as_bytes(), pos: 0, max_index: 0 }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number out of range"))
    }

    fn generator(&mut self) -> Result<usize, Error> {
        self.expect(b'x')?;
        let i = self.number()?;
        if i == 0 || i > MAX_RANK {
            return Err(self.err(&format!("generator index {i} out of range 1..{MAX_RANK}")));
        }
        self.max_index = self.max_index.max(i);
        Ok(i)
    }

    fn word(&mut self) -> Result<GroupWord, Error> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul_unchecked(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GroupWord, Error> {
        let a = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let k = self.number()? as i64;
            return Ok(a.pow(if neg { -k } else { k }));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<GroupWord, Error> {
        match self.peek() {
            Some(b'x') => {
                let i = self.generator()?;
                Ok(GroupWord::generator(MAX_RANK, i).unwrap())
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(GroupWord::identity(MAX_RANK))
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut parts = vec![self.word()?];
                while self.eat(b',') {
                    parts.push(self.word()?);
                }
                self.expect(b']')?;
                if parts.len() < 2 {
                    return Err(self.err("a commutator needs at least two entries"));
                }
                GroupWord::left_normed(&parts)
            }
            _ => Err(self.err("expected a generator, '1', '(' or '['")),
        }
    }

    fn done(&mut self) -> Result<(), Error> {
        if self.peek().is_some() {
            Err(self.err("trailing input"))
        } else {
            Ok(())
        }
    }
}

fn settle_rank(found: usize, rank: Option<usize>) -> Result<usize, Error> {
    match rank {
        Some(r) if r < found => Err(Error::Parse(format!("generator x{found} exceeds rank {r}"))),
        Some(r) => Ok(r),
        None => Ok(found.max(1)),
    }
}

/// Parse a word. Without an explicit rank the largest generator index is used.
pub fn parse_word(s: &str, rank: Option<usize>) -> Result<GroupWord, Error> {
    let mut p = Parser::new(s);
    let w = p.word()?;
    p.done()?;
    w.with_rank(settle_rank(p.max_index, rank)?)
}

/// Parse `x1->W1;x2->W2;…`. Generators without an entry are fixed.
pub fn parse_map(s: &str, rank: Option<usize>) -> Result<Vec<GroupWord>, Error> {
    let mut p = Parser::new(s);
    let mut entries: Vec<(usize, GroupWord)> = Vec::new();
    loop {
        if p.peek().is_none() {
            break;
        }
        let i = p.generator()?;
        p.expect(b'-')?;
        if p.s.get(p.pos) != Some(&b'>') {
            return Err(p.err("expected '->'"));
        }
        p.pos += 1;
        let w = p.word()?;
        if entries.iter().any(|(j, _)| *j == i) {
            return Err(Error::Parse(format!("x{i} assigned twice")));
        }
        entries.push((i, w));
        if !p.eat(b';') {
            break;
        }
    }
    p.done()?;
    if entries.is_empty() {
        return Err(Error::Parse("empty map".into()));
    }
    let r = settle_rank(p.max_index, rank)?;
    let mut images: Vec<GroupWord> = (1..=r).map(|i| GroupWord::generator(r, i).unwrap()).collect();
    for (i, w) in entries {
        images[i - 1] = w.with_rank(r)?;
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        let w = parse_word("x1*x2^-1", None).unwrap();
        assert_eq!(w.rank(), 2);
        assert_eq!(w.to_string(), "x1*x2^-1");
        let c = parse_word("[x1,x2]", Some(3)).unwrap();
        assert_eq!(c.to_string(), "x1^-1*x2^-1*x1*x2");
        let ln = parse_word("[x1, x2, x3]", None).unwrap();
        assert_eq!(ln, parse_word("[[x1,x2],x3]", None).unwrap());
        assert!(parse_word("1", None).unwrap().is_identity());
        assert_eq!(parse_word("(x1*x2)^2", None).unwrap().to_string(), "x1*x2*x1*x2");
        assert!(parse_word("x1*", None).is_err());
        assert!(parse_word("x4", Some(3)).is_err());
        assert!(parse_word("[x1]", None).is_err());
    }

    #[test]
    fn maps() {
        let m = parse_map("x1->x1*[x1,x2]; x2->x2", None).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m[1].to_string(), "x2");
        let m = parse_map("x2->x2*x1", Some(3)).unwrap();
        assert_eq!(m[0].to_string(), "x1");
        assert_eq!(m[2].to_string(), "x3");
        assert!(parse_map("x1->x1;x1->x2", None).is_err());
        assert!(parse_map("x1=>x2", None).is_err());
    }
}
