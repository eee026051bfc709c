//! Braid word syntax.
//!
//! Tokens are separated by whitespace: `a(p,q)` is a band letter, `d(p,q)`
//! expands to `a(p,p+1) ... a(q-1,q)`, `s3` and `s3^-1` are Artin letters
//! and `1` is the empty word. Band and Artin tokens cannot be mixed.

use dualbraid::{delta_word, ArtinLetter, ArtinWord, BandLetter, BandWord};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Band(BandWord),
    Artin(ArtinWord),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("column {column}: word mixes band and Artin letters")]
    Mixed { column: usize },

    #[error("column {column}: {source}")]
    Range {
        column: usize,
        #[source]
        source: dualbraid::Error,
    },

    #[error("{0}")]
    Strands(dualbraid::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Band,
    Artin,
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_space(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { column: self.pos + 1, message: message.into() }
    }

    fn expect(&mut self, want: u8) -> Result<(), ParseError> {
        self.skip_inline_space();
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", want as char)))
        }
    }

    /// Spaces are allowed inside parentheses.
    fn skip_inline_space(&mut self) {
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_inline_space();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ParseError::Syntax { column: start + 1, message: "number too large".into() })
    }

    fn pair(&mut self) -> Result<(usize, usize), ParseError> {
        self.expect(b'(')?;
        let p = self.number()?;
        self.expect(b',')?;
        let q = self.number()?;
        self.expect(b')')?;
        Ok((p, q))
    }

    fn end_of_token(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(b) if b.is_ascii_whitespace() => Ok(()),
            Some(_) => Err(self.error("expected whitespace between letters")),
        }
    }
}

/// Parses `text` as a word on `n` strands.
pub fn parse_word(text: &str, n: usize) -> Result<Word, ParseError> {
    if n < 2 {
        return Err(ParseError::Strands(dualbraid::Error::StrandCount { n, min: 2 }));
    }
    let mut sc = Scanner { bytes: text.as_bytes(), pos: 0 };
    let mut kind: Option<Kind> = None;
    let mut band = Vec::new();
    let mut artin = Vec::new();
    loop {
        sc.skip_space();
        let Some(c) = sc.peek() else { break };
        let column = sc.pos + 1;
        let range = |source| ParseError::Range { column, source };
        let this = match c {
            b'a' | b'd' => {
                sc.pos += 1;
                let (p, q) = sc.pair()?;
                if c == b'a' {
                    let l = BandLetter::new(p, q).map_err(|_| range(band_error(p, q, n)))?;
                    if q > n {
                        return Err(range(band_error(p, q, n)));
                    }
                    band.push(l);
                } else {
                    let d = delta_word(p, q, n).map_err(range)?;
                    band.extend_from_slice(d.letters());
                }
                Some(Kind::Band)
            }
            b's' => {
                sc.pos += 1;
                let i = sc.number()?;
                let positive = if sc.peek() == Some(b'^') {
                    sc.pos += 1;
                    if sc.bytes[sc.pos..].starts_with(b"-1") {
                        sc.pos += 2;
                        false
                    } else {
                        return Err(sc.error("expected exponent -1"));
                    }
                } else {
                    true
                };
                if i == 0 || i >= n {
                    return Err(range(dualbraid::Error::ArtinLetterOutOfRange { index: i, n }));
                }
                artin.push(if positive { ArtinLetter::pos(i) } else { ArtinLetter::neg(i) });
                Some(Kind::Artin)
            }
            b'1' => {
                sc.pos += 1;
                None
            }
            _ => return Err(sc.error(format!("unexpected character '{}'", text[sc.pos..].chars().next().unwrap()))),
        };
        sc.end_of_token()?;
        match (kind, this) {
            (Some(k), Some(t)) if k != t => return Err(ParseError::Mixed { column }),
            (None, Some(t)) => kind = Some(t),
            _ => {}
        }
    }
    Ok(match kind {
        Some(Kind::Artin) => Word::Artin(ArtinWord::new(n, artin).map_err(ParseError::Strands)?),
        _ => Word::Band(BandWord::new(n, band).map_err(ParseError::Strands)?),
    })
}

fn band_error(p: usize, q: usize, n: usize) -> dualbraid::Error {
    dualbraid::Error::BandLetterOutOfRange { p, q, n }
}

impl Word {
    /// The band word, coercing a positive Artin word by `s_i = a(i,i+1)`.
    pub fn to_band(&self) -> Option<BandWord> {
        match self {
            Word::Band(w) => Some(w.clone()),
            Word::Artin(w) => w.to_band(),
        }
    }

    pub fn to_artin(&self) -> ArtinWord {
        match self {
            Word::Band(w) => w.to_artin(),
            Word::Artin(w) => w.clone(),
        }
    }
}
