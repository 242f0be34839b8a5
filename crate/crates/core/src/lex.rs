use crate::error::ParseError;

/// Byte cursor shared by the group-literal and space-expression parsers.
/// Whitespace is skipped before every token.
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    /// Next char after the current one, without skipping whitespace in between.
    pub(crate) fn peek_second(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().nth(1)
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    /// Consumes `word` if the input continues with it.
    pub(crate) fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Unsigned decimal literal; returns the value and its starting offset.
    pub(crate) fn number(&mut self) -> Result<(u64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.unexpected("a number"));
        }
        let text = &self.src[start..start + digits];
        let value = text
            .parse::<u64>()
            .map_err(|_| ParseError::new(start, format!("number {text} is too large")))?;
        self.pos += digits;
        Ok((value, start))
    }

    pub(crate) fn error(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError::new(offset, message)
    }

    pub(crate) fn unexpected(&mut self, wanted: &str) -> ParseError {
        let offset = {
            self.skip_ws();
            self.pos
        };
        match self.src[offset..].chars().next() {
            Some(c) => ParseError::new(offset, format!("expected {wanted}, found '{c}'")),
            None => ParseError::new(offset, format!("expected {wanted}, found end of input")),
        }
    }
}
