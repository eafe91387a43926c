use std::fmt;

use crate::error::{Error, Result};

/// Reserved tape symbols for the left and right endmarkers of two-way machines.
pub const LEFT_ENDMARKER: char = '⊢';
pub const RIGHT_ENDMARKER: char = '⊣';

/// An ordered, duplicate-free set of input symbols.
///
/// Machines index their transition tables by the position of a symbol in
/// this list, so two alphabets are equal only if they list the same
/// symbols in the same order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        for (i, &c) in symbols.iter().enumerate() {
            if symbols[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
            if c == LEFT_ENDMARKER || c == RIGHT_ENDMARKER {
                return Err(Error::InvalidAlphabet(format!(
                    "{c:?} is reserved for endmarkers"
                )));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The one-letter alphabet `{a}`.
    pub fn unary() -> Self {
        Alphabet { symbols: vec!['a'] }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_unary(&self) -> bool {
        self.symbols.len() == 1
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn index_of(&self, c: char) -> Result<usize> {
        self.symbols
            .iter()
            .position(|&s| s == c)
            .ok_or(Error::SymbolNotInAlphabet(c))
    }

    /// Translates a word into symbol indices.
    pub fn encode(&self, word: &str) -> Result<Vec<usize>> {
        word.chars().map(|c| self.index_of(c)).collect()
    }

    pub fn decode(&self, word: &[usize]) -> String {
        word.iter().map(|&i| self.symbols[i]).collect()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}
