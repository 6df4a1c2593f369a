//! Words over an indexed alphabet.
//!
//! Letters are small indices; letter `i` is written with the character
//! `'a' + i`, so binary automata use `a` and `b`. The textual form accepts
//! exponent shorthand on input (`"a^3b"` is `"aaab"`) and is always fully
//! expanded on output. Whether a letter is valid for a given automaton is
//! only known at application time, so a `Word` itself merely bounds letters
//! by the largest representable alphabet.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest alphabet representable in the textual word format (`a`..`z`).
pub const MAX_ALPHABET: usize = 26;

/// Expanded length above which word parsing refuses the input.
pub const MAX_WORD_LEN: usize = 1_000_000;

/// A finite (possibly empty) sequence of letter indices.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    /// The empty word; acts as the identity on every state set.
    pub fn empty() -> Self {
        Word::default()
    }

    /// A single-letter word.
    pub fn letter(letter: usize) -> Result<Self> {
        Word::from_letters([letter])
    }

    pub fn from_letters<I: IntoIterator<Item = usize>>(letters: I) -> Result<Self> {
        let mut out = Vec::new();
        for letter in letters {
            if letter >= MAX_ALPHABET {
                return Err(Error::InvalidLetter {
                    letter,
                    alphabet_size: MAX_ALPHABET,
                });
            }
            out.push(letter as u8);
        }
        Ok(Word { letters: out })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in application order.
    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().map(|&l| l as usize)
    }

    /// Largest letter index used, if the word is nonempty.
    pub fn max_letter(&self) -> Option<usize> {
        self.letters.iter().max().map(|&l| l as usize)
    }

    pub fn push(&mut self, letter: usize) -> Result<()> {
        if letter >= MAX_ALPHABET {
            return Err(Error::InvalidLetter {
                letter,
                alphabet_size: MAX_ALPHABET,
            });
        }
        self.letters.push(letter as u8);
        Ok(())
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The `times`-fold concatenation of `self`; zero yields the empty word.
    pub fn repeat(&self, times: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", (b'a' + l) as char)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a word over letter names, accepting `letter^count` shorthand.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        let mut letters: Vec<u8> = Vec::new();
        let mut chars = s.char_indices().peekable();
        while let Some((pos, c)) = chars.next() {
            if !c.is_ascii_lowercase() {
                return Err(Error::Parse(format!(
                    "unexpected character '{c}' at position {pos} in word"
                )));
            }
            let letter = c as u8 - b'a';
            let mut count = 1usize;
            if let Some(&(_, '^')) = chars.peek() {
                chars.next();
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if digits.is_empty() {
                    return Err(Error::Parse(format!(
                        "missing exponent after '^' at position {pos} in word"
                    )));
                }
                count = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("exponent '{digits}' out of range")))?;
            }
            if letters.len() + count > MAX_WORD_LEN {
                return Err(Error::Parse(format!(
                    "expanded word exceeds {MAX_WORD_LEN} letters"
                )));
            }
            letters.extend(std::iter::repeat(letter).take(count));
        }
        Ok(Word { letters })
    }
}
