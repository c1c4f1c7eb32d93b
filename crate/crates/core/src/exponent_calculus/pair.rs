use std::fmt;

use super::{half, int, is_valid_point, CalcError, Rational};
use crate::format;

/// An exponent pair `(k, ℓ)` together with the process word that produced it.
///
/// Words are read right to left: `"AB"` means B is applied to the seed first,
/// then A, i.e. `A(B(seed))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentPair {
    k: Rational,
    l: Rational,
    carries_epsilon: bool,
    word: String,
}

impl ExponentPair {
    pub fn new(k: Rational, l: Rational) -> Result<Self, CalcError> {
        if !is_valid_point(&k, &l) {
            return Err(CalcError::InvalidPair {
                k: format::rational(&k),
                l: format::rational(&l),
            });
        }
        Ok(Self {
            k,
            l,
            carries_epsilon: false,
            word: String::new(),
        })
    }

    /// Parse `"k,l"` with each side a rational such as `32/205`. The
    /// displayed form `"(k, l)"`, optionally followed by `+ε`, is accepted too.
    pub fn parse(text: &str) -> Result<Self, CalcError> {
        let trimmed = text.trim();
        let (body, epsilon) = match trimmed.strip_suffix("+ε") {
            Some(rest) => (rest.trim_end(), true),
            None => (trimmed, false),
        };
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let (k, l) = body.split_once(',').ok_or_else(|| CalcError::Parse {
            position: 0,
            message: format!("expected \"k,l\", got {text:?}"),
        })?;
        Ok(Self::new(super::parse_rational(k)?, super::parse_rational(l)?)?.with_epsilon(epsilon))
    }

    pub fn with_epsilon(mut self, carries_epsilon: bool) -> Self {
        self.carries_epsilon = carries_epsilon;
        self
    }

    pub fn with_word(mut self, word: impl Into<String>) -> Result<Self, CalcError> {
        let word = word.into();
        check_word(&word)?;
        self.word = word;
        Ok(self)
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn l(&self) -> &Rational {
        &self.l
    }

    pub fn carries_epsilon(&self) -> bool {
        self.carries_epsilon
    }

    pub fn word(&self) -> &str {
        &self.word
    }

    /// The `(k, ℓ)` coordinates, ignoring derivation metadata.
    pub fn point(&self) -> (&Rational, &Rational) {
        (&self.k, &self.l)
    }

    pub fn same_point(&self, other: &ExponentPair) -> bool {
        self.point() == other.point()
    }

    /// `A(k, ℓ) = (k/(2k+2), (k+ℓ+1)/(2k+2))`.
    pub fn a_process(&self) -> ExponentPair {
        let denom = &self.k * int(2) + int(2);
        ExponentPair {
            k: &self.k / &denom,
            l: (&self.k + &self.l + int(1)) / denom,
            carries_epsilon: self.carries_epsilon,
            word: format!("A{}", self.word),
        }
    }

    /// `B(k, ℓ) = (ℓ − 1/2, k + 1/2)`.
    pub fn b_process(&self) -> ExponentPair {
        ExponentPair {
            k: &self.l - half(),
            l: &self.k + half(),
            carries_epsilon: self.carries_epsilon,
            word: format!("B{}", self.word),
        }
    }

    /// Apply a word right to left (rightmost letter first).
    pub fn apply_word(&self, word: &str) -> Result<ExponentPair, CalcError> {
        check_word(word)?;
        let mut p = self.clone();
        for letter in word.chars().rev() {
            p = match letter {
                'A' => p.a_process(),
                _ => p.b_process(),
            };
        }
        Ok(p)
    }
}

fn check_word(word: &str) -> Result<(), CalcError> {
    if word.chars().all(|c| c == 'A' || c == 'B') {
        Ok(())
    } else {
        Err(CalcError::InvalidWord(word.to_string()))
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            format::rational(&self.k),
            format::rational(&self.l)
        )?;
        if self.carries_epsilon {
            write!(f, "+ε")?;
        }
        Ok(())
    }
}
