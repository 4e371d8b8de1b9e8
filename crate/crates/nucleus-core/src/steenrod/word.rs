use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::arith::Prime;

use super::SteenrodError;

/// One algebra generator: a Steenrod square (p = 2) or the Bockstein / a
/// reduced power (odd p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Beta,
    Sq(u32),
    P(u32),
}

impl Letter {
    pub fn degree(self, p: u64) -> u32 {
        match self {
            Letter::Beta => 1,
            Letter::Sq(i) => i,
            Letter::P(i) => 2 * i * (p as u32 - 1),
        }
    }

    fn valid_for(self, p: u64) -> bool {
        match self {
            Letter::Sq(i) => p == 2 && i > 0,
            Letter::Beta | Letter::P(_) => p != 2,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Beta => write!(f, "b"),
            Letter::Sq(i) => write!(f, "Sq{i}"),
            Letter::P(i) => write!(f, "P{i}"),
        }
    }
}

/// A product of algebra generators, leftmost factor applied last. The empty
/// word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SteenrodWord {
    prime: Prime,
    letters: Vec<Letter>,
}

impl SteenrodWord {
    pub fn new(prime: Prime, letters: Vec<Letter>) -> Result<Self, SteenrodError> {
        for l in &letters {
            if matches!(l, Letter::Sq(0) | Letter::P(0)) {
                return Err(SteenrodError::ZeroExponent);
            }
            if !l.valid_for(prime.get()) {
                return Err(SteenrodError::WrongPrimeForLetter {
                    prime: prime.get(),
                    letter: l.to_string(),
                });
            }
        }
        Ok(SteenrodWord { prime, letters })
    }

    pub fn one(prime: Prime) -> Self {
        SteenrodWord {
            prime,
            letters: Vec::new(),
        }
    }

    /// A word of squares at p = 2, e.g. `sq_word(&[2, 1])` is `Sq2 Sq1`.
    pub fn squares(exponents: &[u32]) -> Self {
        let prime = Prime::new(2).unwrap();
        SteenrodWord::new(prime, exponents.iter().map(|&i| Letter::Sq(i)).collect())
            .expect("positive square exponents")
    }

    /// Parses whitespace-separated letters: `Sq{i}`, `b`, `P{i}`.
    pub fn parse(prime: Prime, input: &str) -> Result<Self, SteenrodError> {
        let mut letters = Vec::new();
        for tok in input.split_whitespace() {
            let letter = if let Some(rest) = tok.strip_prefix("Sq") {
                Letter::Sq(
                    rest.parse()
                        .map_err(|_| SteenrodError::BadWord(tok.into()))?,
                )
            } else if tok == "b" || tok == "Q0" {
                Letter::Beta
            } else if let Some(rest) = tok.strip_prefix('P') {
                Letter::P(
                    rest.parse()
                        .map_err(|_| SteenrodError::BadWord(tok.into()))?,
                )
            } else if tok == "1" {
                continue;
            } else {
                return Err(SteenrodError::BadWord(tok.into()));
            };
            letters.push(letter);
        }
        SteenrodWord::new(prime, letters)
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.letters
            .iter()
            .map(|l| l.degree(self.prime.get()))
            .sum()
    }

    /// Concatenation (product in the free algebra).
    pub fn concat(&self, rhs: &SteenrodWord) -> SteenrodWord {
        assert_eq!(self.prime, rhs.prime, "mixed primes in word product");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        SteenrodWord {
            prime: self.prime,
            letters,
        }
    }

    /// Index of the leftmost admissibility violation, if any: at p = 2 an
    /// adjacent pair `Sq^a Sq^b` with `a < 2b`; at odd p a pair `b b`, a pair
    /// `P^a P^b` with `a < pb`, or a triple `P^a b P^b` with `a <= pb`.
    pub(crate) fn first_violation(&self) -> Option<usize> {
        let p = self.prime.get() as i64;
        let ls = &self.letters;
        for i in 0..ls.len() {
            match (ls.get(i), ls.get(i + 1), ls.get(i + 2)) {
                (Some(Letter::Sq(a)), Some(Letter::Sq(b)), _) if (*a as i64) < 2 * (*b as i64) => {
                    return Some(i)
                }
                (Some(Letter::Beta), Some(Letter::Beta), _) => return Some(i),
                (Some(Letter::P(a)), Some(Letter::P(b)), _) if (*a as i64) < p * (*b as i64) => {
                    return Some(i)
                }
                (Some(Letter::P(a)), Some(Letter::Beta), Some(Letter::P(b)))
                    if (*a as i64) <= p * (*b as i64) =>
                {
                    return Some(i)
                }
                _ => {}
            }
        }
        None
    }

    pub fn is_admissible(&self) -> bool {
        self.first_violation().is_none()
    }
}

impl fmt::Display for SteenrodWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let words: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", words.join(" "))
    }
}
