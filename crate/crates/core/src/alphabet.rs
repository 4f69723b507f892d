use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Letters are 1-based positions in an ordered alphabet.
pub type Letter = u32;

/// A finite sequence of letters, `w[0]` first.
pub type Word = Vec<Letter>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Anything that can tell whether a letter is odd.
pub trait Grading {
    fn is_odd(&self, a: Letter) -> bool;
}

/// The ordinary alphabet of positive integers, all letters even.
#[derive(Clone, Copy, Debug, Default)]
pub struct Ordinary;

impl Grading for Ordinary {
    fn is_odd(&self, _a: Letter) -> bool {
        false
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub symbol: String,
    pub parity: Parity,
}

/// A finite linearly ordered alphabet with a Z/2 grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedAlphabet {
    letters: Vec<Symbol>,
}

impl GradedAlphabet {
    pub fn new(letters: Vec<Symbol>) -> Result<GradedAlphabet> {
        let mut seen = std::collections::HashSet::new();
        for l in &letters {
            if !seen.insert(l.symbol.clone()) {
                return Err(Error::Parse(format!("duplicate letter '{}'", l.symbol)));
            }
        }
        Ok(GradedAlphabet { letters })
    }

    /// {1 < 2 < ... < k}, all even.
    pub fn standard(k: usize) -> GradedAlphabet {
        GradedAlphabet::from_parities(&vec![Parity::Even; k])
    }

    /// Letters x1, x2, ... with the given parities in order.
    pub fn from_parities(parities: &[Parity]) -> GradedAlphabet {
        let mut ne = 0;
        let mut no = 0;
        let letters = parities
            .iter()
            .map(|&p| {
                let symbol = match p {
                    Parity::Even => {
                        ne += 1;
                        format!("x{ne}")
                    }
                    Parity::Odd => {
                        no += 1;
                        format!("y{no}")
                    }
                };
                Symbol { symbol, parity: p }
            })
            .collect();
        GradedAlphabet { letters }
    }

    /// `even` even letters followed by `odd` odd ones.
    pub fn mixed(even: usize, odd: usize) -> GradedAlphabet {
        let mut p = vec![Parity::Even; even];
        p.extend(std::iter::repeat_n(Parity::Odd, odd));
        GradedAlphabet::from_parities(&p)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        1..=self.letters.len() as Letter
    }

    pub fn symbol(&self, a: Letter) -> &str {
        &self.letters[a as usize - 1].symbol
    }

    pub fn parity(&self, a: Letter) -> Parity {
        self.letters[a as usize - 1].parity
    }

    pub fn contains(&self, a: Letter) -> bool {
        a >= 1 && (a as usize) <= self.letters.len()
    }

    pub fn check(&self, a: Letter) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange(a))
        }
    }

    pub fn count(&self, parity: Parity) -> usize {
        self.letters.iter().filter(|l| l.parity == parity).count()
    }

    /// The dual alphabet: order reversed, parities kept.
    pub fn dual(&self) -> GradedAlphabet {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Symbol { symbol: format!("{}^v", l.symbol), parity: l.parity })
            .collect();
        GradedAlphabet { letters }
    }

    /// Position of a letter of `self` inside `self.dual()`.
    pub fn dual_letter(&self, a: Letter) -> Letter {
        self.letters.len() as Letter + 1 - a
    }
}

impl Grading for GradedAlphabet {
    fn is_odd(&self, a: Letter) -> bool {
        self.parity(a) == Parity::Odd
    }
}
