//! Sign sequences, bracketing, and the crystal structure on words.

use crate::alphabet::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Dot,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Dot => '.',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Raise,
    Lower,
}

/// Cancels every pair `(opener, other)` that becomes adjacent after dots and
/// earlier cancellations are ignored. Returns which entries survive.
///
/// Single stack pass: each closer cancels the nearest unmatched opener to its left.
pub fn bracket(signs: &[Sign], opener: Sign) -> Vec<bool> {
    let mut alive = vec![false; signs.len()];
    let mut open: Vec<usize> = Vec::new();
    for (p, &s) in signs.iter().enumerate() {
        match s {
            Sign::Dot => {}
            s if s == opener => {
                alive[p] = true;
                open.push(p);
            }
            _ => {
                if let Some(q) = open.pop() {
                    alive[q] = false;
                } else {
                    alive[p] = true;
                }
            }
        }
    }
    alive
}

/// Signature of a word for index i: letter i is `+`, letter i+1 is `-`.
pub fn word_signs(w: &[Letter], i: Letter) -> Vec<Sign> {
    w.iter()
        .map(|&a| {
            if a == i {
                Sign::Plus
            } else if a == i + 1 {
                Sign::Minus
            } else {
                Sign::Dot
            }
        })
        .collect()
}

/// Uncancelled minus and plus positions, each in increasing order.
///
/// With w = w₁⊗…⊗w_r, pairs `+ -` cancel and the reduced form is `-…- +…+`.
pub fn reduced_positions(w: &[Letter], i: Letter) -> (Vec<usize>, Vec<usize>) {
    let signs = word_signs(w, i);
    let alive = bracket(&signs, Sign::Plus);
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for (p, s) in signs.iter().enumerate() {
        if alive[p] {
            match s {
                Sign::Minus => minus.push(p),
                Sign::Plus => plus.push(p),
                Sign::Dot => {}
            }
        }
    }
    (minus, plus)
}

/// The position changed by ẽ_i or f̃_i, if any.
pub fn acting_position(w: &[Letter], i: Letter, dir: Dir) -> Option<usize> {
    let (minus, plus) = reduced_positions(w, i);
    match dir {
        Dir::Raise => minus.last().copied(),
        Dir::Lower => plus.first().copied(),
    }
}

/// ẽ_i / f̃_i on a word; `None` is the crystal zero.
pub fn word_op(w: &[Letter], i: Letter, dir: Dir) -> Option<Word> {
    let p = acting_position(w, i, dir)?;
    let mut out = w.to_vec();
    out[p] = match dir {
        Dir::Raise => i,
        Dir::Lower => i + 1,
    };
    Some(out)
}

pub fn word_eps(w: &[Letter], i: Letter) -> usize {
    reduced_positions(w, i).0.len()
}

pub fn word_phi(w: &[Letter], i: Letter) -> usize {
    reduced_positions(w, i).1.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_letters() {
        assert_eq!(word_op(&[1], 1, Dir::Lower), Some(vec![2]));
        assert_eq!(word_op(&[1], 1, Dir::Raise), None);
        assert_eq!(word_op(&[2], 1, Dir::Raise), Some(vec![1]));
    }

    #[test]
    fn tensor_rule_on_short_words() {
        // - + + : nothing cancels, f acts on the first +
        assert_eq!(word_op(&[2, 1, 1], 1, Dir::Lower), Some(vec![2, 2, 1]));
        // + - cancels
        assert_eq!(word_op(&[1, 2], 1, Dir::Lower), None);
        assert_eq!(word_op(&[1, 2], 1, Dir::Raise), None);
        assert_eq!(word_eps(&[2, 2, 1], 1), 2);
        assert_eq!(word_phi(&[2, 2, 1], 1), 1);
    }

    #[test]
    fn bracket_both_orientations() {
        use Sign::*;
        let s = [Minus, Plus, Dot, Minus, Plus, Plus];
        assert_eq!(bracket(&s, Minus), vec![false, false, false, false, false, true]);
        assert_eq!(bracket(&s, Plus), vec![true, false, false, false, true, true]);
    }
}
