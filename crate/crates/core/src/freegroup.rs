//! Words in the free group on generators `v_0, v_1, ...`.
//!
//! A [`Word`] is always freely reduced. Words compare in shortlex order
//! (length first, then letter by letter), with letters ordered
//! `v_0 < v_0^-1 < v_1 < v_1^-1 < ...`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator `v_i` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: u32,
    // false sorts before true, which gives v_i < v_i^-1.
    inverse: bool,
}

impl Letter {
    pub const fn gen(index: u32) -> Self {
        Letter {
            index,
            inverse: false,
        }
    }

    pub const fn inv(index: u32) -> Self {
        Letter {
            index,
            inverse: true,
        }
    }

    /// `sign` must be `1` or `-1`.
    pub fn new(index: u32, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "letter sign must be +1 or -1");
        Letter {
            index,
            inverse: sign < 0,
        }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }

    /// Position in the letter order: `v_i -> 2i`, `v_i^-1 -> 2i + 1`.
    pub fn rank(self) -> usize {
        2 * self.index as usize + self.inverse as usize
    }

    pub fn from_rank(rank: usize) -> Self {
        Letter {
            index: (rank / 2) as u32,
            inverse: rank % 2 == 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.inverse { 'G' } else { 'g' };
        write!(f, "{tag}{}", self.index)
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l] }
    }

    pub fn generator(index: u32) -> Self {
        Word::letter(Letter::gen(index))
    }

    /// Free reduction by a single left-to-right stack pass.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            match letters.last() {
                Some(&top) if top.cancels(l) => {
                    letters.pop();
                }
                _ => letters.push(l),
            }
        }
        Word { letters }
    }

    /// Wraps letters already known to be freely reduced.
    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|p| !p[0].cancels(p[1])));
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Largest generator index occurring in the word.
    pub fn max_index(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.index).max()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            match letters.last() {
                Some(&top) if top.cancels(l) => {
                    letters.pop();
                }
                _ => letters.push(l),
            }
        }
        Word { letters }
    }

    /// `self^k` for `k >= 0`; negative exponents go through [`Word::inverse`].
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `c · self · c⁻¹`
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&a), Some(&b)) => self.letters.len() == 1 || !a.cancels(b),
            _ => true,
        }
    }

    /// Splits `self = conjugator · core · conjugator⁻¹` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].cancels(self.letters[n - 1 - k]) {
            k += 1;
        }
        let core = Word {
            letters: self.letters[k..n - k].to_vec(),
        };
        let conjugator = Word {
            letters: self.letters[..k].to_vec(),
        };
        (core, conjugator)
    }

    /// Rotation starting at position `k` (mod length). Only meaningful for
    /// cyclically reduced words, where the result is again reduced.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return Word::identity();
        }
        let k = k % self.letters.len();
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    pub fn cyclic_permutations(&self) -> Result<BTreeSet<Word>> {
        if !self.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced(self.to_string()));
        }
        if self.is_empty() {
            return Ok(BTreeSet::from([Word::identity()]));
        }
        Ok((0..self.len()).map(|k| self.rotate(k)).collect())
    }

    /// True if `other` is one of the rotations of `self`.
    pub fn is_rotation_of(&self, other: &Word) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let n = self.len();
        (0..n).any(|k| (0..n).all(|i| self.letters[(i + k) % n] == other.letters[i]))
    }

    /// Writes `self = root^k` with `k` maximal. The identity is its own root with `k = 1`.
    pub fn primitive_root(&self) -> (Word, usize) {
        let n = self.len();
        for d in 1..=n {
            if n.is_multiple_of(d) && (d..n).all(|i| self.letters[i] == self.letters[i - d]) {
                return (
                    Word {
                        letters: self.letters[..d].to_vec(),
                    },
                    n / d,
                );
            }
        }
        (self.clone(), 1)
    }

    /// Contiguous subword `[start, end)`. Subwords of reduced words are reduced.
    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word {
            letters: self.letters[start..end].to_vec(),
        }
    }

    pub fn contains_subword(&self, needle: &Word) -> bool {
        needle.is_empty()
            || self
                .letters
                .windows(needle.len())
                .any(|w| w == needle.letters())
    }

    /// Length of the longest common prefix with `other`.
    pub fn common_prefix_len(&self, other: &Word) -> usize {
        self.letters
            .iter()
            .zip(&other.letters)
            .take_while(|(a, b)| a == b)
            .count()
    }

    /// All reduced words over `v_0..v_{alphabet_size-1}` of length at most
    /// `max_len`, in shortlex order.
    pub fn all_up_to(alphabet_size: usize, max_len: usize) -> Vec<Word> {
        let letters: Vec<Letter> = (0..2 * alphabet_size).map(Letter::from_rank).collect();
        let mut out = vec![Word::identity()];
        let mut layer = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for &l in &letters {
                    if w.last().is_some_and(|t| t.cancels(l)) {
                        continue;
                    }
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(Word { letters });
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::reduce(iter)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Tokens `g<i>` and `G<i>` separated by whitespace; a lone `e` is the identity.
    fn from_str(text: &str) -> Result<Word> {
        let tokens: Vec<(usize, &str)> = text
            .split_whitespace()
            .map(|tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
            .collect();
        match tokens.as_slice() {
            [] => {
                return Err(Error::Parse {
                    position: 0,
                    message: "empty word text (use `e` for the identity)".into(),
                })
            }
            [(_, "e")] => return Ok(Word::identity()),
            _ => {}
        }
        let mut raw = Vec::with_capacity(tokens.len());
        for &(position, tok) in &tokens {
            let mut chars = tok.chars();
            let inverse = match chars.next() {
                Some('g') => false,
                Some('G') => true,
                _ => {
                    return Err(Error::Parse {
                        position,
                        message: format!("unexpected token `{tok}`"),
                    })
                }
            };
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse {
                    position,
                    message: format!("bad generator index in `{tok}`"),
                });
            }
            let index: u32 = digits.parse().map_err(|_| Error::Parse {
                position,
                message: format!("generator index too large in `{tok}`"),
            })?;
            raw.push(Letter { index, inverse });
        }
        Ok(Word::reduce(raw))
    }
}
