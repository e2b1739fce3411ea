//! Braid words, their closures, and Markov moves.
//!
//! A braid on `n` strands is a word in the Artin generators σ_1, …, σ_{n−1}
//! and their inverses. The text form is a whitespace-separated list of
//! nonzero integers: `k` stands for σ_k and `-k` for σ_k⁻¹, so the
//! figure-eight knot is `"1 -2 1 -2"`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::{Error, Result};

/// Orientation of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One letter σ_index^{±1}; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, sign: self.sign.flip() }
    }
}

/// A braid word together with its strand count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a word, checking every index against `strands`.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand"));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::GeneratorOutOfRange { index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Builds a word from signed integers; strand count as in [`parse_braid`].
    pub fn from_signed(word: &[i64], strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::with_capacity(word.len());
        for &k in word {
            if k == 0 {
                return Err(Error::BraidParse { token: "0".to_string(), reason: "zero is not a generator" });
            }
            let sign = if k > 0 { Sign::Pos } else { Sign::Neg };
            letters.push(Letter::new(k.unsigned_abs() as usize, sign));
        }
        let needed = letters.iter().map(|l| l.index + 1).max().unwrap_or(1);
        Self::new(strands.unwrap_or(needed), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    /// Sum of the exponents.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.as_i32() as i64).sum()
    }

    /// The word read backwards with every sign flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Where each strand ends up after traversing the braid once.
    pub fn closure_permutation(&self) -> StrandPermutation {
        // strand_at[p] = the strand currently at position p.
        let n = self.strands;
        let mut strand_at: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            strand_at.swap(l.index - 1, l.index);
        }
        let mut images = alloc::vec![0; n];
        for (pos, &strand) in strand_at.iter().enumerate() {
            images[strand] = pos + 1;
        }
        StrandPermutation { images }
    }

    /// Number of link components of the closure.
    pub fn components(&self) -> usize {
        self.closure_permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    /// `a⁻¹ · self · a`.
    pub fn conjugate(&self, a: &BraidWord) -> Result<BraidWord> {
        a.inverse().compose(self)?.compose(a)
    }

    /// Appends σ_n^{±1} on a new strand.
    pub fn stabilize(&self, sign: Sign) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, sign));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// True when the word ends in σ_{n−1}^{±1} and σ_{n−1} appears nowhere else.
    pub fn can_destabilize(&self) -> bool {
        let n = self.strands;
        match self.letters.split_last() {
            Some((last, rest)) if n >= 2 => {
                last.index == n - 1 && rest.iter().all(|l| l.index != n - 1)
            }
            _ => false,
        }
    }

    /// Inverse of [`BraidWord::stabilize`].
    pub fn destabilize(&self) -> Result<BraidWord> {
        if !self.can_destabilize() {
            return Err(Error::NotDestabilizable);
        }
        let mut letters = self.letters.clone();
        letters.pop();
        Ok(BraidWord { strands: self.strands - 1, letters })
    }

    /// Applies `moves` random Markov moves, never exceeding six strands.
    pub fn random_markov_walk(&self, moves: usize, seed: u64) -> BraidWord {
        self.random_markov_walk_capped(moves, seed, 6)
    }

    /// Random walk of conjugations, stabilizations and tail destabilizations.
    ///
    /// Stabilizations are skipped once the word has `max_strands` strands, so
    /// that the state sums stay tractable. Each move is drawn with the same
    /// weights regardless of the word; moves that are unavailable fall back to
    /// a conjugation (or a stabilization on one strand).
    pub fn random_markov_walk_capped(&self, moves: usize, seed: u64, max_strands: usize) -> BraidWord {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut b = self.clone();
        for _ in 0..moves {
            let choice = rng.next_u32() % 4;
            let sign = if rng.next_u32() & 1 == 0 { Sign::Pos } else { Sign::Neg };
            if choice == 2 && b.strands < max_strands.max(2) {
                b = b.stabilize(sign);
                continue;
            }
            if choice == 3 && b.can_destabilize() {
                b = b.destabilize().expect("checked");
                continue;
            }
            if b.strands == 1 {
                b = b.stabilize(sign);
                continue;
            }
            if choice == 1 && b.len() >= 2 {
                // Cyclic rotation: move the first letter to the end.
                let mut letters = b.letters.clone();
                letters.rotate_left(1);
                b = BraidWord { strands: b.strands, letters };
                continue;
            }
            let index = 1 + (rng.next_u32() as usize) % (b.strands - 1);
            let a = BraidWord { strands: b.strands, letters: alloc::vec![Letter::new(index, sign)] };
            b = b.conjugate(&a).expect("same strand count");
        }
        b
    }

    /// Highest generator index used, or 0 for the empty word.
    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.sign.as_i32() as i64 * l.index as i64)?;
        }
        Ok(())
    }
}

/// Parses a braid word from its text form.
///
/// Without `strands`, the count is one more than the largest index used (one
/// strand for the empty word).
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let mut word = Vec::new();
    for token in text.split_whitespace() {
        let k: i64 = token.parse().map_err(|_| Error::BraidParse {
            token: String::from(token),
            reason: "not an integer",
        })?;
        if k == 0 {
            return Err(Error::BraidParse { token: String::from(token), reason: "zero is not a generator" });
        }
        word.push(k);
    }
    BraidWord::from_signed(&word, strands)
}

/// A pseudo-random braid word, deterministic in `seed`.
///
/// The strand count is drawn from `2..=max_strands` (one strand when
/// `max_strands < 2`), the length from `0..=max_len`, and each letter
/// uniformly among the available generators and signs.
pub fn random_braid(max_strands: usize, max_len: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if max_strands < 2 {
        return BraidWord { strands: 1, letters: Vec::new() };
    }
    let strands = 2 + (rng.next_u32() as usize) % (max_strands - 1);
    let len = (rng.next_u32() as usize) % (max_len + 1);
    let letters = (0..len)
        .map(|_| {
            let index = 1 + (rng.next_u32() as usize) % (strands - 1);
            let sign = if rng.next_u32() & 1 == 0 { Sign::Pos } else { Sign::Neg };
            Letter::new(index, sign)
        })
        .collect();
    BraidWord { strands, letters }
}

/// A permutation of `{1, …, n}` stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    images: Vec<usize>,
}

impl StrandPermutation {
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based position `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] - 1;
            }
        }
        cycles
    }
}
