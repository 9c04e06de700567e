//! Packed bit strings for binary trend representations.

use serde::{Serialize, Serializer};

const WORD: usize = u64::BITS as usize;

/// A fixed-length bit string packed into 64-bit words, least significant bit
/// first. Bits past `len` in the last word are always zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitString {
    words: Vec<u64>,
    len: usize,
}

impl BitString {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, j: usize) -> bool {
        assert!(j < self.len, "bit {j} out of range for length {}", self.len);
        self.words[j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, j: usize) {
        assert!(j < self.len, "bit {j} out of range for length {}", self.len);
        self.words[j / WORD] |= 1 << (j % WORD);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of set bits in `range`.
    pub fn count_ones_in(&self, range: std::ops::Range<usize>) -> usize {
        range.filter(|&j| self.get(j)).count()
    }

    /// `popcount(self XOR other)`. Panics on length mismatch.
    pub fn hamming(&self, other: &BitString) -> usize {
        assert_eq!(self.len, other.len, "bit string lengths differ");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = bool> + '_ {
        (0..self.len).map(|j| self.get(j))
    }
}

impl FromIterator<bool> for BitString {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in iter {
            if len % WORD == 0 {
                words.push(0);
            }
            if bit {
                *words.last_mut().unwrap() |= 1 << (len % WORD);
            }
            len += 1;
        }
        Self { words, len }
    }
}

impl std::fmt::Display for BitString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_and_count() {
        let b: BitString = "0110000".chars().map(|c| c == '1').collect();
        assert_eq!(b.to_string(), "0110000");
        assert_eq!(b.count_ones(), 2);
        assert_eq!(b.count_ones_in(0..2), 1);
    }

    #[test]
    fn hamming_of_complements_is_len() {
        let ones: BitString = std::iter::repeat_n(true, 130).collect();
        assert_eq!(ones.hamming(&BitString::zeros(130)), 130);
    }

    proptest! {
        #[test]
        fn hamming_matches_per_bit_loop(
            pair in (1usize..300).prop_flat_map(|n| (
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec(any::<bool>(), n),
            ))
        ) {
            let (a, b) = pair;
            let naive = a.iter().zip(&b).filter(|(x, y)| x != y).count();
            let pa: BitString = a.iter().copied().collect();
            let pb: BitString = b.iter().copied().collect();
            prop_assert_eq!(pa.hamming(&pb), naive);
            prop_assert_eq!(pa.iter().collect::<Vec<_>>(), a);
        }
    }
}
