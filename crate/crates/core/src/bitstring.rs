use std::fmt;
use std::str::FromStr;

use rand::Rng;

/// A fixed-length binary solution.
///
/// Bit 0 is the first position; `Display` prints bits in index order, so
/// `"10"` is the two-bit string with bit 0 set and bit 1 clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    /// All-zero string of `len` bits. Panics if `len == 0`; every solution
    /// has at least one bit.
    pub fn zeros(len: usize) -> Self {
        assert!(len >= 1, "a bit string must have at least one bit");
        BitString {
            bits: vec![false; len],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        assert!(!bits.is_empty(), "a bit string must have at least one bit");
        BitString { bits }
    }

    /// Uniform random string of `len` bits.
    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        assert!(len >= 1, "a bit string must have at least one bit");
        BitString {
            bits: (0..len).map(|_| rng.random::<bool>()).collect(),
        }
    }

    /// Decode `len` bits from an integer, bit `i` of the string taken from
    /// bit `i` of `index`. Inverse of [`BitString::to_index`].
    pub fn from_index(index: u64, len: usize) -> Self {
        assert!(
            (1..=64).contains(&len),
            "index encoding supports 1..=64 bits"
        );
        BitString {
            bits: (0..len).map(|i| (index >> i) & 1 == 1).collect(),
        }
    }

    /// Encode the string as an integer; only defined up to 64 bits.
    pub fn to_index(&self) -> u64 {
        assert!(self.len() <= 64, "index encoding supports 1..=64 bits");
        self.bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | ((b as u64) << i))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is at least 1 by construction
    }

    pub fn bit(&self, index: usize) -> bool {
        self.bits[index]
    }

    pub fn set(&mut self, index: usize, value: bool) {
        self.bits[index] = value;
    }

    pub fn flip(&mut self, index: usize) {
        self.bits[index] = !self.bits[index];
    }

    /// Copy with bit `index` flipped: the Hamming-1 neighbor in that
    /// direction.
    pub fn flipped(&self, index: usize) -> Self {
        let mut copy = self.clone();
        copy.flip(index);
        copy
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    pub fn hamming_distance(&self, other: &BitString) -> usize {
        assert_eq!(self.len(), other.len(), "length mismatch");
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseBitStringError {
    #[error("empty bit string")]
    Empty,
    #[error("invalid character {0:?}; expected '0' or '1'")]
    InvalidChar(char),
}

impl FromStr for BitString {
    type Err = ParseBitStringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseBitStringError::Empty);
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ParseBitStringError::InvalidChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BitString { bits })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn display_prints_bit_zero_first() {
        let mut s = BitString::zeros(2);
        s.flip(0);
        assert_eq!(s.to_string(), "10");
    }

    #[test]
    fn parse_roundtrip() {
        let s: BitString = "01101".parse().unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.to_string(), "01101");
        assert!("".parse::<BitString>().is_err());
        assert!("01x".parse::<BitString>().is_err());
    }

    #[test]
    fn flip_twice_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = BitString::random(16, &mut rng);
        for i in 0..16 {
            assert_eq!(s.flipped(i).flipped(i), s);
        }
    }

    #[test]
    fn index_roundtrip() {
        for idx in 0..32u64 {
            let s = BitString::from_index(idx, 5);
            assert_eq!(s.to_index(), idx);
        }
        let s = BitString::from_index(0b101, 4);
        assert_eq!(s.to_string(), "1010");
    }

    #[test]
    fn hamming_distance_counts_differing_bits() {
        let a: BitString = "0000".parse().unwrap();
        let b: BitString = "0110".parse().unwrap();
        assert_eq!(a.hamming_distance(&b), 2);
        assert_eq!(a.hamming_distance(&a), 0);
    }

    #[test]
    #[should_panic(expected = "at least one bit")]
    fn zero_length_rejected() {
        let _ = BitString::zeros(0);
    }
}
