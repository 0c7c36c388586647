use std::fmt;

/// A sign vector in `{+, −}ⁿ` packed into 64-bit words; a set bit means `+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    len: usize,
    words: Vec<u64>,
}

pub(crate) fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl SignVector {
    /// All signs positive.
    pub fn positive(len: usize) -> Self {
        let mut words = vec![u64::MAX; word_count(len)];
        if !len.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (len % 64)) - 1;
            }
        }
        Self { len, words }
    }

    /// From signs `±1`; zero entries are rejected.
    pub fn from_signs(signs: &[i8]) -> Self {
        let mut v = Self { len: signs.len(), words: vec![0; word_count(signs.len())] };
        for (i, &s) in signs.iter().enumerate() {
            assert!(s == 1 || s == -1, "sign vector entry {i} is {s}");
            if s > 0 {
                v.words[i / 64] |= 1 << (i % 64);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_positive(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `+1` or `−1`.
    pub fn get(&self, i: usize) -> i8 {
        if self.is_positive(i) {
            1
        } else {
            -1
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn flipped(&self, i: usize) -> Self {
        let mut v = self.clone();
        v.flip(i);
        v
    }

    /// The antipodal sign vector `−σ`.
    pub fn negated(&self) -> Self {
        let full = Self::positive(self.len);
        let words = self.words.iter().zip(&full.words).map(|(w, m)| !w & m).collect();
        Self { len: self.len, words }
    }

    /// Representative of `{σ, −σ}` whose first sign is `+`.
    pub fn canonical(self) -> Self {
        if self.len == 0 || self.is_positive(0) {
            self
        } else {
            self.negated()
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.len == 0 || self.is_positive(0)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.is_positive(i) { "+" } else { "-" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_has_leading_plus() {
        let s = SignVector::from_signs(&[-1, 1, -1, -1]);
        assert_eq!(s.clone().canonical().to_string(), "+-++");
        assert_eq!(s.negated().negated(), s);
    }

    #[test]
    fn long_vectors_cross_word_boundaries() {
        let mut s = SignVector::positive(70);
        s.flip(0);
        s.flip(65);
        let c = s.canonical();
        assert!(c.is_positive(0) && c.is_positive(65) && !c.is_positive(1) && !c.is_positive(69));
        assert_eq!(c.negated().negated(), c);
        assert_eq!(SignVector::positive(70).negated().words(), &[0, 0]);
    }
}
