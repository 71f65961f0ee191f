/// Dense bitmap over colex ranks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RankBits {
    words: Vec<u64>,
}

impl RankBits {
    pub fn with_capacity(bits: usize) -> Self {
        RankBits {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    pub fn from_word(word: u64) -> Self {
        RankBits { words: vec![word] }
    }

    #[inline]
    pub fn get(&self, i: u64) -> bool {
        let (w, b) = ((i / 64) as usize, i % 64);
        self.words.get(w).is_some_and(|x| x >> b & 1 == 1)
    }

    #[inline]
    pub fn set(&mut self, i: u64) {
        let (w, b) = ((i / 64) as usize, i % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Set bits in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(wi as u64 * 64 + b)
            })
        })
    }

    /// Low word, for graphs whose ranks fit in 64 bits.
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_iter() {
        let mut b = RankBits::with_capacity(10);
        for i in [0, 3, 63, 64, 130] {
            b.set(i);
        }
        assert!(b.get(63) && b.get(64) && !b.get(65) && !b.get(1000));
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 3, 63, 64, 130]);
        assert_eq!(b.count(), 5);
    }
}
