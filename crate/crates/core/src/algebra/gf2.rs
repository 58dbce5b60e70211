//! Rank over Z/2 with rows packed into machine words.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut r = Self::zeros(len);
        for i in ones {
            r.flip(i);
        }
        r
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn leading(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

/// Incremental row echelon form over Z/2.
#[derive(Debug, Default)]
pub struct BitEchelon {
    pivots: std::collections::HashMap<usize, BitRow>,
}

impl BitEchelon {
    /// Reduces `row`; returns whether it was independent of the rows inserted so far.
    pub fn insert(&mut self, mut row: BitRow) -> bool {
        while let Some(lead) = row.leading() {
            match self.pivots.get(&lead) {
                Some(p) => row.xor_assign(p),
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rank(rows: impl IntoIterator<Item = BitRow>) -> usize {
    let mut e = BitEchelon::default();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let rows = [vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(
            rank(
                rows.iter()
                    .map(|r| BitRow::from_indices(3, r.iter().copied()))
            ),
            2
        );
        let wide: Vec<BitRow> = (0..100)
            .map(|i| BitRow::from_indices(130, [i, i + 30]))
            .collect();
        assert_eq!(rank(wide), 100);
    }

    #[test]
    fn leading_bit_spans_words() {
        let r = BitRow::from_indices(200, [150, 199]);
        assert_eq!(r.leading(), Some(150));
        assert!(r.get(199) && !r.get(0));
    }
}
