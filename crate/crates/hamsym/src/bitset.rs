//! Fixed-capacity bitsets backed by `u64` words, sized for distance graphs
//! of a few thousand vertices.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(capacity: usize) -> Self {
        BitSet { words: vec![0; capacity.div_ceil(64)] }
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn full(capacity: usize) -> Self {
        let mut set = BitSet { words: vec![u64::MAX; capacity.div_ceil(64)] };
        let tail = capacity % 64;
        if tail != 0 {
            if let Some(last) = set.words.last_mut() {
                *last = (1u64 << tail) - 1;
            }
        }
        set
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self ∩ other` into a fresh set. Both operands must share capacity.
    pub fn intersection(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.words.len(), other.words.len());
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// True iff the sets share at least one element; no allocation.
    pub fn intersects(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Removes every element strictly below `k`.
    pub fn remove_below(&mut self, k: usize) {
        let full = (k / 64).min(self.words.len());
        for w in &mut self.words[..full] {
            *w = 0;
        }
        if full < self.words.len() && k % 64 != 0 {
            self.words[full] &= !((1u64 << (k % 64)) - 1);
        }
    }

    /// Ascending iteration over set bits.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            std::iter::successors(
                (w != 0).then_some(w),
                |&rest| {
                    let rest = rest & (rest - 1);
                    (rest != 0).then_some(rest)
                },
            )
            .map(move |rest| wi * 64 + rest.trailing_zeros() as usize)
        })
    }
}
