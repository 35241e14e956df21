//! Small fixed-universe bitset and bit-matrix helpers used throughout the crate.

/// A set of poset elements, backed by 64-bit words.
///
/// Ordering is lexicographic on the word vector, which gives a deterministic
/// (if arbitrary) total order used to pick canonical orbit representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = Self::empty(n);
        for i in it {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Elements of `0..n` not in the set.
    pub fn complement(&self, n: usize) -> ElemSet {
        let mut s = Self::empty(n);
        for i in 0..n {
            if !self.contains(i) {
                s.insert(i);
            }
        }
        s
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Dense square boolean matrix, one bit per entry.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    width: usize, // words per row
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let width = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            width,
            bits: vec![0; n * width],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.width + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.width + j / 64] |= 1u64 << (j % 64);
    }

    /// OR row `src` into row `dst`.
    pub fn or_row(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.width, src * self.width);
        for k in 0..self.width {
            let v = self.bits[s + k];
            self.bits[d + k] |= v;
        }
    }

    /// In-place reflexive-transitive closure (rows read as "row i = set of j with i R j").
    pub fn close_transitively(&mut self) {
        for i in 0..self.n {
            self.set(i, i);
        }
        // Warshall, vectorized over row words.
        for k in 0..self.n {
            for i in 0..self.n {
                if self.get(i, k) {
                    self.or_row(i, k);
                }
            }
        }
    }

    pub fn row_iter(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[i * self.width..(i + 1) * self.width];
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.bits[i * self.width..(i + 1) * self.width]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }
}
