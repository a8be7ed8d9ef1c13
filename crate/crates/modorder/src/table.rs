//! Dense operation tables and bit sets used by every structure in the crate.
//!
//! All finite structures are stored as index tables: elements are `0..n` and a
//! binary operation is a row-major `rows x cols` table of `u32` indices.

/// Row-major table of indices, `rows x cols`, entries `< entry_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl OpTable {
    pub fn from_rows(rows_data: &[Vec<u32>], cols: usize) -> Option<OpTable> {
        let rows = rows_data.len();
        let mut data = Vec::with_capacity(rows * cols);
        for row in rows_data {
            if row.len() != cols {
                return None;
            }
            data.extend_from_slice(row);
        }
        Some(OpTable { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> OpTable {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        OpTable { rows, cols, data }
    }

    #[inline(always)]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.data[i * self.cols + j] as usize
    }

    #[inline(always)]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Largest entry value, or None for an empty table.
    pub fn max_entry(&self) -> Option<u32> {
        self.data.iter().copied().max()
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }
}

/// Fixed-length bit set over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Bitset {
        Bitset { len, words: vec![0; len.div_ceil(64)] }
    }

    #[inline(always)]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline(always)]
    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection_count(&self, other: &Bitset) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &Bitset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// First index present in `self` but not in `other`.
    pub fn first_not_in(&self, other: &Bitset) -> Option<usize> {
        for (k, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let diff = a & !b;
            if diff != 0 {
                return Some(k * 64 + diff.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    /// Raw backing words; usable as a cheap hash/equality key for sets over
    /// the same ground size.
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Square boolean relation matrix with bitset rows: `get(i, j)` means "i related to j".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> BitMatrix {
        let words_per_row = n.div_ceil(64).max(1);
        BitMatrix { n, words_per_row, words: vec![0; n * words_per_row] }
    }

    #[inline(always)]
    pub fn set(&mut self, i: usize, j: usize) {
        self.words[i * self.words_per_row + j / 64] |= 1u64 << (j % 64);
    }

    #[inline(always)]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.words_per_row + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn row_iter_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    /// Is row(sub) a subset of row(sup)?
    pub fn row_subset(&self, sub: usize, sup: usize) -> bool {
        let a = self.row(sub);
        let b = self.row(sup);
        a.iter().zip(b).all(|(x, y)| x & !y == 0)
    }

    /// First column set in row `sub` but not in row `sup`.
    pub fn row_first_not_in(&self, sub: usize, sup: usize) -> Option<usize> {
        let a = self.row(sub);
        let b = self.row(sup);
        for (k, (x, y)) in a.iter().zip(b).enumerate() {
            let diff = x & !y;
            if diff != 0 {
                return Some(k * 64 + diff.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_count_ones(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.row_iter_ones(i).collect::<Vec<_>>() {
                t.set(j, i);
            }
        }
        t
    }

    /// Bitwise AND with another matrix of the same size.
    pub fn and_with(&mut self, other: &BitMatrix) {
        debug_assert_eq!(self.n, other.n);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    /// Do rows `i` of self and `j` of `other` share a set bit?
    pub fn rows_intersect(&self, i: usize, other: &BitMatrix, j: usize) -> bool {
        self.row(i).iter().zip(other.row(j)).any(|(x, y)| x & y != 0)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
