//! Plain bitvectors with rank/select support and a wavelet matrix over small
//! integer alphabets.

/// Bits per rank sample.
const SUPERBLOCK: usize = 512;
const WORDS_PER_SUPERBLOCK: usize = SUPERBLOCK / 64;

/// Number of bits needed to store values in `0..=max_value` (at least one).
pub fn bit_width(max_value: u64) -> u32 {
    (64 - max_value.leading_zeros()).max(1)
}

/// An immutable bitvector answering `rank1` in O(1) and `select1` in O(log n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankBitVec {
    words: Vec<u64>,
    len: usize,
    /// Ones strictly before each superblock, plus a final total.
    samples: Vec<usize>,
}

impl RankBitVec {
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % 64 == 0 {
                words.push(0);
            }
            if b {
                *words.last_mut().unwrap() |= 1 << (len % 64);
            }
            len += 1;
        }
        Self::from_words(words, len)
    }

    /// Wraps raw little-endian words; bits at or beyond `len` are cleared.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(64), 0);
        if !len.is_multiple_of(64) {
            let last = words.len() - 1;
            words[last] &= (1u64 << (len % 64)) - 1;
        }
        let mut samples = Vec::with_capacity(words.len() / WORDS_PER_SUPERBLOCK + 2);
        let mut acc = 0;
        for chunk in words.chunks(WORDS_PER_SUPERBLOCK) {
            samples.push(acc);
            acc += chunk.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        }
        samples.push(acc);
        RankBitVec {
            words,
            len,
            samples,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        *self.samples.last().unwrap()
    }

    /// Ones in positions `0..i`.
    pub fn rank1(&self, i: usize) -> usize {
        debug_assert!(i <= self.len);
        let w = i / 64;
        let sb = w / WORDS_PER_SUPERBLOCK;
        let mut r = self.samples[sb];
        for word in &self.words[sb * WORDS_PER_SUPERBLOCK..w] {
            r += word.count_ones() as usize;
        }
        if !i.is_multiple_of(64) {
            r += (self.words[w] & ((1u64 << (i % 64)) - 1)).count_ones() as usize;
        }
        r
    }

    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    /// Position of the `k`-th one (`k >= 1`), or `None` if there are fewer ones.
    pub fn select1(&self, k: usize) -> Option<usize> {
        if k == 0 || k > self.count_ones() {
            return None;
        }
        // Last superblock whose prefix count is < k.
        let sb = self.samples.partition_point(|&s| s < k) - 1;
        let mut remaining = k - self.samples[sb];
        let mut w = sb * WORDS_PER_SUPERBLOCK;
        loop {
            let ones = self.words[w].count_ones() as usize;
            if ones >= remaining {
                return Some(w * 64 + select_in_word(self.words[w], remaining));
            }
            remaining -= ones;
            w += 1;
        }
    }

    /// Heap bits used by the rank samples.
    pub fn overhead_bits(&self) -> usize {
        self.samples.len() * usize::BITS as usize
    }
}

fn select_in_word(mut word: u64, k: usize) -> usize {
    for _ in 1..k {
        word &= word - 1;
    }
    word.trailing_zeros() as usize
}

/// A wavelet matrix over symbols in `0..2^width`.
///
/// Supports access, per-symbol rank, quantile and distinct-symbol listing over
/// ranges, each in O(width) bitvector operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveletMatrix {
    len: usize,
    width: u32,
    levels: Vec<RankBitVec>,
    /// Zeros on each level.
    zeros: Vec<usize>,
}

impl WaveletMatrix {
    pub fn new(symbols: &[u32], width: u32) -> Self {
        let mut cur: Vec<u32> = symbols.to_vec();
        let mut levels = Vec::with_capacity(width as usize);
        let mut zeros = Vec::with_capacity(width as usize);
        for level in 0..width {
            let shift = width - 1 - level;
            let bv = RankBitVec::from_bits(cur.iter().map(|&s| (s >> shift) & 1 == 1));
            let (mut lo, hi): (Vec<u32>, Vec<u32>) =
                cur.iter().partition(|&&s| (s >> shift) & 1 == 0);
            zeros.push(lo.len());
            lo.extend(hi);
            cur = lo;
            levels.push(bv);
        }
        WaveletMatrix {
            len: symbols.len(),
            width,
            levels,
            zeros,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn get(&self, mut i: usize) -> u32 {
        let mut s = 0;
        for (level, bv) in self.levels.iter().enumerate() {
            let bit = bv.get(i);
            s = (s << 1) | bit as u32;
            i = if bit {
                self.zeros[level] + bv.rank1(i)
            } else {
                bv.rank0(i)
            };
        }
        s
    }

    /// Occurrences of `c` in positions `0..i`.
    pub fn rank(&self, c: u32, i: usize) -> usize {
        if self.width < 32 && c >> self.width != 0 {
            return 0;
        }
        let (mut lo, mut hi) = (0, i);
        for (level, bv) in self.levels.iter().enumerate() {
            let bit = (c >> (self.width - 1 - level as u32)) & 1 == 1;
            if bit {
                lo = self.zeros[level] + bv.rank1(lo);
                hi = self.zeros[level] + bv.rank1(hi);
            } else {
                lo = bv.rank0(lo);
                hi = bv.rank0(hi);
            }
        }
        hi - lo
    }

    /// Number of symbols strictly smaller than `c` in positions `0..i`.
    pub fn rank_less(&self, c: u32, i: usize) -> usize {
        if self.width < 32 && c >> self.width != 0 {
            return i;
        }
        let (mut lo, mut hi) = (0, i);
        let mut less = 0;
        for (level, bv) in self.levels.iter().enumerate() {
            let bit = (c >> (self.width - 1 - level as u32)) & 1 == 1;
            if bit {
                less += bv.rank0(hi) - bv.rank0(lo);
                lo = self.zeros[level] + bv.rank1(lo);
                hi = self.zeros[level] + bv.rank1(hi);
            } else {
                lo = bv.rank0(lo);
                hi = bv.rank0(hi);
            }
        }
        less
    }

    /// The `k`-th smallest symbol (`k` 0-based) among positions `start..end`.
    pub fn quantile(&self, mut start: usize, mut end: usize, mut k: usize) -> u32 {
        assert!(k < end - start, "quantile rank out of range");
        let mut s = 0;
        for (level, bv) in self.levels.iter().enumerate() {
            let z_start = bv.rank0(start);
            let z_end = bv.rank0(end);
            let z = z_end - z_start;
            if k < z {
                s <<= 1;
                start = z_start;
                end = z_end;
            } else {
                s = (s << 1) | 1;
                k -= z;
                start = self.zeros[level] + (start - z_start);
                end = self.zeros[level] + (end - z_end);
            }
        }
        s
    }

    /// Calls `f(symbol, count)` for every distinct symbol in `start..end`, in
    /// increasing symbol order.
    pub fn distinct_in_range<F: FnMut(u32, usize)>(&self, start: usize, end: usize, mut f: F) {
        if start < end {
            self.distinct_rec(0, 0, start, end, &mut f);
        }
    }

    fn distinct_rec<F: FnMut(u32, usize)>(
        &self,
        level: usize,
        prefix: u32,
        start: usize,
        end: usize,
        f: &mut F,
    ) {
        if level == self.levels.len() {
            f(prefix, end - start);
            return;
        }
        let bv = &self.levels[level];
        let z_start = bv.rank0(start);
        let z_end = bv.rank0(end);
        if z_start < z_end {
            self.distinct_rec(level + 1, prefix << 1, z_start, z_end, f);
        }
        let o_start = self.zeros[level] + (start - z_start);
        let o_end = self.zeros[level] + (end - z_end);
        if o_start < o_end {
            self.distinct_rec(level + 1, (prefix << 1) | 1, o_start, o_end, f);
        }
    }

    pub fn overhead_bits(&self) -> usize {
        self.levels.iter().map(|l| l.overhead_bits()).sum::<usize>()
            + self.zeros.len() * usize::BITS as usize
    }
}
