//! Two-level queue of positions keyed by LCP value.
//!
//! Level `t` is drained before level `t + 1` is touched. Each level starts as a
//! FIFO vector and turns into a packed bitset over `1..=n` once it holds more
//! than `threshold` positions; a bitset level pops in increasing position
//! order. Positions pushed into one level must be distinct.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
enum Level {
    Fifo(VecDeque<usize>),
    Bits {
        words: Vec<u64>,
        len: usize,
        cursor: usize,
    },
}

impl Level {
    fn new() -> Self {
        Level::Fifo(VecDeque::new())
    }

    fn len(&self) -> usize {
        match self {
            Level::Fifo(q) => q.len(),
            Level::Bits { len, .. } => *len,
        }
    }

    fn push(&mut self, i: usize, n: usize, threshold: usize) {
        match self {
            Level::Fifo(q) => {
                q.push_back(i);
                if q.len() > threshold {
                    let mut words = vec![0u64; (n + 1).div_ceil(64)];
                    for &p in q.iter() {
                        words[p / 64] |= 1 << (p % 64);
                    }
                    *self = Level::Bits {
                        words,
                        len: q.len(),
                        cursor: 0,
                    };
                }
            }
            Level::Bits { words, len, .. } => {
                debug_assert!(
                    words[i / 64] >> (i % 64) & 1 == 0,
                    "position {i} pushed twice"
                );
                words[i / 64] |= 1 << (i % 64);
                *len += 1;
            }
        }
    }

    fn pop(&mut self) -> Option<usize> {
        match self {
            Level::Fifo(q) => q.pop_front(),
            Level::Bits { words, len, cursor } => {
                if *len == 0 {
                    return None;
                }
                while words[*cursor] == 0 {
                    *cursor += 1;
                }
                let w = &mut words[*cursor];
                let bit = w.trailing_zeros() as usize;
                *w &= *w - 1;
                *len -= 1;
                Some(*cursor * 64 + bit)
            }
        }
    }

    fn is_bits(&self) -> bool {
        matches!(self, Level::Bits { .. })
    }
}

#[derive(Clone, Debug)]
pub struct LevelQueue {
    n: usize,
    threshold: usize,
    value: u64,
    current: Level,
    next: Level,
}

impl LevelQueue {
    /// Queue over positions `1..=n` with the default switch threshold
    /// `n / log2(n)`.
    pub fn new(n: usize) -> Self {
        Self::with_threshold(n, Self::default_threshold(n))
    }

    pub fn default_threshold(n: usize) -> usize {
        n / (n.max(1).ilog2() as usize).max(1)
    }

    /// `usize::MAX` never switches to bitsets; `0` switches on the first push.
    pub fn with_threshold(n: usize, threshold: usize) -> Self {
        LevelQueue {
            n,
            threshold,
            value: 0,
            current: Level::new(),
            next: Level::new(),
        }
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    /// Value of the level being drained.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Pushes `i` with the current value.
    pub fn push_current(&mut self, i: usize) {
        debug_assert!((1..=self.n).contains(&i));
        self.current.push(i, self.n, self.threshold);
    }

    /// Pushes `i` with the current value plus one.
    pub fn push_next(&mut self, i: usize) {
        debug_assert!((1..=self.n).contains(&i));
        self.next.push(i, self.n, self.threshold);
    }

    pub fn len(&self) -> usize {
        self.current.len() + self.next.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether either level is currently in bitset mode.
    pub fn uses_bitset(&self) -> bool {
        self.current.is_bits() || self.next.is_bits()
    }

    pub fn pop(&mut self) -> Option<(usize, u64)> {
        if self.current.len() == 0 {
            if self.next.len() == 0 {
                return None;
            }
            std::mem::swap(&mut self.current, &mut self.next);
            self.next = Level::new();
            self.value += 1;
        }
        self.current.pop().map(|i| (i, self.value))
    }
}
