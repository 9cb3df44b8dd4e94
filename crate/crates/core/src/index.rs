//! The succinct `(C, OUT, L)` representation of a deterministic Wheeler
//! pseudoforest.
//!
//! `L` concatenates the sorted out-labels of nodes `1..=n`; `OUT` is
//! `0^out(1) 1 0^out(2) 1 ...`; `C[c]` counts the nodes whose incoming label is
//! smaller than `c`.

use std::io::{Read, Write};

use thiserror::Error;

use crate::bits::{bit_width, RankBitVec, WaveletMatrix};
use crate::graph::{AxiomViolation, PseudoforestError, WheelerPseudoforest};

/// Magic bytes opening the binary index format.
pub const MAGIC: &[u8; 5] = b"WPFX1";

#[derive(Debug, Error)]
pub enum IndexError {
    #[error("not a Wheeler pseudoforest: {0}")]
    NotWheeler(AxiomViolation),
    #[error("malformed index: {0}")]
    Format(String),
    #[error("index does not describe a pseudoforest: {0}")]
    Pseudoforest(#[from] PseudoforestError),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

/// Bit accounting for an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpaceReport {
    pub n: usize,
    pub sigma: u32,
    /// `n * code_width`.
    pub l_bits: usize,
    /// `2n`.
    pub out_bits: usize,
    pub code_width: u32,
    /// The cached `C` array.
    pub c_bits: usize,
    /// Rank/select samples of `OUT` and the wavelet levels.
    pub overhead_bits: usize,
}

impl SpaceReport {
    pub fn payload_bits(&self) -> usize {
        self.l_bits + self.out_bits
    }

    /// `n * ceil(log2(sigma + 1)) + 2n`.
    pub fn payload_bound(&self) -> usize {
        self.n * bit_width(self.sigma as u64) as usize + 2 * self.n
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccinctWheelerIndex {
    n: usize,
    sigma: u32,
    out: RankBitVec,
    l: WaveletMatrix,
    /// `c[x]` = symbols of `L` smaller than `x`, for `x` in `0..=sigma`.
    c: Vec<usize>,
}

impl SuccinctWheelerIndex {
    /// Builds the index; the identity numbering must be a Wheeler order.
    pub fn build(p: &WheelerPseudoforest) -> Result<Self, IndexError> {
        p.check_wheeler_axioms().map_err(IndexError::NotWheeler)?;
        let n = p.n();
        let mut labels = Vec::with_capacity(n);
        let mut bits = Vec::with_capacity(2 * n);
        for i in 1..=n {
            for &(c, _) in p.out_edges(i) {
                labels.push(c);
                bits.push(false);
            }
            bits.push(true);
        }
        Ok(Self::from_parts(
            n,
            p.sigma(),
            RankBitVec::from_bits(bits),
            &labels,
        ))
    }

    fn from_parts(n: usize, sigma: u32, out: RankBitVec, labels: &[u32]) -> Self {
        let mut c = vec![0usize; sigma as usize + 1];
        for &s in labels {
            c[s as usize + 1] += 1;
        }
        for x in 1..c.len() {
            c[x] += c[x - 1];
        }
        let l = WaveletMatrix::new(labels, bit_width(sigma.saturating_sub(1) as u64));
        SuccinctWheelerIndex {
            n,
            sigma,
            out,
            l,
            c,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Labels lie in `0..sigma()`.
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    /// `C[c]`; defined for `c` in `0..=sigma`.
    pub fn c(&self, c: u32) -> usize {
        self.c[c as usize]
    }

    /// Number of nodes with an outgoing `c`-edge.
    pub fn count(&self, c: u32) -> usize {
        self.c[c as usize + 1] - self.c[c as usize]
    }

    /// Entries of `L` belonging to nodes `1..i`; zero for `i = 1`.
    pub fn out_prefix(&self, i: usize) -> usize {
        debug_assert!((1..=self.n + 1).contains(&i));
        if i == 1 {
            return 0;
        }
        self.out.select1(i - 1).expect("OUT has n ones") + 2 - i
    }

    /// The half-open range of `L` holding the out-labels of node `i`.
    pub fn out_range(&self, i: usize) -> (usize, usize) {
        (self.out_prefix(i), self.out_prefix(i + 1))
    }

    pub fn out_degree(&self, i: usize) -> usize {
        let (a, b) = self.out_range(i);
        b - a
    }

    /// Target of the `c`-edge leaving the smallest node `k >= i` that has one.
    pub fn forward_step(&self, i: usize, c: u32) -> Option<usize> {
        debug_assert!((1..=self.n).contains(&i) && c < self.sigma);
        let r = self.l.rank(c, self.out_prefix(i));
        (r < self.count(c)).then(|| self.c[c as usize] + r + 1)
    }

    /// The `j`-th smallest (1-based) out-label of node `i`.
    pub fn out_label(&self, i: usize, j: usize) -> Option<u32> {
        let (a, b) = self.out_range(i);
        (j >= 1 && a + j <= b).then(|| self.l.get(a + j - 1))
    }

    /// The label of the edge entering node `i`: the `i`-th smallest symbol of `L`.
    pub fn incoming_label(&self, i: usize) -> u32 {
        self.l.quantile(0, self.n, i - 1)
    }

    /// Calls `f(c)` for each distinct out-label of nodes in `[lo, hi]`, increasing.
    pub fn distinct_out_labels<F: FnMut(u32)>(&self, lo: usize, hi: usize, mut f: F) {
        let a = self.out_prefix(lo);
        let b = self.out_prefix(hi + 1);
        self.l.distinct_in_range(a, b, |c, _| f(c));
    }

    /// Rank of `c` among the first `p` entries of `L`.
    pub fn l_rank(&self, c: u32, p: usize) -> usize {
        self.l.rank(c, p)
    }

    pub fn l_symbols(&self) -> Vec<u32> {
        (0..self.n).map(|k| self.l.get(k)).collect()
    }

    pub fn out_bit(&self, k: usize) -> bool {
        self.out.get(k)
    }

    pub fn space(&self) -> SpaceReport {
        let code_width = bit_width(self.sigma as u64);
        SpaceReport {
            n: self.n,
            sigma: self.sigma,
            l_bits: self.n * code_width as usize,
            out_bits: self.out.len(),
            code_width,
            c_bits: self.c.len() * usize::BITS as usize,
            overhead_bits: self.out.overhead_bits() + self.l.overhead_bits(),
        }
    }

    /// Rebuilds the pseudoforest the index was built from.
    pub fn to_pseudoforest(&self) -> Result<WheelerPseudoforest, IndexError> {
        let mut parents = vec![0usize; self.n];
        let mut labels = vec![0u32; self.n];
        for i in 1..=self.n {
            labels[i - 1] = self.incoming_label(i);
            let (a, b) = self.out_range(i);
            for k in a..b {
                let c = self.l.get(k);
                let t = self.forward_step(i, c).expect("own out-label");
                parents[t - 1] = i;
            }
        }
        Ok(WheelerPseudoforest::from_parents(
            self.sigma, parents, labels,
        )?)
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> Result<(), IndexError> {
        w.write_all(MAGIC)?;
        w.write_all(&(self.n as u64).to_le_bytes())?;
        w.write_all(&(self.sigma as u64).to_le_bytes())?;
        let mut out = BitWriter::default();
        for k in 0..self.out.len() {
            out.push(self.out.get(k) as u64, 1);
        }
        w.write_all(&out.finish())?;
        let width = bit_width(self.sigma as u64);
        let mut l = BitWriter::default();
        for k in 0..self.n {
            l.push(self.l.get(k) as u64, width);
        }
        w.write_all(&l.finish())?;
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)
            .expect("writing to a Vec cannot fail");
        buf
    }

    pub fn read_from<R: Read>(mut r: R) -> Result<Self, IndexError> {
        let mut bytes = Vec::new();
        r.read_to_end(&mut bytes)?;
        Self::from_bytes(&bytes)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, IndexError> {
        let fmt = |m: &str| IndexError::Format(m.to_string());
        if bytes.len() < 21 || &bytes[..5] != MAGIC {
            return Err(fmt("missing WPFX1 header"));
        }
        let n = u64::from_le_bytes(bytes[5..13].try_into().unwrap());
        let sigma = u64::from_le_bytes(bytes[13..21].try_into().unwrap());
        if n == 0 || sigma == 0 || sigma > u32::MAX as u64 || n > (bytes.len() as u64) * 8 {
            return Err(fmt("implausible header values"));
        }
        let (n, sigma) = (n as usize, sigma as u32);
        let width = bit_width(sigma as u64);
        let out_bytes = (2 * n).div_ceil(8);
        let l_bytes = (n * width as usize).div_ceil(8);
        if bytes.len() != 21 + out_bytes + l_bytes {
            return Err(fmt("payload length does not match header"));
        }
        let mut out_reader = BitReader::new(&bytes[21..21 + out_bytes]);
        let bits: Vec<bool> = (0..2 * n).map(|_| out_reader.pull(1) == 1).collect();
        if !out_reader.rest_is_zero() {
            return Err(fmt("nonzero padding after OUT"));
        }
        let out = RankBitVec::from_bits(bits);
        if out.count_ones() != n || !out.get(2 * n - 1) {
            return Err(fmt("OUT must hold n ones and end with a one"));
        }
        let mut l_reader = BitReader::new(&bytes[21 + out_bytes..]);
        let labels: Vec<u32> = (0..n).map(|_| l_reader.pull(width) as u32).collect();
        if !l_reader.rest_is_zero() {
            return Err(fmt("nonzero padding after L"));
        }
        if let Some(&bad) = labels.iter().find(|&&c| c >= sigma) {
            return Err(IndexError::Format(format!(
                "label {bad} outside 0..{sigma}"
            )));
        }
        let idx = Self::from_parts(n, sigma, out, &labels);
        for i in 1..=n {
            let (a, b) = idx.out_range(i);
            if labels[a..b].windows(2).any(|w| w[0] >= w[1]) {
                return Err(IndexError::Format(format!(
                    "out-labels of node {i} not strictly increasing"
                )));
            }
        }
        Ok(idx)
    }
}

/// LSB-first bit packer.
#[derive(Default)]
struct BitWriter {
    bytes: Vec<u8>,
    used: u32,
}

impl BitWriter {
    fn push(&mut self, value: u64, width: u32) {
        for b in 0..width {
            if self.used == 0 {
                self.bytes.push(0);
            }
            if (value >> b) & 1 == 1 {
                *self.bytes.last_mut().unwrap() |= 1 << self.used;
            }
            self.used = (self.used + 1) % 8;
        }
    }

    fn finish(self) -> Vec<u8> {
        self.bytes
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        BitReader { bytes, pos: 0 }
    }

    fn pull(&mut self, width: u32) -> u64 {
        let mut v = 0;
        for b in 0..width {
            let bit = (self.bytes[self.pos / 8] >> (self.pos % 8)) & 1;
            v |= (bit as u64) << b;
            self.pos += 1;
        }
        v
    }

    fn rest_is_zero(&self) -> bool {
        let total = self.bytes.len() * 8;
        (self.pos..total).all(|p| (self.bytes[p / 8] >> (p % 8)) & 1 == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::DNA_FOREST;
    use crate::graph::parse_graph_str;

    fn dna() -> SuccinctWheelerIndex {
        let g = parse_graph_str(DNA_FOREST).unwrap();
        SuccinctWheelerIndex::build(&WheelerPseudoforest::from_graph(&g).unwrap()).unwrap()
    }

    fn out_string(idx: &SuccinctWheelerIndex) -> String {
        (0..2 * idx.n())
            .map(|k| if idx.out_bit(k) { '1' } else { '0' })
            .collect()
    }

    #[test]
    fn dna_l_out_and_c() {
        let idx = dna();
        let l: String = idx
            .l_symbols()
            .iter()
            .map(|&c| "#ACT".as_bytes()[c as usize] as char)
            .collect();
        assert_eq!(l, "#ACTTCTTTAACAAT");
        assert_eq!(out_string(&idx), "000101101110010101010101011001");
        assert_eq!(
            (idx.c(0), idx.c(1), idx.c(2), idx.c(3), idx.c(4)),
            (0, 1, 6, 9, 15)
        );
    }

    #[test]
    fn dna_queries() {
        let idx = dna();
        assert_eq!(idx.forward_step(2, 3), Some(10));
        assert_eq!(idx.forward_step(10, 2), Some(9));
        assert_eq!(idx.forward_step(15, 2), None);
        assert_eq!(idx.out_label(1, 2), Some(1));
        assert_eq!(idx.out_label(3, 1), None);
        assert_eq!(idx.out_label(15, 2), Some(3));
        assert_eq!(idx.out_label(1, 0), None);
        assert_eq!(idx.incoming_label(1), 0);
        assert_eq!(idx.incoming_label(9), 2);
        assert_eq!(idx.incoming_label(15), 3);
    }

    #[test]
    fn single_loop_and_chain() {
        let one = WheelerPseudoforest::from_parents(1, vec![1], vec![0]).unwrap();
        let idx = SuccinctWheelerIndex::build(&one).unwrap();
        assert_eq!(
            (idx.l_symbols(), out_string(&idx)),
            (vec![0], "01".to_string())
        );
        let chain = WheelerPseudoforest::from_parents(3, vec![1, 1, 2], vec![0, 1, 2]).unwrap();
        let idx = SuccinctWheelerIndex::build(&chain).unwrap();
        assert_eq!(idx.l_symbols(), vec![0, 1, 2]);
        assert_eq!(out_string(&idx), "001011");
    }

    #[test]
    fn rejects_non_wheeler_numbering() {
        let p = WheelerPseudoforest::from_parents(3, vec![1, 1], vec![2, 1]).unwrap();
        assert!(matches!(
            SuccinctWheelerIndex::build(&p),
            Err(IndexError::NotWheeler(_))
        ));
    }

    #[test]
    fn serialization_round_trip_and_rejection() {
        let idx = dna();
        let bytes = idx.to_bytes();
        assert_eq!(&bytes[..5], MAGIC);
        assert_eq!(bytes.len(), 21 + 4 + 6);
        let back = SuccinctWheelerIndex::from_bytes(&bytes).unwrap();
        assert_eq!(back, idx);
        assert_eq!(back.to_bytes(), bytes);
        let g = parse_graph_str(DNA_FOREST).unwrap();
        assert_eq!(
            back.to_pseudoforest().unwrap(),
            WheelerPseudoforest::from_graph(&g).unwrap()
        );
        assert!(SuccinctWheelerIndex::from_bytes(&bytes[..bytes.len() - 1]).is_err());
        let mut bad = bytes.clone();
        bad[0] = b'X';
        assert!(SuccinctWheelerIndex::from_bytes(&bad).is_err());
    }

    #[test]
    fn space_within_payload_bound() {
        let s = dna().space();
        assert_eq!(s.code_width, 3);
        assert_eq!(s.payload_bits(), 15 * 3 + 30);
        assert!(s.payload_bits() <= s.payload_bound());
    }
}
