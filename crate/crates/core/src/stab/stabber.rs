//! Dynamic stabbing over bridges with blocked static interval trees.
//!
//! Positions `1..=n` are cut into blocks of `B = sigma` positions (the last one
//! may be shorter). Every bridge is split into one piece per block it overlaps
//! and the pieces of a bridge are chained across neighbouring blocks. Pieces are
//! produced by a left-to-right sweep that keeps, per label, the last piece `P[c]`
//! and its right end `end[c]`; the sweep also emits pieces that belong to no
//! bridge, which are flagged dummy and deleted once the sweep is over. Since no
//! two same-label pieces of a block intersect, a stab reports at most one piece
//! per label.
//!
//! When `sigma >= n` the bridges go into a single tree and are never split.

use thiserror::Error;

use super::bridge::Bridge;
use super::interval_tree::{IntervalTree, NIL};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StabError {
    #[error("bridge {bridge} is outside 1 <= l < r <= {n} or its label is not below {sigma}")]
    InvalidBridge {
        bridge: Bridge,
        n: usize,
        sigma: u32,
    },
    #[error("bridges {first} and {second} overlap")]
    Overlap { first: Bridge, second: Bridge },
    #[error("duplicate bridge {0}")]
    Duplicate(Bridge),
}

/// Location of a piece: block number and local id inside that block's tree.
type PieceRef = (usize, u32);

#[derive(Clone, Debug)]
pub struct BlockedStabber {
    n: usize,
    sigma: u32,
    block_size: usize,
    /// Blocked mode: `trees[0]` holds the lead dummies `(-1, 0]_c`, block `k`
    /// covers positions `(k-1)B+1 ..= kB`. Single-tree mode: one tree, offset 0.
    trees: Vec<IntervalTree>,
    blocked: bool,
    /// Last piece of each input bridge.
    bridge_ends: Vec<(Bridge, PieceRef)>,
    work: u64,
}

impl BlockedStabber {
    pub fn build(bridges: &[Bridge], n: usize, sigma: u32) -> Result<Self, StabError> {
        validate(bridges, n, sigma)?;
        if sigma as usize >= n {
            Ok(Self::build_single(bridges, n, sigma))
        } else {
            Ok(Self::build_blocked(bridges, n, sigma))
        }
    }

    fn build_single(bridges: &[Bridge], n: usize, sigma: u32) -> Self {
        let mut tree = IntervalTree::new();
        let mut bridge_ends = Vec::with_capacity(bridges.len());
        for &b in bridges {
            let id = tree.push(b.l as u32, b.r as u32, b.c, false);
            bridge_ends.push((b, (0, id)));
        }
        tree.build();
        BlockedStabber {
            n,
            sigma,
            block_size: n,
            trees: vec![tree],
            blocked: false,
            bridge_ends,
            work: 0,
        }
    }

    fn build_blocked(bridges: &[Bridge], n: usize, sigma: u32) -> Self {
        let s = sigma as usize;
        let bsize = s;
        let nblocks = n.div_ceil(bsize);

        // Occurrences of each label, read off the bridge endpoints.
        let mut occ: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for b in bridges {
            occ[b.l].push(b.c);
            occ[b.r].push(b.c);
        }
        for list in &mut occ {
            list.sort_unstable();
            list.dedup();
        }
        let mut is_bridge: Vec<Vec<(usize, usize)>> = vec![Vec::new(); s];
        for b in bridges {
            is_bridge[b.c as usize].push((b.l, b.r));
        }
        for list in &mut is_bridge {
            list.sort_unstable();
        }

        let mut trees: Vec<IntervalTree> = (0..=nblocks).map(|_| IntervalTree::new()).collect();
        let lead: Vec<u32> = (0..sigma).map(|c| trees[0].push(0, 0, c, true)).collect();
        let mut last: Vec<PieceRef> = lead.iter().map(|&id| (0, id)).collect();
        let mut end = vec![0usize; s];
        let mut prev_occ: Vec<Option<usize>> = vec![None; s];
        let mut bridge_ends = Vec::with_capacity(bridges.len());
        let mut gaps: Vec<PieceRef> = Vec::new();

        for i in 1..=n {
            let k = (i - 1) / bsize + 1;
            for &c in &occ[i] {
                let cu = c as usize;
                let piece = insert(&mut trees, &mut last, &mut end, bsize, i, c);
                if let Some(l) = prev_occ[cu] {
                    if is_bridge[cu].binary_search(&(l, i)).is_ok() {
                        bridge_ends.push((Bridge::new(l, i, c), piece));
                    } else {
                        gaps.push(piece);
                    }
                }
                prev_occ[cu] = Some(i);
            }
            if i % bsize == 0 || i == n {
                for c in 0..sigma {
                    insert(&mut trees, &mut last, &mut end, bsize, i, c);
                }
                trees[k].build();
            }
        }
        bridge_ends.sort_unstable_by_key(|(b, _)| (b.c, b.l));

        let mut st = BlockedStabber {
            n,
            sigma,
            block_size: bsize,
            trees,
            blocked: true,
            bridge_ends,
            work: 0,
        };
        // Pieces after the last occurrence, before the first, and between
        // occurrences that are not an input bridge.
        for c in 0..s {
            st.kill_chain(last[c]);
            st.kill_chain((0, lead[c]));
        }
        for g in gaps {
            st.kill_chain(g);
        }
        st.work = 0;
        st
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn is_blocked(&self) -> bool {
        self.blocked
    }

    /// Work spent by queries so far: tree nodes visited, list entries examined
    /// and pieces deleted.
    pub fn work(&self) -> u64 {
        self.work
    }

    /// Labels of all surviving bridges with `l < i <= r`, increasing; those
    /// bridges are removed.
    pub fn stab_and_remove(&mut self, i: usize) -> Vec<u32> {
        assert!(
            (1..=self.n).contains(&i),
            "position {i} outside 1..={}",
            self.n
        );
        let (k, q) = if self.blocked {
            let k = (i - 1) / self.block_size + 1;
            (k, (i - (k - 1) * self.block_size) as u32)
        } else {
            (0, i as u32)
        };
        let mut hits = Vec::new();
        self.work += self.trees[k].stab(q, &mut hits);
        let mut labels = Vec::with_capacity(hits.len());
        for id in hits {
            let p = &self.trees[k].pieces[id as usize];
            if p.alive && !p.dummy {
                labels.push(p.label);
            }
            self.kill_chain((k, id));
        }
        labels.sort_unstable();
        labels
    }

    /// Input bridges that have not been stabbed yet.
    pub fn surviving(&self) -> Vec<Bridge> {
        self.bridge_ends
            .iter()
            .filter(|(_, (k, id))| self.trees[*k].pieces[*id as usize].alive)
            .map(|(b, _)| *b)
            .collect()
    }

    /// Pieces currently stored, split as `(real, dummy)`; dead ones excluded.
    pub fn piece_counts(&self) -> (usize, usize) {
        let mut real = 0;
        let mut dummy = 0;
        for t in &self.trees {
            for p in &t.pieces {
                if p.alive && p.lo < p.hi {
                    if p.dummy {
                        dummy += 1;
                    } else {
                        real += 1;
                    }
                }
            }
        }
        (real, dummy)
    }

    /// Pieces created over the structure's lifetime, dead or alive.
    pub fn total_pieces(&self) -> usize {
        self.trees.iter().map(|t| t.pieces.len()).sum()
    }

    /// Pieces `(lo, hi]` in global coordinates of the chain ending at the last
    /// piece of `bridge`, or `None` if `bridge` is not an input bridge.
    pub fn pieces_of(&self, bridge: Bridge) -> Option<Vec<(usize, usize)>> {
        let &(_, (mut k, mut id)) = self.bridge_ends.iter().find(|(b, _)| *b == bridge)?;
        let mut out = Vec::new();
        loop {
            let p = &self.trees[k].pieces[id as usize];
            let offset = if self.blocked {
                (k.max(1) - 1) * self.block_size
            } else {
                0
            };
            if p.lo < p.hi {
                out.push((p.lo as usize + offset, p.hi as usize + offset));
            }
            if p.chain_prev == NIL {
                break;
            }
            id = p.chain_prev;
            k -= 1;
        }
        out.reverse();
        Some(out)
    }

    fn kill_chain(&mut self, start: PieceRef) {
        let (k0, id0) = start;
        if !self.trees[k0].pieces[id0 as usize].alive {
            return;
        }
        let (mut k, mut id) = start;
        loop {
            let prev = self.trees[k].pieces[id as usize].chain_prev;
            self.kill(k, id);
            if prev == NIL {
                break;
            }
            k -= 1;
            id = prev;
        }
        let (mut k, mut id) = start;
        loop {
            let next = self.trees[k].pieces[id as usize].chain_next;
            if next == NIL {
                break;
            }
            k += 1;
            id = next;
            self.kill(k, id);
        }
    }

    fn kill(&mut self, k: usize, id: u32) {
        self.work += 1;
        let p = &mut self.trees[k].pieces[id as usize];
        p.dummy = true;
        self.trees[k].remove(id);
    }
}

/// Creates the piece `(end[c], i]_c` in the block of `i` and chains it to
/// `P[c]` when `end[c]` lies in an earlier block.
fn insert(
    trees: &mut [IntervalTree],
    last: &mut [PieceRef],
    end: &mut [usize],
    bsize: usize,
    i: usize,
    c: u32,
) -> PieceRef {
    let cu = c as usize;
    let k = (i - 1) / bsize + 1;
    let offset = (k - 1) * bsize;
    let r = end[cu];
    debug_assert!(r >= offset && r <= i);
    let lo = (r - offset) as u32;
    let hi = (i - offset) as u32;
    let id = trees[k].push(lo, hi, c, lo == hi);
    let kr = r.div_ceil(bsize);
    if kr != k {
        debug_assert_eq!(kr + 1, k);
        let (pk, pid) = last[cu];
        debug_assert_eq!(pk, kr);
        trees[pk].pieces[pid as usize].chain_next = id;
        trees[k].pieces[id as usize].chain_prev = pid;
    }
    last[cu] = (k, id);
    end[cu] = i;
    (k, id)
}

fn validate(bridges: &[Bridge], n: usize, sigma: u32) -> Result<(), StabError> {
    let mut by_label: Vec<Vec<Bridge>> = vec![Vec::new(); sigma as usize];
    for &b in bridges {
        if b.l < 1 || b.l >= b.r || b.r > n || b.c >= sigma {
            return Err(StabError::InvalidBridge {
                bridge: b,
                n,
                sigma,
            });
        }
        by_label[b.c as usize].push(b);
    }
    for list in &mut by_label {
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(StabError::Duplicate(w[0]));
            }
            if w[0].r > w[1].l {
                return Err(StabError::Overlap {
                    first: w[0],
                    second: w[1],
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna_bridges() -> Vec<Bridge> {
        [
            (1, 10, 1),
            (10, 11, 1),
            (11, 13, 1),
            (13, 15, 1),
            (1, 7, 2),
            (7, 12, 2),
            (2, 4, 3),
            (4, 7, 3),
            (7, 8, 3),
            (8, 9, 3),
            (9, 15, 3),
        ]
        .iter()
        .map(|&(l, r, c)| Bridge::new(l, r, c))
        .collect()
    }

    #[test]
    fn dna_bridge_splits_at_block_boundaries() {
        let st = BlockedStabber::build(&dna_bridges(), 15, 4).unwrap();
        assert!(st.is_blocked());
        assert_eq!(st.block_size(), 4);
        assert_eq!(
            st.pieces_of(Bridge::new(1, 10, 1)).unwrap(),
            vec![(1, 4), (4, 8), (8, 10)]
        );
        assert_eq!(st.pieces_of(Bridge::new(2, 4, 3)).unwrap(), vec![(2, 4)]);
        assert_eq!(st.piece_counts().1, 0);
        assert_eq!(st.surviving().len(), 11);
    }

    #[test]
    fn dna_queries_in_stream_order() {
        let mut st = BlockedStabber::build(&dna_bridges(), 15, 4).unwrap();
        assert_eq!(st.stab_and_remove(2), vec![1, 2]);
        assert_eq!(st.stab_and_remove(7), vec![3]);
        assert_eq!(st.stab_and_remove(10), vec![2, 3]);
        assert_eq!(st.stab_and_remove(10), Vec::<u32>::new());
        assert_eq!(st.surviving().len(), 6);
    }

    #[test]
    fn position_one_stabs_nothing() {
        let mut st = BlockedStabber::build(&dna_bridges(), 15, 4).unwrap();
        assert!(st.stab_and_remove(1).is_empty());
    }

    #[test]
    fn single_tree_when_alphabet_covers_positions() {
        let bridges = vec![Bridge::new(1, 3, 0), Bridge::new(2, 3, 1)];
        let mut st = BlockedStabber::build(&bridges, 3, 3).unwrap();
        assert!(!st.is_blocked());
        assert_eq!(st.pieces_of(bridges[0]).unwrap(), vec![(1, 3)]);
        assert_eq!(st.stab_and_remove(3), vec![0, 1]);
        assert!(st.surviving().is_empty());
    }

    #[test]
    fn rejects_overlap_and_bad_ranges() {
        let err = BlockedStabber::build(&[Bridge::new(1, 5, 0), Bridge::new(3, 6, 0)], 8, 2);
        assert!(matches!(err, Err(StabError::Overlap { .. })));
        assert!(BlockedStabber::build(&[Bridge::new(2, 2, 0)], 8, 2).is_err());
        assert!(BlockedStabber::build(&[Bridge::new(1, 9, 0)], 8, 2).is_err());
        assert!(BlockedStabber::build(&[Bridge::new(1, 2, 2)], 8, 2).is_err());
    }

    #[test]
    fn subset_of_bridges_leaves_gaps_dead() {
        // Label 0 occurs at 5 and 9 only.
        let bridges = vec![Bridge::new(5, 9, 0), Bridge::new(1, 2, 1)];
        let mut st = BlockedStabber::build(&bridges, 12, 2).unwrap();
        assert_eq!(st.piece_counts().1, 0);
        assert!(st.stab_and_remove(4).is_empty());
        assert_eq!(st.stab_and_remove(6), vec![0]);
        assert_eq!(st.surviving(), vec![Bridge::new(1, 2, 1)]);
    }
}
