//! A static centered interval tree over left-open intervals `(lo, hi]` with
//! O(1) deletion.
//!
//! Each tree node owns the intervals containing its center, threaded through
//! two doubly-linked lists: by increasing `lo` and by decreasing `hi`. The
//! topology is fixed at build time; deletions only unlink list entries.

/// Null link.
pub(crate) const NIL: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Piece {
    pub lo: u32,
    pub hi: u32,
    pub label: u32,
    /// Not part of a real bridge.
    pub dummy: bool,
    pub alive: bool,
    /// Owning tree node, or `NIL` if the piece is not stored in the tree.
    pub node: u32,
    start_prev: u32,
    start_next: u32,
    end_prev: u32,
    end_next: u32,
    /// Piece of the same bridge in the previous block.
    pub chain_prev: u32,
    /// Piece of the same bridge in the next block.
    pub chain_next: u32,
}

#[derive(Clone, Debug)]
struct TreeNode {
    center: u32,
    left: u32,
    right: u32,
    start_head: u32,
    end_head: u32,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct IntervalTree {
    pub pieces: Vec<Piece>,
    nodes: Vec<TreeNode>,
    root: u32,
}

impl IntervalTree {
    pub fn new() -> Self {
        IntervalTree {
            pieces: Vec::new(),
            nodes: Vec::new(),
            root: NIL,
        }
    }

    /// Adds a piece; it becomes queryable only after [`IntervalTree::build`].
    pub fn push(&mut self, lo: u32, hi: u32, label: u32, dummy: bool) -> u32 {
        let id = self.pieces.len() as u32;
        self.pieces.push(Piece {
            lo,
            hi,
            label,
            dummy,
            alive: true,
            node: NIL,
            start_prev: NIL,
            start_next: NIL,
            end_prev: NIL,
            end_next: NIL,
            chain_prev: NIL,
            chain_next: NIL,
        });
        id
    }

    /// Builds the tree over every non-empty piece pushed so far.
    pub fn build(&mut self) {
        let ids: Vec<u32> = (0..self.pieces.len() as u32)
            .filter(|&k| self.pieces[k as usize].lo < self.pieces[k as usize].hi)
            .collect();
        self.root = self.build_rec(ids);
    }

    fn build_rec(&mut self, ids: Vec<u32>) -> u32 {
        if ids.is_empty() {
            return NIL;
        }
        let mut ends: Vec<u32> = Vec::with_capacity(2 * ids.len());
        for &k in &ids {
            let p = &self.pieces[k as usize];
            ends.push(p.lo + 1);
            ends.push(p.hi);
        }
        let mid = ends.len() / 2;
        let (_, &mut center, _) = ends.select_nth_unstable(mid);
        let (mut here, mut left, mut right) = (Vec::new(), Vec::new(), Vec::new());
        for k in ids {
            let p = &self.pieces[k as usize];
            if p.hi < center {
                left.push(k);
            } else if p.lo >= center {
                right.push(k);
            } else {
                here.push(k);
            }
        }
        let node = self.nodes.len() as u32;
        self.nodes.push(TreeNode {
            center,
            left: NIL,
            right: NIL,
            start_head: NIL,
            end_head: NIL,
        });

        here.sort_unstable_by_key(|&k| self.pieces[k as usize].lo);
        let mut prev = NIL;
        for &k in &here {
            let p = &mut self.pieces[k as usize];
            p.node = node;
            p.start_prev = prev;
            if prev == NIL {
                self.nodes[node as usize].start_head = k;
            } else {
                self.pieces[prev as usize].start_next = k;
            }
            prev = k;
        }
        here.sort_unstable_by_key(|&k| std::cmp::Reverse(self.pieces[k as usize].hi));
        let mut prev = NIL;
        for &k in &here {
            self.pieces[k as usize].end_prev = prev;
            if prev == NIL {
                self.nodes[node as usize].end_head = k;
            } else {
                self.pieces[prev as usize].end_next = k;
            }
            prev = k;
        }

        let l = self.build_rec(left);
        let r = self.build_rec(right);
        self.nodes[node as usize].left = l;
        self.nodes[node as usize].right = r;
        node
    }

    /// Appends the alive pieces stabbed by `q` to `hits` and returns the work
    /// spent: nodes visited plus list entries examined.
    pub fn stab(&self, q: u32, hits: &mut Vec<u32>) -> u64 {
        let mut work = 0;
        let mut cur = self.root;
        while cur != NIL {
            work += 1;
            let node = &self.nodes[cur as usize];
            if q < node.center {
                let mut k = node.start_head;
                while k != NIL {
                    work += 1;
                    let p = &self.pieces[k as usize];
                    if p.lo >= q {
                        break;
                    }
                    hits.push(k);
                    k = p.start_next;
                }
                cur = node.left;
            } else if q > node.center {
                let mut k = node.end_head;
                while k != NIL {
                    work += 1;
                    let p = &self.pieces[k as usize];
                    if p.hi < q {
                        break;
                    }
                    hits.push(k);
                    k = p.end_next;
                }
                cur = node.right;
            } else {
                let mut k = node.start_head;
                while k != NIL {
                    work += 1;
                    hits.push(k);
                    k = self.pieces[k as usize].start_next;
                }
                break;
            }
        }
        work
    }

    /// Marks a piece dead and unlinks it from its node's lists.
    pub fn remove(&mut self, k: u32) {
        let p = self.pieces[k as usize].clone();
        if !p.alive {
            return;
        }
        self.pieces[k as usize].alive = false;
        if p.node == NIL {
            return;
        }
        let node = p.node as usize;
        if p.start_prev == NIL {
            self.nodes[node].start_head = p.start_next;
        } else {
            self.pieces[p.start_prev as usize].start_next = p.start_next;
        }
        if p.start_next != NIL {
            self.pieces[p.start_next as usize].start_prev = p.start_prev;
        }
        if p.end_prev == NIL {
            self.nodes[node].end_head = p.end_next;
        } else {
            self.pieces[p.end_prev as usize].end_next = p.end_next;
        }
        if p.end_next != NIL {
            self.pieces[p.end_next as usize].end_prev = p.end_prev;
        }
    }

    #[cfg(test)]
    pub fn depth(&self) -> usize {
        fn rec(t: &IntervalTree, k: u32) -> usize {
            if k == NIL {
                0
            } else {
                let n = &t.nodes[k as usize];
                1 + rec(t, n.left).max(rec(t, n.right))
            }
        }
        rec(self, self.root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn stab_and_remove_match_naive(
            raw in proptest::collection::vec((0u32..40, 1u32..12), 0..60),
            queries in proptest::collection::vec(1u32..52, 0..40),
        ) {
            let mut t = IntervalTree::new();
            let ivs: Vec<(u32, u32)> = raw.iter().map(|&(lo, len)| (lo, lo + len)).collect();
            for (k, &(lo, hi)) in ivs.iter().enumerate() {
                t.push(lo, hi, k as u32, false);
            }
            t.build();
            prop_assert!(t.depth() <= 2 * (usize::BITS - ivs.len().leading_zeros()) as usize + 1);
            let mut alive = vec![true; ivs.len()];
            for q in queries {
                let mut hits = Vec::new();
                t.stab(q, &mut hits);
                hits.sort_unstable();
                let want: Vec<u32> = (0..ivs.len() as u32)
                    .filter(|&k| alive[k as usize] && ivs[k as usize].0 < q && q <= ivs[k as usize].1)
                    .collect();
                prop_assert_eq!(&hits, &want);
                for k in hits {
                    t.remove(k);
                    alive[k as usize] = false;
                }
            }
        }
    }
}
