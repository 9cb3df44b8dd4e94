//! Small reference instances shared by tests, benches and the CLI.

use crate::pipeline::InfSupRanks;

/// The 15-node DNA pseudoforest used throughout the test suites, in graph file
/// format. Labels: `0 = #`, `1 = A`, `2 = C`, `3 = T`.
pub const DNA_FOREST: &str = "15 15 4
1 1 0
1 2 1
1 7 2
2 10 3
4 11 3
7 8 2
7 12 3
8 13 3
9 14 3
10 3 1
11 4 1
12 9 2
13 5 1
15 6 1
15 15 3
";

/// Display alphabet for [`DNA_FOREST`].
pub const DNA: [char; 4] = ['#', 'A', 'C', 'T'];

/// Reduced LCP of [`DNA_FOREST`] by position `2..=15`.
pub const DNA_LCP_STAR: [u64; 14] = [0, 1, 3, 2, 2, 0, 1, 1, 0, 2, 1, 2, 2, 1];

/// Map of the 16-node input graph behind [`DNA_FOREST`], in sorted copy order:
/// `(rank, node, side)` with side `'i'` or `'s'`.
#[rustfmt::skip]
pub const DNA_MAP: [(usize, usize, char); 32] = [
    (1, 10, 'i'), (1, 10, 's'), (1, 11, 'i'), (1, 11, 's'), (1, 5, 'i'), (1, 5, 's'),
    (2, 6, 'i'), (2, 7, 'i'), (3, 9, 'i'), (4, 2, 'i'), (4, 2, 's'), (4, 4, 'i'),
    (4, 4, 's'), (5, 15, 'i'), (6, 15, 's'), (6, 9, 's'), (7, 12, 'i'), (7, 12, 's'),
    (8, 13, 'i'), (8, 13, 's'), (9, 7, 's'), (10, 8, 'i'), (11, 1, 'i'), (11, 1, 's'),
    (11, 3, 'i'), (11, 3, 's'), (12, 6, 's'), (13, 14, 'i'), (13, 16, 'i'),
    (13, 16, 's'), (14, 8, 's'), (15, 14, 's'),
];

/// Expected LCP array of that input graph, positions `2..=32`.
pub const DNA_LCP: &str =
    "0,0,0,0,0,0,1,1,3,inf,inf,inf,2,2,inf,0,1,1,2,1,0,2,inf,inf,inf,1,2,3,3,2,1";

/// [`DNA_MAP`] as ranks.
pub fn dna_map() -> InfSupRanks {
    let mut inf = vec![0; 16];
    let mut sup = vec![0; 16];
    for &(r, u, s) in &DNA_MAP {
        if s == 'i' {
            inf[u - 1] = r;
        } else {
            sup[u - 1] = r;
        }
    }
    InfSupRanks::new(inf, sup)
}
