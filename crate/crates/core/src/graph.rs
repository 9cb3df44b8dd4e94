//! Edge-labeled graphs, source elimination and deterministic Wheeler pseudoforests.
//!
//! Node ids are 1-based throughout. Labels are small integers; label `0` is the
//! reserved end-marker `#`, which sorts before every user symbol and may only
//! appear on self-loops.

use std::collections::HashSet;
use std::fmt;
use std::io::BufRead;

use thiserror::Error;

/// The reserved end-marker symbol.
pub const HASH: u32 = 0;

/// Default upper bound accepted for the alphabet size in graph headers.
pub const DEFAULT_SIGMA_CAP: u32 = 1 << 20;

/// A labeled edge `source --label--> target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: u32,
}

impl Edge {
    pub fn new(source: usize, target: usize, label: u32) -> Self {
        Edge {
            source,
            target,
            label,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} -{}-> {})", self.source, self.label, self.target)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("empty graph: at least one node is required")]
    Empty,
    #[error("alphabet size {sigma} exceeds the cap {cap}")]
    SigmaTooLarge { sigma: u32, cap: u32 },
    #[error("edge {edge}: node id out of range 1..={n}")]
    NodeOutOfRange { edge: Edge, n: usize },
    #[error("edge {edge}: label out of range 0..={sigma}")]
    LabelOutOfRange { edge: Edge, sigma: u32 },
    #[error("edge {edge}: the end-marker label 0 is only allowed on self-loops")]
    HashNotSelfLoop { edge: Edge },
    #[error("duplicate edge {edge}")]
    DuplicateEdge { edge: Edge },
    #[error("node {node} has neither incoming nor outgoing edges")]
    IsolatedNode { node: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("I/O error: {0}")]
    Io(String),
}

/// A general edge-labeled directed graph on nodes `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    sigma: u32,
    edges: Vec<Edge>,
}

impl LabeledGraph {
    /// Builds and validates a graph. `sigma` bounds labels: every label lies in `0..=sigma`.
    pub fn new(n: usize, sigma: u32, edges: Vec<Edge>) -> Result<Self, GraphError> {
        Self::with_cap(n, sigma, edges, DEFAULT_SIGMA_CAP)
    }

    pub fn with_cap(n: usize, sigma: u32, edges: Vec<Edge>, cap: u32) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if sigma > cap {
            return Err(GraphError::SigmaTooLarge { sigma, cap });
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut touched = vec![false; n + 1];
        for &e in &edges {
            check_edge(e, n, sigma)?;
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { edge: e });
            }
            touched[e.source] = true;
            touched[e.target] = true;
        }
        if let Some(node) = (1..=n).find(|&u| !touched[u]) {
            return Err(GraphError::IsolatedNode { node });
        }
        Ok(LabeledGraph { n, sigma, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn max_label(&self) -> u32 {
        self.edges.iter().map(|e| e.label).max().unwrap_or(0)
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for e in &self.edges {
            deg[e.target] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for e in &self.edges {
            deg[e.source] += 1;
        }
        deg
    }

    /// Nodes with in-degree zero, in increasing id order.
    pub fn sources(&self) -> Vec<usize> {
        let deg = self.in_degrees();
        (1..=self.n).filter(|&u| deg[u] == 0).collect()
    }

    /// No node has two outgoing edges with the same label.
    pub fn is_deterministic(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|e| seen.insert((e.source, e.label)))
    }

    /// For each node, its incoming `(source, label)` pairs.
    pub fn in_adjacency(&self) -> Vec<Vec<(usize, u32)>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for e in &self.edges {
            adj[e.target].push((e.source, e.label));
        }
        adj
    }

    /// For each node, its outgoing `(label, target)` pairs sorted by label.
    pub fn out_adjacency(&self) -> Vec<Vec<(u32, usize)>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for e in &self.edges {
            adj[e.source].push((e.label, e.target));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.edges.len(), self.sigma);
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.source, e.target, e.label));
        }
        out
    }
}

fn check_edge(e: Edge, n: usize, sigma: u32) -> Result<(), GraphError> {
    if e.source == 0 || e.source > n || e.target == 0 || e.target > n {
        return Err(GraphError::NodeOutOfRange { edge: e, n });
    }
    if e.label > sigma {
        return Err(GraphError::LabelOutOfRange { edge: e, sigma });
    }
    if e.label == HASH && e.source != e.target {
        return Err(GraphError::HashNotSelfLoop { edge: e });
    }
    Ok(())
}

/// Parses the edge-list format: a header `n m sigma`, then `m` lines `u v c`.
/// Lines starting with `%` and blank lines are ignored.
pub fn parse_graph<R: BufRead>(reader: R) -> Result<LabeledGraph, GraphError> {
    parse_graph_with_cap(reader, DEFAULT_SIGMA_CAP)
}

pub fn parse_graph_with_cap<R: BufRead>(reader: R, cap: u32) -> Result<LabeledGraph, GraphError> {
    let mut header: Option<(usize, usize, u32)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| GraphError::Io(e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let fields = parse_triple(trimmed, lineno)?;
        match header {
            None => {
                let (n, m, sigma) = fields;
                let n =
                    usize::try_from(n).map_err(|_| parse_err(lineno, "node count too large"))?;
                let m =
                    usize::try_from(m).map_err(|_| parse_err(lineno, "edge count too large"))?;
                let sigma = u32::try_from(sigma)
                    .map_err(|_| parse_err(lineno, "alphabet size too large"))?;
                if n == 0 {
                    return Err(GraphError::Empty);
                }
                if sigma > cap {
                    return Err(GraphError::SigmaTooLarge { sigma, cap });
                }
                header = Some((n, m, sigma));
            }
            Some((n, m, sigma)) => {
                if edges.len() == m {
                    return Err(parse_err(
                        lineno,
                        &format!("more than the declared {m} edges"),
                    ));
                }
                let (u, v, c) = fields;
                let label = u32::try_from(c).map_err(|_| parse_err(lineno, "label too large"))?;
                let e = Edge::new(u as usize, v as usize, label);
                check_edge(e, n, sigma).map_err(|err| parse_err(lineno, &err.to_string()))?;
                if !seen.insert(e) {
                    return Err(parse_err(lineno, &format!("duplicate edge {e}")));
                }
                edges.push(e);
            }
        }
    }
    let (n, m, sigma) = header.ok_or_else(|| parse_err(0, "missing header line"))?;
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    LabeledGraph::with_cap(n, sigma, edges, cap)
}

pub fn parse_graph_str(text: &str) -> Result<LabeledGraph, GraphError> {
    parse_graph(text.as_bytes())
}

fn parse_triple(line: &str, lineno: usize) -> Result<(u64, u64, u64), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<u64, GraphError> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(lineno, "expected three integers"))?;
        tok.parse::<u64>()
            .map_err(|_| parse_err(lineno, &format!("invalid integer `{tok}`")))
    };
    let t = (next()?, next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(lineno, "expected exactly three integers"));
    }
    Ok(t)
}

fn parse_err(line: usize, msg: &str) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.to_string(),
    }
}

/// A graph without sources: every former source carries a `#`-labeled self-loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedGraph {
    graph: LabeledGraph,
}

impl AugmentedGraph {
    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    /// Label space size: labels lie in `0..alphabet_size()`.
    pub fn alphabet_size(&self) -> u32 {
        self.graph.sigma + 1
    }

    pub fn into_graph(self) -> LabeledGraph {
        self.graph
    }
}

/// Adds a `#` self-loop to every node of in-degree zero.
pub fn eliminate_sources(g: &LabeledGraph) -> AugmentedGraph {
    let mut edges = g.edges.clone();
    for u in g.sources() {
        edges.push(Edge::new(u, u, HASH));
    }
    AugmentedGraph {
        graph: LabeledGraph {
            n: g.n,
            sigma: g.sigma,
            edges,
        },
    }
}

/// Which Wheeler axiom a pair of edges violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// A source is ordered after a node with incoming edges.
    SourcesFirst,
    /// Incoming labels are not monotone along the order.
    LabelOrder,
    /// Same-label predecessors are not monotone along the order.
    PredecessorOrder,
}

impl Axiom {
    pub fn number(self) -> u8 {
        match self {
            Axiom::SourcesFirst => 1,
            Axiom::LabelOrder => 2,
            Axiom::PredecessorOrder => 3,
        }
    }
}

/// The first pair of offending elements found by the axiom checker. For
/// `SourcesFirst` the edges are the incoming edge of the earlier node, and a
/// self-referential placeholder for the source.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub first: Edge,
    pub second: Edge,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Wheeler axiom {} violated by edges {} and {}",
            self.axiom.number(),
            self.first,
            self.second
        )
    }
}

/// Checks that `order` (a permutation of `1..=n`, smallest first) is a Wheeler
/// order of `g`.
pub fn check_wheeler_order(g: &LabeledGraph, order: &[usize]) -> Result<(), AxiomViolation> {
    let n = g.n;
    assert_eq!(order.len(), n, "order must list every node once");
    let mut pos = vec![0usize; n + 1];
    for (p, &u) in order.iter().enumerate() {
        pos[u] = p;
    }
    let inc = g.in_adjacency();

    // Axiom 1: every source precedes every non-source.
    let mut last_with_in: Option<usize> = None;
    for &u in order {
        match inc[u].first() {
            None => {
                if let Some(w) = last_with_in {
                    let (src, lab) = inc[w][0];
                    return Err(AxiomViolation {
                        axiom: Axiom::SourcesFirst,
                        first: Edge::new(src, w, lab),
                        second: Edge::new(u, u, HASH),
                    });
                }
            }
            Some(_) => last_with_in = Some(u),
        }
    }

    // Axiom 2: for consecutive targets, max in-label of the earlier <= min in-label of the later.
    let mut prev: Option<(usize, Edge)> = None;
    for &u in order {
        if inc[u].is_empty() {
            continue;
        }
        let min_e = inc[u].iter().map(|&(s, c)| (c, s)).min().unwrap();
        let max_e = inc[u].iter().map(|&(s, c)| (c, s)).max().unwrap();
        if let Some((_, pe)) = prev {
            if pe.label > min_e.0 {
                return Err(AxiomViolation {
                    axiom: Axiom::LabelOrder,
                    first: pe,
                    second: Edge::new(min_e.1, u, min_e.0),
                });
            }
        }
        prev = Some((u, Edge::new(max_e.1, u, max_e.0)));
    }

    // Axiom 3: per label, along consecutive targets, max pred position <= min pred position.
    let sigma = g.sigma as usize;
    let mut last: Vec<Option<Edge>> = vec![None; sigma + 1];
    for &u in order {
        let mut by_label: Vec<(u32, usize, usize)> =
            inc[u].iter().map(|&(s, c)| (c, pos[s], s)).collect();
        by_label.sort_unstable();
        let mut k = 0;
        while k < by_label.len() {
            let c = by_label[k].0;
            let mut j = k;
            while j < by_label.len() && by_label[j].0 == c {
                j += 1;
            }
            let (_, min_pos, min_src) = by_label[k];
            let (_, _, max_src) = by_label[j - 1];
            if let Some(pe) = last[c as usize] {
                if pos[pe.source] > min_pos {
                    return Err(AxiomViolation {
                        axiom: Axiom::PredecessorOrder,
                        first: pe,
                        second: Edge::new(min_src, u, c),
                    });
                }
            }
            last[c as usize] = Some(Edge::new(max_src, u, c));
            k = j;
        }
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PseudoforestError {
    #[error("node {node} has in-degree {degree}, expected exactly 1")]
    InDegree { node: usize, degree: usize },
    #[error("node {node} has two outgoing edges labeled {label}")]
    NotDeterministic { node: usize, label: u32 },
    #[error("label {label} does not fit the alphabet of size {sigma}")]
    Label { label: u32, sigma: u32 },
    #[error("node {node} refers to a node outside 1..={n}")]
    Node { node: usize, n: usize },
}

/// A deterministic pseudoforest whose node numbering is meant to be a Wheeler
/// order. `lambda(i)` is the label of the unique edge entering node `i` and
/// `parent(i)` its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelerPseudoforest {
    sigma: u32,
    lambda: Vec<u32>,
    parent: Vec<usize>,
    out_adj: Vec<Vec<(u32, usize)>>,
}

impl WheelerPseudoforest {
    /// Builds a pseudoforest from its in-edges. `parents[i-1]` and `labels[i-1]`
    /// describe the edge entering node `i`; labels lie in `0..sigma`.
    pub fn from_parents(
        sigma: u32,
        parents: Vec<usize>,
        labels: Vec<u32>,
    ) -> Result<Self, PseudoforestError> {
        assert_eq!(parents.len(), labels.len());
        let n = parents.len();
        let mut out_adj = vec![Vec::new(); n + 1];
        for (k, (&p, &c)) in parents.iter().zip(&labels).enumerate() {
            let target = k + 1;
            if p == 0 || p > n {
                return Err(PseudoforestError::Node { node: p, n });
            }
            if c >= sigma {
                return Err(PseudoforestError::Label { label: c, sigma });
            }
            out_adj[p].push((c, target));
        }
        for (u, list) in out_adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(PseudoforestError::NotDeterministic {
                    node: u,
                    label: w[0].0,
                });
            }
        }
        let mut lambda = vec![0; n + 1];
        let mut parent = vec![0; n + 1];
        lambda[1..].copy_from_slice(&labels);
        parent[1..].copy_from_slice(&parents);
        Ok(WheelerPseudoforest {
            sigma,
            lambda,
            parent,
            out_adj,
        })
    }

    /// Interprets a general graph as a pseudoforest. The alphabet size becomes
    /// `max label + 1`.
    pub fn from_graph(g: &LabeledGraph) -> Result<Self, PseudoforestError> {
        let n = g.n();
        let mut parents = vec![0usize; n];
        let mut labels = vec![0u32; n];
        let mut deg = vec![0usize; n + 1];
        for e in g.edges() {
            deg[e.target] += 1;
            parents[e.target - 1] = e.source;
            labels[e.target - 1] = e.label;
        }
        if let Some(node) = (1..=n).find(|&u| deg[u] != 1) {
            return Err(PseudoforestError::InDegree {
                node,
                degree: deg[node],
            });
        }
        Self::from_parents(g.max_label() + 1, parents, labels)
    }

    pub fn n(&self) -> usize {
        self.lambda.len() - 1
    }

    /// Label space size including `#`: labels lie in `0..sigma()`.
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn lambda(&self, i: usize) -> u32 {
        self.lambda[i]
    }

    pub fn parent(&self, i: usize) -> usize {
        self.parent[i]
    }

    /// Incoming labels of nodes `1..=n`.
    pub fn lambdas(&self) -> &[u32] {
        &self.lambda[1..]
    }

    /// Sorted `(label, target)` pairs leaving node `i`.
    pub fn out_edges(&self, i: usize) -> &[(u32, usize)] {
        &self.out_adj[i]
    }

    /// Target of the `c`-labeled edge leaving `i`, if any.
    pub fn child(&self, i: usize, c: u32) -> Option<usize> {
        let list = &self.out_adj[i];
        list.binary_search_by_key(&c, |&(l, _)| l)
            .ok()
            .map(|k| list[k].1)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (1..=self.n()).map(move |i| Edge::new(self.parent[i], i, self.lambda[i]))
    }

    /// Verifies that the identity numbering is a Wheeler order.
    pub fn check_wheeler_axioms(&self) -> Result<(), AxiomViolation> {
        // In-degree is 1 everywhere, so axiom 1 holds trivially and the general
        // per-node min/max collapse to single edges.
        for i in 2..=self.n() {
            let prev = Edge::new(self.parent[i - 1], i - 1, self.lambda[i - 1]);
            let cur = Edge::new(self.parent[i], i, self.lambda[i]);
            if prev.label > cur.label {
                return Err(AxiomViolation {
                    axiom: Axiom::LabelOrder,
                    first: prev,
                    second: cur,
                });
            }
            if prev.label == cur.label && prev.source > cur.source {
                return Err(AxiomViolation {
                    axiom: Axiom::PredecessorOrder,
                    first: prev,
                    second: cur,
                });
            }
        }
        Ok(())
    }

    pub fn to_graph(&self) -> LabeledGraph {
        let mut edges: Vec<Edge> = self.edges().collect();
        edges.sort_unstable_by_key(|e| (e.source, e.label));
        let sigma = self.sigma.saturating_sub(1);
        LabeledGraph::new(self.n(), sigma, edges).expect("pseudoforest edges are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::fixtures::DNA_FOREST;

    #[test]
    fn parses_small_graph() {
        let g = parse_graph_str("3 3 2\n1 2 1\n2 3 2\n3 1 1").unwrap();
        assert_eq!((g.n(), g.m(), g.sigma()), (3, 3, 2));
        assert_eq!(g.edges()[1], Edge::new(2, 3, 2));
    }

    #[test]
    fn rejects_empty_graph() {
        assert_eq!(parse_graph_str("0 0 1"), Err(GraphError::Empty));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_graph_str("% comment\n2 1 1\n1 3 1").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err:?}");
        let err = parse_graph_str("2 1 1\n1 2 5").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err:?}");
        let err = parse_graph_str("2 2 1\n1 2 1").unwrap_err();
        assert_eq!(
            err,
            GraphError::EdgeCountMismatch {
                expected: 2,
                found: 1
            }
        );
        let err = parse_graph_str("2 x 1").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
        let err = parse_graph_str("2 2 1\n1 2 1\n1 2 1").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }));
        let err = parse_graph_str("3 1 1\n1 2 1").unwrap_err();
        assert_eq!(err, GraphError::IsolatedNode { node: 3 });
        let err = parse_graph_str("2 1 2\n1 2 0").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
    }

    #[test]
    fn sigma_cap_is_enforced() {
        let err = parse_graph_with_cap("1 1 9\n1 1 1".as_bytes(), 8).unwrap_err();
        assert_eq!(err, GraphError::SigmaTooLarge { sigma: 9, cap: 8 });
    }

    #[test]
    fn dna_pseudoforest_parses_with_unit_in_degrees() {
        let g = parse_graph_str(DNA_FOREST).unwrap();
        assert!(g.in_degrees()[1..].iter().all(|&d| d == 1));
        let p = WheelerPseudoforest::from_graph(&g).unwrap();
        assert_eq!(p.sigma(), 4);
        assert_eq!(p.lambdas(), &[0, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3]);
        assert_eq!(p.check_wheeler_axioms(), Ok(()));
    }

    #[test]
    fn no_sources_means_no_change() {
        let g = LabeledGraph::new(1, 1, vec![Edge::new(1, 1, 1)]).unwrap();
        let a = eliminate_sources(&g);
        assert_eq!(a.graph().edges(), g.edges());
        assert_eq!(a.alphabet_size(), 2);
    }

    #[test]
    fn one_source_gets_a_hash_loop() {
        let g = LabeledGraph::new(2, 1, vec![Edge::new(1, 2, 1)]).unwrap();
        let a = eliminate_sources(&g);
        assert_eq!(
            a.graph().edges(),
            &[Edge::new(1, 2, 1), Edge::new(1, 1, HASH)]
        );
    }

    #[test]
    fn every_source_gets_a_hash_loop() {
        // Without isolated nodes some node must have an in-edge, so the largest
        // all-source configuration is every node except the shared sink.
        let g = LabeledGraph::new(
            4,
            2,
            vec![Edge::new(1, 4, 1), Edge::new(2, 4, 2), Edge::new(3, 4, 1)],
        )
        .unwrap();
        let a = eliminate_sources(&g);
        assert!(a.graph().sources().is_empty());
        let looped: Vec<usize> = a
            .graph()
            .edges()
            .iter()
            .filter(|e| e.label == HASH)
            .map(|e| e.source)
            .collect();
        assert_eq!(looped, vec![1, 2, 3]);
    }

    #[test]
    fn eliminate_sources_is_idempotent() {
        let g = parse_graph_str("3 2 2\n1 2 1\n3 2 2").unwrap();
        let once = eliminate_sources(&g);
        let twice = eliminate_sources(once.graph());
        assert_eq!(once, twice);
    }

    #[test]
    fn decreasing_lambda_violates_axiom_two() {
        let p = WheelerPseudoforest::from_parents(3, vec![2, 1], vec![2, 1]).unwrap();
        let v = p.check_wheeler_axioms().unwrap_err();
        assert_eq!(v.axiom, Axiom::LabelOrder);
    }

    #[test]
    fn crossed_predecessors_violate_axiom_three() {
        let c = 1;
        let p = WheelerPseudoforest::from_parents(2, vec![1, 3, 1], vec![HASH, c, c]).unwrap();
        let v = p.check_wheeler_axioms().unwrap_err();
        assert_eq!(v.axiom, Axiom::PredecessorOrder);
        assert_eq!(v.first, Edge::new(3, 2, c));
        assert_eq!(v.second, Edge::new(1, 3, c));
        // The general checker agrees on the same input without the #-loop.
        let g = LabeledGraph::new(3, 1, vec![Edge::new(3, 2, c), Edge::new(1, 3, c)]).unwrap();
        let v = check_wheeler_order(&g, &[1, 2, 3]).unwrap_err();
        assert_eq!(v.axiom, Axiom::PredecessorOrder);
    }

    #[test]
    fn general_checker_finds_misplaced_source() {
        let g = LabeledGraph::new(2, 1, vec![Edge::new(2, 1, 1)]).unwrap();
        let v = check_wheeler_order(&g, &[1, 2]).unwrap_err();
        assert_eq!(v.axiom, Axiom::SourcesFirst);
        assert_eq!(check_wheeler_order(&g, &[2, 1]), Ok(()));
    }

    #[test]
    fn rejects_nondeterministic_pseudoforest() {
        let err = WheelerPseudoforest::from_parents(2, vec![1, 1], vec![1, 1]).unwrap_err();
        assert_eq!(
            err,
            PseudoforestError::NotDeterministic { node: 1, label: 1 }
        );
    }

    #[test]
    fn text_round_trip() {
        let g = parse_graph_str(DNA_FOREST).unwrap();
        let back = parse_graph_str(&g.to_text()).unwrap();
        assert_eq!(g, back);
    }
}
