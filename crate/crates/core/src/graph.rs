//! Simple undirected graphs on dense vertex indices `0..n`.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

/// An immutable simple undirected graph.
///
/// Neighbor lists are kept sorted and deduplicated; there are no self-loops
/// and adjacency is symmetric.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// An induced subgraph together with the map back to the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `original[new] = old`.
    pub original: Vec<usize>,
}

impl Subgraph {
    /// Index of `old` in the subgraph, if it was kept.
    pub fn index_of(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge iterator. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw(adj))
    }

    fn from_raw(mut adj: Vec<Vec<usize>>) -> Self {
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        debug_assert_eq!(m % 2, 0);
        let g = Graph { adj, m: m / 2 };
        debug_assert!(g.is_well_formed());
        g
    }

    /// Builds a graph from per-vertex adjacency bitmasks (`n <= 64`).
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!(n <= 64);
        let adj = masks
            .iter()
            .enumerate()
            .map(|(v, &mask)| {
                let mask = mask & !(1u64 << v) & low_mask(n);
                bits(mask).collect()
            })
            .collect::<Vec<Vec<usize>>>();
        // One-sided masks are accepted; the union is taken.
        let mut sym = adj.clone();
        for (v, list) in adj.iter().enumerate() {
            for &u in list {
                sym[u].push(v);
            }
        }
        Self::from_raw(sym)
    }

    /// Builds the graph on `n` vertices whose edge `{i, j}` (`i < j`) is
    /// present iff bit `k` of `code` is set, where `k` enumerates pairs in
    /// the order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    pub fn from_edge_code(n: usize, code: u64) -> Self {
        assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut adj = vec![Vec::new(); n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if code >> k & 1 == 1 {
                    adj[i].push(j);
                    adj[j].push(i);
                }
                k += 1;
            }
        }
        Self::from_raw(adj)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Adjacency bitmasks. Panics if `n > 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view requires n <= 64, got {}", self.n());
        self.adj.iter().map(|list| list.iter().fold(0u64, |acc, &v| acc | 1 << v)).collect()
    }

    /// Adjacency rows as bitsets.
    pub fn bit_rows(&self) -> Vec<FixedBitSet> {
        let n = self.n();
        self.adj
            .iter()
            .map(|list| {
                let mut row = FixedBitSet::with_capacity(n);
                for &v in list {
                    row.insert(v);
                }
                row
            })
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Subgraph induced by `vertices` (deduplicated, kept in increasing order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Subgraph> {
        let mut original = vertices.to_vec();
        original.sort_unstable();
        original.dedup();
        for &v in &original {
            self.check_vertex(v)?;
        }
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| {
                self.adj[v].iter().filter_map(|&w| (new_index[w] != usize::MAX).then_some(new_index[w])).collect()
            })
            .collect();
        Ok(Subgraph { graph: Self::from_raw(adj), original })
    }

    /// Removes `deleted` and returns what is left.
    pub fn without(&self, deleted: &[usize]) -> Result<Subgraph> {
        let mut gone = vec![false; self.n()];
        for &v in deleted {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut out = Vec::with_capacity(n - 1 - self.adj[v].len());
                let mut it = self.adj[v].iter().peekable();
                for w in 0..n {
                    if it.peek() == Some(&&w) {
                        it.next();
                    } else if w != v {
                        out.push(w);
                    }
                }
                out
            })
            .collect();
        Self::from_raw(adj)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let adj = self
            .adj
            .iter()
            .cloned()
            .chain(other.adj.iter().map(|list| list.iter().map(|&v| v + shift).collect()))
            .collect();
        Self::from_raw(adj)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n(), other.n());
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(n1 + n2);
        for list in &self.adj {
            let mut row = list.clone();
            row.extend(n1..n1 + n2);
            adj.push(row);
        }
        for list in &other.adj {
            let mut row: Vec<usize> = (0..n1).collect();
            row.extend(list.iter().map(|&v| v + n1));
            adj.push(row);
        }
        Self::from_raw(adj)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if !is_permutation(perm, self.n()) {
            return Err(Error::NotPermutation);
        }
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Serializes in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the edge-list text format: a header line `n m`, followed by
    /// `m` lines `u v`. Lines starting with `#` and blank lines are skipped;
    /// repeated edges are merged.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) =
            lines.next().ok_or(Error::Parse { line: 1, message: "missing header `n m`".into() })?;
        let (n, m) = parse_pair(header).ok_or_else(|| Error::Parse {
            line: header_line,
            message: format!("malformed header `{header}`, expected `n m`"),
        })?;

        let mut adj = vec![Vec::new(); n];
        let mut count = 0;
        for (line, text) in lines {
            let (u, v) = parse_pair(text)
                .ok_or_else(|| Error::Parse { line, message: format!("malformed edge `{text}`, expected `u v`") })?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex index {} out of range for n = {n}", u.max(v)),
                });
            }
            if u == v {
                return Err(Error::Parse { line, message: format!("self-loop at vertex {u}") });
            }
            adj[u].push(v);
            adj[v].push(u);
            count += 1;
        }
        if count != m {
            return Err(Error::Parse {
                line: header_line,
                message: format!("header declares {m} edges but {count} were listed"),
            });
        }
        Ok(Self::from_raw(adj))
    }

    fn is_well_formed(&self) -> bool {
        let n = self.n();
        self.adj
            .iter()
            .enumerate()
            .all(|(v, list)| list.iter().all(|&w| w < n && w != v && self.adj[w].binary_search(&v).is_ok()))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub(crate) fn is_permutation(order: &[usize], n: usize) -> bool {
    if order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Mask with the lowest `n` bits set.
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of the set bits, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn parse_edgeless() {
        let g = Graph::parse_edge_list("3 0").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn parse_c4() {
        let g = Graph::parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(g, cycle(4));
        for v in 0..4 {
            assert_eq!(g.degree(v), 2);
            assert!(g.has_edge(v, (v + 1) % 4));
            assert!(!g.has_edge(v, (v + 2) % 4));
        }
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = Graph::parse_edge_list("2 1\n0 0").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("self-loop"));
    }

    #[test]
    fn parse_comments_and_duplicates() {
        let g = Graph::parse_edge_list("# a comment\n3 3\n0 1\n# mid\n1 0\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn parse_errors_name_line() {
        assert!(matches!(Graph::parse_edge_list("x y"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse_edge_list(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n\n0 3"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Graph::parse_edge_list("3 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n0 1 2"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(6).join(&Graph::empty(2));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap().graph, c5);
        let p4 = c5.induced_subgraph(&[1, 2, 3, 4]).unwrap();
        assert_eq!(p4.graph, Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap());
        assert_eq!(p4.index_of(3), Some(2));
        assert_eq!(p4.index_of(0), None);
        let k4 = Graph::empty(4).complement();
        assert_eq!(k4.induced_subgraph(&[3, 0, 2]).unwrap().graph, Graph::empty(3).complement());
        assert!(matches!(c5.induced_subgraph(&[5]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn complements() {
        assert_eq!(Graph::empty(4).complement().m(), 6);
        let c5 = cycle(5);
        let co = c5.complement();
        assert_eq!(co.m(), 5);
        // 0-2-4-1-3-0 is the complement cycle.
        assert_eq!(co.permute(&[0, 3, 1, 4, 2]).unwrap(), c5);
        let two_c4 = cycle(4).disjoint_union(&cycle(4));
        assert_eq!(two_c4.m(), 8);
        assert_eq!(two_c4.complement().m(), 20);
        assert_eq!(two_c4.complement().complement(), two_c4);
    }

    #[test]
    fn unions_and_joins() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.disjoint_union(&k1), Graph::empty(2));
        let k2 = k1.join(&k1);
        assert_eq!(k2, Graph::from_edges(2, [(0, 1)]).unwrap());
        let two_k2 = k2.disjoint_union(&k2);
        assert_eq!(two_k2, Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        let c4 = Graph::empty(2).join(&Graph::empty(2));
        assert_eq!(c4.permute(&[0, 2, 1, 3]).unwrap(), cycle(4));
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let gem = p4.join(&k1);
        assert_eq!(gem.m(), 7);
        assert_eq!(gem.degree(4), 4);
    }

    #[test]
    fn edge_codes_and_masks() {
        let g = Graph::from_edge_code(4, 0b111111);
        assert_eq!(g.m(), 6);
        let g = Graph::from_edge_code(3, 0b100);
        assert_eq!(g, Graph::from_edges(3, [(1, 2)]).unwrap());
        let c5 = cycle(5);
        assert_eq!(Graph::from_masks(&c5.masks()), c5);
    }

    #[test]
    fn components_and_without() {
        let g = cycle(3).disjoint_union(&Graph::empty(2));
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3], vec![4]]);
        let rest = g.without(&[1, 4]).unwrap();
        assert_eq!(rest.original, vec![0, 2, 3]);
        assert_eq!(rest.graph.m(), 1);
    }
}
