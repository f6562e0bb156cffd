//! Modules, strong modules and the modular decomposition tree.
//!
//! A vertex set `M` is a module when every vertex of `M` has the same
//! neighbours outside `M`. A module is strong when it overlaps no other
//! module; the strong modules ordered by inclusion form the modular
//! decomposition tree. Every inner node is labeled by its quotient graph:
//! a clique (join), an edgeless graph (co-join) or a prime graph.
//!
//! [`modular_decomposition`] works top-down. A disconnected vertex set splits
//! into its components (co-join), one with disconnected complement into its
//! co-components (join). Otherwise the node is prime and its children are the
//! maximal proper modules, found by refining the partition of maximal modules
//! avoiding a pivot vertex and then merging the parts that share a proper
//! module with the pivot.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::graph::{bits, low_mask};
use crate::{guard, Error, Graph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf(usize),
    Join,
    CoJoin,
    Prime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDNode {
    pub kind: NodeKind,
    pub children: Vec<usize>,
    /// Sorted vertex set of the node.
    pub vertices: Vec<usize>,
    pub parent: Option<usize>,
}

impl MDNode {
    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf(_))
    }
}

/// Rooted modular decomposition tree of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDTree {
    nodes: Vec<MDNode>,
    root: usize,
    leaf: Vec<usize>,
}

impl MDTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, idx: usize) -> &MDNode {
        &self.nodes[idx]
    }

    pub fn nodes(&self) -> &[MDNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn kind(&self, idx: usize) -> NodeKind {
        self.nodes[idx].kind
    }

    pub fn children(&self, idx: usize) -> &[usize] {
        &self.nodes[idx].children
    }

    pub fn vertices(&self, idx: usize) -> &[usize] {
        &self.nodes[idx].vertices
    }

    /// The leaf node holding vertex `v`.
    pub fn leaf_of(&self, v: usize) -> usize {
        self.leaf[v]
    }

    /// Indices of inner (non-leaf) nodes.
    pub fn inner_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| !self.nodes[i].is_leaf())
    }

    /// True when no node is prime, i.e. the tree is a cotree.
    pub fn is_cotree(&self) -> bool {
        self.nodes.iter().all(|node| node.kind != NodeKind::Prime)
    }
}

/// Whether `set` is a module of `g`. Sets of size at most one and the full
/// vertex set are trivial modules.
pub fn is_module(g: &Graph, set: &[usize]) -> Result<bool> {
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        inside[v] = true;
    }
    let size = inside.iter().filter(|&&b| b).count();
    if size <= 1 || size == n {
        return Ok(true);
    }
    let first = set[0];
    let outside_of = |v: usize| g.neighbors(v).iter().copied().filter(|&w| !inside[w]);
    Ok(set.iter().all(|&v| outside_of(v).eq(outside_of(first))))
}

/// All strong modules (non-empty), by exhaustive enumeration of modules.
///
/// Sorted by size, then lexicographically. Limited to 16 vertices.
pub fn strong_modules_bruteforce(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    guard("strong_modules_bruteforce", n, 16)?;
    let masks = g.masks();
    let all = low_mask(n);
    let modules: Vec<u64> = (1..=all).filter(|&set| is_module_mask(&masks, set, all)).collect();

    // The smallest module containing both x and y is the intersection of all
    // modules containing them.
    let mut closure = vec![all; n * n];
    for &m in &modules {
        for x in bits(m) {
            for y in bits(m) {
                closure[x * n + y] &= m;
            }
        }
    }
    // M overlaps some module iff the closure of some x in M and y outside M
    // fails to contain M.
    let mut strong: Vec<u64> =
        modules.into_iter().filter(|&m| bits(m).all(|x| bits(all & !m).all(|y| closure[x * n + y] & m == m))).collect();
    strong.sort_by_key(|&m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
    Ok(strong.into_iter().map(|m| bits(m).collect()).collect())
}

/// Module test on adjacency bitmasks restricted to `universe`.
pub(crate) fn is_module_mask(masks: &[u64], set: u64, universe: u64) -> bool {
    if set.count_ones() <= 1 || set == universe {
        return true;
    }
    let outside = universe & !set;
    let first = set.trailing_zeros() as usize;
    let reference = masks[first] & outside;
    bits(set).all(|v| masks[v] & outside == reference)
}

/// Computes the modular decomposition tree. Fails on the empty graph.
pub fn modular_decomposition(g: &Graph) -> Result<MDTree> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("modular decomposition of the empty graph".into()));
    }
    let mut builder = Builder { rows: g.bit_rows(), nodes: Vec::with_capacity(2 * n), leaf: vec![usize::MAX; n] };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let root = builder.build(all, None);
    Ok(MDTree { nodes: builder.nodes, root, leaf: builder.leaf })
}

/// Quotient graph of inner node `node`: one vertex per child, in child order.
pub fn quotient_graph(g: &Graph, tree: &MDTree, node: usize) -> Result<Graph> {
    let children = tree.children(node);
    if tree.node(node).is_leaf() {
        return Err(Error::LeafNode(node));
    }
    let reps: Vec<usize> = children.iter().map(|&c| tree.vertices(c)[0]).collect();
    let k = reps.len();
    let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
    Graph::from_edges(k, edges.filter(|&(i, j)| g.has_edge(reps[i], reps[j])))
}

struct Builder {
    rows: Vec<FixedBitSet>,
    nodes: Vec<MDNode>,
    leaf: Vec<usize>,
}

impl Builder {
    fn push(&mut self, kind: NodeKind, set: &FixedBitSet, parent: Option<usize>) -> usize {
        let idx = self.nodes.len();
        self.nodes.push(MDNode { kind, children: Vec::new(), vertices: set.ones().collect(), parent });
        idx
    }

    fn build(&mut self, set: FixedBitSet, parent: Option<usize>) -> usize {
        if set.count_ones(..) == 1 {
            let v = set.ones().next().unwrap();
            let idx = self.push(NodeKind::Leaf(v), &set, parent);
            self.leaf[v] = idx;
            return idx;
        }
        let (kind, parts) = {
            let comps = self.components(&set, false);
            if comps.len() > 1 {
                (NodeKind::CoJoin, comps)
            } else {
                let cocomps = self.components(&set, true);
                if cocomps.len() > 1 {
                    (NodeKind::Join, cocomps)
                } else {
                    (NodeKind::Prime, self.maximal_modules(&set))
                }
            }
        };
        let idx = self.push(kind, &set, parent);
        for part in parts {
            let child = self.build(part, Some(idx));
            self.nodes[idx].children.push(child);
        }
        idx
    }

    /// Components of `set` in the graph, or in its complement.
    fn components(&self, set: &FixedBitSet, complement: bool) -> Vec<FixedBitSet> {
        let mut remaining = set.clone();
        let mut out = Vec::new();
        let mut stack = Vec::new();
        while let Some(start) = remaining.ones().next() {
            let mut comp = FixedBitSet::with_capacity(set.len());
            remaining.set(start, false);
            comp.insert(start);
            stack.push(start);
            while let Some(v) = stack.pop() {
                let mut reach = remaining.clone();
                if complement {
                    reach.difference_with(&self.rows[v]);
                } else {
                    reach.intersect_with(&self.rows[v]);
                }
                for w in reach.ones() {
                    stack.push(w);
                }
                remaining.difference_with(&reach);
                comp.union_with(&reach);
            }
            out.push(comp);
        }
        out
    }

    /// Maximal proper modules of `set`, assuming both the induced graph and
    /// its complement are connected (so these modules partition `set`).
    fn maximal_modules(&self, set: &FixedBitSet) -> Vec<FixedBitSet> {
        let pivot = set.ones().next().unwrap();
        let parts = self.partition_avoiding(pivot, set);
        let mut with_pivot = FixedBitSet::with_capacity(set.len());
        with_pivot.insert(pivot);
        let mut out = Vec::new();
        for part in parts {
            let rep = part.ones().next().unwrap();
            if &self.closure(pivot, rep, set) == set {
                out.push(part);
            } else {
                with_pivot.union_with(&part);
            }
        }
        out.insert(0, with_pivot);
        out
    }

    /// Maximal modules of `set` not containing `pivot`, by partition
    /// refinement. A split of part `Y` into `Y1, Y2` makes the vertices of
    /// each side pending splitters of the other.
    fn partition_avoiding(&self, pivot: usize, set: &FixedBitSet) -> Vec<FixedBitSet> {
        let n = set.len();
        let mut rest = set.clone();
        rest.set(pivot, false);
        let mut part_of = vec![usize::MAX; n];
        for v in rest.ones() {
            part_of[v] = 0;
        }
        let mut parts = vec![rest.clone()];
        let mut tasks: VecDeque<(Vec<usize>, FixedBitSet)> = VecDeque::new();
        tasks.push_back((vec![pivot], rest));

        let mut touched = Vec::new();
        while let Some((splitters, target)) = tasks.pop_front() {
            for z in splitters {
                touched.clear();
                for v in target.ones() {
                    let p = part_of[v];
                    if !touched.contains(&p) {
                        touched.push(p);
                    }
                }
                for &p in &touched {
                    let mut inside = parts[p].clone();
                    inside.intersect_with(&self.rows[z]);
                    let hit = inside.count_ones(..);
                    if hit == 0 || hit == parts[p].count_ones(..) {
                        continue;
                    }
                    let mut outside = parts[p].clone();
                    outside.difference_with(&inside);
                    let new_id = parts.len();
                    for v in outside.ones() {
                        part_of[v] = new_id;
                    }
                    tasks.push_back((inside.ones().collect(), outside.clone()));
                    tasks.push_back((outside.ones().collect(), inside.clone()));
                    parts[p] = inside;
                    parts.push(outside);
                }
            }
        }
        parts
    }

    /// Smallest module of `G[set]` containing `a` and `b`.
    fn closure(&self, a: usize, b: usize, set: &FixedBitSet) -> FixedBitSet {
        let mut module = FixedBitSet::with_capacity(set.len());
        module.insert(a);
        module.insert(b);
        let mut queue = vec![b];
        while let Some(x) = queue.pop() {
            let mut splitters = self.rows[x].clone();
            splitters.symmetric_difference_with(&self.rows[a]);
            splitters.intersect_with(set);
            splitters.difference_with(&module);
            for z in splitters.ones() {
                queue.push(z);
            }
            module.union_with(&splitters);
        }
        module
    }
}
