//! Recognition of module-composed graphs.
//!
//! [`recognize`] eliminates vertices whose neighbourhood is a module of the
//! remaining graph, guided by the modular decomposition tree: in a connected
//! module-composed graph such a vertex is always a child or a grandchild of
//! the root. Under a join root the leaf children are eliminated, or failing
//! that the leaf children of co-join children. Under a prime root the same is
//! done, restricted to children of degree one in the quotient graph. All
//! qualifying vertices are removed in one batch, then the tree is rebuilt.
//! Insertion order is the reverse of elimination order.
//!
//! [`brute_force_recognize`] decides the same question exactly by dynamic
//! programming over vertex subsets.

use crate::graph::{bits, low_mask};
use crate::modular::{is_module_mask, modular_decomposition, quotient_graph, NodeKind};
use crate::{guard, Graph, ModuleSequence, Result};

/// Outcome of a recognition run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Yes(ModuleSequence),
    No,
}

impl Recognition {
    pub fn is_yes(&self) -> bool {
        matches!(self, Recognition::Yes(_))
    }

    pub fn sequence(&self) -> Option<&ModuleSequence> {
        match self {
            Recognition::Yes(seq) => Some(seq),
            Recognition::No => None,
        }
    }

    pub fn into_sequence(self) -> Option<ModuleSequence> {
        match self {
            Recognition::Yes(seq) => Some(seq),
            Recognition::No => None,
        }
    }
}

impl From<Option<Vec<usize>>> for Recognition {
    fn from(order: Option<Vec<usize>>) -> Self {
        order.map_or(Recognition::No, |o| Recognition::Yes(ModuleSequence::new(o)))
    }
}

/// Decides whether `g` is module-composed and returns a module-sequence if so.
pub fn recognize(g: &Graph) -> Recognition {
    let labels: Vec<usize> = (0..g.n()).collect();
    mod_com(g, &labels).into()
}

fn mod_com(g: &Graph, labels: &[usize]) -> Option<Vec<usize>> {
    match g.n() {
        0 => return Some(Vec::new()),
        1 => return Some(vec![labels[0]]),
        _ => {}
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut order = Vec::with_capacity(g.n());
        for comp in comps {
            let sub = g.induced_subgraph(&comp).expect("component vertices are in range");
            let sub_labels: Vec<usize> = sub.original.iter().map(|&v| labels[v]).collect();
            order.extend(mod_com(&sub.graph, &sub_labels)?);
        }
        return Some(order);
    }

    let eliminated = eliminable(g);
    if eliminated.is_empty() {
        return None;
    }
    let rest = g.without(&eliminated).expect("eliminated vertices are in range");
    let rest_labels: Vec<usize> = rest.original.iter().map(|&v| labels[v]).collect();
    let mut order = mod_com(&rest.graph, &rest_labels)?;
    order.extend(eliminated.iter().rev().map(|&v| labels[v]));
    Some(order)
}

/// Vertices of a connected graph (n >= 2) that one round removes, in
/// elimination order.
fn eliminable(g: &Graph) -> Vec<usize> {
    let tree = modular_decomposition(g).expect("graph is non-empty");
    let root = tree.root();
    let children = tree.children(root);
    let leaf_vertex = |node: usize| match tree.kind(node) {
        NodeKind::Leaf(v) => Some(v),
        _ => None,
    };
    let leaf_children_of_cojoins = |eligible: &dyn Fn(usize) -> bool| -> Vec<usize> {
        children
            .iter()
            .enumerate()
            .filter(|&(i, &c)| tree.kind(c) == NodeKind::CoJoin && eligible(i))
            .flat_map(|(_, &c)| tree.children(c).iter().filter_map(|&gc| leaf_vertex(gc)))
            .collect()
    };

    match tree.kind(root) {
        NodeKind::Join => {
            let direct: Vec<usize> = children.iter().filter_map(|&c| leaf_vertex(c)).collect();
            if !direct.is_empty() {
                direct
            } else {
                leaf_children_of_cojoins(&|_| true)
            }
        }
        NodeKind::Prime => {
            let quotient = quotient_graph(g, &tree, root).expect("root is an inner node");
            let pendant = |i: usize| quotient.degree(i) == 1;
            let direct: Vec<usize> =
                children.iter().enumerate().filter(|&(i, _)| pendant(i)).filter_map(|(_, &c)| leaf_vertex(c)).collect();
            if !direct.is_empty() {
                direct
            } else {
                leaf_children_of_cojoins(&pendant)
            }
        }
        // A connected graph on two or more vertices has a join or prime root.
        NodeKind::CoJoin | NodeKind::Leaf(_) => Vec::new(),
    }
}

/// Exact recognition by elimination over all vertex subsets (`n <= 12`).
///
/// A subset is module-composed iff it has a vertex whose neighbourhood in the
/// rest is a module of the rest, and the rest is module-composed.
pub fn brute_force_recognize(g: &Graph) -> Result<Recognition> {
    guard("brute_force_recognize", g.n(), 12)?;
    Ok(subset_elimination(g, false).into())
}

/// Exact recognition of independent module-composed graphs (`n <= 12`):
/// every inserted neighbourhood must also be an independent set.
pub fn brute_force_recognize_independent(g: &Graph) -> Result<Recognition> {
    guard("brute_force_recognize_independent", g.n(), 12)?;
    Ok(subset_elimination(g, true).into())
}

fn subset_elimination(g: &Graph, independent: bool) -> Option<Vec<usize>> {
    let n = g.n();
    let masks = g.masks();
    let full = low_mask(n) as usize;
    // choice[S] = vertex eliminated first from S, or NONE.
    const NONE: u8 = u8::MAX;
    let mut choice = vec![NONE; full + 1];
    let mut ok = vec![false; full + 1];
    ok[0] = true;
    for set in 1..=full {
        for v in bits(set as u64) {
            let rest = set & !(1 << v);
            if !ok[rest] {
                continue;
            }
            let back = masks[v] & rest as u64;
            if independent && bits(back).any(|x| masks[x] & back != 0) {
                continue;
            }
            if is_module_mask(&masks, back, rest as u64) {
                ok[set] = true;
                choice[set] = v as u8;
                break;
            }
        }
    }
    if !ok[full] {
        return None;
    }
    let mut eliminated = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let v = choice[set] as usize;
        eliminated.push(v);
        set &= !(1 << v);
    }
    eliminated.reverse();
    Some(eliminated)
}
