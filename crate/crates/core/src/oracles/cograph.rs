//! Cographs and their module-sequences.
//!
//! A cograph is module-composed exactly when it has no induced co-2C4, the
//! join of two copies of 2K2. The sequence is built on the cotree. A join
//! node may have at most one child containing an induced 2K2; that child
//! (or the largest child if none does) is built first, and every other child
//! Y is appended in an order where each new vertex of Y sees all earlier
//! vertices of Y that are non-adjacent to any of its earlier neighbours in Y.
//! For a 2K2-free cograph such an order exists: under a join concatenate the
//! children, under a co-join take the single child with an edge first and the
//! isolated vertices after it.

use crate::modular::{modular_decomposition, MDTree, NodeKind};
use crate::oracles::induced::find_p4;
use crate::{Error, Graph, ModuleSequence, Result};

/// Whether `g` is a cograph: its modular decomposition has no prime node.
pub fn is_cograph(g: &Graph) -> bool {
    g.n() == 0 || modular_decomposition(g).expect("non-empty graph").is_cotree()
}

/// An induced P4 as `[a, b, c, d]`, if any (`n <= 64`).
pub fn find_induced_p4(g: &Graph) -> Result<Option<[usize; 4]>> {
    crate::guard("find_induced_p4", g.n(), 64)?;
    Ok(find_p4(&g.masks()))
}

/// A module-sequence of a cograph, absent exactly when it contains an induced
/// co-2C4.
pub fn cograph_module_sequence(g: &Graph) -> Result<Option<ModuleSequence>> {
    if g.n() == 0 {
        return Ok(Some(ModuleSequence::default()));
    }
    let tree = modular_decomposition(g)?;
    if !tree.is_cotree() {
        return Err(Error::NotCograph);
    }
    let info = node_info(&tree);
    let mut out = Vec::with_capacity(g.n());
    Ok(build(&tree, &info, tree.root(), &mut out).then(|| ModuleSequence::new(out)))
}

#[derive(Clone, Copy, Default)]
struct Info {
    has_edge: bool,
    has_2k2: bool,
}

fn node_info(tree: &MDTree) -> Vec<Info> {
    let mut info = vec![Info::default(); tree.len()];
    fill(tree, tree.root(), &mut info);
    info
}

fn fill(tree: &MDTree, node: usize, info: &mut [Info]) {
    for &c in tree.children(node) {
        fill(tree, c, info);
    }
    let kids = tree.children(node);
    info[node] = match tree.kind(node) {
        NodeKind::Leaf(_) => Info::default(),
        NodeKind::Join => Info { has_edge: true, has_2k2: kids.iter().any(|&c| info[c].has_2k2) },
        NodeKind::CoJoin | NodeKind::Prime => {
            let edged = kids.iter().filter(|&&c| info[c].has_edge).count();
            Info { has_edge: edged > 0, has_2k2: edged > 1 || kids.iter().any(|&c| info[c].has_2k2) }
        }
    };
}

fn build(tree: &MDTree, info: &[Info], node: usize, out: &mut Vec<usize>) -> bool {
    match tree.kind(node) {
        NodeKind::Leaf(v) => {
            out.push(v);
            true
        }
        NodeKind::CoJoin | NodeKind::Prime => tree.children(node).iter().all(|&c| build(tree, info, c, out)),
        NodeKind::Join => {
            let kids = tree.children(node);
            let heavy: Vec<usize> = kids.iter().copied().filter(|&c| info[c].has_2k2).collect();
            if heavy.len() > 1 {
                return false;
            }
            let size = |c: usize| tree.vertices(c).len();
            let base = heavy.first().copied().unwrap_or_else(|| {
                *kids.iter().max_by_key(|&&c| (size(c), std::cmp::Reverse(tree.vertices(c)[0]))).unwrap()
            });
            if !build(tree, info, base, out) {
                return false;
            }
            let mut rest: Vec<usize> = kids.iter().copied().filter(|&c| c != base).collect();
            rest.sort_by_key(|&c| (std::cmp::Reverse(size(c)), tree.vertices(c)[0]));
            for c in rest {
                free_order(tree, info, c, out);
            }
            true
        }
    }
}

/// Insertion order of a 2K2-free cotree node appended after a full join.
fn free_order(tree: &MDTree, info: &[Info], node: usize, out: &mut Vec<usize>) {
    match tree.kind(node) {
        NodeKind::Leaf(v) => out.push(v),
        NodeKind::Join | NodeKind::Prime => {
            for &c in tree.children(node) {
                free_order(tree, info, c, out);
            }
        }
        NodeKind::CoJoin => {
            let kids = tree.children(node);
            for &c in kids.iter().filter(|&&c| info[c].has_edge) {
                free_order(tree, info, c, out);
            }
            for &c in kids.iter().filter(|&&c| !info[c].has_edge) {
                free_order(tree, info, c, out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{verify_module_sequence, NamedGraph};

    #[test]
    fn diamond() {
        let diamond = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let seq = cograph_module_sequence(&diamond).unwrap().unwrap();
        assert_eq!(&seq.order()[..2], &[0, 1]);
        assert!(verify_module_sequence(&diamond, &seq).unwrap());
    }

    #[test]
    fn co_2c4_has_none() {
        let g = NamedGraph::CoTwoC4.build().unwrap();
        assert!(is_cograph(&g));
        assert_eq!(cograph_module_sequence(&g).unwrap(), None);
    }

    #[test]
    fn edgeless_and_non_cographs() {
        let g = Graph::empty(5);
        assert!(verify_module_sequence(&g, &cograph_module_sequence(&g).unwrap().unwrap()).unwrap());
        let p4 = NamedGraph::Path(4).build().unwrap();
        assert!(!is_cograph(&p4));
        assert_eq!(cograph_module_sequence(&p4), Err(Error::NotCograph));
        assert!(find_induced_p4(&p4).unwrap().is_some());
    }

    #[test]
    fn k33_is_handled() {
        let k33 = Graph::empty(3).join(&Graph::empty(3));
        let seq = cograph_module_sequence(&k33).unwrap().unwrap();
        assert!(verify_module_sequence(&k33, &seq).unwrap());
    }

    #[test]
    fn all_small_cographs_get_valid_sequences() {
        for n in 1..=6 {
            for code in 0..1u64 << (n * (n - 1) / 2) {
                let g = Graph::from_edge_code(n, code);
                if !is_cograph(&g) {
                    assert!(find_p4(&g.masks()).is_some());
                    continue;
                }
                assert!(find_p4(&g.masks()).is_none());
                let seq = cograph_module_sequence(&g).unwrap().expect("co-2C4 needs 8 vertices");
                assert!(verify_module_sequence(&g, &seq).unwrap(), "{g:?} {seq}");
            }
        }
    }
}
