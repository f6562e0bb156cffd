//! Seeded random graph families.
//!
//! All generators are deterministic in their seed and relabel vertices by a
//! random permutation at the end, so that vertex indices carry no hint of
//! the construction order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::modular::{modular_decomposition, NodeKind};
use crate::{Error, Graph, ModuleSequence, Result};

/// Probability of attaching a pendant (rather than a false twin) in
/// [`random_bipartite_dh`].
pub const DEFAULT_PENDANT_PROBABILITY: f64 = 0.6;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("probability {p} is outside [0, 1]")))
    }
}

/// Erdos-Renyi graph: each pair is an edge independently with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges)
}

/// Relabels `adj` (built in insertion order `0..n`) by a random permutation
/// and returns the graph with the matching insertion sequence.
fn relabel(adj: &[Vec<usize>], rng: &mut ChaCha8Rng) -> (Graph, ModuleSequence) {
    let n = adj.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges = adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v < u).map(move |&v| (u, v)));
    let g = Graph::from_edges(n, edges.map(|(u, v)| (perm[u], perm[v]))).expect("edges are in range");
    (g, ModuleSequence::new(perm))
}

/// Random module-composed graph on `n` vertices with a module-sequence.
///
/// Each new vertex is attached to a random module of the current graph: a
/// strong module, a union of children of a join or co-join node, or (rarely)
/// nothing. Recomputes the modular decomposition at every step.
pub fn random_module_composed(n: usize, seed: u64) -> (Graph, ModuleSequence) {
    let mut rng = rng(seed);
    let mut adj: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let neighbourhood = if v == 0 || rng.gen_bool(0.05) {
            Vec::new()
        } else {
            let current = Graph::from_edges(
                v,
                adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&w| w < u).map(move |&w| (u, w))),
            )
            .expect("edges are in range");
            let tree = modular_decomposition(&current).expect("graph is non-empty");
            let node = rng.gen_range(0..tree.len());
            match tree.kind(node) {
                NodeKind::Join | NodeKind::CoJoin => {
                    let children = tree.children(node);
                    let mut chosen: Vec<usize> = children.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                    if chosen.is_empty() {
                        chosen.push(*children.choose(&mut rng).expect("inner node has children"));
                    }
                    chosen.iter().flat_map(|&c| tree.vertices(c).iter().copied()).collect()
                }
                NodeKind::Prime | NodeKind::Leaf(_) => tree.vertices(node).to_vec(),
            }
        };
        for &u in &neighbourhood {
            adj[u].push(v);
        }
        adj.push(neighbourhood);
    }
    relabel(&adj, &mut rng)
}

/// Random connected bipartite distance-hereditary graph on `n >= 1` vertices,
/// using [`DEFAULT_PENDANT_PROBABILITY`].
pub fn random_bipartite_dh(n: usize, seed: u64) -> Result<Graph> {
    random_bipartite_dh_with(n, DEFAULT_PENDANT_PROBABILITY, seed)
}

/// Grows a graph from one vertex: each new vertex is either a pendant of a
/// random vertex (probability `pendant`) or a false twin of one. The growth
/// order is generally not a module-sequence: a twin's neighbourhood need not
/// be a module when it is added.
pub fn random_bipartite_dh_with(n: usize, pendant: f64, seed: u64) -> Result<Graph> {
    check_probability(pendant)?;
    if n == 0 {
        return Err(Error::InvalidParameter("random_bipartite_dh needs at least one vertex".into()));
    }
    let mut rng = rng(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    for v in 1..n {
        let x = rng.gen_range(0..v);
        // A twin of an isolated start vertex would disconnect the graph.
        let neighbourhood = if adj[x].is_empty() || rng.gen_bool(pendant) { vec![x] } else { adj[x].clone() };
        for &u in &neighbourhood {
            adj[u].push(v);
        }
        adj.push(neighbourhood);
    }
    Ok(relabel(&adj, &mut rng).0)
}

/// Random cograph on `n` vertices from a random cotree: vertices start as
/// singletons and two random parts are repeatedly merged by disjoint union
/// or by join with equal probability.
pub fn random_cograph(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut parts: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut edges = Vec::new();
    while parts.len() > 1 {
        let i = rng.gen_range(0..parts.len());
        let a = parts.swap_remove(i);
        let j = rng.gen_range(0..parts.len());
        let b = parts.swap_remove(j);
        if rng.gen_bool(0.5) {
            edges.extend(a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))));
        }
        parts.push(a.into_iter().chain(b).collect());
    }
    Graph::from_edges(n, edges).expect("edges are in range")
}
