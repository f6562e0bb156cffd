//! Bipartite distance-hereditary graphs, which are exactly the independent
//! module-composed graphs.
//!
//! The level test runs one BFS per component. With `N_k` the set of vertices
//! at distance `k` from the start, a connected graph is bipartite distance
//! hereditary iff
//!
//! 1. every level `N_k` is edgeless,
//! 2. for every `v` in `N_k`, all neighbours of `v` in `N_{k-1}` have the same
//!    neighbours in `N_{k-2}`, and
//! 3. the back-neighbourhoods `N(v) ∩ N_{k-1}`, `v` in `N_k`, form a laminar
//!    family (any two are disjoint or nested).
//!
//! Ordering each level by decreasing back-neighbourhood then yields an
//! independent module-sequence. Both steps run in `O(n + m)` up to sorting.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Graph, ModuleSequence, Result};

/// A proper 2-colouring (`0`/`1` per vertex), if one exists.
pub fn is_bipartite(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Distance levels of the component of `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsLevels {
    pub start: usize,
    /// `levels[k]` holds the vertices at distance `k`, in discovery order.
    pub levels: Vec<Vec<usize>>,
    /// Level of each vertex; `None` outside the component.
    pub level_of: Vec<Option<usize>>,
}

impl BfsLevels {
    /// Vertices of the component in BFS discovery order.
    pub fn order(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels.iter().flatten().copied()
    }
}

pub fn bfs_levels(g: &Graph, start: usize) -> Result<BfsLevels> {
    let n = g.n();
    if start >= n {
        return Err(Error::VertexOutOfRange { vertex: start, n });
    }
    let mut level_of = vec![None; n];
    level_of[start] = Some(0);
    let mut levels = vec![vec![start]];
    loop {
        let k = levels.len();
        let mut next = Vec::new();
        for &v in &levels[k - 1] {
            for &w in g.neighbors(v) {
                if level_of[w].is_none() {
                    level_of[w] = Some(k);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    Ok(BfsLevels { start, levels, level_of })
}

/// Whether `g` is bipartite distance hereditary. Each component is tested
/// from its smallest vertex.
pub fn check_bdh(g: &Graph) -> bool {
    independent_module_sequence(g).is_some()
}

/// [`check_bdh`] with the component of `start` tested from `start`.
pub fn check_bdh_from(g: &Graph, start: usize) -> Result<bool> {
    let levels = bfs_levels(g, start)?;
    if component_sequence(g, &levels).is_none() {
        return Ok(false);
    }
    let mut seen: Vec<bool> = levels.level_of.iter().map(Option::is_some).collect();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let levels = bfs_levels(g, s)?;
        for v in levels.order() {
            seen[v] = true;
        }
        if component_sequence(g, &levels).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An independent module-sequence built from BFS levels, or `None` when the
/// graph is not bipartite distance hereditary. Components are concatenated
/// in order of their smallest vertex.
pub fn independent_module_sequence(g: &Graph) -> Option<ModuleSequence> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let levels = bfs_levels(g, s).expect("start is in range");
        let part = component_sequence(g, &levels)?;
        for &v in &part {
            seen[v] = true;
        }
        order.extend(part);
    }
    Some(ModuleSequence::new(order))
}

/// Runs the three level conditions on one component and returns its
/// sequence if they hold.
fn component_sequence(g: &Graph, bfs: &BfsLevels) -> Option<Vec<usize>> {
    let level = |v: usize| bfs.level_of[v];

    // 1. Levels are edgeless.
    for v in bfs.order() {
        if g.neighbors(v).iter().any(|&w| level(w) == level(v)) {
            return None;
        }
    }

    let back_of = |v: usize, k: usize| -> Vec<usize> {
        g.neighbors(v).iter().copied().filter(|&w| level(w) == Some(k - 1)).collect()
    };

    let mut order: Vec<usize> = bfs.levels[0].clone();
    if let Some(first) = bfs.levels.get(1) {
        order.extend(first);
    }
    let mut owner = vec![usize::MAX; g.n()];
    for k in 2..bfs.levels.len() {
        // 2. Back-neighbours of a vertex agree on level k-2.
        let mut up_ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut up_id = HashMap::new();
        for &x in &bfs.levels[k - 1] {
            let up = back_of(x, k - 1);
            let next = up_ids.len();
            up_id.insert(x, *up_ids.entry(up).or_insert(next));
        }
        let mut backs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(bfs.levels[k].len());
        for &v in &bfs.levels[k] {
            let back = back_of(v, k);
            let id = up_id[&back[0]];
            if back.iter().any(|x| up_id[x] != id) {
                return None;
            }
            backs.push((v, back));
        }

        // 3. Laminar back-neighbourhoods. Visiting sets by decreasing size,
        // each must lie inside the last visited set that touched any of its
        // elements.
        backs.sort_by(|(v, a), (w, b)| b.len().cmp(&a.len()).then(v.cmp(w)));
        for (v, back) in &backs {
            let o = owner[back[0]];
            if back.iter().any(|&x| owner[x] != o) {
                return None;
            }
            for &x in back {
                owner[x] = *v;
            }
        }
        order.extend(backs.iter().map(|(v, _)| *v));
    }
    Some(order)
}

/// Tie-breaking rule for [`lex_bfs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest vertex index among the candidates.
    Smallest,
    /// Uniformly random candidate from a seeded generator.
    Seeded(u64),
}

struct Class {
    members: BTreeSet<usize>,
    prev: usize,
    next: usize,
    split_step: usize,
    split_into: usize,
}

const HEAD: usize = 0;

/// Lexicographic BFS from `start`; the visit order is returned as an
/// insertion order. Unreached components follow, each started by the
/// tie-breaking rule.
pub fn lex_bfs(g: &Graph, start: usize, tie: TieBreak) -> Result<ModuleSequence> {
    let n = g.n();
    if start >= n {
        return Err(Error::VertexOutOfRange { vertex: start, n });
    }
    let mut rng = match tie {
        TieBreak::Smallest => None,
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };

    // classes[HEAD] is a sentinel of the circular list; the first real class
    // holds the vertices with the lexicographically largest labels.
    let mut classes = vec![Class {
        members: BTreeSet::new(),
        prev: HEAD,
        next: HEAD,
        split_step: usize::MAX,
        split_into: usize::MAX,
    }];
    let insert_before = |classes: &mut Vec<Class>, at: usize, members: BTreeSet<usize>| -> usize {
        let idx = classes.len();
        let prev = classes[at].prev;
        classes.push(Class { members, prev, next: at, split_step: usize::MAX, split_into: usize::MAX });
        classes[prev].next = idx;
        classes[at].prev = idx;
        idx
    };
    let unlink = |classes: &mut Vec<Class>, c: usize| {
        let (prev, next) = (classes[c].prev, classes[c].next);
        classes[prev].next = next;
        classes[next].prev = prev;
    };

    let rest: BTreeSet<usize> = (0..n).filter(|&v| v != start).collect();
    let mut class_of = vec![0; n];
    if !rest.is_empty() {
        let c = insert_before(&mut classes, HEAD, rest);
        class_of.fill(c);
    }
    let front = classes[HEAD].next;
    let first = insert_before(&mut classes, front, BTreeSet::from([start]));
    class_of[start] = first;

    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let head = classes[HEAD].next;
        let members = &classes[head].members;
        let pivot = match rng.as_mut() {
            None => *members.iter().next().unwrap(),
            Some(rng) => *members.iter().nth(rng.gen_range(0..members.len())).unwrap(),
        };
        classes[head].members.remove(&pivot);
        if classes[head].members.is_empty() {
            unlink(&mut classes, head);
        }
        visited[pivot] = true;
        order.push(pivot);

        for &w in g.neighbors(pivot) {
            if visited[w] {
                continue;
            }
            let c = class_of[w];
            if classes[c].split_step != step {
                let nc = insert_before(&mut classes, c, BTreeSet::new());
                classes[c].split_step = step;
                classes[c].split_into = nc;
            }
            let nc = classes[c].split_into;
            classes[c].members.remove(&w);
            classes[nc].members.insert(w);
            class_of[w] = nc;
            if classes[c].members.is_empty() {
                unlink(&mut classes, c);
            }
        }
    }
    Ok(ModuleSequence::new(order))
}
