//! Exhaustive induced-subgraph searches on adjacency bitmasks.

use crate::graph::{bits, low_mask};
use crate::{guard, Graph, NamedGraph, Result};

/// Maximum host size for the exhaustive searches.
pub const MAX_HOST: usize = 14;
/// Maximum pattern size accepted by [`contains_induced`].
pub const MAX_PATTERN: usize = 10;

/// A vertex set of `g` inducing a copy of `pattern`, if any.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>> {
    guard("contains_induced pattern", pattern.n(), MAX_PATTERN)?;
    guard("contains_induced host", g.n(), MAX_HOST)?;
    Ok(find_induced(&g.masks(), &pattern.masks()).map(|set| bits(set).collect()))
}

/// An induced cycle on at least five vertices, if any.
pub fn has_hole(g: &Graph) -> Result<Option<Vec<usize>>> {
    guard("has_hole", g.n(), MAX_HOST)?;
    Ok(find_hole(&g.masks()).map(|set| bits(set).collect()))
}

/// An induced complete k-sun (`k >= 3`), if any. Every sun contains a
/// complete sun, so this decides sun-freeness.
pub fn contains_sun(g: &Graph) -> Result<Option<Vec<usize>>> {
    guard("contains_sun", g.n(), MAX_HOST)?;
    Ok(find_complete_sun(&g.masks()).map(|set| bits(set).collect()))
}

/// A cycle on at least six vertices with fewer than two chords, if any.
/// Returned as the vertex set of the cycle.
pub fn cycle_6_with_few_chords(g: &Graph) -> Result<Option<Vec<usize>>> {
    guard("(6,2)-chordality", g.n(), MAX_HOST)?;
    Ok(find_sparse_long_cycle(&g.masks()).map(|set| bits(set).collect()))
}

/// Iterates over all `k`-subsets of `0..n` as bitmasks, in increasing order.
pub(crate) fn subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64.checked_shl(n as u32).unwrap_or(0);
    let mut next = if k == 0 {
        Some(0)
    } else if k > n {
        None
    } else {
        Some(low_mask(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (limit == 0 || nxt < limit).then_some(nxt)
        };
        Some(cur)
    })
}

/// Vertex set of some induced copy of the pattern.
pub(crate) fn find_induced(host: &[u64], pattern: &[u64]) -> Option<u64> {
    let (n, k) = (host.len(), pattern.len());
    if k > n {
        return None;
    }
    let pattern_all = low_mask(k);
    let pattern_edges: u32 = pattern.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
    let mut pattern_degrees: Vec<u32> = pattern.iter().map(|m| (m & pattern_all).count_ones()).collect();
    pattern_degrees.sort_unstable();

    // Map pattern vertices in BFS order so that each has a mapped neighbour
    // early, which prunes hard.
    let order = connectivity_order(pattern);
    let mut degrees = Vec::with_capacity(k);
    subsets(n, k).find(|&set| {
        degrees.clear();
        degrees.extend(bits(set).map(|v| (host[v] & set).count_ones()));
        if degrees.iter().sum::<u32>() / 2 != pattern_edges {
            return false;
        }
        degrees.sort_unstable();
        degrees == pattern_degrees && embeds(host, set, pattern, &order)
    })
}

fn connectivity_order(pattern: &[u64]) -> Vec<usize> {
    let k = pattern.len();
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    while order.len() < k {
        let start = (0..k).filter(|&v| placed >> v & 1 == 0).max_by_key(|&v| pattern[v].count_ones()).unwrap();
        placed |= 1 << start;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            for w in bits(pattern[order[i]] & !placed) {
                placed |= 1 << w;
                order.push(w);
            }
            i += 1;
        }
    }
    order
}

/// Whether the pattern maps bijectively onto `set` preserving adjacency
/// and non-adjacency.
fn embeds(host: &[u64], set: u64, pattern: &[u64], order: &[usize]) -> bool {
    let mut image = vec![usize::MAX; pattern.len()];
    extend(host, set, pattern, order, 0, 0, &mut image)
}

fn extend(
    host: &[u64],
    set: u64,
    pattern: &[u64],
    order: &[usize],
    depth: usize,
    used: u64,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    'candidates: for h in bits(set & !used) {
        for &q in &order[..depth] {
            let want = pattern[p] >> q & 1 == 1;
            let have = host[h] >> image[q] & 1 == 1;
            if want != have {
                continue 'candidates;
            }
        }
        image[p] = h;
        if extend(host, set, pattern, order, depth + 1, used | 1 << h, image) {
            return true;
        }
    }
    image[p] = usize::MAX;
    false
}

fn is_connected_within(masks: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let mut reached = set & set.wrapping_neg();
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= masks[v] & set;
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached == set
}

/// Whether `set` induces a single cycle.
pub(crate) fn induces_cycle(masks: &[u64], set: u64) -> bool {
    set.count_ones() >= 3 && bits(set).all(|v| (masks[v] & set).count_ones() == 2) && is_connected_within(masks, set)
}

pub(crate) fn find_hole(masks: &[u64]) -> Option<u64> {
    let n = masks.len();
    (5..=n).find_map(|k| subsets(n, k).find(|&set| induces_cycle(masks, set)))
}

pub(crate) fn find_complete_sun(masks: &[u64]) -> Option<u64> {
    let n = masks.len();
    (3..=n / 2).find_map(|k| {
        let sun = NamedGraph::CompleteSun(k).build().expect("k >= 3").masks();
        find_induced(masks, &sun)
    })
}

/// A vertex set of size >= 6 whose induced graph is a Hamiltonian cycle plus
/// at most one extra edge.
pub(crate) fn find_sparse_long_cycle(masks: &[u64]) -> Option<u64> {
    let n = masks.len();
    (6..=n).find_map(|k| {
        subsets(n, k).find(|&set| {
            let edges: u32 = bits(set).map(|v| (masks[v] & set).count_ones()).sum::<u32>() / 2;
            if edges == k as u32 {
                return induces_cycle(masks, set);
            }
            if edges != k as u32 + 1 {
                return false;
            }
            // Drop each edge in turn and test for a cycle.
            let mut local = masks.to_vec();
            bits(set).any(|u| {
                bits(masks[u] & set).filter(|&v| v > u).any(|v| {
                    local[u] &= !(1 << v);
                    local[v] &= !(1 << u);
                    let cyc = induces_cycle(&local, set);
                    local[u] |= 1 << v;
                    local[v] |= 1 << u;
                    cyc
                })
            })
        })
    })
}

/// An induced P4 as `[a, b, c, d]` along the path, if any.
pub(crate) fn find_p4(masks: &[u64]) -> Option<[usize; 4]> {
    let n = masks.len();
    for b in 0..n {
        for c in bits(masks[b] & !low_mask(b + 1)) {
            let left = masks[b] & !masks[c] & !(1 << c);
            let right = masks[c] & !masks[b] & !(1 << b);
            if left == 0 || right == 0 {
                continue;
            }
            for a in bits(left) {
                if let Some(d) = bits(right & !masks[a]).next() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}
