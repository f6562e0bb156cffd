//! Exact colouring and clique parameters by subset dynamic programming.

use crate::graph::{bits, low_mask};
use crate::{guard, Graph, Result};

/// Size limit for the numeric parameters.
pub const MAX_PARAMS: usize = 12;
/// Size limit for the perfectness oracle.
pub const MAX_PERFECT: usize = 9;

/// Chromatic number.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    guard("chromatic_number", g.n(), MAX_PARAMS)?;
    let masks = g.masks();
    Ok(chromatic_table(&masks)[low_mask(g.n()) as usize] as usize)
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> Result<usize> {
    guard("clique_number", g.n(), MAX_PARAMS)?;
    Ok(clique_table(&g.masks())[low_mask(g.n()) as usize] as usize)
}

/// Size of a largest independent set.
pub fn independence_number(g: &Graph) -> Result<usize> {
    guard("independence_number", g.n(), MAX_PARAMS)?;
    Ok(clique_table(&complement_masks(&g.masks()))[low_mask(g.n()) as usize] as usize)
}

/// Minimum number of cliques covering the vertex set.
pub fn clique_cover_number(g: &Graph) -> Result<usize> {
    guard("clique_cover_number", g.n(), MAX_PARAMS)?;
    Ok(chromatic_table(&complement_masks(&g.masks()))[low_mask(g.n()) as usize] as usize)
}

/// A smallest vertex set whose induced subgraph has chromatic number
/// different from its clique number, if any.
pub fn imperfect_subgraph(g: &Graph) -> Result<Option<Vec<usize>>> {
    guard("perfectness", g.n(), MAX_PERFECT)?;
    let masks = g.masks();
    let chi = chromatic_table(&masks);
    let omega = clique_table(&masks);
    let witness = (0..chi.len()).filter(|&s| chi[s] != omega[s]).min_by_key(|&s| ((s as u64).count_ones(), s));
    Ok(witness.map(|s| bits(s as u64).collect()))
}

pub(crate) fn complement_masks(masks: &[u64]) -> Vec<u64> {
    let all = low_mask(masks.len());
    masks.iter().enumerate().map(|(v, m)| !m & all & !(1 << v)).collect()
}

/// `table[S]` = clique number of `G[S]`.
fn clique_table(masks: &[u64]) -> Vec<u8> {
    let size = 1usize << masks.len();
    let mut table = vec![0u8; size];
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let without = s & (s - 1);
        let with = 1 + table[s & masks[v] as usize];
        table[s] = table[without].max(with);
    }
    table
}

/// `table[S]` = chromatic number of `G[S]`.
fn chromatic_table(masks: &[u64]) -> Vec<u8> {
    let size = 1usize << masks.len();
    let mut independent = vec![false; size];
    independent[0] = true;
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && masks[v] as usize & rest == 0;
    }
    let mut table = vec![0u8; size];
    for s in 1..size {
        // Colour classes containing the lowest vertex of S.
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut best = u8::MAX;
        let mut sub = rest;
        loop {
            let class = sub | low;
            if independent[class] {
                best = best.min(1 + table[s ^ class]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        table[s] = best;
    }
    table
}
