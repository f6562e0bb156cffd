//! Module-sequences and their verifiers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::is_permutation;
use crate::{Error, Graph, Result};

/// Vertex insertion order; `order()[0]` is inserted first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModuleSequence(Vec<usize>);

impl ModuleSequence {
    pub fn new(order: Vec<usize>) -> Self {
        ModuleSequence(order)
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation for a disjoint union: `other` is shifted by `shift`.
    pub fn concat_shifted(&self, other: &ModuleSequence, shift: usize) -> ModuleSequence {
        ModuleSequence(self.0.iter().copied().chain(other.0.iter().map(|&v| v + shift)).collect())
    }

    /// Parses whitespace-separated vertex indices.
    pub fn parse(text: &str) -> Result<ModuleSequence> {
        text.split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse { line: 1, message: format!("bad vertex index `{tok}`") })
            })
            .collect::<Result<Vec<_>>>()
            .map(ModuleSequence)
    }
}

impl From<Vec<usize>> for ModuleSequence {
    fn from(order: Vec<usize>) -> Self {
        ModuleSequence(order)
    }
}

impl fmt::Display for ModuleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks that every inserted vertex sees a module of the graph built so far.
pub fn verify_module_sequence(g: &Graph, seq: &ModuleSequence) -> Result<bool> {
    verify(g, seq, false)
}

/// Like [`verify_module_sequence`], additionally requiring every inserted
/// neighbourhood to be an independent set.
pub fn verify_independent_module_sequence(g: &Graph, seq: &ModuleSequence) -> Result<bool> {
    verify(g, seq, true)
}

/// Position of the first insertion whose neighbourhood fails the check.
pub fn first_violation(g: &Graph, seq: &ModuleSequence, independent: bool) -> Result<Option<usize>> {
    let n = g.n();
    if !is_permutation(seq.order(), n) {
        return Err(Error::NotPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    // `stamp[y] == i` marks y as a member of the current back-neighbourhood;
    // `hits[y]` counts its neighbours inside it.
    let mut stamp = vec![usize::MAX; n];
    let mut hits = vec![0usize; n];
    let mut hit_stamp = vec![usize::MAX; n];
    let mut touched = Vec::new();
    for (i, &v) in seq.order().iter().enumerate() {
        let back: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] < i).collect();
        for &x in &back {
            stamp[x] = i;
        }
        touched.clear();
        let mut ok = true;
        for &x in &back {
            for &y in g.neighbors(x) {
                if pos[y] >= i {
                    continue;
                }
                if stamp[y] == i {
                    if independent {
                        ok = false;
                    }
                    continue;
                }
                if hit_stamp[y] != i {
                    hit_stamp[y] = i;
                    hits[y] = 0;
                    touched.push(y);
                }
                hits[y] += 1;
            }
        }
        if !ok || touched.iter().any(|&y| hits[y] != back.len()) {
            return Ok(Some(i));
        }
        pos[v] = i;
    }
    Ok(None)
}

fn verify(g: &Graph, seq: &ModuleSequence, independent: bool) -> Result<bool> {
    Ok(first_violation(g, seq, independent)?.is_none())
}
