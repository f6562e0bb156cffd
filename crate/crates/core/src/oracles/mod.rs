//! Exponential-time class membership oracles for small graphs.
//!
//! Every oracle is exact and guarded: inputs above its size limit are
//! rejected with [`Error::SizeGuard`](crate::Error::SizeGuard). A negative
//! verdict usually comes with a witness vertex set; since all classes here
//! are hereditary, the subgraph induced by a witness is itself a non-member.

mod cograph;
mod coloring;
mod induced;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::recognize::{brute_force_recognize, brute_force_recognize_independent};
use crate::{guard, Error, Graph, NamedGraph, Result};
pub use cograph::{cograph_module_sequence, find_induced_p4, is_cograph};
pub use coloring::{chromatic_number, clique_cover_number, clique_number, imperfect_subgraph, independence_number};
pub use induced::{contains_induced, contains_sun, cycle_6_with_few_chords, has_hole};
pub(crate) use induced::{find_induced, find_p4};

/// Graph classes with an exact oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassId {
    #[serde(rename = "cograph")]
    Cograph,
    #[serde(rename = "trivially-perfect")]
    TriviallyPerfect,
    #[serde(rename = "co-2C4-free")]
    Co2C4Free,
    #[serde(rename = "P4-free")]
    P4Free,
    #[serde(rename = "C4-free")]
    C4Free,
    #[serde(rename = "hhd-free")]
    HhdFree,
    #[serde(rename = "hhds-free")]
    HhdsFree,
    /// (house, hole, domino, gem)-free, i.e. distance hereditary.
    #[serde(rename = "hhdg-free")]
    HhdgFree,
    #[serde(rename = "weakly-chordal")]
    WeaklyChordal,
    #[serde(rename = "perfect")]
    Perfect,
    /// Every cycle on at least six vertices has at least two chords.
    #[serde(rename = "(6,2)-chordal")]
    Chordal62,
    #[serde(rename = "hole-free")]
    HoleFree,
    #[serde(rename = "sun-free")]
    SunFree,
    #[serde(rename = "domino-free")]
    DominoFree,
    #[serde(rename = "bipartite")]
    Bipartite,
    /// Decided by exhaustive elimination, not by the tree-driven recognizer.
    #[serde(rename = "module-composed")]
    ModuleComposed,
    #[serde(rename = "independent-module-composed")]
    IndependentModuleComposed,
}

impl ClassId {
    pub const ALL: [ClassId; 17] = [
        ClassId::Cograph,
        ClassId::TriviallyPerfect,
        ClassId::Co2C4Free,
        ClassId::P4Free,
        ClassId::C4Free,
        ClassId::HhdFree,
        ClassId::HhdsFree,
        ClassId::HhdgFree,
        ClassId::WeaklyChordal,
        ClassId::Perfect,
        ClassId::Chordal62,
        ClassId::HoleFree,
        ClassId::SunFree,
        ClassId::DominoFree,
        ClassId::Bipartite,
        ClassId::ModuleComposed,
        ClassId::IndependentModuleComposed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Cograph => "cograph",
            ClassId::TriviallyPerfect => "trivially-perfect",
            ClassId::Co2C4Free => "co-2C4-free",
            ClassId::P4Free => "P4-free",
            ClassId::C4Free => "C4-free",
            ClassId::HhdFree => "hhd-free",
            ClassId::HhdsFree => "hhds-free",
            ClassId::HhdgFree => "hhdg-free",
            ClassId::WeaklyChordal => "weakly-chordal",
            ClassId::Perfect => "perfect",
            ClassId::Chordal62 => "(6,2)-chordal",
            ClassId::HoleFree => "hole-free",
            ClassId::SunFree => "sun-free",
            ClassId::DominoFree => "domino-free",
            ClassId::Bipartite => "bipartite",
            ClassId::ModuleComposed => "module-composed",
            ClassId::IndependentModuleComposed => "independent-module-composed",
        }
    }

    /// Whether the oracle accepts graphs on `n` vertices.
    pub fn admits(self, n: usize) -> bool {
        self.max_vertices().is_none_or(|max| n <= max)
    }

    /// Largest vertex count the oracle accepts, `None` if unbounded.
    pub fn max_vertices(self) -> Option<usize> {
        match self {
            ClassId::Cograph | ClassId::Bipartite => None,
            ClassId::Perfect => Some(coloring::MAX_PERFECT),
            ClassId::ModuleComposed | ClassId::IndependentModuleComposed => Some(12),
            _ => Some(induced::MAX_HOST),
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let alias = match key.as_str() {
            "distance-hereditary" | "dh" => Some(ClassId::HhdgFree),
            "mc" => Some(ClassId::ModuleComposed),
            "imc" => Some(ClassId::IndependentModuleComposed),
            _ => None,
        };
        alias
            .or_else(|| ClassId::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(&key)))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown class `{s}`")))
    }
}

/// Verdict of one oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub member: bool,
    /// Vertex set certifying non-membership, when the oracle produces one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

impl Membership {
    fn from_witness(witness: Option<Vec<usize>>) -> Self {
        Membership { member: witness.is_none(), witness }
    }

    fn plain(member: bool) -> Self {
        Membership { member, witness: None }
    }
}

/// Verdicts of several oracles on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub n: usize,
    pub m: usize,
    pub verdicts: Vec<ClassVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub class: ClassId,
    #[serde(flatten)]
    pub membership: Membership,
}

impl ClassReport {
    pub fn get(&self, class: ClassId) -> Option<&Membership> {
        self.verdicts.iter().find(|v| v.class == class).map(|v| &v.membership)
    }
}

/// Runs each oracle in `classes` on `g`.
pub fn classify(g: &Graph, classes: &[ClassId]) -> Result<ClassReport> {
    let verdicts = classes
        .iter()
        .map(|&class| Ok(ClassVerdict { class, membership: class_membership(g, class)? }))
        .collect::<Result<_>>()?;
    Ok(ClassReport { n: g.n(), m: g.m(), verdicts })
}

/// Exact membership of `g` in `class`.
pub fn class_membership(g: &Graph, class: ClassId) -> Result<Membership> {
    if let Some(max) = class.max_vertices() {
        guard(class.name(), g.n(), max)?;
    }
    let forbidden = |patterns: &[NamedGraph]| -> Membership {
        let masks = g.masks();
        let witness = patterns.iter().find_map(|p| find_induced(&masks, &p.build().expect("valid pattern").masks()));
        Membership::from_witness(witness.map(|set| crate::graph::bits(set).collect()))
    };
    let hole = |h: Graph| induced::find_hole(&h.masks()).map(|set| crate::graph::bits(set).collect::<Vec<_>>());
    use NamedGraph::*;
    Ok(match class {
        ClassId::Cograph => {
            if is_cograph(g) {
                Membership::plain(true)
            } else {
                let witness = (g.n() <= 64).then(|| find_p4(&g.masks()).expect("non-cograph has a P4").to_vec());
                Membership { member: false, witness: witness.map(sorted) }
            }
        }
        ClassId::TriviallyPerfect => forbidden(&[Cycle(4), Path(4)]),
        ClassId::Co2C4Free => forbidden(&[CoTwoC4]),
        ClassId::P4Free => forbidden(&[Path(4)]),
        ClassId::C4Free => forbidden(&[Cycle(4)]),
        ClassId::DominoFree => forbidden(&[Domino]),
        ClassId::HhdFree | ClassId::HhdsFree | ClassId::HhdgFree => {
            let mut found = forbidden(&[House, Domino]);
            if found.member {
                found = Membership::from_witness(hole(g.clone()));
            }
            if found.member && class == ClassId::HhdsFree {
                found = Membership::from_witness(contains_sun(g)?);
            }
            if found.member && class == ClassId::HhdgFree {
                found = forbidden(&[Gem]);
            }
            found
        }
        ClassId::HoleFree => Membership::from_witness(hole(g.clone())),
        ClassId::SunFree => Membership::from_witness(contains_sun(g)?),
        ClassId::WeaklyChordal => Membership::from_witness(hole(g.clone()).or_else(|| hole(g.complement()))),
        ClassId::Chordal62 => Membership::from_witness(cycle_6_with_few_chords(g)?),
        ClassId::Perfect => Membership::from_witness(imperfect_subgraph(g)?),
        ClassId::Bipartite => Membership::from_witness(odd_cycle(g)),
        ClassId::ModuleComposed => Membership::plain(brute_force_recognize(g)?.is_yes()),
        ClassId::IndependentModuleComposed => Membership::plain(brute_force_recognize_independent(g)?.is_yes()),
    })
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Vertex set of an odd cycle, if any.
fn odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if depth[w] == depth[u] {
                    // Climb both tree paths to their common ancestor.
                    let (mut a, mut b) = (u, w);
                    let mut cycle = vec![a, b];
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        cycle.push(a);
                        if a != b {
                            cycle.push(b);
                        }
                    }
                    return Some(sorted(cycle));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use NamedGraph::*;

    fn member(named: NamedGraph, class: ClassId) -> bool {
        class_membership(&named.build().unwrap(), class).unwrap().member
    }

    #[test]
    fn examples() {
        assert!(!member(Cycle(5), ClassId::Perfect));
        assert!(!member(Gem, ClassId::HhdgFree));
        assert!(member(Cycle(4), ClassId::WeaklyChordal));
        assert!(member(Star(3), ClassId::TriviallyPerfect));
        assert!(member(Domino, ClassId::Bipartite));
        assert!(!member(Domino, ClassId::Chordal62));
        assert!(!member(House, ClassId::WeaklyChordal) || member(House, ClassId::HoleFree));
        assert!(!member(CoCycle(6), ClassId::WeaklyChordal));
        assert!(member(CoCycle(6), ClassId::HoleFree));
        assert!(!member(CoTwoC4, ClassId::Co2C4Free));
        assert!(member(CoTwoC4, ClassId::Cograph));
        assert!(!member(CompleteSun(3), ClassId::HhdsFree));
        assert!(member(CompleteSun(3), ClassId::HhdFree));
    }

    #[test]
    fn names_round_trip() {
        for c in ClassId::ALL {
            assert_eq!(c.name().parse::<ClassId>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.name()));
        }
        assert_eq!("distance-hereditary".parse::<ClassId>().unwrap(), ClassId::HhdgFree);
        assert!("nope".parse::<ClassId>().is_err());
    }

    #[test]
    fn guards_apply() {
        assert!(class_membership(&Graph::empty(10), ClassId::Perfect).is_err());
        assert!(class_membership(&Graph::empty(15), ClassId::HoleFree).is_err());
        assert!(class_membership(&Graph::empty(200), ClassId::Cograph).unwrap().member);
        assert!(class_membership(&Graph::empty(200), ClassId::Bipartite).unwrap().member);
    }

    #[test]
    fn odd_cycle_witness() {
        let g = Cycle(7).build().unwrap().disjoint_union(&Cycle(3).build().unwrap());
        let w = class_membership(&g, ClassId::Bipartite).unwrap().witness.unwrap();
        assert_eq!(w.len() % 2, 1);
        let sub = g.induced_subgraph(&w).unwrap().graph;
        assert!(crate::is_bipartite(&sub).is_none());
    }

    #[test]
    fn report_serializes() {
        let r = classify(&Cycle(5).build().unwrap(), &[ClassId::Perfect, ClassId::Cograph]).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"class\":\"perfect\""));
        assert_eq!(serde_json::from_str::<ClassReport>(&json).unwrap(), r);
        assert!(!r.get(ClassId::Cograph).unwrap().member);
    }
}
