//! Small graphs that serve as forbidden patterns and test fixtures.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Graph, Result};

/// A named graph, possibly parameterized by a size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// Cycle on `len >= 3` vertices.
    Cycle(usize),
    /// Complement of a cycle on `len >= 3` vertices.
    CoCycle(usize),
    /// Path on `len >= 1` vertices.
    Path(usize),
    /// Complete graph on `size >= 1` vertices.
    Complete(usize),
    /// A 4-cycle with a triangle on top of one side (the complement of P5).
    House,
    /// A P4 plus a vertex adjacent to all four.
    Gem,
    /// Two squares sharing an edge (a 2x3 grid).
    Domino,
    /// Complement of K3,3 minus an edge: two triangles linked by one edge.
    CoK33MinusEdge,
    /// k-sun whose inner cycle `u_0 .. u_{k-1}` is triangulated as a fan
    /// from `u_0`. Coincides with the complete sun for `k = 3`.
    Sun(usize),
    /// k-sun whose inner set is a clique.
    CompleteSun(usize),
    /// Complement of two disjoint 4-cycles.
    CoTwoC4,
    /// Star K1,leaves with the center at vertex 0.
    Star(usize),
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph> {
        use NamedGraph::*;
        let invalid = |what: &str| Err(Error::InvalidParameter(format!("{what} in {self}")));
        match self {
            Cycle(len) => {
                if len < 3 {
                    return invalid("cycle needs at least 3 vertices");
                }
                Graph::from_edges(len, (0..len).map(|i| (i, (i + 1) % len)))
            }
            CoCycle(len) => {
                if len < 3 {
                    return invalid("cycle needs at least 3 vertices");
                }
                Ok(Cycle(len).build()?.complement())
            }
            Path(len) => {
                if len < 1 {
                    return invalid("path needs at least 1 vertex");
                }
                Graph::from_edges(len, (1..len).map(|i| (i - 1, i)))
            }
            Complete(size) => {
                if size < 1 {
                    return invalid("clique needs at least 1 vertex");
                }
                Ok(Graph::empty(size).complement())
            }
            House => Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]),
            Gem => Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
            Domino => Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]),
            CoK33MinusEdge => Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3)]),
            Sun(k) | CompleteSun(k) => {
                if k < 3 {
                    return invalid("sun needs k >= 3");
                }
                // u_i = i, w_j = k + j; w_j sees u_j and u_{j+1}.
                let mut edges: Vec<(usize, usize)> = (0..k).flat_map(|j| [(k + j, j), (k + j, (j + 1) % k)]).collect();
                if matches!(self, CompleteSun(_)) {
                    edges.extend((0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))));
                } else {
                    edges.extend((0..k).map(|i| (i, (i + 1) % k)));
                    edges.extend((2..k - 1).map(|i| (0, i)));
                }
                Graph::from_edges(2 * k, edges)
            }
            CoTwoC4 => {
                let c4 = Cycle(4).build()?;
                Ok(c4.disjoint_union(&c4).complement())
            }
            Star(leaves) => Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            Cycle(k) => write!(f, "C{k}"),
            CoCycle(k) => write!(f, "co-C{k}"),
            Path(k) => write!(f, "P{k}"),
            Complete(k) => write!(f, "K{k}"),
            House => write!(f, "house"),
            Gem => write!(f, "gem"),
            Domino => write!(f, "domino"),
            CoK33MinusEdge => write!(f, "co-K33-e"),
            Sun(k) => write!(f, "sun{k}"),
            CompleteSun(k) => write!(f, "complete-sun{k}"),
            CoTwoC4 => write!(f, "co-2C4"),
            Star(k) => write!(f, "star{k}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts the names produced by `Display`, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        use NamedGraph::*;
        let lower = s.trim().to_ascii_lowercase();
        let num = |prefix: &str| -> Option<usize> { lower.strip_prefix(prefix)?.parse().ok() };
        let parsed = match lower.as_str() {
            "house" => Some(House),
            "gem" => Some(Gem),
            "domino" => Some(Domino),
            "co-k33-e" => Some(CoK33MinusEdge),
            "co-2c4" => Some(CoTwoC4),
            _ => num("co-c")
                .map(CoCycle)
                .or_else(|| num("complete-sun").map(CompleteSun))
                .or_else(|| num("sun").map(Sun))
                .or_else(|| num("star").map(Star))
                .or_else(|| num("c").map(Cycle))
                .or_else(|| num("p").map(Path))
                .or_else(|| num("k").map(Complete)),
        };
        parsed.ok_or_else(|| Error::InvalidParameter(format!("unknown graph name `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use NamedGraph::*;

    fn counts(g: NamedGraph) -> (usize, usize) {
        let g = g.build().unwrap();
        (g.n(), g.m())
    }

    #[test]
    fn vertex_and_edge_counts() {
        assert_eq!(counts(House), (5, 6));
        assert_eq!(counts(Gem), (5, 7));
        assert_eq!(counts(Domino), (6, 7));
        assert_eq!(counts(CoK33MinusEdge), (6, 7));
        assert_eq!(counts(CompleteSun(3)), (6, 9));
        assert_eq!(counts(CompleteSun(4)), (8, 14));
        assert_eq!(counts(Sun(4)), (8, 13));
        assert_eq!(counts(CoTwoC4), (8, 20));
        assert_eq!(counts(Star(3)), (4, 3));
        assert_eq!(counts(Path(1)), (1, 0));
    }

    #[test]
    fn cycles_are_2_regular() {
        for k in 3..10 {
            let g = Cycle(k).build().unwrap();
            assert_eq!(g.m(), k);
            assert!((0..k).all(|v| g.degree(v) == 2));
        }
    }

    #[test]
    fn house_is_complement_of_p5() {
        let house = House.build().unwrap();
        // co-P5 on path 0-1-2-3-4; the relabeling was found by hand.
        let co_p5 = Path(5).build().unwrap().complement();
        assert_eq!(co_p5.m(), 6);
        let degrees = |g: &Graph| {
            let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
            d.sort();
            d
        };
        assert_eq!(degrees(&house), degrees(&co_p5));
        assert_eq!(house.permute(&[0, 4, 1, 3, 2]).unwrap(), co_p5);
    }

    #[test]
    fn gem_is_p4_plus_apex() {
        let gem = Gem.build().unwrap();
        let p4 = Path(4).build().unwrap();
        assert_eq!(p4.join(&Complete(1).build().unwrap()), gem);
    }

    #[test]
    fn sun_three_is_complete() {
        assert_eq!(Sun(3).build().unwrap(), CompleteSun(3).build().unwrap());
    }

    #[test]
    fn sun_outer_vertices() {
        for k in 3..7 {
            for g in [Sun(k).build().unwrap(), CompleteSun(k).build().unwrap()] {
                for j in 0..k {
                    assert_eq!(g.neighbors(k + j), {
                        let mut v = vec![j, (j + 1) % k];
                        v.sort();
                        v
                    });
                }
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(Cycle(2).build(), Err(Error::InvalidParameter(_))));
        assert!(matches!(Sun(2).build(), Err(Error::InvalidParameter(_))));
        assert!(matches!(CompleteSun(2).build(), Err(Error::InvalidParameter(_))));
        assert!(matches!(Complete(0).build(), Err(Error::InvalidParameter(_))));
        assert!(matches!(Path(0).build(), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn names_round_trip() {
        for g in [
            Cycle(5),
            CoCycle(6),
            Path(4),
            Complete(3),
            House,
            Gem,
            Domino,
            CoK33MinusEdge,
            Sun(4),
            CompleteSun(5),
            CoTwoC4,
            Star(3),
        ] {
            assert_eq!(g.to_string().parse::<NamedGraph>().unwrap(), g);
        }
        assert!("blob".parse::<NamedGraph>().is_err());
    }
}
