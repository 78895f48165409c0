//! Metric graphs and the skeleton of an embedded tropical curve.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypersurface::TropicalComplex;
use crate::intersection::SpaceCurve;
use crate::rational::{rational_direction, serde_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricEdge {
    pub a: usize,
    pub b: usize,
    #[serde(with = "serde_q")]
    pub length: Q,
}

/// A finite multigraph with loops and positive rational edge lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricGraph {
    pub n_vertices: usize,
    pub edges: Vec<MetricEdge>,
}

/// `λ` with `p2 - p1 = λ·u` for a primitive integer vector `u`.
pub fn lattice_length(p1: &[Q], p2: &[Q]) -> Q {
    let d: Vec<Q> = p2.iter().zip(p1).map(|(a, b)| a - b).collect();
    rational_direction(&d).map_or_else(Q::zero, |(l, _)| l)
}

impl MetricGraph {
    pub fn new(n_vertices: usize, edges: &[(usize, usize, Q)]) -> Result<Self> {
        let mut g = Self {
            n_vertices,
            edges: Vec::new(),
        };
        for (a, b, l) in edges {
            if *a >= n_vertices || *b >= n_vertices {
                return Err(Error::domain(format!(
                    "edge ({a}, {b}) has an endpoint out of range"
                )));
            }
            if !l.is_positive() {
                return Err(Error::domain("edge lengths must be positive"));
            }
            g.edges.push(MetricEdge {
                a: *a,
                b: *b,
                length: l.clone(),
            });
        }
        Ok(g)
    }

    /// All edges of length one.
    pub fn combinatorial(n_vertices: usize, edges: &[(usize, usize)]) -> Self {
        let e: Vec<(usize, usize, Q)> = edges
            .iter()
            .map(|&(a, b)| (a, b, Q::from_integer(1.into())))
            .collect();
        Self::new(n_vertices, &e).expect("valid combinatorial graph")
    }

    pub fn is_empty(&self) -> bool {
        self.n_vertices == 0
    }

    /// Degrees with loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n_vertices];
        for e in &self.edges {
            d[e.a] += 1;
            d[e.b] += 1;
        }
        d
    }

    fn components_without(&self, removed: Option<usize>, skip_edge: Option<usize>) -> usize {
        let mut parent: Vec<usize> = (0..self.n_vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, e) in self.edges.iter().enumerate() {
            if Some(i) == skip_edge || Some(e.a) == removed || Some(e.b) == removed {
                continue;
            }
            let (x, y) = (find(&mut parent, e.a), find(&mut parent, e.b));
            parent[x] = y;
        }
        (0..self.n_vertices)
            .filter(|&v| Some(v) != removed && find(&mut parent, v) == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(None, None) <= 1
    }

    /// First Betti number `E - V + 1`; the empty graph has genus 0.
    pub fn genus(&self) -> Result<i64> {
        if self.is_empty() {
            return Ok(0);
        }
        if !self.is_connected() {
            return Err(Error::domain("genus is defined here for connected graphs"));
        }
        Ok(self.edges.len() as i64 - self.n_vertices as i64 + 1)
    }

    pub fn is_trivalent(&self) -> bool {
        self.degrees().iter().all(|&d| d == 3)
    }

    /// Indices of edges whose removal disconnects the graph.
    pub fn bridges(&self) -> Vec<usize> {
        let base = self.components_without(None, None);
        (0..self.edges.len())
            .filter(|&i| self.components_without(None, Some(i)) > base)
            .collect()
    }

    /// Some vertex whose removal leaves at least three components.
    pub fn is_sprawling(&self) -> bool {
        (0..self.n_vertices).any(|v| self.components_without(Some(v), None) >= 3)
    }

    pub fn total_length(&self) -> Q {
        self.edges.iter().map(|e| e.length.clone()).sum()
    }
}

/// Prunes leaves to a fixpoint, then smooths vertices of degree two.
/// Input is an embedded graph: vertex coordinates and bounded edges.
pub fn skeletonize_embedded(coords: &[Vec<Q>], edges: &[(usize, usize)]) -> MetricGraph {
    let mut es: Vec<Option<(usize, usize, Q)>> = edges
        .iter()
        .map(|&(a, b)| Some((a, b, lattice_length(&coords[a], &coords[b]))))
        .collect();
    let n = coords.len();
    let degree = |es: &[Option<(usize, usize, Q)>], v: usize| {
        es.iter()
            .flatten()
            .map(|(a, b, _)| (*a == v) as usize + (*b == v) as usize)
            .sum::<usize>()
    };
    loop {
        let leaf = (0..n).find(|&v| degree(&es, v) == 1);
        let Some(v) = leaf else { break };
        let i = es
            .iter()
            .position(|e| e.as_ref().is_some_and(|(a, b, _)| *a == v || *b == v))
            .expect("leaf edge");
        es[i] = None;
    }
    // Smooth a degree-2 vertex unless it carries a loop (a lone cycle).
    loop {
        let target = (0..n).find(|&v| {
            degree(&es, v) == 2 && !es.iter().flatten().any(|(a, b, _)| *a == v && *b == v)
        });
        let Some(v) = target else { break };
        let ix: Vec<usize> = (0..es.len())
            .filter(|&i| es[i].as_ref().is_some_and(|(a, b, _)| *a == v || *b == v))
            .collect();
        let (e1, e2) = (
            es[ix[0]].take().expect("edge"),
            es[ix[1]].take().expect("edge"),
        );
        let far = |(a, b, _): &(usize, usize, Q)| if *a == v { *b } else { *a };
        es.push(Some((far(&e1), far(&e2), e1.2 + e2.2)));
    }
    let live: Vec<usize> = (0..n).filter(|&v| degree(&es, v) > 0).collect();
    let index = |v: usize| live.binary_search(&v).expect("live vertex");
    MetricGraph {
        n_vertices: live.len(),
        edges: es
            .into_iter()
            .flatten()
            .map(|(a, b, length)| MetricEdge {
                a: index(a),
                b: index(b),
                length,
            })
            .collect(),
    }
}

/// The skeleton of a plane curve: rays dropped, then pruned and smoothed.
pub fn skeletonize(c: &TropicalComplex) -> MetricGraph {
    let coords: Vec<Vec<Q>> = c.vertices.iter().map(|v| v.coords.clone()).collect();
    let edges: Vec<(usize, usize)> = c.edges.iter().map(|e| (e.a, e.b)).collect();
    skeletonize_embedded(&coords, &edges)
}

/// The skeleton of a space curve.
pub fn skeletonize_space_curve(c: &SpaceCurve) -> MetricGraph {
    let coords: Vec<Vec<Q>> = c.vertices.iter().map(|v| v.coords.clone()).collect();
    let edges: Vec<(usize, usize)> = c.edges.iter().map(|e| (e.a, e.b)).collect();
    skeletonize_embedded(&coords, &edges)
}

/// Standard small graphs.
pub mod named {
    use super::MetricGraph;

    pub fn theta() -> MetricGraph {
        MetricGraph::combinatorial(2, &[(0, 1), (0, 1), (0, 1)])
    }

    pub fn dumbbell() -> MetricGraph {
        MetricGraph::combinatorial(2, &[(0, 0), (0, 1), (1, 1)])
    }

    pub fn k4() -> MetricGraph {
        MetricGraph::combinatorial(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    pub fn k33() -> MetricGraph {
        let e: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        MetricGraph::combinatorial(6, &e)
    }

    /// Loop at each of three vertices, each bridged to a central vertex.
    pub fn lollipop() -> MetricGraph {
        MetricGraph::combinatorial(4, &[(1, 1), (2, 2), (3, 3), (0, 1), (0, 2), (0, 3)])
    }

    /// The five connected trivalent graphs of genus three.
    pub fn genus_three() -> Vec<MetricGraph> {
        vec![
            k4(),
            MetricGraph::combinatorial(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]),
            MetricGraph::combinatorial(4, &[(0, 0), (0, 1), (1, 2), (1, 3), (2, 3), (2, 3)]),
            MetricGraph::combinatorial(4, &[(0, 0), (0, 1), (1, 2), (1, 2), (2, 3), (3, 3)]),
            lollipop(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use crate::rational::{q, qf};

    fn pts(v: &[(i64, i64)]) -> Vec<Vec<Q>> {
        v.iter().map(|&(x, y)| vec![q(x), q(y)]).collect()
    }

    #[test]
    fn lattice_lengths() {
        assert_eq!(lattice_length(&[q(0), q(0)], &[q(1), q(0)]), q(1));
        assert_eq!(lattice_length(&[q(0), q(0)], &[q(3), q(6)]), q(3));
        assert_eq!(
            lattice_length(&[q(0), q(0)], &[qf(1, 2), qf(1, 2)]),
            qf(1, 2)
        );
        assert_eq!(lattice_length(&[q(1), q(1)], &[q(1), q(1)]), q(0));
    }

    #[test]
    fn predicates() {
        let t = theta();
        assert_eq!(t.genus().unwrap(), 2);
        assert!(
            t.is_trivalent() && t.is_connected() && t.bridges().is_empty() && !t.is_sprawling()
        );
        let d = dumbbell();
        assert_eq!(d.genus().unwrap(), 2);
        assert!(d.is_trivalent());
        assert_eq!(d.bridges(), vec![1]);
        assert_eq!(k33().genus().unwrap(), 4);
        let l = lollipop();
        assert!(l.is_trivalent() && l.is_sprawling());
        assert_eq!(l.bridges().len(), 3);
        assert_eq!(genus_three().iter().filter(|g| g.is_sprawling()).count(), 1);
        assert!(genus_three()
            .iter()
            .all(|g| g.is_trivalent() && g.genus().unwrap() == 3));
        let split = MetricGraph::combinatorial(3, &[(0, 1)]);
        assert!(split.genus().is_err());
        assert!(MetricGraph::new(2, &[(0, 1, q(0))]).is_err());
    }

    #[test]
    fn two_loops_and_a_bridge() {
        // Loop of lengths 2,1,1,3,5 and loop of lengths 6,3,3,1,1,1 (shifted
        // right by 10), a bridge of length 1, and a pendant edge.
        let mut coords = pts(&[(0, 0), (2, 0), (3, 1), (3, 2), (0, 5)]);
        coords.extend(pts(&[(10, 0), (16, 0), (16, 3), (13, 3), (12, 3), (11, 2)]));
        coords.extend(pts(&[(-1, 6)]));
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 10),
            (10, 5),
            (2, 5),
            (4, 11),
        ];
        let g = skeletonize_embedded(&coords, &edges);
        assert_eq!(g.n_vertices, 2);
        let mut lengths: Vec<(bool, Q)> = g
            .edges
            .iter()
            .map(|e| (e.a == e.b, e.length.clone()))
            .collect();
        lengths.sort();
        assert_eq!(lengths, vec![(false, q(1)), (true, q(12)), (true, q(15))]);
        assert_eq!(g.genus().unwrap(), 2);
    }

    #[test]
    fn trees_and_cycles() {
        let g = skeletonize_embedded(&pts(&[(0, 0), (1, 0), (0, 1)]), &[(0, 1), (0, 2)]);
        assert!(g.is_empty());
        let g = skeletonize_embedded(&pts(&[(0, 0), (1, 0), (0, 1)]), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(g.n_vertices, 1);
        assert_eq!(
            g.edges,
            vec![MetricEdge {
                a: 0,
                b: 0,
                length: q(3)
            }]
        );
    }
}
