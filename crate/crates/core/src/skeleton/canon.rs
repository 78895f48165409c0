//! Canonical certificates for metric graphs: colour refinement, then
//! individualization of the vertices of the first non-singleton class,
//! keeping the least adjacency encoding over all leaves of the search.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

use super::graph::MetricGraph;

pub const MAX_CERTIFICATE_VERTICES: usize = 16;

/// Multiset of edge lengths (or just a count) between each ordered pair.
type Cell = Vec<Q>;

struct Adjacency {
    n: usize,
    cells: Vec<Vec<Cell>>,
}

impl Adjacency {
    fn new(g: &MetricGraph, with_lengths: bool) -> Self {
        let n = g.n_vertices;
        let mut cells = vec![vec![Vec::new(); n]; n];
        for e in &g.edges {
            let l = if with_lengths {
                e.length.clone()
            } else {
                Q::from_integer(1.into())
            };
            cells[e.a][e.b].push(l.clone());
            if e.a != e.b {
                cells[e.b][e.a].push(l);
            }
        }
        for row in &mut cells {
            for c in row.iter_mut() {
                c.sort();
            }
        }
        Self { n, cells }
    }

    /// Refines `colors` to the coarsest equitable partition; colours are
    /// ranks of invariant signatures, so the result is label-independent.
    fn refine(&self, colors: &mut Vec<usize>) {
        loop {
            let sigs: Vec<(usize, Vec<(usize, &Cell)>)> = (0..self.n)
                .map(|v| {
                    let mut nb: Vec<(usize, &Cell)> = (0..self.n)
                        .filter(|&u| !self.cells[v][u].is_empty())
                        .map(|u| (colors[u], &self.cells[v][u]))
                        .collect();
                    nb.sort();
                    (colors[v], nb)
                })
                .collect();
            let mut distinct: Vec<&(usize, Vec<(usize, &Cell)>)> = sigs.iter().collect();
            distinct.sort();
            distinct.dedup();
            let next: Vec<usize> = sigs
                .iter()
                .map(|s| distinct.binary_search(&s).expect("present"))
                .collect();
            let done = distinct.len()
                == colors
                    .iter()
                    .collect::<std::collections::BTreeSet<_>>()
                    .len();
            *colors = next;
            if done {
                return;
            }
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<&Cell> {
        let mut out = Vec::with_capacity(self.n * (self.n + 1) / 2);
        for i in 0..self.n {
            for j in i..self.n {
                out.push(&self.cells[order[i]][order[j]]);
            }
        }
        out
    }

    fn search<'a>(&'a self, colors: Vec<usize>, best: &mut Option<Vec<&'a Cell>>) {
        let mut colors = colors;
        self.refine(&mut colors);
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        match classes.values().find(|c| c.len() > 1) {
            None => {
                let mut order: Vec<usize> = (0..self.n).collect();
                order.sort_by_key(|&v| colors[v]);
                let code = self.encode(&order);
                if best.as_ref().is_none_or(|b| code < *b) {
                    *best = Some(code);
                }
            }
            Some(class) => {
                for &v in class {
                    let split: Vec<usize> = colors
                        .iter()
                        .enumerate()
                        .map(|(u, &c)| 2 * c + (u != v && colors[u] == colors[v]) as usize)
                        .collect();
                    self.search(split, best);
                }
            }
        }
    }
}

/// A string equal for two graphs exactly when they are isomorphic
/// (respecting edge lengths when `with_lengths`).
pub fn canonical_certificate(g: &MetricGraph, with_lengths: bool) -> Result<String> {
    if g.n_vertices > MAX_CERTIFICATE_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "certificates are limited to {MAX_CERTIFICATE_VERTICES} vertices, got {}",
            g.n_vertices
        )));
    }
    let adj = Adjacency::new(g, with_lengths);
    let mut best = None;
    adj.search(vec![0; adj.n], &mut best);
    let code = best.unwrap_or_default();
    let body: Vec<String> = code
        .iter()
        .map(|c| {
            if with_lengths {
                c.iter().map(fmt_q).collect::<Vec<_>>().join("+")
            } else {
                c.len().to_string()
            }
        })
        .collect();
    Ok(format!("{}:{}", g.n_vertices, body.join(",")))
}

#[cfg(test)]
mod tests {
    use super::super::graph::named::*;
    use super::*;
    use crate::rational::q;

    fn relabel(g: &MetricGraph, perm: &[usize]) -> MetricGraph {
        let e: Vec<(usize, usize, Q)> = g
            .edges
            .iter()
            .rev()
            .map(|e| (perm[e.a], perm[e.b], e.length.clone()))
            .collect();
        MetricGraph::new(g.n_vertices, &e).unwrap()
    }

    #[test]
    fn isomorphism_classes() {
        let cert = |g: &MetricGraph| canonical_certificate(g, false).unwrap();
        assert_eq!(cert(&theta()), cert(&relabel(&theta(), &[1, 0])));
        assert_ne!(cert(&theta()), cert(&dumbbell()));
        let mut certs: Vec<String> = genus_three().iter().map(cert).collect();
        certs.sort();
        certs.dedup();
        assert_eq!(certs.len(), 5);
        let k = k33();
        assert_eq!(cert(&k), cert(&relabel(&k, &[3, 0, 4, 1, 5, 2])));
    }

    #[test]
    fn lengths_matter_when_asked() {
        let a = MetricGraph::new(2, &[(0, 0, q(1)), (0, 1, q(2)), (1, 1, q(3))]).unwrap();
        let b = MetricGraph::new(2, &[(0, 0, q(3)), (0, 1, q(2)), (1, 1, q(1))]).unwrap();
        let c = MetricGraph::new(2, &[(0, 0, q(2)), (0, 1, q(1)), (1, 1, q(3))]).unwrap();
        let cert = |g: &MetricGraph| canonical_certificate(g, true).unwrap();
        assert_eq!(cert(&a), cert(&b));
        assert_ne!(cert(&a), cert(&c));
        assert_eq!(
            canonical_certificate(&a, false).unwrap(),
            canonical_certificate(&c, false).unwrap()
        );
    }

    #[test]
    fn size_limit() {
        let e: Vec<(usize, usize)> = (0..17).map(|i| (i, (i + 1) % 17)).collect();
        assert!(matches!(
            canonical_certificate(&MetricGraph::combinatorial(17, &e), false),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
