//! The colored multigraph.
//!
//! An `(n+1)`-colored graph is an `(n+1)`-regular multigraph without loops
//! whose edges are colored by `{0, …, n}` so that the edges at every vertex
//! carry pairwise distinct colors. Because every vertex sees each color
//! exactly once, the graph is stored as a dense table `adj[v][c]` holding
//! the `c`-neighbor of `v`.

use std::collections::VecDeque;

use crate::color::{Color, ColorSet, MAX_DIM};
use crate::error::{Error, GraphError, Result};

/// An edge `(u, v, c)` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: Color,
}

/// A properly edge-colored, `(n+1)`-regular multigraph without loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    dim: usize,
    adj: Vec<usize>,
}

impl std::fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ColoredGraph(dim {}, order {}; ", self.dim, self.order())?;
        for (k, e) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}:{}", e.u, e.v, e.color)?;
        }
        f.write_str(")")
    }
}

impl ColoredGraph {
    /// Builds a graph from an edge list, checking every invariant.
    ///
    /// The graph type itself accepts any dimension up to [`MAX_DIM`] so that
    /// residues with one or two colors can be represented; the file format
    /// requires `dim >= 2`.
    pub fn from_edges(
        dim: usize,
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize, Color)>,
    ) -> Result<Self, GraphError> {
        if dim > MAX_DIM {
            return Err(GraphError::UnsupportedDimension(dim));
        }
        if order % 2 != 0 {
            return Err(GraphError::OddVertexCount(order));
        }
        let k = dim + 1;
        let mut adj = vec![usize::MAX; order * k];
        for (u, v, c) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order });
                }
            }
            if c > dim {
                return Err(GraphError::ColorOutOfRange { color: c, dim });
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u, color: c });
            }
            for (x, y) in [(u, v), (v, u)] {
                let slot = &mut adj[x * k + c];
                if *slot != usize::MAX {
                    return Err(GraphError::DuplicateColor { vertex: x, color: c });
                }
                *slot = y;
            }
        }
        if let Some(i) = adj.iter().position(|&w| w == usize::MAX) {
            return Err(GraphError::MissingColor { vertex: i / k, color: i % k });
        }
        Ok(ColoredGraph { dim, adj })
    }

    /// Builds a graph from the neighbor table `table[v][c]`.
    pub fn from_adjacency(dim: usize, table: &[Vec<usize>]) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (v, row) in table.iter().enumerate() {
            if row.len() != dim + 1 {
                return Err(GraphError::MissingColor { vertex: v, color: row.len().min(dim) });
            }
            for (c, &w) in row.iter().enumerate() {
                if w >= table.len() {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: table.len() });
                }
                if table[w].get(c) != Some(&v) {
                    return Err(GraphError::DuplicateColor { vertex: w, color: c });
                }
                if v <= w {
                    edges.push((v, w, c));
                }
            }
        }
        Self::from_edges(dim, table.len(), edges)
    }

    /// Assembles a graph from a neighbor table already known to be valid.
    pub(crate) fn from_raw(dim: usize, adj: Vec<usize>) -> Self {
        let g = ColoredGraph { dim, adj };
        debug_assert!(g.check().is_ok(), "invalid raw graph: {:?}", g.check());
        g
    }

    fn check(&self) -> Result<(), GraphError> {
        let k = self.dim + 1;
        if self.order() % 2 != 0 {
            return Err(GraphError::OddVertexCount(self.order()));
        }
        for v in 0..self.order() {
            for c in 0..k {
                let w = self.adj[v * k + c];
                if w >= self.order() {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: self.order() });
                }
                if w == v {
                    return Err(GraphError::Loop { vertex: v, color: c });
                }
                if self.adj[w * k + c] != v {
                    return Err(GraphError::DuplicateColor { vertex: w, color: c });
                }
            }
        }
        Ok(())
    }

    /// The order-2 graph of dimension `dim`: two vertices joined by one edge
    /// of every color. It represents the `dim`-sphere.
    pub fn order_two(dim: usize) -> Self {
        Self::from_edges(dim, 2, (0..=dim).map(|c| (0, 1, c))).expect("order-two graph is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_colors(&self) -> usize {
        self.dim + 1
    }

    /// Number of vertices, `2p`.
    pub fn order(&self) -> usize {
        self.adj.len() / (self.dim + 1)
    }

    /// Half the order, `p`.
    pub fn half_order(&self) -> usize {
        self.order() / 2
    }

    pub fn all_colors(&self) -> ColorSet {
        ColorSet::full(self.dim)
    }

    /// The `c`-neighbor of `v`.
    #[inline]
    pub fn neighbor(&self, v: usize, c: Color) -> usize {
        self.adj[v * (self.dim + 1) + c]
    }

    /// Neighbors of `v` indexed by color.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        let k = self.dim + 1;
        &self.adj[v * k..(v + 1) * k]
    }

    /// All edges sorted by `(color, min endpoint, max endpoint)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..=self.dim).flat_map(move |c| {
            (0..self.order()).filter_map(move |u| {
                let v = self.neighbor(u, c);
                (u < v).then_some(Edge { u, v, color: c })
            })
        })
    }

    /// The `c`-colored edges as `(min, max)` pairs sorted by minimum endpoint.
    pub fn edges_of_color(&self, c: Color) -> Vec<(usize, usize)> {
        (0..self.order())
            .filter_map(|u| {
                let v = self.neighbor(u, c);
                (u < v).then_some((u, v))
            })
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize, c: Color) -> bool {
        u < self.order() && c <= self.dim && self.neighbor(u, c) == v
    }

    /// Colors of the edges joining `u` and `v`.
    pub fn colors_between(&self, u: usize, v: usize) -> ColorSet {
        (0..=self.dim).filter(|&c| self.neighbor(u, c) == v).collect()
    }

    /// Labels the connected components of the subgraph restricted to
    /// `colors`. Components are numbered in order of their smallest vertex.
    pub fn component_labels(&self, colors: ColorSet) -> (Vec<usize>, usize) {
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        let cs: Vec<Color> = colors.iter().filter(|&c| c <= self.dim).collect();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &c in &cs {
                    let w = self.neighbor(v, c);
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_labels(self.all_colors()).1 == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub(crate) fn require_dim(&self, expected: usize) -> Result<()> {
        if self.dim == expected {
            Ok(())
        } else {
            Err(Error::WrongDimension { expected, found: self.dim })
        }
    }

    /// Side (`false`/`true`) of each vertex in a proper 2-coloring, or `None`
    /// if the underlying multigraph has an odd cycle. Each component's
    /// smallest vertex gets side `false`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite_graph(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> ColoredGraph {
        assert_eq!(perm.len(), self.order());
        let k = self.dim + 1;
        let mut adj = vec![0; self.adj.len()];
        for v in 0..self.order() {
            for c in 0..k {
                adj[perm[v] * k + c] = perm[self.neighbor(v, c)];
            }
        }
        ColoredGraph::from_raw(self.dim, adj)
    }

    /// Renames colors: color `c` becomes `perm[c]`.
    pub fn permute_colors(&self, perm: &[Color]) -> ColoredGraph {
        assert_eq!(perm.len(), self.dim + 1);
        let k = self.dim + 1;
        let mut adj = vec![0; self.adj.len()];
        for v in 0..self.order() {
            for c in 0..k {
                adj[v * k + perm[c]] = self.neighbor(v, c);
            }
        }
        ColoredGraph::from_raw(self.dim, adj)
    }

    /// The subgraph induced on `vertices` keeping only the colors in
    /// `colors`, with colors renumbered `0..|colors|` in increasing order and
    /// vertices renumbered in the order given. The vertex set must be closed
    /// under the retained colors.
    pub fn restrict(&self, colors: ColorSet, vertices: &[usize]) -> Result<ColoredGraph> {
        if colors.is_empty() {
            return Err(Error::EmptyColorSet);
        }
        if !colors.is_subset(self.all_colors()) {
            return Err(Error::ColorSetOutOfRange(colors));
        }
        let cs: Vec<Color> = colors.iter().collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let k = cs.len();
        let mut adj = vec![0; vertices.len() * k];
        for (i, &v) in vertices.iter().enumerate() {
            for (j, &c) in cs.iter().enumerate() {
                let w = index[self.neighbor(v, c)];
                if w == usize::MAX {
                    return Err(Error::InvalidInput(format!(
                        "vertex set not closed under color {c}"
                    )));
                }
                adj[i * k + j] = w;
            }
        }
        Ok(ColoredGraph::from_raw(k - 1, adj))
    }
}

/// The unique bipartition of a connected bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Bipartition {
    /// The class containing vertex 0.
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Whether the connected graph `g` is bipartite, with the bipartition as
/// witness.
pub fn is_bipartite(g: &ColoredGraph) -> Result<Option<Bipartition>> {
    g.require_connected()?;
    Ok(g.two_coloring().map(|side| {
        let (mut first, mut second) = (Vec::new(), Vec::new());
        for (v, s) in side.into_iter().enumerate() {
            if s { second.push(v) } else { first.push(v) }
        }
        Bipartition { first, second }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_graph() {
        let g = ColoredGraph::order_two(4);
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges().count(), 5);
        assert_eq!(g.colors_between(0, 1), ColorSet::full(4));
        let b = is_bipartite(&g).unwrap().unwrap();
        assert_eq!(b.first, vec![0]);
        assert_eq!(b.second, vec![1]);
    }

    #[test]
    fn rejects_invalid_edge_lists() {
        assert_eq!(
            ColoredGraph::from_edges(2, 2, [(0, 0, 1)]),
            Err(GraphError::Loop { vertex: 0, color: 1 })
        );
        assert_eq!(
            ColoredGraph::from_edges(2, 2, [(0, 1, 0), (0, 1, 1)]),
            Err(GraphError::MissingColor { vertex: 0, color: 2 })
        );
        assert_eq!(
            ColoredGraph::from_edges(1, 4, [(0, 1, 0), (0, 2, 0)]),
            Err(GraphError::DuplicateColor { vertex: 0, color: 0 })
        );
        assert_eq!(ColoredGraph::from_edges(2, 3, []), Err(GraphError::OddVertexCount(3)));
    }

    #[test]
    fn triangle_of_doubled_edges_is_not_bipartite() {
        // hexagon-free: vertices 0..6, color 0 pairs (0,1),(2,3),(4,5); color 1
        // pairs (1,2),(3,4),(5,0) gives an even 6-cycle; color 2 closes odd cycles
        let g = ColoredGraph::from_edges(
            2,
            6,
            [(0, 1, 0), (2, 3, 0), (4, 5, 0), (1, 2, 1), (3, 4, 1), (5, 0, 1), (0, 2, 2), (1, 4, 2), (3, 5, 2)],
        )
        .unwrap();
        assert!(g.is_connected());
        assert!(!g.is_bipartite_graph());
    }

    #[test]
    fn restriction_reindexes_colors() {
        let g = ColoredGraph::order_two(4);
        let r = g.restrict(ColorSet::full(4).without(2), &[0, 1]).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r, ColoredGraph::order_two(3));
    }
}
