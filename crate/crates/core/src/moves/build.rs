use crate::color::Color;
use crate::graph::ColoredGraph;

/// A mutable neighbor table used while a move rewires edges.
pub(crate) struct Builder {
    dim: usize,
    adj: Vec<usize>,
}

impl Builder {
    pub fn from_graph(g: &ColoredGraph) -> Self {
        let mut adj = Vec::with_capacity(g.order() * g.num_colors());
        for v in 0..g.order() {
            adj.extend_from_slice(g.neighbors(v));
        }
        Builder { dim: g.dim(), adj }
    }

    fn k(&self) -> usize {
        self.dim + 1
    }

    pub fn order(&self) -> usize {
        self.adj.len() / self.k()
    }

    /// Appends `count` vertices with no edges yet; returns the first index.
    pub fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.order();
        self.adj.resize(self.adj.len() + count * self.k(), usize::MAX);
        first
    }

    pub fn join(&mut self, x: usize, y: usize, c: Color) {
        let k = self.k();
        self.adj[x * k + c] = y;
        self.adj[y * k + c] = x;
    }

    /// Deletes the given vertices, which must no longer be referenced by
    /// any remaining vertex. Survivors keep their relative order.
    pub fn remove(&mut self, gone: &[usize]) {
        let k = self.k();
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !gone.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        let mut adj = Vec::with_capacity(next * k);
        for v in 0..n {
            if map[v] != usize::MAX {
                adj.extend(self.adj[v * k..(v + 1) * k].iter().map(|&w| map[w]));
            }
        }
        self.adj = adj;
    }

    pub fn finish(self) -> ColoredGraph {
        ColoredGraph::from_raw(self.dim, self.adj)
    }
}
