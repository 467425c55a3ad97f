use serde::Serialize;

use crate::color::{Color, ColorSet};
use crate::graph::ColoredGraph;
use crate::residue::full_residue_table;

/// A vertex bijection `vertex_map[v]` and color renaming `color_map[c]`
/// carrying every `c`-edge `u–v` of the first graph to the
/// `color_map[c]`-edge `vertex_map[u]–vertex_map[v]` of the second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
    pub color_map: Vec<Color>,
}

/// Cheap invariants compared before any search: order, bipartiteness and
/// the sorted residue counts for each color-set size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub bipartite: bool,
    pub counts_by_size: Vec<Vec<usize>>,
}

pub fn fingerprint(g: &ColoredGraph) -> Fingerprint {
    let table = full_residue_table(g);
    Fingerprint {
        order: g.order(),
        bipartite: g.is_bipartite_graph(),
        counts_by_size: (1..=g.num_colors()).map(|h| table.sorted_counts_of_size(h)).collect(),
    }
}

/// Finds an isomorphism, preserving colors unless `allow_color_permutation`.
pub fn iso_check(g1: &ColoredGraph, g2: &ColoredGraph, allow_color_permutation: bool) -> Option<Isomorphism> {
    if g1.dim() != g2.dim() || g1.order() != g2.order() {
        return None;
    }
    if fingerprint(g1) != fingerprint(g2) {
        return None;
    }
    let k = g1.num_colors();
    let t1 = full_residue_table(g1);
    let t2 = full_residue_table(g2);
    let mut perm: Vec<Color> = (0..k).collect();
    loop {
        let maps_tables = t1.iter().all(|(cs, n)| {
            let image: ColorSet = cs.iter().map(|c| perm[c]).collect();
            t2.get(image) == Some(n)
        });
        if maps_tables {
            if let Some(vertex_map) = Search::new(g1, g2, &perm).run() {
                return Some(Isomorphism { vertex_map, color_map: perm });
            }
        }
        if !allow_color_permutation || !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

struct Search<'a> {
    g1: &'a ColoredGraph,
    g2: &'a ColoredGraph,
    perm: &'a [Color],
    map: Vec<usize>,
    used: Vec<bool>,
    /// Smallest vertex of each component of `g1`.
    roots: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g1: &'a ColoredGraph, g2: &'a ColoredGraph, perm: &'a [Color]) -> Self {
        let (labels, count) = g1.component_labels(g1.all_colors());
        let mut roots = vec![usize::MAX; count];
        for (v, &l) in labels.iter().enumerate() {
            roots[l] = roots[l].min(v);
        }
        Search { g1, g2, perm, map: vec![usize::MAX; g1.order()], used: vec![false; g1.order()], roots }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        self.assign(0).then_some(self.map)
    }

    fn assign(&mut self, comp: usize) -> bool {
        if comp == self.roots.len() {
            return true;
        }
        let root = self.roots[comp];
        for w in 0..self.g2.order() {
            if self.used[w] {
                continue;
            }
            let mut touched = Vec::new();
            if self.propagate(root, w, &mut touched) && self.assign(comp + 1) {
                return true;
            }
            for v in touched {
                self.used[self.map[v]] = false;
                self.map[v] = usize::MAX;
            }
        }
        false
    }

    /// Extends `root ↦ w` along edges; records every vertex it maps.
    fn propagate(&mut self, root: usize, w: usize, touched: &mut Vec<usize>) -> bool {
        self.map[root] = w;
        self.used[w] = true;
        touched.push(root);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let image = self.map[v];
            for c in 0..self.g1.num_colors() {
                let x = self.g1.neighbor(v, c);
                let y = self.g2.neighbor(image, self.perm[c]);
                if self.map[x] == usize::MAX {
                    if self.used[y] {
                        return false;
                    }
                    self.map[x] = y;
                    self.used[y] = true;
                    touched.push(x);
                    stack.push(x);
                } else if self.map[x] != y {
                    return false;
                }
            }
        }
        true
    }
}
