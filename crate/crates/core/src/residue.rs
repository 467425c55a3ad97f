//! Residues and residue counts.
//!
//! A `C`-residue is a connected component of the subgraph that keeps only
//! the edges colored by `C`. Dually, the `C`-residues are the
//! `(n − |C|)`-simplices of the pseudocomplex `K(Γ)` whose vertices carry
//! the labels outside `C`.

use std::collections::BTreeMap;

use crate::color::{Color, ColorSet};
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

/// One connected component of a color-restricted subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    pub colors: ColorSet,
    /// Sorted vertex set.
    pub vertices: Vec<usize>,
}

impl Residue {
    /// The residue as a standalone graph of dimension `|colors| − 1`, with
    /// colors renumbered in increasing order and vertices in sorted order.
    pub fn induced_graph(&self, g: &ColoredGraph) -> ColoredGraph {
        g.restrict(self.colors, &self.vertices)
            .expect("residue vertex sets are closed under their colors")
    }
}

fn check_colors(g: &ColoredGraph, colors: ColorSet) -> Result<()> {
    if colors.is_empty() {
        return Err(Error::EmptyColorSet);
    }
    if !colors.is_subset(g.all_colors()) {
        return Err(Error::ColorSetOutOfRange(colors));
    }
    Ok(())
}

/// The `colors`-residues of `g`, ordered by smallest vertex.
pub fn residues(g: &ColoredGraph, colors: ColorSet) -> Result<Vec<Residue>> {
    check_colors(g, colors)?;
    let (label, count) = g.component_labels(colors);
    let mut out = vec![Residue { colors, vertices: Vec::new() }; count];
    for (v, &l) in label.iter().enumerate() {
        out[l].vertices.push(v);
    }
    Ok(out)
}

/// Number of `colors`-residues, `g_C`.
pub fn residue_count(g: &ColoredGraph, colors: ColorSet) -> Result<usize> {
    check_colors(g, colors)?;
    Ok(g.component_labels(colors).1)
}

/// Counts `g_C` for color sets `C`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResidueTable {
    counts: BTreeMap<ColorSet, usize>,
}

impl ResidueTable {
    pub fn get(&self, colors: ColorSet) -> Option<usize> {
        self.counts.get(&colors).copied()
    }

    /// `g_C`, panicking if `C` was not tabulated.
    pub fn count(&self, colors: ColorSet) -> usize {
        self.counts[&colors]
    }

    pub fn iter(&self) -> impl Iterator<Item = (ColorSet, usize)> + '_ {
        self.counts.iter().map(|(&c, &n)| (c, n))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Counts for each set of size `size`, sorted ascending.
    pub fn sorted_counts_of_size(&self, size: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.iter().filter(|(c, _)| c.len() == size).map(|(_, n)| n).collect();
        v.sort_unstable();
        v
    }
}

/// `g_C` for every non-empty color set whose size is in `sizes`. Sizes
/// outside `1..=n+1` are ignored.
pub fn residue_table(g: &ColoredGraph, sizes: &[usize]) -> ResidueTable {
    let mut counts = BTreeMap::new();
    for &h in sizes {
        if h == 0 || h > g.num_colors() {
            continue;
        }
        for cs in ColorSet::subsets_of_size(g.dim(), h) {
            counts.insert(cs, g.component_labels(cs).1);
        }
    }
    ResidueTable { counts }
}

/// `g_C` for every non-empty color set.
pub fn full_residue_table(g: &ColoredGraph) -> ResidueTable {
    let sizes: Vec<usize> = (1..=g.num_colors()).collect();
    residue_table(g, &sizes)
}

/// Number of bicolored cycles `g_{a,b}` for all color pairs, as a symmetric
/// matrix (diagonal unused).
pub fn bicolored_counts(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let k = g.num_colors();
    let mut m = vec![vec![0; k]; k];
    for a in 0..k {
        for b in a + 1..k {
            let n = g.component_labels(ColorSet::pair(a, b)).1;
            m[a][b] = n;
            m[b][a] = n;
        }
    }
    m
}

/// Number of `ĉ`-residues.
pub fn hat_count(g: &ColoredGraph, c: Color) -> usize {
    g.component_labels(g.all_colors().without(c)).1
}

/// Euler characteristic of the pseudocomplex dual to a connected graph:
/// `χ = Σ_{k<n} (−1)^k Σ_{|C|=n−k} g_C + (−1)^n · 2p`.
pub fn euler_characteristic(g: &ColoredGraph) -> Result<i64> {
    g.require_connected()?;
    let n = g.dim();
    let mut chi: i64 = 0;
    for k in 0..n {
        let sum: usize = ColorSet::subsets_of_size(n, n - k)
            .into_iter()
            .map(|cs| g.component_labels(cs).1)
            .sum();
        chi += sign(k) * sum as i64;
    }
    chi += sign(n) * g.order() as i64;
    Ok(chi)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 { 1 } else { -1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_residues() {
        let g = ColoredGraph::order_two(4);
        let r = residues(&g, ColorSet::pair(0, 1)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].vertices, vec![0, 1]);
        assert_eq!(residues(&g, ColorSet::singleton(3)).unwrap().len(), 1);
        assert_eq!(residues(&g, ColorSet::EMPTY), Err(Error::EmptyColorSet));
        let t = full_residue_table(&g);
        assert_eq!(t.len(), 31);
        assert!(t.iter().all(|(_, n)| n == 1));
    }

    #[test]
    fn order_two_euler_characteristics() {
        assert_eq!(euler_characteristic(&ColoredGraph::order_two(4)).unwrap(), 2);
        assert_eq!(euler_characteristic(&ColoredGraph::order_two(3)).unwrap(), 0);
        assert_eq!(euler_characteristic(&ColoredGraph::order_two(2)).unwrap(), 2);
    }

    #[test]
    fn induced_graph_of_hat_residue() {
        let g = ColoredGraph::order_two(4);
        let r = &residues(&g, g.all_colors().without(4)).unwrap()[0];
        assert_eq!(r.induced_graph(&g), ColoredGraph::order_two(3));
    }
}
