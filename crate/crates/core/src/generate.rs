//! Graph generators: random colored graphs, cube gems of spheres and
//! projective spaces, and reduction to crystallizations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::color::ColorSet;
use crate::graph::ColoredGraph;
use crate::moves::{cancel_dipole, DipoleSpec};

/// A random `(dim+1)`-colored graph of order `2 * half_order` whose color
/// classes are independent uniform perfect matchings. With `bipartite`,
/// every edge joins `0..p` to `p..2p`. The result may be disconnected.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, dim: usize, half_order: usize, bipartite: bool) -> ColoredGraph {
    assert!(half_order >= 1);
    let p = half_order;
    let mut edges = Vec::with_capacity((dim + 1) * p);
    for c in 0..=dim {
        if bipartite {
            let mut sigma: Vec<usize> = (p..2 * p).collect();
            sigma.shuffle(rng);
            edges.extend((0..p).map(|j| (j, sigma[j], c)));
        } else {
            let mut verts: Vec<usize> = (0..2 * p).collect();
            verts.shuffle(rng);
            edges.extend(verts.chunks(2).map(|w| (w[0], w[1], c)));
        }
    }
    ColoredGraph::from_edges(dim, 2 * p, edges).expect("matchings give a valid graph")
}

/// Like [`random_graph`], resampled until connected.
pub fn random_connected_graph<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    half_order: usize,
    bipartite: bool,
) -> ColoredGraph {
    loop {
        let g = random_graph(rng, dim, half_order, bipartite);
        if g.is_connected() {
            return g;
        }
    }
}

/// A uniformly random vertex relabeling of `g`.
pub fn relabel_random<R: Rng + ?Sized>(rng: &mut R, g: &ColoredGraph) -> ColoredGraph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// The `(n+1)`-cube: vertices are `(n+1)`-bit words and the `c`-edges flip
/// bit `c`. It is the gem of the boundary of the `(n+1)`-dimensional
/// cross-polytope, an `n`-sphere.
pub fn cube_gem(n: usize) -> ColoredGraph {
    let order = 1usize << (n + 1);
    let edges = (0..=n).flat_map(|c| (0..order).filter(move |x| x & (1 << c) == 0).map(move |x| (x, x | (1 << c), c)));
    ColoredGraph::from_edges(n, order, edges).expect("cube is a valid graph")
}

/// The `(n+1)`-cube with antipodal words identified: a crystallization of
/// real projective `n`-space of order `2^n`, non-bipartite.
pub fn projective_gem(n: usize) -> ColoredGraph {
    assert!(n >= 1);
    let order = 1usize << n;
    let full = (1usize << (n + 1)) - 1;
    let class = |x: usize| if x < order { x } else { x ^ full };
    let mut edges = Vec::new();
    for c in 0..=n {
        for x in 0..order {
            let y = class(x ^ (1 << c));
            if x < y {
                edges.push((x, y, c));
            }
        }
    }
    ColoredGraph::from_edges(n, order, edges).expect("quotient cube is a valid graph")
}

/// Cancels proper 1-dipoles until every `ĉ`-residue is unique. Each step
/// removes a `c`-edge joining two distinct `ĉ`-residues, which does not
/// change the represented manifold. The input must be connected.
pub fn reduce_to_crystallization(g: &ColoredGraph) -> ColoredGraph {
    assert!(g.is_connected(), "reduction needs a connected graph");
    let mut cur = g.clone();
    'outer: loop {
        for c in 0..cur.num_colors() {
            let (labels, count) = cur.component_labels(cur.all_colors().without(c));
            if count == 1 {
                continue;
            }
            let (u, v) = cur
                .edges_of_color(c)
                .into_iter()
                .find(|&(u, v)| labels[u] != labels[v])
                .expect("connected graph has a c-edge between distinct residues");
            let d = DipoleSpec { u, v, colors: ColorSet::singleton(c), proper: true };
            cur = cancel_dipole(&cur, &d).expect("edge between distinct residues is a proper 1-dipole");
            continue 'outer;
        }
        return cur;
    }
}
