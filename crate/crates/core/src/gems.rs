//! Classification of colored graphs as gems and crystallizations, sphere
//! certification of residues, orientability and Z₂ Betti numbers.

use std::collections::HashMap;

use serde::Serialize;

use crate::color::{Color, ColorSet};
use crate::error::Result;
use crate::genus::regular_genus_min;
use crate::gf2::{rank_dense, rank_sparse};
use crate::graph::ColoredGraph;
use crate::moves::{cancel_dipole, DipoleSpec};
use crate::residue::{hat_count, residues};

/// Outcome of the sphere test. There is no "not a sphere".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SphereStatus {
    CertifiedSphere,
    Unknown,
}

/// Certifies a connected graph as a gem of the sphere when its regular
/// genus is zero, or failing that, when greedy cancellation of proper
/// dipoles reaches the order-two graph. Graphs of dimension at most one are
/// cycles or single edges and always certify.
pub fn certify_sphere(r: &ColoredGraph) -> Result<SphereStatus> {
    r.require_connected()?;
    if r.dim() <= 1 {
        return Ok(SphereStatus::CertifiedSphere);
    }
    let (rho, _) = regular_genus_min(r)?;
    if rho.twice() == 0 || dipole_reduce(r).order() == 2 {
        Ok(SphereStatus::CertifiedSphere)
    } else {
        Ok(SphereStatus::Unknown)
    }
}

/// Cancels proper dipoles, smallest first, until none is left.
pub fn dipole_reduce(g: &ColoredGraph) -> ColoredGraph {
    let mut cur = g.clone();
    while let Some(d) = first_proper_dipole(&cur) {
        cur = cancel_dipole(&cur, &d).expect("proper dipole cancels");
    }
    cur
}

fn first_proper_dipole(g: &ColoredGraph) -> Option<DipoleSpec> {
    let mut labels_cache: HashMap<ColorSet, Vec<usize>> = HashMap::new();
    let mut candidates = Vec::new();
    for u in 0..g.order() {
        for c in 0..g.num_colors() {
            let v = g.neighbor(u, c);
            if v > u {
                let colors = g.colors_between(u, v);
                if colors.iter().next() == Some(c) && colors.len() <= g.dim() {
                    candidates.push((colors.len(), u, v, colors));
                }
            }
        }
    }
    candidates.sort();
    for (_, u, v, colors) in candidates {
        let rest = colors.complement(g.dim());
        let labels = labels_cache.entry(rest).or_insert_with(|| g.component_labels(rest).0);
        if labels[u] != labels[v] {
            return Some(DipoleSpec { u, v, colors, proper: true });
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GemClassification {
    pub connected: bool,
    pub bipartite: bool,
    /// `g_ĉ` for `c = 0..=4`.
    pub residue_counts: Vec<usize>,
    pub crystallization: bool,
    pub in_class_gs: bool,
    /// Per color, the status of each `ĉ`-residue in vertex-minimum order.
    pub sphere_certification: Vec<Vec<SphereStatus>>,
    pub singular_color_candidates: ColorSet,
}

impl GemClassification {
    /// Every `ĉ`-residue of every color certified: a gem of a closed manifold.
    pub fn is_closed_certified(&self) -> bool {
        self.connected && self.singular_color_candidates.is_empty()
    }
}

/// Classifies a 5-colored graph. Disconnected graphs are accepted and get
/// `connected = false`, which also rules out class membership.
pub fn classify(g: &ColoredGraph) -> Result<GemClassification> {
    g.require_dim(4)?;
    let connected = g.is_connected();
    let all = g.all_colors();
    let residue_counts: Vec<usize> = (0..=4).map(|c| hat_count(g, c)).collect();
    let mut sphere_certification = Vec::with_capacity(5);
    let mut singular = ColorSet::EMPTY;
    for c in 0..=4 {
        let mut statuses = Vec::new();
        for r in residues(g, all.without(c))? {
            statuses.push(certify_sphere(&r.induced_graph(g))?);
        }
        if statuses.contains(&SphereStatus::Unknown) {
            singular = singular.with(c);
        }
        sphere_certification.push(statuses);
    }
    let crystallization = connected && residue_counts.iter().all(|&k| k == 1);
    let in_class_gs = connected && residue_counts[4] == 1 && !(0..4).any(|c| singular.contains(c));
    Ok(GemClassification {
        connected,
        bipartite: g.is_bipartite_graph(),
        residue_counts,
        crystallization,
        in_class_gs,
        sphere_certification,
        singular_color_candidates: singular,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientability {
    Orientable,
    NonOrientable,
}

/// A gem is orientable exactly when it is bipartite.
pub fn orientability(g: &ColoredGraph) -> Result<Orientability> {
    g.require_connected()?;
    Ok(if g.is_bipartite_graph() { Orientability::Orientable } else { Orientability::NonOrientable })
}

/// `β_0, …, β_n` with coefficients in Z₂.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }
}

/// Complexes with at least this many simplices use sparse elimination.
pub const SPARSE_THRESHOLD: usize = 10_000;

/// Z₂ Betti numbers of the pseudocomplex dual to a connected graph.
///
/// The `k`-simplices for `k < n` are the residues over color sets of size
/// `n − k`, and the `n`-simplices are the vertices. The faces of a
/// `C`-residue `R` are the `(C ∪ {ℓ})`-residues containing `R`, one for each
/// `ℓ ∉ C`.
pub fn z2_betti(g: &ColoredGraph) -> Result<BettiVector> {
    g.require_connected()?;
    let n = g.dim();

    // Per color set: labels and offset within its dimension's index space.
    struct Block {
        labels: Vec<usize>,
        count: usize,
        offset: usize,
    }
    let mut blocks: std::collections::HashMap<ColorSet, Block> = std::collections::HashMap::new();
    let mut sizes = vec![0usize; n + 1];
    for k in 0..n {
        for cs in ColorSet::subsets_of_size(n, n - k) {
            let (labels, count) = g.component_labels(cs);
            blocks.insert(cs, Block { labels, count, offset: sizes[k] });
            sizes[k] += count;
        }
    }
    sizes[n] = g.order();
    let total: usize = sizes.iter().sum();

    // Boundary columns of the k-simplices, for k ≥ 1.
    let boundary = |k: usize| -> Vec<Vec<usize>> {
        let sets: Vec<ColorSet> = if k == n { vec![ColorSet::EMPTY] } else { ColorSet::subsets_of_size(n, n - k) };
        let mut cols = Vec::with_capacity(sizes[k]);
        for cs in sets {
            let reps: Vec<usize> = if k == n {
                (0..g.order()).collect()
            } else {
                let b = &blocks[&cs];
                let mut reps = vec![usize::MAX; b.count];
                for (v, &l) in b.labels.iter().enumerate() {
                    if reps[l] == usize::MAX {
                        reps[l] = v;
                    }
                }
                reps
            };
            for rep in reps {
                let mut col: Vec<usize> = cs
                    .complement(n)
                    .iter()
                    .map(|l: Color| {
                        let face = &blocks[&cs.with(l)];
                        face.offset + face.labels[rep]
                    })
                    .collect();
                col.sort_unstable();
                cols.push(col);
            }
        }
        cols
    };

    let rank_of = |rows: usize, cols: &[Vec<usize>]| {
        if total >= SPARSE_THRESHOLD {
            rank_sparse(rows, cols)
        } else {
            rank_dense(rows, cols)
        }
    };
    // ranks[k] = rank of ∂_k : C_k → C_{k−1}; ranks[0] = 0.
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        ranks[k] = rank_of(sizes[k - 1], &boundary(k));
    }
    let betti = (0..=n).map(|k| sizes[k] - ranks[k] - ranks[k + 1]).collect();
    Ok(BettiVector(betti))
}
