//! Gem-induced trisections of 4-manifolds.
//!
//! For a 5-colored graph with a single `4̂`-residue and a cyclic permutation
//! `ε = (ε_0, ε_1, ε_2, ε_3, 4)`, the dual complex splits into three pieces
//! `H_0, H_1, H_2` meeting in a closed surface `Σ`. Condition (*) is a
//! combinatorial test ensuring that `H_1 ∩ H_2` is a 3-dimensional
//! handlebody.

use serde::Serialize;

use crate::color::{Color, ColorSet};
use crate::error::{Error, Result};
use crate::gems::{classify, z2_betti, GemClassification};
use crate::genus::{enumerate_permutations, regular_genus, CyclicPermutation, HalfInteger};
use crate::graph::ColoredGraph;
use crate::residue::{hat_count, residue_count, residues};

/// An ordering of all 4-colored edges satisfying condition (*), each with
/// the color `i ∈ {0,1,2,3}` that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarOrdering {
    /// Edges as `(min endpoint, max endpoint)`.
    pub edges: Vec<(usize, usize)>,
    pub witnesses: Vec<Color>,
}

impl StarOrdering {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks the defining property against `g`: each `{4, i_j}`-cycle
    /// through `e_j` has all its 4-colored edges among `e_1, …, e_j`, and
    /// every 4-colored edge appears exactly once.
    pub fn is_valid_for(&self, g: &ColoredGraph) -> bool {
        let four = g.edges_of_color(4);
        if self.edges.len() != four.len() || self.witnesses.len() != four.len() {
            return false;
        }
        let mut pos = vec![usize::MAX; g.order()];
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            if u >= g.order() || g.neighbor(u, 4) != v || pos[u] != usize::MAX {
                return false;
            }
            pos[u] = j;
            pos[v] = j;
        }
        for (j, (&(u, _), &i)) in self.edges.iter().zip(&self.witnesses).enumerate() {
            if i > 3 {
                return false;
            }
            let (labels, _) = g.component_labels(ColorSet::pair(4, i));
            if (0..g.order()).any(|x| labels[x] == labels[u] && pos[x] > j) {
                return false;
            }
        }
        true
    }
}

/// Decides condition (*) by greedy saturation.
///
/// An unselected 4-colored edge `e` is addable when, for some `i ≤ 3`, every
/// other 4-colored edge of the `{4, i}`-cycle through `e` is selected.
/// Addability only grows as edges are selected, so the greedy process
/// selects everything exactly when a valid ordering exists. Ties go to the
/// lowest edge (by smaller endpoint) and then the lowest color.
pub fn condition_star(g: &ColoredGraph) -> Result<Option<StarOrdering>> {
    g.require_dim(4)?;
    let four = g.edges_of_color(4);
    let p = four.len();
    // cycle_of[i][k]: the {4,i}-cycle of edge k; unselected[i][cycle]: count.
    let mut cycle_of = Vec::with_capacity(4);
    let mut unselected = Vec::with_capacity(4);
    for i in 0..4 {
        let (labels, count) = g.component_labels(ColorSet::pair(4, i));
        let ids: Vec<usize> = four.iter().map(|&(u, _)| labels[u]).collect();
        let mut counts = vec![0usize; count];
        for &c in &ids {
            counts[c] += 1;
        }
        cycle_of.push(ids);
        unselected.push(counts);
    }
    let mut selected = vec![false; p];
    let mut order = StarOrdering { edges: Vec::with_capacity(p), witnesses: Vec::with_capacity(p) };
    'outer: while order.len() < p {
        for k in 0..p {
            if selected[k] {
                continue;
            }
            if let Some(i) = (0..4).find(|&i| unselected[i][cycle_of[i][k]] == 1) {
                selected[k] = true;
                for j in 0..4 {
                    unselected[j][cycle_of[j][k]] -= 1;
                }
                order.edges.push(four[k]);
                order.witnesses.push(i);
                continue 'outer;
            }
        }
        return Ok(None);
    }
    Ok(Some(order))
}

/// Invariants of the trisection induced by one cyclic permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrisectionReport {
    /// `(ε_0, ε_1, ε_2, ε_3, 4)`.
    pub permutation: Vec<Color>,
    pub genus_h1: i64,
    pub genus_h2: i64,
    pub central_surface_euler: i64,
    /// `ρ_ε̂4` of the `4̂`-residue.
    pub rho_hat4: HalfInteger,
    pub orientable: bool,
    pub surface_genus: i64,
    /// Minimum of `ρ_ε̂4` over all permutations.
    pub ggt_upper_bound: HalfInteger,
}

fn require_class_gs(g: &ColoredGraph) -> Result<GemClassification> {
    g.require_connected()?;
    let cls = classify(g)?;
    if cls.residue_counts[4] != 1 {
        return Err(Error::NotInClassGs(format!("{} residues of color 4̂", cls.residue_counts[4])));
    }
    if let Some(c) = cls.singular_color_candidates.iter().find(|&c| c < 4) {
        return Err(Error::NotInClassGs(format!("a {c}̂-residue is not certified as a 3-sphere")));
    }
    Ok(cls)
}

fn hat4_residue(g: &ColoredGraph) -> Result<ColoredGraph> {
    let r = residues(g, g.all_colors().without(4))?;
    Ok(r[0].induced_graph(g))
}

/// `ρ_ε̂4` of the `4̂`-residue for the 3 cyclic orders of `{0,1,2,3}`.
fn hat4_genera(res: &ColoredGraph) -> Result<Vec<(CyclicPermutation, HalfInteger)>> {
    enumerate_permutations(3)
        .into_iter()
        .map(|e| regular_genus(res, &e).map(|r| (e, r)))
        .collect()
}

fn minimum(genera: &[(CyclicPermutation, HalfInteger)]) -> (HalfInteger, CyclicPermutation) {
    let (e, r) = genera.iter().min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0))).unwrap();
    (*r, e.clone())
}

/// `ρ_ε̂4` of the unique `4̂`-residue for each cyclic order of `{0,1,2,3}`.
pub fn rho_hat4_all(g: &ColoredGraph) -> Result<Vec<(CyclicPermutation, HalfInteger)>> {
    g.require_dim(4)?;
    let count = hat_count(g, 4);
    if count != 1 {
        return Err(Error::NotInClassGs(format!("{count} residues of color 4̂")));
    }
    hat4_genera(&hat4_residue(g)?)
}

/// The least `ρ_ε̂4` with its witness order of `{0,1,2,3}`.
pub fn rho_hat4_min(g: &ColoredGraph) -> Result<(HalfInteger, CyclicPermutation)> {
    Ok(minimum(&rho_hat4_all(g)?))
}

/// Trisection invariants for `ε`, which is rotated so that color 4 comes last.
pub fn trisection_report(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<TrisectionReport> {
    g.require_dim(4)?;
    if eps.dim() != 4 {
        return Err(Error::BadPermutation(eps.as_slice().to_vec(), 4));
    }
    let cls = require_class_gs(g)?;
    if condition_star(g)?.is_none() {
        return Err(Error::ConditionStarFails);
    }
    let e = eps.ending_with(4);
    let count = |cs: ColorSet| residue_count(g, cs).expect("valid color set") as i64;
    let hat = |c: Color| hat_count(g, c) as i64;
    let genus_h1 = count([e[1], e[3], 4].into_iter().collect()) - hat(e[0]) - hat(e[2]) + 1;
    let genus_h2 = count([e[0], e[2], 4].into_iter().collect()) - hat(e[1]) - hat(e[3]) + 1;
    let p = g.half_order() as i64;
    let central_surface_euler = (0..4).map(|j| count(ColorSet::pair(e[j], e[(j + 1) % 4]))).sum::<i64>() - 2 * p;

    let res = hat4_residue(g)?;
    let hat_perm = CyclicPermutation::new(&e[..4])?;
    let rho_hat4 = regular_genus(&res, &hat_perm)?;
    let genera = hat4_genera(&res)?;
    let orientable = cls.bipartite;
    let surface_genus = if orientable {
        rho_hat4.to_int().expect("bipartite graphs have integral genus")
    } else {
        rho_hat4.twice()
    };
    Ok(TrisectionReport {
        permutation: e,
        genus_h1,
        genus_h2,
        central_surface_euler,
        rho_hat4,
        orientable,
        surface_genus,
        ggt_upper_bound: minimum(&genera).0,
    })
}

/// The three reports for `(0,1,2,3,4)`, `(0,1,3,2,4)` and `(0,2,1,3,4)`.
pub fn trisection_reports(g: &ColoredGraph) -> Result<Vec<TrisectionReport>> {
    enumerate_permutations(3)
        .into_iter()
        .map(|e| {
            let mut v = e.as_slice().to_vec();
            v.push(4);
            trisection_report(g, &CyclicPermutation::new(&v)?)
        })
        .collect()
}

/// Upper bound on the G-trisection genus: the minimum of `ρ_ε̂4` over the
/// cyclic orders of `{0,1,2,3}`, with the witness order. `None` when
/// condition (*) fails, since no bound is derived from this graph then.
pub fn ggt_upper_bound(g: &ColoredGraph) -> Result<Option<(HalfInteger, CyclicPermutation)>> {
    g.require_dim(4)?;
    require_class_gs(g)?;
    if condition_star(g)?.is_none() {
        return Ok(None);
    }
    let res = hat4_residue(g)?;
    Ok(Some(minimum(&hat4_genera(&res)?)))
}

/// Upper bound on the trisection genus of the closed manifold obtained from
/// the manifold of `g` (whose boundary is `#_m(S²⊗S¹)`, `m = 0` for closed
/// input) by gluing handlebodies. Each of the `m` switches that produced `g`
/// raised every `ρ_ε̂4` by one, so a bound below `m` is inconsistent.
pub fn trisection_genus_bound_closed(g: &ColoredGraph, m: usize) -> Result<HalfInteger> {
    let (bound, eps) = ggt_upper_bound(g)?.ok_or_else(|| Error::NoBound("condition (*) fails".into()))?;
    if bound < HalfInteger::from_int(m as i64) {
        return Err(Error::InvalidInput(format!(
            "bound {bound} (witness {eps}) is below the switch count {m}"
        )));
    }
    Ok(bound)
}

/// `β_1 + β_2` over Z₂, a lower bound on the trisection genus of a closed
/// 4-manifold. Refused unless every `ĉ`-residue certifies as a 3-sphere.
pub fn betti_lower_bound(g: &ColoredGraph) -> Result<HalfInteger> {
    g.require_dim(4)?;
    g.require_connected()?;
    let cls = classify(g)?;
    if !cls.is_closed_certified() {
        return Err(Error::NotClosed(format!(
            "residues of colors {} are not certified as 3-spheres",
            cls.singular_color_candidates
        )));
    }
    let b = z2_betti(g)?;
    Ok(HalfInteger::from_int((b.get(1) + b.get(2)) as i64))
}
