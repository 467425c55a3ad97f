use serde::Serialize;

use crate::color::{Color, ColorSet};
use crate::error::{Error, Result};
use crate::gems::classify;
use crate::genus::{CyclicPermutation, HalfInteger};
use crate::graph::ColoredGraph;
use crate::residue::bicolored_counts;
use crate::trisection::{condition_star, ggt_upper_bound, rho_hat4_all, rho_hat4_min};

use super::record::{MoveKind, MoveRecord};
use super::rho::{find_rho_pairs, switch_rho_pair, RhoPair, SwitchVariant};

/// Observed change of `g_{r,s}` against the expected one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaCheck {
    pub colors: (Color, Color),
    pub before: usize,
    pub after: usize,
    pub expected: i64,
}

impl DeltaCheck {
    pub fn holds(&self) -> bool {
        self.after as i64 - self.before as i64 == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusStep {
    pub permutation: CyclicPermutation,
    pub before: HalfInteger,
    pub after: HalfInteger,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineStep {
    pub step: usize,
    pub pair: RhoPair,
    pub record: MoveRecord,
    pub deltas: Vec<DeltaCheck>,
    pub rho_hat4: Vec<GenusStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineOutcome {
    pub color: Color,
    pub m: usize,
    pub base_rho_hat4: HalfInteger,
    pub base_witness: CyclicPermutation,
    pub steps: Vec<PipelineStep>,
    #[serde(skip)]
    pub graph: ColoredGraph,
    pub in_class_gs: bool,
    /// Colors among 0..=3 whose residues all certify as 3-spheres.
    pub certified_colors: ColorSet,
    pub condition_star: bool,
    /// The `4̂`-residue is bipartite exactly when the graph is.
    pub boundary_orientability_consistent: bool,
    /// Least regular genus of the `4̂`-residue over all cyclic orders.
    pub boundary_rho: HalfInteger,
    pub boundary_rho_equals_m: bool,
    /// `base_rho_hat4 + m`, when the final graph passes every check.
    pub bound: Option<HalfInteger>,
    pub unavailable_reason: Option<String>,
}

/// Expected change of `g_{r,s}` when a ρ₁-pair of color `i` involving only
/// color 4 is switched so that its `{i,4}`-cycle splits.
pub fn expected_delta(i: Color, r: Color, s: Color) -> i64 {
    let (r, s) = (r.min(s), r.max(s));
    match (r == i || s == i, r == 4 || s == 4) {
        (true, true) => 1,
        (true, false) => -1,
        _ => 0,
    }
}

/// Performs `m` canonical switches of ρ₁-pairs of color `i` involving only
/// color 4, starting from a crystallization, and checks after every step
/// the bicolored cycle-count changes and the `+1` rise of every `ρ_ε̂4`.
///
/// The final graph must lie in the class with colors 0..=3 certified and
/// satisfy condition (*); otherwise the outcome carries no bound and names
/// the failing check.
pub fn rho1_pipeline(g: &ColoredGraph, i: Color, m: usize) -> Result<PipelineOutcome> {
    g.require_dim(4)?;
    if i > 3 {
        return Err(Error::InvalidInput(format!("switch color must lie in 0..=3, got {i}")));
    }
    if m == 0 {
        return Err(Error::InvalidInput("at least one switch is required".into()));
    }
    if !classify(g)?.crystallization {
        return Err(Error::NotCrystallization);
    }
    let (base_rho_hat4, base_witness) = rho_hat4_min(g)?;
    let mut cur = g.clone();
    let mut steps = Vec::with_capacity(m);
    for step in 1..=m {
        let pair = find_rho_pairs(&cur, i, ColorSet::singleton(4))?
            .into_iter()
            .find(|p| p.involved == ColorSet::singleton(4))
            .ok_or(Error::NoRhoPair { step, color: i })?;
        let before_counts = bicolored_counts(&cur);
        let before_rho = rho_hat4_all(&cur)?;
        let r = switch_rho_pair(&cur, &pair, SwitchVariant::Canonical)?;
        let after_counts = bicolored_counts(&r.graph);
        let mut deltas = Vec::new();
        for a in 0..=4 {
            for b in a + 1..=4 {
                let d = DeltaCheck {
                    colors: (a, b),
                    before: before_counts[a][b],
                    after: after_counts[a][b],
                    expected: expected_delta(i, a, b),
                };
                if !d.holds() {
                    return Err(Error::DeltaViolation {
                        step,
                        detail: format!("g_{{{a},{b}}} went from {} to {}, expected change {}", d.before, d.after, d.expected),
                    });
                }
                deltas.push(d);
            }
        }
        if r.graph.order() != cur.order() {
            return Err(Error::DeltaViolation { step, detail: "order changed".into() });
        }
        let after_rho = rho_hat4_all(&r.graph).map_err(|e| Error::DeltaViolation { step, detail: e.to_string() })?;
        let mut rho_hat4 = Vec::new();
        for ((perm, before), (_, after)) in before_rho.into_iter().zip(after_rho) {
            if after != before + HalfInteger::from_int(1) {
                return Err(Error::DeltaViolation {
                    step,
                    detail: format!("ρ for {perm} went from {before} to {after}"),
                });
            }
            rho_hat4.push(GenusStep { permutation: perm, before, after });
        }
        let record = MoveRecord::new(
            MoveKind::RhoSwitch {
                color: i,
                e: pair.e,
                f: pair.f,
                involved: pair.involved,
                variant: SwitchVariant::Canonical,
                pairing: r.pairing,
                rule: r.rule,
            },
            &r.graph,
            Some(step),
        );
        steps.push(PipelineStep { step, pair, record, deltas, rho_hat4 });
        cur = r.graph;
    }

    let cls = classify(&cur)?;
    let certified_colors: ColorSet = (0..4).filter(|&c| !cls.singular_color_candidates.contains(c)).collect();
    let star = condition_star(&cur)?.is_some();
    let residue = crate::residue::residues(&cur, cur.all_colors().without(4))?[0].induced_graph(&cur);
    let (boundary_rho, _) = crate::genus::regular_genus_min(&residue)?;
    let mut reason = None;
    if !cls.in_class_gs {
        let missing: ColorSet = (0..4).filter(|&c| !certified_colors.contains(c)).collect();
        reason = Some(format!("final graph not certified in the class: residues of colors {missing} lack a sphere certificate"));
    } else if !star {
        reason = Some("condition (*) fails on the final graph".to_string());
    }
    let bound = if reason.is_none() {
        let b = base_rho_hat4 + HalfInteger::from_int(m as i64);
        let (direct, _) = ggt_upper_bound(&cur)?.expect("condition (*) holds");
        if direct != b {
            return Err(Error::DeltaViolation {
                step: m,
                detail: format!("final bound {direct} differs from base {base_rho_hat4} + {m}"),
            });
        }
        Some(b)
    } else {
        None
    };
    Ok(PipelineOutcome {
        color: i,
        m,
        base_rho_hat4,
        base_witness,
        steps,
        in_class_gs: cls.in_class_gs,
        certified_colors,
        condition_star: star,
        boundary_orientability_consistent: residue.is_bipartite_graph() == cur.is_bipartite_graph(),
        boundary_rho,
        boundary_rho_equals_m: boundary_rho == HalfInteger::from_int(m as i64),
        graph: cur,
        bound,
        unavailable_reason: reason,
    })
}

/// The bound `base + m` of the pipeline, for callers that know the base
/// genus and switch count without running the moves.
pub fn pipeline_bound(base_rho_hat4: HalfInteger, m: usize) -> HalfInteger {
    base_rho_hat4 + HalfInteger::from_int(m as i64)
}
