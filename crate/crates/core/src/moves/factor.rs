use serde::Serialize;

use crate::color::ColorSet;
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::residue::hat_count;

use super::dipole::{cancel_dipole, insert_dipole, Attachment, DipoleSpec};
use super::rho::{canonical_pairing, validate_pair, Pairing, RhoPair, SwitchRule, SwitchVariant};

/// The two stages of a factorized switch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// After inserting the 4-colored edge.
    #[serde(skip)]
    pub intermediate: ColoredGraph,
    /// The new 4-colored edge, a 1-dipole of the intermediate graph.
    pub inserted: DipoleSpec,
    /// The 3-dipole cancelled afterwards.
    pub cancelled: DipoleSpec,
    #[serde(skip)]
    pub graph: ColoredGraph,
    pub pairing: Pairing,
    pub rule: SwitchRule,
}

/// Switches a pair `e = (a,b)`, `f` of color `i ≤ 3` that is a ρ₃-pair of the
/// `4̂`-residue, in two steps.
///
/// Writing the chosen reconnection as `(a, x), (b, y)` with `{x, y} = f`, a
/// new 4-colored edge `u–v` is inserted by cutting `f` (`x` to `u`, `y` to
/// `v`) and, for every color `j ∉ {i, 4}`, the `j`-edge at `b` (`b` to `u`).
/// Then `b` and `u` are joined by the three colors other than `i` and `4`,
/// and cancelling that 3-dipole leaves `v` in the place of `b`. The result is
/// the direct switch up to the renaming of `b`; its order equals the input's
/// and is two less than the intermediate graph's.
pub fn factorized_rho3_switch(g: &ColoredGraph, p: &RhoPair, variant: SwitchVariant) -> Result<Factorization> {
    g.require_dim(4)?;
    g.require_connected()?;
    if hat_count(g, 4) != 1 {
        return Err(Error::NotInClassGs("the 4̂-residue is not unique".into()));
    }
    validate_pair(g, p)?;
    let i = p.color;
    let others = ColorSet::full(3).without(i);
    if i == 4 || !others.is_subset(p.involved) {
        return Err(Error::InvalidPair(format!(
            "not a ρ₃-pair of the 4̂-residue (color {i}, involved {})",
            p.involved
        )));
    }
    if p.involved.contains(4) {
        return Err(Error::InvalidPair("the edges share their {i,4}-cycle, so the 3-dipole would be improper".into()));
    }
    let (pairing, rule) = match variant {
        SwitchVariant::A => (Pairing::A, SwitchRule::Requested),
        SwitchVariant::B => (Pairing::B, SwitchRule::Requested),
        SwitchVariant::Canonical => canonical_pairing(g, p)?,
    };
    if let Some(side) = g.two_coloring() {
        if pairing.new_edges(p).iter().any(|&(x, y)| side[x] == side[y]) {
            return Err(Error::NoBipartitionPreservingVariant(format!(
                "pairing {pairing} admits no bipartition-respecting edge insertion"
            )));
        }
    }
    let ((a, b), (c, d)) = (p.e, p.f);
    let (x, y) = match pairing {
        Pairing::A => (c, d),
        Pairing::B => (d, c),
    };
    debug_assert!(pairing.new_edges(p).contains(&(a.min(x), a.max(x))));
    let mut attachments = vec![Attachment { color: i, x, y }];
    attachments.extend(others.iter().map(|j| Attachment { color: j, x: b, y: g.neighbor(b, j) }));
    let (intermediate, inserted) = insert_dipole(g, ColorSet::singleton(4), &attachments)?;
    let cancelled = DipoleSpec {
        u: b,
        v: inserted.u,
        colors: others,
        proper: {
            let (labels, _) = intermediate.component_labels(ColorSet::pair(i, 4));
            labels[b] != labels[inserted.u]
        },
    };
    if !cancelled.proper {
        return Err(Error::ImproperDipole { u: b, v: inserted.u });
    }
    let graph = cancel_dipole(&intermediate, &cancelled)?;
    Ok(Factorization { intermediate, inserted, cancelled, graph, pairing, rule })
}
