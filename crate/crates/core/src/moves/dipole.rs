use serde::Serialize;

use crate::color::{Color, ColorSet};
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

use super::build::Builder;

/// Two vertices joined by exactly the edges colored by `colors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DipoleSpec {
    pub u: usize,
    pub v: usize,
    pub colors: ColorSet,
    /// `u` and `v` lie in different residues over the remaining colors.
    pub proper: bool,
}

impl DipoleSpec {
    pub fn h(&self) -> usize {
        self.colors.len()
    }
}

fn is_proper(g: &ColoredGraph, u: usize, v: usize, colors: ColorSet) -> bool {
    let rest = colors.complement(g.dim());
    if rest.is_empty() {
        return false;
    }
    let (labels, _) = g.component_labels(rest);
    labels[u] != labels[v]
}

/// All vertex pairs joined by exactly `h` parallel edges.
pub fn find_dipoles(g: &ColoredGraph, h: usize) -> Result<Vec<DipoleSpec>> {
    if h == 0 || h > g.dim() {
        return Err(Error::InvalidInput(format!("dipole size must lie in 1..={}", g.dim())));
    }
    let mut out = Vec::new();
    for u in 0..g.order() {
        let mut seen = ColorSet::EMPTY;
        for c in 0..g.num_colors() {
            let v = g.neighbor(u, c);
            if v <= u || seen.contains(c) {
                continue;
            }
            let colors = g.colors_between(u, v);
            seen = seen.union(colors);
            if colors.len() == h {
                out.push(DipoleSpec { u, v, colors, proper: is_proper(g, u, v, colors) });
            }
        }
    }
    Ok(out)
}

/// The dipole formed by `u` and `v`, whatever their shared colors.
pub fn dipole_at(g: &ColoredGraph, u: usize, v: usize) -> Result<DipoleSpec> {
    if u >= g.order() || v >= g.order() || u == v {
        return Err(Error::InvalidDipole(format!("bad vertex pair ({u},{v})")));
    }
    let colors = g.colors_between(u, v);
    if colors.is_empty() || colors.len() > g.dim() {
        return Err(Error::InvalidDipole(format!("vertices {u} and {v} do not form a dipole")));
    }
    Ok(DipoleSpec { u: u.min(v), v: u.max(v), colors, proper: is_proper(g, u, v, colors) })
}

/// Deletes a proper dipole and welds, for each remaining color, the two
/// hanging edges into one.
pub fn cancel_dipole(g: &ColoredGraph, d: &DipoleSpec) -> Result<ColoredGraph> {
    let (u, v) = (d.u, d.v);
    if u >= g.order() || v >= g.order() || u == v || g.colors_between(u, v) != d.colors || d.colors.is_empty() {
        return Err(Error::InvalidDipole(format!(
            "vertices ({u},{v}) are not joined by exactly the colors {}",
            d.colors
        )));
    }
    if !is_proper(g, u, v, d.colors) {
        return Err(Error::ImproperDipole { u, v });
    }
    let mut b = Builder::from_graph(g);
    for c in d.colors.complement(g.dim()).iter() {
        let x = g.neighbor(u, c);
        let y = g.neighbor(v, c);
        if x == y {
            return Err(Error::WeldLoop(x));
        }
        b.join(x, y, c);
    }
    b.remove(&[u, v]);
    Ok(b.finish())
}

/// Where an inserted dipole cuts the `color`-edge `x–y`: `x` is rejoined to
/// the first new vertex, `y` to the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Attachment {
    pub color: Color,
    pub x: usize,
    pub y: usize,
}

/// Inserts two new vertices `u = 2p`, `v = 2p + 1` joined by the edges of
/// `colors`, cutting one edge of every other color as given by
/// `attachments`. Properness of the new dipole is reported, not assumed.
pub fn insert_dipole(
    g: &ColoredGraph,
    colors: ColorSet,
    attachments: &[Attachment],
) -> Result<(ColoredGraph, DipoleSpec)> {
    if colors.is_empty() || !colors.is_subset(g.all_colors()) || colors == g.all_colors() {
        return Err(Error::BadAttachment(format!("dipole colors {colors} must be a proper non-empty subset")));
    }
    let rest = colors.complement(g.dim());
    let mut covered = ColorSet::EMPTY;
    for a in attachments {
        if !rest.contains(a.color) || covered.contains(a.color) {
            return Err(Error::BadAttachment(format!("unexpected or repeated color {}", a.color)));
        }
        if a.x >= g.order() || a.y >= g.order() || g.neighbor(a.x, a.color) != a.y {
            return Err(Error::BadAttachment(format!("({},{}) is not a {}-colored edge", a.x, a.y, a.color)));
        }
        covered = covered.with(a.color);
    }
    if covered != rest {
        let missing: ColorSet = rest.iter().filter(|&c| !covered.contains(c)).collect();
        return Err(Error::BadAttachment(format!("missing attachments for colors {missing}")));
    }
    let mut b = Builder::from_graph(g);
    let u = b.add_vertices(2);
    let v = u + 1;
    for c in colors.iter() {
        b.join(u, v, c);
    }
    for a in attachments {
        b.join(a.x, u, a.color);
        b.join(a.y, v, a.color);
    }
    let h = b.finish();
    let spec = DipoleSpec { u, v, colors, proper: is_proper(&h, u, v, colors) };
    Ok((h, spec))
}
