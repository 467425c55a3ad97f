use serde::Serialize;

use crate::color::{Color, ColorSet};
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

use super::build::Builder;

/// Two edges of color `i` and the colors `c` for which they share the same
/// `{i, c}`-colored cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RhoPair {
    pub color: Color,
    /// `(a, b)` with `a < b`.
    pub e: (usize, usize),
    /// `(c, d)` with `c < d`, and `a < c`.
    pub f: (usize, usize),
    pub involved: ColorSet,
}

impl RhoPair {
    pub fn h(&self) -> usize {
        self.involved.len()
    }
}

fn normalize(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Colors `c ≠ i` such that the `i`-edges at `x` and `y` lie on one
/// `{i, c}`-cycle.
fn involved_colors(g: &ColoredGraph, i: Color, x: usize, y: usize) -> ColorSet {
    g.all_colors()
        .without(i)
        .iter()
        .filter(|&c| {
            let (labels, _) = g.component_labels(ColorSet::pair(i, c));
            labels[x] == labels[y]
        })
        .collect()
}

/// The pair formed by the `i`-edges at vertices `x` and `y`.
pub fn rho_pair_at(g: &ColoredGraph, i: Color, x: usize, y: usize) -> Result<RhoPair> {
    if i > g.dim() {
        return Err(Error::ColorSetOutOfRange(ColorSet::singleton(i)));
    }
    for v in [x, y] {
        if v >= g.order() {
            return Err(Error::InvalidPair(format!("vertex {v} out of range")));
        }
    }
    let e = normalize(x, g.neighbor(x, i));
    let f = normalize(y, g.neighbor(y, i));
    if e == f {
        return Err(Error::InvalidPair(format!("vertices {x} and {y} lie on the same {i}-edge")));
    }
    let (e, f) = if e < f { (e, f) } else { (f, e) };
    Ok(RhoPair { color: i, e, f, involved: involved_colors(g, i, e.0, f.0) })
}

/// Every pair of `i`-colored edges whose involved colors contain
/// `required`, each with its exact involved set. Pairs are listed in order
/// of their smaller endpoints.
pub fn find_rho_pairs(g: &ColoredGraph, i: Color, required: ColorSet) -> Result<Vec<RhoPair>> {
    g.require_connected()?;
    if i > g.dim() {
        return Err(Error::ColorSetOutOfRange(ColorSet::singleton(i)));
    }
    if required.contains(i) {
        return Err(Error::InvalidInput(format!("color {i} cannot be involved in its own pair")));
    }
    if !required.is_subset(g.all_colors()) {
        return Err(Error::ColorSetOutOfRange(required));
    }
    let others: Vec<Color> = g.all_colors().without(i).iter().collect();
    let labels: Vec<Vec<usize>> = others.iter().map(|&c| g.component_labels(ColorSet::pair(i, c)).0).collect();
    let edges = g.edges_of_color(i);
    let mut out = Vec::new();
    for (k, &e) in edges.iter().enumerate() {
        for &f in &edges[k + 1..] {
            let involved: ColorSet = others
                .iter()
                .zip(&labels)
                .filter(|(_, l)| l[e.0] == l[f.0])
                .map(|(&c, _)| c)
                .collect();
            if required.is_subset(involved) {
                out.push(RhoPair { color: i, e, f, involved });
            }
        }
    }
    Ok(out)
}

/// How the four endpoints are reconnected: `A` adds `(a,c), (b,d)`, `B`
/// adds `(a,d), (b,c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pairing {
    A,
    B,
}

impl Pairing {
    pub fn new_edges(self, p: &RhoPair) -> [(usize, usize); 2] {
        let ((a, b), (c, d)) = (p.e, p.f);
        match self {
            Pairing::A => [normalize(a, c), normalize(b, d)],
            Pairing::B => [normalize(a, d), normalize(b, c)],
        }
    }

    /// The pairing of `p` producing the edges `x–y` and the remaining two
    /// endpoints, if any.
    pub fn producing(p: &RhoPair, x: usize, y: usize) -> Option<Pairing> {
        let target = normalize(x, y);
        [Pairing::A, Pairing::B].into_iter().find(|v| v.new_edges(p).contains(&target))
    }
}

impl std::fmt::Display for Pairing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Pairing::A => "A",
            Pairing::B => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SwitchVariant {
    A,
    B,
    Canonical,
}

impl std::str::FromStr for SwitchVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(SwitchVariant::A),
            "B" | "b" => Ok(SwitchVariant::B),
            "canonical" => Ok(SwitchVariant::Canonical),
            _ => Err(format!("unknown variant `{s}` (expected A, B or canonical)")),
        }
    }
}

impl std::fmt::Display for SwitchVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SwitchVariant::A => "A",
            SwitchVariant::B => "B",
            SwitchVariant::Canonical => "canonical",
        })
    }
}

/// Which rule fixed the pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SwitchRule {
    /// The caller asked for `A` or `B`.
    Requested,
    /// Bipartite graph: the pairing joining opposite classes.
    Bipartition,
    /// Non-bipartite graph: the pairing preserving the bipartition of every
    /// bipartite `ĉ`-residue containing both edges.
    ResidueBipartition,
    /// Non-bipartite graph with no such residue.
    DefaultA,
}

impl std::fmt::Display for SwitchRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SwitchRule::Requested => "requested",
            SwitchRule::Bipartition => "bipartition",
            SwitchRule::ResidueBipartition => "residue-bipartition",
            SwitchRule::DefaultA => "default-a",
        })
    }
}

impl std::str::FromStr for SwitchRule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "requested" => Ok(SwitchRule::Requested),
            "bipartition" => Ok(SwitchRule::Bipartition),
            "residue-bipartition" => Ok(SwitchRule::ResidueBipartition),
            "default-a" => Ok(SwitchRule::DefaultA),
            _ => Err(format!("unknown switch rule `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchResult {
    pub graph: ColoredGraph,
    pub pairing: Pairing,
    pub rule: SwitchRule,
}

pub(crate) fn validate_pair(g: &ColoredGraph, p: &RhoPair) -> Result<()> {
    let i = p.color;
    if i > g.dim() {
        return Err(Error::InvalidPair(format!("color {i} out of range")));
    }
    for (x, y) in [p.e, p.f] {
        if x >= g.order() || y >= g.order() || x >= y || g.neighbor(x, i) != y {
            return Err(Error::InvalidPair(format!("({x},{y}) is not an {i}-colored edge")));
        }
    }
    if p.e >= p.f {
        return Err(Error::InvalidPair("edges must be distinct and ordered".into()));
    }
    let actual = involved_colors(g, i, p.e.0, p.f.0);
    if actual != p.involved {
        return Err(Error::InvalidPair(format!("involved colors are {actual}, not {}", p.involved)));
    }
    Ok(())
}

/// The pairing joining opposite classes of a 2-coloring restricted to the
/// four endpoints.
fn preserving_pairing(p: &RhoPair, side: impl Fn(usize) -> bool) -> Pairing {
    if side(p.e.0) != side(p.f.0) {
        Pairing::A
    } else {
        Pairing::B
    }
}

/// Selects the canonical pairing of `p` in `g`. On a bipartite graph it is
/// the pairing joining opposite classes. Otherwise it must preserve the
/// 2-coloring of every bipartite `ĉ`-residue holding both edges, for `c`
/// other than the pair's color and the top color; with no such residue it
/// is variant A.
pub fn canonical_pairing(g: &ColoredGraph, p: &RhoPair) -> Result<(Pairing, SwitchRule)> {
    if let Some(side) = g.two_coloring() {
        let pairing = preserving_pairing(p, |v| side[v]);
        debug_assert!(pairing.new_edges(p).iter().all(|&(x, y)| side[x] != side[y]));
        return Ok((pairing, SwitchRule::Bipartition));
    }
    let all = g.all_colors();
    let mut chosen: Option<Pairing> = None;
    // The top color is the one allowed to be singular, so its residues
    // do not constrain the choice.
    for c in all.without(p.color).without(g.dim()).iter() {
        let cs = all.without(c);
        let (labels, _) = g.component_labels(cs);
        if labels[p.e.0] != labels[p.f.0] {
            continue;
        }
        let verts: Vec<usize> = (0..g.order()).filter(|&v| labels[v] == labels[p.e.0]).collect();
        let res = g.restrict(cs, &verts)?;
        let Some(side) = res.two_coloring() else { continue };
        let pos = |v: usize| verts.binary_search(&v).unwrap();
        let pairing = preserving_pairing(p, |v| side[pos(v)]);
        match chosen {
            Some(prev) if prev != pairing => {
                return Err(Error::NoBipartitionPreservingVariant(format!(
                    "the bipartite residues containing both {}-edges disagree",
                    p.color
                )))
            }
            _ => chosen = Some(pairing),
        }
    }
    Ok(match chosen {
        Some(pairing) => (pairing, SwitchRule::ResidueBipartition),
        None => (Pairing::A, SwitchRule::DefaultA),
    })
}

/// Replaces the edges of `p` by the reconnection selected by `variant`.
pub fn switch_rho_pair(g: &ColoredGraph, p: &RhoPair, variant: SwitchVariant) -> Result<SwitchResult> {
    validate_pair(g, p)?;
    let (pairing, rule) = match variant {
        SwitchVariant::A => (Pairing::A, SwitchRule::Requested),
        SwitchVariant::B => (Pairing::B, SwitchRule::Requested),
        SwitchVariant::Canonical => canonical_pairing(g, p)?,
    };
    let mut b = Builder::from_graph(g);
    for (x, y) in pairing.new_edges(p) {
        b.join(x, y, p.color);
    }
    Ok(SwitchResult { graph: b.finish(), pairing, rule })
}
