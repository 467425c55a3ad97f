use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

/// Graph connected sum: deletes `v1` from `g1` and `v2` from `g2`, then
/// joins the two hanging edge ends of each color. The vertices of `g1`
/// (without `v1`) come first, followed by those of `g2` (without `v2`).
pub fn connected_sum(g1: &ColoredGraph, v1: usize, g2: &ColoredGraph, v2: usize) -> Result<ColoredGraph> {
    if g1.dim() != g2.dim() {
        return Err(Error::DimensionMismatch(g1.dim(), g2.dim()));
    }
    g1.require_connected()?;
    g2.require_connected()?;
    for (v, g) in [(v1, g1), (v2, g2)] {
        if v >= g.order() {
            return Err(Error::InvalidInput(format!("vertex {v} out of range (order {})", g.order())));
        }
    }
    let k = g1.num_colors();
    let shift = g1.order() - 1;
    let map1 = |w: usize| if w < v1 { w } else { w - 1 };
    let map2 = |w: usize| shift + if w < v2 { w } else { w - 1 };
    let mut adj = Vec::with_capacity((g1.order() + g2.order() - 2) * k);
    for w in (0..g1.order()).filter(|&w| w != v1) {
        for c in 0..k {
            let x = g1.neighbor(w, c);
            adj.push(if x == v1 { map2(g2.neighbor(v2, c)) } else { map1(x) });
        }
    }
    for w in (0..g2.order()).filter(|&w| w != v2) {
        for c in 0..k {
            let x = g2.neighbor(w, c);
            adj.push(if x == v2 { map1(g1.neighbor(v1, c)) } else { map2(x) });
        }
    }
    Ok(ColoredGraph::from_raw(g1.dim(), adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_is_the_identity() {
        let s = ColoredGraph::order_two(4);
        assert_eq!(connected_sum(&s, 0, &s, 1).unwrap(), s);
        assert_eq!(connected_sum(&s, 1, &s, 0).unwrap(), s);
        assert!(connected_sum(&s, 0, &ColoredGraph::order_two(3), 0).is_err());
        assert!(connected_sum(&s, 2, &s, 0).is_err());
    }
}
