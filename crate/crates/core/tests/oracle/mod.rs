//! Slow reference implementations that share no code with the library
//! beyond reading adjacency.

#![allow(dead_code)]

use gemkit::{Color, ColoredGraph};

pub struct UnionFind(Vec<usize>);

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Number of components using only edges of the listed colors.
pub fn residue_count(g: &ColoredGraph, colors: &[Color]) -> usize {
    let mut uf = UnionFind::new(g.order());
    for v in 0..g.order() {
        for &c in colors {
            uf.union(v, g.neighbor(v, c));
        }
    }
    (0..g.order()).filter(|&v| uf.find(v) == v).count()
}

/// Count of `{a,b}`-cycles by walking them edge by edge.
pub fn walk_cycles(g: &ColoredGraph, a: Color, b: Color) -> usize {
    let mut seen = vec![false; g.order()];
    let mut cycles = 0;
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut v = start;
        let mut color = a;
        loop {
            seen[v] = true;
            v = g.neighbor(v, color);
            color = if color == a { b } else { a };
            if v == start && color == a {
                break;
            }
        }
    }
    cycles
}

/// Twice the genus of the regular embedding for `eps`, from `2 - V + E - F`.
pub fn twice_face_genus(g: &ColoredGraph, eps: &[Color]) -> i64 {
    let k = eps.len();
    let v = g.order() as i64;
    let e = (g.order() * g.num_colors() / 2) as i64;
    let f: usize = (0..k).map(|j| walk_cycles(g, eps[j], eps[(j + 1) % k])).sum();
    2 - v + e - f as i64
}

/// Two-coloring by breadth-first search, `None` on an odd cycle.
pub fn bfs_bipartition(g: &ColoredGraph) -> Option<Vec<u8>> {
    let mut side = vec![u8::MAX; g.order()];
    for s in 0..g.order() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for c in 0..g.num_colors() {
                let w = g.neighbor(v, c);
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// The vertices of the `{a,b}`-cycle through `v`.
pub fn cycle_through(g: &ColoredGraph, v: usize, a: Color, b: Color) -> Vec<usize> {
    let mut out = vec![v];
    let mut x = v;
    let mut color = a;
    loop {
        x = g.neighbor(x, color);
        color = if color == a { b } else { a };
        if x == v && color == a {
            return out;
        }
        if x != v {
            out.push(x);
        }
    }
}

/// Colors `c` for which the `i`-edges at `x` and `y` lie on one `{i,c}`-cycle.
pub fn involved(g: &ColoredGraph, i: Color, x: usize, y: usize) -> Vec<Color> {
    (0..g.num_colors()).filter(|&c| c != i && cycle_through(g, x, i, c).contains(&y)).collect()
}

/// Decides condition (*) by trying every ordering of the 4-colored edges.
pub fn brute_force_star(g: &ColoredGraph) -> bool {
    let edges: Vec<(usize, usize)> = (0..g.order()).filter(|&v| v < g.neighbor(v, 4)).map(|v| (v, g.neighbor(v, 4))).collect();
    let index = |v: usize| edges.iter().position(|&(a, b)| a == v || b == v).unwrap();
    // For each edge and witness color, the set of 4-edges on that cycle.
    let cycles: Vec<Vec<Vec<usize>>> = edges
        .iter()
        .map(|&(u, _)| {
            (0..4)
                .map(|i| {
                    let mut on: Vec<usize> = cycle_through(g, u, 4, i).into_iter().map(index).collect();
                    on.sort();
                    on.dedup();
                    on
                })
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..edges.len()).collect();
    permutations(&mut order, 0, &mut |ord| {
        let mut pos = vec![0; ord.len()];
        for (j, &e) in ord.iter().enumerate() {
            pos[e] = j;
        }
        ord.iter().enumerate().all(|(j, &e)| cycles[e].iter().any(|on| on.iter().all(|&f| pos[f] <= j)))
    })
}

fn permutations(v: &mut Vec<usize>, k: usize, check: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == v.len() {
        return check(v);
    }
    for j in k..v.len() {
        v.swap(k, j);
        if permutations(v, k + 1, check) {
            v.swap(k, j);
            return true;
        }
        v.swap(k, j);
    }
    false
}

/// Every cyclic order of `0..k` with first entry 0, including both
/// directions.
pub fn all_cyclic_orders(k: usize) -> Vec<Vec<Color>> {
    let mut rest: Vec<usize> = (1..k).collect();
    let mut out = Vec::new();
    collect(&mut rest, 0, &mut out);
    out
}

fn collect(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<Color>>) {
    if k == v.len() {
        let mut e = vec![0];
        e.extend_from_slice(v);
        out.push(e);
        return;
    }
    for j in k..v.len() {
        v.swap(k, j);
        collect(v, k + 1, out);
        v.swap(k, j);
    }
}
