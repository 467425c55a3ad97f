//! Regular genus of colored graphs.
//!
//! For a connected `(n+1)`-colored graph of order `2p` and a cyclic
//! permutation `ε` of the colors, the regular embedding of the graph has
//! faces bounded by the `{ε_j, ε_{j+1}}`-colored cycles, and its genus
//! `ρ_ε` (half the genus in the non-orientable case) satisfies
//!
//! ```text
//! 2 − 2ρ_ε = Σ_j g_{ε_j ε_{j+1}} + (1 − n)·p
//! ```

use std::cmp::Ordering;
use std::fmt;

use crate::color::Color;
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::residue::bicolored_counts;

/// An exact multiple of one half. Genus values never use floating point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger { twice: 0 };

    pub fn from_int(k: i64) -> Self {
        HalfInteger { twice: 2 * k }
    }

    /// The value `twice / 2`.
    pub fn from_twice(twice: i64) -> Self {
        HalfInteger { twice }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, if there is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }
}

impl std::ops::Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: Self) -> Self {
        HalfInteger { twice: self.twice + rhs.twice }
    }
}

impl std::ops::Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: Self) -> Self {
        HalfInteger { twice: self.twice - rhs.twice }
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for HalfInteger {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.strip_suffix("/2") {
            Some(num) => num.parse::<i64>().map(HalfInteger::from_twice).map_err(|e| e.to_string()),
            None => s.parse::<i64>().map(HalfInteger::from_int).map_err(|e| e.to_string()),
        }
    }
}

impl serde::Serialize for HalfInteger {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A cyclic permutation of `{0, …, n}` up to rotation and inverse, stored in
/// canonical form: `ε_0 = 0` and `ε_1 < ε_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicPermutation(Vec<Color>);

impl CyclicPermutation {
    /// Canonicalizes any arrangement of `0..=n` listed in cyclic order.
    pub fn new(seq: &[Color]) -> Result<Self> {
        let n = seq.len().checked_sub(1).ok_or_else(|| Error::BadPermutation(seq.to_vec(), 0))?;
        let mut seen = vec![false; n + 1];
        for &c in seq {
            if c > n || std::mem::replace(&mut seen[c], true) {
                return Err(Error::BadPermutation(seq.to_vec(), n));
            }
        }
        let start = seq.iter().position(|&c| c == 0).unwrap();
        let mut v: Vec<Color> = (0..=n).map(|j| seq[(start + j) % (n + 1)]).collect();
        if n >= 2 && v[1] > v[n] {
            v[1..].reverse();
        }
        Ok(CyclicPermutation(v))
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    /// Largest color, `n`.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Consecutive pairs `(ε_j, ε_{j+1})` for `j ∈ Z_{n+1}`.
    pub fn cyclic_pairs(&self) -> impl Iterator<Item = (Color, Color)> + '_ {
        let k = self.0.len();
        (0..k).map(move |j| (self.0[j], self.0[(j + 1) % k]))
    }

    /// The arrangement rotated so that color `c` comes last, keeping the
    /// canonical orientation.
    pub fn ending_with(&self, c: Color) -> Vec<Color> {
        let k = self.0.len();
        let pos = self.0.iter().position(|&x| x == c).expect("color in permutation");
        (1..=k).map(|j| self.0[(pos + j) % k]).collect()
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for CyclicPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// All cyclic permutations of `{0, …, n}` up to inverse, in lexicographic
/// order of their canonical forms. There are `n!/2` of them for `n ≥ 2`.
pub fn enumerate_permutations(n: usize) -> Vec<CyclicPermutation> {
    let mut out = Vec::new();
    let mut tail: Vec<Color> = (1..=n).collect();
    loop {
        if n < 2 || tail[0] < tail[n - 1] {
            let mut v = vec![0];
            v.extend_from_slice(&tail);
            out.push(CyclicPermutation(v));
        }
        if !next_permutation(&mut tail) {
            break;
        }
    }
    out
}

/// Advances `v` to the next permutation in lexicographic order.
fn next_permutation(v: &mut [Color]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

fn genus_from_counts(g: &ColoredGraph, counts: &[Vec<usize>], eps: &CyclicPermutation) -> Result<HalfInteger> {
    if eps.dim() != g.dim() {
        return Err(Error::BadPermutation(eps.as_slice().to_vec(), g.dim()));
    }
    let faces: i64 = eps.cyclic_pairs().map(|(a, b)| counts[a][b] as i64).sum();
    let n = g.dim() as i64;
    let p = g.half_order() as i64;
    // 2 − 2ρ = faces + (1 − n)p
    let twice = 2 - faces - (1 - n) * p;
    if twice < 0 {
        return Err(Error::NegativeGenus { twice, permutation: eps.to_string() });
    }
    Ok(HalfInteger::from_twice(twice))
}

/// `ρ_ε` of a connected graph.
pub fn regular_genus(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<HalfInteger> {
    g.require_connected()?;
    genus_from_counts(g, &bicolored_counts(g), eps)
}

/// `ρ_ε` for every canonical permutation, in enumeration order.
pub fn regular_genus_all(g: &ColoredGraph) -> Result<Vec<(CyclicPermutation, HalfInteger)>> {
    g.require_connected()?;
    let counts = bicolored_counts(g);
    enumerate_permutations(g.dim())
        .into_iter()
        .map(|eps| genus_from_counts(g, &counts, &eps).map(|r| (eps, r)))
        .collect()
}

/// The regular genus `ρ(Γ) = min_ε ρ_ε(Γ)` with the lexicographically least
/// permutation attaining it.
pub fn regular_genus_min(g: &ColoredGraph) -> Result<(HalfInteger, CyclicPermutation)> {
    let all = regular_genus_all(g)?;
    let (eps, rho) = all
        .into_iter()
        .min_by(|(ea, ra), (eb, rb)| match ra.cmp(rb) {
            Ordering::Equal => ea.cmp(eb),
            o => o,
        })
        .expect("at least one permutation");
    Ok((rho, eps))
}
