//! Colors and color sets.

use std::fmt;

/// A color in `{0, …, n}`.
pub type Color = usize;

/// Largest supported dimension; color sets are stored as a 32-bit mask.
pub const MAX_DIM: usize = 30;

/// A set of colors, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// All colors `0..=n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        ColorSet(((1u64 << (n + 1)) - 1) as u32)
    }

    pub fn singleton(c: Color) -> Self {
        assert!(c <= MAX_DIM);
        ColorSet(1 << c)
    }

    pub fn pair(a: Color, b: Color) -> Self {
        Self::singleton(a).with(b)
    }

    pub fn from_bits(bits: u32) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        c <= MAX_DIM && self.0 & (1 << c) != 0
    }

    #[must_use]
    pub fn with(self, c: Color) -> Self {
        ColorSet(self.0 | Self::singleton(c).0)
    }

    #[must_use]
    pub fn without(self, c: Color) -> Self {
        ColorSet(self.0 & !Self::singleton(c).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[must_use]
    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: ColorSet) -> Self {
        ColorSet(self.0 & other.0)
    }

    /// Complement inside `{0, …, n}`.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        ColorSet(Self::full(n).0 & !self.0)
    }

    /// Colors in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        let bits = self.0;
        (0..32).filter(move |c| bits & (1 << c) != 0)
    }

    /// Every subset of `{0, …, n}` with exactly `size` elements, in
    /// increasing bitmask order.
    pub fn subsets_of_size(n: usize, size: usize) -> Vec<ColorSet> {
        let full = Self::full(n).0;
        (1..=full)
            .filter(|b| b & !full == 0 && b.count_ones() as usize == size)
            .map(ColorSet)
            .collect()
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<T: IntoIterator<Item = Color>>(iter: T) -> Self {
        iter.into_iter().fold(ColorSet::EMPTY, ColorSet::with)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, c) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl serde::Serialize for ColorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
