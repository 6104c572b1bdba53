//! Elements of S₃ acting on the indices `{0, 1, 2}`.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation([usize; 3]);

const ALL: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl Permutation {
    /// Builds a permutation from its image list; `None` unless it is a bijection.
    pub fn from_images(images: [usize; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &i in &images {
            if i >= 3 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation(images))
    }

    pub const fn identity() -> Self {
        Permutation([0, 1, 2])
    }

    pub fn transposition(a: usize, b: usize) -> Self {
        let mut images = [0, 1, 2];
        images.swap(a, b);
        Permutation(images)
    }

    pub fn all() -> impl Iterator<Item = Permutation> {
        ALL.into_iter().map(Permutation)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> [usize; 3] {
        self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn then_after(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.map(|i| self.0[i]))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0; 3];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        *self == Permutation::identity()
    }
}

impl Default for Permutation {
    fn default() -> Self {
        Permutation::identity()
    }
}

/// One-line notation on `{1, 2, 3}`, e.g. `[2,1,3]` for the swap of 1 and 2.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.0[0] + 1, self.0[1] + 1, self.0[2] + 1)
    }
}
