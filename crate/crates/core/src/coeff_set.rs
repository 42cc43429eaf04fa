use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// The set `{i : c_i = 1}` of active coefficients in
/// `c(x) = 1 + Σ c_i (x^i + x^{m-i})`.
///
/// Indices are kept sorted and distinct. Range validity depends on `m` and
/// is checked where the set is used.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoeffSet {
    indices: Vec<u32>,
}

impl CoeffSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new<I: IntoIterator<Item = u32>>(indices: I) -> Self {
        let mut indices: Vec<u32> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        Self { indices }
    }

    /// Builds the set from a bitmask where bit `j` selects index `j + 1`.
    pub fn from_mask(mask: u32) -> Self {
        Self {
            indices: (0..32).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect(),
        }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.indices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn max(&self) -> Option<u32> {
        self.indices.last().copied()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Largest admissible index for a given `m`, i.e. `⌊(m-1)/2⌋`.
    pub fn max_index(m: u32) -> u32 {
        m.saturating_sub(1) / 2
    }

    /// Checks every index lies in `[1, ⌊(m-1)/2⌋]`.
    pub fn validate(&self, m: u32) -> Result<()> {
        let max = Self::max_index(m);
        match self.indices.iter().find(|&&i| i == 0 || i > max) {
            Some(&index) => Err(Error::IndexOutOfRange { index, max }),
            None => Ok(()),
        }
    }
}

/// Renders as `1;3;4` (empty string for the empty set).
impl fmt::Display for CoeffSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, i) in self.indices.iter().enumerate() {
            if pos > 0 {
                f.write_str(";")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Orders by cardinality, then lexicographically.
impl Ord for CoeffSet {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.indices
            .len()
            .cmp(&other.indices.len())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for CoeffSet {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<u32> for CoeffSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        Self::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn sorted_and_deduped() {
        let c = CoeffSet::new([5, 1, 3, 1]);
        assert_eq!(c.indices(), &[1, 3, 5]);
        assert_eq!(c.to_string(), "1;3;5");
        assert_eq!(CoeffSet::empty().to_string(), "");
    }

    #[test]
    fn range_checks() {
        assert!(CoeffSet::new([1, 2, 3]).validate(7).is_ok());
        assert_eq!(
            CoeffSet::new([4]).validate(7),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        );
        assert!(CoeffSet::new([0]).validate(7).is_err());
        assert!(CoeffSet::empty().validate(1).is_ok());
    }

    #[test]
    fn cardinality_then_lex_order() {
        let mut sets = vec![
            CoeffSet::new([2]),
            CoeffSet::new([1, 2]),
            CoeffSet::empty(),
            CoeffSet::new([1]),
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![CoeffSet::empty(), CoeffSet::new([1]), CoeffSet::new([2]), CoeffSet::new([1, 2])]
        );
        assert_eq!(CoeffSet::from_mask(0b101), CoeffSet::new([1, 3]));
    }
}
