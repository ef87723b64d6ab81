use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Even weights k >= l >= 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightPair {
    pub k: u32,
    pub l: u32,
}

impl WeightPair {
    /// Rejects odd weights, k < l, l < 4, and the pairs with k + l in {8, 10, 14} for which
    /// the difference vanishes identically.
    pub fn new(k: u32, l: u32) -> Result<Self> {
        let wp = Self::new_unchecked(k, l)?;
        if matches!(k + l, 8 | 10 | 14) {
            return Err(Error::InvalidPair { k, l, reason: "E_k E_l = E_{k+l} identically" });
        }
        Ok(wp)
    }

    /// Like [`WeightPair::new`] but allows the identically vanishing pairs.
    pub fn new_unchecked(k: u32, l: u32) -> Result<Self> {
        if k % 2 == 1 || l % 2 == 1 {
            return Err(Error::InvalidPair { k, l, reason: "weights must be even" });
        }
        if l < 4 {
            return Err(Error::InvalidPair { k, l, reason: "weights must be at least 4" });
        }
        if k < l {
            return Err(Error::InvalidPair { k, l, reason: "need k >= l" });
        }
        Ok(WeightPair { k, l })
    }

    pub fn w(&self) -> u32 {
        self.k + self.l
    }

    /// k - l = 12 n + j
    pub fn n(&self) -> u32 {
        (self.k - self.l) / 12
    }

    pub fn j(&self) -> u32 {
        (self.k - self.l) % 12
    }

    /// l = 6 q + a
    pub fn q(&self) -> u32 {
        self.l / 6
    }

    pub fn a(&self) -> u32 {
        self.l % 6
    }
}

impl std::fmt::Display for WeightPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.k, self.l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects() {
        assert!(WeightPair::new(6, 4).is_err());
        assert!(WeightPair::new(10, 4).is_err());
        assert!(WeightPair::new(6, 8).is_err());
        assert!(WeightPair::new(15, 4).is_err());
        assert!(WeightPair::new_unchecked(6, 4).is_ok());
        assert!(WeightPair::new(8, 4).is_ok());
    }

    proptest! {
        #[test]
        fn decompositions(l in 2u32..200, extra in 0u32..200) {
            let (l, k) = (2 * l, 2 * l + 2 * extra);
            let wp = WeightPair::new_unchecked(k, l).unwrap();
            prop_assert_eq!(12 * wp.n() + wp.j(), k - l);
            prop_assert_eq!(6 * wp.q() + wp.a(), l);
            prop_assert!(wp.j() % 2 == 0 && wp.a() % 2 == 0);
        }
    }
}
