use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_permutation, Graph};

/// A vertex ordering: `as_slice()[t]` is the vertex of rank `t + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Ordering {
    ranks: Vec<usize>,
}

impl Ordering {
    pub fn new(ranks: Vec<usize>) -> Result<Self> {
        if !is_permutation(&ranks, ranks.len()) {
            return Err(Error::InvalidOrdering(format!("{ranks:?} is not a permutation of 0..{}", ranks.len())));
        }
        Ok(Self { ranks })
    }

    pub fn identity(n: usize) -> Self {
        Self { ranks: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.ranks
    }

    /// 0-based rank of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.ranks.len()];
        for (t, &v) in self.ranks.iter().enumerate() {
            pos[v] = t;
        }
        pos
    }

    pub fn reversed(&self) -> Self {
        Self { ranks: self.ranks.iter().rev().copied().collect() }
    }

    /// Fails unless this orders exactly the vertices of `g`.
    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.ranks.len() != g.n() {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} entries but the graph has {} vertices",
                self.ranks.len(),
                g.n()
            )));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl TryFrom<Vec<usize>> for Ordering {
    type Error = Error;

    fn try_from(ranks: Vec<usize>) -> Result<Self> {
        Self::new(ranks)
    }
}

impl From<Ordering> for Vec<usize> {
    fn from(o: Ordering) -> Self {
        o.ranks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Ordering::new(vec![2, 0, 1]).is_ok());
        assert!(Ordering::new(vec![0, 0, 1]).is_err());
        assert!(Ordering::new(vec![0, 3, 1]).is_err());
        assert!(Ordering::from_json("[1,0]").is_ok());
        assert!(Ordering::from_json("[1,1]").is_err());
    }

    #[test]
    fn positions_invert() {
        let o = Ordering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.positions(), vec![1, 2, 0]);
        assert_eq!(o.reversed().as_slice(), &[1, 0, 2]);
    }
}
