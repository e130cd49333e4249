use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signed::LinearOrder;

/// An element of `{-1, 0, +1}^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|&&e| !(-1..=1).contains(&e)) {
            return Err(Error::invalid(format!("sign vector entry {bad} is not -1, 0 or +1")));
        }
        Ok(SignVector(entries))
    }

    pub fn zeros(n: usize) -> Self {
        SignVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        SignVector(self.0.iter().map(|&e| -e).collect())
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&e| e != 0).count()
    }

    /// Length of a longest alternating subsequence of the nonzero entries.
    pub fn alt(&self) -> usize {
        alt_of(&self.0)
    }
}

impl TryFrom<Vec<i8>> for SignVector {
    type Error = Error;

    fn try_from(v: Vec<i8>) -> Result<Self> {
        SignVector::new(v)
    }
}

impl From<SignVector> for Vec<i8> {
    fn from(v: SignVector) -> Self {
        v.0
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// The alternation number: one plus the number of sign changes among the
/// nonzero entries, and zero for the all-zero vector.
pub fn alt(x: &SignVector) -> usize {
    alt_of(x.entries())
}

pub(crate) fn alt_of(entries: &[i8]) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for &e in entries.iter().filter(|&&e| e != 0) {
        if e != last {
            count += 1;
            last = e;
        }
    }
    count
}

/// A pair `(A, B)` of disjoint vertex sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedPair {
    pub plus: BTreeSet<u32>,
    pub minus: BTreeSet<u32>,
}

impl SignedPair {
    pub fn new(plus: BTreeSet<u32>, minus: BTreeSet<u32>) -> Result<Self> {
        if let Some(v) = plus.intersection(&minus).next() {
            return Err(Error::invalid(format!("vertex {v} lies on both sides of a signed pair")));
        }
        Ok(SignedPair { plus, minus })
    }

    pub fn swapped(&self) -> Self {
        SignedPair { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// Componentwise inclusion `(A, B) ⊆ (A', B')`.
    pub fn is_subpair_of(&self, other: &SignedPair) -> bool {
        self.plus.is_subset(&other.plus) && self.minus.is_subset(&other.minus)
    }
}

/// Reads `x` through `sigma`: the vertices at `+1` positions and at `-1`
/// positions.
pub fn signed_split(x: &SignVector, sigma: &LinearOrder) -> Result<SignedPair> {
    if x.len() != sigma.len() {
        return Err(Error::LengthMismatch { what: "sign vector", expected: sigma.len(), got: x.len() });
    }
    let mut pair = SignedPair::default();
    for (&e, &v) in x.entries().iter().zip(sigma.as_slice()) {
        match e {
            1 => {
                pair.plus.insert(v);
            }
            -1 => {
                pair.minus.insert(v);
            }
            _ => {}
        }
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[i8]) -> SignVector {
        SignVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn alt_examples() {
        let mut long = vec![0i8; 20];
        long[0] = 1;
        long[1] = -1;
        long[19] = 1;
        assert_eq!(alt(&sv(&long)), 3);
        assert_eq!(alt(&sv(&[0, 0, 0])), 0);
        assert_eq!(alt(&sv(&[1, 1, -1, 0, -1, 1])), 3);
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(SignVector::new(vec![0, 2]).is_err());
        assert!(serde_json::from_str::<SignVector>("[1,-2]").is_err());
        assert_eq!(serde_json::from_str::<SignVector>("[1,0,-1]").unwrap(), sv(&[1, 0, -1]));
    }

    #[test]
    fn split_examples() {
        let abc = LinearOrder::new(vec![1, 2, 3]).unwrap();
        let p = signed_split(&sv(&[1, -1, 0]), &abc).unwrap();
        assert_eq!(p.plus, [1].into());
        assert_eq!(p.minus, [2].into());

        let p = signed_split(&sv(&[0, 0, 0]), &abc).unwrap();
        assert!(p.plus.is_empty() && p.minus.is_empty());

        let cab = LinearOrder::new(vec![3, 1, 2]).unwrap();
        let p = signed_split(&sv(&[1, 1, -1]), &cab).unwrap();
        assert_eq!(p.plus, [3, 1].into());
        assert_eq!(p.minus, [2].into());

        assert!(matches!(
            signed_split(&sv(&[1, 0]), &abc),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn signed_pair_must_be_disjoint() {
        assert!(SignedPair::new([1, 2].into(), [2].into()).is_err());
    }
}
