use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A linear ordering of a vertex set; position `j` holds `σ(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct LinearOrder(Vec<u32>);

impl LinearOrder {
    pub fn new(order: Vec<u32>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(order.len());
        if let Some(v) = order.iter().find(|v| !seen.insert(**v)) {
            return Err(Error::invalid(format!("vertex {v} appears twice in the ordering")));
        }
        Ok(LinearOrder(order))
    }

    /// The natural order `1 < 2 < ... < n`.
    pub fn natural(n: u32) -> Self {
        LinearOrder((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn position(&self, v: u32) -> Option<usize> {
        self.0.iter().position(|&u| u == v)
    }

    /// `σ || τ`: the vertices of `self` followed by those of `tail`.
    pub fn concat(&self, tail: &LinearOrder) -> Result<LinearOrder> {
        concat_order(self, tail)
    }
}

impl TryFrom<Vec<u32>> for LinearOrder {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        LinearOrder::new(v)
    }
}

impl From<LinearOrder> for Vec<u32> {
    fn from(o: LinearOrder) -> Self {
        o.0
    }
}

pub fn concat_order(sigma: &LinearOrder, tau: &LinearOrder) -> Result<LinearOrder> {
    let head: HashSet<u32> = sigma.0.iter().copied().collect();
    if let Some(v) = tau.0.iter().find(|v| head.contains(v)) {
        return Err(Error::invalid(format!("orderings overlap at vertex {v}")));
    }
    let mut out = sigma.0.clone();
    out.extend_from_slice(&tau.0);
    Ok(LinearOrder(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_examples() {
        let a = LinearOrder::new(vec![1]).unwrap();
        let b = LinearOrder::new(vec![2]).unwrap();
        assert_eq!(concat_order(&a, &b).unwrap().as_slice(), &[1, 2]);

        let sigma = LinearOrder::new(vec![3, 1, 2]).unwrap();
        let tau = LinearOrder::new(vec![5, 4]).unwrap();
        let pi = sigma.concat(&tau).unwrap();
        assert_eq!(pi.len(), sigma.len() + tau.len());
        assert_eq!(pi.position(3), Some(0));
        assert_eq!(pi.position(2), Some(2));
        assert_eq!(pi.position(5), Some(3));
        assert_eq!(pi.position(4), Some(4));

        assert!(concat_order(&sigma, &LinearOrder::new(vec![2, 7]).unwrap()).is_err());
    }

    #[test]
    fn duplicates_rejected() {
        assert!(LinearOrder::new(vec![1, 2, 1]).is_err());
        assert!(serde_json::from_str::<LinearOrder>("[4,4]").is_err());
    }
}
