use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signed::{Hypergraph, LinearOrder};

use super::kneser::stable_subsets;

/// Which padded Schrijver representation to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PaperVariant {
    /// `SG(2t, 2)`.
    TwoSubsetsEven,
    /// `SG(2t+1, 2)`.
    TwoSubsetsOdd,
    /// `SG(2k+1, k)`; the argument is the ground size `2k+1`.
    HalfKneser,
}

/// `SG(n, ·)` padded with `n` isolated vertices `a_p = n + p`, ordered so that
/// `a_p` follows the `p`-th ground element of the interleaved base order.
pub fn schrijver_paper_representation(n: u32, variant: PaperVariant) -> Result<(Hypergraph, LinearOrder)> {
    let (k, base): (u32, Vec<u32>) = match variant {
        PaperVariant::TwoSubsetsEven => {
            if n < 4 || !n.is_multiple_of(2) {
                return Err(Error::invalid(format!("even variant needs n = 2t with t >= 2, got {n}")));
            }
            let t = n / 2;
            (2, (1..=t).flat_map(|i| [i, t + i]).collect())
        }
        PaperVariant::TwoSubsetsOdd => {
            if n < 5 || n % 2 != 1 {
                return Err(Error::invalid(format!("odd variant needs n = 2t+1 with t >= 2, got {n}")));
            }
            let t = n / 2;
            let mut base: Vec<u32> = (1..=t).flat_map(|i| [t + i, i]).collect();
            base.push(n);
            (2, base)
        }
        PaperVariant::HalfKneser => {
            if n < 3 || n % 2 != 1 {
                return Err(Error::invalid(format!("half-Kneser variant needs n = 2k+1 with k >= 1, got {n}")));
            }
            (n / 2, (1..=n).step_by(2).chain((2..=n).step_by(2)).collect())
        }
    };
    let edges = stable_subsets(n, k, 2);
    let hypergraph = Hypergraph::on_range(2 * n, edges)?;
    let order = LinearOrder::new(base.iter().zip(1..).flat_map(|(&v, p)| [v, n + p]).collect())?;
    Ok((hypergraph, order))
}
