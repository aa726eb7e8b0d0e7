//! Brute-force reference implementations.
//!
//! These exist to certify the fast paths: they scan the whole lattice and
//! carry hard size limits.

use crate::error::{Error, Result};
use crate::lattice::{build_hasse, enumerate_partitions};
use crate::partition::Partition;

/// Largest `n` for the cover-counting oracles.
pub const COVER_ORACLE_LIMIT: u32 = 30;
/// Largest `n` for the exhaustive meet/join scans.
pub const BOUND_ORACLE_LIMIT: u32 = 10;

/// `p(0..=max_n)` by Euler's pentagonal-number recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCountTable {
    counts: Vec<u128>,
}

impl PartitionCountTable {
    pub fn new(max_n: u32) -> Result<Self> {
        let mut counts: Vec<u128> = Vec::with_capacity(max_n as usize + 1);
        counts.push(1);
        for m in 1..=max_n as usize {
            let (mut plus, mut minus) = (0u128, 0u128);
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > m {
                    break;
                }
                let g2 = k * (3 * k + 1) / 2;
                let mut term = counts[m - g1];
                if g2 <= m {
                    term = term
                        .checked_add(counts[m - g2])
                        .ok_or(Error::CountOverflow(m as u32))?;
                }
                let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
                *acc = acc
                    .checked_add(term)
                    .ok_or(Error::CountOverflow(m as u32))?;
            }
            counts.push(plus - minus);
        }
        Ok(PartitionCountTable { counts })
    }

    pub fn max_n(&self) -> u32 {
        self.counts.len() as u32 - 1
    }

    pub fn get(&self, n: u32) -> Option<u128> {
        self.counts.get(n as usize).copied()
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }
}

/// `p(n)`, the number of partitions of `n`, with `p(0) = 1`.
pub fn partition_count(n: u32) -> Result<u128> {
    Ok(PartitionCountTable::new(n)?.counts[n as usize])
}

fn guard(what: &'static str, n: u32, limit: u32) -> Result<()> {
    if n > limit {
        return Err(Error::SizeGuard { what, limit, n });
    }
    Ok(())
}

/// Nodes of the Hasse diagram covering exactly one node, descending lexicographic.
pub fn brute_join_irreducibles(n: u32) -> Result<Vec<Partition>> {
    guard("join-irreducible oracle", n, COVER_ORACLE_LIMIT)?;
    let d = build_hasse(n)?;
    Ok((0..d.len())
        .filter(|&i| d.lower_covers(i).len() == 1)
        .map(|i| d.nodes()[i].clone())
        .collect())
}

/// Nodes of the Hasse diagram covered by exactly one node, descending lexicographic.
pub fn brute_meet_irreducibles(n: u32) -> Result<Vec<Partition>> {
    guard("meet-irreducible oracle", n, COVER_ORACLE_LIMIT)?;
    let d = build_hasse(n)?;
    let mut upper_count = vec![0usize; d.len()];
    for (_, l) in d.edges() {
        upper_count[l] += 1;
    }
    Ok((0..d.len())
        .filter(|&i| upper_count[i] == 1)
        .map(|i| d.nodes()[i].clone())
        .collect())
}

fn bound_scan(a: &Partition, b: &Partition, below: bool) -> Result<Partition> {
    let n = a.weight();
    if n != b.weight() {
        return Err(Error::WeightMismatch(n, b.weight()));
    }
    guard("meet/join oracle", n, BOUND_ORACLE_LIMIT)?;
    let all = enumerate_partitions(n)?;
    let leq = |x: &Partition, y: &Partition| x.dominated_by(y).expect("equal weights");
    let bounds: Vec<&Partition> = all
        .iter()
        .filter(|c| {
            if below {
                leq(c, a) && leq(c, b)
            } else {
                leq(a, c) && leq(b, c)
            }
        })
        .collect();
    let best = bounds
        .iter()
        .find(|c| {
            bounds
                .iter()
                .all(|d| if below { leq(d, c) } else { leq(c, d) })
        })
        .expect("L_n is a lattice");
    Ok((*best).clone())
}

/// Greatest lower bound by scanning all of `Part(n)`.
pub fn brute_meet(a: &Partition, b: &Partition) -> Result<Partition> {
    bound_scan(a, b, true)
}

/// Least upper bound by scanning all of `Part(n)`.
pub fn brute_join(a: &Partition, b: &Partition) -> Result<Partition> {
    bound_scan(a, b, false)
}
