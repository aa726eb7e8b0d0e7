//! Integer partitions as columns of grains.
//!
//! A partition of `n` is stored as its nonzero parts, weakly decreasing,
//! read left to right as the heights of the columns of its Ferrers diagram.
//! Every index past the last stored column is an implicit zero, so
//! `(3,2,2,1)` and `(3,2,2,1,0,0,0,0)` are the same value.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::run_length::RunLengthPartition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Local shape of a partition at its first column.
///
/// Plateau lengths count the zero height differences starting at column 1,
/// so `(3,3)` is a non-slippery plateau of length 1 and `(1,1,1,1)` a
/// slippery plateau of length 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColumnOneShape {
    Cliff,
    SlipperyStep,
    NonSlipperyStep,
    SlipperyPlateau(u32),
    NonSlipperyPlateau(u32),
    /// Only the one-grain partition `(1)` lands here.
    None,
}

/// A grain moving from `column` (1-based) to produce a covered partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub column: usize,
    pub result: Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Left,
    Right,
}

/// The sons of a partition of `n` in the generation of all partitions of `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sons {
    pub left: Partition,
    pub right: Option<Partition>,
}

impl Partition {
    /// Builds a partition from parts, dropping trailing zeros.
    pub fn new(values: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = values.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Increasing {
                prev: w[0].into(),
                next: w[1].into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but accepts signed input and rejects negative entries.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        let parts = values
            .iter()
            .map(|&v| {
                if v < 0 {
                    Err(Error::NegativePart(v))
                } else {
                    u32::try_from(v).map_err(|_| Error::PartTooLarge(v))
                }
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty() && parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(*parts.last().unwrap() > 0);
        Partition { parts }
    }

    /// The one-column partition `(n)`, maximum of the dominance order.
    pub fn top(n: u32) -> Self {
        assert!(n > 0, "no partitions of 0");
        Partition { parts: vec![n] }
    }

    /// The all-ones partition `(1,…,1)`, minimum of the dominance order.
    pub fn bottom(n: u32) -> Self {
        assert!(n > 0, "no partitions of 0");
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of stored (nonzero) columns.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Height of column `j` (1-based), zero past the last column.
    pub fn part(&self, j: usize) -> u32 {
        j.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_bottom(&self) -> bool {
        self.parts[0] == 1
    }

    pub fn is_top(&self) -> bool {
        self.parts.len() == 1
    }

    /// Transposes the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let mut conj = vec![0u32; self.parts[0] as usize];
        for &p in &self.parts {
            for c in &mut conj[..p as usize] {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    /// `a_j - a_{j+1}` for `1 <= j <= len`, with an implicit zero after the last column.
    pub fn height_difference(&self, j: usize) -> Result<u32> {
        if j == 0 || j > self.parts.len() {
            return Err(Error::ColumnOutOfRange {
                column: j,
                max: self.parts.len(),
            });
        }
        Ok(self.part(j) - self.part(j + 1))
    }

    pub fn shape_at_column_one(&self) -> ColumnOneShape {
        RunLengthPartition::from(self).shape_at_column_one()
    }

    /// Cumulative sums of the first `upto` columns, constant after the last column.
    pub fn prefix_sums(&self, upto: usize) -> Vec<u32> {
        let mut acc = 0;
        (1..=upto)
            .map(|j| {
                acc += self.part(j);
                acc
            })
            .collect()
    }

    /// `self <= other` in the dominance order.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        self.check_weight(other)?;
        Ok(dominated_unchecked(&self.parts, &other.parts))
    }

    fn check_weight(&self, other: &Partition) -> Result<()> {
        let (a, b) = (self.weight(), other.weight());
        if a == b {
            Ok(())
        } else {
            Err(Error::WeightMismatch(a, b))
        }
    }

    /// All partitions reachable by one grain falling from a cliff or slipping
    /// off a slippery step. These are exactly the partitions `self` covers.
    pub fn direct_reachable(&self) -> Vec<Transition> {
        let mut out = Vec::new();
        for j in 1..=self.parts.len() {
            let here = self.part(j);
            let d = here - self.part(j + 1);
            let target = if d >= 2 {
                Some(j + 1)
            } else if d == 1 && here >= 2 {
                // Walk the plateau of height here-1 to the first lower column;
                // the step is slippery when that column is exactly one lower still.
                let mut t = j + 1;
                while self.part(t) == here - 1 {
                    t += 1;
                }
                (self.part(t) == here - 2).then_some(t)
            } else {
                None
            };
            if let Some(t) = target {
                let mut parts = self.parts.clone();
                parts[j - 1] -= 1;
                if t > parts.len() {
                    parts.push(1);
                } else {
                    parts[t - 1] += 1;
                }
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Transition {
                    column: j,
                    result: Partition::from_parts_unchecked(parts),
                });
            }
        }
        out
    }

    /// Whether `self` covers `lower`, decided from the two grain-move cases
    /// of the cover characterisation without going through the transition rules.
    pub fn covers(&self, lower: &Partition) -> Result<bool> {
        self.check_weight(lower)?;
        let len = self.len().max(lower.len()) + 1;
        let mut plus = None;
        let mut minus = None;
        for i in 1..=len {
            let (a, b) = (self.part(i), lower.part(i));
            if a == b {
                continue;
            }
            if a == b + 1 && plus.is_none() {
                plus = Some(i);
            } else if a + 1 == b && minus.is_none() {
                minus = Some(i);
            } else {
                return Ok(false);
            }
        }
        Ok(match (plus, minus) {
            (Some(j), Some(k)) if j < k => k == j + 1 || lower.part(j) == lower.part(k),
            _ => false,
        })
    }

    /// `α^{↓i}`: one grain added on top of column `i` (1-based).
    pub fn down_arrow(&self, i: usize) -> Result<Partition> {
        if i == 0 || i > self.weight() as usize + 1 {
            return Err(Error::ColumnOutOfRange {
                column: i,
                max: self.weight() as usize + 1,
            });
        }
        let len = self.parts.len();
        if i > len + 1 || (i >= 2 && i <= len && self.parts[i - 2] == self.parts[i - 1]) {
            return Err(Error::NotAPartition(i));
        }
        let mut parts = self.parts.clone();
        if i == len + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Left son `α^{↓1}` and, depending on the shape at column 1, the right son.
    ///
    /// The one-grain partition `(1)` matches no shape; it still gets `(1,1)` as
    /// its right son, treated as a slippery plateau of length 0.
    pub fn sons(&self) -> Sons {
        let right_column = match self.shape_at_column_one() {
            ColumnOneShape::SlipperyStep | ColumnOneShape::NonSlipperyStep => Some(2),
            ColumnOneShape::SlipperyPlateau(l) => Some(l as usize + 2),
            ColumnOneShape::None => Some(2),
            ColumnOneShape::Cliff | ColumnOneShape::NonSlipperyPlateau(_) => None,
        };
        Sons {
            left: self
                .down_arrow(1)
                .expect("adding to column 1 is always valid"),
            right: right_column.map(|c| {
                self.down_arrow(c)
                    .expect("right son column always yields a partition")
            }),
        }
    }

    /// The unique partition of weight `n - 1` having `self` among its sons.
    pub fn father(&self) -> Result<(Partition, Branch)> {
        let n = self.weight();
        if n < 2 {
            return Err(Error::WeightTooSmall { min: 2, got: n });
        }
        if self.part(1) > self.part(2) {
            let mut parts = self.parts.clone();
            parts[0] -= 1;
            if parts[0] > 0 {
                return Ok((Partition { parts }, Branch::Left));
            }
        }
        for i in 2..=self.parts.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i - 1] -= 1;
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                let candidate = Partition { parts };
                if candidate.sons().right.as_ref() == Some(self) {
                    return Ok((candidate, Branch::Right));
                }
            }
        }
        unreachable!("every partition of weight >= 2 has a father; {self} has none")
    }
}

/// Prefix-sum comparison on raw parts of equal weight.
pub(crate) fn dominated_unchecked(a: &[u32], b: &[u32]) -> bool {
    let (mut sa, mut sb) = (0u32, 0u32);
    for (i, &x) in a.iter().enumerate() {
        sa += x;
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// `a <= b` in the dominance order.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    a.dominated_by(b)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let values = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Partition::from_signed(&values)
    }
}

impl TryFrom<&[u32]> for Partition {
    type Error = Error;

    fn try_from(value: &[u32]) -> Result<Self> {
        Partition::new(value.to_vec())
    }
}
