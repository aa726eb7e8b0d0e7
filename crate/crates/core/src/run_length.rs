//! Run-length encoded partitions.
//!
//! Join-irreducible partitions have at most three distinct part values, so
//! in this form their shape at column 1 and their sons cost O(1) instead of
//! O(n). The layer-by-layer recursion relies on that to stay cubic.

use smallvec::SmallVec;

use crate::partition::{ColumnOneShape, Partition};

/// Blocks kept inline; irreducible partitions never need more than three.
type Blocks = SmallVec<[Block; 4]>;

/// `count` consecutive columns of height `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub value: u32,
    pub count: u32,
}

/// Canonical run-length form: values strictly decreasing, all positive, no empty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunLengthPartition {
    blocks: Blocks,
}

impl RunLengthPartition {
    pub(crate) fn from_blocks(blocks: Blocks) -> Self {
        debug_assert!(!blocks.is_empty());
        debug_assert!(blocks.iter().all(|b| b.value > 0 && b.count > 0));
        debug_assert!(blocks.windows(2).all(|w| w[0].value > w[1].value));
        RunLengthPartition { blocks }
    }

    /// `(value × count)` pairs; convenient for building fixed shapes.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut blocks = Blocks::new();
        for &(value, count) in pairs {
            if value == 0 || count == 0 {
                continue;
            }
            match blocks.last_mut() {
                Some(last) if last.value == value => last.count += count,
                _ => blocks.push(Block { value, count }),
            }
        }
        Self::from_blocks(blocks)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn weight(&self) -> u32 {
        self.blocks.iter().map(|b| b.value * b.count).sum()
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn value_at_block(&self, i: usize) -> u32 {
        self.blocks.get(i).map_or(0, |b| b.value)
    }

    pub fn shape_at_column_one(&self) -> ColumnOneShape {
        let first = self.blocks[0];
        let next = self.value_at_block(1);
        if first.count >= 2 {
            let length = first.count - 1;
            return if first.value - next == 1 {
                ColumnOneShape::SlipperyPlateau(length)
            } else {
                ColumnOneShape::NonSlipperyPlateau(length)
            };
        }
        match first.value - next {
            0 => unreachable!("blocks are strictly decreasing"),
            1 if next == 0 => ColumnOneShape::None,
            // Lowering column 1 merges it into the next block; the step is
            // slippery when the block after that sits exactly one lower.
            1 if next - self.value_at_block(2) == 1 => ColumnOneShape::SlipperyStep,
            1 => ColumnOneShape::NonSlipperyStep,
            _ => ColumnOneShape::Cliff,
        }
    }

    /// Adds one grain on top of column `column` (1-based), if the result is a partition.
    pub fn down_arrow(&self, column: usize) -> Option<Self> {
        if column == 0 {
            return None;
        }
        let mut start = 1usize;
        for (i, b) in self.blocks.iter().enumerate() {
            if column < start + b.count as usize {
                if column != start {
                    return None;
                }
                if i > 0 && self.blocks[i - 1].value == b.value {
                    unreachable!("blocks are strictly decreasing");
                }
                let raised = b.value + 1;
                let mut blocks = Blocks::new();
                blocks.extend_from_slice(&self.blocks[..i]);
                match blocks.last_mut() {
                    Some(prev) if prev.value == raised => prev.count += 1,
                    Some(prev) if prev.value < raised => return None,
                    _ => blocks.push(Block {
                        value: raised,
                        count: 1,
                    }),
                }
                if b.count > 1 {
                    blocks.push(Block {
                        value: b.value,
                        count: b.count - 1,
                    });
                }
                blocks.extend_from_slice(&self.blocks[i + 1..]);
                return Some(Self::from_blocks(blocks));
            }
            start += b.count as usize;
        }
        if column != start {
            return None;
        }
        let mut blocks = self.blocks.clone();
        match blocks.last_mut() {
            Some(last) if last.value == 1 => last.count += 1,
            _ => blocks.push(Block { value: 1, count: 1 }),
        }
        Some(Self::from_blocks(blocks))
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.len());
        for b in &self.blocks {
            parts.extend(std::iter::repeat_n(b.value, b.count as usize));
        }
        Partition::from_parts_unchecked(parts)
    }
}

impl From<&Partition> for RunLengthPartition {
    fn from(p: &Partition) -> Self {
        let mut blocks = Blocks::new();
        for &v in p.parts() {
            match blocks.last_mut() {
                Some(last) if last.value == v => last.count += 1,
                _ => blocks.push(Block { value: v, count: 1 }),
            }
        }
        RunLengthPartition { blocks }
    }
}

impl From<&RunLengthPartition> for Partition {
    fn from(r: &RunLengthPartition) -> Self {
        r.to_partition()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_partitions;

    #[test]
    fn round_trip_and_arrows_agree_with_plain_form() {
        for n in 1..=10 {
            for p in enumerate_partitions(n).unwrap() {
                let r = RunLengthPartition::from(&p);
                assert_eq!(r.to_partition(), p);
                assert_eq!(r.weight(), n);
                assert_eq!(r.len(), p.len());
                for column in 0..=p.len() + 2 {
                    assert_eq!(
                        r.down_arrow(column).map(|x| x.to_partition()),
                        p.down_arrow(column).ok(),
                        "{p} at column {column}"
                    );
                }
            }
        }
    }

    #[test]
    fn from_pairs_merges_and_skips_empty() {
        let r = RunLengthPartition::from_pairs(&[(3, 2), (3, 1), (1, 0), (1, 2)]);
        assert_eq!(r.to_partition().parts(), &[3, 3, 3, 1, 1]);
    }
}
