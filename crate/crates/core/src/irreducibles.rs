//! Join- and meet-irreducible elements of `L_n`.
//!
//! The join-irreducibles of `L_{n+1}` are built from those of `L_n`: every
//! irreducible partition has exactly one irreducible son (for `(2,1,…,1)` we
//! pick the right one), and the only irreducibles of `L_{n+1}` that are not
//! such a son are `(2,1,…,1)` and the partitions `(3,…,3,1,…,1)`. Layers are
//! kept in run-length form, so one step costs `O(|J(L_n)|) = O(n²)` and the
//! whole recursion `O(n³)`.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::partition::{ColumnOneShape, Partition};
use crate::run_length::RunLengthPartition;

/// Parameterised shape of a join-irreducible partition. All parameters are
/// at least 1; `(v × c)` below means `c` columns of height `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrreducibleType {
    /// `(k × m)` with `k >= 2`.
    A { k: u32, m: u32 },
    /// `(k × m, (k-1) × l)` with `k >= 2`.
    B { k: u32, m: u32, l: u32 },
    /// `(k × m, 1 × l)` with `k >= 3`.
    C { k: u32, m: u32, l: u32 },
    /// `((k+2) × m, (k+1) × l, 1 × s)` with `k >= 2`.
    D { k: u32, m: u32, l: u32, s: u32 },
}

impl IrreducibleType {
    fn from_run_length(r: &RunLengthPartition) -> Option<Self> {
        let b = r.blocks();
        match *b {
            [x] if x.value >= 2 => Some(Self::A {
                k: x.value,
                m: x.count,
            }),
            [x, y] if y.value + 1 == x.value => Some(Self::B {
                k: x.value,
                m: x.count,
                l: y.count,
            }),
            [x, y] if y.value == 1 && x.value >= 3 => Some(Self::C {
                k: x.value,
                m: x.count,
                l: y.count,
            }),
            [x, y, z] if z.value == 1 && y.value >= 3 && x.value == y.value + 1 => Some(Self::D {
                k: y.value - 1,
                m: x.count,
                l: y.count,
                s: z.count,
            }),
            _ => None,
        }
    }

    pub fn to_run_length(&self) -> RunLengthPartition {
        match *self {
            Self::A { k, m } => RunLengthPartition::from_pairs(&[(k, m)]),
            Self::B { k, m, l } => RunLengthPartition::from_pairs(&[(k, m), (k - 1, l)]),
            Self::C { k, m, l } => RunLengthPartition::from_pairs(&[(k, m), (1, l)]),
            Self::D { k, m, l, s } => {
                RunLengthPartition::from_pairs(&[(k + 2, m), (k + 1, l), (1, s)])
            }
        }
    }

    /// Rebuilds the partition described by the parameters.
    pub fn to_partition(&self) -> Partition {
        self.to_run_length().to_partition()
    }
}

/// The type and parameters of `p`, or `None` when `p` is not join-irreducible.
pub fn classify_irreducible(p: &Partition) -> Option<IrreducibleType> {
    IrreducibleType::from_run_length(&RunLengthPartition::from(p))
}

fn son_column(shape: ColumnOneShape) -> usize {
    match shape {
        ColumnOneShape::Cliff | ColumnOneShape::NonSlipperyPlateau(_) => 1,
        ColumnOneShape::SlipperyStep | ColumnOneShape::NonSlipperyStep => 2,
        ColumnOneShape::SlipperyPlateau(l) => l as usize + 2,
        ColumnOneShape::None => unreachable!("(1) is not join-irreducible"),
    }
}

fn eta_run_length(r: &RunLengthPartition) -> RunLengthPartition {
    r.down_arrow(son_column(r.shape_at_column_one()))
        .expect("the designated son of an irreducible partition exists")
}

/// The designated join-irreducible son in `L_{n+1}` of a join-irreducible `p` of `L_n`.
pub fn eta(p: &Partition) -> Result<Partition> {
    let r = RunLengthPartition::from(p);
    if IrreducibleType::from_run_length(&r).is_none() {
        return Err(Error::NotIrreducible(p.clone()));
    }
    Ok(eta_run_length(&r).to_partition())
}

fn e1(target_weight: u32) -> RunLengthPartition {
    RunLengthPartition::from_pairs(&[(2, 1), (1, target_weight - 2)])
}

fn e2(target_weight: u32) -> impl Iterator<Item = RunLengthPartition> {
    (1..)
        .take_while(move |m| 3 * m < target_weight)
        .map(move |m| RunLengthPartition::from_pairs(&[(3, m), (1, target_weight - 3 * m)]))
}

/// The join-irreducibles of weight `target_weight` outside the image of [`eta`]:
/// `E1 = {(2,1,…,1)}` and `E2 = {(3×m, 1×l) : m, l >= 1}`.
pub fn exceptional_sets(target_weight: u32) -> Result<(Vec<Partition>, Vec<Partition>)> {
    if target_weight < 4 {
        return Err(Error::WeightTooSmall {
            min: 4,
            got: target_weight,
        });
    }
    Ok((
        vec![e1(target_weight).to_partition()],
        e2(target_weight).map(|r| r.to_partition()).collect(),
    ))
}

/// The join-irreducible elements of one lattice `L_n`.
#[derive(Debug, Clone)]
pub struct IrreducibleLayer {
    weight: u32,
    members: Vec<RunLengthPartition>,
}

impl IrreducibleLayer {
    /// Hard-coded layers for `n <= 3`, where the recursion does not apply yet.
    fn seed(n: u32) -> Self {
        let pairs: &[&[(u32, u32)]] = match n {
            1 => &[],
            2 => &[&[(2, 1)]],
            3 => &[&[(3, 1)], &[(2, 1), (1, 1)]],
            _ => unreachable!("seed layers exist for n <= 3"),
        };
        IrreducibleLayer {
            weight: n,
            members: pairs
                .iter()
                .map(|p| RunLengthPartition::from_pairs(p))
                .collect(),
        }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn compact_members(&self) -> &[RunLengthPartition] {
        &self.members
    }

    /// Members in descending lexicographic order.
    pub fn members(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = self.members.iter().map(|r| r.to_partition()).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn contains(&self, p: &Partition) -> bool {
        let r = RunLengthPartition::from(p);
        self.members.contains(&r)
    }

    /// Members grouped by their shape at column 1, each group in descending lexicographic order.
    pub fn buckets(&self) -> BTreeMap<ColumnOneShape, Vec<Partition>> {
        let mut out: BTreeMap<ColumnOneShape, Vec<Partition>> = BTreeMap::new();
        for p in self.members() {
            out.entry(p.shape_at_column_one()).or_default().push(p);
        }
        out
    }
}

/// Builds `J(L_{n+1})` from `J(L_n)` for `n >= 3`.
///
/// The images under `eta` and the two exceptional sets must be pairwise
/// disjoint; a repeated partition is reported as [`Error::Overlap`].
pub fn next_layer(layer: &IrreducibleLayer) -> Result<IrreducibleLayer> {
    let n = layer.weight;
    if n < 3 {
        return Err(Error::WeightTooSmall { min: 3, got: n });
    }
    let target = n + 1;
    let mut members = Vec::with_capacity(layer.len() + n as usize / 3 + 1);
    members.extend(layer.members.iter().map(eta_run_length));
    members.push(e1(target));
    members.extend(e2(target));
    let mut seen: HashSet<&RunLengthPartition> = HashSet::with_capacity(members.len());
    if let Some(dup) = members.iter().find(|r| !seen.insert(*r)) {
        return Err(Error::Overlap(dup.to_partition()));
    }
    Ok(IrreducibleLayer {
        weight: target,
        members,
    })
}

/// `J(L_n)`, by iterating [`next_layer`] from the seed layer of `L_3`.
pub fn join_irreducibles(n: u32) -> Result<IrreducibleLayer> {
    if n == 0 {
        return Err(Error::WeightTooSmall { min: 1, got: 0 });
    }
    if n <= 3 {
        return Ok(IrreducibleLayer::seed(n));
    }
    let mut layer = IrreducibleLayer::seed(3);
    while layer.weight < n {
        layer = next_layer(&layer)?;
    }
    Ok(layer)
}

/// `M(L_n)`, the conjugates of the join-irreducibles, in descending lexicographic order.
pub fn meet_irreducibles(n: u32) -> Result<Vec<Partition>> {
    let mut out: Vec<Partition> = join_irreducibles(n)?
        .compact_members()
        .iter()
        .map(|r| r.to_partition().conjugate())
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `|J(L_n)|` from `|J(L_1)| = 0` and `|J(L_{k+1})| = |J(L_k)| + ⌊k/3⌋ + 1`.
pub fn count_recursive(n: u64) -> u64 {
    (1..n).map(|k| k / 3 + 1).sum()
}

/// `|J(L_{n+1})| = n(q+1) - q(3q+1)/2` with `q = ⌊n/3⌋`, evaluated in integers.
pub fn count_closed(n_plus_1: u64) -> u64 {
    let n = n_plus_1.saturating_sub(1);
    let q = n / 3;
    n * (q + 1) - q * (3 * q + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::tests::p;

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_irreducible(&p(&[2, 2, 1, 1])),
            Some(IrreducibleType::B { k: 2, m: 2, l: 2 })
        );
        assert_eq!(
            classify_irreducible(&p(&[4, 1, 1])),
            Some(IrreducibleType::C { k: 4, m: 1, l: 2 })
        );
        assert_eq!(classify_irreducible(&p(&[4, 2])), None);
        assert_eq!(
            classify_irreducible(&p(&[6])),
            Some(IrreducibleType::A { k: 6, m: 1 })
        );
        assert_eq!(
            classify_irreducible(&p(&[5, 5, 4, 1, 1])),
            Some(IrreducibleType::D {
                k: 3,
                m: 2,
                l: 1,
                s: 2
            })
        );
        // Looks like type D but the leading part is only 3.
        assert_eq!(classify_irreducible(&p(&[3, 2, 1])), None);
        assert_eq!(classify_irreducible(&Partition::bottom(5)), None);
    }

    #[test]
    fn reconstruction_reproduces_input() {
        for n in 1..=14 {
            for q in crate::lattice::enumerate_partitions(n).unwrap() {
                if let Some(t) = classify_irreducible(&q) {
                    assert_eq!(t.to_partition(), q);
                }
            }
        }
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&p(&[2, 1, 1, 1])).unwrap(), p(&[2, 2, 1, 1]));
        assert_eq!(eta(&p(&[6])).unwrap(), p(&[7]));
        assert_eq!(eta(&p(&[3, 3])).unwrap(), p(&[4, 3]));
        assert!(matches!(eta(&p(&[4, 2])), Err(Error::NotIrreducible(_))));
    }

    #[test]
    fn eta_of_3_3_covers_one_element() {
        let son = eta(&p(&[3, 3])).unwrap();
        assert_eq!(son.direct_reachable().len(), 1);
    }

    #[test]
    fn exceptional_set_examples() {
        let (e1, e2) = exceptional_sets(7).unwrap();
        assert_eq!(e1, vec![p(&[2, 1, 1, 1, 1, 1])]);
        assert_eq!(e2, vec![p(&[3, 1, 1, 1, 1]), p(&[3, 3, 1])]);
        let (e1, e2) = exceptional_sets(4).unwrap();
        assert_eq!(e1, vec![p(&[2, 1, 1])]);
        assert_eq!(e2, vec![p(&[3, 1])]);
        assert_eq!(exceptional_sets(10).unwrap().1.len(), 3);
        assert!(exceptional_sets(3).is_err());
        for target in 4..60u32 {
            assert_eq!(
                exceptional_sets(target).unwrap().1.len() as u32,
                (target - 1) / 3
            );
        }
    }

    #[test]
    fn layer_sizes() {
        let l6 = join_irreducibles(6).unwrap();
        let expected: Vec<Partition> = [
            &[6][..],
            &[5, 1],
            &[4, 1, 1],
            &[3, 3],
            &[3, 1, 1, 1],
            &[2, 2, 2],
            &[2, 2, 1, 1],
            &[2, 1, 1, 1, 1],
        ]
        .iter()
        .map(|x| p(x))
        .collect();
        assert_eq!(l6.members(), expected);
        assert_eq!(next_layer(&l6).unwrap().len(), 11);
        assert_eq!(next_layer(&join_irreducibles(3).unwrap()).unwrap().len(), 4);
        assert_eq!(
            next_layer(&join_irreducibles(7).unwrap()).unwrap().len(),
            14
        );
        assert!(join_irreducibles(1).unwrap().is_empty());
        assert_eq!(join_irreducibles(2).unwrap().members(), vec![p(&[2])]);
        assert!(next_layer(&join_irreducibles(2).unwrap()).is_err());
        assert!(join_irreducibles(0).is_err());
    }

    #[test]
    fn buckets_cover_the_layer() {
        let layer = join_irreducibles(9).unwrap();
        let buckets = layer.buckets();
        assert!(!buckets.contains_key(&ColumnOneShape::None));
        let total: usize = buckets.values().map(Vec::len).sum();
        assert_eq!(total, layer.len());
    }

    #[test]
    fn overlap_is_reported() {
        // A corrupted layer listing (2,1,1,1) twice yields its son twice.
        let bad = IrreducibleLayer {
            weight: 5,
            members: vec![
                RunLengthPartition::from_pairs(&[(2, 1), (1, 3)]),
                RunLengthPartition::from_pairs(&[(2, 1), (1, 3)]),
            ],
        };
        assert!(matches!(next_layer(&bad), Err(Error::Overlap(_))));
    }

    #[test]
    fn meet_irreducible_examples() {
        let m6 = meet_irreducibles(6).unwrap();
        let mut expected: Vec<Partition> = [
            &[1, 1, 1, 1, 1, 1][..],
            &[2, 1, 1, 1, 1],
            &[2, 2, 2],
            &[3, 1, 1, 1],
            &[3, 3],
            &[4, 1, 1],
            &[4, 2],
            &[5, 1],
        ]
        .iter()
        .map(|x| p(x))
        .collect();
        expected.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(m6, expected);
        assert_eq!(meet_irreducibles(2).unwrap(), vec![p(&[1, 1])]);
        assert_eq!(meet_irreducibles(7).unwrap().len(), 11);
    }

    #[test]
    fn counting_formulas() {
        assert_eq!(count_recursive(8), 14);
        assert_eq!(count_recursive(2), 1);
        assert_eq!(count_recursive(5), 6);
        assert_eq!(count_recursive(1), 0);
        assert_eq!(count_closed(6), 8);
        assert_eq!(count_closed(8), 14);
        assert_eq!(count_closed(2), 1);
        let table = [0, 1, 2, 4, 6, 8, 11, 14];
        for (i, &c) in table.iter().enumerate() {
            let n = i as u64 + 1;
            assert_eq!(count_recursive(n), c);
            assert_eq!(count_closed(n), c);
        }
    }
}
