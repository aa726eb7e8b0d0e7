use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::irreducibles::join_irreducibles;
use crate::par::{map_collect, Execution};
use crate::partition::Partition;

/// A formal context `(G, M, I)` whose objects and attributes are partitions.
///
/// The incidence is kept twice, row-major (attributes of each object) and
/// column-major (objects of each attribute), so both derivation operators
/// are word-parallel intersections.
#[derive(Debug, Clone)]
pub struct FormalContext {
    objects: Vec<Partition>,
    attributes: Vec<Partition>,
    rows: Vec<FixedBitSet>,
    columns: Vec<FixedBitSet>,
    object_index: HashMap<Partition, usize>,
    attribute_index: HashMap<Partition, usize>,
}

fn index_of(items: &[Partition], kind: &'static str) -> Result<HashMap<Partition, usize>> {
    let mut index = HashMap::with_capacity(items.len());
    for (i, p) in items.iter().enumerate() {
        if index.insert(p.clone(), i).is_some() {
            return Err(Error::Duplicate {
                kind,
                name: p.clone(),
            });
        }
    }
    Ok(index)
}

impl FormalContext {
    /// Builds a context from its rows: `rows[g]` holds the attributes of object `g`.
    pub fn from_rows(
        objects: Vec<Partition>,
        attributes: Vec<Partition>,
        rows: Vec<FixedBitSet>,
    ) -> Result<Self> {
        assert_eq!(rows.len(), objects.len(), "one row per object");
        assert!(rows.iter().all(|r| r.len() == attributes.len()));
        let object_index = index_of(&objects, "object")?;
        let attribute_index = index_of(&attributes, "attribute")?;
        let mut columns = vec![FixedBitSet::with_capacity(objects.len()); attributes.len()];
        for (g, row) in rows.iter().enumerate() {
            for m in row.ones() {
                columns[m].insert(g);
            }
        }
        Ok(FormalContext {
            objects,
            attributes,
            rows,
            columns,
            object_index,
            attribute_index,
        })
    }

    /// Builds a context by evaluating `incidence(g, m)` for every cell.
    pub fn from_fn(
        objects: Vec<Partition>,
        attributes: Vec<Partition>,
        incidence: impl Fn(&Partition, &Partition) -> bool,
    ) -> Result<Self> {
        let rows = objects
            .iter()
            .map(|g| {
                let mut row = FixedBitSet::with_capacity(attributes.len());
                for (j, m) in attributes.iter().enumerate() {
                    row.set(j, incidence(g, m));
                }
                row
            })
            .collect();
        Self::from_rows(objects, attributes, rows)
    }

    pub fn objects(&self) -> &[Partition] {
        &self.objects
    }

    pub fn attributes(&self) -> &[Partition] {
        &self.attributes
    }

    pub fn incidence(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    pub fn row(&self, g: usize) -> &FixedBitSet {
        &self.rows[g]
    }

    pub fn column(&self, m: usize) -> &FixedBitSet {
        &self.columns[m]
    }

    pub fn object_index(&self, g: &Partition) -> Option<usize> {
        self.object_index.get(g).copied()
    }

    pub fn attribute_index(&self, m: &Partition) -> Option<usize> {
        self.attribute_index.get(m).copied()
    }

    /// Number of crosses.
    pub fn cross_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    /// `A'`: the attributes shared by every object in `extent`.
    pub fn derive_up_bits(&self, extent: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.attributes.len());
        out.insert_range(..);
        for g in extent.ones() {
            out.intersect_with(&self.rows[g]);
        }
        out
    }

    /// `B'`: the objects having every attribute in `intent`.
    pub fn derive_down_bits(&self, intent: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.objects.len());
        out.insert_range(..);
        for m in intent.ones() {
            out.intersect_with(&self.columns[m]);
        }
        out
    }

    pub fn object_set(&self, objects: &[Partition]) -> Result<FixedBitSet> {
        let mut bits = FixedBitSet::with_capacity(self.objects.len());
        for g in objects {
            let i = self
                .object_index(g)
                .ok_or_else(|| Error::UnknownObject(g.clone()))?;
            bits.insert(i);
        }
        Ok(bits)
    }

    pub fn attribute_set(&self, attributes: &[Partition]) -> Result<FixedBitSet> {
        let mut bits = FixedBitSet::with_capacity(self.attributes.len());
        for m in attributes {
            let i = self
                .attribute_index(m)
                .ok_or_else(|| Error::UnknownAttribute(m.clone()))?;
            bits.insert(i);
        }
        Ok(bits)
    }

    pub fn objects_of(&self, bits: &FixedBitSet) -> Vec<Partition> {
        bits.ones().map(|g| self.objects[g].clone()).collect()
    }

    pub fn attributes_of(&self, bits: &FixedBitSet) -> Vec<Partition> {
        bits.ones().map(|m| self.attributes[m].clone()).collect()
    }

    /// `A'` by name, in attribute order.
    pub fn derive_up(&self, objects: &[Partition]) -> Result<Vec<Partition>> {
        Ok(self.attributes_of(&self.derive_up_bits(&self.object_set(objects)?)))
    }

    /// `B'` by name, in object order.
    pub fn derive_down(&self, attributes: &[Partition]) -> Result<Vec<Partition>> {
        Ok(self.objects_of(&self.derive_down_bits(&self.attribute_set(attributes)?)))
    }
}

impl PartialEq for FormalContext {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.attributes == other.attributes
            && self.rows == other.rows
    }
}

impl Eq for FormalContext {}

/// Prefix sums of `p`, truncated at its last column (past it they all equal the weight).
fn truncated_prefix_sums(p: &Partition) -> Vec<u32> {
    p.prefix_sums(p.len())
}

/// `g <= m` in dominance order, from truncated prefix sums of equal weight.
///
/// A dominated partition never has fewer parts, so once `m` has run out the
/// comparison is settled.
fn dominated_by_prefix(g: &[u32], m: &[u32]) -> bool {
    m.len() <= g.len() && g.iter().zip(m).all(|(a, b)| a <= b)
}

/// The standard context `K(L_n) = (J(L_n), M(L_n), <=)`.
///
/// Objects are the join-irreducibles and attributes the meet-irreducibles,
/// both in ascending lexicographic order of parts (a linear extension of
/// dominance). Rows are filled sequentially.
pub fn standard_context(n: u32) -> Result<FormalContext> {
    standard_context_with(n, Execution::Sequential)
}

/// [`standard_context`] with a choice of row-fill strategy; the result does not depend on it.
pub fn standard_context_with(n: u32, exec: Execution) -> Result<FormalContext> {
    let layer = join_irreducibles(n)?;
    let mut objects = layer.members();
    objects.sort_unstable();
    let mut attributes: Vec<Partition> = objects.iter().map(Partition::conjugate).collect();
    attributes.sort_unstable();

    let object_sums: Vec<Vec<u32>> = objects.iter().map(truncated_prefix_sums).collect();
    let attribute_sums: Vec<Vec<u32>> = attributes.iter().map(truncated_prefix_sums).collect();
    let rows = map_collect(&object_sums, exec, |g| {
        let mut row = FixedBitSet::with_capacity(attribute_sums.len());
        for (j, m) in attribute_sums.iter().enumerate() {
            if dominated_by_prefix(g, m) {
                row.insert(j);
            }
        }
        row
    });
    FormalContext::from_rows(objects, attributes, rows)
}
