//! The dominance lattice `L_n` of all partitions of `n`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest `n` accepted by [`is_distributive`].
pub const DISTRIBUTIVITY_LIMIT: u32 = 10;

/// All partitions of `n`, in descending lexicographic order of parts.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::WeightTooSmall { min: 1, got: 0 });
    }
    let mut out = Vec::new();
    let mut current = vec![n];
    loop {
        out.push(Partition::from_parts_unchecked(current.clone()));
        // Strip trailing ones, lower the last part > 1, refill greedily.
        let mut ones = 0u32;
        while current.last() == Some(&1) {
            current.pop();
            ones += 1;
        }
        let Some(last) = current.last_mut() else {
            break;
        };
        *last -= 1;
        let cap = *last;
        let mut rest = ones + 1;
        while rest > 0 {
            let take = rest.min(cap);
            current.push(take);
            rest -= take;
        }
    }
    Ok(out)
}

/// All partitions of `n` with their cover relation.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    weight: u32,
    nodes: Vec<Partition>,
    /// `covers[i]` lists the indices of the nodes covered by `nodes[i]`, ascending.
    covers: Vec<Vec<usize>>,
    index: HashMap<Partition, usize>,
}

impl HasseDiagram {
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn nodes(&self) -> &[Partition] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of the nodes covered by node `i`.
    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    /// Indices of the nodes covering node `i`.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&u| self.covers[u].binary_search(&i).is_ok())
            .collect()
    }

    /// `(upper, lower)` index pairs in node order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(u, ls)| ls.iter().map(move |&l| (u, l)))
    }

    pub fn edge_count(&self) -> usize {
        self.covers.iter().map(Vec::len).sum()
    }

    /// Whether every pair of nodes is comparable.
    pub fn is_chain(&self) -> bool {
        // Descending lex order is a linear extension, so adjacent comparability suffices.
        self.nodes
            .windows(2)
            .all(|w| w[1].dominated_by(&w[0]).unwrap_or(false))
    }

    /// Graphviz rendering: edges point from upper to lower.
    ///
    /// `highlight` nodes are filled grey, `annotate` nodes get a bold red outline.
    pub fn to_dot(&self, highlight: &[Partition], annotate: &[Partition]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph L{} {{", self.weight);
        let _ = writeln!(out, "  rankdir=TB;");
        let _ = writeln!(out, "  node [shape=ellipse];");
        for (i, p) in self.nodes.iter().enumerate() {
            let mut attrs = vec![format!("label=\"({p})\"")];
            if highlight.contains(p) {
                attrs.push("style=filled".into());
                attrs.push("fillcolor=gray".into());
            }
            if annotate.contains(p) {
                attrs.push("color=red".into());
                attrs.push("penwidth=2".into());
            }
            let _ = writeln!(out, "  n{i} [{}];", attrs.join(", "));
        }
        for (u, l) in self.edges() {
            let _ = writeln!(out, "  n{u} -> n{l};");
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the diagram of `L_n` from the transition rules.
pub fn build_hasse(n: u32) -> Result<HasseDiagram> {
    let nodes = enumerate_partitions(n)?;
    let index: HashMap<Partition, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let covers = nodes
        .iter()
        .map(|p| {
            let mut below: Vec<usize> = p
                .direct_reachable()
                .into_iter()
                .map(|t| index[&t.result])
                .collect();
            below.sort_unstable();
            below
        })
        .collect();
    Ok(HasseDiagram {
        weight: n,
        nodes,
        covers,
        index,
    })
}

fn check_weights(a: &Partition, b: &Partition) -> Result<u32> {
    let (wa, wb) = (a.weight(), b.weight());
    if wa != wb {
        return Err(Error::WeightMismatch(wa, wb));
    }
    Ok(wa)
}

/// Greatest lower bound: the partition whose prefix sums are the pointwise
/// minimum of the two prefix-sum sequences.
pub fn meet(a: &Partition, b: &Partition) -> Result<Partition> {
    let n = check_weights(a, b)? as usize;
    let len = a.len().max(b.len()).min(n);
    let (pa, pb) = (a.prefix_sums(len), b.prefix_sums(len));
    let mut parts = Vec::with_capacity(len);
    let mut prev = 0;
    for (x, y) in pa.into_iter().zip(pb) {
        let s = x.min(y);
        parts.push(s - prev);
        prev = s;
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Ok(Partition::from_parts_unchecked(parts))
}

/// Least upper bound, through the order-reversing conjugation.
pub fn join(a: &Partition, b: &Partition) -> Result<Partition> {
    check_weights(a, b)?;
    Ok(meet(&a.conjugate(), &b.conjugate())?.conjugate())
}

/// A five-element sublattice isomorphic to the pentagon `N_5`, listed as
/// `[top, long-chain upper, long-chain lower, short side, bottom]`.
///
/// `L_n` is distributive for `n <= 6`, so there is none there. For `n >= 7`
/// the witness in `L_7` is lifted by adding `n - 7` grains to column 1.
pub fn find_pentagon(n: u32) -> Option<[Partition; 5]> {
    if n < 7 {
        return None;
    }
    let lift = n - 7;
    let base: [&[u32]; 5] = [
        &[4, 2, 1],
        &[3, 3, 1],
        &[3, 2, 2],
        &[4, 1, 1, 1],
        &[3, 2, 1, 1],
    ];
    Some(base.map(|parts| {
        let mut parts = parts.to_vec();
        parts[0] += lift;
        Partition::from_parts_unchecked(parts)
    }))
}

/// Checks that five partitions `[1, u, w, v, 0]` form a sublattice shaped like `N_5`:
/// `0 < w < u < 1`, `0 < v < 1`, `v` incomparable to `u` and `w`, closed under meet and join.
pub fn is_pentagon_sublattice(five: &[Partition; 5]) -> Result<bool> {
    let [top, u, w, v, bottom] = five;
    let lt = |a: &Partition, b: &Partition| -> Result<bool> { Ok(a != b && a.dominated_by(b)?) };
    let incomparable = |a: &Partition, b: &Partition| -> Result<bool> {
        Ok(!a.dominated_by(b)? && !b.dominated_by(a)?)
    };
    let shape = lt(bottom, w)?
        && lt(w, u)?
        && lt(u, top)?
        && lt(bottom, v)?
        && lt(v, top)?
        && incomparable(v, u)?
        && incomparable(v, w)?;
    if !shape {
        return Ok(false);
    }
    for a in five {
        for b in five {
            if !five.contains(&meet(a, b)?) || !five.contains(&join(a, b)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Brute-force check of `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over all triples.
pub fn is_distributive(d: &HasseDiagram) -> Result<bool> {
    if d.weight() > DISTRIBUTIVITY_LIMIT {
        return Err(Error::SizeGuard {
            what: "distributivity check",
            limit: DISTRIBUTIVITY_LIMIT,
            n: d.weight(),
        });
    }
    let nodes = d.nodes();
    for x in nodes {
        for y in nodes {
            for z in nodes {
                let lhs = meet(x, &join(y, z)?)?;
                let rhs = join(&meet(x, y)?, &meet(x, z)?)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
