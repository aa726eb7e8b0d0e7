use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::fca::context::{standard_context, FormalContext};
use crate::lattice::enumerate_partitions;

/// Largest `n` accepted by [`concept_lattice_isomorphic_to_ln`].
pub const ISOMORPHISM_LIMIT: u32 = 12;

/// A formal concept: `extent' = intent` and `intent' = extent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Concept {
    pub extent: FixedBitSet,
    pub intent: FixedBitSet,
}

impl Concept {
    pub fn extent_size(&self) -> usize {
        self.extent.count_ones(..)
    }

    pub fn intent_size(&self) -> usize {
        self.intent.count_ones(..)
    }
}

/// `c1 <= c2` iff the extent of `c1` is contained in that of `c2`.
pub fn concept_leq(c1: &Concept, c2: &Concept) -> Result<bool> {
    if c1.extent.len() != c2.extent.len() || c1.intent.len() != c2.intent.len() {
        return Err(Error::ContextMismatch);
    }
    Ok(c1.extent.is_subset(&c2.extent))
}

/// The concept whose intent is `intent''`.
fn close_intent(ctx: &FormalContext, intent: &FixedBitSet) -> Concept {
    let extent = ctx.derive_down_bits(intent);
    let intent = ctx.derive_up_bits(&extent);
    Concept { extent, intent }
}

/// The concept generated by a set of objects: `(A'', A')`.
pub fn concept_of_objects(ctx: &FormalContext, objects: &FixedBitSet) -> Concept {
    let intent = ctx.derive_up_bits(objects);
    let extent = ctx.derive_down_bits(&intent);
    Concept { extent, intent }
}

/// Lectically next closed intent after `current`, if any.
fn next_intent(ctx: &FormalContext, current: &FixedBitSet) -> Option<Concept> {
    let m = ctx.attributes().len();
    let mut prefix = current.clone();
    for i in (0..m).rev() {
        if prefix.contains(i) {
            prefix.set(i, false);
            continue;
        }
        prefix.insert(i);
        let candidate = close_intent(ctx, &prefix);
        prefix.set(i, false);
        // Accept when the closure adds nothing below i.
        let mut added = candidate.intent.clone();
        added.difference_with(&prefix);
        if added.minimum() == Some(i) {
            return Some(candidate);
        }
    }
    None
}

/// Iterator over all concepts in lectic order of their intents.
pub struct Concepts<'a> {
    ctx: &'a FormalContext,
    next: Option<Concept>,
}

impl Iterator for Concepts<'_> {
    type Item = Concept;

    fn next(&mut self) -> Option<Concept> {
        let current = self.next.take()?;
        self.next = next_intent(self.ctx, &current.intent);
        Some(current)
    }
}

pub fn concepts(ctx: &FormalContext) -> Concepts<'_> {
    let empty = FixedBitSet::with_capacity(ctx.attributes().len());
    Concepts {
        ctx,
        next: Some(close_intent(ctx, &empty)),
    }
}

/// All concepts of `ctx`, each once, in lectic order of intents.
pub fn enumerate_concepts(ctx: &FormalContext) -> Vec<Concept> {
    concepts(ctx).collect()
}

/// Checks that the concept lattice of `K(L_n)` is order-isomorphic to `L_n`,
/// using the map sending each partition `α` to the concept generated by the
/// join-irreducibles below it.
pub fn concept_lattice_isomorphic_to_ln(n: u32) -> Result<bool> {
    if n > ISOMORPHISM_LIMIT {
        return Err(Error::SizeGuard {
            what: "isomorphism check",
            limit: ISOMORPHISM_LIMIT,
            n,
        });
    }
    let ctx = standard_context(n)?;
    let all = enumerate_concepts(&ctx);
    let partitions = enumerate_partitions(n)?;
    if all.len() != partitions.len() {
        return Ok(false);
    }
    let position: HashMap<&FixedBitSet, usize> = all
        .iter()
        .enumerate()
        .map(|(i, c)| (&c.extent, i))
        .collect();

    let mut images = Vec::with_capacity(partitions.len());
    for alpha in &partitions {
        let mut below = FixedBitSet::with_capacity(ctx.objects().len());
        for (g, obj) in ctx.objects().iter().enumerate() {
            below.set(g, obj.dominated_by(alpha)?);
        }
        // The extent of the image must already be the set of irreducibles below α.
        let c = concept_of_objects(&ctx, &below);
        if c.extent != below {
            return Ok(false);
        }
        match position.get(&c.extent) {
            Some(&i) => images.push(i),
            None => return Ok(false),
        }
    }
    let mut seen = vec![false; all.len()];
    for &i in &images {
        if std::mem::replace(&mut seen[i], true) {
            return Ok(false);
        }
    }
    for (a, alpha) in partitions.iter().enumerate() {
        for (b, beta) in partitions.iter().enumerate() {
            let in_ln = alpha.dominated_by(beta)?;
            let in_concepts = concept_leq(&all[images[a]], &all[images[b]])?;
            if in_ln != in_concepts {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
