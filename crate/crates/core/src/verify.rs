//! Property checks over a range of weights, reported one line per property.

use std::collections::HashSet;
use std::fmt;

use crate::error::Result;
use crate::fca::{
    concept_lattice_isomorphic_to_ln, enumerate_concepts, standard_context, ISOMORPHISM_LIMIT,
};
use crate::irreducibles::{
    count_closed, count_recursive, eta, join_irreducibles, meet_irreducibles,
};
use crate::lattice::{
    build_hasse, enumerate_partitions, find_pentagon, is_distributive, is_pentagon_sublattice,
    join, meet, DISTRIBUTIVITY_LIMIT,
};
use crate::oracles::{
    brute_join, brute_join_irreducibles, brute_meet, brute_meet_irreducibles, PartitionCountTable,
    BOUND_ORACLE_LIMIT, COVER_ORACLE_LIMIT,
};
use crate::par::{map_collect, Execution};
use crate::partition::Partition;

/// Caps for the checks whose cost grows with `p(n)²` or worse.
const PAIRWISE_LIMIT: u32 = 16;
const CONCEPT_LIMIT: u32 = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Largest weight actually checked; zero when the range was empty.
    pub checked_up_to: u32,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None if self.checked_up_to == 0 => write!(f, "PASS  {}  (nothing to check)", self.name),
            None => write!(f, "PASS  {}  (n <= {})", self.name, self.checked_up_to),
            Some(c) => write!(f, "FAIL  {}  {}", self.name, c),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub n_max: u32,
    pub checks: Vec<CheckOutcome>,
    /// `|J(L_n)|` for `n = 1..=n_max`.
    pub join_irreducible_counts: Vec<usize>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

type Check = fn(u32) -> Result<Option<String>>;

fn run(name: &'static str, lo: u32, hi: u32, exec: Execution, check: Check) -> CheckOutcome {
    let ns: Vec<u32> = (lo..=hi).collect();
    let results = map_collect(&ns, exec, |&n| check(n));
    let counterexample = ns.iter().zip(results).find_map(|(n, r)| match r {
        Ok(None) => None,
        Ok(Some(c)) => Some(format!("n = {n}: {c}")),
        Err(e) => Some(format!("n = {n}: error: {e}")),
    });
    CheckOutcome {
        name,
        checked_up_to: if hi >= lo { hi } else { 0 },
        counterexample,
    }
}

fn check_partition_count(n: u32) -> Result<Option<String>> {
    let expected = PartitionCountTable::new(n)?.get(n).unwrap_or_default();
    let got = enumerate_partitions(n)?.len() as u128;
    Ok((got != expected).then(|| format!("enumerated {got}, recurrence gives {expected}")))
}

fn check_cover_equivalence(n: u32) -> Result<Option<String>> {
    let all = enumerate_partitions(n)?;
    for p in &all {
        let reach: HashSet<Partition> =
            p.direct_reachable().into_iter().map(|t| t.result).collect();
        for q in &all {
            if p.covers(q)? != reach.contains(q) {
                return Ok(Some(format!("({p}) and ({q})")));
            }
        }
    }
    Ok(None)
}

fn check_conjugation(n: u32) -> Result<Option<String>> {
    let all = enumerate_partitions(n)?;
    for a in &all {
        if a.conjugate().conjugate() != *a {
            return Ok(Some(format!("({a}) is not fixed by double conjugation")));
        }
        for b in &all {
            if a.dominated_by(b)? != b.conjugate().dominated_by(&a.conjugate())? {
                return Ok(Some(format!("conjugation does not reverse ({a}) <= ({b})")));
            }
        }
    }
    Ok(None)
}

fn check_father_son(n: u32) -> Result<Option<String>> {
    // Sons of L_{n-1} must be exactly Part(n), each once.
    let mut sons = Vec::new();
    for p in enumerate_partitions(n - 1)? {
        let s = p.sons();
        sons.push(s.left);
        sons.extend(s.right);
    }
    let total = sons.len();
    let distinct: HashSet<Partition> = sons.into_iter().collect();
    let expected: HashSet<Partition> = enumerate_partitions(n)?.into_iter().collect();
    if total != distinct.len() {
        return Ok(Some(format!("{} duplicate sons", total - distinct.len())));
    }
    Ok((distinct != expected)
        .then(|| format!("{} sons for {} partitions", distinct.len(), expected.len())))
}

fn check_counts(n: u32) -> Result<Option<String>> {
    let size = join_irreducibles(n)?.len() as u64;
    let rec = count_recursive(u64::from(n));
    let closed = count_closed(u64::from(n));
    Ok((size != rec || rec != closed)
        .then(|| format!("layer {size}, recursion {rec}, closed form {closed}")))
}

fn check_layer_vs_oracle(n: u32) -> Result<Option<String>> {
    let got = join_irreducibles(n)?.members();
    let want = brute_join_irreducibles(n)?;
    Ok((got != want).then(|| {
        format!(
            "recursion gives {} members, oracle {}",
            got.len(),
            want.len()
        )
    }))
}

fn check_meet_duality(n: u32) -> Result<Option<String>> {
    let got = meet_irreducibles(n)?;
    let want = brute_meet_irreducibles(n)?;
    Ok((got != want).then(|| {
        format!(
            "conjugates give {} members, oracle {}",
            got.len(),
            want.len()
        )
    }))
}

fn check_eta(n: u32) -> Result<Option<String>> {
    let here = join_irreducibles(n)?.members();
    let next: HashSet<Partition> = join_irreducibles(n + 1)?.members().into_iter().collect();
    let mut images = HashSet::new();
    for p in &here {
        let image = eta(p)?;
        if !next.contains(&image) {
            return Ok(Some(format!(
                "eta({p}) = ({image}) is not join-irreducible"
            )));
        }
        if !images.insert(image.clone()) {
            return Ok(Some(format!("eta is not injective at ({image})")));
        }
        let s = p.sons();
        let irreducible_sons = std::iter::once(&s.left)
            .chain(s.right.as_ref())
            .filter(|q| next.contains(*q))
            .count();
        let expected = if p.parts()[0] == 2 && p.parts()[1..].iter().all(|&x| x == 1) {
            2
        } else {
            1
        };
        if irreducible_sons != expected {
            return Ok(Some(format!(
                "({p}) has {irreducible_sons} irreducible sons"
            )));
        }
    }
    Ok(None)
}

fn check_concept_count(n: u32) -> Result<Option<String>> {
    let got = enumerate_concepts(&standard_context(n)?).len() as u128;
    let want = PartitionCountTable::new(n)?.get(n).unwrap_or_default();
    Ok((got != want).then(|| format!("{got} concepts, p(n) = {want}")))
}

fn check_isomorphism(n: u32) -> Result<Option<String>> {
    Ok((!concept_lattice_isomorphic_to_ln(n)?).then(|| "not order-isomorphic".to_string()))
}

fn check_bounds(n: u32) -> Result<Option<String>> {
    let all = enumerate_partitions(n)?;
    for a in &all {
        for b in &all {
            if meet(a, b)? != brute_meet(a, b)? || join(a, b)? != brute_join(a, b)? {
                return Ok(Some(format!("bounds of ({a}) and ({b})")));
            }
        }
    }
    Ok(None)
}

fn check_structure(n: u32) -> Result<Option<String>> {
    let d = build_hasse(n)?;
    if d.is_chain() != (n <= 5) {
        return Ok(Some(format!("chain = {}", d.is_chain())));
    }
    if n <= DISTRIBUTIVITY_LIMIT && is_distributive(&d)? != (n <= 6) {
        return Ok(Some("distributivity disagrees with n <= 6".into()));
    }
    match find_pentagon(n) {
        Some(five) if !is_pentagon_sublattice(&five)? => {
            Ok(Some("pentagon is not a sublattice".into()))
        }
        None if n >= 7 => Ok(Some("no pentagon".into())),
        _ => Ok(None),
    }
}

fn check_context_duality(n: u32) -> Result<Option<String>> {
    let ctx = standard_context(n)?;
    for (g, obj) in ctx.objects().iter().enumerate() {
        for (m, attr) in ctx.attributes().iter().enumerate() {
            let g2 = ctx.object_index(&attr.conjugate());
            let m2 = ctx.attribute_index(&obj.conjugate());
            match (g2, m2) {
                (Some(g2), Some(m2)) if ctx.incidence(g, m) == ctx.incidence(g2, m2) => {}
                _ => return Ok(Some(format!("cell ({obj}, {attr})"))),
            }
        }
    }
    Ok(None)
}

/// Runs every property for `1 <= n <= n_max`, capping the expensive ones.
pub fn verify(n_max: u32, exec: Execution) -> Result<VerifyReport> {
    let upto = |cap: u32| n_max.min(cap);
    let checks = vec![
        run(
            "partition count matches recurrence",
            1,
            n_max,
            exec,
            check_partition_count,
        ),
        run(
            "cover cases agree with transition rules",
            1,
            upto(PAIRWISE_LIMIT),
            exec,
            check_cover_equivalence,
        ),
        run(
            "conjugation is an order-reversing involution",
            1,
            upto(PAIRWISE_LIMIT),
            exec,
            check_conjugation,
        ),
        run(
            "sons of L_(n-1) are exactly Part(n)",
            2,
            n_max,
            exec,
            check_father_son,
        ),
        run(
            "|J| = recursion = closed form",
            1,
            n_max,
            exec,
            check_counts,
        ),
        run(
            "recursive J(L_n) matches cover oracle",
            1,
            upto(COVER_ORACLE_LIMIT),
            exec,
            check_layer_vs_oracle,
        ),
        run(
            "M(L_n) = conjugates of J(L_n)",
            1,
            upto(COVER_ORACLE_LIMIT),
            exec,
            check_meet_duality,
        ),
        run(
            "eta injective, one irreducible son",
            3,
            upto(COVER_ORACLE_LIMIT - 1),
            exec,
            check_eta,
        ),
        run(
            "concept count equals p(n)",
            1,
            upto(CONCEPT_LIMIT),
            exec,
            check_concept_count,
        ),
        run(
            "concept lattice isomorphic to L_n",
            1,
            upto(ISOMORPHISM_LIMIT),
            exec,
            check_isomorphism,
        ),
        run(
            "meet/join match exhaustive scan",
            1,
            upto(BOUND_ORACLE_LIMIT),
            exec,
            check_bounds,
        ),
        run(
            "chain, distributivity and pentagon facts",
            1,
            upto(PAIRWISE_LIMIT),
            exec,
            check_structure,
        ),
        run(
            "context incidence symmetric under conjugation",
            1,
            upto(CONCEPT_LIMIT),
            exec,
            check_context_duality,
        ),
    ];
    let join_irreducible_counts = (1..=n_max)
        .map(|n| join_irreducibles(n).map(|l| l.len()))
        .collect::<Result<_>>()?;
    Ok(VerifyReport {
        n_max,
        checks,
        join_irreducible_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_report_passes() {
        let report = verify(8, Execution::Parallel).unwrap();
        for c in &report.checks {
            assert!(c.passed(), "{c}");
        }
        assert_eq!(
            report.join_irreducible_counts,
            vec![0, 1, 2, 4, 6, 8, 11, 14]
        );
    }

    #[test]
    fn trivial_report() {
        let report = verify(1, Execution::Sequential).unwrap();
        assert!(report.all_passed());
        let line = report
            .checks
            .iter()
            .find(|c| c.name.starts_with("sons"))
            .unwrap()
            .to_string();
        assert!(line.contains("nothing to check"));
    }
}
