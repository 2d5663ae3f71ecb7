//! Breadth-criticality: no proper minor carries a generated tangle of the
//! same breadth.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::Result;
use crate::mask::SubsetMask;
use crate::reduction::{generated_in, generated_tangle, Generated, Removal};
use crate::tangle::{breadth, Tangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome", content = "value")]
pub enum RemovalOutcome {
    NoGeneratedTangle,
    /// Several tangles of the minor contain the restricted family.
    Ambiguous(usize),
    Breadth(usize),
}

#[derive(Debug, Clone)]
pub struct CriticalityReport {
    pub breadth: usize,
    pub critical: bool,
    /// One row per removal: every element deleted, then contracted, in label
    /// order.
    pub table: Vec<(Removal, RemovalOutcome)>,
}

/// Check every single-element deletion and contraction.
pub fn is_breadth_critical_one_step(t: &Tangle) -> Result<CriticalityReport> {
    let b = breadth(t)?.value;
    let m = t.matroid();
    let removals: Vec<Removal> = m
        .ground()
        .iter()
        .flat_map(|i| [Removal::delete(m.label(i)), Removal::contract(m.label(i))])
        .collect();
    let rows = crate::par::map(&removals, |r| -> Result<RemovalOutcome> {
        Ok(match generated_tangle(t, r)? {
            Generated::None => RemovalOutcome::NoGeneratedTangle,
            Generated::Multiple(c) => RemovalOutcome::Ambiguous(c),
            Generated::Unique(g) => RemovalOutcome::Breadth(breadth(&g)?.value),
        })
    });
    let table = removals
        .into_iter()
        .zip(rows)
        .map(|(r, o)| o.map(|o| (r, o)))
        .collect::<Result<Vec<_>>>()?;
    let critical = table
        .iter()
        .all(|(_, o)| !matches!(o, RemovalOutcome::Breadth(x) if *x >= b));
    Ok(CriticalityReport {
        breadth: b,
        critical,
        table,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecursiveCriticality {
    Critical {
        minors_checked: u64,
    },
    /// A proper minor `M \ delete / contract` with a generated tangle of
    /// breadth at least the original.
    NotCritical {
        delete: Vec<String>,
        contract: Vec<String>,
        breadth: usize,
    },
    /// The node budget ran out first.
    Incomplete {
        minors_checked: u64,
    },
}

/// Check every proper minor reachable by removal sequences, skipping minors
/// already seen (same removed set and same rank table), until `node_budget`
/// minors have been examined.
pub fn is_breadth_critical_recursive(t: &Tangle, node_budget: u64) -> Result<RecursiveCriticality> {
    let b = breadth(t)?.value;
    let m = t.matroid();
    let n = m.len();
    let mut seen: HashSet<(SubsetMask, u64)> = HashSet::new();
    let mut stack: Vec<(SubsetMask, SubsetMask)> = Vec::new();
    let push_children = |stack: &mut Vec<(SubsetMask, SubsetMask)>, d: SubsetMask, c: SubsetMask| {
        let rest = SubsetMask::full(n) - d - c;
        for i in rest.iter().collect::<Vec<_>>().into_iter().rev() {
            stack.push((d, c.with(i)));
            stack.push((d.with(i), c));
        }
    };
    push_children(&mut stack, SubsetMask::EMPTY, SubsetMask::EMPTY);
    let mut checked = 0u64;
    while let Some((d, c)) = stack.pop() {
        let minor = m.minor(d, c)?;
        if !seen.insert((d | c, minor.fingerprint()?)) {
            continue;
        }
        if checked >= node_budget {
            return Ok(RecursiveCriticality::Incomplete {
                minors_checked: checked,
            });
        }
        checked += 1;
        if let Generated::Unique(g) = generated_in(t, &minor)? {
            let bg = breadth(&g)?.value;
            if bg >= b {
                return Ok(RecursiveCriticality::NotCritical {
                    delete: m.labels_of(d),
                    contract: m.labels_of(c),
                    breadth: bg,
                });
            }
        }
        push_children(&mut stack, d, c);
    }
    Ok(RecursiveCriticality::Critical {
        minors_checked: checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;
    use crate::tangle::enumerate_tangles;

    #[test]
    fn coloop_makes_it_non_critical() {
        let u = Matroid::uniform(3, 7).unwrap();
        let z = Matroid::uniform_labeled(1, vec!["z".into()]).unwrap();
        let m = Matroid::direct_sum(&[u, z]).unwrap();
        let t = &enumerate_tangles(&m, 4).unwrap()[0];
        let rep = is_breadth_critical_one_step(t).unwrap();
        assert!(!rep.critical);
        let row = rep
            .table
            .iter()
            .find(|(r, _)| *r == Removal::delete("z"))
            .unwrap();
        assert_eq!(row.1, RemovalOutcome::Breadth(7));
    }

    #[test]
    fn u37_is_critical() {
        let m = Matroid::uniform(3, 7).unwrap();
        let t = &enumerate_tangles(&m, 4).unwrap()[0];
        let rep = is_breadth_critical_one_step(t).unwrap();
        assert!(rep.critical);
        assert_eq!(rep.table.len(), 14);
        assert!(matches!(
            is_breadth_critical_recursive(t, 100_000).unwrap(),
            RecursiveCriticality::Critical { .. }
        ));
    }
}
