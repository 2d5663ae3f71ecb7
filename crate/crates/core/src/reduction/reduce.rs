//! Breadth-preserving single-element steps down to a weakly 4-connected
//! minor.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::{Matroid, MatroidExpr};
use crate::reduction::{generated_in, generated_tangle, Generated, Removal, RemovalKind};
use crate::tangle::{breadth, tangle_rank_table, Tangle, TangleJson};

/// Why a step was chosen, in priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Rule {
    /// Delete a loop of the tangle matroid.
    #[serde(rename = "rank0-loop")]
    Rank0Loop,
    /// Remove an element from the small side of a 2-separation, keeping the
    /// minor connected.
    #[serde(rename = "non3conn-tutte")]
    Non3connTutte,
    /// Delete a guts element of a rank-2 flat of the tangle matroid that has
    /// rank 2 in the matroid.
    #[serde(rename = "rank2-guts")]
    Rank2Guts,
    /// The same in the dual: contract a coguts element.
    #[serde(rename = "dual-of-any")]
    DualOfAny,
    /// Remove an element so that the minor stays 3-connected and the rest of
    /// the flat keeps at least two interior elements.
    #[serde(rename = "interior-keepint")]
    InteriorKeepint,
    /// First single-element removal, in label order, that generates a tangle
    /// of the same breadth.
    #[serde(rename = "fallback-exhaustive")]
    FallbackExhaustive,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("plain enum");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Debug, Clone)]
pub struct ReductionStep {
    pub removal: Removal,
    pub rule: Rule,
    pub breadth: usize,
    pub tangle: Tangle,
}

#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub initial_breadth: usize,
    pub steps: Vec<ReductionStep>,
    pub final_matroid: Matroid,
    pub final_tangle: Tangle,
    /// Rule candidates that did not validate and were skipped.
    pub rejected_candidates: usize,
}

#[derive(Serialize)]
struct StepJson<'a> {
    element: &'a str,
    kind: RemovalKind,
    rule: Rule,
    breadth: usize,
}

#[derive(Serialize)]
struct TraceJson<'a> {
    steps: Vec<StepJson<'a>>,
    #[serde(rename = "final")]
    final_matroid: &'a MatroidExpr,
    final_tangle: TangleJson,
}

impl ReductionTrace {
    pub fn to_json(&self) -> serde_json::Value {
        let j = TraceJson {
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    element: &s.removal.element,
                    kind: s.removal.kind,
                    rule: s.rule,
                    breadth: s.breadth,
                })
                .collect(),
            final_matroid: self.final_matroid.expr(),
            final_tangle: self.final_tangle.to_json(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    /// Whether `original` generates the final tangle in the final minor
    /// directly, without the intermediate steps.
    pub fn generated_directly_by(&self, original: &Tangle) -> Result<bool> {
        Ok(generated_in(original, &self.final_matroid)? == Generated::Unique(self.final_tangle.clone()))
    }
}

/// Accept `removal` when it generates a unique tangle of breadth `b`.
fn accept(t: &Tangle, removal: &Removal, b: usize) -> Result<Option<Tangle>> {
    match generated_tangle(t, removal)? {
        Generated::Unique(g) if breadth(&g)?.value == b => Ok(Some(g)),
        _ => Ok(None),
    }
}

fn candidates(t: &Tangle) -> Result<Vec<(Rule, Removal)>> {
    let m = t.matroid();
    let e = m.ground();
    let label = |i: usize| m.label(i).to_string();
    let mut out = Vec::new();

    let ranks = tangle_rank_table(t)?;
    for x in e.iter() {
        if ranks[SubsetMask::singleton(x).index()] == 0 {
            out.push((Rule::Rank0Loop, Removal::delete(label(x))));
        }
    }
    if !out.is_empty() {
        return Ok(out);
    }

    if let Some(a) = m.svec_violation(&[0, 1])? {
        let x = if t.is_weak(a) { a } else { e - a };
        for i in x.iter() {
            let single = SubsetMask::singleton(i);
            for (kind, n) in [
                (RemovalKind::Delete, m.delete(single)?),
                (RemovalKind::Contract, m.contract(single)?),
            ] {
                if n.is_connected()? {
                    out.push((
                        Rule::Non3connTutte,
                        Removal {
                            element: label(i),
                            kind,
                        },
                    ));
                }
            }
        }
        return Ok(out);
    }

    let lam = m.lambda_table()?;
    let sep = m
        .canonical_separations(2)?
        .into_iter()
        .find(|&a| lam[a.index()] == 2 && a.len() >= 5 && (e - a).len() >= 5);
    let Some(a) = sep else {
        return Ok(out);
    };
    let x = if t.is_weak(a) { a } else { e - a };
    let rx = ranks[x.index()];
    let flat = e
        .iter()
        .filter(|&i| ranks[x.with(i).index()] == rx)
        .fold(x, |f, i| f.with(i));
    let witness = breadth(t)?.witness;
    let profile = m.boundary_profile(flat)?;
    if m.r(flat) == 2 {
        for i in (profile.guts - witness).iter() {
            out.push((Rule::Rank2Guts, Removal::delete(label(i))));
        }
    } else if m.r_dual(flat) == 2 {
        for i in (profile.coguts - witness).iter() {
            out.push((Rule::DualOfAny, Removal::contract(label(i))));
        }
    } else {
        for i in flat.iter() {
            let single = SubsetMask::singleton(i);
            for (kind, n) in [
                (RemovalKind::Delete, m.delete(single)?),
                (RemovalKind::Contract, m.contract(single)?),
            ] {
                if !n.is_three_connected()? {
                    continue;
                }
                let kept: Vec<usize> = e.without(i).iter().collect();
                let rest = flat.without(i).compress(&kept);
                if n.boundary_profile(rest)?.interior.len() >= 2 {
                    out.push((
                        Rule::InteriorKeepint,
                        Removal {
                            element: label(i),
                            kind,
                        },
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn find_step(t: &Tangle, b: usize, rejected: &mut usize) -> Result<Option<(Rule, Removal, Tangle)>> {
    for (rule, removal) in candidates(t)? {
        if let Some(g) = accept(t, &removal, b)? {
            return Ok(Some((rule, removal, g)));
        }
        *rejected += 1;
    }
    let m = t.matroid();
    for i in m.ground().iter() {
        for removal in [Removal::delete(m.label(i)), Removal::contract(m.label(i))] {
            if let Some(g) = accept(t, &removal, b)? {
                return Ok(Some((Rule::FallbackExhaustive, removal, g)));
            }
        }
    }
    Ok(None)
}

/// Repeatedly remove single elements while keeping a generated tangle of the
/// same breadth, until the matroid is weakly 4-connected.
pub fn reduce_to_weakly_4_connected(t: &Tangle) -> Result<ReductionTrace> {
    if t.order() < 4 {
        return Err(Error::domain(format!(
            "reduction needs a tangle of order at least 4, got {}",
            t.order()
        )));
    }
    let b = breadth(t)?.value;
    let mut cur = t.clone();
    let mut steps = Vec::new();
    let mut rejected = 0;
    while !cur.matroid().is_weakly_four_connected()? {
        let Some((rule, removal, next)) = find_step(&cur, b, &mut rejected)? else {
            return Err(Error::internal(
                "no breadth-preserving single-element removal from a matroid that is not weakly 4-connected",
                format!(
                    "matroid: {}\ntangle: {}\nbreadth: {b}\nsteps so far: {}",
                    cur.matroid().expr().to_json(),
                    serde_json::to_string(&cur.to_json()).unwrap_or_default(),
                    steps
                        .iter()
                        .map(|s: &ReductionStep| s.removal.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            ));
        };
        steps.push(ReductionStep {
            removal,
            rule,
            breadth: b,
            tangle: next.clone(),
        });
        cur = next;
    }
    Ok(ReductionTrace {
        initial_breadth: b,
        steps,
        final_matroid: cur.matroid().clone(),
        final_tangle: cur,
        rejected_candidates: rejected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::enumerate_tangles;

    #[test]
    fn golden_is_already_reduced() {
        let m = crate::corpus::breadth_critical_matroid(6).unwrap();
        let t = &enumerate_tangles(&m, 4).unwrap()[0];
        let tr = reduce_to_weakly_4_connected(t).unwrap();
        assert!(tr.steps.is_empty());
        assert_eq!(tr.initial_breadth, 12);
    }

    #[test]
    fn coloop_is_removed() {
        let u = Matroid::uniform(3, 7).unwrap();
        let z = Matroid::uniform_labeled(1, vec!["z".into()]).unwrap();
        let m = Matroid::direct_sum(&[u.clone(), z]).unwrap();
        let t = &enumerate_tangles(&m, 4).unwrap()[0];
        let tr = reduce_to_weakly_4_connected(t).unwrap();
        assert_eq!(tr.steps.len(), 1);
        assert_eq!(tr.steps[0].rule, Rule::Rank0Loop);
        assert_eq!(tr.steps[0].removal, Removal::delete("z"));
        assert_eq!(tr.steps[0].breadth, 7);
        assert!(tr.final_matroid.same_as(&u).unwrap());
        assert!(tr.generated_directly_by(t).unwrap());
        let j = tr.to_json();
        assert_eq!(j["steps"][0]["rule"], "rank0-loop");
        assert_eq!(j["steps"][0]["kind"], "delete");
    }

    #[test]
    fn order_three_is_rejected() {
        let t = &enumerate_tangles(&crate::corpus::k4(), 3).unwrap()[0];
        assert!(matches!(reduce_to_weakly_4_connected(t), Err(Error::Domain(_))));
    }
}
