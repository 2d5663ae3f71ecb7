//! Seeded instance pools.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus;
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::tangle::{enumerate_tangles, Tangle};

/// Which instances a suite runs over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selector {
    pub min_elements: usize,
    pub max_elements: usize,
    /// Random draws per generator family.
    pub per_family: usize,
    pub seed: u64,
    /// Include the named corpus entries.
    pub corpus: bool,
}

pub const DEFAULT_SEED: u64 = 0x5eed_7a61;

impl Default for Selector {
    fn default() -> Self {
        Selector {
            min_elements: 0,
            max_elements: 12,
            per_family: 10,
            seed: DEFAULT_SEED,
            corpus: true,
        }
    }
}

impl Selector {
    /// Instances with 13 or 14 elements.
    pub fn large() -> Self {
        Selector {
            min_elements: 13,
            max_elements: 14,
            ..Selector::default()
        }
    }

    /// Instances with at most `n` elements.
    pub fn up_to(n: usize) -> Self {
        Selector {
            max_elements: n,
            ..Selector::default()
        }
    }
}

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 5;

pub struct Instance {
    pub name: String,
    pub matroid: Matroid,
    tangles: [OnceLock<std::result::Result<Vec<Tangle>, String>>; MAX_ORDER + 1],
}

impl Instance {
    pub fn new(name: impl Into<String>, matroid: Matroid) -> Self {
        Instance {
            name: name.into(),
            matroid,
            tangles: Default::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.matroid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matroid.is_empty()
    }

    /// All tangles of order `k`, computed once.
    pub fn tangles(&self, k: usize) -> Result<&[Tangle]> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&k) {
            return Err(Error::domain(format!(
                "suite orders run from {MIN_ORDER} to {MAX_ORDER}, got {k}"
            )));
        }
        match self.tangles[k].get_or_init(|| enumerate_tangles(&self.matroid, k).map_err(|e| e.to_string())) {
            Ok(v) => Ok(v),
            Err(e) => Err(Error::resource("tangle enumeration", e.clone())),
        }
    }

    /// Every tangle of order `lo..=hi`.
    pub fn tangles_between(&self, lo: usize, hi: usize) -> Result<Vec<&Tangle>> {
        let mut out = Vec::new();
        for k in lo..=hi {
            out.extend(self.tangles(k)?.iter());
        }
        Ok(out)
    }
}

pub struct Pool {
    pub selector: Selector,
    pub instances: Vec<Instance>,
}

type Family = (&'static str, std::ops::RangeInclusive<usize>, fn(&mut ChaCha8Rng, usize) -> Result<(String, Matroid)>);

fn single(m: &Matroid, x: usize) -> SubsetMask {
    m.closure(SubsetMask::singleton(x))
}

fn families() -> Vec<Family> {
    vec![
        ("binary", 6..=12, |rng, n| {
            let r = rng.gen_range(3..=5.min(n - 2));
            let m = corpus::random_binary_matroid(n, r, rng.gen())?;
            Ok((format!("n{n}r{r}"), m))
        }),
        ("ternary", 6..=12, |rng, n| {
            let r = rng.gen_range(3..=5.min(n - 2));
            let m = corpus::random_linear_matroid(3, n, r, rng.gen())?;
            Ok((format!("n{n}r{r}"), m))
        }),
        ("gf5", 6..=12, |rng, n| {
            let r = rng.gen_range(3..=4);
            let m = corpus::random_linear_matroid(5, n, r, rng.gen())?;
            Ok((format!("n{n}r{r}"), m))
        }),
        ("plane", 7..=14, |rng, n| {
            let m = corpus::random_plane_configuration(n, 4, 0.5, rng.gen())?;
            Ok((format!("n{n}"), m))
        }),
        ("long-line", 8..=13, |rng, n| {
            let m = corpus::random_plane_configuration(n, 6, 0.7, rng.gen())?;
            Ok((format!("n{n}"), m))
        }),
        ("long-line-dual", 8..=12, |rng, n| {
            let m = corpus::random_plane_configuration(n, 6, 0.7, rng.gen())?;
            Ok((format!("n{n}"), m.dual()))
        }),
        ("graph", 6..=12, |rng, n| {
            let v = rng.gen_range(5..=7usize);
            let e = n.min(v * (v - 1) / 2);
            let m = corpus::random_graphic_matroid(v, e, rng.gen())?;
            Ok((format!("v{v}e{e}"), m))
        }),
        ("parallel", 8..=12, |rng, n| {
            let base = corpus::random_plane_configuration(n - 1, 5, 0.5, rng.gen())?;
            let x = rng.gen_range(0..n - 1);
            let m = base.principal_extension(single(&base, x), "q")?;
            Ok((format!("n{n}x{x}"), m))
        }),
        ("series", 8..=12, |rng, n| {
            let base = corpus::random_linear_matroid(3, n - 1, 4.min(n - 3), rng.gen())?.dual();
            let x = rng.gen_range(0..n - 1);
            let m = base.principal_extension(single(&base, x), "q")?.dual();
            Ok((format!("n{n}x{x}"), m))
        }),
        ("glued", 10..=12, |rng, n| {
            let left = rng.gen_range(5..=n - 5);
            let ranks = [rng.gen_range(3..=4), rng.gen_range(3..=4)];
            let m = corpus::random_glued_matroid(5, [left, n - left], ranks, rng.gen())?;
            Ok((format!("n{n}l{left}r{}{}", ranks[0], ranks[1]), m))
        }),
        ("coloop-sum", 7..=12, |rng, n| {
            let extra = rng.gen_range(1..=2usize);
            let u = Matroid::uniform(3, n - extra)?;
            let z = Matroid::uniform_labeled(1, (1..=extra).map(|i| format!("z{i}")).collect())?;
            Ok((format!("n{n}"), Matroid::direct_sum(&[u, z])?))
        }),
    ]
}

impl Pool {
    pub fn new(selector: &Selector) -> Result<Pool> {
        let keep = |n: usize| (selector.min_elements..=selector.max_elements).contains(&n);
        let mut instances = Vec::new();
        if selector.corpus {
            for e in corpus::entries() {
                let m = e.build()?;
                if keep(m.len()) && m.len() <= crate::limits::scan_cap() {
                    instances.push(Instance::new(e.name, m));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(selector.seed);
        for (family, sizes, build) in families() {
            let lo = (*sizes.start()).max(selector.min_elements);
            let hi = (*sizes.end()).min(selector.max_elements);
            for i in 0..selector.per_family {
                // One draw per slot whether or not the size is kept, so that
                // changing the size window does not reshuffle other families.
                let n_draw = rng.gen_range(*sizes.start()..=*sizes.end());
                let mut sub = ChaCha8Rng::seed_from_u64(rng.gen());
                if lo > hi {
                    continue;
                }
                let n = if (lo..=hi).contains(&n_draw) { n_draw } else { lo + (n_draw % (hi - lo + 1)) };
                let (tag, m) = build(&mut sub, n)?;
                instances.push(Instance::new(format!("{family}-{i}-{tag}"), m));
            }
        }
        Ok(Pool {
            selector: selector.clone(),
            instances,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pools_are_reproducible_and_sized() {
        let a = Pool::new(&Selector::default()).unwrap();
        let b = Pool::new(&Selector::default()).unwrap();
        assert_eq!(a.instances.len(), b.instances.len());
        for (x, y) in a.instances.iter().zip(&b.instances) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.matroid.expr(), y.matroid.expr());
            assert!(x.len() <= 12);
        }
        let large = Pool::new(&Selector::large()).unwrap();
        assert!(large.instances.iter().all(|i| (13..=14).contains(&i.len())));
        assert!(large.instances.iter().any(|i| i.name == "critical_s6"));
    }
}
