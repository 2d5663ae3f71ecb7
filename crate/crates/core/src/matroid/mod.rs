//! Finite matroids with exact rank oracles.
//!
//! A [`Matroid`] is an immutable, cheaply clonable handle. Rank queries go
//! through a backend oracle (uniform, graphic, linear, explicit table, or a
//! derived construction) and, for ground sets within
//! [`limits::scan_cap`](crate::limits::scan_cap), through a lazily built
//! rank table.

mod connectivity;
mod expr;

pub use connectivity::{BoundaryProfile, ConnectivityReport, SvecVerdict};
pub use expr::{default_labels, MatroidExpr};

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::limits;
use crate::mask::{SubsetMask, MAX_ELEMENTS};

/// One ground-set element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    pub label: String,
    pub index: usize,
}

#[derive(Clone)]
pub struct Matroid(Arc<Inner>);

struct Inner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    oracle: Oracle,
    expr: MatroidExpr,
    full_rank: usize,
    table: OnceLock<Arc<[u8]>>,
    lambda: OnceLock<Arc<[u8]>>,
}

enum Oracle {
    Uniform {
        rank: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Linear {
        prime: u64,
        columns: Vec<Vec<u64>>,
    },
    Table(Arc<[u8]>),
    Dual(Matroid),
    Minor {
        of: Matroid,
        kept: Vec<usize>,
        contracted: SubsetMask,
        contracted_rank: usize,
    },
    DirectSum {
        parts: Vec<Matroid>,
        offsets: Vec<usize>,
    },
    PrincipalExtension {
        of: Matroid,
        flat: SubsetMask,
    },
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(rank {}, {:?})",
            self.full_rank(),
            self.0.labels
        )
    }
}

fn check_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    if labels.len() > MAX_ELEMENTS {
        return Err(Error::structural(format!(
            "{} elements exceed the {MAX_ELEMENTS}-element limit",
            labels.len()
        )));
    }
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() {
            return Err(Error::structural("empty element label"));
        }
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::structural(format!("duplicate label {l:?}")));
        }
    }
    Ok(index)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Rank over GF(p) of the selected columns.
fn linear_rank(prime: u64, columns: &[Vec<u64>], a: SubsetMask) -> usize {
    let mut rows: Vec<Vec<u64>> = a.iter().map(|i| columns[i].clone()).collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], prime - 2, prime);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = (row[col] as u128 * inv as u128 % prime as u128) as u64;
                for (x, &p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    let sub = (factor as u128 * p as u128 % prime as u128) as u64;
                    *x = (*x + prime - sub) % prime;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn forest_rank(vertices: usize, edges: &[(usize, usize)], a: SubsetMask) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut rank = 0;
    for i in a.iter() {
        let (u, v) = edges[i];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            rank += 1;
        }
    }
    rank
}

impl Matroid {
    fn from_parts(labels: Vec<String>, oracle: Oracle, expr: MatroidExpr) -> Result<Self> {
        let index = check_labels(&labels)?;
        let mut inner = Inner {
            labels,
            index,
            oracle,
            expr,
            full_rank: 0,
            table: OnceLock::new(),
            lambda: OnceLock::new(),
        };
        let full = SubsetMask::full(inner.labels.len());
        inner.full_rank = Matroid::direct_rank(&inner.oracle, inner.labels.len(), full);
        Ok(Matroid(Arc::new(inner)))
    }

    /// `U_{rank,size}` on the default labels `e1..en`.
    pub fn uniform(rank: usize, size: usize) -> Result<Self> {
        Matroid::uniform_labeled(rank, default_labels(size))
    }

    pub fn uniform_labeled(rank: usize, labels: Vec<String>) -> Result<Self> {
        let size = labels.len();
        if rank > size {
            return Err(Error::structural(format!(
                "uniform matroid of rank {rank} on {size} elements"
            )));
        }
        let expr = MatroidExpr::Uniform {
            rank,
            size,
            labels: (labels != default_labels(size)).then(|| labels.clone()),
        };
        Matroid::from_parts(labels, Oracle::Uniform { rank }, expr)
    }

    /// Cycle matroid of a multigraph. Edge `i` gets `labels[i]`; an edge with
    /// equal endpoints is a loop.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)], labels: Vec<String>) -> Result<Self> {
        if labels.len() != edges.len() {
            return Err(Error::structural(format!(
                "graphic: {} labels for {} edges",
                labels.len(),
                edges.len()
            )));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::structural(format!(
                "edge ({u},{v}) out of range for {vertices} vertices"
            )));
        }
        let expr = MatroidExpr::Graphic {
            vertices,
            edges: edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels: (labels != default_labels(edges.len())).then(|| labels.clone()),
        };
        Matroid::from_parts(
            labels,
            Oracle::Graphic {
                vertices,
                edges: edges.to_vec(),
            },
            expr,
        )
    }

    /// Column matroid of a matrix over GF(`prime`); `columns[i]` is the
    /// vector for element `i`.
    pub fn linear(prime: u64, columns: Vec<Vec<u64>>, labels: Vec<String>) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::structural(format!("{prime} is not prime")));
        }
        if labels.len() != columns.len() {
            return Err(Error::structural(format!(
                "linear: {} labels for {} columns",
                labels.len(),
                columns.len()
            )));
        }
        if let Some(w) = columns.first().map(Vec::len) {
            if columns.iter().any(|c| c.len() != w) {
                return Err(Error::structural("linear: columns of unequal length"));
            }
        }
        if columns.iter().flatten().any(|&x| x >= prime) {
            return Err(Error::structural(format!(
                "linear: entry not reduced modulo {prime}"
            )));
        }
        let expr = MatroidExpr::Linear {
            prime,
            columns: columns.clone(),
            labels: (labels != default_labels(columns.len())).then(|| labels.clone()),
        };
        Matroid::from_parts(labels, Oracle::Linear { prime, columns }, expr)
    }

    /// Explicit rank table, subset-indexed with bit `i` for `labels[i]`.
    /// The rank axioms are checked in full.
    pub fn from_rank_table(labels: Vec<String>, ranks: Vec<u8>) -> Result<Self> {
        let n = labels.len();
        limits::check_table(n, "rank table")?;
        if ranks.len() != 1usize << n {
            return Err(Error::structural(format!(
                "rank table has {} entries, expected {}",
                ranks.len(),
                1usize << n
            )));
        }
        validate_rank_table(n, &ranks)?;
        let table: Arc<[u8]> = ranks.clone().into();
        let expr = MatroidExpr::RankTable { labels: labels.clone(), ranks };
        let m = Matroid::from_parts(labels, Oracle::Table(table.clone()), expr)?;
        let _ = m.0.table.set(table);
        Ok(m)
    }

    /// Rank table from a rank function, without re-validating the axioms.
    pub(crate) fn from_rank_fn_unchecked(
        labels: Vec<String>,
        rank: impl Fn(SubsetMask) -> usize,
    ) -> Result<Self> {
        let n = labels.len();
        limits::check_table(n, "rank table")?;
        let ranks: Vec<u8> = (0..1u64 << n).map(|a| rank(SubsetMask(a)) as u8).collect();
        let table: Arc<[u8]> = ranks.clone().into();
        let expr = MatroidExpr::RankTable { labels: labels.clone(), ranks };
        let m = Matroid::from_parts(labels, Oracle::Table(table.clone()), expr)?;
        let _ = m.0.table.set(table);
        Ok(m)
    }

    pub fn dual(&self) -> Matroid {
        if let Oracle::Dual(inner) = &self.0.oracle {
            return inner.clone();
        }
        let expr = MatroidExpr::Dual {
            of: Box::new(self.expr().clone()),
        };
        Matroid::from_parts(self.0.labels.clone(), Oracle::Dual(self.clone()), expr)
            .expect("labels already validated")
    }

    /// `M \ D / C`, keeping labels.
    pub fn minor(&self, delete: SubsetMask, contract: SubsetMask) -> Result<Matroid> {
        self.check_mask(delete)?;
        self.check_mask(contract)?;
        if !delete.is_disjoint(contract) {
            return Err(Error::structural(format!(
                "deletion and contraction sets overlap in {:?}",
                self.labels_of(delete & contract)
            )));
        }
        if delete.is_empty() && contract.is_empty() {
            return Ok(self.clone());
        }
        // Flatten minors of minors onto the same base matroid.
        let (base, kept_here, base_deleted, base_contracted) = match &self.0.oracle {
            Oracle::Minor {
                of,
                kept,
                contracted,
                ..
            } => {
                let base_deleted =
                    SubsetMask::full(of.len()) - SubsetMask::from_indices(kept.iter().copied()) - *contracted;
                (of.clone(), kept.clone(), base_deleted, *contracted)
            }
            _ => (
                self.clone(),
                (0..self.len()).collect::<Vec<_>>(),
                SubsetMask::EMPTY,
                SubsetMask::EMPTY,
            ),
        };
        let d = base_deleted | delete.expand(&kept_here);
        let c = base_contracted | contract.expand(&kept_here);
        let removed = d | c;
        let kept: Vec<usize> = (0..base.len()).filter(|&i| !removed.contains(i)).collect();
        let labels: Vec<String> = kept.iter().map(|&i| base.0.labels[i].clone()).collect();
        let mut expr = base.expr().clone();
        if !d.is_empty() {
            expr = MatroidExpr::Delete {
                of: Box::new(expr),
                elements: base.labels_of(d),
            };
        }
        if !c.is_empty() {
            expr = MatroidExpr::Contract {
                of: Box::new(expr),
                elements: base.labels_of(c),
            };
        }
        let contracted_rank = base.r(c);
        Matroid::from_parts(
            labels,
            Oracle::Minor {
                of: base,
                kept,
                contracted: c,
                contracted_rank,
            },
            expr,
        )
    }

    pub fn delete(&self, d: SubsetMask) -> Result<Matroid> {
        self.minor(d, SubsetMask::EMPTY)
    }

    pub fn contract(&self, c: SubsetMask) -> Result<Matroid> {
        self.minor(SubsetMask::EMPTY, c)
    }

    /// `M | A`.
    pub fn restrict(&self, a: SubsetMask) -> Result<Matroid> {
        self.check_mask(a)?;
        self.delete(a.complement(self.len()))
    }

    /// Direct sum. Colliding labels in part `i` (1-based) get the suffix
    /// `#i`, repeated until unique; rebuilding the expression reproduces the
    /// same renaming.
    pub fn direct_sum(parts: &[Matroid]) -> Result<Matroid> {
        let mut labels: Vec<String> = Vec::new();
        let mut seen: std::collections::HashSet<String> = Default::default();
        let mut offsets = Vec::with_capacity(parts.len());
        for (pi, p) in parts.iter().enumerate() {
            offsets.push(labels.len());
            for l in &p.0.labels {
                let mut name = l.clone();
                while seen.contains(&name) {
                    name = format!("{name}#{}", pi + 1);
                }
                seen.insert(name.clone());
                labels.push(name);
            }
        }
        let expr = MatroidExpr::DirectSum {
            parts: parts.iter().map(|p| p.expr().clone()).collect(),
        };
        Matroid::from_parts(
            labels,
            Oracle::DirectSum {
                parts: parts.to_vec(),
                offsets,
            },
            expr,
        )
    }

    /// Add `new_label` freely on the closed set `flat`. An empty flat adds a
    /// coloop.
    pub fn principal_extension(&self, flat: SubsetMask, new_label: &str) -> Result<Matroid> {
        self.check_mask(flat)?;
        if self.0.index.contains_key(new_label) {
            return Err(Error::structural(format!("label {new_label:?} already present")));
        }
        if self.closure(flat) != flat {
            return Err(Error::precondition(format!(
                "principal extension: {:?} is not closed",
                self.labels_of(flat)
            )));
        }
        let mut labels = self.0.labels.clone();
        labels.push(new_label.to_string());
        let expr = MatroidExpr::PrincipalExtension {
            of: Box::new(self.expr().clone()),
            flat: self.labels_of(flat),
            new: new_label.to_string(),
        };
        Matroid::from_parts(
            labels,
            Oracle::PrincipalExtension {
                of: self.clone(),
                flat,
            },
            expr,
        )
    }

    /// Rank-`t` truncation: `min(r(A), t)`.
    pub fn truncation(&self, t: usize) -> Result<Matroid> {
        Matroid::from_rank_fn_unchecked(self.0.labels.clone(), |a| self.r(a).min(t))
    }

    // ----- ground set -----

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn ground(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn elements(&self) -> Vec<Element> {
        self.0
            .labels
            .iter()
            .enumerate()
            .map(|(index, label)| Element {
                label: label.clone(),
                index,
            })
            .collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    /// Mask of the given labels; unknown labels are a structural error.
    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<SubsetMask> {
        let mut m = SubsetMask::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let i = self
                .index_of(l)
                .ok_or_else(|| Error::structural(format!("unknown element label {l:?}")))?;
            m = m.with(i);
        }
        Ok(m)
    }

    /// Labels of a mask, in ground-set order.
    pub fn labels_of(&self, a: SubsetMask) -> Vec<String> {
        a.iter().map(|i| self.0.labels[i].clone()).collect()
    }

    pub fn expr(&self) -> &MatroidExpr {
        &self.0.expr
    }

    pub fn check_mask(&self, a: SubsetMask) -> Result<()> {
        if a.is_subset_of(self.ground()) {
            Ok(())
        } else {
            Err(Error::structural(format!(
                "mask {:#x} has bits outside the {}-element ground set",
                a.0,
                self.len()
            )))
        }
    }

    // ----- rank -----

    fn direct_rank(oracle: &Oracle, n: usize, a: SubsetMask) -> usize {
        match oracle {
            Oracle::Uniform { rank } => a.len().min(*rank),
            Oracle::Graphic { vertices, edges } => forest_rank(*vertices, edges, a),
            Oracle::Linear { prime, columns } => linear_rank(*prime, columns, a),
            Oracle::Table(t) => t[a.index()] as usize,
            Oracle::Dual(m) => a.len() + m.r(a.complement(n)) - m.full_rank(),
            Oracle::Minor {
                of,
                kept,
                contracted,
                contracted_rank,
            } => of.r(a.expand(kept) | *contracted) - contracted_rank,
            Oracle::DirectSum { parts, offsets } => parts
                .iter()
                .zip(offsets)
                .map(|(p, &off)| p.r(SubsetMask(a.0.checked_shr(off as u32).unwrap_or(0) & p.ground().0)))
                .sum(),
            Oracle::PrincipalExtension { of, flat } => {
                let old = a.without(n - 1);
                let r = of.r(old);
                // The empty flat adds a coloop.
                if !a.contains(n - 1) || (!flat.is_empty() && of.r(old | *flat) == r) {
                    r
                } else {
                    r + 1
                }
            }
        }
    }

    fn build_table(&self) -> Arc<[u8]> {
        let n = self.len();
        let size = 1usize << n;
        let t: Vec<u8> = match &self.0.oracle {
            Oracle::Uniform { rank } => (0..size)
                .map(|a| (a.count_ones() as usize).min(*rank) as u8)
                .collect(),
            Oracle::Table(t) => return t.clone(),
            Oracle::Dual(m) => {
                let parent = m.table_unchecked();
                let full = size - 1;
                let rm = m.full_rank();
                (0..size)
                    .map(|a| (a.count_ones() as usize + parent[full ^ a] as usize - rm) as u8)
                    .collect()
            }
            _ => (0..size as u64)
                .map(|a| Matroid::direct_rank(&self.0.oracle, n, SubsetMask(a)) as u8)
                .collect(),
        };
        t.into()
    }

    fn table_unchecked(&self) -> &Arc<[u8]> {
        self.0.table.get_or_init(|| self.build_table())
    }

    /// The full rank table (one byte per subset). Refused above the table cap.
    pub fn rank_table(&self) -> Result<Arc<[u8]>> {
        limits::check_table(self.len(), "rank table")?;
        Ok(self.table_unchecked().clone())
    }

    /// Rank of `a`, with no range check. Uses the rank table when the ground
    /// set is within the scan cap.
    #[inline]
    pub fn r(&self, a: SubsetMask) -> usize {
        debug_assert!(a.is_subset_of(self.ground()));
        if let Some(t) = self.0.table.get() {
            return t[a.index()] as usize;
        }
        if self.len() <= limits::scan_cap() {
            return self.table_unchecked()[a.index()] as usize;
        }
        Matroid::direct_rank(&self.0.oracle, self.len(), a)
    }

    /// Rank of `a`; structural error if `a` leaves the ground set.
    pub fn rank(&self, a: SubsetMask) -> Result<usize> {
        self.check_mask(a)?;
        Ok(self.r(a))
    }

    pub fn full_rank(&self) -> usize {
        self.0.full_rank
    }

    /// Corank `r*(A) = |A| - r(M) + r(E - A)`.
    #[inline]
    pub fn r_dual(&self, a: SubsetMask) -> usize {
        a.len() + self.r(a.complement(self.len())) - self.full_rank()
    }

    /// `λ(A) = r(A) + r(E - A) - r(M)`, unchecked.
    #[inline]
    pub fn lam(&self, a: SubsetMask) -> usize {
        if let Some(t) = self.0.lambda.get() {
            return t[a.index()] as usize;
        }
        if self.len() <= limits::scan_cap() {
            return self.lambda_unchecked()[a.index()] as usize;
        }
        self.r(a) + self.r(a.complement(self.len())) - self.full_rank()
    }

    pub fn lambda(&self, a: SubsetMask) -> Result<usize> {
        self.check_mask(a)?;
        Ok(self.lam(a))
    }

    fn lambda_unchecked(&self) -> &Arc<[u8]> {
        self.0.lambda.get_or_init(|| {
            let t = self.table_unchecked();
            let full = t.len() - 1;
            let rm = self.full_rank();
            (0..t.len())
                .map(|a| (t[a] as usize + t[full ^ a] as usize - rm) as u8)
                .collect::<Vec<u8>>()
                .into()
        })
    }

    /// λ for every subset. Refused above the scan cap.
    pub fn lambda_table(&self) -> Result<Arc<[u8]>> {
        limits::check_scan(self.len(), "connectivity table")?;
        Ok(self.lambda_unchecked().clone())
    }

    // ----- closure -----

    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        let ra = self.r(a);
        let mut out = a;
        for x in a.complement(self.len()).iter() {
            if self.r(a.with(x)) == ra {
                out = out.with(x);
            }
        }
        out
    }

    /// Closure in the dual: `A` plus every `x` that is a coloop of `M | (E - A)`.
    pub fn coclosure(&self, a: SubsetMask) -> SubsetMask {
        let rest = a.complement(self.len());
        let rr = self.r(rest);
        let mut out = a;
        for x in rest.iter() {
            if self.r(rest.without(x)) < rr {
                out = out.with(x);
            }
        }
        out
    }

    pub fn is_closed(&self, a: SubsetMask) -> bool {
        self.closure(a) == a
    }

    pub fn is_fully_closed(&self, a: SubsetMask) -> bool {
        self.closure(a) == a && self.coclosure(a) == a
    }

    /// Smallest fully closed superset of `a`.
    pub fn full_closure(&self, a: SubsetMask) -> SubsetMask {
        let mut cur = a;
        loop {
            let next = self.coclosure(self.closure(cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_independent(&self, a: SubsetMask) -> bool {
        self.r(a) == a.len()
    }

    pub fn is_loop(&self, x: usize) -> bool {
        self.r(SubsetMask::singleton(x)) == 0
    }

    pub fn is_coloop(&self, x: usize) -> bool {
        self.r(self.ground().without(x)) < self.full_rank()
    }

    /// All flats (closed sets), sorted by mask. Refused above the scan cap.
    pub fn flats(&self) -> Result<Vec<SubsetMask>> {
        limits::check_scan(self.len(), "flat enumeration")?;
        Ok((0..1u64 << self.len())
            .map(SubsetMask)
            .filter(|&a| self.is_closed(a))
            .collect())
    }

    /// Flats of rank `r(M) - 1`, sorted by mask.
    pub fn hyperplanes(&self) -> Result<Vec<SubsetMask>> {
        limits::check_scan(self.len(), "hyperplane enumeration")?;
        let rm = self.full_rank();
        if rm == 0 {
            return Ok(Vec::new());
        }
        Ok((0..1u64 << self.len())
            .map(SubsetMask)
            .filter(|&a| self.r(a) == rm - 1 && self.is_closed(a))
            .collect())
    }

    /// Stable 64-bit digest of labels and rank table.
    pub fn fingerprint(&self) -> Result<u64> {
        let t = self.rank_table()?;
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.labels.hash(&mut h);
        t.hash(&mut h);
        Ok(h.finish())
    }

    /// Same labels in the same order and identical rank tables.
    pub fn same_as(&self, other: &Matroid) -> Result<bool> {
        if self.0.labels != other.0.labels {
            return Ok(false);
        }
        Ok(self.rank_table()? == other.rank_table()?)
    }

    /// Whether the element permutation `perm` (`perm[i]` is the image of
    /// element `i`) preserves every rank.
    pub fn is_automorphism(&self, perm: &[usize]) -> Result<bool> {
        limits::check_scan(self.len(), "automorphism check")?;
        if perm.len() != self.len() {
            return Err(Error::structural("permutation length differs from ground set"));
        }
        Ok((0..1u64 << self.len()).all(|a| {
            let a = SubsetMask(a);
            let image = SubsetMask::from_indices(a.iter().map(|i| perm[i]));
            self.r(a) == self.r(image)
        }))
    }
}

/// Checks `r(∅) = 0`, unit increase, and local submodularity
/// `r(A+x) + r(A+y) >= r(A+x+y) + r(A)`, which together imply the rank axioms.
fn validate_rank_table(n: usize, ranks: &[u8]) -> Result<()> {
    if ranks[0] != 0 {
        return Err(Error::structural("rank of the empty set is not 0"));
    }
    for a in 0..ranks.len() {
        let ra = ranks[a];
        for x in 0..n {
            let bx = 1usize << x;
            if a & bx != 0 {
                continue;
            }
            let rx = ranks[a | bx];
            if rx < ra || rx > ra + 1 {
                return Err(Error::structural(format!(
                    "rank table: adding element {x} to subset {a:#x} changes rank by {}",
                    rx as i32 - ra as i32
                )));
            }
            for y in x + 1..n {
                let by = 1usize << y;
                if a & by != 0 {
                    continue;
                }
                if (rx as usize) + (ranks[a | by] as usize) < (ranks[a | bx | by] as usize) + (ra as usize) {
                    return Err(Error::structural(format!(
                        "rank table not submodular at subset {a:#x}, elements {x},{y}"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Matroid {
        Matroid::graphic(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            ["a", "b", "c", "d", "e", "f"].map(String::from).to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn uniform_ranks() {
        let u = Matroid::uniform(3, 7).unwrap();
        assert_eq!(u.rank(SubsetMask(0b11)).unwrap(), 2);
        assert_eq!(u.rank(SubsetMask::EMPTY).unwrap(), 0);
        assert_eq!(u.full_rank(), 3);
        assert!(matches!(u.rank(SubsetMask(1 << 7)), Err(Error::Structural(_))));
    }

    #[test]
    fn k4_star_and_triangle() {
        let m = k4();
        // a=01, b=02, c=03: the star at vertex 0.
        assert_eq!(m.rank(m.mask_of(&["a", "b", "c"]).unwrap()).unwrap(), 3);
        // a=01, b=02, d=12: a triangle.
        let tri = m.mask_of(&["a", "b", "d"]).unwrap();
        assert_eq!(m.lambda(tri).unwrap(), 2);
        assert_eq!(m.closure(m.mask_of(&["a", "b"]).unwrap()), tri);
    }

    #[test]
    fn dual_of_uniform() {
        let u = Matroid::uniform(3, 7).unwrap();
        let d = u.dual();
        let u47 = Matroid::uniform(4, 7).unwrap();
        assert!(d.same_as(&u47).unwrap());
        assert!(d.dual().same_as(&u).unwrap());
    }

    #[test]
    fn minors_of_uniform() {
        let u = Matroid::uniform(3, 7).unwrap();
        let del = u.delete(SubsetMask::singleton(0)).unwrap();
        assert_eq!(del.labels()[0], "e2");
        assert_eq!((del.len(), del.full_rank()), (6, 3));
        let con = u.contract(SubsetMask::singleton(0)).unwrap();
        assert_eq!((con.len(), con.full_rank()), (6, 2));
        let twice = con.delete(SubsetMask::singleton(0)).unwrap();
        assert_eq!(twice.labels(), &["e3", "e4", "e5", "e6", "e7"]);
        assert_eq!(twice.full_rank(), 2);
        let rebuilt = twice.expr().build().unwrap();
        assert!(rebuilt.same_as(&twice).unwrap());
        assert!(matches!(
            u.minor(SubsetMask(1), SubsetMask(1)),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn contracting_k4_edge() {
        let m = k4();
        let c = m.contract(SubsetMask::singleton(0)).unwrap();
        assert_eq!(c.full_rank(), 2);
        // Edges b (0-2) and d (1-2) become parallel.
        assert_eq!(c.rank(c.mask_of(&["b", "d"]).unwrap()).unwrap(), 1);
    }

    #[test]
    fn direct_sum_renames_collisions() {
        let u = Matroid::uniform(3, 7).unwrap();
        let s = Matroid::direct_sum(&[u.clone(), Matroid::uniform(1, 1).unwrap()]).unwrap();
        assert_eq!(s.full_rank(), 4);
        assert_eq!(s.label(7), "e1#2");
        assert_eq!(s.lambda(SubsetMask::singleton(7)).unwrap(), 0);
        let rebuilt = s.expr().build().unwrap();
        assert!(rebuilt.same_as(&s).unwrap());
    }

    #[test]
    fn principal_extension_on_line() {
        let u = Matroid::uniform(3, 4).unwrap();
        let line = u.closure(SubsetMask(0b11));
        assert_eq!(line, SubsetMask(0b11));
        let p = u.principal_extension(line, "p").unwrap();
        assert_eq!(p.full_rank(), 3);
        let circuit = SubsetMask(0b10011);
        assert_eq!(p.r(circuit), 2);
        // Every other 3-set is independent.
        for a in 0u64..32 {
            let a = SubsetMask(a);
            if a.len() == 3 && a != circuit {
                assert_eq!(p.r(a), 3, "{a:?}");
            }
        }
        let spanning = Matroid::uniform(2, 3)
            .unwrap()
            .principal_extension(SubsetMask(0b111), "d")
            .unwrap();
        let mut labels = default_labels(3);
        labels.push("d".into());
        assert!(spanning
            .same_as(&Matroid::uniform_labeled(2, labels).unwrap())
            .unwrap());
    }

    #[test]
    fn principal_extension_rejects_non_flat() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert!(matches!(
            u.principal_extension(SubsetMask(0b11), "p"),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            u.principal_extension(SubsetMask(0b1), "e1"),
            Err(Error::Structural(_))
        ));
        let coloop = u.principal_extension(SubsetMask::EMPTY, "p").unwrap();
        assert!(coloop.is_coloop(4));
    }

    #[test]
    fn binary_fano() {
        let cols: Vec<Vec<u64>> = (1u64..8)
            .map(|v| vec![v & 1, v >> 1 & 1, v >> 2 & 1])
            .collect();
        let f = Matroid::linear(2, cols, default_labels(7)).unwrap();
        assert_eq!(f.full_rank(), 3);
        assert_eq!(f.hyperplanes().unwrap().len(), 7);
    }

    #[test]
    fn rank_table_validation() {
        let bad = vec![0u8, 1, 1, 0];
        assert!(matches!(
            Matroid::from_rank_table(default_labels(2), bad),
            Err(Error::Structural(_))
        ));
        let jump = vec![0u8, 2, 1, 2];
        assert!(Matroid::from_rank_table(default_labels(2), jump).is_err());
        let nonsubmodular = vec![0u8, 1, 1, 1, 1, 1, 2, 2];
        assert!(Matroid::from_rank_table(default_labels(3), nonsubmodular).is_err());
        let parallel_pair = vec![0u8, 1, 1, 1];
        assert!(Matroid::from_rank_table(default_labels(2), parallel_pair).is_ok());
    }
}
