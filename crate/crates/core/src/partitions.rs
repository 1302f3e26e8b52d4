//! Partition arithmetic and enumeration underlying all Schubert indexing.
//!
//! Partitions are stored canonically: weakly decreasing parts with trailing
//! zeros stripped, so `(2,0,0)` and `(2)` are one key. The text form is
//! `[a,b,c]`; the empty partition prints `[]`.

use std::fmt;

use crate::error::Error;

/// Cap on the value of any single part; guards against pathological inputs.
pub const MAX_PART: u32 = 64;

/// A weakly decreasing tuple of nonnegative integers in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Parts must be weakly
    /// decreasing and no larger than [`MAX_PART`].
    pub fn new(parts: impl AsRef<[u32]>) -> Result<Self, Error> {
        Self::with_limit(parts, MAX_PART)
    }

    /// Like [`new`](Self::new) with a caller-chosen bound on part values.
    pub fn with_limit(parts: impl AsRef<[u32]>, limit: u32) -> Result<Self, Error> {
        let raw = parts.as_ref();
        if raw.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!(
                "{raw:?} is not weakly decreasing"
            )));
        }
        if raw.first().is_some_and(|&p| p > limit) {
            return Err(Error::NotAPartition(format!(
                "part {} exceeds the limit {limit}",
                raw[0]
            )));
        }
        let mut parts = raw.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The zero partition `[]`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(p)`; `p = 0` gives the empty partition.
    pub fn row(p: u32) -> Self {
        if p == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![p] }
        }
    }

    /// The single-column partition `(1^r)`.
    pub fn column(r: u32) -> Self {
        Partition {
            parts: vec![1; r as usize],
        }
    }

    /// The rectangle `(value^count)`.
    pub fn rectangle(value: u32, count: u32) -> Self {
        if value == 0 {
            Self::empty()
        } else {
            Partition {
                parts: vec![value; count as usize],
            }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-indexed), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight `|λ| = Σ λ_i`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// The conjugate partition; an involution.
    pub fn transpose(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Equal parts grouped as `(value, multiplicity)` pairs after padding
    /// with zeros to `rows` parts, values strictly decreasing.
    pub fn grouped_padded(&self, rows: usize) -> Vec<(u32, usize)> {
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for i in 0..rows.max(self.len()) {
            let v = self.part(i);
            match groups.last_mut() {
                Some((value, count)) if *value == v => *count += 1,
                _ => groups.push((v, 1)),
            }
        }
        groups
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// The pair `(k,n)` fixing the ambient cohomology ring of `G(k,n)`.
///
/// `k = n` is allowed as the degenerate one-point Grassmannian; it arises as
/// a factor of iterated-bundle sources (for instance `P^0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassmannianSpec {
    k: u32,
    n: u32,
}

impl GrassmannianSpec {
    pub fn new(k: u32, n: u32) -> Result<Self, Error> {
        if k == 0 || k > n || n > 2 * MAX_PART {
            return Err(Error::InvalidSpec { k, n });
        }
        Ok(GrassmannianSpec { k, n })
    }

    /// Projective space `P^m` as `G(1, m+1)`.
    pub fn projective(m: u32) -> Result<Self, Error> {
        Self::new(1, m + 1)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Width of the partition box, `n - k`.
    pub fn width(&self) -> u32 {
        self.n - self.k
    }

    /// Dimension `k(n-k)`.
    pub fn dim(&self) -> u64 {
        self.k as u64 * (self.n - self.k) as u64
    }

    /// The dual Grassmannian `G(n-k, n)`.
    pub fn dual(&self) -> Result<Self, Error> {
        Self::new(self.n - self.k, self.n)
    }

    /// The full-box partition `((n-k)^k)` indexing the point class.
    pub fn top(&self) -> Partition {
        Partition::rectangle(self.width(), self.k)
    }
}

impl fmt::Display for GrassmannianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

/// True iff `λ` has at most `k` parts, each at most `n-k`.
pub fn validate_partition(lambda: &Partition, g: GrassmannianSpec) -> bool {
    lambda.len() <= g.k() as usize && lambda.part(0) <= g.width()
}

/// The complement `λ^c` with `λ^c_i = n-k-λ_{k+1-i}`; an involution on the box.
pub fn complement(lambda: &Partition, g: GrassmannianSpec) -> Result<Partition, Error> {
    if !validate_partition(lambda, g) {
        return Err(Error::InvalidPartition(lambda.clone(), g));
    }
    let k = g.k() as usize;
    let parts: Vec<u32> = (0..k).map(|i| g.width() - lambda.part(k - 1 - i)).collect();
    Partition::new(parts)
}

/// `λ + s^j`: adds `s` to the first `j` parts (implicit zeros included).
pub fn shift(lambda: &Partition, s: u32, j: u32) -> Result<Partition, Error> {
    let rows = lambda.len().max(if s > 0 { j as usize } else { 0 });
    let parts: Vec<u32> = (0..rows)
        .map(|i| {
            if i < j as usize {
                lambda.part(i) + s
            } else {
                lambda.part(i)
            }
        })
        .collect();
    Partition::new(parts)
}

/// `(v^t, λ)`: prepends `t` parts equal to `v`; requires `v ≥ λ_1`.
pub fn prepend(lambda: &Partition, v: u32, t: u32) -> Result<Partition, Error> {
    if t > 0 && v < lambda.part(0) {
        return Err(Error::NotAPartition(format!(
            "cannot prepend {v} before a part of {}",
            lambda.part(0)
        )));
    }
    let mut parts = vec![v; t as usize];
    parts.extend_from_slice(lambda.parts());
    Partition::new(parts)
}

/// All partitions of weight `r` in the `k×(n-k)` box, lexicographically
/// decreasing; empty if `r` exceeds the box.
pub fn enumerate_lambda(r: u64, g: GrassmannianSpec) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(r, g.width(), g.k(), &mut stack, &mut out);
    out
}

fn descend(
    rest: u64,
    max_part: u32,
    rows_left: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    if rows_left == 0 || (max_part as u64) * (rows_left as u64) < rest {
        return;
    }
    let hi = max_part.min(rest.min(u32::MAX as u64) as u32);
    for p in (1..=hi).rev() {
        stack.push(p);
        descend(rest - p as u64, p, rows_left - 1, stack, out);
        stack.pop();
    }
}
