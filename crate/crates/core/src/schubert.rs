//! The integral cohomology ring of a single Grassmannian: Schubert basis,
//! Littlewood–Richardson multiplication, the Pieri rule, integration, the
//! Poincaré pairing and transpose duality.
//!
//! Coefficients are arbitrary-precision integers throughout; products are
//! truncated to the `k×(n-k)` box at expansion time.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::partitions::{
    complement, enumerate_lambda, validate_partition, GrassmannianSpec, Partition,
};

/// Whether coefficients index Schubert classes by codimension (`σ_λ`) or by
/// dimension (`σ^λ = σ_{λ^c}`). Conversion is reindexing by complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisConvention {
    Codim,
    Dim,
}

/// A sparse integer combination of Schubert basis classes of one Grassmannian.
///
/// Invariants: every key is valid in the space and no zero coefficient is
/// stored. The zero class is the empty map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    space: GrassmannianSpec,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl CohomologyClass {
    pub fn zero(space: GrassmannianSpec) -> Self {
        CohomologyClass {
            space,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit class `σ_∅`.
    pub fn unit(space: GrassmannianSpec) -> Self {
        let mut c = Self::zero(space);
        c.coeffs.insert(Partition::empty(), BigInt::one());
        c
    }

    /// The basis class `σ_λ`.
    pub fn schubert(space: GrassmannianSpec, lambda: Partition) -> Result<Self, Error> {
        Self::from_terms(space, [(lambda, BigInt::one())])
    }

    pub fn from_terms(
        space: GrassmannianSpec,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self, Error> {
        let mut c = Self::zero(space);
        for (lambda, coeff) in terms {
            if !validate_partition(&lambda, space) {
                return Err(Error::InvalidPartition(lambda, space));
            }
            c.add_term(lambda, coeff);
        }
        Ok(c)
    }

    /// Adds `coeff·σ_λ`, keeping the no-zero-coefficients invariant.
    /// The key must already be valid in the space.
    pub(crate) fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn space(&self) -> GrassmannianSpec {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// All coefficients are nonnegative.
    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// The common weight of all keys, or `None` if zero or mixed-degree.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.coeffs.keys();
        let w = it.next()?.weight();
        it.all(|p| p.weight() == w).then_some(w)
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(self.space, other.space));
        }
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(l, c)| (l.clone(), -c)).collect();
        CohomologyClass {
            space: self.space,
            coeffs,
        }
    }

    pub fn scale(&self, m: &BigInt) -> Self {
        if m.is_zero() {
            return Self::zero(self.space);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(l, c)| (l.clone(), c * m))
            .collect();
        CohomologyClass {
            space: self.space,
            coeffs,
        }
    }

    /// Multiplication by the special class `σ_p` via the Pieri rule: each
    /// `σ_λ` expands over horizontal `p`-strips inside the box.
    pub fn pieri_multiply(&self, p: u32) -> Self {
        if p == 0 {
            return self.clone();
        }
        let mut out = Self::zero(self.space);
        if p > self.space.width() {
            return out;
        }
        for (lambda, coeff) in &self.coeffs {
            for mu in horizontal_strips(lambda, p, self.space) {
                out.add_term(mu, coeff.clone());
            }
        }
        out
    }

    /// The Littlewood–Richardson product, truncated to the box.
    pub fn multiply(&self, other: &Self) -> Result<Self, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(self.space, other.space));
        }
        let g = self.space;
        let mut candidates: HashMap<u64, Vec<Partition>> = HashMap::new();
        let mut out = Self::zero(g);
        for (la, a) in &self.coeffs {
            for (mu, b) in &other.coeffs {
                let w = la.weight() + mu.weight();
                if w > g.dim() {
                    continue;
                }
                let nus = candidates
                    .entry(w)
                    .or_insert_with(|| enumerate_lambda(w, g));
                let ab = a * b;
                for nu in nus.iter() {
                    if !nu.contains(la) || !nu.contains(mu) {
                        continue;
                    }
                    let c = lr_coefficient(la, mu, nu);
                    if !c.is_zero() {
                        out.add_term(nu.clone(), &ab * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Same contract as [`multiply`](Self::multiply), computed independently:
    /// each factor of `other` is expanded through its Giambelli determinant in
    /// single-row classes and multiplied out with the Pieri rule only.
    pub fn oracle_multiply(&self, other: &Self) -> Result<Self, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(self.space, other.space));
        }
        let mut out = Self::zero(self.space);
        for (mu, b) in &other.coeffs {
            let part = giambelli_apply(self, mu).scale(b);
            out = out.add(&part)?;
        }
        Ok(out)
    }

    /// Coefficient of the full-box class; zero if absent.
    pub fn integrate(&self) -> BigInt {
        self.coefficient(&self.space.top())
    }

    /// The Poincaré pairing `∫ a·b`.
    pub fn pair(&self, other: &Self) -> Result<BigInt, Error> {
        Ok(self.multiply(other)?.integrate())
    }

    /// The image under the duality isomorphism with `G(n-k,n)`: coefficients
    /// carried from `σ_λ` to `σ_{λ^T}`. Applying it twice returns the class.
    pub fn transpose_class(&self) -> Result<Self, Error> {
        let dual = self.space.dual()?;
        let mut out = Self::zero(dual);
        for (l, c) in &self.coeffs {
            out.add_term(l.transpose(), c.clone());
        }
        Ok(out)
    }

    /// Reindexes coefficients by complement (`σ_λ ↦ σ_{λ^c}`), converting
    /// between the codimension and dimension basis conventions.
    pub fn complement_reindex(&self) -> Self {
        let mut out = Self::zero(self.space);
        for (l, c) in &self.coeffs {
            let lc = complement(l, self.space).expect("stored keys are valid in their space");
            out.add_term(lc, c.clone());
        }
        out
    }
}

/// All `μ ⊆ box` with `μ/λ` a horizontal strip of size `p`.
fn horizontal_strips(lambda: &Partition, p: u32, g: GrassmannianSpec) -> Vec<Partition> {
    let rows = (lambda.len() + 1).min(g.k() as usize);
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(
        lambda: &Partition,
        row: usize,
        rows: usize,
        rest: u32,
        width: u32,
        stack: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if rest == 0 {
                out.push(Partition::new(stack.as_slice()).expect("rows are weakly decreasing"));
            }
            return;
        }
        // interleaving μ_{row+1} ≤ λ_row keeps strip cells in distinct columns
        let low = lambda.part(row);
        let high = if row == 0 {
            width
        } else {
            lambda.part(row - 1)
        }
        .min(low + rest);
        for v in low..=high {
            stack.push(v);
            rec(lambda, row + 1, rows, rest - (v - low), width, stack, out);
            stack.pop();
        }
    }
    rec(lambda, 0, rows, p, g.width(), &mut stack, &mut out);
    out
}

static LR_CACHE: LazyLock<Mutex<HashMap<(Partition, Partition, Partition), BigInt>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The Littlewood–Richardson coefficient `c^ν_{λμ}`: the number of
/// column-strict skew tableaux of shape `ν/λ` and content `μ` whose reverse
/// reading word is a lattice word. Symmetric in `λ, μ`; zero on weight
/// mismatch or when `λ ⊄ ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if nu.weight() != lambda.weight() + mu.weight() {
        return BigInt::zero();
    }
    if !nu.contains(lambda) || !nu.contains(mu) {
        return BigInt::zero();
    }
    if mu.is_empty() {
        return if nu == lambda {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let (a, b) = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    let key = (a, b, nu.clone());
    if let Some(v) = LR_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let count = BigInt::from(lr_count(&key.0, &key.1, nu));
    LR_CACHE.lock().unwrap().insert(key, count.clone());
    count
}

/// Backtracking count of Littlewood–Richardson tableaux of shape `ν/λ`,
/// content `μ`. Cells are filled in reading order (right to left along each
/// row, top to bottom) so the lattice condition is checked on prefixes.
fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let rows = nu.len();
    // (row, col) cells of ν/λ in reading order, 0-indexed columns
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..rows {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = nu.part(0) as usize;
    let mut search = LrSearch {
        cells,
        lambda,
        mu,
        values: mu.len(),
        width,
        grid: vec![0; rows * width], // 0 = unfilled
        counts: vec![0; mu.len() + 1],
        total: 0,
    };
    search.fill(0);
    search.total
}

struct LrSearch<'a> {
    cells: Vec<(usize, usize)>,
    lambda: &'a Partition,
    mu: &'a Partition,
    values: usize,
    width: usize,
    grid: Vec<u8>,
    counts: Vec<u32>,
    total: u64,
}

impl LrSearch<'_> {
    fn fill(&mut self, idx: usize) {
        if idx == self.cells.len() {
            self.total += 1;
            return;
        }
        let (r, c) = self.cells[idx];
        // weakly increasing along rows: bounded by the cell to the right
        let row_cap = if c + 1 < self.width && self.grid[r * self.width + c + 1] != 0 {
            self.grid[r * self.width + c + 1] as usize
        } else {
            self.values
        };
        // strictly increasing down columns within the skew shape
        let col_floor = if r > 0 && (c as u32) >= self.lambda.part(r - 1) {
            self.grid[(r - 1) * self.width + c] as usize + 1
        } else {
            1
        };
        for v in col_floor..=row_cap {
            if self.counts[v] >= self.mu.part(v - 1) {
                continue; // content bound
            }
            if v > 1 && self.counts[v] >= self.counts[v - 1] {
                continue; // lattice word prefix condition
            }
            self.counts[v] += 1;
            self.grid[r * self.width + c] = v as u8;
            self.fill(idx + 1);
            self.grid[r * self.width + c] = 0;
            self.counts[v] -= 1;
        }
    }
}

/// Applies the Giambelli determinant of `σ_μ` to `base` using only Pieri
/// multiplications: `det(σ_{μ_i+j-i})` expanded over column subsets.
fn giambelli_apply(base: &CohomologyClass, mu: &Partition) -> CohomologyClass {
    let l = mu.len();
    if l == 0 {
        return base.clone();
    }
    let width = base.space().width() as i64;
    let space = base.space();
    let mut cur: HashMap<u128, CohomologyClass> = HashMap::new();
    cur.insert(0, base.clone());
    for i in 0..l {
        let mut next: HashMap<u128, CohomologyClass> = HashMap::new();
        for (mask, cls) in &cur {
            for j in 0..l {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let e = mu.part(i) as i64 + j as i64 - i as i64;
                if !(0..=width).contains(&e) {
                    continue; // σ_e vanishes outside the box range
                }
                let mut term = cls.pieri_multiply(e as u32);
                if term.is_zero() {
                    continue;
                }
                if (mask >> (j + 1)).count_ones() % 2 == 1 {
                    term = term.neg();
                }
                let slot = next
                    .entry(mask | (1 << j))
                    .or_insert_with(|| CohomologyClass::zero(space));
                *slot = slot.add(&term).expect("same space");
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur.remove(&((1u128 << l) - 1))
        .unwrap_or_else(|| CohomologyClass::zero(space))
}
