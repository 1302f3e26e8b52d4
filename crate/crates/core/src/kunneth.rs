//! Cohomology of finite products of Grassmannians: Künneth basis,
//! componentwise multiplication and integration. Projective space enters
//! uniformly as `P^m = G(1, m+1)` with `x^i = σ_i`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::partitions::{
    complement, enumerate_lambda, validate_partition, GrassmannianSpec, Partition,
};
use crate::schubert::CohomologyClass;

/// An ordered list of Grassmannian factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductSpec {
    factors: Vec<GrassmannianSpec>,
}

impl ProductSpec {
    pub fn new(factors: Vec<GrassmannianSpec>) -> Result<Self, Error> {
        if factors.is_empty() {
            return Err(Error::SpecMismatch(
                "a product needs at least one factor".into(),
            ));
        }
        Ok(ProductSpec { factors })
    }

    pub fn single(g: GrassmannianSpec) -> Self {
        ProductSpec { factors: vec![g] }
    }

    pub fn factors(&self) -> &[GrassmannianSpec] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total dimension `Σ k_i (n_i - k_i)`.
    pub fn dim(&self) -> u64 {
        self.factors.iter().map(|g| g.dim()).sum()
    }

    /// The tuple of full-box partitions indexing the point class.
    pub fn top(&self) -> Vec<Partition> {
        self.factors.iter().map(|g| g.top()).collect()
    }

    /// All Künneth basis tuples of total weight `w`, ordered by the weight
    /// composition (first slot descending) and lex-decreasing within slots.
    pub fn basis_tuples(&self, w: u64) -> Vec<Vec<Partition>> {
        let mut out = Vec::new();
        let mut cur: Vec<Partition> = Vec::new();
        self.tuples_rec(0, w, &mut cur, &mut out);
        out
    }

    fn tuples_rec(
        &self,
        slot: usize,
        rest: u64,
        cur: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if slot == self.factors.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let g = self.factors[slot];
        let tail: u64 = self.factors[slot + 1..].iter().map(|f| f.dim()).sum();
        for w in (0..=rest.min(g.dim())).rev() {
            if rest - w > tail {
                continue;
            }
            for lambda in enumerate_lambda(w, g) {
                cur.push(lambda);
                self.tuples_rec(slot + 1, rest - w, cur, out);
                cur.pop();
            }
        }
    }
}

impl std::fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A sparse integer combination of Künneth basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductClass {
    spec: ProductSpec,
    coeffs: BTreeMap<Vec<Partition>, BigInt>,
}

impl ProductClass {
    pub fn zero(spec: ProductSpec) -> Self {
        ProductClass {
            spec,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit class `1 ⊗ ⋯ ⊗ 1`.
    pub fn unit(spec: ProductSpec) -> Self {
        let key = vec![Partition::empty(); spec.len()];
        let mut c = Self::zero(spec);
        c.coeffs.insert(key, BigInt::one());
        c
    }

    /// The basis class `σ_{λ_1} ⊗ ⋯ ⊗ σ_{λ_p}`.
    pub fn basis(spec: ProductSpec, slots: Vec<Partition>) -> Result<Self, Error> {
        Self::from_terms(spec, [(slots, BigInt::one())])
    }

    pub fn from_terms(
        spec: ProductSpec,
        terms: impl IntoIterator<Item = (Vec<Partition>, BigInt)>,
    ) -> Result<Self, Error> {
        let mut c = Self::zero(spec);
        for (slots, coeff) in terms {
            c.check_key(&slots)?;
            c.add_term(slots, coeff);
        }
        Ok(c)
    }

    fn check_key(&self, slots: &[Partition]) -> Result<(), Error> {
        if slots.len() != self.spec.len() {
            return Err(Error::SpecMismatch(format!(
                "tuple has {} slots, spec {} factors",
                slots.len(),
                self.spec.len()
            )));
        }
        for (lambda, &g) in slots.iter().zip(self.spec.factors()) {
            if !validate_partition(lambda, g) {
                return Err(Error::InvalidPartition(lambda.clone(), g));
            }
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, slots: Vec<Partition>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(slots);
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

    pub fn spec(&self) -> &ProductSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<Partition>, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, slots: &[Partition]) -> BigInt {
        self.coeffs.get(slots).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// The common total weight of all keys, or `None` if zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let weight = |t: &Vec<Partition>| t.iter().map(Partition::weight).sum::<u64>();
        let mut it = self.coeffs.keys();
        let w = weight(it.next()?);
        it.all(|t| weight(t) == w).then_some(w)
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(format!(
                "{} vs {}",
                self.spec, other.spec
            )));
        }
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, m: &BigInt) -> Self {
        if m.is_zero() {
            return Self::zero(self.spec.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(t, c)| (t.clone(), c * m))
            .collect();
        ProductClass {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    /// Bilinear slotwise multiplication in the Künneth basis.
    pub fn multiply(&self, other: &Self) -> Result<Self, Error> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(format!(
                "{} vs {}",
                self.spec, other.spec
            )));
        }
        let mut out = Self::zero(self.spec.clone());
        for (t1, a) in &self.coeffs {
            for (t2, b) in &other.coeffs {
                // expand every slot, then distribute over the cartesian product
                let mut slotwise: Vec<Vec<(Partition, BigInt)>> =
                    Vec::with_capacity(self.spec.len());
                let mut dead = false;
                for ((l1, l2), &g) in t1.iter().zip(t2.iter()).zip(self.spec.factors()) {
                    let prod = CohomologyClass::schubert(g, l1.clone())
                        .and_then(|x| x.multiply(&CohomologyClass::schubert(g, l2.clone())?))
                        .expect("stored keys are valid");
                    if prod.is_zero() {
                        dead = true;
                        break;
                    }
                    slotwise.push(prod.terms().map(|(p, c)| (p.clone(), c.clone())).collect());
                }
                if dead {
                    continue;
                }
                let base = a * b;
                distribute(&slotwise, 0, &mut Vec::new(), &base, &mut out);
            }
        }
        Ok(out)
    }

    /// Multiplies one slot by the special class `σ_p` of that factor.
    pub fn slot_pieri(&self, slot: usize, p: u32) -> Self {
        let mut out = Self::zero(self.spec.clone());
        let g = self.spec.factors()[slot];
        for (t, c) in &self.coeffs {
            let expanded = CohomologyClass::schubert(g, t[slot].clone())
                .expect("stored keys are valid")
                .pieri_multiply(p);
            for (mu, e) in expanded.terms() {
                let mut key = t.clone();
                key[slot] = mu.clone();
                out.add_term(key, c * e);
            }
        }
        out
    }

    /// Coefficient of the tuple of full-box partitions.
    pub fn integrate(&self) -> BigInt {
        self.coefficient(&self.spec.top())
    }

    /// Restriction to a single-factor spec as an ordinary class.
    pub fn into_single(&self) -> Result<CohomologyClass, Error> {
        if self.spec.len() != 1 {
            return Err(Error::SpecMismatch("not a single-factor product".into()));
        }
        CohomologyClass::from_terms(
            self.spec.factors()[0],
            self.coeffs.iter().map(|(t, c)| (t[0].clone(), c.clone())),
        )
    }
}

fn distribute(
    slotwise: &[Vec<(Partition, BigInt)>],
    slot: usize,
    key: &mut Vec<Partition>,
    coeff: &BigInt,
    out: &mut ProductClass,
) {
    if slot == slotwise.len() {
        out.add_term(key.clone(), coeff.clone());
        return;
    }
    for (p, c) in &slotwise[slot] {
        key.push(p.clone());
        distribute(slotwise, slot + 1, key, &(coeff * c), out);
        key.pop();
    }
}

/// `Π_u H_u^{β_u}` fully expanded in the Künneth basis, where `H_u` is the
/// hyperplane class of factor `u`.
pub fn hyperplane_monomial(spec: &ProductSpec, exponents: &[u64]) -> ProductClass {
    let mut c = ProductClass::unit(spec.clone());
    for (u, &e) in exponents.iter().enumerate() {
        for _ in 0..e {
            c = c.slot_pieri(u, 1);
            if c.is_zero() {
                return c;
            }
        }
    }
    c
}

/// The slotwise-complement tuple, pairing to 1 with the given basis tuple.
pub fn dual_tuple(spec: &ProductSpec, slots: &[Partition]) -> Result<Vec<Partition>, Error> {
    slots
        .iter()
        .zip(spec.factors())
        .map(|(l, &g)| complement(l, g))
        .collect()
}
