//! Class-level transforms induced by irreducible-subvariety constructions:
//! the cone over a product of projective spaces, single and iterated
//! Grassmannian-bundle correspondences, and face embeddings.
//!
//! Only the induced maps on cohomology classes are modeled; the underlying
//! incidence geometry is not.

use crate::error::Error;
use crate::kunneth::{ProductClass, ProductSpec};
use crate::partitions::{shift, GrassmannianSpec, Partition};
use crate::schubert::CohomologyClass;

/// Parameters of the iterated-bundle correspondence into `G(k,n)`:
/// strictly decreasing `i_1 > ⋯ > i_s > 0` with `i_1 ≤ n-k`, and positive
/// `j_1, …, j_s` with `Σ j_ℓ < k`; `j_{s+1} = k - Σ j_ℓ` and `i_{s+1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IteratedSpec {
    target: GrassmannianSpec,
    i: Vec<u32>,
    j: Vec<u32>,
}

impl IteratedSpec {
    pub fn new(target: GrassmannianSpec, i: Vec<u32>, j: Vec<u32>) -> Result<Self, Error> {
        let (k, width) = (target.k(), target.width());
        if i.is_empty() || i.len() != j.len() {
            return Err(Error::SpecMismatch(
                "need equally many step sizes i and block sizes j, at least one".into(),
            ));
        }
        if i[0] > width || i.windows(2).any(|w| w[0] <= w[1]) || *i.last().unwrap() == 0 {
            return Err(Error::NotStrict(format!(
                "need {width} >= i_1 > ... > i_s > 0, got {i:?}"
            )));
        }
        if j.contains(&0) || j.iter().map(|&x| x as u64).sum::<u64>() >= k as u64 {
            return Err(Error::SpecMismatch(format!(
                "block sizes must be positive with sum below k={k}, got {j:?}"
            )));
        }
        Ok(IteratedSpec { target, i, j })
    }

    pub fn target(&self) -> GrassmannianSpec {
        self.target
    }

    /// Number of strict steps `s`.
    pub fn steps(&self) -> usize {
        self.i.len()
    }

    /// Step sizes including the trailing `i_{s+1} = 0`.
    fn step_size(&self, l: usize) -> u32 {
        self.i.get(l).copied().unwrap_or(0)
    }

    /// Block sizes including the derived `j_{s+1}`.
    pub fn block(&self, l: usize) -> u32 {
        if l < self.j.len() {
            self.j[l]
        } else {
            self.target.k() - self.j.iter().sum::<u32>()
        }
    }

    /// The flag dimensions `a_0 = 0, a_ℓ = n-k+Σ_{t≤ℓ} j_t - i_ℓ, a_{s+1} = n`.
    pub fn flag_dim(&self, l: usize) -> u32 {
        if l == 0 {
            return 0;
        }
        if l == self.i.len() + 1 {
            return self.target.n();
        }
        let jsum: u32 = self.j[..l].iter().sum();
        self.target.width() + jsum - self.i[l - 1]
    }

    /// The source product `Π_{ℓ=1}^{s+1} G(j_ℓ, a_ℓ - a_{ℓ-1})`.
    pub fn source(&self) -> ProductSpec {
        let factors = (1..=self.steps() + 1)
            .map(|l| {
                GrassmannianSpec::new(self.block(l - 1), self.flag_dim(l) - self.flag_dim(l - 1))
                    .expect("validated step data yields factors with k <= n")
            })
            .collect();
        ProductSpec::new(factors).expect("at least two factors")
    }

    /// Dimension gained by the class map, `Σ_{ℓ=2}^{s+1} j_ℓ (a_{ℓ-1} - Σ_{t<ℓ} j_t)`.
    pub fn dimension_shift(&self) -> u64 {
        let s = self.steps();
        let mut shift = 0u64;
        let mut jsum = 0u64;
        for l in 2..=s + 1 {
            jsum += self.block(l - 2) as u64;
            shift += self.block(l - 1) as u64 * (self.flag_dim(l - 1) as u64 - jsum);
        }
        shift
    }
}

/// The iterated-bundle class map: a basis tuple `(λ^1, …, λ^{s+1})` goes to
/// the Schubert class of the concatenation of the blocks `λ^ℓ + i_ℓ^{j_ℓ}`.
pub fn iterated_class_map(spec: &IteratedSpec, c: &ProductClass) -> Result<CohomologyClass, Error> {
    let source = spec.source();
    if c.spec() != &source {
        return Err(Error::SpecMismatch(format!(
            "class lives on {}, the correspondence needs {source}",
            c.spec()
        )));
    }
    // both sides shift every class weight by Σ i_ℓ j_ℓ, so checking the
    // key-independent identity once covers the dimension bookkeeping
    let step_weight: u64 = (0..spec.steps())
        .map(|l| spec.step_size(l) as u64 * spec.block(l) as u64)
        .sum();
    debug_assert_eq!(
        spec.target().dim(),
        source.dim() + spec.dimension_shift() + step_weight
    );
    let mut out = CohomologyClass::zero(spec.target());
    for (slots, coeff) in c.terms() {
        let mut parts: Vec<u32> = Vec::with_capacity(spec.target().k() as usize);
        for (l, lambda) in slots.iter().enumerate() {
            let block = shift(lambda, spec.step_size(l), spec.block(l))?;
            parts.extend_from_slice(block.parts());
        }
        out.add_term(Partition::new(parts)?, coeff.clone());
    }
    Ok(out)
}

/// The single-bundle class map into `G(k,n)`: `σ_λ ⊗ σ_μ ↦ σ_{λ+i^j, μ}` for a
/// class on `G(j, n-k+j-i) × G(k-j, k+i-j)`.
pub fn bundle_class_map(
    g: GrassmannianSpec,
    i: u32,
    j: u32,
    c: &ProductClass,
) -> Result<CohomologyClass, Error> {
    if i == 0 || i > g.width() || j == 0 || j >= g.k() {
        return Err(Error::SpecMismatch(format!(
            "need 0 < i <= {} and 0 < j < {}, got i={i}, j={j}",
            g.width(),
            g.k()
        )));
    }
    iterated_class_map(&IteratedSpec::new(g, vec![i], vec![j])?, c)
}

/// The cone class map: a codimension-`m` class `Σ a_i x^p y^q` on `P^n × P^n`
/// goes to `Σ a_i σ_{(n+1)^p, n^{n-p}, q}` on `G(n+1, 2n+2)`.
pub fn cone_class_map(n: u32, m: u32, c: &ProductClass) -> Result<CohomologyClass, Error> {
    let pn = GrassmannianSpec::projective(n)?;
    let expected = ProductSpec::new(vec![pn, pn])?;
    if c.spec() != &expected {
        return Err(Error::SpecMismatch(format!(
            "cone input lives on {}, expected {expected}",
            c.spec()
        )));
    }
    let target = GrassmannianSpec::new(n + 1, 2 * n + 2)?;
    if c.is_zero() {
        return Ok(CohomologyClass::zero(target));
    }
    match c.homogeneous_degree() {
        Some(w) if w == m as u64 => {}
        _ => {
            return Err(Error::DegreeMismatch(format!(
                "cone input must be homogeneous of codimension {m}"
            )))
        }
    }
    let mut out = CohomologyClass::zero(target);
    for (slots, coeff) in c.terms() {
        let (p, q) = (slots[0].part(0), slots[1].part(0));
        let mut parts = vec![n + 1; p as usize];
        parts.extend(vec![n; (n - p) as usize]);
        parts.push(q);
        out.add_term(Partition::new(parts)?, coeff.clone());
    }
    Ok(out)
}

/// The face class map for a strictly decreasing `n-k ≥ λ_1 > ⋯ > λ_k ≥ 0`:
/// the monomial `Π x_i^{e_i}` on `Π_{i=1}^k P^{λ_{i-1}-λ_i}` (with
/// `λ_0 = n-k`) goes to `σ_μ`, `μ_i = λ_i + e_i`.
pub fn face_class_map(
    lambda: &[u32],
    g: GrassmannianSpec,
    c: &ProductClass,
) -> Result<CohomologyClass, Error> {
    if lambda.len() != g.k() as usize {
        return Err(Error::NotStrict(format!(
            "need exactly k={} entries, got {lambda:?}",
            g.k()
        )));
    }
    let padded: Vec<u32> = std::iter::once(g.width())
        .chain(lambda.iter().copied())
        .collect();
    if padded.windows(2).any(|w| w[0] < w[1]) || lambda.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::NotStrict(format!(
            "need {} >= l_1 > ... > l_k >= 0, got {lambda:?}",
            g.width()
        )));
    }
    let factors: Result<Vec<_>, _> = padded
        .windows(2)
        .map(|w| GrassmannianSpec::projective(w[0] - w[1]))
        .collect();
    let expected = ProductSpec::new(factors?)?;
    if c.spec() != &expected {
        return Err(Error::SpecMismatch(format!(
            "face input lives on {}, expected {expected}",
            c.spec()
        )));
    }
    let mut out = CohomologyClass::zero(g);
    for (slots, coeff) in c.terms() {
        let parts: Vec<u32> = lambda
            .iter()
            .zip(slots.iter())
            .map(|(&l, e)| {
                let exp = e.part(0);
                l + exp
            })
            .collect();
        for (idx, &mu) in parts.iter().enumerate() {
            let cap = padded[idx];
            if mu > cap {
                return Err(Error::ExponentOutOfRange(format!(
                    "mu_{} = {mu} exceeds {cap}",
                    idx + 1
                )));
            }
        }
        out.add_term(Partition::new(parts)?, coeff.clone());
    }
    Ok(out)
}
