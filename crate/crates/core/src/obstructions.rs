//! Hodge-index obstructions to realizability: pullback coefficients along
//! birational span maps, the intersection matrix of hyperplane classes on
//! the pullback, an exact weakly-Lorentzian test, and a bounded,
//! deterministic obstruction search.
//!
//! All eigenvalue sign decisions are exact: the characteristic polynomial of
//! a rational symmetric matrix is real-rooted, so Descartes' rule counts its
//! positive and negative roots with multiplicity. No floating point is used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::kunneth::{hyperplane_monomial, ProductClass, ProductSpec};
use crate::partitions::{complement, validate_partition, GrassmannianSpec, Partition};
use crate::schubert::CohomologyClass;
use crate::stability::subvariety_reindex;

/// The rational span map `G(k_1,n_1) × ⋯ × G(k_p,n_p) ⇢ G(k,N)` sending a
/// tuple of subspaces in general position to its span; requires
/// `Σ k_i = k` and per-factor boxes no wider than the target box.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanMapSpec {
    target: GrassmannianSpec,
    factors: ProductSpec,
}

impl SpanMapSpec {
    pub fn new(target: GrassmannianSpec, factors: ProductSpec) -> Result<Self, Error> {
        let ksum: u64 = factors.factors().iter().map(|g| g.k() as u64).sum();
        if ksum != target.k() as u64 {
            return Err(Error::SpecMismatch(format!(
                "factor ranks sum to {ksum}, target needs {}",
                target.k()
            )));
        }
        for f in factors.factors() {
            if f.n() > target.n() || f.width() > target.width() {
                return Err(Error::SpecMismatch(format!(
                    "factor {f} does not embed in {target}"
                )));
            }
        }
        Ok(SpanMapSpec { target, factors })
    }

    /// The balanced span map onto `G(k,N)` with factors `G(k_i, N-k+k_i)`;
    /// these are the configurations where the map is birational.
    pub fn balanced(target: GrassmannianSpec, ranks: &[u32]) -> Result<Self, Error> {
        let factors: Result<Vec<_>, _> = ranks
            .iter()
            .map(|&ki| GrassmannianSpec::new(ki, target.width() + ki))
            .collect();
        SpanMapSpec::new(target, ProductSpec::new(factors?)?)
    }

    pub fn target(&self) -> GrassmannianSpec {
        self.target
    }

    pub fn factors(&self) -> &ProductSpec {
        &self.factors
    }
}

/// Codimension of `f*ν` on the product: total factor dimension minus `dim ν`.
fn pullback_weight(nu: &CohomologyClass, span: &SpanMapSpec) -> Result<u64, Error> {
    let w = nu.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let nu_dim = span.target.dim() - w;
    let prod_dim = span.factors.dim();
    if nu_dim > prod_dim {
        return Err(Error::DegreeMismatch(format!(
            "class of dimension {nu_dim} cannot pull back to {}",
            span.factors
        )));
    }
    Ok(prod_dim - nu_dim)
}

/// Coefficient of the Künneth basis element `⊗ σ_{μ_i}` in `f*ν`, computed
/// as the intersection number of `ν` with the product of the per-factor
/// complements `σ_{μ_i^c}` taken inside the target Grassmannian.
pub fn pullback_coefficient(
    nu: &CohomologyClass,
    span: &SpanMapSpec,
    basis: &[Partition],
) -> Result<BigInt, Error> {
    if basis.len() != span.factors.len() {
        return Err(Error::SpecMismatch(format!(
            "tuple has {} slots, span has {} factors",
            basis.len(),
            span.factors.len()
        )));
    }
    for (mu, &f) in basis.iter().zip(span.factors.factors()) {
        if !validate_partition(mu, f) {
            return Err(Error::InvalidPartition(mu.clone(), f));
        }
    }
    let want: u64 = pullback_weight(nu, span)?;
    let have: u64 = basis.iter().map(Partition::weight).sum();
    if want != have {
        return Err(Error::DegreeMismatch(format!(
            "tuple weight {have}, pullback lives in weight {want}"
        )));
    }
    let mut prod = nu.clone();
    for (mu, &f) in basis.iter().zip(span.factors.factors()) {
        let rho = complement(mu, f)?;
        prod = prod.multiply(&CohomologyClass::schubert(span.target, rho)?)?;
        if prod.is_zero() {
            return Ok(BigInt::zero());
        }
    }
    Ok(prod.integrate())
}

/// The full pullback `f*ν` in the Künneth basis of the factors.
pub fn pullback_class(nu: &CohomologyClass, span: &SpanMapSpec) -> Result<ProductClass, Error> {
    if nu.is_zero() {
        return Ok(ProductClass::zero(span.factors.clone()));
    }
    let w = pullback_weight(nu, span)?;
    let mut out = ProductClass::zero(span.factors.clone());
    for tuple in span.factors.basis_tuples(w) {
        let c = pullback_coefficient(nu, span, &tuple)?;
        if !c.is_zero() {
            out.add_term(tuple, c);
        }
    }
    Ok(out)
}

/// A symmetric matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl SymMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self, Error> {
        let p = entries.len();
        if p == 0 || entries.iter().any(|row| row.len() != p) {
            return Err(Error::NotSymmetric);
        }
        for u in 0..p {
            for v in (u + 1)..p {
                if entries[u][v] != entries[v][u] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymMatrix { entries })
    }

    pub fn from_integers(entries: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        Self::new(
            entries
                .into_iter()
                .map(|row| row.into_iter().map(BigRational::from_integer).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, u: usize, v: usize) -> &BigRational {
        &self.entries[u][v]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    /// Monic characteristic polynomial `det(xI - M)`, coefficients in
    /// ascending degree order.
    pub fn char_poly(&self) -> Vec<BigRational> {
        let p = self.size();
        // polynomial-valued cofactor expansion; matrices here are tiny
        let rows: Vec<usize> = (0..p).collect();
        let cols: Vec<usize> = (0..p).collect();
        self.det_poly(&rows, &cols)
    }

    fn det_poly(&self, rows: &[usize], cols: &[usize]) -> Vec<BigRational> {
        let zero = BigRational::zero();
        if rows.is_empty() {
            return vec![BigRational::one()];
        }
        let r = rows[0];
        let rest: Vec<usize> = rows[1..].to_vec();
        let mut acc = vec![zero.clone(); rows.len() + 1];
        for (idx, &c) in cols.iter().enumerate() {
            // entry of xI - M at (r, c)
            let constant = -self.entries[r][c].clone();
            let linear = if r == c {
                BigRational::one()
            } else {
                zero.clone()
            };
            if constant.is_zero() && linear.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
            let minor = self.det_poly(&rest, &sub_cols);
            let sign_neg = idx % 2 == 1;
            for (d, m) in minor.iter().enumerate() {
                if m.is_zero() {
                    continue;
                }
                let mut c0 = &constant * m;
                let mut c1 = &linear * m;
                if sign_neg {
                    c0 = -c0;
                    c1 = -c1;
                }
                acc[d] += c0;
                acc[d + 1] += c1;
            }
        }
        acc
    }

    /// Exact eigenvalue sign counts `(positive, zero, negative)` via
    /// Descartes' rule on the real-rooted characteristic polynomial.
    pub fn eigen_sign_counts(&self) -> (usize, usize, usize) {
        let poly = self.char_poly();
        let p = self.size();
        let zero_mult = poly.iter().take_while(|c| c.is_zero()).count();
        let pos = sign_variations(poly.iter());
        let neg = sign_variations(poly.iter().enumerate().map(|(d, c)| {
            if d % 2 == 1 {
                std::borrow::Cow::Owned(-c.clone())
            } else {
                std::borrow::Cow::Borrowed(c)
            }
        }));
        debug_assert_eq!(
            pos + neg + zero_mult,
            p,
            "characteristic polynomial is real-rooted"
        );
        (pos, p - pos - neg, neg)
    }
}

fn sign_variations<'a, I, C>(coeffs: I) -> usize
where
    I: Iterator<Item = C>,
    C: std::borrow::Borrow<BigRational> + 'a,
{
    let mut last = 0i8;
    let mut variations = 0;
    for c in coeffs {
        let s = match c.borrow() {
            x if x.is_positive() => 1i8,
            x if x.is_negative() => -1i8,
            _ => 0,
        };
        if s != 0 {
            if last != 0 && s != last {
                variations += 1;
            }
            last = s;
        }
    }
    variations
}

/// True iff the sorted eigenvalues satisfy `λ_1 ≥ 0 ≥ λ_2 ≥ ⋯`: at most one
/// positive eigenvalue and not negative definite.
pub fn weakly_lorentzian(m: &SymMatrix) -> bool {
    let (pos, _, neg) = m.eigen_sign_counts();
    pos <= 1 && neg < m.size()
}

/// Evidence that a class is not realizable over `Q`: a span configuration
/// and multiplier whose intersection matrix fails the weakly-Lorentzian test.
#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionWitness {
    pub span: SpanMapSpec,
    pub alpha: Vec<Partition>,
    pub matrix: SymMatrix,
    pub reason: String,
}

/// `L_{uv} = ∫ f*ν · A · H_u · H_v` with `A = ⊗ σ_{α_i}`; the multiplier
/// degree must equal `dim(f*ν) - 2` so every entry is a top-degree integral.
pub fn hodge_matrix(
    nu: &CohomologyClass,
    span: &SpanMapSpec,
    alpha: &[Partition],
) -> Result<SymMatrix, Error> {
    let pulled = pullback_class(nu, span)?;
    hodge_matrix_of_pullback(&pulled, span, alpha)
}

fn hodge_matrix_of_pullback(
    pulled: &ProductClass,
    span: &SpanMapSpec,
    alpha: &[Partition],
) -> Result<SymMatrix, Error> {
    let factors = span.factors.clone();
    if alpha.len() != factors.len() {
        return Err(Error::SpecMismatch(format!(
            "multiplier has {} slots, span has {} factors",
            alpha.len(),
            factors.len()
        )));
    }
    if pulled.is_zero() {
        let p = factors.len();
        return SymMatrix::new(vec![vec![BigRational::zero(); p]; p]);
    }
    let alpha_deg: u64 = alpha.iter().map(Partition::weight).sum();
    let pulled_dim = factors.dim() - pulled.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if pulled_dim < 2 || alpha_deg != pulled_dim - 2 {
        return Err(Error::DegreeMismatch(format!(
            "multiplier degree {alpha_deg}, entries need degree {}",
            pulled_dim.saturating_sub(2)
        )));
    }
    let a_class = ProductClass::basis(factors.clone(), alpha.to_vec())?;
    let base = pulled.multiply(&a_class)?;
    let p = factors.len();
    let mut entries = vec![vec![BigRational::zero(); p]; p];
    for u in 0..p {
        for v in u..p {
            let mut exps = vec![0u64; p];
            exps[u] += 1;
            exps[v] += 1;
            let val = base
                .multiply(&hyperplane_monomial(&factors, &exps))?
                .integrate();
            let q = BigRational::from_integer(val);
            entries[u][v] = q.clone();
            entries[v][u] = q;
        }
    }
    SymMatrix::new(entries)
}

/// Bounds for [`search_obstruction`].
#[derive(Clone, Debug)]
pub struct SearchBudget {
    /// Largest number of span factors tried.
    pub max_factors: usize,
    /// Largest number of ambient extension steps (`G(k,n) ⊂ G(k+t, n+t)`).
    pub max_embed: u32,
    /// Cap on multiplier tuples per span configuration.
    pub alpha_cap: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_factors: 3,
            max_embed: 2,
            alpha_cap: 10_000,
        }
    }
}

/// Compositions of `total` into exactly `parts` positive summands, in
/// lexicographically increasing order.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            if rest >= 1 {
                cur.push(rest);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for v in 1..=rest.saturating_sub(slots as u32 - 1) {
            cur.push(v);
            rec(rest - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, &mut cur, &mut out);
    out
}

/// Searches span configurations and multipliers, in a fixed deterministic
/// order, for an intersection matrix that fails the weakly-Lorentzian test.
/// A returned witness proves the class is not realizable over `Q`.
///
/// The enumeration walks ambient extensions `t = 0..=max_embed` (viewing the
/// class in `G(k+t, n+t)`), then factor counts `p = 2..=max_factors`, then
/// compositions of `k+t` lexicographically with the balanced factor sizes,
/// then multiplier tuples. Non-effective, inhomogeneous or at most
/// 1-dimensional classes have no configurations and yield `None`.
pub fn search_obstruction(
    nu: &CohomologyClass,
    budget: &SearchBudget,
) -> Result<Option<ObstructionWitness>, Error> {
    let Some(w) = nu.homogeneous_degree() else {
        return Ok(None);
    };
    if !nu.is_effective() || nu.is_zero() {
        return Ok(None);
    }
    let g = nu.space();
    let class_dim = g.dim() - w;
    if class_dim < 2 {
        return Ok(None);
    }
    // balanced factors have boxes of the ambient width, so the budget rule
    // n_i ≤ k_i + codim(ν) requires the box no wider than the codimension
    if g.width() as u64 > w {
        return Ok(None);
    }
    for t in 0..=budget.max_embed {
        let viewed = subvariety_reindex(nu, 0, t)?;
        let big = viewed.space();
        for p in 2..=budget.max_factors {
            if (p as u64) > big.k() as u64 {
                break;
            }
            for ranks in compositions(big.k(), p) {
                let span = SpanMapSpec::balanced(big, &ranks)?;
                let pulled = pullback_class(&viewed, &span)?;
                if pulled.is_zero() {
                    continue;
                }
                let mut seen = 0usize;
                for alpha in span.factors().basis_tuples(class_dim - 2) {
                    seen += 1;
                    if seen > budget.alpha_cap {
                        break;
                    }
                    let matrix = hodge_matrix_of_pullback(&pulled, &span, &alpha)?;
                    if !weakly_lorentzian(&matrix) {
                        return Ok(Some(ObstructionWitness {
                            span,
                            alpha,
                            matrix,
                            reason: "not weakly Lorentzian".into(),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}
