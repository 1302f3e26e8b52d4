//! The realizability oracle: the multi-rigidity test for Schubert classes,
//! the rule for their multiples, and the classification theorems for low
//! dimension and codimension, dispatched behind duality and stabilization
//! reductions. `Unknown` is a first-class verdict: nothing is decided
//! outside the classified families except by an explicit obstruction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::Error;
use crate::obstructions::{search_obstruction, ObstructionWitness, SearchBudget};
use crate::partitions::{complement, validate_partition, GrassmannianSpec, Partition};
use crate::schubert::{BasisConvention, CohomologyClass};
use crate::stability::{canonical_instance, transport};

/// Coefficient ring of the realizability query: over `Z` the class itself
/// must be the class of an irreducible subvariety, over `Q` some positive
/// rational multiple of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    Z,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    RealizableZ,
    RealizableQ,
    NotRealizable,
    Unknown,
}

/// A realizability decision together with the result it rests on.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub citation: String,
    pub witness: Option<ObstructionWitness>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(status: Status, citation: impl Into<String>, notes: Vec<String>) -> Self {
        Verdict {
            status,
            citation: citation.into(),
            witness: None,
            notes,
        }
    }

    fn realizable(ring: Ring, citation: impl Into<String>, notes: Vec<String>) -> Self {
        let status = match ring {
            Ring::Z => Status::RealizableZ,
            Ring::Q => Status::RealizableQ,
        };
        Verdict::new(status, citation, notes)
    }
}

/// Hong's multi-rigidity criterion on the grouped form
/// `(μ_1^{i_1}, …, μ_t^{i_t})` of `λ` padded with zeros to `k` parts:
/// internal multiplicities at least 2, consecutive values at least 2 apart,
/// and end multiplicities at least 2 unless pinned to the box edge.
pub fn is_multi_rigid(lambda: &Partition, g: GrassmannianSpec) -> Result<bool, Error> {
    if !validate_partition(lambda, g) {
        return Err(Error::InvalidPartition(lambda.clone(), g));
    }
    // the fundamental and point classes are rigid in every multiple
    if lambda.is_empty() || *lambda == g.top() {
        return Ok(true);
    }
    let groups = lambda.grouped_padded(g.k() as usize);
    let t = groups.len();
    if t > 2 && groups[1..t - 1].iter().any(|&(_, i)| i < 2) {
        return Ok(false);
    }
    if groups.windows(2).any(|w| w[0].0 < w[1].0 + 2) {
        return Ok(false);
    }
    let (mu_first, i_first) = groups[0];
    let (mu_last, i_last) = groups[t - 1];
    if mu_first != g.width() && i_first < 2 {
        return Ok(false);
    }
    if mu_last != 0 && i_last < 2 {
        return Ok(false);
    }
    Ok(true)
}

/// Realizability of `m·σ_λ`: over `Z` exactly when `m = 1` or `σ_λ` is not
/// multi-rigid; over `Q` always, since `σ_λ` itself is a Schubert variety.
pub fn schubert_multiple_verdict(
    m: &BigInt,
    lambda: &Partition,
    g: GrassmannianSpec,
    ring: Ring,
) -> Result<Verdict, Error> {
    if !m.is_positive() {
        return Err(Error::DegreeMismatch(
            "multiplicity must be positive".into(),
        ));
    }
    if !validate_partition(lambda, g) {
        return Err(Error::InvalidPartition(lambda.clone(), g));
    }
    let verdict = match ring {
        Ring::Q => Verdict::realizable(Ring::Q, "Schubert variety (rescaled)", Vec::new()),
        Ring::Z => {
            if m == &BigInt::from(1) {
                Verdict::realizable(Ring::Z, "Schubert variety", Vec::new())
            } else if !is_multi_rigid(lambda, g)? {
                Verdict::realizable(Ring::Z, "Coskun-Robles", Vec::new())
            } else {
                Verdict::new(Status::NotRealizable, "Hong (multi-rigid)", Vec::new())
            }
        }
    };
    Ok(verdict)
}

/// True iff the sequence is nonnegative, not identically zero, has
/// contiguous support, and satisfies `a_i² ≥ a_{i-1} a_{i+1}` inside.
pub fn log_concave_no_internal_zeros(seq: &[BigRational]) -> bool {
    if seq.is_empty() || seq.iter().any(|a| a.is_negative()) {
        return false;
    }
    let support: Vec<usize> = seq
        .iter()
        .enumerate()
        .filter(|(_, a)| a.is_positive())
        .map(|(i, _)| i)
        .collect();
    match (support.first(), support.last()) {
        (Some(&lo), Some(&hi)) if hi - lo + 1 != support.len() => return false,
        (None, _) => return false,
        _ => {}
    }
    seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// The coefficients of a homogeneous `G(2,n)` class read as the sequence
/// `(a_i)` on `σ_{(w-u, u)}`, `u` ascending over its full admissible range
/// (absent keys contribute zeros).
pub fn g2_coefficient_sequence(c: &CohomologyClass) -> Result<Vec<BigInt>, Error> {
    let g = c.space();
    if g.k() != 2 {
        return Err(Error::SpecMismatch(format!("{g} is not a G(2,n)", g = g)));
    }
    let w = c.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let lo = w.saturating_sub(g.width() as u64);
    let hi = w / 2;
    (lo..=hi)
        .map(|u| {
            let key = Partition::new([(w - u) as u32, u as u32])?;
            Ok(c.coefficient(&key))
        })
        .collect()
}

/// Decides realizability of a nonzero homogeneous class, citing the result
/// used. Classes outside every classified family come back `Unknown`.
pub fn realizability(c: &CohomologyClass, ring: Ring) -> Result<Verdict, Error> {
    realize(c, ring, None)
}

/// Like [`realizability`], but an `Unknown` first runs the bounded
/// Hodge-index obstruction search; a witness upgrades it to `NotRealizable`.
pub fn realizability_searched(
    c: &CohomologyClass,
    ring: Ring,
    budget: &SearchBudget,
) -> Result<Verdict, Error> {
    realize(c, ring, Some(budget))
}

fn realize(
    c: &CohomologyClass,
    ring: Ring,
    budget: Option<&SearchBudget>,
) -> Result<Verdict, Error> {
    if c.is_zero() {
        return Err(Error::ZeroClass);
    }
    let weight = c.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if !c.is_effective() {
        return Ok(Verdict::new(
            Status::NotRealizable,
            "effective cone (a_lambda >= 0)",
            Vec::new(),
        ));
    }
    if c.num_terms() == 1 {
        let (lambda, m) = c.terms().next().expect("one term");
        return schubert_multiple_verdict(m, lambda, c.space(), ring);
    }

    let mut notes = Vec::new();
    let mut cur = c.clone();
    if cur.space().k() > cur.space().width() {
        cur = cur.transpose_class()?;
        notes.push(format!("transposed to {} by duality", cur.space()));
    }
    if ring == Ring::Q {
        let g = cur.space();
        let dim_deg = g.dim() - weight;
        let (r, conv) = if weight <= dim_deg {
            (weight, BasisConvention::Codim)
        } else {
            (dim_deg, BasisConvention::Dim)
        };
        let target = canonical_instance(r, g, Ring::Q, conv);
        if target != g {
            cur = transport(&cur, target, conv)?;
            notes.push(format!("reduced to {target} by Q-stabilization"));
        }
    }
    dispatch(&cur, ring, notes, budget)
}

fn dispatch(
    cur: &CohomologyClass,
    ring: Ring,
    notes: Vec<String>,
    budget: Option<&SearchBudget>,
) -> Result<Verdict, Error> {
    let g = cur.space();
    let (k, n) = (g.k(), g.n());
    let w = cur
        .homogeneous_degree()
        .expect("homogeneous by construction");
    let dim_deg = g.dim() - w;

    if w <= 1 || dim_deg <= 1 {
        // effective curve and divisor classes are always realizable; the
        // degree-0 ends are single classes and never reach this point
        return Ok(Verdict::realizable(ring, "curves and divisors", notes));
    }
    if w == 2 || dim_deg == 2 {
        let theorem = if w == 2 { "Thm 5.2" } else { "Thm 5.1" };
        let clause = if k > 2 {
            "(1)"
        } else if n > 4 {
            "(2)"
        } else {
            "(3)"
        };
        return Ok(Verdict::realizable(
            ring,
            format!("{theorem}{clause}"),
            notes,
        ));
    }
    if w == 3 || dim_deg == 3 {
        return degree_three(cur, ring, w == 3, notes);
    }
    if k == 2 && ring == Ring::Q {
        let seq: Vec<BigRational> = g2_coefficient_sequence(cur)?
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        return Ok(if log_concave_no_internal_zeros(&seq) {
            Verdict::realizable(Ring::Q, "Thm 9.1", notes)
        } else {
            Verdict::new(Status::NotRealizable, "Thm 9.1 (log-concavity)", notes)
        });
    }
    if (k, n) == (3, 6) && w == 5 {
        // dimension-4 classes with at least two nonzero coefficients
        return Ok(Verdict::realizable(ring, "Thm 8.3(1)", notes));
    }
    if (k, n) == (3, 6) && w == 4 {
        // dimension-5 classes with at least two nonzero coefficients
        return Ok(Verdict::realizable(ring, "Thm 9.2(1)", notes));
    }
    if k == 2 && dim_deg == 4 {
        return g2_dimension_four(cur, ring, notes);
    }

    if let Some(budget) = budget {
        if let Some(witness) = search_obstruction(cur, budget)? {
            let mut v = Verdict::new(Status::NotRealizable, "Hodge-index obstruction", notes);
            v.witness = Some(witness);
            return Ok(v);
        }
    }
    let mut notes = notes;
    notes.push("no classification theorem applies".into());
    Ok(Verdict::new(Status::Unknown, "", notes))
}

/// Keys of the degree-3 family in either convention.
fn abc_keys(
    g: GrassmannianSpec,
    codim: bool,
    shapes: [Partition; 3],
) -> Result<[Partition; 3], Error> {
    if codim {
        Ok(shapes)
    } else {
        let [a, b, c] = shapes;
        Ok([complement(&a, g)?, complement(&b, g)?, complement(&c, g)?])
    }
}

fn degree_three(
    cur: &CohomologyClass,
    ring: Ring,
    codim: bool,
    notes: Vec<String>,
) -> Result<Verdict, Error> {
    let g = cur.space();
    let (k, n) = (g.k(), g.n());
    if k == 2 {
        // two-coefficient family; multiples of a single class never reach here
        let cite = if n == 5 {
            "Thm 5.4(2)"
        } else if codim {
            "Thm 7.2"
        } else {
            "Thm 5.4(1)"
        };
        return Ok(Verdict::realizable(ring, cite, notes));
    }
    let keys = abc_keys(
        g,
        codim,
        [
            Partition::row(3),
            Partition::new([2, 1])?,
            Partition::column(3),
        ],
    )?;
    let a = cur.coefficient(&keys[0]);
    let b = cur.coefficient(&keys[1]);
    let c = cur.coefficient(&keys[2]);
    let theorem = if codim { "Thm 7.1" } else { "Thm 6.1" };
    if b.is_positive() && &b * &b >= &a * &c {
        let clause = if k > 3 {
            "(1)"
        } else if n > 6 {
            "(2)(i)"
        } else {
            "(3)(i)"
        };
        Ok(Verdict::realizable(
            ring,
            format!("{theorem}{clause}"),
            notes,
        ))
    } else {
        // with at least two nonzero coefficients, b = 0 forces a,c > 0
        Ok(Verdict::new(
            Status::NotRealizable,
            format!("{theorem} (b^2 >= ac)"),
            notes,
        ))
    }
}

fn g2_dimension_four(
    cur: &CohomologyClass,
    ring: Ring,
    notes: Vec<String>,
) -> Result<Verdict, Error> {
    let g = cur.space();
    let n = g.n();
    let keys = abc_keys(
        g,
        false,
        [
            Partition::row(4),
            Partition::new([3, 1])?,
            Partition::new([2, 2])?,
        ],
    )?;
    let a = cur.coefficient(&keys[0]);
    let b = cur.coefficient(&keys[1]);
    let c = cur.coefficient(&keys[2]);
    if b.is_positive() && &b * &b >= &a * &c {
        let clause = if n > 6 { "(1)" } else { "(2)" };
        Ok(Verdict::realizable(ring, format!("Thm 8.2{clause}"), notes))
    } else {
        Ok(Verdict::new(
            Status::NotRealizable,
            "Thm 8.2 (b^2 >= ac)",
            notes,
        ))
    }
}
