//! Inclusion and equality machinery between realizability sets across
//! different `(k,n)`: coefficient reindexing maps and reduction to the
//! canonical instance of a given degree.

use num_bigint::BigInt;
use num_traits::One;

use crate::classification::Ring;
use crate::error::Error;
use crate::partitions::{complement, prepend, shift, GrassmannianSpec, Partition};
use crate::schubert::{BasisConvention, CohomologyClass};

/// Carries a homogeneous class from its space into a larger one with the
/// coefficient vector unchanged: on the `σ_λ` basis for the codimension
/// convention, on the `σ^λ` basis for the dimension convention.
/// Realizability of the output follows from realizability of the input.
pub fn promote(
    c: &CohomologyClass,
    target: GrassmannianSpec,
    conv: BasisConvention,
) -> Result<CohomologyClass, Error> {
    let source = c.space();
    let dk = target.k() as i64 - source.k() as i64;
    let dn = target.n() as i64 - source.n() as i64;
    if dk < 0 || dn < dk {
        return Err(Error::Unreachable {
            from: source,
            to: target,
        });
    }
    if !c.is_zero() && c.homogeneous_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    transport(c, target, conv)
}

/// Coefficient-identical reindexing between spaces whose bases correspond in
/// the given convention; unlike [`promote`] the direction is not checked, so
/// this also carries classes down the equalities of the stable range.
pub fn transport(
    c: &CohomologyClass,
    target: GrassmannianSpec,
    conv: BasisConvention,
) -> Result<CohomologyClass, Error> {
    let mut out = CohomologyClass::zero(target);
    for (lambda, coeff) in c.terms() {
        let key = match conv {
            BasisConvention::Codim => lambda.clone(),
            BasisConvention::Dim => complement(&complement(lambda, c.space())?, target)?,
        };
        if !crate::partitions::validate_partition(&key, target) {
            return Err(Error::InvalidPartition(key, target));
        }
        out.add_term(key, coeff.clone());
    }
    Ok(out)
}

/// The class of the same subvariety viewed in `G(k+t, n+s+t)`:
/// `λ ↦ ((n+s-k)^t, λ+s^k)`.
pub fn subvariety_reindex(c: &CohomologyClass, s: u32, t: u32) -> Result<CohomologyClass, Error> {
    let g = c.space();
    let target = GrassmannianSpec::new(g.k() + t, g.n() + s + t)?;
    let mut out = CohomologyClass::zero(target);
    for (lambda, coeff) in c.terms() {
        let widened = shift(lambda, s, g.k())?;
        let key = prepend(&widened, g.width() + s, t)?;
        out.add_term(key, coeff.clone());
    }
    Ok(out)
}

/// The smallest instance with the same realizability set for degree-`r`
/// classes: `(r, 2r)` over `Q` when `k ≥ r` and `n-k ≥ r`, else `(k, k+r)`
/// when `n-k ≥ r`; `(r+1, 2r+2)` over `Z` when `k ≥ r+1` and `n-k ≥ r+1`.
/// Returns the input when no reduction applies; idempotent.
pub fn canonical_instance(
    r: u64,
    g: GrassmannianSpec,
    ring: Ring,
    _conv: BasisConvention,
) -> GrassmannianSpec {
    let (k, width) = (g.k() as u64, g.width() as u64);
    let reduced = match ring {
        Ring::Q => {
            if k >= r && width >= r {
                GrassmannianSpec::new(r as u32, 2 * r as u32)
            } else if width >= r {
                GrassmannianSpec::new(g.k(), g.k() + r as u32)
            } else {
                return g;
            }
        }
        Ring::Z => {
            if k > r && width > r {
                GrassmannianSpec::new(r as u32 + 1, 2 * r as u32 + 2)
            } else {
                return g;
            }
        }
    };
    reduced.unwrap_or(g)
}

/// The classes realizable over `Z` in `G(r+1, 2r+2)` but in no smaller
/// stable instance: `{m σ_r, m σ_{1^r} | m > 1}` (or the `σ^λ` analogue for
/// the dimension convention).
#[derive(Clone, Debug)]
pub struct ExceptionalSet {
    r: u32,
    conv: BasisConvention,
}

impl ExceptionalSet {
    pub fn new(r: u32, conv: BasisConvention) -> Result<Self, Error> {
        if r == 0 {
            return Err(Error::DegreeMismatch("need r >= 1".into()));
        }
        Ok(ExceptionalSet { r, conv })
    }

    /// The ambient space `G(r+1, 2r+2)`.
    pub fn space(&self) -> GrassmannianSpec {
        GrassmannianSpec::new(self.r + 1, 2 * self.r + 2).expect("r >= 1")
    }

    /// The two base partitions, as stored (codimension) keys.
    pub fn base_keys(&self) -> (Partition, Partition) {
        let row = Partition::row(self.r);
        let col = Partition::column(self.r);
        match self.conv {
            BasisConvention::Codim => (row, col),
            BasisConvention::Dim => (
                complement(&row, self.space()).expect("fits"),
                complement(&col, self.space()).expect("fits"),
            ),
        }
    }

    /// True iff `c` is `m·σ` with `m > 1` over one of the base keys.
    pub fn contains(&self, c: &CohomologyClass) -> bool {
        if c.space() != self.space() || c.num_terms() != 1 {
            return false;
        }
        let (key, coeff) = c.terms().next().expect("one term");
        let (row, col) = self.base_keys();
        (key == &row || key == &col) && coeff > &BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_lambda;

    fn g(k: u32, n: u32) -> GrassmannianSpec {
        GrassmannianSpec::new(k, n).unwrap()
    }

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn cls(gg: GrassmannianSpec, terms: &[(&[u32], i64)]) -> CohomologyClass {
        CohomologyClass::from_terms(gg, terms.iter().map(|(p, v)| (pt(p), BigInt::from(*v))))
            .unwrap()
    }

    #[test]
    fn promote_codim_keeps_keys() {
        let c = cls(g(2, 4), &[(&[2], 3), (&[1, 1], 4)]);
        let p = promote(&c, g(3, 5), BasisConvention::Codim).unwrap();
        assert_eq!(p.coefficient(&pt(&[2])), 3.into());
        assert_eq!(p.coefficient(&pt(&[1, 1])), 4.into());
    }

    #[test]
    fn promote_dim_keeps_dual_coefficients() {
        // a σ^2 + b σ^{1,1} in G(2,4) is a σ_2 + b σ_{1,1}; in G(2,5) the same
        // dimension-convention vector sits on σ_{3,1} and σ_{2,2}
        let c = cls(g(2, 4), &[(&[2], 3), (&[1, 1], 4)]);
        let p = promote(&c, g(2, 5), BasisConvention::Dim).unwrap();
        assert_eq!(p.coefficient(&pt(&[3, 1])), 3.into());
        assert_eq!(p.coefficient(&pt(&[2, 2])), 4.into());
    }

    #[test]
    fn promote_identity_and_errors() {
        let c = cls(g(2, 4), &[(&[2], 1)]);
        assert_eq!(promote(&c, g(2, 4), BasisConvention::Codim).unwrap(), c);
        assert!(matches!(
            promote(&c, g(2, 3), BasisConvention::Codim),
            Err(Error::Unreachable { .. })
        ));
        let mixed = cls(g(2, 4), &[(&[2], 1), (&[1], 1)]);
        assert!(matches!(
            promote(&mixed, g(2, 5), BasisConvention::Codim),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn promote_is_transitive() {
        let c = cls(g(2, 4), &[(&[2], 2), (&[1, 1], 7)]);
        for conv in [BasisConvention::Codim, BasisConvention::Dim] {
            let via = promote(&promote(&c, g(3, 5), conv).unwrap(), g(4, 7), conv).unwrap();
            let direct = promote(&c, g(4, 7), conv).unwrap();
            assert_eq!(via, direct);
        }
    }

    #[test]
    fn reindex_examples() {
        let c = cls(g(2, 4), &[(&[2, 1], 1)]);
        let s1 = subvariety_reindex(&c, 1, 0).unwrap();
        assert_eq!(s1.space(), g(2, 5));
        assert_eq!(s1.coefficient(&pt(&[3, 2])), 1.into());
        let t1 = subvariety_reindex(&c, 0, 1).unwrap();
        assert_eq!(t1.space(), g(3, 5));
        assert_eq!(t1.coefficient(&pt(&[2, 2, 1])), 1.into());
        assert_eq!(subvariety_reindex(&c, 0, 0).unwrap(), c);
    }

    #[test]
    fn reindex_preserves_pairing_numbers() {
        // coefficient extraction through the pairing commutes with reindexing
        let src = g(2, 4);
        let c = cls(src, &[(&[2], 2), (&[1, 1], 5)]);
        let re = subvariety_reindex(&c, 1, 1).unwrap();
        assert_eq!(re.space(), g(3, 6));
        for mu in enumerate_lambda(2, src) {
            let dual_src = CohomologyClass::schubert(src, complement(&mu, src).unwrap()).unwrap();
            let mu_re =
                subvariety_reindex(&CohomologyClass::schubert(src, mu.clone()).unwrap(), 1, 1)
                    .unwrap();
            let (mu_re_key, _) = mu_re.terms().next().unwrap();
            let dual_tgt =
                CohomologyClass::schubert(re.space(), complement(mu_re_key, re.space()).unwrap())
                    .unwrap();
            assert_eq!(c.pair(&dual_src).unwrap(), re.pair(&dual_tgt).unwrap());
        }
    }

    #[test]
    fn canonical_instance_examples() {
        let conv = BasisConvention::Codim;
        assert_eq!(canonical_instance(3, g(5, 11), Ring::Q, conv), g(3, 6));
        assert_eq!(canonical_instance(3, g(5, 11), Ring::Z, conv), g(4, 8));
        assert_eq!(canonical_instance(2, g(2, 4), Ring::Q, conv), g(2, 4));
        assert_eq!(canonical_instance(5, g(2, 9), Ring::Q, conv), g(2, 7));
        assert_eq!(canonical_instance(5, g(2, 9), Ring::Z, conv), g(2, 9));
    }

    #[test]
    fn canonical_instance_is_idempotent() {
        for r in 1..=6u64 {
            for k in 1..=6u32 {
                for n in (k + 1)..=12 {
                    for ring in [Ring::Z, Ring::Q] {
                        let once = canonical_instance(r, g(k, n), ring, BasisConvention::Codim);
                        let twice = canonical_instance(r, once, ring, BasisConvention::Codim);
                        assert_eq!(once, twice);
                    }
                }
            }
        }
    }

    #[test]
    fn exceptional_set_membership() {
        let ex = ExceptionalSet::new(2, BasisConvention::Codim).unwrap();
        assert_eq!(ex.space(), g(3, 6));
        let yes = cls(g(3, 6), &[(&[1, 1], 3)]);
        assert!(ex.contains(&yes));
        let row = cls(g(3, 6), &[(&[2], 9)]);
        assert!(ex.contains(&row));
        let single = cls(g(3, 6), &[(&[1, 1], 1)]);
        assert!(!ex.contains(&single));
        let other = cls(g(3, 6), &[(&[2, 1], 4)]);
        assert!(!ex.contains(&other));

        let ex3 = ExceptionalSet::new(3, BasisConvention::Codim).unwrap();
        let (row, col) = ex3.base_keys();
        assert_eq!(row, pt(&[3]));
        assert_eq!(col, pt(&[1, 1, 1]));
    }
}
